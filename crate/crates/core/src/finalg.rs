//! Finite-dimensional carriers: algebras given by structure constants,
//! operators as matrices, and a finite group of automorphisms acting through
//! its group bialgebra `k[G]`.
//!
//! The main construction twists `A` by an endomorphism `α` commuting with
//! every element of `G` and checks the resulting module Hom-algebra over the
//! complete finite bases. Conjugation `i_a(b) = aba⁻¹` by an element fixed by
//! `G` is the standard source of such an `α`.

mod scenario;

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_traits::Zero;
use thiserror::Error;

use crate::homcore::{
    check_associativity, check_compat, check_comul_morphism, check_endomorphism, check_hom_associativity,
    check_hom_coassociativity, check_module_axiom, check_module_hom_algebra, check_module_hom_algebra_at_power,
    check_mu_module_morphism, check_multiplicativity, deform_module_structure, require, yau_twist_algebra, AlgCarrier,
    BialgCarrier, CheckError, DeformedModule, ModCarrier, YauTwist,
};
use crate::linear::{BasisElem, Identity, LinComb, LinearMap, Tensor2};
use crate::report::{AxiomId, CheckReport};
use crate::scalars::{QLaurent, Rational};

pub use scenario::{builtin_scenario, AlphaSpec, Scenario, M2_EXAMPLE};

#[derive(Debug, Error)]
pub enum FinAlgError {
    #[error("invalid label `{0}`: labels are identifiers other than `q` and `identity`")]
    InvalidLabel(String),
    #[error("duplicate name `{0}`")]
    Duplicate(String),
    #[error("unknown name `{0}`")]
    Unknown(String),
    #[error("index {index} out of range for dimension {dimension}")]
    IndexOutOfRange { index: usize, dimension: usize },
    #[error("expected {expected} entries, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("the algebra has no unit")]
    NonUnital,
    #[error("{0} is not a two-sided unit")]
    NotUnit(String),
    #[error("{0} is not invertible")]
    NotInvertible(String),
    #[error("inversion needs rational entries, but {0} depends on q")]
    QDependent(String),
    #[error("operator {name} is not an algebra automorphism ({} failing pair(s))", .report.counterexamples.len())]
    NotAutomorphism { name: String, report: Box<CheckReport> },
    #[error("the group is not closed: {left}∘{right} is not listed")]
    NotClosed { left: String, right: String },
    #[error("the group does not contain the identity operator")]
    MissingIdentity,
    #[error("{0} has no inverse in the group")]
    MissingInverse(String),
    #[error("{name} does not fix {element}: {name}({element}) = {image}")]
    NotFixed {
        name: String,
        element: String,
        image: String,
    },
    #[error("line {line}: {message}")]
    Scenario { line: usize, message: String },
    #[error(transparent)]
    Check(#[from] CheckError),
}

/// Basis vector `e_index` with a display label. Equality and order use the
/// index only.
#[derive(Debug, Clone)]
pub struct FinBasis {
    pub index: usize,
    pub label: Arc<str>,
}

impl PartialEq for FinBasis {
    fn eq(&self, other: &Self) -> bool {
        self.index == other.index
    }
}

impl Eq for FinBasis {}

impl Hash for FinBasis {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.index.hash(state);
    }
}

impl PartialOrd for FinBasis {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FinBasis {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.index.cmp(&other.index)
    }
}

impl fmt::Display for FinBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label)
    }
}

impl BasisElem for FinBasis {}

pub type FinElem = LinComb<FinBasis>;

fn valid_label(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_alphabetic())
        && chars.all(|c| c.is_alphanumeric() || c == '_')
        && s != "q"
        && s != "identity"
}

fn make_basis(labels: &[String]) -> Result<Arc<[FinBasis]>, FinAlgError> {
    let mut seen = std::collections::HashSet::new();
    for l in labels {
        if !valid_label(l) {
            return Err(FinAlgError::InvalidLabel(l.clone()));
        }
        if !seen.insert(l.as_str()) {
            return Err(FinAlgError::Duplicate(l.clone()));
        }
    }
    Ok(labels
        .iter()
        .enumerate()
        .map(|(index, l)| FinBasis {
            index,
            label: Arc::from(l.as_str()),
        })
        .collect())
}

fn coords(basis: &[FinBasis], v: &FinElem) -> Vec<QLaurent> {
    let mut out = vec![QLaurent::zero(); basis.len()];
    for (b, c) in v.iter() {
        out[b.index] = c.clone();
    }
    out
}

fn from_coords(basis: &[FinBasis], cs: &[QLaurent]) -> FinElem {
    FinElem::from_terms(basis.iter().cloned().zip(cs.iter().cloned()))
}

/// Associative algebra `e_i·e_j = Σ_k c[i][j][k] e_k`.
#[derive(Debug, Clone)]
pub struct StructAlgebra {
    name: String,
    basis: Arc<[FinBasis]>,
    table: Vec<FinElem>,
    unit: Option<FinElem>,
}

impl StructAlgebra {
    /// Builds the algebra from sparse structure constants `(i, j, k, c)` and
    /// an optional unit given in coordinates, verifying associativity and
    /// the unit on all basis triples.
    pub fn new(
        name: &str,
        labels: &[String],
        constants: impl IntoIterator<Item = (usize, usize, usize, QLaurent)>,
        unit: Option<Vec<QLaurent>>,
    ) -> Result<Self, FinAlgError> {
        let basis = make_basis(labels)?;
        let n = basis.len();
        let mut table = vec![FinElem::zero(); n * n];
        for (i, j, k, c) in constants {
            for index in [i, j, k] {
                if index >= n {
                    return Err(FinAlgError::IndexOutOfRange { index, dimension: n });
                }
            }
            table[i * n + j].add_term(basis[k].clone(), &c);
        }
        let unit = match unit {
            None => None,
            Some(cs) if cs.len() != n => {
                return Err(FinAlgError::DimensionMismatch {
                    expected: n,
                    found: cs.len(),
                })
            }
            Some(cs) => Some(from_coords(&basis, &cs)),
        };
        let algebra = Self {
            name: name.to_string(),
            basis,
            table,
            unit,
        };
        require(
            AxiomId::Associativity,
            "structure constants must define an associative product",
            check_associativity(&algebra),
        )?;
        if let Some(u) = &algebra.unit {
            for b in algebra.basis.iter() {
                let e = FinElem::basis(b.clone());
                if algebra.mul(u, &e) != e || algebra.mul(&e, u) != e {
                    return Err(FinAlgError::NotUnit(u.to_string()));
                }
            }
        }
        Ok(algebra)
    }

    /// The full matrix algebra `M_n` in the basis of matrix units `e_ij`
    /// (indices from 1), for `n ≤ 9`.
    pub fn matrix_units(n: usize) -> Self {
        assert!((1..=9).contains(&n), "matrix_units supports 1 ≤ n ≤ 9");
        let idx = |i: usize, j: usize| i * n + j;
        let labels: Vec<String> = (0..n * n).map(|k| format!("e{}{}", k / n + 1, k % n + 1)).collect();
        let mut constants = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    constants.push((idx(i, j), idx(j, l), idx(i, l), QLaurent::one()));
                }
            }
        }
        let unit = (0..n * n)
            .map(|k| {
                if k / n == k % n {
                    QLaurent::one()
                } else {
                    QLaurent::zero()
                }
            })
            .collect();
        Self::new(&format!("M{n}"), &labels, constants, Some(unit)).expect("matrix units are associative")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &Arc<[FinBasis]> {
        &self.basis
    }

    pub fn basis_elem(&self, label: &str) -> Option<FinElem> {
        self.basis
            .iter()
            .find(|b| &*b.label == label)
            .map(|b| FinElem::basis(b.clone()))
    }

    pub fn unit(&self) -> Option<&FinElem> {
        self.unit.as_ref()
    }

    pub fn element(&self, cs: &[QLaurent]) -> Result<FinElem, FinAlgError> {
        if cs.len() != self.dimension() {
            return Err(FinAlgError::DimensionMismatch {
                expected: self.dimension(),
                found: cs.len(),
            });
        }
        Ok(from_coords(&self.basis, cs))
    }

    pub fn coords(&self, v: &FinElem) -> Vec<QLaurent> {
        coords(&self.basis, v)
    }

    /// Operator of left multiplication by `a`.
    pub fn left_mul(&self, a: &FinElem) -> LinOp {
        LinOp::from_columns(
            self.basis.clone(),
            self.basis.iter().map(|b| self.mul(a, &FinElem::basis(b.clone()))),
        )
    }

    /// Two-sided inverse of `a`, by an exact solve of `a·x = 1` over the
    /// rationals.
    pub fn inverse(&self, a: &FinElem) -> Result<FinElem, FinAlgError> {
        let unit = self.unit.as_ref().ok_or(FinAlgError::NonUnital)?;
        let matrix = self.left_mul(a).rational_entries(&a.to_string())?;
        let rhs = self
            .coords(unit)
            .iter()
            .map(|c| c.as_rational().ok_or_else(|| FinAlgError::QDependent(unit.to_string())))
            .collect::<Result<Vec<Rational>, _>>()?;
        let x = solve(matrix, rhs).ok_or_else(|| FinAlgError::NotInvertible(a.to_string()))?;
        let x = from_coords(
            &self.basis,
            &x.into_iter().map(QLaurent::from_rational).collect::<Vec<_>>(),
        );
        if &self.mul(&x, a) != unit {
            return Err(FinAlgError::NotInvertible(a.to_string()));
        }
        Ok(x)
    }
}

impl AlgCarrier for StructAlgebra {
    type B = FinBasis;

    fn describe(&self) -> String {
        self.name.clone()
    }
    fn test_basis(&self) -> Vec<FinBasis> {
        self.basis.to_vec()
    }
    fn mul_basis(&self, a: &FinBasis, b: &FinBasis) -> FinElem {
        self.table[a.index * self.basis.len() + b.index].clone()
    }
    fn alpha_basis(&self, a: &FinBasis) -> FinElem {
        FinElem::basis(a.clone())
    }
}

/// Solves `m·x = b` for square invertible `m`; `None` when `m` is singular.
fn solve(mut m: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        b.swap(col, pivot);
        let inv = m[col][col].recip();
        let pivot_row = m[col].clone();
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = &m[r][col] * &inv;
                for (c, p) in pivot_row.iter().enumerate().skip(col) {
                    m[r][c] -= &f * p;
                }
                let d = &f * &b[col];
                b[r] -= d;
            }
        }
    }
    Some((0..n).map(|i| &b[i] / &m[i][i]).collect())
}

/// Linear operator on a finite basis; `entries[i][j]` is the coefficient of
/// `e_i` in the image of `e_j`.
#[derive(Debug, Clone)]
pub struct LinOp {
    basis: Arc<[FinBasis]>,
    entries: Vec<Vec<QLaurent>>,
}

impl PartialEq for LinOp {
    fn eq(&self, other: &Self) -> bool {
        self.entries == other.entries
    }
}

impl Eq for LinOp {}

impl LinOp {
    pub fn identity(basis: Arc<[FinBasis]>) -> Self {
        let n = basis.len();
        let entries = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { QLaurent::one() } else { QLaurent::zero() })
                    .collect()
            })
            .collect();
        Self { basis, entries }
    }

    pub fn from_matrix(basis: Arc<[FinBasis]>, entries: Vec<Vec<QLaurent>>) -> Result<Self, FinAlgError> {
        let n = basis.len();
        if entries.len() != n {
            return Err(FinAlgError::DimensionMismatch {
                expected: n,
                found: entries.len(),
            });
        }
        if let Some(row) = entries.iter().find(|r| r.len() != n) {
            return Err(FinAlgError::DimensionMismatch {
                expected: n,
                found: row.len(),
            });
        }
        Ok(Self { basis, entries })
    }

    /// Operator whose `j`-th column is the `j`-th item.
    pub fn from_columns(basis: Arc<[FinBasis]>, columns: impl IntoIterator<Item = FinElem>) -> Self {
        let n = basis.len();
        let mut entries = vec![vec![QLaurent::zero(); n]; n];
        for (j, col) in columns.into_iter().enumerate() {
            for (b, c) in col.iter() {
                entries[b.index][j] = c.clone();
            }
        }
        Self { basis, entries }
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &QLaurent {
        &self.entries[i][j]
    }

    pub fn entries(&self) -> &[Vec<QLaurent>] {
        &self.entries
    }

    pub fn column(&self, j: usize) -> FinElem {
        FinElem::from_terms(self.basis.iter().map(|b| (b.clone(), self.entries[b.index][j].clone())))
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &LinOp) -> LinOp {
        let n = self.dimension();
        let entries = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        (0..n).fold(QLaurent::zero(), |acc, k| {
                            acc + &self.entries[i][k] * &inner.entries[k][j]
                        })
                    })
                    .collect()
            })
            .collect();
        LinOp {
            basis: self.basis.clone(),
            entries,
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.basis.clone())
    }

    /// Applies `f` to every entry (used for specializing q).
    pub fn map_entries(&self, f: impl Fn(&QLaurent) -> QLaurent) -> Self {
        Self {
            basis: self.basis.clone(),
            entries: self.entries.iter().map(|r| r.iter().map(&f).collect()).collect(),
        }
    }

    fn rational_entries(&self, what: &str) -> Result<Vec<Vec<Rational>>, FinAlgError> {
        self.entries
            .iter()
            .map(|r| {
                r.iter()
                    .map(|c| c.as_rational().ok_or_else(|| FinAlgError::QDependent(what.to_string())))
                    .collect()
            })
            .collect()
    }
}

impl LinearMap<FinBasis> for LinOp {
    fn apply_basis(&self, b: &FinBasis) -> FinElem {
        self.column(b.index)
    }
}

impl fmt::Display for LinOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let images: Vec<String> = self
            .basis
            .iter()
            .map(|b| format!("{b} ↦ {}", self.column(b.index)))
            .collect();
        f.write_str(&images.join(", "))
    }
}

/// `i_a(b) = a b a⁻¹`.
pub fn inner_automorphism(a_alg: &StructAlgebra, a: &FinElem) -> Result<LinOp, FinAlgError> {
    let inv = a_alg.inverse(a)?;
    Ok(LinOp::from_columns(
        a_alg.basis.clone(),
        a_alg
            .basis
            .iter()
            .map(|b| a_alg.mul(&a_alg.mul(a, &FinElem::basis(b.clone())), &inv)),
    ))
}

fn automorphism_check(a: &StructAlgebra, name: &str, op: &LinOp) -> Result<CheckReport, FinAlgError> {
    if op.dimension() != a.dimension() {
        return Err(FinAlgError::DimensionMismatch {
            expected: a.dimension(),
            found: op.dimension(),
        });
    }
    let mut report = check_endomorphism(a, op);
    report.axiom = AxiomId::AlgebraAutomorphism;
    report.subject = format!("{name} on {}", a.describe());
    if !report.passed() {
        return Err(FinAlgError::NotAutomorphism {
            name: name.to_string(),
            report: Box::new(report),
        });
    }
    Ok(report)
}

/// A finite group of automorphisms of `A`, listed extensionally, as the
/// group bialgebra `k[G]` with `Δ(φ) = φ⊗φ` and structure map `Id`.
#[derive(Debug, Clone)]
pub struct GroupBialgebra {
    elements: Arc<[FinBasis]>,
    ops: Vec<LinOp>,
    table: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    identity: usize,
    automorphism_report: CheckReport,
    closure_report: CheckReport,
}

impl GroupBialgebra {
    /// Verifies that every operator is multiplicative on `A` and that the
    /// list contains the identity and is closed under composition and
    /// inverses. Invertibility of each operator follows from the last.
    pub fn new(a: &StructAlgebra, named: Vec<(String, LinOp)>) -> Result<Self, FinAlgError> {
        let names: Vec<String> = named.iter().map(|(n, _)| n.clone()).collect();
        let mut seen = std::collections::HashSet::new();
        for n in &names {
            if !seen.insert(n.as_str()) {
                return Err(FinAlgError::Duplicate(n.clone()));
            }
        }
        let elements: Arc<[FinBasis]> = names
            .iter()
            .enumerate()
            .map(|(index, l)| FinBasis {
                index,
                label: Arc::from(l.as_str()),
            })
            .collect();
        let ops: Vec<LinOp> = named.into_iter().map(|(_, op)| op).collect();

        let mut checked = 0;
        for (name, op) in names.iter().zip(&ops) {
            checked += automorphism_check(a, name, op)?.checked;
        }
        let automorphism_report = CheckReport::new(
            AxiomId::AlgebraAutomorphism,
            format!("G on {}", a.describe()),
            checked,
            Vec::new(),
        );

        let identity = ops
            .iter()
            .position(LinOp::is_identity)
            .ok_or(FinAlgError::MissingIdentity)?;
        let mut table = Vec::with_capacity(ops.len());
        for (i, f) in ops.iter().enumerate() {
            let mut row = Vec::with_capacity(ops.len());
            for (j, g) in ops.iter().enumerate() {
                let fg = f.compose(g);
                let k = ops
                    .iter()
                    .position(|h| *h == fg)
                    .ok_or_else(|| FinAlgError::NotClosed {
                        left: names[i].clone(),
                        right: names[j].clone(),
                    })?;
                row.push(k);
            }
            table.push(row);
        }
        let inverse = table
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .position(|&k| k == identity)
                    .ok_or_else(|| FinAlgError::MissingInverse(names[i].clone()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let n = ops.len();
        let closure_report = CheckReport::new(AxiomId::GroupClosure, "G", n * n + n, Vec::new());
        Ok(Self {
            elements,
            ops,
            table,
            inverse,
            identity,
            automorphism_report,
            closure_report,
        })
    }

    /// The trivial group `{Id}`.
    pub fn trivial(a: &StructAlgebra) -> Self {
        Self::new(a, vec![("identity".to_string(), LinOp::identity(a.basis.clone()))])
            .expect("the identity is an automorphism")
    }

    pub fn order(&self) -> usize {
        self.ops.len()
    }

    pub fn elements(&self) -> &[FinBasis] {
        &self.elements
    }

    pub fn operator(&self, g: &FinBasis) -> &LinOp {
        &self.ops[g.index]
    }

    pub fn identity_element(&self) -> &FinBasis {
        &self.elements[self.identity]
    }

    pub fn inverse_of(&self, g: &FinBasis) -> &FinBasis {
        &self.elements[self.inverse[g.index]]
    }

    /// The multiplication table of `G`, rows and columns in listing order.
    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn automorphism_report(&self) -> &CheckReport {
        &self.automorphism_report
    }

    pub fn closure_report(&self) -> &CheckReport {
        &self.closure_report
    }
}

impl AlgCarrier for GroupBialgebra {
    type B = FinBasis;

    fn describe(&self) -> String {
        "k[G]".to_string()
    }
    fn test_basis(&self) -> Vec<FinBasis> {
        self.elements.to_vec()
    }
    fn mul_basis(&self, a: &FinBasis, b: &FinBasis) -> FinElem {
        FinElem::basis(self.elements[self.table[a.index][b.index]].clone())
    }
    fn alpha_basis(&self, a: &FinBasis) -> FinElem {
        FinElem::basis(a.clone())
    }
}

impl BialgCarrier for GroupBialgebra {
    fn comul_basis(&self, a: &FinBasis) -> Tensor2<FinBasis> {
        FinElem::basis(a.clone()).tensor(&FinElem::basis(a.clone()))
    }
}

/// `ρ(φ⊗a) = φ(a)` with structure map `Id` on `A`.
#[derive(Debug, Clone)]
pub struct GroupAction {
    name: String,
    basis: Arc<[FinBasis]>,
    ops: Vec<LinOp>,
}

impl ModCarrier for GroupAction {
    type HB = FinBasis;
    type MB = FinBasis;

    fn describe(&self) -> String {
        format!("k[G] on {}", self.name)
    }
    fn test_basis(&self) -> Vec<FinBasis> {
        self.basis.to_vec()
    }
    fn alpha_basis(&self, m: &FinBasis) -> FinElem {
        FinElem::basis(m.clone())
    }
    fn act_basis(&self, g: &FinBasis, m: &FinBasis) -> FinElem {
        self.ops[g.index].apply_basis(m)
    }
}

/// The action of `k[G]` on `A` by automorphisms.
pub fn automorphism_action(g: &GroupBialgebra, a: &StructAlgebra) -> Result<GroupAction, FinAlgError> {
    for (e, op) in g.elements.iter().zip(&g.ops) {
        automorphism_check(a, &e.label, op)?;
    }
    Ok(GroupAction {
        name: a.describe(),
        basis: a.basis.clone(),
        ops: g.ops.clone(),
    })
}

/// The twisted package `(k[G], A_α, ρ_α)` for an endomorphism `α` of `A`
/// commuting with `G`.
pub struct GroupDeformation {
    pub algebra: StructAlgebra,
    pub group: GroupBialgebra,
    pub action: GroupAction,
    pub alpha: LinOp,
    pub twisted: YauTwist<StructAlgebra, LinOp>,
    pub module: DeformedModule<GroupAction, LinOp>,
}

/// Twists by `α = i_a`, after checking that every element of `G` fixes `a`.
pub fn build_inner_deformation(
    algebra: StructAlgebra,
    group: GroupBialgebra,
    a: &FinElem,
) -> Result<GroupDeformation, FinAlgError> {
    let alpha = inner_automorphism(&algebra, a)?;
    for (e, op) in group.elements.iter().zip(&group.ops) {
        let image = op.apply(a);
        if &image != a {
            return Err(FinAlgError::NotFixed {
                name: e.label.to_string(),
                element: a.to_string(),
                image: image.to_string(),
            });
        }
    }
    build_commuting_deformation(algebra, group, alpha, "α")
}

/// Twists by any algebra endomorphism `α` with `α∘φ = φ∘α` for all `φ ∈ G`.
pub fn build_commuting_deformation(
    algebra: StructAlgebra,
    group: GroupBialgebra,
    alpha: LinOp,
    label: &str,
) -> Result<GroupDeformation, FinAlgError> {
    if alpha.dimension() != algebra.dimension() {
        return Err(FinAlgError::DimensionMismatch {
            expected: algebra.dimension(),
            found: alpha.dimension(),
        });
    }
    let action = automorphism_action(&group, &algebra)?;
    let twisted = yau_twist_algebra(algebra.clone(), alpha.clone(), label)?;
    let module = deform_module_structure(&group, action.clone(), &Identity, alpha.clone(), label)?;
    Ok(GroupDeformation {
        algebra,
        group,
        action,
        alpha,
        twisted,
        module,
    })
}

impl GroupDeformation {
    /// Every check of the package over the complete finite bases.
    pub fn run(&self) -> Result<Vec<CheckReport>, FinAlgError> {
        let g = &self.group;
        let mut out = vec![
            check_associativity(&self.algebra),
            g.automorphism_report.clone(),
            g.closure_report.clone(),
            check_compat(g, &self.action, &Identity, &self.alpha),
            check_multiplicativity(&self.twisted)?,
            check_hom_associativity(&self.twisted)?,
            check_multiplicativity(g)?,
            check_hom_coassociativity(g)?,
            check_comul_morphism(g)?,
            check_module_axiom(g, &self.module)?,
            check_module_hom_algebra(g, &self.twisted, &self.module)?,
            check_mu_module_morphism(g, &self.twisted, &self.module)?,
        ];
        let mut classical = check_module_hom_algebra_at_power(g, &self.algebra, &self.action, 0)?;
        classical.axiom = AxiomId::ClassicalModuleAlgebra;
        out.push(classical);
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homcore::build_rho2;
    use crate::linear::Tensor;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn m2() -> StructAlgebra {
        StructAlgebra::matrix_units(2)
    }

    fn el(a: &StructAlgebra, s: &str) -> FinElem {
        a.basis_elem(s).unwrap()
    }

    fn diag(a: &StructAlgebra, x: i64, y: i64) -> FinElem {
        &el(a, "e11").scale(&QLaurent::from_int(x)) + &el(a, "e22").scale(&QLaurent::from_int(y))
    }

    // 2×2 matrices as plain rational arrays; index k of e_ij is 2(i-1)+(j-1).
    type Mat = [[Rational; 2]; 2];

    fn mat_mul(a: &Mat, b: &Mat) -> Mat {
        let e = |i: usize, j: usize| &a[i][0] * &b[0][j] + &a[i][1] * &b[1][j];
        [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
    }

    fn mat_inv(a: &Mat) -> Mat {
        let det = &a[0][0] * &a[1][1] - &a[0][1] * &a[1][0];
        [[&a[1][1] / &det, -&a[0][1] / &det], [-&a[1][0] / &det, &a[0][0] / &det]]
    }

    fn unit_mat(k: usize) -> Mat {
        let mut m: Mat = Default::default();
        m[k / 2][k % 2] = r(1, 1);
        m
    }

    #[test]
    fn matrix_units_multiply() {
        let a = m2();
        assert_eq!(a.mul(&el(&a, "e12"), &el(&a, "e21")), el(&a, "e11"));
        assert!(a.mul(&el(&a, "e21"), &el(&a, "e21")).is_zero());
        assert_eq!(a.unit().unwrap(), &diag(&a, 1, 1));
        assert!(check_associativity(&StructAlgebra::matrix_units(3)).passed());
    }

    #[test]
    fn rejects_bad_structure_constants() {
        let labels = vec!["u".to_string(), "v".to_string()];
        // u·u = v, v·u = u, everything else zero: (uu)u = u but u(uu) = 0.
        let bad = StructAlgebra::new(
            "N",
            &labels,
            [(0, 0, 1, QLaurent::one()), (1, 0, 0, QLaurent::one())],
            None,
        );
        assert!(matches!(bad, Err(FinAlgError::Check(CheckError::Precondition { .. }))));
        let not_unit = StructAlgebra::new("Z", &labels, [], Some(vec![QLaurent::one(), QLaurent::zero()]));
        assert!(matches!(not_unit, Err(FinAlgError::NotUnit(_))));
        assert!(matches!(
            StructAlgebra::new("Q", &["q".to_string()], [], None),
            Err(FinAlgError::InvalidLabel(_))
        ));
    }

    #[test]
    fn inner_automorphisms() {
        let a = m2();
        let id = inner_automorphism(&a, a.unit().unwrap()).unwrap();
        assert!(id.is_identity());

        let d = diag(&a, 2, 3);
        let ia = inner_automorphism(&a, &d).unwrap();
        assert_eq!(
            ia.apply(&el(&a, "e12")),
            el(&a, "e12").scale(&QLaurent::from_rational(r(2, 3)))
        );
        let inv = a.inverse(&d).unwrap();
        assert_eq!(
            inv,
            &el(&a, "e11").scale(&QLaurent::from_rational(r(1, 2)))
                + &el(&a, "e22").scale(&QLaurent::from_rational(r(1, 3)))
        );
        assert!(ia.compose(&inner_automorphism(&a, &inv).unwrap()).is_identity());

        assert!(matches!(
            inner_automorphism(&a, &el(&a, "e11")),
            Err(FinAlgError::NotInvertible(_))
        ));
        let qd = &el(&a, "e11").scale(&QLaurent::q_pow(1)) + &el(&a, "e22");
        assert!(matches!(inner_automorphism(&a, &qd), Err(FinAlgError::QDependent(_))));
        let labels = vec!["n".to_string()];
        let nonunital = StructAlgebra::new("N", &labels, [], None).unwrap();
        assert!(matches!(
            inner_automorphism(&nonunital, &FinElem::basis(nonunital.basis()[0].clone())),
            Err(FinAlgError::NonUnital)
        ));
    }

    #[test]
    fn inner_automorphism_matches_matrix_conjugation() {
        let a = m2();
        let g: Mat = [[r(1, 1), r(2, 1)], [r(-1, 1), r(5, 3)]];
        let g_elem = FinElem::from_terms(
            a.basis()
                .iter()
                .map(|b| (b.clone(), QLaurent::from_rational(g[b.index / 2][b.index % 2].clone()))),
        );
        let ig = inner_automorphism(&a, &g_elem).unwrap();
        for k in 0..4 {
            let expected = mat_mul(&mat_mul(&g, &unit_mat(k)), &mat_inv(&g));
            for i in 0..4 {
                assert_eq!(ig.entry(i, k), &QLaurent::from_rational(expected[i / 2][i % 2].clone()));
            }
        }
    }

    fn phi(a: &StructAlgebra) -> LinOp {
        inner_automorphism(a, &diag(a, 1, -1)).unwrap()
    }

    fn g2(a: &StructAlgebra) -> GroupBialgebra {
        GroupBialgebra::new(
            a,
            vec![
                ("identity".into(), LinOp::identity(a.basis().clone())),
                ("phi".into(), phi(a)),
            ],
        )
        .unwrap()
    }

    #[test]
    fn automorphism_group_action() {
        let a = m2();
        let g = g2(&a);
        assert_eq!(g.table(), &[vec![0, 1], vec![1, 0]]);
        let phi_b = g.elements()[1].clone();
        assert_eq!(g.inverse_of(&phi_b), &phi_b);
        let rho = automorphism_action(&g, &a).unwrap();
        assert_eq!(rho.act_basis(&phi_b, &a.basis()[1]), -&el(&a, "e12"));

        let trivial = GroupBialgebra::trivial(&a);
        let rho1 = automorphism_action(&trivial, &a).unwrap();
        for b in a.basis().iter() {
            assert_eq!(rho1.act_basis(trivial.identity_element(), b), FinElem::basis(b.clone()));
        }

        let rho2 = build_rho2(&g, &rho).unwrap();
        let (e12, e21) = (a.basis()[1].clone(), a.basis()[2].clone());
        assert_eq!(
            rho2.act_basis(&phi_b, &Tensor(e12.clone(), e21.clone())),
            el(&a, "e12")
                .scale(&QLaurent::from_int(-1))
                .tensor(&el(&a, "e21").scale(&QLaurent::from_int(-1)))
        );
        assert_eq!(g.comul_basis(&phi_b).len(), 1);
    }

    #[test]
    fn rejects_bad_groups() {
        let a = m2();
        let id = LinOp::identity(a.basis().clone());
        let transpose = LinOp::from_columns(a.basis().clone(), ["e11", "e21", "e12", "e22"].map(|l| el(&a, l)));
        let err = GroupBialgebra::new(&a, vec![("identity".into(), id.clone()), ("t".into(), transpose)]);
        assert!(matches!(err, Err(FinAlgError::NotAutomorphism { .. })));

        let psi = inner_automorphism(&a, &diag(&a, 1, 2)).unwrap();
        let err = GroupBialgebra::new(&a, vec![("identity".into(), id.clone()), ("psi".into(), psi)]);
        assert!(matches!(err, Err(FinAlgError::NotClosed { .. })));

        let err = GroupBialgebra::new(&a, vec![("phi".into(), phi(&a))]);
        assert!(matches!(err, Err(FinAlgError::MissingIdentity)));
    }

    #[test]
    fn inner_deformation_passes_everything() {
        let a = m2();
        let dep = build_inner_deformation(a.clone(), g2(&a), &diag(&a, 2, 3)).unwrap();
        let reports = dep.run().unwrap();
        assert_eq!(reports.len(), 13);
        for rep in &reports {
            assert!(rep.passed(), "{rep}");
        }
        let mha = reports.iter().find(|r| r.axiom == AxiomId::ModuleHomAlgebra).unwrap();
        assert_eq!(mha.checked, 2 * 4 * 4);
    }

    #[test]
    fn unit_twist_is_classical() {
        let a = m2();
        let dep = build_inner_deformation(a.clone(), g2(&a), a.unit().unwrap()).unwrap();
        assert!(dep.alpha.is_identity());
        assert!(dep.run().unwrap().iter().all(CheckReport::passed));
    }

    #[test]
    fn element_not_fixed_by_group_is_rejected() {
        let a = m2();
        let x = &diag(&a, 1, 1) + &el(&a, "e12");
        assert!(matches!(
            build_inner_deformation(a.clone(), g2(&a), &x),
            Err(FinAlgError::NotFixed { .. })
        ));
    }

    #[test]
    fn commuting_non_inner_twist() {
        // k × k with the coordinate swap: commutative, so every inner
        // automorphism is trivial, yet the swap commutes with G = {Id, swap}.
        let labels = vec!["p".to_string(), "r".to_string()];
        let a = StructAlgebra::new(
            "kxk",
            &labels,
            [(0, 0, 0, QLaurent::one()), (1, 1, 1, QLaurent::one())],
            Some(vec![QLaurent::one(), QLaurent::one()]),
        )
        .unwrap();
        let swap = LinOp::from_columns(a.basis().clone(), ["r", "p"].map(|l| el(&a, l)));
        let g = GroupBialgebra::new(
            &a,
            vec![
                ("identity".into(), LinOp::identity(a.basis().clone())),
                ("s".into(), swap.clone()),
            ],
        )
        .unwrap();
        let dep = build_commuting_deformation(a.clone(), g.clone(), swap, "swap").unwrap();
        assert!(dep.run().unwrap().iter().all(CheckReport::passed));

        // A non-commuting projection onto p is rejected.
        let proj = LinOp::from_columns(a.basis().clone(), [el(&a, "p"), FinElem::zero()]);
        assert!(build_commuting_deformation(a, g, proj, "proj").is_err());
    }

    #[test]
    fn scenario_builtin_parses_and_builds() {
        let s = Scenario::parse(M2_EXAMPLE).unwrap();
        assert_eq!(s.labels(), ["e11", "e12", "e21", "e22"]);
        assert_eq!(s.alpha, AlphaSpec::Inner("a".into()));
        assert_eq!(s.operator("phi").unwrap(), phi(&s.algebra));
        let dep = s.build().unwrap();
        assert_eq!(
            dep.alpha.apply(&el(&s.algebra, "e12")),
            el(&s.algebra, "e12").scale(&QLaurent::from_rational(r(2, 3)))
        );
        assert!(dep.run().unwrap().iter().all(CheckReport::passed));
        assert_eq!(builtin_scenario("m2-example"), Some(M2_EXAMPLE));
        assert!(builtin_scenario("nope").is_none());
    }

    fn line_of(err: FinAlgError) -> usize {
        match err {
            FinAlgError::Scenario { line, .. } => line,
            other => panic!("expected a scenario error, got {other}"),
        }
    }

    #[test]
    fn scenario_errors_carry_line_numbers() {
        let base = "basis u v\nunit u\nproduct u u = u\nproduct u v = v\nproduct v u = v\n";
        assert_eq!(line_of(Scenario::parse(&format!("{base}frobnicate\n")).unwrap_err()), 6);
        assert_eq!(
            line_of(Scenario::parse(&format!("{base}product u w = u\n")).unwrap_err()),
            6
        );
        assert_eq!(
            line_of(Scenario::parse(&format!("{base}operator f\n  u -> u\nend\n")).unwrap_err()),
            6
        );
        assert_eq!(
            line_of(Scenario::parse(&format!("{base}operator f\n  u -> u\n")).unwrap_err()),
            6
        );
        assert_eq!(
            line_of(Scenario::parse(&format!("{base}element a = u*w\n")).unwrap_err()),
            6
        );
        assert_eq!(
            line_of(Scenario::parse(&format!("{base}alpha inner b\n")).unwrap_err()),
            6
        );
        assert_eq!(
            line_of(Scenario::parse(&format!("dimension 3\n{base}")).unwrap_err()),
            1
        );
        assert_eq!(
            line_of(Scenario::parse(&format!("{base}product u u = 2 +\n")).unwrap_err()),
            6
        );
        assert_eq!(line_of(Scenario::parse("unit u\n").unwrap_err()), 0);
    }

    #[test]
    fn scenario_products_in_expressions() {
        let text = format!("{}\nelement b = e12*e21 + 1/2\n", M2_EXAMPLE);
        let s = Scenario::parse(&text).unwrap();
        let expected = &el(&s.algebra, "e11").scale(&QLaurent::from_rational(r(3, 2)))
            + &el(&s.algebra, "e22").scale(&QLaurent::from_rational(r(1, 2)));
        assert_eq!(s.element("b").unwrap(), &expected);
    }
}
