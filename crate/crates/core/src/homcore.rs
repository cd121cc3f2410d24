//! Hom-structure carriers, twisting constructors and axiom checkers.
//!
//! A carrier exposes its structure maps on basis labels together with a
//! finite test basis. All maps extend (bi)linearly, so checking an identity
//! on every tuple of test-basis elements proves it on their span. Checkers
//! sweep every tuple and return a [`CheckReport`]; failures are data. Only
//! malformed carriers, whose structure map leaves the declared range, produce
//! a [`CheckError`].

use rayon::prelude::*;
use thiserror::Error;

use crate::linear::{BasisElem, LinComb, LinearMap, Tensor, Tensor2, Tensor3};
use crate::report::{AxiomId, CheckReport, Counterexample};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CheckError {
    #[error("{carrier}: structure map sends {element} to {image}, outside the enumerated range; {hint}")]
    RangeEscape {
        carrier: String,
        element: String,
        image: String,
        hint: String,
    },
    #[error("precondition failed: {requirement} ({} counterexample(s), first: {})",
        .report.counterexamples.len(),
        .report.counterexamples.first().map(ToString::to_string).unwrap_or_default())]
    Precondition {
        requirement: String,
        report: Box<CheckReport>,
    },
}

/// `(A, μ, α)`: a product and a structure map on a vector space.
pub trait AlgCarrier: Sync {
    type B: BasisElem;

    fn describe(&self) -> String;
    fn test_basis(&self) -> Vec<Self::B>;
    fn mul_basis(&self, a: &Self::B, b: &Self::B) -> LinComb<Self::B>;
    fn alpha_basis(&self, a: &Self::B) -> LinComb<Self::B>;

    /// Whether `b` lies inside the truncation the test basis spans.
    fn in_range(&self, _b: &Self::B) -> bool {
        true
    }

    fn mul(&self, a: &LinComb<Self::B>, b: &LinComb<Self::B>) -> LinComb<Self::B> {
        a.bilinear(b, |x, y| self.mul_basis(x, y))
    }

    fn alpha(&self, a: &LinComb<Self::B>) -> LinComb<Self::B> {
        a.map_linear(|x| self.alpha_basis(x))
    }

    fn alpha_pow(&self, a: &LinComb<Self::B>, n: u32) -> LinComb<Self::B> {
        (0..n).fold(a.clone(), |acc, _| self.alpha(&acc))
    }
}

/// `(H, μ, Δ, α)`.
pub trait BialgCarrier: AlgCarrier {
    fn comul_basis(&self, a: &Self::B) -> Tensor2<Self::B>;

    fn comul(&self, a: &LinComb<Self::B>) -> Tensor2<Self::B> {
        a.map_linear(|x| self.comul_basis(x))
    }

    /// Product on `H⊗H`: `μ⊗² ∘ (Id⊗τ⊗Id)`.
    fn tensor_mul(&self, s: &Tensor2<Self::B>, t: &Tensor2<Self::B>) -> Tensor2<Self::B> {
        s.bilinear(t, |Tensor(a, b), Tensor(c, d)| {
            self.mul_basis(a, c).tensor(&self.mul_basis(b, d))
        })
    }
}

/// A Hom-module `(M, α_M)` with a structure map `ρ: H ⊗ M → M`.
pub trait ModCarrier: Sync {
    /// Basis of the acting algebra.
    type HB: BasisElem;
    type MB: BasisElem;

    fn describe(&self) -> String;
    fn test_basis(&self) -> Vec<Self::MB>;
    fn alpha_basis(&self, m: &Self::MB) -> LinComb<Self::MB>;
    fn act_basis(&self, h: &Self::HB, m: &Self::MB) -> LinComb<Self::MB>;

    fn in_range(&self, _m: &Self::MB) -> bool {
        true
    }

    fn act(&self, h: &LinComb<Self::HB>, m: &LinComb<Self::MB>) -> LinComb<Self::MB> {
        h.bilinear(m, |x, y| self.act_basis(x, y))
    }

    fn alpha(&self, m: &LinComb<Self::MB>) -> LinComb<Self::MB> {
        m.map_linear(|x| self.alpha_basis(x))
    }
}

/// A bracket with a structure map, as in a Hom-Lie algebra.
pub trait BracketCarrier: Sync {
    type B: BasisElem;

    fn describe(&self) -> String;
    fn test_basis(&self) -> Vec<Self::B>;
    fn bracket_basis(&self, a: &Self::B, b: &Self::B) -> LinComb<Self::B>;
    fn alpha_basis(&self, a: &Self::B) -> LinComb<Self::B>;

    fn bracket(&self, a: &LinComb<Self::B>, b: &LinComb<Self::B>) -> LinComb<Self::B> {
        a.bilinear(b, |x, y| self.bracket_basis(x, y))
    }

    fn alpha(&self, a: &LinComb<Self::B>) -> LinComb<Self::B> {
        a.map_linear(|x| self.alpha_basis(x))
    }
}

impl<T: AlgCarrier> AlgCarrier for &T {
    type B = T::B;
    fn describe(&self) -> String {
        (**self).describe()
    }
    fn test_basis(&self) -> Vec<T::B> {
        (**self).test_basis()
    }
    fn mul_basis(&self, a: &T::B, b: &T::B) -> LinComb<T::B> {
        (**self).mul_basis(a, b)
    }
    fn alpha_basis(&self, a: &T::B) -> LinComb<T::B> {
        (**self).alpha_basis(a)
    }
    fn in_range(&self, b: &T::B) -> bool {
        (**self).in_range(b)
    }
}

impl<T: BialgCarrier> BialgCarrier for &T {
    fn comul_basis(&self, a: &T::B) -> Tensor2<T::B> {
        (**self).comul_basis(a)
    }
}

impl<T: ModCarrier> ModCarrier for &T {
    type HB = T::HB;
    type MB = T::MB;
    fn describe(&self) -> String {
        (**self).describe()
    }
    fn test_basis(&self) -> Vec<T::MB> {
        (**self).test_basis()
    }
    fn alpha_basis(&self, m: &T::MB) -> LinComb<T::MB> {
        (**self).alpha_basis(m)
    }
    fn act_basis(&self, h: &T::HB, m: &T::MB) -> LinComb<T::MB> {
        (**self).act_basis(h, m)
    }
    fn in_range(&self, m: &T::MB) -> bool {
        (**self).in_range(m)
    }
}

/// The structure map of a carrier, viewed as a [`LinearMap`].
pub struct AlphaOf<'a, A>(pub &'a A);

impl<A: AlgCarrier> LinearMap<A::B> for AlphaOf<'_, A> {
    fn apply_basis(&self, b: &A::B) -> LinComb<A::B> {
        self.0.alpha_basis(b)
    }
}

// ---------------------------------------------------------------------------
// sweep machinery

fn pairs<T: Clone>(xs: &[T], ys: &[T]) -> Vec<(T, T)> {
    xs.iter()
        .flat_map(|x| ys.iter().map(move |y| (x.clone(), y.clone())))
        .collect()
}

fn triples<T: Clone, U: Clone>(xs: &[T], ys: &[U], zs: &[U]) -> Vec<(T, U, U)> {
    let mut out = Vec::with_capacity(xs.len() * ys.len() * zs.len());
    for x in xs {
        for y in ys {
            for z in zs {
                out.push((x.clone(), y.clone(), z.clone()));
            }
        }
    }
    out
}

/// Runs `f` on every input in parallel, keeping failures in input order.
fn sweep<T: Sync>(inputs: &[T], f: impl Fn(&T) -> Vec<Counterexample> + Sync + Send) -> Vec<Counterexample> {
    inputs
        .par_iter()
        .map(f)
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

fn compare<B: BasisElem>(
    inputs: &[&dyn std::fmt::Display],
    lhs: LinComb<B>,
    rhs: LinComb<B>,
) -> Option<Counterexample> {
    (lhs != rhs).then(|| Counterexample::new(inputs.iter().map(ToString::to_string).collect(), lhs, rhs))
}

fn ensure_alpha_closed<A: AlgCarrier>(a: &A) -> Result<(), CheckError> {
    for b in a.test_basis() {
        let image = a.alpha_basis(&b);
        if !image.support().all(|t| a.in_range(t)) {
            return Err(CheckError::RangeEscape {
                carrier: a.describe(),
                element: b.to_string(),
                image: image.to_string(),
                hint: "use a degree-preserving structure map or raise the degree bound".into(),
            });
        }
    }
    Ok(())
}

fn ensure_module_alpha_closed<M: ModCarrier>(m: &M) -> Result<(), CheckError> {
    for b in m.test_basis() {
        let image = m.alpha_basis(&b);
        if !image.support().all(|t| m.in_range(t)) {
            return Err(CheckError::RangeEscape {
                carrier: m.describe(),
                element: b.to_string(),
                image: image.to_string(),
                hint: "use a degree-preserving structure map or raise the degree bound".into(),
            });
        }
    }
    Ok(())
}

fn subject(parts: &[String]) -> String {
    parts.join(" ; ")
}

// ---------------------------------------------------------------------------
// algebra checkers

/// Ordinary associativity `(ab)c = a(bc)` of the product, ignoring `α`.
pub fn check_associativity<A: AlgCarrier>(a: &A) -> CheckReport {
    let basis = a.test_basis();
    let inputs = triples(&basis, &basis, &basis);
    let failures = sweep(&inputs, |(x, y, z)| {
        let (x, y, z) = (
            LinComb::basis(x.clone()),
            LinComb::basis(y.clone()),
            LinComb::basis(z.clone()),
        );
        let lhs = a.mul(&a.mul(&x, &y), &z);
        let rhs = a.mul(&x, &a.mul(&y, &z));
        compare(&[&x, &y, &z], lhs, rhs).into_iter().collect()
    });
    CheckReport::new(AxiomId::Associativity, a.describe(), inputs.len(), failures)
}

/// `f(ab) = f(a)f(b)` for a linear map `f` against the carrier's product.
pub fn check_endomorphism<A: AlgCarrier, F: LinearMap<A::B>>(a: &A, f: &F) -> CheckReport {
    let basis = a.test_basis();
    let inputs = pairs(&basis, &basis);
    let failures = sweep(&inputs, |(x, y)| {
        let (x, y) = (LinComb::basis(x.clone()), LinComb::basis(y.clone()));
        let lhs = f.apply(&a.mul(&x, &y));
        let rhs = a.mul(&f.apply(&x), &f.apply(&y));
        compare(&[&x, &y], lhs, rhs).into_iter().collect()
    });
    CheckReport::new(AxiomId::Multiplicativity, a.describe(), inputs.len(), failures)
}

/// `α(ab) = α(a)α(b)` on all basis pairs.
pub fn check_multiplicativity<A: AlgCarrier>(a: &A) -> Result<CheckReport, CheckError> {
    ensure_alpha_closed(a)?;
    Ok(check_endomorphism(a, &AlphaOf(a)))
}

/// `μ(α(a), μ(b,c)) = μ(μ(a,b), α(c))` on all basis triples.
pub fn check_hom_associativity<A: AlgCarrier>(a: &A) -> Result<CheckReport, CheckError> {
    ensure_alpha_closed(a)?;
    let basis = a.test_basis();
    let inputs = triples(&basis, &basis, &basis);
    let failures = sweep(&inputs, |(x, y, z)| {
        let (x, y, z) = (
            LinComb::basis(x.clone()),
            LinComb::basis(y.clone()),
            LinComb::basis(z.clone()),
        );
        let lhs = a.mul(&a.alpha(&x), &a.mul(&y, &z));
        let rhs = a.mul(&a.mul(&x, &y), &a.alpha(&z));
        compare(&[&x, &y, &z], lhs, rhs).into_iter().collect()
    });
    Ok(CheckReport::new(
        AxiomId::HomAssociativity,
        a.describe(),
        inputs.len(),
        failures,
    ))
}

/// `(Δ⊗α)Δ = (α⊗Δ)Δ` on every basis element.
pub fn check_hom_coassociativity<H: BialgCarrier>(h: &H) -> Result<CheckReport, CheckError> {
    ensure_alpha_closed(h)?;
    let basis = h.test_basis();
    let failures = sweep(&basis, |x| {
        let d = h.comul_basis(x);
        let lhs = d.map_linear(|Tensor(p, r)| {
            h.comul_basis(p).bilinear(&h.alpha_basis(r), |Tensor(s, t), u| {
                LinComb::basis(Tensor3(s.clone(), t.clone(), u.clone()))
            })
        });
        let rhs = d.map_linear(|Tensor(p, r)| {
            h.alpha_basis(p).bilinear(&h.comul_basis(r), |s, Tensor(t, u)| {
                LinComb::basis(Tensor3(s.clone(), t.clone(), u.clone()))
            })
        });
        compare(&[x], lhs, rhs).into_iter().collect()
    });
    Ok(CheckReport::new(
        AxiomId::HomCoassociativity,
        h.describe(),
        basis.len(),
        failures,
    ))
}

/// `Δ∘α = α⊗²∘Δ` on basis elements and `Δ∘μ = μ⊗²∘(Id⊗τ⊗Id)∘Δ⊗²` on pairs.
pub fn check_comul_morphism<H: BialgCarrier>(h: &H) -> Result<CheckReport, CheckError> {
    ensure_alpha_closed(h)?;
    let basis = h.test_basis();
    let mut failures = sweep(&basis, |x| {
        let lhs = h.comul(&h.alpha_basis(x));
        let rhs = h.comul_basis(x).map_tensor(|a| h.alpha_basis(a), |b| h.alpha_basis(b));
        compare(&[x], lhs, rhs)
            .map(|c| c.with_clause("Δ∘α"))
            .into_iter()
            .collect()
    });
    let inputs = pairs(&basis, &basis);
    failures.extend(sweep(&inputs, |(x, y)| {
        let lhs = h.comul(&h.mul_basis(x, y));
        let rhs = h.tensor_mul(&h.comul_basis(x), &h.comul_basis(y));
        compare(&[x, y], lhs, rhs)
            .map(|c| c.with_clause("Δ∘μ"))
            .into_iter()
            .collect()
    }));
    Ok(CheckReport::new(
        AxiomId::ComulMorphism,
        h.describe(),
        basis.len() + inputs.len(),
        failures,
    ))
}

// ---------------------------------------------------------------------------
// module checkers

/// Hom-linearity `α_M(am) = α(a)α_M(m)` on pairs and the module axiom
/// `α(a)(bm) = (ab)α_M(m)` on triples.
pub fn check_module_axiom<H, M>(h: &H, m: &M) -> Result<CheckReport, CheckError>
where
    H: AlgCarrier,
    M: ModCarrier<HB = H::B>,
{
    ensure_alpha_closed(h)?;
    ensure_module_alpha_closed(m)?;
    let hb = h.test_basis();
    let mb = m.test_basis();
    let pair_inputs: Vec<(H::B, M::MB)> = hb
        .iter()
        .flat_map(|x| mb.iter().map(move |v| (x.clone(), v.clone())))
        .collect();
    let mut failures = sweep(&pair_inputs, |(x, v)| {
        let lhs = m.alpha(&m.act_basis(x, v));
        let rhs = m.act(&h.alpha_basis(x), &m.alpha_basis(v));
        compare(&[x, v], lhs, rhs)
            .map(|c| c.with_clause("hom-linearity"))
            .into_iter()
            .collect()
    });
    let mut triple_inputs: Vec<(H::B, H::B, M::MB)> = Vec::new();
    for x in &hb {
        for y in &hb {
            for v in &mb {
                triple_inputs.push((x.clone(), y.clone(), v.clone()));
            }
        }
    }
    failures.extend(sweep(&triple_inputs, |(x, y, v)| {
        let lhs = m.act(&h.alpha_basis(x), &m.act_basis(y, v));
        let rhs = m.act(&h.mul_basis(x, y), &m.alpha_basis(v));
        compare(&[x, y, v], lhs, rhs)
            .map(|c| c.with_clause("module"))
            .into_iter()
            .collect()
    }));
    Ok(CheckReport::new(
        AxiomId::ModuleAxiom,
        subject(&[h.describe(), m.describe()]),
        pair_inputs.len() + triple_inputs.len(),
        failures,
    ))
}

/// `ρ̃ = ρ ∘ (α_H^k ⊗ Id)`; `k = 2` is the standard choice.
pub struct RhoTilde<H, M> {
    pub h: H,
    pub m: M,
    pub power: u32,
}

impl<H, M> ModCarrier for RhoTilde<H, M>
where
    H: AlgCarrier,
    M: ModCarrier<HB = H::B>,
{
    type HB = H::B;
    type MB = M::MB;

    fn describe(&self) -> String {
        format!("ρ̃[α_H^{}] on {}", self.power, self.m.describe())
    }
    fn test_basis(&self) -> Vec<M::MB> {
        self.m.test_basis()
    }
    fn alpha_basis(&self, v: &M::MB) -> LinComb<M::MB> {
        self.m.alpha_basis(v)
    }
    fn act_basis(&self, x: &H::B, v: &M::MB) -> LinComb<M::MB> {
        let twisted = self.h.alpha_pow(&LinComb::basis(x.clone()), self.power);
        self.m.act(&twisted, &LinComb::basis(v.clone()))
    }
    fn in_range(&self, v: &M::MB) -> bool {
        self.m.in_range(v)
    }
}

/// Builds `ρ̃ = ρ∘(α_H²⊗Id)` after confirming `ρ` is a module structure.
pub fn build_rho_tilde<H, M>(h: H, m: M) -> Result<RhoTilde<H, M>, CheckError>
where
    H: AlgCarrier,
    M: ModCarrier<HB = H::B>,
{
    require(
        AxiomId::ModuleAxiom,
        "ρ must be a module structure",
        check_module_axiom(&h, &m)?,
    )?;
    Ok(RhoTilde { h, m, power: 2 })
}

/// `ρ²(x ⊗ m⊗n) = Σ (x'm) ⊗ (x''n)` on `M⊗M` with structure map `α_M⊗α_M`.
pub struct RhoSquared<H, M> {
    pub h: H,
    pub m: M,
}

impl<H, M> ModCarrier for RhoSquared<H, M>
where
    H: BialgCarrier,
    M: ModCarrier<HB = H::B>,
{
    type HB = H::B;
    type MB = Tensor<M::MB, M::MB>;

    fn describe(&self) -> String {
        format!("ρ² on ({})⊗²", self.m.describe())
    }
    fn test_basis(&self) -> Vec<Self::MB> {
        let b = self.m.test_basis();
        pairs(&b, &b).into_iter().map(|(x, y)| Tensor(x, y)).collect()
    }
    fn alpha_basis(&self, Tensor(v, w): &Self::MB) -> LinComb<Self::MB> {
        self.m.alpha_basis(v).tensor(&self.m.alpha_basis(w))
    }
    fn act_basis(&self, x: &H::B, Tensor(v, w): &Self::MB) -> LinComb<Self::MB> {
        self.h
            .comul_basis(x)
            .map_linear(|Tensor(x1, x2)| self.m.act_basis(x1, v).tensor(&self.m.act_basis(x2, w)))
    }
    fn in_range(&self, Tensor(v, w): &Self::MB) -> bool {
        self.m.in_range(v) && self.m.in_range(w)
    }
}

/// Builds `ρ²` on `M⊗M` after confirming `ρ` is a module structure.
pub fn build_rho2<H, M>(h: H, m: M) -> Result<RhoSquared<H, M>, CheckError>
where
    H: BialgCarrier,
    M: ModCarrier<HB = H::B>,
{
    require(
        AxiomId::ModuleAxiom,
        "ρ must be a module structure",
        check_module_axiom(&h, &m)?,
    )?;
    Ok(RhoSquared { h, m })
}

pub(crate) fn require(axiom: AxiomId, requirement: &str, report: CheckReport) -> Result<(), CheckError> {
    debug_assert_eq!(report.axiom, axiom);
    if report.passed() {
        Ok(())
    } else {
        Err(CheckError::Precondition {
            requirement: requirement.to_string(),
            report: Box::new(report),
        })
    }
}

/// `α_H²(x)(ab) = Σ (x'a)(x''b)` on all triples `(x, a, b)`.
pub fn check_module_hom_algebra<H, A, M>(h: &H, a: &A, rho: &M) -> Result<CheckReport, CheckError>
where
    H: BialgCarrier,
    A: AlgCarrier,
    M: ModCarrier<HB = H::B, MB = A::B>,
{
    check_module_hom_algebra_at_power(h, a, rho, 2)
}

/// The module Hom-algebra identity with `α_H^power` on the left. Powers other
/// than 2 give deliberately wrong identities, used as negative controls.
pub fn check_module_hom_algebra_at_power<H, A, M>(h: &H, a: &A, rho: &M, power: u32) -> Result<CheckReport, CheckError>
where
    H: BialgCarrier,
    A: AlgCarrier,
    M: ModCarrier<HB = H::B, MB = A::B>,
{
    ensure_alpha_closed(h)?;
    ensure_alpha_closed(a)?;
    let hb = h.test_basis();
    let ab = a.test_basis();
    let inputs = triples(&hb, &ab, &ab);
    let failures = sweep(&inputs, |(x, u, v)| {
        let xs = h.alpha_pow(&LinComb::basis(x.clone()), power);
        let lhs = rho.act(&xs, &a.mul_basis(u, v));
        let rhs = h
            .comul_basis(x)
            .map_linear(|Tensor(x1, x2)| a.mul(&rho.act_basis(x1, u), &rho.act_basis(x2, v)));
        compare(&[x, u, v], lhs, rhs).into_iter().collect()
    });
    Ok(CheckReport::new(
        AxiomId::ModuleHomAlgebra,
        subject(&[h.describe(), a.describe(), rho.describe()]),
        inputs.len(),
        failures,
    ))
}

/// Whether `μ_A: A⊗A → A` is an H-module morphism from `ρ²` to `ρ̃`:
/// `μ_A(ρ²(x ⊗ a⊗b)) = ρ̃(x ⊗ ab)`.
pub fn check_mu_module_morphism<H, A, M>(h: &H, a: &A, rho: &M) -> Result<CheckReport, CheckError>
where
    H: BialgCarrier,
    A: AlgCarrier,
    M: ModCarrier<HB = H::B, MB = A::B>,
{
    check_mu_module_morphism_at_power(h, a, rho, 2)
}

/// [`check_mu_module_morphism`] with `ρ̃ = ρ∘(α_H^power⊗Id)`.
pub fn check_mu_module_morphism_at_power<H, A, M>(h: &H, a: &A, rho: &M, power: u32) -> Result<CheckReport, CheckError>
where
    H: BialgCarrier,
    A: AlgCarrier,
    M: ModCarrier<HB = H::B, MB = A::B>,
{
    ensure_alpha_closed(h)?;
    ensure_alpha_closed(a)?;
    let rho2 = RhoSquared { h, m: rho };
    let tilde = RhoTilde { h, m: rho, power };
    let hb = h.test_basis();
    let ab = a.test_basis();
    let inputs = triples(&hb, &ab, &ab);
    let failures = sweep(&inputs, |(x, u, v)| {
        let lhs = rho2
            .act_basis(x, &Tensor(u.clone(), v.clone()))
            .map_linear(|Tensor(s, t)| a.mul_basis(s, t));
        let rhs = tilde.act(&LinComb::basis(x.clone()), &a.mul_basis(u, v));
        compare(&[x, u, v], lhs, rhs).into_iter().collect()
    });
    Ok(CheckReport::new(
        AxiomId::MuModuleMorphism,
        subject(&[h.describe(), a.describe(), rho.describe()]),
        inputs.len(),
        failures,
    ))
}

/// `α_A(ρ(x⊗a)) = ρ(α_H(x) ⊗ α_A(a))` on all pairs `(x, a)`.
pub fn check_compat<H, M, FH, FA>(h: &H, rho: &M, alpha_h: &FH, alpha_a: &FA) -> CheckReport
where
    H: AlgCarrier,
    M: ModCarrier<HB = H::B>,
    FH: LinearMap<H::B>,
    FA: LinearMap<M::MB>,
{
    let hb = h.test_basis();
    let mb = rho.test_basis();
    let inputs: Vec<(H::B, M::MB)> = hb
        .iter()
        .flat_map(|x| mb.iter().map(move |v| (x.clone(), v.clone())))
        .collect();
    let failures = sweep(&inputs, |(x, v)| {
        let lhs = alpha_a.apply(&rho.act_basis(x, v));
        let rhs = rho.act(&alpha_h.apply_basis(x), &alpha_a.apply_basis(v));
        compare(&[x, v], lhs, rhs).into_iter().collect()
    });
    CheckReport::new(
        AxiomId::Compatibility,
        subject(&[h.describe(), rho.describe()]),
        inputs.len(),
        failures,
    )
}

// ---------------------------------------------------------------------------
// twisting constructors

/// The Yau twist of a classical structure by an endomorphism `α`:
/// `μ_α = α∘μ`, `Δ_α = Δ∘α` and structure map `α`.
pub struct YauTwist<C, F> {
    pub base: C,
    pub alpha: F,
    pub label: String,
}

impl<C: AlgCarrier, F: LinearMap<C::B>> AlgCarrier for YauTwist<C, F> {
    type B = C::B;

    fn describe(&self) -> String {
        format!("{}_{}", self.base.describe(), self.label)
    }
    fn test_basis(&self) -> Vec<C::B> {
        self.base.test_basis()
    }
    fn mul_basis(&self, a: &C::B, b: &C::B) -> LinComb<C::B> {
        self.alpha.apply(&self.base.mul_basis(a, b))
    }
    fn alpha_basis(&self, a: &C::B) -> LinComb<C::B> {
        self.alpha.apply_basis(a)
    }
    fn in_range(&self, b: &C::B) -> bool {
        self.base.in_range(b)
    }
}

impl<C: BialgCarrier, F: LinearMap<C::B>> BialgCarrier for YauTwist<C, F> {
    fn comul_basis(&self, a: &C::B) -> Tensor2<C::B> {
        self.base.comul(&self.alpha.apply_basis(a))
    }
}

/// `A_α = (A, α∘μ, α)` for an associative `A` and an algebra endomorphism `α`.
pub fn yau_twist_algebra<A, F>(base: A, alpha: F, label: &str) -> Result<YauTwist<A, F>, CheckError>
where
    A: AlgCarrier,
    F: LinearMap<A::B>,
{
    require(
        AxiomId::Associativity,
        "base product must be associative",
        check_associativity(&base),
    )?;
    require(
        AxiomId::Multiplicativity,
        "twisting map must be an algebra endomorphism",
        check_endomorphism(&base, &alpha),
    )?;
    let twist = YauTwist {
        base,
        alpha,
        label: label.to_string(),
    };
    ensure_alpha_closed(&twist)?;
    Ok(twist)
}

/// `H_α = (H, α∘μ, Δ∘α, α)` for a bialgebra `H` and a bialgebra endomorphism `α`.
pub fn yau_twist_bialgebra<H, F>(base: H, alpha: F, label: &str) -> Result<YauTwist<H, F>, CheckError>
where
    H: BialgCarrier,
    F: LinearMap<H::B>,
{
    require(
        AxiomId::Associativity,
        "base product must be associative",
        check_associativity(&base),
    )?;
    require(
        AxiomId::Multiplicativity,
        "twisting map must be an algebra endomorphism",
        check_endomorphism(&base, &alpha),
    )?;
    let basis = base.test_basis();
    let failures = sweep(&basis, |x| {
        let lhs = base.comul(&alpha.apply_basis(x));
        let rhs = base
            .comul_basis(x)
            .map_tensor(|a| alpha.apply_basis(a), |b| alpha.apply_basis(b));
        compare(&[x], lhs, rhs).into_iter().collect()
    });
    require(
        AxiomId::ComulMorphism,
        "twisting map must commute with the coproduct",
        CheckReport::new(AxiomId::ComulMorphism, base.describe(), basis.len(), failures),
    )?;
    let twist = YauTwist {
        base,
        alpha,
        label: label.to_string(),
    };
    ensure_alpha_closed(&twist)?;
    Ok(twist)
}

/// `ρ_α = α_A∘ρ` acting on `(A, α_A)`.
pub struct DeformedModule<M, F> {
    pub base: M,
    pub alpha: F,
    pub label: String,
}

impl<M: ModCarrier, F: LinearMap<M::MB>> ModCarrier for DeformedModule<M, F> {
    type HB = M::HB;
    type MB = M::MB;

    fn describe(&self) -> String {
        format!("{}_{}", self.base.describe(), self.label)
    }
    fn test_basis(&self) -> Vec<M::MB> {
        self.base.test_basis()
    }
    fn alpha_basis(&self, v: &M::MB) -> LinComb<M::MB> {
        self.alpha.apply_basis(v)
    }
    fn act_basis(&self, x: &M::HB, v: &M::MB) -> LinComb<M::MB> {
        self.alpha.apply(&self.base.act_basis(x, v))
    }
    fn in_range(&self, v: &M::MB) -> bool {
        self.base.in_range(v)
    }
}

/// Deforms a classical module structure by `α_A` after verifying the
/// compatibility `α_A∘ρ = ρ∘(α_H⊗α_A)` on the test bases.
pub fn deform_module_structure<H, M, FH, FA>(
    h: &H,
    rho: M,
    alpha_h: &FH,
    alpha_a: FA,
    label: &str,
) -> Result<DeformedModule<M, FA>, CheckError>
where
    H: AlgCarrier,
    M: ModCarrier<HB = H::B>,
    FH: LinearMap<H::B>,
    FA: LinearMap<M::MB>,
{
    require(
        AxiomId::Compatibility,
        "α_A∘ρ = ρ∘(α_H⊗α_A) must hold",
        check_compat(h, &rho, alpha_h, &alpha_a),
    )?;
    let deformed = DeformedModule {
        base: rho,
        alpha: alpha_a,
        label: label.to_string(),
    };
    ensure_module_alpha_closed(&deformed)?;
    Ok(deformed)
}

// ---------------------------------------------------------------------------
// Hom-Lie structures

/// The commutator bracket `[a,b] = μ(a,b) - μ(b,a)` of an algebra carrier.
pub struct Commutator<A>(pub A);

impl<A: AlgCarrier> BracketCarrier for Commutator<A> {
    type B = A::B;

    fn describe(&self) -> String {
        format!("[,] of {}", self.0.describe())
    }
    fn test_basis(&self) -> Vec<A::B> {
        self.0.test_basis()
    }
    fn bracket_basis(&self, a: &A::B, b: &A::B) -> LinComb<A::B> {
        &self.0.mul_basis(a, b) - &self.0.mul_basis(b, a)
    }
    fn alpha_basis(&self, a: &A::B) -> LinComb<A::B> {
        self.0.alpha_basis(a)
    }
}

/// Commutator bracket of a Hom-associative algebra, after confirming
/// Hom-associativity.
pub fn commutator_hom_lie<A: AlgCarrier>(a: A) -> Result<Commutator<A>, CheckError> {
    require(
        AxiomId::HomAssociativity,
        "carrier must be Hom-associative",
        check_hom_associativity(&a)?,
    )?;
    Ok(Commutator(a))
}

/// `[x,y]_α = α([x,y])` with structure map `α`.
pub struct LieTwist<L, F> {
    pub base: L,
    pub alpha: F,
}

impl<L: BracketCarrier, F: LinearMap<L::B>> BracketCarrier for LieTwist<L, F> {
    type B = L::B;

    fn describe(&self) -> String {
        format!("{}_α", self.base.describe())
    }
    fn test_basis(&self) -> Vec<L::B> {
        self.base.test_basis()
    }
    fn bracket_basis(&self, a: &L::B, b: &L::B) -> LinComb<L::B> {
        self.alpha.apply(&self.base.bracket_basis(a, b))
    }
    fn alpha_basis(&self, a: &L::B) -> LinComb<L::B> {
        self.alpha.apply_basis(a)
    }
}

pub fn lie_yau_twist<L: BracketCarrier, F: LinearMap<L::B>>(base: L, alpha: F) -> LieTwist<L, F> {
    LieTwist { base, alpha }
}

/// Skew-symmetry, multiplicativity and the Hom-Jacobi identity.
pub fn check_hom_jacobi<L: BracketCarrier>(l: &L) -> Vec<CheckReport> {
    let basis = l.test_basis();
    let pair_inputs = pairs(&basis, &basis);
    let skew = sweep(&pair_inputs, |(x, y)| {
        let (x, y) = (LinComb::basis(x.clone()), LinComb::basis(y.clone()));
        compare(&[&x, &y], l.bracket(&x, &y), -&l.bracket(&y, &x))
            .into_iter()
            .collect()
    });
    let mult = sweep(&pair_inputs, |(x, y)| {
        let (x, y) = (LinComb::basis(x.clone()), LinComb::basis(y.clone()));
        let lhs = l.alpha(&l.bracket(&x, &y));
        let rhs = l.bracket(&l.alpha(&x), &l.alpha(&y));
        compare(&[&x, &y], lhs, rhs).into_iter().collect()
    });
    let triple_inputs = triples(&basis, &basis, &basis);
    let jacobi = sweep(&triple_inputs, |(x, y, z)| {
        let (x, y, z) = (
            LinComb::basis(x.clone()),
            LinComb::basis(y.clone()),
            LinComb::basis(z.clone()),
        );
        let mut sum = l.bracket(&l.bracket(&x, &y), &l.alpha(&z));
        sum = &sum + &l.bracket(&l.bracket(&z, &x), &l.alpha(&y));
        sum = &sum + &l.bracket(&l.bracket(&y, &z), &l.alpha(&x));
        compare(&[&x, &y, &z], sum, LinComb::zero()).into_iter().collect()
    });
    let d = l.describe();
    vec![
        CheckReport::new(AxiomId::BracketSkewSymmetry, d.clone(), pair_inputs.len(), skew),
        CheckReport::new(AxiomId::BracketMultiplicativity, d.clone(), pair_inputs.len(), mult),
        CheckReport::new(AxiomId::HomJacobi, d, triple_inputs.len(), jacobi),
    ]
}
