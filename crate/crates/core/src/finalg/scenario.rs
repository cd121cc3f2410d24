//! Line-oriented text format for finite-dimensional scenarios.
//!
//! ```text
//! dimension 4                      # optional, checked against `basis`
//! basis e11 e12 e21 e22
//! unit e11 + e22                   # optional
//! product e11 e12 = e12            # unlisted products are zero
//! operator phi                     # images of every basis vector
//!   e12 -> -e12
//!   ...
//! end
//! element a = 2*e11 + 3*e22
//! group identity phi               # all elements of G, listed
//! alpha inner a                    # or `alpha operator NAME`, `alpha identity`
//! ```
//!
//! `#` starts a comment. `identity` names the identity operator. Expressions
//! in `operator` and `element` may multiply basis vectors, e.g. `e12*e21`.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;

use super::{
    build_commuting_deformation, build_inner_deformation, valid_label, FinAlgError, FinElem, GroupBialgebra,
    GroupDeformation, LinOp, StructAlgebra,
};
use crate::homcore::AlgCarrier;
use crate::linear::{BasisElem, LinComb};
use crate::parse::{self, ParseRing, SymbolMode};
use crate::scalars::QLaurent;

/// 2×2 matrices, `G` generated by conjugation with `diag(1,-1)` and
/// `α = i_a` for `a = diag(2,3)`.
pub const M2_EXAMPLE: &str = include_str!("../../scenarios/m2-example.txt");

/// Scenario text shipped with the crate, by name.
pub fn builtin_scenario(name: &str) -> Option<&'static str> {
    match name {
        "m2-example" => Some(M2_EXAMPLE),
        _ => None,
    }
}

/// Choice of the twisting map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlphaSpec {
    Identity,
    /// Conjugation by a named element.
    Inner(String),
    /// A named operator.
    Operator(String),
}

impl fmt::Display for AlphaSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Identity => f.write_str("identity"),
            Self::Inner(a) => write!(f, "inner {a}"),
            Self::Operator(o) => write!(f, "operator {o}"),
        }
    }
}

/// A parsed scenario: the algebra, named operators and elements, the group
/// listing and the twist.
#[derive(Debug, Clone)]
pub struct Scenario {
    pub algebra: StructAlgebra,
    pub operators: Vec<(String, LinOp)>,
    pub elements: Vec<(String, FinElem)>,
    pub group: Vec<String>,
    pub alpha: AlphaSpec,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct Word(Vec<String>);

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&self.0.join("*"))
        }
    }
}

impl BasisElem for Word {
    fn is_unit(&self) -> bool {
        self.0.is_empty()
    }
}

/// Noncommutative expression in basis labels, evaluated once the product is
/// known.
#[derive(Debug, Clone)]
struct FreeExpr(LinComb<Word>);

impl ParseRing for FreeExpr {
    fn from_scalar(c: QLaurent) -> Self {
        Self(LinComb::term(Word(Vec::new()), c))
    }
    fn symbol(name: &str) -> Option<Self> {
        Some(Self(LinComb::basis(Word(vec![name.to_string()]))))
    }
    fn add(&self, other: &Self) -> Self {
        Self(&self.0 + &other.0)
    }
    fn neg(&self) -> Self {
        Self(-&self.0)
    }
    fn mul(&self, other: &Self) -> Self {
        Self(self.0.bilinear(&other.0, |u, v| {
            LinComb::basis(Word(u.0.iter().chain(&v.0).cloned().collect()))
        }))
    }
    fn inverse(&self) -> Option<Self> {
        match self.0.iter().collect::<Vec<_>>().as_slice() {
            [(w, c)] if w.is_unit() => c.inverse().ok().map(Self::from_scalar),
            _ => None,
        }
    }
}

struct Src {
    line: usize,
}

impl Src {
    fn err(&self, message: impl Into<String>) -> FinAlgError {
        FinAlgError::Scenario {
            line: self.line,
            message: message.into(),
        }
    }

    fn expr(&self, text: &str) -> Result<FreeExpr, FinAlgError> {
        parse::parse(text, SymbolMode::Word).map_err(|e| self.err(format!("in `{text}`: {e}")))
    }
}

/// Lines of an `operator` block.
struct OperatorBlock<'a> {
    src: Src,
    name: String,
    images: Vec<(Src, String, &'a str)>,
}

#[derive(Default)]
struct Raw<'a> {
    dimension: Option<(Src, usize)>,
    basis: Option<(Src, Vec<String>)>,
    unit: Option<(Src, &'a str)>,
    products: Vec<(Src, String, String, &'a str)>,
    operators: Vec<OperatorBlock<'a>>,
    elements: Vec<(Src, String, &'a str)>,
    group: Option<(Src, Vec<String>)>,
    alpha: Option<(Src, AlphaSpec)>,
}

fn set_once<T>(slot: &mut Option<(Src, T)>, src: Src, value: T, what: &str) -> Result<(), FinAlgError> {
    if slot.is_some() {
        return Err(src.err(format!("`{what}` given twice")));
    }
    *slot = Some((src, value));
    Ok(())
}

fn split_assignment<'a>(src: &Src, rest: &'a str) -> Result<(&'a str, &'a str), FinAlgError> {
    rest.split_once('=')
        .map(|(l, r)| (l.trim(), r.trim()))
        .ok_or_else(|| src.err("expected `=`"))
}

fn identifier(src: &Src, s: &str) -> Result<String, FinAlgError> {
    if valid_label(s) {
        Ok(s.to_string())
    } else {
        Err(src.err(format!("`{s}` is not a valid name")))
    }
}

fn read_raw(text: &str) -> Result<Raw<'_>, FinAlgError> {
    let mut raw = Raw::default();
    let mut block: Option<OperatorBlock<'_>> = None;
    for (i, full) in text.lines().enumerate() {
        let body = full.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let src = Src { line: i + 1 };
        let (keyword, rest) = body.split_once(char::is_whitespace).unwrap_or((body, ""));
        let rest = rest.trim();

        if let Some(b) = block.as_mut() {
            if body == "end" {
                raw.operators.push(block.take().expect("inside a block"));
            } else {
                let (label, image) = body
                    .split_once("->")
                    .ok_or_else(|| src.err("expected `LABEL -> EXPR` or `end`"))?;
                let label = label.trim().to_string();
                b.images.push((src, label, image.trim()));
            }
            continue;
        }

        match keyword {
            "dimension" => {
                let n = rest.parse().map_err(|_| src.err("expected a dimension"))?;
                set_once(&mut raw.dimension, src, n, "dimension")?;
            }
            "basis" => {
                let labels = rest.split_whitespace().map(str::to_string).collect::<Vec<_>>();
                if labels.is_empty() {
                    return Err(src.err("empty basis"));
                }
                set_once(&mut raw.basis, src, labels, "basis")?;
            }
            "unit" => set_once(&mut raw.unit, src, rest, "unit")?,
            "product" => {
                let (lhs, rhs) = split_assignment(&src, rest)?;
                let factors: Vec<&str> = lhs.split_whitespace().collect();
                let [a, b] = factors.as_slice() else {
                    return Err(src.err("expected `product A B = EXPR`"));
                };
                let (a, b) = (a.to_string(), b.to_string());
                raw.products.push((src, a, b, rhs));
            }
            "operator" => {
                let name = identifier(&src, rest)?;
                block = Some(OperatorBlock {
                    src,
                    name,
                    images: Vec::new(),
                });
            }
            "element" => {
                let (name, rhs) = split_assignment(&src, rest)?;
                let name = identifier(&src, name)?;
                raw.elements.push((src, name, rhs));
            }
            "group" => {
                let names = rest.split_whitespace().map(str::to_string).collect::<Vec<_>>();
                if names.is_empty() {
                    return Err(src.err("empty group"));
                }
                set_once(&mut raw.group, src, names, "group")?;
            }
            "alpha" => {
                let spec = match rest.split_whitespace().collect::<Vec<_>>().as_slice() {
                    ["identity"] => AlphaSpec::Identity,
                    ["inner", a] => AlphaSpec::Inner(a.to_string()),
                    ["operator", o] => AlphaSpec::Operator(o.to_string()),
                    _ => return Err(src.err("expected `alpha identity`, `alpha inner NAME` or `alpha operator NAME`")),
                };
                set_once(&mut raw.alpha, src, spec, "alpha")?;
            }
            other => return Err(src.err(format!("unknown directive `{other}`"))),
        }
    }
    if let Some(b) = block {
        return Err(b.src.err(format!("operator {} is missing `end`", b.name)));
    }
    Ok(raw)
}

/// Linear combination of basis labels, rejecting products and scalars.
fn linear(src: &Src, text: &str, index: &BTreeMap<&str, usize>) -> Result<Vec<(usize, QLaurent)>, FinAlgError> {
    let FreeExpr(e) = src.expr(text)?;
    e.iter()
        .map(|(w, c)| match w.0.as_slice() {
            [label] => index
                .get(label.as_str())
                .map(|&k| (k, c.clone()))
                .ok_or_else(|| src.err(format!("unknown basis label `{label}`"))),
            _ => Err(src.err(format!("`{text}` must be a linear combination of basis labels"))),
        })
        .collect()
}

fn evaluate(src: &Src, text: &str, a: &StructAlgebra) -> Result<FinElem, FinAlgError> {
    let FreeExpr(e) = src.expr(text)?;
    let mut out = FinElem::zero();
    for (w, c) in e.iter() {
        let value = match w.0.split_first() {
            None => a.unit().cloned().ok_or_else(|| src.err("scalar terms need a unit"))?,
            Some((first, rest)) => {
                let lookup = |label: &String| {
                    a.basis_elem(label)
                        .ok_or_else(|| src.err(format!("unknown basis label `{label}`")))
                };
                let mut value = lookup(first)?;
                for label in rest {
                    value = a.mul(&value, &lookup(label)?);
                }
                value
            }
        };
        out.add_scaled(&value, c);
    }
    Ok(out)
}

impl Scenario {
    pub fn parse(text: &str) -> Result<Self, FinAlgError> {
        let raw = read_raw(text)?;
        let (basis_src, labels) = raw.basis.ok_or(FinAlgError::Scenario {
            line: 0,
            message: "missing `basis`".to_string(),
        })?;
        if let Some((src, n)) = &raw.dimension {
            if *n != labels.len() {
                return Err(src.err(format!("dimension {n} but {} basis labels", labels.len())));
            }
        }
        for l in &labels {
            identifier(&basis_src, l)?;
        }
        let index: BTreeMap<&str, usize> = labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
        if index.len() != labels.len() {
            return Err(basis_src.err("duplicate basis label"));
        }

        let mut constants = Vec::new();
        let mut defined = HashSet::new();
        for (src, a, b, rhs) in &raw.products {
            let (Some(&i), Some(&j)) = (index.get(a.as_str()), index.get(b.as_str())) else {
                return Err(src.err(format!("unknown basis label in `{} {}`", a, b)));
            };
            if !defined.insert((i, j)) {
                return Err(src.err(format!("product {a} {b} given twice")));
            }
            for (k, c) in linear(src, rhs, &index)? {
                constants.push((i, j, k, c));
            }
        }
        let unit = match &raw.unit {
            None => None,
            Some((src, text)) => {
                let mut cs = vec![QLaurent::zero(); labels.len()];
                for (k, c) in linear(src, text, &index)? {
                    cs[k] = &cs[k] + &c;
                }
                Some(cs)
            }
        };
        let algebra = StructAlgebra::new("A", &labels, constants, unit)?;

        let mut names = HashSet::new();
        let mut operators = Vec::new();
        for block in &raw.operators {
            if !names.insert(block.name.clone()) {
                return Err(block.src.err(format!("`{}` defined twice", block.name)));
            }
            let mut columns: Vec<Option<FinElem>> = vec![None; labels.len()];
            for (src, label, image) in &block.images {
                let &k = index
                    .get(label.as_str())
                    .ok_or_else(|| src.err(format!("unknown basis label `{label}`")))?;
                if columns[k].is_some() {
                    return Err(src.err(format!("image of {label} given twice")));
                }
                columns[k] = Some(evaluate(src, image, &algebra)?);
            }
            let columns = columns
                .into_iter()
                .zip(&labels)
                .map(|(c, l)| {
                    c.ok_or_else(|| {
                        block
                            .src
                            .err(format!("operator {} misses the image of {l}", block.name))
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            operators.push((
                block.name.clone(),
                LinOp::from_columns(algebra.basis().clone(), columns),
            ));
        }

        let mut elements = Vec::new();
        for (src, name, rhs) in &raw.elements {
            if !names.insert(name.clone()) {
                return Err(src.err(format!("`{name}` defined twice")));
            }
            elements.push((name.clone(), evaluate(src, rhs, &algebra)?));
        }

        let group = match raw.group {
            None => vec!["identity".to_string()],
            Some((src, group)) => {
                for g in &group {
                    if g != "identity" && !operators.iter().any(|(n, _)| n == g) {
                        return Err(src.err(format!("unknown operator `{g}`")));
                    }
                }
                group
            }
        };
        let alpha = match raw.alpha {
            None => AlphaSpec::Identity,
            Some((src, spec)) => {
                match &spec {
                    AlphaSpec::Inner(a) if !elements.iter().any(|(n, _)| n == a) => {
                        return Err(src.err(format!("unknown element `{a}`")))
                    }
                    AlphaSpec::Operator(o) if o != "identity" && !operators.iter().any(|(n, _)| n == o) => {
                        return Err(src.err(format!("unknown operator `{o}`")))
                    }
                    _ => {}
                }
                spec
            }
        };
        Ok(Self {
            algebra,
            operators,
            elements,
            group,
            alpha,
        })
    }

    pub fn operator(&self, name: &str) -> Option<LinOp> {
        if name == "identity" {
            return Some(LinOp::identity(self.algebra.basis().clone()));
        }
        self.operators.iter().find(|(n, _)| n == name).map(|(_, op)| op.clone())
    }

    pub fn element(&self, name: &str) -> Option<&FinElem> {
        self.elements.iter().find(|(n, _)| n == name).map(|(_, e)| e)
    }

    /// The listed group, verified.
    pub fn group(&self) -> Result<GroupBialgebra, FinAlgError> {
        let named = self
            .group
            .iter()
            .map(|g| {
                self.operator(g)
                    .map(|op| (g.clone(), op))
                    .ok_or_else(|| FinAlgError::Unknown(g.clone()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        GroupBialgebra::new(&self.algebra, named)
    }

    /// The twisting map named by `alpha`.
    pub fn alpha_operator(&self) -> Result<LinOp, FinAlgError> {
        match &self.alpha {
            AlphaSpec::Identity => Ok(LinOp::identity(self.algebra.basis().clone())),
            AlphaSpec::Inner(a) => {
                let a = self.element(a).ok_or_else(|| FinAlgError::Unknown(a.clone()))?;
                super::inner_automorphism(&self.algebra, a)
            }
            AlphaSpec::Operator(o) => self.operator(o).ok_or_else(|| FinAlgError::Unknown(o.clone())),
        }
    }

    /// Assembles `(k[G], A_α, ρ_α)`, checking every precondition.
    pub fn build(&self) -> Result<GroupDeformation, FinAlgError> {
        let group = self.group()?;
        match &self.alpha {
            AlphaSpec::Inner(name) => {
                let a = self.element(name).ok_or_else(|| FinAlgError::Unknown(name.clone()))?;
                build_inner_deformation(self.algebra.clone(), group, a)
            }
            _ => build_commuting_deformation(self.algebra.clone(), group, self.alpha_operator()?, "α"),
        }
    }

    /// Basis labels of the algebra.
    pub fn labels(&self) -> Vec<String> {
        self.algebra.test_basis().iter().map(ToString::to_string).collect()
    }
}

impl FromStr for Scenario {
    type Err = FinAlgError;
    fn from_str(s: &str) -> Result<Self, FinAlgError> {
        Self::parse(s)
    }
}
