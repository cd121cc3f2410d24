//! The affine plane `k[x, y]` over [`QLaurent`].
//!
//! The variable set is fixed to `{x, y}`. Generalizing to `n` variables only
//! needs [`Monomial`] to hold an exponent vector; every operation here is
//! written term-wise.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use crate::homcore::AlgCarrier;
use crate::linear::{BasisElem, LinComb, LinearMap};
use crate::parse::{self, ParseError, ParseRing, SymbolMode};
use crate::scalars::QLaurent;

/// The monomial `x^x y^y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub x: u32,
    pub y: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { x: 0, y: 0 };

    pub fn new(x: u32, y: u32) -> Self {
        Self { x, y }
    }

    pub fn degree(&self) -> u32 {
        self.x + self.y
    }
}

// Graded lexicographic with x > y: `1, x, y, x^2, xy, y^2, ...`.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| other.x.cmp(&self.x))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (name, e) in [("x", self.x), ("y", self.y)] {
            match e {
                0 => {}
                1 => parts.push(name.to_string()),
                _ => parts.push(format!("{name}^{e}")),
            }
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

impl BasisElem for Monomial {
    fn is_unit(&self) -> bool {
        *self == Self::ONE
    }
}

/// Element of `k[x, y]`.
pub type Poly = LinComb<Monomial>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    X,
    Y,
}

pub fn monomial(x: u32, y: u32) -> Poly {
    Poly::basis(Monomial::new(x, y))
}

pub fn var(v: Var) -> Poly {
    match v {
        Var::X => monomial(1, 0),
        Var::Y => monomial(0, 1),
    }
}

pub fn constant(c: QLaurent) -> Poly {
    Poly::term(Monomial::ONE, c)
}

fn mul_monomials(a: &Monomial, b: &Monomial) -> Poly {
    Poly::basis(Monomial::new(a.x + b.x, a.y + b.y))
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.bilinear(rhs, mul_monomials)
    }
}

pub fn poly_pow(p: &Poly, e: u32) -> Poly {
    (0..e).fold(constant(QLaurent::one()), |acc, _| &acc * p)
}

/// Formal partial derivative with respect to `v`.
pub fn partial_derivative(p: &Poly, v: Var) -> Poly {
    p.map_linear(|m| {
        let (e, lowered) = match v {
            Var::X if m.x > 0 => (m.x, Monomial::new(m.x - 1, m.y)),
            Var::Y if m.y > 0 => (m.y, Monomial::new(m.x, m.y - 1)),
            _ => return Poly::zero(),
        };
        Poly::term(lowered, QLaurent::from_int(e.into()))
    })
}

/// Sum of the terms of total degree exactly `n`.
pub fn graded_component(p: &Poly, n: u32) -> Poly {
    Poly::from_terms(p.iter().filter(|(m, _)| m.degree() == n).map(|(m, c)| (*m, c.clone())))
}

/// Largest total degree of a term, `None` for zero.
pub fn total_degree(p: &Poly) -> Option<u32> {
    p.support().map(Monomial::degree).max()
}

pub fn is_homogeneous(p: &Poly, n: u32) -> bool {
    p.support().all(|m| m.degree() == n)
}

/// All monomials of total degree `<= max_total_degree`, graded-lexicographic.
pub fn enumerate_monomials(max_total_degree: u32) -> Vec<Monomial> {
    (0..=max_total_degree).flat_map(homogeneous_basis).collect()
}

/// Monomial basis of the degree-`n` slice `x^n, x^(n-1) y, ..., y^n`.
pub fn homogeneous_basis(n: u32) -> impl Iterator<Item = Monomial> {
    (0..=n).rev().map(move |i| Monomial::new(i, n - i))
}

/// Unital algebra endomorphism of `k[x, y]` given by the images of `x` and `y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyEndo {
    pub image_of_x: Poly,
    pub image_of_y: Poly,
}

impl PolyEndo {
    pub fn new(image_of_x: Poly, image_of_y: Poly) -> Self {
        Self { image_of_x, image_of_y }
    }

    pub fn identity() -> Self {
        Self::new(var(Var::X), var(Var::Y))
    }

    /// `x ↦ cx·x`, `y ↦ cy·y`.
    pub fn diagonal(cx: QLaurent, cy: QLaurent) -> Self {
        Self::new(var(Var::X).scale(&cx), var(Var::Y).scale(&cy))
    }

    /// `P(x, y) ↦ P(q²x, qy)`.
    pub fn q_example() -> Self {
        Self::diagonal(QLaurent::q_pow(2), QLaurent::q_pow(1))
    }

    /// Applies the endomorphism to each generator image coefficient-wise
    /// (used for specializing q).
    pub fn map_coeffs(&self, f: impl Fn(&QLaurent) -> QLaurent) -> Self {
        Self::new(self.image_of_x.map_coeffs(&f), self.image_of_y.map_coeffs(&f))
    }

    /// Whether each generator image is homogeneous of degree one.
    pub fn is_degree_preserving(&self) -> bool {
        is_homogeneous(&self.image_of_x, 1) && is_homogeneous(&self.image_of_y, 1)
    }
}

impl LinearMap<Monomial> for PolyEndo {
    fn apply_basis(&self, m: &Monomial) -> Poly {
        &poly_pow(&self.image_of_x, m.x) * &poly_pow(&self.image_of_y, m.y)
    }
}

/// `apply_endo(e, p)`: substitution of generator images.
pub fn apply_endo(e: &PolyEndo, p: &Poly) -> Poly {
    e.apply(p)
}

impl ParseRing for Poly {
    fn from_scalar(c: QLaurent) -> Self {
        constant(c)
    }
    fn symbol(name: &str) -> Option<Self> {
        match name {
            "x" => Some(var(Var::X)),
            "y" => Some(var(Var::Y)),
            _ => None,
        }
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn inverse(&self) -> Option<Self> {
        match self.iter().collect::<Vec<_>>().as_slice() {
            [(m, c)] if m.is_unit() => c.inverse().ok().map(constant),
            _ => None,
        }
    }
}

/// Parses the sparse text form, e.g. `q^2*x^2*y + 3*x`.
pub fn parse_poly(s: &str) -> Result<Poly, ParseError> {
    parse::parse(s, SymbolMode::SingleLetter)
}

impl FromStr for Monomial {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let p = parse_poly(s)?;
        match p.iter().collect::<Vec<_>>().as_slice() {
            [(m, c)] if c.is_one() => Ok(**m),
            _ => Err(ParseError::new(0, format!("`{s}` is not a monomial"))),
        }
    }
}

/// The classical algebra `(k[x, y], μ, Id)` truncated to total degree `<= bound`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PolyAlgebra {
    pub bound: u32,
}

impl AlgCarrier for PolyAlgebra {
    type B = Monomial;

    fn describe(&self) -> String {
        format!("k[x,y] deg≤{}", self.bound)
    }
    fn test_basis(&self) -> Vec<Monomial> {
        enumerate_monomials(self.bound)
    }
    fn mul_basis(&self, a: &Monomial, b: &Monomial) -> Poly {
        mul_monomials(a, b)
    }
    fn alpha_basis(&self, a: &Monomial) -> Poly {
        Poly::basis(*a)
    }
    fn in_range(&self, b: &Monomial) -> bool {
        b.degree() <= self.bound
    }
}
