//! The universal enveloping bialgebra of sl(2).
//!
//! Generators `X, Y, Z` satisfy `[X,Y] = Z`, `[X,Z] = -2X`, `[Y,Z] = 2Y`.
//! Elements are kept in the PBW basis `X^a Y^b Z^c`. Products are normalized
//! with closed-form commutation formulas:
//!
//! ```text
//! Z^c X   = X (Z + 2)^c
//! Z^c Y   = Y (Z - 2)^c
//! Y^b X   = X Y^b - b Y^(b-1) (Z - b + 1)
//! ```
//!
//! The generators are primitive, so `Δ(X^a Y^b Z^c)` is a product of three
//! binomial expansions whose tensor factors are already in PBW order.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::Mul;
use std::str::FromStr;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::homcore::{AlgCarrier, BialgCarrier, BracketCarrier};
use crate::linear::{BasisElem, LinComb, LinearMap, Tensor, Tensor2};
use crate::parse::{self, ParseError, ParseRing, SymbolMode};
use crate::report::{AxiomId, CheckReport, Counterexample};
use crate::scalars::{QLaurent, Rational};

/// The PBW monomial `X^a Y^b Z^c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Pbw {
    pub a: u32,
    pub b: u32,
    pub c: u32,
}

impl Pbw {
    pub const ONE: Pbw = Pbw { a: 0, b: 0, c: 0 };
    pub const X: Pbw = Pbw { a: 1, b: 0, c: 0 };
    pub const Y: Pbw = Pbw { a: 0, b: 1, c: 0 };
    pub const Z: Pbw = Pbw { a: 0, b: 0, c: 1 };

    pub fn new(a: u32, b: u32, c: u32) -> Self {
        Self { a, b, c }
    }

    pub fn degree(&self) -> u32 {
        self.a + self.b + self.c
    }
}

// Graded lexicographic with X > Y > Z: `1, X, Y, Z, X^2, X Y, ...`.
impl Ord for Pbw {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.a.cmp(&self.a))
            .then_with(|| other.b.cmp(&self.b))
    }
}

impl PartialOrd for Pbw {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Pbw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (name, e) in [("X", self.a), ("Y", self.b), ("Z", self.c)] {
            match e {
                0 => {}
                1 => parts.push(name.to_string()),
                _ => parts.push(format!("{name}^{e}")),
            }
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join(" "))
        }
    }
}

impl BasisElem for Pbw {
    fn is_unit(&self) -> bool {
        *self == Self::ONE
    }
}

/// Element of U(sl(2)).
pub type UElem = LinComb<Pbw>;
pub type Tensor2U = Tensor2<Pbw>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Gen {
    X,
    Y,
    Z,
}

impl Gen {
    pub const ALL: [Gen; 3] = [Gen::X, Gen::Y, Gen::Z];

    pub fn pbw(self) -> Pbw {
        match self {
            Gen::X => Pbw::X,
            Gen::Y => Pbw::Y,
            Gen::Z => Pbw::Z,
        }
    }

    pub fn elem(self) -> UElem {
        UElem::basis(self.pbw())
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.pbw().fmt(f)
    }
}

/// Coefficients of a polynomial in `Z`, lowest degree first.
type ZPoly = Vec<BigInt>;

fn zpoly_mul(p: &ZPoly, r: &ZPoly) -> ZPoly {
    let mut out = vec![BigInt::zero(); p.len() + r.len() - 1];
    for (i, a) in p.iter().enumerate() {
        for (j, b) in r.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    out
}

/// `(Z + s)^c`.
fn shifted_power(s: i64, c: u32) -> ZPoly {
    (0..=c)
        .map(|k| binomial(BigInt::from(c), BigInt::from(k)) * BigInt::from(s).pow(c - k))
        .collect()
}

/// `scale * X^a Y^b * zpoly(Z)` as a PBW element.
fn with_z_poly(out: &mut UElem, a: u32, b: u32, zpoly: &ZPoly, scale: &BigInt) {
    for (k, coeff) in zpoly.iter().enumerate() {
        let c = coeff * scale;
        if !c.is_zero() {
            out.add_term(
                Pbw::new(a, b, k as u32),
                &QLaurent::from_rational(Rational::from_integer(c)),
            );
        }
    }
}

/// `m · g` in PBW normal form.
fn mul_by_generator(m: &Pbw, g: Gen) -> UElem {
    let mut out = UElem::zero();
    let one = BigInt::one();
    match g {
        Gen::Z => out.add_term(Pbw::new(m.a, m.b, m.c + 1), &QLaurent::one()),
        Gen::Y => with_z_poly(&mut out, m.a, m.b + 1, &shifted_power(-2, m.c), &one),
        Gen::X => {
            let tail = shifted_power(2, m.c);
            with_z_poly(&mut out, m.a + 1, m.b, &tail, &one);
            if m.b > 0 {
                let lin = vec![BigInt::from(1 - i64::from(m.b)), BigInt::one()];
                with_z_poly(&mut out, m.a, m.b - 1, &zpoly_mul(&lin, &tail), &-BigInt::from(m.b));
            }
        }
    }
    out
}

fn product_cache() -> &'static RwLock<HashMap<(Pbw, Pbw), UElem>> {
    static CACHE: OnceLock<RwLock<HashMap<(Pbw, Pbw), UElem>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Product of two PBW monomials in normal form.
pub fn pbw_mul_monomials(u: &Pbw, v: &Pbw) -> UElem {
    // already ordered: u = X^a, or v = Z^c
    if u.b == 0 && u.c == 0 {
        return UElem::basis(Pbw::new(u.a + v.a, v.b, v.c));
    }
    if v.a == 0 && v.b == 0 {
        return UElem::basis(Pbw::new(u.a, u.b, u.c + v.c));
    }
    if let Some(hit) = product_cache().read().expect("cache poisoned").get(&(*u, *v)) {
        return hit.clone();
    }
    let mut acc = UElem::basis(*u);
    let letters = std::iter::repeat_n(Gen::X, v.a as usize)
        .chain(std::iter::repeat_n(Gen::Y, v.b as usize))
        .chain(std::iter::repeat_n(Gen::Z, v.c as usize));
    for g in letters {
        acc = acc.map_linear(|m| mul_by_generator(m, g));
    }
    product_cache()
        .write()
        .expect("cache poisoned")
        .insert((*u, *v), acc.clone());
    acc
}

/// Associative product of U(sl(2)) in PBW normal form.
pub fn pbw_mul(u: &UElem, v: &UElem) -> UElem {
    u.bilinear(v, pbw_mul_monomials)
}

impl<'a> Mul<&'a UElem> for &'a UElem {
    type Output = UElem;
    fn mul(self, rhs: &UElem) -> UElem {
        pbw_mul(self, rhs)
    }
}

pub fn upow(u: &UElem, e: u32) -> UElem {
    (0..e).fold(UElem::basis(Pbw::ONE), |acc, _| pbw_mul(&acc, u))
}

/// Commutator `uv - vu`.
pub fn bracket(u: &UElem, v: &UElem) -> UElem {
    &pbw_mul(u, v) - &pbw_mul(v, u)
}

fn binom(n: u32, k: u32) -> QLaurent {
    QLaurent::from_rational(Rational::from_integer(binomial(BigInt::from(n), BigInt::from(k))))
}

/// Coproduct on a PBW monomial.
pub fn comul_monomial(m: &Pbw) -> Tensor2U {
    let mut out = Tensor2U::zero();
    for i in 0..=m.a {
        for j in 0..=m.b {
            for k in 0..=m.c {
                let c = &(&binom(m.a, i) * &binom(m.b, j)) * &binom(m.c, k);
                out.add_term(Tensor(Pbw::new(i, j, k), Pbw::new(m.a - i, m.b - j, m.c - k)), &c);
            }
        }
    }
    out
}

/// Algebra morphism `Δ: U → U⊗U` with primitive generators.
pub fn comul(u: &UElem) -> Tensor2U {
    u.map_linear(comul_monomial)
}

/// Product in `U⊗U`: `(a⊗b)(c⊗d) = ac ⊗ bd`.
pub fn tensor_mul(s: &Tensor2U, t: &Tensor2U) -> Tensor2U {
    s.bilinear(t, |Tensor(a, b), Tensor(c, d)| {
        pbw_mul_monomials(a, c).tensor(&pbw_mul_monomials(b, d))
    })
}

/// All PBW monomials of total degree `<= max_total_degree`, graded-lexicographic.
pub fn enumerate_pbw(max_total_degree: u32) -> Vec<Pbw> {
    let mut out = Vec::new();
    for d in 0..=max_total_degree {
        for a in (0..=d).rev() {
            for b in (0..=d - a).rev() {
                out.push(Pbw::new(a, b, d - a - b));
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum UeaError {
    #[error("image of {generator} is `{image}`, which is not in span{{X, Y, Z}}")]
    NotInLieSpan { generator: Gen, image: String },
    #[error("map is not a Lie algebra endomorphism: {} failing pair(s)", .0.counterexamples.len())]
    NotLieEndomorphism(Box<CheckReport>),
}

/// A linear map `sl(2) → sl(2)` given by the images of `X, Y, Z`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UEndo {
    pub image_of_x: UElem,
    pub image_of_y: UElem,
    pub image_of_z: UElem,
}

impl UEndo {
    pub fn new(image_of_x: UElem, image_of_y: UElem, image_of_z: UElem) -> Self {
        Self {
            image_of_x,
            image_of_y,
            image_of_z,
        }
    }

    pub fn identity() -> Self {
        Self::new(Gen::X.elem(), Gen::Y.elem(), Gen::Z.elem())
    }

    /// `X ↦ qX`, `Y ↦ q⁻¹Y`, `Z ↦ Z`.
    pub fn q_example() -> Self {
        Self::new(
            Gen::X.elem().scale(&QLaurent::q_pow(1)),
            Gen::Y.elem().scale(&QLaurent::q_pow(-1)),
            Gen::Z.elem(),
        )
    }

    pub fn image(&self, g: Gen) -> &UElem {
        match g {
            Gen::X => &self.image_of_x,
            Gen::Y => &self.image_of_y,
            Gen::Z => &self.image_of_z,
        }
    }

    pub fn map_coeffs(&self, f: impl Fn(&QLaurent) -> QLaurent) -> Self {
        Self::new(
            self.image_of_x.map_coeffs(&f),
            self.image_of_y.map_coeffs(&f),
            self.image_of_z.map_coeffs(&f),
        )
    }

    /// Value on an element of the Lie span.
    fn apply_lie(&self, u: &UElem) -> UElem {
        u.map_linear(|m| match (m.a, m.b, m.c) {
            (1, 0, 0) => self.image_of_x.clone(),
            (0, 1, 0) => self.image_of_y.clone(),
            (0, 0, 1) => self.image_of_z.clone(),
            _ => unreachable!("bracket of Lie elements left the Lie span"),
        })
    }
}

fn in_lie_span(u: &UElem) -> bool {
    u.support().all(|m| m.degree() == 1)
}

/// Checks `α([u,v]) = [α(u), α(v)]` over all pairs of generators.
pub fn is_lie_endo(e: &UEndo) -> Result<CheckReport, UeaError> {
    for g in Gen::ALL {
        if !in_lie_span(e.image(g)) {
            return Err(UeaError::NotInLieSpan {
                generator: g,
                image: e.image(g).to_string(),
            });
        }
    }
    let mut failures = Vec::new();
    for u in Gen::ALL {
        for v in Gen::ALL {
            let lhs = e.apply_lie(&bracket(&u.elem(), &v.elem()));
            let rhs = bracket(e.image(u), e.image(v));
            if lhs != rhs {
                failures.push(Counterexample::new(vec![u.to_string(), v.to_string()], lhs, rhs));
            }
        }
    }
    Ok(CheckReport::new(AxiomId::LieEndomorphism, "sl(2)", 9, failures))
}

/// The unique unital algebra endomorphism of U(sl(2)) extending a Lie
/// endomorphism of sl(2).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UAlgMap {
    generators: UEndo,
}

impl UAlgMap {
    pub fn generators(&self) -> &UEndo {
        &self.generators
    }

    pub fn identity() -> Self {
        Self {
            generators: UEndo::identity(),
        }
    }
}

/// Extends a Lie endomorphism linearly and multiplicatively with `1 ↦ 1`.
pub fn extend_lie_endo(e: &UEndo) -> Result<UAlgMap, UeaError> {
    let report = is_lie_endo(e)?;
    if !report.passed() {
        return Err(UeaError::NotLieEndomorphism(Box::new(report)));
    }
    Ok(UAlgMap { generators: e.clone() })
}

impl LinearMap<Pbw> for UAlgMap {
    fn apply_basis(&self, m: &Pbw) -> UElem {
        let g = &self.generators;
        let xy = pbw_mul(&upow(&g.image_of_x, m.a), &upow(&g.image_of_y, m.b));
        pbw_mul(&xy, &upow(&g.image_of_z, m.c))
    }
}

pub fn apply_uendo(h: &UAlgMap, u: &UElem) -> UElem {
    h.apply(u)
}

impl ParseRing for UElem {
    fn from_scalar(c: QLaurent) -> Self {
        UElem::term(Pbw::ONE, c)
    }
    fn symbol(name: &str) -> Option<Self> {
        match name {
            "X" => Some(Gen::X.elem()),
            "Y" => Some(Gen::Y.elem()),
            "Z" => Some(Gen::Z.elem()),
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
        pbw_mul(self, other)
    }
    fn inverse(&self) -> Option<Self> {
        match self.iter().collect::<Vec<_>>().as_slice() {
            [(m, c)] if m.is_unit() => c.inverse().ok().map(|c| UElem::term(Pbw::ONE, c)),
            _ => None,
        }
    }
}

/// Parses text such as `X^2 Y - q*Z` (juxtaposition multiplies in U).
pub fn parse_uelem(s: &str) -> Result<UElem, ParseError> {
    parse::parse(s, SymbolMode::SingleLetter)
}

impl FromStr for Pbw {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let u = parse_uelem(s)?;
        match u.iter().collect::<Vec<_>>().as_slice() {
            [(m, c)] if c.is_one() => Ok(**m),
            _ => Err(ParseError::new(0, format!("`{s}` is not a PBW monomial"))),
        }
    }
}

/// The classical bialgebra `(U(sl(2)), μ, Δ, Id)` truncated to PBW degree `<= bound`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Sl2Bialgebra {
    pub bound: u32,
}

impl AlgCarrier for Sl2Bialgebra {
    type B = Pbw;

    fn describe(&self) -> String {
        format!("U(sl2) deg≤{}", self.bound)
    }
    fn test_basis(&self) -> Vec<Pbw> {
        enumerate_pbw(self.bound)
    }
    fn mul_basis(&self, a: &Pbw, b: &Pbw) -> UElem {
        pbw_mul_monomials(a, b)
    }
    fn alpha_basis(&self, a: &Pbw) -> UElem {
        UElem::basis(*a)
    }
    fn in_range(&self, b: &Pbw) -> bool {
        b.degree() <= self.bound
    }
}

impl BialgCarrier for Sl2Bialgebra {
    fn comul_basis(&self, a: &Pbw) -> Tensor2U {
        comul_monomial(a)
    }
    fn tensor_mul(&self, s: &Tensor2U, t: &Tensor2U) -> Tensor2U {
        tensor_mul(s, t)
    }
}

/// sl(2) itself, as the span of `X, Y, Z` inside U(sl(2)) with the commutator bracket.
#[derive(Debug, Clone, Copy, Default)]
pub struct Sl2Lie;

impl BracketCarrier for Sl2Lie {
    type B = Pbw;

    fn describe(&self) -> String {
        "sl(2)".to_string()
    }
    fn test_basis(&self) -> Vec<Pbw> {
        Gen::ALL.iter().map(|g| g.pbw()).collect()
    }
    fn bracket_basis(&self, a: &Pbw, b: &Pbw) -> UElem {
        bracket(&UElem::basis(*a), &UElem::basis(*b))
    }
    fn alpha_basis(&self, a: &Pbw) -> UElem {
        UElem::basis(*a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(s: &str) -> UElem {
        parse_uelem(s).unwrap()
    }

    #[test]
    fn defining_relations() {
        assert_eq!(u("Y X"), u("X Y - Z"));
        assert_eq!(u("X X"), UElem::basis(Pbw::new(2, 0, 0)));
        assert_eq!(u("Z X"), u("X Z + 2X"));
        assert_eq!(u("Z Y"), u("Y Z - 2Y"));
        assert_eq!(bracket(&u("X"), &u("Y")), u("Z"));
        assert_eq!(bracket(&u("X"), &u("Z")), u("-2X"));
        assert_eq!(bracket(&u("Y"), &u("Z")), u("2Y"));
    }

    #[test]
    fn y_power_commutation() {
        // Y^2 X = X Y^2 - 2 Y Z + 2 Y
        assert_eq!(u("Y^2 X"), u("X Y^2 - 2 Y Z + 2 Y"));
    }

    #[test]
    fn coproduct_examples() {
        let xy = comul(&u("X Y"));
        let expected = Tensor2U::from_terms(
            [
                (Pbw::new(1, 1, 0), Pbw::ONE),
                (Pbw::ONE, Pbw::new(1, 1, 0)),
                (Pbw::X, Pbw::Y),
                (Pbw::Y, Pbw::X),
            ]
            .map(|(a, b)| (Tensor(a, b), QLaurent::one())),
        );
        assert_eq!(xy, expected);
        assert_eq!(comul(&u("1")), Tensor2U::basis(Tensor(Pbw::ONE, Pbw::ONE)));
        let x = comul(&u("X"));
        assert_eq!(comul(&u("X^2")), tensor_mul(&x, &x));
        assert_eq!(comul(&u("X^2")).coeff(&Tensor(Pbw::X, Pbw::X)), QLaurent::from_int(2));
    }

    #[test]
    fn lie_endomorphism_checks() {
        assert!(is_lie_endo(&UEndo::q_example()).unwrap().passed());
        assert!(is_lie_endo(&UEndo::identity()).unwrap().passed());
        let swap = UEndo::new(u("Y"), u("X"), u("Z"));
        let report = is_lie_endo(&swap).unwrap();
        assert!(!report.passed());
        let cx = report.find(&["X", "Y"]).expect("(X, Y) must fail");
        assert_eq!(cx.lhs, "Z");
        assert_eq!(cx.rhs, "-Z");
        assert!(matches!(extend_lie_endo(&swap), Err(UeaError::NotLieEndomorphism(_))));
        let quadratic = UEndo::new(u("X^2"), u("Y"), u("Z"));
        assert!(matches!(is_lie_endo(&quadratic), Err(UeaError::NotInLieSpan { .. })));
    }

    #[test]
    fn q_extension_on_monomials() {
        let h = extend_lie_endo(&UEndo::q_example()).unwrap();
        for m in enumerate_pbw(4) {
            let expected = UElem::term(m, QLaurent::q_pow(i64::from(m.a) - i64::from(m.b)));
            assert_eq!(apply_uendo(&h, &UElem::basis(m)), expected);
        }
        assert_eq!(apply_uendo(&h, &u("X Y")), u("X Y"));
        assert_eq!(apply_uendo(&h, &u("1")), u("1"));
        let id = extend_lie_endo(&UEndo::identity()).unwrap();
        assert_eq!(apply_uendo(&id, &u("X Y^2 Z - 3")), u("X Y^2 Z - 3"));
    }

    #[test]
    fn pbw_enumeration() {
        assert_eq!(enumerate_pbw(0), vec![Pbw::ONE]);
        assert_eq!(enumerate_pbw(1), vec![Pbw::ONE, Pbw::X, Pbw::Y, Pbw::Z]);
        for d in 0..6u32 {
            let ms = enumerate_pbw(d);
            assert_eq!(ms.len() as u32, (d + 1) * (d + 2) * (d + 3) / 6);
            assert!(ms.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn text_forms() {
        let e = u("q*X^2 Y Z - 1/2");
        assert_eq!(e.to_string(), "-1/2 + q*X^2 Y Z");
        assert_eq!(u(&e.to_string()), e);
        assert_eq!("X Y^2".parse::<Pbw>().unwrap(), Pbw::new(1, 2, 0));
        assert!("Y X".parse::<Pbw>().is_err());
    }
}
