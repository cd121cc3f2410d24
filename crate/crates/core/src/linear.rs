//! Sparse linear combinations over [`QLaurent`] and linear maps between them.
//!
//! Every carrier in the crate (polynomials, PBW words, structure-constant
//! algebras, tensor powers of these) stores its elements as a [`LinComb`]
//! over some basis type. Maps are defined on basis elements and extended
//! linearly, so linearity holds by construction.

use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Neg, Sub};

use crate::scalars::QLaurent;

/// A basis label. Ordering fixes the canonical term order of a [`LinComb`].
pub trait BasisElem: Ord + Clone + Hash + fmt::Debug + fmt::Display + Send + Sync {
    /// True for the multiplicative unit, which renders as a bare scalar.
    fn is_unit(&self) -> bool {
        false
    }
}

/// Two-fold tensor of basis labels.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tensor<B, C>(pub B, pub C);

/// Three-fold tensor of basis labels, compared flat so that both
/// bracketings of a triple tensor land in the same type.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tensor3<B>(pub B, pub B, pub B);

impl<B: fmt::Display, C: fmt::Display> fmt::Display for Tensor<B, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}⊗{}", self.0, self.1)
    }
}

impl<B: fmt::Display> fmt::Display for Tensor3<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}⊗{}⊗{}", self.0, self.1, self.2)
    }
}

impl<B: BasisElem, C: BasisElem> BasisElem for Tensor<B, C> {}
impl<B: BasisElem> BasisElem for Tensor3<B> {}

/// Finite linear combination `Σ c_b · b` with no zero coefficients stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinComb<B: Ord> {
    terms: BTreeMap<B, QLaurent>,
}

pub type Tensor2<B> = LinComb<Tensor<B, B>>;

impl<B: Ord> Default for LinComb<B> {
    fn default() -> Self {
        Self { terms: BTreeMap::new() }
    }
}

impl<B: BasisElem> LinComb<B> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(b: B) -> Self {
        Self::term(b, QLaurent::one())
    }

    pub fn term(b: B, c: QLaurent) -> Self {
        let mut out = Self::zero();
        out.add_term(b, &c);
        out
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (B, QLaurent)>) -> Self {
        let mut out = Self::zero();
        for (b, c) in terms {
            out.add_term(b, &c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, b: &B) -> QLaurent {
        self.terms.get(b).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&B, &QLaurent)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &B> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, b: B, c: &QLaurent) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&b) {
            Some(slot) => {
                *slot += c;
                if slot.is_zero() {
                    self.terms.remove(&b);
                }
            }
            None => {
                self.terms.insert(b, c.clone());
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &Self, c: &QLaurent) {
        if c.is_one() {
            for (b, d) in &other.terms {
                self.add_term(b.clone(), d);
            }
        } else {
            for (b, d) in &other.terms {
                self.add_term(b.clone(), &(c * d));
            }
        }
    }

    pub fn scale(&self, c: &QLaurent) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(b, d)| (b.clone(), c * d)).collect(),
        }
    }

    /// Applies `f` to every coefficient, dropping terms that become zero.
    pub fn map_coeffs(&self, f: impl Fn(&QLaurent) -> QLaurent) -> Self {
        Self::from_terms(self.terms.iter().map(|(b, c)| (b.clone(), f(c))))
    }

    /// Extends a map on basis labels linearly.
    pub fn map_linear<C: BasisElem>(&self, f: impl Fn(&B) -> LinComb<C>) -> LinComb<C> {
        let mut out = LinComb::zero();
        for (b, c) in &self.terms {
            out.add_scaled(&f(b), c);
        }
        out
    }

    /// Extends a map on pairs of basis labels bilinearly.
    pub fn bilinear<C: BasisElem, D: BasisElem>(
        &self,
        other: &LinComb<C>,
        f: impl Fn(&B, &C) -> LinComb<D>,
    ) -> LinComb<D> {
        let mut out = LinComb::zero();
        for (b, c) in &self.terms {
            for (b2, c2) in &other.terms {
                out.add_scaled(&f(b, b2), &(c * c2));
            }
        }
        out
    }

    pub fn tensor<C: BasisElem>(&self, other: &LinComb<C>) -> LinComb<Tensor<B, C>> {
        self.bilinear(other, |a, b| LinComb::basis(Tensor(a.clone(), b.clone())))
    }
}

impl<B: BasisElem, C: BasisElem> LinComb<Tensor<B, C>> {
    /// `(f ⊗ g)` applied to a two-fold tensor.
    pub fn map_tensor<B2: BasisElem, C2: BasisElem>(
        &self,
        f: impl Fn(&B) -> LinComb<B2>,
        g: impl Fn(&C) -> LinComb<C2>,
    ) -> LinComb<Tensor<B2, C2>> {
        self.map_linear(|Tensor(a, b)| f(a).tensor(&g(b)))
    }

    /// The twist `a ⊗ b ↦ b ⊗ a`.
    pub fn swap(&self) -> LinComb<Tensor<C, B>> {
        self.map_linear(|Tensor(a, b)| LinComb::basis(Tensor(b.clone(), a.clone())))
    }
}

impl<'a, B: BasisElem> Add<&'a LinComb<B>> for &'a LinComb<B> {
    type Output = LinComb<B>;
    fn add(self, rhs: &LinComb<B>) -> LinComb<B> {
        let mut out = self.clone();
        out.add_scaled(rhs, &QLaurent::one());
        out
    }
}

impl<'a, B: BasisElem> Sub<&'a LinComb<B>> for &'a LinComb<B> {
    type Output = LinComb<B>;
    fn sub(self, rhs: &LinComb<B>) -> LinComb<B> {
        let mut out = self.clone();
        out.add_scaled(rhs, &QLaurent::from_int(-1));
        out
    }
}

impl<B: BasisElem> Neg for &LinComb<B> {
    type Output = LinComb<B>;
    fn neg(self) -> LinComb<B> {
        self.scale(&QLaurent::from_int(-1))
    }
}

impl<B: BasisElem> fmt::Display for LinComb<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let only = self.terms.len() == 1;
        for (n, (b, c)) in self.terms.iter().enumerate() {
            let rendered = render_term(b, c, only);
            match (n, rendered.strip_prefix('-')) {
                (0, _) => f.write_str(&rendered)?,
                (_, Some(rest)) => write!(f, " - {rest}")?,
                (_, None) => write!(f, " + {rendered}")?,
            }
        }
        Ok(())
    }
}

fn render_term<B: BasisElem>(b: &B, c: &QLaurent, only: bool) -> String {
    if b.is_unit() {
        return if c.is_single_term() || only {
            c.to_string()
        } else {
            format!("({c})")
        };
    }
    if c.is_one() {
        return b.to_string();
    }
    if (-c).is_one() {
        return format!("-{b}");
    }
    if c.is_single_term() {
        format!("{c}*{b}")
    } else {
        format!("({c})*{b}")
    }
}

impl<B: BasisElem> fmt::Debug for LinComb<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

/// A linear map given by its values on basis labels.
pub trait LinearMap<B: BasisElem>: Sync {
    fn apply_basis(&self, b: &B) -> LinComb<B>;

    fn apply(&self, v: &LinComb<B>) -> LinComb<B> {
        v.map_linear(|b| self.apply_basis(b))
    }

    /// `f^n`, with `f^0` the identity.
    fn apply_pow(&self, v: &LinComb<B>, n: u32) -> LinComb<B> {
        (0..n).fold(v.clone(), |acc, _| self.apply(&acc))
    }
}

impl<B: BasisElem, T: LinearMap<B> + ?Sized> LinearMap<B> for &T {
    fn apply_basis(&self, b: &B) -> LinComb<B> {
        (**self).apply_basis(b)
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Identity;

impl<B: BasisElem> LinearMap<B> for Identity {
    fn apply_basis(&self, b: &B) -> LinComb<B> {
        LinComb::basis(b.clone())
    }
}

/// Wraps a closure on basis labels as a [`LinearMap`].
#[derive(Clone, Copy)]
pub struct FnMap<F>(pub F);

impl<B: BasisElem, F: Fn(&B) -> LinComb<B> + Sync> LinearMap<B> for FnMap<F> {
    fn apply_basis(&self, b: &B) -> LinComb<B> {
        (self.0)(b)
    }
}

/// `outer ∘ inner`.
#[derive(Debug, Clone, Copy)]
pub struct Composed<F, G> {
    pub outer: F,
    pub inner: G,
}

impl<B: BasisElem, F: LinearMap<B>, G: LinearMap<B>> LinearMap<B> for Composed<F, G> {
    fn apply_basis(&self, b: &B) -> LinComb<B> {
        self.outer.apply(&self.inner.apply_basis(b))
    }
}

/// `f^n`.
#[derive(Debug, Clone, Copy)]
pub struct Power<F> {
    pub map: F,
    pub exponent: u32,
}

impl<B: BasisElem, F: LinearMap<B>> LinearMap<B> for Power<F> {
    fn apply_basis(&self, b: &B) -> LinComb<B> {
        self.map.apply_pow(&LinComb::basis(b.clone()), self.exponent)
    }
}

impl BasisElem for usize {}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(terms: &[(usize, i64)]) -> LinComb<usize> {
        LinComb::from_terms(terms.iter().map(|(b, c)| (*b, QLaurent::from_int(*c))))
    }

    #[test]
    fn cancellation_leaves_canonical_zero() {
        let a = v(&[(1, 2), (3, -1)]);
        assert!((&a - &a).is_zero());
        assert_eq!(&a + &(-&a), LinComb::zero());
    }

    #[test]
    fn bilinear_extension() {
        let a = v(&[(1, 2), (2, 1)]);
        let b = v(&[(10, 3)]);
        let t = a.tensor(&b);
        assert_eq!(t.coeff(&Tensor(1, 10)), QLaurent::from_int(6));
        assert_eq!(t.coeff(&Tensor(2, 10)), QLaurent::from_int(3));
        assert_eq!(t.swap().coeff(&Tensor(10, 1)), QLaurent::from_int(6));
    }

    #[test]
    fn power_and_composition() {
        let shift = FnMap(|b: &usize| LinComb::basis(b + 1));
        let twice = Composed {
            outer: shift,
            inner: shift,
        };
        let p = Power {
            map: shift,
            exponent: 2,
        };
        assert_eq!(twice.apply_basis(&0), LinComb::basis(2));
        assert_eq!(p.apply_basis(&0), LinComb::basis(2));
        assert_eq!(
            Power {
                map: shift,
                exponent: 0
            }
            .apply_basis(&4),
            LinComb::basis(4)
        );
    }

    #[test]
    fn renders_signs_and_grouped_coefficients() {
        let a = LinComb::from_terms([
            (1usize, QLaurent::from_int(-1)),
            (2, QLaurent::q_pow(2)),
            (3, &QLaurent::one() + &QLaurent::q_pow(1)),
        ]);
        assert_eq!(a.to_string(), "-1 + q^2*2 + (1 + q)*3");
    }
}
