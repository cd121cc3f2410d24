//! The U(sl(2))-module algebra structure on `k[x, y]` and its q-deformation.
//!
//! Generators act by differential operators
//!
//! ```text
//! X = x ∂/∂y      Y = y ∂/∂x      Z = x ∂/∂x - y ∂/∂y
//! ```
//!
//! and a PBW monomial `X^a Y^b Z^c` acts as the composite operator, rightmost
//! factor first. The deformation uses `α_A(P) = P(q²x, qy)` on the plane and
//! the extension `α_U` of `α_L: X ↦ qX, Y ↦ q⁻¹Y, Z ↦ Z`.

use thiserror::Error;

use crate::homcore::{
    self, check_comul_morphism, check_hom_associativity, check_hom_coassociativity, check_hom_jacobi,
    check_module_axiom, check_module_hom_algebra_at_power, check_mu_module_morphism_at_power, check_multiplicativity,
    CheckError, ModCarrier,
};
use crate::polyalg::{
    apply_endo, enumerate_monomials, homogeneous_basis, is_homogeneous, monomial, partial_derivative, var, Monomial,
    Poly, PolyAlgebra, PolyEndo, Var,
};
use crate::report::{AxiomId, CheckReport, Counterexample};
use crate::scalars::{QLaurent, Rational, ScalarError};
use crate::uea_sl2::{extend_lie_endo, is_lie_endo, Gen, Pbw, Sl2Bialgebra, Sl2Lie, UAlgMap, UElem, UEndo, UeaError};

#[derive(Debug, Error)]
pub enum ActionError {
    #[error("A_{degree} is not closed under {generator}: {generator}·{monomial} = {image}")]
    NotClosed {
        degree: u32,
        generator: Gen,
        monomial: Monomial,
        image: String,
    },
    #[error("{monomial} is not a Z-eigenvector: Z·{monomial} = {image}")]
    NotWeightVector { monomial: Monomial, image: String },
    #[error(transparent)]
    Check(#[from] CheckError),
    #[error(transparent)]
    Uea(#[from] UeaError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// Action of a single generator as a differential operator.
pub fn act_generator(g: Gen, p: &Poly) -> Poly {
    let x = var(Var::X);
    let y = var(Var::Y);
    match g {
        Gen::X => &x * &partial_derivative(p, Var::Y),
        Gen::Y => &y * &partial_derivative(p, Var::X),
        Gen::Z => &(&x * &partial_derivative(p, Var::X)) - &(&y * &partial_derivative(p, Var::Y)),
    }
}

/// `X^a Y^b Z^c · x^i y^j`.
pub fn act_monomial(z: &Pbw, m: &Monomial) -> Poly {
    let mut p = Poly::basis(*m);
    for (g, e) in [(Gen::Z, z.c), (Gen::Y, z.b), (Gen::X, z.a)] {
        for _ in 0..e {
            if p.is_zero() {
                return p;
            }
            p = act_generator(g, &p);
        }
    }
    p
}

/// `ρ(z ⊗ p)`, bilinear in both arguments.
pub fn act(z: &UElem, p: &Poly) -> Poly {
    z.bilinear(p, act_monomial)
}

/// The classical action as a module carrier over [`Sl2Bialgebra`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Sl2Module {
    pub bound: u32,
}

impl ModCarrier for Sl2Module {
    type HB = Pbw;
    type MB = Monomial;

    fn describe(&self) -> String {
        format!("ρ on k[x,y] deg≤{}", self.bound)
    }
    fn test_basis(&self) -> Vec<Monomial> {
        enumerate_monomials(self.bound)
    }
    fn alpha_basis(&self, m: &Monomial) -> Poly {
        Poly::basis(*m)
    }
    fn act_basis(&self, h: &Pbw, m: &Monomial) -> Poly {
        act_monomial(h, m)
    }
    fn in_range(&self, m: &Monomial) -> bool {
        m.degree() <= self.bound
    }
}

/// `x(ab) = Σ (x'a)(x''b)` for PBW monomials of degree `<= bound_h` and
/// monomial pairs of degree `<= bound_a`.
pub fn check_classical_module_algebra(bound_h: u32, bound_a: u32) -> Result<CheckReport, CheckError> {
    let h = Sl2Bialgebra { bound: bound_h };
    let a = PolyAlgebra { bound: bound_a };
    let rho = Sl2Module { bound: bound_a };
    let mut report = check_module_hom_algebra_at_power(&h, &a, &rho, 0)?;
    report.axiom = AxiomId::ClassicalModuleAlgebra;
    Ok(report)
}

/// The data `(α_A, α_L)` of a deformation together with the extension `α_U`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeformedAction {
    pub alpha_a: PolyEndo,
    pub alpha_l: UEndo,
    pub alpha_u: UAlgMap,
}

impl DeformedAction {
    /// Builds the deformation, rejecting `α_L` that is not a Lie endomorphism.
    pub fn new(alpha_a: PolyEndo, alpha_l: UEndo) -> Result<Self, UeaError> {
        let alpha_u = extend_lie_endo(&alpha_l)?;
        Ok(Self {
            alpha_a,
            alpha_l,
            alpha_u,
        })
    }

    /// `α_A(x) = q²x`, `α_A(y) = qy`, `α_L = (qX, q⁻¹Y, Z)`.
    pub fn q_example() -> Self {
        Self::new(PolyEndo::q_example(), UEndo::q_example()).expect("q-example is a Lie endomorphism")
    }

    pub fn identity() -> Self {
        Self::new(PolyEndo::identity(), UEndo::identity()).expect("identity is a Lie endomorphism")
    }

    /// Substitutes `q = q0` in every structure map.
    pub fn specialized(&self, q0: &Rational) -> Result<Self, ActionError> {
        let spec = |c: &QLaurent| c.specialize(q0).map(QLaurent::from_rational);
        // surface the q0 = 0 error once, then map infallibly
        spec(&QLaurent::one())?;
        let f = |c: &QLaurent| spec(c).expect("nonzero specialization");
        Ok(Self::new(self.alpha_a.map_coeffs(f), self.alpha_l.map_coeffs(f))?)
    }

    /// `ρ_α(z ⊗ p) = α_A(ρ(z ⊗ p))`.
    pub fn deformed_act(&self, z: &UElem, p: &Poly) -> Poly {
        apply_endo(&self.alpha_a, &act(z, p))
    }

    pub fn twisted_algebra(&self, bound: u32) -> homcore::YauTwist<PolyAlgebra, PolyEndo> {
        homcore::YauTwist {
            base: PolyAlgebra { bound },
            alpha: self.alpha_a.clone(),
            label: "α".into(),
        }
    }

    pub fn twisted_bialgebra(&self, bound: u32) -> homcore::YauTwist<Sl2Bialgebra, UAlgMap> {
        homcore::YauTwist {
            base: Sl2Bialgebra { bound },
            alpha: self.alpha_u.clone(),
            label: "α".into(),
        }
    }

    pub fn deformed_module(&self, bound: u32) -> homcore::DeformedModule<Sl2Module, PolyEndo> {
        homcore::DeformedModule {
            base: Sl2Module { bound },
            alpha: self.alpha_a.clone(),
            label: "α".into(),
        }
    }
}

/// Free-function form of [`DeformedAction::deformed_act`].
pub fn deformed_act(d: &DeformedAction, z: &UElem, p: &Poly) -> Poly {
    d.deformed_act(z, p)
}

/// `α_A(WP) = α_L(W)α_A(P)` for generators `W` and monomials of degree `<= bound`.
pub fn check_alpha_wp(d: &DeformedAction, bound: u32) -> CheckReport {
    let mut failures = Vec::new();
    let monos = enumerate_monomials(bound);
    for g in Gen::ALL {
        for m in &monos {
            let p = Poly::basis(*m);
            let lhs = apply_endo(&d.alpha_a, &act(&g.elem(), &p));
            let rhs = act(d.alpha_l.image(g), &apply_endo(&d.alpha_a, &p));
            if lhs != rhs {
                failures.push(Counterexample::new(vec![g.to_string(), m.to_string()], lhs, rhs));
            }
        }
    }
    CheckReport::new(
        AxiomId::GeneratorIntertwining,
        format!("k[x,y] deg≤{bound}"),
        3 * monos.len(),
        failures,
    )
}

/// `α_A(za) = α_U(z)α_A(a)` for PBW monomials of degree `<= bound_h` and
/// monomials of degree `<= bound_a`.
pub fn check_alpha_za(d: &DeformedAction, bound_h: u32, bound_a: u32) -> CheckReport {
    let h = Sl2Bialgebra { bound: bound_h };
    let m = Sl2Module { bound: bound_a };
    let mut report = homcore::check_compat(&h, &m, &d.alpha_u, &d.alpha_a);
    report.axiom = AxiomId::EnvelopingIntertwining;
    report
}

/// Z-eigenvalues on the monomial basis of `A_n`, after checking that `A_n`
/// is stable under `X`, `Y`, `Z`.
pub fn weight_spectrum(n: u32) -> Result<Vec<i64>, ActionError> {
    let mut weights = Vec::new();
    for m in homogeneous_basis(n) {
        let p = Poly::basis(m);
        for g in Gen::ALL {
            let image = act_generator(g, &p);
            if !is_homogeneous(&image, n) {
                return Err(ActionError::NotClosed {
                    degree: n,
                    generator: g,
                    monomial: m,
                    image: image.to_string(),
                });
            }
        }
        let zp = act_generator(Gen::Z, &p);
        let eigen = zp.coeff(&m);
        let weight = eigen
            .as_rational()
            .filter(|_| zp == p.scale(&eigen))
            .and_then(|r| r.is_integer().then(|| r.to_integer()))
            .and_then(|w| i64::try_from(w).ok());
        match weight {
            Some(w) => weights.push(w),
            None if zp.is_zero() => weights.push(0),
            None => {
                return Err(ActionError::NotWeightVector {
                    monomial: m,
                    image: zp.to_string(),
                })
            }
        }
    }
    Ok(weights)
}

/// Weight data identifying `A_n` with the simple module of dimension `n+1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleModuleProfile {
    pub degree: u32,
    pub dimension: usize,
    pub weights: Vec<i64>,
    pub x_kills_highest: bool,
    pub y_kills_lowest: bool,
}

impl SimpleModuleProfile {
    /// Dimension `n+1`, weights `n, n-2, ..., -n` once each, `X·x^n = 0`, `Y·y^n = 0`.
    pub fn matches_simple_module(&self) -> bool {
        let n = i64::from(self.degree);
        let expected: Vec<i64> = (0..=n).map(|k| n - 2 * k).collect();
        self.dimension == self.degree as usize + 1
            && self.weights == expected
            && self.x_kills_highest
            && self.y_kills_lowest
    }
}

pub fn simple_module_profile(n: u32) -> Result<SimpleModuleProfile, ActionError> {
    let weights = weight_spectrum(n)?;
    Ok(SimpleModuleProfile {
        degree: n,
        dimension: weights.len(),
        weights,
        x_kills_highest: act_generator(Gen::X, &monomial(n, 0)).is_zero(),
        y_kills_lowest: act_generator(Gen::Y, &monomial(0, n)).is_zero(),
    })
}

/// `W·A_n ⊆ A_n` for every generator and `n <= max_degree`.
pub fn check_graded_closure(max_degree: u32) -> CheckReport {
    let mut failures = Vec::new();
    let mut checked = 0;
    for n in 0..=max_degree {
        for m in homogeneous_basis(n) {
            for g in Gen::ALL {
                checked += 1;
                let image = act_generator(g, &Poly::basis(m));
                if !is_homogeneous(&image, n) {
                    failures.push(Counterexample::new(
                        vec![g.to_string(), m.to_string()],
                        format!("{image}"),
                        format!("element of A_{n}"),
                    ));
                }
            }
        }
    }
    CheckReport::new(
        AxiomId::GradedClosure,
        format!("A_n, n≤{max_degree}"),
        checked,
        failures,
    )
}

/// Parameters of the q-deformed sl(2) verification suite.
#[derive(Debug, Clone)]
pub struct Sl2Suite {
    pub bound_h: u32,
    pub bound_a: u32,
    pub deformation: DeformedAction,
    /// Use `α_H` instead of `α_H²` in the module Hom-algebra identity.
    pub negative_control: bool,
}

impl Sl2Suite {
    pub fn new(bound_h: u32, bound_a: u32) -> Self {
        Self {
            bound_h,
            bound_a,
            deformation: DeformedAction::q_example(),
            negative_control: false,
        }
    }

    /// Runs every check; reports are returned in a fixed order.
    pub fn run(&self) -> Result<Vec<CheckReport>, ActionError> {
        let d = &self.deformation;
        let (bh, ba) = (self.bound_h, self.bound_a);
        let power = if self.negative_control { 1 } else { 2 };
        let h_alpha = d.twisted_bialgebra(bh);
        let a_alpha = d.twisted_algebra(ba);
        let rho_alpha = d.deformed_module(ba);

        let mut out = vec![is_lie_endo(&d.alpha_l)?];
        out.push(check_alpha_wp(d, ba));
        out.push(check_alpha_za(d, bh, ba));
        out.push(check_multiplicativity(&a_alpha)?);
        out.push(check_hom_associativity(&a_alpha)?);
        out.push(check_multiplicativity(&h_alpha)?);
        out.push(check_hom_coassociativity(&h_alpha)?);
        out.push(check_comul_morphism(&h_alpha)?);
        out.push(check_module_axiom(&h_alpha, &rho_alpha)?);
        out.push(check_module_hom_algebra_at_power(
            &h_alpha, &a_alpha, &rho_alpha, power,
        )?);
        out.push(check_mu_module_morphism_at_power(
            &h_alpha, &a_alpha, &rho_alpha, power,
        )?);
        out.extend(check_hom_jacobi(&homcore::lie_yau_twist(Sl2Lie, d.alpha_u.clone())));
        out.push(check_graded_closure(ba));
        out.push(check_classical_module_algebra(bh, ba)?);
        Ok(out)
    }
}
