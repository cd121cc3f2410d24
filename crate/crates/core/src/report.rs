//! Outcome of an exhaustive axiom sweep.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

/// Identifies which identity a report is about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AxiomId {
    Associativity,
    Multiplicativity,
    HomAssociativity,
    HomCoassociativity,
    ComulMorphism,
    ModuleAxiom,
    ModuleHomAlgebra,
    MuModuleMorphism,
    ClassicalModuleAlgebra,
    Compatibility,
    LieEndomorphism,
    BracketSkewSymmetry,
    BracketMultiplicativity,
    HomJacobi,
    GeneratorIntertwining,
    EnvelopingIntertwining,
    GradedClosure,
    AlgebraAutomorphism,
    GroupClosure,
}

impl AxiomId {
    pub const ALL: [AxiomId; 19] = [
        Self::Associativity,
        Self::Multiplicativity,
        Self::HomAssociativity,
        Self::HomCoassociativity,
        Self::ComulMorphism,
        Self::ModuleAxiom,
        Self::ModuleHomAlgebra,
        Self::MuModuleMorphism,
        Self::ClassicalModuleAlgebra,
        Self::Compatibility,
        Self::LieEndomorphism,
        Self::BracketSkewSymmetry,
        Self::BracketMultiplicativity,
        Self::HomJacobi,
        Self::GeneratorIntertwining,
        Self::EnvelopingIntertwining,
        Self::GradedClosure,
        Self::AlgebraAutomorphism,
        Self::GroupClosure,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::Associativity => "associativity",
            Self::Multiplicativity => "multiplicativity",
            Self::HomAssociativity => "hom-associativity",
            Self::HomCoassociativity => "hom-coassociativity",
            Self::ComulMorphism => "comul-morphism",
            Self::ModuleAxiom => "module-axiom",
            Self::ModuleHomAlgebra => "module-hom-algebra",
            Self::MuModuleMorphism => "mu-module-morphism",
            Self::ClassicalModuleAlgebra => "classical-module-algebra",
            Self::Compatibility => "compatibility",
            Self::LieEndomorphism => "lie-endomorphism",
            Self::BracketSkewSymmetry => "bracket-skew-symmetry",
            Self::BracketMultiplicativity => "bracket-multiplicativity",
            Self::HomJacobi => "hom-jacobi",
            Self::GeneratorIntertwining => "generator-intertwining",
            Self::EnvelopingIntertwining => "enveloping-intertwining",
            Self::GradedClosure => "graded-closure",
            Self::AlgebraAutomorphism => "algebra-automorphism",
            Self::GroupClosure => "group-closure",
        }
    }

    /// The identity being checked, in the crate's notation.
    pub fn formula(self) -> &'static str {
        match self {
            Self::Associativity => "(ab)c = a(bc)",
            Self::Multiplicativity => "α(ab) = α(a)α(b)",
            Self::HomAssociativity => "α(a)(bc) = (ab)α(c)",
            Self::HomCoassociativity => "(Δ⊗α)Δ = (α⊗Δ)Δ",
            Self::ComulMorphism => "Δ∘α = (α⊗α)∘Δ ; Δ(ab) = Δ(a)Δ(b)",
            Self::ModuleAxiom => "α_M(am) = α(a)α_M(m) ; α(a)(bm) = (ab)α_M(m)",
            Self::ModuleHomAlgebra => "α_H²(x)(ab) = Σ (x'a)(x''b)",
            Self::MuModuleMorphism => "μ_A(ρ²(x⊗a⊗b)) = ρ̃(x⊗ab)",
            Self::ClassicalModuleAlgebra => "x(ab) = Σ (x'a)(x''b)",
            Self::Compatibility => "α_A(ρ(x⊗a)) = ρ(α_H(x)⊗α_A(a))",
            Self::LieEndomorphism => "α([u,v]) = [α(u),α(v)]",
            Self::BracketSkewSymmetry => "[a,b] = -[b,a]",
            Self::BracketMultiplicativity => "α([a,b]) = [α(a),α(b)]",
            Self::HomJacobi => "[[a,b],α(c)] + [[c,a],α(b)] + [[b,c],α(a)] = 0",
            Self::GeneratorIntertwining => "α_A(WP) = α_L(W)α_A(P)",
            Self::EnvelopingIntertwining => "α_A(za) = α_U(z)α_A(a)",
            Self::GradedClosure => "W·A_n ⊆ A_n",
            Self::AlgebraAutomorphism => "φ(ab) = φ(a)φ(b), φ invertible",
            Self::GroupClosure => "φ∘ψ ∈ G, φ⁻¹ ∈ G",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown axiom `{0}`")]
pub struct UnknownAxiom(pub String);

impl FromStr for AxiomId {
    type Err = UnknownAxiom;
    fn from_str(s: &str) -> Result<Self, UnknownAxiom> {
        Self::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| UnknownAxiom(s.to_string()))
    }
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One failing input tuple.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub clause: Option<String>,
    pub inputs: Vec<String>,
    pub lhs: String,
    pub rhs: String,
}

impl Counterexample {
    pub fn new(inputs: Vec<String>, lhs: impl ToString, rhs: impl ToString) -> Self {
        Self {
            clause: None,
            inputs,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }

    pub fn with_clause(mut self, clause: &str) -> Self {
        self.clause = Some(clause.to_string());
        self
    }

    /// True when the inputs render exactly as `expected`.
    pub fn has_inputs(&self, expected: &[&str]) -> bool {
        self.inputs.len() == expected.len() && self.inputs.iter().zip(expected).all(|(a, b)| a == b)
    }
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(clause) = &self.clause {
            write!(f, "[{clause}] ")?;
        }
        write!(f, "({}): {} ≠ {}", self.inputs.join(", "), self.lhs, self.rhs)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Result of checking one identity over every tuple of a test basis.
///
/// Sweeps are exhaustive, so a pass is a proof of the identity on the span
/// of the declared test basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub axiom: AxiomId,
    pub subject: String,
    pub checked: usize,
    pub counterexamples: Vec<Counterexample>,
}

impl CheckReport {
    pub fn new(
        axiom: AxiomId,
        subject: impl Into<String>,
        checked: usize,
        counterexamples: Vec<Counterexample>,
    ) -> Self {
        Self {
            axiom,
            subject: subject.into(),
            checked,
            counterexamples,
        }
    }

    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }

    pub fn status(&self) -> Status {
        if self.passed() {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    /// Looks up a counterexample by its rendered inputs.
    pub fn find(&self, inputs: &[&str]) -> Option<&Counterexample> {
        self.counterexamples.iter().find(|c| c.has_inputs(inputs))
    }
}

impl Serialize for CheckReport {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Doc<'a> {
            axiom: AxiomId,
            formula: &'static str,
            subject: &'a str,
            status: Status,
            checked: usize,
            counterexamples: &'a [Counterexample],
        }
        Doc {
            axiom: self.axiom,
            formula: self.axiom.formula(),
            subject: &self.subject,
            status: self.status(),
            checked: self.checked,
            counterexamples: &self.counterexamples,
        }
        .serialize(s)
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} {:<26} {:<44} [{}] checked {}",
            self.axiom.name(),
            self.axiom.formula(),
            self.subject,
            self.checked
        )?;
        if !self.passed() {
            write!(f, ", {} counterexample(s)", self.counterexamples.len())?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn axiom_names_round_trip() {
        for a in AxiomId::ALL {
            assert_eq!(a.name().parse::<AxiomId>().unwrap(), a);
            assert_eq!(serde_json::to_value(a).unwrap(), a.name());
        }
        assert!("not-an-axiom".parse::<AxiomId>().is_err());
    }

    #[test]
    fn report_document() {
        let c = Counterexample::new(vec!["X".into(), "x".into(), "y".into()], "q^8*x^2", "q^9*x^2");
        let r = CheckReport::new(AxiomId::ModuleHomAlgebra, "H ; A", 2000, vec![c.clone()]);
        assert!(!r.passed());
        assert_eq!(r.find(&["X", "x", "y"]), Some(&c));
        assert!(r.find(&["X", "y", "x"]).is_none());
        assert_eq!(c.to_string(), "(X, x, y): q^8*x^2 ≠ q^9*x^2");
        let doc = serde_json::to_value(&r).unwrap();
        assert_eq!(doc["status"], "fail");
        assert_eq!(doc["axiom"], "module-hom-algebra");
        assert_eq!(doc["formula"], AxiomId::ModuleHomAlgebra.formula());
        assert_eq!(doc["counterexamples"][0]["inputs"][2], "y");
        assert!(doc["counterexamples"][0].get("clause").is_none());
        assert!(r.to_string().starts_with("FAIL module-hom-algebra"));
        assert!(r.to_string().ends_with("checked 2000, 1 counterexample(s)"));
    }
}
