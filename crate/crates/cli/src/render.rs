use homalg::linear::BasisElem;
use homalg::{LinComb, QLaurent};

/// Renders `v`, pulling out a power of q shared by every coefficient:
/// `q*(1⊗X + X⊗1)` rather than `q*1⊗X + q*X⊗1`.
pub fn factored<B: BasisElem>(v: &LinComb<B>) -> String {
    let mut exponents = v.iter().map(|(_, c)| c.as_monomial().map(|(_, k)| k));
    let shared = match exponents.next() {
        Some(Some(k)) if k != 0 && v.len() > 1 && exponents.all(|e| e == Some(k)) => k,
        _ => return v.to_string(),
    };
    let inverse = QLaurent::q_pow(-shared);
    let rest = v.map_coeffs(|c| c * &inverse);
    format!("{}*({rest})", QLaurent::q_pow(shared))
}
