//! General-type certificates: exact solution of the (lambda, delta_0,
//! psi-total) multiplier system expressing the canonical class of a pointed
//! moduli space as a positive combination of the given effective classes
//! plus a positive multiple of the big-and-nef psi-total class.
//!
//! Only the three tracked coefficients enter the system; the remaining
//! boundary coefficients carry the source's sign guarantee and are recorded
//! as assumptions, not verified.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rat::Rat;

/// The tracked coefficients of a pointed-moduli divisor class: lambda,
/// per-point psi, delta_0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartialPointedClass {
    pub g: u32,
    pub n: u32,
    pub lambda: Rat,
    /// Coefficient of each psi_i (the classes used here are symmetric in the
    /// marked points, so one per-point value suffices).
    pub psi_per_point: Rat,
    pub delta0: Rat,
    pub label: String,
}

/// The canonical class: `13 lambda + sum psi_i - 2 delta_0 - (other boundary)`.
pub fn canonical_partial(g: u32, n: u32) -> PartialPointedClass {
    assert!(g >= 3 && n >= 1);
    PartialPointedClass {
        g,
        n,
        lambda: Rat::from_int(13),
        psi_per_point: Rat::one(),
        delta0: Rat::from_int(-2),
        label: "canonical".to_string(),
    }
}

/// A solved certificate: `K = s * (syzygy class) + t * (second class)
/// + u * (psi-total)`, all strictly positive.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub g: u32,
    pub n: u32,
    pub s: Rat,
    pub t: Rat,
    pub u: Rat,
    pub assumptions: Vec<String>,
}

/// Data of one solvable case: the pulled-back syzygy class (lambda
/// coefficient, per-point psi, delta_0 fixed at -1) and the second effective
/// class (lambda, per-point psi).
struct CaseData {
    syzygy_lambda: Rat,
    syzygy_psi: Rat,
    second_lambda: Rat,
    second_psi: Rat,
    second_label: &'static str,
}

fn case_data(g: u32, n: u32) -> Result<CaseData> {
    match (g, n) {
        (22, 2) => Ok(CaseData {
            syzygy_lambda: Rat::frac(1665, 256),
            syzygy_psi: Rat::zero(),
            // averaged Weierstrass pullback: -2 lambda + (g(g+1)/2) psi per
            // point, delta_0 coefficient 0
            second_lambda: Rat::from_int(-2),
            second_psi: Rat::from_int(253),
            second_label: "averaged Weierstrass pullback",
        }),
        (21, 5) => Ok(CaseData {
            // averaged point-identification pullback of the genus-22 class:
            // picks up 2/5 psi per point
            syzygy_lambda: Rat::frac(1665, 256),
            syzygy_psi: Rat::frac(2, 5),
            second_lambda: Rat::from_int(-1),
            second_psi: Rat::from_int(11),
            second_label: "pointed Brill-Noether class (-lambda + 11 sum psi)",
        }),
        (16, 9) => Ok(CaseData {
            syzygy_lambda: Rat::frac(407, 61),
            syzygy_psi: Rat::zero(),
            second_lambda: Rat::from_int(-1),
            second_psi: Rat::frac(23, 9),
            second_label: "pointed Brill-Noether class (-lambda + 23/9 sum psi)",
        }),
        (21, 4) => Err(Error::UnsupportedCertificate {
            g,
            n,
            reason: "the n = 4 case has no tabulated effective class with a \
                     large enough psi coefficient; only n = 5 is certifiable from the \
                     given data"
                .to_string(),
        }),
        (20, 6) => Err(Error::UnsupportedCertificate {
            g,
            n,
            reason: "the genus-20 quartics divisor has no tabulated class; \
                     no certificate can be assembled"
                .to_string(),
        }),
        _ => Err(Error::UnsupportedCertificate {
            g,
            n,
            reason: "no certificate data for this pair".to_string(),
        }),
    }
}

fn solve(g: u32, n: u32, data: &CaseData) -> Certificate {
    let k = canonical_partial(g, n);
    // delta_0 equation: k.delta0 = -s  (syzygy class has delta_0 = -1 and the
    // second class has delta_0 = 0)
    let s = -&k.delta0;
    // lambda equation: 13 = s * syzygy_lambda + t * second_lambda
    let t = (&k.lambda - &(&s * &data.syzygy_lambda)) / &data.second_lambda;
    // psi equation: 1 = s * syzygy_psi + t * second_psi + u
    let u = &k.psi_per_point - &(&s * &data.syzygy_psi) - &(&t * &data.second_psi);
    Certificate {
        g,
        n,
        s,
        t,
        u,
        assumptions: vec![
            "untracked boundary coefficients of the effective classes are nonnegative \
             as asserted by the source"
                .to_string(),
            format!("second class: {}", data.second_label),
        ],
    }
}

/// Solve the certificate system for one of the supported pairs. The
/// certificate is valid iff s, t, u are all strictly positive, which is
/// checked and rejected otherwise.
pub fn certificate(g: u32, n: u32) -> Result<Certificate> {
    let data = case_data(g, n)?;
    let cert = solve(g, n, &data);
    if !(cert.s.is_positive() && cert.t.is_positive() && cert.u.is_positive()) {
        return Err(Error::UnsupportedCertificate {
            g,
            n,
            reason: format!(
                "system solved but not positive: s = {}, t = {}, u = {}",
                cert.s, cert.t, cert.u
            ),
        });
    }
    Ok(cert)
}

/// Sensitivity probe: the t-multiplier as a function of the syzygy class's
/// lambda coefficient, for checking strict monotonicity.
pub fn t_multiplier_with_syzygy_lambda(g: u32, n: u32, syzygy_lambda: Rat) -> Result<Rat> {
    let mut data = case_data(g, n)?;
    data.syzygy_lambda = syzygy_lambda;
    Ok(solve(g, n, &data).t)
}
