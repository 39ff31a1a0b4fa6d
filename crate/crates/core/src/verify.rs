//! Batch verification sweeps. Each sweep evaluates an independent family of
//! cross-checks and reports one line per item; distinct parameter values are
//! independent, so the sweeps fan out across a thread pool when the
//! `parallel` feature is enabled. Outputs are ordered by index regardless of
//! completion order.

use crate::bundles::{aleph_closed, aleph_factorial_sum};
use crate::cycles::{
    class_x, class_x_porteous, class_xj_weighted, class_xj_weighted_alpha_sum, class_y,
    class_y_porteous,
};
use crate::enumerative::{ypp_total, ypp_total_assembled};
use crate::pipeline::{asymptotic_check, zclass};
use crate::rat::Rat;

/// One verification line: an identifying label plus pass/fail.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckLine {
    pub label: String,
    pub ok: bool,
}

impl CheckLine {
    fn new(label: impl Into<String>, ok: bool) -> Self {
        CheckLine {
            label: label.into(),
            ok,
        }
    }
}

/// Map a function over an index range, in parallel when available. Results
/// come back in index order either way.
pub fn sweep<T, F>(indices: Vec<u32>, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u32) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        indices.into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        indices.into_iter().map(f).collect()
    }
}

/// Always-sequential variant, kept callable for benchmarking the parallel
/// speedup against a fixed baseline.
pub fn sweep_seq<T, F>(indices: Vec<u32>, f: F) -> Vec<T>
where
    F: Fn(u32) -> T,
{
    indices.into_iter().map(f).collect()
}

/// Full-pipeline verification for `0 <= i <= imax`: every zclass flag must
/// be green.
pub fn verify_formula(imax: u32) -> Vec<CheckLine> {
    sweep((0..=imax).collect(), |i| match zclass(i) {
        Ok(rep) => {
            let f = &rep.flags;
            let mut lines = vec![
                CheckLine::new(
                    format!("i={i}: leading coefficients match closed form"),
                    f.leading_match_closed_form,
                ),
                CheckLine::new(
                    format!("i={i}: first-case boundary coefficients match closed form"),
                    f.first_case_matches_closed_form,
                ),
                CheckLine::new(format!("i={i}: min_j b_j = b_0"), f.min_bj_is_b0),
                CheckLine::new(
                    format!("i={i}: 6 < slope {} < {}", rep.slope, rep.bn_slope),
                    f.slope_in_window,
                ),
            ];
            for a in &rep.annotations {
                lines.push(CheckLine::new(format!("i={i}: note: {a}"), true));
            }
            lines
        }
        Err(e) => vec![CheckLine::new(format!("i={i}: pipeline error: {e}"), false)],
    })
    .into_iter()
    .flatten()
    .collect()
}

/// The reciprocal-factorial identities: the point-count correction in closed
/// form versus its factorial sum, and the dual-route pencil-pairing totals.
pub fn verify_aleph(imax: u32) -> Vec<CheckLine> {
    sweep((0..=imax).collect(), |i| {
        let mut lines = Vec::new();
        for j in 2..=(2 * i + 2) {
            let ok = match (aleph_closed(i, j), aleph_factorial_sum(i, j)) {
                (Ok(a), Ok(b)) => a == b,
                _ => false,
            };
            lines.push(CheckLine::new(
                format!("i={i}, j={j}: point-count correction closed form = factorial sum"),
                ok,
            ));
        }
        for j in 2..=(3 * i + 5) {
            let ok = match (ypp_total(i, j), ypp_total_assembled(i, j)) {
                (Ok(a), Ok(b)) => a == b,
                _ => false,
            };
            lines.push(CheckLine::new(
                format!("i={i}, j={j}: pencil-pairing total dual-route agreement"),
                ok,
            ));
        }
        lines
    })
    .into_iter()
    .flatten()
    .collect()
}

/// Cycle-class oracle equivalences: Porteous route versus closed forms for
/// X and Y over 5 <= k <= kmax, and per-alpha sums versus the aggregate for
/// every balanced k = 3i+6 within range.
pub fn verify_cycles(kmax: u32) -> Vec<CheckLine> {
    let mut lines: Vec<CheckLine> = sweep((5..=kmax.max(5)).collect(), |k| {
        let x_ok = class_x_porteous(k)
            .map(|c| c == class_x(k))
            .unwrap_or(false);
        let y_ok = class_y_porteous(k)
            .map(|c| c == class_y(k))
            .unwrap_or(false);
        vec![
            CheckLine::new(format!("k={k}: [X] Porteous route = closed form"), x_ok),
            CheckLine::new(format!("k={k}: [Y] Porteous route = closed form"), y_ok),
        ]
    })
    .into_iter()
    .flatten()
    .collect();

    let mut i = 0u32;
    while 3 * i + 6 <= kmax {
        let k = 3 * i + 6;
        for j in 2..=(3 * i + 5) {
            let ok = match (class_xj_weighted(i, j), class_xj_weighted_alpha_sum(k, j)) {
                (Ok(a), Ok(b)) => a == b,
                _ => false,
            };
            lines.push(CheckLine::new(
                format!("k={k}, j={j}: weighted ramification cycle aggregate = per-alpha sum"),
                ok,
            ));
        }
        i += 1;
    }
    lines
}

/// Exact asymptotic check at one (j, i) pair.
pub fn verify_asymptotic(j: u32, i_eval: u32, tol: &Rat) -> Vec<CheckLine> {
    let ok = asymptotic_check(j, i_eval, tol);
    vec![CheckLine::new(
        format!("j={j}, i={i_eval}: |b_j/b_0 - 6j| <= {tol} * 6j"),
        ok,
    )]
}

pub fn all_ok(lines: &[CheckLine]) -> bool {
    lines.iter().all(|l| l.ok)
}
