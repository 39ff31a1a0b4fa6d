//! Brill-Noether scalar invariants: the rho number, Castelnuovo counts of
//! linear series, the pencil counts a(j, alpha) and b(j, alpha) attached to
//! ramification at a point, and the aggregated pencil-locus pairing total.

use num_bigint::BigInt;

use crate::bundles::{c1_g0b_on_ypp, diff_decomposition};
use crate::error::{Error, Result};
use crate::rat::{binom, factorial, inv_factorial, Rat};

/// Brill-Noether number `rho(g, r, d) = g - (r+1)(g - d + r)`.
pub fn rho(g: i64, r: i64, d: i64) -> i64 {
    g - (r + 1) * (g - d + r)
}

/// Castelnuovo count of linear series `g^r_d` on a general curve of genus g
/// when `rho = 0`: `g! prod_{s=0..r} s!/(g - d + r + s)!`.
pub fn grd_count(g: i64, r: i64, d: i64) -> Result<BigInt> {
    let rho_val = rho(g, r, d);
    if rho_val != 0 {
        return Err(Error::RhoNonzero {
            g,
            r,
            d,
            rho: rho_val,
        });
    }
    let mut acc = Rat::from_bigint(factorial(g));
    for s in 0..=r {
        acc *= &(Rat::from_bigint(factorial(s)) * inv_factorial(g - d + r + s));
    }
    Ok(acc
        .to_integer()
        .expect("Castelnuovo count is a nonnegative integer"))
}

/// Number of pencils of degree `j - alpha + 1` on a general genus-j pointed
/// curve with a `(j + 1 - 2 alpha)`-fold point at the marked point:
/// `(j+1-2a)/(j+1-a) C(j, a)`.
pub fn a_count(j: i64, alpha: i64) -> Result<Rat> {
    if alpha < 0 || 2 * alpha > j {
        return Err(Error::out_of_range(
            "a_count",
            format!("alpha = {alpha} outside 0..=j/2 with j = {j}"),
        ));
    }
    Ok(Rat::frac(j + 1 - 2 * alpha, j + 1 - alpha) * binom(j, alpha))
}

/// Number of pencils of degree `j - alpha` with a `(j - 2 alpha)`-fold point
/// at some unspecified point: `(j-2a-1)(j-2a)(j-2a+1) C(j, a)`.
///
/// Total in alpha: the assembly sums evaluate it at shifted arguments where
/// the vanishing of the leading factors (or of the binomial) is structural.
pub fn b_count(j: i64, alpha: i64) -> Rat {
    Rat::from_int(j - 2 * alpha - 1)
        * Rat::from_int(j - 2 * alpha)
        * Rat::from_int(j - 2 * alpha + 1)
        * binom(j, alpha)
}

/// Aggregated pairing of the syzygy-bundle difference against the weighted
/// pencil loci on the genus-j tail, in closed form:
///
/// `(8i^2+19i+12) j! (6i+10-j)! (3i+2)!/(i!(2i+4)!) *
///  sum_{a=0..j} (j-2a-1)(j-2a)^2(j-2a+1) /
///      (a!(j-a)!(3i+5-a)!(3i+5+a-j)!)`
pub fn ypp_total(i: u32, j: u32) -> Result<Rat> {
    let (ii, ji) = (i as i64, j as i64);
    if !(2 <= ji && ji <= 3 * ii + 5) {
        return Err(Error::out_of_range(
            "ypp_total",
            format!("j = {j} outside 2..={}", 3 * ii + 5),
        ));
    }
    let pref = Rat::from_int(8 * ii * ii + 19 * ii + 12)
        * Rat::from_bigint(factorial(ji))
        * Rat::from_bigint(factorial(6 * ii + 10 - ji))
        * Rat::from_bigint(factorial(3 * ii + 2))
        * inv_factorial(ii)
        * inv_factorial(2 * ii + 4);
    let mut total = Rat::zero();
    for alpha in 0..=ji {
        let m = ji - 2 * alpha;
        let weight = Rat::from_int((m - 1) * m * m * (m + 1));
        total += weight
            * inv_factorial(alpha)
            * inv_factorial(ji - alpha)
            * inv_factorial(3 * ii + 5 - alpha)
            * inv_factorial(3 * ii + 5 + alpha - ji);
    }
    Ok(pref * total)
}

/// Independent assembly of the same total from the pencil counts and the
/// difference decomposition applied to the per-locus pairings. Disagreement
/// with [`ypp_total`] is a hard failure, not a warning.
pub fn ypp_total_assembled(i: u32, j: u32) -> Result<Rat> {
    let (ii, ji) = (i as i64, j as i64);
    if !(2 <= ji && ji <= 3 * ii + 5) {
        return Err(Error::out_of_range(
            "ypp_total_assembled",
            format!("j = {j} outside 2..={}", 3 * ii + 5),
        ));
    }
    let dec = diff_decomposition(i);
    let mut total = Rat::zero();
    for alpha in 0..=(j / 2) {
        let weight = b_count(6 * ii + 10 - ji, 3 * ii + 5 + alpha as i64 - ji);
        if weight.is_zero() {
            continue;
        }
        let mut pairing = dec.kappa.clone() * c1_g0b_on_ypp(j, alpha, 1)?;
        for (l, term) in dec.terms.iter().enumerate() {
            pairing += term * &c1_g0b_on_ypp(j, alpha, l as u32 + 2)?;
        }
        total += weight * pairing;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rho_known_values() {
        assert_eq!(rho(22, 10, 30), 0);
        assert_eq!(rho(7, 0, 0), 0);
        assert_eq!(rho(10, 1, 6), 0);
        assert_eq!(rho(14, 6, 18), 0);
    }

    #[test]
    fn grd_count_known_values() {
        assert_eq!(grd_count(10, 1, 6).unwrap(), BigInt::from(42));
        assert_eq!(grd_count(14, 6, 18).unwrap(), BigInt::from(429));
        assert_eq!(grd_count(2, 1, 2).unwrap(), BigInt::from(1));
        assert!(matches!(
            grd_count(10, 1, 5),
            Err(Error::RhoNonzero { rho: -2, .. })
        ));
    }

    #[test]
    fn grd_count_pencils_are_catalan() {
        // g = 2m, r = 1, d = m+1 has rho = 0 and the count is Catalan(m).
        let catalan = |m: i64| -> BigInt {
            // brute-force ballot-path count
            fn walk(up_left: i64, down_allowed: i64) -> i64 {
                if up_left == 0 && down_allowed == 0 {
                    return 1;
                }
                let mut n = 0;
                if up_left > 0 {
                    n += walk(up_left - 1, down_allowed + 1);
                }
                if down_allowed > 0 {
                    n += walk(up_left, down_allowed - 1);
                }
                n
            }
            BigInt::from(walk(m, 0))
        };
        for m in 1..=8i64 {
            let g = 2 * m;
            assert_eq!(rho(g, 1, m + 1), 0);
            assert_eq!(grd_count(g, 1, m + 1).unwrap(), catalan(m), "m = {m}");
        }
    }

    #[test]
    fn a_count_known_values() {
        assert_eq!(a_count(5, 0).unwrap(), Rat::one());
        assert_eq!(a_count(2, 1).unwrap(), Rat::one());
        assert_eq!(a_count(4, 2).unwrap(), Rat::from_int(2));
        assert!(a_count(4, 3).is_err());
    }

    #[test]
    fn a_count_integrality() {
        for j in 0..=20i64 {
            for alpha in 0..=(j / 2) {
                let a = a_count(j, alpha).unwrap();
                assert!(a.is_integer() && a.is_positive(), "a({j},{alpha}) = {a}");
            }
        }
    }

    #[test]
    fn b_count_known_values() {
        assert_eq!(b_count(5, 2), Rat::zero()); // odd j, middle alpha
        assert_eq!(b_count(2, 0), Rat::from_int(6));
        assert_eq!(b_count(5, 1), Rat::from_int(120));
        // total evaluation outside the cycle range is fine
        assert_eq!(b_count(4, 5), Rat::zero());
    }

    #[test]
    fn ypp_dual_route_agreement() {
        for i in 0..=6u32 {
            for j in 2..=(3 * i + 5) {
                assert_eq!(
                    ypp_total(i, j).unwrap(),
                    ypp_total_assembled(i, j).unwrap(),
                    "ypp route mismatch at i = {i}, j = {j}"
                );
            }
        }
    }

    #[test]
    fn ypp_known_values() {
        assert_eq!(ypp_total(0, 2).unwrap(), Rat::from_int(1344));
        assert_eq!(ypp_total(1, 2).unwrap(), Rat::from_int(468468));
    }
}
