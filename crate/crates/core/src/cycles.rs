//! The explicit cycle classes that the syzygy bundles are paired against:
//! the curves X and Y on `C x C_{k-2}`, the weighted ramification cycles
//! `sum a(j,alpha) X_{j,alpha}` on `C x Pic^{3k-j-4}(C)`, and the pencil
//! loci on the Picard variety of the genus-j tail.

use crate::chern::{porteous_piece, secant_total_chern};
use crate::enumerative::a_count;
use crate::error::{Error, Result};
use crate::rat::{factorial, inv_factorial, Rat};
use crate::ring::{Ambient, Gen, SubstTable, TautClass};

fn gen(a: Ambient, g: Gen) -> TautClass {
    TautClass::generator(a, g)
}

/// Closed form of the class of `X = {(y, D) : h^0(D + 2y) >= 2}` on
/// `C x C_{k-2}` for a curve of genus `2k-3`.
pub fn class_x(k: u32) -> TautClass {
    assert!(k >= 5, "class_x needs k >= 5");
    let a = Ambient::sym_prod(2 * k - 3, k - 2);
    let (eta, gamma, x, theta) = (
        gen(a, Gen::Eta),
        gen(a, Gen::Gamma),
        gen(a, Gen::X),
        gen(a, Gen::Theta),
    );
    let ki = k as i64;
    let t = |p: u32| theta.pow(p);
    t(k - 2)
        .scale(&inv_factorial(ki - 2))
        .add(&t(k - 3).mul(&x).scale(&inv_factorial(ki - 3).neg()))
        .add(
            &t(k - 3)
                .mul(&gamma)
                .scale(&(Rat::from_int(-2) * inv_factorial(ki - 3))),
        )
        .add(
            &x.mul(&t(k - 4))
                .mul(&gamma)
                .scale(&(Rat::from_int(2) * inv_factorial(ki - 4))),
        )
        .add(
            &x.mul(&t(k - 4))
                .mul(&eta)
                .scale(&(Rat::from_int(-4 * (ki + 1)) * inv_factorial(ki - 4))),
        )
        .add(
            &t(k - 3)
                .mul(&eta)
                .scale(&(Rat::from_int(4 * ki - 2) * inv_factorial(ki - 3))),
        )
}

/// Closed form of the class of `Y = {(y, D) : h^0(D + y + q) >= 2}`.
pub fn class_y(k: u32) -> TautClass {
    assert!(k >= 5, "class_y needs k >= 5");
    let a = Ambient::sym_prod(2 * k - 3, k - 2);
    let (eta, gamma, x, theta) = (
        gen(a, Gen::Eta),
        gen(a, Gen::Gamma),
        gen(a, Gen::X),
        gen(a, Gen::Theta),
    );
    let ki = k as i64;
    let t = |p: u32| theta.pow(p);
    t(k - 2)
        .scale(&inv_factorial(ki - 2))
        .add(&t(k - 3).mul(&x).scale(&inv_factorial(ki - 3).neg()))
        .add(&t(k - 3).mul(&gamma).scale(&inv_factorial(ki - 3).neg()))
        .add(&x.mul(&t(k - 4)).mul(&gamma).scale(&inv_factorial(ki - 4)))
        .add(
            &x.mul(&t(k - 4))
                .mul(&eta)
                .scale(&(Rat::from_int(-(ki + 1)) * inv_factorial(ki - 4))),
        )
        .add(
            &t(k - 3)
                .mul(&eta)
                .scale(&(Rat::from_int(ki - 1) * inv_factorial(ki - 3))),
        )
}

/// Thom-Porteous route to `[X]`: the degree-(k-2) piece of the inverted dual
/// secant series on `C_k`, pulled back along `(y, D) -> 2y + D`.
pub fn class_x_porteous(k: u32) -> Result<TautClass> {
    let series = secant_total_chern(k);
    let piece = porteous_piece(&series, k - 2, true);
    let (table, target) = SubstTable::epsilon_star(k);
    piece.substitute(&table, target)
}

/// Thom-Porteous route to `[Y]` via `(y, D) -> y + q + D`.
pub fn class_y_porteous(k: u32) -> Result<TautClass> {
    let series = secant_total_chern(k);
    let piece = porteous_piece(&series, k - 2, true);
    let (table, target) = SubstTable::chi_star(k);
    piece.substitute(&table, target)
}

/// The Chern entry `c_l(beta)` of the jet-evaluation degeneracy data on
/// `C x Pic^{3k-4-j}(C)` for a curve of genus `2k-2-j`:
/// `theta^l/l! + theta^(l-1)/(l-1)! ((b+1) gamma + (b+1)(d + b(2k-3-j)) eta)
///  - theta^(l-1)/(l-2)! (b+1)(b+2) eta`, with `d = 3k-4-j`.
/// Out-of-range `l` vanish through the reciprocal-factorial convention.
pub fn jet_chern_entry(k: u32, j: u32, l: i64, beta: i64) -> TautClass {
    let genus = 2 * k - 2 - j;
    let a = Ambient::pic_prod(genus);
    let d = 3 * (k as i64) - 4 - j as i64;
    let gm1 = 2 * (k as i64) - 3 - j as i64; // genus - 1
    let mut out = TautClass::zero(a);
    if l >= 0 {
        out = out.add(&gen(a, Gen::Theta).pow(l as u32).scale(&inv_factorial(l)));
    }
    if l >= 1 {
        let tpow = gen(a, Gen::Theta).pow((l - 1) as u32);
        let b1 = Rat::from_int(beta + 1);
        let gamma_part = gen(a, Gen::Gamma).scale(&b1);
        let eta_part =
            gen(a, Gen::Eta).scale(&(Rat::from_int(beta + 1) * Rat::from_int(d + beta * gm1)));
        out = out.add(
            &tpow
                .mul(&gamma_part.add(&eta_part))
                .scale(&inv_factorial(l - 1)),
        );
        let corr = Rat::from_int((beta + 1) * (beta + 2)) * inv_factorial(l - 2);
        out = out.sub(&tpow.mul(&gen(a, Gen::Eta)).scale(&corr));
    }
    out
}

/// The class of the ramification 1-cycle `X_{j,alpha}` on
/// `C x Pic^{3k-j-4}(C)` as a Kempf-Laksov determinant:
/// `c_{k-1-a}(a) c_{k-1+a-j}(j-a+1) - c_{k-a}(a) c_{k-2+a-j}(j-a+1)`.
pub fn class_xj_alpha(k: u32, j: u32, alpha: u32) -> Result<TautClass> {
    if !(2 <= j && j < k) {
        return Err(Error::out_of_range(
            "class_xj_alpha",
            format!("j = {j} outside 2..={}", k - 1),
        ));
    }
    if 2 * alpha > j {
        return Err(Error::out_of_range(
            "class_xj_alpha",
            format!("alpha = {alpha} exceeds j/2 with j = {j}"),
        ));
    }
    let (ki, ji, ai) = (k as i64, j as i64, alpha as i64);
    let c = |l: i64, beta: i64| jet_chern_entry(k, j, l, beta);
    let det = c(ki - 1 - ai, ai)
        .mul(&c(ki - 1 + ai - ji, ji - ai + 1))
        .sub(&c(ki - ai, ai).mul(&c(ki - 2 + ai - ji, ji - ai + 1)));
    Ok(det)
}

/// The weighted sum `sum_alpha a(j, alpha) [X_{j,alpha}]`, summed from the
/// per-alpha determinants. Oracle route for [`class_xj_weighted`].
pub fn class_xj_weighted_alpha_sum(k: u32, j: u32) -> Result<TautClass> {
    let genus = 2 * k - 2 - j;
    let mut total = TautClass::zero(Ambient::pic_prod(genus));
    for alpha in 0..=(j / 2) {
        let weight = a_count(j as i64, alpha as i64)?;
        total = total.add(&class_xj_alpha(k, j, alpha)?.scale(&weight));
    }
    Ok(total)
}

/// Closed-form aggregate for `sum_alpha a(j, alpha) [X_{j,alpha}]` at
/// `k = 3i+6`, on `C x Pic^{6i+10-j}(C)`:
///
/// `2(2k-3)!/(k!(k-2)!(2k-3-j)!) * [ theta^(2k-2-j)/(2k-2-j)
///   + (3kj+12k-9j-18)/(3(2k-3)) theta^(2k-3-j) gamma
///   + E(k,j)/((2k-5)(2k-3)) theta^(2k-3-j) eta ]`
///
/// with `E = 16k^2-64k+60 + j(6k^3-10k^2-(67/2)k+60) + j^2(15+2k-5k^2)
/// + (3/2)k j^3`.
pub fn class_xj_weighted(i: u32, j: u32) -> Result<TautClass> {
    let k = 3 * i + 6;
    if !(2 <= j && j <= 3 * i + 5) {
        return Err(Error::out_of_range(
            "class_xj_weighted",
            format!("j = {j} outside 2..={}", 3 * i + 5),
        ));
    }
    let genus = 6 * i + 10 - j;
    let a = Ambient::pic_prod(genus);
    let (ki, ji) = (k as i64, j as i64);

    let pref = Rat::from_bigint(factorial(2 * ki - 3))
        * Rat::from_int(2)
        * inv_factorial(ki)
        * inv_factorial(ki - 2)
        * inv_factorial(2 * ki - 3 - ji);

    let theta_term = gen(a, Gen::Theta)
        .pow(genus)
        .scale(&Rat::frac(1, 2 * ki - 2 - ji));
    let gamma_fac = Rat::frac(3 * ki * ji + 12 * ki - 9 * ji - 18, 3 * (2 * ki - 3));
    let gamma_term = gen(a, Gen::Theta)
        .pow(genus - 1)
        .mul(&gen(a, Gen::Gamma))
        .scale(&gamma_fac);
    let e_poly = Rat::from_int(16 * ki * ki - 64 * ki + 60)
        + Rat::from_int(ji)
            * (Rat::from_int(6 * ki * ki * ki - 10 * ki * ki + 60) - Rat::frac(67 * ki, 2))
        + Rat::from_int(ji * ji) * Rat::from_int(15 + 2 * ki - 5 * ki * ki)
        + Rat::frac(3 * ki * ji * ji * ji, 2);
    let eta_fac = e_poly / Rat::from_int((2 * ki - 5) * (2 * ki - 3));
    let eta_term = gen(a, Gen::Theta)
        .pow(genus - 1)
        .mul(&gen(a, Gen::Eta))
        .scale(&eta_fac);

    Ok(theta_term.add(&gamma_term).add(&eta_term).scale(&pref))
}

/// Class of the pencil locus `Y''_{j,alpha}` on `Pic^{k-2+j}` of the
/// genus-j tail: `(j-2alpha)/(alpha!(j-alpha)!) theta^(j-1)`.
pub fn class_ypp(j: u32, alpha: u32) -> Result<TautClass> {
    if j < 1 || 2 * alpha > j {
        return Err(Error::out_of_range(
            "class_ypp",
            format!("need j >= 1 and alpha <= j/2, got j = {j}, alpha = {alpha}"),
        ));
    }
    let a = Ambient::pic_prod(j);
    let (ji, ai) = (j as i64, alpha as i64);
    let coeff = Rat::from_int(ji - 2 * ai) * inv_factorial(ai) * inv_factorial(ji - ai);
    Ok(gen(a, Gen::Theta).pow(j - 1).scale(&coeff))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_x_known_values() {
        // k=8: coefficient of theta^6 is 1/720
        let cx = class_x(8);
        assert_eq!(cx.coeff_of(0, 0, 0, 6), Rat::frac(1, 720));
        // pairing (3 theta - 7x - gamma + 18 eta) . [X] = 133848
        let a = cx.ambient();
        let pairing = gen(a, Gen::Theta)
            .scale(&Rat::from_int(3))
            .sub(&gen(a, Gen::X).scale(&Rat::from_int(7)))
            .sub(&gen(a, Gen::Gamma))
            .add(&gen(a, Gen::Eta).scale(&Rat::from_int(18)));
        assert_eq!(pairing.mul(&cx).integrate(), Rat::from_int(133848));
    }

    #[test]
    fn class_y_known_values() {
        let cy = class_y(8);
        let a = cy.ambient();
        let eta = gen(a, Gen::Eta);
        assert_eq!(eta.mul(&cy).integrate(), Rat::from_int(429));
        let pairing = gen(a, Gen::X)
            .scale(&Rat::from_int(-7))
            .add(&gen(a, Gen::Theta).scale(&Rat::from_int(3)))
            .add(&eta);
        assert_eq!(pairing.mul(&cy).integrate(), Rat::from_int(24882));
    }

    #[test]
    fn porteous_route_equals_closed_form() {
        for k in 5..=20u32 {
            assert_eq!(class_x_porteous(k).unwrap(), class_x(k), "X at k = {k}");
            assert_eq!(class_y_porteous(k).unwrap(), class_y(k), "Y at k = {k}");
        }
    }

    #[test]
    fn jet_chern_entry_degree_zero_is_one() {
        for beta in 0..5 {
            let c0 = jet_chern_entry(6, 2, 0, beta);
            assert_eq!(c0, TautClass::one(Ambient::pic_prod(8)));
        }
        assert!(jet_chern_entry(6, 2, -1, 3).is_zero());
    }

    #[test]
    fn xj_alpha_codimension() {
        // k=8, j=2: codimension of the class is 2k-2-j = 12
        let c = class_xj_alpha(8, 2, 0).unwrap();
        assert!(c.is_homogeneous_of(12));
        assert!(!c.is_zero());
        assert!(class_xj_alpha(8, 2, 2).is_err());
        assert!(class_xj_alpha(8, 8, 0).is_err());
    }

    #[test]
    fn xj_alpha_schubert_counts() {
        // eta . X_{j,alpha} counts linear series with prescribed ramification
        // at a fixed point; cross-checked against the vanishing-sequence
        // count g! prod(a_l - a_s) / prod(a_s!) when g - d + r = 0.
        let schubert = |g: i64, a_seq: &[i64]| -> Rat {
            let mut v = Rat::one();
            for s in 0..a_seq.len() {
                for l in s + 1..a_seq.len() {
                    v *= &Rat::from_int(a_seq[l] - a_seq[s]);
                }
            }
            for &e in a_seq {
                v *= &inv_factorial(e);
            }
            v * Rat::from_bigint(factorial(g))
        };
        // k=6, j=2: alpha=0 has a = (1,2,4,5,6), alpha=1 has a = (0,3,4,5,6)
        let eta = gen(Ambient::pic_prod(8), Gen::Eta);
        let x20 = class_xj_alpha(6, 2, 0).unwrap();
        assert_eq!(eta.mul(&x20).integrate(), schubert(8, &[1, 2, 4, 5, 6]));
        assert_eq!(eta.mul(&x20).integrate(), Rat::from_int(28));
        let x21 = class_xj_alpha(6, 2, 1).unwrap();
        assert_eq!(eta.mul(&x21).integrate(), schubert(8, &[0, 3, 4, 5, 6]));
        assert_eq!(eta.mul(&x21).integrate(), Rat::from_int(14));
        // k=9, j=2, alpha=0: a = (1,2,4,5,6,7,8,9) on genus 14
        let eta14 = gen(Ambient::pic_prod(14), Gen::Eta);
        let x90 = class_xj_alpha(9, 2, 0).unwrap();
        assert_eq!(
            eta14.mul(&x90).integrate(),
            schubert(14, &[1, 2, 4, 5, 6, 7, 8, 9])
        );
        assert_eq!(eta14.mul(&x90).integrate(), Rat::from_int(1001));
    }

    #[test]
    fn weighted_aggregate_equals_alpha_sum() {
        for i in 0..=4u32 {
            let k = 3 * i + 6;
            for j in 2..=(3 * i + 5) {
                assert_eq!(
                    class_xj_weighted(i, j).unwrap(),
                    class_xj_weighted_alpha_sum(k, j).unwrap(),
                    "aggregate mismatch at i = {i}, j = {j}"
                );
            }
        }
    }

    #[test]
    fn weighted_gamma_coefficient_example() {
        // i=0, j=2: prefactor at k=6, j=2 is 1/120 and the gamma-coefficient
        // factor is 8/3, so the stored gamma coefficient is 1/45.
        let w = class_xj_weighted(0, 2).unwrap();
        assert_eq!(w.coeff_of(0, 1, 0, 7), Rat::frac(1, 45));
        assert!(w.is_homogeneous_of(8));
    }

    #[test]
    fn ypp_known_values() {
        assert!(class_ypp(2, 1).unwrap().is_zero());
        let c = class_ypp(2, 0).unwrap();
        let a = Ambient::pic_prod(2);
        assert_eq!(c, gen(a, Gen::Theta));
        // pairing theta . Y''_{j,0}: the coefficient of theta^j times j!
        // equals (j - 0) j!/(0!(j-0)!) = j
        for j in 2..=8u32 {
            let c = class_ypp(j, 0).unwrap();
            let theta = gen(Ambient::pic_prod(j), Gen::Theta);
            let top = theta.mul(&c).coeff_of(0, 0, 0, j);
            assert_eq!(
                top * Rat::from_bigint(factorial(j as i64)),
                Rat::from_int(j as i64)
            );
        }
    }
}
