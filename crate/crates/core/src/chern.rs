//! Formal Chern-class calculus: c1 rules for tensor, exterior and symmetric
//! powers, truncated total-Chern series with inversion and dualization, the
//! Thom-Porteous graded piece, and the Grothendieck-Riemann-Roch pushforward
//! for line bundles on the curve-times-base ambients.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::rat::{binom, inv_factorial, Rat};
use crate::ring::{Ambient, Gen, TautClass};

/// A bundle reduced to the shadow the computations need: a rank and a first
/// Chern class in a fixed ambient ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalBundle {
    pub rank: BigInt,
    pub c1: TautClass,
}

impl FormalBundle {
    pub fn new(rank: impl Into<BigInt>, c1: TautClass) -> Self {
        FormalBundle {
            rank: rank.into(),
            c1,
        }
    }

    pub fn ambient(&self) -> Ambient {
        self.c1.ambient()
    }
}

/// rank(a x b) = rank a * rank b, c1(a x b) = rank(b) c1(a) + rank(a) c1(b).
pub fn c1_tensor(a: &FormalBundle, b: &FormalBundle) -> FormalBundle {
    assert_eq!(
        a.ambient(),
        b.ambient(),
        "ambient mismatch in tensor product"
    );
    let c1 =
        a.c1.scale(&Rat::from_bigint(b.rank.clone()))
            .add(&b.c1.scale(&Rat::from_bigint(a.rank.clone())));
    FormalBundle::new(&a.rank * &b.rank, c1)
}

/// Exterior power: rank C(r, a), c1 = C(r-1, a-1) c1(e).
pub fn c1_exterior(e: &FormalBundle, a: i64) -> Result<FormalBundle> {
    let r = e
        .rank
        .clone()
        .try_into()
        .map_err(|_| Error::out_of_range("c1_exterior", "rank too large"))?;
    if a < 0 || a > r {
        return Err(Error::out_of_range(
            "c1_exterior",
            format!("a = {a} outside 0..=rank = {r}"),
        ));
    }
    let rank = binom(r, a).to_integer().expect("binomial is integral");
    let c1 = e.c1.scale(&binom(r - 1, a - 1));
    Ok(FormalBundle::new(rank, c1))
}

/// Symmetric power: rank C(r+b-1, b), c1 = C(r+b-1, b) * (b/r) * c1(e).
pub fn c1_sym(e: &FormalBundle, b: i64) -> Result<FormalBundle> {
    let r: i64 = e
        .rank
        .clone()
        .try_into()
        .map_err(|_| Error::out_of_range("c1_sym", "rank too large"))?;
    if b < 0 || r < 1 {
        return Err(Error::out_of_range(
            "c1_sym",
            format!("b = {b}, rank = {r}"),
        ));
    }
    let rank = binom(r + b - 1, b);
    let factor = &rank * &Rat::frac(b, r);
    Ok(FormalBundle::new(
        rank.to_integer().expect("binomial is integral"),
        e.c1.scale(&factor),
    ))
}

/// Total Chern series stored by graded parts, truncated at the ambient total
/// dimension. Invariant: part 0 is the unit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChernSeries {
    ambient: Ambient,
    parts: Vec<TautClass>,
}

impl ChernSeries {
    pub fn one(ambient: Ambient) -> Self {
        let n = ambient.total_dim() as usize + 1;
        let mut parts = vec![TautClass::zero(ambient); n];
        parts[0] = TautClass::one(ambient);
        ChernSeries { ambient, parts }
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    /// Build a series from an inhomogeneous class by splitting into graded
    /// parts. The degree-0 part must be 1.
    pub fn from_class(c: &TautClass) -> Self {
        let ambient = c.ambient();
        let mut s = ChernSeries::one(ambient);
        for d in 0..=ambient.total_dim() {
            s.parts[d as usize] = c.graded_piece(d);
        }
        assert_eq!(
            s.parts[0],
            TautClass::one(ambient),
            "series unit part must be 1"
        );
        s
    }

    pub fn piece(&self, degree: u32) -> TautClass {
        self.parts
            .get(degree as usize)
            .cloned()
            .unwrap_or_else(|| TautClass::zero(self.ambient))
    }

    pub fn mul(&self, rhs: &ChernSeries) -> ChernSeries {
        assert_eq!(self.ambient, rhs.ambient, "ambient mismatch in series");
        let n = self.parts.len();
        let mut parts = vec![TautClass::zero(self.ambient); n];
        for (i, p) in self.parts.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            for (j, q) in rhs.parts.iter().enumerate() {
                if i + j >= n || q.is_zero() {
                    continue;
                }
                parts[i + j] = parts[i + j].add(&p.mul(q));
            }
        }
        ChernSeries {
            ambient: self.ambient,
            parts,
        }
    }

    /// Multiplicative inverse of a series with unit part 1.
    pub fn inverse(&self) -> ChernSeries {
        assert_eq!(
            self.parts[0],
            TautClass::one(self.ambient),
            "series inverse needs unit part 1"
        );
        let n = self.parts.len();
        let mut inv = vec![TautClass::zero(self.ambient); n];
        inv[0] = TautClass::one(self.ambient);
        for m in 1..n {
            let mut acc = TautClass::zero(self.ambient);
            for s in 1..=m {
                acc = acc.add(&self.parts[s].mul(&inv[m - s]));
            }
            inv[m] = acc.neg();
        }
        ChernSeries {
            ambient: self.ambient,
            parts: inv,
        }
    }

    /// Chern series of the dual bundle: sign alternation on graded parts.
    pub fn dual(&self) -> ChernSeries {
        let parts = self
            .parts
            .iter()
            .enumerate()
            .map(|(d, p)| if d % 2 == 1 { p.neg() } else { p.clone() })
            .collect();
        ChernSeries {
            ambient: self.ambient,
            parts,
        }
    }

    /// Integer power of the series (negative exponents via the inverse).
    pub fn pow_int(&self, e: i64) -> ChernSeries {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut acc = ChernSeries::one(self.ambient);
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc
    }
}

/// Total Chern series of the tautological rank-k secant bundle on `C_k` for a
/// curve of genus `2k-3`: the truncated expansion of
/// `(1-x)^(-k+4) * exp(theta/(1-x))`, carried in the ring of `C x C_k`.
pub fn secant_total_chern(k: u32) -> ChernSeries {
    assert!(k >= 3, "secant bundle needs k >= 3");
    let ambient = Ambient::sym_prod(2 * k - 3, k);
    let x = TautClass::generator(ambient, Gen::X);
    let theta = TautClass::generator(ambient, Gen::Theta);

    let one_minus_x = ChernSeries::from_class(&TautClass::one(ambient).sub(&x));
    let inv_1mx = one_minus_x.inverse();

    // exp(theta/(1-x)) = sum_t (theta * (1-x)^{-1})^t / t!
    let theta_series = {
        let mut s = ChernSeries::one(ambient);
        s.parts[0] = TautClass::zero(ambient);
        s.parts[1] = theta;
        s
    };
    let t_over = theta_series.mul(&inv_1mx);
    let mut exp = ChernSeries::one(ambient);
    let mut pow = ChernSeries::one(ambient);
    for t in 1..=ambient.total_dim() as i64 {
        pow = pow.mul(&t_over);
        let mut scaled = pow.clone();
        let iv = inv_factorial(t);
        for p in scaled.parts.iter_mut() {
            *p = p.scale(&iv);
        }
        // exp += pow/t!, keeping part 0 = 1 intact
        for (d, p) in scaled.parts.iter().enumerate() {
            if !p.is_zero() {
                exp.parts[d] = exp.parts[d].add(p);
            }
        }
    }
    one_minus_x.pow_int(-(k as i64) + 4).mul(&exp)
}

/// Thom-Porteous graded piece: optionally dualize, invert multiplicatively,
/// and return the requested graded part.
pub fn porteous_piece(s: &ChernSeries, degree: u32, dualize: bool) -> TautClass {
    let s = if dualize { s.dual() } else { s.clone() };
    s.inverse().piece(degree)
}

/// c1 of the twisting bundle `M = pi_1^* K_C (-U)` on `C x C_{k-2}`:
/// `(3k-6) eta - gamma - x`.
pub fn c1_of_m(k: u32) -> TautClass {
    let ambient = Ambient::sym_prod(2 * k - 3, k - 2);
    let eta = TautClass::generator(ambient, Gen::Eta);
    let gamma = TautClass::generator(ambient, Gen::Gamma);
    let x = TautClass::generator(ambient, Gen::X);
    eta.scale(&Rat::from_int(3 * k as i64 - 6))
        .sub(&gamma)
        .sub(&x)
}

/// GRR pushforward of a line bundle along the curve fiber: for a line bundle
/// with first Chern class `c` upstairs, returns the degree-1 part of
/// `pi_* [(1 + c + c^2/2)(1 - (g-1) eta)]`, i.e. the pushforward of the
/// codimension-2 part. Chern character truncated at degree 2 and Todd at
/// degree 1; deeper terms never contribute in these ambients.
pub fn grr_push_c1(c: &TautClass) -> TautClass {
    let g = c.ambient().genus() as i64;
    let ambient = c.ambient();
    let eta = TautClass::generator(ambient, Gen::Eta);
    let ch = TautClass::one(ambient)
        .add(c)
        .add(&c.mul(c).scale(&Rat::frac(1, 2)));
    let td = TautClass::one(ambient).add(&eta.scale(&Rat::from_int(-(g - 1))));
    ch.mul(&td).graded_piece(2).pushforward_fiber()
}

/// c1 of `F_j = pi_2_* (M^j)` on `C_{k-2}` via the GRR pipeline. Must equal
/// the closed form `-j^2 theta - j(3j-2)(k-2) x`.
pub fn grr_c1_fj(k: u32, j: u32) -> TautClass {
    assert!(k >= 3 && j >= 1);
    grr_push_c1(&c1_of_m(k).scale(&Rat::from_int(j as i64)))
}

/// The closed form of `c1(F_j)`, for cross-checking the GRR route.
pub fn closed_c1_fj(k: u32, j: u32) -> TautClass {
    let ambient = Ambient::sym_prod(2 * k - 3, k - 2);
    let theta = TautClass::generator(ambient, Gen::Theta);
    let x = TautClass::generator(ambient, Gen::X);
    let j = j as i64;
    let k = k as i64;
    theta
        .scale(&Rat::from_int(-j * j))
        .add(&x.scale(&Rat::from_int(-j * (3 * j - 2) * (k - 2))))
}
