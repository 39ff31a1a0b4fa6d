//! Classes on the three-factor products `C x C x C_d` (and the Picard
//! variant) that mediate pushforwards of diagonal-twisted sheaves.
//!
//! The first curve factor survives into the output ring; the second is the
//! direction being integrated. Odd cross classes: gamma1 (first curve vs
//! base), gamma2 (second curve vs base), gamma12 (the two curve factors).
//! Products reduce by eta_i^2 = 0, eta_i gamma_i = 0, gamma_i^2 = -2 eta_i
//! theta, gamma12^2 = -2g eta1 eta2, gamma12 gamma2 = eta2 gamma1 and
//! gamma12 gamma1 = eta1 gamma2.

use std::collections::BTreeMap;

use crate::rat::Rat;
use crate::ring::{Ambient, TautClass};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct TripleMono {
    pub eta1: u8,
    pub gamma1: u8,
    pub eta2: u8,
    pub gamma2: u8,
    pub gamma12: u8,
    pub x: u32,
    pub theta: u32,
}

impl TripleMono {
    const ONE: TripleMono = TripleMono {
        eta1: 0,
        gamma1: 0,
        eta2: 0,
        gamma2: 0,
        gamma12: 0,
        x: 0,
        theta: 0,
    };
}

/// A class on the triple product over the output ambient `C x base`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleClass {
    ambient: Ambient,
    terms: BTreeMap<TripleMono, Rat>,
}

impl TripleClass {
    pub fn zero(ambient: Ambient) -> Self {
        TripleClass {
            ambient,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ambient: Ambient) -> Self {
        let mut c = TripleClass::zero(ambient);
        c.accumulate(TripleMono::ONE, Rat::one());
        c
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    fn from_mono(ambient: Ambient, m: TripleMono, coeff: Rat) -> Self {
        let mut c = TripleClass::zero(ambient);
        c.accumulate(m, coeff);
        c
    }

    pub fn eta1(ambient: Ambient) -> Self {
        Self::from_mono(
            ambient,
            TripleMono {
                eta1: 1,
                ..TripleMono::ONE
            },
            Rat::one(),
        )
    }

    pub fn eta2(ambient: Ambient) -> Self {
        Self::from_mono(
            ambient,
            TripleMono {
                eta2: 1,
                ..TripleMono::ONE
            },
            Rat::one(),
        )
    }

    pub fn gamma1(ambient: Ambient) -> Self {
        Self::from_mono(
            ambient,
            TripleMono {
                gamma1: 1,
                ..TripleMono::ONE
            },
            Rat::one(),
        )
    }

    pub fn gamma2(ambient: Ambient) -> Self {
        Self::from_mono(
            ambient,
            TripleMono {
                gamma2: 1,
                ..TripleMono::ONE
            },
            Rat::one(),
        )
    }

    pub fn gamma12(ambient: Ambient) -> Self {
        Self::from_mono(
            ambient,
            TripleMono {
                gamma12: 1,
                ..TripleMono::ONE
            },
            Rat::one(),
        )
    }

    pub fn x(ambient: Ambient) -> Self {
        assert!(ambient.has_x(), "x does not exist on {ambient:?}");
        Self::from_mono(
            ambient,
            TripleMono {
                x: 1,
                ..TripleMono::ONE
            },
            Rat::one(),
        )
    }

    pub fn theta(ambient: Ambient) -> Self {
        Self::from_mono(
            ambient,
            TripleMono {
                theta: 1,
                ..TripleMono::ONE
            },
            Rat::one(),
        )
    }

    /// The diagonal of the two curve factors: eta1 + eta2 + gamma12.
    pub fn diagonal(ambient: Ambient) -> Self {
        Self::eta1(ambient)
            .add(&Self::eta2(ambient))
            .add(&Self::gamma12(ambient))
    }

    fn accumulate(&mut self, m: TripleMono, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(Rat::zero);
        *entry += &coeff;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, rhs: &TripleClass) -> TripleClass {
        assert_eq!(self.ambient, rhs.ambient, "ambient mismatch");
        let mut out = self.clone();
        for (m, c) in rhs.terms.iter() {
            out.accumulate(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &TripleClass) -> TripleClass {
        self.add(&rhs.scale(&Rat::from_int(-1)))
    }

    pub fn scale(&self, s: &Rat) -> TripleClass {
        if s.is_zero() {
            return TripleClass::zero(self.ambient);
        }
        TripleClass {
            ambient: self.ambient,
            terms: self.terms.iter().map(|(m, c)| (*m, c * s)).collect(),
        }
    }

    /// Reduce a raw product of two normal-form monomials.
    fn mul_mono(&mut self, a: &TripleMono, b: &TripleMono, coeff: Rat, genus: u32) {
        let mut c = coeff;
        let mut e1 = a.eta1 as u32 + b.eta1 as u32;
        let mut e2 = a.eta2 as u32 + b.eta2 as u32;
        let mut g1 = a.gamma1 as u32 + b.gamma1 as u32;
        let mut g2 = a.gamma2 as u32 + b.gamma2 as u32;
        let mut g12 = a.gamma12 as u32 + b.gamma12 as u32;
        let mut th = a.theta + b.theta;

        // gamma12^2 = -2g eta1 eta2
        if g12 >= 2 {
            g12 -= 2;
            e1 += 1;
            e2 += 1;
            c *= &Rat::from_int(-2 * genus as i64);
        }
        // gamma12 gamma2 = eta2 gamma1; gamma12 gamma1 = eta1 gamma2
        if g12 == 1 && g2 >= 1 {
            g12 -= 1;
            g2 -= 1;
            e2 += 1;
            g1 += 1;
        } else if g12 == 1 && g1 >= 1 {
            g12 -= 1;
            g1 -= 1;
            e1 += 1;
            g2 += 1;
        }
        // gamma_i^2 = -2 eta_i theta
        if g1 >= 2 {
            g1 -= 2;
            e1 += 1;
            th += 1;
            c *= &Rat::from_int(-2);
        }
        if g2 >= 2 {
            g2 -= 2;
            e2 += 1;
            th += 1;
            c *= &Rat::from_int(-2);
        }
        // eta_i^2 = 0, eta_i gamma_i = 0, eta_i gamma12 = 0
        if e1 >= 2 || e2 >= 2 {
            return;
        }
        if (e1 == 1 && g1 >= 1) || (e2 == 1 && g2 >= 1) {
            return;
        }
        if g12 >= 1 && (e1 == 1 || e2 == 1) {
            return;
        }
        let x = a.x + b.x;
        self.accumulate(
            TripleMono {
                eta1: e1 as u8,
                gamma1: g1 as u8,
                eta2: e2 as u8,
                gamma2: g2 as u8,
                gamma12: g12 as u8,
                x,
                theta: th,
            },
            c,
        );
    }

    pub fn mul(&self, rhs: &TripleClass) -> TripleClass {
        assert_eq!(self.ambient, rhs.ambient, "ambient mismatch");
        let genus = self.ambient.genus();
        let mut out = TripleClass::zero(self.ambient);
        for (m1, c1) in self.terms.iter() {
            for (m2, c2) in rhs.terms.iter() {
                out.mul_mono(m1, m2, c1 * c2, genus);
            }
        }
        out
    }

    /// Integrate out the second curve factor: monomials carrying exactly
    /// eta2 (and no other factor-2 content) survive with eta2 stripped;
    /// everything else dies.
    pub fn push_second(&self) -> TautClass {
        let mut out = TautClass::zero(self.ambient);
        for (m, c) in self.terms.iter() {
            if m.eta2 == 1 && m.gamma2 == 0 && m.gamma12 == 0 {
                out = out.add(&TautClass::monomial(
                    self.ambient,
                    m.eta1 as u32,
                    m.gamma1 as u32,
                    m.x,
                    m.theta,
                    c.clone(),
                ));
            }
        }
        out
    }

    /// Restrict to the slice where the second curve coordinate is a fixed
    /// general point: eta2, gamma2, gamma12 restrict to zero.
    pub fn restrict_second_to_point(&self) -> TautClass {
        let mut out = TautClass::zero(self.ambient);
        for (m, c) in self.terms.iter() {
            if m.eta2 == 0 && m.gamma2 == 0 && m.gamma12 == 0 {
                out = out.add(&TautClass::monomial(
                    self.ambient,
                    m.eta1 as u32,
                    m.gamma1 as u32,
                    m.x,
                    m.theta,
                    c.clone(),
                ));
            }
        }
        out
    }
}

/// GRR pushforward along the second curve factor for a line bundle with the
/// given first Chern class upstairs: degree-1 output part of
/// `push [(1 + c + c^2/2)(1 - (g-1) eta2)]`.
pub fn triple_grr_push_c1(c: &TripleClass) -> TautClass {
    let g = c.ambient().genus() as i64;
    let ambient = c.ambient();
    let ch = TripleClass::one(ambient)
        .add(c)
        .add(&c.mul(c).scale(&Rat::frac(1, 2)));
    let td =
        TripleClass::one(ambient).add(&TripleClass::eta2(ambient).scale(&Rat::from_int(-(g - 1))));
    // Degree-2 part is what pushes to a first Chern class; higher parts
    // would push to higher Chern data we never need.
    let full = ch.mul(&td);
    let mut deg2 = TripleClass::zero(ambient);
    for (m, coeff) in full.terms.iter() {
        let deg = m.eta1 as u32
            + m.gamma1 as u32
            + m.eta2 as u32
            + m.gamma2 as u32
            + m.gamma12 as u32
            + m.x
            + m.theta;
        if deg == 2 {
            deg2.accumulate(*m, coeff.clone());
        }
    }
    deg2.push_second()
}

/// c1 of `v^*(M^j)` on the triple product: `j((3k-6) eta2 - gamma2 - x)`.
pub fn v_pullback_m_power(ambient: Ambient, k: u32, j: u32) -> TripleClass {
    TripleClass::eta2(ambient)
        .scale(&Rat::from_int(3 * k as i64 - 6))
        .sub(&TripleClass::gamma2(ambient))
        .sub(&TripleClass::x(ambient))
        .scale(&Rat::from_int(j as i64))
}
