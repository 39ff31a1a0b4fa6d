//! The graded tautological ring of `C x C_d` and `C x Pic^d(C)`.
//!
//! Generators are the degree-2 classes eta (point class pulled from the
//! curve), gamma (the Kunneth cross term), x (the divisor class from the
//! symmetric product; absent on the Picard side) and theta (pullback of the
//! theta divisor). Relations: eta^2 = 0, eta*gamma = 0, gamma^2 = -2*eta*theta,
//! gamma^3 = 0. Every class is kept in a normal form where the relations have
//! been applied and monomials beyond the total dimension are dropped.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::rat::{factorial, inv_factorial, Rat};

/// Ambient space tag. `SymProd` is `C x C_d` for a curve of the given genus;
/// `PicProd` is `C x Pic^d(C)` (the ring only depends on the genus there).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Ambient {
    SymProd { genus: u32, d: u32 },
    PicProd { genus: u32 },
}

impl Ambient {
    pub fn sym_prod(genus: u32, d: u32) -> Self {
        Ambient::SymProd { genus, d }
    }

    pub fn pic_prod(genus: u32) -> Self {
        Ambient::PicProd { genus }
    }

    pub fn genus(&self) -> u32 {
        match *self {
            Ambient::SymProd { genus, .. } | Ambient::PicProd { genus } => genus,
        }
    }

    /// Complex dimension of the base factor (`C_d` or `Pic^d`).
    pub fn base_dim(&self) -> u32 {
        match *self {
            Ambient::SymProd { d, .. } => d,
            Ambient::PicProd { genus } => genus,
        }
    }

    /// Complex dimension of the product.
    pub fn total_dim(&self) -> u32 {
        self.base_dim() + 1
    }

    pub fn has_x(&self) -> bool {
        matches!(self, Ambient::SymProd { .. })
    }
}

/// Ring generators.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Gen {
    Eta,
    Gamma,
    X,
    Theta,
}

/// Normal-form monomial: eta and gamma exponents are 0 or 1 and never both 1.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Mono {
    pub eta: u8,
    pub gamma: u8,
    pub x: u32,
    pub theta: u32,
}

impl Mono {
    pub const ONE: Mono = Mono {
        eta: 0,
        gamma: 0,
        x: 0,
        theta: 0,
    };

    pub fn codim(&self) -> u32 {
        self.eta as u32 + self.gamma as u32 + self.x + self.theta
    }
}

// Degree-major ordering keeps Display output readable and deterministic.
impl Ord for Mono {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.codim(), self.eta, self.gamma, self.x, self.theta).cmp(&(
            other.codim(),
            other.eta,
            other.gamma,
            other.x,
            other.theta,
        ))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// An element of the tautological ring in normal form, tagged with its ambient.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TautClass {
    ambient: Ambient,
    terms: BTreeMap<Mono, Rat>,
}

impl TautClass {
    pub fn zero(ambient: Ambient) -> Self {
        TautClass {
            ambient,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ambient: Ambient) -> Self {
        Self::monomial(ambient, 0, 0, 0, 0, Rat::one())
    }

    pub fn generator(ambient: Ambient, gen: Gen) -> Self {
        let (e, g, x, t) = match gen {
            Gen::Eta => (1, 0, 0, 0),
            Gen::Gamma => (0, 1, 0, 0),
            Gen::X => (0, 0, 1, 0),
            Gen::Theta => (0, 0, 0, 1),
        };
        Self::monomial(ambient, e, g, x, t, Rat::one())
    }

    /// Single monomial `coeff * eta^e gamma^g x^a theta^t`, normalized.
    pub fn monomial(ambient: Ambient, e: u32, g: u32, x: u32, t: u32, coeff: Rat) -> Self {
        assert!(ambient.has_x() || x == 0, "x does not exist on {ambient:?}");
        let mut class = TautClass::zero(ambient);
        class.add_reduced(e, g, x, t, coeff);
        class
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Mono) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeff_of(&self, e: u32, g: u32, x: u32, t: u32) -> Rat {
        self.coeff(&Mono {
            eta: e as u8,
            gamma: g as u8,
            x,
            theta: t,
        })
    }

    /// Reduce a raw exponent tuple by the ring relations and accumulate.
    /// gamma^2 -> -2*eta*theta repeatedly, then eta^2, eta*gamma, leftover
    /// gamma powers and over-dimension monomials die.
    fn add_reduced(&mut self, e: u32, g: u32, x: u32, t: u32, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        let (mut e, mut g, mut t, mut c) = (e, g, t, coeff);
        while g >= 2 {
            g -= 2;
            e += 1;
            t += 1;
            c *= &Rat::from_int(-2);
        }
        if e >= 2 || (e == 1 && g == 1) {
            return;
        }
        let m = Mono {
            eta: e as u8,
            gamma: g as u8,
            x,
            theta: t,
        };
        if m.codim() > self.ambient.total_dim() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(Rat::zero);
        *entry += &c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    #[track_caller]
    fn check_same_ambient(&self, rhs: &TautClass) {
        assert_eq!(
            self.ambient, rhs.ambient,
            "ambient mismatch: cross-ambient ring operations are type errors"
        );
    }

    pub fn add(&self, rhs: &TautClass) -> TautClass {
        self.check_same_ambient(rhs);
        let mut out = self.clone();
        for (m, c) in rhs.terms.iter() {
            let entry = out.terms.entry(*m).or_insert_with(Rat::zero);
            *entry += c;
            if entry.is_zero() {
                out.terms.remove(m);
            }
        }
        out
    }

    pub fn sub(&self, rhs: &TautClass) -> TautClass {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> TautClass {
        self.scale(&Rat::from_int(-1))
    }

    pub fn scale(&self, s: &Rat) -> TautClass {
        if s.is_zero() {
            return TautClass::zero(self.ambient);
        }
        TautClass {
            ambient: self.ambient,
            terms: self.terms.iter().map(|(m, c)| (*m, c * s)).collect(),
        }
    }

    /// Product in normal form. Truncation at the total dimension is applied
    /// during multiplication, not just at storage time.
    pub fn mul(&self, rhs: &TautClass) -> TautClass {
        self.check_same_ambient(rhs);
        let mut out = TautClass::zero(self.ambient);
        for (m1, c1) in self.terms.iter() {
            for (m2, c2) in rhs.terms.iter() {
                out.add_reduced(
                    m1.eta as u32 + m2.eta as u32,
                    m1.gamma as u32 + m2.gamma as u32,
                    m1.x + m2.x,
                    m1.theta + m2.theta,
                    c1 * c2,
                );
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> TautClass {
        let mut acc = TautClass::one(self.ambient);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// The graded piece of codimension `c`.
    pub fn graded_piece(&self, c: u32) -> TautClass {
        TautClass {
            ambient: self.ambient,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.codim() == c)
                .map(|(m, r)| (*m, r.clone()))
                .collect(),
        }
    }

    pub fn is_homogeneous_of(&self, c: u32) -> bool {
        self.terms.keys().all(|m| m.codim() == c)
    }

    /// Integral over the total space.
    ///
    /// On `C x C_d` the monomials `eta * theta^a * x^b` with `a + b = d`
    /// evaluate to `g!/(g-a)!`; on `C x Pic^d` the monomial `eta * theta^g`
    /// evaluates to `g!`. Everything else integrates to zero, including pure
    /// pullbacks whose degree exceeds the base dimension.
    pub fn integrate(&self) -> Rat {
        let g = self.ambient.genus() as i64;
        let mut total = Rat::zero();
        for (m, c) in self.terms.iter() {
            if m.eta != 1 || m.gamma != 0 {
                continue;
            }
            match self.ambient {
                Ambient::SymProd { d, .. } => {
                    if m.x + m.theta == d {
                        // g!/(g-a)! via inv_factorial so a > g vanishes
                        let weight =
                            Rat::from_bigint(factorial(g)) * inv_factorial(g - m.theta as i64);
                        total += c * &weight;
                    }
                }
                Ambient::PicProd { genus } => {
                    if m.theta == genus && m.x == 0 {
                        total += c * &Rat::from_bigint(factorial(g));
                    }
                }
            }
        }
        total
    }

    /// Degree of a pure pullback class on the base factor alone: evaluates
    /// top-degree monomials in x and theta against `C_d` or `Pic^d`, with no
    /// eta required. Used for pairings of cycles that live on the base, like
    /// the pencil loci on the Picard variety of a tail curve.
    pub fn integrate_base(&self) -> Rat {
        let g = self.ambient.genus() as i64;
        let mut total = Rat::zero();
        for (m, c) in self.terms.iter() {
            if m.eta != 0 || m.gamma != 0 {
                continue;
            }
            if m.x + m.theta != self.ambient.base_dim() {
                continue;
            }
            let weight = Rat::from_bigint(factorial(g)) * inv_factorial(g - m.theta as i64);
            total += c * &weight;
        }
        total
    }

    /// Pushforward along the curve fiber: `eta * m -> m` for `m` pure in
    /// x and theta, everything without an eta factor dies. The gamma^2
    /// contribution is automatic because normal form already rewrote it.
    pub fn pushforward_fiber(&self) -> TautClass {
        let mut out = TautClass::zero(self.ambient);
        for (m, c) in self.terms.iter() {
            if m.eta == 1 && m.gamma == 0 {
                out.add_reduced(0, 0, m.x, m.theta, c.clone());
            }
        }
        out
    }

    /// Apply a generator-substitution table as a ring homomorphism into
    /// `target`. Errors if some generator occurring with nonzero exponent has
    /// no table entry; in particular the pullbacks of gamma are never
    /// invented.
    pub fn substitute(&self, table: &SubstTable, target: Ambient) -> Result<TautClass> {
        let mut out = TautClass::zero(target);
        for (m, c) in self.terms.iter() {
            let mut term = TautClass::monomial(target, 0, 0, 0, 0, c.clone());
            let factors: [(Gen, u32); 4] = [
                (Gen::Eta, m.eta as u32),
                (Gen::Gamma, m.gamma as u32),
                (Gen::X, m.x),
                (Gen::Theta, m.theta),
            ];
            for (gen, e) in factors {
                if e == 0 {
                    continue;
                }
                let image = table
                    .images
                    .get(&gen)
                    .ok_or(Error::MissingSubstitution(gen))?;
                if image.ambient != target {
                    return Err(Error::AmbientMismatch {
                        expected: target,
                        got: image.ambient,
                    });
                }
                term = term.mul(&image.pow(e));
            }
            out = out.add(&term);
        }
        Ok(out)
    }
}

impl fmt::Display for TautClass {
    /// Ordered monomial list `coeff * eta^a gamma^b x^c theta^d`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            if *m != Mono::ONE {
                write!(f, " *")?;
            }
            let mut gen = |name: &str, e: u32| -> fmt::Result {
                match e {
                    0 => Ok(()),
                    1 => write!(f, " {name}"),
                    _ => write!(f, " {name}^{e}"),
                }
            };
            gen("eta", m.eta as u32)?;
            gen("gamma", m.gamma as u32)?;
            gen("x", m.x)?;
            gen("theta", m.theta)?;
        }
        Ok(())
    }
}

/// Generator-substitution table for pullbacks along maps between ambients.
#[derive(Clone, Debug)]
pub struct SubstTable {
    images: BTreeMap<Gen, TautClass>,
}

impl SubstTable {
    pub fn new() -> Self {
        SubstTable {
            images: BTreeMap::new(),
        }
    }

    pub fn with(mut self, gen: Gen, image: TautClass) -> Self {
        self.images.insert(gen, image);
        self
    }

    /// Identity table on every generator of `ambient`.
    pub fn identity(ambient: Ambient) -> Self {
        let mut t = SubstTable::new()
            .with(Gen::Eta, TautClass::generator(ambient, Gen::Eta))
            .with(Gen::Gamma, TautClass::generator(ambient, Gen::Gamma))
            .with(Gen::Theta, TautClass::generator(ambient, Gen::Theta));
        if ambient.has_x() {
            t = t.with(Gen::X, TautClass::generator(ambient, Gen::X));
        }
        t
    }

    /// Pullback along `(y, D) -> 2y + D`, from classes in x, theta on `C_k`
    /// to `C x C_{k-2}`: x -> 2 eta + x, theta -> 4g eta + theta - 2 gamma.
    /// The pullback of gamma is deliberately not defined.
    pub fn epsilon_star(k: u32) -> (Self, Ambient) {
        let g = 2 * k - 3;
        let target = Ambient::sym_prod(g, k - 2);
        let eta = TautClass::generator(target, Gen::Eta);
        let x = TautClass::generator(target, Gen::X);
        let theta = TautClass::generator(target, Gen::Theta);
        let gamma = TautClass::generator(target, Gen::Gamma);
        let table = SubstTable::new()
            .with(Gen::X, eta.scale(&Rat::from_int(2)).add(&x))
            .with(
                Gen::Theta,
                eta.scale(&Rat::from_int(4 * g as i64))
                    .add(&theta)
                    .add(&gamma.scale(&Rat::from_int(-2))),
            );
        (table, target)
    }

    /// Pullback along `(y, D) -> y + q + D`: x -> x + eta,
    /// theta -> g eta + theta - gamma.
    pub fn chi_star(k: u32) -> (Self, Ambient) {
        let g = 2 * k - 3;
        let target = Ambient::sym_prod(g, k - 2);
        let eta = TautClass::generator(target, Gen::Eta);
        let x = TautClass::generator(target, Gen::X);
        let theta = TautClass::generator(target, Gen::Theta);
        let gamma = TautClass::generator(target, Gen::Gamma);
        let table = SubstTable::new().with(Gen::X, x.add(&eta)).with(
            Gen::Theta,
            eta.scale(&Rat::from_int(g as i64))
                .add(&theta)
                .add(&gamma.neg()),
        );
        (table, target)
    }
}

impl Default for SubstTable {
    fn default() -> Self {
        Self::new()
    }
}
