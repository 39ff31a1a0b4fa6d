//! Exact symbolic intersection-theory engine for divisor classes on moduli
//! of curves: tautological ring arithmetic on products with symmetric and
//! Picard factors, formal Chern-class calculus, Thom-Porteous degeneracy
//! classes, the syzygy-divisor slope pipeline, the pointed genus-14 divisor,
//! and the general-type certificates. All computation paths are exact
//! rational arithmetic; decimals are display-only.

pub mod bundles;
pub mod chern;
pub mod cycles;
pub mod enumerative;
pub mod error;
pub mod kodaira;
pub mod pipeline;
pub mod pointed;
pub mod rat;
pub mod report;
pub mod ring;
pub mod triple;
pub mod verify;

pub use error::{Error, Result};
pub use rat::{binom, factorial, inv_factorial, multinom, Rat};
pub use ring::{Ambient, Gen, Mono, SubstTable, TautClass};
