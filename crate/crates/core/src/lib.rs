pub mod error;
pub mod flips;
pub mod fraction;
pub mod laurent;
pub mod moduli;
pub mod rank2;
pub mod triple;
pub mod xseries;
pub mod zoo;

pub use error::{HodgeError, Result};
pub use fraction::FractionUV;
pub use laurent::{LaurentPoly, Monomial, Substitution};
pub use triple::{chi_triples, SigmaPosition, SigmaRange, TripleType};
pub use xseries::XSeries;
pub use zoo::{Chamber, Flags, HodgeResult};
