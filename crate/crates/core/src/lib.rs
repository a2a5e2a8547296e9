pub mod curve;
pub mod error;
pub mod exact;
pub mod invariants;
pub mod moduli;
pub mod moebius;
pub mod oracle;
pub mod par;
pub mod poly;
pub mod ring;
pub mod symmetry;

pub use error::{Error, Result};
pub use exact::{QuadExt, Rational, Scalar};
pub use poly::Poly;
pub use ring::{Field, IntegralDomain, Ring};
