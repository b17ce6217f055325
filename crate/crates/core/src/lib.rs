//! Exact invariants of foliations on rational surfaces.
//!
//! Every quantity is an exact rational. The computational core is generic
//! over the integer backing of [`num_rational::Ratio`]; the aliases below
//! fix the arbitrary precision backing used by default.

pub mod blowup;
pub mod chern;
pub mod error;
pub mod fibration;
pub mod foliation;
pub mod lattice;
pub mod linalg;
pub mod local;
pub mod scalar;
pub mod zariski;

pub use error::{Error, Result};
pub use scalar::ExactInt;

use num_bigint::BigInt;

/// Exact rational with arbitrary precision.
pub type Rational = num_rational::Ratio<BigInt>;
/// Fixed width rational for small randomized inputs.
pub type Rational64 = num_rational::Ratio<i64>;
pub type Rational128 = num_rational::Ratio<i128>;

pub type Divisor = lattice::DivisorClass<BigInt>;
pub type Singularity = local::SingularityRecord<BigInt>;
pub type Curve = foliation::CurveRecord<BigInt>;
pub type Scenario = foliation::FoliatedScenario<BigInt>;
pub type Check = foliation::CheckResult<BigInt>;
pub type Chern = chern::ChernNumbers<BigInt>;
pub type Decomposition = zariski::ZariskiDecomposition<BigInt>;
pub type Fibration = fibration::FibrationModel<BigInt>;
