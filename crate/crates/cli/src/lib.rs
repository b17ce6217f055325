//! Scenario documents, the invariant pipeline and the fixture corpus behind
//! the `folia` command.

pub mod document;
pub mod fixtures;
pub mod pipeline;
pub mod render;

pub use document::{parse_scenario, serialize_scenario, ParseError, ScenarioDocument};
pub use pipeline::{run_pipeline, InvariantReport};
