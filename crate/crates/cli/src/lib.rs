//! Expression language, verification suites and report writing behind the
//! `shuffle-forge` binary.

pub mod dsl;
pub mod eval;
pub mod suite;

pub use dsl::{parse_expr, ParseError, Parsed};
pub use eval::{eval, EvalConfig, Show, Source};
pub use suite::{run_suite, ConfigError, Report, Suite, SuiteConfig};
