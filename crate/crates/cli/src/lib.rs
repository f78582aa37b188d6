//! Harness around the engine: run records, invariant reports, the
//! counterexample search and the property suites.

pub mod audit;
pub mod corpus;
pub mod record;
pub mod report;
pub mod run;
pub mod search;
pub mod suites;

pub use audit::{audit_run, AuditCounts};
pub use record::{RecordLog, RunRecord};
pub use report::{invariant_report, InvariantReport};
pub use run::{analyze, exit_code, Analysis};
pub use search::{search, Hit, SearchError, SearchMode, SearchParams, SearchReport};
pub use suites::{run_suite, Suite, SuiteConfig, SuiteItem, SuiteReport, UnknownSuite};
