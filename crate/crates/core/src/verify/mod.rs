//! Cross-checks between the combinatorial and symmetric function sides,
//! with reports and a disk cache for H̃ tables.

pub mod cache;
pub mod report;
pub mod suites;

pub use cache::{prepare_tables, CacheManifest, CacheOutcome, TableCache};
pub use report::{CaseRecord, Report, Summary};
pub use suites::{verify_comb, verify_macdonald, verify_main, verify_sf, Suite, VerifyOptions};
