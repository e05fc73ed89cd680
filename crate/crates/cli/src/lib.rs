//! Support code for the `digibinom` command-line tool: JSON schemas for
//! reports and matrices, range parsing and parameter sweeps.

pub mod dispatch;
pub mod export;
pub mod range;
pub mod report;
pub mod sweep;

pub use range::ParamRange;
pub use report::ReportJson;
