//! Measure of conflict over interval-valued evidence from multiple sources.
//!
//! Each source reports a closed interval. For any subset of sources the
//! conflict measure is the span-normalised length of the sub-intervals not
//! covered by every member, weighted by the fraction of members missing.
//! The crate evaluates it per subset ([`conflict`]), over the full subset
//! lattice ([`lattice`]), and over sliding windows of sensor series
//! ([`stream`]).

pub mod cli;
pub mod conflict;
pub mod evidence;
pub mod io;
pub mod lattice;
pub mod oracle;
pub mod partition;
pub mod scenarios;
pub mod stream;
pub mod subset;

pub use conflict::{conflict, conflict_of, conflict_raw};
pub use evidence::{validate_evidence, EvidenceError, EvidenceSet, Interval, SourceId};
pub use lattice::{check_monotone, check_normal, full_lattice, leave_one_out, ConflictLattice, LatticeError};
pub use oracle::grid_oracle;
pub use partition::{induced_partition, Partition, PartitionCell};
pub use scenarios::{gen_drift, paper_example, DriftScenarioConfig, ScenarioError};
pub use stream::{conflict_series, summarize, windows, ConflictSeries, SensorSeries, StreamError, WindowConfig};
pub use subset::{SourceSubset, SubsetError};
