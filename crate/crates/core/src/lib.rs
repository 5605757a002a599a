//! Interval temporal graphs and temporal path queries.
//!
//! An interval temporal graph has edges that are present over integer time
//! intervals and carry a constant traversal delay. This crate provides:
//!
//! - the data model: graphs, presence events, temporal paths, and
//!   piecewise-linear earliest-arrival profiles ([`graph`], [`path`],
//!   [`profile`]);
//! - a near-linear one-to-one profile and fastest-path computation for
//!   undirected zero-delay graphs, driven by fully-dynamic connectivity
//!   ([`profile`], [`dynconn`]);
//! - general-delay earliest-arrival search and exact desk-scale oracles
//!   over the time-expanded graph ([`routing`]);
//! - instance generators that encode triangle detection into temporal
//!   path queries, used as end-to-end cross-checks and benchmarks
//!   ([`reductions`]);
//! - a plain text instance format ([`io`]).

pub mod dynconn;
pub mod error;
pub mod graph;
pub mod io;
pub mod path;
pub mod profile;
pub mod reductions;
pub mod routing;

pub use dynconn::DynConn;
pub use error::{Error, Result};
pub use graph::{build_event_list, Event, EventKind, EventList, TemporalEdge, TemporalGraph, Time, Vertex};
pub use path::{duration, validate_path, PathStep, TemporalPath};
pub use profile::{compact_profile, fastest_from_profile, fastest_path, profile_st, Fastest, Profile, Triple};
pub use routing::{
    earliest_arrival, enumerate_paths, fastest_by_departure_sweep, oracle_time_expanded,
    EarliestArrival, TimeExpandedOracle, Timetable,
};
