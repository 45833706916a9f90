//! Certified lower and upper bounds on the spectral radius of directed
//! graphs (self-loops and multiarcs allowed), computed from exact
//! high-order outdegree counts.
//!
//! The library revolves around a handful of pieces:
//!
//! - [`Digraph`]: labeled sparse adjacency structure with integer arc
//!   multiplicities, plus trimming, strong connectivity, the index of
//!   imprimitivity, and cyclic r-partitions ([`graph`]).
//! - [`WalkTable`] / [`ReachPattern`]: exact big-integer k-outdegree
//!   tables and boolean walk-reachability patterns ([`walks`]).
//! - The bound families ([`bounds`]): classical row-sum (Frobenius),
//!   weighted row-sum, high-order ratio (Liu), arc-pair (Xu), and
//!   alpha-weighted pair (Kolotilina) bounds, all sandwiching rho(G).
//! - Equality diagnosis ([`equality`]): exact outdegree-regularity and
//!   quasiregularity checks that decide when the bounds are tight, and
//!   the rho^r root-of-integer consequence.
//! - An independent reference ([`oracle`]): shifted power iteration and
//!   an exact characteristic-polynomial route, used to validate bounds
//!   but never to compute them.
//!
//! The `examples/` directory holds one runnable example per capability;
//! a thin `rhobound` binary exposes the same functionality as CLI
//! subcommands (`analyze`, `bounds`, `sweep`, `equality`,
//! `paper-tables`).

pub mod bounds;
pub mod cli;
pub mod equality;
pub mod error;
pub mod format;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod walks;

pub use bounds::{
    bound_sweep, frobenius_bounds, kolotilina_best, kolotilina_bounds, liu_bounds,
    weighted_bounds, xu_bounds, AlphaSpec, BoundParams, BoundResult, ExtremumArg, SweepRow,
    SweepTable,
};
pub use equality::{
    block_constants, check_quasiregular, check_regular, equality_diagnosis,
    root_of_integer_check, BlockConstants, EqualityReport, Quasiregularity, Rational, RootCheck,
};
pub use error::{Error, Result};
pub use graph::{
    CyclicBlock, CyclicPartition, CyclicStructure, Digraph, SccDecomposition, TrimReport,
};
pub use io::{load_digraph, load_digraph_path, load_weights, resolve_weights, GraphFormat};
pub use oracle::{exact_charpoly_radius, spectral_radius_oracle, OracleMethod, OracleResult};
pub use walks::{ratio_compare, reach_pattern, walk_table, ReachPattern, WalkTable};
