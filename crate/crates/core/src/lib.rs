//! Progression-free sets, grid-free planar sets, and the lifting between
//! them.
//!
//! The toolkit has four layers:
//!
//! - **Types and detectors** ([`NaturalSet`], [`PointSet`], [`find_ap`],
//!   [`find_grid`]): finite sets with exact pattern detection and
//!   machine-checkable witnesses.
//! - **Builders** ([`greedy_ap_free`], [`behrend_set`], [`theta`]): AP-free
//!   sets and their band liftings, plus the witness conversions
//!   [`grid_to_ap`] / [`ap_to_grid`] that carry patterns across the lifting.
//! - **Extremal search** ([`max_ap_free`], [`max_grid_free`],
//!   [`certified_lower_bound`]): exact values of the extremal functions at
//!   desk scale, with exhaustive oracles for cross-validation.
//! - **Analysis** ([`row_energy`], [`check_row_bound`], [`energy_partial`],
//!   [`behrend_bound`]): the energy inequality chain in exact rational
//!   arithmetic and the asymptotic bound evaluator.

mod analysis;
mod behrend;
mod construct;
mod detect;
mod error;
mod points;
mod search;
mod set;
mod witness;

pub use analysis::{
    behrend_bound, check_row_bound, energy_partial, grid_bound_table, harmonic_partial,
    rational_string, relative_error, row_bound_is_equality, row_energy, BoundParams, EnergyReport,
    EnergyRow, EnergySum, GridBoundRow, EXACT_ENERGY_LIMIT,
};
pub use behrend::{behrend_construction, behrend_set, BehrendParams};
pub use construct::{ap_to_grid, greedy_ap_free, grid_to_ap, theta};
pub use detect::{find_ap, find_grid, verify_ap_witness, verify_grid_witness};
pub use error::{Error, Result};
pub use points::{Point, PointSet};
pub use search::{
    certified_lower_bound, max_ap_free, max_grid_free, oracle_max_ap_free, oracle_max_grid_free,
    CertifiedBound, SearchConfig, SearchResult, TieBreak,
};
pub use set::NaturalSet;
pub use witness::{ApWitness, GridWitness};
