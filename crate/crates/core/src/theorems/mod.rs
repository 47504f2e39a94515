//! Counting formulas and generating functions for unimodal permutations.
//!
//! Every headline number here has at least two independent derivations;
//! functions that compute more than one route return
//! [`Error::RouteDisagreement`](crate::Error::RouteDisagreement) when they
//! differ, and every division is checked for exactness.

mod counts;
mod series;
mod table;

pub use counts::{
    bl_closed_form, bl_sum, c_value, u_alpha, u_alpha_q, u_alpha_q_with_hooks,
    u_alpha_via_specialization,
};
pub use series::{
    no_k_cycle_series, order_divides_series, theorem1_log, theorem1_series, theorem1_series_via_l,
    theoremq_series, u_q_series_from_theoremq, witt_specialization, WittSpecialization,
};
pub use table::{cycle_count_table, CycleCount, CycleCountTable};
