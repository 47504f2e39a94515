//! Truncated symmetric functions expanded on the power-sum basis.
//!
//! A [`SymSeries`] is a finite map from partitions `alpha` to coefficients
//! of `p_alpha`, together with the degree `N` above which everything has
//! been dropped. Binary operations require equal truncation degrees.

mod families;
mod plethysm;
mod series;
mod specialize;

pub use families::{
    complete_h, hook_schur, ribbon, ribbon_by_recurrence, upper_hessenberg_determinant,
    witt_ell, witt_product,
};
pub use plethysm::{adams, plethysm};
pub use series::SymSeries;
pub use specialize::{scalar_product, scale_alphabet_one_minus_q, specialize, Specialization};
