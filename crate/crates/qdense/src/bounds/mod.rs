//! Exact rational bounds on complement counts and code densities, plus the
//! asymptotic-regime classifiers built on them.

mod cc;
mod classify;
mod cone;
mod mrd;
mod prior;
mod profile;
mod report;
mod section7;

pub use cc::{cc_bounds, cc_bounds_lmax, complement_bounds_from, tingley_lower};
pub use classify::{classify_cc_asymptotics, spread_ratio, CcVerdict, FamilyGrowth};
pub use cone::cone_bounds;
pub use mrd::{
    density_regime, generic_density_bounds, mrd_density_upper_m, mrd_density_upper_q,
    DensityRegime,
};
pub use prior::{prior_bounds, Extent, PriorBound, PriorValue};
pub use profile::IntersectionProfile;
pub use report::{BoundReport, Verdict};
pub use section7::{decomposition_rhs, duality_densities, special_basis_bound};
