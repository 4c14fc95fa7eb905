//! Torus-fixed points of Hilbert schemes of points on toric surfaces.

pub mod ext;
mod fixed;
pub mod localize;
mod partition;

pub use ext::{ext1_char, hom_char, pair_ext_char, tangent_char, virtual_ext1_char};
pub use fixed::{gottsche_coefficient, hilb_fixed_points, FixedPointCache, HilbFixedPoint};
pub use localize::{co_degree, euler_integral, localize, localize_terms, unit_integral, Contribution, LocalizationOutcome, SeedPlan};
pub use partition::Partition;

use crate::error::{Error, Result};
use crate::toric::ToricSurfaceModel;
use num_bigint::BigInt;

/// Euler number of Hilbⁿ(S) by localization, checked against the generating function.
pub fn chi_top_check(s: &ToricSurfaceModel, n: u32, plan: &SeedPlan) -> Result<BigInt> {
    let points = hilb_fixed_points(s, n);
    let got = euler_integral(s, &points, n, plan)?.value;
    let want = gottsche_coefficient(s.euler_number as u32, n);
    if !got.is_integer() || *got.numer() != want {
        return Err(Error::Inconsistent(format!("χ(Hilb^{n}) = {got}, expected {want}")));
    }
    Ok(want)
}
