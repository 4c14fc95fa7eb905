//! Fixed-point summation at random rational specializations.
//!
//! Each contribution is a symbolic numerator in `s1, s2` (with `s = 1`) and a
//! denominator character. The numerator's component of the ambient dimension
//! is kept and evaluated; the sum over fixed points must be the same number
//! at every specialization.

use super::{ext, HilbFixedPoint};
use crate::arith::{format_rational, GradedPoly, Rational};
use crate::character::Character;
use crate::error::{Error, Result};
use crate::toric::{EquivLineBundle, ToricSurfaceModel};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

pub const MAX_RESEEDS: usize = 16;

/// Deterministic stream of specializations `(s1, s2, 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeedPlan {
    pub seed: u64,
    pub count: usize,
}

impl SeedPlan {
    pub fn new(seed: u64, count: usize) -> Self {
        SeedPlan { seed, count: count.max(1) }
    }

    fn stream(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

impl Default for SeedPlan {
    fn default() -> Self {
        SeedPlan::new(0, 2)
    }
}

fn draw(rng: &mut ChaCha8Rng) -> [Rational; 3] {
    let mut coord = || {
        let mut p = 0i64;
        while p == 0 {
            p = rng.gen_range(-1_000_000..=1_000_000);
        }
        let q: i64 = rng.gen_range(1..=1000);
        Rational::new(BigInt::from(p), BigInt::from(q))
    };
    let s1 = coord();
    let s2 = coord();
    [s1, s2, Rational::one()]
}

#[derive(Clone, Debug)]
pub struct Contribution {
    pub numerator: GradedPoly,
    pub denominator: Character,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalizationOutcome {
    pub value: Rational,
    pub seeds_used: Vec<[Rational; 2]>,
    pub per_seed_values: Vec<Rational>,
    pub fixed_point_count: usize,
}

impl LocalizationOutcome {
    /// A value that needed no specialization at all.
    pub fn constant(value: Rational, fixed_point_count: usize) -> Self {
        LocalizationOutcome { value, seeds_used: Vec::new(), per_seed_values: Vec::new(), fixed_point_count }
    }
}

/// Σ_p numerator_p / e(denominator_p), degree `dim` part of the numerator.
pub fn localize_terms<P, F>(points: &[P], dim: u32, term: F, plan: &SeedPlan) -> Result<LocalizationOutcome>
where
    P: Sync,
    F: Fn(&P) -> Result<Contribution> + Sync,
{
    let terms: Vec<Contribution> = points
        .par_iter()
        .map(|p| {
            term(p).map(|c| Contribution { numerator: c.numerator.homogeneous(dim), denominator: c.denominator })
        })
        .collect::<Result<_>>()?;
    let mut rng = plan.stream();
    let mut seeds_used = Vec::new();
    let mut values = Vec::new();
    let mut retries = 0;
    while values.len() < plan.count {
        let x = draw(&mut rng);
        let evaluated: Result<Vec<Rational>> = terms
            .par_iter()
            .map(|t| {
                let d = t.denominator.euler_eval(&x)?;
                Ok(t.numerator.eval(&x) / d)
            })
            .collect();
        match evaluated {
            Ok(vs) => {
                let total = vs.into_iter().fold(Rational::zero(), |a, v| a + v);
                let [s1, s2, _] = x;
                seeds_used.push([s1, s2]);
                values.push(total);
            }
            Err(Error::DegenerateSeed) => {
                retries += 1;
                if retries > MAX_RESEEDS {
                    return Err(Error::SeedsExhausted(MAX_RESEEDS));
                }
            }
            Err(e) => return Err(e),
        }
    }
    if let Some(v) = values.iter().find(|v| **v != values[0]) {
        return Err(Error::NonConstant(format!("{} vs {}", format_rational(&values[0]), format_rational(v))));
    }
    Ok(LocalizationOutcome { value: values[0].clone(), seeds_used, per_seed_values: values, fixed_point_count: points.len() })
}

/// Integral over Hilbⁿ(S) of a class given at each fixed point.
pub fn localize<F>(s: &ToricSurfaceModel, points: &[HilbFixedPoint], n: u32, integrand: F, plan: &SeedPlan) -> Result<LocalizationOutcome>
where
    F: Fn(&HilbFixedPoint) -> Result<GradedPoly> + Sync,
{
    localize_terms(
        points,
        2 * n,
        |fp| Ok(Contribution { numerator: integrand(fp)?, denominator: ext::tangent_char(s, fp) }),
        plan,
    )
}

/// `∫_{Sⁿ} c_{2n}(Ext¹(I, I ⊗ L))`.
pub fn co_degree(
    s: &ToricSurfaceModel,
    points: &[HilbFixedPoint],
    l: &EquivLineBundle,
    n: u32,
    plan: &SeedPlan,
) -> Result<LocalizationOutcome> {
    localize(s, points, n, |fp| Ok(ext::ext1_char(s, fp, l)?.chern_class(2 * n)), plan)
}

/// `∫ c_{2n}(T)`, which must be the number of fixed points.
pub fn euler_integral(s: &ToricSurfaceModel, points: &[HilbFixedPoint], n: u32, plan: &SeedPlan) -> Result<LocalizationOutcome> {
    localize(s, points, n, |fp| Ok(ext::tangent_char(s, fp).chern_class(2 * n)), plan)
}

/// `Σ_p 1/e(T_p)`, the integral of 1; zero in positive dimension.
pub fn unit_integral(s: &ToricSurfaceModel, points: &[HilbFixedPoint], plan: &SeedPlan) -> Result<LocalizationOutcome> {
    localize_terms(
        points,
        0,
        |fp| Ok(Contribution { numerator: GradedPoly::one(0), denominator: ext::tangent_char(s, fp) }),
        plan,
    )
}
