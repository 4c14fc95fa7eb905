//! Assembled identities: the quadric-versus-plane localization identity,
//! weight factors of the fixed loci, and virtual dimensions.

use crate::arith::{rat, GradedPoly, LinearForm, Rational};
use crate::character::Character;
use crate::error::{Error, Result};
use crate::hilb::{co_degree, hilb_fixed_points, localize_terms, pair_ext_char, tangent_char, virtual_ext1_char};
use crate::hilb::{Contribution, HilbFixedPoint, LocalizationOutcome, SeedPlan};
use crate::toric::{make_surface, EquivLineBundle, SurfaceName, ToricSurfaceModel};
use num_bigint::BigInt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub name: String,
    pub lhs: Rational,
    pub rhs_terms: Vec<(String, Rational)>,
    pub rhs_total: Rational,
    pub pass: bool,
    pub fixed_point_count: usize,
    pub seeds: Vec<[Rational; 2]>,
}

impl IdentityReport {
    fn new(name: &str, lhs: Rational, rhs_terms: Vec<(String, Rational)>, fixed_point_count: usize, seeds: Vec<[Rational; 2]>) -> Self {
        let rhs_total = rhs_terms.iter().fold(rat(0), |a, (_, v)| a + v);
        IdentityReport { name: name.into(), pass: lhs == rhs_total, lhs, rhs_terms, rhs_total, fixed_point_count, seeds }
    }
}

fn quadric() -> (ToricSurfaceModel, EquivLineBundle) {
    (make_surface(SurfaceName::P1xP1), EquivLineBundle::new(vec![2, 2]))
}

/// `∫_{(ℙ¹×ℙ¹)^{[n]}} c_{2n}(Ext¹(I, I(2)))`.
pub fn p1p1_lhs(n: u32, plan: &SeedPlan) -> Result<LocalizationOutcome> {
    let (q, l) = quadric();
    co_degree(&q, &hilb_fixed_points(&q, n), &l, n, plan)
}

/// Degree of the moduli of sheaves on a smooth quadric with the same Hilbert
/// polynomial: every `I_Z ⊗ O(a, −a)` with `|Z| = n − a²` contributes.
pub fn p1p1_lhs_all_twists(n: u32, plan: &SeedPlan) -> Result<(Rational, Vec<(i64, Rational)>)> {
    let mut parts = Vec::new();
    let mut a = 0i64;
    while (a * a) as u32 <= n {
        let v = p1p1_lhs(n - (a * a) as u32, plan)?.value;
        parts.push((a, v.clone()));
        if a > 0 {
            parts.push((-a, v));
        }
        a += 1;
    }
    let total = parts.iter().fold(rat(0), |acc, (_, v)| acc + v);
    Ok((total, parts))
}

fn nested_range(n: u32) -> std::ops::RangeInclusive<u32> {
    n.div_ceil(2)..=n
}

/// Normal character of the nested fixed locus at a pair of monomial ideals.
pub fn nested_normal(p2: &ToricSurfaceModel, fp1: &HilbFixedPoint, fp2: &HilbFixedPoint) -> Result<Character> {
    let o = |d: i64| EquivLineBundle::new(vec![d]);
    let rhom = |a: &HilbFixedPoint, b: &HilbFixedPoint, d: i64| pair_ext_char(p2, a, b, &o(d));
    let mut n = &rhom(fp1, fp1, 1)?.shift_s(1) + &rhom(fp2, fp2, 1)?.shift_s(1);
    n = &n + &rhom(fp2, fp1, 2)?.shift_s(2);
    n = &n - &rhom(fp1, fp2, -1)?.shift_s(-1);
    n = &n - &rhom(fp2, fp1, 1)?.shift_s(1);
    if n.iter().any(|(w, _)| w.is_zero()) {
        return Err(Error::NonIsolated);
    }
    Ok(n)
}

/// `e(T_B)` at a point of the base, `64 s⁹`, with `s = 1`.
const BASE_EULER: i64 = 64;

/// `∫_{(ℙ²)^{[k]} × (ℙ²)^{[n−k]}} 64 s⁹ c_n(Ext¹(I₁, I₂)) / e(N_k)`.
pub fn nested_term(n: u32, k: u32, plan: &SeedPlan) -> Result<LocalizationOutcome> {
    if !nested_range(n).contains(&k) {
        return Err(Error::OutOfRange(format!("k = {k} for n = {n}")));
    }
    let p2 = make_surface(SurfaceName::P2);
    let first = hilb_fixed_points(&p2, k);
    let second = hilb_fixed_points(&p2, n - k);
    let pairs: Vec<(&HilbFixedPoint, &HilbFixedPoint)> =
        first.iter().flat_map(|a| second.iter().map(move |b| (a, b))).collect();
    let o = EquivLineBundle::new(vec![0]);
    let dim = 2 * n;
    localize_terms(
        &pairs,
        dim,
        |(fp1, fp2)| {
            let cn = virtual_ext1_char(&p2, fp1, fp2, &o)?.chern_class(n).with_cutoff(dim);
            let inv_normal = nested_normal(&p2, fp1, fp2)?.scale(-1).euler_series_s_one(dim)?;
            let numerator = cn.mul(&inv_normal, dim).scale(&rat(BASE_EULER));
            Ok(Contribution { numerator, denominator: &tangent_char(&p2, fp1) + &tangent_char(&p2, fp2) })
        },
        plan,
    )
}

/// `χ(G, G(1))` for `G = T_{ℙ²}(−2)`, from `T = V ⊗ O(1) − O` with `V = H⁰(O(1))^∨`.
pub fn ms_normal_n1() -> Result<Character> {
    let p2 = make_surface(SurfaceName::P2);
    let v = p2.h0_character(&EquivLineBundle::new(vec![1]))?.dual();
    let chi = |d: i64| p2.chi_character(&EquivLineBundle::new(vec![d]));
    let one = Character::single(LinearForm::ZERO);
    // E = V·O(1) − O and F = E(1); χ(E, F) = Σ \bar a b χ(O(j − i))
    let e = [(v.clone(), 1i64, 1i64), (one.clone(), 0, -1)];
    let mut total = Character::new();
    for (a, i, sa) in &e {
        for (b, j, sb) in &e {
            let term = a.dual().tensor(b).tensor(&chi(j + 1 - i)?).scale(sa * sb);
            total = &total + &term;
        }
    }
    if total.rank() != 9 {
        return Err(Error::Inconsistent(format!("χ(G, G(1)) has rank {}", total.rank())));
    }
    Ok(total.shift_s(1))
}

/// `64 s⁹ / e(N)` at the unique stable sheaf for `n = 1`.
pub fn ms_term_n1(plan: &SeedPlan) -> Result<LocalizationOutcome> {
    let n = ms_normal_n1()?;
    localize_terms(
        &[()],
        0,
        |_| {
            let inv = n.scale(-1).euler_series_s_one(0)?;
            Ok(Contribution { numerator: inv.scale(&rat(BASE_EULER)), denominator: Character::new() })
        },
        plan,
    )
}

type RhsTerms = (Vec<(String, Rational)>, usize, Vec<[Rational; 2]>);

fn rhs_terms(n: u32, plan: &SeedPlan) -> Result<RhsTerms> {
    let mut terms = Vec::new();
    let mut count = 0;
    let mut seeds = Vec::new();
    if n == 1 {
        let ms = ms_term_n1(plan)?;
        count += 1;
        terms.push(("moduli".to_string(), ms.value));
    }
    for k in nested_range(n) {
        let t = nested_term(n, k, plan)?;
        count += t.fixed_point_count;
        seeds = t.seeds_used.clone();
        terms.push((format!("nested k={k}"), t.value));
    }
    Ok((terms, count, seeds))
}

/// Quadric degree versus fixed loci in the plane, as stated with `Q^{[n]}` alone.
pub fn p1p1_check(n: u32, plan: &SeedPlan) -> Result<IdentityReport> {
    if n >= 2 {
        return Err(Error::MsUnavailable);
    }
    let lhs = p1p1_lhs(n, plan)?;
    let (terms, count, seeds) = rhs_terms(n, plan)?;
    Ok(IdentityReport::new("p1p1", lhs.value, terms, count + lhs.fixed_point_count, seeds))
}

/// The same identity with every determinant twist `O(a, −a)` on the left.
pub fn p1p1_check_all_twists(n: u32, plan: &SeedPlan) -> Result<IdentityReport> {
    if n >= 2 {
        return Err(Error::MsUnavailable);
    }
    let (lhs, _) = p1p1_lhs_all_twists(n, plan)?;
    let (terms, count, seeds) = rhs_terms(n, plan)?;
    Ok(IdentityReport::new("p1p1-all-twists", lhs, terms, count, seeds))
}

/// `coefficient · s^exponent`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightFactor {
    pub coefficient: Rational,
    pub s_exponent: u32,
}

impl std::fmt::Display for WeightFactor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}*s^{}", self.coefficient, self.s_exponent)
    }
}

/// Euler class of `A ⊗ t ⊕ B ⊗ t²`, read off at `s = 1`.
fn euler_of_shifted(parts: &[(Character, i64)]) -> Result<WeightFactor> {
    let mut c = Character::new();
    for (ch, k) in parts {
        c = &c + &ch.shift_s(*k);
    }
    let rank = c.rank();
    let series = c.euler_series_s_one(0)?;
    Ok(WeightFactor { coefficient: series.constant_term(), s_exponent: rank as u32 })
}

/// Sections of `O_{D'}(j)` on a plane curve `D'` of degree `d'` cut out by `x0^{d'}`'s weight class.
fn plane_curve_sections(dprime: u32, j: i64) -> Result<Character> {
    let p2 = make_surface(SurfaceName::P2);
    let h = |d: i64| -> Result<Character> {
        if d < 0 {
            Ok(Character::new())
        } else {
            p2.h0_character(&EquivLineBundle::new(vec![d]))
        }
    };
    if j - (dprime as i64) < -2 {
        return Err(Error::OutOfRange(format!("H¹(O_D'({j}))")));
    }
    Ok(&h(j)? - &h(j - dprime as i64)?)
}

/// `e(N_{C/B}) = 2^{(3/2)d'(d'+1)} s^{d'(2d'+3)}`, checked against the section characters.
pub fn weight_factor_p2(dprime: u32) -> Result<WeightFactor> {
    if dprime == 0 {
        return Err(Error::OutOfRange("d' = 0".into()));
    }
    let dp = dprime as i64;
    let closed = WeightFactor {
        coefficient: Rational::from_integer(BigInt::from(2).pow((3 * dp * (dp + 1) / 2) as u32)),
        s_exponent: (dp * (2 * dp + 3)) as u32,
    };
    let recomputed = euler_of_shifted(&[(plane_curve_sections(dprime, dp)?, 1), (plane_curve_sections(dprime, 2 * dp)?, 2)])?;
    if closed != recomputed {
        return Err(Error::Inconsistent(format!("weight factor {closed} vs {recomputed}")));
    }
    Ok(closed)
}

/// `e(T_{B,b}) = 64 s⁹` from `H⁰(O(1)) ⊗ t ⊕ H⁰(O(2)) ⊗ t²` on ℙ².
pub fn weight_factor_p3() -> Result<WeightFactor> {
    let p2 = make_surface(SurfaceName::P2);
    let closed = WeightFactor { coefficient: rat(BASE_EULER), s_exponent: 9 };
    let recomputed = euler_of_shifted(&[
        (p2.h0_character(&EquivLineBundle::new(vec![1]))?, 1),
        (p2.h0_character(&EquivLineBundle::new(vec![2]))?, 2),
    ])?;
    if closed != recomputed {
        return Err(Error::Inconsistent(format!("weight factor {closed} vs {recomputed}")));
    }
    Ok(closed)
}

/// Inputs are intersection numbers on the ambient variety.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VdSetting {
    /// `1 + L²`.
    SurfaceFixedDet { l_squared: i64 },
    /// `L² + 1 − dim|L| − h^{0,1}`.
    SurfaceFixedDivisor { l_squared: i64, dim_linear_system: i64, h01: i64 },
    /// `1 − L²K/2`.
    ThreefoldFixedDet { l_squared_k: i64 },
    /// `1 − L²K/2 − h^{0,1} − h⁰(L) + 1`.
    ThreefoldFixedDivisor { l_squared_k: i64, h01: i64, h0_l: i64 },
}

pub fn vd_calc(setting: VdSetting) -> Result<i64> {
    let half = |x: i64| {
        if x % 2 != 0 {
            Err(Error::Inconsistent(format!("L²K = {x} is odd")))
        } else {
            Ok(x / 2)
        }
    };
    Ok(match setting {
        VdSetting::SurfaceFixedDet { l_squared } => 1 + l_squared,
        VdSetting::SurfaceFixedDivisor { l_squared, dim_linear_system, h01 } => l_squared + 1 - dim_linear_system - h01,
        VdSetting::ThreefoldFixedDet { l_squared_k } => 1 - half(l_squared_k)?,
        VdSetting::ThreefoldFixedDivisor { l_squared_k, h01, h0_l } => 1 - half(l_squared_k)? - h01 - h0_l + 1,
    })
}

/// `(fixed det, fixed divisor)` for `O(d)` on ℙ².
pub fn vd_p2(d: i64) -> Result<(i64, i64)> {
    let dim = (d + 1) * (d + 2) / 2 - 1;
    Ok((
        vd_calc(VdSetting::SurfaceFixedDet { l_squared: d * d })?,
        vd_calc(VdSetting::SurfaceFixedDivisor { l_squared: d * d, dim_linear_system: dim, h01: 0 })?,
    ))
}

/// `(fixed det, fixed divisor)` for `O(d)` on ℙ³.
pub fn vd_p3(d: i64) -> Result<(i64, i64)> {
    let h0 = (d + 1) * (d + 2) * (d + 3) / 6;
    let l2k = -4 * d * d;
    Ok((
        vd_calc(VdSetting::ThreefoldFixedDet { l_squared_k: l2k })?,
        vd_calc(VdSetting::ThreefoldFixedDivisor { l_squared_k: l2k, h01: 0, h0_l: h0 })?,
    ))
}

/// Integrand used by [`p1p1_lhs`]; exposed for callers building their own sums.
pub fn quadric_integrand(fp: &HilbFixedPoint, n: u32) -> Result<GradedPoly> {
    let (q, l) = quadric();
    Ok(crate::hilb::ext1_char(&q, fp, &l)?.chern_class(2 * n))
}
