//! Theta and symmetric-product integrals, and the fixed-locus terms of the
//! rank-2 localization identity over a smooth conic.
//!
//! The conic `D' ≅ ℙ¹` is modeled as `Sym¹ ℙ¹`: fixed point 0 (`[∞]`) has
//! tangent `s1`, fixed point 1 (`[0]`) has tangent `−s1`. At the fixed point
//! `a` of `Sym^m ℙ¹ = ℙ^m` the universal divisor restricts to
//! `D_a = a·[0] + (m−a)·[∞]`.

use crate::arith::{factorial, pow_signed, rat, GradedPoly, LinearForm, Rational};
use crate::character::Character;
use crate::error::{Error, Result};
use crate::hilb::{localize_terms, Contribution, LocalizationOutcome, SeedPlan};
use crate::toric::{make_surface, SurfaceName};
use num_bigint::BigInt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AbelContext {
    pub g: u32,
    pub m: u32,
}

pub fn theta_power(g: u32) -> Rational {
    Rational::from_integer(factorial(g as u64))
}

pub fn plane_curve_genus(d: u32) -> u32 {
    (d.saturating_sub(1) * d.saturating_sub(2)) / 2
}

/// `d^g · g!` with `g` the genus of a plane curve of degree `d`.
pub fn ttd_value(d: u32) -> Rational {
    let g = plane_curve_genus(d);
    Rational::from_integer(num_traits::pow(BigInt::from(d), g as usize) * factorial(g as u64))
}

/// `∫_{Sym^m C} η^{m−i} θ^i = g!/(g−i)!`.
pub fn macdonald_integral(ctx: AbelContext, i: u32) -> Result<Rational> {
    if i > ctx.g.min(ctx.m) {
        return Err(Error::OutOfRange(format!("i = {i} with g = {}, m = {}", ctx.g, ctx.m)));
    }
    Ok(Rational::from_integer(factorial(ctx.g as u64) / factorial((ctx.g - i) as u64)))
}

/// Equivariant line bundle on the conic: degree and fiber weight at `[∞]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CurveBundle {
    pub degree: i64,
    pub fiber_inf: LinearForm,
}

impl CurveBundle {
    /// `O(e)` with fibers `0` at `[∞]` and `−e·s1` at `[0]`.
    pub fn standard(e: i64) -> Self {
        CurveBundle { degree: e, fiber_inf: LinearForm::ZERO }
    }

    /// `O(−a·[0] − (m−a)·[∞])` with its ideal-sheaf linearization.
    pub fn minus_divisor(m: i64, a: i64) -> Self {
        CurveBundle { degree: -m, fiber_inf: -(m - a) * LinearForm::S1 }
    }

    pub fn fiber_zero(&self) -> LinearForm {
        self.fiber_inf - self.degree * LinearForm::S1
    }

    pub fn tensor(self, o: CurveBundle) -> Self {
        CurveBundle { degree: self.degree + o.degree, fiber_inf: self.fiber_inf + o.fiber_inf }
    }

    pub fn dual(self) -> Self {
        CurveBundle { degree: -self.degree, fiber_inf: -self.fiber_inf }
    }

    pub fn chi(&self) -> Character {
        let mut c = Character::new();
        let w = LinearForm::S1;
        if self.degree >= 0 {
            for j in 0..=self.degree {
                c.push(self.fiber_inf - j * w, 1);
            }
        } else {
            for j in 1..=(-self.degree - 1) {
                c.push(self.fiber_inf + j * w, -1);
            }
        }
        c
    }

    pub fn h0(&self) -> Result<Character> {
        if self.degree < -1 {
            return Err(Error::Inconsistent(format!("H¹ of degree {} bundle", self.degree)));
        }
        Ok(self.chi())
    }

    pub fn h1(&self) -> Result<Character> {
        if self.degree > -1 {
            return Err(Error::Inconsistent(format!("H⁰ of degree {} bundle", self.degree)));
        }
        Ok(-&self.chi())
    }
}

/// Range of `k` for which the fixed component `C_k` is nonempty.
pub fn rk2_k_range(dprime: u32) -> Result<std::ops::RangeInclusive<i64>> {
    if dprime != 2 {
        return Err(Error::GeneralGenus);
    }
    let dp = dprime as i64;
    let lo = (1 - 3 * dp).div_euclid(2) + i64::from((1 - 3 * dp).rem_euclid(2) != 0);
    let genus = ((dp - 1) * (dp - 2)) / 2;
    Ok(lo..=genus - 1)
}

/// Per-fixed-point data of `C_k = ℙ^m`, exposed for inspection.
#[derive(Clone, Debug)]
pub struct CkFixedData {
    pub det_weight: LinearForm,
    pub hom_10: Character,
    pub ext_01: Character,
    pub hom_10_twisted: Character,
    pub tangent: Character,
}

pub fn rk2_ck_data(dprime: u32, k: i64) -> Result<(u32, Vec<CkFixedData>)> {
    let range = rk2_k_range(dprime)?;
    if !range.contains(&k) {
        return Err(Error::OutOfRange(format!("k = {k} outside {range:?}")));
    }
    let dp = dprime as i64;
    let d = 2 * dp;
    let m = 2 * k + 3 * dp - 1;
    let pm = make_surface(SurfaceName::SymP1(m as u32));
    let g1 = CurveBundle::standard(k);
    // O_{D'}(d') on a conic has degree 2d'
    let l = CurveBundle::standard(2 * dp);
    let mut out = Vec::new();
    for (a, p) in pm.fixed_points.iter().enumerate() {
        let g0 = g1.tensor(l).tensor(CurveBundle::minus_divisor(m, a as i64));
        let hom_10 = g1.dual().tensor(g0).h0()?;
        let ext_01 = g0.dual().tensor(g1).h1()?;
        let hom_10_twisted = g1.dual().tensor(g0).tensor(l).h0()?;
        if hom_10.rank() != 2 * dp - m + 1 {
            return Err(Error::Inconsistent(format!("rank of p'_*(G₁*G₀) at a = {a}")));
        }
        // u|_{D'} = −d·O + d'·O_p ⊗ t at p = [∞]
        let restrict = |b: CurveBundle, tw: i64| {
            let mut c = b.chi().scale(-d).shift_s(tw);
            c.push(b.fiber_inf.shift_s(1 + tw), dp);
            c
        };
        let det = &restrict(g0, 0) + &restrict(g1, -1);
        out.push(CkFixedData { det_weight: det.det_weight(), hom_10, ext_01, hom_10_twisted, tangent: p.tangent_char() });
    }
    check_tautological_tangent(&pm, m)?;
    Ok((m as u32, out))
}

/// The tangent of ℙ^m at `a` is `Hom(σ_a, σ_j)` for the tautological lines `σ = p'_*(O(m)(−D))`.
fn check_tautological_tangent(pm: &crate::toric::ToricSurfaceModel, m: i64) -> Result<()> {
    let taut: Vec<LinearForm> = (0..=m)
        .map(|a| {
            let c = CurveBundle::standard(m).tensor(CurveBundle::minus_divisor(m, a)).chi();
            let w = c.iter().next().map(|(w, _)| *w);
            w.unwrap_or_default()
        })
        .collect();
    for (a, p) in pm.fixed_points.iter().enumerate() {
        let want = Character::from_weights((0..=m as usize).filter(|&j| j != a).map(|j| taut[j] - taut[a]));
        if want != p.tangent_char() {
            return Err(Error::Inconsistent(format!("universal divisor weights at a = {a}")));
        }
    }
    Ok(())
}

/// `∫_{C_k} s^{d'²} c₁(T_{2,k})^g e(p'_*(G₁*G₀)⊗t) / (e(p'_*(G₁*G₀(d'))⊗t²) e(R¹p'_*(G₀*G₁)⊗t⁻¹))`.
pub fn rk2_ck_term(dprime: u32, k: i64, plan: &SeedPlan) -> Result<LocalizationOutcome> {
    let (m, data) = rk2_ck_data(dprime, k)?;
    let dp = dprime as i64;
    let g = plane_curve_genus(2 * dprime);
    for f in &data {
        let s_degree = dp * dp + g as i64 + f.hom_10.rank() - f.hom_10_twisted.rank() - f.ext_01.rank() - m as i64;
        if s_degree != 0 {
            return Err(Error::Inconsistent(format!("C_{k} integrand has s-degree {s_degree}")));
        }
    }
    localize_terms(
        &data,
        m,
        |f| {
            let normal = &(&f.hom_10_twisted.shift_s(2) + &f.ext_01.shift_s(-1)) - &f.hom_10.shift_s(1);
            let inv_normal = normal.scale(-1).euler_series_s_one(m)?;
            let c1 = GradedPoly::linear_at_s_one(f.det_weight, m).pow(g, m);
            Ok(Contribution { numerator: c1.mul(&inv_normal, m), denominator: f.tangent.clone() })
        },
        plan,
    )
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rk2Report {
    pub lhs: Rational,
    pub terms: Vec<(i64, LocalizationOutcome)>,
    pub rhs: Rational,
    pub pass: bool,
}

/// `2^{−(3/2)d'(d'+1)} d^g g!`.
pub fn rk2_lhs(dprime: u32) -> Rational {
    let dp = dprime as i64;
    ttd_value(2 * dprime) * pow_signed(&rat(2), -(3 * dp * (dp + 1) / 2))
}

pub fn rk2_check(dprime: u32, plan: &SeedPlan) -> Result<Rk2Report> {
    let terms = rk2_k_range(dprime)?
        .map(|k| rk2_ck_term(dprime, k, plan).map(|o| (k, o)))
        .collect::<Result<Vec<_>>>()?;
    let rhs = terms.iter().fold(rat(0), |a, (_, o)| a + &o.value);
    let lhs = rk2_lhs(dprime);
    Ok(Rk2Report { pass: lhs == rhs, lhs, terms, rhs })
}
