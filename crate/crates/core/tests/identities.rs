use eqloc::arith::{rat, Rational};
use eqloc::hilb::SeedPlan;
use eqloc::identities::*;
use num_traits::Zero;

/// Truncated power series in one variable.
fn series_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len();
    (0..n).map(|k| (0..=k).fold(Rational::zero(), |acc, i| acc + &a[i] * &b[k - i])).collect()
}

fn series_inv(a: &[Rational]) -> Vec<Rational> {
    let n = a.len();
    let mut out = vec![Rational::zero(); n];
    out[0] = a[0].recip();
    for k in 1..n {
        let s = (1..=k).fold(Rational::zero(), |acc, i| acc + &a[i] * &out[k - i]);
        out[k] = -s / &a[0];
    }
    out
}

/// Nested term at `n = k = 1` computed nonequivariantly on `(ℙ²)^{[1]} = ℙ²`.
///
/// `N₁ = (3 + 2O(h) − 3O(2h))t + (6 − O(2h))t² + O(2h)t⁻¹` and the Ext class is
/// `T_{ℙ²}` with `c₁ = 3h`; the answer is the `h²` coefficient at `s = 1`.
fn nested_one_oracle() -> Rational {
    let lin = |c: i64, h: i64| vec![rat(c), rat(h), rat(0)];
    let pow = |f: &[Rational], e: i64| {
        let base = if e < 0 { series_inv(f) } else { f.to_vec() };
        (0..e.abs()).fold(vec![rat(1), rat(0), rat(0)], |acc, _| series_mul(&acc, &base))
    };
    let mut euler = vec![rat(1), rat(0), rat(0)];
    for (c, h, mult) in [(1, 0, 3), (1, 1, 2), (1, 2, -3), (2, 0, 6), (2, 2, -1), (-1, 2, 1)] {
        euler = series_mul(&euler, &pow(&lin(c, h), mult));
    }
    let integrand = series_mul(&[rat(0), rat(3 * 64), rat(0)], &series_inv(&euler));
    integrand[2].clone()
}

/// `χ(G, G(1))` for a rank-2 bundle with `c₁ = −1, c₂ = 1`, by Riemann–Roch on ℙ².
fn hom_rank_oracle() -> i64 {
    let (c1, c2) = (-1i64, 1i64);
    let end_c2 = 4 * c2 - c1 * c1;
    // ch(End) = 4 − end_c2·pt; ch(O(1)) = 1 + h + h²/2
    let ch = [4i64, 4, 2 - end_c2];
    // td = 1 + 3/2 h + h², degree-2 part of ch·td, times 2 to stay integral
    (2 * ch[0] + 3 * ch[1] + 2 * ch[2]) / 2
}

#[test]
fn nested_term_matches_oracle() {
    let plan = SeedPlan::new(4, 3);
    assert_eq!(nested_term(1, 1, &plan).unwrap().value, nested_one_oracle());
    assert_eq!(nested_one_oracle(), rat(-42));
    assert_eq!(nested_term(0, 0, &plan).unwrap().value, rat(1));
}

#[test]
fn moduli_point_term() {
    assert_eq!(ms_normal_n1().unwrap().rank(), hom_rank_oracle());
    let a = ms_term_n1(&SeedPlan::new(1, 2)).unwrap();
    let b = ms_term_n1(&SeedPlan::new(2, 2)).unwrap();
    assert_eq!(a.value, rat(64));
    assert_eq!(a.value, b.value);
}

#[test]
fn quadric_identity_at_zero() {
    let r = p1p1_check(0, &SeedPlan::new(3, 2)).unwrap();
    assert_eq!(r.lhs, rat(1));
    assert_eq!(r.rhs_total, rat(1));
    assert!(r.pass);
}

#[test]
fn quadric_identity_terms_at_one() {
    let plan = SeedPlan::new(3, 3);
    let r = p1p1_check(1, &plan).unwrap();
    assert_eq!(r.lhs, rat(20));
    let terms: Vec<Rational> = r.rhs_terms.iter().map(|(_, v)| v.clone()).collect();
    assert_eq!(terms, vec![rat(64), rat(-42)]);
    // the determinant twists O(±1, ∓1) each add a reduced point
    let (lhs, parts) = p1p1_lhs_all_twists(1, &plan).unwrap();
    assert_eq!(parts, vec![(0, rat(20)), (1, rat(1)), (-1, rat(1))]);
    assert_eq!(lhs, r.rhs_total);
    assert!(p1p1_check_all_twists(1, &plan).unwrap().pass);
}

#[test]
fn higher_terms_are_seed_independent() {
    for k in 1..=2 {
        let a = nested_term(2, k, &SeedPlan::new(10, 3)).unwrap();
        let b = nested_term(2, k, &SeedPlan::new(20, 3)).unwrap();
        assert_eq!(a.value, b.value);
    }
    assert!(p1p1_check(2, &SeedPlan::default()).is_err());
}

#[test]
fn weight_factor_recomputation() {
    for d in 1..=4 {
        let w = weight_factor_p2(d).unwrap();
        assert_eq!(w.s_exponent, d * (2 * d + 3));
    }
    let w = weight_factor_p3().unwrap();
    assert_eq!(w.coefficient, rat(1i64.pow(3) * 2i64.pow(6)));
    assert_eq!(w.s_exponent, 3 + 6);
}

#[test]
fn virtual_dimensions() {
    for d in 1..=8 {
        let (det, div) = vd_p2(d).unwrap();
        assert_eq!(det, 1 + d * d);
        assert!(div >= 0);
        assert_eq!(div as u32, eqloc::abel::plane_curve_genus(d as u32));
        let (det3, _) = vd_p3(d).unwrap();
        assert_eq!(det3, 2 * d * d + 1);
    }
    assert_eq!(vd_p2(3).unwrap().1, 1);
}
