use eqloc::arith::{rat, LinearForm, Rational};
use eqloc::hilb::*;
use eqloc::toric::{make_surface, EquivLineBundle, SurfaceName};
use eqloc::Character;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

type Laurent = BTreeMap<(i64, i64), i64>;

fn lmul(a: &Laurent, b: &Laurent) -> Laurent {
    let mut out = Laurent::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            *out.entry((ea.0 + eb.0, ea.1 + eb.1)).or_default() += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn ladd(a: &Laurent, b: &Laurent, k: i64) -> Laurent {
    let mut out = a.clone();
    for (e, c) in b {
        *out.entry(*e).or_default() += k * c;
    }
    out.retain(|_, c| *c != 0);
    out
}

fn conj(a: &Laurent) -> Laurent {
    a.iter().map(|((i, j), c)| ((-i, -j), *c)).collect()
}

fn hilbert_series(p: &Partition) -> Laurent {
    p.boxes().map(|(i, j)| ((i, j), 1)).collect()
}

/// `χ(O,O) − χ(I_λ, I_μ) = Q_μ + \bar Q_λ/(xy) − \bar Q_λ Q_μ \bar P` with `x, y` of weight `−w1, −w2`.
fn ext_oracle(lam: &Partition, mu: &Partition, w1: LinearForm, w2: LinearForm) -> Character {
    let ql = hilbert_series(lam);
    let qm = hilbert_series(mu);
    let pbar: Laurent = [((0, 0), 1), ((-1, 0), -1), ((0, -1), -1), ((-1, -1), 1)].into_iter().collect();
    let xy_inv: Laurent = [((-1, -1), 1)].into_iter().collect();
    let e = ladd(&ladd(&qm, &lmul(&conj(&ql), &xy_inv), 1), &lmul(&lmul(&conj(&ql), &qm), &pbar), -1);
    let mut c = Character::new();
    for ((i, j), m) in e {
        c.push(-i * w1 - j * w2, m);
    }
    c
}

#[test]
fn cross_terms_match_laurent_oracle() {
    let (w1, w2) = (LinearForm::new(1, 0, 0), LinearForm::new(0, 1, 0));
    for a in 0..=4 {
        for b in 0..=4 {
            for lam in Partition::all(a) {
                for mu in Partition::all(b) {
                    assert_eq!(ext::local_ext(&lam, &mu, w1, w2), ext_oracle(&lam, &mu, w1, w2), "{lam} {mu}");
                }
            }
        }
    }
}

#[test]
fn tangent_ext_consistency_and_ranks() {
    for name in [SurfaceName::P2, SurfaceName::P1xP1] {
        let s = make_surface(name);
        let o = EquivLineBundle::trivial(&s);
        for n in 0..=4 {
            for fp in hilb_fixed_points(&s, n) {
                let t = tangent_char(&s, &fp);
                assert!(t.is_genuine());
                assert_eq!(t.rank(), 2 * n as i64);
                let chi = pair_ext_char(&s, &fp, &fp, &o).unwrap();
                assert_eq!(chi.rank(), 1 - 2 * n as i64);
                assert_eq!(&s.chi_character(&o).unwrap() - &chi, t);
            }
        }
    }
}

#[test]
fn ext1_ranks_on_quadric() {
    let s = make_surface(SurfaceName::P1xP1);
    let l = EquivLineBundle::new(vec![2, 2]);
    for n in 0..=3 {
        for fp in hilb_fixed_points(&s, n) {
            assert_eq!(ext1_char(&s, &fp, &l).unwrap().rank(), 2 * n as i64);
        }
    }
}

/// `Σ_p T^{ℓ_p} / ∏ (1 − T^{−w})` with `T^w = t1^a t2^b`.
fn molien(s: &eqloc::toric::ToricSurfaceModel, l: &EquivLineBundle, t: &[Rational; 2]) -> Rational {
    let mono = |w: LinearForm| eqloc::arith::pow_signed(&t[0], w.a) * eqloc::arith::pow_signed(&t[1], w.b);
    s.fixed_points
        .iter()
        .map(|p| {
            let den = p.tangent.iter().fold(Rational::one(), |acc, w| acc * (Rational::one() - mono(-*w)));
            mono(s.fiber_weight(p, l)) / den
        })
        .fold(Rational::zero(), |a, b| a + b)
}

#[test]
fn sections_match_molien_sum() {
    let pts = [[rat(2), rat(3)], [eqloc::arith::frac(-5, 7), rat(11)], [eqloc::arith::frac(4, 9), eqloc::arith::frac(-3, 2)]];
    let mut bundles = vec![];
    for d in 0..=5 {
        bundles.push((SurfaceName::P2, vec![d]));
    }
    for a in 0..=3 {
        for b in 0..=3 {
            bundles.push((SurfaceName::P1xP1, vec![a, b]));
        }
    }
    for (name, deg) in bundles {
        let s = make_surface(name);
        let l = EquivLineBundle::new(deg).with_offset(LinearForm::new(1, -2, 0));
        let h = s.h0_character(&l).unwrap();
        for t in &pts {
            let direct = h.iter().fold(Rational::zero(), |acc, (w, m)| {
                acc + eqloc::arith::pow_signed(&t[0], w.a) * eqloc::arith::pow_signed(&t[1], w.b) * rat(*m)
            });
            assert_eq!(direct, molien(&s, &l, t));
        }
    }
}

#[test]
fn h0_ranks_and_offsets() {
    let s = make_surface(SurfaceName::P2);
    for d in 0..=6i64 {
        let l = EquivLineBundle::new(vec![d]);
        assert_eq!(s.h0_character(&l).unwrap().rank(), (d + 1) * (d + 2) / 2);
        let delta = LinearForm::new(2, -1, 3);
        let shifted = s.h0_character(&l.clone().with_offset(delta)).unwrap();
        assert_eq!(shifted, s.h0_character(&l).unwrap().twist(delta));
    }
}

#[test]
fn fixed_point_counts_follow_generating_function() {
    for name in [SurfaceName::P2, SurfaceName::P1xP1] {
        let s = make_surface(name);
        for n in 0..=5 {
            assert_eq!(num_bigint::BigInt::from(hilb_fixed_points(&s, n).len()), gottsche_coefficient(s.euler_number as u32, n));
        }
    }
}

#[test]
fn euler_numbers_by_localization() {
    let plan = SeedPlan::new(3, 2);
    for name in [SurfaceName::P2, SurfaceName::P1xP1] {
        let s = make_surface(name);
        for n in 0..=4 {
            chi_top_check(&s, n, &plan).unwrap();
        }
    }
    assert_eq!(chi_top_check(&make_surface(SurfaceName::P2), 3, &plan).unwrap(), 22.into());
    assert_eq!(chi_top_check(&make_surface(SurfaceName::P1xP1), 1, &plan).unwrap(), 4.into());
}

#[test]
fn integral_of_one_vanishes() {
    let plan = SeedPlan::new(11, 2);
    for name in [SurfaceName::P2, SurfaceName::P1xP1] {
        let s = make_surface(name);
        for n in 1..=4 {
            let pts = hilb_fixed_points(&s, n);
            assert!(unit_integral(&s, &pts, &plan).unwrap().value.is_zero());
        }
    }
}

/// `c₂(T_S ⊗ L) = c₂(T) + c₁(T)c₁(L) + c₁(L)²` on ℙ¹×ℙ¹ with `L = O(a, b)`.
fn twisted_c2_oracle(a: i64, b: i64) -> i64 {
    // c₁(T) = (2,2), c₂(T) = 4, (x,y)·(x',y') = xy' + x'y
    let dot = |x: (i64, i64), y: (i64, i64)| x.0 * y.1 + x.1 * y.0;
    4 + dot((2, 2), (a, b)) + dot((a, b), (a, b))
}

#[test]
fn co_degree_one_point() {
    let s = make_surface(SurfaceName::P1xP1);
    let plan = SeedPlan::new(7, 3);
    for (a, b) in [(2, 2), (1, 3), (0, 0), (3, 1)] {
        let l = EquivLineBundle::new(vec![a, b]);
        let pts = hilb_fixed_points(&s, 1);
        assert_eq!(co_degree(&s, &pts, &l, 1, &plan).unwrap().value, rat(twisted_c2_oracle(a, b)));
    }
    let l = EquivLineBundle::new(vec![2, 2]);
    assert_eq!(co_degree(&s, &hilb_fixed_points(&s, 0), &l, 0, &plan).unwrap().value, rat(1));
}

#[test]
fn co_degree_is_seed_and_lift_independent() {
    let s = make_surface(SurfaceName::P1xP1);
    let l = EquivLineBundle::new(vec![2, 2]);
    for n in 2..=3 {
        let pts = hilb_fixed_points(&s, n);
        let a = co_degree(&s, &pts, &l, n, &SeedPlan::new(1, 3)).unwrap();
        let b = co_degree(&s, &pts, &l, n, &SeedPlan::new(99, 3)).unwrap();
        let shifted = l.clone().with_offset(LinearForm::new(3, -5, 0));
        let c = co_degree(&s, &pts, &shifted, n, &SeedPlan::new(5, 3)).unwrap();
        assert_eq!(a.value, b.value);
        assert_eq!(a.value, c.value);
        assert_ne!(a.seeds_used, b.seeds_used);
    }
}

#[test]
fn cache_roundtrip_and_corruption() {
    let dir = tempfile::tempdir().unwrap();
    let cache = FixedPointCache::new(dir.path());
    let s = make_surface(SurfaceName::P2);
    let (pts, hit) = cache.load_or_generate(&s, 3).unwrap();
    assert!(!hit);
    let (again, hit) = cache.load_or_generate(&s, 3).unwrap();
    assert!(hit);
    assert_eq!(pts, again);
    let text = std::fs::read_to_string(cache.path(s.name, 3)).unwrap();
    let mut lines: Vec<&str> = text.lines().collect();
    let mut sorted = lines.clone();
    sorted.sort();
    assert_eq!(lines, sorted);
    assert_eq!(lines[0].split(' ').count(), 3);
    lines.pop();
    std::fs::write(cache.path(s.name, 3), lines.join("\n")).unwrap();
    let (fixed, hit) = cache.load_or_generate(&s, 3).unwrap();
    assert!(!hit);
    assert_eq!(fixed, pts);
    std::fs::write(cache.path(s.name, 3), "p2 3 garbage\n").unwrap();
    assert!(!cache.load_or_generate(&s, 3).unwrap().1);
}

#[test]
fn tangent_weights_are_serre_symmetric() {
    for name in [SurfaceName::P2, SurfaceName::P1xP1] {
        let s = make_surface(name);
        let k = s.fixed_points.len();
        for (i, p) in s.fixed_points.iter().enumerate() {
            let omega = p.tangent_char().det_weight();
            for n in 1..=5 {
                for lam in Partition::all(n) {
                    let mut assignment = vec![Partition::all(0).remove(0); k];
                    assignment[i] = lam;
                    let t = tangent_char(&s, &HilbFixedPoint::new(assignment));
                    let mirrored = Character::from_weights(
                        t.iter().flat_map(|(w, m)| std::iter::repeat_n(omega - *w, *m as usize)),
                    );
                    assert_eq!(t, mirrored);
                }
            }
        }
    }
}
