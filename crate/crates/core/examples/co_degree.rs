//! Top Chern class of the twisted Ext bundle on Hilbⁿ(ℙ¹×ℙ¹), with per-seed values.
use eqloc::hilb::{co_degree, hilb_fixed_points, SeedPlan};
use eqloc::toric::{make_surface, EquivLineBundle, SurfaceName};
use eqloc::format_rational;

fn main() -> Result<(), eqloc::error::Error> {
    let s = make_surface(SurfaceName::P1xP1);
    let l = EquivLineBundle::new(vec![2, 2]);
    for n in 0..=3 {
        let pts = hilb_fixed_points(&s, n);
        let out = co_degree(&s, &pts, &l, n, &SeedPlan::new(5, 3))?;
        println!("n={n} fixed points {} value {}", out.fixed_point_count, format_rational(&out.value));
        for (seed, v) in out.seeds_used.iter().zip(&out.per_seed_values) {
            println!("  s1={} s2={} -> {v}", seed[0], seed[1]);
        }
    }
    Ok(())
}
