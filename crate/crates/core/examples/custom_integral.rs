//! A user-supplied integrand: `∫ c₂(T)^n` over Hilbⁿ(ℙ²) via `localize`.
use eqloc::hilb::{hilb_fixed_points, localize, tangent_char, HilbFixedPoint, SeedPlan};
use eqloc::toric::{make_surface, SurfaceName};

fn main() -> Result<(), eqloc::error::Error> {
    let s = make_surface(SurfaceName::P2);
    for n in 1..=3 {
        let pts = hilb_fixed_points(&s, n);
        let c2 = |fp: &HilbFixedPoint| Ok(tangent_char(&s, fp).chern_class(2).pow(n, 2 * n));
        println!("n={n} {}", localize(&s, &pts, n, c2, &SeedPlan::default())?.value);
    }
    Ok(())
}
