//! Euler numbers of Hilbert schemes by localization.
use eqloc::hilb::{chi_top_check, SeedPlan};
use eqloc::toric::{make_surface, SurfaceName};

fn main() -> Result<(), eqloc::error::Error> {
    let plan = SeedPlan::default();
    for name in [SurfaceName::P2, SurfaceName::P1xP1] {
        let s = make_surface(name);
        let row: Vec<String> = (0..=5).map(|n| chi_top_check(&s, n, &plan).map(|e| e.to_string())).collect::<Result<_, _>>()?;
        println!("{name}: {}", row.join(" "));
    }
    Ok(())
}
