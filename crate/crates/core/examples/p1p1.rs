//! Quadric identity at small n, with and without the twisted components.
use eqloc::hilb::SeedPlan;
use eqloc::identities::{p1p1_check, p1p1_check_all_twists};

fn main() -> Result<(), eqloc::error::Error> {
    let plan = SeedPlan::default();
    for n in 0..=1 {
        for r in [p1p1_check(n, &plan)?, p1p1_check_all_twists(n, &plan)?] {
            println!("{} n={n}: lhs {} rhs {} pass {}", r.name, r.lhs, r.rhs_total, r.pass);
            for (label, v) in &r.rhs_terms {
                println!("  {label}: {v}");
            }
        }
    }
    Ok(())
}
