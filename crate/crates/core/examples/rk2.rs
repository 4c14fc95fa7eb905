//! Rank-two check for a conic: two localization integrals over projective spaces.
use eqloc::abel::rk2_check;
use eqloc::hilb::SeedPlan;

fn main() -> Result<(), eqloc::error::Error> {
    let r = rk2_check(2, &SeedPlan::default())?;
    for (k, t) in &r.terms {
        println!("C_{k} = {} over {} fixed points", t.value, t.fixed_point_count);
    }
    println!("lhs {} rhs {} pass {}", r.lhs, r.rhs, r.pass);
    Ok(())
}
