use eqloc::identities::{weight_factor_p2, weight_factor_p3};

fn main() -> Result<(), eqloc::error::Error> {
    for d in 1..=2 {
        println!("P2 d'={d}: {}", weight_factor_p2(d)?);
    }
    println!("P3: {}", weight_factor_p3()?);
    Ok(())
}
