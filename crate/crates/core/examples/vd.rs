//! Virtual dimensions for plane and space curves.
use eqloc::identities::{vd_p2, vd_p3};

fn main() -> Result<(), eqloc::error::Error> {
    for d in 1..=5 {
        let (det, div) = vd_p2(d)?;
        let (det3, div3) = vd_p3(d)?;
        println!("d={d} P2 {det} {div} P3 {det3} {div3}");
    }
    Ok(())
}
