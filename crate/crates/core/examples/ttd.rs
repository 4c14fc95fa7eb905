//! `d^g g!` for plane curves of degree 3 to 6.
use eqloc::abel::{plane_curve_genus, ttd_value};
use eqloc::format_rational;

fn main() {
    for d in 3..=6 {
        println!("d={d} g={} {}", plane_curve_genus(d), format_rational(&ttd_value(d)));
    }
}
