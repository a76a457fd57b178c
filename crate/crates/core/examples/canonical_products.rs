//! Symmetric-truncation canonical products over the integer and half-integer
//! lattices compared with `sin(pi z)/pi` and `cos(pi z)`.

use std::f64::consts::PI;

use debranges::product::{canonical_product, product_derivative_at_zero, TruncationSchedule};
use debranges::zeros::ZeroSequence;
use num_complex::Complex64;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let schedule = TruncationSchedule::default();
    let integers = ZeroSequence::lattice(1.0, 0.0, 10_000);
    let halves = ZeroSequence::lattice(1.0, 0.5, 10_000);

    for z in [Complex64::new(0.3, 0.0), Complex64::new(2.7, 0.4), Complex64::new(-7.25, -1.0)] {
        let s = canonical_product(&integers, z, &schedule)?;
        let c = canonical_product(&halves, z, &schedule)?;
        println!(
            "z = {z}: |P_Z - sin(pi z)/pi| = {:.1e} (bound {:.1e}), |P_Z+1/2 - cos(pi z)| = {:.1e} (bound {:.1e})",
            (s.value - (PI * z).sin() / PI).norm(),
            s.error,
            (c.value - (PI * z).cos()).norm(),
            c.error
        );
    }
    let d = product_derivative_at_zero(&halves, 0.5, &schedule)?;
    println!("derivative of the cos product at 1/2: {:.9} (expected {:.9})", d.derivative.re, -PI);
    Ok(())
}
