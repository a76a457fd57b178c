//! Jacobi matrices: Wronskian of the two polynomial families, the gauge
//! coefficient, the limit-circle diagnostic and interlacing finite sections.

use debranges::jacobi::{
    gauge_identity_check, limit_circle_diagnostic, recurrence_eval, truncated_extension_spectra, JacobiMatrix,
    Sequence,
};
use debranges::zeros::interlace_check;
use num_complex::Complex64;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let i = Complex64::new(0.0, 1.0);
    let growing = JacobiMatrix::new(Sequence::geometric(2.0), Sequence::constant(0.0), 1000)?;
    let free = JacobiMatrix::free(512)?;

    let z = Complex64::new(0.7, 1.9);
    let pair = recurrence_eval(&growing, z, 1000)?;
    let worst = (1..=1000)
        .map(|n| (pair.wronskian(&growing, n) - 1.0).norm())
        .fold(0.0, f64::max);
    println!("b_k = 2^k: max |W_n - 1| up to n = 1000 at {z}: {worst:.2e}");
    println!("gauge coefficient deviation: {}", gauge_identity_check(&growing, &[i, z])?);

    let sweep = [16, 32, 64, 128, 256, 512];
    for (name, j) in [("b_k = 2^k", &growing), ("b_k = 1", &free)] {
        let r = limit_circle_diagnostic(j, i, &sweep)?;
        println!("{name}: {:?} ({})", r.status, r.note);
    }

    let small = JacobiMatrix::free(8)?;
    let a = truncated_extension_spectra(&small, 8, Some(0.0))?;
    let b = truncated_extension_spectra(&small, 8, None)?;
    let c = truncated_extension_spectra(&small, 8, Some(-2.5))?;
    println!("tau = 0:   {:.6?}", a.values());
    println!("tau = inf: {:.6?}", b.values());
    println!("tau = -2.5: {:.6?}", c.values());
    println!(
        "interlaced: {} {} {}",
        interlace_check(&a, &b)?.interlaced,
        interlace_check(&a, &c)?.interlaced,
        interlace_check(&b, &c)?.interlaced
    );
    Ok(())
}
