//! The two-dimensional space `B(-(z + i)^2)`: Gram matrix, reproducing
//! kernel, spectra of the extensions and the round trip through the kernel.

use std::f64::consts::PI;

use debranges::entire::EntireFunction;
use debranges::space::DeBrangesSpace;
use num_complex::Complex64;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let space = DeBrangesSpace::polynomial(2)?;
    let i = Complex64::new(0.0, 1.0);
    println!("dimension {:?}, gamma0 = {:.6}", space.dimension(), space.gamma0());
    println!("Gram matrix of 1, z:\n{}", space.gram().expect("finite space"));

    println!("k(i, i) = {:.12}  (4/pi = {:.12})", space.kernel(i, i).re, 4.0 / PI);
    let w = Complex64::new(0.3, -0.8);
    let k = space.kernel_function(w);
    let one = space.element(EntireFunction::constant(Complex64::new(1.0, 0.0)))?;
    let z = space.element(EntireFunction::identity())?;
    println!("<k_w, 1> = {:.12}", space.inner(&k, &one)?);
    println!("<k_w, z> = {:.12}  (w = {w})", space.inner(&k, &z)?);

    for beta in [0.0, PI / 4.0, PI / 2.0] {
        let sp = space.full_spectrum(beta)?.expect("finite space");
        println!("spectrum of S_{beta:.4}: {:?} ({:?})", sp.values(), sp.extent());
    }

    let rec = space.e_from_kernel(i)?;
    let coeffs: Vec<Complex64> = (0..3).map(|n| taylor(&rec, n)).collect();
    println!("e from the kernel at i: coefficients {coeffs:.10?}");
    println!("constant 1 membership residual: {:?}", space.membership_residual(&one));
    Ok(())
}

/// n-th Taylor coefficient at 0 from samples on the unit circle.
fn taylor(f: &EntireFunction, n: usize) -> Complex64 {
    let m = 32;
    (0..m)
        .map(|j| {
            let t = 2.0 * PI * j as f64 / m as f64;
            f.eval(Complex64::from_polar(1.0, t)) * Complex64::from_polar(1.0, -(n as f64) * t)
        })
        .sum::<Complex64>()
        / m as f64
}
