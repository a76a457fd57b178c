//! The Paley-Wiener space with `e(z) = exp(-i pi z)`: sinc kernel, the two
//! lattice spectra and the reconstruction of `|e|` from the kernel at `i`.

use std::f64::consts::PI;

use debranges::space::DeBrangesSpace;
use num_complex::Complex64;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let space = DeBrangesSpace::paley_wiener(PI)?;
    println!("gamma0 = {:.6}", space.gamma0());

    for x in [0.0, 0.5, 1.0, 2.25] {
        let z = Complex64::new(x, 0.0);
        println!("k({x}, {x}) = {:.12}", space.kernel(z, z).re);
    }
    let sinc = space.kernel(Complex64::new(0.5, 0.0), Complex64::new(0.0, 0.0)).re;
    println!("k(1/2, 0) = {sinc:.12}  (sin(pi/2)/(pi/2) = {:.12})", 2.0 / PI);

    let s0 = space.spectrum(0.0, -3.0, 3.0)?;
    let s90 = space.spectrum(PI / 2.0, -3.0, 3.0)?;
    println!("spectrum of S_0 in [-3, 3]:    {:?}", s0.values());
    println!("spectrum of S_pi/2 in [-3, 3]: {:?}", s90.values());

    let rec = space.e_from_kernel(Complex64::new(0.0, 1.0))?;
    for x in [-1.0, 0.0, 0.25, 1.5] {
        println!(
            "x = {x:5}: |reconstructed| = {:.9}, |e| = {:.9}",
            rec.eval_real(x).norm(),
            space.e().eval_real(x).norm()
        );
    }
    Ok(())
}
