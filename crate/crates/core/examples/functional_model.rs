//! The functional model of a symmetric operator with deficiency indices
//! (1, 1) inside `B(-(z + i)^2)` and the Paley-Wiener space: resolvents,
//! eigenfunctions, deficiency elements, the Cayley transfer, the xi gauge and
//! the search for an angle whose `s_gamma` lies in the space.

use std::f64::consts::PI;

use debranges::entire::EntireFunction;
use debranges::space::DeBrangesSpace;
use num_complex::Complex64;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let poly = DeBrangesSpace::polynomial(2)?;
    let z = poly.element(EntireFunction::identity())?;

    // (S_{pi/2} - 0)^{-1} z is the constant 1
    let r = poly.resolvent(PI / 2.0, c(0.0, 0.0), &z)?;
    println!("(S_pi/2)^-1 z at 0.4+2i: {:.12}", r.eval(c(0.4, 2.0)));

    let g = poly.eigenfunction(PI / 2.0, 1.0)?;
    let h = poly.eigenfunction(PI / 2.0, -1.0)?;
    println!("<g_1, g_-1> = {:.2e}", poly.inner(&g, &h)?.norm());

    let w = c(0.4, 0.9);
    let d = poly.deficiency_element(w);
    let f = poly.element(EntireFunction::polynomial(vec![c(-w.re, w.im), c(1.0, 0.0)]))?;
    println!("<def(w), (z - conj w)> = {:.2e}", poly.inner(&d, &f)?.norm());

    let pw = DeBrangesSpace::paley_wiener(PI)?;
    let v = c(0.0, 1.0);
    let moved = pw.cayley_transfer(PI / 2.0, c(1.0, 2.0), v, &pw.deficiency_element(v))?;
    let target = pw.deficiency_element(c(1.0, 2.0));
    println!("Paley-Wiener Cayley transfer collinearity residual: {:.2e}", pw.collinearity_residual(&moved, &target)?);

    let seed = pw.xi_seed(PI / 2.0, 0.0)?;
    let probe = pw.kernel_function(c(0.25, 0.5));
    for x in [0.1, 0.7, 1.3] {
        let p = pw.xi_pairing(&seed, c(x, 0.0), &probe)?;
        let q = pw.xi_pairing(&seed, c(x, 0.0), &pw.kernel_function(c(-0.6, 1.5)))?;
        println!("xi pairings at {x}: {p:.6} and {q:.6}");
    }

    for (name, space) in [("polynomial", &poly), ("Paley-Wiener", &pw)] {
        let dc = space.domain_orthocomplement(16)?;
        match dc.found {
            Some((gamma, _)) => println!("{name}: s_gamma lies in the space for gamma = {gamma:.6}"),
            None => println!("{name}: no s_gamma in the space (norm growth {:.3})", dc.trace[0].1),
        }
    }
    Ok(())
}
