//! The entire-operator criterion on two pairs of spectra: the Paley-Wiener
//! lattices (no entire gauge) and the two-point pair of a polynomial space
//! (entire gauge present).

use debranges::criterion::{entire_criterion, CriterionConfig};
use debranges::zeros::ZeroSequence;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = CriterionConfig::default();

    let integers = ZeroSequence::lattice(1.0, 0.0, 10_000);
    let halves = ZeroSequence::lattice(1.0, 0.5, 10_000);
    let v = entire_criterion(&integers, &halves, &cfg)?;
    println!("Z and Z + 1/2: {:?}", v.overall);
    println!("  C1 {:?}: {}", v.c1.status, v.c1.note);
    println!(
        "  C2 {:?}: limits {:?} and {:?}",
        v.c2.status, v.c2.positive.limit, v.c2.negative.limit
    );
    println!("  C3 {:?}: {}", v.c3.status, v.c3.note);
    for (x, t) in v.c3.terms.iter().take(4) {
        println!("    term at {x:+.1}: {t:.9}");
    }

    let zero = ZeroSequence::finite(vec![0.0])?;
    let pm = ZeroSequence::finite(vec![-1.0, 1.0])?;
    let v = entire_criterion(&zero, &pm, &cfg)?;
    println!("{{0}} and {{-1, 1}}: {:?}", v.overall);
    println!("  C3 sum {:.12}", v.c3.sum);
    Ok(())
}
