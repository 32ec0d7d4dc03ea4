//! Checks a witness clause by clause, then tampers with it.

use tverberg_lab::{find_tverberg, verify_witness, Configuration, ConstraintSet, DimBound, Rational};

fn main() -> tverberg_lab::Result<()> {
    let config = Configuration::from_integers(2, &[vec![0, 0], vec![4, 0], vec![0, 4], vec![1, 1]])?;
    let cs = ConstraintSet::new(2);
    let w = find_tverberg(&config, &cs)?.witness.expect("Radon partition");

    let report = verify_witness(&config, &w, &cs);
    println!("original witness passes: {}", report.passed());

    let strict = cs.clone().with_max_dims(DimBound::Uniform(0));
    for c in verify_witness(&config, &w, &strict).failures() {
        println!("  with points only: {} fails ({})", c.name, c.detail);
    }

    let mut bent = w.clone();
    bent.point[0] = &bent.point[0] + &Rational::new(1, 7);
    for c in verify_witness(&config, &bent, &cs).failures() {
        println!("  moved point: {} fails ({})", c.name, c.detail);
    }
    Ok(())
}
