//! A Radon partition whose common point also balances an affine functional,
//! found by lifting the points into one more dimension.

use tverberg_lab::{find_tverberg, lift_configuration, Configuration, ConstraintSet, Rational};

fn main() -> tverberg_lab::Result<()> {
    let config = Configuration::from_integers(1, &[vec![0], vec![1], vec![2], vec![3], vec![5]])?;
    let row: Vec<Rational> = [3, -1, 4, 1, -5].into_iter().map(Rational::from_integer).collect();
    println!("lifted: {}", lift_configuration(&config, std::slice::from_ref(&row))?.to_json());

    let out = find_tverberg(&config, &ConstraintSet::new(2).with_affine_constraints(vec![row.clone()]))?;
    let w = out.witness.expect("five points on a line with one constraint");
    for i in 0..w.faces.len() {
        println!("face {:?}: functional = {}", w.faces[i].vertices(), w.evaluate_affine(i, &row));
    }
    Ok(())
}
