//! Do the diagonals of a square cross? Exact answer with certificate.

use tverberg_lab::{hull_intersection_witness, Configuration, Face};

fn main() -> tverberg_lab::Result<()> {
    let square = Configuration::from_integers(2, &[vec![0, 0], vec![2, 0], vec![2, 2], vec![0, 2]])?;
    let diagonals = [Face::new([0, 2])?, Face::new([1, 3])?];
    match hull_intersection_witness(&square, &diagonals)? {
        Some(w) => println!("diagonals meet at {}\n{}", fmt(&w.point), w.to_json()),
        None => println!("diagonals are disjoint"),
    }

    let sides = [Face::new([0, 1])?, Face::new([2, 3])?];
    println!("opposite sides meet: {}", hull_intersection_witness(&square, &sides)?.is_some());
    Ok(())
}

fn fmt(p: &[tverberg_lab::Rational]) -> String {
    p.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}
