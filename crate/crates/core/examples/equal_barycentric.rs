//! Two faces of a colored configuration meeting with equal weight on every
//! color class.

use tverberg_lab::theorems::random_config;
use tverberg_lab::{solve_equal_barycentric, Coloring, Rational};

fn main() -> tverberg_lab::Result<()> {
    // (r - 1) d + 1 = 3 classes of size r = 2 in the plane.
    let config = random_config(6, 2, [-20, 20], 8)?.0.with_coloring(Coloring::contiguous(&[2, 2, 2])?)?;
    let w = solve_equal_barycentric(&config)?.witness.expect("always exists");
    for (c, class) in config.coloring().unwrap().classes().iter().enumerate() {
        let sums: Vec<String> = (0..w.faces.len())
            .map(|i| class.iter().map(|&v| w.weight(i, v)).fold(Rational::zero(), |a, b| &a + &b).to_string())
            .collect();
        println!("class {c} {class:?}: weight per face {}", sums.join(" = "));
    }
    Ok(())
}
