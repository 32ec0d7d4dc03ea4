//! Tverberg families restricted to a subcomplex given in the text syntax.

use tverberg_lab::theorems::random_config;
use tverberg_lab::{find_tverberg, parse_subcomplex, ConstraintSet};

fn main() -> tverberg_lab::Result<()> {
    let (config, _) = random_config(8, 2, [-50, 50], 4)?;
    for text in ["skeleton(2)", "skeleton(1) | atmost(1; 0..2)", "induced(0..6)", "atmost(1; 0..5) & skeleton(2)"] {
        let sigma = parse_subcomplex(text)?;
        let out = find_tverberg(&config, &ConstraintSet::new(3).with_subcomplex(sigma))?;
        let faces = out.witness.map(|w| w.faces.iter().map(|f| f.vertices().to_vec()).collect::<Vec<_>>());
        println!("{text:<32} {:?} {faces:?}", out.status);
    }
    Ok(())
}
