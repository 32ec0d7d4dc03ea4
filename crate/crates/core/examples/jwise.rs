//! Three triangles in R^3 where no vertex is used three times, via vertex
//! replication and projection back.

use tverberg_lab::theorems::{gvkf_condition_original, gvkf_condition_sharpened, random_config};
use tverberg_lab::{replicate_for_jwise, solve_jwise};

fn main() -> tverberg_lab::Result<()> {
    let (config, _) = random_config(6, 3, [-100, 100], 2)?;
    let (replicated, map) = replicate_for_jwise(&config, 3)?;
    println!("replicated {} points to {}; map {map:?}", config.len(), replicated.len());

    let w = solve_jwise(&config, 3, 3, Some(2))?.witness.expect("witness");
    for f in &w.faces {
        println!("face {:?}", f.vertices());
    }
    println!(
        "original condition at N = 5: {:?}; sharpened: {}",
        gvkf_condition_original(3, 3, 3, 2, 5)?,
        gvkf_condition_sharpened(3, 3, 3, 2, 5)
    );
    Ok(())
}
