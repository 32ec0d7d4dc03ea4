//! The configuration generators: seeded random, moment curve and the
//! lower-bound construction for j-wise disjointness.

use tverberg_lab::theorems::{in_general_position, moment_curve_config, random_config, sarkaria_config};

fn main() -> tverberg_lab::Result<()> {
    let (random, provenance) = random_config(6, 2, [-10, 10], 1)?;
    println!("random ({} seed {}): general position {}", provenance.generator, provenance.seed, in_general_position(&random));
    println!("{}", random.to_json());

    let moment = moment_curve_config(7, 3)?;
    println!("moment curve: last point {:?}", moment.point(6).iter().map(ToString::to_string).collect::<Vec<_>>());

    let lower = sarkaria_config(3, 2, 2)?;
    println!("lower-bound construction: {} points in R^{}", lower.len(), lower.dim());
    Ok(())
}
