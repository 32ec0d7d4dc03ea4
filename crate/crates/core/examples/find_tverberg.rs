//! Tverberg partitions of seven random points in the plane into three parts.

use tverberg_lab::theorems::{random_config, DEFAULT_COORD_RANGE};
use tverberg_lab::{find_tverberg, ConstraintSet, SearchStatus};

fn main() -> tverberg_lab::Result<()> {
    for seed in 0..5 {
        let (config, _) = random_config(7, 2, DEFAULT_COORD_RANGE, seed)?;
        let out = find_tverberg(&config, &ConstraintSet::new(3))?;
        assert_eq!(out.status, SearchStatus::WitnessFound);
        let w = out.witness.unwrap();
        let faces: Vec<_> = w.faces.iter().map(|f| f.vertices().to_vec()).collect();
        let point: Vec<_> = w.point.iter().map(ToString::to_string).collect();
        println!(
            "seed {seed}: {faces:?} meet at ({}) after {} families, {} LPs",
            point.join(", "),
            out.stats.families_enumerated,
            out.stats.lp_calls
        );
    }
    Ok(())
}
