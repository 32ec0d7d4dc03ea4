//! Runs a catalog entry and its refutation counterpart, printing summaries.

use tverberg_lab::theorems::{run_instance, BoundSet, TheoremId, TheoremInstance};

fn main() -> tverberg_lab::Result<()> {
    let params = BoundSet { r: Some(3), d: Some(2), ..Default::default() };
    let existence = TheoremInstance::new(TheoremId::TopologicalTverbergAffine, params.clone()).with_trials(20);
    println!("{}", run_instance(&existence)?.summary());

    let necessity = existence.necessity().with_trials(10);
    let report = run_instance(&necessity)?;
    println!("{}", report.summary());

    let sarkaria = TheoremInstance::new(
        TheoremId::GvkfSharpened,
        BoundSet { r: Some(3), j: Some(2), d: Some(3), k: Some(2), ..Default::default() },
    )
    .necessity();
    println!("{}", run_instance(&sarkaria)?.summary());

    for id in TheoremId::ALL {
        println!("{:<28} {}", id.as_str(), id.statement());
    }
    Ok(())
}
