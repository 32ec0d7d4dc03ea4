//! Parameter calculators for the catalog.

use tverberg_lab::enumerate::{count_bounded_families, stirling2};
use tverberg_lab::theorems::*;

fn main() -> tverberg_lab::Result<()> {
    for (r, d) in [(2, 2), (3, 2), (4, 3), (6, 2)] {
        println!(
            "r={r} d={d}: N={} min dim {} type-B colors {} N_c(c=1)={} prime power {}",
            (r - 1) * (d + 1),
            min_dimension_bound(r, d),
            type_b_min_colors(r, d),
            bound_nc(r, d, 1)?,
            is_prime_power(r)
        );
    }
    for n in 4..=9 {
        println!(
            "r=3 j=3 d=3 k=2 N={n}: original {:?} sharpened {}",
            gvkf_condition_original(3, 3, 3, 2, n)?,
            gvkf_condition_sharpened(3, 3, 3, 2, n)
        );
    }
    println!("admissible (2,1) in R^3: {}", admissible(&[2, 1], 3));
    println!("S(10,4) = {}, bounded families (10,3,3) = {}", stirling2(10, 4), count_bounded_families(10, 3, 3));
    Ok(())
}
