//! Built-in groups, conjugacy classes and the dimension of 𝒜(kG).

use peterweyl::groups::{burnside_orbit_count, make_group};
use peterweyl::search::commutation_kernel_dim;

fn main() {
    for desc in ["S3", "D4", "Z5", "Z2xZ2", "S4"] {
        let g = make_group(&desc.parse().unwrap()).unwrap();
        assert!(g.verify_axioms());
        let class_sizes: Vec<usize> = g.classes().iter().map(Vec::len).collect();
        println!(
            "{:<6} order {:>2}  classes {:?}  dim 𝒜 = {} (Burnside) = {} (kernel)",
            g.name(),
            g.order(),
            class_sizes,
            burnside_orbit_count(&g),
            commutation_kernel_dim(&g)
        );
    }
    let s3 = make_group(&"S3".parse().unwrap()).unwrap();
    println!("S3 elements: {:?}", s3.names());
}
