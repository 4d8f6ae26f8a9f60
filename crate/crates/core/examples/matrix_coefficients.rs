//! Matrix-coefficient subspaces H*_V of kG* and their products.

use peterweyl::groups::make_group;
use peterweyl::peter_weyl::{character_structure_constants, component, direct_sum_decomposition, product_component_check};
use peterweyl::reps::irreps;

fn main() {
    for desc in ["S3", "D4"] {
        let g = make_group(&desc.parse().unwrap()).unwrap();
        let reps = irreps(&g).unwrap();
        let dims: Vec<usize> = reps.iter().map(|r| component(r).subspace.dim()).collect();
        println!("{}: component dims {:?}, direct sum = kG*: {}", g.name(), dims, direct_sum_decomposition(&g).unwrap());
        let all = reps.iter().all(|a| reps.iter().all(|b| product_component_check(a, b).unwrap()));
        println!("  H*_V · H*_W = H*_(V⊗W) for all pairs: {}", all);
    }
    let g = make_group(&"S3".parse().unwrap()).unwrap();
    let n = character_structure_constants(&g).unwrap();
    println!("z_std · z_std = {} z_triv + {} z_std + {} z_sgn", n[1][1][0], n[1][1][1], n[1][1][2]);
}
