//! Irreducible representations, character tables and tensor decompositions.

use peterweyl::groups::make_group;
use peterweyl::reps::{character_table_csv, decompose_against, irreps};

fn main() {
    for desc in ["S3", "D4", "S4"] {
        let g = make_group(&desc.parse().unwrap()).unwrap();
        println!("{}:\n{}", g.name(), character_table_csv(&g).unwrap());
    }
    let g = make_group(&"S4".parse().unwrap()).unwrap();
    let reps = irreps(&g).unwrap();
    let std = reps.iter().find(|r| r.label() == "std").unwrap();
    let k = decompose_against(&std.tensor(std).unwrap(), &reps).unwrap();
    println!("std ⊗ std = {}", k);
}
