//! Searching 𝒜(kG) for admissible P: Klein four group versus D4.

use peterweyl::groebner::GroebnerCaps;
use peterweyl::groups::make_group;
use peterweyl::search::{a_basis, search, Strategy, DEFAULT_SEED};

fn main() {
    for (desc, count) in [("Z2xZ2", 200), ("S3", 200), ("D4", 500)] {
        let g = make_group(&desc.parse().unwrap()).unwrap();
        let out = search(&g, &Strategy::RandomSampling { count, seed: DEFAULT_SEED }).unwrap();
        let s = &out.stats;
        println!(
            "{:<6} dim 𝒜 {:>2}: {} (samples {}, M0 {}, filter {}, verified {})",
            g.name(),
            a_basis(&g).unwrap().dim(),
            out.verdict.name(),
            s.samples,
            s.m0_members,
            s.filter_survivors,
            s.verified
        );
    }
    let d4 = make_group(&"D4".parse().unwrap()).unwrap();
    let out = search(&d4, &Strategy::Groebner { caps: GroebnerCaps::default(), injectivity: true }).unwrap();
    println!("D4 Gröbner: {}", out.verdict.name());
}
