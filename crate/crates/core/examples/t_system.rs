//! The linear system for T in the factorization of (Δ⊗1)(P); infeasible for the S3 family.

use std::time::Instant;

use peterweyl::groups::make_group;
use peterweyl::phi::{s3_family, solve_t, t_system};
use peterweyl::Scalar;

fn main() {
    let g = make_group(&"S3".parse().unwrap()).unwrap();
    let p = s3_family(&g, &Scalar::one(), &Scalar::one()).unwrap().p;
    let (a, _) = t_system(&p);
    println!("system {} × {}", a.rows(), a.cols());
    let t0 = Instant::now();
    let t = solve_t(&p).unwrap();
    println!("T exists: {} ({:.1?})", t.is_some(), t0.elapsed());
}
