//! Membership predicates and rank of Φ_P along the two-parameter S3 family.

use peterweyl::groups::make_group;
use peterweyl::phi::{s3_family, PhiContext};
use peterweyl::Scalar;

fn main() {
    let g = make_group(&"S3".parse().unwrap()).unwrap();
    let ctx = PhiContext::new(&g).unwrap();
    for (l, m) in [(1, 1), (2, 3), (5, 7), (0, 1), (1, 0)] {
        let p = s3_family(&g, &Scalar::from_int(l), &Scalar::from_int(m)).unwrap().p;
        let r = ctx.report(&p).unwrap();
        println!("λ={} μ={}: A={} M={} M0={} rank={} witnesses={:?}", l, m, r.a, r.m, r.m0, r.rank, r.m_witnesses);
    }
}
