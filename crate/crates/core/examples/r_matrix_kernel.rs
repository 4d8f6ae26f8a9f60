//! P = R₂₁R(g⊗1) from the cyclic R-matrix, with T read off from R.

use peterweyl::groups::make_group;
use peterweyl::hopf::AlgebraElement;
use peterweyl::phi::{check_t, check_t_normalized, cyclic_r_matrix, in_a, p_from_r, r_membership, t_from_r, PhiContext};

fn main() {
    for desc in ["Z2", "Z4", "Z5"] {
        let g = make_group(&desc.parse().unwrap()).unwrap();
        let r = cyclic_r_matrix(&g).unwrap();
        println!("{}: (R, R) is an R-pair: {}", g.name(), r_membership(&r, &r));
        let p = p_from_r(&r, &r, &AlgebraElement::one(&g)).unwrap().p;
        let ctx = PhiContext::new(&g).unwrap();
        let t = t_from_r(&r).unwrap();
        println!(
            "  P in A: {}  in M0: {}  rank {}  T checks: {} {}",
            in_a(&p).unwrap(),
            ctx.in_m0(&p).unwrap(),
            ctx.report(&p).unwrap().rank,
            check_t(&p, &t).unwrap(),
            check_t_normalized(&t)
        );
    }
}
