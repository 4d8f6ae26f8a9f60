//! Central elements c_q(n) of U_q(sl2) and their multiplication rule.

use peterweyl::uq::{c_q, central_commutant_solve, in_span, joseph_component_check, product_rule_check, theta_convention};

fn main() {
    println!("Θ convention: {:?}", theta_convention().unwrap());
    for n in 0..=2 {
        let c = c_q(n).unwrap();
        println!("c_q({}) = {}\n  central: {}", n, c, c.is_central());
    }
    println!("c1·c1 = c2 + c0: {}", product_rule_check(1, 1).unwrap());
    println!("c1·c2 = c3 + c1: {}", product_rule_check(1, 2).unwrap());
    let basis = central_commutant_solve(1, 1, 1);
    println!("bounded center has dim {}, contains c_q(1): {}", basis.len(), in_span(&c_q(1).unwrap(), &basis));
    for n in 0..=2 {
        let r = joseph_component_check(n).unwrap();
        println!("V({}): highest coefficient ↦ {}  ad-orbit dim {}", n, r.highest_image, r.orbit_dim);
    }
}
