//! The group algebra as a Hopf algebra, its actions and its center.

use peterweyl::groups::make_group;
use peterweyl::hopf::{action_invariants, center, verify_hopf_axioms, Action, AlgebraElement};

fn main() {
    let g = make_group(&"S3".parse().unwrap()).unwrap();
    println!("Hopf axioms hold: {}", verify_hopf_axioms(&g));

    let s1 = AlgebraElement::basis(&g, g.element("s1").unwrap());
    let s2 = AlgebraElement::basis(&g, g.element("s2").unwrap());
    let x = s1.act(Action::Ad, &s2).unwrap();
    println!("ad(s2)(s1) = {:?}", x.terms().keys().map(|&k| g.element_name(k)).collect::<Vec<_>>());

    println!("dim Z(kS3) = {}", center(&g).dim());
    for a in Action::ALL {
        println!("{:?}-invariants: dim {}", a, action_invariants(&g, a).dim());
    }
}
