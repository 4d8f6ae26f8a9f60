//! Buchberger with caps: a consistent system and a certified inconsistent one.

use peterweyl::groebner::{groebner, GroebnerCaps, GroebnerOutcome, MPoly, PolySystem};
use peterweyl::Scalar;

fn main() {
    let x = MPoly::var(2, 0);
    let y = MPoly::var(2, 1);
    let one = MPoly::constant(2, Scalar::one());

    // x² + y² − 1, x − y
    let circle = x.mul(&x).add(&y.mul(&y)).sub(&one);
    let sys = PolySystem::new(2, vec![circle.clone(), x.sub(&y)]).unwrap();
    report("circle ∩ diagonal", groebner(&sys, GroebnerCaps::default()));

    // xy − 1, x
    let sys = PolySystem::new(2, vec![x.mul(&y).sub(&one), x.clone()]).unwrap();
    report("xy = 1, x = 0", groebner(&sys, GroebnerCaps::default()));
}

fn report(name: &str, out: GroebnerOutcome) {
    match out {
        GroebnerOutcome::Basis(b) => println!("{}: basis of {} polynomials", name, b.len()),
        GroebnerOutcome::ProvedInfeasible { trace_hash } => println!("{}: 1 in ideal, trace {}", name, trace_hash),
        GroebnerOutcome::Unknown { reason } => println!("{}: unknown ({})", name, reason),
    }
}
