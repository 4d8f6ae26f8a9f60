//! Rationals, cyclotomics and ℚ(v), plus exact row reduction.

use peterweyl::scalar::quantum_int;
use peterweyl::{Matrix, Scalar, Subspace};

fn main() {
    let a = Scalar::rational(3, 4) + Scalar::rational(-1, 6);
    println!("3/4 - 1/6 = {}", a);

    let z = Scalar::zeta(5);
    let sum: Scalar = (0..5).map(|k| z.pow(k)).sum::<Scalar>().demote();
    println!("1 + ζ5 + ... + ζ5^4 = {}", sum);

    println!("[3] = {}", quantum_int(3));

    let m = Matrix::from_i64(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
    println!("rank {} nullity {}", m.rank(), m.nullspace().len());

    // the same plane from two generating sets
    let p1 = Subspace::span(3, vec![vec![Scalar::from_int(1), Scalar::zero(), Scalar::one()], vec![Scalar::zero(), Scalar::one(), Scalar::one()]]).unwrap();
    let p2 = Subspace::span(3, vec![vec![Scalar::from_int(2), Scalar::from_int(2), Scalar::from_int(4)], vec![Scalar::one(), Scalar::from_int(-1), Scalar::zero()]]).unwrap();
    assert_eq!(p1, p2);
    println!("planes equal: {}", p1 == p2);
}
