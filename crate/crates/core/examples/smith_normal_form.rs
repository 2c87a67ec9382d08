//! Smith and Hermite normal forms of a small integer matrix, and the
//! cokernel they describe.

use burnside::zlinalg::{cokernel_invariants, hermite_normal_form, smith_normal_form, IntMatrix};

fn main() {
    let m = IntMatrix::from_i64(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
    let s = smith_normal_form(&m);
    println!("M =\n{}", m.to_csv());
    println!("S = U·M·V =\n{}", s.diagonal.to_csv());
    println!("invariant factors: {:?}", s.invariant_factors().iter().map(ToString::to_string).collect::<Vec<_>>());
    assert_eq!(s.left.mul(&m).unwrap().mul(&s.right).unwrap(), s.diagonal);

    println!("HNF =\n{}", hermite_normal_form(&m).to_csv());
    let c = cokernel_invariants(&m);
    println!("Z^3 / rows(M) = Z^{} + torsion {:?}", c.free_rank, c.torsion.iter().map(ToString::to_string).collect::<Vec<_>>());
}
