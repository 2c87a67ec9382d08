//! Wedge invariant of faithful representations of Z/5 x Z/5.

use burnside::abelian::{wedge_equivalent, AbelianGroup, Character};

fn main() {
    let a = AbelianGroup::new(vec![5, 5]).unwrap();
    let beta = vec![Character(vec![1, 0]), Character(vec![0, 1])];
    for k in 1..5 {
        let gamma = vec![Character(vec![1, 0]), Character(vec![0, k])];
        let eq = wedge_equivalent(&a, &beta, &gamma).unwrap();
        println!("(e1, e2) vs (e1, {k}e2): {}", if eq { "equivalent" } else { "not equivalent" });
    }
}
