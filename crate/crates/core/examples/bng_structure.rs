//! Structure of B_n(Z/m) for small m and n, printed as a CSV table, plus a
//! class computation in B_2(Z/3).

use burnside::abelian::{AbelianGroup, Character};
use burnside::bng::{BnGElement, BnGPresentation, Limits};
use burnside::cli::{emit_table, TableRow};

fn main() {
    let mut rows = Vec::new();
    for m in 1..=7 {
        for n in 1..=3 {
            let a = AbelianGroup::cyclic(m);
            let p = BnGPresentation::new(&a, n, &Limits::default()).unwrap();
            rows.push(TableRow { group: a.name(), n, structure: p.structure() });
        }
    }
    print!("{}", emit_table(&rows));

    let p = BnGPresentation::new(&AbelianGroup::cyclic(3), 2, &Limits::default()).unwrap();
    let c = |v: i64| Character(vec![v]);
    let x = BnGElement::generator(vec![c(1), c(1)], 1);
    let y = BnGElement::generator(vec![c(1), c(0)], 1);
    let z = BnGElement::generator(vec![c(1), c(2)], 1);
    println!("[a,a] ~ [a,0]: {}", p.equal_classes(&x, &y).unwrap());
    println!("[a,2a] = 0: {}", p.reduce_class(&z).unwrap().is_zero());
}
