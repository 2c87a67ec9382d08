//! Relations on two entries already generate all relations: compares row
//! spaces of the two relation matrices for small groups.

use burnside::abelian::AbelianGroup;
use burnside::bng::Limits;
use burnside::relations::relation_rows;
use burnside::zlinalg::row_space_equal;

fn main() {
    for f in [vec![2], vec![3], vec![4], vec![5], vec![2, 2], vec![6]] {
        let a = AbelianGroup::new(f).unwrap();
        for n in 2..=3 {
            let two = relation_rows(&a, n, 2, &Limits::default()).unwrap();
            let all = relation_rows(&a, n, n, &Limits::default()).unwrap();
            println!(
                "{} n={n}: {} vs {} rows, equal row spaces: {}",
                a.name(),
                two.rows(),
                all.rows(),
                row_space_equal(&two, &all).unwrap()
            );
        }
    }
}
