//! Characters of a finite abelian group: pairing, kernels and quotients.

use burnside::abelian::{kernel_of_characters, quotient_with_projection, AbelianGroup, Character};

fn main() {
    let a = AbelianGroup::new(vec![2, 4]).unwrap();
    println!("A = {} of order {}", a.name(), a.order());
    let chi = Character(vec![1, 2]);
    let x = Character(vec![1, 1]);
    println!("<{chi}, {x}> = {}/{}", a.pairing(&chi, &x), a.exponent());

    let k = kernel_of_characters(&a, std::slice::from_ref(&chi)).unwrap();
    let elems: Vec<String> = k.elements().iter().map(ToString::to_string).collect();
    println!("ker {chi} = {{{}}} ≅ {}", elems.join(", "), k.structure().name());

    let q = quotient_with_projection(&a, std::slice::from_ref(&chi)).unwrap();
    println!("A/<{chi}> = {}", q.target().name());
    for y in a.elements() {
        println!("  {y} -> {}", q.project(&y).unwrap());
    }
}
