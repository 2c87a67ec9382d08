//! The iterated blow-up relation on the first j weights, and its image in
//! B_n(G) compared with the image of the original symbol.

use burnside::abelian::AbelianGroup;
use burnside::bng::{project_symbol, BnGElement, BnGPresentation, Limits};
use burnside::groups::FiniteGroup;
use burnside::relations::expand_prop46;
use burnside::symbols::{FieldLabel, Symbol};

fn main() {
    let a = AbelianGroup::cyclic(5);
    let g = FiniteGroup::from_abelian(&a).unwrap();
    let all: Vec<usize> = (0..g.order()).collect();
    let h = g.subgroup(&all).unwrap();
    let chars = h.characters().unwrap().clone();
    let beta = [1, 1, 3].map(|v| chars.reduce(&[v]).unwrap()).to_vec();
    let s = Symbol::new(&h, FieldLabel::atom("k", 0, 1, 1), beta, 3).unwrap();
    let p = BnGPresentation::new(&a, 3, &Limits::default()).unwrap();

    for j in 2..=3 {
        let x = expand_prop46(&g, &s, j).unwrap();
        println!("j = {j}: {} terms", x.len());
        let mut image = BnGElement::zero();
        for (t, c) in x.iter() {
            let field = t.field().to_string();
            let weights: Vec<String> = t.beta().iter().map(ToString::to_string).collect();
            println!("  {c} · (|H| = {}, {field}, ({}))", t.subgroup().len(), weights.join(", "));
            image.add_all(&project_symbol(&g, t, &p).unwrap(), c);
        }
        let same = p.equal_classes(&image, &project_symbol(&g, &s, &p).unwrap()).unwrap();
        println!("  same class in B_3(Z/5): {same}");
    }
}
