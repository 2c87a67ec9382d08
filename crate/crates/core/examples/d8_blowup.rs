//! The blow-up relation on (<rho^2, sigma>, CxC, (a1, a2)) in the dihedral
//! group of order 8, before and after canonicalization.

use burnside::cli::{example_d8, LabeledTerm};

fn show(title: &str, terms: &[LabeledTerm]) {
    println!("{title}:");
    for t in terms {
        println!("  {} · ({}, {}, {})", t.coeff, t.subgroup, t.field, t.beta);
    }
}

fn main() {
    let r = example_d8().unwrap();
    println!("{} = <rho, sigma>, rho = {}, sigma = {}", r.group, r.generators[0].1, r.generators[1].1);
    println!("input: ({}, {}, {})", r.input.subgroup, r.input.field, r.input.beta);
    show("theta1", &r.raw.theta1);
    show("theta2", &r.raw.theta2);
    show("theta1, canonical", &r.canonical.theta1);
    show("theta2, canonical", &r.canonical.theta2);
    println!("class of <sigma>: {{{}}}", r.reflection_class.join(", "));
    println!("matches expected terms: {}", r.matches_expected);
}
