//! Symbols `(H, N_G(H)/H ⟳ K, β)` and free integer combinations of them.
//!
//! A symbol records an abelian subgroup `H ⊆ G` by its element set, a
//! formal label standing for the Galois algebra `K`, and the weights `β` as a
//! sorted multiset of characters of `H`. Characters are coordinates with
//! respect to the basis that [`FiniteGroup::subgroup`] computes for `H`.
//!
//! Field labels are syntactic. Two labels are equal exactly when their trees
//! coincide; no isomorphism testing of the underlying algebras is attempted.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::abelian::{kernel_of_characters, AbelianError, Character};
use crate::groups::{FiniteGroup, GroupError, SubgroupRef};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymbolError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Abelian(#[from] AbelianError),
    #[error("{weights} weights with transcendence degree {trdeg} do not add up to n = {n}")]
    Dimension {
        weights: usize,
        trdeg: usize,
        n: usize,
    },
    #[error("weight {0} is the trivial character")]
    TrivialWeight(usize),
    #[error("weights do not generate the character group")]
    NotFaithful,
}

/// Formal stand-in for a Galois algebra `K/K_0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FieldLabel {
    Atom {
        name: String,
        trdeg: usize,
        /// `[k′:k]` for the algebraic closure `k′` of `k` in `K`.
        #[serde(rename = "deg")]
        alg_closure_degree: u64,
        /// Number of field factors of `K`.
        #[serde(rename = "components")]
        num_components: u64,
    },
    /// Result of Construction (A): `K` with one parameter adjoined per
    /// character, induced up to the normalizer of the kernel.
    ConstrA {
        base: Box<FieldLabel>,
        chars: Vec<Character>,
    },
}

impl FieldLabel {
    pub fn atom(name: impl Into<String>, trdeg: usize, deg: u64, components: u64) -> Self {
        FieldLabel::Atom {
            name: name.into(),
            trdeg,
            alg_closure_degree: deg,
            num_components: components,
        }
    }

    pub fn trdeg(&self) -> usize {
        match self {
            FieldLabel::Atom { trdeg, .. } => *trdeg,
            FieldLabel::ConstrA { base, chars } => base.trdeg() + chars.len(),
        }
    }

    /// `[k′:k]`, when the label determines it. Adjoining parameters with
    /// trivial characters keeps `k′`; a nontrivial character makes the result
    /// an induced algebra whose `k′` is not recorded.
    pub fn alg_closure_degree(&self) -> Option<u64> {
        match self {
            FieldLabel::Atom {
                alg_closure_degree, ..
            } => Some(*alg_closure_degree),
            FieldLabel::ConstrA { base, chars } => {
                if chars.iter().all(|c| c.0.iter().all(|&x| x == 0)) {
                    base.alg_closure_degree()
                } else {
                    None
                }
            }
        }
    }

    pub fn atom_name(&self) -> &str {
        match self {
            FieldLabel::Atom { name, .. } => name,
            FieldLabel::ConstrA { base, .. } => base.atom_name(),
        }
    }
}

impl fmt::Display for FieldLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldLabel::Atom { name, .. } => f.write_str(name),
            FieldLabel::ConstrA { base, chars } => {
                let cs: Vec<String> = chars.iter().map(ToString::to_string).collect();
                write!(f, "A({base}; {})", cs.join(" "))
            }
        }
    }
}

/// A generator of the symbols group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Symbol {
    subgroup: Vec<usize>,
    field: FieldLabel,
    beta: Vec<Character>,
    n: usize,
}

impl Symbol {
    /// Validates the symbol invariants and sorts the weights.
    pub fn new(
        h: &SubgroupRef,
        field: FieldLabel,
        mut beta: Vec<Character>,
        n: usize,
    ) -> Result<Self, SymbolError> {
        let a = h.characters()?;
        for chi in &beta {
            a.check(chi)?;
        }
        if beta.len() + field.trdeg() != n {
            return Err(SymbolError::Dimension {
                weights: beta.len(),
                trdeg: field.trdeg(),
                n,
            });
        }
        if let Some(i) = beta.iter().position(|c| a.is_zero(c)) {
            return Err(SymbolError::TrivialWeight(i));
        }
        if !a.generates(&beta)? {
            return Err(SymbolError::NotFaithful);
        }
        beta.sort();
        Ok(Symbol {
            subgroup: h.elements().to_vec(),
            field,
            beta,
            n,
        })
    }

    /// Re-validates a deserialized symbol against its group.
    pub fn validated(self, g: &FiniteGroup) -> Result<Self, SymbolError> {
        let h = g.subgroup(&self.subgroup)?;
        Symbol::new(&h, self.field, self.beta, self.n)
    }

    pub fn subgroup(&self) -> &[usize] {
        &self.subgroup
    }

    pub fn subgroup_ref(&self, g: &FiniteGroup) -> Result<SubgroupRef, GroupError> {
        g.subgroup(&self.subgroup)
    }

    pub fn field(&self) -> &FieldLabel {
        &self.field
    }

    pub fn beta(&self) -> &[Character] {
        &self.beta
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

/// The image of `s` under conjugation by `x`: subgroup `x·H·x⁻¹`, weights
/// transported accordingly.
pub fn conjugate_symbol(g: &FiniteGroup, s: &Symbol, x: usize) -> Result<Symbol, SymbolError> {
    let h = s.subgroup_ref(g)?;
    let target = g.subgroup(&g.conjugate_set(x, h.elements()))?;
    let beta = s
        .beta
        .iter()
        .map(|chi| g.transport_character(&h, &target, x, chi))
        .collect::<Result<Vec<_>, _>>()?;
    Symbol::new(&target, s.field.clone(), beta, s.n)
}

/// Canonical form under (C2) then (C1): the subgroup is moved to the least
/// conjugate by the least conjugator, then the weights are replaced by the
/// least multiset in their orbit under the normalizer.
pub fn canonicalize_symbol(g: &FiniteGroup, s: &Symbol) -> Result<Symbol, SymbolError> {
    let h = s.subgroup_ref(g)?;
    h.structure()?;
    let (rep_elems, conj) = g.class_representative(h.elements());
    let rep = g.subgroup(&rep_elems)?;
    let moved = s
        .beta
        .iter()
        .map(|chi| g.transport_character(&h, &rep, conj, chi))
        .collect::<Result<Vec<_>, _>>()?;
    let mut best: Option<Vec<Character>> = None;
    for &x in rep.normalizer() {
        let mut img = moved
            .iter()
            .map(|chi| g.transport_character(&rep, &rep, x, chi))
            .collect::<Result<Vec<_>, _>>()?;
        img.sort();
        if best.as_ref().is_none_or(|b| img < *b) {
            best = Some(img);
        }
    }
    Symbol::new(&rep, s.field.clone(), best.expect("normalizer contains identity"), s.n)
}

/// Construction (A) at the level of groups: the kernel `H̄ = ⋂ ker(a_i)` with
/// its normalizer in `G`, and the formal label `K̄`.
///
/// Each character in the label is stored as the lesser of `a` and `−a`
/// (`t ↦ 1/t` identifies the two actions), and the list is sorted.
pub fn construction_a(
    g: &FiniteGroup,
    h: &SubgroupRef,
    k: &FieldLabel,
    chars: &[Character],
) -> Result<(SubgroupRef, FieldLabel), SymbolError> {
    let st = h.structure()?;
    let a = st.group();
    let kernel = kernel_of_characters(a, chars)?;
    let elems: Vec<usize> = kernel
        .elements()
        .iter()
        .map(|c| st.element(c).expect("coordinates of a member"))
        .collect();
    let hbar = g.subgroup(&elems)?;
    let mut label_chars: Vec<Character> = chars
        .iter()
        .map(|c| {
            let neg = a.neg(c);
            if neg < *c {
                neg
            } else {
                c.clone()
            }
        })
        .collect();
    label_chars.sort();
    let kbar = FieldLabel::ConstrA {
        base: Box::new(k.clone()),
        chars: label_chars,
    };
    Ok((hbar, kbar))
}

/// Finite integer combination of canonical symbols.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SymbolSum {
    terms: BTreeMap<Symbol, i64>,
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    symbol: Symbol,
    coeff: i64,
}

impl Serialize for SymbolSum {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<TermRepr> = self
            .terms
            .iter()
            .map(|(symbol, &coeff)| TermRepr {
                symbol: symbol.clone(),
                coeff,
            })
            .collect();
        terms.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymbolSum {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let terms: Vec<TermRepr> = Vec::deserialize(d)?;
        let mut out = SymbolSum::zero();
        for t in terms {
            out.add_canonical(t.symbol, t.coeff);
        }
        Ok(out)
    }
}

impl SymbolSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_symbol(g: &FiniteGroup, s: &Symbol, coeff: i64) -> Result<Self, SymbolError> {
        let mut out = Self::zero();
        out.add_symbol(g, s, coeff)?;
        Ok(out)
    }

    /// Adds `coeff · s` after canonicalizing `s`.
    pub fn add_symbol(&mut self, g: &FiniteGroup, s: &Symbol, coeff: i64) -> Result<(), SymbolError> {
        let c = canonicalize_symbol(g, s)?;
        self.add_canonical(c, coeff);
        Ok(())
    }

    /// Adds a symbol the caller knows to be canonical.
    pub fn add_canonical(&mut self, s: Symbol, coeff: i64) {
        if coeff == 0 {
            return;
        }
        match self.terms.entry(s) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, s: &Symbol) -> i64 {
        self.terms.get(s).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Symbol, i64)> {
        self.terms.iter().map(|(s, &c)| (s, c))
    }

    pub fn retain(&mut self, mut keep: impl FnMut(&Symbol) -> bool) {
        self.terms.retain(|s, _| keep(s));
    }
}

/// `cx·x + cy·y`.
pub fn combine(x: &SymbolSum, y: &SymbolSum, cx: i64, cy: i64) -> SymbolSum {
    let mut out = SymbolSum::zero();
    for (s, c) in x.iter() {
        out.add_canonical(s.clone(), cx * c);
    }
    for (s, c) in y.iter() {
        out.add_canonical(s.clone(), cy * c);
    }
    out
}


#[cfg(test)]
mod props {
    use super::*;
    use crate::abelian::AbelianGroup;
    use proptest::prelude::*;

    fn groups() -> Vec<FiniteGroup> {
        vec![
            FiniteGroup::from_generators(4, &[vec![1, 2, 3, 0], vec![2, 1, 0, 3]]).unwrap(),
            FiniteGroup::from_generators(3, &[vec![1, 2, 0], vec![1, 0, 2]]).unwrap(),
            FiniteGroup::from_generators(4, &[vec![1, 2, 0, 3], vec![1, 0, 3, 2]]).unwrap(),
            FiniteGroup::from_abelian(&AbelianGroup::new(vec![2, 4]).unwrap()).unwrap(),
        ]
    }

    /// A valid symbol picked from seeds, if the seeds give one.
    fn build(g: &FiniteGroup, sub: usize, weights: &[usize], trdeg: usize) -> Option<Symbol> {
        let subs = g.abelian_subgroups();
        let h = g.subgroup(&subs[sub % subs.len()]).ok()?;
        let a = h.characters().ok()?.clone();
        let beta: Vec<Character> = weights.iter().map(|&w| a.element_at(w % a.order() as usize)).collect();
        let n = beta.len() + trdeg;
        Symbol::new(&h, FieldLabel::atom("K", trdeg, 1, 1), beta, n).ok()
    }

    proptest! {
        #[test]
        fn canonical_form_is_conjugation_invariant(
            gi in 0usize..4,
            sub in 0usize..64,
            weights in proptest::collection::vec(0usize..64, 0..4),
            trdeg in 0usize..2,
            x in 0usize..64,
        ) {
            let g = &groups()[gi];
            let s = build(g, sub, &weights, trdeg);
            prop_assume!(s.is_some());
            let s = s.unwrap();
            let c = canonicalize_symbol(g, &s).unwrap();
            prop_assert_eq!(canonicalize_symbol(g, &c).unwrap(), c.clone());
            let t = conjugate_symbol(g, &s, x % g.order()).unwrap();
            prop_assert_eq!(canonicalize_symbol(g, &t).unwrap(), c.clone());
            prop_assert_eq!(c.beta().len(), s.beta().len());
        }

        #[test]
        fn construction_a_orders(
            gi in 0usize..4,
            sub in 0usize..64,
            seeds in proptest::collection::vec(0usize..64, 0..3),
        ) {
            let g = &groups()[gi];
            let subs = g.abelian_subgroups();
            let h = g.subgroup(&subs[sub % subs.len()]).unwrap();
            let a = h.characters().unwrap().clone();
            let chars: Vec<Character> = seeds.iter().map(|&w| a.element_at(w % a.order() as usize)).collect();
            let k = FieldLabel::atom("K", 0, 1, 1);
            let (hb, kb) = construction_a(g, &h, &k, &chars).unwrap();
            prop_assert_eq!(hb.order() as u64 * a.subgroup(&chars).unwrap().order(), h.order() as u64);
            prop_assert_eq!(kb.trdeg(), chars.len());
        }
    }
}
