//! Blow-up relations on symbols and the relation rows of `B_n(G)`.

use std::collections::{BTreeSet, HashMap, HashSet};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::abelian::{AbelianGroup, Character};
use crate::bng::{enumerate_generators, BnGError, Limits};
use crate::groups::{FiniteGroup, GroupError, SubgroupRef};
use crate::symbols::{construction_a, Symbol, SymbolError, SymbolSum};
use crate::zlinalg::IntMatrix;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RelationError {
    #[error("positions ({i}, {j}) invalid for {len} weights")]
    BadPositions { i: usize, j: usize, len: usize },
    #[error("j = {j} outside 2..={len}")]
    BadDepth { j: usize, len: usize },
    #[error(transparent)]
    Symbol(#[from] SymbolError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    BnG(#[from] BnGError),
}

/// Which case condition emptied part of an expansion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Vanishing {
    #[serde(rename = "none")]
    None,
    /// The two chosen weights are mutually inverse, so the symbol itself is
    /// zero by (B1).
    #[serde(rename = "B1")]
    B1,
    /// `a_1 = a_2`: the first part is empty.
    #[serde(rename = "equal_weights")]
    EqualWeights,
    /// Some weight lies in `⟨a_1 − a_2⟩`: the second part is empty.
    #[serde(rename = "coset_condition")]
    CosetCondition,
}

/// `s = Θ_1 + Θ_2` under (B2).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpansionReport {
    pub theta1: SymbolSum,
    pub theta2: SymbolSum,
    pub vanished_by: Vanishing,
}

/// Uncanonicalized terms of a (B2) expansion, in the order they arise.
#[derive(Clone, Debug)]
pub struct RawExpansion {
    pub theta1: Vec<Symbol>,
    pub theta2: Option<Symbol>,
    pub vanished_by: Vanishing,
}

fn has_inverse_pair(a: &AbelianGroup, beta: &[Character]) -> bool {
    beta.iter().enumerate().any(|(i, x)| {
        let neg = a.neg(x);
        beta.iter().enumerate().any(|(j, y)| i != j && *y == neg)
    })
}

/// (B1): drops every symbol whose weights contain a pair `{a, −a}`.
pub fn apply_b1(g: &FiniteGroup, x: &SymbolSum) -> Result<SymbolSum, RelationError> {
    let mut out = SymbolSum::zero();
    for (s, c) in x.iter() {
        let h = s.subgroup_ref(g)?;
        if !has_inverse_pair(h.characters()?, s.beta()) {
            out.add_canonical(s.clone(), c);
        }
    }
    Ok(out)
}

/// Restricts characters of `h` to `hbar ⊆ h`.
fn restrict_all(
    g: &FiniteGroup,
    h: &SubgroupRef,
    hbar: &SubgroupRef,
    chars: &[Character],
) -> Result<Vec<Character>, RelationError> {
    chars
        .iter()
        .map(|c| g.restrict_character(h, hbar, c).map_err(Into::into))
        .collect()
}

/// (B2) applied at weight positions `i`, `j` of `s.beta()`, without
/// canonicalizing the output.
pub fn expand_b2_raw(
    g: &FiniteGroup,
    s: &Symbol,
    i: usize,
    j: usize,
) -> Result<RawExpansion, RelationError> {
    let len = s.beta().len();
    if len < 2 || i == j || i >= len || j >= len {
        return Err(RelationError::BadPositions { i, j, len });
    }
    let h = s.subgroup_ref(g)?;
    let a = h.characters()?.clone();
    let a1 = &s.beta()[i];
    let a2 = &s.beta()[j];
    let rest: Vec<Character> = s
        .beta()
        .iter()
        .enumerate()
        .filter(|&(k, _)| k != i && k != j)
        .map(|(_, c)| c.clone())
        .collect();
    let mut vanished_by = Vanishing::None;

    let mut theta1 = Vec::new();
    if a1 == a2 {
        vanished_by = Vanishing::EqualWeights;
    } else {
        for (x, y) in [(a1, a2), (a2, a1)] {
            let mut beta = vec![x.clone(), a.sub(y, x)];
            beta.extend(rest.iter().cloned());
            theta1.push(Symbol::new(&h, s.field().clone(), beta, s.n())?);
        }
    }

    let diff = a.sub(a1, a2);
    let span = a.subgroup(std::slice::from_ref(&diff)).map_err(SymbolError::from)?;
    let theta2 = if s.beta().iter().any(|c| span.contains(c)) {
        if vanished_by == Vanishing::None {
            vanished_by = Vanishing::CosetCondition;
        }
        None
    } else {
        let (hbar, kbar) = construction_a(g, &h, s.field(), &[diff])?;
        let mut weights = vec![a2.clone()];
        weights.extend(rest.iter().cloned());
        let beta = restrict_all(g, &h, &hbar, &weights)?;
        Some(Symbol::new(&hbar, kbar, beta, s.n())?)
    };

    if vanished_by == Vanishing::None && *a1 == a.neg(a2) {
        vanished_by = Vanishing::B1;
    }
    Ok(RawExpansion {
        theta1,
        theta2,
        vanished_by,
    })
}

/// (B2) at positions `i`, `j`, with canonical output.
pub fn expand_b2(
    g: &FiniteGroup,
    s: &Symbol,
    i: usize,
    j: usize,
) -> Result<ExpansionReport, RelationError> {
    let raw = expand_b2_raw(g, s, i, j)?;
    let mut theta1 = SymbolSum::zero();
    for t in &raw.theta1 {
        theta1.add_symbol(g, t, 1)?;
    }
    let mut theta2 = SymbolSum::zero();
    if let Some(t) = &raw.theta2 {
        theta2.add_symbol(g, t, 1)?;
    }
    Ok(ExpansionReport {
        theta1,
        theta2,
        vanished_by: raw.vanished_by,
    })
}

/// The iterated blow-up relation on the first `j` weights: a sum over pairs
/// `(I, C_I)` with `I ⊆ {1..j}` nonempty and `C_I` a nontrivial coset of
/// `⟨a_i − a_{i_0} : i ∈ I⟩` such that `I` is exactly the set of indices
/// `i ≤ j` with `a_i ∈ C_I` and the weights past `j` stay nonzero modulo
/// the subgroup.
pub fn expand_prop46(g: &FiniteGroup, s: &Symbol, j: usize) -> Result<SymbolSum, RelationError> {
    let beta = s.beta();
    if j < 2 || j > beta.len() {
        return Err(RelationError::BadDepth { j, len: beta.len() });
    }
    let h = s.subgroup_ref(g)?;
    let a = h.characters()?.clone();
    let mut out = SymbolSum::zero();
    for mask in 1u32..(1 << j) {
        let members: Vec<usize> = (0..j).filter(|&k| mask & (1 << k) != 0).collect();
        let i0 = members[0];
        let diffs: Vec<Character> = members[1..]
            .iter()
            .map(|&k| a.sub(&beta[k], &beta[i0]))
            .collect();
        let span = a.subgroup(&diffs).map_err(SymbolError::from)?;
        let span_elems = span.elements();
        if beta[j..].iter().any(|c| span.contains(c)) {
            continue;
        }
        let mut visited = vec![false; a.order() as usize];
        for x in a.elements() {
            if visited[a.index_of(&x)] {
                continue;
            }
            let coset: BTreeSet<Character> = span_elems.iter().map(|d| a.add(&x, d)).collect();
            for c in &coset {
                visited[a.index_of(c)] = true;
            }
            if coset.contains(&a.zero()) {
                continue;
            }
            let hits: Vec<usize> = (0..j).filter(|&k| coset.contains(&beta[k])).collect();
            if hits != members {
                continue;
            }
            let (hi, ki) = if diffs.is_empty() {
                (h.clone(), s.field().clone())
            } else {
                construction_a(g, &h, s.field(), &diffs)?
            };
            let mut weights = vec![beta[i0].clone()];
            weights.extend(
                (0..j)
                    .filter(|k| !members.contains(k))
                    .map(|k| a.sub(&beta[k], &beta[i0])),
            );
            weights.extend(beta[j..].iter().cloned());
            let bi = restrict_all(g, &h, &hi, &weights)?;
            out.add_symbol(g, &Symbol::new(&hi, ki, bi, s.n())?, 1)?;
        }
    }
    Ok(out)
}

/// All distinct sub-multisets of size `j` of a sorted multiset, each with
/// its complement.
pub(crate) fn sub_multisets(t: &[Character], j: usize) -> Vec<(Vec<Character>, Vec<Character>)> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let len = t.len();
    let mut idx: Vec<usize> = (0..j).collect();
    if j > len {
        return out;
    }
    loop {
        let chosen: Vec<Character> = idx.iter().map(|&k| t[k].clone()).collect();
        if seen.insert(chosen.clone()) {
            let rest = (0..len)
                .filter(|k| !idx.contains(k))
                .map(|k| t[k].clone())
                .collect();
            out.push((chosen, rest));
        }
        let Some(p) = (0..j).rev().find(|&p| idx[p] < len - j + p) else {
            return out;
        };
        idx[p] += 1;
        for q in p + 1..j {
            idx[q] = idx[q - 1] + 1;
        }
    }
}

/// Right-hand side of the `B_n(G)` relation on the chosen entries: one tuple
/// per distinct value `v` among them, with `v` kept once and the other chosen
/// entries shifted by `−v`.
pub(crate) fn relation_terms(
    a: &AbelianGroup,
    chosen: &[Character],
    rest: &[Character],
) -> Vec<Vec<Character>> {
    let mut out = Vec::new();
    for (i, v) in chosen.iter().enumerate() {
        if chosen[..i].contains(v) {
            continue;
        }
        let mut t: Vec<Character> = chosen
            .iter()
            .enumerate()
            .map(|(k, c)| if k == i { c.clone() } else { a.sub(c, v) })
            .collect();
        t.extend(rest.iter().cloned());
        t.sort();
        out.push(t);
    }
    out
}

/// Relation matrix of `B_n(G)` using the relations for `2 ≤ j ≤ j_max`,
/// with columns indexed by [`enumerate_generators`]. Every distinct
/// `j`-element sub-multiset of every generator contributes a row; zero and
/// duplicate rows are dropped.
pub fn relation_rows(
    a: &AbelianGroup,
    n: usize,
    j_max: usize,
    limits: &Limits,
) -> Result<IntMatrix, RelationError> {
    if j_max < 2 || j_max > n {
        return Err(RelationError::BadDepth { j: j_max, len: n });
    }
    let gens = enumerate_generators(a, n, limits)?;
    Ok(relation_rows_for(a, &gens, j_max))
}

pub(crate) fn relation_rows_for(a: &AbelianGroup, gens: &[Vec<Character>], j_max: usize) -> IntMatrix {
    let index: HashMap<&[Character], usize> =
        gens.iter().enumerate().map(|(i, t)| (t.as_slice(), i)).collect();
    let mut seen: HashSet<Vec<(usize, i64)>> = HashSet::new();
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for (col, t) in gens.iter().enumerate() {
        for j in 2..=j_max {
            for (chosen, rest) in sub_multisets(t, j) {
                let mut coeffs: HashMap<usize, i64> = HashMap::from([(col, 1)]);
                for rhs in relation_terms(a, &chosen, &rest) {
                    let c = index[rhs.as_slice()];
                    *coeffs.entry(c).or_default() -= 1;
                }
                let mut sparse: Vec<(usize, i64)> =
                    coeffs.into_iter().filter(|&(_, v)| v != 0).collect();
                if sparse.is_empty() {
                    continue;
                }
                sparse.sort_unstable();
                if !seen.insert(sparse.clone()) {
                    continue;
                }
                let mut row = vec![BigInt::from(0); gens.len()];
                for (c, v) in sparse {
                    row[c] = BigInt::from(v);
                }
                rows.push(row);
            }
        }
    }
    IntMatrix::from_rows(gens.len(), &rows).expect("rows match generator count")
}
