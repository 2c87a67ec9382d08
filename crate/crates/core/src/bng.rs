//! The groups `B_n(G)` for finite abelian `G`.
//!
//! Generators are the multisets `[a_1, …, a_n]` of characters, zero entries
//! allowed, that generate `A = G^∨`. Relations are the blow-up relations on
//! `j` entries; by default only `j = 2` is used, which presents the same
//! group (see [`crate::cli`]'s `verify-prop71` for the check).
//!
//! Classes are reduced to coordinates in the Smith basis of the relation
//! matrix: `x ↦ x·V`, keeping free coordinates as they are and torsion
//! coordinates modulo their invariant factor.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::abelian::{AbelianError, AbelianGroup, Character};
use crate::groups::{FiniteGroup, GroupError};
use crate::relations::relation_rows_for;
use crate::symbols::Symbol;
use crate::zlinalg::{
    cokernel_from_factors, decimal_vec, smith_normal_form_right, CokernelInvariants,
    ColumnSmithForm, IntMatrix,
};

/// Default bound on the number of candidate multisets scanned.
pub const DEFAULT_MAX_CANDIDATES: u128 = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BnGError {
    #[error("{candidates} candidate multisets exceed the bound {bound}")]
    TooManyCandidates { candidates: u128, bound: u128 },
    #[error("n must be at least 1")]
    ZeroDimension,
    #[error("{0:?} is not a generator of the presentation")]
    UnknownGenerator(Vec<Character>),
    #[error("symbol dimension {symbol} differs from presentation dimension {presentation}")]
    DimensionMismatch { symbol: usize, presentation: usize },
    #[error("ambient group is not abelian")]
    NotAbelian,
    #[error("character group {found} does not match the presentation group {expected}")]
    GroupMismatch { expected: String, found: String },
    #[error("[k':k] is not determined by the field label {0}")]
    UndeterminedDegree(String),
    #[error(transparent)]
    Abelian(#[from] AbelianError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

impl BnGError {
    pub fn is_size_error(&self) -> bool {
        matches!(self, BnGError::TooManyCandidates { .. })
    }
}

/// Enumeration bounds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_candidates: u128,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_candidates: DEFAULT_MAX_CANDIDATES,
        }
    }
}

fn multiset_count(order: u128, n: usize) -> u128 {
    // C(order + n - 1, n), saturating
    let mut acc: u128 = 1;
    for k in 0..n as u128 {
        acc = acc.saturating_mul(order + k) / (k + 1);
    }
    acc
}

/// All size-`n` multisets over `A` that generate `A`, each sorted, in
/// lexicographic order.
pub fn enumerate_generators(
    a: &AbelianGroup,
    n: usize,
    limits: &Limits,
) -> Result<Vec<Vec<Character>>, BnGError> {
    if n == 0 {
        return Err(BnGError::ZeroDimension);
    }
    let order = a.order() as usize;
    let candidates = multiset_count(order as u128, n);
    if candidates > limits.max_candidates {
        return Err(BnGError::TooManyCandidates {
            candidates,
            bound: limits.max_candidates,
        });
    }
    let elems: Vec<Character> = a.elements().collect();
    let mut out = Vec::new();
    let mut idx = vec![0usize; n];
    loop {
        let t: Vec<Character> = idx.iter().map(|&i| elems[i].clone()).collect();
        if a.generates(&t)? {
            out.push(t);
        }
        let Some(p) = (0..n).rev().find(|&p| idx[p] + 1 < order) else {
            return Ok(out);
        };
        idx[p] += 1;
        for q in p + 1..n {
            idx[q] = idx[p];
        }
    }
}

/// Integer combination of generators of `B_n(G)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BnGElement {
    terms: BTreeMap<Vec<Character>, i64>,
}

impl BnGElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// A single multiset; the entries need not be sorted.
    pub fn generator(mut tuple: Vec<Character>, coeff: i64) -> Self {
        tuple.sort();
        let mut e = Self::zero();
        e.add(tuple, coeff);
        e
    }

    pub fn add(&mut self, mut tuple: Vec<Character>, coeff: i64) {
        tuple.sort();
        let slot = self.terms.entry(tuple.clone()).or_insert(0);
        *slot += coeff;
        if *slot == 0 {
            self.terms.remove(&tuple);
        }
    }

    pub fn add_all(&mut self, other: &BnGElement, scale: i64) {
        for (t, &c) in &other.terms {
            self.add(t.clone(), scale * c);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&[Character], i64)> {
        self.terms.iter().map(|(t, &c)| (t.as_slice(), c))
    }
}

/// Normal form of a class: free coordinates, then torsion coordinates in
/// `[0, d_i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BnGClass {
    #[serde(with = "decimal_vec")]
    pub free: Vec<BigInt>,
    #[serde(with = "decimal_vec")]
    pub torsion: Vec<BigInt>,
}

impl BnGClass {
    pub fn is_zero(&self) -> bool {
        self.free.iter().all(Zero::is_zero) && self.torsion.iter().all(Zero::is_zero)
    }
}

/// Generators, relation matrix (relations with `j = 2`) and its Smith data.
#[derive(Clone, Debug)]
pub struct BnGPresentation {
    group: AbelianGroup,
    n: usize,
    generators: Vec<Vec<Character>>,
    index: HashMap<Vec<Character>, usize>,
    relations: IntMatrix,
    snf: ColumnSmithForm,
    rank: usize,
}

impl BnGPresentation {
    pub fn new(a: &AbelianGroup, n: usize, limits: &Limits) -> Result<Self, BnGError> {
        let generators = enumerate_generators(a, n, limits)?;
        let relations = if n >= 2 {
            relation_rows_for(a, &generators, 2)
        } else {
            IntMatrix::zeros(0, generators.len())
        };
        let snf = smith_normal_form_right(&relations);
        let rank = snf.invariant_factors().len();
        let index = generators
            .iter()
            .enumerate()
            .map(|(i, t)| (t.clone(), i))
            .collect();
        Ok(BnGPresentation {
            group: a.clone(),
            n,
            generators,
            index,
            relations,
            snf,
            rank,
        })
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Vec<Character>] {
        &self.generators
    }

    pub fn relation_matrix(&self) -> &IntMatrix {
        &self.relations
    }

    pub fn structure(&self) -> CokernelInvariants {
        cokernel_from_factors(self.generators.len(), &self.snf.invariant_factors())
    }

    /// Moduli `d_i > 1` of the torsion coordinates, in order.
    pub fn torsion_moduli(&self) -> Vec<BigInt> {
        self.torsion_slots().map(|(_, d)| d.clone()).collect()
    }

    fn torsion_slots(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        let diag = &self.snf.diagonal;
        (0..self.rank)
            .map(move |i| (i, &diag[(i, i)]))
            .filter(|(_, d)| !d.is_one())
    }

    pub fn generator_index(&self, tuple: &[Character]) -> Option<usize> {
        self.index.get(tuple).copied()
    }

    /// Coefficient vector over the generator basis.
    pub fn coordinates(&self, x: &BnGElement) -> Result<Vec<BigInt>, BnGError> {
        let mut v = vec![BigInt::zero(); self.generators.len()];
        for (t, c) in x.iter() {
            for chi in t {
                self.group.check(chi)?;
            }
            let i = self
                .generator_index(t)
                .ok_or_else(|| BnGError::UnknownGenerator(t.to_vec()))?;
            v[i] += c;
        }
        Ok(v)
    }

    pub fn reduce_class(&self, x: &BnGElement) -> Result<BnGClass, BnGError> {
        let v = self.coordinates(x)?;
        let y = self.snf.right.left_mul_vec(&v);
        let torsion = self.torsion_slots().map(|(i, d)| y[i].mod_floor(d)).collect();
        let free = y[self.rank..].to_vec();
        Ok(BnGClass { free, torsion })
    }

    pub fn equal_classes(&self, x: &BnGElement, y: &BnGElement) -> Result<bool, BnGError> {
        Ok(self.reduce_class(x)? == self.reduce_class(y)?)
    }

    /// Class of a faithful representation given by its characters; entries
    /// beyond the tuple length are padded with zeros.
    pub fn class_of_representation(&self, chars: &[Character]) -> Result<BnGClass, BnGError> {
        let mut t = chars.to_vec();
        t.resize(self.n, self.group.zero());
        self.reduce_class(&BnGElement::generator(t, 1))
    }
}

/// Cokernel invariants of `B_n(A)` from the `j = 2` presentation.
pub fn group_structure(
    a: &AbelianGroup,
    n: usize,
    limits: &Limits,
) -> Result<CokernelInvariants, BnGError> {
    Ok(BnGPresentation::new(a, n, limits)?.structure())
}

/// Image of a symbol in `B_n(G)`: zero unless the subgroup is all of `G`,
/// otherwise `[k′:k]` times the weights padded with zeros.
pub fn project_symbol(
    g: &FiniteGroup,
    s: &Symbol,
    p: &BnGPresentation,
) -> Result<BnGElement, BnGError> {
    if !g.is_abelian() {
        return Err(BnGError::NotAbelian);
    }
    if s.n() != p.n() {
        return Err(BnGError::DimensionMismatch {
            symbol: s.n(),
            presentation: p.n(),
        });
    }
    let h = s.subgroup_ref(g)?;
    let chars = h.characters()?;
    if h.order() < g.order() {
        return Ok(BnGElement::zero());
    }
    if chars != p.group() {
        return Err(BnGError::GroupMismatch {
            expected: p.group().name(),
            found: chars.name(),
        });
    }
    let deg = s
        .field()
        .alg_closure_degree()
        .ok_or_else(|| BnGError::UndeterminedDegree(s.field().to_string()))?;
    let mut t = s.beta().to_vec();
    t.resize(p.n(), chars.zero());
    Ok(BnGElement::generator(t, deg as i64))
}
