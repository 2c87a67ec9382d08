//! Finite groups given by a Cayley table, with the subgroup, normalizer and
//! conjugation machinery needed for symbols.

use std::collections::{HashMap, HashSet, VecDeque};

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::abelian::{AbelianError, AbelianGroup, Character};
use crate::zlinalg::IntMatrix;

/// Default bound on the size of a permutation-group closure.
pub const DEFAULT_MAX_ORDER: usize = 100_000;
/// Largest order for which a Cayley table is materialized.
pub const MAX_TABLE_ORDER: usize = 4096;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("generator {index} is not a permutation of 0..{degree}")]
    NotBijection { index: usize, degree: usize },
    #[error("group order exceeds the bound {bound}")]
    TooLarge { bound: usize },
    #[error("invalid Cayley table: {0}")]
    InvalidTable(String),
    #[error("element {0} is out of range")]
    ElementOutOfRange(usize),
    #[error("element set is not a subgroup")]
    NotSubgroup,
    #[error("subgroup is not abelian")]
    NotAbelian,
    #[error("element {0} does not normalize the subgroup")]
    NotNormalizing(usize),
    #[error(transparent)]
    Abelian(#[from] AbelianError),
}

/// A finite group on element indices `0..order`.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u32>,
    identity: usize,
    inverses: Vec<usize>,
    exponent: u64,
    // Shortest generator word of each element, for groups built by closure.
    words: Option<Vec<Vec<usize>>>,
}

impl FiniteGroup {
    /// Validates `cayley` (closure, identity, inverses, associativity).
    pub fn from_cayley(cayley: &[Vec<usize>]) -> Result<Self, GroupError> {
        let n = cayley.len();
        if n == 0 {
            return Err(GroupError::InvalidTable("empty table".into()));
        }
        if n > MAX_TABLE_ORDER {
            return Err(GroupError::TooLarge {
                bound: MAX_TABLE_ORDER,
            });
        }
        let mut table = Vec::with_capacity(n * n);
        for (r, row) in cayley.iter().enumerate() {
            if row.len() != n {
                return Err(GroupError::InvalidTable(format!("row {r} has length {}", row.len())));
            }
            for &x in row {
                if x >= n {
                    return Err(GroupError::InvalidTable(format!("entry {x} out of range")));
                }
                table.push(x as u32);
            }
        }
        let m = |a: usize, b: usize| table[a * n + b] as usize;
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| m(e, x) == x && m(x, e) == x))
            .ok_or_else(|| GroupError::InvalidTable("no identity".into()))?;
        let inverses = (0..n)
            .map(|x| {
                (0..n)
                    .find(|&y| m(x, y) == identity && m(y, x) == identity)
                    .ok_or_else(|| GroupError::InvalidTable(format!("element {x} has no inverse")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        for a in 0..n {
            for b in 0..n {
                let ab = m(a, b);
                for c in 0..n {
                    if m(ab, c) != m(a, m(b, c)) {
                        return Err(GroupError::InvalidTable(format!(
                            "not associative at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        Ok(Self::assemble(n, table, identity, inverses, None))
    }

    fn assemble(
        order: usize,
        table: Vec<u32>,
        identity: usize,
        inverses: Vec<usize>,
        words: Option<Vec<Vec<usize>>>,
    ) -> Self {
        let mut g = FiniteGroup {
            order,
            table,
            identity,
            inverses,
            exponent: 1,
            words,
        };
        // lcm of exponents of the abelian subgroups = lcm of element orders
        g.exponent = (0..order)
            .map(|x| g.element_order(x) as u64)
            .fold(1, |acc, o| acc.lcm(&o));
        g
    }

    /// Closure of permutations under composition, indexed breadth-first from
    /// the identity with generators tried in the given order.
    ///
    /// The product `p·q` is the permutation `i ↦ p[q[i]]`.
    pub fn from_generators(degree: usize, perms: &[Vec<usize>]) -> Result<Self, GroupError> {
        Self::from_generators_bounded(degree, perms, DEFAULT_MAX_ORDER)
    }

    pub fn from_generators_bounded(
        degree: usize,
        perms: &[Vec<usize>],
        max_order: usize,
    ) -> Result<Self, GroupError> {
        for (index, p) in perms.iter().enumerate() {
            let mut seen = vec![false; degree];
            let ok = p.len() == degree
                && p.iter().all(|&x| x < degree && !std::mem::replace(&mut seen[x], true));
            if !ok {
                return Err(GroupError::NotBijection { index, degree });
            }
        }
        let compose = |p: &[usize], q: &[usize]| -> Vec<usize> { q.iter().map(|&i| p[i]).collect() };
        let id: Vec<usize> = (0..degree).collect();
        let mut elements = vec![id.clone()];
        let mut words: Vec<Vec<usize>> = vec![vec![]];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(id, 0)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(cur) = queue.pop_front() {
            for (gi, gen) in perms.iter().enumerate() {
                let next = compose(&elements[cur], gen);
                if index.contains_key(&next) {
                    continue;
                }
                if elements.len() >= max_order {
                    return Err(GroupError::TooLarge { bound: max_order });
                }
                index.insert(next.clone(), elements.len());
                let mut w = words[cur].clone();
                w.push(gi);
                words.push(w);
                queue.push_back(elements.len());
                elements.push(next);
            }
        }
        let n = elements.len();
        if n > MAX_TABLE_ORDER {
            return Err(GroupError::TooLarge {
                bound: MAX_TABLE_ORDER,
            });
        }
        let mut table = Vec::with_capacity(n * n);
        for a in &elements {
            for b in &elements {
                table.push(index[&compose(a, b)] as u32);
            }
        }
        let inverses = elements
            .iter()
            .map(|p| {
                let mut inv = vec![0; degree];
                for (i, &x) in p.iter().enumerate() {
                    inv[x] = i;
                }
                index[&inv]
            })
            .collect();
        Ok(Self::assemble(n, table, 0, inverses, Some(words)))
    }

    /// The abelian group `ℤ/n_1 × ⋯ × ℤ/n_r`, elements indexed as in
    /// [`AbelianGroup::elements`].
    pub fn from_abelian(a: &AbelianGroup) -> Result<Self, GroupError> {
        let n = a.order() as usize;
        if n > MAX_TABLE_ORDER {
            return Err(GroupError::TooLarge {
                bound: MAX_TABLE_ORDER,
            });
        }
        let elems: Vec<Character> = a.elements().collect();
        let mut table = Vec::with_capacity(n * n);
        for x in &elems {
            for y in &elems {
                table.push(a.index_of(&a.add(x, y)) as u32);
            }
        }
        let inverses = elems.iter().map(|x| a.index_of(&a.neg(x))).collect();
        Ok(Self::assemble(n, table, 0, inverses, None))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    /// `e`: lcm of the exponents of all abelian subgroups.
    pub fn exponent_lcm(&self) -> u64 {
        self.exponent
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        (0..k).fold(self.identity, |acc, _| self.mul(acc, a))
    }

    /// `g·h·g⁻¹`
    pub fn conjugate(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(g, h), self.inv(g))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Generator word of an element, if the group was built by closure.
    pub fn word(&self, x: usize) -> Option<&[usize]> {
        self.words.as_ref().map(|w| w[x].as_slice())
    }

    /// Cayley table as nested rows.
    pub fn cayley(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|a| (0..self.order).map(|b| self.mul(a, b)).collect())
            .collect()
    }

    fn check_element(&self, x: usize) -> Result<(), GroupError> {
        if x < self.order {
            Ok(())
        } else {
            Err(GroupError::ElementOutOfRange(x))
        }
    }

    /// Sorted `g·S·g⁻¹`.
    pub fn conjugate_set(&self, g: usize, set: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = set.iter().map(|&h| self.conjugate(g, h)).collect();
        out.sort_unstable();
        out
    }

    /// The lexicographically least conjugate of `set` and the least element
    /// conjugating `set` onto it.
    pub fn class_representative(&self, set: &[usize]) -> (Vec<usize>, usize) {
        let mut best = (self.conjugate_set(0, set), 0);
        for g in 1..self.order {
            let c = self.conjugate_set(g, set);
            if c < best.0 {
                best = (c, g);
            }
        }
        best
    }

    /// Builds a [`SubgroupRef`] after checking that `elements` is a subgroup.
    pub fn subgroup(&self, elements: &[usize]) -> Result<SubgroupRef, GroupError> {
        let mut set: Vec<usize> = elements.to_vec();
        set.sort_unstable();
        set.dedup();
        for &x in &set {
            self.check_element(x)?;
        }
        let members: HashSet<usize> = set.iter().copied().collect();
        if !members.contains(&self.identity)
            || set
                .iter()
                .any(|&a| set.iter().any(|&b| !members.contains(&self.mul(a, b))))
        {
            return Err(GroupError::NotSubgroup);
        }
        let normalizer = (0..self.order)
            .filter(|&g| set.iter().all(|&h| members.contains(&self.conjugate(g, h))))
            .collect();
        let abelian = set
            .iter()
            .all(|&a| set.iter().all(|&b| self.mul(a, b) == self.mul(b, a)));
        let structure = abelian.then(|| AbelianStructure::compute(self, &set));
        Ok(SubgroupRef {
            elements: set,
            normalizer,
            structure,
        })
    }

    /// Subgroup generated by `gens`.
    pub fn generated_subgroup(&self, gens: &[usize]) -> Result<SubgroupRef, GroupError> {
        for &g in gens {
            self.check_element(g)?;
        }
        let mut seen: HashSet<usize> = HashSet::from([self.identity]);
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if seen.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        let elems: Vec<usize> = seen.into_iter().collect();
        self.subgroup(&elems)
    }

    /// Dual automorphism `χ ↦ χ∘conj_{g⁻¹}` of `H^∨` for `g ∈ N_G(H)`.
    pub fn character_action(
        &self,
        g: usize,
        h: &SubgroupRef,
    ) -> Result<CharacterAutomorphism, GroupError> {
        self.check_element(g)?;
        if !h.normalizes(g) {
            return Err(GroupError::NotNormalizing(g));
        }
        let st = h.structure()?;
        let images = (0..st.group.rank())
            .map(|i| {
                let chi = st.group.basis_element(i);
                self.transport_character(h, h, g, &chi)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(CharacterAutomorphism {
            group: st.group.clone(),
            images,
        })
    }

    /// Moves `chi ∈ from^∨` to `(g·from·g⁻¹)^∨ = to^∨` via
    /// `chi'(h) = chi(g⁻¹·h·g)`.
    pub fn transport_character(
        &self,
        from: &SubgroupRef,
        to: &SubgroupRef,
        g: usize,
        chi: &Character,
    ) -> Result<Character, GroupError> {
        let src = from.structure()?;
        let dst = to.structure()?;
        let e = self.exponent;
        let ginv = self.inv(g);
        dst.character_from_values(e, |h| src.evaluate(e, chi, self.conjugate(ginv, h)))
    }

    /// Restriction of `chi ∈ from^∨` to a subgroup `to ⊆ from`.
    pub fn restrict_character(
        &self,
        from: &SubgroupRef,
        to: &SubgroupRef,
        chi: &Character,
    ) -> Result<Character, GroupError> {
        let src = from.structure()?;
        let dst = to.structure()?;
        let e = self.exponent;
        dst.character_from_values(e, |h| src.evaluate(e, chi, h))
    }

    /// Every abelian subgroup, found by adjoining commuting elements one at a
    /// time starting from the trivial subgroup.
    pub fn abelian_subgroups(&self) -> Vec<Vec<usize>> {
        let start = vec![self.identity];
        let mut seen: HashSet<Vec<usize>> = HashSet::from([start.clone()]);
        let mut queue = VecDeque::from([start]);
        let mut out = Vec::new();
        while let Some(s) = queue.pop_front() {
            let members: HashSet<usize> = s.iter().copied().collect();
            for g in 0..self.order {
                if members.contains(&g) || s.iter().any(|&x| self.mul(x, g) != self.mul(g, x)) {
                    continue;
                }
                let mut next: HashSet<usize> = members.clone();
                let mut power = g;
                while !members.contains(&power) {
                    for &x in &s {
                        next.insert(self.mul(x, power));
                    }
                    power = self.mul(power, g);
                }
                let mut next: Vec<usize> = next.into_iter().collect();
                next.sort_unstable();
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
            out.push(s);
        }
        out.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
        out
    }
}

/// One conjugacy class of abelian subgroups.
#[derive(Clone, Debug)]
pub struct SubgroupClass {
    pub representative: SubgroupRef,
    pub size: usize,
}

/// Representatives of the conjugacy classes of abelian subgroups, ordered by
/// subgroup order and then by element set.
pub fn abelian_subgroup_classes(g: &FiniteGroup) -> Vec<SubgroupClass> {
    let mut classes: HashMap<Vec<usize>, usize> = HashMap::new();
    for s in g.abelian_subgroups() {
        let (rep, _) = g.class_representative(&s);
        *classes.entry(rep).or_default() += 1;
    }
    let mut reps: Vec<(Vec<usize>, usize)> = classes.into_iter().collect();
    reps.sort_by(|a, b| (a.0.len(), &a.0).cmp(&(b.0.len(), &b.0)));
    reps.into_iter()
        .map(|(rep, size)| SubgroupClass {
            representative: g.subgroup(&rep).expect("enumerated subgroup"),
            size,
        })
        .collect()
}

/// A subgroup with its normalizer and, when abelian, an identification with
/// a group in invariant-factor form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupRef {
    elements: Vec<usize>,
    normalizer: Vec<usize>,
    structure: Option<AbelianStructure>,
}

impl SubgroupRef {
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn normalizer(&self) -> &[usize] {
        &self.normalizer
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn normalizes(&self, g: usize) -> bool {
        self.normalizer.binary_search(&g).is_ok()
    }

    pub fn is_abelian(&self) -> bool {
        self.structure.is_some()
    }

    pub fn structure(&self) -> Result<&AbelianStructure, GroupError> {
        self.structure.as_ref().ok_or(GroupError::NotAbelian)
    }

    /// The character group `H^∨`, identified with `H` via the stored basis.
    pub fn characters(&self) -> Result<&AbelianGroup, GroupError> {
        Ok(&self.structure()?.group)
    }
}

/// Isomorphism `ℤ/n_1 × ⋯ × ℤ/n_r → H` sending the i-th unit vector to
/// `basis[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianStructure {
    group: AbelianGroup,
    basis: Vec<usize>,
    coords: HashMap<usize, Character>,
}

impl AbelianStructure {
    // Splits off, at each step, the least-index element whose order equals
    // the largest order attained in the quotient by the span so far.
    fn compute(g: &FiniteGroup, set: &[usize]) -> Self {
        let mut span: Vec<(usize, Vec<i64>)> = vec![(g.identity, vec![])];
        let mut in_span: HashSet<usize> = HashSet::from([g.identity]);
        let mut basis: Vec<usize> = Vec::new();
        let mut orders: Vec<u64> = Vec::new();
        while span.len() < set.len() {
            let coset_order = |h: usize| -> usize {
                let mut x = h;
                let mut k = 1;
                while !in_span.contains(&x) {
                    x = g.mul(x, h);
                    k += 1;
                }
                k
            };
            let m = set.iter().map(|&h| coset_order(h)).max().expect("nonempty");
            let b = *set
                .iter()
                .find(|&&h| coset_order(h) == m && g.element_order(h) == m)
                .expect("a coset of maximal order contains an element of that order");
            let mut next = Vec::with_capacity(span.len() * m);
            let mut power = g.identity;
            for k in 0..m {
                for (s, c) in &span {
                    let mut c = c.clone();
                    c.push(k as i64);
                    next.push((g.mul(*s, power), c));
                }
                power = g.mul(power, b);
            }
            in_span = next.iter().map(|(x, _)| *x).collect();
            span = next;
            basis.push(b);
            orders.push(m as u64);
        }
        // Largest order first above; flip to n_1 | n_2 | ⋯.
        basis.reverse();
        orders.reverse();
        let group = AbelianGroup::new(orders).expect("greedy splitting yields a divisor chain");
        let coords = span
            .into_iter()
            .map(|(x, mut c)| {
                c.reverse();
                (x, Character(c))
            })
            .collect();
        AbelianStructure {
            group,
            basis,
            coords,
        }
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn basis(&self) -> &[usize] {
        &self.basis
    }

    /// Coordinates of a member of `H` with respect to the basis.
    pub fn coordinates(&self, x: usize) -> Option<&Character> {
        self.coords.get(&x)
    }

    pub fn element(&self, coords: &Character) -> Option<usize> {
        self.coords
            .iter()
            .find(|(_, c)| *c == coords)
            .map(|(&x, _)| x)
    }

    /// `chi(x)` as a residue modulo `e`, a multiple of the exponent of `H`.
    pub fn evaluate(&self, e: u64, chi: &Character, x: usize) -> u64 {
        let xc = &self.coords[&x];
        let own = self.group.exponent();
        self.group.pairing(chi, xc) * (e / own)
    }

    /// Character with the given values (residues mod `e`) on the basis.
    pub fn character_from_values(
        &self,
        e: u64,
        mut value: impl FnMut(usize) -> u64,
    ) -> Result<Character, GroupError> {
        let raw = self
            .basis
            .iter()
            .zip(self.group.invariant_factors())
            .map(|(&b, &n)| {
                let step = e / n;
                let v = value(b) % e;
                debug_assert_eq!(v % step, 0, "value must have order dividing n_i");
                (v / step) as i64
            })
            .collect::<Vec<_>>();
        Ok(self.group.reduce(&raw)?)
    }

    /// Characters dual to an arbitrary basis `gens` of `H`: the k-th one is
    /// `1/ord(gens[k])` on `gens[k]` and trivial on the others. Returns `None`
    /// if `gens` is not a basis of a direct decomposition.
    pub fn dual_characters(&self, g: &FiniteGroup, gens: &[usize]) -> Option<Vec<Character>> {
        let orders: Vec<usize> = gens.iter().map(|&x| g.element_order(x)).collect();
        if orders.iter().product::<usize>() != self.coords.len() {
            return None;
        }
        // Express each element in the `gens` coordinates by enumeration.
        let mut expr: HashMap<usize, Vec<usize>> = HashMap::new();
        let mut stack: Vec<(usize, Vec<usize>)> = vec![(g.identity, vec![])];
        for (&x, &o) in gens.iter().zip(&orders) {
            let mut next = Vec::new();
            for (s, c) in &stack {
                let mut p = *s;
                for k in 0..o {
                    let mut c = c.clone();
                    c.push(k);
                    next.push((p, c));
                    p = g.mul(p, x);
                }
            }
            stack = next;
        }
        for (x, c) in stack {
            if expr.insert(x, c).is_some() {
                return None;
            }
        }
        let e = g.exponent_lcm();
        gens.iter()
            .enumerate()
            .map(|(k, _)| {
                self.character_from_values(e, |b| {
                    let c = expr[&b][k] as u64;
                    c * (e / orders[k] as u64)
                })
                .ok()
            })
            .collect()
    }
}

/// Automorphism of `H^∨` given by the images of its basis characters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterAutomorphism {
    pub group: AbelianGroup,
    pub images: Vec<Character>,
}

impl CharacterAutomorphism {
    pub fn apply(&self, chi: &Character) -> Character {
        chi.0
            .iter()
            .zip(&self.images)
            .fold(self.group.zero(), |acc, (&c, img)| {
                self.group.add(&acc, &self.group.scale(img, c))
            })
    }

    /// Matrix whose i-th column holds the image of the i-th basis character.
    pub fn matrix(&self) -> IntMatrix {
        let r = self.group.rank();
        let rows: Vec<Vec<i64>> = (0..r)
            .map(|i| self.images.iter().map(|img| img.0[i]).collect())
            .collect();
        IntMatrix::from_rows(r, &rows).expect("square")
    }

    pub fn is_identity(&self) -> bool {
        (0..self.group.rank()).all(|i| self.images[i] == self.group.basis_element(i))
    }
}

/// Group description accepted on input.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum GroupSpec {
    Permutation {
        degree: usize,
        generators: Vec<Vec<usize>>,
    },
    Table {
        cayley: Vec<Vec<usize>>,
    },
    Abelian {
        invariant_factors: Vec<u64>,
    },
}

impl GroupSpec {
    pub fn build(&self) -> Result<FiniteGroup, GroupError> {
        match self {
            GroupSpec::Permutation { degree, generators } => {
                FiniteGroup::from_generators(*degree, generators)
            }
            GroupSpec::Table { cayley } => FiniteGroup::from_cayley(cayley),
            GroupSpec::Abelian { invariant_factors } => {
                FiniteGroup::from_abelian(&AbelianGroup::new(invariant_factors.clone())?)
            }
        }
    }
}
