//! Finite abelian groups in invariant-factor form and their characters.
//!
//! A group `ℤ/n_1 × ⋯ × ℤ/n_r` with `n_1 | n_2 | ⋯ | n_r` is identified with
//! its own character group: the character with coordinates `c` pairs with
//! the element `x` to `Σ c_i x_i / n_i mod 1`. Subgroups are handled as
//! lattices `L ⊆ ℤ^r` containing `⊕ n_i ℤ`, kept in Hermite normal form.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::zlinalg::{hermite_normal_form, smith_normal_form_right, IntMatrix};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AbelianError {
    #[error("invariant factors {0:?} must each be >= 2 and divide their successor")]
    InvalidFactors(Vec<u64>),
    #[error("character has {found} coordinates, group has rank {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("coordinate {index} = {value} is outside [0, {modulus})")]
    OutOfRange {
        index: usize,
        value: i64,
        modulus: u64,
    },
    #[error("wedge comparison needs {expected} characters, got {found}")]
    WrongTupleLength { expected: usize, found: usize },
    #[error("characters do not generate the group")]
    NotGenerating,
}

/// `ℤ/n_1 × ⋯ × ℤ/n_r` with `n_i ≥ 2` and `n_i | n_{i+1}`; the empty list is
/// the trivial group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "FactorsRepr", into = "FactorsRepr")]
pub struct AbelianGroup {
    factors: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct FactorsRepr {
    invariant_factors: Vec<u64>,
}

impl TryFrom<FactorsRepr> for AbelianGroup {
    type Error = AbelianError;
    fn try_from(r: FactorsRepr) -> Result<Self, AbelianError> {
        AbelianGroup::new(r.invariant_factors)
    }
}

impl From<AbelianGroup> for FactorsRepr {
    fn from(g: AbelianGroup) -> Self {
        FactorsRepr {
            invariant_factors: g.factors,
        }
    }
}

/// Element of an [`AbelianGroup`] (equivalently, a character of it).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Character(pub Vec<i64>);

impl Character {
    pub fn coords(&self) -> &[i64] {
        &self.0
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl AbelianGroup {
    pub fn new(factors: Vec<u64>) -> Result<Self, AbelianError> {
        let ok = factors.iter().all(|&n| n >= 2)
            && factors.windows(2).all(|w| w[1] % w[0] == 0);
        if ok {
            Ok(AbelianGroup { factors })
        } else {
            Err(AbelianError::InvalidFactors(factors))
        }
    }

    pub fn trivial() -> Self {
        AbelianGroup { factors: vec![] }
    }

    pub fn cyclic(n: u64) -> Self {
        if n <= 1 {
            Self::trivial()
        } else {
            AbelianGroup { factors: vec![n] }
        }
    }

    /// Normalizes a product of cyclic groups of arbitrary orders.
    pub fn from_cyclic_orders(orders: &[u64]) -> Self {
        let rows: Vec<Vec<BigInt>> = orders
            .iter()
            .enumerate()
            .map(|(i, &n)| {
                let mut r = vec![BigInt::zero(); orders.len()];
                r[i] = BigInt::from(n);
                r
            })
            .collect();
        let m = IntMatrix::from_rows(orders.len(), &rows).expect("square");
        let snf = smith_normal_form_right(&m);
        let factors = snf
            .invariant_factors()
            .iter()
            .map(|d| d.to_u64().expect("factor fits u64"))
            .filter(|&d| d > 1)
            .collect();
        AbelianGroup { factors }
    }

    pub fn invariant_factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn order(&self) -> u64 {
        self.factors.iter().product()
    }

    pub fn exponent(&self) -> u64 {
        self.factors.last().copied().unwrap_or(1)
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    /// Short display name such as `Z/2xZ/4`; the trivial group is `1`.
    pub fn name(&self) -> String {
        if self.factors.is_empty() {
            return "1".to_string();
        }
        let parts: Vec<String> = self.factors.iter().map(|n| format!("Z/{n}")).collect();
        parts.join("x")
    }

    pub fn zero(&self) -> Character {
        Character(vec![0; self.rank()])
    }

    /// Reduces arbitrary integer coordinates into canonical range.
    pub fn reduce(&self, raw: &[i64]) -> Result<Character, AbelianError> {
        self.check_len(raw.len())?;
        Ok(Character(
            raw.iter()
                .zip(&self.factors)
                .map(|(&c, &n)| c.rem_euclid(n as i64))
                .collect(),
        ))
    }

    fn check_len(&self, found: usize) -> Result<(), AbelianError> {
        if found == self.rank() {
            Ok(())
        } else {
            Err(AbelianError::LengthMismatch {
                expected: self.rank(),
                found,
            })
        }
    }

    /// Validates shape and range.
    pub fn check(&self, c: &Character) -> Result<(), AbelianError> {
        self.check_len(c.0.len())?;
        for (index, (&value, &modulus)) in c.0.iter().zip(&self.factors).enumerate() {
            if value < 0 || value as u64 >= modulus {
                return Err(AbelianError::OutOfRange {
                    index,
                    value,
                    modulus,
                });
            }
        }
        Ok(())
    }

    pub fn basis_element(&self, i: usize) -> Character {
        let mut v = vec![0; self.rank()];
        v[i] = 1;
        Character(v)
    }

    pub fn add(&self, a: &Character, b: &Character) -> Character {
        self.combine(a, b, 1)
    }

    pub fn sub(&self, a: &Character, b: &Character) -> Character {
        self.combine(a, b, -1)
    }

    fn combine(&self, a: &Character, b: &Character, sign: i64) -> Character {
        Character(
            a.0.iter()
                .zip(&b.0)
                .zip(&self.factors)
                .map(|((&x, &y), &n)| (x + sign * y).rem_euclid(n as i64))
                .collect(),
        )
    }

    pub fn neg(&self, a: &Character) -> Character {
        self.scale(a, -1)
    }

    pub fn scale(&self, a: &Character, k: i64) -> Character {
        Character(
            a.0.iter()
                .zip(&self.factors)
                .map(|(&x, &n)| {
                    let n = n as i128;
                    ((x as i128 * k as i128).rem_euclid(n)) as i64
                })
                .collect(),
        )
    }

    pub fn is_zero(&self, a: &Character) -> bool {
        a.0.iter().all(|&x| x == 0)
    }

    pub fn element_order(&self, a: &Character) -> u64 {
        a.0.iter()
            .zip(&self.factors)
            .map(|(&x, &n)| n / (x as u64).gcd(&n))
            .fold(1, |acc, o| acc.lcm(&o))
    }

    /// Position of `a` in [`AbelianGroup::elements`] (lexicographic order).
    pub fn index_of(&self, a: &Character) -> usize {
        a.0.iter()
            .zip(&self.factors)
            .fold(0usize, |acc, (&x, &n)| acc * n as usize + x as usize)
    }

    pub fn element_at(&self, mut idx: usize) -> Character {
        let mut v = vec![0; self.rank()];
        for (slot, &n) in v.iter_mut().zip(&self.factors).rev() {
            *slot = (idx % n as usize) as i64;
            idx /= n as usize;
        }
        Character(v)
    }

    /// All elements in lexicographic coordinate order.
    pub fn elements(&self) -> impl Iterator<Item = Character> + '_ {
        (0..self.order() as usize).map(move |i| self.element_at(i))
    }

    /// `Σ c_i x_i / n_i` scaled by the exponent `e`, as a residue mod `e`.
    pub fn pairing(&self, chi: &Character, x: &Character) -> u64 {
        let e = self.exponent() as i128;
        let mut acc: i128 = 0;
        for ((&c, &xi), &n) in chi.0.iter().zip(&x.0).zip(&self.factors) {
            acc += c as i128 * xi as i128 * (e / n as i128);
        }
        acc.rem_euclid(e) as u64
    }

    fn relation_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rank())
            .map(|i| {
                let mut r = vec![BigInt::zero(); self.rank()];
                r[i] = BigInt::from(self.factors[i]);
                r
            })
            .collect()
    }

    /// Subgroup generated by `gens`.
    pub fn subgroup(&self, gens: &[Character]) -> Result<SubgroupOfAbelian, AbelianError> {
        for g in gens {
            self.check(g)?;
        }
        let mut rows = self.relation_rows();
        rows.extend(
            gens.iter()
                .map(|g| g.0.iter().map(|&x| BigInt::from(x)).collect()),
        );
        Ok(SubgroupOfAbelian::from_lattice_rows(self.clone(), gens.to_vec(), rows))
    }

    pub fn generates(&self, beta: &[Character]) -> Result<bool, AbelianError> {
        Ok(self.subgroup(beta)?.order() == self.order())
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// A subgroup of an [`AbelianGroup`], stored as the Hermite basis of its
/// preimage lattice in `ℤ^r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupOfAbelian {
    ambient: AbelianGroup,
    generators: Vec<Character>,
    lattice: IntMatrix,
}

impl SubgroupOfAbelian {
    fn from_lattice_rows(
        ambient: AbelianGroup,
        generators: Vec<Character>,
        rows: Vec<Vec<BigInt>>,
    ) -> Self {
        let m = IntMatrix::from_rows(ambient.rank(), &rows).expect("rows match rank");
        let lattice = hermite_normal_form(&m);
        debug_assert_eq!(lattice.rows(), ambient.rank());
        SubgroupOfAbelian {
            ambient,
            generators,
            lattice,
        }
    }

    pub fn ambient(&self) -> &AbelianGroup {
        &self.ambient
    }

    pub fn generators(&self) -> &[Character] {
        &self.generators
    }

    /// Canonical basis: the Hermite normal form of the preimage lattice.
    pub fn canonical_basis(&self) -> &IntMatrix {
        &self.lattice
    }

    pub fn order(&self) -> u64 {
        let diag: BigInt = (0..self.lattice.rows())
            .map(|i| self.lattice[(i, i)].clone())
            .product();
        (BigInt::from(self.ambient.order()) / diag)
            .to_u64()
            .expect("order fits u64")
    }

    pub fn index(&self) -> u64 {
        self.ambient.order() / self.order()
    }

    pub fn contains(&self, x: &Character) -> bool {
        let mut v: Vec<BigInt> = x.0.iter().map(|&c| BigInt::from(c)).collect();
        for i in 0..self.lattice.rows() {
            let p = &self.lattice[(i, i)];
            if !v[i].is_multiple_of(p) {
                return false;
            }
            let q = v[i].div_floor(p);
            for (c, slot) in v.iter_mut().enumerate().skip(i) {
                *slot -= &q * &self.lattice[(i, c)];
            }
        }
        v.iter().all(Zero::is_zero)
    }

    /// Isomorphism type in invariant-factor form.
    pub fn structure(&self) -> AbelianGroup {
        // N = C·B with N = diag(n_i), B the lattice basis; L/N ≅ coker(C).
        let r = self.ambient.rank();
        let mut c_rows = Vec::with_capacity(r);
        for i in 0..r {
            let mut target = vec![BigInt::zero(); r];
            target[i] = BigInt::from(self.ambient.factors[i]);
            let mut coeffs = vec![BigInt::zero(); r];
            for k in 0..r {
                let mut acc = target[k].clone();
                for (j, cj) in coeffs.iter().enumerate().take(k) {
                    acc -= cj * &self.lattice[(j, k)];
                }
                let (q, rem) = acc.div_rem(&self.lattice[(k, k)]);
                debug_assert!(rem.is_zero());
                coeffs[k] = q;
            }
            c_rows.push(coeffs);
        }
        let c = IntMatrix::from_rows(r, &c_rows).expect("square");
        let factors: Vec<u64> = smith_normal_form_right(&c)
            .invariant_factors()
            .iter()
            .filter(|d| !d.is_one())
            .map(|d| d.abs().to_u64().expect("factor fits"))
            .collect();
        AbelianGroup { factors }
    }

    /// Enumerates the members; intended for small groups.
    pub fn elements(&self) -> Vec<Character> {
        self.ambient.elements().filter(|x| self.contains(x)).collect()
    }
}

/// Surjection `A → A/⟨S⟩` onto a group in invariant-factor form.
#[derive(Clone, Debug)]
pub struct Quotient {
    source: AbelianGroup,
    target: AbelianGroup,
    // Columns of the SNF column transform that land in nontrivial factors.
    map: Vec<Vec<BigInt>>,
}

impl Quotient {
    pub fn source(&self) -> &AbelianGroup {
        &self.source
    }

    pub fn target(&self) -> &AbelianGroup {
        &self.target
    }

    pub fn project(&self, x: &Character) -> Result<Character, AbelianError> {
        self.source.check_len(x.0.len())?;
        let coords = self
            .map
            .iter()
            .zip(self.target.invariant_factors())
            .map(|(col, &d)| {
                let acc: BigInt = col
                    .iter()
                    .zip(&x.0)
                    .map(|(m, &xi)| m * BigInt::from(xi))
                    .sum();
                acc.mod_floor(&BigInt::from(d))
                    .to_i64()
                    .expect("residue fits")
            })
            .collect();
        Ok(Character(coords))
    }
}

/// `A/⟨S⟩` together with the projection.
pub fn quotient_with_projection(
    a: &AbelianGroup,
    s: &[Character],
) -> Result<Quotient, AbelianError> {
    for x in s {
        a.check_len(x.0.len())?;
    }
    let mut rows = a.relation_rows();
    rows.extend(s.iter().map(|g| g.0.iter().map(|&x| BigInt::from(x)).collect()));
    let m = IntMatrix::from_rows(a.rank(), &rows).expect("rows match rank");
    let snf = smith_normal_form_right(&m);
    let diag = snf.invariant_factors();
    let mut factors = Vec::new();
    let mut map = Vec::new();
    for (i, d) in diag.iter().enumerate() {
        if d.is_one() {
            continue;
        }
        factors.push(d.to_u64().expect("factor fits u64"));
        map.push((0..a.rank()).map(|r| snf.right[(r, i)].clone()).collect());
    }
    Ok(Quotient {
        source: a.clone(),
        target: AbelianGroup { factors },
        map,
    })
}

/// `⋂ ker(χ)` over `chars ⊆ H^∨`.
pub fn kernel_of_characters(
    h: &AbelianGroup,
    chars: &[Character],
) -> Result<SubgroupOfAbelian, AbelianError> {
    for c in chars {
        h.check(c)?;
    }
    let r = h.rank();
    let k = chars.len();
    let e = h.exponent() as i64;
    // (x, y) with W·x − e·y = 0, where W[j][i] = c_{j,i}·e/n_i.
    let mut rows = Vec::with_capacity(k);
    for (j, c) in chars.iter().enumerate() {
        let mut row: Vec<BigInt> = c
            .0
            .iter()
            .zip(&h.factors)
            .map(|(&ci, &n)| BigInt::from(ci * (e / n as i64)))
            .collect();
        row.extend((0..k).map(|t| if t == j { BigInt::from(-e) } else { BigInt::zero() }));
        rows.push(row);
    }
    let mut lattice_rows = h.relation_rows();
    if k == 0 {
        lattice_rows.extend((0..r).map(|i| {
            let mut v = vec![BigInt::zero(); r];
            v[i] = BigInt::one();
            v
        }));
    } else {
        let m = IntMatrix::from_rows(r + k, &rows).expect("shape");
        let snf = smith_normal_form_right(&m);
        let rank = snf.invariant_factors().len();
        for col in rank..r + k {
            lattice_rows.push((0..r).map(|i| snf.right[(i, col)].clone()).collect());
        }
    }
    let generators = {
        let tmp = SubgroupOfAbelian::from_lattice_rows(h.clone(), vec![], lattice_rows.clone());
        (0..tmp.lattice.rows())
            .map(|i| {
                let raw: Vec<i64> = (0..r)
                    .map(|c| {
                        tmp.lattice[(i, c)]
                            .mod_floor(&BigInt::from(h.factors[c]))
                            .to_i64()
                            .expect("fits")
                    })
                    .collect();
                Character(raw)
            })
            .filter(|g| !h.is_zero(g))
            .collect()
    };
    Ok(SubgroupOfAbelian::from_lattice_rows(
        h.clone(),
        generators,
        lattice_rows,
    ))
}

/// `χ_1∧⋯∧χ_d = ±η_1∧⋯∧η_d` in `⋀^d(A) ≅ ℤ/n_1`, for `d = rank(A)`.
pub fn wedge_equivalent(
    a: &AbelianGroup,
    beta: &[Character],
    gamma: &[Character],
) -> Result<bool, AbelianError> {
    let d = a.rank();
    for t in [beta, gamma] {
        if t.len() != d {
            return Err(AbelianError::WrongTupleLength {
                expected: d,
                found: t.len(),
            });
        }
        if !a.generates(t)? {
            return Err(AbelianError::NotGenerating);
        }
    }
    if d == 0 {
        return Ok(true);
    }
    let n1 = BigInt::from(a.factors[0]);
    let det = |t: &[Character]| -> BigInt {
        let rows: Vec<Vec<i64>> = t.iter().map(|c| c.0.clone()).collect();
        IntMatrix::from_rows(d, &rows)
            .expect("square")
            .determinant()
            .expect("square")
            .mod_floor(&n1)
    };
    let x = det(beta);
    let y = det(gamma);
    Ok(x == y || (&x + &y).mod_floor(&n1).is_zero())
}
