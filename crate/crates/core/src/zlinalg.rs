//! Exact integer matrices: Smith and Hermite normal forms, cokernels and
//! row-space comparison.
//!
//! All arithmetic is over arbitrary-precision integers. Matrices are stored
//! dense in row-major order; the relation matrices this crate produces are
//! small enough (a few hundred rows) that sparsity does not pay off.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatrixError {
    #[error("column count mismatch: {left} vs {right}")]
    ColumnMismatch { left: usize, right: usize },
    #[error("ragged matrix: row {row} has {found} entries, expected {expected}")]
    Ragged {
        row: usize,
        found: usize,
        expected: usize,
    },
    #[error("invalid integer {text:?} at line {line}")]
    Parse { line: usize, text: String },
}

/// Dense integer matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from rows; all rows must share the column count
    /// `cols` (needed to describe matrices with zero rows).
    pub fn from_rows<T: Into<BigInt> + Clone>(
        cols: usize,
        rows: &[Vec<T>],
    ) -> Result<Self, MatrixError> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(MatrixError::Ragged {
                    row: r,
                    found: row.len(),
                    expected: cols,
                });
            }
            data.extend(row.iter().cloned().map(Into::into));
        }
        Ok(IntMatrix {
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Convenience constructor for literal matrices; panics on ragged input.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let owned: Vec<Vec<i64>> = rows.iter().map(|r| r.to_vec()).collect();
        Self::from_rows(cols, &owned).expect("ragged literal matrix")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix, MatrixError> {
        if self.cols != other.rows {
            return Err(MatrixError::ColumnMismatch {
                left: self.cols,
                right: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Row vector times matrix.
    pub fn left_mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.rows, "vector length must equal row count");
        let mut out = vec![BigInt::zero(); self.cols];
        for (r, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (o, m) in out.iter_mut().zip(self.row(r)) {
                if !m.is_zero() {
                    *o += x * m;
                }
            }
        }
        out
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Option<BigInt> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(BigInt::one());
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                match (k + 1..n).find(|&r| !a[(r, k)].is_zero()) {
                    Some(r) => {
                        a.swap_rows(k, r);
                        sign = -sign;
                    }
                    None => return Some(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)]) / &prev;
                    a[(i, j)] = v;
                }
            }
            prev = a[(k, k)].clone();
        }
        Some(sign * a[(n - 1, n - 1)].clone())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// row[dst] += factor * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for c in 0..self.cols {
            let s = &self.data[src * self.cols + c];
            if !s.is_zero() {
                let add = s * factor;
                self.data[dst * self.cols + c] += add;
            }
        }
    }

    /// col[dst] += factor * col[src]
    fn add_col_multiple(&mut self, dst: usize, src: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for r in 0..self.rows {
            let s = &self.data[r * self.cols + src];
            if !s.is_zero() {
                let add = s * factor;
                self.data[r * self.cols + dst] += add;
            }
        }
    }

    fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let v = std::mem::take(&mut self.data[r * self.cols + c]);
            self.data[r * self.cols + c] = -v;
        }
    }

    /// Serializes as CSV: one line per row, comma-separated decimal integers.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for r in 0..self.rows {
            let line: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }

    /// Parses the CSV form written by [`IntMatrix::to_csv`]. Blank lines are
    /// skipped; the empty text yields a 0×0 matrix.
    pub fn from_csv(text: &str) -> Result<Self, MatrixError> {
        let mut rows: Vec<Vec<BigInt>> = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let row = line
                .split(',')
                .map(|t| {
                    BigInt::from_str(t.trim()).map_err(|_| MatrixError::Parse {
                        line: lineno + 1,
                        text: t.to_string(),
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            rows.push(row);
        }
        let cols = rows.first().map_or(0, Vec::len);
        Self::from_rows(cols, &rows)
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (r, c): (usize, usize)) -> &BigInt {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut BigInt {
        &mut self.data[r * self.cols + c]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMatrix({}x{})", self.rows, self.cols)?;
        f.debug_list().entries(self.to_rows()).finish()
    }
}

// JSON form is a plain array of arrays. A matrix with zero rows loses its
// column count in this encoding and round-trips as 0×0.
impl Serialize for IntMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<Decimal>> = (0..self.rows)
            .map(|r| self.row(r).iter().cloned().map(Decimal).collect())
            .collect();
        rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let rows: Vec<Vec<Decimal>> = Vec::deserialize(d)?;
        let rows: Vec<Vec<BigInt>> = rows
            .into_iter()
            .map(|r| r.into_iter().map(|x| x.0).collect())
            .collect();
        let cols = rows.first().map_or(0, Vec::len);
        IntMatrix::from_rows(cols, &rows).map_err(serde::de::Error::custom)
    }
}

/// Serde adapter writing a [`BigInt`] as a JSON number when it fits in
/// 128 bits and as a decimal string otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decimal(pub BigInt);

impl Serialize for Decimal {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use num_traits::ToPrimitive;
        if let Some(v) = self.0.to_i64() {
            s.serialize_i64(v)
        } else if let Some(v) = self.0.to_i128() {
            s.serialize_i128(v)
        } else {
            s.serialize_str(&self.0.to_string())
        }
    }
}

impl<'de> Deserialize<'de> for Decimal {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl serde::de::Visitor<'_> for V {
            type Value = Decimal;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an integer or a decimal string")
            }
            fn visit_i64<E: serde::de::Error>(self, v: i64) -> Result<Decimal, E> {
                Ok(Decimal(v.into()))
            }
            fn visit_u64<E: serde::de::Error>(self, v: u64) -> Result<Decimal, E> {
                Ok(Decimal(v.into()))
            }
            fn visit_i128<E: serde::de::Error>(self, v: i128) -> Result<Decimal, E> {
                Ok(Decimal(v.into()))
            }
            fn visit_str<E: serde::de::Error>(self, v: &str) -> Result<Decimal, E> {
                BigInt::from_str(v)
                    .map(Decimal)
                    .map_err(|_| E::custom(format!("invalid integer {v:?}")))
            }
        }
        d.deserialize_any(V)
    }
}

pub(crate) mod decimal_vec {
    use super::Decimal;
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        let w: Vec<Decimal> = v.iter().cloned().map(Decimal).collect();
        w.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        let w: Vec<Decimal> = Vec::deserialize(d)?;
        Ok(w.into_iter().map(|x| x.0).collect())
    }
}

/// Result of [`smith_normal_form`]: `diagonal = left · M · right`.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub diagonal: IntMatrix,
    pub left: IntMatrix,
    pub right: IntMatrix,
}

impl SmithForm {
    /// Nonzero diagonal entries in divisibility order.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        diagonal_entries(&self.diagonal)
    }
}

/// Column transform and diagonal only; the left transform is not tracked.
#[derive(Clone, Debug)]
pub struct ColumnSmithForm {
    pub diagonal: IntMatrix,
    pub right: IntMatrix,
}

impl ColumnSmithForm {
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        diagonal_entries(&self.diagonal)
    }
}

fn diagonal_entries(d: &IntMatrix) -> Vec<BigInt> {
    (0..d.rows().min(d.cols()))
        .map(|i| d[(i, i)].clone())
        .take_while(|x| !x.is_zero())
        .collect()
}

/// Smith normal form `S = U·M·V` with `U`, `V` unimodular.
pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let mut u = Some(IntMatrix::identity(m.rows()));
    let (diagonal, right) = snf_core(m, &mut u);
    SmithForm {
        diagonal,
        left: u.expect("left transform tracked"),
        right,
    }
}

/// Smith normal form `S = U·M·V` returning only `S` and `V`.
pub fn smith_normal_form_right(m: &IntMatrix) -> ColumnSmithForm {
    let (diagonal, right) = snf_core(m, &mut None);
    ColumnSmithForm { diagonal, right }
}

fn snf_core(m: &IntMatrix, u: &mut Option<IntMatrix>) -> (IntMatrix, IntMatrix) {
    let mut a = m.clone();
    let mut v = IntMatrix::identity(m.cols());
    let (rows, cols) = (a.rows(), a.cols());
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pr, pc)) = min_abs_entry(&a, t) else {
            break;
        };
        a.swap_rows(t, pr);
        if let Some(u) = u.as_mut() {
            u.swap_rows(t, pr);
        }
        a.swap_cols(t, pc);
        v.swap_cols(t, pc);

        loop {
            // Clear column t below the pivot.
            let mut dirty = false;
            for r in t + 1..rows {
                if a[(r, t)].is_zero() {
                    continue;
                }
                let q = a[(r, t)].div_floor(&a[(t, t)]);
                let nq = -q;
                a.add_row_multiple(r, t, &nq);
                if let Some(u) = u.as_mut() {
                    u.add_row_multiple(r, t, &nq);
                }
                if !a[(r, t)].is_zero() {
                    dirty = true;
                }
            }
            // Clear row t right of the pivot.
            for c in t + 1..cols {
                if a[(t, c)].is_zero() {
                    continue;
                }
                let q = a[(t, c)].div_floor(&a[(t, t)]);
                let nq = -q;
                a.add_col_multiple(c, t, &nq);
                v.add_col_multiple(c, t, &nq);
                if !a[(t, c)].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                // A remainder smaller than the pivot survived: move it in.
                let (pr, pc) = min_abs_in_cross(&a, t);
                a.swap_rows(t, pr);
                if let Some(u) = u.as_mut() {
                    u.swap_rows(t, pr);
                }
                a.swap_cols(t, pc);
                v.swap_cols(t, pc);
                continue;
            }
            // Pivot must divide the remaining block.
            let bad = (t + 1..rows)
                .find(|&r| (t + 1..cols).any(|c| !a[(r, c)].is_multiple_of(&a[(t, t)])));
            match bad {
                Some(r) => {
                    let one = BigInt::one();
                    a.add_row_multiple(t, r, &one);
                    if let Some(u) = u.as_mut() {
                        u.add_row_multiple(t, r, &one);
                    }
                }
                None => break,
            }
        }
        if a[(t, t)].is_negative() {
            a.negate_row(t);
            if let Some(u) = u.as_mut() {
                u.negate_row(t);
            }
        }
        t += 1;
    }
    (a, v)
}

fn min_abs_entry(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for r in t..a.rows() {
        for c in t..a.cols() {
            let x = &a[(r, c)];
            if x.is_zero() {
                continue;
            }
            let ax = x.abs();
            if best.as_ref().is_none_or(|(_, _, b)| ax < *b) {
                let is_one = ax.is_one();
                best = Some((r, c, ax));
                if is_one {
                    return best.map(|(r, c, _)| (r, c));
                }
            }
        }
    }
    best.map(|(r, c, _)| (r, c))
}

fn min_abs_in_cross(a: &IntMatrix, t: usize) -> (usize, usize) {
    let mut best = (t, t, a[(t, t)].abs());
    for r in t + 1..a.rows() {
        let x = &a[(r, t)];
        if !x.is_zero() && x.abs() < best.2 {
            best = (r, t, x.abs());
        }
    }
    for c in t + 1..a.cols() {
        let x = &a[(t, c)];
        if !x.is_zero() && x.abs() < best.2 {
            best = (t, c, x.abs());
        }
    }
    (best.0, best.1)
}

/// Structure of the cokernel `ℤ^c / rowspace(M)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CokernelInvariants {
    pub free_rank: usize,
    #[serde(with = "decimal_vec")]
    pub torsion: Vec<BigInt>,
}

pub fn cokernel_invariants(m: &IntMatrix) -> CokernelInvariants {
    let snf = smith_normal_form_right(m);
    cokernel_from_factors(m.cols(), &snf.invariant_factors())
}

pub(crate) fn cokernel_from_factors(cols: usize, factors: &[BigInt]) -> CokernelInvariants {
    CokernelInvariants {
        free_rank: cols - factors.len(),
        torsion: factors.iter().filter(|d| !d.is_one()).cloned().collect(),
    }
}

/// Row-style Hermite normal form: zero rows removed, positive pivots with
/// strictly increasing pivot columns, entries above each pivot in
/// `[0, pivot)`.
pub fn hermite_normal_form(m: &IntMatrix) -> IntMatrix {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut pivot_row = 0;
    let mut pivots = Vec::new();
    for c in 0..cols {
        if pivot_row == rows {
            break;
        }
        // Euclid down the column until a single nonzero entry remains.
        loop {
            let mut best: Option<(usize, BigInt)> = None;
            for r in pivot_row..rows {
                let x = &a[(r, c)];
                if !x.is_zero() && best.as_ref().is_none_or(|(_, b)| x.abs() < *b) {
                    best = Some((r, x.abs()));
                }
            }
            let Some((br, _)) = best else { break };
            a.swap_rows(pivot_row, br);
            let mut done = true;
            for r in pivot_row + 1..rows {
                if a[(r, c)].is_zero() {
                    continue;
                }
                let q = -a[(r, c)].div_floor(&a[(pivot_row, c)]);
                a.add_row_multiple(r, pivot_row, &q);
                if !a[(r, c)].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if a[(pivot_row, c)].is_zero() {
            continue;
        }
        if a[(pivot_row, c)].is_negative() {
            a.negate_row(pivot_row);
        }
        for r in 0..pivot_row {
            let q = -a[(r, c)].div_floor(&a[(pivot_row, c)]);
            a.add_row_multiple(r, pivot_row, &q);
        }
        pivots.push(c);
        pivot_row += 1;
    }
    let kept: Vec<Vec<BigInt>> = (0..pivot_row).map(|r| a.row(r).to_vec()).collect();
    IntMatrix::from_rows(cols, &kept).expect("rows share column count")
}

/// Whether two matrices generate the same ℤ-row space.
pub fn row_space_equal(m1: &IntMatrix, m2: &IntMatrix) -> Result<bool, MatrixError> {
    if m1.cols() != m2.cols() {
        return Err(MatrixError::ColumnMismatch {
            left: m1.cols(),
            right: m2.cols(),
        });
    }
    Ok(hermite_normal_form(m1) == hermite_normal_form(m2))
}

/// Extended gcd on machine integers: returns `(g, x, y)` with `a·x + b·y = g ≥ 0`.
pub fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let e = a.extended_gcd(&b);
    if e.gcd < 0 {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn identity_snf() {
        let m = IntMatrix::identity(2);
        let s = smith_normal_form(&m);
        assert_eq!(s.diagonal, m);
        assert_eq!(s.left, m);
        assert_eq!(s.right, m);
    }

    #[test]
    fn snf_two_by_two() {
        let m = IntMatrix::from_i64(&[&[2, 4], &[6, 8]]);
        let s = smith_normal_form(&m);
        assert_eq!(s.diagonal, IntMatrix::from_i64(&[&[2, 0], &[0, 4]]));
        assert_eq!(s.left.mul(&m).unwrap().mul(&s.right).unwrap(), s.diagonal);
    }

    #[test]
    fn snf_zero_and_empty() {
        let z = IntMatrix::zeros(2, 3);
        assert_eq!(smith_normal_form(&z).diagonal, z);
        let e = IntMatrix::zeros(0, 3);
        let s = smith_normal_form(&e);
        assert_eq!(s.diagonal.rows(), 0);
        assert_eq!(s.right, IntMatrix::identity(3));
    }

    #[test]
    fn cokernels() {
        let c = cokernel_invariants(&IntMatrix::zeros(0, 3));
        assert_eq!(c.free_rank, 3);
        assert!(c.torsion.is_empty());
        let c = cokernel_invariants(&IntMatrix::from_i64(&[&[2, 0], &[0, 1]]));
        assert_eq!((c.free_rank, c.torsion), (0, big(&[2])));
        let c = cokernel_invariants(&IntMatrix::from_i64(&[&[2, 4], &[6, 8]]));
        assert_eq!((c.free_rank, c.torsion), (0, big(&[2, 4])));
    }

    #[test]
    fn hnf_shape() {
        let m = IntMatrix::from_i64(&[&[4, 6, 2], &[2, 3, 1], &[0, 5, 7]]);
        let h = hermite_normal_form(&m);
        assert_eq!(h.rows(), 2);
        assert_eq!(h, IntMatrix::from_i64(&[&[2, 3, 1], &[0, 5, 7]]));
    }

    #[test]
    fn row_space_basics() {
        let m = IntMatrix::from_i64(&[&[1, 2], &[3, 4], &[0, 6]]);
        let p = IntMatrix::from_i64(&[&[0, 6], &[1, 2], &[3, 4]]);
        assert!(row_space_equal(&m, &p).unwrap());
        let a = IntMatrix::from_i64(&[&[2]]);
        let b = IntMatrix::from_i64(&[&[4]]);
        assert!(!row_space_equal(&a, &b).unwrap());
        assert_eq!(
            row_space_equal(&a, &IntMatrix::zeros(1, 2)),
            Err(MatrixError::ColumnMismatch { left: 1, right: 2 })
        );
    }

    #[test]
    fn determinant_small() {
        let m = IntMatrix::from_i64(&[&[0, 2, 1], &[1, 0, 3], &[4, 1, 0]]);
        // 0*(0-3) - 2*(0-12) + 1*(1-0) = 25
        assert_eq!(m.determinant(), Some(BigInt::from(25)));
    }

    #[test]
    fn csv_and_json() {
        let m = IntMatrix::from_i64(&[&[1, -2], &[30, 4]]);
        assert_eq!(m.to_csv(), "1,-2\n30,4\n");
        assert_eq!(IntMatrix::from_csv(&m.to_csv()).unwrap(), m);
        let js = serde_json::to_string(&m).unwrap();
        assert_eq!(js, "[[1,-2],[30,4]]");
        assert_eq!(serde_json::from_str::<IntMatrix>(&js).unwrap(), m);
        assert!(matches!(
            IntMatrix::from_csv("1,x\n"),
            Err(MatrixError::Parse { line: 1, .. })
        ));
        assert!(matches!(
            IntMatrix::from_csv("1,2\n3\n"),
            Err(MatrixError::Ragged { row: 1, .. })
        ));
    }
}
