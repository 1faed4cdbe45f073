//! Exact dense linear algebra over the rationals.
//!
//! Every morphism in the library is an [`ExactMatrix`] acting on column
//! vectors: column `j` holds the image of the `j`-th basis vector. Kernels
//! realize equalizers, cokernels realize tensor products over an algebra.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational scalar. Always stored in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// Coordinate vector.
pub type Vector = Vec<Rational>;

/// A matrix read as a linear map: `codomain_dim × domain_dim`.
pub type LinearMap = ExactMatrix;

pub fn rational(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses the literal forms `"p/q"` and `"p"`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let parsed = match text.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| Error::Parse(text.to_string()))?;
            let d: BigInt = d.trim().parse().map_err(|_| Error::Parse(text.to_string()))?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {text:?}")));
            }
            Rational::new(n, d)
        }
        None => Rational::from_integer(text.parse().map_err(|_| Error::Parse(text.to_string()))?),
    };
    Ok(parsed)
}

/// Canonical text form: `"p"` when the denominator is 1, `"p/q"` otherwise.
pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}

pub fn zero_vector(n: usize) -> Vector {
    vec![Rational::zero(); n]
}

pub fn unit_vector(n: usize, i: usize) -> Vector {
    let mut v = zero_vector(n);
    v[i] = Rational::one();
    v
}

/// Kronecker product of coordinate vectors, lexicographic index `i * v.len() + j`.
pub fn kron_vectors(u: &[Rational], v: &[Rational]) -> Vector {
    let mut out = Vec::with_capacity(u.len() * v.len());
    for a in u {
        for b in v {
            out.push(a * b);
        }
    }
    out
}

pub fn is_zero_vector(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Dense row-major matrix of rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(format_rational).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, cols, entries: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = Rational::one();
        }
        m
    }

    pub fn from_entries(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(ExactMatrix { rows, cols, entries })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        ExactMatrix { rows, cols, entries }
    }

    /// Builds a matrix from integer rows; handy in tests and catalog code.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        Self::from_fn(r, c, |i, j| rational(rows[i][j]))
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>, cols: usize) -> Result<Self> {
        let r = rows.len();
        let mut entries = Vec::with_capacity(r * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::Dimension(format!("row {i} has {} entries, expected {cols}", row.len())));
            }
            entries.extend(row);
        }
        Ok(ExactMatrix { rows: r, cols, entries })
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vector]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column {j} has wrong length");
            for (i, x) in col.iter().enumerate() {
                m.entries[i * columns.len() + j] = x.clone();
            }
        }
        m
    }

    pub fn column_vector(v: &[Rational]) -> Self {
        ExactMatrix { rows: v.len(), cols: 1, entries: v.to_vec() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Number of columns, read as the dimension of the domain.
    pub fn domain_dim(&self) -> usize {
        self.cols
    }

    /// Number of rows, read as the dimension of the codomain.
    pub fn codomain_dim(&self) -> usize {
        self.rows
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Rational) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Self::identity(self.rows)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn scale(&self, s: &Rational) -> Self {
        ExactMatrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(|x| x * s).collect() }
    }

    pub fn apply(&self, v: &[Rational]) -> Vector {
        assert_eq!(v.len(), self.cols, "vector length does not match matrix columns");
        (0..self.rows)
            .map(|r| {
                let mut acc = Rational::zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                acc
            })
            .collect()
    }

    /// Checked composition `self ∘ rhs`.
    pub fn compose(&self, rhs: &ExactMatrix) -> Result<ExactMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::Dimension(format!(
                "cannot compose {}x{} after {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(self.mul_unchecked(rhs))
    }

    fn mul_unchecked(&self, rhs: &ExactMatrix) -> ExactMatrix {
        let mut out = ExactMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Columns of `self` followed by columns of each further block.
    pub fn hstack(blocks: &[&ExactMatrix], rows: usize) -> Self {
        let cols: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = ExactMatrix::zeros(rows, cols);
        let mut offset = 0;
        for b in blocks {
            assert_eq!(b.rows, rows, "hstack row mismatch");
            for r in 0..rows {
                for c in 0..b.cols {
                    out.entries[r * cols + offset + c] = b.get(r, c).clone();
                }
            }
            offset += b.cols;
        }
        out
    }

    pub fn vstack(blocks: &[&ExactMatrix], cols: usize) -> Self {
        let mut entries = Vec::new();
        let mut rows = 0;
        for b in blocks {
            assert_eq!(b.cols, cols, "vstack column mismatch");
            entries.extend(b.entries.iter().cloned());
            rows += b.rows;
        }
        ExactMatrix { rows, cols, entries }
    }

    pub fn select_columns(&self, cols: &[usize]) -> Self {
        Self::from_fn(self.rows, cols.len(), |r, c| self.get(r, cols[c]).clone())
    }

    /// Index of the first column on which two equally-shaped matrices differ.
    pub fn first_differing_column(&self, other: &ExactMatrix) -> Option<usize> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        (0..self.cols).find(|&c| (0..self.rows).any(|r| self.get(r, c) != other.get(r, c)))
    }

    pub fn rank(&self) -> usize {
        rref(self).1.len()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.cols
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.rows
    }

    /// Solves `self · X = rhs`; `None` when inconsistent. Free variables are set to zero.
    pub fn solve_matrix(&self, rhs: &ExactMatrix) -> Option<ExactMatrix> {
        assert_eq!(self.rows, rhs.rows, "solve: row mismatch");
        let augmented = ExactMatrix::hstack(&[self, rhs], self.rows);
        let (reduced, pivots) = rref(&augmented);
        if pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = ExactMatrix::zeros(self.cols, rhs.cols);
        for (row, &p) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.set(p, j, reduced.get(row, self.cols + j).clone());
            }
        }
        Some(x)
    }

    pub fn solve(&self, b: &[Rational]) -> Option<Vector> {
        self.solve_matrix(&ExactMatrix::column_vector(b)).map(|x| x.column(0))
    }

    pub fn inverse(&self) -> Option<ExactMatrix> {
        if self.rows != self.cols || !self.is_injective() {
            return None;
        }
        self.solve_matrix(&ExactMatrix::identity(self.rows))
    }
}

impl Add for &ExactMatrix {
    type Output = ExactMatrix;
    fn add(self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "add: shape mismatch");
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &ExactMatrix {
    type Output = ExactMatrix;
    fn sub(self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "sub: shape mismatch");
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &ExactMatrix {
    type Output = ExactMatrix;
    fn neg(self) -> ExactMatrix {
        ExactMatrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(|x| -x).collect() }
    }
}

impl Mul for &ExactMatrix {
    type Output = ExactMatrix;
    /// Composition `self ∘ rhs`. Panics on shape mismatch; use [`ExactMatrix::compose`]
    /// for a checked version.
    fn mul(self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols, rhs.rows, "mul: {}x{} * {}x{}", self.rows, self.cols, rhs.rows, rhs.cols);
        self.mul_unchecked(rhs)
    }
}

/// Reduced row-echelon form with the strictly increasing list of pivot columns.
pub fn rref(m: &ExactMatrix) -> (ExactMatrix, Vec<usize>) {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a.get(i, c).is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                a.entries.swap(p * cols + j, r * cols + j);
            }
        }
        let inv = a.get(r, c).recip();
        for j in c..cols {
            let v = &a.entries[r * cols + j] * &inv;
            a.entries[r * cols + j] = v;
        }
        for i in 0..rows {
            if i == r {
                continue;
            }
            let factor = a.get(i, c).clone();
            if factor.is_zero() {
                continue;
            }
            for j in c..cols {
                let sub = &factor * &a.entries[r * cols + j];
                if !sub.is_zero() {
                    a.entries[i * cols + j] -= sub;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

/// A subspace of `Q^ambient_dim` given by a basis in the columns of `basis`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspacePresentation {
    pub ambient_dim: usize,
    pub basis: ExactMatrix,
}

impl SubspacePresentation {
    /// Span of the given columns, reduced to a basis (pivot columns are kept).
    pub fn span(generators: &ExactMatrix) -> Self {
        let (_, pivots) = rref(generators);
        SubspacePresentation { ambient_dim: generators.rows(), basis: generators.select_columns(&pivots) }
    }

    pub fn zero(ambient_dim: usize) -> Self {
        SubspacePresentation { ambient_dim, basis: ExactMatrix::zeros(ambient_dim, 0) }
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.coordinates(v).is_some()
    }

    /// Coordinates of `v` in the stored basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vector> {
        if self.dim() == 0 {
            return is_zero_vector(v).then(Vec::new);
        }
        self.basis.solve(v)
    }

    /// Column-wise coordinates of a map landing in the subspace.
    pub fn factor(&self, map: &ExactMatrix) -> Option<ExactMatrix> {
        if self.dim() == 0 {
            return map.is_zero().then(|| ExactMatrix::zeros(0, map.cols()));
        }
        self.basis.solve_matrix(map)
    }

    /// Inclusion map into the ambient space.
    pub fn inclusion(&self) -> &ExactMatrix {
        &self.basis
    }
}

/// A quotient `Q^ambient_dim / span(relations)` with explicit projection and section.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientPresentation {
    pub ambient_dim: usize,
    pub projection: ExactMatrix,
    pub section: ExactMatrix,
}

impl QuotientPresentation {
    pub fn dim(&self) -> usize {
        self.projection.rows()
    }

    pub fn project(&self, v: &[Rational]) -> Vector {
        self.projection.apply(v)
    }
}

/// Basis of `{v : f(v) = 0}`, one vector per free column of `rref(f)`.
pub fn kernel_basis(f: &LinearMap) -> SubspacePresentation {
    let (reduced, pivots) = rref(f);
    let n = f.cols();
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let mut columns = Vec::with_capacity(free.len());
    for &j in &free {
        let mut v = zero_vector(n);
        v[j] = Rational::one();
        for (row, &p) in pivots.iter().enumerate() {
            v[p] = -reduced.get(row, j).clone();
        }
        columns.push(v);
    }
    SubspacePresentation { ambient_dim: n, basis: ExactMatrix::from_columns(n, &columns) }
}

/// Quotient of `Q^ambient_dim` by the column span of `relations`.
///
/// The quotient basis is the set of non-pivot coordinates of the row-reduced
/// relation space; the section is the coordinate inclusion of those.
pub fn cokernel(relations: &ExactMatrix, ambient_dim: usize) -> Result<QuotientPresentation> {
    if relations.rows() != ambient_dim {
        return Err(Error::Dimension(format!(
            "relations have {} rows but the ambient space has dimension {ambient_dim}",
            relations.rows()
        )));
    }
    let (reduced, pivots) = rref(&relations.transpose());
    let free: Vec<usize> = (0..ambient_dim).filter(|c| !pivots.contains(c)).collect();
    let q = free.len();
    let mut projection = ExactMatrix::zeros(q, ambient_dim);
    let mut section = ExactMatrix::zeros(ambient_dim, q);
    for (k, &j) in free.iter().enumerate() {
        projection.set(k, j, Rational::one());
        section.set(j, k, Rational::one());
    }
    for (row, &p) in pivots.iter().enumerate() {
        for (k, &j) in free.iter().enumerate() {
            let entry = reduced.get(row, j);
            if !entry.is_zero() {
                projection.set(k, p, -entry.clone());
            }
        }
    }
    Ok(QuotientPresentation { ambient_dim, projection, section })
}

/// Matrix of `f ⊗ g` on the lexicographic tensor basis.
pub fn kronecker(f: &LinearMap, g: &LinearMap) -> LinearMap {
    let (fr, fc, gr, gc) = (f.rows(), f.cols(), g.rows(), g.cols());
    let mut out = ExactMatrix::zeros(fr * gr, fc * gc);
    let cols = fc * gc;
    for i in 0..fr {
        for j in 0..fc {
            let a = f.get(i, j);
            if a.is_zero() {
                continue;
            }
            for k in 0..gr {
                for l in 0..gc {
                    let b = g.get(k, l);
                    if !b.is_zero() {
                        out.entries[(i * gr + k) * cols + j * gc + l] = a * b;
                    }
                }
            }
        }
    }
    out
}

pub fn is_isomorphism(f: &LinearMap) -> bool {
    f.rows() == f.cols() && f.rank() == f.cols()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> ExactMatrix {
        ExactMatrix::from_i64_rows(rows)
    }

    #[test]
    fn rref_identity() {
        let (r, p) = rref(&ExactMatrix::identity(3));
        assert!(r.is_identity());
        assert_eq!(p, vec![0, 1, 2]);
    }

    #[test]
    fn rref_rank_one() {
        let (r, p) = rref(&m(&[&[1, 1], &[1, 1]]));
        assert_eq!(r, m(&[&[1, 1], &[0, 0]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn rref_hand_elimination() {
        // [[2,4],[1,3]]: R1/2 = [1,2]; R2-R1 = [0,1]; R1-2R2 = [1,0].
        let (r, p) = rref(&m(&[&[2, 4], &[1, 3]]));
        assert!(r.is_identity());
        assert_eq!(p, vec![0, 1]);
    }

    #[test]
    fn kernel_examples() {
        let k = kernel_basis(&m(&[&[1, 1], &[1, 1]]));
        assert_eq!(k.basis, m(&[&[-1], &[1]]));
        assert_eq!(kernel_basis(&ExactMatrix::identity(3)).dim(), 0);
        let f = m(&[&[1, 2, 3]]);
        let k = kernel_basis(&f);
        assert_eq!(k.dim(), 2);
        assert!((&f * &k.basis).is_zero());
    }

    #[test]
    fn cokernel_examples() {
        let q = cokernel(&ExactMatrix::zeros(3, 0), 3).unwrap();
        assert!(q.projection.is_identity());
        let q = cokernel(&ExactMatrix::identity(3), 3).unwrap();
        assert_eq!(q.dim(), 0);
        let q = cokernel(&m(&[&[1], &[-1]]), 2).unwrap();
        assert_eq!(q.dim(), 1);
        assert_eq!(q.projection, m(&[&[1, 1]]));
        assert!(q.project(&[rational(1), rational(-1)]).iter().all(Zero::is_zero));
        assert!((&q.projection * &q.section).is_identity());
    }

    #[test]
    fn cokernel_rejects_wrong_ambient() {
        assert!(cokernel(&ExactMatrix::zeros(2, 1), 3).is_err());
    }

    #[test]
    fn kronecker_examples() {
        assert!(kronecker(&ExactMatrix::identity(2), &ExactMatrix::identity(3)).is_identity());
        assert!(kronecker(&m(&[&[1, 2]]), &ExactMatrix::zeros(2, 2)).is_zero());
        assert_eq!(kronecker(&m(&[&[2]]), &m(&[&[0, 1], &[1, 0]])), m(&[&[0, 2], &[2, 0]]));
    }

    #[test]
    fn isomorphism_examples() {
        assert!(is_isomorphism(&ExactMatrix::identity(2)));
        assert!(!is_isomorphism(&m(&[&[1, 1], &[1, 1]])));
        assert!(!is_isomorphism(&m(&[&[1, 0, 0], &[0, 1, 0]])));
    }

    #[test]
    fn rational_literals() {
        assert_eq!(parse_rational("-3/2").unwrap(), ratio(-3, 2));
        assert_eq!(parse_rational("6/4").unwrap(), ratio(3, 2));
        assert_eq!(format_rational(&ratio(4, 2)), "2");
        assert_eq!(format_rational(&ratio(-3, 2)), "-3/2");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
    }

    #[test]
    fn solve_and_inverse() {
        let a = m(&[&[2, 4], &[1, 3]]);
        let inv = a.inverse().unwrap();
        assert!((&a * &inv).is_identity());
        assert!(m(&[&[1, 1], &[1, 1]]).solve(&[rational(1), rational(0)]).is_none());
    }
}
