//! Exact integer linear algebra: boundary matrices, Laplacians, Bareiss
//! determinants, characteristic polynomials of shifted matrices, Smith
//! normal form, and homology summaries.
//!
//! Every public operation works in arbitrary precision; machine-word
//! overflow is treated as a correctness bug, not an edge case. Hot
//! enumeration paths elsewhere in the crate use a checked `i128` variant of
//! the determinant that falls back to this module on overflow.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::complex::{Cell, SimplicialComplex};
use crate::error::{Error, Result};

/// Dense matrix of arbitrary-precision integers with optional cell labels
/// attached to rows and columns in canonical order.
#[derive(Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
    row_labels: Option<Vec<Cell>>,
    col_labels: Option<Vec<Cell>>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
            row_labels: None,
            col_labels: None,
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(Vec::len).unwrap_or(0);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntegerMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
            row_labels: None,
            col_labels: None,
        }
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: BigInt) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn with_labels(mut self, row_labels: Vec<Cell>, col_labels: Vec<Cell>) -> Self {
        assert_eq!(row_labels.len(), self.rows);
        assert_eq!(col_labels.len(), self.cols);
        self.row_labels = Some(row_labels);
        self.col_labels = Some(col_labels);
        self
    }

    pub fn row_labels(&self) -> Option<&[Cell]> {
        self.row_labels.as_deref()
    }

    pub fn col_labels(&self) -> Option<&[Cell]> {
        self.col_labels.as_deref()
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c).clone());
            }
        }
        out.row_labels = self.col_labels.clone();
        out.col_labels = self.row_labels.clone();
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = BigInt::zero();
                for k in 0..self.cols {
                    let a = self.get(r, k);
                    if !a.is_zero() {
                        acc += a * other.get(k, c);
                    }
                }
                out.set(r, c, acc);
            }
        }
        out.row_labels = self.row_labels.clone();
        out.col_labels = other.col_labels.clone();
        out
    }

    /// `self + k I`; requires a square matrix.
    pub fn plus_scaled_identity(&self, k: &BigInt) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut out = self.clone();
        for i in 0..self.rows {
            let v = out.get(i, i) + k;
            out.set(i, i, v);
        }
        Ok(out)
    }

    /// Restriction to the given row and column index sets (in the order
    /// given); labels follow.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut out = Self::zeros(rows.len(), cols.len());
        for (ri, &r) in rows.iter().enumerate() {
            for (ci, &c) in cols.iter().enumerate() {
                out.set(ri, ci, self.get(r, c).clone());
            }
        }
        out.row_labels = self
            .row_labels
            .as_ref()
            .map(|l| rows.iter().map(|&r| l[r].clone()).collect());
        out.col_labels = self
            .col_labels
            .as_ref()
            .map(|l| cols.iter().map(|&c| l[c].clone()).collect());
        out
    }

    /// Entries as decimal strings, row-major; the precision-safe debug and
    /// JSON form.
    pub fn entry_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.get(r, c).to_string()).collect())
            .collect()
    }

    fn to_bigint_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.get(r, c).clone()).collect())
            .collect()
    }

    fn to_i128_rows(&self) -> Option<Vec<Vec<i128>>> {
        (0..self.rows)
            .map(|r| {
                (0..self.cols)
                    .map(|c| i128::try_from(self.get(r, c)).ok())
                    .collect()
            })
            .collect()
    }
}

impl fmt::Debug for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntegerMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Polynomial with arbitrary-precision integer coefficients, stored
/// ascending: `coeffs[i]` multiplies `λ^i`. The zero polynomial stores no
/// coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct IntegerPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntegerPolynomial {
    pub fn zero() -> Self {
        IntegerPolynomial { coeffs: Vec::new() }
    }

    /// Builds from ascending coefficients, trimming leading zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntegerPolynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `λ^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Ascending coefficients up to the degree.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn evaluate(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) + other.coeff(i)).collect();
        Self::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) - other.coeff(i)).collect();
        Self::from_coeffs(coeffs)
    }

    /// Ascending decimal-string coefficients, padded with "0" to `len`
    /// entries (at least degree+1 entries are always emitted; the zero
    /// polynomial emits a single "0" when `len` is 0 or 1).
    pub fn decimal_strings(&self, len: usize) -> Vec<String> {
        let n = len.max(self.coeffs.len()).max(1);
        (0..n).map(|i| self.coeff(i).to_string()).collect()
    }
}

impl fmt::Display for IntegerPolynomial {
    /// Descending human-readable form, mirroring how the identities are
    /// usually written: `λ^4 + 8λ^3 + 20λ^2 + 16λ`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for i in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[i];
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = !mag.is_one() || i == 0;
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "λ")?,
                _ => write!(f, "λ^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntegerPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Homology of one dimension: free rank and the torsion orders as
/// prime-power multiset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologySummary {
    pub betti: usize,
    pub torsion: Vec<BigInt>,
}

impl HomologySummary {
    /// Group order when finite (betti = 0): the product of the torsion
    /// entries. `None` for infinite groups.
    pub fn order(&self) -> Option<BigInt> {
        if self.betti != 0 {
            return None;
        }
        Some(self.torsion.iter().product())
    }
}

/// Diagonal of the Smith normal form: the nonzero invariant factors in
/// divisibility order, plus the rank they imply.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithNormalForm {
    pub factors: Vec<BigInt>,
    pub rank: usize,
}

/// The boundary matrix from d-cells to (d-1)-cells in canonical order:
/// entry (r, f) is `(-1)^j` when r is f with its j-th smallest vertex
/// removed, else 0.
pub fn boundary_matrix(k: &SimplicialComplex, d: usize) -> Result<IntegerMatrix> {
    if d == 0 || d > k.dim() {
        return Err(Error::DimensionOutOfRange { d, max: k.dim() });
    }
    let mut m = IntegerMatrix::zeros(k.n_cells(d - 1), k.n_cells(d));
    for (col, facets) in k.facet_indices(d).iter().enumerate() {
        for &(row, sign) in facets {
            m.set(row, col, BigInt::from(sign));
        }
    }
    Ok(m.with_labels(k.cells(d - 1).to_vec(), k.cells(d).to_vec()))
}

/// The combinatorial Laplacian `∂_d · ∂_d^T`, indexed by the (d-1)-cells.
pub fn laplacian(k: &SimplicialComplex, d: usize) -> Result<IntegerMatrix> {
    let b = boundary_matrix(k, d)?;
    Ok(b.mul(&b.transpose()))
}

/// Vertex adjacency matrix of a graph (a 1-dimensional complex).
pub fn adjacency_matrix(g: &SimplicialComplex) -> Result<IntegerMatrix> {
    if g.dim() != 1 {
        return Err(Error::NotAGraph(g.dim()));
    }
    let n = g.n_cells(0);
    let mut m = IntegerMatrix::zeros(n, n);
    for facets in g.facet_indices(1) {
        let a = facets[0].0;
        let b = facets[1].0;
        m.set(a, b, BigInt::one());
        m.set(b, a, BigInt::one());
    }
    Ok(m.with_labels(g.cells(0).to_vec(), g.cells(0).to_vec()))
}

/// Exact determinant by fraction-free Bareiss elimination. Runs in checked
/// `i128` when the entries fit, falling back to `BigInt` on any overflow.
pub fn determinant(m: &IntegerMatrix) -> Result<BigInt> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    if let Some(d) = m.to_i128_rows().and_then(det_i128) {
        return Ok(BigInt::from(d));
    }
    Ok(det_bigint(m.to_bigint_rows()))
}

pub(crate) fn det_bigint(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n {
        let pivot = (k..n).find(|&i| !a[i][k].is_zero());
        let Some(p) = pivot else {
            return BigInt::zero();
        };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                debug_assert!((&t % &prev).is_zero(), "Bareiss division not exact");
                a[i][j] = t / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let last = std::mem::take(&mut a[n - 1][n - 1]);
    if sign < 0 {
        -last
    } else {
        last
    }
}

/// Checked `i128` Bareiss determinant for hot enumeration loops; `None`
/// signals overflow, in which case callers redo the work in `BigInt`.
pub(crate) fn det_i128(mut a: Vec<Vec<i128>>) -> Option<i128> {
    let n = a.len();
    if n == 0 {
        return Some(1);
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| a[i][k] != 0) else {
            return Some(0);
        };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = a[k][k]
                    .checked_mul(a[i][j])?
                    .checked_sub(a[i][k].checked_mul(a[k][j])?)?;
                a[i][j] = t / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    Some(sign * a[n - 1][n - 1])
}

/// Rank over the integers by fraction-free elimination.
pub fn rank(m: &IntegerMatrix) -> usize {
    let mut a = m.to_bigint_rows();
    let rows = m.rows;
    let cols = m.cols;
    let mut r = 0usize;
    let mut prev = BigInt::one();
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(p, r);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let t = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                debug_assert!((&t % &prev).is_zero(), "fraction-free division not exact");
                a[i][j] = t / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    r
}

/// Exact coefficients of `det(M + λI)` (monic, degree n), computed by n+1
/// Bareiss determinant evaluations at λ = 0..=n followed by exact rational
/// interpolation; the result is asserted integral.
pub fn char_poly_shifted(m: &IntegerMatrix) -> Result<IntegerPolynomial> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let n = m.rows;
    let values: Vec<BigInt> = (0..=n)
        .map(|k| {
            let shifted = m.plus_scaled_identity(&BigInt::from(k))?;
            determinant(&shifted)
        })
        .collect::<Result<_>>()?;

    // Newton interpolation on the nodes 0..=n over the rationals.
    let rat = |b: &BigInt| BigRational::from_integer(b.clone());
    let eval = |p: &[BigRational], x: &BigRational| {
        let mut acc = BigRational::zero();
        for c in p.iter().rev() {
            acc = acc * x + c;
        }
        acc
    };
    let mut p: Vec<BigRational> = vec![rat(&values[0])];
    let mut basis: Vec<BigRational> = vec![BigRational::zero(), BigRational::one()];
    for (k, value) in values.iter().enumerate().skip(1) {
        let x = rat(&BigInt::from(k));
        let c = (rat(value) - eval(&p, &x)) / eval(&basis, &x);
        if p.len() < basis.len() {
            p.resize(basis.len(), BigRational::zero());
        }
        for (pi, bi) in p.iter_mut().zip(basis.iter()) {
            *pi += &c * bi;
        }
        if k < n {
            // basis *= (λ - k)
            let neg_k = -rat(&BigInt::from(k));
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (i, b) in basis.iter().enumerate() {
                next[i + 1] += b;
                next[i] += b * &neg_k;
            }
            basis = next;
        }
    }
    let coeffs: Vec<BigInt> = p
        .into_iter()
        .map(|c| {
            assert!(c.is_integer(), "interpolated coefficient is not integral");
            c.to_integer()
        })
        .collect();
    let poly = IntegerPolynomial::from_coeffs(coeffs);
    assert_eq!(poly.degree(), Some(n), "det(M + λI) must be monic of degree n");
    Ok(poly)
}

/// Smith normal form over the integers.
///
/// Pivoting picks the smallest nonzero absolute value with deterministic
/// (row, col) tie-break, which bounds entry growth and makes the reduction
/// reproducible. Returns the nonzero invariant factors `d1 | d2 | …`.
// In-place row operations combine two rows of the same matrix; index loops
// are the clear form for that, so the range-loop lint is off here.
#[allow(clippy::needless_range_loop)]
pub fn smith_normal_form(m: &IntegerMatrix) -> SmithNormalForm {
    let rows = m.rows;
    let cols = m.cols;
    let mut a = m.to_bigint_rows();
    let limit = rows.min(cols);
    let mut t = 0usize;
    'outer: while t < limit {
        // Smallest-|value| pivot with (row, col) tie-break.
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if a[i][j].is_zero() {
                    continue;
                }
                let better = match best {
                    None => true,
                    Some((bi, bj)) => a[i][j].abs() < a[bi][bj].abs(),
                };
                if better {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else {
            break;
        };
        a.swap(t, bi);
        for row in a.iter_mut() {
            row.swap(t, bj);
        }

        loop {
            // Clear the pivot column.
            let mut i = t + 1;
            while i < rows {
                if a[i][t].is_zero() {
                    i += 1;
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                if !q.is_zero() {
                    for j in t..cols {
                        let v = &a[i][j] - &q * &a[t][j];
                        a[i][j] = v;
                    }
                }
                if a[i][t].is_zero() {
                    i += 1;
                } else {
                    // Remainder is strictly smaller than the pivot: promote.
                    a.swap(i, t);
                }
            }
            // Clear the pivot row.
            let mut j = t + 1;
            let mut row_dirtied_column = false;
            while j < cols {
                if a[t][j].is_zero() {
                    j += 1;
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                if !q.is_zero() {
                    for row in a.iter_mut().take(rows).skip(t) {
                        let v = &row[j] - &q * &row[t];
                        row[j] = v;
                    }
                }
                if a[t][j].is_zero() {
                    j += 1;
                } else {
                    for row in a.iter_mut() {
                        row.swap(t, j);
                    }
                    row_dirtied_column = true;
                }
            }
            if row_dirtied_column || (t + 1..rows).any(|i| !a[i][t].is_zero()) {
                continue;
            }
            // Pivot must divide the whole remaining block; if not, pull the
            // offending row in and keep reducing.
            let offender = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !(&a[i][j] % &a[t][t]).is_zero());
            match offender {
                Some((i, _)) => {
                    for j in t..cols {
                        let v = &a[t][j] + &a[i][j];
                        a[t][j] = v;
                    }
                }
                None => break,
            }
        }
        if a[t][t].is_negative() {
            for j in t..cols {
                a[t][j] = -std::mem::take(&mut a[t][j]);
            }
        }
        t += 1;
        if t == limit {
            break 'outer;
        }
    }

    let mut factors: Vec<BigInt> = (0..limit)
        .map(|i| a[i][i].abs())
        .take_while(|d| !d.is_zero())
        .collect();
    // The divisibility chain holds by construction; this safety pass costs
    // nothing and guarantees it even so.
    let len = factors.len();
    if len > 1 {
        loop {
            let mut changed = false;
            for i in 0..len - 1 {
                let (x, y) = (factors[i].clone(), factors[i + 1].clone());
                if !(&y % &x).is_zero() {
                    let g = x.gcd(&y);
                    let l = &x * &y / &g;
                    factors[i] = g;
                    factors[i + 1] = l;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
    }
    let rank = factors.len();
    SmithNormalForm { factors, rank }
}

/// Homology summary in dimension d: free rank `dim ker ∂_d - rank ∂_{d+1}`
/// and torsion from the invariant factors of `∂_{d+1}`.
///
/// `∂_0` is the zero map, and `∂_{dim+1}` is zero as well.
pub fn homology(k: &SimplicialComplex, d: usize) -> Result<HomologySummary> {
    if d > k.dim() {
        return Err(Error::DimensionOutOfRange { d, max: k.dim() });
    }
    let rank_d = if d == 0 {
        0
    } else {
        rank(&boundary_matrix(k, d)?)
    };
    let kernel = k.n_cells(d) - rank_d;
    let (rank_up, torsion) = if d == k.dim() {
        (0, Vec::new())
    } else {
        let snf = smith_normal_form(&boundary_matrix(k, d + 1)?);
        let torsion: Vec<BigInt> = snf
            .factors
            .iter()
            .filter(|f| f.abs() > BigInt::one())
            .flat_map(prime_power_parts)
            .collect();
        (snf.rank, torsion)
    };
    let mut torsion = torsion;
    torsion.sort();
    Ok(HomologySummary {
        betti: kernel - rank_up,
        torsion,
    })
}

/// Splits an invariant factor into prime-power parts by trial division, so
/// `Z/6` reads as `Z/2 x Z/3`. A factor too large to probe stays whole
/// (unreachable at this crate's scales).
fn prime_power_parts(f: &BigInt) -> Vec<BigInt> {
    let mut rest = f.abs();
    let mut parts = Vec::new();
    let mut p = BigInt::from(2u32);
    let limit = BigInt::from(1_000_000u64);
    while &p * &p <= rest && p <= limit {
        if (&rest % &p).is_zero() {
            let mut power = BigInt::one();
            while (&rest % &p).is_zero() {
                rest /= &p;
                power *= &p;
            }
            parts.push(power);
        }
        p += 1;
    }
    if rest > BigInt::one() {
        parts.push(rest);
    }
    parts
}
