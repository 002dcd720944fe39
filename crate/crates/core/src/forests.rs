//! Rooted forests of top cells and their collapse defects.
//!
//! A forest is a set F of top cells whose boundary columns are linearly
//! independent. A rooted forest adds a root set R at the level below: the
//! complement R̄ must have exactly |F| cells and the square boundary block
//! ∂[R̄, F] must be nonsingular. The squared determinants of these blocks,
//! grouped by |R|, are exactly the coefficients of `det(Δ_d + λI)` by the
//! Cauchy–Binet expansion, so the enumeration here reproduces the
//! characteristic polynomial term by term.
//!
//! A rooted forest may or may not collapse onto its root by repeatedly
//! removing a non-root cell together with its unique remaining coface in F.
//! Collapsing rooted forests correspond one-to-one with acyclic pairings
//! and carry determinant ±1; the squared determinants of the rest, grouped
//! by |R|, are the defect ε_i separating `det(Δ_d + λI)` from the pairing
//! census.
//!
//! Enumeration keeps an incremental fraction-free echelon whose entries are
//! minors of the boundary matrix. Minors of a matrix whose columns hold
//! d+1 entries of ±1 are Hadamard-bounded by `(d+1)^(s/2)` for block size
//! s, so `i128` arithmetic is exact whenever `s·log2(d+1) ≤ 124`; larger
//! instances switch to `BigInt` up front.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::complex::{Cell, SimplicialComplex};
use crate::error::{Error, Result};
use crate::guard::Guard;
use crate::linalg::{boundary_matrix, determinant, smith_normal_form, IntegerPolynomial};
use crate::morse::VectorField;

/// A forest F of top cells together with a root set R one level below,
/// certified by the nonzero determinant of ∂[R̄, F] (rows and columns in
/// canonical order).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedForest {
    forest: Vec<Cell>,
    root: Vec<Cell>,
    cobase: Vec<Cell>,
    det: BigInt,
}

impl RootedForest {
    /// Validates and certifies a rooted forest: forest cells top
    /// dimensional, root cells one level below, sizes matching, and the
    /// root complement nonsingular against the forest.
    pub fn new(k: &SimplicialComplex, forest: Vec<Cell>, root: Vec<Cell>) -> Result<Self> {
        let d = k.dim();
        if d == 0 {
            return Err(Error::DimensionOutOfRange { d: 0, max: 0 });
        }
        let mut forest = forest;
        let mut root = root;
        forest.sort();
        root.sort();
        for group in [&forest, &root] {
            for w in group.windows(2) {
                if w[0] == w[1] {
                    return Err(Error::InvalidRootedForest(format!(
                        "cell {} repeated",
                        w[0]
                    )));
                }
            }
        }
        for cell in &forest {
            if !k.contains(cell) {
                return Err(Error::CellNotFound(cell.to_string()));
            }
            if cell.dim() != d {
                return Err(Error::InvalidRootedForest(format!(
                    "cell {cell} is not a top cell"
                )));
            }
        }
        for cell in &root {
            if !k.contains(cell) {
                return Err(Error::CellNotFound(cell.to_string()));
            }
            if cell.dim() != d - 1 {
                return Err(Error::InvalidRootedForest(format!(
                    "cell {} is not at the level below the top",
                    cell
                )));
            }
        }
        let n = k.n_cells(d - 1);
        if n - root.len() != forest.len() {
            return Err(Error::InvalidRootedForest(format!(
                "{} forest cells need {} non-root cells, but the root leaves {}",
                forest.len(),
                forest.len(),
                n - root.len()
            )));
        }
        let root_idx: Vec<usize> = root.iter().map(|c| k.index_of(c).unwrap()).collect();
        let cobase_rows: Vec<usize> = (0..n).filter(|i| !root_idx.contains(i)).collect();
        let cobase: Vec<Cell> = cobase_rows
            .iter()
            .map(|&i| k.cells(d - 1)[i].clone())
            .collect();
        let forest_cols: Vec<usize> = forest.iter().map(|c| k.index_of(c).unwrap()).collect();
        let block = boundary_matrix(k, d)?.submatrix(&cobase_rows, &forest_cols);
        let det = determinant(&block)?;
        if det.is_zero() {
            return Err(Error::InvalidRootedForest(
                "the root complement is singular against the forest".into(),
            ));
        }
        Ok(RootedForest {
            forest,
            root,
            cobase,
            det,
        })
    }

    /// Forest cells F, canonical order.
    pub fn forest(&self) -> &[Cell] {
        &self.forest
    }

    /// Root cells R, canonical order.
    pub fn root(&self) -> &[Cell] {
        &self.root
    }

    /// The root complement R̄, canonical order.
    pub fn cobase(&self) -> &[Cell] {
        &self.cobase
    }

    /// `det ∂[R̄, F]` with rows and columns in canonical order.
    pub fn det(&self) -> &BigInt {
        &self.det
    }

    /// The forest's contribution to its λ-coefficient: det².
    pub fn weight(&self) -> BigInt {
        &self.det * &self.det
    }
}

/// Whether the given top cells carry linearly independent boundary columns.
pub fn is_forest(k: &SimplicialComplex, cells: &[Cell]) -> Result<bool> {
    let d = k.dim();
    if d == 0 {
        return Err(Error::DimensionOutOfRange { d: 0, max: 0 });
    }
    let mut sorted = cells.to_vec();
    sorted.sort();
    for w in sorted.windows(2) {
        if w[0] == w[1] {
            return Err(Error::NotAForest(format!("cell {} repeated", w[0])));
        }
    }
    let mut cols = Vec::with_capacity(cells.len());
    for cell in &sorted {
        if !k.contains(cell) {
            return Err(Error::CellNotFound(cell.to_string()));
        }
        if cell.dim() != d {
            return Err(Error::NotAForest(format!("cell {cell} is not a top cell")));
        }
        cols.push(k.index_of(cell).unwrap());
    }
    if cells.is_empty() {
        return Ok(true);
    }
    let rows: Vec<usize> = (0..k.n_cells(d - 1)).collect();
    let block = boundary_matrix(k, d)?.submatrix(&rows, &cols);
    Ok(crate::linalg::rank(&block) == cols.len())
}

struct Overflow;

/// Exact scalar for the incremental echelon. Method names avoid clashing
/// with the `num_traits` methods on `BigInt`.
trait Num: Clone {
    fn from_sign(s: i32) -> Self;
    fn is_null(&self) -> bool;
    /// `(a*b - c*d) / div`, with the division known exact; `None` on
    /// overflow.
    fn fused(a: &Self, b: &Self, c: &Self, d: &Self, div: &Self) -> Option<Self>;
    fn to_bigint(&self) -> BigInt;
}

impl Num for i128 {
    fn from_sign(s: i32) -> Self {
        s as i128
    }
    fn is_null(&self) -> bool {
        *self == 0
    }
    fn fused(a: &Self, b: &Self, c: &Self, d: &Self, div: &Self) -> Option<Self> {
        let t = a.checked_mul(*b)?.checked_sub(c.checked_mul(*d)?)?;
        debug_assert!(t % div == 0, "fraction-free division not exact");
        Some(t / div)
    }
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Num for BigInt {
    fn from_sign(s: i32) -> Self {
        BigInt::from(s)
    }
    fn is_null(&self) -> bool {
        Zero::is_zero(self)
    }
    fn fused(a: &Self, b: &Self, c: &Self, d: &Self, div: &Self) -> Option<Self> {
        let t = a * b - c * d;
        debug_assert!(Zero::is_zero(&(&t % div)), "fraction-free division not exact");
        Some(t / div)
    }
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
}

/// Incremental fraction-free echelon. Each accepted vector is reduced
/// against the earlier pivots; its entries are then minors of the original
/// matrix, so divisions stay exact and the last pivot of a full square
/// block is its determinant up to the pivot-column permutation sign.
/// Supports O(1) undo because earlier rows are never rewritten.
struct Echelon<E> {
    rows: Vec<(usize, Vec<E>)>,
}

impl<E: Num> Echelon<E> {
    fn new() -> Self {
        Echelon { rows: Vec::new() }
    }

    /// Reduces `v` and appends it; `Ok(false)` means `v` was dependent.
    fn try_push(&mut self, mut v: Vec<E>) -> std::result::Result<bool, Overflow> {
        for i in 0..self.rows.len() {
            let prev = if i == 0 {
                E::from_sign(1)
            } else {
                let (pp, pr) = &self.rows[i - 1];
                pr[*pp].clone()
            };
            let p = self.rows[i].0;
            let pivot = self.rows[i].1[p].clone();
            let factor = v[p].clone();
            for (vj, rj) in v.iter_mut().zip(self.rows[i].1.iter()) {
                *vj = E::fused(&pivot, vj, &factor, rj, &prev).ok_or(Overflow)?;
            }
        }
        match v.iter().position(|x| !x.is_null()) {
            Some(p) => {
                self.rows.push((p, v));
                Ok(true)
            }
            None => Ok(false),
        }
    }

    fn pop(&mut self) {
        self.rows.pop();
    }

    /// Determinant of the current square block in arrival-row and
    /// canonical-column order: last pivot times the pivot permutation sign.
    fn block_det(&self) -> BigInt {
        let Some((p, row)) = self.rows.last() else {
            return BigInt::one();
        };
        let mut inversions = 0usize;
        let pivots: Vec<usize> = self.rows.iter().map(|(p, _)| *p).collect();
        for i in 0..pivots.len() {
            for j in i + 1..pivots.len() {
                if pivots[i] > pivots[j] {
                    inversions += 1;
                }
            }
        }
        let det = row[*p].to_bigint();
        if inversions % 2 == 1 {
            -det
        } else {
            det
        }
    }
}

struct ForestCtx<'a> {
    k: &'a SimplicialComplex,
    d: usize,
    n: usize,
    m: usize,
    /// Dense sign column per top cell.
    cols: Vec<Vec<i32>>,
    /// Facet rows per top cell, ascending.
    col_rows: Vec<Vec<usize>>,
}

impl<'a> ForestCtx<'a> {
    fn build(k: &'a SimplicialComplex, guard: &Guard) -> Result<Self> {
        let d = k.dim();
        if d == 0 {
            return Err(Error::DimensionOutOfRange { d: 0, max: 0 });
        }
        guard.check_incidence(k, d)?;
        let n = k.n_cells(d - 1);
        let m = k.n_cells(d);
        let mut cols = vec![vec![0i32; n]; m];
        let mut col_rows = vec![Vec::new(); m];
        for (c, facets) in k.facet_indices(d).iter().enumerate() {
            for &(r, s) in facets {
                cols[c][r] = s;
                col_rows[c].push(r);
            }
            col_rows[c].sort_unstable();
        }
        Ok(ForestCtx {
            k,
            d,
            n,
            m,
            cols,
            col_rows,
        })
    }

    /// Whether every echelon entry provably fits in `i128`: minors of a
    /// matrix with d+1 entries of ±1 per column obey the Hadamard bound
    /// `(d+1)^(s/2)`, and the fused update squares it.
    fn fits_i128(&self) -> bool {
        let s = self.n.min(self.m) as f64;
        s * ((self.d + 1) as f64).log2() <= 124.0
    }

    fn make_rooted(&self, fcols: &[usize], rbar: &[usize], det: BigInt) -> RootedForest {
        let forest = fcols
            .iter()
            .map(|&c| self.k.cells(self.d)[c].clone())
            .collect();
        let mut in_rbar = vec![false; self.n];
        for &r in rbar {
            in_rbar[r] = true;
        }
        let mut root = Vec::with_capacity(self.n - rbar.len());
        let mut cobase = Vec::with_capacity(rbar.len());
        for (r, cell) in self.k.cells(self.d - 1).iter().enumerate() {
            if in_rbar[r] {
                cobase.push(cell.clone());
            } else {
                root.push(cell.clone());
            }
        }
        RootedForest {
            forest,
            root,
            cobase,
            det,
        }
    }
}

fn roots_dfs<E: Num>(
    ctx: &ForestCtx,
    fcols: &[usize],
    next_row: usize,
    ech: &mut Echelon<E>,
    rbar: &mut Vec<usize>,
    visit: &mut dyn FnMut(RootedForest),
) -> std::result::Result<(), Overflow> {
    if rbar.len() == fcols.len() {
        visit(ctx.make_rooted(fcols, rbar, ech.block_det()));
        return Ok(());
    }
    for r in next_row..ctx.n {
        if rbar.len() + (ctx.n - r) < fcols.len() {
            break;
        }
        let v: Vec<E> = fcols.iter().map(|&c| E::from_sign(ctx.cols[c][r])).collect();
        if ech.try_push(v)? {
            rbar.push(r);
            roots_dfs(ctx, fcols, r + 1, ech, rbar, visit)?;
            rbar.pop();
            ech.pop();
        }
    }
    Ok(())
}

fn forests_dfs<E: Num>(
    ctx: &ForestCtx,
    next_col: usize,
    ech: &mut Echelon<E>,
    fcols: &mut Vec<usize>,
    target: Option<usize>,
    visit: &mut dyn FnMut(RootedForest),
) -> std::result::Result<(), Overflow> {
    let at_target = target.map_or(true, |t| fcols.len() == t);
    if at_target {
        let mut rows_ech = Echelon::<E>::new();
        let mut rbar = Vec::new();
        roots_dfs(ctx, fcols, 0, &mut rows_ech, &mut rbar, visit)?;
        if target.is_some() {
            return Ok(());
        }
    }
    for c in next_col..ctx.m {
        if let Some(t) = target {
            if fcols.len() + (ctx.m - c) < t {
                break;
            }
        }
        let v: Vec<E> = ctx.cols[c].iter().map(|&s| E::from_sign(s)).collect();
        if ech.try_push(v)? {
            fcols.push(c);
            forests_dfs(ctx, c + 1, ech, fcols, target, visit)?;
            fcols.pop();
            ech.pop();
        }
    }
    Ok(())
}

fn run_enumeration(
    ctx: &ForestCtx,
    root_size: Option<usize>,
    visit: &mut dyn FnMut(RootedForest),
) -> Result<()> {
    let target = match root_size {
        Some(i) if i > ctx.n => return Ok(()),
        Some(i) => Some(ctx.n - i),
        None => None,
    };
    if ctx.fits_i128() {
        let mut ech = Echelon::<i128>::new();
        let mut fcols = Vec::new();
        match forests_dfs(ctx, 0, &mut ech, &mut fcols, target, visit) {
            Ok(()) => Ok(()),
            Err(Overflow) => unreachable!("Hadamard bound guarantees i128 exactness"),
        }
    } else {
        let mut ech = Echelon::<BigInt>::new();
        let mut fcols = Vec::new();
        match forests_dfs(ctx, 0, &mut ech, &mut fcols, target, visit) {
            Ok(()) => Ok(()),
            Err(Overflow) => unreachable!("BigInt arithmetic cannot overflow"),
        }
    }
}

/// Streams every rooted forest at the top level, forests in lexicographic
/// canonical order and root complements likewise; `root_size` restricts to
/// `|R| = i`.
pub fn visit_rooted_forests(
    k: &SimplicialComplex,
    guard: &Guard,
    root_size: Option<usize>,
    mut visit: impl FnMut(RootedForest),
) -> Result<()> {
    let ctx = ForestCtx::build(k, guard)?;
    run_enumeration(&ctx, root_size, &mut visit)
}

/// All rooted forests at the top level.
pub fn enumerate_rooted_forests(k: &SimplicialComplex, guard: &Guard) -> Result<Vec<RootedForest>> {
    let mut out = Vec::new();
    visit_rooted_forests(k, guard, None, |rf| out.push(rf))?;
    Ok(out)
}

/// Rooted forests with exactly `i` roots.
pub fn rooted_forests_with_root_size(
    k: &SimplicialComplex,
    guard: &Guard,
    i: usize,
) -> Result<Vec<RootedForest>> {
    let mut out = Vec::new();
    visit_rooted_forests(k, guard, Some(i), |rf| out.push(rf))?;
    Ok(out)
}

/// Free-pair peeling: repeatedly match the lowest non-root cell that has
/// exactly one remaining coface in the forest. Returns the matched pairs
/// as (row, col) cell indices when everything is consumed.
fn peel(
    fcols: &[usize],
    rbar: &[usize],
    col_rows: &[Vec<usize>],
) -> Option<Vec<(usize, usize)>> {
    let tail_slot: HashMap<usize, usize> =
        rbar.iter().enumerate().map(|(i, &r)| (r, i)).collect();
    let head_tails: Vec<Vec<usize>> = fcols
        .iter()
        .map(|&c| {
            col_rows[c]
                .iter()
                .filter_map(|r| tail_slot.get(r).copied())
                .collect()
        })
        .collect();
    let mut tail_heads: Vec<Vec<usize>> = vec![Vec::new(); rbar.len()];
    for (h, tails) in head_tails.iter().enumerate() {
        for &t in tails {
            tail_heads[t].push(h);
        }
    }
    let mut live_head = vec![true; fcols.len()];
    let mut live_tail = vec![true; rbar.len()];
    let mut count: Vec<usize> = tail_heads.iter().map(Vec::len).collect();
    let mut pairs = Vec::with_capacity(fcols.len());
    while let Some(t) = (0..rbar.len()).find(|&t| live_tail[t] && count[t] == 1) {
        let h = *tail_heads[t]
            .iter()
            .find(|&&h| live_head[h])
            .expect("count said one live coface");
        pairs.push((rbar[t], fcols[h]));
        live_tail[t] = false;
        live_head[h] = false;
        for &t2 in &head_tails[h] {
            if live_tail[t2] {
                count[t2] -= 1;
            }
        }
    }
    live_tail.iter().all(|&l| !l).then_some(pairs)
}

fn rooted_forest_indices(
    k: &SimplicialComplex,
    rf: &RootedForest,
) -> Result<(Vec<usize>, Vec<usize>)> {
    let mut fcols = Vec::with_capacity(rf.forest.len());
    for cell in &rf.forest {
        fcols.push(
            k.index_of(cell)
                .ok_or_else(|| Error::CellNotFound(cell.to_string()))?,
        );
    }
    let mut rbar = Vec::with_capacity(rf.cobase.len());
    for cell in &rf.cobase {
        rbar.push(
            k.index_of(cell)
                .ok_or_else(|| Error::CellNotFound(cell.to_string()))?,
        );
    }
    Ok((fcols, rbar))
}

/// Whether the rooted forest collapses onto its root through free pairs.
pub fn collapses_to_root(k: &SimplicialComplex, rf: &RootedForest) -> Result<bool> {
    Ok(acyclic_fitting_orientation(k, rf)?.is_some())
}

/// The unique acyclic way to match every non-root cell with a forest
/// coface, when one exists: the pairing found by free-pair peeling.
pub fn acyclic_fitting_orientation(
    k: &SimplicialComplex,
    rf: &RootedForest,
) -> Result<Option<VectorField>> {
    let d = k.dim();
    let (fcols, rbar) = rooted_forest_indices(k, rf)?;
    let col_rows: Vec<Vec<usize>> = k
        .facet_indices(d)
        .iter()
        .map(|facets| facets.iter().map(|&(r, _)| r).collect())
        .collect();
    match peel(&fcols, &rbar, &col_rows) {
        None => Ok(None),
        Some(pairs) => {
            let cells: Vec<(Cell, Cell)> = pairs
                .into_iter()
                .map(|(r, c)| (k.cells(d - 1)[r].clone(), k.cells(d)[c].clone()))
                .collect();
            Ok(Some(VectorField::new(k, cells)?))
        }
    }
}

/// The rooted forest a top-level acyclic pairing leaves behind: heads form
/// the forest, unmatched cells one level below form the root.
pub fn remainder(k: &SimplicialComplex, vf: &VectorField) -> Result<RootedForest> {
    let d = k.dim();
    for (tail, head) in vf.pairs() {
        if head.dim() != d {
            return Err(Error::InvalidRootedForest(format!(
                "matched pair ({tail}, {head}) is not at the top level"
            )));
        }
    }
    if !vf.is_acyclic(k)? {
        return Err(Error::CyclicMatching);
    }
    let forest: Vec<Cell> = vf.pairs().iter().map(|(_, h)| h.clone()).collect();
    let tails: Vec<&Cell> = vf.pairs().iter().map(|(t, _)| t).collect();
    let root: Vec<Cell> = k
        .cells(d - 1)
        .iter()
        .filter(|c| !tails.contains(c))
        .cloned()
        .collect();
    RootedForest::new(k, forest, root)
}

/// Order of the homology of the forest relative to its root: the cochain
/// block ∂[R̄, F] has finite cokernel of order |det|, recomputed through
/// the Smith normal form as a cross-check.
pub fn relative_homology_order(k: &SimplicialComplex, rf: &RootedForest) -> Result<BigInt> {
    let d = k.dim();
    let (fcols, rbar) = rooted_forest_indices(k, rf)?;
    let block = boundary_matrix(k, d)?.submatrix(&rbar, &fcols);
    let snf = smith_normal_form(&block);
    let order: BigInt = snf.factors.iter().product();
    assert_eq!(
        order,
        rf.det.abs(),
        "invariant factor product must match the certifying determinant"
    );
    Ok(order)
}

/// Totals of one full enumeration pass: squared determinants by root size,
/// split into the collapsing and non-collapsing (defect) parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForestCensus {
    /// `Σ det²` over all rooted forests with `|R| = i`.
    pub by_root_size: Vec<BigInt>,
    /// Same sum restricted to collapsing forests.
    pub collapsing: Vec<BigInt>,
    /// Same sum restricted to non-collapsing forests: the defect ε_i.
    pub defect: Vec<BigInt>,
    pub tails: usize,
    pub heads: usize,
    pub dim: usize,
}

impl ForestCensus {
    /// `Σ_i (Σ det²) λ^i`, which Cauchy–Binet equates with `det(Δ + λI)`.
    pub fn polynomial(&self) -> IntegerPolynomial {
        IntegerPolynomial::from_coeffs(self.by_root_size.clone())
    }

    pub fn collapsing_polynomial(&self) -> IntegerPolynomial {
        IntegerPolynomial::from_coeffs(self.collapsing.clone())
    }

    pub fn defect_polynomial(&self) -> IntegerPolynomial {
        IntegerPolynomial::from_coeffs(self.defect.clone())
    }
}

/// Enumerates every rooted forest once, accumulating squared determinants
/// by root size and splitting them by collapsibility.
pub fn forest_census(k: &SimplicialComplex, guard: &Guard) -> Result<ForestCensus> {
    let ctx = ForestCtx::build(k, guard)?;
    let n = ctx.n;
    let mut by_root_size = vec![BigInt::zero(); n + 1];
    let mut collapsing = vec![BigInt::zero(); n + 1];
    let mut defect = vec![BigInt::zero(); n + 1];
    {
        let col_rows = &ctx.col_rows;
        let k_ref = ctx.k;
        let mut visit = |rf: RootedForest| {
            let i = rf.root.len();
            let w = rf.weight();
            by_root_size[i] += &w;
            let fcols: Vec<usize> = rf
                .forest
                .iter()
                .map(|c| k_ref.index_of(c).unwrap())
                .collect();
            let rbar: Vec<usize> = rf
                .cobase
                .iter()
                .map(|c| k_ref.index_of(c).unwrap())
                .collect();
            if peel(&fcols, &rbar, col_rows).is_some() {
                collapsing[i] += &w;
            } else {
                defect[i] += &w;
            }
        };
        run_enumeration(&ctx, None, &mut visit)?;
    }
    Ok(ForestCensus {
        by_root_size,
        collapsing,
        defect,
        tails: ctx.n,
        heads: ctx.m,
        dim: ctx.d,
    })
}

/// The defect sums ε_i alone, indexed by root size.
pub fn defects(k: &SimplicialComplex, guard: &Guard) -> Result<Vec<BigInt>> {
    Ok(forest_census(k, guard)?.defect)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins::builtin;
    use crate::linalg::{char_poly_shifted, laplacian};
    use crate::morse::{gradient_census, gradient_vector_fields, CensusOptions};

    fn cell(v: &[u32]) -> Cell {
        Cell::new(v.to_vec()).unwrap()
    }

    fn ints(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn cycle_4_forest_polynomial_matches_char_poly() {
        let c4 = builtin("cycle", Some(4)).unwrap();
        let census = forest_census(&c4, &Guard::default()).unwrap();
        assert_eq!(census.by_root_size, ints(&[0, 16, 20, 8, 1]));
        assert_eq!(census.defect, ints(&[0, 0, 0, 0, 0]));
        let charpoly = char_poly_shifted(&laplacian(&c4, 1).unwrap()).unwrap();
        assert_eq!(census.polynomial(), charpoly);
    }

    #[test]
    fn star_3_forest_polynomial() {
        let star = builtin("star", Some(3)).unwrap();
        let census = forest_census(&star, &Guard::default()).unwrap();
        assert_eq!(census.by_root_size, ints(&[0, 4, 9, 6, 1]));
        assert_eq!(census.defect, ints(&[0, 0, 0, 0, 0]));
    }

    #[test]
    fn triangle_interior_forests() {
        let tri = builtin("simplex", Some(2)).unwrap();
        let all = enumerate_rooted_forests(&tri, &Guard::default()).unwrap();
        // Empty forest with every edge a root, plus the full triangle with
        // each 2-edge complement certifying it.
        assert_eq!(all.len(), 4);
        assert!(all[0].forest().is_empty());
        assert_eq!(all[0].root().len(), 3);
        assert_eq!(all[0].det(), &BigInt::one());
        for rf in &all[1..] {
            assert_eq!(rf.forest(), &[cell(&[0, 1, 2])]);
            assert_eq!(rf.root().len(), 2);
            assert_eq!(rf.weight(), BigInt::one());
        }
        let census = forest_census(&tri, &Guard::default()).unwrap();
        assert_eq!(census.by_root_size, ints(&[0, 0, 3, 1]));
    }

    #[test]
    fn moebius_defect_sits_at_lambda_5() {
        let k = builtin("moebius", None).unwrap();
        let census = forest_census(&k, &Guard::default()).unwrap();
        assert_eq!(
            census.by_root_size,
            ints(&[0, 0, 0, 0, 0, 125, 275, 225, 85, 15, 1])
        );
        assert_eq!(
            census.collapsing,
            ints(&[0, 0, 0, 0, 0, 121, 275, 225, 85, 15, 1])
        );
        assert_eq!(census.defect, ints(&[0, 0, 0, 0, 0, 4, 0, 0, 0, 0, 0]));
        let charpoly = char_poly_shifted(&laplacian(&k, 2).unwrap()).unwrap();
        assert_eq!(census.polynomial(), charpoly);
        let gradient = gradient_census(&k).unwrap();
        assert_eq!(census.collapsing_polynomial(), gradient.polynomial());
    }

    #[test]
    fn enumerated_determinants_match_constructor() {
        for (name, n) in [("cycle", Some(4)), ("moebius", None)] {
            let k = builtin(name, n).unwrap();
            for rf in enumerate_rooted_forests(&k, &Guard::default()).unwrap() {
                let rebuilt =
                    RootedForest::new(&k, rf.forest().to_vec(), rf.root().to_vec()).unwrap();
                assert_eq!(rebuilt.det(), rf.det(), "{name}: {:?}", rf.forest());
                assert_eq!(rebuilt.cobase(), rf.cobase());
            }
        }
    }

    #[test]
    fn bigint_mode_agrees_with_i128_mode() {
        let k = builtin("moebius", None).unwrap();
        let ctx = ForestCtx::build(&k, &Guard::default()).unwrap();
        assert!(ctx.fits_i128());
        let mut fast = Vec::new();
        run_enumeration(&ctx, None, &mut |rf| fast.push(rf)).unwrap();
        let mut big = Vec::new();
        let mut ech = Echelon::<BigInt>::new();
        let mut fcols = Vec::new();
        forests_dfs(&ctx, 0, &mut ech, &mut fcols, None, &mut |rf| {
            big.push(rf)
        })
        .unwrap_or_else(|_| unreachable!());
        assert_eq!(fast, big);
    }

    #[test]
    fn root_size_filter_matches_full_enumeration() {
        let c4 = builtin("cycle", Some(4)).unwrap();
        let all = enumerate_rooted_forests(&c4, &Guard::default()).unwrap();
        for i in 0..=4 {
            let filtered = rooted_forests_with_root_size(&c4, &Guard::default(), i).unwrap();
            let expected: Vec<&RootedForest> =
                all.iter().filter(|rf| rf.root().len() == i).collect();
            assert_eq!(filtered.len(), expected.len(), "root size {i}");
            for (a, b) in filtered.iter().zip(expected) {
                assert_eq!(a, b);
            }
        }
        assert!(rooted_forests_with_root_size(&c4, &Guard::default(), 9)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn graph_roots_hit_each_component_once() {
        for (name, n) in [("cycle", Some(4)), ("path", Some(4)), ("star", Some(3))] {
            let g = builtin(name, n).unwrap();
            let vertices = g.n_cells(0);
            for rf in enumerate_rooted_forests(&g, &Guard::default()).unwrap() {
                // Union-find over the forest edges.
                let mut parent: Vec<usize> = (0..vertices).collect();
                fn find(parent: &mut Vec<usize>, x: usize) -> usize {
                    if parent[x] != x {
                        let r = find(parent, parent[x]);
                        parent[x] = r;
                    }
                    parent[x]
                }
                for e in rf.forest() {
                    let a = g.index_of(&cell(&[e.vertices()[0]])).unwrap();
                    let b = g.index_of(&cell(&[e.vertices()[1]])).unwrap();
                    let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                    parent[ra] = rb;
                }
                let mut roots_per_comp: HashMap<usize, usize> = HashMap::new();
                for r in rf.root() {
                    let v = g.index_of(r).unwrap();
                    *roots_per_comp.entry(find(&mut parent, v)).or_insert(0) += 1;
                }
                let mut comps: Vec<usize> = (0..vertices).map(|v| find(&mut parent, v)).collect();
                comps.sort_unstable();
                comps.dedup();
                assert_eq!(roots_per_comp.len(), comps.len(), "{name}");
                assert!(roots_per_comp.values().all(|&c| c == 1), "{name}");
                assert_eq!(rf.weight(), BigInt::one(), "{name}: graph forests are unimodular");
            }
        }
    }

    #[test]
    fn rooted_forest_validation() {
        let c4 = builtin("cycle", Some(4)).unwrap();
        let tree = vec![cell(&[0, 1]), cell(&[1, 2]), cell(&[2, 3])];
        let ok = RootedForest::new(&c4, tree.clone(), vec![cell(&[0])]).unwrap();
        assert_eq!(ok.det().abs(), BigInt::one());
        assert_eq!(ok.cobase(), &[cell(&[1]), cell(&[2]), cell(&[3])]);

        let err = RootedForest::new(&c4, tree.clone(), vec![]).unwrap_err();
        assert!(err.to_string().starts_with("invalid rooted forest:"), "{err}");

        let err =
            RootedForest::new(&c4, vec![cell(&[0, 1])], vec![cell(&[2]), cell(&[3])]).unwrap_err();
        assert!(matches!(err, Error::InvalidRootedForest(_)));

        // Root omits a vertex outside the single edge: singular block.
        let err = RootedForest::new(
            &c4,
            vec![cell(&[0, 1])],
            vec![cell(&[0]), cell(&[1]), cell(&[3])],
        )
        .unwrap_err();
        assert_eq!(
            err.to_string(),
            "invalid rooted forest: the root complement is singular against the forest"
        );

        let ok = RootedForest::new(
            &c4,
            vec![cell(&[0, 1])],
            vec![cell(&[1]), cell(&[2]), cell(&[3])],
        )
        .unwrap();
        assert_eq!(ok.det(), &BigInt::from(-1));
    }

    #[test]
    fn is_forest_pins() {
        let c4 = builtin("cycle", Some(4)).unwrap();
        let edges: Vec<Cell> = c4.cells(1).to_vec();
        assert!(!is_forest(&c4, &edges).unwrap());
        assert!(is_forest(&c4, &edges[..3]).unwrap());
        assert!(is_forest(&c4, &[]).unwrap());
        assert!(matches!(
            is_forest(&c4, &[cell(&[0])]),
            Err(Error::NotAForest(_))
        ));

        let moebius = builtin("moebius", None).unwrap();
        let tops: Vec<Cell> = moebius.cells(2).to_vec();
        assert!(is_forest(&moebius, &tops).unwrap());
    }

    #[test]
    fn peeling_collapses_spanning_tree() {
        let c4 = builtin("cycle", Some(4)).unwrap();
        let rf = RootedForest::new(
            &c4,
            vec![cell(&[0, 1]), cell(&[1, 2]), cell(&[2, 3])],
            vec![cell(&[0])],
        )
        .unwrap();
        assert!(collapses_to_root(&c4, &rf).unwrap());
        let vf = acyclic_fitting_orientation(&c4, &rf).unwrap().unwrap();
        assert_eq!(vf.len(), 3);
        assert!(vf.is_acyclic(&c4).unwrap());
        // Every tail is a non-root cell, every head a forest cell.
        for (tail, head) in vf.pairs() {
            assert!(rf.cobase().contains(tail));
            assert!(rf.forest().contains(head));
        }
    }

    #[test]
    fn remainder_round_trip() {
        let c4 = builtin("cycle", Some(4)).unwrap();
        for vf in gradient_vector_fields(&c4, &CensusOptions::default()).unwrap() {
            let rf = remainder(&c4, &vf).unwrap();
            assert_eq!(rf.forest().len(), vf.len());
            assert_eq!(rf.det().abs(), BigInt::one());
            assert!(collapses_to_root(&c4, &rf).unwrap());
            let back = acyclic_fitting_orientation(&c4, &rf).unwrap().unwrap();
            assert_eq!(back, vf);
        }
    }

    #[test]
    fn collapsing_forests_biject_with_pairings() {
        for (name, n) in [
            ("cycle", Some(4)),
            ("simplex", Some(2)),
            ("moebius", None),
        ] {
            let k = builtin(name, n).unwrap();
            let forests = enumerate_rooted_forests(&k, &Guard::default()).unwrap();
            let mut from_forests: Vec<VectorField> = Vec::new();
            for rf in &forests {
                if let Some(vf) = acyclic_fitting_orientation(&k, rf).unwrap() {
                    from_forests.push(vf);
                }
            }
            let mut fields =
                gradient_vector_fields(&k, &CensusOptions::default()).unwrap();
            let sort_key = |vf: &VectorField| format!("{:?}", vf.pairs());
            from_forests.sort_by_key(sort_key);
            fields.sort_by_key(sort_key);
            assert_eq!(from_forests, fields, "{name}");
        }
    }

    #[test]
    fn relative_homology_orders() {
        let c4 = builtin("cycle", Some(4)).unwrap();
        for rf in enumerate_rooted_forests(&c4, &Guard::default()).unwrap() {
            assert_eq!(relative_homology_order(&c4, &rf).unwrap(), BigInt::one());
        }

        let moebius = builtin("moebius", None).unwrap();
        let mut seen_order_two = false;
        for rf in enumerate_rooted_forests(&moebius, &Guard::default()).unwrap() {
            let order = relative_homology_order(&moebius, &rf).unwrap();
            assert_eq!(order, rf.det().abs());
            if !collapses_to_root(&moebius, &rf).unwrap() && order == BigInt::from(2) {
                seen_order_two = true;
            }
        }
        assert!(seen_order_two, "the defect forests carry relative torsion");
    }

    #[test]
    fn remainder_rejects_bad_matchings() {
        let c3 = builtin("cycle", Some(3)).unwrap();
        let rotation = VectorField::new(
            &c3,
            vec![
                (cell(&[0]), cell(&[0, 1])),
                (cell(&[1]), cell(&[1, 2])),
                (cell(&[2]), cell(&[0, 2])),
            ],
        )
        .unwrap();
        assert!(matches!(
            remainder(&c3, &rotation),
            Err(Error::CyclicMatching)
        ));

        let tri = builtin("simplex", Some(2)).unwrap();
        let low = VectorField::new(&tri, vec![(cell(&[0]), cell(&[0, 1]))]).unwrap();
        assert!(matches!(
            remainder(&tri, &low),
            Err(Error::InvalidRootedForest(_))
        ));
    }
}
