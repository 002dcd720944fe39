//! Discrete vector fields, gradient censuses, and discrete Morse functions.
//!
//! A vector field pairs cells with cofaces of one dimension higher, no cell
//! appearing twice. A pairing restricted to the top two levels of a complex
//! is the combinatorial object whose census this module counts: for each ℓ,
//! how many acyclic pairings leave exactly ℓ top cells unpaired. Those
//! counts are the candidate coefficients of `det(Δ_d + λI)`.
//!
//! Acyclicity is decided on the heads: orient head τi to head τj when the
//! cell paired into τj is a facet of τi. A pairing admits a closed
//! alternating path exactly when this digraph has a directed cycle, and the
//! check stays within one dimension level because alternating paths never
//! leave one.

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::complex::{Cell, SimplicialComplex};
use crate::error::{Error, Result};
use crate::guard::Guard;
use crate::linalg::IntegerPolynomial;

/// A discrete vector field: disjoint cell pairs (tail, head) with each tail
/// a facet of its head. Pairs are kept sorted by tail in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorField {
    pairs: Vec<(Cell, Cell)>,
}

/// A vector field whose pairs all sit at the top two levels.
pub type TopMatching = VectorField;

impl VectorField {
    pub fn empty() -> Self {
        VectorField { pairs: Vec::new() }
    }

    /// Validates the pairs against the complex: every cell present, every
    /// pair a codimension-1 incidence, no cell used twice.
    pub fn new(k: &SimplicialComplex, pairs: Vec<(Cell, Cell)>) -> Result<Self> {
        for (tail, head) in &pairs {
            for cell in [tail, head] {
                if !k.contains(cell) {
                    return Err(Error::CellNotFound(cell.to_string()));
                }
            }
            if !tail.is_facet_of(head) {
                return Err(Error::NotIncident(tail.to_string(), head.to_string()));
            }
        }
        let mut seen: HashMap<&Cell, ()> = HashMap::new();
        for (tail, head) in &pairs {
            for cell in [tail, head] {
                if seen.insert(cell, ()).is_some() {
                    return Err(Error::DuplicateCell(cell.to_string()));
                }
            }
        }
        let mut pairs = pairs;
        pairs.sort_by(|a, b| a.0.cmp(&b.0));
        Ok(VectorField { pairs })
    }

    fn from_sorted_pairs(mut pairs: Vec<(Cell, Cell)>) -> Self {
        pairs.sort_by(|a, b| a.0.cmp(&b.0));
        VectorField { pairs }
    }

    pub fn pairs(&self) -> &[(Cell, Cell)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Pairs as raw vertex lists, the JSON-facing form.
    pub fn pairs_as_vertex_lists(&self) -> Vec<(Vec<u32>, Vec<u32>)> {
        self.pairs
            .iter()
            .map(|(t, h)| (t.vertices().to_vec(), h.vertices().to_vec()))
            .collect()
    }

    /// Whether the field admits no closed alternating path in `k`.
    pub fn is_acyclic(&self, k: &SimplicialComplex) -> Result<bool> {
        // Group heads by dimension; alternating paths are level-homogeneous.
        let mut by_level: HashMap<usize, Vec<(usize, usize)>> = HashMap::new();
        for (tail, head) in &self.pairs {
            let d = head.dim();
            let t = k
                .index_of(tail)
                .ok_or_else(|| Error::CellNotFound(tail.to_string()))?;
            let h = k
                .index_of(head)
                .ok_or_else(|| Error::CellNotFound(head.to_string()))?;
            by_level.entry(d).or_default().push((t, h));
        }
        for (d, level_pairs) in by_level {
            let mut tail_to_slot: HashMap<usize, usize> = HashMap::new();
            for (slot, &(t, _)) in level_pairs.iter().enumerate() {
                tail_to_slot.insert(t, slot);
            }
            // Heads digraph: slot a -> slot b iff tail(b) is a facet of head(a).
            let n = level_pairs.len();
            let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
            let mut indeg = vec![0usize; n];
            for (a, &(_, h)) in level_pairs.iter().enumerate() {
                for &(facet, _) in &k.facet_indices(d)[h] {
                    if let Some(&b) = tail_to_slot.get(&facet) {
                        if b != a {
                            out[a].push(b);
                            indeg[b] += 1;
                        }
                    }
                }
            }
            // Kahn: a cycle survives the peel.
            let mut queue: Vec<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
            let mut seen = 0usize;
            while let Some(a) = queue.pop() {
                seen += 1;
                for &b in &out[a] {
                    indeg[b] -= 1;
                    if indeg[b] == 0 {
                        queue.push(b);
                    }
                }
            }
            if seen != n {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Cells of `k` not used by any pair, in canonical order.
    pub fn critical_cells(&self, k: &SimplicialComplex) -> Vec<Cell> {
        let used: HashMap<&Cell, ()> = self
            .pairs
            .iter()
            .flat_map(|(t, h)| [(t, ()), (h, ())])
            .collect();
        k.all_cells()
            .filter(|c| !used.contains_key(c))
            .cloned()
            .collect()
    }
}

/// A discrete Morse function: one integer per cell, stored in canonical
/// order per dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorseFunction {
    values: Vec<Vec<i64>>,
}

impl MorseFunction {
    /// Builds a function by evaluating `f` on every cell.
    pub fn from_fn(k: &SimplicialComplex, f: impl Fn(&Cell) -> i64) -> Self {
        let values = (0..=k.dim())
            .map(|d| k.cells(d).iter().map(&f).collect())
            .collect();
        MorseFunction { values }
    }

    pub fn value(&self, k: &SimplicialComplex, cell: &Cell) -> Result<i64> {
        let idx = k
            .index_of(cell)
            .ok_or_else(|| Error::CellNotFound(cell.to_string()))?;
        Ok(self.values[cell.dim()][idx])
    }

    fn counts_at(&self, k: &SimplicialComplex, d: usize, idx: usize) -> (usize, usize) {
        let v = self.values[d][idx];
        let mut up = 0usize;
        if d < k.dim() {
            for &h in &k.coface_indices(d)[idx] {
                if self.values[d + 1][h] <= v {
                    up += 1;
                }
            }
        }
        let mut down = 0usize;
        if d > 0 {
            for &(f, _) in &k.facet_indices(d)[idx] {
                if self.values[d - 1][f] >= v {
                    down += 1;
                }
            }
        }
        (up, down)
    }

    /// Whether every cell has at most one non-increasing coface and at most
    /// one non-decreasing facet.
    pub fn is_discrete_morse(&self, k: &SimplicialComplex) -> bool {
        (0..=k.dim()).all(|d| {
            (0..k.n_cells(d)).all(|i| {
                let (up, down) = self.counts_at(k, d, i);
                up <= 1 && down <= 1
            })
        })
    }

    /// Whether no cell attains both exceptional counts at once; together
    /// with the Morse property this makes every cell critical or paired.
    pub fn exclusivity_holds(&self, k: &SimplicialComplex) -> bool {
        (0..=k.dim()).all(|d| {
            (0..k.n_cells(d)).all(|i| {
                let (up, down) = self.counts_at(k, d, i);
                !(up == 1 && down == 1)
            })
        })
    }

    /// Cells where both exceptional counts vanish, in canonical order.
    pub fn critical_cells(&self, k: &SimplicialComplex) -> Vec<Cell> {
        let mut out = Vec::new();
        for d in 0..=k.dim() {
            for (i, cell) in k.cells(d).iter().enumerate() {
                if self.counts_at(k, d, i) == (0, 0) {
                    out.push(cell.clone());
                }
            }
        }
        out
    }

    /// The vector field read off the function: pair each cell with its
    /// non-increasing coface. Meaningful when `is_discrete_morse` holds;
    /// a duplicated cell otherwise surfaces as an error.
    pub fn induced_vector_field(&self, k: &SimplicialComplex) -> Result<VectorField> {
        let mut pairs = Vec::new();
        for d in 0..k.dim() {
            for (i, cell) in k.cells(d).iter().enumerate() {
                let v = self.values[d][i];
                for &h in &k.coface_indices(d)[i] {
                    if self.values[d + 1][h] <= v {
                        pairs.push((cell.clone(), k.cells(d + 1)[h].clone()));
                    }
                }
            }
        }
        VectorField::new(k, pairs)
    }
}

/// Builds a discrete Morse function whose gradient is exactly `vf`.
///
/// Paired cells share a value; every other codimension-1 incidence gains
/// strictly along dimension. The value of a cell is the longest chain of
/// such strict steps ending at it, computed on the digraph that contracts
/// each pair to a point; acyclicity of `vf` makes that digraph acyclic.
/// The empty field yields `f(σ) = dim σ`.
pub fn realize_morse_function(k: &SimplicialComplex, vf: &VectorField) -> Result<MorseFunction> {
    if !vf.is_acyclic(k)? {
        return Err(Error::CyclicMatching);
    }
    // Global cell ids, dimension-major.
    let mut offset = vec![0usize; k.dim() + 2];
    for d in 0..=k.dim() {
        offset[d + 1] = offset[d] + k.n_cells(d);
    }
    let total = offset[k.dim() + 1];
    let id = |d: usize, i: usize| offset[d] + i;

    // Contract pairs: the head's representative is its tail.
    let mut rep: Vec<usize> = (0..total).collect();
    let mut matched_pair: Vec<bool> = vec![false; total];
    for (tail, head) in vf.pairs() {
        let t = id(tail.dim(), k.index_of(tail).unwrap());
        let h = id(head.dim(), k.index_of(head).unwrap());
        rep[h] = t;
        matched_pair[h] = true;
    }

    // Strict edges: every unpaired incidence, between representatives.
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); total];
    let mut indeg = vec![0usize; total];
    for d in 1..=k.dim() {
        for (i, facets) in k.facet_indices(d).iter().enumerate() {
            let h = id(d, i);
            for &(f, _) in facets {
                let t = id(d - 1, f);
                if matched_pair[h] && rep[h] == t {
                    continue;
                }
                out[rep[t]].push(rep[h]);
                indeg[rep[h]] += 1;
            }
        }
    }

    // Longest path over a topological order.
    let mut value = vec![0i64; total];
    let mut queue: Vec<usize> = (0..total)
        .filter(|&v| rep[v] == v && indeg[v] == 0)
        .collect();
    let mut seen = 0usize;
    while let Some(v) = queue.pop() {
        seen += 1;
        for &w in &out[v] {
            if value[w] < value[v] + 1 {
                value[w] = value[v] + 1;
            }
            indeg[w] -= 1;
            if indeg[w] == 0 {
                queue.push(w);
            }
        }
    }
    let reps = (0..total).filter(|&v| rep[v] == v).count();
    assert_eq!(seen, reps, "contracted incidence digraph must be acyclic");

    let values = (0..=k.dim())
        .map(|d| (0..k.n_cells(d)).map(|i| value[rep[id(d, i)]]).collect())
        .collect();
    Ok(MorseFunction { values })
}

/// Options for the census enumeration.
#[derive(Debug, Clone)]
pub struct CensusOptions {
    pub guard: Guard,
    pub jobs: usize,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions {
            guard: Guard::default(),
            jobs: 1,
        }
    }
}

/// Census of acyclic top-level pairings: `counts[ℓ]` is the number that
/// leave exactly ℓ top cells unpaired.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradientCensus {
    pub counts: Vec<BigInt>,
    /// Cells one below the top level.
    pub tails: usize,
    /// Top cells.
    pub heads: usize,
    /// The top dimension the census ran at.
    pub dim: usize,
}

impl GradientCensus {
    pub fn total(&self) -> BigInt {
        self.counts.iter().sum()
    }

    /// The polynomial the census claims for `det(Δ_d + λI)`: the count at
    /// ℓ unpaired top cells contributes to `λ^(tails - heads + ℓ)`.
    pub fn polynomial(&self) -> IntegerPolynomial {
        let n = self.tails;
        let m = self.heads;
        let mut coeffs = vec![BigInt::from(0u32); n + 1];
        for (l, c) in self.counts.iter().enumerate() {
            if n + l < m {
                assert_eq!(c, &BigInt::from(0u32), "pairing exceeds available tails");
                continue;
            }
            coeffs[n + l - m] = c.clone();
        }
        IntegerPolynomial::from_coeffs(coeffs)
    }
}

struct CensusCtx {
    tails: usize,
    heads: usize,
    /// Facet indices of each head, ascending.
    head_facets: Vec<Vec<usize>>,
}

impl CensusCtx {
    fn build(k: &SimplicialComplex, d: usize) -> Self {
        let head_facets = k
            .facet_indices(d)
            .iter()
            .map(|facets| {
                let mut f: Vec<usize> = facets.iter().map(|&(i, _)| i).collect();
                f.sort_unstable();
                f
            })
            .collect();
        CensusCtx {
            tails: k.n_cells(d - 1),
            heads: k.n_cells(d),
            head_facets,
        }
    }
}

#[derive(Clone)]
struct CensusState {
    tail_to_head: Vec<Option<usize>>,
    head_to_tail: Vec<Option<usize>>,
    matched: usize,
}

impl CensusState {
    fn fresh(ctx: &CensusCtx) -> Self {
        CensusState {
            tail_to_head: vec![None; ctx.tails],
            head_to_tail: vec![None; ctx.heads],
            matched: 0,
        }
    }

    /// After pairing `start`, any new closed path passes through it.
    fn acyclic_with(&self, ctx: &CensusCtx, start: usize) -> bool {
        let mut visited = vec![false; ctx.heads];
        let mut stack = vec![start];
        while let Some(h) = stack.pop() {
            for &t in &ctx.head_facets[h] {
                if let Some(h2) = self.tail_to_head[t] {
                    if h2 == h {
                        continue;
                    }
                    if h2 == start {
                        return false;
                    }
                    if !visited[h2] {
                        visited[h2] = true;
                        stack.push(h2);
                    }
                }
            }
        }
        true
    }
}

/// Sequential DFS from `head` onward: unpaired branch first, then tails in
/// canonical order. Counts into `counts[unpaired]`; `sink` sees each
/// complete pairing as (tail, head) index pairs in head order.
/// Optional observer handed every complete pairing during the census DFS.
type PairSink<'a> = Option<&'a mut dyn FnMut(&[(usize, usize)])>;

fn census_dfs(
    ctx: &CensusCtx,
    state: &mut CensusState,
    head: usize,
    counts: &mut [u128],
    sink: &mut PairSink,
) {
    if head == ctx.heads {
        counts[ctx.heads - state.matched] += 1;
        if let Some(f) = sink {
            let pairs: Vec<(usize, usize)> = state
                .head_to_tail
                .iter()
                .enumerate()
                .filter_map(|(h, t)| t.map(|t| (t, h)))
                .collect();
            f(&pairs);
        }
        return;
    }
    census_dfs(ctx, state, head + 1, counts, sink);
    for fi in 0..ctx.head_facets[head].len() {
        let t = ctx.head_facets[head][fi];
        if state.tail_to_head[t].is_some() {
            continue;
        }
        state.tail_to_head[t] = Some(head);
        state.head_to_tail[head] = Some(t);
        if state.acyclic_with(ctx, head) {
            state.matched += 1;
            census_dfs(ctx, state, head + 1, counts, sink);
            state.matched -= 1;
        }
        state.tail_to_head[t] = None;
        state.head_to_tail[head] = None;
    }
}

fn census_checked(k: &SimplicialComplex, options: &CensusOptions) -> Result<(CensusCtx, usize)> {
    let d = k.dim();
    if d == 0 {
        return Err(Error::DimensionOutOfRange { d: 0, max: 0 });
    }
    options.guard.check_incidence(k, d)?;
    Ok((CensusCtx::build(k, d), d))
}

/// Counts acyclic top-level pairings by number of unpaired top cells,
/// with default options.
pub fn gradient_census(k: &SimplicialComplex) -> Result<GradientCensus> {
    gradient_census_with(k, &CensusOptions::default())
}

/// Counts acyclic top-level pairings by number of unpaired top cells.
pub fn gradient_census_with(
    k: &SimplicialComplex,
    options: &CensusOptions,
) -> Result<GradientCensus> {
    let (ctx, d) = census_checked(k, options)?;
    let jobs = options.jobs.max(1);
    let mut counts = vec![0u128; ctx.heads + 1];

    if jobs == 1 {
        let mut state = CensusState::fresh(&ctx);
        census_dfs(&ctx, &mut state, 0, &mut counts, &mut None);
    } else {
        // Expand the same DFS breadth-first until there are enough seeds to
        // spread across the workers, then finish each seed independently.
        let target = jobs * 4;
        let mut depth = 0usize;
        let mut seeds = vec![CensusState::fresh(&ctx)];
        while depth < ctx.heads && seeds.len() < target {
            let mut next = Vec::with_capacity(seeds.len() * 2);
            for seed in &seeds {
                next.push(seed.clone());
                for &t in &ctx.head_facets[depth] {
                    if seed.tail_to_head[t].is_some() {
                        continue;
                    }
                    let mut child = seed.clone();
                    child.tail_to_head[t] = Some(depth);
                    child.head_to_tail[depth] = Some(t);
                    if child.acyclic_with(&ctx, depth) {
                        child.matched += 1;
                        next.push(child);
                    }
                }
            }
            seeds = next;
            depth += 1;
        }
        let workers = jobs.min(seeds.len()).max(1);
        let ctx_ref = &ctx;
        let seeds_ref = &seeds;
        let partials: Vec<Vec<u128>> = std::thread::scope(|scope| {
            let handles: Vec<_> = (0..workers)
                .map(|w| {
                    scope.spawn(move || {
                        let mut local = vec![0u128; ctx_ref.heads + 1];
                        for seed in seeds_ref.iter().skip(w).step_by(workers) {
                            let mut state = seed.clone();
                            census_dfs(ctx_ref, &mut state, depth, &mut local, &mut None);
                        }
                        local
                    })
                })
                .collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        });
        for partial in partials {
            for (acc, v) in counts.iter_mut().zip(partial) {
                *acc += v;
            }
        }
    }

    Ok(GradientCensus {
        counts: counts.into_iter().map(BigInt::from).collect(),
        tails: ctx.tails,
        heads: ctx.heads,
        dim: d,
    })
}

/// Enumerates the acyclic top-level pairings themselves, in the census DFS
/// order (unpaired branch before paired, tails in canonical order).
pub fn gradient_vector_fields(
    k: &SimplicialComplex,
    options: &CensusOptions,
) -> Result<Vec<VectorField>> {
    let (ctx, d) = census_checked(k, options)?;
    let tails_cells = k.cells(d - 1);
    let heads_cells = k.cells(d);
    let mut out = Vec::new();
    let mut sink = |pairs: &[(usize, usize)]| {
        let cells: Vec<(Cell, Cell)> = pairs
            .iter()
            .map(|&(t, h)| (tails_cells[t].clone(), heads_cells[h].clone()))
            .collect();
        out.push(VectorField::from_sorted_pairs(cells));
    };
    let mut counts = vec![0u128; ctx.heads + 1];
    let mut state = CensusState::fresh(&ctx);
    let mut sink_ref: PairSink = Some(&mut sink);
    census_dfs(&ctx, &mut state, 0, &mut counts, &mut sink_ref);
    Ok(out)
}
