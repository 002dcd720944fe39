//! Simplicial complexes with a fixed combinatorial orientation.
//!
//! Cells are strictly increasing vertex tuples; within each dimension cells
//! are kept in lexicographic order, and that order is the canonical row and
//! column index of every matrix built from a complex. All sign conventions
//! derive from the sorted tuples, so equal complexes produce bit-identical
//! matrices.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// Largest face accepted by [`SimplicialComplex::from_maximal_faces`].
/// Downward closure of a face with `k` vertices stores `2^k - 1` cells.
const MAX_FACE_VERTICES: usize = 25;

/// A single cell: a non-empty, strictly increasing tuple of vertex ids.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cell(Vec<u32>);

impl Cell {
    /// Builds a cell from vertices in any order.
    ///
    /// Fails with [`Error::DegenerateFace`] on a repeated vertex and
    /// [`Error::EmptyFace`] on an empty list.
    pub fn new(mut vertices: Vec<u32>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::EmptyFace);
        }
        let unsorted = vertices.clone();
        vertices.sort_unstable();
        if vertices.windows(2).any(|w| w[0] == w[1]) {
            let listed = unsorted
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(",");
            return Err(Error::DegenerateFace(listed));
        }
        Ok(Cell(vertices))
    }

    /// Vertices in strictly increasing order.
    pub fn vertices(&self) -> &[u32] {
        &self.0
    }

    /// Dimension: one less than the vertex count.
    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    /// True when `self` is a face of `other` (subset of its vertices).
    pub fn is_face_of(&self, other: &Cell) -> bool {
        if self.0.len() > other.0.len() {
            return false;
        }
        let mut it = other.0.iter();
        self.0.iter().all(|v| it.any(|w| w == v))
    }

    /// True when `self` is a face of `other` of exactly one dimension less.
    pub fn is_facet_of(&self, other: &Cell) -> bool {
        self.0.len() + 1 == other.0.len() && self.is_face_of(other)
    }

    /// Codimension-1 faces paired with the incidence sign `(-1)^j` of the
    /// dropped vertex position, in drop-position order.
    ///
    /// Returns an empty list for vertices.
    pub fn facets_with_signs(&self) -> Vec<(Cell, i32)> {
        if self.0.len() == 1 {
            return Vec::new();
        }
        (0..self.0.len())
            .map(|j| {
                let mut v = self.0.clone();
                v.remove(j);
                let sign = if j % 2 == 0 { 1 } else { -1 };
                (Cell(v), sign)
            })
            .collect()
    }

    /// Codimension-1 faces in canonical (lexicographic) order.
    pub fn facets(&self) -> Vec<Cell> {
        let mut fs: Vec<Cell> = self
            .facets_with_signs()
            .into_iter()
            .map(|(c, _)| c)
            .collect();
        fs.sort();
        fs
    }
}

impl Ord for Cell {
    /// Dimension first, then lexicographic on vertices: the global canonical
    /// order, which restricts to plain lexicographic order inside each
    /// dimension.
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Cell {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for Cell {
    /// Reuses `Display`; cells read better as `{0,1,2}` than as a struct
    /// dump in assertion output.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Outcome of the pseudomanifold test: the verdict plus, on failure, the
/// first reason found.
#[derive(Debug, Clone)]
pub struct PseudomanifoldCheck {
    pub holds: bool,
    pub reason: Option<String>,
}

/// A finite simplicial complex, immutable after construction.
pub struct SimplicialComplex {
    name: Option<String>,
    /// `cells[d]` holds the d-cells in lexicographic order.
    cells: Vec<Vec<Cell>>,
    /// Cell -> index within its dimension.
    index: HashMap<Cell, usize>,
    /// `facet_idx[d][i]` lists `(facet index in dimension d-1, sign)` for the
    /// i-th d-cell, in drop-position order; empty for d = 0.
    facet_idx: Vec<Vec<Vec<(usize, i32)>>>,
    /// `coface_idx[d][i]` lists indices of (d+1)-cells containing the i-th
    /// d-cell, ascending; empty for d = dim.
    coface_idx: Vec<Vec<Vec<usize>>>,
}

impl SimplicialComplex {
    /// Downward closure of the given faces.
    ///
    /// Faces may repeat or be non-maximal; both are absorbed silently. Fails
    /// with [`Error::EmptyComplex`] when no faces are given and
    /// [`Error::DegenerateFace`] when a face repeats a vertex.
    pub fn from_maximal_faces(faces: &[Vec<u32>]) -> Result<Self> {
        if faces.is_empty() {
            return Err(Error::EmptyComplex);
        }
        let mut closed: BTreeSet<Cell> = BTreeSet::new();
        for face in faces {
            let cell = Cell::new(face.clone())?;
            let verts = cell.vertices();
            let k = verts.len();
            if k > MAX_FACE_VERTICES {
                return Err(Error::InstanceTooLarge(format!(
                    "face with {k} vertices; downward closure would store 2^{k} cells"
                )));
            }
            for mask in 1u64..(1u64 << k) {
                let sub: Vec<u32> = (0..k)
                    .filter(|j| mask >> j & 1 == 1)
                    .map(|j| verts[j])
                    .collect();
                closed.insert(Cell(sub));
            }
        }
        let dim = closed.iter().map(Cell::dim).max().expect("non-empty");
        let mut cells: Vec<Vec<Cell>> = vec![Vec::new(); dim + 1];
        for cell in closed {
            cells[cell.dim()].push(cell);
        }
        let mut index = HashMap::new();
        for per_dim in &cells {
            for (i, cell) in per_dim.iter().enumerate() {
                index.insert(cell.clone(), i);
            }
        }
        let mut facet_idx: Vec<Vec<Vec<(usize, i32)>>> = Vec::with_capacity(dim + 1);
        let mut coface_idx: Vec<Vec<Vec<usize>>> = (0..=dim)
            .map(|d| vec![Vec::new(); cells[d].len()])
            .collect();
        for d in 0..=dim {
            let mut per_cell = Vec::with_capacity(cells[d].len());
            for (i, cell) in cells[d].iter().enumerate() {
                let facets: Vec<(usize, i32)> = cell
                    .facets_with_signs()
                    .into_iter()
                    .map(|(facet, sign)| {
                        let r = index[&facet];
                        (r, sign)
                    })
                    .collect();
                if d > 0 {
                    for &(r, _) in &facets {
                        coface_idx[d - 1][r].push(i);
                    }
                }
                per_cell.push(facets);
            }
            facet_idx.push(per_cell);
        }
        // Cofaces were appended by scanning (d+1)-cells in canonical order,
        // so each list is already ascending.
        Ok(SimplicialComplex {
            name: None,
            cells,
            index,
            facet_idx,
            coface_idx,
        })
    }

    /// Attaches a display name (used in reports and serialized output).
    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// The name, or a synthesized placeholder for anonymous complexes.
    pub fn display_name(&self) -> String {
        match &self.name {
            Some(n) => n.clone(),
            None => format!(
                "complex({}v,{}top)",
                self.n_cells(0),
                self.n_cells(self.dim())
            ),
        }
    }

    /// Top dimension.
    pub fn dim(&self) -> usize {
        self.cells.len() - 1
    }

    /// The d-cells in canonical order; empty beyond the top dimension.
    pub fn cells(&self, d: usize) -> &[Cell] {
        self.cells.get(d).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn n_cells(&self, d: usize) -> usize {
        self.cells(d).len()
    }

    /// All cells, dimension-major, canonical within each dimension.
    pub fn all_cells(&self) -> impl Iterator<Item = &Cell> {
        self.cells.iter().flatten()
    }

    /// Canonical index of a cell within its dimension.
    pub fn index_of(&self, cell: &Cell) -> Option<usize> {
        self.index.get(cell).copied()
    }

    pub fn contains(&self, cell: &Cell) -> bool {
        self.index.contains_key(cell)
    }

    /// `(facet index, sign)` lists for the d-cells, drop-position order.
    pub(crate) fn facet_indices(&self, d: usize) -> &[Vec<(usize, i32)>] {
        &self.facet_idx[d]
    }

    /// Coface index lists for the d-cells (indices into dimension d+1).
    pub(crate) fn coface_indices(&self, d: usize) -> &[Vec<usize>] {
        &self.coface_idx[d]
    }

    /// Codimension-1 faces of a cell of the complex, canonical order.
    pub fn faces_of(&self, cell: &Cell) -> Result<Vec<Cell>> {
        if !self.contains(cell) {
            return Err(Error::CellNotFound(cell.to_string()));
        }
        Ok(cell.facets())
    }

    /// Codimension-1 cofaces of a cell of the complex, canonical order.
    pub fn cofaces_of(&self, cell: &Cell) -> Result<Vec<Cell>> {
        let i = self
            .index_of(cell)
            .ok_or_else(|| Error::CellNotFound(cell.to_string()))?;
        let d = cell.dim();
        if d == self.dim() {
            return Ok(Vec::new());
        }
        Ok(self.coface_idx[d][i]
            .iter()
            .map(|&j| self.cells[d + 1][j].clone())
            .collect())
    }

    /// Faces with no coface at all, dimension-major canonical order.
    pub fn maximal_faces(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for d in 0..=self.dim() {
            for (i, cell) in self.cells[d].iter().enumerate() {
                if self.coface_idx[d][i].is_empty() {
                    out.push(cell.clone());
                }
            }
        }
        out
    }

    /// Alternating cell-count sum over all dimensions.
    pub fn euler_characteristic(&self) -> i64 {
        self.cells
            .iter()
            .enumerate()
            .map(|(d, cs)| {
                let n = cs.len() as i64;
                if d % 2 == 0 {
                    n
                } else {
                    -n
                }
            })
            .sum()
    }

    /// Pseudomanifold test for the top dimension d: every cell lies in a
    /// d-cell, every (d-1)-cell has exactly two d-cofaces, and the d-cells
    /// are connected through shared (d-1)-cells.
    pub fn pseudomanifold(&self) -> PseudomanifoldCheck {
        let d = self.dim();
        if d == 0 {
            return PseudomanifoldCheck {
                holds: false,
                reason: Some("complex has dimension 0".into()),
            };
        }
        // Purity: a cell below the top dimension with no coface can lie in
        // no d-cell; conversely if every level has cofaces, chains reach the
        // top.
        for p in 0..d {
            for (i, cofs) in self.coface_idx[p].iter().enumerate() {
                if cofs.is_empty() {
                    return PseudomanifoldCheck {
                        holds: false,
                        reason: Some(format!(
                            "cell {} is not a face of any top-dimensional cell",
                            self.cells[p][i]
                        )),
                    };
                }
            }
        }
        for (i, cofs) in self.coface_idx[d - 1].iter().enumerate() {
            if cofs.len() != 2 {
                return PseudomanifoldCheck {
                    holds: false,
                    reason: Some(format!(
                        "cell {} has {} top-dimensional coface{} (want exactly 2)",
                        self.cells[d - 1][i],
                        cofs.len(),
                        if cofs.len() == 1 { "" } else { "s" }
                    )),
                };
            }
        }
        let m = self.n_cells(d);
        let mut seen = vec![false; m];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(t) = queue.pop_front() {
            for &(r, _) in &self.facet_idx[d][t] {
                for &t2 in &self.coface_idx[d - 1][r] {
                    if !seen[t2] {
                        seen[t2] = true;
                        reached += 1;
                        queue.push_back(t2);
                    }
                }
            }
        }
        if reached != m {
            return PseudomanifoldCheck {
                holds: false,
                reason: Some(
                    "top-dimensional cells are not connected through shared facets".into(),
                ),
            };
        }
        PseudomanifoldCheck {
            holds: true,
            reason: None,
        }
    }

    pub fn is_pseudomanifold(&self) -> bool {
        self.pseudomanifold().holds
    }

    /// Orientability of a pseudomanifold: signs +-1 on the top cells so that
    /// each facet receives opposite induced orientations from its two
    /// cofaces; decided by signed breadth-first propagation.
    ///
    /// Fails with [`Error::NotPseudomanifold`] otherwise.
    pub fn is_orientable(&self) -> Result<bool> {
        let check = self.pseudomanifold();
        if !check.holds {
            return Err(Error::NotPseudomanifold(
                check.reason.unwrap_or_else(|| "unknown".into()),
            ));
        }
        let d = self.dim();
        let m = self.n_cells(d);
        // Incidence sign of facet r in top cell t.
        let sign_in = |t: usize, r: usize| -> i32 {
            self.facet_idx[d][t]
                .iter()
                .find(|&&(fr, _)| fr == r)
                .map(|&(_, s)| s)
                .expect("facet of its coface")
        };
        let mut sign: Vec<i32> = vec![0; m];
        sign[0] = 1;
        let mut queue = VecDeque::from([0usize]);
        while let Some(t) = queue.pop_front() {
            for &(r, s_rt) in &self.facet_idx[d][t] {
                for &t2 in &self.coface_idx[d - 1][r] {
                    if t2 == t {
                        continue;
                    }
                    // Opposite induced orientations on r:
                    // sign[t] * s_rt + sign[t2] * s_rt2 = 0.
                    let s_rt2 = sign_in(t2, r);
                    let want = -sign[t] * s_rt * s_rt2;
                    if sign[t2] == 0 {
                        sign[t2] = want;
                        queue.push_back(t2);
                    } else if sign[t2] != want {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// The Hasse digraph of the face relation, restricted to consecutive
    /// dimensions.
    pub fn hasse(&self) -> HasseDigraph {
        let mut offsets = Vec::with_capacity(self.cells.len());
        let mut total = 0usize;
        for per_dim in &self.cells {
            offsets.push(total);
            total += per_dim.len();
        }
        let mut up_edges = Vec::new();
        for d in 1..=self.dim() {
            for (i, facets) in self.facet_idx[d].iter().enumerate() {
                for &(r, _) in facets {
                    up_edges.push((offsets[d - 1] + r, offsets[d] + i));
                }
            }
        }
        let cells: Vec<Cell> = self.all_cells().cloned().collect();
        HasseDigraph {
            offsets,
            up_edges,
            cells,
        }
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let counts: Vec<usize> = (0..=self.dim()).map(|d| self.n_cells(d)).collect();
        write!(f, "SimplicialComplex({}, cells {:?})", self.display_name(), counts)
    }
}

/// The covering relation of a complex as a digraph skeleton: one node per
/// cell, one edge per codimension-1 incidence.
///
/// Nodes are numbered dimension-major in canonical cell order; matchings
/// overlay an orientation on the edges, which stays in the matching code —
/// this type carries only the structure.
pub struct HasseDigraph {
    offsets: Vec<usize>,
    up_edges: Vec<(usize, usize)>,
    cells: Vec<Cell>,
}

impl HasseDigraph {
    pub fn node_count(&self) -> usize {
        self.cells.len()
    }

    /// `(lower node, upper node)` pairs for each codimension-1 incidence.
    pub fn up_edges(&self) -> &[(usize, usize)] {
        &self.up_edges
    }

    pub fn up_edge_count(&self) -> usize {
        self.up_edges.len()
    }

    /// The cell behind a node id.
    pub fn cell(&self, node: usize) -> &Cell {
        &self.cells[node]
    }

    /// Node id of a cell, given its dimension and canonical index there.
    pub fn node_id(&self, dim: usize, index: usize) -> usize {
        self.offsets[dim] + index
    }

    /// The underlying undirected graph as a complex: every node id becomes
    /// a vertex (incidence-free cells stay as isolated vertices), every
    /// incidence becomes an edge. For a graph this is its subdivision.
    pub fn as_graph(&self) -> Result<SimplicialComplex> {
        let mut faces: Vec<Vec<u32>> = (0..self.cells.len() as u32).map(|v| vec![v]).collect();
        faces.extend(
            self.up_edges
                .iter()
                .map(|&(a, b)| vec![a as u32, b as u32]),
        );
        SimplicialComplex::from_maximal_faces(&faces)
    }
}
