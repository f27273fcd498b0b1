//! Cell 2-cycles in combinatorial squares `K × K` and deleted squares.

use serde::{Deserialize, Serialize};

use crate::error::{domain, input, Result};
use crate::gf2::{self, BitMatrix, BitVec, Eliminator};
use crate::graph::{self, cycle_space_basis, is_one_cycle, EdgeSet, Graph, NamedGraph};
use crate::product::BoxProduct;
use crate::symmetry::{self, Involution};

/// A set of cells, indexed by position in its [`CellUniverse`].
pub type CellSet = BitVec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    #[serde(alias = "full_square")]
    Square,
    #[serde(alias = "deleted_square")]
    Deleted,
}

/// Cells `(σ, τ)` of a square, in lexicographic order of edge indices.
#[derive(Debug, Clone)]
pub struct CellUniverse {
    host: Graph,
    mode: Mode,
    cells: Vec<(usize, usize)>,
    index: Vec<Option<usize>>,
}

impl CellUniverse {
    pub fn new(host: &Graph, mode: Mode) -> Self {
        let e = host.nedges();
        let mut cells = Vec::new();
        let mut index = vec![None; e * e];
        for s in 0..e {
            for t in 0..e {
                if mode == Mode::Square || !edges_touch(host, s, t) {
                    index[s * e + t] = Some(cells.len());
                    cells.push((s, t));
                }
            }
        }
        Self { host: host.clone(), mode, cells, index }
    }

    pub fn square(host: &Graph) -> Self {
        Self::new(host, Mode::Square)
    }

    pub fn deleted(host: &Graph) -> Self {
        Self::new(host, Mode::Deleted)
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn cells(&self) -> &[(usize, usize)] {
        &self.cells
    }

    pub fn cell(&self, i: usize) -> (usize, usize) {
        self.cells[i]
    }

    pub fn index_of(&self, sigma: usize, tau: usize) -> Option<usize> {
        let e = self.host.nedges();
        (sigma < e && tau < e).then(|| self.index[sigma * e + tau]).flatten()
    }

    pub fn empty_set(&self) -> CellSet {
        CellSet::zeros(self.len())
    }

    pub fn full_set(&self) -> CellSet {
        CellSet::ones(self.len())
    }

    pub fn check(&self, c: &CellSet) -> Result<()> {
        if c.len() != self.len() {
            return input(format!("cell set has length {}, universe has {} cells", c.len(), self.len()));
        }
        Ok(())
    }

    /// Cell set from `(σ, τ)` edge-index pairs.
    pub fn cell_set<I: IntoIterator<Item = (usize, usize)>>(&self, pairs: I) -> Result<CellSet> {
        let mut out = self.empty_set();
        for (s, t) in pairs {
            match self.index_of(s, t) {
                Some(i) => out.toggle(i),
                None => return domain(format!("cell ({s}, {t}) is not in the universe")),
            }
        }
        Ok(out)
    }

    pub fn pairs_of(&self, c: &CellSet) -> Vec<(usize, usize)> {
        c.iter_ones().map(|i| self.cells[i]).collect()
    }

    /// Sections `C_{σ,·}` (first) and `C_{·,σ}` (second) for every edge σ.
    pub fn sections(&self, c: &CellSet) -> Result<(Vec<EdgeSet>, Vec<EdgeSet>)> {
        self.check(c)?;
        let e = self.host.nedges();
        let mut rows = vec![EdgeSet::zeros(e); e];
        let mut cols = vec![EdgeSet::zeros(e); e];
        for (s, t) in self.pairs_of(c) {
            rows[s].set(t, true);
            cols[t].set(s, true);
        }
        Ok((rows, cols))
    }

    /// Rows of the section constraints: for each vertex `v` and edge `β`,
    /// the parity of cells `(α, β)` with `v ∈ α`, then of cells `(β, α)`.
    pub fn constraint_matrix(&self) -> BitMatrix {
        let (nv, ne) = (self.host.nverts(), self.host.nedges());
        let mut rows = vec![BitVec::zeros(self.len()); 2 * nv * ne];
        for (i, &(s, t)) in self.cells.iter().enumerate() {
            let (a, b) = self.host.edge(s);
            let (u, v) = self.host.edge(t);
            for x in [a, b] {
                rows[x * ne + t].toggle(i);
            }
            for y in [u, v] {
                rows[nv * ne + y * ne + s].toggle(i);
            }
        }
        BitMatrix::from_rows(self.len(), rows).expect("rows sized to the universe")
    }
}

fn edges_touch(g: &Graph, s: usize, t: usize) -> bool {
    let (a, b) = g.edge(s);
    let (u, v) = g.edge(t);
    a == u || a == v || b == u || b == v
}

/// Every section is a 1-cycle of the host.
pub fn sections_criterion(u: &CellUniverse, c: &CellSet) -> Result<bool> {
    let (rows, cols) = u.sections(c)?;
    for s in rows.iter().chain(cols.iter()) {
        if !is_one_cycle(u.host(), s)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The boundaries `σ□τ` of the cells sum to zero in `K □ K`.
pub fn boundary_criterion(u: &CellUniverse, c: &CellSet) -> Result<bool> {
    u.check(c)?;
    let p = BoxProduct::square(u.host());
    let e = u.host().nedges();
    let mut acc = p.graph().empty_edge_set();
    for (s, t) in u.pairs_of(c) {
        acc ^= &p.cells()[s * e + t].boundary;
    }
    Ok(acc.is_zero())
}

pub fn is_cell_2cycle(u: &CellUniverse, c: &CellSet) -> Result<bool> {
    let by_sections = sections_criterion(u, c)?;
    debug_assert_eq!(Ok(by_sections), boundary_criterion(u, c));
    Ok(by_sections)
}

/// Cells `(σ, τ)` with `σ ∈ z1`, `τ ∈ z2`.
pub fn torus(u: &CellUniverse, z1: &EdgeSet, z2: &EdgeSet) -> Result<CellSet> {
    for z in [z1, z2] {
        if !is_one_cycle(u.host(), z)? {
            return domain("torus factors must be 1-cycles of the host");
        }
    }
    u.cell_set(z1.iter_ones().flat_map(|s| z2.iter_ones().map(move |t| (s, t))))
}

/// `X × Y + Y × X`.
pub fn symmetrized_torus(u: &CellUniverse, x: &EdgeSet, y: &EdgeSet) -> Result<CellSet> {
    Ok(&torus(u, x, y)? ^ &torus(u, y, x)?)
}

#[derive(Debug, Clone)]
pub struct H2Space {
    pub dim: usize,
    pub basis: Vec<CellSet>,
}

/// Cell 2-cycles as the kernel of the section constraints.
pub fn h2_kernel(u: &CellUniverse) -> H2Space {
    let basis = gf2::kernel_basis(&u.constraint_matrix());
    H2Space { dim: basis.len(), basis }
}

/// Full squares use the products of fundamental cycles `σ̂ × τ̂` over
/// non-tree edges; deleted squares fall back to the kernel.
pub fn h2_space(u: &CellUniverse) -> H2Space {
    match u.mode() {
        Mode::Deleted => h2_kernel(u),
        Mode::Square => {
            let (_, basis) = cycle_space_basis(u.host());
            let basis = kunneth_products(u, &basis);
            H2Space { dim: basis.len(), basis }
        }
    }
}

fn kunneth_products(u: &CellUniverse, cs: &[EdgeSet]) -> Vec<CellSet> {
    cs.iter()
        .flat_map(|x| cs.iter().map(move |y| torus(u, x, y).expect("cycles of the host")))
        .collect()
}

/// Writes a 2-cycle of a full square as `Σ σ̂ × τ̂` over its cells with both
/// edges outside the spanning forest. Returns those `(σ, τ)`.
pub fn fundamental_decomposition(u: &CellUniverse, c: &CellSet) -> Result<Vec<(usize, usize)>> {
    if u.mode() != Mode::Square {
        return input("fundamental decomposition needs a full square");
    }
    if !is_cell_2cycle(u, c)? {
        return domain("cell set is not a 2-cycle");
    }
    let forest = graph::SpanningForest::bfs(u.host());
    let terms: Vec<_> = u
        .pairs_of(c)
        .into_iter()
        .filter(|&(s, t)| !forest.is_tree_edge(s) && !forest.is_tree_edge(t))
        .collect();
    let mut acc = c.clone();
    for &(s, t) in &terms {
        acc ^= &torus(u, &forest.fundamental_cycle(u.host(), s), &forest.fundamental_cycle(u.host(), t))?;
    }
    if !acc.is_zero() {
        return domain("2-cycle is not determined by its non-tree cells");
    }
    Ok(terms)
}

/// `{C_i × C_j}` for a basis `C_1 … C_q` of the cycle space.
pub fn kunneth2_basis(g: &Graph, cs: &[EdgeSet]) -> Result<Vec<CellSet>> {
    check_cycle_basis(g, cs)?;
    let u = CellUniverse::square(g);
    let out = kunneth_products(&u, cs);
    if gf2::rank_of(&out) != cs.len() * cs.len() {
        return domain("products are dependent");
    }
    Ok(out)
}

fn check_cycle_basis(g: &Graph, cs: &[EdgeSet]) -> Result<()> {
    for c in cs {
        if !is_one_cycle(g, c)? {
            return domain("basis element is not a 1-cycle");
        }
    }
    if cs.len() != g.cycle_rank() || gf2::rank_of(cs) != cs.len() {
        return domain("cycles do not form a basis of the cycle space");
    }
    Ok(())
}

/// `{C_i × C_j + C_j × C_i : i < j} ∪ {C_i × C_i}`.
pub fn symmetric_kunneth_basis(g: &Graph, cs: &[EdgeSet]) -> Result<Vec<CellSet>> {
    check_cycle_basis(g, cs)?;
    let u = CellUniverse::square(g);
    let mut out = Vec::new();
    for i in 0..cs.len() {
        out.push(torus(&u, &cs[i], &cs[i])?);
        for j in i + 1..cs.len() {
            out.push(symmetrized_torus(&u, &cs[i], &cs[j])?);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CellSymmetry {
    /// `(σ, τ) -> (τ, σ)`.
    Swap,
    /// `(σ, τ) -> (tσ, tτ)` on the square of `tilde n`.
    TCrossT(usize),
}

/// Permutation of cell indices induced by the symmetry.
pub fn cell_permutation(u: &CellUniverse, sym: CellSymmetry) -> Result<Vec<usize>> {
    let edge_perm: Vec<usize> = match sym {
        CellSymmetry::Swap => return Ok(u.cells().iter().map(|&(s, t)| u.index_of(t, s).expect("swap-closed")).collect()),
        CellSymmetry::TCrossT(n) => {
            let tilde = NamedGraph::Tilde(n).build()?;
            if *u.host() != tilde {
                return input(format!("t × t needs the square of tilde {n}"));
            }
            Involution::tilde_swap(n).edge_perm(&tilde)
        }
    };
    u.cells()
        .iter()
        .map(|&(s, t)| {
            u.index_of(edge_perm[s], edge_perm[t])
                .ok_or_else(|| crate::Error::Input("symmetry leaves the universe".into()))
        })
        .collect()
}

/// Symmetric cell 2-cycles, as the fixed subspace of the 2-cycle space.
pub fn symmetric_h2(u: &CellUniverse, sym: CellSymmetry) -> Result<H2Space> {
    let perm = cell_permutation(u, sym)?;
    let space = gf2::independent_subset(&h2_space(u).basis);
    let basis = gf2::fixed_subspace_basis(&space, &BitMatrix::permutation(&perm))?;
    Ok(H2Space { dim: basis.len(), basis })
}

/// `q(q + 1) / 2` with `q = E − V + 1`.
pub fn symmetric_h2_formula(g: &Graph) -> usize {
    let q = g.cycle_rank();
    q * (q + 1) / 2
}

/// The correspondence between cells of `K_{n,n} × K_{n,n}` and cells of
/// `tilde n × tilde n`: writing `ij'` for the edge from left `i` to right
/// `j'`, `(a b', c d')` goes to `(a c', b d')`.
#[derive(Debug, Clone, Serialize)]
pub struct KnnTildeReport {
    pub n: usize,
    pub domain_cells: usize,
    pub image_cells: usize,
    pub involutive: bool,
    /// Non-adjacent in `K_{n,n}` iff coordinates differ iff image in tilde.
    pub equivalence: bool,
    pub adjacency_preserved: bool,
    pub domain_h2_dim: usize,
    pub image_h2_dim: usize,
    pub two_cycles_bijective: bool,
    /// Deleted cell index of `K_{n,n}` to full cell index of `tilde n`.
    #[serde(skip)]
    pub map: Vec<usize>,
}

impl KnnTildeReport {
    pub fn ok(&self) -> bool {
        self.involutive && self.equivalence && self.adjacency_preserved && self.two_cycles_bijective
    }
}

fn cells_adjacent(g: &Graph, (s1, t1): (usize, usize), (s2, t2): (usize, usize)) -> bool {
    (s1 == s2 && t1 != t2 && edges_touch(g, t1, t2)) || (t1 == t2 && s1 != s2 && edges_touch(g, s1, s2))
}

pub fn knn_tilde_map(n: usize) -> Result<KnnTildeReport> {
    if n < 2 {
        return input("the correspondence needs n >= 2");
    }
    let knn = NamedGraph::CompleteBipartite(n, n).build()?;
    let tilde = NamedGraph::Tilde(n).build()?;
    let split = |g: &Graph, e: usize| {
        let (i, j) = g.edge(e);
        (i, j - n)
    };
    let f = |s: usize, t: usize| -> (usize, usize, usize, usize) {
        let ((a, b), (c, d)) = (split(&knn, s), split(&knn, t));
        (a, c, b, d)
    };
    let knn_edge = |i: usize, j: usize| knn.edge_index(i, n + j).expect("K_{n,n} edge");
    let full = CellUniverse::square(&knn);
    let involutive = full.cells().iter().all(|&(s, t)| {
        let (a, c, b, d) = f(s, t);
        let (a2, c2, b2, d2) = f(knn_edge(a, c), knn_edge(b, d));
        (knn_edge(a2, c2), knn_edge(b2, d2)) == (s, t)
    });
    let equivalence = full.cells().iter().all(|&(s, t)| {
        let ((a, b), (c, d)) = (split(&knn, s), split(&knn, t));
        let (fa, fc, fb, fd) = f(s, t);
        let in_tilde = tilde.edge_index(fa, n + fc).is_some() && tilde.edge_index(fb, n + fd).is_some();
        let non_adjacent = !edges_touch(&knn, s, t);
        non_adjacent == (a != c && b != d) && non_adjacent == in_tilde
    });

    let dom = CellUniverse::deleted(&knn);
    let img = CellUniverse::square(&tilde);
    let map = dom
        .cells()
        .iter()
        .map(|&(s, t)| {
            let (a, c, b, d) = f(s, t);
            let (s2, t2) = (tilde.edge_index(a, n + c), tilde.edge_index(b, n + d));
            s2.zip(t2).and_then(|(s2, t2)| img.index_of(s2, t2))
        })
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| crate::Error::Domain("a deleted cell maps outside tilde n".into()))?;
    let onto = {
        let mut seen = vec![false; img.len()];
        map.iter().for_each(|&i| seen[i] = true);
        seen.iter().all(|&x| x) && map.len() == img.len()
    };
    let mut adjacency_preserved = onto;
    'outer: for i in 0..dom.len() {
        for j in 0..dom.len() {
            let before = cells_adjacent(&knn, dom.cell(i), dom.cell(j));
            let after = cells_adjacent(&tilde, img.cell(map[i]), img.cell(map[j]));
            if before != after {
                adjacency_preserved = false;
                break 'outer;
            }
        }
    }
    let push = |c: &CellSet| CellSet::from_indices(img.len(), c.iter_ones().map(|i| map[i]));
    let dom_h2 = h2_kernel(&dom);
    let img_h2 = h2_space(&img);
    let images: Vec<CellSet> = dom_h2.basis.iter().map(push).collect();
    let images_are_cycles = images.iter().all(|c| is_cell_2cycle(&img, c).unwrap_or(false));
    let two_cycles_bijective =
        onto && images_are_cycles && gf2::rank_of(&images) == dom_h2.dim && dom_h2.dim == img_h2.dim;
    Ok(KnnTildeReport {
        n,
        domain_cells: dom.len(),
        image_cells: img.len(),
        involutive,
        equivalence,
        adjacency_preserved,
        domain_h2_dim: dom_h2.dim,
        image_h2_dim: img_h2.dim,
        two_cycles_bijective,
        map,
    })
}

/// Computed `(t × t)`-symmetric 2-cycle dimension of `tilde n × tilde n`
/// next to the closed form `C(q + 2, 2)`, `q = (n² − 3n) / 2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TCrossTAudit {
    pub n: usize,
    pub q: usize,
    pub computed_dim: usize,
    /// Orbits of `t × t` on the products of a `t`-permuted cycle basis.
    pub orbit_count_dim: usize,
    pub formula_dim: usize,
    pub agrees: bool,
}

pub fn t_cross_t_audit(n: usize) -> Result<TCrossTAudit> {
    let tb = symmetry::tilde_symmetric_basis(n)?;
    let tilde = NamedGraph::Tilde(n).build()?;
    let u = CellUniverse::square(&tilde);
    let computed_dim = symmetric_h2(&u, CellSymmetry::TCrossT(n))?.dim;
    let m = tb.basis.len();
    let mut seen = vec![false; m * m];
    let mut orbit_count_dim = 0;
    for i in 0..m {
        for j in 0..m {
            if !seen[i * m + j] {
                orbit_count_dim += 1;
                seen[i * m + j] = true;
                seen[tb.perm[i] * m + tb.perm[j]] = true;
            }
        }
    }
    let q = (n * n - 3 * n) / 2;
    let formula_dim = crate::binomial(q + 2, 2);
    Ok(TCrossTAudit { n, q, computed_dim, orbit_count_dim, formula_dim, agrees: computed_dim == formula_dim })
}

/// Simple cycles as edge sets.
fn simple_cycle_sets(g: &Graph, max_len: Option<usize>) -> Vec<(Vec<usize>, EdgeSet)> {
    graph::simple_cycles(g, max_len)
        .into_iter()
        .map(|c| {
            let e = g.simple_cycle(&c).expect("enumerated cycle");
            (c, e)
        })
        .collect()
}

fn disjoint(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| !b.contains(x))
}

/// `X × Y` over ordered pairs of vertex-disjoint simple cycles, inside the
/// deleted square.
pub fn disjoint_cycle_products(g: &Graph, max_len: Option<usize>) -> Vec<CellSet> {
    let u = CellUniverse::deleted(g);
    let cycles = simple_cycle_sets(g, max_len);
    let mut out = Vec::new();
    for (cx, x) in &cycles {
        for (cy, y) in &cycles {
            if disjoint(cx, cy) {
                out.push(torus(&u, x, y).expect("disjoint cycles give deleted cells"));
            }
        }
    }
    out
}

/// `X × Y + Y × X` over unordered pairs of vertex-disjoint simple cycles.
pub fn disjoint_symmetrized_tori(g: &Graph, max_len: Option<usize>) -> Vec<CellSet> {
    let u = CellUniverse::deleted(g);
    let cycles = simple_cycle_sets(g, max_len);
    let mut out = Vec::new();
    for (i, (cx, x)) in cycles.iter().enumerate() {
        for (cy, y) in &cycles[i + 1..] {
            if disjoint(cx, cy) {
                out.push(symmetrized_torus(&u, x, y).expect("disjoint cycles give deleted cells"));
            }
        }
    }
    out
}

/// All cells `(σ, τ)` of the deleted square with both edges inside `edges`.
pub fn deleted_square_of_subgraph(u: &CellUniverse, edges: &EdgeSet) -> CellSet {
    CellSet::from_indices(
        u.len(),
        u.cells()
            .iter()
            .enumerate()
            .filter(|(_, &(s, t))| edges.get(s) && edges.get(t))
            .map(|(i, _)| i),
    )
}

#[derive(Debug, Clone, Serialize)]
pub struct GeneratorsReport {
    pub n: usize,
    pub symmetric_dim: usize,
    pub tori: usize,
    pub k33_squares: usize,
    pub generator_rank: usize,
    pub all_generators_symmetric_cycles: bool,
    pub spans: bool,
    /// A symmetric 2-cycle outside the span, if any.
    #[serde(skip)]
    pub counterexample: Option<CellSet>,
}

/// Symmetric cell 2-cycles of the deleted square of `K_{n,n}` against the
/// symmetrized tori of disjoint 4-cycles and the deleted squares of the
/// `K_{3,3}` subgraphs.
pub fn symmetric_generators_check(n: usize) -> Result<GeneratorsReport> {
    if n < 2 {
        return input("needs n >= 2");
    }
    let g = NamedGraph::CompleteBipartite(n, n).build()?;
    let u = CellUniverse::deleted(&g);
    let symmetric = symmetric_h2(&u, CellSymmetry::Swap)?;
    let mut gens = disjoint_symmetrized_tori(&g, Some(4));
    let tori = gens.len();
    let triples = |k: usize| -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for a in 0..k {
            for b in a + 1..k {
                for c in b + 1..k {
                    out.push(vec![a, b, c]);
                }
            }
        }
        out
    };
    for left in triples(n) {
        for right in triples(n) {
            let edges = g.edge_set(left.iter().flat_map(|&i| right.iter().map(move |&j| (i, n + j))))?;
            gens.push(deleted_square_of_subgraph(&u, &edges));
        }
    }
    let k33_squares = gens.len() - tori;
    let perm = cell_permutation(&u, CellSymmetry::Swap)?;
    let all_generators_symmetric_cycles =
        gens.iter().all(|c| c.permuted(&perm) == *c && is_cell_2cycle(&u, c).unwrap_or(false));
    let mut e = Eliminator::new(u.len());
    for c in &gens {
        e.insert(c);
    }
    let counterexample = symmetric.basis.iter().find(|c| !e.contains(c)).cloned();
    Ok(GeneratorsReport {
        n,
        symmetric_dim: symmetric.dim,
        tori,
        k33_squares,
        generator_rank: e.rank(),
        all_generators_symmetric_cycles,
        spans: counterexample.is_none(),
        counterexample,
    })
}

/// Two copies of `K_5` joined by one edge.
pub fn two_k5_bridge() -> Graph {
    let k5 = NamedGraph::Complete(5).build().expect("K_5");
    let both = graph::disjoint_union(&k5, &k5);
    let edges = both.edges().iter().copied().chain([(4, 5)]);
    Graph::new(10, edges).expect("bridge joins the copies")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SingleGeneratorReport {
    pub h2_dim: usize,
    pub products_rank: usize,
    /// `h2_dim − products_rank`; one extra 2-cycle closes a gap of at most 1.
    pub gap: usize,
    pub single_cycle_suffices: bool,
}

/// Can one 2-cycle together with the products of vertex-disjoint cycles
/// generate every 2-cycle of the deleted square?
pub fn single_generator_gap(g: &Graph) -> SingleGeneratorReport {
    let u = CellUniverse::deleted(g);
    let h2_dim = h2_kernel(&u).dim;
    let products_rank = gf2::rank_of(&disjoint_cycle_products(g, None));
    let gap = h2_dim - products_rank;
    SingleGeneratorReport { h2_dim, products_rank, gap, single_cycle_suffices: gap <= 1 }
}

/// Wire form: `{"universe": {"graph": spec, "mode": ...}, "cells": [[σ, τ], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellSetJson {
    pub universe: UniverseJson,
    pub cells: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UniverseJson {
    pub graph: String,
    pub mode: Mode,
}
