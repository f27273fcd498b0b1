//! Involutions of graphs and the subspace of 1-cycles they fix.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{domain, input, Result};
use crate::gf2::{self, BitMatrix, BitVec};
use crate::graph::{self, cycle_space_basis, is_one_cycle, EdgeSet, Graph, NamedGraph, SpanningForest};

/// An edge-preserving vertex permutation `t` with `t(t(v)) = v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Involution {
    perm: Vec<usize>,
}

/// Wire form: `{"perm": [image of each vertex]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvolutionJson {
    pub perm: Vec<usize>,
}

impl Involution {
    pub fn new(g: &Graph, perm: Vec<usize>) -> Result<Self> {
        if perm.len() != g.nverts() {
            return input(format!("permutation has {} entries, graph has {} vertices", perm.len(), g.nverts()));
        }
        if let Some((v, &w)) = perm.iter().enumerate().find(|&(_, &w)| w >= perm.len()) {
            return input(format!("vertex {v} maps to {w}, out of range"));
        }
        if let Some(v) = (0..perm.len()).find(|&v| perm[perm[v]] != v) {
            return input(format!("not an involution: t(t({v})) = {}", perm[perm[v]]));
        }
        if let Some(&(u, v)) = g.edges().iter().find(|&&(u, v)| g.edge_index(perm[u], perm[v]).is_none()) {
            return input(format!("edge ({u}, {v}) maps to a non-edge"));
        }
        Ok(Self { perm })
    }

    pub fn from_json(g: &Graph, json: InvolutionJson) -> Result<Self> {
        Self::new(g, json.perm)
    }

    pub fn to_json(&self) -> InvolutionJson {
        InvolutionJson { perm: self.perm.clone() }
    }

    pub fn identity(g: &Graph) -> Self {
        Self { perm: (0..g.nverts()).collect() }
    }

    /// Part swap `j <-> j'` on the graph `tilde n`.
    pub fn tilde_swap(n: usize) -> Self {
        Self { perm: (0..2 * n).map(|v| (v + n) % (2 * n)).collect() }
    }

    /// Antipodal map on the cycle `C_m`, `m` even.
    pub fn antipodal(m: usize) -> Result<Self> {
        if m < 4 || m % 2 == 1 {
            return input(format!("antipodal map needs an even cycle of length >= 4, got {m}"));
        }
        Ok(Self { perm: (0..m).map(|v| (v + m / 2) % m).collect() })
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn apply(&self, v: usize) -> usize {
        self.perm[v]
    }

    pub fn fixed_vertices(&self) -> usize {
        self.perm.iter().enumerate().filter(|&(v, &w)| v == w).count()
    }

    /// Induced permutation of edge indices.
    pub fn edge_perm(&self, g: &Graph) -> Vec<usize> {
        g.edges()
            .iter()
            .map(|&(u, v)| g.edge_index(self.perm[u], self.perm[v]).expect("involution preserves edges"))
            .collect()
    }

    /// Image `tQ` of an edge set.
    pub fn map_edges(&self, g: &Graph, q: &EdgeSet) -> EdgeSet {
        q.permuted(&self.edge_perm(g))
    }
}

/// Permutation matrix of the induced action on edges.
pub fn edge_action(g: &Graph, t: &Involution) -> BitMatrix {
    BitMatrix::permutation(&t.edge_perm(g))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SymmetryReport {
    pub fixed_vertices: usize,
    /// Edges `{u, v}` with `{tu, tv} = {u, v}`.
    pub symmetric_edges: usize,
    /// Dimension of the fixed subspace, computed by elimination.
    pub symmetric_dim: usize,
    /// Closed-form exponent, present only for connected graphs and
    /// fixed-point-free involutions.
    pub formula_dim: Option<usize>,
}

impl SymmetryReport {
    /// False only when the closed form applies and disagrees.
    pub fn agrees(&self) -> bool {
        self.formula_dim.is_none_or(|f| f == self.symmetric_dim)
    }
}

/// Basis of the 1-cycles `C` with `tC = C`.
pub fn symmetric_cycle_basis(g: &Graph, t: &Involution) -> Vec<EdgeSet> {
    let (_, basis) = cycle_space_basis(g);
    gf2::fixed_subspace_basis(&basis, &edge_action(g, t)).expect("edge action of an involution is involutive")
}

pub fn symmetric_cycle_dim(g: &Graph, t: &Involution) -> SymmetryReport {
    let edge_perm = t.edge_perm(g);
    let symmetric_edges = edge_perm.iter().enumerate().filter(|&(e, &f)| e == f).count();
    let fixed_vertices = t.fixed_vertices();
    let symmetric_dim = symmetric_cycle_basis(g, t).len();
    let formula_dim = (g.is_connected() && fixed_vertices == 0).then(|| {
        let extra = if symmetric_edges == 0 { 2 } else { symmetric_edges };
        (g.nedges() + extra - g.nverts()) / 2
    });
    SymmetryReport { fixed_vertices, symmetric_edges, symmetric_dim, formula_dim }
}

/// Subdivides every edge `σ = ab` into `a - v_σ - b`; the lifted involution
/// sends `v_σ` to `v_{tσ}`. The new vertex of edge `e` is `g.nverts() + e`.
pub fn subdivide_all(g: &Graph, t: &Involution) -> (Graph, Involution) {
    let n = g.nverts();
    let edges = g.edges().iter().enumerate().flat_map(|(e, &(a, b))| [(a, n + e), (n + e, b)]);
    let sub = Graph::new(n + g.nedges(), edges).expect("subdivision of a valid graph");
    let edge_perm = t.edge_perm(g);
    let perm = t.perm.iter().copied().chain(edge_perm.iter().map(|&f| n + f)).collect();
    let lifted = Involution::new(&sub, perm).expect("lifted map is an involution");
    (sub, lifted)
}

/// No vertex is adjacent to two distinct mutually symmetric vertices.
pub fn satisfies_star(g: &Graph, t: &Involution) -> bool {
    (0..g.nverts()).all(|v| {
        g.neighbors(v)
            .iter()
            .all(|&(w, _)| t.apply(w) == w || g.edge_index(v, t.apply(w)).is_none())
    })
}

/// Graph on the orbits `{v, tv}`; two orbits are joined when some of their
/// representatives are. Orbits are numbered by their smallest vertex.
pub fn quotient_graph(g: &Graph, t: &Involution) -> Result<Graph> {
    if !g.is_connected() {
        return domain("quotient requires a connected graph");
    }
    if t.fixed_vertices() > 0 {
        return domain("quotient requires an involution without fixed vertices");
    }
    if t.edge_perm(g).iter().enumerate().any(|(e, &f)| e == f) {
        return domain("quotient requires an involution without symmetric edges");
    }
    if !satisfies_star(g, t) {
        return domain("quotient requires that no vertex is adjacent to two mutually symmetric vertices");
    }
    let mut orbit = vec![usize::MAX; g.nverts()];
    let mut count = 0;
    for v in 0..g.nverts() {
        if orbit[v] == usize::MAX {
            orbit[v] = count;
            orbit[t.apply(v)] = count;
            count += 1;
        }
    }
    let edges: BTreeSet<(usize, usize)> = g
        .edges()
        .iter()
        .map(|&(u, v)| (orbit[u].min(orbit[v]), orbit[u].max(orbit[v])))
        .collect();
    Graph::new(count, edges)
}

fn tilde_check(n: usize, g: &Graph, c: &EdgeSet) -> Result<()> {
    if !is_one_cycle(g, c)? {
        return domain("edge set is not a 1-cycle of tilde n");
    }
    if Involution::tilde_swap(n).map_edges(g, c) != *c {
        return domain("edge set is not invariant under the part swap");
    }
    Ok(())
}

/// Folds a swap-invariant 1-cycle of `tilde n` onto `K_n`: the edge `{i, j}`
/// is present iff `i j'` is (equivalently `j i'`).
pub fn tilde_fold(n: usize, c: &EdgeSet) -> Result<EdgeSet> {
    let tilde = NamedGraph::Tilde(n).build()?;
    let kn = NamedGraph::Complete(n).build()?;
    tilde_check(n, &tilde, c)?;
    let mut out = kn.empty_edge_set();
    for (e, &(i, j)) in kn.edges().iter().enumerate() {
        if c.get(tilde.edge_index(i, n + j).expect("i != j gives an edge of tilde n")) {
            out.set(e, true);
        }
    }
    Ok(out)
}

/// Inverse of [`tilde_fold`]: each edge `{i, j}` of `K_n` lifts to `i j' + j i'`.
pub fn tilde_unfold(n: usize, c: &EdgeSet) -> Result<EdgeSet> {
    let tilde = NamedGraph::Tilde(n).build()?;
    let kn = NamedGraph::Complete(n).build()?;
    if !is_one_cycle(&kn, c)? {
        return domain("edge set is not a 1-cycle of K_n");
    }
    tilde.edge_set(c.iter_ones().flat_map(|e| {
        let (i, j) = kn.edge(e);
        [(i, n + j), (j, n + i)]
    }))
}

/// A basis of the cycle space of `tilde n` that the part swap permutes.
#[derive(Debug, Clone)]
pub struct TildeSymmetricBasis {
    pub basis: Vec<EdgeSet>,
    /// `t(basis[k]) = basis[perm[k]]`.
    pub perm: Vec<usize>,
    /// Index of the swap-invariant hexagon `1 2' 3 1' 2 3'`.
    pub hexagon: usize,
}

/// Builds the swap-stable basis of the cycle space of `tilde n`, `n >= 3`.
///
/// Starts from the fundamental cycles `c(ij')` for the spanning tree made of
/// the path `1 2' 3 1'` and the edges `i 1'`, `1 j'`. The hexagon is
/// `c(23')`; for `i > j > 1`, `(i, j) != (3, 2)`, the pair
/// `c(ij')`, `c(23') + c(ji')` is swapped by `t`.
pub fn tilde_symmetric_basis(n: usize) -> Result<TildeSymmetricBasis> {
    if n < 3 {
        return input(format!("tilde basis needs n >= 3, got {n}"));
    }
    let g = NamedGraph::Tilde(n).build()?;
    // 1-based labels i (left) and j' (right)
    let e = |i: usize, j: usize| g.edge_index(i - 1, n + j - 1).expect("i != j");
    let mut tree = g.empty_edge_set();
    for i in 2..=n {
        tree.set(e(i, 1), true);
        tree.set(e(1, i), true);
    }
    tree.set(e(3, 2), true);
    let forest = SpanningForest::from_tree_edges(&g, &tree)?;
    let hat = |i: usize, j: usize| forest.fundamental_cycle(&g, e(i, j));

    let hexagon = hat(2, 3);
    let mut basis = vec![hexagon.clone()];
    for i in 2..=n {
        for j in 2..i {
            if (i, j) == (3, 2) {
                continue;
            }
            basis.push(hat(i, j));
            basis.push(&hexagon ^ &hat(j, i));
        }
    }
    if basis.len() != g.cycle_rank() || gf2::rank_of(&basis) != basis.len() {
        return domain("constructed cycles do not form a basis");
    }
    let t = Involution::tilde_swap(n);
    let perm = basis
        .iter()
        .map(|b| {
            let image = t.map_edges(&g, b);
            basis.iter().position(|c| *c == image)
        })
        .collect::<Option<Vec<_>>>();
    let Some(perm) = perm else {
        return domain("part swap does not permute the basis");
    };
    Ok(TildeSymmetricBasis { basis, perm, hexagon: 0 })
}

/// Cycles of length 4 in `g`, as edge sets.
pub fn four_cycles(g: &Graph) -> Vec<EdgeSet> {
    graph::simple_cycles(g, Some(4))
        .into_iter()
        .filter(|c| c.len() == 4)
        .map(|c| g.simple_cycle(&c).expect("enumerated cycle"))
        .collect()
}

/// Generators `{hexagon} ∪ {Q + tQ : Q a 4-cycle}` of the swap-invariant
/// cycles of `tilde n`.
pub fn tilde_symmetric_generators(n: usize) -> Result<Vec<EdgeSet>> {
    let g = NamedGraph::Tilde(n).build()?;
    let t = Involution::tilde_swap(n);
    let mut gens = Vec::new();
    if n >= 3 {
        gens.push(g.simple_cycle(&[0, n + 1, 2, n, 1, n + 2])?);
    }
    gens.extend(four_cycles(&g).into_iter().map(|q| {
        let tq = t.map_edges(&g, &q);
        q ^ tq
    }));
    Ok(gens)
}

pub fn is_symmetric(g: &Graph, t: &Involution, c: &BitVec) -> bool {
    t.map_edges(g, c) == *c
}
