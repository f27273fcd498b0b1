//! Simple graphs, their edge indexing, and the mod-2 cycle space.
//!
//! Edges are stored as `(u, v)` with `u < v`, sorted lexicographically; the
//! position of an edge in that list is its index in every [`EdgeSet`].

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{domain, input, Error, Result};
use crate::gf2::{self, BitMatrix, BitVec, Eliminator};

/// Indicator vector over the edges of a host graph.
pub type EdgeSet = BitVec;

#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphJson", into = "GraphJson")]
pub struct Graph {
    nverts: usize,
    edges: Vec<(usize, usize)>,
    index: HashMap<(usize, usize), usize>,
    adjacency: Vec<Vec<(usize, usize)>>,
}

/// Wire form: `{"nverts": int, "edges": [[u, v], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub nverts: usize,
    pub edges: Vec<[usize; 2]>,
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;
    fn try_from(j: GraphJson) -> Result<Self> {
        Graph::new(j.nverts, j.edges.into_iter().map(|[u, v]| (u, v)))
    }
}

impl From<Graph> for GraphJson {
    fn from(g: Graph) -> Self {
        GraphJson { nverts: g.nverts, edges: g.edges.iter().map(|&(u, v)| [u, v]).collect() }
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph").field("nverts", &self.nverts).field("edges", &self.edges).finish()
    }
}

impl Graph {
    /// Builds a graph, normalizing each edge to `(min, max)` and sorting.
    /// Loops, out-of-range endpoints and repeated edges are rejected.
    pub fn new<I: IntoIterator<Item = (usize, usize)>>(nverts: usize, edges: I) -> Result<Self> {
        let mut list = Vec::new();
        for (u, v) in edges {
            if u == v {
                return input(format!("loop at vertex {u}"));
            }
            if u >= nverts || v >= nverts {
                return input(format!("edge ({u}, {v}) has an endpoint outside 0..{nverts}"));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return input(format!("repeated edge {:?}", w[0]));
        }
        let index = list.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let mut adjacency = vec![Vec::new(); nverts];
        for (i, &(u, v)) in list.iter().enumerate() {
            adjacency[u].push((v, i));
            adjacency[v].push((u, i));
        }
        for adj in &mut adjacency {
            adj.sort_unstable();
        }
        Ok(Self { nverts, edges: list, index, adjacency })
    }

    pub fn nverts(&self) -> usize {
        self.nverts
    }

    pub fn nedges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> (usize, usize) {
        self.edges[i]
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.index.get(&(u.min(v), u.max(v))).copied()
    }

    /// `(neighbor, edge index)` pairs, sorted by neighbor.
    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn edges_adjacent(&self, e: usize, f: usize) -> bool {
        let (a, b) = self.edges[e];
        let (c, d) = self.edges[f];
        a == c || a == d || b == c || b == d
    }

    pub fn empty_edge_set(&self) -> EdgeSet {
        BitVec::zeros(self.nedges())
    }

    pub fn full_edge_set(&self) -> EdgeSet {
        BitVec::ones(self.nedges())
    }

    /// Edge set of the closed walk `v0 v1 ... vk v0`.
    ///
    /// Edges are toggled, so a walk reusing an edge an even number of times
    /// drops it. Fails if two consecutive vertices are not adjacent.
    pub fn closed_walk(&self, verts: &[usize]) -> Result<EdgeSet> {
        let mut c = self.empty_edge_set();
        for (i, &u) in verts.iter().enumerate() {
            let v = verts[(i + 1) % verts.len()];
            let e = self
                .edge_index(u, v)
                .ok_or_else(|| Error::Input(format!("vertices {u} and {v} are not adjacent")))?;
            c.toggle(e);
        }
        Ok(c)
    }

    /// Edge set of a simple cycle given by its vertex sequence.
    pub fn simple_cycle(&self, verts: &[usize]) -> Result<EdgeSet> {
        if verts.len() < 3 {
            return input(format!("a simple cycle needs at least 3 vertices, got {}", verts.len()));
        }
        let mut seen = verts.to_vec();
        seen.sort_unstable();
        if seen.windows(2).any(|w| w[0] == w[1]) {
            return input("cycle repeats a vertex");
        }
        self.closed_walk(verts)
    }

    pub fn edge_set<I: IntoIterator<Item = (usize, usize)>>(&self, edges: I) -> Result<EdgeSet> {
        let mut c = self.empty_edge_set();
        for (u, v) in edges {
            let e = self
                .edge_index(u, v)
                .ok_or_else(|| Error::Input(format!("({u}, {v}) is not an edge")))?;
            c.toggle(e);
        }
        Ok(c)
    }

    /// Component label per vertex (labels ordered by smallest vertex) and the
    /// number of components.
    pub fn components(&self) -> (Vec<usize>, usize) {
        let mut label = vec![usize::MAX; self.nverts];
        let mut count = 0;
        for s in 0..self.nverts {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = count;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &(w, _) in &self.adjacency[v] {
                    if label[w] == usize::MAX {
                        label[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        (label, count)
    }

    pub fn component_count(&self) -> usize {
        self.components().1
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// Dimension of the cycle space, `E - V + components`.
    pub fn cycle_rank(&self) -> usize {
        self.nedges() + self.component_count() - self.nverts
    }

    pub fn check_edge_set(&self, c: &EdgeSet) -> Result<()> {
        if c.len() != self.nedges() {
            return input(format!("edge set has length {}, graph has {} edges", c.len(), self.nedges()));
        }
        Ok(())
    }

    /// Parity of the degree of every vertex within `c`.
    pub fn odd_vertices(&self, c: &EdgeSet) -> Vec<usize> {
        let mut parity = vec![false; self.nverts];
        for e in c.iter_ones() {
            let (u, v) = self.edges[e];
            parity[u] ^= true;
            parity[v] ^= true;
        }
        (0..self.nverts).filter(|&v| parity[v]).collect()
    }

    /// Vertex-edge incidence matrix; row `v` marks the edges at `v`.
    pub fn incidence_matrix(&self) -> BitMatrix {
        let rows = (0..self.nverts)
            .map(|v| BitVec::from_indices(self.nedges(), self.adjacency[v].iter().map(|&(_, e)| e)))
            .collect();
        BitMatrix::from_rows(self.nedges(), rows).expect("rows built with edge count")
    }

    /// Subgraph induced on `keep` (vertices renumbered in the given order).
    pub fn induced(&self, keep: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let mut new_id = vec![usize::MAX; self.nverts];
        for (i, &v) in keep.iter().enumerate() {
            if v >= self.nverts {
                return input(format!("vertex {v} out of range"));
            }
            new_id[v] = i;
        }
        let edges: Vec<_> = self
            .edges
            .iter()
            .filter(|&&(u, v)| new_id[u] != usize::MAX && new_id[v] != usize::MAX)
            .map(|&(u, v)| (new_id[u], new_id[v]))
            .collect();
        Ok((Graph::new(keep.len(), edges)?, new_id))
    }
}

pub fn is_one_cycle(g: &Graph, c: &EdgeSet) -> Result<bool> {
    g.check_edge_set(c)?;
    Ok(g.odd_vertices(c).is_empty())
}

/// Named graph families. Bipartite graphs put the left part on `0..m` and
/// the right part on `m..m+n`, so the primed vertex `j'` is `m + j - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedGraph {
    Complete(usize),
    CompleteBipartite(usize, usize),
    Cycle(usize),
    /// Path on `n` vertices.
    Path(usize),
    /// Hub `0` joined to a rim cycle `1..=n`.
    Wheel(usize),
    /// `K_{n,n}` without the edges `j j'`.
    Tilde(usize),
}

impl NamedGraph {
    pub fn build(self) -> Result<Graph> {
        match self {
            NamedGraph::Complete(n) => {
                positive(n, "complete")?;
                Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
            }
            NamedGraph::CompleteBipartite(m, n) => {
                positive(m, "complete_bipartite")?;
                positive(n, "complete_bipartite")?;
                Graph::new(m + n, (0..m).flat_map(|u| (0..n).map(move |j| (u, m + j))))
            }
            NamedGraph::Cycle(n) => {
                if n < 3 {
                    return input(format!("cycle needs at least 3 vertices, got {n}"));
                }
                Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
            }
            NamedGraph::Path(n) => {
                positive(n, "path")?;
                Graph::new(n, (1..n).map(|i| (i - 1, i)))
            }
            NamedGraph::Wheel(n) => {
                if n < 3 {
                    return input(format!("wheel needs a rim of at least 3 vertices, got {n}"));
                }
                let spokes = (1..=n).map(|j| (0, j));
                let rim = (1..=n).map(|j| (j, j % n + 1));
                Graph::new(n + 1, spokes.chain(rim))
            }
            NamedGraph::Tilde(n) => {
                positive(n, "tilde")?;
                Graph::new(
                    2 * n,
                    (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, n + j))),
                )
            }
        }
    }
}

fn positive(n: usize, what: &str) -> Result<()> {
    if n == 0 {
        return input(format!("{what} needs a positive parameter"));
    }
    Ok(())
}

/// Builds a named graph from a generator name and its parameters.
pub fn named_graph(name: &str, params: &[usize]) -> Result<Graph> {
    let arity = |k: usize| -> Result<()> {
        if params.len() != k {
            return input(format!("{name} takes {k} parameter(s), got {}", params.len()));
        }
        Ok(())
    };
    let spec = match name {
        "complete" => {
            arity(1)?;
            NamedGraph::Complete(params[0])
        }
        "complete_bipartite" => {
            arity(2)?;
            NamedGraph::CompleteBipartite(params[0], params[1])
        }
        "cycle" => {
            arity(1)?;
            NamedGraph::Cycle(params[0])
        }
        "path" => {
            arity(1)?;
            NamedGraph::Path(params[0])
        }
        "wheel" => {
            arity(1)?;
            NamedGraph::Wheel(params[0])
        }
        "tilde" => {
            arity(1)?;
            NamedGraph::Tilde(params[0])
        }
        other => return input(format!("unknown generator {other:?}")),
    };
    spec.build()
}

/// Disjoint union; vertices of `h` are shifted by `g.nverts()`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let shift = g.nverts();
    let edges = g.edges().iter().copied().chain(h.edges().iter().map(|&(u, v)| (u + shift, v + shift)));
    Graph::new(g.nverts() + h.nverts(), edges).expect("union of valid graphs")
}

/// Replaces edge `e = ab` by the path `a - w - b` with a new vertex `w`.
pub fn subdivide_edge(g: &Graph, e: usize) -> Result<Graph> {
    if e >= g.nedges() {
        return input(format!("edge index {e} out of range"));
    }
    let (a, b) = g.edge(e);
    let w = g.nverts();
    let edges = g
        .edges()
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != e)
        .map(|(_, &uv)| uv)
        .chain([(a, w), (w, b)]);
    Graph::new(g.nverts() + 1, edges)
}

/// A spanning forest together with the parent pointers used for tree-path
/// queries. Each component is rooted at its smallest vertex.
#[derive(Debug, Clone)]
pub struct SpanningForest {
    tree_edges: EdgeSet,
    components: usize,
    parent: Vec<Option<(usize, usize)>>,
    depth: Vec<usize>,
}

impl SpanningForest {
    /// Breadth-first forest grown from the smallest-index vertex of each
    /// component, visiting neighbors in increasing order.
    pub fn bfs(g: &Graph) -> Self {
        let n = g.nverts();
        let mut parent = vec![None; n];
        let mut depth = vec![0; n];
        let mut seen = vec![false; n];
        let mut tree_edges = g.empty_edge_set();
        let mut components = 0;
        for root in 0..n {
            if seen[root] {
                continue;
            }
            components += 1;
            seen[root] = true;
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for &(w, e) in g.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        parent[w] = Some((v, e));
                        depth[w] = depth[v] + 1;
                        tree_edges.set(e, true);
                        queue.push_back(w);
                    }
                }
            }
        }
        Self { tree_edges, components, parent, depth }
    }

    /// Forest from an explicit edge set, which must be acyclic and span every
    /// component of `g`.
    pub fn from_tree_edges(g: &Graph, tree: &EdgeSet) -> Result<Self> {
        g.check_edge_set(tree)?;
        let forest_graph = Graph::new(g.nverts(), tree.iter_ones().map(|e| g.edge(e)))?;
        let (_, comps) = forest_graph.components();
        if tree.count_ones() + comps != g.nverts() {
            return input("tree edges contain a cycle");
        }
        if comps != g.component_count() {
            return input("tree edges do not span every component");
        }
        let bfs = SpanningForest::bfs(&forest_graph);
        // bfs edge indices refer to forest_graph; translate back
        let parent = bfs
            .parent
            .iter()
            .map(|p| {
                p.map(|(v, fe)| {
                    let (a, b) = forest_graph.edge(fe);
                    (v, g.edge_index(a, b).expect("tree edge belongs to g"))
                })
            })
            .collect();
        Ok(Self { tree_edges: tree.clone(), components: comps, parent, depth: bfs.depth })
    }

    pub fn tree_edges(&self) -> &EdgeSet {
        &self.tree_edges
    }

    pub fn components(&self) -> usize {
        self.components
    }

    pub fn is_tree_edge(&self, e: usize) -> bool {
        self.tree_edges.get(e)
    }

    /// Non-tree edges in increasing index order; this is the order of the
    /// fundamental-cycle basis.
    pub fn non_tree_edges(&self) -> Vec<usize> {
        (0..self.tree_edges.len()).filter(|&e| !self.tree_edges.get(e)).collect()
    }

    /// Edges of the tree path between `u` and `v` (same component).
    pub fn path(&self, mut u: usize, mut v: usize) -> Vec<usize> {
        let mut edges = Vec::new();
        while self.depth[u] > self.depth[v] {
            let (p, e) = self.parent[u].expect("non-root has a parent");
            edges.push(e);
            u = p;
        }
        while self.depth[v] > self.depth[u] {
            let (p, e) = self.parent[v].expect("non-root has a parent");
            edges.push(e);
            v = p;
        }
        while u != v {
            let (pu, eu) = self.parent[u].expect("vertices share a component");
            let (pv, ev) = self.parent[v].expect("vertices share a component");
            edges.push(eu);
            edges.push(ev);
            u = pu;
            v = pv;
        }
        edges
    }

    /// The cycle formed by non-tree edge `e` and the tree path between its ends.
    pub fn fundamental_cycle(&self, g: &Graph, e: usize) -> EdgeSet {
        let (a, b) = g.edge(e);
        let mut c = BitVec::from_indices(g.nedges(), self.path(a, b));
        c.set(e, true);
        c
    }
}

/// Fundamental-cycle basis, one cycle per non-tree edge in increasing edge order.
pub fn cycle_space_basis(g: &Graph) -> (SpanningForest, Vec<EdgeSet>) {
    let forest = SpanningForest::bfs(g);
    let basis = fundamental_cycles(g, &forest);
    (forest, basis)
}

pub fn fundamental_cycles(g: &Graph, forest: &SpanningForest) -> Vec<EdgeSet> {
    forest.non_tree_edges().into_iter().map(|e| forest.fundamental_cycle(g, e)).collect()
}

/// Coefficients of `c` over the fundamental cycles of `forest`: the cycle of
/// non-tree edge `σ` is selected exactly when `σ ∈ c`.
pub fn decompose_cycle(g: &Graph, forest: &SpanningForest, c: &EdgeSet) -> Result<BitVec> {
    if !is_one_cycle(g, c)? {
        return domain("edge set is not a 1-cycle");
    }
    let non_tree = forest.non_tree_edges();
    Ok(BitVec::from_indices(
        non_tree.len(),
        non_tree.iter().enumerate().filter(|(_, &e)| c.get(e)).map(|(i, _)| i),
    ))
}

/// Splits a 1-cycle into edge-disjoint simple cycles.
///
/// Walks along unused edges until a vertex repeats, peels off the simple
/// cycle just closed, and continues from the repeated vertex.
pub fn simple_cycle_split(g: &Graph, c: &EdgeSet) -> Result<Vec<EdgeSet>> {
    if !is_one_cycle(g, c)? {
        return domain("edge set is not a 1-cycle");
    }
    let mut remaining = c.clone();
    let mut out = Vec::new();
    let mut pos = vec![usize::MAX; g.nverts()];
    while let Some(e0) = remaining.first_one() {
        let start = g.edge(e0).0;
        let mut path_verts = vec![start];
        let mut path_edges: Vec<usize> = Vec::new();
        pos[start] = 0;
        loop {
            let v = *path_verts.last().expect("walk is nonempty");
            let Some(&(w, e)) = g.neighbors(v).iter().find(|&&(_, e)| remaining.get(e)) else {
                // only the start vertex can run dry, and only with an empty path
                debug_assert!(path_edges.is_empty());
                pos[v] = usize::MAX;
                break;
            };
            remaining.set(e, false);
            if pos[w] != usize::MAX {
                let at = pos[w];
                let mut cycle = BitVec::from_indices(g.nedges(), path_edges.drain(at..));
                cycle.set(e, true);
                out.push(cycle);
                for &u in &path_verts[at + 1..] {
                    pos[u] = usize::MAX;
                }
                path_verts.truncate(at + 1);
            } else {
                pos[w] = path_verts.len();
                path_verts.push(w);
                path_edges.push(e);
            }
        }
    }
    Ok(out)
}

/// Checks that `relations` (coefficient vectors over `generators`) are all
/// genuine relations and that they span every linear relation among the
/// generators.
pub fn relation_space_check(generators: &[BitVec], relations: &[BitVec]) -> Result<bool> {
    let len = generators.first().map_or(0, BitVec::len);
    for (i, r) in relations.iter().enumerate() {
        if r.len() != generators.len() {
            return input(format!("relation {i} has {} coefficients, expected {}", r.len(), generators.len()));
        }
        if !gf2::combine(generators, r, len).is_zero() {
            return input(format!("relation {i} does not sum to zero"));
        }
    }
    let gens = BitMatrix::from_rows(len, generators.to_vec())?;
    let kernel_dim = generators.len() - gf2::rank(&gens);
    Ok(gf2::rank_of(relations) == kernel_dim)
}

/// All simple cycles of length at most `max_len`, as vertex sequences that
/// start at their smallest vertex with `seq[1] < seq[last]`.
pub fn simple_cycles(g: &Graph, max_len: Option<usize>) -> Vec<Vec<usize>> {
    let limit = max_len.unwrap_or(g.nverts());
    let mut out = Vec::new();
    let mut on_path = vec![false; g.nverts()];
    for s in 0..g.nverts() {
        let mut path = vec![s];
        on_path[s] = true;
        extend_cycles(g, s, limit, &mut path, &mut on_path, &mut out);
        on_path[s] = false;
    }
    out
}

fn extend_cycles(
    g: &Graph,
    s: usize,
    limit: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    out: &mut Vec<Vec<usize>>,
) {
    let v = *path.last().expect("path starts at s");
    for &(w, _) in g.neighbors(v) {
        if w == s && path.len() >= 3 && path[1] < v {
            out.push(path.clone());
        } else if w > s && !on_path[w] && path.len() < limit {
            on_path[w] = true;
            path.push(w);
            extend_cycles(g, s, limit, path, on_path, out);
            path.pop();
            on_path[w] = false;
        }
    }
}

/// Spanning-set check used for the many "every 1-cycle is a sum of ..." claims:
/// every vector of `targets` lies in the span of `family`.
pub fn all_in_span(family: &[BitVec], targets: &[BitVec]) -> bool {
    let Some(len) = family.first().or(targets.first()).map(BitVec::len) else {
        return true;
    };
    let mut e = Eliminator::new(len);
    for v in family {
        e.insert(v);
    }
    targets.iter().all(|t| e.contains(t))
}
