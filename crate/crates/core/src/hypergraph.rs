//! 2-hypergraphs, their 2-cycles, and rook cycles in `[n]^ℓ`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{domain, input, Result};
use crate::gf2::{self, BitMatrix, BitVec};
use crate::graph::{self, Graph};

/// A set of faces, indexed by position in [`Hypergraph2::faces`].
pub type FaceSet = BitVec;

/// Vertices `0..nverts` and a list of distinct 3-element faces. Edges are the
/// 2-subsets of faces, in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "HypergraphJson", into = "HypergraphJson")]
pub struct Hypergraph2 {
    nverts: usize,
    faces: Vec<[usize; 3]>,
    edges: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HypergraphJson {
    pub nverts: usize,
    pub faces: Vec<[usize; 3]>,
}

impl TryFrom<HypergraphJson> for Hypergraph2 {
    type Error = crate::Error;
    fn try_from(j: HypergraphJson) -> Result<Self> {
        Hypergraph2::new(j.nverts, j.faces)
    }
}

impl From<Hypergraph2> for HypergraphJson {
    fn from(h: Hypergraph2) -> Self {
        HypergraphJson { nverts: h.nverts, faces: h.faces }
    }
}

impl Hypergraph2 {
    /// Faces are stored sorted; their order in the list is kept.
    pub fn new<I: IntoIterator<Item = [usize; 3]>>(nverts: usize, faces: I) -> Result<Self> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for mut f in faces {
            f.sort_unstable();
            if f[0] == f[1] || f[1] == f[2] {
                return input(format!("face {f:?} has a repeated vertex"));
            }
            if f[2] >= nverts {
                return input(format!("face {f:?} has a vertex out of range (nverts = {nverts})"));
            }
            if !seen.insert(f) {
                return input(format!("duplicate face {f:?}"));
            }
            out.push(f);
        }
        let edges: BTreeSet<(usize, usize)> =
            out.iter().flat_map(|&[a, b, c]| [(a, b), (a, c), (b, c)]).collect();
        Ok(Self { nverts, faces: out, edges: edges.into_iter().collect() })
    }

    /// All 3-subsets of `0..n`.
    pub fn complete(n: usize) -> Self {
        let mut faces = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    faces.push([a, b, c]);
                }
            }
        }
        Self::new(n, faces).expect("complete hypergraph")
    }

    pub fn nverts(&self) -> usize {
        self.nverts
    }

    pub fn nfaces(&self) -> usize {
        self.faces.len()
    }

    pub fn nedges(&self) -> usize {
        self.edges.len()
    }

    pub fn faces(&self) -> &[[usize; 3]] {
        &self.faces
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn face_index(&self, mut f: [usize; 3]) -> Option<usize> {
        f.sort_unstable();
        self.faces.iter().position(|&g| g == f)
    }

    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        self.edges.binary_search(&(a.min(b), a.max(b))).ok()
    }

    /// Graph formed by the edges.
    pub fn edge_graph(&self) -> Graph {
        Graph::new(self.nverts, self.edges.iter().copied()).expect("edges are distinct")
    }

    pub fn empty_set(&self) -> FaceSet {
        FaceSet::zeros(self.nfaces())
    }

    pub fn full_set(&self) -> FaceSet {
        FaceSet::ones(self.nfaces())
    }

    pub fn face_set<I: IntoIterator<Item = [usize; 3]>>(&self, faces: I) -> Result<FaceSet> {
        let mut out = self.empty_set();
        for f in faces {
            let i = self.face_index(f).ok_or_else(|| crate::Error::Input(format!("{f:?} is not a face")))?;
            out.toggle(i);
        }
        Ok(out)
    }

    pub fn check(&self, c: &FaceSet) -> Result<()> {
        if c.len() != self.nfaces() {
            return input(format!("face set has length {}, hypergraph has {} faces", c.len(), self.nfaces()));
        }
        Ok(())
    }

    /// Boundary of face `i` as an edge set over [`Self::edges`].
    pub fn face_boundary(&self, i: usize) -> BitVec {
        let [a, b, c] = self.faces[i];
        BitVec::from_indices(self.nedges(), [(a, b), (a, c), (b, c)].map(|(x, y)| self.edge_index(x, y).unwrap()))
    }

    /// One row per face.
    pub fn boundary_matrix(&self) -> BitMatrix {
        BitMatrix::from_rows(self.nedges(), (0..self.nfaces()).map(|i| self.face_boundary(i)).collect())
            .expect("rows sized to the edges")
    }

    /// Number of faces containing each edge.
    pub fn edge_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.nedges()];
        for i in 0..self.nfaces() {
            for e in self.face_boundary(i).iter_ones() {
                deg[e] += 1;
            }
        }
        deg
    }

    /// The union of the edges is a connected graph.
    pub fn is_connected(&self) -> bool {
        self.edge_graph().is_connected()
    }

    /// Any two faces are joined by a chain of faces sharing edges.
    pub fn is_face_connected(&self) -> bool {
        if self.faces.is_empty() {
            return true;
        }
        let bounds: Vec<BitVec> = (0..self.nfaces()).map(|i| self.face_boundary(i)).collect();
        let mut seen = vec![false; self.nfaces()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for j in 0..self.nfaces() {
                if !seen[j] && !bounds[i].and(&bounds[j]).is_zero() {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen.iter().all(|&s| s)
    }
}

/// Every edge lies in an even number of faces of `c`.
pub fn edge_parity_criterion(h: &Hypergraph2, c: &FaceSet) -> Result<bool> {
    h.check(c)?;
    let mut count = vec![0usize; h.nedges()];
    for i in c.iter_ones() {
        for e in h.face_boundary(i).iter_ones() {
            count[e] += 1;
        }
    }
    Ok(count.iter().all(|k| k % 2 == 0))
}

/// The face boundaries of `c` sum to zero.
pub fn boundary_sum_criterion(h: &Hypergraph2, c: &FaceSet) -> Result<bool> {
    h.check(c)?;
    let mut acc = BitVec::zeros(h.nedges());
    for i in c.iter_ones() {
        acc ^= &h.face_boundary(i);
    }
    Ok(acc.is_zero())
}

pub fn is_two_cycle(h: &Hypergraph2, c: &FaceSet) -> Result<bool> {
    let parity = edge_parity_criterion(h, c)?;
    debug_assert_eq!(Ok(parity), boundary_sum_criterion(h, c));
    Ok(parity)
}

/// Basis of the 2-cycles, as the left kernel of the boundary matrix.
pub fn two_cycle_basis(h: &Hypergraph2) -> Vec<FaceSet> {
    if h.nfaces() == 0 {
        return Vec::new();
    }
    gf2::left_kernel_basis(&h.boundary_matrix())
}

/// Tetrahedron on four vertices of `h`.
pub fn tetrahedron(h: &Hypergraph2, [a, b, c, d]: [usize; 4]) -> Result<FaceSet> {
    h.face_set([[a, b, c], [a, b, d], [a, c, d], [b, c, d]])
}

#[derive(Debug, Clone)]
pub struct CompleteSpace {
    pub dim: usize,
    /// Tetrahedra `T_{i,j,k,n-1}` for `i < j < k < n - 1`.
    pub basis: Vec<FaceSet>,
}

/// 2-cycles of the complete 2-hypergraph on `0..n`.
pub fn complete_2cycle_space(n: usize) -> Result<CompleteSpace> {
    let h = Hypergraph2::complete(n);
    let mut basis = Vec::new();
    if n >= 4 {
        let top = n - 1;
        for &[i, j, k] in h.faces().iter().filter(|f| f[2] < top) {
            basis.push(tetrahedron(&h, [i, j, k, top])?);
        }
    }
    let kernel_dim = two_cycle_basis(&h).len();
    if gf2::rank_of(&basis) != basis.len() || basis.len() != kernel_dim {
        return domain("tetrahedra through the last vertex do not form a basis");
    }
    Ok(CompleteSpace { dim: basis.len(), basis })
}

/// Writes a 2-cycle of the complete hypergraph on `0..n` as the sum of
/// `T_{i,j,k,n-1}` over its faces `{i, j, k}` avoiding `n - 1`. Returns
/// those faces.
pub fn decompose_two_cycle(n: usize, c: &FaceSet) -> Result<Vec<[usize; 3]>> {
    let h = Hypergraph2::complete(n);
    if !is_two_cycle(&h, c)? {
        return domain("face set is not a 2-cycle");
    }
    let terms: Vec<[usize; 3]> = c.iter_ones().map(|i| h.faces()[i]).filter(|f| f[2] + 1 < n).collect();
    let mut acc = c.clone();
    for &[i, j, k] in &terms {
        acc ^= &tetrahedron(&h, [i, j, k, n - 1])?;
    }
    if !acc.is_zero() {
        return domain("2-cycle is not the sum of its tetrahedra");
    }
    Ok(terms)
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            cur.push(x);
            go(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// The five tetrahedra of each 5-set sum to zero, and these relations span
/// all linear relations among the tetrahedra of `0..n`.
pub fn tetrahedra_relation_check(n: usize) -> Result<bool> {
    let h = Hypergraph2::complete(n);
    let quads = subsets(n, 4);
    if quads.is_empty() {
        return Ok(true);
    }
    let gens = quads
        .iter()
        .map(|q| tetrahedron(&h, [q[0], q[1], q[2], q[3]]))
        .collect::<Result<Vec<_>>>()?;
    let relations: Vec<BitVec> = subsets(n, 5)
        .iter()
        .map(|a| {
            let members = (0..5).map(|skip| {
                let q: Vec<usize> = a.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &x)| x).collect();
                quads.iter().position(|p| *p == q).expect("4-subset listed")
            });
            BitVec::from_indices(quads.len(), members)
        })
        .collect();
    graph::relation_space_check(&gens, &relations)
}

/// Grid `[n]^ℓ`; points in lexicographic order, first coordinate most
/// significant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RookGrid {
    pub n: usize,
    pub ell: usize,
}

impl RookGrid {
    pub fn new(n: usize, ell: usize) -> Result<Self> {
        if n == 0 || ell == 0 {
            return input("rook grid needs n >= 1 and ell >= 1");
        }
        match n.checked_pow(ell as u32) {
            Some(p) if p <= 1 << 24 => Ok(Self { n, ell }),
            _ => input(format!("grid [{n}]^{ell} is too large")),
        }
    }

    pub fn npoints(&self) -> usize {
        self.n.pow(self.ell as u32)
    }

    pub fn nrows(&self) -> usize {
        self.ell * self.n.pow(self.ell as u32 - 1)
    }

    pub fn coords(&self, mut p: usize) -> Vec<usize> {
        let mut out = vec![0; self.ell];
        for d in (0..self.ell).rev() {
            out[d] = p % self.n;
            p /= self.n;
        }
        out
    }

    pub fn index(&self, coords: &[usize]) -> usize {
        coords.iter().fold(0, |acc, &x| acc * self.n + x)
    }

    pub fn empty_set(&self) -> BitVec {
        BitVec::zeros(self.npoints())
    }

    pub fn check(&self, c: &BitVec) -> Result<()> {
        if c.len() != self.npoints() {
            return input(format!("point set has length {}, grid has {} points", c.len(), self.npoints()));
        }
        Ok(())
    }

    /// Row of point `p` along axis `axis`: the axis, then the other
    /// coordinates in order.
    fn row_of(&self, p: &[usize], axis: usize) -> usize {
        let rest = p.iter().enumerate().filter(|&(d, _)| d != axis).fold(0, |acc, (_, &x)| acc * self.n + x);
        axis * self.n.pow(self.ell as u32 - 1) + rest
    }

    /// One row per grid row, one column per point.
    pub fn constraint_matrix(&self) -> BitMatrix {
        let mut rows = vec![BitVec::zeros(self.npoints()); self.nrows()];
        for p in 0..self.npoints() {
            let c = self.coords(p);
            for axis in 0..self.ell {
                rows[self.row_of(&c, axis)].toggle(p);
            }
        }
        BitMatrix::from_rows(self.npoints(), rows).expect("rows sized to the grid")
    }

    pub fn is_rook_cycle(&self, c: &BitVec) -> Result<bool> {
        self.check(c)?;
        let mut parity = vec![false; self.nrows()];
        for p in c.iter_ones() {
            let coords = self.coords(p);
            for axis in 0..self.ell {
                parity[self.row_of(&coords, axis)] ^= true;
            }
        }
        Ok(parity.iter().all(|&x| !x))
    }

    /// `P_1 × … × P_ℓ` for 2-subsets `P_i`.
    pub fn parallelepiped(&self, sides: &[[usize; 2]]) -> Result<BitVec> {
        if sides.len() != self.ell {
            return input(format!("expected {} sides, got {}", self.ell, sides.len()));
        }
        if let Some(s) = sides.iter().find(|s| s[0] == s[1] || s[0] >= self.n || s[1] >= self.n) {
            return input(format!("side {s:?} is not a 2-subset of [{}]", self.n));
        }
        let mut out = self.empty_set();
        for pick in 0..1usize << self.ell {
            let coords: Vec<usize> = (0..self.ell).map(|d| sides[d][(pick >> d) & 1]).collect();
            out.set(self.index(&coords), true);
        }
        Ok(out)
    }

    /// `P(a) = {n-1, a_1} × … × {n-1, a_ℓ}` for `a` avoiding `n - 1`.
    pub fn corner_parallelepiped(&self, a: &[usize]) -> Result<BitVec> {
        let top = self.n - 1;
        let sides: Vec<[usize; 2]> = a.iter().map(|&x| [top, x]).collect();
        self.parallelepiped(&sides)
    }

    /// Points of `c` inside `[n-1]^ℓ`; `c` is the sum of their `P(a)`.
    pub fn decompose(&self, c: &BitVec) -> Result<Vec<usize>> {
        if !self.is_rook_cycle(c)? {
            return domain("point set is not a rook cycle");
        }
        let top = self.n - 1;
        let terms: Vec<usize> = c.iter_ones().filter(|&p| self.coords(p).iter().all(|&x| x < top)).collect();
        let mut acc = c.clone();
        for &p in &terms {
            acc ^= &self.corner_parallelepiped(&self.coords(p))?;
        }
        if !acc.is_zero() {
            return domain("rook cycle is not the sum of its corner parallelepipeds");
        }
        Ok(terms)
    }

    /// Dimension of the rook cycle space, by elimination.
    pub fn space_dim(&self) -> usize {
        self.npoints() - gf2::rank(&self.constraint_matrix())
    }

    /// `(n-1)^ℓ`, the candidate closed form gated by the brute-force oracle.
    pub fn claimed_dim(&self) -> usize {
        (self.n - 1).pow(self.ell as u32)
    }

    /// The corner parallelepipeds, one per point of `[n-1]^ℓ`.
    pub fn corner_basis(&self) -> Vec<BitVec> {
        let inner = RookGrid { n: self.n - 1, ell: self.ell };
        if self.n == 1 {
            return Vec::new();
        }
        (0..inner.npoints())
            .map(|i| self.corner_parallelepiped(&inner.coords(i)).expect("corner in range"))
            .collect()
    }
}

/// The tripartite hypergraph on `[3] × [n]` (vertex `(r, a)` is `r·n + a`)
/// whose face `{(a,0), (b,1), (c,2)}` has the same index as the point
/// `(a, b, c)` of `[n]^3`.
pub fn tripartite_hypergraph(n: usize) -> Hypergraph2 {
    let faces = (0..n).flat_map(|a| (0..n).flat_map(move |b| (0..n).map(move |c| [a, n + b, 2 * n + c])));
    Hypergraph2::new(3 * n, faces).expect("transversal triples are distinct")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BridgeReport {
    pub n: usize,
    pub hypergraph_dim: usize,
    pub rook_dim: usize,
    /// Every 2-cycle basis element is a rook cycle.
    pub forward: bool,
    /// Every rook cycle basis element is a 2-cycle.
    pub backward: bool,
}

/// Checks that the face-to-point bijection matches 2-cycles and rook cycles.
pub fn hyper_rook_bridge(n: usize) -> Result<BridgeReport> {
    let h = tripartite_hypergraph(n);
    let grid = RookGrid::new(n, 3)?;
    let hyper = two_cycle_basis(&h);
    let rook = gf2::kernel_basis(&grid.constraint_matrix());
    let forward = hyper.iter().map(|c| grid.is_rook_cycle(c)).collect::<Result<Vec<_>>>()?.into_iter().all(|x| x);
    let backward = rook.iter().map(|c| is_two_cycle(&h, c)).collect::<Result<Vec<_>>>()?.into_iter().all(|x| x);
    Ok(BridgeReport { n, hypergraph_dim: hyper.len(), rook_dim: rook.len(), forward, backward })
}

/// Octahedron surface: antipodal pairs `{0,1}`, `{2,3}`, `{4,5}`, one face
/// per choice from each pair.
pub fn octahedron() -> Hypergraph2 {
    let faces = (0..8).map(|m| [m & 1, 2 + ((m >> 1) & 1), 4 + ((m >> 2) & 1)]);
    Hypergraph2::new(6, faces).expect("octahedron")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EulerReport {
    pub b0: usize,
    pub b1: usize,
    pub b2: usize,
    pub v: usize,
    pub e: usize,
    pub f: usize,
    pub identity_holds: bool,
}

pub fn euler_report(h: &Hypergraph2) -> EulerReport {
    let g = h.edge_graph();
    let rank = if h.nfaces() == 0 { 0 } else { gf2::rank(&h.boundary_matrix()) };
    let b0 = g.component_count();
    let b1 = g.cycle_rank() - rank;
    let b2 = h.nfaces() - rank;
    let (v, e, f) = (h.nverts(), h.nedges(), h.nfaces());
    let identity_holds = (b0 + b2) as i64 - b1 as i64 == v as i64 - e as i64 + f as i64;
    EulerReport { b0, b1, b2, v, e, f, identity_holds }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExtremalCase {
    /// Every edge in exactly two faces: `2V - 4 <= F`, i.e. `V - E + F <= 2`.
    ClosedSurface,
    /// Every edge in at most two faces, some in one: `V - E + F <= 1`.
    WithBorder,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremalReport {
    pub face_connected: bool,
    /// `None` when the degree hypotheses fail.
    pub case: Option<ExtremalCase>,
    pub lhs: i64,
    pub rhs: i64,
    /// `None` unless a case applies to a face-connected hypergraph.
    pub holds: Option<bool>,
}

pub fn extremal_check(h: &Hypergraph2) -> ExtremalReport {
    let face_connected = h.is_face_connected() && h.nfaces() > 0;
    let deg = h.edge_degrees();
    let (v, e, f) = (h.nverts() as i64, h.nedges() as i64, h.nfaces() as i64);
    let case = if deg.iter().all(|&d| d == 2) {
        Some(ExtremalCase::ClosedSurface)
    } else if deg.iter().all(|&d| d <= 2) && deg.contains(&1) {
        Some(ExtremalCase::WithBorder)
    } else {
        None
    };
    let (lhs, rhs) = match case {
        Some(ExtremalCase::ClosedSurface) => (2 * v - 4, f),
        _ => (v - e + f, 1),
    };
    let holds = (face_connected && case.is_some()).then_some(lhs <= rhs);
    ExtremalReport { face_connected, case, lhs, rhs, holds }
}

/// Adds the face `{v, V, V+1}` sharing only the vertex `v`.
pub fn pad_vertex(h: &Hypergraph2, v: usize) -> Result<Hypergraph2> {
    if v >= h.nverts() {
        return input(format!("vertex {v} out of range"));
    }
    let n = h.nverts();
    Hypergraph2::new(n + 2, h.faces().iter().copied().chain([[v, n, n + 1]]))
}

/// Adds the face `{a, b, V}` sharing only the edge `ab`.
pub fn pad_edge(h: &Hypergraph2, a: usize, b: usize) -> Result<Hypergraph2> {
    if h.edge_index(a, b).is_none() {
        return input(format!("({a}, {b}) is not an edge"));
    }
    let n = h.nverts();
    Hypergraph2::new(n + 1, h.faces().iter().copied().chain([[a, b, n]]))
}

/// The 6-vertex triangulation of the projective plane.
pub fn projective_plane() -> Hypergraph2 {
    let faces = [
        [0, 1, 2],
        [0, 2, 3],
        [0, 3, 4],
        [0, 4, 5],
        [0, 5, 1],
        [1, 2, 4],
        [2, 3, 5],
        [3, 4, 1],
        [4, 5, 2],
        [5, 1, 3],
    ];
    Hypergraph2::new(6, faces).expect("projective plane")
}

/// A strip of ten triangles `{i, i+1, i+2}`.
pub fn disk_strip() -> Hypergraph2 {
    Hypergraph2::new(12, (0..10).map(|i| [i, i + 1, i + 2])).expect("strip")
}

/// Two connected hypergraphs with equal `(V, E, F)`: the padded strip (no
/// nonzero 2-cycle) and the padded projective plane (one).
pub fn equal_counts_pair() -> (Hypergraph2, Hypergraph2) {
    let mut disk = disk_strip();
    let mut plane = projective_plane();
    while plane.nedges() != disk.nedges() {
        // the projective plane starts with fewer edges; each round closes the gap by one
        plane = pad_vertex(&plane, plane.nverts() - 1).expect("vertex exists");
        let [_, b, c] = *disk.faces().last().expect("nonempty");
        disk = pad_edge(&disk, b, c).expect("edge of the last face");
    }
    (disk, plane)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hypergraph_validation() {
        assert!(Hypergraph2::new(3, [[0, 1, 1]]).is_err());
        assert!(Hypergraph2::new(3, [[0, 1, 3]]).is_err());
        assert!(Hypergraph2::new(3, [[0, 1, 2], [2, 1, 0]]).is_err());
        let h = Hypergraph2::new(4, [[2, 1, 0]]).unwrap();
        assert_eq!(h.faces(), &[[0, 1, 2]]);
        assert_eq!(h.nedges(), 3);
    }

    #[test]
    fn tetrahedron_is_a_cycle() {
        let h = Hypergraph2::complete(4);
        assert!(is_two_cycle(&h, &h.full_set()).unwrap());
        assert!(is_two_cycle(&h, &h.empty_set()).unwrap());
        assert!(!is_two_cycle(&h, &FaceSet::unit(4, 0)).unwrap());
        assert!(is_two_cycle(&h, &FaceSet::zeros(3)).is_err());
    }

    #[test]
    fn complete_dims() {
        assert_eq!(complete_2cycle_space(3).unwrap().dim, 0);
        assert_eq!(complete_2cycle_space(4).unwrap().dim, 1);
        assert_eq!(complete_2cycle_space(5).unwrap().dim, 4);
    }

    #[test]
    fn decompose_tetrahedron_in_five() {
        let h = Hypergraph2::complete(5);
        let t = tetrahedron(&h, [0, 1, 2, 3]).unwrap();
        assert_eq!(decompose_two_cycle(5, &t).unwrap().len(), 4);
        assert!(decompose_two_cycle(5, &h.empty_set()).unwrap().is_empty());
        assert!(decompose_two_cycle(5, &FaceSet::unit(10, 0)).is_err());
    }

    #[test]
    fn relations() {
        for n in 4..=7 {
            assert!(tetrahedra_relation_check(n).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn rook_basics() {
        let g = RookGrid::new(3, 2).unwrap();
        assert_eq!(g.nrows(), 6);
        assert_eq!(g.coords(5), vec![1, 2]);
        assert_eq!(g.index(&[1, 2]), 5);
        assert_eq!(g.space_dim(), 4);
        let p = g.parallelepiped(&[[0, 1], [0, 2]]).unwrap();
        assert!(g.is_rook_cycle(&p).unwrap());
        assert!(g.parallelepiped(&[[0, 0], [0, 1]]).is_err());
        assert!(RookGrid::new(0, 2).is_err());
    }

    #[test]
    fn rook_triangle_relation() {
        let g = RookGrid::new(3, 3).unwrap();
        let side = [[0, 2], [1, 2]];
        let mk = |s: [usize; 2]| g.parallelepiped(&[side[0], side[1], s]).unwrap();
        assert!((&(&mk([0, 1]) ^ &mk([1, 2])) ^ &mk([2, 0])).is_zero());
    }

    #[test]
    fn euler_small() {
        let t = Hypergraph2::new(3, [[0, 1, 2]]).unwrap();
        let r = euler_report(&t);
        assert_eq!((r.b0, r.b1, r.b2), (1, 0, 0));
        let r = euler_report(&Hypergraph2::complete(4));
        assert_eq!((r.b0, r.b1, r.b2), (1, 0, 1));
        let two = Hypergraph2::new(6, [[0, 1, 2], [3, 4, 5]]).unwrap();
        let r = euler_report(&two);
        assert_eq!((r.b0, r.b1, r.b2, r.identity_holds), (2, 0, 0, true));
    }

    #[test]
    fn extremal_small() {
        let r = extremal_check(&Hypergraph2::complete(4));
        assert_eq!((r.case, r.lhs, r.rhs, r.holds), (Some(ExtremalCase::ClosedSurface), 4, 4, Some(true)));
        let r = extremal_check(&Hypergraph2::new(3, [[0, 1, 2]]).unwrap());
        assert_eq!((r.case, r.lhs, r.rhs, r.holds), (Some(ExtremalCase::WithBorder), 1, 1, Some(true)));
        let r = extremal_check(&octahedron());
        assert_eq!((r.lhs, r.rhs, r.holds), (8, 8, Some(true)));
        let r = extremal_check(&projective_plane());
        assert_eq!((r.case, r.lhs, r.rhs, r.holds), (Some(ExtremalCase::ClosedSurface), 8, 10, Some(true)));
    }

    #[test]
    fn fixture_pair() {
        let (disk, plane) = equal_counts_pair();
        let (d, p) = (euler_report(&disk), euler_report(&plane));
        assert_eq!((d.v, d.e, d.f), (18, 33, 16));
        assert_eq!((p.v, p.e, p.f), (18, 33, 16));
        assert_eq!((d.b2, p.b2), (0, 1));
        assert!(disk.is_connected() && plane.is_connected());
        assert!(disk.is_face_connected());
    }

    #[test]
    fn hypergraph_json() {
        let h: Hypergraph2 = serde_json::from_str(r#"{"nverts":4,"faces":[[0,1,2],[0,1,3]]}"#).unwrap();
        assert_eq!(h.nfaces(), 2);
        assert!(serde_json::from_str::<Hypergraph2>(r#"{"nverts":2,"faces":[[0,1,2]]}"#).is_err());
    }
}
