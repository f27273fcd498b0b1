//! Box products of graphs, boundary 4-cycles and 1-cycles modulo boundaries.

use serde::{Deserialize, Serialize};

use crate::error::{domain, input, Result};
use crate::gf2::{self, BitMatrix, Eliminator};
use crate::graph::{self, cycle_space_basis, is_one_cycle, EdgeSet, Graph};
use crate::symmetry::{self, Involution};

/// What a product edge projects to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum EdgeLabel {
    /// `(a, τ)`: first coordinate fixed at vertex `a` of K, edge `τ` of L.
    FixedLeft { a: usize, tau: usize },
    /// `(σ, b)`: edge `σ` of K, second coordinate fixed at vertex `b` of L.
    FixedRight { sigma: usize, b: usize },
}

/// A 2-cell `σ × τ` and its boundary 4-cycle in the product graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cell {
    pub sigma: usize,
    pub tau: usize,
    pub boundary: EdgeSet,
}

/// `K □ L`, or its deleted version when both factors are the same graph.
#[derive(Debug, Clone)]
pub struct BoxProduct {
    left: Graph,
    right: Graph,
    deleted: bool,
    product: Graph,
    pairs: Vec<(usize, usize)>,
    index: Vec<Option<usize>>,
    labels: Vec<EdgeLabel>,
    cells: Vec<Cell>,
}

/// Cycle space of a product together with its boundary subspace.
#[derive(Debug, Clone)]
pub struct HomologySpace {
    pub z1_basis: Vec<EdgeSet>,
    pub boundary_rank: usize,
    pub quotient_dim: usize,
}

impl BoxProduct {
    pub fn new(left: &Graph, right: &Graph) -> Self {
        Self::build(left, right, false)
    }

    /// Induced subgraph of `K □ K` on pairs `(a, b)` with `a != b`, keeping
    /// only the cells of non-adjacent edge pairs.
    pub fn deleted_square(k: &Graph) -> Self {
        Self::build(k, k, true)
    }

    pub fn square(k: &Graph) -> Self {
        Self::build(k, k, false)
    }

    fn build(left: &Graph, right: &Graph, deleted: bool) -> Self {
        let (nl, nr) = (left.nverts(), right.nverts());
        let mut pairs = Vec::new();
        let mut index = vec![None; nl * nr];
        for a in 0..nl {
            for b in 0..nr {
                if !deleted || a != b {
                    index[a * nr + b] = Some(pairs.len());
                    pairs.push((a, b));
                }
            }
        }
        let at = |a: usize, b: usize| index[a * nr + b];
        let mut edges = Vec::new();
        for a in 0..nl {
            for &(u, v) in right.edges() {
                if let (Some(p), Some(q)) = (at(a, u), at(a, v)) {
                    edges.push((p, q));
                }
            }
        }
        for &(a, b) in left.edges() {
            for v in 0..nr {
                if let (Some(p), Some(q)) = (at(a, v), at(b, v)) {
                    edges.push((p, q));
                }
            }
        }
        let product = Graph::new(pairs.len(), edges).expect("product edges are distinct");
        let labels = product
            .edges()
            .iter()
            .map(|&(p, q)| {
                let ((a1, b1), (a2, b2)) = (pairs[p], pairs[q]);
                if a1 == a2 {
                    EdgeLabel::FixedLeft { a: a1, tau: right.edge_index(b1, b2).expect("edge of L") }
                } else {
                    EdgeLabel::FixedRight { sigma: left.edge_index(a1, a2).expect("edge of K"), b: b1 }
                }
            })
            .collect();
        let mut cells = Vec::new();
        for (sigma, &(a, b)) in left.edges().iter().enumerate() {
            for (tau, &(u, v)) in right.edges().iter().enumerate() {
                let corners = [at(a, u), at(b, u), at(b, v), at(a, v)];
                if corners.iter().all(Option::is_some) {
                    let walk: Vec<usize> = corners.iter().map(|c| c.unwrap()).collect();
                    let boundary = product.simple_cycle(&walk).expect("corners form a 4-cycle");
                    cells.push(Cell { sigma, tau, boundary });
                }
            }
        }
        Self { left: left.clone(), right: right.clone(), deleted, product, pairs, index, labels, cells }
    }

    pub fn left(&self) -> &Graph {
        &self.left
    }

    pub fn right(&self) -> &Graph {
        &self.right
    }

    pub fn graph(&self) -> &Graph {
        &self.product
    }

    pub fn is_deleted(&self) -> bool {
        self.deleted
    }

    pub fn is_square(&self) -> bool {
        self.left == self.right
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn pair(&self, v: usize) -> (usize, usize) {
        self.pairs[v]
    }

    /// Product vertex of `(a, b)`, if present.
    pub fn vertex(&self, a: usize, b: usize) -> Option<usize> {
        if a >= self.left.nverts() || b >= self.right.nverts() {
            return None;
        }
        self.index[a * self.right.nverts() + b]
    }

    pub fn labels(&self) -> &[EdgeLabel] {
        &self.labels
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn boundaries(&self) -> Vec<EdgeSet> {
        self.cells.iter().map(|c| c.boundary.clone()).collect()
    }

    /// Eliminator loaded with the boundaries in cell order.
    pub fn boundary_eliminator(&self) -> Eliminator {
        let mut e = Eliminator::new(self.product.nedges());
        for c in &self.cells {
            e.insert(&c.boundary);
        }
        e
    }

    fn product_vertex(&self, a: usize, b: usize) -> Result<usize> {
        self.vertex(a, b)
            .ok_or_else(|| crate::Error::Domain(format!("vertex ({a}, {b}) is not in the product")))
    }

    /// Edge set of the closed walk through the given vertex pairs.
    pub fn walk(&self, pairs: &[(usize, usize)]) -> Result<EdgeSet> {
        let verts = pairs.iter().map(|&(a, b)| self.product_vertex(a, b)).collect::<Result<Vec<_>>>()?;
        self.product.closed_walk(&verts)
    }

    /// `a × C` for a 1-cycle `C` of L.
    pub fn left_embed(&self, a: usize, c: &EdgeSet) -> Result<EdgeSet> {
        self.right.check_edge_set(c)?;
        let mut out = self.product.empty_edge_set();
        for tau in c.iter_ones() {
            let (u, v) = self.right.edge(tau);
            let e = self.product.edge_index(self.product_vertex(a, u)?, self.product_vertex(a, v)?);
            out.set(e.expect("product edge"), true);
        }
        Ok(out)
    }

    /// `C × b` for a 1-cycle `C` of K.
    pub fn right_embed(&self, c: &EdgeSet, b: usize) -> Result<EdgeSet> {
        self.left.check_edge_set(c)?;
        let mut out = self.product.empty_edge_set();
        for sigma in c.iter_ones() {
            let (u, v) = self.left.edge(sigma);
            let e = self.product.edge_index(self.product_vertex(u, b)?, self.product_vertex(v, b)?);
            out.set(e.expect("product edge"), true);
        }
        Ok(out)
    }

    fn check_cycle(&self, c: &EdgeSet) -> Result<()> {
        if !is_one_cycle(&self.product, c)? {
            return domain("edge set is not a 1-cycle of the product");
        }
        Ok(())
    }

    pub fn boundary_space(&self) -> HomologySpace {
        let (_, z1_basis) = cycle_space_basis(&self.product);
        let boundary_rank = gf2::rank_of(&self.boundaries());
        let quotient_dim = z1_basis.len() - boundary_rank;
        HomologySpace { z1_basis, boundary_rank, quotient_dim }
    }

    pub fn homologous(&self, c1: &EdgeSet, c2: &EdgeSet) -> Result<bool> {
        self.check_cycle(c1)?;
        self.check_cycle(c2)?;
        Ok(self.boundary_eliminator().contains(&(c1 ^ c2)))
    }

    /// Mod 2 projections `(c_x, c_y)` onto K and L.
    pub fn projections(&self, c: &EdgeSet) -> Result<(EdgeSet, EdgeSet)> {
        self.check_cycle(c)?;
        let mut cx = self.left.empty_edge_set();
        let mut cy = self.right.empty_edge_set();
        for e in c.iter_ones() {
            match self.labels[e] {
                EdgeLabel::FixedLeft { tau, .. } => cy.toggle(tau),
                EdgeLabel::FixedRight { sigma, .. } => cx.toggle(sigma),
            }
        }
        Ok((cx, cy))
    }

    /// Writes `c ~ C_K × b + a × C_L` and returns the boundary cells that
    /// make up the difference.
    pub fn kunneth_reduce(&self, c: &EdgeSet, a: usize, b: usize) -> Result<KunnethReduction> {
        if self.deleted {
            return domain("reduction is defined on the full product");
        }
        if !self.left.is_connected() || !self.right.is_connected() {
            return domain("reduction requires connected factors");
        }
        let (c_k, c_l) = self.projections(c)?;
        let rest = c ^ &(&self.right_embed(&c_k, b)? ^ &self.left_embed(a, &c_l)?);
        let coeffs = self
            .boundary_eliminator()
            .solve(&rest)
            .ok_or_else(|| crate::Error::Domain("difference is not a sum of boundaries".into()))?;
        Ok(KunnethReduction { c_k, c_l, witness: coeffs.iter_ones().collect() })
    }

    /// Coordinate swap `(x, y) -> (y, x)` on a square or deleted square.
    pub fn swap(&self) -> Result<Involution> {
        if !self.is_square() {
            return input("swap needs a square K □ K");
        }
        let perm = self.pairs.iter().map(|&(a, b)| self.vertex(b, a).expect("swap stays in the square")).collect();
        Involution::new(&self.product, perm)
    }

    pub fn special_cycle(&self, spec: &SpecialCycle) -> Result<EdgeSet> {
        let k = &self.left;
        let needs_square = !matches!(spec, SpecialCycle::Left { .. } | SpecialCycle::Right { .. } | SpecialCycle::Walk { .. } | SpecialCycle::Boundary { .. });
        if needs_square && !self.is_square() {
            return input("this cycle kind needs a square K □ K");
        }
        match spec {
            SpecialCycle::Left { vertex, cycle } => {
                let c = self.right.simple_cycle(cycle)?;
                self.left_embed(*vertex, &c)
            }
            SpecialCycle::Right { vertex, cycle } => {
                let c = self.left.simple_cycle(cycle)?;
                self.right_embed(&c, *vertex)
            }
            SpecialCycle::Symmetrized { vertex, cycle } => {
                let c = k.simple_cycle(cycle)?;
                Ok(&self.left_embed(*vertex, &c)? ^ &self.right_embed(&c, *vertex)?)
            }
            SpecialCycle::Diagonal { cycle } => {
                let n = base_cycle(k, cycle)?;
                let walk: Vec<_> = (0..n).flat_map(|i| [(cycle[i], cycle[i]), (cycle[i], cycle[(i + 1) % n])]).collect();
                self.walk(&walk)
            }
            SpecialCycle::NearDiagonal { cycle } => {
                let n = base_cycle(k, cycle)?;
                let walk: Vec<_> = (0..n)
                    .flat_map(|i| [(cycle[i], cycle[(i + 1) % n]), (cycle[i], cycle[(i + 2) % n])])
                    .collect();
                self.walk(&walk)
            }
            SpecialCycle::AntiDiagonal { cycle } => {
                let n = base_cycle(k, cycle)?;
                // second coordinate runs backwards: w_i = v_{2-i}
                let w = |i: usize| cycle[(n + 1 - i % n) % n];
                let walk: Vec<_> = (1..=n)
                    .flat_map(|i| [(cycle[i - 1], w(i)), (cycle[i % n], w(i))])
                    .collect();
                self.walk(&walk)
            }
            SpecialCycle::Triodic { center, leaves } => {
                let [l1, l2, l3] = *leaves;
                let c = *center;
                let distinct = [c, l1, l2, l3];
                if (0..4).any(|i| (i + 1..4).any(|j| distinct[i] == distinct[j])) {
                    return input("triod needs four distinct vertices");
                }
                if leaves.iter().any(|&l| k.edge_index(c, l).is_none()) {
                    return input("triod leaves must be adjacent to the center");
                }
                let half = [(l1, l3), (l1, c), (l1, l2), (c, l2), (l3, l2), (l3, c)];
                let walk: Vec<_> = half.iter().copied().chain(half.iter().map(|&(x, y)| (y, x))).collect();
                self.walk(&walk)
            }
            SpecialCycle::Boundary { sigma, tau } => {
                let s = self.left.edge_index(sigma[0], sigma[1]).ok_or_else(|| crate::Error::Input("sigma is not an edge".into()))?;
                let t = self.right.edge_index(tau[0], tau[1]).ok_or_else(|| crate::Error::Input("tau is not an edge".into()))?;
                self.cells
                    .iter()
                    .find(|c| c.sigma == s && c.tau == t)
                    .map(|c| c.boundary.clone())
                    .ok_or_else(|| crate::Error::Domain("cell is not in this product".into()))
            }
            SpecialCycle::Walk { vertices } => {
                let pairs: Vec<_> = vertices.iter().map(|&[a, b]| (a, b)).collect();
                self.walk(&pairs)
            }
        }
    }
}

fn base_cycle(k: &Graph, cycle: &[usize]) -> Result<usize> {
    k.simple_cycle(cycle)?;
    Ok(cycle.len())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KunnethReduction {
    pub c_k: EdgeSet,
    pub c_l: EdgeSet,
    /// Indices into [`BoxProduct::cells`].
    pub witness: Vec<usize>,
}

impl KunnethReduction {
    /// Recomputes `c + C_K × b + a × C_L + Σ witness` and expects zero.
    pub fn verify(&self, p: &BoxProduct, c: &EdgeSet, a: usize, b: usize) -> Result<bool> {
        let mut acc = c ^ &(&p.right_embed(&self.c_k, b)? ^ &p.left_embed(a, &self.c_l)?);
        for &i in &self.witness {
            acc ^= &p.cells()[i].boundary;
        }
        Ok(acc.is_zero())
    }
}

/// Named 1-cycles of a product. Vertex lists are cyclic sequences in the
/// factor graph; `Walk` lists product vertices as `[a, b]` pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SpecialCycle {
    Left { vertex: usize, cycle: Vec<usize> },
    Right { vertex: usize, cycle: Vec<usize> },
    Symmetrized { vertex: usize, cycle: Vec<usize> },
    Diagonal { cycle: Vec<usize> },
    NearDiagonal { cycle: Vec<usize> },
    AntiDiagonal { cycle: Vec<usize> },
    Triodic { center: usize, leaves: [usize; 3] },
    Boundary { sigma: [usize; 2], tau: [usize; 2] },
    Walk { vertices: Vec<[usize; 2]> },
}

pub fn box_product(k: &Graph, l: &Graph) -> BoxProduct {
    BoxProduct::new(k, l)
}

pub fn quotient_dim(k: &Graph, l: &Graph) -> usize {
    BoxProduct::new(k, l).boundary_space().quotient_dim
}

pub fn deleted_box_square(k: &Graph) -> BoxProduct {
    BoxProduct::deleted_square(k)
}

/// `dim Z₁(K^□) − rank(boundaries of non-adjacent edge pairs)`.
pub fn deleted_square_quotient_dim(k: &Graph) -> usize {
    BoxProduct::deleted_square(k).boundary_space().quotient_dim
}

/// Dimension of the swap-invariant 1-cycles of `K □ K`.
pub fn symmetric_square_dim(k: &Graph) -> Result<usize> {
    if !k.is_connected() {
        return domain("symmetric square dimension requires a connected graph");
    }
    let p = BoxProduct::square(k);
    Ok(symmetry::symmetric_cycle_dim(p.graph(), &p.swap()?).symmetric_dim)
}

/// `VE − C(V, 2)`.
pub fn symmetric_square_formula(k: &Graph) -> usize {
    k.nverts() * k.nedges() - crate::binomial(k.nverts(), 2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Ambient {
    Square,
    DeletedSquare,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Boundaries,
    Left,
    Right,
    Symmetrized,
    Diagonal,
    NearDiagonal,
    Triodic,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Boundaries,
        Family::Left,
        Family::Right,
        Family::Symmetrized,
        Family::Diagonal,
        Family::NearDiagonal,
        Family::Triodic,
    ];

    pub fn parse(name: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|f| f.name() == name)
            .ok_or_else(|| crate::Error::Input(format!("unknown family `{name}`")))
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Boundaries => "boundaries",
            Family::Left => "left",
            Family::Right => "right",
            Family::Symmetrized => "symmetrized",
            Family::Diagonal => "diagonal",
            Family::NearDiagonal => "near_diagonal",
            Family::Triodic => "triodic",
        }
    }
}

/// One generator offered to the harness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Member {
    pub family: Family,
    pub spec: SpecialCycle,
    pub cycle: EdgeSet,
}

/// Every member of `family` that lies in the ambient product. Cycle-based
/// families range over all simple cycles of K; near-diagonal cycles are
/// taken in both orientations.
pub fn family_members(p: &BoxProduct, family: Family) -> Vec<Member> {
    let k = p.left();
    let mut specs = Vec::new();
    let cycles = || graph::simple_cycles(k, None);
    match family {
        Family::Boundaries => {
            return p
                .cells()
                .iter()
                .map(|c| {
                    let (a, b) = p.left().edge(c.sigma);
                    let (u, v) = p.right().edge(c.tau);
                    Member {
                        family,
                        spec: SpecialCycle::Boundary { sigma: [a, b], tau: [u, v] },
                        cycle: c.boundary.clone(),
                    }
                })
                .collect();
        }
        Family::Left | Family::Right | Family::Symmetrized => {
            for cycle in cycles() {
                for vertex in 0..k.nverts() {
                    let cycle = cycle.clone();
                    specs.push(match family {
                        Family::Left => SpecialCycle::Left { vertex, cycle },
                        Family::Right => SpecialCycle::Right { vertex, cycle },
                        _ => SpecialCycle::Symmetrized { vertex, cycle },
                    });
                }
            }
        }
        Family::Diagonal => specs.extend(cycles().into_iter().map(|cycle| SpecialCycle::Diagonal { cycle })),
        Family::NearDiagonal => {
            for cycle in cycles() {
                let mut rev = cycle.clone();
                rev.reverse();
                specs.push(SpecialCycle::NearDiagonal { cycle });
                specs.push(SpecialCycle::NearDiagonal { cycle: rev });
            }
        }
        Family::Triodic => {
            for center in 0..k.nverts() {
                let nbrs: Vec<usize> = k.neighbors(center).iter().map(|&(w, _)| w).collect();
                for i in 0..nbrs.len() {
                    for j in i + 1..nbrs.len() {
                        for l in j + 1..nbrs.len() {
                            specs.push(SpecialCycle::Triodic { center, leaves: [nbrs[i], nbrs[j], nbrs[l]] });
                        }
                    }
                }
            }
        }
    }
    specs
        .into_iter()
        .filter_map(|spec| p.special_cycle(&spec).ok().map(|cycle| Member { family, spec, cycle }))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// Indices into [`HarnessReport::members`] whose sum is the target.
    InSpan { members: Vec<usize> },
    /// A functional vanishing on every member but not on the target.
    NotInSpan { functional: EdgeSet },
}

#[derive(Debug, Clone)]
pub struct HarnessReport {
    pub target: EdgeSet,
    pub members: Vec<Member>,
    pub family_rank: usize,
    pub verdict: Verdict,
}

impl HarnessReport {
    pub fn in_span(&self) -> bool {
        matches!(self.verdict, Verdict::InSpan { .. })
    }

    /// Rechecks the certificate from scratch.
    pub fn verify(&self) -> bool {
        match &self.verdict {
            Verdict::InSpan { members } => {
                let mut acc = self.target.clone();
                for &i in members {
                    acc ^= &self.members[i].cycle;
                }
                acc.is_zero()
            }
            Verdict::NotInSpan { functional } => {
                functional.dot(&self.target) && self.members.iter().all(|m| !functional.dot(&m.cycle))
            }
        }
    }
}

/// Decides whether `target` is a sum of members of `families` in the ambient
/// square. With `mod_boundaries` the ambient boundaries join the family.
pub fn span_harness(
    k: &Graph,
    ambient: Ambient,
    families: &[Family],
    target: &SpecialCycle,
    mod_boundaries: bool,
) -> Result<HarnessReport> {
    let p = match ambient {
        Ambient::Square => BoxProduct::square(k),
        Ambient::DeletedSquare => BoxProduct::deleted_square(k),
    };
    let target = p.special_cycle(target)?;
    p.check_cycle(&target)?;
    let mut names: Vec<Family> = families.to_vec();
    if mod_boundaries {
        names.push(Family::Boundaries);
    }
    names.sort();
    names.dedup();
    let members: Vec<Member> = names.iter().flat_map(|&f| family_members(&p, f)).collect();
    let cycles: Vec<EdgeSet> = members.iter().map(|m| m.cycle.clone()).collect();
    let len = p.graph().nedges();
    let mut e = Eliminator::new(len);
    for c in &cycles {
        e.insert(c);
    }
    let family_rank = e.rank();
    let verdict = match e.solve(&target) {
        Some(coeffs) => Verdict::InSpan { members: coeffs.iter_ones().collect() },
        None => {
            let matrix = BitMatrix::from_rows(len, cycles)?;
            let functional = gf2::kernel_basis(&matrix)
                .into_iter()
                .find(|phi| phi.dot(&target))
                .expect("a vector outside the row space pairs oddly with some kernel vector");
            Verdict::NotInSpan { functional }
        }
    };
    Ok(HarnessReport { target, members, family_rank, verdict })
}

/// Every swap-invariant element of the boundary span is a sum of invariant
/// boundaries `σ□σ` and pairs `B + swap(B)`.
pub fn symmetric_boundaries_check(k: &Graph) -> Result<bool> {
    let p = BoxProduct::square(k);
    let swap = p.swap()?;
    let action = symmetry::edge_action(p.graph(), &swap);
    let span = gf2::independent_subset(&p.boundaries());
    let invariant = gf2::fixed_subspace_basis(&span, &action)?;
    let gens: Vec<EdgeSet> = p
        .cells()
        .iter()
        .map(|c| if c.sigma == c.tau { c.boundary.clone() } else { &c.boundary ^ &swap.map_edges(p.graph(), &c.boundary) })
        .collect();
    Ok(graph::all_in_span(&gens, &invariant))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SymmetrizedReport {
    pub z1_dim: usize,
    pub symmetric_dim: usize,
    /// Every invariant 1-cycle is a sum of symmetrized cycles and boundaries.
    pub spanned: bool,
    /// Dimension of the image of `C -> [C × a + a × C]` over a cycle basis.
    pub class_image_dim: usize,
    /// Dimension of the invariant 1-cycles modulo boundaries.
    pub symmetric_class_dim: usize,
}

/// Symmetrized cycles over a fixed vertex `a` and a cycle basis of K.
pub fn symmetrized_report(k: &Graph, a: usize) -> Result<SymmetrizedReport> {
    if !k.is_connected() {
        return domain("requires a connected graph");
    }
    let p = BoxProduct::square(k);
    let swap = p.swap()?;
    let invariant = symmetry::symmetric_cycle_basis(p.graph(), &swap);
    let (_, basis) = cycle_space_basis(k);
    let symmetrized = basis
        .iter()
        .map(|c| Ok(&p.left_embed(a, c)? ^ &p.right_embed(c, a)?))
        .collect::<Result<Vec<_>>>()?;
    let boundaries = p.boundaries();
    let b_rank = gf2::rank_of(&boundaries);
    let with = |extra: &[EdgeSet]| gf2::rank_of(&[boundaries.as_slice(), extra].concat()) - b_rank;
    let mut gens = symmetrized.clone();
    gens.extend(boundaries.iter().cloned());
    Ok(SymmetrizedReport {
        z1_dim: basis.len(),
        symmetric_dim: invariant.len(),
        spanned: graph::all_in_span(&gens, &invariant),
        class_image_dim: with(&symmetrized),
        symmetric_class_dim: with(&invariant),
    })
}

/// Both projections of every boundary vanish.
pub fn boundaries_project_to_zero(p: &BoxProduct) -> bool {
    p.cells().iter().all(|c| p.projections(&c.boundary).is_ok_and(|(x, y)| x.is_zero() && y.is_zero()))
}

/// Product vertices as labelled pairs, for output.
pub fn pair_label(p: &BoxProduct, v: usize) -> [usize; 2] {
    let (a, b) = p.pair(v);
    [a, b]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::BitVec;
    use crate::graph::NamedGraph;

    fn k(n: usize) -> Graph {
        NamedGraph::Complete(n).build().unwrap()
    }

    #[test]
    fn sizes() {
        let k2 = k(2);
        let p = BoxProduct::new(&k2, &k2);
        assert_eq!((p.graph().nverts(), p.graph().nedges(), p.graph().cycle_rank()), (4, 4, 1));
        let p = BoxProduct::square(&k(3));
        assert_eq!((p.graph().nverts(), p.graph().nedges(), p.cells().len()), (9, 18, 9));
        assert_eq!(p.vertex(2, 1), Some(7));
    }

    #[test]
    fn grid_from_path() {
        let p3 = NamedGraph::Path(3).build().unwrap();
        let p = BoxProduct::square(&p3);
        assert_eq!((p.graph().nverts(), p.graph().nedges()), (9, 12));
        assert_eq!(p.boundary_space().quotient_dim, 0);
    }

    #[test]
    fn deleted_shapes() {
        let d = BoxProduct::deleted_square(&k(3));
        assert_eq!((d.graph().nverts(), d.graph().nedges(), d.graph().cycle_rank()), (6, 6, 1));
        assert!(d.cells().is_empty());
        let star = NamedGraph::CompleteBipartite(3, 1).build().unwrap();
        let d = BoxProduct::deleted_square(&star);
        assert_eq!((d.graph().nverts(), d.graph().nedges(), d.graph().component_count()), (12, 12, 1));
        let p3 = NamedGraph::Path(3).build().unwrap();
        let d = BoxProduct::deleted_square(&p3);
        assert_eq!((d.graph().nverts(), d.graph().nedges(), d.graph().component_count()), (6, 4, 2));
    }

    #[test]
    fn special_cycles_of_triangle() {
        let p = BoxProduct::square(&k(3));
        let c = vec![0, 1, 2];
        let diag = p.special_cycle(&SpecialCycle::Diagonal { cycle: c.clone() }).unwrap();
        assert_eq!(diag, p.walk(&[(0, 0), (0, 1), (1, 1), (1, 2), (2, 2), (2, 0)]).unwrap());
        let anti = p.special_cycle(&SpecialCycle::AntiDiagonal { cycle: c.clone() }).unwrap();
        assert_eq!(anti, p.walk(&[(0, 0), (1, 0), (1, 2), (2, 2), (2, 1), (0, 1)]).unwrap());
        let near = p.special_cycle(&SpecialCycle::NearDiagonal { cycle: c.clone() }).unwrap();
        assert_eq!(near, p.walk(&[(0, 1), (0, 2), (1, 2), (1, 0), (2, 0), (2, 1)]).unwrap());
        assert!(p.special_cycle(&SpecialCycle::Diagonal { cycle: vec![0, 1] }).is_err());
    }

    #[test]
    fn diagonal_matches_symmetrized_mod_boundaries() {
        let p = BoxProduct::square(&k(3));
        let diag = p.special_cycle(&SpecialCycle::Diagonal { cycle: vec![0, 1, 2] }).unwrap();
        let sym = p.special_cycle(&SpecialCycle::Symmetrized { vertex: 0, cycle: vec![0, 1, 2] }).unwrap();
        assert!(p.homologous(&diag, &sym).unwrap());
        let left = p.special_cycle(&SpecialCycle::Left { vertex: 0, cycle: vec![0, 1, 2] }).unwrap();
        assert!(!p.homologous(&left, &p.graph().empty_edge_set()).unwrap());
        assert!(p.homologous(&p.graph().empty_edge_set(), &BitVec::unit(18, 0)).is_err());
    }

    #[test]
    fn projections_and_reduction() {
        let p = BoxProduct::square(&k(3));
        assert!(boundaries_project_to_zero(&p));
        let diag = p.special_cycle(&SpecialCycle::Diagonal { cycle: vec![0, 1, 2] }).unwrap();
        let (x, y) = p.projections(&diag).unwrap();
        assert_eq!((x.count_ones(), y.count_ones()), (3, 3));
        let r = p.kunneth_reduce(&diag, 0, 0).unwrap();
        assert!(r.verify(&p, &diag, 0, 0).unwrap());
        assert_eq!(r.witness.len(), 3);
    }

    #[test]
    fn triodic_is_whole_deleted_star_square() {
        let star = NamedGraph::CompleteBipartite(3, 1).build().unwrap();
        let d = BoxProduct::deleted_square(&star);
        let t = d.special_cycle(&SpecialCycle::Triodic { center: 3, leaves: [0, 1, 2] }).unwrap();
        assert_eq!(t, d.graph().full_edge_set());
    }

    #[test]
    fn family_names_round_trip() {
        for f in Family::ALL {
            assert_eq!(Family::parse(f.name()).unwrap(), f);
        }
        assert!(Family::parse("spiral").is_err());
    }

    #[test]
    fn special_cycle_json() {
        let s: SpecialCycle = serde_json::from_str(r#"{"kind":"triodic","center":3,"leaves":[0,1,2]}"#).unwrap();
        assert_eq!(s, SpecialCycle::Triodic { center: 3, leaves: [0, 1, 2] });
    }
}
