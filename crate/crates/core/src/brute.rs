//! Exhaustive subset enumeration.
//!
//! Each element of a ground set is described by the set of parity constraints
//! it toggles (packed into a `u128`). A subset satisfies every constraint iff
//! the xor of its members' masks is zero. Subsets are visited in Gray-code
//! order so each step costs one xor. None of this touches [`crate::gf2`]; it
//! is the independent oracle for the dimension formulas.

use crate::error::{input, Result};
use crate::graph::Graph;

/// Largest ground set the command-line `--brute-force` flag accepts.
pub const CLI_MAX_ELEMENTS: usize = 24;

/// Number of subsets whose constraint masks xor to zero.
pub fn count_zero_syndrome(masks: &[u128], max_elements: usize) -> Result<u64> {
    if masks.len() > max_elements || masks.len() > 40 {
        return input(format!(
            "brute force over {} elements exceeds the limit of {max_elements}",
            masks.len()
        ));
    }
    let mut state = 0u128;
    let mut count = 1u64; // empty subset
    let total = 1u64 << masks.len();
    for i in 1..total {
        state ^= masks[i.trailing_zeros() as usize];
        if state == 0 {
            count += 1;
        }
    }
    Ok(count)
}

/// All subsets (as bitmasks over the ground set) whose masks xor to zero.
pub fn zero_syndrome_subsets(masks: &[u128], max_elements: usize) -> Result<Vec<u64>> {
    if masks.len() > max_elements || masks.len() > 40 {
        return input(format!(
            "brute force over {} elements exceeds the limit of {max_elements}",
            masks.len()
        ));
    }
    let mut out = vec![0u64];
    let mut state = 0u128;
    let mut subset = 0u64;
    for i in 1..(1u64 << masks.len()) {
        let bit = i.trailing_zeros() as usize;
        state ^= masks[bit];
        subset ^= 1 << bit;
        if state == 0 {
            out.push(subset);
        }
    }
    Ok(out)
}

/// Exact log2 of a count that must be a power of two.
pub fn log2_exact(count: u64) -> Option<usize> {
    count.is_power_of_two().then(|| count.trailing_zeros() as usize)
}

/// Per-edge masks marking the two endpoints; a subset is a 1-cycle iff its
/// masks cancel.
pub fn one_cycle_masks(g: &Graph) -> Result<Vec<u128>> {
    if g.nverts() > 128 {
        return input("brute force supports at most 128 vertices");
    }
    Ok(g.edges().iter().map(|&(u, v)| (1u128 << u) ^ (1u128 << v)).collect())
}

/// Masks for "1-cycle and invariant under `edge_perm`": the low bits track
/// vertex parity, the bits from `g.nverts()` on track the asymmetry `S + tS`.
pub fn symmetric_cycle_masks(g: &Graph, edge_perm: &[usize]) -> Result<Vec<u128>> {
    if g.nverts() + g.nedges() > 128 {
        return input("brute force supports vertices + edges <= 128");
    }
    let base = g.nverts();
    Ok(g.edges()
        .iter()
        .enumerate()
        .map(|(e, &(u, v))| {
            let mut m = (1u128 << u) ^ (1u128 << v);
            if edge_perm[e] != e {
                m ^= (1u128 << (base + e)) ^ (1u128 << (base + edge_perm[e]));
            }
            m
        })
        .collect())
}

/// Number of 1-cycles of `g`, by enumeration.
pub fn count_one_cycles(g: &Graph, max_elements: usize) -> Result<u64> {
    count_zero_syndrome(&one_cycle_masks(g)?, max_elements)
}

/// Number of 1-cycles of `g` fixed by an edge permutation, by enumeration.
pub fn count_symmetric_cycles(g: &Graph, edge_perm: &[usize], max_elements: usize) -> Result<u64> {
    count_zero_syndrome(&symmetric_cycle_masks(g, edge_perm)?, max_elements)
}

/// Number of 2-cycles of a face list: faces are 3-sets, constraints are the
/// 2-subsets of the vertex set, indexed by position in `edges`.
pub fn count_two_cycles(faces: &[[usize; 3]], edges: &[(usize, usize)], max_elements: usize) -> Result<u64> {
    if edges.len() > 128 {
        return input("brute force supports at most 128 edges");
    }
    let idx = |a: usize, b: usize| {
        edges
            .iter()
            .position(|&e| e == (a.min(b), a.max(b)))
            .expect("face edge listed")
    };
    let masks: Vec<u128> = faces
        .iter()
        .map(|&[a, b, c]| (1u128 << idx(a, b)) ^ (1u128 << idx(a, c)) ^ (1u128 << idx(b, c)))
        .collect();
    count_zero_syndrome(&masks, max_elements)
}

/// Number of rook cycles in `[n]^ell`: points are the ground set, rows (all
/// coordinates but one fixed) are the constraints.
pub fn count_rook_cycles(n: usize, ell: usize, max_elements: usize) -> Result<u64> {
    let points = n.pow(ell as u32);
    let rows = ell * n.pow(ell as u32 - 1);
    if rows > 128 {
        return input("brute force supports at most 128 rows");
    }
    let masks: Vec<u128> = (0..points)
        .map(|p| {
            let coords: Vec<usize> = (0..ell).map(|d| p / n.pow(d as u32) % n).collect();
            let mut m = 0u128;
            for free in 0..ell {
                // row id: free axis, then the other coordinates in base n
                let mut id = 0;
                for (d, &x) in coords.iter().enumerate().rev() {
                    if d != free {
                        id = id * n + x;
                    }
                }
                m ^= 1u128 << (free * n.pow(ell as u32 - 1) + id);
            }
            m
        })
        .collect();
    count_zero_syndrome(&masks, max_elements)
}
