//! Mod-2 cycle spaces of graphs, graph products, deleted squares and
//! 2-hypergraphs.
//!
//! Everything reduces to exact linear algebra over GF(2) in [`gf2`]. The
//! [`brute`] module holds exhaustive subset counters used as independent
//! cross-checks of the linear-algebra dimensions.

pub mod brute;
pub mod cells;
pub mod error;
pub mod gf2;
pub mod graph;
pub mod hypergraph;
pub mod product;
pub mod symmetry;

pub use error::{Error, Result};
pub use gf2::{BitMatrix, BitVec};
pub use graph::{EdgeSet, Graph, NamedGraph};

/// Formats a count `2^k`, adding the decimal value when it fits in 63 bits.
pub fn format_power_of_two(k: usize) -> String {
    if k <= 63 {
        format!("2^{k} = {}", 1u64 << k)
    } else {
        format!("2^{k}")
    }
}

/// Binomial coefficient; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k.min(n - k)).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
