use serde::{Deserialize, Serialize};

/// Budgets for the exhaustive procedures. Exceeding one is reported as
/// [`crate::Error::ResourceLimit`], never as an answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    /// Largest cycle-space dimension whose cosets are enumerated.
    pub max_cycle_dim: u32,
    /// Largest number of even vertex subsets a collapsibility test may visit
    /// (`2^(n-1)`; the default admits `n <= 18`).
    pub max_even_subsets: u64,
    /// Largest order for the set-partition enumeration behind `F(G)`.
    pub max_partition_n: usize,
    /// Largest order for the Berge-Tutte separator scan.
    pub max_matching_n: usize,
    /// Largest order for vertex-subset searches (reducedness, gadget search).
    pub max_subset_n: usize,
    /// Largest order accepted by the isomorphism search.
    pub max_iso_n: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_cycle_dim: 24,
            max_even_subsets: 1 << 17,
            max_partition_n: 12,
            max_matching_n: 20,
            max_subset_n: 20,
            max_iso_n: 128,
        }
    }
}
