//! Shared workloads for the criterion benchmarks.

use prym_core::perm::Permutation;
use prym_core::permgroup::{PermGroup, DEFAULT_CAP};

/// The symmetric group on `n` points from a transposition and an n-cycle.
pub fn symmetric_group(n: usize) -> PermGroup {
    let t = Permutation::from_cycles(n, &[vec![0, 1]]).unwrap();
    let c = Permutation::from_cycles(n, &[(0..n as u32).collect()]).unwrap();
    PermGroup::from_generators(&[t, c], DEFAULT_CAP).unwrap()
}
