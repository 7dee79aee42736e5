#![allow(dead_code)]

use std::sync::OnceLock;

use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};
use symplie_core::linalg::{Rational, SparseVector};
use symplie_core::surface_lie::SurfaceLie;

pub fn config(cases: u32) -> Config {
    Config {
        cases,
        rng_seed: RngSeed::Fixed(0x05ee_d1e5),
        failure_persistence: None,
        ..Config::default()
    }
}

pub fn surface(g: usize) -> &'static SurfaceLie {
    static CELLS: [OnceLock<SurfaceLie>; 6] =
        [OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new()];
    CELLS[g].get_or_init(|| SurfaceLie::new(g))
}

/// Sparse vectors of a given dimension with small integer entries.
pub fn sparse(dim: usize, max_terms: usize) -> impl Strategy<Value = SparseVector> {
    prop::collection::vec((0..dim, -3i64..=3), 0..=max_terms).prop_map(move |e| {
        SparseVector::from_entries(dim, e.into_iter().map(|(i, c)| (i, Rational::from_int(c))))
    })
}

pub fn nonzero_sparse(dim: usize, max_terms: usize) -> impl Strategy<Value = SparseVector> {
    sparse(dim, max_terms).prop_filter("nonzero", |v| !v.is_zero())
}
