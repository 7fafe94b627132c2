#![allow(dead_code)]

use proptest::prelude::*;
use toric_blowups::{Rat, WeightVector};

pub fn wv(w: &[u64]) -> WeightVector {
    WeightVector::new(w.to_vec()).unwrap()
}

pub fn rat(n: i128, d: i128) -> Rat {
    Rat::new(n, d).unwrap()
}

pub fn epsilons() -> [Rat; 3] {
    [Rat::ONE, rat(1, 2), rat(1, 3)]
}

/// Positive primitive weight vectors of dimension in `dims` with index at most `v_max`.
pub fn weights(dims: std::ops::RangeInclusive<usize>, v_max: u64) -> impl Strategy<Value = WeightVector> {
    dims.prop_flat_map(move |d| {
        let cap = (v_max + 1).saturating_sub(d as u64 - 1).max(1);
        prop::collection::vec(1..=cap, d)
    })
    .prop_filter_map("index in range and primitive", move |w| {
        let v = w.iter().sum::<u64>() - 1;
        if v == 0 || v > v_max {
            return None;
        }
        WeightVector::new(w).ok()
    })
}

pub fn eps_strategy() -> impl Strategy<Value = Rat> {
    prop::sample::select(epsilons().to_vec())
}
