//! Independent oracles and generators shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use twinlattice::{CartanMatrix2, RootVector, SimpleIndex, WeylWord};

/// `±t^k(a_i)` for `|k| <= window`, built from translation orbits only.
pub fn orbit_roots(a: &CartanMatrix2, window: u32) -> BTreeSet<RootVector> {
    let w = i64::from(window);
    let mut out = BTreeSet::new();
    for i in SimpleIndex::BOTH {
        for (_, v) in a.translation_orbit(&RootVector::simple(i), -w..=w) {
            out.insert(-&v);
            out.insert(v);
        }
    }
    out
}

/// Solves `i*phi + j*psi = gamma` by Cramer's rule and reports
/// `(both coefficients > 0, both integral)`.
fn cone_membership(phi: &RootVector, psi: &RootVector, gamma: &RootVector) -> (bool, bool) {
    let det = &phi.x * &psi.y - &phi.y * &psi.x;
    assert!(!det.is_zero(), "dependent roots {phi} {psi}");
    let i_num = &gamma.x * &psi.y - &gamma.y * &psi.x;
    let j_num = &phi.x * &gamma.y - &phi.y * &gamma.x;
    let positive = |num: &BigInt| !num.is_zero() && num.signum() == det.signum();
    let integral = |num: &BigInt| (num % &det).is_zero();
    (positive(&i_num) && positive(&j_num), integral(&i_num) && integral(&j_num))
}

/// Real roots of `pool` in the open rational cone of `phi`, `psi`.
pub fn rational_cone_oracle(
    pool: &BTreeSet<RootVector>,
    phi: &RootVector,
    psi: &RootVector,
) -> BTreeSet<RootVector> {
    pool.iter()
        .filter(|g| *g != phi && *g != psi)
        .filter(|g| cone_membership(phi, psi, g).0)
        .cloned()
        .collect()
}

/// Real roots of `pool` that are positive integer combinations of `phi`, `psi`.
pub fn integer_cone_oracle(
    pool: &BTreeSet<RootVector>,
    phi: &RootVector,
    psi: &RootVector,
) -> BTreeSet<RootVector> {
    pool.iter()
        .filter(|g| *g != phi && *g != psi)
        .filter(|g| {
            let (pos, int) = cone_membership(phi, psi, g);
            pos && int
        })
        .cloned()
        .collect()
}

pub fn matrix(m: u32, n: u32) -> CartanMatrix2 {
    CartanMatrix2::new(m, n).unwrap()
}

pub fn rv(x: i64, y: i64) -> RootVector {
    RootVector::new(x, y)
}

pub fn any_matrix(max: u32) -> impl Strategy<Value = CartanMatrix2> {
    (1..=max, 1..=max).prop_map(|(m, n)| matrix(m, n))
}

/// Matrices with an infinite dihedral Weyl group.
pub fn infinite_matrix(max: u32) -> impl Strategy<Value = CartanMatrix2> {
    (1..=max, 1..=max).prop_filter("mn >= 4", |(m, n)| m * n >= 4).prop_map(|(m, n)| matrix(m, n))
}

pub fn weyl_word(max_len: usize) -> impl Strategy<Value = WeylWord> {
    proptest::collection::vec(
        prop_oneof![Just(SimpleIndex::One), Just(SimpleIndex::Two)],
        0..=max_len,
    )
    .prop_map(WeylWord)
}

pub fn lattice_vector(bound: i64) -> impl Strategy<Value = RootVector> {
    (-bound..=bound, -bound..=bound).prop_map(|(x, y)| rv(x, y))
}

/// A real root `sign * t^k(a_i)` with `|k| <= window`.
pub fn window_root(a: CartanMatrix2, window: i64) -> impl Strategy<Value = RootVector> {
    (prop_oneof![Just(SimpleIndex::One), Just(SimpleIndex::Two)], -window..=window, any::<bool>())
        .prop_map(move |(i, k, neg)| {
            let v = a.translate_by(&RootVector::simple(i), k);
            if neg {
                -v
            } else {
                v
            }
        })
}
