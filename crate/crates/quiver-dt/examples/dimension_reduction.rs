//! Dimension reduction: the DT invariants of a quiver with one added loop
//! per vertex and trace potential are computed from point counts of a
//! relation locus in the base quiver, with no vanishing-cycle machinery.
//!
//! Two instances:
//! - base = point quiver, trivial relations: reproduces the one-loop DT
//!   table exactly;
//! - base = two-loop quiver, commutator relation: the locus is the
//!   commuting variety, counted by the oracle, and the reduced DT of the
//!   three-loop quiver with its natural potential comes out as L^{3/2} in
//!   degrees 1 and 2.
//!
//! Run with `cargo run --example dimension_reduction`.

use std::collections::BTreeMap;

use num::BigInt;
use quiver_dt::dt::{dimred_dt, dt_all};
use quiver_dt::fqcount::{count_reps, interpolate, CountPolynomial, RelationSpec};
use quiver_dt::quiver::Quiver;
use quiver_dt::series::{dims_up_to, DimVector};

fn main() {
    // --- point base, no relations ---
    let point = Quiver::loop_quiver(0);
    let mut unit_counts = BTreeMap::new();
    for d in dims_up_to(1, 6) {
        unit_counts.insert(d, CountPolynomial::constant(BigInt::from(1)));
    }
    let reduced = dimred_dt(&point, &unit_counts, 6).unwrap();
    let one_loop = dt_all(&Quiver::loop_quiver(1), 6).unwrap();
    println!("point base + trivial relations vs direct one-loop DT:");
    for d in 1..=4u32 {
        let dv = DimVector(vec![d]);
        println!(
            "  d = {d}:  reduced {}  direct {}",
            reduced.value(&dv),
            one_loop.value(&dv)
        );
        assert_eq!(reduced.value(&dv), one_loop.value(&dv));
    }

    // --- two-loop base, commutator relation ---
    let base = Quiver::loop_quiver(2);
    let commutator = RelationSpec::parse(&["a0*a1 - a1*a0".to_string()], &base).unwrap();
    println!("\ncommuting-variety counts from the oracle:");
    let primes: [u64; 9] = [2, 3, 5, 7, 11, 13, 17, 19, 23];
    let mut counts = BTreeMap::new();
    for (d, degree_bound) in [(DimVector(vec![1]), 2usize), (DimVector(vec![2]), 8usize)] {
        let samples: Vec<(u64, BigInt)> = primes
            .iter()
            .map(|&q| (q, count_reps(&base, &commutator, &d, q, 100_000_000).unwrap()))
            .collect();
        let poly = interpolate(&samples, degree_bound).unwrap();
        println!(
            "  d = {d}: {}",
            poly.to_motive().to_string_q().unwrap()
        );
        counts.insert(d, poly);
    }
    let reduced = dimred_dt(&base, &counts, 2).unwrap();
    println!("\nreduced DT of the three-loop quiver with potential:");
    for d in 1..=2u32 {
        let dv = DimVector(vec![d]);
        println!(
            "  DT_{d} = {}   integral: {}",
            reduced.value(&dv),
            reduced.is_integral(&dv)
        );
    }
}
