//! The counting oracle on its own: enumerate representations over small
//! finite fields, impose path relations or a stability condition, and
//! interpolate the counting polynomial with held-out validation.
//!
//! Run with `cargo run --example finite_field_oracle`.

use num::BigInt;
use quiver_dt::fqcount::{
    count_polynomial, count_reps, count_semistable, first_primes, interpolate, RelationSpec,
};
use quiver_dt::quiver::{Quiver, Stability};
use quiver_dt::series::DimVector;

fn main() {
    let budget = 100_000_000u64;

    // square-zero loop: nilpotent matrices, counted by q^{d^2 - d}
    let jordan = Quiver::loop_quiver(1);
    let nilpotent = RelationSpec::parse(&["a0*a0".to_string()], &jordan).unwrap();
    println!("square-zero loop (nilpotent matrices):");
    for d in 1..=2u32 {
        let samples: Vec<(u64, BigInt)> = first_primes(6)
            .into_iter()
            .map(|q| (q, count_reps(&jordan, &nilpotent, &DimVector(vec![d]), q, budget).unwrap()))
            .collect();
        let poly = interpolate(&samples, (d * d) as usize).unwrap();
        println!("  d = {d}: {}", poly.to_motive().to_string_q().unwrap());
    }

    // commuting pairs of matrices: the commutator relation is linear in
    // either loop, so the oracle solves for one matrix instead of
    // enumerating both
    let two_loop = Quiver::loop_quiver(2);
    let commutator = RelationSpec::parse(&["a0*a1 - a1*a0".to_string()], &two_loop).unwrap();
    let poly = count_polynomial(&two_loop, &commutator, &DimVector(vec![2]), 8, budget).unwrap();
    println!(
        "\ncommuting 2x2 pairs: {}",
        poly.to_motive().to_string_q().unwrap()
    );
    println!("  samples used: {:?}", poly.samples().iter().map(|(q, c)| format!("q={q}: {c}")).collect::<Vec<_>>());

    // King-semistable counts
    let k1 = Quiver::one_arrow();
    let theta = Stability::new(vec![1, -1]);
    println!("\nsemistable counts for the one-arrow quiver, theta = (1,-1):");
    for d in [DimVector(vec![1, 1]), DimVector(vec![2, 2])] {
        let samples: Vec<(u64, BigInt)> = first_primes(6)
            .into_iter()
            .map(|q| (q, count_semistable(&k1, &theta, &d, q, budget).unwrap()))
            .collect();
        let poly = interpolate(&samples, 4).unwrap();
        println!("  d = {d}: {}", poly.to_motive().to_string_q().unwrap());
    }

    // held-out validation rejects non-polynomial count sequences
    let fake: Vec<(u64, BigInt)> = first_primes(5)
        .into_iter()
        .map(|q| (q, num::pow::pow(BigInt::from(2), q as usize)))
        .collect();
    match interpolate(&fake, 3) {
        Err(e) => println!("\nnon-polynomial data rejected: {e}"),
        Ok(_) => unreachable!("2^q is not a polynomial"),
    }
}
