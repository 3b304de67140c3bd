//! The Joyce-Song change of variables
//! `bar-DT_d = sum_{k | d} x^{k-1}/(k [k]_L) psi^k(DT_{d/k})` and its Euler
//! specialization, which satisfies the divisor-sum identity
//! `chi(bar-DT)_d = sum_{k | d} chi(DT)_{d/k} / k^2`.
//!
//! Run with `cargo run --example joyce_song`.

use quiver_dt::dt::{dt_all, euler_divisor_sum_check, euler_dt, joyce_song};
use quiver_dt::quiver::Quiver;
use quiver_dt::series::DimVector;

fn main() {
    let jordan = Quiver::loop_quiver(1);
    let dt = dt_all(&jordan, 6).unwrap();
    let bar = joyce_song(&dt);

    println!("one-loop quiver, transformed values (rational in general):");
    for d in 1..=4u32 {
        let dv = DimVector(vec![d]);
        println!("  bar-DT_{d} = {}", bar.value(&dv));
    }

    println!("\nEuler specializations L^(1/2) -> -1:");
    let euler = euler_dt(&bar).unwrap();
    for d in 1..=6u32 {
        println!("  chi(bar-DT)_{d} = {}", euler[&DimVector(vec![d])]);
    }
    println!("  (the classical -1/d^2 of degree-zero sheaves on a smooth curve point)");

    println!("\ndivisor-sum identity across loop quivers:");
    for loops in 0..=3u32 {
        let dt = dt_all(&Quiver::loop_quiver(loops), 6).unwrap();
        let bar = joyce_song(&dt);
        let ok = euler_divisor_sum_check(&dt, &bar).unwrap();
        println!("  {loops}-loop: {}", if ok { "holds" } else { "FAILS" });
        assert!(ok);
    }
}
