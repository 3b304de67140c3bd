//! The point quiver (one vertex, no arrows): framed moduli are Grassmannians,
//! the framed series is a q-binomial sum, and the extracted DT table is the
//! delta function at d = 1. Specializing L^{1/2} -> -1 recovers the classical
//! binomial theorem.
//!
//! Run with `cargo run --example binomial_formula`.

use quiver_dt::dt::{dt_all, ptdt_check};
use quiver_dt::lambda::gauss_binomial;
use quiver_dt::quiver::{FramingVector, Quiver};
use quiver_dt::series::DimVector;

fn main() {
    let point = Quiver::loop_quiver(0);
    let n = 6u32;

    println!("framed series of the point quiver, f = 3:");
    let f = FramingVector(vec![3]);
    let z = point.framed_series(&f, n).unwrap();
    for d in 0..=n {
        let c = z.coeff(&DimVector(vec![d]));
        println!("  Z_{{3,{d}}} = {c}");
    }
    println!("(equal to L^(d^2/2) [3 choose d]_L, vanishing beyond d = 3)");

    println!("\nframed motives are Grassmannian classes:");
    for d in 0..=3u32 {
        let m = point.hilbert_motive(&f, &DimVector(vec![d])).unwrap();
        assert_eq!(m, gauss_binomial(3, d).unwrap());
        println!("  [M_{{3,{d}}}] = {m}");
    }

    println!("\nDT table (all mass at d = 1):");
    let dt = dt_all(&point, 8).unwrap();
    for d in 1..=8u32 {
        println!("  DT_{d} = {}", dt.value(&DimVector(vec![d])));
    }

    println!("\ncross-check of the framed and stacky definitions:");
    for f in 1..=3u32 {
        let ok = ptdt_check(&point, &FramingVector(vec![f]), n).unwrap();
        println!("  f = {f}: {}", if ok { "agree" } else { "MISMATCH" });
    }

    println!("\nEuler specialization of the framed coefficients (f = 4):");
    let z = point.framed_series(&FramingVector(vec![4]), 4).unwrap();
    let values: Vec<String> = (0..=4u32)
        .map(|d| z.coeff(&DimVector(vec![d])).euler_eval().unwrap().to_string())
        .collect();
    println!("  [{}] = signed binomial coefficients of (1-t)^4", values.join(", "));
}
