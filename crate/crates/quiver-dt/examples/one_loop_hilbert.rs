//! The one-loop quiver: its stack series is the plethystic exponential of a
//! single regular term, the DT table is L^{1/2} at d = 1, and the framed
//! moduli with f = 1 are the Hilbert schemes of points on the affine line,
//! with motives L^d.
//!
//! Run with `cargo run --example one_loop_hilbert`.

use quiver_dt::dt::dt_all;
use quiver_dt::lambda::{t_class, HalfTwistPoly, RatFunc};
use quiver_dt::quiver::{FramingVector, Quiver};
use quiver_dt::series::{DimVector, GradedSeries};

fn main() {
    let jordan = Quiver::loop_quiver(1);
    let n = 6u32;

    // stack series coefficients L^{d^2}/[GL(d)]
    let stack = jordan.stack_series(n);
    println!("stack series:");
    for d in 0..=3u32 {
        println!("  A_{d} = {}", stack.coeff(&DimVector(vec![d])));
    }

    // the same series as a plethystic exponential of L t /(L - 1)
    let mut seed = GradedSeries::new(1, n);
    seed.set_coeff(
        DimVector(vec![1]),
        &RatFunc::from_poly(HalfTwistPoly::l_power(1)) * &t_class(1),
    );
    assert_eq!(seed.sym().unwrap(), stack);
    println!("  = Sym( L/(L-1) t ), verified");

    let dt = dt_all(&jordan, 8).unwrap();
    println!("\nDT table:");
    for d in 1..=4u32 {
        println!("  DT_{d} = {}", dt.value(&DimVector(vec![d])));
    }

    println!("\nframed motives with f = 1 (points on the affine line):");
    for d in 0..=5u32 {
        let m = jordan
            .hilbert_motive(&FramingVector(vec![1]), &DimVector(vec![d]))
            .unwrap();
        println!("  [M_{{1,{d}}}] = {m}");
    }
}
