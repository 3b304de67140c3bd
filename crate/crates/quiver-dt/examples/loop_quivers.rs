//! DT tables of multi-loop quivers. Every intermediate of the extraction is
//! a rational function with [GL(d)]-denominators; the printed integrality
//! verdicts certify that the final values are Laurent polynomials in L^{1/2}.
//!
//! Run with `cargo run --example loop_quivers`.

use quiver_dt::dt::{dt_all, euler_dt};
use quiver_dt::quiver::Quiver;
use quiver_dt::series::DimVector;

fn main() {
    for m in 2..=3u32 {
        let quiver = Quiver::loop_quiver(m);
        let n = 5u32;
        let dt = dt_all(&quiver, n).unwrap();
        println!("{m}-loop quiver, DT up to d = {n}:");
        for d in 1..=n {
            let dv = DimVector(vec![d]);
            println!(
                "  DT_{d} = {}   integral: {}",
                dt.value(&dv),
                dt.is_integral(&dv)
            );
        }
        let euler = euler_dt(&dt).unwrap();
        let numeric: Vec<String> = (1..=n)
            .map(|d| {
                euler
                    .get(&DimVector(vec![d]))
                    .map(|v| v.to_string())
                    .unwrap_or_else(|| "0".into())
            })
            .collect();
        println!("  numerical DT (chi_c): [{}]\n", numeric.join(", "));
    }
}
