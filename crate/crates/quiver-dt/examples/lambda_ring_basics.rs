//! Tour of the coefficient ring: half-twist polynomials, reduced fractions,
//! Adams and sigma operations, and the q-combinatorial gadgets.
//!
//! Run with `cargo run --example lambda_ring_basics`.

use quiver_dt::lambda::{
    adams_special_check, compute_pmn, gauss_binomial, gl_class, q_bracket, sigma, t_class,
    verify_identity, HalfTwistPoly, RatFunc,
};

fn main() {
    // The engine works in Z[x^{+-1}] with x = -L^{1/2}, so x^2 = L.
    let l = HalfTwistPoly::l_power(1);
    let lhalf = HalfTwistPoly::l_half_power(1);
    println!("L          = {l}   (internally {})", l.to_string_x());
    println!("L^(1/2)    = {lhalf}   (internally {})", lhalf.to_string_x());

    // Brackets, Gaussian binomials, GL classes.
    println!("\n[5]_L      = {}", q_bracket(5));
    println!("[4 ch 2]_L = {}", gauss_binomial(4, 2).unwrap());
    println!("[GL(2)]    = {}", gl_class(2));
    println!("chi_c of [GL(2)] = {} (vanishes for n >= 1)", gl_class(2).euler_specialize());

    // Adams operations substitute x -> x^k; the sign law on L^{1/2}:
    let a = RatFunc::from_poly(lhalf.clone());
    for k in 1..=4u32 {
        println!("psi^{k}(L^(1/2)) = {}", a.psi(k));
    }

    // Sigma operations come from the Newton recursion. On the line element
    // -L^{1/2} = x they are plain powers; on L^{1/2} = -x they vanish:
    let x = RatFunc::from_poly(HalfTwistPoly::x_power(1));
    println!("\nsigma^3(-L^(1/2)) = {}", sigma(&x, 3));
    println!("sigma^2(L^(1/2))  = {}", sigma(&a, 2));

    // A genuinely rational example: sigma^2(L/(L-1)) = L^3/((L-1)^2 (L+1)).
    let c = &RatFunc::from_poly(l) * &t_class(1);
    println!("sigma^2(L/(L-1))  = {}", sigma(&c, 2));

    // The localized classes T_m = (L^m-1)^{-1} satisfy the telescoping law
    // (L^{mn}-1) sigma^n(T_m) = sum_{j<n} sigma^j(T_m):
    for (m, n) in [(1u64, 1u64), (2, 2), (3, 2)] {
        println!(
            "sigma localization law (m={m}, n={n}): {}",
            verify_identity("sigma_localization", &[m, n]).unwrap()
        );
    }

    // The coefficient ring is a special lambda-ring:
    let b = t_class(2);
    println!(
        "psi^2(psi^2(a) b) == psi^4(a) psi^2(b): {}",
        adams_special_check(&a, &b, 2, 2)
    );

    // The universal polynomials behind that law:
    let p = compute_pmn(2, 1).unwrap();
    println!("P^(2,1) = {p}");
}
