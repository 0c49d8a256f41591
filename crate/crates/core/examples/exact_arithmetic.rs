//! Polynomials in tau_i with lambda^2 = 0, their gcd, and rational functions.

use sgw::exact::{complete_homogeneous, int, poly_gcd, rat, LinForm, Poly, RatFunc};

fn main() -> sgw::Result<()> {
    let (t0, t1, l) = (Poly::tau(2, 0), Poly::tau(2, 1), Poly::lambda(2));
    let a = &t0 - &t1;
    let b = &(&t0 + &t1) * &a;
    println!("({a}) * ({b}) = {}", &a * &b);
    println!("(lambda + tau0)^3 = {}", (&l + &t0).pow(3));
    println!("gcd = {}", poly_gcd(&(&a * &a), &b)?);

    let r = RatFunc::new(&(&l + &t0) * &a, &a * &t1)?;
    println!("r = {r}");
    println!("1/r = {}", r.inverse()?);
    println!("r at tau = (3, 5): {}", r.eval(&[int(3), int(5)])?);

    let weights = [LinForm::tau(2, 0), LinForm::tau(2, 1), LinForm::lambda(2).scale(&rat(-1, 2))];
    println!("h_2 = {}", complete_homogeneous(2, &weights, 2));
    Ok(())
}
