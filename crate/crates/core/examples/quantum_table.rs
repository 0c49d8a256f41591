//! Products of basis classes in the quantum ring of P^n, and the table of
//! three-point invariants behind them.

use sgw::quantum::{QElement, QuantumRing};

fn main() -> sgw::Result<()> {
    let n: u32 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(2);
    let ring = QuantumRing::new(n)?;
    for a in 0..=n {
        for b in a..=n {
            println!("L^{a} * L^{b} = {}", ring.basis_product(a, b)?);
        }
    }
    let h = QElement::basis(n, 1)?;
    let mut power = QElement::basis(n, 0)?;
    for i in 1..=n + 1 {
        power = ring.star(&power, &h)?;
        println!("L^*{i} = {power}");
    }
    println!();
    print!("{}", ring.structure_table());
    Ok(())
}
