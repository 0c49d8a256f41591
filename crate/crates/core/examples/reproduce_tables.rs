//! Recomputes every published value and prints the ones that disagree.

use sgw::localize::Strategy;
use sgw::reference::{expected, published, verify, Status};

fn main() -> sgw::Result<()> {
    let mut counts = [0usize; 3];
    for entry in published() {
        let outcome = verify(&entry, Strategy::default())?;
        counts[outcome.status as usize] += 1;
        if outcome.status != Status::Pass {
            println!("{} {:<16} {:<14} expected {:<22} computed {}", outcome.status, entry.table, entry.quantity.to_string(), expected(&entry), outcome.computed);
            if let Some(note) = entry.note {
                println!("     {note}");
            }
        }
    }
    println!("{} PASS, {} FAIL, {} SKIP", counts[0], counts[1], counts[2]);
    Ok(())
}
