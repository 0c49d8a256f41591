//! Invariants of a point for k = 3..10 marked points.

use sgw::point_sgw::{compositions, sgw_point, Enumeration};

fn main() -> sgw::Result<()> {
    for k in 3..=10 {
        let kept = compositions(k, Enumeration::Pruned).len();
        let all = compositions(k, Enumeration::Full).len();
        println!("k = {k:2}  {:<28} ({kept} of {all} compositions kept)", sgw_point(k)?.to_string());
    }
    Ok(())
}
