//! Sums the localization contributions as rational functions in the torus
//! weights and compares with the sampled answer.

use sgw::localize::{invariant, prepare, LocalizationJob, Strategy};

fn main() -> sgw::Result<()> {
    let jobs: [(u32, &[u32]); 4] = [(1, &[1, 0]), (2, &[2, 1]), (2, &[1, 0, 0]), (2, &[1, 1, 1])];
    for (n, classes) in jobs {
        let job = LocalizationJob::new(n, classes)?;
        println!("P^{n} {classes:?}");
        for g in prepare(&job)? {
            println!("  {:<26} {}", g.graph.to_string(), g.symbolic(&job)?);
        }
        let s = invariant(n, classes, Strategy::Symbolic)?;
        let e = invariant(n, classes, Strategy::default())?;
        println!("  symbolic {s}, sampled {e}");
        assert_eq!(s, e);
    }
    Ok(())
}
