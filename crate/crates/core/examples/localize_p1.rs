//! Localization on P^1: every fixed-point locus and its contribution at a
//! few random torus weights, for each class tuple.

use sgw::localize::{evaluate, Strategy};

fn main() -> sgw::Result<()> {
    let jobs: [&[u32]; 6] = [&[1], &[0], &[1, 1], &[1, 0], &[1, 1, 1], &[1, 0, 0]];
    for classes in jobs {
        let eval = evaluate(1, classes, Strategy::Evaluate { samples: 2, seed: 11 }, true)?;
        println!("<{classes:?}> = {}", eval.invariant);
        for s in &eval.samples {
            let tau: Vec<String> = s.tau.iter().map(|t| t.to_string()).collect();
            println!("  tau = ({})", tau.join(", "));
            for t in &s.terms {
                println!("    {:<28} {}", t.graph.to_string(), t.value);
            }
        }
    }
    Ok(())
}
