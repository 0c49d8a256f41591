//! Chain integrals over M_(0,k) and a few kappa integrals.

use sgw::exact::int;
use sgw::taut0::{integrate, integrate_chain, TautMonomial};

fn main() -> sgw::Result<()> {
    let chains: [(u32, &[u32]); 7] = [(4, &[1]), (5, &[1, 1]), (5, &[0, 2]), (6, &[1, 1, 1]), (6, &[1, 0, 2]), (6, &[0, 1, 2]), (6, &[0, 0, 3])];
    for (k, exps) in chains {
        let m = TautMonomial::chain(k, exps)?;
        println!("{m:<48} = {}", integrate_chain(k, exps)?);
    }

    let m = TautMonomial::new(5, &[], &[(1, 2)], int(1))?;
    println!("{m:<48} = {}", integrate(&m.clone().into()));
    let m = TautMonomial::new(6, &[(0, 1)], &[(1, 1), (2, 1)], int(1))?;
    println!("{m:<48} = {}", integrate(&m.clone().into()));
    Ok(())
}
