//! V_r ⊗ V_s over F_p[C_p], by the closed formula and by Jordan blocks.

use anyhow::{ensure, Result};
use eocalc::reps::{tensor_rep, tensor_rep_brute};
use eocalc::Prime;

fn main() -> Result<()> {
    let prime = Prime::new(5)?;
    let p = prime.get() as usize;
    for r in 1..=p {
        for s in r..=p {
            let formula = tensor_rep(r, s, prime)?;
            ensure!(
                formula == tensor_rep_brute(r, s, prime)?,
                "V_{r} ⊗ V_{s} disagrees"
            );
            println!("V_{r} ⊗ V_{s} = {formula}");
        }
    }
    Ok(())
}
