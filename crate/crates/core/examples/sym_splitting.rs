//! Symmetric powers of algebraic EO-modules, e.g. Sym^k(EO ∧ (X_2 ∨ Σ^8 X_1)).

use anyhow::Result;
use eocalc::comodule::SummandList;
use eocalc::splitting::sym_splitting;
use eocalc::Prime;

fn main() -> Result<()> {
    let prime = Prime::new(5)?;
    let m = SummandList::from_pairs(&[(0, 2), (8, 1)]);
    for k in 1..5 {
        println!("Sym^{k}({m}) = {}", sym_splitting(&m, k, prime)?);
    }
    Ok(())
}
