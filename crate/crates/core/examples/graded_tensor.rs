//! W_r ⊗ W_s as graded comodules, and the matching splitting of EO ∧ X_r ∧ X_s.

use anyhow::Result;
use eocalc::comodule::{tensor_comodule, GradedComodule, SummandList};
use eocalc::splitting::smash_splitting;
use eocalc::Prime;

fn main() -> Result<()> {
    let prime = Prime::new(5)?;
    for (r, s) in [(2, 2), (2, 4), (3, 3), (4, 5)] {
        let m = tensor_comodule(
            &GradedComodule::cyclic(prime, r, 0)?,
            &GradedComodule::cyclic(prime, s, 0)?,
        )?;
        let by_rank = m.decompose();
        let by_formula = smash_splitting(
            &SummandList::from_pairs(&[(0, r)]),
            &SummandList::from_pairs(&[(0, s)]),
            prime,
        );
        println!(
            "W_{r} ⊗ W_{s} = {by_rank}  (formula agrees: {})",
            by_rank == by_formula
        );
    }
    Ok(())
}
