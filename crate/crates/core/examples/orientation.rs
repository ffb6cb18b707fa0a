//! Chern-determined orientability: ψ_{p-1} from Chern classes, and the verdict.

use anyhow::Result;
use eocalc::comodule::{
    orientable_chern_determined, power_sums_from_chern, GradedComodule, SummandList,
};
use eocalc::Prime;

fn main() -> Result<()> {
    let prime = Prime::new(5)?;
    let base = GradedComodule::from_summands(prime, &SummandList::from_pairs(&[(0, 1), (8, 2)]))?;
    for cherns in [
        vec![0, 0, 0, 0],
        vec![1, 0, 0, 0],
        vec![0, 0, 0, 2],
        vec![2, 1, 0, 0],
    ] {
        let psi = power_sums_from_chern(&cherns, 4, prime);
        let verdict = orientable_chern_determined(&base, psi[3]);
        println!("c = {cherns:?}: ψ = {psi:?}, {verdict:?}");
    }
    Ok(())
}
