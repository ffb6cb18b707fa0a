//! The deformed tensor square U_2 ⊗ U_2 over A_q for every q.

use eocalc::reps::aq_tensor_square_blocks;
use eocalc::Prime;

fn main() -> anyhow::Result<()> {
    for p in [3, 5, 7] {
        let prime = Prime::new(p)?;
        let blocks: Vec<_> = (0..p).map(|q| aq_tensor_square_blocks(prime, q)).collect();
        println!("p = {p}: {blocks:?}");
    }
    Ok(())
}
