//! The action of a generator of C_p on E_*(X_l)/m, and its Jordan type.

use anyhow::Result;
use eocalc::splitting::zeta_matrix;
use eocalc::{FpMatrix, Prime};

fn main() -> Result<()> {
    let prime = Prime::new(5)?;
    let z = zeta_matrix(5, prime)?;
    for i in 0..z.rows() {
        println!("{:?}", z.row(i));
    }
    for l in 1..=5 {
        let nil = &zeta_matrix(l, prime)? - &FpMatrix::identity(prime, l);
        println!("l = {l}: blocks {:?}", nil.nilpotent_block_sizes()?);
    }
    Ok(())
}
