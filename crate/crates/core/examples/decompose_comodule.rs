//! An Adams summand of H^*(CP^∞) at p = 3, cut off at x^11, split into W_l.

use anyhow::Result;
use eocalc::comodule::{Generator, GradedComodule};
use eocalc::Prime;

fn main() -> Result<()> {
    let prime = Prime::new(3)?;
    let n = prime.n();
    // x^{1+jn} in degree 2(1+jn); P^1 x^k = k x^{k+n}.
    let gens = (0..6)
        .map(|j| Generator::new(format!("x^{}", 1 + j * n), 2 * (1 + j * n)))
        .collect();
    let theta = (0..5).map(|j| (j as usize, j as usize + 1, 1 + j * n));
    let m = GradedComodule::from_sparse(prime, gens, theta)?;
    let d = m.decompose();
    println!("{d}");
    println!("reconstructs: {}", m.reconstructs(&d));
    Ok(())
}
