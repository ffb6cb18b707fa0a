//! The representation ring inside Z[μ]/f(μ).

use anyhow::Result;
use eocalc::mu_ring::MuRing;
use eocalc::reps::RepElement;
use eocalc::{mu_to_rep, rep_to_mu, Prime};

fn main() -> Result<()> {
    let prime = Prime::new(5)?;
    let ring = MuRing::for_prime(prime);
    println!("f = {:?} (constant term first)", ring.modulus());
    for l in 1..=5 {
        println!(
            "V_{l} ↦ {}",
            rep_to_mu(&RepElement::indecomposable(prime, l)?)
        );
    }
    let v2 = rep_to_mu(&RepElement::indecomposable(prime, 2)?);
    let square = &v2 * &v2;
    println!("V_2^2 = {} = {}", square, mu_to_rep(&square)?);
    match mu_to_rep(&ring.mu_pow(3)) {
        Ok(x) => println!("μ^3 = {x}"),
        Err(e) => println!("μ^3: {e}"),
    }
    Ok(())
}
