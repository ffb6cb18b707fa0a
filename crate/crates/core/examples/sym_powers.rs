//! Symmetric powers Sym^k V_l through the μ-ring, checked against brute force.

use anyhow::Result;
use eocalc::reps::{sym_power, sym_power_brute};
use eocalc::{Error, Prime};

fn main() -> Result<()> {
    let prime = Prime::new(3)?;
    for l in 1..=3 {
        for k in 0..=7u64 {
            let formula = sym_power(l, k, prime)?;
            let check = match sym_power_brute(l, k as usize, prime) {
                Ok(b) if b == formula => "ok",
                Ok(_) => "MISMATCH",
                Err(Error::TooLarge { .. }) => "unchecked",
                Err(e) => return Err(e.into()),
            };
            println!("Sym^{k} V_{l} = {formula}  [{check}]");
        }
    }
    Ok(())
}
