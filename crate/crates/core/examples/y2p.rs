//! The P^1 action on H^*(Y_{2p}) through a given degree.

use anyhow::Result;
use eocalc::comodule::y2p_comodule;
use eocalc::Prime;

fn main() -> Result<()> {
    let prime = Prime::new(3)?;
    let y = y2p_comodule(prime, 36)?;
    println!("dimension {}", y.comodule.dim());
    for f in y.flagged_summands() {
        let tag = if f.complete { "" } else { "  (cut off)" };
        println!("Σ^{} W_{}{tag}", f.summand.shift, f.summand.length);
    }
    Ok(())
}
