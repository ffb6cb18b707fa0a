//! Splitting EO ∧ Z from a comodule file, e.g.
//! `cargo run --example split_spectrum -- fixtures/x2_smash_x2_p3.json`.

use anyhow::{Context, Result};
use eocalc::comodule::ComoduleFile;
use eocalc::splitting::{split_spectrum, SpectrumSpec};

fn main() -> Result<()> {
    let path = std::env::args().nth(1).unwrap_or_else(|| {
        concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/x2_smash_x2_p3.json").into()
    });
    let text = std::fs::read_to_string(&path).with_context(|| path.clone())?;
    let m = ComoduleFile::parse(&text)?.to_comodule()?;
    println!("homology: {}", m.decompose());
    for (connective, torsion_free) in [(false, false), (true, false), (false, true)] {
        let r = split_spectrum(&SpectrumSpec::new(m.clone(), connective, torsion_free)?);
        println!(
            "connective={connective:<5} torsion_free={torsion_free:<5} -> {:<13} {} (rest: {})",
            r.rule, r.summands, r.remainder
        );
    }
    Ok(())
}
