//! The algebraic AHSS of EO ∧ X_l: which cell differentials fire.

use anyhow::Result;
use eocalc::sseq::{ahss_run, ahss_run_with, AhssBase, AhssOptions};
use eocalc::Prime;

fn main() -> Result<()> {
    let prime = Prime::new(3)?;
    // The E_2 base reproduces the usual picture of EO ∧ X_3.
    let chart = ahss_run_with(
        prime,
        3,
        0,
        40,
        AhssOptions::new(prime).with_base(AhssBase::E2),
    )?;
    for d in &chart.differentials {
        println!(
            "d_{:<2} {:>12} ({:>2},{:>2}) -> {:>12} ({:>2},{:>2})",
            d.page,
            chart.label(&d.from),
            chart.stem_of(&d.from),
            d.from.mono.filtration(),
            chart.label(&d.to),
            chart.stem_of(&d.to),
            d.to.mono.filtration()
        );
    }

    // On top of E_∞, the stems -1 mod 2n keep only α on the top cell.
    for l in 1..3 {
        let chart = ahss_run(prime, l, 0, 71)?;
        let alphas: Vec<String> = chart
            .survivors()
            .filter(|c| (c.stem + 1) % prime.theta_degree() == 0 && c.key.mono.c == 0)
            .map(|c| chart.label(&c.key))
            .collect();
        println!("l = {l}: {}", alphas.join(", "));
    }
    Ok(())
}
