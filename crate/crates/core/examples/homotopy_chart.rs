//! The homotopy fixed point spectral sequence of EO, drawn in ASCII.
//!
//! `cargo run --example homotopy_chart -- 5` draws p = 5 over one period.

use anyhow::Result;
use eocalc::sseq::{chart_emit, hfpss_run, hurewicz_flags, periodicity, ChartFormat};
use eocalc::Prime;

fn main() -> Result<()> {
    let p: u32 = std::env::args()
        .nth(1)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(3);
    let prime = Prime::new(p)?;
    let chart = hurewicz_flags(&hfpss_run(prime, 0, periodicity(prime) - 1)?, None)?;
    print!("{}", chart_emit(&chart, ChartFormat::Ascii));
    println!();
    for c in chart.survivors().filter(|c| c.filtration > 0) {
        println!(
            "({:>4}, {:>2})  {:<10} {:?}",
            c.stem,
            c.filtration,
            chart.label(&c.key),
            c.flag
        );
    }
    println!(
        "{} differentials touch the window",
        chart.differentials.len()
    );
    Ok(())
}
