//! Rendering charts as SVG, ASCII or JSON. All output is deterministic.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use super::{BigradedChart, ChartKind, ClassKey, Flag, LineKind, Shape};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChartFormat {
    Svg,
    Ascii,
    Json,
}

impl FromStr for ChartFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "svg" => Ok(ChartFormat::Svg),
            "ascii" => Ok(ChartFormat::Ascii),
            "json" => Ok(ChartFormat::Json),
            other => Err(Error::UnsupportedFormat(other.to_string())),
        }
    }
}

pub fn chart_emit(chart: &BigradedChart, format: ChartFormat) -> String {
    match format {
        ChartFormat::Svg => svg(chart),
        ChartFormat::Ascii => ascii(chart),
        ChartFormat::Json => json(chart),
    }
}

#[derive(Serialize)]
struct JsonChart {
    prime: u32,
    kind: ChartKind,
    window: (i64, i64),
    max_filtration: u32,
    classes: Vec<JsonClass>,
    lines: Vec<JsonLine>,
    differentials: Vec<JsonDifferential>,
}

#[derive(Serialize)]
struct JsonClass {
    stem: i64,
    filtration: u32,
    flag: Flag,
    label: String,
    shape: Shape,
    upper_bound: bool,
}

#[derive(Serialize)]
struct JsonLine {
    kind: LineKind,
    from: (i64, u32),
    to: (i64, u32),
}

#[derive(Serialize)]
struct JsonDifferential {
    page: u32,
    from: (i64, u32),
    to: (i64, u32),
    from_label: String,
    to_label: String,
}

fn bidegree(chart: &BigradedChart, key: &ClassKey) -> (i64, u32) {
    (chart.stem_of(key), key.mono.filtration())
}

fn json(chart: &BigradedChart) -> String {
    let doc = JsonChart {
        prime: chart.prime.get(),
        kind: chart.kind,
        window: chart.window,
        max_filtration: chart.max_filtration,
        classes: chart
            .displayed()
            .map(|c| JsonClass {
                stem: c.stem,
                filtration: c.filtration,
                flag: c.flag,
                label: chart.label(&c.key),
                shape: c.shape,
                upper_bound: c.upper_bound,
            })
            .collect(),
        lines: chart
            .lines()
            .iter()
            .map(|l| JsonLine {
                kind: l.kind,
                from: bidegree(chart, &l.from),
                to: bidegree(chart, &l.to),
            })
            .collect(),
        differentials: chart
            .differentials
            .iter()
            .map(|d| JsonDifferential {
                page: d.page,
                from: bidegree(chart, &d.from),
                to: bidegree(chart, &d.to),
                from_label: chart.label(&d.from),
                to_label: chart.label(&d.to),
            })
            .collect(),
    };
    let mut text = serde_json::to_string_pretty(&doc).expect("charts always serialize");
    text.push('\n');
    text
}

fn top_filtration(chart: &BigradedChart) -> u32 {
    chart.displayed().map(|c| c.filtration).max().unwrap_or(0)
}

fn ascii(chart: &BigradedChart) -> String {
    let (lo, hi) = chart.window;
    let mut counts: BTreeMap<(u32, i64), usize> = BTreeMap::new();
    for c in chart.displayed() {
        *counts.entry((c.filtration, c.stem)).or_default() += 1;
    }
    let mut out = String::new();
    let _ = writeln!(out, "p = {}, stems {lo}..{hi}", chart.prime.get());
    for f in (0..=top_filtration(chart)).rev() {
        let _ = write!(out, "{f:>3} |");
        for s in lo..=hi {
            out.push(match counts.get(&(f, s)) {
                None => '.',
                Some(&k) if k <= 9 => char::from_digit(k as u32, 10).unwrap_or('+'),
                Some(_) => '+',
            });
        }
        out.push('\n');
    }
    let _ = write!(out, "    +");
    out.extend((lo..=hi).map(|s| if s.rem_euclid(10) == 0 { '|' } else { '-' }));
    out.push('\n');
    let mut axis = vec![b' '; (hi - lo + 1) as usize + 16];
    for s in lo..=hi {
        if s.rem_euclid(10) == 0 {
            for (i, ch) in s.to_string().bytes().enumerate() {
                axis[(s - lo) as usize + i] = ch;
            }
        }
    }
    let _ = writeln!(out, "     {}", String::from_utf8_lossy(&axis).trim_end());
    out
}

const MARGIN: f64 = 40.0;
const ROW: f64 = 18.0;

fn svg(chart: &BigradedChart) -> String {
    let (lo, hi) = chart.window;
    let span = (hi - lo + 1) as f64;
    let col = (1200.0 / span).clamp(1.5, 14.0);
    let top = top_filtration(chart);
    let width = 2.0 * MARGIN + span * col;
    let height = 2.0 * MARGIN + (top as f64 + 1.0) * ROW;
    // Classes sharing a bidegree are spread horizontally.
    let mut slot: BTreeMap<ClassKey, (f64, f64)> = BTreeMap::new();
    let mut seen: BTreeMap<(i64, u32), usize> = BTreeMap::new();
    for c in chart.displayed() {
        let k = seen.entry((c.stem, c.filtration)).or_default();
        let x = MARGIN + (c.stem - lo) as f64 * col + col / 2.0 + 4.0 * *k as f64;
        let y = height - MARGIN - c.filtration as f64 * ROW;
        slot.insert(c.key, (x, y));
        *k += 1;
    }
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width:.1}" height="{height:.1}" viewBox="0 0 {width:.1} {height:.1}">"#
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let base = height - MARGIN;
    let _ = writeln!(
        out,
        r#"<line x1="{MARGIN:.1}" y1="{base:.1}" x2="{:.1}" y2="{base:.1}" stroke="gray"/>"#,
        width - MARGIN
    );
    let tick = if span > 200.0 { 100 } else { 10 };
    for s in (lo..=hi).filter(|s| s.rem_euclid(tick) == 0) {
        let x = MARGIN + (s - lo) as f64 * col + col / 2.0;
        let _ = writeln!(
            out,
            r#"<text x="{x:.1}" y="{:.1}" font-size="9" text-anchor="middle">{s}</text>"#,
            base + 14.0
        );
    }
    for f in (0..=top).step_by(2) {
        let y = base - f as f64 * ROW;
        let _ = writeln!(
            out,
            r#"<text x="{:.1}" y="{:.1}" font-size="9" text-anchor="end">{f}</text>"#,
            MARGIN - 6.0,
            y + 3.0
        );
    }
    for line in chart.lines() {
        if let (Some(a), Some(b)) = (slot.get(&line.from), slot.get(&line.to)) {
            let _ = writeln!(
                out,
                r#"<line x1="{:.1}" y1="{:.1}" x2="{:.1}" y2="{:.1}" stroke="black" stroke-width="0.8"/>"#,
                a.0, a.1, b.0, b.1
            );
        }
    }
    for d in &chart.differentials {
        let (Some(from), Some(to)) = (chart.find(&d.from), chart.find(&d.to)) else {
            continue;
        };
        let pos = |c: &super::ChartClass| {
            (
                MARGIN + (c.stem - lo) as f64 * col + col / 2.0,
                base - c.filtration as f64 * ROW,
            )
        };
        if !(chart.in_window(from.stem) && chart.in_window(to.stem)) || to.filtration > top {
            continue;
        }
        let (a, b) = (pos(from), pos(to));
        let _ = writeln!(
            out,
            r#"<line x1="{:.1}" y1="{:.1}" x2="{:.1}" y2="{:.1}" stroke="red" stroke-width="0.6" opacity="0.6"/>"#,
            a.0, a.1, b.0, b.1
        );
    }
    for c in chart.displayed() {
        let (x, y) = slot[&c.key];
        let fill = match c.flag {
            Flag::Filled | Flag::Unknown => "black",
            Flag::Open => "white",
        };
        match c.shape {
            Shape::Dot => {
                let _ = writeln!(
                    out,
                    r#"<circle cx="{x:.1}" cy="{y:.1}" r="3" fill="{fill}" stroke="black"><title>{}</title></circle>"#,
                    chart.label(&c.key)
                );
            }
            Shape::Square => {
                let _ = writeln!(
                    out,
                    r#"<rect x="{:.1}" y="{:.1}" width="6" height="6" fill="{fill}" stroke="black"><title>{}</title></rect>"#,
                    x - 3.0,
                    y - 3.0,
                    chart.label(&c.key)
                );
            }
        }
        if c.flag == Flag::Unknown {
            let _ = writeln!(
                out,
                r#"<text x="{:.1}" y="{:.1}" font-size="7" fill="gray">?</text>"#,
                x + 3.5,
                y - 3.5
            );
        }
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fp::Prime;
    use crate::sseq::{hfpss_run, hurewicz_flags};

    fn chart3() -> BigradedChart {
        hurewicz_flags(&hfpss_run(Prime::new(3).unwrap(), 0, 71).unwrap(), None).unwrap()
    }

    #[test]
    fn formats_parse() {
        assert_eq!("svg".parse::<ChartFormat>().unwrap(), ChartFormat::Svg);
        assert!(matches!(
            "png".parse::<ChartFormat>(),
            Err(Error::UnsupportedFormat(_))
        ));
    }

    #[test]
    fn json_lists_the_p3_chart() {
        let v: serde_json::Value =
            serde_json::from_str(&chart_emit(&chart3(), ChartFormat::Json)).unwrap();
        let classes: Vec<(i64, i64)> = v["classes"]
            .as_array()
            .unwrap()
            .iter()
            .map(|c| {
                (
                    c["stem"].as_i64().unwrap(),
                    c["filtration"].as_i64().unwrap(),
                )
            })
            .collect();
        assert_eq!(
            classes,
            [
                (0, 0),
                (3, 1),
                (10, 2),
                (13, 3),
                (20, 4),
                (24, 0),
                (27, 1),
                (30, 6),
                (37, 3),
                (40, 8),
                (48, 0)
            ]
        );
        assert_eq!(v["window"], serde_json::json!([0, 71]));
        assert_eq!(v["lines"].as_array().unwrap().len(), 8);
    }

    #[test]
    fn deterministic_and_well_formed() {
        for format in [ChartFormat::Svg, ChartFormat::Ascii, ChartFormat::Json] {
            let a = chart_emit(&chart3(), format);
            assert_eq!(a, chart_emit(&chart3(), format));
        }
        let empty = hfpss_run(Prime::new(3).unwrap(), 5, 5).unwrap();
        let svg = chart_emit(&empty, ChartFormat::Svg);
        assert!(svg.starts_with("<svg") && svg.ends_with("</svg>\n"));
        let v: serde_json::Value =
            serde_json::from_str(&chart_emit(&empty, ChartFormat::Json)).unwrap();
        assert!(v["classes"].as_array().unwrap().is_empty());
        assert!(chart_emit(&empty, ChartFormat::Ascii).contains("0 |."));
    }
}
