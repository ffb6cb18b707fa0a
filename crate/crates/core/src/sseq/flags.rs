//! Filled and open classes: which survivors are in the Hurewicz image.
//!
//! Only the stems `≡ -1 (mod 2n)` and the zero line are decided by rule; the
//! remaining classes take their flag from an optional override table.

use serde::{Deserialize, Serialize};

use super::{BigradedChart, Flag, Shape};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FlagOverride {
    pub stem: i64,
    pub filtration: u32,
    pub flag: Flag,
}

/// `{"prime": 3, "flags": [{"stem": 37, "filtration": 3, "flag": "filled"}]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FlagOverrides {
    pub prime: u32,
    pub flags: Vec<FlagOverride>,
}

impl FlagOverrides {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))
    }

    fn lookup(&self, stem: i64, filtration: u32) -> Option<Flag> {
        self.flags
            .iter()
            .find(|o| o.stem == stem && o.filtration == filtration)
            .map(|o| o.flag)
    }
}

/// Sets the display flag of every class.
///
/// `α` is filled and `αu^c` for `c ≠ 0` is open; the unit is filled and the
/// other zero-line squares are open. Overrides apply to everything else, and
/// an override for a different prime is an error.
pub fn hurewicz_flags(
    chart: &BigradedChart,
    overrides: Option<&FlagOverrides>,
) -> Result<BigradedChart> {
    if let Some(o) = overrides {
        if o.prime != chart.prime.get() {
            return Err(Error::Schema(format!(
                "override table is for p = {}, chart is for p = {}",
                o.prime,
                chart.prime.get()
            )));
        }
    }
    let step = chart.prime.theta_degree();
    let mut out = chart.clone();
    for class in &mut out.classes {
        let m = class.key.mono;
        class.flag = if class.shape == Shape::Square {
            if m.c == 0 && class.key.cell == 0 {
                Flag::Filled
            } else {
                Flag::Open
            }
        } else if (class.stem + 1).rem_euclid(step) == 0 && m.eps == 1 && m.b == 0 {
            if m.c == 0 {
                Flag::Filled
            } else {
                Flag::Open
            }
        } else {
            overrides
                .and_then(|o| o.lookup(class.stem, class.filtration))
                .unwrap_or(Flag::Unknown)
        };
    }
    Ok(out)
}
