//! The on-disk comodule format.
//!
//! ```json
//! { "prime": 3, "grading": "cohomological",
//!   "generators": [{"id": "x0", "degree": 0}, {"id": "x1", "degree": 4}],
//!   "theta": [{"from": "x0", "to": [["x1", 1]]}] }
//! ```
//!
//! With `"grading": "homological"` the operator is the dual `P^1_*`, which
//! lowers degree; it is transposed on load so that the stored module is the
//! cohomology with `θ` raising degree and the same generator degrees.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{Generator, GradedComodule};
use crate::error::{Error, Result};
use crate::fp::{FpMatrix, Prime};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Grading {
    #[default]
    Cohomological,
    Homological,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorEntry {
    pub id: String,
    pub degree: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ThetaEntry {
    pub from: String,
    pub to: Vec<(String, i64)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComoduleFile {
    pub prime: u32,
    pub grading: Grading,
    pub generators: Vec<GeneratorEntry>,
    #[serde(default)]
    pub theta: Vec<ThetaEntry>,
}

impl ComoduleFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("comodule files always serialize")
    }

    /// Converts to the internal cohomological module.
    pub fn to_comodule(&self) -> Result<GradedComodule> {
        let prime = Prime::new(self.prime)?;
        let gens: Vec<Generator> = self
            .generators
            .iter()
            .map(|g| Generator::new(g.id.clone(), g.degree))
            .collect();
        let mut index = HashMap::new();
        for (i, g) in gens.iter().enumerate() {
            if index.insert(g.id.as_str(), i).is_some() {
                return Err(Error::Schema(format!(
                    "generators: duplicate id `{}`",
                    g.id
                )));
            }
        }
        let lookup = |id: &str, field: &str| {
            index
                .get(id)
                .copied()
                .ok_or_else(|| Error::Schema(format!("theta.{field}: unknown generator `{id}`")))
        };
        let dim = gens.len();
        let mut theta = FpMatrix::zeros(prime, dim, dim);
        for entry in &self.theta {
            let from = lookup(&entry.from, "from")?;
            for (id, coeff) in &entry.to {
                let to = lookup(id, "to")?;
                match self.grading {
                    Grading::Cohomological => theta.add_to(to, from, *coeff),
                    Grading::Homological => theta.add_to(from, to, *coeff),
                }
            }
        }
        GradedComodule::new(prime, gens, theta)
    }

    /// Writes a module in the cohomological convention.
    pub fn from_comodule(m: &GradedComodule) -> Self {
        let gens = m.generators();
        let mut theta: Vec<ThetaEntry> = Vec::new();
        for (from, to, c) in m.theta_entries() {
            match theta.last_mut() {
                Some(last) if last.from == gens[from].id => last.to.push((gens[to].id.clone(), c)),
                _ => theta.push(ThetaEntry {
                    from: gens[from].id.clone(),
                    to: vec![(gens[to].id.clone(), c)],
                }),
            }
        }
        ComoduleFile {
            prime: m.prime().get(),
            grading: Grading::Cohomological,
            generators: gens
                .iter()
                .map(|g| GeneratorEntry {
                    id: g.id.clone(),
                    degree: g.degree,
                })
                .collect(),
            theta,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comodule::SummandList;

    const X2: &str = r#"{
        "prime": 3, "grading": "cohomological",
        "generators": [{"id": "x0", "degree": 0}, {"id": "x1", "degree": 4}],
        "theta": [{"from": "x0", "to": [["x1", 1]]}]
    }"#;

    #[test]
    fn parses_x2() {
        let m = ComoduleFile::parse(X2).unwrap().to_comodule().unwrap();
        assert_eq!(m.decompose(), SummandList::from_pairs(&[(0, 2)]));
    }

    #[test]
    fn rejects_unknown_fields() {
        let bad = X2.replace("\"grading\"", "\"colour\": 1, \"grading\"");
        assert!(matches!(ComoduleFile::parse(&bad), Err(Error::Schema(_))));
    }

    #[test]
    fn rejects_unknown_ids() {
        let bad = X2.replace("[\"x1\", 1]", "[\"x9\", 1]");
        let err = ComoduleFile::parse(&bad)
            .unwrap()
            .to_comodule()
            .unwrap_err();
        assert!(err.to_string().contains("x9"));
    }

    #[test]
    fn homological_input_keeps_cell_degrees() {
        // Homology of X_1 ∨ Σ^4 X_2 at p = 3: P^1_* sends z2 (degree 8) to z1 (degree 4).
        let text = r#"{
            "prime": 3, "grading": "homological",
            "generators": [{"id": "z0", "degree": 0}, {"id": "z1", "degree": 4}, {"id": "z2", "degree": 8}],
            "theta": [{"from": "z2", "to": [["z1", 1]]}]
        }"#;
        let m = ComoduleFile::parse(text).unwrap().to_comodule().unwrap();
        assert_eq!(m.decompose(), SummandList::from_pairs(&[(0, 1), (4, 2)]));
    }

    #[test]
    fn round_trip() {
        let m = ComoduleFile::parse(X2).unwrap().to_comodule().unwrap();
        let again = ComoduleFile::parse(&ComoduleFile::from_comodule(&m).to_json())
            .unwrap()
            .to_comodule()
            .unwrap();
        assert_eq!(m, again);
    }
}
