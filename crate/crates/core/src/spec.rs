//! The JSON description of a linear quotient `[Cⁿ/G]`.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::DEFAULT_MAX_GROUP_ORDER;
use crate::monomial::MonomialMap;
use crate::phase::Phase;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorSpec {
    pub perm: Vec<u32>,
    pub phases: Vec<Phase>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrbifoldSpec {
    pub name: String,
    pub dimension: usize,
    #[serde(default)]
    pub generators: Vec<GeneratorSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_group_order: Option<usize>,
}

impl OrbifoldSpec {
    pub fn parse_str(json: &str) -> Result<Self> {
        let spec: OrbifoldSpec =
            serde_json::from_str(json).map_err(|e| Error::input(format!("invalid spec: {e}")))?;
        spec.validate()?;
        Ok(spec)
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = fs::read_to_string(path)
            .map_err(|e| Error::input(format!("cannot read {}: {e}", path.display())))?;
        Self::parse_str(&text)
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_group_order == Some(0) {
            return Err(Error::input("max_group_order must be positive"));
        }
        self.maps().map(|_| ())
    }

    pub fn max_group_order(&self) -> usize {
        self.max_group_order.unwrap_or(DEFAULT_MAX_GROUP_ORDER)
    }

    /// The generators as monomial maps, checked against the dimension.
    pub fn maps(&self) -> Result<Vec<MonomialMap>> {
        self.generators
            .iter()
            .enumerate()
            .map(|(i, g)| {
                if g.perm.len() != self.dimension || g.phases.len() != self.dimension {
                    return Err(Error::input(format!(
                        "generator {i}: perm has {} entries and phases {} entries, dimension is {}",
                        g.perm.len(),
                        g.phases.len(),
                        self.dimension
                    )));
                }
                MonomialMap::new(g.perm.clone(), g.phases.clone())
                    .map_err(|e| Error::input(format!("generator {i}: {e}")))
            })
            .collect()
    }

    /// `[C²ⁿ/G]` with `g` acting as `g ⊕ ḡ`.
    pub fn cotangent_double(&self) -> OrbifoldSpec {
        let n = self.dimension as u32;
        let generators = self
            .generators
            .iter()
            .map(|g| {
                let mut perm = g.perm.clone();
                perm.extend(g.perm.iter().map(|&p| p + n));
                let mut phases = g.phases.clone();
                phases.extend(g.phases.iter().map(|p| p.neg()));
                GeneratorSpec { perm, phases }
            })
            .collect();
        OrbifoldSpec {
            name: format!("{}-cotangent", self.name),
            dimension: 2 * self.dimension,
            generators,
            max_group_order: self.max_group_order,
        }
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("spec serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Z3: &str =
        r#"{"name":"z3-11","dimension":2,"generators":[{"perm":[0,1],"phases":["1/3","1/3"]}]}"#;

    #[test]
    fn parses_schema_instance() {
        let spec = OrbifoldSpec::parse_str(Z3).unwrap();
        assert_eq!(spec.name, "z3-11");
        assert_eq!(spec.dimension, 2);
        assert_eq!(spec.max_group_order(), DEFAULT_MAX_GROUP_ORDER);
        assert_eq!(spec.maps().unwrap()[0].phases()[1], "1/3".parse().unwrap());
    }

    #[test]
    fn rejects_schema_violations() {
        let bad = [
            r#"{"name":"x","dimension":2,"generators":[{"perm":[0,0],"phases":["0","0"]}]}"#,
            r#"{"name":"x","dimension":2,"generators":[{"perm":[0,1],"phases":["1/3"]}]}"#,
            r#"{"name":"x","dimension":2,"generators":[{"perm":[0,2],"phases":["0","0"]}]}"#,
            r#"{"name":"x","dimension":2,"generators":[{"perm":[0,1],"phases":["1/0","0"]}]}"#,
            r#"{"name":"x","dimension":2,"generators":[{"perm":[0,1],"phases":["a","0"]}]}"#,
            r#"{"name":"x","dimension":1,"generators":[{"perm":[0],"phases":[0.5]}]}"#,
            r#"{"name":"x","dimension":1,"generators":[],"extra":1}"#,
            r#"{"name":"x","dimension":1,"max_group_order":0}"#,
            r#"{"dimension":1}"#,
            "not json",
        ];
        for json in bad {
            assert!(
                matches!(OrbifoldSpec::parse_str(json), Err(Error::Input(_))),
                "accepted {json}"
            );
        }
    }

    #[test]
    fn empty_generators_is_the_trivial_group() {
        let spec = OrbifoldSpec::parse_str(r#"{"name":"triv","dimension":2}"#).unwrap();
        assert!(spec.generators.is_empty());
    }

    #[test]
    fn missing_file_is_input_error() {
        assert!(matches!(
            OrbifoldSpec::from_path("/nonexistent/spec.json"),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn cotangent_double_blocks() {
        let spec = OrbifoldSpec::parse_str(Z3).unwrap();
        let d = spec.cotangent_double();
        assert_eq!(d.name, "z3-11-cotangent");
        assert_eq!(d.dimension, 4);
        assert_eq!(d.generators[0].perm, vec![0, 1, 2, 3]);
        let phases: Vec<String> = d.generators[0]
            .phases
            .iter()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(phases, ["1/3", "1/3", "2/3", "2/3"]);
        assert_eq!(d.maps().unwrap()[0], spec.maps().unwrap()[0].cotangent());
    }

    #[test]
    fn round_trips_through_json() {
        let spec = OrbifoldSpec::parse_str(Z3).unwrap().cotangent_double();
        assert_eq!(
            OrbifoldSpec::parse_str(&spec.to_json_pretty()).unwrap(),
            spec
        );
    }
}
