//! Serialized forms of ring tables: sparse JSON and an aligned text grid.

use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use super::{InvariantRing, SectorAlgebra, Theory};
use crate::serde_util::rational_vec;

/// A structure-constant table on some basis: `basis[i] · basis[j]` has
/// coefficient `value` on `basis[k]` for each sparse entry `(i, j, k, value)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RingTable {
    pub theory: Theory,
    pub basis: Vec<String>,
    #[serde(with = "rational_vec")]
    pub degrees: Vec<Rational64>,
    #[serde(serialize_with = "sparse_entries")]
    pub constants: Vec<(usize, usize, usize, Rational64)>,
}

fn sparse_entries<S: Serializer>(
    v: &[(usize, usize, usize, Rational64)],
    s: S,
) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for (i, j, k, q) in v {
        seq.serialize_element(&(i, j, k, q.to_string()))?;
    }
    seq.end()
}

impl SectorAlgebra {
    pub fn table(&self) -> RingTable {
        let n = self.dim();
        let mut constants = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let c = self.constant(i, j);
                if !c.is_zero() {
                    constants.push((i, j, self.product_index(i, j), c));
                }
            }
        }
        RingTable {
            theory: self.theory(),
            basis: self.labels().to_vec(),
            degrees: self.degrees().to_vec(),
            constants,
        }
    }
}

impl InvariantRing {
    pub fn table(&self) -> RingTable {
        let c = self.dim();
        let mut constants = Vec::new();
        for a in 0..c {
            for b in 0..c {
                for k in 0..c {
                    let v = self.constant(a, b, k);
                    if !v.is_zero() {
                        constants.push((a, b, k, v));
                    }
                }
            }
        }
        RingTable {
            theory: self.theory(),
            basis: self.labels().to_vec(),
            degrees: self.degrees().to_vec(),
            constants,
        }
    }
}

impl RingTable {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("ring table serializes")
    }

    /// Product of two basis elements written out, e.g. `2[e] + [g4]`.
    pub fn product(&self, i: usize, j: usize) -> String {
        let terms: Vec<String> = self
            .constants
            .iter()
            .filter(|(a, b, _, _)| *a == i && *b == j)
            .map(|(_, _, k, v)| {
                if v.is_one() {
                    self.basis[*k].clone()
                } else {
                    format!("{v}{}", self.basis[*k])
                }
            })
            .collect();
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        }
    }

    pub fn to_text(&self) -> String {
        let n = self.basis.len();
        let mut grid: Vec<Vec<String>> = Vec::with_capacity(n + 1);
        let mut header = vec!["*".to_string()];
        header.extend(self.basis.iter().cloned());
        grid.push(header);
        for i in 0..n {
            let mut row = vec![self.basis[i].clone()];
            row.extend((0..n).map(|j| self.product(i, j)));
            grid.push(row);
        }
        let widths: Vec<usize> = (0..=n)
            .map(|c| grid.iter().map(|r| r[c].chars().count()).max().unwrap_or(0))
            .collect();

        let mut out = format!("theory: {}\n", self.theory);
        let degrees: Vec<String> = self
            .basis
            .iter()
            .zip(&self.degrees)
            .map(|(b, d)| format!("{b}={d}"))
            .collect();
        out.push_str(&format!("degrees: {}\n", degrees.join(" ")));
        for row in &grid {
            let cells: Vec<String> = row
                .iter()
                .zip(&widths)
                .map(|(cell, &w)| format!("{cell:<w$}"))
                .collect();
            out.push_str(cells.join(" | ").trim_end());
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sectors::{BuildOptions, LinearOrbifold};
    use crate::spec::OrbifoldSpec;

    const Z3_11: &str =
        r#"{"name":"z3-11","dimension":2,"generators":[{"perm":[0,1],"phases":["1/3","1/3"]}]}"#;

    #[test]
    fn sector_json_shape() {
        let m = LinearOrbifold::from_spec(
            &OrbifoldSpec::parse_str(Z3_11).unwrap(),
            BuildOptions::default(),
        )
        .unwrap();
        let t = m.build_algebra(Theory::ChenRuan).unwrap().table();
        let v: serde_json::Value = serde_json::from_str(&t.to_json()).unwrap();
        assert_eq!(v["theory"], "cr");
        assert_eq!(v["basis"], serde_json::json!(["e", "g1", "g2"]));
        assert_eq!(v["degrees"], serde_json::json!(["0", "4/3", "8/3"]));
        // units (5 entries) plus g1·g1 = g2
        assert_eq!(v["constants"].as_array().unwrap().len(), 6);
        assert!(v["constants"]
            .as_array()
            .unwrap()
            .contains(&serde_json::json!([1, 1, 2, "1"])));
    }

    #[test]
    fn text_rendering() {
        let t = RingTable {
            theory: Theory::Virtual,
            basis: vec!["[e]".into(), "[g1]".into()],
            degrees: vec![Rational64::zero(), Rational64::from_integer(2)],
            constants: vec![
                (0, 0, 0, Rational64::one()),
                (0, 1, 1, Rational64::one()),
                (1, 0, 1, Rational64::one()),
                (1, 1, 0, Rational64::from_integer(2)),
                (1, 1, 1, Rational64::one()),
            ],
        };
        assert_eq!(t.product(1, 1), "2[e] + [g1]");
        let text = t.to_text();
        assert!(text.starts_with("theory: virt\ndegrees: [e]=0 [g1]=2\n"));
        assert!(text.contains("[g1] | [g1] | 2[e] + [g1]"));
    }
}
