//! Twisted-sector data of a linear quotient: eigen-phases, ages, fixed
//! dimensions of single elements and of pairs, and the two degree shifts.

use std::collections::HashMap;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::cyclotomic::CyclotomicField;
use crate::error::{Error, Result};
use crate::group::{ConjugacyPartition, GroupTable};
use crate::monomial::MonomialMap;
use crate::phase::Phase;
use crate::serde_util::rational_string;
use crate::spec::OrbifoldSpec;

/// Exact eigenvalues of a monomial matrix, as sorted phases.
///
/// A cycle of length `ℓ` whose phases sum to `s` acts on its span as a
/// weighted cyclic shift whose `ℓ`-th power is `exp(2πi s)`, so it contributes
/// the `ℓ` phases `(s + t)/ℓ`.
pub fn eigen_phases(map: &MonomialMap) -> Vec<Phase> {
    let n = map.dimension();
    let mut seen = vec![false; n];
    let mut out = Vec::with_capacity(n);
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut len = 0u32;
        let mut total = Phase::ZERO;
        let mut j = start;
        while !seen[j] {
            seen[j] = true;
            total = total.add(map.phases()[j]);
            len += 1;
            j = map.perm()[j] as usize;
        }
        out.extend((0..len).map(|t| total.root(t, len)));
    }
    out.sort();
    out
}

/// Sum of the eigen-phases as a rational.
pub fn age(map: &MonomialMap) -> Rational64 {
    eigen_phases(map).into_iter().map(Phase::to_rational).sum()
}

/// Dimension of the fixed subspace: the multiplicity of eigen-phase 0.
pub fn fixed_dim(map: &MonomialMap) -> u32 {
    eigen_phases(map).iter().filter(|p| p.is_zero()).count() as u32
}

/// How the group's geometry enters the sector data.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Geometry {
    /// `G` acting on `Cⁿ` through the given monomial representation.
    Linear,
    /// `G` acting on a point: every age and fixed dimension is zero.
    Point,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SectorData {
    pub element: usize,
    pub order: usize,
    pub eigen_phases: Vec<Phase>,
    #[serde(serialize_with = "rational_string::serialize")]
    pub age: Rational64,
    pub fixed_dim: u32,
    /// `σ_g = 2(n − dim V^g)`
    pub virtual_shift: i64,
    /// `s_g = 2 a(g)`
    #[serde(serialize_with = "rational_string::serialize")]
    pub cr_shift: Rational64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BuildOptions {
    /// Zero out the geometry, leaving the group acting on a point.
    pub forget_geometry: bool,
    pub conductor_cap: u32,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            forget_geometry: false,
            conductor_cap: crate::cyclotomic::DEFAULT_CONDUCTOR_CAP,
        }
    }
}

impl BuildOptions {
    pub fn point() -> Self {
        BuildOptions {
            forget_geometry: true,
            ..Self::default()
        }
    }
}

/// A closed group together with its sector geometry.
#[derive(Debug)]
pub struct LinearOrbifold {
    name: String,
    geometry: Geometry,
    group: GroupTable,
    classes: ConjugacyPartition,
    field: CyclotomicField,
    sectors: Vec<SectorData>,
    pair_dims: Mutex<HashMap<(usize, usize), u32>>,
    subgroup_dims: Mutex<HashMap<Vec<usize>, u32>>,
}

impl LinearOrbifold {
    pub fn from_spec(spec: &OrbifoldSpec, options: BuildOptions) -> Result<Self> {
        let field = CyclotomicField::with_cap(options.conductor_cap);
        let group = GroupTable::closure(
            spec.dimension,
            &spec.maps()?,
            spec.max_group_order(),
            &field,
        )?;
        let geometry = if options.forget_geometry {
            Geometry::Point
        } else {
            Geometry::Linear
        };
        Ok(Self::new(spec.name.clone(), group, geometry, field))
    }

    pub fn new(
        name: String,
        group: GroupTable,
        geometry: Geometry,
        field: CyclotomicField,
    ) -> Self {
        let classes = group.conjugacy_classes();
        let n = match geometry {
            Geometry::Linear => group.dimension(),
            Geometry::Point => 0,
        };
        let sectors = (0..group.order())
            .map(|g| {
                let eigen_phases = match geometry {
                    Geometry::Linear => eigen_phases(group.element(g)),
                    Geometry::Point => Vec::new(),
                };
                let age: Rational64 = eigen_phases.iter().map(|p| p.to_rational()).sum();
                let fixed_dim = eigen_phases.iter().filter(|p| p.is_zero()).count() as u32;
                SectorData {
                    element: g,
                    order: group.element_order(g),
                    eigen_phases,
                    age,
                    fixed_dim,
                    virtual_shift: 2 * (n as i64 - fixed_dim as i64),
                    cr_shift: age * 2,
                }
            })
            .collect();
        LinearOrbifold {
            name,
            geometry,
            group,
            classes,
            field,
            sectors,
            pair_dims: Mutex::new(HashMap::new()),
            subgroup_dims: Mutex::new(HashMap::new()),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn geometry(&self) -> Geometry {
        self.geometry
    }

    /// Complex dimension of the space acted on (0 for a point).
    pub fn dimension(&self) -> usize {
        match self.geometry {
            Geometry::Linear => self.group.dimension(),
            Geometry::Point => 0,
        }
    }

    pub fn group(&self) -> &GroupTable {
        &self.group
    }

    pub fn classes(&self) -> &ConjugacyPartition {
        &self.classes
    }

    pub fn field(&self) -> &CyclotomicField {
        &self.field
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn sectors(&self) -> &[SectorData] {
        &self.sectors
    }

    pub fn sector(&self, g: usize) -> &SectorData {
        &self.sectors[g]
    }

    pub fn age(&self, g: usize) -> Rational64 {
        self.sectors[g].age
    }

    pub fn fixed_dim(&self, g: usize) -> u32 {
        self.sectors[g].fixed_dim
    }

    pub fn virtual_shift(&self, g: usize) -> i64 {
        self.sectors[g].virtual_shift
    }

    pub fn cr_shift(&self, g: usize) -> Rational64 {
        self.sectors[g].cr_shift
    }

    /// `dim V^g ∩ V^h`, computed as the fixed dimension of `⟨g, h⟩`.
    pub fn fixed_dim_pair(&self, g: usize, h: usize) -> Result<u32> {
        if self.geometry == Geometry::Point {
            return Ok(0);
        }
        let key = (g.min(h), g.max(h));
        if let Some(&d) = self.pair_dims.lock().unwrap().get(&key) {
            return Ok(d);
        }
        let d = self.fixed_dim_subgroup(&self.group.subgroup_closure(&[g, h]))?;
        self.pair_dims.lock().unwrap().insert(key, d);
        Ok(d)
    }

    /// Fixed dimension of a subgroup (given as its full element list) via the
    /// averaging projector `(1/|H|) Σ_{k∈H} tr ρ(k)`.
    pub fn fixed_dim_subgroup(&self, subgroup: &[usize]) -> Result<u32> {
        if self.geometry == Geometry::Point {
            return Ok(0);
        }
        if let Some(&d) = self.subgroup_dims.lock().unwrap().get(subgroup) {
            return Ok(d);
        }
        let d = self.projector_trace(subgroup)?;
        self.subgroup_dims
            .lock()
            .unwrap()
            .insert(subgroup.to_vec(), d);
        Ok(d)
    }

    fn projector_trace(&self, subgroup: &[usize]) -> Result<u32> {
        let diagonal = subgroup.iter().flat_map(|&k| {
            let m = self.group.element(k);
            m.perm()
                .iter()
                .zip(m.phases())
                .enumerate()
                .filter(|(j, (&p, _))| p as usize == *j)
                .map(|(_, (_, &phase))| phase)
        });
        let total = self.field.sum_of_phases(diagonal)?;
        let n = self.dimension();
        let value = total
            .as_rational()
            .map(|q| q / BigRational::from_integer(BigInt::from(subgroup.len())))
            .ok_or_else(|| {
                Error::consistency(format!(
                    "projector trace {total} over {subgroup:?} is irrational"
                ))
            })?;
        match (value.is_integer(), value.to_integer().to_u32()) {
            (true, Some(d)) if d as usize <= n => Ok(d),
            _ => Err(Error::consistency(format!(
                "projector trace {value} over {subgroup:?} is not an integer in [0, {n}]"
            ))),
        }
    }

    /// Burnside-style check value: the fixed dimension of the whole group.
    pub fn invariant_dim(&self) -> Result<u32> {
        let all: Vec<usize> = (0..self.order()).collect();
        self.fixed_dim_subgroup(&all)
    }

    /// Label used in reports: `e` for the identity, `g<i>` otherwise.
    pub fn label(&self, g: usize) -> String {
        if g == 0 {
            "e".to_string()
        } else {
            format!("g{g}")
        }
    }

    pub fn class_label(&self, c: usize) -> String {
        if c == 0 {
            "[e]".to_string()
        } else {
            format!("[g{}]", self.classes.representative(c))
        }
    }
}

pub(crate) fn rational_to_integer(q: Rational64, what: &str) -> Result<i64> {
    if q.is_integer() {
        Ok(q.to_integer())
    } else {
        Err(Error::consistency(format!(
            "{what} = {q} is not an integer"
        )))
    }
}

pub(crate) fn is_nonnegative(q: Rational64) -> bool {
    q >= Rational64::zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ph(s: &str) -> Phase {
        s.parse().unwrap()
    }

    fn phases(v: &[&str]) -> Vec<Phase> {
        v.iter().map(|s| ph(s)).collect()
    }

    fn r(a: i64, b: i64) -> Rational64 {
        Rational64::new(a, b)
    }

    fn spec(json: &str) -> OrbifoldSpec {
        OrbifoldSpec::parse_str(json).unwrap()
    }

    fn build(json: &str) -> LinearOrbifold {
        LinearOrbifold::from_spec(&spec(json), BuildOptions::default()).unwrap()
    }

    const Z3: &str =
        r#"{"name":"z3","dimension":2,"generators":[{"perm":[0,1],"phases":["1/3","1/3"]}]}"#;
    const S3: &str = r#"{"name":"s3","dimension":3,"generators":[
        {"perm":[1,0,2],"phases":["0","0","0"]},{"perm":[1,2,0],"phases":["0","0","0"]}]}"#;

    #[test]
    fn eigen_phase_examples() {
        let g = MonomialMap::diagonal(phases(&["1/3", "1/3"]));
        assert_eq!(eigen_phases(&g), phases(&["1/3", "1/3"]));
        let c = MonomialMap::permutation(vec![1, 2, 0]).unwrap();
        assert_eq!(eigen_phases(&c), phases(&["0", "1/3", "2/3"]));
        let j = MonomialMap::new(vec![1, 0], phases(&["1/2", "0"])).unwrap();
        assert_eq!(eigen_phases(&j), phases(&["1/4", "3/4"]));
        assert!(eigen_phases(&MonomialMap::identity(0)).is_empty());
    }

    #[test]
    fn age_and_shift_examples() {
        let id = MonomialMap::identity(2);
        assert_eq!((age(&id), fixed_dim(&id)), (r(0, 1), 2));

        let z = build(Z3);
        let g = z.group().generators()[0];
        assert_eq!(z.age(g), r(2, 3));
        assert_eq!(z.fixed_dim(g), 0);
        assert_eq!(z.virtual_shift(g), 4);
        assert_eq!(z.cr_shift(g), r(4, 3));
        assert_eq!(z.virtual_shift(0), 0);
        assert_eq!(z.cr_shift(0), r(0, 1));

        let s = build(S3);
        let c = s.group().generators()[1];
        assert_eq!(s.age(c), r(1, 1));
        assert_eq!(s.fixed_dim(c), 1);
        assert_eq!(s.virtual_shift(c), 4);
        assert_eq!(s.cr_shift(c), r(2, 1));
    }

    #[test]
    fn pair_dimension_examples() {
        let s = build(S3);
        assert_eq!(s.fixed_dim_pair(0, 0).unwrap(), 3);
        let taus: Vec<usize> = (0..6).filter(|&i| s.sector(i).order == 2).collect();
        assert_eq!(s.fixed_dim_pair(taus[0], taus[1]).unwrap(), 1);
        assert_eq!(s.fixed_dim_pair(taus[0], taus[0]).unwrap(), 2);
        assert_eq!(s.invariant_dim().unwrap(), 1);

        let z = build(Z3);
        let g = z.group().generators()[0];
        assert_eq!(z.fixed_dim_pair(g, g).unwrap(), 0);
        assert_eq!(z.invariant_dim().unwrap(), 0);
    }

    #[test]
    fn point_geometry_zeroes_everything() {
        let s = LinearOrbifold::from_spec(&spec(S3), BuildOptions::point()).unwrap();
        assert_eq!(s.dimension(), 0);
        for g in 0..s.order() {
            assert_eq!(s.age(g), r(0, 1));
            assert_eq!(s.fixed_dim(g), 0);
            assert_eq!(s.virtual_shift(g), 0);
            for h in 0..s.order() {
                assert_eq!(s.fixed_dim_pair(g, h).unwrap(), 0);
            }
        }
    }

    #[test]
    fn labels() {
        let s = build(S3);
        assert_eq!(s.label(0), "e");
        assert_eq!(s.label(3), "g3");
        assert_eq!(s.class_label(0), "[e]");
    }
}
