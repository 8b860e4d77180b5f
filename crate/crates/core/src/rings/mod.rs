//! Sector algebras of the Chen-Ruan and virtual theories on the linear model.
//!
//! Every sector `V^g` is a linear subspace, so `H*(V^g)` is spanned by the unit
//! class `x_g`, and `x_g · x_h` lands on `x_{gh}` with coefficient
//! `i_*(e(B))`, where `B` is the theory's obstruction bundle over `V^{g,h}` and
//! `i : V^{g,h} → V^{gh}` is the inclusion. Over a contractible base the Euler
//! class of a positive-rank bundle vanishes, and the pushforward of the unit
//! vanishes unless `V^{g,h} = V^{gh}`. The structure constant is therefore 1
//! exactly when the rank is 0 and the two fixed spaces have equal dimension.

mod check;
mod table;

use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::ConjugacyPartition;
use crate::sectors::{is_nonnegative, rational_to_integer, LinearOrbifold};

pub use check::{AlgebraReport, Axiom, AxiomResult, Counterexample};
pub use table::RingTable;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Theory {
    #[serde(rename = "cr")]
    ChenRuan,
    #[serde(rename = "virt")]
    Virtual,
}

impl fmt::Display for Theory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Theory::ChenRuan => "cr",
            Theory::Virtual => "virt",
        })
    }
}

impl FromStr for Theory {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cr" => Ok(Theory::ChenRuan),
            "virt" => Ok(Theory::Virtual),
            _ => Err(Error::input(format!(
                "unknown theory {s:?}, expected cr or virt"
            ))),
        }
    }
}

impl LinearOrbifold {
    /// Rank of the Chen-Ruan obstruction bundle over `V^{g,h}`:
    /// `a(g) + a(h) − a(gh) − dim V^{gh} + dim V^{g,h}`.
    pub fn obstruction_rank(&self, g: usize, h: usize) -> Result<i64> {
        let gh = self.group().mul(g, h);
        let pair = self.fixed_dim_pair(g, h)? as i64;
        let value = self.age(g) + self.age(h)
            - self.age(gh)
            - Rational64::from_integer(self.fixed_dim(gh) as i64 - pair);
        checked_rank(value, "obstruction rank", g, h)
    }

    /// The same rank from the triple-age form
    /// `a(g) + a(h) + a((gh)⁻¹) − codim V^{g,h}`.
    pub fn obstruction_rank_dual_form(&self, g: usize, h: usize) -> Result<i64> {
        let t = self.group();
        let ghi = t.inv(t.mul(g, h));
        let codim = self.dimension() as i64 - self.fixed_dim_pair(g, h)? as i64;
        let value = self.age(g) + self.age(h) + self.age(ghi) - Rational64::from_integer(codim);
        checked_rank(value, "dual-form obstruction rank", g, h)
    }

    /// Rank of the excess bundle of `V^g` and `V^h` inside `V`:
    /// `n − dim V^g − dim V^h + dim V^{g,h}`.
    pub fn excess_rank(&self, g: usize, h: usize) -> Result<i64> {
        let value = self.dimension() as i64 - self.fixed_dim(g) as i64 - self.fixed_dim(h) as i64
            + self.fixed_dim_pair(g, h)? as i64;
        checked_rank(Rational64::from_integer(value), "excess rank", g, h)
    }

    pub fn bundle_rank(&self, theory: Theory, g: usize, h: usize) -> Result<i64> {
        match theory {
            Theory::ChenRuan => self.obstruction_rank(g, h),
            Theory::Virtual => self.excess_rank(g, h),
        }
    }

    /// Coefficient of `x_{gh}` in `x_g · x_h`: 0 or 1.
    pub fn structure_constant(&self, theory: Theory, g: usize, h: usize) -> Result<Rational64> {
        let gh = self.group().mul(g, h);
        let euler_nonzero = self.bundle_rank(theory, g, h)? == 0;
        let pushforward_nonzero = self.fixed_dim_pair(g, h)? == self.fixed_dim(gh);
        Ok(if euler_nonzero && pushforward_nonzero {
            Rational64::one()
        } else {
            Rational64::zero()
        })
    }

    pub fn degree(&self, theory: Theory, g: usize) -> Rational64 {
        match theory {
            Theory::ChenRuan => self.cr_shift(g),
            Theory::Virtual => Rational64::from_integer(self.virtual_shift(g)),
        }
    }

    pub fn build_algebra(&self, theory: Theory) -> Result<SectorAlgebra> {
        let t = self.group();
        let n = t.order();
        let mut mult = Vec::with_capacity(n * n);
        let mut constants = Vec::with_capacity(n * n);
        let mut action = Vec::with_capacity(n * n);
        for g in 0..n {
            for h in 0..n {
                mult.push(t.mul(g, h));
                constants.push(self.structure_constant(theory, g, h)?);
            }
        }
        for k in 0..n {
            for g in 0..n {
                action.push(t.conjugate(g, k));
            }
        }
        Ok(SectorAlgebra {
            theory,
            labels: (0..n).map(|g| self.label(g)).collect(),
            degrees: (0..n).map(|g| self.degree(theory, g)).collect(),
            constants,
            mult,
            inv: (0..n).map(|g| t.inv(g)).collect(),
            action,
        })
    }
}

fn checked_rank(value: Rational64, what: &str, g: usize, h: usize) -> Result<i64> {
    if !is_nonnegative(value) {
        return Err(Error::consistency(format!(
            "{what} at ({g}, {h}) is negative: {value}"
        )));
    }
    rational_to_integer(value, &format!("{what} at ({g}, {h})"))
}

/// The graded algebra on the sector basis `{x_g : g ∈ G}`, with the product of
/// `x_g` and `x_h` supported on `x_{gh}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SectorAlgebra {
    theory: Theory,
    labels: Vec<String>,
    degrees: Vec<Rational64>,
    constants: Vec<Rational64>,
    mult: Vec<usize>,
    inv: Vec<usize>,
    /// `action[k * n + g] = k⁻¹ g k`
    action: Vec<usize>,
}

impl SectorAlgebra {
    pub fn theory(&self) -> Theory {
        self.theory
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn degree(&self, g: usize) -> Rational64 {
        self.degrees[g]
    }

    pub fn degrees(&self) -> &[Rational64] {
        &self.degrees
    }

    /// Coefficient of `x_{gh}` in `x_g · x_h`.
    pub fn constant(&self, g: usize, h: usize) -> Rational64 {
        self.constants[g * self.dim() + h]
    }

    /// Index of the sector `gh` that `x_g · x_h` lands on.
    pub fn product_index(&self, g: usize, h: usize) -> usize {
        self.mult[g * self.dim() + h]
    }

    pub fn inverse(&self, g: usize) -> usize {
        self.inv[g]
    }

    /// `k⁻¹ g k`.
    pub fn act(&self, k: usize, g: usize) -> usize {
        self.action[k * self.dim() + g]
    }

    /// `⟨x_g, x_h⟩ = 1` if `h = g⁻¹`, else 0.
    pub fn pairing(&self, g: usize, h: usize) -> Rational64 {
        if self.inv[g] == h {
            Rational64::one()
        } else {
            Rational64::zero()
        }
    }

    /// Overwrites one structure constant. Only useful for exercising the
    /// verifier on tables that are known to be wrong.
    pub fn set_constant(&mut self, g: usize, h: usize, value: Rational64) {
        let n = self.dim();
        self.constants[g * n + h] = value;
    }

    /// Products of class sums `y_[a] = Σ_{g∈[a]} x_g`, regrouped by class.
    pub fn invariant_ring(&self, classes: &ConjugacyPartition) -> Result<InvariantRing> {
        let n = self.dim();
        let c = classes.len();
        let mut degrees = Vec::with_capacity(c);
        for (a, members) in classes.classes().iter().enumerate() {
            let d = self.degrees[members[0]];
            if let Some(&g) = members.iter().find(|&&g| self.degrees[g] != d) {
                return Err(Error::consistency(format!(
                    "degree is not constant on class {a}: sector {g}"
                )));
            }
            degrees.push(d);
        }

        let mut constants = vec![Rational64::zero(); c * c * c];
        let mut coeff = vec![Rational64::zero(); n];
        for (a, ca) in classes.classes().iter().enumerate() {
            for (b, cb) in classes.classes().iter().enumerate() {
                coeff.iter_mut().for_each(|x| *x = Rational64::zero());
                for &g in ca {
                    for &h in cb {
                        coeff[self.product_index(g, h)] += self.constant(g, h);
                    }
                }
                for (k, ck) in classes.classes().iter().enumerate() {
                    let value = coeff[ck[0]];
                    if let Some(&x) = ck.iter().find(|&&x| coeff[x] != value) {
                        return Err(Error::consistency(format!(
                            "coefficient of y_[{a}]·y_[{b}] differs on class {k} at sectors {} and {x}",
                            ck[0]
                        )));
                    }
                    if !value.is_integer() || !is_nonnegative(value) {
                        return Err(Error::consistency(format!(
                            "class coefficient {value} of y_[{a}]·y_[{b}] on class {k} is not a nonnegative integer"
                        )));
                    }
                    constants[(a * c + b) * c + k] = value;
                }
            }
        }

        Ok(InvariantRing {
            theory: self.theory,
            labels: (0..c)
                .map(|a| {
                    let rep = classes.representative(a);
                    format!("[{}]", self.labels[rep])
                })
                .collect(),
            sizes: classes.sizes(),
            degrees,
            constants,
        })
    }
}

/// Conjugation invariants of a sector algebra, on the basis of class sums.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantRing {
    theory: Theory,
    labels: Vec<String>,
    sizes: Vec<usize>,
    degrees: Vec<Rational64>,
    constants: Vec<Rational64>,
}

impl InvariantRing {
    pub fn theory(&self) -> Theory {
        self.theory
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn class_sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn degree(&self, a: usize) -> Rational64 {
        self.degrees[a]
    }

    pub fn degrees(&self) -> &[Rational64] {
        &self.degrees
    }

    /// Coefficient of `y_[k]` in `y_[a] · y_[b]`.
    pub fn constant(&self, a: usize, b: usize, k: usize) -> Rational64 {
        let c = self.dim();
        self.constants[(a * c + b) * c + k]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sectors::BuildOptions;
    use crate::spec::OrbifoldSpec;

    const Z3_11: &str =
        r#"{"name":"z3-11","dimension":2,"generators":[{"perm":[0,1],"phases":["1/3","1/3"]}]}"#;
    const Z3_12: &str =
        r#"{"name":"z3-12","dimension":2,"generators":[{"perm":[0,1],"phases":["1/3","2/3"]}]}"#;
    const S3: &str = r#"{"name":"s3","dimension":3,"generators":[
        {"perm":[1,0,2],"phases":["0","0","0"]},{"perm":[1,2,0],"phases":["0","0","0"]}]}"#;

    fn build(json: &str, options: BuildOptions) -> LinearOrbifold {
        LinearOrbifold::from_spec(&OrbifoldSpec::parse_str(json).unwrap(), options).unwrap()
    }

    fn one() -> Rational64 {
        Rational64::one()
    }

    fn zero() -> Rational64 {
        Rational64::zero()
    }

    /// Two transpositions whose product is a 3-cycle.
    fn two_transpositions(s: &LinearOrbifold) -> (usize, usize) {
        let taus: Vec<usize> = (0..s.order()).filter(|&i| s.sector(i).order == 2).collect();
        (taus[0], taus[1])
    }

    #[test]
    fn theory_parses() {
        assert_eq!("cr".parse::<Theory>().unwrap(), Theory::ChenRuan);
        assert_eq!("virt".parse::<Theory>().unwrap(), Theory::Virtual);
        assert!("quantum".parse::<Theory>().is_err());
    }

    #[test]
    fn ranks_against_unit_vanish() {
        for json in [Z3_11, Z3_12, S3] {
            let m = build(json, BuildOptions::default());
            for h in 0..m.order() {
                assert_eq!(m.obstruction_rank(0, h).unwrap(), 0);
                assert_eq!(m.excess_rank(0, h).unwrap(), 0);
            }
            assert_eq!(m.obstruction_rank_dual_form(0, 0).unwrap(), 0);
        }
    }

    #[test]
    fn rank_examples() {
        let z = build(Z3_11, BuildOptions::default());
        let g = z.group().generators()[0];
        let g2 = z.group().mul(g, g);
        assert_eq!(z.obstruction_rank(g, g).unwrap(), 0);
        assert_eq!(z.excess_rank(g, g).unwrap(), 2);
        assert_eq!(z.obstruction_rank(g2, g2).unwrap(), 2);

        let w = build(Z3_12, BuildOptions::default());
        let g = w.group().generators()[0];
        assert_eq!(w.obstruction_rank(g, g).unwrap(), 1);
        assert_eq!(w.obstruction_rank_dual_form(g, g).unwrap(), 1);

        let s = build(S3, BuildOptions::default());
        let (t1, t2) = two_transpositions(&s);
        assert_eq!(s.sector(s.group().mul(t1, t2)).order, 3);
        assert_eq!(s.obstruction_rank(t1, t2).unwrap(), 0);
        assert_eq!(s.obstruction_rank_dual_form(t1, t2).unwrap(), 0);
        assert_eq!(s.excess_rank(t1, t2).unwrap(), 0);
    }

    #[test]
    fn structure_constant_examples() {
        let z = build(Z3_11, BuildOptions::default());
        let g = z.group().generators()[0];
        let g2 = z.group().mul(g, g);
        for theory in [Theory::ChenRuan, Theory::Virtual] {
            for h in 0..3 {
                assert_eq!(z.structure_constant(theory, 0, h).unwrap(), one());
                assert_eq!(z.structure_constant(theory, h, 0).unwrap(), one());
            }
        }
        assert_eq!(z.structure_constant(Theory::ChenRuan, g, g).unwrap(), one());
        assert_eq!(
            z.structure_constant(Theory::ChenRuan, g, g2).unwrap(),
            zero()
        );
        assert_eq!(
            z.structure_constant(Theory::ChenRuan, g2, g2).unwrap(),
            zero()
        );
        assert_eq!(z.structure_constant(Theory::Virtual, g, g).unwrap(), zero());

        let s = build(S3, BuildOptions::default());
        let (t1, t2) = two_transpositions(&s);
        assert_eq!(
            s.structure_constant(Theory::ChenRuan, t1, t2).unwrap(),
            one()
        );
        assert_eq!(
            s.structure_constant(Theory::Virtual, t1, t2).unwrap(),
            one()
        );
    }

    #[test]
    fn z3_cr_table() {
        let z = build(Z3_11, BuildOptions::default());
        let alg = z.build_algebra(Theory::ChenRuan).unwrap();
        let g = z.group().generators()[0];
        let g2 = z.group().mul(g, g);
        let expected = [
            ((0, 0), 1),
            ((0, g), 1),
            ((0, g2), 1),
            ((g, 0), 1),
            ((g, g), 1),
            ((g, g2), 0),
            ((g2, 0), 1),
            ((g2, g), 0),
            ((g2, g2), 0),
        ];
        for ((a, b), v) in expected {
            assert_eq!(
                alg.constant(a, b),
                Rational64::from_integer(v),
                "({a}, {b})"
            );
        }
        assert_eq!(alg.product_index(g, g), g2);
        assert_eq!(alg.degree(g), Rational64::new(4, 3));
        assert_eq!(alg.degree(g2), Rational64::new(8, 3));
    }

    #[test]
    fn trivial_group_is_the_unit_algebra() {
        let m = build(r#"{"name":"triv","dimension":2}"#, BuildOptions::default());
        for theory in [Theory::ChenRuan, Theory::Virtual] {
            let alg = m.build_algebra(theory).unwrap();
            assert_eq!(alg.dim(), 1);
            assert_eq!(alg.degree(0), zero());
            assert_eq!(alg.constant(0, 0), one());
        }
    }

    #[test]
    fn point_geometry_gives_the_group_ring() {
        let m = build(S3, BuildOptions::point());
        for theory in [Theory::ChenRuan, Theory::Virtual] {
            let alg = m.build_algebra(theory).unwrap();
            for g in 0..6 {
                for h in 0..6 {
                    assert_eq!(alg.constant(g, h), one());
                }
            }
        }
    }

    #[test]
    fn abelian_invariant_ring_equals_sector_algebra() {
        let z = build(Z3_11, BuildOptions::default());
        let alg = z.build_algebra(Theory::ChenRuan).unwrap();
        let ring = alg.invariant_ring(z.classes()).unwrap();
        assert_eq!(ring.dim(), 3);
        for a in 0..3 {
            assert_eq!(ring.degree(a), alg.degree(a));
            for b in 0..3 {
                for k in 0..3 {
                    let expected = if alg.product_index(a, b) == k {
                        alg.constant(a, b)
                    } else {
                        zero()
                    };
                    assert_eq!(ring.constant(a, b, k), expected);
                }
            }
        }
    }

    #[test]
    fn dw_three_cycle_class_squares() {
        let m = build(S3, BuildOptions::point());
        let ring = m
            .build_algebra(Theory::Virtual)
            .unwrap()
            .invariant_ring(m.classes())
            .unwrap();
        let c = (0..ring.dim())
            .find(|&a| ring.class_sizes()[a] == 2)
            .unwrap();
        for k in 0..ring.dim() {
            let expected = match k {
                0 => 2,
                _ if k == c => 1,
                _ => 0,
            };
            assert_eq!(ring.constant(c, c, k), Rational64::from_integer(expected));
        }
    }

    #[test]
    fn class_constancy_violation_is_reported() {
        let s = build(S3, BuildOptions::default());
        let mut alg = s.build_algebra(Theory::ChenRuan).unwrap();
        let (t1, t2) = two_transpositions(&s);
        alg.set_constant(t1, t2, zero());
        assert!(matches!(
            alg.invariant_ring(s.classes()),
            Err(Error::Consistency(_))
        ));
    }
}
