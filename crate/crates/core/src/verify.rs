//! Comparison of the Chen-Ruan theory of the cotangent doubling `V ⊕ V̄` with
//! the virtual theory of `V`, as executable checks over every sector and pair.
//!
//! The zero section identifies the sector `V^g` with the sector of `g ⊕ ḡ` in
//! the doubling, and every sector class is the unit of a contractible space,
//! so the ring comparison reduces to comparing tables under `g ↦ g ⊕ ḡ`.

use std::fmt;
use std::time::Instant;

use num_rational::Rational64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rings::{Axiom, Counterexample, Theory};
use crate::sectors::{BuildOptions, LinearOrbifold};
use crate::spec::OrbifoldSpec;

/// Above this order the table-level group checks only sample triples.
const EXHAUSTIVE_TRIPLE_LIMIT: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    /// Set when the check aborted on an internal consistency error.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub millis: u64,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    fn run(name: impl Into<String>, f: impl FnOnce() -> Result<Option<Counterexample>>) -> Self {
        let start = Instant::now();
        let outcome = f();
        let millis = start.elapsed().as_millis() as u64;
        let (status, counterexample, error) = match outcome {
            Ok(None) => (Status::Pass, None, None),
            Ok(Some(c)) => (Status::Fail, Some(c), None),
            Err(e) => (Status::Fail, None, Some(e.to_string())),
        };
        CheckResult {
            name: name.into(),
            status,
            counterexample,
            error,
            millis,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub spec: String,
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "verification of {}", self.spec)?;
        for c in &self.checks {
            let tag = if c.passed() { "PASS" } else { "FAIL" };
            write!(f, "  {tag} {:<28} {:>6} ms", c.name, c.millis)?;
            if let Some(ce) = &c.counterexample {
                write!(f, "  {ce}")?;
            }
            if let Some(e) = &c.error {
                write!(f, "  {e}")?;
            }
            writeln!(f)?;
        }
        let failed = self.failures().count();
        if failed == 0 {
            write!(f, "all {} checks passed", self.checks.len())
        } else {
            write!(f, "{failed} of {} checks failed", self.checks.len())
        }
    }
}

/// An orbifold together with its cotangent doubling and the sector bijection
/// `g ↦ g ⊕ ḡ` between them.
#[derive(Debug)]
pub struct CotangentPair {
    base: LinearOrbifold,
    doubled: LinearOrbifold,
    doubling: Vec<usize>,
    class_doubling: Vec<usize>,
}

impl CotangentPair {
    pub fn from_spec(spec: &OrbifoldSpec, options: BuildOptions) -> Result<Self> {
        let base = LinearOrbifold::from_spec(spec, options)?;
        let doubled = LinearOrbifold::from_spec(&spec.cotangent_double(), options)?;
        Self::new(base, doubled)
    }

    pub fn new(base: LinearOrbifold, doubled: LinearOrbifold) -> Result<Self> {
        if base.order() != doubled.order() {
            return Err(Error::consistency(format!(
                "doubled group has order {}, original {}",
                doubled.order(),
                base.order()
            )));
        }
        let mut hit = vec![false; doubled.order()];
        let mut doubling = Vec::with_capacity(base.order());
        for g in 0..base.order() {
            let image = base.group().element(g).cotangent();
            let d = doubled.group().index_of(&image).ok_or_else(|| {
                Error::consistency(format!("{image} is missing from the doubled group"))
            })?;
            if std::mem::replace(&mut hit[d], true) {
                return Err(Error::consistency(format!(
                    "doubling is not injective at {g}"
                )));
            }
            doubling.push(d);
        }
        let mut class_doubling = Vec::with_capacity(base.classes().len());
        let mut class_hit = vec![false; doubled.classes().len()];
        for a in 0..base.classes().len() {
            let rep = base.classes().representative(a);
            let c = doubled.classes().class_of(doubling[rep]);
            if std::mem::replace(&mut class_hit[c], true)
                || base.classes().classes()[a].len() != doubled.classes().classes()[c].len()
            {
                return Err(Error::consistency(format!(
                    "conjugacy class {a} has no matching class in the doubling"
                )));
            }
            class_doubling.push(c);
        }
        Ok(CotangentPair {
            base,
            doubled,
            doubling,
            class_doubling,
        })
    }

    pub fn base(&self) -> &LinearOrbifold {
        &self.base
    }

    pub fn doubled(&self) -> &LinearOrbifold {
        &self.doubled
    }

    /// Index of `g ⊕ ḡ` in the doubled group.
    pub fn doubled_index(&self, g: usize) -> usize {
        self.doubling[g]
    }

    pub fn doubled_class(&self, a: usize) -> usize {
        self.class_doubling[a]
    }

    fn pairs(&self) -> impl Iterator<Item = (usize, usize)> {
        let n = self.base.order();
        (0..n).flat_map(move |g| (0..n).map(move |h| (g, h)))
    }

    /// Rank of the virtual bundle `T G² − e₁₂* TΛG` at `(g, h)`:
    /// `dim V^{g,h} − dim V^{gh}`, possibly negative.
    pub fn k_rank(&self, g: usize, h: usize) -> Result<i64> {
        let gh = self.base.group().mul(g, h);
        Ok(self.base.fixed_dim_pair(g, h)? as i64 - self.base.fixed_dim(gh) as i64)
    }

    /// The Chen-Ruan shift of `g ⊕ ḡ` equals the virtual shift of `g`.
    pub fn grading_check(&self) -> CheckResult {
        CheckResult::run("grading", || Ok(self.grading_counterexample()))
    }

    fn grading_counterexample(&self) -> Option<Counterexample> {
        (0..self.base.order()).find_map(|g| {
            let s = self.doubled.cr_shift(self.doubling[g]);
            let sigma = Rational64::from_integer(self.base.virtual_shift(g));
            (s != sigma).then(|| Counterexample::new(vec![g], s, sigma))
        })
    }

    /// Obstruction rank in the doubling equals excess rank plus `k_rank`.
    pub fn decomposition_check(&self) -> CheckResult {
        CheckResult::run("decomposition", || {
            for (g, h) in self.pairs() {
                let e = self
                    .doubled
                    .obstruction_rank(self.doubling[g], self.doubling[h])?;
                let v = self.base.excess_rank(g, h)?;
                let k = self.k_rank(g, h)?;
                if e != v + k {
                    return Ok(Some(Counterexample::new(
                        vec![g, h],
                        e,
                        format!("{v} + {k}"),
                    )));
                }
            }
            Ok(None)
        })
    }

    /// Every fixed dimension doubles, for elements and for pairs.
    pub fn doubled_fixed_dims_check(&self) -> CheckResult {
        CheckResult::run("doubled-fixed-dims", || {
            for g in 0..self.base.order() {
                let d = self.doubled.fixed_dim(self.doubling[g]);
                if d != 2 * self.base.fixed_dim(g) {
                    return Ok(Some(Counterexample::new(
                        vec![g],
                        d,
                        2 * self.base.fixed_dim(g),
                    )));
                }
            }
            for (g, h) in self.pairs() {
                let d = self
                    .doubled
                    .fixed_dim_pair(self.doubling[g], self.doubling[h])?;
                let b = self.base.fixed_dim_pair(g, h)?;
                if d != 2 * b {
                    return Ok(Some(Counterexample::new(vec![g, h], d, 2 * b)));
                }
            }
            Ok(None)
        })
    }

    /// `dim V_{T*}^{ĝ,ĥ} − dim V_{T*}^{ĝĥ} = 2(dim V^{g,h} − dim V^{gh})`.
    pub fn pushforward_dims_check(&self) -> CheckResult {
        CheckResult::run("pushforward-dims", || {
            let t = self.doubled.group();
            for (g, h) in self.pairs() {
                let (dg, dh) = (self.doubling[g], self.doubling[h]);
                let lhs = self.doubled.fixed_dim_pair(dg, dh)? as i64
                    - self.doubled.fixed_dim(t.mul(dg, dh)) as i64;
                let rhs = 2 * self.k_rank(g, h)?;
                if lhs != rhs {
                    return Ok(Some(Counterexample::new(vec![g, h], lhs, rhs)));
                }
            }
            Ok(None)
        })
    }

    /// The Chen-Ruan ring of the doubling against the virtual ring of the
    /// original: degrees, sector constants, pairings and class-level tables.
    pub fn main_theorem_check(&self) -> CheckResult {
        CheckResult::run("main-theorem", || {
            if let Some(c) = self.grading_counterexample() {
                return Ok(Some(c));
            }
            let cr = self.doubled.build_algebra(Theory::ChenRuan)?;
            let virt = self.base.build_algebra(Theory::Virtual)?;
            let d = &self.doubling;
            for (g, h) in self.pairs() {
                if d[virt.product_index(g, h)] != cr.product_index(d[g], d[h]) {
                    return Err(Error::consistency(format!(
                        "doubling is not multiplicative at ({g}, {h})"
                    )));
                }
                let (lhs, rhs) = (cr.constant(d[g], d[h]), virt.constant(g, h));
                if lhs != rhs {
                    return Ok(Some(Counterexample::new(vec![g, h], lhs, rhs)));
                }
                let (lhs, rhs) = (cr.pairing(d[g], d[h]), virt.pairing(g, h));
                if lhs != rhs {
                    return Ok(Some(Counterexample::new(vec![g, h], lhs, rhs)));
                }
            }

            let cr_ring = cr.invariant_ring(self.doubled.classes())?;
            let virt_ring = virt.invariant_ring(self.base.classes())?;
            let c = &self.class_doubling;
            let classes = virt_ring.dim();
            for a in 0..classes {
                if cr_ring.degree(c[a]) != virt_ring.degree(a) {
                    return Ok(Some(Counterexample::new(
                        vec![a],
                        cr_ring.degree(c[a]),
                        virt_ring.degree(a),
                    )));
                }
                for b in 0..classes {
                    for k in 0..classes {
                        let lhs = cr_ring.constant(c[a], c[b], c[k]);
                        let rhs = virt_ring.constant(a, b, k);
                        if lhs != rhs {
                            return Ok(Some(Counterexample::new(vec![a, b, k], lhs, rhs)));
                        }
                    }
                }
            }
            Ok(None)
        })
    }

    /// Group-table sanity for both groups and the doubling homomorphism.
    pub fn closure_check(&self) -> CheckResult {
        CheckResult::run("closure-sanity", || {
            for m in [&self.base, &self.doubled] {
                let t = m.group();
                if !t.element(0).is_identity() {
                    return Ok(Some(Counterexample::new(vec![0], t.element(0), "identity")));
                }
                for g in 0..t.order() {
                    if t.mul(g, t.inv(g)) != 0 {
                        return Ok(Some(Counterexample::new(vec![g], t.mul(g, t.inv(g)), 0)));
                    }
                    if t.order() % t.element_order(g) != 0 {
                        return Ok(Some(Counterexample::new(
                            vec![g],
                            format!("order {}", t.element_order(g)),
                            format!("divisor of {}", t.order()),
                        )));
                    }
                }
                let sample = sample_indices(t.order());
                for &a in &sample {
                    for &b in &sample {
                        for &c in &sample {
                            let l = t.mul(t.mul(a, b), c);
                            let r = t.mul(a, t.mul(b, c));
                            if l != r {
                                return Ok(Some(Counterexample::new(vec![a, b, c], l, r)));
                            }
                        }
                    }
                }
            }
            let (bt, dt) = (self.base.group(), self.doubled.group());
            let sample = sample_indices(bt.order());
            for &g in &sample {
                for &h in &sample {
                    let lhs = self.doubling[bt.mul(g, h)];
                    let rhs = dt.mul(self.doubling[g], self.doubling[h]);
                    if lhs != rhs {
                        return Ok(Some(Counterexample::new(vec![g, h], lhs, rhs)));
                    }
                }
            }
            Ok(None)
        })
    }

    /// `a(g) + a(g⁻¹) = n − dim V^g` in both the original and the doubling.
    pub fn age_duality_check(&self) -> CheckResult {
        CheckResult::run("age-duality", || {
            for m in [&self.base, &self.doubled] {
                let t = m.group();
                for g in 0..m.order() {
                    let lhs = m.age(g) + m.age(t.inv(g));
                    let rhs =
                        Rational64::from_integer(m.dimension() as i64 - m.fixed_dim(g) as i64);
                    if lhs != rhs {
                        return Ok(Some(Counterexample::new(vec![g], lhs, rhs)));
                    }
                }
            }
            Ok(None)
        })
    }

    /// Projector dimensions agree with eigen-phase counts and are monotone.
    pub fn projector_check(&self) -> CheckResult {
        CheckResult::run("projector-sanity", || {
            for m in [&self.base, &self.doubled] {
                let n = m.order();
                for g in 0..n {
                    let d = m.fixed_dim(g);
                    for other in [g, 0] {
                        let p = m.fixed_dim_pair(g, other)?;
                        if p != d {
                            return Ok(Some(Counterexample::new(vec![g, other], p, d)));
                        }
                    }
                }
                for g in 0..n {
                    for h in 0..n {
                        let p = m.fixed_dim_pair(g, h)?;
                        let bound = m.fixed_dim(g).min(m.fixed_dim(h));
                        if p > bound || p != m.fixed_dim_pair(h, g)? {
                            return Ok(Some(Counterexample::new(vec![g, h], p, bound)));
                        }
                    }
                }
                m.invariant_dim()?;
            }
            Ok(None)
        })
    }

    /// The Chen-Ruan obstruction rank agrees with its triple-age form.
    pub fn rank_oracle_check(&self) -> CheckResult {
        CheckResult::run("rank-oracle", || {
            for m in [&self.base, &self.doubled] {
                let n = m.order();
                for g in 0..n {
                    for h in 0..n {
                        let a = m.obstruction_rank(g, h)?;
                        let b = m.obstruction_rank_dual_form(g, h)?;
                        if a != b {
                            return Ok(Some(Counterexample::new(vec![g, h], a, b)));
                        }
                    }
                }
            }
            Ok(None)
        })
    }

    /// One check per axiom of the original orbifold's sector algebra.
    pub fn algebra_checks(&self, theory: Theory) -> Vec<CheckResult> {
        let start = Instant::now();
        let alg = match self.base.build_algebra(theory) {
            Ok(a) => a,
            Err(e) => {
                return vec![CheckResult {
                    name: format!("algebra-{theory}"),
                    status: Status::Fail,
                    counterexample: None,
                    error: Some(e.to_string()),
                    millis: start.elapsed().as_millis() as u64,
                }]
            }
        };
        Axiom::ALL
            .iter()
            .map(|&axiom| {
                CheckResult::run(format!("algebra-{theory}/{axiom}"), || {
                    Ok(alg.verify_axiom(axiom).counterexample)
                })
            })
            .collect()
    }
}

fn sample_indices(order: usize) -> Vec<usize> {
    if order <= EXHAUSTIVE_TRIPLE_LIMIT {
        (0..order).collect()
    } else {
        let step = order / EXHAUSTIVE_TRIPLE_LIMIT;
        (0..order)
            .step_by(step.max(1))
            .take(EXHAUSTIVE_TRIPLE_LIMIT)
            .collect()
    }
}

/// Runs every check on a spec and its cotangent doubling.
///
/// Building either group may fail with an input or resource error; failures of
/// the checks themselves are recorded in the report.
pub fn verify_spec(spec: &OrbifoldSpec, options: BuildOptions) -> Result<VerificationReport> {
    let pair = CotangentPair::from_spec(spec, options)?;
    let mut checks = vec![
        pair.closure_check(),
        pair.age_duality_check(),
        pair.projector_check(),
        pair.rank_oracle_check(),
    ];
    checks.extend(pair.algebra_checks(Theory::ChenRuan));
    checks.extend(pair.algebra_checks(Theory::Virtual));
    checks.extend([
        pair.doubled_fixed_dims_check(),
        pair.grading_check(),
        pair.decomposition_check(),
        pair.pushforward_dims_check(),
        pair.main_theorem_check(),
    ]);
    Ok(VerificationReport {
        spec: spec.name.clone(),
        checks,
    })
}
