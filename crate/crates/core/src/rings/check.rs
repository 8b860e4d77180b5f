//! Exhaustive verification of the G-Frobenius algebra axioms.

use std::fmt;

use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::Serialize;

use super::SectorAlgebra;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    Associativity,
    Grading,
    Unit,
    Frobenius,
    Nondegeneracy,
    Equivariance,
}

impl Axiom {
    pub const ALL: [Axiom; 6] = [
        Axiom::Associativity,
        Axiom::Grading,
        Axiom::Unit,
        Axiom::Frobenius,
        Axiom::Nondegeneracy,
        Axiom::Equivariance,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::Associativity => "associativity",
            Axiom::Grading => "grading",
            Axiom::Unit => "unit",
            Axiom::Frobenius => "frobenius",
            Axiom::Nondegeneracy => "nondegeneracy",
            Axiom::Equivariance => "equivariance",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A witness that two sides of an identity differ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    /// Basis or element indices the identity was evaluated at.
    pub at: Vec<usize>,
    pub lhs: String,
    pub rhs: String,
}

impl Counterexample {
    pub fn new(at: Vec<usize>, lhs: impl fmt::Display, rhs: impl fmt::Display) -> Self {
        Counterexample {
            at,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at {:?}: {} != {}", self.at, self.lhs, self.rhs)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomResult {
    pub axiom: Axiom,
    pub passed: bool,
    /// Number of basis tuples examined.
    pub cases: usize,
    pub counterexample: Option<Counterexample>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlgebraReport {
    pub results: Vec<AxiomResult>,
}

impl AlgebraReport {
    pub fn all_passed(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }

    pub fn get(&self, axiom: Axiom) -> &AxiomResult {
        self.results
            .iter()
            .find(|r| r.axiom == axiom)
            .expect("every axiom is checked")
    }
}

impl SectorAlgebra {
    /// Checks every axiom over the whole basis and reports the first
    /// counterexample for each.
    pub fn verify(&self) -> AlgebraReport {
        AlgebraReport {
            results: Axiom::ALL.iter().map(|&a| self.verify_axiom(a)).collect(),
        }
    }

    pub fn verify_axiom(&self, axiom: Axiom) -> AxiomResult {
        let (cases, counterexample) = match axiom {
            Axiom::Associativity => self.check_associativity(),
            Axiom::Grading => self.check_grading(),
            Axiom::Unit => self.check_unit(),
            Axiom::Frobenius => self.check_frobenius(),
            Axiom::Nondegeneracy => self.check_nondegeneracy(),
            Axiom::Equivariance => self.check_equivariance(),
        };
        AxiomResult {
            axiom,
            passed: counterexample.is_none(),
            cases,
            counterexample,
        }
    }

    /// `(x_g x_h) x_k = x_g (x_h x_k)`; both sides live on `x_{ghk}`.
    fn check_associativity(&self) -> (usize, Option<Counterexample>) {
        let n = self.dim();
        for g in 0..n {
            for h in 0..n {
                let gh = self.product_index(g, h);
                let c_gh = self.constant(g, h);
                for k in 0..n {
                    let hk = self.product_index(h, k);
                    let left = c_gh * self.constant(gh, k);
                    let right = self.constant(h, k) * self.constant(g, hk);
                    if left != right {
                        return (
                            n * n * n,
                            Some(Counterexample::new(vec![g, h, k], left, right)),
                        );
                    }
                }
            }
        }
        (n * n * n, None)
    }

    fn check_grading(&self) -> (usize, Option<Counterexample>) {
        let n = self.dim();
        for g in 0..n {
            for h in 0..n {
                if self.constant(g, h).is_zero() {
                    continue;
                }
                let sum = self.degree(g) + self.degree(h);
                let target = self.degree(self.product_index(g, h));
                if sum != target {
                    return (n * n, Some(Counterexample::new(vec![g, h], sum, target)));
                }
            }
        }
        (n * n, None)
    }

    fn check_unit(&self) -> (usize, Option<Counterexample>) {
        let n = self.dim();
        for h in 0..n {
            for (l, r) in [(0, h), (h, 0)] {
                let c = self.constant(l, r);
                if !c.is_one() || self.product_index(l, r) != h {
                    return (n, Some(Counterexample::new(vec![l, r], c, 1)));
                }
            }
        }
        if !self.degree(0).is_zero() {
            return (n, Some(Counterexample::new(vec![0], self.degree(0), 0)));
        }
        (n, None)
    }

    /// `⟨x_g x_h, x_k⟩ = ⟨x_g, x_h x_k⟩`.
    fn check_frobenius(&self) -> (usize, Option<Counterexample>) {
        let n = self.dim();
        for g in 0..n {
            for h in 0..n {
                let gh = self.product_index(g, h);
                for k in 0..n {
                    let hk = self.product_index(h, k);
                    let left = self.constant(g, h) * self.pairing(gh, k);
                    let right = self.constant(h, k) * self.pairing(g, hk);
                    if left != right {
                        return (
                            n * n * n,
                            Some(Counterexample::new(vec![g, h, k], left, right)),
                        );
                    }
                }
            }
        }
        (n * n * n, None)
    }

    /// Rank of the Gram matrix by exact elimination.
    fn check_nondegeneracy(&self) -> (usize, Option<Counterexample>) {
        let n = self.dim();
        let mut m: Vec<Vec<Rational64>> = (0..n)
            .map(|g| (0..n).map(|h| self.pairing(g, h)).collect())
            .collect();
        let mut rank = 0;
        for col in 0..n {
            let Some(pivot) = (rank..n).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(rank, pivot);
            let pivot_row = m[rank].clone();
            for (r, row) in m.iter_mut().enumerate() {
                if r != rank && !row[col].is_zero() {
                    let factor = row[col] / pivot_row[col];
                    for (x, &y) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                        *x -= factor * y;
                    }
                }
            }
            rank += 1;
        }
        if rank == n {
            (n, None)
        } else {
            (
                n,
                Some(Counterexample::new(
                    vec![],
                    format!("rank {rank}"),
                    format!("rank {n}"),
                )),
            )
        }
    }

    /// Constants, degrees and the pairing are invariant under `g ↦ k⁻¹gk`.
    fn check_equivariance(&self) -> (usize, Option<Counterexample>) {
        let n = self.dim();
        for k in 0..n {
            for g in 0..n {
                let gk = self.act(k, g);
                if self.degree(gk) != self.degree(g) {
                    return (
                        n * n * n,
                        Some(Counterexample::new(
                            vec![g, k],
                            self.degree(gk),
                            self.degree(g),
                        )),
                    );
                }
                for h in 0..n {
                    let hk = self.act(k, h);
                    let moved = self.constant(gk, hk);
                    let orig = self.constant(g, h);
                    if moved != orig || self.pairing(gk, hk) != self.pairing(g, h) {
                        return (
                            n * n * n,
                            Some(Counterexample::new(vec![g, h, k], moved, orig)),
                        );
                    }
                }
            }
        }
        (n * n * n, None)
    }
}
