//! Brute-force oracles shared by the integration tests.
//!
//! Nothing here calls into the engine's group or sector code: elements are
//! plain `(perm, phases)` pairs, groups are closed by exhaustive products, and
//! fixed dimensions come from counting coordinate orbits.

#![allow(dead_code)]

use std::collections::{HashMap, HashSet};
use std::path::PathBuf;

use num_rational::Rational64;
use num_traits::Zero;
use stringy_core::{MonomialMap, OrbifoldSpec};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mono {
    pub perm: Vec<usize>,
    pub phases: Vec<Rational64>,
}

fn frac(q: Rational64) -> Rational64 {
    q - q.floor()
}

impl Mono {
    pub fn identity(n: usize) -> Self {
        Mono {
            perm: (0..n).collect(),
            phases: vec![Rational64::zero(); n],
        }
    }

    pub fn from_map(m: &MonomialMap) -> Self {
        Mono {
            perm: m.perm().iter().map(|&p| p as usize).collect(),
            phases: m.phases().iter().map(|p| p.to_rational()).collect(),
        }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn then_after(&self, other: &Mono) -> Mono {
        let n = self.perm.len();
        Mono {
            perm: (0..n).map(|j| self.perm[other.perm[j]]).collect(),
            phases: (0..n)
                .map(|j| frac(other.phases[j] + self.phases[other.perm[j]]))
                .collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.perm.len()
    }

    /// Eigenvalue phases from the cycle decomposition: a cycle of length `l`
    /// whose phases sum to `s` contributes the `l` roots `(s + t) / l`.
    pub fn eigen_phases(&self) -> Vec<Rational64> {
        let n = self.dim();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let (mut j, mut len, mut s) = (start, 0i64, Rational64::zero());
            while !seen[j] {
                seen[j] = true;
                s += self.phases[j];
                len += 1;
                j = self.perm[j];
            }
            for t in 0..len {
                out.push(frac((frac(s) + t) / len));
            }
        }
        out.sort();
        out
    }

    pub fn age(&self) -> Rational64 {
        self.eigen_phases().into_iter().sum()
    }
}

/// Closure by repeated products until nothing new appears.
pub fn close(n: usize, gens: &[Mono]) -> Vec<Mono> {
    let mut elems = vec![Mono::identity(n)];
    let mut seen: HashSet<Mono> = elems.iter().cloned().collect();
    let mut i = 0;
    while i < elems.len() {
        for g in gens {
            let p = elems[i].then_after(g);
            if seen.insert(p.clone()) {
                elems.push(p);
            }
        }
        i += 1;
    }
    elems
}

/// `dim (Cⁿ)^H` for a finite monomial group `H` given by all its elements:
/// one invariant line per coordinate orbit on which the stabilizer of a base
/// point acts with trivial phase.
pub fn fixed_dim_of(n: usize, elements: &[Mono]) -> u32 {
    let mut orbit_of = vec![usize::MAX; n];
    let mut count = 0;
    for j0 in 0..n {
        if orbit_of[j0] != usize::MAX {
            continue;
        }
        let mut stack = vec![j0];
        orbit_of[j0] = j0;
        while let Some(j) = stack.pop() {
            for k in elements {
                let t = k.perm[j];
                if orbit_of[t] == usize::MAX {
                    orbit_of[t] = j0;
                    stack.push(t);
                }
            }
        }
        let trivial = elements
            .iter()
            .filter(|k| k.perm[j0] == j0)
            .all(|k| k.phases[j0].is_zero());
        if trivial {
            count += 1;
        }
    }
    count
}

pub fn fixed_dim_generated(n: usize, gens: &[Mono]) -> u32 {
    fixed_dim_of(n, &close(n, gens))
}

/// Brute-force group data indexed like the engine's table, so results can be
/// compared entry by entry.
pub struct Brute {
    pub n: usize,
    pub elems: Vec<Mono>,
    pub index: HashMap<Mono, usize>,
}

impl Brute {
    pub fn new(n: usize, elems: Vec<Mono>) -> Self {
        let index = elems
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect();
        Brute { n, elems, index }
    }

    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.index[&self.elems[g].then_after(&self.elems[h])]
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn identity(&self) -> usize {
        self.index[&Mono::identity(self.n)]
    }

    pub fn inv(&self, g: usize) -> usize {
        let e = self.identity();
        (0..self.order()).find(|&h| self.mul(g, h) == e).unwrap()
    }

    /// Conjugacy classes by conjugating with every element.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut done = vec![false; self.order()];
        let mut out = Vec::new();
        for g in 0..self.order() {
            if done[g] {
                continue;
            }
            let mut class: Vec<usize> = (0..self.order())
                .map(|k| self.mul(self.mul(self.inv(k), g), k))
                .collect();
            class.sort();
            class.dedup();
            class.iter().for_each(|&x| done[x] = true);
            out.push(class);
        }
        out
    }

    /// Number of pairs `(a, b) ∈ A × B` with `ab = target`: the coefficient of
    /// the class of `target` in the product of class sums in `Z[G]`.
    pub fn convolution(&self, a: &[usize], b: &[usize], target: usize) -> i64 {
        let mut count = 0;
        for &x in a {
            for &y in b {
                if self.mul(x, y) == target {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn fixed_dim(&self, g: usize) -> u32 {
        fixed_dim_generated(self.n, &[self.elems[g].clone()])
    }

    pub fn fixed_dim_pair(&self, g: usize, h: usize) -> u32 {
        fixed_dim_generated(self.n, &[self.elems[g].clone(), self.elems[h].clone()])
    }
}

pub fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

/// Every corpus spec, sorted by file name.
pub fn corpus() -> Vec<OrbifoldSpec> {
    let mut paths: Vec<PathBuf> = std::fs::read_dir(corpus_dir())
        .expect("corpus directory")
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    paths
        .iter()
        .map(|p| OrbifoldSpec::from_path(p).unwrap())
        .collect()
}

pub fn corpus_spec(name: &str) -> OrbifoldSpec {
    corpus()
        .into_iter()
        .find(|s| s.name == name)
        .unwrap_or_else(|| panic!("no corpus spec named {name}"))
}
