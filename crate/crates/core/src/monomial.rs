//! Monomial matrices: a permutation of coordinates decorated with roots of unity.

use std::fmt;

use crate::cyclotomic::{Cyclotomic, CyclotomicField};
use crate::error::{Error, Result};
use crate::phase::Phase;

/// The linear map `e_j ↦ exp(2πi·phases[j]) · e_{perm[j]}`.
///
/// The pair `(perm, phases)` is canonical, so derived equality and hashing
/// are equality and hashing of the underlying matrix.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialMap {
    perm: Vec<u32>,
    phases: Vec<Phase>,
}

impl MonomialMap {
    pub fn new(perm: Vec<u32>, phases: Vec<Phase>) -> Result<Self> {
        let n = perm.len();
        if phases.len() != n {
            return Err(Error::input(format!(
                "perm has length {n} but {} phases were given",
                phases.len()
            )));
        }
        let mut seen = vec![false; n];
        for &p in &perm {
            let p = p as usize;
            if p >= n {
                return Err(Error::input(format!("perm entry {p} out of range 0..{n}")));
            }
            if std::mem::replace(&mut seen[p], true) {
                return Err(Error::input(format!("perm {perm:?} is not a bijection")));
            }
        }
        Ok(MonomialMap { perm, phases })
    }

    pub fn identity(n: usize) -> Self {
        MonomialMap {
            perm: (0..n as u32).collect(),
            phases: vec![Phase::ZERO; n],
        }
    }

    pub fn diagonal(phases: Vec<Phase>) -> Self {
        MonomialMap {
            perm: (0..phases.len() as u32).collect(),
            phases,
        }
    }

    /// A pure permutation matrix.
    pub fn permutation(perm: Vec<u32>) -> Result<Self> {
        let n = perm.len();
        Self::new(perm, vec![Phase::ZERO; n])
    }

    pub fn dimension(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[u32] {
        &self.perm
    }

    pub fn phases(&self) -> &[Phase] {
        &self.phases
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(j, &p)| p as usize == j)
            && self.phases.iter().all(|p| p.is_zero())
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &MonomialMap) -> Result<MonomialMap> {
        if self.dimension() != other.dimension() {
            return Err(Error::input(format!(
                "cannot compose maps of dimension {} and {}",
                self.dimension(),
                other.dimension()
            )));
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &MonomialMap) -> MonomialMap {
        let (perm, phases) = other
            .perm
            .iter()
            .zip(&other.phases)
            .map(|(&bj, &phase)| (self.perm[bj as usize], phase.add(self.phases[bj as usize])))
            .unzip();
        MonomialMap { perm, phases }
    }

    pub fn inverse(&self) -> MonomialMap {
        let n = self.dimension();
        let mut perm = vec![0u32; n];
        let mut phases = vec![Phase::ZERO; n];
        for (j, (&pj, &phase)) in self.perm.iter().zip(&self.phases).enumerate() {
            perm[pj as usize] = j as u32;
            phases[pj as usize] = phase.neg();
        }
        MonomialMap { perm, phases }
    }

    /// Complex conjugate matrix: same permutation, negated phases.
    pub fn dual(&self) -> MonomialMap {
        MonomialMap {
            perm: self.perm.clone(),
            phases: self.phases.iter().map(|p| p.neg()).collect(),
        }
    }

    /// Block-diagonal `self ⊕ other` on the concatenated coordinates.
    pub fn direct_sum(&self, other: &MonomialMap) -> MonomialMap {
        let shift = self.dimension() as u32;
        let mut perm = self.perm.clone();
        perm.extend(other.perm.iter().map(|&p| p + shift));
        let mut phases = self.phases.clone();
        phases.extend_from_slice(&other.phases);
        MonomialMap { perm, phases }
    }

    /// `self ⊕ dual(self)`, the action on the cotangent doubling.
    pub fn cotangent(&self) -> MonomialMap {
        self.direct_sum(&self.dual())
    }

    /// Least common multiple of the phase denominators.
    pub fn conductor(&self) -> u32 {
        use num_integer::Integer;
        self.phases
            .iter()
            .fold(1u32, |acc, p| acc.lcm(&p.denominator()))
    }

    /// Matrix trace: the phases on coordinates the permutation fixes.
    pub fn trace(&self, field: &CyclotomicField) -> Result<Cyclotomic> {
        field.sum_of_phases(
            self.perm
                .iter()
                .zip(&self.phases)
                .enumerate()
                .filter(|(j, (&p, _))| p as usize == *j)
                .map(|(_, (_, &phase))| phase),
        )
    }
}

impl fmt::Debug for MonomialMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for MonomialMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (j, (p, phase)) in self.perm.iter().zip(&self.phases).enumerate() {
            if j > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{j}->{p}@{phase}")?;
        }
        write!(f, "]")
    }
}
