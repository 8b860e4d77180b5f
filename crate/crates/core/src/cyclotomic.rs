//! Exact arithmetic in cyclotomic fields `Q(ζ_N)`.
//!
//! An element at conductor `N` is a polynomial in `ζ_N` of degree below
//! `φ(N)`, reduced modulo the cyclotomic polynomial `Φ_N`. Because `Φ_N` is
//! the minimal polynomial of `ζ_N`, this form is canonical: equality and the
//! rationality test are coefficient scans.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::phase::Phase;

/// lcm(1..=10).
pub const DEFAULT_CONDUCTOR_CAP: u32 = 2520;

/// Integer polynomial, coefficients in ascending degree.
pub type IntPoly = Vec<i64>;

fn phi_cache() -> &'static Mutex<HashMap<u32, Arc<IntPoly>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<IntPoly>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn divisors(n: u32) -> Vec<u32> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n.is_multiple_of(i) {
            small.push(i);
            if i != n / i {
                large.push(n / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Exact division of integer polynomials by a monic divisor.
fn div_exact(dividend: &[i64], divisor: &[i64]) -> Result<IntPoly> {
    let dd = divisor.len() - 1;
    debug_assert_eq!(divisor[dd], 1);
    let mut rem: Vec<i128> = dividend.iter().map(|&c| c as i128).collect();
    let qlen = dividend.len() - dd;
    let mut quot = vec![0i64; qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dd];
        if c == 0 {
            continue;
        }
        quot[i] =
            i64::try_from(c).map_err(|_| Error::resource("cyclotomic coefficient overflow"))?;
        for (k, &d) in divisor.iter().enumerate() {
            rem[i + k] -= c * d as i128;
        }
    }
    if rem.iter().any(|&c| c != 0) {
        return Err(Error::consistency("cyclotomic division left a remainder"));
    }
    Ok(quot)
}

fn phi_uncapped(n: u32) -> Result<Arc<IntPoly>> {
    if let Some(p) = phi_cache().lock().unwrap().get(&n) {
        return Ok(p.clone());
    }
    let poly = if n == 1 {
        vec![-1, 1]
    } else {
        let mut p = vec![0i64; n as usize + 1];
        p[0] = -1;
        p[n as usize] = 1;
        for d in divisors(n) {
            if d != n {
                p = div_exact(&p, &phi_uncapped(d)?)?;
            }
        }
        p
    };
    let poly = Arc::new(poly);
    phi_cache().lock().unwrap().insert(n, poly.clone());
    Ok(poly)
}

/// Euler's totient.
pub fn euler_phi(n: u32) -> u32 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// An exact element of `Q(ζ_N)`.
#[derive(Clone)]
pub struct Cyclotomic {
    conductor: u32,
    coeffs: Vec<BigRational>,
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Self::from_rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(BigRational::one())
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(q: BigRational) -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: vec![q],
        }
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Coefficients of `1, ζ, …, ζ^{φ(N)-1}`.
    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// The rational value, if the element lies in `Q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn neg(&self) -> Self {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Builds `Σ poly[i] ζ_N^i` for a polynomial of any degree, reduced to
    /// canonical form.
    fn from_polynomial_uncapped(conductor: u32, poly: &[BigRational]) -> Result<Self> {
        let n = conductor as usize;
        let mut folded = vec![BigRational::zero(); n];
        for (i, c) in poly.iter().enumerate() {
            if !c.is_zero() {
                folded[i % n] += c;
            }
        }
        let phi = phi_uncapped(conductor)?;
        let deg = phi.len() - 1;
        for i in (deg..n).rev() {
            if folded[i].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut folded[i]);
            for (k, &pk) in phi[..deg].iter().enumerate() {
                if pk != 0 {
                    folded[i - deg + k] -= &c * BigInt::from(pk);
                }
            }
        }
        folded.truncate(deg);
        Ok(Cyclotomic {
            conductor,
            coeffs: folded,
        })
    }

    fn embed_uncapped(&self, conductor: u32) -> Result<Self> {
        if conductor == self.conductor {
            return Ok(self.clone());
        }
        debug_assert_eq!(conductor % self.conductor, 0);
        let stride = (conductor / self.conductor) as usize;
        let mut poly = vec![BigRational::zero(); self.coeffs.len() * stride];
        for (i, c) in self.coeffs.iter().enumerate() {
            poly[i * stride] = c.clone();
        }
        Self::from_polynomial_uncapped(conductor, &poly)
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let l = self.conductor.lcm(&other.conductor);
        match (self.embed_uncapped(l), other.embed_uncapped(l)) {
            (Ok(a), Ok(b)) => a.coeffs == b.coeffs,
            _ => false,
        }
    }
}

impl Eq for Cyclotomic {}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, "{}", if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            first = false;
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}*")?;
                    }
                    write!(f, "z{}", self.conductor)?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Serialize for Cyclotomic {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let coeffs: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        let mut s = serializer.serialize_struct("Cyclotomic", 2)?;
        s.serialize_field("conductor", &self.conductor)?;
        s.serialize_field("coefficients", &coeffs)?;
        s.end()
    }
}

/// Arithmetic context carrying the conductor cap.
///
/// Every operation that may raise the conductor checks it against the cap and
/// reports a resource error instead of allocating huge coefficient vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CyclotomicField {
    cap: u32,
}

impl Default for CyclotomicField {
    fn default() -> Self {
        CyclotomicField {
            cap: DEFAULT_CONDUCTOR_CAP,
        }
    }
}

impl CyclotomicField {
    pub fn with_cap(cap: u32) -> Self {
        CyclotomicField { cap: cap.max(1) }
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn check_conductor(&self, n: u32) -> Result<()> {
        if n == 0 {
            return Err(Error::input("conductor must be positive"));
        }
        if n > self.cap {
            return Err(Error::resource(format!(
                "conductor {n} exceeds cap {}",
                self.cap
            )));
        }
        Ok(())
    }

    /// `Φ_N`, obtained by dividing `x^N - 1` by `Φ_d` for each proper divisor `d`.
    pub fn cyclotomic_polynomial(&self, n: u32) -> Result<IntPoly> {
        self.check_conductor(n)?;
        Ok(phi_uncapped(n)?.as_ref().clone())
    }

    /// `ζ_q^p` for the phase `p/q`.
    pub fn from_phase(&self, phase: Phase) -> Result<Cyclotomic> {
        let q = phase.denominator();
        self.check_conductor(q)?;
        let mut poly = vec![BigRational::zero(); phase.numerator() as usize + 1];
        poly[phase.numerator() as usize] = BigRational::one();
        Cyclotomic::from_polynomial_uncapped(q, &poly)
    }

    /// Reduces an arbitrary polynomial in `ζ_N` to canonical form.
    pub fn from_polynomial(&self, conductor: u32, poly: &[BigRational]) -> Result<Cyclotomic> {
        self.check_conductor(conductor)?;
        Cyclotomic::from_polynomial_uncapped(conductor, poly)
    }

    /// Re-expresses `a` at a multiple of its conductor.
    pub fn embed(&self, a: &Cyclotomic, conductor: u32) -> Result<Cyclotomic> {
        self.check_conductor(conductor)?;
        if !conductor.is_multiple_of(a.conductor) {
            return Err(Error::input(format!(
                "cannot embed conductor {} into {conductor}",
                a.conductor
            )));
        }
        a.embed_uncapped(conductor)
    }

    fn common(&self, a: &Cyclotomic, b: &Cyclotomic) -> Result<(Cyclotomic, Cyclotomic)> {
        let l = a.conductor.lcm(&b.conductor);
        Ok((self.embed(a, l)?, self.embed(b, l)?))
    }

    pub fn add(&self, a: &Cyclotomic, b: &Cyclotomic) -> Result<Cyclotomic> {
        let (mut a, b) = self.common(a, b)?;
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x += y;
        }
        Ok(a)
    }

    pub fn mul(&self, a: &Cyclotomic, b: &Cyclotomic) -> Result<Cyclotomic> {
        let (a, b) = self.common(a, b)?;
        let mut prod = vec![BigRational::zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        Cyclotomic::from_polynomial_uncapped(a.conductor, &prod)
    }

    pub fn equals(&self, a: &Cyclotomic, b: &Cyclotomic) -> Result<bool> {
        let (a, b) = self.common(a, b)?;
        Ok(a.coeffs == b.coeffs)
    }

    /// Sum of many roots of unity, accumulated at their common conductor and
    /// reduced once.
    pub fn sum_of_phases<I: IntoIterator<Item = Phase>>(&self, phases: I) -> Result<Cyclotomic> {
        let phases: Vec<Phase> = phases.into_iter().collect();
        let conductor = phases.iter().fold(1u32, |acc, p| acc.lcm(&p.denominator()));
        self.check_conductor(conductor)?;
        let mut counts = vec![0i64; conductor as usize];
        for p in &phases {
            let k = p.numerator() as u64 * (conductor / p.denominator()) as u64;
            counts[k as usize] += 1;
        }
        let poly: Vec<BigRational> = counts
            .into_iter()
            .map(|c| BigRational::from_integer(BigInt::from(c)))
            .collect();
        Cyclotomic::from_polynomial_uncapped(conductor, &poly)
    }
}
