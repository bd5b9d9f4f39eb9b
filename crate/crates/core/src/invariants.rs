//! Polynomial invariants of face numbers and the cohomology facts they imply
//! for the associated toric variety.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::conic::{ConicCertificate, SearchConstraint};
use crate::error::{Error, Result};
use crate::lattice::FVector;

/// Dense integer polynomial; `coeffs[k]` is the coefficient of degree `k`.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial::default()
    }

    pub fn constant(c: i64) -> Self {
        Self::from_i64s(&[c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::from_i64s(&[0, 1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::constant(1), |acc, _| &acc * self)
    }

    /// `self(q(x))`, by Horner's rule.
    pub fn compose(&self, q: &IntPolynomial) -> Self {
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| &(&acc * q) + &Self::new(vec![c.clone()]))
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Coefficients as `i64`, if they all fit.
    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(ToPrimitive::to_i64).collect()
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl IntPolynomial {
    /// Ascending powers of `var`, e.g. `4 + 4x + x^2`.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            let a = c.abs();
            let term = match (k, a.is_one()) {
                (0, _) => a.to_string(),
                (1, true) => var.to_string(),
                (1, false) => format!("{a}{var}"),
                (_, true) => format!("{var}^{k}"),
                (_, false) => format!("{a}{var}^{k}"),
            };
            out.push_str(&term);
        }
        out
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("x"))
    }
}

/// `(h_0, …, h_n)`, possibly with negative entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HVector(pub Vec<i64>);

/// `(h^□_0, …, h^□_n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HSquareVector(pub Vec<u64>);

/// `Φ(x) = Σ f_j x^j`.
pub fn generating_function(f: &FVector) -> IntPolynomial {
    IntPolynomial::new(f.counts().iter().map(|&c| BigInt::from(c)).collect())
}

fn base_term(base_f: &FVector) -> IntPolynomial {
    // 1 + xΦ_C(x)
    &IntPolynomial::constant(1) + &(&IntPolynomial::x() * &generating_function(base_f))
}

/// `1 + Σ_steps (1 + xΦ_{C_i}(x))`, computed from the recorded base face numbers.
pub fn certificate_generating_function(cert: &ConicCertificate) -> IntPolynomial {
    cert.steps.iter().fold(IntPolynomial::constant(1), |acc, s| &acc + &base_term(&s.base_f_vector))
}

/// Whether the certificate's bases reproduce the face numbers `f`.
pub fn check_prop24(cert: &ConicCertificate, f: &FVector) -> bool {
    certificate_generating_function(cert) == generating_function(f)
}

fn h_polynomial(f: &FVector) -> IntPolynomial {
    generating_function(f).compose(&IntPolynomial::from_i64s(&[-1, 1]))
}

/// The h-vector: `Σ f_k (x−1)^k = Σ h_k x^k`, padded to length `dim + 1`.
pub fn h_vector(f: &FVector) -> HVector {
    let h = h_polynomial(f);
    let len = f.counts().len();
    HVector(
        (0..len)
            .map(|k| h.coeff(k).to_i64().expect("h-vector entries fit in i64 for desk-scale polytopes"))
            .collect(),
    )
}

/// The f-vector with the given h-vector, inverting [`h_vector`].
pub fn f_from_h(h: &HVector) -> Vec<i64> {
    let p = IntPolynomial::new(h.0.iter().map(|&c| BigInt::from(c)).collect())
        .compose(&IntPolynomial::from_i64s(&[1, 1]));
    (0..h.0.len()).map(|k| p.coeff(k).to_i64().expect("fits")).collect()
}

/// A necessary condition for Δ-conicity: `h_k ≥ 1` for `k = 1..n`.
pub fn delta_conic_necessary(f: &FVector) -> bool {
    h_vector(f).0.iter().skip(1).all(|&h| h >= 1)
}

/// `h_k = #{steps with base a (k−1)-simplex}`, `h_0 = 1`.
pub fn h_from_certificate(cert: &ConicCertificate) -> Result<HVector> {
    if !cert.satisfies(SearchConstraint::AllSimplex) {
        return Err(Error::NotDeltaConic);
    }
    let n = cert.bases().map(|b| b.dim() + 1).max().unwrap_or(0);
    let mut h = vec![0i64; n + 1];
    h[0] = 1;
    for b in cert.bases() {
        h[b.dim() + 1] += 1;
    }
    Ok(HVector(h))
}

/// `h^□_k = #{steps with base the (k−1)-cube}`, `h^□_0 = 1`, checked against
/// `Φ = 1 + Σ h^□_k (1 + x(x+2)^{k−1})` using the recorded base face numbers.
pub fn h_square_from_certificate(cert: &ConicCertificate) -> Result<HSquareVector> {
    let dims: Vec<usize> = cert.bases().map(|b| b.cube_dim().ok_or(Error::NotCubeConic)).collect::<Result<_>>()?;
    let n = dims.iter().map(|d| d + 1).max().unwrap_or(0);
    let mut h = vec![0u64; n + 1];
    h[0] = 1;
    for d in &dims {
        h[d + 1] += 1;
    }
    let h = HSquareVector(h);
    if cube_sum(&h) != certificate_generating_function(cert) {
        return Err(Error::InconsistentWitness("cube counts do not reproduce the recorded base face numbers".into()));
    }
    Ok(h)
}

/// `1 + Σ_{k≥1} h^□_k (1 + x(x+2)^{k−1})`.
pub fn cube_sum(h: &HSquareVector) -> IntPolynomial {
    let x = IntPolynomial::x();
    let x2 = IntPolynomial::from_i64s(&[2, 1]);
    let one = IntPolynomial::constant(1);
    h.0.iter().enumerate().skip(1).fold(one.clone(), |acc, (k, &c)| {
        let term = &one + &(&x * &x2.pow(k as u32 - 1));
        &acc + &(&IntPolynomial::new(vec![BigInt::from(c)]) * &term)
    })
}

/// `Σ f_k (t²−1)^k`, valid as a Poincaré polynomial for a Δ-conic polytope.
/// The witness must be a Δ-conic certificate whose base counts agree with the
/// even coefficients.
pub fn poincare_polynomial(f: &FVector, witness: &ConicCertificate) -> Result<IntPolynomial> {
    let h_cert = h_from_certificate(witness)?;
    let p = generating_function(f).compose(&IntPolynomial::from_i64s(&[-1, 0, 1]));
    if let Some((k, c)) = p.coeffs().iter().enumerate().find(|(k, c)| k % 2 == 1 && !c.is_zero()) {
        return Err(Error::InconsistentWitness(format!("coefficient of t^{k} is {c}")));
    }
    if let Some((k, c)) = p.coeffs().iter().enumerate().find(|(_, c)| c.is_negative()) {
        return Err(Error::InconsistentWitness(format!("coefficient of t^{k} is {c}")));
    }
    for (j, &h) in h_cert.0.iter().enumerate() {
        if p.coeff(2 * j) != BigInt::from(h) {
            return Err(Error::InconsistentWitness(format!(
                "coefficient of t^{} is {}, but the witness has {h} bases of dimension {}",
                2 * j,
                p.coeff(2 * j),
                j as i64 - 1
            )));
        }
    }
    Ok(p)
}

/// The fact that justifies a cohomology entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Citation {
    /// A projective toric variety is connected.
    Connected,
    /// A projective toric variety is simply connected.
    SimplyConnected,
    /// Odd cohomology above the middle dimension vanishes when a conic
    /// sequence with simple bases exists.
    SimpleConicVanishing,
    /// All odd cohomology vanishes when a Δ-conic sequence exists.
    DeltaConicOddVanishing,
    /// Even Betti numbers equal the h-vector when a Δ-conic sequence exists.
    DeltaConicBetti,
}

impl Citation {
    pub fn description(&self) -> &'static str {
        match self {
            Citation::Connected => "projective toric varieties are connected",
            Citation::SimplyConnected => "projective toric varieties are simply connected",
            Citation::SimpleConicVanishing => "simple-conic vanishing of odd cohomology above the middle degree",
            Citation::DeltaConicOddVanishing => "Δ-conic vanishing of all odd cohomology",
            Citation::DeltaConicBetti => "Δ-conic Betti numbers equal the h-vector",
        }
    }
}

/// Rational cohomology in one degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum CohomologyEntry {
    Zero { citation: Citation },
    Betti { value: u64, citation: Citation },
    Undetermined,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyReport {
    /// Real dimension `2n` of the variety.
    pub complex_dim: usize,
    /// Entries for degrees `0..=complex_dim`.
    pub degrees: Vec<CohomologyEntry>,
}

impl CohomologyReport {
    pub fn entry(&self, degree: usize) -> Option<&CohomologyEntry> {
        self.degrees.get(degree)
    }

    /// Betti numbers in even degrees, if all are determined.
    pub fn even_betti(&self) -> Option<Vec<u64>> {
        self.degrees
            .iter()
            .step_by(2)
            .map(|e| match e {
                CohomologyEntry::Betti { value, .. } => Some(*value),
                _ => None,
            })
            .collect()
    }

    pub fn undetermined_degrees(&self) -> Vec<usize> {
        (0..self.degrees.len()).filter(|&i| self.degrees[i] == CohomologyEntry::Undetermined).collect()
    }
}

/// What the face numbers and an optional certificate determine about the
/// rational cohomology of the toric variety of an `n`-polytope.
pub fn cohomology_report(f: &FVector, cert: Option<&ConicCertificate>) -> CohomologyReport {
    let n = f.dim().unwrap_or(0);
    let top = 2 * n;
    let mut degrees = vec![CohomologyEntry::Undetermined; top + 1];
    let simple = cert.is_some_and(|c| c.satisfies(SearchConstraint::AllSimple));
    let delta = cert.and_then(|c| h_from_certificate(c).ok());
    if simple {
        for d in (1..=top).step_by(2).filter(|&d| d > n) {
            degrees[d] = CohomologyEntry::Zero { citation: Citation::SimpleConicVanishing };
        }
    }
    if let Some(h) = delta {
        for d in (1..=top).step_by(2) {
            degrees[d] = CohomologyEntry::Zero { citation: Citation::DeltaConicOddVanishing };
        }
        for j in 0..=n {
            let value = h.0.get(j).copied().unwrap_or(0).max(0) as u64;
            degrees[2 * j] = CohomologyEntry::Betti { value, citation: Citation::DeltaConicBetti };
        }
    }
    degrees[0] = CohomologyEntry::Betti { value: 1, citation: Citation::Connected };
    if top >= 1 {
        degrees[1] = CohomologyEntry::Zero { citation: Citation::SimplyConnected };
    }
    CohomologyReport { complex_dim: top, degrees }
}
