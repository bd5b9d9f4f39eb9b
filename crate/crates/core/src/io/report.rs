use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::{Polytope, FORMAT_VERSION};
use crate::conic::{search_conic_with, ConicCertificate, SearchConstraint, SearchOptions, SearchOutcome};
use crate::error::Result;
use crate::invariants::{
    cohomology_report, delta_conic_necessary, generating_function, h_square_from_certificate, h_vector,
    poincare_polynomial, CohomologyEntry, CohomologyReport, IntPolynomial,
};

/// Search verdict per constraint name (`any`, `simplex`, `cube`, `simple`).
pub type Verdicts = BTreeMap<String, String>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct AnalysisOptions {
    pub budget: Option<u64>,
    pub parallel: bool,
}

/// Everything computed about one polytope, in presentation order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub format_version: u32,
    pub name: String,
    pub dim: usize,
    pub f_vector: Vec<u64>,
    /// Coefficients of `Φ(x)`, ascending.
    pub generating_function: Vec<i64>,
    pub h_vector: Vec<i64>,
    pub delta_necessary: bool,
    pub verdicts: Verdicts,
    /// Bases of the first sequence found, per constraint, in deletion order.
    pub bases: BTreeMap<String, Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h_square: Option<Vec<u64>>,
    /// Coefficients of the Poincaré polynomial in `t`, ascending.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub poincare: Option<Vec<i64>>,
    pub cohomology: CohomologyReport,
    pub warnings: Vec<String>,
}

/// Known misprints of Poincaré polynomials, keyed by f-vector.
const MISPRINTS: &[(&[u64], &str)] = &[(
    &[7, 11, 6, 1],
    "the Poincaré polynomial of this polytope is 1 + 2t^2 + 3t^4 + t^6; a version printed with t^3 in place of t^6 is a misprint",
)];

fn coefficients(p: &IntPolynomial) -> Vec<i64> {
    p.to_i64s().expect("coefficients fit in i64 at this scale")
}

/// Runs the full pipeline: face numbers, h-vector, the four searches, and
/// whatever the certificates found imply.
pub fn analyze(p: &Polytope, options: &AnalysisOptions) -> Result<AnalysisReport> {
    let f = p.lattice.f_vector();
    let mut warnings = Vec::new();
    for i in &p.dropped {
        warnings.push(format!("input point {i} is not a vertex and was dropped"));
    }

    let mut verdicts = Verdicts::new();
    let mut bases = BTreeMap::new();
    let mut certs: BTreeMap<SearchConstraint, ConicCertificate> = BTreeMap::new();
    for constraint in SearchConstraint::ALL {
        let outcome = search_conic_with(
            &p.lattice,
            &SearchOptions { constraint, budget: options.budget, parallel: options.parallel },
        );
        verdicts.insert(constraint.to_string(), outcome.label().to_string());
        match outcome {
            SearchOutcome::Found(cert) => {
                bases.insert(constraint.to_string(), cert.bases().map(ToString::to_string).collect());
                certs.insert(constraint, cert);
            }
            SearchOutcome::Inconclusive => {
                warnings.push(format!("search under '{constraint}' ran out of budget"));
            }
            SearchOutcome::NotConic => {}
        }
    }

    let h_square = certs.get(&SearchConstraint::AllCube).map(h_square_from_certificate).transpose()?.map(|h| h.0);
    let delta = certs.get(&SearchConstraint::AllSimplex);
    let poincare = delta.map(|c| poincare_polynomial(&f, c)).transpose()?.map(|p| coefficients(&p));
    if poincare.is_some() {
        if let Some((_, note)) = MISPRINTS.iter().find(|(fv, _)| *fv == f.0.as_slice()) {
            warnings.push((*note).to_string());
        }
    }
    let witness = delta.or_else(|| certs.get(&SearchConstraint::AllSimple));

    Ok(AnalysisReport {
        format_version: FORMAT_VERSION,
        name: p.name.clone(),
        dim: f.dim().unwrap_or(0),
        generating_function: coefficients(&generating_function(&f)),
        h_vector: h_vector(&f).0,
        delta_necessary: delta_conic_necessary(&f),
        verdicts,
        bases,
        h_square,
        poincare,
        cohomology: cohomology_report(&f, witness),
        warnings,
        f_vector: f.0,
    })
}

fn tuple<T: ToString>(xs: &[T]) -> String {
    format!("({})", xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "))
}

impl AnalysisReport {
    /// Plain-text rendering: f-vector, Φ, h, verdicts, then cohomology.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let phi = IntPolynomial::from_i64s(&self.generating_function);
        let _ = writeln!(s, "polytope: {}", self.name);
        let _ = writeln!(s, "dimension: {}", self.dim);
        let _ = writeln!(s, "f-vector: {}", tuple(&self.f_vector));
        let _ = writeln!(s, "Phi(x) = {phi}");
        let _ = writeln!(s, "h-vector: {}", tuple(&self.h_vector));
        let _ = writeln!(s, "h_k >= 1 for k >= 1: {}", if self.delta_necessary { "yes" } else { "no" });
        let _ = writeln!(s, "conic sequences:");
        for (constraint, verdict) in &self.verdicts {
            match self.bases.get(constraint) {
                Some(b) => {
                    let _ = writeln!(s, "  {constraint:<8} {verdict}  bases: {}", b.join(", "));
                }
                None => {
                    let _ = writeln!(s, "  {constraint:<8} {verdict}");
                }
            }
        }
        if let Some(h) = &self.h_square {
            let _ = writeln!(s, "h-square vector: {}", tuple(h));
        }
        if let Some(p) = &self.poincare {
            let _ = writeln!(s, "Poincare polynomial: {}", IntPolynomial::from_i64s(p).display_in("t"));
        }
        let _ = writeln!(s, "rational cohomology (real dimension {}):", self.cohomology.complex_dim);
        for (deg, e) in self.cohomology.degrees.iter().enumerate() {
            let line = match e {
                CohomologyEntry::Zero { citation } => format!("0   [{}]", citation.description()),
                CohomologyEntry::Betti { value, citation } => format!("{value}   [{}]", citation.description()),
                CohomologyEntry::Undetermined => "undetermined".to_string(),
            };
            let _ = writeln!(s, "  H^{deg}: {line}");
        }
        for w in &self.warnings {
            let _ = writeln!(s, "warning: {w}");
        }
        s
    }
}
