//! Exact rational polyhedral geometry in low dimension.
//!
//! Everything here works over [`Rational`] (arbitrary precision, always in
//! lowest terms) or over arbitrary-precision integers, so no operation can
//! round. Facet enumeration is a brute-force supporting-hyperplane search over
//! affinely independent point subsets; vertex enumeration tests every basic
//! solution of the inequality system. Both are meant for polytopes with a few
//! dozen vertices.

mod hrep;
mod hull;
pub(crate) mod linalg;

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};

pub use hrep::vertex_enumerate;
pub use hull::{affine_hull, facet_enumerate};

/// Exact rational number in lowest terms with positive denominator.
pub type Rational = BigRational;

/// Parses `"p/q"` or `"p"` into a rational. Rejects zero denominators.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| Error::Parse(format!("malformed rational {s:?}")))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| Error::Parse(format!("malformed rational {s:?}")))?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(num, den))
}

/// Formats as `"p"` for integers and `"p/q"` otherwise.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// A point of rational affine space.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point(pub Vec<Rational>);

impl Point {
    pub fn from_integers<I: IntoIterator<Item = i64>>(coords: I) -> Self {
        Point(coords.into_iter().map(|c| Rational::from_integer(c.into())).collect())
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(format_rational).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// An affine hyperplane `normal · x = offset` in canonical form: the normal is
/// primitive and its first nonzero entry is positive.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Hyperplane {
    pub normal: Vec<BigInt>,
    pub offset: BigInt,
}

impl Hyperplane {
    /// The canonical hyperplane with the given normal direction passing through `point`.
    pub fn through(normal: Vec<BigInt>, point: &[BigInt]) -> Option<Self> {
        if normal.iter().all(Zero::is_zero) {
            return None;
        }
        let mut normal = linalg::make_primitive(normal);
        linalg::normalize_sign(&mut normal);
        let offset = linalg::dot_int(&normal, point);
        Some(Hyperplane { normal, offset })
    }

    /// Signed value `normal · x - offset`.
    pub fn evaluate(&self, x: &[BigInt]) -> BigInt {
        linalg::dot_int(&self.normal, x) - &self.offset
    }
}

/// A polytope given by points, in input order. Points need not all be vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VRep {
    pub ambient_dim: usize,
    pub points: Vec<Point>,
    pub name: Option<String>,
}

impl VRep {
    pub fn new(ambient_dim: usize, points: Vec<Point>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::DegenerateInput("a V-representation needs at least one point".into()));
        }
        let mut seen = BTreeSet::new();
        for p in &points {
            if p.dim() != ambient_dim {
                return Err(Error::DimensionMismatch { expected: ambient_dim, found: p.dim() });
            }
            if !seen.insert(p) {
                return Err(Error::DegenerateInput(format!("duplicate point {p}")));
            }
        }
        Ok(VRep { ambient_dim, points, name: None })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    /// Multiplies every coordinate by `factor`.
    pub fn scaled(&self, factor: &Rational) -> VRep {
        VRep {
            ambient_dim: self.ambient_dim,
            points: self
                .points
                .iter()
                .map(|p| Point(p.0.iter().map(|c| c * factor).collect()))
                .collect(),
            name: self.name.clone(),
        }
    }
}

/// One linear constraint `normal · x (≤ | =) bound` with integer data.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinearConstraint {
    pub normal: Vec<BigInt>,
    pub bound: BigInt,
}

impl LinearConstraint {
    pub fn new<I: IntoIterator<Item = i64>>(normal: I, bound: i64) -> Self {
        LinearConstraint { normal: normal.into_iter().map(BigInt::from).collect(), bound: bound.into() }
    }

    pub fn slack(&self, x: &[Rational]) -> Rational {
        Rational::from_integer(self.bound.clone()) - linalg::dot_rat_int(&self.normal, x)
    }
}

/// A polyhedron `{ x : A x ≤ b, C x = d }`. Boundedness and feasibility are
/// only checked by [`vertex_enumerate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HRep {
    pub ambient_dim: usize,
    pub inequalities: Vec<LinearConstraint>,
    pub equalities: Vec<LinearConstraint>,
}

impl HRep {
    pub fn new(
        ambient_dim: usize,
        inequalities: Vec<LinearConstraint>,
        equalities: Vec<LinearConstraint>,
    ) -> Result<Self> {
        for c in inequalities.iter().chain(&equalities) {
            if c.normal.len() != ambient_dim {
                return Err(Error::DimensionMismatch { expected: ambient_dim, found: c.normal.len() });
            }
        }
        Ok(HRep { ambient_dim, inequalities, equalities })
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        self.inequalities.iter().all(|c| c.slack(x) >= Rational::zero())
            && self.equalities.iter().all(|c| c.slack(x).is_zero())
    }

    /// The image of the polyhedron under `x ↦ (num/den)·x` for positive `num`, `den`.
    pub fn scaled(&self, num: i64, den: i64) -> HRep {
        assert!(num > 0 && den > 0, "scale factor must be positive");
        let scale = |c: &LinearConstraint| LinearConstraint {
            normal: c.normal.iter().map(|a| a * den).collect(),
            bound: &c.bound * num,
        };
        HRep {
            ambient_dim: self.ambient_dim,
            inequalities: self.inequalities.iter().map(scale).collect(),
            equalities: self.equalities.iter().map(scale).collect(),
        }
    }
}

/// Facet–vertex incidences of a polytope: facet `j` is the set of vertex
/// indices lying on it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceMatrix {
    pub n_vertices: usize,
    pub dim: usize,
    pub facets: Vec<Vec<usize>>,
}

impl IncidenceMatrix {
    /// Checks the structural invariants: indices in range, every vertex on at
    /// least `dim` facets, and no facet contained in another.
    pub fn validate(&self) -> Result<()> {
        if self.n_vertices == 0 {
            return Err(Error::InconsistentIncidence("no vertices".into()));
        }
        if self.dim == 0 {
            if self.n_vertices != 1 || self.facets.iter().any(|f| !f.is_empty()) {
                return Err(Error::InconsistentIncidence(
                    "a 0-dimensional polytope has exactly one vertex".into(),
                ));
            }
            return Ok(());
        }
        let sets: Vec<BTreeSet<usize>> = self.facets.iter().map(|f| f.iter().copied().collect()).collect();
        for (j, f) in sets.iter().enumerate() {
            if f.len() != self.facets[j].len() {
                return Err(Error::InconsistentIncidence(format!("facet {j} repeats a vertex")));
            }
            if let Some(&v) = f.iter().find(|&&v| v >= self.n_vertices) {
                return Err(Error::InconsistentIncidence(format!(
                    "facet {j} names vertex {v} but there are only {} vertices",
                    self.n_vertices
                )));
            }
        }
        for v in 0..self.n_vertices {
            let count = sets.iter().filter(|f| f.contains(&v)).count();
            if count < self.dim {
                return Err(Error::InconsistentIncidence(format!(
                    "vertex {v} lies on {count} facets, fewer than the dimension {}",
                    self.dim
                )));
            }
        }
        for (i, a) in sets.iter().enumerate() {
            for (j, b) in sets.iter().enumerate() {
                if i != j && a.is_subset(b) {
                    return Err(Error::InconsistentIncidence(format!("facet {i} is contained in facet {j}")));
                }
            }
        }
        Ok(())
    }
}

/// Affine hull of a point set: `origin + span(basis)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineHull {
    pub dim: usize,
    pub basis: Vec<Vec<Rational>>,
    pub origin: Point,
    /// Coordinates that give an injective projection of the hull.
    pub pivots: Vec<usize>,
}

/// Output of [`facet_enumerate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hull {
    /// Incidences over the hull vertices, indexed `0..vertices.len()`.
    pub incidence: IncidenceMatrix,
    /// Input index of each hull vertex, in input order.
    pub vertices: Vec<usize>,
    /// Input points that are not vertices of the hull.
    pub dropped: Vec<usize>,
    /// Facet-defining inequalities in ambient coordinates, aligned with `incidence.facets`.
    pub facet_inequalities: Vec<LinearConstraint>,
    /// Equalities cutting out the affine hull.
    pub hull_equalities: Vec<LinearConstraint>,
}

impl Hull {
    pub fn to_hrep(&self, ambient_dim: usize) -> HRep {
        HRep {
            ambient_dim,
            inequalities: self.facet_inequalities.clone(),
            equalities: self.hull_equalities.clone(),
        }
    }
}
