//! JSON documents for polytopes, certificates and analysis reports.
//!
//! Every document carries `"format_version": 1`. Rationals travel as strings
//! (`"3/7"`, `"-2"`); plain JSON integers are accepted on input. Faces are
//! always named by their sorted vertex-index lists, never by internal ids.

mod report;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize, Serializer};

use crate::conic::{BaseClass, ConicCertificate, ConicStep, SearchConstraint};
use crate::error::{Error, Result};
use crate::geometry::{
    affine_hull, facet_enumerate, format_rational, parse_rational, vertex_enumerate, HRep, IncidenceMatrix,
    LinearConstraint, Point, Rational, VRep,
};
use crate::lattice::{build_face_lattice, FVector, FacePoset};

pub use report::{analyze, AnalysisOptions, AnalysisReport, Verdicts};

pub const FORMAT_VERSION: u32 = 1;

fn format_version() -> u32 {
    FORMAT_VERSION
}

/// A number as written in a document: a string such as `"3/7"`, or a JSON integer.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NumberString(pub String);

impl NumberString {
    pub fn parse(&self) -> Result<Rational> {
        parse_rational(&self.0)
    }
}

impl From<&Rational> for NumberString {
    fn from(r: &Rational) -> Self {
        NumberString(format_rational(r))
    }
}

impl From<&BigInt> for NumberString {
    fn from(n: &BigInt) -> Self {
        NumberString(n.to_string())
    }
}

impl Serialize for NumberString {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for NumberString {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = NumberString;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a rational string like \"p/q\" or an integer")
            }
            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<NumberString, E> {
                Ok(NumberString(v.to_string()))
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<NumberString, E> {
                Ok(NumberString(v.to_string()))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<NumberString, E> {
                Ok(NumberString(v.to_string()))
            }
        }
        d.deserialize_any(V)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VRepDocument {
    pub ambient_dim: usize,
    pub vertices: Vec<Vec<NumberString>>,
}

/// `normal · x ≤ bound` (or `=` among equalities).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConstraintDocument {
    pub normal: Vec<NumberString>,
    pub bound: NumberString,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HRepDocument {
    pub ambient_dim: usize,
    pub inequalities: Vec<ConstraintDocument>,
    #[serde(default)]
    pub equalities: Vec<ConstraintDocument>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IncidenceDocument {
    pub n_vertices: usize,
    pub dim: usize,
    pub facets: Vec<Vec<usize>>,
}

/// A polytope by exactly one of its vertices, its inequalities, or its
/// facet–vertex incidences.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolytopeDocument {
    #[serde(default = "format_version")]
    pub format_version: u32,
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vrep: Option<VRepDocument>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hrep: Option<HRepDocument>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub incidence: Option<IncidenceDocument>,
}

/// A polytope document after validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Representation {
    V(VRep),
    H(HRep),
    Incidence(IncidenceMatrix),
}

fn schema_error(path: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Schema { path: path.into(), message: message.into() }
}

fn from_json<T: serde::de::DeserializeOwned>(bytes: &[u8]) -> Result<T> {
    let mut de = serde_json::Deserializer::from_slice(bytes);
    let value = serde_path_to_error::deserialize(&mut de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        if inner.is_syntax() || inner.is_eof() {
            Error::Parse(inner.to_string())
        } else {
            schema_error(path, inner.to_string())
        }
    })?;
    de.end().map_err(|e| Error::Parse(e.to_string()))?;
    Ok(value)
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents always serialize");
    s.push('\n');
    s
}

fn check_version(v: u32) -> Result<()> {
    if v == FORMAT_VERSION {
        Ok(())
    } else {
        Err(schema_error("format_version", format!("unsupported format version {v}, expected {FORMAT_VERSION}")))
    }
}

/// Scales a row of rationals to a row of integers with the same ratios.
fn integer_row(row: &[Rational]) -> Vec<BigInt> {
    let l = row.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    row.iter().map(|r| (r * Rational::from_integer(l.clone())).to_integer()).collect()
}

fn constraint_from_doc(c: &ConstraintDocument, dim: usize, path: String) -> Result<LinearConstraint> {
    if c.normal.len() != dim {
        return Err(schema_error(path, format!("normal has {} entries, expected {dim}", c.normal.len())));
    }
    let mut row = c.normal.iter().map(NumberString::parse).collect::<Result<Vec<_>>>()?;
    row.push(c.bound.parse()?);
    let mut ints = integer_row(&row);
    let bound = ints.pop().expect("bound present");
    Ok(LinearConstraint { normal: ints, bound })
}

fn constraint_to_doc(c: &LinearConstraint) -> ConstraintDocument {
    ConstraintDocument { normal: c.normal.iter().map(NumberString::from).collect(), bound: (&c.bound).into() }
}

impl PolytopeDocument {
    pub fn from_vrep(v: &VRep) -> Self {
        PolytopeDocument {
            format_version: FORMAT_VERSION,
            name: v.name.clone().unwrap_or_default(),
            vrep: Some(VRepDocument {
                ambient_dim: v.ambient_dim,
                vertices: v.points.iter().map(|p| p.0.iter().map(NumberString::from).collect()).collect(),
            }),
            hrep: None,
            incidence: None,
        }
    }

    pub fn from_hrep(name: impl Into<String>, h: &HRep) -> Self {
        PolytopeDocument {
            format_version: FORMAT_VERSION,
            name: name.into(),
            vrep: None,
            hrep: Some(HRepDocument {
                ambient_dim: h.ambient_dim,
                inequalities: h.inequalities.iter().map(constraint_to_doc).collect(),
                equalities: h.equalities.iter().map(constraint_to_doc).collect(),
            }),
            incidence: None,
        }
    }

    pub fn from_incidence(name: impl Into<String>, inc: &IncidenceMatrix) -> Self {
        PolytopeDocument {
            format_version: FORMAT_VERSION,
            name: name.into(),
            vrep: None,
            hrep: None,
            incidence: Some(IncidenceDocument { n_vertices: inc.n_vertices, dim: inc.dim, facets: inc.facets.clone() }),
        }
    }

    /// Checks the exactly-one rule and parses all numbers.
    pub fn representation(&self) -> Result<Representation> {
        check_version(self.format_version)?;
        match (&self.vrep, &self.hrep, &self.incidence) {
            (Some(v), None, None) => {
                let mut points = Vec::with_capacity(v.vertices.len());
                for (i, row) in v.vertices.iter().enumerate() {
                    if row.len() != v.ambient_dim {
                        return Err(schema_error(
                            format!("vrep.vertices[{i}]"),
                            format!("point has {} coordinates, expected {}", row.len(), v.ambient_dim),
                        ));
                    }
                    points.push(Point(row.iter().map(NumberString::parse).collect::<Result<_>>()?));
                }
                Ok(Representation::V(VRep::new(v.ambient_dim, points)?.with_name(self.name.clone())))
            }
            (None, Some(h), None) => {
                let ineq = h
                    .inequalities
                    .iter()
                    .enumerate()
                    .map(|(i, c)| constraint_from_doc(c, h.ambient_dim, format!("hrep.inequalities[{i}]")))
                    .collect::<Result<_>>()?;
                let eq = h
                    .equalities
                    .iter()
                    .enumerate()
                    .map(|(i, c)| constraint_from_doc(c, h.ambient_dim, format!("hrep.equalities[{i}]")))
                    .collect::<Result<_>>()?;
                Ok(Representation::H(HRep::new(h.ambient_dim, ineq, eq)?))
            }
            (None, None, Some(inc)) => Ok(Representation::Incidence(IncidenceMatrix {
                n_vertices: inc.n_vertices,
                dim: inc.dim,
                facets: inc.facets.clone(),
            })),
            _ => Err(schema_error("$", "exactly one of \"vrep\", \"hrep\", \"incidence\" must be present")),
        }
    }
}

pub fn parse_polytope(bytes: &[u8]) -> Result<PolytopeDocument> {
    let doc: PolytopeDocument = from_json(bytes)?;
    doc.representation()?;
    Ok(doc)
}

pub fn emit_polytope(doc: &PolytopeDocument) -> String {
    to_json(doc)
}

/// A polytope ready for combinatorial work.
#[derive(Debug, Clone)]
pub struct Polytope {
    pub name: String,
    pub lattice: FacePoset,
    /// Coordinates of lattice vertex `i`, when the input was geometric.
    pub vertices: Option<Vec<Point>>,
    /// Input indices of points that are not vertices (V-input only).
    pub dropped: Vec<usize>,
}

fn point_lattice() -> Result<FacePoset> {
    build_face_lattice(&IncidenceMatrix { n_vertices: 1, dim: 0, facets: vec![] })
}

/// Face lattice of the convex hull; lattice vertex `i` is the `i`-th point
/// that is a vertex, in input order.
pub fn polytope_from_vrep(v: &VRep) -> Result<Polytope> {
    let name = v.name.clone().unwrap_or_default();
    if affine_hull(&v.points)?.dim == 0 {
        return Ok(Polytope {
            lattice: point_lattice()?.with_name(name.clone()),
            name,
            vertices: Some(vec![v.points[0].clone()]),
            dropped: (1..v.points.len()).collect(),
        });
    }
    let hull = facet_enumerate(v)?;
    let lattice = build_face_lattice(&hull.incidence)?.with_name(name.clone());
    Ok(Polytope {
        name,
        lattice,
        vertices: Some(hull.vertices.iter().map(|&i| v.points[i].clone()).collect()),
        dropped: hull.dropped,
    })
}

pub fn polytope_from_document(doc: &PolytopeDocument) -> Result<Polytope> {
    match doc.representation()? {
        Representation::V(v) => polytope_from_vrep(&v),
        Representation::H(h) => polytope_from_vrep(&vertex_enumerate(&h)?.with_name(doc.name.clone())),
        Representation::Incidence(inc) => Ok(Polytope {
            name: doc.name.clone(),
            lattice: build_face_lattice(&inc)?.with_name(doc.name.clone()),
            vertices: None,
            dropped: Vec::new(),
        }),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BaseClassDocument {
    pub tag: String,
    pub dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StepDocument {
    pub vertex: usize,
    pub max_face_vertices: Vec<usize>,
    pub base_class: BaseClassDocument,
    pub base_f_vector: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateDocument {
    #[serde(default = "format_version")]
    pub format_version: u32,
    pub polytope_name: String,
    pub constraint: SearchConstraint,
    pub steps: Vec<StepDocument>,
    pub terminal_vertex: usize,
}

impl CertificateDocument {
    pub fn from_certificate(cert: &ConicCertificate, lattice: &FacePoset, constraint: SearchConstraint) -> Self {
        CertificateDocument {
            format_version: FORMAT_VERSION,
            polytope_name: cert.polytope_name.clone(),
            constraint,
            steps: cert
                .steps
                .iter()
                .map(|s| StepDocument {
                    vertex: s.vertex,
                    max_face_vertices: lattice.face(s.max_face).vertex_list(),
                    base_class: BaseClassDocument { tag: s.base_class.tag().into(), dim: s.base_class.dim() },
                    base_f_vector: s.base_f_vector.0.clone(),
                })
                .collect(),
            terminal_vertex: cert.terminal_vertex,
        }
    }

    /// Resolves vertex sets to faces of `lattice`.
    pub fn to_certificate(&self, lattice: &FacePoset) -> Result<ConicCertificate> {
        check_version(self.format_version)?;
        let steps = self
            .steps
            .iter()
            .enumerate()
            .map(|(i, s)| {
                let mut verts = s.max_face_vertices.clone();
                verts.sort_unstable();
                let max_face = lattice.face_by_vertices(&verts).ok_or_else(|| {
                    Error::InconsistentWitness(format!("step {}: {verts:?} is not a face of the polytope", i + 1))
                })?;
                let base_class = BaseClass::from_tag(&s.base_class.tag, s.base_class.dim).ok_or_else(|| {
                    schema_error(format!("steps[{i}].base_class.tag"), format!("unknown tag {:?}", s.base_class.tag))
                })?;
                Ok(ConicStep { vertex: s.vertex, max_face, base_class, base_f_vector: FVector(s.base_f_vector.clone()) })
            })
            .collect::<Result<_>>()?;
        Ok(ConicCertificate {
            polytope_name: self.polytope_name.clone(),
            steps,
            terminal_vertex: self.terminal_vertex,
        })
    }
}

pub fn parse_certificate(bytes: &[u8]) -> Result<CertificateDocument> {
    let doc: CertificateDocument = from_json(bytes)?;
    check_version(doc.format_version)?;
    Ok(doc)
}

pub fn emit_certificate(doc: &CertificateDocument) -> String {
    to_json(doc)
}

pub fn parse_report(bytes: &[u8]) -> Result<AnalysisReport> {
    let r: AnalysisReport = from_json(bytes)?;
    check_version(r.format_version)?;
    Ok(r)
}

pub fn emit_report(r: &AnalysisReport) -> String {
    to_json(r)
}

/// Faces of a lattice by dimension, for the `faces` listing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacesDocument {
    pub format_version: u32,
    pub name: String,
    pub f_vector: Vec<u64>,
    /// `faces[k]` lists the `k`-faces as sorted vertex lists.
    pub faces: Vec<Vec<Vec<usize>>>,
}

impl FacesDocument {
    pub fn new(name: &str, lattice: &FacePoset) -> Self {
        let f = lattice.f_vector();
        let mut faces = vec![Vec::new(); f.0.len()];
        for face in lattice.faces().iter().filter(|f| f.dim >= 0) {
            faces[face.dim as usize].push(face.vertex_list());
        }
        FacesDocument { format_version: FORMAT_VERSION, name: name.into(), f_vector: f.0, faces }
    }

    pub fn to_json(&self) -> String {
        to_json(self)
    }
}
