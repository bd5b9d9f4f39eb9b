//! Cone vertices, cone bases, and the search for conic sequences.
//!
//! Deleting the interval `[v, E]` of a cone vertex `v` never breaks downward
//! closure, so every subcomplex reached by a sequence of deletions is just "the
//! faces avoiding the deleted vertices". The search therefore keys its states
//! on the set of remaining vertices.

mod classify;
mod search;
mod verify;

use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{FVector, FaceId, FacePoset, SubComplex};

pub use classify::{classify_base, cube_lattice};
pub use search::{enumerate_all_sequences, search_conic, search_conic_with, SearchOptions, MAX_ENUMERATION_FACES};
pub use verify::{verify_certificate, Verification};

/// Combinatorial type of a cone base `C_i`, tagged with its dimension.
///
/// Tags are exclusive with precedence `Simplex > Cube > SimpleOther > General`,
/// so the point and the segment are always simplices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BaseClass {
    Simplex(usize),
    Cube(usize),
    SimpleOther(usize),
    General(usize),
}

impl BaseClass {
    pub fn dim(&self) -> usize {
        match *self {
            BaseClass::Simplex(d) | BaseClass::Cube(d) | BaseClass::SimpleOther(d) | BaseClass::General(d) => d,
        }
    }

    pub fn is_simplex(&self) -> bool {
        matches!(self, BaseClass::Simplex(_))
    }

    pub fn is_simple(&self) -> bool {
        !matches!(self, BaseClass::General(_))
    }

    /// The cube dimension, counting the point and segment as the 0- and 1-cube.
    pub fn cube_dim(&self) -> Option<usize> {
        match *self {
            BaseClass::Simplex(d) if d <= 1 => Some(d),
            BaseClass::Cube(d) => Some(d),
            _ => None,
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            BaseClass::Simplex(_) => "simplex",
            BaseClass::Cube(_) => "cube",
            BaseClass::SimpleOther(_) => "simple",
            BaseClass::General(_) => "general",
        }
    }

    pub fn from_tag(tag: &str, dim: usize) -> Option<Self> {
        Some(match tag {
            "simplex" => BaseClass::Simplex(dim),
            "cube" => BaseClass::Cube(dim),
            "simple" => BaseClass::SimpleOther(dim),
            "general" => BaseClass::General(dim),
            _ => return None,
        })
    }
}

impl fmt::Display for BaseClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            BaseClass::Simplex(0) => write!(f, "pt"),
            BaseClass::Simplex(1) => write!(f, "I"),
            BaseClass::Simplex(d) => write!(f, "Δ^{d}"),
            BaseClass::Cube(d) => write!(f, "I^{d}"),
            BaseClass::SimpleOther(d) => write!(f, "simple({d})"),
            BaseClass::General(d) => write!(f, "general({d})"),
        }
    }
}

/// Which base classes a sequence may use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchConstraint {
    Any,
    #[serde(rename = "simplex")]
    AllSimplex,
    #[serde(rename = "cube")]
    AllCube,
    #[serde(rename = "simple")]
    AllSimple,
}

impl SearchConstraint {
    pub const ALL: [SearchConstraint; 4] =
        [SearchConstraint::Any, SearchConstraint::AllSimplex, SearchConstraint::AllCube, SearchConstraint::AllSimple];

    pub fn accepts(&self, base: &BaseClass) -> bool {
        match self {
            SearchConstraint::Any => true,
            SearchConstraint::AllSimplex => base.is_simplex(),
            SearchConstraint::AllCube => base.cube_dim().is_some(),
            SearchConstraint::AllSimple => base.is_simple(),
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            SearchConstraint::Any => "any",
            SearchConstraint::AllSimplex => "simplex",
            SearchConstraint::AllCube => "cube",
            SearchConstraint::AllSimple => "simple",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        SearchConstraint::ALL.into_iter().find(|c| c.as_str() == s)
    }
}

impl fmt::Display for SearchConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One deletion `P_{i-1} = P_i - [v_i, E_i]` and its base.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConicStep {
    pub vertex: usize,
    pub max_face: FaceId,
    pub base_class: BaseClass,
    pub base_f_vector: FVector,
}

/// A checkable witness that a polytope is conic: the deletions in order,
/// followed by the single vertex that remains.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConicCertificate {
    pub polytope_name: String,
    pub steps: Vec<ConicStep>,
    pub terminal_vertex: usize,
}

impl ConicCertificate {
    pub fn bases(&self) -> impl Iterator<Item = &BaseClass> {
        self.steps.iter().map(|s| &s.base_class)
    }

    /// Base classes sorted, for comparing sequences up to order.
    pub fn base_multiset(&self) -> Vec<BaseClass> {
        let mut b: Vec<BaseClass> = self.bases().copied().collect();
        b.sort();
        b
    }

    pub fn satisfies(&self, constraint: SearchConstraint) -> bool {
        self.bases().all(|b| constraint.accepts(b))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(ConicCertificate),
    NotConic,
    /// The node budget ran out before the search finished.
    Inconclusive,
}

impl SearchOutcome {
    pub fn certificate(&self) -> Option<&ConicCertificate> {
        match self {
            SearchOutcome::Found(c) => Some(c),
            _ => None,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            SearchOutcome::Found(_) => "found",
            SearchOutcome::NotConic => "not_conic",
            SearchOutcome::Inconclusive => "inconclusive",
        }
    }
}

/// All cone vertices of `c` with their unique maximal faces, by vertex id.
pub fn cone_vertices(c: &SubComplex) -> Vec<(usize, FaceId)> {
    c.alive_vertices()
        .into_iter()
        .filter_map(|v| c.cone_face(v).ok().flatten().map(|e| (v, e)))
        .collect()
}

/// The face poset of the vertex figure of `v` in `E`: its faces are the faces
/// `F` of `c` with `v ⊊ F ⊆ E`, one dimension lower, and its vertices are the
/// edges of `E` at `v`.
pub fn vertex_figure_poset(c: &SubComplex, v: usize, e: FaceId) -> Result<FacePoset> {
    if c.cone_face(v)? != Some(e) {
        return Err(Error::NotAConeVertex(v));
    }
    figure_in_parent(c.parent(), v, e)
}

pub(crate) fn figure_in_parent(p: &FacePoset, v: usize, e: FaceId) -> Result<FacePoset> {
    let top = p.face(e);
    if top.dim < 1 {
        return Err(Error::DegenerateInput(format!("vertex {v} has an empty figure in face {e}")));
    }
    let interval: Vec<FaceId> =
        p.faces_containing(v).iter().copied().filter(|&f| p.face(f).is_subface_of(top)).collect();
    let edges: Vec<FaceId> = interval.iter().copied().filter(|&f| p.face(f).dim == 1).collect();
    let faces = interval
        .iter()
        .filter(|&&f| p.face(f).dim >= 1)
        .map(|&f| {
            let face = p.face(f);
            let mut atoms = FixedBitSet::with_capacity(edges.len());
            for (i, &edge) in edges.iter().enumerate() {
                if p.face(edge).is_subface_of(face) {
                    atoms.insert(i);
                }
            }
            (atoms, face.dim - 1)
        })
        .collect();
    FacePoset::from_faces(edges.len(), faces)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::IncidenceMatrix;
    use crate::lattice::build_face_lattice;

    fn square() -> FacePoset {
        build_face_lattice(&IncidenceMatrix {
            n_vertices: 4,
            dim: 2,
            facets: vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]],
        })
        .unwrap()
    }

    #[test]
    fn cone_vertices_of_the_square() {
        let sq = square();
        let full = SubComplex::full(&sq);
        let top = sq.top().unwrap();
        assert_eq!(cone_vertices(&full), (0..4).map(|v| (v, top)).collect::<Vec<_>>());
        let p3 = full.delete_interval(0, top).unwrap();
        let e23 = sq.face_by_vertices(&[1, 2]).unwrap();
        let e34 = sq.face_by_vertices(&[2, 3]).unwrap();
        assert_eq!(cone_vertices(&p3), vec![(1, e23), (3, e34)]);
    }

    #[test]
    fn square_vertex_figure_is_a_segment() {
        let sq = square();
        let full = SubComplex::full(&sq);
        let fig = vertex_figure_poset(&full, 0, sq.top().unwrap()).unwrap();
        assert_eq!(fig.n_vertices(), 2);
        assert_eq!(fig.f_vector(), FVector(vec![2, 1]));
        assert_eq!(classify_base(&fig), BaseClass::Simplex(1));
    }

    #[test]
    fn edge_vertex_figure_is_a_point() {
        let sq = square();
        let mut remaining = FixedBitSet::with_capacity(4);
        remaining.extend([2, 3]);
        let c = SubComplex::from_remaining_vertices(&sq, &remaining);
        let e = sq.face_by_vertices(&[2, 3]).unwrap();
        let fig = vertex_figure_poset(&c, 3, e).unwrap();
        assert_eq!(fig.f_vector(), FVector(vec![1]));
        assert_eq!(classify_base(&fig), BaseClass::Simplex(0));
    }

    #[test]
    fn figure_requires_the_cone_face() {
        let sq = square();
        let full = SubComplex::full(&sq);
        let e12 = sq.face_by_vertices(&[0, 1]).unwrap();
        assert_eq!(vertex_figure_poset(&full, 0, e12).unwrap_err(), Error::NotAConeVertex(0));
    }

    #[test]
    fn constraint_acceptance() {
        use BaseClass::*;
        assert!(SearchConstraint::AllCube.accepts(&Simplex(0)));
        assert!(SearchConstraint::AllCube.accepts(&Simplex(1)));
        assert!(!SearchConstraint::AllCube.accepts(&Simplex(2)));
        assert!(SearchConstraint::AllCube.accepts(&Cube(3)));
        assert!(!SearchConstraint::AllSimplex.accepts(&Cube(2)));
        assert!(SearchConstraint::AllSimple.accepts(&SimpleOther(2)));
        assert!(!SearchConstraint::AllSimple.accepts(&General(3)));
        assert!(SearchConstraint::Any.accepts(&General(3)));
        assert_eq!(SearchConstraint::parse("cube"), Some(SearchConstraint::AllCube));
        assert_eq!(Cube(2).to_string(), "I^2");
        assert_eq!(Simplex(0).to_string(), "pt");
    }
}
