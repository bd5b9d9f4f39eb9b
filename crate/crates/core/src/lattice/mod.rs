//! Face posets of polytopes and the subcomplexes obtained by deleting intervals.
//!
//! A [`FacePoset`] is atomistic: each face is identified with its vertex set
//! and the order is vertex-set containment. Faces are stored sorted by
//! `(dim, sorted vertex list)`, so the empty face always has id 0 and the
//! polytope itself comes last.

mod iso;
mod subcomplex;

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::geometry::IncidenceMatrix;

pub use iso::{canonical_form, poset_isomorphic, poset_isomorphic_with_limit, CanonicalForm, DEFAULT_ISO_LIMIT};
pub use subcomplex::SubComplex;

/// Index of a face inside its [`FacePoset`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FaceId(pub usize);

impl fmt::Display for FaceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub id: FaceId,
    /// `-1` for the empty face.
    pub dim: i32,
    pub vertices: FixedBitSet,
}

impl Face {
    pub fn vertex_list(&self) -> Vec<usize> {
        self.vertices.ones().collect()
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.vertices.contains(v)
    }

    pub fn is_subface_of(&self, other: &Face) -> bool {
        self.vertices.is_subset(&other.vertices)
    }
}

/// Face counts `(f_0, …, f_n)` by dimension, ignoring the empty face.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FVector(pub Vec<u64>);

impl FVector {
    pub fn counts(&self) -> &[u64] {
        &self.0
    }

    /// `n`, or `None` for the empty vector.
    pub fn dim(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    /// `Σ (-1)^k f_k`, which is 1 for every nonempty polytope.
    pub fn euler_characteristic(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(k, &f)| if k % 2 == 0 { f as i64 } else { -(f as i64) })
            .sum()
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// The face lattice of a polytope (or of an abstract polytope such as a vertex figure).
#[derive(Debug, Clone)]
pub struct FacePoset {
    name: Option<String>,
    n_vertices: usize,
    faces: Vec<Face>,
    index: HashMap<FixedBitSet, FaceId>,
    vertex_faces: Vec<FaceId>,
    /// For each vertex, the faces containing it in id order.
    containing: Vec<Vec<FaceId>>,
}

impl FacePoset {
    /// Builds a poset from explicit `(vertex set, dim)` pairs. The empty face
    /// is added if missing; every vertex must appear as a 0-face.
    pub(crate) fn from_faces(n_vertices: usize, faces: Vec<(FixedBitSet, i32)>) -> Result<Self> {
        let mut entries: Vec<(i32, Vec<usize>, FixedBitSet)> = faces
            .into_iter()
            .map(|(mut set, dim)| {
                set.grow(n_vertices);
                (dim, set.ones().collect(), set)
            })
            .collect();
        if !entries.iter().any(|(_, list, _)| list.is_empty()) {
            entries.push((-1, Vec::new(), FixedBitSet::with_capacity(n_vertices)));
        }
        entries.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
        entries.dedup_by(|a, b| a.1 == b.1);

        let mut faces = Vec::with_capacity(entries.len());
        let mut index = HashMap::with_capacity(entries.len());
        let mut vertex_faces = vec![None; n_vertices];
        let mut containing = vec![Vec::new(); n_vertices];
        for (i, (dim, list, set)) in entries.into_iter().enumerate() {
            let id = FaceId(i);
            if dim == 0 {
                if let [v] = list[..] {
                    vertex_faces[v] = Some(id);
                }
            }
            for &v in &list {
                containing[v].push(id);
            }
            index.insert(set.clone(), id);
            faces.push(Face { id, dim, vertices: set });
        }
        let vertex_faces = vertex_faces
            .into_iter()
            .enumerate()
            .map(|(v, f)| f.ok_or_else(|| Error::InconsistentIncidence(format!("vertex {v} is not a face"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(FacePoset { name: None, n_vertices, faces, index, vertex_faces, containing })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    /// Number of elements, including the empty face.
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, id: FaceId) -> &Face {
        &self.faces[id.0]
    }

    pub fn empty_face(&self) -> FaceId {
        FaceId(0)
    }

    /// The unique maximal face, if there is one.
    pub fn top(&self) -> Option<FaceId> {
        let last = self.faces.last()?;
        let unique = self.faces.iter().all(|f| f.is_subface_of(last));
        unique.then_some(last.id)
    }

    pub fn dim(&self) -> i32 {
        self.faces.iter().map(|f| f.dim).max().unwrap_or(-1)
    }

    /// The 0-face of vertex `v`.
    pub fn vertex_face(&self, v: usize) -> FaceId {
        self.vertex_faces[v]
    }

    /// Faces containing vertex `v`, in id order (hence by increasing dimension).
    pub fn faces_containing(&self, v: usize) -> &[FaceId] {
        &self.containing[v]
    }

    pub fn face_by_vertices(&self, vertices: &[usize]) -> Option<FaceId> {
        let mut set = FixedBitSet::with_capacity(self.n_vertices);
        for &v in vertices {
            if v >= self.n_vertices {
                return None;
            }
            set.insert(v);
        }
        self.index.get(&set).copied()
    }

    pub fn leq(&self, a: FaceId, b: FaceId) -> bool {
        self.face(a).is_subface_of(self.face(b))
    }

    pub fn f_vector(&self) -> FVector {
        f_vector_of(self.faces.iter())
    }

    /// Maximal faces strictly below the top, i.e. the facets of a polytope.
    pub fn coatoms(&self) -> Vec<FaceId> {
        let d = self.dim();
        self.faces.iter().filter(|f| f.dim == d - 1).map(|f| f.id).collect()
    }

    /// Checks closure under intersection, that dims are longest-chain ranks,
    /// and that the vertex sets are distinct.
    pub fn check_lattice(&self) -> Result<()> {
        for a in &self.faces {
            for b in &self.faces {
                let mut meet = a.vertices.clone();
                meet.intersect_with(&b.vertices);
                if !self.index.contains_key(&meet) {
                    return Err(Error::InconsistentIncidence(format!(
                        "intersection of {:?} and {:?} is not a face",
                        a.vertex_list(),
                        b.vertex_list()
                    )));
                }
            }
        }
        let ranks = longest_chain_ranks(self.faces.iter().map(|f| &f.vertices));
        for (f, r) in self.faces.iter().zip(ranks) {
            if f.dim != r {
                return Err(Error::InconsistentIncidence(format!(
                    "face {:?} has dim {} but rank {}",
                    f.vertex_list(),
                    f.dim,
                    r
                )));
            }
        }
        Ok(())
    }
}

pub(crate) fn f_vector_of<'a>(faces: impl Iterator<Item = &'a Face>) -> FVector {
    let mut counts: Vec<u64> = Vec::new();
    for f in faces {
        if f.dim < 0 {
            continue;
        }
        let d = f.dim as usize;
        if counts.len() <= d {
            counts.resize(d + 1, 0);
        }
        counts[d] += 1;
    }
    FVector(counts)
}

/// `rank(F) = 1 + max rank(G)` over proper subsets `G ⊊ F` in the family, with rank(∅) = -1.
fn longest_chain_ranks<'a>(sets: impl Iterator<Item = &'a FixedBitSet>) -> Vec<i32> {
    let sets: Vec<&FixedBitSet> = sets.collect();
    let mut order: Vec<usize> = (0..sets.len()).collect();
    order.sort_by_key(|&i| sets[i].count_ones(..));
    let mut rank = vec![-1i32; sets.len()];
    for (pos, &i) in order.iter().enumerate() {
        let below = order[..pos]
            .iter()
            .filter(|&&j| sets[j] != sets[i] && sets[j].is_subset(sets[i]))
            .map(|&j| rank[j])
            .max();
        rank[i] = below.map_or(if sets[i].is_clear() { -1 } else { 0 }, |r| r + 1);
    }
    rank
}

/// Face lattice from facet–vertex incidences, by closing the facet vertex
/// sets under intersection and adding the polytope and the empty face.
pub fn build_face_lattice(inc: &IncidenceMatrix) -> Result<FacePoset> {
    inc.validate()?;
    let n = inc.n_vertices;
    let full = {
        let mut s = FixedBitSet::with_capacity(n);
        s.insert_range(..);
        s
    };
    if inc.dim == 0 {
        return FacePoset::from_faces(n, vec![(full, 0)]);
    }

    let facets: Vec<FixedBitSet> = inc
        .facets
        .iter()
        .map(|f| {
            let mut s = FixedBitSet::with_capacity(n);
            s.extend(f.iter().copied());
            s
        })
        .collect();

    let mut closed: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut frontier: Vec<FixedBitSet> = Vec::new();
    for f in &facets {
        if closed.insert(f.ones().collect()) {
            frontier.push(f.clone());
        }
    }
    while let Some(face) = frontier.pop() {
        for f in &facets {
            let mut meet = face.clone();
            meet.intersect_with(f);
            if closed.insert(meet.ones().collect()) {
                frontier.push(meet);
            }
        }
    }
    closed.insert((0..n).collect());
    closed.insert(Vec::new());

    let sets: Vec<FixedBitSet> = closed
        .iter()
        .map(|list| {
            let mut s = FixedBitSet::with_capacity(n);
            s.extend(list.iter().copied());
            s
        })
        .collect();
    let ranks = longest_chain_ranks(sets.iter());

    let top_rank = ranks[sets.iter().position(|s| *s == full).expect("full set inserted")];
    if top_rank != inc.dim as i32 {
        return Err(Error::InconsistentIncidence(format!(
            "incidence claims dimension {} but the closure has rank {}",
            inc.dim, top_rank
        )));
    }
    for (s, &r) in sets.iter().zip(&ranks) {
        let size = s.count_ones(..);
        if (size == 1) != (r == 0) || (r >= 0 && size < (r as usize) + 1) {
            return Err(Error::InconsistentIncidence(format!(
                "face {:?} has rank {r}, inconsistent with its {size} vertices",
                s.ones().collect::<Vec<_>>()
            )));
        }
    }
    for f in &facets {
        let r = ranks[sets.iter().position(|s| s == f).expect("facet present")];
        if r != inc.dim as i32 - 1 {
            return Err(Error::InconsistentIncidence(format!(
                "facet {:?} has rank {r}, expected {}",
                f.ones().collect::<Vec<_>>(),
                inc.dim - 1
            )));
        }
    }
    FacePoset::from_faces(n, sets.into_iter().zip(ranks).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn square() -> FacePoset {
        // p1..p4 as 0..3, edges e12 e23 e34 e14
        build_face_lattice(&IncidenceMatrix {
            n_vertices: 4,
            dim: 2,
            facets: vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]],
        })
        .unwrap()
    }

    #[test]
    fn square_lattice_has_ten_elements() {
        let sq = square();
        assert_eq!(sq.len(), 10);
        assert_eq!(sq.f_vector(), FVector(vec![4, 4, 1]));
        assert_eq!(sq.face(sq.empty_face()).dim, -1);
        assert_eq!(sq.top(), Some(FaceId(9)));
        sq.check_lattice().unwrap();
    }

    #[test]
    fn simplex_lattice_is_boolean() {
        let inc = IncidenceMatrix {
            n_vertices: 4,
            dim: 3,
            facets: vec![vec![1, 2, 3], vec![0, 2, 3], vec![0, 1, 3], vec![0, 1, 2]],
        };
        let p = build_face_lattice(&inc).unwrap();
        assert_eq!(p.len(), 16);
        assert_eq!(p.f_vector(), FVector(vec![4, 6, 4, 1]));
    }

    #[test]
    fn point_lattice() {
        let p = build_face_lattice(&IncidenceMatrix { n_vertices: 1, dim: 0, facets: vec![] }).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.f_vector(), FVector(vec![1]));
    }

    #[test]
    fn nested_facets_are_rejected() {
        let inc = IncidenceMatrix { n_vertices: 3, dim: 1, facets: vec![vec![0], vec![0, 1], vec![2], vec![1, 2]] };
        assert!(matches!(build_face_lattice(&inc), Err(Error::InconsistentIncidence(_))));
    }

    #[test]
    fn wrong_dimension_is_rejected() {
        // a square's incidences claimed to be 3-dimensional fail the vertex-degree check
        let inc = IncidenceMatrix {
            n_vertices: 4,
            dim: 3,
            facets: vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]],
        };
        assert!(matches!(build_face_lattice(&inc), Err(Error::InconsistentIncidence(_))));
    }

    #[test]
    fn lookups_by_vertex_set() {
        let sq = square();
        let e = sq.face_by_vertices(&[0, 1]).unwrap();
        assert_eq!(sq.face(e).dim, 1);
        assert!(sq.face_by_vertices(&[0, 2]).is_none());
        assert!(sq.leq(sq.vertex_face(0), e));
        assert_eq!(sq.faces_containing(0).len(), 4);
    }
}
