use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use fixedbitset::FixedBitSet;

use super::{f_vector_of, FVector, FaceId, FacePoset};
use crate::error::{Error, Result};

/// A subcomplex of a fixed face lattice, stored as the set of alive face ids.
///
/// Subcomplexes produced by deleting intervals `[v, E]` where `v` is a cone
/// vertex stay downward closed, and faces keep the dimension they have in the
/// parent.
#[derive(Debug, Clone)]
pub struct SubComplex<'a> {
    parent: &'a FacePoset,
    alive: FixedBitSet,
}

impl PartialEq for SubComplex<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.parent, other.parent) && self.alive == other.alive
    }
}

impl Eq for SubComplex<'_> {}

impl Hash for SubComplex<'_> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.alive.hash(state);
    }
}

impl<'a> SubComplex<'a> {
    /// Every face of the parent.
    pub fn full(parent: &'a FacePoset) -> Self {
        let mut alive = FixedBitSet::with_capacity(parent.len());
        alive.insert_range(..);
        SubComplex { parent, alive }
    }

    /// The subcomplex of faces avoiding every vertex outside `remaining`.
    pub fn from_remaining_vertices(parent: &'a FacePoset, remaining: &FixedBitSet) -> Self {
        let mut alive = FixedBitSet::with_capacity(parent.len());
        for f in parent.faces() {
            if f.vertices.is_subset(remaining) {
                alive.insert(f.id.0);
            }
        }
        SubComplex { parent, alive }
    }

    pub fn parent(&self) -> &'a FacePoset {
        self.parent
    }

    pub fn is_alive(&self, f: FaceId) -> bool {
        self.alive.contains(f.0)
    }

    pub fn alive_faces(&self) -> impl Iterator<Item = FaceId> + '_ {
        self.alive.ones().map(FaceId)
    }

    pub fn alive_vertices(&self) -> Vec<usize> {
        (0..self.parent.n_vertices()).filter(|&v| self.is_alive(self.parent.vertex_face(v))).collect()
    }

    pub fn vertex_alive(&self, v: usize) -> bool {
        v < self.parent.n_vertices() && self.is_alive(self.parent.vertex_face(v))
    }

    /// Largest dimension of an alive face (`-1` if only the empty face is left).
    pub fn dim(&self) -> i32 {
        self.alive_faces().map(|f| self.parent.face(f).dim).max().unwrap_or(-1)
    }

    /// Alive faces whose vertex set contains `v`.
    pub fn upper_set(&self, v: usize) -> Result<Vec<FaceId>> {
        if !self.vertex_alive(v) {
            return Err(Error::VertexNotPresent(v));
        }
        Ok(self
            .parent
            .faces_containing(v)
            .iter()
            .copied()
            .filter(|&f| self.is_alive(f))
            .collect())
    }

    /// The unique maximal element of `upper_set(v)`, if it exists.
    pub fn cone_face(&self, v: usize) -> Result<Option<FaceId>> {
        let upper = self.upper_set(v)?;
        // Ids are sorted by dimension, so the last element has maximal dimension.
        let top = *upper.last().expect("the vertex itself is alive");
        let top_face = self.parent.face(top);
        let unique = upper.iter().all(|&f| self.parent.face(f).is_subface_of(top_face));
        Ok(unique.then_some(top))
    }

    /// `[v, E] = { F alive : v ⊆ F ⊆ E }`.
    pub fn interval(&self, v: usize, e: FaceId) -> Result<Vec<FaceId>> {
        if !self.vertex_alive(v) {
            return Err(Error::VertexNotPresent(v));
        }
        if !self.is_alive(e) {
            return Err(Error::NotComparable(format!("face {e} is not alive")));
        }
        let top = self.parent.face(e);
        if !top.contains_vertex(v) {
            return Err(Error::NotComparable(format!("vertex {v} is not contained in face {e}")));
        }
        Ok(self
            .parent
            .faces_containing(v)
            .iter()
            .copied()
            .filter(|&f| self.is_alive(f) && self.parent.face(f).is_subface_of(top))
            .collect())
    }

    /// Removes `[v, E]`, which must be the whole upper set of the cone vertex `v`.
    pub fn delete_interval(&self, v: usize, e: FaceId) -> Result<SubComplex<'a>> {
        match self.cone_face(v)? {
            Some(top) if top == e => {}
            _ => return Err(Error::NotAConeVertex(v)),
        }
        let mut alive = self.alive.clone();
        for f in self.interval(v, e)? {
            alive.set(f.0, false);
        }
        Ok(SubComplex { parent: self.parent, alive })
    }

    pub fn f_vector(&self) -> FVector {
        f_vector_of(self.alive_faces().map(|f| self.parent.face(f)))
    }

    /// Sorted alive vertex sets, the canonical description of the subcomplex.
    pub fn vertex_sets(&self) -> Vec<Vec<usize>> {
        let mut sets: Vec<Vec<usize>> = self.alive_faces().map(|f| self.parent.face(f).vertex_list()).collect();
        sets.sort();
        sets
    }

    /// Hash of [`SubComplex::vertex_sets`].
    pub fn fingerprint(&self) -> u64 {
        let mut h = DefaultHasher::new();
        self.vertex_sets().hash(&mut h);
        h.finish()
    }
}
