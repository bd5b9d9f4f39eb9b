//! Canonical labeling of face posets by individualization and refinement.
//!
//! A face lattice is atomistic, so an order isomorphism is the same thing as a
//! bijection of vertices carrying the family of face vertex sets onto the other
//! family. Vertices are coloured by an iteratively refined, label-independent
//! signature; whenever refinement stalls, each vertex of the first non-trivial
//! colour class is individualized in turn. Every discrete colouring yields a
//! relabelled face family and the lexicographically smallest one is the
//! canonical form.

use std::collections::BTreeMap;

use super::FacePoset;
use crate::error::{Error, Result};

/// Default bound on the number of poset elements accepted by [`poset_isomorphic`].
pub const DEFAULT_ISO_LIMIT: usize = 256;

/// Sorted list of relabelled vertex sets of all nonempty faces.
pub type CanonicalForm = Vec<Vec<u32>>;

struct Labeler {
    n: usize,
    /// Nonempty faces as sorted vertex lists, with their dimension.
    faces: Vec<(i32, Vec<usize>)>,
    /// Face indices (into `faces`) containing each vertex.
    incident: Vec<Vec<usize>>,
    best: Option<CanonicalForm>,
}

impl Labeler {
    fn new(p: &FacePoset) -> Self {
        let faces: Vec<(i32, Vec<usize>)> =
            p.faces().iter().filter(|f| f.dim >= 0).map(|f| (f.dim, f.vertex_list())).collect();
        let mut incident = vec![Vec::new(); p.n_vertices()];
        for (i, (_, verts)) in faces.iter().enumerate() {
            for &v in verts {
                incident[v].push(i);
            }
        }
        Labeler { n: p.n_vertices(), faces, incident, best: None }
    }

    /// Replaces each colour by its rank among the distinct values.
    fn compress<K: Ord + Clone>(keys: &[K]) -> (Vec<u32>, usize) {
        let mut distinct: Vec<K> = keys.to_vec();
        distinct.sort();
        distinct.dedup();
        let ranks = keys.iter().map(|k| distinct.binary_search(k).expect("present") as u32).collect();
        (ranks, distinct.len())
    }

    fn refine(&self, colors: &mut Vec<u32>) {
        let mut classes = Self::compress(colors).1;
        loop {
            let face_keys: Vec<(i32, Vec<u32>)> = self
                .faces
                .iter()
                .map(|(d, verts)| {
                    let mut cs: Vec<u32> = verts.iter().map(|&v| colors[v]).collect();
                    cs.sort_unstable();
                    (*d, cs)
                })
                .collect();
            let (face_colors, _) = Self::compress(&face_keys);
            let vertex_keys: Vec<(u32, Vec<u32>)> = (0..self.n)
                .map(|v| {
                    let mut fs: Vec<u32> = self.incident[v].iter().map(|&f| face_colors[f]).collect();
                    fs.sort_unstable();
                    (colors[v], fs)
                })
                .collect();
            let (next, count) = Self::compress(&vertex_keys);
            *colors = next;
            if count == classes {
                return;
            }
            classes = count;
        }
    }

    fn leaf(&self, colors: &[u32]) -> CanonicalForm {
        let mut form: CanonicalForm = self
            .faces
            .iter()
            .map(|(_, verts)| {
                let mut relabelled: Vec<u32> = verts.iter().map(|&v| colors[v]).collect();
                relabelled.sort_unstable();
                relabelled
            })
            .collect();
        form.sort();
        form
    }

    fn search(&mut self, mut colors: Vec<u32>) {
        self.refine(&mut colors);
        let mut classes: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
        for (v, &c) in colors.iter().enumerate() {
            classes.entry(c).or_default().push(v);
        }
        let target = classes
            .iter()
            .filter(|(_, members)| members.len() > 1)
            .min_by_key(|(c, members)| (members.len(), **c))
            .map(|(_, members)| members.clone());
        let Some(cell) = target else {
            let form = self.leaf(&colors);
            if self.best.as_ref().is_none_or(|b| form < *b) {
                self.best = Some(form);
            }
            return;
        };
        for &v in &cell {
            let split: Vec<u32> =
                colors.iter().enumerate().map(|(u, &c)| 2 * c + u32::from(u != v)).collect();
            self.search(split);
        }
    }
}

fn is_boolean(p: &FacePoset) -> bool {
    p.n_vertices() < usize::BITS as usize && p.len() == 1usize << p.n_vertices()
}

/// Canonical form of a face poset; equal forms mean isomorphic posets.
pub fn canonical_form(p: &FacePoset, limit: usize) -> Result<CanonicalForm> {
    if p.len() > limit {
        return Err(Error::SizeLimitExceeded { size: p.len(), limit });
    }
    if is_boolean(p) {
        // Every subset is a face: the labeling is irrelevant.
        let n = p.n_vertices() as u32;
        let mut form: CanonicalForm = (1u64..(1 << n))
            .map(|mask| (0..n).filter(|&i| mask & (1 << i) != 0).collect())
            .collect();
        form.sort();
        return Ok(form);
    }
    let mut labeler = Labeler::new(p);
    labeler.search(vec![0; p.n_vertices()]);
    Ok(labeler.best.unwrap_or_default())
}

/// Whether two face posets are order-isomorphic, with the default size bound.
pub fn poset_isomorphic(a: &FacePoset, b: &FacePoset) -> Result<bool> {
    poset_isomorphic_with_limit(a, b, DEFAULT_ISO_LIMIT)
}

pub fn poset_isomorphic_with_limit(a: &FacePoset, b: &FacePoset, limit: usize) -> Result<bool> {
    for p in [a, b] {
        if p.len() > limit {
            return Err(Error::SizeLimitExceeded { size: p.len(), limit });
        }
    }
    if a.len() != b.len() || a.n_vertices() != b.n_vertices() || a.f_vector() != b.f_vector() {
        return Ok(false);
    }
    Ok(canonical_form(a, limit)? == canonical_form(b, limit)?)
}
