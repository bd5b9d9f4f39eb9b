use std::collections::HashMap;

use super::BaseClass;
use crate::geometry::IncidenceMatrix;
use crate::lattice::{build_face_lattice, canonical_form, CanonicalForm, FVector, FacePoset, DEFAULT_ISO_LIMIT};

/// Face lattice of the `d`-cube `{0,1}^d`, vertices indexed by bitmask.
pub fn cube_lattice(d: usize) -> FacePoset {
    if d == 0 {
        return build_face_lattice(&IncidenceMatrix { n_vertices: 1, dim: 0, facets: vec![] })
            .expect("point lattice");
    }
    let n = 1usize << d;
    let facets = (0..d)
        .flat_map(|i| [0, 1].map(|bit| (0..n).filter(|v| (v >> i) & 1 == bit).collect()))
        .collect();
    build_face_lattice(&IncidenceMatrix { n_vertices: n, dim: d, facets }).expect("cube incidences are valid")
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn cube_f_vector(d: usize) -> FVector {
    let d = d as u64;
    FVector((0..=d).map(|k| binomial(d, k) << (d - k)).collect())
}

/// Classifies bases, caching the canonical forms of reference cubes.
#[derive(Default)]
pub(crate) struct Classifier {
    cube_forms: HashMap<usize, CanonicalForm>,
}

impl Classifier {
    pub(crate) fn classify(&mut self, b: &FacePoset) -> BaseClass {
        let d = b.dim().max(0) as usize;
        if b.n_vertices() == d + 1 {
            return BaseClass::Simplex(d);
        }
        let coatoms: Vec<_> = b.coatoms();
        let simple = (0..b.n_vertices())
            .all(|v| coatoms.iter().filter(|&&f| b.face(f).contains_vertex(v)).count() == d);
        if !simple {
            return BaseClass::General(d);
        }
        if b.f_vector() == cube_f_vector(d) && self.is_cube(b, d) {
            return BaseClass::Cube(d);
        }
        BaseClass::SimpleOther(d)
    }

    fn is_cube(&mut self, b: &FacePoset, d: usize) -> bool {
        let limit = DEFAULT_ISO_LIMIT.max(b.len());
        let reference = self.cube_forms.entry(d).or_insert_with(|| {
            let cube = cube_lattice(d);
            canonical_form(&cube, limit.max(cube.len())).expect("limit covers the cube")
        });
        canonical_form(b, limit).is_ok_and(|form| form == *reference)
    }
}

/// Simplex, cube, other simple polytope, or general, from the face poset alone.
///
/// A `d`-polytope with `d + 1` vertices is a simplex; simplicity means every
/// vertex lies on exactly `d` facets; cubes are recognised by isomorphism with
/// a reference cube lattice after an f-vector check.
pub fn classify_base(b: &FacePoset) -> BaseClass {
    Classifier::default().classify(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn polygon(n: usize) -> FacePoset {
        let facets = (0..n).map(|i| vec![i, (i + 1) % n]).collect();
        build_face_lattice(&IncidenceMatrix { n_vertices: n, dim: 2, facets }).unwrap()
    }

    #[test]
    fn cube_f_vectors() {
        assert_eq!(cube_f_vector(3), FVector(vec![8, 12, 6, 1]));
        assert_eq!(cube_lattice(3).f_vector(), cube_f_vector(3));
        assert_eq!(cube_lattice(4).f_vector(), FVector(vec![16, 32, 24, 8, 1]));
    }

    #[test]
    fn polygons() {
        assert_eq!(classify_base(&polygon(3)), BaseClass::Simplex(2));
        assert_eq!(classify_base(&polygon(4)), BaseClass::Cube(2));
        assert_eq!(classify_base(&polygon(5)), BaseClass::SimpleOther(2));
    }

    #[test]
    fn point_and_segment_are_simplices() {
        assert_eq!(classify_base(&cube_lattice(0)), BaseClass::Simplex(0));
        assert_eq!(classify_base(&cube_lattice(1)), BaseClass::Simplex(1));
        assert_eq!(classify_base(&cube_lattice(3)), BaseClass::Cube(3));
    }

    #[test]
    fn octahedron_is_general() {
        // vertices ±e1 = 0,1  ±e2 = 2,3  ±e3 = 4,5
        let facets = [0, 1]
            .iter()
            .flat_map(|&a| [2, 3].iter().flat_map(move |&b| [4, 5].map(move |c| vec![a, b, c])))
            .collect();
        let oct = build_face_lattice(&IncidenceMatrix { n_vertices: 6, dim: 3, facets }).unwrap();
        assert_eq!(classify_base(&oct), BaseClass::General(3));
    }
}
