use std::collections::BTreeMap;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::linalg::{self, null_space, rref};
use super::{AffineHull, Hull, Hyperplane, IncidenceMatrix, LinearConstraint, Point, Rational, VRep};
use crate::error::{Error, Result};

/// Dimension, a basis of directions, and an origin for the affine hull of `points`.
pub fn affine_hull(points: &[Point]) -> Result<AffineHull> {
    let origin = points
        .first()
        .ok_or_else(|| Error::DegenerateInput("affine hull of an empty point set".into()))?
        .clone();
    let n = origin.dim();
    let diffs: Vec<Vec<Rational>> = points[1..]
        .iter()
        .map(|p| p.0.iter().zip(&origin.0).map(|(a, b)| a - b).collect())
        .collect();
    let (basis, pivots) = rref(diffs, n);
    Ok(AffineHull { dim: basis.len(), basis, origin, pivots })
}

struct Support {
    /// Sign of `n·y - c` at the input points off the plane.
    sign: i8,
    on: Vec<usize>,
}

/// Enumerates the facets of `conv(v.points)` by testing every hyperplane
/// through an affinely independent `d`-subset of the points for the supporting
/// property, after projecting onto the affine hull.
///
/// Points that are not vertices of the hull are reported in [`Hull::dropped`]
/// and are absent from every facet.
pub fn facet_enumerate(v: &VRep) -> Result<Hull> {
    let hull = affine_hull(&v.points)?;
    let d = hull.dim;
    if d == 0 {
        return Err(Error::DegenerateInput("all points coincide".into()));
    }

    // Injective projection onto the pivot coordinates, scaled to integers.
    let scale = v
        .points
        .iter()
        .flat_map(|p| hull.pivots.iter().map(move |&c| p.0[c].denom().clone()))
        .fold(BigInt::one(), |acc, den| acc.lcm(&den));
    let projected: Vec<Vec<BigInt>> = v
        .points
        .iter()
        .map(|p| hull.pivots.iter().map(|&c| (&p.0[c] * &scale).to_integer()).collect())
        .collect();

    let mut supports: BTreeMap<Hyperplane, Support> = BTreeMap::new();
    for subset in (0..projected.len()).combinations(d) {
        let base = &projected[subset[0]];
        let rows: Vec<Vec<Rational>> = subset[1..]
            .iter()
            .map(|&i| {
                projected[i]
                    .iter()
                    .zip(base)
                    .map(|(a, b)| Rational::from_integer(a - b))
                    .collect()
            })
            .collect();
        let ns = null_space(&rows, d);
        if ns.len() != 1 {
            continue;
        }
        let Some(plane) = Hyperplane::through(linalg::primitive_integer(&ns[0]), base) else {
            continue;
        };
        if supports.contains_key(&plane) {
            continue;
        }
        let mut sign = 0i8;
        let mut on = Vec::new();
        let mut supporting = true;
        for (i, y) in projected.iter().enumerate() {
            let s = plane.evaluate(y);
            if s.is_zero() {
                on.push(i);
                continue;
            }
            let si = if s.is_positive() { 1 } else { -1 };
            if sign == 0 {
                sign = si;
            } else if sign != si {
                supporting = false;
                break;
            }
        }
        // sign == 0 would mean every point is on the plane, impossible for an affinely spanning set.
        if supporting && sign != 0 {
            supports.insert(plane, Support { sign, on });
        }
    }

    // A point is a vertex iff the facets through it meet only in it.
    let n = projected.len();
    let mut is_vertex = vec![false; n];
    for (p, flag) in is_vertex.iter_mut().enumerate() {
        let mut common: Option<Vec<usize>> = None;
        for s in supports.values().filter(|s| s.on.binary_search(&p).is_ok()) {
            common = Some(match common {
                None => s.on.clone(),
                Some(c) => c.into_iter().filter(|i| s.on.binary_search(i).is_ok()).collect(),
            });
        }
        *flag = matches!(common.as_deref(), Some([only]) if *only == p);
    }
    let vertices: Vec<usize> = (0..n).filter(|&i| is_vertex[i]).collect();
    let dropped: Vec<usize> = (0..n).filter(|&i| !is_vertex[i]).collect();
    let new_index: BTreeMap<usize, usize> = vertices.iter().enumerate().map(|(k, &i)| (i, k)).collect();

    let mut facets: Vec<(Vec<usize>, LinearConstraint)> = supports
        .iter()
        .map(|(plane, s)| {
            let verts: Vec<usize> = s.on.iter().filter_map(|i| new_index.get(i).copied()).collect();
            (verts, lift_inequality(plane, s.sign, &hull.pivots, &scale, v.ambient_dim))
        })
        .collect();
    facets.sort();

    let (facet_sets, facet_inequalities): (Vec<_>, Vec<_>) = facets.into_iter().unzip();
    Ok(Hull {
        incidence: IncidenceMatrix { n_vertices: vertices.len(), dim: d, facets: facet_sets },
        vertices,
        dropped,
        facet_inequalities,
        hull_equalities: hull_equalities(&hull, v.ambient_dim),
    })
}

/// Maps `sign·(n·y - c) ≥ 0` on projected coordinates `y = scale·x[pivots]`
/// to an integer inequality `a·x ≤ b` on ambient coordinates.
fn lift_inequality(
    plane: &Hyperplane,
    sign: i8,
    pivots: &[usize],
    scale: &BigInt,
    ambient_dim: usize,
) -> LinearConstraint {
    let s = BigInt::from(-sign);
    let mut normal = vec![BigInt::zero(); ambient_dim];
    for (k, &c) in pivots.iter().enumerate() {
        normal[c] = &plane.normal[k] * scale * &s;
    }
    let mut all = normal;
    all.push(&plane.offset * &s);
    let mut all = linalg::make_primitive(all);
    let bound = all.pop().expect("nonempty");
    LinearConstraint { normal: all, bound }
}

fn hull_equalities(hull: &AffineHull, ambient_dim: usize) -> Vec<LinearConstraint> {
    null_space(&hull.basis, ambient_dim)
        .iter()
        .map(|c| {
            let rhs: Rational = c
                .iter()
                .zip(&hull.origin.0)
                .map(|(a, b)| a * b)
                .fold(Rational::zero(), |acc, t| acc + t);
            let mut all = c.clone();
            all.push(rhs);
            let mut ints = linalg::primitive_integer(&all);
            let bound = ints.pop().expect("nonempty");
            LinearConstraint { normal: ints, bound }
        })
        .collect()
}
