use std::collections::BTreeSet;

use itertools::Itertools;
use num_traits::{Signed, Zero};

use super::linalg::{dot_rat_int, null_space, rank, solve_unique};
use super::{HRep, LinearConstraint, Point, Rational, VRep};
use crate::error::{Error, Result};

fn row(c: &LinearConstraint) -> Vec<Rational> {
    c.normal.iter().map(|a| Rational::from_integer(a.clone())).collect()
}

fn rhs(c: &LinearConstraint) -> Rational {
    Rational::from_integer(c.bound.clone())
}

/// All basic feasible solutions of `extra ∪ equalities ∪ S` for
/// `S ⊆ inequalities`, deduplicated and sorted.
fn basic_solutions(h: &HRep, extra: &[(Vec<Rational>, Rational)]) -> BTreeSet<Vec<Rational>> {
    let m = h.ambient_dim;
    let mut fixed_rows: Vec<Vec<Rational>> = extra.iter().map(|(r, _)| r.clone()).collect();
    let mut fixed_rhs: Vec<Rational> = extra.iter().map(|(_, b)| b.clone()).collect();
    fixed_rows.extend(h.equalities.iter().map(row));
    fixed_rhs.extend(h.equalities.iter().map(rhs));
    let fixed_rank = rank(&fixed_rows, m);
    let k = m - fixed_rank.min(m);

    let mut found = BTreeSet::new();
    for subset in (0..h.inequalities.len()).combinations(k) {
        let mut rows = fixed_rows.clone();
        let mut b = fixed_rhs.clone();
        for &i in &subset {
            rows.push(row(&h.inequalities[i]));
            b.push(rhs(&h.inequalities[i]));
        }
        let Some(x) = solve_unique(&rows, &b, m) else {
            continue;
        };
        if extra.iter().all(|(r, c)| &dot(r, &x) == c) && h.contains(&x) {
            found.insert(x);
        }
    }
    found
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).fold(Rational::zero(), |acc, t| acc + t)
}

/// Whether the recession cone `{ y : A y ≤ 0, C y = 0 }` of a pointed
/// polyhedron contains a nonzero direction, i.e. has an extreme ray.
fn has_recession_ray(h: &HRep) -> bool {
    let m = h.ambient_dim;
    let eq_rows: Vec<Vec<Rational>> = h.equalities.iter().map(row).collect();
    let eq_rank = rank(&eq_rows, m);
    if eq_rank >= m {
        return false;
    }
    let k = m - 1 - eq_rank;
    for subset in (0..h.inequalities.len()).combinations(k) {
        let mut rows = eq_rows.clone();
        rows.extend(subset.iter().map(|&i| row(&h.inequalities[i])));
        let ns = null_space(&rows, m);
        if ns.len() != 1 {
            continue;
        }
        let r = &ns[0];
        for sign in [1i64, -1] {
            let s = Rational::from_integer(sign.into());
            let dir: Vec<Rational> = r.iter().map(|x| x * &s).collect();
            if h.inequalities.iter().all(|c| !dot_rat_int(&c.normal, &dir).is_positive()) {
                return true;
            }
        }
    }
    false
}

/// Enumerates the vertices of a bounded, nonempty polyhedron given by
/// inequalities and equalities. Vertices come out in lexicographic order.
pub fn vertex_enumerate(h: &HRep) -> Result<VRep> {
    let m = h.ambient_dim;
    let all_rows: Vec<Vec<Rational>> = h.inequalities.iter().chain(&h.equalities).map(row).collect();
    let lineality = null_space(&all_rows, m);

    if !lineality.is_empty() {
        // Not pointed: nonempty means unbounded. Probe feasibility on the orthogonal complement.
        let extra: Vec<(Vec<Rational>, Rational)> =
            lineality.into_iter().map(|l| (l, Rational::zero())).collect();
        return if basic_solutions(h, &extra).is_empty() { Err(Error::Empty) } else { Err(Error::Unbounded) };
    }

    let vertices = basic_solutions(h, &[]);
    if vertices.is_empty() {
        return Err(Error::Empty);
    }
    if has_recession_ray(h) {
        return Err(Error::Unbounded);
    }
    VRep::new(m, vertices.into_iter().map(Point).collect())
}
