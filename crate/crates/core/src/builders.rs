//! Constructors for the standard polytope families.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::geometry::{HRep, LinearConstraint, Point, Rational, VRep};

/// Largest dimension accepted by [`simplex`], [`cube`] and [`cross_polytope`].
pub const MAX_FAMILY_DIM: usize = 6;
/// Largest permutation size accepted by [`bruhat_interval_polytope`].
pub const MAX_BRUHAT_N: usize = 5;

fn check_dim(d: usize) -> Result<()> {
    if (1..=MAX_FAMILY_DIM).contains(&d) {
        Ok(())
    } else {
        Err(Error::DimensionOutOfRange { dim: d, min: 1, max: MAX_FAMILY_DIM })
    }
}

fn int(c: i64) -> Rational {
    Rational::from_integer(c.into())
}

fn unit(d: usize, i: usize, value: i64) -> Point {
    Point((0..d).map(|j| if j == i { int(value) } else { Rational::zero() }).collect())
}

/// `conv{0, e_1, …, e_d}`.
pub fn simplex(d: usize) -> Result<VRep> {
    check_dim(d)?;
    let points = std::iter::once(Point((0..d).map(|_| Rational::zero()).collect()))
        .chain((0..d).map(|i| unit(d, i, 1)))
        .collect();
    Ok(VRep::new(d, points)?.with_name(format!("simplex-{d}")))
}

/// `{0,1}^d`, in binary counting order with the first coordinate fastest.
pub fn cube(d: usize) -> Result<VRep> {
    check_dim(d)?;
    let points = (0..1usize << d).map(|m| Point((0..d).map(|i| int(((m >> i) & 1) as i64)).collect())).collect();
    Ok(VRep::new(d, points)?.with_name(format!("cube-{d}")))
}

/// `conv{±e_1, …, ±e_d}`.
pub fn cross_polytope(d: usize) -> Result<VRep> {
    check_dim(d)?;
    let points = (0..d).flat_map(|i| [unit(d, i, 1), unit(d, i, -1)]).collect();
    Ok(VRep::new(d, points)?.with_name(format!("cross-polytope-{d}")))
}

/// A convex `n`-gon with rational vertices on the unit circle.
pub fn polygon(n: usize) -> Result<VRep> {
    if n < 3 {
        return Err(Error::DegenerateInput(format!("a polygon needs at least 3 vertices, got {n}")));
    }
    // (1−t², 2t)/(1+t²) with t evenly spaced in (−2, 2)
    let points = (0..n)
        .map(|k| {
            let t = Rational::new((2 * (2 * k as i64 + 1 - n as i64)).into(), (n as i64).into());
            let denom = Rational::one() + &t * &t;
            Point(vec![(Rational::one() - &t * &t) / &denom, (int(2) * &t) / &denom])
        })
        .collect();
    Ok(VRep::new(2, points)?.with_name(format!("polygon-{n}")))
}

fn barycenter(base: &VRep) -> Vec<Rational> {
    let n = int(base.points.len() as i64);
    (0..base.ambient_dim)
        .map(|i| base.points.iter().map(|p| &p.0[i]).fold(Rational::zero(), |acc, c| acc + c) / &n)
        .collect()
}

fn lift(p: &[Rational], height: i64) -> Point {
    Point(p.iter().cloned().chain([int(height)]).collect())
}

fn base_name(base: &VRep) -> &str {
    base.name.as_deref().unwrap_or("base")
}

/// The base in the hyperplane `x_{m+1} = 0` plus an apex above its barycenter
/// at height 1.
pub fn pyramid(base: &VRep) -> Result<VRep> {
    let mut points: Vec<Point> = base.points.iter().map(|p| lift(&p.0, 0)).collect();
    points.push(lift(&barycenter(base), 1));
    Ok(VRep::new(base.ambient_dim + 1, points)?.with_name(format!("pyramid({})", base_name(base))))
}

/// The base in the hyperplane `x_{m+1} = 0` plus apexes at heights ±1 above
/// and below its barycenter.
pub fn bipyramid(base: &VRep) -> Result<VRep> {
    if base.points.len() < 2 {
        return Err(Error::DegenerateInput("the base of a bipyramid must have positive dimension".into()));
    }
    let c = barycenter(base);
    let mut points: Vec<Point> = base.points.iter().map(|p| lift(&p.0, 0)).collect();
    points.push(lift(&c, 1));
    points.push(lift(&c, -1));
    Ok(VRep::new(base.ambient_dim + 1, points)?.with_name(format!("bipyramid({})", base_name(base))))
}

/// Cartesian product, with the points of `b` varying fastest.
pub fn product(a: &VRep, b: &VRep) -> Result<VRep> {
    let points = a
        .points
        .iter()
        .cartesian_product(&b.points)
        .map(|(p, q)| Point(p.0.iter().chain(&q.0).cloned().collect()))
        .collect();
    let name = format!("{}x{}", base_name(a), base_name(b));
    Ok(VRep::new(a.ambient_dim + b.ambient_dim, points)?.with_name(name))
}

/// `I × base`.
pub fn prism(base: &VRep) -> Result<VRep> {
    let p = product(&cube(1)?, base)?;
    Ok(p.with_name(format!("prism({})", base_name(base))))
}

/// A permutation of `1..=n` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    one_line: Vec<usize>,
}

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &x in &one_line {
            if x == 0 || x > n || std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidPermutation(format!("{one_line:?} is not a permutation of 1..={n}")));
            }
        }
        Ok(Permutation { one_line })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { one_line: (1..=n).collect() }
    }

    /// The permutation `n, n−1, …, 1`.
    pub fn longest(n: usize) -> Self {
        Permutation { one_line: (1..=n).rev().collect() }
    }

    pub fn one_line(&self) -> &[usize] {
        &self.one_line
    }

    pub fn len(&self) -> usize {
        self.one_line.len()
    }

    pub fn is_empty(&self) -> bool {
        self.one_line.is_empty()
    }

    /// All permutations of `1..=n` in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        (1..=n).permutations(n).map(|one_line| Permutation { one_line })
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts `"1324"` (digits, for `n ≤ 9`) or `"1,3,2,4"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let entries: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse().map_err(|_| Error::InvalidPermutation(format!("bad entry {t:?}"))))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::InvalidPermutation(format!("bad entry {c:?}")))
                })
                .collect::<Result<_>>()?
        };
        Permutation::new(entries)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.one_line.iter().all(|&x| x < 10) {
            self.one_line.iter().try_for_each(|x| write!(f, "{x}"))
        } else {
            write!(f, "{}", self.one_line.iter().join(","))
        }
    }
}

/// Bruhat order by the tableau criterion: for every `k`, the sorted first `k`
/// entries of `u` are entrywise at most those of `w`.
pub fn bruhat_leq(u: &Permutation, w: &Permutation) -> Result<bool> {
    if u.len() != w.len() {
        return Err(Error::SizeMismatch(u.len(), w.len()));
    }
    let mut a = Vec::with_capacity(u.len());
    let mut b = Vec::with_capacity(w.len());
    for k in 0..u.len() {
        a.push(u.one_line[k]);
        b.push(w.one_line[k]);
        a.sort_unstable();
        b.sort_unstable();
        if a.iter().zip(&b).any(|(x, y)| x > y) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `conv{(σ(1), …, σ(n)) : u ≤ σ ≤ w}`.
pub fn bruhat_interval_polytope(u: &Permutation, w: &Permutation, n: usize) -> Result<VRep> {
    if !(1..=MAX_BRUHAT_N).contains(&n) {
        return Err(Error::DimensionOutOfRange { dim: n, min: 1, max: MAX_BRUHAT_N });
    }
    for p in [u, w] {
        if p.len() != n {
            return Err(Error::SizeMismatch(p.len(), n));
        }
    }
    if !bruhat_leq(u, w)? {
        return Err(Error::NotComparable(format!("{u} is not below {w} in Bruhat order")));
    }
    let mut points = Vec::new();
    for s in Permutation::all(n) {
        if bruhat_leq(u, &s)? && bruhat_leq(&s, w)? {
            points.push(Point(s.one_line.iter().map(|&x| int(x as i64)).collect()));
        }
    }
    Ok(VRep::new(n, points)?.with_name(format!("bruhat-{u}-{w}")))
}

/// The Gelfand–Zetlin polytope for the triangular array with top row `0, 1, 2`:
/// `0 ≤ x₁ ≤ 1`, `1 ≤ x₂ ≤ 2`, `x₁ ≤ x₃ ≤ x₂`.
pub fn gelfand_zetlin_3() -> HRep {
    let inequalities = vec![
        LinearConstraint::new([-1, 0, 0], 0),
        LinearConstraint::new([1, 0, 0], 1),
        LinearConstraint::new([0, -1, 0], -1),
        LinearConstraint::new([0, 1, 0], 2),
        LinearConstraint::new([1, 0, -1], 0),
        LinearConstraint::new([0, -1, 1], 0),
    ];
    HRep::new(3, inequalities, vec![]).expect("consistent dimensions")
}
