//! Exact Gaussian elimination over the rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Rational;

/// Reduced row echelon form. Returns the nonzero rows and their pivot columns.
pub(crate) fn rref(mut rows: Vec<Vec<Rational>>, ncols: usize) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows.len() {
            if i == r || rows[i][c].is_zero() {
                continue;
            }
            let factor = rows[i][c].clone();
            let pivot_row = rows[r].clone();
            for (x, y) in rows[i][c..ncols].iter_mut().zip(&pivot_row[c..ncols]) {
                *x -= &factor * y;
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

pub(crate) fn rank(rows: &[Vec<Rational>], ncols: usize) -> usize {
    rref(rows.to_vec(), ncols).1.len()
}

/// A basis of `{ x : rows · x = 0 }`.
pub(crate) fn null_space(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let (reduced, pivots) = rref(rows.to_vec(), ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); ncols];
            v[f] = Rational::one();
            for (row, &p) in reduced.iter().zip(&pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect()
}

/// The unique solution of `rows · x = rhs`, if there is exactly one.
pub(crate) fn solve_unique(rows: &[Vec<Rational>], rhs: &[Rational], ncols: usize) -> Option<Vec<Rational>> {
    let augmented: Vec<Vec<Rational>> = rows
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let (reduced, pivots) = rref(augmented, ncols + 1);
    if pivots.last() == Some(&ncols) || pivots.len() != ncols {
        return None;
    }
    Some(reduced.iter().map(|row| row[ncols].clone()).collect())
}

/// Scales a rational vector to the primitive integer vector on the same ray.
pub(crate) fn primitive_integer(v: &[Rational]) -> Vec<BigInt> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    make_primitive(ints)
}

pub(crate) fn make_primitive(v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() || g.is_one() {
        return v;
    }
    v.into_iter().map(|x| x / &g).collect()
}

/// Flips the sign so that the first nonzero entry is positive. Returns whether it flipped.
pub(crate) fn normalize_sign(v: &mut [BigInt]) -> bool {
    match v.iter().find(|x| !x.is_zero()) {
        Some(x) if x.is_negative() => {
            for y in v.iter_mut() {
                *y = -std::mem::take(y);
            }
            true
        }
        _ => false,
    }
}

pub(crate) fn dot_int(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn dot_rat_int(a: &[BigInt], x: &[Rational]) -> Rational {
    a.iter()
        .zip(x)
        .map(|(c, v)| v * Rational::from_integer(c.clone()))
        .fold(Rational::zero(), |acc, t| acc + t)
}
