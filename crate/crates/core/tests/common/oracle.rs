//! A brute-force reference for conic sequences, written from the definitions
//! against plain vertex sets. It shares no code with the search engine: states
//! are explicit sets of alive faces, cone vertices come from maximal elements
//! of upper sets, and bases are classified by counting and by an explicit cube
//! isomorphism.

use std::collections::{BTreeSet, HashMap, HashSet};

use conic_core::conic::{BaseClass, ConicCertificate, SearchConstraint};
use conic_core::lattice::FacePoset;

type Faces = Vec<(i32, BTreeSet<usize>)>;
type State = BTreeSet<usize>;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Sequence {
    pub order: Vec<usize>,
    pub terminal: usize,
    pub bases: Vec<BaseClass>,
    pub base_f: Vec<Vec<u64>>,
}

impl Sequence {
    pub fn of_certificate(c: &ConicCertificate) -> Self {
        Sequence {
            order: c.steps.iter().map(|s| s.vertex).collect(),
            terminal: c.terminal_vertex,
            bases: c.steps.iter().map(|s| s.base_class).collect(),
            base_f: c.steps.iter().map(|s| s.base_f_vector.0.clone()).collect(),
        }
    }
}

pub struct Oracle {
    faces: Faces,
}

struct Move {
    vertex: usize,
    next: State,
    base: BaseClass,
    base_f: Vec<u64>,
}

fn accepts(c: SearchConstraint, b: BaseClass) -> bool {
    match (c, b) {
        (SearchConstraint::Any, _) => true,
        (SearchConstraint::AllSimplex, BaseClass::Simplex(_)) => true,
        (SearchConstraint::AllCube, BaseClass::Simplex(d)) => d <= 1,
        (SearchConstraint::AllCube, BaseClass::Cube(_)) => true,
        (SearchConstraint::AllSimple, BaseClass::General(_)) => false,
        (SearchConstraint::AllSimple, _) => true,
        _ => false,
    }
}

impl Oracle {
    pub fn new(p: &FacePoset) -> Self {
        let faces = p.faces().iter().filter(|f| f.dim >= 0).map(|f| (f.dim, f.vertices.ones().collect())).collect();
        Oracle { faces }
    }

    fn start(&self) -> State {
        (0..self.faces.len()).collect()
    }

    fn terminal(&self, s: &State) -> Option<usize> {
        match s.iter().collect::<Vec<_>>().as_slice() {
            [&i] if self.faces[i].0 == 0 => self.faces[i].1.first().copied(),
            _ => None,
        }
    }

    fn alive_vertices(&self, s: &State) -> Vec<usize> {
        let mut v: Vec<usize> =
            s.iter().filter(|&&i| self.faces[i].0 == 0).map(|&i| *self.faces[i].1.first().unwrap()).collect();
        v.sort_unstable();
        v
    }

    /// `E` when the alive faces containing `v` have a unique maximal element.
    fn cone_face(&self, s: &State, v: usize) -> Option<usize> {
        let up: Vec<usize> = s.iter().copied().filter(|&i| self.faces[i].1.contains(&v)).collect();
        let maximal: Vec<usize> = up
            .iter()
            .copied()
            .filter(|&i| {
                !up.iter().any(|&j| j != i && self.faces[i].1.is_subset(&self.faces[j].1) && self.faces[i].1 != self.faces[j].1)
            })
            .collect();
        match maximal.as_slice() {
            [e] => Some(*e),
            _ => None,
        }
    }

    fn moves(&self, s: &State, constraint: SearchConstraint) -> Vec<Move> {
        let mut out = Vec::new();
        for v in self.alive_vertices(s) {
            let Some(e) = self.cone_face(s, v) else { continue };
            if self.faces[e].0 < 1 {
                continue;
            }
            let (base, base_f) = self.figure_class(s, v, e);
            if !accepts(constraint, base) {
                continue;
            }
            let next = s.iter().copied().filter(|&i| !self.faces[i].1.contains(&v)).collect();
            out.push(Move { vertex: v, next, base, base_f });
        }
        out
    }

    /// Class and f-vector of the vertex figure of `v` in `e`.
    fn figure_class(&self, s: &State, v: usize, e: usize) -> (BaseClass, Vec<u64>) {
        let within: Vec<usize> = s
            .iter()
            .copied()
            .filter(|&i| self.faces[i].1.contains(&v) && self.faces[i].1.is_subset(&self.faces[e].1))
            .collect();
        let edges: Vec<usize> = within.iter().copied().filter(|&i| self.faces[i].0 == 1).collect();
        let fig: Faces = within
            .iter()
            .filter(|&&i| self.faces[i].0 >= 1)
            .map(|&i| {
                let verts = edges
                    .iter()
                    .enumerate()
                    .filter(|(_, &g)| self.faces[g].1.is_subset(&self.faces[i].1))
                    .map(|(k, _)| k)
                    .collect();
                (self.faces[i].0 - 1, verts)
            })
            .collect();
        let d = (self.faces[e].0 - 1) as usize;
        classify(&fig, d, edges.len())
    }

    pub fn count(&self, constraint: SearchConstraint) -> u64 {
        fn go(o: &Oracle, s: &State, c: SearchConstraint, memo: &mut HashMap<State, u64>) -> u64 {
            if o.terminal(s).is_some() {
                return 1;
            }
            if let Some(&n) = memo.get(s) {
                return n;
            }
            let n = o.moves(s, c).iter().map(|m| go(o, &m.next, c, memo)).sum();
            memo.insert(s.clone(), n);
            n
        }
        go(self, &self.start(), constraint, &mut HashMap::new())
    }

    pub fn is_conic(&self, constraint: SearchConstraint) -> bool {
        self.count(constraint) > 0
    }

    /// Up to `limit` sequences, in no particular order.
    pub fn sequences(&self, constraint: SearchConstraint, limit: usize) -> Vec<Sequence> {
        fn go(
            o: &Oracle,
            s: &State,
            c: SearchConstraint,
            prefix: &mut Sequence,
            dead: &mut HashSet<State>,
            out: &mut Vec<Sequence>,
            limit: usize,
        ) -> bool {
            if let Some(t) = o.terminal(s) {
                out.push(Sequence { terminal: t, ..prefix.clone() });
                return true;
            }
            if dead.contains(s) {
                return false;
            }
            let mut any = false;
            for m in o.moves(s, c) {
                if out.len() >= limit {
                    return true;
                }
                prefix.order.push(m.vertex);
                prefix.bases.push(m.base);
                prefix.base_f.push(m.base_f);
                any |= go(o, &m.next, c, prefix, dead, out, limit);
                prefix.order.pop();
                prefix.bases.pop();
                prefix.base_f.pop();
            }
            if !any {
                dead.insert(s.clone());
            }
            any
        }
        let mut out = Vec::new();
        let mut prefix = Sequence { order: vec![], terminal: 0, bases: vec![], base_f: vec![] };
        go(self, &self.start(), constraint, &mut prefix, &mut HashSet::new(), &mut out, limit);
        out
    }

    /// Replays a deletion order, returning the sequence it defines.
    pub fn replay(&self, order: &[usize], terminal: usize, constraint: SearchConstraint) -> Result<Sequence, String> {
        let mut s = self.start();
        let mut seq = Sequence { order: vec![], terminal, bases: vec![], base_f: vec![] };
        for (i, &v) in order.iter().enumerate() {
            let m = self
                .moves(&s, constraint)
                .into_iter()
                .find(|m| m.vertex == v)
                .ok_or_else(|| format!("deletion {} of vertex {v} is not a legal move", i + 1))?;
            seq.order.push(v);
            seq.bases.push(m.base);
            seq.base_f.push(m.base_f);
            s = m.next;
        }
        match self.terminal(&s) {
            Some(t) if t == terminal => Ok(seq),
            other => Err(format!("ends at {other:?}, expected vertex {terminal}")),
        }
    }
}

fn f_vector_of(fig: &Faces, d: usize) -> Vec<u64> {
    let mut f = vec![0u64; d + 1];
    for (k, _) in fig {
        f[*k as usize] += 1;
    }
    f
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn classify(fig: &Faces, d: usize, n: usize) -> (BaseClass, Vec<u64>) {
    let f = f_vector_of(fig, d);
    let class = if n == d + 1 {
        BaseClass::Simplex(d)
    } else if is_cube(fig, d, n, &f) {
        BaseClass::Cube(d)
    } else if (0..n).all(|v| fig.iter().filter(|(k, s)| *k as usize + 1 == d && s.contains(&v)).count() == d) {
        BaseClass::SimpleOther(d)
    } else {
        BaseClass::General(d)
    };
    (class, f)
}

/// Whether some bijection with `{0,1}^d` sends the faces onto the subcubes.
fn is_cube(fig: &Faces, d: usize, n: usize, f: &[u64]) -> bool {
    if n != 1 << d || (0..=d).any(|k| f[k] != binomial(d as u64, k as u64) << (d - k)) {
        return false;
    }
    let adjacent: Vec<(usize, usize)> = fig
        .iter()
        .filter(|(k, _)| *k == 1)
        .map(|(_, s)| {
            let v: Vec<usize> = s.iter().copied().collect();
            (v[0], v[1])
        })
        .collect();
    let is_edge = |a: usize, b: usize| adjacent.contains(&(a.min(b), a.max(b)));
    let subcube = |labels: &[usize], s: &BTreeSet<usize>| {
        let first = labels[*s.first().unwrap()];
        let free = s.iter().fold(0usize, |m, &v| m | (labels[v] ^ first));
        s.len() == 1 << free.count_ones()
    };
    fn assign(
        i: usize,
        n: usize,
        labels: &mut Vec<usize>,
        used: &mut Vec<bool>,
        is_edge: &dyn Fn(usize, usize) -> bool,
        done: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if i == n {
            return done(labels);
        }
        for c in 0..n {
            if used[c] {
                continue;
            }
            if (0..i).all(|j| is_edge(i, j) == ((labels[j] ^ c).count_ones() == 1)) {
                used[c] = true;
                labels.push(c);
                if assign(i + 1, n, labels, used, is_edge, done) {
                    return true;
                }
                labels.pop();
                used[c] = false;
            }
        }
        false
    }
    let mut done = |labels: &[usize]| fig.iter().all(|(_, s)| subcube(labels, s));
    assign(0, n, &mut Vec::new(), &mut vec![false; n], &is_edge, &mut done)
}

/// `h_j = Σ_k (−1)^{k−j} C(k, j) f_k`.
pub fn h_direct(f: &[u64]) -> Vec<i64> {
    (0..f.len())
        .map(|j| {
            (j..f.len())
                .map(|k| {
                    let term = binomial(k as u64, j as u64) as i64 * f[k] as i64;
                    if (k - j) % 2 == 0 {
                        term
                    } else {
                        -term
                    }
                })
                .sum()
        })
        .collect()
}

/// Coefficients of `Σ f_k (t² − 1)^k`, expanded term by term.
pub fn poincare_direct(f: &[u64]) -> Vec<i64> {
    let mut out = vec![0i64; 2 * f.len() - 1];
    for (k, &fk) in f.iter().enumerate() {
        for j in 0..=k {
            let sign = if (k - j) % 2 == 0 { 1 } else { -1 };
            out[2 * j] += sign * binomial(k as u64, j as u64) as i64 * fk as i64;
        }
    }
    out
}

/// `1 + Σ_steps (1 + x·Φ_base)` equals `Σ f_k x^k`, in plain integer vectors.
pub fn prop24_direct(f: &[u64], base_f: &[Vec<u64>]) -> bool {
    let mut sum = vec![0u64; f.len().max(1) + 1];
    sum[0] = 1;
    for b in base_f {
        sum[0] += 1;
        for (k, &c) in b.iter().enumerate() {
            if k + 1 >= sum.len() {
                return false;
            }
            sum[k + 1] += c;
        }
    }
    while sum.len() > f.len() && sum.last() == Some(&0) {
        sum.pop();
    }
    sum == f
}
