#![allow(dead_code)]

pub mod oracle;

use conic_core::builders::{self, Permutation};
use conic_core::geometry::{vertex_enumerate, HRep, Point, Rational, VRep};
use conic_core::io::{polytope_from_vrep, Polytope};

/// Where a corpus polytope comes from. Both kinds can be rescaled exactly.
#[derive(Clone)]
pub enum Source {
    V(VRep),
    H(String, HRep),
}

#[derive(Clone)]
pub struct Entry {
    pub name: String,
    pub source: Source,
}

impl Entry {
    fn v(name: &str, v: VRep) -> Self {
        Entry { name: name.to_string(), source: Source::V(v.with_name(name)) }
    }

    pub fn polytope(&self) -> Polytope {
        match &self.source {
            Source::V(v) => polytope_from_vrep(v).unwrap(),
            Source::H(name, h) => polytope_from_vrep(&vertex_enumerate(h).unwrap().with_name(name.clone())).unwrap(),
        }
    }

    /// The same polytope with every coordinate multiplied by `num/den`.
    pub fn scaled(&self, num: i64, den: i64) -> Entry {
        let name = format!("{} scaled by {num}/{den}", self.name);
        let source = match &self.source {
            Source::V(v) => Source::V(v.scaled(&Rational::new(num.into(), den.into())).with_name(name.clone())),
            Source::H(_, h) => Source::H(name.clone(), h.scaled(num, den)),
        };
        Entry { name, source }
    }
}

pub fn square() -> Polytope {
    polytope_from_vrep(&builders::cube(2).unwrap()).unwrap()
}

pub fn perm(s: &str) -> Permutation {
    s.parse().unwrap()
}

pub fn q_1324_4231() -> Polytope {
    polytope_from_vrep(&builders::bruhat_interval_polytope(&perm("1324"), &perm("4231"), 4).unwrap()).unwrap()
}

pub fn gz3() -> Polytope {
    polytope_from_vrep(&vertex_enumerate(&builders::gelfand_zetlin_3()).unwrap().with_name("gz3")).unwrap()
}

pub fn corpus() -> Vec<Entry> {
    use builders::*;
    let point = VRep::new(2, vec![Point::from_integers([3, 5])]).unwrap();
    let mut c = vec![Entry::v("point", point), Entry::v("segment", simplex(1).unwrap())];
    for d in 2..=4 {
        c.push(Entry::v(&format!("simplex-{d}"), simplex(d).unwrap()));
        c.push(Entry::v(&format!("cube-{d}"), cube(d).unwrap()));
    }
    for d in 3..=4 {
        c.push(Entry::v(&format!("cross-polytope-{d}"), cross_polytope(d).unwrap()));
    }
    for n in 3..=8 {
        c.push(Entry::v(&format!("polygon-{n}"), polygon(n).unwrap()));
    }
    for n in 3..=6 {
        c.push(Entry::v(&format!("bipyramid-{n}"), bipyramid(&polygon(n).unwrap()).unwrap()));
    }
    for n in [4, 5] {
        c.push(Entry::v(&format!("pyramid-{n}"), pyramid(&polygon(n).unwrap()).unwrap()));
    }
    for n in [3, 5] {
        c.push(Entry::v(&format!("prism-{n}"), prism(&polygon(n).unwrap()).unwrap()));
    }
    c.push(Entry::v("prism-simplex-3", prism(&simplex(3).unwrap()).unwrap()));
    c.push(Entry { name: "gz3".into(), source: Source::H("gz3".into(), gelfand_zetlin_3()) });
    c.push(Entry::v("q-1324-4231", bruhat_interval_polytope(&perm("1324"), &perm("4231"), 4).unwrap()));
    c.push(Entry::v("permutohedron-4", bruhat_interval_polytope(&perm("1234"), &perm("4321"), 4).unwrap()));
    c
}
