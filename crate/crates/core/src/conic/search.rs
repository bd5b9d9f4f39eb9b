use std::collections::{HashMap, HashSet};

use fixedbitset::FixedBitSet;
use rayon::prelude::*;

use super::classify::Classifier;
use super::{figure_in_parent, BaseClass, ConicCertificate, ConicStep, SearchConstraint, SearchOutcome};
use crate::error::{Error, Result};
use crate::lattice::{FVector, FaceId, FacePoset};

/// Largest face lattice accepted by [`enumerate_all_sequences`].
pub const MAX_ENUMERATION_FACES: usize = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    pub constraint: SearchConstraint,
    /// Maximum number of expanded states; `None` searches exhaustively.
    pub budget: Option<u64>,
    /// Explore the first-level branches on the rayon pool. The verdict and the
    /// certificate do not depend on this; the budget applies per branch.
    pub parallel: bool,
}

impl SearchOptions {
    pub fn new(constraint: SearchConstraint) -> Self {
        SearchOptions { constraint, budget: None, parallel: false }
    }
}

/// Bases of every `(v, E)` pair with `dim E ≥ 1`, computed once per lattice.
struct Engine<'a> {
    poset: &'a FacePoset,
    bases: HashMap<(usize, FaceId), (BaseClass, FVector)>,
}

impl<'a> Engine<'a> {
    fn new(poset: &'a FacePoset) -> Self {
        let mut classifier = Classifier::default();
        let mut bases = HashMap::new();
        for face in poset.faces().iter().filter(|f| f.dim >= 1) {
            for v in face.vertices.ones() {
                let figure = figure_in_parent(poset, v, face.id).expect("dim E >= 1");
                bases.insert((v, face.id), (classifier.classify(&figure), figure.f_vector()));
            }
        }
        Engine { poset, bases }
    }

    fn full(&self) -> FixedBitSet {
        let mut all = FixedBitSet::with_capacity(self.poset.n_vertices());
        all.insert_range(..);
        all
    }

    /// The unique maximal alive face containing `v`, where alive means
    /// "contained in `remaining`".
    fn cone_face(&self, remaining: &FixedBitSet, v: usize) -> Option<FaceId> {
        let alive = self
            .poset
            .faces_containing(v)
            .iter()
            .copied()
            .filter(|&f| self.poset.face(f).vertices.is_subset(remaining));
        let mut top: Option<FaceId> = None;
        let mut members = Vec::new();
        for f in alive {
            members.push(f);
            top = Some(f);
        }
        let top = top?;
        let top_face = self.poset.face(top);
        members.iter().all(|&f| self.poset.face(f).is_subface_of(top_face)).then_some(top)
    }

    /// Legal next deletions in ascending vertex order.
    fn moves(&self, remaining: &FixedBitSet, constraint: SearchConstraint) -> Vec<(usize, FaceId)> {
        remaining
            .ones()
            .filter_map(|v| {
                let e = self.cone_face(remaining, v)?;
                let (base, _) = self.bases.get(&(v, e))?;
                constraint.accepts(base).then_some((v, e))
            })
            .collect()
    }

    fn certificate(&self, path: &[(usize, FaceId)], terminal: usize) -> ConicCertificate {
        ConicCertificate {
            polytope_name: self.poset.name().unwrap_or_default().to_string(),
            steps: path
                .iter()
                .map(|&(v, e)| {
                    let (base_class, base_f_vector) = self.bases[&(v, e)].clone();
                    ConicStep { vertex: v, max_face: e, base_class, base_f_vector }
                })
                .collect(),
            terminal_vertex: terminal,
        }
    }
}

enum Status {
    Found,
    Dead,
    OutOfBudget,
}

struct Dfs<'e, 'a> {
    engine: &'e Engine<'a>,
    constraint: SearchConstraint,
    budget: Option<u64>,
    expanded: u64,
    /// Remaining-vertex sets proven to admit no completion under `constraint`.
    dead: HashSet<FixedBitSet>,
}

impl<'e, 'a> Dfs<'e, 'a> {
    fn new(engine: &'e Engine<'a>, constraint: SearchConstraint, budget: Option<u64>) -> Self {
        Dfs { engine, constraint, budget, expanded: 0, dead: HashSet::new() }
    }

    fn first(&mut self, remaining: &mut FixedBitSet, path: &mut Vec<(usize, FaceId)>) -> Status {
        if remaining.count_ones(..) == 1 {
            return Status::Found;
        }
        if self.dead.contains(remaining) {
            return Status::Dead;
        }
        self.expanded += 1;
        if self.budget.is_some_and(|b| self.expanded > b) {
            return Status::OutOfBudget;
        }
        for (v, e) in self.engine.moves(remaining, self.constraint) {
            remaining.set(v, false);
            path.push((v, e));
            match self.first(remaining, path) {
                Status::Found => return Status::Found,
                Status::OutOfBudget => return Status::OutOfBudget,
                Status::Dead => {}
            }
            path.pop();
            remaining.set(v, true);
        }
        self.dead.insert(remaining.clone());
        Status::Dead
    }

    /// Collects completions in lexicographic order. Returns whether any
    /// completion exists below this state (as far as explored) and whether the
    /// exploration was complete.
    fn all(
        &mut self,
        remaining: &mut FixedBitSet,
        path: &mut Vec<(usize, FaceId)>,
        out: &mut Vec<ConicCertificate>,
        limit: usize,
    ) -> (bool, bool) {
        if out.len() >= limit {
            return (false, false);
        }
        if remaining.count_ones(..) == 1 {
            let terminal = remaining.ones().next().expect("one vertex");
            out.push(self.engine.certificate(path, terminal));
            return (true, true);
        }
        if self.dead.contains(remaining) {
            return (false, true);
        }
        let mut any = false;
        let mut complete = true;
        for (v, e) in self.engine.moves(remaining, self.constraint) {
            remaining.set(v, false);
            path.push((v, e));
            let (found, done) = self.all(remaining, path, out, limit);
            path.pop();
            remaining.set(v, true);
            any |= found;
            if !done {
                complete = false;
                break;
            }
        }
        if complete && !any {
            self.dead.insert(remaining.clone());
        }
        (any, complete)
    }
}

/// Depth-first search for the lexicographically first conic sequence under
/// `constraint`, memoizing dead states.
pub fn search_conic(p: &FacePoset, constraint: SearchConstraint, budget: Option<u64>) -> SearchOutcome {
    search_conic_with(p, &SearchOptions { constraint, budget, parallel: false })
}

pub fn search_conic_with(p: &FacePoset, options: &SearchOptions) -> SearchOutcome {
    let engine = Engine::new(p);
    let mut remaining = engine.full();
    if remaining.count_ones(..) == 1 {
        return SearchOutcome::Found(engine.certificate(&[], 0));
    }
    if !options.parallel {
        let mut dfs = Dfs::new(&engine, options.constraint, options.budget);
        let mut path = Vec::new();
        return match dfs.first(&mut remaining, &mut path) {
            Status::Found => {
                let terminal = remaining.ones().next().expect("one vertex left");
                SearchOutcome::Found(engine.certificate(&path, terminal))
            }
            Status::Dead => SearchOutcome::NotConic,
            Status::OutOfBudget => SearchOutcome::Inconclusive,
        };
    }

    let branches = engine.moves(&remaining, options.constraint);
    let results: Vec<SearchOutcome> = branches
        .par_iter()
        .map(|&(v, e)| {
            let mut dfs = Dfs::new(&engine, options.constraint, options.budget);
            let mut rem = remaining.clone();
            rem.set(v, false);
            let mut path = vec![(v, e)];
            match dfs.first(&mut rem, &mut path) {
                Status::Found => {
                    let terminal = rem.ones().next().expect("one vertex left");
                    SearchOutcome::Found(engine.certificate(&path, terminal))
                }
                Status::Dead => SearchOutcome::NotConic,
                Status::OutOfBudget => SearchOutcome::Inconclusive,
            }
        })
        .collect();
    // Branch order is vertex order, so the first success is the lexicographic one.
    let mut inconclusive = false;
    for r in results {
        match r {
            SearchOutcome::Found(_) if !inconclusive => return r,
            SearchOutcome::Inconclusive => inconclusive = true,
            _ => {}
        }
    }
    if inconclusive {
        SearchOutcome::Inconclusive
    } else {
        SearchOutcome::NotConic
    }
}

/// Every conic sequence under `constraint`, up to `limit`, in lexicographic
/// order of vertex choices.
pub fn enumerate_all_sequences(
    p: &FacePoset,
    constraint: SearchConstraint,
    limit: usize,
) -> Result<Vec<ConicCertificate>> {
    if p.len() > MAX_ENUMERATION_FACES {
        return Err(Error::SizeLimitExceeded { size: p.len(), limit: MAX_ENUMERATION_FACES });
    }
    let engine = Engine::new(p);
    let mut dfs = Dfs::new(&engine, constraint, None);
    let mut out = Vec::new();
    let mut remaining = engine.full();
    dfs.all(&mut remaining, &mut Vec::new(), &mut out, limit);
    Ok(out)
}
