//! Backtracking search for transitive permutation representations in which
//! every cone generator has all cycles of length equal to its order.
//!
//! The search fills a coset table one entry at a time. Entries are defined
//! point by point, and at each point generator by generator in the order
//! `x_1, ..., x_k, a_1, b_1, ..., a_g, b_g`. A definition either sends the
//! entry to an existing point with a free preimage slot or introduces the
//! next unused point, so point labels appear in increasing order and each
//! representation is met once per relabeling of its non-base points.
//! After every definition all relators are scanned at every point to deduce
//! forced entries and detect conflicts, and cone generators are checked for
//! cycles that close too early.

use std::sync::atomic::{AtomicBool, Ordering};

use rayon::prelude::*;

use super::perm::Permutation;
use super::witness::{verify_witness, CoverWitness};
use super::CoverError;
use crate::group::{presentation_of_closed, Letter};
use crate::signature::Signature;

const NONE: u32 = u32::MAX;

/// Largest degree the table representation accepts.
pub const MAX_SUPPORTED_DEGREE: usize = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub max_degree: usize,
    /// Split the top of the search tree across rayon workers. The witness
    /// returned may differ from the single-threaded one.
    pub parallel: bool,
}

impl SearchOptions {
    pub fn canonical(max_degree: usize) -> Self {
        SearchOptions {
            max_degree,
            parallel: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverSearch {
    pub target: Signature,
    /// Degrees attempted, in order.
    pub schedule: Vec<usize>,
    pub witness: Option<CoverWitness>,
    pub note: Option<String>,
}

/// Degrees worth trying up to `max_degree`.
///
/// Only multiples of the lcm of the cone orders can carry a free action of
/// every local group. A manifold cover of a spherical orbifold is a sphere,
/// forcing degree `2/chi`; otherwise the cover Euler characteristic
/// `n * chi` must be an even integer.
pub fn degree_schedule(sig: &Signature, max_degree: usize) -> (Vec<usize>, Option<String>) {
    let lcm = sig.cone_lcm();
    let chi = sig.orbifold_euler();
    if (max_degree as u64) < lcm {
        return (
            Vec::new(),
            Some(format!(
                "max degree {max_degree} is below the lcm {lcm} of the cone orders"
            )),
        );
    }
    if chi.is_positive() {
        let forced = chi.recip().expect("positive").scale(2);
        return match forced.to_i64() {
            Some(n) if (n as u64).is_multiple_of(lcm) && n as usize <= max_degree => (vec![n as usize], None),
            Some(n) if (n as u64).is_multiple_of(lcm) => (
                Vec::new(),
                Some(format!("spherical: the only possible degree 2/chi = {n} exceeds {max_degree}")),
            ),
            _ => (
                Vec::new(),
                Some(format!(
                    "spherical: 2/chi = {forced} is not a multiple of the lcm {lcm}, so no manifold cover exists"
                )),
            ),
        };
    }
    let lcm = lcm as usize;
    let schedule: Vec<usize> = (1..=max_degree / lcm)
        .map(|m| m * lcm)
        .filter(|&n| chi.scale(n as i64).to_i64().is_some_and(|e| e % 2 == 0))
        .collect();
    let note = schedule
        .is_empty()
        .then(|| format!("no degree up to {max_degree} gives an even cover Euler characteristic"));
    (schedule, note)
}

/// Searches for a manifold cover of a closed orientable cone-only orbifold,
/// trying the degree schedule in increasing order.
pub fn manifold_cover_search(
    sig: &Signature,
    opts: SearchOptions,
) -> Result<CoverSearch, CoverError> {
    if !sig.is_reduced() {
        return Err(CoverError::NotReduced(Box::new(sig.clone())));
    }
    if opts.max_degree == 0 || opts.max_degree > MAX_SUPPORTED_DEGREE {
        return Err(CoverError::MaxDegree(opts.max_degree));
    }
    let (schedule, note) = degree_schedule(sig, opts.max_degree);
    let problem = Problem::new(sig);
    for &n in &schedule {
        let found = if opts.parallel {
            problem.solve_parallel(n)
        } else {
            problem.solve(n)
        };
        if let Some(table) = found {
            let witness = problem.witness(sig, &table);
            let verdict = verify_witness(sig, &witness)?;
            if let Some(failure) = verdict.failure {
                return Err(CoverError::Unsound(Box::new(failure)));
            }
            return Ok(CoverSearch {
                target: sig.clone(),
                schedule,
                witness: Some(witness),
                note,
            });
        }
    }
    Ok(CoverSearch {
        target: sig.clone(),
        schedule,
        witness: None,
        note,
    })
}

struct Problem {
    generators: usize,
    handle_pairs: usize,
    relators: Vec<Vec<Letter>>,
    /// Cone order per generator, 0 for handle generators.
    orders: Vec<u32>,
    /// Generator order used when choosing the next entry to define.
    definition_order: Vec<usize>,
}

#[derive(Clone)]
struct Table {
    n: usize,
    used: usize,
    fwd: Vec<u32>,
    bwd: Vec<u32>,
}

struct Conflict;

enum Node {
    Complete(Table),
    Branch(Vec<Table>),
}

impl Table {
    fn new(n: usize, generators: usize) -> Self {
        Table {
            n,
            used: 1,
            fwd: vec![NONE; n * generators],
            bwd: vec![NONE; n * generators],
        }
    }

    fn image(&self, pt: u32, l: Letter) -> u32 {
        let idx = l.generator * self.n + pt as usize;
        if l.inverse {
            self.bwd[idx]
        } else {
            self.fwd[idx]
        }
    }

    /// Sets `pt . l = target`; conflicts if either slot is taken by a
    /// different value.
    fn define(&mut self, pt: u32, l: Letter, target: u32) -> Result<bool, Conflict> {
        let (from, to) = if l.inverse {
            (target, pt)
        } else {
            (pt, target)
        };
        let base = l.generator * self.n;
        let (f, b) = (self.fwd[base + from as usize], self.bwd[base + to as usize]);
        match (f, b) {
            (NONE, NONE) => {
                self.fwd[base + from as usize] = to;
                self.bwd[base + to as usize] = from;
                Ok(true)
            }
            _ if f == to && b == from => Ok(false),
            _ => Err(Conflict),
        }
    }
}

impl Problem {
    fn new(sig: &Signature) -> Self {
        let pres = presentation_of_closed(sig).expect("checked reduced");
        let generators = pres.generator_count();
        let handle_gens = 2 * pres.handle_pairs();
        let orders = (0..generators)
            .map(|g| pres.cone_order(g).unwrap_or(0))
            .collect();
        let definition_order = (handle_gens..generators).chain(0..handle_gens).collect();
        Problem {
            generators,
            handle_pairs: pres.handle_pairs(),
            relators: pres.relators().to_vec(),
            orders,
            definition_order,
        }
    }

    /// Scans `rel` at `pt`; returns whether a deduction was made.
    fn scan(&self, t: &mut Table, rel: &[Letter], pt: u32) -> Result<bool, Conflict> {
        let mut f = pt;
        let mut i = 0;
        while i < rel.len() {
            let next = t.image(f, rel[i]);
            if next == NONE {
                break;
            }
            f = next;
            i += 1;
        }
        if i == rel.len() {
            return if f == pt { Ok(false) } else { Err(Conflict) };
        }
        let mut b = pt;
        let mut j = rel.len();
        while j > i {
            let prev = t.image(b, rel[j - 1].inverted());
            if prev == NONE {
                break;
            }
            b = prev;
            j -= 1;
        }
        if j == i {
            return if f == b { Ok(false) } else { Err(Conflict) };
        }
        if j == i + 1 {
            return t.define(f, rel[i], b);
        }
        Ok(false)
    }

    /// Rejects cone generators whose cycles close before reaching the order.
    fn check_cycles(&self, t: &Table) -> Result<(), Conflict> {
        for (g, &p) in self.orders.iter().enumerate() {
            if p == 0 {
                continue;
            }
            let row = &t.fwd[g * t.n..(g + 1) * t.n];
            for start in 0..t.used as u32 {
                let mut x = start;
                for _ in 1..p {
                    x = row[x as usize];
                    if x == NONE {
                        break;
                    }
                    if x == start {
                        return Err(Conflict);
                    }
                }
            }
        }
        Ok(())
    }

    fn propagate(&self, t: &mut Table) -> Result<(), Conflict> {
        loop {
            let mut changed = false;
            for rel in &self.relators {
                for pt in 0..t.used as u32 {
                    changed |= self.scan(t, rel, pt)?;
                }
            }
            if !changed {
                return self.check_cycles(t);
            }
        }
    }

    fn first_gap(&self, t: &Table) -> Option<(u32, usize)> {
        (0..t.used as u32).find_map(|pt| {
            self.definition_order
                .iter()
                .find(|&&g| t.fwd[g * t.n + pt as usize] == NONE)
                .map(|&g| (pt, g))
        })
    }

    fn expand(&self, t: &Table) -> Node {
        let Some((pt, g)) = self.first_gap(t) else {
            return if t.used == t.n {
                Node::Complete(t.clone())
            } else {
                Node::Branch(Vec::new())
            };
        };
        let letter = Letter {
            generator: g,
            inverse: false,
        };
        let limit = if t.used < t.n { t.used + 1 } else { t.used };
        let children = (0..limit as u32)
            .filter(|&target| target as usize == t.used || t.bwd[g * t.n + target as usize] == NONE)
            .filter_map(|target| {
                let mut child = t.clone();
                if target as usize == child.used {
                    child.used += 1;
                }
                child.define(pt, letter, target).ok()?;
                self.propagate(&mut child).ok()?;
                Some(child)
            })
            .collect();
        Node::Branch(children)
    }

    fn dfs(&self, t: &Table, cancel: &AtomicBool) -> Option<Table> {
        if cancel.load(Ordering::Relaxed) {
            return None;
        }
        match self.expand(t) {
            Node::Complete(done) => Some(done),
            Node::Branch(children) => children.iter().find_map(|c| self.dfs(c, cancel)),
        }
    }

    fn root(&self, n: usize) -> Option<Table> {
        let mut t = Table::new(n, self.generators);
        self.propagate(&mut t).ok()?;
        Some(t)
    }

    fn solve(&self, n: usize) -> Option<Table> {
        let cancel = AtomicBool::new(false);
        self.dfs(&self.root(n)?, &cancel)
    }

    fn solve_parallel(&self, n: usize) -> Option<Table> {
        const TARGET_WIDTH: usize = 64;
        let mut frontier = vec![self.root(n)?];
        while frontier.len() < TARGET_WIDTH {
            let mut next = Vec::new();
            let mut grew = false;
            for t in &frontier {
                match self.expand(t) {
                    Node::Complete(done) => return Some(done),
                    Node::Branch(children) => {
                        grew = true;
                        next.extend(children);
                    }
                }
            }
            if !grew || next.is_empty() {
                return None;
            }
            frontier = next;
        }
        let cancel = AtomicBool::new(false);
        frontier.par_iter().find_map_any(|t| {
            let found = self.dfs(t, &cancel);
            if found.is_some() {
                cancel.store(true, Ordering::Relaxed);
            }
            found
        })
    }

    fn witness(&self, sig: &Signature, t: &Table) -> CoverWitness {
        let perm = |g: usize| {
            Permutation::from_images(t.fwd[g * t.n..(g + 1) * t.n].to_vec())
                .expect("complete table rows are bijections")
        };
        let handles = (0..self.handle_pairs)
            .map(|j| (perm(2 * j), perm(2 * j + 1)))
            .collect();
        let cones = (2 * self.handle_pairs..self.generators).map(perm).collect();
        CoverWitness::new(sig, handles, cones)
    }
}
