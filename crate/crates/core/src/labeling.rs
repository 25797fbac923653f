//! Labelings of diagrams by birack elements.
//!
//! At a classical crossing `under_out = under_in ⊳̲ over_in` and
//! `over_out = over_in ⊳̄ under_in`; at a virtual crossing
//! `a_out = a_in ⊛ b_in` and `b_out = b_in ⊛ a_in`. The crossing sign plays no
//! role: for involutory biracks the relations at negative crossings coincide
//! with these.

use std::fmt::Write as _;

use crate::algebra::BirackTable;
use crate::diagram::{Crossing, CrossingKind, Diagram, IN1, IN2, OUT1, OUT2};
use crate::error::{Error, Result};

/// Default bound on `n^(#semiarcs)` for [`brute_force_labelings`].
pub const DEFAULT_BRUTE_FORCE_CAP: u128 = 10_000_000;

/// An assignment of 0-based elements to the semiarcs of a diagram, indexed
/// like [`Diagram::semiarcs`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Labeling(pub Vec<usize>);

impl Labeling {
    pub fn get(&self, semiarc: usize) -> usize {
        self.0[semiarc]
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    /// `semiarc=element` lines sorted by semiarc name, elements 1-based.
    pub fn format(&self, d: &Diagram) -> String {
        let mut out = String::new();
        for (name, v) in d.semiarcs().iter().zip(&self.0) {
            let _ = writeln!(out, "{name}={}", v + 1);
        }
        out
    }
}

#[inline]
fn outputs(t: &BirackTable, c: &Crossing, a: usize, b: usize) -> (usize, usize) {
    match c.kind {
        CrossingKind::Virtual => (t.virt(a, b), t.virt(b, a)),
        _ => (t.under(a, b), t.over(b, a)),
    }
}

/// True iff `values` satisfies every crossing relation of `d`.
pub fn satisfies(d: &Diagram, t: &BirackTable, values: &[usize]) -> bool {
    d.crossings().iter().all(|c| {
        let s = c.slots;
        let (o1, o2) = outputs(t, c, values[s[IN1]], values[s[IN2]]);
        values[s[OUT1]] == o1 && values[s[OUT2]] == o2
    })
}

const UNSET: usize = usize::MAX;

/// True when every column map is an involution and the three mixed
/// identities of axiom (ii) hold. Then any label of each strand at a
/// crossing determines the other two labels, whichever end it sits on.
fn adjacent_pairs_rule(t: &BirackTable) -> bool {
    let n = t.order();
    (0..n).all(|x| {
        (0..n).all(|y| {
            t.under(t.under(x, y), y) == x
                && t.over(t.over(x, y), y) == x
                && t.virt(t.virt(x, y), y) == x
                && t.under(x, y) == t.under(x, t.over(y, x))
                && t.over(x, y) == t.over(x, t.under(y, x))
                && t.virt(x, y) == t.virt(x, t.virt(y, x))
        })
    })
}

/// Table-independent search data for one diagram, reusable across tables.
#[derive(Debug, Clone)]
pub struct LabelingPlan<'d> {
    d: &'d Diagram,
    /// semiarcs in branching order: component by component, along traversal
    order: Vec<usize>,
    /// crossings each semiarc takes part in
    watchers: Vec<Vec<usize>>,
}

impl<'d> LabelingPlan<'d> {
    pub fn new(d: &'d Diagram) -> Self {
        let mut watchers = vec![Vec::new(); d.semiarcs().len()];
        for (ci, c) in d.crossings().iter().enumerate() {
            for &s in &c.slots {
                if !watchers[s].contains(&ci) {
                    watchers[s].push(ci);
                }
            }
        }
        let order = branching_order(d);
        Self { d, order, watchers }
    }

    /// Calls `emit` once per labeling by `t` (order unspecified).
    pub fn for_each(&self, t: &BirackTable, mut emit: impl FnMut(&[usize])) {
        let mut search = Search {
            plan: self,
            t,
            adjacent: adjacent_pairs_rule(t),
            values: vec![UNSET; self.watchers.len()],
            trail: Vec::with_capacity(self.watchers.len()),
        };
        search.run(0, &mut emit);
    }
}

/// Greedy branching order: each step picks the semiarc whose assignment
/// forces the most further labels, assuming the adjacent-pairs rule. Ties go
/// to the earliest semiarc in component traversal order.
fn branching_order(d: &Diagram) -> Vec<usize> {
    let traversal: Vec<usize> = d.component_indices().iter().flatten().copied().collect();
    let mut known = vec![false; traversal.len()];
    let mut order = Vec::new();
    let closure = |known: &mut Vec<bool>| {
        let mut changed = true;
        while changed {
            changed = false;
            for c in d.crossings() {
                let s = c.slots;
                let one = known[s[IN1]] || known[s[OUT1]];
                let two = known[s[IN2]] || known[s[OUT2]];
                if one && two && !s.iter().all(|&x| known[x]) {
                    s.iter().for_each(|&x| known[x] = true);
                    changed = true;
                }
            }
        }
    };
    while known.contains(&false) {
        let mut best: Option<(usize, usize)> = None;
        for &cand in traversal.iter().filter(|&&x| !known[x]) {
            let mut trial = known.clone();
            trial[cand] = true;
            closure(&mut trial);
            let gain = trial.iter().filter(|&&k| k).count();
            if best.is_none_or(|(g, _)| gain > g) {
                best = Some((gain, cand));
            }
        }
        let (_, cand) = best.expect("an unknown semiarc exists");
        known[cand] = true;
        closure(&mut known);
        order.push(cand);
    }
    order
}

struct Search<'p, 'd> {
    plan: &'p LabelingPlan<'d>,
    t: &'p BirackTable,
    adjacent: bool,
    values: Vec<usize>,
    trail: Vec<usize>,
}

impl Search<'_, '_> {
    /// Labels forced at a crossing by the labels known so far.
    fn implied(&self, c: &Crossing) -> Option<[(usize, usize); 2]> {
        let v = |k: usize| {
            let x = self.values[c.slots[k]];
            (x != UNSET).then_some(x)
        };
        let (first, second) = match c.kind {
            CrossingKind::Virtual => (Op2::Virt, Op2::Virt),
            _ => (Op2::Under, Op2::Over),
        };
        if !self.adjacent {
            let (a, b) = (v(IN1)?, v(IN2)?);
            return Some([(OUT1, first.apply(self.t, a, b)), (OUT2, second.apply(self.t, b, a))]);
        }
        let one = v(IN1).or(v(OUT1))?;
        let two = v(IN2).or(v(OUT2))?;
        let strand = |op: Op2, input: usize, output: usize, other: usize| match v(input) {
            Some(x) => (output, op.apply(self.t, x, other)),
            None => (input, op.apply(self.t, v(output).expect("one end known"), other)),
        };
        Some([strand(first, IN1, OUT1, two), strand(second, IN2, OUT2, one)])
    }

    fn assign(&mut self, s: usize, v: usize) -> bool {
        if self.values[s] != UNSET {
            return self.values[s] == v;
        }
        self.values[s] = v;
        self.trail.push(s);
        let crossings = self.plan.d.crossings();
        let mut head = self.trail.len() - 1;
        while head < self.trail.len() {
            let s = self.trail[head];
            head += 1;
            for &ci in &self.plan.watchers[s] {
                let c = &crossings[ci];
                let Some(forced) = self.implied(c) else { continue };
                for (slot, v) in forced {
                    let target = c.slots[slot];
                    match self.values[target] {
                        UNSET => {
                            self.values[target] = v;
                            self.trail.push(target);
                        }
                        w if w != v => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }

    fn undo_to(&mut self, mark: usize) {
        for s in self.trail.drain(mark..) {
            self.values[s] = UNSET;
        }
    }

    fn run(&mut self, pos: usize, emit: &mut dyn FnMut(&[usize])) {
        let order = &self.plan.order;
        let Some(next) = (pos..order.len()).find(|&p| self.values[order[p]] == UNSET) else {
            if satisfies(self.plan.d, self.t, &self.values) {
                emit(&self.values);
            }
            return;
        };
        let s = order[next];
        for v in 0..self.t.order() {
            let mark = self.trail.len();
            if self.assign(s, v) {
                self.run(next + 1, emit);
            }
            self.undo_to(mark);
        }
    }
}

#[derive(Clone, Copy)]
enum Op2 {
    Under,
    Over,
    Virt,
}

impl Op2 {
    #[inline]
    fn apply(self, t: &BirackTable, x: usize, y: usize) -> usize {
        match self {
            Op2::Under => t.under(x, y),
            Op2::Over => t.over(x, y),
            Op2::Virt => t.virt(x, y),
        }
    }
}

/// Calls `emit` once per labeling of `d` by `t` (order unspecified).
pub fn for_each_labeling(d: &Diagram, t: &BirackTable, emit: impl FnMut(&[usize])) {
    LabelingPlan::new(d).for_each(t, emit);
}

/// All labelings, sorted lexicographically in semiarc-name order.
pub fn enumerate_labelings(d: &Diagram, t: &BirackTable) -> Vec<Labeling> {
    let mut out = Vec::new();
    for_each_labeling(d, t, |v| out.push(Labeling(v.to_vec())));
    out.sort();
    out
}

pub fn count_labelings(d: &Diagram, t: &BirackTable) -> usize {
    let mut count = 0;
    for_each_labeling(d, t, |_| count += 1);
    count
}

/// Checks every one of the `n^(#semiarcs)` assignments against the crossing
/// relations. Used as an oracle for [`enumerate_labelings`].
pub fn brute_force_labelings(d: &Diagram, t: &BirackTable, cap: u128) -> Result<Vec<Labeling>> {
    let n = t.order();
    let m = d.semiarcs().len();
    let size = (n as u128).checked_pow(m as u32).unwrap_or(u128::MAX);
    if size > cap {
        return Err(Error::CapExceeded { size, cap });
    }
    let mut out = Vec::new();
    let mut values = vec![0usize; m];
    loop {
        if satisfies(d, t, &values) {
            out.push(Labeling(values.clone()));
        }
        // odometer, last semiarc fastest
        let mut k = m;
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            values[k] += 1;
            if values[k] < n {
                break;
            }
            values[k] = 0;
        }
    }
}
