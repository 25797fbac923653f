//! Exhaustive generation of small involutory virtual biracks and the search
//! for links that the symmetric enhancement separates while the counting
//! invariant does not.
//!
//! Generation splits the axioms into a classical part (under and over
//! operations: axioms (i), (ii) and exchange laws 1-3), a virtual part
//! (law 4 and the virtual clauses of (ii)) and the mixed laws 5-7. Both parts
//! are found by backtracking over whole columns, each column an involution,
//! rejecting a partial table as soon as some fully evaluable instance of an
//! identity fails. Surviving pairs are then filtered by the mixed laws and a
//! final [`BirackTable::check_axioms`].

use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::Arc;
use std::thread;

use crate::algebra::{Birack, BirackTable};
use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::invariants::{framing_tile, InvariantPolynomial};
use crate::labeling::LabelingPlan;
use crate::perm::Permutation;

pub use crate::perm::enumerate_involutions;

/// Default largest order accepted by [`enumerate_biracks`].
pub const DEFAULT_ORDER_CAP: usize = 4;

const UNSET: usize = usize::MAX;

/// Row-major partial operation table.
#[derive(Clone)]
struct Partial {
    n: usize,
    cells: Vec<usize>,
}

impl Partial {
    fn new(n: usize) -> Self {
        Self {
            n,
            cells: vec![UNSET; n * n],
        }
    }

    #[inline]
    fn get(&self, x: usize, y: usize) -> Option<usize> {
        let v = self.cells[x * self.n + y];
        (v != UNSET).then_some(v)
    }

    fn set_column(&mut self, y: usize, col: &Permutation) {
        for x in 0..self.n {
            self.cells[x * self.n + y] = col.apply(x);
        }
    }

    fn clear_column(&mut self, y: usize) {
        for x in 0..self.n {
            self.cells[x * self.n + y] = UNSET;
        }
    }
}

fn all_agree(n: usize, mut check: impl FnMut(usize, usize, usize) -> Option<bool>) -> bool {
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if check(x, y, z) == Some(false) {
                    return false;
                }
            }
        }
    }
    true
}

fn eq(a: Option<usize>, b: Option<usize>) -> Option<bool> {
    Some(a? == b?)
}

fn classical_consistent(under: &Partial, over: &Partial) -> bool {
    let n = under.n;
    let u = |a: Option<usize>, b: Option<usize>| under.get(a?, b?);
    let o = |a: Option<usize>, b: Option<usize>| over.get(a?, b?);

    // f(x) = x over x injective
    let mut seen = vec![false; n];
    for x in 0..n {
        if let Some(f) = over.get(x, x) {
            if std::mem::replace(&mut seen[f], true) {
                return false;
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            let (x_, y_) = (Some(x), Some(y));
            if eq(o(x_, y_), o(x_, u(y_, x_))) == Some(false) || eq(u(x_, y_), u(x_, o(y_, x_))) == Some(false) {
                return false;
            }
        }
    }
    all_agree(n, |x, y, z| {
        let (x, y, z) = (Some(x), Some(y), Some(z));
        let l1 = eq(o(o(x, y), o(z, y)), o(o(x, z), u(y, z)));
        let l2 = eq(u(o(x, y), o(z, y)), o(u(x, z), u(y, z)));
        let l3 = eq(u(u(x, y), u(z, y)), u(u(x, z), o(y, z)));
        if l1 == Some(false) || l2 == Some(false) || l3 == Some(false) {
            Some(false)
        } else {
            None
        }
    })
}

fn virtual_consistent(virt: &Partial) -> bool {
    let n = virt.n;
    let v = |a: Option<usize>, b: Option<usize>| virt.get(a?, b?);
    for x in 0..n {
        for y in 0..n {
            let (x_, y_) = (Some(x), Some(y));
            if eq(v(x_, y_), v(x_, v(y_, x_))) == Some(false) {
                return false;
            }
        }
    }
    all_agree(n, |x, y, z| {
        let (x, y, z) = (Some(x), Some(y), Some(z));
        eq(v(v(x, y), v(z, y)), v(v(x, z), v(y, z)))
    })
}

/// Valid `(under, over)` block pairs, as 0-based row-major vectors.
fn classical_parts(n: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    fn rec(
        k: usize,
        cols: &[Permutation],
        under: &mut Partial,
        over: &mut Partial,
        out: &mut Vec<(Vec<usize>, Vec<usize>)>,
    ) {
        let n = under.n;
        if k == 2 * n {
            out.push((under.cells.clone(), over.cells.clone()));
            return;
        }
        let y = k / 2;
        for col in cols {
            let target = if k.is_multiple_of(2) { &mut *under } else { &mut *over };
            target.set_column(y, col);
            if classical_consistent(under, over) {
                rec(k + 1, cols, under, over, out);
            }
            let target = if k.is_multiple_of(2) { &mut *under } else { &mut *over };
            target.clear_column(y);
        }
    }
    let cols = enumerate_involutions(n);
    let mut out = Vec::new();
    rec(0, &cols, &mut Partial::new(n), &mut Partial::new(n), &mut out);
    out
}

fn virtual_parts(n: usize) -> Vec<Vec<usize>> {
    fn rec(y: usize, cols: &[Permutation], virt: &mut Partial, out: &mut Vec<Vec<usize>>) {
        if y == virt.n {
            out.push(virt.cells.clone());
            return;
        }
        for col in cols {
            virt.set_column(y, col);
            if virtual_consistent(virt) {
                rec(y + 1, cols, virt, out);
            }
            virt.clear_column(y);
        }
    }
    let cols = enumerate_involutions(n);
    let mut out = Vec::new();
    rec(0, &cols, &mut Partial::new(n), &mut out);
    out
}

fn mixed_laws_hold(t: &BirackTable) -> bool {
    let n = t.order();
    (0..n).all(|x| {
        (0..n).all(|y| {
            (0..n).all(|z| {
                (5..=7).all(|law| {
                    let (l, r) = crate::algebra::exchange_law(t, law, x, y, z);
                    l == r
                })
            })
        })
    })
}

/// Every involutory virtual birack of order `n`, exactly once, in
/// lexicographic order of the `under ‖ over ‖ virtual` entry vector.
pub fn enumerate_biracks(n: usize, cap: usize) -> Result<Vec<BirackTable>> {
    if n > cap {
        return Err(Error::CapExceeded {
            size: n as u128,
            cap: cap as u128,
        });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut classical = classical_parts(n);
    let mut virt = virtual_parts(n);
    classical.sort();
    virt.sort();

    let mut out = Vec::new();
    for (under, over) in &classical {
        for v in &virt {
            let t = BirackTable::from_blocks(n, under.clone(), over.clone(), v.clone())
                .expect("generated entries are in range");
            if mixed_laws_hold(&t) && t.check_axioms().passed() {
                out.push(t);
            }
        }
    }
    Ok(out)
}

/// Unpruned oracle: every table whose columns are arbitrary maps, filtered by
/// [`BirackTable::check_axioms`]. Only feasible for `n ≤ 2`.
pub fn brute_force_biracks(n: usize) -> Vec<BirackTable> {
    let cells = 3 * n * n;
    let total = n.pow(cells as u32);
    (0..total)
        .filter_map(|mut code| {
            let mut entries = vec![0; cells];
            for e in entries.iter_mut().rev() {
                *e = code % n;
                code /= n;
            }
            let virt = entries.split_off(2 * n * n);
            let over = entries.split_off(n * n);
            let t = BirackTable::from_blocks(n, entries, over, virt).ok()?;
            t.check_axioms().passed().then_some(t)
        })
        .collect()
}

/// Keeps the first table of each isomorphism class, testing all `n!`
/// bijections.
pub fn isomorphism_representatives(tables: &[BirackTable]) -> Vec<BirackTable> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for t in tables {
        let canon = canonical_form(t);
        if seen.insert(canon) {
            out.push(t.clone());
        }
    }
    out
}

/// Least entry vector over all relabelings of the table.
pub fn canonical_form(t: &BirackTable) -> Vec<usize> {
    all_permutations(t.order())
        .iter()
        .map(|p| t.relabel(p).entry_vector())
        .min()
        .expect("at least the identity")
}

fn all_permutations(n: usize) -> Vec<Permutation> {
    fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Permutation>) {
        let n = used.len();
        if prefix.len() == n {
            out.push(Permutation::from_images(prefix.clone()).expect("bijection"));
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// A verified table with its complete list of good involutions.
#[derive(Debug, Clone)]
pub struct CensusRecord {
    pub table: Birack,
    pub good_involutions: Vec<Permutation>,
}

impl CensusRecord {
    pub fn new(table: Birack) -> Self {
        let good_involutions = table.enumerate_good_involutions();
        Self {
            table,
            good_involutions,
        }
    }

    pub fn characteristic(&self) -> usize {
        self.table.characteristic()
    }
}

/// Census records for every order-`n` birack.
pub fn census(n: usize, cap: usize) -> Result<Vec<CensusRecord>> {
    Ok(enumerate_biracks(n, cap)?
        .into_iter()
        .map(|t| CensusRecord::new(Birack::verify(t).expect("census tables pass the axioms")))
        .collect())
}

/// One record per isomorphism class for every order `1..=max_order`, the
/// table set used by the distinguishing-pair search.
pub fn representative_records(max_order: usize, cap: usize) -> Result<Vec<CensusRecord>> {
    let mut out = Vec::new();
    for n in 1..=max_order {
        let reps = isomorphism_representatives(&enumerate_biracks(n, cap)?);
        out.extend(
            reps.into_iter()
                .map(|t| CensusRecord::new(Birack::verify(t).expect("census tables pass the axioms"))),
        );
    }
    Ok(out)
}

/// `index order characteristic good_involutions file` lines for a census
/// directory.
pub fn census_index(records: &[CensusRecord]) -> String {
    let mut out = String::from("# index order characteristic good_involutions file\n");
    for (i, r) in records.iter().enumerate() {
        out.push_str(&format!(
            "{i} {} {} {} {}\n",
            r.table.order(),
            r.characteristic(),
            r.good_involutions.len(),
            census_file_name(i)
        ));
    }
    out
}

pub fn census_file_name(index: usize) -> String {
    format!("{index:05}.birack")
}

/// Two diagrams with equal counting invariant but different symmetric
/// enhancement for one table and good involution.
#[derive(Debug, Clone)]
pub struct DistinguishingPair {
    pub record: usize,
    pub rho: Arc<Permutation>,
    pub first: usize,
    pub second: usize,
    pub phi_z: u64,
    pub first_phi_rho: Arc<InvariantPolynomial>,
    pub second_phi_rho: Arc<InvariantPolynomial>,
}

/// Framing tiles of every corpus diagram for one characteristic.
type CorpusTiles = Vec<Vec<Diagram>>;

fn corpus_tiles(corpus: &[Diagram], records: &[CensusRecord]) -> BTreeMap<usize, CorpusTiles> {
    let mut out = BTreeMap::new();
    for r in records {
        out.entry(r.characteristic()).or_insert_with(|| {
            corpus
                .iter()
                .map(|d| framing_tile(d, &r.table).into_values().collect())
                .collect()
        });
    }
    out
}

/// `Σ u^{|class|}` over the ρ-classes of `labelings`, without building the
/// classes.
fn class_size_polynomial(labelings: &[Vec<usize>], rho: &Permutation) -> InvariantPolynomial {
    let mut sizes: HashMap<Vec<usize>, u32> = HashMap::new();
    for l in labelings {
        *sizes
            .entry(l.iter().map(|&x| x.min(rho.apply(x))).collect())
            .or_default() += 1;
    }
    let mut p = InvariantPolynomial::zero();
    for size in sizes.into_values() {
        p.add_term(size, 1);
    }
    p
}

/// Per-record search; involutions that are the identity or fixed-point free
/// are skipped since for them the enhancement is a fixed multiple of the
/// counting invariant.
fn pairs_for_record(index: usize, record: &CensusRecord, tiles: &[Vec<LabelingPlan>]) -> Vec<DistinguishingPair> {
    let useful: Vec<&Permutation> = record
        .good_involutions
        .iter()
        .filter(|r| !r.is_identity() && r.fixed_points() > 0)
        .collect();
    if useful.is_empty() || tiles.len() < 2 {
        return Vec::new();
    }
    let labelings: Vec<Vec<_>> = tiles
        .iter()
        .map(|tile| {
            tile.iter()
                .map(|fd| {
                    let mut ls = Vec::new();
                    fd.for_each(&record.table, |v| ls.push(v.to_vec()));
                    ls
                })
                .collect()
        })
        .collect();
    let phi_z: Vec<u64> = labelings
        .iter()
        .map(|t| t.iter().map(|ls| ls.len() as u64).sum())
        .collect();

    let mut out = Vec::new();
    for rho in useful {
        let rho = Arc::new(rho.clone());
        // intern the polynomials so pair comparisons are integer compares
        let mut ids: HashMap<InvariantPolynomial, usize> = HashMap::new();
        let mut polys: Vec<Arc<InvariantPolynomial>> = Vec::new();
        let poly_id: Vec<usize> = labelings
            .iter()
            .map(|tile| {
                let mut p = InvariantPolynomial::zero();
                for ls in tile {
                    p.add(&class_size_polynomial(ls, &rho));
                }
                *ids.entry(p).or_insert_with_key(|p| {
                    polys.push(Arc::new(p.clone()));
                    polys.len() - 1
                })
            })
            .collect();
        for i in 0..tiles.len() {
            for j in i + 1..tiles.len() {
                if phi_z[i] == phi_z[j] && poly_id[i] != poly_id[j] {
                    out.push(DistinguishingPair {
                        record: index,
                        rho: Arc::clone(&rho),
                        first: i,
                        second: j,
                        phi_z: phi_z[i],
                        first_phi_rho: Arc::clone(&polys[poly_id[i]]),
                        second_phi_rho: Arc::clone(&polys[poly_id[j]]),
                    });
                }
            }
        }
    }
    out
}

/// All `(table, ρ, diagram, diagram)` quadruples with equal counting
/// invariant and unequal enhancement. Records are processed in parallel;
/// output order is record, then involution, then diagram pair.
pub fn find_distinguishing_pairs(records: &[CensusRecord], corpus: &[Diagram]) -> Vec<DistinguishingPair> {
    let tiles = corpus_tiles(corpus, records);
    let plans: BTreeMap<usize, Vec<Vec<LabelingPlan>>> = tiles
        .iter()
        .map(|(&n, tile)| {
            (
                n,
                tile.iter().map(|t| t.iter().map(LabelingPlan::new).collect()).collect(),
            )
        })
        .collect();
    let workers = thread::available_parallelism()
        .map_or(1, |n| n.get())
        .min(records.len().max(1));
    let chunk = records.len().div_ceil(workers).max(1);
    let mut by_chunk: BTreeMap<usize, Vec<DistinguishingPair>> = BTreeMap::new();
    thread::scope(|s| {
        let plans = &plans;
        let handles: Vec<_> = records
            .chunks(chunk)
            .enumerate()
            .map(|(ci, recs)| {
                s.spawn(move || {
                    let found: Vec<DistinguishingPair> = recs
                        .iter()
                        .enumerate()
                        .flat_map(|(k, r)| pairs_for_record(ci * chunk + k, r, &plans[&r.characteristic()]))
                        .collect();
                    (ci, found)
                })
            })
            .collect();
        for h in handles {
            let (ci, found) = h.join().expect("search worker panicked");
            by_chunk.insert(ci, found);
        }
    });
    by_chunk.into_values().flatten().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::examples::{TABLE_3, TABLE_4};

    #[test]
    fn order_one() {
        let all = enumerate_biracks(1, DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(all, vec![BirackTable::trivial(1)]);
    }

    #[test]
    fn order_two_matches_brute_force() {
        let pruned = enumerate_biracks(2, DEFAULT_ORDER_CAP).unwrap();
        let brute = brute_force_biracks(2);
        let a: HashSet<_> = pruned.iter().cloned().collect();
        let b: HashSet<_> = brute.iter().cloned().collect();
        assert_eq!(a.len(), pruned.len(), "duplicates in pruned stream");
        assert_eq!(a, b);
        assert!(pruned.windows(2).all(|w| w[0].entry_vector() < w[1].entry_vector()));
    }

    #[test]
    fn order_one_brute_force() {
        assert_eq!(brute_force_biracks(1), vec![BirackTable::trivial(1)]);
    }

    #[test]
    fn order_three_contains_known_table() {
        let all = enumerate_biracks(3, DEFAULT_ORDER_CAP).unwrap();
        assert!(all.contains(&BirackTable::parse_matrix(TABLE_3).unwrap()));
        assert!(all.iter().all(|t| t.check_axioms().passed()));
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(enumerate_biracks(5, 4), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn isomorphism_filter() {
        let t = BirackTable::parse_matrix(TABLE_4).unwrap();
        let p = Permutation::parse_cycles("(13)(24)", 4).unwrap();
        let u = t.relabel(&p);
        assert_ne!(t, u);
        assert!(u.check_axioms().passed());
        assert_eq!(isomorphism_representatives(&[t.clone(), u]), vec![t]);
    }

    #[test]
    fn no_pairs_from_single_diagram_or_identity() {
        let b = Birack::parse(TABLE_3).unwrap();
        let d = Diagram::parse("O s").unwrap();
        let rec = CensusRecord::new(b.clone());
        assert!(find_distinguishing_pairs(&[rec], std::slice::from_ref(&d)).is_empty());

        let only_id = CensusRecord {
            table: b,
            good_involutions: vec![Permutation::identity(3)],
        };
        let d2 = Diagram::parse("C+ s t t s").unwrap();
        assert!(find_distinguishing_pairs(&[only_id], &[d, d2]).is_empty());
    }

    #[test]
    fn index_file() {
        let recs = census(1, DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(
            census_index(&recs),
            "# index order characteristic good_involutions file\n0 1 1 1 00000.birack\n"
        );
    }
}
