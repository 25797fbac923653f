//! Table sets, diagram builders and property checks shared by the
//! integration tests.
#![allow(dead_code)]

use birack_core::algebra::examples::{TABLE_3, TABLE_4};
use birack_core::algebra::{alexander_bikei, constant_action, core_quandle, is_homomorphism, Group};
use birack_core::census::enumerate_biracks;
use birack_core::diagram::{CrossingKind, Item, KinkChirality};
use birack_core::invariants::{counting_invariant, symmetric_enhancement, InvariantPolynomial};
use birack_core::labeling::count_labelings;
use birack_core::perm::enumerate_involutions;
use birack_core::{Birack, BirackTable, Diagram, Permutation};

pub type Check = Result<(), String>;

pub fn table3() -> Birack {
    Birack::parse(TABLE_3).unwrap()
}

pub fn table4() -> Birack {
    Birack::parse(TABLE_4).unwrap()
}

/// Every table of order `1..=max_order`.
pub fn census_tables(max_order: usize) -> Vec<Birack> {
    (1..=max_order)
        .flat_map(|n| enumerate_biracks(n, 4).unwrap())
        .map(|t| Birack::verify(t).unwrap())
        .collect()
}

fn s3() -> Group {
    let perms = ["()", "(12)", "(13)", "(23)", "(123)", "(132)"].map(|c| Permutation::parse_cycles(c, 3).unwrap());
    let index = |p: &Permutation| perms.iter().position(|q| q == p).unwrap();
    let mul = perms
        .iter()
        .flat_map(|a| perms.iter().map(|b| index(&a.compose(b))))
        .collect();
    Group::from_cayley(6, mul).unwrap()
}

fn klein() -> Group {
    Group::from_cayley(4, (0..4).flat_map(|a| (0..4).map(move |b| a ^ b)).collect()).unwrap()
}

/// Core quandles, Alexander bikei and constant actions of small order.
pub fn constructor_tables() -> Vec<Birack> {
    let mut out = Vec::new();
    let groups: Vec<Group> = (1..=6).map(Group::cyclic).chain([klein(), s3()]).collect();
    for g in &groups {
        out.push(core_quandle(g));
    }
    for m in 2..=8i64 {
        for t in 0..m {
            for s in 0..m {
                for v in 0..m {
                    if let Ok(table) = alexander_bikei(m, t, s, v) {
                        out.push(table);
                    }
                }
            }
        }
    }
    let inv: Vec<Permutation> = enumerate_involutions(4);
    for a in &inv {
        for b in &inv {
            for c in &inv {
                if let Ok(table) = constant_action(a, b, c) {
                    out.push(table);
                }
            }
        }
    }
    out.into_iter().map(|t| Birack::verify(t).unwrap()).collect()
}

fn pi_identities(t: &BirackTable, pi: &Permutation) -> Check {
    let n = t.order();
    for x in 0..n {
        for y in 0..n {
            let px = pi.apply(x);
            let laws = [
                ("y over x = y over pi(x)", t.over(y, x), t.over(y, px)),
                ("pi(x under y) = pi(x) under y", pi.apply(t.under(x, y)), t.under(px, y)),
                ("y under x = y under pi(x)", t.under(y, x), t.under(y, px)),
                ("pi(x over y) = pi(x) over y", pi.apply(t.over(x, y)), t.over(px, y)),
                ("y virt x = y virt pi(x)", t.virt(y, x), t.virt(y, px)),
                ("pi(x virt y) = pi(x) virt y", pi.apply(t.virt(x, y)), t.virt(px, y)),
            ];
            for (name, l, r) in laws {
                if l != r {
                    return Err(format!("{name} fails at x={}, y={}", x + 1, y + 1));
                }
            }
        }
    }
    Ok(())
}

/// Any expression tree with leftmost leaf `x` is a left-nested chain
/// `x * a1 * a2 ...` whose right operands are arbitrary elements, so chains
/// over all operand values cover every tree of the given depth.
fn strand_propagation(t: &BirackTable, r: &Permutation, depth: usize) -> Check {
    let n = t.order();
    fn walk(t: &BirackTable, r: &Permutation, depth: usize, w: usize, rw: usize) -> bool {
        if rw != r.apply(w) {
            return false;
        }
        if depth == 0 {
            return true;
        }
        (0..t.order()).all(|a| {
            birack_core::algebra::Op::ALL
                .iter()
                .all(|&op| walk(t, r, depth - 1, t.op(op, w, a), t.op(op, rw, a)))
        })
    }
    match (0..n).find(|&x| !walk(t, r, depth, x, r.apply(x))) {
        Some(x) => Err(format!("strand propagation fails from x={} under rho={r}", x + 1)),
        None => Ok(()),
    }
}

/// Structural properties of the kink map and good involutions.
pub fn structural_properties(b: &Birack) -> Check {
    let t = b.table();
    let pi = b.kink();
    pi_identities(t, pi)?;
    if pi.is_involution() && !b.is_good_involution(pi).unwrap() {
        return Err(format!("pi={pi} is an involution but not good"));
    }
    if !is_homomorphism(t, t, pi.images()).unwrap() {
        return Err(format!("pi={pi} is not a homomorphism"));
    }
    for r in b.enumerate_good_involutions() {
        if pi.compose(&r) != r.compose(pi) {
            return Err(format!("pi={pi} and rho={r} do not commute"));
        }
        if !is_homomorphism(t, t, r.images()).unwrap() {
            return Err(format!("rho={r} is not a homomorphism"));
        }
        strand_propagation(t, &r, 3)?;
    }
    Ok(())
}

fn fail(b: &Birack, d: &Diagram, what: String) -> String {
    format!("{what} for {} on table\n{}", d.name(), b.to_matrix_string())
}

/// Recovery of the counting invariant, the identity involution and
/// fixed-point-free involutions. For a fixed-point-free ρ every component
/// flips independently, so each class of a c-component diagram has 2^c
/// members.
pub fn enhancement_laws(b: &Birack, d: &Diagram) -> Check {
    let z = counting_invariant(d, b);
    for r in b.enumerate_good_involutions() {
        let p = symmetric_enhancement(d, b, &r).unwrap();
        if p.derivative_at_one() != z {
            return Err(fail(
                b,
                d,
                format!("Phi_rho'(1)={} but Phi_Z={z} (rho={r})", p.derivative_at_one()),
            ));
        }
        if r.is_identity() && p != InvariantPolynomial::from_terms([(1, z)]) {
            return Err(fail(b, d, format!("rho=() gives {p}, Phi_Z={z}")));
        }
        if r.fixed_points() == 0 && z > 0 {
            let size = 1u64 << d.component_count();
            let expected = InvariantPolynomial::from_terms([(size as u32, z / size)]);
            if !z.is_multiple_of(size) || p != expected {
                return Err(fail(b, d, format!("fixed-point-free rho={r} gives {p}, Phi_Z={z}")));
            }
        }
    }
    Ok(())
}

/// Kink position and chirality do not change labeling counts, and N extra
/// kinks on one component leave the count unchanged.
pub fn kink_laws(b: &Birack, d: &Diagram) -> Check {
    for k in 0..d.component_count() {
        let canonical = count_labelings(&d.add_positive_kink(k).unwrap(), b);
        for s in d.components()[k].iter() {
            for chirality in [KinkChirality::UnderFirst, KinkChirality::OverFirst] {
                let c = count_labelings(&d.add_kink_at(s, chirality).unwrap(), b);
                if c != canonical {
                    return Err(fail(
                        b,
                        d,
                        format!("kink at {s} ({chirality:?}) gives {c}, canonical {canonical}"),
                    ));
                }
            }
        }
        let mut cord = d.clone();
        for _ in 0..b.characteristic() {
            cord = cord.add_positive_kink(k).unwrap();
        }
        let (before, after) = (count_labelings(d, b), count_labelings(&cord, b));
        if before != after {
            return Err(fail(
                b,
                d,
                format!("{} kinks on component {k}: {before} -> {after}", b.characteristic()),
            ));
        }
    }
    Ok(())
}

/// Reversing any one component leaves the labeling count unchanged.
pub fn orientation_law(b: &Birack, d: &Diagram) -> Check {
    let before = count_labelings(d, b);
    for k in 0..d.component_count() {
        let after = count_labelings(&d.reverse_component(k).unwrap(), b);
        if before != after {
            return Err(fail(b, d, format!("reversing component {k}: {before} -> {after}")));
        }
    }
    Ok(())
}

/// Braid generator: `Over(i)` and `Under(i)` cross strands `i` and `i+1`
/// with the left strand passing over or under, `Virt(i)` virtually.
#[derive(Debug, Clone, Copy)]
pub enum Gen {
    Over(usize),
    Under(usize),
    Virt(usize),
}

/// Closure of a braid word on `strands` strands.
pub fn braid_closure(name: &str, strands: usize, word: &[Gen]) -> Diagram {
    let initial: Vec<String> = (0..strands).map(|p| format!("p{p}_0")).collect();
    let mut cur = initial.clone();
    let mut fresh = 0;
    let mut next = |p: usize| {
        fresh += 1;
        format!("p{p}_{fresh}")
    };
    let mut crossings: Vec<(CrossingKind, [String; 4])> = Vec::new();
    for &g in word {
        let (i, kind, left_under) = match g {
            Gen::Over(i) => (i, CrossingKind::Negative, false),
            Gen::Under(i) => (i, CrossingKind::Positive, true),
            Gen::Virt(i) => (i, CrossingKind::Virtual, true),
        };
        let (l_in, r_in) = (cur[i].clone(), cur[i + 1].clone());
        let (l_out, r_out) = (next(i + 1), next(i));
        let slots = if left_under {
            [l_in, l_out.clone(), r_in, r_out.clone()]
        } else {
            [r_in, r_out.clone(), l_in, l_out.clone()]
        };
        crossings.push((kind, slots));
        cur[i] = r_out;
        cur[i + 1] = l_out;
    }
    // close the braid: the last segment at each position is the first
    let alias = |s: &String| match cur.iter().position(|c| c == s) {
        Some(p) => initial[p].clone(),
        None => s.clone(),
    };
    let mut items: Vec<Item> = crossings
        .iter()
        .map(|(kind, slots)| Item::Crossing {
            kind: *kind,
            slots: slots.each_ref().map(alias),
        })
        .collect();
    for name in &initial {
        if !items
            .iter()
            .any(|it| matches!(it, Item::Crossing { slots, .. } if slots.contains(name)))
        {
            items.push(Item::Loop(name.clone()));
        }
    }
    Diagram::new(name, items).unwrap()
}

/// Diagram pairs differing by one move of type II, III, vII or vIII, each
/// set inside a few braid contexts.
pub fn move_pairs() -> Vec<(String, Diagram, Diagram)> {
    use Gen::*;
    let moves: [(&str, Vec<Gen>, Vec<Gen>); 6] = [
        ("II", vec![Over(0), Under(0)], vec![]),
        ("II'", vec![Under(1), Over(1)], vec![]),
        (
            "III",
            vec![Under(0), Under(1), Under(0)],
            vec![Under(1), Under(0), Under(1)],
        ),
        ("III'", vec![Over(0), Over(1), Over(0)], vec![Over(1), Over(0), Over(1)]),
        ("vII", vec![Virt(0), Virt(0)], vec![]),
        ("vIII", vec![Virt(0), Virt(1), Virt(0)], vec![Virt(1), Virt(0), Virt(1)]),
    ];
    let contexts: [(Vec<Gen>, Vec<Gen>); 4] = [
        (vec![], vec![]),
        (vec![Under(0)], vec![Over(1)]),
        (vec![Virt(1)], vec![Under(0), Under(1)]),
        (vec![Over(1), Virt(0)], vec![Under(0)]),
    ];
    let mut out = Vec::new();
    for (name, before, after) in &moves {
        for (k, (pre, post)) in contexts.iter().enumerate() {
            let word = |m: &[Gen]| [pre.as_slice(), m, post.as_slice()].concat();
            let label = format!("{name} in context {k}");
            out.push((
                label.clone(),
                braid_closure(&format!("{label} before"), 3, &word(before)),
                braid_closure(&format!("{label} after"), 3, &word(after)),
            ));
        }
    }
    out
}

pub fn move_invariance(b: &Birack, pairs: &[(String, Diagram, Diagram)]) -> Check {
    for (name, before, after) in pairs {
        let (x, y) = (count_labelings(before, b), count_labelings(after, b));
        if x != y {
            return Err(format!(
                "{name}: {x} vs {y} labelings on table\n{}",
                b.to_matrix_string()
            ));
        }
    }
    Ok(())
}

/// Runs `check` over `items` and returns the first failure.
pub fn all<T>(items: impl IntoIterator<Item = T>, check: impl FnMut(T) -> Check) -> Check {
    items.into_iter().try_for_each(check)
}
