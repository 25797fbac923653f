//! Finite involutory virtual biracks: operation tables, axiom checking,
//! kink maps, good involutions and homomorphisms.

mod axioms;
mod constructors;
pub mod examples;
mod table;

use std::ops::Deref;

pub use axioms::{exchange_law, AxiomReport, Violation, AXIOM_IDS};
pub use constructors::{alexander_bikei, constant_action, core_quandle, Group};
pub use table::{BirackTable, Op};

use crate::error::{Error, Result};
use crate::perm::{enumerate_involutions, Permutation};

/// A table that has passed [`BirackTable::check_axioms`], together with its
/// kink map and characteristic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Birack {
    table: BirackTable,
    kink: Permutation,
    characteristic: usize,
}

impl Birack {
    /// Checks the axioms; on failure the full report is returned.
    pub fn verify(table: BirackTable) -> std::result::Result<Self, AxiomReport> {
        let report = table.check_axioms();
        if !report.passed() {
            return Err(report);
        }
        let kink = table.kink_map().expect("axioms imply a kink map");
        let characteristic = kink.order();
        Ok(Self {
            table,
            kink,
            characteristic,
        })
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::verify(BirackTable::parse_matrix(text)?).map_err(|_| Error::AxiomsFailed)
    }

    pub fn kink(&self) -> &Permutation {
        &self.kink
    }

    pub fn characteristic(&self) -> usize {
        self.characteristic
    }

    pub fn table(&self) -> &BirackTable {
        &self.table
    }

    pub fn into_table(self) -> BirackTable {
        self.table
    }
}

impl Deref for Birack {
    type Target = BirackTable;

    fn deref(&self) -> &BirackTable {
        &self.table
    }
}

impl std::fmt::Debug for Birack {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Birack(pi={}, N={})\n{}",
            self.kink,
            self.characteristic,
            self.table.to_matrix_string()
        )
    }
}

impl BirackTable {
    /// True iff `r` is an involution with `r(x)*y = r(x*y)` and
    /// `x*r(y) = x*y` for all three operations.
    pub fn is_good_involution(&self, r: &Permutation) -> Result<bool> {
        let n = self.order();
        if r.len() != n {
            return Err(Error::SizeMismatch {
                expected: n,
                found: r.len(),
            });
        }
        if !r.is_involution() {
            return Ok(false);
        }
        Ok(Op::ALL.iter().all(|&op| {
            (0..n).all(|x| {
                (0..n).all(|y| {
                    let xy = self.op(op, x, y);
                    self.op(op, r.apply(x), y) == r.apply(xy) && self.op(op, x, r.apply(y)) == xy
                })
            })
        }))
    }

    /// All good involutions, identity included, in lexicographic order of
    /// their image sequences.
    pub fn enumerate_good_involutions(&self) -> Vec<Permutation> {
        enumerate_involutions(self.order())
            .into_iter()
            .filter(|r| self.is_good_involution(r).expect("sizes agree"))
            .collect()
    }
}

/// True iff `map(x * y) = map(x) * map(y)` for every pair and operation.
/// `map` holds 0-based images of `0..src.order()`.
pub fn is_homomorphism(src: &BirackTable, dst: &BirackTable, map: &[usize]) -> Result<bool> {
    let n = src.order();
    if map.len() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            found: map.len(),
        });
    }
    if let Some((index, &value)) = map.iter().enumerate().find(|(_, &v)| v >= dst.order()) {
        return Err(Error::MapOutOfRange {
            index: index + 1,
            value: value + 1,
            bound: dst.order(),
        });
    }
    Ok(Op::ALL
        .iter()
        .all(|&op| (0..n).all(|x| (0..n).all(|y| map[src.op(op, x, y)] == dst.op(op, map[x], map[y])))))
}

#[cfg(test)]
mod tests {
    use super::examples::*;
    use super::*;

    fn table3() -> Birack {
        Birack::parse(TABLE_3).unwrap()
    }

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(s, n).unwrap()
    }

    #[test]
    fn order_3_good_involutions() {
        let t = table3();
        assert!(t.is_good_involution(&p("(23)", 3)).unwrap());
        assert!(t.is_good_involution(&Permutation::identity(3)).unwrap());
        let all = t.enumerate_good_involutions();
        assert!(all.contains(&Permutation::identity(3)));
        assert!(all.contains(&p("(23)", 3)));
    }

    // Oracle: evaluate both good-involution conditions on all 16 pairs for
    // each operation, independently of is_good_involution.
    #[test]
    fn order_4_transposition_12() {
        let t = Birack::parse(TABLE_4).unwrap();
        let r = [1usize, 0, 2, 3];
        let mut ok = true;
        for op in Op::ALL {
            for x in 0..4 {
                for y in 0..4 {
                    ok &= t.op(op, r[x], y) == r[t.op(op, x, y)];
                    ok &= t.op(op, x, r[y]) == t.op(op, x, y);
                }
            }
        }
        assert_eq!(t.is_good_involution(&p("(12)", 4)).unwrap(), ok);
        // x ⊳̲ 1 vs x ⊳̲ 2 differ in row 3, so (12) cannot be good
        assert!(!ok);
        assert!(t.enumerate_good_involutions().contains(&p("(34)", 4)));
    }

    #[test]
    fn trivial_table_accepts_every_involution() {
        for n in 1..=5 {
            let t = BirackTable::trivial(n);
            assert_eq!(t.enumerate_good_involutions(), enumerate_involutions(n));
        }
    }

    #[test]
    fn good_involution_size_mismatch() {
        assert!(table3().is_good_involution(&Permutation::identity(4)).is_err());
    }

    #[test]
    fn non_involution_is_not_good() {
        assert!(!BirackTable::trivial(3).is_good_involution(&p("(123)", 3)).unwrap());
    }

    #[test]
    fn homomorphisms_of_order_3_table() {
        let t = table3();
        assert!(is_homomorphism(&t, &t, p("(23)", 3).images()).unwrap());
        assert!(is_homomorphism(&t, &t, &[0, 1, 2]).unwrap());
        let diagonal_fixed = Op::ALL.iter().all(|&op| t.op(op, 1, 1) == 1);
        assert_eq!(is_homomorphism(&t, &t, &[1, 1, 1]).unwrap(), diagonal_fixed);
        assert!(!diagonal_fixed);
        assert!(matches!(
            is_homomorphism(&t, &t, &[0, 1, 3]),
            Err(Error::MapOutOfRange { .. })
        ));
    }

    #[test]
    fn verify_rejects_bad_tables() {
        let t = BirackTable::from_fns(2, |_, _| 0, |x, _| x, |x, _| x).unwrap();
        let report = Birack::verify(t).unwrap_err();
        assert!(!report.passed());
    }
}
