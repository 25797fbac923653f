//! Standard families of involutory virtual biracks.

use super::table::BirackTable;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A finite group given by its Cayley table on `{0..n}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Group {
    n: usize,
    mul: Vec<usize>,
    inv: Vec<usize>,
}

impl Group {
    /// Validates a Cayley table (`mul[a * n + b] = a·b`) and derives inverses.
    pub fn from_cayley(n: usize, mul: Vec<usize>) -> Result<Self> {
        if n == 0 || mul.len() != n * n {
            return Err(Error::NotAGroup(format!("expected {} entries", n * n)));
        }
        if mul.iter().any(|&v| v >= n) {
            return Err(Error::NotAGroup("product outside the set".into()));
        }
        let m = |a: usize, b: usize| mul[a * n + b];
        let e = (0..n)
            .find(|&e| (0..n).all(|x| m(e, x) == x && m(x, e) == x))
            .ok_or_else(|| Error::NotAGroup("no identity".into()))?;
        let mut inv = Vec::with_capacity(n);
        for x in 0..n {
            let y = (0..n)
                .find(|&y| m(x, y) == e && m(y, x) == e)
                .ok_or_else(|| Error::NotAGroup(format!("{} has no inverse", x + 1)))?;
            inv.push(y);
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if m(m(a, b), c) != m(a, m(b, c)) {
                        return Err(Error::NotAGroup(format!(
                            "associativity fails at ({}, {}, {})",
                            a + 1,
                            b + 1,
                            c + 1
                        )));
                    }
                }
            }
        }
        Ok(Self { n, mul, inv })
    }

    /// `Z_n` with element `k` encoding the residue `k`.
    pub fn cyclic(n: usize) -> Self {
        let mul = (0..n * n).map(|k| (k / n + k % n) % n).collect();
        Self::from_cayley(n, mul).expect("cyclic group table is valid")
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }
}

/// Core quandle of a group: `x ⊳̲ y = y x⁻¹ y`, with trivial over and
/// virtual operations.
pub fn core_quandle(g: &Group) -> BirackTable {
    BirackTable::from_fns(g.order(), |x, y| g.mul(g.mul(y, g.inv(x)), y), |x, _| x, |x, _| x)
        .expect("group operations stay in range")
}

/// Virtual Alexander bikei over `Z_m`: `x ⊳̲ y = tx + (1 - st)y`,
/// `x ⊳̄ y = sx`, `x ⊛ y = vx`. Element `k` (0-based) encodes residue `k`.
pub fn alexander_bikei(m: i64, t: i64, s: i64, v: i64) -> Result<BirackTable> {
    if m < 1 {
        return Err(Error::RingRelation(format!("modulus {m} must be positive")));
    }
    let r = |a: i64| a.rem_euclid(m);
    let relations = [
        ("t²≠1", t * t - 1),
        ("s²≠1", s * s - 1),
        ("v²≠1", v * v - 1),
        ("1−s+t−st≠0", 1 - s + t - s * t),
    ];
    if let Some((name, _)) = relations.iter().find(|(_, val)| r(*val) != 0) {
        return Err(Error::RingRelation(format!("{name} mod {m}")));
    }
    let (t, s, v, one_minus_st) = (r(t), r(s), r(v), r(1 - s * t));
    let n = m as usize;
    BirackTable::from_fns(
        n,
        |x, y| r(t * x as i64 + one_minus_st * y as i64) as usize,
        |x, _| r(s * x as i64) as usize,
        |x, _| r(v * x as i64) as usize,
    )
}

/// Constant action table: `x ⊳̲ y = σ(x)`, `x ⊳̄ y = τ(x)`, `x ⊛ y = ν(x)`
/// for pairwise commuting involutions σ, τ, ν.
pub fn constant_action(sigma: &Permutation, tau: &Permutation, nu: &Permutation) -> Result<BirackTable> {
    let n = sigma.len();
    for p in [tau, nu] {
        if p.len() != n {
            return Err(Error::SizeMismatch {
                expected: n,
                found: p.len(),
            });
        }
    }
    let named = [("σ", sigma), ("τ", tau), ("ν", nu)];
    for (name, p) in named {
        if !p.is_involution() {
            return Err(Error::ConstantAction(format!("{name}={p} is not an involution")));
        }
    }
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let (a, p) = named[i];
        let (b, q) = named[j];
        if p.compose(q) != q.compose(p) {
            return Err(Error::ConstantAction(format!("{a},{b} do not commute")));
        }
    }
    BirackTable::from_fns(n, |x, _| sigma.apply(x), |x, _| tau.apply(x), |x, _| nu.apply(x))
}
