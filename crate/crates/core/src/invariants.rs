//! The integral counting invariant and its symmetric enhancement.
//!
//! Labeling counts depend on the framing of each component only modulo the
//! characteristic `N`, so one diagram per class in `Z_N^c` (the framing tile)
//! suffices. The enhancement replaces each labeling count by a sum of
//! `u^(class size)` over ρ-equivalence classes of labelings.

use std::collections::{BTreeMap, HashMap};
use std::fmt::{self, Write as _};
use std::str::FromStr;

use crate::algebra::Birack;
use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::labeling::{count_labelings, enumerate_labelings, Labeling};
use crate::perm::Permutation;

/// Per-component framing residues modulo the characteristic.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FramingVector(pub Vec<usize>);

impl fmt::Display for FramingVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A polynomial in `u` with nonnegative integer coefficients and positive
/// exponents.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct InvariantPolynomial {
    terms: BTreeMap<u32, u64>,
}

impl InvariantPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (u32, u64)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exponent: u32, coefficient: u64) {
        assert!(exponent >= 1, "exponents start at 1");
        if coefficient > 0 {
            *self.terms.entry(exponent).or_insert(0) += coefficient;
        }
    }

    pub fn add(&mut self, other: &InvariantPolynomial) {
        for (&e, &c) in &other.terms {
            self.add_term(e, c);
        }
    }

    pub fn terms(&self) -> &BTreeMap<u32, u64> {
        &self.terms
    }

    pub fn coefficient(&self, exponent: u32) -> u64 {
        self.terms.get(&exponent).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Value at `u = 1`: the number of ρ-classes.
    pub fn eval_at_one(&self) -> u64 {
        self.terms.values().sum()
    }

    /// Derivative at `u = 1`, `Σ exponent·coefficient`: the number of
    /// labelings, so the enhancement recovers the counting invariant.
    pub fn derivative_at_one(&self) -> u64 {
        self.terms.iter().map(|(&e, &c)| u64::from(e) * c).sum()
    }
}

/// Ascending exponents, `u` for `u^1`, unit coefficients suppressed, `0` for
/// the empty polynomial: `4u+4u^2+u^4`.
pub fn format_polynomial(p: &InvariantPolynomial) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (&e, &c)) in p.terms.iter().enumerate() {
        if i > 0 {
            out.push('+');
        }
        if c != 1 {
            let _ = write!(out, "{c}");
        }
        out.push('u');
        if e != 1 {
            let _ = write!(out, "^{e}");
        }
    }
    out
}

impl fmt::Display for InvariantPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_polynomial(self))
    }
}

impl FromStr for InvariantPolynomial {
    type Err = Error;

    /// Accepts sums of terms `c`, `cu`, `u^e`, `cu^e` in any order.
    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::Polynomial(s.clone());
        if s == "0" {
            return Ok(Self::zero());
        }
        let mut p = Self::zero();
        for term in s.split('+') {
            let (coef, rest) = match term.find('u') {
                Some(i) => (&term[..i], &term[i + 1..]),
                None => return Err(bad()),
            };
            let c = if coef.is_empty() {
                1
            } else {
                coef.parse().map_err(|_| bad())?
            };
            let e = match rest.strip_prefix('^') {
                Some(e) => e.parse().map_err(|_| bad())?,
                None if rest.is_empty() => 1,
                None => return Err(bad()),
            };
            if e == 0 {
                return Err(bad());
            }
            p.add_term(e, c);
        }
        Ok(p)
    }
}

/// One diagram per framing class in `Z_N^c`, keyed by its framing vector.
/// The entry whose key is the diagram's own self-writhe modulo `N` is the
/// input diagram itself.
pub fn framing_tile(d: &Diagram, b: &Birack) -> BTreeMap<FramingVector, Diagram> {
    let n = b.characteristic();
    let c = d.component_count();
    let v: Vec<usize> = d
        .self_writhe()
        .iter()
        .map(|&w| w.rem_euclid(n as i64) as usize)
        .collect();

    let mut tile = BTreeMap::new();
    let mut w = vec![0usize; c];
    loop {
        let mut diagram = d.clone();
        for k in 0..c {
            for _ in 0..(w[k] + n - v[k]) % n {
                diagram = diagram.add_positive_kink(k).expect("component index in range");
            }
        }
        tile.insert(FramingVector(w.clone()), diagram);

        let mut k = c;
        loop {
            if k == 0 {
                return tile;
            }
            k -= 1;
            w[k] += 1;
            if w[k] < n {
                break;
            }
            w[k] = 0;
        }
    }
}

/// Sum of labeling counts over the framing tile.
pub fn counting_invariant(d: &Diagram, b: &Birack) -> u64 {
    framing_tile(d, b)
        .values()
        .map(|fd| count_labelings(fd, b) as u64)
        .sum()
}

/// ρ-equivalence classes of a set of labelings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RhoPartition {
    pub classes: Vec<Vec<Labeling>>,
}

impl RhoPartition {
    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    pub fn polynomial(&self) -> InvariantPolynomial {
        let mut p = InvariantPolynomial::zero();
        for class in &self.classes {
            p.add_term(class.len() as u32, 1);
        }
        p
    }
}

/// Partitions labelings into ρ-equivalence classes: two labelings are
/// equivalent iff at every semiarc their labels agree or differ by ρ.
///
/// Since ρ is an involution, that holds iff both labelings have the same
/// ⟨ρ⟩-orbit at every semiarc, so classes are found by grouping on the
/// per-semiarc orbit representative `min(x, ρ(x))`. Classes are sorted
/// internally and ordered by least member.
pub fn rho_classes(labelings: &[Labeling], r: &Permutation) -> RhoPartition {
    let mut groups: HashMap<Vec<usize>, Vec<Labeling>> = HashMap::new();
    for l in labelings {
        let key = l.values().iter().map(|&x| x.min(r.apply(x))).collect();
        groups.entry(key).or_default().push(l.clone());
    }
    let mut classes: Vec<Vec<Labeling>> = groups
        .into_values()
        .map(|mut c| {
            c.sort();
            c
        })
        .collect();
    classes.sort();
    RhoPartition { classes }
}

/// Labelings and their ρ-classes for one framing of the tile.
#[derive(Debug, Clone)]
pub struct FramingEntry {
    pub framing: FramingVector,
    pub diagram: Diagram,
    pub labelings: Vec<Labeling>,
    pub partition: RhoPartition,
}

impl FramingEntry {
    pub fn count(&self) -> usize {
        self.labelings.len()
    }

    pub fn contribution(&self) -> InvariantPolynomial {
        self.partition.polynomial()
    }
}

/// Full per-framing breakdown of the symmetric enhancement.
#[derive(Debug, Clone)]
pub struct EnhancementReport {
    pub rho: Permutation,
    pub entries: Vec<FramingEntry>,
}

impl EnhancementReport {
    pub fn phi_z(&self) -> u64 {
        self.entries.iter().map(|e| e.count() as u64).sum()
    }

    pub fn phi_rho(&self) -> InvariantPolynomial {
        let mut p = InvariantPolynomial::zero();
        for e in &self.entries {
            p.add(&e.contribution());
        }
        p
    }

    /// `w=(..) : <poly> (<count> labelings)` lines followed by the totals.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            let _ = writeln!(out, "w={} : {} ({} labelings)", e.framing, e.contribution(), e.count());
        }
        let _ = writeln!(out, "Phi_Z = {}", self.phi_z());
        let _ = writeln!(out, "Phi_rho = {}", self.phi_rho());
        out
    }

    /// Flat `key=value` lines with keys framing, poly, count, phi_z, phi_rho.
    pub fn to_key_value(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            let _ = writeln!(out, "framing={}", e.framing);
            let _ = writeln!(out, "poly={}", e.contribution());
            let _ = writeln!(out, "count={}", e.count());
        }
        let _ = writeln!(out, "phi_z={}", self.phi_z());
        let _ = writeln!(out, "phi_rho={}", self.phi_rho());
        out
    }
}

fn require_good(b: &Birack, r: &Permutation) -> Result<()> {
    if b.is_good_involution(r)? {
        Ok(())
    } else {
        Err(Error::NotGoodInvolution(r.to_string()))
    }
}

/// Enumerates labelings for every framing in the tile and partitions them.
pub fn enhancement_report(d: &Diagram, b: &Birack, r: &Permutation) -> Result<EnhancementReport> {
    require_good(b, r)?;
    let entries = framing_tile(d, b)
        .into_iter()
        .map(|(framing, diagram)| {
            let labelings = enumerate_labelings(&diagram, b);
            let partition = rho_classes(&labelings, r);
            FramingEntry {
                framing,
                diagram,
                labelings,
                partition,
            }
        })
        .collect();
    Ok(EnhancementReport {
        rho: r.clone(),
        entries,
    })
}

/// `Σ_w Σ_{classes} u^{|class|}` over the framing tile.
pub fn symmetric_enhancement(d: &Diagram, b: &Birack, r: &Permutation) -> Result<InvariantPolynomial> {
    Ok(enhancement_report(d, b, r)?.phi_rho())
}
