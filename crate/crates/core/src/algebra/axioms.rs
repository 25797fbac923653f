use std::fmt;

use super::table::BirackTable;

/// Axiom families checked by [`BirackTable::check_axioms`], in report order.
pub const AXIOM_IDS: [&str; 19] = [
    "f-bijective",
    "i.1",
    "i.2",
    "ii.alpha-involution",
    "ii.beta-involution",
    "ii.v-involution",
    "ii.alpha-mixed",
    "ii.beta-mixed",
    "ii.v-mixed",
    "ii.S-bijective",
    "ii.V-bijective",
    "iii.1",
    "iii.2",
    "iii.3",
    "iii.4",
    "iii.5",
    "iii.6",
    "iii.7",
    // not an axiom: the kink map could not be formed, so (i) was skipped
    "i.skipped",
];

/// First counterexample to one axiom family. Witness elements are 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub axiom: &'static str,
    pub witness: Vec<usize>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const NAMES: [&str; 3] = ["x", "y", "z"];
        let parts: Vec<String> = self
            .witness
            .iter()
            .zip(NAMES)
            .map(|(v, name)| format!("{name}={}", v + 1))
            .collect();
        if parts.is_empty() {
            return write!(f, "{} (no kink map)", self.axiom);
        }
        write!(f, "{} at ({})", self.axiom, parts.join(", "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AxiomReport {
    pub violations: Vec<Violation>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn failed(&self, axiom: &str) -> bool {
        self.violations.iter().any(|v| v.axiom == axiom)
    }
}

/// Evaluates one exchange law at `(x, y, z)`, returning `(lhs, rhs)`.
///
/// The laws are numbered 1..=7 in the order they are usually displayed.
pub fn exchange_law(t: &BirackTable, law: usize, x: usize, y: usize, z: usize) -> (usize, usize) {
    let (u, o, v) = (|a, b| t.under(a, b), |a, b| t.over(a, b), |a, b| t.virt(a, b));
    match law {
        1 => (o(o(x, y), o(z, y)), o(o(x, z), u(y, z))),
        2 => (u(o(x, y), o(z, y)), o(u(x, z), u(y, z))),
        3 => (u(u(x, y), u(z, y)), u(u(x, z), o(y, z))),
        4 => (v(v(x, y), v(z, y)), v(v(x, z), v(y, z))),
        5 => (v(o(x, y), v(z, y)), o(v(x, z), v(y, z))),
        6 => (v(v(x, y), o(z, y)), v(v(x, z), u(y, z))),
        7 => (v(u(x, y), v(z, y)), u(v(x, z), v(y, z))),
        _ => panic!("exchange law index {law} out of range 1..=7"),
    }
}

fn first_pair(n: usize, mut bad: impl FnMut(usize, usize) -> bool) -> Option<Vec<usize>> {
    (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .find(|&(x, y)| bad(x, y))
        .map(|(x, y)| vec![x, y])
}

/// First pair whose image under `map` was already produced by an earlier pair.
fn first_collision(n: usize, map: impl Fn(usize, usize) -> (usize, usize)) -> Option<Vec<usize>> {
    let mut hit = vec![false; n * n];
    first_pair(n, |x, y| {
        let (a, b) = map(x, y);
        std::mem::replace(&mut hit[a * n + b], true)
    })
}

impl BirackTable {
    /// Exhaustively checks every involutory virtual birack axiom, recording
    /// the lexicographically first witness of each failing family.
    pub fn check_axioms(&self) -> AxiomReport {
        let n = self.order();
        let mut violations = Vec::new();
        let mut push = |axiom: &'static str, w: Option<Vec<usize>>| {
            if let Some(witness) = w {
                violations.push(Violation { axiom, witness });
            }
        };

        // (i), with pi derived from f and g
        match self.kink_map() {
            Ok(pi) => {
                push(
                    "i.1",
                    (0..n)
                        .find(|&x| self.over(pi.apply(x), x) != self.under(x, pi.apply(x)))
                        .map(|x| vec![x]),
                );
                push(
                    "i.2",
                    (0..n)
                        .find(|&x| pi.apply(self.over(x, x)) != self.under(x, x))
                        .map(|x| vec![x]),
                );
            }
            Err(_) => {
                let f = self.over_diagonal();
                push("f-bijective", first_pair(n, |x, y| x < y && f[x] == f[y]));
                push("i.skipped", Some(vec![]));
            }
        }

        // (ii): column maps are involutions
        push(
            "ii.alpha-involution",
            first_pair(n, |x, y| self.over(self.over(x, y), y) != x),
        );
        push(
            "ii.beta-involution",
            first_pair(n, |x, y| self.under(self.under(x, y), y) != x),
        );
        push(
            "ii.v-involution",
            first_pair(n, |x, y| self.virt(self.virt(x, y), y) != x),
        );

        // (ii): mixed identities
        push(
            "ii.alpha-mixed",
            first_pair(n, |x, y| self.over(x, y) != self.over(x, self.under(y, x))),
        );
        push(
            "ii.beta-mixed",
            first_pair(n, |x, y| self.under(x, y) != self.under(x, self.over(y, x))),
        );
        push(
            "ii.v-mixed",
            first_pair(n, |x, y| self.virt(x, y) != self.virt(x, self.virt(y, x))),
        );

        // (ii): S and V bijective on pairs
        push(
            "ii.S-bijective",
            first_collision(n, |x, y| (self.over(y, x), self.under(x, y))),
        );
        push(
            "ii.V-bijective",
            first_collision(n, |x, y| (self.virt(y, x), self.virt(x, y))),
        );

        // (iii)
        const LAW_IDS: [&str; 7] = ["iii.1", "iii.2", "iii.3", "iii.4", "iii.5", "iii.6", "iii.7"];
        for (k, id) in LAW_IDS.iter().enumerate() {
            let witness = (0..n)
                .flat_map(|x| (0..n).flat_map(move |y| (0..n).map(move |z| (x, y, z))))
                .find(|&(x, y, z)| {
                    let (l, r) = exchange_law(self, k + 1, x, y, z);
                    l != r
                })
                .map(|(x, y, z)| vec![x, y, z]);
            push(id, witness);
        }

        AxiomReport { violations }
    }
}
