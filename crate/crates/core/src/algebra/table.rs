use std::fmt;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// One of the three binary operations of an involutory virtual birack.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Op {
    /// `x ⊳̲ y`: the label an under-strand picks up passing under `y`.
    Under,
    /// `x ⊳̄ y`: the label an over-strand picks up passing over `y`.
    Over,
    /// `x ⊛ y`: the label a strand picks up at a virtual crossing with `y`.
    Virtual,
}

impl Op {
    pub const ALL: [Op; 3] = [Op::Under, Op::Over, Op::Virtual];

    pub fn symbol(self) -> &'static str {
        match self {
            Op::Under => "under",
            Op::Over => "over",
            Op::Virtual => "virtual",
        }
    }
}

/// Operation tables of a finite involutory virtual birack candidate on
/// `{1..n}`.
///
/// Entries are stored 0-based and row-major: `under[x * n + y] = x ⊳̲ y`.
/// A table is only a birack once [`check_axioms`](Self::check_axioms) passes;
/// see [`Birack`](super::Birack) for the verified form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BirackTable {
    n: usize,
    under: Vec<usize>,
    over: Vec<usize>,
    virt: Vec<usize>,
}

impl BirackTable {
    /// Builds a table from three 0-based row-major blocks.
    pub fn from_blocks(n: usize, under: Vec<usize>, over: Vec<usize>, virt: Vec<usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::MalformedMatrix("empty table".into()));
        }
        for (name, block) in [("under", &under), ("over", &over), ("virtual", &virt)] {
            if block.len() != n * n {
                return Err(Error::MalformedMatrix(format!(
                    "{name} block has {} entries, expected {}",
                    block.len(),
                    n * n
                )));
            }
            if let Some(pos) = block.iter().position(|&v| v >= n) {
                return Err(Error::MalformedMatrix(format!(
                    "{name} entry ({},{}) = {} outside 1..{n}",
                    pos / n + 1,
                    pos % n + 1,
                    block[pos] + 1
                )));
            }
        }
        Ok(Self { n, under, over, virt })
    }

    /// Builds a table from closures on 0-based elements.
    pub fn from_fns(
        n: usize,
        under: impl Fn(usize, usize) -> usize,
        over: impl Fn(usize, usize) -> usize,
        virt: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let grid = |f: &dyn Fn(usize, usize) -> usize| -> Vec<usize> { (0..n * n).map(|k| f(k / n, k % n)).collect() };
        Self::from_blocks(n, grid(&under), grid(&over), grid(&virt))
    }

    /// The table in which every operation returns its left operand.
    pub fn trivial(n: usize) -> Self {
        Self::from_fns(n, |x, _| x, |x, _| x, |x, _| x).expect("trivial table is well formed")
    }

    /// Parses the `n × 3n` block matrix (blocks ordered under | over |
    /// virtual, entries 1-based). Lines starting with `#` and blank lines are
    /// ignored.
    pub fn parse_matrix(text: &str) -> Result<Self> {
        let rows: Vec<Vec<&str>> = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(|l| l.split_whitespace().collect())
            .collect();
        let n = rows.len();
        if n == 0 {
            return Err(Error::MalformedMatrix("no rows".into()));
        }
        let mut blocks = [
            Vec::with_capacity(n * n),
            Vec::with_capacity(n * n),
            Vec::with_capacity(n * n),
        ];
        for (i, row) in rows.iter().enumerate() {
            if row.len() != 3 * n {
                return Err(Error::MalformedMatrix(format!(
                    "row {} has {} entries, expected {} for {n} rows",
                    i + 1,
                    row.len(),
                    3 * n
                )));
            }
            for (j, tok) in row.iter().enumerate() {
                let v: usize = tok
                    .parse()
                    .map_err(|_| Error::MalformedMatrix(format!("row {}: bad entry {tok:?}", i + 1)))?;
                if v == 0 || v > n {
                    return Err(Error::MalformedMatrix(format!(
                        "row {}, column {}: entry {v} outside 1..{n}",
                        i + 1,
                        j + 1
                    )));
                }
                blocks[j / n].push(v - 1);
            }
        }
        let [under, over, virt] = blocks;
        Self::from_blocks(n, under, over, virt)
    }

    /// Renders the block matrix in the format accepted by
    /// [`parse_matrix`](Self::parse_matrix).
    pub fn to_matrix_string(&self) -> String {
        let n = self.n;
        let mut out = String::new();
        for x in 0..n {
            let row: Vec<String> = [&self.under, &self.over, &self.virt]
                .iter()
                .flat_map(|b| b[x * n..(x + 1) * n].iter().map(|v| (v + 1).to_string()))
                .collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn under(&self, x: usize, y: usize) -> usize {
        self.under[x * self.n + y]
    }

    #[inline]
    pub fn over(&self, x: usize, y: usize) -> usize {
        self.over[x * self.n + y]
    }

    #[inline]
    pub fn virt(&self, x: usize, y: usize) -> usize {
        self.virt[x * self.n + y]
    }

    #[inline]
    pub fn op(&self, op: Op, x: usize, y: usize) -> usize {
        match op {
            Op::Under => self.under(x, y),
            Op::Over => self.over(x, y),
            Op::Virtual => self.virt(x, y),
        }
    }

    /// Concatenated `under ‖ over ‖ virtual` entry vector; census order is
    /// lexicographic in this vector.
    pub fn entry_vector(&self) -> Vec<usize> {
        let mut v = self.under.clone();
        v.extend_from_slice(&self.over);
        v.extend_from_slice(&self.virt);
        v
    }

    /// The table transported along a bijection `phi` of the underlying set:
    /// `phi(x) * phi(y) = phi(x * y)` in the result.
    pub fn relabel(&self, phi: &Permutation) -> Self {
        let inv = phi.inverse();
        let n = self.n;
        let tr = |op: Op| -> Vec<usize> {
            (0..n * n)
                .map(|k| phi.apply(self.op(op, inv.apply(k / n), inv.apply(k % n))))
                .collect()
        };
        Self {
            n,
            under: tr(Op::Under),
            over: tr(Op::Over),
            virt: tr(Op::Virtual),
        }
    }

    /// `f(x) = x ⊳̄ x`.
    pub fn over_diagonal(&self) -> Vec<usize> {
        (0..self.n).map(|x| self.over(x, x)).collect()
    }

    /// `g(x) = x ⊳̲ x`.
    pub fn under_diagonal(&self) -> Vec<usize> {
        (0..self.n).map(|x| self.under(x, x)).collect()
    }

    /// The kink map `π = g ∘ f⁻¹` with `f(x) = x ⊳̄ x`, `g(x) = x ⊳̲ x`.
    pub fn kink_map(&self) -> Result<Permutation> {
        let f = Permutation::from_images(self.over_diagonal()).map_err(|_| Error::NoKinkMap)?;
        let f_inv = f.inverse();
        let pi = (0..self.n)
            .map(|x| self.under(f_inv.apply(x), f_inv.apply(x)))
            .collect();
        Permutation::from_images(pi).map_err(|_| Error::NoKinkMap)
    }

    /// Order of the kink map.
    pub fn characteristic(&self) -> Result<usize> {
        Ok(self.kink_map()?.order())
    }
}

impl fmt::Debug for BirackTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BirackTable(n={})\n{}", self.n, self.to_matrix_string())
    }
}
