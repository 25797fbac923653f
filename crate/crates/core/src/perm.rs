//! Permutations of the finite set `{1..n}`.
//!
//! Points are stored 0-based; everything user-facing (cycle notation, image
//! lists, file formats) is 1-based.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for (i, &y) in images.iter().enumerate() {
            if y >= n {
                return Err(Error::Permutation(format!(
                    "image {} of {} is outside 1..{n}",
                    y + 1,
                    i + 1
                )));
            }
            if std::mem::replace(&mut seen[y], true) {
                return Err(Error::Permutation(format!("{} is hit twice", y + 1)));
            }
        }
        Ok(Self { images })
    }

    /// Builds a permutation from 1-based images (`images[i-1] = p(i)`).
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::Permutation("image 0 in 1-based list".into()));
        }
        Self::from_images(images.iter().map(|&y| y - 1).collect())
    }

    /// Parses cycle notation such as `()`, `(23)` or `(12)(34)`.
    ///
    /// Points inside a cycle are single digits unless separated by commas or
    /// spaces, so `(1,10)` is also accepted for larger orders.
    pub fn parse_cycles(text: &str, n: usize) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        let s = text.trim();
        let bad = |msg: String| Error::Permutation(format!("{s:?}: {msg}"));

        let mut rest = s;
        if rest.is_empty() {
            return Err(bad("empty".into()));
        }
        while !rest.is_empty() {
            let body_end = rest
                .strip_prefix('(')
                .and_then(|r| r.find(')'))
                .ok_or_else(|| bad("expected a parenthesised cycle".into()))?;
            let body = &rest[1..body_end + 1];
            rest = rest[body_end + 2..].trim_start();

            let points: Vec<usize> = if body.contains([',', ' ']) {
                body.split([',', ' '])
                    .filter(|t| !t.is_empty())
                    .map(|t| t.parse::<usize>().map_err(|_| bad(format!("bad point {t:?}"))))
                    .collect::<Result<_>>()?
            } else {
                body.chars()
                    .map(|c| {
                        c.to_digit(10)
                            .map(|d| d as usize)
                            .ok_or_else(|| bad(format!("bad point {c:?}")))
                    })
                    .collect::<Result<_>>()?
            };
            for &p in &points {
                if p == 0 || p > n {
                    return Err(bad(format!("point {p} outside 1..{n}")));
                }
                if std::mem::replace(&mut touched[p - 1], true) {
                    return Err(bad(format!("point {p} repeated")));
                }
            }
            for (k, &p) in points.iter().enumerate() {
                let next = points[(k + 1) % points.len()];
                images[p - 1] = next - 1;
            }
        }
        Ok(Self { images })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// 0-based image of a 0-based point.
    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.images.iter().map(|&y| y + 1).collect()
    }

    /// `(self ∘ other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len(), "composing permutations of different sizes");
        Permutation {
            images: other.images.iter().map(|&y| self.images[y]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (x, &y) in self.images.iter().enumerate() {
            inv[y] = x;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| x == y)
    }

    pub fn is_involution(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| self.images[y] == x)
    }

    pub fn fixed_points(&self) -> usize {
        self.images.iter().enumerate().filter(|&(x, &y)| x == y).count()
    }

    /// Order in the symmetric group: lcm of the cycle lengths.
    pub fn order(&self) -> usize {
        self.cycles().iter().fold(1, |acc, c| lcm(acc, c.len()))
    }

    /// Nontrivial cycles, each starting at its least point, sorted by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        let sep = if self.len() > 9 { "," } else { "" };
        for c in cycles {
            let pts: Vec<String> = c.iter().map(|p| (p + 1).to_string()).collect();
            write!(f, "({})", pts.join(sep))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{}", self)
    }
}

/// All involutions of `{1..n}` (identity included), in lexicographic order of
/// their image sequences.
pub fn enumerate_involutions(n: usize) -> Vec<Permutation> {
    fn rec(i: usize, images: &mut Vec<usize>, out: &mut Vec<Permutation>) {
        let n = images.len();
        if i == n {
            out.push(Permutation { images: images.clone() });
            return;
        }
        if images[i] != usize::MAX {
            return rec(i + 1, images, out);
        }
        images[i] = i;
        rec(i + 1, images, out);
        for j in i + 1..n {
            if images[j] == usize::MAX {
                images[i] = j;
                images[j] = i;
                rec(i + 1, images, out);
                images[j] = usize::MAX;
            }
        }
        images[i] = usize::MAX;
    }
    let mut out = Vec::new();
    rec(0, &mut vec![usize::MAX; n], &mut out);
    out
}
