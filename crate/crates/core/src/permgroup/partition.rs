use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integer partition with non-increasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Accepts trailing zeros and strips them.
    pub fn new(parts: &[usize]) -> Result<Self> {
        let mut parts: Vec<usize> = parts.to_vec();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not non-increasing"
            )));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} has an interior zero"
            )));
        }
        Ok(Partition { parts })
    }

    /// Parses `2,1`, `(2,1)`, `2 1` or `21`. The empty string and `()`
    /// give the empty partition.
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if t.is_empty() {
            return Ok(Partition { parts: vec![] });
        }
        let parts: Vec<usize> = if t.contains([',', ' ']) {
            t.split([',', ' '])
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse()
                        .map_err(|_| Error::Parse(format!("bad part {s:?} in {text:?}")))
                })
                .collect::<Result<_>>()?
        } else {
            t.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|v| v as usize)
                        .ok_or_else(|| Error::Parse(format!("bad part {c:?} in {text:?}")))
                })
                .collect::<Result<_>>()?
        };
        Self::new(&parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Column lengths of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0);
        let parts = (0..cols)
            .map(|c| self.parts.iter().filter(|&&r| r > c).count())
            .collect();
        Partition { parts }
    }

    /// Number of standard Young tableaux, by the hook length formula.
    pub fn hook_dimension(&self) -> usize {
        let conj = self.conjugate();
        let mut hooks: Vec<usize> = Vec::with_capacity(self.weight());
        for (r, &len) in self.parts.iter().enumerate() {
            for c in 0..len {
                hooks.push((len - c - 1) + (conj.parts[c] - r - 1) + 1);
            }
        }
        // n! / prod(hooks), interleaved to keep intermediates small.
        let mut num: u128 = 1;
        let mut hooks_left = hooks;
        hooks_left.sort_unstable();
        let mut den: u128 = 1;
        for k in 1..=self.weight() as u128 {
            num *= k;
            if let Some(h) = hooks_left.pop() {
                den *= h as u128;
            }
            let g = gcd(num, den);
            num /= g;
            den /= g;
        }
        debug_assert_eq!(den, 1);
        num as usize
    }

    /// Partitions obtained by adding one box.
    pub fn add_box(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for r in 0..=self.parts.len() {
            let cur = self.parts.get(r).copied().unwrap_or(0);
            let above = if r == 0 { usize::MAX } else { self.parts[r - 1] };
            if cur < above {
                let mut p = self.parts.clone();
                if r == p.len() {
                    p.push(1);
                } else {
                    p[r] += 1;
                }
                out.push(Partition { parts: p });
            }
        }
        out
    }

    /// Partitions obtained by removing one corner box.
    pub fn remove_box(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for r in 0..self.parts.len() {
            let below = self.parts.get(r + 1).copied().unwrap_or(0);
            if self.parts[r] > below {
                let mut p = self.parts.clone();
                p[r] -= 1;
                if p[r] == 0 {
                    p.pop();
                }
                out.push(Partition { parts: p });
            }
        }
        out
    }
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(&v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{self}")
    }
}

/// All partitions of `k` in reverse-lexicographic order:
/// `(k)` first, `(1^k)` last.
pub fn partitions_of(k: usize) -> Vec<Partition> {
    fn rec(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            prefix.push(part);
            rec(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(k, k, &mut Vec::new(), &mut out);
    out
}
