use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A permutation of `{1, ..., n}` stored in one-line notation.
///
/// Internally the images are 0-based; every public constructor, accessor
/// and serialized form is 1-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Builds a permutation from 1-based one-line images.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut zero_based = Vec::with_capacity(n);
        for &img in images {
            if img == 0 || img > n || seen[img - 1] {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection of 1..={n}"
                )));
            }
            seen[img - 1] = true;
            zero_based.push(img - 1);
        }
        Ok(Permutation { images: zero_based })
    }

    pub(crate) fn from_zero_based(images: Vec<usize>) -> Self {
        debug_assert!({
            let mut s = images.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &v)| i == v)
        });
        Permutation { images }
    }

    /// The transposition `(i j)` in `S(n)`; `(i i)` is the identity.
    pub fn transposition(n: usize, i: usize, j: usize) -> Result<Self> {
        check_point(n, i)?;
        check_point(n, j)?;
        let mut p = Self::identity(n);
        p.images.swap(i - 1, j - 1);
        Ok(p)
    }

    /// Builds a permutation of degree `n` from disjoint or overlapping
    /// cycles, each element mapping to its right neighbour. Cycles are
    /// multiplied right to left, so `[[1,2],[1,3]]` is `(1 2)∘(1 3)`.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut acc = Self::identity(n);
        for cycle in cycles.iter().rev() {
            let mut c = Self::identity(n);
            let mut seen = std::collections::HashSet::new();
            for (k, &x) in cycle.iter().enumerate() {
                check_point(n, x)?;
                if !seen.insert(x) {
                    return Err(Error::InvalidPermutation(format!(
                        "cycle {cycle:?} repeats {x}"
                    )));
                }
                let y = cycle[(k + 1) % cycle.len()];
                c.images[x - 1] = y - 1;
            }
            acc = c.compose(&acc)?;
        }
        Ok(acc)
    }

    /// Parses cycle notation such as `(1 4 2 3)`, `(14)(23)`, `(1,2)` or
    /// `e`. Cycles written without separators are read one digit per point.
    pub fn parse_cycles(n: usize, text: &str) -> Result<Self> {
        let t = text.trim();
        if t.is_empty() || t == "e" || t == "()" {
            return Ok(Self::identity(n));
        }
        let mut cycles = Vec::new();
        let mut rest = t;
        while !rest.is_empty() {
            let rest_trim = rest.trim_start();
            let inner_start = rest_trim
                .strip_prefix('(')
                .ok_or_else(|| Error::Parse(format!("expected '(' in {text:?}")))?;
            let close = inner_start
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unbalanced cycle in {text:?}")))?;
            let body = inner_start[..close].trim();
            let points: Vec<usize> = if body.contains([' ', ',']) {
                body.split([' ', ','])
                    .filter(|s| !s.is_empty())
                    .map(|s| {
                        s.parse::<usize>()
                            .map_err(|_| Error::Parse(format!("bad point {s:?} in {text:?}")))
                    })
                    .collect::<Result<_>>()?
            } else {
                body.chars()
                    .map(|c| {
                        c.to_digit(10)
                            .map(|v| v as usize)
                            .ok_or_else(|| Error::Parse(format!("bad point {c:?} in {text:?}")))
                    })
                    .collect::<Result<_>>()?
            };
            if !points.is_empty() {
                cycles.push(points);
            }
            rest = inner_start[close + 1..].trim_start();
        }
        Self::from_cycles(n, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `x`.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1] + 1
    }

    /// 1-based one-line images.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `self ∘ other`: applies `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { images: inv }
    }

    /// Embeds into `S(n)` by fixing the points `degree+1..=n`.
    pub fn extend(&self, n: usize) -> Permutation {
        assert!(n >= self.degree(), "cannot extend to a smaller degree");
        let mut images = self.images.clone();
        images.extend(self.degree()..n);
        Permutation { images }
    }

    /// Restricts to `S(k)`; fails unless every point above `k` is fixed.
    pub fn restrict(&self, k: usize) -> Result<Permutation> {
        if k > self.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: k,
            });
        }
        if (k..self.degree()).any(|i| self.images[i] != i) {
            return Err(Error::InvalidPermutation(format!(
                "{self} does not fix the points above {k}"
            )));
        }
        Ok(Permutation {
            images: self.images[..k].to_vec(),
        })
    }

    /// Disjoint cycles of length at least two, each starting at its
    /// smallest point, sorted by that point. 1-based.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.images[x];
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Number of cycles including fixed points.
    pub fn cycle_count(&self) -> usize {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut count = 0;
        for start in 0..n {
            if !seen[start] {
                count += 1;
                let mut x = start;
                while !seen[x] {
                    seen[x] = true;
                    x = self.images[x];
                }
            }
        }
        count
    }

    pub fn sign(&self) -> i32 {
        if (self.degree() - self.cycle_count()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Bubble-sort factorisation into adjacent transpositions.
    ///
    /// Returns `[k1, ..., km]` (1-based, `k` meaning `(k k+1)`) such that
    /// `self = s_{k1} ∘ s_{k2} ∘ ... ∘ s_{km}`.
    pub fn adjacent_word(&self) -> Vec<usize> {
        // Sort the one-line array; each swap at positions (j, j+1) is a
        // right multiplication by s_{j+1}.
        let mut w = self.images.clone();
        let mut swaps = Vec::new();
        let n = w.len();
        for pass in 0..n {
            let mut swapped = false;
            for j in 0..n.saturating_sub(1 + pass) {
                if w[j] > w[j + 1] {
                    w.swap(j, j + 1);
                    swaps.push(j + 1);
                    swapped = true;
                }
            }
            if !swapped {
                break;
            }
        }
        // self ∘ s_{j1} ∘ ... ∘ s_{jm} = e, so self = s_{jm} ∘ ... ∘ s_{j1}.
        swaps.reverse();
        swaps
    }
}

fn check_point(n: usize, x: usize) -> Result<()> {
    if x == 0 || x > n {
        Err(Error::IndexOutOfRange {
            what: "point",
            value: x,
            min: 1,
            max: n,
        })
    } else {
        Ok(())
    }
}

/// All permutations of degree `n` in lexicographic order of their
/// one-line images.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    loop {
        out.push(Permutation::from_zero_based(current.clone()));
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| current[j] > current[i - 1]).unwrap();
        current.swap(i - 1, j);
        current[i..].reverse();
    }
    out
}

impl fmt::Display for Permutation {
    /// Cycle notation; the identity prints as `e`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "e");
        }
        for c in cycles {
            write!(f, "(")?;
            for (k, x) in c.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({:?})", self.images())
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.images().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let images = Vec::<usize>::deserialize(deserializer)?;
        Permutation::from_images(&images).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(images: &[usize]) -> Permutation {
        Permutation::from_images(images).unwrap()
    }

    #[test]
    fn compose_is_right_to_left() {
        let t12 = Permutation::parse_cycles(3, "(1 2)").unwrap();
        let t13 = Permutation::parse_cycles(3, "(1 3)").unwrap();
        let prod = t12.compose(&t13).unwrap();
        assert_eq!(prod.images(), vec![3, 1, 2]);
        assert_eq!(prod.to_string(), "(1 3 2)");
    }

    #[test]
    fn compose_with_identity() {
        let x = p(&[2, 4, 1, 3]);
        assert_eq!(x.compose(&Permutation::identity(4)).unwrap(), x);
    }

    #[test]
    fn compose_of_embedding_transpositions() {
        // (2 4)∘(2 3) in S(4): 2 -> 3 -> 3, 3 -> 2 -> 4, 4 -> 4 -> 2
        let a = Permutation::transposition(4, 2, 4).unwrap();
        let b = Permutation::transposition(4, 2, 3).unwrap();
        let prod = a.compose(&b).unwrap();
        assert_eq!(prod.images(), vec![1, 3, 4, 2]);
        assert_eq!(prod.to_string(), "(2 3 4)");
        // the opposite order gives the inverse cycle
        assert_eq!(b.compose(&a).unwrap().to_string(), "(2 4 3)");
        // with (1 3) on the right this is the image of the identity under the
        // (1, 2) embedding for n = 4
        let c = Permutation::transposition(4, 1, 3).unwrap();
        assert_eq!(prod.compose(&c).unwrap().images(), vec![4, 3, 1, 2]);
    }

    #[test]
    fn degree_mismatch_is_an_error() {
        let err = Permutation::identity(3)
            .compose(&Permutation::identity(4))
            .unwrap_err();
        assert!(matches!(err, Error::DegreeMismatch { .. }));
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images(&[1, 1, 2]).is_err());
        assert!(Permutation::from_images(&[0, 1]).is_err());
        assert!(Permutation::from_images(&[1, 4, 2]).is_err());
    }

    #[test]
    fn sign_of_small_cases() {
        assert_eq!(Permutation::identity(5).sign(), 1);
        assert_eq!(Permutation::transposition(5, 2, 5).unwrap().sign(), -1);
        assert_eq!(p(&[2, 3, 1]).sign(), 1);
    }

    #[test]
    fn cycle_parsing_forms() {
        let a = Permutation::parse_cycles(4, "(1 4 2 3)").unwrap();
        let b = Permutation::parse_cycles(4, "(1423)").unwrap();
        let c = Permutation::parse_cycles(4, "(1,4,2,3)").unwrap();
        assert_eq!(a, b);
        assert_eq!(a, c);
        assert_eq!(a.images(), vec![4, 3, 1, 2]);
        assert!(Permutation::parse_cycles(4, "e").unwrap().is_identity());
        assert!(Permutation::parse_cycles(4, "(1 5)").is_err());
        assert!(Permutation::parse_cycles(5, "(15241)").is_err());
        assert!(Permutation::parse_cycles(4, "1 2").is_err());
    }

    #[test]
    fn display_round_trips_through_parse() {
        for x in all_permutations(5) {
            let back = Permutation::parse_cycles(5, &x.to_string()).unwrap();
            assert_eq!(back, x);
        }
    }

    #[test]
    fn adjacent_word_reproduces_permutation() {
        for x in all_permutations(5) {
            let mut acc = Permutation::identity(5);
            for &k in &x.adjacent_word() {
                acc = acc
                    .compose(&Permutation::transposition(5, k, k + 1).unwrap())
                    .unwrap();
            }
            assert_eq!(acc, x);
        }
    }

    #[test]
    fn all_permutations_counts() {
        assert_eq!(all_permutations(0).len(), 1);
        assert_eq!(all_permutations(1).len(), 1);
        assert_eq!(all_permutations(4).len(), 24);
        let perms = all_permutations(5);
        let set: std::collections::HashSet<_> = perms.iter().collect();
        assert_eq!(set.len(), 120);
    }

    #[test]
    fn restrict_and_extend() {
        let x = p(&[2, 1, 3]);
        let y = x.extend(5);
        assert_eq!(y.images(), vec![2, 1, 3, 4, 5]);
        assert_eq!(y.restrict(2).unwrap().images(), vec![2, 1]);
        assert!(p(&[1, 3, 2]).restrict(2).is_err());
    }

    #[test]
    fn serde_uses_one_based_images() {
        let x = p(&[3, 1, 2]);
        assert_eq!(serde_json::to_string(&x).unwrap(), "[3,1,2]");
        let back: Permutation = serde_json::from_str("[3,1,2]").unwrap();
        assert_eq!(back, x);
        assert!(serde_json::from_str::<Permutation>("[0,1,2]").is_err());
    }
}
