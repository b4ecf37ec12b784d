use std::collections::BTreeMap;

use serde::Serialize;

use super::permutation::{all_permutations, Permutation};

/// The `(a, b)` label of a permutation `σ ∈ S(n)`, with `σ(a) = n` and
/// `σ(n) = b`. Permutations fixing `n` form their own class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum SabClass {
    Transposed { a: usize, b: usize },
    FixesN,
}

pub fn classify(p: &Permutation) -> SabClass {
    let n = p.degree();
    let b = p.apply(n);
    if b == n {
        SabClass::FixesN
    } else {
        let a = p.inverse().apply(n);
        SabClass::Transposed { a, b }
    }
}

/// Partition of `S(n)` into the classes `S_ab`, `1 ≤ a, b ≤ n−1`, and the
/// stabiliser of `n`. Each list is in lexicographic order of one-line images.
#[derive(Clone, Debug)]
pub struct SabPartition {
    pub n: usize,
    pub classes: BTreeMap<(usize, usize), Vec<Permutation>>,
    pub fixes_n: Vec<Permutation>,
}

pub fn enumerate_sab(n: usize) -> SabPartition {
    assert!(n >= 2, "S_ab classes need n >= 2");
    let mut classes: BTreeMap<(usize, usize), Vec<Permutation>> = BTreeMap::new();
    for a in 1..n {
        for b in 1..n {
            classes.insert((a, b), Vec::new());
        }
    }
    let mut fixes_n = Vec::new();
    for p in all_permutations(n) {
        match classify(&p) {
            SabClass::Transposed { a, b } => classes.get_mut(&(a, b)).unwrap().push(p),
            SabClass::FixesN => fixes_n.push(p),
        }
    }
    SabPartition {
        n,
        classes,
        fixes_n,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classify_examples() {
        let p = Permutation::from_images(&[2, 3, 1]).unwrap();
        assert_eq!(classify(&p), SabClass::Transposed { a: 2, b: 1 });
        assert_eq!(classify(&Permutation::identity(4)), SabClass::FixesN);
        let q = Permutation::from_images(&[2, 1, 4, 3]).unwrap();
        assert_eq!(classify(&q), SabClass::Transposed { a: 3, b: 3 });
    }

    #[test]
    fn class_sizes() {
        let fact = |k: usize| (1..=k).product::<usize>();
        for n in 2..=6 {
            let part = enumerate_sab(n);
            assert_eq!(part.classes.len(), (n - 1) * (n - 1));
            for members in part.classes.values() {
                assert_eq!(members.len(), fact(n - 2));
            }
            assert_eq!(part.fixes_n.len(), fact(n - 1));
            let total: usize = part.classes.values().map(Vec::len).sum::<usize>() + part.fixes_n.len();
            assert_eq!(total, fact(n));
            let mut all: Vec<_> = part.classes.values().flatten().chain(&part.fixes_n).collect();
            all.sort();
            all.dedup();
            assert_eq!(all.len(), fact(n));
        }
    }

    #[test]
    fn n3_classes_are_singletons() {
        let part = enumerate_sab(3);
        assert_eq!(part.classes[&(1, 1)], vec![Permutation::parse_cycles(3, "(1 3)").unwrap()]);
        assert_eq!(part.classes[&(2, 2)], vec![Permutation::parse_cycles(3, "(2 3)").unwrap()]);
        assert_eq!(part.fixes_n.len(), 2);
    }

    /// The customary listing for n = 4 agrees with `classify` once every
    /// cycle is read in the opposite direction.
    #[test]
    fn n4_listing_matches_after_inversion() {
        let listing: [((usize, usize), [&str; 2]); 9] = [
            ((1, 1), ["(14)", "(14)(23)"]),
            ((1, 2), ["(124)", "(1324)"]),
            ((1, 3), ["(1234)", "(134)"]),
            ((2, 1), ["(142)", "(1423)"]),
            ((2, 2), ["(24)", "(13)(24)"]),
            ((2, 3), ["(234)", "(1342)"]),
            ((3, 1), ["(1432)", "(143)"]),
            ((3, 2), ["(243)", "(1243)"]),
            ((3, 3), ["(34)", "(12)(34)"]),
        ];
        let part = enumerate_sab(4);
        for ((a, b), cycles) in listing {
            let mut listed: Vec<Permutation> = cycles
                .iter()
                .map(|c| Permutation::parse_cycles(4, c).unwrap().inverse())
                .collect();
            listed.sort();
            assert_eq!(listed, part.classes[&(a, b)], "S_{a}{b}");
        }
        // Read literally, (124) lands in S_21 rather than S_12.
        let literal = Permutation::parse_cycles(4, "(124)").unwrap();
        assert_eq!(classify(&literal), SabClass::Transposed { a: 2, b: 1 });
    }

    #[test]
    fn n3_listing_matches_after_inversion() {
        let listing = [((1, 1), "(13)"), ((1, 2), "(123)"), ((2, 1), "(132)"), ((2, 2), "(23)")];
        for ((a, b), c) in listing {
            let p = Permutation::parse_cycles(3, c).unwrap().inverse();
            assert_eq!(classify(&p), SabClass::Transposed { a, b });
        }
    }
}
