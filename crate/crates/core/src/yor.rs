//! Young's orthogonal form of the irreducible representations of `S(k)`.
//!
//! Rows and columns are indexed by [`standard_tableaux`] in last-letter
//! order. The adjacent transposition `s = (k k+1)` acts on the basis
//! vector of a tableau `T` as
//!
//! ```text
//! s·v_T = (1/r) v_T + sqrt(1 - 1/r²) v_{sT},   r = c_T(k+1) - c_T(k)
//! ```
//!
//! where `c_T` is the content (column minus row). Every image is real
//! orthogonal and the images of transpositions are symmetric.

use std::collections::HashMap;

use nalgebra::DMatrix;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::permgroup::{standard_tableaux, Partition, Permutation, StandardTableau};

/// A dense orthogonal matrix `φ^α(σ)`.
#[derive(Clone, Debug, PartialEq)]
pub struct IrrepMatrix {
    pub shape: Partition,
    pub sigma: Permutation,
    pub entries: DMatrix<f64>,
}

impl IrrepMatrix {
    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }
}

#[derive(Serialize)]
struct IrrepMatrixJson<'a> {
    shape: &'a Partition,
    sigma: &'a Permutation,
    rows: usize,
    cols: usize,
    entries: Vec<Vec<f64>>,
}

impl Serialize for IrrepMatrix {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        IrrepMatrixJson {
            shape: &self.shape,
            sigma: &self.sigma,
            rows: self.entries.nrows(),
            cols: self.entries.ncols(),
            entries: crate::linalg::rows(&self.entries),
        }
        .serialize(serializer)
    }
}

/// Precomputed adjacent-transposition images for one shape.
///
/// Immutable once built, so it can be shared freely between threads.
#[derive(Clone, Debug)]
pub struct YorTable {
    shape: Partition,
    tableaux: Vec<StandardTableau>,
    generators: Vec<DMatrix<f64>>,
}

impl YorTable {
    pub fn new(shape: &Partition) -> Self {
        let tableaux = standard_tableaux(shape);
        let index: HashMap<&[usize], usize> = tableaux
            .iter()
            .enumerate()
            .map(|(i, t)| (t.yamanouchi_word(), i))
            .collect();
        let k_max = shape.weight();
        let m = tableaux.len();
        let mut generators = Vec::with_capacity(k_max.saturating_sub(1));
        for k in 1..k_max {
            let mut g = DMatrix::zeros(m, m);
            for (col, t) in tableaux.iter().enumerate() {
                let r = (t.content(k + 1) - t.content(k)) as f64;
                g[(col, col)] = 1.0 / r;
                if let Some(s) = t.swap_adjacent(k) {
                    let row = index[s.yamanouchi_word()];
                    g[(row, col)] = (1.0 - 1.0 / (r * r)).sqrt();
                }
            }
            generators.push(g);
        }
        YorTable {
            shape: shape.clone(),
            tableaux,
            generators,
        }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn tableaux(&self) -> &[StandardTableau] {
        &self.tableaux
    }

    pub fn dim(&self) -> usize {
        self.tableaux.len()
    }

    /// Image of `(k k+1)`, `1 ≤ k < weight`.
    pub fn adjacent(&self, k: usize) -> Result<&DMatrix<f64>> {
        if k == 0 || k >= self.shape.weight() {
            return Err(Error::IndexOutOfRange {
                what: "adjacent transposition",
                value: k,
                min: 1,
                max: self.shape.weight().saturating_sub(1),
            });
        }
        Ok(&self.generators[k - 1])
    }

    /// `φ^α(σ)` as the product of generator images along the bubble-sort
    /// word of `σ`.
    pub fn matrix(&self, sigma: &Permutation) -> Result<DMatrix<f64>> {
        if sigma.degree() != self.shape.weight() {
            return Err(Error::DegreeMismatch {
                left: sigma.degree(),
                right: self.shape.weight(),
            });
        }
        let mut acc = DMatrix::identity(self.dim(), self.dim());
        for k in sigma.adjacent_word() {
            acc *= &self.generators[k - 1];
        }
        Ok(acc)
    }
}

/// Image of the adjacent transposition `(k k+1)` in the irrep `shape`.
pub fn yor_adjacent(shape: &Partition, k: usize) -> Result<IrrepMatrix> {
    let table = YorTable::new(shape);
    let n = shape.weight();
    let entries = table.adjacent(k)?.clone();
    Ok(IrrepMatrix {
        shape: shape.clone(),
        sigma: Permutation::transposition(n, k, k + 1)?,
        entries,
    })
}

pub fn yor_matrix(shape: &Partition, sigma: &Permutation) -> Result<IrrepMatrix> {
    let table = YorTable::new(shape);
    Ok(IrrepMatrix {
        shape: shape.clone(),
        sigma: sigma.clone(),
        entries: table.matrix(sigma)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::{all_permutations, factorial, partitions_of};

    const TOL: f64 = 1e-9;

    fn part(p: &[usize]) -> Partition {
        Partition::new(p).unwrap()
    }

    fn close(a: &DMatrix<f64>, b: &DMatrix<f64>) -> bool {
        a.shape() == b.shape() && (a - b).amax() <= TOL
    }

    #[test]
    fn trivial_and_sign_generators() {
        assert_eq!(yor_adjacent(&part(&[2]), 1).unwrap().entries, DMatrix::from_element(1, 1, 1.0));
        assert_eq!(yor_adjacent(&part(&[1, 1]), 1).unwrap().entries, DMatrix::from_element(1, 1, -1.0));
    }

    #[test]
    fn two_one_second_generator() {
        let h = 3f64.sqrt() / 2.0;
        let expected = DMatrix::from_row_slice(2, 2, &[-0.5, h, h, 0.5]);
        assert!(close(&yor_adjacent(&part(&[2, 1]), 2).unwrap().entries, &expected));
        let s1 = DMatrix::from_row_slice(2, 2, &[1.0, 0.0, 0.0, -1.0]);
        assert!(close(&yor_adjacent(&part(&[2, 1]), 1).unwrap().entries, &s1));
    }

    #[test]
    fn two_one_of_13() {
        let h = 3f64.sqrt() / 2.0;
        let sigma = Permutation::parse_cycles(3, "(1 3)").unwrap();
        let got = yor_matrix(&part(&[2, 1]), &sigma).unwrap().entries;
        let expected = DMatrix::from_row_slice(2, 2, &[-0.5, -h, -h, 0.5]);
        assert!(close(&got, &expected));
    }

    #[test]
    fn invalid_generator_index() {
        assert!(yor_adjacent(&part(&[2, 1]), 0).is_err());
        assert!(yor_adjacent(&part(&[2, 1]), 3).is_err());
        assert!(yor_matrix(&part(&[2, 1]), &Permutation::identity(4)).is_err());
    }

    #[test]
    fn identity_and_sign_irrep() {
        for k in 1..=5 {
            for shape in partitions_of(k) {
                let t = YorTable::new(&shape);
                let id = t.matrix(&Permutation::identity(k)).unwrap();
                assert!(close(&id, &DMatrix::identity(t.dim(), t.dim())));
            }
            let sign = YorTable::new(&Partition::new(&vec![1; k]).unwrap());
            for p in all_permutations(k) {
                assert!((sign.matrix(&p).unwrap()[(0, 0)] - p.sign() as f64).abs() < TOL);
            }
        }
    }

    #[test]
    fn homomorphism_orthogonality_and_symmetry() {
        for k in 1..=5 {
            let perms = all_permutations(k);
            for shape in partitions_of(k) {
                let t = YorTable::new(&shape);
                let mats: Vec<_> = perms.iter().map(|p| t.matrix(p).unwrap()).collect();
                for (i, p) in perms.iter().enumerate() {
                    let m = &mats[i];
                    assert!(close(&(m.transpose() * m), &DMatrix::identity(t.dim(), t.dim())));
                    if p.cycles().len() == 1 && p.cycles()[0].len() == 2 {
                        assert!(close(m, &m.transpose()), "transposition image not symmetric");
                    }
                }
                // full product table only for k <= 4, sampled pairs for k = 5
                let step = if k <= 4 { 1 } else { 7 };
                for (i, p) in perms.iter().enumerate().step_by(step) {
                    for (j, q) in perms.iter().enumerate() {
                        let pq = p.compose(q).unwrap();
                        assert!(close(&t.matrix(&pq).unwrap(), &(&mats[i] * &mats[j])));
                    }
                }
            }
        }
    }

    #[test]
    fn coxeter_relations() {
        for k in 2..=6 {
            for shape in partitions_of(k) {
                let t = YorTable::new(&shape);
                let id = DMatrix::identity(t.dim(), t.dim());
                for i in 1..k {
                    let s = t.adjacent(i).unwrap();
                    assert!(close(&(s * s), &id));
                    if i + 1 < k {
                        let u = t.adjacent(i + 1).unwrap();
                        assert!(close(&(s * u * s), &(u * s * u)));
                    }
                    for j in (i + 2)..k {
                        let u = t.adjacent(j).unwrap();
                        assert!(close(&(s * u), &(u * s)));
                    }
                }
            }
        }
    }

    #[test]
    fn schur_orthogonality() {
        for k in 1..=4 {
            let perms = all_permutations(k);
            let shapes = partitions_of(k);
            let tables: Vec<_> = shapes.iter().map(YorTable::new).collect();
            let mats: Vec<Vec<_>> = tables
                .iter()
                .map(|t| perms.iter().map(|p| t.matrix(p).unwrap()).collect())
                .collect();
            let order = factorial(k) as f64;
            for (a, ta) in tables.iter().enumerate() {
                for (b, tb) in tables.iter().enumerate() {
                    for i in 0..ta.dim() {
                        for j in 0..ta.dim() {
                            for kk in 0..tb.dim() {
                                for l in 0..tb.dim() {
                                    let s: f64 = (0..perms.len())
                                        .map(|g| mats[a][g][(i, j)] * mats[b][g][(kk, l)])
                                        .sum::<f64>()
                                        / order;
                                    let expected = if a == b && i == kk && j == l {
                                        1.0 / ta.dim() as f64
                                    } else {
                                        0.0
                                    };
                                    assert!((s - expected).abs() < TOL);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
}
