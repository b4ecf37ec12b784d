#![allow(dead_code)]

use nalgebra::DMatrix;
use walled_core::oracle::{transposed_perm_operator, DenseOperator};
use walled_core::permgroup::{Partition, Permutation};

pub fn part(p: &[usize]) -> Partition {
    Partition::new(p).unwrap()
}

pub fn cyc(n: usize, text: &str) -> Permutation {
    if text == "e" {
        Permutation::identity(n)
    } else {
        Permutation::parse_cycles(n, text).unwrap()
    }
}

/// `V'(σ)`; for σ fixing the last point this is just `V(σ)`.
pub fn walled_op(sigma: &Permutation, d: usize) -> DenseOperator {
    transposed_perm_operator(sigma, d).unwrap()
}

pub fn max_diff(a: &DMatrix<f64>, b: &DMatrix<f64>) -> f64 {
    assert_eq!(a.shape(), b.shape());
    (a - b).amax()
}
