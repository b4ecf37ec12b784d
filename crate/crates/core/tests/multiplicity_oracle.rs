mod common;

use walled_core::linalg;
use walled_core::multiplicity::{inventory, Sector};
use walled_core::oracle::{IrrepVectorFamily, YoungUnits};
use walled_core::permgroup::partitions_of;
use walled_core::walled::{gram, EmbeddingContext, RANK_TOL};

/// Dimension of the span of every ψ vector of every irrep.
fn entangled_span_dim(n: usize, d: usize) -> usize {
    let ctx = EmbeddingContext::new(n, d).unwrap();
    let mut span: Vec<nalgebra::DVector<f64>> = Vec::new();
    for alpha in partitions_of(n - 2) {
        let family = IrrepVectorFamily::new(&alpha, &ctx).unwrap();
        for copy in &family.psi {
            for v in copy {
                let mut w = v.clone();
                for b in &span {
                    let p = b.dot(&w);
                    w -= b * p;
                }
                let norm = w.norm();
                if norm > 1e-8 {
                    span.push(w / norm);
                }
            }
        }
    }
    span.len()
}

#[test]
fn m_sector_against_dense_units() {
    for n in 3..=5 {
        for d in 2..=4 {
            let ctx = EmbeddingContext::new(n, d).unwrap();
            for e in inventory(n, d).unwrap().iter().filter(|e| e.label.sector == Sector::M) {
                let alpha = &e.label.partition;
                let units = YoungUnits::new(alpha, d).unwrap();
                assert_eq!(e.mult, units.multiplicity() as u128, "n={n} d={d} {alpha}");
                if e.mult == 0 {
                    assert!(e.label.weights.is_none());
                    continue;
                }
                let family = IrrepVectorFamily::new(alpha, &ctx).unwrap();
                let oracle_rank = linalg::rank(&family.gram(0, 0), RANK_TOL);
                assert_eq!(e.dim, oracle_rank, "n={n} d={d} {alpha}");
                assert_eq!(e.dim, gram(alpha, &ctx).unwrap().rank);
            }
        }
    }
}

#[test]
fn sectors_split_the_space() {
    for (n, d) in [(3, 2), (3, 3), (3, 4), (4, 2), (4, 3), (4, 4), (5, 2), (5, 3)] {
        let inv = inventory(n, d).unwrap();
        let sector = |s: Sector| -> u128 { inv.iter().filter(|e| e.label.sector == s).map(|e| e.product()).sum() };
        let m_dim = entangled_span_dim(n, d) as u128;
        assert_eq!(sector(Sector::M), m_dim, "n={n} d={d}");
        assert_eq!(sector(Sector::N), (d as u128).pow(n as u32) - m_dim, "n={n} d={d}");
    }
}

/// Below the generic range the reduced dimension is the number of standard
/// tableaux of the shapes one box above `α` that fit into `d` rows.
#[test]
fn degenerate_rank_counts_fitting_shapes() {
    for n in 4..=7 {
        for d in 2..=(n - 2) {
            let ctx = EmbeddingContext::new(n, d).unwrap();
            for alpha in partitions_of(n - 2).into_iter().filter(|a| a.len() <= d) {
                let expected: usize = alpha.add_box().iter().filter(|mu| mu.len() <= d).map(|mu| mu.hook_dimension()).sum();
                assert_eq!(gram(&alpha, &ctx).unwrap().rank, expected, "n={n} d={d} {alpha}");
            }
        }
    }
}
