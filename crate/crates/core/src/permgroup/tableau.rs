use std::fmt;

use super::partition::Partition;

/// A standard Young tableau.
///
/// Stored as its Yamanouchi word: `row_of[k]` is the (0-based) row holding
/// the entry `k + 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StandardTableau {
    shape: Partition,
    row_of: Vec<usize>,
    col_of: Vec<usize>,
}

impl StandardTableau {
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    /// Rows of the tableau, 1-based entries.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        let mut rows: Vec<Vec<usize>> = self.shape.parts().iter().map(|&l| vec![0; l]).collect();
        for (k, (&r, &c)) in self.row_of.iter().zip(&self.col_of).enumerate() {
            rows[r][c] = k + 1;
        }
        rows
    }

    /// 0-based row of the 1-based entry `k`.
    pub fn row(&self, k: usize) -> usize {
        self.row_of[k - 1]
    }

    /// 0-based column of the 1-based entry `k`.
    pub fn col(&self, k: usize) -> usize {
        self.col_of[k - 1]
    }

    /// Content (column minus row) of the 1-based entry `k`.
    pub fn content(&self, k: usize) -> i64 {
        self.col(k) as i64 - self.row(k) as i64
    }

    pub fn yamanouchi_word(&self) -> &[usize] {
        &self.row_of
    }

    /// The tableau with `k` and `k+1` exchanged, if it is still standard.
    pub fn swap_adjacent(&self, k: usize) -> Option<StandardTableau> {
        let (a, b) = (k - 1, k);
        if self.row_of[a] == self.row_of[b] || self.col_of[a] == self.col_of[b] {
            return None;
        }
        let mut t = self.clone();
        t.row_of.swap(a, b);
        t.col_of.swap(a, b);
        Some(t)
    }
}

impl fmt::Debug for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tableau{:?}", self.rows())
    }
}

/// Standard tableaux of `shape` in last-letter order.
///
/// Two tableaux are compared by the row of their largest entry, then the
/// next largest, and so on; the tableau whose entry sits in the lower row
/// comes first. For `(2,1)` this lists `[[1,2],[3]]` before `[[1,3],[2]]`.
pub fn standard_tableaux(shape: &Partition) -> Vec<StandardTableau> {
    fn rec(parts: &mut Vec<usize>, word: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let n: usize = parts.iter().sum();
        if n == 0 {
            let mut w = word.clone();
            w.reverse();
            out.push(w);
            return;
        }
        // Corners, bottom row first.
        for r in (0..parts.len()).rev() {
            let below = parts.get(r + 1).copied().unwrap_or(0);
            if parts[r] > below {
                parts[r] -= 1;
                word.push(r);
                rec(parts, word, out);
                word.pop();
                parts[r] += 1;
            }
        }
    }
    let mut words = Vec::new();
    let mut parts = shape.parts().to_vec();
    rec(&mut parts, &mut Vec::new(), &mut words);
    words
        .into_iter()
        .map(|row_of| {
            let mut fill = vec![0usize; shape.len()];
            let col_of = row_of
                .iter()
                .map(|&r| {
                    let c = fill[r];
                    fill[r] += 1;
                    c
                })
                .collect();
            StandardTableau {
                shape: shape.clone(),
                row_of,
                col_of,
            }
        })
        .collect()
}
