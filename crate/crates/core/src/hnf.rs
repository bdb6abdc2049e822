//! Row-style Hermite normal form over the integers.
//!
//! Small and exact: entries are widened to `i128` internally, pivots are made
//! positive, and entries above each pivot are reduced to `0 <= e < pivot`.
//! The unimodular transform `U` with `U·A = [H; 0]` is tracked so lattice
//! coordinates can be pulled back to the original rows.

#[derive(Debug, Clone)]
pub struct RowHnf {
    /// Nonzero HNF rows, one per pivot.
    pub rows: Vec<Vec<i128>>,
    /// Column index of each pivot, strictly increasing.
    pub pivots: Vec<usize>,
    /// `transform[i]` expresses HNF row `i` as an integer combination of the
    /// input rows (only the first `rows.len()` entries are meaningful for
    /// membership pullback; the rest span the row-space relations).
    pub transform: Vec<Vec<i128>>,
    pub cols: usize,
    pub input_rows: usize,
}

/// Computes the row HNF of `mat` (any shape, including zero rows).
pub fn row_hnf(mat: &[Vec<i64>]) -> RowHnf {
    let m = mat.len();
    let cols = mat.first().map_or(0, |r| r.len());
    for r in mat {
        assert_eq!(r.len(), cols, "ragged matrix");
    }
    let mut a: Vec<Vec<i128>> = mat
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut u: Vec<Vec<i128>> = (0..m)
        .map(|i| (0..m).map(|j| i128::from(i == j)).collect())
        .collect();

    let mut pivot_row = 0usize;
    let mut pivots = Vec::new();
    for col in 0..cols {
        loop {
            // Pick the row at or below pivot_row with the smallest nonzero |entry|.
            let mut best: Option<usize> = None;
            for (i, row) in a.iter().enumerate().skip(pivot_row) {
                if row[col] != 0 && best.is_none_or(|b| row[col].abs() < a[b][col].abs()) {
                    best = Some(i);
                }
            }
            let Some(best) = best else { break };
            a.swap(pivot_row, best);
            u.swap(pivot_row, best);
            let mut done = true;
            for i in pivot_row + 1..m {
                if a[i][col] != 0 {
                    let q = a[i][col].div_euclid(a[pivot_row][col]);
                    row_sub(&mut a, &mut u, i, pivot_row, q);
                    if a[i][col] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if pivot_row < m && a[pivot_row][col] != 0 {
            if a[pivot_row][col] < 0 {
                for x in &mut a[pivot_row] {
                    *x = -*x;
                }
                for x in &mut u[pivot_row] {
                    *x = -*x;
                }
            }
            // Reduce entries above the pivot into [0, pivot).
            for i in 0..pivot_row {
                let q = a[i][col].div_euclid(a[pivot_row][col]);
                if q != 0 {
                    row_sub(&mut a, &mut u, i, pivot_row, q);
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
    }

    RowHnf {
        rows: a[..pivot_row].to_vec(),
        pivots,
        transform: u,
        cols,
        input_rows: m,
    }
}

fn row_sub(a: &mut [Vec<i128>], u: &mut [Vec<i128>], i: usize, j: usize, q: i128) {
    for c in 0..a[i].len() {
        let sub = q * a[j][c];
        a[i][c] -= sub;
    }
    for c in 0..u[i].len() {
        let sub = q * u[j][c];
        u[i][c] -= sub;
    }
}

impl RowHnf {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Coordinates of `v` with respect to the HNF rows, if `v` lies in the
    /// lattice they span.
    pub fn solve(&self, v: &[i64]) -> Option<Vec<i128>> {
        assert_eq!(v.len(), self.cols);
        let mut rem: Vec<i128> = v.iter().map(|&x| x as i128).collect();
        let mut coeffs = vec![0i128; self.rows.len()];
        for (i, &col) in self.pivots.iter().enumerate() {
            let p = self.rows[i][col];
            if rem[col] % p != 0 {
                return None;
            }
            let c = rem[col] / p;
            coeffs[i] = c;
            if c != 0 {
                for j in 0..self.cols {
                    rem[j] -= c * self.rows[i][j];
                }
            }
        }
        if rem.iter().all(|&x| x == 0) {
            Some(coeffs)
        } else {
            None
        }
    }

    /// Like [`solve`], but pulled back to coordinates over the input rows.
    ///
    /// [`solve`]: RowHnf::solve
    pub fn solve_in_input_rows(&self, v: &[i64]) -> Option<Vec<i128>> {
        let coeffs = self.solve(v)?;
        let mut out = vec![0i128; self.input_rows];
        for (i, &c) in coeffs.iter().enumerate() {
            if c != 0 {
                for (j, o) in out.iter_mut().enumerate() {
                    *o += c * self.transform[i][j];
                }
            }
        }
        Some(out)
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        self.solve(v).is_some()
    }
}
