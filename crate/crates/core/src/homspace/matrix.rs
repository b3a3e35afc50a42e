use std::fmt;

use crate::ffpoly::PrimeModulus;

/// Dense row-major matrix over `F_p`.
#[derive(Clone, PartialEq, Eq)]
pub struct FpMatrix {
    modulus: PrimeModulus,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl FpMatrix {
    pub fn zeros(modulus: PrimeModulus, rows: usize, cols: usize) -> Self {
        FpMatrix {
            modulus,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    /// Rows must all have length `cols`; entries are reduced mod `p`.
    pub fn from_rows(modulus: PrimeModulus, cols: usize, rows: &[Vec<u32>]) -> Self {
        let mut out = Self::zeros(modulus, rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged row {i}");
            for (j, &v) in row.iter().enumerate() {
                out.set(i, j, v % modulus.get());
            }
        }
        out
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// In-place reduced row echelon form. The pivot for each column is the
    /// first row (by index) at or below the current rank with a nonzero
    /// entry; pivots are scaled to one. Returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let m = self.modulus;
        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..self.cols {
            if rank == self.rows {
                break;
            }
            let Some(pivot) = (rank..self.rows).find(|&i| self.get(i, col) != 0) else {
                continue;
            };
            self.swap_rows(rank, pivot);
            let inv = m.inv(self.get(rank, col)).expect("nonzero pivot");
            for j in col..self.cols {
                let v = self.get(rank, j);
                self.set(rank, j, m.mul(v, inv));
            }
            let (cols, pivot_row) = (self.cols, rank * self.cols);
            for i in 0..self.rows {
                if i == rank {
                    continue;
                }
                let factor = self.get(i, col);
                if factor == 0 {
                    continue;
                }
                let base = i * cols;
                for j in col..cols {
                    let pv = self.data[pivot_row + j];
                    if pv != 0 {
                        self.data[base + j] = m.sub(self.data[base + j], m.mul(factor, pv));
                    }
                }
            }
            pivots.push(col);
            rank += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of `{v : A v = 0}`, one vector per free column, in reduced
    /// echelon form with respect to the column order.
    pub fn nullspace(&self) -> Vec<Vec<u32>> {
        let m = self.modulus;
        let mut reduced = self.clone();
        let pivots = reduced.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let raw: Vec<Vec<u32>> = (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![0u32; self.cols];
                v[free] = 1;
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = m.neg(reduced.get(row, free));
                }
                v
            })
            .collect();
        if raw.is_empty() {
            return raw;
        }
        let mut basis = FpMatrix::from_rows(m, self.cols, &raw);
        let rank = basis.rref().len();
        (0..rank).map(|i| basis.row(i).to_vec()).collect()
    }

    /// `A v`.
    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.cols);
        let m = self.modulus;
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(0u32, |acc, (&a, &b)| m.add(acc, m.mul(a, b)))
            })
            .collect()
    }
}

impl fmt::Debug for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "FpMatrix[p={}; {}x{}]",
            self.modulus, self.rows, self.cols
        )?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        Ok(())
    }
}
