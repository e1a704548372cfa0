//! Rank over GF(2) with bit-packed rows.

/// Incremental row-echelon basis. Each stored row is reduced against all
/// earlier pivots, so insertion is a single sweep.
pub struct EchelonBasis {
    words: usize,
    rows: Vec<Vec<u64>>,
    /// `pivot_row[col]` is the row whose leading bit is `col`.
    pivot_row: Vec<Option<u32>>,
}

impl EchelonBasis {
    pub fn new(cols: usize) -> Self {
        Self { words: cols.div_ceil(64), rows: Vec::new(), pivot_row: vec![None; cols] }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Inserts the vector with ones at `support` (repeated indices cancel).
    /// Returns `true` if it was independent of the rows so far.
    pub fn insert(&mut self, support: &[usize]) -> bool {
        let mut v = vec![0u64; self.words];
        for &i in support {
            v[i / 64] ^= 1 << (i % 64);
        }
        self.insert_packed(v)
    }

    pub fn insert_packed(&mut self, mut v: Vec<u64>) -> bool {
        for w in 0..self.words {
            while v[w] != 0 {
                let col = w * 64 + v[w].trailing_zeros() as usize;
                match self.pivot_row[col] {
                    Some(r) => {
                        let row = &self.rows[r as usize];
                        for k in w..self.words {
                            v[k] ^= row[k];
                        }
                    }
                    None => {
                        self.pivot_row[col] = Some(self.rows.len() as u32);
                        self.rows.push(v);
                        return true;
                    }
                }
            }
        }
        false
    }
}

/// Rank of a matrix given by the supports of its rows.
pub fn rank(cols: usize, rows: &[Vec<usize>]) -> usize {
    let mut b = EchelonBasis::new(cols);
    for r in rows {
        b.insert(r);
    }
    b.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Dense oracle on bool matrices.
    fn rank_oracle(cols: usize, rows: &[Vec<usize>]) -> usize {
        let mut m: Vec<Vec<bool>> = rows
            .iter()
            .map(|r| {
                let mut v = vec![false; cols];
                for &i in r {
                    v[i] ^= true;
                }
                v
            })
            .collect();
        let mut rank = 0;
        for c in 0..cols {
            if let Some(p) = (rank..m.len()).find(|&r| m[r][c]) {
                m.swap(rank, p);
                for r in 0..m.len() {
                    if r != rank && m[r][c] {
                        let pr = m[rank].clone();
                        for (x, y) in m[r].iter_mut().zip(pr) {
                            *x ^= y;
                        }
                    }
                }
                rank += 1;
            }
        }
        rank
    }

    #[test]
    fn matches_dense_oracle() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let cols = rng.gen_range(1..150);
            let nrows = rng.gen_range(0..150);
            let rows: Vec<Vec<usize>> =
                (0..nrows).map(|_| (0..rng.gen_range(0..6)).map(|_| rng.gen_range(0..cols)).collect()).collect();
            assert_eq!(rank(cols, &rows), rank_oracle(cols, &rows));
        }
    }

    #[test]
    fn repeated_indices_cancel() {
        assert_eq!(rank(3, &[vec![1, 1]]), 0);
        assert_eq!(rank(3, &[vec![0, 1], vec![1, 2], vec![0, 2]]), 2);
    }
}
