//! Gaussian elimination for endomorphisms of `F_p^n`.

use alloc::vec;
use alloc::vec::Vec;

use crate::arith;

/// A square system `M x = y` over `F_p`, reduced once and then solvable for
/// many right-hand sides.
#[derive(Debug, Clone)]
pub(crate) struct LinearSystem {
    p: u64,
    n: usize,
    rank: usize,
    /// Pivot column of each of the first `rank` rows.
    pivots: Vec<usize>,
    /// Row-reduced echelon form of `M`, row-major.
    reduced: Vec<u64>,
    /// Row operations applied: `transform * M = reduced`.
    transform: Vec<u64>,
    kernel: Vec<Vec<u32>>,
}

impl LinearSystem {
    /// `columns[j]` is the image of the `j`-th basis vector.
    pub(crate) fn from_columns(p: u32, columns: &[Vec<u32>]) -> Self {
        let n = columns.len();
        let p = p as u64;
        let mut m = vec![0u64; n * n];
        for (j, col) in columns.iter().enumerate() {
            for (i, &v) in col.iter().enumerate() {
                m[i * n + j] = v as u64;
            }
        }
        let mut t = vec![0u64; n * n];
        for i in 0..n {
            t[i * n + i] = 1;
        }

        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..n {
            let Some(pr) = (row..n).find(|&r| m[r * n + col] != 0) else {
                continue;
            };
            if pr != row {
                for k in 0..n {
                    m.swap(pr * n + k, row * n + k);
                    t.swap(pr * n + k, row * n + k);
                }
            }
            let inv = arith::mod_pow(m[row * n + col], p - 2, p);
            for k in 0..n {
                m[row * n + k] = m[row * n + k] * inv % p;
                t[row * n + k] = t[row * n + k] * inv % p;
            }
            for r in 0..n {
                let f = m[r * n + col];
                if r == row || f == 0 {
                    continue;
                }
                let nf = p - f;
                for k in 0..n {
                    m[r * n + k] = (m[r * n + k] + nf * m[row * n + k]) % p;
                    t[r * n + k] = (t[r * n + k] + nf * t[row * n + k]) % p;
                }
            }
            pivots.push(col);
            row += 1;
            if row == n {
                break;
            }
        }
        let rank = row;

        let mut kernel = Vec::new();
        for free in (0..n).filter(|c| !pivots.contains(c)) {
            let mut v = vec![0u32; n];
            v[free] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = ((p - m[r * n + free]) % p) as u32;
            }
            kernel.push(v);
        }

        LinearSystem { p, n, rank, pivots, reduced: m, transform: t, kernel }
    }

    pub(crate) fn rank(&self) -> usize {
        self.rank
    }

    pub(crate) fn kernel_basis(&self) -> &[Vec<u32>] {
        &self.kernel
    }

    /// One solution of `M x = y` (free variables zero), or `None`.
    pub(crate) fn solve(&self, y: &[u32]) -> Option<Vec<u32>> {
        let (n, p) = (self.n, self.p);
        let ty: Vec<u64> = (0..n)
            .map(|i| {
                self.transform[i * n..(i + 1) * n].iter().zip(y).fold(0u64, |acc, (&a, &b)| (acc + a * b as u64) % p)
            })
            .collect();
        if ty[self.rank..].iter().any(|&v| v != 0) {
            return None;
        }
        let mut x = vec![0u32; n];
        for (r, &pc) in self.pivots.iter().enumerate() {
            x[pc] = ty[r] as u32;
        }
        debug_assert!(self.reduced.len() == n * n);
        Some(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn apply(p: u64, columns: &[Vec<u32>], x: &[u32]) -> Vec<u32> {
        let n = columns.len();
        let mut out = vec![0u64; n];
        for (j, col) in columns.iter().enumerate() {
            for i in 0..n {
                out[i] = (out[i] + col[i] as u64 * x[j] as u64) % p;
            }
        }
        out.into_iter().map(|v| v as u32).collect()
    }

    #[test]
    fn singular_system() {
        // columns: e0 -> (1,2,0), e1 -> (2,4,0) = 2*col0, e2 -> (0,0,3)
        let cols = vec![vec![1, 2, 0], vec![2, 4, 0], vec![0, 0, 3]];
        let sys = LinearSystem::from_columns(5, &cols);
        assert_eq!(sys.rank(), 2);
        assert_eq!(sys.kernel_basis().len(), 1);
        let k = &sys.kernel_basis()[0];
        assert_eq!(apply(5, &cols, k), vec![0, 0, 0]);
        let y = apply(5, &cols, &[3, 1, 4]);
        let x = sys.solve(&y).unwrap();
        assert_eq!(apply(5, &cols, &x), y);
        assert!(sys.solve(&[1, 0, 0]).is_none());
    }

    #[test]
    fn exhaustive_small_maps() {
        // every 2x2 matrix over F_3: solve agrees with brute force
        for code in 0..81u32 {
            let d: Vec<u32> = (0..4).map(|i| code / 3u32.pow(i) % 3).collect();
            let cols = vec![vec![d[0], d[1]], vec![d[2], d[3]]];
            let sys = LinearSystem::from_columns(3, &cols);
            let mut image = [false; 9];
            let mut zeros = 0;
            for x in 0..9u32 {
                let y = apply(3, &cols, &[x % 3, x / 3]);
                image[(y[0] + 3 * y[1]) as usize] = true;
                if y == [0, 0] {
                    zeros += 1;
                }
            }
            assert_eq!(zeros, 3usize.pow(sys.kernel_basis().len() as u32));
            assert_eq!(sys.rank() + sys.kernel_basis().len(), 2);
            for y in 0..9u32 {
                let target = [y % 3, y / 3];
                match sys.solve(&target) {
                    Some(x) => assert_eq!(apply(3, &cols, &x), target),
                    None => assert!(!image[y as usize]),
                }
            }
        }
    }
}
