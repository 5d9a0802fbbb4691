//! Exact linear algebra over Q: Bareiss ranks and reduced echelon forms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::poly::Q;

/// Rank by fraction-free elimination after clearing row denominators.
pub fn rank(rows: &[Vec<Q>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
            row.iter()
                .map(|v| (v * Q::from_integer(l.clone())).to_integer())
                .collect()
        })
        .filter(|row: &Vec<BigInt>| row.iter().any(|v| !v.is_zero()))
        .collect();
    bareiss_rank(&mut m)
}

pub fn bareiss_rank(m: &mut [Vec<BigInt>]) -> usize {
    let nrows = m.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = m[0].len();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(piv) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, piv);
        for i in r + 1..nrows {
            for j in c + 1..ncols {
                let v = &m[r][c] * &m[i][j] - &m[i][c] * &m[r][j];
                debug_assert!((&v % &prev).is_zero());
                m[i][j] = v / &prev;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        r += 1;
    }
    r
}

/// A subspace of Q^n kept in reduced row echelon form.
///
/// Columns are eliminated in `order`, so the pivot of each row is the first
/// column of `order` where it is nonzero.
#[derive(Clone, Debug)]
pub struct Echelon {
    ncols: usize,
    order: Vec<usize>,
    rows: Vec<Vec<Q>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(ncols: usize, order: Vec<usize>) -> Self {
        debug_assert_eq!(order.len(), ncols);
        Echelon {
            ncols,
            order,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn with_natural_order(ncols: usize) -> Self {
        Self::new(ncols, (0..ncols).collect())
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn rows(&self) -> &[Vec<Q>] {
        &self.rows
    }

    /// Reduces `v` against the stored rows; the result vanishes on pivot columns.
    pub fn reduce(&self, v: &[Q]) -> Vec<Q> {
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let f = v[p].clone();
                for (x, r) in v.iter_mut().zip(row) {
                    if !r.is_zero() {
                        *x -= &f * r;
                    }
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    /// Adds `v` to the span; returns false if it was already there.
    pub fn insert(&mut self, v: &[Q]) -> bool {
        let mut v = self.reduce(v);
        let Some(&p) = self.order.iter().find(|&&c| !v[c].is_zero()) else {
            return false;
        };
        let inv = v[p].recip();
        for x in v.iter_mut() {
            *x *= &inv;
        }
        for row in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let f = row[p].clone();
                for (x, y) in row.iter_mut().zip(&v) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        self.rows.push(v);
        self.pivots.push(p);
        true
    }

    /// Columns without a pivot, in increasing index order.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ncols)
            .filter(|c| !self.pivots.contains(c))
            .collect()
    }
}

/// A basis of the kernel `{v : M v = 0}`, one vector per free column.
pub fn nullspace(m: &[Vec<Q>], ncols: usize) -> Vec<Vec<Q>> {
    let mut e = Echelon::with_natural_order(ncols);
    for row in m {
        e.insert(row);
    }
    e.free_columns()
        .into_iter()
        .map(|f| {
            let mut v = vec![Q::zero(); ncols];
            v[f] = Q::one();
            for (row, &p) in e.rows.iter().zip(&e.pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{q, q_frac};

    #[test]
    fn ranks() {
        let m = vec![
            vec![q(1), q(2), q(3)],
            vec![q(2), q(4), q(6)],
            vec![q(0), q(1), q_frac(1, 2)],
        ];
        assert_eq!(rank(&m), 2);
        assert_eq!(rank(&[vec![q(0), q(0)]]), 0);
        assert_eq!(rank(&[vec![q(0), q(1)], vec![q(1), q(0)]]), 2);
    }

    #[test]
    fn kernels() {
        let m = vec![vec![q(1), q(2), q(3)]];
        let k = nullspace(&m, 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            let dot: Q = m[0].iter().zip(v).map(|(a, b)| a * b).sum();
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn echelon_order() {
        // pivot chosen by the supplied column order
        let mut e = Echelon::new(3, vec![2, 1, 0]);
        e.insert(&[q(1), q(1), q(1)]);
        assert_eq!(e.pivots(), &[2]);
        assert_eq!(e.free_columns(), vec![0, 1]);
        assert!(e.contains(&[q(2), q(2), q(2)]));
    }
}
