//! Exact linear algebra over the rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::lie::Rational;

/// Rank by fraction-free (Bareiss) elimination after clearing denominators.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let Some(cols) = rows.first().map(Vec::len) else { return 0 };
    let mut m: Vec<Vec<BigInt>> =
        rows.iter().filter(|r| r.iter().any(|x| !x.is_zero())).map(|r| integer_row(r)).collect();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(rank, p);
        for i in rank + 1..m.len() {
            for j in c + 1..cols {
                let v = &m[rank][c] * &m[i][j] - &m[i][c] * &m[rank][j];
                m[i][j] = v / &prev;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[rank][c].clone();
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

fn integer_row(r: &[Rational]) -> Vec<BigInt> {
    let l = r.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    r.iter().map(|x| x.numer() * (&l / x.denom())).collect()
}

/// Reduced row echelon form; returns the nonzero rows and their pivot columns.
pub fn rref(rows: &[Vec<Rational>]) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let Some(cols) = rows.first().map(Vec::len) else { return (Vec::new(), Vec::new()) };
    let mut m = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    (m, pivots)
}

/// Basis of `{v : A v = 0}` for `A` given by rows of length `cols`.
pub fn kernel(rows: &[Vec<Rational>], cols: usize) -> Vec<Vec<Rational>> {
    let (m, pivots) = if rows.is_empty() { (Vec::new(), Vec::new()) } else { rref(rows) };
    let mut out = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Rational::zero(); cols];
        v[free] = Rational::one();
        for (row, &p) in m.iter().zip(&pivots) {
            v[p] = -row[free].clone();
        }
        out.push(v);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{rat, ratio};
    use proptest::prelude::*;

    fn q(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect()
    }

    #[test]
    fn small_ranks() {
        assert_eq!(rank(&q(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(&q(&[&[0, 1], &[1, 0], &[1, 1]])), 2);
        assert_eq!(rank(&q(&[&[0, 0]])), 0);
        assert_eq!(rank(&[vec![ratio(1, 2), ratio(1, 3)], vec![rat(3), rat(2)]]), 1);
    }

    #[test]
    fn kernel_of_projection() {
        let k = kernel(&q(&[&[1, 0, 0]]), 3);
        assert_eq!(k.len(), 2);
        assert!(k.iter().all(|v| v[0].is_zero()));
    }

    proptest! {
        #[test]
        fn rank_nullity(entries in proptest::collection::vec(-3i64..=3, 12)) {
            let rows: Vec<Vec<Rational>> = entries.chunks(4).map(|c| c.iter().map(|&x| rat(x)).collect()).collect();
            let k = kernel(&rows, 4);
            prop_assert_eq!(rank(&rows) + k.len(), 4);
            prop_assert_eq!(rref(&rows).1.len(), rank(&rows));
            for v in &k {
                for r in &rows {
                    let dot: Rational = r.iter().zip(v).map(|(a, b)| a * b).sum();
                    prop_assert!(dot.is_zero());
                }
            }
        }
    }
}
