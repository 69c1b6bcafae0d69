use num_traits::{One, Zero};

use super::linalg::{kernel, rank, rref};
use crate::lie::Rational;

pub type Vector = Vec<Rational>;
type Sparse = Vec<(usize, Rational)>;

/// A finite-dimensional graded Lie algebra given by structure constants.
#[derive(Debug, Clone)]
pub struct FinDimLie {
    labels: Vec<String>,
    degrees: Vec<u32>,
    sc: Vec<Vec<Sparse>>,
}

fn sparse(v: &[Rational]) -> Sparse {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

impl FinDimLie {
    /// `products[i][j]` holds the coordinates of `[e_i, e_j]`.
    pub fn new(labels: Vec<String>, degrees: Vec<u32>, products: Vec<Vec<Vector>>) -> Self {
        let sc = products.iter().map(|row| row.iter().map(|v| sparse(v)).collect()).collect();
        FinDimLie { labels, degrees, sc }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    /// Number of basis elements in each degree `1..=max`.
    pub fn dims_per_degree(&self) -> Vec<usize> {
        let top = self.degrees.iter().copied().max().unwrap_or(0);
        (1..=top).map(|d| self.degrees.iter().filter(|&&e| e == d).count()).collect()
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        let mut v = vec![Rational::zero(); self.dim()];
        v[i] = Rational::one();
        v
    }

    pub fn product(&self, i: usize, j: usize) -> Vector {
        let mut v = vec![Rational::zero(); self.dim()];
        for (k, c) in &self.sc[i][j] {
            v[*k] = c.clone();
        }
        v
    }

    pub fn bracket(&self, u: &[Rational], v: &[Rational]) -> Vector {
        let mut out = vec![Rational::zero(); self.dim()];
        for (i, ui) in u.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, vj) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                if self.sc[i][j].is_empty() {
                    continue;
                }
                let c = ui * vj;
                for (k, s) in &self.sc[i][j] {
                    out[*k] += &c * s;
                }
            }
        }
        out
    }

    /// `[v_1, [v_2, ... [v_{n-1}, v_n]]]`.
    pub fn right_normed(&self, vs: &[Vector]) -> Vector {
        let (last, rest) = vs.split_last().expect("nonempty");
        rest.iter().rev().fold(last.clone(), |acc, v| self.bracket(v, &acc))
    }

    pub fn check_antisymmetry(&self) -> Result<(), String> {
        for i in 0..self.dim() {
            if !self.sc[i][i].is_empty() {
                return Err(format!("[{0},{0}] != 0", self.labels[i]));
            }
            for j in 0..i {
                let neg: Sparse = self.sc[j][i].iter().map(|(k, c)| (*k, -c.clone())).collect();
                if self.sc[i][j] != neg {
                    return Err(format!("[{},{}] is not antisymmetric", self.labels[i], self.labels[j]));
                }
            }
        }
        Ok(())
    }

    pub fn check_grading(&self) -> Result<(), String> {
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                let d = self.degrees[i] + self.degrees[j];
                if let Some((k, _)) = self.sc[i][j].iter().find(|(k, _)| self.degrees[*k] != d) {
                    return Err(format!(
                        "[{},{}] has a term {} of the wrong degree",
                        self.labels[i], self.labels[j], self.labels[*k]
                    ));
                }
            }
        }
        Ok(())
    }

    /// `[e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]] = 0` for all `i < j < k`.
    pub fn check_jacobi(&self) -> Result<(), String> {
        let n = self.dim();
        let mut acc = vec![Rational::zero(); n];
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                        for (l, x) in &self.sc[b][c] {
                            for (t, y) in &self.sc[a][*l] {
                                acc[*t] += x * y;
                            }
                        }
                    }
                    if acc.iter().any(|x| !x.is_zero()) {
                        return Err(format!(
                            "Jacobi fails on ({}, {}, {})",
                            self.labels[i], self.labels[j], self.labels[k]
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    /// Dimensions of `gamma_1 = A`, `gamma_{k+1} = [A, gamma_k]`, until zero.
    pub fn lower_central_series(&self) -> Vec<usize> {
        let mut dims = Vec::new();
        let mut gamma: Vec<Vector> = (0..self.dim()).map(|i| self.basis_vector(i)).collect();
        while !gamma.is_empty() {
            dims.push(gamma.len());
            let mut next = Vec::new();
            for i in 0..self.dim() {
                let e = self.basis_vector(i);
                for v in &gamma {
                    let w = self.bracket(&e, v);
                    if w.iter().any(|x| !x.is_zero()) {
                        next.push(w);
                    }
                }
            }
            let new = if next.is_empty() { Vec::new() } else { rref(&next).0 };
            if new.len() == gamma.len() {
                // not nilpotent; cannot happen for positively graded algebras
                break;
            }
            gamma = new;
        }
        dims
    }

    /// Largest `c` with `gamma_c != 0`; 0 for the zero algebra.
    pub fn nilpotency_class(&self) -> u32 {
        self.lower_central_series().len() as u32
    }

    /// Basis of the center, the kernel of `v -> ([e_i, v])_i`.
    pub fn center(&self) -> Vec<Vector> {
        let n = self.dim();
        let mut rows = Vec::new();
        for i in 0..n {
            for k in 0..n {
                let row: Vector = (0..n)
                    .map(|j| {
                        self.sc[i][j].iter().find(|(kk, _)| *kk == k).map_or_else(Rational::zero, |(_, c)| c.clone())
                    })
                    .collect();
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
        kernel(&rows, n)
    }

    /// Dimension of the span of `vs`.
    pub fn span_dim(vs: &[Vector]) -> usize {
        rank(vs)
    }
}
