use serde::Serialize;

use super::quotient::{quotient_structure_with, semidirect_chi, QuotientAlgebra, SemidirectChi};
use crate::chi::{ChiModel, PresentationSpec};
use crate::error::{Error, Result};
use crate::lie::words::{free_nilpotent_dim, witt_dim};

/// Degree bound used for the class 2 and 3 completions: the ideal quotient
/// lives in degrees at most 4, and degrees 5 and 6 must be seen to vanish.
pub const QUOTIENT_BOUND: u32 = 6;

fn check_class(c: u32) -> Result<()> {
    if matches!(c, 2 | 3) {
        Ok(())
    } else {
        Err(Error::UnsupportedClass(c))
    }
}

/// `2 dim n_{m,c} + dim [n_{m,c}, n_{m,c}]`.
pub fn dim_im_rho(m: u64, c: u32) -> Result<u64> {
    check_class(c)?;
    let derived: u64 = (2..=u64::from(c)).map(|k| witt_dim(m, k)).sum();
    Ok(2 * free_nilpotent_dim(m, u64::from(c)) + derived)
}

/// `dim gamma_{c+1} / gamma_{c+2}` of the free algebra of rank `m`.
pub fn dim_h2_free_nilpotent(m: u64, c: u32) -> u64 {
    witt_dim(m, u64::from(c) + 1)
}

/// `dim chi - dim im(rho) - dim H_2`.
pub fn dim_r(m: u64, c: u32, dim_chi: u64) -> Result<i64> {
    Ok(dim_chi as i64 - dim_im_rho(m, c)? as i64 - dim_h2_free_nilpotent(m, c) as i64)
}

/// `(3m^4 - 2m^3 - 15m^2 + 14m) / 24`.
pub fn r_polynomial(m: i64) -> i64 {
    (3 * m.pow(4) - 2 * m.pow(3) - 15 * m * m + 14 * m) / 24
}

/// The ideal quotient, the semidirect model, and the model they were built on.
#[derive(Debug)]
pub struct ChiComputation {
    pub m: usize,
    pub c: u32,
    pub model: ChiModel,
    pub l: QuotientAlgebra,
    pub chi: SemidirectChi,
}

impl ChiComputation {
    pub fn new(m: usize, c: u32) -> Result<Self> {
        let model = ChiModel::new(m)?;
        let spec = PresentationSpec::l(m, Some(c), QUOTIENT_BOUND);
        let l = quotient_structure_with(&model, &spec)?;
        let chi = semidirect_chi(&model, &l, c)?;
        Ok(ChiComputation { m, c, model, l, chi })
    }

    pub fn report(&self) -> Result<DimReport> {
        let (m, c) = (self.m as u64, self.c);
        let mut dims_l_per_degree = self.l.dims_per_degree();
        while dims_l_per_degree.last() == Some(&0) {
            dims_l_per_degree.pop();
        }
        let dim_chi = self.chi.dim() as u64;
        let dim_im_rho = dim_im_rho(m, c)?;
        let dim_h2 = dim_h2_free_nilpotent(m, c);
        let dim_w = dim_chi as i64 - dim_im_rho as i64;
        Ok(DimReport {
            m: self.m,
            c,
            dims_l_per_degree,
            dims_l_per_length: self.l.dims_per_length(),
            dim_l: self.l.dim() as u64,
            dim_g: self.chi.g_dim() as u64,
            dim_chi,
            dim_im_rho,
            dim_h2,
            dim_w,
            dim_r: dim_w - dim_h2 as i64,
            class_chi: self.chi.algebra().nilpotency_class(),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimReport {
    pub m: usize,
    pub c: u32,
    /// Dimensions by weighted degree, `a` of weight 1 and `b` of weight 2.
    pub dims_l_per_degree: Vec<usize>,
    /// Dimensions by number of generator letters.
    pub dims_l_per_length: Vec<usize>,
    pub dim_l: u64,
    pub dim_g: u64,
    pub dim_chi: u64,
    pub dim_im_rho: u64,
    pub dim_h2: u64,
    pub dim_w: i64,
    pub dim_r: i64,
    pub class_chi: u32,
}

/// Upper bound on the nilpotency class of the weak commutativity algebra of a
/// class-`c` algebra: `c + 1` for odd `c` or two generators, else `c + 2`.
pub fn class_upper_bound(m: usize, c: u32) -> u32 {
    if c % 2 == 1 || m == 2 {
        c + 1
    } else {
        c + 2
    }
}

pub fn dim_report(m: usize, c: u32) -> Result<DimReport> {
    check_class(c)?;
    ChiComputation::new(m, c)?.report()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn image_dims() {
        assert_eq!(dim_im_rho(3, 2).unwrap(), 15);
        assert_eq!(dim_im_rho(2, 2).unwrap(), 7);
        assert_eq!(dim_im_rho(2, 3).unwrap(), 13);
        assert!(matches!(dim_im_rho(2, 4), Err(Error::UnsupportedClass(4))));
    }

    #[test]
    fn h2_dims() {
        assert_eq!(dim_h2_free_nilpotent(3, 2), 8);
        assert_eq!(dim_h2_free_nilpotent(2, 3), 3);
        assert_eq!(dim_h2_free_nilpotent(2, 2), 2);
        // (m^3 - m) / 3
        for m in 1..6 {
            assert_eq!(dim_h2_free_nilpotent(m, 2), (m * m * m - m) / 3);
        }
    }

    #[test]
    fn polynomial_values() {
        assert_eq!([1, 2, 3].map(r_polynomial), [0, 0, 4]);
        // integral for every m
        for m in 1i64..20 {
            let n = 3 * m.pow(4) - 2 * m.pow(3) - 15 * m * m + 14 * m;
            assert_eq!(n % 24, 0);
        }
    }

    #[test]
    fn report_for_rank_two_class_two() {
        let r = dim_report(2, 2).unwrap();
        assert_eq!(r.dim_l, 6);
        assert_eq!(r.dims_l_per_length, vec![3, 3]);
        assert_eq!(r.dim_chi, 9);
        assert_eq!(r.dim_r, 0);
        assert_eq!(r.class_chi, 3);
        assert_eq!(r.dim_chi, r.dim_l + r.dim_g);
        assert_eq!(r.dim_w, r.dim_chi as i64 - r.dim_im_rho as i64);
    }
}
