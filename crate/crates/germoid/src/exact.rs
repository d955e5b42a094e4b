//! Exact rational scalars and the small linear algebra used by the Gram
//! machinery. No floating point anywhere.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from(BigInt::from(n))
}

/// Renders `p/q` with the denominator omitted when 1; parsing inverse below.
pub fn render_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// A complex number with exact rational parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CRat {
    pub re: Rat,
    pub im: Rat,
}

impl CRat {
    pub fn new(re: Rat, im: Rat) -> Self {
        Self { re, im }
    }
    pub fn from_rat(re: Rat) -> Self {
        Self { re, im: Rat::zero() }
    }
    pub fn zero() -> Self {
        Self { re: Rat::zero(), im: Rat::zero() }
    }
    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    pub fn conj(&self) -> Self {
        Self { re: self.re.clone(), im: -self.im.clone() }
    }
    pub fn add(&self, other: &Self) -> Self {
        Self {
            re: &self.re + &other.re,
            im: &self.im + &other.im,
        }
    }
    pub fn mul(&self, other: &Self) -> Self {
        Self {
            re: &self.re * &other.re - &self.im * &other.im,
            im: &self.re * &other.im + &self.im * &other.re,
        }
    }
    pub fn render(&self) -> String {
        if self.im.is_zero() {
            render_rat(&self.re)
        } else if self.im.is_negative() {
            format!("{}-{}i", render_rat(&self.re), render_rat(&-self.im.clone()))
        } else {
            format!("{}+{}i", render_rat(&self.re), render_rat(&self.im))
        }
    }
}

/// Exact determinant by fraction-free elimination.
pub fn det(matrix: &[Vec<Rat>]) -> Rat {
    let n = matrix.len();
    if n == 0 {
        return Rat::one();
    }
    let mut m: Vec<Vec<Rat>> = matrix.to_vec();
    let mut sign = Rat::one();
    let mut d = Rat::one();
    for col in 0..n {
        let pivot_row = (col..n).find(|&r| !m[r][col].is_zero());
        let Some(pr) = pivot_row else {
            return Rat::zero();
        };
        if pr != col {
            m.swap(pr, col);
            sign = -sign;
        }
        let pivot = m[col][col].clone();
        d *= &pivot;
        for r in col + 1..n {
            let factor = &m[r][col] / &pivot;
            let (above, below) = m.split_at_mut(r);
            for (cell, lead) in below[0][col..n].iter_mut().zip(&above[col][col..n]) {
                let delta = &factor * lead;
                *cell = &*cell - &delta;
            }
        }
    }
    sign * d
}

/// All principal minors of a symmetric matrix are nonnegative exactly when it
/// is positive semidefinite; this checks every one and reports the first
/// violating index set, if any.
pub fn psd_by_principal_minors(matrix: &[Vec<Rat>]) -> Option<Vec<usize>> {
    let n = matrix.len();
    assert!(n <= 16, "principal-minor sweep is exponential; matrix too large");
    for mask in 1u32..(1 << n) {
        let idx: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        let sub: Vec<Vec<Rat>> = idx
            .iter()
            .map(|&r| idx.iter().map(|&c| matrix[r][c].clone()).collect())
            .collect();
        if det(&sub).is_negative() {
            return Some(idx);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinant_of_small_matrices() {
        let m = vec![
            vec![rat_int(1), rat_int(2)],
            vec![rat_int(3), rat_int(4)],
        ];
        assert_eq!(det(&m), rat_int(-2));
        let singular = vec![
            vec![rat_int(1), rat_int(2)],
            vec![rat_int(2), rat_int(4)],
        ];
        assert_eq!(det(&singular), rat_int(0));
    }

    #[test]
    fn psd_sweep_catches_non_leading_violations() {
        // leading minors are 0 and 0 but the (2,2) entry is negative
        let m = vec![
            vec![rat_int(0), rat_int(0)],
            vec![rat_int(0), rat_int(-1)],
        ];
        assert_eq!(psd_by_principal_minors(&m), Some(vec![1]));
        let ok = vec![
            vec![rat_int(1), rat_int(1)],
            vec![rat_int(1), rat_int(1)],
        ];
        assert_eq!(psd_by_principal_minors(&ok), None);
    }

    #[test]
    fn complex_arithmetic() {
        let i = CRat::new(rat_int(0), rat_int(1));
        assert_eq!(i.mul(&i), CRat::from_rat(rat_int(-1)));
        assert_eq!(i.conj().mul(&i), CRat::from_rat(rat_int(1)));
        assert_eq!(CRat::new(rat(1, 2), rat(-3, 2)).render(), "1/2-3/2i");
    }
}
