//! Monomials as dense exponent vectors.
//!
//! The canonical total order is graded lexicographic: compare total degree
//! first, then the exponent vectors left to right. All ideal-level
//! canonicalization and tie-breaking in witness searches rests on this order.

use crate::error::IdealError;
use std::cmp::Ordering;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Self { exponents }
    }

    /// The unit monomial 1 on `arity` variables.
    pub fn one(arity: usize) -> Self {
        Self { exponents: vec![0; arity] }
    }

    /// The single variable x_i.
    pub fn variable(index: usize, arity: usize) -> Self {
        let mut exponents = vec![0; arity];
        exponents[index] = 1;
        Self { exponents }
    }

    pub fn arity(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn exponent(&self, index: usize) -> u32 {
        self.exponents[index]
    }

    pub fn degree(&self) -> u64 {
        self.exponents.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    /// Variable indices with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    pub fn divides(&self, other: &Self) -> bool {
        debug_assert_eq!(self.arity(), other.arity());
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(a, b)| a <= b)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, IdealError> {
        debug_assert_eq!(self.arity(), other.arity());
        let exponents = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .map(|(a, b)| a.checked_add(*b).ok_or(IdealError::ExponentOverflow))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self { exponents })
    }

    pub fn checked_pow(&self, k: u32) -> Result<Self, IdealError> {
        let exponents = self
            .exponents
            .iter()
            .map(|&e| e.checked_mul(k).ok_or(IdealError::ExponentOverflow))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self { exponents })
    }

    pub fn lcm(&self, other: &Self) -> Self {
        debug_assert_eq!(self.arity(), other.arity());
        let exponents = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .map(|(a, b)| *a.max(b))
            .collect();
        Self { exponents }
    }

    pub fn gcd(&self, other: &Self) -> Self {
        debug_assert_eq!(self.arity(), other.arity());
        let exponents = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .map(|(a, b)| *a.min(b))
            .collect();
        Self { exponents }
    }

    /// `self / gcd(self, other)`: the generator image under colon by `other`.
    pub fn quotient_by(&self, other: &Self) -> Self {
        debug_assert_eq!(self.arity(), other.arity());
        let exponents = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .map(|(a, b)| a.saturating_sub(*b))
            .collect();
        Self { exponents }
    }

    /// Copy with the exponents at `vars` set to zero.
    pub fn zeroed_at(&self, vars: &[usize]) -> Self {
        let mut exponents = self.exponents.clone();
        for &i in vars {
            exponents[i] = 0;
        }
        Self { exponents }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.arity(), other.arity());
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => self.exponents.cmp(&other.exponents),
            ord => ord,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_and_divisibility() {
        let m = Monomial::new(vec![2, 1]);
        assert_eq!(m.degree(), 3);
        assert!(Monomial::new(vec![2, 0]).divides(&m));
        assert!(!m.divides(&Monomial::new(vec![2, 0])));
        assert!(Monomial::one(2).divides(&m));
    }

    #[test]
    fn graded_lex_order() {
        let x2 = Monomial::new(vec![2, 0]);
        let xy = Monomial::new(vec![1, 1]);
        let y2 = Monomial::new(vec![0, 2]);
        let x = Monomial::new(vec![1, 0]);
        // degree first, then lex with the first variable most significant
        assert!(x2 > xy && xy > y2);
        assert!(y2 > x);
        assert!(Monomial::one(2) < x);
    }

    #[test]
    fn quotient_saturates() {
        let g = Monomial::new(vec![3, 1]);
        let u = Monomial::new(vec![1, 4]);
        assert_eq!(g.quotient_by(&u), Monomial::new(vec![2, 0]));
    }

    #[test]
    fn overflow_is_reported() {
        let m = Monomial::new(vec![u32::MAX]);
        assert_eq!(m.checked_mul(&Monomial::new(vec![1])), Err(IdealError::ExponentOverflow));
        assert_eq!(m.checked_pow(2), Err(IdealError::ExponentOverflow));
    }
}
