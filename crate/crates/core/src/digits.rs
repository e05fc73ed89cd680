//! Base-`b` digit expansions and the digit statistics built on them.
//!
//! All predicates here work digit by digit, so they accept any [`Natural`]:
//! machine integers for the hot paths and [`BigUint`] when `n` does not fit.
//! Digit vectors are stored least-significant first.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DigitError {
    #[error("invalid base {0}: the base must be at least 2")]
    InvalidBase(u32),
    #[error("width {width} is too small: the value needs {needed} digits")]
    WidthTooSmall { width: usize, needed: usize },
    #[error("m is not digitally dominated by n")]
    NotDominated,
}

/// A non-negative integer that can be split into base-`b` digits.
pub trait Natural: Clone + Ord {
    /// Minimal base-`base` expansion, least-significant first. Zero has no digits.
    fn to_digits(&self, base: u32) -> Vec<u32>;

    /// Rebuilds a value from its digits; `None` if it does not fit in `Self`.
    fn from_digits(digits: &[u32], base: u32) -> Option<Self>;
}

macro_rules! natural_for_uint {
    ($($t:ty),*) => {$(
        impl Natural for $t {
            fn to_digits(&self, base: u32) -> Vec<u32> {
                let b = <$t>::try_from(base).ok();
                let mut out = Vec::new();
                let mut n = *self;
                match b {
                    Some(b) => {
                        while n != 0 {
                            out.push((n % b) as u32);
                            n /= b;
                        }
                    }
                    // base larger than the type: a single digit
                    None if n != 0 => out.push(n as u32),
                    None => {}
                }
                out
            }

            fn from_digits(digits: &[u32], base: u32) -> Option<Self> {
                let mut acc: $t = 0;
                for &d in digits.iter().rev() {
                    let b = <$t>::try_from(base).ok();
                    acc = match b {
                        Some(b) => acc.checked_mul(b)?,
                        None if acc == 0 => 0,
                        None => return None,
                    };
                    acc = acc.checked_add(<$t>::try_from(d).ok()?)?;
                }
                Some(acc)
            }
        }
    )*};
}

natural_for_uint!(u8, u16, u32, u64, u128, usize);

impl Natural for BigUint {
    fn to_digits(&self, base: u32) -> Vec<u32> {
        if base <= 256 {
            if self.is_zero() {
                return Vec::new();
            }
            return self.to_radix_le(base).into_iter().map(u32::from).collect();
        }
        let b = BigUint::from(base);
        let mut out = Vec::new();
        let mut n = self.clone();
        while !n.is_zero() {
            let (q, r) = n.div_rem(&b);
            out.push(r.to_u32().unwrap_or(0));
            n = q;
        }
        out
    }

    fn from_digits(digits: &[u32], base: u32) -> Option<Self> {
        let mut acc = BigUint::zero();
        for &d in digits.iter().rev() {
            acc = acc * base + d;
        }
        Some(acc)
    }
}

fn check_base(base: u32) -> Result<(), DigitError> {
    if base < 2 {
        Err(DigitError::InvalidBase(base))
    } else {
        Ok(())
    }
}

/// Fixed-width base-`b` expansion of a non-negative integer.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DigitVector {
    base: u32,
    digits: Vec<u32>,
}

impl DigitVector {
    /// Expansion of `n` padded with zeros to exactly `width` digits.
    pub fn expand<N: Natural>(n: &N, base: u32, width: usize) -> Result<Self, DigitError> {
        check_base(base)?;
        let mut digits = n.to_digits(base);
        if digits.len() > width {
            return Err(DigitError::WidthTooSmall { width, needed: digits.len() });
        }
        digits.resize(width, 0);
        Ok(Self { base, digits })
    }

    /// Expansion of `n` at its minimal width (zero has width 0).
    pub fn minimal<N: Natural>(n: &N, base: u32) -> Result<Self, DigitError> {
        check_base(base)?;
        Ok(Self { base, digits: n.to_digits(base) })
    }

    /// Builds a vector from explicit digits; every digit must be below `base`.
    pub fn from_digits(digits: Vec<u32>, base: u32) -> Result<Self, DigitError> {
        check_base(base)?;
        if digits.iter().any(|&d| d >= base) {
            return Err(DigitError::InvalidBase(base));
        }
        Ok(Self { base, digits })
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn width(&self) -> usize {
        self.digits.len()
    }

    pub fn digits(&self) -> &[u32] {
        &self.digits
    }

    /// Digit at position `i`; positions past the width read as zero.
    pub fn digit(&self, i: usize) -> u32 {
        self.digits.get(i).copied().unwrap_or(0)
    }

    /// Pads to `width` with zero digits. Narrowing is not allowed.
    pub fn widen(&mut self, width: usize) -> Result<(), DigitError> {
        let needed = self.significant_width();
        if width < needed {
            return Err(DigitError::WidthTooSmall { width, needed });
        }
        self.digits.resize(width, 0);
        Ok(())
    }

    /// Width with leading zero digits stripped.
    pub fn significant_width(&self) -> usize {
        self.digits.iter().rposition(|&d| d != 0).map_or(0, |p| p + 1)
    }

    /// `Σ d_i · base^i`, or `None` if it overflows `N`.
    pub fn value<N: Natural>(&self) -> Option<N> {
        N::from_digits(&self.digits, self.base)
    }

    pub fn digit_sum(&self) -> u64 {
        self.digits.iter().map(|&d| u64::from(d)).sum()
    }

    /// Number of integers digitally dominated by this one: `Π (d_i + 1)`.
    pub fn dominated_count(&self) -> Option<u64> {
        self.digits.iter().try_fold(1u64, |acc, &d| acc.checked_mul(u64::from(d) + 1))
    }
}

impl fmt::Display for DigitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, d) in self.digits.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{d}")?;
        }
        f.write_str("]")
    }
}

pub fn digit_expansion<N: Natural>(n: &N, base: u32, width: usize) -> Result<DigitVector, DigitError> {
    DigitVector::expand(n, base, width)
}

/// `s_b(n)`, the sum of the base-`b` digits of `n`.
pub fn sum_of_digits<N: Natural>(n: &N, base: u32) -> Result<u64, DigitError> {
    check_base(base)?;
    Ok(n.to_digits(base).iter().map(|&d| u64::from(d)).sum())
}

/// `m ≼_b n`: every base-`b` digit of `m` is at most the matching digit of `n`.
pub fn dominates<N: Natural>(m: &N, n: &N, base: u32) -> Result<bool, DigitError> {
    check_base(base)?;
    let md = m.to_digits(base);
    let nd = n.to_digits(base);
    Ok(digits_dominated(&md, &nd))
}

pub(crate) fn digits_dominated(m: &[u32], n: &[u32]) -> bool {
    if m.len() > n.len() && m[n.len()..].iter().any(|&d| d != 0) {
        return false;
    }
    m.iter().zip(n).all(|(a, b)| a <= b)
}

/// True iff the base-`b` addition `j + k` never produces a carry.
///
/// This runs the schoolbook addition and watches the carry; it does not go
/// through [`dominates`].
pub fn is_carry_free<N: Natural>(j: &N, k: &N, base: u32) -> Result<bool, DigitError> {
    check_base(base)?;
    let jd = j.to_digits(base);
    let kd = k.to_digits(base);
    let width = jd.len().max(kd.len());
    let mut carry = 0u64;
    for t in 0..width {
        let s = u64::from(jd.get(t).copied().unwrap_or(0)) + u64::from(kd.get(t).copied().unwrap_or(0)) + carry;
        carry = s / u64::from(base);
        if carry != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

fn dominated_pair(m: &DigitVector, n: &DigitVector) -> Result<(), DigitError> {
    if digits_dominated(m.digits(), n.digits()) {
        Ok(())
    } else {
        Err(DigitError::NotDominated)
    }
}

/// Sum of positions where the digits of `m` and `n` differ.
pub(crate) fn z_from_digits(m: &[u32], n: &[u32]) -> u64 {
    let width = m.len().max(n.len());
    (0..width).filter(|&k| m.get(k).copied().unwrap_or(0) != n.get(k).copied().unwrap_or(0)).map(|k| k as u64).sum()
}

/// `z_n(m; b)`: the sum of the positions `k < width` at which the digit of `m`
/// differs from the digit of `n`. Requires `m ≼_b n` and `n < b^width`.
pub fn z_weight<N: Natural>(m: &N, n: &N, base: u32, width: usize) -> Result<u64, DigitError> {
    let nd = DigitVector::expand(n, base, width)?;
    let md = DigitVector::expand(m, base, width).map_err(|_| DigitError::NotDominated)?;
    dominated_pair(&md, &nd)?;
    Ok(z_from_digits(md.digits(), nd.digits()))
}

/// `w_n(m) = (width − 1)·s(m) − z_n(n − m)` in base 2.
///
/// The difference `n − m` is formed digit by digit, which is exact because
/// `m ≼_2 n`.
pub fn w_weight<N: Natural>(m: &N, n: &N, width: usize) -> Result<u64, DigitError> {
    let nd = DigitVector::expand(n, 2, width)?;
    let md = DigitVector::expand(m, 2, width).map_err(|_| DigitError::NotDominated)?;
    dominated_pair(&md, &nd)?;
    Ok(w_from_digits(md.digits(), nd.digits()))
}

pub(crate) fn w_from_digits(m: &[u32], n: &[u32]) -> u64 {
    let width = n.len() as u64;
    let diff: Vec<u32> = n.iter().enumerate().map(|(i, &d)| d - m.get(i).copied().unwrap_or(0)).collect();
    let s: u64 = m.iter().map(|&d| u64::from(d)).sum();
    width.saturating_sub(1) * s - z_from_digits(&diff, n)
}

/// Every `m ≼_b n` in increasing order.
///
/// Runs a mixed-radix odometer over the digit ranges `[0, n_i]`, so the cost is
/// proportional to the output rather than to `n`.
pub fn enumerate_dominated<N: Natural>(n: &N, base: u32) -> Result<Dominated<N>, DigitError> {
    check_base(base)?;
    let limit = n.to_digits(base);
    Ok(Dominated { current: alloc::vec![0; limit.len()], limit, base, done: false, _marker: core::marker::PhantomData })
}

/// Iterator returned by [`enumerate_dominated`].
#[derive(Debug, Clone)]
pub struct Dominated<N> {
    limit: Vec<u32>,
    current: Vec<u32>,
    base: u32,
    done: bool,
    _marker: core::marker::PhantomData<N>,
}

impl<N> Dominated<N> {
    /// Digits of the value the next call to `next` will yield.
    pub fn current_digits(&self) -> &[u32] {
        &self.current
    }
}

impl<N: Natural> Iterator for Dominated<N> {
    type Item = N;

    fn next(&mut self) -> Option<N> {
        if self.done {
            return None;
        }
        let value = N::from_digits(&self.current, self.base).expect("dominated value fits in the type of n");
        // advance: least-significant digit moves fastest, which keeps the order increasing
        let mut t = 0;
        loop {
            if t == self.limit.len() {
                self.done = true;
                break;
            }
            if self.current[t] < self.limit[t] {
                self.current[t] += 1;
                break;
            }
            self.current[t] = 0;
            t += 1;
        }
        Some(value)
    }
}

/// Minimal number of base-`b` digits needed for `n`.
pub fn minimal_width<N: Natural>(n: &N, base: u32) -> Result<usize, DigitError> {
    check_base(base)?;
    Ok(n.to_digits(base).len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use std::vec::Vec as StdVec;

    #[test]
    fn expansion_examples() {
        assert_eq!(digit_expansion(&7u64, 2, 3).unwrap().digits(), &[1, 1, 1]);
        assert_eq!(digit_expansion(&0u64, 5, 4).unwrap().digits(), &[0, 0, 0, 0]);
        assert_eq!(digit_expansion(&11u64, 3, 3).unwrap().digits(), &[2, 0, 1]);
    }

    #[test]
    fn expansion_errors() {
        assert_eq!(digit_expansion(&8u64, 2, 3), Err(DigitError::WidthTooSmall { width: 3, needed: 4 }));
        assert_eq!(digit_expansion(&8u64, 1, 3), Err(DigitError::InvalidBase(1)));
        assert_eq!(sum_of_digits(&8u64, 0), Err(DigitError::InvalidBase(0)));
        assert!(dominates(&1u64, &2, 1).is_err());
        assert!(is_carry_free(&1u64, &2, 1).is_err());
        assert!(enumerate_dominated(&1u64, 1).is_err());
    }

    #[test]
    fn widen_preserves_value() {
        let mut v = DigitVector::minimal(&11u64, 3).unwrap();
        assert_eq!(v.width(), 3);
        v.widen(6).unwrap();
        assert_eq!(v.digits(), &[2, 0, 1, 0, 0, 0]);
        assert_eq!(v.value::<u64>(), Some(11));
        assert!(v.widen(2).is_err());
        v.widen(3).unwrap();
        assert_eq!(v.width(), 3);
    }

    #[test]
    fn sum_of_digits_examples() {
        assert_eq!(sum_of_digits(&7u64, 2).unwrap(), 3);
        assert_eq!(sum_of_digits(&0u64, 2).unwrap(), 0);
        assert_eq!(sum_of_digits(&11u64, 3).unwrap(), 3);
    }

    #[test]
    fn dominance_examples() {
        assert!(dominates(&5u64, &7, 2).unwrap());
        assert!(dominates(&123u64, &123, 7).unwrap());
        assert!(!dominates(&2u64, &4, 2).unwrap());
        assert!(!dominates(&8u64, &7, 2).unwrap());
    }

    #[test]
    fn carry_free_examples() {
        assert!(is_carry_free(&5u64, &2, 2).unwrap());
        assert!(is_carry_free(&0u64, &12345, 3).unwrap());
        assert!(!is_carry_free(&1u64, &1, 2).unwrap());
    }

    #[test]
    fn z_weight_examples() {
        assert_eq!(z_weight(&6u64, &7, 2, 3).unwrap(), 0);
        assert_eq!(z_weight(&5u64, &7, 2, 3).unwrap(), 1);
        assert_eq!(z_weight(&3u64, &7, 2, 3).unwrap(), 2);
        assert_eq!(z_weight(&4u64, &7, 2, 3).unwrap(), 1);
        assert_eq!(z_weight(&2u64, &7, 2, 3).unwrap(), 2);
        assert_eq!(z_weight(&1u64, &7, 2, 3).unwrap(), 3);
        assert_eq!(z_weight(&0u64, &7, 2, 3).unwrap(), 3);
        assert_eq!(z_weight(&7u64, &7, 2, 3).unwrap(), 0);
        assert_eq!(z_weight(&22u64, &22, 5, 2).unwrap(), 0);
    }

    #[test]
    fn z_weight_errors() {
        assert_eq!(z_weight(&2u64, &4, 2, 3), Err(DigitError::NotDominated));
        assert_eq!(z_weight(&0u64, &8, 2, 3), Err(DigitError::WidthTooSmall { width: 3, needed: 4 }));
    }

    #[test]
    fn w_weight_examples() {
        assert_eq!(w_weight(&0u64, &7, 3).unwrap(), 0);
        assert_eq!(w_weight(&7u64, &7, 3).unwrap(), 3);
        assert_eq!(w_weight(&4u64, &7, 3).unwrap(), 0);
        assert_eq!(w_weight(&2u64, &4, 3), Err(DigitError::NotDominated));
    }

    #[test]
    fn enumerate_examples() {
        let all: StdVec<u64> = enumerate_dominated(&7u64, 2).unwrap().collect();
        assert_eq!(all, vec![0, 1, 2, 3, 4, 5, 6, 7]);
        let four: StdVec<u64> = enumerate_dominated(&4u64, 2).unwrap().collect();
        assert_eq!(four, vec![0, 4]);
        let five: StdVec<u64> = enumerate_dominated(&5u64, 3).unwrap().collect();
        assert_eq!(five, vec![0, 1, 2, 3, 4, 5]);
        let zero: StdVec<u64> = enumerate_dominated(&0u64, 3).unwrap().collect();
        assert_eq!(zero, vec![0]);
    }

    #[test]
    fn bigint_digits_agree_with_u128() {
        let n: u128 = 0xdead_beef_cafe_f00d_1234_5678;
        let big = BigUint::from(n);
        for b in [2u32, 3, 7, 10, 255, 256, 257, 1_000_003] {
            assert_eq!(big.to_digits(b), n.to_digits(b), "base {b}");
            assert_eq!(BigUint::from_digits(&n.to_digits(b), b), Some(big.clone()));
        }
    }

    #[test]
    fn large_base_fits_narrow_types() {
        assert_eq!(200u8.to_digits(1000), vec![200]);
        assert_eq!(u8::from_digits(&[200], 1000), Some(200));
        assert_eq!(u8::from_digits(&[1, 1], 1000), None);
        assert_eq!(u8::from_digits(&[0, 1], 16), Some(16));
    }
}
