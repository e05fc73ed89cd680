//! Generalized binomial coefficients and Gaussian binomials.
//!
//! The Gaussian binomial `[N, k]_q` is available by three independent
//! routes: the q-Pascal recurrence ([`q_binomial_product`]), the quotient of
//! `(1 − q^j)` products ([`q_binomial_quotient`]) and a weighted digit sum
//! over `N`-bit integers ([`q_binomial_digital`]).

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::digits;
use crate::exactalg::{Coefficient, Monomial, PolyError, Polynomial, Rational, Variable};
use crate::report::{IdentityKind, VerificationReport};

/// Largest `N` accepted by [`q_binomial_digital`]; it visits all `2^N` integers.
pub const MAX_DIGITAL_BITS: u32 = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BinomError {
    #[error("k = {k} is outside 0..={n}")]
    OutOfRange { n: u64, k: i64 },
    #[error("N = {0} is too large for the digit-sum route (at most {MAX_DIGITAL_BITS})")]
    TooLarge(u32),
    #[error("inexact division: {0}")]
    InexactDivision(PolyError),
}

/// `x(x + r)(x + 2r)···(x + (d−1)r) / d!`, and `1` when `d = 0`.
pub fn gen_binomial<T: Coefficient>(x: &T, r: &T, d: u32) -> T {
    let mut acc = T::one();
    let mut shift = T::zero();
    let mut factorial = Rational::ONE;
    for i in 0..d {
        acc = acc.times(&x.plus(&shift));
        shift = shift.plus(r);
        factorial *= &Rational::from(u64::from(i) + 1);
    }
    acc.scaled(&factorial.recip().expect("d! is nonzero"))
}

/// Ordinary binomial coefficient `C(n, k)` (zero when `k > n`).
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

fn check_range(n: u32, k: i64) -> Result<u32, BinomError> {
    if k < 0 || k > i64::from(n) {
        return Err(BinomError::OutOfRange { n: u64::from(n), k });
    }
    Ok(k as u32)
}

fn dense_to_poly(coeffs: &[BigUint]) -> Polynomial {
    Polynomial::from_terms(
        coeffs.iter().enumerate().map(|(i, c)| (Monomial::var_pow(Variable::Q, i as u32), Rational::from(c.clone()))),
    )
}

/// Gaussian binomial `[N, k]_q` by the q-Pascal recurrence
/// `B(N, k) = B(N−1, k−1) + q^k·B(N−1, k)`.
pub fn q_binomial_product(n: u32, k: i64) -> Result<Polynomial, BinomError> {
    let k = check_range(n, k)? as usize;
    // row[j] holds B(level, j) as dense coefficients in q, for j <= k
    let mut row: Vec<Vec<BigUint>> = vec![vec![BigUint::one()]];
    for level in 1..=n as usize {
        let width = level.min(k);
        let mut next: Vec<Vec<BigUint>> = Vec::with_capacity(width + 1);
        for j in 0..=width {
            let mut c: Vec<BigUint> = Vec::new();
            if j > 0 {
                c.clone_from(&row[j - 1]);
            }
            if j < row.len() && j < level {
                let shifted = &row[j];
                if c.len() < shifted.len() + j {
                    c.resize(shifted.len() + j, BigUint::zero());
                }
                for (i, v) in shifted.iter().enumerate() {
                    c[i + j] += v;
                }
            }
            next.push(c);
        }
        row = next;
    }
    Ok(dense_to_poly(&row[k]))
}

/// Gaussian binomial as the exact quotient
/// `(1−q^N)···(1−q^{N−k+1}) / ((1−q)···(1−q^k))`.
pub fn q_binomial_quotient(n: u32, k: i64) -> Result<Polynomial, BinomError> {
    let k = check_range(n, k)?;
    let one_minus = |j: u32| &Polynomial::one() - &Polynomial::var_pow(Variable::Q, j);
    let numerator = ((n - k + 1)..=n).fold(Polynomial::one(), |acc, j| &acc * &one_minus(j));
    let denominator = (1..=k).fold(Polynomial::one(), |acc, j| &acc * &one_minus(j));
    numerator.divide_exact(&denominator).map_err(BinomError::InexactDivision)
}

/// Gaussian binomial from the digit sum
/// `q^{k(k−1)/2}·[N, k]_q = Σ_{m ≤ 2^N−1, s(m) = k} q^{z_n(n−m)}`.
pub fn q_binomial_digital(n: u32, k: i64) -> Result<Polynomial, BinomError> {
    let k = check_range(n, k)?;
    if n > MAX_DIGITAL_BITS {
        return Err(BinomError::TooLarge(n));
    }
    let width = n as usize;
    let top: u64 = (1u64 << n) - 1;
    let mut counts: Vec<u64> = Vec::new();
    for m in 0..=top {
        if m.count_ones() != k {
            continue;
        }
        let z = digits::z_weight(&(top - m), &top, 2, width).expect("n - m is dominated by n") as usize;
        if counts.len() <= z {
            counts.resize(z + 1, 0);
        }
        counts[z] += 1;
    }
    let sum = Polynomial::from_terms(
        counts.iter().enumerate().map(|(e, &c)| (Monomial::var_pow(Variable::Q, e as u32), Rational::from(c))),
    );
    let shift = Polynomial::var_pow(Variable::Q, k * k.saturating_sub(1) / 2);
    sum.divide_exact(&shift).map_err(BinomError::InexactDivision)
}

/// `Π_{i<N} (x + q^i·y)`, the product side of Rothe's formula.
pub fn rothe_lhs(n: u32) -> Polynomial {
    let x = Polynomial::var(Variable::X);
    (0..n).fold(Polynomial::one(), |acc, i| {
        let factor = &x + &Polynomial::term(Rational::ONE, Monomial::from_powers([(Variable::Q, i), (Variable::Y, 1)]));
        &acc * &factor
    })
}

/// `Σ_k q^{k(k−1)/2}·[N, k]_q·x^{N−k}·y^k`.
pub fn rothe_rhs(n: u32) -> Polynomial {
    let mut out = Polynomial::zero();
    for k in 0..=n {
        let gauss = q_binomial_product(n, i64::from(k)).expect("k in range");
        let mono =
            Monomial::from_powers([(Variable::Q, k * k.saturating_sub(1) / 2), (Variable::X, n - k), (Variable::Y, k)]);
        out = &out + &gauss.mul_monomial(&Rational::ONE, &mono);
    }
    out
}

/// Checks `Σ_{v=q}^{p} C(x;r, p−v)·C(y;r, v−q) = C(x+y;r, p−q)` in the
/// variables `x, y, r`.
pub fn chu_vandermonde_check(p_idx: u32, q_idx: u32) -> Result<VerificationReport, BinomError> {
    if q_idx > p_idx {
        return Err(BinomError::OutOfRange { n: u64::from(p_idx), k: i64::from(q_idx) });
    }
    let x = Polynomial::var(Variable::X);
    let y = Polynomial::var(Variable::Y);
    let r = Polynomial::var(Variable::R);
    let mut lhs = Polynomial::zero();
    for v in q_idx..=p_idx {
        lhs = &lhs + &(&gen_binomial(&x, &r, p_idx - v) * &gen_binomial(&y, &r, v - q_idx));
    }
    let rhs = gen_binomial(&(&x + &y), &r, p_idx - q_idx);
    Ok(VerificationReport::symbolic(
        IdentityKind::ChuVandermonde,
        vec![("p_idx", u64::from(p_idx)), ("q_idx", u64::from(q_idx))],
        lhs,
        rhs,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    #[test]
    fn gen_binomial_examples() {
        let x = Polynomial::var(Variable::X);
        let r = Polynomial::var(Variable::R);
        assert_eq!(gen_binomial(&x, &r, 0), Polynomial::one());
        assert_eq!(gen_binomial(&x, &r, 2), p("1/2*x^2 + 1/2*x*r"));
        // r = 1: C(x + d − 1, d)
        assert_eq!(gen_binomial(&x, &Polynomial::one(), 3), p("1/6*x*(x+1)*(x+2)"));
        assert_eq!(gen_binomial(&Rational::from(5i64), &Rational::ONE, 2), Rational::from(15i64));
    }

    /// Falling-product form `(x+d−1)(x+d−2)···x / d!` built term by term.
    fn falling_oracle(d: u32) -> Polynomial {
        let x = Polynomial::var(Variable::X);
        let mut acc = Polynomial::one();
        let mut fact = 1i64;
        for i in (0..d).rev() {
            acc = &acc * &(&x + &Polynomial::from(i64::from(i)));
        }
        for i in 1..=i64::from(d) {
            fact *= i;
        }
        acc.scale(&Rational::new(1, fact))
    }

    #[test]
    fn gen_binomial_unit_step_is_ordinary_binomial() {
        let x = Polynomial::var(Variable::X);
        for d in 0..=10 {
            let g = gen_binomial(&x, &Polynomial::one(), d);
            assert_eq!(g.to_string(), falling_oracle(d).to_string());
            // and at integers it is C(x + d − 1, d)
            for xv in 1..6u64 {
                let val = g.eval_with(|_| Some(Rational::from(xv))).unwrap();
                assert_eq!(val, Rational::from(binomial(xv + u64::from(d) - 1, u64::from(d))));
            }
        }
    }

    #[test]
    fn gen_binomial_scaling() {
        // x -> r·u in C(x;r,d) gives r^d · C(u;1,d)
        let u = Polynomial::var(Variable::Y);
        let r = Polynomial::var(Variable::R);
        let x = Polynomial::var(Variable::X);
        for d in 0..=8 {
            let lhs = gen_binomial(&x, &r, d).substitute_var(Variable::X, &(&r * &u));
            let rhs = &r.pow(d) * &gen_binomial(&u, &Polynomial::one(), d);
            assert_eq!(lhs, rhs, "d = {d}");
        }
    }

    #[test]
    fn q_binomial_examples() {
        assert_eq!(q_binomial_product(3, 0).unwrap(), Polynomial::one());
        assert_eq!(q_binomial_product(3, 1).unwrap(), p("1 + q + q^2"));
        assert_eq!(q_binomial_product(3, 2).unwrap(), p("1 + q + q^2"));
        for n in 0..8 {
            assert_eq!(q_binomial_product(n, i64::from(n)).unwrap(), Polynomial::one());
        }
        assert_eq!(q_binomial_product(4, 2).unwrap(), p("1 + q + 2*q^2 + q^3 + q^4"));
        assert_eq!(q_binomial_product(3, 4), Err(BinomError::OutOfRange { n: 3, k: 4 }));
        assert_eq!(q_binomial_product(3, -1), Err(BinomError::OutOfRange { n: 3, k: -1 }));
    }

    #[test]
    fn q_binomial_digital_examples() {
        assert_eq!(q_binomial_digital(3, 2).unwrap(), p("1 + q + q^2"));
        for n in 0..6 {
            assert_eq!(q_binomial_digital(n, 0).unwrap(), Polynomial::one());
        }
        assert_eq!(q_binomial_digital(4, 2).unwrap(), p("1 + q + 2*q^2 + q^3 + q^4"));
        assert!(matches!(q_binomial_digital(3, 5), Err(BinomError::OutOfRange { .. })));
        assert_eq!(q_binomial_digital(40, 1), Err(BinomError::TooLarge(40)));
    }

    #[test]
    fn gaussian_symmetry_and_q_equals_one() {
        for n in 0..=12u32 {
            for k in 0..=n {
                let b = q_binomial_product(n, i64::from(k)).unwrap();
                assert_eq!(b, q_binomial_product(n, i64::from(n - k)).unwrap());
                let at_one = b.eval_with(|_| Some(Rational::ONE)).unwrap();
                assert_eq!(at_one, Rational::from(binomial(u64::from(n), u64::from(k))));
                assert!(b.terms().all(|(_, c)| c.is_integer() && !c.is_negative()));
            }
        }
    }

    #[test]
    fn recurrence_matches_quotient() {
        for n in 0..=8u32 {
            for k in 0..=n {
                let rec = q_binomial_product(n, i64::from(k)).unwrap();
                assert_eq!(rec, q_binomial_quotient(n, i64::from(k)).unwrap(), "N={n} k={k}");
            }
        }
    }

    #[test]
    fn digital_matches_recurrence() {
        for n in 0..=10u32 {
            for k in 0..=n {
                assert_eq!(
                    q_binomial_digital(n, i64::from(k)).unwrap(),
                    q_binomial_product(n, i64::from(k)).unwrap(),
                    "N={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn rothe_examples() {
        assert_eq!(rothe_rhs(0), Polynomial::one());
        assert_eq!(rothe_rhs(1), p("x + y"));
        assert_eq!(rothe_rhs(2), p("x^2 + (1 + q)*x*y + q*y^2"));
        for n in 0..=6 {
            assert_eq!(rothe_lhs(n), rothe_rhs(n));
        }
    }

    #[test]
    fn chu_vandermonde_examples() {
        let same = chu_vandermonde_check(3, 3).unwrap();
        assert!(same.passed);
        assert_eq!(same.lhs, Polynomial::one());
        let step = chu_vandermonde_check(4, 3).unwrap();
        assert!(step.passed);
        assert_eq!(step.rhs, p("x + y"));
        let big = chu_vandermonde_check(5, 1).unwrap();
        assert!(big.passed);
        assert_eq!(big.lhs.total_degree(), Some(4));
        assert!(chu_vandermonde_check(1, 2).is_err());
        for pi in 0..=8 {
            for qi in 0..=pi {
                assert!(chu_vandermonde_check(pi, qi).unwrap().passed);
            }
        }
    }

    #[test]
    fn binomial_small() {
        assert_eq!(binomial(5, 2), BigUint::from(10u32));
        assert_eq!(binomial(5, 6), BigUint::zero());
        assert_eq!(binomial(0, 0), BigUint::one());
        assert_eq!(binomial(60, 30), BigUint::from(118264581564861424u64));
    }
}
