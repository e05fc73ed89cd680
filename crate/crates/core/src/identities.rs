//! Instance checks for the digital binomial theorem and its analogs.
//!
//! Each verifier builds one side from a closed form (a product, a Gaussian
//! binomial sum, a derivative) and the other side from
//! [`oracle_carry_free_sum`], a plain sum over every `m ≼_b n`. The two are
//! then compared structurally.
//!
//! Two printed formulas are read as follows. The q-derivative identity is
//! stated with the weight `z_m(m)`; it is implemented with `z_n(m)`, and the
//! symbolic check against `C(N,2)·y·(x+y)^{N−1}` confirms that reading. The
//! x-derivative identity sums `1/(1+q^i)` over an index `j`; it is read as
//! `Σ_{j=0}^{N−1} 1/(1+q^j)` and verified in the denominator-free form
//! `Σ_m s(m) q^{z_n(m)} = Σ_j Π_{i≠j} (1+q^i)` with `i, j` in `0..N`.

use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::binomlib::{self, gen_binomial, BinomError};
use crate::digits::{self, DigitError, DigitVector};
use crate::exactalg::{Coefficient, Monomial, PolyError, Polynomial, Rational, Variable, MAX_INDEX};
use crate::report::{IdentityKind, Mode, VerificationReport};
use crate::sierpinski::MatrixError;

/// Summand limit for the symbolic multivariable and three-parameter checks.
pub const MAX_SYMBOLIC_SUMMANDS: u64 = 4096;
/// Summand limit in random-eval mode.
pub const MAX_RANDOM_EVAL_SUMMANDS: u64 = 1 << 20;
/// Largest bit count for the binary identities (`2^N` summands).
pub const MAX_BINARY_BITS: u32 = 16;
/// Largest `N` for the integer digit-sum total.
pub const MAX_DIGIT_SUM_BITS: u32 = 30;
/// Sample points per random-eval check.
pub const RANDOM_EVAL_POINTS: usize = 5;
/// Numerators and denominators of sample values are drawn from `1..=RANDOM_EVAL_BOUND`.
pub const RANDOM_EVAL_BOUND: i64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdentityError {
    #[error("parameter {name} = {value} is out of range")]
    OutOfRange { name: &'static str, value: i64 },
    #[error("{summands} summands exceed the limit of {limit}")]
    TooLargeForSymbolic { summands: u64, limit: u64 },
    #[error("{width} digits exceed the {MAX_INDEX} available variable slots")]
    TooManyDigits { width: usize },
    #[error(transparent)]
    Digit(#[from] DigitError),
    #[error(transparent)]
    Binom(#[from] BinomError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

fn x() -> Polynomial {
    Polynomial::var(Variable::X)
}

fn y() -> Polynomial {
    Polynomial::var(Variable::Y)
}

fn mono(powers: &[(Variable, u64)]) -> Polynomial {
    Polynomial::term(
        Rational::ONE,
        Monomial::from_powers(powers.iter().map(|&(v, e)| (v, u32::try_from(e).expect("exponent fits u32")))),
    )
}

fn popcount(n: u64) -> u64 {
    u64::from(n.count_ones())
}

fn bit_width(n: u64) -> usize {
    (64 - n.leading_zeros()) as usize
}

fn positive_bits(name: &'static str, n: u32) -> Result<u64, IdentityError> {
    if n == 0 || n > MAX_BINARY_BITS {
        return Err(IdentityError::OutOfRange { name, value: i64::from(n) });
    }
    Ok((1u64 << n) - 1)
}

fn binary_summands(n: u64) -> Result<(), IdentityError> {
    let s = popcount(n);
    if s > u64::from(MAX_BINARY_BITS) {
        return Err(IdentityError::TooLargeForSymbolic { summands: 1 << s.min(63), limit: 1 << MAX_BINARY_BITS });
    }
    Ok(())
}

/// `Σ_{m ≼_b n} term(m, n − m)`, summed one summand at a time.
pub fn oracle_carry_free_sum<T, F>(n: u64, base: u32, mut term: F) -> Result<T, IdentityError>
where
    T: Coefficient,
    F: FnMut(u64, u64) -> T,
{
    let mut acc = T::zero();
    for m in digits::enumerate_dominated(&n, base)? {
        acc.accumulate(&term(m, n - m));
    }
    Ok(acc)
}

/// The q-weighted summand `q^{z_n(m)}·x^{s(m)}·y^{s(n−m)}` at width `width`.
fn q_weighted_term(m: u64, c: u64, n: u64, width: usize) -> Polynomial {
    let z = digits::z_weight(&m, &n, 2, width).expect("m is dominated by n");
    mono(&[(Variable::Q, z), (Variable::X, popcount(m)), (Variable::Y, popcount(c))])
}

/// `(x + y)^{s(n)} = Σ_{m ≼ n} x^{s(m)} y^{s(n−m)}`.
pub fn verify_digital_binomial(n: u64) -> Result<VerificationReport, IdentityError> {
    binary_summands(n)?;
    let lhs = (&x() + &y()).pow(popcount(n) as u32);
    let rhs = oracle_carry_free_sum(n, 2, |m, c| mono(&[(Variable::X, popcount(m)), (Variable::Y, popcount(c))]))?;
    Ok(VerificationReport::symbolic(IdentityKind::DigitalBinomial, vec![("n", n)], lhs, rhs))
}

/// `Π_i C(x + q^i y; 1, n_i) = Σ_{m ≼ n} q^{z_n(m)} x^{s(m)} y^{s(n−m)}`.
pub fn verify_q_digital(n: u64) -> Result<VerificationReport, IdentityError> {
    binary_summands(n)?;
    let width = bit_width(n);
    let nd = DigitVector::expand(&n, 2, width)?;
    let mut lhs = Polynomial::one();
    for (i, &d) in nd.digits().iter().enumerate() {
        let arg = &x() + &mono(&[(Variable::Q, i as u64), (Variable::Y, 1)]);
        lhs = &lhs * &gen_binomial(&arg, &Polynomial::one(), d);
    }
    let rhs = oracle_carry_free_sum(n, 2, |m, c| q_weighted_term(m, c, n, width))?;
    Ok(VerificationReport::symbolic(IdentityKind::QDigital, vec![("n", n)], lhs, rhs))
}

/// `(x + y)(x + qy)···(x + q^{N−1}y) = Σ_{m ≤ 2^N−1} q^{z_n(m)} x^{s(m)} y^{s(n−m)}`.
pub fn verify_special_case(levels: u32) -> Result<VerificationReport, IdentityError> {
    let n = positive_bits("N", levels)?;
    let lhs = binomlib::rothe_lhs(levels);
    let rhs = oracle_carry_free_sum(n, 2, |m, c| q_weighted_term(m, c, n, levels as usize))?;
    Ok(VerificationReport::symbolic(IdentityKind::SpecialCase, vec![("N", u64::from(levels))], lhs, rhs))
}

/// Rothe: `Π_{i<N} (x + q^i y) = Σ_k q^{k(k−1)/2} [N,k]_q x^{N−k} y^k`.
pub fn verify_rothe(levels: u32) -> Result<VerificationReport, IdentityError> {
    positive_bits("N", levels)?;
    let lhs = binomlib::rothe_lhs(levels);
    let rhs = binomlib::rothe_rhs(levels);
    Ok(VerificationReport::symbolic(IdentityKind::Rothe, vec![("N", u64::from(levels))], lhs, rhs))
}

/// `q^{k(k−1)/2} [N,k]_q = Σ_{m ≤ 2^N−1, s(m)=k} q^{z_n(n−m)}`, the right
/// side by filtering every `m ≤ n`.
pub fn verify_q_binomial_formula(levels: u32, k: i64) -> Result<VerificationReport, IdentityError> {
    let n = positive_bits("N", levels)?;
    let gauss = binomlib::q_binomial_product(levels, k)?;
    let k = k as u64;
    let lhs = &mono(&[(Variable::Q, k * k.saturating_sub(1) / 2)]) * &gauss;
    let mut rhs = Polynomial::zero();
    for m in 0..=n {
        if popcount(m) == k {
            let z = digits::z_weight(&(n - m), &n, 2, levels as usize)?;
            rhs += &mono(&[(Variable::Q, z)]);
        }
    }
    Ok(VerificationReport::symbolic(IdentityKind::QBinomialFormula, vec![("N", u64::from(levels)), ("k", k)], lhs, rhs))
}

fn special_case_oracle(levels: u32) -> Result<(u64, Polynomial), IdentityError> {
    let n = positive_bits("N", levels)?;
    let sum = oracle_carry_free_sum(n, 2, |m, c| q_weighted_term(m, c, n, levels as usize))?;
    Ok((n, sum))
}

fn at_x_y_one(p: &Polynomial) -> Polynomial {
    p.substitute_var(Variable::X, &Polynomial::one()).substitute_var(Variable::Y, &Polynomial::one())
}

fn one_plus_q_pow(i: u32) -> Polynomial {
    &Polynomial::one() + &Polynomial::var_pow(Variable::Q, i)
}

/// `Σ_{m ≤ n} q^{z_n(m)} = 2(1 + q)···(1 + q^{N−1})`, the left side obtained
/// by setting `x = y = 1` in the oracle sum.
pub fn identity_sum_q(levels: u32) -> Result<VerificationReport, IdentityError> {
    let (_, sum) = special_case_oracle(levels)?;
    let lhs = at_x_y_one(&sum);
    let rhs = (1..levels).fold(Polynomial::from(2i64), |acc, i| &acc * &one_plus_q_pow(i));
    Ok(VerificationReport::symbolic(IdentityKind::SumQ, vec![("N", u64::from(levels))], lhs, rhs))
}

/// `Σ_{m ≤ n} s(m) q^{z_n(m)} = Σ_{j<N} Π_{i<N, i≠j} (1 + q^i)`: the
/// x-derivative of the oracle sum at `x = y = 1`, against the cleared form of
/// `2(1+q)···(1+q^{N−1})·Σ_j 1/(1+q^j)`.
pub fn identity_deriv_x(levels: u32) -> Result<VerificationReport, IdentityError> {
    let (_, sum) = special_case_oracle(levels)?;
    let lhs = at_x_y_one(&sum.derivative(Variable::X));
    let mut rhs = Polynomial::zero();
    for j in 0..levels {
        let others = (0..levels).filter(|&i| i != j).fold(Polynomial::one(), |acc, i| &acc * &one_plus_q_pow(i));
        rhs += &others;
    }
    Ok(VerificationReport::symbolic(IdentityKind::DerivX, vec![("N", u64::from(levels))], lhs, rhs))
}

/// The integer corollary `Σ_{m < 2^N} s(m) = N·2^{N−1}`.
pub fn verify_digit_sum_total(levels: u32) -> Result<VerificationReport, IdentityError> {
    if levels == 0 || levels > MAX_DIGIT_SUM_BITS {
        return Err(IdentityError::OutOfRange { name: "N", value: i64::from(levels) });
    }
    let total: u64 = (0..1u64 << levels).map(|m| digits::sum_of_digits(&m, 2).expect("base 2")).sum();
    let closed = u64::from(levels) << (levels - 1);
    Ok(VerificationReport::symbolic(
        IdentityKind::DigitSumTotal,
        vec![("N", u64::from(levels))],
        Polynomial::constant(Rational::from(total)),
        Polynomial::constant(Rational::from(closed)),
    ))
}

/// `Σ_{m ≤ n} z_n(m) x^{s(m)} y^{s(n−m)} = C(N, 2)·y·(x + y)^{N−1}`.
pub fn identity_deriv_q(levels: u32) -> Result<VerificationReport, IdentityError> {
    let n = positive_bits("N", levels)?;
    let width = levels as usize;
    let lhs = oracle_carry_free_sum(n, 2, |m, c| {
        let z = digits::z_weight(&m, &n, 2, width).expect("dominated");
        mono(&[(Variable::X, popcount(m)), (Variable::Y, popcount(c))]).scale(&Rational::from(z))
    })?;
    let choose = Rational::from(binomlib::binomial(u64::from(levels), 2));
    let rhs = (&y() * &(&x() + &y()).pow(levels - 1)).scale(&choose);
    Ok(VerificationReport::symbolic(IdentityKind::DerivQ, vec![("N", u64::from(levels))], lhs, rhs))
}

/// Both sides of the multivariable theorem for explicit slot values.
fn multivariable_sides<T: Coefficient>(
    n: u64,
    base: u32,
    nd: &DigitVector,
    xs: &[T],
    ys: &[T],
    rs: &[T],
) -> Result<(T, T), IdentityError> {
    let width = nd.width();
    let mut lhs = T::one();
    for i in 0..width {
        lhs = lhs.times(&gen_binomial(&xs[i].plus(&ys[i]), &rs[i], nd.digit(i)));
    }
    let table = |vals: &[T]| -> Vec<Vec<T>> {
        (0..width).map(|i| (0..base).map(|d| gen_binomial(&vals[i], &rs[i], d)).collect()).collect()
    };
    let (x_table, y_table) = (table(xs), table(ys));
    let rhs = oracle_carry_free_sum(n, base, |m, c| {
        let md = DigitVector::expand(&m, base, width).expect("m <= n");
        let cd = DigitVector::expand(&c, base, width).expect("n - m <= n");
        let mut t = T::one();
        for i in 0..width {
            t = t.times(&x_table[i][md.digit(i) as usize]);
        }
        for i in 0..width {
            t = t.times(&y_table[i][cd.digit(i) as usize]);
        }
        t
    })?;
    Ok((lhs, rhs))
}

fn dominated_size(nd: &DigitVector, limit: u64) -> Result<(), IdentityError> {
    match nd.dominated_count() {
        Some(s) if s <= limit => Ok(()),
        s => Err(IdentityError::TooLargeForSymbolic { summands: s.unwrap_or(u64::MAX), limit }),
    }
}

fn random_value(rng: &mut ChaCha8Rng) -> Rational {
    Rational::new(rng.gen_range(1..=RANDOM_EVAL_BOUND), rng.gen_range(1..=RANDOM_EVAL_BOUND))
}

/// `Π_i C(x_i + y_i; r_i, n_i) = Σ_{m ≼_b n} Π_i C(x_i; r_i, m_i) Π_i C(y_i; r_i, n_i − m_i)`
/// in the `3N` variables `x_i, y_i, r_i`.
///
/// In [`Mode::RandomEval`] both sides are evaluated exactly at
/// [`RANDOM_EVAL_POINTS`] seeded random rational points instead.
pub fn verify_multivariable(base: u32, n: u64, mode: Mode) -> Result<VerificationReport, IdentityError> {
    let nd = DigitVector::minimal(&n, base)?;
    let width = nd.width();
    if width > MAX_INDEX {
        return Err(IdentityError::TooManyDigits { width });
    }
    let params = vec![("b", u64::from(base)), ("n", n)];
    match mode {
        Mode::Symbolic => {
            dominated_size(&nd, MAX_SYMBOLIC_SUMMANDS)?;
            let mut xs = Vec::with_capacity(width);
            let mut ys = Vec::with_capacity(width);
            let mut rs = Vec::with_capacity(width);
            for i in 0..width {
                xs.push(Polynomial::var(Variable::x(i)?));
                ys.push(Polynomial::var(Variable::y(i)?));
                rs.push(Polynomial::var(Variable::r(i)?));
            }
            let (lhs, rhs) = multivariable_sides(n, base, &nd, &xs, &ys, &rs)?;
            Ok(VerificationReport::symbolic(IdentityKind::Multivariable, params, lhs, rhs))
        }
        Mode::RandomEval { seed } => {
            dominated_size(&nd, MAX_RANDOM_EVAL_SUMMANDS)?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut shown: Option<(Rational, Rational)> = None;
            let mut passed = true;
            for _ in 0..RANDOM_EVAL_POINTS {
                let mut slots = || (0..width).map(|_| random_value(&mut rng)).collect::<Vec<_>>();
                let (xs, ys, rs) = (slots(), slots(), slots());
                let (lhs, rhs) = multivariable_sides(n, base, &nd, &xs, &ys, &rs)?;
                let agree = lhs == rhs;
                if shown.is_none() || (passed && !agree) {
                    shown = Some((lhs, rhs));
                }
                passed &= agree;
            }
            let (lhs, rhs) = shown.expect("at least one point");
            Ok(VerificationReport {
                identity: IdentityKind::Multivariable,
                params,
                passed,
                lhs: Polynomial::constant(lhs),
                rhs: Polynomial::constant(rhs),
                mode,
                eval_points: Some(RANDOM_EVAL_POINTS),
            })
        }
    }
}

/// The multivariable theorem at `x_i = p^i x`, `y_i = q^i y`, `r_i = r`.
pub fn verify_three_parameter(base: u32, n: u64) -> Result<VerificationReport, IdentityError> {
    let nd = DigitVector::minimal(&n, base)?;
    dominated_size(&nd, MAX_SYMBOLIC_SUMMANDS)?;
    let width = nd.width();
    let xs: Vec<Polynomial> = (0..width).map(|i| mono(&[(Variable::P, i as u64), (Variable::X, 1)])).collect();
    let ys: Vec<Polynomial> = (0..width).map(|i| mono(&[(Variable::Q, i as u64), (Variable::Y, 1)])).collect();
    let rs = vec![Polynomial::var(Variable::R); width];
    let (lhs, rhs) = multivariable_sides(n, base, &nd, &xs, &ys, &rs)?;
    Ok(VerificationReport::symbolic(IdentityKind::ThreeParameter, vec![("b", u64::from(base)), ("n", n)], lhs, rhs))
}

/// `(p^{N−1}x + y)(p^{N−2}x + qy)···(x + q^{N−1}y) = Σ_m p^{w_n(m)} q^{z_n(m)} x^{s(m)} y^{s(n−m)}`.
pub fn verify_pq_analog(levels: u32) -> Result<VerificationReport, IdentityError> {
    let n = positive_bits("N", levels)?;
    let width = levels as usize;
    let lhs = (0..levels).fold(Polynomial::one(), |acc, i| {
        let factor = &mono(&[(Variable::P, u64::from(levels - 1 - i)), (Variable::X, 1)])
            + &mono(&[(Variable::Q, u64::from(i)), (Variable::Y, 1)]);
        &acc * &factor
    });
    let rhs = oracle_carry_free_sum(n, 2, |m, c| {
        let w = digits::w_weight(&m, &n, width).expect("dominated");
        let z = digits::z_weight(&m, &n, 2, width).expect("dominated");
        mono(&[(Variable::P, w), (Variable::Q, z), (Variable::X, popcount(m)), (Variable::Y, popcount(c))])
    })?;
    Ok(VerificationReport::symbolic(IdentityKind::PqAnalog, vec![("N", u64::from(levels))], lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::Family;
    use crate::sierpinski::{build_kron, multiply, VariableVectors};
    use alloc::collections::BTreeMap;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    #[test]
    fn oracle_examples() {
        let t = |m: u64, c: u64| mono(&[(Variable::X, popcount(m)), (Variable::Y, popcount(c))]);
        assert_eq!(oracle_carry_free_sum(0, 2, t).unwrap(), Polynomial::one());
        assert_eq!(oracle_carry_free_sum(7, 2, t).unwrap(), p("(x + y)^3"));
        assert_eq!(oracle_carry_free_sum(4, 2, t).unwrap(), p("x + y"));
        assert!(oracle_carry_free_sum(4, 1, t).is_err());
    }

    #[test]
    fn digital_binomial_examples() {
        for (n, s) in [(0u64, "1"), (7, "(x+y)^3"), (12, "(x+y)^2")] {
            let r = verify_digital_binomial(n).unwrap();
            assert!(r.passed);
            assert_eq!(r.lhs, p(s));
            assert_eq!(r.rhs, p(s));
        }
    }

    #[test]
    fn q_digital_examples() {
        let r = verify_q_digital(0).unwrap();
        assert!(r.passed && r.lhs == Polynomial::one());
        let r = verify_q_digital(7).unwrap();
        assert!(r.passed);
        assert_eq!(r.lhs, p("(x + y)*(x + q*y)*(x + q^2*y)"));
        let r = verify_q_digital(5).unwrap();
        assert!(r.passed);
        assert_eq!(r.rhs, p("(x + y)*(x + q^2*y)"));
    }

    #[test]
    fn special_case_and_rothe() {
        for n in [1, 3, 6] {
            assert!(verify_special_case(n).unwrap().passed);
        }
        assert_eq!(verify_special_case(1).unwrap().rhs, p("x + y"));
        assert!(verify_rothe(1).unwrap().passed);
        assert_eq!(verify_rothe(2).unwrap().rhs, p("x^2 + (1+q)*x*y + q*y^2"));
        assert!(verify_rothe(5).unwrap().passed);
        assert!(verify_special_case(0).is_err());
        assert!(verify_rothe(0).is_err());
    }

    #[test]
    fn q_binomial_formula_examples() {
        let r = verify_q_binomial_formula(3, 1).unwrap();
        assert!(r.passed);
        assert_eq!(r.rhs, p("1 + q + q^2"));
        let r = verify_q_binomial_formula(3, 3).unwrap();
        assert!(r.passed);
        assert_eq!(r.rhs, p("q^3"));
        let r = verify_q_binomial_formula(3, 2).unwrap();
        assert_eq!(r.rhs, p("q + q^2 + q^3"));
        for n in 1..=6 {
            assert_eq!(verify_q_binomial_formula(n, 0).unwrap().rhs, Polynomial::one());
        }
        assert!(matches!(verify_q_binomial_formula(3, 4), Err(IdentityError::Binom(_))));
    }

    #[test]
    fn sum_q_examples() {
        assert_eq!(identity_sum_q(1).unwrap().lhs, Polynomial::from(2i64));
        let r = identity_sum_q(3).unwrap();
        assert!(r.passed);
        assert_eq!(r.rhs, p("2*(1+q)*(1+q^2)"));
        let at_one = identity_sum_q(2).unwrap().lhs.substitute_var(Variable::Q, &Polynomial::one());
        assert_eq!(at_one, Polynomial::from(4i64));
    }

    #[test]
    fn deriv_x_examples() {
        let r = identity_deriv_x(1).unwrap();
        assert!(r.passed);
        assert_eq!(r.lhs, Polynomial::one());
        assert!(identity_deriv_x(4).unwrap().passed);
        let r3 = identity_deriv_x(3).unwrap();
        assert_eq!(r3.lhs.substitute_var(Variable::Q, &Polynomial::one()), Polynomial::from(12i64));
        let total = verify_digit_sum_total(3).unwrap();
        assert!(total.passed);
        assert_eq!(total.lhs, Polynomial::from(12i64));
    }

    #[test]
    fn deriv_q_examples() {
        let r = identity_deriv_q(1).unwrap();
        assert!(r.passed && r.lhs.is_zero());
        let r = identity_deriv_q(2).unwrap();
        assert!(r.passed);
        assert_eq!(r.lhs, p("y*(x + y)"));
        let r = identity_deriv_q(4).unwrap();
        assert!(r.passed);
        assert_eq!(r.rhs, p("6*y*(x+y)^3"));
    }

    #[test]
    fn deriv_q_matches_differentiating_the_q_sum() {
        for n in 1..=5 {
            let (_, sum) = special_case_oracle(n).unwrap();
            let via_derivative = sum.derivative(Variable::Q).substitute_var(Variable::Q, &Polynomial::one());
            assert_eq!(via_derivative, identity_deriv_q(n).unwrap().lhs);
        }
    }

    #[test]
    fn multivariable_examples() {
        for b in 2..=4 {
            let r = verify_multivariable(b, 0, Mode::Symbolic).unwrap();
            assert!(r.passed && r.lhs == Polynomial::one());
        }
        let r = verify_multivariable(2, 7, Mode::Symbolic).unwrap();
        assert!(r.passed);
        assert_eq!(r.lhs.variables().len(), 6);
        let r = verify_multivariable(3, 5, Mode::Symbolic).unwrap();
        assert!(r.passed);
        let r = verify_multivariable(2, 1000, Mode::RandomEval { seed: 42 }).unwrap();
        assert!(r.passed);
        assert_eq!(r.eval_points, Some(RANDOM_EVAL_POINTS));
        assert_eq!(r, verify_multivariable(2, 1000, Mode::RandomEval { seed: 42 }).unwrap());
        assert!(matches!(
            verify_multivariable(2, (1 << 13) - 1, Mode::Symbolic),
            Err(IdentityError::TooLargeForSymbolic { summands: 8192, limit: 4096 })
        ));
        assert!(matches!(verify_multivariable(2, 1 << 40, Mode::Symbolic), Err(IdentityError::TooManyDigits { .. })));
    }

    #[test]
    fn three_parameter_examples() {
        let r = verify_three_parameter(2, 1).unwrap();
        assert!(r.passed);
        assert_eq!(r.lhs, p("x + y"));
        assert!(verify_three_parameter(2, 6).unwrap().passed);
        assert!(verify_three_parameter(3, 8).unwrap().passed);
    }

    #[test]
    fn pq_analog_examples() {
        assert_eq!(verify_pq_analog(1).unwrap().rhs, p("x + y"));
        let r = verify_pq_analog(2).unwrap();
        assert!(r.passed);
        assert_eq!(r.lhs, p("(p*x + y)*(x + q*y)"));
        assert!(verify_pq_analog(4).unwrap().passed);
    }

    #[test]
    fn q_one_shadow_is_digital_binomial() {
        for n in 0..64 {
            let q = verify_q_digital(n).unwrap();
            let plain = verify_digital_binomial(n).unwrap();
            let one = Polynomial::one();
            assert_eq!(q.lhs.substitute_var(Variable::Q, &one), plain.lhs, "n={n}");
            assert_eq!(q.rhs.substitute_var(Variable::Q, &one), plain.rhs, "n={n}");
        }
    }

    #[test]
    fn q_digital_is_a_specialization_of_multivariable() {
        for n in 0..32u64 {
            let multi = verify_multivariable(2, n, Mode::Symbolic).unwrap();
            let width = bit_width(n);
            let mut bind = BTreeMap::new();
            for i in 0..width {
                bind.insert(Variable::x(i).unwrap(), x());
                bind.insert(Variable::y(i).unwrap(), mono(&[(Variable::Q, i as u64), (Variable::Y, 1)]));
                bind.insert(Variable::r(i).unwrap(), Polynomial::one());
            }
            let q = verify_q_digital(n).unwrap();
            assert_eq!(multi.lhs.substitute(&bind), q.lhs, "n={n}");
            assert_eq!(multi.rhs.substitute(&bind), q.rhs, "n={n}");
        }
    }

    #[test]
    fn matrix_entry_gives_multivariable_sum() {
        for (b, levels) in [(2u32, 1u32), (2, 2), (2, 3), (3, 1), (3, 2), (3, 3)] {
            let vx = VariableVectors::symbolic(Family::X, levels).unwrap();
            let vy = VariableVectors::symbolic(Family::Y, levels).unwrap();
            let prod = multiply(&build_kron(b, levels, &vx).unwrap(), &build_kron(b, levels, &vy).unwrap()).unwrap();
            for n in 0..(b as u64).pow(levels) {
                let width = levels as usize;
                // roles as read off at (n, 0): x carries n − m, y carries m
                let oracle = oracle_carry_free_sum(n, b, |m, c| {
                    let md = DigitVector::expand(&m, b, width).unwrap();
                    let cd = DigitVector::expand(&c, b, width).unwrap();
                    let mut t = Polynomial::one();
                    for i in 0..width {
                        t = &t * &gen_binomial(&vx.xs()[i], &vx.rs()[i], cd.digit(i));
                        t = &t * &gen_binomial(&vy.xs()[i], &vy.rs()[i], md.digit(i));
                    }
                    t
                })
                .unwrap();
                assert_eq!(prod.entry(n as usize, 0).unwrap(), oracle, "b={b} N={levels} n={n}");
            }
        }
    }
}
