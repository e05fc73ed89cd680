use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub};

use super::{PolyError, Rational, Variable};

/// A power product of variables, e.g. `q^2*x*y`.
///
/// Ordered by total degree first; within a degree, the monomial with the
/// larger exponent on the earliest variable (in canonical variable order)
/// comes first. Sorting ascending therefore gives `1 + q + q^2` and
/// `x^2 + x*y + y^2`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    degree: u32,
    // sorted by variable, exponents > 0
    powers: Vec<(Variable, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(v: Variable) -> Self {
        Self::var_pow(v, 1)
    }

    pub fn var_pow(v: Variable, e: u32) -> Self {
        if e == 0 {
            return Self::one();
        }
        Monomial { degree: e, powers: alloc::vec![(v, e)] }
    }

    /// Builds a monomial from arbitrary `(variable, exponent)` pairs; repeated
    /// variables are merged and zero exponents dropped.
    pub fn from_powers(pairs: impl IntoIterator<Item = (Variable, u32)>) -> Self {
        let mut merged: BTreeMap<Variable, u32> = BTreeMap::new();
        for (v, e) in pairs {
            *merged.entry(v).or_insert(0) += e;
        }
        let powers: Vec<(Variable, u32)> = merged.into_iter().filter(|&(_, e)| e > 0).collect();
        Monomial { degree: powers.iter().map(|p| p.1).sum(), powers }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.powers.is_empty()
    }

    pub fn powers(&self) -> &[(Variable, u32)] {
        &self.powers
    }

    pub fn exponent(&self, v: Variable) -> u32 {
        self.powers.binary_search_by(|p| p.0.cmp(&v)).map_or(0, |i| self.powers[i].1)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut powers = Vec::with_capacity(self.powers.len() + other.powers.len());
        let (mut i, mut j) = (0, 0);
        while i < self.powers.len() && j < other.powers.len() {
            let (a, b) = (self.powers[i], other.powers[j]);
            match a.0.cmp(&b.0) {
                Ordering::Less => {
                    powers.push(a);
                    i += 1;
                }
                Ordering::Greater => {
                    powers.push(b);
                    j += 1;
                }
                Ordering::Equal => {
                    powers.push((a.0, a.1 + b.1));
                    i += 1;
                    j += 1;
                }
            }
        }
        powers.extend_from_slice(&self.powers[i..]);
        powers.extend_from_slice(&other.powers[j..]);
        Monomial { degree: self.degree + other.degree, powers }
    }

    /// `self / other`, if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut powers = Vec::with_capacity(self.powers.len());
        let mut j = 0;
        for &(v, e) in &self.powers {
            let mut e = e;
            if j < other.powers.len() && other.powers[j].0 < v {
                return None;
            }
            if j < other.powers.len() && other.powers[j].0 == v {
                e = e.checked_sub(other.powers[j].1)?;
                j += 1;
            }
            if e > 0 {
                powers.push((v, e));
            }
        }
        if j < other.powers.len() {
            return None;
        }
        Some(Monomial { degree: self.degree - other.degree, powers })
    }

    /// Drops variable `v`, returning its exponent and the remaining monomial.
    fn split_off(&self, v: Variable) -> (u32, Monomial) {
        let e = self.exponent(v);
        if e == 0 {
            return (0, self.clone());
        }
        let powers: Vec<_> = self.powers.iter().copied().filter(|p| p.0 != v).collect();
        (e, Monomial { degree: self.degree - e, powers })
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| {
            let (a, b) = (&self.powers, &other.powers);
            let (mut i, mut j) = (0, 0);
            loop {
                let va = a.get(i).map(|p| p.0);
                let vb = b.get(j).map(|p| p.0);
                let v = match (va, vb) {
                    (None, None) => return Ordering::Equal,
                    (Some(x), None) => x,
                    (None, Some(y)) => y,
                    (Some(x), Some(y)) => x.min(y),
                };
                let ea = if va == Some(v) {
                    i += 1;
                    a[i - 1].1
                } else {
                    0
                };
                let eb = if vb == Some(v) {
                    j += 1;
                    b[j - 1].1
                } else {
                    0
                };
                if ea != eb {
                    // larger exponent on an earlier variable sorts first
                    return eb.cmp(&ea);
                }
            }
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.powers.is_empty() {
            return f.write_str("1");
        }
        for (i, (v, e)) in self.powers.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Sparse multivariate polynomial with rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::ONE)
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn var(v: Variable) -> Self {
        Self::term(Rational::ONE, Monomial::var(v))
    }

    /// `v^e`.
    pub fn var_pow(v: Variable, e: u32) -> Self {
        Self::term(Rational::ONE, Monomial::var_pow(v, e))
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Polynomial::zero();
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: &Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or(Rational::ZERO)
    }

    /// The value if this polynomial is a constant (zero included).
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::ZERO),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn variables(&self) -> BTreeSet<Variable> {
        self.terms.keys().flat_map(|m| m.powers().iter().map(|p| p.0)).collect()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, v: Variable) -> Option<u32> {
        self.terms.keys().map(|m| m.exponent(v)).max()
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial { terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    pub fn mul_monomial(&self, c: &Rational, mono: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        // multiplying every key by the same monomial keeps the order
        Polynomial { terms: self.terms.iter().map(|(m, a)| (m.mul(mono), a * c)).collect() }
    }

    pub fn pow(&self, exp: u32) -> Polynomial {
        let mut acc = Polynomial::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal partial derivative with respect to `v`.
    pub fn derivative(&self, v: Variable) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let (e, rest) = m.split_off(v);
            if e == 0 {
                continue;
            }
            let mono = rest.mul(&Monomial::var_pow(v, e - 1));
            out.add_term(mono, &(c * &Rational::from(u64::from(e))));
        }
        out
    }

    /// Simultaneous substitution of every bound variable, fully expanded.
    pub fn substitute(&self, bindings: &BTreeMap<Variable, Polynomial>) -> Polynomial {
        let mut powers: BTreeMap<(Variable, u32), Polynomial> = BTreeMap::new();
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut kept = Vec::new();
            let mut factor = Polynomial::constant(c.clone());
            for &(v, e) in m.powers() {
                match bindings.get(&v) {
                    Some(b) => {
                        let pw = powers.entry((v, e)).or_insert_with(|| b.pow(e));
                        factor = &factor * pw;
                    }
                    None => kept.push((v, e)),
                }
            }
            let factor = factor.mul_monomial(&Rational::ONE, &Monomial::from_powers(kept));
            out = &out + &factor;
        }
        out
    }

    /// Substitutes a single variable.
    pub fn substitute_var(&self, v: Variable, value: &Polynomial) -> Polynomial {
        let mut bindings = BTreeMap::new();
        bindings.insert(v, value.clone());
        self.substitute(&bindings)
    }

    /// Exact value at a point that binds every occurring variable.
    pub fn eval(&self, bindings: &BTreeMap<Variable, Rational>) -> Result<Rational, PolyError> {
        self.eval_with(|v| bindings.get(&v).cloned())
    }

    pub fn eval_with(&self, mut value: impl FnMut(Variable) -> Option<Rational>) -> Result<Rational, PolyError> {
        let mut acc = Rational::ZERO;
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in m.powers() {
                let x = value(v).ok_or(PolyError::UnboundVariable(v))?;
                t = &t * &x.pow(e);
            }
            acc += &t;
        }
        Ok(acc)
    }

    /// Exact quotient `self / divisor`.
    ///
    /// Supports a nonzero monomial divisor, or a univariate divisor when the
    /// dividend involves no other variable. Any remainder is an error.
    pub fn divide_exact(&self, divisor: &Polynomial) -> Result<Polynomial, PolyError> {
        if divisor.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        if divisor.num_terms() == 1 {
            let (dm, dc) = divisor.terms().next().expect("one term");
            let inv = dc.recip()?;
            let mut terms = BTreeMap::new();
            for (m, c) in &self.terms {
                let q = m.div(dm).ok_or(PolyError::InexactDivision)?;
                terms.insert(q, c * &inv);
            }
            return Ok(Polynomial { terms });
        }
        let vars = divisor.variables();
        if vars.len() != 1 {
            return Err(PolyError::UnsupportedDivisor);
        }
        let v = *vars.iter().next().expect("one variable");
        if self.variables().iter().any(|&w| w != v) {
            return Err(PolyError::UnsupportedDivisor);
        }
        let num = self.dense_in(v);
        let den = divisor.dense_in(v);
        let (quot, rem) = dense_div_rem(num, &den)?;
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(PolyError::InexactDivision);
        }
        Ok(Polynomial::from_dense(v, &quot))
    }

    /// Coefficients by ascending power of `v`; assumes `v` is the only variable.
    fn dense_in(&self, v: Variable) -> Vec<Rational> {
        let deg = self.degree_in(v).unwrap_or(0) as usize;
        let mut out = alloc::vec![Rational::ZERO; deg + 1];
        for (m, c) in &self.terms {
            out[m.exponent(v) as usize] = c.clone();
        }
        out
    }

    /// `Σ coeffs[i] · v^i`.
    pub fn from_dense(v: Variable, coeffs: &[Rational]) -> Polynomial {
        Polynomial::from_terms(coeffs.iter().enumerate().map(|(i, c)| (Monomial::var_pow(v, i as u32), c.clone())))
    }
}

fn dense_div_rem(mut num: Vec<Rational>, den: &[Rational]) -> Result<(Vec<Rational>, Vec<Rational>), PolyError> {
    let dd = den.iter().rposition(|c| !c.is_zero()).ok_or(PolyError::DivisionByZero)?;
    let lead_inv = den[dd].recip()?;
    if num.len() <= dd {
        return Ok((Vec::new(), num));
    }
    let mut quot = alloc::vec![Rational::ZERO; num.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = &num[i + dd] * &lead_inv;
        if c.is_zero() {
            continue;
        }
        for (j, d) in den[..=dd].iter().enumerate() {
            num[i + j] -= &(&c * d);
        }
        quot[i] = c;
    }
    num.truncate(dd);
    Ok((quot, num))
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        let (big, small) = if self.terms.len() >= rhs.terms.len() { (self, rhs) } else { (rhs, self) };
        let mut out = big.clone();
        for (m, c) in &small.terms {
            out.add_term(m.clone(), c);
        }
        out
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c);
        }
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), &(-c));
        }
        out
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), &(ca * cb));
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: &'a Polynomial) -> Polynomial {
                (&self).$m(rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl From<Rational> for Polynomial {
    fn from(c: Rational) -> Self {
        Polynomial::constant(c)
    }
}

impl From<i64> for Polynomial {
    fn from(c: i64) -> Self {
        Polynomial::constant(Rational::from(c))
    }
}

impl From<Variable> for Polynomial {
    fn from(v: Variable) -> Self {
        Polynomial::var(v)
    }
}

impl fmt::Display for Polynomial {
    /// Canonical text: ascending term order, `c*m` with unit coefficients
    /// elided, e.g. `1 + q + q^2` or `-1/2*x + x^2*y`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}
