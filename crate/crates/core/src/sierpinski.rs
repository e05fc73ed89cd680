//! Multivariable Sierpinski matrices `S_{b,N}(x, r)`.
//!
//! `S_{b,N}` is the `b^N × b^N` lower-triangular matrix whose `(j, k)` entry
//! is `Π_i C(x_i; r_i, d_i)` when `k ≼_b j`, where `d_i` are the base-`b`
//! digits of `j − k`, and zero otherwise.
//!
//! Storage is row-compressed over the dominated pattern only. Columns are not
//! stored: the columns of row `j` are exactly the integers `k ≼_b j` in
//! increasing order, and the position of `k` within the row is the
//! mixed-radix rank `Σ_t k_t · Π_{s<t} (j_s + 1)`. That makes lookups O(N)
//! with no search, and lets [`multiply`] contract over the dominated interval
//! `k ≼ i ≼ j` directly.

use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::binomlib::gen_binomial;
use crate::digits::{self, DigitVector};
use crate::exactalg::{Coefficient, Family, PolyError, Polynomial, Rational, Variable};

/// Largest supported dimension `b^N`.
pub const MAX_DIMENSION: usize = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("invalid base {0}: the base must be at least 2")]
    InvalidBase(u32),
    #[error("dimension {base}^{levels} exceeds the limit of {MAX_DIMENSION}")]
    DimensionTooLarge { base: u32, levels: u32 },
    #[error("variable vectors have lengths {xs} and {rs}, expected {levels}")]
    LengthMismatch { xs: usize, rs: usize, levels: u32 },
    #[error("the r slots of the two variable vectors differ")]
    StepMismatch,
    #[error("matrices have different base or number of levels")]
    ShapeMismatch,
    #[error("index ({j}, {k}) is outside a {dimension} x {dimension} matrix")]
    IndexOutOfRange { j: usize, k: usize, dimension: usize },
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// The per-level arguments `(x_0..x_{N−1})` and `(r_0..r_{N−1})`.
#[derive(Debug, Clone, PartialEq)]
pub struct VariableVectors<T = Polynomial> {
    xs: Vec<T>,
    rs: Vec<T>,
}

impl<T: Coefficient> VariableVectors<T> {
    pub fn new(xs: Vec<T>, rs: Vec<T>) -> Result<Self, MatrixError> {
        if xs.len() != rs.len() {
            return Err(MatrixError::LengthMismatch { xs: xs.len(), rs: rs.len(), levels: xs.len() as u32 });
        }
        Ok(VariableVectors { xs, rs })
    }

    /// The same `x` and `r` in every slot.
    pub fn uniform(x: T, r: T, levels: u32) -> Self {
        VariableVectors { xs: vec![x; levels as usize], rs: vec![r; levels as usize] }
    }

    pub fn levels(&self) -> u32 {
        self.xs.len() as u32
    }

    pub fn xs(&self) -> &[T] {
        &self.xs
    }

    pub fn rs(&self) -> &[T] {
        &self.rs
    }

    /// Slotwise `x_i + y_i`, keeping the shared `r_i`.
    pub fn plus(&self, other: &Self) -> Result<Self, MatrixError> {
        if self.xs.len() != other.xs.len() {
            return Err(MatrixError::ShapeMismatch);
        }
        if self.rs != other.rs {
            return Err(MatrixError::StepMismatch);
        }
        let xs = self.xs.iter().zip(&other.xs).map(|(a, b)| a.plus(b)).collect();
        Ok(VariableVectors { xs, rs: self.rs.clone() })
    }
}

impl VariableVectors<Polynomial> {
    /// `x_i = family_i`, `r_i = r_i`, e.g. `(x0, x1, …)` with `(r0, r1, …)`.
    pub fn symbolic(family: Family, levels: u32) -> Result<Self, MatrixError> {
        let mut xs = Vec::with_capacity(levels as usize);
        let mut rs = Vec::with_capacity(levels as usize);
        for i in 0..levels as usize {
            xs.push(Polynomial::var(Variable::indexed(family, i)?));
            rs.push(Polynomial::var(Variable::r(i)?));
        }
        Ok(VariableVectors { xs, rs })
    }

    /// Evaluates every slot at a point.
    pub fn evaluate(
        &self,
        mut value: impl FnMut(Variable) -> Option<Rational>,
    ) -> Result<VariableVectors<Rational>, PolyError> {
        let xs = self.xs.iter().map(|p| p.eval_with(&mut value)).collect::<Result<_, _>>()?;
        let rs = self.rs.iter().map(|p| p.eval_with(&mut value)).collect::<Result<_, _>>()?;
        Ok(VariableVectors { xs, rs })
    }
}

/// `b^N`, if it is within [`MAX_DIMENSION`].
pub fn dimension_of(base: u32, levels: u32) -> Result<usize, MatrixError> {
    if base < 2 {
        return Err(MatrixError::InvalidBase(base));
    }
    (base as usize)
        .checked_pow(levels)
        .filter(|&d| d <= MAX_DIMENSION)
        .ok_or(MatrixError::DimensionTooLarge { base, levels })
}

/// `(b(b+1)/2)^N`, the number of dominated pairs `k ≼_b j < b^N`.
pub fn pattern_size(base: u32, levels: u32) -> u128 {
    let per_digit = u128::from(base) * (u128::from(base) + 1) / 2;
    per_digit.pow(levels)
}

fn index_digits(mut n: usize, base: usize, out: &mut [usize]) {
    for d in out.iter_mut() {
        *d = n % base;
        n /= base;
    }
}

/// Sparse lower-triangular matrix over the dominated pattern `k ≼_b j`.
#[derive(Debug, Clone, PartialEq)]
pub struct SierpinskiMatrix<T = Polynomial> {
    base: u32,
    levels: u32,
    dimension: usize,
    row_ptr: Vec<usize>,
    values: Vec<T>,
}

impl<T: Coefficient> SierpinskiMatrix<T> {
    /// Fills the dominated pattern from `f(j, k)`.
    pub fn from_fn(base: u32, levels: u32, mut f: impl FnMut(usize, usize) -> T) -> Result<Self, MatrixError> {
        let dimension = dimension_of(base, levels)?;
        let mut row_ptr = Vec::with_capacity(dimension + 1);
        let mut values = Vec::new();
        row_ptr.push(0);
        for j in 0..dimension {
            for k in digits::enumerate_dominated(&j, base).expect("base checked") {
                values.push(f(j, k));
            }
            row_ptr.push(values.len());
        }
        Ok(SierpinskiMatrix { base, levels, dimension, row_ptr, values })
    }

    pub fn identity(base: u32, levels: u32) -> Result<Self, MatrixError> {
        Self::from_fn(base, levels, |j, k| if j == k { T::one() } else { T::zero() })
    }

    /// The one-level `b × b` matrix with entries `C(x; r, j − k)` for `k ≤ j`.
    pub fn single(base: u32, x: &T, r: &T) -> Result<Self, MatrixError> {
        let table: Vec<T> = (0..base).map(|d| gen_binomial(x, r, d)).collect();
        Self::from_fn(base, 1, |j, k| table[j - k].clone())
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn levels(&self) -> u32 {
        self.levels
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// Number of structurally present entries.
    pub fn nnz(&self) -> usize {
        self.values.len()
    }

    /// Stored values, row by row, each row in increasing column order.
    pub fn values(&self) -> &[T] {
        &self.values
    }

    fn check_index(&self, j: usize, k: usize) -> Result<(), MatrixError> {
        if j >= self.dimension || k >= self.dimension {
            return Err(MatrixError::IndexOutOfRange { j, k, dimension: self.dimension });
        }
        Ok(())
    }

    /// Position of column `k` within row `j`, if `k ≼ j`.
    fn rank(&self, j: usize, k: usize) -> Option<usize> {
        let b = self.base as usize;
        let (mut j, mut k) = (j, k);
        let mut stride = 1;
        let mut rank = 0;
        for _ in 0..self.levels {
            let (jd, kd) = (j % b, k % b);
            if kd > jd {
                return None;
            }
            rank += kd * stride;
            stride *= jd + 1;
            j /= b;
            k /= b;
        }
        Some(rank)
    }

    /// The stored entry, or `None` at a structural zero.
    pub fn get(&self, j: usize, k: usize) -> Result<Option<&T>, MatrixError> {
        self.check_index(j, k)?;
        Ok(self.rank(j, k).map(|r| &self.values[self.row_ptr[j] + r]))
    }

    /// `α(j, k)`, with the zero element outside the pattern.
    pub fn entry(&self, j: usize, k: usize) -> Result<T, MatrixError> {
        Ok(self.get(j, k)?.cloned().unwrap_or_else(T::zero))
    }

    /// Entries of row `j` as `(k, value)` in increasing `k`.
    pub fn row(&self, j: usize) -> impl Iterator<Item = (usize, &T)> + '_ {
        let slice = &self.values[self.row_ptr[j]..self.row_ptr[j + 1]];
        digits::enumerate_dominated(&j, self.base).expect("valid base").zip(slice)
    }

    /// All entries as `(j, k, value)`, sorted by `(j, k)`.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &T)> + '_ {
        (0..self.dimension).flat_map(move |j| self.row(j).map(move |(k, v)| (j, k, v)))
    }

    pub fn map<U: Coefficient>(&self, f: impl FnMut(&T) -> U) -> SierpinskiMatrix<U> {
        SierpinskiMatrix {
            base: self.base,
            levels: self.levels,
            dimension: self.dimension,
            row_ptr: self.row_ptr.clone(),
            values: self.values.iter().map(f).collect(),
        }
    }
}

fn check_vectors<T: Coefficient>(levels: u32, vv: &VariableVectors<T>) -> Result<(), MatrixError> {
    if vv.xs.len() != levels as usize || vv.rs.len() != levels as usize {
        return Err(MatrixError::LengthMismatch { xs: vv.xs.len(), rs: vv.rs.len(), levels });
    }
    Ok(())
}

/// `S_{b,N}` entry by entry: for each `k ≼_b j`, expand `j − k` in base `b`
/// and multiply the per-digit generalized binomials.
pub fn build_direct<T: Coefficient>(
    base: u32,
    levels: u32,
    vv: &VariableVectors<T>,
) -> Result<SierpinskiMatrix<T>, MatrixError> {
    dimension_of(base, levels)?;
    check_vectors(levels, vv)?;
    let tables: Vec<Vec<T>> =
        vv.xs.iter().zip(&vv.rs).map(|(x, r)| (0..base).map(|d| gen_binomial(x, r, d)).collect()).collect();
    SierpinskiMatrix::from_fn(base, levels, |j, k| {
        let diff = DigitVector::expand(&(j - k), base, levels as usize).expect("j - k < b^N");
        diff.digits().iter().zip(&tables).fold(T::one(), |acc, (&d, table)| acc.times(&table[d as usize]))
    })
}

/// `S_{b,N}` by the recurrence `S_{b,N+1} = S_{b,1}(x_N, r_N) ⊗ S_{b,N}`.
pub fn build_kron<T: Coefficient>(
    base: u32,
    levels: u32,
    vv: &VariableVectors<T>,
) -> Result<SierpinskiMatrix<T>, MatrixError> {
    dimension_of(base, levels)?;
    check_vectors(levels, vv)?;
    let mut acc = SierpinskiMatrix::identity(base, 0)?;
    for (x, r) in vv.xs.iter().zip(&vv.rs) {
        let level = SierpinskiMatrix::single(base, x, r)?;
        acc = kronecker(&level, &acc)?;
    }
    Ok(acc)
}

/// `outer ⊗ inner`; the digits of `outer` become the high digits.
///
/// Dominated-pattern matrices are closed under this product, and the row
/// layout falls out directly: row `(p, j')` is the concatenation over
/// `q ≼ p` of `outer[p][q] · inner_row(j')`.
pub fn kronecker<T: Coefficient>(
    outer: &SierpinskiMatrix<T>,
    inner: &SierpinskiMatrix<T>,
) -> Result<SierpinskiMatrix<T>, MatrixError> {
    if outer.base != inner.base {
        return Err(MatrixError::ShapeMismatch);
    }
    let levels = outer.levels + inner.levels;
    let dimension = dimension_of(outer.base, levels)?;
    let mut values = Vec::with_capacity(outer.nnz() * inner.nnz());
    let mut row_ptr = Vec::with_capacity(dimension + 1);
    row_ptr.push(0);
    for p in 0..outer.dimension {
        let outer_row = &outer.values[outer.row_ptr[p]..outer.row_ptr[p + 1]];
        for jp in 0..inner.dimension {
            let inner_row = &inner.values[inner.row_ptr[jp]..inner.row_ptr[jp + 1]];
            for a in outer_row {
                values.extend(inner_row.iter().map(|b| a.times(b)));
            }
            row_ptr.push(values.len());
        }
    }
    Ok(SierpinskiMatrix { base: outer.base, levels, dimension, row_ptr, values })
}

/// Exact product `A·B` of two pattern matrices of the same shape.
///
/// For each stored `(j, k)` the inner index only runs over `k ≼ i ≼ j`,
/// enumerated digit by digit, so the work is `Σ_{k≼j} Π_t (j_t − k_t + 1)`
/// rather than `dimension³`.
pub fn multiply<T: Coefficient>(
    a: &SierpinskiMatrix<T>,
    b: &SierpinskiMatrix<T>,
) -> Result<SierpinskiMatrix<T>, MatrixError> {
    if a.base != b.base || a.levels != b.levels {
        return Err(MatrixError::ShapeMismatch);
    }
    let base = a.base as usize;
    let levels = a.levels as usize;
    let mut jd = vec![0usize; levels];
    let mut kd = vec![0usize; levels];
    let mut id = vec![0usize; levels];
    let mut place = vec![1usize; levels];
    for t in 1..levels {
        place[t] = place[t - 1] * base;
    }
    let mut values = Vec::with_capacity(a.nnz());
    for j in 0..a.dimension {
        index_digits(j, base, &mut jd);
        let mut j_stride = vec![1usize; levels];
        for t in 1..levels {
            j_stride[t] = j_stride[t - 1] * (jd[t - 1] + 1);
        }
        let a_row = &a.values[a.row_ptr[j]..a.row_ptr[j + 1]];
        for k in digits::enumerate_dominated(&j, a.base).expect("valid base") {
            index_digits(k, base, &mut kd);
            let mut acc = T::zero();
            // odometer over i with kd <= id <= jd
            id.copy_from_slice(&kd);
            let mut i = k;
            let mut rank_in_j: usize = kd.iter().zip(&j_stride).map(|(d, s)| d * s).sum();
            loop {
                let mut rank_in_i = 0;
                let mut stride = 1;
                for t in 0..levels {
                    rank_in_i += kd[t] * stride;
                    stride *= id[t] + 1;
                }
                let lhs = &a_row[rank_in_j];
                let rhs = &b.values[b.row_ptr[i] + rank_in_i];
                acc.accumulate(&lhs.times(rhs));

                let mut t = 0;
                while t < levels && id[t] == jd[t] {
                    let span = id[t] - kd[t];
                    i -= span * place[t];
                    rank_in_j -= span * j_stride[t];
                    id[t] = kd[t];
                    t += 1;
                }
                if t == levels {
                    break;
                }
                id[t] += 1;
                i += place[t];
                rank_in_j += j_stride[t];
            }
            values.push(acc);
        }
    }
    Ok(SierpinskiMatrix { base: a.base, levels: a.levels, dimension: a.dimension, row_ptr: a.row_ptr.clone(), values })
}
