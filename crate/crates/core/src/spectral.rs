//! The length-n DFT pair over GF(q), n = q - 1, and cyclic convolution.
//!
//! Normalization:
//!
//! * forward: `V_j = sum_i v_i alpha^(j i)`
//! * inverse: `v_j = n^-1 sum_i V_i alpha^(-j i)`
//! * convolution: `U_j = sum_i V_((j - i) mod n) W_i`
//!
//! With these conventions the convolution property reads
//! `dft(u * v) = n^-1 conv(dft(u), dft(v))` for the componentwise product
//! `u * v` of two time-domain vectors. In GF(p^m) we have `n = -1`, so the
//! factor is `-1`.
//!
//! Transforms are direct O(n^2) sums.

use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::galois::{Elem, FieldCtx};
use crate::linalg::Matrix;

/// A time-domain vector `(v_0, ..., v_{n-1})`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TimeVector(pub Vec<Elem>);

/// A frequency-domain vector `(V_0, ..., V_{n-1})`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FreqVector(pub Vec<Elem>);

macro_rules! vector_common {
    ($t:ident) => {
        impl $t {
            pub fn zeros(n: usize) -> Self {
                $t(vec![Elem::ZERO; n])
            }

            pub fn from_codes(codes: &[u32]) -> Self {
                $t(codes.iter().map(|&c| Elem::from_code(c)).collect())
            }

            pub fn codes(&self) -> Vec<u32> {
                self.0.iter().map(|e| e.code()).collect()
            }

            /// Number of nonzero components.
            pub fn weight(&self) -> usize {
                self.0.iter().filter(|e| !e.is_zero()).count()
            }

            pub fn add(&self, f: &FieldCtx, other: &$t) -> $t {
                $t(self
                    .0
                    .iter()
                    .zip(&other.0)
                    .map(|(&a, &b)| f.add(a, b))
                    .collect())
            }

            pub fn sub(&self, f: &FieldCtx, other: &$t) -> $t {
                $t(self
                    .0
                    .iter()
                    .zip(&other.0)
                    .map(|(&a, &b)| f.sub(a, b))
                    .collect())
            }

            pub fn neg(&self, f: &FieldCtx) -> $t {
                $t(self.0.iter().map(|&a| f.neg(a)).collect())
            }

            pub fn scale(&self, f: &FieldCtx, c: Elem) -> $t {
                $t(self.0.iter().map(|&a| f.mul(a, c)).collect())
            }

            pub(crate) fn check_len(&self, f: &FieldCtx) -> Result<()> {
                if self.0.len() == f.n() {
                    Ok(())
                } else {
                    Err(Error::LengthMismatch {
                        expected: f.n(),
                        actual: self.0.len(),
                    })
                }
            }
        }

        impl Deref for $t {
            type Target = [Elem];
            fn deref(&self) -> &[Elem] {
                &self.0
            }
        }

        impl From<Vec<Elem>> for $t {
            fn from(v: Vec<Elem>) -> Self {
                $t(v)
            }
        }
    };
}

vector_common!(TimeVector);
vector_common!(FreqVector);

impl TimeVector {
    /// Componentwise product.
    pub fn hadamard(&self, f: &FieldCtx, other: &TimeVector) -> TimeVector {
        TimeVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| f.mul(a, b))
                .collect(),
        )
    }
}

impl FreqVector {
    /// Whether the vector is `p`-periodic, i.e. `V_j = V_(j mod p)`.
    pub fn is_periodic(&self, p: usize) -> bool {
        p > 0
            && self.0.len().is_multiple_of(p)
            && (p..self.0.len()).all(|j| self.0[j] == self.0[j % p])
    }
}

/// Hamming distance between two equal-length sequences.
pub fn hamming_distance(a: &[Elem], b: &[Elem]) -> usize {
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

/// Forward transform `V_j = sum_i v_i alpha^(j i)`.
pub fn dft(f: &FieldCtx, v: &TimeVector) -> Result<FreqVector> {
    v.check_len(f)?;
    let n = f.n() as i64;
    Ok(FreqVector(
        (0..n)
            .map(|j| {
                f.sum(
                    v.iter()
                        .enumerate()
                        .map(|(i, &vi)| f.mul(vi, f.exp(j * i as i64))),
                )
            })
            .collect(),
    ))
}

/// Inverse transform `v_j = n^-1 sum_i V_i alpha^(-j i)`.
pub fn idft(f: &FieldCtx, big_v: &FreqVector) -> Result<TimeVector> {
    big_v.check_len(f)?;
    let n = f.n() as i64;
    let n_inv = f.inv(f.from_int(n))?;
    Ok(TimeVector(
        (0..n)
            .map(|j| {
                let s = f.sum(
                    big_v
                        .iter()
                        .enumerate()
                        .map(|(i, &x)| f.mul(x, f.exp(-j * i as i64))),
                );
                f.mul(n_inv, s)
            })
            .collect(),
    ))
}

/// Cyclic convolution `U_j = sum_i V_((j - i) mod n) W_i`.
pub fn cyclic_convolution(f: &FieldCtx, v: &FreqVector, w: &FreqVector) -> Result<FreqVector> {
    v.check_len(f)?;
    w.check_len(f)?;
    let n = f.n();
    Ok(FreqVector(
        (0..n)
            .map(|j| f.sum((0..n).map(|i| f.mul(v[(j + n - i) % n], w[i]))))
            .collect(),
    ))
}

/// The n x n matrix with entry `(i, j) = alpha^(j i)`; `dft(v) = v M` as a row vector.
/// The matrix is symmetric, so `M v` (column) gives the same result.
pub fn dft_matrix(f: &FieldCtx) -> Matrix {
    let n = f.n();
    let mut m = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            m.set(i, j, f.exp((i * j) as i64));
        }
    }
    m
}

/// Inverse of [`dft_matrix`]: entry `(i, j) = n^-1 alpha^(-j i)`.
pub fn idft_matrix(f: &FieldCtx) -> Matrix {
    let n = f.n();
    let n_inv = f.inv(f.from_int(n as i64)).expect("n is a unit in GF(q)");
    let mut m = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            m.set(i, j, f.mul(n_inv, f.exp(-((i * j) as i64))));
        }
    }
    m
}
