//! Primitive Reed-Solomon codes defined in the frequency domain.
//!
//! A codeword is the inverse DFT of a spectrum whose last `n - k` entries are
//! zero. Equivalently `c_j = n^-1 C(alpha^-j)` where `C(x)` is the message
//! polynomial.

use std::collections::BTreeSet;
use std::ops::Deref;
use std::sync::Arc;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::galois::{Elem, FieldCtx};
use crate::linalg::Matrix;
use crate::spectral::{dft, idft, FreqVector, TimeVector};

/// Message `(C_0, ..., C_(k-1))`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Message(pub Vec<Elem>);

impl Message {
    pub fn from_codes(codes: &[u32]) -> Self {
        Message(codes.iter().map(|&c| Elem::from_code(c)).collect())
    }

    pub fn codes(&self) -> Vec<u32> {
        self.0.iter().map(|e| e.code()).collect()
    }
}

/// A time-domain vector known to lie in the code.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Codeword(TimeVector);

impl Codeword {
    pub fn as_vector(&self) -> &TimeVector {
        &self.0
    }

    pub fn into_vector(self) -> TimeVector {
        self.0
    }

    pub fn codes(&self) -> Vec<u32> {
        self.0.codes()
    }

    /// Wraps a vector the caller has already verified to be a codeword.
    pub(crate) fn new_unchecked(v: TimeVector) -> Self {
        Codeword(v)
    }
}

impl Deref for Codeword {
    type Target = [Elem];
    fn deref(&self) -> &[Elem] {
        &self.0
    }
}

/// How to corrupt a codeword.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ErrorSpec {
    /// Explicit `(position, nonzero value)` pairs.
    Explicit(Vec<(usize, Elem)>),
    /// `weight` distinct positions with uniform nonzero values, drawn from a
    /// ChaCha8 stream keyed by `seed`.
    Random { weight: usize, seed: u64 },
}

/// A primitive RS code of length n = q - 1 and dimension k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RsCode {
    field: Arc<FieldCtx>,
    k: usize,
}

impl RsCode {
    pub fn new(field: Arc<FieldCtx>, k: usize) -> Result<Self> {
        let n = field.n();
        if k == 0 || k > n {
            return Err(Error::InvalidCode(format!(
                "need 1 <= k <= n = {n}, got k = {k}"
            )));
        }
        Ok(RsCode { field, k })
    }

    pub fn field(&self) -> &FieldCtx {
        &self.field
    }

    pub fn field_arc(&self) -> &Arc<FieldCtx> {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.field.n()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Minimum distance `n - k + 1`.
    pub fn d(&self) -> usize {
        self.n() - self.k + 1
    }

    pub fn encode(&self, msg: &Message) -> Result<Codeword> {
        if msg.0.len() != self.k {
            return Err(Error::LengthMismatch {
                expected: self.k,
                actual: msg.0.len(),
            });
        }
        let mut spectrum = msg.0.clone();
        spectrum.resize(self.n(), Elem::ZERO);
        Ok(Codeword(idft(&self.field, &FreqVector(spectrum))?))
    }

    pub fn is_codeword(&self, v: &TimeVector) -> Result<bool> {
        let spectrum = dft(&self.field, v)?;
        Ok(spectrum[self.k..].iter().all(|c| c.is_zero()))
    }

    /// Checks membership and wraps.
    pub fn to_codeword(&self, v: TimeVector) -> Result<Codeword> {
        if self.is_codeword(&v)? {
            Ok(Codeword(v))
        } else {
            Err(Error::InvalidCode("vector is not a codeword".into()))
        }
    }

    /// The message (first k spectral components) of a codeword.
    pub fn message_of(&self, c: &Codeword) -> Result<Message> {
        let spectrum = dft(&self.field, c.as_vector())?;
        Ok(Message(spectrum[..self.k].to_vec()))
    }

    /// The unique codeword taking the given values at k distinct positions.
    pub fn mds_interpolate(&self, positions: &[usize], values: &[Elem]) -> Result<Codeword> {
        if positions.len() != self.k {
            return Err(Error::InvalidPositions(format!(
                "need exactly k = {} positions, got {}",
                self.k,
                positions.len()
            )));
        }
        self.interpolate_on(positions, values)
    }

    /// A codeword matching `values` on `positions` (at most k of them), taken
    /// from the subcode spanned by the first `positions.len()` spectral
    /// components. For `positions.len() == k` this is the unique match.
    pub(crate) fn interpolate_on(&self, positions: &[usize], values: &[Elem]) -> Result<Codeword> {
        let f = &*self.field;
        let n = self.n();
        let sigma = positions.len();
        if values.len() != sigma {
            return Err(Error::LengthMismatch {
                expected: sigma,
                actual: values.len(),
            });
        }
        check_positions(positions, n)?;
        if sigma > self.k {
            return Err(Error::InvalidPositions(format!(
                "{sigma} positions exceed k = {}",
                self.k
            )));
        }
        let n_inv = f.inv(f.from_int(n as i64))?;
        let rows = positions
            .iter()
            .map(|&j| {
                (0..sigma)
                    .map(|i| f.mul(n_inv, f.exp(-((j * i) as i64))))
                    .collect()
            })
            .collect();
        let coeffs = Matrix::from_rows(rows).solve(f, values).map_err(|_| {
            Error::Internal("singular Vandermonde system for distinct positions".into())
        })?;
        let mut msg = coeffs;
        msg.resize(self.k, Elem::ZERO);
        self.encode(&Message(msg))
    }

    /// Adds an error pattern, returning `(received, error)`.
    pub fn add_errors(&self, c: &Codeword, spec: &ErrorSpec) -> Result<(TimeVector, TimeVector)> {
        let f = &*self.field;
        let n = self.n();
        let mut e = TimeVector::zeros(n);
        match spec {
            ErrorSpec::Explicit(pairs) => {
                let positions: Vec<usize> = pairs.iter().map(|&(j, _)| j).collect();
                check_positions(&positions, n).map_err(|e| Error::InvalidErrors(e.to_string()))?;
                for &(j, v) in pairs {
                    if v.is_zero() || v.code() >= f.order() {
                        return Err(Error::InvalidErrors(format!(
                            "error value {v} at position {j} must be a nonzero field element"
                        )));
                    }
                    e.0[j] = v;
                }
            }
            ErrorSpec::Random { weight, seed } => {
                if *weight > n {
                    return Err(Error::InvalidErrors(format!(
                        "weight {weight} exceeds n = {n}"
                    )));
                }
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                let mut positions = sample(&mut rng, n, *weight).into_vec();
                positions.sort_unstable();
                for j in positions {
                    e.0[j] = Elem::from_code(rng.gen_range(1..f.order()));
                }
            }
        }
        Ok((c.as_vector().add(f, &e), e))
    }

    /// All `q^k` messages in lexicographic code order (last component fastest).
    pub fn messages(&self) -> impl Iterator<Item = Message> + '_ {
        let q = self.field.order() as u64;
        let k = self.k;
        let total = q.checked_pow(k as u32).unwrap_or(u64::MAX);
        (0..total).map(move |mut idx| {
            let mut m = vec![Elem::ZERO; k];
            for slot in m.iter_mut().rev() {
                *slot = Elem::from_code((idx % q) as u32);
                idx /= q;
            }
            Message(m)
        })
    }
}

pub(crate) fn check_positions(positions: &[usize], n: usize) -> Result<()> {
    let set: BTreeSet<usize> = positions.iter().copied().collect();
    if set.len() != positions.len() {
        return Err(Error::InvalidPositions(format!(
            "duplicate positions in {positions:?}"
        )));
    }
    if let Some(&j) = set.iter().next_back().filter(|&&j| j >= n) {
        return Err(Error::InvalidPositions(format!(
            "position {j} out of range for n = {n}"
        )));
    }
    Ok(())
}
