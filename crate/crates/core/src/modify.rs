//! Received-vector modifications: the re-encoding map and the periodicity
//! projection.
//!
//! Both maps add a vector `o` (the offset) to the input so that the result is
//! zero on a known position set J. When `o` is a codeword, decoding the
//! modified vector and subtracting `o` from each candidate recovers candidates
//! for the original vector.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::galois::{Elem, FieldCtx};
use crate::linalg::Matrix;
use crate::rscode::{check_positions, Codeword, RsCode};
use crate::spectral::{dft, dft_matrix, idft, idft_matrix, FreqVector, TimeVector};

/// Which modification produced a [`ModifiedVector`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum ModifyMode {
    Reencode { positions: Vec<usize> },
    Periodic { p: usize },
}

/// A received vector after modification, plus the offset that was added.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModifiedVector {
    pub modified: TimeVector,
    /// `modified - original`.
    pub offset: TimeVector,
    pub mode: ModifyMode,
    /// Number of positions forced to zero: `|J|` or `n - p`.
    pub sigma: usize,
    /// Whether `offset` lies in the code. Always true for re-encoding; for the
    /// periodicity projection it is guaranteed when `p >= d - 1`.
    pub offset_in_code: bool,
}

impl ModifiedVector {
    /// `modified - offset`.
    pub fn original(&self, f: &FieldCtx) -> TimeVector {
        self.modified.sub(f, &self.offset)
    }

    /// The offset as a codeword, when it is one.
    pub fn offset_codeword(&self) -> Option<Codeword> {
        self.offset_in_code
            .then(|| Codeword::new_unchecked(self.offset.clone()))
    }

    /// The position set J on which `modified` vanishes, ascending.
    pub fn zero_positions(&self) -> Vec<usize> {
        match &self.mode {
            ModifyMode::Reencode { positions } => {
                let mut j = positions.clone();
                j.sort_unstable();
                j
            }
            ModifyMode::Periodic { p } => periodic_zero_positions(self.modified.len(), *p),
        }
    }
}

/// `{j : (n/p) does not divide j}`, the positions a periodicity projection zeroes.
pub fn periodic_zero_positions(n: usize, p: usize) -> Vec<usize> {
    let stride = n / p;
    (0..n).filter(|j| j % stride != 0).collect()
}

fn check_divisor(n: usize, p: usize) -> Result<()> {
    if p == 0 || !n.is_multiple_of(p) {
        Err(Error::NotDivisor { p, n })
    } else {
        Ok(())
    }
}

/// The re-encoding map with respect to `positions`: subtracts a codeword that
/// agrees with `v` on every listed position.
///
/// For fewer than k positions the subtracted codeword is taken from the
/// subcode spanned by the first `positions.len()` spectral components.
pub fn reencode(rs: &RsCode, v: &TimeVector, positions: &[usize]) -> Result<ModifiedVector> {
    let f = rs.field();
    v.check_len(f)?;
    let sigma = positions.len();
    if sigma == 0 {
        return Err(Error::InvalidPositions(
            "re-encoding needs at least one position".into(),
        ));
    }
    if sigma > rs.k() {
        return Err(Error::InvalidPositions(format!(
            "{sigma} positions exceed k = {}; no matching codeword guaranteed",
            rs.k()
        )));
    }
    check_positions(positions, rs.n())?;
    let values: Vec<Elem> = positions.iter().map(|&j| v[j]).collect();
    let matched = rs.interpolate_on(positions, &values)?;
    let modified = v.sub(f, matched.as_vector());
    Ok(ModifiedVector {
        modified,
        offset: matched.as_vector().neg(f),
        mode: ModifyMode::Reencode {
            positions: positions.to_vec(),
        },
        sigma,
        offset_in_code: true,
    })
}

/// Spectrum-level periodicity projection: repeat the last `p` spectral
/// components `n/p` times and transform back.
pub fn project_periodic(f: &FieldCtx, v: &TimeVector, p: usize) -> Result<TimeVector> {
    let n = f.n();
    check_divisor(n, p)?;
    let spectrum = dft(f, v)?;
    let template = &spectrum[n - p..];
    let periodic: Vec<Elem> = (0..n).map(|j| template[j % p]).collect();
    idft(f, &FreqVector(periodic))
}

/// The periodicity projection with respect to `p`.
///
/// `offset_in_code` records whether the offset lies in `rs`; that is
/// guaranteed for `p >= d - 1` and generally false below.
pub fn periodicity_projection(rs: &RsCode, v: &TimeVector, p: usize) -> Result<ModifiedVector> {
    let f = rs.field();
    let modified = project_periodic(f, v, p)?;
    let offset = modified.sub(f, v);
    let offset_in_code = p + 1 >= rs.d() || rs.is_codeword(&offset)?;
    Ok(ModifiedVector {
        modified,
        offset,
        mode: ModifyMode::Periodic { p },
        sigma: rs.n() - p,
        offset_in_code,
    })
}

/// Closed-form time-domain vector of the `p`-periodic spectrum with template
/// `template`: `v_j = p^-1 sum_s T_s alpha^(-s j)` where `(n/p) | j`, else zero.
pub fn periodic_time_vector(f: &FieldCtx, template: &[Elem], p: usize) -> Result<TimeVector> {
    let n = f.n();
    check_divisor(n, p)?;
    if template.len() != p {
        return Err(Error::LengthMismatch {
            expected: p,
            actual: template.len(),
        });
    }
    let stride = n / p;
    let p_inv = f.inv(f.from_int(p as i64))?;
    Ok(TimeVector(
        (0..n)
            .map(|j| {
                if j % stride != 0 {
                    return Elem::ZERO;
                }
                let s = f.sum(
                    template
                        .iter()
                        .enumerate()
                        .map(|(s, &t)| f.mul(t, f.exp(-((s * j) as i64)))),
                );
                f.mul(p_inv, s)
            })
            .collect(),
    ))
}

/// The inner selector matrix: an n x (n - p) zero block followed by `n/p`
/// stacked p x p identities, so that `selector * V` (column vector) repeats
/// the last p entries of `V`.
pub fn periodic_selector(n: usize, p: usize) -> Result<Matrix> {
    check_divisor(n, p)?;
    let mut m = Matrix::zeros(n, n);
    for r in 0..n {
        m.set(r, n - p + r % p, Elem::ONE);
    }
    Ok(m)
}

/// Dense matrix of the periodicity projection: `idft_matrix * selector *
/// dft_matrix`, acting on column vectors.
pub fn projection_operator(f: &FieldCtx, p: usize) -> Result<Matrix> {
    let selector = periodic_selector(f.n(), p)?;
    idft_matrix(f).mul(f, &selector)?.mul(f, &dft_matrix(f))
}
