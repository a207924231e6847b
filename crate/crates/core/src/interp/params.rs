use num_rational::Ratio;

use crate::error::{Error, Result};

/// Parameters of one Guruswami-Sudan interpolation.
///
/// `tau` is the decoding radius used in the degree bounds
/// `d_nu = s (n - tau) - 1 - nu (k - 1)`. By default it is the largest integer
/// strictly below `eps0 = n (2 ell - s + 1) / (2 (ell + 1)) - ell (k - 1) / (2 s)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GsaParams {
    pub n: usize,
    pub k: usize,
    /// Multiplicity.
    pub s: usize,
    /// List size, the maximal y-degree.
    pub ell: usize,
    pub eps0: Ratio<i64>,
    pub tau: usize,
    /// Raw degree bounds `d_nu` for `nu = 0..=ell`; negative entries mean the
    /// stripe is absent.
    pub dnu: Vec<i64>,
}

impl GsaParams {
    pub fn new(
        n: usize,
        k: usize,
        s: usize,
        ell: usize,
        tau_override: Option<usize>,
    ) -> Result<Self> {
        if k == 0 || k > n {
            return Err(Error::InvalidParams(format!(
                "need 1 <= k <= n, got n = {n}, k = {k}"
            )));
        }
        if s == 0 || s > ell {
            return Err(Error::InvalidParams(format!(
                "need 1 <= s <= ell, got s = {s}, ell = {ell}"
            )));
        }
        let eps0 = Self::radius_bound(n, k, s, ell);
        if eps0 <= Ratio::from_integer(0) {
            return Err(Error::InvalidParams(format!(
                "eps0 = {eps0} is not positive"
            )));
        }
        let default_tau = if eps0.is_integer() {
            eps0.to_integer() - 1
        } else {
            eps0.floor().to_integer()
        };
        let tau = match tau_override {
            Some(t) if Ratio::from_integer(t as i64) >= eps0 => {
                return Err(Error::InvalidParams(format!(
                    "tau = {t} must be below eps0 = {eps0}"
                )))
            }
            Some(t) => t,
            None => default_tau as usize,
        };
        let (n_i, k_i, s_i) = (n as i64, k as i64, s as i64);
        let dnu = (0..=ell as i64)
            .map(|nu| s_i * (n_i - tau as i64) - 1 - nu * (k_i - 1))
            .collect();
        let params = GsaParams {
            n,
            k,
            s,
            ell,
            eps0,
            tau,
            dnu,
        };
        if params.unknowns() <= params.equations() {
            return Err(Error::Internal(format!(
                "{} unknowns do not exceed {} equations",
                params.unknowns(),
                params.equations()
            )));
        }
        Ok(params)
    }

    /// `eps0` as an exact rational.
    pub fn radius_bound(n: usize, k: usize, s: usize, ell: usize) -> Ratio<i64> {
        let (n, k, s, ell) = (n as i64, k as i64, s as i64, ell as i64);
        Ratio::new(n * (2 * ell - s + 1), 2 * (ell + 1)) - Ratio::new(ell * (k - 1), 2 * s)
    }

    /// `Some(d_nu)` when stripe `nu` is present.
    pub fn degree_bound(&self, nu: usize) -> Option<usize> {
        self.dnu.get(nu).and_then(|&d| usize::try_from(d).ok())
    }

    /// Constraints per position, `s (s + 1) / 2`.
    pub fn constraints_per_point(&self) -> usize {
        self.s * (self.s + 1) / 2
    }

    /// `n s (s + 1) / 2`.
    pub fn equations(&self) -> usize {
        self.n * self.constraints_per_point()
    }

    /// `sum over present nu of (d_nu + 1)`.
    pub fn unknowns(&self) -> usize {
        (0..=self.ell)
            .filter_map(|nu| self.degree_bound(nu))
            .map(|d| d + 1)
            .sum()
    }
}
