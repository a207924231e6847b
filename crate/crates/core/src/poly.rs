//! Univariate and bivariate polynomials over GF(q).

use serde::{Deserialize, Serialize};

use crate::galois::{Elem, FieldCtx};

/// Univariate polynomial, coefficients low-to-high. Trailing zeros are
/// trimmed by the arithmetic routines, so the zero polynomial is empty.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Poly(pub Vec<Elem>);

impl Poly {
    pub fn zero() -> Self {
        Poly(Vec::new())
    }

    pub fn one() -> Self {
        Poly(vec![Elem::ONE])
    }

    pub fn from_coeffs(coeffs: Vec<Elem>) -> Self {
        let mut p = Poly(coeffs);
        p.trim();
        p
    }

    /// `x^k`.
    pub fn monomial(k: usize) -> Self {
        let mut c = vec![Elem::ZERO; k + 1];
        c[k] = Elem::ONE;
        Poly(c)
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.0
    }

    pub fn coeff(&self, i: usize) -> Elem {
        self.0.get(i).copied().unwrap_or(Elem::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.iter().rposition(|c| !c.is_zero())
    }

    pub fn trim(&mut self) {
        let len = self.degree().map_or(0, |d| d + 1);
        self.0.truncate(len);
    }

    pub fn add(&self, f: &FieldCtx, other: &Poly) -> Poly {
        let len = self.0.len().max(other.0.len());
        Poly::from_coeffs(
            (0..len)
                .map(|i| f.add(self.coeff(i), other.coeff(i)))
                .collect(),
        )
    }

    pub fn sub(&self, f: &FieldCtx, other: &Poly) -> Poly {
        let len = self.0.len().max(other.0.len());
        Poly::from_coeffs(
            (0..len)
                .map(|i| f.sub(self.coeff(i), other.coeff(i)))
                .collect(),
        )
    }

    pub fn scale(&self, f: &FieldCtx, c: Elem) -> Poly {
        Poly::from_coeffs(self.0.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn mul(&self, f: &FieldCtx, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Elem::ZERO; self.0.len() + other.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.0.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Poly::from_coeffs(out)
    }

    pub fn pow(&self, f: &FieldCtx, e: usize) -> Poly {
        (0..e).fold(Poly::one(), |acc, _| acc.mul(f, self))
    }

    /// Horner evaluation.
    pub fn eval(&self, f: &FieldCtx, x: Elem) -> Elem {
        self.0
            .iter()
            .rev()
            .fold(Elem::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// Coefficient vector padded or truncated to exactly `len` entries.
    pub fn padded(&self, len: usize) -> Vec<Elem> {
        (0..len).map(|i| self.coeff(i)).collect()
    }

    /// Whether the coefficient sequence reads the same reversed.
    pub fn is_palindromic(&self) -> bool {
        let c = &self.0;
        c.iter().eq(c.iter().rev())
    }
}

/// `Q(x, y) = sum_nu Q_nu(x) y^nu`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BivariatePoly {
    /// `stripes[nu]` is `Q_nu(x)`.
    pub stripes: Vec<Poly>,
}

impl BivariatePoly {
    pub fn new(stripes: Vec<Poly>) -> Self {
        BivariatePoly { stripes }
    }

    /// Builds `Q` from a row-major grid of coefficients `grid[nu][mu]`.
    pub fn from_grid(grid: Vec<Vec<Elem>>) -> Self {
        BivariatePoly {
            stripes: grid.into_iter().map(Poly::from_coeffs).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.stripes.iter().all(Poly::is_zero)
    }

    /// Degree in y, or `None` for the zero polynomial.
    pub fn y_degree(&self) -> Option<usize> {
        self.stripes.iter().rposition(|s| !s.is_zero())
    }

    pub fn stripe(&self, nu: usize) -> Poly {
        self.stripes.get(nu).cloned().unwrap_or_default()
    }

    /// Coefficient of `x^mu y^nu`.
    pub fn coeff(&self, mu: usize, nu: usize) -> Elem {
        self.stripes.get(nu).map_or(Elem::ZERO, |s| s.coeff(mu))
    }

    /// Product of two bivariate polynomials.
    pub fn mul(&self, f: &FieldCtx, other: &BivariatePoly) -> BivariatePoly {
        if self.stripes.is_empty() || other.stripes.is_empty() {
            return BivariatePoly::default();
        }
        let mut out = vec![Poly::zero(); self.stripes.len() + other.stripes.len() - 1];
        for (i, a) in self.stripes.iter().enumerate() {
            for (j, b) in other.stripes.iter().enumerate() {
                out[i + j] = out[i + j].add(f, &a.mul(f, b));
            }
        }
        BivariatePoly { stripes: out }
    }

    /// `Q(x0, y0)`.
    pub fn eval(&self, f: &FieldCtx, x0: Elem, y0: Elem) -> Elem {
        self.stripes
            .iter()
            .rev()
            .fold(Elem::ZERO, |acc, s| f.add(f.mul(acc, y0), s.eval(f, x0)))
    }

    /// `Q(x, F(x))` by Horner's rule in y with polynomial coefficients.
    pub fn compose_y(&self, f: &FieldCtx, root: &Poly) -> Poly {
        self.stripes
            .iter()
            .rev()
            .fold(Poly::zero(), |acc, s| acc.mul(f, root).add(f, s))
    }
}

/// Binomial coefficients `C(n, k)` reduced modulo a prime, for `n <= max_n`
/// and `k <= max_k`, built row by row with Pascal's rule.
#[derive(Clone, Debug)]
pub struct BinomialTable {
    width: usize,
    rows: Vec<u32>,
}

impl BinomialTable {
    pub fn new(max_n: usize, max_k: usize, modulus: u32) -> Self {
        let width = max_k + 1;
        let mut rows = vec![0u32; (max_n + 1) * width];
        for n in 0..=max_n {
            rows[n * width] = 1 % modulus;
            for k in 1..width.min(n + 1) {
                let above = rows[(n - 1) * width + k];
                let above_left = rows[(n - 1) * width + k - 1];
                rows[n * width + k] = (above + above_left) % modulus;
            }
        }
        BinomialTable { width, rows }
    }

    /// `C(n, k) mod p`, zero when `k > n`. Panics outside the table bounds.
    pub fn get(&self, n: usize, k: usize) -> u32 {
        assert!(k < self.width, "k = {k} outside binomial table");
        self.rows[n * self.width + k]
    }

    /// `C(n, k)` as an element of the prime subfield.
    pub fn elem(&self, f: &FieldCtx, n: usize, k: usize) -> Elem {
        Elem::from_code(self.get(n, k) % f.characteristic())
    }
}
