use serde::{Deserialize, Serialize};

use super::compress::CompressionPlan;
use super::params::GsaParams;
use crate::error::{Error, Result};
use crate::galois::{Elem, FieldCtx};
use crate::linalg::Matrix;
use crate::poly::{BinomialTable, BivariatePoly};
use crate::spectral::TimeVector;

/// Row label: the `(a, b)`-th Hasse derivative at position `j`, `a + b < s`.
/// Ordered lexicographically by `(j, a, b)`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ConstraintId {
    pub j: usize,
    pub a: usize,
    pub b: usize,
}

/// Column label.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ColumnId {
    /// Coefficient of `x^mu y^nu` in `Q`.
    Q { nu: usize, mu: usize },
    /// Coefficient of `x^t` in the cofactor `W_b` of `Q_b = W_b V_b`.
    W { b: usize, t: usize },
}

impl ColumnId {
    /// `(stripe, degree)`, the column sort key.
    pub fn key(self) -> (usize, usize) {
        match self {
            ColumnId::Q { nu, mu } => (nu, mu),
            ColumnId::W { b, t } => (b, t),
        }
    }
}

/// The homogeneous interpolation system, uncompressed or compressed.
#[derive(Clone, Debug)]
pub struct InterpolationSystem {
    pub matrix: Matrix,
    pub row_ids: Vec<ConstraintId>,
    pub col_ids: Vec<ColumnId>,
    /// Present for compressed systems.
    pub plan: Option<CompressionPlan>,
    /// Rows removed by pruning (zero for uncompressed systems).
    pub pruned_rows: usize,
}

impl InterpolationSystem {
    pub fn is_compressed(&self) -> bool {
        self.plan.is_some()
    }

    pub fn shape(&self) -> (usize, usize) {
        self.matrix.shape()
    }
}

/// Row labels in order: all `(j, a, b)` with `a + b < s`.
pub fn constraint_ids(n: usize, s: usize) -> Vec<ConstraintId> {
    let mut out = Vec::with_capacity(n * s * (s + 1) / 2);
    for j in 0..n {
        for a in 0..s {
            for b in 0..s - a {
                out.push(ConstraintId { j, a, b });
            }
        }
    }
    out
}

/// Column labels of the uncompressed system: `Q(nu, mu)` for every present
/// stripe, `nu`-major.
pub fn q_columns(params: &GsaParams) -> Vec<ColumnId> {
    (0..=params.ell)
        .filter_map(|nu| params.degree_bound(nu).map(|d| (nu, d)))
        .flat_map(|(nu, d)| (0..=d).map(move |mu| ColumnId::Q { nu, mu }))
        .collect()
}

/// The `(a, b)` mixed Hasse derivative of `Q` at `(x0, y0)`:
/// `sum_{nu >= b} sum_{mu >= a} C(mu, a) C(nu, b) Q_{mu,nu} x0^(mu-a) y0^(nu-b)`,
/// binomials reduced modulo the characteristic and `0^0 = 1`.
pub fn hasse_eval(f: &FieldCtx, q: &BivariatePoly, a: usize, b: usize, x0: Elem, y0: Elem) -> Elem {
    let max_mu = q
        .stripes
        .iter()
        .map(|s| s.coeffs().len())
        .max()
        .unwrap_or(0);
    let max_n = max_mu.max(q.stripes.len());
    let binom = BinomialTable::new(max_n, a.max(b), f.characteristic());
    let mut acc = Elem::ZERO;
    for (nu, stripe) in q.stripes.iter().enumerate().skip(b) {
        let y_term = f.mul(
            binom.elem(f, nu, b),
            f.pow(y0, (nu - b) as i64).expect("nonnegative"),
        );
        if y_term.is_zero() {
            continue;
        }
        for (mu, &c) in stripe.coeffs().iter().enumerate().skip(a) {
            if c.is_zero() {
                continue;
            }
            let x_term = f.mul(
                binom.elem(f, mu, a),
                f.pow(x0, (mu - a) as i64).expect("nonnegative"),
            );
            acc = f.add(acc, f.mul(c, f.mul(x_term, y_term)));
        }
    }
    acc
}

/// Whether every Hasse derivative of total order below `s` vanishes at every
/// point `(alpha^-j, r_j)`.
pub fn satisfies_constraints(f: &FieldCtx, q: &BivariatePoly, r: &TimeVector, s: usize) -> bool {
    constraint_ids(r.len(), s)
        .into_iter()
        .all(|c| hasse_eval(f, q, c.a, c.b, f.exp(-(c.j as i64)), r[c.j]).is_zero())
}

/// Builds the uncompressed system for received vector `r`.
///
/// Entry `((j, a, b), (nu, mu)) = C(mu, a) C(nu, b) (alpha^-j)^(mu-a) r_j^(nu-b)`,
/// zero when `mu < a` or `nu < b`.
pub fn build_system(
    f: &FieldCtx,
    r: &TimeVector,
    params: &GsaParams,
) -> Result<InterpolationSystem> {
    if params.n != f.n() || r.len() != params.n {
        return Err(Error::InvalidParams(format!(
            "received length {} and n = {} must both equal q - 1 = {}",
            r.len(),
            params.n,
            f.n()
        )));
    }
    let row_ids = constraint_ids(params.n, params.s);
    let col_ids = q_columns(params);
    let max_mu = params.degree_bound(0).unwrap_or(0);
    let binom = BinomialTable::new(max_mu.max(params.ell), params.s, f.characteristic());
    let mut matrix = Matrix::zeros(row_ids.len(), col_ids.len());

    for (ri, row) in row_ids.iter().enumerate() {
        let x0 = f.exp(-(row.j as i64));
        let y0 = r[row.j];
        let x_pows = powers(f, x0, max_mu + 1);
        let y_pows = powers(f, y0, params.ell + 1);
        for (ci, col) in col_ids.iter().enumerate() {
            let ColumnId::Q { nu, mu } = *col else {
                unreachable!()
            };
            if mu < row.a || nu < row.b {
                continue;
            }
            let coef = f.mul(binom.elem(f, mu, row.a), binom.elem(f, nu, row.b));
            let v = f.mul(coef, f.mul(x_pows[mu - row.a], y_pows[nu - row.b]));
            matrix.set(ri, ci, v);
        }
    }
    Ok(InterpolationSystem {
        matrix,
        row_ids,
        col_ids,
        plan: None,
        pruned_rows: 0,
    })
}

/// `[1, x, x^2, ..., x^(len-1)]` with `0^0 = 1`.
pub(crate) fn powers(f: &FieldCtx, x: Elem, len: usize) -> Vec<Elem> {
    let mut out = Vec::with_capacity(len);
    let mut cur = Elem::ONE;
    for _ in 0..len {
        out.push(cur);
        cur = f.mul(cur, x);
    }
    out
}

/// Deterministic nonzero kernel vector of the system matrix.
pub fn solve_nullspace(f: &FieldCtx, sys: &InterpolationSystem) -> Result<Vec<Elem>> {
    sys.matrix.kernel_vector(f)
}

/// Reshapes a solution of an uncompressed system into `Q(x, y)`.
pub fn solution_to_poly(
    sys: &InterpolationSystem,
    x: &[Elem],
    ell: usize,
) -> Result<BivariatePoly> {
    if x.len() != sys.col_ids.len() {
        return Err(Error::LengthMismatch {
            expected: sys.col_ids.len(),
            actual: x.len(),
        });
    }
    let mut grid: Vec<Vec<Elem>> = vec![Vec::new(); ell + 1];
    for (col, &v) in sys.col_ids.iter().zip(x) {
        let ColumnId::Q { nu, mu } = *col else {
            return Err(Error::Internal(
                "compressed columns need decompression".into(),
            ));
        };
        let stripe = &mut grid[nu];
        if stripe.len() <= mu {
            stripe.resize(mu + 1, Elem::ZERO);
        }
        stripe[mu] = v;
    }
    Ok(BivariatePoly::from_grid(grid))
}

/// Flattens `Q` into the column order of the uncompressed system. Fails if a
/// stripe exceeds its degree bound.
pub fn poly_to_solution(q: &BivariatePoly, params: &GsaParams) -> Result<Vec<Elem>> {
    for (nu, stripe) in q.stripes.iter().enumerate() {
        if let Some(deg) = stripe.degree() {
            let bound = params.dnu.get(nu).copied().unwrap_or(-1);
            if deg as i64 > bound {
                return Err(Error::DegreeOverflow {
                    nu,
                    degree: deg,
                    bound,
                });
            }
        }
    }
    Ok(q_columns(params)
        .into_iter()
        .map(|c| match c {
            ColumnId::Q { nu, mu } => q.coeff(mu, nu),
            ColumnId::W { .. } => unreachable!(),
        })
        .collect())
}

/// Solves the interpolation problem for `r`: a nonzero `Q` with the degree
/// bounds of `params` and a zero of multiplicity `s` at every `(alpha^-j, r_j)`.
pub fn interpolate(f: &FieldCtx, r: &TimeVector, params: &GsaParams) -> Result<BivariatePoly> {
    let sys = build_system(f, r, params)?;
    let x = solve_nullspace(f, &sys)?;
    solution_to_poly(&sys, &x, params.ell)
}
