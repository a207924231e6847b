//! Compression of the interpolation system for modified received vectors.
//!
//! If the received vector vanishes on a position set J, every solution has
//! `Q_b = W_b V^(s-b)` for `b < s`, where `V(x) = prod_{j in J} (x - alpha^-j)`.
//! Substituting this factorization merges the `Q_b` columns into fewer `W_b`
//! columns, after which the rows belonging to positions in J are identically
//! zero and can be dropped.

use serde::Serialize;

use super::params::GsaParams;
use super::system::{build_system, ColumnId, InterpolationSystem};
use crate::error::{Error, Result};
use crate::galois::{Elem, FieldCtx};
use crate::linalg::Matrix;
use crate::modify::{ModifiedVector, ModifyMode};
use crate::poly::{BivariatePoly, Poly};

/// Everything needed to map between `Q` and `W` coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompressionPlan {
    /// The position set J, ascending.
    pub positions: Vec<usize>,
    pub sigma: usize,
    /// Monic `V(x)` of degree sigma.
    pub v_poly: Poly,
    /// `v_powers[b] = V(x)^(s - b)` for `b < s`.
    pub v_powers: Vec<Poly>,
    /// Degree bounds `d_b - sigma (s - b)` of `W_b`; negative means `W_b = 0`.
    pub w_degrees: Vec<i64>,
}

impl CompressionPlan {
    pub fn new(f: &FieldCtx, positions: Vec<usize>, v_poly: Poly, params: &GsaParams) -> Self {
        let sigma = positions.len();
        let s = params.s;
        let v_powers = (0..s).map(|b| v_poly.pow(f, s - b)).collect();
        let w_degrees = (0..s)
            .map(|b| params.dnu[b] - (sigma * (s - b)) as i64)
            .collect();
        CompressionPlan {
            positions,
            sigma,
            v_poly,
            v_powers,
            w_degrees,
        }
    }

    /// Column labels of the compressed system: `W(b, t)` for `b < s`, then
    /// `Q(nu, mu)` for present `nu >= s`.
    pub fn columns(&self, params: &GsaParams) -> Vec<ColumnId> {
        let mut cols = Vec::new();
        for (b, &wd) in self.w_degrees.iter().enumerate() {
            if wd >= 0 {
                cols.extend((0..=wd as usize).map(|t| ColumnId::W { b, t }));
            }
        }
        for nu in params.s..=params.ell {
            if let Some(d) = params.degree_bound(nu) {
                cols.extend((0..=d).map(|mu| ColumnId::Q { nu, mu }));
            }
        }
        cols
    }
}

/// `V(x) = prod_{j in J} (x - alpha^-j)`; the empty product is 1.
pub fn build_v_poly(f: &FieldCtx, positions: &[usize]) -> Poly {
    positions.iter().fold(Poly::one(), |acc, &j| {
        acc.mul(
            f,
            &Poly::from_coeffs(vec![f.neg(f.exp(-(j as i64))), Elem::ONE]),
        )
    })
}

/// `V(x)` for the periodicity projection, in closed form:
/// `(x^n - 1) / (x^p - 1) = 1 + x^p + x^(2p) + ... + x^(n-p)`.
pub fn periodic_v_poly(f: &FieldCtx, p: usize) -> Result<Poly> {
    let n = f.n();
    if p == 0 || !n.is_multiple_of(p) {
        return Err(Error::NotDivisor { p, n });
    }
    let mut c = vec![Elem::ZERO; n - p + 1];
    for i in (0..=n - p).step_by(p) {
        c[i] = Elem::ONE;
    }
    Ok(Poly::from_coeffs(c))
}

/// Builds the compressed system for a modified received vector.
///
/// Every pruned row is checked to be identically zero; a nonzero one means the
/// vector does not vanish on J and aborts with [`Error::NonzeroPrunedRow`].
pub fn build_compressed_system(
    f: &FieldCtx,
    mv: &ModifiedVector,
    params: &GsaParams,
) -> Result<InterpolationSystem> {
    let positions = mv.zero_positions();
    let v_poly = match mv.mode {
        ModifyMode::Periodic { p } => periodic_v_poly(f, p)?,
        ModifyMode::Reencode { .. } => build_v_poly(f, &positions),
    };
    let plan = CompressionPlan::new(f, positions, v_poly, params);
    let full = build_system(f, &mv.modified, params)?;
    compress_system(f, &full, plan, params)
}

/// Applies the column substitution and row pruning of `plan` to an
/// uncompressed system.
pub fn compress_system(
    f: &FieldCtx,
    full: &InterpolationSystem,
    plan: CompressionPlan,
    params: &GsaParams,
) -> Result<InterpolationSystem> {
    let col_ids = plan.columns(params);
    if col_ids.is_empty() {
        return Err(Error::InvalidParams(
            "every W_b is absent and no stripe nu >= s remains".into(),
        ));
    }
    let col_index = |nu: usize, mu: usize| {
        full.col_ids
            .iter()
            .position(|&c| c == ColumnId::Q { nu, mu })
            .expect("column present in uncompressed system")
    };

    let rows = full.matrix.rows();
    let mut merged = Matrix::zeros(rows, col_ids.len());
    for (ci, &col) in col_ids.iter().enumerate() {
        match col {
            ColumnId::W { b, t } => {
                for (i, &vc) in plan.v_powers[b].coeffs().iter().enumerate() {
                    if vc.is_zero() {
                        continue;
                    }
                    let src = col_index(b, t + i);
                    for r in 0..rows {
                        let v = f.add(merged.get(r, ci), f.mul(vc, full.matrix.get(r, src)));
                        merged.set(r, ci, v);
                    }
                }
            }
            ColumnId::Q { nu, mu } => {
                let src = col_index(nu, mu);
                for r in 0..rows {
                    merged.set(r, ci, full.matrix.get(r, src));
                }
            }
        }
    }

    let mut in_j = vec![false; params.n];
    for &j in &plan.positions {
        in_j[j] = true;
    }
    for (r, id) in full.row_ids.iter().enumerate() {
        if in_j[id.j] && merged.row(r).iter().any(|e| !e.is_zero()) {
            return Err(Error::NonzeroPrunedRow {
                row: r,
                position: id.j,
            });
        }
    }
    let matrix = merged.retain_rows(|r| !in_j[full.row_ids[r].j]);
    let row_ids: Vec<_> = full
        .row_ids
        .iter()
        .copied()
        .filter(|id| !in_j[id.j])
        .collect();
    let pruned_rows = full.row_ids.len() - row_ids.len();
    Ok(InterpolationSystem {
        matrix,
        row_ids,
        col_ids,
        plan: Some(plan),
        pruned_rows,
    })
}

/// Recovers `Q` from a solution in compressed coordinates:
/// `Q_b = W_b V^(s-b)` for `b < s`, `Q_nu` copied for `nu >= s`.
pub fn decompress(
    f: &FieldCtx,
    w_solution: &[Elem],
    plan: &CompressionPlan,
    params: &GsaParams,
) -> Result<BivariatePoly> {
    let cols = plan.columns(params);
    if cols.len() != w_solution.len() {
        return Err(Error::LengthMismatch {
            expected: cols.len(),
            actual: w_solution.len(),
        });
    }
    let mut grid: Vec<Vec<Elem>> = vec![Vec::new(); params.ell + 1];
    for (&col, &v) in cols.iter().zip(w_solution) {
        let (nu, deg) = col.key();
        let stripe = &mut grid[nu];
        if stripe.len() <= deg {
            stripe.resize(deg + 1, Elem::ZERO);
        }
        stripe[deg] = v;
    }
    let mut stripes: Vec<Poly> = grid.into_iter().map(Poly::from_coeffs).collect();
    for (b, stripe) in stripes.iter_mut().enumerate().take(params.s) {
        *stripe = stripe.mul(f, &plan.v_powers[b]);
        if let Some(deg) = stripe.degree() {
            if deg as i64 > params.dnu[b] {
                return Err(Error::DegreeOverflow {
                    nu: b,
                    degree: deg,
                    bound: params.dnu[b],
                });
            }
        }
    }
    Ok(BivariatePoly::new(stripes))
}
