//! The factorization step: find every `F(x)` with `deg F < k` and
//! `Q(x, F(x)) = 0`, then turn the roots into candidate codewords.
//!
//! Roots are peeled one coefficient at a time (Roth-Ruckenstein): strip the
//! largest power of x dividing Q, find the roots `g` of `Q(0, y)`, and recurse
//! on `Q(x, x y + g)`. Every leaf at depth k is confirmed by full substitution.
//!
//! Interpolation points are `(alpha^-j, r_j)` and codewords satisfy
//! `c_j = n^-1 C(alpha^-j)`, so a root `F` corresponds to the message
//! polynomial `C = n F`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::galois::{Elem, FieldCtx};
use crate::poly::{BinomialTable, BivariatePoly, Poly};
use crate::rscode::{Codeword, Message, RsCode};
use crate::spectral::{hamming_distance, TimeVector};

/// One decoding result.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Candidate {
    pub message: Message,
    pub codeword: Codeword,
    /// Hamming distance to the reference vector.
    pub distance: usize,
}

/// Candidates sorted by `(distance, message)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CandidateList {
    pub entries: Vec<Candidate>,
}

impl CandidateList {
    pub fn new(mut entries: Vec<Candidate>) -> Self {
        entries.sort_by(|a, b| (a.distance, &a.message).cmp(&(b.distance, &b.message)));
        entries.dedup_by(|a, b| a.message == b.message);
        CandidateList { entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn messages(&self) -> Vec<Message> {
        self.entries.iter().map(|c| c.message.clone()).collect()
    }

    pub fn contains_codeword(&self, c: &Codeword) -> bool {
        self.entries.iter().any(|e| &e.codeword == c)
    }
}

/// Whether `Q(x, F(x))` is the zero polynomial.
pub fn substitute_check(f: &FieldCtx, q: &BivariatePoly, root: &Poly) -> bool {
    q.compose_y(f, root).is_zero()
}

/// All `F` with `deg F < k` and `Q(x, F(x)) = 0`, deduplicated and sorted by
/// coefficient codes.
pub fn y_roots(f: &FieldCtx, q: &BivariatePoly, k: usize) -> Result<Vec<Poly>> {
    if q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let ell = q.stripes.len().saturating_sub(1);
    let binom = BinomialTable::new(ell, ell, f.characteristic());
    let mut found = Vec::new();
    let mut prefix = Vec::with_capacity(k);
    peel(f, &binom, q.clone(), k, &mut prefix, &mut found);

    let mut roots: Vec<Poly> = found
        .into_iter()
        .map(Poly::from_coeffs)
        .filter(|root| substitute_check(f, q, root))
        .collect();
    roots.sort();
    roots.dedup();
    Ok(roots)
}

fn peel(
    f: &FieldCtx,
    binom: &BinomialTable,
    q: BivariatePoly,
    k: usize,
    prefix: &mut Vec<Elem>,
    out: &mut Vec<Vec<Elem>>,
) {
    let q = strip_x_power(q);
    if prefix.len() == k {
        out.push(prefix.clone());
        return;
    }
    let at_zero = Poly::from_coeffs(q.stripes.iter().map(|s| s.coeff(0)).collect());
    for g in univariate_roots(f, &at_zero) {
        prefix.push(g);
        peel(f, binom, shift(f, binom, &q, g), k, prefix, out);
        prefix.pop();
    }
}

/// Divides out the largest power of x common to all coefficients.
fn strip_x_power(q: BivariatePoly) -> BivariatePoly {
    let shift = q
        .stripes
        .iter()
        .filter_map(|s| s.coeffs().iter().position(|c| !c.is_zero()))
        .min()
        .unwrap_or(0);
    if shift == 0 {
        return q;
    }
    BivariatePoly::new(
        q.stripes
            .into_iter()
            .map(|s| Poly::from_coeffs(s.coeffs().get(shift..).unwrap_or(&[]).to_vec()))
            .collect(),
    )
}

/// `Q(x, x y + g)`: the coefficient of `y^i` is
/// `x^i sum_{nu >= i} C(nu, i) g^(nu - i) Q_nu(x)`.
fn shift(f: &FieldCtx, binom: &BinomialTable, q: &BivariatePoly, g: Elem) -> BivariatePoly {
    let len = q.stripes.len();
    let g_pows = crate::interp::powers(f, g, len);
    let stripes = (0..len)
        .map(|i| {
            let mut acc = Poly::zero();
            for nu in i..len {
                let c = f.mul(binom.elem(f, nu, i), g_pows[nu - i]);
                if !c.is_zero() {
                    acc = acc.add(f, &q.stripes[nu].scale(f, c));
                }
            }
            acc.mul(f, &Poly::monomial(i))
        })
        .collect();
    BivariatePoly::new(stripes)
}

/// Roots of a nonzero univariate polynomial, ascending by code.
fn univariate_roots(f: &FieldCtx, h: &Poly) -> Vec<Elem> {
    match h.degree() {
        None | Some(0) => Vec::new(),
        Some(1) => {
            let root = f.neg(
                f.div(h.coeff(0), h.coeff(1))
                    .expect("leading coefficient nonzero"),
            );
            vec![root]
        }
        Some(_) => f.elements().filter(|&x| h.eval(f, x).is_zero()).collect(),
    }
}

/// Maps y-roots to candidate codewords within distance `tau` of `reference`.
/// Roots of degree `>= k` are skipped.
pub fn candidates(
    rs: &RsCode,
    roots: &[Poly],
    reference: &TimeVector,
    tau: usize,
) -> Result<CandidateList> {
    let f = rs.field();
    let n_elem = f.from_int(rs.n() as i64);
    let mut out = Vec::new();
    for root in roots {
        if root.degree().is_some_and(|d| d >= rs.k()) {
            continue;
        }
        let message = Message(root.scale(f, n_elem).padded(rs.k()));
        let codeword = rs.encode(&message)?;
        let distance = hamming_distance(&codeword, reference);
        if distance <= tau {
            out.push(Candidate {
                message,
                codeword,
                distance,
            });
        }
    }
    Ok(CandidateList::new(out))
}

/// Exhaustive list of codewords within distance `tau` of `reference`.
/// Intended for `q^k` up to about 2^20.
pub fn brute_force_list(rs: &RsCode, reference: &TimeVector, tau: usize) -> Result<CandidateList> {
    let mut out = Vec::new();
    for message in rs.messages() {
        let codeword = rs.encode(&message)?;
        let distance = hamming_distance(&codeword, reference);
        if distance <= tau {
            out.push(Candidate {
                message,
                codeword,
                distance,
            });
        }
    }
    Ok(CandidateList::new(out))
}
