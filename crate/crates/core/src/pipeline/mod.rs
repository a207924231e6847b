//! End-to-end list decoding in three modes.
//!
//! * `plain`: interpolate on the received vector directly.
//! * `reencode`: subtract the codeword matching `r` on k positions, then solve
//!   the compressed system.
//! * `periodic`: apply the periodicity projection, then solve the compressed
//!   system.
//!
//! In the modified modes candidates are found for the modified vector and
//! mapped back by subtracting the offset codeword.

mod bench;
mod selftest;

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::factor::{candidates, y_roots, Candidate, CandidateList};
use crate::galois::FieldSpec;
use crate::interp::{
    build_compressed_system, build_system, decompress, solution_to_poly, solve_nullspace, GsaParams,
};
use crate::modify::{periodicity_projection, reencode, ModifiedVector};
use crate::poly::BivariatePoly;
use crate::rscode::{Codeword, RsCode};
use crate::spectral::{hamming_distance, TimeVector};

pub use bench::{bench, default_grid, BenchCase, BenchMode, BenchRow, BenchTable};
pub use selftest::{gf16_random, gf5_exhaustive, gf7_multiplicity, selftest, SuiteResult};

/// How the received vector is treated before interpolation. `None` fields take
/// their defaults: J = {0, ..., k-1}, p = smallest divisor of n with p >= d - 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "mode")]
pub enum DecodeMode {
    Plain,
    Reencode { positions: Option<Vec<usize>> },
    Periodic { p: Option<usize> },
}

impl DecodeMode {
    pub fn name(&self) -> &'static str {
        match self {
            DecodeMode::Plain => "plain",
            DecodeMode::Reencode { .. } => "reencode",
            DecodeMode::Periodic { .. } => "periodic",
        }
    }
}

/// User-facing decoder configuration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecodeConfig {
    pub field: FieldSpec,
    pub k: usize,
    pub s: usize,
    pub ell: usize,
    pub mode: DecodeMode,
    pub tau: Option<usize>,
    pub seed: u64,
}

impl DecodeConfig {
    pub fn decoder(&self) -> Result<Decoder> {
        let field = std::sync::Arc::new(self.field.build()?);
        let rs = RsCode::new(field, self.k)?;
        Decoder::new(rs, self.s, self.ell, self.mode.clone(), self.tau)
    }
}

/// A mode with defaults filled in.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "mode")]
pub enum ResolvedMode {
    Plain,
    Reencode { positions: Vec<usize> },
    Periodic { p: usize },
}

impl ResolvedMode {
    pub fn name(&self) -> &'static str {
        match self {
            ResolvedMode::Plain => "plain",
            ResolvedMode::Reencode { .. } => "reencode",
            ResolvedMode::Periodic { .. } => "periodic",
        }
    }
}

/// The smallest divisor p of n with `p >= d - 1`.
pub fn default_period(rs: &RsCode) -> usize {
    let n = rs.n();
    let min = rs.d() - 1;
    (1..=n)
        .find(|p| n.is_multiple_of(*p) && *p >= min)
        .unwrap_or(n)
}

/// A validated decoder for one code and parameter set.
#[derive(Clone, Debug)]
pub struct Decoder {
    rs: RsCode,
    params: GsaParams,
    mode: ResolvedMode,
}

/// Outcome of one decode call.
#[derive(Clone, Debug, Serialize)]
pub struct DecodeReport {
    /// Candidates in original coordinates, distances measured against `r`.
    pub candidates: CandidateList,
    pub mode: ResolvedMode,
    pub tau: usize,
    /// `(rows, cols)` of the uncompressed system.
    pub full_shape: (usize, usize),
    /// `(rows, cols)` actually solved.
    pub solved_shape: (usize, usize),
    pub pruned_rows: usize,
    #[serde(serialize_with = "secs")]
    pub solve_time: Duration,
    /// The interpolated polynomial (for the modified vector in modified modes).
    #[serde(skip)]
    pub q: BivariatePoly,
    #[serde(skip)]
    pub modified: Option<ModifiedVector>,
}

fn secs<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

impl Decoder {
    pub fn new(
        rs: RsCode,
        s: usize,
        ell: usize,
        mode: DecodeMode,
        tau: Option<usize>,
    ) -> Result<Self> {
        let params = GsaParams::new(rs.n(), rs.k(), s, ell, tau)?;
        let mode = match mode {
            DecodeMode::Plain => ResolvedMode::Plain,
            DecodeMode::Reencode { positions } => {
                let positions = positions.unwrap_or_else(|| (0..rs.k()).collect());
                if positions.len() != rs.k() {
                    return Err(Error::InvalidPositions(format!(
                        "re-encoding decode needs exactly k = {} positions, got {}",
                        rs.k(),
                        positions.len()
                    )));
                }
                crate::rscode::check_positions(&positions, rs.n())?;
                ResolvedMode::Reencode { positions }
            }
            DecodeMode::Periodic { p } => {
                let p = p.unwrap_or_else(|| default_period(&rs));
                if p == 0 || !rs.n().is_multiple_of(p) {
                    return Err(Error::NotDivisor { p, n: rs.n() });
                }
                if p + 1 < rs.d() {
                    return Err(Error::InvalidParams(format!(
                        "periodic decoding needs p >= d - 1 = {}, got p = {p}",
                        rs.d() - 1
                    )));
                }
                ResolvedMode::Periodic { p }
            }
        };
        Ok(Decoder { rs, params, mode })
    }

    pub fn code(&self) -> &RsCode {
        &self.rs
    }

    pub fn params(&self) -> &GsaParams {
        &self.params
    }

    pub fn mode(&self) -> &ResolvedMode {
        &self.mode
    }

    /// Applies the configured modification, if any.
    pub fn modify(&self, r: &TimeVector) -> Result<Option<ModifiedVector>> {
        match &self.mode {
            ResolvedMode::Plain => Ok(None),
            ResolvedMode::Reencode { positions } => reencode(&self.rs, r, positions).map(Some),
            ResolvedMode::Periodic { p } => periodicity_projection(&self.rs, r, *p).map(Some),
        }
    }

    pub fn decode(&self, r: &TimeVector) -> Result<DecodeReport> {
        let f = self.rs.field();
        r.check_len(f)?;
        let params = &self.params;
        let full_shape = (params.equations(), params.unknowns());
        let modified = self.modify(r)?;

        let start = Instant::now();
        let (q, solved_shape, pruned_rows) = match &modified {
            None => {
                let sys = build_system(f, r, params)?;
                let x = solve_nullspace(f, &sys)?;
                (solution_to_poly(&sys, &x, params.ell)?, sys.shape(), 0)
            }
            Some(mv) => {
                let sys = build_compressed_system(f, mv, params)?;
                let w = solve_nullspace(f, &sys)?;
                let plan = sys.plan.as_ref().expect("compressed system has a plan");
                (
                    decompress(f, &w, plan, params)?,
                    sys.shape(),
                    sys.pruned_rows,
                )
            }
        };
        let solve_time = start.elapsed();

        let roots = y_roots(f, &q, self.rs.k())?;
        let candidates = match &modified {
            None => candidates(&self.rs, &roots, r, params.tau)?,
            Some(mv) => {
                let local = candidates(&self.rs, &roots, &mv.modified, params.tau)?;
                self.map_back(local, mv, r)?
            }
        };
        Ok(DecodeReport {
            candidates,
            mode: self.mode.clone(),
            tau: params.tau,
            full_shape,
            solved_shape,
            pruned_rows,
            solve_time,
            q,
            modified,
        })
    }

    /// `c = c' - offset`, with distances re-measured against `r`.
    fn map_back(
        &self,
        local: CandidateList,
        mv: &ModifiedVector,
        r: &TimeVector,
    ) -> Result<CandidateList> {
        let f = self.rs.field();
        let offset = mv.offset_codeword().ok_or_else(|| {
            Error::Internal("offset is not a codeword; cannot map candidates back".into())
        })?;
        let offset_msg = self.rs.message_of(&offset)?;
        let mut out = Vec::with_capacity(local.len());
        for cand in local.entries {
            let codeword =
                Codeword::new_unchecked(cand.codeword.as_vector().sub(f, offset.as_vector()));
            let message = crate::rscode::Message(
                cand.message
                    .0
                    .iter()
                    .zip(&offset_msg.0)
                    .map(|(&a, &b)| f.sub(a, b))
                    .collect(),
            );
            let distance = hamming_distance(&codeword, r);
            if distance <= self.params.tau {
                out.push(Candidate {
                    message,
                    codeword,
                    distance,
                });
            }
        }
        Ok(CandidateList::new(out))
    }
}

/// Decodes `r` under `cfg`.
pub fn decode(r: &TimeVector, cfg: &DecodeConfig) -> Result<DecodeReport> {
    cfg.decoder()?.decode(r)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::galois::FieldCtx;
    use crate::rscode::Message;

    fn cfg(mode: DecodeMode) -> DecodeConfig {
        DecodeConfig {
            field: "q=5".parse().unwrap(),
            k: 2,
            s: 1,
            ell: 1,
            mode,
            tau: None,
            seed: 0,
        }
    }

    #[test]
    fn worked_example_periodic() {
        let r = TimeVector::from_codes(&[3, 1, 1, 2]);
        let rep = decode(&r, &cfg(DecodeMode::Periodic { p: Some(2) })).unwrap();
        assert_eq!(rep.candidates.len(), 1);
        let c = &rep.candidates.entries[0];
        assert_eq!(c.message.codes(), [1, 1]);
        assert_eq!(c.codeword.codes(), [3, 1, 0, 2]);
        assert_eq!(c.distance, 1);
        let mv = rep.modified.unwrap();
        assert_eq!(mv.modified.codes(), [0, 0, 1, 0]);
        assert_eq!(rep.solved_shape, (2, 3));
        assert_eq!(rep.full_shape, (4, 5));
    }

    #[test]
    fn modes_agree_on_worked_example() {
        let r = TimeVector::from_codes(&[3, 1, 1, 2]);
        let plain = decode(&r, &cfg(DecodeMode::Plain)).unwrap();
        let re = decode(&r, &cfg(DecodeMode::Reencode { positions: None })).unwrap();
        let per = decode(&r, &cfg(DecodeMode::Periodic { p: None })).unwrap();
        assert_eq!(plain.candidates, re.candidates);
        assert_eq!(plain.candidates, per.candidates);
    }

    #[test]
    fn clean_codeword_any_mode() {
        let r = TimeVector::from_codes(&[3, 1, 0, 2]);
        for mode in [
            DecodeMode::Plain,
            DecodeMode::Reencode {
                positions: Some(vec![1, 3]),
            },
            DecodeMode::Periodic { p: Some(2) },
        ] {
            let rep = decode(&r, &cfg(mode)).unwrap();
            assert_eq!(rep.candidates.entries[0].distance, 0);
        }
    }

    #[test]
    fn config_validation() {
        let rs = RsCode::new(Arc::new(FieldCtx::prime(7).unwrap()), 2).unwrap();
        assert_eq!(default_period(&rs), 6);
        let bad_p = Decoder::new(rs.clone(), 1, 1, DecodeMode::Periodic { p: Some(3) }, None);
        assert!(bad_p.is_err());
        let bad_j = Decoder::new(
            rs.clone(),
            1,
            1,
            DecodeMode::Reencode {
                positions: Some(vec![1]),
            },
            None,
        );
        assert!(bad_j.is_err());
        let rs5 = RsCode::new(Arc::new(FieldCtx::prime(5).unwrap()), 2).unwrap();
        assert_eq!(default_period(&rs5), 2);
    }

    #[test]
    fn offset_bookkeeping() {
        let rs = RsCode::new(Arc::new(FieldCtx::prime(7).unwrap()), 3).unwrap();
        let f = rs.field();
        let c = rs.encode(&Message::from_codes(&[5, 0, 2])).unwrap();
        let r = c
            .as_vector()
            .add(f, &TimeVector::from_codes(&[0, 0, 4, 0, 0, 0]));
        let dec = Decoder::new(rs.clone(), 1, 1, DecodeMode::Periodic { p: None }, None).unwrap();
        let rep = dec.decode(&r).unwrap();
        let mv = rep.modified.as_ref().unwrap();
        let plain = Decoder::new(rs.clone(), 1, 1, DecodeMode::Plain, None).unwrap();
        let local = plain.decode(&mv.modified).unwrap();
        let mapped: Vec<Vec<u32>> = local
            .candidates
            .entries
            .iter()
            .map(|e| e.codeword.as_vector().sub(f, &mv.offset).codes())
            .collect();
        let direct: Vec<Vec<u32>> = rep
            .candidates
            .entries
            .iter()
            .map(|e| e.codeword.codes())
            .collect();
        assert_eq!(mapped, direct);
        assert!(rep.candidates.contains_codeword(&c));
    }
}
