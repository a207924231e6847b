//! System-size and timing tables over a grid of codes and modes.

use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{DecodeMode, Decoder, ResolvedMode};
use crate::error::{Error, Result};
use crate::galois::{Elem, FieldSpec};
use crate::interp::{build_compressed_system, decompress, solve_nullspace, GsaParams};
use crate::modify::{periodicity_projection, reencode};
use crate::rscode::{ErrorSpec, Message, RsCode};

/// One grid point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenchCase {
    pub field: FieldSpec,
    pub k: usize,
    pub s: usize,
    pub ell: usize,
    pub mode: BenchMode,
}

/// A decoding mode with every parameter explicit.
pub type BenchMode = ResolvedMode;

impl BenchCase {
    pub fn new(q: &str, k: usize, s: usize, ell: usize, mode: BenchMode) -> Self {
        BenchCase {
            field: q.parse().expect("valid field literal"),
            k,
            s,
            ell,
            mode,
        }
    }
}

/// One line of the output table.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BenchRow {
    pub field: String,
    pub n: usize,
    pub k: usize,
    pub s: usize,
    pub ell: usize,
    pub tau: usize,
    pub mode: String,
    /// Space-separated J for re-encoding, p for periodic, empty for plain.
    pub mode_param: String,
    pub sigma: usize,
    pub full_rows: usize,
    pub full_cols: usize,
    pub rows: usize,
    pub cols: usize,
    pub pruned: usize,
    pub trials: usize,
    pub mean_solve_us: f64,
    /// Trials whose list contained the transmitted codeword. Empty when the
    /// offset is not a codeword and candidates cannot be mapped back.
    pub verified: Option<usize>,
}

const HEADER: [&str; 17] = [
    "field",
    "n",
    "k",
    "s",
    "ell",
    "tau",
    "mode",
    "mode_param",
    "sigma",
    "full_rows",
    "full_cols",
    "rows",
    "cols",
    "pruned",
    "trials",
    "mean_solve_us",
    "verified",
];

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
#[serde(transparent)]
pub struct BenchTable {
    pub rows: Vec<BenchRow>,
}

impl BenchTable {
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::WriterBuilder::new()
            .has_headers(false)
            .from_writer(Vec::new());
        w.write_record(HEADER).map_err(csv_err)?;
        for row in &self.rows {
            w.serialize(row).map_err(csv_err)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Internal(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Error::Internal(e.to_string()))
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self).map_err(|e| Error::Internal(e.to_string()))
    }

    /// The table with timings zeroed, for determinism comparisons.
    pub fn without_timing(&self) -> BenchTable {
        let rows = self
            .rows
            .iter()
            .map(|r| BenchRow {
                mean_solve_us: 0.0,
                ..r.clone()
            })
            .collect();
        BenchTable { rows }
    }
}

fn csv_err(e: csv::Error) -> Error {
    Error::Internal(format!("csv: {e}"))
}

/// The default grid.
pub fn default_grid() -> Vec<BenchCase> {
    use ResolvedMode::*;
    let re = |k: usize| Reencode {
        positions: (0..k).collect(),
    };
    vec![
        BenchCase::new("q=5", 2, 1, 1, Plain),
        BenchCase::new("q=5", 2, 1, 1, re(2)),
        BenchCase::new("q=5", 2, 1, 1, Periodic { p: 2 }),
        BenchCase::new("q=7", 2, 2, 3, Plain),
        BenchCase::new("q=7", 2, 2, 3, re(2)),
        BenchCase::new("q=7", 2, 2, 3, Periodic { p: 3 }),
        BenchCase::new("q=7", 3, 1, 1, Plain),
        BenchCase::new("q=7", 3, 1, 1, Periodic { p: 3 }),
        BenchCase::new("q=2^4", 3, 1, 2, Plain),
        BenchCase::new("q=2^4", 3, 1, 2, re(3)),
        BenchCase::new("q=2^4", 3, 1, 2, Periodic { p: 5 }),
        BenchCase::new("q=2^4", 3, 1, 2, Periodic { p: 15 }),
        BenchCase::new("q=2^4", 3, 2, 3, Plain),
        BenchCase::new("q=2^4", 3, 2, 3, re(3)),
        BenchCase::new("q=2^4", 11, 1, 1, Plain),
        BenchCase::new("q=2^4", 11, 1, 1, Periodic { p: 5 }),
    ]
}

/// Runs `trials` random decodes per case. Each trial encodes a random message
/// and adds `tau` random errors. Cases whose periodic offset is not a codeword
/// (`p < d - 1`) only build, solve and decompress the compressed system.
///
/// Everything except `mean_solve_us` is a function of `(grid, trials, seed)`.
pub fn bench(grid: &[BenchCase], trials: usize, seed: u64) -> Result<BenchTable> {
    if trials == 0 {
        return Ok(BenchTable::default());
    }
    let mut rows = Vec::with_capacity(grid.len());
    for (idx, case) in grid.iter().enumerate() {
        let case_seed = seed ^ (idx as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15);
        rows.push(run_case(case, trials, case_seed)?);
    }
    Ok(BenchTable { rows })
}

fn run_case(case: &BenchCase, trials: usize, seed: u64) -> Result<BenchRow> {
    let field = Arc::new(case.field.build()?);
    let rs = RsCode::new(field, case.k)?;
    let params = GsaParams::new(rs.n(), case.k, case.s, case.ell, None)?;
    let decoder = Decoder::new(rs.clone(), case.s, case.ell, unresolve(&case.mode), None).ok();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut total = Duration::ZERO;
    let mut verified = 0;
    let mut shape = (0, 0);
    let mut pruned = 0;
    for _ in 0..trials {
        let msg = Message(
            (0..case.k)
                .map(|_| Elem::from_code(rng.gen_range(0..rs.field().order())))
                .collect(),
        );
        let c = rs.encode(&msg)?;
        let (r, _) = rs.add_errors(
            &c,
            &ErrorSpec::Random {
                weight: params.tau,
                seed: rng.gen(),
            },
        )?;
        match &decoder {
            Some(dec) => {
                let rep = dec.decode(&r)?;
                total += rep.solve_time;
                shape = rep.solved_shape;
                pruned = rep.pruned_rows;
                verified += usize::from(rep.candidates.contains_codeword(&c));
            }
            None => {
                let f = rs.field();
                let mv = match &case.mode {
                    ResolvedMode::Periodic { p } => periodicity_projection(&rs, &r, *p)?,
                    ResolvedMode::Reencode { positions } => reencode(&rs, &r, positions)?,
                    ResolvedMode::Plain => {
                        return Err(Error::Internal("plain mode always has a decoder".into()))
                    }
                };
                let start = Instant::now();
                let sys = build_compressed_system(f, &mv, &params)?;
                let w = solve_nullspace(f, &sys)?;
                let plan = sys.plan.as_ref().expect("compressed system has a plan");
                decompress(f, &w, plan, &params)?;
                total += start.elapsed();
                shape = sys.shape();
                pruned = sys.pruned_rows;
            }
        }
    }

    let (mode_param, sigma) = match &case.mode {
        ResolvedMode::Plain => (String::new(), 0),
        ResolvedMode::Reencode { positions } => (
            positions
                .iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(" "),
            positions.len(),
        ),
        ResolvedMode::Periodic { p } => (p.to_string(), rs.n() - p),
    };
    Ok(BenchRow {
        field: case.field.to_string(),
        n: rs.n(),
        k: case.k,
        s: case.s,
        ell: case.ell,
        tau: params.tau,
        mode: case.mode.name().to_string(),
        mode_param,
        sigma,
        full_rows: params.equations(),
        full_cols: params.unknowns(),
        rows: shape.0,
        cols: shape.1,
        pruned,
        trials,
        mean_solve_us: total.as_secs_f64() * 1e6 / trials as f64,
        verified: decoder.is_some().then_some(verified),
    })
}

fn unresolve(mode: &ResolvedMode) -> DecodeMode {
    match mode {
        ResolvedMode::Plain => DecodeMode::Plain,
        ResolvedMode::Reencode { positions } => DecodeMode::Reencode {
            positions: Some(positions.clone()),
        },
        ResolvedMode::Periodic { p } => DecodeMode::Periodic { p: Some(*p) },
    }
}
