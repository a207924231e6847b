//! Built-in correctness suites.

use std::sync::Arc;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{DecodeMode, Decoder};
use crate::error::Result;
use crate::factor::brute_force_list;
use crate::galois::{Elem, FieldCtx};
use crate::interp::{build_compressed_system, interpolate, satisfies_constraints, GsaParams};
use crate::modify::periodicity_projection;
use crate::rscode::{ErrorSpec, Message, RsCode};
use crate::spectral::TimeVector;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteResult {
    pub name: String,
    pub passed: bool,
    pub cases: usize,
    pub failures: usize,
    pub seconds: f64,
    pub detail: String,
}

const SEED: u64 = 0x5eed;

fn all_modes() -> [DecodeMode; 3] {
    [
        DecodeMode::Plain,
        DecodeMode::Reencode { positions: None },
        DecodeMode::Periodic { p: None },
    ]
}

fn decoders(rs: &RsCode, s: usize, ell: usize) -> Result<Vec<Decoder>> {
    all_modes()
        .into_iter()
        .map(|m| Decoder::new(rs.clone(), s, ell, m, None))
        .collect()
}

fn finish(
    name: &str,
    start: Instant,
    cases: usize,
    failures: usize,
    detail: String,
) -> SuiteResult {
    SuiteResult {
        name: name.to_string(),
        passed: failures == 0 && cases > 0,
        cases,
        failures,
        seconds: start.elapsed().as_secs_f64(),
        detail,
    }
}

/// GF(5), (4, 2), s = ell = 1: every message and every error of weight <= 1,
/// in all modes, compared with the exhaustive list.
pub fn gf5_exhaustive() -> Result<SuiteResult> {
    let start = Instant::now();
    let rs = RsCode::new(Arc::new(FieldCtx::prime(5)?), 2)?;
    let decs = decoders(&rs, 1, 1)?;
    let tau = decs[0].params().tau;
    let mut patterns = vec![ErrorSpec::Explicit(vec![])];
    for j in 0..rs.n() {
        for v in 1..5 {
            patterns.push(ErrorSpec::Explicit(vec![(j, Elem::from_code(v))]));
        }
    }
    let (mut cases, mut failures) = (0, 0);
    for msg in rs.messages() {
        let c = rs.encode(&msg)?;
        for e in &patterns {
            let (r, _) = rs.add_errors(&c, e)?;
            let oracle = brute_force_list(&rs, &r, tau)?;
            for dec in &decs {
                cases += 1;
                let list = dec.decode(&r).map(|rep| rep.candidates);
                if !matches!(&list, Ok(l) if l.contains_codeword(&c) && *l == oracle) {
                    failures += 1;
                }
            }
        }
    }
    Ok(finish(
        "gf5-exhaustive",
        start,
        cases,
        failures,
        format!("{} patterns x 25 messages x 3 modes", patterns.len()),
    ))
}

/// GF(16), (15, 3), s = 1, ell = 2: random weight-7 errors, all modes.
pub fn gf16_random(trials: usize, seed: u64) -> Result<SuiteResult> {
    let start = Instant::now();
    let rs = RsCode::new(Arc::new(FieldCtx::new(2, 4, None)?), 3)?;
    let decs = decoders(&rs, 1, 2)?;
    let tau = decs[0].params().tau;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut cases, mut failures) = (0, 0);
    for _ in 0..trials {
        let msg = random_message(&mut rng, &rs);
        let c = rs.encode(&msg)?;
        let (r, _) = rs.add_errors(
            &c,
            &ErrorSpec::Random {
                weight: tau,
                seed: rng.gen(),
            },
        )?;
        for dec in &decs {
            cases += 1;
            if !dec
                .decode(&r)
                .is_ok_and(|rep| rep.candidates.contains_codeword(&c))
            {
                failures += 1;
            }
        }
    }
    Ok(finish(
        "gf16-beyond-half",
        start,
        cases,
        failures,
        format!("{trials} trials, weight {tau}"),
    ))
}

/// GF(7), (6, 2), s = 2, ell = 3: Hasse constraints on random vectors, the
/// compressed shape for p = 3, and random decodes with tau errors.
pub fn gf7_multiplicity(trials: usize, seed: u64) -> Result<SuiteResult> {
    let start = Instant::now();
    let f = Arc::new(FieldCtx::prime(7)?);
    let rs = RsCode::new(f.clone(), 2)?;
    let params = GsaParams::new(6, 2, 2, 3, None)?;
    let decs = decoders(&rs, 2, 3)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut cases, mut failures) = (0, 0);
    for _ in 0..trials {
        let r = TimeVector(
            (0..6)
                .map(|_| Elem::from_code(rng.gen_range(0..7)))
                .collect(),
        );
        cases += 1;
        let ok = interpolate(&f, &r, &params).is_ok_and(|q| satisfies_constraints(&f, &q, &r, 2));
        failures += usize::from(!ok);

        cases += 1;
        let mv = periodicity_projection(&rs, &r, 3)?;
        let ok = build_compressed_system(&f, &mv, &params)
            .is_ok_and(|sys| sys.shape() == (9, 17) && sys.pruned_rows == 9);
        failures += usize::from(!ok);

        let msg = random_message(&mut rng, &rs);
        let c = rs.encode(&msg)?;
        let (r, _) = rs.add_errors(
            &c,
            &ErrorSpec::Random {
                weight: params.tau,
                seed: rng.gen(),
            },
        )?;
        for dec in &decs {
            cases += 1;
            if !dec
                .decode(&r)
                .is_ok_and(|rep| rep.candidates.contains_codeword(&c))
            {
                failures += 1;
            }
        }
    }
    Ok(finish(
        "gf7-multiplicity",
        start,
        cases,
        failures,
        format!("{trials} trials, s = 2, ell = 3"),
    ))
}

fn random_message(rng: &mut ChaCha8Rng, rs: &RsCode) -> Message {
    let q = rs.field().order();
    Message(
        (0..rs.k())
            .map(|_| Elem::from_code(rng.gen_range(0..q)))
            .collect(),
    )
}

/// Runs every suite with the built-in seed.
pub fn selftest() -> Result<Vec<SuiteResult>> {
    Ok(vec![
        gf5_exhaustive()?,
        gf16_random(200, SEED)?,
        gf7_multiplicity(50, SEED)?,
    ])
}
