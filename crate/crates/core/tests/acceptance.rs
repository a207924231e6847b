//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.
//!
//! Reference values are computed here with separate integer arithmetic
//! (`Zp` for prime fields, `Gf2m` for binary extension fields) rather than
//! through the library's field tables.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use gsdec_core::interp::{
    build_compressed_system, build_system, build_v_poly, decompress, interpolate, periodic_v_poly,
    poly_to_solution, solve_nullspace,
};
use gsdec_core::modify::{
    periodic_time_vector, periodicity_projection, project_periodic, projection_operator, reencode,
};
use gsdec_core::pipeline::{bench, default_grid, DecodeMode, Decoder};
use gsdec_core::{
    BivariatePoly, CandidateList, Elem, FieldCtx, GsaParams, ModifiedVector, RsCode, TimeVector,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

// ---------------------------------------------------------------------------
// Reference arithmetic

/// GF(p) on plain integers.
#[derive(Clone, Copy)]
struct Zp {
    p: u64,
    alpha: u64,
}

impl Zp {
    fn new(p: u64) -> Self {
        let n = p - 1;
        let alpha = (2..p.max(3))
            .find(|&g| (1..n).all(|e| Self::raw_pow(g, e, p) != 1))
            .unwrap_or(1);
        Zp { p, alpha }
    }

    fn raw_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
        let mut acc = 1 % p;
        b %= p;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        acc
    }

    fn n(&self) -> u64 {
        self.p - 1
    }
    fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b % self.p) % self.p
    }
    fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }
    fn pow(&self, b: u64, e: u64) -> u64 {
        Self::raw_pow(b, e, self.p)
    }
    fn inv(&self, a: u64) -> u64 {
        self.pow(a, self.p - 2)
    }
    /// `alpha^(-e)`.
    fn alpha_neg(&self, e: u64) -> u64 {
        self.pow(self.alpha, (self.n() - e % self.n()) % self.n())
    }
    fn binom(&self, n: u64, k: u64) -> u64 {
        if k > n {
            return 0;
        }
        let mut c: u128 = 1;
        for i in 0..k {
            c = c * (n - i) as u128 / (i + 1) as u128;
        }
        (c % self.p as u128) as u64
    }

    /// `c_j = n^-1 sum_i m_i alpha^(-ij)`.
    fn encode(&self, msg: &[u64]) -> Vec<u64> {
        let n = self.n();
        let n_inv = self.inv(n % self.p);
        (0..n)
            .map(|j| {
                let s = msg.iter().enumerate().fold(0, |acc, (i, &m)| {
                    self.add(acc, self.mul(m, self.alpha_neg(i as u64 * j)))
                });
                self.mul(n_inv, s)
            })
            .collect()
    }

    fn dft(&self, v: &[u64]) -> Vec<u64> {
        let n = self.n();
        (0..n)
            .map(|j| {
                v.iter().enumerate().fold(0, |acc, (i, &x)| {
                    self.add(acc, self.mul(x, self.pow(self.alpha, j * i as u64 % n)))
                })
            })
            .collect()
    }

    fn idft(&self, big_v: &[u64]) -> Vec<u64> {
        let n = self.n();
        let n_inv = self.inv(n % self.p);
        (0..n)
            .map(|j| {
                let s = big_v.iter().enumerate().fold(0, |acc, (i, &x)| {
                    self.add(acc, self.mul(x, self.alpha_neg(j * i as u64)))
                });
                self.mul(n_inv, s)
            })
            .collect()
    }

    /// Hasse derivative `D^(a,b) Q` at `(x0, y0)` from integer binomials.
    fn hasse(&self, q: &BivariatePoly, a: u64, b: u64, x0: u64, y0: u64) -> u64 {
        let mut acc = 0;
        for (nu, stripe) in q.stripes.iter().enumerate() {
            for (mu, c) in stripe.coeffs().iter().enumerate() {
                let (mu, nu) = (mu as u64, nu as u64);
                if mu < a || nu < b || c.is_zero() {
                    continue;
                }
                let t = self.mul(self.binom(mu, a), self.binom(nu, b));
                let t = self.mul(t, self.mul(c.code() as u64, self.pow(x0, mu - a)));
                acc = self.add(acc, self.mul(t, self.pow(y0, nu - b)));
            }
        }
        acc
    }

    /// `prod_{j in J} (x - alpha^-j)`, ascending coefficients.
    fn v_poly(&self, positions: &[usize]) -> Vec<u64> {
        let mut acc = vec![1];
        for &j in positions {
            let root = self.alpha_neg(j as u64);
            let mut next = vec![0; acc.len() + 1];
            for (i, &c) in acc.iter().enumerate() {
                next[i + 1] = self.add(next[i + 1], c);
                next[i] = self.sub(next[i], self.mul(c, root));
            }
            acc = next;
        }
        acc
    }
}

/// GF(2^m) with carry-less multiplication, reduced by the given modulus bits.
struct Gf2m {
    m: u32,
    modulus: u64,
    alpha: u64,
}

impl Gf2m {
    fn new(m: u32, modulus_digits: &[u32]) -> Self {
        let modulus = modulus_digits
            .iter()
            .enumerate()
            .fold(0u64, |acc, (i, &d)| acc | ((d as u64) << i));
        let mut f = Gf2m {
            m,
            modulus,
            alpha: 0,
        };
        let n = f.n();
        f.alpha = (2..(1 << m))
            .find(|&g| (1..n).all(|e| f.pow(g, e) != 1))
            .unwrap();
        f
    }
    fn n(&self) -> u64 {
        (1 << self.m) - 1
    }
    fn mul(&self, mut a: u64, mut b: u64) -> u64 {
        let mut acc = 0;
        while b > 0 {
            if b & 1 == 1 {
                acc ^= a;
            }
            b >>= 1;
            a <<= 1;
            if a >> self.m & 1 == 1 {
                a ^= self.modulus;
            }
        }
        acc
    }
    fn pow(&self, b: u64, mut e: u64) -> u64 {
        let (mut acc, mut base) = (1, b);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }
    /// `c_j = sum_i m_i alpha^(-ij)`; `n^-1 = 1` in characteristic 2 for odd n.
    fn encode(&self, msg: &[u64]) -> Vec<u64> {
        let n = self.n();
        (0..n)
            .map(|j| {
                msg.iter().enumerate().fold(0, |acc, (i, &m)| {
                    acc ^ self.mul(m, self.pow(self.alpha, (n - (i as u64 * j) % n) % n))
                })
            })
            .collect()
    }
}

fn codes(v: &[Elem]) -> Vec<u64> {
    v.iter().map(|e| e.code() as u64).collect()
}

fn distance(a: &[u64], b: &[u64]) -> usize {
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

/// Default radius from the degree-bound rule, in integers: the largest integer
/// strictly below `n (2 ell - s + 1) / (2 (ell + 1)) - ell (k - 1) / (2 s)`.
fn ref_tau(n: i64, k: i64, s: i64, ell: i64) -> i64 {
    let num = n * (2 * ell - s + 1) * s - ell * (k - 1) * (ell + 1);
    let den = 2 * (ell + 1) * s;
    (num - 1).div_euclid(den)
}

fn ref_dnu(n: i64, k: i64, s: i64, ell: i64) -> Vec<i64> {
    let tau = ref_tau(n, k, s, ell);
    (0..=ell)
        .map(|nu| s * (n - tau) - 1 - nu * (k - 1))
        .collect()
}

fn list_triples(list: &CandidateList) -> BTreeSet<(Vec<u64>, Vec<u64>, usize)> {
    list.entries
        .iter()
        .map(|c| (codes(&c.message.0), codes(&c.codeword), c.distance))
        .collect()
}

// ---------------------------------------------------------------------------
// Compression oracle, shared by suites 1 to 3

#[derive(Default)]
struct CompressionLog {
    checked: usize,
    failures: Vec<String>,
}

impl CompressionLog {
    /// Decompressed kernel vector of the compressed system must be a nonzero
    /// kernel vector of the uncompressed system on the same modified vector.
    fn check(&mut self, f: &FieldCtx, mv: &ModifiedVector, params: &GsaParams, label: &str) {
        self.checked += 1;
        let result = (|| -> Result<bool, gsdec_core::Error> {
            let sys = build_compressed_system(f, mv, params)?;
            let w = solve_nullspace(f, &sys)?;
            let q = decompress(f, &w, sys.plan.as_ref().unwrap(), params)?;
            let x = poly_to_solution(&q, params)?;
            let full = build_system(f, &mv.modified, params)?;
            let y = full.matrix.mul_vec(f, &x)?;
            Ok(x.iter().any(|e| !e.is_zero()) && y.iter().all(|e| e.is_zero()))
        })();
        match result {
            Ok(true) => {}
            Ok(false) => self.failures.push(format!("{label}: not a kernel vector")),
            Err(e) => self.failures.push(format!("{label}: {e}")),
        }
    }
}

fn modes() -> [DecodeMode; 3] {
    [
        DecodeMode::Plain,
        DecodeMode::Reencode { positions: None },
        DecodeMode::Periodic { p: None },
    ]
}

// ---------------------------------------------------------------------------
// Criteria

fn criterion_1(log: &mut CompressionLog) -> Outcome {
    let start = Instant::now();
    let zp = Zp::new(5);
    let f = Arc::new(FieldCtx::prime(5).unwrap());
    let rs = RsCode::new(f.clone(), 2).unwrap();
    let tau = ref_tau(4, 2, 1, 1) as usize;
    ensure!(tau == 1, "reference radius {tau}, expected 1");
    let decs: Vec<Decoder> = modes()
        .into_iter()
        .map(|m| Decoder::new(rs.clone(), 1, 1, m, None).unwrap())
        .collect();

    let all_msgs: Vec<Vec<u64>> = (0..25).map(|i| vec![i / 5, i % 5]).collect();
    let mut patterns: Vec<Vec<u64>> = vec![vec![0; 4]];
    for j in 0..4 {
        for v in 1..5 {
            let mut e = vec![0; 4];
            e[j] = v;
            patterns.push(e);
        }
    }
    ensure!(patterns.len() == 17, "pattern count");

    let mut cases = 0;
    for msg in &all_msgs {
        let c = zp.encode(msg);
        for e in &patterns {
            let r: Vec<u64> = c.iter().zip(e).map(|(&a, &b)| zp.add(a, b)).collect();
            let oracle: BTreeSet<_> = all_msgs
                .iter()
                .map(|m| {
                    let cw = zp.encode(m);
                    let d = distance(&cw, &r);
                    (m.clone(), cw, d)
                })
                .filter(|t| t.2 <= tau)
                .collect();
            let rv = TimeVector::from_codes(&r.iter().map(|&x| x as u32).collect::<Vec<_>>());
            for dec in &decs {
                cases += 1;
                let rep = dec
                    .decode(&rv)
                    .map_err(|err| format!("msg {msg:?} e {e:?} {}: {err}", dec.mode().name()))?;
                let got = list_triples(&rep.candidates);
                ensure!(
                    got.iter().any(|t| t.1 == c),
                    "msg {msg:?} e {e:?} {}: transmitted codeword missing",
                    dec.mode().name()
                );
                ensure!(
                    got == oracle,
                    "msg {msg:?} e {e:?} {}: list {got:?} != exhaustive {oracle:?}",
                    dec.mode().name()
                );
                if let Some(mv) = dec.modify(&rv).unwrap() {
                    log.check(&f, &mv, dec.params(), &format!("gf5 {msg:?} {e:?}"));
                }
            }
        }
    }
    let elapsed = start.elapsed();
    ensure!(
        elapsed < Duration::from_secs(5),
        "runtime {elapsed:?} >= 5 s"
    );
    Ok(format!(
        "{cases} decodes match the exhaustive list, {elapsed:.2?}"
    ))
}

fn criterion_2(log: &mut CompressionLog) -> Outcome {
    let start = Instant::now();
    let f = Arc::new(FieldCtx::new(2, 4, None).unwrap());
    let gf = Gf2m::new(4, f.modulus());
    let rs = RsCode::new(f.clone(), 3).unwrap();
    let params = GsaParams::new(15, 3, 1, 2, None).unwrap();
    ensure!(params.eps0 == 8.into(), "eps0 {} != 8", params.eps0);
    let half = (rs.d() - 1) / 2;
    ensure!(half == 6, "half distance {half} != 6");
    ensure!(ref_tau(15, 3, 1, 2) == 7, "reference radius");
    let decs: Vec<Decoder> = modes()
        .into_iter()
        .map(|m| Decoder::new(rs.clone(), 1, 2, m, None).unwrap())
        .collect();

    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let trials = 200;
    let mut list_sizes = BTreeSet::new();
    for t in 0..trials {
        let msg: Vec<u64> = (0..3).map(|_| rng.gen_range(0..16)).collect();
        let c = gf.encode(&msg);
        let mut e = vec![0u64; 15];
        for j in rand::seq::index::sample(&mut rng, 15, 7) {
            e[j] = rng.gen_range(1..16);
        }
        let r: Vec<u64> = c.iter().zip(&e).map(|(a, b)| a ^ b).collect();
        let rv = TimeVector::from_codes(&r.iter().map(|&x| x as u32).collect::<Vec<_>>());
        for dec in &decs {
            let rep = dec
                .decode(&rv)
                .map_err(|err| format!("trial {t} {}: {err}", dec.mode().name()))?;
            for cand in &rep.candidates.entries {
                let m = codes(&cand.message.0);
                let cw = gf.encode(&m);
                ensure!(
                    cw == codes(&cand.codeword),
                    "trial {t}: candidate is not the encoding of its message"
                );
                let d = distance(&cw, &r);
                ensure!(
                    d == cand.distance && d <= 7,
                    "trial {t}: candidate distance {d}"
                );
            }
            ensure!(
                rep.candidates
                    .entries
                    .iter()
                    .any(|x| codes(&x.codeword) == c),
                "trial {t} {}: transmitted codeword missing",
                dec.mode().name()
            );
            list_sizes.insert(rep.candidates.len());
            if let Some(mv) = dec.modify(&rv).unwrap() {
                log.check(&f, &mv, dec.params(), &format!("gf16 trial {t}"));
            }
        }
    }
    let elapsed = start.elapsed();
    ensure!(
        elapsed < Duration::from_secs(60),
        "runtime {elapsed:?} >= 60 s"
    );
    Ok(format!(
        "{trials} trials x 3 modes, weight 7 > 6, list sizes {list_sizes:?}, {elapsed:.2?}"
    ))
}

fn criterion_3(log: &mut CompressionLog) -> Outcome {
    let zp = Zp::new(7);
    let f = Arc::new(FieldCtx::prime(7).unwrap());
    let rs = RsCode::new(f.clone(), 2).unwrap();
    let params = GsaParams::new(6, 2, 2, 3, None).unwrap();
    let dnu = ref_dnu(6, 2, 2, 3);
    let unknowns: i64 = dnu.iter().map(|d| d + 1).sum();
    ensure!(
        params.dnu == dnu,
        "degree bounds {:?} != {dnu:?}",
        params.dnu
    );
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let trials = 50;
    let (s, sigma, p) = (2u64, 3usize, 3usize);
    for t in 0..trials {
        let r: Vec<u64> = (0..6).map(|_| rng.gen_range(0..7)).collect();
        let rv = TimeVector::from_codes(&r.iter().map(|&x| x as u32).collect::<Vec<_>>());
        let q = interpolate(&f, &rv, &params).map_err(|e| format!("trial {t}: {e}"))?;
        ensure!(!q.is_zero(), "trial {t}: zero interpolant");
        let mut constraints = 0;
        for j in 0..6 {
            for a in 0..s {
                for b in 0..s - a {
                    constraints += 1;
                    let v = zp.hasse(&q, a, b, zp.alpha_neg(j), r[j as usize]);
                    ensure!(v == 0, "trial {t}: Hasse ({a},{b}) at position {j} is {v}");
                }
            }
        }
        ensure!(constraints == 18, "constraint count {constraints}");

        let mv = periodicity_projection(&rs, &rv, p).unwrap();
        let sys =
            build_compressed_system(&f, &mv, &params).map_err(|e| format!("trial {t}: {e}"))?;
        let full = build_system(&f, &mv.modified, &params).unwrap();
        ensure!(
            full.shape() == (18, unknowns as usize),
            "full shape {:?}",
            full.shape()
        );
        let expect = (9, unknowns as usize - sigma * 3);
        ensure!(
            sys.shape() == expect,
            "compressed shape {:?} != {expect:?}",
            sys.shape()
        );
        ensure!(sys.pruned_rows == 9, "pruned {}", sys.pruned_rows);

        // every compressed column, mapped back to Q, meets all constraints at J
        let plan = sys.plan.as_ref().unwrap();
        let zero_set: Vec<u64> = (0..6).filter(|j| j % 2 != 0).collect();
        ensure!(
            plan.positions.iter().map(|&j| j as u64).collect::<Vec<_>>() == zero_set,
            "zero positions {:?}",
            plan.positions
        );
        ensure!(
            zero_set.iter().all(|&j| mv.modified[j as usize].is_zero()),
            "modified vector not zero on J"
        );
        for col in 0..sys.matrix.cols() {
            let mut unit = vec![Elem::ZERO; sys.matrix.cols()];
            unit[col] = Elem::ONE;
            let qc = decompress(&f, &unit, plan, &params).unwrap();
            for &j in &zero_set {
                for a in 0..s {
                    for b in 0..s - a {
                        let v = zp.hasse(&qc, a, b, zp.alpha_neg(j), 0);
                        ensure!(
                            v == 0,
                            "trial {t}: pruned row ({j},{a},{b}) column {col} is {v}"
                        );
                    }
                }
            }
        }
        log.check(&f, &mv, &params, &format!("gf7 p=3 trial {t}"));

        // decodes with tau errors in all modes
        let msg: Vec<u64> = (0..2).map(|_| rng.gen_range(0..7)).collect();
        let c = zp.encode(&msg);
        let mut e = vec![0u64; 6];
        for j in rand::seq::index::sample(&mut rng, 6, params.tau) {
            e[j] = rng.gen_range(1..7);
        }
        let r2: Vec<u64> = c.iter().zip(&e).map(|(&a, &b)| zp.add(a, b)).collect();
        let rv2 = TimeVector::from_codes(&r2.iter().map(|&x| x as u32).collect::<Vec<_>>());
        for mode in modes() {
            let dec = Decoder::new(rs.clone(), 2, 3, mode, None).unwrap();
            let rep = dec
                .decode(&rv2)
                .map_err(|err| format!("trial {t} {}: {err}", dec.mode().name()))?;
            ensure!(
                rep.candidates
                    .entries
                    .iter()
                    .any(|x| codes(&x.codeword) == c),
                "trial {t} {}: transmitted codeword missing",
                dec.mode().name()
            );
            if let Some(mv) = dec.modify(&rv2).unwrap() {
                log.check(&f, &mv, dec.params(), &format!("gf7 decode trial {t}"));
            }
        }
    }
    Ok(format!(
        "{trials} trials: 18 Hasse constraints vanish; p=3 gives rows 18 -> 9, cols {unknowns} -> {}, pruned rows zero",
        unknowns - 9
    ))
}

fn criterion_4() -> Outcome {
    const CAP: u64 = 10_000;
    let mut total = 0;
    for q in [5u64, 7] {
        let zp = Zp::new(q);
        let f = FieldCtx::prime(q).unwrap();
        let n = zp.n() as usize;
        for p in (1..=n).filter(|p| n.is_multiple_of(*p)) {
            let count = (q.pow(p as u32)).min(CAP);
            let stride = n / p;
            let p_inv = zp.inv(p as u64 % q);
            for idx in 0..count {
                let mut rest = idx;
                let template: Vec<u64> = (0..p)
                    .map(|_| {
                        let d = rest % q;
                        rest /= q;
                        d
                    })
                    .collect();
                let spectrum: Vec<u64> = (0..n).map(|i| template[i % p]).collect();
                let reference = zp.idft(&spectrum);
                let t_elems: Vec<Elem> = template
                    .iter()
                    .map(|&x| Elem::from_code(x as u32))
                    .collect();
                let got = codes(&periodic_time_vector(&f, &t_elems, p).unwrap());
                ensure!(
                    got == reference,
                    "q={q} p={p} T={template:?}: {got:?} != idft {reference:?}"
                );
                for (j, &v) in got.iter().enumerate() {
                    if j % stride != 0 {
                        ensure!(v == 0, "q={q} p={p} T={template:?}: nonzero at {j}");
                    } else {
                        let s = template.iter().enumerate().fold(0, |acc, (s, &t)| {
                            zp.add(acc, zp.mul(t, zp.alpha_neg((s * j) as u64)))
                        });
                        ensure!(
                            v == zp.mul(p_inv, s),
                            "q={q} p={p} T={template:?}: closed form at {j}"
                        );
                    }
                }
                total += 1;
            }
        }
    }
    Ok(format!(
        "{total} templates over GF(5), GF(7), every divisor p"
    ))
}

fn criterion_5() -> Outcome {
    let fields: Vec<(FieldCtx, Option<Zp>)> = vec![
        (FieldCtx::prime(5).unwrap(), Some(Zp::new(5))),
        (FieldCtx::prime(7).unwrap(), Some(Zp::new(7))),
        (FieldCtx::prime(11).unwrap(), Some(Zp::new(11))),
        (FieldCtx::prime(13).unwrap(), Some(Zp::new(13))),
        (FieldCtx::new(2, 3, None).unwrap(), None),
        (FieldCtx::new(2, 4, None).unwrap(), None),
        (FieldCtx::new(3, 2, None).unwrap(), None),
        (FieldCtx::new(2, 6, None).unwrap(), None),
    ];
    let mut cases = 0;
    for (f, zp) in &fields {
        let n = f.n();
        for p in (1..=n).filter(|p| n % p == 0) {
            let stride = n / p;
            let positions: Vec<usize> = (0..n).filter(|j| j % stride != 0).collect();
            let closed = periodic_v_poly(f, p).unwrap();
            let product = build_v_poly(f, &positions);
            let tag = format!("q={} p={p}", f.order());
            ensure!(closed == product, "{tag}: closed form != product over J");
            if let Some(zp) = zp {
                let reference = zp.v_poly(&positions);
                ensure!(
                    codes(closed.coeffs()) == reference,
                    "{tag}: != reference product"
                );
            }
            ensure!(closed.is_palindromic(), "{tag}: not palindromic");
            ensure!(closed.coeff(0) == Elem::ONE, "{tag}: constant term");
            for (i, c) in closed.coeffs().iter().enumerate() {
                ensure!(!c.is_zero() == (i % p == 0), "{tag}: coefficient {i}");
            }
            ensure!(closed.degree() == Some(n - p), "{tag}: degree");
            cases += 1;
        }
    }
    Ok(format!("{cases} (q, p) pairs"))
}

fn criterion_6(log: &CompressionLog) -> Outcome {
    ensure!(log.checked > 0, "no compressed decodes recorded");
    ensure!(
        log.failures.is_empty(),
        "{} of {} failed, first: {}",
        log.failures.len(),
        log.checked,
        log.failures[0]
    );
    Ok(format!(
        "{} compressed solves decompress to uncompressed kernel vectors",
        log.checked
    ))
}

fn criterion_7() -> Outcome {
    let grid = default_grid();
    let table = bench(&grid, 1, 7).map_err(|e| e.to_string())?;
    ensure!(table.rows.len() == grid.len(), "row count");
    let mut mismatches = Vec::new();
    for row in &table.rows {
        let (n, k, s, ell) = (row.n as i64, row.k as i64, row.s as i64, row.ell as i64);
        let per_point = s * (s + 1) / 2;
        let dnu = ref_dnu(n, k, s, ell);
        let unknowns: i64 = dnu.iter().filter(|&&d| d >= 0).map(|d| d + 1).sum();
        let sigma = match row.mode.as_str() {
            "plain" => 0,
            "reencode" => row.mode_param.split_whitespace().count() as i64,
            _ => n - row.mode_param.parse::<i64>().map_err(|e| e.to_string())?,
        };
        let expect_full = (n * per_point, unknowns);
        let expect = if row.mode == "plain" {
            expect_full
        } else {
            ((n - sigma) * per_point, unknowns - sigma * per_point)
        };
        let got_full = (row.full_rows as i64, row.full_cols as i64);
        let got = (row.rows as i64, row.cols as i64);
        let tag = format!(
            "{} k={} s={} ell={} {} {}",
            row.field, row.k, row.s, row.ell, row.mode, row.mode_param
        );
        if got_full != expect_full {
            mismatches.push(format!(
                "{tag}: uncompressed {got_full:?} != {expect_full:?}"
            ));
        }
        if got != expect {
            let dropped: Vec<i64> = (0..s as usize)
                .map(|b| dnu[b] - sigma * (s - b as i64))
                .collect();
            mismatches.push(format!(
                "{tag}: reported {got:?} != formula {expect:?} (W degree bounds {dropped:?})"
            ));
        }
    }
    ensure!(mismatches.is_empty(), "{}", mismatches.join("; "));
    Ok(format!("{} grid rows match", table.rows.len()))
}

fn criterion_8() -> Outcome {
    let zp = Zp::new(5);
    let f = Arc::new(FieldCtx::prime(5).unwrap());
    let rs = RsCode::new(f.clone(), 2).unwrap();
    let vectors: Vec<Vec<u32>> = (0..625u32)
        .map(|i| (0..4).map(|d| i / 5u32.pow(d) % 5).collect())
        .collect();
    let pairs: Vec<Vec<usize>> = (0..4)
        .flat_map(|a| (a + 1..4).map(move |b| vec![a, b]))
        .collect();
    let mut checks = 0;
    for codes_v in &vectors {
        let v = TimeVector::from_codes(codes_v);
        for j in &pairs {
            let once = reencode(&rs, &v, j).unwrap().modified;
            let twice = reencode(&rs, &once, j).unwrap().modified;
            ensure!(once == twice, "REENC J={j:?} v={codes_v:?} not idempotent");
            ensure!(
                j.iter().all(|&i| once[i].is_zero()),
                "REENC J={j:?} v={codes_v:?} not zero on J"
            );
            checks += 1;
        }
    }
    for p in [1usize, 2, 4] {
        let m = projection_operator(&f, p).unwrap();
        ensure!(
            m.mul(&f, &m).unwrap() == m,
            "operator p={p} is not idempotent"
        );
        for codes_v in &vectors {
            let v = TimeVector::from_codes(codes_v);
            let once = project_periodic(&f, &v, p).unwrap();
            let twice = project_periodic(&f, &once, p).unwrap();
            ensure!(once == twice, "PER p={p} v={codes_v:?} not idempotent");
            let dense = m.mul_vec(&f, &v).unwrap();
            ensure!(
                dense == once.0,
                "PER p={p} v={codes_v:?}: operator != functional"
            );
            let spec = zp.dft(&codes_v.iter().map(|&x| x as u64).collect::<Vec<_>>());
            let periodic: Vec<u64> = (0..4).map(|i| spec[4 - p + i % p]).collect();
            ensure!(
                codes(&once) == zp.idft(&periodic),
                "PER p={p} v={codes_v:?}: != reference"
            );
            checks += 1;
        }
    }
    Ok(format!("{checks} exhaustive checks over GF(5)^4"))
}

fn main() -> ExitCode {
    let mut log = CompressionLog::default();
    let results: Vec<(&str, Outcome)> = vec![
        ("1 exhaustive half-distance GF(5)", criterion_1(&mut log)),
        ("2 beyond half-distance GF(16)", criterion_2(&mut log)),
        ("3 multiplicity GF(7)", criterion_3(&mut log)),
        ("4 periodic spectrum closed form", criterion_4()),
        ("5 periodic V(x) structure", criterion_5()),
        ("6 compression kernel oracle", criterion_6(&log)),
        ("7 system size counts", criterion_7()),
        ("8 idempotence and projection operator", criterion_8()),
    ];
    let mut failed = 0;
    for (name, outcome) in &results {
        match outcome {
            Ok(detail) => println!("PASS  criterion {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  criterion {name}: {detail}");
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        results.len() - failed,
        results.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
