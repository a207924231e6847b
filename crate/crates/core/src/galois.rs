//! Arithmetic in GF(q) for prime powers q.
//!
//! Elements are identified by an integer code in `[0, q)`. For prime fields the
//! code is the residue itself. For extension fields GF(p^m) the code is the
//! base-p positional encoding of the polynomial representative modulo the
//! field modulus, with the coefficient of `x^i` at digit `i`. Multiplication
//! runs through exp/log tables built from the smallest primitive element.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported field order.
pub const MAX_FIELD_ORDER: u64 = 1 << 20;

/// An element of some GF(q), stored as its integer code.
///
/// An `Elem` carries no reference to its field; all arithmetic goes through
/// [`FieldCtx`].
#[derive(
    Copy, Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
#[serde(transparent)]
pub struct Elem(u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    /// Wraps a raw code without range checking. Use [`FieldCtx::elem`] for
    /// untrusted input.
    pub const fn from_code(code: u32) -> Self {
        Elem(code)
    }

    pub const fn code(self) -> u32 {
        self.0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Binary (and unary, via [`FieldCtx::inv`]/[`FieldCtx::pow`]) field operations.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// A finite field GF(q) with a fixed primitive element and its exp/log tables.
///
/// Immutable after construction.
#[derive(Clone, Debug)]
pub struct FieldCtx {
    characteristic: u32,
    degree: u32,
    q: u32,
    modulus: Vec<u32>,
    alpha: Elem,
    exp: Vec<Elem>,
    log: Vec<u32>,
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.characteristic == other.characteristic
            && self.degree == other.degree
            && self.modulus == other.modulus
    }
}

impl Eq for FieldCtx {}

impl FieldCtx {
    /// Builds GF(characteristic^degree).
    ///
    /// When `degree > 1` and no modulus is given, a fixed default irreducible
    /// polynomial is used (see [`default_modulus`]). The modulus is given as
    /// coefficients low-to-high and must be monic of degree `degree`.
    pub fn new(characteristic: u64, degree: u32, modulus: Option<&[u32]>) -> Result<Self> {
        if !is_prime(characteristic) {
            return Err(Error::NotPrime(characteristic));
        }
        if degree == 0 {
            return Err(Error::ZeroExtension);
        }
        let q = checked_order(characteristic, degree)?;
        let p = characteristic as u32;

        let modulus = if degree == 1 {
            match modulus {
                None | Some([]) => Vec::new(),
                Some(m) => {
                    return Err(Error::InvalidModulus(format!(
                        "prime fields take no modulus, got {m:?}"
                    )))
                }
            }
        } else {
            let m = match modulus {
                Some(m) => m.to_vec(),
                None => default_modulus(p, degree),
            };
            validate_modulus(p, degree, &m)?;
            m
        };

        let mut ctx = FieldCtx {
            characteristic: p,
            degree,
            q,
            modulus,
            alpha: Elem::ONE,
            exp: Vec::new(),
            log: Vec::new(),
        };
        ctx.alpha = ctx.find_primitive()?;
        ctx.build_tables();
        Ok(ctx)
    }

    /// Convenience constructor for a prime field GF(p).
    pub fn prime(p: u64) -> Result<Self> {
        Self::new(p, 1, None)
    }

    pub fn characteristic(&self) -> u32 {
        self.characteristic
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Field order q.
    pub fn order(&self) -> u32 {
        self.q
    }

    /// Multiplicative group order n = q - 1, which is also the code length.
    pub fn n(&self) -> usize {
        (self.q - 1) as usize
    }

    /// Modulus coefficients low-to-high; empty for prime fields.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn alpha(&self) -> Elem {
        self.alpha
    }

    /// `exp_table()[i] = alpha^i` for `i < n`.
    pub fn exp_table(&self) -> &[Elem] {
        &self.exp
    }

    /// Checked conversion from an integer code.
    pub fn elem(&self, code: u64) -> Result<Elem> {
        if code < self.q as u64 {
            Ok(Elem(code as u32))
        } else {
            Err(Error::ElementOutOfRange { code, q: self.q })
        }
    }

    /// Checked conversion of a whole code sequence.
    pub fn elems(&self, codes: &[u64]) -> Result<Vec<Elem>> {
        codes.iter().map(|&c| self.elem(c)).collect()
    }

    /// All field elements in ascending code order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.q).map(Elem)
    }

    /// The image of an integer in the prime subfield.
    pub fn from_int(&self, value: i64) -> Elem {
        Elem(value.rem_euclid(self.characteristic as i64) as u32)
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if self.degree == 1 {
            let s = a.0 + b.0;
            return Elem(if s >= self.q { s - self.q } else { s });
        }
        if self.characteristic == 2 {
            return Elem(a.0 ^ b.0);
        }
        let p = self.characteristic;
        let (mut x, mut y) = (a.0, b.0);
        let (mut out, mut place) = (0u32, 1u32);
        while x > 0 || y > 0 {
            out += ((x % p + y % p) % p) * place;
            x /= p;
            y /= p;
            place *= p;
        }
        Elem(out)
    }

    pub fn neg(&self, a: Elem) -> Elem {
        if a.is_zero() || self.characteristic == 2 {
            return a;
        }
        if self.degree == 1 {
            return Elem(self.q - a.0);
        }
        let p = self.characteristic;
        let mut x = a.0;
        let (mut out, mut place) = (0u32, 1u32);
        while x > 0 {
            out += ((p - x % p) % p) * place;
            x /= p;
            place *= p;
        }
        Elem(out)
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.is_zero() || b.is_zero() {
            return Elem::ZERO;
        }
        let n = self.q - 1;
        let e = self.log[a.0 as usize] + self.log[b.0 as usize];
        self.exp[(if e >= n { e - n } else { e }) as usize]
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.q - 1;
        let l = self.log[a.0 as usize];
        Ok(self.exp[((n - l) % n) as usize])
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^e` for any integer exponent; negative exponents invert first.
    /// `0^0 = 1`, and `0^e` for `e < 0` is a division by zero.
    pub fn pow(&self, a: Elem, e: i64) -> Result<Elem> {
        if e == 0 {
            return Ok(Elem::ONE);
        }
        if a.is_zero() {
            return if e > 0 {
                Ok(Elem::ZERO)
            } else {
                Err(Error::DivisionByZero)
            };
        }
        let n = (self.q - 1) as i64;
        let l = self.log[a.0 as usize] as i64;
        Ok(self.exp[((l * e.rem_euclid(n)) % n) as usize])
    }

    /// Applies a binary operation.
    pub fn arith(&self, a: Elem, b: Elem, op: ArithOp) -> Result<Elem> {
        match op {
            ArithOp::Add => Ok(self.add(a, b)),
            ArithOp::Sub => Ok(self.sub(a, b)),
            ArithOp::Mul => Ok(self.mul(a, b)),
            ArithOp::Div => self.div(a, b),
        }
    }

    /// `alpha^e`, exponent taken mod n.
    pub fn exp(&self, e: i64) -> Elem {
        self.exp[e.rem_euclid((self.q - 1) as i64) as usize]
    }

    /// Discrete logarithm to base alpha; `None` for zero.
    pub fn log(&self, a: Elem) -> Option<u32> {
        if a.is_zero() {
            None
        } else {
            Some(self.log[a.0 as usize])
        }
    }

    /// Sum of a sequence of elements.
    pub fn sum<I: IntoIterator<Item = Elem>>(&self, iter: I) -> Elem {
        iter.into_iter().fold(Elem::ZERO, |acc, x| self.add(acc, x))
    }

    /// Multiplication by polynomial arithmetic under the modulus, used only
    /// before the tables exist.
    fn slow_mul(&self, a: u32, b: u32) -> u32 {
        let p = self.characteristic as u64;
        if self.degree == 1 {
            return ((a as u64 * b as u64) % p) as u32;
        }
        let m = self.degree as usize;
        let da = to_digits(a, self.characteristic, m);
        let db = to_digits(b, self.characteristic, m);
        let mut prod = vec![0u64; 2 * m - 1];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        // reduce with the monic modulus
        for top in (m..prod.len()).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            for (i, &mc) in self.modulus[..m].iter().enumerate() {
                let idx = top - m + i;
                prod[idx] = (prod[idx] + (p - c) * mc as u64 % p) % p;
            }
            prod[top] = 0;
        }
        from_digits(&prod[..m], self.characteristic)
    }

    fn slow_pow(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a;
        let mut acc = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.slow_mul(acc, base);
            }
            base = self.slow_mul(base, base);
            e >>= 1;
        }
        acc
    }

    fn find_primitive(&self) -> Result<Elem> {
        let n = (self.q - 1) as u64;
        let factors = prime_factors(n);
        for code in 1..self.q {
            if self.slow_pow(code, n) != 1 {
                continue;
            }
            if factors.iter().all(|&r| self.slow_pow(code, n / r) != 1) {
                return Ok(Elem(code));
            }
        }
        Err(Error::Internal("no primitive element found".into()))
    }

    fn build_tables(&mut self) {
        let n = (self.q - 1) as usize;
        let mut exp = Vec::with_capacity(n);
        let mut log = vec![u32::MAX; self.q as usize];
        let mut cur = 1u32;
        for i in 0..n {
            exp.push(Elem(cur));
            log[cur as usize] = i as u32;
            cur = self.slow_mul(cur, self.alpha.0);
        }
        self.exp = exp;
        self.log = log;
    }
}

fn checked_order(p: u64, m: u32) -> Result<u32> {
    let mut q: u64 = 1;
    for _ in 0..m {
        q = q.saturating_mul(p);
        if q > MAX_FIELD_ORDER {
            return Err(Error::FieldTooLarge {
                characteristic: p,
                degree: m,
            });
        }
    }
    Ok(q as u32)
}

fn to_digits(mut code: u32, p: u32, m: usize) -> Vec<u32> {
    let mut d = vec![0; m];
    for slot in d.iter_mut() {
        *slot = code % p;
        code /= p;
    }
    d
}

fn from_digits(digits: &[u64], p: u32) -> u32 {
    digits.iter().rev().fold(0u32, |acc, &d| acc * p + d as u32)
}

pub(crate) fn is_prime(x: u64) -> bool {
    if x < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= x {
        if x.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn prime_factors(mut x: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= x {
        if x.is_multiple_of(d) {
            out.push(d);
            while x.is_multiple_of(d) {
                x /= d;
            }
        }
        d += 1;
    }
    if x > 1 {
        out.push(x);
    }
    out
}

/// Primitive polynomials for GF(2^m), m = 2..=20, as coefficient-one exponents
/// other than the leading term.
const BINARY_MODULI: [&[u32]; 19] = [
    &[0, 1],
    &[0, 1],
    &[0, 1],
    &[0, 2],
    &[0, 1],
    &[0, 1],
    &[0, 2, 3, 4],
    &[0, 4],
    &[0, 3],
    &[0, 2],
    &[0, 1, 4, 6],
    &[0, 1, 3, 4],
    &[0, 1, 6, 10],
    &[0, 1],
    &[0, 1, 3, 12],
    &[0, 3],
    &[0, 7],
    &[0, 1, 2, 5],
    &[0, 3],
];

/// The default modulus for GF(p^m), coefficients low-to-high.
///
/// Binary fields use the standard primitive polynomial table (x^4+x+1 for
/// GF(16), x^8+x^4+x^3+x^2+1 for GF(256), ...). Odd characteristics use the
/// smallest monic irreducible polynomial when coefficient sequences are read
/// as base-p integers, low coefficient least significant.
pub fn default_modulus(p: u32, m: u32) -> Vec<u32> {
    let m_us = m as usize;
    if p == 2 && (2..=20).contains(&m) {
        let mut coeffs = vec![0u32; m_us + 1];
        coeffs[m_us] = 1;
        for &e in BINARY_MODULI[m_us - 2] {
            coeffs[e as usize] = 1;
        }
        return coeffs;
    }
    let q = (p as u64).pow(m);
    for code in 0..q {
        let mut coeffs: Vec<u32> = to_digits(code as u32, p, m_us);
        coeffs.push(1);
        if coeffs[0] != 0 && is_irreducible(p, &coeffs) {
            return coeffs;
        }
    }
    unreachable!("irreducible polynomials exist for every degree")
}

fn validate_modulus(p: u32, m: u32, modulus: &[u32]) -> Result<()> {
    if modulus.len() != m as usize + 1 {
        return Err(Error::InvalidModulus(format!(
            "expected {} coefficients for degree {m}, got {}",
            m + 1,
            modulus.len()
        )));
    }
    if let Some(&c) = modulus.iter().find(|&&c| c >= p) {
        return Err(Error::InvalidModulus(format!(
            "coefficient {c} not reduced mod {p}"
        )));
    }
    if modulus[m as usize] != 1 {
        return Err(Error::InvalidModulus("modulus must be monic".into()));
    }
    if !is_irreducible(p, modulus) {
        return Err(Error::InvalidModulus(format!(
            "{modulus:?} is reducible over GF({p})"
        )));
    }
    Ok(())
}

/// Trial division by every monic polynomial of degree 1..=deg/2.
fn is_irreducible(p: u32, f: &[u32]) -> bool {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for code in 0..count {
            let mut g = to_digits(code as u32, p, d);
            g.push(1);
            if poly_rem_is_zero(p, f, &g) {
                return false;
            }
        }
    }
    true
}

/// Whether the monic `g` divides `f` over GF(p).
fn poly_rem_is_zero(p: u32, f: &[u32], g: &[u32]) -> bool {
    let p64 = p as u64;
    let mut r: Vec<u64> = f.iter().map(|&c| c as u64).collect();
    let dg = g.len() - 1;
    for top in (dg..r.len()).rev() {
        let c = r[top];
        if c == 0 {
            continue;
        }
        for (i, &gc) in g.iter().enumerate() {
            let idx = top - dg + i;
            r[idx] = (r[idx] + (p64 - c) * gc as u64 % p64) % p64;
        }
    }
    r[..dg].iter().all(|&c| c == 0)
}

/// Parsed form of the field specification string
/// `q=<char>^<m>[,mod=<coefficients low-to-high>]`.
///
/// The `q=` prefix is optional and the order may also be written as a plain
/// prime power (`16` is read as `2^4`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldSpec {
    pub characteristic: u64,
    pub degree: u32,
    pub modulus: Option<Vec<u32>>,
}

impl FieldSpec {
    pub fn build(&self) -> Result<FieldCtx> {
        FieldCtx::new(self.characteristic, self.degree, self.modulus.as_deref())
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (order_part, mod_part) = match s.find(",mod=") {
            Some(i) => (&s[..i], Some(&s[i + 5..])),
            None => (s, None),
        };
        let order_part = order_part.strip_prefix("q=").unwrap_or(order_part).trim();
        let parse_int = |t: &str| -> Result<u64> {
            t.trim()
                .parse::<u64>()
                .map_err(|_| Error::Parse(format!("bad integer {t:?}")))
        };
        let (characteristic, degree) = match order_part.split_once('^') {
            Some((c, m)) => {
                let m = parse_int(m)?;
                (
                    parse_int(c)?,
                    u32::try_from(m).map_err(|_| Error::Parse("degree".into()))?,
                )
            }
            None => prime_power(parse_int(order_part)?)
                .ok_or_else(|| Error::Parse(format!("{order_part} is not a prime power")))?,
        };
        let modulus = match mod_part {
            Some(m) => Some(
                m.split(',')
                    .map(|t| {
                        t.trim()
                            .parse::<u32>()
                            .map_err(|_| Error::Parse(format!("bad coefficient {t:?}")))
                    })
                    .collect::<Result<Vec<_>>>()?,
            ),
            None => None,
        };
        Ok(FieldSpec {
            characteristic,
            degree,
            modulus,
        })
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree == 1 {
            write!(f, "q={}", self.characteristic)?;
        } else {
            write!(f, "q={}^{}", self.characteristic, self.degree)?;
        }
        if let Some(m) = &self.modulus {
            let parts: Vec<String> = m.iter().map(|c| c.to_string()).collect();
            write!(f, ",mod={}", parts.join(","))?;
        }
        Ok(())
    }
}

fn prime_power(q: u64) -> Option<(u64, u32)> {
    let factors = prime_factors(q);
    if factors.len() != 1 {
        return None;
    }
    let p = factors[0];
    let mut m = 0;
    let mut x = q;
    while x > 1 {
        x /= p;
        m += 1;
    }
    Some((p, m))
}
