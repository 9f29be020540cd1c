//! Dense polynomials over the prime fields Z_p.
//!
//! Coefficients are stored ascending from the constant term with trailing
//! zeros stripped, so the zero polynomial has an empty coefficient vector and
//! no degree. The text format is sparse descending with an explicit
//! characteristic, e.g. `x^2+x+1 (mod 2)`; the interchange form is the full
//! coefficient vector `[c0, c1, ..., cn]`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::arith::{ext_gcd, factorize, is_prime};
use crate::error::{Error, Result};

/// Exponents above this are rejected by the parser; nothing desk-scale needs
/// millions of coefficients.
const MAX_PARSE_EXPONENT: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PrimePoly {
    p: u64,
    coeffs: Vec<u64>,
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let (g, x, _) = ext_gcd(a as i128, p as i128);
    debug_assert_eq!(g, 1);
    x.rem_euclid(p as i128) as u64
}

impl PrimePoly {
    /// Builds a polynomial over Z_p, validating that p is prime; the
    /// coefficients are reduced mod p and trailing zeros stripped.
    pub fn new(p: u64, coeffs: &[u64]) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Self::raw(p, coeffs.iter().map(|&c| c % p).collect()))
    }

    /// Internal constructor for coefficients that are already reduced.
    fn raw(p: u64, mut coeffs: Vec<u64>) -> Self {
        debug_assert!(coeffs.iter().all(|&c| c < p));
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { p, coeffs }
    }

    pub fn zero(p: u64) -> Result<Self> {
        Self::new(p, &[])
    }

    pub fn one(p: u64) -> Result<Self> {
        Self::new(p, &[1])
    }

    /// The monomial `x`.
    pub fn x(p: u64) -> Result<Self> {
        Self::new(p, &[0, 1])
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    /// Coefficients ascending from the constant term, trailing zeros
    /// stripped. Empty for the zero polynomial.
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// Interchange form `[c0, c1, ..., cn]`; the zero polynomial is `[0]`.
    pub fn coeff_vector(&self) -> Vec<u64> {
        if self.coeffs.is_empty() {
            vec![0]
        } else {
            self.coeffs.clone()
        }
    }

    fn check_char(&self, rhs: &Self) -> Result<()> {
        if self.p == rhs.p {
            Ok(())
        } else {
            Err(Error::CharacteristicMismatch {
                left: self.p,
                right: rhs.p,
            })
        }
    }

    pub fn scale(&self, c: u64) -> Self {
        let c = c % self.p;
        Self::raw(
            self.p,
            self.coeffs
                .iter()
                .map(|&a| (a as u128 * c as u128 % self.p as u128) as u64)
                .collect(),
        )
    }

    /// Euclidean division: returns `(q, r)` with `self = q*rhs + r` and
    /// `deg r < deg rhs`.
    pub fn divrem(&self, rhs: &Self) -> Result<(Self, Self)> {
        self.check_char(rhs)?;
        let d = rhs.degree().ok_or(Error::ZeroPolyDivision)?;
        let p = self.p as u128;
        let mut r = self.coeffs.clone();
        if r.len() < rhs.coeffs.len() {
            return Ok((Self::raw(self.p, Vec::new()), self.clone()));
        }
        let inv_lead = inv_mod(rhs.coeffs[d], self.p) as u128;
        let mut q = vec![0u64; r.len() - d];
        for k in (0..q.len()).rev() {
            let c = (r[k + d] as u128 * inv_lead % p) as u64;
            q[k] = c;
            if c == 0 {
                continue;
            }
            for (i, &b) in rhs.coeffs.iter().enumerate() {
                let sub = c as u128 * b as u128 % p;
                r[k + i] = ((r[k + i] as u128 + p - sub) % p) as u64;
            }
        }
        Ok((Self::raw(self.p, q), Self::raw(self.p, r)))
    }

    pub fn rem(&self, rhs: &Self) -> Result<Self> {
        Ok(self.divrem(rhs)?.1)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, rhs: &Self) -> Result<Self> {
        self.check_char(rhs)?;
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        if let Some(d) = a.degree() {
            let lead = a.coeffs[d];
            if lead != 1 {
                a = a.scale(inv_mod(lead, self.p));
            }
        }
        Ok(a)
    }

    /// `self^e mod modulus` by square and multiply. The modulus must have
    /// degree at least 1.
    pub fn pow_mod(&self, e: u128, modulus: &Self) -> Result<Self> {
        self.check_char(modulus)?;
        match modulus.degree() {
            None => return Err(Error::ZeroPolyDivision),
            Some(0) => return Err(Error::ConstantModulus),
            Some(_) => {}
        }
        let mut base = self.rem(modulus)?;
        let mut acc = Self::one(self.p)?.rem(modulus)?;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = (&acc * &base).rem(modulus)?;
            }
            base = (&base * &base).rem(modulus)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// The chain `x, x^p, x^(p^2), ..., x^(p^d) (mod f)`, all reduced mod f.
    fn frobenius_iterates(f: &Self) -> Result<Vec<Self>> {
        let d = match f.degree() {
            None => return Err(Error::ZeroPolyDivision),
            Some(0) => return Err(Error::ConstantModulus),
            Some(d) => d,
        };
        let mut out = Vec::with_capacity(d + 1);
        out.push(Self::x(f.p)?.rem(f)?);
        for k in 1..=d {
            let next = out[k - 1].pow_mod(f.p as u128, f)?;
            out.push(next);
        }
        Ok(out)
    }

    /// Rabin's irreducibility test: f of degree d is irreducible over Z_p
    /// exactly when `x^(p^d) = x (mod f)` and, for every prime l dividing d,
    /// `gcd(x^(p^(d/l)) - x, f) = 1`.
    pub fn is_irreducible(&self) -> Result<bool> {
        let d = match self.degree() {
            None | Some(0) => {
                return Err(Error::InvalidArgument(
                    "irreducibility is undefined for constant polynomials".into(),
                ))
            }
            Some(d) => d,
        };
        if d == 1 {
            return Ok(true);
        }
        let iterates = Self::frobenius_iterates(self)?;
        if iterates[d] != iterates[0] {
            return Ok(false);
        }
        for (l, _) in factorize(d as u64) {
            let diff = &iterates[d / l as usize] - &iterates[0];
            let g = diff.gcd(self)?;
            if g.degree() != Some(0) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Smallest monic irreducible of degree n over Z_p, where candidates are
    /// ordered by their coefficient vector read from the constant term
    /// upward.
    pub fn find_irreducible(p: u64, n: usize) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if n == 0 {
            return Err(Error::InvalidArgument(
                "the degree must be at least 1".into(),
            ));
        }
        let mut lower = vec![0u64; n];
        if n >= 2 {
            // a zero constant term means divisibility by x, so the whole
            // block below (1, 0, ..., 0) can never contain an irreducible
            lower[0] = 1;
        }
        loop {
            let mut coeffs = lower.clone();
            coeffs.push(1);
            let f = Self::raw(p, coeffs);
            if f.is_irreducible()? {
                return Ok(f);
            }
            // Advance the odometer; the last coordinate moves fastest so the
            // constant term is the most significant position.
            let mut i = n;
            loop {
                if i == 0 {
                    return Err(Error::Internal(format!(
                        "no monic irreducible of degree {n} over Z_{p}"
                    )));
                }
                i -= 1;
                lower[i] += 1;
                if lower[i] < p {
                    break;
                }
                lower[i] = 0;
            }
        }
    }

    /// Parses the text format; the `(mod p)` suffix is required here.
    pub fn parse(s: &str) -> Result<Self> {
        let (body, char_part) = split_mod_suffix(s)?;
        let p = char_part.ok_or_else(|| {
            Error::Parse(format!("missing characteristic suffix `(mod p)` in {s:?}"))
        })?;
        Self::parse_body(body, p)
    }

    /// Parses the text format against a known characteristic; a `(mod q)`
    /// suffix is optional but must agree with `p` when present.
    pub fn parse_with_char(s: &str, p: u64) -> Result<Self> {
        let (body, char_part) = split_mod_suffix(s)?;
        if let Some(q) = char_part {
            if q != p {
                return Err(Error::CharacteristicMismatch { left: q, right: p });
            }
        }
        Self::parse_body(body, p)
    }

    fn parse_body(body: &str, p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let compact: String = body.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut coeffs: Vec<u64> = Vec::new();
        let mut rest = compact.as_str();
        let mut negative = match rest.strip_prefix('-') {
            Some(r) => {
                rest = r;
                true
            }
            None => false,
        };
        while !rest.is_empty() {
            let split = rest.find(['+', '-']).unwrap_or(rest.len());
            let (term, tail) = rest.split_at(split);
            let (mut c, e) = parse_term(term, p)?;
            if negative {
                c = (p - c) % p;
            }
            if e > MAX_PARSE_EXPONENT {
                return Err(Error::Parse(format!("exponent {e} is too large")));
            }
            let e = e as usize;
            if coeffs.len() <= e {
                coeffs.resize(e + 1, 0);
            }
            coeffs[e] = ((coeffs[e] as u128 + c as u128) % p as u128) as u64;
            match tail.chars().next() {
                None => break,
                Some(sign) => {
                    negative = sign == '-';
                    rest = &tail[1..];
                    if rest.is_empty() {
                        return Err(Error::Parse("trailing sign without a term".into()));
                    }
                }
            }
        }
        Ok(Self::raw(p, coeffs))
    }
}

fn parse_term(term: &str, p: u64) -> Result<(u64, u64)> {
    if term.is_empty() {
        return Err(Error::Parse("empty term".into()));
    }
    let parse_int = |s: &str| -> Result<u64> {
        s.parse::<u64>()
            .map_err(|_| Error::Parse(format!("bad integer {s:?}")))
    };
    match term.find('x') {
        None => Ok((parse_int(term)? % p, 0)),
        Some(i) => {
            let coef_part = &term[..i];
            let var_part = &term[i + 1..];
            let c = if coef_part.is_empty() {
                1
            } else {
                parse_int(coef_part.strip_suffix('*').unwrap_or(coef_part))? % p
            };
            let e = match var_part.strip_prefix('^') {
                Some(exp) => parse_int(exp)?,
                None if var_part.is_empty() => 1,
                None => return Err(Error::Parse(format!("bad term {term:?}"))),
            };
            Ok((c, e))
        }
    }
}

/// Splits `"... (mod p)"` into the polynomial body and the parsed
/// characteristic, if the suffix is present.
fn split_mod_suffix(s: &str) -> Result<(&str, Option<u64>)> {
    let trimmed = s.trim_end();
    match trimmed.rfind("(mod") {
        None => Ok((s, None)),
        Some(i) => {
            let inner = trimmed[i + 4..]
                .trim_end()
                .strip_suffix(')')
                .ok_or_else(|| Error::Parse(format!("unterminated (mod ...) in {s:?}")))?;
            let p = inner
                .trim()
                .parse::<u64>()
                .map_err(|_| Error::Parse(format!("bad characteristic in {s:?}")))?;
            Ok((&trimmed[..i], Some(p)))
        }
    }
}

/// Writes coefficients (ascending order) in sparse descending text form,
/// without any characteristic suffix. Shared with field elements.
pub(crate) fn write_terms(coeffs: &[u64], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let mut first = true;
    for (e, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        if !first {
            write!(f, "+")?;
        }
        first = false;
        match e {
            0 => write!(f, "{c}")?,
            _ => {
                if c != 1 {
                    write!(f, "{c}")?;
                }
                if e == 1 {
                    write!(f, "x")?;
                } else {
                    write!(f, "x^{e}")?;
                }
            }
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for PrimePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(&self.coeffs, f)?;
        write!(f, " (mod {})", self.p)
    }
}

impl Add for &PrimePoly {
    type Output = PrimePoly;
    fn add(self, rhs: &PrimePoly) -> PrimePoly {
        self.check_char(rhs).expect("mixed characteristics in +");
        let p = self.p;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| (self.coeff(i) + rhs.coeff(i)) % p).collect();
        PrimePoly::raw(p, coeffs)
    }
}

impl Sub for &PrimePoly {
    type Output = PrimePoly;
    fn sub(self, rhs: &PrimePoly) -> PrimePoly {
        self.check_char(rhs).expect("mixed characteristics in -");
        let p = self.p;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| ((self.coeff(i) + p) - rhs.coeff(i)) % p)
            .collect();
        PrimePoly::raw(p, coeffs)
    }
}

impl Neg for &PrimePoly {
    type Output = PrimePoly;
    fn neg(self) -> PrimePoly {
        let p = self.p;
        PrimePoly::raw(p, self.coeffs.iter().map(|&c| (p - c) % p).collect())
    }
}

impl Mul for &PrimePoly {
    type Output = PrimePoly;
    fn mul(self, rhs: &PrimePoly) -> PrimePoly {
        self.check_char(rhs).expect("mixed characteristics in *");
        if self.is_zero() || rhs.is_zero() {
            return PrimePoly::raw(self.p, Vec::new());
        }
        let p = self.p as u128;
        let mut acc = vec![0u128; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                acc[i + j] = (acc[i + j] + a as u128 * b as u128) % p;
            }
        }
        PrimePoly::raw(self.p, acc.into_iter().map(|c| c as u64).collect())
    }
}
