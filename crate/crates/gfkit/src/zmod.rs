//! Arithmetic in Z/nZ: residues, the Chinese remainder theorem, and the
//! structure of the unit groups U(n).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigUint;

use crate::arith::{self, divisors, ext_gcd, factorize, gcd, mul_mod, pow_mod, MAX_MODULUS};
use crate::error::{Error, Result};

/// A residue `value` modulo `modulus`, kept reduced: `0 <= value < modulus`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ZmodElement {
    value: u64,
    modulus: u64,
}

impl ZmodElement {
    /// Reduces `value` into the range `[0, modulus)`. The modulus must lie in
    /// `2..=2^63`.
    pub fn new(value: u64, modulus: u64) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::InvalidArgument(format!(
                "modulus must be at least 2, got {modulus}"
            )));
        }
        if modulus > MAX_MODULUS {
            return Err(Error::Overflow(format!("modulus {modulus} exceeds 2^63")));
        }
        Ok(Self {
            value: value % modulus,
            modulus,
        })
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn is_unit(&self) -> bool {
        gcd(self.value, self.modulus) == 1
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = *self;
        let mut acc = Self {
            value: 1 % self.modulus,
            modulus: self.modulus,
        };
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via extended Euclid.
    pub fn inv(&self) -> Result<Self> {
        let (g, x, _) = ext_gcd(self.value as i128, self.modulus as i128);
        if g != 1 {
            return Err(Error::NotUnit {
                value: self.value,
                modulus: self.modulus,
            });
        }
        let m = self.modulus as i128;
        Ok(Self {
            value: (x.rem_euclid(m)) as u64,
            modulus: self.modulus,
        })
    }

    fn check_same_modulus(&self, rhs: &Self) {
        assert_eq!(
            self.modulus, rhs.modulus,
            "mixed moduli {} and {}",
            self.modulus, rhs.modulus
        );
    }
}

impl Add for ZmodElement {
    type Output = ZmodElement;
    fn add(self, rhs: ZmodElement) -> ZmodElement {
        self.check_same_modulus(&rhs);
        let m = self.modulus as u128;
        ZmodElement {
            value: ((self.value as u128 + rhs.value as u128) % m) as u64,
            modulus: self.modulus,
        }
    }
}

impl Sub for ZmodElement {
    type Output = ZmodElement;
    fn sub(self, rhs: ZmodElement) -> ZmodElement {
        self.check_same_modulus(&rhs);
        ZmodElement {
            value: if self.value >= rhs.value {
                self.value - rhs.value
            } else {
                self.modulus - (rhs.value - self.value)
            },
            modulus: self.modulus,
        }
    }
}

impl Mul for ZmodElement {
    type Output = ZmodElement;
    fn mul(self, rhs: ZmodElement) -> ZmodElement {
        self.check_same_modulus(&rhs);
        ZmodElement {
            value: mul_mod(self.value, rhs.value, self.modulus),
            modulus: self.modulus,
        }
    }
}

impl Neg for ZmodElement {
    type Output = ZmodElement;
    fn neg(self) -> ZmodElement {
        ZmodElement {
            value: if self.value == 0 {
                0
            } else {
                self.modulus - self.value
            },
            modulus: self.modulus,
        }
    }
}

impl fmt::Display for ZmodElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.value, self.modulus)
    }
}

/// A system of congruences `x = r_i (mod m_i)` with pairwise coprime moduli.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrtSystem {
    congruences: Vec<(u64, u64)>,
}

impl CrtSystem {
    /// Validates moduli (each in `2..=2^63`, pairwise coprime) and reduces the
    /// residues. A failing pair is reported by value.
    pub fn new(congruences: &[(u64, u64)]) -> Result<Self> {
        if congruences.is_empty() {
            return Err(Error::InvalidArgument("empty congruence system".into()));
        }
        let mut reduced = Vec::with_capacity(congruences.len());
        for &(r, m) in congruences {
            reduced.push((ZmodElement::new(r, m)?.value(), m));
        }
        for i in 0..reduced.len() {
            for j in i + 1..reduced.len() {
                let (a, b) = (reduced[i].1, reduced[j].1);
                if gcd(a, b) != 1 {
                    return Err(Error::NotCoprime { a, b });
                }
            }
        }
        Ok(Self {
            congruences: reduced,
        })
    }

    pub fn congruences(&self) -> &[(u64, u64)] {
        &self.congruences
    }
}

/// Solves the system: the unique `x mod (m_1 * ... * m_k)`.
///
/// Folds the congruences pairwise; the product of the moduli must stay within
/// `2^63` or the solve reports overflow.
pub fn crt_solve(system: &CrtSystem) -> Result<ZmodElement> {
    let (mut x, mut d) = system.congruences[0];
    for &(r, m) in &system.congruences[1..] {
        let next = d
            .checked_mul(m)
            .filter(|&v| v <= MAX_MODULUS)
            .ok_or_else(|| Error::Overflow("product of CRT moduli exceeds 2^63".into()))?;
        // x + d*t = r (mod m), solve for t; d is invertible mod m.
        let diff = ZmodElement::new(r, m)? - ZmodElement::new(x, m)?;
        let t = (ZmodElement::new(d, m)?.inv()? * diff).value();
        x += (d as u128 * t as u128) as u64;
        d = next;
    }
    ZmodElement::new(x, d)
}

/// Euler's totient via the prime factorization. `n = 0` is rejected.
pub fn totient(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::InvalidArgument("totient of 0 is undefined".into()));
    }
    let mut phi = 1u64;
    for (p, e) in factorize(n) {
        phi *= p.pow(e - 1) * (p - 1);
    }
    Ok(phi)
}

/// Multiplicative order of a unit: the least `t >= 1` with `a^t = 1`.
///
/// Starts from the totient and divides out prime factors while the power
/// stays 1, so the result is exact and divides `totient(modulus)`.
pub fn element_order(a: &ZmodElement) -> Result<u64> {
    if !a.is_unit() {
        return Err(Error::NotUnit {
            value: a.value,
            modulus: a.modulus,
        });
    }
    let mut t = totient(a.modulus)?;
    for (p, _) in factorize(t) {
        while t % p == 0 && pow_mod(a.value, t / p, a.modulus) == 1 {
            t /= p;
        }
    }
    Ok(t)
}

/// A finite abelian group presented as a product of cyclic factors.
///
/// Canonical form is the invariant-factor decomposition: each factor divides
/// the next, all factors are at least 2, and the trivial group is `[1]`.
/// In this form the largest factor equals the maximal element order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupStructure {
    factors: Vec<u64>,
}

impl GroupStructure {
    /// Canonicalizes an arbitrary product of cyclic groups of the given
    /// orders into invariant factors.
    pub fn from_cyclic_orders(orders: &[u64]) -> Self {
        assert!(orders.iter().all(|&d| d >= 1), "cyclic factor of order 0");
        // Primary decomposition: bucket prime power components per prime,
        // largest exponents first.
        let mut primary: Vec<(u64, Vec<u32>)> = Vec::new();
        for &d in orders {
            for (p, e) in factorize(d) {
                match primary.iter_mut().find(|(q, _)| *q == p) {
                    Some((_, exps)) => exps.push(e),
                    None => primary.push((p, vec![e])),
                }
            }
        }
        for (_, exps) in primary.iter_mut() {
            exps.sort_unstable_by(|a, b| b.cmp(a));
        }
        let count = primary
            .iter()
            .map(|(_, exps)| exps.len())
            .max()
            .unwrap_or(0);
        let mut factors = Vec::with_capacity(count);
        for i in 0..count {
            let mut f = 1u64;
            for (p, exps) in &primary {
                if let Some(&e) = exps.get(i) {
                    f *= p.pow(e);
                }
            }
            factors.push(f);
        }
        factors.reverse();
        if factors.is_empty() {
            factors.push(1);
        }
        Self { factors }
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    /// Group order: the product of the factors.
    pub fn order(&self) -> u64 {
        self.factors
            .iter()
            .try_fold(1u64, |acc, &f| acc.checked_mul(f))
            .expect("group order overflows u64")
    }

    /// Largest element order. Equals the last invariant factor.
    pub fn max_order(&self) -> u64 {
        let lcm = self
            .factors
            .iter()
            .try_fold(1u64, |acc, &f| arith::lcm(acc, f))
            .expect("element order overflows u64");
        debug_assert_eq!(lcm, *self.factors.last().unwrap());
        lcm
    }

    /// A product of cyclic groups is cyclic exactly when the factor orders
    /// are pairwise coprime.
    pub fn is_cyclic(&self) -> bool {
        for i in 0..self.factors.len() {
            for j in i + 1..self.factors.len() {
                if gcd(self.factors[i], self.factors[j]) != 1 {
                    return false;
                }
            }
        }
        true
    }

    /// How many elements of each multiplicative order the group has,
    /// as an `order -> count` map.
    pub fn element_order_multiset(&self) -> std::collections::BTreeMap<u64, u64> {
        let mut acc = std::collections::BTreeMap::from([(1u64, 1u64)]);
        for &f in &self.factors {
            let mut next = std::collections::BTreeMap::new();
            for d in divisors(f) {
                // Z_f has totient(d) elements of order d.
                let count = totient(d).expect("divisor is positive");
                for (&o, &c) in &acc {
                    let merged = arith::lcm(o, d).expect("order overflow");
                    *next.entry(merged).or_insert(0) += c * count;
                }
            }
            acc = next;
        }
        acc
    }
}

impl fmt::Display for GroupStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|d| format!("Z{d}")).collect();
        write!(f, "{}", parts.join(" x "))
    }
}

/// Structure of the unit group U(n), for n >= 2.
///
/// Per odd prime power p^m the contribution is cyclic of order
/// p^(m-1)*(p-1); the powers of two contribute nothing for 2, Z2 for 4, and
/// Z2 x Z_2^(m-2) for m >= 3. The pieces are combined across the
/// factorization of n and canonicalized.
pub fn unit_group_structure(n: u64) -> Result<GroupStructure> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "U({n}) is not defined here; the modulus must be at least 2"
        )));
    }
    if n > MAX_MODULUS {
        return Err(Error::Overflow(format!("modulus {n} exceeds 2^63")));
    }
    let mut orders = Vec::new();
    for (p, e) in factorize(n) {
        if p == 2 {
            match e {
                1 => {}
                2 => orders.push(2),
                _ => {
                    orders.push(2);
                    orders.push(1u64 << (e - 2));
                }
            }
        } else {
            orders.push(p.pow(e - 1) * (p - 1));
        }
    }
    Ok(GroupStructure::from_cyclic_orders(&orders))
}

/// Smallest generator of U(n) when U(n) is cyclic, i.e. for n in {2, 4},
/// odd prime powers, and twice odd prime powers.
///
/// Candidates are scanned upward from 2; a unit generates exactly when no
/// power `a^(phi/l)` collapses to 1 for a prime `l` dividing phi.
pub fn find_unit_generator(n: u64) -> Result<ZmodElement> {
    let structure = unit_group_structure(n)?;
    if !structure.is_cyclic() {
        return Err(Error::UnitsNotCyclic(n));
    }
    if n == 2 {
        return ZmodElement::new(1, 2);
    }
    let phi = totient(n)?;
    let prime_parts: Vec<u64> = factorize(phi).into_iter().map(|(p, _)| p).collect();
    for a in 2..n {
        if gcd(a, n) != 1 {
            continue;
        }
        if prime_parts.iter().all(|&l| pow_mod(a, phi / l, n) != 1) {
            return ZmodElement::new(a, n);
        }
    }
    Err(Error::Internal(format!(
        "no generator found for the cyclic group U({n})"
    )))
}

/// Whether `a^s - 1` divides `a^t - 1`, for `a >= 2`, `s >= 1`, `t >= 0`.
///
/// Uses the reduction `a^t = a^(t mod s) (mod a^s - 1)`: the remainder
/// `a^(t mod s) - 1` is computed in arbitrary precision and tested against
/// the modulus directly, so `a^t` itself is never formed.
pub fn power_divisibility(a: u64, s: u32, t: u32) -> Result<bool> {
    if a < 2 {
        return Err(Error::InvalidArgument(format!(
            "base must be at least 2, got {a}"
        )));
    }
    if s == 0 {
        return Err(Error::InvalidArgument("exponent s must be positive".into()));
    }
    let one = BigUint::from(1u8);
    let modulus = BigUint::from(a).pow(s) - &one;
    let rem = BigUint::from(a).modpow(&BigUint::from(t % s), &modulus);
    Ok(rem == &one % &modulus)
}
