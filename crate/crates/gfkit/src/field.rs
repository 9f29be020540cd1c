//! Concrete finite fields GF(p^n) = Z_p[x]/(f) and the structure theory
//! built on them: the Frobenius map and its fixed subfields, the subfield
//! lattice, multiplicative generators, minimal polynomials over a chosen
//! base subfield, isomorphisms between presentations, and roots of unity.
//!
//! A [`FieldSpec`] pins down one presentation (p, n, modulus). Elements are
//! coordinate vectors in the basis 1, x, ..., x^{n-1}. Every deterministic
//! scan (generators, roots, subfield enumeration) walks elements in
//! ascending coordinate order with the constant term compared first, so
//! results are reproducible across runs.
//!
//! Exhaustive scans and discrete logs refuse to run past the spec's scan
//! limit (default 2^20 elements) and report a capacity error instead.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock};

use crate::arith::{self, divisors, ext_gcd, factorize, gcd, MAX_MODULUS};
use crate::error::{Error, Result};
use crate::linalg::{RowSpace, ZpMatrix};
use crate::poly::{write_terms, PrimePoly};
use crate::zmod::GroupStructure;

/// Default ceiling for exhaustive element scans and discrete-log tables.
pub const DEFAULT_SCAN_LIMIT: u64 = 1 << 20;

struct Inner {
    p: u64,
    n: usize,
    modulus: PrimePoly,
    order: u64,
    scan_limit: u64,
    frob: OnceLock<ZpMatrix>,
    q1_factors: OnceLock<Vec<(u64, u32)>>,
}

impl Inner {
    /// Coefficient-level product reduced by the (monic) modulus.
    fn mul_raw(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let p = self.p as u128;
        let n = self.n;
        let mut buf = vec![0u128; 2 * n - 1];
        for i in 0..n {
            if a[i] == 0 {
                continue;
            }
            for j in 0..n {
                buf[i + j] = (buf[i + j] + a[i] as u128 * b[j] as u128) % p;
            }
        }
        let m = self.modulus.coeffs();
        for t in (n..2 * n - 1).rev() {
            let c = buf[t];
            buf[t] = 0;
            if c == 0 {
                continue;
            }
            for j in 0..n {
                if m[j] == 0 {
                    continue;
                }
                let sub = c * m[j] as u128 % p;
                buf[t - n + j] = (buf[t - n + j] + p - sub) % p;
            }
        }
        buf[..n].iter().map(|&v| v as u64).collect()
    }

    fn pow_raw(&self, base: &[u64], mut e: u128) -> Vec<u64> {
        let mut acc = vec![0u64; self.n];
        acc[0] = 1;
        let mut b = base.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_raw(&acc, &b);
            }
            e >>= 1;
            if e > 0 {
                b = self.mul_raw(&b, &b);
            }
        }
        acc
    }
}

/// One presentation of the field GF(p^n), as Z_p[x] modulo a certified
/// irreducible monic polynomial of degree n. Cheap to clone and share.
#[derive(Clone)]
pub struct FieldSpec {
    inner: Arc<Inner>,
}

impl FieldSpec {
    /// Builds GF(p^n). With no modulus given, the least irreducible monic
    /// polynomial of degree n (ascending coefficient order, constant term
    /// first) is used, so the construction is canonical.
    pub fn new(p: u64, n: usize, modulus: Option<PrimePoly>) -> Result<Self> {
        Self::with_scan_limit(p, n, modulus, DEFAULT_SCAN_LIMIT)
    }

    /// Same as [`FieldSpec::new`] with an explicit scan limit for the
    /// exhaustive operations.
    pub fn with_scan_limit(
        p: u64,
        n: usize,
        modulus: Option<PrimePoly>,
        scan_limit: u64,
    ) -> Result<Self> {
        if !arith::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if n == 0 {
            return Err(Error::InvalidArgument(
                "extension degree must be at least 1".into(),
            ));
        }
        let mut order = 1u64;
        for _ in 0..n {
            order = order
                .checked_mul(p)
                .filter(|&v| v <= MAX_MODULUS)
                .ok_or_else(|| Error::Overflow(format!("field order {p}^{n} exceeds 2^63")))?;
        }
        let modulus = match modulus {
            None => PrimePoly::find_irreducible(p, n)?,
            Some(m) => {
                if m.characteristic() != p {
                    return Err(Error::CharacteristicMismatch {
                        left: m.characteristic(),
                        right: p,
                    });
                }
                if m.degree() != Some(n) {
                    return Err(Error::InvalidArgument(format!(
                        "modulus must have degree {n}"
                    )));
                }
                if !m.is_monic() {
                    return Err(Error::InvalidArgument("modulus must be monic".into()));
                }
                if !m.is_irreducible()? {
                    let factor_degree = smallest_factor_degree(&m)?;
                    return Err(Error::ReducibleModulus { factor_degree });
                }
                m
            }
        };
        Ok(FieldSpec {
            inner: Arc::new(Inner {
                p,
                n,
                modulus,
                order,
                scan_limit,
                frob: OnceLock::new(),
                q1_factors: OnceLock::new(),
            }),
        })
    }

    pub fn p(&self) -> u64 {
        self.inner.p
    }

    /// Extension degree n over the prime field.
    pub fn degree(&self) -> usize {
        self.inner.n
    }

    pub fn modulus(&self) -> &PrimePoly {
        &self.inner.modulus
    }

    /// Field order q = p^n.
    pub fn order(&self) -> u64 {
        self.inner.order
    }

    pub fn scan_limit(&self) -> u64 {
        self.inner.scan_limit
    }

    /// Element from coordinates. Longer inputs are reduced modulo the
    /// field's modulus, so any polynomial in x denotes its residue class.
    pub fn element(&self, coeffs: &[u64]) -> FieldElement {
        let n = self.inner.n;
        let mut v = if coeffs.len() > n {
            let poly = PrimePoly::new(self.inner.p, coeffs).expect("characteristic is prime");
            let r = poly
                .rem(&self.inner.modulus)
                .expect("modulus is non-constant");
            r.coeffs().to_vec()
        } else {
            coeffs.iter().map(|&c| c % self.inner.p).collect()
        };
        v.resize(n, 0);
        FieldElement {
            spec: self.clone(),
            coeffs: v,
        }
    }

    pub fn from_poly(&self, f: &PrimePoly) -> Result<FieldElement> {
        if f.characteristic() != self.inner.p {
            return Err(Error::CharacteristicMismatch {
                left: f.characteristic(),
                right: self.inner.p,
            });
        }
        Ok(self.element(f.coeffs()))
    }

    /// Parses the polynomial text form, e.g. `"x+1"`; a `(mod p)` suffix is
    /// allowed and must match the characteristic.
    pub fn parse_element(&self, s: &str) -> Result<FieldElement> {
        let poly = PrimePoly::parse_with_char(s, self.inner.p)?;
        self.from_poly(&poly)
    }

    pub fn zero(&self) -> FieldElement {
        self.element(&[])
    }

    pub fn one(&self) -> FieldElement {
        self.element(&[1])
    }

    /// The residue class of x, the generator of the presentation.
    pub fn x(&self) -> FieldElement {
        self.element(&[0, 1])
    }

    /// The index-th element in ascending coordinate order (index < order).
    pub fn element_at(&self, mut index: u64) -> FieldElement {
        assert!(index < self.inner.order, "element index out of range");
        let n = self.inner.n;
        let p = self.inner.p;
        let mut coords = vec![0u64; n];
        for c in coords.iter_mut().rev() {
            *c = index % p;
            index /= p;
        }
        FieldElement {
            spec: self.clone(),
            coeffs: coords,
        }
    }

    /// All field elements in ascending coordinate order, lazily.
    pub fn iter_elements(&self) -> ElementIter {
        ElementIter {
            spec: self.clone(),
            next: Some(vec![0; self.inner.n]),
        }
    }

    /// Matrix of the Frobenius map a -> a^p in the basis 1, x, ..., x^{n-1}:
    /// column j holds the coordinates of (x^j)^p. Cached after first use.
    pub fn frobenius_matrix(&self) -> &ZpMatrix {
        self.inner.frob.get_or_init(|| {
            let inner = &self.inner;
            let n = inner.n;
            let mut x_coords = vec![0u64; n];
            if n > 1 {
                x_coords[1] = 1;
            } else {
                // class of x in a degree-1 field: reduce x mod the linear modulus
                x_coords[0] = (inner.p - inner.modulus.coeff(0)) % inner.p;
            }
            let xp = inner.pow_raw(&x_coords, inner.p as u128);
            let mut m = ZpMatrix::zero(inner.p, n, n);
            let mut col = vec![0u64; n];
            col[0] = 1;
            for j in 0..n {
                if j > 0 {
                    col = inner.mul_raw(&col, &xp);
                }
                for (i, &val) in col.iter().enumerate() {
                    m.set(i, j, val);
                }
            }
            m
        })
    }

    /// Prime factorization of q - 1, cached.
    fn q1_factors(&self) -> &[(u64, u32)] {
        self.inner
            .q1_factors
            .get_or_init(|| factorize(self.inner.order - 1))
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.p == other.inner.p
                && self.inner.n == other.inner.n
                && self.inner.modulus == other.inner.modulus)
    }
}

impl Eq for FieldSpec {}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GF({}^{}) mod {}",
            self.inner.p, self.inner.n, self.inner.modulus
        )
    }
}

/// For a reducible monic polynomial, the degree of its smallest irreducible
/// factor, found by successive gcds with x^{p^d} - x.
fn smallest_factor_degree(m: &PrimePoly) -> Result<usize> {
    let p = m.characteristic();
    let x = PrimePoly::x(p)?;
    let deg = m.degree().expect("modulus is non-constant");
    let mut t = x.rem(m)?;
    for d in 1..=deg / 2 {
        t = t.pow_mod(p as u128, m)?;
        let g = (&t - &x).gcd(m)?;
        if g.degree().is_some_and(|dg| dg >= 1) {
            return Ok(d);
        }
    }
    Err(Error::Internal(
        "reducible polynomial without a factor of degree at most deg/2".into(),
    ))
}

/// Iterator over all elements of a field in ascending coordinate order.
pub struct ElementIter {
    spec: FieldSpec,
    next: Option<Vec<u64>>,
}

impl Iterator for ElementIter {
    type Item = FieldElement;

    fn next(&mut self) -> Option<FieldElement> {
        let cur = self.next.take()?;
        let mut bumped = cur.clone();
        if bump_coords(&mut bumped, self.spec.inner.p) {
            self.next = Some(bumped);
        }
        Some(FieldElement {
            spec: self.spec.clone(),
            coeffs: cur,
        })
    }
}

/// Advances coordinates to the next vector in ascending order (the last
/// coordinate moves fastest); false once the odometer wraps.
fn bump_coords(coords: &mut [u64], p: u64) -> bool {
    for c in coords.iter_mut().rev() {
        *c += 1;
        if *c < p {
            return true;
        }
        *c = 0;
    }
    false
}

/// An element of a [`FieldSpec`], stored as exactly n coordinates in [0, p).
#[derive(Clone)]
pub struct FieldElement {
    spec: FieldSpec,
    coeffs: Vec<u64>,
}

impl FieldElement {
    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == 1 && self.coeffs[1..].iter().all(|&c| c == 0)
    }

    pub fn as_poly(&self) -> PrimePoly {
        PrimePoly::new(self.spec.inner.p, &self.coeffs).expect("characteristic is prime")
    }

    pub fn scale(&self, c: u64) -> FieldElement {
        let p = self.spec.inner.p as u128;
        let c = c as u128 % p;
        let coeffs = self
            .coeffs
            .iter()
            .map(|&a| (a as u128 * c % p) as u64)
            .collect();
        FieldElement {
            spec: self.spec.clone(),
            coeffs,
        }
    }

    pub fn pow(&self, e: u128) -> FieldElement {
        FieldElement {
            spec: self.spec.clone(),
            coeffs: self.spec.inner.pow_raw(&self.coeffs, e),
        }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm on the
    /// representative and the modulus.
    pub fn inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::ZeroElement);
        }
        let p = self.spec.inner.p;
        let modulus = &self.spec.inner.modulus;
        let mut r0 = modulus.clone();
        let mut r1 = self.as_poly();
        let mut t0 = PrimePoly::zero(p)?;
        let mut t1 = PrimePoly::one(p)?;
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1)?;
            let t2 = &t0 - &(&q * &t1);
            r0 = r1;
            r1 = r;
            t0 = t1;
            t1 = t2;
        }
        // the modulus is irreducible and self is nonzero, so the gcd is a unit
        if r0.degree() != Some(0) {
            return Err(Error::Internal(
                "nonzero element shares a factor with the irreducible modulus".into(),
            ));
        }
        let (_, inv, _) = ext_gcd(r0.coeff(0) as i128, p as i128);
        let unit = inv.rem_euclid(p as i128) as u64;
        let t = t0.scale(unit).rem(modulus)?;
        Ok(self.spec.element(t.coeffs()))
    }

    pub fn div(&self, rhs: &FieldElement) -> Result<FieldElement> {
        Ok(self * &rhs.inv()?)
    }

    fn check_same_spec(&self, rhs: &FieldElement) {
        assert!(self.spec == rhs.spec, "mixed field specs");
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.spec == other.spec && self.coeffs == other.coeffs
    }
}

impl Eq for FieldElement {}

impl Ord for FieldElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.spec
            .inner
            .p
            .cmp(&other.spec.inner.p)
            .then_with(|| self.spec.inner.n.cmp(&other.spec.inner.n))
            .then_with(|| {
                self.spec
                    .inner
                    .modulus
                    .coeffs()
                    .cmp(other.spec.inner.modulus.coeffs())
            })
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(&self.coeffs, f)
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} in GF({}^{})",
            self, self.spec.inner.p, self.spec.inner.n
        )
    }
}

impl Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        self.check_same_spec(rhs);
        let p = self.spec.inner.p;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(&a, &b)| (a + b) % p)
            .collect();
        FieldElement {
            spec: self.spec.clone(),
            coeffs,
        }
    }
}

impl Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        self.check_same_spec(rhs);
        let p = self.spec.inner.p;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(&a, &b)| (a + p - b) % p)
            .collect();
        FieldElement {
            spec: self.spec.clone(),
            coeffs,
        }
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        let p = self.spec.inner.p;
        let coeffs = self.coeffs.iter().map(|&a| (p - a) % p).collect();
        FieldElement {
            spec: self.spec.clone(),
            coeffs,
        }
    }
}

impl Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        self.check_same_spec(rhs);
        FieldElement {
            spec: self.spec.clone(),
            coeffs: self.spec.inner.mul_raw(&self.coeffs, &rhs.coeffs),
        }
    }
}

/// a^{p^k}. The exponent is reduced mod n first since Frobenius has order n.
pub fn frobenius(a: &FieldElement, k: u64) -> FieldElement {
    let n = a.spec().degree() as u64;
    let k = k % n;
    let p = a.spec().p() as u128;
    let e = (0..k).fold(1u128, |acc, _| acc * p);
    a.pow(e)
}

/// Evaluates a prime-field polynomial at a field element. Sparse inputs with
/// high degree use per-term powering; dense ones use Horner's rule.
pub fn eval_in_field(f: &PrimePoly, a: &FieldElement) -> Result<FieldElement> {
    let spec = a.spec();
    if f.characteristic() != spec.p() {
        return Err(Error::CharacteristicMismatch {
            left: f.characteristic(),
            right: spec.p(),
        });
    }
    if f.is_zero() {
        return Ok(spec.zero());
    }
    let coeffs = f.coeffs();
    let deg = coeffs.len() - 1;
    let inner = &spec.inner;
    let p = inner.p;
    let terms = coeffs.iter().filter(|&&c| c != 0).count();
    let sparse = deg >= 2 && terms * (deg.ilog2() as usize + 1) < deg;
    let out = if sparse {
        let mut acc = vec![0u64; inner.n];
        let mut cur = vec![0u64; inner.n];
        cur[0] = 1;
        let mut prev = 0usize;
        for (e, &c) in coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if e > prev {
                cur = inner.mul_raw(&cur, &inner.pow_raw(&a.coeffs, (e - prev) as u128));
                prev = e;
            }
            for i in 0..inner.n {
                acc[i] = ((acc[i] as u128 + cur[i] as u128 * c as u128) % p as u128) as u64;
            }
        }
        acc
    } else {
        let mut acc = vec![0u64; inner.n];
        for &c in coeffs.iter().rev() {
            acc = inner.mul_raw(&acc, &a.coeffs);
            acc[0] = (acc[0] + c) % p;
        }
        acc
    };
    Ok(FieldElement {
        spec: spec.clone(),
        coeffs: out,
    })
}

/// All roots of `f` in the field, in ascending order, by exhaustive
/// evaluation. Every element is a root of the zero polynomial.
pub fn poly_roots(f: &PrimePoly, spec: &FieldSpec) -> Result<Vec<FieldElement>> {
    if f.characteristic() != spec.p() {
        return Err(Error::CharacteristicMismatch {
            left: f.characteristic(),
            right: spec.p(),
        });
    }
    if spec.order() > spec.scan_limit() {
        return Err(Error::Capacity {
            required: spec.order() as u128,
            limit: spec.scan_limit(),
        });
    }
    if f.is_zero() {
        return Ok(spec.iter_elements().collect());
    }
    let mut roots = Vec::new();
    for a in spec.iter_elements() {
        if eval_in_field(f, &a)?.is_zero() {
            roots.push(a);
        }
    }
    Ok(roots)
}

/// The least multiplicative generator of F_q^* in ascending coordinate
/// order, certified by a^{(q-1)/l} != 1 for every prime l dividing q - 1.
pub fn mult_generator(spec: &FieldSpec) -> Result<FieldElement> {
    let q1 = spec.order() - 1;
    let one = spec.one();
    let factors: Vec<u64> = spec.q1_factors().iter().map(|&(l, _)| l).collect();
    for a in spec.iter_elements() {
        if a.is_zero() {
            continue;
        }
        if factors.iter().all(|&l| a.pow((q1 / l) as u128) != one) {
            return Ok(a);
        }
    }
    Err(Error::Internal("no multiplicative generator found".into()))
}

/// Multiplicative order of a nonzero element, by dividing prime factors out
/// of q - 1.
pub fn element_order_mult(a: &FieldElement) -> Result<u64> {
    if a.is_zero() {
        return Err(Error::ZeroElement);
    }
    let spec = a.spec();
    let one = spec.one();
    let mut t = spec.order() - 1;
    for &(l, _) in spec.q1_factors() {
        while t.is_multiple_of(l) && a.pow((t / l) as u128) == one {
            t /= l;
        }
    }
    debug_assert!(a.pow(t as u128) == one);
    Ok(t)
}

/// All solutions of y^r = 1 in the field, with the structure of the group
/// they form: cyclic of order gcd(r, q - 1).
pub fn roots_of_unity(spec: &FieldSpec, r: u64) -> Result<(Vec<FieldElement>, GroupStructure)> {
    if r == 0 {
        return Err(Error::InvalidArgument(
            "the exponent r must be at least 1".into(),
        ));
    }
    let q1 = spec.order() - 1;
    let d = gcd(r, q1).max(1);
    if d > spec.scan_limit() {
        return Err(Error::Capacity {
            required: d as u128,
            limit: spec.scan_limit(),
        });
    }
    let g = mult_generator(spec)?;
    let z = g.pow((q1 / d) as u128);
    let mut roots = Vec::with_capacity(d as usize);
    let mut cur = spec.one();
    for _ in 0..d {
        roots.push(cur.clone());
        cur = &cur * &z;
    }
    debug_assert!(cur.is_one());
    roots.sort();
    Ok((roots, GroupStructure::from_cyclic_orders(&[d])))
}

/// A subfield of an ambient field, as a Z_p-subspace with a designated
/// multiplicative generator. Always lives inside its ambient [`FieldSpec`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubfieldDescriptor {
    degree: u64,
    order: u64,
    basis: Vec<FieldElement>,
    generator: FieldElement,
    space: RowSpace,
}

impl SubfieldDescriptor {
    /// Degree over the prime field.
    pub fn degree(&self) -> u64 {
        self.degree
    }

    /// Number of elements, p^degree.
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn basis(&self) -> &[FieldElement] {
        &self.basis
    }

    /// An element whose powers together with 0 enumerate the subfield;
    /// its multiplicative order is p^degree - 1.
    pub fn generator(&self) -> &FieldElement {
        &self.generator
    }

    pub fn ambient(&self) -> &FieldSpec {
        self.generator.spec()
    }

    pub fn contains(&self, a: &FieldElement) -> bool {
        a.spec() == self.ambient() && self.space.contains(a.coeffs())
    }

    /// True when this subfield is a subset of `other` (both in the same
    /// ambient field).
    pub fn is_subfield_of(&self, other: &SubfieldDescriptor) -> bool {
        self.ambient() == other.ambient() && self.basis.iter().all(|b| other.contains(b))
    }

    /// All elements, ascending. Guarded by the ambient scan limit.
    pub fn elements(&self) -> Result<Vec<FieldElement>> {
        let spec = self.ambient();
        if self.order > spec.scan_limit() {
            return Err(Error::Capacity {
                required: self.order as u128,
                limit: spec.scan_limit(),
            });
        }
        let mut out = span_elements(spec, &self.basis);
        out.sort();
        Ok(out)
    }

    /// Re-presents the subfield as its own degree-k [`FieldSpec`], together
    /// with the image in the ambient field of that spec's generator class x
    /// (the designated generator), which defines the embedding.
    pub fn to_standalone(&self) -> Result<(FieldSpec, FieldElement)> {
        let ambient = self.ambient();
        let mp = min_poly(&self.generator, 1)?;
        let prime = mp.as_prime_poly().expect("prime base");
        if prime.degree() != Some(self.degree as usize) {
            return Err(Error::Internal(
                "subfield generator has a minimal polynomial of the wrong degree".into(),
            ));
        }
        let spec = FieldSpec::with_scan_limit(
            ambient.p(),
            self.degree as usize,
            Some(prime),
            ambient.scan_limit(),
        )?;
        Ok((spec, self.generator.clone()))
    }
}

/// All Z_p-combinations of the basis vectors, unsorted. Callers bound the
/// span size beforehand.
fn span_elements(spec: &FieldSpec, basis: &[FieldElement]) -> Vec<FieldElement> {
    let p = spec.p() as u128;
    let n = spec.degree();
    let mut t = vec![0u64; basis.len()];
    let mut out = Vec::new();
    loop {
        let mut v = vec![0u64; n];
        for (ti, b) in t.iter().zip(basis) {
            if *ti == 0 {
                continue;
            }
            for (vi, &bi) in v.iter_mut().zip(b.coeffs()) {
                *vi = ((*vi as u128 + *ti as u128 * bi as u128) % p) as u64;
            }
        }
        out.push(spec.element(&v));
        if !bump_coords(&mut t, spec.p()) {
            return out;
        }
    }
}

/// The fixed subfield of Phi^k, that is the roots of x^{p^k} - x, computed
/// as the kernel of M^k - I for the Frobenius matrix M. Requires k | n; the
/// kernel dimension is then exactly k.
pub fn fixed_subfield(spec: &FieldSpec, k: u64) -> Result<SubfieldDescriptor> {
    let n = spec.degree() as u64;
    if k == 0 || !n.is_multiple_of(k) {
        return Err(Error::NotADivisor { k, n });
    }
    let m = spec.frobenius_matrix();
    let mk = m.pow(k).sub(&ZpMatrix::identity(spec.p(), spec.degree()));
    let kernel = mk.kernel_basis();
    if kernel.len() != k as usize {
        return Err(Error::Internal(format!(
            "fixed space of the {k}-th Frobenius power has dimension {}, expected {k}",
            kernel.len()
        )));
    }
    let basis: Vec<FieldElement> = kernel.iter().map(|v| spec.element(v)).collect();
    let space = RowSpace::new(spec.p(), spec.degree(), &kernel);
    let mut order = 1u64;
    for _ in 0..k {
        order *= spec.p();
    }
    let generator = if k == n {
        mult_generator(spec)?
    } else {
        if order > spec.scan_limit() {
            return Err(Error::Capacity {
                required: order as u128,
                limit: spec.scan_limit(),
            });
        }
        let mut span = span_elements(spec, &basis);
        span.sort();
        let sub_q1 = order - 1;
        let primes: Vec<u64> = factorize(sub_q1).iter().map(|&(l, _)| l).collect();
        let one = spec.one();
        span.into_iter()
            .filter(|e| !e.is_zero())
            .find(|e| primes.iter().all(|&l| e.pow((sub_q1 / l) as u128) != one))
            .ok_or_else(|| Error::Internal("no generator found in the fixed subfield".into()))?
    };
    Ok(SubfieldDescriptor {
        degree: k,
        order,
        basis,
        generator,
        space,
    })
}

/// One subfield per divisor of n, keyed by degree: the full lattice.
pub fn subfield_lattice(spec: &FieldSpec) -> Result<BTreeMap<u64, SubfieldDescriptor>> {
    let mut out = BTreeMap::new();
    for k in divisors(spec.degree() as u64) {
        out.insert(k, fixed_subfield(spec, k)?);
    }
    Ok(out)
}

/// A minimal polynomial over the subfield of degree `base_degree`: monic,
/// with coefficients that are ambient field elements lying in that subfield.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalPoly {
    base_degree: u64,
    coeffs: Vec<FieldElement>,
}

impl MinimalPoly {
    pub fn base_degree(&self) -> u64 {
        self.base_degree
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficients ascending; the leading one is 1.
    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    /// Over the prime field (base degree 1) the coefficients are constants,
    /// so the polynomial re-expresses exactly as a [`PrimePoly`].
    pub fn as_prime_poly(&self) -> Option<PrimePoly> {
        if self.base_degree != 1 {
            return None;
        }
        let p = self.coeffs[0].spec().p();
        let consts: Vec<u64> = self
            .coeffs
            .iter()
            .map(|c| {
                debug_assert!(c.coeffs()[1..].iter().all(|&v| v == 0));
                c.coeffs()[0]
            })
            .collect();
        Some(PrimePoly::new(p, &consts).expect("characteristic is prime"))
    }

    /// Evaluates at an ambient field element (Horner).
    pub fn eval(&self, at: &FieldElement) -> FieldElement {
        let mut acc = at.spec().zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * at) + c;
        }
        acc
    }
}

/// Minimal polynomial of `a` over the subfield of degree `base_degree`,
/// as the product of (y - c) over the distinct conjugates c of `a` under
/// Phi^{base_degree}. Every coefficient is checked to lie in the base.
pub fn min_poly(a: &FieldElement, base_degree: u64) -> Result<MinimalPoly> {
    let spec = a.spec();
    let n = spec.degree() as u64;
    if base_degree == 0 || !n.is_multiple_of(base_degree) {
        return Err(Error::NotADivisor { k: base_degree, n });
    }
    let mut conjugates = vec![a.clone()];
    let mut b = frobenius(a, base_degree);
    while b != *a {
        conjugates.push(b.clone());
        b = frobenius(&b, base_degree);
        if conjugates.len() as u64 > n / base_degree {
            return Err(Error::Internal(
                "conjugate orbit exceeds the extension degree".into(),
            ));
        }
    }
    let d = conjugates.len() as u64;
    if !(n / base_degree).is_multiple_of(d) {
        return Err(Error::Internal(
            "conjugate orbit size does not divide the extension degree".into(),
        ));
    }
    let mut coeffs = vec![spec.one()];
    for c in &conjugates {
        let mut next = vec![spec.zero(); coeffs.len() + 1];
        for (i, ci) in coeffs.iter().enumerate() {
            next[i + 1] = &next[i + 1] + ci;
            next[i] = &next[i] - &(c * ci);
        }
        coeffs = next;
    }
    debug_assert!(coeffs.last().is_some_and(FieldElement::is_one));
    for c in &coeffs {
        if frobenius(c, base_degree) != *c {
            return Err(Error::Internal(
                "minimal polynomial coefficient lies outside the base subfield".into(),
            ));
        }
    }
    Ok(MinimalPoly {
        base_degree,
        coeffs,
    })
}

/// An isomorphism between two presentations of the same field, determined
/// by where the source's generator class x lands.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldIso {
    source: FieldSpec,
    target: FieldSpec,
    image_of_x: FieldElement,
    powers: Vec<FieldElement>,
}

impl FieldIso {
    fn build(source: FieldSpec, target: FieldSpec, image: FieldElement) -> Result<FieldIso> {
        if !eval_in_field(source.modulus(), &image)?.is_zero() {
            return Err(Error::Internal(
                "claimed image of x is not a root of the source modulus".into(),
            ));
        }
        let n = source.degree();
        let mut powers = Vec::with_capacity(n);
        let mut cur = target.one();
        for _ in 0..n {
            powers.push(cur.clone());
            cur = &cur * &image;
        }
        Ok(FieldIso {
            source,
            target,
            image_of_x: image,
            powers,
        })
    }

    pub fn source(&self) -> &FieldSpec {
        &self.source
    }

    pub fn target(&self) -> &FieldSpec {
        &self.target
    }

    pub fn image_of_x(&self) -> &FieldElement {
        &self.image_of_x
    }

    /// Applies the map: substitute image_of_x into the coordinate
    /// polynomial. Z_p-linear by construction.
    pub fn apply(&self, a: &FieldElement) -> Result<FieldElement> {
        if a.spec() != &self.source {
            return Err(Error::SpecMismatch);
        }
        let mut acc = self.target.zero();
        for (&c, pw) in a.coeffs().iter().zip(&self.powers) {
            if c != 0 {
                acc = &acc + &pw.scale(c);
            }
        }
        Ok(acc)
    }

    /// The exact inverse isomorphism, by inverting the coordinate matrix of
    /// the forward map, so composing the two is the identity.
    pub fn inverse(&self) -> Result<FieldIso> {
        let n = self.source.degree();
        let mut mat = ZpMatrix::zero(self.source.p(), n, n);
        for (j, pw) in self.powers.iter().enumerate() {
            for i in 0..n {
                mat.set(i, j, pw.coeffs()[i]);
            }
        }
        let inv = mat
            .inverse()
            .ok_or_else(|| Error::Internal("isomorphism coordinate matrix is singular".into()))?;
        let u = inv.mul_vec(self.target.x().coeffs());
        FieldIso::build(
            self.target.clone(),
            self.source.clone(),
            self.source.element(&u),
        )
    }
}

/// The canonical isomorphism between two presentations of GF(p^n): x is
/// sent to the least root (ascending coordinate order) of the source
/// modulus inside the target. The map is then exercised as a ring
/// homomorphism, exhaustively over all elements for order <= 2^12 and on
/// 100 deterministic sample pairs above that.
pub fn field_iso(source: &FieldSpec, target: &FieldSpec) -> Result<FieldIso> {
    if source.p() != target.p() || source.degree() != target.degree() {
        return Err(Error::SpecMismatch);
    }
    if target.order() > target.scan_limit() {
        return Err(Error::Capacity {
            required: target.order() as u128,
            limit: target.scan_limit(),
        });
    }
    let root = target
        .iter_elements()
        .find(|r| {
            eval_in_field(source.modulus(), r)
                .map(|v| v.is_zero())
                .unwrap_or(false)
        })
        .ok_or_else(|| {
            Error::Internal("the source modulus has no root in the target field".into())
        })?;
    let iso = FieldIso::build(source.clone(), target.clone(), root)?;
    check_homomorphism(&iso)?;
    Ok(iso)
}

fn check_homomorphism(iso: &FieldIso) -> Result<()> {
    let src = &iso.source;
    let q = src.order();
    let verify = |a: &FieldElement, b: &FieldElement| -> Result<()> {
        let fa = iso.apply(a)?;
        let fb = iso.apply(b)?;
        if iso.apply(&(a + b))? != &fa + &fb || iso.apply(&(a * b))? != &fa * &fb {
            return Err(Error::Internal(
                "isomorphism candidate fails the homomorphism check".into(),
            ));
        }
        Ok(())
    };
    if q <= 1 << 12 {
        let x = src.x();
        for a in src.iter_elements() {
            verify(&a, &x)?;
            verify(&a, &a)?;
        }
    } else {
        // fixed multiplier strides, so the sample is deterministic
        for i in 0..100u64 {
            let a = src.element_at(i.wrapping_mul(0x9E3779B97F4A7C15) % q);
            let b = src.element_at(i.wrapping_mul(0xC2B2AE3D27D4EB4F).wrapping_add(0x1657) % q);
            verify(&a, &b)?;
        }
    }
    Ok(())
}

/// Baby-step giant-step discrete log of `target` to base `g`, where `g` has
/// multiplicative order `group_order`. Callers bound the table size.
fn discrete_log(g: &FieldElement, target: &FieldElement, group_order: u64) -> Result<u64> {
    let mut m = group_order.isqrt();
    if m * m < group_order {
        m += 1;
    }
    let mut table: HashMap<Vec<u64>, u64> = HashMap::with_capacity(m as usize);
    let mut cur = g.spec().one();
    for j in 0..m {
        table.entry(cur.coeffs().to_vec()).or_insert(j);
        cur = &cur * g;
    }
    // cur is now g^m
    let giant = cur.inv()?;
    let mut y = target.clone();
    for i in 0..=m {
        if let Some(&j) = table.get(y.coeffs()) {
            return Ok((i * m + j) % group_order);
        }
        y = &y * &giant;
    }
    Err(Error::Internal(
        "element is not a power of the claimed generator".into(),
    ))
}

/// Combines nonzero elements m_1, ..., m_r into a single element
/// s = prod m_i^{k_i} whose powers reach every m_i. With e_i the discrete
/// log of m_i to the canonical generator and d = gcd(q - 1, e_1, ..., e_r),
/// the Bezout exponents give s of order (q - 1) / d.
pub fn combine_generators(elems: &[FieldElement]) -> Result<(FieldElement, Vec<u64>)> {
    let Some(first) = elems.first() else {
        return Err(Error::InvalidArgument("need at least one element".into()));
    };
    let spec = first.spec().clone();
    for e in elems {
        if e.spec() != &spec {
            return Err(Error::SpecMismatch);
        }
        if e.is_zero() {
            return Err(Error::ZeroElement);
        }
    }
    if spec.order() > spec.scan_limit() {
        return Err(Error::Capacity {
            required: spec.order() as u128,
            limit: spec.scan_limit(),
        });
    }
    let g = mult_generator(&spec)?;
    let q1 = spec.order() - 1;
    let logs: Vec<u64> = elems
        .iter()
        .map(|e| discrete_log(&g, e, q1))
        .collect::<Result<_>>()?;
    // fold gcd with Bezout coefficients, exponents kept reduced mod q - 1
    let mut d = q1;
    let mut ks: Vec<u64> = Vec::with_capacity(logs.len());
    for &e in &logs {
        let (g2, u, v) = ext_gcd(d as i128, e as i128);
        for k in &mut ks {
            *k = ((*k as i128 * u).rem_euclid(q1 as i128)) as u64;
        }
        ks.push(v.rem_euclid(q1 as i128) as u64);
        d = g2 as u64;
    }
    let mut s = spec.one();
    for (e, &k) in elems.iter().zip(&ks) {
        s = &s * &e.pow(k as u128);
    }
    if s != g.pow(d as u128) {
        return Err(Error::Internal(
            "combined element is not the expected generator power".into(),
        ));
    }
    for (e, &l) in elems.iter().zip(&logs) {
        if s.pow((l / d) as u128) != *e {
            return Err(Error::Internal(
                "input element is not a power of the combination".into(),
            ));
        }
    }
    Ok((s, ks))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64, n: usize) -> FieldSpec {
        FieldSpec::new(p, n, None).unwrap()
    }

    fn poly(p: u64, coeffs: &[u64]) -> PrimePoly {
        PrimePoly::new(p, coeffs).unwrap()
    }

    #[test]
    fn construction_canonical_moduli() {
        let f2 = gf(2, 1);
        assert_eq!(f2.modulus().coeffs(), &[0, 1]);
        assert_eq!(f2.order(), 2);

        let f4 = gf(2, 2);
        assert_eq!(f4.modulus().coeffs(), &[1, 1, 1]);
        assert_eq!(f4.order(), 4);

        let f16 = gf(2, 4);
        assert_eq!(f16.modulus().coeffs(), &[1, 0, 0, 1, 1]);
    }

    #[test]
    fn construction_rejects_bad_input() {
        assert_eq!(
            FieldSpec::new(2, 2, Some(poly(2, &[1, 0, 1]))),
            Err(Error::ReducibleModulus { factor_degree: 1 })
        );
        assert_eq!(FieldSpec::new(4, 2, None), Err(Error::NotPrime(4)));
        assert!(matches!(
            FieldSpec::new(2, 0, None),
            Err(Error::InvalidArgument(_))
        ));
        assert!(matches!(
            FieldSpec::new(3, 2, Some(poly(3, &[1, 0, 2]))),
            Err(Error::InvalidArgument(_))
        ));
        assert!(matches!(
            FieldSpec::new(2, 3, Some(poly(2, &[1, 1, 1]))),
            Err(Error::InvalidArgument(_))
        ));
        assert_eq!(
            FieldSpec::new(2, 2, Some(poly(3, &[1, 1, 1]))),
            Err(Error::CharacteristicMismatch { left: 3, right: 2 })
        );
        assert!(matches!(
            FieldSpec::new(2, 70, None),
            Err(Error::Overflow(_))
        ));
    }

    #[test]
    fn reducible_modulus_reports_smallest_factor_degree() {
        // (x^2+x+1)^2 = x^4+x^2+1 over Z_2 has smallest factor degree 2
        let sq = poly(2, &[1, 0, 1, 0, 1]);
        assert_eq!(
            FieldSpec::new(2, 4, Some(sq)),
            Err(Error::ReducibleModulus { factor_degree: 2 })
        );
    }

    #[test]
    fn gf4_multiplication_table() {
        let f4 = gf(2, 2);
        let x = f4.x();
        let x1 = f4.element(&[1, 1]);
        assert_eq!(&x * &x1, f4.one());
        assert_eq!(x.inv().unwrap(), x1);
        assert_eq!(&x * &x, x1);
        assert_eq!(&x1 * &x1, x);
        for a in f4.iter_elements() {
            assert_eq!(&a + &f4.zero(), a);
            assert_eq!(&a * &f4.one(), a);
        }
        assert_eq!(f4.zero().inv(), Err(Error::ZeroElement));
        assert_eq!(x.div(&x1).unwrap(), &x * &x);
    }

    #[test]
    fn element_iteration_is_ascending() {
        let f4 = gf(2, 2);
        let all: Vec<Vec<u64>> = f4.iter_elements().map(|e| e.coeffs().to_vec()).collect();
        assert_eq!(all, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        let mut sorted: Vec<FieldElement> = f4.iter_elements().collect();
        sorted.sort();
        assert_eq!(sorted, f4.iter_elements().collect::<Vec<_>>());
        for (i, e) in f4.iter_elements().enumerate() {
            assert_eq!(f4.element_at(i as u64), e);
        }
    }

    #[test]
    fn display_and_parse_round_trip() {
        let f16 = gf(2, 4);
        let e = f16.element(&[1, 1, 0, 1]);
        assert_eq!(e.to_string(), "x^3+x+1");
        assert_eq!(f16.parse_element("x^3+x+1").unwrap(), e);
        assert_eq!(f16.zero().to_string(), "0");
        assert_eq!(
            f16.parse_element("x^4").unwrap(),
            f16.element(&[1, 0, 0, 1])
        );
        let f9 = gf(3, 2);
        assert_eq!(f9.element(&[1, 2]).to_string(), "2x+1");
    }

    #[test]
    fn frobenius_worked_examples() {
        let f4 = gf(2, 2);
        let x = f4.x();
        assert_eq!(frobenius(&x, 1), f4.element(&[1, 1]));
        assert_eq!(frobenius(&x, 2), x);
        assert_eq!(frobenius(&f4.one(), 1), f4.one());
        assert_eq!(frobenius(&f4.zero(), 1), f4.zero());
        // exponent reduction mod n
        assert_eq!(frobenius(&x, 5), frobenius(&x, 1));
    }

    #[test]
    fn frobenius_matrix_worked_examples() {
        let f2 = gf(2, 1);
        let m = f2.frobenius_matrix();
        assert_eq!((m.rows(), m.cols()), (1, 1));
        assert_eq!(m.get(0, 0), 1);

        let f4 = gf(2, 2);
        let m = f4.frobenius_matrix();
        assert_eq!(
            [[m.get(0, 0), m.get(0, 1)], [m.get(1, 0), m.get(1, 1)]],
            [[1, 1], [0, 1]]
        );
        for spec in [gf(2, 4), gf(3, 3), gf(5, 2)] {
            let m = spec.frobenius_matrix();
            assert_eq!(
                m.pow(spec.degree() as u64),
                ZpMatrix::identity(spec.p(), spec.degree())
            );
            for a in spec.iter_elements().take(50) {
                assert_eq!(m.mul_vec(a.coeffs()), frobenius(&a, 1).coeffs());
            }
        }
    }

    #[test]
    fn fixed_subfield_of_gf4() {
        let f4 = gf(2, 2);
        let prime = fixed_subfield(&f4, 1).unwrap();
        assert_eq!(prime.degree(), 1);
        assert_eq!(prime.order(), 2);
        assert_eq!(prime.basis(), &[f4.one()]);
        assert_eq!(prime.elements().unwrap(), vec![f4.zero(), f4.one()]);
        assert_eq!(prime.generator(), &f4.one());

        let whole = fixed_subfield(&f4, 2).unwrap();
        assert_eq!(whole.order(), 4);
        assert_eq!(whole.basis(), &[f4.one(), f4.x()]);
        assert_eq!(whole.generator(), &f4.x());
        assert_eq!(
            fixed_subfield(&f4, 3),
            Err(Error::NotADivisor { k: 3, n: 2 })
        );
    }

    #[test]
    fn fixed_subfield_of_gf16_degree_2() {
        let f16 = gf(2, 4);
        let sub = fixed_subfield(&f16, 2).unwrap();
        assert_eq!(sub.order(), 4);
        let expected: Vec<FieldElement> = [
            vec![0, 0, 0, 0],
            vec![0, 1, 0, 1],
            vec![1, 0, 0, 0],
            vec![1, 1, 0, 1],
        ]
        .iter()
        .map(|v| f16.element(v))
        .collect();
        assert_eq!(sub.elements().unwrap(), expected);
        assert_eq!(sub.generator(), &f16.element(&[0, 1, 0, 1]));
        // the nonzero part is exactly the cube roots of unity
        let (cube_roots, structure) = roots_of_unity(&f16, 3).unwrap();
        assert_eq!(cube_roots, expected[1..].to_vec());
        assert_eq!(structure.factors(), &[3]);
        // every subfield element is fixed by the second Frobenius power
        for e in sub.elements().unwrap() {
            assert_eq!(frobenius(&e, 2), e);
        }
        assert!(sub.contains(&f16.element(&[0, 1, 0, 1])));
        assert!(!sub.contains(&f16.x()));
    }

    #[test]
    fn subfield_lattice_degrees() {
        let f2 = gf(2, 1);
        assert_eq!(subfield_lattice(&f2).unwrap().len(), 1);

        let f64 = gf(2, 6);
        let lat = subfield_lattice(&f64).unwrap();
        assert_eq!(lat.keys().copied().collect::<Vec<u64>>(), vec![1, 2, 3, 6]);
        // containment matches divisibility
        assert!(lat[&1].is_subfield_of(&lat[&2]));
        assert!(lat[&2].is_subfield_of(&lat[&6]));
        assert!(lat[&3].is_subfield_of(&lat[&6]));
        assert!(!lat[&2].is_subfield_of(&lat[&3]));
        assert!(!lat[&6].is_subfield_of(&lat[&2]));

        let f81 = gf(3, 4);
        let lat = subfield_lattice(&f81).unwrap();
        assert_eq!(lat.keys().copied().collect::<Vec<u64>>(), vec![1, 2, 4]);
        assert_eq!(lat[&2].elements().unwrap().len(), 9);
    }

    #[test]
    fn mult_generator_worked_examples() {
        assert_eq!(mult_generator(&gf(2, 1)).unwrap(), gf(2, 1).one());
        let f4 = gf(2, 2);
        assert_eq!(mult_generator(&f4).unwrap(), f4.x());
        let f7 = gf(7, 1);
        assert_eq!(mult_generator(&f7).unwrap(), f7.element(&[3]));
        let f16 = gf(2, 4);
        assert_eq!(mult_generator(&f16).unwrap(), f16.element(&[0, 0, 1, 0]));
    }

    #[test]
    fn element_orders() {
        let f4 = gf(2, 2);
        assert_eq!(element_order_mult(&f4.one()).unwrap(), 1);
        assert_eq!(element_order_mult(&f4.x()).unwrap(), 3);
        assert_eq!(element_order_mult(&f4.element(&[1, 1])).unwrap(), 3);
        assert_eq!(element_order_mult(&f4.zero()), Err(Error::ZeroElement));

        let f16 = gf(2, 4);
        let g = mult_generator(&f16).unwrap();
        assert_eq!(element_order_mult(&g).unwrap(), 15);
        assert_eq!(element_order_mult(&g.pow(5)).unwrap(), 3);
        assert_eq!(element_order_mult(&g.pow(3)).unwrap(), 5);
    }

    #[test]
    fn roots_of_unity_worked_examples() {
        let f4 = gf(2, 2);
        let (r1, s1) = roots_of_unity(&f4, 1).unwrap();
        assert_eq!(r1, vec![f4.one()]);
        assert_eq!(s1.factors(), &[1]);

        let (r3, s3) = roots_of_unity(&f4, 3).unwrap();
        assert_eq!(r3.len(), 3);
        assert!(r3.iter().all(|e| !e.is_zero() && e.pow(3).is_one()));
        assert_eq!(s3.factors(), &[3]);

        let f5 = gf(5, 1);
        let (r4, s4) = roots_of_unity(&f5, 4).unwrap();
        let expected: Vec<FieldElement> = (1..5).map(|c| f5.element(&[c])).collect();
        assert_eq!(r4, expected);
        assert_eq!(s4.factors(), &[4]);

        // the count is gcd(r, q-1)
        let f16 = gf(2, 4);
        assert_eq!(roots_of_unity(&f16, 6).unwrap().0.len(), 3);
        assert_eq!(roots_of_unity(&f16, 7).unwrap().0.len(), 1);
        assert!(matches!(
            roots_of_unity(&f16, 0),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn min_poly_worked_examples() {
        let f4 = gf(2, 2);
        let mp = min_poly(&f4.one(), 1).unwrap();
        assert_eq!(mp.degree(), 1);
        assert_eq!(mp.as_prime_poly().unwrap().coeffs(), &[1, 1]);

        let mp = min_poly(&f4.x(), 1).unwrap();
        assert_eq!(mp.as_prime_poly().unwrap(), *f4.modulus());
        assert!(mp.eval(&f4.x()).is_zero());

        // x^2 generates GF(16) and its orbit includes x, so its minimal
        // polynomial is the field modulus itself
        let f16 = gf(2, 4);
        let g = mult_generator(&f16).unwrap();
        let mp = min_poly(&g, 1).unwrap();
        assert_eq!(mp.degree(), 4);
        assert_eq!(mp.as_prime_poly().unwrap(), *f16.modulus());
        assert!(mp.as_prime_poly().unwrap().is_irreducible().unwrap());

        assert_eq!(min_poly(&g, 3), Err(Error::NotADivisor { k: 3, n: 4 }));
    }

    #[test]
    fn min_poly_over_intermediate_base() {
        let f16 = gf(2, 4);
        let x = f16.x();
        let mp = min_poly(&x, 2).unwrap();
        assert_eq!(mp.degree(), 2);
        assert_eq!(mp.base_degree(), 2);
        assert!(mp.as_prime_poly().is_none());
        assert!(mp.eval(&x).is_zero());
        let c = f16.element(&[1, 1, 0, 1]);
        assert_eq!(mp.coeffs(), &[c.clone(), c, f16.one()]);
        let base = fixed_subfield(&f16, 2).unwrap();
        assert!(mp.coeffs().iter().all(|c| base.contains(c)));

        // an element of the base has a degree-1 minimal polynomial over it
        let e = base.generator().clone();
        assert_eq!(min_poly(&e, 2).unwrap().degree(), 1);
    }

    #[test]
    fn field_iso_between_gf9_presentations() {
        let src = FieldSpec::new(3, 2, Some(poly(3, &[1, 0, 1]))).unwrap();
        let tgt = FieldSpec::new(3, 2, Some(poly(3, &[2, 1, 1]))).unwrap();
        let iso = field_iso(&src, &tgt).unwrap();
        assert_eq!(iso.image_of_x().coeffs(), &[1, 2]);
        // homomorphism and round trip on every element
        let back = iso.inverse().unwrap();
        for a in src.iter_elements() {
            let img = iso.apply(&a).unwrap();
            assert_eq!(back.apply(&img).unwrap(), a);
            for b in src.iter_elements() {
                assert_eq!(
                    iso.apply(&(&a * &b)).unwrap(),
                    &iso.apply(&a).unwrap() * &iso.apply(&b).unwrap()
                );
                assert_eq!(
                    iso.apply(&(&a + &b)).unwrap(),
                    &iso.apply(&a).unwrap() + &iso.apply(&b).unwrap()
                );
            }
        }
        assert_eq!(field_iso(&src, &gf(2, 2)), Err(Error::SpecMismatch));
    }

    #[test]
    fn field_iso_to_itself_picks_least_root() {
        // the least root of the modulus need not be x itself: in
        // Z_2[x]/(x^3+x^2+1) the conjugate x^2 precedes x in coordinate order
        let f8 = gf(2, 3);
        assert_eq!(f8.modulus().coeffs(), &[1, 0, 1, 1]);
        let iso = field_iso(&f8, &f8).unwrap();
        assert_eq!(iso.image_of_x(), &f8.element(&[0, 0, 1]));
        let back = iso.inverse().unwrap();
        for a in f8.iter_elements() {
            assert_eq!(back.apply(&iso.apply(&a).unwrap()).unwrap(), a);
        }

        // in GF(4) the least root is x, so there the identity map is chosen
        let f4 = gf(2, 2);
        assert_eq!(field_iso(&f4, &f4).unwrap().image_of_x(), &f4.x());
    }

    #[test]
    fn combine_generators_worked_examples() {
        let f16 = gf(2, 4);
        let g = mult_generator(&f16).unwrap();

        let (s, ks) = combine_generators(std::slice::from_ref(&g)).unwrap();
        assert_eq!(s, g);
        assert_eq!(ks, vec![1]);

        let (s, _) = combine_generators(&[g.pow(6), g.pow(10)]).unwrap();
        assert_eq!(element_order_mult(&s).unwrap(), 15);

        let (s, _) = combine_generators(&[g.pow(5)]).unwrap();
        assert_eq!(s, g.pow(5));
        assert_eq!(element_order_mult(&s).unwrap(), 3);

        assert!(matches!(
            combine_generators(&[]),
            Err(Error::InvalidArgument(_))
        ));
        assert_eq!(combine_generators(&[f16.zero()]), Err(Error::ZeroElement));
    }

    #[test]
    fn poly_roots_worked_examples() {
        let f4 = gf(2, 2);
        // x^2 - x: the prime subfield
        let f = poly(2, &[0, 1, 1]);
        assert_eq!(poly_roots(&f, &f4).unwrap(), vec![f4.zero(), f4.one()]);
        // x^4 - x: everything
        let f = poly(2, &[0, 1, 0, 0, 1]);
        assert_eq!(poly_roots(&f, &f4).unwrap().len(), 4);
        // irreducible over its own base field
        let f2 = gf(2, 1);
        assert_eq!(poly_roots(&poly(2, &[1, 1, 1]), &f2).unwrap(), vec![]);
        // every element is a root of the zero polynomial
        assert_eq!(
            poly_roots(&PrimePoly::zero(2).unwrap(), &f4).unwrap().len(),
            4
        );
    }

    #[test]
    fn eval_in_field_strategies_agree() {
        let f16 = gf(2, 4);
        let polys = [
            poly(2, &[0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
            poly(2, &[1, 1, 1, 0, 1, 1]),
            poly(2, &[1]),
            poly(2, &[0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
        ];
        for f in &polys {
            for a in f16.iter_elements() {
                // naive term-by-term reference
                let mut want = f16.zero();
                for (e, &c) in f.coeffs().iter().enumerate() {
                    if c != 0 {
                        want = &want + &a.pow(e as u128).scale(c);
                    }
                }
                assert_eq!(eval_in_field(f, &a).unwrap(), want);
            }
        }
    }

    #[test]
    fn capacity_limits_are_enforced() {
        let small = FieldSpec::with_scan_limit(2, 4, None, 10).unwrap();
        let f = poly(2, &[0, 1, 1]);
        assert_eq!(
            poly_roots(&f, &small),
            Err(Error::Capacity {
                required: 16,
                limit: 10
            })
        );
        assert_eq!(
            field_iso(&small, &small),
            Err(Error::Capacity {
                required: 16,
                limit: 10
            })
        );
        assert_eq!(
            combine_generators(&[small.one()]),
            Err(Error::Capacity {
                required: 16,
                limit: 10
            })
        );
        assert_eq!(
            fixed_subfield(&FieldSpec::with_scan_limit(2, 4, None, 3).unwrap(), 2).unwrap_err(),
            Error::Capacity {
                required: 4,
                limit: 3
            }
        );
    }

    #[test]
    fn standalone_subfield_export() {
        let f16 = gf(2, 4);
        let sub = fixed_subfield(&f16, 2).unwrap();
        let (spec, embed) = sub.to_standalone().unwrap();
        assert_eq!((spec.p(), spec.degree()), (2, 2));
        assert_eq!(&embed, sub.generator());
        // the embedding really is a root of the standalone modulus
        assert!(eval_in_field(spec.modulus(), &embed).unwrap().is_zero());
        // and it has the full multiplicative order of the standalone field
        assert_eq!(element_order_mult(&embed).unwrap(), spec.order() - 1);
    }

    #[test]
    fn prime_field_with_linear_modulus() {
        let f7 = gf(7, 1);
        assert_eq!(f7.modulus().coeffs(), &[0, 1]);
        // the class of x is the constant 0 when the modulus is x
        assert!(f7.x().is_zero());
        let sub = fixed_subfield(&f7, 1).unwrap();
        assert_eq!(sub.order(), 7);
        assert_eq!(sub.generator(), &f7.element(&[3]));
        let three = f7.element(&[3]);
        assert_eq!(element_order_mult(&three).unwrap(), 6);
        assert_eq!((&three * &three).coeffs(), &[2]);
    }
}
