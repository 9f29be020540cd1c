//! Automorphism groups of finite fields and the Galois correspondence.
//!
//! Every automorphism of GF(p^N) is a power of the Frobenius map, so the
//! types here carry exponents rather than function tables. The Galois group
//! of F_{q^n} over F_q with q = p^s is cyclic of order n, generated by
//! Phi^s; its subgroup lattice mirrors the divisors of n, and fixed_field /
//! stabilizer realize the two directions of the correspondence, each one
//! cross-checked against the other at construction time.

use std::collections::BTreeMap;
use std::fmt;

use crate::arith::{divisors, gcd};
use crate::error::{Error, Result};
use crate::field::{fixed_subfield, frobenius, FieldElement, FieldSpec, SubfieldDescriptor};
use crate::linalg::{span_kernel_intersection, RowSpace, ZpMatrix};

/// The automorphism a -> a^{p^k} of a field GF(p^N), with 0 <= k < N.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Automorphism {
    spec: FieldSpec,
    exponent: u64,
}

impl Automorphism {
    /// Phi^k; the exponent is reduced mod N since Phi^N is the identity.
    pub fn new(spec: &FieldSpec, k: u64) -> Automorphism {
        Automorphism {
            spec: spec.clone(),
            exponent: k % spec.degree() as u64,
        }
    }

    pub fn identity(spec: &FieldSpec) -> Automorphism {
        Automorphism::new(spec, 0)
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn is_identity(&self) -> bool {
        self.exponent == 0
    }

    pub fn apply(&self, a: &FieldElement) -> Result<FieldElement> {
        if a.spec() != &self.spec {
            return Err(Error::SpecMismatch);
        }
        Ok(frobenius(a, self.exponent))
    }

    /// Composition adds exponents mod N.
    pub fn compose(&self, other: &Automorphism) -> Result<Automorphism> {
        if self.spec != other.spec {
            return Err(Error::SpecMismatch);
        }
        Ok(Automorphism::new(
            &self.spec,
            self.exponent + other.exponent,
        ))
    }

    pub fn inverse(&self) -> Automorphism {
        let n = self.spec.degree() as u64;
        Automorphism::new(&self.spec, (n - self.exponent) % n)
    }

    /// Order in the automorphism group: N / gcd(k, N).
    pub fn order(&self) -> u64 {
        let n = self.spec.degree() as u64;
        n / gcd(self.exponent, n)
    }

    /// Matrix of this automorphism in the coordinate basis.
    pub fn matrix(&self) -> ZpMatrix {
        self.spec.frobenius_matrix().pow(self.exponent)
    }
}

impl fmt::Display for Automorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.exponent {
            0 => write!(f, "id"),
            1 => write!(f, "Phi"),
            k => write!(f, "Phi^{k}"),
        }
    }
}

/// All N automorphisms of GF(p^N): the powers of Frobenius, in exponent
/// order. Each one is exercised as a ring homomorphism on element pairs,
/// exhaustively for field order <= 2^8 and on 64 fixed samples above.
pub fn all_automorphisms(spec: &FieldSpec) -> Result<Vec<Automorphism>> {
    let n = spec.degree() as u64;
    let autos: Vec<Automorphism> = (0..n).map(|k| Automorphism::new(spec, k)).collect();
    let q = spec.order();
    let pairs: Vec<(FieldElement, FieldElement)> = if q <= 1 << 8 {
        spec.iter_elements()
            .flat_map(|a| spec.iter_elements().map(move |b| (a.clone(), b)))
            .collect()
    } else {
        // fixed multiplier strides, so the sample is deterministic
        (0..64u64)
            .map(|i| {
                (
                    spec.element_at(i.wrapping_mul(0x9E3779B97F4A7C15) % q),
                    spec.element_at(i.wrapping_mul(0xC2B2AE3D27D4EB4F).wrapping_add(0x27D4) % q),
                )
            })
            .collect()
    };
    for auto in &autos {
        let m = auto.matrix();
        let image = |e: &FieldElement| spec.element(&m.mul_vec(e.coeffs()));
        for (a, b) in &pairs {
            let (fa, fb) = (image(a), image(b));
            if image(&(a + b)) != &fa + &fb || image(&(a * b)) != &fa * &fb {
                return Err(Error::Internal(format!(
                    "{auto} fails the ring homomorphism check"
                )));
            }
        }
    }
    Ok(autos)
}

/// The Galois group of F_{q^n} over F_q inside GF(p^N), where q = p^s and
/// N = s*n: cyclic of order n, generated by Phi^s.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaloisGroup {
    spec: FieldSpec,
    base_degree: u64,
    order: u64,
    base: SubfieldDescriptor,
}

impl GaloisGroup {
    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    /// s, the absolute degree of the base field F_q over the prime field.
    pub fn base_degree(&self) -> u64 {
        self.base_degree
    }

    /// n, the degree of the extension and the order of the group.
    pub fn order(&self) -> u64 {
        self.order
    }

    /// The base field F_q as a subfield of the ambient field.
    pub fn base(&self) -> &SubfieldDescriptor {
        &self.base
    }

    /// Phi^s. For the trivial extension this is the identity.
    pub fn generator(&self) -> Automorphism {
        Automorphism::new(&self.spec, self.base_degree)
    }

    /// The members Phi^{s*j} for j = 0, ..., n-1, in that order.
    pub fn members(&self) -> Vec<Automorphism> {
        (0..self.order)
            .map(|j| Automorphism::new(&self.spec, self.base_degree * j))
            .collect()
    }

    /// Matrices of the members, in member order.
    fn member_matrices(&self) -> Vec<ZpMatrix> {
        let step = self.generator().matrix();
        let mut out = Vec::with_capacity(self.order as usize);
        let mut cur = ZpMatrix::identity(self.spec.p(), self.spec.degree());
        for _ in 0..self.order {
            out.push(cur.clone());
            cur = cur.mul(&step);
        }
        out
    }
}

/// Builds the Galois group of the extension with base degree s. Checks that
/// every member fixes the base pointwise and, for field order <= 2^12, that
/// the common fixed set of all members is exactly the base subfield.
pub fn galois_group(spec: &FieldSpec, base_degree: u64) -> Result<GaloisGroup> {
    let n_abs = spec.degree() as u64;
    if base_degree == 0 || !n_abs.is_multiple_of(base_degree) {
        return Err(Error::NotADivisor {
            k: base_degree,
            n: n_abs,
        });
    }
    let base = fixed_subfield(spec, base_degree)?;
    let group = GaloisGroup {
        spec: spec.clone(),
        base_degree,
        order: n_abs / base_degree,
        base,
    };
    let mats = group.member_matrices();
    for (mat, member) in mats.iter().zip(group.members()) {
        for b in group.base.basis() {
            if mat.mul_vec(b.coeffs()) != b.coeffs() {
                return Err(Error::Internal(format!(
                    "{member} moves a base field element"
                )));
            }
        }
    }
    if spec.order() <= 1 << 12 {
        for a in spec.iter_elements() {
            let fixed_by_all = mats.iter().all(|m| m.mul_vec(a.coeffs()) == a.coeffs());
            if fixed_by_all != group.base.contains(&a) {
                return Err(Error::Internal(
                    "common fixed set of the group differs from the base subfield".into(),
                ));
            }
        }
    }
    Ok(group)
}

/// A subgroup of a cyclic Galois group: the unique one of its order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupDescriptor {
    order: u64,
    generator: Automorphism,
}

impl SubgroupDescriptor {
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn generator(&self) -> &Automorphism {
        &self.generator
    }

    /// Membership: exactly the multiples of the generator exponent.
    pub fn contains(&self, a: &Automorphism) -> bool {
        if a.spec() != self.generator.spec() {
            return false;
        }
        match self.generator.exponent() {
            0 => a.exponent() == 0,
            e => a.exponent().is_multiple_of(e),
        }
    }

    /// The members, by ascending exponent.
    pub fn members(&self) -> Vec<Automorphism> {
        let spec = self.generator.spec();
        (0..self.order)
            .map(|j| Automorphism::new(spec, self.generator.exponent() * j))
            .collect()
    }
}

/// One subgroup per divisor of the group order, ascending: the subgroup of
/// order m is generated by Phi^{s*(n/m)}.
pub fn subgroups(group: &GaloisGroup) -> Vec<SubgroupDescriptor> {
    divisors(group.order)
        .into_iter()
        .map(|m| SubgroupDescriptor {
            order: m,
            generator: Automorphism::new(&group.spec, group.base_degree * (group.order / m)),
        })
        .collect()
}

fn validate_subgroup(group: &GaloisGroup, sub: &SubgroupDescriptor) -> Result<()> {
    let expected_exponent =
        group.base_degree * (group.order / sub.order) % group.spec.degree() as u64;
    if sub.generator.spec() != &group.spec
        || !group.order.is_multiple_of(sub.order)
        || sub.generator.exponent() != expected_exponent
    {
        return Err(Error::Foreign(
            "subgroup does not belong to this group".into(),
        ));
    }
    Ok(())
}

/// The intermediate field fixed by a subgroup of order m: the subfield of
/// absolute degree s*(n/m), of degree n/m over the base.
pub fn fixed_field(group: &GaloisGroup, sub: &SubgroupDescriptor) -> Result<SubfieldDescriptor> {
    validate_subgroup(group, sub)?;
    let k_abs = group.base_degree * (group.order / sub.order);
    fixed_subfield(&group.spec, k_abs)
}

/// The subgroup of all members fixing the given intermediate field
/// pointwise. The fixing set is computed member by member and then checked
/// against the cyclic subgroup of the predicted order n / [field : base].
pub fn stabilizer(group: &GaloisGroup, field: &SubfieldDescriptor) -> Result<SubgroupDescriptor> {
    if field.ambient() != &group.spec {
        return Err(Error::Foreign(
            "field belongs to a different ambient field".into(),
        ));
    }
    if !group.base.is_subfield_of(field) {
        return Err(Error::Foreign(
            "field does not contain the base field of the extension".into(),
        ));
    }
    let k_over_base = field.degree() / group.base_degree;
    let fixing: Vec<Automorphism> = group
        .members()
        .into_iter()
        .filter(|m| {
            field
                .basis()
                .iter()
                .all(|b| frobenius(b, m.exponent()) == *b)
        })
        .collect();
    let expected = SubgroupDescriptor {
        order: group.order / k_over_base,
        generator: Automorphism::new(&group.spec, group.base_degree * k_over_base),
    };
    if fixing != expected.members() {
        return Err(Error::Internal(
            "fixing set of the field is not the predicted cyclic subgroup".into(),
        ));
    }
    Ok(expected)
}

/// One row of the Galois correspondence: a subgroup, its fixed field, and
/// the order of the quotient acting on that field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrespondenceEntry {
    subgroup: SubgroupDescriptor,
    field: SubfieldDescriptor,
    quotient_order: u64,
}

impl CorrespondenceEntry {
    pub fn subgroup(&self) -> &SubgroupDescriptor {
        &self.subgroup
    }

    pub fn field(&self) -> &SubfieldDescriptor {
        &self.field
    }

    /// [field : base] = n / subgroup order.
    pub fn quotient_order(&self) -> u64 {
        self.quotient_order
    }
}

/// The full correspondence, one entry per subgroup, ascending by subgroup
/// order. Both round-trip identities are re-verified for every entry.
pub fn correspondence_table(group: &GaloisGroup) -> Result<Vec<CorrespondenceEntry>> {
    let mut entries = Vec::new();
    for sub in subgroups(group) {
        let field = fixed_field(group, &sub)?;
        let sub_back = stabilizer(group, &field)?;
        if sub_back != sub {
            return Err(Error::Internal(
                "stabilizer of the fixed field differs from the original subgroup".into(),
            ));
        }
        let field_back = fixed_field(group, &sub_back)?;
        if field_back != field {
            return Err(Error::Internal(
                "fixed field round trip does not reproduce the field".into(),
            ));
        }
        entries.push(CorrespondenceEntry {
            quotient_order: group.order / sub.order,
            subgroup: sub,
            field,
        });
    }
    Ok(entries)
}

/// Outcome of one verification clause, with a witness when it failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClauseCheck {
    name: &'static str,
    passed: bool,
    witness: Option<String>,
}

impl ClauseCheck {
    fn pass(name: &'static str) -> ClauseCheck {
        ClauseCheck {
            name,
            passed: true,
            witness: None,
        }
    }

    fn fail(name: &'static str, witness: String) -> ClauseCheck {
        ClauseCheck {
            name,
            passed: false,
            witness: Some(witness),
        }
    }

    pub fn name(&self) -> &'static str {
        self.name
    }

    pub fn passed(&self) -> bool {
        self.passed
    }

    pub fn witness(&self) -> Option<&str> {
        self.witness.as_deref()
    }
}

/// Report of the four quotient-action clauses for one correspondence entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientActionReport {
    clauses: Vec<ClauseCheck>,
}

impl QuotientActionReport {
    pub fn clauses(&self) -> &[ClauseCheck] {
        &self.clauses
    }

    pub fn passed(&self) -> bool {
        self.clauses.iter().all(ClauseCheck::passed)
    }
}

/// Verifies how the quotient by the entry's subgroup acts on the entry's
/// field: (i) every coset representative maps the field into itself,
/// (ii) representatives of the same coset agree on the field, (iii) the
/// common fixed set of the induced action is exactly the base field, and
/// (iv) the induced action is cyclic of order quotient_order. Failures are
/// reported per clause with witnesses, not as errors.
pub fn quotient_action_check(
    group: &GaloisGroup,
    entry: &CorrespondenceEntry,
) -> Result<QuotientActionReport> {
    validate_subgroup(group, &entry.subgroup)?;
    if entry.field.ambient() != &group.spec
        || entry.quotient_order * entry.subgroup.order != group.order
        || entry.field.degree() != group.base_degree * entry.quotient_order
    {
        return Err(Error::Foreign("entry does not belong to this group".into()));
    }
    let spec = &group.spec;
    let k = entry.quotient_order;
    let m_ord = entry.subgroup.order;
    let mats = group.member_matrices();
    let field = &entry.field;
    let basis_coords: Vec<Vec<u64>> = field.basis().iter().map(|b| b.coeffs().to_vec()).collect();

    let mut clauses = Vec::with_capacity(4);

    let maps_into = 'c1: {
        for (j, mat) in mats.iter().enumerate() {
            for b in field.basis() {
                let img = spec.element(&mat.mul_vec(b.coeffs()));
                if !field.contains(&img) {
                    break 'c1 ClauseCheck::fail(
                        "representatives map the field into itself",
                        format!(
                            "{} sends {} outside the field, to {}",
                            Automorphism::new(spec, group.base_degree * j as u64),
                            b,
                            img
                        ),
                    );
                }
            }
        }
        ClauseCheck::pass("representatives map the field into itself")
    };
    clauses.push(maps_into);

    let cosets_agree = 'c2: {
        for j in 0..k {
            for t in 1..m_ord {
                let (r1, r2) = (&mats[j as usize], &mats[(j + k * t) as usize]);
                for b in field.basis() {
                    if r1.mul_vec(b.coeffs()) != r2.mul_vec(b.coeffs()) {
                        break 'c2 ClauseCheck::fail(
                            "same-coset representatives agree on the field",
                            format!(
                                "{} and {} disagree at {}",
                                Automorphism::new(spec, group.base_degree * j),
                                Automorphism::new(spec, group.base_degree * (j + k * t)),
                                b
                            ),
                        );
                    }
                }
            }
        }
        ClauseCheck::pass("same-coset representatives agree on the field")
    };
    clauses.push(cosets_agree);

    // the common fixed set of the induced action is field ∩ ker(M^s - I),
    // since the generator coset generates the whole action
    let ms = spec
        .frobenius_matrix()
        .pow(group.base_degree)
        .sub(&ZpMatrix::identity(spec.p(), spec.degree()));
    let fixed = span_kernel_intersection(&ms, &basis_coords);
    let fixed_space = RowSpace::new(spec.p(), spec.degree(), &fixed);
    let base_coords: Vec<Vec<u64>> = group
        .base
        .basis()
        .iter()
        .map(|b| b.coeffs().to_vec())
        .collect();
    let base_space = RowSpace::new(spec.p(), spec.degree(), &base_coords);
    clauses.push(if fixed_space.same_space(&base_space) {
        ClauseCheck::pass("the fixed set of the induced action is the base field")
    } else {
        ClauseCheck::fail(
            "the fixed set of the induced action is the base field",
            format!(
                "fixed set has dimension {}, base has dimension {}",
                fixed_space.dim(),
                base_space.dim()
            ),
        )
    });

    let cyclic = 'c4: {
        // order of the induced generator: least j >= 1 acting trivially
        for j in 1..k {
            if field
                .basis()
                .iter()
                .all(|b| mats[j as usize].mul_vec(b.coeffs()) == b.coeffs())
            {
                break 'c4 ClauseCheck::fail(
                    "the induced action is cyclic of the quotient order",
                    format!(
                        "{} already restricts to the identity",
                        Automorphism::new(spec, group.base_degree * j)
                    ),
                );
            }
        }
        let wrap = &mats[(k % group.order) as usize];
        if !field
            .basis()
            .iter()
            .all(|b| wrap.mul_vec(b.coeffs()) == b.coeffs())
        {
            break 'c4 ClauseCheck::fail(
                "the induced action is cyclic of the quotient order",
                format!(
                    "{} does not restrict to the identity",
                    Automorphism::new(spec, group.base_degree * k)
                ),
            );
        }
        ClauseCheck::pass("the induced action is cyclic of the quotient order")
    };
    clauses.push(cyclic);

    Ok(QuotientActionReport { clauses })
}

/// Cyclicity test for a finite abelian group given the multiset of its
/// element orders: true iff for every k in 1..=|G| the number of elements
/// of order dividing k is at most k.
pub fn is_cyclic_by_subgroup_counts(orders: &[u64]) -> bool {
    if orders.contains(&0) {
        return false;
    }
    let mut counts: BTreeMap<u64, u64> = BTreeMap::new();
    for &o in orders {
        *counts.entry(o).or_insert(0) += 1;
    }
    let n = orders.len() as u64;
    for k in 1..=n {
        let c: u64 = counts
            .iter()
            .filter(|(&o, _)| k % o == 0)
            .map(|(_, &c)| c)
            .sum();
        if c > k {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{element_order_mult, mult_generator};

    fn gf(p: u64, n: usize) -> FieldSpec {
        FieldSpec::new(p, n, None).unwrap()
    }

    #[test]
    fn automorphism_basics() {
        let f16 = gf(2, 4);
        let phi = Automorphism::new(&f16, 1);
        let x = f16.x();
        assert_eq!(phi.apply(&x).unwrap(), frobenius(&x, 1));
        assert_eq!(phi.compose(&phi).unwrap(), Automorphism::new(&f16, 2));
        assert_eq!(phi.inverse(), Automorphism::new(&f16, 3));
        assert_eq!(phi.order(), 4);
        assert_eq!(Automorphism::new(&f16, 2).order(), 2);
        assert!(Automorphism::new(&f16, 4).is_identity());
        assert_eq!(Automorphism::identity(&f16).to_string(), "id");
        assert_eq!(phi.to_string(), "Phi");
        assert_eq!(Automorphism::new(&f16, 3).to_string(), "Phi^3");
        assert_eq!(phi.apply(&gf(2, 2).x()), Err(Error::SpecMismatch));
    }

    #[test]
    fn composition_law_exhaustive() {
        let f16 = gf(2, 4);
        for a in 0..4u64 {
            for b in 0..4u64 {
                let lhs = Automorphism::new(&f16, a)
                    .compose(&Automorphism::new(&f16, b))
                    .unwrap();
                for e in f16.iter_elements() {
                    assert_eq!(
                        lhs.apply(&e).unwrap(),
                        Automorphism::new(&f16, a)
                            .apply(&Automorphism::new(&f16, b).apply(&e).unwrap())
                            .unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn all_automorphisms_worked_examples() {
        let f2 = gf(2, 1);
        let autos = all_automorphisms(&f2).unwrap();
        assert_eq!(autos.len(), 1);
        assert!(autos[0].is_identity());

        let f4 = gf(2, 2);
        let autos = all_automorphisms(&f4).unwrap();
        assert_eq!(autos.len(), 2);
        assert_eq!(autos[1].apply(&f4.x()).unwrap(), f4.element(&[1, 1]));

        assert_eq!(all_automorphisms(&gf(2, 6)).unwrap().len(), 6);
        // a larger field exercises the sampled path
        assert_eq!(all_automorphisms(&gf(3, 8)).unwrap().len(), 8);
    }

    #[test]
    fn galois_group_worked_examples() {
        let f64 = gf(2, 6);
        let g1 = galois_group(&f64, 1).unwrap();
        assert_eq!(g1.order(), 6);
        assert_eq!(g1.generator(), Automorphism::new(&f64, 1));
        assert_eq!(g1.base().order(), 2);

        let g2 = galois_group(&f64, 2).unwrap();
        assert_eq!(g2.order(), 3);
        assert_eq!(g2.generator(), Automorphism::new(&f64, 2));
        assert_eq!(g2.base().order(), 4);

        let trivial = galois_group(&f64, 6).unwrap();
        assert_eq!(trivial.order(), 1);
        assert!(trivial.generator().is_identity());

        assert_eq!(
            galois_group(&f64, 4),
            Err(Error::NotADivisor { k: 4, n: 6 })
        );

        // every member fixes the base pointwise
        for member in g2.members() {
            for b in g2.base().basis() {
                assert_eq!(member.apply(b).unwrap(), *b);
            }
        }
    }

    #[test]
    fn subgroup_enumeration_matches_brute_force() {
        let f64 = gf(2, 6);
        let group = galois_group(&f64, 1).unwrap();
        let subs = subgroups(&group);
        assert_eq!(
            subs.iter()
                .map(SubgroupDescriptor::order)
                .collect::<Vec<_>>(),
            vec![1, 2, 3, 6]
        );
        assert_eq!(
            subs.iter()
                .map(|s| s.generator().exponent())
                .collect::<Vec<_>>(),
            vec![0, 3, 2, 1]
        );

        // brute force: subsets of Z_6 closed under addition and inverse
        let n = 6u64;
        let mut closed_subsets = Vec::new();
        for mask in 0u32..(1 << n) {
            if mask & 1 == 0 {
                continue;
            }
            let members: Vec<u64> = (0..n).filter(|&j| mask >> j & 1 == 1).collect();
            let closed = members
                .iter()
                .all(|&a| members.iter().all(|&b| mask >> ((a + b) % n) & 1 == 1));
            if closed {
                closed_subsets.push(members);
            }
        }
        assert_eq!(closed_subsets.len(), subs.len());
        for sub in &subs {
            let exps: Vec<u64> = sub.members().iter().map(Automorphism::exponent).collect();
            assert!(closed_subsets.contains(&exps));
        }

        // order 4 over GF(2^4): divisors 1, 2, 4
        let group4 = galois_group(&gf(2, 4), 1).unwrap();
        assert_eq!(
            subgroups(&group4)
                .iter()
                .map(SubgroupDescriptor::order)
                .collect::<Vec<_>>(),
            vec![1, 2, 4]
        );
    }

    #[test]
    fn subgroup_membership() {
        let f64 = gf(2, 6);
        let group = galois_group(&f64, 1).unwrap();
        let order2 = subgroups(&group)
            .into_iter()
            .find(|s| s.order() == 2)
            .unwrap();
        assert!(order2.contains(&Automorphism::identity(&f64)));
        assert!(order2.contains(&Automorphism::new(&f64, 3)));
        assert!(!order2.contains(&Automorphism::new(&f64, 2)));
        assert!(!order2.contains(&Automorphism::identity(&gf(2, 2))));
    }

    #[test]
    fn fixed_field_worked_examples() {
        let f64 = gf(2, 6);
        let group = galois_group(&f64, 1).unwrap();
        let subs = subgroups(&group);

        // full group fixes exactly the base
        let full = subs.iter().find(|s| s.order() == 6).unwrap();
        let base = fixed_field(&group, full).unwrap();
        assert_eq!(base.degree(), 1);
        assert_eq!(base, *group.base());

        // trivial subgroup fixes everything
        let trivial = subs.iter().find(|s| s.order() == 1).unwrap();
        assert_eq!(fixed_field(&group, trivial).unwrap().degree(), 6);

        // order-2 subgroup (generated by Phi^3) fixes the 8-element subfield
        let order2 = subs.iter().find(|s| s.order() == 2).unwrap();
        let gf8 = fixed_field(&group, order2).unwrap();
        assert_eq!(gf8.degree(), 3);
        assert_eq!(gf8.order(), 8);

        // a subgroup from another group is rejected
        let other = galois_group(&gf(2, 4), 1).unwrap();
        let foreign = subgroups(&other).pop().unwrap();
        assert!(matches!(
            fixed_field(&group, &foreign),
            Err(Error::Foreign(_))
        ));
    }

    #[test]
    fn stabilizer_worked_examples() {
        let f64 = gf(2, 6);
        let group = galois_group(&f64, 1).unwrap();

        let full = stabilizer(&group, group.base()).unwrap();
        assert_eq!(full.order(), 6);

        let whole_field = fixed_subfield(&f64, 6).unwrap();
        assert_eq!(stabilizer(&group, &whole_field).unwrap().order(), 1);

        let gf8 = fixed_subfield(&f64, 3).unwrap();
        let stab = stabilizer(&group, &gf8).unwrap();
        assert_eq!(stab.order(), 2);
        assert_eq!(stab.generator().exponent(), 3);

        // GF(8) does not contain GF(4), so it is not intermediate for s = 2
        let group2 = galois_group(&f64, 2).unwrap();
        assert!(matches!(stabilizer(&group2, &gf8), Err(Error::Foreign(_))));

        // a subfield of a different ambient field is rejected
        let alien = fixed_subfield(&gf(2, 4), 2).unwrap();
        assert!(matches!(stabilizer(&group, &alien), Err(Error::Foreign(_))));
    }

    #[test]
    fn correspondence_table_worked_examples() {
        let f64 = gf(2, 6);
        let group = galois_group(&f64, 1).unwrap();
        let table = correspondence_table(&group).unwrap();
        assert_eq!(table.len(), 4);
        let orders: Vec<u64> = table.iter().map(|e| e.subgroup().order()).collect();
        assert_eq!(orders, vec![1, 2, 3, 6]);
        for e in &table {
            assert_eq!(e.subgroup().order() * e.quotient_order(), 6);
            assert_eq!(e.field().degree(), e.quotient_order());
            // anti-monotone: larger subgroup, smaller field
        }
        let degrees: Vec<u64> = table.iter().map(|e| e.field().degree()).collect();
        assert_eq!(degrees, vec![6, 3, 2, 1]);

        let f81 = gf(3, 4);
        let table = correspondence_table(&galois_group(&f81, 1).unwrap()).unwrap();
        assert_eq!(table.len(), 3);

        // single entry for the trivial extension
        let table = correspondence_table(&galois_group(&f64, 6).unwrap()).unwrap();
        assert_eq!(table.len(), 1);
        assert_eq!(table[0].quotient_order(), 1);
    }

    #[test]
    fn quotient_action_all_clauses_pass() {
        for (p, n, s) in [
            (2, 6, 1),
            (2, 6, 2),
            (2, 6, 3),
            (3, 4, 1),
            (3, 4, 2),
            (2, 4, 1),
        ] {
            let spec = gf(p, n);
            let group = galois_group(&spec, s).unwrap();
            for entry in correspondence_table(&group).unwrap() {
                let report = quotient_action_check(&group, &entry).unwrap();
                assert!(
                    report.passed(),
                    "clause failed for GF({p}^{n}) base {s}, subgroup order {}: {:?}",
                    entry.subgroup().order(),
                    report
                );
                assert_eq!(report.clauses().len(), 4);
            }
        }
    }

    #[test]
    fn quotient_action_rejects_foreign_entry() {
        let f64 = gf(2, 6);
        let group = galois_group(&f64, 1).unwrap();
        let other = galois_group(&gf(2, 4), 1).unwrap();
        let entry = correspondence_table(&other).unwrap().pop().unwrap();
        assert!(matches!(
            quotient_action_check(&group, &entry),
            Err(Error::Foreign(_))
        ));
    }

    #[test]
    fn galois_group_uniqueness_at_small_order() {
        // among all subsets of the automorphisms of GF(2^6) that form a
        // group, only the full set has the prime field as its fixed set
        let f64 = gf(2, 6);
        let autos = all_automorphisms(&f64).unwrap();
        let base = fixed_subfield(&f64, 1).unwrap();
        let n = autos.len() as u64;
        let mut matching = 0;
        for mask in 1u32..(1 << n) {
            if mask & 1 == 0 {
                continue;
            }
            let members: Vec<u64> = (0..n).filter(|&j| mask >> j & 1 == 1).collect();
            let closed = members
                .iter()
                .all(|&a| members.iter().all(|&b| mask >> ((a + b) % n) & 1 == 1));
            if !closed {
                continue;
            }
            let fixes_exactly_base = f64.iter_elements().all(|e| {
                let fixed = members.iter().all(|&j| frobenius(&e, j) == e);
                fixed == base.contains(&e)
            });
            if fixes_exactly_base {
                matching += 1;
                assert_eq!(members.len() as u64, n);
            }
        }
        assert_eq!(matching, 1);
    }

    #[test]
    fn cyclicity_criterion_worked_examples() {
        // U(8) has element orders {1, 2, 2, 2}
        assert!(!is_cyclic_by_subgroup_counts(&[1, 2, 2, 2]));
        // U(9) brute forced
        let mut orders = Vec::new();
        for a in 1..9u64 {
            if crate::arith::gcd(a, 9) != 1 {
                continue;
            }
            let mut t = a;
            let mut o = 1;
            while t != 1 {
                t = t * a % 9;
                o += 1;
            }
            orders.push(o);
        }
        assert!(is_cyclic_by_subgroup_counts(&orders));
        // GF(4)^*
        assert!(is_cyclic_by_subgroup_counts(&[1, 3, 3]));
        // Z2 x Z4
        assert!(!is_cyclic_by_subgroup_counts(&[1, 2, 2, 2, 4, 4, 4, 4]));
        // order zero is never an element order
        assert!(!is_cyclic_by_subgroup_counts(&[0]));
        assert!(is_cyclic_by_subgroup_counts(&[]));
    }

    #[test]
    fn multiplicative_group_orders_pass_cyclicity() {
        for spec in [gf(2, 4), gf(3, 2), gf(5, 1), gf(7, 1)] {
            let orders: Vec<u64> = spec
                .iter_elements()
                .filter(|e| !e.is_zero())
                .map(|e| element_order_mult(&e).unwrap())
                .collect();
            assert!(is_cyclic_by_subgroup_counts(&orders));
            let g = mult_generator(&spec).unwrap();
            assert_eq!(element_order_mult(&g).unwrap(), spec.order() - 1);
        }
    }
}
