//! Concrete fields: prime residue fields, polynomial quotient
//! extensions GF(p^n), the rationals as a characteristic-zero handle,
//! plus construction-time verification, structural analysis, and exact
//! linear solving.

mod analysis;
mod linear;

pub use analysis::{
    characteristic_and_prime_subfield, find_isomorphism, frobenius_fixed, mult_generator,
    verify_field_axioms, verify_splitting, CharacteristicReport, FieldIso, FrobeniusReport,
    SplittingRecord,
};
pub use linear::{linear_solve, LinearOutcome};

use thiserror::Error;

use crate::divisibility::is_prime;
use crate::modular::ZnRing;
use crate::monoid::{build_rationals, RatQ, RationalsRoute};
use crate::nat::Nat;
use crate::poly::{factor_split, find_irreducible, Field, FiniteField, Poly};

/// Largest carrier make_gf will materialize.
pub const CARRIER_CAP: u64 = 1 << 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("NotPrime: {0} is not prime")]
    NotPrime(u64),
    #[error("ReducibleModulus: divisible by {factor}")]
    ReducibleModulus { factor: String },
    #[error("CarrierCapExceeded: {requested} exceeds the cap {cap}")]
    CarrierCapExceeded { requested: u64, cap: u64 },
    #[error("CharacteristicUndetected: iteration bound exceeded")]
    CharacteristicUndetected,
    #[error("OrderMismatch: {left} vs {right}")]
    OrderMismatch { left: u64, right: u64 },
    #[error("NoRootFound: modulus has no root in the target")]
    NoRootFound,
    #[error("NoGeneratorFound: no multiplicative generator")]
    NoGeneratorFound,
    #[error("SplitCheckFailed: {0}")]
    SplitCheckFailed(&'static str),
    #[error("AxiomFailed: {0}")]
    AxiomFailed(&'static str),
    #[error("ArgumentOutOfRange: {0}")]
    ArgumentOutOfRange(&'static str),
}

impl FieldError {
    pub fn code(&self) -> &'static str {
        match self {
            FieldError::NotPrime(_) => "NotPrime",
            FieldError::ReducibleModulus { .. } => "ReducibleModulus",
            FieldError::CarrierCapExceeded { .. } => "CarrierCapExceeded",
            FieldError::CharacteristicUndetected => "CharacteristicUndetected",
            FieldError::OrderMismatch { .. } => "OrderMismatch",
            FieldError::NoRootFound => "NoRootFound",
            FieldError::NoGeneratorFound => "NoGeneratorFound",
            FieldError::SplitCheckFailed(_) => "SplitCheckFailed",
            FieldError::AxiomFailed(_) => "AxiomFailed",
            FieldError::ArgumentOutOfRange(_) => "ArgumentOutOfRange",
        }
    }
}

/// Residue field Z_p for prime p. Elements are reduced residues.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    ring: ZnRing,
}

pub fn make_prime_field(p: u64) -> Result<PrimeField, FieldError> {
    PrimeField::new(p)
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, FieldError> {
        if !is_prime(&Nat::from(p)).unwrap_or(false) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(PrimeField { ring: ZnRing::new(p).expect("primes are at least 2") })
    }

    pub fn modulus(&self) -> u64 {
        self.ring.modulus()
    }

    pub fn ring(&self) -> &ZnRing {
        &self.ring
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        self.ring.add(*a, *b)
    }

    fn neg(&self, a: &u64) -> u64 {
        self.ring.neg(*a)
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        self.ring.mul(*a, *b)
    }

    // Exhaustive search, checked on both sides; primality guarantees a hit.
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            return None;
        }
        (1..self.modulus()).find(|&b| self.ring.mul(*a, b) == 1 && self.ring.mul(b, *a) == 1)
    }

    fn elem_text(&self, a: &u64) -> String {
        a.to_string()
    }
}

impl FiniteField for PrimeField {
    fn order(&self) -> u64 {
        self.modulus()
    }

    fn element(&self, label: u64) -> u64 {
        debug_assert!(label < self.order());
        label
    }

    fn label(&self, e: &u64) -> u64 {
        *e
    }
}

/// Quotient extension: remainders modulo a monic irreducible
/// polynomial over Z_p. Elements are polynomials of degree below the
/// modulus degree; multiplication reduces through the remainder
/// projection.
#[derive(Debug, Clone, PartialEq)]
pub struct ExtField {
    base: PrimeField,
    modulus: Poly<PrimeField>,
}

/// Builds the quotient by a monic irreducible modulus of degree >= 1.
/// The construction is checked: a reducible modulus is rejected with a
/// witnessed factor, and the class of X is confirmed to be a root of
/// the lifted modulus.
pub fn make_quotient_field(
    base: PrimeField,
    modulus: Poly<PrimeField>,
) -> Result<ExtField, FieldError> {
    if modulus.field() != &base {
        return Err(FieldError::ArgumentOutOfRange("modulus must live over the base field"));
    }
    let degree = match modulus.degree() {
        None | Some(0) => {
            return Err(FieldError::ArgumentOutOfRange("modulus degree must be at least 1"))
        }
        Some(d) => d,
    };
    if !modulus.is_monic() {
        return Err(FieldError::ArgumentOutOfRange("modulus must be monic"));
    }
    if degree >= 2 {
        let (factor, cofactor) = factor_split(&modulus)
            .expect("monic modulus of degree at least 2 splits or is returned whole");
        if cofactor.degree() != Some(0) {
            return Err(FieldError::ReducibleModulus { factor: factor.to_csv() });
        }
    }
    let field = ExtField { base, modulus };
    // The class of X must be a root of the modulus lifted into the
    // quotient.
    let lifted = field.lift(&field.modulus);
    assert!(
        field.is_zero_elem(&lifted.evaluate(&field.class_of_x())),
        "class of X fails to null the lifted modulus"
    );
    Ok(field)
}

/// GF(p^n) with the canonical (lexicographically least) irreducible
/// modulus.
pub fn make_gf(p: u64, n: u32) -> Result<ExtField, FieldError> {
    let base = PrimeField::new(p)?;
    if n == 0 {
        return Err(FieldError::ArgumentOutOfRange("extension degree must be at least 1"));
    }
    let requested = (p as u128).pow(n);
    if requested > CARRIER_CAP as u128 {
        return Err(FieldError::CarrierCapExceeded {
            requested: requested.min(u64::MAX as u128) as u64,
            cap: CARRIER_CAP,
        });
    }
    let modulus =
        find_irreducible(p, n as usize).expect("an irreducible of every degree exists over Z_p");
    make_quotient_field(base, modulus)
}

impl ExtField {
    pub fn base(&self) -> &PrimeField {
        &self.base
    }

    pub fn modulus(&self) -> &Poly<PrimeField> {
        &self.modulus
    }

    pub fn characteristic(&self) -> u64 {
        self.base.modulus()
    }

    pub fn extension_degree(&self) -> usize {
        self.modulus.degree().expect("modulus is nonzero")
    }

    /// The class of X: the canonical root of the modulus inside the
    /// quotient.
    pub fn class_of_x(&self) -> Poly<PrimeField> {
        Poly::x(self.base)
            .remainder_projection(&self.modulus)
            .expect("modulus is nonzero")
    }

    /// Coefficient-wise embedding of a base-field polynomial into this
    /// field's polynomial ring.
    pub fn lift(&self, b: &Poly<PrimeField>) -> Poly<ExtField> {
        let coeffs = b
            .coeffs()
            .iter()
            .map(|&c| Poly::constant(self.base, c))
            .collect();
        Poly::new(self.clone(), coeffs)
    }

    pub fn pow(&self, a: &Poly<PrimeField>, mut e: u64) -> Poly<PrimeField> {
        let mut acc = self.one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }
}

impl Field for ExtField {
    type Elem = Poly<PrimeField>;

    fn zero(&self) -> Self::Elem {
        Poly::zero(self.base)
    }

    fn one(&self) -> Self::Elem {
        Poly::one(self.base)
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.add(b).expect("elements share the base field")
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        a.neg()
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.mul(b)
            .expect("elements share the base field")
            .remainder_projection(&self.modulus)
            .expect("modulus is nonzero")
    }

    // Nonzero x has order dividing #F − 1, so x^(#F − 2) inverts it.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        if a.is_zero() {
            return None;
        }
        Some(self.pow(a, self.order() - 2))
    }

    fn elem_text(&self, a: &Self::Elem) -> String {
        self.label(a).to_string()
    }
}

impl FiniteField for ExtField {
    fn order(&self) -> u64 {
        self.characteristic().pow(self.extension_degree() as u32)
    }

    // Labels read coefficient vectors as base-p digits, constant term
    // least significant.
    fn element(&self, label: u64) -> Self::Elem {
        debug_assert!(label < self.order());
        let p = self.characteristic();
        let mut v = label;
        let mut coeffs = Vec::with_capacity(self.extension_degree());
        while v > 0 {
            coeffs.push(v % p);
            v /= p;
        }
        Poly::new(self.base, coeffs)
    }

    fn label(&self, e: &Self::Elem) -> u64 {
        let p = self.characteristic();
        e.coeffs().iter().rev().fold(0u64, |acc, &c| acc * p + c)
    }
}

/// The rationals as a field handle; the one built-in field of
/// characteristic zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = RatQ;

    fn zero(&self) -> RatQ {
        RatQ::zero()
    }

    fn one(&self) -> RatQ {
        RatQ::one()
    }

    fn add(&self, a: &RatQ, b: &RatQ) -> RatQ {
        build_rationals(RationalsRoute::QuotientField).add(a, b)
    }

    fn neg(&self, a: &RatQ) -> RatQ {
        build_rationals(RationalsRoute::QuotientField).neg(a)
    }

    fn mul(&self, a: &RatQ, b: &RatQ) -> RatQ {
        build_rationals(RationalsRoute::QuotientField).mul(a, b)
    }

    fn inv(&self, a: &RatQ) -> Option<RatQ> {
        build_rationals(RationalsRoute::QuotientField).inv(a).ok()
    }

    fn elem_text(&self, a: &RatQ) -> String {
        a.to_string()
    }

    fn char_zero_hint(&self) -> bool {
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zp(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn poly(p: u64, coeffs: &[u64]) -> Poly<PrimeField> {
        Poly::new(zp(p), coeffs.to_vec())
    }

    #[test]
    fn prime_field_examples() {
        let f2 = make_prime_field(2).unwrap();
        assert_eq!(f2.add(&1, &1), 0);

        let f7 = make_prime_field(7).unwrap();
        assert_eq!(f7.inv(&3), Some(5));
        assert_eq!(f7.inv(&0), None);
        assert_eq!(f7.mul(&3, &5), 1);

        assert_eq!(make_prime_field(4).unwrap_err(), FieldError::NotPrime(4));
        assert_eq!(make_prime_field(1).unwrap_err(), FieldError::NotPrime(1));
        assert_eq!(make_prime_field(0).unwrap_err(), FieldError::NotPrime(0));
    }

    #[test]
    fn prime_field_inverses_pair_up() {
        for p in [2u64, 3, 5, 7, 11, 13, 97] {
            let f = zp(p);
            for a in 1..p {
                let inv = f.inv(&a).unwrap();
                assert_eq!(f.mul(&a, &inv), 1);
                assert_eq!(f.mul(&inv, &a), 1);
            }
        }
    }

    #[test]
    fn quotient_field_examples() {
        // GF(4): the class of X squares to X + 1.
        let gf4 = make_quotient_field(zp(2), poly(2, &[1, 1, 1])).unwrap();
        assert_eq!(gf4.order(), 4);
        let x = gf4.class_of_x();
        assert_eq!(gf4.mul(&x, &x), poly(2, &[1, 1]));
        assert_eq!(gf4.label(&x), 2);
        assert_eq!(gf4.label(&gf4.mul(&x, &x)), 3);

        // GF(9) via X²+1: the class of X squares to −1 = 2.
        let gf9 = make_quotient_field(zp(3), poly(3, &[1, 0, 1])).unwrap();
        let y = gf9.class_of_x();
        assert_eq!(gf9.mul(&y, &y), poly(3, &[2]));

        // Reducible modulus is rejected with a witness.
        assert_eq!(
            make_quotient_field(zp(2), poly(2, &[1, 0, 1])).unwrap_err(),
            FieldError::ReducibleModulus { factor: "1,1".to_string() }
        );
        assert!(matches!(
            make_quotient_field(zp(2), poly(2, &[1, 1, 0, 1, 1])),
            Err(FieldError::ReducibleModulus { .. })
        ));
        assert!(matches!(
            make_quotient_field(zp(2), poly(2, &[1])),
            Err(FieldError::ArgumentOutOfRange(_))
        ));
        assert!(matches!(
            make_quotient_field(zp(5), poly(5, &[1, 2])),
            Err(FieldError::ArgumentOutOfRange(_))
        ));
    }

    #[test]
    fn degree_one_quotient_mirrors_the_base() {
        // Remainders mod X − 1 are constants.
        let f = make_quotient_field(zp(3), poly(3, &[2, 1])).unwrap();
        assert_eq!(f.order(), 3);
        for a in 0..3u64 {
            for b in 0..3u64 {
                let (ea, eb) = (f.element(a), f.element(b));
                assert_eq!(f.label(&f.add(&ea, &eb)), (a + b) % 3);
                assert_eq!(f.label(&f.mul(&ea, &eb)), (a * b) % 3);
            }
        }
        // The class of X collapses to the root of the linear modulus.
        assert_eq!(f.class_of_x(), poly(3, &[1]));
    }

    #[test]
    fn gf_construction_examples() {
        let gf2 = make_gf(2, 1).unwrap();
        assert_eq!(gf2.order(), 2);
        assert_eq!(gf2.modulus(), &poly(2, &[0, 1]));

        let gf16 = make_gf(2, 4).unwrap();
        assert_eq!(gf16.modulus(), &poly(2, &[1, 1, 0, 0, 1]));
        assert_eq!(gf16.order(), 16);

        let gf9 = make_gf(3, 2).unwrap();
        assert_eq!(gf9.order(), 9);
        assert_eq!(gf9.elements().len(), 9);

        assert!(matches!(make_gf(2, 21), Err(FieldError::CarrierCapExceeded { .. })));
        assert_eq!(make_gf(6, 2).unwrap_err(), FieldError::NotPrime(6));
        assert!(matches!(make_gf(2, 0), Err(FieldError::ArgumentOutOfRange(_))));
    }

    #[test]
    fn labels_round_trip() {
        for field in [make_gf(2, 4).unwrap(), make_gf(3, 2).unwrap(), make_gf(5, 2).unwrap()] {
            for label in 0..field.order() {
                let e = field.element(label);
                assert_eq!(field.label(&e), label);
            }
        }
    }

    #[test]
    fn extension_inverses_pair_up() {
        for field in [make_gf(2, 3).unwrap(), make_gf(3, 2).unwrap(), make_gf(7, 1).unwrap()] {
            assert_eq!(field.inv(&field.zero()), None);
            for label in 1..field.order() {
                let e = field.element(label);
                let inv = field.inv(&e).unwrap();
                assert_eq!(field.mul(&e, &inv), field.one());
                assert_eq!(field.mul(&inv, &e), field.one());
            }
        }
    }

    #[test]
    fn rationals_handle() {
        let q = Rationals;
        assert!(q.char_zero_hint());
        assert_eq!(q.add(&RatQ::of(1, 2), &RatQ::of(1, 3)), RatQ::of(5, 6));
        assert_eq!(q.inv(&RatQ::of(2, 3)), Some(RatQ::of(3, 2)));
        assert_eq!(q.inv(&RatQ::zero()), None);
    }
}
