//! Structural analysis of finite fields: exhaustive axiom checking,
//! characteristic and prime subfield extraction, Frobenius fixed
//! points, multiplicative generators, splitting verification, and
//! isomorphism search between equal-order extensions.

use rayon::prelude::*;

use super::{ExtField, FieldError, PrimeField};
use crate::poly::{Field, FiniteField, Poly};

/// Largest carrier for the exhaustive (all pairs, all triples) checks.
const EXHAUSTIVE_CAP: u64 = 512;

/// How many times 1 is added to itself before giving up on detecting
/// the characteristic.
const CHAR_SEARCH_BOUND: u64 = 10_000;

fn op_table<F: FiniteField>(field: &F, op: impl Fn(&F::Elem, &F::Elem) -> F::Elem) -> Vec<u32> {
    let q = field.order() as usize;
    let elems: Vec<F::Elem> = field.elements();
    let mut table = vec![0u32; q * q];
    for a in 0..q {
        for b in 0..q {
            table[a * q + b] = field.label(&op(&elems[a], &elems[b])) as u32;
        }
    }
    table
}

/// Checks every field axiom by brute force over the whole carrier:
/// commutativity, associativity, identities, inverses, and both
/// distributive laws. Only usable for orders up to 512.
pub fn verify_field_axioms<F: FiniteField + Sync>(field: &F) -> Result<(), FieldError>
where
    F::Elem: Sync,
{
    let q = field.order();
    if q > EXHAUSTIVE_CAP {
        return Err(FieldError::ArgumentOutOfRange("carrier too large for exhaustive check"));
    }
    let q = q as usize;
    let add = op_table(field, |a, b| field.add(a, b));
    let mul = op_table(field, |a, b| field.mul(a, b));
    let zero = field.label(&field.zero()) as u32;
    let one = field.label(&field.one()) as u32;
    if zero == one {
        return Err(FieldError::AxiomFailed("additive and multiplicative identities coincide"));
    }

    for a in 0..q {
        if add[a * q + zero as usize] != a as u32 {
            return Err(FieldError::AxiomFailed("0 is not an additive identity"));
        }
        if mul[a * q + one as usize] != a as u32 {
            return Err(FieldError::AxiomFailed("1 is not a multiplicative identity"));
        }
        if !(0..q).any(|b| add[a * q + b] == zero && add[b * q + a] == zero) {
            return Err(FieldError::AxiomFailed("an element has no additive inverse"));
        }
        if a as u32 != zero
            && !(0..q).any(|b| mul[a * q + b] == one && mul[b * q + a] == one)
        {
            return Err(FieldError::AxiomFailed("a nonzero element has no multiplicative inverse"));
        }
        for b in 0..q {
            if add[a * q + b] != add[b * q + a] {
                return Err(FieldError::AxiomFailed("addition is not commutative"));
            }
            if mul[a * q + b] != mul[b * q + a] {
                return Err(FieldError::AxiomFailed("multiplication is not commutative"));
            }
        }
    }

    let triple_violation = (0..q).into_par_iter().find_map_first(|a| {
        for b in 0..q {
            let ab_sum = add[a * q + b] as usize;
            let ab_prod = mul[a * q + b] as usize;
            for c in 0..q {
                if add[ab_sum * q + c] != add[a * q + add[b * q + c] as usize] {
                    return Some("addition is not associative");
                }
                if mul[ab_prod * q + c] != mul[a * q + mul[b * q + c] as usize] {
                    return Some("multiplication is not associative");
                }
                let bc_sum = add[b * q + c] as usize;
                if mul[a * q + bc_sum] != add[ab_prod * q + mul[a * q + c] as usize] {
                    return Some("left distributivity fails");
                }
                if mul[bc_sum * q + a] != add[mul[b * q + a] as usize * q + mul[c * q + a] as usize]
                {
                    return Some("right distributivity fails");
                }
            }
        }
        None
    });
    match triple_violation {
        Some(law) => Err(FieldError::AxiomFailed(law)),
        None => Ok(()),
    }
}

/// Characteristic of a field together with its prime subfield, listed
/// as the iterates k·1 for k below the characteristic. Characteristic
/// zero reports an empty subfield listing.
#[derive(Debug, Clone, PartialEq)]
pub struct CharacteristicReport<E> {
    pub characteristic: u64,
    pub prime_subfield: Vec<E>,
}

/// Finds the least n >= 1 with n·1 = 0 by direct iteration. Fields
/// flagged as characteristic zero report 0 after the search bound;
/// anything else that exceeds the bound is refused rather than
/// guessed.
pub fn characteristic_and_prime_subfield<F: Field>(
    field: &F,
) -> Result<CharacteristicReport<F::Elem>, FieldError> {
    let one = field.one();
    let mut acc = field.zero();
    let mut iterates = vec![field.zero()];
    let mut characteristic = None;
    for n in 1..=CHAR_SEARCH_BOUND {
        acc = field.add(&acc, &one);
        if field.is_zero_elem(&acc) {
            characteristic = Some(n);
            break;
        }
        iterates.push(acc.clone());
    }
    let characteristic = match characteristic {
        Some(n) => n,
        None if field.char_zero_hint() => {
            return Ok(CharacteristicReport { characteristic: 0, prime_subfield: Vec::new() })
        }
        None => return Err(FieldError::CharacteristicUndetected),
    };
    verify_prime_subfield(field, characteristic, &iterates);
    Ok(CharacteristicReport { characteristic, prime_subfield: iterates })
}

// The map k ↦ k·1 from Z_char must be an injective ring homomorphism.
// Checked on all pairs for small characteristics, on a stride sample
// above that.
fn verify_prime_subfield<F: Field>(field: &F, characteristic: u64, iterates: &[F::Elem]) {
    let n = characteristic as usize;
    assert_eq!(iterates.len(), n, "one iterate per residue");
    for j in 0..n {
        for k in j + 1..n {
            assert!(iterates[j] != iterates[k], "iterates of 1 repeat before the characteristic");
        }
    }
    let stride = if n <= EXHAUSTIVE_CAP as usize { 1 } else { n / EXHAUSTIVE_CAP as usize + 1 };
    for j in (0..n).step_by(stride) {
        for k in (0..n).step_by(stride) {
            let sum = field.add(&iterates[j], &iterates[k]);
            assert!(sum == iterates[(j + k) % n], "iterates fail to track addition");
            let prod = field.mul(&iterates[j], &iterates[k]);
            assert!(prod == iterates[(j * k) % n], "iterates fail to track multiplication");
        }
    }
}

/// The Frobenius power map x ↦ x^(p^m) on an extension field: its
/// image of every element and the subfield it fixes.
#[derive(Debug, Clone, PartialEq)]
pub struct FrobeniusReport {
    pub power: u64,
    pub images: Vec<Poly<PrimeField>>,
    pub fixed: Vec<Poly<PrimeField>>,
}

/// Applies the m-fold Frobenius x ↦ x^(p^m) to the whole carrier,
/// confirms it is a field automorphism, and extracts the fixed
/// subfield (checked to be closed under all four operations).
pub fn frobenius_fixed(field: &ExtField, m: u64) -> Result<FrobeniusReport, FieldError> {
    if m == 0 {
        return Err(FieldError::ArgumentOutOfRange("Frobenius power must be at least 1"));
    }
    let p = field.characteristic();
    let q = field.order();
    let elems = field.elements();
    let images: Vec<Poly<PrimeField>> = elems
        .iter()
        .map(|e| {
            let mut x = e.clone();
            for _ in 0..m {
                x = field.pow(&x, p);
            }
            x
        })
        .collect();

    let mut seen = vec![false; q as usize];
    for img in &images {
        let label = field.label(img) as usize;
        assert!(!seen[label], "Frobenius image repeats; not a bijection");
        seen[label] = true;
    }
    if q <= EXHAUSTIVE_CAP {
        for a in 0..q as usize {
            for b in 0..q as usize {
                let sum = field.add(&elems[a], &elems[b]);
                assert!(
                    images[field.label(&sum) as usize] == field.add(&images[a], &images[b]),
                    "Frobenius fails additivity"
                );
                let prod = field.mul(&elems[a], &elems[b]);
                assert!(
                    images[field.label(&prod) as usize] == field.mul(&images[a], &images[b]),
                    "Frobenius fails multiplicativity"
                );
            }
        }
    }

    let fixed: Vec<Poly<PrimeField>> = elems
        .iter()
        .zip(&images)
        .filter(|(e, img)| e == img)
        .map(|(e, _)| e.clone())
        .collect();
    verify_subfield(field, &fixed);
    Ok(FrobeniusReport { power: m, images, fixed })
}

// Containment of 0 and 1 plus closure under +, ·, negation, and
// inversion of nonzero elements.
fn verify_subfield(field: &ExtField, subset: &[Poly<PrimeField>]) {
    assert!(subset.contains(&field.zero()), "fixed set misses 0");
    assert!(subset.contains(&field.one()), "fixed set misses 1");
    for a in subset {
        assert!(subset.contains(&field.neg(a)), "fixed set not closed under negation");
        if !a.is_zero() {
            let inv = field.inv(a).expect("nonzero element inverts");
            assert!(subset.contains(&inv), "fixed set not closed under inversion");
        }
        for b in subset {
            assert!(subset.contains(&field.add(a, b)), "fixed set not closed under addition");
            assert!(
                subset.contains(&field.mul(a, b)),
                "fixed set not closed under multiplication"
            );
        }
    }
}

/// First element (in label order) whose powers exhaust the nonzero
/// carrier. Requires at least three elements so the multiplicative
/// group is nontrivial.
pub fn mult_generator<F: FiniteField>(field: &F) -> Result<F::Elem, FieldError> {
    let q = field.order();
    if q < 3 {
        return Err(FieldError::ArgumentOutOfRange(
            "generator search needs at least three elements",
        ));
    }
    for label in 1..q {
        let candidate = field.element(label);
        let mut x = candidate.clone();
        let mut order = 1u64;
        while x != field.one() {
            x = field.mul(&x, &candidate);
            order += 1;
            debug_assert!(order <= q, "power orbit escapes the group");
        }
        if order == q - 1 {
            return Ok(candidate);
        }
    }
    Err(FieldError::NoGeneratorFound)
}

/// Outcome of checking that X^q − X splits into distinct linear
/// factors over a field of order q.
#[derive(Debug, Clone, PartialEq)]
pub struct SplittingRecord {
    pub order: u64,
    pub product: Poly<ExtField>,
}

/// Multiplies out ∏ (X − α) over every α in the carrier and confirms
/// it equals X^q − X, that the derivative of X^q − X is the constant
/// −1, and that every element is a root. Only for orders up to 512.
pub fn verify_splitting(field: &ExtField) -> Result<SplittingRecord, FieldError> {
    let q = field.order();
    if q > EXHAUSTIVE_CAP {
        return Err(FieldError::ArgumentOutOfRange("carrier too large for splitting check"));
    }
    let x = Poly::x(field.clone());
    let mut product = Poly::one(field.clone());
    for label in 0..q {
        let alpha = field.element(label);
        let linear = x.sub(&Poly::constant(field.clone(), alpha)).expect("same field");
        product = product.mul(&linear).expect("same field");
    }
    let target = Poly::monomial(field.clone(), field.one(), q as usize)
        .sub(&x)
        .expect("same field");
    if product != target {
        return Err(FieldError::SplitCheckFailed("product of linear factors misses X^q - X"));
    }
    let minus_one = Poly::constant(field.clone(), field.neg(&field.one()));
    if target.derivative() != minus_one {
        return Err(FieldError::SplitCheckFailed("derivative of X^q - X is not -1"));
    }
    for label in 0..q {
        if !field.is_zero_elem(&target.evaluate(&field.element(label))) {
            return Err(FieldError::SplitCheckFailed("an element fails to be a root of X^q - X"));
        }
    }
    Ok(SplittingRecord { order: q, product })
}

/// A verified isomorphism between two extension fields of the same
/// order, tabulated on the whole carrier.
#[derive(Debug, Clone, PartialEq)]
pub struct FieldIso {
    source: ExtField,
    target: ExtField,
    image_of_generator: Poly<PrimeField>,
    forward: Vec<Poly<PrimeField>>,
}

impl FieldIso {
    pub fn source(&self) -> &ExtField {
        &self.source
    }

    pub fn target(&self) -> &ExtField {
        &self.target
    }

    /// Where the class of X in the source lands in the target.
    pub fn image_of_generator(&self) -> &Poly<PrimeField> {
        &self.image_of_generator
    }

    pub fn apply(&self, u: &Poly<PrimeField>) -> Poly<PrimeField> {
        self.forward[self.source.label(u) as usize].clone()
    }
}

/// Finds an isomorphism between two extensions of equal order by
/// locating a root β of the source modulus inside the target and
/// mapping u(X) ↦ u(β). The first root in label order is taken, and
/// the resulting map is checked to be a bijection preserving both
/// operations on every pair. Only for orders up to 512.
pub fn find_isomorphism(source: &ExtField, target: &ExtField) -> Result<FieldIso, FieldError> {
    let (ql, qr) = (source.order(), target.order());
    if ql != qr {
        return Err(FieldError::OrderMismatch { left: ql, right: qr });
    }
    if ql > EXHAUSTIVE_CAP {
        return Err(FieldError::ArgumentOutOfRange("carrier too large for isomorphism search"));
    }
    let q = ql;
    let lifted = target.lift(source.modulus());
    let beta = (0..q)
        .map(|label| target.element(label))
        .find(|candidate| target.is_zero_elem(&lifted.evaluate(candidate)))
        .ok_or(FieldError::NoRootFound)?;

    let forward: Vec<Poly<PrimeField>> = (0..q)
        .map(|label| target.lift(&source.element(label)).evaluate(&beta))
        .collect();

    let mut seen = vec![false; q as usize];
    for img in &forward {
        let label = target.label(img) as usize;
        assert!(!seen[label], "evaluation map repeats; not a bijection");
        seen[label] = true;
    }
    assert!(forward[0].is_zero(), "zero fails to map to zero");
    assert!(forward[1] == target.one(), "one fails to map to one");
    for a in 0..q as usize {
        for b in 0..q as usize {
            let (ea, eb) = (source.element(a as u64), source.element(b as u64));
            let sum = source.label(&source.add(&ea, &eb)) as usize;
            assert!(
                forward[sum] == target.add(&forward[a], &forward[b]),
                "map fails to preserve addition"
            );
            let prod = source.label(&source.mul(&ea, &eb)) as usize;
            assert!(
                forward[prod] == target.mul(&forward[a], &forward[b]),
                "map fails to preserve multiplication"
            );
        }
    }

    let image_of_generator = forward[source.label(&source.class_of_x()) as usize].clone();
    Ok(FieldIso {
        source: source.clone(),
        target: target.clone(),
        image_of_generator,
        forward,
    })
}
