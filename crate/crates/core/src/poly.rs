//! Formal polynomials over an abstract field: dense canonical
//! coefficient vectors, ring arithmetic, the division algorithm with
//! its remainder projection, Horner evaluation, root enumeration,
//! the formal derivative, and irreducibility by trial division.

use std::fmt;

use thiserror::Error;

use crate::field::PrimeField;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("FieldMismatch: operands live over different fields")]
    FieldMismatch,
    #[error("DivisionByZeroPoly: division by the zero polynomial")]
    DivisionByZeroPoly,
    #[error("ZeroPolynomial: the zero polynomial is not a valid argument")]
    ZeroPolynomial,
    #[error("NoIrreducibleFound: exhausted candidates of the requested degree")]
    NoIrreducibleFound,
    #[error("ArgumentOutOfRange: {0}")]
    ArgumentOutOfRange(&'static str),
}

impl PolyError {
    pub fn code(&self) -> &'static str {
        match self {
            PolyError::FieldMismatch => "FieldMismatch",
            PolyError::DivisionByZeroPoly => "DivisionByZeroPoly",
            PolyError::ZeroPolynomial => "ZeroPolynomial",
            PolyError::NoIrreducibleFound => "NoIrreducibleFound",
            PolyError::ArgumentOutOfRange(_) => "ArgumentOutOfRange",
        }
    }
}

/// Field operation suite. `inv` is defined exactly on nonzero elements.
pub trait Field: Clone + PartialEq + fmt::Debug {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn elem_text(&self, a: &Self::Elem) -> String;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_zero_elem(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    /// True only for the built-in characteristic-zero handle.
    fn char_zero_hint(&self) -> bool {
        false
    }
}

/// Finite field with a canonical enumeration. Labels run over
/// [0, order); label 0 is zero and label 1 is one.
pub trait FiniteField: Field {
    fn order(&self) -> u64;
    fn element(&self, label: u64) -> Self::Elem;
    fn label(&self, e: &Self::Elem) -> u64;

    fn elements(&self) -> Vec<Self::Elem> {
        (0..self.order()).map(|l| self.element(l)).collect()
    }
}

/// Dense polynomial in canonical form: no trailing zero coefficients.
/// The zero polynomial has an empty coefficient vector and no degree.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly<F: Field> {
    field: F,
    coeffs: Vec<F::Elem>,
}

impl<F: Field> Poly<F> {
    pub fn new(field: F, mut coeffs: Vec<F::Elem>) -> Self {
        while coeffs.last().map(|c| field.is_zero_elem(c)).unwrap_or(false) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn zero(field: F) -> Self {
        Poly { field, coeffs: Vec::new() }
    }

    pub fn one(field: F) -> Self {
        let c = field.one();
        Poly::new(field, vec![c])
    }

    pub fn constant(field: F, c: F::Elem) -> Self {
        Poly::new(field, vec![c])
    }

    /// c·X^k.
    pub fn monomial(field: F, c: F::Elem, k: usize) -> Self {
        let mut coeffs = vec![field.zero(); k + 1];
        coeffs[k] = c;
        Poly::new(field, coeffs)
    }

    pub fn x(field: F) -> Self {
        let one = field.one();
        Poly::monomial(field, one, 1)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> F::Elem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&F::Elem> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Some(&self.field.one())
    }

    fn same_field(&self, other: &Poly<F>) -> Result<(), PolyError> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(PolyError::FieldMismatch)
        }
    }

    pub fn add(&self, other: &Poly<F>) -> Result<Poly<F>, PolyError> {
        self.same_field(other)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| self.field.add(&self.coeff(i), &other.coeff(i))).collect();
        Ok(Poly::new(self.field.clone(), coeffs))
    }

    pub fn sub(&self, other: &Poly<F>) -> Result<Poly<F>, PolyError> {
        self.same_field(other)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| self.field.sub(&self.coeff(i), &other.coeff(i))).collect();
        Ok(Poly::new(self.field.clone(), coeffs))
    }

    pub fn neg(&self) -> Poly<F> {
        let coeffs = self.coeffs.iter().map(|c| self.field.neg(c)).collect();
        Poly::new(self.field.clone(), coeffs)
    }

    pub fn mul(&self, other: &Poly<F>) -> Result<Poly<F>, PolyError> {
        self.same_field(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(self.field.clone()));
        }
        let mut coeffs = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = self.field.add(&coeffs[i + j], &self.field.mul(a, b));
            }
        }
        Ok(Poly::new(self.field.clone(), coeffs))
    }

    pub fn scale(&self, c: &F::Elem) -> Poly<F> {
        let coeffs = self.coeffs.iter().map(|a| self.field.mul(a, c)).collect();
        Poly::new(self.field.clone(), coeffs)
    }

    /// Division algorithm: self = q·a + r with r zero or
    /// deg(r) < deg(a). The pair is unique.
    pub fn divmod(&self, a: &Poly<F>) -> Result<(Poly<F>, Poly<F>), PolyError> {
        self.same_field(a)?;
        if a.is_zero() {
            return Err(PolyError::DivisionByZeroPoly);
        }
        let da = a.coeffs.len() - 1;
        let lead_inv = self.field.inv(a.leading().expect("nonzero")).expect("leading is nonzero");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![self.field.zero(); self.coeffs.len().saturating_sub(da)];
        while rem.len() > da && !rem.is_empty() {
            let dr = rem.len() - 1;
            let factor = self.field.mul(rem.last().expect("nonempty"), &lead_inv);
            let shift = dr - da;
            quot[shift] = factor.clone();
            for (i, c) in a.coeffs.iter().enumerate() {
                rem[shift + i] = self.field.sub(&rem[shift + i], &self.field.mul(&factor, c));
            }
            while rem.last().map(|c| self.field.is_zero_elem(c)).unwrap_or(false) {
                rem.pop();
            }
            // The leading term cancels exactly, so the length drops.
            debug_assert!(rem.len() <= dr);
        }
        Ok((Poly::new(self.field.clone(), quot), Poly::new(self.field.clone(), rem)))
    }

    /// Remainder projection onto representatives of degree below the
    /// modulus; idempotent.
    pub fn remainder_projection(&self, modulus: &Poly<F>) -> Result<Poly<F>, PolyError> {
        Ok(self.divmod(modulus)?.1)
    }

    /// Horner evaluation at a point; a ring homomorphism into the field.
    pub fn evaluate(&self, alpha: &F::Elem) -> F::Elem {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = self.field.add(&self.field.mul(&acc, alpha), c);
        }
        acc
    }

    /// Formal derivative: coefficient i becomes (i+1)·c_{i+1}, the
    /// integer factor acting by repeated addition in the field.
    pub fn derivative(&self) -> Poly<F> {
        if self.coeffs.len() <= 1 {
            return Poly::zero(self.field.clone());
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| small_multiple(&self.field, i as u64, c))
            .collect();
        Poly::new(self.field.clone(), coeffs)
    }

    pub fn monic(&self) -> Option<Poly<F>> {
        let inv = self.field.inv(self.leading()?)?;
        Some(self.scale(&inv))
    }

    /// Pretty form with ascending terms, e.g. `1 + x + x^2`.
    pub fn pretty(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let one = self.field.one();
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !self.field.is_zero_elem(c))
            .map(|(i, c)| {
                let coeff_text = self.field.elem_text(c);
                match (i, c == &one) {
                    (0, _) => coeff_text,
                    (1, true) => "x".to_string(),
                    (1, false) => format!("{coeff_text}x"),
                    (_, true) => format!("x^{i}"),
                    (_, false) => format!("{coeff_text}x^{i}"),
                }
            })
            .collect();
        terms.join(" + ")
    }
}

/// k·x by repeated addition.
fn small_multiple<F: Field>(field: &F, k: u64, x: &F::Elem) -> F::Elem {
    let mut acc = field.zero();
    for _ in 0..k {
        acc = field.add(&acc, x);
    }
    acc
}

impl<F: FiniteField> Poly<F> {
    /// Comma format: ascending base-10 coefficient labels, `0` for the
    /// zero polynomial. Bit-exact inverse of `from_csv`.
    pub fn to_csv(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.coeffs
            .iter()
            .map(|c| self.field.label(c).to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn from_csv(field: F, text: &str) -> Result<Poly<F>, ParsePolyError> {
        let labels: Vec<u64> = text
            .split(',')
            .map(|tok| tok.trim().parse().map_err(|_| ParsePolyError("invalid coefficient")))
            .collect::<Result<_, _>>()?;
        if labels.is_empty() {
            return Err(ParsePolyError("no coefficients"));
        }
        if labels.iter().any(|&l| l >= field.order()) {
            return Err(ParsePolyError("coefficient label outside the field"));
        }
        if labels.len() > 1 && *labels.last().expect("nonempty") == 0 {
            return Err(ParsePolyError("trailing zero coefficients"));
        }
        let coeffs = labels.iter().map(|&l| field.element(l)).collect();
        Ok(Poly::new(field, coeffs))
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("invalid polynomial literal: {0}")]
pub struct ParsePolyError(pub &'static str);

/// All roots in a finite field, in ascending label order. Every root
/// is cross-checked to yield a zero remainder against X − α.
pub fn roots<F: FiniteField>(b: &Poly<F>) -> Result<Vec<F::Elem>, PolyError> {
    if b.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let field = b.field().clone();
    let mut found = Vec::new();
    for label in 0..field.order() {
        let alpha = field.element(label);
        if field.is_zero_elem(&b.evaluate(&alpha)) {
            let linear = Poly::new(
                field.clone(),
                vec![field.neg(&alpha), field.one()],
            );
            let (_, r) = b.divmod(&linear)?;
            assert!(r.is_zero(), "root must produce a linear factor");
            found.push(alpha);
        }
    }
    Ok(found)
}

fn candidate_count(order: u64, degree: usize) -> u128 {
    (order as u128).pow(degree as u32)
}

/// Monic polynomial of the given degree whose low coefficients are the
/// base-`order` digits of `v`, least significant first.
fn monic_candidate<F: FiniteField>(field: &F, degree: usize, mut v: u128) -> Poly<F> {
    let order = field.order() as u128;
    let mut coeffs = Vec::with_capacity(degree + 1);
    for _ in 0..degree {
        coeffs.push(field.element((v % order) as u64));
        v /= order;
    }
    coeffs.push(field.one());
    Poly::new(field.clone(), coeffs)
}

fn first_monic_divisor<F: FiniteField>(b: &Poly<F>) -> Result<Option<Poly<F>>, PolyError> {
    let deg = b.degree().ok_or(PolyError::ZeroPolynomial)?;
    let field = b.field();
    for d in 1..=deg / 2 {
        for v in 0..candidate_count(field.order(), d) {
            let cand = monic_candidate(field, d, v);
            if b.divmod(&cand)?.1.is_zero() {
                return Ok(Some(cand));
            }
        }
    }
    Ok(None)
}

/// Irreducibility by trial division over every monic candidate of
/// degree up to half the argument's degree.
pub fn is_irreducible<F: FiniteField>(a: &Poly<F>) -> Result<bool, PolyError> {
    match a.degree() {
        None => Err(PolyError::ZeroPolynomial),
        Some(0) => Err(PolyError::ArgumentOutOfRange("constants are not factorization subjects")),
        Some(_) => Ok(first_monic_divisor(a)?.is_none()),
    }
}

/// Lexicographically least monic irreducible of degree n over Z_p:
/// candidates ascend as base-p numbers, constant coefficient least
/// significant.
pub fn find_irreducible(p: u64, n: usize) -> Result<Poly<PrimeField>, PolyError> {
    let field = PrimeField::new(p)
        .map_err(|_| PolyError::ArgumentOutOfRange("modulus base must be prime"))?;
    if n == 0 {
        return Err(PolyError::ArgumentOutOfRange("degree must be at least 1"));
    }
    for v in 0..candidate_count(p, n) {
        let cand = monic_candidate(&field, n, v);
        if n == 1 || is_irreducible(&cand)? {
            return Ok(cand);
        }
    }
    // Unreachable: an irreducible of every degree exists over Z_p.
    Err(PolyError::NoIrreducibleFound)
}

/// Splits off the least monic irreducible divisor: returns (a, c) with
/// b = a·c and a irreducible. An irreducible input comes back monic
/// with its leading coefficient as the cofactor.
pub fn factor_split<F: FiniteField>(b: &Poly<F>) -> Result<(Poly<F>, Poly<F>), PolyError> {
    let deg = b.degree().ok_or(PolyError::ZeroPolynomial)?;
    if deg < 2 {
        return Err(PolyError::ArgumentOutOfRange("splitting needs degree at least 2"));
    }
    if let Some(a) = first_monic_divisor(b)? {
        let (q, r) = b.divmod(&a)?;
        debug_assert!(r.is_zero());
        return Ok((a, q));
    }
    let field = b.field().clone();
    let lead = Poly::constant(field, b.leading().expect("nonzero").clone());
    Ok((b.monic().expect("nonzero"), lead))
}
