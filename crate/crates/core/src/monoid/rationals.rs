//! The rationals built two ways: signed multiplicative fractions over
//! the positive naturals, and the field of quotients over the signed
//! integers. A canonical map connects the two and is verified to be a
//! ring isomorphism on finite samples.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::divisibility::gcd_nat;
use crate::nat::Nat;

use super::grothendieck::{grothendieck, GrothendieckElement, GrothendieckGroup, NatMulMonoid};
use super::integers::{IntZ, Sign};
use super::{Monoid, MonoidError};

/// Reduced fraction: coprime numerator magnitude and denominator,
/// denominator at least 1, zero stored as 0/1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatQ {
    num: IntZ,
    den: Nat,
}

impl RatQ {
    pub fn new(num: IntZ, den: Nat) -> Result<Self, MonoidError> {
        if den.is_zero() {
            return Err(MonoidError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RatQ { num: IntZ::zero(), den: Nat::one() });
        }
        let g = gcd_nat(&num.abs(), &den);
        let mag = num.abs().div_rem(&g).0;
        let den = den.div_rem(&g).0;
        let num = match num.sign() {
            Sign::Neg => IntZ::negative(mag),
            _ => IntZ::from_nat(mag),
        };
        Ok(RatQ { num, den })
    }

    pub fn from_int(v: IntZ) -> Self {
        RatQ::new(v, Nat::one()).expect("unit denominator")
    }

    pub fn of(num: i64, den: u64) -> Self {
        RatQ::new(IntZ::from_i64(num), Nat::from(den)).expect("nonzero denominator")
    }

    pub fn zero() -> Self {
        RatQ { num: IntZ::zero(), den: Nat::one() }
    }

    pub fn one() -> Self {
        RatQ { num: IntZ::one(), den: Nat::one() }
    }

    pub fn num(&self) -> &IntZ {
        &self.num
    }

    pub fn den(&self) -> &Nat {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl PartialOrd for RatQ {
    fn partial_cmp(&self, other: &RatQ) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RatQ {
    // Denominators are positive, so cross-multiplying preserves order.
    fn cmp(&self, other: &RatQ) -> Ordering {
        let lhs = &self.num * &IntZ::from_nat(other.den.clone());
        let rhs = &other.num * &IntZ::from_nat(self.den.clone());
        lhs.cmp(&rhs)
    }
}

impl fmt::Display for RatQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("invalid rational literal")]
pub struct ParseRatError;

impl FromStr for RatQ {
    type Err = ParseRatError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (num_text, den_text) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        let num: IntZ = num_text.parse().map_err(|_| ParseRatError)?;
        let den: Nat = den_text.parse().map_err(|_| ParseRatError)?;
        RatQ::new(num, den).map_err(|_| ParseRatError)
    }
}

/// Sign wrapped around a reduced positive fraction; the first
/// construction of the rationals. Zero is (Zero, 1/1).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TwoStepRat {
    sign: Sign,
    frac: GrothendieckElement<Nat>,
}

impl TwoStepRat {
    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn frac(&self) -> &GrothendieckElement<Nat> {
        &self.frac
    }
}

fn positive_fractions() -> GrothendieckGroup<NatMulMonoid> {
    grothendieck(NatMulMonoid)
}

fn ts_zero() -> TwoStepRat {
    TwoStepRat { sign: Sign::Zero, frac: positive_fractions().identity() }
}

fn ts_one() -> TwoStepRat {
    TwoStepRat { sign: Sign::Pos, frac: positive_fractions().identity() }
}

fn ts_neg(x: &TwoStepRat) -> TwoStepRat {
    let sign = match x.sign {
        Sign::Neg => Sign::Pos,
        Sign::Zero => Sign::Zero,
        Sign::Pos => Sign::Neg,
    };
    TwoStepRat { sign, frac: x.frac.clone() }
}

fn ts_mul(x: &TwoStepRat, y: &TwoStepRat) -> TwoStepRat {
    let sign = match (x.sign, y.sign) {
        (Sign::Zero, _) | (_, Sign::Zero) => return ts_zero(),
        (a, b) if a == b => Sign::Pos,
        _ => Sign::Neg,
    };
    TwoStepRat { sign, frac: positive_fractions().op(&x.frac, &y.frac) }
}

fn ts_add(x: &TwoStepRat, y: &TwoStepRat) -> TwoStepRat {
    // Signed numerators over the common denominator, then back into a
    // signed reduced fraction.
    let signed = |t: &TwoStepRat, scale: &Nat| -> IntZ {
        let mag = t.frac.plus() * scale;
        match t.sign {
            Sign::Neg => IntZ::negative(mag),
            Sign::Zero => IntZ::zero(),
            Sign::Pos => IntZ::from_nat(mag),
        }
    };
    let num = &signed(x, y.frac.minus()) + &signed(y, x.frac.minus());
    let den = x.frac.minus() * y.frac.minus();
    if num.is_zero() {
        return ts_zero();
    }
    let frac = positive_fractions().make(num.abs(), den).expect("positive parts");
    TwoStepRat { sign: num.sign(), frac }
}

fn ts_inv(x: &TwoStepRat) -> Result<TwoStepRat, MonoidError> {
    if x.sign == Sign::Zero {
        return Err(MonoidError::DivisionByZero);
    }
    let frac = positive_fractions()
        .make(x.frac.minus().clone(), x.frac.plus().clone())
        .expect("positive parts");
    Ok(TwoStepRat { sign: x.sign, frac })
}

/// Canonical map from the two-step construction to reduced quotients.
pub fn two_step_to_quotient(x: &TwoStepRat) -> RatQ {
    let num = match x.sign {
        Sign::Zero => return RatQ::zero(),
        Sign::Pos => IntZ::from_nat(x.frac.plus().clone()),
        Sign::Neg => IntZ::negative(x.frac.plus().clone()),
    };
    RatQ::new(num, x.frac.minus().clone()).expect("positive denominator")
}

pub fn quotient_to_two_step(x: &RatQ) -> TwoStepRat {
    if x.is_zero() {
        return ts_zero();
    }
    let frac = positive_fractions()
        .make(x.num.abs(), x.den.clone())
        .expect("positive parts");
    TwoStepRat { sign: x.num.sign(), frac }
}

fn q_add(x: &RatQ, y: &RatQ) -> RatQ {
    let num = &(&x.num * &IntZ::from_nat(y.den.clone())) + &(&y.num * &IntZ::from_nat(x.den.clone()));
    RatQ::new(num, &x.den * &y.den).expect("positive denominator")
}

fn q_mul(x: &RatQ, y: &RatQ) -> RatQ {
    RatQ::new(&x.num * &y.num, &x.den * &y.den).expect("positive denominator")
}

fn q_inv(x: &RatQ) -> Result<RatQ, MonoidError> {
    if x.is_zero() {
        return Err(MonoidError::DivisionByZero);
    }
    let num = match x.num.sign() {
        Sign::Neg => IntZ::negative(x.den.clone()),
        _ => IntZ::from_nat(x.den.clone()),
    };
    RatQ::new(num, x.num.abs())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RationalsRoute {
    TwoStep,
    QuotientField,
}

/// Field handle for the rationals. Both routes present reduced
/// quotients at the boundary; the two-step route computes through
/// signed multiplicative fractions internally.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RationalField {
    route: RationalsRoute,
}

pub fn build_rationals(route: RationalsRoute) -> RationalField {
    RationalField { route }
}

impl RationalField {
    pub fn route(&self) -> RationalsRoute {
        self.route
    }

    pub fn zero(&self) -> RatQ {
        RatQ::zero()
    }

    pub fn one(&self) -> RatQ {
        RatQ::one()
    }

    pub fn add(&self, x: &RatQ, y: &RatQ) -> RatQ {
        match self.route {
            RationalsRoute::QuotientField => q_add(x, y),
            RationalsRoute::TwoStep => {
                two_step_to_quotient(&ts_add(&quotient_to_two_step(x), &quotient_to_two_step(y)))
            }
        }
    }

    pub fn mul(&self, x: &RatQ, y: &RatQ) -> RatQ {
        match self.route {
            RationalsRoute::QuotientField => q_mul(x, y),
            RationalsRoute::TwoStep => {
                two_step_to_quotient(&ts_mul(&quotient_to_two_step(x), &quotient_to_two_step(y)))
            }
        }
    }

    pub fn neg(&self, x: &RatQ) -> RatQ {
        match self.route {
            RationalsRoute::QuotientField => {
                RatQ::new(-&x.num, x.den.clone()).expect("positive denominator")
            }
            RationalsRoute::TwoStep => two_step_to_quotient(&ts_neg(&quotient_to_two_step(x))),
        }
    }

    pub fn sub(&self, x: &RatQ, y: &RatQ) -> RatQ {
        self.add(x, &self.neg(y))
    }

    pub fn inv(&self, x: &RatQ) -> Result<RatQ, MonoidError> {
        match self.route {
            RationalsRoute::QuotientField => q_inv(x),
            RationalsRoute::TwoStep => {
                Ok(two_step_to_quotient(&ts_inv(&quotient_to_two_step(x))?))
            }
        }
    }
}

/// All reduced fractions with numerator magnitude and denominator
/// bounded by `bound`, zero included.
fn fraction_sample(bound: u64) -> Vec<RatQ> {
    let mut sample = vec![RatQ::zero()];
    for den in 1..=bound {
        for num in 1..=bound {
            if gcd_nat(&Nat::from(num), &Nat::from(den)).is_one() {
                sample.push(RatQ::of(num as i64, den));
                sample.push(RatQ::of(-(num as i64), den));
            }
        }
    }
    sample
}

/// Checks that the canonical map between the two constructions
/// preserves both operations, the identities, and round-trips, over
/// every pair of sample fractions. Returns the first offending pair.
pub fn verify_route_agreement(bound: u64) -> Result<(), (RatQ, RatQ)> {
    let quotient = build_rationals(RationalsRoute::QuotientField);
    if two_step_to_quotient(&ts_zero()) != RatQ::zero()
        || two_step_to_quotient(&ts_one()) != RatQ::one()
    {
        return Err((RatQ::zero(), RatQ::one()));
    }
    let sample = fraction_sample(bound);
    for x in &sample {
        if two_step_to_quotient(&quotient_to_two_step(x)) != *x {
            return Err((x.clone(), x.clone()));
        }
    }
    for x in &sample {
        let tx = quotient_to_two_step(x);
        for y in &sample {
            let ty = quotient_to_two_step(y);
            let sum_matches =
                two_step_to_quotient(&ts_add(&tx, &ty)) == quotient.add(x, y);
            let product_matches =
                two_step_to_quotient(&ts_mul(&tx, &ty)) == quotient.mul(x, y);
            if !sum_matches || !product_matches {
                return Err((x.clone(), y.clone()));
            }
        }
    }
    Ok(())
}

/// Least n with n·x > y, found by a linear scan. Requires x > 0; such
/// an n always exists.
pub fn archimedean_witness(x: &RatQ, y: &RatQ) -> Result<Nat, MonoidError> {
    if x.num.sign() != Sign::Pos {
        return Err(MonoidError::ArgumentOutOfRange("scaling witness needs x > 0"));
    }
    // n·x > y  iff  n·(num_x·den_y) > num_y·den_x.
    let step = &x.num * &IntZ::from_nat(y.den.clone());
    let target = &y.num * &IntZ::from_nat(x.den.clone());
    let mut n = Nat::one();
    let mut acc = step.clone();
    while acc <= target {
        acc = &acc + &step;
        n = n.succ();
    }
    Ok(n)
}
