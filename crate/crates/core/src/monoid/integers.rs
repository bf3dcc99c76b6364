//! Signed integers in sign-magnitude form, with ring structure routed
//! through the formal-difference completion of the additive naturals.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use crate::nat::Nat;

use super::grothendieck::{
    grothendieck, signed_iterate, Group, GrothendieckElement, GrothendieckGroup, NatAddMonoid,
};
use super::{Monoid, MonoidError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Neg,
    Zero,
    Pos,
}

/// Integer as a sign and a magnitude. Canonical: the magnitude is zero
/// exactly when the sign is Zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntZ {
    sign: Sign,
    magnitude: Nat,
}

impl IntZ {
    pub fn zero() -> Self {
        IntZ { sign: Sign::Zero, magnitude: Nat::zero() }
    }

    pub fn one() -> Self {
        IntZ::from_nat(Nat::one())
    }

    pub fn from_nat(magnitude: Nat) -> Self {
        if magnitude.is_zero() {
            IntZ::zero()
        } else {
            IntZ { sign: Sign::Pos, magnitude }
        }
    }

    pub fn negative(magnitude: Nat) -> Self {
        if magnitude.is_zero() {
            IntZ::zero()
        } else {
            IntZ { sign: Sign::Neg, magnitude }
        }
    }

    pub fn from_i64(v: i64) -> Self {
        let magnitude = Nat::from((v as i128).unsigned_abs() as u64);
        match v.cmp(&0) {
            Ordering::Less => IntZ::negative(magnitude),
            Ordering::Equal => IntZ::zero(),
            Ordering::Greater => IntZ::from_nat(magnitude),
        }
    }

    pub fn to_i64(&self) -> Option<i64> {
        let mag = self.magnitude.to_u64()?;
        match self.sign {
            Sign::Zero => Some(0),
            Sign::Pos => i64::try_from(mag).ok(),
            Sign::Neg => i64::try_from(mag).ok().map(|m| -m),
        }
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn magnitude(&self) -> &Nat {
        &self.magnitude
    }

    pub fn is_zero(&self) -> bool {
        self.sign == Sign::Zero
    }

    pub fn is_negative(&self) -> bool {
        self.sign == Sign::Neg
    }

    pub fn abs(&self) -> Nat {
        self.magnitude.clone()
    }
}

impl Add for &IntZ {
    type Output = IntZ;

    fn add(self, other: &IntZ) -> IntZ {
        match (self.sign, other.sign) {
            (Sign::Zero, _) => other.clone(),
            (_, Sign::Zero) => self.clone(),
            (a, b) if a == b => {
                let magnitude = &self.magnitude + &other.magnitude;
                if a == Sign::Pos {
                    IntZ::from_nat(magnitude)
                } else {
                    IntZ::negative(magnitude)
                }
            }
            _ => {
                // Opposite signs: the larger magnitude wins.
                match self.magnitude.cmp(&other.magnitude) {
                    Ordering::Equal => IntZ::zero(),
                    Ordering::Greater => {
                        let magnitude = self.magnitude.monus(&other.magnitude);
                        if self.sign == Sign::Pos {
                            IntZ::from_nat(magnitude)
                        } else {
                            IntZ::negative(magnitude)
                        }
                    }
                    Ordering::Less => {
                        let magnitude = other.magnitude.monus(&self.magnitude);
                        if other.sign == Sign::Pos {
                            IntZ::from_nat(magnitude)
                        } else {
                            IntZ::negative(magnitude)
                        }
                    }
                }
            }
        }
    }
}

impl Neg for &IntZ {
    type Output = IntZ;

    fn neg(self) -> IntZ {
        match self.sign {
            Sign::Zero => IntZ::zero(),
            Sign::Pos => IntZ::negative(self.magnitude.clone()),
            Sign::Neg => IntZ::from_nat(self.magnitude.clone()),
        }
    }
}

impl Sub for &IntZ {
    type Output = IntZ;

    fn sub(self, other: &IntZ) -> IntZ {
        self + &(-other)
    }
}

impl Mul for &IntZ {
    type Output = IntZ;

    fn mul(self, other: &IntZ) -> IntZ {
        let magnitude = &self.magnitude * &other.magnitude;
        match (self.sign, other.sign) {
            (Sign::Zero, _) | (_, Sign::Zero) => IntZ::zero(),
            (a, b) if a == b => IntZ::from_nat(magnitude),
            _ => IntZ::negative(magnitude),
        }
    }
}

impl PartialOrd for IntZ {
    fn partial_cmp(&self, other: &IntZ) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for IntZ {
    fn cmp(&self, other: &IntZ) -> Ordering {
        let rank = |s: Sign| match s {
            Sign::Neg => 0u8,
            Sign::Zero => 1,
            Sign::Pos => 2,
        };
        match rank(self.sign).cmp(&rank(other.sign)) {
            Ordering::Equal => match self.sign {
                Sign::Pos => self.magnitude.cmp(&other.magnitude),
                Sign::Neg => other.magnitude.cmp(&self.magnitude),
                Sign::Zero => Ordering::Equal,
            },
            unequal => unequal,
        }
    }
}

impl fmt::Display for IntZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign == Sign::Neg {
            write!(f, "-{}", self.magnitude)
        } else {
            write!(f, "{}", self.magnitude)
        }
    }
}

impl FromStr for IntZ {
    type Err = crate::nat::ParseNatError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.strip_prefix('-') {
            Some(rest) => Ok(IntZ::negative(rest.parse()?)),
            None => Ok(IntZ::from_nat(s.parse()?)),
        }
    }
}

/// The integers as an additive group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct IntAddGroup;

impl Monoid for IntAddGroup {
    type Elem = IntZ;

    fn identity(&self) -> IntZ {
        IntZ::zero()
    }

    fn op(&self, a: &IntZ, b: &IntZ) -> IntZ {
        a + b
    }
}

impl Group for IntAddGroup {
    fn inverse(&self, a: &IntZ) -> IntZ {
        -a
    }
}

/// The ring (Z, +, ·, 0, 1). Addition runs through the
/// formal-difference group of the naturals; multiplication is the
/// sign-split product, which agrees with repeated signed iteration.
#[derive(Debug, Clone)]
pub struct IntegerRing {
    group: GrothendieckGroup<NatAddMonoid>,
}

pub fn build_integers() -> IntegerRing {
    IntegerRing { group: grothendieck(NatAddMonoid) }
}

impl IntegerRing {
    pub fn group(&self) -> &GrothendieckGroup<NatAddMonoid> {
        &self.group
    }

    pub fn zero(&self) -> IntZ {
        IntZ::zero()
    }

    pub fn one(&self) -> IntZ {
        IntZ::one()
    }

    pub fn to_difference(&self, x: &IntZ) -> GrothendieckElement<Nat> {
        let (plus, minus) = match x.sign {
            Sign::Neg => (Nat::zero(), x.magnitude.clone()),
            _ => (x.magnitude.clone(), Nat::zero()),
        };
        self.group.make(plus, minus).expect("naturals are always in carrier")
    }

    pub fn from_difference(&self, d: &GrothendieckElement<Nat>) -> IntZ {
        if d.minus().is_zero() {
            IntZ::from_nat(d.plus().clone())
        } else {
            IntZ::negative(d.minus().clone())
        }
    }

    pub fn add(&self, x: &IntZ, y: &IntZ) -> IntZ {
        let sum = self.group.op(&self.to_difference(x), &self.to_difference(y));
        self.from_difference(&sum)
    }

    pub fn neg(&self, x: &IntZ) -> IntZ {
        self.from_difference(&self.group.inverse(&self.to_difference(x)))
    }

    pub fn sub(&self, x: &IntZ, y: &IntZ) -> IntZ {
        self.add(x, &self.neg(y))
    }

    pub fn mul(&self, x: &IntZ, y: &IntZ) -> IntZ {
        x * y
    }

    /// Product as the x-th signed iterate of y under addition; the
    /// defining form of multiplication, kept for cross-checks.
    pub fn mul_by_signed_iteration(&self, x: &IntZ, y: &IntZ) -> Result<IntZ, MonoidError> {
        signed_iterate(&IntAddGroup, y, x)
    }
}
