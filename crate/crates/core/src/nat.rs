use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

/// Arbitrary-size natural number, the carrier for the whole tower.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Nat(BigUint);

impl Nat {
    pub fn zero() -> Self {
        Nat(BigUint::zero())
    }

    pub fn one() -> Self {
        Nat(BigUint::one())
    }

    pub fn succ(&self) -> Self {
        Nat(&self.0 + 1u32)
    }

    /// Predecessor; `None` for zero.
    pub fn pred(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Nat(&self.0 - 1u32))
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    /// Truncated subtraction: `a - b` when `b <= a`, otherwise zero.
    pub fn monus(&self, rhs: &Nat) -> Nat {
        if self.0 >= rhs.0 {
            Nat(&self.0 - &rhs.0)
        } else {
            Nat::zero()
        }
    }

    pub fn checked_sub(&self, rhs: &Nat) -> Option<Nat> {
        if self.0 >= rhs.0 {
            Some(Nat(&self.0 - &rhs.0))
        } else {
            None
        }
    }

    /// Quotient and remainder with `rhs != 0`; panics on zero divisor.
    /// Callers wanting an error path go through `peano::div_algorithm`.
    pub(crate) fn div_rem(&self, rhs: &Nat) -> (Nat, Nat) {
        let q = &self.0 / &rhs.0;
        let r = &self.0 % &rhs.0;
        (Nat(q), Nat(r))
    }

    pub(crate) fn divisible_by(&self, rhs: &Nat) -> bool {
        (&self.0 % &rhs.0).is_zero()
    }

    pub(crate) fn rem_u64(&self, m: u64) -> u64 {
        (&self.0 % m).to_u64().expect("remainder fits the divisor")
    }

    pub(crate) fn pow_u32(&self, exp: u32) -> Nat {
        Nat(self.0.pow(exp))
    }

    pub(crate) fn big(&self) -> &BigUint {
        &self.0
    }
}

impl From<u64> for Nat {
    fn from(v: u64) -> Self {
        Nat(BigUint::from(v))
    }
}

impl From<u32> for Nat {
    fn from(v: u32) -> Self {
        Nat(BigUint::from(v))
    }
}

impl From<usize> for Nat {
    fn from(v: usize) -> Self {
        Nat(BigUint::from(v))
    }
}

impl From<BigUint> for Nat {
    fn from(v: BigUint) -> Self {
        Nat(v)
    }
}

impl Add for &Nat {
    type Output = Nat;
    fn add(self, rhs: &Nat) -> Nat {
        Nat(&self.0 + &rhs.0)
    }
}

impl Add for Nat {
    type Output = Nat;
    fn add(self, rhs: Nat) -> Nat {
        Nat(self.0 + rhs.0)
    }
}

impl Mul for &Nat {
    type Output = Nat;
    fn mul(self, rhs: &Nat) -> Nat {
        Nat(&self.0 * &rhs.0)
    }
}

impl Mul for Nat {
    type Output = Nat;
    fn mul(self, rhs: Nat) -> Nat {
        Nat(self.0 * rhs.0)
    }
}

impl fmt::Display for Nat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for Nat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Nat({})", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseNatError;

impl fmt::Display for ParseNatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid natural number literal")
    }
}

impl std::error::Error for ParseNatError {}

impl FromStr for Nat {
    type Err = ParseNatError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(ParseNatError);
        }
        BigUint::from_str(s).map(Nat).map_err(|_| ParseNatError)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_display_parse() {
        for v in [0u64, 1, 7, 4096, u64::MAX] {
            let n = Nat::from(v);
            assert_eq!(n.to_string().parse::<Nat>().unwrap(), n);
        }
    }

    #[test]
    fn parse_rejects_junk() {
        assert!("".parse::<Nat>().is_err());
        assert!("-3".parse::<Nat>().is_err());
        assert!("1_0".parse::<Nat>().is_err());
        assert!("0x10".parse::<Nat>().is_err());
    }

    #[test]
    fn monus_truncates() {
        let a = Nat::from(5u64);
        let b = Nat::from(9u64);
        assert_eq!(a.monus(&b), Nat::zero());
        assert_eq!(b.monus(&a), Nat::from(4u64));
        assert_eq!(b.checked_sub(&a), Some(Nat::from(4u64)));
        assert_eq!(a.checked_sub(&b), None);
    }

    #[test]
    fn succ_pred() {
        let n = Nat::from(41u64);
        assert_eq!(n.succ(), Nat::from(42u64));
        assert_eq!(n.succ().pred(), Some(n));
        assert_eq!(Nat::zero().pred(), None);
    }
}
