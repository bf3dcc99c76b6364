//! Completion of a commutative cancellative monoid into a group of
//! formal differences, plus signed iterates in any group.

use crate::divisibility::gcd_nat;
use crate::nat::Nat;

use super::integers::{IntZ, Sign};
use super::{mon_iterate, monoid_classify, FiniteMonoid, Monoid, MonoidError};

/// Commutative cancellative monoid with a chosen canonical form for
/// formal differences. reduce_pair(a, b) must pick the unique
/// representative of the class of (a, b) under a ⋄ d = c ⋄ b.
pub trait CancellativeMonoid: Monoid {
    fn reduce_pair(&self, a: &Self::Elem, b: &Self::Elem) -> (Self::Elem, Self::Elem);
}

/// The additive naturals (N, +, 0).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct NatAddMonoid;

impl Monoid for NatAddMonoid {
    type Elem = Nat;

    fn identity(&self) -> Nat {
        Nat::zero()
    }

    fn op(&self, a: &Nat, b: &Nat) -> Nat {
        a + b
    }
}

impl CancellativeMonoid for NatAddMonoid {
    // One side of a reduced difference is always zero.
    fn reduce_pair(&self, a: &Nat, b: &Nat) -> (Nat, Nat) {
        (a.monus(b), b.monus(a))
    }
}

/// The positive naturals under multiplication (N*, ·, 1). Zero is kept
/// out of the carrier so cancellation holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct NatMulMonoid;

impl Monoid for NatMulMonoid {
    type Elem = Nat;

    fn identity(&self) -> Nat {
        Nat::one()
    }

    fn op(&self, a: &Nat, b: &Nat) -> Nat {
        a * b
    }

    fn contains(&self, a: &Nat) -> bool {
        !a.is_zero()
    }
}

impl CancellativeMonoid for NatMulMonoid {
    // Reduced fractions share no factor.
    fn reduce_pair(&self, a: &Nat, b: &Nat) -> (Nat, Nat) {
        let g = gcd_nat(a, b);
        (a.div_rem(&g).0, b.div_rem(&g).0)
    }
}

impl CancellativeMonoid for FiniteMonoid {
    // A finite cancellative commutative monoid is a group, so every
    // difference collapses to (a ⋄ b⁻¹, e).
    fn reduce_pair(&self, a: &usize, b: &usize) -> (usize, usize) {
        let e = self.identity_idx();
        let b_inv = (0..self.order())
            .find(|&x| self.op_idx(*b, x) == e && self.op_idx(x, *b) == e)
            .expect("cancellative finite monoid is a group");
        (self.op_idx(*a, b_inv), e)
    }
}

/// Formal difference plus minus minus, stored in canonical reduced form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GrothendieckElement<E> {
    plus: E,
    minus: E,
}

impl<E> GrothendieckElement<E> {
    pub fn plus(&self) -> &E {
        &self.plus
    }

    pub fn minus(&self) -> &E {
        &self.minus
    }
}

/// Group of formal differences over a commutative cancellative base.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrothendieckGroup<M: CancellativeMonoid> {
    base: M,
}

impl<M: CancellativeMonoid> GrothendieckGroup<M> {
    pub fn base(&self) -> &M {
        &self.base
    }

    pub fn make(
        &self,
        plus: M::Elem,
        minus: M::Elem,
    ) -> Result<GrothendieckElement<M::Elem>, MonoidError> {
        if !self.base.contains(&plus) || !self.base.contains(&minus) {
            return Err(MonoidError::ElementNotInCarrier);
        }
        let (plus, minus) = self.base.reduce_pair(&plus, &minus);
        Ok(GrothendieckElement { plus, minus })
    }

    /// The embedding a maps to the difference (a, e); injective and
    /// operation-preserving.
    pub fn embed(&self, a: &M::Elem) -> Result<GrothendieckElement<M::Elem>, MonoidError> {
        self.make(a.clone(), self.base.identity())
    }
}

impl<M: CancellativeMonoid> Monoid for GrothendieckGroup<M> {
    type Elem = GrothendieckElement<M::Elem>;

    fn identity(&self) -> Self::Elem {
        let e = self.base.identity();
        let (plus, minus) = self.base.reduce_pair(&e, &e);
        GrothendieckElement { plus, minus }
    }

    fn op(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let (plus, minus) = self.base.reduce_pair(
            &self.base.op(&a.plus, &b.plus),
            &self.base.op(&a.minus, &b.minus),
        );
        GrothendieckElement { plus, minus }
    }

    fn contains(&self, a: &Self::Elem) -> bool {
        self.base.contains(&a.plus)
            && self.base.contains(&a.minus)
            && self.base.reduce_pair(&a.plus, &a.minus) == (a.plus.clone(), a.minus.clone())
    }
}

/// Monoid whose every element is invertible.
pub trait Group: Monoid {
    fn inverse(&self, a: &Self::Elem) -> Self::Elem;
}

impl<M: CancellativeMonoid> Group for GrothendieckGroup<M> {
    fn inverse(&self, a: &Self::Elem) -> Self::Elem {
        let (plus, minus) = self.base.reduce_pair(&a.minus, &a.plus);
        GrothendieckElement { plus, minus }
    }
}

/// Completion of an ambient monoid whose laws hold by construction.
pub fn grothendieck<M: CancellativeMonoid>(base: M) -> GrothendieckGroup<M> {
    GrothendieckGroup { base }
}

/// Completion of a finite table, with the laws checked exhaustively
/// first. Failure carries a counterexample.
pub fn grothendieck_finite(
    base: FiniteMonoid,
) -> Result<GrothendieckGroup<FiniteMonoid>, MonoidError> {
    let profile = monoid_classify(&base);
    if !profile.commutative {
        let witness = first_noncommuting(&base).expect("classification found one");
        return Err(MonoidError::NotCommutative { a: witness.0, b: witness.1 });
    }
    if !profile.cancellative {
        let (a, b, c) = first_cancellation_failure(&base).expect("classification found one");
        return Err(MonoidError::NotCancellative { a, b, c });
    }
    Ok(GrothendieckGroup { base })
}

fn first_noncommuting(m: &FiniteMonoid) -> Option<(usize, usize)> {
    let n = m.order();
    (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).find(|&(a, b)| m.op_idx(a, b) != m.op_idx(b, a))
}

fn first_cancellation_failure(m: &FiniteMonoid) -> Option<(usize, usize, usize)> {
    let n = m.order();
    for a in 0..n {
        for b in 0..n {
            for c in b + 1..n {
                if m.op_idx(a, b) == m.op_idx(a, c) || m.op_idx(b, a) == m.op_idx(c, a) {
                    return Some((a, b, c));
                }
            }
        }
    }
    None
}

/// Signed iterate: nonnegative counts iterate forward, negative counts
/// iterate the inverse. Splitting on the sign makes the additivity law
/// signed_iterate(a, y + z) = signed_iterate(a, y) ⋄ signed_iterate(a, z)
/// hold across zero.
pub fn signed_iterate<G: Group>(g: &G, a: &G::Elem, z: &IntZ) -> Result<G::Elem, MonoidError> {
    if !g.contains(a) {
        return Err(MonoidError::ElementNotInCarrier);
    }
    let forward = mon_iterate(g, a, z.magnitude())?;
    Ok(match z.sign() {
        Sign::Neg => g.inverse(&forward),
        _ => forward,
    })
}
