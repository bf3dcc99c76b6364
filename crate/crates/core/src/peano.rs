//! Ground floor of the tower: primitive recursion over the naturals,
//! the two arithmetic routes (literal iteration vs. built-in), the
//! division algorithm, intervals and finite sets.

use std::cmp::Ordering;

use thiserror::Error;

use crate::nat::Nat;

/// Default cap on step applications in iterate mode.
pub const DEFAULT_ITER_BUDGET: u64 = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PeanoError {
    #[error("IterateBudgetExceeded: {needed} step applications needed, budget is {budget}")]
    IterateBudgetExceeded { needed: Nat, budget: u64 },
    #[error("DivisorZero: division by zero")]
    DivisorZero,
    #[error("ExponentTooLarge: exponent does not fit direct exponentiation")]
    ExponentTooLarge,
    #[error("IntervalBoundsReversed: lower bound exceeds upper bound")]
    IntervalBoundsReversed,
}

impl PeanoError {
    pub fn code(&self) -> &'static str {
        match self {
            PeanoError::IterateBudgetExceeded { .. } => "IterateBudgetExceeded",
            PeanoError::DivisorZero => "DivisorZero",
            PeanoError::ExponentTooLarge => "ExponentTooLarge",
            PeanoError::IntervalBoundsReversed => "IntervalBoundsReversed",
        }
    }
}

/// Primitive recursion: applies `step` to `initial` exactly `n` times.
pub fn recurse<T>(initial: T, mut step: impl FnMut(T) -> T, n: &Nat) -> T {
    let mut acc = initial;
    if let Some(k) = n.to_u64() {
        for _ in 0..k {
            acc = step(acc);
        }
    } else {
        let mut i = Nat::zero();
        while &i < n {
            acc = step(acc);
            i = i.succ();
        }
    }
    acc
}

/// Any structure with a distinguished point and a successor map. The
/// canonical transport `from_nat` is the unique map sending 0 to the
/// distinguished point and commuting with successors.
pub trait SuccessorModel {
    type Point: Clone;

    fn zero(&self) -> Self::Point;
    fn succ(&self, p: &Self::Point) -> Self::Point;
    fn points_eq(&self, a: &Self::Point, b: &Self::Point) -> bool;

    fn from_nat(&self, n: &Nat) -> Self::Point {
        recurse(self.zero(), |p| self.succ(&p), n)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Mul,
    Pow,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithMode {
    /// Unrolls the defining iteration step by step.
    Iterate,
    /// Uses the big-integer primitives directly.
    Fast,
}

/// Natural arithmetic with a selectable route and the default step budget.
pub fn nat_arith(op: ArithOp, m: &Nat, n: &Nat, mode: ArithMode) -> Result<Nat, PeanoError> {
    nat_arith_budgeted(op, m, n, mode, DEFAULT_ITER_BUDGET)
}

/// Like `nat_arith`, but with an explicit cap on iterate-mode step
/// applications. Step counts per operation: add takes `n` successor
/// steps, mul takes `m` additions of `n`, pow takes `n` multiplications
/// by `m`. Exceeding the cap reports `IterateBudgetExceeded`.
pub fn nat_arith_budgeted(
    op: ArithOp,
    m: &Nat,
    n: &Nat,
    mode: ArithMode,
    budget: u64,
) -> Result<Nat, PeanoError> {
    match mode {
        ArithMode::Fast => match op {
            ArithOp::Add => Ok(m + n),
            ArithOp::Mul => Ok(m * n),
            ArithOp::Pow => {
                // 0^0 = 1: the empty iterate of any element is the identity.
                if n.is_zero() {
                    return Ok(Nat::one());
                }
                let exp = n
                    .to_u64()
                    .and_then(|e| u32::try_from(e).ok())
                    .ok_or(PeanoError::ExponentTooLarge)?;
                Ok(m.pow_u32(exp))
            }
        },
        ArithMode::Iterate => {
            let steps = match op {
                ArithOp::Add | ArithOp::Pow => n,
                ArithOp::Mul => m,
            };
            let within = steps.to_u64().map(|s| s <= budget).unwrap_or(false);
            if !within {
                return Err(PeanoError::IterateBudgetExceeded {
                    needed: steps.clone(),
                    budget,
                });
            }
            Ok(match op {
                ArithOp::Add => recurse(m.clone(), |x| x.succ(), n),
                ArithOp::Mul => recurse(Nat::zero(), |acc| n + &acc, m),
                ArithOp::Pow => recurse(Nat::one(), |acc| m * &acc, n),
            })
        }
    }
}

/// Three-way comparison of naturals.
pub fn nat_le(m: &Nat, n: &Nat) -> Ordering {
    m.cmp(n)
}

/// Division with remainder: returns the unique `(q, r)` with
/// `b = q*a + r` and `r < a`.
pub fn div_algorithm(b: &Nat, a: &Nat) -> Result<(Nat, Nat), PeanoError> {
    if a.is_zero() {
        return Err(PeanoError::DivisorZero);
    }
    Ok(b.div_rem(a))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntervalKind {
    /// Both endpoints included.
    Closed,
    /// Lower endpoint included, upper excluded.
    HalfOpen,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    lo: Nat,
    hi: Nat,
    kind: IntervalKind,
}

impl Interval {
    pub fn new(lo: Nat, hi: Nat, kind: IntervalKind) -> Result<Self, PeanoError> {
        if lo > hi {
            return Err(PeanoError::IntervalBoundsReversed);
        }
        Ok(Interval { lo, hi, kind })
    }

    pub fn lo(&self) -> &Nat {
        &self.lo
    }

    pub fn hi(&self) -> &Nat {
        &self.hi
    }

    pub fn kind(&self) -> IntervalKind {
        self.kind
    }

    pub fn contains(&self, x: &Nat) -> bool {
        match self.kind {
            IntervalKind::Closed => &self.lo <= x && x <= &self.hi,
            IntervalKind::HalfOpen => &self.lo <= x && x < &self.hi,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.kind == IntervalKind::HalfOpen && self.lo == self.hi
    }

    /// Number of elements: `hi - lo` when half open, one more when closed.
    pub fn cardinality(&self) -> Nat {
        let width = self.hi.monus(&self.lo);
        match self.kind {
            IntervalKind::Closed => width.succ(),
            IntervalKind::HalfOpen => width,
        }
    }

    pub fn to_finset(&self) -> FinSet {
        let mut elems = Vec::new();
        let mut x = self.lo.clone();
        while self.contains(&x) {
            elems.push(x.clone());
            x = x.succ();
        }
        FinSet::from_vec(elems)
    }
}

/// Finite set of naturals, kept as a strictly increasing sequence.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FinSet(Vec<Nat>);

impl FinSet {
    pub fn empty() -> Self {
        FinSet(Vec::new())
    }

    pub fn from_vec(mut elems: Vec<Nat>) -> Self {
        elems.sort();
        elems.dedup();
        FinSet(elems)
    }

    pub fn singleton(x: Nat) -> Self {
        FinSet(vec![x])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn card(&self) -> Nat {
        Nat::from(self.0.len())
    }

    pub fn least(&self) -> Option<&Nat> {
        self.0.first()
    }

    pub fn greatest(&self) -> Option<&Nat> {
        self.0.last()
    }

    pub fn contains(&self, x: &Nat) -> bool {
        self.0.binary_search(x).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Nat> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[Nat] {
        &self.0
    }

    pub fn union(&self, other: &FinSet) -> FinSet {
        let mut merged = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                Ordering::Less => {
                    merged.push(self.0[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    merged.push(other.0[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    merged.push(self.0[i].clone());
                    i += 1;
                    j += 1;
                }
            }
        }
        merged.extend_from_slice(&self.0[i..]);
        merged.extend_from_slice(&other.0[j..]);
        FinSet(merged)
    }

    pub fn intersection(&self, other: &FinSet) -> FinSet {
        let mut common = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => {
                    common.push(self.0[i].clone());
                    i += 1;
                    j += 1;
                }
            }
        }
        FinSet(common)
    }
}

impl FromIterator<Nat> for FinSet {
    fn from_iter<I: IntoIterator<Item = Nat>>(iter: I) -> Self {
        FinSet::from_vec(iter.into_iter().collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinSetSummary {
    pub card: Nat,
    pub least: Option<Nat>,
    pub greatest: Option<Nat>,
}

/// Cardinality and extrema of a finite set.
pub fn finset_ops(a: &FinSet) -> FinSetSummary {
    FinSetSummary {
        card: a.card(),
        least: a.least().cloned(),
        greatest: a.greatest().cloned(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn nat(v: u64) -> Nat {
        Nat::from(v)
    }

    #[test]
    fn recurse_zero_steps_returns_initial() {
        let out = recurse(nat(7), |x| x.succ(), &Nat::zero());
        assert_eq!(out, nat(7));
    }

    #[test]
    fn recurse_increment_counts() {
        let out = recurse(Nat::zero(), |x| x.succ(), &nat(5));
        assert_eq!(out, nat(5));
    }

    #[test]
    fn recurse_doubling() {
        // Ten doublings of 1: 2^10.
        let out = recurse(Nat::one(), |x| &x + &x, &nat(10));
        assert_eq!(out, nat(1u64 << 10));
    }

    #[test]
    fn arith_examples_both_modes() {
        for mode in [ArithMode::Iterate, ArithMode::Fast] {
            assert_eq!(nat_arith(ArithOp::Add, &nat(2), &nat(3), mode).unwrap(), nat(5));
            assert_eq!(nat_arith(ArithOp::Mul, &nat(4), &nat(6), mode).unwrap(), nat(24));
            assert_eq!(nat_arith(ArithOp::Pow, &nat(2), &nat(10), mode).unwrap(), nat(1024));
            assert_eq!(nat_arith(ArithOp::Pow, &nat(0), &nat(0), mode).unwrap(), nat(1));
            assert_eq!(nat_arith(ArithOp::Pow, &nat(0), &nat(3), mode).unwrap(), nat(0));
            assert_eq!(nat_arith(ArithOp::Pow, &nat(9), &nat(0), mode).unwrap(), nat(1));
            assert_eq!(nat_arith(ArithOp::Add, &nat(0), &nat(0), mode).unwrap(), nat(0));
            assert_eq!(nat_arith(ArithOp::Mul, &nat(0), &nat(9), mode).unwrap(), nat(0));
            assert_eq!(nat_arith(ArithOp::Mul, &nat(9), &nat(0), mode).unwrap(), nat(0));
        }
    }

    #[test]
    fn iterate_budget_is_enforced() {
        let err = nat_arith_budgeted(ArithOp::Add, &nat(1), &nat(11), ArithMode::Iterate, 10)
            .unwrap_err();
        assert_eq!(
            err,
            PeanoError::IterateBudgetExceeded { needed: nat(11), budget: 10 }
        );
        // Budget counts steps of the defining iteration, not operand size.
        let ok = nat_arith_budgeted(ArithOp::Pow, &nat(12), &nat(8), ArithMode::Iterate, 10);
        assert_eq!(ok.unwrap(), nat(429_981_696));
    }

    #[test]
    fn modes_agree_on_small_grid() {
        for m in 0..40u64 {
            for n in 0..40u64 {
                let slow = nat_arith(ArithOp::Add, &nat(m), &nat(n), ArithMode::Iterate).unwrap();
                let fast = nat_arith(ArithOp::Add, &nat(m), &nat(n), ArithMode::Fast).unwrap();
                assert_eq!(slow, fast);
                let slow = nat_arith(ArithOp::Mul, &nat(m), &nat(n), ArithMode::Iterate).unwrap();
                let fast = nat_arith(ArithOp::Mul, &nat(m), &nat(n), ArithMode::Fast).unwrap();
                assert_eq!(slow, fast);
            }
        }
        for m in 0..6u64 {
            for n in 0..6u64 {
                let slow = nat_arith(ArithOp::Pow, &nat(m), &nat(n), ArithMode::Iterate).unwrap();
                let fast = nat_arith(ArithOp::Pow, &nat(m), &nat(n), ArithMode::Fast).unwrap();
                assert_eq!(slow, fast);
            }
        }
    }

    #[test]
    fn ordering_is_positional() {
        assert_eq!(nat_le(&nat(3), &nat(5)), Ordering::Less);
        assert_eq!(nat_le(&nat(5), &nat(5)), Ordering::Equal);
        assert_eq!(nat_le(&nat(9), &nat(5)), Ordering::Greater);
    }

    #[test]
    fn successors_leave_no_gap() {
        // m > n forces m >= succ(n): nothing sits strictly between n and succ(n).
        for n in 0..10_000u64 {
            let s = nat(n).succ();
            assert_eq!(s, nat(n + 1));
            for m in n..=n + 2 {
                assert!(!(nat(n) < nat(m) && nat(m) < s));
            }
        }
    }

    #[test]
    fn division_examples() {
        assert_eq!(div_algorithm(&nat(7), &nat(3)).unwrap(), (nat(2), nat(1)));
        assert_eq!(div_algorithm(&nat(6), &nat(3)).unwrap(), (nat(2), nat(0)));
        assert_eq!(div_algorithm(&nat(0), &nat(4)).unwrap(), (nat(0), nat(0)));
        assert_eq!(div_algorithm(&nat(2), &nat(5)).unwrap(), (nat(0), nat(2)));
        assert_eq!(div_algorithm(&nat(2), &nat(0)).unwrap_err(), PeanoError::DivisorZero);
    }

    #[test]
    fn division_matches_exhaustive_search_on_samples() {
        // Independent oracle: scan every candidate pair.
        for a in 1..=12u64 {
            for b in 0..=60u64 {
                let (q, r) = div_algorithm(&nat(b), &nat(a)).unwrap();
                let mut found = Vec::new();
                for cq in 0..=b {
                    for cr in 0..a {
                        if cq * a + cr == b {
                            found.push((cq, cr));
                        }
                    }
                }
                assert_eq!(found.len(), 1);
                assert_eq!((q.to_u64().unwrap(), r.to_u64().unwrap()), found[0]);
            }
        }
    }

    #[test]
    fn interval_cardinalities() {
        let half = Interval::new(nat(0), nat(7), IntervalKind::HalfOpen).unwrap();
        assert_eq!(half.cardinality(), nat(7));
        assert_eq!(half.to_finset().card(), nat(7));

        let closed = Interval::new(nat(3), nat(7), IntervalKind::Closed).unwrap();
        assert_eq!(closed.cardinality(), nat(5));
        assert_eq!(closed.to_finset().card(), nat(5));
        assert!(closed.contains(&nat(7)));
        assert!(!half.contains(&nat(7)));

        let empty = Interval::new(nat(4), nat(4), IntervalKind::HalfOpen).unwrap();
        assert!(empty.is_empty());
        assert_eq!(empty.cardinality(), nat(0));

        assert!(Interval::new(nat(5), nat(4), IntervalKind::Closed).is_err());
    }

    #[test]
    fn finset_basic_ops() {
        let a = FinSet::from_vec(vec![nat(3), nat(1), nat(3), nat(8)]);
        assert_eq!(a.as_slice(), &[nat(1), nat(3), nat(8)]);
        let summary = finset_ops(&a);
        assert_eq!(summary.card, nat(3));
        assert_eq!(summary.least, Some(nat(1)));
        assert_eq!(summary.greatest, Some(nat(8)));

        let empty = finset_ops(&FinSet::empty());
        assert_eq!(empty.card, nat(0));
        assert_eq!(empty.least, None);
        assert_eq!(empty.greatest, None);

        let b = FinSet::from_vec(vec![nat(3), nat(4)]);
        assert_eq!(a.union(&b).as_slice(), &[nat(1), nat(3), nat(4), nat(8)]);
        assert_eq!(a.intersection(&b).as_slice(), &[nat(3)]);
    }

    /// Counts all maps from a set of size `from` to a set of size `to` by
    /// literal enumeration with an odometer.
    fn count_maps(from: usize, to: usize) -> u64 {
        if from == 0 {
            return 1;
        }
        if to == 0 {
            return 0;
        }
        let mut digits = vec![0usize; from];
        let mut count = 0u64;
        loop {
            count += 1;
            let mut i = 0;
            loop {
                if i == from {
                    return count;
                }
                digits[i] += 1;
                if digits[i] < to {
                    break;
                }
                digits[i] = 0;
                i += 1;
            }
        }
    }

    #[test]
    fn counting_formulas_on_small_sets() {
        let sets: Vec<FinSet> = vec![
            FinSet::empty(),
            FinSet::from_vec(vec![nat(2)]),
            FinSet::from_vec(vec![nat(1), nat(4)]),
            FinSet::from_vec(vec![nat(0), nat(2), nat(9)]),
            FinSet::from_vec(vec![nat(1), nat(2), nat(3), nat(7)]),
        ];
        for a in &sets {
            for b in &sets {
                // Inclusion-exclusion, addition form.
                let lhs = &a.union(b).card() + &a.intersection(b).card();
                let rhs = &a.card() + &b.card();
                assert_eq!(lhs, rhs);

                // Product cardinality against materialized pairs.
                let mut pairs = Vec::new();
                for x in a.iter() {
                    for y in b.iter() {
                        pairs.push((x.clone(), y.clone()));
                    }
                }
                assert_eq!(Nat::from(pairs.len()), &a.card() * &b.card());

                // Map-space cardinality against literal enumeration.
                if a.len() <= 4 && b.len() <= 4 {
                    let enumerated = count_maps(a.len(), b.len());
                    let formula =
                        nat_arith(ArithOp::Pow, &b.card(), &a.card(), ArithMode::Fast).unwrap();
                    assert_eq!(Nat::from(enumerated), formula);
                }
            }
        }
    }

    struct OffsetModel {
        base: u64,
    }

    impl SuccessorModel for OffsetModel {
        type Point = u64;
        fn zero(&self) -> u64 {
            self.base
        }
        fn succ(&self, p: &u64) -> u64 {
            p + 1
        }
        fn points_eq(&self, a: &u64, b: &u64) -> bool {
            a == b
        }
    }

    struct TermModel;

    impl SuccessorModel for TermModel {
        type Point = String;
        fn zero(&self) -> String {
            "0".to_string()
        }
        fn succ(&self, p: &String) -> String {
            format!("S({p})")
        }
        fn points_eq(&self, a: &String, b: &String) -> bool {
            a == b
        }
    }

    #[test]
    fn successor_models_transport() {
        let offset = OffsetModel { base: 100 };
        let term = TermModel;
        // Transport sends zero to zero and commutes with successor.
        assert!(offset.points_eq(&offset.from_nat(&Nat::zero()), &offset.zero()));
        assert!(term.points_eq(&term.from_nat(&Nat::zero()), &term.zero()));
        for n in 0..30u64 {
            let phi_n = offset.from_nat(&nat(n));
            let phi_sn = offset.from_nat(&nat(n).succ());
            assert!(offset.points_eq(&phi_sn, &offset.succ(&phi_n)));

            let t_n = term.from_nat(&nat(n));
            let t_sn = term.from_nat(&nat(n).succ());
            assert!(term.points_eq(&t_sn, &term.succ(&t_n)));
        }
        // Successor stays injective and never hits zero, on samples.
        let mut images = Vec::new();
        for n in 0..30u64 {
            let img = term.succ(&term.from_nat(&nat(n)));
            assert!(!term.points_eq(&img, &term.zero()));
            assert!(!images.iter().any(|seen| term.points_eq(seen, &img)));
            images.push(img);
        }
        assert_eq!(term.from_nat(&nat(2)), "S(S(0))");
    }

    proptest! {
        #[test]
        fn order_reflects_addition(a in 0u64..50_000, b in 0u64..50_000) {
            // a < b exactly when some nonzero d has a + d = b.
            let (na, nb) = (nat(a), nat(b));
            let lt = nat_le(&na, &nb) == Ordering::Less;
            let witness = nb.checked_sub(&na).map(|d| !d.is_zero()).unwrap_or(false);
            prop_assert_eq!(lt, witness);
        }

        #[test]
        fn addition_preserves_strict_order(a in 0u64..10_000, b in 0u64..10_000, c in 0u64..10_000) {
            prop_assume!(a < b);
            let lhs = nat_arith(ArithOp::Add, &nat(a), &nat(c), ArithMode::Fast).unwrap();
            let rhs = nat_arith(ArithOp::Add, &nat(b), &nat(c), ArithMode::Fast).unwrap();
            prop_assert_eq!(nat_le(&lhs, &rhs), Ordering::Less);
        }

        #[test]
        fn division_contract(b in 0u64..1_000_000, a in 1u64..5_000) {
            let (q, r) = div_algorithm(&nat(b), &nat(a)).unwrap();
            prop_assert!(nat_le(&r, &nat(a)) == Ordering::Less);
            prop_assert_eq!(&(&q * &nat(a)) + &r, nat(b));
        }
    }
}
