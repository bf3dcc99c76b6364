//! Divisibility order on the positive naturals: Euclid's algorithm with
//! an inspectable trace, the gcd/lcm lattice, primality and prime
//! enumeration by trial division, canonical factorizations, divisor
//! sets, and Goldbach decompositions as finite test vectors.

use std::fmt;
use std::str::FromStr;
use std::sync::{OnceLock, RwLock};

use thiserror::Error;

use crate::nat::Nat;
use crate::peano::FinSet;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DivisibilityError {
    #[error("DivisorZero: zero is not a valid divisor")]
    DivisorZero,
    #[error("ArgumentOutOfRange: {0}")]
    ArgumentOutOfRange(&'static str),
    #[error("EmptySet: fold over an empty set has no value")]
    EmptySet,
    #[error("NoDecompositionFound: no prime pair sums to the given value")]
    NoDecompositionFound,
}

impl DivisibilityError {
    pub fn code(&self) -> &'static str {
        match self {
            DivisibilityError::DivisorZero => "DivisorZero",
            DivisibilityError::ArgumentOutOfRange(_) => "ArgumentOutOfRange",
            DivisibilityError::EmptySet => "EmptySet",
            DivisibilityError::NoDecompositionFound => "NoDecompositionFound",
        }
    }
}

// --- prime sieve cache ---------------------------------------------------

struct SieveCache {
    limit: u64,
    primes: Vec<u64>,
}

fn sieve_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for p in 2..=n {
        if !composite[p] {
            primes.push(p as u64);
            let mut multiple = p * p;
            while multiple <= n {
                composite[multiple] = true;
                multiple += p;
            }
        }
    }
    primes
}

fn cache() -> &'static RwLock<SieveCache> {
    static CACHE: OnceLock<RwLock<SieveCache>> = OnceLock::new();
    CACHE.get_or_init(|| {
        RwLock::new(SieveCache { limit: 1 << 10, primes: sieve_to(1 << 10) })
    })
}

/// Runs `f` on the cached prime list, first extending it to cover
/// `limit`. Reads share the lock; extension takes it exclusively.
fn with_primes<R>(limit: u64, f: impl FnOnce(&[u64]) -> R) -> R {
    {
        let guard = cache().read().expect("sieve lock poisoned");
        if guard.limit >= limit {
            return f(&guard.primes);
        }
    }
    let mut guard = cache().write().expect("sieve lock poisoned");
    if guard.limit < limit {
        let new_limit = limit.max(guard.limit.saturating_mul(2));
        guard.primes = sieve_to(new_limit);
        guard.limit = new_limit;
    }
    f(&guard.primes)
}

pub(crate) fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

pub(crate) fn gcd_nat(a: &Nat, b: &Nat) -> Nat {
    let mut x = a.clone();
    let mut y = b.clone();
    while !y.is_zero() {
        let (_, r) = x.div_rem(&y);
        x = y;
        y = r;
    }
    x
}

// --- divisibility and the gcd/lcm lattice --------------------------------

/// True when `a` divides `b` without remainder.
pub fn divides(a: &Nat, b: &Nat) -> Result<bool, DivisibilityError> {
    if a.is_zero() {
        return Err(DivisibilityError::DivisorZero);
    }
    Ok(b.divisible_by(a))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GcdStep {
    pub b: Nat,
    pub a: Nat,
    pub q: Nat,
    pub r: Nat,
}

/// Division-algorithm records of a Euclid run, ending with remainder 0.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GcdTrace {
    pub steps: Vec<GcdStep>,
}

/// Greatest common divisor by Euclid's algorithm, optionally recording
/// every division step. When either argument is 1 the result is 1 and
/// the trace is empty.
pub fn gcd_euclid(
    x: &Nat,
    y: &Nat,
    trace: bool,
) -> Result<(Nat, Option<GcdTrace>), DivisibilityError> {
    if x.is_zero() || y.is_zero() {
        return Err(DivisibilityError::ArgumentOutOfRange("gcd arguments must be positive"));
    }
    let requested = trace.then(GcdTrace::default);
    if x.is_one() || y.is_one() {
        return Ok((Nat::one(), requested));
    }
    let mut steps = Vec::new();
    let mut b = x.clone();
    let mut a = y.clone();
    loop {
        let (q, r) = b.div_rem(&a);
        steps.push(GcdStep { b: b.clone(), a: a.clone(), q, r: r.clone() });
        if r.is_zero() {
            let trace = requested.map(|_| GcdTrace { steps });
            return Ok((a, trace));
        }
        b = a;
        a = r;
    }
}

/// Least common multiple via `x*y / gcd(x,y)`.
pub fn lcm(x: &Nat, y: &Nat) -> Result<Nat, DivisibilityError> {
    let (g, _) = gcd_euclid(x, y, false)?;
    let (q, _) = (x * y).div_rem(&g);
    Ok(q)
}

// --- primes ---------------------------------------------------------------

/// Primality by trial division with cached primes up to the square root.
pub fn is_prime(n: &Nat) -> Result<bool, DivisibilityError> {
    if n < &Nat::from(2u64) {
        return Err(DivisibilityError::ArgumentOutOfRange("primality is decided for n >= 2"));
    }
    let root = n.big().sqrt();
    let root = Nat::from(root).to_u64().expect("square root of a tractable input fits u64");
    Ok(with_primes(root.max(2), |primes| {
        for &p in primes.iter().take_while(|&&p| p <= root) {
            let pn = Nat::from(p);
            if &pn != n && n.divisible_by(&pn) {
                return false;
            }
        }
        true
    }))
}

/// All primes `<= limit`, ascending.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    with_primes(limit.max(2), |primes| {
        primes.iter().take_while(|&&p| p <= limit).copied().collect()
    })
}

/// The prime enumeration, 0-indexed: 2, 3, 5, ...
pub fn nth_prime(k: u64) -> u64 {
    let idx = k as usize;
    let mut bound = 1u64 << 10;
    loop {
        let found = with_primes(bound, |primes| primes.get(idx).copied());
        if let Some(p) = found {
            return p;
        }
        bound *= 2;
    }
}

// --- factorization --------------------------------------------------------

/// Canonical prime factorization: strictly increasing primes with
/// positive exponents, multiplying back to the factored value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pairs: Vec<(Nat, u32)>,
}

impl Factorization {
    pub fn pairs(&self) -> &[(Nat, u32)] {
        &self.pairs
    }

    /// Product of all prime powers.
    pub fn value(&self) -> Nat {
        let mut acc = Nat::one();
        for (p, m) in &self.pairs {
            acc = &acc * &p.pow_u32(*m);
        }
        acc
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (p, m) in &self.pairs {
            if !first {
                write!(f, "\u{b7}")?;
            }
            first = false;
            if *m == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{m}")?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseFactorizationError(pub String);

impl fmt::Display for ParseFactorizationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid factorization: {}", self.0)
    }
}

impl std::error::Error for ParseFactorizationError {}

impl FromStr for Factorization {
    type Err = ParseFactorizationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.is_empty() {
            return Err(ParseFactorizationError("empty input".into()));
        }
        let mut pairs = Vec::new();
        for token in s.split('\u{b7}') {
            let (p_text, m) = match token.split_once('^') {
                Some((p, m)) => {
                    let m: u32 = m
                        .parse()
                        .map_err(|_| ParseFactorizationError(format!("bad exponent in `{token}`")))?;
                    (p, m)
                }
                None => (token, 1),
            };
            if m == 0 {
                return Err(ParseFactorizationError(format!("zero exponent in `{token}`")));
            }
            // Exponent 1 must be written without the caret for bit-exact output.
            if token.ends_with("^1") {
                return Err(ParseFactorizationError(format!("redundant exponent in `{token}`")));
            }
            let p: Nat = p_text
                .parse()
                .map_err(|_| ParseFactorizationError(format!("bad prime in `{token}`")))?;
            if !is_prime(&p).map_err(|e| ParseFactorizationError(e.to_string()))? {
                return Err(ParseFactorizationError(format!("{p} is not prime")));
            }
            if let Some((last, _)) = pairs.last() {
                if last >= &p {
                    return Err(ParseFactorizationError("primes must strictly increase".into()));
                }
            }
            pairs.push((p, m));
        }
        Ok(Factorization { pairs })
    }
}

/// Prime factorization by trial division against the shared sieve.
pub fn factorize(n: &Nat) -> Result<Factorization, DivisibilityError> {
    if n < &Nat::from(2u64) {
        return Err(DivisibilityError::ArgumentOutOfRange("factorization needs n >= 2"));
    }
    let mut remaining = n.clone();
    let mut pairs: Vec<(Nat, u32)> = Vec::new();
    loop {
        let root = Nat::from(remaining.big().sqrt())
            .to_u64()
            .expect("square root of a tractable input fits u64");
        let next = with_primes(root.max(2), |primes| {
            for &p in primes.iter().take_while(|&&p| p <= root) {
                let pn = Nat::from(p);
                if remaining.divisible_by(&pn) {
                    return Some(pn);
                }
            }
            None
        });
        match next {
            Some(p) => {
                let mut m = 0u32;
                while remaining.divisible_by(&p) {
                    let (q, _) = remaining.div_rem(&p);
                    remaining = q;
                    m += 1;
                }
                pairs.push((p, m));
            }
            None => {
                // Whatever survives trial division up to its root is prime.
                if !remaining.is_one() {
                    pairs.push((remaining, 1));
                }
                return Ok(Factorization { pairs });
            }
        }
    }
}

/// Ascending set of all divisors, assembled from the factorization.
pub fn divisors(n: &Nat) -> Result<FinSet, DivisibilityError> {
    if n.is_zero() {
        return Err(DivisibilityError::ArgumentOutOfRange("divisor sets are defined for n >= 1"));
    }
    if n.is_one() {
        return Ok(FinSet::singleton(Nat::one()));
    }
    let fact = factorize(n)?;
    let mut divs = vec![Nat::one()];
    for (p, m) in fact.pairs() {
        let mut extended = Vec::with_capacity(divs.len() * (*m as usize + 1));
        for d in &divs {
            let mut power = d.clone();
            extended.push(power.clone());
            for _ in 0..*m {
                power = &power * p;
                extended.push(power.clone());
            }
        }
        divs = extended;
    }
    Ok(FinSet::from_vec(divs))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LatticeOp {
    /// Least upper bound under divisibility: the lcm.
    Sup,
    /// Greatest lower bound under divisibility: the gcd.
    Inf,
}

/// Folds gcd or lcm over a nonempty set of positive naturals. The fold
/// order is immaterial; a singleton folds to its element.
pub fn lattice_fold(op: LatticeOp, a: &FinSet) -> Result<Nat, DivisibilityError> {
    let mut iter = a.iter();
    let first = iter.next().ok_or(DivisibilityError::EmptySet)?;
    if a.iter().any(|x| x.is_zero()) {
        return Err(DivisibilityError::ArgumentOutOfRange("lattice folds need elements >= 1"));
    }
    let mut acc = first.clone();
    for x in iter {
        acc = match op {
            LatticeOp::Sup => lcm(&acc, x)?,
            LatticeOp::Inf => gcd_euclid(&acc, x, false)?.0,
        };
    }
    Ok(acc)
}

/// Smallest-first prime pair summing to an even `n >= 4`.
pub fn goldbach_pair(n: &Nat) -> Result<(Nat, Nat), DivisibilityError> {
    let v = n
        .to_u64()
        .ok_or(DivisibilityError::ArgumentOutOfRange("decomposition search works at desk scale"))?;
    if v < 4 || v % 2 != 0 {
        return Err(DivisibilityError::ArgumentOutOfRange("needs an even value >= 4"));
    }
    let found = with_primes(v, |primes| {
        let in_range = &primes[..primes.partition_point(|&p| p <= v)];
        for &p in in_range {
            if p > v / 2 {
                break;
            }
            if in_range.binary_search(&(v - p)).is_ok() {
                return Some((p, v - p));
            }
        }
        None
    });
    match found {
        Some((p, q)) => Ok((Nat::from(p), Nat::from(q))),
        None => Err(DivisibilityError::NoDecompositionFound),
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
    fn divides_examples() {
        assert!(divides(&nat(3), &nat(123_456)).unwrap());
        for x in [1u64, 2, 17, 100, 9999] {
            assert!(divides(&nat(1), &nat(x)).unwrap());
        }
        assert!(!divides(&nat(5), &nat(7)).unwrap());
        assert_eq!(divides(&nat(0), &nat(7)).unwrap_err(), DivisibilityError::DivisorZero);
    }

    #[test]
    fn divisor_bounds_value() {
        for x in 1..=300u64 {
            for y in 1..=300u64 {
                if divides(&nat(x), &nat(y)).unwrap() {
                    assert!(x <= y);
                }
            }
        }
    }

    #[test]
    fn gcd_examples_and_oracle() {
        // Independent oracle: maximum over a full common-divisor scan.
        let brute = |x: u64, y: u64| (1..=x.min(y)).filter(|d| x % d == 0 && y % d == 0).max();
        assert_eq!(gcd_euclid(&nat(12), &nat(18), false).unwrap().0, nat(brute(12, 18).unwrap()));
        assert_eq!(gcd_euclid(&nat(12), &nat(18), false).unwrap().0, nat(6));
        for x in 1..=40u64 {
            for y in 1..=40u64 {
                let (g, _) = gcd_euclid(&nat(x), &nat(y), false).unwrap();
                assert_eq!(g, nat(brute(x, y).unwrap()));
            }
        }
        assert_eq!(gcd_euclid(&nat(35), &nat(35), false).unwrap().0, nat(35));
        assert_eq!(gcd_euclid(&nat(1), &nat(99), false).unwrap().0, nat(1));
        assert!(gcd_euclid(&nat(0), &nat(5), false).is_err());
    }

    #[test]
    fn gcd_trace_chains() {
        let (g, trace) = gcd_euclid(&nat(12), &nat(18), true).unwrap();
        let trace = trace.unwrap();
        assert_eq!(g, nat(6));
        assert_eq!(trace.steps.len(), 3);
        for step in &trace.steps {
            assert_eq!(&(&step.q * &step.a) + &step.r, step.b);
            assert!(step.r < step.a);
        }
        for pair in trace.steps.windows(2) {
            assert_eq!(pair[1].b, pair[0].a);
            assert_eq!(pair[1].a, pair[0].r);
        }
        assert!(trace.steps.last().unwrap().r.is_zero());

        // Short-circuit on 1 produces no division records.
        let (g, trace) = gcd_euclid(&nat(1), &nat(18), true).unwrap();
        assert_eq!(g, nat(1));
        assert!(trace.unwrap().steps.is_empty());
    }

    #[test]
    fn lcm_examples_and_oracle() {
        assert_eq!(lcm(&nat(12), &nat(18)).unwrap(), nat(36));
        // Independent oracle: first common multiple by scan.
        let brute = |x: u64, y: u64| (1..).map(|k| x * k).find(|m| m % y == 0).unwrap();
        for x in 1..=30u64 {
            for y in 1..=30u64 {
                assert_eq!(lcm(&nat(x), &nat(y)).unwrap(), nat(brute(x, y)));
            }
        }
        for x in [1u64, 7, 360] {
            assert_eq!(lcm(&nat(1), &nat(x)).unwrap(), nat(x));
            assert_eq!(lcm(&nat(x), &nat(x)).unwrap(), nat(x));
        }
    }

    #[test]
    fn gcd_lcm_product_identity_small() {
        for x in 1..=60u64 {
            for y in 1..=60u64 {
                let (g, _) = gcd_euclid(&nat(x), &nat(y), false).unwrap();
                let l = lcm(&nat(x), &nat(y)).unwrap();
                assert_eq!(&g * &l, nat(x * y));
            }
        }
    }

    #[test]
    fn prime_enumeration_head() {
        assert_eq!(nth_prime(0), 2);
        assert_eq!(nth_prime(1), 3);
        assert_eq!(nth_prime(2), 5);
        assert_eq!(primes_up_to(12), vec![2, 3, 5, 7, 11]);
        assert_eq!(primes_up_to(1), Vec::<u64>::new());
    }

    #[test]
    fn primality_examples() {
        assert!(!is_prime(&nat(4)).unwrap());
        assert!(is_prime(&nat(2)).unwrap());
        assert!(is_prime(&nat(97)).unwrap());
        assert!(!is_prime(&nat(1_000_000)).unwrap());
        assert!(is_prime(&nat(1_000_003)).unwrap());
        assert!(matches!(is_prime(&nat(0)), Err(DivisibilityError::ArgumentOutOfRange(_))));
        assert!(matches!(is_prime(&nat(1)), Err(DivisibilityError::ArgumentOutOfRange(_))));
    }

    #[test]
    fn primality_matches_divisor_counting() {
        // Independent oracle: count divisors directly.
        for n in 2..=500u64 {
            let divisor_count = (1..=n).filter(|d| n % d == 0).count();
            assert_eq!(is_prime(&nat(n)).unwrap(), divisor_count == 2, "n = {n}");
        }
    }

    #[test]
    fn primes_never_run_out() {
        let mut last = primes_up_to(10).len();
        let mut bound = 10u64;
        for _ in 0..10 {
            bound *= 2;
            let count = primes_up_to(bound).len();
            assert!(count > last, "no new prime up to {bound}");
            last = count;
        }
    }

    #[test]
    fn no_least_element_above_one() {
        for u in 2..=200u64 {
            assert!(!divides(&nat(u), &nat(u + 1)).unwrap());
        }
    }

    #[test]
    fn factorize_examples() {
        let f = factorize(&nat(12)).unwrap();
        assert_eq!(f.pairs(), &[(nat(2), 2), (nat(3), 1)]);
        assert_eq!(f.value(), nat(12));

        let f = factorize(&nat(1024)).unwrap();
        assert_eq!(f.pairs(), &[(nat(2), 10)]);

        for p in [2u64, 3, 5, 101, 1_000_003] {
            let f = factorize(&nat(p)).unwrap();
            assert_eq!(f.pairs(), &[(nat(p), 1)]);
        }
        assert!(matches!(factorize(&nat(1)), Err(DivisibilityError::ArgumentOutOfRange(_))));
    }

    #[test]
    fn factorize_matches_independent_trial_division() {
        // Oracle divides by every candidate, not just sieve primes.
        fn oracle(mut n: u64) -> Vec<(u64, u32)> {
            let mut out = Vec::new();
            let mut d = 2;
            while d * d <= n {
                let mut m = 0;
                while n % d == 0 {
                    n /= d;
                    m += 1;
                }
                if m > 0 {
                    out.push((d, m));
                }
                d += 1;
            }
            if n > 1 {
                out.push((n, 1));
            }
            out
        }
        for n in 2..=3000u64 {
            let ours: Vec<(u64, u32)> =
                factorize(&nat(n)).unwrap().pairs().iter().map(|(p, m)| (p.to_u64().unwrap(), *m)).collect();
            assert_eq!(ours, oracle(n), "n = {n}");
        }
    }

    #[test]
    fn factorization_text_roundtrip() {
        for (n, text) in [(12u64, "12"), (1024, "1024"), (7, "7"), (360, "360")] {
            let f = factorize(&nat(n)).unwrap();
            let s = f.to_string();
            let parsed: Factorization = s.parse().unwrap();
            assert_eq!(parsed, f);
            assert_eq!(parsed.to_string(), s, "round trip for {text}");
        }
        assert_eq!(factorize(&nat(12)).unwrap().to_string(), "2^2\u{b7}3");
        assert_eq!(factorize(&nat(1024)).unwrap().to_string(), "2^10");
        assert_eq!(factorize(&nat(7)).unwrap().to_string(), "7");

        assert!("3\u{b7}2".parse::<Factorization>().is_err());
        assert!("4".parse::<Factorization>().is_err());
        assert!("2^0".parse::<Factorization>().is_err());
        assert!("2^1".parse::<Factorization>().is_err());
        assert!("".parse::<Factorization>().is_err());
    }

    #[test]
    fn divisor_sets() {
        let to_vec = |s: &FinSet| s.iter().map(|x| x.to_u64().unwrap()).collect::<Vec<_>>();
        assert_eq!(to_vec(&divisors(&nat(2)).unwrap()), vec![1, 2]);
        assert_eq!(to_vec(&divisors(&nat(3)).unwrap()), vec![1, 3]);
        assert_eq!(to_vec(&divisors(&nat(4)).unwrap()), vec![1, 2, 4]);
        assert_eq!(to_vec(&divisors(&nat(1)).unwrap()), vec![1]);
        assert_eq!(to_vec(&divisors(&nat(12)).unwrap()), vec![1, 2, 3, 4, 6, 12]);

        // Oracle: scan every candidate divisor.
        for n in 1..=200u64 {
            let scan: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
            assert_eq!(to_vec(&divisors(&nat(n)).unwrap()), scan);
        }
    }

    #[test]
    fn lattice_folds() {
        let set = |xs: &[u64]| FinSet::from_vec(xs.iter().map(|&x| nat(x)).collect());
        assert_eq!(lattice_fold(LatticeOp::Sup, &set(&[4, 6])).unwrap(), nat(12));
        assert_eq!(lattice_fold(LatticeOp::Inf, &set(&[4, 6])).unwrap(), nat(2));
        assert_eq!(lattice_fold(LatticeOp::Sup, &set(&[9])).unwrap(), nat(9));
        assert_eq!(lattice_fold(LatticeOp::Inf, &set(&[9])).unwrap(), nat(9));
        // Pairwise coprime: supremum collapses to the product.
        assert_eq!(lattice_fold(LatticeOp::Sup, &set(&[3, 4, 5])).unwrap(), nat(60));
        assert_eq!(
            lattice_fold(LatticeOp::Sup, &FinSet::empty()).unwrap_err(),
            DivisibilityError::EmptySet
        );

        // Fold order irrelevant: compare against right-to-left fold.
        let xs = [6u64, 10, 15, 21];
        let mut acc = nat(xs[xs.len() - 1]);
        for &x in xs.iter().rev().skip(1) {
            acc = lcm(&nat(x), &acc).unwrap();
        }
        assert_eq!(lattice_fold(LatticeOp::Sup, &set(&xs)).unwrap(), acc);
    }

    #[test]
    fn goldbach_examples() {
        let pair = |n: u64| {
            let (p, q) = goldbach_pair(&nat(n)).unwrap();
            (p.to_u64().unwrap(), q.to_u64().unwrap())
        };
        assert_eq!(pair(4), (2, 2));
        assert_eq!(pair(8), (3, 5));
        assert_eq!(pair(12), (5, 7));
        assert!(matches!(goldbach_pair(&nat(7)), Err(DivisibilityError::ArgumentOutOfRange(_))));
        assert!(matches!(goldbach_pair(&nat(2)), Err(DivisibilityError::ArgumentOutOfRange(_))));
    }

    #[test]
    fn goldbach_pair_is_smallest_first() {
        for n in (4..=600u64).step_by(2) {
            let (p, q) = goldbach_pair(&nat(n)).unwrap();
            let (p, q) = (p.to_u64().unwrap(), q.to_u64().unwrap());
            assert_eq!(p + q, n);
            assert!(p <= q);
            assert!(is_prime(&nat(p)).unwrap() && is_prime(&nat(q)).unwrap());
            for smaller in 2..p {
                let valid = is_prime(&nat(smaller)).unwrap_or(false)
                    && n - smaller >= 2
                    && is_prime(&nat(n - smaller)).unwrap_or(false);
                assert!(!valid, "smaller decomposition {smaller}+{} for {n}", n - smaller);
            }
        }
    }

    proptest! {
        #[test]
        fn euclid_lemma(a in 1u64..500, b in 1u64..500, q in 1u64..500) {
            // Coprime q dividing a product divides the other factor.
            if gcd_u64(a, q) == 1 {
                if (a * b) % q == 0 {
                    prop_assert!(divides(&nat(q), &nat(b)).unwrap());
                }
                // Constructed instance with the hypothesis forced.
                let forced = b * q;
                prop_assert!(divides(&nat(q), &nat(a * forced)).unwrap());
                prop_assert!(divides(&nat(q), &nat(forced)).unwrap());
            }
        }

        #[test]
        fn coprime_divisors_multiply(a in 1u64..200, b in 1u64..200, k in 1u64..50) {
            prop_assume!(gcd_u64(a, b) == 1);
            let c = a * b * k;
            prop_assert!(divides(&nat(a), &nat(c)).unwrap());
            prop_assert!(divides(&nat(b), &nat(c)).unwrap());
            prop_assert!(divides(&nat(a * b), &nat(c)).unwrap());
        }

        #[test]
        fn cofactors_after_gcd_are_coprime(x in 1u64..10_000, y in 1u64..10_000) {
            let (g, _) = gcd_euclid(&nat(x), &nat(y), false).unwrap();
            let g = g.to_u64().unwrap();
            prop_assert_eq!(gcd_u64(x / g, y / g), 1);
        }

        #[test]
        fn distributive_laws(a in 1u64..60, x in 1u64..60, y in 1u64..60) {
            let lhs = lcm(&nat(a * x), &nat(a * y)).unwrap();
            let rhs = &nat(a) * &lcm(&nat(x), &nat(y)).unwrap();
            prop_assert_eq!(lhs, rhs);
            let lhs = gcd_euclid(&nat(a * x), &nat(a * y), false).unwrap().0;
            let rhs = &nat(a) * &gcd_euclid(&nat(x), &nat(y), false).unwrap().0;
            prop_assert_eq!(lhs, rhs);
        }
    }
}
