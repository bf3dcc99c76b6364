//! Residue rings Z/nZ: reduced arithmetic, units and totient, additive
//! generators, product decomposition with verified isomorphisms, CRT
//! reconstruction, cyclicity of the units group, and the two decimal
//! digit rules.

use num_bigint::BigInt;
use thiserror::Error;

use crate::divisibility::{factorize, gcd_nat, gcd_u64};
use crate::nat::Nat;
use crate::peano::FinSet;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModularError {
    #[error("ModulusTooSmall: modulus must be at least 2")]
    ModulusTooSmall,
    #[error("NotAUnit: {value} has no inverse modulo {modulus}")]
    NotAUnit { value: u64, modulus: u64 },
    #[error("ModuliNotCoprime: moduli {a} and {b} share a factor")]
    ModuliNotCoprime { a: Nat, b: Nat },
    #[error("UnsupportedDigitRule: no rule for divisor {0}")]
    UnsupportedDigitRule(u64),
    #[error("ArgumentOutOfRange: {0}")]
    ArgumentOutOfRange(&'static str),
}

impl ModularError {
    pub fn code(&self) -> &'static str {
        match self {
            ModularError::ModulusTooSmall => "ModulusTooSmall",
            ModularError::NotAUnit { .. } => "NotAUnit",
            ModularError::ModuliNotCoprime { .. } => "ModuliNotCoprime",
            ModularError::UnsupportedDigitRule(_) => "UnsupportedDigitRule",
            ModularError::ArgumentOutOfRange(_) => "ArgumentOutOfRange",
        }
    }
}

/// The ring of residues modulo `n >= 2`. Elements are reduced values in
/// `[0, n)`; operations reduce through the canonical projection.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ZnRing {
    n: u64,
}

impl ZnRing {
    pub fn new(n: u64) -> Result<Self, ModularError> {
        if n < 2 {
            return Err(ModularError::ModulusTooSmall);
        }
        Ok(ZnRing { n })
    }

    pub fn modulus(&self) -> u64 {
        self.n
    }

    pub fn reduce(&self, x: &Nat) -> u64 {
        x.rem_u64(self.n)
    }

    pub fn reduce_u64(&self, x: u64) -> u64 {
        x % self.n
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        debug_assert!(a < self.n && b < self.n);
        let s = a + b;
        if s >= self.n {
            s - self.n
        } else {
            s
        }
    }

    pub fn neg(&self, a: u64) -> u64 {
        debug_assert!(a < self.n);
        if a == 0 {
            0
        } else {
            self.n - a
        }
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        debug_assert!(a < self.n && b < self.n);
        ((a as u128 * b as u128) % self.n as u128) as u64
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = self.reduce_u64(1);
        base = self.reduce_u64(base);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }
}

/// Residues generating the additive group: exactly those coprime to `n`.
pub fn additive_generators(n: u64) -> Result<FinSet, ModularError> {
    if n < 2 {
        return Err(ModularError::ModulusTooSmall);
    }
    Ok((1..n).filter(|&k| gcd_u64(k, n) == 1).map(Nat::from).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TotientMode {
    /// Product formula over the prime factorization.
    Formula,
    /// Direct coprimality count.
    Brute,
}

/// Euler's totient, by either route; the two agree everywhere.
pub fn totient(n: u64, mode: TotientMode) -> Result<u64, ModularError> {
    if n < 2 {
        return Err(ModularError::ModulusTooSmall);
    }
    match mode {
        TotientMode::Brute => Ok((1..=n).filter(|&k| gcd_u64(k, n) == 1).count() as u64),
        TotientMode::Formula => {
            let fact = factorize(&Nat::from(n)).expect("n >= 2 factorizes");
            let mut phi = 1u64;
            for (p, m) in fact.pairs() {
                let p = p.to_u64().expect("factor of a u64 fits u64");
                phi *= p.pow(*m - 1) * (p - 1);
            }
            Ok(phi)
        }
    }
}

/// The multiplicative group of invertible residues.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitsGroup {
    ring: ZnRing,
    units: Vec<u64>,
}

pub fn units_group(n: u64) -> Result<UnitsGroup, ModularError> {
    let ring = ZnRing::new(n)?;
    let units = (1..n).filter(|&k| gcd_u64(k, n) == 1).collect();
    Ok(UnitsGroup { ring, units })
}

impl UnitsGroup {
    pub fn ring(&self) -> &ZnRing {
        &self.ring
    }

    pub fn units(&self) -> &[u64] {
        &self.units
    }

    pub fn units_set(&self) -> FinSet {
        self.units.iter().map(|&k| Nat::from(k)).collect()
    }

    pub fn order(&self) -> u64 {
        self.units.len() as u64
    }

    pub fn is_unit(&self, k: u64) -> bool {
        k < self.ring.n && gcd_u64(k, self.ring.n) == 1
    }

    /// Inverse by exhaustive search, checked on both sides.
    pub fn inverse(&self, k: u64) -> Result<u64, ModularError> {
        if !self.is_unit(k) {
            return Err(ModularError::NotAUnit { value: k, modulus: self.ring.n });
        }
        for &candidate in &self.units {
            if self.ring.mul(k, candidate) == 1 && self.ring.mul(candidate, k) == 1 {
                return Ok(candidate);
            }
        }
        unreachable!("a unit always has an inverse among the units")
    }
}

/// Residue map from one ring onto a product of coprime-modulus rings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingIso {
    source: ZnRing,
    factors: Vec<ZnRing>,
}

/// Builds the componentwise-residue map Z_n -> Z_m1 x ... x Z_mk for
/// pairwise coprime moduli with product n.
pub fn crt_iso(moduli: &[u64]) -> Result<RingIso, ModularError> {
    if moduli.is_empty() {
        return Err(ModularError::ArgumentOutOfRange("need at least one modulus"));
    }
    let mut product = 1u64;
    for (i, &m) in moduli.iter().enumerate() {
        if m < 2 {
            return Err(ModularError::ModulusTooSmall);
        }
        for &earlier in &moduli[..i] {
            if gcd_u64(earlier, m) != 1 {
                return Err(ModularError::ModuliNotCoprime {
                    a: Nat::from(earlier),
                    b: Nat::from(m),
                });
            }
        }
        product = product
            .checked_mul(m)
            .ok_or(ModularError::ArgumentOutOfRange("moduli product overflows"))?;
    }
    Ok(RingIso {
        source: ZnRing::new(product)?,
        factors: moduli.iter().map(|&m| ZnRing::new(m).expect("m >= 2")).collect(),
    })
}

impl RingIso {
    pub fn source(&self) -> &ZnRing {
        &self.source
    }

    pub fn factors(&self) -> &[ZnRing] {
        &self.factors
    }

    pub fn forward(&self, x: u64) -> Vec<u64> {
        self.factors.iter().map(|f| f.reduce_u64(x)).collect()
    }

    pub fn backward(&self, residues: &[u64]) -> Result<u64, ModularError> {
        if residues.len() != self.factors.len() {
            return Err(ModularError::ArgumentOutOfRange("residue count mismatch"));
        }
        let pairs: Vec<(Nat, Nat)> = residues
            .iter()
            .zip(&self.factors)
            .map(|(&r, f)| (Nat::from(r), Nat::from(f.modulus())))
            .collect();
        let x = crt_solve(&pairs)?;
        Ok(x.to_u64().expect("solution fits the u64 product"))
    }

    /// Round-trip identity over the whole carrier.
    pub fn verify_bijective(&self) -> bool {
        (0..self.source.n).all(|x| match self.backward(&self.forward(x)) {
            Ok(back) => back == x,
            Err(_) => false,
        })
    }

    /// Exhaustive check that the map preserves both operations on every
    /// element pair, and both identities. Returns the first offending
    /// pair if any.
    pub fn verify_ring_iso(&self) -> Result<(), (u64, u64)> {
        let n = self.source.n;
        if self.forward(0).iter().any(|&r| r != 0) {
            return Err((0, 0));
        }
        let one = self.source.reduce_u64(1);
        for (i, f) in self.factors.iter().enumerate() {
            if self.forward(one)[i] != f.reduce_u64(1) {
                return Err((one, one));
            }
        }
        // Residue tables via the real forward map, one pass per factor.
        let tables: Vec<Vec<u32>> = self
            .factors
            .iter()
            .map(|f| (0..n).map(|x| f.reduce_u64(x) as u32).collect())
            .collect();

        // Fast path: small products and small factors admit a
        // division-free scan (sums wrap by comparison, products go
        // through per-factor multiplication tables).
        const TABLE_CAP: u64 = 2048;
        if n <= u32::MAX as u64 && self.factors.iter().all(|f| f.modulus() <= TABLE_CAP) {
            let moduli: Vec<u64> = self.factors.iter().map(|f| f.modulus()).collect();
            let mul_tables: Vec<Vec<u32>> = moduli
                .iter()
                .map(|&m| {
                    let mut t = vec![0u32; (m * m) as usize];
                    for a in 0..m {
                        // Row a lists a·0, a·1, ... by repeated addition.
                        let mut acc = 0u64;
                        for b in 1..m {
                            acc += a;
                            if acc >= m {
                                acc -= m;
                            }
                            t[(a * m + b) as usize] = acc as u32;
                        }
                    }
                    t
                })
                .collect();
            for x in 0..n {
                for y in x..n {
                    let mut s = x + y;
                    if s >= n {
                        s -= n;
                    }
                    let p = (x * y) % n;
                    for (i, table) in tables.iter().enumerate() {
                        let m = moduli[i];
                        let (fx, fy) = (table[x as usize] as u64, table[y as usize] as u64);
                        let mut fs = fx + fy;
                        if fs >= m {
                            fs -= m;
                        }
                        if table[s as usize] as u64 != fs
                            || table[p as usize] != mul_tables[i][(fx * m + fy) as usize]
                        {
                            return Err((x, y));
                        }
                    }
                }
            }
            return Ok(());
        }

        for x in 0..n {
            for y in x..n {
                let s = self.source.add(x, y);
                let p = self.source.mul(x, y);
                for (f, table) in self.factors.iter().zip(&tables) {
                    let (fx, fy) = (table[x as usize] as u64, table[y as usize] as u64);
                    if table[s as usize] as u64 != f.add(fx, fy)
                        || table[p as usize] as u64 != f.mul(fx, fy)
                    {
                        return Err((x, y));
                    }
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub moduli: Vec<u64>,
    pub iso: RingIso,
}

impl Decomposition {
    pub fn indecomposable(&self) -> bool {
        self.moduli.len() == 1
    }
}

/// Splits Z_n into prime-power factor rings with the residue
/// isomorphism. Prime powers are returned as themselves.
pub fn decompose(n: u64) -> Result<Decomposition, ModularError> {
    if n < 2 {
        return Err(ModularError::ModulusTooSmall);
    }
    let fact = factorize(&Nat::from(n)).expect("n >= 2 factorizes");
    let moduli: Vec<u64> = fact
        .pairs()
        .iter()
        .map(|(p, m)| p.to_u64().expect("prime factor fits u64").pow(*m))
        .collect();
    let iso = crt_iso(&moduli)?;
    // Cheap structural check at construction; the full pairwise
    // preservation check is exercised separately at desk scale.
    if n <= 10_000 {
        assert!(iso.verify_bijective(), "residue map failed round-trip for n = {n}");
    }
    Ok(Decomposition { moduli, iso })
}

const CRT_SCAN_LIMIT: u64 = 1_000_000;

pub(crate) fn crt_by_scan(pairs: &[(u64, u64)], product: u64) -> Option<u64> {
    (0..product).find(|&x| pairs.iter().all(|&(r, m)| x % m == r))
}

fn ext_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_s, mut s) = (BigInt::from(1), BigInt::from(0));
    let (mut old_t, mut t) = (BigInt::from(0), BigInt::from(1));
    while r != BigInt::from(0) {
        let q = &old_r / &r;
        let next_r = &old_r - &q * &r;
        old_r = std::mem::replace(&mut r, next_r);
        let next_s = &old_s - &q * &s;
        old_s = std::mem::replace(&mut s, next_s);
        let next_t = &old_t - &q * &t;
        old_t = std::mem::replace(&mut t, next_t);
    }
    (old_r, old_s, old_t)
}

fn mod_floor(v: &BigInt, m: &BigInt) -> BigInt {
    let r = v % m;
    if r < BigInt::from(0) {
        r + m
    } else {
        r
    }
}

pub(crate) fn crt_pairwise(pairs: &[(Nat, Nat)]) -> Nat {
    let mut x = BigInt::from(pairs[0].0.big().clone());
    let mut modulus = BigInt::from(pairs[0].1.big().clone());
    for (r, m) in &pairs[1..] {
        let r = BigInt::from(r.big().clone());
        let m = BigInt::from(m.big().clone());
        // x + modulus*t hits r mod m; t from the inverse of modulus mod m.
        let (g, s, _) = ext_gcd(&modulus, &m);
        debug_assert!(g == BigInt::from(1));
        let t = mod_floor(&((&r - &x) * &s), &m);
        x += &modulus * t;
        modulus *= &m;
        x = mod_floor(&x, &modulus);
    }
    Nat::from(x.to_biguint().expect("canonical residue is nonnegative"))
}

/// Simultaneous congruence solver: returns the unique solution in
/// `[0, product of moduli)`. Scans when the product is small, chains
/// pairwise reconstructions when it is not.
pub fn crt_solve(pairs: &[(Nat, Nat)]) -> Result<Nat, ModularError> {
    if pairs.is_empty() {
        return Err(ModularError::ArgumentOutOfRange("need at least one congruence"));
    }
    let two = Nat::from(2u64);
    for (r, m) in pairs {
        if m < &two {
            return Err(ModularError::ModulusTooSmall);
        }
        if r >= m {
            return Err(ModularError::ArgumentOutOfRange("residues must be reduced"));
        }
    }
    for i in 0..pairs.len() {
        for j in i + 1..pairs.len() {
            let g = gcd_nat(&pairs[i].1, &pairs[j].1);
            if !g.is_one() {
                return Err(ModularError::ModuliNotCoprime {
                    a: pairs[i].1.clone(),
                    b: pairs[j].1.clone(),
                });
            }
        }
    }
    let mut product = Nat::one();
    for (_, m) in pairs {
        product = &product * m;
    }
    match product.to_u64() {
        Some(p) if p <= CRT_SCAN_LIMIT => {
            let small: Vec<(u64, u64)> = pairs
                .iter()
                .map(|(r, m)| (r.to_u64().expect("reduced"), m.to_u64().expect("small")))
                .collect();
            let x = crt_by_scan(&small, p).expect("coprime congruences always admit a solution");
            Ok(Nat::from(x))
        }
        _ => Ok(crt_pairwise(pairs)),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicityReport {
    pub cyclic: bool,
    pub generator: Option<u64>,
    pub criterion_match: bool,
}

fn odd_prime_power(n: u64) -> bool {
    if n < 3 || n % 2 == 0 {
        return false;
    }
    let fact = factorize(&Nat::from(n)).expect("n >= 3 factorizes");
    fact.pairs().len() == 1
}

/// Classification predicate for a cyclic units group: n is 4, an odd
/// prime power, or twice an odd prime power.
fn cyclicity_criterion(n: u64) -> bool {
    n == 4 || odd_prime_power(n) || (n % 2 == 0 && odd_prime_power(n / 2))
}

/// Decides cyclicity of the units group by ascending generator search,
/// and compares the outcome against the classification predicate.
pub fn units_cyclic(n: u64) -> Result<CyclicityReport, ModularError> {
    if n < 3 {
        return Err(ModularError::ArgumentOutOfRange("cyclicity is classified for n >= 3"));
    }
    let ring = ZnRing::new(n)?;
    let phi = (1..n).filter(|&k| gcd_u64(k, n) == 1).count() as u64;
    let mut generator = None;
    for k in 1..n {
        if gcd_u64(k, n) != 1 {
            continue;
        }
        let mut x = k;
        let mut order = 1u64;
        while x != 1 {
            x = ring.mul(x, k);
            order += 1;
        }
        if order == phi {
            generator = Some(k);
            break;
        }
    }
    let cyclic = generator.is_some();
    Ok(CyclicityReport { cyclic, generator, criterion_match: cyclic == cyclicity_criterion(n) })
}

/// Decimal digit tests for divisibility by 2 or 3, computed by repeated
/// division rather than text manipulation.
pub fn digit_rule(n: &Nat, d: u64) -> Result<bool, ModularError> {
    if n.is_zero() {
        return Err(ModularError::ArgumentOutOfRange("digit rules apply to n >= 1"));
    }
    let ten = Nat::from(10u64);
    match d {
        2 => Ok(n.rem_u64(10) % 2 == 0),
        3 => {
            let mut digit_sum = 0u64;
            let mut rest = n.clone();
            while !rest.is_zero() {
                let (q, r) = rest.div_rem(&ten);
                digit_sum += r.to_u64().expect("decimal digit");
                rest = q;
            }
            Ok(digit_sum % 3 == 0)
        }
        other => Err(ModularError::UnsupportedDigitRule(other)),
    }
}
