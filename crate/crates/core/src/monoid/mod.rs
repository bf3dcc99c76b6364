//! Monoid machinery: element iterates, homomorphism checking,
//! classification of finite operation tables, and the formal-difference
//! completions that produce the integers and the rationals.

mod grothendieck;
mod integers;
mod rationals;

pub use grothendieck::{
    grothendieck, grothendieck_finite, signed_iterate, CancellativeMonoid, Group,
    GrothendieckElement, GrothendieckGroup, NatAddMonoid, NatMulMonoid,
};
pub use integers::{build_integers, IntAddGroup, IntZ, IntegerRing, Sign};
pub use rationals::{
    archimedean_witness, build_rationals, quotient_to_two_step, two_step_to_quotient,
    verify_route_agreement, RatQ, RationalField, RationalsRoute, TwoStepRat,
};

use std::fmt;
use thiserror::Error;

use crate::nat::Nat;
use crate::peano::recurse;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MonoidError {
    #[error("ElementNotInCarrier: element is outside the carrier")]
    ElementNotInCarrier,
    #[error("NotCancellative: composing {a} with {b} and with {c} collides")]
    NotCancellative { a: usize, b: usize, c: usize },
    #[error("NotCommutative: {a} and {b} do not commute")]
    NotCommutative { a: usize, b: usize },
    #[error("MalformedTable: {0}")]
    MalformedTable(&'static str),
    #[error("DivisionByZero: zero has no multiplicative inverse")]
    DivisionByZero,
    #[error("ArgumentOutOfRange: {0}")]
    ArgumentOutOfRange(&'static str),
}

impl MonoidError {
    pub fn code(&self) -> &'static str {
        match self {
            MonoidError::ElementNotInCarrier => "ElementNotInCarrier",
            MonoidError::NotCancellative { .. } => "NotCancellative",
            MonoidError::NotCommutative { .. } => "NotCommutative",
            MonoidError::MalformedTable(_) => "MalformedTable",
            MonoidError::DivisionByZero => "DivisionByZero",
            MonoidError::ArgumentOutOfRange(_) => "ArgumentOutOfRange",
        }
    }
}

/// An associative operation with identity over some carrier. `contains`
/// restricts the carrier when it is a proper subset of the element type.
pub trait Monoid {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn identity(&self) -> Self::Elem;
    fn op(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn contains(&self, _a: &Self::Elem) -> bool {
        true
    }
}

/// n-fold iterate of `a`: the identity composed with `a` n times.
/// Satisfies iterate(0) = e and iterate(m + n) = iterate(m) composed
/// with iterate(n).
pub fn mon_iterate<M: Monoid>(m: &M, a: &M::Elem, n: &Nat) -> Result<M::Elem, MonoidError> {
    if !m.contains(a) {
        return Err(MonoidError::ElementNotInCarrier);
    }
    Ok(recurse(m.identity(), |x| m.op(a, &x), n))
}

/// A monoid given by an explicit operation table. Elements are indices
/// into the label list; the table is row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteMonoid {
    labels: Vec<String>,
    table: Vec<usize>,
    identity: usize,
}

impl FiniteMonoid {
    /// Validates the table shape, the identity law, and associativity
    /// over every triple before accepting.
    pub fn new(
        labels: Vec<String>,
        table: Vec<usize>,
        identity: usize,
    ) -> Result<Self, MonoidError> {
        let n = labels.len();
        if n == 0 {
            return Err(MonoidError::MalformedTable("carrier must be nonempty"));
        }
        if table.len() != n * n {
            return Err(MonoidError::MalformedTable("table must have order-squared entries"));
        }
        if table.iter().any(|&v| v >= n) {
            return Err(MonoidError::MalformedTable("table entry outside the carrier"));
        }
        if identity >= n {
            return Err(MonoidError::MalformedTable("identity index outside the carrier"));
        }
        let at = |a: usize, b: usize| table[a * n + b];
        for a in 0..n {
            if at(identity, a) != a || at(a, identity) != a {
                return Err(MonoidError::MalformedTable("identity law fails"));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if at(at(a, b), c) != at(a, at(b, c)) {
                        return Err(MonoidError::MalformedTable("operation is not associative"));
                    }
                }
            }
        }
        Ok(FiniteMonoid { labels, table, identity })
    }

    pub fn from_table(table: Vec<usize>, identity: usize) -> Result<Self, MonoidError> {
        let n = (table.len() as f64).sqrt() as usize;
        let labels = (0..n).map(|i| i.to_string()).collect();
        FiniteMonoid::new(labels, table, identity)
    }

    /// Residue addition modulo n, identity 0.
    pub fn cyclic_add(n: usize) -> Self {
        assert!(n >= 1);
        let table = (0..n).flat_map(|a| (0..n).map(move |b| (a + b) % n)).collect();
        FiniteMonoid::from_table(table, 0).expect("residue addition is a monoid")
    }

    /// Residue multiplication modulo n, identity 1 mod n.
    pub fn residue_mul(n: usize) -> Self {
        assert!(n >= 1);
        let table = (0..n).flat_map(|a| (0..n).map(move |b| (a * b) % n)).collect();
        FiniteMonoid::from_table(table, 1 % n).expect("residue multiplication is a monoid")
    }

    pub fn trivial() -> Self {
        FiniteMonoid::from_table(vec![0], 0).expect("one-point table")
    }

    /// Componentwise product; element (a, b) sits at index a * other.order() + b.
    pub fn direct_product(&self, other: &FiniteMonoid) -> Self {
        let (n1, n2) = (self.order(), other.order());
        let mut labels = Vec::with_capacity(n1 * n2);
        let mut table = Vec::with_capacity(n1 * n2 * n1 * n2);
        for a in 0..n1 {
            for b in 0..n2 {
                labels.push(format!("({},{})", self.labels[a], other.labels[b]));
            }
        }
        for a1 in 0..n1 {
            for b1 in 0..n2 {
                for a2 in 0..n1 {
                    for b2 in 0..n2 {
                        table.push(self.op_idx(a1, a2) * n2 + other.op_idx(b1, b2));
                    }
                }
            }
        }
        let identity = self.identity * n2 + other.identity;
        FiniteMonoid::new(labels, table, identity).expect("product of monoids is a monoid")
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn identity_idx(&self) -> usize {
        self.identity
    }

    pub fn op_idx(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order() + b]
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    /// Exchange format: `order k` then k rows of k space-separated
    /// indices. The format fixes the identity at index 0.
    pub fn write_table(&self) -> Result<String, MonoidError> {
        if self.identity != 0 {
            return Err(MonoidError::MalformedTable("exchange format requires identity 0"));
        }
        let n = self.order();
        let mut out = format!("order {n}\n");
        for a in 0..n {
            let row: Vec<String> = (0..n).map(|b| self.op_idx(a, b).to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        Ok(out)
    }

    pub fn parse_table(text: &str) -> Result<Self, MonoidError> {
        let mut lines = text.lines();
        let header = lines.next().ok_or(MonoidError::MalformedTable("missing header"))?;
        let n: usize = header
            .strip_prefix("order ")
            .and_then(|rest| rest.parse().ok())
            .ok_or(MonoidError::MalformedTable("header must be `order k`"))?;
        let mut table = Vec::with_capacity(n * n);
        for _ in 0..n {
            let line = lines.next().ok_or(MonoidError::MalformedTable("missing table row"))?;
            let row: Vec<usize> = line
                .split_whitespace()
                .map(|tok| tok.parse().map_err(|_| MonoidError::MalformedTable("bad index")))
                .collect::<Result<_, _>>()?;
            if row.len() != n {
                return Err(MonoidError::MalformedTable("row length must equal the order"));
            }
            table.extend(row);
        }
        if lines.any(|l| !l.trim().is_empty()) {
            return Err(MonoidError::MalformedTable("trailing content after the table"));
        }
        FiniteMonoid::from_table(table, 0)
    }
}

impl Monoid for FiniteMonoid {
    type Elem = usize;

    fn identity(&self) -> usize {
        self.identity
    }

    fn op(&self, a: &usize, b: &usize) -> usize {
        self.op_idx(*a, *b)
    }

    fn contains(&self, a: &usize) -> bool {
        *a < self.order()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MapClass {
    Hom,
    Iso,
    Neither,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomReport {
    pub class: MapClass,
    /// First pair on which the map fails to preserve the operation, if any.
    pub witness: Option<(usize, usize)>,
}

/// Classifies a total map between finite monoids: structure-preserving,
/// additionally bijective, or neither (with a counterexample pair).
pub fn check_homomorphism(f: &[usize], source: &FiniteMonoid, target: &FiniteMonoid) -> HomReport {
    assert_eq!(f.len(), source.order(), "map must be total on the source carrier");
    assert!(f.iter().all(|&v| v < target.order()), "map must land in the target carrier");
    let e = source.identity_idx();
    if f[e] != target.identity_idx() {
        return HomReport { class: MapClass::Neither, witness: Some((e, e)) };
    }
    for a in 0..source.order() {
        for b in 0..source.order() {
            if f[source.op_idx(a, b)] != target.op_idx(f[a], f[b]) {
                return HomReport { class: MapClass::Neither, witness: Some((a, b)) };
            }
        }
    }
    let bijective = source.order() == target.order() && {
        let mut hit = vec![false; target.order()];
        f.iter().for_each(|&v| hit[v] = true);
        hit.iter().all(|&h| h)
    };
    HomReport { class: if bijective { MapClass::Iso } else { MapClass::Hom }, witness: None }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidProfile {
    pub commutative: bool,
    pub cancellative: bool,
    /// Nothing shy of the identity composes to the identity.
    pub positive: bool,
    pub units: Vec<usize>,
    /// Elements whose iterates reach the whole carrier.
    pub generators: Vec<usize>,
    /// Some non-identity element generates; defined only past order 1.
    pub primitive: bool,
    pub group: bool,
}

/// Exhaustive classification of a finite operation table.
pub fn monoid_classify(m: &FiniteMonoid) -> MonoidProfile {
    let n = m.order();
    let e = m.identity_idx();

    let mut commutative = true;
    'comm: for a in 0..n {
        for b in 0..n {
            if m.op_idx(a, b) != m.op_idx(b, a) {
                commutative = false;
                break 'comm;
            }
        }
    }

    // Cancellative iff every row and every column is injective.
    let mut cancellative = true;
    'canc: for a in 0..n {
        let mut row_hit = vec![false; n];
        let mut col_hit = vec![false; n];
        for b in 0..n {
            let (r, c) = (m.op_idx(a, b), m.op_idx(b, a));
            if row_hit[r] || col_hit[c] {
                cancellative = false;
                break 'canc;
            }
            row_hit[r] = true;
            col_hit[c] = true;
        }
    }

    let mut positive = true;
    'pos: for a in 0..n {
        for b in 0..n {
            if m.op_idx(a, b) == e && (a != e || b != e) {
                positive = false;
                break 'pos;
            }
        }
    }

    let units: Vec<usize> = (0..n)
        .filter(|&a| (0..n).any(|b| m.op_idx(a, b) == e && m.op_idx(b, a) == e))
        .collect();

    let generators: Vec<usize> = (0..n)
        .filter(|&a| {
            let mut seen = vec![false; n];
            let mut x = e;
            let mut count = 0;
            while !seen[x] {
                seen[x] = true;
                count += 1;
                x = m.op_idx(a, x);
            }
            count == n
        })
        .collect();

    let primitive = n >= 2 && generators.iter().any(|&g| g != e);
    let group = units.len() == n;

    MonoidProfile { commutative, cancellative, positive, units, generators, primitive, group }
}
