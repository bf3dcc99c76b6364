//! Constructive number tower: Peano naturals with explicit iteration,
//! monoid completions into the integers and rationals, divisibility and
//! primes, residue rings, polynomial rings over fields, and finite
//! fields GF(p^n) built as polynomial quotients.

pub mod divisibility;
pub mod field;
pub mod modular;
pub mod monoid;
pub mod nat;
pub mod peano;
pub mod poly;

pub use divisibility::{
    divides, divisors, factorize, gcd_euclid, goldbach_pair, is_prime, lattice_fold, lcm,
    nth_prime, primes_up_to, DivisibilityError, Factorization, GcdTrace, LatticeOp,
};
pub use field::{
    characteristic_and_prime_subfield, find_isomorphism, frobenius_fixed, linear_solve,
    make_gf, make_prime_field, make_quotient_field, mult_generator, verify_field_axioms,
    verify_splitting, CharacteristicReport, ExtField, FieldError, FieldIso, FrobeniusReport,
    LinearOutcome, PrimeField, Rationals, SplittingRecord, CARRIER_CAP,
};
pub use modular::{
    additive_generators, crt_iso, crt_solve, decompose, digit_rule, totient, units_cyclic,
    units_group, CyclicityReport, Decomposition, ModularError, RingIso, TotientMode, UnitsGroup,
    ZnRing,
};
pub use monoid::{
    archimedean_witness, build_integers, build_rationals, check_homomorphism, grothendieck,
    grothendieck_finite, mon_iterate, monoid_classify, signed_iterate, verify_route_agreement,
    CancellativeMonoid, FiniteMonoid, Group, GrothendieckElement, GrothendieckGroup, HomReport,
    IntAddGroup, IntZ, IntegerRing, MapClass, Monoid, MonoidError, MonoidProfile, NatAddMonoid,
    NatMulMonoid, RatQ, RationalField, RationalsRoute, Sign, TwoStepRat,
};
pub use nat::Nat;
pub use peano::{
    div_algorithm, finset_ops, nat_arith, nat_arith_budgeted, nat_le, recurse, ArithMode, ArithOp,
    FinSet, FinSetSummary, Interval, IntervalKind, PeanoError, SuccessorModel,
    DEFAULT_ITER_BUDGET,
};
pub use poly::{
    factor_split, find_irreducible, is_irreducible, roots, Field, FiniteField, ParsePolyError,
    Poly, PolyError,
};
