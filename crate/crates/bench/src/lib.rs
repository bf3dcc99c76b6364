//! Deterministic input builders shared by the benchmark targets.

use constructa::{make_gf, make_prime_field, ExtField, Nat, Poly, PrimeField};

/// Consecutive Fibonacci numbers: the worst case for Euclid's
/// algorithm (every quotient is 1).
pub fn fibonacci_pair(n: u32) -> (Nat, Nat) {
    let mut a = Nat::zero();
    let mut b = Nat::one();
    for _ in 0..n {
        let next = &a + &b;
        a = b;
        b = next;
    }
    (a, b)
}

/// A fixed full-length polynomial over Z_p with xorshift-mixed
/// coefficients, leading coefficient forced nonzero.
pub fn dense_poly(p: u64, degree: usize, seed: u64) -> Poly<PrimeField> {
    let field = make_prime_field(p).expect("benchmark primes are prime");
    let mut state = seed | 1;
    let mut coeffs: Vec<u64> = (0..=degree)
        .map(|_| {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state % p
        })
        .collect();
    if coeffs[degree] == 0 {
        coeffs[degree] = 1;
    }
    Poly::new(field, coeffs)
}

pub fn gf_256() -> ExtField {
    make_gf(2, 8).expect("GF(2^8) is under the carrier cap")
}

pub fn gf_343() -> ExtField {
    make_gf(7, 3).expect("GF(7^3) is under the carrier cap")
}

/// Residue/modulus pairs with a product small enough for the scan
/// route.
pub fn crt_pairs_small() -> Vec<(Nat, Nat)> {
    [(1u64, 97u64), (2, 101)]
        .iter()
        .map(|&(r, m)| (Nat::from(r), Nat::from(m)))
        .collect()
}

/// Residue/modulus pairs whose product exceeds the scan limit, forcing
/// the pairwise reconstruction route.
pub fn crt_pairs_large() -> Vec<(Nat, Nat)> {
    [(1u64, 1009u64), (2, 1013), (3, 1019), (4, 1021)]
        .iter()
        .map(|&(r, m)| (Nat::from(r), Nat::from(m)))
        .collect()
}
