//! Exact linear solving over any field by Gauss-Jordan elimination.
//! No pivot magnitudes are compared: fields carry no order, so the
//! first nonzero entry in the column is the pivot.

use super::FieldError;
use crate::poly::Field;

/// Result of solving a square system A·x = b.
#[derive(Debug, Clone, PartialEq)]
pub enum LinearOutcome<E> {
    Unique(Vec<E>),
    /// Elimination found no pivot for this column; the matrix is not
    /// invertible.
    Singular { pivot_column: usize },
}

/// Solves A·x = b for square A by Gauss-Jordan elimination with exact
/// field arithmetic.
pub fn linear_solve<F: Field>(
    field: &F,
    a: &[Vec<F::Elem>],
    b: &[F::Elem],
) -> Result<LinearOutcome<F::Elem>, FieldError> {
    let n = a.len();
    if b.len() != n {
        return Err(FieldError::ArgumentOutOfRange("matrix and right-hand side sizes differ"));
    }
    if a.iter().any(|row| row.len() != n) {
        return Err(FieldError::ArgumentOutOfRange("matrix must be square"));
    }

    // Augmented rows [A | b].
    let mut rows: Vec<Vec<F::Elem>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();

    for col in 0..n {
        let pivot = match (col..n).find(|&r| !field.is_zero_elem(&rows[r][col])) {
            Some(r) => r,
            None => return Ok(LinearOutcome::Singular { pivot_column: col }),
        };
        rows.swap(col, pivot);
        let inv = field.inv(&rows[col][col]).expect("pivot is nonzero");
        for entry in rows[col].iter_mut() {
            *entry = field.mul(entry, &inv);
        }
        for r in 0..n {
            if r == col || field.is_zero_elem(&rows[r][col]) {
                continue;
            }
            let factor = rows[r][col].clone();
            for c in col..=n {
                let scaled = field.mul(&factor, &rows[col][c]);
                rows[r][c] = field.sub(&rows[r][c], &scaled);
            }
        }
    }

    Ok(LinearOutcome::Unique(rows.into_iter().map(|mut r| r.pop().expect("augmented")).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{make_gf, make_prime_field, Rationals};
    use crate::monoid::RatQ;
    use crate::poly::FiniteField;

    #[test]
    fn one_by_one_example() {
        // 2x = 3 over Z_5 has the unique solution 4.
        let f5 = make_prime_field(5).unwrap();
        let outcome = linear_solve(&f5, &[vec![2]], &[3]).unwrap();
        assert_eq!(outcome, LinearOutcome::Unique(vec![4]));
    }

    #[test]
    fn identity_system_returns_the_right_hand_side() {
        let f7 = make_prime_field(7).unwrap();
        let a = vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]];
        let outcome = linear_solve(&f7, &a, &[3, 5, 6]).unwrap();
        assert_eq!(outcome, LinearOutcome::Unique(vec![3, 5, 6]));
    }

    #[test]
    fn repeated_rows_are_singular() {
        let f2 = make_prime_field(2).unwrap();
        let a = vec![vec![1, 1], vec![1, 1]];
        let outcome = linear_solve(&f2, &a, &[1, 0]).unwrap();
        assert_eq!(outcome, LinearOutcome::Singular { pivot_column: 1 });
    }

    #[test]
    fn zero_column_reports_its_index() {
        let f3 = make_prime_field(3).unwrap();
        let a = vec![vec![0, 1], vec![0, 2]];
        let outcome = linear_solve(&f3, &a, &[1, 1]).unwrap();
        assert_eq!(outcome, LinearOutcome::Singular { pivot_column: 0 });
    }

    #[test]
    fn solutions_satisfy_the_system() {
        // A fixed 3x3 system over Z_7, checked by substitution.
        let f7 = make_prime_field(7).unwrap();
        let a = vec![vec![2, 3, 1], vec![1, 0, 4], vec![5, 6, 2]];
        let b = vec![1, 2, 3];
        let LinearOutcome::Unique(x) = linear_solve(&f7, &a, &b).unwrap() else {
            panic!("system is invertible");
        };
        for (row, rhs) in a.iter().zip(&b) {
            let lhs = row
                .iter()
                .zip(&x)
                .fold(0, |acc, (coef, xi)| f7.add(&acc, &f7.mul(coef, xi)));
            assert_eq!(lhs, *rhs);
        }
    }

    #[test]
    fn solving_works_over_extension_fields() {
        let gf4 = make_gf(2, 2).unwrap();
        let (e1, e2, e3) = (gf4.element(1), gf4.element(2), gf4.element(3));
        // det = e2·e1 − e1·e1 = X + 1, nonzero.
        let a = vec![vec![e2.clone(), e1.clone()], vec![e1.clone(), e1.clone()]];
        let b = vec![e3.clone(), e2.clone()];
        let LinearOutcome::Unique(x) = linear_solve(&gf4, &a, &b).unwrap() else {
            panic!("system is invertible");
        };
        for (row, rhs) in a.iter().zip(&b) {
            let lhs = row.iter().zip(&x).fold(gf4.zero(), |acc, (coef, xi)| {
                gf4.add(&acc, &gf4.mul(coef, xi))
            });
            assert_eq!(&lhs, rhs);
        }
    }

    #[test]
    fn solving_works_over_the_rationals() {
        // x + y = 3, x − y = 1 has the solution (2, 1).
        let q = Rationals;
        let one = RatQ::of(1, 1);
        let a = vec![vec![one.clone(), one.clone()], vec![one.clone(), RatQ::of(-1, 1)]];
        let b = vec![RatQ::of(3, 1), RatQ::of(1, 1)];
        let outcome = linear_solve(&q, &a, &b).unwrap();
        assert_eq!(outcome, LinearOutcome::Unique(vec![RatQ::of(2, 1), RatQ::of(1, 1)]));
    }

    #[test]
    fn dimension_mismatches_are_rejected() {
        let f5 = make_prime_field(5).unwrap();
        assert!(linear_solve(&f5, &[vec![1, 2]], &[1]).is_err());
        assert!(linear_solve(&f5, &[vec![1]], &[1, 2]).is_err());
    }

    #[test]
    fn affine_maps_with_nonzero_slope_permute_the_carrier() {
        // x ↦ ax + b is a bijection exactly when a ≠ 0; check by
        // counting images over small fields.
        let gf4 = make_gf(2, 2).unwrap();
        for a_label in 1..4 {
            for b_label in 0..4 {
                let (a, b) = (gf4.element(a_label), gf4.element(b_label));
                let mut images: Vec<u64> = (0..4)
                    .map(|x| gf4.label(&gf4.add(&gf4.mul(&a, &gf4.element(x)), &b)))
                    .collect();
                images.sort_unstable();
                assert_eq!(images, vec![0, 1, 2, 3]);
            }
        }
    }
}
