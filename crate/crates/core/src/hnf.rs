//! Column-style Hermite normal form.
//!
//! `column_hermite` returns the unique echelon basis of the column lattice
//! of its input: pivots positive, entries left of a pivot reduced into
//! [0, pivot), zero columns dropped. Two matrices span the same lattice
//! exactly when their forms are equal, which is how subgroup equality is
//! decided throughout the crate.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::matrix::IntMatrix;

/// Apply the unimodular 2-column transform
/// (c1, c2) ← (m11·c1 + m21·c2, m12·c1 + m22·c2).
fn two_col(
    h: &mut IntMatrix,
    c1: usize,
    c2: usize,
    m11: &BigInt,
    m12: &BigInt,
    m21: &BigInt,
    m22: &BigInt,
) {
    for i in 0..h.rows() {
        let a = h[(i, c1)].clone();
        let b = h[(i, c2)].clone();
        h[(i, c1)] = &a * m11 + &b * m21;
        h[(i, c2)] = &a * m12 + &b * m22;
    }
}

pub fn column_hermite(a: &IntMatrix) -> IntMatrix {
    let mut h = a.clone();
    let (rows, cols) = (h.rows(), h.cols());
    let mut pc = 0usize;

    for r in 0..rows {
        if pc >= cols {
            break;
        }
        // Bring a nonzero entry of row r into column pc.
        let Some(j0) = (pc..cols).find(|&j| !h[(r, j)].is_zero()) else {
            continue;
        };
        h.swap_cols(pc, j0);

        // Gcd out the rest of the row to the right.
        for j in pc + 1..cols {
            if h[(r, j)].is_zero() {
                continue;
            }
            let a_ = h[(r, pc)].clone();
            let b_ = h[(r, j)].clone();
            let eg = a_.extended_gcd(&b_);
            let (g, x, y) = (eg.gcd, eg.x, eg.y);
            let m21 = -(&b_ / &g);
            let m22 = &a_ / &g;
            two_col(&mut h, pc, j, &x, &m21, &y, &m22);
        }
        if h[(r, pc)].is_negative() {
            h.negate_col(pc);
        }
        // Reduce the entries to the left of the pivot into [0, pivot).
        let pivot = h[(r, pc)].clone();
        for j in 0..pc {
            let q = h[(r, j)].div_floor(&pivot);
            h.add_col_multiple(j, pc, &-q);
        }
        pc += 1;
    }

    h.drop_zero_columns()
}

/// Lattice equality: identical column spans over the integers.
pub fn same_column_span(a: &IntMatrix, b: &IntMatrix) -> bool {
    a.rows() == b.rows() && column_hermite(a) == column_hermite(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn identity_is_fixed() {
        let id = IntMatrix::identity(3);
        assert_eq!(column_hermite(&id), id);
    }

    #[test]
    fn sign_is_normalized() {
        let a = IntMatrix::from_rows(&[vec![2], vec![0]]);
        let b = IntMatrix::from_rows(&[vec![-2], vec![0]]);
        assert_eq!(column_hermite(&a), column_hermite(&b));
        assert_eq!(column_hermite(&a), a);
    }

    /// Brute-force lattice membership: every integer combination of the
    /// columns with small coefficients, collected inside a box.
    fn lattice_points_in_box(m: &IntMatrix, bound: i64) -> Vec<Vec<BigInt>> {
        assert_eq!(m.rows(), 2);
        assert!(m.cols() <= 2);
        let range = 4 * bound;
        let mut pts = std::collections::BTreeSet::new();
        for c0 in -range..=range {
            for c1 in -range..=range {
                let mut v = vec![BigInt::zero(), BigInt::zero()];
                for (ci, coeff) in [c0, c1].iter().enumerate() {
                    if ci >= m.cols() {
                        continue;
                    }
                    for i in 0..2 {
                        v[i] += &m[(i, ci)] * BigInt::from(*coeff);
                    }
                }
                if v.iter().all(|x| x.abs() <= BigInt::from(bound)) {
                    pts.insert(v);
                }
            }
        }
        pts.into_iter().collect()
    }

    #[test]
    fn equal_spans_have_equal_forms() {
        // Both span { (x, y) : y even }.
        let a = IntMatrix::from_rows(&[vec![1, 1], vec![0, 2]]);
        let b = IntMatrix::from_rows(&[vec![1, 0], vec![2, 2]]);
        assert_eq!(
            lattice_points_in_box(&a, 3),
            lattice_points_in_box(&b, 3),
            "oracle disagrees: spans differ"
        );
        assert_eq!(column_hermite(&a), column_hermite(&b));
        assert!(same_column_span(&a, &b));
    }

    #[test]
    fn different_spans_detected() {
        let a = IntMatrix::from_rows(&[vec![2], vec![0]]);
        let b = IntMatrix::from_rows(&[vec![3], vec![0]]);
        assert!(!same_column_span(&a, &b));
    }

    #[test]
    fn pivots_are_reduced() {
        let a = IntMatrix::from_rows(&[vec![1, 7], vec![0, 5]]);
        let h = column_hermite(&a);
        // Pivot rows: entry left of the second pivot lies in [0, 5).
        assert!(h[(1, 0)] >= BigInt::zero() && h[(1, 0)] < BigInt::from(5));
        assert!(h[(0, 0)].is_one());
    }
}
