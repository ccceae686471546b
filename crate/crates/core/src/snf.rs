//! Smith normal form over the integers.
//!
//! For any integer matrix A this produces unimodular U, V with
//! U·A·V = S diagonal, each diagonal entry non-negative and dividing the
//! next. Inverses of U and V are tracked alongside, so `u_inv·s·v_inv`
//! reconstructs A exactly and unimodularity is certified by an integral
//! inverse rather than a determinant computation.
//!
//! Pivots are chosen by minimal absolute value to limit entry growth; there
//! are no modular shortcuts.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::matrix::IntMatrix;

/// Decomposition U·A·V = S with S in Smith normal form.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
    pub u_inv: IntMatrix,
    pub v_inv: IntMatrix,
    /// Number of nonzero diagonal entries.
    pub rank: usize,
    /// Dimensions of the source matrix.
    pub source_rows: usize,
    pub source_cols: usize,
}

impl SmithDecomposition {
    /// The min(rows, cols) diagonal entries of S.
    pub fn diagonal(&self) -> Vec<BigInt> {
        let n = self.s.rows().min(self.s.cols());
        (0..n).map(|i| self.s[(i, i)].clone()).collect()
    }
}

struct Worker {
    s: IntMatrix,
    u: IntMatrix,
    u_inv: IntMatrix,
    v: IntMatrix,
    v_inv: IntMatrix,
}

impl Worker {
    fn swap_rows(&mut self, a: usize, b: usize) {
        self.s.swap_rows(a, b);
        self.u.swap_rows(a, b);
        self.u_inv.swap_cols(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.s.swap_cols(a, b);
        self.v.swap_cols(a, b);
        self.v_inv.swap_rows(a, b);
    }

    /// row[a] += c·row[b], with the inverse op applied to u_inv.
    fn add_row(&mut self, a: usize, b: usize, c: &BigInt) {
        self.s.add_row_multiple(a, b, c);
        self.u.add_row_multiple(a, b, c);
        self.u_inv.add_col_multiple(b, a, &-c);
    }

    /// col[a] += c·col[b], with the inverse op applied to v_inv.
    fn add_col(&mut self, a: usize, b: usize, c: &BigInt) {
        self.s.add_col_multiple(a, b, c);
        self.v.add_col_multiple(a, b, c);
        self.v_inv.add_row_multiple(b, a, &-c);
    }

    fn negate_row(&mut self, a: usize) {
        self.s.negate_row(a);
        self.u.negate_row(a);
        self.u_inv.negate_col(a);
    }
}

/// Minimal-absolute-value nonzero entry of S[k.., k..].
fn find_pivot(s: &IntMatrix, k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    let mut best_abs = BigInt::zero();
    for i in k..s.rows() {
        for j in k..s.cols() {
            let e = &s[(i, j)];
            if e.is_zero() {
                continue;
            }
            let a = e.abs();
            if best.is_none() || a < best_abs {
                best = Some((i, j));
                best_abs = a;
            }
        }
    }
    best
}

pub fn smith_normal_form(a: &IntMatrix) -> SmithDecomposition {
    let (rows, cols) = (a.rows(), a.cols());
    let mut w = Worker {
        s: a.clone(),
        u: IntMatrix::identity(rows),
        u_inv: IntMatrix::identity(rows),
        v: IntMatrix::identity(cols),
        v_inv: IntMatrix::identity(cols),
    };

    let mut rank = 0;
    for k in 0..rows.min(cols) {
        'position: loop {
            let Some((pi, pj)) = find_pivot(&w.s, k) else {
                break;
            };
            w.swap_rows(k, pi);
            w.swap_cols(k, pj);

            let mut clean = true;
            for i in k + 1..rows {
                if w.s[(i, k)].is_zero() {
                    continue;
                }
                let q = &w.s[(i, k)] / &w.s[(k, k)];
                w.add_row(i, k, &-q);
                if !w.s[(i, k)].is_zero() {
                    clean = false;
                }
            }
            for j in k + 1..cols {
                if w.s[(k, j)].is_zero() {
                    continue;
                }
                let q = &w.s[(k, j)] / &w.s[(k, k)];
                w.add_col(j, k, &-q);
                if !w.s[(k, j)].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                // Remainders smaller than the pivot appeared; re-pivot.
                continue 'position;
            }

            // Divisibility pass: the pivot must divide every remaining entry.
            for i in k + 1..rows {
                for j in k + 1..cols {
                    if !w.s[(i, j)].mod_floor(&w.s[(k, k)]).is_zero() {
                        let one = BigInt::from(1);
                        w.add_row(k, i, &one);
                        continue 'position;
                    }
                }
            }
            break 'position;
        }
        if w.s[(k, k)].is_zero() {
            break;
        }
        if w.s[(k, k)].is_negative() {
            w.negate_row(k);
        }
        rank += 1;
    }

    debug_assert_eq!(w.u.mul(a).mul(&w.v), w.s);
    SmithDecomposition {
        u: w.u,
        s: w.s,
        v: w.v,
        u_inv: w.u_inv,
        v_inv: w.v_inv,
        rank,
        source_rows: rows,
        source_cols: cols,
    }
}

/// Solve A·x = b over the integers, given the decomposition of A.
/// Returns None when no integral solution exists.
pub fn solve(dec: &SmithDecomposition, b: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(b.len(), dec.source_rows, "rhs length mismatch");
    let ub = dec.u.apply(b);
    let mut y = vec![BigInt::zero(); dec.source_cols];
    for (i, ubi) in ub.iter().enumerate() {
        if i < dec.rank {
            let d = &dec.s[(i, i)];
            let (q, r) = ubi.div_rem(d);
            if !r.is_zero() {
                return None;
            }
            y[i] = q;
        } else if !ubi.is_zero() {
            return None;
        }
    }
    Some(dec.v.apply(&y))
}

/// Basis of the integer kernel lattice {x : A·x = 0}, as matrix columns.
pub fn kernel_basis(dec: &SmithDecomposition) -> IntMatrix {
    let idx: Vec<usize> = (dec.rank..dec.source_cols).collect();
    dec.v.select_columns(&idx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn check_decomposition(a: &IntMatrix, dec: &SmithDecomposition) {
        assert_eq!(dec.u.mul(a).mul(&dec.v), dec.s, "U·A·V ≠ S");
        assert_eq!(dec.u_inv.mul(&dec.s).mul(&dec.v_inv), *a, "U⁻¹·S·V⁻¹ ≠ A");
        assert_eq!(dec.u.mul(&dec.u_inv), IntMatrix::identity(a.rows()));
        assert_eq!(dec.v.mul(&dec.v_inv), IntMatrix::identity(a.cols()));
        let d = dec.diagonal();
        for (i, di) in d.iter().enumerate() {
            assert!(!di.is_negative(), "negative invariant factor");
            if i + 1 < d.len() && !di.is_zero() {
                assert!(
                    d[i + 1].mod_floor(di).is_zero() || d[i + 1].is_zero(),
                    "divisibility chain broken: {} ∤ {}",
                    di,
                    d[i + 1]
                );
            }
            if di.is_zero() && i + 1 < d.len() {
                assert!(d[i + 1].is_zero(), "zero before nonzero on the diagonal");
            }
        }
        for i in 0..dec.s.rows() {
            for j in 0..dec.s.cols() {
                if i != j {
                    assert!(dec.s[(i, j)].is_zero(), "off-diagonal entry in S");
                }
            }
        }
    }

    #[test]
    fn identity_is_fixed() {
        let a = IntMatrix::identity(2);
        let dec = smith_normal_form(&a);
        check_decomposition(&a, &dec);
        assert_eq!(dec.s, IntMatrix::identity(2));
        assert_eq!(dec.rank, 2);
    }

    #[test]
    fn zero_1x1() {
        let a = IntMatrix::zeros(1, 1);
        let dec = smith_normal_form(&a);
        check_decomposition(&a, &dec);
        assert!(dec.s[(0, 0)].is_zero());
        assert_eq!(dec.rank, 0);
    }

    #[test]
    fn two_by_two_invariant_factors() {
        // gcd of entries is 2, |det| = |16-24| = 8, so the factors are 2, 4.
        let a = IntMatrix::from_rows(&[vec![2, 4], vec![6, 8]]);
        let dec = smith_normal_form(&a);
        check_decomposition(&a, &dec);
        assert_eq!(dec.diagonal(), vec![BigInt::from(2), BigInt::from(4)]);
    }

    #[test]
    fn empty_dimensions() {
        for (r, c) in [(0, 0), (0, 3), (3, 0)] {
            let a = IntMatrix::zeros(r, c);
            let dec = smith_normal_form(&a);
            check_decomposition(&a, &dec);
            assert_eq!(dec.rank, 0);
        }
    }

    #[test]
    fn solve_diagonal_and_unsolvable() {
        let a = IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]);
        let dec = smith_normal_form(&a);
        let sol = solve(&dec, &[BigInt::from(4), BigInt::from(9)]).unwrap();
        assert_eq!(a.apply(&sol), vec![BigInt::from(4), BigInt::from(9)]);
        assert!(solve(&dec, &[BigInt::from(1), BigInt::from(0)]).is_none());
    }

    #[test]
    fn kernel_of_singular_matrix() {
        let a = IntMatrix::from_rows(&[vec![1, 2, 3], vec![2, 4, 6]]);
        let dec = smith_normal_form(&a);
        let k = kernel_basis(&dec);
        assert_eq!(k.cols(), 2);
        let prod = a.mul(&k);
        assert!(prod.is_zero());
    }

    proptest! {
        #[test]
        fn random_matrices_decompose(
            rows in 0usize..5,
            cols in 0usize..5,
            seed in proptest::collection::vec(-9i64..=9, 0..25),
        ) {
            let mut entries = Vec::with_capacity(rows * cols);
            for i in 0..rows * cols {
                entries.push(BigInt::from(*seed.get(i % seed.len().max(1)).unwrap_or(&0)));
            }
            let a = IntMatrix::new(rows, cols, entries).unwrap();
            let dec = smith_normal_form(&a);
            check_decomposition(&a, &dec);
        }

        #[test]
        fn kernel_vectors_annihilate(
            rows in 1usize..4,
            cols in 1usize..5,
            seed in proptest::collection::vec(-6i64..=6, 1..20),
        ) {
            let mut entries = Vec::with_capacity(rows * cols);
            for i in 0..rows * cols {
                entries.push(BigInt::from(seed[i % seed.len()]));
            }
            let a = IntMatrix::new(rows, cols, entries).unwrap();
            let dec = smith_normal_form(&a);
            let k = kernel_basis(&dec);
            prop_assert!(a.mul(&k).is_zero());
            prop_assert_eq!(k.cols(), cols - dec.rank);
        }
    }
}
