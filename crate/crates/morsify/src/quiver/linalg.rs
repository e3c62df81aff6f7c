use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};

use super::Quiver;

/// Fraction-free elimination; returns (rank, determinant if full rank).
fn bareiss(q: &Quiver) -> (usize, BigInt) {
    let n = q.n();
    let mut m: Vec<Vec<BigInt>> = (0..n).map(|i| (0..n).map(|j| BigInt::from(q.b(i, j))).collect()).collect();
    let mut prev = BigInt::from(1);
    let mut sign = 1i32;
    let mut row = 0;
    for col in 0..n {
        let Some(p) = (row..n).find(|&r| !m[r][col].is_zero()) else { continue };
        if p != row {
            m.swap(p, row);
            sign = -sign;
        }
        for r in row + 1..n {
            for c in col + 1..n {
                let v = &m[row][col] * &m[r][c] - &m[r][col] * &m[row][c];
                m[r][c] = v / &prev;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[row][col].clone();
        row += 1;
    }
    if row < n {
        (row, BigInt::zero())
    } else if n == 0 {
        (0, BigInt::from(1))
    } else {
        (n, prev * sign)
    }
}

pub fn abs_det(q: &Quiver) -> BigUint {
    bareiss(q).1.abs().to_biguint().expect("absolute value is non-negative")
}

pub fn rank(q: &Quiver) -> usize {
    bareiss(q).0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn det_of_a3_path_is_zero() {
        let q = Quiver::from_arrows(3, &[(0, 1, 1), (1, 2, 1)]).unwrap();
        assert_eq!(abs_det(&q), 0u32.into());
        assert_eq!(rank(&q), 2);
    }

    #[test]
    fn det_of_a4_path_is_one() {
        let q = Quiver::from_arrows(4, &[(0, 1, 1), (2, 1, 1), (2, 3, 1)]).unwrap();
        assert_eq!(abs_det(&q), 1u32.into());
    }

    #[test]
    fn det_with_multiplicities() {
        let q = Quiver::from_arrows(2, &[(0, 1, 3)]).unwrap();
        assert_eq!(abs_det(&q), 9u32.into());
    }
}
