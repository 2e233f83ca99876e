use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;
use crate::numtheory::char_poly_int;

/// Outcome of [`validate_brandt`]. Errors make the matrix unusable;
/// warnings are reported alongside the result.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BrandtReport {
    pub errors: Vec<String>,
    pub warnings: Vec<String>,
}

impl BrandtReport {
    pub fn is_valid(&self) -> bool {
        self.errors.is_empty()
    }
}

/// Checks that `b` is the Brandt matrix of an `n`-regular weighted graph:
/// every row sums to `n` and `n` is an eigenvalue. With weights, also checks
/// `w_j·b_ij = w_i·b_ji`.
pub fn validate_brandt(b: &IntMatrix, n: &BigInt, weights: Option<&[u64]>) -> Result<BrandtReport> {
    if !b.is_square() || b.rows() == 0 {
        return Err(Error::DimensionMismatch(format!(
            "Brandt matrix must be square and nonempty, got {}×{}",
            b.rows(),
            b.cols()
        )));
    }
    if *n < BigInt::from(2) {
        return Err(Error::InvalidInput(format!("N = {n} must be at least 2")));
    }
    let h = b.rows();
    let mut report = BrandtReport::default();
    for i in 0..h {
        let sum: BigInt = b.row(i).iter().sum();
        if sum != *n {
            report.errors.push(format!("row {i} sums to {sum}, expected {n}"));
        }
    }
    let at_n = char_poly_int(b).eval(n);
    if !at_n.is_zero() {
        report.errors.push(format!("characteristic polynomial at {n} is {at_n}, expected 0"));
    }
    if let Some(w) = weights {
        if w.len() != h {
            report.warnings.push(format!("{} weights for a {h}×{h} matrix", w.len()));
        } else {
            for i in 0..h {
                for j in i + 1..h {
                    if BigInt::from(w[j]) * &b[(i, j)] != BigInt::from(w[i]) * &b[(j, i)] {
                        report.warnings.push(format!("w_{j}·b_{i}{j} ≠ w_{i}·b_{j}{i}"));
                    }
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(rows: &[&[i64]], n: i64, weights: Option<&[u64]>) -> BrandtReport {
        validate_brandt(&IntMatrix::from_i64_rows(rows), &BigInt::from(n), weights).unwrap()
    }

    #[test]
    fn examples() {
        assert!(check(&[&[1, 2], &[3, 0]], 3, None).is_valid());
        assert!(!check(&[&[2, 0], &[0, 2]], 3, None).is_valid());
        assert!(check(&[&[3]], 3, None).is_valid());
    }

    #[test]
    fn weight_symmetry_is_a_warning() {
        // w = (3, 1): 1·b01 = 3·b10 holds for [[1,3],[1,3]]
        let ok = check(&[&[1, 3], &[1, 3]], 4, Some(&[3, 1]));
        assert!(ok.is_valid() && ok.warnings.is_empty());
        let off = check(&[&[1, 3], &[1, 3]], 4, Some(&[1, 1]));
        assert!(off.is_valid());
        assert_eq!(off.warnings.len(), 1);
    }

    #[test]
    fn shape_errors() {
        let b = IntMatrix::from_rows(vec![vec![BigInt::from(1), BigInt::from(2)]]).unwrap();
        assert!(validate_brandt(&b, &BigInt::from(3), None).is_err());
        assert!(validate_brandt(&IntMatrix::from_i64_rows(&[&[1]]), &BigInt::from(1), None).is_err());
    }
}
