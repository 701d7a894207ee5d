//! Exact coefficients: Laurent polynomials in a formal root `v` of `q`
//! (`q = v^D`), their fraction field, and sparse exact linear algebra.

mod field;
mod laurent;
pub mod linalg;

pub use field::FieldScalar;
pub use laurent::{q_integer, rat, LaurentScalar, Rat};
pub use linalg::{matrix_rank, matrix_rank_with, Matrix, RankMode, SparseVec, Subspace};

/// Every algebra coefficient in this crate.
pub type Scalar = FieldScalar;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("scalar parse error: {0}")]
pub struct ScalarParseError(pub String);

#[cfg(test)]
mod tests {
    use super::*;

    fn l(s: &str) -> LaurentScalar {
        s.parse().unwrap()
    }

    #[test]
    fn q_integers() {
        assert!(q_integer(0, 1, 2).is_zero());
        assert!(q_integer(1, 1, 2).is_one());
        assert_eq!(q_integer(2, 1, 2), l("v^2 + v^-2"));
        assert_eq!(q_integer(-2, 1, 2), -q_integer(2, 1, 2));
        assert_eq!(q_integer(3, 1, 2).to_string(), "v^4 + 1 + v^-4");
    }

    #[test]
    fn text_round_trip() {
        for s in ["1 + -1*v^-2", "v^2", "-1", "3/2*v^5 + -7*v + 2", "0"] {
            assert_eq!(l(s).to_string(), s);
        }
        assert_eq!(l("v - 1").to_string(), "v + -1");
        assert_eq!(l("-v^-3 + 2*v^-3"), l("v^-3"));
    }

    #[test]
    fn field_normal_form() {
        // (v^4 - 1)/(v^2 - 1) = v^2 + 1
        let x = FieldScalar::new(l("v^4 + -1"), l("v^2 + -1"));
        assert_eq!(x, FieldScalar::from(l("v^2 + 1")));
        // 1/(q - q^-1) with q = v^2 is v^2/(v^4 - 1)
        let y = FieldScalar::new(l("1"), l("v^2 + -1*v^-2"));
        assert_eq!(y.numer(), &l("v^2"));
        assert_eq!(y.denom(), &l("v^4 + -1"));
        let back: FieldScalar = y.to_string().parse().unwrap();
        assert_eq!(back, y);
        assert!((&y * &FieldScalar::from(l("v^2 + -1*v^-2"))).is_one());
    }

    #[test]
    fn rank_examples() {
        assert_eq!(matrix_rank(&Matrix::identity(2)), 2);
        let m = Matrix::from_dense(vec![
            vec![l("v").into(), l("v^2").into()],
            vec![l("1").into(), l("v").into()],
        ]);
        assert_eq!(matrix_rank(&m), 1);
        assert_eq!(matrix_rank_with(&m, RankMode::Fast { seed: 7 }), 1);
        assert_eq!(matrix_rank(&Matrix::new(3)), 0);
    }

    #[test]
    fn solve_small_system() {
        // x + v y = 1, v x + y = 0
        let one = FieldScalar::one();
        let v = FieldScalar::v_pow(1);
        let rows = vec![
            SparseVec::from([(0, one.clone()), (1, v.clone())]),
            SparseVec::from([(0, v.clone()), (1, one.clone())]),
        ];
        let sol = linalg::solve_linear(&rows, &[one.clone(), FieldScalar::zero()], 2).unwrap();
        assert!(sol.nullspace.is_empty());
        let x = &sol.particular[&0];
        let y = &sol.particular[&1];
        assert!((&(x + &(&v * y)) - &one).is_zero());
        assert!((&(&v * x) + y).is_zero());
    }
}
