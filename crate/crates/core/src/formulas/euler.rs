//! `sum_n [End(n)]/[GL(n)] t^n = prod_{k>=0} (1 - L^-k t)^(-1)`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{gl_inverse, window};
use crate::motivic::MotivicClass;
use crate::power::expand_factor;
use crate::series::MultiSeries;

/// Left side from `[End(n)]` and the inverse of `[GL(n)]`; right side as
/// `(1 - t)^(-1/(1 - L^-1))` through the factor rule.
pub fn euler_sides(truncation: u32, depth: u32) -> (MultiSeries, MultiSeries) {
    let w = window(depth);
    let one = BigInt::one();
    let terms = (0..=truncation).map(|n| {
        let sq = i64::from(n) * i64::from(n);
        (vec![n], gl_inverse(n, w - sq).mul_term(&one, sq))
    });
    let lhs = MultiSeries::from_terms(1, truncation, w, terms).expect("one variable");
    let geometric = MotivicClass::from_terms(w, [(0, 1), (-1, -1)]).invert_unit().expect("unit");
    let rhs = expand_factor(&[1], &geometric, truncation);
    (lhs, rhs)
}

/// Integer coefficients `table[n][j]` of `t^n q^j`.
pub type QTable = Vec<Vec<BigInt>>;

/// Both sides of `sum_n t^n / ((1-q)...(1-q^n)) = prod_{k>=0} (1 - q^k t)^(-1)`
/// up to `t^t_order` and `q^q_order`, in plain integer arithmetic.
pub fn euler_q_sides(t_order: usize, q_order: usize) -> (QTable, QTable) {
    let mut lhs = vec![vec![BigInt::zero(); q_order + 1]; t_order + 1];
    for (n, row) in lhs.iter_mut().enumerate() {
        row[0] = BigInt::one();
        for i in 1..=n {
            // divide by (1 - q^i)
            for j in i..=q_order {
                let prev = row[j - i].clone();
                row[j] += prev;
            }
        }
    }
    let mut rhs = vec![vec![BigInt::zero(); q_order + 1]; t_order + 1];
    rhs[0][0] = BigInt::one();
    for k in 0..=q_order {
        // multiply by 1 / (1 - q^k t)
        for n in 1..=t_order {
            for j in k..=q_order {
                let prev = rhs[n - 1][j - k].clone();
                rhs[n][j] += prev;
            }
        }
    }
    (lhs, rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_coefficients() {
        let (lhs, rhs) = euler_sides(2, 12);
        assert_eq!(*lhs.coeff(&[0]).unwrap(), MotivicClass::one(-12));
        let c1 = lhs.coeff(&[1]).unwrap();
        for e in c1.window_low()..=0 {
            assert_eq!(c1.coeff(e), Some(BigInt::one()));
        }
        assert!(lhs.compare(&rhs).unwrap().equal);
    }

    #[test]
    fn q_tables_agree_and_match_the_motivic_sides() {
        let (ql, qr) = euler_q_sides(5, 12);
        assert_eq!(ql, qr);
        let (lhs, _) = euler_sides(5, 12);
        for (n, row) in ql.iter().enumerate() {
            let c = lhs.coeff(&[n as u32]).unwrap();
            for (j, value) in row.iter().enumerate() {
                assert_eq!(c.coeff(-(j as i64)).unwrap(), *value, "t^{n} q^{j}");
            }
        }
    }
}
