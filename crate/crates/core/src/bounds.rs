//! Degree and coefficient bounds for rational proper maps.

use num_rational::Ratio;
use num_traits::Float;

use crate::error::{Error, Result};

/// `N(N−1) / (2(2n−3))`, an upper bound for the degree of a rational proper
/// map `B_n → B_N` when `n ≥ 2`.
pub fn degree_bound(n: u64, target: u64) -> Result<Ratio<u64>> {
    if n < 2 {
        return Err(Error::InvalidArgument(alloc::format!(
            "degree bound needs domain dimension >= 2, got {n}"
        )));
    }
    if target < n {
        return Err(Error::InvalidArgument(alloc::format!(
            "target dimension {target} is smaller than domain dimension {n}"
        )));
    }
    Ok(Ratio::new(target * (target - 1), 2 * (2 * n - 3)))
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Explicit coefficient bound for normalized proper maps of degree at most
/// `d` on `B_n`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CoefficientBound {
    /// Largest binomial coefficient `max_k C(d, k)`: bounds the coefficients of
    /// a one-variable `q` with `q(0) = 1` and no zeros in the disc.
    pub one_variable: f64,
    /// `(d+1) · one_variable`, a bound for `|q|` on the ball.
    pub sup_on_ball: f64,
    /// Cauchy estimate on the polydisc of radius `1/(2√n)`:
    /// `sup_on_ball · (2√n)^d`. Bounds every coefficient of `p` and `q`.
    pub coefficient: f64,
}

pub fn coefficient_bound(n: u32, d: u32) -> Result<CoefficientBound> {
    if n == 0 {
        return Err(Error::InvalidArgument("domain dimension must be positive".into()));
    }
    let d64 = d as u64;
    let one_variable = binomial(d64, d64 / 2) as f64;
    let sup_on_ball = (d64 + 1) as f64 * one_variable;
    let radius_inv = 2.0 * Float::sqrt(n as f64);
    let coefficient = sup_on_ball * Float::powi(radius_inv, d as i32);
    Ok(CoefficientBound { one_variable, sup_on_ball, coefficient })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_bound_values() {
        // N(N-1)/(2(2n-3)) by hand: (2,3) -> 6/2, (2,5) -> 20/2, (3,3) -> 6/6.
        assert_eq!(degree_bound(2, 3).unwrap(), Ratio::from_integer(3));
        assert_eq!(degree_bound(2, 5).unwrap(), Ratio::from_integer(10));
        assert_eq!(degree_bound(3, 3).unwrap(), Ratio::from_integer(1));
        assert_eq!(degree_bound(3, 5).unwrap(), Ratio::new(10, 3));
        assert!(degree_bound(1, 3).is_err());
    }

    #[test]
    fn binomial_table() {
        // Row 4 of Pascal's triangle: 1 4 6 4 1.
        let row: alloc::vec::Vec<u64> = (0..=4).map(|k| binomial(4, k)).collect();
        assert_eq!(row, [1, 4, 6, 4, 1]);
    }

    #[test]
    fn coefficient_bound_small_cases() {
        let b = coefficient_bound(1, 1).unwrap();
        assert_eq!(b.one_variable, 1.0);
        assert_eq!(b.sup_on_ball, 2.0);
        assert_eq!(coefficient_bound(1, 4).unwrap().one_variable, 6.0);
    }
}
