//! Polynomial detection over exact samples at consecutive integers.
//!
//! Given exact values `v(0), v(1), ..., v(L-1)`, the forward-difference table
//! terminates in all-zero rows exactly when the data is polynomial of the
//! degree where the zeros start. Finite data can only certify, never prove:
//! the rule here is to accept a polynomial verdict only when at least
//! [`REQUIRED_VANISHING_ORDERS`] consecutive difference orders vanish, to
//! reject when even the highest computable order is nonzero, and to report
//! anything in between as inconclusive rather than guess.

use num::Zero;
use thiserror::Error;

use crate::rational::{binomial, Rational};

/// Number of consecutive all-zero difference orders required before data is
/// certified polynomial.
pub const REQUIRED_VANISHING_ORDERS: usize = 3;

/// Ways detection can decline to produce a verdict.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum DetectionError {
    #[error("need at least 3 values, got {have}")]
    TooFewValues { have: usize },
    #[error(
        "inconclusive: differences vanish from order {candidate_degree} + 1 on, \
         but only {trailing_zero_orders} zero order(s) are visible (need {required})"
    )]
    Inconclusive {
        candidate_degree: usize,
        trailing_zero_orders: usize,
        required: usize,
    },
}

/// A polynomial in the binomial basis, `p(n) = sum_k c_k * C(n, k)`, as
/// recovered from a difference table: `c_k` is the leading entry of the
/// order-`k` difference row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonPolynomial {
    coefficients: Vec<Rational>,
}

impl NewtonPolynomial {
    /// Binomial-basis coefficients `c_0, ..., c_degree`.
    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    /// Exact evaluation at `n`, in the same index space as the sample the
    /// polynomial was fitted on.
    pub fn evaluate(&self, n: u64) -> Rational {
        self.coefficients
            .iter()
            .enumerate()
            .map(|(k, c)| c * Rational::from_integer(binomial(n, k as u64).into()))
            .sum()
    }
}

/// Outcome of [`detect_polynomial`] when the data admits a verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Detection {
    Polynomial(NewtonPolynomial),
    /// Even the last computable difference order is nonzero.
    NotPolynomial { last_nonzero_order: usize },
}

impl Detection {
    pub fn is_polynomial(&self) -> bool {
        matches!(self, Detection::Polynomial(_))
    }
}

/// Builds the forward-difference table of `values` (taken at consecutive
/// integers `0, 1, ...`) and applies the vanishing-order rule.
///
/// All-zero data counts as the zero polynomial of degree 0.
pub fn detect_polynomial(values: &[Rational]) -> Result<Detection, DetectionError> {
    if values.len() < 3 {
        return Err(DetectionError::TooFewValues { have: values.len() });
    }

    // leading[k] = first entry of the order-k difference row; rows shrink by
    // one entry per order, so orders 0 ..= len-1 are computable.
    let mut leading = Vec::with_capacity(values.len());
    let mut last_nonzero: Option<usize> = None;
    let mut row = values.to_vec();
    for order in 0..values.len() {
        leading.push(row[0].clone());
        if !row.iter().all(Rational::is_zero) {
            last_nonzero = Some(order);
        }
        row = row.windows(2).map(|w| &w[1] - &w[0]).collect();
    }

    let top_order = values.len() - 1;
    match last_nonzero {
        None => Ok(Detection::Polynomial(NewtonPolynomial {
            coefficients: vec![Rational::zero()],
        })),
        Some(degree) => {
            let trailing_zero_orders = top_order - degree;
            if trailing_zero_orders == 0 {
                Ok(Detection::NotPolynomial {
                    last_nonzero_order: top_order,
                })
            } else if trailing_zero_orders < REQUIRED_VANISHING_ORDERS {
                Err(DetectionError::Inconclusive {
                    candidate_degree: degree,
                    trailing_zero_orders,
                    required: REQUIRED_VANISHING_ORDERS,
                })
            } else {
                leading.truncate(degree + 1);
                Ok(Detection::Polynomial(NewtonPolynomial {
                    coefficients: leading,
                }))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{factorial, int, ratio};
    use proptest::prelude::*;

    fn values_of(f: impl Fn(u64) -> Rational, up_to: u64) -> Vec<Rational> {
        (0..=up_to).map(f).collect()
    }

    #[test]
    fn quadratic_is_recovered() {
        let values = values_of(|n| Rational::from_integer(binomial(n, 2).into()), 8);
        let Detection::Polynomial(fit) = detect_polynomial(&values).unwrap() else {
            panic!("expected polynomial verdict");
        };
        assert_eq!(fit.degree(), 2);
        assert_eq!(fit.coefficients(), &[int(0), int(0), int(1)]);
        assert_eq!(fit.evaluate(10), int(45));
    }

    #[test]
    fn factorial_is_rejected() {
        let values = values_of(|n| Rational::from_integer(factorial(n).into()), 8);
        assert_eq!(
            detect_polynomial(&values).unwrap(),
            Detection::NotPolynomial {
                last_nonzero_order: 8
            }
        );
    }

    #[test]
    fn constants_and_zeros() {
        let constant = detect_polynomial(&values_of(|_| ratio(5, 3), 4)).unwrap();
        let Detection::Polynomial(fit) = constant else {
            panic!("expected polynomial verdict");
        };
        assert_eq!(fit.degree(), 0);
        assert_eq!(fit.coefficients(), &[ratio(5, 3)]);

        let zeros = detect_polynomial(&values_of(|_| int(0), 6)).unwrap();
        let Detection::Polynomial(fit) = zeros else {
            panic!("expected polynomial verdict");
        };
        assert_eq!(fit.degree(), 0);
        assert_eq!(fit.evaluate(100), int(0));
    }

    #[test]
    fn short_and_marginal_data_refuse_a_verdict() {
        assert_eq!(
            detect_polynomial(&[int(1), int(2)]),
            Err(DetectionError::TooFewValues { have: 2 })
        );
        // Cubic data on 0..=4 leaves only one vanishing order visible.
        let values = values_of(|n| Rational::from_integer(binomial(n, 3).into()), 4);
        assert_eq!(
            detect_polynomial(&values),
            Err(DetectionError::Inconclusive {
                candidate_degree: 3,
                trailing_zero_orders: 1,
                required: REQUIRED_VANISHING_ORDERS,
            })
        );
    }

    proptest! {
        #[test]
        fn random_newton_polynomials_roundtrip(
            raw in prop::collection::vec((-5i64..=5, 1i64..=3), 1..=5)
        ) {
            prop_assume!(raw.last().unwrap().0 != 0);
            let coefficients: Vec<Rational> =
                raw.iter().map(|&(n, d)| ratio(n, d)).collect();
            let degree = coefficients.len() - 1;
            let poly = NewtonPolynomial { coefficients: coefficients.clone() };
            // Sample just enough for the required vanishing margin.
            let samples: Vec<Rational> =
                (0..(degree as u64 + 1 + REQUIRED_VANISHING_ORDERS as u64))
                    .map(|n| poly.evaluate(n))
                    .collect();
            let Detection::Polynomial(fit) = detect_polynomial(&samples).unwrap() else {
                panic!("expected polynomial verdict");
            };
            prop_assert_eq!(fit.degree(), degree);
            prop_assert_eq!(fit.coefficients(), &coefficients[..]);
            prop_assert_eq!(fit.evaluate(40), poly.evaluate(40));
        }
    }
}
