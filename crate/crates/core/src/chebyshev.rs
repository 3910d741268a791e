//! Chebyshev polynomials of the second kind in trigonometric form.
//!
//! Every coefficient formula in this crate evaluates `U_k` and `U'_k` at
//! points given as `cos(theta)` for small positive angles. The trigonometric
//! form `U_k(cos t) = sin((k+1)t) / sin(t)` is uniformly stable there, unlike
//! the three-term recurrence in `x`, whose error grows with `k` as `x`
//! approaches 1.

use crate::scalar::from_usize;
use crate::{Error, Result, Scalar};

/// An evaluation point `x = cos(theta)` with `theta` in the open interval
/// `(0, pi)`, so `sin(theta) != 0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ChebyshevArgument<S> {
    theta: S,
    x: S,
}

impl<S: Scalar> ChebyshevArgument<S> {
    /// Caches `cos(theta)`. Rejects angles outside `(0, pi)`.
    pub fn new(theta: S) -> Result<Self> {
        if !(theta > S::zero() && theta < S::PI()) {
            return Err(Error::ThetaOutOfRange {
                theta: theta.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(Self {
            theta,
            x: theta.cos(),
        })
    }

    pub fn theta(self) -> S {
        self.theta
    }

    /// The cached `cos(theta)`.
    pub fn x(self) -> S {
        self.x
    }
}

/// `U_k(cos theta) = sin((k+1) theta) / sin(theta)`.
pub fn u_eval<S: Scalar>(arg: ChebyshevArgument<S>, k: usize) -> S {
    let kp1: S = from_usize(k + 1);
    (kp1 * arg.theta).sin() / arg.theta.sin()
}

/// Derivative `U'_k` at `x = cos(theta)` through the identity
/// `U'_k(x) = ((k+2) U_{k-1}(x) - k U_{k+1}(x)) / (2 (1 - x^2))`
/// with the convention `U_{-1} = 0`.
///
/// `1 - x^2` is computed as `sin^2(theta)` to avoid cancellation for small
/// angles.
pub fn u_prime_eval<S: Scalar>(arg: ChebyshevArgument<S>, k: usize) -> S {
    let sin_t = arg.theta.sin();
    let below = if k == 0 {
        S::zero()
    } else {
        u_eval(arg, k - 1)
    };
    let above = u_eval(arg, k + 1);
    let kp2: S = from_usize(k + 2);
    let kk: S = from_usize(k);
    (kp2 * below - kk * above) / ((S::one() + S::one()) * sin_t * sin_t)
}
