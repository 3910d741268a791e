//! The extremal odd polynomial, its gamma change of variables, a closed-form
//! evaluator, and the conjectured T-fold symmetric family.
//!
//! The extremizer minimizes `-iF(i)` over normalized odd polynomials
//! `F(z) = sum a_j z^{2j-1}` with real coefficients that map the right
//! half-disc into the right half-plane. Its coefficients come in two
//! algebraically equivalent shapes: a ratio of Chebyshev derivatives
//! ([`extremal_coeffs`], the primary constructor) and an explicit sine
//! expression ([`extremal_coeffs_sine_form`], kept as a cross-check). The
//! minimum itself is `J_N = sec^2(pi / (2N+2)) / 2`.

use crate::chebyshev::{u_prime_eval, ChebyshevArgument};
use crate::complex::ComplexPoint;
use crate::scalar::{from_f64, from_usize, half, two};
use crate::sum::pairwise_sum_fn;
use crate::{Error, Result, Scalar};

/// How far the raw first coefficient may sit from 1 before construction is
/// considered broken rather than renormalizable.
const NORMALIZATION_GUARD: f64 = 1e-12;

/// Slack allowed on `|z|` when evaluating on the closed unit disc.
const DISC_SLACK: f64 = 1e-9;

/// Minimum modulus of the closed-form denominator factor
/// `z^4 - 2 z^2 cos(pi/(N+1)) + 1` before the evaluator reports a
/// near-singularity instead of dividing.
const SINGULARITY_GUARD: f64 = 1e-9;

/// An odd polynomial `F(z) = sum_{j=1}^{N} a_j z^{2j-1}` with real
/// coefficients, the problem's class with `a_1 = 1`.
///
/// The extremal constructors always produce `a_1` bit-exactly 1; vectors
/// coming back through the gamma bijection carry whatever normalization the
/// gamma vector implies.
#[derive(Clone, Debug, PartialEq)]
pub struct OddPolynomial<S> {
    coeffs: Vec<S>,
}

/// The vector `gamma_1 .. gamma_N` of the change of variables
/// `gamma_s = sum_{j=s}^{N} (-1)^{s+j} a_j`, with `gamma_{N+1} = 0` implied.
#[derive(Clone, Debug, PartialEq)]
pub struct GammaVector<S> {
    gammas: Vec<S>,
}

/// A T-fold symmetric polynomial `F(z) = sum_{j=1}^{N} a_j z^{T(j-1)+1}`.
/// `t_fold == 2` is the odd case.
#[derive(Clone, Debug, PartialEq)]
pub struct SymmetricPolynomial<S> {
    t_fold: usize,
    coeffs: Vec<S>,
}

impl<S: Scalar> OddPolynomial<S> {
    /// Wraps a coefficient vector `a_1 .. a_N`. Rejects empty input.
    pub fn new(coeffs: Vec<S>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptyPolynomial);
        }
        Ok(Self { coeffs })
    }

    /// Number of terms N (degree is 2N - 1).
    pub fn n(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    /// Whether `a_1` is exactly 1.
    pub fn is_normalized(&self) -> bool {
        self.coeffs[0] == S::one()
    }

    /// Horner evaluation of `sum a_j z^{2j-1}` on the closed unit disc.
    pub fn eval(&self, z: ComplexPoint<S>) -> Result<ComplexPoint<S>> {
        eval_symmetric_series(&self.coeffs, 2, z)
    }

    /// `-iF(i) = sum (-1)^{j+1} a_j`, the value of the objective functional.
    pub fn objective_value(&self) -> S {
        pairwise_sum_fn(self.coeffs.len(), &|j| {
            if j % 2 == 0 {
                self.coeffs[j]
            } else {
                -self.coeffs[j]
            }
        })
    }
}

impl<S: Scalar> GammaVector<S> {
    pub fn new(gammas: Vec<S>) -> Result<Self> {
        if gammas.is_empty() {
            return Err(Error::EmptyPolynomial);
        }
        Ok(Self { gammas })
    }

    pub fn n(&self) -> usize {
        self.gammas.len()
    }

    pub fn gammas(&self) -> &[S] {
        &self.gammas
    }
}

impl<S: Scalar> SymmetricPolynomial<S> {
    pub fn new(t_fold: usize, coeffs: Vec<S>) -> Result<Self> {
        if t_fold == 0 {
            return Err(Error::ZeroSymmetryOrder);
        }
        if coeffs.is_empty() {
            return Err(Error::EmptyPolynomial);
        }
        Ok(Self { t_fold, coeffs })
    }

    pub fn t_fold(&self) -> usize {
        self.t_fold
    }

    pub fn n(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    /// Horner evaluation of `sum a_j z^{T(j-1)+1}` on the closed unit disc.
    pub fn eval(&self, z: ComplexPoint<S>) -> Result<ComplexPoint<S>> {
        eval_symmetric_series(&self.coeffs, self.t_fold, z)
    }
}

/// `z * G(z^T)` with `G(w) = sum a_j w^{j-1}` evaluated by Horner.
fn eval_symmetric_series<S: Scalar>(
    coeffs: &[S],
    t_fold: usize,
    z: ComplexPoint<S>,
) -> Result<ComplexPoint<S>> {
    let modulus = z.modulus();
    if modulus > S::one() + from_f64(DISC_SLACK) {
        return Err(Error::OutsideUnitDisc {
            modulus: modulus.to_f64().unwrap_or(f64::NAN),
        });
    }
    let w = z.powi(t_fold);
    let mut acc = ComplexPoint::zero();
    for &a in coeffs.iter().rev() {
        acc = acc * w + ComplexPoint::from_real(a);
    }
    Ok(z * acc)
}

/// Divides by the computed `a_1` so normalization is bit-exact, guarding that
/// the raw value was already 1 up to `NORMALIZATION_GUARD`.
fn renormalize<S: Scalar>(mut coeffs: Vec<S>) -> Vec<S> {
    let a1 = coeffs[0];
    debug_assert!(
        (a1 - S::one()).abs() <= from_f64(NORMALIZATION_GUARD),
        "raw leading coefficient {a1} not close to 1"
    );
    for a in &mut coeffs {
        *a = *a / a1;
    }
    coeffs[0] = S::one();
    coeffs
}

/// The extremizer's coefficients through the Chebyshev-derivative ratio
/// `a_j = U'_{2(N-j+1)}(cos(pi/(2N+2))) / U'_{2N}(cos(pi/(2N+2)))`.
pub fn extremal_coeffs<S: Scalar>(n: usize) -> Result<OddPolynomial<S>> {
    if n == 0 {
        return Err(Error::EmptyPolynomial);
    }
    let theta = S::PI() / from_usize(2 * n + 2);
    let arg = ChebyshevArgument::new(theta)?;
    let denom = u_prime_eval(arg, 2 * n);
    let coeffs: Vec<S> = (1..=n)
        .map(|j| u_prime_eval(arg, 2 * (n - j + 1)) / denom)
        .collect();
    OddPolynomial::new(renormalize(coeffs))
}

/// The same coefficients through the explicit sine expression
/// `a_j = ((N-j+2) sin(pi j/(N+1)) - (N-j+1) sin(pi (j-1)/(N+1)))
///        / ((N+1) sin(pi/(N+1)))`.
///
/// Kept as an independent route; [`extremal_coeffs`] is the constructor of
/// record and the two must agree to 1e-12 componentwise.
pub fn extremal_coeffs_sine_form<S: Scalar>(n: usize) -> Result<OddPolynomial<S>> {
    if n == 0 {
        return Err(Error::EmptyPolynomial);
    }
    let np1: S = from_usize(n + 1);
    let pi_np1 = S::PI() / np1;
    let denom = np1 * pi_np1.sin();
    let coeffs: Vec<S> = (1..=n)
        .map(|j| {
            let jf: S = from_usize(j);
            let lead: S = from_usize(n - j + 2);
            let trail: S = from_usize(n - j + 1);
            (lead * (pi_np1 * jf).sin() - trail * (pi_np1 * (jf - S::one())).sin()) / denom
        })
        .collect();
    OddPolynomial::new(renormalize(coeffs))
}

/// `gamma_s = sum_{j=s}^{N} (-1)^{s+j} a_j` for every s.
pub fn gamma_from_coeffs<S: Scalar>(p: &OddPolynomial<S>) -> GammaVector<S> {
    let a = p.coeffs();
    let n = a.len();
    let gammas: Vec<S> = (1..=n)
        .map(|s| {
            pairwise_sum_fn(n - s + 1, &|offset| {
                // j = s + offset, sign (-1)^{s+j} = (-1)^{offset}
                if offset % 2 == 0 {
                    a[s - 1 + offset]
                } else {
                    -a[s - 1 + offset]
                }
            })
        })
        .collect();
    GammaVector { gammas }
}

/// Inverse map `a_s = gamma_s + gamma_{s+1}` with `gamma_{N+1} = 0`.
pub fn coeffs_from_gamma<S: Scalar>(g: &GammaVector<S>) -> OddPolynomial<S> {
    let gs = g.gammas();
    let n = gs.len();
    let coeffs: Vec<S> = (0..n)
        .map(|s| {
            if s + 1 < n {
                gs[s] + gs[s + 1]
            } else {
                gs[s]
            }
        })
        .collect();
    OddPolynomial { coeffs }
}

/// The extremal value `J_N = sec^2(pi/(2N+2)) / 2`.
pub fn extremal_value<S: Scalar>(n: usize) -> Result<S> {
    if n == 0 {
        return Err(Error::EmptyPolynomial);
    }
    let c = (S::PI() / from_usize(2 * n + 2)).cos();
    Ok(half::<S>() / (c * c))
}

/// Closed-form value of the extremizer:
///
/// ```text
///            4 z^2 (z^{2N+2}(1+z^2) + N(1-z^2) + 2) sin^2(pi/(2N+2)) + (N+1)(1-z^2)^3
/// F(z) = z * ----------------------------------------------------------------------
///                        (N+1) (z^4 - 2 z^2 cos(pi/(N+1)) + 1)^2
/// ```
///
/// The denominator factor vanishes at the four boundary points
/// `e^{+-i pi/(2N+2)}` and their negatives; within `SINGULARITY_GUARD` of
/// those the evaluator reports [`Error::NearSingularity`] and the caller
/// falls back to the power form, which is globally valid.
pub fn eval_closed_form<S: Scalar>(n: usize, z: ComplexPoint<S>) -> Result<ComplexPoint<S>> {
    if n == 0 {
        return Err(Error::EmptyPolynomial);
    }
    let modulus = z.modulus();
    if modulus > S::one() + from_f64(DISC_SLACK) {
        return Err(Error::OutsideUnitDisc {
            modulus: modulus.to_f64().unwrap_or(f64::NAN),
        });
    }

    let one = ComplexPoint::from_real(S::one());
    let w = z * z;
    let q = w * w - w.scale(two::<S>() * (S::PI() / from_usize(n + 1)).cos()) + one;
    let q_modulus = q.modulus();
    let guard: S = from_f64(SINGULARITY_GUARD);
    if q_modulus < guard {
        return Err(Error::NearSingularity {
            modulus: q_modulus.to_f64().unwrap_or(f64::NAN),
            threshold: SINGULARITY_GUARD,
        });
    }

    let sin_half = (S::PI() / from_usize(2 * n + 2)).sin();
    let one_minus_w = one - w;
    let z_pow = w.powi(n + 1);
    let inner = z_pow * (one + w) + one_minus_w.scale(from_usize(n)) + one.scale(two());
    let numerator = (w * inner).scale(from_usize::<S>(4) * sin_half * sin_half)
        + (one_minus_w * one_minus_w * one_minus_w).scale(from_usize(n + 1));
    let denominator = (q * q).scale(from_usize(n + 1));
    Ok(z * numerator / denominator)
}

/// Coefficients of the conjectured T-fold symmetric extremizer:
///
/// ```text
/// a_j = U'_{T(N-j+1)}(c) / U'_{TN}(c) *
///       prod_{k=1}^{j-1} sin(pi (2 + T(k-1)) / (TN+2)) / sin(pi T k / (TN+2))
/// ```
///
/// with `c = cos(pi/(TN+2))`. The empty product makes `a_1 = 1`. For T = 2
/// every product factor is 1 and the vector reduces to [`extremal_coeffs`];
/// for T = 1 the product telescopes to `U_{j-1}(c)`.
pub fn conjectured_symmetric_coeffs<S: Scalar>(
    t_fold: usize,
    n: usize,
) -> Result<SymmetricPolynomial<S>> {
    if t_fold == 0 {
        return Err(Error::ZeroSymmetryOrder);
    }
    if n == 0 {
        return Err(Error::EmptyPolynomial);
    }
    let order = t_fold * n + 2;
    let theta = S::PI() / from_usize(order);
    let arg = ChebyshevArgument::new(theta)?;
    let denom = u_prime_eval(arg, t_fold * n);

    let mut coeffs = Vec::with_capacity(n);
    let mut product = S::one();
    for j in 1..=n {
        if j >= 2 {
            let k = j - 1;
            let num_angle = S::PI() * from_usize::<S>(2 + t_fold * (k - 1)) / from_usize(order);
            let den_angle = S::PI() * from_usize::<S>(t_fold * k) / from_usize(order);
            product = product * num_angle.sin() / den_angle.sin();
        }
        coeffs.push(u_prime_eval(arg, t_fold * (n - j + 1)) / denom * product);
    }
    SymmetricPolynomial::new(t_fold, renormalize(coeffs))
}

/// `|F(e^{i pi / T})|` for the conjectured symmetric extremizer: the radius
/// of the disc its image is conjectured to contain.
pub fn conjectured_koebe_radius<S: Scalar>(t_fold: usize, n: usize) -> Result<S> {
    let poly = conjectured_symmetric_coeffs::<S>(t_fold, n)?;
    let z = ComplexPoint::unit_circle(S::PI() / from_usize(t_fold));
    Ok(poly.eval(z)?.modulus())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chebyshev::u_eval;
    use proptest::prelude::*;
    use std::f64::consts::PI;

    type C = ComplexPoint<f64>;

    fn extremal(n: usize) -> OddPolynomial<f64> {
        extremal_coeffs(n).unwrap()
    }

    #[test]
    fn rejects_zero_terms() {
        assert!(matches!(
            extremal_coeffs::<f64>(0),
            Err(Error::EmptyPolynomial)
        ));
        assert!(matches!(
            extremal_coeffs_sine_form::<f64>(0),
            Err(Error::EmptyPolynomial)
        ));
        assert!(matches!(extremal_value::<f64>(0), Err(Error::EmptyPolynomial)));
        assert!(matches!(
            conjectured_symmetric_coeffs::<f64>(0, 3),
            Err(Error::ZeroSymmetryOrder)
        ));
        assert!(matches!(
            conjectured_symmetric_coeffs::<f64>(3, 0),
            Err(Error::EmptyPolynomial)
        ));
    }

    #[test]
    fn single_term_is_identity() {
        assert_eq!(extremal(1).coeffs(), &[1.0]);
        assert_eq!(extremal_coeffs_sine_form::<f64>(1).unwrap().coeffs(), &[1.0]);
    }

    #[test]
    fn two_term_coefficients() {
        // a_N = (4/(N+1)) sin^2(pi/(2N+2)) at N = 2 gives 1/3.
        let oracle = 4.0 / 3.0 * (PI / 6.0).sin().powi(2);
        let p = extremal(2);
        assert_eq!(p.coeffs()[0], 1.0);
        assert!((p.coeffs()[1] - oracle).abs() < 1e-12);
        assert!((oracle - 1.0 / 3.0).abs() < 1e-15);
        // Consistency of the objective with the closed value of J_2.
        let j2 = 0.5 / (PI / 6.0).cos().powi(2);
        assert!((p.coeffs()[0] - p.coeffs()[1] - j2).abs() < 1e-14);
        assert!((j2 - 2.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn sine_form_direct_value() {
        // j = 2, N = 2 evaluated straight from the sine expression.
        let oracle = (2.0 * (2.0 * PI / 3.0).sin() - (PI / 3.0).sin()) / (3.0 * (PI / 3.0).sin());
        let p = extremal_coeffs_sine_form::<f64>(2).unwrap();
        assert!((p.coeffs()[1] - oracle).abs() < 1e-15);
        assert!((oracle - 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn representations_agree_to_1e12() {
        for n in 1..=100 {
            let a = extremal(n);
            let b = extremal_coeffs_sine_form::<f64>(n).unwrap();
            for (x, y) in a.coeffs().iter().zip(b.coeffs()) {
                assert!((x - y).abs() <= 1e-12, "n={n}: {x} vs {y}");
            }
        }
    }

    #[test]
    fn coefficients_positive_up_to_200() {
        for n in 1..=200 {
            assert!(extremal(n).coeffs().iter().all(|&a| a > 0.0), "n={n}");
        }
    }

    #[test]
    fn last_coefficient_closed_value() {
        for n in 1..=200 {
            let formula = 4.0 / (n as f64 + 1.0) * (PI / (2.0 * n as f64 + 2.0)).sin().powi(2);
            let got = *extremal(n).coeffs().last().unwrap();
            assert!((got - formula).abs() <= 1e-12 * formula.max(1.0), "n={n}");
        }
    }

    #[test]
    fn gamma_of_single_term() {
        let g = gamma_from_coeffs(&OddPolynomial::new(vec![1.0]).unwrap());
        assert_eq!(g.gammas(), &[1.0]);
    }

    #[test]
    fn gamma_of_two_term_extremizer() {
        let g = gamma_from_coeffs(&extremal(2));
        assert!((g.gammas()[0] - 2.0 / 3.0).abs() < 1e-15);
        assert!((g.gammas()[1] - 1.0 / 3.0).abs() < 1e-15);
        // gamma_1 = 1 / (2 cos^2(pi/6))
        let closed = 1.0 / (2.0 * (PI / 6.0).cos().powi(2));
        assert!((g.gammas()[0] - closed).abs() < 1e-15);
    }

    #[test]
    fn gamma_one_closed_form_up_to_200() {
        for n in 1..=200 {
            let g = gamma_from_coeffs(&extremal(n));
            let closed = 1.0 / (2.0 * (PI / (2.0 * n as f64 + 2.0)).cos().powi(2));
            assert!((g.gammas()[0] - closed).abs() <= 1e-12, "n={n}");
        }
    }

    #[test]
    fn gamma_sum_equals_leading_coefficient() {
        for n in 2..=50 {
            let p = extremal(n);
            let g = gamma_from_coeffs(&p);
            assert!((g.gammas()[0] + g.gammas()[1] - 1.0).abs() <= 1e-14, "n={n}");
        }
    }

    #[test]
    fn inverse_map_examples() {
        let p = coeffs_from_gamma(&GammaVector::new(vec![1.0]).unwrap());
        assert_eq!(p.coeffs(), &[1.0]);
        let p = coeffs_from_gamma(&GammaVector::new(vec![2.0f64 / 3.0, 1.0 / 3.0]).unwrap());
        assert!((p.coeffs()[0] - 1.0).abs() < 1e-15);
        assert!((p.coeffs()[1] - 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn extremal_values() {
        assert!((extremal_value::<f64>(1).unwrap() - 1.0).abs() < 1e-15);
        assert!((extremal_value::<f64>(2).unwrap() - 2.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn extremal_value_decreases_to_one_half() {
        let mut prev = extremal_value::<f64>(1).unwrap();
        for n in 2..=1000 {
            let jn = extremal_value::<f64>(n).unwrap();
            assert!(jn < prev, "not strictly decreasing at n={n}");
            assert!(jn > 0.5);
            prev = jn;
        }
        assert!((extremal_value::<f64>(1000).unwrap() - 0.5) < 1e-5);
    }

    #[test]
    fn objective_matches_extremal_value_to_200() {
        for n in 1..=200 {
            let p = extremal(n);
            let jn = extremal_value::<f64>(n).unwrap();
            assert!(
                ((p.objective_value() - jn) / jn).abs() <= 1e-12,
                "n={n}: {} vs {jn}",
                p.objective_value()
            );
        }
    }

    #[test]
    fn power_form_examples() {
        let i = C::new(0.0, 1.0);
        let p = OddPolynomial::new(vec![1.0]).unwrap();
        let v = p.eval(i).unwrap();
        assert!((v - i).modulus() < 1e-15);

        let p = extremal(2);
        let v = p.eval(i).unwrap();
        assert!(v.re.abs() < 1e-15);
        assert!((v.im - 2.0 / 3.0).abs() < 1e-15);

        let v = p.eval(C::from_real(1.0)).unwrap();
        assert!((v.re - 4.0 / 3.0).abs() < 1e-15);
        assert_eq!(v.im, 0.0);
    }

    #[test]
    fn power_form_rejects_points_outside_disc() {
        let p = extremal(3);
        assert!(matches!(
            p.eval(C::new(1.1, 0.0)),
            Err(Error::OutsideUnitDisc { .. })
        ));
        // Just inside the slack is fine.
        assert!(p.eval(C::new(1.0, 0.0)).is_ok());
    }

    #[test]
    fn closed_form_reduces_to_identity_for_one_term() {
        let v = eval_closed_form::<f64>(1, C::from_real(0.5)).unwrap();
        assert!((v - C::from_real(0.5)).modulus() < 1e-14);
    }

    #[test]
    fn closed_form_matches_power_form_at_i() {
        let v = eval_closed_form::<f64>(2, C::new(0.0, 1.0)).unwrap();
        assert!(v.re.abs() < 1e-12);
        assert!((v.im - 2.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn closed_form_matches_power_form_at_random_interior_points() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x0ddc0ffe);
        for n in [1usize, 2, 3, 7, 20, 50] {
            let p = extremal(n);
            for _ in 0..100 {
                let r = 0.95 * rng.gen::<f64>().sqrt();
                let phi = rng.gen::<f64>() * 2.0 * PI;
                let z = C::new(r * phi.cos(), r * phi.sin());
                let a = p.eval(z).unwrap();
                let b = eval_closed_form::<f64>(n, z).unwrap();
                assert!((a - b).modulus() <= 1e-10, "n={n} z=({}, {})", z.re, z.im);
            }
        }
    }

    #[test]
    fn closed_form_guards_denominator_zeros() {
        let n = 5;
        let z = C::unit_circle(PI / (2.0 * n as f64 + 2.0));
        assert!(matches!(
            eval_closed_form::<f64>(n, z),
            Err(Error::NearSingularity { .. })
        ));
        // The power form stays valid at the same point.
        assert!(extremal(n).eval(z).is_ok());
    }

    #[test]
    fn conjecture_reduces_to_theorem_coefficients_at_t2() {
        for n in 1..=100 {
            let sym = conjectured_symmetric_coeffs::<f64>(2, n).unwrap();
            let odd = extremal(n);
            for (x, y) in sym.coeffs().iter().zip(odd.coeffs()) {
                assert!((x - y).abs() <= 1e-12, "n={n}");
            }
        }
    }

    #[test]
    fn conjecture_reduces_to_brandt_form_at_t1() {
        // Independent route: U'_{N-j+1}(c) / U'_N(c) * U_{j-1}(c) with
        // c = cos(pi/(N+2)).
        for n in 1..=100 {
            let sym = conjectured_symmetric_coeffs::<f64>(1, n).unwrap();
            let arg = ChebyshevArgument::new(PI / (n as f64 + 2.0)).unwrap();
            let denom = u_prime_eval(arg, n);
            for (j, got) in (1..=n).zip(sym.coeffs()) {
                let expected = u_prime_eval(arg, n - j + 1) / denom * u_eval(arg, j - 1);
                assert!((got - expected).abs() <= 1e-12, "n={n} j={j}");
            }
        }
    }

    #[test]
    fn figure_parameters_are_constructible() {
        let sym = conjectured_symmetric_coeffs::<f64>(4, 7).unwrap();
        assert_eq!(sym.t_fold(), 4);
        assert_eq!(sym.n(), 7);
        assert_eq!(sym.coeffs()[0], 1.0);
        assert!(sym.coeffs().iter().all(|a| a.is_finite()));
    }

    #[test]
    fn koebe_radius_examples() {
        // T = 2, n = 2 must equal J_2 = 2/3.
        let r = conjectured_koebe_radius::<f64>(2, 2).unwrap();
        assert!((r - 2.0 / 3.0).abs() < 1e-12);
        // T = 1, n = 1: F(z) = z, |F(-1)| = 1 and (1/4) sec^2(pi/3) = 1.
        let r = conjectured_koebe_radius::<f64>(1, 1).unwrap();
        assert!((r - 1.0).abs() < 1e-12);
    }

    #[test]
    fn koebe_radius_closed_forms() {
        for n in 1..=100 {
            let nf = n as f64;
            let r1 = conjectured_koebe_radius::<f64>(1, n).unwrap();
            let c1 = 0.25 / (PI / (nf + 2.0)).cos().powi(2);
            assert!((r1 - c1).abs() <= 1e-10, "T=1 n={n}");
            let r2 = conjectured_koebe_radius::<f64>(2, n).unwrap();
            let c2 = extremal_value::<f64>(n).unwrap();
            assert!((r2 - c2).abs() <= 1e-10, "T=2 n={n}");
        }
    }

    #[test]
    fn koebe_radius_approaches_one_quarter() {
        let mut prev = conjectured_koebe_radius::<f64>(1, 1).unwrap();
        for n in 2..=500 {
            let r = conjectured_koebe_radius::<f64>(1, n).unwrap();
            assert!(r < prev, "not monotone at n={n}");
            assert!(r > 0.25);
            prev = r;
        }
        assert!(prev - 0.25 < 1e-4);
    }

    #[test]
    fn f32_round_trip_works_at_loose_tolerance() {
        let p = extremal_coeffs::<f32>(4).unwrap();
        assert_eq!(p.coeffs()[0], 1.0f32);
        let g = gamma_from_coeffs(&p);
        let back = coeffs_from_gamma(&g);
        for (x, y) in p.coeffs().iter().zip(back.coeffs()) {
            assert!((x - y).abs() < 1e-5);
        }
    }

    proptest! {
        #[test]
        fn bijection_round_trips_on_normalized_vectors(
            n in 1usize..=50,
            seed in any::<u64>(),
        ) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            // gamma_1 in [1/2, 1], gamma_2 = 1 - gamma_1 keeps a_1 = 1.
            let mut gammas = vec![0.0; n];
            gammas[0] = 0.5 + 0.5 * rng.gen::<f64>();
            if n > 1 {
                gammas[1] = 1.0 - gammas[0];
            }
            for g in gammas.iter_mut().skip(2) {
                *g = 2.0 * rng.gen::<f64>() - 1.0;
            }
            let g = GammaVector::new(gammas).unwrap();
            let p = coeffs_from_gamma(&g);
            let g_back = gamma_from_coeffs(&p);
            for (x, y) in g.gammas().iter().zip(g_back.gammas()) {
                prop_assert!((x - y).abs() <= 1e-14);
            }
            let p_back = coeffs_from_gamma(&g_back);
            for (x, y) in p.coeffs().iter().zip(p_back.coeffs()) {
                prop_assert!((x - y).abs() <= 1e-14);
            }
        }

        #[test]
        fn round_trip_from_extremal_side(n in 1usize..=50) {
            let p = extremal(n);
            let back = coeffs_from_gamma(&gamma_from_coeffs(&p));
            for (x, y) in p.coeffs().iter().zip(back.coeffs()) {
                prop_assert!((x - y).abs() <= 1e-14);
            }
        }
    }
}
