//! Boundary-curve sampling and numerical certification.
//!
//! The univalence argument for the extremizer rests on the boundary image
//! `F(e^{it})`, `t` in `[0, pi/2]`, being a simple arc kept on one side of
//! the real axis. This module samples that arc, checks the four monotonicity
//! and sign statements plus one auxiliary inequality on fine grids, closes
//! the arc into the full boundary polygon by symmetry, and runs a
//! segment-pair intersection test over the polygon.
//!
//! Certification here is by sampling, not interval arithmetic: every report
//! records the grid it was computed on so a failure is attributable to
//! resolution.

use crate::certificate::{CertificateReport, StatementId};
use crate::complex::ComplexPoint;
use crate::extremal::{conjectured_symmetric_coeffs, extremal_coeffs};
use crate::scalar::{from_f64, from_usize, half, two};
use crate::{Error, Result, Scalar};

/// Margin tolerance for the statement certificates.
const CURVE_TOLERANCE: f64 = 1e-12;

/// Agreement required between Horner evaluation and the rational boundary
/// forms away from the removable singularity.
const CROSS_CHECK_TOLERANCE: f64 = 1e-8;

/// Nodes closer than this to `t_0 = pi/(2N+2)` are displaced by half a step.
const NODE_COLLISION: f64 = 1e-9;

/// The rational forms are only compared this far away from `t_0`.
const RATIONAL_EXCLUSION: f64 = 1e-3;

/// Cross products below this are treated as collinear in orientation tests.
const COLLINEAR_TOLERANCE: f64 = 1e-14;

/// Consecutive polygon vertices closer than this are a degenerate segment.
const DEGENERATE_SEGMENT: f64 = 1e-15;

/// Minimum grid for boundary traces.
const MIN_TRACE_GRID: usize = 16;

/// Minimum trace grid accepted by the simple-curve certificate.
const MIN_SIMPLE_CURVE_GRID: usize = 256;

/// One boundary sample `(t, u, v)` with `u + iv = F(e^{it})`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundarySample<S> {
    pub t: S,
    pub u: S,
    pub v: S,
}

/// The sampled arc `F(e^{it})` for `t` in `[0, pi/T]`, ordered and strictly
/// increasing in `t`. `t_fold == 2` is the odd extremizer over `[0, pi/2]`.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundaryTrace<S> {
    n: usize,
    t_fold: usize,
    grid_size: usize,
    samples: Vec<BoundarySample<S>>,
}

impl<S: Scalar> BoundaryTrace<S> {
    /// Wraps externally produced samples, enforcing the ordering invariant.
    pub fn from_samples(
        n: usize,
        t_fold: usize,
        grid_size: usize,
        samples: Vec<BoundarySample<S>>,
    ) -> Result<Self> {
        if t_fold == 0 {
            return Err(Error::ZeroSymmetryOrder);
        }
        if samples.is_empty() {
            return Err(Error::InvalidTrace);
        }
        let ordered = samples.windows(2).all(|w| w[0].t < w[1].t);
        let finite = samples
            .iter()
            .all(|s| s.t.is_finite() && s.u.is_finite() && s.v.is_finite());
        if !ordered || !finite {
            return Err(Error::InvalidTrace);
        }
        Ok(Self {
            n,
            t_fold,
            grid_size,
            samples,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn t_fold(&self) -> usize {
        self.t_fold
    }

    pub fn grid_size(&self) -> usize {
        self.grid_size
    }

    pub fn samples(&self) -> &[BoundarySample<S>] {
        &self.samples
    }
}

/// Samples the extremizer's boundary arc on a uniform grid over `[0, pi/2]`.
///
/// Samples are computed by Horner evaluation, which has no singular points.
/// Any node landing within `1e-9` of the removable singularity
/// `t_0 = pi/(2N+2)` of the rational forms is displaced by half a step. At
/// every node at least `1e-3` away from `t_0` the rational expressions for
/// `u` and `v` are evaluated as a cross-check and must agree to `1e-8`.
pub fn trace_boundary<S: Scalar>(n: usize, grid_size: usize) -> Result<BoundaryTrace<S>> {
    if grid_size < MIN_TRACE_GRID {
        return Err(Error::GridTooSmall {
            got: grid_size,
            min: MIN_TRACE_GRID,
        });
    }
    let poly = extremal_coeffs::<S>(n)?;
    let end = S::PI() * half();
    let step = end / from_usize(grid_size - 1);
    let t0 = S::PI() / from_usize(2 * n + 2);
    let collision: S = from_f64(NODE_COLLISION);
    let exclusion: S = from_f64(RATIONAL_EXCLUSION);
    let check_tol: S = from_f64(CROSS_CHECK_TOLERANCE);
    let forms = RationalForms::new(n);

    let mut samples = Vec::with_capacity(grid_size);
    for k in 0..grid_size {
        let mut t = if k + 1 == grid_size {
            end
        } else {
            step * from_usize(k)
        };
        if (t - t0).abs() < collision {
            t = t + step * half();
        }
        let value = poly.eval(ComplexPoint::unit_circle(t))?;
        let (u, v) = (value.re, value.im);
        if (t - t0).abs() >= exclusion {
            let (ur, vr) = forms.eval(t);
            let diff = (u - ur).abs().max((v - vr).abs());
            if diff > check_tol {
                return Err(Error::BoundaryCrossCheck {
                    t: t.to_f64().unwrap_or(f64::NAN),
                    diff: diff.to_f64().unwrap_or(f64::NAN),
                });
            }
        }
        samples.push(BoundarySample { t, u, v });
    }
    BoundaryTrace::from_samples(n, 2, grid_size, samples)
}

/// Samples the conjectured T-fold symmetric extremizer over `[0, pi/T]`.
///
/// The rational cross-check only exists for the odd case, so none is applied
/// here.
pub fn trace_symmetric_boundary<S: Scalar>(
    t_fold: usize,
    n: usize,
    grid_size: usize,
) -> Result<BoundaryTrace<S>> {
    if grid_size < MIN_TRACE_GRID {
        return Err(Error::GridTooSmall {
            got: grid_size,
            min: MIN_TRACE_GRID,
        });
    }
    let poly = conjectured_symmetric_coeffs::<S>(t_fold, n)?;
    let end = S::PI() / from_usize(t_fold);
    let step = end / from_usize(grid_size - 1);
    let mut samples = Vec::with_capacity(grid_size);
    for k in 0..grid_size {
        let t = if k + 1 == grid_size {
            end
        } else {
            step * from_usize(k)
        };
        let value = poly.eval(ComplexPoint::unit_circle(t))?;
        samples.push(BoundarySample {
            t,
            u: value.re,
            v: value.im,
        });
    }
    BoundaryTrace::from_samples(n, t_fold, grid_size, samples)
}

/// The rational expressions for `u(t)` and `v(t)`, rewritten with the
/// identities `cos 2t - cos 2t_0 = -2 sin(t+t_0) sin(t-t_0)` and
/// `1 - cos 2t_0 = 2 sin^2 t_0` so the denominator is formed without
/// cancellation near `t_0`.
struct RationalForms<S> {
    n_plus_1: S,
    t0: S,
    sin_t0_sq: S,
}

impl<S: Scalar> RationalForms<S> {
    fn new(n: usize) -> Self {
        let t0 = S::PI() / from_usize(2 * n + 2);
        Self {
            n_plus_1: from_usize(n + 1),
            t0,
            sin_t0_sq: t0.sin() * t0.sin(),
        }
    }

    /// `(u, v)` at `t`; undefined at `t = +-t_0`.
    fn eval(&self, t: S) -> (S, S) {
        let sp = (t + self.t0).sin();
        let sm = (t - self.t0).sin();
        let denom = sp * sp * sm * sm;
        let cos_mid = (self.n_plus_1 * t).cos();
        let u = self.sin_t0_sq / self.n_plus_1 * t.cos() * cos_mid * cos_mid / denom;
        let sin_full = (two::<S>() * self.n_plus_1 * t).sin();
        let v_num = sin_full * t.cos() * two::<S>() * self.sin_t0_sq
            + two::<S>() * self.n_plus_1 * t.sin() * sp * sm;
        let v = v_num / (from_usize::<S>(4) * self.n_plus_1 * denom);
        (u, v)
    }
}

/// Statement A: `v(t) >= 0` on `[0, pi/2]`, from the trace's own samples.
pub fn certify_statement_a<S: Scalar>(trace: &BoundaryTrace<S>) -> CertificateReport<S> {
    let mut worst = S::infinity();
    let mut worst_t = trace.samples[0].t;
    for s in &trace.samples {
        if s.v < worst {
            worst = s.v;
            worst_t = s.t;
        }
    }
    CertificateReport::from_margin(
        StatementId::A,
        worst,
        worst_t,
        trace.grid_size,
        from_f64(CURVE_TOLERANCE),
    )
}

/// Statement B: `u` strictly decreases on the open interval
/// `(0, 3 pi/(2N+2))`, checked as positivity of consecutive differences on
/// `grid_size` interior nodes.
pub fn certify_statement_b<S: Scalar>(n: usize, grid_size: usize) -> Result<CertificateReport<S>> {
    if grid_size < MIN_TRACE_GRID {
        return Err(Error::GridTooSmall {
            got: grid_size,
            min: MIN_TRACE_GRID,
        });
    }
    let poly = extremal_coeffs::<S>(n)?;
    let length = from_usize::<S>(3) * S::PI() / from_usize(2 * n + 2);
    let u = |t: S| -> Result<S> { Ok(poly.eval(ComplexPoint::unit_circle(t))?.re) };
    let mut worst = S::infinity();
    let mut worst_t = S::zero();
    let mut prev_t = length * from_usize::<S>(1) / from_usize(grid_size + 1);
    let mut prev = u(prev_t)?;
    for k in 1..grid_size {
        let t = length * from_usize(k + 1) / from_usize(grid_size + 1);
        let cur = u(t)?;
        let margin = prev - cur;
        if margin < worst {
            worst = margin;
            worst_t = prev_t;
        }
        prev = cur;
        prev_t = t;
    }
    Ok(CertificateReport::from_margin(
        StatementId::B,
        worst,
        worst_t,
        grid_size,
        from_f64(CURVE_TOLERANCE),
    ))
}

/// Statement C: `u(t) < u(pi/(N+1))` on `(pi/(N+1), pi/2]`.
///
/// For n = 1 the interval is empty and the certificate passes vacuously.
pub fn certify_statement_c<S: Scalar>(n: usize, grid_size: usize) -> Result<CertificateReport<S>> {
    if grid_size < MIN_TRACE_GRID {
        return Err(Error::GridTooSmall {
            got: grid_size,
            min: MIN_TRACE_GRID,
        });
    }
    let poly = extremal_coeffs::<S>(n)?;
    let tolerance: S = from_f64(CURVE_TOLERANCE);
    if n == 1 {
        return Ok(CertificateReport::vacuous(
            StatementId::C,
            S::PI() * half(),
            grid_size,
            tolerance,
        ));
    }
    let u = |t: S| -> Result<S> { Ok(poly.eval(ComplexPoint::unit_circle(t))?.re) };
    let start = S::PI() / from_usize(n + 1);
    let end = S::PI() * half();
    let reference = u(start)?;
    let mut highest = S::neg_infinity();
    let mut worst_t = start;
    for k in 0..grid_size {
        let t = if k + 1 == grid_size {
            end
        } else {
            start + (end - start) * from_usize(k + 1) / from_usize(grid_size)
        };
        let cur = u(t)?;
        if cur > highest {
            highest = cur;
            worst_t = t;
        }
    }
    Ok(CertificateReport::from_margin(
        StatementId::C,
        reference - highest,
        worst_t,
        grid_size,
        tolerance,
    ))
}

/// Statement D: `v` strictly decreases on `(pi/(N+1), pi/2]`.
///
/// Vacuous for n = 1, as for Statement C.
pub fn certify_statement_d<S: Scalar>(n: usize, grid_size: usize) -> Result<CertificateReport<S>> {
    if grid_size < MIN_TRACE_GRID {
        return Err(Error::GridTooSmall {
            got: grid_size,
            min: MIN_TRACE_GRID,
        });
    }
    let poly = extremal_coeffs::<S>(n)?;
    let tolerance: S = from_f64(CURVE_TOLERANCE);
    if n == 1 {
        return Ok(CertificateReport::vacuous(
            StatementId::D,
            S::PI() * half(),
            grid_size,
            tolerance,
        ));
    }
    let v = |t: S| -> Result<S> { Ok(poly.eval(ComplexPoint::unit_circle(t))?.im) };
    let start = S::PI() / from_usize(n + 1);
    let end = S::PI() * half();
    let node = |k: usize| {
        if k + 1 == grid_size {
            end
        } else {
            start + (end - start) * from_usize::<S>(k + 1) / from_usize(grid_size)
        }
    };
    let mut worst = S::infinity();
    let mut worst_t = start;
    let mut prev_t = node(0);
    let mut prev = v(prev_t)?;
    for k in 1..grid_size {
        let t = node(k);
        let cur = v(t)?;
        let margin = prev - cur;
        if margin < worst {
            worst = margin;
            worst_t = prev_t;
        }
        prev = cur;
        prev_t = t;
    }
    Ok(CertificateReport::from_margin(
        StatementId::D,
        worst,
        worst_t,
        grid_size,
        tolerance,
    ))
}

/// The auxiliary inequality `(4/pi) x sin x < 1 - cos^3 x` on `(0, pi/7]`.
pub fn certify_aux_inequality<S: Scalar>(grid_size: usize) -> Result<CertificateReport<S>> {
    if grid_size < MIN_TRACE_GRID {
        return Err(Error::GridTooSmall {
            got: grid_size,
            min: MIN_TRACE_GRID,
        });
    }
    let end = S::PI() / from_usize(7);
    let mut worst = S::infinity();
    let mut worst_t = end;
    for k in 0..grid_size {
        let x = if k + 1 == grid_size {
            end
        } else {
            end * from_usize(k + 1) / from_usize(grid_size)
        };
        let margin = aux_margin(x);
        if margin < worst {
            worst = margin;
            worst_t = x;
        }
    }
    Ok(CertificateReport::from_margin(
        StatementId::Aux,
        worst,
        worst_t,
        grid_size,
        from_f64(CURVE_TOLERANCE),
    ))
}

/// `(1 - cos^3 x) - (4/pi) x sin x`.
fn aux_margin<S: Scalar>(x: S) -> S {
    let c = x.cos();
    (S::one() - c * c * c) - from_usize::<S>(4) / S::PI() * x * x.sin()
}

/// The full boundary polygon obtained from one sector of the trace by
/// conjugate reflection and T-fold rotation. `thetas` carries the boundary
/// angle of each vertex over `[-pi/T, 2 pi - pi/T)`.
#[derive(Clone, Debug)]
pub struct ClosedCurve<S> {
    points: Vec<ComplexPoint<S>>,
    thetas: Vec<S>,
}

impl<S: Scalar> ClosedCurve<S> {
    pub fn points(&self) -> &[ComplexPoint<S>] {
        &self.points
    }

    pub fn thetas(&self) -> &[S] {
        &self.thetas
    }

    /// `(min re, max re, min im, max im)` over the vertices.
    pub fn bounds(&self) -> (S, S, S, S) {
        let mut min_re = S::infinity();
        let mut max_re = S::neg_infinity();
        let mut min_im = S::infinity();
        let mut max_im = S::neg_infinity();
        for p in &self.points {
            min_re = min_re.min(p.re);
            max_re = max_re.max(p.re);
            min_im = min_im.min(p.im);
            max_im = max_im.max(p.im);
        }
        (min_re, max_re, min_im, max_im)
    }
}

/// Closes the sampled arc into the full boundary polygon.
///
/// The arc over `[0, pi/T]` and its conjugate reflection give one sector over
/// `[-pi/T, pi/T]`; rotating the sector by `2 pi r / T` for `r = 0..T` and
/// dropping each duplicated seam vertex gives the closed polygon with
/// `T (2M - 2)` vertices. Errors if two consecutive vertices coincide below
/// `1e-15`.
pub fn build_closed_curve<S: Scalar>(trace: &BoundaryTrace<S>) -> Result<ClosedCurve<S>> {
    let m = trace.samples.len();
    let t_fold = trace.t_fold;
    let sector_span = two::<S>() * S::PI() / from_usize(t_fold);

    // Sector over [-pi/T, pi/T]: reversed conjugate arc, then the arc itself.
    let mut sector: Vec<(ComplexPoint<S>, S)> = Vec::with_capacity(2 * m - 1);
    for s in trace.samples.iter().skip(1).rev() {
        sector.push((ComplexPoint::new(s.u, -s.v), -s.t));
    }
    for s in &trace.samples {
        sector.push((ComplexPoint::new(s.u, s.v), s.t));
    }

    let total = t_fold * (sector.len() - 1);
    let mut points = Vec::with_capacity(total);
    let mut thetas = Vec::with_capacity(total);
    for r in 0..t_fold {
        let angle = sector_span * from_usize(r);
        let rotation = ComplexPoint::unit_circle(angle);
        // The sector's last vertex reappears as the next sector's first.
        for &(p, theta) in &sector[..sector.len() - 1] {
            points.push(rotation * p);
            thetas.push(theta + angle);
        }
    }

    let degenerate: S = from_f64(DEGENERATE_SEGMENT);
    for i in 0..points.len() {
        let j = (i + 1) % points.len();
        if (points[i] - points[j]).modulus() < degenerate {
            return Err(Error::DegenerateSegment {
                t: thetas[i].to_f64().unwrap_or(f64::NAN),
            });
        }
    }
    Ok(ClosedCurve { points, thetas })
}

/// Simple-curve certificate: no two non-adjacent polygon segments intersect.
///
/// `worst_margin` is the minimum distance between non-adjacent segment
/// pairs, so the report passes only with strictly positive clearance. The
/// quadratic pair scan is pruned by a sweep over bounding boxes ordered by
/// their lower x; the pruning only skips pairs whose distance provably
/// cannot beat the current minimum, so the reported margin equals the full
/// scan's.
pub fn certify_simple_curve<S: Scalar>(trace: &BoundaryTrace<S>) -> Result<CertificateReport<S>> {
    if trace.grid_size < MIN_SIMPLE_CURVE_GRID {
        return Err(Error::GridTooSmall {
            got: trace.grid_size,
            min: MIN_SIMPLE_CURVE_GRID,
        });
    }
    let curve = build_closed_curve(trace)?;
    let pts = &curve.points;
    let count = pts.len();

    struct SegBox<S> {
        a: ComplexPoint<S>,
        b: ComplexPoint<S>,
        min_x: S,
        max_x: S,
        min_y: S,
        max_y: S,
        index: usize,
    }

    let mut segs: Vec<SegBox<S>> = (0..count)
        .map(|i| {
            let a = pts[i];
            let b = pts[(i + 1) % count];
            SegBox {
                a,
                b,
                min_x: a.re.min(b.re),
                max_x: a.re.max(b.re),
                min_y: a.im.min(b.im),
                max_y: a.im.max(b.im),
                index: i,
            }
        })
        .collect();
    segs.sort_unstable_by(|p, q| p.min_x.partial_cmp(&q.min_x).expect("finite vertices"));

    let adjacent =
        |i: usize, j: usize| -> bool { (i + 1) % count == j || (j + 1) % count == i };

    let mut best = S::infinity();
    let mut worst_theta = curve.thetas[0];
    let mut crossed = false;
    'outer: for i in 0..segs.len() {
        let si = &segs[i];
        for sj in &segs[i + 1..] {
            let gap_x = sj.min_x - si.max_x;
            if gap_x >= best {
                break;
            }
            if adjacent(si.index, sj.index) {
                continue;
            }
            let gap_y = (sj.min_y - si.max_y).max(si.min_y - sj.max_y);
            if gap_x.max(gap_y) >= best {
                continue;
            }
            if segments_intersect(si.a, si.b, sj.a, sj.b) {
                crossed = true;
                best = S::zero();
                worst_theta = curve.thetas[si.index];
                break 'outer;
            }
            let d = segment_distance(si.a, si.b, sj.a, sj.b);
            if d < best {
                best = d;
                worst_theta = curve.thetas[si.index];
            }
        }
    }

    Ok(CertificateReport {
        statement_id: StatementId::SimpleCurve,
        passed: !crossed && best > S::zero(),
        worst_margin: best,
        worst_t: worst_theta,
        grid_size: trace.grid_size,
        tolerance: S::zero(),
    })
}

/// Winding number of the closed polygon about `point`, by signed horizontal
/// ray crossings.
pub fn winding_number<S: Scalar>(curve: &ClosedCurve<S>, point: ComplexPoint<S>) -> isize {
    let pts = &curve.points;
    let mut winding = 0isize;
    for i in 0..pts.len() {
        let a = pts[i];
        let b = pts[(i + 1) % pts.len()];
        if a.im <= point.im {
            if b.im > point.im && cross(b - a, point - a) > S::zero() {
                winding += 1;
            }
        } else if b.im <= point.im && cross(b - a, point - a) < S::zero() {
            winding -= 1;
        }
    }
    winding
}

fn cross<S: Scalar>(p: ComplexPoint<S>, q: ComplexPoint<S>) -> S {
    p.re * q.im - p.im * q.re
}

/// Orientation of `c` relative to the directed segment `a -> b`:
/// 1 counterclockwise, -1 clockwise, 0 collinear within tolerance.
fn orientation<S: Scalar>(a: ComplexPoint<S>, b: ComplexPoint<S>, c: ComplexPoint<S>) -> i8 {
    let value = cross(b - a, c - a);
    let tol: S = from_f64(COLLINEAR_TOLERANCE);
    if value > tol {
        1
    } else if value < -tol {
        -1
    } else {
        0
    }
}

fn in_box<S: Scalar>(p: ComplexPoint<S>, a: ComplexPoint<S>, b: ComplexPoint<S>) -> bool {
    p.re >= a.re.min(b.re)
        && p.re <= a.re.max(b.re)
        && p.im >= a.im.min(b.im)
        && p.im <= a.im.max(b.im)
}

/// Whether segments `[a1, a2]` and `[b1, b2]` share any point.
fn segments_intersect<S: Scalar>(
    a1: ComplexPoint<S>,
    a2: ComplexPoint<S>,
    b1: ComplexPoint<S>,
    b2: ComplexPoint<S>,
) -> bool {
    let o1 = orientation(a1, a2, b1);
    let o2 = orientation(a1, a2, b2);
    let o3 = orientation(b1, b2, a1);
    let o4 = orientation(b1, b2, a2);
    if o1 != o2 && o3 != o4 {
        return true;
    }
    (o1 == 0 && in_box(b1, a1, a2))
        || (o2 == 0 && in_box(b2, a1, a2))
        || (o3 == 0 && in_box(a1, b1, b2))
        || (o4 == 0 && in_box(a2, b1, b2))
}

fn point_segment_distance<S: Scalar>(
    p: ComplexPoint<S>,
    a: ComplexPoint<S>,
    b: ComplexPoint<S>,
) -> S {
    let ab = b - a;
    let len_sq = ab.modulus_sq();
    if len_sq == S::zero() {
        return (p - a).modulus();
    }
    let t = ((p - a).re * ab.re + (p - a).im * ab.im) / len_sq;
    let t = t.max(S::zero()).min(S::one());
    (p - (a + ab.scale(t))).modulus()
}

/// Distance between two non-intersecting segments.
fn segment_distance<S: Scalar>(
    a1: ComplexPoint<S>,
    a2: ComplexPoint<S>,
    b1: ComplexPoint<S>,
    b2: ComplexPoint<S>,
) -> S {
    point_segment_distance(b1, a1, a2)
        .min(point_segment_distance(b2, a1, a2))
        .min(point_segment_distance(a1, b1, b2))
        .min(point_segment_distance(a2, b1, b2))
}
