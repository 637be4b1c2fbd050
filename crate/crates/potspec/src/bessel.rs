//! Bessel functions of the first kind `J_nu` for real order `nu >= -1/2` and
//! their positive zeros `j_{nu,m}`.
//!
//! Evaluation strategy, chosen per argument range:
//!
//! * base orders in `[-1/2, 3/2)`: ascending power series in double-double
//!   arithmetic for `x < 16` (the series suffers cancellation past the first
//!   lobe, so the accumulation runs in ~31 significant digits), Hankel
//!   asymptotic expansion for `x >= 16`;
//! * higher orders: three-term recurrence from the base pair, upward while
//!   `nu <= x` (oscillatory region, stable) and Miller's normalized downward
//!   recurrence when `nu > x`;
//! * half-integer orders hit the exact trigonometric forms of the base pair
//!   (`J_{-1/2}`, `J_{1/2}`) and stay exact under the recurrences.
//!
//! Zeros are located by scanning for a sign change with a step strictly
//! smaller than the minimal zero spacing (slightly below pi for orders in
//! `(-1/2, 1/2)`, above pi otherwise), then bisection to a safe width and a
//! bracketed secant polish. The bracket guarantees no zero is skipped and no
//! zero is counted twice.

use crate::error::{Error, Result};

/// Order of a Bessel function of the first kind; invariant `nu >= -1/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BesselOrder(f64);

impl BesselOrder {
    pub fn new(nu: f64) -> Result<Self> {
        if !(nu >= -0.5) {
            return Err(Error::OrderBelowMinusHalf(nu));
        }
        Ok(BesselOrder(nu))
    }

    /// Integer order `k`, used by the 2D disc spectrum.
    pub fn integer(k: u32) -> Self {
        BesselOrder(k as f64)
    }

    /// Half-integer order `l - 1/2`, used by the 3D ball spectrum.
    pub fn half_integer(l: u32) -> Self {
        BesselOrder(l as f64 - 0.5)
    }

    pub fn nu(&self) -> f64 {
        self.0
    }
}

/// A located positive zero `j_{nu,m}` (index `m` is 1-based).
#[derive(Debug, Clone, Copy)]
pub struct BesselZero {
    pub order: BesselOrder,
    pub index: usize,
    pub value: f64,
}

// ---------------------------------------------------------------------------
// double-double helpers (only what the series needs)
// ---------------------------------------------------------------------------

#[derive(Clone, Copy)]
struct Dd {
    hi: f64,
    lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> Dd {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    Dd { hi: s, lo: err }
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> Dd {
    let s = a + b;
    let err = b - (s - a);
    Dd { hi: s, lo: err }
}

#[inline]
fn two_prod(a: f64, b: f64) -> Dd {
    let p = a * b;
    let err = a.mul_add(b, -p);
    Dd { hi: p, lo: err }
}

impl Dd {
    #[inline]
    fn from_f64(v: f64) -> Self {
        Dd { hi: v, lo: 0.0 }
    }

    #[inline]
    fn add(self, o: Dd) -> Dd {
        let s = two_sum(self.hi, o.hi);
        quick_two_sum(s.hi, s.lo + self.lo + o.lo)
    }

    #[inline]
    fn mul(self, o: Dd) -> Dd {
        let p = two_prod(self.hi, o.hi);
        quick_two_sum(p.hi, p.lo + self.hi * o.lo + self.lo * o.hi)
    }

    #[inline]
    fn div(self, o: Dd) -> Dd {
        let q1 = self.hi / o.hi;
        let r = self.add(o.mul(Dd::from_f64(-q1)));
        let q2 = (r.hi + r.lo) / o.hi;
        quick_two_sum(q1, q2)
    }

    #[inline]
    fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }
}

// ---------------------------------------------------------------------------
// gamma (Lanczos, g = 7), needed only for the series prefactor at base orders
// ---------------------------------------------------------------------------

const LANCZOS: [f64; 9] = [
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
];

/// Gamma function for positive real argument (accurate to ~1e-15 relative).
pub(crate) fn gamma(z: f64) -> f64 {
    debug_assert!(z > 0.0);
    let mut a = LANCZOS[0];
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        a += c / (z - 1.0 + i as f64);
    }
    let t = z + 6.5;
    (2.0 * std::f64::consts::PI).sqrt() * t.powf(z - 0.5) * (-t).exp() * a
}

// ---------------------------------------------------------------------------
// base-order evaluation (nu in [-1/2, 3/2))
// ---------------------------------------------------------------------------

const SERIES_ASYMPTOTIC_SPLIT: f64 = 16.0;

/// Ascending power series, double-double accumulation.
///
/// Valid for any `nu >= -1/2` but only called with `x < 16`, where the
/// largest intermediate term stays below ~1e4 and the double-double
/// accumulation keeps the absolute error near machine level.
fn series_dd(nu: f64, x: f64) -> f64 {
    let half_x = 0.5 * x;
    let prefactor = half_x.powf(nu) / gamma(nu + 1.0);
    if prefactor == 0.0 {
        return 0.0;
    }
    let z = two_prod(half_x, half_x);
    let nu_plus = two_sum(nu, 1.0);
    let mut term = Dd::from_f64(1.0);
    let mut sum = term;
    for m in 0..400 {
        let mf = m as f64;
        // denominator (m+1)(m+nu+1), kept in double-double
        let d1 = Dd::from_f64(mf + 1.0);
        let d2 = two_sum(nu_plus.hi, mf).add(Dd::from_f64(nu_plus.lo));
        term = term.mul(z).div(d1.mul(d2)).neg();
        sum = sum.add(term);
        if term.hi.abs() < 1e-22 * sum.hi.abs().max(1e-30) {
            break;
        }
    }
    prefactor * (sum.hi + sum.lo)
}

/// Hankel large-argument expansion; requires `x >= 16` and a small order.
fn hankel_asymptotic(nu: f64, x: f64) -> f64 {
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};
    let mu = 4.0 * nu * nu;
    let mut p = 0.0;
    let mut q = 0.0;
    let mut coeff = 1.0f64; // c_k / x^k
    let mut prev_mag = f64::INFINITY;
    for k in 0..40u32 {
        let mag = coeff.abs();
        if mag > prev_mag {
            break; // asymptotic series started diverging
        }
        prev_mag = mag;
        let sign = if (k / 2) % 2 == 0 { 1.0 } else { -1.0 };
        if k % 2 == 0 {
            p += sign * coeff;
        } else {
            q += sign * coeff;
        }
        if mag < 1e-19 {
            break;
        }
        let kf = k as f64;
        coeff *= (mu - (2.0 * kf + 1.0).powi(2)) / (8.0 * (kf + 1.0) * x);
    }
    let omega = x - nu * FRAC_PI_2 - FRAC_PI_4;
    (2.0 / (PI * x)).sqrt() * (omega.cos() * p - omega.sin() * q)
}

/// `J_nu(x)` for `nu` in `[-1/2, 3/2)`, `x > 0`.
fn j_base(nu: f64, x: f64) -> f64 {
    use std::f64::consts::PI;
    if nu == -0.5 {
        return (2.0 / (PI * x)).sqrt() * x.cos();
    }
    if nu == 0.5 {
        return (2.0 / (PI * x)).sqrt() * x.sin();
    }
    if x < SERIES_ASYMPTOTIC_SPLIT {
        series_dd(nu, x)
    } else {
        hankel_asymptotic(nu, x)
    }
}

// ---------------------------------------------------------------------------
// order recurrences
// ---------------------------------------------------------------------------

/// Upward three-term recurrence from the base pair; stable while order <= x.
fn j_upward(nu0: f64, n: usize, x: f64) -> f64 {
    let mut jm = j_base(nu0, x);
    if n == 0 {
        return jm;
    }
    let mut j = j_base(nu0 + 1.0, x);
    for k in 1..n {
        let next = (2.0 * (nu0 + k as f64) / x).mul_add(j, -jm);
        jm = j;
        j = next;
    }
    j
}

/// Miller's downward recurrence, normalized against the base pair.
/// Used when the target order exceeds the argument (J decays with order).
fn j_miller(nu0: f64, n: usize, x: f64) -> f64 {
    let base0 = j_base(nu0, x);
    let base1 = j_base(nu0 + 1.0, x);
    let mut previous: Option<f64> = None;
    for attempt in 0..8 {
        let start = n + 16 + 24 * attempt + (2.0 * x.sqrt()) as usize;
        let mut fp = 0.0f64; // f_{k+1}
        let mut f = 1e-280f64; // f_k
        let mut f_target = 0.0f64;
        let mut k = start;
        loop {
            let fm = (2.0 * (nu0 + k as f64) / x).mul_add(f, -fp);
            fp = f;
            f = fm;
            k -= 1;
            if k == n {
                f_target = f;
            }
            if f.abs() > 1e250 {
                let scale = 1e-250;
                f *= scale;
                fp *= scale;
                f_target *= scale;
            }
            if k == 0 {
                break;
            }
        }
        // f now holds the unnormalized J_{nu0}; fp holds J_{nu0+1}
        let value = if base0.abs() >= base1.abs() {
            f_target * (base0 / f)
        } else {
            f_target * (base1 / fp)
        };
        if let Some(prev) = previous {
            if (value - prev).abs() <= 1e-15 * (value.abs() + 1e-300) {
                return value;
            }
        }
        previous = Some(value);
    }
    previous.unwrap()
}

/// Evaluate `J_nu(x)`.
///
/// Absolute error stays below 1e-12 for `x <= 200`, `nu <= 60` (and in
/// practice well beyond; the zero tables for high orders rely on it).
pub fn bessel_j(order: BesselOrder, x: f64) -> Result<f64> {
    if x < 0.0 {
        return Err(Error::NegativeArgument(x));
    }
    let nu = order.nu();
    if x == 0.0 {
        return Ok(if nu == 0.0 { 1.0 } else { 0.0 });
    }
    // split nu = nu0 + n with nu0 in [-1/2, 1/2)
    let n = (nu + 0.5).floor() as usize;
    let nu0 = nu - n as f64;
    if n == 0 {
        return Ok(j_base(nu0, x));
    }
    if nu <= x {
        Ok(j_upward(nu0, n, x))
    } else {
        Ok(j_miller(nu0, n, x))
    }
}

// ---------------------------------------------------------------------------
// zeros
// ---------------------------------------------------------------------------

/// Scan step strictly below the minimal spacing of consecutive zeros
/// (spacing > pi for |nu| >= 1/2 and > 0.94 pi otherwise).
const SCAN_STEP: f64 = 2.2;

fn refine_zero(order: BesselOrder, mut lo: f64, mut hi: f64) -> Result<f64> {
    let mut flo = bessel_j(order, lo)?;
    let mut fhi = bessel_j(order, hi)?;
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo.signum() == fhi.signum() {
        return Err(Error::ZeroSearchFailed { order: order.nu(), lo, hi });
    }
    // bisection to a narrow bracket, then bracketed secant
    for _ in 0..200 {
        let width = hi - lo;
        if width <= 8.0 * f64::EPSILON * hi {
            return Ok(0.5 * (lo + hi));
        }
        let mid = if width > 1e-4 * hi {
            0.5 * (lo + hi)
        } else {
            // secant estimate, clamped safely inside the bracket
            let s = (lo * fhi - hi * flo) / (fhi - flo);
            let margin = 0.01 * width;
            s.clamp(lo + margin, hi - margin)
        };
        if !(mid > lo && mid < hi) {
            return Ok(0.5 * (lo + hi));
        }
        let fmid = bessel_j(order, mid)?;
        if fmid == 0.0 {
            return Ok(mid);
        }
        if fmid.signum() == flo.signum() {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
            fhi = fmid;
        }
    }
    Err(Error::ZeroSearchFailed { order: order.nu(), lo, hi })
}

/// First `count` positive zeros, strictly increasing.
pub fn bessel_zeros_upto(order: BesselOrder, count: usize) -> Result<Vec<BesselZero>> {
    let nu = order.nu();
    let mut zeros = Vec::with_capacity(count);
    if count == 0 {
        return Ok(zeros);
    }
    // start below the first zero: J_nu > 0 on (0, j_{nu,1})
    let mut x = if nu < 1.0 { 0.05 } else { nu + 0.2 };
    let x_cap = nu + 2.0 + (count as f64 + 0.5 * nu + 3.0) * std::f64::consts::PI
        + 6.0 * nu.cbrt().max(0.0);
    let mut f = bessel_j(order, x)?;
    while zeros.len() < count {
        let x_next = x + SCAN_STEP;
        if x_next > x_cap {
            return Err(Error::ZeroSearchFailed { order: nu, lo: x, hi: x_cap });
        }
        let f_next = bessel_j(order, x_next)?;
        if f == 0.0 {
            // landed exactly on a zero at the left end (vanishingly rare)
            zeros.push(BesselZero { order, index: zeros.len() + 1, value: x });
        } else if f.signum() != f_next.signum() {
            let z = refine_zero(order, x, x_next)?;
            zeros.push(BesselZero { order, index: zeros.len() + 1, value: z });
        }
        x = x_next;
        f = f_next;
    }
    Ok(zeros)
}

/// All positive zeros not exceeding `x_cap`, strictly increasing.
pub fn bessel_zeros_below(order: BesselOrder, x_cap: f64) -> Result<Vec<BesselZero>> {
    let nu = order.nu();
    let mut zeros = Vec::new();
    let mut x = if nu < 1.0 { 0.05 } else { nu + 0.2 };
    if x >= x_cap {
        return Ok(zeros);
    }
    let mut f = bessel_j(order, x)?;
    while x < x_cap {
        let x_next = x + SCAN_STEP;
        let f_next = bessel_j(order, x_next)?;
        if f == 0.0 {
            if x <= x_cap {
                zeros.push(BesselZero { order, index: zeros.len() + 1, value: x });
            }
        } else if f.signum() != f_next.signum() {
            let z = refine_zero(order, x, x_next)?;
            if z <= x_cap {
                zeros.push(BesselZero { order, index: zeros.len() + 1, value: z });
            } else {
                break;
            }
        }
        x = x_next;
        f = f_next;
    }
    Ok(zeros)
}

/// The `m`-th positive zero (`m >= 1`).
pub fn bessel_zero(order: BesselOrder, m: usize) -> Result<BesselZero> {
    if m == 0 {
        return Err(Error::InvalidConfig("zero index m must be >= 1".into()));
    }
    let mut zs = bessel_zeros_upto(order, m)?;
    Ok(zs.pop().expect("requested zero present"))
}

// ---------------------------------------------------------------------------
// Rayleigh functions sigma_{2p}(nu) = sum_m j_{nu,m}^{-2p}
// ---------------------------------------------------------------------------

/// Exact Rayleigh sums over all zeros of a given order, for integer `p >= 1`,
/// via the classical convolution recursion
/// `(nu + p) sigma_{2p} = sum_{k=1}^{p-1} sigma_{2k} sigma_{2(p-k)}`.
///
/// Returns `[sigma_2, sigma_4, ..., sigma_{2p_max}]`.
pub fn rayleigh_sums(nu: f64, p_max: usize) -> Vec<f64> {
    assert!(p_max >= 1);
    let mut sigma = Vec::with_capacity(p_max);
    sigma.push(1.0 / (4.0 * (nu + 1.0)));
    for p in 2..=p_max {
        let mut acc = 0.0;
        for k in 1..p {
            acc += sigma[k - 1] * sigma[p - k - 1];
        }
        sigma.push(acc / (nu + p as f64));
    }
    sigma
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};
    use std::f64::consts::PI;

    /// Independent oracle: plain f64 ascending series for J_0 (no shared code
    /// with the production double-double path) plus pure bisection.
    fn j0_series_plain(x: f64) -> f64 {
        let mut term = 1.0f64;
        let mut sum = 1.0f64;
        let q = 0.25 * x * x;
        for m in 1..200 {
            term *= -q / ((m * m) as f64);
            sum += term;
            if term.abs() < 1e-18 {
                break;
            }
        }
        sum
    }

    fn j0_first_zero_bisect_oracle() -> f64 {
        let (mut lo, mut hi) = (2.0f64, 3.0f64);
        assert!(j0_series_plain(lo) > 0.0 && j0_series_plain(hi) < 0.0);
        for _ in 0..80 {
            let mid = 0.5 * (lo + hi);
            if j0_series_plain(mid) > 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }

    #[test]
    fn j0_at_origin_is_one() {
        assert_eq!(bessel_j(BesselOrder::integer(0), 0.0).unwrap(), 1.0);
        assert_eq!(bessel_j(BesselOrder::integer(3), 0.0).unwrap(), 0.0);
    }

    #[test]
    fn half_order_is_scaled_cosine() {
        let order = BesselOrder::new(-0.5).unwrap();
        assert_abs_diff_eq!(bessel_j(order, PI / 2.0).unwrap(), 0.0, epsilon = 1e-14);
        let x = 1.3;
        assert_relative_eq!(
            bessel_j(order, x).unwrap(),
            (2.0 / (PI * x)).sqrt() * x.cos(),
            max_relative = 1e-14
        );
    }

    #[test]
    fn order_below_minus_half_rejected() {
        assert!(BesselOrder::new(-0.6).is_err());
    }

    #[test]
    fn negative_argument_rejected() {
        assert!(bessel_j(BesselOrder::integer(0), -1.0).is_err());
    }

    #[test]
    fn known_values_small_orders() {
        let cases = [
            (0.0, 1.0, 0.7651976865579666),
            (1.0, 1.0, 0.4400505857449335),
            (0.0, 2.0, 0.22389077914123567),
            (1.0, 2.0, 0.5767248077568734),
            (0.0, 5.0, -0.17759677131433830),
            (0.0, 10.0, -0.2459357644513483),
            (1.0, 10.0, 0.04347274616886144),
            (0.0, 20.0, 0.16702466434058315),
            (1.0, 20.0, 0.06683312417584991),
        ];
        for (nu, x, expected) in cases {
            let got = bessel_j(BesselOrder::new(nu).unwrap(), x).unwrap();
            assert_abs_diff_eq!(got, expected, epsilon = 1e-13);
        }
    }

    #[test]
    fn series_and_asymptotic_agree_in_overlap() {
        // both representations are valid on [16, 40]; the series (in
        // double-double) is the reference
        for &nu in &[0.0, 0.3, 1.0, 2.0, 5.0, 7.5, 11.0] {
            let order = BesselOrder::new(nu).unwrap();
            let n = (nu + 0.5).floor() as usize;
            let nu0 = nu - n as f64;
            for i in 0..25 {
                let x = 16.5 + i as f64;
                let via_recurrence = bessel_j(order, x).unwrap();
                let via_series = series_dd(nu, x);
                assert_abs_diff_eq!(via_recurrence, via_series, epsilon = 1e-12);
                let _ = nu0;
            }
        }
    }

    #[test]
    fn miller_matches_series_above_argument() {
        for &(nu, x) in &[(12.0, 5.0), (20.0, 8.0), (35.5, 14.0), (9.5, 3.0)] {
            let got = bessel_j(BesselOrder::new(nu).unwrap(), x).unwrap();
            let reference = series_dd(nu, x);
            assert_abs_diff_eq!(got, reference, epsilon = 1e-14);
        }
    }

    #[test]
    fn first_zero_of_j0_matches_bisection_oracle() {
        let oracle = j0_first_zero_bisect_oracle();
        let z = bessel_zero(BesselOrder::integer(0), 1).unwrap();
        assert_abs_diff_eq!(z.value, oracle, epsilon = 1e-12);
        // frozen from the oracle
        assert_abs_diff_eq!(z.value, 2.404825557695773, epsilon = 1e-12);
        assert!(bessel_j(BesselOrder::integer(0), z.value).unwrap().abs() < 1e-13);
    }

    #[test]
    fn cosine_zeros_closed_form() {
        let order = BesselOrder::new(-0.5).unwrap();
        let zeros = bessel_zeros_upto(order, 50).unwrap();
        for z in &zeros {
            let expected = (z.index as f64 - 0.5) * PI;
            assert_relative_eq!(z.value, expected, max_relative = 1e-12);
        }
        assert_relative_eq!(zeros[0].value, PI / 2.0, max_relative = 1e-13);
        assert_relative_eq!(zeros[2].value, 2.5 * PI, max_relative = 1e-13);
    }

    #[test]
    fn first_zeros_frozen_values() {
        // frozen from the scan + bisection refinement, cross-checked against
        // the independent plain-series oracle above for j_{0,1}
        let j0 = bessel_zeros_upto(BesselOrder::integer(0), 2).unwrap();
        assert_abs_diff_eq!(j0[0].value, 2.404825557695773, epsilon = 1e-12);
        assert_abs_diff_eq!(j0[1].value, 5.520078110286311, epsilon = 1e-12);
        let j1 = bessel_zeros_upto(BesselOrder::integer(1), 1).unwrap();
        assert_abs_diff_eq!(j1[0].value, 3.831705970207512, epsilon = 1e-12);
    }

    #[test]
    fn zeros_interlace_across_orders() {
        let tables: Vec<Vec<f64>> = (0..=11)
            .map(|k| {
                bessel_zeros_upto(BesselOrder::integer(k), 21)
                    .unwrap()
                    .into_iter()
                    .map(|z| z.value)
                    .collect()
            })
            .collect();
        for nu in 0..=10usize {
            for m in 0..20usize {
                assert!(tables[nu][m] < tables[nu + 1][m]);
                assert!(tables[nu + 1][m] < tables[nu][m + 1]);
            }
        }
    }

    #[test]
    fn zero_spacing_approaches_pi() {
        for nu in 0..=5u32 {
            let zeros = bessel_zeros_upto(BesselOrder::integer(nu), 51).unwrap();
            let spacing = zeros[50].value - zeros[49].value;
            assert!((spacing - PI).abs() < 0.05, "order {nu}: spacing {spacing}");
        }
    }

    #[test]
    fn function_vanishes_at_returned_zeros() {
        for &nu in &[0.0, 1.0, 4.5, 17.0, 59.5] {
            let order = BesselOrder::new(nu).unwrap();
            for z in bessel_zeros_upto(order, 30).unwrap() {
                assert!(
                    bessel_j(order, z.value).unwrap().abs() < 1e-10,
                    "J_{nu}({}) too far from zero",
                    z.value
                );
            }
        }
    }

    #[test]
    fn rayleigh_sum_identity_validates_zero_tables() {
        // sum_m j_{nu,m}^(-2) = 1 / (4 (nu + 1)); the partial sum plus an
        // integral-bounded tail must bracket it
        for &nu in &[0.0, 1.0, 2.5, 16.5, 40.0] {
            let order = BesselOrder::new(nu).unwrap();
            let zeros = bessel_zeros_upto(order, 400).unwrap();
            let partial: f64 = zeros.iter().map(|z| 1.0 / (z.value * z.value)).sum();
            let last = zeros.last().unwrap().value;
            // spacing >= 2.9 for every order here, so the tail is below
            // integral of (last + 2.9 t)^-2 dt
            let tail_hi = 1.0 / (2.9 * last);
            let exact = 1.0 / (4.0 * (nu + 1.0));
            assert!(partial < exact + 1e-12, "order {nu}");
            assert!(partial + tail_hi > exact, "order {nu}");
        }
    }

    #[test]
    fn rayleigh_recursion_matches_classical_forms() {
        for &nu in &[-0.5, 0.0, 1.0, 3.5] {
            let s = rayleigh_sums(nu, 4);
            assert_relative_eq!(s[0], 1.0 / (4.0 * (nu + 1.0)), max_relative = 1e-14);
            assert_relative_eq!(
                s[1],
                1.0 / (16.0 * (nu + 1.0).powi(2) * (nu + 2.0)),
                max_relative = 1e-14
            );
            assert_relative_eq!(
                s[2],
                1.0 / (32.0 * (nu + 1.0).powi(3) * (nu + 2.0) * (nu + 3.0)),
                max_relative = 1e-14
            );
            assert_relative_eq!(
                s[3],
                (5.0 * nu + 11.0)
                    / (256.0
                        * (nu + 1.0).powi(4)
                        * (nu + 2.0).powi(2)
                        * (nu + 3.0)
                        * (nu + 4.0)),
                max_relative = 1e-14
            );
        }
    }

    #[test]
    fn gamma_known_values() {
        assert_relative_eq!(gamma(1.0), 1.0, max_relative = 1e-13);
        assert_relative_eq!(gamma(2.0), 1.0, max_relative = 1e-13);
        assert_relative_eq!(gamma(0.5), PI.sqrt(), max_relative = 1e-13);
        assert_relative_eq!(gamma(1.5), 0.5 * PI.sqrt(), max_relative = 1e-13);
        assert_relative_eq!(gamma(2.5), 0.75 * PI.sqrt(), max_relative = 1e-13);
        assert_relative_eq!(gamma(6.0), 120.0, max_relative = 1e-13);
    }
}
