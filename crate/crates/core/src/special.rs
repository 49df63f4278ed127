//! Scalar special functions and fixed-order quadrature used across the crate.
//!
//! Everything here is self-contained: the error function pair follows Cody's
//! rational Chebyshev approximations, the normal quantile uses Acklam's
//! rational initializer polished by one Halley step against the CDF, and the
//! digamma function uses the shift recurrence plus the asymptotic series.
//! Accuracy targets (checked in tests against independent oracles):
//!
//! | function          | target            |
//! |-------------------|-------------------|
//! | `erf` / `erfc`    | ~1e-15 relative   |
//! | `normal_quantile` | 1e-9 absolute     |
//! | `digamma`         | 1e-10 absolute    |

/// Euler-Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

const FRAC_1_SQRT_PI: f64 = 0.564_189_583_547_756_3;
const SQRT_2PI: f64 = 2.506_628_274_631_000_7;

/// Error function, |error| ~ 1e-16 relative.
///
/// Rational Chebyshev fits from W. J. Cody, "Rational Chebyshev approximation
/// for the error function", Math. Comp. 23 (1969).
pub fn erf(x: f64) -> f64 {
    if x.abs() <= 0.46875 {
        erf_small(x)
    } else {
        let v = 1.0 - erfc(x.abs());
        if x < 0.0 {
            -v
        } else {
            v
        }
    }
}

/// Complementary error function, good relative accuracy out to underflow.
pub fn erfc(x: f64) -> f64 {
    let ax = x.abs();
    if ax <= 0.46875 {
        // erf_small is odd in x, so this covers both signs.
        return 1.0 - erf_small(x);
    }
    let v = if ax <= 4.0 { erfc_mid(ax) } else { erfc_far(ax) };
    if x < 0.0 {
        2.0 - v
    } else {
        v
    }
}

// Core interval |x| <= 0.46875: erf(x) = x * P(x^2)/Q(x^2).
fn erf_small(x: f64) -> f64 {
    const A: [f64; 5] = [
        3.16112374387056560e0,
        1.13864154151050156e2,
        3.77485237685302021e2,
        3.20937758913846947e3,
        1.85777706184603153e-1,
    ];
    const B: [f64; 4] = [
        2.36012909523441209e1,
        2.44024637934444173e2,
        1.28261652607737228e3,
        2.84423683343917062e3,
    ];
    let z = x * x;
    let mut num = A[4] * z;
    let mut den = z;
    for i in 0..3 {
        num = (num + A[i]) * z;
        den = (den + B[i]) * z;
    }
    x * (num + A[3]) / (den + B[3])
}

// 0.46875 < x <= 4: erfc(x) = exp(-x^2) * P(x)/Q(x).
fn erfc_mid(x: f64) -> f64 {
    const C: [f64; 9] = [
        5.64188496988670089e-1,
        8.88314979438837594e0,
        6.61191906371416295e1,
        2.98635138197400131e2,
        8.81952221241769090e2,
        1.71204761263407058e3,
        2.05107837782607147e3,
        1.23033935479799725e3,
        2.15311535474403846e-8,
    ];
    const D: [f64; 8] = [
        1.57449261107098347e1,
        1.17693950891312499e2,
        5.37181101862009858e2,
        1.62138957456669019e3,
        3.29079923573345963e3,
        4.36261909014324716e3,
        3.43936767414372164e3,
        1.23033935480374942e3,
    ];
    let mut num = C[8] * x;
    let mut den = x;
    for i in 0..7 {
        num = (num + C[i]) * x;
        den = (den + D[i]) * x;
    }
    exp_neg_sq(x) * (num + C[7]) / (den + D[7])
}

// x > 4: erfc(x) = exp(-x^2)/x * (1/sqrt(pi) + z*P(z)/Q(z)), z = 1/x^2.
fn erfc_far(x: f64) -> f64 {
    const P: [f64; 6] = [
        3.05326634961232344e-1,
        3.60344899949804439e-1,
        1.25781726111229246e-1,
        1.60837851487422766e-2,
        6.58749161529837803e-4,
        1.63153871373020978e-2,
    ];
    const Q: [f64; 5] = [
        2.56852019228982242e0,
        1.87295284992346047e0,
        5.27905102951428412e-1,
        6.05183413124413191e-2,
        2.33520497626869185e-3,
    ];
    if x >= 26.6 {
        return 0.0; // below the smallest positive normal times exp(-x^2)
    }
    let z = 1.0 / (x * x);
    let mut num = P[5] * z;
    let mut den = z;
    for i in 0..4 {
        num = (num + P[i]) * z;
        den = (den + Q[i]) * z;
    }
    let r = z * (num + P[4]) / (den + Q[4]);
    exp_neg_sq(x) * (FRAC_1_SQRT_PI - r) / x
}

// exp(-x^2) with the argument split to keep the rounding error of x*x out of
// the exponential: x2 is x rounded to 1/16ths, so both partial exponents are
// computed from exactly representable differences.
fn exp_neg_sq(x: f64) -> f64 {
    let x2 = (x * 16.0).floor() / 16.0;
    ((x2 - x) * (x2 + x)).exp() * (-x2 * x2).exp()
}

/// Standard normal CDF.
pub fn normal_cdf(x: f64) -> f64 {
    0.5 * erfc(-x / std::f64::consts::SQRT_2)
}

/// Standard normal density.
pub fn normal_pdf(x: f64) -> f64 {
    (-0.5 * x * x).exp() / SQRT_2PI
}

/// Standard normal quantile for `p` in (0, 1); NaN outside.
///
/// Acklam's rational approximation (relative error < 1.15e-9 on its own)
/// followed by one Halley refinement against [`normal_cdf`], which lands the
/// result near machine precision. Absolute error stays below 1e-9 across the
/// whole open interval.
pub fn normal_quantile(p: f64) -> f64 {
    if !(p > 0.0 && p < 1.0) {
        return f64::NAN;
    }
    if p == 0.5 {
        return 0.0;
    }
    let x = acklam(p);
    // Halley: with f = cdf(x) - p, f''/f' = -x, the update is
    // x - u / (1 + x u / 2) where u = f / pdf(x).
    let u = (normal_cdf(x) - p) / normal_pdf(x);
    x - u / (1.0 + 0.5 * x * u)
}

fn acklam(p: f64) -> f64 {
    const A: [f64; 6] = [
        -3.969683028665376e1,
        2.209460984245205e2,
        -2.759285104469687e2,
        1.383577518672690e2,
        -3.066479806614716e1,
        2.506628277459239e0,
    ];
    const B: [f64; 5] = [
        -5.447609879822406e1,
        1.615858368580409e2,
        -1.556989798598866e2,
        6.680131188771972e1,
        -1.328068155288572e1,
    ];
    const C: [f64; 6] = [
        -7.784894002430293e-3,
        -3.223964580411365e-1,
        -2.400758277161838e0,
        -2.549732539343734e0,
        4.374664141464968e0,
        2.938163982698783e0,
    ];
    const D: [f64; 4] = [
        7.784695709041462e-3,
        3.224671290700398e-1,
        2.445134137142996e0,
        3.754408661907416e0,
    ];
    const P_LOW: f64 = 0.02425;

    if p < P_LOW {
        let q = (-2.0 * p.ln()).sqrt();
        (((((C[0] * q + C[1]) * q + C[2]) * q + C[3]) * q + C[4]) * q + C[5])
            / ((((D[0] * q + D[1]) * q + D[2]) * q + D[3]) * q + 1.0)
    } else if p <= 1.0 - P_LOW {
        let q = p - 0.5;
        let r = q * q;
        (((((A[0] * r + A[1]) * r + A[2]) * r + A[3]) * r + A[4]) * r + A[5]) * q
            / (((((B[0] * r + B[1]) * r + B[2]) * r + B[3]) * r + B[4]) * r + 1.0)
    } else {
        let q = (-2.0 * (1.0 - p).ln()).sqrt();
        -(((((C[0] * q + C[1]) * q + C[2]) * q + C[3]) * q + C[4]) * q + C[5])
            / ((((D[0] * q + D[1]) * q + D[2]) * q + D[3]) * q + 1.0)
    }
}

/// Digamma function for `x > 0`; NaN otherwise.
///
/// Shifts the argument up with psi(x+1) = psi(x) + 1/x until x >= 10, then
/// evaluates the asymptotic series with Bernoulli terms through x^-12, which
/// keeps the truncation error below 1e-13 at the threshold.
pub fn digamma(x: f64) -> f64 {
    if !(x > 0.0) {
        return f64::NAN;
    }
    let mut result = 0.0;
    let mut z = x;
    while z < 10.0 {
        result -= 1.0 / z;
        z += 1.0;
    }
    let inv = 1.0 / z;
    let inv2 = inv * inv;
    // ln z - 1/(2z) - sum B_{2n} / (2n z^{2n})
    let series = inv2
        * (1.0 / 12.0
            + inv2
                * (-1.0 / 120.0
                    + inv2
                        * (1.0 / 252.0
                            + inv2 * (-1.0 / 240.0 + inv2 * (1.0 / 132.0 - inv2 * 691.0 / 32760.0)))));
    result + z.ln() - 0.5 * inv - series
}

// 16-point Gauss-Legendre rule on [-1, 1]: positive abscissas and weights
// (the rule is symmetric). Standard tabulated values.
const GL16_X: [f64; 8] = [
    0.095_012_509_837_637_44,
    0.281_603_550_779_258_9,
    0.458_016_777_657_227_4,
    0.617_876_244_402_643_75,
    0.755_404_408_355_003,
    0.865_631_202_387_831_7,
    0.944_575_023_073_232_6,
    0.989_400_934_991_649_9,
];
const GL16_W: [f64; 8] = [
    0.189_450_610_455_068_5,
    0.182_603_415_044_923_59,
    0.169_156_519_395_002_54,
    0.149_595_988_816_576_73,
    0.124_628_971_255_533_87,
    0.095_158_511_682_492_78,
    0.062_253_523_938_647_89,
    0.027_152_459_411_754_095,
];

/// Integral of `f` over `[a, b]` with the fixed 16-point Gauss-Legendre rule.
///
/// Exact for polynomials up to degree 31; callers are expected to split the
/// domain into panels on which the integrand is smooth.
pub fn gauss_legendre_16<F: Fn(f64) -> f64>(f: F, a: f64, b: f64) -> f64 {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let mut acc = 0.0;
    for i in 0..8 {
        let dx = h * GL16_X[i];
        acc += GL16_W[i] * (f(c - dx) + f(c + dx));
    }
    acc * h
}
