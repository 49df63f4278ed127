//! Distribution representations and the operations the dominance machinery
//! needs from them: quantiles, CDFs, negation, extreme order statistics.
//!
//! Two representations cover everything downstream:
//!
//! * [`DiscreteDistribution`] — finitely many atoms, sorted, merged, with
//!   cached cumulative masses. Quantile and CDF are exact step functions.
//! * [`LocationScaleDistribution`] — `mu + sigma * Z` for a standard member
//!   `Z` of one of four families. The standard members are Uniform on [0, 1],
//!   Logistic(0, 1), Normal(0, 1), and the constant 0, so `Uniform{a, b}`
//!   carries `mu = a`, `sigma = b - a`.
//!
//! Quantiles are right-continuous throughout, which is what makes the
//! breakpoint sweeps in the dominance module exact.

use crate::error::{DsdError, Result};
use crate::special;
use serde::{Deserialize, Serialize};
use std::borrow::Cow;

/// Tolerance on the total mass of a discrete distribution.
pub const MASS_TOL: f64 = 1e-12;

/// Location-scale family tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Uniform,
    Logistic,
    Normal,
    Constant,
}

/// Which extreme order statistic to form in
/// [`Distribution::order_statistic_extreme`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Extreme {
    /// Sample maximum of `k` iid copies: CDF becomes `F^k`.
    Max,
    /// Sample minimum of `k` iid copies: CDF becomes `1 - (1-F)^k`.
    Min,
}

/// Finite discrete distribution with sorted support.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscreteDistribution {
    values: Vec<f64>,
    probs: Vec<f64>,
    cum: Vec<f64>,
}

impl DiscreteDistribution {
    /// Builds a distribution from value/probability pairs.
    ///
    /// Values are sorted, exact duplicates merged (masses added), and the
    /// total mass must be within [`MASS_TOL`] of one; the final cumulative
    /// is then pinned to exactly 1.0 so that distortions see a clean unit
    /// interval.
    pub fn new(values: &[f64], probs: &[f64]) -> Result<Self> {
        if values.is_empty() {
            return Err(DsdError::InvalidDistribution("empty support".into()));
        }
        if values.len() != probs.len() {
            return Err(DsdError::InvalidDistribution(format!(
                "{} values but {} probabilities",
                values.len(),
                probs.len()
            )));
        }
        for (&v, &p) in values.iter().zip(probs) {
            if !v.is_finite() {
                return Err(DsdError::InvalidDistribution(format!(
                    "non-finite value {v}"
                )));
            }
            if !(p > 0.0) || !p.is_finite() {
                return Err(DsdError::InvalidDistribution(format!(
                    "probability {p} at value {v} is not strictly positive"
                )));
            }
        }
        let mut pairs: Vec<(f64, f64)> = values.iter().copied().zip(probs.iter().copied()).collect();
        pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
        let mut merged: Vec<(f64, f64)> = Vec::with_capacity(pairs.len());
        for (v, p) in pairs {
            match merged.last_mut() {
                Some(last) if last.0 == v => last.1 += p,
                _ => merged.push((v, p)),
            }
        }
        let total: f64 = merged.iter().map(|&(_, p)| p).sum();
        if (total - 1.0).abs() > MASS_TOL {
            return Err(DsdError::InvalidDistribution(format!(
                "total mass {total} is not 1"
            )));
        }
        let values: Vec<f64> = merged.iter().map(|&(v, _)| v).collect();
        let probs: Vec<f64> = merged.iter().map(|&(_, p)| p).collect();
        let mut cum = Vec::with_capacity(probs.len());
        let mut acc = 0.0;
        for &p in &probs {
            acc += p;
            cum.push(acc);
        }
        *cum.last_mut().unwrap() = 1.0;
        Ok(Self { values, probs, cum })
    }

    /// Uniform masses on the given support.
    pub fn uniform_on(values: &[f64]) -> Result<Self> {
        let p = 1.0 / values.len() as f64;
        Self::new(values, &vec![p; values.len()])
    }

    // Rebuilds from a strictly increasing cumulative vector; zero-mass atoms
    // (possible after powering cumulative masses) are dropped.
    fn from_cum(values: &[f64], cum: &[f64]) -> Self {
        let mut vs = Vec::with_capacity(values.len());
        let mut ps = Vec::with_capacity(values.len());
        let mut cs = Vec::with_capacity(values.len());
        let mut prev = 0.0;
        for (&v, &c) in values.iter().zip(cum) {
            let p = c - prev;
            if p > 0.0 {
                vs.push(v);
                ps.push(p);
                cs.push(c);
            }
            prev = c;
        }
        *cs.last_mut().unwrap() = 1.0;
        Self {
            values: vs,
            probs: ps,
            cum: cs,
        }
    }

    /// Sorted support values.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Atom masses, aligned with [`values`](Self::values).
    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    /// Cumulative masses `F(x_i)`; the last entry is exactly 1.
    pub fn cum(&self) -> &[f64] {
        &self.cum
    }

    /// Right-continuous quantile: `Q(p) = x_i` for `p` in `[F_{i-1}, F_i)`.
    /// Defined here for `p` in `[0, 1)`; 0 maps to the smallest value.
    pub(crate) fn quantile_unchecked(&self, p: f64) -> f64 {
        let idx = self.cum.partition_point(|&c| c <= p);
        self.values[idx.min(self.values.len() - 1)]
    }

    pub(crate) fn cdf(&self, x: f64) -> f64 {
        let n_le = self.values.partition_point(|&v| v <= x);
        if n_le == 0 {
            0.0
        } else {
            self.cum[n_le - 1]
        }
    }

    fn negate(&self) -> Self {
        let values: Vec<f64> = self.values.iter().rev().map(|&v| -v).collect();
        let probs: Vec<f64> = self.probs.iter().rev().copied().collect();
        let mut cum = Vec::with_capacity(probs.len());
        let mut acc = 0.0;
        for &p in &probs {
            acc += p;
            cum.push(acc);
        }
        *cum.last_mut().unwrap() = 1.0;
        Self { values, probs, cum }
    }

    fn expectation(&self) -> f64 {
        self.values
            .iter()
            .zip(&self.probs)
            .map(|(&v, &p)| v * p)
            .sum()
    }
}

/// `mu + sigma * Z` for a standard family member `Z`.
#[derive(Debug, Clone, PartialEq)]
pub struct LocationScaleDistribution {
    family: Family,
    mu: f64,
    sigma: f64,
}

impl LocationScaleDistribution {
    pub fn new(family: Family, mu: f64, sigma: f64) -> Result<Self> {
        if !mu.is_finite() || !sigma.is_finite() {
            return Err(DsdError::InvalidDistribution(
                "non-finite location or scale".into(),
            ));
        }
        if sigma < 0.0 {
            return Err(DsdError::InvalidDistribution(format!(
                "negative scale {sigma}"
            )));
        }
        if family == Family::Constant && sigma != 0.0 {
            return Err(DsdError::InvalidDistribution(
                "constant family requires zero scale".into(),
            ));
        }
        Ok(Self { family, mu, sigma })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    /// Standard-member quantile `G^{-1}(p)`, `p` in (0, 1).
    pub fn standard_quantile(family: Family, p: f64) -> f64 {
        match family {
            Family::Uniform => p,
            Family::Logistic => (p / (1.0 - p)).ln(),
            Family::Normal => special::normal_quantile(p),
            Family::Constant => 0.0,
        }
    }

    /// Standard-member CDF `G(z)`.
    pub fn standard_cdf(family: Family, z: f64) -> f64 {
        match family {
            Family::Uniform => z.clamp(0.0, 1.0),
            Family::Logistic => 1.0 / (1.0 + (-z).exp()),
            Family::Normal => special::normal_cdf(z),
            Family::Constant => {
                if z < 0.0 {
                    0.0
                } else {
                    1.0
                }
            }
        }
    }

    fn quantile_unchecked(&self, p: f64) -> f64 {
        if self.sigma == 0.0 {
            return self.mu;
        }
        self.mu + self.sigma * Self::standard_quantile(self.family, p)
    }

    fn cdf(&self, x: f64) -> f64 {
        if self.sigma == 0.0 {
            return if x < self.mu { 0.0 } else { 1.0 };
        }
        Self::standard_cdf(self.family, (x - self.mu) / self.sigma)
    }

    fn negate(&self) -> Self {
        match self.family {
            // -U[a, a+s] = U[-a-s, -a]; the symmetric families just flip mu.
            Family::Uniform => Self {
                family: Family::Uniform,
                mu: -(self.mu + self.sigma),
                sigma: self.sigma,
            },
            _ => Self {
                family: self.family,
                mu: -self.mu,
                sigma: self.sigma,
            },
        }
    }

    fn expectation(&self) -> f64 {
        match self.family {
            Family::Uniform => self.mu + 0.5 * self.sigma,
            _ => self.mu,
        }
    }
}

/// Any distribution the crate can compare.
#[derive(Debug, Clone, PartialEq)]
pub enum Distribution {
    Discrete(DiscreteDistribution),
    LocationScale(LocationScaleDistribution),
}

impl Distribution {
    pub fn discrete(values: &[f64], probs: &[f64]) -> Result<Self> {
        Ok(Self::Discrete(DiscreteDistribution::new(values, probs)?))
    }

    /// Discrete with uniform masses.
    pub fn discrete_uniform(values: &[f64]) -> Result<Self> {
        Ok(Self::Discrete(DiscreteDistribution::uniform_on(values)?))
    }

    pub fn uniform(a: f64, b: f64) -> Result<Self> {
        if !(b >= a) {
            return Err(DsdError::InvalidDistribution(format!(
                "uniform endpoints out of order: a={a}, b={b}"
            )));
        }
        Ok(Self::LocationScale(LocationScaleDistribution::new(
            Family::Uniform,
            a,
            b - a,
        )?))
    }

    pub fn logistic(mu: f64, sigma: f64) -> Result<Self> {
        Ok(Self::LocationScale(LocationScaleDistribution::new(
            Family::Logistic,
            mu,
            sigma,
        )?))
    }

    pub fn normal(mu: f64, sigma: f64) -> Result<Self> {
        Ok(Self::LocationScale(LocationScaleDistribution::new(
            Family::Normal,
            mu,
            sigma,
        )?))
    }

    pub fn constant(c: f64) -> Result<Self> {
        Ok(Self::LocationScale(LocationScaleDistribution::new(
            Family::Constant,
            c,
            0.0,
        )?))
    }

    /// Right-continuous quantile at `p` in the open interval (0, 1).
    pub fn quantile(&self, p: f64) -> Result<f64> {
        if !(p > 0.0 && p < 1.0) {
            return Err(DsdError::Domain(format!(
                "quantile probability {p} outside (0, 1)"
            )));
        }
        Ok(self.quantile_unchecked(p))
    }

    /// Quantile without the domain check; accepts `p` in `[0, 1)`.
    pub(crate) fn quantile_unchecked(&self, p: f64) -> f64 {
        match self {
            Self::Discrete(d) => d.quantile_unchecked(p),
            Self::LocationScale(ls) => ls.quantile_unchecked(p),
        }
    }

    /// CDF at `x`; right-continuous, valued in [0, 1].
    pub fn cdf(&self, x: f64) -> f64 {
        match self {
            Self::Discrete(d) => d.cdf(x),
            Self::LocationScale(ls) => ls.cdf(x),
        }
    }

    /// Distribution of `-X`.
    pub fn negate(&self) -> Self {
        match self {
            Self::Discrete(d) => Self::Discrete(d.negate()),
            Self::LocationScale(ls) => Self::LocationScale(ls.negate()),
        }
    }

    /// Mean of the distribution.
    pub fn expectation(&self) -> f64 {
        match self {
            Self::Discrete(d) => d.expectation(),
            Self::LocationScale(ls) => ls.expectation(),
        }
    }

    /// Distribution of the sample maximum or minimum of `k` iid copies.
    ///
    /// Exact transform on cumulative masses; only defined for distributions
    /// with an exact discrete representation (atoms or a point mass).
    pub fn order_statistic_extreme(&self, k: u32, which: Extreme) -> Result<Self> {
        if k < 1 {
            return Err(DsdError::Domain("sample size k must be at least 1".into()));
        }
        let d = self.as_discrete().ok_or_else(|| {
            DsdError::Unsupported(
                "extreme order statistics need a discrete distribution".into(),
            )
        })?;
        let cum: Vec<f64> = match which {
            Extreme::Max => d.cum.iter().map(|&c| c.powi(k as i32)).collect(),
            Extreme::Min => d
                .cum
                .iter()
                .map(|&c| 1.0 - (1.0 - c).powi(k as i32))
                .collect(),
        };
        Ok(Self::Discrete(DiscreteDistribution::from_cum(
            &d.values, &cum,
        )))
    }

    /// Exact discrete view: the atoms themselves, or a single atom for a
    /// degenerate (zero-scale) location-scale member.
    pub fn as_discrete(&self) -> Option<Cow<'_, DiscreteDistribution>> {
        match self {
            Self::Discrete(d) => Some(Cow::Borrowed(d)),
            Self::LocationScale(ls) if ls.sigma == 0.0 => Some(Cow::Owned(DiscreteDistribution {
                values: vec![ls.mu],
                probs: vec![1.0],
                cum: vec![1.0],
            })),
            _ => None,
        }
    }

    /// Infimum and supremum of the support.
    pub fn support(&self) -> (f64, f64) {
        match self {
            Self::Discrete(d) => (d.values[0], *d.values.last().unwrap()),
            Self::LocationScale(ls) => {
                if ls.sigma == 0.0 {
                    (ls.mu, ls.mu)
                } else {
                    match ls.family {
                        Family::Uniform => (ls.mu, ls.mu + ls.sigma),
                        Family::Constant => (ls.mu, ls.mu),
                        Family::Logistic | Family::Normal => {
                            (f64::NEG_INFINITY, f64::INFINITY)
                        }
                    }
                }
            }
        }
    }

    // Logarithmic quantile envelope: |Q(t)| <= a + b ln(1/t) for t <= 1/2 and
    // |Q(t)| <= a + b ln(1/(1-t)) for t >= 1/2. Used to bound quadrature
    // tails. For the logistic, |G^{-1}(t)| <= ln(1/t) on (0, 1/2]; for the
    // normal, |G^{-1}(t)| <= sqrt(2 ln(1/t)) <= 1/2 + ln(1/t).
    pub(crate) fn log_envelope(&self) -> (f64, f64) {
        match self {
            Self::Discrete(d) => {
                let m = d
                    .values
                    .iter()
                    .fold(0.0f64, |acc, &v| acc.max(v.abs()));
                (m, 0.0)
            }
            Self::LocationScale(ls) => match ls.family {
                Family::Uniform => (ls.mu.abs() + ls.sigma, 0.0),
                Family::Constant => (ls.mu.abs(), 0.0),
                Family::Logistic => (ls.mu.abs(), ls.sigma),
                Family::Normal => (ls.mu.abs() + 0.5 * ls.sigma, ls.sigma),
            },
        }
    }
}

// ---------------------------------------------------------------------------
// JSON specs
// ---------------------------------------------------------------------------

/// Serialized form of a distribution. The `type` tag selects the family:
/// `discrete`, `uniform`, `logistic`, `normal`, or `constant`. Families
/// without a finite mean are deliberately absent.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum DistributionSpec {
    Discrete {
        values: Vec<f64>,
        /// Omitted means uniform masses.
        #[serde(skip_serializing_if = "Option::is_none")]
        probs: Option<Vec<f64>>,
    },
    Uniform {
        a: f64,
        b: f64,
    },
    Logistic {
        mu: f64,
        sigma: f64,
    },
    Normal {
        mu: f64,
        sigma: f64,
    },
    Constant {
        c: f64,
    },
}

impl Distribution {
    /// Parses a JSON spec such as `{"type":"uniform","a":0,"b":1}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let spec: DistributionSpec =
            serde_json::from_str(text).map_err(|e| DsdError::Spec(e.to_string()))?;
        Self::from_spec(&spec)
    }

    pub fn from_spec(spec: &DistributionSpec) -> Result<Self> {
        match spec {
            DistributionSpec::Discrete { values, probs } => match probs {
                Some(p) => Self::discrete(values, p),
                None => Self::discrete_uniform(values),
            },
            DistributionSpec::Uniform { a, b } => Self::uniform(*a, *b),
            DistributionSpec::Logistic { mu, sigma } => Self::logistic(*mu, *sigma),
            DistributionSpec::Normal { mu, sigma } => Self::normal(*mu, *sigma),
            DistributionSpec::Constant { c } => Self::constant(*c),
        }
    }

    /// Canonical spec for this distribution; re-parsing it reproduces the
    /// same quantile function.
    pub fn to_spec(&self) -> DistributionSpec {
        match self {
            Self::Discrete(d) => DistributionSpec::Discrete {
                values: d.values.clone(),
                probs: Some(d.probs.clone()),
            },
            Self::LocationScale(ls) => match ls.family {
                Family::Uniform => DistributionSpec::Uniform {
                    a: ls.mu,
                    b: ls.mu + ls.sigma,
                },
                Family::Logistic => DistributionSpec::Logistic {
                    mu: ls.mu,
                    sigma: ls.sigma,
                },
                Family::Normal => DistributionSpec::Normal {
                    mu: ls.mu,
                    sigma: ls.sigma,
                },
                Family::Constant => DistributionSpec::Constant { c: ls.mu },
            },
        }
    }

    /// Canonical JSON text of [`to_spec`](Self::to_spec).
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_spec()).expect("spec serialization cannot fail")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ex2_y() -> Distribution {
        Distribution::discrete_uniform(&[0.0, 2.0, 4.0, 5.0]).unwrap()
    }

    #[test]
    fn constructor_sorts_and_merges() {
        let d = Distribution::discrete(&[5.0, 2.0, 2.0], &[0.5, 0.3, 0.2]).unwrap();
        let Distribution::Discrete(d) = &d else {
            unreachable!()
        };
        assert_eq!(d.values(), &[2.0, 5.0]);
        assert_eq!(d.probs(), &[0.5, 0.5]);
        assert_eq!(d.cum(), &[0.5, 1.0]);
    }

    #[test]
    fn constructor_rejects_bad_input() {
        assert!(Distribution::discrete(&[], &[]).is_err());
        assert!(Distribution::discrete(&[1.0], &[0.5]).is_err());
        assert!(Distribution::discrete(&[1.0, 2.0], &[0.5, -0.5]).is_err());
        assert!(Distribution::discrete(&[1.0, 2.0], &[0.6, 0.6]).is_err());
        assert!(Distribution::discrete(&[f64::NAN, 2.0], &[0.5, 0.5]).is_err());
        assert!(Distribution::uniform(1.0, 0.0).is_err());
        assert!(LocationScaleDistribution::new(Family::Normal, 0.0, -1.0).is_err());
    }

    #[test]
    fn quantile_is_right_continuous_at_breakpoints() {
        let y = ex2_y();
        assert_eq!(y.quantile(0.25).unwrap(), 2.0);
        assert_eq!(y.quantile(0.2499999).unwrap(), 0.0);
        assert_eq!(y.quantile(0.30).unwrap(), 2.0);
        assert_eq!(y.quantile(0.75).unwrap(), 5.0);
        assert_eq!(y.quantile(0.9999).unwrap(), 5.0);
    }

    #[test]
    fn quantile_rejects_closed_endpoints() {
        let y = ex2_y();
        assert!(y.quantile(0.0).is_err());
        assert!(y.quantile(1.0).is_err());
        assert!(y.quantile(-0.1).is_err());
    }

    #[test]
    fn discrete_cdf_steps() {
        let y = ex2_y();
        assert_eq!(y.cdf(-1.0), 0.0);
        assert_eq!(y.cdf(0.0), 0.25);
        assert_eq!(y.cdf(1.9), 0.25);
        assert_eq!(y.cdf(2.0), 0.5);
        assert_eq!(y.cdf(5.0), 1.0);
        assert_eq!(y.cdf(9.0), 1.0);
    }

    #[test]
    fn logistic_quantile_closed_form() {
        let x = Distribution::logistic(0.0, 1.0).unwrap();
        // Q(3/4) = ln 3 for the standard logistic.
        assert!((x.quantile(0.75).unwrap() - 3.0f64.ln()).abs() < 1e-15);
        assert_eq!(x.quantile(0.5).unwrap(), 0.0);
        let shifted = Distribution::logistic(2.0, 3.0).unwrap();
        assert!((shifted.quantile(0.75).unwrap() - (2.0 + 3.0 * 3.0f64.ln())).abs() < 1e-14);
    }

    #[test]
    fn uniform_quantile_and_cdf_are_affine() {
        let u = Distribution::uniform(-1.0, 3.0).unwrap();
        assert!((u.quantile(0.25).unwrap() - 0.0).abs() < 1e-15);
        assert!((u.cdf(1.0) - 0.5).abs() < 1e-15);
        assert_eq!(u.cdf(-2.0), 0.0);
        assert_eq!(u.cdf(4.0), 1.0);
        assert!((u.expectation() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn normal_quantile_and_cdf_agree() {
        let n = Distribution::normal(1.0, 2.0).unwrap();
        for p in [0.01, 0.2, 0.5, 0.8, 0.99] {
            let q = n.quantile(p).unwrap();
            assert!((n.cdf(q) - p).abs() < 1e-12);
        }
    }

    #[test]
    fn constant_is_a_step() {
        let c = Distribution::constant(0.8).unwrap();
        assert_eq!(c.quantile(0.001).unwrap(), 0.8);
        assert_eq!(c.quantile(0.999).unwrap(), 0.8);
        assert_eq!(c.cdf(0.79), 0.0);
        assert_eq!(c.cdf(0.8), 1.0);
        assert_eq!(c.expectation(), 0.8);
    }

    #[test]
    fn negate_mirrors_quantiles() {
        let y = ex2_y();
        let ny = y.negate();
        // Q_{-Y}(p) = -Q_Y(1-p) away from breakpoints.
        for p in [0.1, 0.3, 0.6, 0.9] {
            assert_eq!(
                ny.quantile(p).unwrap(),
                -y.quantile(1.0 - p).unwrap(),
                "at p={p}"
            );
        }
        assert_eq!(ny.negate(), y);

        let u = Distribution::uniform(0.25, 0.75).unwrap();
        let nu = u.negate();
        assert!((nu.quantile(0.5).unwrap() + 0.5).abs() < 1e-15);
        assert!((nu.support().0 + 0.75).abs() < 1e-15);
    }

    #[test]
    fn fair_coin_extremes_are_exact() {
        let coin = Distribution::discrete_uniform(&[0.0, 1.0]).unwrap();
        let max2 = coin.order_statistic_extreme(2, Extreme::Max).unwrap();
        let Distribution::Discrete(d) = &max2 else {
            unreachable!()
        };
        assert_eq!(d.values(), &[0.0, 1.0]);
        assert_eq!(d.probs(), &[0.25, 0.75]);

        let min2 = coin.order_statistic_extreme(2, Extreme::Min).unwrap();
        let Distribution::Discrete(d) = &min2 else {
            unreachable!()
        };
        assert_eq!(d.probs(), &[0.75, 0.25]);

        let same = coin.order_statistic_extreme(1, Extreme::Max).unwrap();
        assert_eq!(&same, &coin);
    }

    #[test]
    fn extremes_reject_continuous_and_k_zero() {
        let n = Distribution::normal(0.0, 1.0).unwrap();
        assert!(n.order_statistic_extreme(2, Extreme::Max).is_err());
        let coin = Distribution::discrete_uniform(&[0.0, 1.0]).unwrap();
        assert!(coin.order_statistic_extreme(0, Extreme::Max).is_err());
        // A constant has an exact discrete view, so the transform is allowed.
        let c = Distribution::constant(2.0).unwrap();
        assert!(c.order_statistic_extreme(3, Extreme::Min).is_ok());
    }

    #[test]
    fn extreme_expectations_are_monotone_in_k() {
        let d = Distribution::discrete(&[-1.0, 0.5, 2.0, 7.0], &[0.1, 0.4, 0.3, 0.2]).unwrap();
        let mut prev_max = f64::NEG_INFINITY;
        let mut prev_min = f64::INFINITY;
        for k in 1..=6 {
            let emax = d
                .order_statistic_extreme(k, Extreme::Max)
                .unwrap()
                .expectation();
            let emin = d
                .order_statistic_extreme(k, Extreme::Min)
                .unwrap()
                .expectation();
            assert!(emax >= prev_max - 1e-12, "max expectation dipped at k={k}");
            assert!(emin <= prev_min + 1e-12, "min expectation rose at k={k}");
            prev_max = emax;
            prev_min = emin;
        }
    }

    #[test]
    fn json_specs_parse() {
        let d = Distribution::from_json(r#"{"type":"discrete","values":[1,3,6],"probs":[0.5,0.25,0.25]}"#)
            .unwrap();
        assert_eq!(d.quantile(0.6).unwrap(), 3.0);

        // probs omitted -> uniform masses
        let d = Distribution::from_json(r#"{"type":"discrete","values":[0,2,4,5]}"#).unwrap();
        assert_eq!(d.cdf(2.0), 0.5);

        let u = Distribution::from_json(r#"{"type":"uniform","a":0,"b":1}"#).unwrap();
        assert!((u.quantile(0.3).unwrap() - 0.3).abs() < 1e-15);

        let l = Distribution::from_json(r#"{"type":"logistic","mu":0.1,"sigma":1.0}"#).unwrap();
        assert!((l.expectation() - 0.1).abs() < 1e-15);

        let c = Distribution::from_json(r#"{"type":"constant","c":0.8}"#).unwrap();
        assert_eq!(c.expectation(), 0.8);
    }

    #[test]
    fn json_rejects_unknown_and_heavy_tailed_types() {
        let err = Distribution::from_json(r#"{"type":"cauchy","x0":0,"gamma":1}"#).unwrap_err();
        assert!(err.to_string().contains("cauchy"), "got: {err}");
        assert!(Distribution::from_json(r#"{"type":"normal","mu":0}"#)
            .unwrap_err()
            .to_string()
            .contains("sigma"));
        assert!(Distribution::from_json("not json").is_err());
    }

    #[test]
    fn json_round_trip_preserves_quantiles() {
        let dists = [
            Distribution::discrete(&[1.0, 3.0, 6.0], &[0.5, 0.25, 0.25]).unwrap(),
            Distribution::uniform(-2.0, 5.0).unwrap(),
            Distribution::logistic(0.3, 2.0).unwrap(),
            Distribution::normal(-1.0, 0.5).unwrap(),
            Distribution::constant(3.25).unwrap(),
        ];
        for d in &dists {
            let back = Distribution::from_json(&d.to_json()).unwrap();
            for i in 1..100 {
                let p = i as f64 / 100.0;
                assert_eq!(
                    back.quantile(p).unwrap(),
                    d.quantile(p).unwrap(),
                    "mismatch at p={p} for {:?}",
                    d
                );
            }
        }
    }

    mod proptests {
        use super::*;
        use proptest::prelude::*;

        fn arb_discrete() -> impl Strategy<Value = Distribution> {
            (2usize..8)
                .prop_flat_map(|n| {
                    (
                        proptest::collection::vec(-50.0f64..50.0, n),
                        proptest::collection::vec(0.05f64..1.0, n),
                    )
                })
                .prop_map(|(values, weights)| {
                    let total: f64 = weights.iter().sum();
                    let probs: Vec<f64> = weights.iter().map(|w| w / total).collect();
                    Distribution::discrete(&values, &probs).unwrap()
                })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(300))]

            #[test]
            fn quantile_is_monotone(d in arb_discrete(), p1 in 0.001f64..0.999, p2 in 0.001f64..0.999) {
                let (lo, hi) = if p1 <= p2 { (p1, p2) } else { (p2, p1) };
                prop_assert!(d.quantile(lo).unwrap() <= d.quantile(hi).unwrap());
            }

            #[test]
            fn galois_consistency(d in arb_discrete(), p in 0.001f64..0.999) {
                // F(Q(p)) >= p, and Q is the generalized inverse: for any x,
                // p <= F(x) implies Q(p) <= x.
                let q = d.quantile(p).unwrap();
                prop_assert!(d.cdf(q) >= p);
            }

            #[test]
            fn negation_is_an_involution(d in arb_discrete(), p in 0.001f64..0.999) {
                let dd = d.negate().negate();
                prop_assert_eq!(dd.quantile(p).unwrap(), d.quantile(p).unwrap());
            }

            #[test]
            fn cdf_bounds(d in arb_discrete(), x in -100.0f64..100.0) {
                let f = d.cdf(x);
                prop_assert!((0.0..=1.0).contains(&f));
            }
        }
    }
}
