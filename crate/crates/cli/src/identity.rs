//! The registry of named identity checks and their exact evaluation.
//!
//! Every check compares an enumerated left side against an independent right
//! side (a closed form, a reconstruction, or a fitted interpolant), row by
//! row in exact rational arithmetic. Registered identities:
//!
//! - `normalization`: sum of `2^(n - len) * count^2` over all strict
//!   partitions of `n` equals `n!`.
//! - `skew-hook`: the weighted skew sum of `1/H` over `n`-box extensions of
//!   `mu` equals `1/H(mu)` for every `n`.
//! - `content-binomial`: the weighted skew sum of
//!   `sum C(content + k - 1, 2k) / H` from the empty shape equals
//!   `2^k / (k+1)! * C(n, k+1)`.
//! - `k1-skew`: the first-order content sum deviation from `mu` equals
//!   `C(n, 2) + n * |mu|`.
//! - `k2-skew`: the second-order analogue with right side
//!   `(2/3) C(n,3) + (2/3)|mu| C(n,2) + (1/12)(q_2(mu) + |mu|^2 - 2|mu|) n`.
//! - `poly-detect`: fits the weighted skew sums of a power-sum function on
//!   `n = lo..hi-1` by finite differences and re-predicts the enumerated
//!   value at `hi`.
//! - `pf-reconstruction`: kernel moments at seeded random points equal their
//!   expansion in power sums.

use std::collections::BTreeMap;
use std::time::Instant;

use num::{BigUint, One, Zero};

use hookcontent_core::corners;
use hookcontent_core::diffop::{
    from_fn, weighted_skew_sum, PartitionFunction, PowerSumSpec, ReciprocalHook,
};
use hookcontent_core::parallel;
use hookcontent_core::partition::{strict_partitions, Partition, StrictPartition};
use hookcontent_core::poly::{detect_polynomial, Detection};
use hookcontent_core::rational::{binomial, factorial, int, ratio, Rational};
use hookcontent_core::series::{moment_expansion, reconstruct_moment, seeded_points};
use hookcontent_core::tableaux::count_standard;

use crate::report::{IdentityReport, ReportRow};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdentityKind {
    Normalization,
    SkewHook,
    ContentBinomial,
    K1Skew,
    K2Skew,
    PolyDetect,
    PfReconstruction,
}

impl IdentityKind {
    pub const ALL: [IdentityKind; 7] = [
        IdentityKind::Normalization,
        IdentityKind::SkewHook,
        IdentityKind::ContentBinomial,
        IdentityKind::K1Skew,
        IdentityKind::K2Skew,
        IdentityKind::PolyDetect,
        IdentityKind::PfReconstruction,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityKind::Normalization => "normalization",
            IdentityKind::SkewHook => "skew-hook",
            IdentityKind::ContentBinomial => "content-binomial",
            IdentityKind::K1Skew => "k1-skew",
            IdentityKind::K2Skew => "k2-skew",
            IdentityKind::PolyDetect => "poly-detect",
            IdentityKind::PfReconstruction => "pf-reconstruction",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|kind| kind.name() == name)
    }

    pub fn registered_names() -> String {
        Self::ALL
            .iter()
            .map(|kind| kind.name())
            .collect::<Vec<_>>()
            .join(", ")
    }
}

/// One fully-parameterized check. Fields irrelevant to the kind keep their
/// defaults and are omitted from reports.
#[derive(Clone, Debug)]
pub struct IdentityCheck {
    pub kind: IdentityKind,
    pub mu: StrictPartition,
    pub k: u32,
    pub exponents: Partition,
    pub nu: Partition,
    /// Inclusive size range. For `poly-detect` the fit uses `n_lo..n_hi - 1`
    /// and the `n_hi` row is the extrapolation holdout.
    pub n_lo: u64,
    pub n_hi: u64,
    pub seed: u64,
    pub count: usize,
    pub m_max: usize,
    pub k_max: u32,
}

impl IdentityCheck {
    /// The default desk-scale check for `kind`.
    pub fn new(kind: IdentityKind) -> Self {
        let mut check = IdentityCheck {
            kind,
            mu: StrictPartition::empty(),
            k: 2,
            exponents: "1".parse().expect("valid default"),
            nu: Partition::empty(),
            n_lo: 0,
            n_hi: 9,
            seed: 112358,
            count: 40,
            m_max: 4,
            k_max: 6,
        };
        match kind {
            IdentityKind::Normalization => check.n_hi = 18,
            IdentityKind::SkewHook | IdentityKind::K1Skew | IdentityKind::K2Skew => {
                check.mu = "2,1".parse().expect("valid default");
            }
            IdentityKind::ContentBinomial => check.n_hi = 14,
            IdentityKind::PolyDetect => check.n_hi = 12,
            IdentityKind::PfReconstruction => {}
        }
        check
    }

    /// Applies one textual `key = value` override; used by config files.
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), String> {
        match key {
            "mu" => self.mu = value.parse().map_err(|e| format!("bad mu: {e}"))?,
            "k" => self.k = value.parse().map_err(|e| format!("bad k: {e}"))?,
            "exponents" => {
                self.exponents = value.parse().map_err(|e| format!("bad exponents: {e}"))?
            }
            "nu" => self.nu = value.parse().map_err(|e| format!("bad nu: {e}"))?,
            "n" => {
                let (lo, hi) = parse_range(value)?;
                self.n_lo = lo;
                self.n_hi = hi;
            }
            "seed" => self.seed = value.parse().map_err(|e| format!("bad seed: {e}"))?,
            "count" => self.count = value.parse().map_err(|e| format!("bad count: {e}"))?,
            "m-max" => self.m_max = value.parse().map_err(|e| format!("bad m-max: {e}"))?,
            "k-max" => self.k_max = value.parse().map_err(|e| format!("bad k-max: {e}"))?,
            other => return Err(format!("unknown key {other:?}")),
        }
        Ok(())
    }

    /// The parameters relevant to this check, as report-ready strings.
    pub fn params(&self) -> BTreeMap<String, String> {
        let mut params = BTreeMap::new();
        let range = format!("{}..{}", self.n_lo, self.n_hi);
        match self.kind {
            IdentityKind::Normalization => {
                params.insert("n".into(), range);
            }
            IdentityKind::SkewHook | IdentityKind::K1Skew | IdentityKind::K2Skew => {
                params.insert("mu".into(), self.mu.to_string());
                params.insert("n".into(), range);
            }
            IdentityKind::ContentBinomial => {
                params.insert("k".into(), self.k.to_string());
                params.insert("n".into(), range);
            }
            IdentityKind::PolyDetect => {
                params.insert("exponents".into(), self.exponents.to_string());
                params.insert("nu".into(), self.nu.to_string());
                params.insert("mu".into(), self.mu.to_string());
                params.insert("n".into(), range);
            }
            IdentityKind::PfReconstruction => {
                params.insert("seed".into(), self.seed.to_string());
                params.insert("count".into(), self.count.to_string());
                params.insert("m-max".into(), self.m_max.to_string());
                params.insert("k-max".into(), self.k_max.to_string());
            }
        }
        params
    }
}

/// One default check per registered identity, in registry order.
pub fn default_suite() -> Vec<IdentityCheck> {
    IdentityKind::ALL.into_iter().map(IdentityCheck::new).collect()
}

/// Parses an inclusive range `lo..hi`, or a bare upper bound meaning `0..hi`.
pub fn parse_range(text: &str) -> Result<(u64, u64), String> {
    let text = text.trim();
    let (lo, hi) = match text.split_once("..") {
        Some((lo, hi)) => (
            lo.trim()
                .parse::<u64>()
                .map_err(|_| format!("bad range start {lo:?}"))?,
            hi.trim()
                .parse::<u64>()
                .map_err(|_| format!("bad range end {hi:?}"))?,
        ),
        None => (
            0,
            text.parse::<u64>()
                .map_err(|_| format!("bad range {text:?}"))?,
        ),
    };
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok((lo, hi))
}

/// Runs one check to an [`IdentityReport`]. All comparisons are exact; the
/// elapsed time is recorded but never serialized into the report body.
pub fn run_check(check: &IdentityCheck) -> IdentityReport {
    let start = Instant::now();
    let rows = match check.kind {
        IdentityKind::Normalization => rows_normalization(check),
        IdentityKind::SkewHook => rows_skew_hook(check),
        IdentityKind::ContentBinomial => rows_content_binomial(check),
        IdentityKind::K1Skew => rows_k1(check),
        IdentityKind::K2Skew => rows_k2(check),
        IdentityKind::PolyDetect => rows_poly_detect(check),
        IdentityKind::PfReconstruction => rows_pf_reconstruction(check),
    };
    let pass = rows.iter().all(|row| row.pass);
    IdentityReport {
        identity: check.kind.name().to_string(),
        params: check.params(),
        rows,
        pass,
        elapsed: start.elapsed(),
    }
}

fn row(n: u64, lhs: Rational, rhs: Rational) -> ReportRow {
    ReportRow {
        n,
        pass: lhs == rhs,
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
    }
}

fn rows_normalization(check: &IdentityCheck) -> Vec<ReportRow> {
    (check.n_lo..=check.n_hi)
        .map(|n| {
            let lambdas = strict_partitions(n);
            let lhs = parallel::sum_with(&lambdas, |lambda| {
                let count = count_standard(lambda);
                let term = (&count * &count) << (n - lambda.len() as u64);
                Rational::from_integer(term.into())
            });
            let rhs = Rational::from_integer(factorial(n).into());
            row(n, lhs, rhs)
        })
        .collect()
}

fn rows_skew_hook(check: &IdentityCheck) -> Vec<ReportRow> {
    let rhs = Rational::one() / Rational::from_integer(check.mu.hook_product().into());
    (check.n_lo..=check.n_hi)
        .map(|n| row(n, weighted_skew_sum(&ReciprocalHook, &check.mu, n), rhs.clone()))
        .collect()
}

fn rows_content_binomial(check: &IdentityCheck) -> Vec<ReportRow> {
    let k = check.k;
    let g = from_fn("content-binomial-sum/H", move |lambda| {
        Rational::new(
            lambda.content_binomial_sum(k).into(),
            lambda.hook_product().into(),
        )
    });
    let empty = StrictPartition::empty();
    (check.n_lo..=check.n_hi)
        .map(|n| {
            let lhs = weighted_skew_sum(&g, &empty, n);
            let rhs = Rational::new(
                (BigUint::from(2u32).pow(k) * binomial(n, u64::from(k) + 1)).into(),
                factorial(u64::from(k) + 1).into(),
            );
            row(n, lhs, rhs)
        })
        .collect()
}

/// `H(mu) * (deviation of a content statistic from its value at mu) / H`.
fn deviation_function(
    mu: &StrictPartition,
    statistic: impl Fn(&StrictPartition) -> BigUint + Sync,
) -> impl PartitionFunction {
    let h_mu = Rational::from_integer(mu.hook_product().into());
    let at_mu = Rational::from_integer(statistic(mu).into());
    from_fn("content-deviation", move |lambda| {
        let here = Rational::from_integer(statistic(lambda).into());
        (here - &at_mu) * &h_mu / Rational::from_integer(lambda.hook_product().into())
    })
}

fn rows_k1(check: &IdentityCheck) -> Vec<ReportRow> {
    let g = deviation_function(&check.mu, |lambda| lambda.content_power_sum(1));
    let mu_size = int(check.mu.size() as i64);
    (check.n_lo..=check.n_hi)
        .map(|n| {
            let lhs = weighted_skew_sum(&g, &check.mu, n);
            let rhs =
                Rational::from_integer(binomial(n, 2).into()) + int(n as i64) * &mu_size;
            row(n, lhs, rhs)
        })
        .collect()
}

fn rows_k2(check: &IdentityCheck) -> Vec<ReportRow> {
    let g = deviation_function(&check.mu, |lambda| lambda.content_binomial_sum(2));
    let mu_size = int(check.mu.size() as i64);
    let q2_mu = corners::power_sum(&check.mu, 2);
    let linear_coefficient =
        ratio(1, 12) * (&q2_mu + &mu_size * &mu_size - int(2) * &mu_size);
    (check.n_lo..=check.n_hi)
        .map(|n| {
            let lhs = weighted_skew_sum(&g, &check.mu, n);
            let rhs = ratio(2, 3) * Rational::from_integer(binomial(n, 3).into())
                + ratio(2, 3) * &mu_size * Rational::from_integer(binomial(n, 2).into())
                + &linear_coefficient * int(n as i64);
            row(n, lhs, rhs)
        })
        .collect()
}

fn rows_poly_detect(check: &IdentityCheck) -> Vec<ReportRow> {
    let g = PowerSumSpec::monomial(check.exponents.clone())
        .with_corner_factor(check.nu.clone());
    let values: Vec<Rational> = (check.n_lo..=check.n_hi)
        .map(|n| weighted_skew_sum(&g, &check.mu, n))
        .collect();
    let sample = &values[..values.len().saturating_sub(1)];

    match detect_polynomial(sample) {
        Ok(Detection::Polynomial(fit)) => (check.n_lo..=check.n_hi)
            .zip(&values)
            .map(|(n, value)| row(n, value.clone(), fit.evaluate(n - check.n_lo)))
            .collect(),
        // No usable fit: report the enumerated values against no prediction.
        Ok(Detection::NotPolynomial { .. }) | Err(_) => (check.n_lo..=check.n_hi)
            .zip(&values)
            .map(|(n, value)| ReportRow {
                n,
                lhs: value.to_string(),
                rhs: "-".to_string(),
                pass: false,
            })
            .collect(),
    }
}

fn rows_pf_reconstruction(check: &IdentityCheck) -> Vec<ReportRow> {
    let points = seeded_points(check.seed, check.count, check.m_max);
    let tables: Vec<_> = (0..=check.k_max)
        .map(|k| moment_expansion(k as usize))
        .collect();
    points
        .iter()
        .enumerate()
        .map(|(index, point)| {
            let mut all_orders_match = true;
            let mut lhs = Rational::zero();
            let mut rhs = Rational::zero();
            for k in 0..=check.k_max {
                let moment = point.moment(k);
                let rebuilt = reconstruct_moment(&tables[k as usize], point);
                all_orders_match &= moment == rebuilt;
                lhs += moment;
                rhs += rebuilt;
            }
            ReportRow {
                n: index as u64,
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
                pass: all_orders_match,
            }
        })
        .collect()
}
