//! Exact-arithmetic verification of the energy inequality chain, partial
//! sums of the divergent series, and the lower-bound formula evaluator.
//!
//! The inequalities here are proof content, so every comparison runs in
//! arbitrary-precision rationals; floating point appears only where a value
//! is reported, never where one is decided.

use crate::error::{Error, Result};
use crate::points::PointSet;
use crate::search::{certified_lower_bound, SearchConfig};
use crate::set::NaturalSet;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;

/// Below this row index the row bound is decided by summing the row
/// exactly; above it, by the per-term certificate. Both routes are exact.
const DIRECT_ROW_LIMIT: u64 = 128;

fn ratio(num: u64, den: u64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Sums rationals pairwise to keep intermediate numerators balanced.
fn pairwise_sum(mut terms: Vec<BigRational>) -> BigRational {
    if terms.is_empty() {
        return BigRational::zero();
    }
    while terms.len() > 1 {
        let mut next = Vec::with_capacity(terms.len().div_ceil(2));
        let mut iter = terms.into_iter();
        while let Some(first) = iter.next() {
            match iter.next() {
                Some(second) => next.push(first + second),
                None => next.push(first),
            }
        }
        terms = next;
    }
    terms.pop().expect("nonempty")
}

/// Neumaier-compensated floating-point sum.
fn compensated_sum(values: impl Iterator<Item = f64>) -> f64 {
    let mut sum = 0.0f64;
    let mut compensation = 0.0f64;
    for value in values {
        let t = sum + value;
        if sum.abs() >= value.abs() {
            compensation += (sum - t) + value;
        } else {
            compensation += (value - t) + sum;
        }
        sum = t;
    }
    sum + compensation
}

/// The denominator (a+m)^2 + m^2 of one energy term.
fn term_denominator(a: u64, m: u64) -> BigInt {
    let x = BigInt::from(a) + BigInt::from(m);
    let y = BigInt::from(m);
    &x * &x + &y * &y
}

/// The energy of one band row truncated at depth a:
/// sum over m = 1..a of 1/((a+m)^2 + m^2), exact.
pub fn row_energy(a: u64) -> BigRational {
    let terms: Vec<BigRational> = (1..=a)
        .map(|m| BigRational::new(BigInt::one(), term_denominator(a, m)))
        .collect();
    pairwise_sum(terms)
}

/// How row_energy(a) compares to 1/(5a), decided exactly.
///
/// Small rows are summed outright. For large rows the per-term route
/// decides: every denominator (a+m)^2 + m^2 is at most 5a^2 (strictly below
/// it for m < a), so the row dominates a * 1/(5a^2) = 1/(5a), strictly
/// unless a = 1 leaves the single tight term.
fn row_bound_ordering(a: u64) -> Ordering {
    assert!(a >= 1, "row index must be at least 1");
    if a <= DIRECT_ROW_LIMIT {
        return row_energy(a).cmp(&ratio(1, 5 * a));
    }
    let mut any_strict = false;
    for m in 1..=a {
        // (a+m)^2 + m^2 vs 5a^2 in 128-bit; desk-scale a never overflows.
        let q = match (a as u128 + m as u128).checked_pow(2) {
            Some(sq) => sq.checked_add((m as u128).pow(2)),
            None => None,
        };
        let bound = (a as u128).checked_pow(2).and_then(|sq| sq.checked_mul(5));
        let (q, bound) = match (q, bound) {
            (Some(q), Some(bound)) => (q, bound),
            // Out of 128-bit range: give up on the certificate and sum.
            _ => return row_energy(a).cmp(&ratio(1, 5 * a)),
        };
        match q.cmp(&bound) {
            Ordering::Less => any_strict = true,
            Ordering::Equal => {}
            Ordering::Greater => {
                // Cannot happen (m <= a), but never assume: fall back.
                return row_energy(a).cmp(&ratio(1, 5 * a));
            }
        }
    }
    if any_strict {
        Ordering::Greater
    } else {
        Ordering::Equal
    }
}

/// True for every a >= 1: row_energy(a) >= 1/(5a), exactly.
pub fn check_row_bound(a: u64) -> bool {
    row_bound_ordering(a) != Ordering::Less
}

/// True iff row_energy(a) equals 1/(5a) exactly; holds only at a = 1.
pub fn row_bound_is_equality(a: u64) -> bool {
    row_bound_ordering(a) == Ordering::Equal
}

/// Per-element entry of an energy report.
#[derive(Clone, Debug)]
pub struct EnergyRow {
    pub element: u64,
    /// row_energy(element), exact.
    pub row_sum: BigRational,
    /// 1/(5 * element), the proven floor of the row.
    pub lower_bound: BigRational,
}

/// Rowwise energy decomposition of a set's band.
#[derive(Clone, Debug)]
pub struct EnergyReport {
    /// Sum of all row sums, exact.
    pub total: BigRational,
    pub per_row: Vec<EnergyRow>,
}

impl EnergyReport {
    /// Builds the report, re-verifying row_sum >= lower_bound for every
    /// row; a violation aborts construction (it would refute a theorem).
    pub fn for_set(set: &NaturalSet) -> Result<Self> {
        let mut per_row = Vec::with_capacity(set.len());
        for element in set.iter() {
            let row_sum = row_energy(element);
            let lower_bound = ratio(1, 5 * element);
            if row_sum < lower_bound {
                return Err(Error::InvalidParameter(format!(
                    "row {element} violates its lower bound; this is a bug"
                )));
            }
            per_row.push(EnergyRow {
                element,
                row_sum,
                lower_bound,
            });
        }
        let total = pairwise_sum(per_row.iter().map(|row| row_sum_clone(row)).collect());
        Ok(Self { total, per_row })
    }
}

fn row_sum_clone(row: &EnergyRow) -> BigRational {
    row.row_sum.clone()
}

/// Cap on the point count for which `energy_partial` also carries the
/// exact rational value.
pub const EXACT_ENERGY_LIMIT: usize = 100_000;

/// The energy of a finite point set.
#[derive(Clone, Debug)]
pub struct EnergySum {
    /// Compensated double-precision value.
    pub double: f64,
    /// Exact value, present when the set has at most EXACT_ENERGY_LIMIT
    /// points.
    pub exact: Option<BigRational>,
    pub points: usize,
}

/// Sum over the set of 1/(x^2 + y^2).
pub fn energy_partial(points: &PointSet) -> EnergySum {
    let double = compensated_sum(points.iter().map(|(x, y)| {
        let d = (x as u128).pow(2) + (y as u128).pow(2);
        1.0 / (d as f64)
    }));
    let exact = (points.len() <= EXACT_ENERGY_LIMIT).then(|| {
        pairwise_sum(
            points
                .iter()
                .map(|(x, y)| {
                    let x = BigInt::from(x);
                    let y = BigInt::from(y);
                    BigRational::new(BigInt::one(), &x * &x + &y * &y)
                })
                .collect(),
        )
    });
    EnergySum {
        double,
        exact,
        points: points.len(),
    }
}

/// Sum over the set of 1/a, exact. The hypothesis quantity of the whole
/// subject, truncated to a finite set.
pub fn harmonic_partial(set: &NaturalSet) -> BigRational {
    pairwise_sum(set.iter().map(|a| ratio(1, a)).collect())
}

/// Parameters of the lower-bound formula N * exp(-c (log N)^(1/(k-1))).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundParams {
    k: u32,
    n: u64,
    c: f64,
}

impl BoundParams {
    pub fn new(k: u32, n: u64, c: f64) -> Result<Self> {
        if k < 3 {
            return Err(Error::ApLengthTooSmall(k));
        }
        if n < 2 {
            return Err(Error::InvalidParameter(format!(
                "bound formula needs n >= 2, got {n}"
            )));
        }
        if !(c > 0.0) || !c.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "bound constant must be a positive real, got {c}"
            )));
        }
        Ok(Self { k, n, c })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn c(&self) -> f64 {
        self.c
    }
}

/// The shrinking exponent -c (log N)^(1/(k-1)), natural log. At log N = 1
/// it is -c for every k.
fn shrink_exponent(k: u32, ln_n: f64, c: f64) -> f64 {
    -c * ln_n.powf(1.0 / (f64::from(k) - 1.0))
}

/// Evaluates N * exp(-c (log N)^(1/(k-1))) in double precision.
pub fn behrend_bound(params: &BoundParams) -> f64 {
    let n = params.n as f64;
    n * shrink_exponent(params.k, n.ln(), params.c).exp()
}

/// One row of the lifted lower-bound table.
#[derive(Clone, Debug)]
pub struct GridBoundRow {
    pub n: u64,
    /// r(2s-1, n), exact search value (a lower bound when not exact).
    pub ap_free_max: u64,
    /// r(2s-1, n) * n, the certified lower bound for r~(s, 2n).
    pub lifted_bound: u64,
    /// n^2 * exp(-c (log n)^(1/(2s-2))), the asymptotic shape of the bound.
    pub behrend_form: f64,
    /// False when the underlying search hit its node budget.
    pub exact: bool,
}

/// Tabulates the certified lower bound against its asymptotic form for each
/// requested n. Every lifted bound is produced by `certified_lower_bound`,
/// so each row is backed by a verified grid-free certificate.
pub fn grid_bound_table(
    s: u32,
    n_list: &[u64],
    c: f64,
    config: &SearchConfig,
) -> Result<Vec<GridBoundRow>> {
    if !(c > 0.0) || !c.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "bound constant must be a positive real, got {c}"
        )));
    }
    let k = s
        .checked_mul(2)
        .and_then(|v| v.checked_sub(1))
        .ok_or(Error::Overflow("2s - 1"))?;
    if k < 3 {
        return Err(Error::GridSizeTooSmall(s));
    }
    let mut rows = Vec::with_capacity(n_list.len());
    for &n in n_list {
        let bound = certified_lower_bound(s, n, config)?;
        let nf = n as f64;
        // (log 1)^e = 0: the shape degenerates to n^2 = 1 at n = 1.
        let behrend_form = nf * nf * shrink_exponent(k, nf.ln(), c).exp();
        rows.push(GridBoundRow {
            n,
            ap_free_max: bound.ap_free_set.len() as u64,
            lifted_bound: bound.bound,
            behrend_form,
            exact: bound.exact,
        });
    }
    Ok(rows)
}

/// Formats a rational as the explicit "p/q" wire form.
pub fn rational_string(value: &BigRational) -> String {
    format!("{}/{}", value.numer(), value.denom())
}

/// Relative gap |double - exact| / exact, for accuracy reporting.
pub fn relative_error(double: f64, exact: &BigRational) -> f64 {
    if exact.is_zero() {
        return if double == 0.0 { 0.0 } else { f64::INFINITY };
    }
    let double_rational = BigRational::from_float(double)
        .expect("finite double");
    let gap = (&double_rational - exact).abs() / exact.abs();
    gap.to_f64().unwrap_or(f64::INFINITY)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{greedy_ap_free, theta};

    #[test]
    fn row_energy_hand_values() {
        assert_eq!(row_energy(1), ratio(1, 5));
        assert_eq!(row_energy(2), ratio(3, 20));
        assert_eq!(
            row_energy(3),
            ratio(1, 17) + ratio(1, 29) + ratio(1, 45)
        );
        assert_eq!(row_energy(0), BigRational::zero());
    }

    #[test]
    fn row_bound_holds_with_equality_only_at_one() {
        assert!(check_row_bound(1));
        assert!(row_bound_is_equality(1));
        for a in [2, 3, 10, 100, 129, 5000, 10_000] {
            assert!(check_row_bound(a), "a={a}");
            assert!(!row_bound_is_equality(a), "a={a}");
        }
    }

    #[test]
    fn row_bound_routes_agree() {
        // The direct-sum route and the per-term certificate must give the
        // same ordering wherever both apply.
        for a in 1..=200u64 {
            let direct = row_energy(a).cmp(&ratio(1, 5 * a));
            assert_eq!(direct, row_bound_ordering(a), "a={a}");
        }
    }

    #[test]
    fn energy_partial_hand_values() {
        let single = PointSet::new(vec![(1, 1)]).unwrap();
        let sum = energy_partial(&single);
        assert_eq!(sum.exact.as_ref().unwrap(), &ratio(1, 2));

        let band = theta(&NaturalSet::new(vec![1]).unwrap(), 2).unwrap();
        let sum = energy_partial(&band);
        assert_eq!(sum.exact.as_ref().unwrap(), &ratio(18, 65));
        assert!(relative_error(sum.double, sum.exact.as_ref().unwrap()) <= 1e-12);
    }

    #[test]
    fn energy_partial_matches_rowwise_definition() {
        let set = NaturalSet::new(vec![1, 2, 4, 5]).unwrap();
        let band = theta(&set, 5).unwrap();
        let by_points = energy_partial(&band).exact.unwrap();
        let by_rows = pairwise_sum(
            set.iter()
                .flat_map(|a| {
                    (1..=5u64).map(move |m| {
                        BigRational::new(BigInt::one(), term_denominator(a, m))
                    })
                })
                .collect(),
        );
        assert_eq!(by_points, by_rows);
    }

    #[test]
    fn harmonic_hand_values() {
        assert_eq!(
            harmonic_partial(&NaturalSet::new(vec![1, 2, 4, 5]).unwrap()),
            ratio(39, 20)
        );
        assert_eq!(harmonic_partial(&NaturalSet::new(vec![1]).unwrap()), ratio(1, 1));
        assert_eq!(harmonic_partial(&NaturalSet::empty()), BigRational::zero());
    }

    #[test]
    fn chain_of_inequalities_on_a_small_band() {
        // energy(theta(A, R)) >= sum of row energies >= harmonic / 5,
        // all exact, for R >= max(A).
        let set = greedy_ap_free(3, 30).unwrap();
        let rows = 30;
        let band = theta(&set, rows).unwrap();
        let energy = energy_partial(&band).exact.unwrap();
        let report = EnergyReport::for_set(&set).unwrap();
        let fifth_harmonic = harmonic_partial(&set) / BigRational::from(BigInt::from(5));
        assert!(energy >= report.total);
        assert!(report.total >= fifth_harmonic);
    }

    #[test]
    fn exponent_is_minus_c_at_unit_log() {
        assert_eq!(shrink_exponent(3, 1.0, 1.0), -1.0);
        assert_eq!(shrink_exponent(7, 1.0, 2.5), -2.5);
    }

    #[test]
    fn bound_limits_and_monotonicity() {
        let n = 10_000u64;
        let tiny_c = behrend_bound(&BoundParams::new(3, n, 1e-9).unwrap());
        assert!((tiny_c - n as f64).abs() <= 1e-6 * n as f64);

        // Strictly decreasing in c.
        let mut previous = f64::INFINITY;
        for c in [0.5, 1.0, 2.0, 4.0] {
            let value = behrend_bound(&BoundParams::new(3, n, c).unwrap());
            assert!(value < previous);
            previous = value;
        }

        // Increasing in n from 3 on.
        let mut previous = 0.0;
        for n in [3u64, 10, 100, 1000, 100_000] {
            let value = behrend_bound(&BoundParams::new(3, n, 1.0).unwrap());
            assert!(value > previous, "n={n}");
            previous = value;
        }
    }

    #[test]
    fn bound_params_validation() {
        assert!(BoundParams::new(2, 10, 1.0).is_err());
        assert!(BoundParams::new(3, 1, 1.0).is_err());
        assert!(BoundParams::new(3, 10, 0.0).is_err());
        assert!(BoundParams::new(3, 10, f64::NAN).is_err());
    }

    #[test]
    fn table_rows_match_the_search_examples() {
        let rows = grid_bound_table(2, &[1, 5], 1.0, &SearchConfig::default()).unwrap();
        assert_eq!(rows[0].lifted_bound, 1);
        assert_eq!(rows[0].behrend_form, 1.0);
        assert_eq!(rows[1].ap_free_max, 4);
        assert_eq!(rows[1].lifted_bound, 20);
        assert!(rows.iter().all(|row| row.exact));

        let rows = grid_bound_table(3, &[5], 1.0, &SearchConfig::default()).unwrap();
        assert_eq!(rows[0].ap_free_max, 4);
        assert_eq!(rows[0].lifted_bound, 20);
    }

    #[test]
    fn rational_wire_format() {
        assert_eq!(rational_string(&ratio(3, 20)), "3/20");
        assert_eq!(rational_string(&ratio(2, 1)), "2/1");
    }
}
