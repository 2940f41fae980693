//! The sphere-shell construction of large 3-AP-free sets.
//!
//! Digit vectors (x_1, ..., x_n) with 0 <= x_i <= d-1 are read as integers in
//! base 2d-1. Sums of two such integers never carry, so u + w = 2v forces the
//! digit vectors to satisfy x + z = 2y componentwise; restricting to vectors
//! of one exact squared norm then forces x = z by convexity. Every shell is
//! therefore 3-AP-free, and by pigeonhole the best shell holds at least
//! d^n / (n(d-1)^2 + 1) of the d^n vectors.

use crate::construct::greedy_ap_free;
use crate::error::{Error, Result};
use crate::set::NaturalSet;

/// Above this many digit vectors the shell census switches from direct
/// enumeration to a digit-by-digit convolution.
const ENUMERATION_LIMIT: u64 = 10_000_000;

/// Chosen construction parameters: digits 0..d-1 in dimension n, encoded in
/// base 2d-1, restricted to the squared-norm level `shell_norm`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BehrendParams {
    digit_bound: u64,
    dimension: u32,
    shell_norm: u64,
}

impl BehrendParams {
    /// Picks (d, n) maximizing the pigeonhole guarantee d^n / (n(d-1)^2 + 1)
    /// over all pairs with (2d-1)^n <= target, ties toward larger n, then
    /// smaller d. None when even the smallest encoding (d=2, n=1, base 3)
    /// exceeds the target.
    pub fn choose(target: u64) -> Option<Self> {
        let mut best: Option<(u64, u32, u128, u128)> = None; // (d, n, d^n, levels)
        for n in 1u32.. {
            match 3u64.checked_pow(n) {
                Some(power) if power <= target => {}
                _ => break,
            }
            for d in 2u64.. {
                let fits = d
                    .checked_mul(2)
                    .and_then(|v| v.checked_sub(1))
                    .and_then(|base| base.checked_pow(n))
                    .is_some_and(|power| power <= target);
                if !fits {
                    break;
                }
                let digit_power = u128::from(d).pow(n); // d^n < (2d-1)^n <= target
                let levels = u128::from(n) * u128::from(d - 1).pow(2) + 1;
                let better = match best {
                    None => true,
                    Some((bd, bn, bp, bl)) => {
                        // digit_power / levels vs bp / bl, exact cross-multiplication
                        match (digit_power * bl).cmp(&(bp * levels)) {
                            std::cmp::Ordering::Greater => true,
                            std::cmp::Ordering::Less => false,
                            std::cmp::Ordering::Equal => {
                                (n, std::cmp::Reverse(d)) > (bn, std::cmp::Reverse(bd))
                            }
                        }
                    }
                };
                if better {
                    best = Some((d, n, digit_power, levels));
                }
                // For n <= 2 the guarantee is maximized at d = 2 already.
                if n <= 2 {
                    break;
                }
            }
        }
        let (d, n, _, _) = best?;
        let shell_norm = best_shell(d, n).0;
        Some(Self {
            digit_bound: d,
            dimension: n,
            shell_norm,
        })
    }

    /// The digit bound d: digits range over 0..d-1.
    pub fn digit_bound(&self) -> u64 {
        self.digit_bound
    }

    /// The dimension n: number of digits.
    pub fn dimension(&self) -> u32 {
        self.dimension
    }

    /// The chosen squared-norm level.
    pub fn shell_norm(&self) -> u64 {
        self.shell_norm
    }

    /// Total number of digit vectors, d^n.
    pub fn digit_vectors(&self) -> u128 {
        u128::from(self.digit_bound).pow(self.dimension)
    }

    /// Number of distinct squared-norm levels, n(d-1)^2 + 1.
    pub fn norm_levels(&self) -> u128 {
        u128::from(self.dimension) * u128::from(self.digit_bound - 1).pow(2) + 1
    }

    /// True iff `size` strictly exceeds the pigeonhole guarantee
    /// d^n / (n(d-1)^2 + 1).
    pub fn exceeds_pigeonhole(&self, size: u64) -> bool {
        u128::from(size) * self.norm_levels() > self.digit_vectors()
    }
}

/// The most populous squared-norm shell as (norm, count); ties break toward
/// the smaller norm.
fn best_shell(d: u64, n: u32) -> (u64, u64) {
    let counts = if u128::from(d).pow(n) <= u128::from(ENUMERATION_LIMIT) {
        shell_counts_enumerate(d, n)
    } else {
        shell_counts_convolve(d, n)
    };
    let mut best = (0u64, 0u64);
    for (norm, &count) in counts.iter().enumerate() {
        if count > best.1 {
            best = (norm as u64, count);
        }
    }
    best
}

/// Census by walking every digit vector with an odometer, tracking the norm
/// incrementally.
fn shell_counts_enumerate(d: u64, n: u32) -> Vec<u64> {
    let levels = (u64::from(n) * (d - 1) * (d - 1) + 1) as usize;
    let mut counts = vec![0u64; levels];
    let mut digits = vec![0u64; n as usize];
    let mut norm = 0u64;
    loop {
        counts[norm as usize] += 1;
        // Increment the odometer.
        let mut i = 0;
        loop {
            if i == digits.len() {
                return counts;
            }
            if digits[i] + 1 < d {
                norm += 2 * digits[i] + 1;
                digits[i] += 1;
                break;
            }
            norm -= digits[i] * digits[i];
            digits[i] = 0;
            i += 1;
        }
    }
}

/// Census by convolving the per-digit norm distribution n times.
fn shell_counts_convolve(d: u64, n: u32) -> Vec<u64> {
    let levels = (u64::from(n) * (d - 1) * (d - 1) + 1) as usize;
    let mut counts = vec![0u64; levels];
    counts[0] = 1;
    let mut reach = 0usize; // highest occupied norm so far
    for _ in 0..n {
        let mut next = vec![0u64; levels];
        for r in 0..=reach {
            let base = counts[r];
            if base == 0 {
                continue;
            }
            for x in 0..d {
                next[r + (x * x) as usize] += base;
            }
        }
        reach += ((d - 1) * (d - 1)) as usize;
        counts = next;
    }
    counts
}

/// Builds a 3-AP-free subset of {1..target} from the best sphere shell.
///
/// Falls back to the greedy builder when no encoding fits (only target = 2).
/// The output is the image of the shell under
/// x -> 1 + sum x_i (2d-1)^(i-1).
pub fn behrend_set(target: u64) -> Result<NaturalSet> {
    let (_, set) = behrend_construction(target)?;
    Ok(set)
}

/// Like `behrend_set` but also reports the parameters that were chosen;
/// params are None for the small-target fallback.
pub fn behrend_construction(target: u64) -> Result<(Option<BehrendParams>, NaturalSet)> {
    if target < 2 {
        return Err(Error::InvalidParameter(format!(
            "behrend target must be at least 2, got {target}"
        )));
    }
    let Some(params) = BehrendParams::choose(target) else {
        return Ok((None, greedy_ap_free(3, target)?));
    };
    let d = params.digit_bound;
    let n = params.dimension;
    let base = 2 * d - 1;
    let mut place_values = Vec::with_capacity(n as usize);
    let mut place = 1u64;
    for _ in 0..n {
        place_values.push(place);
        place *= base; // in range: base^(n-1) < (2d-1)^n <= target
    }

    // Depth-first walk over digit vectors of exactly the target norm,
    // pruning positions whose remaining digits cannot reach it.
    let mut elements = Vec::new();
    let max_square = (d - 1) * (d - 1);
    let mut stack: Vec<(usize, u64, u64)> = vec![(0, 0, 1)]; // (position, norm, value)
    while let Some((pos, norm, value)) = stack.pop() {
        if pos == n as usize {
            if norm == params.shell_norm {
                elements.push(value);
            }
            continue;
        }
        let remaining = (n as usize - pos - 1) as u64 * max_square;
        for x in 0..d {
            let next_norm = norm + x * x;
            if next_norm > params.shell_norm {
                break;
            }
            if next_norm + remaining < params.shell_norm {
                continue;
            }
            stack.push((pos + 1, next_norm, value + x * place_values[pos]));
        }
    }
    let set = NaturalSet::from_unsorted(elements)?;
    Ok((Some(params), set))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::detect::find_ap;

    #[test]
    fn small_target_falls_back() {
        let (params, set) = behrend_construction(2).unwrap();
        assert_eq!(params, None);
        assert!(!set.is_empty());
        assert!(set.max().unwrap() <= 2);
        assert!(behrend_construction(1).is_err());
    }

    #[test]
    fn hundred_picks_four_binary_digits() {
        // (2d-1)^n <= 100 maximizing d^n/(n(d-1)^2+1): d=2, n=4 wins with 16/5.
        let (params, set) = behrend_construction(100).unwrap();
        let params = params.unwrap();
        assert_eq!((params.digit_bound(), params.dimension()), (2, 4));
        // Norm shells of {0,1}^4 are binomials; the best is norm 2 with 6.
        assert_eq!(params.shell_norm(), 2);
        assert_eq!(set.elements(), &[5, 11, 13, 29, 31, 37]);
        assert_eq!(find_ap(&set, 3).unwrap(), None);
    }

    #[test]
    fn output_is_ap_free_and_in_range() {
        for target in [3, 10, 124, 1000, 10_000] {
            let (params, set) = behrend_construction(target).unwrap();
            assert_eq!(find_ap(&set, 3).unwrap(), None, "target={target}");
            assert!(set.max().unwrap() <= target, "target={target}");
            if let Some(params) = params {
                assert!(
                    params.exceeds_pigeonhole(set.len() as u64)
                        || u128::from(set.len() as u64) * params.norm_levels()
                            == params.digit_vectors(),
                    "shell below pigeonhole at target={target}"
                );
            }
        }
    }

    #[test]
    fn census_paths_agree() {
        for (d, n) in [(2, 10), (3, 7), (5, 4), (7, 3)] {
            assert_eq!(shell_counts_enumerate(d, n), shell_counts_convolve(d, n));
        }
    }

    #[test]
    fn shell_counts_are_binomials_for_binary_digits() {
        let counts = shell_counts_enumerate(2, 10);
        let binomials: Vec<u64> = (0..=10u64)
            .map(|w| {
                let mut c = 1u64;
                for i in 0..w {
                    c = c * (10 - i) / (i + 1);
                }
                c
            })
            .collect();
        assert_eq!(counts, binomials);
    }
}
