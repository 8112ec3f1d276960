//! Seeded, stream-split randomness and Monte Carlo measure estimation.
//!
//! Every stochastic routine takes a `(seed, stream)` pair and derives an
//! independent ChaCha substream per work unit, so parallel execution is
//! bitwise identical to sequential execution for the same seed.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

/// One-sided z-value for a 99% lower confidence bound.
const Z99: f64 = 2.326_347_874_040_841;

/// Independent substream `stream` of the generator family `seed`.
pub fn substream(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Uniform point in [0,1]^n.
pub fn unit_point(rng: &mut ChaCha8Rng, nvars: usize) -> Vec<f64> {
    (0..nvars).map(|_| rng.gen::<f64>()).collect()
}

/// Element `index` of the van der Corput sequence in the given base.
pub fn van_der_corput(mut index: u64, base: u64) -> f64 {
    let mut result = 0.0;
    let mut f = 1.0 / base as f64;
    while index > 0 {
        result += f * (index % base) as f64;
        index /= base;
        f /= base as f64;
    }
    result
}

const HALTON_BASES: [u64; 8] = [2, 3, 5, 7, 11, 13, 17, 19];

/// Element `index` of the Halton sequence in [0,1]^n (n <= 8).
pub fn halton_point(index: u64, nvars: usize) -> Vec<f64> {
    assert!(nvars <= HALTON_BASES.len(), "halton dimension too large");
    (0..nvars)
        .map(|j| van_der_corput(index, HALTON_BASES[j]))
        .collect()
}

/// Wilson one-sided lower confidence bound for a Bernoulli proportion.
pub fn wilson_lower_bound(hits: u64, trials: u64, z: f64) -> f64 {
    if trials == 0 {
        return 0.0;
    }
    let n = trials as f64;
    let p = hits as f64 / n;
    let z2 = z * z;
    let denom = 1.0 + z2 / n;
    let centre = p + z2 / (2.0 * n);
    let margin = z * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt();
    ((centre - margin) / denom).max(0.0)
}

/// Monte Carlo estimate of the measure of an indicator set in [0,1]^n.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct MeasureEstimate {
    pub p_hat: f64,
    /// One-sided 99% lower confidence bound.
    pub lower99: f64,
    pub samples: u64,
}

/// Estimate the measure of `{x in [0,1]^n : indicator(x)}`.
///
/// Samples are split into strata, each driven by its own substream and
/// accumulated as integer hit counts, so the result does not depend on
/// the parallel schedule.
pub fn estimate_measure<F>(
    indicator: F,
    nvars: usize,
    samples: u64,
    seed: u64,
    stream: u64,
) -> MeasureEstimate
where
    F: Fn(&[f64]) -> bool + Sync,
{
    let strata: u64 = 64;
    let per = samples.div_ceil(strata);
    let total = per * strata;
    let hits: u64 = (0..strata)
        .into_par_iter()
        .map(|s| {
            let mut rng = substream(seed, stream.wrapping_mul(1009).wrapping_add(s));
            let mut h = 0u64;
            let mut x = vec![0.0f64; nvars];
            for _ in 0..per {
                for xi in x.iter_mut() {
                    *xi = rng.gen();
                }
                if indicator(&x) {
                    h += 1;
                }
            }
            h
        })
        .sum();
    MeasureEstimate {
        p_hat: hits as f64 / total as f64,
        lower99: wilson_lower_bound(hits, total, Z99),
        samples: total,
    }
}

/// Estimate the (n-1)-dimensional measure of the slice `{coord} x [0,1]^{n-1}`
/// of an indicator set, probing the indicator at the fixed axis coordinate.
pub fn estimate_slice_measure<F>(
    indicator: F,
    nvars: usize,
    axis: usize,
    coord: f64,
    samples: u64,
    seed: u64,
    stream: u64,
) -> MeasureEstimate
where
    F: Fn(&[f64]) -> bool,
{
    let mut rng = substream(seed, stream);
    let mut hits = 0u64;
    let mut x = vec![0.0f64; nvars];
    for _ in 0..samples {
        for (j, xj) in x.iter_mut().enumerate() {
            *xj = if j == axis { coord } else { rng.gen() };
        }
        if indicator(&x) {
            hits += 1;
        }
    }
    MeasureEstimate {
        p_hat: hits as f64 / samples as f64,
        lower99: wilson_lower_bound(hits, samples, Z99),
        samples,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn measure_of_half_box() {
        let m = estimate_measure(|x| x[0] < 0.5, 2, 100_000, 42, 0);
        assert!((m.p_hat - 0.5).abs() < 0.01);
        assert!(m.lower99 <= m.p_hat);
        assert!(m.lower99 > 0.48);
    }

    #[test]
    fn estimate_is_deterministic_across_runs() {
        let a = estimate_measure(|x| x[0] * x[0] + x[1] * x[1] < 1.0, 2, 50_000, 7, 3);
        let b = estimate_measure(|x| x[0] * x[0] + x[1] * x[1] < 1.0, 2, 50_000, 7, 3);
        assert_eq!(a.p_hat, b.p_hat);
        assert_eq!(a.lower99, b.lower99);
    }

    #[test]
    fn slice_measure_of_stripe() {
        // S = [0,1] x [0, 0.3]: every slice along axis 0 has measure 0.3
        let m = estimate_slice_measure(|x| x[1] < 0.3, 2, 0, 0.5, 20_000, 11, 0);
        assert!((m.p_hat - 0.3).abs() < 0.02);
    }

    #[test]
    fn halton_covers_the_box() {
        let pts: Vec<Vec<f64>> = (1..500).map(|i| halton_point(i, 2)).collect();
        let in_corner = pts
            .iter()
            .filter(|p| p[0] < 0.25 && p[1] < 0.25)
            .count() as f64;
        assert!((in_corner / 499.0 - 0.0625).abs() < 0.02);
    }

    #[test]
    fn wilson_bound_sane() {
        assert_eq!(wilson_lower_bound(0, 0, Z99), 0.0);
        assert!(wilson_lower_bound(100, 100, Z99) > 0.94);
        assert!(wilson_lower_bound(100, 100, Z99) < 1.0);
        assert!(wilson_lower_bound(50, 100, Z99) < 0.5);
    }
}
