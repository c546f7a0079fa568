//! Renormalized error statistics: the only floating-point code in the
//! system. Counts stay exact in `hasseflex-core`; here they are turned
//! into `e_tilde = e / (2 g sqrt(p))`, binned, and compared against the
//! semicircle distribution by the Kolmogorov–Smirnov statistic.

use hasseflex_core::ffarith::PointCountRecord;

/// One row of the renormalized series (genus 1 for the C2 pipeline).
#[derive(Clone, Copy, Debug)]
pub struct ErrorRow {
    pub p: u64,
    pub count: u64,
    pub e: i64,
    pub e_tilde: f64,
}

pub fn renormalize(series: &[PointCountRecord], genus: u32) -> Vec<ErrorRow> {
    series
        .iter()
        .map(|r| ErrorRow {
            p: r.p,
            count: r.count,
            e: r.e,
            e_tilde: r.e as f64 / (2.0 * genus as f64 * (r.p as f64).sqrt()),
        })
        .collect()
}

/// CDF of the semicircle density `(2/pi) sqrt(1 - t^2)` on `[-1, 1]`.
pub fn semicircle_cdf(t: f64) -> f64 {
    let t = t.clamp(-1.0, 1.0);
    0.5 + (t * (1.0 - t * t).sqrt() + t.asin()) / core::f64::consts::PI
}

/// Two-sided Kolmogorov–Smirnov distance between the sample and the
/// semicircle CDF.
pub fn ks_distance(samples: &[f64]) -> f64 {
    let mut xs: Vec<f64> = samples.to_vec();
    xs.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let n = xs.len() as f64;
    let mut d: f64 = 0.0;
    for (i, &x) in xs.iter().enumerate() {
        let f = semicircle_cdf(x);
        d = d.max((((i + 1) as f64) / n - f).abs());
        d = d.max((f - (i as f64) / n).abs());
    }
    d
}

/// Histogram over `[-1, 1]` with the given number of bins; samples outside
/// the interval land in the boundary bins.
pub fn histogram(samples: &[f64], bins: usize) -> Vec<(f64, f64, u64)> {
    assert!(bins >= 1);
    let width = 2.0 / bins as f64;
    let mut counts = vec![0u64; bins];
    for &x in samples {
        let mut idx = ((x + 1.0) / width).floor() as i64;
        if idx < 0 {
            idx = 0;
        }
        if idx >= bins as i64 {
            idx = bins as i64 - 1;
        }
        counts[idx as usize] += 1;
    }
    counts
        .into_iter()
        .enumerate()
        .map(|(i, c)| (-1.0 + i as f64 * width, -1.0 + (i + 1) as f64 * width, c))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cdf_endpoints() {
        assert!((semicircle_cdf(-1.0) - 0.0).abs() < 1e-12);
        assert!((semicircle_cdf(1.0) - 1.0).abs() < 1e-12);
        assert!((semicircle_cdf(0.0) - 0.5).abs() < 1e-12);
    }

    #[test]
    fn ks_of_perfect_sample_is_small() {
        // quantiles of the semicircle itself
        let n = 2000;
        let mut xs = Vec::new();
        for i in 0..n {
            let target = (i as f64 + 0.5) / n as f64;
            // bisect the CDF
            let (mut lo, mut hi) = (-1.0, 1.0);
            for _ in 0..60 {
                let mid = 0.5 * (lo + hi);
                if semicircle_cdf(mid) < target {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            xs.push(0.5 * (lo + hi));
        }
        assert!(ks_distance(&xs) < 0.01);
    }

    #[test]
    fn histogram_bins() {
        let h = histogram(&[-0.99, 0.0, 0.99], 4);
        assert_eq!(h.len(), 4);
        assert_eq!(h.iter().map(|r| r.2).sum::<u64>(), 3);
    }
}
