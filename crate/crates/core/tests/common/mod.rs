//! Shared helpers for integration tests.
//!
//! The K₁ oracle here is deliberately independent of the library: it
//! evaluates the integral representation
//!     K₁(z) = ∫_0^∞ e^{-z cosh t} cosh t dt
//! with composite Simpson panels refined until the value stabilizes.

#![allow(dead_code)]

/// Truncation point: beyond cosh t = 1 + 46/z the integrand is below
/// e^{-46} ≈ 1e-20 of the peak.
fn truncation(z: f64) -> f64 {
    (1.0 + 46.0 / z + (46.0 / z) * (2.0 + 46.0 / z)).ln().max(1.0)
}

/// Composite Simpson with doubling panel count until convergence.
pub fn k1_oracle(z: f64) -> f64 {
    assert!(z > 0.0);
    let t_max = {
        // acosh(1 + 46/z), computed stably
        let w = 1.0 + 46.0 / z;
        (w + (w * w - 1.0).sqrt()).ln()
    };
    let f = |t: f64| (-z * t.cosh()).exp() * t.cosh();

    let mut n = 64usize;
    let mut prev = f64::NAN;
    loop {
        let h = t_max / n as f64;
        let mut acc = f(0.0) + f(t_max);
        for i in 1..n {
            let w = if i % 2 == 1 { 4.0 } else { 2.0 };
            acc += w * f(i as f64 * h);
        }
        let value = acc * h / 3.0;
        if (value - prev).abs() <= 1e-13 * value.abs() || n >= 1 << 22 {
            return value;
        }
        prev = value;
        n *= 2;
    }
}

/// Log-spaced grid of `n` points over [lo, hi], inclusive.
pub fn log_spaced(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let (a, b) = (lo.ln(), hi.ln());
    (0..n)
        .map(|i| (a + (b - a) * i as f64 / (n - 1) as f64).exp())
        .collect()
}
