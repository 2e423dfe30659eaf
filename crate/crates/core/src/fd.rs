//! Centered finite differences, used throughout the verification scans as the
//! independent numerical route against analytic derivative formulas.

/// First derivative, O(h²).
pub fn central_d1<F: Fn(f64) -> f64>(f: F, x: f64, h: f64) -> f64 {
    (f(x + h) - f(x - h)) / (2.0 * h)
}

/// Second derivative, O(h²).
pub fn central_d2<F: Fn(f64) -> f64>(f: F, x: f64, h: f64) -> f64 {
    (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h)
}

/// Gradient magnitude of a scalar field on ℝⁿ by central differences.
pub fn grad_norm<F: Fn(&[f64]) -> f64>(f: F, x: &[f64], h: f64) -> f64 {
    let mut sq = 0.0;
    let mut pt = x.to_vec();
    for i in 0..x.len() {
        pt[i] = x[i] + h;
        let fp = f(&pt);
        pt[i] = x[i] - h;
        let fm = f(&pt);
        pt[i] = x[i];
        let d = (fp - fm) / (2.0 * h);
        sq += d * d;
    }
    sq.sqrt()
}

/// Laplacian of a scalar field on ℝⁿ by central differences.
pub fn laplacian<F: Fn(&[f64]) -> f64>(f: F, x: &[f64], h: f64) -> f64 {
    let fc = f(x);
    let mut acc = 0.0;
    let mut pt = x.to_vec();
    for i in 0..x.len() {
        pt[i] = x[i] + h;
        let fp = f(&pt);
        pt[i] = x[i] - h;
        let fm = f(&pt);
        pt[i] = x[i];
        acc += fp - 2.0 * fc + fm;
    }
    acc / (h * h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn derivatives_of_exponential() {
        let f = |x: f64| (0.5 * x).exp();
        assert_relative_eq!(central_d1(f, 1.0, 1e-5), 0.5 * f(1.0), max_relative = 1e-9);
        assert_relative_eq!(central_d2(f, 1.0, 1e-4), 0.25 * f(1.0), max_relative = 1e-6);
    }

    #[test]
    fn gradient_and_laplacian_of_quadratic() {
        // f = x² + 2y² + 3z²: ∇f = (2x, 4y, 6z), Δf = 12
        let f = |p: &[f64]| p[0] * p[0] + 2.0 * p[1] * p[1] + 3.0 * p[2] * p[2];
        let x = [1.0, -2.0, 0.5];
        let expect = (4.0f64 + 64.0 + 9.0).sqrt();
        assert_relative_eq!(grad_norm(f, &x, 1e-5), expect, max_relative = 1e-8);
        assert_relative_eq!(laplacian(f, &x, 1e-4), 12.0, max_relative = 1e-6);
    }
}
