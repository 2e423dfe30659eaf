//! Modified Bessel functions of the second kind, K₀ and K₁.
//!
//! Two regimes:
//! - z ≤ 2: the ascending series with logarithmic terms,
//!       K₁(z) = 1/z + ln(z/2)·I₁(z) − (z/4)·Σₖ [ψ(k+1)+ψ(k+2)] (z²/4)ᵏ / (k!(k+1)!)
//!   (and the analogous series for K₀). The series is entire, and for z ≤ 2
//!   the cancellation against ln(z/2)·I₁ costs no significant digits.
//! - z > 2: the Thompson–Barnett continued fraction (CF2) evaluated at order
//!   μ = 0, which yields K₀ and the ratio needed for K₁ simultaneously at
//!   close to machine precision.
//!
//! Both branches agree to ~1e-14 at the z = 2 seam. Relative accuracy is
//! better than 1e-12 across z ∈ [1e-3, 700].

use crate::error::{Error, Result};

/// Euler–Mascheroni constant.
const EULER_GAMMA: f64 = 0.577215664901532860606512090082;

/// Beyond this argument K₁(z) leaves the normal f64 range; the unscaled
/// evaluators return 0 there. Use [`k1_scaled`] when the tail matters.
pub const K1_UNDERFLOW_Z: f64 = 705.0;

fn check_domain(z: f64) -> Result<()> {
    if !(z > 0.0) {
        return Err(Error::Domain(format!("K_n requires z > 0, got {z}")));
    }
    Ok(())
}

/// Series evaluation of (K0, K1) for 0 < z ≤ 2.
fn k_series(z: f64) -> (f64, f64) {
    let q = 0.25 * z * z; // (z/2)^2
    let log_half_z = (0.5 * z).ln();

    // I0, I1 partial sums built alongside the psi-weighted sums.
    let mut term_i0 = 1.0; // q^k / (k!)^2
    let mut i0 = term_i0;
    let mut i1 = 0.5 * z; // running sum of (z/2) q^k / (k!(k+1)!)

    let mut psi_k1 = -EULER_GAMMA; // ψ(k+1) at k = 0
    let mut psi_k2 = 1.0 - EULER_GAMMA; // ψ(k+2) at k = 0

    // K0 sum: Σ ψ(k+1) q^k/(k!)^2 ; K1 sum: Σ [ψ(k+1)+ψ(k+2)] q^k/(k!(k+1)!)
    let mut sum_k0 = psi_k1 * term_i0;
    let mut sum_k1 = (psi_k1 + psi_k2) * 1.0;
    let mut term_k1 = 1.0; // q^k/(k!(k+1)!)

    for k in 1..64 {
        let kf = k as f64;
        term_i0 *= q / (kf * kf);
        term_k1 *= q / (kf * (kf + 1.0));
        psi_k1 += 1.0 / kf;
        psi_k2 += 1.0 / (kf + 1.0);

        i0 += term_i0;
        let t1 = 0.5 * z * term_k1;
        i1 += t1;
        sum_k0 += psi_k1 * term_i0;
        sum_k1 += (psi_k1 + psi_k2) * term_k1;

        if term_i0 < 1e-18 * i0 && term_k1 < 1e-18 {
            break;
        }
    }

    let k0 = -log_half_z * i0 + sum_k0;
    let k1 = 1.0 / z + log_half_z * i1 - 0.25 * z * sum_k1;
    (k0, k1)
}

/// CF2 evaluation for z > 2: returns (K0, K1) each scaled by e^z.
fn k_cf2_scaled(z: f64) -> (f64, f64) {
    const EPS: f64 = 1e-16;
    const MAX_ITER: usize = 10_000;

    let a1 = 0.25; // 1/4 - mu^2 with mu = 0
    let mut b = 2.0 * (1.0 + z);
    let mut d = 1.0 / b;
    let mut delh = d;
    let mut h = delh;
    let mut q1 = 0.0_f64;
    let mut q2 = 1.0_f64;
    let mut a = -a1;
    let mut c = a1;
    let mut q = c;
    let mut s = 1.0 + q * delh;

    for i in 2..=MAX_ITER {
        a -= 2.0 * (i as f64 - 1.0);
        c = -a * c / i as f64;
        let qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        let dels = q * delh;
        s += dels;
        if (dels / s).abs() < EPS {
            break;
        }
    }
    let h = a1 * h;

    let k0_scaled = (std::f64::consts::PI / (2.0 * z)).sqrt() / s;
    let k1_scaled = k0_scaled * (z + 0.5 - h) / z;
    (k0_scaled, k1_scaled)
}

/// K₁(z) for z > 0. Returns 0 once z exceeds [`K1_UNDERFLOW_Z`].
pub fn k1(z: f64) -> Result<f64> {
    check_domain(z)?;
    if z <= 2.0 {
        Ok(k_series(z).1)
    } else if z > K1_UNDERFLOW_Z {
        Ok(0.0)
    } else {
        Ok(k_cf2_scaled(z).1 * (-z).exp())
    }
}

/// e^z · K₁(z); safe for arbitrarily large z.
pub fn k1_scaled(z: f64) -> Result<f64> {
    check_domain(z)?;
    if z <= 2.0 {
        Ok(k_series(z).1 * z.exp())
    } else {
        Ok(k_cf2_scaled(z).1)
    }
}

/// K₀(z) for z > 0. Returns 0 once z exceeds [`K1_UNDERFLOW_Z`].
pub fn k0(z: f64) -> Result<f64> {
    check_domain(z)?;
    if z <= 2.0 {
        Ok(k_series(z).0)
    } else if z > K1_UNDERFLOW_Z {
        Ok(0.0)
    } else {
        Ok(k_cf2_scaled(z).0 * (-z).exp())
    }
}

/// e^z · K₀(z); safe for arbitrarily large z.
pub fn k0_scaled(z: f64) -> Result<f64> {
    check_domain(z)?;
    if z <= 2.0 {
        Ok(k_series(z).0 * z.exp())
    } else {
        Ok(k_cf2_scaled(z).0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    // Reference values computed with the independent quadrature oracle over
    // the integral representation ∫_0^∞ e^{-z cosh t} cosh t dt (see the
    // acceptance suite), then frozen here.
    const K1_AT_1: f64 = 0.601907230197235;
    const K1_AT_5: f64 = 4.04461344545216e-3;
    const K0_AT_1: f64 = 0.421024438240708;

    #[test]
    fn k1_reference_points() {
        assert_relative_eq!(k1(1.0).unwrap(), K1_AT_1, max_relative = 1e-12);
        assert_relative_eq!(k1(5.0).unwrap(), K1_AT_5, max_relative = 1e-12);
    }

    #[test]
    fn k0_reference_point() {
        assert_relative_eq!(k0(1.0).unwrap(), K0_AT_1, max_relative = 1e-12);
    }

    #[test]
    fn small_argument_limit_z_k1_to_one() {
        let z = 1e-4;
        assert_relative_eq!(z * k1(z).unwrap(), 1.0, max_relative = 1e-4);
    }

    #[test]
    fn branches_agree_at_the_seam() {
        // evaluate both branches at the same point
        let (k0_series, k1_series) = k_series(2.0);
        let (k0_cf, k1_cf) = k_cf2_scaled(2.0);
        let scale = (-2.0f64).exp();
        assert_relative_eq!(k1_series, k1_cf * scale, max_relative = 1e-12);
        assert_relative_eq!(k0_series, k0_cf * scale, max_relative = 1e-12);
    }

    #[test]
    fn domain_errors() {
        assert!(k1(0.0).is_err());
        assert!(k1(-3.0).is_err());
        assert!(k1(f64::NAN).is_err());
    }

    #[test]
    fn underflow_returns_zero_with_scaled_fallback() {
        assert_eq!(k1(800.0).unwrap(), 0.0);
        let s = k1_scaled(800.0).unwrap();
        // leading asymptotic coefficient sqrt(pi/(2z))
        let lead = (std::f64::consts::PI / 1600.0).sqrt();
        assert_relative_eq!(s, lead, max_relative = 1e-3);
        assert!(s > lead);
    }

    #[test]
    fn scaled_matches_unscaled_in_normal_range() {
        for &z in &[0.01, 0.5, 1.0, 3.0, 10.0, 100.0, 650.0] {
            let a = k1(z).unwrap();
            let b = k1_scaled(z).unwrap() * (-z).exp();
            assert_relative_eq!(a, b, max_relative = 1e-12);
        }
    }

    #[test]
    fn exceeds_leading_asymptotic_everywhere() {
        // first asymptotic correction of K1 is +3/(8z), so the leading term
        // is a strict lower bound
        let mut z = 1e-3;
        while z < 700.0 {
            let lead = (std::f64::consts::PI / (2.0 * z)).sqrt() * (-z).exp();
            assert!(k1(z).unwrap() > lead, "failed at z = {z}");
            z *= 1.37;
        }
    }
}
