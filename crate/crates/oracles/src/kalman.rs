//! Covariance-form Kalman filter + Rauch-Tung-Striebel smoother for a planar
//! constant-velocity chain with position-only measurements.
//!
//! State is `[px, py, vx, vy]`. The first state carries a zero-mean Gaussian
//! prior with covariance `anchor_variance * I`, matching the weak anchor used
//! by the information-form solver under test.

use nalgebra::{Matrix2, Matrix4, Matrix4x2, Matrix2x4, Vector2, Vector4};

/// One position measurement: value and timestamp.
#[derive(Debug, Clone, Copy)]
pub struct Meas {
    pub value: Vector2<f64>,
    pub time: f64,
}

fn transition(dt: f64, q_c: f64) -> (Matrix4<f64>, Matrix4<f64>) {
    let mut phi = Matrix4::identity();
    phi[(0, 2)] = dt;
    phi[(1, 3)] = dt;
    let a = q_c * dt.powi(3) / 3.0;
    let b = q_c * dt.powi(2) / 2.0;
    let c = q_c * dt;
    let mut q = Matrix4::zeros();
    q[(0, 0)] = a;
    q[(1, 1)] = a;
    q[(0, 2)] = b;
    q[(2, 0)] = b;
    q[(1, 3)] = b;
    q[(3, 1)] = b;
    q[(2, 2)] = c;
    q[(3, 3)] = c;
    (phi, q)
}

fn kf_update(
    mean: &Vector4<f64>,
    cov: &Matrix4<f64>,
    z: &Vector2<f64>,
    sigma2: f64,
) -> (Vector4<f64>, Matrix4<f64>) {
    let h = Matrix2x4::<f64>::new(1.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0);
    let s: Matrix2<f64> = h * cov * h.transpose() + Matrix2::identity() * sigma2;
    let s_inv = s.try_inverse().expect("innovation covariance invertible");
    let k: Matrix4x2<f64> = cov * h.transpose() * s_inv;
    let innov = z - h * mean;
    let new_mean = mean + k * innov;
    // Joseph form for numerical robustness.
    let ikh = Matrix4::identity() - k * h;
    let new_cov = ikh * cov * ikh.transpose() + k * (Matrix2::identity() * sigma2) * k.transpose();
    (new_mean, new_cov)
}

/// Smooths a measurement window and returns the `(mean, covariance)` of every
/// window state, RTS-smoothed. The last entry equals the filtered marginal of
/// the newest state, which is what the fixed-lag smoother under test returns.
pub fn smooth_window(
    window: &[Meas],
    q_c: f64,
    sigma2: f64,
    anchor_variance: f64,
) -> Vec<(Vector4<f64>, Matrix4<f64>)> {
    assert!(window.len() >= 2, "oracle needs at least two measurements");
    let n = window.len();

    let mut filt_mean = Vec::with_capacity(n);
    let mut filt_cov = Vec::with_capacity(n);
    let mut pred_mean = Vec::with_capacity(n);
    let mut pred_cov = Vec::with_capacity(n);
    let mut phis = Vec::with_capacity(n);

    let mut mean = Vector4::zeros();
    let mut cov = Matrix4::identity() * anchor_variance;
    pred_mean.push(mean);
    pred_cov.push(cov);
    phis.push(Matrix4::identity());

    let (m, c) = kf_update(&mean, &cov, &window[0].value, sigma2);
    mean = m;
    cov = c;
    filt_mean.push(mean);
    filt_cov.push(cov);

    for j in 1..n {
        let dt = window[j].time - window[j - 1].time;
        let (phi, q) = transition(dt, q_c);
        let pm = phi * mean;
        let pc = phi * cov * phi.transpose() + q;
        pred_mean.push(pm);
        pred_cov.push(pc);
        phis.push(phi);
        let (m, c) = kf_update(&pm, &pc, &window[j].value, sigma2);
        mean = m;
        cov = c;
        filt_mean.push(mean);
        filt_cov.push(cov);
    }

    // RTS backward pass.
    let mut sm_mean = filt_mean.clone();
    let mut sm_cov = filt_cov.clone();
    for j in (0..n - 1).rev() {
        let phi = phis[j + 1];
        let pc_inv = pred_cov[j + 1]
            .try_inverse()
            .expect("predicted covariance invertible");
        let g = filt_cov[j] * phi.transpose() * pc_inv;
        sm_mean[j] = filt_mean[j] + g * (sm_mean[j + 1] - pred_mean[j + 1]);
        sm_cov[j] = filt_cov[j] + g * (sm_cov[j + 1] - pred_cov[j + 1]) * g.transpose();
    }

    sm_mean.into_iter().zip(sm_cov).collect()
}
