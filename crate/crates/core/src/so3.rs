//! Rotation utilities: skew/vee maps, axis-angle, Euler angles, projection.

use nalgebra::{Matrix3, Vector3};

use crate::error::CoreError;
use crate::scalar::{real, Real};

/// Skew-symmetric matrix of `w`, satisfying `skew(w) * x == w.cross(&x)`.
pub fn skew<S: Real>(w: &Vector3<S>) -> Matrix3<S> {
    let z = S::zero();
    Matrix3::new(z, -w.z, w.y, w.z, z, -w.x, -w.y, w.x, z)
}

/// Inverse of [`skew`]: extracts the vector from a skew-symmetric matrix.
///
/// Fails if `s` deviates from skew symmetry by more than `1e-9` (absolute,
/// relative to the largest entry for matrices with large norm).
pub fn vee<S: Real>(s: &Matrix3<S>) -> Result<Vector3<S>, CoreError> {
    let sym = s + s.transpose();
    let scale = S::one().max(s.amax());
    if sym.amax() > real::<S>(1e-9) * scale {
        return Err(CoreError::NonSkewInput {
            asymmetry: sym.amax().to_subset().unwrap_or(f64::NAN),
        });
    }
    Ok(vee_unchecked(s))
}

/// [`vee`] without the symmetry check; averages the off-diagonal pairs.
pub fn vee_unchecked<S: Real>(s: &Matrix3<S>) -> Vector3<S> {
    let half = real::<S>(0.5);
    Vector3::new(
        (s[(2, 1)] - s[(1, 2)]) * half,
        (s[(0, 2)] - s[(2, 0)]) * half,
        (s[(1, 0)] - s[(0, 1)]) * half,
    )
}

/// Rodrigues rotation about a unit axis by `angle`.
pub fn axis_angle<S: Real>(axis: &Vector3<S>, angle: S) -> Matrix3<S> {
    let k = skew(axis);
    Matrix3::identity() + k * angle.sin() + k * k * (S::one() - angle.cos())
}

/// Basic rotation about the z-axis.
pub fn rotation_z<S: Real>(angle: S) -> Matrix3<S> {
    let (s, c) = angle.sin_cos();
    let z = S::zero();
    let one = S::one();
    Matrix3::new(c, -s, z, s, c, z, z, z, one)
}

/// Rotation matrix from Z-Y-X intrinsic Euler angles (yaw, pitch, roll).
pub fn from_euler_zyx<S: Real>(yaw: S, pitch: S, roll: S) -> Matrix3<S> {
    let e1 = Vector3::x();
    let e2 = Vector3::y();
    rotation_z(yaw) * axis_angle(&e2, pitch) * axis_angle(&e1, roll)
}

/// Z-Y-X intrinsic Euler angles (yaw, pitch, roll) of a rotation matrix.
///
/// Pitch is reported in `[-pi/2, pi/2]`; at the gimbal-lock boundary the
/// roll is folded into yaw.
pub fn to_euler_zyx<S: Real>(r: &Matrix3<S>) -> (S, S, S) {
    let sp = -r[(2, 0)];
    let sp = sp.clamp(-S::one(), S::one());
    let pitch = sp.asin();
    let cos_pitch = (S::one() - sp * sp).sqrt();
    if cos_pitch > real::<S>(1e-9) {
        let yaw = r[(1, 0)].atan2(r[(0, 0)]);
        let roll = r[(2, 1)].atan2(r[(2, 2)]);
        (yaw, pitch, roll)
    } else {
        // Gimbal lock: only yaw ± roll is observable.
        let yaw = (-r[(0, 1)]).atan2(r[(1, 1)]);
        (yaw, pitch, S::zero())
    }
}

/// Rotation angle of the relative rotation between `a` and `b`, in radians.
pub fn angle_between<S: Real>(a: &Matrix3<S>, b: &Matrix3<S>) -> S {
    let q = a.transpose() * b;
    let c = (q.trace() - S::one()) * real::<S>(0.5);
    c.clamp(-S::one(), S::one()).acos()
}

/// Logarithm map: axis-angle vector of a rotation matrix.
///
/// Accurate for angles away from pi; used for finite-differencing
/// reference orientations where increments are small.
pub fn log<S: Real>(r: &Matrix3<S>) -> Vector3<S> {
    let c = ((r.trace() - S::one()) * real::<S>(0.5)).clamp(-S::one(), S::one());
    let angle = c.acos();
    // vee of (R - Rᵀ)/2 equals sin(angle) * axis.
    let w = vee_unchecked(&(r - r.transpose())) * real::<S>(0.5);
    if angle < real::<S>(1e-7) {
        w
    } else {
        w * (angle / angle.sin())
    }
}

/// Nearest rotation matrix in the Frobenius sense (polar projection via SVD).
pub fn project_to_so3<S: Real>(m: &Matrix3<S>) -> Matrix3<S> {
    let svd = m.svd(true, true);
    let u = svd.u.expect("svd with u");
    let vt = svd.v_t.expect("svd with v_t");
    let mut r = u * vt;
    if r.determinant() < S::zero() {
        // Flip the weakest singular direction to restore det = +1.
        let mut u = u;
        u.column_mut(2).neg_mut();
        r = u * vt;
    }
    r
}

/// Orthonormality defect `max|RᵀR - I|`.
pub fn orthonormality_defect<S: Real>(r: &Matrix3<S>) -> S {
    (r.transpose() * r - Matrix3::identity()).amax()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    #[test]
    fn skew_acts_as_cross_product() {
        let w = Vector3::new(0.0, 0.0, 1.0);
        let x = Vector3::new(1.0, 0.0, 0.0);
        assert_relative_eq!(skew(&w) * x, Vector3::new(0.0, 1.0, 0.0), epsilon = 1e-15);
    }

    #[test]
    fn vee_round_trip() {
        let w = Vector3::new(1.0, 2.0, 3.0);
        let back = vee(&skew(&w)).unwrap();
        assert_relative_eq!(back, w, epsilon = 1e-15);
    }

    #[test]
    fn vee_rejects_non_skew() {
        let m = Matrix3::new(0.0, 1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0);
        assert!(vee(&m).is_err());
    }

    #[test]
    fn euler_round_trip() {
        let (yaw, pitch, roll) = (0.3, -0.7, 1.1);
        let r = from_euler_zyx(yaw, pitch, roll);
        let (y2, p2, r2) = to_euler_zyx(&r);
        assert_relative_eq!(yaw, y2, epsilon = 1e-12);
        assert_relative_eq!(pitch, p2, epsilon = 1e-12);
        assert_relative_eq!(roll, r2, epsilon = 1e-12);
    }

    #[test]
    fn log_inverts_axis_angle_small() {
        let axis = Vector3::new(1.0, 2.0, -0.5).normalize();
        let r = axis_angle(&axis, 1e-3);
        assert_relative_eq!(log(&r), axis * 1e-3, epsilon = 1e-12);
    }

    #[test]
    fn projection_restores_orthonormality() {
        let r = from_euler_zyx(0.4, 0.2, -0.9);
        let drifted = r * 1.001 + Matrix3::new(0.0, 1e-4, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0);
        let p = project_to_so3(&drifted);
        assert!(orthonormality_defect(&p) < 1e-14);
        assert!(angle_between(&p, &r) < 1e-3);
    }

    proptest! {
        #[test]
        fn skew_is_antisymmetric(x in -10.0f64..10.0, y in -10.0f64..10.0, z in -10.0f64..10.0) {
            let w = Vector3::new(x, y, z);
            let s = skew(&w);
            prop_assert!((s + s.transpose()).amax() == 0.0);
        }

        #[test]
        fn axis_angle_is_rotation(ax in -1.0f64..1.0, ay in -1.0f64..1.0, az in -1.0f64..1.0,
                                  angle in -3.0f64..3.0) {
            let v = Vector3::new(ax, ay, az);
            prop_assume!(v.norm() > 1e-3);
            let r = axis_angle(&v.normalize(), angle);
            prop_assert!(orthonormality_defect(&r) < 1e-12);
            prop_assert!((r.determinant() - 1.0).abs() < 1e-12);
        }
    }
}
