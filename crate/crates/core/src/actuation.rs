//! Actuation model of an assembly: configuration matrix, inertia tensor,
//! achievable-thrust queries, canonical assembly frame and controllable
//! degrees of freedom.

use nalgebra::{DMatrix, Matrix3, Vector3, Vector6};

use crate::assembly::{build_assembly, BuiltAssembly, ConnectionGraph, ModuleParams, ModulePose};
use crate::error::CoreError;
use crate::scalar::{real, Real};

/// Linear map from squared rotor speeds to the body-frame wrench
/// `[thrust; torque]`. Columns are ordered module-major: rotor j of module i
/// is column `4 i + j`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConfigurationMatrix<S: Real> {
    pub matrix: DMatrix<S>,
    pub module_count: usize,
}

impl<S: Real> ConfigurationMatrix<S> {
    pub fn column_index(module: usize, rotor: usize) -> usize {
        4 * module + rotor
    }

    /// Body wrench produced by the command vector `u`.
    pub fn wrench(&self, u: &nalgebra::DVector<S>) -> Vector6<S> {
        let w = &self.matrix * u;
        Vector6::from_iterator(w.iter().copied())
    }

    /// Copy of the columns selected by `active` (ascending order).
    pub fn select_columns(&self, active: &[usize]) -> DMatrix<S> {
        self.matrix.select_columns(active.iter())
    }
}

/// Builds the configuration matrix from module poses.
///
/// Column (i, j) is `[c_F q_i ; c_F (o_ij x q_i) + s_j c_M q_i]` with the
/// alternating spin sign `s_j`. The thrust block is computed once per module
/// so that the four columns of a module share it bit for bit.
pub fn config_matrix<S: Real>(
    params: &ModuleParams<S>,
    poses: &[ModulePose<S>],
) -> ConfigurationMatrix<S> {
    let n = poses.len();
    let mut m = DMatrix::zeros(6, 4 * n);
    for (i, pose) in poses.iter().enumerate() {
        let thrust_block = pose.thrust_dir * params.thrust_coeff;
        let drag_block = pose.thrust_dir * params.drag_torque_coeff;
        for j in 0..4 {
            let torque = pose.rotor_positions[j].cross(&pose.thrust_dir) * params.thrust_coeff
                + drag_block * ModuleParams::<S>::rotor_spin_sign(j);
            let col = ConfigurationMatrix::<S>::column_index(i, j);
            for r in 0..3 {
                m[(r, col)] = thrust_block[r];
                m[(r + 3, col)] = torque[r];
            }
        }
    }
    ConfigurationMatrix {
        matrix: m,
        module_count: n,
    }
}

/// Assembly inertia tensor about the COM by the parallel axis theorem:
/// each module contributes its rotated own inertia plus the point-mass
/// off-center term.
pub fn inertia_tensor<S: Real>(params: &ModuleParams<S>, poses: &[ModulePose<S>]) -> Matrix3<S> {
    let mut j = Matrix3::zeros();
    for pose in poses {
        j += pose.rotation * params.inertia * pose.rotation.transpose();
        let (x, y, z) = (pose.position.x, pose.position.y, pose.position.z);
        j += Matrix3::new(
            y * y + z * z,
            -x * y,
            -x * z,
            -y * x,
            x * x + z * z,
            -y * z,
            -z * x,
            -z * y,
            x * x + y * y,
        ) * params.mass;
    }
    j
}

/// Largest total thrust the assembly can produce along the unit direction
/// `d`: every rotor whose thrust axis has positive projection runs at the
/// saturation bound, the rest are off.
pub fn max_thrust_in_direction<S: Real>(
    params: &ModuleParams<S>,
    poses: &[ModulePose<S>],
    d: &Vector3<S>,
) -> S {
    let d = d.normalize();
    let per_module = real::<S>(4.0) * params.thrust_coeff * params.u_max;
    poses
        .iter()
        .map(|p| per_module * d.dot(&p.thrust_dir).max(S::zero()))
        .fold(S::zero(), |acc, t| acc + t)
}

/// Directions of a subdivided icosahedron (level 5 spaces vertices roughly
/// two degrees apart).
fn icosphere_directions<S: Real>(subdivisions: usize) -> Vec<Vector3<S>> {
    let phi = real::<S>((1.0 + 5.0f64.sqrt()) / 2.0);
    let one = S::one();
    let z = S::zero();
    let mut verts: Vec<Vector3<S>> = [
        Vector3::new(-one, phi, z),
        Vector3::new(one, phi, z),
        Vector3::new(-one, -phi, z),
        Vector3::new(one, -phi, z),
        Vector3::new(z, -one, phi),
        Vector3::new(z, one, phi),
        Vector3::new(z, -one, -phi),
        Vector3::new(z, one, -phi),
        Vector3::new(phi, z, -one),
        Vector3::new(phi, z, one),
        Vector3::new(-phi, z, -one),
        Vector3::new(-phi, z, one),
    ]
    .iter()
    .map(|v| v.normalize())
    .collect();
    let mut faces: Vec<[usize; 3]> = vec![
        [0, 11, 5],
        [0, 5, 1],
        [0, 1, 7],
        [0, 7, 10],
        [0, 10, 11],
        [1, 5, 9],
        [5, 11, 4],
        [11, 10, 2],
        [10, 7, 6],
        [7, 1, 8],
        [3, 9, 4],
        [3, 4, 2],
        [3, 2, 6],
        [3, 6, 8],
        [3, 8, 9],
        [4, 9, 5],
        [2, 4, 11],
        [6, 2, 10],
        [8, 6, 7],
        [9, 8, 1],
    ];
    for _ in 0..subdivisions {
        let mut midpoints = std::collections::HashMap::new();
        let mut next = Vec::with_capacity(faces.len() * 4);
        for f in &faces {
            let mut mid = [0usize; 3];
            for e in 0..3 {
                let (a, b) = (f[e], f[(e + 1) % 3]);
                let key = (a.min(b), a.max(b));
                mid[e] = *midpoints.entry(key).or_insert_with(|| {
                    let v = (verts[a] + verts[b]).normalize();
                    verts.push(v);
                    verts.len() - 1
                });
            }
            next.push([f[0], mid[0], mid[2]]);
            next.push([f[1], mid[1], mid[0]]);
            next.push([f[2], mid[2], mid[1]]);
            next.push([mid[0], mid[1], mid[2]]);
        }
        faces = next;
    }
    verts
}

/// Achievable thrust along `d`, up to the constant per-rotor factor.
fn thrust_objective<S: Real>(dirs: &[Vector3<S>], d: &Vector3<S>) -> S {
    dirs.iter()
        .map(|q| d.dot(q).max(S::zero()))
        .fold(S::zero(), |a, b| a + b)
}

/// Monotone fixed-point ascent for the piecewise-linear thrust objective:
/// repeatedly renormalize the sum of the currently contributing axes,
/// optionally projected into the plane orthogonal to `constraint`.
fn refine_direction<S: Real>(
    dirs: &[Vector3<S>],
    mut d: Vector3<S>,
    constraint: Option<&Vector3<S>>,
) -> Vector3<S> {
    for _ in 0..128 {
        let mut g = Vector3::zeros();
        for q in dirs {
            if d.dot(q) > S::zero() {
                g += *q;
            }
        }
        if let Some(z) = constraint {
            g -= z * z.dot(&g);
        }
        if g.norm() < real::<S>(1e-30) {
            break;
        }
        let next = g.normalize();
        if (next - d).amax() < real::<S>(1e-15) {
            return next;
        }
        d = next;
    }
    d
}

/// Lexicographically-greatest comparison with a small per-component
/// tolerance, used to break ties between symmetric optima deterministically.
fn lex_greater<S: Real>(a: &Vector3<S>, b: &Vector3<S>) -> bool {
    let tol = real::<S>(1e-6);
    for c in 0..3 {
        if a[c] > b[c] + tol {
            return true;
        }
        if a[c] < b[c] - tol {
            return false;
        }
    }
    false
}

/// Canonical assembly frame: columns are the frame axes expressed in the
/// coordinates of `poses`. The z-axis maximizes the achievable thrust, the
/// x-axis maximizes the achievable thrust in the normal plane, y completes
/// the right-handed triad. Ties are broken toward the lexicographically
/// greatest axis.
pub fn assembly_frame<S: Real>(
    params: &ModuleParams<S>,
    poses: &[ModulePose<S>],
) -> Matrix3<S> {
    let _ = params; // identical modules: the frame depends only on the axes
    let dirs: Vec<Vector3<S>> = poses.iter().map(|p| p.thrust_dir).collect();

    let coarse = icosphere_directions::<S>(5);
    let mut best_value = S::zero();
    for d in &coarse {
        best_value = best_value.max(thrust_objective(&dirs, d));
    }
    let near = real::<S>(1.0 - 1e-3);
    let mut z_axis: Option<(S, Vector3<S>)> = None;
    for d in &coarse {
        if thrust_objective(&dirs, d) >= best_value * near {
            let refined = refine_direction(&dirs, *d, None);
            let value = thrust_objective(&dirs, &refined);
            let better = match &z_axis {
                None => true,
                Some((v, cur)) => {
                    value > *v * (S::one() + real(1e-9))
                        || (value >= *v * (S::one() - real(1e-9)) && lex_greater(&refined, cur))
                }
            };
            if better {
                z_axis = Some((value, refined));
            }
        }
    }
    let z = z_axis.expect("assembly has at least one module").1;

    // In-plane search for the x-axis over a dense circle.
    let seed = if z.x.abs() < real(0.9) {
        Vector3::x()
    } else {
        Vector3::y()
    };
    let u = (seed - z * z.dot(&seed)).normalize();
    let v = z.cross(&u);
    let samples = 1024usize;
    let mut best_value = S::zero();
    let mut circle = Vec::with_capacity(samples);
    for k in 0..samples {
        let angle = real::<S>(k as f64 / samples as f64) * S::two_pi();
        let d = u * angle.cos() + v * angle.sin();
        let value = thrust_objective(&dirs, &d);
        best_value = best_value.max(value);
        circle.push(d);
    }
    let mut x_axis: Option<(S, Vector3<S>)> = None;
    for d in circle {
        if thrust_objective(&dirs, &d) >= best_value * near {
            let refined = refine_direction(&dirs, d, Some(&z));
            let value = thrust_objective(&dirs, &refined);
            let better = match &x_axis {
                None => true,
                Some((best, cur)) => {
                    value > *best * (S::one() + real(1e-9))
                        || (value >= *best * (S::one() - real(1e-9)) && lex_greater(&refined, cur))
                }
            };
            if better {
                x_axis = Some((value, refined));
            }
        }
    }
    // Degenerate in-plane thrust (all axes collinear with z): fall back to
    // the seed direction so the frame stays well defined.
    let x = match x_axis {
        Some((value, d)) if value > real(1e-12) => d,
        _ => u,
    };
    // Re-orthogonalize against accumulated rounding.
    let x = (x - z * z.dot(&x)).normalize();
    let y = z.cross(&x);
    Matrix3::from_columns(&[x, y, z])
}

/// Numerical row rank of the configuration matrix. The tolerance scales
/// with the largest singular value, the column count and machine epsilon.
/// Ranks below four are out of scope and reported as an error.
pub fn controllable_dof<S: Real>(a: &DMatrix<S>) -> Result<usize, CoreError> {
    let svd = a.clone().svd(false, false);
    let sigma_max = svd.singular_values.max();
    let threshold =
        sigma_max * real::<S>(a.ncols() as f64) * S::default_epsilon() * real::<S>(1e3);
    let rank = svd
        .singular_values
        .iter()
        .filter(|s| **s > threshold)
        .count();
    if rank < 4 {
        return Err(CoreError::UnderactuatedBeyondScope { rank });
    }
    Ok(rank.min(6))
}

/// Derived rigid-body and actuation model of an assembly.
#[derive(Debug, Clone)]
pub struct AssemblyModel<S: Real> {
    pub params: ModuleParams<S>,
    pub poses: Vec<ModulePose<S>>,
    pub config: ConfigurationMatrix<S>,
    /// Inertia tensor about the COM in the assembly frame, kg m².
    pub inertia: Matrix3<S>,
    pub total_mass: S,
    /// Controllable degrees of freedom of the intact assembly (4..=6).
    pub dof: usize,
    /// Rotation from the intermediate build frame into the assembly frame.
    pub frame: Matrix3<S>,
}

impl<S: Real> AssemblyModel<S> {
    /// Builds the full model from a connection graph.
    pub fn from_graph(params: &ModuleParams<S>, graph: &ConnectionGraph) -> Result<Self, CoreError> {
        let built = build_assembly(params, graph)?;
        Self::from_built(params, built)
    }

    pub fn from_built(params: &ModuleParams<S>, built: BuiltAssembly<S>) -> Result<Self, CoreError> {
        let config = config_matrix(params, &built.poses);
        let inertia = inertia_tensor(params, &built.poses);
        let dof = controllable_dof(&config.matrix)?;
        let total_mass = params.mass * real::<S>(built.poses.len() as f64);
        Ok(Self {
            params: params.clone(),
            poses: built.poses,
            config,
            inertia,
            total_mass,
            dof,
            frame: built.frame,
        })
    }

    pub fn module_count(&self) -> usize {
        self.poses.len()
    }

    pub fn rotor_count(&self) -> usize {
        4 * self.poses.len()
    }
}
