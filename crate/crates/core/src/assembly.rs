//! Assembly construction: module poses from a connection graph with
//! mounting angles, plus geometric feasibility checks.
//!
//! A module is a standard quadrotor with four rotors on its diagonals and a
//! cross-shaped connector frame underneath, rotated 45 degrees from the rotor
//! diagonals. Connector faces are tilted by the mounting angle `alpha` from
//! the module plane; mated connectors may be twisted against each other by
//! `beta` about the shared face normal.

use nalgebra::{Matrix3, Vector3};

use crate::actuation;
use crate::error::CoreError;
use crate::scalar::{gravity, real, Real};
use crate::so3;

/// Physical parameters shared by every module of an assembly.
#[derive(Debug, Clone, PartialEq)]
pub struct ModuleParams<S: Real> {
    /// Mass of one module, kg.
    pub mass: S,
    /// Distance from module center to each rotor along the diagonals, m.
    pub arm_half_span: S,
    /// Length of each connector frame arm, m.
    pub frame_arm_length: S,
    /// Inertia tensor of one module about its own center, kg m².
    pub inertia: Matrix3<S>,
    /// Thrust constant: rotor thrust = c_F * omega², N s²/rad².
    pub thrust_coeff: S,
    /// Drag-torque constant: rotor torque = ±c_M * omega², N m s²/rad².
    pub drag_torque_coeff: S,
    /// Saturation bound on squared rotor speed, rad²/s².
    pub u_max: S,
    /// Connector tilt angle from the module plane, rad, in [pi/4, 3pi/4].
    pub alpha: S,
}

impl<S: Real> Default for ModuleParams<S> {
    fn default() -> Self {
        Self {
            mass: real(0.5),
            arm_half_span: real(0.15),
            frame_arm_length: real(0.20),
            inertia: Matrix3::from_diagonal(&Vector3::new(
                real(2.5e-3),
                real(2.5e-3),
                real(4.3e-3),
            )),
            thrust_coeff: real(3.25e-6),
            drag_torque_coeff: real(7.5e-8),
            u_max: real(2200.0 * 2200.0),
            alpha: S::frac_pi_2(),
        }
    }
}

impl<S: Real> ModuleParams<S> {
    /// Checks the parameter invariants.
    pub fn validate(&self) -> Result<(), CoreError> {
        let fail = |reason: &str| {
            Err(CoreError::InvalidParams {
                reason: reason.to_string(),
            })
        };
        if !(self.mass > S::zero()) {
            return fail("mass must be positive");
        }
        if !(self.arm_half_span > S::zero()) || !(self.frame_arm_length > S::zero()) {
            return fail("arm lengths must be positive");
        }
        if !(self.thrust_coeff > S::zero()) || !(self.drag_torque_coeff > S::zero()) {
            return fail("rotor constants must be positive");
        }
        if !(self.u_max > S::zero()) {
            return fail("u_max must be positive");
        }
        let eps = real::<S>(1e-9);
        if self.alpha < S::frac_pi_4() - eps || self.alpha > S::frac_pi_4() * real(3.0) + eps {
            return fail("alpha must lie in [pi/4, 3pi/4]");
        }
        let asym = (self.inertia - self.inertia.transpose()).amax();
        if asym > real::<S>(1e-12) * S::one().max(self.inertia.amax()) {
            return fail("module inertia must be symmetric");
        }
        if self.inertia.clone().cholesky().is_none() {
            return fail("module inertia must be positive definite");
        }
        Ok(())
    }

    /// Rotor offsets from the module center, module frame. Rotors sit on the
    /// diagonals at radius `arm_half_span`, numbered counterclockwise from
    /// the +x/+y diagonal.
    pub fn rotor_offsets(&self) -> [Vector3<S>; 4] {
        let d = self.arm_half_span * S::frac_1_sqrt_2();
        [
            Vector3::new(d, d, S::zero()),
            Vector3::new(-d, d, S::zero()),
            Vector3::new(-d, -d, S::zero()),
            Vector3::new(d, -d, S::zero()),
        ]
    }

    /// Drag-torque sign of rotor `j` (0-based): rotors alternate handedness.
    pub fn rotor_spin_sign(j: usize) -> S {
        if j % 2 == 0 {
            -S::one()
        } else {
            S::one()
        }
    }
}

/// Unit direction of connector arm `k` (0-based, one per quadrant).
fn connector_azimuth<S: Real>(k: usize) -> Vector3<S> {
    let one = S::one();
    let z = S::zero();
    match k {
        0 => Vector3::new(one, z, z),
        1 => Vector3::new(z, one, z),
        2 => Vector3::new(-one, z, z),
        3 => Vector3::new(z, -one, z),
        _ => unreachable!("connector index validated"),
    }
}

/// Orthonormal connector frame in the module frame: outward face normal,
/// an in-face tangent, and their completion.
struct ConnectorFrame<S: Real> {
    position: Vector3<S>,
    normal: Vector3<S>,
    tangent: Vector3<S>,
    binormal: Vector3<S>,
}

fn connector_frame<S: Real>(params: &ModuleParams<S>, k: usize) -> ConnectorFrame<S> {
    let a = connector_azimuth::<S>(k);
    let e3 = Vector3::z();
    let (sin_a, cos_a) = params.alpha.sin_cos();
    let normal = a * sin_a + e3 * cos_a;
    let tangent = e3.cross(&a);
    let binormal = normal.cross(&tangent);
    ConnectorFrame {
        position: a * params.frame_arm_length,
        normal,
        tangent,
        binormal,
    }
}

/// One edge of the connection tree: the child module is mounted on the
/// parent's connector with a right-handed twist `beta` about the mated
/// face normal. Module and connector indices are 0-based.
#[derive(Debug, Clone, PartialEq)]
pub struct Connection {
    pub parent: usize,
    pub parent_connector: usize,
    pub child: usize,
    pub child_connector: usize,
    pub beta: f64,
}

/// Spanning tree of the assembly, rooted at module 0.
#[derive(Debug, Clone, PartialEq)]
pub struct ConnectionGraph {
    pub module_count: usize,
    pub edges: Vec<Connection>,
}

impl ConnectionGraph {
    /// A single free-flying module.
    pub fn single() -> Self {
        Self {
            module_count: 1,
            edges: Vec::new(),
        }
    }

    /// Checks the tree, connector-occupancy and range invariants.
    pub fn validate(&self) -> Result<(), CoreError> {
        let n = self.module_count;
        if n == 0 {
            return Err(CoreError::NonTreeGraph {
                reason: "no modules".into(),
            });
        }
        if self.edges.len() != n - 1 {
            return Err(CoreError::NonTreeGraph {
                reason: format!("{} edges for {} modules", self.edges.len(), n),
            });
        }
        let mut has_parent = vec![false; n];
        let mut used = std::collections::HashSet::new();
        for e in &self.edges {
            for &m in &[e.parent, e.child] {
                if m >= n {
                    return Err(CoreError::UnknownModule {
                        module: m,
                        count: n,
                    });
                }
            }
            for &c in &[e.parent_connector, e.child_connector] {
                if c >= 4 {
                    return Err(CoreError::InvalidConnector { connector: c });
                }
            }
            if !(0.0..std::f64::consts::TAU).contains(&e.beta) {
                return Err(CoreError::BetaOutOfRange { beta: e.beta });
            }
            if e.child == 0 || has_parent[e.child] || e.child == e.parent {
                return Err(CoreError::NonTreeGraph {
                    reason: format!("module {} has conflicting parents", e.child),
                });
            }
            has_parent[e.child] = true;
            for &(m, c) in &[(e.parent, e.parent_connector), (e.child, e.child_connector)] {
                if !used.insert((m, c)) {
                    return Err(CoreError::ConnectorReuse {
                        module: m,
                        connector: c,
                    });
                }
            }
        }
        // n-1 edges with unique children and no child==0 implies connectivity,
        // but check reachability explicitly to reject stale parent links.
        let mut reached = vec![false; n];
        reached[0] = true;
        let mut frontier = vec![0usize];
        while let Some(m) = frontier.pop() {
            for e in &self.edges {
                if e.parent == m && !reached[e.child] {
                    reached[e.child] = true;
                    frontier.push(e.child);
                }
            }
        }
        if reached.iter().any(|r| !r) {
            return Err(CoreError::NonTreeGraph {
                reason: "graph is not connected from module 0".into(),
            });
        }
        Ok(())
    }
}

/// Pose of one module relative to the assembly frame (origin at the COM).
#[derive(Debug, Clone, PartialEq)]
pub struct ModulePose<S: Real> {
    /// Rotation of the module frame into the assembly frame.
    pub rotation: Matrix3<S>,
    /// Module center relative to the assembly COM, m.
    pub position: Vector3<S>,
    /// Rotor positions relative to the assembly COM, m.
    pub rotor_positions: [Vector3<S>; 4],
    /// Thrust direction of the module, `rotation * e3`.
    pub thrust_dir: Vector3<S>,
}

/// Result of [`build_assembly`]: module poses expressed in the assembly
/// frame, and the rotation that maps the intermediate build frame (root
/// module at identity) into the assembly frame.
#[derive(Debug, Clone, PartialEq)]
pub struct BuiltAssembly<S: Real> {
    pub poses: Vec<ModulePose<S>>,
    pub frame: Matrix3<S>,
}

/// Places every module by walking the connection tree, centers the COM and
/// rotates the result into the canonical assembly frame (z along the
/// maximum-thrust direction).
pub fn build_assembly<S: Real>(
    params: &ModuleParams<S>,
    graph: &ConnectionGraph,
) -> Result<BuiltAssembly<S>, CoreError> {
    params.validate()?;
    graph.validate()?;
    let n = graph.module_count;

    let mut rotations: Vec<Option<Matrix3<S>>> = vec![None; n];
    let mut positions: Vec<Option<Vector3<S>>> = vec![None; n];
    rotations[0] = Some(Matrix3::identity());
    positions[0] = Some(Vector3::zeros());

    // Children attach where both connector faces coincide; beta twists the
    // child about the parent's outward face normal.
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(parent) = queue.pop_front() {
        let r_p = rotations[parent].unwrap();
        let t_p = positions[parent].unwrap();
        for e in graph.edges.iter().filter(|e| e.parent == parent) {
            let pc = connector_frame(params, e.parent_connector);
            let cc = connector_frame(params, e.child_connector);
            let n_p = r_p * pc.normal;
            let s_p = r_p * pc.tangent;
            let b_p = r_p * pc.binormal;
            let mate = Matrix3::from_columns(&[-n_p, -s_p, b_p]);
            let child_triad = Matrix3::from_columns(&[cc.normal, cc.tangent, cc.binormal]);
            let base = mate * child_triad.transpose();
            let r_c = so3::axis_angle(&n_p, real::<S>(e.beta)) * base;
            let t_c = t_p + r_p * pc.position - r_c * cc.position;
            rotations[e.child] = Some(r_c);
            positions[e.child] = Some(t_c);
            queue.push_back(e.child);
        }
    }

    // Equal masses: the COM is the mean of the module centers.
    let mut com = Vector3::zeros();
    for t in &positions {
        com += t.unwrap();
    }
    com /= real::<S>(n as f64);

    let make_pose = |r: Matrix3<S>, t: Vector3<S>| {
        let rotor_positions = params.rotor_offsets().map(|o| t + r * o);
        ModulePose {
            rotation: r,
            position: t,
            rotor_positions,
            thrust_dir: r * Vector3::z(),
        }
    };
    let intermediate: Vec<ModulePose<S>> = rotations
        .into_iter()
        .zip(positions)
        .map(|(r, t)| make_pose(r.unwrap(), t.unwrap() - com))
        .collect();

    // Canonical assembly frame from the achievable-thrust maxima.
    let axes = actuation::assembly_frame(params, &intermediate);
    let to_assembly = axes.transpose();
    let poses = intermediate
        .into_iter()
        .map(|p| make_pose(to_assembly * p.rotation, to_assembly * p.position))
        .collect();
    Ok(BuiltAssembly {
        poses,
        frame: to_assembly,
    })
}

/// Outcome of the three configuration checks, with per-pair diagnostics.
#[derive(Debug, Clone)]
pub struct FeasibilityReport<S: Real> {
    /// No two non-mated module bounding spheres overlap.
    pub space_ok: bool,
    /// Module pairs closer than the sphere threshold, with their distance.
    pub space_violations: Vec<(usize, usize, S)>,
    /// Achievable thrust along the hover direction exceeds the weight.
    pub thrust_ok: bool,
    pub max_thrust: S,
    pub required_thrust: S,
    /// No module center sits in another module's downwash column.
    pub downwash_ok: bool,
    /// (source module, module in its downwash) pairs.
    pub downwash_violations: Vec<(usize, usize)>,
}

impl<S: Real> FeasibilityReport<S> {
    pub fn all_ok(&self) -> bool {
        self.space_ok && self.thrust_ok && self.downwash_ok
    }
}

impl<S: Real> std::fmt::Display for FeasibilityReport<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(
            f,
            "space:    {}",
            if self.space_ok {
                "ok".to_string()
            } else {
                format!(
                    "modules too close: {:?}",
                    self.space_violations
                        .iter()
                        .map(|(i, k, _)| (i, k))
                        .collect::<Vec<_>>()
                )
            }
        )?;
        writeln!(
            f,
            "thrust:   {} (max {:.2?} N along hover direction, weight {:.2?} N)",
            if self.thrust_ok { "ok" } else { "insufficient" },
            self.max_thrust,
            self.required_thrust
        )?;
        write!(
            f,
            "downwash: {}",
            if self.downwash_ok {
                "ok".to_string()
            } else {
                format!("modules in airflow: {:?}", self.downwash_violations)
            }
        )
    }
}

/// Collision margin for the sphere and downwash-cylinder proxies, m.
pub fn collision_margin<S: Real>() -> S {
    real(0.02)
}

/// Runs the three configuration checks: available space (bounding spheres,
/// mated neighbours excluded), achievable thrust along `hover_dir` against
/// the assembly weight, and the no-module-under-the-airflow rule.
pub fn check_feasibility<S: Real>(
    params: &ModuleParams<S>,
    poses: &[ModulePose<S>],
    hover_dir: &Vector3<S>,
) -> FeasibilityReport<S> {
    let n = poses.len();
    let margin = collision_margin::<S>();
    let radius = params.arm_half_span.max(params.frame_arm_length) + margin;

    // Connector faces that coincide (anti-parallel normals at the same
    // point) are physically mated; those pairs legitimately touch.
    let mut mated = std::collections::HashSet::new();
    let tol = real::<S>(1e-6);
    for i in 0..n {
        for k in (i + 1)..n {
            'faces: for a in 0..4 {
                for b in 0..4 {
                    let fa = connector_frame(params, a);
                    let fb = connector_frame(params, b);
                    let pa = poses[i].position + poses[i].rotation * fa.position;
                    let pb = poses[k].position + poses[k].rotation * fb.position;
                    let na = poses[i].rotation * fa.normal;
                    let nb = poses[k].rotation * fb.normal;
                    if (pa - pb).norm() < tol && na.dot(&nb) < -S::one() + tol {
                        mated.insert((i, k));
                        break 'faces;
                    }
                }
            }
        }
    }

    let mut space_violations = Vec::new();
    for i in 0..n {
        for k in (i + 1)..n {
            if mated.contains(&(i, k)) {
                continue;
            }
            let dist = (poses[i].position - poses[k].position).norm();
            if dist < radius + radius {
                space_violations.push((i, k, dist));
            }
        }
    }

    let max_thrust = actuation::max_thrust_in_direction(params, poses, hover_dir);
    let required_thrust = real::<S>(n as f64) * params.mass * gravity::<S>();

    let cyl_radius = params.arm_half_span + margin;
    let mut downwash_violations = Vec::new();
    for i in 0..n {
        for k in 0..n {
            if i == k {
                continue;
            }
            // Downwash streams opposite the thrust direction, from the
            // rotor plane outward.
            let v = poses[k].position - poses[i].position;
            let axial = v.dot(&-poses[i].thrust_dir);
            if axial > S::zero() {
                let radial = (v + poses[i].thrust_dir * axial).norm();
                if radial < cyl_radius {
                    downwash_violations.push((i, k));
                }
            }
        }
    }

    FeasibilityReport {
        space_ok: space_violations.is_empty(),
        space_violations,
        thrust_ok: max_thrust > required_thrust,
        max_thrust,
        required_thrust,
        downwash_ok: downwash_violations.is_empty(),
        downwash_violations,
    }
}

/// Convenience builders for common assembly layouts.
impl ConnectionGraph {
    /// Open chain: module i's +x connector to module i+1's -x connector.
    pub fn chain(module_count: usize, beta: f64) -> Self {
        let edges = (0..module_count.saturating_sub(1))
            .map(|i| Connection {
                parent: i,
                parent_connector: 0,
                child: i + 1,
                child_connector: 2,
                beta,
            })
            .collect();
        Self {
            module_count,
            edges,
        }
    }

    /// Star: children mounted round-robin on the connectors of the hub,
    /// then on the outward connectors of earlier children (breadth-first).
    pub fn star(module_count: usize, beta: f64) -> Self {
        let mut edges = Vec::new();
        let mut next_child = 1usize;
        // Hub connectors first, then each child's outward connector.
        'outer: for parent in 0..module_count {
            let connectors: &[usize] = if parent == 0 { &[0, 1, 2, 3] } else { &[0] };
            for &pc in connectors {
                if next_child >= module_count {
                    break 'outer;
                }
                // A child hangs by the connector facing its parent.
                let cc = if parent == 0 { (pc + 2) % 4 } else { 2 };
                edges.push(Connection {
                    parent,
                    parent_connector: pc,
                    child: next_child,
                    child_connector: cc,
                    beta,
                });
                next_child += 1;
            }
        }
        Self {
            module_count,
            edges,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    type P = ModuleParams<f64>;

    #[test]
    fn single_module_is_trivial() {
        let params = P::default();
        let built = build_assembly(&params, &ConnectionGraph::single()).unwrap();
        assert_eq!(built.poses.len(), 1);
        let p = &built.poses[0];
        assert_relative_eq!(p.rotation, Matrix3::identity(), epsilon = 1e-12);
        assert_relative_eq!(p.position, Vector3::zeros(), epsilon = 1e-12);
        for o in &p.rotor_positions {
            assert_relative_eq!(o.norm(), params.arm_half_span, epsilon = 1e-12);
            assert_relative_eq!(o.z, 0.0, epsilon = 1e-15);
        }
        assert_relative_eq!(p.thrust_dir, Vector3::z(), epsilon = 1e-12);
    }

    #[test]
    fn modquad_reduction_is_planar_and_collinear() {
        // alpha = pi/2 makes connector faces vertical; beta = 0 preserves
        // heading, so a chain reduces to identically oriented modules in a
        // row. Composing the two connector triads symbolically: the mate
        // maps the child's (-x, -y, z) axes onto the parent's, which is the
        // identity, so q_child == q_parent exactly.
        let params = P {
            alpha: std::f64::consts::FRAC_PI_2,
            ..P::default()
        };
        let built = build_assembly(&params, &ConnectionGraph::chain(2, 0.0)).unwrap();
        let q0 = built.poses[0].thrust_dir;
        let q1 = built.poses[1].thrust_dir;
        assert!((q0 - q1).amax() < 1e-12);
        // Separation along the build x-axis by two arm lengths.
        let sep = built.poses[1].position - built.poses[0].position;
        assert_relative_eq!(sep.norm(), 2.0 * params.frame_arm_length, epsilon = 1e-12);
    }

    #[test]
    fn longer_collinear_chain_keeps_all_thrust_axes_equal() {
        let params = P {
            alpha: std::f64::consts::FRAC_PI_2,
            ..P::default()
        };
        let built = build_assembly(&params, &ConnectionGraph::chain(4, 0.0)).unwrap();
        for p in &built.poses[1..] {
            assert!((p.thrust_dir - built.poses[0].thrust_dir).amax() < 1e-12);
        }
    }

    #[test]
    fn three_module_tilted_assembly_has_noncollinear_thrust() {
        let params = P {
            alpha: 4.0 * std::f64::consts::PI / 9.0,
            ..P::default()
        };
        let graph = ConnectionGraph::chain(3, std::f64::consts::PI / 9.0);
        let built = build_assembly(&params, &graph).unwrap();
        for i in 0..3 {
            for k in (i + 1)..3 {
                let cross = built.poses[i]
                    .thrust_dir
                    .cross(&built.poses[k].thrust_dir)
                    .norm();
                assert!(cross > 1e-3, "thrust axes {i} and {k} collinear");
            }
        }
    }

    #[test]
    fn com_is_centered() {
        let params = P {
            alpha: 4.0 * std::f64::consts::PI / 9.0,
            ..P::default()
        };
        for graph in [
            ConnectionGraph::chain(3, 0.35),
            ConnectionGraph::star(5, 0.0),
            ConnectionGraph::star(7, 0.1),
        ] {
            let built = build_assembly(&params, &graph).unwrap();
            let sum: Vector3<f64> = built.poses.iter().map(|p| p.position).sum();
            let bound = 1e-12 * graph.module_count as f64 * params.frame_arm_length;
            assert!(sum.norm() <= bound, "COM offset {} > {}", sum.norm(), bound);
        }
    }

    #[test]
    fn rotations_stay_orthonormal() {
        let params = P {
            alpha: 0.6 * std::f64::consts::PI,
            ..P::default()
        };
        let built = build_assembly(&params, &ConnectionGraph::star(6, 1.1)).unwrap();
        for p in &built.poses {
            assert!(crate::so3::orthonormality_defect(&p.rotation) < 1e-12);
            assert!(p.rotation.determinant() > 0.0);
            assert_relative_eq!(p.thrust_dir.norm(), 1.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn build_is_deterministic() {
        let params = P {
            alpha: 4.0 * std::f64::consts::PI / 9.0,
            ..P::default()
        };
        let graph = ConnectionGraph::star(7, 0.2);
        let a = build_assembly(&params, &graph).unwrap();
        let b = build_assembly(&params, &graph).unwrap();
        assert_eq!(a, b, "identical inputs must give bit-identical poses");
    }

    #[test]
    fn graph_validation_rejects_malformed_inputs() {
        let mut g = ConnectionGraph::chain(3, 0.0);
        g.edges.pop();
        assert!(matches!(
            g.validate(),
            Err(CoreError::NonTreeGraph { .. })
        ));

        let mut g = ConnectionGraph::chain(3, 0.0);
        g.edges[1].child = 1; // duplicate child
        assert!(g.validate().is_err());

        let mut g = ConnectionGraph::chain(2, 0.0);
        g.edges[0].beta = 7.0;
        assert!(matches!(
            g.validate(),
            Err(CoreError::BetaOutOfRange { .. })
        ));

        let mut g = ConnectionGraph::chain(2, 0.0);
        g.edges[0].parent_connector = 4;
        assert!(matches!(
            g.validate(),
            Err(CoreError::InvalidConnector { .. })
        ));

        // Same connector used by two children.
        let g = ConnectionGraph {
            module_count: 3,
            edges: vec![
                Connection {
                    parent: 0,
                    parent_connector: 0,
                    child: 1,
                    child_connector: 2,
                    beta: 0.0,
                },
                Connection {
                    parent: 0,
                    parent_connector: 0,
                    child: 2,
                    child_connector: 2,
                    beta: 0.0,
                },
            ],
        };
        assert!(matches!(
            g.validate(),
            Err(CoreError::ConnectorReuse { .. })
        ));
    }

    #[test]
    fn params_validation_rejects_bad_values() {
        let bad_alpha = P {
            alpha: 0.1,
            ..P::default()
        };
        assert!(bad_alpha.validate().is_err());
        let bad_mass = P {
            mass: 0.0,
            ..P::default()
        };
        assert!(bad_mass.validate().is_err());
        let bad_inertia = P {
            inertia: Matrix3::from_diagonal(&Vector3::new(1.0, -1.0, 1.0)),
            ..P::default()
        };
        assert!(bad_inertia.validate().is_err());
    }

    #[test]
    fn feasibility_single_module_passes() {
        let params = P::default();
        let built = build_assembly(&params, &ConnectionGraph::single()).unwrap();
        let report = check_feasibility(&params, &built.poses, &Vector3::z());
        assert!(report.all_ok(), "{report}");
    }

    #[test]
    fn feasibility_identical_poses_fail_space_check() {
        let params = P::default();
        let built = build_assembly(&params, &ConnectionGraph::single()).unwrap();
        let doubled = vec![built.poses[0].clone(), built.poses[0].clone()];
        let report = check_feasibility(&params, &doubled, &Vector3::z());
        assert!(!report.space_ok);
    }

    #[test]
    fn feasibility_three_module_assembly_passes() {
        let params = P {
            alpha: 4.0 * std::f64::consts::PI / 9.0,
            ..P::default()
        };
        let graph = ConnectionGraph::chain(3, std::f64::consts::PI / 9.0);
        let built = build_assembly(&params, &graph).unwrap();
        let report = check_feasibility(&params, &built.poses, &Vector3::z());
        assert!(report.all_ok(), "{report}");
    }
}
