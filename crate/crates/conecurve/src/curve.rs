//! Directed closed curves on a surface: validation, side angles, turns,
//! curvature partition, and classification.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::geom::{orient, segment_intersection, Vec2};
use crate::scalar::Real;
use crate::surface::fan::PointFan;
use crate::surface::mesh::{edge_key, Curvature, IntrinsicSurface, VertexId};
use crate::surface::point::SurfacePoint;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Side::Left => write!(f, "left"),
            Side::Right => write!(f, "right"),
        }
    }
}

/// One straight piece of the curve inside a single face.
#[derive(Clone, Debug)]
pub struct CurveArc<T> {
    pub face: usize,
    pub from: Vec2<T>,
    pub to: Vec2<T>,
    pub length: T,
}

/// Surface angles on both sides of a waypoint.
#[derive(Clone, Copy, Debug)]
pub struct WaypointAngles<T> {
    pub left: T,
    pub right: T,
    pub omega: T,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub enum CurveViolation {
    TooFewWaypoints,
    NoCommonFace { arc: usize },
    AmbiguousArcFace { arc: usize },
    DegenerateArc { arc: usize },
    DuplicateWaypoint { first: usize, second: usize },
    ArcThroughVertex { arc: usize, vertex: VertexId },
    SelfIntersection { arc_a: usize, arc_b: usize },
    BoundaryWaypoint { index: usize },
    AngleFailure { index: usize, message: String },
    LoopPointOutOfRange { index: usize },
}

impl std::fmt::Display for CurveViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        use CurveViolation::*;
        match self {
            TooFewWaypoints => write!(f, "a closed curve needs at least two waypoints"),
            NoCommonFace { arc } => write!(f, "waypoints of arc {arc} share no face"),
            AmbiguousArcFace { arc } => {
                write!(f, "arc {arc} admits several faces; add an edge crossing")
            }
            DegenerateArc { arc } => write!(f, "arc {arc} has zero length"),
            DuplicateWaypoint { first, second } => {
                write!(f, "waypoints {first} and {second} coincide")
            }
            ArcThroughVertex { arc, vertex } => {
                write!(f, "arc {arc} passes through vertex {vertex}; make it a waypoint")
            }
            SelfIntersection { arc_a, arc_b } => {
                write!(f, "arcs {arc_a} and {arc_b} intersect")
            }
            BoundaryWaypoint { index } => {
                write!(f, "waypoint {index} lies on the surface boundary")
            }
            AngleFailure { index, message } => {
                write!(f, "cannot measure side angles at waypoint {index}: {message}")
            }
            LoopPointOutOfRange { index } => write!(f, "declared loop point {index} out of range"),
        }
    }
}

/// Result of `validate_curve`.
#[derive(Debug)]
pub struct CurveReport<T> {
    pub violations: Vec<CurveViolation>,
    /// Indices of waypoints where the curve turns.
    pub corners: Vec<usize>,
    pub angles: Vec<WaypointAngles<T>>,
    /// Exactly two mutually reverse arcs along one segment (allowed
    /// degenerate shape: a doubled segment bounding an empty region).
    pub doubled_segment: bool,
    pub total_length: T,
}

impl<T> CurveReport<T> {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Debug, thiserror::Error)]
#[error("invalid curve: {}", .violations.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
pub struct InvalidCurve {
    pub violations: Vec<CurveViolation>,
}

/// A validated simple closed directed curve.
#[derive(Clone, Debug)]
pub struct SurfaceCurve<'a, T> {
    surface: &'a IntrinsicSurface<T>,
    waypoints: Vec<SurfacePoint<T>>,
    declared_loop: Option<usize>,
    arcs: Vec<CurveArc<T>>,
    angles: Vec<WaypointAngles<T>>,
    corners: Vec<usize>,
    doubled_segment: bool,
}

/// Reporting variant of curve validation: never fails, lists all problems.
pub fn validate_curve<'a, T: Real>(
    surface: &'a IntrinsicSurface<T>,
    waypoints: &[SurfacePoint<T>],
    declared_loop: Option<usize>,
    tol: T,
) -> CurveReport<T> {
    match analyze(surface, waypoints, declared_loop, tol) {
        Ok(curve) => CurveReport {
            violations: Vec::new(),
            corners: curve.corners.clone(),
            angles: curve.angles.clone(),
            doubled_segment: curve.doubled_segment,
            total_length: curve.total_length(),
        },
        Err(violations) => CurveReport {
            violations,
            corners: Vec::new(),
            angles: Vec::new(),
            doubled_segment: false,
            total_length: T::zero(),
        },
    }
}

fn analyze<'a, T: Real>(
    surface: &'a IntrinsicSurface<T>,
    waypoints: &[SurfacePoint<T>],
    declared_loop: Option<usize>,
    tol: T,
) -> Result<SurfaceCurve<'a, T>, Vec<CurveViolation>> {
    let mut violations = Vec::new();
    let n = waypoints.len();
    if n < 2 {
        return Err(vec![CurveViolation::TooFewWaypoints]);
    }
    if let Some(lp) = declared_loop {
        if lp >= n {
            violations.push(CurveViolation::LoopPointOutOfRange { index: lp });
        }
    }
    let scale = surface.edges().map(|(_, l)| l).fold(T::zero(), |a, b| a.max(b));
    let eps = tol * scale.max(T::one());

    // Waypoint distinctness.
    for i in 0..n {
        for j in (i + 1)..n {
            if waypoints[i].same_point(&waypoints[j], surface, eps) {
                violations.push(CurveViolation::DuplicateWaypoint { first: i, second: j });
            }
        }
        if let Some(v) = waypoints[i].as_vertex() {
            if surface.is_boundary_vertex(v) {
                violations.push(CurveViolation::BoundaryWaypoint { index: i });
            }
        }
    }

    // Arcs.
    let mut arcs = Vec::with_capacity(n);
    for i in 0..n {
        let a = &waypoints[i];
        let b = &waypoints[(i + 1) % n];
        match arc_face(surface, a, b) {
            Ok(face) => {
                let pa = a.chart_pos(surface, face).unwrap();
                let pb = b.chart_pos(surface, face).unwrap();
                let length = pa.dist(pb);
                if length <= eps {
                    violations.push(CurveViolation::DegenerateArc { arc: i });
                }
                // straight arcs may not pass through a chart corner
                let labels = surface.face_labels(face);
                for slot in 0..3 {
                    let c = surface.chart(face)[slot];
                    let d = crate::geom::point_segment_distance(c, pa, pb);
                    if d <= eps && c.dist(pa) > eps && c.dist(pb) > eps {
                        violations.push(CurveViolation::ArcThroughVertex {
                            arc: i,
                            vertex: labels[slot],
                        });
                    }
                }
                arcs.push(CurveArc { face, from: pa, to: pb, length });
            }
            Err(v) => {
                violations.push(v);
                arcs.push(CurveArc {
                    face: usize::MAX,
                    from: Vec2::zero(),
                    to: Vec2::zero(),
                    length: T::zero(),
                });
            }
        }
    }
    if !violations.is_empty() {
        return Err(violations);
    }

    // A two-arc curve is necessarily a doubled segment; larger curves must be
    // simple in the usual sense.
    let doubled_segment = n == 2;
    if !doubled_segment {
        let mut by_face: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (i, arc) in arcs.iter().enumerate() {
            by_face.entry(arc.face).or_default().push(i);
        }
        for idxs in by_face.values() {
            for (k, &i) in idxs.iter().enumerate() {
                for &j in &idxs[k + 1..] {
                    let adjacent = (j == (i + 1) % n) || (i == (j + 1) % n);
                    let (a, b) = (&arcs[i], &arcs[j]);
                    if let Some((_, _, p)) =
                        segment_intersection(a.from, a.to, b.from, b.to, eps)
                    {
                        if adjacent {
                            // only the shared waypoint may touch
                            let shared =
                                if j == (i + 1) % n { a.to } else { b.to };
                            if p.dist(shared) > eps * T::two() {
                                violations
                                    .push(CurveViolation::SelfIntersection { arc_a: i, arc_b: j });
                            }
                        } else {
                            violations.push(CurveViolation::SelfIntersection { arc_a: i, arc_b: j });
                        }
                    }
                }
            }
        }
    }
    if !violations.is_empty() {
        return Err(violations);
    }

    // Side angles at every waypoint.
    let mut angles = Vec::with_capacity(n);
    for i in 0..n {
        let incoming = &arcs[(i + n - 1) % n];
        let outgoing = &arcs[i];
        match side_angles_at(surface, &waypoints[i], incoming, outgoing) {
            Ok(w) => angles.push(w),
            Err(msg) => {
                violations.push(CurveViolation::AngleFailure { index: i, message: msg });
                angles.push(WaypointAngles { left: T::zero(), right: T::zero(), omega: T::zero() });
            }
        }
    }
    if !violations.is_empty() {
        return Err(violations);
    }

    let corners: Vec<usize> = (0..n)
        .filter(|&i| {
            (angles[i].left - T::pi()).abs() > tol || (angles[i].right - T::pi()).abs() > tol
        })
        .collect();

    Ok(SurfaceCurve {
        surface,
        waypoints: waypoints.to_vec(),
        declared_loop,
        arcs,
        angles,
        corners,
        doubled_segment,
    })
}

/// Face carrying the straight arc between two waypoints.
fn arc_face<T: Real>(
    surface: &IntrinsicSurface<T>,
    a: &SurfacePoint<T>,
    b: &SurfacePoint<T>,
) -> Result<usize, CurveViolation> {
    let fa = a.faces(surface);
    let mut shared: Vec<usize> = fa.into_iter().filter(|f| b.faces(surface).contains(f)).collect();
    shared.sort_unstable();
    shared.dedup();
    match shared.len() {
        0 => Err(CurveViolation::NoCommonFace { arc: usize::MAX }),
        1 => Ok(shared[0]),
        _ => {
            // Several candidates: legitimate only for an arc running along a
            // shared edge, where the direction of travel picks the left face.
            if let Some((ea, eb, ta, tb)) = common_edge_params(surface, a, b) {
                let (u, v) = if ta < tb { (ea, eb) } else { (eb, ea) };
                if let Some(f) = surface.face_with_directed_edge(u, v) {
                    return Ok(f);
                }
                if let Some(f) = surface.face_with_directed_edge(v, u) {
                    return Ok(f);
                }
            }
            Err(CurveViolation::AmbiguousArcFace { arc: usize::MAX })
        }
    }
}

/// If both points lie on one edge, its endpoints plus their parameters.
fn common_edge_params<T: Real>(
    surface: &IntrinsicSurface<T>,
    a: &SurfacePoint<T>,
    b: &SurfacePoint<T>,
) -> Option<(VertexId, VertexId, T, T)> {
    let edges_of = |p: &SurfacePoint<T>| -> Vec<(VertexId, VertexId)> {
        match *p {
            SurfacePoint::Vertex(v) => {
                let mut out = Vec::new();
                for ((x, y), _) in surface.edges() {
                    if x == v || y == v {
                        out.push(edge_key(x, y));
                    }
                }
                out
            }
            SurfacePoint::Edge { a, b, .. } => vec![(a, b)],
            SurfacePoint::Face { .. } => Vec::new(),
        }
    };
    let ea = edges_of(a);
    for e in edges_of(b) {
        if ea.contains(&e) {
            let param = |p: &SurfacePoint<T>| -> T {
                match *p {
                    SurfacePoint::Vertex(v) if v == e.0 => T::zero(),
                    SurfacePoint::Vertex(_) => T::one(),
                    SurfacePoint::Edge { t, .. } => t,
                    SurfacePoint::Face { .. } => unreachable!(),
                }
            };
            return Some((e.0, e.1, param(a), param(b)));
        }
    }
    None
}

fn side_angles_at<T: Real>(
    surface: &IntrinsicSurface<T>,
    p: &SurfacePoint<T>,
    incoming: &CurveArc<T>,
    outgoing: &CurveArc<T>,
) -> Result<WaypointAngles<T>, String> {
    let fan = PointFan::at(surface, p).map_err(|e| e.to_string())?;
    let g_out = fan.angle_of(outgoing.face, outgoing.to).map_err(|e| e.to_string())?;
    let g_back = fan.angle_of(incoming.face, incoming.from).map_err(|e| e.to_string())?;
    let left = fan.ccw_sweep(g_out, g_back);
    let right = fan.total - left;
    let omega = match p {
        SurfacePoint::Vertex(v) => match surface.vertex_curvature(*v) {
            Curvature::Interior(w) => w,
            Curvature::Boundary(_) => return Err("boundary vertex".into()),
        },
        _ => T::zero(),
    };
    Ok(WaypointAngles { left, right, omega })
}

impl<'a, T: Real> SurfaceCurve<'a, T> {
    pub fn new(
        surface: &'a IntrinsicSurface<T>,
        waypoints: Vec<SurfacePoint<T>>,
        declared_loop: Option<usize>,
        tol: T,
    ) -> Result<Self, InvalidCurve> {
        analyze(surface, &waypoints, declared_loop, tol)
            .map_err(|violations| InvalidCurve { violations })
    }

    pub fn surface(&self) -> &'a IntrinsicSurface<T> {
        self.surface
    }

    pub fn waypoints(&self) -> &[SurfacePoint<T>] {
        &self.waypoints
    }

    pub fn arcs(&self) -> &[CurveArc<T>] {
        &self.arcs
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn corners(&self) -> &[usize] {
        &self.corners
    }

    pub fn declared_loop(&self) -> Option<usize> {
        self.declared_loop
    }

    pub fn is_doubled_segment(&self) -> bool {
        self.doubled_segment
    }

    pub fn total_length(&self) -> T {
        self.arcs.iter().fold(T::zero(), |acc, a| acc + a.length)
    }

    /// (left, right) surface angles at waypoint `i`.
    pub fn side_angles(&self, i: usize) -> (T, T) {
        let w = &self.angles[i];
        (w.left, w.right)
    }

    pub fn waypoint_angles(&self) -> &[WaypointAngles<T>] {
        &self.angles
    }

    pub fn angle_on(&self, i: usize, side: Side) -> T {
        match side {
            Side::Left => self.angles[i].left,
            Side::Right => self.angles[i].right,
        }
    }

    /// Signed left turn at waypoint `i` for a development of `side`.
    ///
    /// Left developments turn by pi - L; right developments by R - pi, so
    /// that the developed material lies on the chosen side of the image.
    pub fn development_turn(&self, i: usize, side: Side) -> T {
        match side {
            Side::Left => T::pi() - self.angles[i].left,
            Side::Right => self.angles[i].right - T::pi(),
        }
    }

    /// The same curve traversed backwards (left and right swap).
    pub fn reversed(&self) -> SurfaceCurve<'a, T> {
        let mut waypoints = self.waypoints.clone();
        waypoints.reverse();
        let n = waypoints.len();
        let declared = self.declared_loop.map(|i| (n - 1 - i) % n);
        analyze(self.surface, &waypoints, declared, T::c(1e-9))
            .expect("reversal of a valid curve is valid")
    }

    pub fn curvature_partition(&self, tol: T) -> Result<CurvatureReport<T>, PartitionError> {
        curvature_partition(self, tol)
    }

    pub fn classify(&self, tol: T) -> CurveClassification {
        classify(self, tol)
    }

    pub fn other_side_class(&self, tol: T) -> OtherSideReport {
        other_side_class(self, tol)
    }
}

// ---------------------------------------------------------------------------
// Curvature partition
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, Serialize)]
pub struct CornerData<T> {
    pub waypoint: usize,
    pub alpha: T,
    pub beta: T,
    pub omega: T,
    pub tau_left: T,
    pub tau_right: T,
}

#[derive(Clone, Debug, Serialize)]
pub struct CurvatureReport<T> {
    pub omega_left: T,
    pub omega_on: T,
    pub omega_right: T,
    pub tau_left: T,
    pub tau_right: T,
    pub corners: Vec<CornerData<T>>,
    pub left_vertices: Vec<VertexId>,
    pub right_vertices: Vec<VertexId>,
}

#[derive(Debug, thiserror::Error)]
pub enum PartitionError {
    #[error("surface is not closed and convex")]
    NotConvexClosed,
    #[error("vertex {0} could not be assigned to a side")]
    Unassigned(VertexId),
    #[error("sides are not separated by the curve (vertex {0} reached from both)")]
    NotSeparating(VertexId),
}

pub fn curvature_partition<T: Real>(
    curve: &SurfaceCurve<'_, T>,
    tol: T,
) -> Result<CurvatureReport<T>, PartitionError> {
    let s = curve.surface();
    if !s.is_convex(tol) {
        return Err(PartitionError::NotConvexClosed);
    }
    let scale = s.edges().map(|(_, l)| l).fold(T::zero(), |a, b| a.max(b));
    let eps = tol * scale.max(T::one());

    let on_curve: BTreeSet<VertexId> =
        curve.waypoints().iter().filter_map(|w| w.as_vertex()).collect();

    // Edges the curve touches are not traversable.
    let mut blocked: BTreeSet<(VertexId, VertexId)> = BTreeSet::new();
    for w in curve.waypoints() {
        if let SurfacePoint::Edge { a, b, .. } = w {
            blocked.insert(edge_key(*a, *b));
        }
    }
    for i in 0..curve.arc_count() {
        let a = &curve.waypoints()[i];
        let b = &curve.waypoints()[(i + 1) % curve.arc_count()];
        if let Some((ea, eb, _, _)) = common_edge_params(s, a, b) {
            // arcs running along an edge seal it
            let arc = &curve.arcs()[i];
            let labels = s.face_labels(arc.face);
            for slot in 0..3 {
                let (u, v) = (labels[slot], labels[(slot + 1) % 3]);
                if edge_key(u, v) == (ea, eb) {
                    blocked.insert((ea, eb));
                }
            }
        }
    }

    // Seed sides from arc geometry.
    let mut side: BTreeMap<VertexId, Side> = BTreeMap::new();
    let mut conflict: Option<VertexId> = None;
    for arc in curve.arcs() {
        let labels = s.face_labels(arc.face);
        for slot in 0..3 {
            let v = labels[slot];
            if on_curve.contains(&v) {
                continue;
            }
            let c = s.chart(arc.face)[slot];
            let o = orient(arc.from, arc.to, c);
            let assign = if o > eps {
                Some(Side::Left)
            } else if o < -eps {
                Some(Side::Right)
            } else {
                None
            };
            if let Some(side_new) = assign {
                if let Some(prev) = side.insert(v, side_new) {
                    if prev != side_new {
                        conflict = Some(v);
                    }
                }
            }
        }
    }
    if let Some(v) = conflict {
        return Err(PartitionError::NotSeparating(v));
    }

    // Flood along unblocked edges, never through on-curve vertices.
    let mut queue: Vec<VertexId> = side.keys().copied().collect();
    while let Some(v) = queue.pop() {
        let sv = side[&v];
        for ((a, b), _) in s.edges() {
            let other = if a == v {
                b
            } else if b == v {
                a
            } else {
                continue;
            };
            if on_curve.contains(&other) || blocked.contains(&edge_key(a, b)) {
                continue;
            }
            match side.get(&other) {
                None => {
                    side.insert(other, sv);
                    queue.push(other);
                }
                Some(&prev) if prev != sv => return Err(PartitionError::NotSeparating(other)),
                _ => {}
            }
        }
    }

    let mut omega_left = T::zero();
    let mut omega_right = T::zero();
    let mut left_vertices = Vec::new();
    let mut right_vertices = Vec::new();
    for &v in s.vertex_ids() {
        if on_curve.contains(&v) {
            continue;
        }
        let w = match s.vertex_curvature(v) {
            Curvature::Interior(w) => w,
            Curvature::Boundary(_) => return Err(PartitionError::NotConvexClosed),
        };
        match side.get(&v) {
            Some(Side::Left) => {
                omega_left = omega_left + w;
                if w.abs() > tol {
                    left_vertices.push(v);
                }
            }
            Some(Side::Right) => {
                omega_right = omega_right + w;
                if w.abs() > tol {
                    right_vertices.push(v);
                }
            }
            None => {
                // isolated flat vertices may be unreachable when every
                // incident edge is blocked; anything curved must resolve
                if w.abs() > tol {
                    return Err(PartitionError::Unassigned(v));
                }
            }
        }
    }

    let mut omega_on = T::zero();
    for &v in &on_curve {
        if let Curvature::Interior(w) = s.vertex_curvature(v) {
            omega_on = omega_on + w;
        }
    }

    let mut tau_left = T::zero();
    let mut tau_right = T::zero();
    let mut corners = Vec::new();
    for &i in curve.corners() {
        let (l, r) = curve.side_angles(i);
        let omega = curve.waypoint_angles()[i].omega;
        tau_left = tau_left + (T::pi() - l);
        tau_right = tau_right + (T::pi() - r);
        corners.push(CornerData {
            waypoint: i,
            alpha: l,
            beta: r,
            omega,
            tau_left: T::pi() - l,
            tau_right: T::pi() - r,
        });
    }

    Ok(CurvatureReport {
        omega_left,
        omega_on,
        omega_right,
        tau_left,
        tau_right,
        corners,
        left_vertices,
        right_vertices,
    })
}

// ---------------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------------

/// Pure and loop membership for one class on one side.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ClassFlag {
    pub holds: bool,
    pub loop_holds: bool,
    /// Violating corner witnessing a proper loop (loop holds, pure fails).
    pub loop_point: Option<usize>,
}

impl ClassFlag {
    fn from_violations(violations: &[usize]) -> ClassFlag {
        match violations.len() {
            0 => ClassFlag { holds: true, loop_holds: true, loop_point: None },
            1 => ClassFlag { holds: false, loop_holds: true, loop_point: Some(violations[0]) },
            _ => ClassFlag { holds: false, loop_holds: false, loop_point: None },
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CurveClassification {
    pub geodesic: ClassFlag,
    pub quasigeodesic: ClassFlag,
    pub convex_left: ClassFlag,
    pub convex_right: ClassFlag,
    pub reflex_left: ClassFlag,
    pub reflex_right: ClassFlag,
    /// Side has neither the convex nor the reflex property, not even as a loop.
    pub unclassified_left: bool,
    pub unclassified_right: bool,
    /// Whether a user-declared loop point matches the computed witnesses.
    pub declared_loop_consistent: Option<bool>,
}

pub fn classify<T: Real>(curve: &SurfaceCurve<'_, T>, tol: T) -> CurveClassification {
    let n = curve.waypoints().len();
    let pi = T::pi();
    let mut viol_convex_l = Vec::new();
    let mut viol_convex_r = Vec::new();
    let mut viol_reflex_l = Vec::new();
    let mut viol_reflex_r = Vec::new();
    let mut viol_geo = Vec::new();
    let mut viol_qg = Vec::new();
    for i in 0..n {
        let (l, r) = curve.side_angles(i);
        let cl = l <= pi + tol;
        let cr = r <= pi + tol;
        let rl = l >= pi - tol;
        let rr = r >= pi - tol;
        if !cl {
            viol_convex_l.push(i);
        }
        if !cr {
            viol_convex_r.push(i);
        }
        if !rl {
            viol_reflex_l.push(i);
        }
        if !rr {
            viol_reflex_r.push(i);
        }
        if !(cl && rl && cr && rr) {
            viol_geo.push(i);
        }
        if !(cl && cr) {
            viol_qg.push(i);
        }
    }
    let convex_left = ClassFlag::from_violations(&viol_convex_l);
    let convex_right = ClassFlag::from_violations(&viol_convex_r);
    let reflex_left = ClassFlag::from_violations(&viol_reflex_l);
    let reflex_right = ClassFlag::from_violations(&viol_reflex_r);
    let geodesic = ClassFlag::from_violations(&viol_geo);
    // A quasigeodesic loop stays convex to one side and is a convex loop to
    // the other, so the violations on the two sides must coincide.
    let quasigeodesic = ClassFlag::from_violations(&viol_qg);

    let unclassified_left = !convex_left.loop_holds && !reflex_left.loop_holds;
    let unclassified_right = !convex_right.loop_holds && !reflex_right.loop_holds;

    let declared_loop_consistent = curve.declared_loop().map(|lp| {
        let witnesses = [
            geodesic.loop_point,
            quasigeodesic.loop_point,
            convex_left.loop_point,
            convex_right.loop_point,
            reflex_left.loop_point,
            reflex_right.loop_point,
        ];
        witnesses.iter().flatten().all(|&w| w == lp)
    });

    CurveClassification {
        geodesic,
        quasigeodesic,
        convex_left,
        convex_right,
        reflex_left,
        reflex_right,
        unclassified_left,
        unclassified_right,
        declared_loop_consistent,
    }
}

// ---------------------------------------------------------------------------
// Other-side implications
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, Serialize)]
pub struct OtherSideRow {
    /// Side whose class is given (the "convex" or "reflex" side).
    pub side: Side,
    pub given: String,
    pub implies: String,
    pub holds: bool,
    pub witnesses: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct OtherSideReport {
    pub rows: Vec<OtherSideRow>,
}

/// Evaluate the other-side conditions for both orientations of every class.
pub fn other_side_class<T: Real>(curve: &SurfaceCurve<'_, T>, tol: T) -> OtherSideReport {
    let mut rows = Vec::new();
    for side in [Side::Left, Side::Right] {
        rows.extend(convex_side_rows(curve, side, tol));
        rows.extend(reflex_side_rows(curve, side, tol));
    }
    OtherSideReport { rows }
}

fn convex_side_rows<T: Real>(
    curve: &SurfaceCurve<'_, T>,
    side: Side,
    tol: T,
) -> Vec<OtherSideRow> {
    let pi = T::pi();
    let n = curve.waypoints().len();
    let class = classify(curve, tol);
    let flag = match side {
        Side::Left => class.convex_left,
        Side::Right => class.convex_right,
    };
    let other = side.opposite();
    let mut rows = Vec::new();
    if !flag.loop_holds {
        return rows;
    }
    // corners where angle + omega exceeds pi spoil reflexivity opposite
    let mut spoilers: Vec<usize> = Vec::new();
    for i in 0..n {
        let a = curve.angle_on(i, side);
        let w = curve.waypoint_angles()[i].omega;
        if a + w > pi + tol {
            spoilers.push(i);
        }
    }
    if flag.holds {
        rows.push(OtherSideRow {
            side,
            given: format!("convex ({side})"),
            implies: format!("reflex ({other})"),
            holds: spoilers.is_empty(),
            witnesses: spoilers.clone(),
        });
        if spoilers.len() == 1 {
            rows.push(OtherSideRow {
                side,
                given: format!("convex ({side})"),
                implies: format!("reflex loop ({other})"),
                holds: true,
                witnesses: spoilers.clone(),
            });
        }
    } else if let Some(m) = flag.loop_point {
        let except: Vec<usize> = spoilers.iter().copied().filter(|&i| i != m).collect();
        rows.push(OtherSideRow {
            side,
            given: format!("convex loop ({side})"),
            implies: format!("reflex loop ({other})"),
            holds: except.is_empty(),
            witnesses: except,
        });
    }
    rows
}

fn reflex_side_rows<T: Real>(
    curve: &SurfaceCurve<'_, T>,
    side: Side,
    tol: T,
) -> Vec<OtherSideRow> {
    let pi = T::pi();
    let class = classify(curve, tol);
    let flag = match side {
        Side::Left => class.reflex_left,
        Side::Right => class.reflex_right,
    };
    let other = side.opposite();
    let mut rows = Vec::new();
    if !flag.loop_holds {
        return rows;
    }
    if flag.holds {
        rows.push(OtherSideRow {
            side,
            given: format!("reflex ({side})"),
            implies: format!("convex ({other})"),
            holds: true,
            witnesses: Vec::new(),
        });
    } else if let Some(m) = flag.loop_point {
        rows.push(OtherSideRow {
            side,
            given: format!("reflex loop ({side})"),
            implies: format!("convex loop ({other})"),
            holds: true,
            witnesses: vec![m],
        });
        let b = curve.angle_on(m, side);
        let w = curve.waypoint_angles()[m].omega;
        rows.push(OtherSideRow {
            side,
            given: format!("reflex loop ({side})"),
            implies: format!("convex ({other})"),
            holds: b + w >= pi - tol,
            witnesses: vec![m],
        });
    }
    rows
}
