//! Intrinsic triangulated metric surfaces: combinatorics plus edge lengths.
//!
//! No embedding is stored; every geometric quantity is derived from the edge
//! lengths (face charts by the law of cosines, curvatures as angle defects).

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::geom::{Iso2, Vec2};
use crate::scalar::Real;

/// Stable vertex label. Surgeries allocate fresh labels; labels need not be
/// contiguous.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct VertexId(pub u32);

impl std::fmt::Display for VertexId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "v{}", self.0)
    }
}

pub fn edge_key(a: VertexId, b: VertexId) -> (VertexId, VertexId) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Raw surface description prior to validation.
#[derive(Clone, Debug)]
pub struct SurfaceData<T> {
    pub triangles: Vec<[VertexId; 3]>,
    pub edge_lengths: BTreeMap<(VertexId, VertexId), T>,
}

impl<T: Real> SurfaceData<T> {
    pub fn new(triangles: Vec<[VertexId; 3]>) -> Self {
        SurfaceData { triangles, edge_lengths: BTreeMap::new() }
    }

    pub fn set_length(&mut self, a: VertexId, b: VertexId, len: T) {
        self.edge_lengths.insert(edge_key(a, b), len);
    }

    pub fn length(&self, a: VertexId, b: VertexId) -> Option<T> {
        self.edge_lengths.get(&edge_key(a, b)).copied()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub enum SurfaceViolation {
    RepeatedVertexInFace { face: usize },
    MissingEdgeLength { a: VertexId, b: VertexId },
    NonPositiveLength { a: VertexId, b: VertexId },
    TriangleInequality { face: usize },
    /// An oriented edge appears in more than one face: non-manifold gluing or
    /// inconsistent orientation.
    OrientationConflict { a: VertexId, b: VertexId },
    NonManifoldEdge { a: VertexId, b: VertexId, faces: usize },
    DisconnectedVertexFan { v: VertexId },
    BoundaryNotLoops,
    NotSphereTopology { euler: i64 },
    TotalCurvatureOff { total: f64 },
    NegativeCurvature { v: VertexId, curvature: f64 },
    Empty,
}

impl std::fmt::Display for SurfaceViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        use SurfaceViolation::*;
        match self {
            RepeatedVertexInFace { face } => write!(f, "face {face} repeats a vertex"),
            MissingEdgeLength { a, b } => write!(f, "missing length for edge {a}-{b}"),
            NonPositiveLength { a, b } => write!(f, "non-positive length for edge {a}-{b}"),
            TriangleInequality { face } => write!(f, "face {face} violates the triangle inequality"),
            OrientationConflict { a, b } => {
                write!(f, "directed edge {a}->{b} appears in two faces (orientation conflict)")
            }
            NonManifoldEdge { a, b, faces } => {
                write!(f, "edge {a}-{b} borders {faces} faces")
            }
            DisconnectedVertexFan { v } => write!(f, "faces around {v} do not form one fan"),
            BoundaryNotLoops => write!(f, "boundary edges do not form simple loops"),
            NotSphereTopology { euler } => {
                write!(f, "closed surface has Euler characteristic {euler}, expected 2")
            }
            TotalCurvatureOff { total } => {
                write!(f, "total curvature {total} differs from 4*pi")
            }
            NegativeCurvature { v, curvature } => {
                write!(f, "vertex {v} has negative curvature {curvature}")
            }
            Empty => write!(f, "surface has no faces"),
        }
    }
}

/// Outcome of `validate_surface`: all violations plus derived summary data.
#[derive(Clone, Debug, Serialize)]
pub struct SurfaceReport {
    pub violations: Vec<SurfaceViolation>,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub face_count: usize,
    pub boundary_loops: usize,
    pub euler_characteristic: i64,
    pub total_curvature: Option<f64>,
    pub convex: bool,
}

impl SurfaceReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Interior or boundary angle defect at a vertex.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Curvature<T> {
    /// 2*pi minus the full angle around an interior vertex.
    Interior(T),
    /// pi minus the angle along the boundary, flagged separately.
    Boundary(T),
}

impl<T: Real> Curvature<T> {
    pub fn interior(self) -> Option<T> {
        match self {
            Curvature::Interior(w) => Some(w),
            Curvature::Boundary(_) => None,
        }
    }
}

/// One face corner: face index plus the slot (0..3) of the vertex in it.
pub type Corner = (usize, usize);

/// A validated intrinsic surface with derived topology and cached charts.
#[derive(Clone, Debug)]
pub struct IntrinsicSurface<T> {
    verts: Vec<VertexId>,
    vidx: BTreeMap<VertexId, usize>,
    tris: Vec<[usize; 3]>,
    tri_labels: Vec<[VertexId; 3]>,
    lengths: BTreeMap<(usize, usize), T>,
    directed: HashMap<(usize, usize), Corner>,
    charts: Vec<[Vec2<T>; 3]>,
    angles: Vec<[T; 3]>,
    fans: Vec<Fan>,
    boundary_loops: Vec<Vec<VertexId>>,
}

#[derive(Clone, Debug)]
struct Fan {
    /// Corners in counterclockwise rotation order around the vertex.
    corners: Vec<Corner>,
    closed: bool,
}

#[derive(Debug, thiserror::Error)]
#[error("invalid surface: {}", .report.violations.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
pub struct InvalidSurface {
    pub report: SurfaceReport,
}

/// Structural and metric checks over raw surface data.
pub fn validate_surface<T: Real>(data: &SurfaceData<T>, tol: T) -> SurfaceReport {
    let mut violations = Vec::new();
    if data.triangles.is_empty() {
        violations.push(SurfaceViolation::Empty);
    }

    let mut vset = BTreeMap::new();
    for (fi, t) in data.triangles.iter().enumerate() {
        if t[0] == t[1] || t[1] == t[2] || t[0] == t[2] {
            violations.push(SurfaceViolation::RepeatedVertexInFace { face: fi });
        }
        for &v in t {
            vset.insert(v, ());
        }
    }

    // Edge bookkeeping over labels.
    let mut undirected: BTreeMap<(VertexId, VertexId), usize> = BTreeMap::new();
    let mut directed: BTreeMap<(VertexId, VertexId), usize> = BTreeMap::new();
    for t in &data.triangles {
        for s in 0..3 {
            let (a, b) = (t[s], t[(s + 1) % 3]);
            *undirected.entry(edge_key(a, b)).or_insert(0) += 1;
            *directed.entry((a, b)).or_insert(0) += 1;
        }
    }
    for (&(a, b), &n) in &directed {
        if n > 1 {
            violations.push(SurfaceViolation::OrientationConflict { a, b });
        }
    }
    let mut boundary_edge_count = 0usize;
    for (&(a, b), &n) in &undirected {
        if n == 1 {
            boundary_edge_count += 1;
        } else if n > 2 {
            violations.push(SurfaceViolation::NonManifoldEdge { a, b, faces: n });
        }
        match data.edge_lengths.get(&(a, b)) {
            None => violations.push(SurfaceViolation::MissingEdgeLength { a, b }),
            Some(&l) if l <= T::zero() => {
                violations.push(SurfaceViolation::NonPositiveLength { a, b })
            }
            _ => {}
        }
    }

    // Triangle inequalities (only meaningful when all lengths exist).
    for (fi, t) in data.triangles.iter().enumerate() {
        let l01 = data.length(t[0], t[1]);
        let l12 = data.length(t[1], t[2]);
        let l20 = data.length(t[2], t[0]);
        if let (Some(a), Some(b), Some(c)) = (l01, l12, l20) {
            if a + b <= c + tol || b + c <= a + tol || c + a <= b + tol {
                violations.push(SurfaceViolation::TriangleInequality { face: fi });
            }
        }
    }

    let v = vset.len() as i64;
    let e = undirected.len() as i64;
    let f = data.triangles.len() as i64;
    let euler = v - e + f;
    let closed = boundary_edge_count == 0;

    // Curvature data only when the structural checks passed so far.
    let structurally_ok = violations.is_empty();
    let mut total_curvature = None;
    let mut convex = false;
    let mut boundary_loops = 0usize;
    if structurally_ok {
        match IntrinsicSurface::from_data_unchecked(data) {
            Ok(surface) => {
                boundary_loops = surface.boundary_loops().len();
                if closed {
                    let mut total = T::zero();
                    let mut min_curv = T::infinity();
                    for &v in surface.vertex_ids() {
                        if let Curvature::Interior(w) = surface.vertex_curvature(v) {
                            total = total + w;
                            min_curv = min_curv.min(w);
                        }
                    }
                    total_curvature = Some(total.as_f64());
                    if euler != 2 {
                        violations.push(SurfaceViolation::NotSphereTopology { euler });
                    } else if (total - T::c(4.0) * T::pi()).abs() > T::c(1e-6) {
                        violations.push(SurfaceViolation::TotalCurvatureOff { total: total.as_f64() });
                    }
                    if min_curv < -tol {
                        for &v in surface.vertex_ids() {
                            if let Curvature::Interior(w) = surface.vertex_curvature(v) {
                                if w < -tol {
                                    violations.push(SurfaceViolation::NegativeCurvature {
                                        v,
                                        curvature: w.as_f64(),
                                    });
                                }
                            }
                        }
                    }
                    convex = euler == 2 && min_curv >= -tol;
                }
            }
            Err(more) => violations.extend(more),
        }
    }

    SurfaceReport {
        violations,
        vertex_count: v as usize,
        edge_count: e as usize,
        face_count: f as usize,
        boundary_loops,
        euler_characteristic: euler,
        total_curvature,
        convex,
    }
}

impl<T: Real> IntrinsicSurface<T> {
    /// Validate and build. Structural violations are hard errors.
    pub fn new(data: SurfaceData<T>) -> Result<Self, InvalidSurface> {
        let report = validate_surface(&data, T::c(1e-12));
        let hard = report.violations.iter().any(|v| {
            !matches!(
                v,
                SurfaceViolation::TotalCurvatureOff { .. }
                    | SurfaceViolation::NegativeCurvature { .. }
                    | SurfaceViolation::NotSphereTopology { .. }
            )
        });
        if hard {
            return Err(InvalidSurface { report });
        }
        Self::from_data_unchecked(&data).map_err(|violations| InvalidSurface {
            report: SurfaceReport { violations, ..report },
        })
    }

    /// Build topology assuming structural validity; reports fan problems.
    fn from_data_unchecked(data: &SurfaceData<T>) -> Result<Self, Vec<SurfaceViolation>> {
        let mut vidx = BTreeMap::new();
        for t in &data.triangles {
            for &v in t {
                let next = vidx.len();
                vidx.entry(v).or_insert(next);
            }
        }
        let mut verts = vec![VertexId(0); vidx.len()];
        for (&label, &i) in &vidx {
            verts[i] = label;
        }
        let tri_labels = data.triangles.clone();
        let tris: Vec<[usize; 3]> =
            tri_labels.iter().map(|t| [vidx[&t[0]], vidx[&t[1]], vidx[&t[2]]]).collect();

        let mut lengths = BTreeMap::new();
        let mut directed = HashMap::new();
        for (fi, t) in tris.iter().enumerate() {
            for s in 0..3 {
                let (a, b) = (t[s], t[(s + 1) % 3]);
                directed.insert((a, b), (fi, s));
                let key = if a < b { (a, b) } else { (b, a) };
                let len = data
                    .length(verts[a], verts[b])
                    .ok_or_else(|| vec![SurfaceViolation::MissingEdgeLength {
                        a: verts[a],
                        b: verts[b],
                    }])?;
                lengths.insert(key, len);
            }
        }

        // Charts and angles.
        let mut charts = Vec::with_capacity(tris.len());
        let mut angles = Vec::with_capacity(tris.len());
        for (fi, t) in tris.iter().enumerate() {
            let a = lengths[&key(t[0], t[1])];
            let b = lengths[&key(t[1], t[2])];
            let c = lengths[&key(t[2], t[0])];
            let x = (a * a + c * c - b * b) / (T::two() * a);
            let y2 = c * c - x * x;
            if y2 <= T::zero() {
                return Err(vec![SurfaceViolation::TriangleInequality { face: fi }]);
            }
            let p2 = Vec2::new(x, y2.sqrt());
            charts.push([Vec2::zero(), Vec2::new(a, T::zero()), p2]);
            let ang = |apex: Vec2<T>, u: Vec2<T>, v: Vec2<T>| crate::geom::wedge_angle(apex, u, v);
            angles.push([
                ang(Vec2::zero(), Vec2::new(a, T::zero()), p2),
                ang(Vec2::new(a, T::zero()), p2, Vec2::zero()),
                ang(p2, Vec2::zero(), Vec2::new(a, T::zero())),
            ]);
        }

        let mut surface = IntrinsicSurface {
            verts,
            vidx,
            tris,
            tri_labels,
            lengths,
            directed,
            charts,
            angles,
            fans: Vec::new(),
            boundary_loops: Vec::new(),
        };
        let mut violations = Vec::new();
        surface.build_fans(&mut violations);
        surface.build_boundary(&mut violations);
        if violations.is_empty() {
            Ok(surface)
        } else {
            Err(violations)
        }
    }

    fn build_fans(&mut self, violations: &mut Vec<SurfaceViolation>) {
        let nv = self.verts.len();
        let mut at_vertex: Vec<Vec<Corner>> = vec![Vec::new(); nv];
        for (fi, t) in self.tris.iter().enumerate() {
            for s in 0..3 {
                at_vertex[t[s]].push((fi, s));
            }
        }
        self.fans = Vec::with_capacity(nv);
        for v in 0..nv {
            let corners = &at_vertex[v];
            // Walk clockwise from an arbitrary corner to a boundary (or full
            // cycle), then counterclockwise to enumerate the rotation.
            let start = corners[0];
            let mut first = start;
            let mut closed = false;
            loop {
                match self.cw_next(v, first) {
                    Some(c) if c == start => {
                        closed = true;
                        break;
                    }
                    Some(c) => first = c,
                    None => break,
                }
            }
            let mut rotation = vec![first];
            let mut cur = first;
            while let Some(c) = self.ccw_next(v, cur) {
                if c == first {
                    break;
                }
                rotation.push(c);
                cur = c;
                if rotation.len() > corners.len() {
                    break;
                }
            }
            if rotation.len() != corners.len() {
                violations.push(SurfaceViolation::DisconnectedVertexFan { v: self.verts[v] });
            }
            self.fans.push(Fan { corners: rotation, closed });
        }
    }

    /// Corner counterclockwise of `c` around dense vertex `v`.
    fn ccw_next(&self, v: usize, c: Corner) -> Option<Corner> {
        let t = self.tris[c.0];
        debug_assert_eq!(t[c.1], v);
        let prev = t[(c.1 + 2) % 3];
        // The next face counterclockwise contains the directed edge v->prev.
        let &(f, s) = self.directed.get(&(v, prev))?;
        Some((f, s))
    }

    fn cw_next(&self, v: usize, c: Corner) -> Option<Corner> {
        let t = self.tris[c.0];
        let next = t[(c.1 + 1) % 3];
        let &(f, s) = self.directed.get(&(next, v))?;
        Some((f, (s + 1) % 3))
    }

    fn build_boundary(&mut self, violations: &mut Vec<SurfaceViolation>) {
        // Boundary directed edges: face edge (a,b) whose reverse is absent.
        let mut nexts: BTreeMap<usize, usize> = BTreeMap::new();
        let mut starts: Vec<(usize, usize)> = Vec::new();
        for (&(a, b), _) in self.directed.iter() {
            if !self.directed.contains_key(&(b, a)) {
                starts.push((a, b));
            }
        }
        starts.sort_unstable();
        for &(a, b) in &starts {
            if nexts.insert(a, b).is_some() {
                violations.push(SurfaceViolation::BoundaryNotLoops);
                return;
            }
        }
        let mut seen: BTreeMap<usize, bool> = BTreeMap::new();
        let mut loops = Vec::new();
        for &(a, _) in &starts {
            if seen.contains_key(&a) {
                continue;
            }
            let mut cycle = Vec::new();
            let mut cur = a;
            loop {
                if seen.insert(cur, true).is_some() {
                    violations.push(SurfaceViolation::BoundaryNotLoops);
                    return;
                }
                cycle.push(self.verts[cur]);
                match nexts.get(&cur) {
                    Some(&n) => cur = n,
                    None => {
                        violations.push(SurfaceViolation::BoundaryNotLoops);
                        return;
                    }
                }
                if cur == a {
                    break;
                }
            }
            loops.push(cycle);
        }
        self.boundary_loops = loops;
    }

    // ---- accessors ----

    pub fn vertex_ids(&self) -> &[VertexId] {
        &self.verts
    }

    pub fn vertex_count(&self) -> usize {
        self.verts.len()
    }

    pub fn face_count(&self) -> usize {
        self.tris.len()
    }

    pub fn face_labels(&self, f: usize) -> [VertexId; 3] {
        self.tri_labels[f]
    }

    pub fn faces(&self) -> impl Iterator<Item = (usize, [VertexId; 3])> + '_ {
        self.tri_labels.iter().enumerate().map(|(i, t)| (i, *t))
    }

    pub fn dense_index(&self, v: VertexId) -> Option<usize> {
        self.vidx.get(&v).copied()
    }

    pub fn edge_length(&self, a: VertexId, b: VertexId) -> Option<T> {
        let (ia, ib) = (self.dense_index(a)?, self.dense_index(b)?);
        self.lengths.get(&key(ia, ib)).copied()
    }

    pub fn edges(&self) -> impl Iterator<Item = ((VertexId, VertexId), T)> + '_ {
        self.lengths.iter().map(move |(&(a, b), &l)| ((self.verts[a], self.verts[b]), l))
    }

    /// The face containing the directed edge a->b, if any.
    pub fn face_with_directed_edge(&self, a: VertexId, b: VertexId) -> Option<usize> {
        let (ia, ib) = (self.dense_index(a)?, self.dense_index(b)?);
        self.directed.get(&(ia, ib)).map(|&(f, _)| f)
    }

    /// Both faces incident to the undirected edge {a, b}.
    pub fn edge_faces(&self, a: VertexId, b: VertexId) -> Vec<usize> {
        let mut out = Vec::new();
        if let Some(f) = self.face_with_directed_edge(a, b) {
            out.push(f);
        }
        if let Some(f) = self.face_with_directed_edge(b, a) {
            out.push(f);
        }
        out
    }

    pub fn is_boundary_edge(&self, a: VertexId, b: VertexId) -> bool {
        self.edge_faces(a, b).len() == 1
    }

    /// Planar chart of a face: corner coordinates in slot order, counterclockwise.
    pub fn chart(&self, f: usize) -> [Vec2<T>; 3] {
        self.charts[f]
    }

    /// Face angle at a slot.
    pub fn face_angle(&self, f: usize, slot: usize) -> T {
        self.angles[f][slot]
    }

    pub fn face_area(&self, f: usize) -> T {
        let ch = self.charts[f];
        crate::geom::orient(ch[0], ch[1], ch[2]) * T::half()
    }

    pub fn slot_of(&self, f: usize, v: VertexId) -> Option<usize> {
        let t = self.tri_labels[f];
        (0..3).find(|&s| t[s] == v)
    }

    pub fn boundary_loops(&self) -> &[Vec<VertexId>] {
        &self.boundary_loops
    }

    pub fn is_closed(&self) -> bool {
        self.boundary_loops.is_empty()
    }

    pub fn is_boundary_vertex(&self, v: VertexId) -> bool {
        self.dense_index(v).map(|i| !self.fans[i].closed).unwrap_or(false)
    }

    /// Corners around `v` in counterclockwise rotation order.
    pub fn fan_corners(&self, v: VertexId) -> Option<(&[Corner], bool)> {
        let i = self.dense_index(v)?;
        Some((&self.fans[i].corners, self.fans[i].closed))
    }

    /// Total surface angle around a vertex.
    pub fn vertex_angle(&self, v: VertexId) -> T {
        let i = self.dense_index(v).expect("known vertex");
        let mut total = T::zero();
        for &(f, s) in &self.fans[i].corners {
            total = total + self.angles[f][s];
        }
        total
    }

    /// Angle defect at a vertex (interior) or boundary deficit (flagged).
    pub fn vertex_curvature(&self, v: VertexId) -> Curvature<T> {
        let i = self.dense_index(v).expect("known vertex");
        let total = self.vertex_angle(v);
        if self.fans[i].closed {
            Curvature::Interior(T::two_pi() - total)
        } else {
            Curvature::Boundary(T::pi() - total)
        }
    }

    pub fn total_curvature(&self) -> T {
        let mut acc = T::zero();
        for &v in &self.verts {
            if let Curvature::Interior(w) = self.vertex_curvature(v) {
                acc = acc + w;
            }
        }
        acc
    }

    /// Interior vertices whose curvature exceeds `tol` (skips flat markers).
    pub fn curved_interior_vertices(&self, tol: T) -> Vec<(VertexId, T)> {
        let mut out = Vec::new();
        for &v in &self.verts {
            if let Curvature::Interior(w) = self.vertex_curvature(v) {
                if w.abs() > tol {
                    out.push((v, w));
                }
            }
        }
        out
    }

    pub fn is_convex(&self, tol: T) -> bool {
        if !self.is_closed() {
            return false;
        }
        let v = self.verts.len() as i64;
        let e = self.lengths.len() as i64;
        let f = self.tris.len() as i64;
        if v - e + f != 2 {
            return false;
        }
        self.verts.iter().all(|&v| match self.vertex_curvature(v) {
            Curvature::Interior(w) => w >= -tol,
            Curvature::Boundary(_) => false,
        })
    }

    pub fn to_data(&self) -> SurfaceData<T> {
        let mut data = SurfaceData::new(self.tri_labels.clone());
        for (&(a, b), &l) in &self.lengths {
            data.set_length(self.verts[a], self.verts[b], l);
        }
        data
    }

    /// Largest vertex label in use; fresh labels start above this.
    pub fn max_label(&self) -> u32 {
        self.verts.iter().map(|v| v.0).max().unwrap_or(0)
    }

    /// Chart coordinates of vertex `v` within face `f`.
    pub fn vertex_chart_pos(&self, f: usize, v: VertexId) -> Option<Vec2<T>> {
        let s = self.slot_of(f, v)?;
        Some(self.charts[f][s])
    }

    /// Rigid placement of face `g` matching face `f` (already placed by
    /// `iso_f`) across their shared edge.
    pub fn place_across(&self, f: usize, iso_f: &Iso2<T>, g: usize) -> Option<Iso2<T>> {
        let tf = self.tri_labels[f];
        // find the shared edge
        for s in 0..3 {
            let (a, b) = (tf[s], tf[(s + 1) % 3]);
            if self.slot_of(g, a).is_some() && self.slot_of(g, b).is_some() {
                let pa = iso_f.apply(self.charts[f][s]);
                let pb = iso_f.apply(self.charts[f][(s + 1) % 3]);
                let qa = self.vertex_chart_pos(g, a)?;
                let qb = self.vertex_chart_pos(g, b)?;
                return Some(Iso2::from_two_points(qa, qb, pa, pb));
            }
        }
        None
    }
}

#[inline]
fn key(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tetrahedron() -> SurfaceData<f64> {
        let v = |i| VertexId(i);
        let mut d = SurfaceData::new(vec![
            [v(0), v(1), v(2)],
            [v(0), v(2), v(3)],
            [v(0), v(3), v(1)],
            [v(1), v(3), v(2)],
        ]);
        for (a, b) in [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)] {
            d.set_length(v(a), v(b), 1.0);
        }
        d
    }

    #[test]
    fn tetrahedron_valid_and_curved() {
        let data = tetrahedron();
        let report = validate_surface(&data, 1e-12);
        assert!(report.is_valid(), "{:?}", report.violations);
        assert!(report.convex);
        let s = IntrinsicSurface::new(data).unwrap();
        assert!(s.is_closed());
        let w = s.vertex_curvature(VertexId(0)).interior().unwrap();
        assert!((w - std::f64::consts::PI).abs() < 1e-12);
        assert!((s.total_curvature() - 4.0 * std::f64::consts::PI).abs() < 1e-12);
    }

    #[test]
    fn triangle_inequality_rejected() {
        let v = |i| VertexId(i);
        let mut d = SurfaceData::new(vec![[v(0), v(1), v(2)]]);
        d.set_length(v(0), v(1), 1.0);
        d.set_length(v(1), v(2), 1.0);
        d.set_length(v(2), v(0), 3.0);
        let report = validate_surface(&d, 1e-12);
        assert!(report
            .violations
            .iter()
            .any(|x| matches!(x, SurfaceViolation::TriangleInequality { .. })));
        assert!(IntrinsicSurface::new(d).is_err());
    }

    #[test]
    fn doubly_covered_triangle_is_manifold() {
        let v = |i| VertexId(i);
        let mut d = SurfaceData::new(vec![[v(0), v(1), v(2)], [v(2), v(1), v(0)]]);
        d.set_length(v(0), v(1), 3.0);
        d.set_length(v(1), v(2), 4.0);
        d.set_length(v(2), v(0), 5.0);
        let report = validate_surface(&d, 1e-12);
        assert!(report.is_valid(), "{:?}", report.violations);
        let s = IntrinsicSurface::new(d).unwrap();
        assert!(s.is_closed());
        assert!((s.total_curvature() - 4.0 * std::f64::consts::PI).abs() < 1e-12);
        // vertex 1 sits between the two legs: a right angle on each cover
        let w = s.vertex_curvature(VertexId(1)).interior().unwrap();
        assert!((w - std::f64::consts::PI).abs() < 1e-9);
    }

    #[test]
    fn bordered_square_boundary_loop() {
        let v = |i| VertexId(i);
        let mut d = SurfaceData::new(vec![[v(0), v(1), v(2)], [v(0), v(2), v(3)]]);
        let s2 = std::f64::consts::SQRT_2;
        for (a, b, l) in [(0, 1, 1.0), (1, 2, 1.0), (0, 2, s2), (2, 3, 1.0), (0, 3, 1.0)] {
            d.set_length(v(a), v(b), l);
        }
        let s = IntrinsicSurface::new(d).unwrap();
        assert_eq!(s.boundary_loops().len(), 1);
        assert_eq!(s.boundary_loops()[0].len(), 4);
        assert!(s.is_boundary_vertex(VertexId(0)));
        match s.vertex_curvature(VertexId(0)) {
            Curvature::Boundary(d) => assert!((d - std::f64::consts::FRAC_PI_2).abs() < 1e-12),
            _ => panic!("expected boundary vertex"),
        }
    }

    #[test]
    fn orientation_conflict_detected() {
        let v = |i| VertexId(i);
        // Second face repeats the directed edge 0->1.
        let mut d = SurfaceData::new(vec![[v(0), v(1), v(2)], [v(0), v(1), v(3)]]);
        for (a, b) in [(0, 1), (1, 2), (0, 2), (1, 3), (0, 3)] {
            d.set_length(v(a), v(b), 1.0);
        }
        let report = validate_surface(&d, 1e-12);
        assert!(report
            .violations
            .iter()
            .any(|x| matches!(x, SurfaceViolation::OrientationConflict { .. })));
    }
}
