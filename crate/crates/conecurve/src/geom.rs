//! Planar primitives: vectors, rigid motions, segment predicates, polygons.

use serde::{Deserialize, Serialize};

use crate::scalar::{wrap_nonneg, Real};

#[derive(Clone, Copy, PartialEq, Debug, Default, Serialize, Deserialize)]
pub struct Vec2<T> {
    pub x: T,
    pub y: T,
}

impl<T: Real> Vec2<T> {
    pub fn new(x: T, y: T) -> Self {
        Vec2 { x, y }
    }

    pub fn zero() -> Self {
        Vec2 { x: T::zero(), y: T::zero() }
    }

    pub fn dot(self, o: Self) -> T {
        self.x * o.x + self.y * o.y
    }

    /// Perp-dot product; positive when `o` is counterclockwise of `self`.
    pub fn cross(self, o: Self) -> T {
        self.x * o.y - self.y * o.x
    }

    pub fn norm(self) -> T {
        self.x.hypot(self.y)
    }

    pub fn dist(self, o: Self) -> T {
        (self - o).norm()
    }

    pub fn normalized(self) -> Self {
        let n = self.norm();
        Vec2::new(self.x / n, self.y / n)
    }

    /// Counterclockwise rotation by 90 degrees.
    pub fn perp(self) -> Self {
        Vec2::new(-self.y, self.x)
    }

    pub fn scale(self, s: T) -> Self {
        Vec2::new(self.x * s, self.y * s)
    }

    pub fn angle(self) -> T {
        self.y.atan2(self.x)
    }

    pub fn from_angle(a: T) -> Self {
        Vec2::new(a.cos(), a.sin())
    }

    pub fn rotated(self, a: T) -> Self {
        let (s, c) = a.sin_cos();
        Vec2::new(c * self.x - s * self.y, s * self.x + c * self.y)
    }

    pub fn lerp(self, o: Self, t: T) -> Self {
        self + (o - self).scale(t)
    }
}

impl<T: Real> std::ops::Add for Vec2<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Vec2::new(self.x + o.x, self.y + o.y)
    }
}

impl<T: Real> std::ops::Sub for Vec2<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Vec2::new(self.x - o.x, self.y - o.y)
    }
}

impl<T: Real> std::ops::Neg for Vec2<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Vec2::new(-self.x, -self.y)
    }
}

/// Orientation-preserving rigid motion of the plane.
#[derive(Clone, Copy, Debug)]
pub struct Iso2<T> {
    pub cos: T,
    pub sin: T,
    pub t: Vec2<T>,
}

impl<T: Real> Iso2<T> {
    pub fn identity() -> Self {
        Iso2 { cos: T::one(), sin: T::zero(), t: Vec2::zero() }
    }

    pub fn new(rotation: T, t: Vec2<T>) -> Self {
        let (sin, cos) = rotation.sin_cos();
        Iso2 { cos, sin, t }
    }

    pub fn apply(&self, p: Vec2<T>) -> Vec2<T> {
        Vec2::new(
            self.cos * p.x - self.sin * p.y + self.t.x,
            self.sin * p.x + self.cos * p.y + self.t.y,
        )
    }

    pub fn apply_dir(&self, d: Vec2<T>) -> Vec2<T> {
        Vec2::new(self.cos * d.x - self.sin * d.y, self.sin * d.x + self.cos * d.y)
    }

    /// The unique orientation-preserving isometry taking the ordered pair
    /// (a0, a1) onto (b0, b1). The two gaps must have equal length.
    pub fn from_two_points(a0: Vec2<T>, a1: Vec2<T>, b0: Vec2<T>, b1: Vec2<T>) -> Self {
        let u = (a1 - a0).normalized();
        let v = (b1 - b0).normalized();
        let cos = u.dot(v);
        let sin = u.cross(v);
        let rot_a0 = Vec2::new(cos * a0.x - sin * a0.y, sin * a0.x + cos * a0.y);
        Iso2 { cos, sin, t: b0 - rot_a0 }
    }
}

/// Sign of the area of triangle (a, b, c); > 0 for counterclockwise.
pub fn orient<T: Real>(a: Vec2<T>, b: Vec2<T>, c: Vec2<T>) -> T {
    (b - a).cross(c - a)
}

/// Counterclockwise angle from `from` to `to`, in [0, 2pi).
pub fn ccw_angle<T: Real>(from: Vec2<T>, to: Vec2<T>) -> T {
    wrap_nonneg(to.angle() - from.angle(), T::two_pi())
}

/// Interior angle at `apex` of the wedge (apex->p, apex->q), in [0, pi].
pub fn wedge_angle<T: Real>(apex: Vec2<T>, p: Vec2<T>, q: Vec2<T>) -> T {
    let u = p - apex;
    let v = q - apex;
    u.cross(v).atan2(u.dot(v)).abs()
}

/// Signed polar sweep about `origin` along the segment p->q (each |sweep| < pi).
pub fn sweep_about<T: Real>(origin: Vec2<T>, p: Vec2<T>, q: Vec2<T>) -> T {
    let u = p - origin;
    let v = q - origin;
    u.cross(v).atan2(u.dot(v))
}

/// Distance from point `p` to the closed segment (a, b).
pub fn point_segment_distance<T: Real>(p: Vec2<T>, a: Vec2<T>, b: Vec2<T>) -> T {
    let ab = b - a;
    let len2 = ab.dot(ab);
    if len2 == T::zero() {
        return p.dist(a);
    }
    let t = (p - a).dot(ab) / len2;
    let t = t.max(T::zero()).min(T::one());
    p.dist(a + ab.scale(t))
}

/// Proper or touching intersection of segments (a,b) and (c,d).
///
/// Returns the parameters (s on ab, t on cd) and the point. Parallel
/// overlapping segments report a representative interior contact point.
pub fn segment_intersection<T: Real>(
    a: Vec2<T>,
    b: Vec2<T>,
    c: Vec2<T>,
    d: Vec2<T>,
    eps: T,
) -> Option<(T, T, Vec2<T>)> {
    let r = b - a;
    let s = d - c;
    let denom = r.cross(s);
    let qp = c - a;
    let scale = r.norm().max(s.norm()).max(T::one());
    if denom.abs() <= eps * scale * scale {
        // Parallel. Check collinear overlap.
        if qp.cross(r).abs() > eps * scale * scale {
            return None;
        }
        let rr = r.dot(r);
        if rr == T::zero() {
            return None;
        }
        let t0 = qp.dot(r) / rr;
        let t1 = (d - a).dot(r) / rr;
        let (lo, hi) = if t0 < t1 { (t0, t1) } else { (t1, t0) };
        let lo_cl = lo.max(T::zero());
        let hi_cl = hi.min(T::one());
        if lo_cl > hi_cl + eps {
            return None;
        }
        let tm = (lo_cl + hi_cl) * T::half();
        let p = a + r.scale(tm);
        let u = if t1 == t0 { T::zero() } else { (tm - t0) / (t1 - t0) };
        return Some((tm, u, p));
    }
    let s_par = qp.cross(s) / denom;
    let t_par = qp.cross(r) / denom;
    let tol_s = eps / r.norm().max(eps);
    let tol_t = eps / s.norm().max(eps);
    if s_par < -tol_s || s_par > T::one() + tol_s || t_par < -tol_t || t_par > T::one() + tol_t {
        return None;
    }
    Some((s_par, t_par, a + r.scale(s_par)))
}

/// Signed area of a closed polygon.
pub fn polygon_area<T: Real>(pts: &[Vec2<T>]) -> T {
    let mut acc = T::zero();
    for i in 0..pts.len() {
        let j = (i + 1) % pts.len();
        acc = acc + pts[i].cross(pts[j]);
    }
    acc * T::half()
}

/// Winding number of a closed polygon around `p` (counterclockwise positive).
pub fn winding_number<T: Real>(pts: &[Vec2<T>], p: Vec2<T>) -> i32 {
    let mut total = T::zero();
    for i in 0..pts.len() {
        let j = (i + 1) % pts.len();
        total = total + sweep_about(p, pts[i], pts[j]);
    }
    (total.as_f64() / std::f64::consts::TAU).round() as i32
}

/// Kernel of a closed polygon: the set of points seeing the whole boundary.
///
/// Half-plane intersection along every directed edge of the (counterclockwise)
/// polygon. Returns an empty vector when the kernel has no interior.
pub fn polygon_kernel<T: Real>(pts: &[Vec2<T>], eps: T) -> Vec<Vec2<T>> {
    let area = polygon_area(pts);
    if area.abs() <= eps {
        return Vec::new();
    }
    // Work with a counterclockwise copy so interiors are to the left of edges.
    let ccw: Vec<Vec2<T>> = if area > T::zero() {
        pts.to_vec()
    } else {
        pts.iter().rev().copied().collect()
    };
    // Start from a generous bounding box.
    let (mut lo, mut hi) = (ccw[0], ccw[0]);
    for p in &ccw {
        lo.x = lo.x.min(p.x);
        lo.y = lo.y.min(p.y);
        hi.x = hi.x.max(p.x);
        hi.y = hi.y.max(p.y);
    }
    let pad = (hi - lo).norm() + T::one();
    let mut cell = vec![
        Vec2::new(lo.x - pad, lo.y - pad),
        Vec2::new(hi.x + pad, lo.y - pad),
        Vec2::new(hi.x + pad, hi.y + pad),
        Vec2::new(lo.x - pad, hi.y + pad),
    ];
    for i in 0..ccw.len() {
        let a = ccw[i];
        let b = ccw[(i + 1) % ccw.len()];
        if a.dist(b) <= eps {
            continue;
        }
        cell = clip_halfplane(&cell, a, b);
        if cell.is_empty() {
            return Vec::new();
        }
    }
    if polygon_area(&cell).abs() <= eps * eps {
        return Vec::new();
    }
    cell
}

/// Clip a convex polygon to the half-plane left of the directed line a->b.
fn clip_halfplane<T: Real>(poly: &[Vec2<T>], a: Vec2<T>, b: Vec2<T>) -> Vec<Vec2<T>> {
    let mut out = Vec::with_capacity(poly.len() + 2);
    let n = poly.len();
    for i in 0..n {
        let p = poly[i];
        let q = poly[(i + 1) % n];
        let sp = orient(a, b, p);
        let sq = orient(a, b, q);
        if sp >= T::zero() {
            out.push(p);
        }
        if (sp > T::zero() && sq < T::zero()) || (sp < T::zero() && sq > T::zero()) {
            let t = sp / (sp - sq);
            out.push(p + (q - p).scale(t));
        }
    }
    out
}

/// Centroid of a polygon's vertices (adequate for picking an interior point
/// of a convex cell).
pub fn vertex_centroid<T: Real>(pts: &[Vec2<T>]) -> Vec2<T> {
    let mut acc = Vec2::zero();
    for p in pts {
        acc = acc + *p;
    }
    acc.scale(T::one() / T::c(pts.len() as f64))
}

#[cfg(test)]
mod tests {
    use super::*;

    type V = Vec2<f64>;

    #[test]
    fn iso_from_two_points_maps_exactly() {
        let a0 = V::new(1.0, 2.0);
        let a1 = V::new(4.0, 6.0);
        let b0 = V::new(-2.0, 0.5);
        let b1 = b0 + (a1 - a0).rotated(1.1);
        let iso = Iso2::from_two_points(a0, a1, b0, b1);
        assert!(iso.apply(a0).dist(b0) < 1e-12);
        assert!(iso.apply(a1).dist(b1) < 1e-12);
    }

    #[test]
    fn segment_intersection_basic() {
        let hit = segment_intersection(
            V::new(0.0, 0.0),
            V::new(2.0, 0.0),
            V::new(1.0, -1.0),
            V::new(1.0, 1.0),
            1e-12,
        )
        .unwrap();
        assert!((hit.0 - 0.5).abs() < 1e-12);
        assert!(hit.2.dist(V::new(1.0, 0.0)) < 1e-12);
        assert!(segment_intersection(
            V::new(0.0, 0.0),
            V::new(1.0, 0.0),
            V::new(0.0, 1.0),
            V::new(1.0, 1.0),
            1e-12
        )
        .is_none());
    }

    #[test]
    fn collinear_overlap_detected() {
        let hit = segment_intersection(
            V::new(0.0, 0.0),
            V::new(2.0, 0.0),
            V::new(1.0, 0.0),
            V::new(3.0, 0.0),
            1e-12,
        );
        assert!(hit.is_some());
    }

    #[test]
    fn kernel_of_convex_and_nonstar() {
        let square = vec![V::new(0., 0.), V::new(1., 0.), V::new(1., 1.), V::new(0., 1.)];
        assert!(!polygon_kernel(&square, 1e-12).is_empty());

        // A spiral-ish non-star-shaped polygon.
        let comb = vec![
            V::new(0., 0.),
            V::new(6., 0.),
            V::new(6., 4.),
            V::new(5., 4.),
            V::new(5., 1.),
            V::new(4., 1.),
            V::new(4., 4.),
            V::new(2., 4.),
            V::new(2., 1.),
            V::new(1., 1.),
            V::new(1., 4.),
            V::new(0., 4.),
        ];
        assert!(polygon_kernel(&comb, 1e-12).is_empty());
    }

    #[test]
    fn winding_counts() {
        let square = vec![V::new(0., 0.), V::new(1., 0.), V::new(1., 1.), V::new(0., 1.)];
        assert_eq!(winding_number(&square, V::new(0.5, 0.5)), 1);
        assert_eq!(winding_number(&square, V::new(2.0, 0.5)), 0);
    }
}
