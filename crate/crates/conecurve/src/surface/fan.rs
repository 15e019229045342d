//! Angular coordinates around a surface point.
//!
//! Lays the corner wedges incident to a point side by side, giving every
//! tangent direction a fan angle in [0, total), where total is the full
//! surface angle at the point. Side angles of curves reduce to differences of
//! fan angles.

use crate::geom::{ccw_angle, Vec2};
use crate::scalar::Real;
use crate::surface::mesh::{IntrinsicSurface, VertexId};
use crate::surface::point::SurfacePoint;

#[derive(Clone, Debug)]
pub struct FanSector<T> {
    pub face: usize,
    /// Fan angle where this sector begins.
    pub start: T,
    pub angle: T,
    /// Chart position of the fan's center point within `face`.
    pub center: Vec2<T>,
    /// Chart direction of the sector's starting ray.
    pub start_ray: Vec2<T>,
}

#[derive(Clone, Debug)]
pub struct PointFan<T> {
    pub sectors: Vec<FanSector<T>>,
    /// Total surface angle at the point.
    pub total: T,
    pub closed: bool,
}

#[derive(Debug, thiserror::Error)]
pub enum FanError {
    #[error("point does not lie on the surface")]
    UnknownPoint,
    #[error("face {0} is not incident to the point")]
    FaceNotIncident(usize),
}

impl<T: Real> PointFan<T> {
    pub fn at(s: &IntrinsicSurface<T>, p: &SurfacePoint<T>) -> Result<Self, FanError> {
        match *p {
            SurfacePoint::Vertex(v) => Self::at_vertex(s, v),
            SurfacePoint::Edge { a, b, t } => Self::at_edge_point(s, a, b, t),
            SurfacePoint::Face { .. } => {
                let f = *p.faces(s).first().ok_or(FanError::UnknownPoint)?;
                let center = p.chart_pos(s, f).ok_or(FanError::UnknownPoint)?;
                let ray = s.chart(f)[0] - center;
                Ok(PointFan {
                    sectors: vec![FanSector {
                        face: f,
                        start: T::zero(),
                        angle: T::two_pi(),
                        center,
                        start_ray: ray,
                    }],
                    total: T::two_pi(),
                    closed: true,
                })
            }
        }
    }

    fn at_vertex(s: &IntrinsicSurface<T>, v: VertexId) -> Result<Self, FanError> {
        let (corners, closed) = s.fan_corners(v).ok_or(FanError::UnknownPoint)?;
        let mut sectors = Vec::with_capacity(corners.len());
        let mut acc = T::zero();
        for &(f, slot) in corners {
            let ch = s.chart(f);
            let center = ch[slot];
            let next = ch[(slot + 1) % 3];
            sectors.push(FanSector {
                face: f,
                start: acc,
                angle: s.face_angle(f, slot),
                center,
                start_ray: next - center,
            });
            acc = acc + s.face_angle(f, slot);
        }
        Ok(PointFan { sectors, total: acc, closed })
    }

    fn at_edge_point(
        s: &IntrinsicSurface<T>,
        a: VertexId,
        b: VertexId,
        t: T,
    ) -> Result<Self, FanError> {
        let left = s.face_with_directed_edge(a, b);
        let right = s.face_with_directed_edge(b, a);
        let mut sectors = Vec::new();
        let mut acc = T::zero();
        // Sector on the left of a->b spans from the ray toward b to the ray
        // toward a; the right sector continues from there.
        if let Some(f) = left {
            let pa = SurfacePoint::vertex(a).chart_pos(s, f).unwrap();
            let pb = SurfacePoint::vertex(b).chart_pos(s, f).unwrap();
            let center = pa.lerp(pb, t);
            sectors.push(FanSector {
                face: f,
                start: acc,
                angle: T::pi(),
                center,
                start_ray: pb - center,
            });
            acc = acc + T::pi();
        }
        if let Some(f) = right {
            let pa = SurfacePoint::vertex(a).chart_pos(s, f).unwrap();
            let pb = SurfacePoint::vertex(b).chart_pos(s, f).unwrap();
            let center = pa.lerp(pb, t);
            sectors.push(FanSector {
                face: f,
                start: acc,
                angle: T::pi(),
                center,
                start_ray: pa - center,
            });
            acc = acc + T::pi();
        }
        if sectors.is_empty() {
            return Err(FanError::UnknownPoint);
        }
        let closed = left.is_some() && right.is_some();
        Ok(PointFan { sectors, total: acc, closed })
    }

    /// Fan angle of the ray from the center toward `target` (chart
    /// coordinates of `face`).
    pub fn angle_of(&self, face: usize, target: Vec2<T>) -> Result<T, FanError> {
        let sector = self
            .sectors
            .iter()
            .find(|sec| sec.face == face)
            .ok_or(FanError::FaceNotIncident(face))?;
        let dir = target - sector.center;
        let mut local = ccw_angle(sector.start_ray, dir);
        // Snap tiny negative overshoot that wrapped to just below 2*pi.
        if local > sector.angle && T::two_pi() - local < local - sector.angle {
            local = local - T::two_pi();
        }
        Ok(sector.start + local)
    }

    /// Counterclockwise sweep from fan angle `from` to `to`, normalized into
    /// [0, total] (both extremes are meaningful: a fold hugging one side).
    pub fn ccw_sweep(&self, from: T, to: T) -> T {
        let tol = T::c(1e-9);
        let mut d = to - from;
        if d < -tol {
            d = d + self.total;
        }
        if d > self.total + tol {
            d = d - self.total;
        }
        d.max(T::zero()).min(self.total)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::mesh::SurfaceData;
    use std::f64::consts::PI;

    #[test]
    fn tetra_vertex_fan_total() {
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
        let s = IntrinsicSurface::new(d).unwrap();
        let fan = PointFan::at(&s, &SurfacePoint::vertex(v(0))).unwrap();
        assert!(fan.closed);
        assert_eq!(fan.sectors.len(), 3);
        assert!((fan.total - PI).abs() < 1e-12);
    }

    #[test]
    fn edge_point_fan_is_flat() {
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
        let s = IntrinsicSurface::new(d).unwrap();
        let fan = PointFan::at(&s, &SurfacePoint::on_edge(v(0), v(1), 0.5)).unwrap();
        assert!(fan.closed);
        assert!((fan.total - 2.0 * PI).abs() < 1e-12);
    }
}
