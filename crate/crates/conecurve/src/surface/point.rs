//! Points on an intrinsic surface, located by vertex, edge, or face.

use serde::{Deserialize, Serialize};

use crate::geom::Vec2;
use crate::scalar::Real;
use crate::surface::mesh::{IntrinsicSurface, VertexId};

/// A point of the surface. Edge parameters live in the open interval (0,1)
/// and barycentric coordinates are positive; boundary cases use the vertex
/// variant.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub enum SurfacePoint<T> {
    Vertex(VertexId),
    /// Point at parameter `t` from `a` to `b`; stored with a < b.
    Edge { a: VertexId, b: VertexId, t: T },
    /// Interior face point: face by its vertex labels plus barycentric
    /// coordinates in slot order.
    Face { tri: [VertexId; 3], bary: [T; 3] },
}

impl<T: Real> SurfacePoint<T> {
    pub fn vertex(v: VertexId) -> Self {
        SurfacePoint::Vertex(v)
    }

    pub fn on_edge(a: VertexId, b: VertexId, t: T) -> Self {
        if a <= b {
            SurfacePoint::Edge { a, b, t }
        } else {
            SurfacePoint::Edge { a: b, b: a, t: T::one() - t }
        }
    }

    pub fn in_face(tri: [VertexId; 3], bary: [T; 3]) -> Self {
        // Canonical rotation: smallest label first, cyclic order preserved.
        let k = (0..3).min_by_key(|&i| tri[i]).unwrap();
        let rot = |i: usize| (i + k) % 3;
        SurfacePoint::Face {
            tri: [tri[rot(0)], tri[rot(1)], tri[rot(2)]],
            bary: [bary[rot(0)], bary[rot(1)], bary[rot(2)]],
        }
    }

    pub fn as_vertex(&self) -> Option<VertexId> {
        match self {
            SurfacePoint::Vertex(v) => Some(*v),
            _ => None,
        }
    }

    /// Faces of `s` containing this point.
    pub fn faces<'a>(&self, s: &'a IntrinsicSurface<T>) -> Vec<usize> {
        match *self {
            SurfacePoint::Vertex(v) => match s.fan_corners(v) {
                Some((corners, _)) => corners.iter().map(|&(f, _)| f).collect(),
                None => Vec::new(),
            },
            SurfacePoint::Edge { a, b, .. } => s.edge_faces(a, b),
            SurfacePoint::Face { tri, .. } => {
                match s.face_with_directed_edge(tri[0], tri[1]) {
                    Some(f) if s.slot_of(f, tri[2]).is_some() => vec![f],
                    _ => Vec::new(),
                }
            }
        }
    }

    /// Chart coordinates within face `f`, when the point lies on `f`.
    pub fn chart_pos(&self, s: &IntrinsicSurface<T>, f: usize) -> Option<Vec2<T>> {
        let ch = s.chart(f);
        match *self {
            SurfacePoint::Vertex(v) => s.slot_of(f, v).map(|slot| ch[slot]),
            SurfacePoint::Edge { a, b, t } => {
                let sa = s.slot_of(f, a)?;
                let sb = s.slot_of(f, b)?;
                // must be an actual edge of the face
                if (sa + 1) % 3 != sb && (sb + 1) % 3 != sa {
                    return None;
                }
                Some(ch[sa].lerp(ch[sb], t))
            }
            SurfacePoint::Face { tri, bary } => {
                let s0 = s.slot_of(f, tri[0])?;
                let s1 = s.slot_of(f, tri[1])?;
                let s2 = s.slot_of(f, tri[2])?;
                Some(
                    ch[s0].scale(bary[0])
                        + (ch[s1].scale(bary[1]) + ch[s2].scale(bary[2])),
                )
            }
        }
    }

    /// True when the two loci denote the same point (up to `tol` along edges
    /// and in barycentric coordinates).
    pub fn same_point(&self, other: &Self, s: &IntrinsicSurface<T>, tol: T) -> bool {
        use SurfacePoint::*;
        match (*self, *other) {
            (Vertex(u), Vertex(v)) => u == v,
            (Edge { a, b, t }, Edge { a: c, b: d, t: u }) => {
                if (a, b) != (c, d) {
                    return false;
                }
                let len = s.edge_length(a, b).unwrap_or_else(T::one);
                ((t - u) * len).abs() <= tol
            }
            (Face { tri, bary }, Face { tri: tri2, bary: bary2 }) => {
                tri == tri2
                    && (0..3).all(|i| (bary[i] - bary2[i]).abs() <= tol)
            }
            // Mixed kinds denote distinct loci under the open-range invariants.
            _ => false,
        }
    }

    /// A face shared by this point and `other`, preferring `hint`.
    pub fn common_face(
        &self,
        other: &Self,
        s: &IntrinsicSurface<T>,
        hint: Option<usize>,
    ) -> Option<usize> {
        let fa = self.faces(s);
        let fb = other.faces(s);
        if let Some(h) = hint {
            if fa.contains(&h) && fb.contains(&h) {
                return Some(h);
            }
        }
        let mut shared: Vec<usize> = fa.into_iter().filter(|f| fb.contains(f)).collect();
        shared.sort_unstable();
        shared.first().copied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::mesh::SurfaceData;

    #[test]
    fn edge_point_canonicalizes() {
        let p: SurfacePoint<f64> = SurfacePoint::on_edge(VertexId(5), VertexId(2), 0.25);
        match p {
            SurfacePoint::Edge { a, b, t } => {
                assert_eq!((a, b), (VertexId(2), VertexId(5)));
                assert!((t - 0.75f64).abs() < 1e-15);
            }
            _ => unreachable!(),
        }
    }

    #[test]
    fn chart_positions() {
        let v = |i| VertexId(i);
        let mut d = SurfaceData::new(vec![[v(0), v(1), v(2)]]);
        d.set_length(v(0), v(1), 4.0);
        d.set_length(v(1), v(2), 5.0);
        d.set_length(v(2), v(0), 3.0);
        let s = IntrinsicSurface::new(d).unwrap();
        let p: SurfacePoint<f64> = SurfacePoint::on_edge(v(0), v(1), 0.5);
        let pos = p.chart_pos(&s, 0).unwrap();
        assert!((pos.x - 2.0f64).abs() < 1e-12 && pos.y.abs() < 1e-12);
        let q = SurfacePoint::in_face([v(0), v(1), v(2)], [1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0]);
        let qpos = q.chart_pos(&s, 0).unwrap();
        assert!(qpos.y > 0.0);
    }
}
