//! Rigid planar placements of face chains (rolling a strip of faces flat).

use crate::geom::{Iso2, Vec2};
use crate::scalar::Real;
use crate::surface::mesh::IntrinsicSurface;
use crate::surface::point::SurfacePoint;

#[derive(Clone, Debug)]
pub struct FacePlacement<T> {
    pub face: usize,
    pub iso: Iso2<T>,
}

impl<T: Real> FacePlacement<T> {
    pub fn corner_positions(&self, s: &IntrinsicSurface<T>) -> [Vec2<T>; 3] {
        let ch = s.chart(self.face);
        [self.iso.apply(ch[0]), self.iso.apply(ch[1]), self.iso.apply(ch[2])]
    }
}

/// Planar image of a chain of surface points with the points they develop.
#[derive(Clone, Debug)]
pub struct PlanarChain<T> {
    pub points: Vec<Vec2<T>>,
    pub sources: Vec<SurfacePoint<T>>,
}

#[derive(Debug, thiserror::Error)]
pub enum UnfoldError {
    #[error("faces {0} and {1} do not share an edge")]
    NotAdjacent(usize, usize),
    #[error("empty face sequence")]
    Empty,
}

/// Place each face of the sequence in the plane, consecutive faces glued
/// across their shared edge. The seed isometry places the first face.
pub fn unfold_chain<T: Real>(
    s: &IntrinsicSurface<T>,
    faces: &[usize],
    seed: Iso2<T>,
) -> Result<Vec<FacePlacement<T>>, UnfoldError> {
    let first = *faces.first().ok_or(UnfoldError::Empty)?;
    let mut out = vec![FacePlacement { face: first, iso: seed }];
    for win in faces.windows(2) {
        let (f, g) = (win[0], win[1]);
        let prev = &out.last().unwrap().iso;
        if f == g {
            let iso = *prev;
            out.push(FacePlacement { face: g, iso });
            continue;
        }
        let iso = s.place_across(f, prev, g).ok_or(UnfoldError::NotAdjacent(f, g))?;
        out.push(FacePlacement { face: g, iso });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::mesh::{SurfaceData, VertexId};

    #[test]
    fn two_faces_share_edge_exactly() {
        let v = |i| VertexId(i);
        let mut d = SurfaceData::new(vec![[v(0), v(1), v(2)], [v(0), v(2), v(3)]]);
        let s2 = std::f64::consts::SQRT_2;
        for (a, b, l) in [(0, 1, 1.0), (1, 2, 1.0), (0, 2, s2), (2, 3, 1.0), (0, 3, 1.0)] {
            d.set_length(v(a), v(b), l);
        }
        let s = IntrinsicSurface::new(d).unwrap();
        let placements = unfold_chain(&s, &[0, 1], Iso2::identity()).unwrap();
        let p0 = placements[0].corner_positions(&s);
        let p1 = placements[1].corner_positions(&s);
        // shared edge 0-2 must coincide
        let (a0, c0) = (p0[0], p0[2]);
        let s0 = s.slot_of(1, v(0)).unwrap();
        let s2n = s.slot_of(1, v(2)).unwrap();
        assert!(p1[s0].dist(a0) < 1e-12);
        assert!(p1[s2n].dist(c0) < 1e-12);
        // unfolded square: vertex 3 lands across the diagonal from vertex 1
        let s3 = s.slot_of(1, v(3)).unwrap();
        let d13 = p1[s3].dist(p0[1]);
        assert!((d13 - s2).abs() < 1e-12, "diagonal of the unfolded square");
    }
}
