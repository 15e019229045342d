//! JSON serialization of surfaces and curves.
//!
//! Surface document:
//! `{"vertices": [ids], "triangles": [[i,j,k],...], "edge_lengths": [[i,j,len],...], "orientation": "ccw"}`
//!
//! Curve document:
//! `{"waypoints": [{"type":"vertex","id":v} | {"type":"edge","edge":[i,j],"t":..} | {"type":"face","tri":[i,j,k],"bary":[..]}], "loop_point": idx?}`

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::scalar::Real;
use crate::surface::mesh::{edge_key, SurfaceData, VertexId};
use crate::surface::point::SurfacePoint;

#[derive(Debug, thiserror::Error)]
pub enum IoError {
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported orientation {0:?} (only \"ccw\")")]
    Orientation(String),
    #[error("duplicate edge entry {0}-{1} disagrees: {2} vs {3}")]
    DuplicateEdgeMismatch(u32, u32, f64, f64),
    #[error("vertex list omits {0} used by a triangle")]
    UndeclaredVertex(u32),
}

#[derive(Serialize, Deserialize)]
struct SurfaceDoc {
    vertices: Vec<u32>,
    triangles: Vec<[u32; 3]>,
    edge_lengths: Vec<(u32, u32, f64)>,
    orientation: String,
}

pub fn surface_to_json<T: Real>(data: &SurfaceData<T>) -> serde_json::Value {
    let mut vertices: Vec<u32> = Vec::new();
    for t in &data.triangles {
        for v in t {
            if !vertices.contains(&v.0) {
                vertices.push(v.0);
            }
        }
    }
    vertices.sort_unstable();
    let doc = SurfaceDoc {
        vertices,
        triangles: data.triangles.iter().map(|t| [t[0].0, t[1].0, t[2].0]).collect(),
        edge_lengths: data
            .edge_lengths
            .iter()
            .map(|(&(a, b), &l)| (a.0, b.0, l.as_f64()))
            .collect(),
        orientation: "ccw".into(),
    };
    serde_json::to_value(doc).expect("surface serializes")
}

pub fn surface_from_json<T: Real>(value: &serde_json::Value, tol: f64) -> Result<SurfaceData<T>, IoError> {
    let doc: SurfaceDoc = serde_json::from_value(value.clone())?;
    if doc.orientation != "ccw" {
        return Err(IoError::Orientation(doc.orientation));
    }
    for t in &doc.triangles {
        for &v in t {
            if !doc.vertices.contains(&v) {
                return Err(IoError::UndeclaredVertex(v));
            }
        }
    }
    let mut lengths: BTreeMap<(VertexId, VertexId), f64> = BTreeMap::new();
    for &(a, b, l) in &doc.edge_lengths {
        let k = edge_key(VertexId(a), VertexId(b));
        if let Some(&prev) = lengths.get(&k) {
            if (prev - l).abs() > tol {
                return Err(IoError::DuplicateEdgeMismatch(a, b, prev, l));
            }
        } else {
            lengths.insert(k, l);
        }
    }
    let mut data = SurfaceData::new(
        doc.triangles
            .iter()
            .map(|t| [VertexId(t[0]), VertexId(t[1]), VertexId(t[2])])
            .collect(),
    );
    for ((a, b), l) in lengths {
        data.set_length(a, b, T::c(l));
    }
    Ok(data)
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
enum WaypointDoc {
    Vertex { id: u32 },
    Edge { edge: [u32; 2], t: f64 },
    Face { tri: [u32; 3], bary: [f64; 3] },
}

#[derive(Serialize, Deserialize)]
struct CurveDoc {
    waypoints: Vec<WaypointDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    loop_point: Option<usize>,
}

pub fn curve_to_json<T: Real>(
    waypoints: &[SurfacePoint<T>],
    loop_point: Option<usize>,
) -> serde_json::Value {
    let doc = CurveDoc {
        waypoints: waypoints
            .iter()
            .map(|w| match *w {
                SurfacePoint::Vertex(v) => WaypointDoc::Vertex { id: v.0 },
                SurfacePoint::Edge { a, b, t } => {
                    WaypointDoc::Edge { edge: [a.0, b.0], t: t.as_f64() }
                }
                SurfacePoint::Face { tri, bary } => WaypointDoc::Face {
                    tri: [tri[0].0, tri[1].0, tri[2].0],
                    bary: [bary[0].as_f64(), bary[1].as_f64(), bary[2].as_f64()],
                },
            })
            .collect(),
        loop_point,
    };
    serde_json::to_value(doc).expect("curve serializes")
}

pub fn curve_from_json<T: Real>(
    value: &serde_json::Value,
) -> Result<(Vec<SurfacePoint<T>>, Option<usize>), IoError> {
    let doc: CurveDoc = serde_json::from_value(value.clone())?;
    let waypoints = doc
        .waypoints
        .iter()
        .map(|w| match *w {
            WaypointDoc::Vertex { id } => SurfacePoint::vertex(VertexId(id)),
            WaypointDoc::Edge { edge, t } => {
                SurfacePoint::on_edge(VertexId(edge[0]), VertexId(edge[1]), T::c(t))
            }
            WaypointDoc::Face { tri, bary } => SurfacePoint::in_face(
                [VertexId(tri[0]), VertexId(tri[1]), VertexId(tri[2])],
                [T::c(bary[0]), T::c(bary[1]), T::c(bary[2])],
            ),
        })
        .collect();
    Ok((waypoints, doc.loop_point))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn surface_roundtrip() {
        let v = |i| VertexId(i);
        let mut d: SurfaceData<f64> = SurfaceData::new(vec![[v(0), v(1), v(2)], [v(2), v(1), v(0)]]);
        d.set_length(v(0), v(1), 3.0);
        d.set_length(v(1), v(2), 4.0);
        d.set_length(v(2), v(0), 5.0);
        let json = surface_to_json(&d);
        let back: SurfaceData<f64> = surface_from_json(&json, 1e-9).unwrap();
        assert_eq!(back.triangles, d.triangles);
        assert_eq!(back.edge_lengths, d.edge_lengths);
    }

    #[test]
    fn duplicate_edge_mismatch_rejected() {
        let json = serde_json::json!({
            "vertices": [0, 1, 2],
            "triangles": [[0, 1, 2]],
            "edge_lengths": [[0, 1, 1.0], [1, 0, 1.5], [1, 2, 1.0], [2, 0, 1.0]],
            "orientation": "ccw",
        });
        assert!(surface_from_json::<f64>(&json, 1e-9).is_err());
    }
}
