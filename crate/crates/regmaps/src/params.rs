//! Feasibility arithmetic for d-regular maps on a closed orientable surface
//! of genus g.
//!
//! Every map obeys the handshake relation `d v = 2 n` and the Euler relation
//! `v - n + f = 2 - 2 g` (v vertices, n edges, f faces).  For one-face maps
//! those two pin down everything: a d-regular one-face map of genus g exists
//! exactly when `d - 2` divides `4 g - 2`, and then
//! `v = (4 g - 2) / (d - 2)` and `n = d (2 g - 1) / (d - 2)`.

/// Vertex, edge and face counts of a feasible (degree, genus) instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MapParams {
    pub degree: u32,
    pub genus: u32,
    pub vertices: u64,
    pub edges: u64,
    pub faces: u64,
}

/// Parameters of d-regular one-face maps of genus g, or `None` when no such
/// map exists.
///
/// Requires `d >= 3` and `g >= 1` (the sphere admits no one-face regular map
/// of degree at least 3).
pub fn one_face(d: u32, g: u32) -> Option<MapParams> {
    if d < 3 || g == 0 {
        return None;
    }
    let num = 4 * u64::from(g) - 2;
    let den = u64::from(d) - 2;
    if num % den != 0 {
        return None;
    }
    let vertices = num / den;
    let edges = u64::from(d) * vertices / 2;
    debug_assert_eq!(u64::from(d) * vertices % 2, 0);
    Some(MapParams {
        degree: d,
        genus: g,
        vertices,
        edges,
        faces: 1,
    })
}

/// Parameters of d-regular maps of genus g on v vertices, or `None` when the
/// face count forced by Euler's relation is not positive (or `d v` is odd).
/// Any `d >= 1` is allowed: degree 1 gives perfect matchings, degree 2
/// cycles.
pub fn multi_face(d: u32, g: u32, v: u64) -> Option<MapParams> {
    if d == 0 || v == 0 || !(u64::from(d) * v).is_multiple_of(2) {
        return None;
    }
    let edges = u64::from(d) * v / 2;
    let faces = (edges + 2).checked_sub(v + 2 * u64::from(g))?;
    if faces == 0 {
        return None;
    }
    Some(MapParams {
        degree: d,
        genus: g,
        vertices: v,
        edges,
        faces,
    })
}

/// Largest genus a d-regular map on v vertices can have, or `None` when no
/// d-regular map on v vertices exists at all.
pub fn genus_max(d: u32, v: u64) -> Option<u32> {
    multi_face(d, 0, v)?;
    let edges = u64::from(d) * v / 2;
    Some(((edges + 1 - v) / 2) as u32)
}
