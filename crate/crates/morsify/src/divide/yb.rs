//! Yang-Baxter transformations at triangular regions.

use super::{DivideError, PlanarDivide};

/// A triangular region and the side whose branch is pushed across the
/// opposite node. `side` j is the edge leaving the j-th dart of the walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct YbSite {
    pub region: usize,
    pub side: usize,
}

fn triangle(d: &PlanarDivide, region: usize) -> Option<[usize; 3]> {
    let regions = d.regions();
    let r = regions.get(region)?;
    if r.walk.len() != 3 {
        return None;
    }
    let w = [r.walk[0], r.walk[1], r.walk[2]];
    let nodes = [w[0] / 4, w[1] / 4, w[2] / 4];
    if nodes[0] == nodes[1] || nodes[1] == nodes[2] || nodes[0] == nodes[2] {
        return None;
    }
    Some(w)
}

pub fn yb_sites(d: &PlanarDivide) -> Vec<YbSite> {
    let regions = d.regions();
    let mut out = Vec::new();
    for r in &regions {
        if triangle(d, r.id).is_some() {
            for side in 0..3 {
                out.push(YbSite { region: r.id, side });
            }
        }
    }
    out
}

/// Pushes a branch of the triangle across the opposite node. The result is
/// the same for every side: each line keeps crossing the other two, in
/// reversed order, so every external half-edge is handed to the other end
/// of its line.
pub fn apply_yb(d: &PlanarDivide, site: YbSite) -> Result<PlanarDivide, DivideError> {
    if site.side > 2 {
        return Err(DivideError::InvalidSite);
    }
    let w = triangle(d, site.region).ok_or(DivideError::InvalidSite)?;
    let nodes = [w[0] / 4, w[1] / 4, w[2] / 4];
    let tri_node = |x: usize| d.is_node_dart(x) && nodes.contains(&(x / 4));
    let mut internal = Vec::new();
    for &x in &w {
        internal.push(x);
        internal.push(d.partner[x]);
    }
    let external: Vec<usize> = nodes.iter().flat_map(|&v| 4 * v..4 * v + 4).filter(|x| !internal.contains(x)).collect();
    // the other end of the line through an external half-edge
    let mate = |x: usize| PlanarDivide::opposite(d.partner[PlanarDivide::opposite(x)]);
    let mut partner = d.partner.clone();
    for &x in &external {
        let p = d.partner[x];
        let q = if tri_node(p) && external.contains(&p) { mate(p) } else { p };
        partner[mate(x)] = q;
        partner[q] = mate(x);
    }
    let outer = d.outer.map(|o| {
        if !tri_node(o) {
            return o;
        }
        // faces around the triangle: node sectors and side sectors swap
        for j in 0..3 {
            let s = w[j];
            let node_sector = (s & !3) | ((s + 2) & 3);
            let side_sector = (s & !3) | ((s + 1) & 3);
            if o == node_sector {
                return d.partner[w[(j + 1) % 3]];
            }
            if o == side_sector || o == d.partner[w[j]] {
                let t = w[(j + 2) % 3];
                return (t & !3) | ((t + 2) & 3);
            }
        }
        o
    });
    Ok(PlanarDivide { partner, outer, ..d.clone() })
}
