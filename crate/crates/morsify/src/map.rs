//! Rotation-system maps in a disk and face tracing.
//!
//! Darts are half-edges. A vertex lists its darts counterclockwise. Faces are
//! traced with `next(d) = rot(twin(d)) + 1`, so each dart's face lies on its
//! right. Univalent boundary vertices get virtual arcs along the disk
//! boundary; the face outside the disk is then discarded.

#[derive(Debug, Clone)]
pub struct DiskMap {
    pub rot: Vec<Vec<usize>>,
    pub twin: Vec<usize>,
    pub vert: Vec<usize>,
    pub pos: Vec<usize>,
    /// Darts below this index are real; the rest are boundary arcs.
    pub real: usize,
}

#[derive(Debug, Clone)]
pub struct Faces {
    pub face_of: Vec<usize>,
    pub walks: Vec<Vec<usize>>,
    /// The face outside the disk, if one was identified.
    pub outer: Option<usize>,
    /// Faces touching the disk boundary (the outer face excluded).
    pub boundary: Vec<bool>,
}

impl DiskMap {
    /// `rot` lists real darts per vertex, `twin` pairs real darts. Vertices in
    /// `boundary` (ccw order) must be univalent.
    pub fn new(mut rot: Vec<Vec<usize>>, mut twin: Vec<usize>, boundary: &[usize]) -> DiskMap {
        let real = twin.len();
        let m = boundary.len();
        if m > 0 {
            // arc i runs from boundary[i] (its "next" dart) to boundary[i+1] ("prev" dart)
            let base = real;
            twin.resize(real + 2 * m, 0);
            for i in 0..m {
                let nd = base + 2 * i;
                let pd = base + 2 * ((i + 1) % m) + 1;
                twin[nd] = pd;
                twin[pd] = nd;
            }
            for (i, &b) in boundary.iter().enumerate() {
                debug_assert_eq!(rot[b].len(), 1);
                rot[b].push(base + 2 * i + 1);
                rot[b].push(base + 2 * i);
            }
        }
        let n = twin.len();
        let mut vert = vec![usize::MAX; n];
        let mut pos = vec![0; n];
        for (v, ds) in rot.iter().enumerate() {
            for (i, &d) in ds.iter().enumerate() {
                vert[d] = v;
                pos[d] = i;
            }
        }
        DiskMap { rot, twin, vert, pos, real }
    }

    #[inline]
    pub fn next(&self, d: usize) -> usize {
        let t = self.twin[d];
        let r = &self.rot[self.vert[t]];
        r[(self.pos[t] + 1) % r.len()]
    }

    /// Traces all faces. `outer_hint` names a dart of the outer face for maps
    /// without boundary vertices; otherwise the outer face is found from the arcs.
    pub fn faces(&self, boundary: &[usize], outer_hint: Option<usize>) -> Faces {
        let n = self.twin.len();
        let mut face_of = vec![usize::MAX; n];
        let mut walks = Vec::new();
        for d0 in 0..n {
            if face_of[d0] != usize::MAX || self.vert[d0] == usize::MAX {
                continue;
            }
            let f = walks.len();
            let mut walk = Vec::new();
            let mut d = d0;
            loop {
                face_of[d] = f;
                walk.push(d);
                d = self.next(d);
                if d == d0 {
                    break;
                }
            }
            walks.push(walk);
        }
        let outer = if !boundary.is_empty() {
            // the "next" arc dart of the first boundary vertex runs along the outside
            Some(face_of[self.real])
        } else {
            outer_hint.map(|d| face_of[d])
        };
        let boundary_flags =
            (0..walks.len()).map(|f| Some(f) != outer && walks[f].iter().any(|&d| d >= self.real)).collect();
        Faces { face_of, walks, outer, boundary: boundary_flags }
    }
}

impl Faces {
    /// Faces that are neither outside the disk nor touching its boundary.
    pub fn internal(&self) -> Vec<usize> {
        (0..self.walks.len()).filter(|&f| Some(f) != self.outer && !self.boundary[f]).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_chord() {
        // two boundary vertices joined by one edge: two boundary faces
        let m = DiskMap::new(vec![vec![0], vec![1]], vec![1, 0], &[0, 1]);
        let f = m.faces(&[0, 1], None);
        assert_eq!(f.walks.len(), 3);
        assert!(f.internal().is_empty());
        assert_eq!(f.boundary.iter().filter(|&&b| b).count(), 2);
    }

    #[test]
    fn euler_relation_with_arcs() {
        // a triangle with one tail to the boundary
        // vertices 0,1,2 internal, 3 boundary; edges 0-1, 1-2, 2-0, 0-3
        let twin = vec![1, 0, 3, 2, 5, 4, 7, 6];
        let rot = vec![vec![0, 5, 6], vec![1, 2], vec![3, 4], vec![7]];
        let m = DiskMap::new(rot, twin, &[3]);
        let f = m.faces(&[3], None);
        let v = 4;
        let e = m.twin.len() / 2;
        assert_eq!(v as i64 - e as i64 + f.walks.len() as i64, 2);
        assert_eq!(f.internal().len(), 1);
    }
}
