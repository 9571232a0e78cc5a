//! Greedy Reidemeister I/II reduction.

use super::Diagram;

impl Diagram {
    /// Other end `(crossing, position)` of the edge at `(x, pos)`.
    fn edge_ends(&self) -> Vec<[(usize, usize); 2]> {
        let mut ends = vec![[(usize::MAX, 0usize); 2]; self.num_edges() as usize + 1];
        let mut filled = vec![0u8; self.num_edges() as usize + 1];
        for (x, c) in self.crossings.iter().enumerate() {
            for (pos, &e) in c.edges.iter().enumerate() {
                ends[e as usize][filled[e as usize] as usize] = (x, pos);
                filled[e as usize] += 1;
            }
        }
        ends
    }

    fn find_r1(&self) -> Option<usize> {
        self.crossings.iter().position(|c| (0..4).any(|p| c.edges[p] == c.edges[(p + 1) % 4]))
    }

    /// A bigon face whose two edges are over-over and under-under.
    fn find_r2(&self) -> Option<(usize, usize)> {
        let ends = self.edge_ends();
        let across = |x: usize, pos: usize| -> (usize, usize) {
            let [a, b] = ends[self.crossings[x].edges[pos] as usize];
            if a == (x, pos) {
                b
            } else {
                a
            }
        };
        for x in 0..self.crossings.len() {
            for p in 0..4 {
                // Face walk: leave (x,p), arrive at (y,q), turn to (y,q-1).
                let (y, q) = across(x, p);
                if y == x {
                    continue;
                }
                let q1 = (q + 3) % 4;
                let (x2, p2) = across(y, q1);
                if x2 != x || p2 != (p + 1) % 4 {
                    continue;
                }
                // Same parity at both ends means the edge plays the same role.
                if p % 2 == q % 2 {
                    return Some((x, y));
                }
            }
        }
        None
    }

    /// Applies Reidemeister I and II reductions until none applies. Returns
    /// the input unchanged (same labels) when no move is available.
    pub fn simplify(&self) -> Diagram {
        let mut d = self.clone();
        loop {
            if let Some(x) = d.find_r1() {
                let joins = d.pass_through_joins(x);
                d = d.splice(&[x], &joins);
                continue;
            }
            if let Some((x, y)) = d.find_r2() {
                let mut joins = d.pass_through_joins(x).to_vec();
                joins.extend(d.pass_through_joins(y));
                d = d.splice(&[x, y], &joins);
                continue;
            }
            return d;
        }
    }

    /// Number of faces of each connected piece, summed. A connected planar
    /// diagram with `n > 0` crossings has `n + 2` faces.
    pub fn face_count(&self) -> usize {
        let ends = self.edge_ends();
        let mut seen = vec![[false; 4]; self.crossings.len()];
        let mut faces = 0;
        for x in 0..self.crossings.len() {
            for p in 0..4 {
                if seen[x][p] {
                    continue;
                }
                faces += 1;
                let (mut cx, mut cp) = (x, p);
                while !seen[cx][cp] {
                    seen[cx][cp] = true;
                    let [a, b] = ends[self.crossings[cx].edges[cp] as usize];
                    let (y, q) = if a == (cx, cp) { b } else { a };
                    cx = y;
                    cp = (q + 3) % 4;
                }
            }
        }
        faces
    }
}
