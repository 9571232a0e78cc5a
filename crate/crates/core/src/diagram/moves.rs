use std::collections::HashSet;

use super::{Crossing, Diagram};
use crate::error::DiagramError;

struct Dsu {
    parent: Vec<u32>,
}

impl Dsu {
    fn new(n: u32) -> Self {
        Dsu { parent: (0..=n).collect() }
    }

    fn find(&mut self, x: u32) -> u32 {
        let mut r = x;
        while self.parent[r as usize] != r {
            r = self.parent[r as usize];
        }
        let mut y = x;
        while self.parent[y as usize] != r {
            let next = self.parent[y as usize];
            self.parent[y as usize] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra as usize] = rb;
        }
    }
}

impl Diagram {
    /// Deletes the crossings in `removed` and glues edges: each pair in
    /// `joins` is an (incoming, outgoing) pair at a deleted crossing that
    /// becomes one edge. Glued edge classes that no longer touch any crossing
    /// turn into free loops.
    pub(crate) fn splice(&self, removed: &[usize], joins: &[(u32, u32)]) -> Diagram {
        let mut dsu = Dsu::new(self.num_edges());
        for &(a, b) in joins {
            dsu.union(a, b);
        }
        let removed: HashSet<usize> = removed.iter().copied().collect();
        let mut kept = Vec::with_capacity(self.crossings.len() - removed.len());
        let mut touched = HashSet::new();
        for (x, c) in self.crossings.iter().enumerate() {
            if removed.contains(&x) {
                continue;
            }
            let edges = c.edges.map(|e| dsu.find(e));
            touched.extend(edges);
            kept.push(Crossing { edges, positive: c.positive });
        }
        let closed: HashSet<u32> = joins.iter().map(|&(a, _)| dsu.find(a)).filter(|r| !touched.contains(r)).collect();
        Diagram::from_oriented(kept, self.free_loops + closed.len() as u32)
    }

    /// Straight-through joins for deleting crossing `x` by an isotopy.
    pub(crate) fn pass_through_joins(&self, x: usize) -> [(u32, u32); 2] {
        let c = &self.crossings[x];
        let over_in = c.over_in();
        [(c.edges[0], c.edges[2]), (c.edges[over_in], c.edges[(over_in + 2) % 4])]
    }

    /// Exchanges over- and under-strand at crossing `k`. Labels are kept, so
    /// the component structure and traversal order are unchanged.
    pub fn switch_crossing(&self, k: usize) -> Result<Diagram, DiagramError> {
        self.check_index(k)?;
        let mut out = self.clone();
        let c = &mut out.crossings[k];
        let [a, b, cc, d] = c.edges;
        *c = if c.positive {
            Crossing { edges: [b, cc, d, a], positive: false }
        } else {
            Crossing { edges: [d, a, b, cc], positive: true }
        };
        Ok(out)
    }

    /// Oriented smoothing of crossing `k`.
    pub fn smooth_crossing(&self, k: usize) -> Result<Diagram, DiagramError> {
        self.check_index(k)?;
        let [a, b, c, d] = self.crossings[k].edges;
        let joins = if self.crossings[k].positive { [(a, d), (b, c)] } else { [(a, b), (d, c)] };
        Ok(self.splice(&[k], &joins))
    }

    /// Mirror image: every crossing switched.
    pub fn mirror(&self) -> Diagram {
        let mut out = self.clone();
        for k in 0..out.crossings.len() {
            out = out.switch_crossing(k).expect("index in range");
        }
        out
    }

    /// Reverses the orientation of every component.
    pub fn reverse(&self) -> Diagram {
        // Relabel e -> n+1-e reverses traversal; a reversed crossing starts at
        // the old outgoing under-end.
        let n = self.num_edges();
        let flip = |e: u32| n + 1 - e;
        let crossings = self
            .crossings
            .iter()
            .map(|c| {
                let [a, b, cc, d] = c.edges.map(flip);
                Crossing { edges: [cc, d, a, b], positive: c.positive }
            })
            .collect();
        Diagram::from_oriented(crossings, self.free_loops)
    }

    /// Connected sum of two knots, joined at edge 1 of each.
    pub fn connected_sum(&self, other: &Diagram) -> Result<Diagram, DiagramError> {
        for d in [self, other] {
            if !d.is_knot() {
                return Err(DiagramError::NotAKnot(d.num_components()));
            }
        }
        if self.crossings.is_empty() {
            return Ok(other.clone());
        }
        if other.crossings.is_empty() {
            return Ok(self.clone());
        }
        let shift = self.num_edges();
        let x = 1;
        let y = 1 + shift;
        let mut crossings: Vec<Crossing> = self.crossings.clone();
        crossings.extend(
            other.crossings.iter().map(|c| Crossing { edges: c.edges.map(|e| e + shift), positive: c.positive }),
        );
        // Swap the incoming ends of x and y: x now runs into other's crossing.
        for c in crossings.iter_mut() {
            for pos in 0..4 {
                if c.is_incoming(pos) {
                    if c.edges[pos] == x {
                        c.edges[pos] = y;
                    } else if c.edges[pos] == y {
                        c.edges[pos] = x;
                    }
                }
            }
        }
        Ok(Diagram::from_oriented(crossings, 0))
    }

    /// Split union.
    pub fn disjoint_union(&self, other: &Diagram) -> Diagram {
        let shift = self.num_edges();
        let mut crossings = self.crossings.clone();
        crossings.extend(
            other.crossings.iter().map(|c| Crossing { edges: c.edges.map(|e| e + shift), positive: c.positive }),
        );
        Diagram::from_oriented(crossings, self.free_loops + other.free_loops)
    }
}
