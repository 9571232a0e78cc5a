//! Relabeling-invariant codes for diagrams.
//!
//! Each connected piece is relabeled from every possible starting edge by a
//! deterministic discovery walk; the lexicographically smallest resulting
//! code wins. Piece codes are sorted, so component order and the choice of
//! base points do not matter.

use std::fmt;

use super::{Crossing, Diagram};

/// Hashable key identifying a diagram up to relabeling.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey(Vec<u32>);

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for x in &self.0 {
            if !first {
                f.write_str(".")?;
            }
            first = false;
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// Per-label adjacency used by the discovery walk.
struct Walk<'a> {
    d: &'a Diagram,
    /// Crossing and position where each label ends.
    head: Vec<(usize, usize)>,
}

impl<'a> Walk<'a> {
    fn new(d: &'a Diagram) -> Self {
        let mut head = vec![(0usize, 0usize); d.num_edges() as usize + 1];
        for (x, c) in d.crossings.iter().enumerate() {
            for pos in 0..4 {
                if c.is_incoming(pos) {
                    head[c.edges[pos] as usize] = (x, pos);
                }
            }
        }
        Walk { d, head }
    }

    /// Code of the piece containing `start`, labeled from `start`.
    fn code_from(&self, start: u32, piece_crossings: usize) -> Vec<u32> {
        let d = self.d;
        let mut new_label = vec![0u32; d.num_edges() as usize + 1];
        let mut order: Vec<u32> = Vec::with_capacity(2 * piece_crossings);
        let mut runs: Vec<u32> = Vec::new();
        let mut next = 1u32;

        let mut label_component = |from: u32, new_label: &mut Vec<u32>, order: &mut Vec<u32>| {
            let (lo, hi) = d.runs[d.component_of(from)];
            let len = hi - lo + 1;
            for i in 0..len {
                let e = lo + (from - lo + i) % len;
                new_label[e as usize] = next;
                next += 1;
                order.push(e);
            }
            len
        };

        runs.push(label_component(start, &mut new_label, &mut order));
        let mut i = 0;
        while i < order.len() {
            let (x, _) = self.head[order[i] as usize];
            let c = &d.crossings[x];
            for pos in 0..4 {
                let e = c.edges[pos];
                if new_label[e as usize] == 0 && c.is_incoming(pos) {
                    runs.push(label_component(e, &mut new_label, &mut order));
                }
            }
            i += 1;
        }

        let mut crossings: Vec<[u32; 5]> = Vec::with_capacity(piece_crossings);
        let mut seen = vec![false; d.crossings.len()];
        for &e in &order {
            let (x, _) = self.head[e as usize];
            if !seen[x] {
                seen[x] = true;
                let c = &d.crossings[x];
                let [a, b, cc, dd] = c.edges.map(|l| new_label[l as usize]);
                crossings.push([a, b, cc, dd, c.positive as u32]);
            }
        }
        crossings.sort_unstable();

        let mut code = Vec::with_capacity(1 + runs.len() + 5 * crossings.len());
        code.push(runs.len() as u32);
        code.extend(runs);
        code.extend(crossings.into_iter().flatten());
        code
    }
}

impl Diagram {
    /// Splits off the connected pieces that carry crossings. Free loops are
    /// not included; each piece has `free_loops == 0`.
    pub fn pieces(&self) -> Vec<Diagram> {
        let n = self.runs.len();
        if n == 0 {
            return Vec::new();
        }
        // Union components that share a crossing.
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for c in &self.crossings {
            let a = find(&mut parent, self.component_of(c.under_in_edge()));
            let b = find(&mut parent, self.component_of(c.over_in_edge()));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let roots: Vec<usize> = (0..n).map(|i| find(&mut parent, i)).collect();
        let mut groups: Vec<usize> = roots.clone();
        groups.sort_unstable();
        groups.dedup();
        if groups.len() == 1 {
            return vec![Diagram { free_loops: 0, ..self.clone() }];
        }
        groups
            .iter()
            .map(|&g| {
                let crossings: Vec<Crossing> = self
                    .crossings
                    .iter()
                    .filter(|c| roots[self.component_of(c.under_in_edge())] == g)
                    .copied()
                    .collect();
                Diagram::from_oriented(crossings, 0)
            })
            .collect()
    }

    /// Minimal code of a connected diagram without free loops.
    fn piece_code(&self) -> Vec<u32> {
        let walk = Walk::new(self);
        (1..=self.num_edges()).map(|start| walk.code_from(start, self.crossings.len())).min().unwrap_or_default()
    }

    /// Key identifying this diagram up to relabeling, choice of base points
    /// and component order.
    pub fn canonical_key(&self) -> CanonicalKey {
        let mut codes: Vec<Vec<u32>> = self.pieces().iter().map(Diagram::piece_code).collect();
        codes.sort_unstable();
        let mut key = vec![self.free_loops, codes.len() as u32];
        for c in codes {
            key.push(c.len() as u32);
            key.extend(c);
        }
        CanonicalKey(key)
    }

    /// Key of a connected diagram without free loops; cheaper than
    /// [`Diagram::canonical_key`] when the caller has already split it.
    pub(crate) fn connected_key(&self) -> CanonicalKey {
        CanonicalKey(self.piece_code())
    }

    /// Text form of [`Diagram::canonical_key`].
    pub fn canonical_code(&self) -> String {
        self.canonical_key().to_string()
    }
}
