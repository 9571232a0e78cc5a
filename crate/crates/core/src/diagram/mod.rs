//! Oriented link diagrams in planar-diagram (PD) notation.
//!
//! A crossing `X[a,b,c,d]` lists its four edge labels counterclockwise,
//! starting from the incoming under-strand `a`; `c` is the outgoing
//! under-strand. The over-strand runs `b -> d` (a positive crossing) or
//! `d -> b` (a negative crossing). Edges along a component carry consecutive
//! labels, so for parsed input the over-strand direction follows from the
//! labels: the crossing is positive when `d` is the successor of `b`.
//!
//! Every [`Diagram`] is kept normalized: labels are `1..=2n`, each component
//! is a run of consecutive labels traversed in increasing order, and runs are
//! ordered by their lowest label. Crossingless unknotted components are not
//! given edges at all; they are counted in `free_loops`.

mod canonical;
mod moves;
mod pd;
mod simplify;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::DiagramError;

pub use canonical::CanonicalKey;

/// One crossing; positions `0..4` index `edges` counterclockwise from the
/// incoming under-strand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Crossing {
    pub edges: [u32; 4],
    pub positive: bool,
}

impl Crossing {
    pub fn sign(&self) -> i64 {
        if self.positive {
            1
        } else {
            -1
        }
    }

    /// Whether the edge at `pos` enters the crossing.
    pub fn is_incoming(&self, pos: usize) -> bool {
        match pos {
            0 => true,
            2 => false,
            1 => self.positive,
            3 => !self.positive,
            _ => unreachable!("crossing positions are 0..4"),
        }
    }

    /// Position of the incoming end of the over-strand.
    pub fn over_in(&self) -> usize {
        if self.positive {
            1
        } else {
            3
        }
    }

    pub fn under_in_edge(&self) -> u32 {
        self.edges[0]
    }

    pub fn over_in_edge(&self) -> u32 {
        self.edges[self.over_in()]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Diagram {
    crossings: Vec<Crossing>,
    free_loops: u32,
    /// Inclusive label range of each traced component.
    runs: Vec<(u32, u32)>,
}

/// Edge partition of a diagram.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Components {
    pub edge_sets: Vec<Vec<u32>>,
    pub free_loops: u32,
}

impl Components {
    pub fn count(&self) -> usize {
        self.edge_sets.len() + self.free_loops as usize
    }
}

impl Diagram {
    /// The 0-crossing unknot.
    pub fn unknot() -> Self {
        Self::unlink(1)
    }

    /// `k` free loops.
    pub fn unlink(k: u32) -> Self {
        Diagram { crossings: Vec::new(), free_loops: k, runs: Vec::new() }
    }

    /// Builds a normalized diagram from crossings whose labels are arbitrary
    /// but consistent: every label occurs once as an incoming and once as an
    /// outgoing end. Components are ordered by their lowest original label
    /// and traced from it.
    pub(crate) fn from_oriented(crossings: Vec<Crossing>, free_loops: u32) -> Self {
        use std::collections::HashMap;

        let mut head: HashMap<u32, (usize, usize)> = HashMap::with_capacity(crossings.len() * 2);
        for (x, c) in crossings.iter().enumerate() {
            for pos in 0..4 {
                if c.is_incoming(pos) {
                    head.insert(c.edges[pos], (x, pos));
                }
            }
        }
        let mut labels: Vec<u32> = head.keys().copied().collect();
        labels.sort_unstable();

        let mut relabel: HashMap<u32, u32> = HashMap::with_capacity(labels.len());
        let mut runs = Vec::new();
        let mut next = 1u32;
        for &start in &labels {
            if relabel.contains_key(&start) {
                continue;
            }
            let lo = next;
            let mut e = start;
            loop {
                relabel.insert(e, next);
                next += 1;
                let (x, pos) = head[&e];
                e = crossings[x].edges[(pos + 2) % 4];
                if e == start {
                    break;
                }
            }
            runs.push((lo, next - 1));
        }
        let crossings = crossings
            .into_iter()
            .map(|c| Crossing { edges: c.edges.map(|e| relabel[&e]), positive: c.positive })
            .collect();
        Diagram { crossings, free_loops, runs }
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn num_crossings(&self) -> usize {
        self.crossings.len()
    }

    pub fn num_edges(&self) -> u32 {
        2 * self.crossings.len() as u32
    }

    pub fn free_loops(&self) -> u32 {
        self.free_loops
    }

    /// Label runs of the traced components, in component order.
    pub fn runs(&self) -> &[(u32, u32)] {
        &self.runs
    }

    pub fn num_components(&self) -> usize {
        self.runs.len() + self.free_loops as usize
    }

    pub fn is_knot(&self) -> bool {
        self.num_components() == 1
    }

    pub fn components(&self) -> Components {
        Components {
            edge_sets: self.runs.iter().map(|&(lo, hi)| (lo..=hi).collect()).collect(),
            free_loops: self.free_loops,
        }
    }

    /// Component index of an edge label.
    pub fn component_of(&self, label: u32) -> usize {
        self.runs.partition_point(|&(_, hi)| hi < label)
    }

    /// Label following `label` along its component.
    pub fn successor(&self, label: u32) -> u32 {
        let (lo, hi) = self.runs[self.component_of(label)];
        if label == hi {
            lo
        } else {
            label + 1
        }
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(Crossing::sign).sum()
    }

    /// Half the signed count of crossings between components `i` and `j`.
    pub fn linking_number(&self, i: usize, j: usize) -> Result<i64, DiagramError> {
        let len = self.num_components();
        for index in [i, j] {
            if index >= len {
                return Err(DiagramError::ComponentOutOfRange { index, len });
            }
        }
        if i == j {
            return Err(DiagramError::SameComponent(i));
        }
        let twice: i64 = self
            .crossings
            .iter()
            .filter(|c| {
                let a = self.component_of(c.under_in_edge());
                let b = self.component_of(c.over_in_edge());
                (a, b) == (i, j) || (a, b) == (j, i)
            })
            .map(Crossing::sign)
            .sum();
        debug_assert!(twice % 2 == 0);
        Ok(twice / 2)
    }

    /// Sum of linking numbers over all pairs of components.
    pub fn total_linking_number(&self) -> i64 {
        let twice: i64 = self
            .crossings
            .iter()
            .filter(|c| self.component_of(c.under_in_edge()) != self.component_of(c.over_in_edge()))
            .map(Crossing::sign)
            .sum();
        twice / 2
    }

    /// For each crossing, the position at which the standard traversal first
    /// reaches it. Components are walked in order, each from its lowest label.
    pub fn first_visits(&self) -> Vec<usize> {
        let mut head = vec![(0usize, 0usize); self.num_edges() as usize + 1];
        for (x, c) in self.crossings.iter().enumerate() {
            for pos in 0..4 {
                if c.is_incoming(pos) {
                    head[c.edges[pos] as usize] = (x, pos);
                }
            }
        }
        let mut first = vec![usize::MAX; self.crossings.len()];
        for label in 1..=self.num_edges() {
            let (x, pos) = head[label as usize];
            if first[x] == usize::MAX {
                first[x] = pos;
            }
        }
        first
    }

    /// Index of the first crossing met on its under-strand, or `None` when
    /// the diagram is descending.
    pub fn first_ascending_crossing(&self) -> Option<usize> {
        let mut seen = vec![false; self.crossings.len()];
        let mut head = vec![(0usize, 0usize); self.num_edges() as usize + 1];
        for (x, c) in self.crossings.iter().enumerate() {
            for pos in 0..4 {
                if c.is_incoming(pos) {
                    head[c.edges[pos] as usize] = (x, pos);
                }
            }
        }
        for label in 1..=self.num_edges() {
            let (x, pos) = head[label as usize];
            if !seen[x] {
                if pos == 0 {
                    return Some(x);
                }
                seen[x] = true;
            }
        }
        None
    }

    /// Whether both strands at crossing `k` belong to the same component.
    pub fn is_self_crossing(&self, k: usize) -> bool {
        let c = &self.crossings[k];
        self.component_of(c.under_in_edge()) == self.component_of(c.over_in_edge())
    }

    fn check_index(&self, k: usize) -> Result<(), DiagramError> {
        if k >= self.crossings.len() {
            Err(DiagramError::CrossingOutOfRange { index: k, len: self.crossings.len() })
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        pd::write_pd(self, f)
    }
}
