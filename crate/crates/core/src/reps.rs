//! Counts of knot group representations into small symmetric groups.
//!
//! For a conjugacy class `C` of `S_n`, the number of homomorphisms from the
//! link group to `S_n` that send every Wirtinger generator into `C` is an
//! invariant of the link (and of its mirror, whose group is isomorphic). It
//! separates knots that share a HOMFLY polynomial, and serves as a
//! tie-breaker for catalog comparisons.

use serde::Serialize;

use crate::diagram::Diagram;
use crate::perm::{cycle_type, permutations};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct RepCount {
    /// Cycle type of the class, as sorted cycle lengths.
    pub class: Vec<usize>,
    pub count: u64,
}

/// One count per non-identity conjugacy class of `S_n`, ordered by class.
/// Supports `n <= 8`.
pub fn symmetric_rep_counts(d: &Diagram, n: usize) -> Vec<RepCount> {
    assert!(n <= MAX_DEGREE, "degree {n} exceeds {MAX_DEGREE}");
    let problem = Wirtinger::new(d);
    let all = permutations(n);
    let mut classes: Vec<Vec<usize>> = all.iter().map(|p| cycle_type(p)).collect();
    classes.sort();
    classes.dedup();
    classes
        .into_iter()
        .filter(|c| c.len() < n)
        .map(|class| {
            let elems: Vec<P> = all.iter().filter(|p| cycle_type(p) == class).map(|p| pad(p)).collect();
            let size = elems.len() as u64;
            let count = size.pow(d.free_loops()) * problem.count(&elems);
            RepCount { class, count }
        })
        .collect()
}

const MAX_DEGREE: usize = 8;

/// Permutation of `0..8` fixing everything past the working degree.
type P = [u8; MAX_DEGREE];

fn pad(p: &[u8]) -> P {
    let mut out: P = std::array::from_fn(|i| i as u8);
    out[..p.len()].copy_from_slice(p);
    out
}

fn mul(a: &P, b: &P) -> P {
    b.map(|i| a[i as usize])
}

fn inv(a: &P) -> P {
    let mut q = [0u8; MAX_DEGREE];
    for (i, &x) in a.iter().enumerate() {
        q[x as usize] = i as u8;
    }
    q
}

/// Arcs and crossing relations `x_out = x_over^e x_in x_over^-e`.
struct Wirtinger {
    num_arcs: usize,
    relations: Vec<(usize, usize, usize, bool)>,
}

impl Wirtinger {
    fn new(d: &Diagram) -> Self {
        let ne = d.num_edges() as usize;
        let mut parent: Vec<usize> = (0..=ne).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        // The over-strand is a single arc through the crossing.
        for c in d.crossings() {
            let (b, e) = (find(&mut parent, c.edges[1] as usize), find(&mut parent, c.edges[3] as usize));
            parent[b] = e;
        }
        let roots: Vec<usize> = (0..=ne).map(|e| find(&mut parent, e)).collect();
        let mut ids: Vec<usize> = roots[1..].to_vec();
        ids.sort_unstable();
        ids.dedup();
        let arc = |e: u32| ids.binary_search(&roots[e as usize]).expect("edge has an arc");
        let relations =
            d.crossings().iter().map(|c| (arc(c.edges[0]), arc(c.edges[1]), arc(c.edges[2]), c.positive)).collect();
        Wirtinger { num_arcs: ids.len(), relations }
    }

    /// Homomorphisms sending every arc into the class `elems`. Conjugation
    /// permutes them transitively on the image of arc 0, so arc 0 is pinned
    /// to one class member and the result scaled by the class size.
    fn count(&self, elems: &[P]) -> u64 {
        if self.num_arcs == 0 {
            return 1;
        }
        let mut assign: Vec<Option<P>> = vec![None; self.num_arcs];
        assign[0] = Some(elems[0]);
        elems.len() as u64 * self.search(&mut assign, elems)
    }

    /// Fills in every arc forced by a relation. False on a contradiction.
    fn propagate(&self, assign: &mut [Option<P>]) -> bool {
        loop {
            let mut changed = false;
            for &(a, o, c, positive) in &self.relations {
                let Some(xo) = assign[o] else { continue };
                let (l, r) = if positive { (xo, inv(&xo)) } else { (inv(&xo), xo) };
                match (assign[a], assign[c]) {
                    (Some(xa), Some(xc)) => {
                        if mul(&mul(&l, &xa), &r) != xc {
                            return false;
                        }
                    }
                    (Some(xa), None) => {
                        assign[c] = Some(mul(&mul(&l, &xa), &r));
                        changed = true;
                    }
                    (None, Some(xc)) => {
                        assign[a] = Some(mul(&mul(&r, &xc), &l));
                        changed = true;
                    }
                    (None, None) => {}
                }
            }
            if !changed {
                return true;
            }
        }
    }

    /// Unassigned arc that unlocks the most relations once known.
    fn branch_arc(&self, assign: &[Option<P>]) -> Option<usize> {
        let mut score = vec![0usize; self.num_arcs];
        for &(a, o, c, _) in &self.relations {
            if assign[o].is_none() && (assign[a].is_some() != assign[c].is_some()) {
                score[o] += 2;
            }
            if assign[o].is_some() {
                for x in [a, c] {
                    if assign[x].is_none() {
                        score[x] += 1;
                    }
                }
            }
        }
        (0..self.num_arcs).filter(|&i| assign[i].is_none()).max_by_key(|&i| (score[i], std::cmp::Reverse(i)))
    }

    fn search(&self, assign: &mut Vec<Option<P>>, elems: &[P]) -> u64 {
        let saved = assign.clone();
        let total = if !self.propagate(assign) {
            0
        } else {
            match self.branch_arc(assign) {
                None => 1,
                Some(i) => elems
                    .iter()
                    .map(|e| {
                        assign[i] = Some(*e);
                        let n = self.search(assign, elems);
                        assign[i] = None;
                        n
                    })
                    .sum(),
            }
        };
        *assign = saved;
        total
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::test_codes::*;

    fn count(d: &Diagram, n: usize, class: &[usize]) -> u64 {
        symmetric_rep_counts(d, n).into_iter().find(|r| r.class == class).unwrap().count
    }

    #[test]
    fn three_colorings() {
        // Transposition-valued representations into S3 are Fox 3-colorings.
        let t: Diagram = TREFOIL.parse().unwrap();
        let f: Diagram = FIGURE_EIGHT.parse().unwrap();
        assert_eq!(count(&t, 3, &[1, 2]), 9);
        assert_eq!(count(&f, 3, &[1, 2]), 3);
        assert_eq!(count(&Diagram::unknot(), 3, &[1, 2]), 3);
        assert_eq!(count(&Diagram::unlink(2), 3, &[1, 2]), 9);
    }

    #[test]
    fn mirror_invariance() {
        let f: Diagram = FIGURE_EIGHT.parse().unwrap();
        let t: Diagram = TREFOIL.parse().unwrap();
        let k = t.connected_sum(&f).unwrap();
        assert_eq!(symmetric_rep_counts(&k, 4), symmetric_rep_counts(&k.mirror(), 4));
    }
}
