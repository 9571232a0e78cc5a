//! Brute-force skein evaluation over the full resolution tree: no caching,
//! no Reidemeister moves, no splitting. Shares nothing with the library
//! except the parsed crossing list.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use claspknot::{Diagram, LaurentPoly};

/// Polynomial as `(e_v, e_z) -> coefficient`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Poly(BTreeMap<(i32, i32), i64>);

impl Poly {
    fn one() -> Self {
        Poly([((0, 0), 1)].into_iter().collect())
    }

    fn mono(c: i64, ev: i32, ez: i32) -> Self {
        Poly([((ev, ez), c)].into_iter().collect())
    }

    fn add(&self, other: &Poly, sign: i64) -> Poly {
        let mut out = self.0.clone();
        for (k, c) in &other.0 {
            *out.entry(*k).or_insert(0) += sign * c;
        }
        out.retain(|_, c| *c != 0);
        Poly(out)
    }

    fn mul(&self, other: &Poly) -> Poly {
        let mut out = BTreeMap::new();
        for ((a, b), c) in &self.0 {
            for ((x, y), d) in &other.0 {
                *out.entry((a + x, b + y)).or_insert(0) += c * d;
            }
        }
        out.retain(|_, c| *c != 0);
        Poly(out)
    }

    fn pow(&self, n: usize) -> Poly {
        (0..n).fold(Poly::one(), |acc, _| acc.mul(self))
    }

    pub fn to_laurent(&self) -> LaurentPoly {
        LaurentPoly::from_terms(self.0.iter().map(|(&(ev, ez), &c)| (ev, ez, c)))
    }
}

#[derive(Clone, Copy, Debug)]
struct X {
    in_under: u32,
    out_under: u32,
    in_over: u32,
    out_over: u32,
    positive: bool,
}

#[derive(Clone, Debug)]
struct State {
    xs: Vec<X>,
    loops: usize,
}

impl State {
    fn from_diagram(d: &Diagram) -> State {
        let xs = d
            .crossings()
            .iter()
            .map(|c| {
                let [a, b, cc, dd] = c.edges;
                let (in_over, out_over) = if c.positive { (b, dd) } else { (dd, b) };
                X { in_under: a, out_under: cc, in_over, out_over, positive: c.positive }
            })
            .collect();
        State { xs, loops: d.free_loops() as usize }
    }

    fn next_edge(&self) -> HashMap<u32, (usize, bool, u32)> {
        // edge -> (crossing it enters, entered as under?, outgoing edge)
        let mut m = HashMap::new();
        for (i, x) in self.xs.iter().enumerate() {
            m.insert(x.in_under, (i, true, x.out_under));
            m.insert(x.in_over, (i, false, x.out_over));
        }
        m
    }

    /// Component cycles, each listed from its smallest edge, sorted.
    fn cycles(&self) -> Vec<Vec<u32>> {
        let next = self.next_edge();
        let mut edges: Vec<u32> = next.keys().copied().collect();
        edges.sort_unstable();
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for e in edges {
            if seen.contains(&e) {
                continue;
            }
            let mut cyc = Vec::new();
            let mut f = e;
            while seen.insert(f) {
                cyc.push(f);
                f = next[&f].2;
            }
            out.push(cyc);
        }
        out
    }

    fn num_components(&self) -> usize {
        self.cycles().len() + self.loops
    }

    fn first_ascending(&self) -> Option<usize> {
        let next = self.next_edge();
        let mut met = vec![false; self.xs.len()];
        for cyc in self.cycles() {
            for e in cyc {
                let (i, under, _) = next[&e];
                if !met[i] {
                    if under {
                        return Some(i);
                    }
                    met[i] = true;
                }
            }
        }
        None
    }

    fn switched(&self, i: usize) -> State {
        let mut s = self.clone();
        let x = s.xs[i];
        s.xs[i] = X {
            in_under: x.in_over,
            out_under: x.out_over,
            in_over: x.in_under,
            out_over: x.out_under,
            positive: !x.positive,
        };
        s
    }

    fn smoothed(&self, i: usize) -> State {
        let x = self.xs[i];
        let mut rename: HashMap<u32, u32> = HashMap::new();
        fn root(r: &HashMap<u32, u32>, mut e: u32) -> u32 {
            while let Some(&f) = r.get(&e) {
                e = f;
            }
            e
        }
        for (from, to) in [(x.out_over, x.in_under), (x.out_under, x.in_over)] {
            let (a, b) = (root(&rename, from), root(&rename, to));
            if a != b {
                rename.insert(a, b);
            }
        }
        let xs: Vec<X> = self
            .xs
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, y)| X {
                in_under: root(&rename, y.in_under),
                out_under: root(&rename, y.out_under),
                in_over: root(&rename, y.in_over),
                out_over: root(&rename, y.out_over),
                positive: y.positive,
            })
            .collect();
        let used: BTreeSet<u32> = xs.iter().flat_map(|y| [y.in_under, y.in_over]).collect();
        let closed: BTreeSet<u32> =
            [x.in_under, x.in_over].iter().map(|&e| root(&rename, e)).filter(|e| !used.contains(e)).collect();
        State { xs, loops: self.loops + closed.len() }
    }
}

fn homfly_rec(s: &State) -> Poly {
    let Some(i) = s.first_ascending() else {
        let mu = Poly::mono(1, -1, -1).add(&Poly::mono(1, 1, -1), -1);
        return mu.pow(s.num_components() - 1);
    };
    let sw = homfly_rec(&s.switched(i));
    let sm = homfly_rec(&s.smoothed(i));
    if s.xs[i].positive {
        Poly::mono(1, 2, 0).mul(&sw).add(&Poly::mono(1, 1, 1).mul(&sm), 1)
    } else {
        Poly::mono(1, -2, 0).mul(&sw).add(&Poly::mono(1, -1, 1).mul(&sm), -1)
    }
}

fn p0_rec(s: &State) -> Poly {
    let Some(i) = s.first_ascending() else {
        let f = Poly::mono(1, -2, 0).add(&Poly::one(), -1);
        return f.pow(s.num_components() - 1);
    };
    let sw = p0_rec(&s.switched(i));
    let smoothed = s.smoothed(i);
    // delta = (#K+ - #K0 + 1) / 2 vanishes exactly when smoothing adds a component.
    let delta_zero = smoothed.num_components() == s.num_components() + 1;
    let sm = if delta_zero { p0_rec(&smoothed) } else { Poly::default() };
    if s.xs[i].positive {
        Poly::mono(1, 2, 0).mul(&sw.add(&sm, 1))
    } else {
        Poly::mono(1, -2, 0).mul(&sw).add(&sm, -1)
    }
}

pub fn homfly(d: &Diagram) -> LaurentPoly {
    homfly_rec(&State::from_diagram(d)).to_laurent()
}

pub fn p0(d: &Diagram) -> LaurentPoly {
    p0_rec(&State::from_diagram(d)).to_laurent()
}
