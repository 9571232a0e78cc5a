//! HOMFLY, Conway and zeroth-coefficient polynomials by skein recursion.
//!
//! Conventions: `v^-1 P(L+) - v P(L-) = z P(L0)` and `P(unknot) = 1`. The
//! zeroth coefficient `p0` satisfies the reduced relation
//! `v^-2 p0(L+) - p0(L-) = p0(L0)` when the crossing joins a component to
//! itself and `v^-2 p0(L+) = p0(L-)` otherwise, with `p0(unknot) = 1`.
//!
//! The recursion walks each component from its lowest label and, at the
//! first crossing met on its under-strand, expands into the switched and the
//! smoothed diagram. Switching keeps labels, so the number of such crossings
//! drops; once none is left the diagram is descending, hence an unlink.
//! Every node is simplified by Reidemeister I/II moves and split into
//! connected pieces, and piece values are cached by canonical key.

use std::num::NonZeroUsize;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Mutex;

use lru::LruCache;
use rayon::prelude::*;

use crate::diagram::{CanonicalKey, Diagram};
use crate::error::{DiagramError, SkeinError};
use crate::laurent::LaurentPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkeinConfig {
    /// Maximum number of cached piece values; 0 disables the cache.
    pub memo_capacity: usize,
    /// Maximum number of recursion nodes per query.
    pub node_budget: u64,
    /// Evaluate the two children of large nodes in parallel, and batches
    /// with rayon.
    pub parallel: bool,
}

impl Default for SkeinConfig {
    fn default() -> Self {
        SkeinConfig { memo_capacity: 1 << 20, node_budget: 10_000_000, parallel: false }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Kind {
    Homfly,
    P0,
}

/// Crossings below which children are evaluated sequentially even in
/// parallel mode.
const PARALLEL_CUTOFF: usize = 9;

pub struct SkeinEngine {
    config: SkeinConfig,
    memo: Option<Mutex<LruCache<(Kind, CanonicalKey), LaurentPoly>>>,
}

impl Default for SkeinEngine {
    fn default() -> Self {
        Self::new(SkeinConfig::default())
    }
}

/// `(v^-1 - v) z^-1`, the value of the 2-component unlink.
fn homfly_split_factor() -> LaurentPoly {
    &LaurentPoly::term(1, -1, -1) - &LaurentPoly::term(1, 1, -1)
}

/// `v^-2 - 1`.
fn p0_split_factor() -> LaurentPoly {
    &LaurentPoly::v_pow(-2) - &LaurentPoly::one()
}

impl SkeinEngine {
    pub fn new(config: SkeinConfig) -> Self {
        let memo = NonZeroUsize::new(config.memo_capacity).map(|cap| Mutex::new(LruCache::new(cap)));
        SkeinEngine { config, memo }
    }

    pub fn config(&self) -> &SkeinConfig {
        &self.config
    }

    /// Number of cached piece values.
    pub fn memo_len(&self) -> usize {
        self.memo.as_ref().map_or(0, |m| m.lock().unwrap().len())
    }

    pub fn clear_memo(&self) {
        if let Some(m) = &self.memo {
            m.lock().unwrap().clear();
        }
    }

    /// HOMFLY polynomial in `v` and `z`.
    pub fn homfly(&self, d: &Diagram) -> Result<LaurentPoly, SkeinError> {
        self.query(Kind::Homfly, d)
    }

    /// Conway polynomial, `P(1, z)`. Zero for split links.
    pub fn conway(&self, d: &Diagram) -> Result<LaurentPoly, SkeinError> {
        Ok(self.homfly(d)?.substitute_v(1))
    }

    /// Zeroth coefficient polynomial, computed by its own recursion.
    pub fn p0(&self, d: &Diagram) -> Result<LaurentPoly, SkeinError> {
        self.query(Kind::P0, d)
    }

    /// Coefficients of `z^2` and `z^4` in the Conway polynomial of a knot.
    pub fn conway_coefficients(&self, d: &Diagram) -> Result<(i64, i64), SkeinError> {
        if !d.is_knot() {
            return Err(DiagramError::NotAKnot(d.num_components()).into());
        }
        let c = self.conway(d)?;
        Ok((c.coefficient_i64(0, 2), c.coefficient_i64(0, 4)))
    }

    /// HOMFLY polynomials of many diagrams, in input order.
    pub fn homfly_many(&self, ds: &[Diagram]) -> Vec<Result<LaurentPoly, SkeinError>> {
        if self.config.parallel {
            ds.par_iter().map(|d| self.homfly(d)).collect()
        } else {
            ds.iter().map(|d| self.homfly(d)).collect()
        }
    }

    fn query(&self, kind: Kind, d: &Diagram) -> Result<LaurentPoly, SkeinError> {
        let nodes = AtomicU64::new(0);
        self.eval(kind, d, &nodes)
    }

    fn split_factor(kind: Kind) -> LaurentPoly {
        match kind {
            Kind::Homfly => homfly_split_factor(),
            Kind::P0 => p0_split_factor(),
        }
    }

    fn eval(&self, kind: Kind, d: &Diagram, nodes: &AtomicU64) -> Result<LaurentPoly, SkeinError> {
        let budget = self.config.node_budget;
        if nodes.fetch_add(1, Ordering::Relaxed) >= budget {
            return Err(SkeinError::BudgetExceeded { budget });
        }
        let d = d.simplify();
        let pieces = d.pieces();
        let split = pieces.len() + d.free_loops() as usize;
        let mut acc = Self::split_factor(kind).pow(split.saturating_sub(1) as u32);
        for piece in &pieces {
            acc = &acc * &self.eval_connected(kind, piece, nodes)?;
        }
        Ok(acc)
    }

    fn lookup(&self, key: &(Kind, CanonicalKey)) -> Option<LaurentPoly> {
        self.memo.as_ref()?.lock().unwrap().get(key).cloned()
    }

    fn store(&self, key: (Kind, CanonicalKey), value: &LaurentPoly) {
        if let Some(m) = &self.memo {
            m.lock().unwrap().put(key, value.clone());
        }
    }

    /// Value of a connected, already simplified diagram.
    fn eval_connected(&self, kind: Kind, d: &Diagram, nodes: &AtomicU64) -> Result<LaurentPoly, SkeinError> {
        let Some(x) = d.first_ascending_crossing() else {
            return Ok(Self::split_factor(kind).pow(d.num_components() as u32 - 1));
        };
        let key = (kind, d.connected_key());
        if let Some(hit) = self.lookup(&key) {
            return Ok(hit);
        }

        let positive = d.crossings()[x].positive;
        let switched = d.switch_crossing(x)?;
        let value = match kind {
            Kind::Homfly => {
                let smoothed = d.smooth_crossing(x)?;
                let (s, o) = self.children(kind, &switched, Some(&smoothed), nodes)?;
                let o = o.expect("smoothed child requested");
                if positive {
                    // P+ = v^2 P- + v z P0
                    &s.shift(2, 0) + &o.shift(1, 1)
                } else {
                    // P- = v^-2 P+ - v^-1 z P0
                    &s.shift(-2, 0) - &o.shift(-1, 1)
                }
            }
            Kind::P0 => {
                // The smoothing contributes only when it splits a component.
                let smoothed = if d.is_self_crossing(x) { Some(d.smooth_crossing(x)?) } else { None };
                let (s, o) = self.children(kind, &switched, smoothed.as_ref(), nodes)?;
                let o = o.unwrap_or_else(LaurentPoly::zero);
                if positive {
                    (&s + &o).shift(2, 0)
                } else {
                    &s.shift(-2, 0) - &o
                }
            }
        };
        self.store(key, &value);
        Ok(value)
    }

    fn children(
        &self,
        kind: Kind,
        switched: &Diagram,
        smoothed: Option<&Diagram>,
        nodes: &AtomicU64,
    ) -> Result<(LaurentPoly, Option<LaurentPoly>), SkeinError> {
        let Some(smoothed) = smoothed else {
            return Ok((self.eval(kind, switched, nodes)?, None));
        };
        if self.config.parallel && switched.num_crossings() >= PARALLEL_CUTOFF {
            let (a, b) = rayon::join(|| self.eval(kind, switched, nodes), || self.eval(kind, smoothed, nodes));
            Ok((a?, Some(b?)))
        } else {
            Ok((self.eval(kind, switched, nodes)?, Some(self.eval(kind, smoothed, nodes)?)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::test_codes::*;
    use crate::laurent::extract_p_i;

    fn d(s: &str) -> Diagram {
        s.parse().unwrap()
    }

    fn poly(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn unknot_and_unlinks() {
        let e = SkeinEngine::default();
        assert_eq!(e.homfly(&Diagram::unknot()).unwrap(), LaurentPoly::one());
        let mu = homfly_split_factor();
        for k in 1..4 {
            assert_eq!(e.homfly(&Diagram::unlink(k)).unwrap(), mu.pow(k - 1));
        }
        assert_eq!(e.p0(&Diagram::unlink(3)).unwrap(), p0_split_factor().pow(2));
        assert!(e.conway(&Diagram::unlink(2)).unwrap().is_zero());
    }

    #[test]
    fn trefoil() {
        let e = SkeinEngine::default();
        let t = d(TREFOIL);
        assert_eq!(e.homfly(&t).unwrap(), poly("2*v^2 - v^4 + v^2*z^2"));
        assert_eq!(e.conway(&t).unwrap(), poly("1 + z^2"));
        assert_eq!(e.p0(&t).unwrap(), poly("2*v^2 - v^4"));
    }

    #[test]
    fn figure_eight() {
        let e = SkeinEngine::default();
        let f = d(FIGURE_EIGHT);
        assert_eq!(e.conway(&f).unwrap(), poly("1 - z^2"));
        assert_eq!(e.conway_coefficients(&f).unwrap(), (-1, 0));
        assert_eq!(e.homfly(&f.mirror()).unwrap(), e.homfly(&f).unwrap());
    }

    #[test]
    fn hopf_links() {
        let e = SkeinEngine::default();
        let h = d(HOPF_POSITIVE);
        assert_eq!(e.p0(&h).unwrap(), &p0_split_factor() * &LaurentPoly::v_pow(2));
        let p = e.homfly(&h).unwrap();
        assert_eq!(extract_p_i(&p, 2, 0).unwrap(), e.p0(&h).unwrap());
        assert_eq!(e.conway(&h).unwrap(), poly("z"));
        assert_eq!(e.conway(&d(HOPF)).unwrap(), poly("-z"));
    }

    #[test]
    fn cache_can_be_disabled() {
        let e = SkeinEngine::new(SkeinConfig { memo_capacity: 0, ..Default::default() });
        assert_eq!(e.p0(&d(TREFOIL)).unwrap(), poly("2*v^2 - v^4"));
        assert_eq!(e.memo_len(), 0);
    }

    #[test]
    fn budget_is_enforced() {
        let e = SkeinEngine::new(SkeinConfig { node_budget: 2, memo_capacity: 0, ..Default::default() });
        assert_eq!(e.homfly(&d(FIGURE_EIGHT)), Err(SkeinError::BudgetExceeded { budget: 2 }));
    }

    #[test]
    fn knot_only_coefficients() {
        let e = SkeinEngine::default();
        assert_eq!(e.conway_coefficients(&Diagram::unknot()).unwrap(), (0, 0));
        assert!(e.conway_coefficients(&d(HOPF)).is_err());
    }
}
