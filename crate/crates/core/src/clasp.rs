//! Conway and zeroth-coefficient HOMFLY models of knots with a two-clasp
//! disk, and the obstructions they give.
//!
//! A clasp disk with clasps of signs `eps1`, `eps2` is described by the
//! linking numbers `l1 = lk(K_ou)`, `l2 = lk(K_uo)` of the two annulus links
//! obtained by smoothing one clasp and resolving the other, together with
//! `l = lk(alpha, beta+)` on the surface obtained by smoothing both. The disk
//! is of type X when smoothing both clasps leaves a knot and of type II when
//! it leaves a 3-component link `K1 u K2 u K3`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::laurent::LaurentPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum DiskType {
    X,
    II,
}

impl fmt::Display for DiskType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DiskType::X => "X",
            DiskType::II => "II",
        })
    }
}

impl FromStr for DiskType {
    type Err = ClaspError;

    fn from_str(s: &str) -> Result<Self, ClaspError> {
        match s.trim() {
            "X" | "x" => Ok(DiskType::X),
            "II" | "ii" => Ok(DiskType::II),
            other => Err(ClaspError::UnknownDiskType(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClaspError {
    #[error("unknown disk type `{0}` (expected X or II)")]
    UnknownDiskType(String),
    #[error("clasp signs must be +1 or -1, got {0}")]
    BadSign(i64),
    #[error("a type II model needs the p0 polynomial of the third component")]
    MissingThirdComponent,
    #[error("a type X model has no third component")]
    UnexpectedThirdComponent,
}

/// Parameters of a two-clasp disk. Field order gives the lexicographic
/// order used when listing solutions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ClaspParams {
    pub eps1: i64,
    pub eps2: i64,
    pub l1: i64,
    pub l2: i64,
    pub l: i64,
    pub disk_type: DiskType,
}

impl ClaspParams {
    pub fn new(eps1: i64, eps2: i64, l1: i64, l2: i64, l: i64, disk_type: DiskType) -> Result<Self, ClaspError> {
        for e in [eps1, eps2] {
            if e != 1 && e != -1 {
                return Err(ClaspError::BadSign(e));
            }
        }
        Ok(ClaspParams { eps1, eps2, l1, l2, l, disk_type })
    }

    /// Coefficients `(a2, a4)` of the model Conway polynomial.
    pub fn conway_coefficients(&self) -> (i64, i64) {
        let ClaspParams { eps1, eps2, l1, l2, l, disk_type } = *self;
        match disk_type {
            DiskType::X => (eps1 * l1 + eps2 * l2 + eps1 * eps2, eps1 * eps2 * (l1 * l2 - l * (l + 1))),
            DiskType::II => (eps1 * l1 + eps2 * l2, eps1 * eps2 * (l1 * l2 - l * l)),
        }
    }

    /// Pairwise linking numbers `(lk12, lk13, lk23)` of the three components
    /// left by smoothing both clasps of a type II disk.
    pub fn component_linking_numbers(&self) -> (i64, i64, i64) {
        (-self.l, self.l1 + self.l, self.l2 + self.l)
    }
}

/// Conway polynomial of a knot bounding the described disk.
pub fn conway_model(p: &ClaspParams) -> LaurentPoly {
    let (a2, a4) = p.conway_coefficients();
    LaurentPoly::from_z_terms([(0, 1), (2, a2), (4, a4)])
}

/// Recovers `(l, l1, l2)` from the linking numbers of `K1, K2, K3`.
pub fn link_to_params(lk12: i64, lk13: i64, lk23: i64) -> (i64, i64, i64) {
    (-lk12, lk13 + lk12, lk23 + lk12)
}

/// All parameters with `|l1|, |l2|, |l| <= bound` whose Conway model has
/// the given `z^2` and `z^4` coefficients, sorted.
pub fn enumerate_params(a2: i64, a4: i64, disk_type: DiskType, bound: i64) -> Vec<ClaspParams> {
    let mut out = Vec::new();
    for eps1 in [-1, 1] {
        for eps2 in [-1, 1] {
            for l1 in -bound..=bound {
                // a2 is linear in l2, so l2 is determined.
                let rest = match disk_type {
                    DiskType::X => a2 - eps1 * l1 - eps1 * eps2,
                    DiskType::II => a2 - eps1 * l1,
                };
                let l2 = eps2 * rest;
                if l2.abs() > bound {
                    continue;
                }
                for l in -bound..=bound {
                    let p = ClaspParams { eps1, eps2, l1, l2, l, disk_type };
                    if p.conway_coefficients() == (a2, a4) {
                        out.push(p);
                    }
                }
            }
        }
    }
    out.sort();
    out
}

/// True when no type X disk can exist: `a4` odd and `a2` even.
pub fn typex_parity_obstruction(a2: i64, a4: i64) -> bool {
    a4.rem_euclid(2) == 1 && a2.rem_euclid(2) == 0
}

/// True when `a4 = 3 mod 8` and `a2 = 2 mod 4`, which rules out clasp
/// number two altogether.
pub fn kadokami_kawamura_excluded(a2: i64, a4: i64) -> bool {
    a4.rem_euclid(8) == 3 && a2.rem_euclid(4) == 2
}

/// Zeroth coefficient HOMFLY polynomial of a knot bounding the described
/// disk, given the p0 polynomials of the components `K1`, `K2` (and `K3`
/// for type II).
pub fn p0_model(
    p: &ClaspParams,
    p0_k1: &LaurentPoly,
    p0_k2: &LaurentPoly,
    p0_k3: Option<&LaurentPoly>,
) -> Result<LaurentPoly, ClaspError> {
    let e1 = p.eps1 as i32;
    let e2 = p.eps2 as i32;
    let w = &LaurentPoly::v_pow(-1) - &LaurentPoly::v_pow(1);
    let mut out = LaurentPoly::v_pow(2 * (e1 + e2));
    let t1 = (&w * &(p0_k1 * p0_k1)).shift(e1 + 2 * e2 + 2 * p.l1 as i32, 0);
    let t2 = (&w * &(p0_k2 * p0_k2)).shift(e2 + 2 * e1 + 2 * p.l2 as i32, 0);
    out += &t1.scale(&BigInt::from(p.eps1));
    out += &t2.scale(&BigInt::from(p.eps2));
    match (p.disk_type, p0_k3) {
        (DiskType::X, None) => Ok(out),
        (DiskType::X, Some(_)) => Err(ClaspError::UnexpectedThirdComponent),
        (DiskType::II, None) => Err(ClaspError::MissingThirdComponent),
        (DiskType::II, Some(p3)) => {
            let t3 = (&(&w * &w) * &(&(p0_k1 * p0_k2) * p3)).shift(2 * (p.l1 + p.l2 + p.l) as i32 + e1 + e2, 0);
            out += &t3.scale(&BigInt::from(p.eps1 * p.eps2));
            Ok(out)
        }
    }
}

/// Limits for [`typex_sum_of_squares_search`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SosBounds {
    /// `f1`, `f2` have `v`-exponents in `[-deg_bound, deg_bound]`.
    pub deg_bound: i32,
    /// Coefficients of `f1`, `f2` lie in `[-coeff_bound, coeff_bound]`.
    pub coeff_bound: i64,
    /// Maximum number of candidate `f1` tried.
    pub work_budget: u64,
}

impl Default for SosBounds {
    fn default() -> Self {
        SosBounds { deg_bound: 6, coeff_bound: 8, work_budget: 2_000_000 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum SosVerdict {
    /// `(p0 - v^(2(eps1+eps2))) / (v^-2 - 1) = eps1 f1^2 + eps2 f2^2`.
    Found { f1: String, f2: String },
    /// The sign pair is impossible: the division is not exact.
    Refuted { reason: String },
    /// No witness within the bounds. `exhaustive` is false when the work
    /// budget ran out before the box was covered.
    Inconclusive { exhaustive: bool, candidates_tried: u64 },
}

impl SosVerdict {
    pub fn is_refuted(&self) -> bool {
        matches!(self, SosVerdict::Refuted { .. })
    }
}

/// The remainder `(p0 - v^(2(eps1+eps2))) / (v^-2 - 1)`, if exact.
pub fn typex_remainder(p0: &LaurentPoly, eps1: i64, eps2: i64) -> Option<LaurentPoly> {
    let num = p0 - &LaurentPoly::v_pow(2 * (eps1 + eps2) as i32);
    num.div_exact_v(&(&LaurentPoly::v_pow(-2) - &LaurentPoly::one()))
}

fn within(f: &LaurentPoly, bounds: &SosBounds) -> bool {
    let parities: Vec<i32> = f.terms().map(|(m, _)| m.v.rem_euclid(2)).collect();
    f.terms().all(|(m, c)| m.v.abs() <= bounds.deg_bound && c.abs() <= BigInt::from(bounds.coeff_bound))
        && parities.windows(2).all(|w| w[0] == w[1])
}

/// Searches for `f1`, `f2` in `Z[v^2, v^-2]` or `v Z[v^2, v^-2]` with
/// `(p0 - v^(2(eps1+eps2))) / (v^-2 - 1) = eps1 f1^2 + eps2 f2^2`.
///
/// Candidates for `f1` are enumerated in a fixed order and `f2` is recovered
/// by an exact square root, so the result is deterministic.
pub fn typex_sum_of_squares_search(p0: &LaurentPoly, eps1: i64, eps2: i64, bounds: &SosBounds) -> SosVerdict {
    let Some(r) = typex_remainder(p0, eps1, eps2) else {
        return SosVerdict::Refuted { reason: "p0 - v^(2(eps1+eps2)) is not divisible by v^-2 - 1".into() };
    };
    let sign2 = BigInt::from(eps2);
    let sign1 = BigInt::from(eps1);
    let try_f2 = |f1: &LaurentPoly| -> Option<LaurentPoly> {
        let t = (&r - &(f1 * f1).scale(&sign1)).scale(&sign2);
        let f2 = t.sqrt_v()?;
        within(&f2, bounds).then_some(f2)
    };
    let found = |f1: LaurentPoly, f2: LaurentPoly| SosVerdict::Found { f1: f1.to_string(), f2: f2.to_string() };

    if let Some(f2) = try_f2(&LaurentPoly::zero()) {
        return found(LaurentPoly::zero(), f2);
    }

    // With equal signs there is no cancellation between the squares, so
    // both lie between half the lowest and half the highest exponent of r.
    let (mut lo, mut hi) = (-bounds.deg_bound, bounds.deg_bound);
    if eps1 == eps2 {
        match (r.min_v(), r.max_v()) {
            (Some(a), Some(b)) => {
                lo = lo.max(a.div_euclid(2) + a.rem_euclid(2));
                hi = hi.min(b.div_euclid(2));
            }
            _ => unreachable!("zero remainder is handled above"),
        }
    }

    let dense_r = DenseV::from_poly(&r, 2 * lo.min(-bounds.deg_bound), 2 * hi.max(bounds.deg_bound));
    // Candidates are visited in layers of growing largest coefficient, so
    // small witnesses are found early under a tight work budget.
    let mut tried = 0u64;
    for m in 1..=bounds.coeff_bound {
        for parity in [0, 1] {
            let exps: Vec<i32> = (lo..=hi).filter(|e| e.rem_euclid(2) == parity).collect();
            if exps.is_empty() {
                continue;
            }
            let mut coeffs = vec![-m; exps.len()];
            loop {
                // Skip earlier layers and vectors whose leading coefficient is
                // negative; f1 and -f1 give the same square.
                let lead = coeffs.iter().rev().find(|x| **x != 0);
                if lead.is_some_and(|x| *x > 0) && coeffs.iter().any(|x| x.abs() == m) {
                    tried += 1;
                    if tried > bounds.work_budget {
                        return SosVerdict::Inconclusive { exhaustive: false, candidates_tried: tried - 1 };
                    }
                    let plausible = dense_r.as_ref().is_none_or(|d| d.square_plausible(&exps, &coeffs, eps1, eps2));
                    if plausible {
                        let f1 = LaurentPoly::from_v_terms(exps.iter().zip(&coeffs).map(|(&e, &k)| (e, k)));
                        if let Some(f2) = try_f2(&f1) {
                            return found(f1, f2);
                        }
                    }
                }
                // Advance the odometer.
                let mut i = 0;
                while i < coeffs.len() && coeffs[i] == m {
                    coeffs[i] = -m;
                    i += 1;
                }
                if i == coeffs.len() {
                    break;
                }
                coeffs[i] += 1;
            }
        }
    }
    SosVerdict::Inconclusive { exhaustive: true, candidates_tried: tried }
}

/// Dense copy of the remainder, used to reject most candidates before the
/// exact square root.
struct DenseV {
    /// Exponent of `coeffs[0]`.
    low: i32,
    coeffs: Vec<i128>,
}

impl DenseV {
    /// `None` when a coefficient does not fit in `i64`.
    fn from_poly(r: &LaurentPoly, low: i32, high: i32) -> Option<DenseV> {
        let low = low.min(r.min_v().unwrap_or(low));
        let high = high.max(r.max_v().unwrap_or(high));
        let mut coeffs = vec![0i128; (high - low + 1) as usize];
        for (m, c) in r.terms() {
            coeffs[(m.v - low) as usize] = i128::from(i64::try_from(c).ok()?);
        }
        Some(DenseV { low, coeffs })
    }

    /// Whether `eps2 (r - eps1 f1^2)` is the square of a polynomial whose
    /// exponents share one parity.
    fn square_plausible(&self, exps: &[i32], coeffs: &[i64], eps1: i64, eps2: i64) -> bool {
        let mut t = self.coeffs.clone();
        for (i, &a) in coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in coeffs.iter().enumerate() {
                let e = exps[i] + exps[j] - self.low;
                t[e as usize] -= i128::from(eps1 * a * b);
            }
        }
        let Some(top) = t.iter().rposition(|&c| c != 0) else { return true };
        let bottom = t.iter().position(|&c| c != 0).expect("nonzero");
        if (bottom as i32 + self.low).rem_euclid(2) != 0 || (top - bottom) % 4 != 0 {
            return false;
        }
        // Coefficients at exponents bottom, bottom + 2, ...; odd offsets must vanish.
        let mut even = Vec::with_capacity((top - bottom) / 2 + 1);
        for (k, &c) in t[bottom..=top].iter().enumerate() {
            if k % 2 == 1 {
                if c != 0 {
                    return false;
                }
            } else {
                even.push(c * i128::from(eps2));
            }
        }
        dense_sqrt(&even).is_some()
    }
}

/// Square root of `sum t_j w^j` with positive leading coefficient, solved
/// from the top coefficient down.
fn dense_sqrt(t: &[i128]) -> Option<Vec<i128>> {
    let n = t.len();
    if n.is_multiple_of(2) {
        return None;
    }
    let m = n / 2 + 1;
    let lead = *t.last()?;
    if lead <= 0 || !is_square(lead) {
        return None;
    }
    let mut g = vec![0i128; m];
    g[m - 1] = (lead as f64).sqrt().round() as i128;
    for k in (0..m - 1).rev() {
        let idx = m - 1 + k;
        let s: i128 =
            (k + 1..m - 1).filter(|&i| idx >= i && idx - i < m && idx - i > k).map(|i| g[i] * g[idx - i]).sum();
        let rest = t[idx] - s;
        let div = 2 * g[m - 1];
        if rest % div != 0 {
            return None;
        }
        g[k] = rest / div;
    }
    for (j, &tj) in t.iter().enumerate() {
        let lo = j.saturating_sub(m - 1);
        let conv: i128 = (lo..=j.min(m - 1)).map(|i| g[i] * g[j - i]).sum();
        if conv != tj {
            return None;
        }
    }
    Some(g)
}

fn is_square(c: i128) -> bool {
    let r = (c as f64).sqrt() as i128;
    (r.saturating_sub(1)..=r + 1).any(|x| x >= 0 && x * x == c)
}

/// Runs the search for all four sign pairs. The knot is obstructed from a
/// type X disk when every pair is refuted.
pub fn typex_p0_obstruction(p0: &LaurentPoly, bounds: &SosBounds) -> Vec<((i64, i64), SosVerdict)> {
    let mut out = Vec::new();
    for eps1 in [1, -1] {
        for eps2 in [1, -1] {
            out.push(((eps1, eps2), typex_sum_of_squares_search(p0, eps1, eps2, bounds)));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn params(eps1: i64, eps2: i64, l1: i64, l2: i64, l: i64, t: DiskType) -> ClaspParams {
        ClaspParams::new(eps1, eps2, l1, l2, l, t).unwrap()
    }

    #[test]
    fn conway_models() {
        assert_eq!(conway_model(&params(1, 1, 1, 1, 0, DiskType::II)), poly("1 + 2*z^2 + z^4"));
        assert_eq!(conway_model(&params(1, 1, 0, 0, 0, DiskType::II)), LaurentPoly::one());
        assert_eq!(conway_model(&params(1, 1, 0, 0, 0, DiskType::X)), poly("1 + z^2"));
        assert!(ClaspParams::new(2, 1, 0, 0, 0, DiskType::X).is_err());
    }

    #[test]
    fn linking_numbers_round_trip() {
        assert_eq!(link_to_params(0, 0, 0), (0, 0, 0));
        assert_eq!(link_to_params(-1, 1, 1), (1, 0, 0));
        for l1 in -3..=3 {
            for l2 in -3..=3 {
                for l in -3..=3 {
                    let p = params(1, -1, l1, l2, l, DiskType::II);
                    let (a, b, c) = p.component_linking_numbers();
                    assert_eq!(link_to_params(a, b, c), (l, l1, l2));
                }
            }
        }
    }

    #[test]
    fn enumeration_examples() {
        assert!(enumerate_params(2, 1, DiskType::II, 3).contains(&params(1, 1, 1, 1, 0, DiskType::II)));
        let zero = enumerate_params(0, 0, DiskType::II, 0);
        assert_eq!(zero.len(), 4);
        assert!(zero.iter().all(|p| (p.l1, p.l2, p.l) == (0, 0, 0)));
        for t in [DiskType::X, DiskType::II] {
            assert!(enumerate_params(2, 3, t, 20).is_empty());
        }
    }

    #[test]
    fn obstructions() {
        assert!(typex_parity_obstruction(0, 1));
        assert!(!typex_parity_obstruction(1, 1));
        assert!(typex_parity_obstruction(2, -1));
        assert!(kadokami_kawamura_excluded(2, 3));
        assert!(kadokami_kawamura_excluded(-2, -5));
        assert!(!kadokami_kawamura_excluded(2, 1));
    }

    #[test]
    fn p0_model_trefoil_form() {
        let one = LaurentPoly::one();
        let p = params(1, 1, 0, 0, 0, DiskType::X);
        assert_eq!(p0_model(&p, &one, &one, None).unwrap(), poly("2*v^2 - v^4"));
        assert_eq!(p0_model(&p, &one, &one, Some(&one)), Err(ClaspError::UnexpectedThirdComponent));
        let q = params(1, -1, 0, 0, 0, DiskType::II);
        assert_eq!(p0_model(&q, &one, &one, None), Err(ClaspError::MissingThirdComponent));
        // By hand: 1 + v^-1(v^-1 - v) - v(v^-1 - v) - (v^-1 - v)^2 = 1.
        assert_eq!(p0_model(&q, &one, &one, Some(&one)).unwrap(), one);
    }

    #[test]
    fn p0_model_is_one_at_v_equal_one() {
        let k: LaurentPoly = poly("2*v^2 - v^4");
        let m: LaurentPoly = poly("v^-2 - 1 + v^2");
        for (eps1, eps2) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
            for (l1, l2, l) in [(0, 0, 0), (2, -1, 3), (-2, 4, -1)] {
                for t in [DiskType::X, DiskType::II] {
                    let p = params(eps1, eps2, l1, l2, l, t);
                    let third = (t == DiskType::II).then_some(&m);
                    let value = p0_model(&p, &k, &m, third).unwrap();
                    assert_eq!(value.substitute_v(1), LaurentPoly::one(), "{p:?}");
                }
            }
        }
    }

    #[test]
    fn sum_of_squares_examples() {
        let b = SosBounds::default();
        assert_eq!(
            typex_sum_of_squares_search(&poly("v^4"), 1, 1, &b),
            SosVerdict::Found { f1: "0".into(), f2: "0".into() }
        );
        let trefoil = poly("2*v^2 - v^4");
        let small = SosBounds { deg_bound: 3, ..b };
        assert_eq!(
            typex_sum_of_squares_search(&trefoil, 1, 1, &small),
            SosVerdict::Found { f1: "1*v^2".into(), f2: "1*v^2".into() }
        );
        assert!(typex_sum_of_squares_search(&poly("2*v^2"), 1, 1, &b).is_refuted());
    }

    #[test]
    fn budget_exhaustion_is_inconclusive() {
        let b = SosBounds { deg_bound: 4, coeff_bound: 3, work_budget: 10 };
        // The remainder is 3 = 2^2 - 1^2, but the budget runs out first.
        let p0 = &LaurentPoly::constant(1) + &poly("3*v^-2 - 3");
        match typex_sum_of_squares_search(&p0, 1, -1, &b) {
            SosVerdict::Inconclusive { exhaustive: false, candidates_tried } => assert_eq!(candidates_tried, 10),
            other => panic!("unexpected {other:?}"),
        }
    }
}
