//! Rational tangles and Montesinos knots.
//!
//! Tangles have four ends NW, NE, SW, SE. `[n]` is a row of `n` horizontal
//! twists, `[1/n]` a column of vertical twists, `[0]` joins NW-NE and SW-SE
//! and `[1/0]` joins NW-SW and NE-SE. `A + B` joins A.NE to B.NW and A.SE to
//! B.SW; `A * B` joins A.SW to B.NW and A.SE to B.NE; the closure joins NE to
//! NW and SE to SW. The rational tangle of `p/q` is assembled from the
//! continued fraction `p/q = a_n + 1/(a_(n-1) + ... + 1/a_1)`, ending with a
//! horizontal block `[a_n]` and alternating with vertical blocks before it.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::census::Census;
use crate::diagram::{Crossing, Diagram};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TangleError {
    #[error("cannot parse `{0}` as a rational number or `inf`")]
    Parse(String),
    #[error("0/0 is not an extended rational")]
    ZeroOverZero,
    #[error("{0} is not defined for inf")]
    Infinite(&'static str),
    #[error("a Montesinos description needs exactly 3 entries, got {0}")]
    Length(usize),
}

/// `p/q` in lowest terms with `q >= 0`; `1/0` is infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ExtendedRational {
    p: i64,
    q: i64,
}

impl ExtendedRational {
    pub const INFINITY: ExtendedRational = ExtendedRational { p: 1, q: 0 };

    pub fn new(p: i64, q: i64) -> Result<Self, TangleError> {
        if q == 0 {
            return if p == 0 { Err(TangleError::ZeroOverZero) } else { Ok(Self::INFINITY) };
        }
        let g = p.gcd(&q);
        let s = q.signum();
        Ok(ExtendedRational { p: s * p / g, q: s * q / g })
    }

    pub fn integer(n: i64) -> Self {
        ExtendedRational { p: n, q: 1 }
    }

    pub fn numer(&self) -> i64 {
        self.p
    }

    pub fn denom(&self) -> i64 {
        self.q
    }

    pub fn is_infinite(&self) -> bool {
        self.q == 0
    }

    fn finite(&self, what: &'static str) -> Result<(i64, i64), TangleError> {
        if self.is_infinite() {
            Err(TangleError::Infinite(what))
        } else {
            Ok((self.p, self.q))
        }
    }
}

impl fmt::Display for ExtendedRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.q {
            0 => f.write_str("inf"),
            1 => write!(f, "{}", self.p),
            q => write!(f, "{}/{}", self.p, q),
        }
    }
}

impl FromStr for ExtendedRational {
    type Err = TangleError;

    fn from_str(s: &str) -> Result<Self, TangleError> {
        let t = s.trim();
        if matches!(t, "inf" | "infinity" | "∞") {
            return Ok(Self::INFINITY);
        }
        let bad = || TangleError::Parse(s.to_string());
        match t.split_once('/') {
            Some((p, q)) => {
                let p = p.trim().parse().map_err(|_| bad())?;
                let q = q.trim().parse().map_err(|_| bad())?;
                Self::new(p, q)
            }
            None => Ok(Self::integer(t.parse().map_err(|_| bad())?)),
        }
    }
}

impl Serialize for ExtendedRational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Continued fraction `[a_1, ..., a_n]` with
/// `p/q = a_n + 1/(a_(n-1) + ... + 1/a_1)`, using nearest-integer quotients
/// (ties rounded down).
pub fn continued_fraction(r: ExtendedRational) -> Result<Vec<i64>, TangleError> {
    let (mut p, mut q) = r.finite("continued fraction")?;
    let mut out = Vec::new();
    loop {
        // a = round(p/q) with ties down, q > 0.
        let a = (2 * p + q).div_euclid(2 * q) - i64::from((2 * p + q).rem_euclid(2 * q) == 0);
        out.push(a);
        let rem = p - a * q;
        if rem == 0 {
            break;
        }
        // Next value is q / rem.
        (p, q) = if rem > 0 { (q, rem) } else { (-q, -rem) };
    }
    out.reverse();
    Ok(out)
}

/// Evaluates `a_n + 1/(a_(n-1) + ... + 1/a_1)`.
pub fn evaluate_continued_fraction(a: &[i64]) -> Result<ExtendedRational, TangleError> {
    let mut acc = ExtendedRational::INFINITY;
    for &x in a {
        // acc <- x + 1/acc
        acc = if acc.is_infinite() {
            ExtendedRational::integer(x)
        } else if acc.p == 0 {
            ExtendedRational::INFINITY
        } else {
            ExtendedRational::new(x * acc.p + acc.q, acc.p)?
        };
    }
    Ok(acc)
}

/// A crossing site, or one of the four tangle ends.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Port {
    /// Crossing index and corner: NE 0, NW 1, SW 2, SE 3 (counterclockwise).
    Slot(usize, usize),
    End(usize),
}

const NW: usize = 0;
const NE: usize = 1;
const SW: usize = 2;
const SE: usize = 3;

/// Which strand of a twist crossing passes over: the NW-SE strand for
/// positive twists. Calibrated so that `K(-2/3, inf, -2/3)` is the sum of
/// two positive trefoils.
const POSITIVE_TWIST_OVER_NW_SE: bool = true;

/// An unoriented 4-ended tangle diagram.
#[derive(Clone, Debug)]
pub struct Tangle {
    /// Per crossing: whether the NW-SE strand is the over-strand.
    over_nw_se: Vec<bool>,
    arcs: Vec<(Port, Port)>,
    loops: u32,
}

impl Tangle {
    /// `[0]`.
    pub fn zero() -> Tangle {
        Tangle {
            over_nw_se: Vec::new(),
            arcs: vec![(Port::End(NW), Port::End(NE)), (Port::End(SW), Port::End(SE))],
            loops: 0,
        }
    }

    /// `[1/0]`.
    pub fn infinity() -> Tangle {
        Tangle {
            over_nw_se: Vec::new(),
            arcs: vec![(Port::End(NW), Port::End(SW)), (Port::End(NE), Port::End(SE))],
            loops: 0,
        }
    }

    fn crossing(positive: bool) -> Tangle {
        Tangle {
            over_nw_se: vec![positive == POSITIVE_TWIST_OVER_NW_SE],
            arcs: vec![
                (Port::End(NE), Port::Slot(0, 0)),
                (Port::End(NW), Port::Slot(0, 1)),
                (Port::End(SW), Port::Slot(0, 2)),
                (Port::End(SE), Port::Slot(0, 3)),
            ],
            loops: 0,
        }
    }

    /// `[n]`: `|n|` horizontal twists.
    pub fn horizontal(n: i64) -> Tangle {
        (0..n.unsigned_abs()).fold(Tangle::zero(), |t, _| t.add(&Tangle::crossing(n > 0)))
    }

    /// `[1/n]`: `|n|` vertical twists.
    pub fn vertical(n: i64) -> Tangle {
        (0..n.unsigned_abs()).fold(Tangle::infinity(), |t, _| t.mul(&Tangle::crossing(n > 0)))
    }

    pub fn num_crossings(&self) -> usize {
        self.over_nw_se.len()
    }

    /// Puts `self` and `other` side by side, joining `(self end, other end)`
    /// pairs, and assigns the new ends.
    fn glue(&self, other: &Tangle, joins: [(usize, usize); 2], ends: [(bool, usize); 4]) -> Tangle {
        let shift = self.over_nw_se.len();
        // Tag ports of `other` by moving its ends into a separate range.
        let lift = |p: Port| match p {
            Port::Slot(x, k) => Port::Slot(x + shift, k),
            Port::End(e) => Port::End(e + 4),
        };
        let mut arcs: Vec<(Port, Port)> = self.arcs.clone();
        arcs.extend(other.arcs.iter().map(|&(a, b)| (lift(a), lift(b))));
        let mut loops = self.loops + other.loops;
        for (a, b) in joins {
            loops += merge(&mut arcs, Port::End(a), Port::End(b + 4));
        }
        let rename: HashMap<usize, usize> =
            ends.iter().enumerate().map(|(new, &(from_other, e))| (e + if from_other { 4 } else { 0 }, new)).collect();
        let fix = |p: Port| match p {
            Port::End(e) => Port::End(rename[&e]),
            s => s,
        };
        let arcs = arcs.into_iter().map(|(a, b)| (fix(a), fix(b))).collect();
        let mut over = self.over_nw_se.clone();
        over.extend(&other.over_nw_se);
        Tangle { over_nw_se: over, arcs, loops }
    }

    /// Tangle sum `self + other`.
    pub fn add(&self, other: &Tangle) -> Tangle {
        self.glue(other, [(NE, NW), (SE, SW)], [(false, NW), (true, NE), (false, SW), (true, SE)])
    }

    /// Tangle product `self * other` (other below self).
    pub fn mul(&self, other: &Tangle) -> Tangle {
        self.glue(other, [(SW, NW), (SE, NE)], [(false, NW), (false, NE), (true, SW), (true, SE)])
    }

    /// Rational tangle `Q(r)`.
    pub fn rational(r: ExtendedRational) -> Tangle {
        if r.is_infinite() {
            return Tangle::infinity();
        }
        let a = continued_fraction(r).expect("finite");
        let n = a.len();
        let mut t = if (n - 1).is_multiple_of(2) { Tangle::horizontal(a[0]) } else { Tangle::vertical(a[0]) };
        for (i, &ai) in a.iter().enumerate().skip(1) {
            t = if (n - 1 - i).is_multiple_of(2) {
                t.add(&Tangle::horizontal(ai))
            } else {
                t.mul(&Tangle::vertical(ai))
            };
        }
        t
    }

    /// Numerator closure as an oriented diagram. Components are traced from
    /// the lowest crossing index.
    pub fn closure(&self) -> Diagram {
        let mut arcs = self.arcs.clone();
        let mut loops = self.loops;
        loops += merge(&mut arcs, Port::End(NE), Port::End(NW));
        loops += merge(&mut arcs, Port::End(SE), Port::End(SW));
        let mut partner: HashMap<(usize, usize), (usize, usize)> = HashMap::new();
        for &(a, b) in &arcs {
            match (a, b) {
                (Port::Slot(x, k), Port::Slot(y, l)) => {
                    partner.insert((x, k), (y, l));
                    partner.insert((y, l), (x, k));
                }
                _ => unreachable!("closure leaves no open ends"),
            }
        }

        let n = self.over_nw_se.len();
        // incoming[x][k]: strand enters crossing x at corner k.
        let mut incoming = vec![[false; 4]; n];
        let mut visited = vec![[false; 4]; n];
        // label[x][k]: edge label at corner k.
        let mut label = vec![[0u32; 4]; n];
        let mut next_label = 1u32;
        for x in 0..n {
            for k in [0, 1] {
                if visited[x][k] {
                    continue;
                }
                let (mut cx, mut ck) = (x, k);
                loop {
                    // Enter at (cx, ck), leave at the opposite corner.
                    visited[cx][ck] = true;
                    visited[cx][(ck + 2) % 4] = true;
                    incoming[cx][ck] = true;
                    let out = (cx, (ck + 2) % 4);
                    let (nx, nk) = partner[&out];
                    label[out.0][out.1] = next_label;
                    label[nx][nk] = next_label;
                    next_label += 1;
                    if (nx, nk) == (x, k) {
                        break;
                    }
                    cx = nx;
                    ck = nk;
                }
            }
        }

        let crossings = (0..n)
            .map(|x| {
                let under = if self.over_nw_se[x] { [0, 2] } else { [1, 3] };
                let u_in = if incoming[x][under[0]] { under[0] } else { under[1] };
                let edges = [0, 1, 2, 3].map(|i| label[x][(u_in + i) % 4]);
                Crossing { edges, positive: incoming[x][(u_in + 1) % 4] }
            })
            .collect();
        Diagram::from_oriented(crossings, loops)
    }
}

/// Joins the arcs ending at ports `a` and `b`. Returns 1 when both are ends
/// of the same arc, which then closes up into a free loop.
fn merge(arcs: &mut Vec<(Port, Port)>, a: Port, b: Port) -> u32 {
    let i = arcs.iter().position(|&(x, y)| x == a || y == a).expect("port a present");
    let (x, y) = arcs[i];
    let other_a = if x == a { y } else { x };
    if other_a == b {
        arcs.swap_remove(i);
        return 1;
    }
    arcs.swap_remove(i);
    let j = arcs.iter().position(|&(x, y)| x == b || y == b).expect("port b present");
    let (x, y) = arcs[j];
    let other_b = if x == b { y } else { x };
    arcs[j] = (other_a, other_b);
    0
}

/// Length-three Montesinos description `K(r1, r2, r3)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct MontesinosDesc(pub [ExtendedRational; 3]);

impl MontesinosDesc {
    pub fn new(r1: ExtendedRational, r2: ExtendedRational, r3: ExtendedRational) -> Self {
        MontesinosDesc([r1, r2, r3])
    }

    /// Closure of `Q(r1) + Q(r2) + Q(r3)`. May be a link.
    pub fn diagram(&self) -> Diagram {
        let [a, b, c] = self.0.map(Tangle::rational);
        a.add(&b).add(&c).closure()
    }
}

impl fmt::Display for MontesinosDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = &self.0;
        write!(f, "K({a}, {b}, {c})")
    }
}

impl FromStr for MontesinosDesc {
    type Err = TangleError;

    fn from_str(s: &str) -> Result<Self, TangleError> {
        let inner = s.trim().trim_start_matches('K').trim_start_matches('(').trim_end_matches(')');
        let parts: Vec<ExtendedRational> = inner.split(',').map(str::parse).collect::<Result<_, _>>()?;
        match parts.as_slice() {
            &[a, b, c] => Ok(MontesinosDesc([a, b, c])),
            other => Err(TangleError::Length(other.len())),
        }
    }
}

pub fn montesinos_diagram(m: &MontesinosDesc) -> Diagram {
    m.diagram()
}

/// Exact rational `(numerator, denominator)` with positive denominator.
fn reduce(p: i128, q: i128) -> (i128, i128) {
    let g = p.gcd(&q).max(1);
    let s = q.signum();
    (s * p / g, s * q / g)
}

/// Same fractional parts modulo 1 (as multisets) and same sum.
pub fn montesinos_equivalent(a: &MontesinosDesc, b: &MontesinosDesc) -> Result<bool, TangleError> {
    // Sorted fractional parts and the sum, each as (numerator, denominator).
    type Key = (Vec<(i128, i128)>, (i128, i128));
    let key = |m: &MontesinosDesc| -> Result<Key, TangleError> {
        let mut fracs = Vec::new();
        let mut sum = (0i128, 1i128);
        for r in &m.0 {
            let (p, q) = r.finite("Montesinos equivalence")?;
            let (p, q) = (p as i128, q as i128);
            fracs.push((p.rem_euclid(q), q));
            sum = reduce(sum.0 * q + p * sum.1, sum.1 * q);
        }
        fracs.sort_unstable();
        Ok((fracs, sum))
    };
    Ok(key(a)? == key(b)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// Connected sums.
    I,
    /// Two-bridge knots.
    II,
    /// Montesinos families.
    III,
    /// Exceptional knots.
    IV,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::I => "i",
            Family::II => "ii",
            Family::III => "iii",
            Family::IV => "iv",
        })
    }
}

impl Serialize for Family {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Description {
    ConnectedSum { summands: [String; 2] },
    Montesinos { desc: MontesinosDesc, text: String },
    Named { name: String },
}

#[derive(Clone, Debug, Serialize)]
pub struct CatalogEntry {
    pub family: Family,
    pub name: String,
    /// Family parameter `n`, when the entry belongs to an infinite family.
    pub n: Option<i64>,
    /// Clasp signs, for the exceptional knots.
    pub signs: Option<(i64, i64)>,
    pub description: Description,
    #[serde(skip)]
    pub diagram: Option<Diagram>,
    pub note: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Catalog {
    pub entries: Vec<CatalogEntry>,
    /// Parameter values left out, with the reason.
    pub skipped: Vec<String>,
}

const EXCEPTIONAL: &str = include_str!("../data/exceptional.tsv");

/// A row of the exceptional-knot table.
#[derive(Clone, Debug)]
pub struct ExceptionalRow {
    pub name: String,
    pub eps1: i64,
    pub eps2: i64,
    pub diagram: Diagram,
}

/// Parses `name<TAB>eps1<TAB>eps2<TAB>PD[...]` lines.
pub fn parse_exceptional(text: &str) -> Result<Vec<ExceptionalRow>, String> {
    let mut rows = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') || (i == 0 && line.starts_with("name\t")) {
            continue;
        }
        let f: Vec<&str> = line.split('\t').collect();
        let [name, e1, e2, pd] = f.as_slice() else {
            return Err(format!("line {}: expected 4 tab-separated fields", i + 1));
        };
        let sign = |s: &str| match s.trim() {
            "1" | "+1" | "+" => Ok(1),
            "-1" | "-" => Ok(-1),
            other => Err(format!("line {}: bad sign `{other}`", i + 1)),
        };
        let diagram: Diagram = pd.parse().map_err(|e| format!("line {}: {e}", i + 1))?;
        rows.push(ExceptionalRow { name: name.trim().to_string(), eps1: sign(e1)?, eps2: sign(e2)?, diagram });
    }
    Ok(rows)
}

fn q(p: i64, d: i64) -> ExtendedRational {
    ExtendedRational::new(p, d).expect("nonzero denominator")
}

fn montesinos_entry(family: Family, name: String, n: Option<i64>, m: MontesinosDesc) -> CatalogEntry {
    CatalogEntry {
        family,
        name,
        n,
        signs: None,
        description: Description::Montesinos { desc: m, text: m.to_string() },
        diagram: Some(m.diagram()),
        note: None,
    }
}

/// The knots of the classification of genus two, clasp number two fibered
/// knots with a type II clasp disk, with `|n| <= n_bound` in the infinite
/// families. Exceptional knots come from the shipped table; names without a
/// diagram there are listed with `diagram: None` and a note.
pub fn theorem1_catalog(n_bound: i64, census: &Census) -> Catalog {
    theorem1_catalog_with(n_bound, census, EXCEPTIONAL)
}

pub fn theorem1_catalog_with(n_bound: i64, census: &Census, exceptional: &str) -> Catalog {
    let mut entries = Vec::new();
    let mut skipped = Vec::new();

    let knot = |name: &str| census.get(name).cloned();
    let trefoil = knot("3_1");
    let eight = knot("4_1");
    let sums: [(&str, [&str; 2], Option<Diagram>); 4] = [
        ("3_1#3_1", ["3_1", "3_1"], trefoil.as_ref().map(|t| t.connected_sum(t).expect("knots"))),
        (
            "3_1#4_1",
            ["3_1", "4_1"],
            trefoil.as_ref().zip(eight.as_ref()).map(|(t, e)| t.connected_sum(e).expect("knots")),
        ),
        ("4_1#4_1", ["4_1", "4_1"], eight.as_ref().map(|e| e.connected_sum(e).expect("knots"))),
        ("3_1#-3_1", ["3_1", "mirror(3_1)"], trefoil.as_ref().map(|t| t.connected_sum(&t.mirror()).expect("knots"))),
    ];
    for (name, summands, diagram) in sums {
        let note = diagram.is_none().then(|| "census lacks 3_1 or 4_1".to_string());
        entries.push(CatalogEntry {
            family: Family::I,
            name: name.to_string(),
            n: None,
            signs: None,
            description: Description::ConnectedSum { summands: summands.map(String::from) },
            diagram,
            note,
        });
    }

    for (name, m) in [
        ("6_2", MontesinosDesc::new(q(-2, 3), q(2, 1), q(1, 2))),
        ("6_3", MontesinosDesc::new(q(-2, 3), q(-2, 1), q(1, 2))),
        ("7_7", MontesinosDesc::new(q(-2, 5), q(2, 1), q(1, 2))),
        ("mirror(7_6)", MontesinosDesc::new(q(-2, 5), q(-2, 1), q(1, 2))),
    ] {
        entries.push(montesinos_entry(Family::II, name.to_string(), None, m));
    }
    let two_bridge: Vec<(String, MontesinosDesc)> = entries
        .iter()
        .filter_map(|e| match &e.description {
            Description::Montesinos { desc, .. } => Some((e.name.clone(), *desc)),
            _ => None,
        })
        .collect();

    for n in -n_bound..=n_bound {
        for third in [q(-2, 3), q(-2, 5)] {
            for pm in [1, -1] {
                let m = MontesinosDesc::new(q(1, 2), third, q(2, 4 * n + pm));
                let pm_s = if pm > 0 { "+" } else { "-" };
                let mut e = montesinos_entry(Family::III, format!("K(1/2, {third}, 2/(4n{pm_s}1))"), Some(n), m);
                if let Some((same, _)) = two_bridge.iter().find(|(_, d)| montesinos_equivalent(d, &m).unwrap_or(false))
                {
                    e.note = Some(format!("same description as {same}"));
                }
                entries.push(e);
            }
        }
        for second in [q(2, 3), q(2, 5)] {
            for third in [q(-2, 3), q(-2, 5)] {
                let label = format!("K(1/(2n), {second}, {third})");
                if n == 0 {
                    skipped.push(format!(
                        "{label} at n = 0: the first tangle is 1/0 and the closure is a connected sum of two-bridge knots from family (i)"
                    ));
                    continue;
                }
                let m = MontesinosDesc::new(q(1, 2 * n), second, third);
                entries.push(montesinos_entry(Family::III, label, Some(n), m));
            }
        }
    }

    let rows = match parse_exceptional(exceptional) {
        Ok(rows) => rows,
        Err(e) => {
            skipped.push(format!("exceptional-knot table unreadable: {e}"));
            Vec::new()
        }
    };
    for i in 1..=3 {
        for (eps1, eps2) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
            let name = format!("Kex_{i};{eps1:+},{eps2:+}");
            let row = rows.iter().find(|r| r.name == name);
            entries.push(CatalogEntry {
                family: Family::IV,
                name,
                n: None,
                signs: Some((eps1, eps2)),
                description: Description::Named { name: format!("Kex_{i}") },
                diagram: row.map(|r| r.diagram.clone()),
                note: row.is_none().then(|| "no diagram in the exceptional-knot table".to_string()),
            });
        }
    }
    Catalog { entries, skipped }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> ExtendedRational {
        s.parse().unwrap()
    }

    #[test]
    fn rationals_normalize() {
        assert_eq!(r("4/-6"), q(-2, 3));
        assert_eq!(r("5/0"), ExtendedRational::INFINITY);
        assert_eq!(r("inf").to_string(), "inf");
        assert_eq!(r("-3").to_string(), "-3");
        assert!(matches!("0/0".parse::<ExtendedRational>(), Err(TangleError::ZeroOverZero)));
        assert!("x/2".parse::<ExtendedRational>().is_err());
    }

    #[test]
    fn continued_fraction_examples() {
        assert_eq!(continued_fraction(q(7, 3)).unwrap(), vec![3, 2]);
        assert_eq!(continued_fraction(q(2, 5)).unwrap(), vec![2, 2, 0]);
        assert_eq!(continued_fraction(q(-4, 1)).unwrap(), vec![-4]);
        assert!(continued_fraction(ExtendedRational::INFINITY).is_err());
        for x in [q(7, 3), q(2, 5), q(-2, 3), q(1, 12), q(-13, 8)] {
            assert_eq!(evaluate_continued_fraction(&continued_fraction(x).unwrap()).unwrap(), x);
        }
    }

    #[test]
    fn twist_tangles_have_the_right_size() {
        assert_eq!(Tangle::horizontal(3).num_crossings(), 3);
        assert_eq!(Tangle::vertical(-2).num_crossings(), 2);
        assert_eq!(Tangle::zero().closure().num_components(), 2);
        assert_eq!(Tangle::infinity().closure().num_components(), 1);
        for x in [q(2, 3), q(-2, 5), q(7, 3), q(1, 2)] {
            let expected: i64 = continued_fraction(x).unwrap().iter().map(|a| a.abs()).sum();
            assert_eq!(Tangle::rational(x).num_crossings() as i64, expected);
        }
    }

    #[test]
    fn closures_are_planar() {
        for m in ["-2/3,2,1/2", "-2/5,-2,1/2", "1/4,2/3,-2/5", "1/2,-2/3,2/7"] {
            let d: Diagram = m.parse::<MontesinosDesc>().unwrap().diagram();
            assert_eq!(d.face_count(), d.num_crossings() + 2, "{m}");
        }
    }

    #[test]
    fn equivalence_examples() {
        let m = |s: &str| s.parse::<MontesinosDesc>().unwrap();
        assert!(montesinos_equivalent(&m("1/2,2/3,-2/3"), &m("-1/2,2/3,1/3")).unwrap());
        assert!(montesinos_equivalent(&m("1/2,2/3,-2/5"), &m("-2/5,1/2,2/3")).unwrap());
        assert!(!montesinos_equivalent(&m("1/2,1/3,1/7"), &m("1/2,1/3,2/7")).unwrap());
        assert!(montesinos_equivalent(&m("1/2,inf,1/3"), &m("1/2,inf,1/3")).is_err());
    }

    #[test]
    fn catalog_shape() {
        let c = theorem1_catalog(1, &Census::shipped());
        let count = |f: Family| c.entries.iter().filter(|e| e.family == f).count();
        assert_eq!(count(Family::I), 4);
        assert_eq!(count(Family::II), 4);
        // Four 2/(4n+-1) entries per n and four 1/(2n) entries per n != 0.
        assert_eq!(count(Family::III), 3 * 4 + 2 * 4);
        assert_eq!(count(Family::IV), 12);
        assert_eq!(c.skipped.len(), 4);
        for e in c.entries.iter().filter(|e| e.family != Family::IV) {
            assert!(e.diagram.as_ref().is_some_and(Diagram::is_knot), "{}", e.name);
        }
    }
}
