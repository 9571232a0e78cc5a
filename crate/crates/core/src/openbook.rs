//! Fundamental groups of open books whose page is the three-holed sphere.
//!
//! With monodromy `T1^a T2^b T3^c` the closed manifold has
//! `pi1 = <x, y | (xy)^a x^b, (xy)^a y^c>`. Triviality is decided by the
//! abelianization, then coset enumeration, then a search for a nontrivial
//! homomorphism into a small symmetric or cyclic group.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::perm::{cycle_notation, inverse, permutations, Perm};

/// Dehn-twist exponents about the three boundary curves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct OpenBookTriple {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl OpenBookTriple {
    pub fn new(a: i64, b: i64, c: i64) -> Self {
        OpenBookTriple { a, b, c }
    }

    /// Relabels the boundary curves so that `|a| <= |b| <= |c|`, breaking
    /// ties by the signed value.
    pub fn normalized(&self) -> Self {
        let mut v = [self.a, self.b, self.c];
        v.sort_by_key(|&x| (x.abs(), x));
        OpenBookTriple::new(v[0], v[1], v[2])
    }

    fn as_array(&self) -> [i64; 3] {
        [self.a, self.b, self.c]
    }
}

impl fmt::Display for OpenBookTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.a, self.b, self.c)
    }
}

/// Freely reduced word; letters `1 = x`, `-1 = x^-1`, `2 = y`, `-2 = y^-1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<i8>);

impl Word {
    pub fn new(letters: impl IntoIterator<Item = i8>) -> Word {
        let mut out: Vec<i8> = Vec::new();
        for l in letters {
            assert!(matches!(l, 1 | -1 | 2 | -2), "letter out of range");
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word(out)
    }

    pub fn letters(&self) -> &[i8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `w^n`, with negative powers inverting.
    pub fn pow(&self, n: i64) -> Word {
        let base: Vec<i8> = if n >= 0 { self.0.clone() } else { self.0.iter().rev().map(|l| -l).collect() };
        Word::new((0..n.unsigned_abs()).flat_map(|_| base.iter().copied()))
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word::new(self.0.iter().chain(&other.0).copied())
    }

    /// Exponent sums of `x` and `y`.
    pub fn exponent_sums(&self) -> [i64; 2] {
        let mut s = [0i64; 2];
        for &l in &self.0 {
            s[(l.unsigned_abs() - 1) as usize] += i64::from(l.signum());
        }
        s
    }

    /// Cyclically reduced conjugate.
    fn cyclically_reduced(&self) -> Vec<i8> {
        let w = &self.0;
        let (mut i, mut j) = (0, w.len());
        while j > i + 1 && w[i] == -w[j - 1] {
            i += 1;
            j -= 1;
        }
        w[i..j].to_vec()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let mut first = true;
        let mut i = 0;
        while i < self.0.len() {
            let l = self.0[i];
            let mut n = 1;
            while i + n < self.0.len() && self.0[i + n] == l {
                n += 1;
            }
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            let g = if l.abs() == 1 { "x" } else { "y" };
            let e = n as i64 * i64::from(l.signum());
            if e == 1 {
                f.write_str(g)?;
            } else {
                write!(f, "{g}^{e}")?;
            }
            i += n;
        }
        Ok(())
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Two-generator presentation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Presentation {
    pub num_generators: usize,
    pub relators: Vec<Word>,
}

const X: i8 = 1;
const Y: i8 = 2;

pub fn pi1_presentation(t: &OpenBookTriple) -> Presentation {
    let xy = Word::new([X, Y]);
    let r1 = xy.pow(t.a).concat(&Word::new([X]).pow(t.b));
    let r2 = xy.pow(t.a).concat(&Word::new([Y]).pow(t.c));
    Presentation { num_generators: 2, relators: vec![r1, r2] }
}

/// Diagonal of the Smith normal form of an integer matrix, nonnegative and
/// dividing in sequence. Zero entries mean free summands.
#[allow(clippy::needless_range_loop)]
pub fn smith_normal_form(m: &[Vec<i64>]) -> Vec<i64> {
    let mut a: Vec<Vec<i64>> = m.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    for t in 0..rows.min(cols) {
        // Move a smallest nonzero entry to (t, t), then clear its row and
        // column; repeat until the pivot divides everything below it.
        loop {
            let Some((pi, pj)) = (t..rows)
                .flat_map(|i| (t..cols).map(move |j| (i, j)))
                .filter(|&(i, j)| a[i][j] != 0)
                .min_by_key(|&(i, j)| a[i][j].abs())
            else {
                diag.extend(std::iter::repeat_n(0, rows.min(cols) - t));
                return finish(diag);
            };
            a.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            let p = a[t][t];
            let mut clean = true;
            for i in t + 1..rows {
                let q = a[i][t] / p;
                for j in t..cols {
                    a[i][j] -= q * a[t][j];
                }
                clean &= a[i][t] == 0;
            }
            for j in t + 1..cols {
                let q = a[t][j] / p;
                for i in t..rows {
                    a[i][j] -= q * a[i][t];
                }
                clean &= a[t][j] == 0;
            }
            if !clean {
                continue;
            }
            if let Some(i) = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| a[i][j] % p != 0)) {
                // Fold the offending row into row t to restore divisibility.
                for j in t..cols {
                    a[t][j] += a[i][j];
                }
                continue;
            }
            diag.push(p.abs());
            break;
        }
    }
    finish(diag)
}

fn finish(mut diag: Vec<i64>) -> Vec<i64> {
    // Zeros (free parts) go last.
    diag.sort_by_key(|&d| (d == 0, d));
    diag
}

/// Exponent-sum matrix of the presentation, one row per relator.
pub fn relation_matrix(p: &Presentation) -> Vec<Vec<i64>> {
    p.relators.iter().map(|r| r.exponent_sums()[..p.num_generators].to_vec()).collect()
}

/// Order of the abelianization, 0 when infinite.
pub fn abelianization_order(p: &Presentation) -> u64 {
    let mut m = relation_matrix(p);
    while m.len() < p.num_generators {
        m.push(vec![0; p.num_generators]);
    }
    smith_normal_form(&m).iter().map(|&d| d.unsigned_abs()).product()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "kebab-case")]
pub enum CosetResult {
    Order { order: u64, cosets_defined: u64 },
    Exhausted { max_cosets: usize },
}

/// Coset enumeration over the trivial subgroup, HLT strategy with a
/// lookahead pass whenever the table fills up.
pub fn todd_coxeter(p: &Presentation, max_cosets: usize) -> CosetResult {
    CosetTable::new(p, max_cosets.max(1)).run()
}

const UNDEF: u32 = u32::MAX;

struct CosetTable {
    /// Columns `2g` and `2g + 1` hold generator `g` and its inverse.
    table: Vec<Vec<u32>>,
    parent: Vec<u32>,
    relators: Vec<Vec<usize>>,
    cols: usize,
    max: usize,
    defined: u64,
    queue: Vec<u32>,
}

fn column(letter: i8) -> usize {
    2 * (letter.unsigned_abs() as usize - 1) + usize::from(letter < 0)
}

impl CosetTable {
    fn new(p: &Presentation, max: usize) -> Self {
        let relators = p
            .relators
            .iter()
            .map(|r| r.cyclically_reduced().into_iter().map(column).collect::<Vec<_>>())
            .filter(|r| !r.is_empty())
            .collect();
        let cols = 2 * p.num_generators;
        CosetTable {
            table: vec![vec![UNDEF; cols]],
            parent: vec![0],
            relators,
            cols,
            max,
            defined: 1,
            queue: Vec::new(),
        }
    }

    fn live(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    fn define(&mut self, c: u32, col: usize) {
        let n = self.table.len() as u32;
        self.table.push(vec![UNDEF; self.cols]);
        self.parent.push(n);
        self.defined += 1;
        self.table[c as usize][col] = n;
        self.table[n as usize][col ^ 1] = c;
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut r = c;
        while self.parent[r as usize] != r {
            r = self.parent[r as usize];
        }
        let mut c = c;
        while self.parent[c as usize] != r {
            let next = self.parent[c as usize];
            self.parent[c as usize] = r;
            c = next;
        }
        r
    }

    fn merge(&mut self, a: u32, b: u32) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a != b {
            let (lo, hi) = (a.min(b), a.max(b));
            self.parent[hi as usize] = lo;
            self.queue.push(hi);
        }
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let g = self.queue[i];
            i += 1;
            for col in 0..self.cols {
                let d = self.table[g as usize][col];
                if d == UNDEF {
                    continue;
                }
                self.table[d as usize][col ^ 1] = UNDEF;
                let mu = self.rep(g);
                let nu = self.rep(d);
                if self.table[mu as usize][col] != UNDEF {
                    let t = self.table[mu as usize][col];
                    self.merge(nu, t);
                } else if self.table[nu as usize][col ^ 1] != UNDEF {
                    let t = self.table[nu as usize][col ^ 1];
                    self.merge(mu, t);
                } else {
                    self.table[mu as usize][col] = nu;
                    self.table[nu as usize][col ^ 1] = mu;
                }
            }
        }
        self.queue.clear();
    }

    /// Traces relator `r` from coset `c` in both directions. With `fill`,
    /// missing cosets are defined; otherwise only deductions and
    /// coincidences are recorded. Returns false if the table is full.
    fn scan(&mut self, c: u32, r: usize, fill: bool) -> bool {
        let len = self.relators[r].len();
        let (mut f, mut i) = (c, 0usize);
        let (mut b, mut j) = (c, len);
        loop {
            while i < j {
                let col = self.relators[r][i];
                let next = self.table[f as usize][col];
                if next == UNDEF {
                    break;
                }
                f = next;
                i += 1;
            }
            if i == j {
                if f != b {
                    self.coincidence(f, b);
                }
                return true;
            }
            while j > i {
                let col = self.relators[r][j - 1] ^ 1;
                let next = self.table[b as usize][col];
                if next == UNDEF {
                    break;
                }
                b = next;
                j -= 1;
            }
            if j == i {
                self.coincidence(f, b);
                return true;
            }
            if j == i + 1 {
                let col = self.relators[r][i];
                self.table[f as usize][col] = b;
                self.table[b as usize][col ^ 1] = f;
                return true;
            }
            if !fill {
                return true;
            }
            if self.table.len() >= self.max {
                return false;
            }
            let col = self.relators[r][i];
            self.define(f, col);
        }
    }

    /// Scans every live coset against every relator without defining, then
    /// drops dead rows. Returns the new index of `cursor`.
    fn lookahead(&mut self, cursor: u32) -> u32 {
        for c in 0..self.table.len() as u32 {
            for r in 0..self.relators.len() {
                if !self.live(c) {
                    break;
                }
                self.scan(c, r, false);
            }
        }
        self.compact(cursor)
    }

    fn compact(&mut self, cursor: u32) -> u32 {
        let mut new_index = vec![UNDEF; self.table.len()];
        let mut n = 0u32;
        let mut new_cursor = UNDEF;
        for (c, slot) in new_index.iter_mut().enumerate() {
            if c as u32 >= cursor && new_cursor == UNDEF {
                new_cursor = n;
            }
            if self.live(c as u32) {
                *slot = n;
                n += 1;
            }
        }
        if new_cursor == UNDEF {
            new_cursor = n;
        }
        let mut table = Vec::with_capacity(n as usize);
        for c in 0..self.table.len() {
            if new_index[c] != UNDEF {
                let row =
                    self.table[c].iter().map(|&d| if d == UNDEF { UNDEF } else { new_index[d as usize] }).collect();
                table.push(row);
            }
        }
        self.table = table;
        self.parent = (0..n).collect();
        new_cursor
    }

    fn run(mut self) -> CosetResult {
        let mut c = 0u32;
        while (c as usize) < self.table.len() {
            if self.live(c) {
                let mut full = false;
                for r in 0..self.relators.len() {
                    if !self.live(c) {
                        break;
                    }
                    if !self.scan(c, r, true) {
                        full = true;
                        break;
                    }
                }
                if !full && self.live(c) {
                    for col in 0..self.cols {
                        if self.table[c as usize][col] == UNDEF {
                            if self.table.len() >= self.max {
                                full = true;
                                break;
                            }
                            self.define(c, col);
                        }
                    }
                }
                if full {
                    c = self.lookahead(c);
                    if self.table.len() + self.max / 20 >= self.max {
                        return CosetResult::Exhausted { max_cosets: self.max };
                    }
                    continue;
                }
            }
            c += 1;
        }
        let order = (0..self.table.len() as u32).filter(|&c| self.live(c)).count() as u64;
        CosetResult::Order { order, cosets_defined: self.defined }
    }
}

/// Images of `x` and `y` under a homomorphism to a nontrivial group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    /// `Z<m>` or `S<n>`.
    pub group: String,
    pub x: String,
    pub y: String,
}

/// Searches for a homomorphism with nontrivial image into `Z/m` for
/// `2 <= m <= max_target_order`, then into `S2` to `S5`.
pub fn nontriviality_witness(p: &Presentation, max_target_order: u64) -> Option<Witness> {
    let sums: Vec<[i64; 2]> = p.relators.iter().map(Word::exponent_sums).collect();
    for m in 2..=max_target_order as i64 {
        for x in 0..m {
            for y in 0..m {
                if (x, y) != (0, 0) && sums.iter().all(|s| (s[0] * x + s[1] * y).rem_euclid(m) == 0) {
                    return Some(Witness { group: format!("Z{m}"), x: x.to_string(), y: y.to_string() });
                }
            }
        }
    }
    for n in 2..=5usize {
        let perms = permutations(n);
        let inverses: Vec<Perm> = perms.iter().map(|p| inverse(p)).collect();
        let id: Perm = (0..n as u8).collect();
        for (xi, x) in perms.iter().enumerate() {
            for (yi, y) in perms.iter().enumerate() {
                if *x == id && *y == id {
                    continue;
                }
                let image = |l: i8| match l {
                    1 => &perms[xi],
                    -1 => &inverses[xi],
                    2 => &perms[yi],
                    _ => &inverses[yi],
                };
                let kills = |w: &Word| {
                    (0..n).all(|pt| {
                        let mut q = pt as u8;
                        for &l in w.letters() {
                            q = image(l)[q as usize];
                        }
                        q as usize == pt
                    })
                };
                if p.relators.iter().all(kills) {
                    return Some(Witness { group: format!("S{n}"), x: cycle_notation(x), y: cycle_notation(y) });
                }
            }
        }
    }
    None
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    TrivialPi1,
    NontrivialPi1,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::TrivialPi1 => "trivial-pi1",
            Verdict::NontrivialPi1 => "nontrivial-pi1",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Certificate {
    /// Nontrivial first homology; `order` 0 means infinite.
    Abelianization {
        invariants: Vec<i64>,
        order: u64,
    },
    CosetEnumeration {
        order: u64,
        cosets_defined: u64,
    },
    Homomorphism {
        witness: Witness,
    },
    None {
        max_cosets: usize,
        max_target_order: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budgets {
    pub max_cosets: usize,
    pub max_target_order: u64,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets { max_cosets: 20_000, max_target_order: 120 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub triple: OpenBookTriple,
    pub normalized: OpenBookTriple,
    pub presentation: Presentation,
    pub verdict: Verdict,
    pub certificate: Certificate,
}

pub fn classify_triple(t: &OpenBookTriple, budgets: &Budgets) -> Classification {
    let normalized = t.normalized();
    let presentation = pi1_presentation(&normalized);
    let (verdict, certificate) = decide(&presentation, budgets);
    Classification { triple: *t, normalized, presentation, verdict, certificate }
}

fn decide(p: &Presentation, budgets: &Budgets) -> (Verdict, Certificate) {
    let order = abelianization_order(p);
    if order != 1 {
        let invariants = smith_normal_form(&relation_matrix(p));
        return (Verdict::NontrivialPi1, Certificate::Abelianization { invariants, order });
    }
    match todd_coxeter(p, budgets.max_cosets) {
        CosetResult::Order { order: 1, cosets_defined } => {
            (Verdict::TrivialPi1, Certificate::CosetEnumeration { order: 1, cosets_defined })
        }
        CosetResult::Order { order, cosets_defined } => {
            (Verdict::NontrivialPi1, Certificate::CosetEnumeration { order, cosets_defined })
        }
        CosetResult::Exhausted { .. } => match nontriviality_witness(p, budgets.max_target_order) {
            Some(witness) => (Verdict::NontrivialPi1, Certificate::Homomorphism { witness }),
            None => (
                Verdict::Inconclusive,
                Certificate::None { max_cosets: budgets.max_cosets, max_target_order: budgets.max_target_order },
            ),
        },
    }
}

/// All triples with `|a| <= |b| <= |c| <= range`.
pub fn normalized_triples(range: i64) -> Vec<OpenBookTriple> {
    let mut out = Vec::new();
    for a in -range..=range {
        for b in -range..=range {
            for c in -range..=range {
                if a.abs() <= b.abs() && b.abs() <= c.abs() {
                    out.push(OpenBookTriple::new(a, b, c));
                }
            }
        }
    }
    out
}

pub fn classify_range(range: i64, budgets: &Budgets, parallel: bool) -> Vec<Classification> {
    let triples = normalized_triples(range);
    if parallel {
        triples.par_iter().map(|t| classify_triple(t, budgets)).collect()
    } else {
        triples.iter().map(|t| classify_triple(t, budgets)).collect()
    }
}

/// Whether some relabeling of `t` is in the list of open books of the
/// 3-sphere with this page.
pub fn in_trivial_list(t: &OpenBookTriple) -> bool {
    permutations_of(t).iter().any(|&[a, b, c]| {
        (a == 0 && b.abs() == 1 && c.abs() == 1)
            || ((a, b) == (-1, 1) || (a, b) == (1, -1))
            || (a, b, c) == (-1, 2, 3)
            || (a, b, c) == (1, -2, -3)
    })
}

fn permutations_of(t: &OpenBookTriple) -> Vec<[i64; 3]> {
    let v = t.as_array();
    [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]].iter().map(|p| p.map(|i| v[i])).collect()
}

fn hopf(sign: i64) -> &'static str {
    if sign > 0 {
        "H+"
    } else {
        "H-"
    }
}

/// Fibered link in the 3-sphere whose monodromy is `t`, for triples in the
/// trivial list.
pub fn associated_link(t: &OpenBookTriple) -> Option<String> {
    let perms = permutations_of(t);
    for &[a, b, c] in &perms {
        if a == 0 && b.abs() == 1 && c.abs() == 1 {
            return Some(format!("{}#{}", hopf(b), hopf(c)));
        }
    }
    for &[a, b, n] in &perms {
        if (a, b) == (1, -1) {
            return Some(format!("P(2,{},-2)", -2 * n));
        }
        if (a, b) == (-1, 1) {
            return Some(format!("P(-2,{},2)", 2 * n));
        }
    }
    for &p in &perms {
        if p == [-1, 2, 3] {
            return Some("L^ex".to_string());
        }
        if p == [1, -2, -3] {
            return Some("mirror(L^ex)".to_string());
        }
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportRow {
    pub triple: OpenBookTriple,
    pub link: Option<String>,
    pub certificate: Certificate,
}

/// Triples with `|a| <= |b| <= |c| <= range` whose open book is the
/// 3-sphere, with the corresponding genus zero fibered link.
pub fn s3_openbook_report(range: i64, budgets: &Budgets, parallel: bool) -> Vec<ReportRow> {
    classify_range(range, budgets, parallel)
        .into_iter()
        .filter(|c| c.verdict == Verdict::TrivialPi1)
        .map(|c| ReportRow { triple: c.triple, link: associated_link(&c.triple), certificate: c.certificate })
        .collect()
}
