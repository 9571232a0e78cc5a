//! Sparse Laurent polynomials in `v` and `z` with big-integer coefficients.
//!
//! A single type covers the three arities used for knot invariants: the
//! Conway polynomial lives in `z` only, the zeroth coefficient polynomial in
//! `v` only and the HOMFLY polynomial in both. A `z`-only polynomial is just a
//! polynomial whose `v`-exponents are all zero, so mixing arities needs no
//! conversion.
//!
//! Text form: terms sorted by ascending `z`-exponent and then ascending
//! `v`-exponent, every coefficient written out, e.g.
//! `2*v^2 - 1*v^4 + 1*v^2*z^2`. Exponent one is written without `^1`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{ParseError, SkeinError};

/// Exponent pair of a monomial `v^v z^z`.
///
/// Field order matters: the derived ordering sorts by `z` first, which is
/// the display order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub z: i32,
    pub v: i32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { z: 0, v: 0 };

    pub fn new(v: i32, z: i32) -> Self {
        Monomial { z, v }
    }
}

impl Mul for Monomial {
    type Output = Monomial;
    fn mul(self, rhs: Monomial) -> Monomial {
        Monomial { z: self.z + rhs.z, v: self.v + rhs.v }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::term(c, 0, 0)
    }

    /// `c * v^ev * z^ez`
    pub fn term(c: impl Into<BigInt>, ev: i32, ez: i32) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::new(ev, ez), c);
        }
        LaurentPoly { terms }
    }

    pub fn v_pow(k: i32) -> Self {
        Self::term(1, k, 0)
    }

    pub fn z_pow(k: i32) -> Self {
        Self::term(1, 0, k)
    }

    /// Builds a polynomial from `(ev, ez, coeff)` triples; repeated monomials add up.
    pub fn from_terms<I, C>(iter: I) -> Self
    where
        I: IntoIterator<Item = (i32, i32, C)>,
        C: Into<BigInt>,
    {
        let mut p = LaurentPoly::zero();
        for (ev, ez, c) in iter {
            p.add_term(Monomial::new(ev, ez), c.into());
        }
        p
    }

    /// Univariate polynomial in `v` from `(exponent, coeff)` pairs.
    pub fn from_v_terms<I, C>(iter: I) -> Self
    where
        I: IntoIterator<Item = (i32, C)>,
        C: Into<BigInt>,
    {
        Self::from_terms(iter.into_iter().map(|(e, c)| (e, 0, c)))
    }

    /// Univariate polynomial in `z` from `(exponent, coeff)` pairs.
    pub fn from_z_terms<I, C>(iter: I) -> Self
    where
        I: IntoIterator<Item = (i32, C)>,
        C: Into<BigInt>,
    {
        Self::from_terms(iter.into_iter().map(|(e, c)| (0, e, c)))
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Monomial::ONE).is_some_and(|c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in display order.
    pub fn terms(&self) -> impl Iterator<Item = (Monomial, &BigInt)> + '_ {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    /// Coefficient of `v^ev z^ez`, zero when absent.
    pub fn coefficient(&self, ev: i32, ez: i32) -> BigInt {
        self.terms.get(&Monomial::new(ev, ez)).cloned().unwrap_or_default()
    }

    /// Coefficient as an `i64`; panics if it does not fit.
    pub fn coefficient_i64(&self, ev: i32, ez: i32) -> i64 {
        self.coefficient(ev, ez).to_i64().expect("coefficient exceeds i64")
    }

    pub fn involves_v(&self) -> bool {
        self.terms.keys().any(|m| m.v != 0)
    }

    pub fn involves_z(&self) -> bool {
        self.terms.keys().any(|m| m.z != 0)
    }

    pub fn max_z(&self) -> Option<i32> {
        self.terms.keys().map(|m| m.z).max()
    }

    pub fn min_z(&self) -> Option<i32> {
        self.terms.keys().map(|m| m.z).min()
    }

    pub fn max_v(&self) -> Option<i32> {
        self.terms.keys().map(|m| m.v).max()
    }

    pub fn min_v(&self) -> Option<i32> {
        self.terms.keys().map(|m| m.v).min()
    }

    /// Multiplies by the monomial `v^ev z^ez`.
    pub fn shift(&self, ev: i32, ez: i32) -> Self {
        let s = Monomial::new(ev, ez);
        LaurentPoly { terms: self.terms.iter().map(|(m, c)| (*m * s, c.clone())).collect() }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(m, c)| (*m, c * k)).collect() }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Replaces `v` by `+1` or `-1`.
    pub fn substitute_v(&self, value: i8) -> Self {
        assert!(value == 1 || value == -1, "v can only be specialised to +1 or -1");
        let mut out = LaurentPoly::zero();
        for (m, c) in &self.terms {
            let c = if value == -1 && m.v.is_odd() { -c } else { c.clone() };
            out.add_term(Monomial::new(0, m.z), c);
        }
        out
    }

    /// Replaces `v` by `v^-1`.
    pub fn mirror_v(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(m, c)| (Monomial::new(-m.v, m.z), c.clone())).collect() }
    }

    /// The coefficient of `z^k`, as a polynomial in `v`.
    pub fn z_slice(&self, k: i32) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.z == k)
                .map(|(m, c)| (Monomial::new(m.v, 0), c.clone()))
                .collect(),
        }
    }

    /// Exact division of univariate `v`-polynomials. `None` when the divisor
    /// does not divide `self` or either side involves `z`.
    pub fn div_exact_v(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        if self.involves_z() || divisor.involves_z() || divisor.is_zero() {
            return None;
        }
        let (d_top_e, d_top_c) = divisor.terms.iter().next_back().map(|(m, c)| (m.v, c.clone()))?;
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero();
        let d_low = divisor.min_v()?;
        // Long division from the top; the quotient cannot go below low(self) - low(divisor).
        let floor = match rem.min_v() {
            Some(low) => low - d_low,
            None => return Some(quot),
        };
        while let Some((m, c)) = rem.terms.iter().next_back().map(|(m, c)| (*m, c.clone())) {
            let e = m.v - d_top_e;
            if e < floor {
                return None;
            }
            let (q, r) = c.div_rem(&d_top_c);
            if !r.is_zero() {
                return None;
            }
            let t = LaurentPoly::term(q, e, 0);
            rem = &rem - &(&t * divisor);
            quot = &quot + &t;
        }
        Some(quot)
    }

    /// Square root of a univariate `v`-polynomial with positive leading
    /// coefficient, if it is a perfect square.
    pub fn sqrt_v(&self) -> Option<LaurentPoly> {
        if self.involves_z() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (top, lead) = self.terms.iter().next_back().map(|(m, c)| (m.v, c.clone()))?;
        let low = self.min_v()?;
        if top.is_odd() || low.is_odd() || lead.is_negative() {
            return None;
        }
        let root_lead = lead.sqrt();
        if &root_lead * &root_lead != lead {
            return None;
        }
        // Peel off the root one term at a time from the top.
        let mut root = LaurentPoly::term(root_lead.clone(), top / 2, 0);
        let mut rem = self - &(&root * &root);
        let two_lead = &root_lead * 2;
        let mut e = top / 2;
        while let Some((m, c)) = rem.terms.iter().next_back().map(|(m, c)| (*m, c.clone())) {
            let next = m.v - top / 2;
            if next < low / 2 || next >= e {
                return None;
            }
            let (q, r) = c.div_rem(&two_lead);
            if !r.is_zero() {
                return None;
            }
            let t = LaurentPoly::term(q, next, 0);
            rem = &(&rem - &(&(&root * &t) * &LaurentPoly::constant(2))) - &(&t * &t);
            root = &root + &t;
            e = next;
        }
        Some(root)
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c);
        }
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(*m1 * *m2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: LaurentPoly) -> LaurentPoly { (&self).$f(&rhs) }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: &LaurentPoly) -> LaurentPoly { (&self).$f(rhs) }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: LaurentPoly) -> LaurentPoly { self.$f(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |acc, p| acc + p)
    }
}

impl std::iter::Product for LaurentPoly {
    fn product<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::one(), |acc, p| acc * p)
    }
}

fn write_var(f: &mut fmt::Formatter<'_>, name: char, e: i32) -> fmt::Result {
    if e == 1 {
        write!(f, "*{name}")
    } else {
        write!(f, "*{name}^{e}")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let abs = c.abs();
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-{abs}")?,
                (0, false) => write!(f, "{abs}")?,
                (_, true) => write!(f, " - {abs}")?,
                (_, false) => write!(f, " + {abs}")?,
            }
            if m.v != 0 {
                write_var(f, 'v', m.v)?;
            }
            if m.z != 0 {
                write_var(f, 'z', m.z)?;
            }
        }
        Ok(())
    }
}

struct TermParser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> TermParser<'a> {
    fn err(&self, msg: &str) -> ParseError {
        ParseError::new(self.pos, msg)
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn integer(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.s[start..self.pos]).unwrap())
    }

    fn exponent(&mut self) -> Result<i32, ParseError> {
        if self.peek() != Some(b'^') {
            return Ok(1);
        }
        self.pos += 1;
        let neg = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let digits = self.integer().ok_or_else(|| self.err("expected exponent"))?;
        let e: i32 = digits.parse().map_err(|_| self.err("exponent out of range"))?;
        Ok(if neg { -e } else { e })
    }

    fn factor(&mut self, coeff: &mut BigInt, mono: &mut Monomial) -> Result<(), ParseError> {
        match self.peek() {
            Some(b'v') => {
                self.pos += 1;
                mono.v += self.exponent()?;
            }
            Some(b'z') => {
                self.pos += 1;
                mono.z += self.exponent()?;
            }
            Some(b) if b.is_ascii_digit() => {
                let digits = self.integer().unwrap();
                *coeff *= BigInt::from_str(digits).unwrap();
            }
            _ => return Err(self.err("expected a number, v or z")),
        }
        Ok(())
    }
}

impl FromStr for LaurentPoly {
    type Err = ParseError;

    fn from_str(text: &str) -> Result<Self, ParseError> {
        // Whitespace may separate tokens but not split a factor such as `2 3`.
        let bytes = text.as_bytes();
        let word = |b: u8| b.is_ascii_alphanumeric() || b == b'^';
        let mut last: Option<u8> = None;
        let mut gap = false;
        for (i, &b) in bytes.iter().enumerate() {
            if b.is_ascii_whitespace() {
                gap = true;
                continue;
            }
            if gap && last.is_some_and(word) && word(b) {
                return Err(ParseError::new(i, "whitespace inside a term"));
            }
            gap = false;
            last = Some(b);
        }
        let compact: Vec<u8> = bytes.iter().copied().filter(|b| !b.is_ascii_whitespace()).collect();
        let mut p = TermParser { s: &compact, pos: 0 };
        let mut out = LaurentPoly::zero();
        if compact.is_empty() {
            return Err(p.err("empty polynomial"));
        }
        let mut first = true;
        while p.peek().is_some() {
            let mut coeff = BigInt::one();
            match p.peek() {
                Some(b'+') => p.pos += 1,
                Some(b'-') => {
                    p.pos += 1;
                    coeff = -coeff;
                }
                _ if first => {}
                _ => return Err(p.err("expected '+' or '-' between terms")),
            }
            first = false;
            let mut mono = Monomial::ONE;
            p.factor(&mut coeff, &mut mono)?;
            while p.peek() == Some(b'*') {
                p.pos += 1;
                p.factor(&mut coeff, &mut mono)?;
            }
            out.add_term(mono, coeff);
        }
        Ok(out)
    }
}

/// The coefficient polynomial `p^i(v)` of a HOMFLY polynomial `P` of a
/// link with `num_components` components, defined by
/// `(v^-1 z)^(num_components - 1) * P = sum_i p^i(v) z^(2i)`.
pub fn extract_p_i(p: &LaurentPoly, num_components: usize, i: u32) -> Result<LaurentPoly, SkeinError> {
    let k = num_components as i32 - 1;
    if k < 0 {
        return Err(SkeinError::Malformed { components: num_components, reason: "a link has at least one component" });
    }
    let normalized = p.shift(-k, k);
    for (m, _) in normalized.terms() {
        if m.z < 0 {
            return Err(SkeinError::Malformed { components: num_components, reason: "negative z-exponent" });
        }
        if m.z % 2 != 0 {
            return Err(SkeinError::Malformed { components: num_components, reason: "odd z-exponent" });
        }
    }
    Ok(normalized.z_slice(2 * i as i32))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn z(e: i32) -> LaurentPoly {
        LaurentPoly::z_pow(e)
    }
    fn v(e: i32) -> LaurentPoly {
        LaurentPoly::v_pow(e)
    }

    #[test]
    fn extract_zeroth_coefficient() {
        assert_eq!(extract_p_i(&LaurentPoly::one(), 1, 0).unwrap(), LaurentPoly::one());
        let mu = (&v(-1) - &v(1)).shift(0, -1);
        assert_eq!(extract_p_i(&mu, 2, 0).unwrap(), &v(-2) - &LaurentPoly::one());
        let trefoil: LaurentPoly = "2*v^2 - 1*v^4 + 1*v^2*z^2".parse().unwrap();
        assert_eq!(extract_p_i(&trefoil, 1, 0).unwrap(), "2*v^2 - 1*v^4".parse().unwrap());
        assert_eq!(extract_p_i(&trefoil, 1, 1).unwrap(), v(2));
        let reassembled: LaurentPoly =
            (0..2).map(|i| extract_p_i(&trefoil, 1, i).unwrap().shift(0, 2 * i as i32)).sum();
        assert_eq!(reassembled, trefoil);
        assert!(matches!(extract_p_i(&z(1), 1, 0), Err(SkeinError::Malformed { .. })));
        assert!(matches!(extract_p_i(&z(-2), 1, 0), Err(SkeinError::Malformed { .. })));
    }
    fn c(k: i64) -> LaurentPoly {
        LaurentPoly::constant(k)
    }

    #[test]
    fn square_of_one_plus_z2() {
        let p = c(1) + z(2);
        assert_eq!(&p * &p, LaurentPoly::from_z_terms([(0, 1), (2, 2), (4, 1)]));
    }

    #[test]
    fn additive_inverse_is_empty() {
        let p = LaurentPoly::from_terms([(2, 0, 3), (-1, 4, -7)]);
        let s = &p + &(-&p);
        assert!(s.is_zero());
        assert_eq!(s.num_terms(), 0);
    }

    #[test]
    fn expand_v_inverse_minus_v_squared() {
        let d = v(-1) - v(1);
        assert_eq!(d.pow(2), LaurentPoly::from_v_terms([(-2, 1), (0, -2), (2, 1)]));
    }

    #[test]
    fn substitute_trefoil_homfly() {
        let p: LaurentPoly = "2*v^2 - v^4 + v^2*z^2".parse().unwrap();
        assert_eq!(p.substitute_v(1), c(1) + z(2));
        assert_eq!(c(1).substitute_v(1), c(1));
        assert!((v(-2) - c(1)).substitute_v(-1).is_zero());
    }

    #[test]
    fn coefficients() {
        let p = LaurentPoly::from_z_terms([(0, 1), (2, 2), (4, 1)]);
        assert_eq!(p.coefficient_i64(0, 2), 2);
        assert_eq!(p.coefficient_i64(0, 6), 0);
    }

    #[test]
    fn display_order_and_signs() {
        let p = LaurentPoly::from_terms([(4, 0, -1), (2, 0, 2), (2, 2, 1)]);
        assert_eq!(p.to_string(), "2*v^2 - 1*v^4 + 1*v^2*z^2");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(LaurentPoly::from_terms([(-1, -1, -3)]).to_string(), "-3*v^-1*z^-1");
        assert_eq!(LaurentPoly::from_terms([(1, 1, 1)]).to_string(), "1*v*z");
    }

    #[test]
    fn parse_variants() {
        let p: LaurentPoly = "-1*v^4 + 2*v^2 + 1*v^2*z^2".parse().unwrap();
        assert_eq!(p, LaurentPoly::from_terms([(4, 0, -1), (2, 0, 2), (2, 2, 1)]));
        let q: LaurentPoly = " - z + 3 * v^-2 ".parse().unwrap();
        assert_eq!(q, LaurentPoly::from_terms([(0, 1, -1), (-2, 0, 3)]));
        assert!("".parse::<LaurentPoly>().is_err());
        assert!("2*w".parse::<LaurentPoly>().is_err());
        assert!("2 3".parse::<LaurentPoly>().is_err());
    }

    #[test]
    fn exact_division_and_sqrt() {
        let d = v(-2) - c(1);
        let q = LaurentPoly::from_v_terms([(4, 3), (0, -1)]);
        let p = &q * &d;
        assert_eq!(p.div_exact_v(&d), Some(q));
        assert_eq!((v(2) + c(1)).div_exact_v(&d), None);
        let f = LaurentPoly::from_v_terms([(2, 1), (-2, -3), (0, 2)]);
        let sq = &f * &f;
        let root = sq.sqrt_v().unwrap();
        assert!(root == f || root == -&f);
        assert_eq!((&sq + &c(1)).sqrt_v(), None);
        assert_eq!(v(3).sqrt_v(), None);
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((-3i32..=3, -3i32..=3, -5i64..=5), 0..6).prop_map(LaurentPoly::from_terms)
    }

    proptest! {
        #[test]
        fn ring_axioms(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
            prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
            prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
            prop_assert_eq!(&p * &q, &q * &p);
            prop_assert_eq!(&p + &q, &q + &p);
            for (_, c) in (&p * &q).terms() {
                prop_assert!(!c.is_zero());
            }
        }

        #[test]
        fn text_form_is_lossless(p in arb_poly()) {
            let back: LaurentPoly = p.to_string().parse().unwrap();
            prop_assert_eq!(back, p);
        }
    }
}
