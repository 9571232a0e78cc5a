//! PD-code text: `PD[X[a,b,c,d], ...]`, with optional `Loop[]` items for
//! crossingless components. `PD[]` is the unknot.

use std::fmt;
use std::str::FromStr;

use super::{Crossing, Diagram};
use crate::error::{DiagramError, ParseError};

enum Item {
    Crossing([u32; 4]),
    Loop,
}

struct Lexer<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Lexer<'_> {
    fn skip_ws(&mut self) {
        while self.s.get(self.pos).is_some_and(|b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn expect(&mut self, tok: &str) -> Result<(), ParseError> {
        self.skip_ws();
        if self.s[self.pos..].starts_with(tok.as_bytes()) {
            self.pos += tok.len();
            Ok(())
        } else {
            Err(ParseError::new(self.pos, format!("expected `{tok}`")))
        }
    }

    fn number(&mut self) -> Result<u32, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.s.get(self.pos).is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| ParseError::new(start, "expected an edge label"))
    }

    fn item(&mut self) -> Result<Item, ParseError> {
        match self.peek() {
            Some(b'X') => {
                self.expect("X")?;
                self.expect("[")?;
                let mut q = [0u32; 4];
                for (i, slot) in q.iter_mut().enumerate() {
                    if i > 0 {
                        self.expect(",")?;
                    }
                    *slot = self.number()?;
                }
                self.expect("]")?;
                Ok(Item::Crossing(q))
            }
            Some(b'L') => {
                self.expect("Loop")?;
                self.expect("[")?;
                self.expect("]")?;
                Ok(Item::Loop)
            }
            _ => Err(ParseError::new(self.pos, "expected `X[` or `Loop[]`")),
        }
    }
}

fn parse_items(text: &str) -> Result<Vec<Item>, ParseError> {
    let mut lx = Lexer { s: text.as_bytes(), pos: 0 };
    lx.expect("PD")?;
    lx.expect("[")?;
    let mut items = Vec::new();
    if lx.peek() != Some(b']') {
        items.push(lx.item()?);
        while lx.peek() == Some(b',') {
            lx.expect(",")?;
            items.push(lx.item()?);
        }
    }
    lx.expect("]")?;
    if lx.peek().is_some() {
        return Err(ParseError::new(lx.pos, "trailing input after PD code"));
    }
    Ok(items)
}

/// Recovers the over-strand directions of raw quadruples and checks the
/// labelling rules.
fn orient(quads: &[[u32; 4]]) -> Result<Vec<Crossing>, DiagramError> {
    let n_edges = 2 * quads.len() as u32;
    // occurrences[label] = positions (crossing, slot)
    let mut occ: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n_edges as usize + 1];
    for (x, q) in quads.iter().enumerate() {
        for (pos, &label) in q.iter().enumerate() {
            if label == 0 || label > n_edges {
                return Err(DiagramError::LabelRange { label, expected: n_edges });
            }
            occ[label as usize].push((x, pos));
        }
    }
    for (label, o) in occ.iter().enumerate().skip(1) {
        if o.len() != 2 {
            return Err(DiagramError::LabelMultiplicity { label: label as u32, count: o.len() });
        }
    }

    // incoming[x][pos]: Some(true) if that end enters the crossing.
    let mut incoming: Vec<[Option<bool>; 4]> = vec![[Some(true), None, Some(false), None]; quads.len()];
    let other_end = |x: usize, pos: usize| -> (usize, usize) {
        let o = &occ[quads[x][pos] as usize];
        if o[0] == (x, pos) {
            o[1]
        } else {
            o[0]
        }
    };

    let mut stack: Vec<(usize, usize)> = (0..quads.len()).flat_map(|x| [(x, 0), (x, 2)]).collect();
    let propagate =
        |stack: &mut Vec<(usize, usize)>, incoming: &mut Vec<[Option<bool>; 4]>| -> Result<(), DiagramError> {
            while let Some((x, pos)) = stack.pop() {
                let dir = incoming[x][pos].unwrap();
                for (y, p, want) in [
                    {
                        let (y, p) = other_end(x, pos);
                        (y, p, !dir)
                    },
                    (x, (pos + 2) % 4, !dir),
                ] {
                    match incoming[y][p] {
                        None => {
                            incoming[y][p] = Some(want);
                            stack.push((y, p));
                        }
                        Some(d) if d != want => {
                            return Err(DiagramError::NonConsecutive { label: quads[y][p] });
                        }
                        _ => {}
                    }
                }
            }
            Ok(())
        };
    propagate(&mut stack, &mut incoming)?;

    // Strands that never pass under anything: orient by label order.
    while let Some((x, pos)) = (0..quads.len())
        .flat_map(|x| [(x, 1), (x, 3)])
        .filter(|&(x, p)| incoming[x][p].is_none())
        .min_by_key(|&(x, p)| quads[x][p])
    {
        let label = quads[x][pos];
        // Collect this component's labels to find its run.
        let mut comp = vec![label];
        let (mut cx, mut cp) = (x, pos);
        loop {
            let (nx, np) = (cx, (cp + 2) % 4);
            let next = quads[nx][np];
            let (ox, op) = other_end(nx, np);
            if next == label {
                break;
            }
            comp.push(next);
            cx = ox;
            cp = op;
        }
        let hi = *comp.iter().max().unwrap();
        let succ = if label == hi { label } else { label + 1 };
        let ends = occ[label as usize].clone();
        let candidates: Vec<(usize, usize)> =
            ends.into_iter().filter(|&(ex, ep)| quads[ex][(ep + 2) % 4] == succ).collect();
        match candidates.as_slice() {
            [one] => {
                incoming[one.0][one.1] = Some(true);
                stack.push(*one);
                propagate(&mut stack, &mut incoming)?;
            }
            [] => return Err(DiagramError::NonConsecutive { label }),
            _ => return Err(DiagramError::AmbiguousOrientation { crossing: x }),
        }
    }

    let crossings: Vec<Crossing> =
        quads.iter().zip(&incoming).map(|(q, inc)| Crossing { edges: *q, positive: inc[1] == Some(true) }).collect();

    // Consecutive labels along each component.
    let mut head = vec![(0usize, 0usize); n_edges as usize + 1];
    for (x, c) in crossings.iter().enumerate() {
        for pos in 0..4 {
            if c.is_incoming(pos) {
                head[c.edges[pos] as usize] = (x, pos);
            }
        }
    }
    let mut visited = vec![false; n_edges as usize + 1];
    for start in 1..=n_edges {
        if visited[start as usize] {
            continue;
        }
        let mut e = start;
        loop {
            visited[e as usize] = true;
            let (x, pos) = head[e as usize];
            let next = crossings[x].edges[(pos + 2) % 4];
            if next == start {
                break;
            }
            if next != e + 1 {
                return Err(DiagramError::NonConsecutive { label: e });
            }
            e = next;
        }
    }
    Ok(crossings)
}

impl FromStr for Diagram {
    type Err = DiagramError;

    fn from_str(text: &str) -> Result<Self, DiagramError> {
        let items = parse_items(text)?;
        if items.is_empty() {
            return Ok(Diagram::unknot());
        }
        let mut quads = Vec::new();
        let mut loops = 0;
        for item in items {
            match item {
                Item::Crossing(q) => quads.push(q),
                Item::Loop => loops += 1,
            }
        }
        let crossings = orient(&quads)?;
        Ok(Diagram::from_oriented(crossings, loops))
    }
}

pub(super) fn write_pd(d: &Diagram, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if d.crossings.is_empty() && d.free_loops == 1 {
        return f.write_str("PD[]");
    }
    f.write_str("PD[")?;
    let mut first = true;
    for c in &d.crossings {
        if !first {
            f.write_str(",")?;
        }
        first = false;
        let [a, b, cc, dd] = c.edges;
        write!(f, "X[{a},{b},{cc},{dd}]")?;
    }
    for _ in 0..d.free_loops {
        if !first {
            f.write_str(",")?;
        }
        first = false;
        f.write_str("Loop[]")?;
    }
    f.write_str("]")
}

#[cfg(test)]
mod tests {
    use super::super::test_codes::*;
    use super::*;

    #[test]
    fn parse_and_print_round_trip() {
        for code in [TREFOIL, FIGURE_EIGHT, HOPF, HOPF_POSITIVE] {
            let d: Diagram = code.parse().unwrap();
            assert_eq!(d.to_string(), code);
        }
        let spaced: Diagram = " PD[ X[1, 4,2,5] ,X[3,6,4,1],X[5,2,6,3] ] ".parse().unwrap();
        assert_eq!(spaced.to_string(), TREFOIL);
    }

    #[test]
    fn empty_code_is_unknot() {
        let d: Diagram = "PD[]".parse().unwrap();
        assert_eq!(d.num_components(), 1);
        assert_eq!(d.num_crossings(), 0);
        let two: Diagram = "PD[Loop[],Loop[]]".parse().unwrap();
        assert_eq!(two.num_components(), 2);
        assert_eq!(two.to_string(), "PD[Loop[],Loop[]]");
    }

    #[test]
    fn single_kink_is_accepted() {
        let d: Diagram = "PD[X[1,1,2,2]]".parse().unwrap();
        assert_eq!(d.num_components(), 1);
        assert!(!d.crossings()[0].positive);
        let e: Diagram = "PD[X[1,2,2,1]]".parse().unwrap();
        assert!(e.crossings()[0].positive);
    }

    #[test]
    fn over_only_two_edge_component_is_ambiguous() {
        assert!(matches!(
            "PD[X[3,1,4,2],X[4,1,3,2]]".parse::<Diagram>(),
            Err(DiagramError::AmbiguousOrientation { .. })
        ));
    }

    #[test]
    fn syntax_errors() {
        for bad in ["", "PD[", "PD[X[1,2,3]]", "PD[X[1,2,3,4]] junk", "XD[]", "PD[X[a,1,2,2]]"] {
            assert!(matches!(bad.parse::<Diagram>(), Err(DiagramError::Parse(_))), "{bad}");
        }
    }

    #[test]
    fn validation_errors() {
        assert!(matches!("PD[X[1,1,1,2]]".parse::<Diagram>(), Err(DiagramError::LabelMultiplicity { .. })));
        assert!(matches!("PD[X[1,3,3,1]]".parse::<Diagram>(), Err(DiagramError::LabelRange { .. })));
        // Under-strand 1 -> 3 skips label 2.
        assert!(matches!(
            "PD[X[1,5,3,4],X[2,6,4,1],X[5,2,6,3]]".parse::<Diagram>(),
            Err(DiagramError::NonConsecutive { .. }) | Err(DiagramError::LabelMultiplicity { .. })
        ));
        assert!(matches!(
            "PD[X[1,4,3,5],X[2,6,4,1],X[5,2,6,3]]".parse::<Diagram>(),
            Err(DiagramError::NonConsecutive { .. })
        ));
    }
}
