use claspknot::openbook::{
    abelianization_order, classify_range, classify_triple, in_trivial_list, pi1_presentation, smith_normal_form,
    todd_coxeter, Budgets, CosetResult, OpenBookTriple, Presentation, Verdict, Word,
};
use proptest::prelude::*;

fn word(letters: &[i8]) -> Word {
    Word::new(letters.iter().copied())
}

fn inverse(w: &Word) -> Word {
    Word::new(w.letters().iter().rev().map(|l| -l))
}

fn rotate(w: &Word, k: usize) -> Word {
    let l = w.letters();
    if l.is_empty() {
        return w.clone();
    }
    let k = k % l.len();
    Word::new(l[k..].iter().chain(&l[..k]).copied())
}

/// Group order by coset enumeration; `None` when the budget runs out or the
/// abelianization already shows the group is infinite.
fn order(p: &Presentation) -> Option<u64> {
    if abelianization_order(p) == 0 {
        return None;
    }
    match todd_coxeter(p, 50_000) {
        CosetResult::Order { order, .. } => Some(order),
        CosetResult::Exhausted { .. } => None,
    }
}

fn det(m: &[Vec<i64>]) -> i64 {
    match m.len() {
        1 => m[0][0],
        2 => m[0][0] * m[1][1] - m[0][1] * m[1][0],
        3 => (0..3)
            .map(|j| {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, x)| *x).collect())
                    .collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                s * m[0][j] * det(&minor)
            })
            .sum(),
        _ => unreachable!(),
    }
}

#[test]
fn known_finite_groups() {
    let (x, y) = (1i8, 2i8);
    let a5 = Presentation { num_generators: 2, relators: vec![word(&[x, x]), word(&[y, y, y]), word(&[x, y]).pow(5)] };
    assert_eq!(order(&a5), Some(60));
    let s3 = Presentation { num_generators: 2, relators: vec![word(&[x, x]), word(&[y, y, y]), word(&[x, y]).pow(2)] };
    assert_eq!(order(&s3), Some(6));
    let z7 = Presentation { num_generators: 1, relators: vec![word(&[x]).pow(7)] };
    assert_eq!(order(&z7), Some(7));
    let trivial = Presentation { num_generators: 2, relators: vec![word(&[x]), word(&[y])] };
    assert_eq!(order(&trivial), Some(1));
}

#[test]
fn poincare_sphere_open_book() {
    // The binary icosahedral group: perfect and of order 120.
    let p = pi1_presentation(&OpenBookTriple::new(-2, 3, 5));
    assert_eq!(abelianization_order(&p), 1);
    assert_eq!(order(&p), Some(120));
    assert_eq!(classify_triple(&OpenBookTriple::new(-2, 3, 5), &Budgets::default()).verdict, Verdict::NontrivialPi1);
}

#[test]
fn group_order_ignores_relabeling_the_boundary_curves() {
    for a in -3i64..=3 {
        for b in -3i64..=3 {
            for c in -3i64..=3 {
                let v = [a, b, c];
                let base = pi1_presentation(&OpenBookTriple::new(a, b, c));
                let (h, g) = (abelianization_order(&base), order(&base));
                for p in [[0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
                    let q = pi1_presentation(&OpenBookTriple::new(v[p[0]], v[p[1]], v[p[2]]));
                    assert_eq!(abelianization_order(&q), h, "{v:?} {p:?}");
                    if let (Some(g), Some(g2)) = (g, order(&q)) {
                        assert_eq!(g, g2, "{v:?} {p:?}");
                    }
                }
            }
        }
    }
}

#[test]
fn scan_agrees_with_the_trivial_list() {
    for c in classify_range(4, &Budgets::default(), true) {
        assert_ne!(c.verdict, Verdict::Inconclusive, "{}", c.triple);
        assert_eq!(c.verdict == Verdict::TrivialPi1, in_trivial_list(&c.triple), "{}", c.triple);
    }
}

proptest! {
    #[test]
    fn coset_enumeration_ignores_relator_presentation(
        a in -4i64..=4, b in -4i64..=4, c in -4i64..=4, k1 in 0usize..8, k2 in 0usize..8, swap: bool, inv: bool,
    ) {
        let p = pi1_presentation(&OpenBookTriple::new(a, b, c));
        let mut relators: Vec<Word> = vec![rotate(&p.relators[0], k1), rotate(&p.relators[1], k2)];
        if inv {
            relators[0] = inverse(&relators[0]);
        }
        if swap {
            relators.swap(0, 1);
        }
        let q = Presentation { num_generators: 2, relators };
        if let (Some(g), Some(g2)) = (order(&p), order(&q)) {
            prop_assert_eq!(g, g2);
        }
        prop_assert_eq!(abelianization_order(&p), abelianization_order(&q));
    }

    #[test]
    fn smith_form_preserves_the_determinant(m in prop::collection::vec(prop::collection::vec(-9i64..=9, 3), 3)) {
        let d = smith_normal_form(&m);
        prop_assert_eq!(d.iter().product::<i64>().abs(), det(&m).abs());
        for w in d.windows(2) {
            prop_assert!(w[1] == 0 || w[0] != 0 && w[1] % w[0] == 0, "{:?}", d);
        }
    }
}
