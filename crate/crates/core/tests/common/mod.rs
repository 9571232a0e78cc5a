#![allow(dead_code)]

pub mod oracle;

use claspknot::LaurentPoly;

/// Reference HOMFLY polynomials from the fixture table.
pub fn knotinfo_homfly() -> Vec<(String, LaurentPoly)> {
    include_str!("../fixtures/knotinfo_homfly.tsv")
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|l| {
            let (name, terms) = l.split_once('\t').unwrap();
            let p = LaurentPoly::from_terms(terms.split(';').map(|t| {
                let f: Vec<i64> = t.split(',').map(|x| x.trim().parse().unwrap()).collect();
                (f[1] as i32, f[0] as i32, f[2])
            }));
            (name.to_string(), p)
        })
        .collect()
}
