mod common;

use claspknot::census::Census;
use claspknot::{extract_p_i, Diagram, LaurentPoly, SkeinEngine};

use common::oracle;

fn poly(s: &str) -> LaurentPoly {
    s.parse().unwrap()
}

#[test]
fn engine_matches_brute_force_oracle_on_small_census_knots() {
    let engine = SkeinEngine::default();
    for (name, d) in Census::shipped().iter().filter(|(_, d)| d.num_crossings() <= 9) {
        assert_eq!(engine.homfly(d).unwrap(), oracle::homfly(d), "{name}");
        assert_eq!(engine.p0(d).unwrap(), oracle::p0(d), "{name}");
    }
}

#[test]
fn oracle_reproduces_right_trefoil() {
    let t: Diagram = "PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]".parse().unwrap();
    assert_eq!(oracle::homfly(&t), poly("2*v^2 - v^4 + v^2*z^2"));
    assert_eq!(oracle::p0(&t), poly("2*v^2 - v^4"));
}

#[test]
fn census_matches_reference_table_up_to_mirror() {
    let census = Census::shipped();
    let engine = SkeinEngine::default();
    let reference = common::knotinfo_homfly();
    assert_eq!(reference.len(), census.len());
    for (name, expected) in reference {
        let d = census.get(&name).unwrap();
        let p = engine.homfly(d).unwrap();
        assert!(p == expected || p.mirror_v() == expected, "{name}: {p} vs {expected}");
    }
}

#[test]
fn census_validates() {
    Census::shipped().validate(&SkeinEngine::default()).unwrap();
}

#[test]
fn skein_relation_at_every_crossing() {
    let engine = SkeinEngine::default();
    for (name, d) in Census::shipped().iter() {
        for k in 0..d.num_crossings() {
            let (plus, minus) = if d.crossings()[k].positive {
                (d.clone(), d.switch_crossing(k).unwrap())
            } else {
                (d.switch_crossing(k).unwrap(), d.clone())
            };
            let zero = d.smooth_crossing(k).unwrap();
            let lhs = &engine.homfly(&plus).unwrap().shift(-1, 0) - &engine.homfly(&minus).unwrap().shift(1, 0);
            assert_eq!(lhs, engine.homfly(&zero).unwrap().shift(0, 1), "{name} crossing {k}");
        }
    }
}

#[test]
fn p0_is_the_zeroth_coefficient_and_mirrors() {
    let engine = SkeinEngine::default();
    for (name, d) in Census::shipped().iter() {
        let p = engine.homfly(d).unwrap();
        let p0 = engine.p0(d).unwrap();
        assert_eq!(extract_p_i(&p, d.num_components(), 0).unwrap(), p0, "{name}");
        assert_eq!(engine.p0(&d.mirror()).unwrap(), p0.mirror_v(), "{name}");
        assert_eq!(engine.conway(d).unwrap(), p.substitute_v(1), "{name}");
    }
}

#[test]
fn multiplicative_under_connected_sum() {
    let census = Census::shipped();
    let engine = SkeinEngine::default();
    let names = ["3_1", "4_1", "5_2", "6_2"];
    for a in names {
        for b in names {
            let (x, y) = (census.get(a).unwrap(), census.get(b).unwrap());
            let s = x.connected_sum(y).unwrap();
            assert_eq!(engine.homfly(&s).unwrap(), &engine.homfly(x).unwrap() * &engine.homfly(y).unwrap(), "{a}#{b}");
            let m = x.connected_sum(&y.mirror()).unwrap();
            assert_eq!(
                engine.homfly(&m).unwrap(),
                &engine.homfly(x).unwrap() * &engine.homfly(y).unwrap().mirror_v(),
                "{a}#-{b}"
            );
        }
    }
}

#[test]
fn split_union_formula_for_p0() {
    let census = Census::shipped();
    let engine = SkeinEngine::default();
    let f = &LaurentPoly::v_pow(-2) - &LaurentPoly::one();
    for (a, b) in [("3_1", "4_1"), ("5_1", "6_3"), ("4_1", "4_1")] {
        let (x, y) = (census.get(a).unwrap(), census.get(b).unwrap());
        let u = x.disjoint_union(y);
        assert_eq!(engine.p0(&u).unwrap(), &(&f * &engine.p0(x).unwrap()) * &engine.p0(y).unwrap());
        assert_eq!(engine.p0(&u).unwrap(), oracle::p0(&u));
    }
}

#[test]
fn simplify_preserves_homfly() {
    for (name, d) in Census::shipped().iter().filter(|(_, d)| d.num_crossings() <= 8) {
        for k in 0..d.num_crossings() {
            let child = d.smooth_crossing(k).unwrap();
            assert_eq!(oracle::homfly(&child.simplify()), oracle::homfly(&child), "{name} {k}");
        }
    }
}

#[test]
fn corollary_knots_have_expected_conway_coefficients() {
    let census = Census::shipped();
    let engine = SkeinEngine::default();
    for (name, a2, a4) in [("11n74", 2, 1), ("11n116", -4, -1), ("11n142", -4, 1), ("12n462", -2, 1), ("12n838", -2, 1)]
    {
        assert_eq!(engine.conway_coefficients(census.get(name).unwrap()).unwrap(), (a2, a4), "{name}");
    }
}
