use std::time::Instant;

use nilrep_core::exactfield::FiniteField;
use nilrep_core::nilalg::{strictly_upper_triangular, FreeNilpotent};
use nilrep_core::unitgroup::UnitGroup;
use nilrep_identities::*;

#[test]
fn lemma_grid() {
    for gens in 1..=3 {
        for n in 3..=5 {
            for m in 2..n {
                let r = lemma_auxiliary_check(gens, n, m).unwrap();
                assert!(r.passed, "|X|={gens} n={n} m={m}: {:?}", r.residual);
            }
        }
    }
}

#[test]
fn defect_grid() {
    let t = Instant::now();
    for m in 2..=4 {
        let a = additivity_defect_check(m).unwrap();
        assert!(a.passed, "additivity m={m}: {:?}", a.residual);
        assert!(a.dim <= 400);
        let s = scaling_defect_check(m).unwrap();
        assert!(s.passed, "scaling m={m}: {:?}", s.residual);
        assert!(s.dim <= 400);
        println!("m={m}: y={} / {}, dims {} / {}, trivial {} / {}", a.y, s.y, a.dim, s.dim, a.trivial, s.trivial);
    }
    println!("defects: {:?}", t.elapsed());
}

#[test]
fn finite_pairings_on_catalog() {
    let f2 = FiniteField::new(2, 1).unwrap();
    let f3 = FiniteField::new(3, 1).unwrap();
    let f4 = FiniteField::new(2, 2).unwrap();
    let algebras = vec![
        strictly_upper_triangular(&f2, 3).unwrap(),
        strictly_upper_triangular(&f3, 3).unwrap(),
        strictly_upper_triangular(&f4, 3).unwrap(),
        strictly_upper_triangular(&f2, 4).unwrap(),
        FreeNilpotent::new(f2, &["x", "y"], 3).unwrap().into_algebra(),
        FreeNilpotent::new(f3, &["x", "y"], 3).unwrap().into_algebra(),
    ];
    for alg in algebras {
        let g = UnitGroup::new(alg).unwrap();
        for m in 2..=g.algebra().class() {
            let r = finite_pairing_check(&g, m).unwrap();
            assert!(r.passed, "order {} m={m}: {:?}", g.order(), r.witness);
        }
    }
}

#[test]
fn halasi_reports() {
    let f2 = FiniteField::new(2, 1).unwrap();
    for (gens, n) in [(2, 3), (2, 4), (3, 3)] {
        for k in 2..=n {
            let r = halasi_explore(&f2, gens, n, k).unwrap();
            assert!(r.contains);
            if k == n {
                assert_eq!((r.lhs_order, r.rhs_order), (1, 1));
            }
            println!("{}", serde_json::to_string(&r).unwrap());
        }
    }
}
