use nilrep_core::chars::{character_table, induce};
use nilrep_core::exactfield::{Cyclotomic, FiniteField, Gf};
use nilrep_core::nilalg::{strictly_upper_triangular, FreeNilpotent, Subspace};
use nilrep_core::unitgroup::UnitGroup;
use nilrep_gutkin::*;

fn ul(n: usize, p: u32, k: u32) -> UnitGroup {
    UnitGroup::new(strictly_upper_triangular(&FiniteField::new(p, k).unwrap(), n).unwrap()).unwrap()
}

fn gf(v: &[u32]) -> Vec<Gf> {
    v.iter().map(|&x| Gf(x)).collect()
}

// basis order of UL3: e12, e23, e13
#[test]
fn heisenberg_over_f2() {
    let g = ul(3, 2, 1);
    let t = character_table(&g).unwrap();
    let chi = t.characters().last().unwrap();
    assert_eq!(chi.degree(), Some(2));

    let zeta = minimal_scalar_level(&g, chi).unwrap();
    assert_eq!(zeta.m, 2);
    assert_eq!(zeta.at(g.index(&gf(&[0, 0, 1]))), Some(&Cyclotomic::from_int(-1)));
    assert_eq!(minimal_scalar_level(&g, &t.characters()[1]).unwrap().m, 1);

    let cache = Cache::new();
    let pairing = commutator_pairing(&cache, &g, &zeta).unwrap();
    // points of A/A^2 in mixed radix: index 2 is e12, index 1 is e23
    assert_eq!(pairing.table[2][1], 1);
    assert_eq!(pairing.table[2][2], 0);
    assert!(pairing.exhaustive());

    let phi = phi_map(&g, &pairing).unwrap();
    assert_eq!(phi, vec![gf(&[0, 1]), gf(&[1, 0])]);

    let f = g.field().clone();
    let line = choose_line(&f, &phi, 2).unwrap();
    assert_eq!(line, gf(&[1, 0]));
    let (a1, u) = build_ideals(&g, &pairing, &phi, &line).unwrap();
    let expected = Subspace::span(&f, 3, [gf(&[1, 0, 0]), gf(&[0, 0, 1])]);
    assert_eq!(a1, expected);
    assert_eq!(u, expected);

    let ext = extension_set(&cache, &g, &u, &a1, &zeta).unwrap();
    assert_eq!((ext.count, ext.orbit_size, ext.stabilizer_order), (2, 2, 4));

    let d = gutkin_decompose(&g, chi).unwrap();
    assert_eq!(d.chain.len(), 2);
    assert_eq!(d.b(), &[vec![1, 0, 0], vec![0, 0, 1]]);
    let b = d.b_group.as_ref().unwrap();
    let emb = d.embedding.as_ref().unwrap();
    let z = (0..b.order()).find(|&x| emb.apply(x) == g.index(&gf(&[0, 0, 1]))).unwrap();
    assert_eq!(d.alpha_character.at(b, z), &Cyclotomic::from_int(-1));
    assert_eq!(induce(b, emb, &d.alpha_character, &g).unwrap(), *chi);
}

#[test]
fn trivial_zeta_gives_trivial_pairing() {
    let g = ul(3, 3, 1);
    let zeta = CentralCharacter::trivial(&g, 2);
    let pairing = commutator_pairing(&Cache::new(), &g, &zeta).unwrap();
    assert!(pairing.is_trivial());
    let phi = phi_map(&g, &pairing).unwrap();
    assert!(phi.iter().flatten().all(|c| c.is_zero()));
    assert!(choose_line(g.field(), &phi, 2).is_err());
}

#[test]
fn linear_characters_are_their_own_data() {
    let g = ul(3, 3, 1);
    let t = character_table(&g).unwrap();
    let d = gutkin_decompose(&g, &t.characters()[4]).unwrap();
    assert_eq!(d.dim_b, 3);
    assert!(d.transcript.is_empty());
    assert_eq!(d.chain.len(), 1);
}

#[test]
fn heisenberg_over_f3_extensions() {
    let g = ul(3, 3, 1);
    let t = character_table(&g).unwrap();
    let chi = t.characters().last().unwrap();
    let d = gutkin_decompose(&g, chi).unwrap();
    assert_eq!(d.transcript[0].extensions, 3);
    let report = verify_gutkin_all(&g).unwrap();
    assert_eq!(report.verified, 11);
    assert!(report.degrees_are_powers_of_q);
}

#[test]
fn ul4_over_f2() {
    let g = ul(4, 2, 1);
    let t = character_table(&g).unwrap();
    let chi = t.characters().last().unwrap();
    assert_eq!(chi.degree(), Some(4));
    let zeta = minimal_scalar_level(&g, chi).unwrap();
    assert_eq!(zeta.m, 3);
    let pairing = commutator_pairing(&Cache::new(), &g, &zeta).unwrap();
    assert_eq!((pairing.left_dim(), pairing.right_dim()), (3, 2));
    let d = gutkin_decompose(&g, chi).unwrap();
    assert_eq!(d.dim_b, 4);
    assert_eq!(d.transcript[0].a1.len(), 5);

    let report = verify_gutkin_all(&g).unwrap();
    assert_eq!(report.verified, 16);
    assert!(report.degrees.iter().all(|d| [1, 2, 4].contains(d)));
    for datum in &report.characters {
        assert_eq!(1i64 << (datum.dim_a - datum.dim_b), datum.degree);
    }
}

#[test]
fn scaling_outside_the_prime_field() {
    let g = ul(3, 2, 2);
    let f = g.field().clone();
    let t = character_table(&g).unwrap();
    let lambda = f.x();
    assert!(!f.in_prime_field(lambda));
    let cache = Cache::new();
    for chi in t.characters().iter().filter(|c| c.degree() == Some(4)) {
        let zeta = minimal_scalar_level(&g, chi).unwrap();
        let pairing = commutator_pairing(&cache, &g, &zeta).unwrap();
        let phi = phi_map(&g, &pairing).unwrap();
        // Phi(lambda x) = lambda Phi(x) on the basis
        for i in 0..2 {
            let mut x = vec![Gf(0); 2];
            x[i] = lambda;
            for j in 0..4usize {
                let y = vec![Gf((j / 4) as u32), Gf((j % 4) as u32)];
                let lhs = pairing.table[x[0].0 as usize * 4 + x[1].0 as usize][y[0].0 as usize * 4 + y[1].0 as usize];
                let ly: Vec<Gf> = y.iter().map(|&c| f.mul(lambda, c)).collect();
                let mut e = vec![Gf(0); 2];
                e[i] = f.one();
                let rhs = pairing.table[e[0].0 as usize * 4 + e[1].0 as usize][ly[0].0 as usize * 4 + ly[1].0 as usize];
                assert_eq!(lhs, rhs);
            }
        }
        assert!(phi.iter().flatten().any(|c| !c.is_zero()));
    }
    let report = verify_gutkin_all(&g).unwrap();
    assert_eq!(report.verified, 19);
}

#[test]
fn psi_changes_phi_but_not_the_ideals() {
    let g = ul(3, 3, 1);
    let f = g.field().clone();
    let t = character_table(&g).unwrap();
    let cache = Cache::new();
    for chi in t.characters().iter().filter(|c| c.degree() == Some(3)) {
        let zeta = minimal_scalar_level(&g, chi).unwrap();
        let pairing = commutator_pairing(&cache, &g, &zeta).unwrap();
        let phi = phi_map(&g, &pairing).unwrap();
        let phi2 = phi_map_with(&g, &pairing, Gf(2)).unwrap();
        assert_ne!(phi, phi2);
        let l1 = choose_line(&f, &phi, 2).unwrap();
        let l2 = choose_line(&f, &phi2, 2).unwrap();
        assert_eq!(l1, l2);
        assert_eq!(build_ideals(&g, &pairing, &phi, &l1).unwrap(), build_ideals(&g, &pairing, &phi2, &l2).unwrap());
    }
}

#[test]
fn deterministic_output() {
    let f = FiniteField::new(2, 1).unwrap();
    let alg = FreeNilpotent::new(f, &["x", "y"], 3).unwrap().into_algebra();
    let a = verify_gutkin_all(&UnitGroup::new(alg.clone()).unwrap()).unwrap().to_json();
    let b = verify_gutkin_all(&UnitGroup::new(alg).unwrap()).unwrap().to_json();
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert!(v["characters"][0]["transcript"].as_array().unwrap().is_empty());
}

#[test]
fn reducible_input_is_rejected() {
    let g = ul(3, 2, 1);
    let t = character_table(&g).unwrap();
    let sum = t.characters()[0].add(&t.characters()[1]);
    assert_eq!(gutkin_decompose(&g, &sum).unwrap_err().stage(), Some(Stage::NotIrreducible));
}
