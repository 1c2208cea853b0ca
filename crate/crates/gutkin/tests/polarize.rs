use nilrep_core::exactfield::{FiniteField, Gf};
use nilrep_core::nilalg::{strictly_upper_triangular, FieldAlgebra, FreeNilpotent, Subspace};
use nilrep_gutkin::*;

fn catalog() -> Vec<(&'static str, FieldAlgebra)> {
    let f2 = FiniteField::new(2, 1).unwrap();
    let f3 = FiniteField::new(3, 1).unwrap();
    vec![
        ("ul(3,2)", strictly_upper_triangular(&f2, 3).unwrap()),
        ("ul(3,3)", strictly_upper_triangular(&f3, 3).unwrap()),
        ("ul(4,2)", strictly_upper_triangular(&f2, 4).unwrap()),
        ("free(2,2,3)", FreeNilpotent::new(f2, &["x", "y"], 3).unwrap().into_algebra()),
        ("free(3,2,3)", FreeNilpotent::new(f3, &["x", "y"], 3).unwrap().into_algebra()),
    ]
}

fn small_f2_algebras() -> Vec<FieldAlgebra> {
    let f2 = FiniteField::new(2, 1).unwrap();
    let free3 = FreeNilpotent::new(f2.clone(), &["x", "y", "z"], 3).unwrap().into_algebra();
    let free4 = FreeNilpotent::new(f2.clone(), &["x"], 5).unwrap().into_algebra();
    let ul3 = strictly_upper_triangular(&f2, 3).unwrap();
    // A/(yx, yy) for the free algebra on x, y of class 3: dimension 4
    let free2 = FreeNilpotent::new(f2.clone(), &["x", "y"], 3).unwrap();
    let ideal = Subspace::span(&f2, 6, [free2.word(&[1, 0]), free2.word(&[1, 1])]);
    let (quot, _) = free2.algebra().quotient_algebra(&ideal).unwrap();
    let _ = free3;
    vec![ul3, free4, quot]
}

#[test]
fn trivial_cases() {
    let f = FiniteField::new(3, 1).unwrap();
    let ul = strictly_upper_triangular(&f, 3).unwrap();
    let p = find_polarization(&ul, &[Gf(0); 3]).unwrap();
    assert_eq!(p.subspace, Subspace::full(3));
    let square_zero = FieldAlgebra::from_sc(f, 3, &[], None).unwrap();
    let p = find_polarization(&square_zero, &[Gf(1), Gf(2), Gf(1)]).unwrap();
    assert_eq!(p.subspace.dim(), 3);
    assert_eq!(p.rank, 0);
}

#[test]
fn heisenberg_dual_of_corner() {
    let f = FiniteField::new(2, 1).unwrap();
    let ul = strictly_upper_triangular(&f, 3).unwrap();
    let func = [Gf(0), Gf(0), Gf(1)];
    let p = find_polarization(&ul, &func).unwrap();
    assert_eq!(p.rank, 2);
    assert_eq!(p.subspace.dim(), 2);
    assert!(ul.is_subalgebra(&p.subspace));
    assert!(is_isotropic(&ul, &func, &p.subspace));
    assert_eq!(exhaustive_polarization(&ul, &func).unwrap().dim(), 2);
    assert_eq!(max_isotropic_dim(&ul, &func), 2);
}

// maximal isotropic subspaces of an alternating form of rank r have
// dimension n - r/2
#[test]
fn isotropic_dimension_formula() {
    for alg in small_f2_algebras() {
        for func in random_functionals(alg.field(), alg.dim(), 20, 7) {
            let r = form_rank(&alg, &alternating_form(&alg, &func));
            assert_eq!(r % 2, 0);
            assert_eq!(max_isotropic_dim(&alg, &func), alg.dim() - r / 2);
        }
    }
}

#[test]
fn matches_exhaustive_search_in_small_dimension() {
    for alg in small_f2_algebras() {
        assert!(alg.dim() <= 4);
        for func in random_functionals(alg.field(), alg.dim(), 100, 0) {
            let p = find_polarization(&alg, &func).unwrap();
            assert_eq!(exhaustive_polarization(&alg, &func).unwrap().dim(), p.subspace.dim());
        }
    }
}

#[test]
fn catalog_polarizations() {
    for (name, alg) in catalog() {
        let mut fallbacks = 0;
        for func in random_functionals(alg.field(), alg.dim(), 100, 0) {
            let p = find_polarization(&alg, &func).unwrap();
            assert!(alg.is_subalgebra(&p.subspace), "{name}");
            assert!(is_isotropic(&alg, &func, &p.subspace), "{name}");
            assert_eq!(p.subspace.dim(), alg.dim() - p.rank / 2, "{name}");
            fallbacks += (p.method == Method::Exhaustive) as usize;
        }
        println!("{name}: {fallbacks} exhaustive fallbacks");
    }
}

#[test]
fn seeds_are_reproducible() {
    let f = FiniteField::new(3, 1).unwrap();
    assert_eq!(random_functionals(&f, 6, 5, 42), random_functionals(&f, 6, 5, 42));
    assert_ne!(random_functionals(&f, 6, 5, 42), random_functionals(&f, 6, 5, 43));
}
