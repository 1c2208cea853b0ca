//! Exact character theory of the groups `1+A`.
//!
//! The table comes from the class multiplication coefficients alone
//! (Dixon's method); nothing here knows how characters of `1+A` are
//! induced.

mod classfn;
mod dixon;
mod linear;
mod modp;
mod table;

pub use classfn::{check_embedding, induce, inner_product, mackey_irreducible, restrict, scalar_on, ClassFunction};
pub use dixon::character_table;
pub use linear::{linear_characters, LinearCharacters};
pub use table::CharacterTable;

#[cfg(test)]
mod tests {
    use num_rational::Rational64;

    use super::*;
    use crate::exactfield::{Cyclotomic, FiniteField, Gf};
    use crate::nilalg::{strictly_upper_triangular, FieldAlgebra, FreeNilpotent, Subspace};
    use crate::unitgroup::{subalgebra_group, Embedding, UnitGroup};

    fn ul(n: usize, p: u32, k: u32) -> UnitGroup {
        UnitGroup::new(strictly_upper_triangular(&FiniteField::new(p, k).unwrap(), n).unwrap()).unwrap()
    }

    fn sorted(mut v: Vec<i64>) -> Vec<i64> {
        v.sort();
        v
    }

    #[test]
    fn heisenberg_tables() {
        for (p, k) in [(2u32, 1u32), (3, 1), (2, 2)] {
            let q = p.pow(k) as i64;
            let g = ul(3, p, k);
            let t = character_table(&g).unwrap();
            t.check_orthogonality(&g).unwrap();
            let degs = t.degrees();
            assert_eq!(degs.iter().filter(|&&d| d == 1).count() as i64, q * q);
            assert_eq!(degs.iter().filter(|&&d| d == q).count() as i64, q - 1);
            assert_eq!(degs.len() as i64, q * q + q - 1);
        }
        let t = character_table(&ul(3, 2, 1)).unwrap();
        assert_eq!(t.degrees(), vec![1, 1, 1, 1, 2]);
        assert_eq!(t.prime(), 13);
        assert!(t.characters()[0].values().iter().all(|v| *v == Cyclotomic::one()));
    }

    #[test]
    fn abelian_tables() {
        let f = FiniteField::new(3, 1).unwrap();
        let g = UnitGroup::new(FieldAlgebra::from_sc(f.clone(), 2, &[], None).unwrap()).unwrap();
        let t = character_table(&g).unwrap();
        assert_eq!(t.degrees(), vec![1; 9]);
        t.check_orthogonality(&g).unwrap();
        // the linear characters are exactly psi(f(x)) for functionals f
        let lin = linear_characters(&g).unwrap();
        assert_eq!(lin.len(), 9);
        for a in f.elements() {
            for b in f.elements() {
                let chi = ClassFunction::new(
                    g.classes().classes().iter().map(|c| {
                        let x = g.coords(c.representative);
                        f.psi(f.add(f.mul(a, x[0]), f.mul(b, x[1])))
                    })
                    .collect(),
                );
                assert!(t.characters().contains(&chi));
                assert!(lin.contains(&chi));
            }
        }
    }

    #[test]
    fn larger_catalog_tables() {
        let g = ul(4, 2, 1);
        let t = character_table(&g).unwrap();
        t.check_orthogonality(&g).unwrap();
        assert_eq!(sorted(t.degrees()), t.degrees());
        for d in t.degrees() {
            assert!([1, 2, 4].contains(&d));
        }
        let f2 = FiniteField::new(2, 1).unwrap();
        let free = UnitGroup::new(FreeNilpotent::new(f2, &["x", "y"], 3).unwrap().into_algebra()).unwrap();
        let t = character_table(&free).unwrap();
        t.check_orthogonality(&free).unwrap();
        for d in t.degrees() {
            assert!(d == 1 || d == 2 || d == 4);
        }
    }

    #[test]
    fn inner_products_and_regular() {
        let g = ul(3, 2, 1);
        let t = character_table(&g).unwrap();
        let triv = ClassFunction::trivial(&g);
        assert_eq!(inner_product(&g, &triv, &triv), Cyclotomic::one());
        let reg = ClassFunction::regular(&g);
        for chi in t.characters() {
            assert_eq!(inner_product(&g, &reg, chi), Cyclotomic::from_int(chi.degree().unwrap()));
            assert_eq!(inner_product(&g, chi, chi), Cyclotomic::one());
        }
    }

    #[test]
    fn linear_character_counts() {
        for g in [ul(3, 2, 1), ul(3, 3, 1), ul(3, 2, 2), ul(4, 2, 1)] {
            let lin = LinearCharacters::compute(&g).unwrap();
            assert_eq!(lin.len() * lin.derived_subgroup().order(), g.order());
            let t = character_table(&g).unwrap();
            let table_linear: Vec<_> = t.characters().iter().filter(|c| c.degree() == Some(1)).cloned().collect();
            let mut ours = lin.all(&g);
            ours.sort_by(|a, b| super::dixon::compare_characters(a, b, g.exponent()));
            assert_eq!(ours, table_linear);
        }
        assert_eq!(linear_characters(&ul(3, 2, 1)).unwrap().len(), 4);
    }

    fn heisenberg_a1(g: &UnitGroup) -> (UnitGroup, Embedding) {
        // span{e12, e13}
        let f = g.field();
        let b = Subspace::span(f, 3, [vec![Gf(1), Gf(0), Gf(0)], vec![Gf(0), Gf(0), Gf(1)]]);
        let (h, emb, _) = subalgebra_group(g, &b).unwrap();
        (h, emb)
    }

    #[test]
    fn induction_restriction_and_mackey() {
        let g = ul(3, 2, 1);
        let t = character_table(&g).unwrap();
        let (h, emb) = heisenberg_a1(&g);
        let th = character_table(&h).unwrap();
        let triv_h = ClassFunction::trivial(&h);
        let ind = induce(&h, &emb, &triv_h, &g).unwrap();
        assert_eq!(ind.degree(), Some(2));
        assert!(!mackey_irreducible(&h, &emb, &triv_h, &g).unwrap());

        let chi2 = t.characters().last().unwrap();
        let mut hits = 0;
        for rho in th.characters() {
            // Frobenius reciprocity
            let ind = induce(&h, &emb, rho, &g).unwrap();
            for chi in t.characters() {
                let lhs = inner_product(&g, &ind, chi);
                let rhs = inner_product(&h, rho, &restrict(chi, &g, &h, &emb).unwrap());
                assert_eq!(lhs, rhs);
            }
            let irr = mackey_irreducible(&h, &emb, rho, &g).unwrap();
            assert_eq!(irr, ind == *chi2);
            hits += irr as usize;
        }
        assert_eq!(hits, 2);

        let res = restrict(&ClassFunction::trivial(&g), &g, &h, &emb).unwrap();
        assert_eq!(res, ClassFunction::trivial(&h));
    }

    #[test]
    fn scalar_examples() {
        let g = ul(3, 2, 1);
        let t = character_table(&g).unwrap();
        let chi2 = t.characters().last().unwrap();
        assert_eq!(scalar_on(chi2, &g, &[0]).unwrap(), vec![Cyclotomic::one()]);
        let z = g.power_subgroup(2);
        let zeta = scalar_on(chi2, &g, z.elements()).unwrap();
        assert_eq!(zeta[1], Cyclotomic::from_int(-1));
        assert!(scalar_on(chi2, &g, &(0..8).collect::<Vec<_>>()).is_none());
        assert_eq!(chi2.values()[0], Cyclotomic::from_int(2));
        let half = chi2.scale(Rational64::new(1, 2));
        assert_eq!(half.degree(), Some(1));
    }

    #[test]
    fn degrees_are_powers_of_q() {
        let f4 = FiniteField::new(2, 2).unwrap();
        let g = UnitGroup::new(FreeNilpotent::new(f4, &["x"], 4).unwrap().into_algebra()).unwrap();
        let t = character_table(&g).unwrap();
        assert!(t.degrees().iter().all(|&d| d == 1));
        for g in [ul(3, 3, 1), ul(3, 2, 2)] {
            let q = g.field().order() as i64;
            for d in character_table(&g).unwrap().degrees() {
                assert!(d == 1 || d == q);
            }
        }
    }

    #[test]
    fn serialization() {
        let g = ul(3, 2, 1);
        let t = character_table(&g).unwrap();
        let json: serde_json::Value = serde_json::from_str(&t.to_json(&g)).unwrap();
        assert_eq!(json["characters"].as_array().unwrap().len(), 5);
        assert_eq!(json["classes"][0]["size"], 1);
        assert_eq!(json["dixon_prime"], 13);
        let csv = t.to_csv();
        assert_eq!(csv.lines().count(), 7);
        assert!(csv.lines().last().unwrap().starts_with("chi5,2,2,-2,0"));
    }
}
