use nilrep_core::chars::{character_table, LinearCharacters};
use nilrep_core::exactfield::FiniteField;
use nilrep_core::nilalg::{strictly_upper_triangular, FreeNilpotent};
use nilrep_core::unitgroup::UnitGroup;

#[test]
fn free_class_three_over_f3() {
    let f = FiniteField::new(3, 1).unwrap();
    let g = UnitGroup::new(FreeNilpotent::new(f, &["x", "y"], 3).unwrap().into_algebra()).unwrap();
    assert_eq!(g.order(), 729);
    assert_eq!(g.exponent(), 3);
    let t = character_table(&g).unwrap();
    assert_eq!(t.len(), 297);
    let degrees = t.degrees();
    assert_eq!(degrees.iter().filter(|&&d| d == 1).count(), 243);
    assert_eq!(degrees.iter().filter(|&&d| d == 3).count(), 54);
    assert_eq!(LinearCharacters::compute(&g).unwrap().len(), 243);
}

#[test]
fn ul4_over_f2() {
    let g = UnitGroup::new(strictly_upper_triangular(&FiniteField::new(2, 1).unwrap(), 4).unwrap()).unwrap();
    let t = character_table(&g).unwrap();
    t.check_orthogonality(&g).unwrap();
    let mut counts = [0; 5];
    for d in t.degrees() {
        counts[d as usize] += 1;
    }
    // 8 + 6*4 + 2*16 = 64
    assert_eq!((counts[1], counts[2], counts[4]), (8, 6, 2));
}
