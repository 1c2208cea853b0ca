use std::time::Instant;

use nilrep_core::exactfield::FiniteField;
use nilrep_core::nilalg::FreeNilpotent;
use nilrep_core::unitgroup::UnitGroup;
use nilrep_gutkin::verify_gutkin_all;

#[test]
fn free_class_three_over_f3() {
    let f = FiniteField::new(3, 1).unwrap();
    let g = UnitGroup::new(FreeNilpotent::new(f, &["x", "y"], 3).unwrap().into_algebra()).unwrap();
    let t = Instant::now();
    let report = verify_gutkin_all(&g).unwrap();
    println!("free(3,2,3): {:?}", t.elapsed());
    assert_eq!(report.verified, 297);
    for d in &report.characters {
        assert!(d.degree == 1 || (d.degree == 3 && d.dim_b == 5));
    }
}
