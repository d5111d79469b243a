use grquot_core::deodhar::{quotient_probe, ProbeCase};
use grquot_core::g37;
use grquot_core::pluecker::{restrict_schubert, straighten, tableau_to_poly};
use grquot_core::projnorm::family_check;
use grquot_core::rewriting::g37_system;
use grquot_core::tableau::enumerate_invariants;
use grquot_core::weyl::ColumnTuple;

#[test]
fn benchmarked_inputs_are_nontrivial() {
    let w = ColumnTuple::new(7, vec![3, 5, 7]).unwrap();
    let v = ColumnTuple::new(7, vec![1, 2, 3]).unwrap();
    assert_eq!(enumerate_invariants(3, 7, 2, &w, &v).len(), g37::invariants(2).len());
    let top = ColumnTuple::top(2, 7).unwrap();
    let id = ColumnTuple::identity(2, 7).unwrap();
    assert_eq!(enumerate_invariants(2, 7, 2, &top, &id).len(), 260);

    let p = &tableau_to_poly(&g37::y(5)) * &tableau_to_poly(&g37::y(7));
    let s = straighten(&p);
    assert!(s.terms().len() > 1);
    assert_eq!(restrict_schubert(&s, &w, &v), tableau_to_poly(&g37::z20()));

    assert!(g37_system().check_confluence(4).confluent);
    assert!(quotient_probe(ProbeCase::S3).unwrap().passed);
    assert!(family_check(5, 3, None).unwrap().passed);
}
