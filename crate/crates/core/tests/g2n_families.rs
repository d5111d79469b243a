use grquot_core::projnorm::{family_check, surjectivity_oracle};

#[test]
fn g2n_families_exhaustive() {
    for (n, m) in [(5, 2), (5, 3), (7, 2)] {
        let rep = family_check(n, m, None).unwrap();
        println!(
            "n={n} m={m} size={} defected={} equality_blocks={} branches={:?} passes={:?}",
            rep.family_size, rep.defected, rep.equality_blocks, rep.branches, rep.passes
        );
        assert!(!rep.sampled);
        assert_eq!(rep.checked, rep.family_size);
        assert!(rep.passed, "{:?}", rep.falsifiers);
        assert!(!rep.branches.contains_key("search"));
    }
}

#[test]
fn g2n_sampled_degree_three() {
    let rep = family_check(7, 3, Some((60, 2024))).unwrap();
    assert!(rep.sampled);
    assert_eq!(rep.checked, 60);
    assert!(rep.passed, "{:?}", rep.falsifiers);
}

#[test]
fn surjectivity_desk_scale() {
    for (n, m) in [(5, 2), (5, 3), (7, 2)] {
        let r = surjectivity_oracle(n, m).unwrap();
        println!("{r:?}");
        assert!(r.equal);
    }
}
