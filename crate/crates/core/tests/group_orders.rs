use grrforge::classical::{standard_generators, Family, GroupSpec};
use grrforge::perm::{projective_action, schreier_sims, Enumeration, SchreierSimsOptions};
use num_bigint::BigUint;

fn exact_order(spec: &GroupSpec) -> BigUint {
    let rep = standard_generators(spec).unwrap();
    let (_, gens) = projective_action(&rep, 10_000).unwrap();
    schreier_sims(&gens, &SchreierSimsOptions::default()).order()
}

#[test]
fn schreier_sims_order_matches_closed_form() {
    let cases: &[(Family, u32, u64)] = &[
        (Family::Psl, 2, 4),
        (Family::Psl, 2, 5),
        (Family::Psl, 2, 7),
        (Family::Psl, 2, 8),
        (Family::Psl, 2, 9),
        (Family::Psl, 2, 11),
        (Family::Psl, 2, 13),
        (Family::Psl, 2, 27),
        (Family::Psl, 3, 2),
        (Family::Psl, 3, 3),
        (Family::Psl, 3, 4),
        (Family::Psl, 4, 2),
        (Family::Psl, 4, 3),
        (Family::Psl, 5, 2),
        (Family::Psu, 3, 3),
        (Family::Psu, 3, 4),
        (Family::Psu, 4, 2),
        (Family::Psu, 4, 3),
        (Family::Psu, 5, 2),
        (Family::Psp, 4, 3),
        (Family::Psp, 4, 4),
        (Family::Psp, 6, 2),
        (Family::Psp, 6, 3),
        (Family::Psp, 8, 2),
        (Family::POmega, 7, 3),
        (Family::POmegaPlus, 8, 2),
        (Family::POmegaMinus, 8, 2),
    ];
    for &(f, n, q) in cases {
        let spec = GroupSpec::new(f, n, q).unwrap();
        assert_eq!(exact_order(&spec), spec.group_order(), "{spec}");
    }
}

#[test]
fn small_orthogonal_isomorphs() {
    let cases: &[(Family, u32, u64, u64)] = &[
        (Family::POmega, 5, 3, 25920),
        (Family::POmegaMinus, 4, 2, 60),
        (Family::POmegaMinus, 4, 3, 360),
        (Family::POmegaPlus, 6, 2, 20160),
        (Family::POmegaMinus, 6, 2, 25920),
        (Family::POmegaPlus, 6, 3, 6065280),
        (Family::POmega, 5, 5, 4680000),
    ];
    for &(f, n, q, order) in cases {
        let spec = GroupSpec::unchecked(f, n, q).unwrap();
        assert_eq!(spec.group_order(), BigUint::from(order), "{spec}");
        assert_eq!(exact_order(&spec), spec.group_order(), "{spec}");
    }
}

#[test]
fn breadth_first_closure_matches() {
    for &(f, n, q) in &[
        (Family::Psl, 2, 7),
        (Family::Psu, 3, 3),
        (Family::Psp, 4, 3),
    ] {
        let spec = GroupSpec::new(f, n, q).unwrap();
        let rep = standard_generators(&spec).unwrap();
        let (space, gens) = projective_action(&rep, 10_000).unwrap();
        let all = Enumeration::closure(&gens, space.degree(), 200_000).unwrap();
        assert_eq!(BigUint::from(all.len()), spec.group_order(), "{spec}");
    }
}
