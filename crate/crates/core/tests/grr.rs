use grrforge::classical::{Family, GroupSpec};
use grrforge::grr::automorphism::{naive_vertex_stabilizer_order, vertex_stabilizer_order};
use grrforge::grr::{
    aut_gs_trivial, aut_stabilizer_order, build_cayley, extends_to_automorphism, grr_verdict,
};
use grrforge::perm::{symmetric_normalizer, InvolutionMode, PermGroup, Permutation, RngState};
use proptest::prelude::*;

fn group(f: Family, n: u32, q: u64) -> PermGroup {
    PermGroup::new(&GroupSpec::new(f, n, q).unwrap()).unwrap()
}

fn generating_pair(g: &PermGroup, r: u128, rng: &mut RngState) -> (Permutation, Permutation) {
    loop {
        let x = g.find_ppd_element(r, rng).unwrap();
        let y = g.sample_involution(InvolutionMode::Uniform, rng).unwrap();
        if g.generation_test(&x, &y) {
            return (x, y);
        }
    }
}

/// On 5 and 8 points every automorphism of `A₅` and `PSL₂(7)` is induced
/// by conjugation inside the symmetric group.
fn check_against_symmetric_oracle(g: &PermGroup, r: u128, seed: u64) {
    let all = g.enumerate().unwrap();
    let normalizer = symmetric_normalizer(g.generators(), |h| g.contains(h)).unwrap();
    let aut_order = normalizer.len();
    let mut rng = RngState::new(seed);
    let (mut yes, mut no) = (0, 0);
    for k in 0..100 {
        let (x, y) = generating_pair(g, r, &mut rng);
        let (x2, y2) = match k % 4 {
            0 => (x.inverse(), y.clone()),
            1 => {
                let s = &normalizer[rng.below(aut_order)];
                (x.conjugate_by(s), y.conjugate_by(s))
            }
            2 => (
                x.clone(),
                g.sample_involution(InvolutionMode::Uniform, &mut rng)
                    .unwrap(),
            ),
            _ => (
                g.find_ppd_element(r, &mut rng).unwrap(),
                all.get(g.involutions().unwrap()[rng.below(g.involutions().unwrap().len())])
                    .clone(),
            ),
        };
        let oracle = normalizer
            .iter()
            .any(|s| x.conjugate_by(s) == x2 && y.conjugate_by(s) == y2);
        let got = extends_to_automorphism(g, (&x, &y), (&x2, &y2)).unwrap();
        assert_eq!(got, oracle, "pair {x} {y} -> {x2} {y2}");
        if got {
            yes += 1;
        } else {
            no += 1;
        }
    }
    assert!(yes > 0 && no > 0);
}

#[test]
fn extension_matches_oracle_on_a5() {
    let g = group(Family::Psl, 2, 4);
    assert_eq!(
        symmetric_normalizer(g.generators(), |h| g.contains(h))
            .unwrap()
            .len(),
        120
    );
    check_against_symmetric_oracle(&g, 5, 8);
}

#[test]
fn extension_matches_oracle_on_psl27() {
    let g = group(Family::Psl, 2, 7);
    assert_eq!(
        symmetric_normalizer(g.generators(), |h| g.contains(h))
            .unwrap()
            .len(),
        336
    );
    check_against_symmetric_oracle(&g, 7, 9);
    check_against_symmetric_oracle(&g, 3, 10);
}

#[test]
fn inversion_test_is_conjugation_invariant() {
    let g = group(Family::Psl, 3, 3);
    let mut rng = RngState::new(4);
    for _ in 0..10 {
        let (x, y) = generating_pair(&g, 13, &mut rng);
        let t = g.random_element(&mut rng);
        assert_eq!(
            aut_gs_trivial(&g, &x, &y).unwrap(),
            aut_gs_trivial(&g, &x.conjugate_by(&t), &y.conjugate_by(&t)).unwrap()
        );
    }
}

#[test]
fn nontrivial_aut_gs_shows_up_in_the_graph() {
    for (f, n, q, r) in [
        (Family::Psl, 2, 7, 7),
        (Family::Psl, 3, 3, 13),
        (Family::Psu, 3, 3, 7),
    ] {
        let g = group(f, n, q);
        let mut rng = RngState::new(31);
        for _ in 0..8 {
            let (x, y) = generating_pair(&g, r, &mut rng);
            let graph = build_cayley(&g, &x, &y).unwrap();
            let stab = aut_stabilizer_order(&graph).unwrap();
            if !aut_gs_trivial(&g, &x, &y).unwrap() {
                assert!(stab > 1);
            }
            let v = grr_verdict(&g, &x, &y).unwrap();
            assert_eq!(v.stabilizer_order.unwrap(), stab.into());
        }
    }
}

#[test]
fn a4_cayley_graph_matches_backtracking() {
    // the Cayley graph of A₄ = ⟨(0 1 2), (0 1)(2 3)⟩ is the truncated tetrahedron
    let x = Permutation::from_cycles(4, &[&[0, 1, 2]]).unwrap();
    let y = Permutation::from_cycles(4, &[&[0, 1], &[2, 3]]).unwrap();
    let all = grrforge::perm::Enumeration::closure(&[x.clone(), y.clone()], 4, 100).unwrap();
    assert_eq!(all.len(), 12);
    let adj: Vec<[u32; 3]> = (0..12)
        .map(|i| {
            let g = all.get(i);
            [x.clone(), x.inverse(), y.clone()].map(|s| all.index_of(&s.mul(g)).unwrap() as u32)
        })
        .collect();
    assert_eq!(naive_vertex_stabilizer_order(&adj, 0), 2);
    assert_eq!(vertex_stabilizer_order(&adj, 0), 2);
}

fn petersen() -> Vec<[u32; 3]> {
    let mut lists = vec![Vec::new(); 10];
    for i in 0..5 {
        for (a, b) in [(i, (i + 1) % 5), (i, i + 5), (i + 5, (i + 2) % 5 + 5)] {
            lists[a].push(b as u32);
            lists[b].push(a as u32);
        }
    }
    lists.into_iter().map(|l| [l[0], l[1], l[2]]).collect()
}

proptest! {
    #[test]
    fn stabilizer_is_label_invariant(perm in Just((0u32..10).collect::<Vec<_>>()).prop_shuffle(), v in 0usize..10) {
        let g = petersen();
        let mut relabeled = vec![[0u32; 3]; 10];
        for (u, nb) in g.iter().enumerate() {
            relabeled[perm[u] as usize] = nb.map(|w| perm[w as usize]);
        }
        prop_assert_eq!(vertex_stabilizer_order(&relabeled, v), 12);
    }
}
