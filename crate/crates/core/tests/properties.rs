mod common;

use proptest::prelude::*;

use allones::approx::{analyze_system, greedy_assign, solve_approx, unpermute};
use allones::gf2::{solve, EchelonDecomposition, Solve};
use allones::io::{gen, parse, render};
use allones::{build_system, simulate_presses, BitMatrix, BitVector, Instance, SwitchType};
use common::*;

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = BitMatrix> {
    prop::collection::vec(prop::collection::vec(any::<bool>(), cols), rows)
        .prop_map(move |r| BitMatrix::from_rows(cols, r.into_iter().map(BitVector::from_bools).collect()))
}

fn vector(len: usize) -> impl Strategy<Value = BitVector> {
    prop::collection::vec(any::<bool>(), len).prop_map(BitVector::from_bools)
}

/// Systems with a planted solution half of the time, so both verdicts occur.
fn system(max: usize) -> impl Strategy<Value = (BitMatrix, BitVector)> {
    (1..=max, 1..=max, any::<bool>()).prop_flat_map(|(rows, cols, planted)| {
        (matrix(rows, cols), vector(cols), vector(rows)).prop_map(move |(a, x, b)| {
            let b = if planted { a.mat_vec(&x).unwrap() } else { b };
            (a, b)
        })
    })
}

fn instance(max_n: usize) -> impl Strategy<Value = Instance> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        let k = pairs.len();
        (
            prop::collection::vec(any::<bool>(), k),
            prop::collection::vec(any::<bool>(), n),
            vector(n),
        )
            .prop_map(move |(mask, sigma, on)| {
                let edges = pairs.iter().zip(&mask).filter(|(_, &m)| m).map(|(e, _)| *e);
                let switches = sigma.iter().map(|&s| if s { SwitchType::Sigma } else { SwitchType::SigmaPlus }).collect();
                Instance::new(n, edges, switches, on).unwrap()
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn elimination_is_sound((a, b) in system(64)) {
        match solve(&a, &b).unwrap() {
            Solve::Consistent(g) => {
                prop_assert_eq!(a.mat_vec(&g.particular).unwrap(), b);
                prop_assert_eq!(g.null_basis.cols(), a.cols() - g.rank);
                for k in 0..g.null_basis.cols() {
                    prop_assert!(a.mat_vec(&g.null_basis.column(k)).unwrap().is_zero());
                }
                for &f in &g.free_columns {
                    prop_assert!(!g.particular.get(f));
                }
            }
            Solve::Inconsistent(w) => prop_assert!(w.certifies(&a, &b)),
        }
    }

    #[test]
    fn simulation_matches_algebra(inst in instance(64), seed in any::<u64>()) {
        let n = inst.n();
        let press: BitVector = (0..n).map(|i| (seed.rotate_left(i as u32) ^ (i as u64 * 0x9e37)) & 1 == 1).collect();
        let (a, b) = build_system(&inst);
        let lit = simulate_presses(&inst, &press).is_all_ones();
        prop_assert_eq!(lit, a.mat_vec(&press).unwrap() == b);
        prop_assert!(a.is_symmetric());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1_000))]

    #[test]
    fn rank_matches_naive(a in (1usize..40, 1usize..40).prop_flat_map(|(r, c)| matrix(r, c))) {
        prop_assert_eq!(a.rank(), naive_rank(dense(&a)));
    }

    #[test]
    fn solution_count_is_two_to_the_corank((a, b) in system(12)) {
        let all = all_solutions(&dense(&a), &bools(&b), a.cols());
        match solve(&a, &b).unwrap() {
            Solve::Consistent(g) => {
                prop_assert_eq!(all.len(), 1usize << g.corank());
                let mut expected: Vec<String> = all.iter()
                    .map(|x| x.iter().map(|&b| if b { '1' } else { '0' }).collect())
                    .collect();
                expected.sort();
                prop_assert_eq!(affine_set(&columns_of(&g.null_basis), &bools(&g.particular)), expected);
            }
            Solve::Inconsistent(_) => prop_assert!(all.is_empty()),
        }
    }

    #[test]
    fn echelon_preserves_affine_set_and_weights((a, b) in system(14)) {
        let Solve::Consistent(g) = solve(&a, &b).unwrap() else { return Ok(()) };
        prop_assume!(g.corank() <= 10);
        let dec = EchelonDecomposition::new(&g.null_basis, &g.particular).unwrap();
        prop_assert!(dec.structure_violations().is_empty(), "{:?}", dec.structure_violations());

        let before = affine_set(&columns_of(&g.null_basis), &bools(&g.particular));
        let after = affine_set(&columns_of(dec.epsilon()), &bools(dec.gamma_permuted()));
        // Undo the row permutation on the echelon side before comparing.
        let mut unpermuted: Vec<String> = after.iter().map(|s| {
            let v: BitVector = s.chars().map(|c| c == '1').collect();
            dec.perm().apply_inverse(&v).to_string()
        }).collect();
        unpermuted.sort();
        prop_assert_eq!(&before, &unpermuted);

        let weights = |set: &[String]| {
            let mut w: Vec<usize> = set.iter().map(|s| s.matches('1').count()).collect();
            w.sort();
            w
        };
        prop_assert_eq!(weights(&before), weights(&after));
    }

    #[test]
    fn greedy_guarantees_hold(inst in instance(40)) {
        let (a, b) = build_system(&inst);
        let Ok(analysis) = analyze_system(a.clone(), b.clone()) else { return Ok(()) };
        let dec = &analysis.decomposition;
        let greedy = greedy_assign(dec);
        prop_assert_eq!(&greedy.u_permuted, &dec.evaluate(&greedy.z));
        for j in dec.part_range(0) {
            prop_assert_eq!(greedy.u_permuted.get(j), dec.gamma_permuted().get(j));
        }
        for i in 1..=dec.m() {
            let r = dec.part_range(i);
            prop_assert!(2 * greedy.u_permuted.weight_in(r.start, r.end) <= r.len());
        }
        let press = unpermute(dec, &greedy.u_permuted);
        prop_assert_eq!(a.mat_vec(&press).unwrap(), b);
        let sol = analysis.solution();
        prop_assert_eq!(&sol.press, &press);
        prop_assert!(sol.meets_rank_bound());
        prop_assert!(sol.meets_mixed_bound());
    }

    #[test]
    fn solver_is_deterministic(inst in instance(30)) {
        prop_assert_eq!(solve_approx(&inst), solve_approx(&inst.clone()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn instance_files_round_trip(inst in instance(30)) {
        prop_assert_eq!(parse(&render(&inst)).unwrap(), inst);
    }
}

#[test]
fn generators_satisfy_instance_invariants() {
    let all = [
        gen::path(7),
        gen::cycle(7),
        gen::complete(7),
        gen::grid(3, 4),
        gen::random_gnp(30, 0.3, 9),
        gen::random_tree(30, 9),
        gen::random_mixed(30, 0.3, 9),
    ];
    for inst in all {
        // Rebuilding through the validating constructor must succeed unchanged.
        let rebuilt = Instance::new(inst.n(), inst.edges().iter().copied(), inst.switches().to_vec(), inst.initially_on().clone());
        assert_eq!(rebuilt.unwrap(), inst);
        assert!(inst.edges().iter().all(|&(i, j)| i < j && j < inst.n()));
    }
}
