//! Fixed expected values, each confirmed by an oracle that does not share the
//! packed elimination path.

mod common;

use allones::approx::{greedy_assign, solve_approx};
use allones::exact::{exact_by_null_space, exact_by_press_enumeration, NULL_SPACE_LIMIT, PRESS_LIMIT};
use allones::gf2::EchelonDecomposition;
use allones::io::gen;
use allones::{build_system, simulate_presses, BitMatrix, BitVector};
use common::*;

#[test]
fn lights_out_5x5_rank_from_naive_elimination() {
    let (a, _) = build_system(&gen::grid(5, 5));
    assert_eq!(naive_rank(dense(&a)), 23);
    assert_eq!(a.rank(), 23);
}

#[test]
fn lights_out_5x5_optimum_by_press_enumeration() {
    let inst = gen::grid(5, 5);
    let by_press = exact_by_press_enumeration(&inst, 25).unwrap().unwrap();
    assert_eq!(by_press.opt, 15);
    let (a, b) = build_system(&inst);
    let by_kernel = exact_by_null_space(&a, &b, NULL_SPACE_LIMIT).unwrap().unwrap();
    assert_eq!(by_kernel.opt, 15);
    assert!(naive_simulate(&inst, &bools(&by_press.argmin)).iter().all(|&b| b));
}

#[test]
fn lights_out_5x5_solver_output_lights_everything() {
    let inst = gen::grid(5, 5);
    let sol = solve_approx(&inst).into_solution().unwrap();
    assert!(simulate_presses(&inst, &sol.press).is_all_ones());
    assert!(naive_simulate(&inst, &bools(&sol.press)).iter().all(|&b| b));
    assert_eq!((sol.certificate.r, sol.certificate.m), (23, 2));
}

#[test]
fn k2_both_solutions_have_weight_one() {
    let inst = gen::complete(2);
    let (a, b) = build_system(&inst);
    let sols = all_solutions(&dense(&a), &bools(&b), 2);
    assert_eq!(sols, vec![vec![true, false], vec![false, true]]);
    assert_eq!(solve_approx(&inst).solution().unwrap().weight, 1);
}

#[test]
fn triangle_optimum_and_certificate() {
    let inst = gen::complete(3);
    let (a, b) = build_system(&inst);
    let sols = all_solutions(&dense(&a), &bools(&b), 3);
    assert_eq!(sols.len(), 4);
    let opt = sols.iter().map(|x| x.iter().filter(|&&b| b).count()).min().unwrap();
    assert_eq!(opt, 1);
    let s = solve_approx(&inst).into_solution().unwrap();
    assert_eq!(s.weight, 1);
    assert_eq!((s.certificate.r, s.certificate.m), (1, 2));
    assert!(2 * s.weight <= 3 + s.certificate.g1 - s.certificate.g0);
}

#[test]
fn greedy_examples_by_enumerating_both_choices() {
    // epsilon = (1,1,1)^T, gamma = (1,1,0): z = 0 gives weight 2, z = 1 gives weight 1.
    let eps = BitMatrix::from_bits(&[[1u8], [1], [1]]);
    let gamma = BitVector::from_bits(&[1, 1, 0]);
    let weights: Vec<usize> = [false, true]
        .iter()
        .map(|&z| naive_mat_vec(&dense(&eps), &[z]).iter().zip(bools(&gamma)).filter(|(a, b)| **a != *b).count())
        .collect();
    assert_eq!(weights, vec![2, 1]);
    let dec = EchelonDecomposition::new(&eps, &gamma).unwrap();
    let g = greedy_assign(&dec);
    assert_eq!(g.z, BitVector::from_bits(&[1]));
    assert_eq!(g.u_permuted, BitVector::from_bits(&[0, 0, 1]));

    // Tie: both choices have weight 1 and z = 0 is kept.
    let dec = EchelonDecomposition::new(&BitMatrix::from_bits(&[[1u8], [1]]), &BitVector::from_bits(&[1, 0])).unwrap();
    let g = greedy_assign(&dec);
    assert!(g.z.is_zero());
    assert_eq!(g.u_permuted, BitVector::from_bits(&[1, 0]));
}

#[test]
fn four_by_two_echelon_span_by_enumeration() {
    let cols = [BitVector::from_bits(&[1, 1, 0, 0]), BitVector::from_bits(&[1, 1, 1, 1])];
    let basis = BitMatrix::from_columns(4, &cols);
    let dec = EchelonDecomposition::new(&basis, &BitVector::zeros(4)).unwrap();
    let zero = vec![false; 4];
    let before = affine_set(&columns_of(&basis), &zero);
    let mut after: Vec<String> = affine_set(&columns_of(dec.epsilon()), &zero)
        .iter()
        .map(|s| dec.perm().apply_inverse(&s.chars().map(|c| c == '1').collect()).to_string())
        .collect();
    after.sort();
    assert_eq!(before, after);
    // Rows whose last nonzero column is 1 precede those whose is 2.
    let last: Vec<Option<usize>> = (0..4).map(|j| dec.epsilon().row(j).last_one()).collect();
    assert_eq!(last, vec![Some(0), Some(0), Some(1), Some(1)]);
}

#[test]
fn oracles_agree_on_small_random_instances() {
    for seed in 0..400 {
        let inst = gen::random_mixed(10, [0.2, 0.5, 0.8][seed as usize % 3], seed);
        let (a, b) = build_system(&inst);
        let p = exact_by_press_enumeration(&inst, PRESS_LIMIT).unwrap();
        let k = exact_by_null_space(&a, &b, NULL_SPACE_LIMIT).unwrap();
        assert_eq!(p.as_ref().map(|o| o.opt), k.as_ref().map(|o| o.opt), "seed {seed}");
        assert_eq!(p.is_some(), solve_approx(&inst).is_feasible(), "seed {seed}");
    }
}
