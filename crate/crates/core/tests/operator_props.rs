mod common;

use common::{operator_suite, random_form, rng};
use nearholo::generators::{e2_completed, e2_paper, eisenstein, level1_basis};
use nearholo::linalg::solve_in_span;
use nearholo::operators::{
    casimir, casimir_eigenvalue, infinitesimal_character, iterate_lower, iterate_raise, lower, raise,
};
use nearholo::series::{int, NearlyHolomorphicForm, Rational};
use proptest::prelude::*;

const N: usize = 10;

#[test]
fn commutation_on_suite() {
    for f in operator_suite(N) {
        let k = f.weight().unwrap();
        let ld = lower(&raise(&f).unwrap()).unwrap();
        let dl = raise(&lower(&f).unwrap()).unwrap();
        assert_eq!(ld.try_sub(&dl).unwrap(), f.scale(&int(-k)), "weight {k}");
    }
}

#[test]
fn casimir_is_central_on_suite() {
    for f in operator_suite(N) {
        assert_eq!(casimir(&raise(&f).unwrap()).unwrap(), raise(&casimir(&f).unwrap()).unwrap());
        assert_eq!(casimir(&lower(&f).unwrap()).unwrap(), lower(&casimir(&f).unwrap()).unwrap());
    }
}

#[test]
fn character_is_raising_stable() {
    for f in operator_suite(N) {
        let chi = infinitesimal_character(&f).unwrap();
        for r in 1..=3 {
            let g = iterate_raise(&f, r).unwrap();
            if !g.is_zero() {
                assert_eq!(infinitesimal_character(&g).unwrap(), chi);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn commutation_on_random_forms(seed in any::<u64>(), k in -6i64..12, depth in 0usize..4) {
        let f = random_form(&mut rng(seed), k, depth, 6);
        let ld = lower(&raise(&f).unwrap()).unwrap();
        let dl = raise(&lower(&f).unwrap()).unwrap();
        prop_assert_eq!(ld.try_sub(&dl).unwrap(), f.scale(&int(-k)));
    }

    #[test]
    fn centrality_on_random_forms(seed in any::<u64>(), k in -4i64..10, depth in 0usize..4) {
        let f = random_form(&mut rng(seed), k, depth, 5);
        prop_assert_eq!(casimir(&raise(&f).unwrap()).unwrap(), raise(&casimir(&f).unwrap()).unwrap());
        prop_assert_eq!(casimir(&lower(&f).unwrap()).unwrap(), lower(&casimir(&f).unwrap()).unwrap());
    }

    #[test]
    fn kernel_depth_and_nilpotence(seed in any::<u64>(), k in -4i64..14, depth in 0usize..5) {
        let f = random_form(&mut rng(seed), k, depth, 5);
        let p = f.depth();
        let lowered = lower(&f).unwrap();
        prop_assert_eq!(lowered.is_zero(), p == 0);
        if p >= 1 {
            prop_assert_eq!(lowered.depth(), p - 1);
        }
        prop_assert!(raise(&f).unwrap().depth() <= p + 1);
        prop_assert!(iterate_lower(&f, p + 1).unwrap().is_zero());
    }
}

#[test]
fn lowering_examples() {
    let x = NearlyHolomorphicForm::monomial(2, 1, 0, int(1), 4);
    assert_eq!(lower(&x).unwrap(), NearlyHolomorphicForm::constant(0, int(1), 4));
    let x2q = NearlyHolomorphicForm::monomial(4, 2, 1, int(1), 4);
    assert_eq!(lower(&x2q).unwrap(), NearlyHolomorphicForm::monomial(2, 1, 1, int(2), 4));
    assert!(lower(&eisenstein(4, 4).unwrap()).unwrap().is_zero());
}

#[test]
fn e2_eigenvalue() {
    assert_eq!(casimir_eigenvalue(&e2_paper(N)).unwrap(), int(0));
    assert_eq!(infinitesimal_character(&e2_paper(N)).unwrap().lambda(), &int(2));
    for k in [4, 6, 12] {
        let f = level1_basis(k, N).pop().unwrap();
        assert_eq!(casimir_eigenvalue(&f).unwrap(), int(k * k - 2 * k));
    }
}

#[test]
fn ramanujan_identities() {
    let p = e2_completed(N);
    let e4 = eisenstein(4, N).unwrap();
    let e6 = eisenstein(6, N).unwrap();
    let twelfth = Rational::new(1.into(), 12.into());
    let third = Rational::new(1.into(), 3.into());
    let expected = p.mul(&p).try_sub(&e4).unwrap().scale(&twelfth);
    assert_eq!(raise(&p).unwrap(), expected);
    let expected = p.mul(&e4).try_sub(&e6).unwrap().scale(&third);
    assert_eq!(raise(&e4).unwrap(), expected);
    let expected = p.mul(&e6).try_sub(&e4.mul(&e4)).unwrap().scale(&Rational::new(1.into(), 2.into()));
    assert_eq!(raise(&e6).unwrap(), expected);
}

/// `X^r P*^a E₄^b E₆^c` of total weight `k`, with `X` of weight 2.
fn quasimodular_monomials(k: i64) -> Vec<NearlyHolomorphicForm> {
    let x = NearlyHolomorphicForm::monomial(2, 1, 0, int(1), N);
    let p = e2_completed(N);
    let one = NearlyHolomorphicForm::constant(0, int(1), N);
    let mut out = Vec::new();
    for r in 0..=k / 2 {
        for a in 0..=k / 2 {
            let rest = k - 2 * r - 2 * a;
            if rest < 0 {
                continue;
            }
            for g in level1_basis(rest, N).into_iter().chain((rest == 0).then(|| one.clone())) {
                out.push(x.pow(r as u32).mul(&p.pow(a as u32)).mul(&g));
            }
        }
    }
    out
}

fn flatten(f: &NearlyHolomorphicForm, depth: usize) -> Vec<Rational> {
    (0..=depth).flat_map(|r| (0..=N).map(move |n| (r, n))).map(|(r, n)| f.coeff(r, n)).collect()
}

#[test]
fn quasimodular_closure() {
    let mut seeds = vec![e2_paper(N)];
    for k in [4, 6, 8, 10] {
        seeds.extend(level1_basis(k, N));
    }
    for f in seeds {
        for r in 1..=2 {
            let g = iterate_raise(&f, r).unwrap();
            let k = g.weight().unwrap();
            let basis = quasimodular_monomials(k);
            let depth = basis.iter().map(NearlyHolomorphicForm::depth).max().unwrap();
            let vectors: Vec<_> = basis.iter().map(|b| flatten(b, depth)).collect();
            assert!(solve_in_span(&vectors, &flatten(&g, depth)).is_some(), "weight {k}");
        }
    }
}
