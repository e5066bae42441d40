#![allow(dead_code)]

use nearholo::generators::{e2_paper, level1_basis};
use nearholo::operators::iterate_raise;
use nearholo::series::{frac, int, NearlyHolomorphicForm, Rational};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

pub fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    frac(rng.gen_range(-9..=9), rng.gen_range(1..=5))
}

/// A dense random form of the given shape.
pub fn random_form(rng: &mut ChaCha8Rng, weight: i64, depth: usize, truncation: usize) -> NearlyHolomorphicForm {
    let columns = (0..=depth)
        .map(|_| (0..=truncation).map(|_| small_rational(rng)).collect())
        .collect();
    NearlyHolomorphicForm::from_columns(weight, truncation, columns)
}

/// A random element of the level-one nearly holomorphic space of weight `k`
/// with depth at most `max_depth`, built from its structure-theorem pieces.
pub fn random_level1(rng: &mut ChaCha8Rng, k: i64, max_depth: usize, truncation: usize) -> NearlyHolomorphicForm {
    let mut f = NearlyHolomorphicForm::zero_of_weight(k, truncation);
    for ell in 0..=max_depth {
        let w = k - 2 * ell as i64;
        if w < 4 {
            continue;
        }
        for g in level1_basis(w, truncation) {
            if rng.gen_bool(0.7) {
                let piece = iterate_raise(&g, ell).unwrap().scale(&small_rational(rng));
                f = f.try_add(&piece).unwrap();
            }
        }
    }
    let m = (k / 2 - 1) as usize;
    if k >= 2 && m < max_depth && rng.gen_bool(0.5) {
        let e2 = iterate_raise(&e2_paper(truncation), m).unwrap().scale(&small_rational(rng));
        f = f.try_add(&e2).unwrap();
    }
    f
}

/// Holomorphic and raised level-one forms, E₂ and its raisings, constants.
pub fn operator_suite(truncation: usize) -> Vec<NearlyHolomorphicForm> {
    let mut seeds = vec![e2_paper(truncation), NearlyHolomorphicForm::constant(0, int(1), truncation)];
    for k in (4..=16).step_by(2) {
        seeds.extend(level1_basis(k, truncation));
    }
    let mut out = seeds.clone();
    for f in &seeds {
        for r in 1..=3 {
            let g = iterate_raise(f, r).unwrap();
            if !g.is_zero() {
                out.push(g);
            }
        }
    }
    out
}

/// `(a, b)_p` by searching for a primitive solution of `ax² + by² = z²`
/// modulo `p^k`, with `k` large enough for Hensel lifting.
pub fn hilbert_oracle(a: i64, b: i64, p: i64) -> i8 {
    let strip = |mut x: i64| {
        while x % (p * p) == 0 {
            x /= p * p;
        }
        x
    };
    let (a, b) = (strip(a), strip(b));
    let v = (a % p == 0 || b % p == 0) as u32;
    let k = if p == 2 { 2 * v + 3 } else { 2 * v + 1 };
    let m = p.pow(k);
    // squares[t] = (has a unit root, has a non-unit root)
    let mut squares = vec![(false, false); m as usize];
    for z in 0..m {
        let t = (z * z % m) as usize;
        if z % p == 0 {
            squares[t].1 = true;
        } else {
            squares[t].0 = true;
        }
    }
    let (a, b) = (a.rem_euclid(m), b.rem_euclid(m));
    for x in 0..m {
        for y in 0..m {
            let t = ((a * x % m * x + b * y % m * y) % m) as usize;
            let primitive_xy = x % p != 0 || y % p != 0;
            if squares[t].0 || (primitive_xy && squares[t].1) {
                return 1;
            }
        }
    }
    -1
}
