//! Concrete forms: Eisenstein series, the weight-2 series `E₂`, level-1
//! bases and theta series of binary forms.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::SeriesError;
use crate::series::{int, rational::bernoulli, NearlyHolomorphicForm, Rational};

/// `σ_e(n) = Σ_{d | n} d^e`.
pub fn divisor_sum(e: u32, n: u64) -> BigInt {
    let mut acc = BigInt::zero();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            acc += BigInt::from(d).pow(e);
            let other = n / d;
            if other != d {
                acc += BigInt::from(other).pow(e);
            }
        }
        d += 1;
    }
    acc
}

/// Holomorphic Eisenstein series `1 - (2k/B_k) Σ σ_{k-1}(n) q^n` of even
/// weight `k >= 4`.
pub fn eisenstein(k: i64, truncation: usize) -> Result<NearlyHolomorphicForm, GeneratorError> {
    if k < 4 || k % 2 != 0 {
        return Err(GeneratorError::BadWeight(k));
    }
    let factor = -int(2 * k) / bernoulli(k as usize);
    let mut coeffs = Vec::with_capacity(truncation + 1);
    coeffs.push(Rational::one());
    for n in 1..=truncation as u64 {
        coeffs.push(&factor * Rational::from_integer(divisor_sum((k - 1) as u32, n)));
    }
    Ok(NearlyHolomorphicForm::from_q_coefficients(k, truncation, &coeffs))
}

/// The weight-2 series `12X - 1 + 24 Σ σ₁(n) qⁿ`, i.e. `3/(πy) - 1 + 24 Σ σ₁(n) qⁿ`.
///
/// This is the negative of the usual completed `E₂*`.
pub fn e2_paper(truncation: usize) -> NearlyHolomorphicForm {
    let mut hol = Vec::with_capacity(truncation + 1);
    hol.push(int(-1));
    for n in 1..=truncation as u64 {
        hol.push(int(24) * Rational::from_integer(divisor_sum(1, n)));
    }
    let mut x_col = vec![Rational::zero(); truncation + 1];
    x_col[0] = int(12);
    NearlyHolomorphicForm::from_columns(2, truncation, vec![hol, x_col])
}

/// The completed series `P* = E₂ - 3/(πy)` in the classical sign.
pub fn e2_completed(truncation: usize) -> NearlyHolomorphicForm {
    -&e2_paper(truncation)
}

/// Exponents `(a, b)` with `4a + 6b = k`, ordered by decreasing `a`.
pub fn level1_exponents(k: i64) -> Vec<(u32, u32)> {
    if k < 0 || k % 2 != 0 {
        return Vec::new();
    }
    (0..=k / 6)
        .filter(|b| (k - 6 * b) % 4 == 0)
        .map(|b| (((k - 6 * b) / 4) as u32, b as u32))
        .collect()
}

/// The monomials `E₄^a E₆^b` spanning `M_k(SL₂(ℤ))`.
pub fn level1_basis(k: i64, truncation: usize) -> Vec<NearlyHolomorphicForm> {
    let exps = level1_exponents(k);
    if exps.is_empty() {
        return Vec::new();
    }
    let e4 = eisenstein(4, truncation).expect("weight 4");
    let e6 = eisenstein(6, truncation).expect("weight 6");
    exps.into_iter()
        .map(|(a, b)| e4.pow(a).mul(&e6.pow(b)).with_weight(k))
        .collect()
}

/// `Δ = (E₄³ - E₆²)/1728`.
pub fn delta(truncation: usize) -> NearlyHolomorphicForm {
    let e4 = eisenstein(4, truncation).expect("weight 4");
    let e6 = eisenstein(6, truncation).expect("weight 6");
    e4.pow(3)
        .try_sub(&e6.pow(2))
        .expect("same weight")
        .scale(&Rational::new(BigInt::one(), BigInt::from(1728)))
}

/// The binary quadratic form `a x² + b xy + c y²`, positive definite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BinaryForm {
    a: i64,
    b: i64,
    c: i64,
}

impl BinaryForm {
    pub fn new(a: i64, b: i64, c: i64) -> Result<Self, GeneratorError> {
        if a <= 0 || b * b - 4 * a * c >= 0 {
            return Err(GeneratorError::NotDefinite { a, b, c });
        }
        Ok(BinaryForm { a, b, c })
    }

    pub fn coefficients(&self) -> (i64, i64, i64) {
        (self.a, self.b, self.c)
    }

    pub fn discriminant(&self) -> i64 {
        self.b * self.b - 4 * self.a * self.c
    }

    pub fn eval(&self, x: i64, y: i64) -> i64 {
        self.a * x * x + self.b * x * y + self.c * y * y
    }

    /// Representation counts `r_Q(n)` for `0 <= n <= bound`.
    ///
    /// Enumerates the ellipse by rows: `4a·Q = (2ax + by)² + |D| y²`. Work is
    /// proportional to the number of lattice points, quadratic in the radius.
    pub fn representation_counts(&self, bound: usize) -> Vec<u64> {
        let mut counts = vec![0u64; bound + 1];
        let n = bound as i64;
        let disc = -self.discriminant();
        let y_max = isqrt(4 * self.a * n / disc);
        for y in -y_max..=y_max {
            let rest = 4 * self.a * n - disc * y * y;
            if rest < 0 {
                continue;
            }
            let s = isqrt(rest);
            // 2ax + by in [-s, s]
            let lo = div_ceil(-s - self.b * y, 2 * self.a);
            let hi = (s - self.b * y).div_euclid(2 * self.a);
            for x in lo..=hi {
                let v = self.eval(x, y);
                if (0..=n).contains(&v) {
                    counts[v as usize] += 1;
                }
            }
        }
        counts
    }
}

fn isqrt(n: i64) -> i64 {
    if n <= 0 {
        return 0;
    }
    let mut r = (n as f64).sqrt() as i64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

fn div_ceil(a: i64, b: i64) -> i64 {
    -((-a).div_euclid(b))
}

/// `Σ_{x,y ∈ ℤ} q^{Q(x,y)}`, weight 1, holomorphic.
pub fn theta_series(q: &BinaryForm, truncation: usize) -> NearlyHolomorphicForm {
    let coeffs: Vec<Rational> = q
        .representation_counts(truncation)
        .into_iter()
        .map(|c| Rational::from_integer(BigInt::from(c)))
        .collect();
    NearlyHolomorphicForm::from_q_coefficients(1, truncation, &coeffs)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeneratorError {
    #[error("Eisenstein series need even weight >= 4, got {0}")]
    BadWeight(i64),
    #[error("{a}x² + {b}xy + {c}y² is not positive definite")]
    NotDefinite { a: i64, b: i64, c: i64 },
    #[error(transparent)]
    Series(#[from] SeriesError),
}
