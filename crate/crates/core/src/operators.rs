//! The sl₂ action on nearly holomorphic forms.
//!
//! Everything is computed in the rational normalization
//!
//! ```text
//! δ_k(X^r q^n) = n X^r q^n + (r - k) X^{r+1} q^n      (weight k -> k + 2)
//! Λ(X^r q^n)   = r X^{r-1} q^n                         (weight k -> k - 2)
//! ```
//!
//! with `X = 1/(4πy)`. The classical operators are `R_k = -4π·δ_k` and
//! `L_k = -(1/(4π))·Λ`; [`raise_classical`] and [`lower_classical`] return
//! those as a [`ScaledForm`].

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::OperatorError;
use crate::series::{int, rational::rational_sqrt, HalfInt, NearlyHolomorphicForm, PiScalar, Rational};

/// `χ_λ`, stored by the representative `λ >= 1` of the orbit `{λ, 2 - λ}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct InfinitesimalCharacter {
    #[serde(serialize_with = "crate::serde_rational")]
    lambda: Rational,
    integral: bool,
}

impl InfinitesimalCharacter {
    /// The character `χ_λ`; `λ` and `2 - λ` give the same value.
    pub fn new(lambda: Rational) -> Self {
        let other = int(2) - &lambda;
        let lambda = if other > lambda { other } else { lambda };
        let integral = lambda.is_integer();
        InfinitesimalCharacter { lambda, integral }
    }

    pub fn lambda(&self) -> &Rational {
        &self.lambda
    }

    pub fn is_integral(&self) -> bool {
        self.integral
    }

    /// The Casimir eigenvalue `λ² - 2λ`.
    pub fn casimir_eigenvalue(&self) -> Rational {
        &self.lambda * &self.lambda - int(2) * &self.lambda
    }
}

/// A form multiplied by an exact π-graded scalar.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScaledForm {
    pub scalar: PiScalar,
    pub form: NearlyHolomorphicForm,
}

impl ScaledForm {
    /// The value as a scalar, when the form is a constant.
    pub fn as_constant(&self) -> Option<PiScalar> {
        if self.form.is_zero() {
            return Some(PiScalar::zero());
        }
        if self.form.terms().count() == 1 {
            let (r, n, c) = self.form.terms().next()?;
            if r == 0 && n == 0 {
                return Some(self.scalar.scale(c));
            }
        }
        None
    }
}

/// `δ_k f`.
pub fn raise(f: &NearlyHolomorphicForm) -> Result<NearlyHolomorphicForm, OperatorError> {
    let k = f.definite_weight()?;
    let trunc = f.truncation();
    let mut cols = vec![vec![Rational::zero(); trunc + 1]; f.columns().len() + 1];
    for (r, col) in f.columns().iter().enumerate() {
        let shift = int(r as i64 - k);
        for (n, c) in col.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if n != 0 {
                cols[r][n] += c * int(n as i64);
            }
            if !shift.is_zero() {
                cols[r + 1][n] += c * &shift;
            }
        }
    }
    Ok(NearlyHolomorphicForm::from_columns(k + 2, trunc, cols))
}

/// `Λ f`.
pub fn lower(f: &NearlyHolomorphicForm) -> Result<NearlyHolomorphicForm, OperatorError> {
    let k = f.definite_weight()?;
    let cols = f
        .columns()
        .iter()
        .enumerate()
        .skip(1)
        .map(|(r, col)| {
            let r = int(r as i64);
            col.iter().map(|c| c * &r).collect()
        })
        .collect();
    Ok(NearlyHolomorphicForm::from_columns(k - 2, f.truncation(), cols))
}

/// `δ^{(ℓ)} f = δ_{k+2ℓ-2} ∘ ... ∘ δ_k f`; `ℓ = 0` is the identity.
pub fn iterate_raise(f: &NearlyHolomorphicForm, ell: usize) -> Result<NearlyHolomorphicForm, OperatorError> {
    f.definite_weight()?;
    let mut g = f.clone();
    for _ in 0..ell {
        g = raise(&g)?;
    }
    Ok(g)
}

/// `Λ^ℓ f`.
pub fn iterate_lower(f: &NearlyHolomorphicForm, ell: usize) -> Result<NearlyHolomorphicForm, OperatorError> {
    f.definite_weight()?;
    let mut g = f.clone();
    for _ in 0..ell {
        g = lower(&g)?;
    }
    Ok(g)
}

/// `(k² - 2k) f + 4 δ_{k-2}(Λ f)`.
///
/// A holomorphic form of weight `λ` has eigenvalue `λ² - 2λ`.
pub fn casimir(f: &NearlyHolomorphicForm) -> Result<NearlyHolomorphicForm, OperatorError> {
    let k = f.definite_weight()?;
    let diag = f.scale(&int(k * k - 2 * k));
    let inner = raise(&lower(f)?)?.scale(&int(4));
    Ok(diag.try_add(&inner)?)
}

/// Classical `R_k f = -4π δ_k f`.
pub fn raise_classical(f: &NearlyHolomorphicForm) -> Result<ScaledForm, OperatorError> {
    Ok(ScaledForm { scalar: PiScalar::pi().scale(&int(-4)), form: raise(f)? })
}

/// Classical `L_k f = -(1/(4π)) Λ f`.
pub fn lower_classical(f: &NearlyHolomorphicForm) -> Result<ScaledForm, OperatorError> {
    let scalar = PiScalar::pi_pow(HalfInt::from_int(-1)).scale(&crate::series::frac(-1, 4));
    Ok(ScaledForm { scalar, form: lower(f)? })
}

/// The Casimir eigenvalue of `f`, if `f` is an eigenvector.
pub fn casimir_eigenvalue(f: &NearlyHolomorphicForm) -> Result<Rational, OperatorError> {
    let (r, n, c) = f.terms().next().ok_or(OperatorError::ZeroForm)?;
    let cf = casimir(f)?;
    let eigenvalue = cf.coeff(r, n) / c;
    let residual = cf.try_sub(&f.scale(&eigenvalue))?;
    if residual.is_zero() {
        Ok(eigenvalue)
    } else {
        Err(OperatorError::NotEigenform { residual: Box::new(residual) })
    }
}

/// Solves `λ² - 2λ = eigenvalue` for the Casimir eigenvalue of `f`.
pub fn infinitesimal_character(f: &NearlyHolomorphicForm) -> Result<InfinitesimalCharacter, OperatorError> {
    let eigenvalue = casimir_eigenvalue(f)?;
    let disc = &eigenvalue + Rational::one();
    let root = rational_sqrt(&disc).ok_or(OperatorError::IrrationalCharacter { eigenvalue })?;
    Ok(InfinitesimalCharacter::new(Rational::one() + root))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{e2_paper, eisenstein};

    fn mono(k: i64, r: usize, n: usize) -> NearlyHolomorphicForm {
        NearlyHolomorphicForm::monomial(k, r, n, int(1), 5)
    }

    #[test]
    fn raise_constant_weight_zero() {
        let one = NearlyHolomorphicForm::constant(0, int(1), 5);
        let g = raise(&one).unwrap();
        assert!(g.is_zero());
        assert_eq!(g.weight(), Some(2));
    }

    #[test]
    fn raise_q_weight_two() {
        // q - 2Xq
        let g = raise(&mono(2, 0, 1)).unwrap();
        let terms: Vec<_> = g.terms().map(|(r, n, c)| (r, n, c.clone())).collect();
        assert_eq!(terms, vec![(0, 1, int(1)), (1, 1, int(-2))]);
    }

    #[test]
    fn raise_e2_top_column() {
        let g = raise(&e2_paper(4)).unwrap();
        assert_eq!(g.depth(), 2);
        assert_eq!(g.coeff(2, 0), int(-12));
        for n in 1..=4 {
            assert_eq!(g.coeff(2, n), int(0));
        }
    }

    #[test]
    fn lower_examples() {
        assert!(lower(&eisenstein(4, 5).unwrap()).unwrap().is_zero());
        let g = lower(&mono(4, 2, 3)).unwrap();
        assert_eq!(g.terms().map(|(r, n, c)| (r, n, c.clone())).collect::<Vec<_>>(), vec![(1, 3, int(2))]);
        let e2 = lower(&e2_paper(6)).unwrap();
        assert_eq!(e2, NearlyHolomorphicForm::constant(0, int(12), 6));
    }

    #[test]
    fn classical_lowering_of_e2() {
        let v = lower_classical(&e2_paper(6)).unwrap().as_constant().unwrap();
        assert_eq!(v, PiScalar::pi_pow(HalfInt::from_int(-1)).scale(&int(-3)));
    }

    #[test]
    fn casimir_examples() {
        let e4 = eisenstein(4, 6).unwrap();
        assert_eq!(casimir(&e4).unwrap(), e4.scale(&int(8)));
        assert!(casimir(&e2_paper(6)).unwrap().is_zero());
        let de4 = raise(&e4).unwrap();
        assert_eq!(casimir(&de4).unwrap(), de4.scale(&int(8)));
    }

    #[test]
    fn characters() {
        assert_eq!(infinitesimal_character(&eisenstein(4, 6).unwrap()).unwrap().lambda(), &int(4));
        let e2 = infinitesimal_character(&e2_paper(6)).unwrap();
        assert_eq!(e2.lambda(), &int(2));
        assert!(e2.is_integral());
        assert_eq!(InfinitesimalCharacter::new(int(-3)), InfinitesimalCharacter::new(int(5)));
    }

    #[test]
    fn non_eigenform() {
        let f = eisenstein(4, 6).unwrap().try_add(&raise(&e2_paper(6)).unwrap()).unwrap();
        assert!(matches!(infinitesimal_character(&f), Err(OperatorError::NotEigenform { .. })));
        assert!(matches!(
            infinitesimal_character(&NearlyHolomorphicForm::zero_of_weight(4, 3)),
            Err(OperatorError::ZeroForm)
        ));
    }

    #[test]
    fn constant_columns_are_eigenvectors() {
        // X^r at weight k has eigenvalue k² - 2k + 4r(r + 1 - k) = (k - 1 - 2r)² - 1
        for k in 0..12i64 {
            for r in 0..4usize {
                let x = NearlyHolomorphicForm::monomial(k, r, 0, int(1), 2);
                let expected = InfinitesimalCharacter::new(int(k - 2 * r as i64));
                assert_eq!(infinitesimal_character(&x).unwrap(), expected, "k={k} r={r}");
            }
        }
    }
}
