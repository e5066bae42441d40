//! Decomposition of nearly holomorphic forms into iterated raisings of
//! holomorphic forms plus an iterated raising of `E₂`.
//!
//! Peeling works from the top `X`-column down. For holomorphic `g` of weight
//! `w`, the `X^ℓ`-column of `δ^{(ℓ)} g` is `c(w, ℓ)·g` with
//! `c(w, ℓ) = Π_{j<ℓ} -(w + j)`, so the top column of the input fixes the
//! holomorphic piece at that depth. A top column of weight 0 can only come
//! from `δ^{(m)} E₂`, whose `X^{m+1}`-column is the constant `12·(-1)^m m!`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::DecompositionError;
use crate::generators::{e2_paper, level1_basis};
use crate::linalg::solve_in_span;
use crate::operators::{iterate_raise, InfinitesimalCharacter};
use crate::series::{format_rational, int, parse_rational, FormFile, NearlyHolomorphicForm, Rational};

/// Source of holomorphic bases, one weight at a time.
///
/// Implementations must be pure: the same weight and truncation always give
/// the same list.
pub trait BasisProvider {
    /// A spanning set of the holomorphic forms of weight `weight`.
    fn basis(&self, weight: i64, truncation: usize) -> Vec<NearlyHolomorphicForm>;

    /// Number of q-coefficients (counting `q⁰`) past which two forms of this
    /// weight that agree are equal.
    fn sturm_bound(&self, weight: i64) -> usize;
}

/// `M_k(SL₂(ℤ))` through the monomials `E₄^a E₆^b`.
#[derive(Debug, Clone, Copy, Default)]
pub struct LevelOne;

impl BasisProvider for LevelOne {
    fn basis(&self, weight: i64, truncation: usize) -> Vec<NearlyHolomorphicForm> {
        level1_basis(weight, truncation)
    }

    fn sturm_bound(&self, weight: i64) -> usize {
        (weight.max(0) / 12) as usize + 1
    }
}

/// A basis provider built from a closure and a bound, for forms of higher
/// level.
pub struct FnProvider<F> {
    basis: F,
    bound: fn(i64) -> usize,
}

impl<F> FnProvider<F>
where
    F: Fn(i64, usize) -> Vec<NearlyHolomorphicForm>,
{
    pub fn new(basis: F, bound: fn(i64) -> usize) -> Self {
        FnProvider { basis, bound }
    }
}

impl<F> BasisProvider for FnProvider<F>
where
    F: Fn(i64, usize) -> Vec<NearlyHolomorphicForm>,
{
    fn basis(&self, weight: i64, truncation: usize) -> Vec<NearlyHolomorphicForm> {
        (self.basis)(weight, truncation)
    }

    fn sturm_bound(&self, weight: i64) -> usize {
        (self.bound)(weight)
    }
}

/// `δ^{(ℓ)} g` with `g` holomorphic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub ell: usize,
    pub g: NearlyHolomorphicForm,
}

/// `c · δ^{(m)} E₂`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct E2Term {
    pub m: usize,
    pub c: Rational,
}

/// `f = Σ δ^{(ℓ)} g_ℓ + c·δ^{(m)} E₂`, terms in decreasing `ℓ`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Decomposition {
    pub terms: Vec<Term>,
    pub e2: Option<E2Term>,
}

impl Decomposition {
    /// The holomorphic piece at depth `ell`, if any.
    pub fn term(&self, ell: usize) -> Option<&NearlyHolomorphicForm> {
        self.terms.iter().find(|t| t.ell == ell).map(|t| &t.g)
    }

    /// Rebuilds the form of weight `weight` at `truncation`.
    pub fn reassemble(&self, weight: i64, truncation: usize) -> Result<NearlyHolomorphicForm, DecompositionError> {
        let mut acc = NearlyHolomorphicForm::zero_of_weight(weight, truncation);
        for t in &self.terms {
            acc = acc.try_add(&iterate_raise(&t.g, t.ell)?)?;
        }
        if let Some(e) = &self.e2 {
            acc = acc.try_add(&iterate_raise(&e2_paper(truncation), e.m)?.scale(&e.c))?;
        }
        Ok(acc)
    }

    /// Groups the summands by infinitesimal character.
    pub fn character_split(
        &self,
        weight: i64,
        truncation: usize,
    ) -> Result<BTreeMap<Rational, NearlyHolomorphicForm>, DecompositionError> {
        let mut parts: BTreeMap<Rational, NearlyHolomorphicForm> = BTreeMap::new();
        let mut push = |lambda: Rational, f: NearlyHolomorphicForm| -> Result<(), DecompositionError> {
            let entry = parts
                .remove(&lambda)
                .unwrap_or_else(|| NearlyHolomorphicForm::zero_of_weight(weight, truncation));
            parts.insert(lambda, entry.try_add(&f)?);
            Ok(())
        };
        for t in &self.terms {
            let w = weight - 2 * t.ell as i64;
            let chi = InfinitesimalCharacter::new(int(w));
            push(chi.lambda().clone(), iterate_raise(&t.g, t.ell)?)?;
        }
        if let Some(e) = &self.e2 {
            push(int(2), iterate_raise(&e2_paper(truncation), e.m)?.scale(&e.c))?;
        }
        Ok(parts)
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(DecompositionFile::from(self)).expect("serializable")
    }

    pub fn from_json_value(value: &serde_json::Value) -> Result<Self, DecompositionError> {
        let file = DecompositionFile::deserialize(value)
            .map_err(|e| crate::error::SeriesError::Format(e.to_string()))?;
        file.try_into()
    }
}

/// Leading-column factor `c(w, ℓ) = Π_{j<ℓ} -(w + j)`.
pub fn leading_factor(w: i64, ell: usize) -> Rational {
    (0..ell as i64).fold(Rational::one(), |acc, j| acc * int(-(w + j)))
}

/// Top `X^{m+1}`-column constant of `δ^{(m)} E₂`.
pub fn e2_leading_factor(m: usize) -> Rational {
    int(12) * leading_factor(1, m)
}

/// Decomposes `f` over the holomorphic forms supplied by `provider`.
pub fn decompose<P: BasisProvider + ?Sized>(
    f: &NearlyHolomorphicForm,
    provider: &P,
) -> Result<Decomposition, DecompositionError> {
    let k = f.definite_weight()?;
    let trunc = f.truncation();
    let mut rest = f.clone();
    let mut out = Decomposition::default();
    while !rest.is_zero() {
        let p = rest.depth();
        let w = k - 2 * p as i64;
        let top = NearlyHolomorphicForm::from_q_coefficients(w, trunc, rest.column(p).expect("depth column"));
        let not_decomposable = |rest: &NearlyHolomorphicForm| DecompositionError::NotDecomposable {
            weight: k,
            depth: p,
            residual: Box::new(rest.clone()),
        };
        if p > 0 && w == 0 {
            if top.terms().any(|(_, n, _)| n != 0) {
                return Err(not_decomposable(&rest));
            }
            let m = p - 1;
            let c = top.coeff(0, 0) / e2_leading_factor(m);
            let piece = iterate_raise(&e2_paper(trunc), m)?.scale(&c);
            rest = rest.try_sub(&piece)?;
            out.e2 = Some(E2Term { m, c });
            continue;
        }
        if w < 0 {
            return Err(not_decomposable(&rest));
        }
        check_in_span(&top, w, provider).map_err(|e| match e {
            SpanCheck::Outside => not_decomposable(&rest),
            SpanCheck::Truncation(err) => err,
        })?;
        let g = if p == 0 { top } else { top.scale(&leading_factor(w, p).recip()) };
        rest = rest.try_sub(&iterate_raise(&g, p)?)?;
        out.terms.push(Term { ell: p, g });
    }
    Ok(out)
}

enum SpanCheck {
    Outside,
    Truncation(DecompositionError),
}

fn check_in_span<P: BasisProvider + ?Sized>(
    top: &NearlyHolomorphicForm,
    w: i64,
    provider: &P,
) -> Result<(), SpanCheck> {
    let trunc = top.truncation();
    let needed = provider.sturm_bound(w);
    if trunc + 1 < needed {
        return Err(SpanCheck::Truncation(DecompositionError::InsufficientTruncation {
            weight: w,
            needed,
            have: trunc + 1,
        }));
    }
    let zero_col = vec![Rational::zero(); trunc + 1];
    let basis: Vec<Vec<Rational>> = provider
        .basis(w, trunc)
        .iter()
        .map(|b| b.truncate(trunc).column(0).map_or_else(|| zero_col.clone(), <[_]>::to_vec))
        .collect();
    let target = top.column(0).map_or_else(|| zero_col.clone(), <[_]>::to_vec);
    match solve_in_span(&basis, &target) {
        Some(_) => Ok(()),
        None => Err(SpanCheck::Outside),
    }
}

/// `decompose` with the level-1 basis.
pub fn decompose_level1(f: &NearlyHolomorphicForm) -> Result<Decomposition, DecompositionError> {
    decompose(f, &LevelOne)
}

/// True iff `f` has no `X`-dependence.
pub fn is_holomorphic(f: &NearlyHolomorphicForm) -> bool {
    f.depth() == 0
}

#[derive(Serialize, Deserialize)]
struct TermFile {
    ell: usize,
    g: FormFile,
}

#[derive(Serialize, Deserialize)]
struct E2File {
    m: usize,
    c: String,
}

#[derive(Serialize, Deserialize)]
struct DecompositionFile {
    terms: Vec<TermFile>,
    e2: Option<E2File>,
}

impl From<&Decomposition> for DecompositionFile {
    fn from(d: &Decomposition) -> Self {
        DecompositionFile {
            terms: d.terms.iter().map(|t| TermFile { ell: t.ell, g: FormFile::from_form(&t.g) }).collect(),
            e2: d.e2.as_ref().map(|e| E2File { m: e.m, c: format_rational(&e.c) }),
        }
    }
}

impl TryFrom<DecompositionFile> for Decomposition {
    type Error = DecompositionError;
    fn try_from(file: DecompositionFile) -> Result<Self, Self::Error> {
        let terms = file
            .terms
            .into_iter()
            .map(|t| Ok(Term { ell: t.ell, g: t.g.to_form()? }))
            .collect::<Result<Vec<_>, DecompositionError>>()?;
        let e2 = match file.e2 {
            Some(e) => Some(E2Term {
                m: e.m,
                c: parse_rational(&e.c).map_err(|err| crate::error::SeriesError::Format(err.to_string()))?,
            }),
            None => None,
        };
        Ok(Decomposition { terms, e2 })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::eisenstein;
    use crate::operators::raise;

    #[test]
    fn e2_is_its_own_term() {
        let d = decompose_level1(&e2_paper(10)).unwrap();
        assert!(d.terms.is_empty());
        assert_eq!(d.e2, Some(E2Term { m: 0, c: int(1) }));
        assert_eq!(
            d.to_json_value(),
            serde_json::json!({"terms": [], "e2": {"m": 0, "c": "1"}})
        );
    }

    #[test]
    fn raised_e4_plus_e6() {
        let e4 = eisenstein(4, 10).unwrap();
        let e6 = eisenstein(6, 10).unwrap();
        let f = raise(&e4).unwrap().try_add(&e6).unwrap();
        let d = decompose_level1(&f).unwrap();
        assert_eq!(d.terms, vec![Term { ell: 1, g: e4 }, Term { ell: 0, g: e6 }]);
        assert_eq!(d.e2, None);
        assert_eq!(d.reassemble(6, 10).unwrap(), f);
    }

    #[test]
    fn holomorphic_is_single_term() {
        let e4 = eisenstein(4, 10).unwrap();
        let d = decompose_level1(&e4).unwrap();
        assert_eq!(d.terms, vec![Term { ell: 0, g: e4 }]);
    }

    #[test]
    fn constants_are_the_trivial_summand() {
        let one = NearlyHolomorphicForm::constant(0, int(3), 5);
        let d = decompose_level1(&one).unwrap();
        assert_eq!(d.terms, vec![Term { ell: 0, g: one }]);
    }

    #[test]
    fn raised_e2() {
        let f = iterate_raise(&e2_paper(8), 3).unwrap().scale(&int(5));
        let d = decompose_level1(&f).unwrap();
        assert!(d.terms.is_empty());
        assert_eq!(d.e2, Some(E2Term { m: 3, c: int(5) }));
    }

    #[test]
    fn leading_factors() {
        assert_eq!(leading_factor(4, 0), int(1));
        assert_eq!(leading_factor(4, 2), int(20));
        assert_eq!(leading_factor(0, 1), int(0));
        // brute force: the top column of δ^{(ℓ)} E₄
        let e4 = eisenstein(4, 3).unwrap();
        for ell in 0..5 {
            let g = iterate_raise(&e4, ell).unwrap();
            assert_eq!(g.depth(), ell);
            assert_eq!(g.column(ell).unwrap(), e4.scale(&leading_factor(4, ell)).column(0).unwrap());
        }
        let e2 = e2_paper(3);
        for m in 0..5 {
            assert_eq!(iterate_raise(&e2, m).unwrap().coeff(m + 1, 0), e2_leading_factor(m));
        }
    }

    #[test]
    fn outside_basis() {
        // the holomorphic part of E₂ alone is not modular
        let p = NearlyHolomorphicForm::from_q_coefficients(2, 6, e2_paper(6).column(0).unwrap());
        assert!(matches!(decompose_level1(&p), Err(DecompositionError::NotDecomposable { .. })));
        // q alone at weight 12 is not in M_12 (Sturm bound 2 at truncation 6)
        let q = NearlyHolomorphicForm::monomial(12, 0, 1, int(1), 6);
        assert!(matches!(decompose_level1(&q), Err(DecompositionError::NotDecomposable { .. })));
        // weight-0 top column with q-dependence
        let bad = NearlyHolomorphicForm::monomial(2, 1, 1, int(1), 6);
        assert!(matches!(decompose_level1(&bad), Err(DecompositionError::NotDecomposable { .. })));
    }

    #[test]
    fn insufficient_truncation() {
        let f = crate::generators::level1_basis(24, 1).remove(0);
        assert!(matches!(
            decompose_level1(&f),
            Err(DecompositionError::InsufficientTruncation { weight: 24, needed: 3, have: 2 })
        ));
    }

    #[test]
    fn is_holomorphic_examples() {
        let e4 = eisenstein(4, 5).unwrap();
        assert!(is_holomorphic(&e4));
        assert!(!is_holomorphic(&e2_paper(5)));
        assert!(!is_holomorphic(&raise(&e4).unwrap()));
    }

    #[test]
    fn json_round_trip() {
        let e4 = eisenstein(4, 4).unwrap();
        let f = raise(&e4).unwrap().try_add(&iterate_raise(&e2_paper(4), 2).unwrap()).unwrap();
        let d = decompose_level1(&f).unwrap();
        let back = Decomposition::from_json_value(&d.to_json_value()).unwrap();
        assert_eq!(back, d);
    }
}
