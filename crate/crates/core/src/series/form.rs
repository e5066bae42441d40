//! Truncated q-expansions whose coefficients are polynomials in
//! `X = 1/(4πy)`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Neg;

use num_traits::{One, Zero};

use super::rational::{format_rational, Rational};
use crate::error::SeriesError;

/// A nearly holomorphic form, `sum_{r,n} c(r,n) X^r q^n`, known for
/// `0 <= n <= truncation`.
///
/// Coefficients are stored densely by column: `columns[r][n]` is the
/// coefficient of `X^r q^n`. Trailing all-zero columns are trimmed, so
/// `columns.len()` is `depth + 1` for a nonzero form and `0` for zero.
///
/// Only a zero form may lack a weight; such a zero is compatible with any
/// weight under addition.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NearlyHolomorphicForm {
    weight: Option<i64>,
    truncation: usize,
    columns: Vec<Vec<Rational>>,
}

impl NearlyHolomorphicForm {
    /// The weightless zero form.
    pub fn zero(truncation: usize) -> Self {
        NearlyHolomorphicForm { weight: None, truncation, columns: Vec::new() }
    }

    /// The zero form of a definite weight.
    pub fn zero_of_weight(weight: i64, truncation: usize) -> Self {
        NearlyHolomorphicForm { weight: Some(weight), truncation, columns: Vec::new() }
    }

    /// `c` as a weight-`weight` constant.
    pub fn constant(weight: i64, c: Rational, truncation: usize) -> Self {
        Self::monomial(weight, 0, 0, c, truncation)
    }

    /// `c X^r q^n`. A monomial beyond the truncation is zero.
    pub fn monomial(weight: i64, r: usize, n: usize, c: Rational, truncation: usize) -> Self {
        let mut f = Self::zero_of_weight(weight, truncation);
        if n <= truncation {
            f.add_to(r, n, &c);
        }
        f.trim();
        f
    }

    /// Builds a holomorphic form from its q-coefficients `0..=truncation`.
    /// Missing coefficients are zero; extra ones are dropped.
    pub fn from_q_coefficients(weight: i64, truncation: usize, coeffs: &[Rational]) -> Self {
        Self::from_columns(weight, truncation, vec![coeffs.to_vec()])
    }

    /// Builds a form from dense columns (`columns[r][n]`).
    pub fn from_columns(weight: i64, truncation: usize, columns: Vec<Vec<Rational>>) -> Self {
        let columns = columns
            .into_iter()
            .map(|mut c| {
                c.resize(truncation + 1, Rational::zero());
                c
            })
            .collect();
        let mut f = NearlyHolomorphicForm { weight: Some(weight), truncation, columns };
        f.trim();
        f
    }

    /// Builds a form from sparse `(r, n, c)` terms; repeated keys accumulate.
    pub fn from_terms<I>(weight: Option<i64>, truncation: usize, terms: I) -> Result<Self, SeriesError>
    where
        I: IntoIterator<Item = (usize, usize, Rational)>,
    {
        let mut f = NearlyHolomorphicForm { weight, truncation, columns: Vec::new() };
        for (r, n, c) in terms {
            if n > truncation {
                return Err(SeriesError::BeyondTruncation { n, truncation });
            }
            f.add_to(r, n, &c);
        }
        f.trim();
        if weight.is_none() && !f.is_zero() {
            return Err(SeriesError::MissingWeight);
        }
        Ok(f)
    }

    pub fn weight(&self) -> Option<i64> {
        self.weight
    }

    /// Weight of a form that is required to have one.
    pub fn definite_weight(&self) -> Result<i64, SeriesError> {
        self.weight.ok_or(SeriesError::MissingWeight)
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    /// Highest power of `X` with a nonzero coefficient; `0` for zero.
    pub fn depth(&self) -> usize {
        self.columns.len().saturating_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.columns.is_empty()
    }

    pub fn is_holomorphic(&self) -> bool {
        self.columns.len() <= 1
    }

    pub fn coeff(&self, r: usize, n: usize) -> Rational {
        self.columns
            .get(r)
            .and_then(|c| c.get(n))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// The `X^r` column as q-coefficients `0..=truncation`, if present.
    pub fn column(&self, r: usize) -> Option<&[Rational]> {
        self.columns.get(r).map(Vec::as_slice)
    }

    pub fn columns(&self) -> &[Vec<Rational>] {
        &self.columns
    }

    /// Nonzero terms `(r, n, c)` in lexicographic `(r, n)` order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.columns.iter().enumerate().flat_map(|(r, col)| {
            col.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(n, c)| (r, n, c))
        })
    }

    /// Relabels the weight without touching coefficients.
    pub fn with_weight(mut self, weight: i64) -> Self {
        self.weight = Some(weight);
        self
    }

    /// Drops every coefficient with `n > truncation`. Truncating upwards is
    /// a no-op: nothing is ever extrapolated.
    pub fn truncate(&self, truncation: usize) -> Self {
        if truncation >= self.truncation {
            return self.clone();
        }
        let columns = self.columns.iter().map(|c| c[..=truncation].to_vec()).collect();
        let mut f = NearlyHolomorphicForm { weight: self.weight, truncation, columns };
        f.trim();
        f
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return NearlyHolomorphicForm { columns: Vec::new(), ..self.clone() };
        }
        let columns = self.columns.iter().map(|col| col.iter().map(|x| x * c).collect()).collect();
        NearlyHolomorphicForm { weight: self.weight, truncation: self.truncation, columns }
    }

    fn graded_weight(&self, other: &Self) -> Result<Option<i64>, SeriesError> {
        match (self.weight, other.weight) {
            (Some(a), Some(b)) if a != b => {
                if self.is_zero() {
                    Ok(Some(b))
                } else if other.is_zero() {
                    Ok(Some(a))
                } else {
                    Err(SeriesError::WeightMismatch { left: a, right: b })
                }
            }
            (a, b) => Ok(a.or(b)),
        }
    }

    /// Graded sum. Truncation is the min of the operands.
    pub fn try_add(&self, other: &Self) -> Result<Self, SeriesError> {
        let weight = self.graded_weight(other)?;
        let truncation = self.truncation.min(other.truncation);
        let depth = self.columns.len().max(other.columns.len());
        let mut columns = vec![vec![Rational::zero(); truncation + 1]; depth];
        for src in [&self.columns, &other.columns] {
            for (col, dst) in src.iter().zip(columns.iter_mut()) {
                for (d, s) in dst.iter_mut().zip(col.iter()) {
                    *d += s;
                }
            }
        }
        let mut f = NearlyHolomorphicForm { weight, truncation, columns };
        f.trim();
        Ok(f)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.try_add(&-other)
    }

    /// Product: Cauchy product in `q`, polynomial product in `X`.
    pub fn mul(&self, other: &Self) -> Self {
        let truncation = self.truncation.min(other.truncation);
        let weight = match (self.weight, other.weight) {
            (Some(a), Some(b)) => Some(a + b),
            _ => None,
        };
        if self.is_zero() || other.is_zero() {
            return NearlyHolomorphicForm { weight, truncation, columns: Vec::new() };
        }
        let depth = self.columns.len() + other.columns.len() - 1;
        let mut columns = vec![vec![Rational::zero(); truncation + 1]; depth];
        for (r1, a) in self.columns.iter().enumerate() {
            for (r2, b) in other.columns.iter().enumerate() {
                let dst = &mut columns[r1 + r2];
                for (i, ai) in a.iter().take(truncation + 1).enumerate() {
                    if ai.is_zero() {
                        continue;
                    }
                    for (j, bj) in b.iter().take(truncation + 1 - i).enumerate() {
                        if !bj.is_zero() {
                            dst[i + j] += ai * bj;
                        }
                    }
                }
            }
        }
        let mut f = NearlyHolomorphicForm { weight, truncation, columns };
        f.trim();
        f
    }

    /// `self^e`; `self^0` is the weight-0 constant `1`.
    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(0, Rational::one(), self.truncation);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    fn add_to(&mut self, r: usize, n: usize, c: &Rational) {
        if c.is_zero() {
            return;
        }
        while self.columns.len() <= r {
            self.columns.push(vec![Rational::zero(); self.truncation + 1]);
        }
        self.columns[r][n] += c;
    }

    fn trim(&mut self) {
        while self.columns.last().is_some_and(|c| c.iter().all(Zero::is_zero)) {
            self.columns.pop();
        }
    }
}

impl<'a> Neg for &'a NearlyHolomorphicForm {
    type Output = NearlyHolomorphicForm;
    fn neg(self) -> NearlyHolomorphicForm {
        self.scale(&-Rational::one())
    }
}

impl fmt::Debug for NearlyHolomorphicForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: BTreeMap<(usize, usize), String> =
            self.terms().map(|(r, n, c)| ((r, n), format_rational(c))).collect();
        f.debug_struct("NearlyHolomorphicForm")
            .field("weight", &self.weight)
            .field("truncation", &self.truncation)
            .field("terms", &terms)
            .finish()
    }
}

impl fmt::Display for NearlyHolomorphicForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (r, n, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}", format_rational(c))?;
            match r {
                0 => {}
                1 => write!(f, "·X")?,
                _ => write!(f, "·X^{r}")?,
            }
            match n {
                0 => {}
                1 => write!(f, "·q")?,
                _ => write!(f, "·q^{n}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.truncation + 1)
    }
}

/// A formal sum of forms of several weights, kept split by weight.
///
/// The operator layer only acts on single-weight forms; this type is the
/// place where ungraded sums live until they are split.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GradedSum {
    parts: BTreeMap<i64, NearlyHolomorphicForm>,
}

impl GradedSum {
    pub fn new() -> Self {
        GradedSum::default()
    }

    pub fn push(&mut self, f: NearlyHolomorphicForm) -> Result<(), SeriesError> {
        if f.is_zero() {
            return Ok(());
        }
        let k = f.definite_weight()?;
        let sum = match self.parts.remove(&k) {
            Some(prev) => prev.try_add(&f)?,
            None => f,
        };
        if !sum.is_zero() {
            self.parts.insert(k, sum);
        }
        Ok(())
    }

    /// Weight-homogeneous components in increasing weight order.
    pub fn split(&self) -> impl Iterator<Item = (i64, &NearlyHolomorphicForm)> {
        self.parts.iter().map(|(k, f)| (*k, f))
    }

    pub fn into_single(mut self) -> Option<NearlyHolomorphicForm> {
        if self.parts.len() == 1 {
            self.parts.pop_first().map(|(_, f)| f)
        } else {
            None
        }
    }
}
