//! Leading-term Laurent data for the constant term of Eisenstein series at
//! the special points `s₀ = k - 1`.
//!
//! The intertwined term of the constant term at `g = 1` factors as
//!
//! ```text
//! ξ(s, ℓ) · L^S(s, μ)/L^S(s+1, μ) · Π_{v ∈ S finite} M_{s,v}Φ_{s,v}(1)
//! ξ(s, ℓ) = (π (-i)^ℓ 2^{1-s} Γ(s) / (Γ(α) Γ(β)))^d,  α = (s+1+ℓ)/2,  β = (s+1-ℓ)/2
//! ```
//!
//! Only the order at `s₀` and the first nonzero Laurent coefficient of each
//! factor are tracked. A coefficient that is not a finite `π`-graded
//! Gaussian rational (odd zeta values, `log q`) is left uncertified while
//! its order still is.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::LaurentError;
use crate::series::{factorial, frac, int, Gaussian, HalfInt, PiScalar, Rational};

/// Order of vanishing at a point; `Infinite` is the zero function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Order {
    Finite(i64),
    Infinite,
}

impl Order {
    pub fn finite(self) -> Option<i64> {
        match self {
            Order::Finite(n) => Some(n),
            Order::Infinite => None,
        }
    }

    /// True when the function vanishes at the point (including identically).
    pub fn vanishes(self) -> bool {
        match self {
            Order::Finite(n) => n >= 1,
            Order::Infinite => true,
        }
    }
}

impl std::ops::Add for Order {
    type Output = Order;
    fn add(self, rhs: Order) -> Order {
        match (self, rhs) {
            (Order::Finite(a), Order::Finite(b)) => Order::Finite(a + b),
            _ => Order::Infinite,
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(n) => write!(f, "{n}"),
            Order::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for Order {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Order::Finite(n) => s.serialize_i64(*n),
            Order::Infinite => s.serialize_str("inf"),
        }
    }
}

/// `leading · (s - point)^order + ...`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentScalar {
    point: Rational,
    order: Order,
    /// `None` when only the order is certified.
    leading: Option<PiScalar>,
}

impl LaurentScalar {
    /// An exact germ. A zero leading coefficient is rejected.
    pub fn new(point: Rational, order: i64, leading: PiScalar) -> Result<Self, LaurentError> {
        if leading.is_zero() {
            return Err(LaurentError::InvalidArgument("leading coefficient must be nonzero".into()));
        }
        Ok(LaurentScalar { point, order: Order::Finite(order), leading: Some(leading) })
    }

    /// A germ whose order is certified but whose leading coefficient is not.
    pub fn order_only(point: Rational, order: i64) -> Self {
        LaurentScalar { point, order: Order::Finite(order), leading: None }
    }

    pub fn zero(point: Rational) -> Self {
        LaurentScalar { point, order: Order::Infinite, leading: Some(PiScalar::zero()) }
    }

    /// The nonzero constant `c`.
    pub fn constant(point: Rational, c: PiScalar) -> Result<Self, LaurentError> {
        Self::new(point, 0, c)
    }

    pub fn point(&self) -> &Rational {
        &self.point
    }

    pub fn order(&self) -> Order {
        self.order
    }

    pub fn leading(&self) -> Option<&PiScalar> {
        self.leading.as_ref()
    }

    pub fn is_exact(&self) -> bool {
        self.leading.is_some()
    }

    /// Product of germs at the same point.
    pub fn try_mul(&self, other: &LaurentScalar) -> Result<LaurentScalar, LaurentError> {
        if self.point != other.point {
            return Err(LaurentError::InvalidArgument(format!(
                "germs at different points {} and {}",
                self.point, other.point
            )));
        }
        if self.order == Order::Infinite || other.order == Order::Infinite {
            return Ok(LaurentScalar::zero(self.point.clone()));
        }
        let leading = match (&self.leading, &other.leading) {
            (Some(a), Some(b)) => Some(a * b),
            _ => None,
        };
        Ok(LaurentScalar { point: self.point.clone(), order: self.order + other.order, leading })
    }

    /// Reciprocal germ. Only monomial leading coefficients can be inverted
    /// in the `π`-graded ring.
    pub fn recip(&self) -> Result<LaurentScalar, LaurentError> {
        let Order::Finite(n) = self.order else {
            return Err(LaurentError::InvalidArgument("reciprocal of the zero function".into()));
        };
        let leading = match &self.leading {
            Some(c) => Some(c.inv().ok_or_else(|| {
                LaurentError::InsufficientPrecision(format!("cannot invert leading coefficient {c}"))
            })?),
            None => None,
        };
        Ok(LaurentScalar { point: self.point.clone(), order: Order::Finite(-n), leading })
    }

    pub fn pow(&self, d: u32) -> LaurentScalar {
        let mut acc = LaurentScalar { point: self.point.clone(), order: Order::Finite(0), leading: Some(PiScalar::one()) };
        for _ in 0..d {
            acc = acc.try_mul(self).expect("same point");
        }
        acc
    }

    /// Re-expresses a germ `g(x)` at `x₀` as the germ of `s ↦ g(x₀ + t(s - s₀))`
    /// at `s₀`.
    pub fn compose_affine(&self, s0: Rational, t: &Rational) -> LaurentScalar {
        let leading = match (self.order, &self.leading) {
            (Order::Finite(n), Some(c)) => {
                let factor = pow_i(t, n);
                Some(c.scale(&factor))
            }
            (_, l) => l.clone(),
        };
        LaurentScalar { point: s0, order: self.order, leading }
    }
}

impl Mul for &LaurentScalar {
    type Output = Result<LaurentScalar, LaurentError>;
    fn mul(self, rhs: &LaurentScalar) -> Self::Output {
        self.try_mul(rhs)
    }
}

fn pow_i(t: &Rational, n: i64) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..n.unsigned_abs() {
        acc *= t;
    }
    if n < 0 {
        acc.recip()
    } else {
        acc
    }
}

/// Germ of `Γ` at a half-integer.
pub fn gamma_laurent(s0: &Rational) -> Result<LaurentScalar, LaurentError> {
    let half = HalfInt::from_rational(s0).ok_or_else(|| LaurentError::OutOfDomain(format!("Γ at {s0}")))?;
    if half.is_integer() {
        let n = half.twice() / 2;
        if n <= 0 {
            let m = n.unsigned_abs();
            let sign = if m % 2 == 0 { int(1) } else { int(-1) };
            return LaurentScalar::new(s0.clone(), -1, PiScalar::rational(sign / factorial(m)));
        }
        return LaurentScalar::new(s0.clone(), 0, PiScalar::rational(factorial(n as u64 - 1)));
    }
    // s0 = n + 1/2
    let n = (half.twice() - 1) / 2;
    let value = if n >= 0 {
        let n = n as u64;
        let four_n = Rational::from_integer(BigInt::from(4u32).pow(n as u32));
        factorial(2 * n) / (four_n * factorial(n))
    } else {
        // Γ(x) = Γ(x + 1)/x, downwards from Γ(1/2)
        let mut v = Rational::one();
        let mut x = frac(1, 2);
        for _ in 0..n.unsigned_abs() {
            x -= Rational::one();
            v /= &x;
        }
        v
    };
    LaurentScalar::new(s0.clone(), 0, PiScalar::sqrt_pi().scale(&value))
}

/// Global character families that can appear in a constant term.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CharacterTag {
    /// `μ = 1`; archimedean components trivial.
    Trivial,
    /// Some `μ` with `μ_v = sgn` at every real place (necessarily `μ ≠ 1`).
    Sgn,
    /// A nontrivial quadratic character of the parity forced by the weight.
    Quadratic,
    /// A non-quadratic character of the parity forced by the weight.
    Other,
}

impl CharacterTag {
    pub fn is_trivial(self) -> bool {
        self == CharacterTag::Trivial
    }

    /// Archimedean parity if the tag fixes one: `+1` for trivial, `-1` for `sgn`.
    pub fn parity(self) -> Option<i8> {
        match self {
            CharacterTag::Trivial => Some(1),
            CharacterTag::Sgn => Some(-1),
            _ => None,
        }
    }

    /// The natural family for weight `k`: trivial when `k` is even, `sgn` when odd.
    pub fn default_for_weight(k: i64) -> Self {
        if k % 2 == 0 {
            CharacterTag::Trivial
        } else {
            CharacterTag::Sgn
        }
    }
}

impl fmt::Display for CharacterTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CharacterTag::Trivial => "trivial",
            CharacterTag::Sgn => "sgn",
            CharacterTag::Quadratic => "quadratic",
            CharacterTag::Other => "other",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for CharacterTag {
    type Err = LaurentError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "trivial" => Ok(CharacterTag::Trivial),
            "sgn" => Ok(CharacterTag::Sgn),
            "quadratic" => Ok(CharacterTag::Quadratic),
            "other" => Ok(CharacterTag::Other),
            _ => Err(LaurentError::InvalidArgument(format!("unknown character family {s:?}"))),
        }
    }
}

/// Germ of `L^S(s, μ)/L^S(s + 1, μ)` at `s₀`.
///
/// Built in: the Riemann zeta ratio over ℚ (pole with leading `1/ζ(2) = 6/π²`
/// at `s₀ = 1`, order 0 at integers `s₀ >= 2`), the order of the Dedekind
/// zeta ratio when `d > 1`, and order 0 for nontrivial families at integers
/// `s₀ >= 1`, where `L(s, μ)` is finite and nonzero, and for `sgn` at
/// `s₀ = 0`, where the functional equation keeps `L(0, μ)` nonzero. Anything
/// else needs `ramified_l_data`.
pub fn zeta_ratio_laurent(
    s0: &Rational,
    d: u32,
    character: CharacterTag,
    ramified_l_data: Option<&LaurentScalar>,
) -> Result<LaurentScalar, LaurentError> {
    if let Some(data) = ramified_l_data {
        if data.point() != s0 {
            return Err(LaurentError::InvalidArgument(format!("L-data given at {} for s0 = {s0}", data.point())));
        }
        return Ok(data.clone());
    }
    if d == 0 {
        return Err(LaurentError::InvalidArgument("degree must be >= 1".into()));
    }
    let needs = || LaurentError::NeedsLData { point: s0.clone(), character: character.to_string() };
    if s0.is_zero() && character == CharacterTag::Sgn {
        return Ok(LaurentScalar::order_only(s0.clone(), 0));
    }
    if !s0.is_integer() || s0 < &int(1) {
        return Err(needs());
    }
    let at_one = s0.is_one();
    if !character.is_trivial() {
        return Ok(LaurentScalar::order_only(s0.clone(), 0));
    }
    match (at_one, d) {
        (true, 1) => LaurentScalar::new(s0.clone(), -1, PiScalar::pi_pow(HalfInt::from_int(-2)).scale(&int(6))),
        (true, _) => Ok(LaurentScalar::order_only(s0.clone(), -1)),
        // one of ζ(s₀), ζ(s₀ + 1) is an odd zeta value
        (false, _) => Ok(LaurentScalar::order_only(s0.clone(), 0)),
    }
}

/// Germ of `ξ(s, ℓ)` at `s₀`.
pub fn xi_laurent(s0: &Rational, ell: i64, d: u32) -> Result<LaurentScalar, LaurentError> {
    if !s0.is_integer() {
        // 2^{1-s₀} leaves the π-graded ring and α, β leave ½ℤ
        return Err(LaurentError::OutOfDomain(format!("ξ at s0 = {s0}")));
    }
    let half = frac(1, 2);
    let alpha = (s0 + int(1) + int(ell)) * &half;
    let beta = (s0 + int(1) - int(ell)) * &half;
    let s_int = s0.to_integer().to_i64().ok_or_else(|| LaurentError::OutOfDomain(s0.to_string()))?;
    let two_power = if s_int <= 1 {
        Rational::from_integer(BigInt::from(2u32).pow((1 - s_int) as u32))
    } else {
        Rational::new(BigInt::one(), BigInt::from(2u32).pow((s_int - 1) as u32))
    };
    let minus_i_pow = match ell.rem_euclid(4) {
        0 => Gaussian::real(int(1)),
        1 => Gaussian::new(int(0), int(-1)),
        2 => Gaussian::real(int(-1)),
        _ => Gaussian::new(int(0), int(1)),
    };
    let constant = PiScalar::pi() * PiScalar::gaussian(minus_i_pow).scale(&two_power);
    let mut g = LaurentScalar::constant(s0.clone(), constant)?;
    g = g.try_mul(&gamma_laurent(s0)?)?;
    for x in [alpha, beta] {
        let inv = gamma_laurent(&x)?.recip()?.compose_affine(s0.clone(), &half);
        g = g.try_mul(&inv)?;
    }
    Ok(g.pow(d))
}

/// Value of `(1 - μ(ϖ) q^{-s₀-1}) / (1 - μ(ϖ) q^{-s₀})`, the unramified
/// local intertwining scalar.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IntertwiningConstant {
    Finite(Rational),
    /// The denominator vanishes: a simple pole.
    Pole { order: i64 },
}

impl IntertwiningConstant {
    /// The germ at `s₀`. Zeros and poles carry `log q` in their leading
    /// coefficient, so only their order is certified.
    pub fn to_laurent(&self, s0: &Rational) -> LaurentScalar {
        match self {
            IntertwiningConstant::Finite(r) if r.is_zero() => LaurentScalar::order_only(s0.clone(), 1),
            IntertwiningConstant::Finite(r) => {
                LaurentScalar::new(s0.clone(), 0, PiScalar::rational(r.clone())).expect("nonzero")
            }
            IntertwiningConstant::Pole { order } => LaurentScalar::order_only(s0.clone(), *order),
        }
    }
}

/// `q^{-s}` for rational `s`, if rational.
fn q_power(q: u64, s: &Rational) -> Option<Rational> {
    let den = s.denom().to_u32()?;
    let num = s.numer().to_i64()?;
    let root = BigInt::from(q).nth_root(den);
    if root.pow(den) != BigInt::from(q) {
        return None;
    }
    let base = Rational::from_integer(root);
    Some(pow_i(&base, -num))
}

pub fn unramified_intertwining_constant(
    q: u64,
    mu_at_uniformizer: &Rational,
    s0: &Rational,
) -> Result<IntertwiningConstant, LaurentError> {
    if q < 2 || !crate::quadratic::is_prime_power(q) {
        return Err(LaurentError::InvalidArgument(format!("{q} is not a prime power")));
    }
    let x = q_power(q, s0).ok_or_else(|| LaurentError::OutOfDomain(format!("q^(-s0) for q = {q}, s0 = {s0}")))?;
    let den = Rational::one() - mu_at_uniformizer * &x;
    let num = Rational::one() - mu_at_uniformizer * &x / Rational::from_integer(BigInt::from(q));
    if den.is_zero() {
        return Ok(IntertwiningConstant::Pole { order: -1 });
    }
    Ok(IntertwiningConstant::Finite(num / den))
}

/// What the constant term looks like at `s₀ = k - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// The intertwined term vanishes: the constant term is the section.
    PureSection,
    /// The intertwined term survives with this leading constant (if certified).
    SectionPlusResidue(Option<PiScalar>),
    /// The constant term has a pole of this (negative) order.
    Pole(i64),
}

/// Inputs of [`constant_term_report`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstantTermInput {
    pub k: i64,
    pub d: u32,
    pub character: CharacterTag,
    /// Germs of `M_{s,v}Φ_{s,v}(1)` at the finite places of `S`.
    pub local_data: Vec<LaurentScalar>,
    /// Overrides the built-in partial L-ratio.
    pub l_ratio: Option<LaurentScalar>,
}

impl ConstantTermInput {
    /// Everywhere unramified data with the character family that matches `k`'s parity.
    pub fn unramified(k: i64, d: u32) -> Self {
        ConstantTermInput { k, d, character: CharacterTag::default_for_weight(k), local_data: Vec::new(), l_ratio: None }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstantTermReport {
    pub k: i64,
    pub d: u32,
    pub character: CharacterTag,
    pub second_term: LaurentScalar,
    pub verdict: Verdict,
}

pub fn constant_term_report(input: &ConstantTermInput) -> Result<ConstantTermReport, LaurentError> {
    let ConstantTermInput { k, d, character, .. } = *input;
    if k < 1 || d < 1 {
        return Err(LaurentError::InvalidArgument(format!("need k >= 1 and d >= 1, got k = {k}, d = {d}")));
    }
    if let Some(parity) = character.parity() {
        let expected = if k % 2 == 0 { 1 } else { -1 };
        if parity != expected {
            return Err(LaurentError::ParityMismatch { k, parity });
        }
    }
    let s0 = int(k - 1);
    let mut second = xi_laurent(&s0, k, d)?;
    // every nontrivial family at odd k is odd at all real places
    let l_family = if k % 2 == 1 && !character.is_trivial() { CharacterTag::Sgn } else { character };
    second = second.try_mul(&zeta_ratio_laurent(&s0, d, l_family, input.l_ratio.as_ref())?)?;
    for local in &input.local_data {
        second = second.try_mul(local)?;
    }
    let verdict = match second.order() {
        Order::Infinite => Verdict::PureSection,
        Order::Finite(n) if n >= 1 => Verdict::PureSection,
        Order::Finite(0) => Verdict::SectionPlusResidue(second.leading().cloned()),
        Order::Finite(n) => Verdict::Pole(n),
    };
    Ok(ConstantTermReport { k, d, character, second_term: second, verdict })
}

impl ConstantTermReport {
    pub fn to_json_value(&self) -> serde_json::Value {
        use serde_json::json;
        let verdict = match &self.verdict {
            Verdict::PureSection => json!({"kind": "PureSection"}),
            Verdict::SectionPlusResidue(leading) => json!({
                "kind": "SectionPlusResidue",
                "exact": leading.is_some(),
                "leading": leading.as_ref().map(PiScalar::to_wire),
                "leading_display": leading.as_ref().map(ToString::to_string),
            }),
            Verdict::Pole(n) => json!({"kind": "Pole", "order": n}),
        };
        json!({
            "k": self.k,
            "d": self.d,
            "character": self.character,
            "point": crate::series::format_rational(self.second_term.point()),
            "second_term": laurent_json(&self.second_term),
            "verdict": verdict,
        })
    }
}

pub fn laurent_json(l: &LaurentScalar) -> serde_json::Value {
    serde_json::json!({
        "point": crate::series::format_rational(l.point()),
        "order": l.order(),
        "exact": l.is_exact(),
        "leading": l.leading().map(PiScalar::to_wire),
        "leading_display": l.leading().map(ToString::to_string),
    })
}


#[cfg(test)]
mod tests {
    use super::*;

    fn pi_pow(e: i64) -> PiScalar {
        PiScalar::pi_pow(HalfInt::from_int(e))
    }

    #[test]
    fn gamma_points() {
        let g = gamma_laurent(&int(1)).unwrap();
        assert_eq!((g.order(), g.leading().cloned()), (Order::Finite(0), Some(PiScalar::one())));
        let g = gamma_laurent(&int(0)).unwrap();
        assert_eq!((g.order(), g.leading().cloned()), (Order::Finite(-1), Some(PiScalar::one())));
        let g = gamma_laurent(&int(-3)).unwrap();
        assert_eq!(g.leading().cloned(), Some(PiScalar::rational(frac(-1, 6))));
        let g = gamma_laurent(&frac(1, 2)).unwrap();
        assert_eq!(g.leading().cloned(), Some(PiScalar::sqrt_pi()));
        let g = gamma_laurent(&frac(5, 2)).unwrap();
        assert_eq!(g.leading().cloned(), Some(PiScalar::sqrt_pi().scale(&frac(3, 4))));
        let g = gamma_laurent(&frac(-1, 2)).unwrap();
        assert_eq!(g.leading().cloned(), Some(PiScalar::sqrt_pi().scale(&int(-2))));
        let g = gamma_laurent(&frac(-3, 2)).unwrap();
        assert_eq!(g.leading().cloned(), Some(PiScalar::sqrt_pi().scale(&frac(4, 3))));
        assert!(gamma_laurent(&frac(1, 3)).is_err());
    }

    #[test]
    fn zeta_ratio_points() {
        let z = zeta_ratio_laurent(&int(1), 1, CharacterTag::Trivial, None).unwrap();
        assert_eq!(z.order(), Order::Finite(-1));
        assert_eq!(z.leading().cloned(), Some(pi_pow(-2).scale(&int(6))));
        for s in [2, 3] {
            let z = zeta_ratio_laurent(&int(s), 1, CharacterTag::Trivial, None).unwrap();
            assert_eq!(z.order(), Order::Finite(0));
            assert!(!z.is_exact());
        }
        assert!(matches!(
            zeta_ratio_laurent(&int(0), 1, CharacterTag::Quadratic, None),
            Err(LaurentError::NeedsLData { .. })
        ));
        let data = LaurentScalar::new(int(0), 0, PiScalar::one()).unwrap();
        assert_eq!(zeta_ratio_laurent(&int(0), 1, CharacterTag::Quadratic, Some(&data)).unwrap(), data);
    }

    #[test]
    fn xi_points() {
        let x = xi_laurent(&int(1), 2, 1).unwrap();
        assert_eq!(x.order(), Order::Finite(1));
        assert_eq!(x.leading().cloned(), Some(PiScalar::pi().scale(&frac(-1, 2))));
        for k in 3..12 {
            assert!(xi_laurent(&int(k - 1), k, 1).unwrap().order().vanishes());
        }
        assert_eq!(xi_laurent(&int(1), 2, 2).unwrap().order(), Order::Finite(2));
        let x = xi_laurent(&int(0), 1, 1).unwrap();
        assert_eq!(x.order(), Order::Finite(0));
        assert_eq!(x.leading().cloned(), Some(PiScalar::pi() * PiScalar::i().scale(&int(-1))));
        assert!(xi_laurent(&frac(1, 2), 1, 1).is_err());
    }

    #[test]
    fn intertwining_constants() {
        assert_eq!(
            unramified_intertwining_constant(2, &int(1), &int(1)).unwrap(),
            IntertwiningConstant::Finite(frac(3, 2))
        );
        assert_eq!(
            unramified_intertwining_constant(3, &int(-1), &int(0)).unwrap(),
            IntertwiningConstant::Finite(frac(2, 3))
        );
        assert_eq!(
            unramified_intertwining_constant(5, &int(1), &int(0)).unwrap(),
            IntertwiningConstant::Pole { order: -1 }
        );
        // q = 4 = 2², s0 = 1/2
        assert_eq!(
            unramified_intertwining_constant(4, &int(1), &frac(1, 2)).unwrap(),
            IntertwiningConstant::Finite((int(1) - frac(1, 8)) / (int(1) - frac(1, 2)))
        );
        assert!(unramified_intertwining_constant(3, &int(1), &frac(1, 2)).is_err());
        assert!(unramified_intertwining_constant(6, &int(1), &int(1)).is_err());
    }

    #[test]
    fn report_examples() {
        let r = constant_term_report(&ConstantTermInput::unramified(4, 1)).unwrap();
        assert_eq!(r.verdict, Verdict::PureSection);
        let r = constant_term_report(&ConstantTermInput::unramified(2, 1)).unwrap();
        assert_eq!(r.verdict, Verdict::SectionPlusResidue(Some(pi_pow(-1).scale(&int(-3)))));
        let r = constant_term_report(&ConstantTermInput::unramified(2, 2)).unwrap();
        assert_eq!(r.verdict, Verdict::PureSection);
        let mut input = ConstantTermInput::unramified(2, 1);
        input.local_data.push(LaurentScalar::order_only(int(1), 1));
        assert_eq!(constant_term_report(&input).unwrap().verdict, Verdict::PureSection);
        let mut input = ConstantTermInput::unramified(2, 1);
        input.character = CharacterTag::Quadratic;
        assert_eq!(constant_term_report(&input).unwrap().verdict, Verdict::PureSection);
    }

    #[test]
    fn weight_one_survives_without_certified_constant() {
        for d in 1..=3 {
            let r = constant_term_report(&ConstantTermInput::unramified(1, d)).unwrap();
            assert_eq!(r.verdict, Verdict::SectionPlusResidue(None));
        }
    }

    #[test]
    fn report_errors() {
        let mut input = ConstantTermInput::unramified(3, 1);
        input.character = CharacterTag::Trivial;
        assert!(matches!(constant_term_report(&input), Err(LaurentError::ParityMismatch { .. })));
        assert!(matches!(
            zeta_ratio_laurent(&int(0), 1, CharacterTag::Other, None),
            Err(LaurentError::NeedsLData { .. })
        ));
        assert!(constant_term_report(&ConstantTermInput::unramified(0, 1)).is_err());
    }

    #[test]
    fn report_json() {
        let r = constant_term_report(&ConstantTermInput::unramified(2, 1)).unwrap();
        let v = r.to_json_value();
        assert_eq!(v["verdict"]["kind"], "SectionPlusResidue");
        assert_eq!(v["verdict"]["leading_display"], "-3·π^-1");
        assert_eq!(v["verdict"]["leading"], serde_json::json!([["-1", "-3", "0"]]));
    }
}
