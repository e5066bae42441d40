//! Scalars of the form `sum_e c_e * pi^e` with Gaussian-rational `c_e` and
//! half-integer `e`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::rational::{format_rational, frac, int, parse_rational, ParseRationalError, Rational};

/// A half-integer, stored as twice its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt(i64);

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt(0);

    pub fn from_int(n: i64) -> Self {
        HalfInt(2 * n)
    }

    pub fn from_twice(twice: i64) -> Self {
        HalfInt(twice)
    }

    pub fn twice(self) -> i64 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    pub fn to_rational(self) -> Rational {
        frac(self.0, 2)
    }

    /// Converts a rational that is a half-integer.
    pub fn from_rational(r: &Rational) -> Option<Self> {
        let twice = r * int(2);
        if !twice.is_integer() {
            return None;
        }
        i64::try_from(twice.to_integer()).ok().map(HalfInt)
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 + rhs.0)
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt(-self.0)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

/// Gaussian rational `re + im * i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Gaussian {
    pub re: Rational,
    pub im: Rational,
}

impl Gaussian {
    pub fn new(re: Rational, im: Rational) -> Self {
        Gaussian { re, im }
    }

    pub fn real(re: Rational) -> Self {
        Gaussian { re, im: Rational::zero() }
    }

    pub fn i() -> Self {
        Gaussian { re: Rational::zero(), im: Rational::one() }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn norm(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn conj(&self) -> Self {
        Gaussian { re: self.re.clone(), im: -self.im.clone() }
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        Some(Gaussian { re: &self.re / &n, im: -(&self.im / &n) })
    }

    pub fn mul_ref(&self, rhs: &Gaussian) -> Gaussian {
        Gaussian {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }

    fn add_ref(&self, rhs: &Gaussian) -> Gaussian {
        Gaussian { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }

    fn render(&self) -> String {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => format_rational(&self.re),
            (true, false) => {
                if self.im.is_one() {
                    "i".to_string()
                } else if (-self.im.clone()).is_one() {
                    "-i".to_string()
                } else {
                    format!("{}i", format_rational(&self.im))
                }
            }
            (false, false) => {
                let sign = if self.im.is_negative() { "-" } else { "+" };
                format!("({}{}{}i)", format_rational(&self.re), sign, format_rational(&self.im.abs()))
            }
        }
    }
}

/// Finite sum `sum_e c_e * pi^e`.
///
/// No stored coefficient is zero, so the zero scalar is the empty map and
/// structural equality is mathematical equality.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct PiScalar {
    terms: BTreeMap<HalfInt, Gaussian>,
}

impl PiScalar {
    pub fn zero() -> Self {
        PiScalar::default()
    }

    pub fn one() -> Self {
        PiScalar::rational(int(1))
    }

    pub fn rational(r: Rational) -> Self {
        PiScalar::monomial(Gaussian::real(r), HalfInt::ZERO)
    }

    pub fn gaussian(c: Gaussian) -> Self {
        PiScalar::monomial(c, HalfInt::ZERO)
    }

    /// `c * pi^e`.
    pub fn monomial(c: Gaussian, e: HalfInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        PiScalar { terms }
    }

    pub fn pi() -> Self {
        PiScalar::pi_pow(HalfInt::from_int(1))
    }

    pub fn sqrt_pi() -> Self {
        PiScalar::pi_pow(HalfInt::from_twice(1))
    }

    pub fn pi_pow(e: HalfInt) -> Self {
        PiScalar::monomial(Gaussian::real(int(1)), e)
    }

    pub fn i() -> Self {
        PiScalar::gaussian(Gaussian::i())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (HalfInt, &Gaussian)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coefficient(&self, e: HalfInt) -> Option<&Gaussian> {
        self.terms.get(&e)
    }

    /// The single `(coefficient, exponent)` pair, if this is a monomial.
    pub fn as_monomial(&self) -> Option<(&Gaussian, HalfInt)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (c, *e))
        } else {
            None
        }
    }

    pub fn scale(&self, r: &Rational) -> PiScalar {
        let g = Gaussian::real(r.clone());
        self * &PiScalar::gaussian(g)
    }

    /// Multiplicative inverse; only monomials are invertible in this ring.
    pub fn inv(&self) -> Option<PiScalar> {
        let (c, e) = self.as_monomial()?;
        Some(PiScalar::monomial(c.inv()?, -e))
    }

    pub fn pow(&self, n: u32) -> PiScalar {
        let mut acc = PiScalar::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Numeric value as `(re, im)`, for cross-checks only.
    pub fn to_f64(&self) -> (f64, f64) {
        use num_traits::ToPrimitive;
        let mut re = 0.0;
        let mut im = 0.0;
        for (e, c) in &self.terms {
            let p = std::f64::consts::PI.powf(e.twice() as f64 / 2.0);
            re += c.re.to_f64().unwrap_or(f64::NAN) * p;
            im += c.im.to_f64().unwrap_or(f64::NAN) * p;
        }
        (re, im)
    }

    /// Wire form: `[[exponent, re, im], ...]` sorted by exponent.
    pub fn to_wire(&self) -> Vec<[String; 3]> {
        self.terms
            .iter()
            .map(|(e, c)| [format_rational(&e.to_rational()), format_rational(&c.re), format_rational(&c.im)])
            .collect()
    }

    pub fn from_wire(wire: &[[String; 3]]) -> Result<PiScalar, ParseRationalError> {
        let mut acc = PiScalar::zero();
        for [e, re, im] in wire {
            let exp = HalfInt::from_rational(&parse_rational(e)?).ok_or_else(|| ParseRationalError(e.clone()))?;
            let c = Gaussian::new(parse_rational(re)?, parse_rational(im)?);
            acc = acc + PiScalar::monomial(c, exp);
        }
        Ok(acc)
    }
}

impl Serialize for PiScalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_wire().serialize(s)
    }
}

impl<'de> Deserialize<'de> for PiScalar {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let wire = Vec::<[String; 3]>::deserialize(d)?;
        PiScalar::from_wire(&wire).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for PiScalar {
    /// Renders as `c·π^e` terms joined by ` + `; zero renders as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| {
                if *e == HalfInt::ZERO {
                    c.render()
                } else {
                    format!("{}·π^{}", c.render(), e)
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<'a> Add<&'a PiScalar> for &'a PiScalar {
    type Output = PiScalar;
    fn add(self, rhs: &PiScalar) -> PiScalar {
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            let sum = match terms.get(e) {
                Some(prev) => prev.add_ref(c),
                None => c.clone(),
            };
            if sum.is_zero() {
                terms.remove(e);
            } else {
                terms.insert(*e, sum);
            }
        }
        PiScalar { terms }
    }
}

impl Add for PiScalar {
    type Output = PiScalar;
    fn add(self, rhs: PiScalar) -> PiScalar {
        &self + &rhs
    }
}

impl Neg for PiScalar {
    type Output = PiScalar;
    fn neg(self) -> PiScalar {
        PiScalar {
            terms: self
                .terms
                .into_iter()
                .map(|(e, c)| (e, Gaussian::new(-c.re, -c.im)))
                .collect(),
        }
    }
}

impl Sub for PiScalar {
    type Output = PiScalar;
    fn sub(self, rhs: PiScalar) -> PiScalar {
        self + (-rhs)
    }
}

impl<'a> Mul<&'a PiScalar> for &'a PiScalar {
    type Output = PiScalar;
    fn mul(self, rhs: &PiScalar) -> PiScalar {
        let mut acc = PiScalar::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                acc = &acc + &PiScalar::monomial(c1.mul_ref(c2), *e1 + *e2);
            }
        }
        acc
    }
}

impl Mul for PiScalar {
    type Output = PiScalar;
    fn mul(self, rhs: PiScalar) -> PiScalar {
        &self * &rhs
    }
}
