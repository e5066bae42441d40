//! Local invariants of binary quadratic spaces over ℚ, coherence of local
//! families, and the reducibility table of degenerate principal series of
//! `SL₂`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::QuadraticError;
use crate::series::{int, parse_rational, Rational};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub fn is_prime_power(q: u64) -> bool {
    prime_power_base(q).is_some()
}

/// `p` with `q = p^f`, `f >= 1`.
pub fn prime_power_base(q: u64) -> Option<u64> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut r = q;
    while r % p == 0 {
        r /= p;
    }
    (r == 1).then_some(p)
}

/// A place of ℚ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Place {
    Finite(u64),
    Real,
}

impl Place {
    pub fn finite(p: u64) -> Result<Place, QuadraticError> {
        if is_prime(p) {
            Ok(Place::Finite(p))
        } else {
            Err(QuadraticError::NotPrime(p))
        }
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Real => f.write_str("real"),
            Place::Finite(p) => write!(f, "{p}"),
        }
    }
}

impl FromStr for Place {
    type Err = QuadraticError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "real" | "inf" | "∞" => Ok(Place::Real),
            _ => {
                let p: u64 = s.parse().map_err(|_| QuadraticError::OutOfDomain(format!("place {s:?}")))?;
                Place::finite(p)
            }
        }
    }
}

impl Serialize for Place {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Place {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Integer in the square class of `r`: `num·den`.
fn square_class_integer(r: &Rational) -> BigInt {
    r.numer() * r.denom()
}

/// `(valuation, unit part)` of a nonzero integer at `p`.
fn split_valuation(n: &BigInt, p: u64) -> (u32, BigInt) {
    let p = BigInt::from(p);
    let mut v = 0;
    let mut u = n.clone();
    while (&u % &p).is_zero() {
        u /= &p;
        v += 1;
    }
    (v, u)
}

/// Legendre symbol `(u | p)` for odd prime `p` not dividing `u`.
fn legendre(u: &BigInt, p: u64) -> i8 {
    let pb = BigInt::from(p);
    let r = u.mod_floor(&pb).modpow(&BigInt::from((p - 1) / 2), &pb);
    if r.is_one() {
        1
    } else {
        -1
    }
}

fn mod8(u: &BigInt) -> u64 {
    u.mod_floor(&BigInt::from(8)).to_u64().expect("small")
}

/// The Hilbert symbol `(a, b)_v`.
pub fn hilbert_symbol(a: &Rational, b: &Rational, v: Place) -> Result<i8, QuadraticError> {
    if a.is_zero() || b.is_zero() {
        return Err(QuadraticError::ZeroArgument);
    }
    let a = square_class_integer(a);
    let b = square_class_integer(b);
    Ok(match v {
        Place::Real => {
            if a.is_negative() && b.is_negative() {
                -1
            } else {
                1
            }
        }
        Place::Finite(2) => {
            let (alpha, u) = split_valuation(&a, 2);
            let (beta, w) = split_valuation(&b, 2);
            let (u, w) = (mod8(&u), mod8(&w));
            let eps = |x: u64| ((x - 1) / 2) % 2;
            let omega = |x: u64| ((x * x - 1) / 8) % 2;
            let e = eps(u) * eps(w) + alpha as u64 * omega(w) + beta as u64 * omega(u);
            if e % 2 == 0 {
                1
            } else {
                -1
            }
        }
        Place::Finite(p) => {
            let (alpha, u) = split_valuation(&a, p);
            let (beta, w) = split_valuation(&b, p);
            let mut s: i8 = if (alpha as u64 * beta as u64 * ((p - 1) / 2)) % 2 == 0 { 1 } else { -1 };
            if beta % 2 == 1 {
                s *= legendre(&u, p);
            }
            if alpha % 2 == 1 {
                s *= legendre(&w, p);
            }
            s
        }
    })
}

/// Whether `r` is a square in `ℚ_v`.
pub fn is_local_square(r: &Rational, v: Place) -> Result<bool, QuadraticError> {
    if r.is_zero() {
        return Err(QuadraticError::ZeroArgument);
    }
    let n = square_class_integer(r);
    Ok(match v {
        Place::Real => n.is_positive(),
        Place::Finite(p) => {
            let (val, u) = split_valuation(&n, p);
            val % 2 == 0 && if p == 2 { mod8(&u) == 1 } else { legendre(&u, p) == 1 }
        }
    })
}

/// Distinct primes dividing a nonzero integer, by trial division.
pub fn prime_divisors(n: &BigInt) -> Vec<u64> {
    let mut n = n.abs();
    let mut out = Vec::new();
    let mut d = 2u64;
    while BigInt::from(d) * BigInt::from(d) <= n {
        let db = BigInt::from(d);
        if (&n % &db).is_zero() {
            out.push(d);
            while (&n % &db).is_zero() {
                n /= &db;
            }
        }
        d += 1;
    }
    if n > BigInt::one() {
        out.push(n.to_u64().expect("prime factor fits in u64"));
    }
    out
}

/// The squarefree integer in the square class of `r`.
pub fn squarefree_part(r: &Rational) -> BigInt {
    let n = square_class_integer(r);
    let mut out = if n.is_negative() { -BigInt::one() } else { BigInt::one() };
    for p in prime_divisors(&n) {
        if split_valuation(&n, p).0 % 2 == 1 {
            out *= BigInt::from(p);
        }
    }
    out
}

/// The diagonal space `⟨a₁, a₂⟩`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadSpace2D {
    a1: Rational,
    a2: Rational,
}

impl QuadSpace2D {
    pub fn new(a1: Rational, a2: Rational) -> Result<Self, QuadraticError> {
        if a1.is_zero() || a2.is_zero() {
            return Err(QuadraticError::ZeroArgument);
        }
        Ok(QuadSpace2D { a1, a2 })
    }

    pub fn entries(&self) -> (&Rational, &Rational) {
        (&self.a1, &self.a2)
    }

    /// `Δ = -a₁a₂`.
    pub fn discriminant(&self) -> Rational {
        -(&self.a1 * &self.a2)
    }

    /// The real place and every prime dividing `2a₁a₂`; invariants are
    /// trivial everywhere else.
    pub fn relevant_places(&self) -> Vec<Place> {
        let n = square_class_integer(&self.a1) * square_class_integer(&self.a2) * BigInt::from(2);
        let mut places: Vec<Place> = prime_divisors(&n).into_iter().map(Place::Finite).collect();
        places.push(Place::Real);
        places
    }
}

/// `(χ_{V_v}, ε_v)` at one place.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct LocalInvariant {
    pub place: Place,
    /// `Δ` is not a square in `ℚ_v`.
    pub chi_nontrivial: bool,
    pub epsilon: i8,
}

pub fn local_invariants(v: &QuadSpace2D, place: Place) -> Result<LocalInvariant, QuadraticError> {
    let chi_nontrivial = !is_local_square(&v.discriminant(), place)?;
    let epsilon = hilbert_symbol(&v.a1, &v.a2, place)?;
    Ok(LocalInvariant { place, chi_nontrivial, epsilon })
}

/// A family of local binary spaces with a common global discriminant.
///
/// The discriminant is kept as its squarefree representative, and only places
/// with `ε = -1` are stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Collection {
    discriminant: BigInt,
    minus_places: Vec<Place>,
}

impl Collection {
    /// `epsilons` lists `ε_v`; unlisted places have `ε_v = +1`.
    pub fn new(discriminant: &Rational, epsilons: &BTreeMap<Place, i8>) -> Result<Self, QuadraticError> {
        if discriminant.is_zero() {
            return Err(QuadraticError::ZeroArgument);
        }
        let mut minus_places = Vec::new();
        for (&place, &e) in epsilons {
            match e {
                1 => {}
                -1 => minus_places.push(place),
                _ => return Err(QuadraticError::OutOfDomain(format!("ε = {e} at {place}"))),
            }
        }
        Ok(Collection { discriminant: squarefree_part(discriminant), minus_places })
    }

    /// The completions of a global space.
    pub fn of_space(v: &QuadSpace2D) -> Result<Self, QuadraticError> {
        let mut eps = BTreeMap::new();
        for place in v.relevant_places() {
            eps.insert(place, local_invariants(v, place)?.epsilon);
        }
        Collection::new(&v.discriminant(), &eps)
    }

    pub fn discriminant(&self) -> Rational {
        Rational::from_integer(self.discriminant.clone())
    }

    pub fn epsilon(&self, place: Place) -> i8 {
        if self.minus_places.contains(&place) {
            -1
        } else {
            1
        }
    }

    /// Places with `ε = -1`, in order.
    pub fn minus_places(&self) -> &[Place] {
        &self.minus_places
    }

    /// Flips `ε` at one place.
    pub fn flip(&self, place: Place) -> Collection {
        let mut minus_places = self.minus_places.clone();
        if let Some(i) = minus_places.iter().position(|&p| p == place) {
            minus_places.remove(i);
        } else {
            minus_places.push(place);
            minus_places.sort();
        }
        Collection { discriminant: self.discriminant.clone(), minus_places }
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let eps: BTreeMap<String, i8> = self.minus_places.iter().map(|p| (p.to_string(), -1)).collect();
        serde_json::json!({
            "discriminant": self.discriminant.to_string(),
            "epsilons": eps,
        })
    }

    pub fn from_json_value(value: &serde_json::Value) -> Result<Self, QuadraticError> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct File {
            discriminant: String,
            #[serde(default)]
            epsilons: BTreeMap<Place, i8>,
        }
        let file = File::deserialize(value).map_err(|e| QuadraticError::OutOfDomain(e.to_string()))?;
        let disc = parse_rational(&file.discriminant).map_err(|e| QuadraticError::OutOfDomain(e.to_string()))?;
        Collection::new(&disc, &file.epsilons)
    }
}

/// Result of [`is_coherent`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Coherence {
    /// Realized by a global space; the witness is `None` only if the bounded
    /// search for a diagonal representative gave up.
    Coherent(Option<QuadSpace2D>),
    Incoherent,
}

impl Coherence {
    pub fn is_coherent(&self) -> bool {
        matches!(self, Coherence::Coherent(_))
    }
}

const WITNESS_SEARCH_LIMIT: u64 = 100_000;

/// Decides whether a global space has the given completions.
///
/// For binary spaces with fixed discriminant this is the product formula
/// `Π_v ε_v = 1`, given `ε_v = 1` wherever `Δ` is a local square.
pub fn is_coherent(c: &Collection) -> Result<Coherence, QuadraticError> {
    let disc = c.discriminant();
    for &place in &c.minus_places {
        if is_local_square(&disc, place)? {
            return Err(QuadraticError::InvariantViolation { place: place.to_string() });
        }
    }
    if c.minus_places.len() % 2 == 1 {
        return Ok(Coherence::Incoherent);
    }
    Ok(Coherence::Coherent(find_witness(c)))
}

/// Searches `⟨a, -Δ/a⟩` over squarefree integers `a`.
///
/// At a support prime not dividing `2Δ` the character is unramified and
/// nontrivial, so `(a, Δ)_p = -1` forces `p | a`; the search runs over
/// `a = ±P·m` with `P` the product of those primes and `m` coprime to `P`.
fn find_witness(c: &Collection) -> Option<QuadSpace2D> {
    let disc = c.discriminant();
    let two_disc = &c.discriminant * BigInt::from(2);
    let base_primes = prime_divisors(&two_disc);
    let forced: BigInt = c
        .minus_places
        .iter()
        .filter_map(|v| match v {
            Place::Finite(p) if !base_primes.contains(p) => Some(BigInt::from(*p)),
            _ => None,
        })
        .product();
    for m in 1..=WITNESS_SEARCH_LIMIT {
        let mb = BigInt::from(m);
        if squarefree_part(&Rational::from_integer(mb.clone())) != mb || !mb.gcd(&forced).is_one() {
            continue;
        }
        let magnitude = &forced * &mb;
        for a in [magnitude.clone(), -magnitude] {
            let a = Rational::from_integer(a);
            let a2 = Rational::from_integer(squarefree_part(&(-&disc / &a)));
            let mut places: Vec<Place> = base_primes.iter().copied().map(Place::Finite).collect();
            places.extend(prime_divisors(a.numer()).into_iter().map(Place::Finite));
            places.extend(c.minus_places.iter().copied());
            places.push(Place::Real);
            places.sort();
            places.dedup();
            let ok = places
                .iter()
                .all(|&v| hilbert_symbol(&a, &a2, v).expect("nonzero") == c.epsilon(v));
            if ok {
                return QuadSpace2D::new(a, a2).ok();
            }
        }
    }
    None
}

/// Positive-definite collections with discriminant `Δ < 0` whose `ε = -1`
/// places are primes `<= support_bound`.
///
/// `ε_real = +1` picks signature (2,0); the finite support is then any
/// even-size set of primes where `Δ` is not a local square.
pub fn enumerate_definite_spaces(discriminant: &Rational, support_bound: u64) -> Result<Vec<Collection>, QuadraticError> {
    if !discriminant.is_negative() {
        return Err(QuadraticError::OutOfDomain(format!("definite spaces need Δ < 0, got {discriminant}")));
    }
    let mut nonsplit = Vec::new();
    for p in (2..=support_bound).filter(|&p| is_prime(p)) {
        if !is_local_square(discriminant, Place::Finite(p))? {
            nonsplit.push(Place::Finite(p));
        }
    }
    if nonsplit.len() > 20 {
        return Err(QuadraticError::OutOfDomain(format!("{} candidate primes", nonsplit.len())));
    }
    let disc = squarefree_part(discriminant);
    let mut out = Vec::new();
    for mask in 0u32..(1 << nonsplit.len()) {
        if mask.count_ones() % 2 == 1 {
            continue;
        }
        let minus_places = nonsplit
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, p)| *p)
            .collect();
        out.push(Collection { discriminant: disc.clone(), minus_places });
    }
    out.sort_by(|a, b| (a.minus_places.len(), &a.minus_places).cmp(&(b.minus_places.len(), &b.minus_places)));
    Ok(out)
}

/// Where the induced representation lives.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Residue {
    Real,
    /// Non-archimedean with residue field of this size.
    Finite(u64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CharOrder {
    Trivial,
    Quadratic,
    Other,
}

/// A unitary character `μ_v`, up to what the reducibility table needs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct CharDescriptor {
    pub order: CharOrder,
    pub unramified: bool,
    /// `μ_v = sgn^{real_sign}` at a real place.
    pub real_sign: u8,
}

/// `s = re + im · (π√-1 / log q)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SParam {
    pub re: Rational,
    pub im: Rational,
}

impl SParam {
    pub fn real(re: Rational) -> Self {
        SParam { re, im: Rational::zero() }
    }
}

/// Structure of `I_v(μ_v, s)` at the points singled out by the table.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum LocalVerdict {
    Irreducible,
    /// `I_v(μ_v, 0) = R(V⁺) ⊕ R(V⁻)` for quadratic `μ_v`.
    QuadraticSplit,
    /// `0 → St → I(1, 1) → ℂ → 0`.
    SteinbergSub,
    /// `0 → ℂ → I(1, -1) → St → 0`.
    TrivialSub,
    /// Real place: no `𝔭₋`-finite vector.
    NoFiniteVector,
    /// Real place: `0 → L(k) ⊕ L⁻(k) → I(sgn^k, k-1) → F_k → 0`; for `k = 1`
    /// also `I(sgn, 0) ≅ R(2,0) ⊕ R(0,2)`.
    HolomorphicSub { k: i64 },
    /// Real place: `0 → ℂ → I(1, -1) → L(2) ⊕ L⁻(2) → 0`.
    ArchTrivialSub,
}

impl LocalVerdict {
    pub fn is_reducible(&self) -> bool {
        !matches!(self, LocalVerdict::Irreducible | LocalVerdict::NoFiniteVector)
    }

    pub fn has_finite_vector(&self) -> bool {
        matches!(self, LocalVerdict::HolomorphicSub { .. } | LocalVerdict::ArchTrivialSub)
    }

    pub fn constituents(&self) -> Vec<String> {
        let s = |x: &[&str]| x.iter().map(|t| t.to_string()).collect();
        match self {
            LocalVerdict::Irreducible | LocalVerdict::NoFiniteVector => Vec::new(),
            LocalVerdict::QuadraticSplit => s(&["R(V+)", "R(V-)"]),
            LocalVerdict::SteinbergSub | LocalVerdict::TrivialSub => s(&["St", "C"]),
            LocalVerdict::HolomorphicSub { k: 1 } => s(&["R(2,0)", "R(0,2)"]),
            LocalVerdict::HolomorphicSub { k } => vec![format!("L({k})"), format!("L-({k})"), format!("F_{k}")],
            LocalVerdict::ArchTrivialSub => s(&["C", "L(2)", "L-(2)"]),
        }
    }

    /// Short exact sequences `(sub, quotient)`; a split sum has none.
    pub fn sequences(&self) -> Vec<(String, String)> {
        match self {
            LocalVerdict::SteinbergSub => vec![("St".into(), "C".into())],
            LocalVerdict::TrivialSub => vec![("C".into(), "St".into())],
            LocalVerdict::HolomorphicSub { k } if *k > 1 => {
                vec![(format!("L({k}) + L-({k})"), format!("F_{k}"))]
            }
            LocalVerdict::ArchTrivialSub => vec![("C".into(), "L(2) + L-(2)".into())],
            _ => Vec::new(),
        }
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let kind = match self {
            LocalVerdict::Irreducible => "Irreducible",
            LocalVerdict::QuadraticSplit => "QuadraticSplit",
            LocalVerdict::SteinbergSub => "SteinbergSub",
            LocalVerdict::TrivialSub => "TrivialSub",
            LocalVerdict::NoFiniteVector => "NoFiniteVector",
            LocalVerdict::HolomorphicSub { .. } => "HolomorphicSub",
            LocalVerdict::ArchTrivialSub => "ArchTrivialSub",
        };
        let mut v = serde_json::json!({
            "kind": kind,
            "reducible": self.is_reducible(),
            "constituents": self.constituents(),
            "sequences": self.sequences().into_iter().map(|(a, b)| vec![a, b]).collect::<Vec<_>>(),
        });
        if matches!(self, LocalVerdict::HolomorphicSub { .. } | LocalVerdict::ArchTrivialSub | LocalVerdict::NoFiniteVector) {
            v["p_minus_finite"] = serde_json::Value::Bool(self.has_finite_vector());
        }
        if let LocalVerdict::HolomorphicSub { k } = self {
            v["k"] = serde_json::json!(k);
        }
        v
    }
}

fn is_even_integer(r: &Rational) -> bool {
    r.is_integer() && r.to_integer().is_even()
}

fn is_odd_integer(r: &Rational) -> bool {
    r.is_integer() && r.to_integer().is_odd()
}

/// Reducibility of `I_v(μ_v, s)`.
///
/// At a finite place an unramified `μ_v` is first absorbed into `s`: the
/// unramified quadratic character is `|·|^{π√-1/log q}`. At the real place the
/// verdict records whether a `𝔭₋`-finite vector exists and the resulting
/// constituents.
pub fn reducibility(residue: Residue, mu: CharDescriptor, s: &SParam) -> Result<LocalVerdict, QuadraticError> {
    match residue {
        Residue::Real => {
            let is_sgn = match (mu.real_sign, mu.order) {
                (0, CharOrder::Trivial) => false,
                (1, CharOrder::Quadratic) => true,
                _ => {
                    return Err(QuadraticError::InconsistentDescriptor(format!(
                        "real character sgn^{} with order {:?}",
                        mu.real_sign, mu.order
                    )))
                }
            };
            if !s.im.is_zero() || !s.re.is_integer() {
                return Ok(LocalVerdict::NoFiniteVector);
            }
            let re = &s.re;
            if is_sgn && is_even_integer(re) && !re.is_negative() {
                let k = (re + int(1)).to_integer().to_i64().expect("small");
                return Ok(LocalVerdict::HolomorphicSub { k });
            }
            if !is_sgn && is_odd_integer(re) && re >= &int(-1) {
                if re == &int(-1) {
                    return Ok(LocalVerdict::ArchTrivialSub);
                }
                let k = (re + int(1)).to_integer().to_i64().expect("small");
                return Ok(LocalVerdict::HolomorphicSub { k });
            }
            Ok(LocalVerdict::NoFiniteVector)
        }
        Residue::Finite(q) => {
            if !is_prime_power(q) {
                return Err(QuadraticError::NotPrimePower(q));
            }
            let (order, im) = match (mu.order, mu.unramified) {
                (CharOrder::Trivial, true) => (CharOrder::Trivial, s.im.clone()),
                (CharOrder::Quadratic, true) => (CharOrder::Trivial, &s.im + int(1)),
                (CharOrder::Quadratic, false) => (CharOrder::Quadratic, s.im.clone()),
                (CharOrder::Other, false) => (CharOrder::Other, s.im.clone()),
                (CharOrder::Trivial, false) => {
                    return Err(QuadraticError::InconsistentDescriptor("the trivial character is unramified".into()))
                }
                (CharOrder::Other, true) => {
                    return Err(QuadraticError::InconsistentDescriptor(
                        "an unramified character of order > 2 needs μ(ϖ), not just its order".into(),
                    ))
                }
            };
            let re = &s.re;
            Ok(match order {
                CharOrder::Quadratic if re.is_zero() && im.is_integer() => LocalVerdict::QuadraticSplit,
                CharOrder::Trivial if re.is_zero() && is_odd_integer(&im) => LocalVerdict::QuadraticSplit,
                CharOrder::Trivial if re == &int(1) && is_even_integer(&im) => LocalVerdict::SteinbergSub,
                CharOrder::Trivial if re == &int(-1) && is_even_integer(&im) => LocalVerdict::TrivialSub,
                _ => LocalVerdict::Irreducible,
            })
        }
    }
}

/// The eigenvalue `ε·γ(0, χ, ψ)` of the local intertwining operator on
/// `R(V^ε)` for unramified nontrivial `χ`: `ε · L(1, χ)/L(0, χ) = ε · 2q/(q+1)`.
pub fn unramified_eigenvalue(q: u64, chi_nontrivial_unramified: bool, epsilon: i8) -> Result<Rational, QuadraticError> {
    if !is_prime_power(q) {
        return Err(QuadraticError::NotPrimePower(q));
    }
    if !chi_nontrivial_unramified {
        return Err(QuadraticError::OutOfDomain(
            "eigenvalues are certified for unramified nontrivial χ only".into(),
        ));
    }
    if epsilon != 1 && epsilon != -1 {
        return Err(QuadraticError::OutOfDomain(format!("ε = {epsilon}")));
    }
    let q = int(q as i64);
    // L(s, χ) = (1 + q^{-s})^{-1}
    let l1 = Rational::one() / (Rational::one() + q.recip());
    let l0 = Rational::one() / int(2);
    Ok(int(epsilon as i64) * l1 / l0)
}
