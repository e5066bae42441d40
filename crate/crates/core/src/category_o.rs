//! Blocks of category O for `sl₂`, identification of the module a form
//! generates, and the catalog of Eisenstein-space decompositions by `(d, k)`.
//!
//! Modules are lowest-weight: `N(λ)` has weights `λ, λ+2, …`, and for
//! `λ ∈ ℤ_{>1}` the block is `{N(λ), L(2-λ), N(2-λ), N(2-λ)^∨, P(λ)}` with
//! `L(2-λ) = F_λ` of dimension `λ-1`.

use std::fmt;

use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::CategoryError;
use crate::operators::{infinitesimal_character, iterate_lower, iterate_raise};
use crate::series::{format_rational, int, NearlyHolomorphicForm, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ModuleClass {
    Verma(Rational),
    Simple(Rational),
    DualVerma(Rational),
    Projective(Rational),
    /// `F_k`, of dimension `k - 1`.
    Finite(i64),
    Trivial,
}

fn is_nonpositive_integer(r: &Rational) -> bool {
    r.is_integer() && !r.is_positive()
}

fn is_integer_above_one(r: &Rational) -> bool {
    r.is_integer() && r > &int(1)
}

fn reflect(r: &Rational) -> Rational {
    int(2) - r
}

impl ModuleClass {
    /// A fixed representative of the isomorphism class.
    ///
    /// Simples are written `Simple(λ)`; a Verma or dual Verma is simple unless
    /// `λ ∈ ℤ_{≤0}`; `P(λ)` is a Verma unless `λ ∈ ℤ_{>1}`.
    pub fn canonical(&self) -> ModuleClass {
        match self {
            ModuleClass::Trivial => ModuleClass::Simple(Rational::zero()),
            ModuleClass::Finite(k) => ModuleClass::Simple(int(2 - k)),
            ModuleClass::Simple(l) => ModuleClass::Simple(l.clone()),
            ModuleClass::Verma(l) | ModuleClass::DualVerma(l) if !is_nonpositive_integer(l) => {
                ModuleClass::Simple(l.clone())
            }
            ModuleClass::Projective(l) if !is_integer_above_one(l) => ModuleClass::Verma(l.clone()).canonical(),
            other => other.clone(),
        }
    }

    pub fn is_isomorphic(&self, other: &ModuleClass) -> bool {
        self.canonical() == other.canonical()
    }

    /// Lowest-weight parameters of the simple subquotients, with multiplicity.
    pub fn composition_factors(&self) -> Vec<Rational> {
        match self.canonical() {
            ModuleClass::Simple(l) => vec![l],
            ModuleClass::Verma(l) | ModuleClass::DualVerma(l) => {
                let r = reflect(&l);
                vec![l, r]
            }
            ModuleClass::Projective(l) => {
                let r = reflect(&l);
                vec![l.clone(), r, l]
            }
            _ => unreachable!("canonical forms are Simple, Verma, DualVerma or Projective"),
        }
    }

    pub fn is_simple(&self) -> bool {
        matches!(self.canonical(), ModuleClass::Simple(_))
    }

    pub fn name(&self) -> &'static str {
        match self {
            ModuleClass::Verma(_) => "Verma",
            ModuleClass::Simple(_) => "Simple",
            ModuleClass::DualVerma(_) => "DualVerma",
            ModuleClass::Projective(_) => "Projective",
            ModuleClass::Finite(_) => "Finite",
            ModuleClass::Trivial => "Trivial",
        }
    }

    pub fn to_json_value(&self) -> Value {
        let param = match self {
            ModuleClass::Verma(l) | ModuleClass::Simple(l) | ModuleClass::DualVerma(l) | ModuleClass::Projective(l) => {
                Value::String(format_rational(l))
            }
            ModuleClass::Finite(k) => Value::String(k.to_string()),
            ModuleClass::Trivial => Value::Null,
        };
        json!({ "class": self.name(), "lambda": param, "label": self.to_string() })
    }
}

impl fmt::Display for ModuleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleClass::Verma(l) => write!(f, "N({})", format_rational(l)),
            ModuleClass::Simple(l) => write!(f, "L({})", format_rational(l)),
            ModuleClass::DualVerma(l) => write!(f, "N({})^∨", format_rational(l)),
            ModuleClass::Projective(l) => write!(f, "P({})", format_rational(l)),
            ModuleClass::Finite(k) => write!(f, "F_{k}"),
            ModuleClass::Trivial => f.write_str("C"),
        }
    }
}

/// A short exact sequence `0 → sub → middle → quotient → 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExactSequence {
    pub sub: ModuleClass,
    pub middle: ModuleClass,
    pub quotient: ModuleClass,
}

impl ExactSequence {
    /// Composition factors of the outer terms, combined.
    pub fn outer_factors(&self) -> Vec<Rational> {
        let mut v = self.sub.composition_factors();
        v.extend(self.quotient.composition_factors());
        v.sort();
        v
    }

    pub fn is_balanced(&self) -> bool {
        let mut middle = self.middle.composition_factors();
        middle.sort();
        middle == self.outer_factors()
    }

    pub fn to_json_value(&self) -> Value {
        json!([self.sub.to_string(), self.middle.to_string(), self.quotient.to_string()])
    }
}

/// The indecomposables of one block, with the recorded sequences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    /// Orbit representative `max(λ, 2-λ)`.
    pub lambda: Rational,
    pub classes: Vec<ModuleClass>,
    pub sequences: Vec<ExactSequence>,
}

impl Block {
    pub fn to_json_value(&self) -> Value {
        json!({
            "lambda": format_rational(&self.lambda),
            "classes": self.classes.iter().map(ModuleClass::to_json_value).collect::<Vec<_>>(),
            "sequences": self.sequences.iter().map(ExactSequence::to_json_value).collect::<Vec<_>>(),
        })
    }
}

pub fn classify_block(lambda: &Rational) -> Block {
    let r = reflect(lambda);
    let lambda = if &r > lambda { r } else { lambda.clone() };
    let low = reflect(&lambda);
    if !lambda.is_integer() {
        return Block {
            classes: vec![ModuleClass::Verma(low), ModuleClass::Verma(lambda.clone())],
            lambda,
            sequences: Vec::new(),
        };
    }
    if lambda.is_one() {
        return Block { classes: vec![ModuleClass::Verma(lambda.clone())], lambda, sequences: Vec::new() };
    }
    let classes = vec![
        ModuleClass::Verma(lambda.clone()),
        ModuleClass::Simple(low.clone()),
        ModuleClass::Verma(low.clone()),
        ModuleClass::DualVerma(low.clone()),
        ModuleClass::Projective(lambda.clone()),
    ];
    let sequences = vec![
        ExactSequence {
            sub: ModuleClass::Verma(lambda.clone()),
            middle: ModuleClass::Verma(low.clone()),
            quotient: ModuleClass::Simple(low.clone()),
        },
        ExactSequence {
            sub: ModuleClass::Verma(lambda.clone()),
            middle: ModuleClass::Projective(lambda.clone()),
            quotient: ModuleClass::Verma(low),
        },
    ];
    Block { lambda, classes, sequences }
}

fn ambiguous(lambda: &Rational) -> CategoryError {
    CategoryError::Ambiguous {
        candidates: classify_block(lambda).classes.iter().map(ToString::to_string).collect(),
    }
}

/// Identifies the `(𝔤, K)`-module generated by a Casimir eigenform.
///
/// Lowers to the bottom holomorphic piece `g` of weight `w`, then decides
/// between the lowest-weight classes of the block. At most `max_steps`
/// lowerings and raisings are spent on each chain.
pub fn identify_module(f: &NearlyHolomorphicForm, max_steps: usize) -> Result<ModuleClass, CategoryError> {
    let lambda = infinitesimal_character(f)?.lambda().clone();
    let k = f.definite_weight().map_err(crate::error::OperatorError::from)?;
    let p = f.depth();
    if p > max_steps {
        return Err(ambiguous(&lambda));
    }
    let g = iterate_lower(f, p)?;
    debug_assert!(g.is_holomorphic() && !g.is_zero());
    let w = k - 2 * p as i64;

    if w >= 1 {
        if p == 0 {
            return Ok(ModuleClass::Simple(int(w)));
        }
        // N(w) is simple, so f must be a multiple of δ^{(p)} g.
        let top = iterate_raise(&g, p)?;
        return if is_multiple(f, &top) {
            Ok(ModuleClass::Simple(int(w)))
        } else {
            Err(ambiguous(&lambda))
        };
    }

    // w <= 0: g is the bottom of F_{2-w} iff δ^{(1-w)} g = 0.
    let steps = (1 - w) as usize;
    if steps > max_steps {
        return Err(ambiguous(&lambda));
    }
    let finite = iterate_raise(&g, steps)?.is_zero();
    let top_weight = 2 - w;
    match (finite, p) {
        (true, 0) if w == 0 => Ok(ModuleClass::Trivial),
        (true, 0) => Ok(ModuleClass::Finite(top_weight)),
        (false, 0) => Ok(ModuleClass::Verma(int(w))),
        (true, _) if k < top_weight => Ok(ModuleClass::Finite(top_weight)),
        (true, _) => Ok(ModuleClass::DualVerma(int(w))),
        // a form reaching an infinite bottom from above would need a
        // non-semisimple Casimir
        (false, _) => Err(ambiguous(&lambda)),
    }
}

fn is_multiple(f: &NearlyHolomorphicForm, g: &NearlyHolomorphicForm) -> bool {
    let Some((r, n, c)) = g.terms().last().map(|(r, n, c)| (r, n, c.clone())) else {
        return f.is_zero();
    };
    let ratio = f.coeff(r, n) / c;
    let scaled = g.scale(&ratio);
    f.try_sub(&scaled).map(|d| d.is_zero()).unwrap_or(false)
}

/// A Hecke character family, described by tags only.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CharacterFamily {
    /// `+1` for `𝔛₁` (trivial at every real place), `-1` for `𝔛₋₁` (sign).
    pub archimedean_parity: i8,
    pub constraints: Vec<String>,
}

impl CharacterFamily {
    pub fn new(parity: i8, constraints: &[&str]) -> Self {
        CharacterFamily { archimedean_parity: parity, constraints: constraints.iter().map(|s| s.to_string()).collect() }
    }

    pub fn to_json_value(&self) -> Value {
        json!({ "archimedean_parity": self.archimedean_parity, "constraints": self.constraints })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FinitePart {
    /// `⊗_{v<∞} I_v(μ_v, s)` over a family.
    InducedFamily { family: CharacterFamily, s: Rational },
    /// `⊕_V R(V)` over definite binary spaces; see
    /// [`crate::quadratic::enumerate_definite_spaces`].
    RvEnumeration,
    Trivial,
    /// The module generated by the weight-two Eisenstein series.
    PiExtension,
}

impl FinitePart {
    pub fn to_json_value(&self) -> Value {
        match self {
            FinitePart::InducedFamily { family, s } => json!({
                "kind": "induced_family",
                "family": family.to_json_value(),
                "s": format_rational(s),
            }),
            FinitePart::RvEnumeration => json!({ "kind": "rv_enumeration", "signature": "(2,0)" }),
            FinitePart::Trivial => json!({ "kind": "trivial" }),
            FinitePart::PiExtension => json!({ "kind": "pi_extension" }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Archimedean {
    /// `L(k, …, k)`.
    Tensor(Vec<i64>),
    Module(ModuleClass),
    /// Carried by the finite part itself, as for `R(V)`.
    Included,
}

impl Archimedean {
    fn parallel(k: i64, d: usize) -> Self {
        Archimedean::Tensor(vec![k; d])
    }

    pub fn label(&self) -> String {
        match self {
            Archimedean::Tensor(ks) => {
                let ks: Vec<String> = ks.iter().map(ToString::to_string).collect();
                format!("L({})", ks.join(","))
            }
            Archimedean::Module(m) => m.to_string(),
            Archimedean::Included => "-".into(),
        }
    }

    pub fn to_json_value(&self) -> Value {
        match self {
            Archimedean::Tensor(ks) => json!({ "kind": "tensor", "weights": ks, "label": self.label() }),
            Archimedean::Module(m) => json!({ "kind": "module", "class": m.to_json_value() }),
            Archimedean::Included => json!({ "kind": "included" }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Summand {
    pub finite_part: FinitePart,
    pub archimedean: Archimedean,
}

impl Summand {
    pub fn to_json_value(&self) -> Value {
        json!({ "finite_part": self.finite_part.to_json_value(), "archimedean": self.archimedean.to_json_value() })
    }
}

/// A non-split extension between catalog pieces.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Extension {
    pub sub: Summand,
    pub middle: FinitePart,
    pub quotient: Summand,
}

impl Extension {
    pub fn to_json_value(&self) -> Value {
        json!({
            "sub": self.sub.to_json_value(),
            "middle": self.middle.to_json_value(),
            "quotient": self.quotient.to_json_value(),
            "split": false,
        })
    }
}

/// The decomposition of the Eisenstein part at parallel weight `k` over a
/// totally real field of degree `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionDescriptor {
    pub d: usize,
    pub k: i64,
    pub summands: Vec<Summand>,
    pub extensions: Vec<Extension>,
    /// Nearly holomorphic modulo holomorphic-generated, which is
    /// independent of `k`.
    pub holomorphic_quotient: Option<Summand>,
}

impl DecompositionDescriptor {
    /// The trivial module occurs as a summand or as the socle of an
    /// extension.
    pub fn contains_trivial(&self) -> bool {
        let is_trivial = |s: &Summand| s.finite_part == FinitePart::Trivial;
        self.summands.iter().any(is_trivial) || self.extensions.iter().any(|e| is_trivial(&e.sub))
    }

    pub fn has_pi_extension(&self) -> bool {
        self.summands.iter().any(|s| s.finite_part == FinitePart::PiExtension)
    }

    pub fn has_rv_hook(&self) -> bool {
        self.summands.iter().any(|s| s.finite_part == FinitePart::RvEnumeration)
    }

    pub fn to_json_value(&self) -> Value {
        json!({
            "d": self.d,
            "k": self.k,
            "summands": self.summands.iter().map(Summand::to_json_value).collect::<Vec<_>>(),
            "extensions": self.extensions.iter().map(Extension::to_json_value).collect::<Vec<_>>(),
            "holomorphic_quotient": self.holomorphic_quotient.as_ref().map(Summand::to_json_value),
        })
    }
}

pub fn catalog(d: usize, k: i64) -> Result<DecompositionDescriptor, CategoryError> {
    if d == 0 || k < 1 {
        return Err(CategoryError::Unmatched(format!("catalog needs d >= 1 and k >= 1, got d = {d}, k = {k}")));
    }
    let family = |parity: i8, constraints: &[&str], s: i64| FinitePart::InducedFamily {
        family: CharacterFamily::new(parity, constraints),
        s: int(s),
    };
    let trivial = |arch| Summand { finite_part: FinitePart::Trivial, archimedean: arch };
    let mut summands = Vec::new();
    let mut extensions = Vec::new();
    match k {
        1 => {
            summands.push(Summand {
                finite_part: family(-1, &["non-quadratic", "associate-classes"], 0),
                archimedean: Archimedean::parallel(1, d),
            });
            summands.push(Summand { finite_part: FinitePart::RvEnumeration, archimedean: Archimedean::Included });
        }
        2 if d == 1 => {
            summands.push(Summand { finite_part: family(1, &["nontrivial"], 1), archimedean: Archimedean::parallel(2, 1) });
            summands.push(Summand {
                finite_part: FinitePart::PiExtension,
                archimedean: Archimedean::Module(ModuleClass::DualVerma(Rational::zero())),
            });
            extensions.push(Extension {
                sub: trivial(Archimedean::Module(ModuleClass::Trivial)),
                middle: FinitePart::PiExtension,
                quotient: Summand { finite_part: family(1, &["trivial-only"], 1), archimedean: Archimedean::parallel(2, 1) },
            });
        }
        2 => {
            summands.push(Summand { finite_part: family(1, &[], 1), archimedean: Archimedean::parallel(2, d) });
            summands.push(trivial(Archimedean::Module(ModuleClass::Trivial)));
        }
        _ => {
            let parity = if k % 2 == 0 { 1 } else { -1 };
            summands.push(Summand { finite_part: family(parity, &[], k - 1), archimedean: Archimedean::parallel(k, d) });
        }
    }
    let holomorphic_quotient = (d == 1).then(|| trivial(Archimedean::Tensor(vec![2])));
    Ok(DecompositionDescriptor { d, k, summands, extensions, holomorphic_quotient })
}

/// Whether some dot-action image `w·λ` is integral and parallel; returns it
/// normalized into `ℤ_{≥1}^d`.
pub fn integral_parallel_filter(lambda: &[Rational]) -> Option<Vec<i64>> {
    let mut rep = Vec::with_capacity(lambda.len());
    for l in lambda {
        let r = reflect(l);
        let m = if r > *l { r } else { l.clone() };
        if !m.is_integer() {
            return None;
        }
        rep.push(m.to_integer().to_i64()?);
    }
    match rep.first() {
        Some(&first) if rep.iter().any(|&x| x != first) => None,
        _ => Some(rep),
    }
}

/// Weight of the holomorphic piece reached after `depth(f)` lowerings.
pub fn bottom_weight(f: &NearlyHolomorphicForm) -> Result<i64, CategoryError> {
    let k = f.definite_weight().map_err(crate::error::OperatorError::from)?;
    Ok(k - 2 * f.depth() as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{e2_paper, eisenstein};
    use crate::series::frac;

    #[test]
    fn block_shapes() {
        assert_eq!(classify_block(&int(1)).classes, vec![ModuleClass::Verma(int(1))]);
        let b5 = classify_block(&int(5));
        assert_eq!(b5.classes.len(), 5);
        assert_eq!(b5.sequences.len(), 2);
        assert!(b5.sequences.iter().all(ExactSequence::is_balanced));
        let half = classify_block(&frac(1, 2));
        assert_eq!(half.classes, vec![ModuleClass::Verma(frac(1, 2)), ModuleClass::Verma(frac(3, 2))]);
        assert!(half.classes.iter().all(ModuleClass::is_simple));
        assert_eq!(classify_block(&int(-3)), b5);
    }

    #[test]
    fn isomorphisms() {
        assert!(ModuleClass::Trivial.is_isomorphic(&ModuleClass::Simple(int(0))));
        assert!(ModuleClass::Trivial.is_isomorphic(&ModuleClass::Finite(2)));
        assert!(ModuleClass::Verma(int(4)).is_isomorphic(&ModuleClass::Simple(int(4))));
        assert!(!ModuleClass::Verma(int(-2)).is_isomorphic(&ModuleClass::Simple(int(-2))));
        assert_eq!(ModuleClass::Projective(int(3)).composition_factors(), vec![int(3), int(-1), int(3)]);
        assert_eq!(ModuleClass::DualVerma(int(0)).to_string(), "N(0)^∨");
    }

    #[test]
    fn identify_examples() {
        let e4 = eisenstein(4, 8).unwrap();
        assert_eq!(identify_module(&e4, 10).unwrap(), ModuleClass::Simple(int(4)));
        let one = NearlyHolomorphicForm::constant(0, int(1), 8);
        assert_eq!(identify_module(&one, 10).unwrap(), ModuleClass::Trivial);
        let e2 = e2_paper(8);
        assert_eq!(identify_module(&e2, 10).unwrap(), ModuleClass::DualVerma(int(0)));
        let raised = iterate_raise(&e2, 3).unwrap();
        assert_eq!(identify_module(&raised, 10).unwrap(), ModuleClass::DualVerma(int(0)));
        let raised_e4 = iterate_raise(&e4, 2).unwrap();
        assert_eq!(identify_module(&raised_e4, 10).unwrap(), ModuleClass::Simple(int(4)));
        assert!(matches!(identify_module(&raised_e4, 1), Err(CategoryError::Ambiguous { .. })));
    }

    #[test]
    fn catalog_branches() {
        let c14 = catalog(1, 4).unwrap();
        assert_eq!(c14.summands.len(), 1);
        assert!(!c14.contains_trivial());
        let c22 = catalog(2, 2).unwrap();
        assert!(c22.contains_trivial() && !c22.has_pi_extension());
        assert!(c22.holomorphic_quotient.is_none());
        let c12 = catalog(1, 2).unwrap();
        assert!(c12.contains_trivial() && c12.has_pi_extension());
        assert!(catalog(1, 1).unwrap().has_rv_hook());
        assert!(catalog(0, 1).is_err());
    }

    #[test]
    fn parallel_filter() {
        assert_eq!(integral_parallel_filter(&[int(3), int(3)]), Some(vec![3, 3]));
        assert_eq!(integral_parallel_filter(&[int(3), int(-1)]), Some(vec![3, 3]));
        assert_eq!(integral_parallel_filter(&[int(3), int(4)]), None);
        assert_eq!(integral_parallel_filter(&[frac(1, 2)]), None);
    }
}
