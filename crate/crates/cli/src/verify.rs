//! The invariant suite behind `nearholo verify`. Inputs are fixed, so the
//! report is identical across runs.

use serde_json::{json, Value};

use nearholo::category_o::{catalog, classify_block, identify_module, ModuleClass};
use nearholo::decompose::decompose_level1;
use nearholo::generators::{e2_paper, eisenstein, level1_basis, theta_series, BinaryForm};
use nearholo::laurent::{constant_term_report, ConstantTermInput, Verdict};
use nearholo::operators::{casimir, infinitesimal_character, iterate_raise, lower, lower_classical, raise};
use nearholo::quadratic::{hilbert_symbol, is_coherent, Collection, Coherence, Place, QuadSpace2D};
use nearholo::series::{frac, int, NearlyHolomorphicForm, PiScalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn to_json_value(&self) -> Value {
        json!({ "name": self.name, "passed": self.passed, "detail": self.detail })
    }
}

type Probe = fn() -> Result<String, String>;

const PROBES: &[(&str, Probe)] = &[
    ("form_file_round_trip", form_file_round_trip),
    ("e2_lowering_constant", e2_lowering_constant),
    ("vanishing_orders", vanishing_orders),
    ("decomposition_round_trip", decomposition_round_trip),
    ("sl2_commutation", sl2_commutation),
    ("casimir_centrality", casimir_centrality),
    ("lowering_kernel", lowering_kernel),
    ("character_under_raising", character_under_raising),
    ("theta_siegel_weil", theta_siegel_weil),
    ("hilbert_reciprocity", hilbert_reciprocity),
    ("coherence", coherence),
    ("block_consistency", block_consistency),
    ("module_identification", module_identification),
    ("catalog_trivial_summand", catalog_trivial_summand),
];

pub fn run_suite() -> Vec<Check> {
    PROBES
        .iter()
        .map(|(name, probe)| {
            let (passed, detail) = match probe() {
                Ok(d) => (true, d),
                Err(d) => (false, d),
            };
            Check { name, passed, detail }
        })
        .collect()
}

const N: usize = 12;

fn samples() -> Vec<NearlyHolomorphicForm> {
    let mut out = vec![e2_paper(N), NearlyHolomorphicForm::constant(0, int(1), N)];
    for k in [4, 6, 8, 10, 12] {
        out.extend(level1_basis(k, N));
    }
    let seeds = out.clone();
    for f in seeds.iter().take(6) {
        let raised = iterate_raise(f, 2).expect("raising a weighted form");
        if !raised.is_zero() {
            out.push(raised);
        }
    }
    out
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn form_file_round_trip() -> Result<String, String> {
    let forms = samples();
    for f in &forms {
        let back = NearlyHolomorphicForm::from_json(&f.to_json()).map_err(|e| e.to_string())?;
        ensure(&back == f && back.to_json() == f.to_json(), || format!("round trip changed {}", f.to_json()))?;
    }
    Ok(format!("{} forms", forms.len()))
}

fn e2_lowering_constant() -> Result<String, String> {
    let e2 = e2_paper(N);
    let lowered = lower(&e2).map_err(|e| e.to_string())?;
    ensure(lowered == NearlyHolomorphicForm::constant(0, int(12), N), || format!("Λ E₂ = {lowered}"))?;
    let classical = lower_classical(&e2).map_err(|e| e.to_string())?.as_constant();
    let expected = PiScalar::pi_pow(nearholo::series::HalfInt::from_int(-1)).scale(&int(-3));
    ensure(classical.as_ref() == Some(&expected), || format!("L₂E₂ = {classical:?}"))?;
    let report = constant_term_report(&ConstantTermInput::unramified(2, 1)).map_err(|e| e.to_string())?;
    ensure(report.verdict == Verdict::SectionPlusResidue(Some(expected.clone())), || {
        format!("constant term verdict {:?}", report.verdict)
    })?;
    Ok(format!("both equal {expected}"))
}

fn vanishing_orders() -> Result<String, String> {
    let mut cases = Vec::new();
    for k in 3..=10 {
        for d in 1..=3 {
            cases.push((k, d));
        }
    }
    cases.extend([(2, 2), (2, 3), (2, 4)]);
    for &(k, d) in &cases {
        let r = constant_term_report(&ConstantTermInput::unramified(k, d)).map_err(|e| e.to_string())?;
        ensure(r.verdict == Verdict::PureSection, || format!("(k, d) = ({k}, {d}): {:?}", r.verdict))?;
    }
    Ok(format!("{} cases", cases.len()))
}

fn decomposition_round_trip() -> Result<String, String> {
    let mut count = 0;
    for k in [4, 6, 8, 12] {
        let basis = level1_basis(k, N);
        let mut f = NearlyHolomorphicForm::zero_of_weight(k + 4, N);
        for (i, g) in basis.iter().enumerate() {
            let raised = iterate_raise(g, 2).map_err(|e| e.to_string())?.scale(&frac(i as i64 + 1, 3));
            f = f.try_add(&raised).map_err(|e| e.to_string())?;
        }
        let e2 = iterate_raise(&e2_paper(N), ((k + 2) / 2) as usize).map_err(|e| e.to_string())?;
        f = f.try_add(&e2.scale(&int(-5))).map_err(|e| e.to_string())?;
        let d = decompose_level1(&f).map_err(|e| e.to_string())?;
        let back = d.reassemble(k + 4, N).map_err(|e| e.to_string())?;
        ensure(back == f, || format!("weight {} did not reassemble", k + 4))?;
        count += 1;
    }
    let d = decompose_level1(&e2_paper(N)).map_err(|e| e.to_string())?;
    ensure(d.terms.is_empty() && d.e2.is_some(), || "E₂ is not its own e2 term".into())?;
    Ok(format!("{count} forms and E₂"))
}

fn sl2_commutation() -> Result<String, String> {
    let forms = samples();
    for f in &forms {
        let k = f.definite_weight().map_err(|e| e.to_string())?;
        let dl = raise(&lower(f).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        let ld = lower(&raise(f).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        let bracket = dl.try_sub(&ld).map_err(|e| e.to_string())?;
        ensure(bracket == f.scale(&int(k)), || format!("[δ, Λ] ≠ {k} on {}", f.to_json()))?;
    }
    Ok(format!("{} forms", forms.len()))
}

fn casimir_centrality() -> Result<String, String> {
    let forms = samples();
    for f in &forms {
        let a = casimir(&raise(f).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        let b = raise(&casimir(f).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        ensure(a == b, || "Casimir does not commute with δ".into())?;
        let a = casimir(&lower(f).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        let b = lower(&casimir(f).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        ensure(a == b, || "Casimir does not commute with Λ".into())?;
    }
    Ok(format!("{} forms", forms.len()))
}

fn lowering_kernel() -> Result<String, String> {
    let forms = samples();
    for f in &forms {
        let killed = lower(f).map_err(|e| e.to_string())?.is_zero();
        ensure(killed == f.is_holomorphic(), || format!("Λ kernel mismatch on {}", f.to_json()))?;
    }
    Ok(format!("{} forms", forms.len()))
}

fn character_under_raising() -> Result<String, String> {
    let forms = samples();
    for f in &forms {
        let before = infinitesimal_character(f).map_err(|e| e.to_string())?;
        for r in 1..=3 {
            let after = infinitesimal_character(&iterate_raise(f, r).map_err(|e| e.to_string())?);
            match after {
                Ok(a) => ensure(a == before, || format!("character moved after {r} raisings"))?,
                // a constant of weight 0 is killed by δ
                Err(_) if f.depth() == 0 && f.weight() == Some(0) => {}
                Err(e) => return Err(e.to_string()),
            }
        }
    }
    Ok(format!("{} forms", forms.len()))
}

fn kronecker_minus_four(d: u64) -> i64 {
    match d % 4 {
        1 => 1,
        3 => -1,
        _ => 0,
    }
}

fn theta_siegel_weil() -> Result<String, String> {
    let bound = 50;
    let form = BinaryForm::new(1, 0, 1).map_err(|e| e.to_string())?;
    let theta = theta_series(&form, bound);
    for n in 0..=bound {
        let expected = if n == 0 {
            1
        } else {
            4 * (1..=n as u64).filter(|d| n as u64 % d == 0).map(kronecker_minus_four).sum::<i64>()
        };
        ensure(theta.coeff(0, n) == int(expected), || format!("r₂({n}) ≠ {expected}"))?;
    }
    Ok(format!("n <= {bound}"))
}

fn hilbert_reciprocity() -> Result<String, String> {
    let values = [-30i64, -7, -6, -5, -3, -2, -1, 1, 2, 3, 5, 6, 10, 12, 15, 21, 27, 98];
    let primes = [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97];
    let mut pairs = 0;
    for &a in &values {
        for &b in &values {
            let mut product = hilbert_symbol(&int(a), &int(b), Place::Real).map_err(|e| e.to_string())?;
            for &p in &primes {
                product *= hilbert_symbol(&int(a), &int(b), Place::Finite(p)).map_err(|e| e.to_string())?;
            }
            ensure(product == 1, || format!("Π_v ({a}, {b})_v = -1"))?;
            pairs += 1;
        }
    }
    Ok(format!("{pairs} pairs"))
}

fn coherence() -> Result<String, String> {
    let entries = [(1, 1), (1, 2), (2, 3), (-1, 5), (3, 7), (-2, -5), (6, 10)];
    let mut flips = 0;
    for &(a, b) in &entries {
        let space = QuadSpace2D::new(int(a), int(b)).map_err(|e| e.to_string())?;
        let c = Collection::of_space(&space).map_err(|e| e.to_string())?;
        let verdict = is_coherent(&c).map_err(|e| e.to_string())?;
        let Coherence::Coherent(Some(w)) = verdict else {
            return Err(format!("⟨{a}, {b}⟩ not realized: {verdict:?}"));
        };
        ensure(Collection::of_space(&w).map_err(|e| e.to_string())? == c, || format!("witness for ⟨{a}, {b}⟩ differs"))?;
        for place in space.relevant_places().into_iter().chain([Place::Finite(3), Place::Finite(7)]) {
            let chi = !nearholo::quadratic::is_local_square(&c.discriminant(), place).map_err(|e| e.to_string())?;
            if chi {
                let flipped = is_coherent(&c.flip(place)).map_err(|e| e.to_string())?;
                ensure(flipped == Coherence::Incoherent, || format!("flip at {place} stayed coherent"))?;
                flips += 1;
            }
        }
    }
    Ok(format!("{} spaces, {flips} flips", entries.len()))
}

fn block_consistency() -> Result<String, String> {
    for l in 2..=12 {
        let block = classify_block(&int(l));
        ensure(block.sequences.iter().all(|s| s.is_balanced()), || format!("unbalanced sequence at λ = {l}"))?;
        ensure(classify_block(&int(2 - l)) == block, || format!("orbit asymmetry at λ = {l}"))?;
    }
    Ok("λ = 2..12".into())
}

fn module_identification() -> Result<String, String> {
    let one = NearlyHolomorphicForm::constant(0, int(1), N);
    ensure(identify_module(&one, 16).map_err(|e| e.to_string())? == ModuleClass::Trivial, || "constant".into())?;
    let e2 = identify_module(&e2_paper(N), 16).map_err(|e| e.to_string())?;
    ensure(e2 == ModuleClass::DualVerma(int(0)), || format!("E₂ gave {e2}"))?;
    for k in [4, 6, 8, 10] {
        let e = eisenstein(k, N).map_err(|e| e.to_string())?;
        let class = identify_module(&e, 16).map_err(|e| e.to_string())?;
        ensure(class == ModuleClass::Simple(int(k)), || format!("E_{k} gave {class}"))?;
    }
    Ok("constants, E₂, E₄..E₁₀".into())
}

fn catalog_trivial_summand() -> Result<String, String> {
    for d in 1..=3 {
        for k in 1..=6 {
            let c = catalog(d, k).map_err(|e| e.to_string())?;
            ensure(c.contains_trivial() == (k == 2), || format!("trivial summand wrong at (d, k) = ({d}, {k})"))?;
        }
    }
    Ok("d <= 3, k <= 6".into())
}
