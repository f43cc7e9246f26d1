//! Verification checks run by `grigorchuk check`, each producing a
//! [`CheckReport`] serialised as one JSON line.

use std::collections::BTreeSet;
use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::cube::{commensuration_delta, commensuration_delta_within, CubeVertex};
use crate::element::GroupElement;
use crate::error::{Error, Result};
use crate::export::SchreierBall;
use crate::gamma::{ball, line_coordinate, prefix_lemma_violations, unlabelled_ball};
use crate::omega::OmegaSequence;
use crate::ray::Ray;
use crate::stabilizers::{
    faithfulness_exceptions, fixed_vertex_for_subgroup, generate_subgroup, orbit_growth_in,
    stabilizer_bound_check, verify_reduction_lemma, verify_restriction_lemma, ElementBall, GroupType,
    StabilizerTarget,
};
use crate::word::{Letter, Word};

/// Sequences used when none is given.
pub const DEFAULT_OMEGAS: [&str; 5] = [":012", ":01", ":02", ":12", "2:01"];

pub fn default_omegas() -> Vec<OmegaSequence> {
    DEFAULT_OMEGAS.iter().map(|s| s.parse().expect("valid default omega")).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Unsupported,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub omega: Option<String>,
    pub max_len: Option<usize>,
    pub parameters: Map<String, Value>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
    pub elapsed_ms: u64,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("serialisable report")
    }
}

struct Timer {
    check: &'static str,
    omega: Option<String>,
    max_len: Option<usize>,
    start: Instant,
}

impl Timer {
    fn start(check: &'static str, omega: Option<&OmegaSequence>, max_len: Option<usize>) -> Self {
        Self { check, omega: omega.map(ToString::to_string), max_len, start: Instant::now() }
    }

    /// Passes iff `counterexample` is `None`.
    fn finish(self, parameters: Value, counterexample: Option<Value>) -> CheckReport {
        let parameters = match parameters {
            Value::Object(map) => map,
            _ => Map::new(),
        };
        CheckReport {
            check: self.check.to_string(),
            omega: self.omega,
            max_len: self.max_len,
            parameters,
            status: if counterexample.is_none() { Status::Pass } else { Status::Fail },
            counterexample,
            elapsed_ms: self.start.elapsed().as_millis() as u64,
        }
    }
}

/// A report for a check that cannot run on `omega`.
pub fn unsupported(check: &str, omega: &OmegaSequence, error: &Error) -> CheckReport {
    CheckReport {
        check: check.to_string(),
        omega: Some(omega.to_string()),
        max_len: None,
        parameters: Map::from_iter([("reason".to_string(), json!(error.to_string()))]),
        status: Status::Unsupported,
        counterexample: None,
        elapsed_ms: 0,
    }
}

/// All seven bullets of the prefix lemma over rays with at most `depth` digits.
pub fn prefix_lemma(depth: usize) -> CheckReport {
    let t = Timer::start("prefix", None, None);
    let violations = prefix_lemma_violations(depth);
    let rays = Ray::all_with_digits_up_to(depth).len();
    let counterexample = violations.first().map(|(bullet, x)| json!({"bullet": bullet, "x": x}));
    t.finish(json!({"depth": depth, "rays": rays, "violations": violations.len()}), counterexample)
}

/// `l(gᵢ) ≤ (l(g)+1)/2` for every element of `stab(1)` in the ball.
pub fn reduction_lemma(ball: &ElementBall) -> Result<CheckReport> {
    let t = Timer::start("reduction", Some(ball.omega()), Some(ball.max_len()));
    let (checked, violations) = verify_reduction_lemma(ball)?;
    let counterexample = violations.first().map(|v| json!(v));
    Ok(t.finish(json!({"checked": checked, "violations": violations.len()}), counterexample))
}

/// Restrictions of elements of `stab(Γ₊)` and `stab(Γ̃₊)` to the first level,
/// one implication per clause, exactly as the lemma states them.
pub fn restriction_lemma(ball: &ElementBall) -> CheckReport {
    let t = Timer::start("projections", Some(ball.omega()), Some(ball.max_len()));
    let clauses = verify_restriction_lemma(ball);
    let summary: Vec<Value> = clauses
        .iter()
        .map(|c| json!({"clause": c.clause, "applicable": c.applicable, "violations": c.violations.len()}))
        .collect();
    let failing: Vec<Value> = clauses
        .iter()
        .filter(|c| !c.violations.is_empty())
        .map(|c| json!({"clause": c.clause, "elements": c.violations}))
        .collect();
    let counterexample = (!failing.is_empty()).then_some(Value::Array(failing));
    t.finish(json!({"clauses": summary}), counterexample)
}

/// `stab(Γ₊) ∩ ball = ⟨a, u_{ω,1}⟩ ≅ D₈` with `a·u_{ω,1}` of order 4.
pub fn stab_gamma_plus(ball: &mut ElementBall) -> Result<CheckReport> {
    let t = Timer::start("stab_gamma_plus", Some(ball.omega()), Some(ball.max_len()));
    let omega = ball.omega().clone();
    let table = ball.stabilizer(&StabilizerTarget::GammaPlus);
    let a = GroupElement::generator(&omega, Letter::A);
    let u = GroupElement::generator(&omega, omega.u_generator(1));
    let generated = generate_subgroup(&[a.clone(), u.clone()], 64)?;
    let keys = |ball: &mut ElementBall, els: &[GroupElement]| -> BTreeSet<_> { els.iter().map(|g| ball.key(g)).collect() };
    let stab_keys = keys(ball, table.elements());
    let gen_keys = keys(ball, &generated);
    let au_order = ball.solver().order(&a.mul(&u)?, 64);
    let ok = table.order() == 8 && table.group_type() == GroupType::D8 && stab_keys == gen_keys && au_order == Some(4);
    let params = json!({
        "order": table.order(),
        "type": table.group_type().to_string(),
        "elements": table.words(),
        "u": u.word().to_string(),
        "au_order": au_order,
        "generated_by_a_u": stab_keys == gen_keys,
    });
    Ok(t.finish(params.clone(), (!ok).then_some(params)))
}

/// `stab(Γ̃₊) ∩ ball = {1, b, c, d} ≅ ℤ/2 × ℤ/2`.
pub fn stab_gamma_plus_tilde(ball: &mut ElementBall) -> CheckReport {
    let t = Timer::start("stab_gamma_plus_tilde", Some(ball.omega()), Some(ball.max_len()));
    let table = ball.stabilizer(&StabilizerTarget::GammaPlusTilde);
    let mut words = table.words();
    words.sort();
    let orders = table.element_orders();
    let involutions = orders.as_ref().is_some_and(|o| o.iter().filter(|&&k| k == 2).count() == 3);
    let ok = words == ["1", "b", "c", "d"] && table.group_type() == GroupType::Z2xZ2 && involutions;
    let params = json!({"order": table.order(), "type": table.group_type().to_string(), "elements": words});
    t.finish(params.clone(), (!ok).then_some(params))
}

/// `stab(Γ₊) ∩ stab(Γ̃₊) ∩ ball = {1, u_{ω,1}}`.
pub fn stab_intersection(ball: &mut ElementBall) -> CheckReport {
    let t = Timer::start("stab_intersection", Some(ball.omega()), Some(ball.max_len()));
    let omega = ball.omega().clone();
    let both: Vec<String> = ball
        .elements()
        .iter()
        .filter(|e| {
            StabilizerTarget::GammaPlus.is_stabilized_by(&e.element)
                && StabilizerTarget::GammaPlusTilde.is_stabilized_by(&e.element)
        })
        .map(|e| e.element.word().to_string())
        .collect();
    let expected = vec!["1".to_string(), omega.u_generator(1).to_string()];
    let params = json!({"elements": both});
    t.finish(params.clone(), (both != expected).then_some(params))
}

/// Finite subgroups `⟨a⟩`, `⟨b⟩`, `⟨d⟩`, `⟨a, u_{ω,1}⟩` and `{1, b, c, d}`
/// each fix the vertex `χ_Λ`, `Λ = ⋃ hΓ₊`.
pub fn fixed_vertices(omega: &OmegaSequence) -> Result<CheckReport> {
    let t = Timer::start("fixed_vertex", Some(omega), None);
    let g = |x| GroupElement::generator(omega, x);
    let subgroups: Vec<(String, Vec<GroupElement>)> = vec![
        ("<a>".into(), vec![g(Letter::A)]),
        ("<b>".into(), vec![g(Letter::B)]),
        ("<d>".into(), vec![g(Letter::D)]),
        (format!("<a,{}>", omega.u_generator(1)), vec![g(Letter::A), g(omega.u_generator(1))]),
        ("{1,b,c,d}".into(), vec![g(Letter::B), g(Letter::C)]),
    ];
    let mut results = Vec::new();
    let mut failure = None;
    for (name, generators) in subgroups {
        let h = generate_subgroup(&generators, 64)?;
        let v = fixed_vertex_for_subgroup(&h)?;
        let fixed = h.iter().all(|x| v.act(x) == v);
        if !fixed && failure.is_none() {
            failure = Some(json!({"subgroup": name, "vertex": v}));
        }
        results.push(json!({"subgroup": name, "order": h.len(), "vertex": v, "fixed": fixed}));
    }
    Ok(t.finish(json!({"subgroups": results}), failure))
}

pub fn random_word(rng: &mut StdRng, max_len: usize) -> Word {
    let len = rng.random_range(0..=max_len);
    Word::reduce((0..len).map(|_| Letter::ALL[rng.random_range(0..4)]))
}

/// A random vertex whose delta has at most `size` rays, each with at most `digits` digits.
pub fn random_vertex(rng: &mut StdRng, size: usize, digits: usize) -> CubeVertex {
    let rays = Ray::all_with_digits_up_to(digits);
    let n = rng.random_range(0..=size);
    CubeVertex::from_delta((0..n).map(|_| rays[rng.random_range(0..rays.len())].clone()))
}

/// `Γ₊ Δ gΓ₊` is finite and inside the ball of radius `l(g)` (compared with a
/// wider scan), and `(gh)v = g(hv)`.
pub fn commensuration(omega: &OmegaSequence, words: usize, triples: usize, seed: u64) -> CheckReport {
    let t = Timer::start("commensuration", Some(omega), Some(16));
    let mut rng = StdRng::seed_from_u64(seed);
    let mut failure = None;
    let mut largest = 0;
    for _ in 0..words {
        let g = GroupElement::new(omega.clone(), random_word(&mut rng, 16));
        let delta = commensuration_delta(&g);
        largest = largest.max(delta.len());
        let wide = commensuration_delta_within(&g, g.len() + 8);
        let near = ball(omega, &Ray::zero(), g.len());
        if delta != wide || !delta.is_subset(&near) {
            failure = Some(json!({"g": g.word().to_string(), "delta": delta, "wide_scan": wide}));
            break;
        }
    }
    if failure.is_none() {
        for _ in 0..triples {
            let g = GroupElement::new(omega.clone(), random_word(&mut rng, 8));
            let h = GroupElement::new(omega.clone(), random_word(&mut rng, 8));
            let v = random_vertex(&mut rng, 4, 6);
            let gh = g.mul(&h).expect("same omega");
            if v.act(&gh) != v.act(&h).act(&g) {
                failure = Some(json!({"g": g.word().to_string(), "h": h.word().to_string(), "v": v}));
                break;
            }
        }
    }
    t.finish(json!({"words": words, "triples": triples, "seed": seed, "largest_delta": largest}), failure)
}

/// Every non-trivial ball element moves one of the three witness vertices.
pub fn faithfulness(ball: &ElementBall) -> CheckReport {
    let t = Timer::start("faithful", Some(ball.omega()), Some(ball.max_len()));
    let exceptions = faithfulness_exceptions(ball);
    let counterexample = exceptions.first().map(|w| json!({"g": w.to_string()}));
    t.finish(json!({"elements": ball.len(), "exceptions": exceptions.len()}), counterexample)
}

/// `|stab(v) ∩ ball| ≤ 8·4·4ⁿ` for random vertices with delta depth at most 4.
pub fn stabilizer_bound(ball: &mut ElementBall, samples: usize, seed: u64) -> CheckReport {
    let t = Timer::start("bound", Some(ball.omega()), Some(ball.max_len()));
    let mut rng = StdRng::seed_from_u64(seed);
    let mut failure = None;
    let mut largest = 0;
    for _ in 0..samples {
        let v = random_vertex(&mut rng, 4, 4);
        let report = stabilizer_bound_check(ball, &v);
        largest = largest.max(report.order);
        if !report.holds {
            failure = Some(json!({"vertex": v, "report": report}));
            break;
        }
    }
    t.finish(json!({"samples": samples, "seed": seed, "largest_order": largest}), failure)
}

/// `d(v, gv)` grows with `l(g)`: monotone and strictly larger at 12 than at 4.
pub fn unbounded_orbit(ball: &ElementBall, v: &CubeVertex) -> CheckReport {
    let t = Timer::start("unbounded_orbit", Some(ball.omega()), Some(ball.max_len()));
    let rows = orbit_growth_in(ball, v);
    let monotone = rows.windows(2).all(|p| p[0].max_distance <= p[1].max_distance);
    let grows = ball.max_len() >= 12 && rows[12].max_distance > rows[4].max_distance;
    let values: Vec<usize> = rows.iter().map(|r| r.max_distance).collect();
    let params = json!({"vertex": v, "max_distance": values});
    t.finish(params.clone(), (!(monotone && grows)).then_some(params))
}

/// All balls of radius `radius` around `0^∞` coincide as unlabelled graphs.
pub fn unlabelled_graphs(omegas: &[OmegaSequence], radius: usize) -> CheckReport {
    let t = Timer::start("unlabelled_graph", None, None);
    let reference = unlabelled_ball(&omegas[0], radius);
    let differing: Vec<String> = omegas[1..]
        .iter()
        .filter(|w| unlabelled_ball(w, radius) != reference)
        .map(ToString::to_string)
        .collect();
    let names: Vec<String> = omegas.iter().map(ToString::to_string).collect();
    let counterexample = (!differing.is_empty()).then(|| json!({"reference": names[0], "differing": differing}));
    t.finish(json!({"radius": radius, "omegas": names, "edges": reference.len()}), counterexample)
}

/// Edges drawn in the published pictures of `Γ_{(012)^∞}` and `Γ_{(01)^∞}`
/// between `11010^∞` and `1010^∞`. `L`/`R` mark edges leaving the picture.
pub fn figure_fixture(omega: &OmegaSequence) -> Option<&'static [(&'static str, &'static str, char)]> {
    const G012: &[(&str, &str, char)] = &[
        ("101", "R", 'a'), ("1", "101", 'd'), ("1", "101", 'b'), ("1", "1", 'c'), ("101", "101", 'c'),
        ("0inf", "1", 'a'), ("0inf", "0inf", 'd'), ("0inf", "01", 'b'), ("0inf", "01", 'c'),
        ("01", "01", 'd'), ("01", "11", 'a'), ("11", "11", 'b'), ("11", "1101", 'd'), ("11", "1101", 'c'),
        ("1101", "1101", 'b'), ("1101", "L", 'a'),
    ];
    const G01: &[(&str, &str, char)] = &[
        ("101", "R", 'a'), ("1", "101", 'd'), ("1", "101", 'b'), ("1", "1", 'c'), ("101", "101", 'c'),
        ("0inf", "1", 'a'), ("0inf", "0inf", 'd'), ("0inf", "01", 'b'), ("0inf", "01", 'c'),
        ("01", "01", 'd'), ("01", "11", 'a'), ("11", "11", 'd'), ("11", "1101", 'b'), ("11", "1101", 'c'),
        ("1101", "1101", 'd'), ("1101", "L", 'a'),
    ];
    match omega.to_string().as_str() {
        ":012" => Some(G012),
        ":01" => Some(G01),
        _ => None,
    }
}

/// Compares exported edges of a Schreier ball (records `(source, target, label)`)
/// with a picture fixture. Returns the mismatches.
pub fn compare_with_figure(
    omega: &OmegaSequence,
    exported: &[(String, String, String)],
    fixture: &[(&str, &str, char)],
) -> Vec<String> {
    let norm = |x: &str, y: &str, l: &str| {
        let (x, y) = if x <= y { (x.to_string(), y.to_string()) } else { (y.to_string(), x.to_string()) };
        (x, y, l.to_string())
    };
    let pictured: BTreeSet<String> =
        fixture.iter().flat_map(|(x, y, _)| [x, y]).filter(|v| **v != "L" && **v != "R").map(|v| v.to_string()).collect();
    let inner_expected: BTreeSet<_> = fixture
        .iter()
        .filter(|(x, y, _)| pictured.contains(*x) && pictured.contains(*y))
        .map(|(x, y, l)| norm(x, y, &l.to_string()))
        .collect();
    let inner_exported: BTreeSet<_> = exported
        .iter()
        .filter(|(x, y, _)| pictured.contains(x) && pictured.contains(y))
        .map(|(x, y, l)| norm(x, y, l))
        .collect();
    let mut mismatches: Vec<String> = inner_expected
        .symmetric_difference(&inner_exported)
        .map(|(x, y, l)| format!("edge {x} -{l}- {y}"))
        .collect();
    for (x, side, label) in fixture.iter().filter(|(_, y, _)| *y == "L" || *y == "R") {
        let leaving: Vec<&(String, String, String)> = exported
            .iter()
            .filter(|(s, t, l)| l == &label.to_string() && (s == x || t == x))
            .filter(|(s, t, _)| !pictured.contains(s) || !pictured.contains(t))
            .collect();
        let ok = match leaving.as_slice() {
            [] => true,
            [(s, t, _)] => {
                let other: Ray = if s == x { t } else { s }.parse().expect("exported ray");
                let c = line_coordinate(omega, &other);
                if *side == "R" { c > 0 } else { c < 0 }
            }
            _ => false,
        };
        // a leaving edge that is absent must lie beyond the exported radius
        let present_elsewhere = exported.iter().any(|(s, t, l)| {
            l == &label.to_string() && (s == x || t == x) && pictured.contains(s) && pictured.contains(t)
        });
        if !ok || present_elsewhere {
            mismatches.push(format!("edge {x} -{label}- {side}"));
        }
    }
    mismatches
}

/// The radius-3 ball of `Γ_ω` matches the published picture.
pub fn schreier_figure(omega: &OmegaSequence) -> Option<CheckReport> {
    let fixture = figure_fixture(omega)?;
    let t = Timer::start("schreier_figure", Some(omega), None);
    let ball = SchreierBall::new(omega, 3);
    let exported: Vec<(String, String, String)> =
        ball.edges.iter().map(|e| (e.source.to_string(), e.target.to_string(), e.label.to_string())).collect();
    let mismatches = compare_with_figure(omega, &exported, fixture);
    let counterexample = (!mismatches.is_empty()).then(|| json!(mismatches));
    Some(t.finish(json!({"radius": 3, "edges": exported.len()}), counterexample))
}

/// Selects checks by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    Prefix,
    Reduction,
    Projections,
    Stab,
    Commensuration,
    Faithful,
    Bound,
}

pub struct SuiteOptions {
    pub max_len: usize,
    pub depth: usize,
    pub seed: u64,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        Self { max_len: 10, depth: 12, seed: 2024 }
    }
}

/// Runs `suite` over `omegas`, streaming reports to `sink`.
pub fn run_suite(suite: Suite, omegas: &[OmegaSequence], options: &SuiteOptions, sink: &mut dyn FnMut(CheckReport)) {
    use Suite::*;
    if matches!(suite, All | Prefix) {
        sink(prefix_lemma(options.depth));
    }
    if suite == All {
        sink(unlabelled_graphs(omegas, 20));
    }
    for omega in omegas {
        if matches!(suite, All | Commensuration) {
            sink(commensuration(omega, 1000, 200, options.seed));
        }
        if suite == All {
            if let Some(report) = schreier_figure(omega) {
                sink(report);
            }
        }
        if matches!(suite, Prefix | Commensuration) {
            continue;
        }
        let name = match suite {
            All => "all",
            Reduction => "reduction",
            Projections => "projections",
            Stab => "stab",
            Faithful => "faithful",
            _ => "bound",
        };
        let mut ball = match ElementBall::enumerate(omega, options.max_len) {
            Ok(ball) => ball,
            Err(e) => {
                sink(unsupported(name, omega, &e));
                continue;
            }
        };
        let mut emit = |r: Result<CheckReport>| match r {
            Ok(report) => sink(report),
            Err(e) => sink(unsupported(name, omega, &e)),
        };
        if matches!(suite, All | Reduction) {
            emit(reduction_lemma(&ball));
        }
        if matches!(suite, All | Projections) {
            emit(Ok(restriction_lemma(&ball)));
        }
        if matches!(suite, All | Stab) {
            emit(stab_gamma_plus(&mut ball));
            emit(Ok(stab_gamma_plus_tilde(&mut ball)));
            emit(Ok(stab_intersection(&mut ball)));
            emit(fixed_vertices(omega));
        }
        if matches!(suite, All | Faithful) {
            emit(Ok(faithfulness(&ball)));
        }
        if matches!(suite, All | Bound) {
            emit(Ok(stabilizer_bound(&mut ball, 50, options.seed)));
        }
        if suite == All {
            if ball.max_len() >= 12 {
                emit(Ok(unbounded_orbit(&ball, &CubeVertex::base())));
            } else {
                emit(ElementBall::enumerate(omega, 12).map(|b| unbounded_orbit(&b, &CubeVertex::base())));
            }
        }
    }
}
