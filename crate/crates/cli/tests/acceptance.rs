//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any criterion fails or overruns its time limit.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use num_complex::Complex64;
use qheis::algebra::*;
use qheis::coeff::RatFun;
use qheis::lie::*;
use qheis::spectral::*;
use qheis_cli::json::OUTPUT_SCHEMA;
use qheis_cli::{eval_ast, eval_with, parse};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

mod common;

type Check = fn() -> Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn expr(text: &str) -> Element {
    eval_ast(&parse(text).expect("valid expression")).expect("evaluates")
}

fn half() -> NumericQ {
    NumericQ::ratio(1, 2).unwrap()
}

fn random_element(rng: &mut ChaCha8Rng) -> Element {
    let words = BasisWord::all_up_to(3);
    let n = rng.random_range(0..=4);
    (0..n)
        .map(|_| {
            let w = words[rng.random_range(0..words.len())];
            let mut c = RatFun::from_int(rng.random_range(1..=3) * if rng.random_bool(0.5) { 1 } else { -1 });
            if rng.random_bool(0.3) {
                c = c.checked_div(&RatFun::one_minus_q()).unwrap();
            }
            (w, c)
        })
        .collect()
}

fn random_elements(seed: u64, count: usize) -> Vec<Element> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_element(&mut rng)).collect()
}

fn defining_relations() -> Result<String, String> {
    for rel in ["A*B - q*B*A - I", "A*B - B*A - C", "A*C - q*C*A", "C*B - q*B*C"] {
        let x = expr(rel);
        ensure(x.is_zero(), || format!("{rel} normalizes to {x}"))?;
    }
    // the same relation between truncated matrices, away from the cut
    let (a, b) = (
        matrix(&Element::a(), &half(), 30).unwrap(),
        matrix(&Element::b(), &half(), 30).unwrap(),
    );
    let mut worst = 0.0f64;
    for i in 0..29 {
        for j in 0..29 {
            let (mut ab, mut ba) = (0.0, 0.0);
            for m in 0..30 {
                ab += a.get(i, m) * b.get(m, j);
                ba += b.get(i, m) * a.get(m, j);
            }
            worst = worst.max((ab - 0.5 * ba - if i == j { 1.0 } else { 0.0 }).abs());
        }
    }
    ensure(worst < 1e-12, || format!("matrix relation off by {worst:e}"))?;
    Ok(format!(
        "4 relations exact; truncated AB - qBA - I max entry {worst:.1e}"
    ))
}

fn oracle_equivalence() -> Result<String, String> {
    let words = BasisWord::all_up_to(3);
    for x in &words {
        for y in &words {
            let (ex, ey) = (Element::basis(*x), Element::basis(*y));
            ensure(multiply(&ex, &ey) == multiply_cascade(&ex, &ey), || {
                format!("{x} * {y} differs")
            })?;
        }
    }
    Ok(format!("{} products agree", words.len() * words.len()))
}

fn confluence() -> Result<String, String> {
    let printed = check_confluence(&RuleSet::printed(), 3);
    let bad: BTreeSet<String> = printed.unresolvable().map(|r| r.word.to_string()).collect();
    let want: BTreeSet<String> = ["BAC", "CBA"].into_iter().map(String::from).collect();
    ensure(bad == want, || format!("printed unresolvable set {bad:?}"))?;
    let fold = (&Element::c() - &Element::monomial(0, 2, 0))
        .scale(&RatFun::one_minus_q().recip().unwrap())
        .to_word_poly();
    let stuck = WordPoly::term(RatFun::q(), "BCA".parse().unwrap());
    for r in printed.unresolvable() {
        ensure(r.outcomes.len() == 2, || {
            format!("{} has {} outcomes", r.word, r.outcomes.len())
        })?;
        ensure(r.outcomes.contains(&fold) && r.outcomes.contains(&stuck), || {
            format!("{} outcomes {:?}", r.word, r.outcomes)
        })?;
    }
    let completed = check_confluence(&RuleSet::completed(), 6);
    ensure(completed.is_confluent(), || {
        format!(
            "completed unresolvable: {:?}",
            completed.unresolvable().map(|r| r.word.to_string()).collect::<Vec<_>>()
        )
    })?;
    Ok(format!(
        "printed: {} ambiguities, unresolvable {{BAC, CBA}} with outcomes (C - C^2)/(1-q) and q*BCA; completed: {} ambiguities, all resolve",
        printed.reports.len(),
        completed.reports.len()
    ))
}

/// `n x n` row-major matrices of `A`, `B`, `C` built from the weights directly.
struct Dense {
    n: usize,
    a: Vec<f64>,
    b: Vec<f64>,
    c: Vec<f64>,
}

impl Dense {
    fn new(q: f64, n: usize) -> Self {
        let mut a = vec![0.0; n * n];
        let mut b = vec![0.0; n * n];
        for i in 0..n - 1 {
            let alpha = ((1.0 - q.powi(i as i32 + 1)) / (1.0 - q)).sqrt();
            b[(i + 1) * n + i] = alpha;
            a[i * n + i + 1] = alpha;
        }
        let mut d = Dense { n, a, b, c: vec![] };
        d.c = d.bracket(&d.a, &d.b);
        d
    }

    fn mul(&self, x: &[f64], y: &[f64]) -> Vec<f64> {
        let n = self.n;
        let mut out = vec![0.0; n * n];
        for i in 0..n {
            for k in 0..n {
                let v = x[i * n + k];
                if v != 0.0 {
                    for j in 0..n {
                        out[i * n + j] += v * y[k * n + j];
                    }
                }
            }
        }
        out
    }

    fn bracket(&self, x: &[f64], y: &[f64]) -> Vec<f64> {
        self.mul(x, y).iter().zip(self.mul(y, x)).map(|(u, v)| u - v).collect()
    }
}

fn lemma_identities() -> Result<String, String> {
    let suite = verify_identity_suite(3, 3);
    let mut failing = Vec::new();
    for r in &suite {
        match r.identity {
            IdentityId::CPowerAPowerViaAd | IdentityId::BPowerCPowerViaAd => ensure(r.verdict, || {
                format!("{} k={:?} l={:?}: {}", r.identity, r.k, r.l, r.difference)
            })?,
            _ => {
                ensure(r.difference == &r.lhs - &r.rhs, || {
                    format!("{} k={:?} report inconsistent", r.identity, r.k)
                })?;
                if !r.verdict {
                    failing.push(format!("{} k={}", r.identity, r.k.unwrap()));
                }
            }
        }
    }
    let gamma_reports = suite.iter().filter(|r| r.l.is_none()).count();
    ensure(gamma_reports == 8, || format!("{gamma_reports} gamma reports"))?;
    let dense = Dense::new(0.5, 40);
    let minus_c: Vec<f64> = dense.c.iter().map(|v| -v).collect();
    let mut inner = dense.bracket(&dense.c, &dense.a);
    let mut worst = 0.0f64;
    for k in 0..=3 {
        let oracle = dense.bracket(&dense.b, &inner);
        let g = gamma(k);
        for n in 0..=10usize {
            let v = apply_numeric(&g, n as u64, &half()).map_err(|e| e.to_string())?;
            ensure(v.entries().all(|(m, _)| m == n as u64), || {
                format!("gamma({k}) not diagonal")
            })?;
            worst = worst.max((v.get(n as u64) - oracle[n * 40 + n]).abs());
        }
        inner = dense.bracket(&minus_c, &inner);
    }
    ensure(worst < 1e-12, || format!("gamma vs matrix oracle off by {worst:e}"))?;
    Ok(format!(
        "ad-constructions exact for k, l <= 3; gamma matches matrix oracle to {worst:.1e}; closed-form gamma reports with nonzero difference: {}",
        if failing.is_empty() { "none".to_string() } else { failing.join(", ") }
    ))
}

fn surrogates() -> Result<String, String> {
    let mut count = 0;
    for c in [
        RatFun::one(),
        RatFun::from_int(3).checked_div(&RatFun::one_minus_q()).unwrap(),
    ] {
        for side in [PowerSide::A, PowerSide::B] {
            for l in 2..=4 {
                for k in 1..=3 {
                    for n in 0..=6 {
                        let r = surrogate_residual(&c, side, l, n, k).map_err(|e| e.to_string())?;
                        ensure(r.is_zero(), || format!("{side:?} l={l} k={k} n={n}: {r}"))?;
                        count += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{count} residuals are the zero ket"))
}

fn calkin() -> Result<String, String> {
    let xs = random_elements(6, 200);
    let ys = random_elements(66, 100);
    for (x, y) in xs.iter().zip(&ys) {
        let lhs = calkin_image(&multiply(x, y));
        let rhs = &calkin_image(x) * &calkin_image(y);
        ensure(lhs == rhs, || format!("calkin({x} * {y})"))?;
    }
    let inv = RatFun::one_minus_q().recip().unwrap();
    ensure(calkin_image(&Element::a()) == LaurentPoly::monomial(inv, -1), || {
        "calkin(A)".into()
    })?;
    let [b_left, a_left, perturbed] = verify_fredholm_relations();
    ensure(b_left.verdict && a_left.verdict, || "Fredholm relation fails".into())?;
    ensure(!perturbed.verdict, || "perturbed control passes".into())?;
    for x in &xs {
        ensure(is_compact(x) == calkin_image(x).is_zero(), || {
            format!("compactness of {x}")
        })?;
    }
    Ok("100 products multiplicative; calkin(A) = D^-1/(1-q); both Fredholm relations hold, control fails; 200 compactness checks".into())
}

fn spectral_numerics() -> Result<String, String> {
    let q = half();
    for k in 1..=3u32 {
        let ck = Element::monomial(0, k, 0);
        let diag = matrix(&ck, &q, 50).map_err(|e| e.to_string())?.diagonal();
        for (n, d) in diag.iter().enumerate() {
            ensure((d - 0.5f64.powi((k as usize * n) as i32)).abs() < 1e-12, || {
                format!("C^{k} diagonal at {n}")
            })?;
        }
        let nrm = op_norm(&ck, &q, 200).map_err(|e| e.to_string())?;
        ensure((nrm - 1.0).abs() < 1e-12, || format!("||C^{k}|| = {nrm}"))?;
    }
    let mut worst = 0.0f64;
    for l in 1..=3u32 {
        let nrm = op_norm(&Element::monomial(l, 0, 0), &q, 200).map_err(|e| e.to_string())?;
        let err = (nrm - 2f64.powf(l as f64 / 2.0)).abs();
        ensure(err < 1e-8, || format!("||B^{l}|| = {nrm}"))?;
        worst = worst.max(err);
    }
    let r = *spectral_radius_est(&q, 50, 500)
        .map_err(|e| e.to_string())?
        .last()
        .unwrap();
    let r_err = (r - 2f64.sqrt()).abs();
    ensure(r_err < 1e-6, || format!("radius estimate {r}"))?;
    let i = *lower_index_est(&q, 500, 1001)
        .map_err(|e| e.to_string())?
        .last()
        .unwrap();
    let i_rel = (i - 2f64.sqrt()).abs() / 2f64.sqrt();
    ensure(i_rel < 0.01, || format!("lower index estimate {i}"))?;
    Ok(format!(
        "C^k diagonals exact to 1e-12; ||B^l|| error {worst:.1e}; radius error {r_err:.1e}; lower index relative error {i_rel:.2e} (O(1/k))"
    ))
}

fn point_spectrum() -> Result<String, String> {
    let q = half();
    let cs = [
        Complex64::new(0.0, 0.0),
        Complex64::new(0.7, 0.0),
        Complex64::new(1.0, 0.0),
        Complex64::from_polar(0.9 * 2f64.sqrt(), std::f64::consts::FRAC_PI_3),
    ];
    let mut worst = 0.0f64;
    for c in cs {
        let w = coherent_vector(c, &q, 300).map_err(|e| e.to_string())?;
        ensure(w.residual < 1e-8, || format!("residual {} at c = {c}", w.residual))?;
        worst = worst.max(w.residual);
    }
    let b = spectrum_facts(OperatorTag::B, Some(q.clone()));
    let a = spectrum_facts(OperatorTag::A, Some(q.clone()));
    let c = spectrum_facts(OperatorTag::CPower(2), Some(q));
    let shift_sq = RatFun::one_minus_q().recip().unwrap();
    ensure(
        (
            b.spectrum,
            b.point_spectrum,
            b.approx_point_spectrum,
            b.compression_spectrum,
        ) == (
            Spectrum::ClosedDisk,
            PointSpectrum::Empty,
            ApproxPointSpectrum::Circle,
            CompressionSpectrum::OpenDisk,
        ) && b.radius_sq == shift_sq,
        || "descriptors of B".into(),
    )?;
    ensure(
        (
            a.spectrum,
            a.point_spectrum,
            a.approx_point_spectrum,
            a.compression_spectrum,
        ) == (
            Spectrum::ClosedDisk,
            PointSpectrum::OpenDisk,
            ApproxPointSpectrum::ClosedDisk,
            CompressionSpectrum::Empty,
        ) && a.radius_sq == shift_sq,
        || "descriptors of A".into(),
    )?;
    ensure(
        (c.spectrum, c.point_spectrum, c.approx_point_spectrum)
            == (
                Spectrum::EigenvaluesWithZero,
                PointSpectrum::Eigenvalues,
                ApproxPointSpectrum::ClosureOfEigenvalues,
            )
            && c.radius_sq == RatFun::one()
            && c.eigenvalues_at(3) == Some(vec![1.0, 0.25, 0.0625]),
        || "descriptors of C^2".into(),
    )?;
    Ok(format!(
        "coherent residuals <= {worst:.1e}; descriptors of A, B, C^k match"
    ))
}

fn structure() -> Result<String, String> {
    let all = BasisWord::all_up_to(3);
    let lie: Vec<_> = all.iter().filter(|w| w.k() >= 1 || w.degree() == 1).copied().collect();
    let derived: Vec<_> = all.iter().filter(|w| w.k() >= 1).copied().collect();
    for x in &lie {
        for y in &lie {
            let br = bracket(&Element::basis(*x), &Element::basis(*y));
            ensure(decompose(&br).e_part.is_zero(), || format!("[{x}, {y}] leaves L0"))?;
        }
        for y in &derived {
            let br = bracket(&Element::basis(*x), &Element::basis(*y));
            ensure(is_compact(&br), || format!("[{x}, {y}] leaves the derived part"))?;
        }
    }
    for x in random_elements(9, 200) {
        let d = decompose(&x);
        let derived_only = d.e_part.is_zero() && d.linear_ab.0.is_zero() && d.linear_ab.1.is_zero();
        ensure(derived_only == is_compact(&x), || {
            format!("derived/compact mismatch on {x}")
        })?;
        ensure(d.recombine() == x, || format!("decomposition of {x}"))?;
    }
    Ok(format!(
        "{} bracket pairs close in L0; derived part is an ideal; 200 derived-iff-compact checks",
        lie.len() * lie.len()
    ))
}

fn parser() -> Result<String, String> {
    for x in random_elements(10, 200) {
        let text = x.to_string();
        let back = eval_ast(&parse(&text).map_err(|e| format!("{text}: {e}"))?).map_err(|e| e.to_string())?;
        ensure(back == x, || format!("round trip of {text}"))?;
    }
    for w in ["B*A*B", "A*B*A", "B*A*C", "C*B*A", "A*C*B"] {
        let ast = parse(w).map_err(|e| e.to_string())?;
        eval_with(&ast, &RuleSet::printed()).map_err(|e| e.to_string())?;
        eval_ast(&ast).map_err(|e| e.to_string())?;
    }
    let schema: Value = serde_json::from_str(OUTPUT_SCHEMA).map_err(|e| e.to_string())?;
    let validator = jsonschema::validator_for(&schema).map_err(|e| e.to_string())?;
    for args in common::COMMANDS {
        let out = Command::new(env!("CARGO_BIN_EXE_qheis"))
            .arg("--json")
            .args(*args)
            .output()
            .map_err(|e| e.to_string())?;
        ensure(out.status.success(), || {
            format!("{args:?} exited {:?}", out.status.code())
        })?;
        let doc: Value = serde_json::from_slice(&out.stdout).map_err(|e| format!("{args:?}: {e}"))?;
        let first = validator.iter_errors(&doc).next().map(|e| e.to_string());
        if let Some(err) = first {
            return Err(format!("{args:?}: {err}"));
        }
    }
    Ok(format!(
        "200 round trips; 5 ambiguity words; {} command invocations schema-valid",
        common::COMMANDS.len()
    ))
}

fn main() {
    let criteria: [(u32, &str, Option<u64>, Check); 10] = [
        (1, "defining relations", Some(1), defining_relations),
        (2, "engine equals cascade", Some(30), oracle_equivalence),
        (3, "confluence", Some(30), confluence),
        (4, "ad identities and gamma", Some(10), lemma_identities),
        (5, "Lie surrogates", Some(5), surrogates),
        (6, "Calkin image and Fredholm relations", None, calkin),
        (7, "spectral numerics", Some(60), spectral_numerics),
        (8, "point spectrum and descriptors", None, point_spectrum),
        (9, "structure of L0", None, structure),
        (10, "parser and JSON", None, parser),
    ];
    let mut failed = 0;
    for (id, name, limit, check) in criteria {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let over = limit.is_some_and(|s| elapsed > Duration::from_secs(s));
        let budget = limit.map_or(String::new(), |s| format!(", limit {s} s"));
        let (status, detail) = match (&result, over) {
            (Ok(d), false) => ("PASS", d.clone()),
            (Ok(d), true) => ("FAIL", format!("over time limit; {d}")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!(
            "criterion {id:>2} {status} [{name}] ({:.2} s{budget}): {detail}",
            elapsed.as_secs_f64()
        );
    }
    println!("acceptance: {} of 10 criteria pass", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
