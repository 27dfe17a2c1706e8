//! The subcommands. Each returns an [`Outcome`]: a text report, a JSON
//! report and whether every requested check passed.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use anyhow::{bail, Context, Result};
use serde_json::{json, Value};

use sl3res_core::anick::{
    complex_check, degree_table, exactness_check, graded_matrices, matches_w, window_complex, Level,
};
use sl3res_core::field::Fp;
use sl3res_core::free_algebra::{format_poly, parse_poly, parse_syntax, parse_word, Alphabet, GenKind, OrderSpec};
use sl3res_core::kostant::{
    big_rewrite_system, dimension_check, relation_suite, small_groebner_basis, truncated_big_system, Window,
};
use sl3res_core::minimal::{coefficient_lemma_checks, report_on, window_minimal_complex};
use sl3res_core::rewriting::{is_complete, is_complete_up_to, is_reduced, RewriteRule, RewriteSystem};

use crate::args::{Command, Common};
use crate::json::{self, Basis, SystemKind};

#[derive(Debug)]
pub struct Outcome {
    pub text: String,
    pub json: Value,
    pub passed: bool,
}

pub fn run(cmd: &Command) -> Result<Outcome> {
    match cmd {
        Command::Nf { common, bound, expr } => nf(common, *bound, expr),
        Command::Gb { common, big, bound, rules } => match rules {
            Some(path) => {
                let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
                let basis: Basis = serde_json::from_str(&text).context("parsing basis JSON")?;
                if basis.p != common.p {
                    bail!("--p {} does not match the basis file (p = {})", common.p, basis.p);
                }
                gb_outcome(reingest(&basis)?, basis.system, basis.j, basis.m, basis.deg_bound)
            }
            None => gb(common, *big, *bound),
        },
        Command::Verify { common } => verify(common),
        Command::Anick { common, max_deg } => anick(common, *max_deg),
        Command::Minimal { common, max_deg } => minimal(common, *max_deg),
    }
}

fn window(c: &Common) -> Result<Window> {
    Ok(Window::new(c.p, c.j, c.m)?)
}

fn default_deg(c: &Common, max_deg: Option<u32>) -> Result<u32> {
    let d = max_deg.unwrap_or(3 * c.p * c.p);
    if d == 0 {
        bail!("--max-deg must be at least 1");
    }
    Ok(d)
}

/// Straightening rules up to `bound`, restricted to powers `<= bound` when
/// that subsystem is closed.
fn big_system(p: u32, bound: u32) -> Result<RewriteSystem<Fp>> {
    let f = Fp::new(p)?;
    let full = big_rewrite_system(&f, bound);
    Ok(full.restrict_to_subalphabet(Alphabet::divided(bound).letters()).unwrap_or(full))
}

fn max_power(c: &Common) -> Result<u32> {
    let q = c.p.checked_pow(c.m).context("p^m overflows")?;
    Ok(q - 1)
}

fn nf(c: &Common, bound: Option<u32>, expr: &str) -> Result<Outcome> {
    let terms = parse_syntax(expr)?;
    let small = |k: GenKind| matches!(k, GenKind::A | GenKind::B);
    let kinds: Vec<bool> = terms.iter().flat_map(|t| t.word.iter().map(|g| small(g.kind))).collect();
    let divided = kinds.iter().any(|s| !s);
    if divided && kinds.iter().any(|s| *s) {
        bail!("expression mixes a/b letters with divided letters");
    }
    let (sys, kind) = if divided {
        let b = match bound {
            Some(b) => b,
            None => max_power(c)?,
        };
        (big_system(c.p, b)?, SystemKind::Big)
    } else {
        (small_groebner_basis(&window(c)?)?, SystemKind::Small)
    };
    let f = parse_poly(expr, sys.field(), sys.alphabet(), sys.order())?;
    let nf = sys.normal_form(&f);
    let text = format_poly(&nf);
    let terms: Vec<Value> =
        nf.terms().iter().map(|(w, k)| json!({"word": json::word(w), "coeff": json::coeff(sys.field(), k)})).collect();
    Ok(Outcome {
        text: format!("{text}\n"),
        json: json!({"input": expr, "system": kind, "normal_form": text, "terms": terms}),
        passed: true,
    })
}

fn gb(c: &Common, big: bool, bound: Option<u32>) -> Result<Outcome> {
    let (sys, kind, deg_bound) = if big {
        match bound {
            Some(b) => (big_system(c.p, b)?, SystemKind::Big, Some(b)),
            None => (truncated_big_system(c.p, c.m)?, SystemKind::Big, None),
        }
    } else {
        (small_groebner_basis(&window(c)?)?, SystemKind::Small, None)
    };
    gb_outcome(sys.sorted(), kind, c.j, c.m, deg_bound)
}

fn gb_outcome(sys: RewriteSystem<Fp>, system: SystemKind, j: u32, m: u32, deg_bound: Option<u32>) -> Result<Outcome> {
    let cert = match deg_bound {
        Some(d) => is_complete_up_to(&sys, d),
        None => is_complete(&sys),
    };
    let reduced = is_reduced(&sys);
    let mut failures = Vec::new();
    if !reduced {
        failures.push("basis is not reduced".to_string());
    }
    failures.extend(cert.failures.iter().map(|(t, r)| format!("critical pair at {t} leaves {}", format_poly(r))));
    let basis = Basis {
        p: sys.field().p(),
        j,
        m,
        system,
        deg_bound,
        alphabet: sys.alphabet().letters().iter().map(ToString::to_string).collect(),
        rules: json::rules(&sys),
        reduced,
        certificate: json::certificate(&cert),
        passed: failures.is_empty(),
        failures,
    };
    let mut text = String::new();
    for r in sys.rules() {
        writeln!(text, "{} -> {}", r.lhs, format_poly(&r.rhs))?;
    }
    writeln!(text, "rules: {}", sys.len())?;
    writeln!(text, "reduced: {reduced}")?;
    let scope = deg_bound.map(|d| format!(" (pairs with Deg <= {d})")).unwrap_or_default();
    writeln!(text, "complete: {}{scope}, {} critical pairs, {} failing", cert.complete, cert.pair_count, cert.failures.len())?;
    for f in &basis.failures {
        writeln!(text, "  FAIL {f}")?;
    }
    Ok(Outcome { text, passed: basis.passed, json: serde_json::to_value(&basis)? })
}

/// Rebuild a rewriting system from a `gb` report.
pub fn reingest(b: &Basis) -> Result<RewriteSystem<Fp>> {
    let f = Fp::new(b.p)?;
    let (alphabet, order) = match b.system {
        SystemKind::Small => (Window::new(b.p, b.j, b.m)?.alphabet(), OrderSpec::deglex()),
        SystemKind::Big => {
            let tokens = parse_syntax(&b.alphabet.join("*"))?;
            let top = tokens.iter().flat_map(|t| t.word.iter().map(|g| g.index)).max().unwrap_or(0);
            (Alphabet::divided(top), OrderSpec::BigLl)
        }
    };
    let listed: Vec<String> = alphabet.letters().iter().map(ToString::to_string).collect();
    if listed != b.alphabet {
        bail!("alphabet in the basis file does not match its window");
    }
    let rules = b
        .rules
        .iter()
        .map(|r| {
            let lhs = parse_word(&r.lhs.join("*"), &alphabet)?;
            let rhs = parse_poly(&r.rhs, &f, &alphabet, &order)?;
            Ok(RewriteRule { lhs, rhs })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RewriteSystem::new(f, order, alphabet, rules)?)
}

fn status(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "fail"
    }
}

fn verify(c: &Common) -> Result<Outcome> {
    let win = window(c)?;
    let f = win.field();
    let suite = relation_suite(&win)?;
    let dim = dimension_check(&win)?;
    let lemmas = coefficient_lemma_checks(&win)?;
    let mut failures = Vec::new();
    let mut text = String::new();

    writeln!(text, "relations (p = {}, window {}..{}):", win.p, win.j, win.m)?;
    let mut relations = Vec::new();
    for r in &suite.relations {
        writeln!(text, "  {:<28} {}", r.name, status(r.passed))?;
        let mut entry = json!({"relation": r.name, "polynomial": format_poly(&r.poly), "status": status(r.passed)});
        if let Some(res) = &r.residual {
            failures.push(format!("relation {} does not vanish", r.name));
            entry["residual"] = res
                .terms()
                .map(|(m, k)| json!({"monomial": m.as_array(), "coeff": json::coeff(&f, k)}))
                .collect();
        }
        relations.push(entry);
    }
    let sign_variants: Vec<Value> = suite
        .sign_variants
        .iter()
        .map(|s| json!({"relation": s.family.to_string(), "variant": s.variant, "holds": s.holds}))
        .collect();
    let mut generation = Vec::new();
    for g in &suite.generation {
        let expr = g.expression.as_ref().map(format_poly);
        match &expr {
            Some(e) => writeln!(text, "  e_ab^(p^{}) = {e}", g.l)?,
            None => {
                writeln!(text, "  e_ab^(p^{}) not generated", g.l)?;
                failures.push(format!("e_ab^(p^{}) is not in the span of the small generators", g.l));
            }
        }
        generation.push(json!({"l": g.l, "expression": expr}));
    }

    writeln!(
        text,
        "dimension: {} irreducible words, oracle rank {}, expected {}: {}",
        dim.irreducible_count,
        dim.oracle_rank,
        dim.expected,
        status(dim.passed())
    )?;
    if !dim.passed() {
        failures.push(format!("dimension {} != {}", dim.irreducible_count, dim.expected));
    }

    writeln!(text, "coefficient lemmas:")?;
    let mut lemma_json = Vec::new();
    for ch in &lemmas.checks {
        writeln!(text, "  {:<40} expected {:>3} found {:>3}  {}", ch.name, ch.expected, ch.found, status(ch.passed))?;
        if !ch.passed {
            failures.push(format!("{}: expected {}, found {}", ch.name, ch.expected, ch.found));
        }
        lemma_json.push(json!({"name": ch.name, "expected": ch.expected, "found": ch.found, "status": status(ch.passed)}));
    }
    let passed = failures.is_empty();
    writeln!(text, "overall: {}", status(passed))?;
    Ok(Outcome {
        text,
        passed,
        json: json!({
            "window": {"p": win.p, "j": win.j, "m": win.m},
            "relations": relations,
            "sign_variants": sign_variants,
            "generation": generation,
            "dimension": {
                "expected": dim.expected,
                "irreducible_count": dim.irreducible_count,
                "oracle_rank": dim.oracle_rank,
                "pbw_count": dim.pbw_count,
                "status": status(dim.passed()),
            },
            "coefficient_lemmas": lemma_json,
            "passed": passed,
            "failures": failures,
        }),
    })
}

fn anick(c: &Common, max_deg: Option<u32>) -> Result<Outcome> {
    let win = window(c)?;
    let bound = default_deg(c, max_deg)?;
    let cx = window_complex(&win)?;
    let f = *cx.system().field();
    let chains = cx.chains();
    let check = complex_check(&cx, bound)?;
    let exact = exactness_check(&cx, bound)?;
    let w = matches_w(chains);
    let mut failures = check.failures.clone();
    failures.extend(exact.failing_degrees().iter().map(|d| format!("not exact in degree {d}")));

    let mut matrices = BTreeMap::new();
    for level in [Level::Lhs, Level::Overlap] {
        let ms: Vec<json::Matrix> =
            graded_matrices(&cx, level, bound)?.iter().map(|m| json::matrix(&f, m, level)).collect();
        matrices.insert(format!("d{}", level.as_i8()), ms);
    }
    let tables: BTreeMap<String, Vec<json::Graded>> = [Level::Letter, Level::Lhs, Level::Overlap]
        .into_iter()
        .map(|l| (format!("t{}", l.as_i8()), json::graded(&degree_table(chains, l))))
        .collect();
    let rows: Vec<Value> = exact
        .rows
        .iter()
        .map(|r| json!({"degree": json::degree(&r.degree), "dims": r.dims, "ranks": r.ranks, "exact": r.exact}))
        .collect();

    let mut text = String::new();
    writeln!(text, "window p = {}, {}..{}; Deg <= {bound}", win.p, win.j, win.m)?;
    writeln!(text, "T1 ({}): {}", chains.t1.len(), list(&chains.t1))?;
    writeln!(text, "T2 ({}): {}", chains.t2.len(), list(&chains.words(Level::Overlap)))?;
    writeln!(text, "W ({}):", w.len())?;
    for (u, v) in &w {
        writeln!(text, "  ({u}, {v})")?;
    }
    writeln!(text, "complex: {} generators checked, {}", check.checked.iter().sum::<usize>(), status(check.passed()))?;
    writeln!(text, "exactness: {} degrees, {}", exact.rows.len(), status(exact.passed()))?;
    writeln!(text, "  {:<10} {:>18} {:>14}  exact", "degree", "dims P-1..P2", "ranks d0..d2")?;
    for r in &exact.rows {
        writeln!(text, "  {:<10} {:>18} {:>14}  {:?}", r.degree.to_string(), format!("{:?}", r.dims), format!("{:?}", r.ranks), r.exact)?;
    }
    for f in &failures {
        writeln!(text, "  FAIL {f}")?;
    }
    let passed = failures.is_empty();
    Ok(Outcome {
        text,
        passed,
        json: json!({
            "window": {"p": win.p, "j": win.j, "m": win.m},
            "deg_bound": bound,
            "t1": json::words(&chains.t1),
            "t2": json::words(&chains.words(Level::Overlap)),
            "degree_tables": tables,
            "matches_W": w.iter().map(|(u, v)| [json::word(u), json::word(v)]).collect::<Vec<_>>(),
            "d1": matrices["d1"],
            "d2": matrices["d2"],
            "complex_check": json::GeneratorCheck::from(&check),
            "exactness": {"passed": exact.passed(), "rows": rows},
            "passed": passed,
            "failures": failures,
        }),
    })
}

fn list(ws: &[sl3res_core::Word]) -> String {
    ws.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

fn minimal(c: &Common, max_deg: Option<u32>) -> Result<Outcome> {
    let win = window(c)?;
    let bound = default_deg(c, max_deg)?;
    let (ext, mc) = window_minimal_complex(&win)?;
    let report = report_on(&win, ext, &mc, bound)?;
    let f = *mc.complex().system().field();
    let d2: Vec<json::Matrix> =
        mc.d2_prime_matrices(bound)?.iter().map(|m| json::matrix(&f, m, Level::Overlap)).collect();

    let mut failures: Vec<String> = Vec::new();
    for (name, s) in ["d0", "d1'", "d2'"].iter().zip(&report.smallness) {
        failures.extend(s.failures.iter().map(|x| format!("{name} not small: {x}")));
    }
    failures.extend(report.composition.failures.iter().cloned());
    failures.extend(report.exactness.iter().filter(|r| !r.exact).map(|r| format!("not exact at P1' in degree {}", r.degree)));

    let mut ext_dims: BTreeMap<String, Vec<Value>> = BTreeMap::new();
    for (d, counts) in &report.ext_dims {
        for (i, n) in counts.iter().enumerate() {
            if *n > 0 {
                ext_dims.entry(i.to_string()).or_default().push(json!({"degree": json::degree(d), "count": n}));
            }
        }
    }
    let rows: Vec<Value> = report
        .exactness
        .iter()
        .map(|r| json!({"degree": json::degree(&r.degree), "dims": r.dims, "ranks": r.ranks, "exact": r.exact}))
        .collect();

    let mut text = String::new();
    writeln!(text, "window p = {}, {}..{} (computed on {}..{}); Deg <= {bound}", win.p, win.j, win.m, ext.j, ext.m)?;
    for (u, w, k) in &report.pairs {
        writeln!(text, "cancel .{u} against .{w} (coefficient {k})")?;
    }
    writeln!(text, "T1' ({}): {}", report.t1_prime.len(), list(&report.t1_prime))?;
    writeln!(text, "T2' ({}): {}", report.t2_prime.len(), list(&report.t2_prime))?;
    for (name, s) in ["im d0 small", "im d1' small", "im d2' small"].iter().zip(&report.smallness) {
        writeln!(text, "{name}: {} generators, {}", s.checked, status(s.passed()))?;
    }
    writeln!(text, "d1' d2' = 0: {}", status(report.composition.passed()))?;
    writeln!(text, "exact at P1': {} degrees, {}", report.exactness.len(), status(report.exactness_passed()))?;
    writeln!(text, "Ext dimensions by degree (Ext^0 Ext^1 Ext^2 Ext^3):")?;
    for (d, counts) in &report.ext_dims {
        writeln!(text, "  {:<10} {:?}", d.to_string(), counts)?;
    }
    writeln!(text, "totals: {:?}", (0..4).map(|i| report.ext_total(i)).collect::<Vec<_>>())?;
    for f in &failures {
        writeln!(text, "  FAIL {f}")?;
    }
    let passed = failures.is_empty();
    Ok(Outcome {
        text,
        passed,
        json: json!({
            "window": {"p": win.p, "j": win.j, "m": win.m},
            "computed_on": {"p": ext.p, "j": ext.j, "m": ext.m},
            "deg_bound": bound,
            "pairs": report.pairs.iter().map(|(u, w, k)| json!({"u": json::word(u), "w": json::word(w), "coefficient": k})).collect::<Vec<_>>(),
            "t1_prime": json::words(&report.t1_prime),
            "t2_prime": json::words(&report.t2_prime),
            "d2_prime": d2,
            "smallness": {
                "d0": json::GeneratorCheck::from(&report.smallness[0]),
                "d1": json::GeneratorCheck::from(&report.smallness[1]),
                "d2": json::GeneratorCheck::from(&report.smallness[2]),
            },
            "composition": json::GeneratorCheck::from(&report.composition),
            "exactness_at_P1_prime": {"passed": report.exactness_passed(), "rows": rows},
            "ext_dims": ext_dims,
            "passed": passed,
            "failures": failures,
        }),
    })
}

/// Exit status for an outcome: 0 when every check passed, 1 otherwise.
pub fn exit_code(o: &Outcome) -> i32 {
    i32::from(!o.passed)
}
