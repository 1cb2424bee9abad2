//! Acceptance criteria 1 to 7. Each criterion prints one PASS/FAIL line with its
//! runtime, budget and tolerance, and the process exits nonzero if any criterion fails.

use std::process::Command;
use std::time::{Duration, Instant};

use cuspidal::verify::{Registry, SuiteConfig, SuiteReport};

/// A check that must appear in the report, pass, and cover at least `min` instances.
struct Required {
    name: String,
    min: usize,
}

fn req(name: impl Into<String>, min: usize) -> Required {
    Required { name: name.into(), min }
}

struct Criterion {
    id: u8,
    title: &'static str,
    suite: &'static str,
    budget: Duration,
    tolerance: &'static str,
    required: Vec<Required>,
}

/// Number of instances in a `passed/total` detail; descriptive details count as one.
fn instances(detail: &str) -> usize {
    detail
        .split_once('/')
        .and_then(|(_, total)| total.parse().ok())
        .unwrap_or(1)
}

fn coverage_problems(report: &SuiteReport, required: &[Required]) -> Vec<String> {
    let mut problems: Vec<String> = report
        .failures()
        .map(|c| format!("failed: {} ({})", c.name, c.detail))
        .collect();
    for r in required {
        match report.checks.iter().find(|c| c.name == r.name) {
            None => problems.push(format!("missing: {}", r.name)),
            Some(c) if instances(&c.detail) < r.min => {
                problems.push(format!("{}: {} instances, need {}", r.name, c.detail, r.min))
            }
            Some(_) => {}
        }
    }
    problems
}

fn groups(list: &[(u64, usize)]) -> impl Iterator<Item = String> + '_ {
    list.iter().map(|(q, r)| format!("GL_{r}(F_{q})"))
}

fn criteria() -> Vec<Criterion> {
    let minute = Duration::from_secs(60);
    let mut c1 = Vec::new();
    for g in groups(&[(2, 2), (3, 2), (4, 2), (5, 2), (2, 3), (3, 3)]) {
        c1.push(req(format!("{g}: <chi,chi> = 1"), 1));
        c1.push(req(format!("{g}: <chi,chi'> = 0"), 1));
        c1.push(req(format!("{g}: Gelfand-Graev multiplicity 1"), 1));
        c1.push(req(format!("{g}: mirabolic and stabilizer restriction"), 1));
    }

    // GL_2(F_2) has one cuspidal, so exhaustive coverage means |G| = 6 elements.
    let mut c2 = vec![
        req("GL_2(F_2): J(1) = 1", 1),
        req("GL_2(F_2): J(zg) = theta(z) J(g)", 6),
        req("GL_2(F_2): J(ug) = J(gu) = psi(u) J(g)", 6),
        req("GL_2(F_2): support on mirabolic and stabilizer is U", 1),
        req("GL_2(F_2): Hankel identity", 6),
        req("GL_2(F_2): J(g^-1) = conj J(g) = J_dual(g)", 6),
        req("GL_2(F_2): J is the sign character of S_3", 6),
    ];
    for g in groups(&[(3, 2), (5, 2), (2, 3)]) {
        c2.push(req(format!("{g}: J(1) = 1"), 1));
        c2.push(req(format!("{g}: J(zg) = theta(z) J(g)"), 500));
        c2.push(req(format!("{g}: J(ug) = J(gu) = psi(u) J(g)"), 500));
        c2.push(req(format!("{g}: support on mirabolic and stabilizer is U"), 1));
        c2.push(req(format!("{g}: Hankel identity"), 500));
        c2.push(req(format!("{g}: J(g^-1) = conj J(g) = J_dual(g)"), 500));
    }

    let mut c3 = Vec::new();
    for (g, order) in [("GL_2(F_3)", 48), ("GL_3(F_2)", 168)] {
        for model in ["mirabolic", "stabilizer"] {
            c3.push(req(format!("{g} {model}: model dimension = dim sigma"), 1));
            c3.push(req(format!("{g} {model}: L(1) = Id"), 1));
            c3.push(req(format!("{g} {model}: L(g1) L(g2) = L(g1 g2)"), 200));
            c3.push(req(format!("{g} {model}: trace L(g) = chi(g)"), order));
            c3.push(req(format!("{g} {model}: L(g)_00 = J(g)"), order));
        }
    }

    let mut c4 = Vec::new();
    for g in groups(&[(3, 2), (2, 3)]) {
        c4.push(req(format!("{g}: distinct pair sums vanish"), 50));
        c4.push(req(format!("{g}: stabilizer pair sums equal 1"), 50));
    }

    let mut c5 = Vec::new();
    for (g, pairs) in [("GL_1(F_3)", 4), ("GL_1(F_5)", 16), ("GL_2(F_2)", 1), ("GL_2(F_3)", 9)] {
        c5.push(req(format!("{g}: epsilon_pair = zeta oracle"), pairs));
        c5.push(req(format!("{g}: |eps(1/2)| = 1 within 1e-9"), pairs));
        c5.push(req(format!("{g}: eps(tau x tau^, 1/2)^2 = 1"), 1));
    }
    for g in ["GL_2(F_4)", "GL_3(F_2)"] {
        c5.push(req(format!("{g}: epsilon_pair = zeta oracle"), 3));
        c5.push(req(format!("{g}: |eps(1/2)| = 1 within 1e-9"), 3));
    }
    for p in [3, 5, 7] {
        c5.push(req(format!("GL_1(F_{p}): Gauss-sum epsilon"), 1));
    }
    c5.push(req("GL_1(F_3): quadratic eps(1/2) = z4^1", 1));
    c5.push(req("GL_1(F_7): cubic Gauss sums G^3 = pJ", 2));

    let mut c6 = vec![req("transfer = direct substitution", 20)];
    for g in groups(&[(3, 1), (5, 1)]) {
        for kind in ["trivial", "unramified", "order-2"] {
            c6.push(req(format!("{g}: twisting identity, {kind} twist"), 1));
        }
    }

    vec![
        Criterion {
            id: 1,
            title: "cuspidal character oracles",
            suite: "cuspidal",
            budget: 5 * minute,
            tolerance: "exact",
            required: c1,
        },
        Criterion {
            id: 2,
            title: "Bessel properties",
            suite: "bessel",
            budget: 2 * minute,
            tolerance: "exact, >= 500 samples",
            required: c2,
        },
        Criterion {
            id: 3,
            title: "operator realization",
            suite: "realization",
            budget: 3 * minute,
            tolerance: "exact, >= 200 pairs",
            required: c3,
        },
        Criterion {
            id: 4,
            title: "vanishing and cancellation",
            suite: "vanishing",
            budget: 3 * minute,
            tolerance: "exact, >= 50 samples",
            required: c4,
        },
        Criterion {
            id: 5,
            title: "epsilon cross-validation",
            suite: "epsilon",
            budget: 5 * minute,
            tolerance: "exact; |eps(1/2)| within 1e-9",
            required: c5,
        },
        Criterion {
            id: 6,
            title: "transfer and twisting",
            suite: "transfer",
            budget: minute,
            tolerance: "exact, 20 instances",
            required: c6,
        },
    ]
}

fn report_line(id: u8, title: &str, ok: bool, elapsed: Duration, budget: Duration, tolerance: &str) -> String {
    format!(
        "{} criterion {id} {title} ({:.2}s of {}s, tolerance: {tolerance})",
        if ok { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64(),
        budget.as_secs()
    )
}

const EMIT_COMMANDS: &[&[&str]] = &[
    &["field", "--q", "8"],
    &["--format", "csv", "field", "--q", "9"],
    &["cuspidals", "--q", "4", "--r", "2"],
    &["--format", "csv", "cuspidals", "--q", "3", "--r", "3"],
    &["bessel", "--q", "3", "--r", "2", "--theta", "1"],
    &["--format", "csv", "bessel", "--q", "2", "--r", "3", "--theta", "1", "--domain", "mirabolic"],
    &["epsilon", "--q", "5", "--r", "1", "--theta1", "1", "--theta2", "2", "--oracle"],
    &["--format", "csv", "epsilon", "--q", "3", "--r", "2", "--theta1", "1", "--theta2", "1", "--t2", "-1"],
    &["transfer", "--q", "4", "--r", "1", "--theta1", "1", "--theta2", "0", "--vnu", "1", "--N", "2", "--e", "1"],
    &["verify", "--list"],
];

fn cuspidal(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_cuspidal"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn main() {
    let registry = Registry::standard();
    let config = SuiteConfig::default();
    let mut lines = Vec::new();
    let mut all_ok = true;
    let mut serialized = Vec::new();

    for c in criteria() {
        let start = Instant::now();
        let result = registry.run(c.suite, &config);
        let elapsed = start.elapsed();
        let problems = match &result {
            Ok(report) => coverage_problems(report, &c.required),
            Err(e) => vec![format!("error: {e}")],
        };
        let ok = problems.is_empty() && elapsed < c.budget;
        all_ok &= ok;
        lines.push(report_line(c.id, c.title, ok, elapsed, c.budget, c.tolerance));
        for p in problems {
            lines.push(format!("    {p}"));
        }
        if let Ok(report) = result {
            serialized.push((c.suite, serde_json::to_string(&report).expect("serializable")));
        }
    }

    let start = Instant::now();
    let mut problems = Vec::new();
    for (suite, first) in &serialized {
        let again = registry.run(suite, &config).map(|r| serde_json::to_string(&r).expect("serializable"));
        if again.ok().as_ref() != Some(first) {
            problems.push(format!("suite {suite} differs between runs"));
        }
    }
    for suite in registry.names() {
        let args = ["verify", "--suite", suite];
        if cuspidal(&args).stdout != cuspidal(&args).stdout {
            problems.push(format!("verify --suite {suite} output differs between runs"));
        }
    }
    for args in EMIT_COMMANDS {
        let (a, b) = (cuspidal(args), cuspidal(args));
        if !a.status.success() {
            problems.push(format!("{args:?} failed: {}", String::from_utf8_lossy(&a.stderr).trim()));
        } else if a.stdout != b.stdout {
            problems.push(format!("{args:?} output differs between runs"));
        }
    }
    let elapsed = start.elapsed();
    let budget = Duration::from_secs(15 * 60);
    let ok = problems.is_empty() && serialized.len() == 6;
    all_ok &= ok;
    lines.push(report_line(7, "determinism", ok, elapsed, budget, "byte-identical"));
    lines.extend(problems.into_iter().map(|p| format!("    {p}")));

    println!();
    for line in &lines {
        println!("{line}");
    }
    if !all_ok {
        std::process::exit(1);
    }
}
