use std::sync::Arc;

use anyhow::{bail, Result};
use cuspidal::bessel::Bessel;
use cuspidal::cyclo::ComplexValue;
use cuspidal::epsilon::{
    epsilon_pair, epsilon_transfer, l_factor_pair, zeta_tilde_oracle, LFactorSpec, LevelZeroRep, SMonomial,
    TransferData,
};
use cuspidal::ffield::{build_field, prime_power};
use cuspidal::verify::{Registry, SuiteConfig, SuiteReport};
use cuspidal::{list_cuspidals, AdditiveChar, CuspidalRep, CycloNumber, FieldElem, Gl, Limits, MatG, Rational, SubgroupSpec};
use serde::Serialize;

use crate::args::{Command, Domain, Group, Pair, Psi};
use crate::emit::{stable, Output};
use crate::units::parse_unit;

pub struct Outcome {
    pub output: Output,
    /// False when a verification step failed.
    pub passed: bool,
}

impl From<Output> for Outcome {
    fn from(output: Output) -> Self {
        Outcome { output, passed: true }
    }
}

fn group(g: &Group, limits: &Limits) -> Result<Arc<Gl>> {
    if g.r == 0 {
        bail!("r must be positive");
    }
    if *limits == Limits::default() {
        Ok(Gl::shared(g.q, g.r)?)
    } else {
        Ok(Arc::new(Gl::new(g.q, g.r, limits)?))
    }
}

fn psi(gl: &Gl, p: &Psi) -> Result<AdditiveChar> {
    let field = gl.field();
    let shift = FieldElem::from_log(p.shift_log % field.unit_order() as u32);
    Ok(AdditiveChar::new(field, shift)?)
}

#[derive(Serialize)]
struct Complex {
    re: f64,
    im: f64,
}

fn complex(z: &CycloNumber) -> Complex {
    let c = ComplexValue::from(z);
    Complex {
        re: stable(c.re),
        im: stable(c.im),
    }
}

fn monomial_complex(m: &SMonomial, s: f64) -> Complex {
    let z = m.eval_complex(s);
    Complex {
        re: stable(z.re),
        im: stable(z.im),
    }
}

pub fn run(command: &Command, limits: &Limits) -> Result<Outcome> {
    match command {
        Command::Field { q } => field(*q, limits).map(Into::into),
        Command::Cuspidals(g) => cuspidals(&group(g, limits)?).map(Into::into),
        Command::Bessel { group: g, theta, domain, psi: p } => bessel(&group(g, limits)?, *theta, *domain, p).map(Into::into),
        Command::Epsilon { pair, oracle } => epsilon(pair, *oracle, limits),
        Command::Transfer { pair, vnu, n, e, w1, w2, zeta } => {
            let data = TransferData {
                r: pair.group.r,
                n: *n,
                e: *e,
                v_nu: *vnu,
                w1: parse_unit(w1)?,
                w2: parse_unit(w2)?,
                zeta: parse_unit(zeta)?,
            };
            transfer(pair, data, limits).map(Into::into)
        }
        Command::Verify { suite, list, q, r, seed, samples } => {
            let registry = Registry::standard();
            if *list {
                return suite_list(&registry).map(Into::into);
            }
            let config = SuiteConfig {
                groups: q.zip(*r).map(|g| vec![g]),
                seed: seed.unwrap_or(cuspidal::verify::DEFAULT_SEED),
                samples: *samples,
            };
            verify(&registry, suite.as_deref().unwrap_or("all"), &config)
        }
    }
}

#[derive(Serialize)]
struct FieldRow {
    element: FieldElem,
    log: Option<u32>,
    coordinates: Vec<u32>,
    trace: u32,
}

#[derive(Serialize)]
struct FieldDoc {
    p: u64,
    k: u32,
    q: u64,
    /// Coefficients of the primitive modulus, constant term first.
    modulus: Vec<u32>,
    elements: Vec<FieldRow>,
}

fn field(q: u64, limits: &Limits) -> Result<Output> {
    let (p, k) = prime_power(q)?;
    let f = build_field(p, k, limits)?;
    let elements: Vec<FieldRow> = f
        .elements()
        .map(|x| FieldRow {
            element: x,
            log: x.log(),
            coordinates: f.coordinates(x),
            trace: f.trace(x),
        })
        .collect();
    let rows: Vec<Vec<String>> = elements
        .iter()
        .map(|e| {
            vec![
                e.element.to_string(),
                e.log.map(|l| l.to_string()).unwrap_or_default(),
                e.coordinates.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" "),
                e.trace.to_string(),
            ]
        })
        .collect();
    let doc = FieldDoc {
        p,
        k,
        q,
        modulus: f.modulus().to_vec(),
        elements,
    };
    let mut out = Output::new("field", doc, vec!["element", "log", "coordinates", "trace"])?;
    rows.into_iter().for_each(|r| out.row(r));
    Ok(out)
}

#[derive(Serialize)]
struct CuspidalRow {
    exponent: u64,
    orbit: Vec<u64>,
    dim: u64,
    /// `c` with `ω_σ(g_q^j) = ζ_{q-1}^{c j}`.
    central_exponent: u64,
}

#[derive(Serialize)]
struct CuspidalDoc {
    q: u64,
    r: usize,
    count: usize,
    cuspidals: Vec<CuspidalRow>,
}

fn central_exponent(sigma: &CuspidalRep) -> Result<u64> {
    let field = sigma.gl().field();
    let g = field.generator();
    let v = sigma.central_value(g)?;
    let m = v.order();
    let step = m / (field.q() - 1).max(1);
    Ok(v.terms().first().map(|&(e, _)| e / step.max(1)).unwrap_or(0))
}

fn cuspidals(gl: &Arc<Gl>) -> Result<Output> {
    let list = list_cuspidals(gl)?;
    let rows = list
        .iter()
        .map(|s| {
            Ok(CuspidalRow {
                exponent: s.exponent(),
                orbit: s.orbit().to_vec(),
                dim: s.dim(),
                central_exponent: central_exponent(s)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let csv: Vec<Vec<String>> = rows
        .iter()
        .map(|c| {
            vec![
                c.exponent.to_string(),
                c.orbit.iter().map(|o| o.to_string()).collect::<Vec<_>>().join(" "),
                c.dim.to_string(),
                c.central_exponent.to_string(),
            ]
        })
        .collect();
    let doc = CuspidalDoc {
        q: gl.q(),
        r: gl.r(),
        count: rows.len(),
        cuspidals: rows,
    };
    let mut out = Output::new("cuspidals", doc, vec!["exponent", "orbit", "dim", "central_exponent"])?;
    csv.into_iter().for_each(|r| out.row(r));
    Ok(out)
}

#[derive(Serialize)]
struct BesselRowDoc {
    g: String,
    value: CycloNumber,
    complex: Complex,
}

#[derive(Serialize)]
struct BesselDoc {
    q: u64,
    r: usize,
    theta: u64,
    psi: FieldElem,
    domain: &'static str,
    rows: Vec<BesselRowDoc>,
}

fn bessel(gl: &Arc<Gl>, theta: i64, domain: Domain, p: &Psi) -> Result<Output> {
    let sigma = CuspidalRep::new(gl, theta)?;
    let psi = psi(gl, p)?;
    let spec = match domain {
        Domain::Full => SubgroupSpec::FullGroup,
        Domain::Mirabolic => SubgroupSpec::Mirabolic,
        Domain::Stabilizer => SubgroupSpec::Stabilizer,
        Domain::U => SubgroupSpec::UnipotentUpper,
    };
    let table = Bessel::new(&sigma, &psi)?.build_table(spec)?;
    let rows: Vec<BesselRowDoc> = table
        .values
        .iter()
        .map(|(g, v): (&MatG, &CycloNumber)| BesselRowDoc {
            g: g.key(),
            value: v.clone(),
            complex: complex(v),
        })
        .collect();
    let csv: Vec<Vec<String>> = rows
        .iter()
        .map(|r| vec![r.g.clone(), r.value.to_string(), r.complex.re.to_string(), r.complex.im.to_string()])
        .collect();
    let doc = BesselDoc {
        q: gl.q(),
        r: gl.r(),
        theta: sigma.exponent(),
        psi: psi.shift(),
        domain: spec.name(),
        rows,
    };
    let mut out = Output::new("bessel", doc, vec!["g", "value", "re", "im"])?;
    csv.into_iter().for_each(|r| out.row(r));
    Ok(out)
}

fn pair_reps(pair: &Pair, limits: &Limits) -> Result<(LevelZeroRep, LevelZeroRep, AdditiveChar)> {
    let gl = group(&pair.group, limits)?;
    let t1 = LevelZeroRep::new(CuspidalRep::new(&gl, pair.theta1)?, parse_unit(&pair.t1)?)?;
    let t2 = LevelZeroRep::new(CuspidalRep::new(&gl, pair.theta2)?, parse_unit(&pair.t2)?)?;
    Ok((t1, t2, psi(&gl, &pair.psi)?))
}

#[derive(Serialize)]
struct OracleDoc {
    agrees: bool,
    epsilon: SMonomial,
    shell_zero: CycloNumber,
    tail: CycloNumber,
}

#[derive(Serialize)]
struct EpsilonDoc {
    q: u64,
    r: usize,
    theta1: u64,
    theta2: u64,
    t1: CycloNumber,
    t2: CycloNumber,
    psi: FieldElem,
    epsilon: SMonomial,
    epsilon_at_half: Complex,
    epsilon_at_half_exact: Option<CycloNumber>,
    modulus: f64,
    l_factor: LFactorSpec,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<OracleDoc>,
}

fn epsilon(pair: &Pair, with_oracle: bool, limits: &Limits) -> Result<Outcome> {
    let (t1, t2, psi) = pair_reps(pair, limits)?;
    let eps = epsilon_pair(&t1, &t2, &psi)?;
    let oracle = if with_oracle {
        let o = zeta_tilde_oracle(&t1, &t2, &psi)?;
        Some(OracleDoc {
            agrees: o.epsilon == eps,
            epsilon: o.epsilon,
            shell_zero: o.shell_zero,
            tail: o.tail,
        })
    } else {
        None
    };
    let passed = oracle.as_ref().is_none_or(|o| o.agrees);
    let at_half = monomial_complex(&eps, 0.5);
    let doc = EpsilonDoc {
        q: t1.q(),
        r: t1.r(),
        theta1: t1.sigma.exponent(),
        theta2: t2.sigma.exponent(),
        t1: t1.t.clone(),
        t2: t2.t.clone(),
        psi: psi.shift(),
        modulus: stable(eps.eval_complex(0.5).norm()),
        epsilon_at_half_exact: eps.eval_exact(Rational::new(1, 2)),
        epsilon_at_half: at_half,
        l_factor: l_factor_pair(&t1, &t2)?,
        epsilon: eps,
        oracle,
    };
    let row = vec![
        doc.epsilon.coeff.to_string(),
        doc.epsilon.qbase.to_string(),
        doc.epsilon.half_exp.to_string(),
        doc.epsilon.s_coeff.to_string(),
        doc.epsilon_at_half.re.to_string(),
        doc.epsilon_at_half.im.to_string(),
        doc.modulus.to_string(),
        match &doc.l_factor {
            LFactorSpec::Trivial => "trivial".to_string(),
            LFactorSpec::Factor { u, m } => format!("u={u};m={m}"),
        },
    ];
    let mut out = Output::new(
        "epsilon",
        doc,
        vec!["coeff", "qbase", "half_exp", "s_coeff", "re_half", "im_half", "modulus", "l_factor"],
    )?;
    out.row(row);
    Ok(Outcome { output: out, passed })
}

#[derive(Serialize)]
struct TransferDoc {
    tame: SMonomial,
    data: TransferData,
    transferred: SMonomial,
    transferred_at_half: Complex,
}

fn transfer(pair: &Pair, data: TransferData, limits: &Limits) -> Result<Output> {
    let (t1, t2, psi) = pair_reps(pair, limits)?;
    let tame = epsilon_pair(&t1, &t2, &psi)?;
    let transferred = epsilon_transfer(&tame, &data)?;
    let row = vec![
        transferred.coeff.to_string(),
        transferred.qbase.to_string(),
        transferred.half_exp.to_string(),
        transferred.s_coeff.to_string(),
    ];
    let doc = TransferDoc {
        transferred_at_half: monomial_complex(&transferred, 0.5),
        tame,
        data,
        transferred,
    };
    let mut out = Output::new("transfer", doc, vec!["coeff", "qbase", "half_exp", "s_coeff"])?;
    out.row(row);
    Ok(out)
}

#[derive(Serialize)]
struct SuiteEntry {
    name: &'static str,
    description: &'static str,
}

fn suite_list(registry: &Registry) -> Result<Output> {
    let suites: Vec<SuiteEntry> = registry
        .iter()
        .map(|s| SuiteEntry {
            name: s.name(),
            description: s.description(),
        })
        .collect();
    let rows: Vec<Vec<String>> = suites
        .iter()
        .map(|s| vec![s.name.to_string(), s.description.to_string()])
        .collect();
    let mut out = Output::new("suites", serde_json::json!({ "suites": suites }), vec!["name", "description"])?;
    rows.into_iter().for_each(|r| out.row(r));
    Ok(out)
}

#[derive(Serialize)]
struct VerifyDoc {
    passed: bool,
    reports: Vec<SuiteReport>,
}

fn verify(registry: &Registry, suite: &str, config: &SuiteConfig) -> Result<Outcome> {
    let names: Vec<&str> = if suite == "all" {
        registry.names().collect()
    } else {
        vec![registry.get(suite)?.name()]
    };
    let reports = names
        .iter()
        .map(|n| registry.run(n, config))
        .collect::<cuspidal::Result<Vec<_>>>()?;
    let passed = reports.iter().all(|r| r.passed);
    let rows: Vec<Vec<String>> = reports
        .iter()
        .flat_map(|r| {
            r.checks
                .iter()
                .map(|c| vec![r.suite.clone(), c.name.clone(), c.passed.to_string(), c.detail.clone()])
        })
        .collect();
    let mut out = Output::new("verify", VerifyDoc { passed, reports }, vec!["suite", "check", "passed", "detail"])?;
    rows.into_iter().for_each(|r| out.row(r));
    Ok(Outcome { output: out, passed })
}
