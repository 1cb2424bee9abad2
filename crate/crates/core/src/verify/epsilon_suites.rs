//! Suites for level-zero epsilon factors and their transfer.

use rand::seq::SliceRandom;
use rand::Rng;

use super::{Checks, Suite, SuiteConfig, SuiteReport};
use crate::cusp::{list_cuspidals, CuspidalRep};
use crate::cyclo::{sqrt_prime_power, CycloNumber, Rational};
use crate::epsilon::{
    epsilon_pair, epsilon_transfer, gauss_pair_sum, twist_ratio_check, zeta_tilde_oracle, LevelZeroRep,
    SMonomial, TameTwist, TransferData,
};
use crate::error::Result;
use crate::ffield::AdditiveChar;
use crate::glq::Gl;

const UNIT_TOLERANCE: f64 = 1e-9;

fn rou(m: u64, j: i64) -> CycloNumber {
    CycloNumber::root_of_unity(m, j).expect("positive order")
}

fn half() -> Rational {
    Rational::new(1, 2)
}

/// Unramified parameters used for `t`.
fn parameters() -> [CycloNumber; 4] {
    [CycloNumber::one(), rou(4, 1), rou(3, 1), -CycloNumber::one()]
}

/// `Σ_{x ∈ F_p^×} χ^{-1}(x) ζ_p^x` with `χ(g_0^j) = ζ_{p-1}^{cj}`, by integer arithmetic.
fn classical_gauss(p: u64, g0: u64, c: i64) -> CycloNumber {
    let mut x = 1u64;
    let mut sum = CycloNumber::zero();
    for j in 0..(p - 1) as i64 {
        sum += &(&rou(p - 1, -c * j) * &rou(p, x as i64));
        x = x * g0 % p;
    }
    sum
}

pub struct EpsilonSuite;

impl EpsilonSuite {
    fn pairs(gl: &std::sync::Arc<Gl>, limit: Option<usize>, rng: &mut impl Rng) -> Result<Vec<(CuspidalRep, CuspidalRep)>> {
        let cusp = list_cuspidals(gl)?;
        let mut all: Vec<_> = cusp
            .iter()
            .flat_map(|a| cusp.iter().map(move |b| (a.clone(), b.clone())))
            .collect();
        if let Some(n) = limit {
            all.shuffle(rng);
            all.truncate(n);
        }
        Ok(all)
    }
}

impl Suite for EpsilonSuite {
    fn name(&self) -> &'static str {
        "epsilon"
    }

    fn description(&self) -> &'static str {
        "closed-form epsilon against the zeta-integral oracle, unitarity and rank-one Gauss sums"
    }

    fn run(&self, config: &SuiteConfig) -> Result<SuiteReport> {
        let mut checks = Checks::default();
        let plan: Vec<(u64, usize, Option<usize>)> = match &config.groups {
            Some(g) => g.iter().map(|&(q, r)| (q, r, None)).collect(),
            None => vec![
                (3, 1, None),
                (5, 1, None),
                (2, 2, None),
                (3, 2, None),
                (4, 2, Some(3)),
                (2, 3, Some(3)),
            ],
        };
        for (q, r, limit) in plan {
            let gl = Gl::shared(q, r)?;
            let psi = AdditiveChar::standard(gl.field());
            let name = format!("GL_{r}(F_{q})");
            let mut rng = config.rng(q, r);
            let pairs = Self::pairs(&gl, limit, &mut rng)?;
            let (mut agree, mut unit, mut total) = (0, 0, 0);
            for (s1, s2) in &pairs {
                let ps = parameters();
                let t1 = LevelZeroRep::new(s1.clone(), ps.choose(&mut rng).expect("nonempty").clone())?;
                let t2 = LevelZeroRep::new(s2.clone(), ps.choose(&mut rng).expect("nonempty").clone())?;
                let direct = epsilon_pair(&t1, &t2, &psi)?;
                let oracle = zeta_tilde_oracle(&t1, &t2, &psi)?;
                agree += (direct == oracle.epsilon) as usize;
                unit += ((direct.eval_complex(0.5).norm() - 1.0).abs() < UNIT_TOLERANCE) as usize;
                total += 1;
            }
            checks.tally(format!("{name}: epsilon_pair = zeta oracle"), agree, total);
            checks.tally(format!("{name}: |eps(1/2)| = 1 within {UNIT_TOLERANCE:e}"), unit, total);

            let (mut square, mut central, mut n) = (0, 0, 0);
            for sigma in list_cuspidals(&gl)? {
                for t in parameters() {
                    let tau = LevelZeroRep::new(sigma.clone(), t)?;
                    let Some(e) = epsilon_pair(&tau, &tau, &psi)?.eval_exact(half()) else {
                        continue;
                    };
                    square += e.pow(2).is_one() as usize;
                    central += (e == tau.central_sign().pow(r as u32 - 1)) as usize;
                    n += 1;
                }
            }
            checks.tally(format!("{name}: eps(tau x tau^, 1/2)^2 = 1"), square, n);
            checks.tally(format!("{name}: eps(tau x tau^, 1/2) = omega(-1)^(r-1)"), central, n);
        }

        for p in [3u64, 5, 7] {
            let gl = Gl::shared(p, 1)?;
            let field = gl.field();
            let psi = AdditiveChar::standard(field);
            let g0 = field.coordinates(field.generator())[0] as u64;
            let triv = LevelZeroRep::new(CuspidalRep::new(&gl, 0)?, CycloNumber::one())?;
            let inv_root = sqrt_prime_power(p, 1).inv().expect("nonzero");
            let (mut ok, mut total) = (0, 0);
            for c in 1..(p - 1) as i64 {
                let tau = LevelZeroRep::new(CuspidalRep::new(&gl, c)?, CycloNumber::one())?;
                let g = classical_gauss(p, g0, c);
                let eps = epsilon_pair(&tau, &triv, &psi)?;
                ok += (gauss_pair_sum(&tau.sigma, &triv.sigma, &psi)? == g
                    && eps.eval_exact(half()) == Some(&inv_root * &g)) as usize;
                total += 1;
            }
            checks.tally(format!("GL_1(F_{p}): Gauss-sum epsilon"), ok, total);
            let quad = LevelZeroRep::new(CuspidalRep::new(&gl, (p as i64 - 1) / 2)?, CycloNumber::one())?;
            let expected = if p % 4 == 1 { CycloNumber::one() } else { rou(4, 1) };
            let value = epsilon_pair(&quad, &triv, &psi)?.eval_exact(half());
            checks.record(
                format!("GL_1(F_{p}): quadratic eps(1/2) = {expected}"),
                value.as_ref() == Some(&expected),
                value.map(|v| v.to_string()).unwrap_or_default(),
            );
            if p == 7 {
                // G(χ)^3 = p J(χ, χ) for the cubic characters
                let mut dlog = vec![0i64; p as usize];
                let mut x = 1u64;
                for j in 0..(p - 1) as i64 {
                    dlog[x as usize] = j;
                    x = x * g0 % p;
                }
                let mut cubic = 0;
                for c in [2i64, 4] {
                    let chi = |x: u64| rou(6, -c * dlog[x as usize]);
                    let jacobi: CycloNumber = (2..p).map(|x| &chi(x) * &chi(p + 1 - x)).sum();
                    let g = gauss_pair_sum(&CuspidalRep::new(&gl, c)?, &triv.sigma, &psi)?;
                    cubic += (g.pow(3) == jacobi.scale(Rational::from_integer(p as i64))) as usize;
                }
                checks.tally("GL_1(F_7): cubic Gauss sums G^3 = pJ", cubic, 2);
            }
        }
        Ok(checks.finish(self.name(), config.seed))
    }
}

pub struct TransferSuite;

impl Suite for TransferSuite {
    fn name(&self) -> &'static str {
        "transfer"
    }

    fn description(&self) -> &'static str {
        "transfer against direct substitution, its group law and the twisting identity"
    }

    fn run(&self, config: &SuiteConfig) -> Result<SuiteReport> {
        let mut checks = Checks::default();
        let mut rng = config.rng(0, 0);
        let instances = config.samples_or(20);
        let mut ok = 0;
        let mut composed = 0;
        for _ in 0..instances {
            let r = rng.gen_range(1..=2usize);
            let e = rng.gen_range(1..=2u64);
            let f = rng.gen_range(1..=2u64);
            let n = e * f * r as u64;
            let v_nu = rng.gen_range(-2..=2i64);
            let q_f = [2u64, 3, 5][rng.gen_range(0..3)];
            let q_e = q_f.pow(f as u32);
            let (a, b, c) = (rng.gen_range(0..6), rng.gen_range(0..4), rng.gen_range(0..2));
            let d = TransferData {
                r,
                n,
                e,
                v_nu,
                w1: rou(6, a),
                w2: rou(4, b),
                zeta: rou(2, c),
            };
            let eps = SMonomial::new(
                rou(12, rng.gen_range(0..12)),
                q_e,
                rng.gen_range(-4..=0),
                Rational::from_integer(rng.gen_range(0..=3)),
            )?;
            let out = epsilon_transfer(&eps, &d)?;
            let k = r as i64 * v_nu * (n / e) as i64;
            let weight = &(&d.zeta * &d.w1) * &d.w2;
            let direct = [Rational::new(0, 1), half(), Rational::new(1, 1), Rational::new(3, 2)]
                .into_iter()
                .all(|s| {
                    let twice = (Rational::from_integer(2) * (s - half()) * Rational::from_integer(k)).to_integer();
                    let scale = sqrt_prime_power(q_f, twice.unsigned_abs() as u32);
                    let scale = if twice >= 0 { scale } else { scale.inv().expect("nonzero") };
                    let expected = eps.eval_exact(s).map(|v| &(&weight * &scale) * &v);
                    out.qbase == q_f && out.eval_exact(s) == expected
                });
            ok += direct as usize;
            // with f = 1 the inverse data undoes the transfer
            let flat = TransferData { n: e * r as u64, ..d.clone() };
            let inverse = TransferData {
                v_nu: -v_nu,
                w1: rou(6, -a),
                w2: rou(4, -b),
                ..flat.clone()
            };
            let base = SMonomial::new(eps.coeff.clone(), q_f, eps.half_exp, eps.s_coeff)?;
            let there = epsilon_transfer(&base, &flat)?;
            composed += (epsilon_transfer(&there, &inverse)? == base) as usize;
        }
        checks.tally("transfer = direct substitution", ok, instances);
        checks.tally("transfer with (v, w) then (-v, 1/w) is the identity", composed, instances);

        for (q, r) in config.groups_or(&[(3, 1), (5, 1)]) {
            let gl = Gl::shared(q, r)?;
            let psi = AdditiveChar::standard(gl.field());
            let residue = gl.field().generator();
            let cusp = list_cuspidals(&gl)?;
            let mut twists = vec![
                ("trivial", TameTwist { alpha: 0, z: CycloNumber::one() }),
                ("unramified", TameTwist { alpha: 0, z: rou(4, 1) }),
            ];
            if q % 2 == 1 {
                let alpha = (q as i64 - 1) / 2;
                twists.push(("order-2", TameTwist { alpha, z: CycloNumber::one() }));
                twists.push(("order-2 ramified with unramified part", TameTwist { alpha, z: -CycloNumber::one() }));
            }
            for (kind, chi) in &twists {
                let (mut holds, mut total) = (0, 0);
                for s1 in &cusp {
                    for s2 in &cusp {
                        for (v_nu, t1) in [(0i64, CycloNumber::one()), (1, rou(3, 1))] {
                            let a = LevelZeroRep::new(s1.clone(), t1)?;
                            let b = LevelZeroRep::new(s2.clone(), rou(4, 1))?;
                            let d = TransferData {
                                r,
                                n: 2 * r as u64,
                                e: 2,
                                v_nu,
                                w1: rou(3, 1),
                                w2: CycloNumber::one(),
                                zeta: -CycloNumber::one(),
                            };
                            holds += twist_ratio_check(&a, &b, &psi, &d, chi, residue)?.holds as usize;
                            total += 1;
                        }
                    }
                }
                checks.tally(format!("GL_{r}(F_{q}): twisting identity, {kind} twist"), holds, total);
            }
        }
        Ok(checks.finish(self.name(), config.seed))
    }
}
