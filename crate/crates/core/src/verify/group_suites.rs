//! Suites over a single `GL_r(F_q)`: characters, Bessel functions, the operator
//! realization and the pair-sum cancellations.

use std::sync::Arc;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{Checks, Suite, SuiteConfig, SuiteReport};
use crate::bessel::{mat_mul, trace, Bessel, ModelSpace};
use crate::cusp::{gelfand_graev_mult, inner_product, list_cuspidals, mirabolic_restriction_check, ClassTable, CuspidalRep};
use crate::cyclo::CycloNumber;
use crate::epsilon::{pair_sum_vanishing, stabilizer_pair_sum};
use crate::error::Result;
use crate::ffield::{AdditiveChar, FieldElem};
use crate::glq::{Gl, MatG, SubgroupSpec};

const MODELS: [SubgroupSpec; 2] = [SubgroupSpec::Mirabolic, SubgroupSpec::Stabilizer];

fn label(gl: &Gl) -> String {
    format!("GL_{}(F_{})", gl.r(), gl.q())
}

struct Setup {
    gl: Arc<Gl>,
    psi: AdditiveChar,
    cuspidals: Vec<CuspidalRep>,
    elements: Arc<Vec<MatG>>,
}

impl Setup {
    fn new(q: u64, r: usize) -> Result<Setup> {
        let gl = Gl::shared(q, r)?;
        let psi = AdditiveChar::standard(gl.field());
        Ok(Setup {
            cuspidals: list_cuspidals(&gl)?,
            elements: gl.elements(SubgroupSpec::FullGroup)?,
            gl,
            psi,
        })
    }

    fn besselfns(&self) -> Result<Vec<Bessel>> {
        self.cuspidals.iter().map(|s| Bessel::new(s, &self.psi)).collect()
    }

    fn sample<'a>(&'a self, rng: &mut ChaCha8Rng) -> &'a MatG {
        &self.elements[rng.gen_range(0..self.elements.len())]
    }
}

pub struct CuspidalSuite;

impl Suite for CuspidalSuite {
    fn name(&self) -> &'static str {
        "cuspidal"
    }

    fn description(&self) -> &'static str {
        "orthonormality, Gelfand-Graev multiplicity one and restriction to the mirabolic"
    }

    fn run(&self, config: &SuiteConfig) -> Result<SuiteReport> {
        let mut checks = Checks::default();
        for (q, r) in config.groups_or(&[(2, 2), (3, 2), (4, 2), (5, 2), (2, 3), (3, 3)]) {
            let s = Setup::new(q, r)?;
            let name = label(&s.gl);
            let tables = s
                .cuspidals
                .iter()
                .map(|c| ClassTable::tabulate(c))
                .collect::<Result<Vec<_>>>()?;
            let n = tables.len();
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
            let products = pairs
                .par_iter()
                .map(|&(i, j)| inner_product(&s.gl, &tables[i], &tables[j]).map(|v| (i, j, v)))
                .collect::<Result<Vec<_>>>()?;
            let norm_ok = products
                .iter()
                .filter(|(i, j, v)| i == j && v.is_one())
                .count();
            let orth_ok = products
                .iter()
                .filter(|(i, j, v)| i != j && v.is_zero())
                .count();
            checks.tally(format!("{name}: <chi,chi> = 1"), norm_ok, n);
            if n > 1 {
                checks.tally(format!("{name}: <chi,chi'> = 0"), orth_ok, n * (n - 1) / 2);
            } else {
                checks.record(format!("{name}: <chi,chi'> = 0"), true, "no distinct pairs");
            }
            let mut gg = 0;
            let mut restr = 0;
            for c in &s.cuspidals {
                gg += (gelfand_graev_mult(c, &s.psi)? == 1) as usize;
                restr += mirabolic_restriction_check(c, &s.psi)? as usize;
            }
            checks.tally(format!("{name}: Gelfand-Graev multiplicity 1"), gg, n);
            checks.tally(format!("{name}: mirabolic and stabilizer restriction"), restr, n);
        }
        Ok(checks.finish(self.name(), config.seed))
    }
}

/// Sign of the permutation `g ∈ GL_2(F_2)` induces on the three nonzero vectors.
fn permutation_sign_f2(gl: &Gl, g: &MatG) -> i64 {
    let vecs = [[FieldElem::ONE, FieldElem::ZERO], [FieldElem::ZERO, FieldElem::ONE], [FieldElem::ONE, FieldElem::ONE]];
    let f = gl.field();
    let image: Vec<usize> = vecs
        .iter()
        .map(|v| {
            let w = [0, 1].map(|i| f.add(f.mul(g.entry(i, 0), v[0]), f.mul(g.entry(i, 1), v[1])));
            vecs.iter().position(|x| *x == w).expect("g permutes the nonzero vectors")
        })
        .collect();
    let inversions = (0..3)
        .flat_map(|i| (i + 1..3).map(move |j| (i, j)))
        .filter(|&(i, j)| image[i] > image[j])
        .count();
    1 - 2 * (inversions % 2) as i64
}

pub struct BesselSuite;

impl Suite for BesselSuite {
    fn name(&self) -> &'static str {
        "bessel"
    }

    fn description(&self) -> &'static str {
        "normalization, central and unipotent equivariance, support and the Hankel identity"
    }

    fn run(&self, config: &SuiteConfig) -> Result<SuiteReport> {
        let mut checks = Checks::default();
        let samples = config.samples_or(500);
        for (q, r) in config.groups_or(&[(2, 2), (3, 2), (5, 2), (2, 3)]) {
            let s = Setup::new(q, r)?;
            let gl = &s.gl;
            let name = label(gl);
            let mut rng = config.rng(q, r);
            let exhaustive = s.elements.len() <= 6;
            let bs = s.besselfns()?;
            let us = gl.elements(SubgroupSpec::UnipotentUpper)?;
            let scalars: Vec<FieldElem> = gl.field().nonzero().collect();
            let g_samples: Vec<MatG> = if exhaustive {
                s.elements.to_vec()
            } else {
                (0..samples).map(|_| s.sample(&mut rng).clone()).collect()
            };

            let one = bs.iter().filter(|b| b.exact(&gl.identity()).is_one()).count();
            checks.tally(format!("{name}: J(1) = 1"), one, bs.len());

            let (mut central, mut central_total) = (0, 0);
            let (mut equiv, mut equiv_total) = (0, 0);
            for b in &bs {
                for g in &g_samples {
                    let j = b.exact(g);
                    for &z in &scalars {
                        let w = b.sigma().central_value(z)?.to_cyclo();
                        central += (b.exact(&gl.mul(&gl.scalar(z), g)) == &w * &j) as usize;
                        central_total += 1;
                    }
                }
                // two-sided equivariance: exhaustive over U, `samples` (u, g) instances at least
                let per_g = us.len();
                let count = if exhaustive { g_samples.len() } else { samples.div_ceil(per_g).max(20) };
                for g in g_samples.iter().take(count) {
                    let j = b.exact(g);
                    for u in us.iter() {
                        let psi = gl.psi_u(u, &s.psi)?;
                        let expected = &psi * &j;
                        equiv += (b.exact(&gl.mul(u, g)) == expected && b.exact(&gl.mul(g, u)) == expected) as usize;
                        equiv_total += 1;
                    }
                }
            }
            checks.tally(format!("{name}: J(zg) = theta(z) J(g)"), central, central_total);
            checks.tally(format!("{name}: J(ug) = J(gu) = psi(u) J(g)"), equiv, equiv_total);

            let (mut support, mut support_total) = (0, 0);
            for b in &bs {
                for kind in MODELS {
                    for m in gl.elements(kind)?.iter() {
                        support += (!b.is_zero_at(m) == gl.contains(SubgroupSpec::UnipotentUpper, m)) as usize;
                        support_total += 1;
                    }
                }
            }
            checks.tally(format!("{name}: support on mirabolic and stabilizer is U"), support, support_total);

            let (mut hankel, mut hankel_total) = (0, 0);
            for kind in MODELS {
                let model = ModelSpace::new(gl, kind)?;
                for b in &bs {
                    let pairs: Vec<(MatG, MatG)> = if exhaustive {
                        s.elements
                            .iter()
                            .flat_map(|a| s.elements.iter().map(move |c| (a.clone(), c.clone())))
                            .collect()
                    } else {
                        (0..samples)
                            .map(|_| (s.sample(&mut rng).clone(), s.sample(&mut rng).clone()))
                            .collect()
                    };
                    let ok = pairs.par_iter().filter(|(g1, g2)| b.hankel_check(g1, g2, &model)).count();
                    hankel += ok;
                    hankel_total += pairs.len();
                    let g = s.sample(&mut rng);
                    hankel += b.hankel_check(g, &gl.inv(g), &model) as usize;
                    hankel += b.hankel_check(&gl.identity(), &gl.identity(), &model) as usize;
                    hankel_total += 2;
                }
            }
            checks.tally(format!("{name}: Hankel identity"), hankel, hankel_total);

            let (mut dual, mut dual_total) = (0, 0);
            for b in &bs {
                let other = Bessel::new(&b.sigma().contragredient(), &s.psi.conj())?;
                for g in &g_samples {
                    let v = b.exact(&gl.inv(g));
                    dual += (v == b.exact(g).conj() && v == other.exact(g)) as usize;
                    dual_total += 1;
                }
            }
            checks.tally(format!("{name}: J(g^-1) = conj J(g) = J_dual(g)"), dual, dual_total);

            if (q, r) == (2, 2) {
                let b = &bs[0];
                let ok = s
                    .elements
                    .iter()
                    .filter(|g| b.exact(g) == CycloNumber::from_int(permutation_sign_f2(gl, g)))
                    .count();
                checks.tally(format!("{name}: J is the sign character of S_3"), ok, s.elements.len());
            }
        }
        Ok(checks.finish(self.name(), config.seed))
    }
}

pub struct RealizationSuite;

impl Suite for RealizationSuite {
    fn name(&self) -> &'static str {
        "realization"
    }

    fn description(&self) -> &'static str {
        "the operators L(g) on the model space form a representation with character chi"
    }

    fn run(&self, config: &SuiteConfig) -> Result<SuiteReport> {
        let mut checks = Checks::default();
        let samples = config.samples_or(200);
        for (q, r) in config.groups_or(&[(3, 2), (2, 3)]) {
            let s = Setup::new(q, r)?;
            let gl = &s.gl;
            let mut rng = config.rng(q, r);
            for kind in MODELS {
                let name = format!("{} {}", label(gl), kind.name());
                let model = ModelSpace::new(gl, kind)?;
                let bs = s.besselfns()?;
                let dims = bs.iter().filter(|b| model.dim() as u64 == b.sigma().dim()).count();
                checks.tally(format!("{name}: model dimension = dim sigma"), dims, bs.len());
                let (mut id, mut tr, mut entry, mut mult) = (0, 0, 0, 0);
                for b in &bs {
                    let l1 = b.operator_l(&gl.identity(), &model);
                    let is_id = l1.iter().enumerate().all(|(i, row)| {
                        row.iter().enumerate().all(|(j, x)| *x == CycloNumber::from_int((i == j) as i64))
                    });
                    id += is_id as usize;
                    let per_g: Vec<(bool, bool)> = s
                        .elements
                        .par_iter()
                        .map(|g| {
                            let l = b.operator_l(g, &model);
                            let chi = b.sigma().character(g).expect("g is in the group");
                            (trace(&l) == chi, l[0][0] == b.exact(g))
                        })
                        .collect();
                    tr += per_g.iter().filter(|x| x.0).count();
                    entry += per_g.iter().filter(|x| x.1).count();
                    for _ in 0..samples {
                        let (g1, g2) = (s.sample(&mut rng), s.sample(&mut rng));
                        let lhs = mat_mul(&b.operator_l(g1, &model), &b.operator_l(g2, &model));
                        mult += (lhs == b.operator_l(&gl.mul(g1, g2), &model)) as usize;
                    }
                }
                let n = bs.len();
                checks.tally(format!("{name}: L(1) = Id"), id, n);
                checks.tally(format!("{name}: L(g1) L(g2) = L(g1 g2)"), mult, n * samples);
                checks.tally(format!("{name}: trace L(g) = chi(g)"), tr, n * s.elements.len());
                checks.tally(format!("{name}: L(g)_00 = J(g)"), entry, n * s.elements.len());
            }
        }
        Ok(checks.finish(self.name(), config.seed))
    }
}

pub struct VanishingSuite;

impl Suite for VanishingSuite {
    fn name(&self) -> &'static str {
        "vanishing"
    }

    fn description(&self) -> &'static str {
        "pair sums over U\\G vanish for distinct cuspidals; stabilizer sums equal one"
    }

    fn run(&self, config: &SuiteConfig) -> Result<SuiteReport> {
        let mut checks = Checks::default();
        let samples = config.samples_or(50);
        for (q, r) in config.groups_or(&[(3, 2), (2, 3)]) {
            let s = Setup::new(q, r)?;
            let name = label(&s.gl);
            let mut rng = config.rng(q, r);
            let gs: Vec<MatG> = (0..samples).map(|_| s.sample(&mut rng).clone()).collect();
            let (mut zero, mut zero_total, mut one, mut one_total) = (0, 0, 0, 0);
            for (i, s1) in s.cuspidals.iter().enumerate() {
                for g in &gs {
                    one += stabilizer_pair_sum(s1, &s.psi, g)?.is_one() as usize;
                    one_total += 1;
                }
                for s2 in s.cuspidals.iter().skip(i + 1) {
                    for g in &gs {
                        zero += pair_sum_vanishing(s1, s2, &s.psi, g)?.is_zero() as usize;
                        zero_total += 1;
                    }
                }
            }
            if s.cuspidals.len() > 1 {
                checks.tally(format!("{name}: distinct pair sums vanish"), zero, zero_total);
            } else {
                checks.record(format!("{name}: distinct pair sums vanish"), true, "no distinct pairs");
            }
            checks.tally(format!("{name}: stabilizer pair sums equal 1"), one, one_total);
        }
        Ok(checks.finish(self.name(), config.seed))
    }
}
