//! Cuspidal representations of `GL_r(F_q)`, parameterized by regular characters of
//! `F_{q^r}^×`, together with brute-force oracles for their characters.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use rayon::prelude::*;

use crate::cyclo::{CycloNumber, RootAccumulator, RootSum};
use crate::error::{Error, Result};
use crate::ffield::{is_regular_char, orbit_size, AdditiveChar, FieldElem, MultChar};
use crate::glq::{ClassKey, Gl, MatG, SubgroupSpec};

/// A class function on `GL_r(F_q)` with values in integer combinations of roots of unity.
pub trait ClassFunction: Send + Sync {
    fn label(&self) -> String;
    fn group(&self) -> &Arc<Gl>;
    fn value(&self, g: &MatG) -> RootSum;
}

/// The cuspidal representation attached to a regular Frobenius orbit.
#[derive(Clone)]
pub struct CuspidalRep {
    gl: Arc<Gl>,
    theta: MultChar,
    orbit: Vec<u64>,
    dim: u64,
    values: Arc<RwLock<HashMap<ClassKey, RootSum>>>,
}

impl std::fmt::Debug for CuspidalRep {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CuspidalRep(q={}, r={}, orbit={:?})", self.q(), self.r(), self.orbit)
    }
}

impl PartialEq for CuspidalRep {
    fn eq(&self, other: &Self) -> bool {
        self.q() == other.q() && self.r() == other.r() && self.orbit == other.orbit
    }
}

impl Eq for CuspidalRep {}

impl CuspidalRep {
    /// The cuspidal with `θ = θ_c` on `F_{q^r}^×`; `c` must be regular.
    pub fn new(gl: &Arc<Gl>, c: i64) -> Result<CuspidalRep> {
        let top = gl.top_field();
        let m = top.unit_order();
        let theta = MultChar::new(top, c);
        if !is_regular_char(&theta, gl.q())? {
            return Err(Error::NotRegular {
                exponent: theta.exponent(),
                q: gl.q(),
                r: gl.r(),
            });
        }
        let mut orbit = vec![theta.exponent()];
        let mut x = (theta.exponent() * gl.q()) % m;
        while x != theta.exponent() {
            orbit.push(x);
            x = (x * gl.q()) % m;
        }
        orbit.sort_unstable();
        let q = gl.q();
        let dim = (1..gl.r() as u32).map(|i| q.pow(i) - 1).product();
        Ok(CuspidalRep {
            gl: gl.clone(),
            theta: MultChar::new(top, orbit[0] as i64),
            orbit,
            dim,
            values: Default::default(),
        })
    }

    pub fn q(&self) -> u64 {
        self.gl.q()
    }

    pub fn r(&self) -> usize {
        self.gl.r()
    }

    pub fn gl(&self) -> &Arc<Gl> {
        &self.gl
    }

    /// `θ` normalized to the smallest exponent in its orbit.
    pub fn theta(&self) -> &MultChar {
        &self.theta
    }

    pub fn exponent(&self) -> u64 {
        self.theta.exponent()
    }

    pub fn orbit(&self) -> &[u64] {
        &self.orbit
    }

    /// `Π_{i=1}^{r-1} (q^i - 1)`.
    pub fn dim(&self) -> u64 {
        self.dim
    }

    /// Order `q^r - 1` of the roots of unity carrying the character values.
    pub fn value_order(&self) -> u64 {
        self.theta.order()
    }

    /// Character of `x ↦ x^{-1}`.
    pub fn contragredient(&self) -> CuspidalRep {
        CuspidalRep::new(&self.gl, -(self.exponent() as i64)).expect("inverse of a regular character is regular")
    }

    /// Exponent `ℓ` with `N(γ) = g_q^ℓ`, where `γ` generates `F_{q^r}^×` and `g_q` generates `F_q^×`.
    fn norm_log(&self) -> u64 {
        let top = self.gl.top_field();
        let m = top.unit_order() / (self.q() - 1).max(1);
        let norm = FieldElem::from_log((m % top.unit_order()) as u32);
        let up = self.gl.tower().to_top(1).expect("degree 1 is in the tower");
        up.pull_back(norm)
            .and_then(|x| x.log())
            .expect("the norm lies in the base field") as u64
    }

    /// `σ ⊗ (α∘det)` for `α = θ_a` on `F_q^×`: the orbit of `θ·(α∘N)`.
    pub fn twist_by_det(&self, a: i64) -> CuspidalRep {
        let top = self.gl.top_field();
        let big = top.unit_order() as i64;
        let m = big / (self.q() as i64 - 1).max(1);
        let shift = (a.rem_euclid(self.q() as i64 - 1) * self.norm_log() as i64 % big) * m % big;
        CuspidalRep::new(&self.gl, self.exponent() as i64 + shift).expect("det twists preserve regularity")
    }

    /// `ω_σ(z) = θ(z)` for `z ∈ F_q^×`, as a root sum of order `q^r - 1`.
    pub fn central_value(&self, z: FieldElem) -> Result<RootSum> {
        let up = self.gl.tower().to_top(1)?;
        let e = self.theta.value_exponent(up.apply(z))?;
        Ok(RootSum::root(self.value_order(), e))
    }

    /// Value on a class key: zero off primary classes, otherwise
    /// `(-1)^{r-1} · Σ_{i<d} θ(x^{q^i}) · Π_{i=1}^{ℓ(λ)-1} (1 - q^{d i})`.
    pub fn value_on_class(&self, key: &ClassKey) -> RootSum {
        if let Some(v) = self.values.read().expect("character cache poisoned").get(key) {
            return v.clone();
        }
        let v = self.compute_on_class(key);
        self.values
            .write()
            .expect("character cache poisoned")
            .insert(key.clone(), v.clone());
        v
    }

    fn compute_on_class(&self, key: &ClassKey) -> RootSum {
        let order = self.value_order();
        let ClassKey::Primary { d, eig, lambda } = key else {
            return RootSum::zero(order);
        };
        let (q, r) = (self.q() as i64, self.r());
        let sign = if r % 2 == 1 { 1 } else { -1 };
        let green: i64 = (1..lambda.len() as u32).map(|i| 1 - q.pow(d * i)).product();
        let up = self.gl.tower().to_top(*d).expect("class degree divides r");
        let x = up.apply(FieldElem::from_log(*eig));
        let log = x.log().expect("eigenvalues are nonzero") as u64;
        let mut out = RootSum::zero(order);
        let mut frob = log;
        for _ in 0..*d {
            out.push((frob * self.exponent()) % order, sign * green);
            frob = (frob * self.q()) % order;
        }
        out
    }

    /// `χ_σ(g)` exactly.
    pub fn character(&self, g: &MatG) -> Result<CycloNumber> {
        self.gl.check(g)?;
        Ok(self.value(g).to_cyclo())
    }
}

impl ClassFunction for CuspidalRep {
    fn label(&self) -> String {
        format!("cuspidal(q={},r={},theta={})", self.q(), self.r(), self.exponent())
    }

    fn group(&self) -> &Arc<Gl> {
        &self.gl
    }

    fn value(&self, g: &MatG) -> RootSum {
        self.value_on_class(&self.gl.class_key(g))
    }
}

/// The trivial character.
pub struct TrivialCharacter(pub Arc<Gl>);

impl ClassFunction for TrivialCharacter {
    fn label(&self) -> String {
        "trivial".into()
    }

    fn group(&self) -> &Arc<Gl> {
        &self.0
    }

    fn value(&self, _: &MatG) -> RootSum {
        RootSum::integer(1)
    }
}

/// `α∘det` for `α = θ_a` on `F_q^×`.
pub struct DetCharacter {
    pub gl: Arc<Gl>,
    pub exponent: i64,
}

impl ClassFunction for DetCharacter {
    fn label(&self) -> String {
        format!("det^{}", self.exponent)
    }

    fn group(&self) -> &Arc<Gl> {
        &self.gl
    }

    fn value(&self, g: &MatG) -> RootSum {
        let m = self.gl.field().unit_order();
        let e = g.det().log().expect("invertible") as i64 * self.exponent;
        RootSum::root(m, e.rem_euclid(m as i64) as u64)
    }
}

/// Every regular orbit of `F_{q^r}^×`, one representative each, by increasing exponent.
pub fn list_cuspidals(gl: &Arc<Gl>) -> Result<Vec<CuspidalRep>> {
    let m = gl.top_field().unit_order();
    let q = gl.q();
    let mut out = Vec::new();
    for c in 0..m {
        let size = orbit_size(c, q, m);
        if size == gl.r() {
            let is_min = {
                let mut x = (c * q) % m;
                let mut min = true;
                while x != c {
                    min &= x > c;
                    x = (x * q) % m;
                }
                min
            };
            if is_min {
                out.push(CuspidalRep::new(gl, c as i64)?);
            }
        }
    }
    Ok(out)
}

/// A class function tabulated on every element of `GL_r(F_q)`.
#[derive(Clone, Debug)]
pub struct ClassTable {
    pub values: BTreeMap<MatG, RootSum>,
}

impl ClassTable {
    pub fn tabulate(f: &dyn ClassFunction) -> Result<ClassTable> {
        let els = f.group().elements(SubgroupSpec::FullGroup)?;
        let values = els.par_iter().map(|g| (g.clone(), f.value(g))).collect::<Vec<_>>();
        Ok(ClassTable {
            values: values.into_iter().collect(),
        })
    }
}

fn common_order<'a>(sums: impl Iterator<Item = &'a RootSum>) -> u64 {
    use num_integer::Integer;
    sums.fold(1, |acc, s| acc.lcm(&s.order()))
}

/// `|G|^{-1} Σ_g f1(g) · conj(f2(g))` over complete tables.
pub fn inner_product(gl: &Gl, f1: &ClassTable, f2: &ClassTable) -> Result<CycloNumber> {
    let n = gl.order();
    for (name, t) in [("first", f1), ("second", f2)] {
        if t.values.len() as u64 != n {
            return Err(Error::IncompleteTable(format!(
                "{name} table has {} of {n} elements",
                t.values.len()
            )));
        }
    }
    let order = common_order(f1.values.values().chain(f2.values.values()));
    let mut acc = RootAccumulator::new(order);
    for (g, a) in &f1.values {
        let b = f2
            .values
            .get(g)
            .ok_or_else(|| Error::IncompleteTable(format!("second table lacks {g}")))?;
        acc.add_product(a, &b.conj());
    }
    Ok(acc.to_cyclo(n as i64))
}

fn equal(a: &RootSum, b: &RootSum) -> bool {
    use num_integer::Integer;
    let mut acc = RootAccumulator::new(a.order().lcm(&b.order()));
    acc.add(a);
    acc.add_scaled(b, -1);
    acc.to_cyclo(1).is_zero()
}

/// `Ind_U^M ψ_U (m) = Σ_{x ∈ M/U, x^{-1} m x ∈ U} ψ_U(x^{-1} m x)`, at order `p`.
fn induced_value(gl: &Gl, reps: &[(MatG, MatG)], psi: &AdditiveChar, m: &MatG) -> RootSum {
    let p = gl.field().p();
    let mut out = RootSum::zero(p);
    for (x, x_inv) in reps {
        let c = gl.mul(&gl.mul(x_inv, m), x);
        if gl.contains(SubgroupSpec::UnipotentUpper, &c) {
            out.push(gl.psi_u_exponent(&c, psi) as u64, 1);
        }
    }
    out
}

fn with_inverses(gl: &Gl, reps: Vec<MatG>) -> Vec<(MatG, MatG)> {
    reps.into_iter().map(|x| {
        let xi = gl.inv(&x);
        (x, xi)
    }).collect()
}

/// Whether `f` restricted to the mirabolic, and to the stabilizer of the first basis
/// vector, equals the induced character `Ind_U ψ_U`.
pub fn mirabolic_restriction_check(f: &dyn ClassFunction, psi: &AdditiveChar) -> Result<bool> {
    let gl = f.group();
    for big in [SubgroupSpec::Mirabolic, SubgroupSpec::Stabilizer] {
        let reps = with_inverses(gl, gl.coset_reps(big, SubgroupSpec::UnipotentUpper)?);
        let els = gl.elements(big)?;
        let ok = els
            .par_iter()
            .all(|m| equal(&f.value(m), &induced_value(gl, &reps, psi, m)));
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `⟨Ind_U^G ψ_U, f⟩` from the induced-character formula over all of `G`.
pub fn gelfand_graev_mult(f: &dyn ClassFunction, psi: &AdditiveChar) -> Result<i64> {
    let gl = f.group();
    let reps = with_inverses(gl, gl.coset_reps(SubgroupSpec::FullGroup, SubgroupSpec::UnipotentUpper)?);
    let els = gl.elements(SubgroupSpec::FullGroup)?;
    let values: Vec<(RootSum, RootSum)> = els
        .par_iter()
        .map(|g| (induced_value(gl, &reps, psi, g), f.value(g).conj()))
        .collect();
    let order = common_order(values.iter().flat_map(|(a, b)| [a, b]));
    let mut acc = RootAccumulator::new(order);
    for (a, b) in &values {
        acc.add_product(a, b);
    }
    integer(&acc.to_cyclo(gl.order() as i64))
}

/// `⟨ψ_U, f|_U⟩_U`, which equals the Gelfand–Graev multiplicity by Frobenius reciprocity.
pub fn gelfand_graev_frobenius(f: &dyn ClassFunction, psi: &AdditiveChar) -> Result<i64> {
    let gl = f.group();
    let us = gl.elements(SubgroupSpec::UnipotentUpper)?;
    let vals: Vec<RootSum> = us.iter().map(|u| f.value(u)).collect();
    let order = common_order(vals.iter()) * gl.field().p();
    let mut acc = RootAccumulator::new(order);
    for (u, v) in us.iter().zip(&vals) {
        acc.add_product(&RootSum::root(gl.field().p(), gl.psi_u_exponent(u, psi) as u64), &v.conj());
    }
    integer(&acc.to_cyclo(us.len() as i64))
}

fn integer(x: &CycloNumber) -> Result<i64> {
    x.as_rational()
        .filter(|r| r.is_integer())
        .map(|r| r.to_integer())
        .ok_or_else(|| Error::NotInteger(x.to_string()))
}

/// Number of elements in each class key.
pub fn class_census(gl: &Gl) -> Result<BTreeMap<ClassKey, u64>> {
    let mut out = BTreeMap::new();
    for g in gl.elements(SubgroupSpec::FullGroup)?.iter() {
        *out.entry(gl.class_key(g)).or_insert(0) += 1;
    }
    Ok(out)
}

/// Character values per class key, for reporting.
pub fn character_table(sigma: &CuspidalRep) -> Result<BTreeMap<ClassKey, CycloNumber>> {
    Ok(class_census(&sigma.gl)?
        .into_keys()
        .map(|k| {
            let v = sigma.value_on_class(&k).to_cyclo();
            (k, v)
        })
        .collect())
}
