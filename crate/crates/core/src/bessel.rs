//! Bessel functions `𝒥(g) = |U|^{-1} Σ_{u∈U} ψ_U(u) χ_σ(g u^{-1})` of cuspidal
//! representations and the operator realization on the mirabolic model.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use rayon::prelude::*;
use serde::Serialize;

use crate::cusp::{ClassFunction, CuspidalRep};
use crate::cyclo::{ComplexValue, CycloNumber, RootAccumulator, RootSum};
use crate::error::{Error, Result};
use crate::ffield::AdditiveChar;
use crate::glq::{Gl, MatG, SubgroupSpec};

/// `𝒥` for a fixed `(σ, ψ)`, memoized per group element.
///
/// Values are held as integer numerators over the common denominator `|U|`, reduced
/// modulo `Φ_M` with `M = p (q^r - 1)`.
pub struct Bessel {
    sigma: CuspidalRep,
    psi: AdditiveChar,
    unipotent: Vec<(MatG, u32)>,
    order: u64,
    cache: RwLock<HashMap<MatG, Arc<RootSum>>>,
}

impl std::fmt::Debug for Bessel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Bessel({:?}, a={})", self.sigma, self.psi.shift())
    }
}

fn compact(acc: &RootAccumulator) -> RootSum {
    let reduced = acc.to_cyclo(1);
    let mut out = RootSum::zero(acc.order());
    for (i, c) in reduced.promote(acc.order()).coeffs().iter().enumerate() {
        out.push(i as u64, c.to_integer());
    }
    out
}

impl Bessel {
    pub fn new(sigma: &CuspidalRep, psi: &AdditiveChar) -> Result<Bessel> {
        let gl = sigma.gl();
        if psi.field().q() != gl.q() {
            return Err(Error::FieldMismatch("additive character over another field".into()));
        }
        if psi.is_trivial() {
            return Err(Error::InvalidArgument("ψ must be nontrivial".into()));
        }
        let unipotent = gl
            .elements(SubgroupSpec::UnipotentUpper)?
            .iter()
            .map(|u| (gl.inv(u), gl.psi_u_exponent(u, psi)))
            .collect();
        Ok(Bessel {
            sigma: sigma.clone(),
            psi: psi.clone(),
            unipotent,
            order: gl.field().p() * sigma.value_order(),
            cache: RwLock::new(HashMap::new()),
        })
    }

    pub fn sigma(&self) -> &CuspidalRep {
        &self.sigma
    }

    pub fn psi(&self) -> &AdditiveChar {
        &self.psi
    }

    pub fn gl(&self) -> &Arc<Gl> {
        self.sigma.gl()
    }

    /// Root order `M` of the numerators.
    pub fn order(&self) -> u64 {
        self.order
    }

    /// Common denominator `|U|`.
    pub fn denominator(&self) -> i64 {
        self.unipotent.len() as i64
    }

    /// `|U| · 𝒥(g)` as a reduced integer combination of `M`-th roots of unity.
    pub fn numerator(&self, g: &MatG) -> Arc<RootSum> {
        if let Some(v) = self.cache.read().expect("bessel cache poisoned").get(g) {
            return v.clone();
        }
        let v = Arc::new(self.compute(g));
        self.cache
            .write()
            .expect("bessel cache poisoned")
            .insert(g.clone(), v.clone());
        v
    }

    fn compute(&self, g: &MatG) -> RootSum {
        let gl = self.gl();
        let chi_order = self.sigma.value_order();
        let psi_step = chi_order;
        let chi_step = gl.field().p();
        let mut acc = RootAccumulator::new(self.order);
        for (u_inv, psi_exp) in &self.unipotent {
            let chi = self.sigma.value(&gl.mul(g, u_inv));
            for &(e, c) in chi.terms() {
                acc.add_root(*psi_exp as u64 * psi_step + e * chi_step, c);
            }
        }
        compact(&acc)
    }

    /// `𝒥(g)` exactly.
    pub fn value(&self, g: &MatG) -> Result<CycloNumber> {
        self.gl().check(g)?;
        Ok(self.exact(g))
    }

    pub(crate) fn exact(&self, g: &MatG) -> CycloNumber {
        let mut acc = RootAccumulator::new(self.order);
        acc.add(&self.numerator(g));
        acc.to_cyclo(self.denominator())
    }

    pub fn is_zero_at(&self, g: &MatG) -> bool {
        self.numerator(g).terms().iter().all(|(_, c)| *c == 0)
    }

    /// Exact table over a subgroup.
    pub fn build_table(&self, domain: SubgroupSpec) -> Result<BesselTable> {
        let els = self.gl().elements(domain)?;
        let values: Vec<(MatG, CycloNumber)> = els.par_iter().map(|g| (g.clone(), self.exact(g))).collect();
        Ok(BesselTable {
            sigma: self.sigma.clone(),
            psi: self.psi.clone(),
            domain,
            values: values.into_iter().collect(),
        })
    }

    /// `Σ_{m ∈ M/U} 𝒥(g1 m) 𝒥(m^{-1} g2) = 𝒥(g1 g2)`.
    pub fn hankel_check(&self, g1: &MatG, g2: &MatG, model: &ModelSpace) -> bool {
        let gl = self.gl();
        let mut lhs = RootAccumulator::new(self.order);
        for (m, m_inv) in model.basis.iter().zip(&model.inverses) {
            let a = self.numerator(&gl.mul(g1, m));
            if a.terms().is_empty() {
                continue;
            }
            lhs.add_product(&a, &self.numerator(&gl.mul(m_inv, g2)));
        }
        let mut rhs = RootAccumulator::new(self.order);
        rhs.add_scaled(&self.numerator(&gl.mul(g1, g2)), self.denominator());
        lhs.to_cyclo(1) == rhs.to_cyclo(1)
    }

    /// Matrix of `L(g)` on the model basis: entry `(k, l)` is `𝒥(m_k^{-1} g m_l)`.
    pub fn operator_l(&self, g: &MatG, model: &ModelSpace) -> Vec<Vec<CycloNumber>> {
        let gl = self.gl();
        model
            .inverses
            .iter()
            .map(|mk_inv| {
                let left = gl.mul(mk_inv, g);
                model.basis.iter().map(|ml| self.exact(&gl.mul(&left, ml))).collect()
            })
            .collect()
    }
}

/// `𝒥` tabulated over a subgroup.
#[derive(Clone)]
pub struct BesselTable {
    pub sigma: CuspidalRep,
    pub psi: AdditiveChar,
    pub domain: SubgroupSpec,
    pub values: BTreeMap<MatG, CycloNumber>,
}

/// One emitted row of a Bessel table.
#[derive(Serialize)]
pub struct BesselRow<'a> {
    pub g: &'a MatG,
    pub value: &'a CycloNumber,
    pub complex: ComplexValue,
}

impl BesselTable {
    pub fn rows(&self) -> impl Iterator<Item = BesselRow<'_>> {
        self.values.iter().map(|(g, v)| BesselRow {
            g,
            value: v,
            complex: v.into(),
        })
    }

    /// `𝒥̌(g) = 𝒥(g^{-1})`.
    pub fn contragredient(&self) -> Result<BesselTable> {
        let gl = self.sigma.gl();
        let values = self
            .values
            .keys()
            .map(|g| {
                self.values
                    .get(&gl.inv(g))
                    .map(|v| (g.clone(), v.clone()))
                    .ok_or(Error::NotClosedUnderInverse)
            })
            .collect::<Result<BTreeMap<_, _>>>()?;
        Ok(BesselTable {
            sigma: self.sigma.contragredient(),
            psi: self.psi.conj(),
            domain: self.domain,
            values,
        })
    }
}

/// Coset representatives of `M/U`, `M` the mirabolic or the stabilizer, with the
/// identity coset represented by the identity and listed first.
#[derive(Clone, Debug)]
pub struct ModelSpace {
    pub kind: SubgroupSpec,
    pub basis: Vec<MatG>,
    pub inverses: Vec<MatG>,
}

impl ModelSpace {
    pub fn new(gl: &Gl, kind: SubgroupSpec) -> Result<ModelSpace> {
        if !matches!(kind, SubgroupSpec::Mirabolic | SubgroupSpec::Stabilizer) {
            return Err(Error::InvalidArgument(format!(
                "model space needs the mirabolic or the stabilizer, not {}",
                kind.name()
            )));
        }
        let mut basis = gl.coset_reps(kind, SubgroupSpec::UnipotentUpper)?;
        let k = basis
            .iter()
            .position(|m| gl.contains(SubgroupSpec::UnipotentUpper, m))
            .expect("U is one of the cosets");
        basis.remove(k);
        basis.insert(0, gl.identity());
        let inverses = basis.iter().map(|m| gl.inv(m)).collect();
        Ok(ModelSpace { kind, basis, inverses })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

pub fn mat_mul(a: &[Vec<CycloNumber>], b: &[Vec<CycloNumber>]) -> Vec<Vec<CycloNumber>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| &a[i][k] * &b[k][j]).sum())
                .collect()
        })
        .collect()
}

pub fn trace(a: &[Vec<CycloNumber>]) -> CycloNumber {
    (0..a.len()).map(|i| a[i][i].clone()).sum()
}
