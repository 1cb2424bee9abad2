//! Distinguished subgroups, their enumeration, coset representatives and `ψ_U`.

use std::collections::HashSet;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{linalg, Gl, MatG};
use crate::cyclo::CycloNumber;
use crate::error::{Error, Result};
use crate::ffield::{AdditiveChar, FieldElem};

/// Subgroups of `GL_r(F_q)` that can be enumerated.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SubgroupSpec {
    FullGroup,
    /// Upper unitriangular matrices.
    UnipotentUpper,
    /// Last row `(0, …, 0, 1)`.
    Mirabolic,
    /// First column `(1, 0, …, 0)ᵀ`.
    Stabilizer,
    /// Multiplication by `F_{q^r}^×` on the basis `1, γ, …, γ^{r-1}`.
    SingerTorus,
}

impl SubgroupSpec {
    pub const ALL: [SubgroupSpec; 5] = [
        SubgroupSpec::FullGroup,
        SubgroupSpec::UnipotentUpper,
        SubgroupSpec::Mirabolic,
        SubgroupSpec::Stabilizer,
        SubgroupSpec::SingerTorus,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SubgroupSpec::FullGroup => "full",
            SubgroupSpec::UnipotentUpper => "unipotent",
            SubgroupSpec::Mirabolic => "mirabolic",
            SubgroupSpec::Stabilizer => "stabilizer",
            SubgroupSpec::SingerTorus => "singer",
        }
    }

    fn slot(self) -> usize {
        self as usize
    }
}

fn gl_order(q: u64, r: u32) -> u64 {
    let qr = q.pow(r);
    (0..r).map(|i| qr - q.pow(i)).product()
}

impl Gl {
    /// Order of a subgroup, from closed formulas.
    pub fn subgroup_order(&self, spec: SubgroupSpec) -> u64 {
        let (q, r) = (self.q(), self.r as u32);
        match spec {
            SubgroupSpec::FullGroup => gl_order(q, r),
            SubgroupSpec::UnipotentUpper => q.pow(r * (r - 1) / 2),
            SubgroupSpec::Mirabolic | SubgroupSpec::Stabilizer => q.pow(r - 1) * gl_order(q, r - 1),
            SubgroupSpec::SingerTorus => q.pow(r) - 1,
        }
    }

    pub fn contains(&self, spec: SubgroupSpec, g: &MatG) -> bool {
        let r = self.r;
        let one = FieldElem::ONE;
        let zero = FieldElem::ZERO;
        let unit = |i: usize, j: usize| if i == j { one } else { zero };
        match spec {
            SubgroupSpec::FullGroup => true,
            SubgroupSpec::UnipotentUpper => {
                (0..r).all(|i| (0..=i).all(|j| g.entry(i, j) == unit(i, j)))
            }
            SubgroupSpec::Mirabolic => (0..r).all(|j| g.entry(r - 1, j) == unit(r - 1, j)),
            SubgroupSpec::Stabilizer => (0..r).all(|i| g.entry(i, 0) == unit(i, 0)),
            SubgroupSpec::SingerTorus => self.singer_element(g).is_some(),
        }
    }

    /// All elements of a subgroup in row-major lexicographic order (Singer torus included).
    pub fn elements(&self, spec: SubgroupSpec) -> Result<Arc<Vec<MatG>>> {
        let size = self.subgroup_order(spec);
        if size > self.limits.group_cap {
            return Err(Error::GroupTooLarge {
                size,
                cap: self.limits.group_cap,
            });
        }
        let slot = &self.elements[spec.slot()];
        if let Some(v) = slot.get() {
            return Ok(v.clone());
        }
        let els = match spec {
            SubgroupSpec::SingerTorus => {
                let mut v: Vec<MatG> = self.top_field().nonzero().map(|x| self.torus_matrix(x)).collect();
                v.sort();
                v
            }
            _ => self.enumerate_rows(spec),
        };
        debug_assert_eq!(els.len() as u64, size);
        Ok(slot.get_or_init(|| Arc::new(els)).clone())
    }

    /// Streams the elements of a subgroup.
    pub fn iterate_subgroup(&self, spec: SubgroupSpec) -> Result<impl Iterator<Item = MatG>> {
        let els = self.elements(spec)?;
        Ok((0..els.len()).map(move |i| els[i].clone()))
    }

    fn vectors(&self) -> Vec<Vec<FieldElem>> {
        let q = self.q();
        let r = self.r;
        (0..q.pow(r as u32))
            .map(|code| {
                (0..r)
                    .map(|i| FieldElem::from_index(((code / q.pow((r - 1 - i) as u32)) % q) as u32))
                    .collect()
            })
            .collect()
    }

    fn enumerate_rows(&self, spec: SubgroupSpec) -> Vec<MatG> {
        let r = self.r;
        let all = self.vectors();
        let e = |i: usize| -> Vec<FieldElem> {
            (0..r).map(|j| if i == j { FieldElem::ONE } else { FieldElem::ZERO }).collect()
        };
        let candidates: Vec<Vec<Vec<FieldElem>>> = (0..r)
            .map(|i| {
                let keep = |v: &Vec<FieldElem>| match spec {
                    SubgroupSpec::FullGroup => true,
                    SubgroupSpec::UnipotentUpper => {
                        (0..=i).all(|j| v[j] == if i == j { FieldElem::ONE } else { FieldElem::ZERO })
                    }
                    SubgroupSpec::Mirabolic => i + 1 < r || *v == e(r - 1),
                    SubgroupSpec::Stabilizer => v[0] == if i == 0 { FieldElem::ONE } else { FieldElem::ZERO },
                    SubgroupSpec::SingerTorus => unreachable!("torus is not enumerated by rows"),
                };
                all.iter().filter(|v| keep(v)).cloned().collect()
            })
            .collect();
        let mut out = Vec::new();
        let mut rows: Vec<Vec<FieldElem>> = Vec::with_capacity(r);
        self.dfs(&candidates, &mut rows, &mut Vec::new(), &mut out);
        out
    }

    fn dfs(
        &self,
        candidates: &[Vec<Vec<FieldElem>>],
        rows: &mut Vec<Vec<FieldElem>>,
        basis: &mut Vec<(usize, Vec<FieldElem>)>,
        out: &mut Vec<MatG>,
    ) {
        let i = rows.len();
        if i == self.r {
            out.push(self.mat(rows).expect("independent rows"));
            return;
        }
        for v in &candidates[i] {
            let mut next = basis.clone();
            if linalg::extend_basis(&self.field, &mut next, v) {
                rows.push(v.clone());
                self.dfs(candidates, rows, &mut next, out);
                rows.pop();
            }
        }
    }

    fn check_pair(&self, big: SubgroupSpec, small: SubgroupSpec) -> Result<()> {
        match (big, small) {
            (SubgroupSpec::Mirabolic | SubgroupSpec::Stabilizer | SubgroupSpec::FullGroup, SubgroupSpec::UnipotentUpper) => Ok(()),
            _ => Err(Error::UnsupportedPair(big.name(), small.name())),
        }
    }

    /// One representative per left coset `m·small`, the first in enumeration order.
    pub fn coset_reps(&self, big: SubgroupSpec, small: SubgroupSpec) -> Result<Vec<MatG>> {
        self.check_pair(big, small)?;
        self.reps(big, small, true)
    }

    /// One representative per right coset `small·m`, the first in enumeration order.
    pub fn right_coset_reps(&self, big: SubgroupSpec, small: SubgroupSpec) -> Result<Vec<MatG>> {
        self.check_pair(big, small)?;
        self.reps(big, small, false)
    }

    fn reps(&self, big: SubgroupSpec, small: SubgroupSpec, left: bool) -> Result<Vec<MatG>> {
        let bigs = self.elements(big)?;
        let smalls = self.elements(small)?;
        let mut covered = HashSet::with_capacity(bigs.len());
        let mut reps = Vec::new();
        for m in bigs.iter() {
            if covered.contains(m) {
                continue;
            }
            reps.push(m.clone());
            for u in smalls.iter() {
                covered.insert(if left { self.mul(m, u) } else { self.mul(u, m) });
            }
        }
        Ok(reps)
    }

    /// `Tr(a · Σ u_{i,i+1}) mod p` without a membership check.
    pub(crate) fn psi_u_exponent(&self, u: &MatG, psi: &AdditiveChar) -> u32 {
        let f = &self.field;
        let s = (0..self.r - 1).fold(FieldElem::ZERO, |acc, i| f.add(acc, u.entry(i, i + 1)));
        psi.exponent(s)
    }

    /// `ψ_U(u) = ψ(Σ_i u_{i,i+1})` on the upper unitriangular group.
    pub fn psi_u(&self, u: &MatG, psi: &AdditiveChar) -> Result<CycloNumber> {
        self.check(u)?;
        if !Arc::ptr_eq(psi.field(), &self.field) && psi.field().q() != self.q() {
            return Err(Error::FieldMismatch("additive character over another field".into()));
        }
        if !self.contains(SubgroupSpec::UnipotentUpper, u) {
            return Err(Error::NotInSubgroup("the upper unitriangular group"));
        }
        CycloNumber::root_of_unity(self.field.p(), self.psi_u_exponent(u, psi) as i64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_counts() {
        for (q, r) in [(2u64, 2usize), (3, 2), (4, 2), (5, 2), (2, 3), (3, 3)] {
            let gl = Gl::shared(q, r).unwrap();
            for spec in SubgroupSpec::ALL {
                let els = gl.elements(spec).unwrap();
                assert_eq!(els.len() as u64, gl.subgroup_order(spec), "{spec:?} q={q} r={r}");
                assert!(els.windows(2).all(|w| w[0] < w[1]), "strictly increasing order");
                assert!(els.iter().all(|g| gl.contains(spec, g)));
            }
        }
        let gl = Gl::shared(3, 2).unwrap();
        assert_eq!(gl.elements(SubgroupSpec::UnipotentUpper).unwrap().len(), 3);
        assert_eq!(gl.elements(SubgroupSpec::Mirabolic).unwrap().len(), 6);
        assert_eq!(Gl::shared(2, 2).unwrap().elements(SubgroupSpec::FullGroup).unwrap().len(), 6);
    }

    #[test]
    fn full_enumeration_matches_brute_force() {
        let gl = Gl::shared(3, 2).unwrap();
        let els: Vec<FieldElem> = gl.field().elements().collect();
        let mut brute = Vec::new();
        for a in &els {
            for b in &els {
                for c in &els {
                    for d in &els {
                        if let Ok(m) = gl.mat(&[vec![*a, *b], vec![*c, *d]]) {
                            brute.push(m);
                        }
                    }
                }
            }
        }
        assert_eq!(*gl.elements(SubgroupSpec::FullGroup).unwrap(), brute);
    }

    #[test]
    fn cap_is_enforced() {
        let limits = crate::config::Limits {
            group_cap: 40,
            ..Default::default()
        };
        let gl = Gl::new(3, 2, &limits).unwrap();
        assert!(gl.elements(SubgroupSpec::UnipotentUpper).is_ok());
        assert!(matches!(gl.elements(SubgroupSpec::FullGroup), Err(Error::GroupTooLarge { .. })));
    }

    #[test]
    fn coset_rep_counts() {
        let gl = Gl::shared(3, 2).unwrap();
        assert_eq!(gl.coset_reps(SubgroupSpec::Mirabolic, SubgroupSpec::UnipotentUpper).unwrap().len(), 2);
        let gl2 = Gl::shared(2, 2).unwrap();
        assert_eq!(gl2.coset_reps(SubgroupSpec::FullGroup, SubgroupSpec::UnipotentUpper).unwrap().len(), 3);
        // |M| = 4·6 = 24 and |U| = 8 in GL_3(F_2)
        let gl3 = Gl::shared(2, 3).unwrap();
        let reps = gl3.coset_reps(SubgroupSpec::Mirabolic, SubgroupSpec::UnipotentUpper).unwrap();
        assert_eq!(reps.len(), 3);
        assert!(matches!(
            gl.coset_reps(SubgroupSpec::UnipotentUpper, SubgroupSpec::Mirabolic),
            Err(Error::UnsupportedPair(..))
        ));
    }

    #[test]
    fn cosets_partition_the_group() {
        for (q, r) in [(2u64, 3usize), (3, 2), (4, 2)] {
            let gl = Gl::shared(q, r).unwrap();
            let u = gl.elements(SubgroupSpec::UnipotentUpper).unwrap();
            for big in [SubgroupSpec::Mirabolic, SubgroupSpec::Stabilizer, SubgroupSpec::FullGroup] {
                for left in [true, false] {
                    let reps = if left {
                        gl.coset_reps(big, SubgroupSpec::UnipotentUpper).unwrap()
                    } else {
                        gl.right_coset_reps(big, SubgroupSpec::UnipotentUpper).unwrap()
                    };
                    assert_eq!(reps.len() as u64 * u.len() as u64, gl.subgroup_order(big));
                    let mut all = HashSet::new();
                    for m in &reps {
                        for x in u.iter() {
                            let p = if left { gl.mul(m, x) } else { gl.mul(x, m) };
                            assert!(gl.contains(big, &p));
                            assert!(all.insert(p), "cosets are disjoint");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn psi_u_examples_and_homomorphism() {
        let gl = Gl::shared(3, 2).unwrap();
        let psi = AdditiveChar::standard(gl.field());
        assert!(gl.psi_u(&gl.identity(), &psi).unwrap().is_one());
        let u = gl.mat_int(&[&[1, 1], &[0, 1]]).unwrap();
        assert_eq!(gl.psi_u(&u, &psi).unwrap(), CycloNumber::root_of_unity(3, 1).unwrap());
        let not_u = gl.mat_int(&[&[1, 0], &[1, 1]]).unwrap();
        assert!(gl.psi_u(&not_u, &psi).is_err());

        let gl3 = Gl::shared(2, 3).unwrap();
        let psi2 = AdditiveChar::standard(gl3.field());
        for corner in [0, 1] {
            let u = gl3.mat_int(&[&[1, 1, corner], &[0, 1, 1], &[0, 0, 1]]).unwrap();
            assert!(gl3.psi_u(&u, &psi2).unwrap().is_one());
        }

        for (q, r) in [(2u64, 3usize), (3, 3), (4, 2), (5, 2)] {
            let gl = Gl::shared(q, r).unwrap();
            let psi = AdditiveChar::standard(gl.field());
            let us = gl.elements(SubgroupSpec::UnipotentUpper).unwrap();
            for x in us.iter() {
                for y in us.iter() {
                    let lhs = gl.psi_u(&gl.mul(x, y), &psi).unwrap();
                    assert_eq!(lhs, &gl.psi_u(x, &psi).unwrap() * &gl.psi_u(y, &psi).unwrap());
                    let comm = gl.mul(&gl.mul(x, y), &gl.mul(&gl.inv(x), &gl.inv(y)));
                    assert!(gl.psi_u(&comm, &psi).unwrap().is_one(), "trivial on [U, U]");
                }
            }
        }
    }
}
