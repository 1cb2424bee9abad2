//! Polynomials over `F_q`, characteristic polynomials and the irreducible inventory.

use std::collections::BTreeSet;

use serde::Serialize;

use super::linalg;
use super::Entries;
use crate::error::{Error, Result};
use crate::ffield::{FieldElem, FieldSpec, FieldTower};

/// Polynomial with coefficients constant term first.
pub type Poly = Vec<FieldElem>;

/// A monic irreducible of degree `d | r` with its canonical root.
#[derive(Clone, Debug, Serialize)]
pub struct Irreducible {
    pub degree: u32,
    pub poly: Poly,
    /// Smallest discrete logarithm, in `F_{q^d}`, among the roots.
    pub eig: u32,
}

fn trim(mut p: Poly) -> Poly {
    while p.len() > 1 && p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

pub(crate) fn mul(f: &FieldSpec, a: &[FieldElem], b: &[FieldElem]) -> Poly {
    let mut out = vec![FieldElem::ZERO; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(*x, *y));
        }
    }
    trim(out)
}

pub(crate) fn sub(f: &FieldSpec, a: &[FieldElem], b: &[FieldElem]) -> Poly {
    let n = a.len().max(b.len());
    let at = |p: &[FieldElem], i: usize| p.get(i).copied().unwrap_or(FieldElem::ZERO);
    trim((0..n).map(|i| f.sub(at(a, i), at(b, i))).collect())
}

pub(crate) fn power(f: &FieldSpec, a: &[FieldElem], n: usize) -> Poly {
    (0..n).fold(vec![FieldElem::ONE], |acc, _| mul(f, &acc, a))
}

/// `p(A)` for a square matrix `A`.
pub(crate) fn eval_matrix(f: &FieldSpec, p: &[FieldElem], a: &[FieldElem], n: usize) -> Entries {
    let mut acc: Entries = smallvec::SmallVec::from_elem(FieldElem::ZERO, n * n);
    for c in p.iter().rev() {
        acc = linalg::mul(f, &acc, a, n);
        for i in 0..n {
            acc[i * n + i] = f.add(acc[i * n + i], *c);
        }
    }
    acc
}

/// Characteristic polynomial via reduction to upper Hessenberg form.
pub(crate) fn charpoly(f: &FieldSpec, a: &[FieldElem], n: usize) -> Poly {
    let mut h = a.to_vec();
    for j in 0..n.saturating_sub(2) {
        let Some(piv) = (j + 1..n).find(|&i| !h[i * n + j].is_zero()) else {
            continue;
        };
        if piv != j + 1 {
            for c in 0..n {
                h.swap(piv * n + c, (j + 1) * n + c);
            }
            for r in 0..n {
                h.swap(r * n + piv, r * n + j + 1);
            }
        }
        let pinv = f.inv(h[(j + 1) * n + j]).expect("pivot is nonzero");
        for k in j + 2..n {
            let u = f.mul(h[k * n + j], pinv);
            if u.is_zero() {
                continue;
            }
            for c in 0..n {
                h[k * n + c] = f.sub(h[k * n + c], f.mul(u, h[(j + 1) * n + c]));
            }
            for r in 0..n {
                h[r * n + j + 1] = f.add(h[r * n + j + 1], f.mul(u, h[r * n + k]));
            }
        }
    }
    let mut ps: Vec<Poly> = vec![vec![FieldElem::ONE]];
    for m in 1..=n {
        let lin = vec![f.neg(h[(m - 1) * n + m - 1]), FieldElem::ONE];
        let mut pm = mul(f, &lin, &ps[m - 1]);
        let mut t = FieldElem::ONE;
        for i in (1..m).rev() {
            t = f.mul(t, h[i * n + i - 1]);
            let coeff = f.mul(h[(i - 1) * n + m - 1], t);
            if !coeff.is_zero() {
                let term: Poly = ps[i - 1].iter().map(|c| f.mul(*c, coeff)).collect();
                pm = sub(f, &pm, &term);
            }
        }
        ps.push(pm);
    }
    ps.pop().expect("degree n polynomial")
}

/// All monic irreducibles over the tower base whose degree divides the tower degree, as
/// minimal polynomials of elements with Frobenius orbits of full length.
pub(crate) fn irreducible_inventory(tower: &FieldTower) -> Result<Vec<Irreducible>> {
    let q = tower.base().q();
    let mut out = Vec::new();
    for d in tower.degrees() {
        let fd = tower.field(d)?;
        let down = tower.from_base(d)?;
        let m = fd.unit_order();
        let mut seen = BTreeSet::new();
        for e in 0..m {
            if seen.contains(&e) {
                continue;
            }
            let mut orbit = vec![e];
            let mut x = (e * q) % m;
            while x != e {
                orbit.push(x);
                x = (x * q) % m;
            }
            seen.extend(orbit.iter().copied());
            if orbit.len() != d as usize {
                continue;
            }
            let ext = orbit.iter().fold(vec![FieldElem::ONE], |acc, &x| {
                mul(fd, &acc, &[fd.neg(FieldElem::from_log(x as u32)), FieldElem::ONE])
            });
            let poly = ext
                .iter()
                .map(|c| down.pull_back(*c))
                .collect::<Option<Poly>>()
                .ok_or_else(|| Error::FieldMismatch("minimal polynomial leaves the base field".into()))?;
            out.push(Irreducible {
                degree: d,
                poly,
                eig: e as u32,
            });
        }
    }
    Ok(out)
}
