//! Dense row-major linear algebra over a finite field.

use smallvec::SmallVec;

use super::Entries;
use crate::ffield::{FieldElem, FieldSpec};

pub(crate) fn mul(f: &FieldSpec, a: &[FieldElem], b: &[FieldElem], n: usize) -> Entries {
    let mut out: Entries = SmallVec::from_elem(FieldElem::ZERO, n * n);
    for i in 0..n {
        for k in 0..n {
            let aik = a[i * n + k];
            if aik.is_zero() {
                continue;
            }
            for j in 0..n {
                let c = &mut out[i * n + j];
                *c = f.add(*c, f.mul(aik, b[k * n + j]));
            }
        }
    }
    out
}

/// Row-reduces `m` (`rows × cols`) in place; returns the rank and the signed product of
/// pivots, which is the determinant when `m` is square of full rank.
fn eliminate(f: &FieldSpec, m: &mut [FieldElem], rows: usize, cols: usize) -> (usize, FieldElem) {
    let mut rank = 0;
    let mut det = FieldElem::ONE;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&i| !m[i * cols + c].is_zero()) else {
            continue;
        };
        if p != rank {
            for j in 0..cols {
                m.swap(p * cols + j, rank * cols + j);
            }
            det = f.neg(det);
        }
        let pivot = m[rank * cols + c];
        det = f.mul(det, pivot);
        let pinv = f.inv(pivot).expect("pivot is nonzero");
        for i in rank + 1..rows {
            let factor = f.mul(m[i * cols + c], pinv);
            if factor.is_zero() {
                continue;
            }
            for j in c..cols {
                let v = f.mul(factor, m[rank * cols + j]);
                m[i * cols + j] = f.sub(m[i * cols + j], v);
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    (rank, det)
}

pub(crate) fn det(f: &FieldSpec, a: &[FieldElem], n: usize) -> FieldElem {
    let mut m = a.to_vec();
    let (rank, det) = eliminate(f, &mut m, n, n);
    if rank < n {
        FieldElem::ZERO
    } else {
        det
    }
}

pub(crate) fn rank(f: &FieldSpec, a: &[FieldElem], rows: usize, cols: usize) -> usize {
    let mut m = a.to_vec();
    eliminate(f, &mut m, rows, cols).0
}

/// Gauss–Jordan inverse; `None` when singular.
pub(crate) fn inverse(f: &FieldSpec, a: &[FieldElem], n: usize) -> Option<Entries> {
    let w = 2 * n;
    let mut m = vec![FieldElem::ZERO; n * w];
    for i in 0..n {
        m[i * w..i * w + n].copy_from_slice(&a[i * n..(i + 1) * n]);
        m[i * w + n + i] = FieldElem::ONE;
    }
    for c in 0..n {
        let p = (c..n).find(|&i| !m[i * w + c].is_zero())?;
        if p != c {
            for j in 0..w {
                m.swap(p * w + j, c * w + j);
            }
        }
        let pinv = f.inv(m[c * w + c]).ok()?;
        for j in 0..w {
            m[c * w + j] = f.mul(m[c * w + j], pinv);
        }
        for i in 0..n {
            if i == c {
                continue;
            }
            let factor = m[i * w + c];
            if factor.is_zero() {
                continue;
            }
            for j in 0..w {
                let v = f.mul(factor, m[c * w + j]);
                m[i * w + j] = f.sub(m[i * w + j], v);
            }
        }
    }
    Some((0..n).flat_map(|i| m[i * w + n..i * w + w].to_vec()).collect())
}

/// Reduces `v` against an echelon basis; returns `true` and extends the basis when
/// `v` is independent of it.
pub(crate) fn extend_basis(f: &FieldSpec, basis: &mut Vec<(usize, Vec<FieldElem>)>, v: &[FieldElem]) -> bool {
    let mut w = v.to_vec();
    for (pivot, b) in basis.iter() {
        let c = w[*pivot];
        if !c.is_zero() {
            for (wj, bj) in w.iter_mut().zip(b) {
                *wj = f.sub(*wj, f.mul(c, *bj));
            }
        }
    }
    let Some(pivot) = w.iter().position(|x| !x.is_zero()) else {
        return false;
    };
    let inv = f.inv(w[pivot]).expect("pivot is nonzero");
    for x in w.iter_mut() {
        *x = f.mul(*x, inv);
    }
    // keep existing rows reduced at the new pivot
    for (_, b) in basis.iter_mut() {
        let c = b[pivot];
        if !c.is_zero() {
            for (bj, wj) in b.iter_mut().zip(&w) {
                *bj = f.sub(*bj, f.mul(c, *wj));
            }
        }
    }
    basis.push((pivot, w));
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffield::FieldSpec;

    /// Cofactor expansion along the first row.
    fn laplace(f: &FieldSpec, a: &[FieldElem], n: usize) -> FieldElem {
        if n == 1 {
            return a[0];
        }
        let mut acc = FieldElem::ZERO;
        for j in 0..n {
            let minor: Vec<FieldElem> = (1..n)
                .flat_map(|i| (0..n).filter(move |&c| c != j).map(move |c| (i, c)))
                .map(|(i, c)| a[i * n + c])
                .collect();
            let term = f.mul(a[j], laplace(f, &minor, n - 1));
            acc = if j % 2 == 0 { f.add(acc, term) } else { f.sub(acc, term) };
        }
        acc
    }

    #[test]
    fn determinant_matches_cofactor_expansion() {
        let f = FieldSpec::new(3, 1).unwrap();
        let n = 3;
        for code in (0..3u32.pow(9)).step_by(7) {
            let a: Vec<FieldElem> = (0..9)
                .map(|i| f.from_int(((code / 3u32.pow(i)) % 3) as i64))
                .collect();
            let d = det(&f, &a, n);
            assert_eq!(d, laplace(&f, &a, n));
            assert_eq!(rank(&f, &a, n, n) == n, !d.is_zero());
            if let Some(inv) = inverse(&f, &a, n) {
                let id = mul(&f, &a, &inv, n);
                for i in 0..n {
                    for j in 0..n {
                        assert_eq!(id[i * n + j], if i == j { FieldElem::ONE } else { FieldElem::ZERO });
                    }
                }
            } else {
                assert!(d.is_zero());
            }
        }
    }
}
