//! Conjugacy-class keys from primary Jordan data.

use serde::Serialize;

use super::{linalg, poly, Gl, MatG};
use crate::error::{Error, Result};

/// Weakly decreasing list of positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
#[serde(transparent)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!("{parts:?} is not a partition")));
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let largest = self.0.first().copied().unwrap_or(0);
        Partition((1..=largest).map(|i| self.0.iter().filter(|p| **p >= i).count() as u32).collect())
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Class data sufficient for cuspidal character values.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum ClassKey {
    /// Characteristic polynomial is not a power of a single irreducible.
    NonPrimary,
    /// Characteristic polynomial `f^{r/d}`, `f` of degree `d` with canonical root
    /// `g_d^eig` in `F_{q^d}`, Jordan type `lambda ⊢ r/d`.
    Primary { d: u32, eig: u32, lambda: Partition },
}

impl std::fmt::Display for ClassKey {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ClassKey::NonPrimary => write!(f, "nonprimary"),
            ClassKey::Primary { d, eig, lambda } => write!(f, "d={d},eig={eig},lambda={lambda}"),
        }
    }
}

impl Gl {
    /// Class key of `g`, memoized per element.
    pub fn class_key(&self, g: &MatG) -> ClassKey {
        if let Some(k) = self.classes.read().expect("class cache poisoned").get(g) {
            return k.clone();
        }
        let key = self.compute_class_key(g);
        self.classes
            .write()
            .expect("class cache poisoned")
            .insert(g.clone(), key.clone());
        key
    }

    fn compute_class_key(&self, g: &MatG) -> ClassKey {
        let cp = self.charpoly(g);
        let Some(&idx) = self.primary.get(&cp) else {
            return ClassKey::NonPrimary;
        };
        let irr = &self.irreducibles[idx];
        let (r, d) = (self.r, irr.degree as usize);
        let m = r / d;
        let fg = poly::eval_matrix(&self.field, &irr.poly, &g.entries, r);
        let mut power = fg.clone();
        let mut nullities = vec![0u32];
        loop {
            let n = ((r - linalg::rank(&self.field, &power, r, r)) / d) as u32;
            nullities.push(n);
            if n as usize == m {
                break;
            }
            power = linalg::mul(&self.field, &power, &fg, r);
        }
        // number of blocks of size at least j
        let at_least: Vec<u32> = nullities.windows(2).map(|w| w[1] - w[0]).collect();
        let lambda = Partition(at_least).conjugate();
        ClassKey::Primary {
            d: irr.degree,
            eig: irr.eig,
            lambda,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn primary(d: u32, eig: u32, parts: &[u32]) -> ClassKey {
        ClassKey::Primary {
            d,
            eig,
            lambda: Partition::new(parts.to_vec()).unwrap(),
        }
    }

    #[test]
    fn class_key_examples() {
        let gl = Gl::shared(3, 2).unwrap();
        assert_eq!(gl.class_key(&gl.identity()), primary(1, 0, &[1, 1]));
        let u = gl.mat_int(&[&[1, 1], &[0, 1]]).unwrap();
        assert_eq!(gl.class_key(&u), primary(1, 0, &[2]));
        let j = gl.mat_int(&[&[0, -1], &[1, 0]]).unwrap();
        // roots of x^2 + 1 in F_9 are the elements of order 4: g^2 and g^6
        assert_eq!(gl.class_key(&j), primary(2, 2, &[1]));
        let diag = gl.mat_int(&[&[1, 0], &[0, 2]]).unwrap();
        assert_eq!(gl.class_key(&diag), ClassKey::NonPrimary);
    }

    #[test]
    fn partitions() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        let p = Partition::new(vec![3, 1]).unwrap();
        assert_eq!(p.conjugate().parts(), &[2, 1, 1]);
        assert_eq!(p.conjugate().conjugate(), p);
        assert_eq!(p.total(), 4);
    }

    #[test]
    fn class_key_is_conjugation_invariant() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for (q, r) in [(2u64, 2usize), (3, 2), (4, 2), (5, 2), (2, 3), (3, 3)] {
            let gl = Gl::shared(q, r).unwrap();
            let els = gl.elements(crate::glq::SubgroupSpec::FullGroup).unwrap();
            for _ in 0..1000 {
                let g = &els[rng.gen_range(0..els.len())];
                let h = &els[rng.gen_range(0..els.len())];
                assert_eq!(gl.class_key(&gl.conjugate(h, g)), gl.class_key(g));
            }
        }
    }

    #[test]
    fn class_census_gl2() {
        // GL_2(F_q) has q - 1 central, q - 1 unipotent-type, (q-1)(q-2)/2 split and
        // (q^2 - q)/2 elliptic classes
        for q in [2u64, 3, 4, 5] {
            let gl = Gl::shared(q, 2).unwrap();
            let els = gl.elements(crate::glq::SubgroupSpec::FullGroup).unwrap();
            let mut counts = std::collections::BTreeMap::new();
            for g in els.iter() {
                *counts.entry(gl.class_key(g)).or_insert(0u64) += 1;
            }
            let central = counts.keys().filter(|k| matches!(k, ClassKey::Primary { d: 1, lambda, .. } if lambda.len() == 2)).count();
            let elliptic = counts.keys().filter(|k| matches!(k, ClassKey::Primary { d: 2, .. })).count();
            assert_eq!(central as u64, q - 1);
            assert_eq!(elliptic as u64, (q * q - q) / 2);
            for (k, n) in &counts {
                if let ClassKey::Primary { d: 2, .. } = k {
                    assert_eq!(*n, q * q - q, "elliptic class size");
                }
            }
            let nonprimary = counts.get(&ClassKey::NonPrimary).copied().unwrap_or(0);
            assert_eq!(nonprimary, (q - 1) * (q - 2) / 2 * q * (q + 1));
        }
    }
}
