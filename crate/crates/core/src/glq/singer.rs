//! The Singer torus `F_{q^r}^× ↪ GL_r(F_q)` and the decomposition `G = T · G_{v_1}`.

use super::{Gl, MatG};
use crate::error::Result;
use crate::ffield::{FieldElem, FieldTower};

/// Coordinates of `F_{q^r}` on the basis `1, γ, …, γ^{r-1}`, `γ` the generator.
#[derive(Debug)]
pub(crate) struct SingerBasis {
    /// Indexed by `FieldElem::index` in `F_{q^r}`.
    coords: Vec<Vec<FieldElem>>,
    powers: Vec<FieldElem>,
}

impl SingerBasis {
    pub(crate) fn new(tower: &FieldTower) -> Result<Self> {
        let top = tower.top();
        let base = tower.base();
        let up = tower.to_top(1)?;
        let r = tower.degree() as usize;
        let gamma = top.generator();
        let powers: Vec<FieldElem> = (0..r).map(|j| top.pow(gamma, j as i64)).collect();
        let q = base.q();
        let mut coords = vec![Vec::new(); top.q() as usize];
        for code in 0..q.pow(r as u32) {
            let c: Vec<FieldElem> = (0..r)
                .map(|j| FieldElem::from_index(((code / q.pow(j as u32)) % q) as u32))
                .collect();
            let value = c
                .iter()
                .zip(&powers)
                .fold(FieldElem::ZERO, |acc, (cj, pj)| top.add(acc, top.mul(up.apply(*cj), *pj)));
            debug_assert!(coords[value.index() as usize].is_empty(), "basis is independent");
            coords[value.index() as usize] = c;
        }
        Ok(SingerBasis { coords, powers })
    }
}

impl Gl {
    /// Coordinates of `x ∈ F_{q^r}` on the Singer basis.
    pub fn singer_coordinates(&self, x: FieldElem) -> &[FieldElem] {
        &self.singer.coords[x.index() as usize]
    }

    /// Matrix of multiplication by `x ∈ F_{q^r}^×`: column `j` holds the coordinates of `x·γ^j`.
    pub fn torus_matrix(&self, x: FieldElem) -> MatG {
        let r = self.r;
        let top = self.top_field();
        let mut rows = vec![vec![FieldElem::ZERO; r]; r];
        for (j, pj) in self.singer.powers.iter().enumerate() {
            for (i, c) in self.singer_coordinates(top.mul(x, *pj)).iter().enumerate() {
                rows[i][j] = *c;
            }
        }
        self.mat(&rows).expect("multiplication by a unit is invertible")
    }

    /// `x ∈ F_{q^r}^×` with `torus_matrix(x) = g`, if `g` lies in the torus.
    pub fn singer_element(&self, g: &MatG) -> Option<FieldElem> {
        let x = self.first_column_element(g);
        (self.torus_matrix(x) == *g).then_some(x)
    }

    fn first_column_element(&self, g: &MatG) -> FieldElem {
        let top = self.top_field();
        let up = self.tower.to_top(1).expect("degree 1 is in the tower");
        (0..self.r).fold(FieldElem::ZERO, |acc, i| {
            top.add(acc, top.mul(up.apply(g.entry(i, 0)), self.singer.powers[i]))
        })
    }

    /// The unique `g = x · h` with `x` in the torus and `h` fixing the first basis vector.
    pub fn singer_decompose(&self, g: &MatG) -> (FieldElem, MatG) {
        let x = self.first_column_element(g);
        let top = self.top_field();
        let x_inv = top.inv(x).expect("first column of an invertible matrix is nonzero");
        (x, self.mul(&self.torus_matrix(x_inv), g))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::glq::SubgroupSpec;
    use std::collections::HashSet;

    #[test]
    fn torus_is_a_faithful_homomorphism() {
        for (q, r) in [(2u64, 2usize), (3, 2), (2, 3), (4, 2), (3, 3), (5, 1)] {
            let gl = Gl::shared(q, r).unwrap();
            let top = gl.top_field().clone();
            let mut seen = HashSet::new();
            for x in top.nonzero() {
                let tx = gl.torus_matrix(x);
                assert!(seen.insert(tx.clone()));
                assert_eq!(gl.singer_element(&tx), Some(x));
                assert_eq!(gl.singer_decompose(&tx), (x, gl.identity()));
                for y in top.nonzero().step_by(5) {
                    assert_eq!(gl.mul(&tx, &gl.torus_matrix(y)), gl.torus_matrix(top.mul(x, y)));
                }
            }
            assert_eq!(gl.singer_decompose(&gl.identity()), (FieldElem::ONE, gl.identity()));
        }
    }

    #[test]
    fn torus_acts_irreducibly() {
        // no proper nonzero subspace is stable: the orbit of any nonzero vector spans
        for (q, r) in [(2u64, 3usize), (3, 2), (2, 4)] {
            let gl = Gl::shared(q, r).unwrap();
            let gen = gl.torus_matrix(gl.top_field().generator());
            let cp = gl.charpoly(&gen);
            let irr = gl.irreducibles().iter().any(|f| f.poly == cp);
            assert!(irr, "generator has irreducible characteristic polynomial");
        }
    }

    #[test]
    fn decomposition_is_a_bijection() {
        for (q, r) in [(2u64, 2usize), (3, 2), (2, 3), (4, 2), (5, 2), (3, 3)] {
            if q.pow(r as u32) > 81 {
                continue;
            }
            let gl = Gl::shared(q, r).unwrap();
            let els = gl.elements(SubgroupSpec::FullGroup).unwrap();
            let mut pairs = HashSet::new();
            for g in els.iter() {
                let (x, h) = gl.singer_decompose(g);
                assert!(gl.contains(SubgroupSpec::Stabilizer, &h));
                assert_eq!(gl.mul(&gl.torus_matrix(x), &h), *g);
                assert!(pairs.insert((x, h)));
            }
            let stab = gl.subgroup_order(SubgroupSpec::Stabilizer);
            let torus = gl.subgroup_order(SubgroupSpec::SingerTorus);
            assert_eq!(pairs.len() as u64, stab * torus);
            for x in gl.top_field().nonzero() {
                for h in gl.elements(SubgroupSpec::Stabilizer).unwrap().iter() {
                    let g = gl.mul(&gl.torus_matrix(x), h);
                    assert_eq!(gl.singer_decompose(&g), (x, h.clone()));
                }
            }
        }
    }
}
