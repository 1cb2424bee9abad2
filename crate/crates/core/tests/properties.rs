//! Randomized invariants through the public API.

use std::sync::Arc;

use cuspidal::epsilon::epsilon_pair;
use cuspidal::ffield::FieldSpec;
use cuspidal::{list_cuspidals, AdditiveChar, CycloNumber, FieldElem, Gl, LevelZeroRep, MatG, Rational};
use proptest::prelude::*;

fn element(f: &FieldSpec, i: u32) -> FieldElem {
    FieldElem::from_index(i % f.q() as u32)
}

fn matrix(gl: &Gl, idx: &[u32]) -> Option<MatG> {
    let f = gl.field();
    let r = gl.r();
    let rows: Vec<Vec<FieldElem>> = (0..r).map(|i| (0..r).map(|j| element(f, idx[i * r + j])).collect()).collect();
    gl.mat(&rows).ok()
}

const GROUPS: [(u64, usize); 4] = [(2, 2), (3, 2), (4, 2), (2, 3)];

fn group(i: usize) -> Arc<Gl> {
    let (q, r) = GROUPS[i % GROUPS.len()];
    Gl::shared(q, r).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn field_axioms(q in prop::sample::select(vec![2u64, 3, 4, 5, 7, 8, 9, 16, 25, 27]), a: u32, b: u32, c: u32) {
        let f = Gl::shared(q, 1).unwrap().field().clone();
        let (a, b, c) = (element(&f, a), element(&f, b), element(&f, c));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), f.from_int(0));
        if !a.is_zero() {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), f.from_int(1));
        }
        // Frobenius is additive and the trace lands in the prime field
        prop_assert_eq!(f.frobenius(f.add(a, b), 1), f.add(f.frobenius(a, 1), f.frobenius(b, 1)));
        prop_assert!((f.trace(a) as u64) < f.p());
    }

    #[test]
    fn characters_are_class_functions(g in 0usize..4, x in prop::collection::vec(any::<u32>(), 9), h in prop::collection::vec(any::<u32>(), 9)) {
        let gl = group(g);
        let (x, h) = (matrix(&gl, &x), matrix(&gl, &h));
        prop_assume!(x.is_some() && h.is_some());
        let (x, h) = (x.unwrap(), h.unwrap());
        let y = gl.conjugate(&h, &x);
        prop_assert_eq!(gl.class_key(&x), gl.class_key(&y));
        for sigma in list_cuspidals(&gl).unwrap() {
            let chi = sigma.character(&x).unwrap();
            prop_assert_eq!(&chi, &sigma.character(&y).unwrap());
            prop_assert_eq!(chi.conj(), sigma.character(&gl.inv(&x)).unwrap());
        }
    }

    #[test]
    fn epsilon_functional_equation(g in 0usize..4, i: usize, j: usize, a in 0i64..12, b in 0i64..12) {
        let gl = group(g);
        let cusp = list_cuspidals(&gl).unwrap();
        let psi = AdditiveChar::standard(gl.field());
        let t1 = LevelZeroRep::new(cusp[i % cusp.len()].clone(), CycloNumber::root_of_unity(12, a).unwrap()).unwrap();
        let t2 = LevelZeroRep::new(cusp[j % cusp.len()].clone(), CycloNumber::root_of_unity(12, b).unwrap()).unwrap();
        let eps = epsilon_pair(&t1, &t2, &psi).unwrap();
        let dual = epsilon_pair(&t1.contragredient(), &t2.contragredient(), &psi.conj()).unwrap();
        // ε(s) ε_dual(1 - s) = 1 at several points
        let mut evaluated = 0;
        for s in [Rational::new(0, 1), Rational::new(1, 2), Rational::new(1, 3)] {
            let lhs = eps.eval_exact(s);
            let rhs = dual.eval_exact(Rational::from_integer(1) - s);
            if let (Some(l), Some(r)) = (lhs, rhs) {
                prop_assert!((&l * &r).is_one());
                evaluated += 1;
            }
        }
        prop_assert!(evaluated >= 2);
        prop_assert!((eps.eval_complex(0.5).norm() - 1.0).abs() < 1e-9);
    }
}
