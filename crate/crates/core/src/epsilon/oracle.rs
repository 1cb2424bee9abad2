//! Independent evaluation of the epsilon factor from the zeta integral.
//!
//! With `Φ` the indicator of `e_r(1 + p_E M_r(o_E))` and `W_1, W_2` the Whittaker
//! functions supported on `U E^× GL_r(o_E)`, the integral `Z̃(s)` reduces to
//! `c · (T_0 + T · X/(1 - X))`, where
//!
//! * `c = q^{-r/2}` is the volume factor of `Φ̂`,
//! * `P(y) = Σ_{h∈U\G_{v_1}} 𝒥_1(hy) 𝒥_2(hy)` for `y` in the Singer torus,
//! * `T_0 = Σ_y ψ((y^{-1})_{r1}) P(y)` collects the valuation-zero shell,
//! * `T = Σ_y P(y)` and `X = (t_2/t_1) q^{r(s-1)}` sum the negative-valuation shells.
//!
//! Here `𝒥_1 = 𝒥_{σ_1,ψ}` and `𝒥_2 = 𝒥_{σ̌_2,ψ̄}`. Dividing by the `L`-factors as
//! Laurent polynomials in `Y = q^{rs}` must leave a monomial.

use serde::Serialize;

use super::{l_factor_pair, LFactorSpec, LaurentPoly, LevelZeroRep, SMonomial};
use crate::bessel::Bessel;
use crate::cyclo::{CycloNumber, Rational, RootAccumulator};
use crate::error::{Error, Result};
use crate::ffield::AdditiveChar;
use crate::glq::SubgroupSpec;

#[derive(Clone, Debug, Serialize)]
pub struct ZetaOracle {
    /// Valuation-zero shell sum `T_0`.
    pub shell_zero: CycloNumber,
    /// `T`, the coefficient of the geometric tail.
    pub tail: CycloNumber,
    pub l_factor: LFactorSpec,
    pub epsilon: SMonomial,
}

pub fn zeta_tilde_oracle(t1: &LevelZeroRep, t2: &LevelZeroRep, psi: &AdditiveChar) -> Result<ZetaOracle> {
    let l_factor = l_factor_pair(t1, t2)?;
    let l_dual = l_factor_pair(&t1.contragredient(), &t2.contragredient())?;
    let gl = t1.sigma.gl();
    let b1 = Bessel::new(&t1.sigma, psi)?;
    let b2 = Bessel::new(&t2.sigma.contragredient(), &psi.conj())?;
    let order = b1.order();
    let psi_step = order / gl.field().p();
    let r = gl.r();
    let stab = gl.right_coset_reps(SubgroupSpec::Stabilizer, SubgroupSpec::UnipotentUpper)?;
    let top = gl.top_field().clone();

    let mut shell = RootAccumulator::new(order);
    let mut tail = RootAccumulator::new(order);
    for y in top.nonzero() {
        let ym = gl.torus_matrix(y);
        let y_inv = gl.torus_matrix(top.inv(y)?);
        let shift = psi.exponent(y_inv.entry(r - 1, 0)) as u64 * psi_step;
        for h in &stab {
            let hy = gl.mul(h, &ym);
            let (j1, j2) = (b1.numerator(&hy), b2.numerator(&hy));
            tail.add_product(&j1, &j2);
            shell.add_product(&j1.rotated(shift), &j2);
        }
    }
    let d = b1.denominator() * b2.denominator();
    let (t0, t) = (shell.to_cyclo(d), tail.to_cyclo(d));

    let q_big = (gl.q() as i64).pow(r as u32);
    let rho_inv = &t2.t * &t1.t.inv().expect("roots of unity are invertible");
    let x = LaurentPoly::monomial(rho_inv.scale(Rational::new(1, q_big)), 1);
    let one = LaurentPoly::constant(CycloNumber::one());
    let one_minus_x = one.sub(&x);
    let numer = LaurentPoly::constant(t0.clone())
        .mul(&one_minus_x)
        .add(&LaurentPoly::constant(t.clone()).mul(&x))
        .mul(&l_dual.inverse_poly_reflected(q_big));
    let denom = one_minus_x.mul(&l_factor.inverse_poly());
    let (a, m) = numer
        .div_exact(&denom)
        .and_then(|p| p.as_monomial())
        .ok_or_else(|| Error::Mismatch("zeta integral ratio is not a monomial in q^s".into()))?;

    let sign = t2.central_sign().pow(r as u32 - 1);
    let epsilon = SMonomial::new(&sign * &a, gl.q(), -(r as i64), Rational::from_integer(r as i64 * m))?;
    Ok(ZetaOracle {
        shell_zero: t0,
        tail: t,
        l_factor,
        epsilon,
    })
}
