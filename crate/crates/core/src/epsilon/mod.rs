//! Level-zero epsilon factors for pairs of representations `τ_i` of `GL_r(E)` induced
//! from `E^× GL_r(o_E)`, and their transfer to essentially tame simple characters.
//!
//! A level-zero representation is a cuspidal `σ` of `GL_r(F_q)` (`q` the residue field
//! of `E`) together with `t = ω_τ(ϖ_E)`. The additive character of `E` is trivial on
//! `p_E` and restricts to `ψ` on `o_E`.

mod laurent;
mod monomial;
mod oracle;
mod transfer;

use serde::Serialize;

use crate::bessel::Bessel;
use crate::cusp::CuspidalRep;
use crate::cyclo::{CycloNumber, Rational, RootAccumulator};
use crate::error::{Error, Result};
use crate::ffield::AdditiveChar;
use crate::glq::{MatG, SubgroupSpec};

pub use laurent::LaurentPoly;
pub use monomial::{is_root_of_unity, SMonomial};
pub use oracle::{zeta_tilde_oracle, ZetaOracle};
pub use transfer::{epsilon_transfer, twist_ratio_check, TameTwist, TransferData, TwistCheck};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelZeroRep {
    pub sigma: CuspidalRep,
    /// `ω_τ(ϖ_E)`, a root of unity.
    pub t: CycloNumber,
}

impl LevelZeroRep {
    pub fn new(sigma: CuspidalRep, t: CycloNumber) -> Result<Self> {
        if !is_root_of_unity(&t) {
            return Err(Error::InvalidArgument(format!("t = {t} is not a root of unity")));
        }
        Ok(LevelZeroRep { sigma, t })
    }

    pub fn r(&self) -> usize {
        self.sigma.r()
    }

    pub fn q(&self) -> u64 {
        self.sigma.q()
    }

    pub fn contragredient(&self) -> Self {
        LevelZeroRep {
            sigma: self.sigma.contragredient(),
            t: self.t.inv().expect("roots of unity are invertible"),
        }
    }

    /// `ω_τ(-1) = θ(-1)`, which is `±1`.
    pub fn central_sign(&self) -> CycloNumber {
        let minus_one = self.sigma.gl().field().minus_one();
        self.sigma
            .central_value(minus_one)
            .expect("-1 lies in the base field")
            .to_cyclo()
    }
}

/// `L(τ_1 × τ̌_2, s)`: trivial unless `σ_1 ≅ σ_2`, then `(1 - u·Q^{-s})^{-1}` with
/// `Q = q^m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum LFactorSpec {
    Trivial,
    Factor { u: CycloNumber, m: u32 },
}

impl LFactorSpec {
    /// `1/L` as a Laurent polynomial in `Y = Q^s`.
    fn inverse_poly(&self) -> LaurentPoly {
        match self {
            LFactorSpec::Trivial => LaurentPoly::constant(CycloNumber::one()),
            LFactorSpec::Factor { u, .. } => LaurentPoly::constant(CycloNumber::one())
                .sub(&LaurentPoly::monomial(u.clone(), -1)),
        }
    }

    /// `1/L` at `1 - s`, as a Laurent polynomial in `Y = Q^s`.
    fn inverse_poly_reflected(&self, q_big: i64) -> LaurentPoly {
        match self {
            LFactorSpec::Trivial => LaurentPoly::constant(CycloNumber::one()),
            LFactorSpec::Factor { u, .. } => LaurentPoly::constant(CycloNumber::one()).sub(
                &LaurentPoly::monomial(u.scale(Rational::new(1, q_big)), 1),
            ),
        }
    }
}

fn check_pair(a: &CuspidalRep, b: &CuspidalRep, psi: &AdditiveChar) -> Result<()> {
    if a.q() != b.q() || a.r() != b.r() {
        return Err(Error::Mismatch(format!(
            "representations of GL_{}(F_{}) and GL_{}(F_{})",
            a.r(),
            a.q(),
            b.r(),
            b.q()
        )));
    }
    if psi.field().q() != a.q() {
        return Err(Error::FieldMismatch("additive character over another field".into()));
    }
    Ok(())
}

pub fn l_factor_pair(t1: &LevelZeroRep, t2: &LevelZeroRep) -> Result<LFactorSpec> {
    check_pair(&t1.sigma, &t2.sigma, &AdditiveChar::standard(t1.sigma.gl().field()))?;
    if t1.sigma != t2.sigma {
        return Ok(LFactorSpec::Trivial);
    }
    let u = &t1.t * &t2.t.inv().expect("roots of unity are invertible");
    Ok(LFactorSpec::Factor {
        u,
        m: t1.r() as u32,
    })
}

/// `Σ_{h∈U\G} ψ(h_{r1}) 𝒥_{σ_1,ψ}(h^{-1}) · conj 𝒥_{σ_2,ψ}(h^{-1})`.
pub fn gauss_pair_sum(s1: &CuspidalRep, s2: &CuspidalRep, psi: &AdditiveChar) -> Result<CycloNumber> {
    check_pair(s1, s2, psi)?;
    let gl = s1.gl();
    let (b1, b2) = (Bessel::new(s1, psi)?, Bessel::new(s2, psi)?);
    let order = b1.order();
    let psi_step = order / gl.field().p();
    let r = gl.r();
    let mut acc = RootAccumulator::new(order);
    for h in gl.right_coset_reps(SubgroupSpec::FullGroup, SubgroupSpec::UnipotentUpper)? {
        let h_inv = gl.inv(&h);
        let shift = psi.exponent(h.entry(r - 1, 0)) as u64 * psi_step;
        let a = b1.numerator(&h_inv).rotated(shift);
        acc.add_product(&a, &b2.numerator(&h_inv).conj());
    }
    let d = b1.denominator();
    Ok(acc.to_cyclo(d * d))
}

/// `Σ_{h∈U\G} 𝒥_{σ_1,ψ}(hg) · conj 𝒥_{σ_2,ψ}(hg)`, which vanishes when `σ_1 ≇ σ_2`.
pub fn pair_sum_vanishing(
    s1: &CuspidalRep,
    s2: &CuspidalRep,
    psi: &AdditiveChar,
    g: &MatG,
) -> Result<CycloNumber> {
    check_pair(s1, s2, psi)?;
    let gl = s1.gl();
    gl.check(g)?;
    let reps = gl.right_coset_reps(SubgroupSpec::FullGroup, SubgroupSpec::UnipotentUpper)?;
    pair_sum_over(&Bessel::new(s1, psi)?, &Bessel::new(s2, psi)?, &reps, g)
}

/// `Σ_{h∈U\G_{v_1}} 𝒥(hg) · conj 𝒥(hg)`, which is `1` for every `g`.
pub fn stabilizer_pair_sum(sigma: &CuspidalRep, psi: &AdditiveChar, g: &MatG) -> Result<CycloNumber> {
    let gl = sigma.gl();
    gl.check(g)?;
    let reps = gl.right_coset_reps(SubgroupSpec::Stabilizer, SubgroupSpec::UnipotentUpper)?;
    let b = Bessel::new(sigma, psi)?;
    pair_sum_over(&b, &b, &reps, g)
}

fn pair_sum_over(b1: &Bessel, b2: &Bessel, reps: &[MatG], g: &MatG) -> Result<CycloNumber> {
    let gl = b1.gl();
    let mut acc = RootAccumulator::new(b1.order());
    for h in reps {
        let hg = gl.mul(h, g);
        acc.add_product(&b1.numerator(&hg), &b2.numerator(&hg).conj());
    }
    let d = b1.denominator();
    Ok(acc.to_cyclo(d * d))
}

/// `ε(τ_1 × τ̌_2, s, ψ_E)` by the closed formulas:
/// `ω_{τ_2}(-1)^{r-1} q^{-r/2} G` when `σ_1 ≇ σ_2`, with `G` the Gauss pair sum, and
/// `ω_{τ_2}(-1)^{r-1} (t_2/t_1) q^{-r/2} q^{rs}` when `σ_1 ≅ σ_2`.
pub fn epsilon_pair(t1: &LevelZeroRep, t2: &LevelZeroRep, psi: &AdditiveChar) -> Result<SMonomial> {
    check_pair(&t1.sigma, &t2.sigma, psi)?;
    let r = t1.r() as i64;
    let sign = t2.central_sign().pow((r - 1) as u32);
    let q = t1.q();
    if t1.sigma != t2.sigma {
        let g = gauss_pair_sum(&t1.sigma, &t2.sigma, psi)?;
        SMonomial::new(&sign * &g, q, -r, Rational::from_integer(0))
    } else {
        let ratio = &t2.t * &t1.t.inv().expect("roots of unity are invertible");
        SMonomial::new(&sign * &ratio, q, -r, Rational::from_integer(r))
    }
}

/// `W(u · ϖ^z · ḡ) = ψ_U(u) · t^z · 𝒥(ḡ)` on the Whittaker model of `τ`.
pub fn whittaker_eval(
    tau: &LevelZeroRep,
    psi: &AdditiveChar,
    u: &MatG,
    z: i64,
    g_bar: &MatG,
) -> Result<CycloNumber> {
    let gl = tau.sigma.gl();
    if !gl.contains(SubgroupSpec::UnipotentUpper, u) {
        return Err(Error::NotInSubgroup("unipotent upper triangular"));
    }
    let b = Bessel::new(&tau.sigma, psi)?;
    let tz = tau.t.powi(z).expect("roots of unity are invertible");
    Ok(&(&gl.psi_u(u, psi)? * &tz) * &b.value(g_bar)?)
}
