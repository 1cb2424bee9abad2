//! Transfer from level-zero pairs over `E` to essentially tame pairs over `F`:
//! `ε(π_1 × π̌_2, s, ψ_F) = ζ · w_1 · w_2 · q_F^{(s - 1/2) r v_E(ν) N/e} · ε(τ_1 × τ̌_2, s, ψ_E)`.

use serde::Serialize;

use super::{epsilon_pair, is_root_of_unity, LevelZeroRep, SMonomial};
use crate::cyclo::{CycloNumber, Rational};
use crate::error::{Error, Result};
use crate::ffield::{prime_power, AdditiveChar, FieldElem};

/// Data attached to a pair of essentially tame simple characters with a common
/// endo-class: `N = e f r` with `E/F` of ramification `e` and residue degree `f`.
#[derive(Clone, Debug, Serialize)]
pub struct TransferData {
    pub r: usize,
    /// Degree `N` of the representations of `GL_N(F)`.
    pub n: u64,
    pub e: u64,
    /// `v_E(ν)`.
    pub v_nu: i64,
    /// `ω_{τ_1}(ν^{-r})`.
    pub w1: CycloNumber,
    /// `ω_{τ_2}(ν^r)`.
    pub w2: CycloNumber,
    /// `ω_{τ_2}(-1)^{r-1} ω_{π_2}(-1)^{N-1}`.
    pub zeta: CycloNumber,
}

impl TransferData {
    /// Residue degree `f = N/(e r)`.
    pub fn residue_degree(&self) -> Result<u64> {
        let er = self.e * self.r as u64;
        if self.e == 0 || self.r == 0 || !self.n.is_multiple_of(self.e) || !self.n.is_multiple_of(er) {
            return Err(Error::InvalidArgument(format!(
                "N = {} is not divisible by e·r = {}·{}",
                self.n, self.e, self.r
            )));
        }
        Ok(self.n / er)
    }

    fn validate(&self) -> Result<()> {
        for (name, w) in [("w1", &self.w1), ("w2", &self.w2), ("zeta", &self.zeta)] {
            if !is_root_of_unity(w) {
                return Err(Error::InvalidArgument(format!("{name} = {w} is not a root of unity")));
            }
        }
        Ok(())
    }
}

/// Rewrites the level-zero factor (base `q_E`) over `F` and multiplies in the twisting
/// data. Fails unless `q_E = q_F^f` for an integer prime power `q_F`.
pub fn epsilon_transfer(eps: &SMonomial, data: &TransferData) -> Result<SMonomial> {
    data.validate()?;
    let f = data.residue_degree()?;
    let (p, k) = prime_power(eps.qbase)?;
    if !(k as u64).is_multiple_of(f) {
        return Err(Error::Mismatch(format!(
            "q_E = {} is not the {f}-th power of a prime power",
            eps.qbase
        )));
    }
    let q_f = p.pow(k / f as u32);
    let base = eps.rebase(q_f)?;
    let shift = data.r as i64 * data.v_nu * (data.n / data.e) as i64;
    let weight = &(&data.zeta * &data.w1) * &data.w2;
    SMonomial::new(
        &base.coeff * &weight,
        q_f,
        base.half_exp - shift,
        base.s_coeff + Rational::from_integer(shift),
    )
}

/// A tamely ramified character `χ_E` of `E^×` of level zero: `α` on residues and
/// `z = χ_E(ϖ_E)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TameTwist {
    /// Exponent of `α = θ_{alpha}` on `F_q^×`.
    pub alpha: i64,
    pub z: CycloNumber,
}

impl TameTwist {
    pub fn apply(&self, tau: &LevelZeroRep) -> LevelZeroRep {
        LevelZeroRep {
            sigma: tau.sigma.twist_by_det(self.alpha),
            t: &tau.t * &self.z.pow(tau.r() as u32),
        }
    }

    /// `χ_E(ν)` for `ν = ϖ_E^{v} · u` with `u` reducing to `residue`.
    pub fn value(&self, v: i64, residue: FieldElem, q: u64) -> Result<CycloNumber> {
        let log = residue.log().ok_or(Error::ZeroElement)? as i64;
        let unit = CycloNumber::root_of_unity(q - 1, self.alpha * log)?;
        let zv = self.z.powi(v).ok_or(Error::ZeroElement)?;
        Ok(&unit * &zv)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TwistCheck {
    /// `ε(π_1 χ × π̌_2) / ε(π_1 × π̌_2)` via transfer.
    pub transferred_ratio: SMonomial,
    /// `χ(N(ν^{-r²})) · ε(τ_1 χ_E × τ̌_2) / ε(τ_1 × τ̌_2)`.
    pub level_zero_ratio: SMonomial,
    /// Twisting both entries by `χ_E` leaves `ε(τ_1 × τ̌_2)` unchanged.
    pub joint_invariant: bool,
    pub holds: bool,
}

/// Compares the two sides of the twisting identity for `χ = χ_E` and the given `ν`.
pub fn twist_ratio_check(
    t1: &LevelZeroRep,
    t2: &LevelZeroRep,
    psi: &AdditiveChar,
    data: &TransferData,
    chi: &TameTwist,
    nu_residue: FieldElem,
) -> Result<TwistCheck> {
    let r = t1.r() as i64;
    let chi_nu = chi.value(data.v_nu, nu_residue, t1.q())?;
    let factor = chi_nu.powi(-r * r).ok_or(Error::ZeroElement)?;
    let twisted = chi.apply(t1);
    let eps0 = epsilon_pair(t1, t2, psi)?;
    let eps1 = epsilon_pair(&twisted, t2, psi)?;
    let data_twisted = TransferData {
        w1: &data.w1 * &factor,
        ..data.clone()
    };
    let transferred_ratio =
        epsilon_transfer(&eps1, &data_twisted)?.div(&epsilon_transfer(&eps0, data)?)?;
    let level_zero_ratio = eps1.div(&eps0)?.scale(&factor);
    let joint_invariant = epsilon_pair(&twisted, &chi.apply(t2), psi)? == eps0;
    let holds = transferred_ratio == level_zero_ratio && joint_invariant;
    Ok(TwistCheck {
        transferred_ratio,
        level_zero_ratio,
        joint_invariant,
        holds,
    })
}
