//! Monomials `c · Q^{h/2} · Q^{a s}` in the complex variable `s`.

use num_complex::Complex64;
use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::cyclo::{sqrt_prime_power, CycloNumber, Rational};
use crate::error::{Error, Result};
use crate::ffield::prime_power;

/// `coeff · qbase^{half_exp/2} · qbase^{s_coeff · s}` with `qbase` a prime power.
///
/// Two monomials are equal when they define the same function of `s`; the split of
/// the constant between `coeff` and the half-integral power is not canonical.
#[derive(Clone, Debug)]
pub struct SMonomial {
    pub coeff: CycloNumber,
    pub qbase: u64,
    pub half_exp: i64,
    pub s_coeff: Rational,
}

/// `p^{h/2}` for any integer `h`.
fn half_power(p: u64, h: i64) -> CycloNumber {
    let root = sqrt_prime_power(p, h.unsigned_abs() as u32);
    if h >= 0 {
        root
    } else {
        root.inv().expect("square roots of prime powers are nonzero")
    }
}

impl SMonomial {
    pub fn new(coeff: CycloNumber, qbase: u64, half_exp: i64, s_coeff: Rational) -> Result<Self> {
        prime_power(qbase)?;
        Ok(SMonomial {
            coeff,
            qbase,
            half_exp,
            s_coeff,
        })
    }

    pub fn constant_term(coeff: CycloNumber, qbase: u64) -> Result<Self> {
        Self::new(coeff, qbase, 0, Rational::zero())
    }

    fn prime(&self) -> (u64, u32) {
        prime_power(self.qbase).expect("qbase is validated on construction")
    }

    /// The value at `s = 0` as an exact cyclotomic number.
    pub fn constant(&self) -> CycloNumber {
        let (p, k) = self.prime();
        &self.coeff * &half_power(p, self.half_exp * k as i64)
    }

    /// Coefficient of `s` in the exponent of the prime `p`.
    fn prime_slope(&self) -> Rational {
        self.s_coeff * Rational::from_integer(self.prime().1 as i64)
    }

    /// The same function of `s` written in base `qbase`, which must be a power of the
    /// same prime with exponent dividing `half_exp · k`.
    pub fn rebase(&self, qbase: u64) -> Result<Self> {
        let (p, k) = self.prime();
        let (p2, k2) = prime_power(qbase)?;
        if p != p2 {
            return Err(Error::Mismatch(format!("cannot rewrite base {} as {qbase}", self.qbase)));
        }
        let h = self.half_exp * k as i64;
        if h % k2 as i64 != 0 {
            return Err(Error::Mismatch(format!(
                "q^{}/2 is not a half-integral power of {qbase}",
                self.half_exp
            )));
        }
        Ok(SMonomial {
            coeff: self.coeff.clone(),
            qbase,
            half_exp: h / k2 as i64,
            s_coeff: self.prime_slope() / Rational::from_integer(k2 as i64),
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let (p, _) = self.prime();
        if other.prime().0 != p {
            return Err(Error::Mismatch("monomials over different primes".into()));
        }
        let a = self.rebase(p)?;
        let b = other.rebase(p)?;
        let prod = SMonomial {
            coeff: &a.coeff * &b.coeff,
            qbase: p,
            half_exp: a.half_exp + b.half_exp,
            s_coeff: a.s_coeff + b.s_coeff,
        };
        prod.rebase(self.qbase).or(Ok(prod))
    }

    pub fn inv(&self) -> Option<Self> {
        Some(SMonomial {
            coeff: self.coeff.inv()?,
            qbase: self.qbase,
            half_exp: -self.half_exp,
            s_coeff: -self.s_coeff,
        })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        let inv = other.inv().ok_or(Error::ZeroElement)?;
        self.mul(&inv)
    }

    pub fn scale(&self, c: &CycloNumber) -> Self {
        SMonomial {
            coeff: &self.coeff * c,
            ..self.clone()
        }
    }

    /// Exact value at rational `s`, when the total exponent of `p` is half-integral.
    pub fn eval_exact(&self, s: Rational) -> Option<CycloNumber> {
        let (p, k) = self.prime();
        let twice = Rational::from_integer(self.half_exp * k as i64)
            + Rational::from_integer(2) * self.prime_slope() * s;
        twice
            .is_integer()
            .then(|| &self.coeff * &half_power(p, twice.to_integer()))
    }

    pub fn eval_complex(&self, s: f64) -> Complex64 {
        let q = self.qbase as f64;
        let s_coeff = *self.s_coeff.numer() as f64 / *self.s_coeff.denom() as f64;
        self.coeff.embed_complex() * q.powf(self.half_exp as f64 / 2.0 + s_coeff * s)
    }

    pub fn is_one(&self) -> bool {
        self.s_coeff.is_zero() && self.constant().is_one()
    }
}

impl PartialEq for SMonomial {
    fn eq(&self, other: &Self) -> bool {
        self.prime().0 == other.prime().0
            && self.prime_slope() == other.prime_slope()
            && self.constant() == other.constant()
    }
}

impl Eq for SMonomial {}

impl std::fmt::Display for SMonomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}) * {}^({}/2)", self.coeff, self.qbase, self.half_exp)?;
        if !self.s_coeff.is_zero() {
            write!(f, " * {}^({} s)", self.qbase, self.s_coeff)?;
        }
        Ok(())
    }
}

impl Serialize for SMonomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("SMonomial", 4)?;
        st.serialize_field("coeff", &self.coeff)?;
        st.serialize_field("qbase", &self.qbase)?;
        st.serialize_field("half_exp", &self.half_exp)?;
        st.serialize_field("s_coeff", &self.s_coeff.to_string())?;
        st.end()
    }
}

/// Whether `c` is a root of unity.
pub fn is_root_of_unity(c: &CycloNumber) -> bool {
    let m = c.order();
    let n = if m.is_multiple_of(2) { m } else { 2 * m };
    !c.is_zero() && c.pow(n as u32).is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn rebase_preserves_the_function() {
        let i = CycloNumber::root_of_unity(4, 1).unwrap();
        let m = SMonomial::new(i.clone(), 4, -3, rat(2, 1)).unwrap();
        let b = m.rebase(2).unwrap();
        assert_eq!((b.half_exp, b.s_coeff), (-6, rat(4, 1)));
        assert_eq!(m, b);
        assert!(b.rebase(16).is_err());
        for s in [rat(0, 1), rat(1, 2), rat(3, 4), rat(-1, 1)] {
            assert_eq!(m.eval_exact(s), b.eval_exact(s));
            let z = m.eval_complex(*s.numer() as f64 / *s.denom() as f64);
            let w = m.eval_exact(s).unwrap().embed_complex();
            assert!((z - w).norm() < 1e-9);
        }
    }

    #[test]
    fn square_root_absorbed_into_coefficient() {
        // √3 · 3^{-1/2} = 1
        let root3 = sqrt_prime_power(3, 1);
        let a = SMonomial::new(root3, 3, -1, rat(0, 1)).unwrap();
        assert!(a.is_one());
        let b = SMonomial::new(CycloNumber::one(), 9, 1, rat(1, 2)).unwrap();
        let c = SMonomial::new(CycloNumber::one(), 3, 2, rat(1, 1)).unwrap();
        assert_eq!(b, c);
        let prod = b.mul(&b.inv().unwrap()).unwrap();
        assert!(prod.is_one());
        assert_eq!(b.div(&c).unwrap().eval_exact(rat(7, 3)), Some(CycloNumber::one()));
    }

    #[test]
    fn roots_of_unity() {
        assert!(is_root_of_unity(&CycloNumber::root_of_unity(5, 2).unwrap()));
        assert!(is_root_of_unity(&-CycloNumber::root_of_unity(3, 1).unwrap()));
        assert!(!is_root_of_unity(&CycloNumber::from_int(2)));
        assert!(!is_root_of_unity(&sqrt_prime_power(5, 1)));
    }
}
