//! Laurent polynomials in one variable over cyclotomic fields.

use crate::cyclo::CycloNumber;

/// `Σ_i coeffs[i] · Y^{low + i}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<CycloNumber>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            low: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn monomial(c: CycloNumber, exp: i64) -> Self {
        LaurentPoly {
            low: exp,
            coeffs: vec![c],
        }
        .trimmed()
    }

    pub fn constant(c: CycloNumber) -> Self {
        Self::monomial(c, 0)
    }

    fn trimmed(mut self) -> Self {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        self.coeffs.drain(..lead);
        self.low += lead as i64;
        if self.coeffs.is_empty() {
            self.low = 0;
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn high(&self) -> i64 {
        self.low + self.coeffs.len() as i64 - 1
    }

    fn coeff(&self, e: i64) -> CycloNumber {
        let i = e - self.low;
        if i < 0 || i >= self.coeffs.len() as i64 {
            CycloNumber::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let low = self.low.min(other.low);
        let high = self.high().max(other.high());
        LaurentPoly {
            low,
            coeffs: (low..=high).map(|e| &self.coeff(e) + &other.coeff(e)).collect(),
        }
        .trimmed()
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![CycloNumber::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += &(a * b);
            }
        }
        LaurentPoly {
            low: self.low + other.low,
            coeffs,
        }
        .trimmed()
    }

    /// Exact quotient, or `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let lead_inv = divisor.coeffs.last()?.inv()?;
        let dn = divisor.coeffs.len();
        let mut rem = self.coeffs.clone();
        if rem.len() < dn {
            return None;
        }
        let mut quot = vec![CycloNumber::zero(); rem.len() - dn + 1];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dn - 1] * &lead_inv;
            if !c.is_zero() {
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] = &rem[k + j] - &(&c * d);
                }
            }
            quot[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(
            LaurentPoly {
                low: self.low - divisor.low,
                coeffs: quot,
            }
            .trimmed(),
        )
    }

    /// `(c, e)` when the polynomial is the single term `c·Y^e`.
    pub fn as_monomial(&self) -> Option<(CycloNumber, i64)> {
        (self.coeffs.len() == 1).then(|| (self.coeffs[0].clone(), self.low))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: i64) -> CycloNumber {
        CycloNumber::from_int(n)
    }

    #[test]
    fn division_round_trip() {
        let zeta = CycloNumber::root_of_unity(8, 3).unwrap();
        // (1 - ζ Y)(2 Y^{-1} + Y^2)
        let a = LaurentPoly::constant(c(1)).sub(&LaurentPoly::monomial(zeta.clone(), 1));
        let b = LaurentPoly::monomial(c(2), -1).add(&LaurentPoly::monomial(c(1), 2));
        let p = a.mul(&b);
        assert_eq!(p.div_exact(&a), Some(b.clone()));
        assert_eq!(p.div_exact(&b), Some(a.clone()));
        let not_factor = LaurentPoly::constant(c(1)).add(&LaurentPoly::monomial(c(1), 1));
        assert_eq!(p.div_exact(&not_factor), None);
        let m = LaurentPoly::monomial(zeta.clone(), -3);
        assert_eq!(m.mul(&a).div_exact(&a).unwrap().as_monomial(), Some((zeta, -3)));
        assert!(a.sub(&a).is_zero());
    }
}
