//! Exact arithmetic in cyclotomic fields `Q(ζ_m)`.
//!
//! A [`CycloNumber`] stores the coefficients of `Σ c_j ζ_m^j` reduced modulo the
//! cyclotomic polynomial `Φ_m`, so the coefficient vector has length `φ(m)` and
//! equality is decided coefficientwise after promotion to a common order.
//!
//! [`RootSum`] and [`RootAccumulator`] are unreduced integer combinations of roots of
//! unity of a fixed order. They are what the group sums accumulate into; the reduction
//! modulo `Φ_m` happens once at the end.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_complex::Complex64;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::config::cache_dir;
use crate::error::{Error, Result};

pub type Rational = Ratio<i64>;

static PHI_CACHE: OnceLock<RwLock<HashMap<u64, Arc<Vec<i64>>>>> = OnceLock::new();

/// Euler's totient.
pub fn euler_phi(m: u64) -> u64 {
    let mut n = m;
    let mut result = m;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

pub(crate) fn divisors(m: u64) -> Vec<u64> {
    let mut out: Vec<u64> = (1..=m).filter(|d| m.is_multiple_of(*d)).collect();
    out.sort_unstable();
    out
}

/// The cyclotomic polynomial `Φ_m`, integer coefficients from degree 0 upward.
///
/// Computed as the quotient of `x^m - 1` by `Φ_d` for the proper divisors `d` of `m`,
/// memoized process-wide.
pub fn cyclotomic_polynomial(m: u64) -> Arc<Vec<i64>> {
    assert!(m > 0, "cyclotomic polynomial of order 0");
    let cache = PHI_CACHE.get_or_init(Default::default);
    if let Some(p) = cache.read().expect("phi cache poisoned").get(&m) {
        return p.clone();
    }
    let poly = Arc::new(load_or_compute_phi(m));
    cache
        .write()
        .expect("phi cache poisoned")
        .entry(m)
        .or_insert(poly)
        .clone()
}

fn x_pow_minus_one(m: u64) -> Vec<i64> {
    let mut num = vec![0i64; m as usize + 1];
    num[0] = -1;
    num[m as usize] = 1;
    num
}

fn load_or_compute_phi(m: u64) -> Vec<i64> {
    let path = cache_dir().map(|d| d.join(format!("phi-{m}.json")));
    if let Some(path) = &path {
        if let Ok(text) = std::fs::read_to_string(path) {
            if let Ok(poly) = serde_json::from_str::<Vec<i64>>(&text) {
                if poly.len() as u64 == euler_phi(m) + 1
                    && poly.last() == Some(&1)
                    && exact_div(&x_pow_minus_one(m), &poly).is_some()
                {
                    return poly;
                }
            }
        }
    }
    let mut num = x_pow_minus_one(m);
    for d in divisors(m) {
        if d < m {
            num = exact_div(&num, &cyclotomic_polynomial(d)).expect("Φ_d divides x^m - 1");
        }
    }
    if let Some(path) = &path {
        if let Ok(text) = serde_json::to_string(&num) {
            let _ = std::fs::create_dir_all(path.parent().unwrap_or(path));
            let _ = std::fs::write(path, text);
        }
    }
    num
}

/// Quotient of `num` by the monic `den` when the division is exact.
fn exact_div(num: &[i64], den: &[i64]) -> Option<Vec<i64>> {
    let dn = den.len() - 1;
    debug_assert_eq!(den[dn], 1);
    if num.len() <= dn {
        return num.iter().all(|c| *c == 0).then(Vec::new);
    }
    let mut rem = num.to_vec();
    let mut quot = vec![0i64; num.len() - dn];
    for i in (dn..num.len()).rev() {
        let c = rem[i];
        if c != 0 {
            quot[i - dn] = c;
            for (j, dj) in den.iter().enumerate() {
                rem[i - dn + j] -= c * dj;
            }
        }
    }
    rem.iter().all(|c| *c == 0).then_some(quot)
}

/// Reduces `a` in place modulo the monic integer polynomial `phi`; truncates to `deg phi`.
fn reduce_mod<T>(a: &mut Vec<T>, phi: &[i64])
where
    T: Copy + Zero + Sub<Output = T> + Mul<Output = T> + From<i64>,
{
    let deg = phi.len() - 1;
    if a.len() > deg {
        for i in (deg..a.len()).rev() {
            let c = a[i];
            if !c.is_zero() {
                for (j, pj) in phi.iter().enumerate().take(deg) {
                    if *pj != 0 {
                        a[i - deg + j] = a[i - deg + j] - c * T::from(*pj);
                    }
                }
                a[i] = T::zero();
            }
        }
    }
    a.resize(deg, T::zero());
}

/// An exact element of `Q(ζ_m)` in canonical form modulo `Φ_m`.
#[derive(Clone, Debug)]
pub struct CycloNumber {
    order: u64,
    coeffs: Vec<Rational>,
}

impl CycloNumber {
    pub fn zero() -> Self {
        CycloNumber {
            order: 1,
            coeffs: vec![Rational::zero()],
        }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n))
    }

    pub fn from_rational(r: Rational) -> Self {
        CycloNumber {
            order: 1,
            coeffs: vec![r],
        }
    }

    /// `ζ_m^j`, with `j` taken modulo `m`.
    pub fn root_of_unity(m: u64, j: i64) -> Result<Self> {
        if m == 0 {
            return Err(Error::ZeroOrder);
        }
        let e = j.rem_euclid(m as i64) as usize;
        let mut v = vec![Rational::zero(); e + 1];
        v[e] = Rational::one();
        Ok(Self::from_dense(m, v))
    }

    /// Canonical form of `Σ_j v[j] ζ_m^j` for an arbitrary-length coefficient vector.
    pub fn from_dense(m: u64, mut v: Vec<Rational>) -> Self {
        let mu = m as usize;
        if v.len() > mu {
            for i in mu..v.len() {
                let c = v[i];
                v[i % mu] += c;
            }
            v.truncate(mu);
        }
        reduce_mod(&mut v, &cyclotomic_polynomial(m));
        CycloNumber {
            order: m,
            coeffs: v,
        }
    }

    /// Order `m` of the ambient field `Q(ζ_m)` this value is stored in.
    pub fn order(&self) -> u64 {
        self.order
    }

    /// Canonical coefficients on `1, ζ_m, …, ζ_m^{φ(m)-1}`.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.as_rational() == Some(Rational::one())
    }

    /// The value as a rational number, when it is one.
    pub fn as_rational(&self) -> Option<Rational> {
        self.coeffs[1..]
            .iter()
            .all(|c| c.is_zero())
            .then(|| self.coeffs[0])
    }

    /// The same number written in `Q(ζ_m)` for a multiple `m` of the current order.
    pub fn promote(&self, m: u64) -> Self {
        assert!(
            m.is_multiple_of(self.order),
            "cannot promote order {} to {m}",
            self.order
        );
        if m == self.order {
            return self.clone();
        }
        let step = (m / self.order) as usize;
        let mut v = vec![Rational::zero(); (self.coeffs.len() - 1) * step + 1];
        for (j, c) in self.coeffs.iter().enumerate() {
            v[j * step] = *c;
        }
        Self::from_dense(m, v)
    }

    fn common(&self, other: &Self) -> (Self, Self) {
        let m = self.order.lcm(&other.order);
        (self.promote(m), other.promote(m))
    }

    pub fn scale(&self, r: Rational) -> Self {
        CycloNumber {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| *c * r).collect(),
        }
    }

    /// Image under the Galois automorphism `ζ_m ↦ ζ_m^k` (`k` coprime to `m`).
    pub fn galois(&self, k: i64) -> Self {
        let m = self.order as i64;
        let mut v = vec![Rational::zero(); self.order as usize];
        for (j, c) in self.coeffs.iter().enumerate() {
            let e = (j as i64 * k).rem_euclid(m) as usize;
            v[e] += *c;
        }
        Self::from_dense(self.order, v)
    }

    /// Complex conjugation `ζ ↦ ζ^{-1}`.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = CycloNumber::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            n >>= 1;
        }
        acc
    }

    /// Integer power; `None` for a negative power of zero.
    pub fn powi(&self, n: i64) -> Option<Self> {
        if n >= 0 {
            Some(self.pow(n as u32))
        } else {
            self.inv().map(|i| i.pow(n.unsigned_abs() as u32))
        }
    }

    /// Multiplicative inverse via the product of the nontrivial Galois conjugates.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if let Some(r) = self.as_rational() {
            return Some(Self::from_rational(r.recip()));
        }
        let m = self.order;
        let mut others = CycloNumber::one();
        for k in 2..m {
            if k.gcd(&m) == 1 {
                others = &others * &self.galois(k as i64);
            }
        }
        let norm = (self * &others)
            .as_rational()
            .expect("norm of a cyclotomic number is rational");
        Some(others.scale(norm.recip()))
    }

    /// Evaluation at `ζ_m = exp(2πi/m)`.
    pub fn embed_complex(&self) -> Complex64 {
        let m = self.order as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let x = *c.numer() as f64 / *c.denom() as f64;
            let angle = std::f64::consts::TAU * j as f64 / m;
            re += x * angle.cos();
            im += x * angle.sin();
        }
        Complex64::new(re, im)
    }
}

impl Default for CycloNumber {
    fn default() -> Self {
        Self::zero()
    }
}

impl PartialEq for CycloNumber {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.common(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CycloNumber {}

impl fmt::Display for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (j, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (_, true) => write!(f, "z{}^{j}", self.order)?,
                (_, false) => write!(f, "{a}*z{}^{j}", self.order)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl<'a> Add<&'a CycloNumber> for &'a CycloNumber {
    type Output = CycloNumber;
    fn add(self, rhs: &CycloNumber) -> CycloNumber {
        let (mut a, b) = self.common(rhs);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x += *y;
        }
        a
    }
}

impl<'a> Sub<&'a CycloNumber> for &'a CycloNumber {
    type Output = CycloNumber;
    fn sub(self, rhs: &CycloNumber) -> CycloNumber {
        let (mut a, b) = self.common(rhs);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x -= *y;
        }
        a
    }
}

impl<'a> Mul<&'a CycloNumber> for &'a CycloNumber {
    type Output = CycloNumber;
    fn mul(self, rhs: &CycloNumber) -> CycloNumber {
        if let Some(r) = self.as_rational() {
            return rhs.scale(r);
        }
        if let Some(r) = rhs.as_rational() {
            return self.scale(r);
        }
        let (a, b) = self.common(rhs);
        let mut v = vec![Rational::zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                v[i + j] += *x * *y;
            }
        }
        CycloNumber::from_dense(a.order, v)
    }
}

impl Neg for &CycloNumber {
    type Output = CycloNumber;
    fn neg(self) -> CycloNumber {
        self.scale(-Rational::one())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<CycloNumber> for CycloNumber {
            type Output = CycloNumber;
            fn $m(self, rhs: CycloNumber) -> CycloNumber {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for CycloNumber {
    type Output = CycloNumber;
    fn neg(self) -> CycloNumber {
        -&self
    }
}

impl AddAssign<&CycloNumber> for CycloNumber {
    fn add_assign(&mut self, rhs: &CycloNumber) {
        *self = &*self + rhs;
    }
}

impl std::iter::Sum for CycloNumber {
    fn sum<I: Iterator<Item = CycloNumber>>(iter: I) -> Self {
        iter.fold(CycloNumber::zero(), |a, b| &a + &b)
    }
}

#[derive(Serialize, Deserialize)]
struct CycloRepr {
    m: u64,
    coeffs: Vec<String>,
}

impl Serialize for CycloNumber {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CycloRepr {
            m: self.order,
            coeffs: self.coeffs.iter().map(|c| c.to_string()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CycloNumber {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = CycloRepr::deserialize(d)?;
        if repr.m == 0 {
            return Err(D::Error::custom("order must be positive"));
        }
        let coeffs = repr
            .coeffs
            .iter()
            .map(|s| s.parse::<Rational>().map_err(D::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(CycloNumber::from_dense(repr.m, coeffs))
    }
}

/// Complex embedding in the JSON shape `{"re": …, "im": …}`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComplexValue {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for ComplexValue {
    fn from(z: Complex64) -> Self {
        ComplexValue { re: z.re, im: z.im }
    }
}

impl From<&CycloNumber> for ComplexValue {
    fn from(z: &CycloNumber) -> Self {
        z.embed_complex().into()
    }
}

/// An unreduced integer combination `Σ c ζ_m^e` of roots of unity of one order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RootSum {
    order: u64,
    terms: Vec<(u64, i64)>,
}

impl RootSum {
    pub fn zero(order: u64) -> Self {
        RootSum {
            order: order.max(1),
            terms: Vec::new(),
        }
    }

    pub fn root(order: u64, exp: u64) -> Self {
        let mut s = Self::zero(order);
        s.push(exp, 1);
        s
    }

    pub fn integer(n: i64) -> Self {
        let mut s = Self::zero(1);
        s.push(0, n);
        s
    }

    pub fn push(&mut self, exp: u64, coeff: i64) {
        if coeff != 0 {
            self.terms.push((exp % self.order, coeff));
        }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn terms(&self) -> &[(u64, i64)] {
        &self.terms
    }

    pub fn scaled(&self, c: i64) -> Self {
        RootSum {
            order: self.order,
            terms: self
                .terms
                .iter()
                .filter(|_| c != 0)
                .map(|&(e, x)| (e, x * c))
                .collect(),
        }
    }

    pub fn conj(&self) -> Self {
        RootSum {
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|&(e, c)| ((self.order - e) % self.order, c))
                .collect(),
        }
    }

    /// Multiplies every term by `ζ_m^shift` where `m = self.order()`.
    pub fn rotated(&self, shift: u64) -> Self {
        RootSum {
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|&(e, c)| ((e + shift) % self.order, c))
                .collect(),
        }
    }

    pub fn promote(&self, m: u64) -> Self {
        assert!(m.is_multiple_of(self.order));
        let step = m / self.order;
        RootSum {
            order: m,
            terms: self.terms.iter().map(|&(e, c)| (e * step, c)).collect(),
        }
    }

    pub fn mul(&self, other: &RootSum) -> RootSum {
        let m = self.order.lcm(&other.order);
        let (sa, sb) = (m / self.order, m / other.order);
        let mut out = RootSum::zero(m);
        for &(e1, c1) in &self.terms {
            for &(e2, c2) in &other.terms {
                out.push(e1 * sa + e2 * sb, c1 * c2);
            }
        }
        out
    }

    pub fn add(&self, other: &RootSum) -> RootSum {
        let m = self.order.lcm(&other.order);
        let mut out = self.promote(m);
        out.terms.extend(other.promote(m).terms);
        out
    }

    pub fn to_cyclo(&self) -> CycloNumber {
        let mut acc = RootAccumulator::new(self.order);
        acc.add(self);
        acc.to_cyclo(1)
    }
}

/// Dense accumulator in `Z[x]/(x^m - 1)`, reduced modulo `Φ_m` only when read out.
#[derive(Clone, Debug)]
pub struct RootAccumulator {
    order: u64,
    dense: Vec<i64>,
}

impl RootAccumulator {
    pub fn new(order: u64) -> Self {
        let order = order.max(1);
        RootAccumulator {
            order,
            dense: vec![0; order as usize],
        }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    fn step(&self, m: u64) -> u64 {
        assert!(
            self.order.is_multiple_of(m),
            "order {m} does not divide accumulator order {}",
            self.order
        );
        self.order / m
    }

    pub fn add_root(&mut self, exp: u64, coeff: i64) {
        let i = (exp % self.order) as usize;
        self.dense[i] += coeff;
    }

    pub fn add(&mut self, s: &RootSum) {
        self.add_scaled(s, 1);
    }

    pub fn add_scaled(&mut self, s: &RootSum, c: i64) {
        let step = self.step(s.order);
        for &(e, x) in &s.terms {
            self.add_root(e * step, x * c);
        }
    }

    /// Adds `ζ^shift · s` where `shift` is measured at the accumulator's own order.
    pub fn add_rotated(&mut self, s: &RootSum, shift: u64) {
        let step = self.step(s.order);
        for &(e, x) in &s.terms {
            self.add_root(e * step + shift, x);
        }
    }

    pub fn add_product(&mut self, a: &RootSum, b: &RootSum) {
        let (sa, sb) = (self.step(a.order), self.step(b.order));
        for &(e1, c1) in &a.terms {
            for &(e2, c2) in &b.terms {
                self.add_root(e1 * sa + e2 * sb, c1 * c2);
            }
        }
    }

    pub fn merge(&mut self, other: &RootAccumulator) {
        assert_eq!(self.order, other.order);
        for (x, y) in self.dense.iter_mut().zip(&other.dense) {
            *x += *y;
        }
    }

    /// The accumulated sum divided by `denom`, in canonical form.
    pub fn to_cyclo(&self, denom: i64) -> CycloNumber {
        let mut v = self.dense.clone();
        reduce_mod(&mut v, &cyclotomic_polynomial(self.order));
        CycloNumber {
            order: self.order,
            coeffs: v
                .into_iter()
                .map(|c| Rational::new(c, denom))
                .collect(),
        }
    }
}

fn legendre(a: u64, p: u64) -> i64 {
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = (p - 1) / 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    match result {
        0 => 0,
        1 => 1,
        _ => -1,
    }
}

/// The positive real square root of `p^k` as an exact cyclotomic number.
///
/// Odd powers use the quadratic Gauss sum `g` of `F_p`: `√p = g` when `p ≡ 1 (mod 4)`,
/// `√p = -i·g` when `p ≡ 3 (mod 4)`, and `√2 = ζ_8 + ζ_8^{-1}`.
pub fn sqrt_prime_power(p: u64, k: u32) -> CycloNumber {
    let half = CycloNumber::from_int((p as i64).pow(k / 2));
    if k.is_multiple_of(2) {
        return half;
    }
    let root_p = if p == 2 {
        &CycloNumber::root_of_unity(8, 1).unwrap() + &CycloNumber::root_of_unity(8, 7).unwrap()
    } else {
        let mut acc = RootAccumulator::new(p);
        for x in 1..p {
            acc.add_root(x, legendre(x, p));
        }
        let g = acc.to_cyclo(1);
        if p % 4 == 1 {
            g
        } else {
            &CycloNumber::root_of_unity(4, 3).unwrap() * &g
        }
    };
    &half * &root_p
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn z(m: u64, j: i64) -> CycloNumber {
        CycloNumber::root_of_unity(m, j).unwrap()
    }

    #[test]
    fn phi_small_orders() {
        assert_eq!(*cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(*cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        for m in 1..=130 {
            assert_eq!(cyclotomic_polynomial(m).len() as u64 - 1, euler_phi(m));
        }
        // first order with a coefficient outside {0, ±1}
        assert!(cyclotomic_polynomial(105).contains(&-2));
    }

    #[test]
    fn root_of_unity_examples() {
        assert!(z(1, 0).is_one());
        assert_eq!(z(4, 1).pow(2), CycloNumber::from_int(-1));
        assert!((&(&z(3, 1) + &z(3, 2)) + &CycloNumber::one()).is_zero());
        assert!(matches!(
            CycloNumber::root_of_unity(0, 1),
            Err(Error::ZeroOrder)
        ));
        assert_eq!(z(5, -1), z(5, 4));
    }

    #[test]
    fn arithmetic_examples() {
        let a = z(7, 3);
        assert_eq!(&a + &CycloNumber::zero(), a);
        assert!((&z(8, 1) * &z(8, 7)).is_one());
        let g = &z(3, 1) - &z(3, 2);
        assert_eq!(&g * &g, CycloNumber::from_int(-3));
    }

    #[test]
    fn conjugate_examples() {
        assert!(CycloNumber::one().conj().is_one());
        assert_eq!(z(3, 1).conj(), z(3, 2));
        let g = &z(3, 1) - &z(3, 2);
        assert_eq!(g.conj(), -&g);
    }

    #[test]
    fn embedding_examples() {
        let one = CycloNumber::one().embed_complex();
        assert!((one - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        assert!((z(4, 1).embed_complex() - Complex64::new(0.0, 1.0)).norm() < 1e-12);
        let g = (&z(3, 1) - &z(3, 2)).embed_complex();
        assert!((g - Complex64::new(0.0, 3f64.sqrt())).norm() < 1e-12);
    }

    #[test]
    fn mixed_orders_promote() {
        // ζ_6 = -ζ_3^2
        assert_eq!(z(6, 1), -&z(3, 2));
        let s = &z(4, 1) + &z(6, 1);
        assert_eq!(s.order(), 12);
        assert_eq!(s.promote(24), s);
    }

    #[test]
    fn inverse_roundtrip() {
        let a = &(&z(12, 1) + &CycloNumber::from_int(2)) - &z(12, 5);
        let inv = a.inv().unwrap();
        assert!((&a * &inv).is_one());
        assert!(CycloNumber::zero().inv().is_none());
    }

    #[test]
    fn sqrt_prime_powers() {
        for (p, k) in [(2u64, 1u32), (2, 3), (3, 1), (3, 3), (5, 1), (7, 1), (13, 1), (4, 1)] {
            if p == 4 {
                continue;
            }
            let s = sqrt_prime_power(p, k);
            assert_eq!(&s * &s, CycloNumber::from_int((p as i64).pow(k)));
            let c = s.embed_complex();
            assert!(c.re > 0.0 && c.im.abs() < 1e-9, "{p}^{k}: {c}");
        }
        assert_eq!(sqrt_prime_power(3, 2), CycloNumber::from_int(3));
    }

    #[test]
    fn accumulator_matches_canonical() {
        let mut acc = RootAccumulator::new(24);
        let mut direct = CycloNumber::zero();
        for (e, c) in [(0u64, 3i64), (5, -2), (8, 1), (16, 1), (23, 7)] {
            acc.add_root(e, c);
            direct = &direct + &z(24, e as i64).scale(Rational::from_integer(c));
        }
        assert_eq!(acc.to_cyclo(1), direct);
        assert_eq!(acc.to_cyclo(4), direct.scale(Rational::new(1, 4)));
    }

    #[test]
    fn json_shape() {
        let v = (&z(3, 1) - &CycloNumber::from_rational(Rational::new(1, 27))).promote(3);
        let text = serde_json::to_string(&v).unwrap();
        assert_eq!(text, r#"{"m":3,"coeffs":["-1/27","1"]}"#);
        let back: CycloNumber = serde_json::from_str(&text).unwrap();
        assert_eq!(back, v);
    }

    fn arb_cyclo() -> impl Strategy<Value = CycloNumber> {
        (
            prop::sample::select(vec![1u64, 2, 3, 4, 5, 6, 8, 12, 15, 24]),
            prop::collection::vec((0i64..24, -6i64..6, 1i64..4), 0..6),
        )
            .prop_map(|(m, terms)| {
                terms.into_iter().fold(CycloNumber::zero(), |acc, (j, n, d)| {
                    &acc + &z(m, j).scale(Rational::new(n, d))
                })
            })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_cyclo(), b in arb_cyclo(), c in arb_cyclo()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
        }

        #[test]
        fn conj_is_ring_involution(a in arb_cyclo(), b in arb_cyclo()) {
            prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
            prop_assert_eq!(a.conj().conj(), a.clone());
        }

        #[test]
        fn zero_test_agrees_with_embedding(a in arb_cyclo(), b in arb_cyclo()) {
            let d = &(&a * &b) - &(&b * &a);
            prop_assert!(d.is_zero());
            prop_assert_eq!(a.is_zero(), a.embed_complex().norm() < 1e-9);
        }

        #[test]
        fn embedding_is_homomorphism(a in arb_cyclo(), b in arb_cyclo()) {
            let lhs = (&a * &b).embed_complex();
            let rhs = a.embed_complex() * b.embed_complex();
            prop_assert!((lhs - rhs).norm() < 1e-9);
        }

        #[test]
        fn promotion_roundtrip(a in arb_cyclo(), k in 1u64..5) {
            let m = a.order() * k;
            prop_assert_eq!(a.promote(m), a.clone());
        }
    }
}
