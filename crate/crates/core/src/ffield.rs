//! Finite fields `GF(p^k)` in Zech-logarithm form.
//!
//! Every nonzero element is stored as its discrete logarithm relative to a fixed
//! generator `g`, a root of the lexicographically smallest primitive modulus.
//! Multiplication is exponent addition; addition is one lookup in the Zech table.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::config::{cache_dir, Limits};
use crate::cyclo::CycloNumber;
use crate::error::{Error, Result};

/// Field element: `ZERO` or `g^e` with `0 <= e < q - 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct FieldElem(u32);

impl FieldElem {
    pub const ZERO: FieldElem = FieldElem(u32::MAX);
    pub const ONE: FieldElem = FieldElem(0);

    pub const fn from_log(e: u32) -> Self {
        FieldElem(e)
    }

    pub fn log(self) -> Option<u32> {
        (!self.is_zero()).then_some(self.0)
    }

    pub fn is_zero(self) -> bool {
        self.0 == u32::MAX
    }

    /// Position in the enumeration order `0, g^0, g^1, …`.
    pub fn index(self) -> u32 {
        if self.is_zero() {
            0
        } else {
            self.0 + 1
        }
    }

    pub fn from_index(i: u32) -> Self {
        if i == 0 {
            Self::ZERO
        } else {
            FieldElem(i - 1)
        }
    }
}

impl PartialOrd for FieldElem {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FieldElem {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.index().cmp(&other.index())
    }
}

impl std::fmt::Display for FieldElem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.log() {
            None => write!(f, "0"),
            Some(e) => write!(f, "g^{e}"),
        }
    }
}

impl Serialize for FieldElem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FieldElem {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        if text == "0" {
            return Ok(FieldElem::ZERO);
        }
        text.strip_prefix("g^")
            .and_then(|e| e.parse::<u32>().ok())
            .map(FieldElem)
            .ok_or_else(|| serde::de::Error::custom(format!("bad field element {text:?}")))
    }
}

const ZECH_ZERO: u32 = u32::MAX;

/// `GF(p^k)` with its primitive modulus, Zech table and trace table.
#[derive(Debug)]
pub struct FieldSpec {
    p: u32,
    k: u32,
    q: u32,
    modulus: Vec<u32>,
    zech: Vec<u32>,
    /// log -> coordinates on `1, g, …, g^{k-1}` packed as base-`p` digits.
    exp_table: Vec<u32>,
    /// packed coordinates -> log (entry 0 unused).
    log_table: Vec<u32>,
    /// log -> `Tr_{F_q/F_p}` as an integer in `[0, p)`.
    trace: Vec<u32>,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits a prime power `q = p^k` into `(p, k)`.
pub fn prime_power(q: u64) -> Result<(u64, u32)> {
    if q < 2 {
        return Err(Error::NotPrimePower(q));
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d)).unwrap();
    let mut k = 0;
    let mut n = q;
    while n.is_multiple_of(p) {
        n /= p;
        k += 1;
    }
    if n != 1 {
        return Err(Error::NotPrimePower(q));
    }
    Ok((p, k))
}

fn digits(mut n: u32, p: u32, k: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(k as usize);
    for _ in 0..k {
        out.push(n % p);
        n /= p;
    }
    out
}

fn pack(ds: &[u32], p: u32) -> u32 {
    ds.iter().rev().fold(0, |acc, d| acc * p + d)
}

/// Powers of `x` modulo the monic `modulus`, packed; `None` unless `x` has order `p^k - 1`.
fn primitive_powers(modulus: &[u32], p: u32, k: u32) -> Option<Vec<u32>> {
    let q = p.pow(k);
    let mut table = Vec::with_capacity(q as usize - 1);
    let mut cur = vec![0u32; k as usize];
    cur[0] = 1;
    for e in 0..q - 1 {
        let packed = pack(&cur, p);
        if e > 0 && packed == 1 {
            return None;
        }
        table.push(packed);
        // multiply by x modulo the modulus
        let top = cur[k as usize - 1];
        for i in (1..k as usize).rev() {
            cur[i] = (cur[i - 1] + p * p - top * modulus[i] % p) % p;
        }
        cur[0] = (p * p - top * modulus[0] % p) % p;
    }
    (pack(&cur, p) == 1).then_some(table)
}

#[derive(Serialize, Deserialize)]
struct CachedField {
    p: u32,
    k: u32,
    modulus: Vec<u32>,
    zech: Vec<u32>,
}

impl FieldSpec {
    /// Builds `GF(p^k)` with the default size cap.
    pub fn new(p: u64, k: u32) -> Result<Arc<FieldSpec>> {
        build_field(p, k, &Limits::default())
    }

    pub fn p(&self) -> u64 {
        self.p as u64
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Field size.
    pub fn q(&self) -> u64 {
        self.q as u64
    }

    /// Order `q - 1` of the multiplicative group.
    pub fn unit_order(&self) -> u64 {
        self.q as u64 - 1
    }

    /// Coefficients of the monic modulus, degree 0 first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// Zech table: entry `l` is `log_g(1 + g^l)`, or `None` when `1 + g^l = 0`.
    pub fn zech(&self, l: u32) -> Option<u32> {
        let z = self.zech[l as usize];
        (z != ZECH_ZERO).then_some(z)
    }

    pub fn generator(&self) -> FieldElem {
        if self.q == 2 {
            FieldElem::ONE
        } else {
            FieldElem(1)
        }
    }

    /// All elements in enumeration order: zero first, then `g^0, g^1, …`.
    pub fn elements(&self) -> impl Iterator<Item = FieldElem> {
        (0..self.q).map(FieldElem::from_index)
    }

    pub fn nonzero(&self) -> impl Iterator<Item = FieldElem> {
        (0..self.q - 1).map(FieldElem)
    }

    pub fn contains(&self, x: FieldElem) -> bool {
        x.is_zero() || x.0 < self.q - 1
    }

    fn m(&self) -> u32 {
        self.q - 1
    }

    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if a.is_zero() || b.is_zero() {
            return FieldElem::ZERO;
        }
        FieldElem(((a.0 as u64 + b.0 as u64) % self.m() as u64) as u32)
    }

    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if a.is_zero() {
            return b;
        }
        if b.is_zero() {
            return a;
        }
        let m = self.m();
        let d = (b.0 + m - a.0) % m;
        match self.zech[d as usize] {
            ZECH_ZERO => FieldElem::ZERO,
            z => FieldElem((a.0 + z) % m),
        }
    }

    pub fn minus_one(&self) -> FieldElem {
        if self.p == 2 {
            FieldElem::ONE
        } else {
            FieldElem(self.m() / 2)
        }
    }

    pub fn neg(&self, a: FieldElem) -> FieldElem {
        self.mul(a, self.minus_one())
    }

    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.add(a, self.neg(b))
    }

    pub fn inv(&self, a: FieldElem) -> Result<FieldElem> {
        match a.log() {
            None => Err(Error::ZeroElement),
            Some(e) => Ok(FieldElem((self.m() - e) % self.m())),
        }
    }

    pub fn div(&self, a: FieldElem, b: FieldElem) -> Result<FieldElem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: FieldElem, n: i64) -> FieldElem {
        match a.log() {
            None if n == 0 => FieldElem::ONE,
            None => FieldElem::ZERO,
            Some(e) => {
                let m = self.m() as i64;
                FieldElem(((e as i64 % m) * n.rem_euclid(m)).rem_euclid(m) as u32)
            }
        }
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> FieldElem {
        let r = n.rem_euclid(self.p as i64) as u32;
        if r == 0 {
            FieldElem::ZERO
        } else {
            FieldElem(self.log_table[r as usize])
        }
    }

    /// Coordinates on the power basis `1, g, …, g^{k-1}` over `F_p`.
    pub fn coordinates(&self, a: FieldElem) -> Vec<u32> {
        match a.log() {
            None => vec![0; self.k as usize],
            Some(e) => digits(self.exp_table[e as usize], self.p, self.k),
        }
    }

    pub fn from_coordinates(&self, c: &[u32]) -> FieldElem {
        let packed = pack(c, self.p);
        if packed == 0 {
            FieldElem::ZERO
        } else {
            FieldElem(self.log_table[packed as usize])
        }
    }

    /// `Tr_{F_q/F_p}(a)` as an integer in `[0, p)`.
    pub fn trace(&self, a: FieldElem) -> u32 {
        match a.log() {
            None => 0,
            Some(e) => self.trace[e as usize],
        }
    }

    /// `a^{p^j}`.
    pub fn frobenius(&self, a: FieldElem, j: u32) -> FieldElem {
        self.pow(a, (self.p as i64).pow(j))
    }

    fn from_modulus(p: u32, k: u32, modulus: Vec<u32>) -> Option<FieldSpec> {
        let q = p.pow(k);
        let exp_table = primitive_powers(&modulus, p, k)?;
        let mut log_table = vec![0u32; q as usize];
        for (e, packed) in exp_table.iter().enumerate() {
            log_table[*packed as usize] = e as u32;
        }
        let zech = exp_table
            .iter()
            .map(|&packed| {
                let mut ds = digits(packed, p, k);
                ds[0] = (ds[0] + 1) % p;
                match pack(&ds, p) {
                    0 => ZECH_ZERO,
                    s => log_table[s as usize],
                }
            })
            .collect();
        let mut field = FieldSpec {
            p,
            k,
            q,
            modulus,
            zech,
            exp_table,
            log_table,
            trace: Vec::new(),
        };
        let trace = field
            .nonzero()
            .map(|a| {
                let t = (0..k).fold(FieldElem::ZERO, |acc, j| field.add(acc, field.frobenius(a, j)));
                let c = field.coordinates(t);
                debug_assert!(c[1..].iter().all(|d| *d == 0), "trace lies in F_p");
                c[0]
            })
            .collect();
        field.trace = trace;
        Some(field)
    }
}

/// Builds `GF(p^k)` using the smallest primitive modulus.
///
/// Candidates `x^k + c_{k-1} x^{k-1} + … + c_0` are ordered by the integer
/// `Σ c_i p^i`, so the first one tried varies the constant term fastest.
pub fn build_field(p: u64, k: u32, limits: &Limits) -> Result<Arc<FieldSpec>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if k == 0 {
        return Err(Error::ZeroDegree);
    }
    let size = p
        .checked_pow(k)
        .filter(|s| *s <= limits.field_cap)
        .ok_or(Error::FieldTooLarge {
            size: p.saturating_pow(k),
            cap: limits.field_cap,
        })?;
    let key = (p, k);
    static FIELDS: OnceLock<Mutex<HashMap<(u64, u32), Arc<FieldSpec>>>> = OnceLock::new();
    let fields = FIELDS.get_or_init(Default::default);
    if let Some(f) = fields.lock().expect("field cache poisoned").get(&key) {
        return Ok(f.clone());
    }
    let (p32, q32) = (p as u32, size as u32);
    let field = load_cached(p32, k).map(Ok).unwrap_or_else(|| {
        (0..q32)
            .filter(|enc| enc % p32 != 0)
            .find_map(|enc| {
                let mut modulus = digits(enc, p32, k);
                modulus.push(1);
                FieldSpec::from_modulus(p32, k, modulus)
            })
            .ok_or(Error::NoPrimitivePolynomial { p, k })
    })?;
    store_cached(&field);
    let field = Arc::new(field);
    Ok(fields
        .lock()
        .expect("field cache poisoned")
        .entry(key)
        .or_insert(field)
        .clone())
}

fn cache_path(p: u32, k: u32) -> Option<std::path::PathBuf> {
    cache_dir().map(|d| d.join(format!("field-{p}-{k}.json")))
}

fn load_cached(p: u32, k: u32) -> Option<FieldSpec> {
    let text = std::fs::read_to_string(cache_path(p, k)?).ok()?;
    let cached: CachedField = serde_json::from_str(&text).ok()?;
    if cached.p != p || cached.k != k || cached.modulus.len() != k as usize + 1 {
        return None;
    }
    let field = FieldSpec::from_modulus(p, k, cached.modulus)?;
    (field.zech == cached.zech).then_some(field)
}

fn store_cached(field: &FieldSpec) {
    if let Some(path) = cache_path(field.p, field.k) {
        let cached = CachedField {
            p: field.p,
            k: field.k,
            modulus: field.modulus.clone(),
            zech: field.zech.clone(),
        };
        if let Ok(text) = serde_json::to_string(&cached) {
            let _ = std::fs::create_dir_all(path.parent().unwrap_or(&path));
            let _ = std::fs::write(path, text);
        }
    }
}

/// A field embedding `GF(p^a) -> GF(p^b)`, written `g_a^e ↦ g_b^{e·multiplier}`.
#[derive(Clone, Debug)]
pub struct Embedding {
    source: Arc<FieldSpec>,
    target: Arc<FieldSpec>,
    multiplier: u64,
}

impl Embedding {
    /// The embedding with the smallest admissible multiplier `m·u`,
    /// `m = (|target|-1)/(|source|-1)`, among those accepted by `accept`.
    pub fn find(
        source: &Arc<FieldSpec>,
        target: &Arc<FieldSpec>,
        accept: impl Fn(u64) -> bool,
    ) -> Result<Embedding> {
        if source.p != target.p || !target.k.is_multiple_of(source.k) {
            return Err(Error::NotASubfield {
                p: source.p(),
                sub: source.k,
                ext: target.k,
            });
        }
        let (n_s, n_t) = (source.unit_order(), target.unit_order());
        let base = n_t / n_s;
        for u in 1..=n_s.max(1) {
            if u.gcd(&n_s) != 1 && n_s > 1 {
                continue;
            }
            let multiplier = (base * u) % n_t;
            let y = FieldElem(multiplier as u32);
            // is y a root of the source modulus?
            let value = source
                .modulus
                .iter()
                .rev()
                .fold(FieldElem::ZERO, |acc, c| {
                    target.add(target.mul(acc, y), target.from_int(*c as i64))
                });
            if value.is_zero() && accept(multiplier) {
                return Ok(Embedding {
                    source: source.clone(),
                    target: target.clone(),
                    multiplier,
                });
            }
        }
        Err(Error::NotASubfield {
            p: source.p(),
            sub: source.k,
            ext: target.k,
        })
    }

    pub fn identity(field: &Arc<FieldSpec>) -> Embedding {
        Embedding {
            source: field.clone(),
            target: field.clone(),
            multiplier: 1,
        }
    }

    pub fn multiplier(&self) -> u64 {
        self.multiplier
    }

    pub fn source(&self) -> &Arc<FieldSpec> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FieldSpec> {
        &self.target
    }

    pub fn apply(&self, x: FieldElem) -> FieldElem {
        match x.log() {
            None => FieldElem::ZERO,
            Some(e) => FieldElem(((e as u64 * self.multiplier) % self.target.unit_order()) as u32),
        }
    }

    /// Preimage of `y` when `y` lies in the image.
    pub fn pull_back(&self, y: FieldElem) -> Option<FieldElem> {
        let Some(e) = y.log() else {
            return Some(FieldElem::ZERO);
        };
        let n_t = self.target.unit_order();
        let step = n_t / self.source.unit_order();
        if !(e as u64).is_multiple_of(step) && self.source.q() > 2 {
            return None;
        }
        if self.source.q() == 2 {
            return (e == 0).then_some(FieldElem::ONE);
        }
        // multiplier = step·u with u a unit mod n_s
        let n_s = self.source.unit_order();
        let u = (self.multiplier / step) % n_s;
        let u_inv = mod_inverse(u, n_s)?;
        Some(FieldElem((((e as u64 / step) * u_inv) % n_s) as u32))
    }
}

fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    let e = (a as i64).extended_gcd(&(m as i64));
    (e.gcd == 1).then(|| e.x.rem_euclid(m as i64) as u64)
}

/// Canonical image of `x ∈ source` in `target`, for `source ⊆ target`.
///
/// Uses the embedding `g_s ↦ g_t^{m·u}` with the smallest unit `u` making the image a
/// root of the source modulus; `u = 1` whenever `g_t^m` already is one. Embeddings are
/// cached per `(p, k_source, k_target)`.
pub fn subfield_embed(
    x: FieldElem,
    source: &Arc<FieldSpec>,
    target: &Arc<FieldSpec>,
) -> Result<FieldElem> {
    if !source.contains(x) {
        return Err(Error::FieldMismatch(format!(
            "{x} is not an element of GF({})",
            source.q()
        )));
    }
    static EMBEDDINGS: OnceLock<Mutex<HashMap<(u64, u32, u32), u64>>> = OnceLock::new();
    let cache = EMBEDDINGS.get_or_init(Default::default);
    let key = (source.p(), source.k, target.k);
    let cached = cache.lock().expect("embedding cache poisoned").get(&key).copied();
    let multiplier = match cached {
        Some(m) => m,
        None => {
            let m = Embedding::find(source, target, |_| true)?.multiplier;
            cache.lock().expect("embedding cache poisoned").insert(key, m);
            m
        }
    };
    Ok(Embedding {
        source: source.clone(),
        target: target.clone(),
        multiplier,
    }
    .apply(x))
}

/// The fields `F_{q^d}` for every `d | n` over a base `F_q`, with mutually compatible
/// embeddings: `F_{q^d} -> F_{q^n}` composed with `F_q -> F_{q^d}` is `F_q -> F_{q^n}`.
#[derive(Debug)]
pub struct FieldTower {
    base: Arc<FieldSpec>,
    n: u32,
    levels: Vec<TowerLevel>,
}

#[derive(Debug)]
struct TowerLevel {
    degree: u32,
    field: Arc<FieldSpec>,
    from_base: Embedding,
    to_top: Embedding,
}

impl FieldTower {
    pub fn new(base: Arc<FieldSpec>, n: u32, limits: &Limits) -> Result<FieldTower> {
        let top = build_field(base.p(), base.k * n, limits)?;
        let base_to_top = Embedding::find(&base, &top, |_| true)?;
        let n_top = top.unit_order();
        let mut levels = Vec::new();
        for d in (1..=n).filter(|d| n.is_multiple_of(*d)) {
            let field = build_field(base.p(), base.k * d, limits)?;
            let from_base = if d == 1 {
                Embedding::identity(&base)
            } else {
                Embedding::find(&base, &field, |_| true)?
            };
            let to_top = if d == n {
                Embedding::identity(&top)
            } else if d == 1 {
                base_to_top.clone()
            } else {
                let mb = from_base.multiplier;
                let want = base_to_top.multiplier;
                Embedding::find(&field, &top, |mt| (mb * mt) % n_top == want % n_top)?
            };
            levels.push(TowerLevel {
                degree: d,
                field,
                from_base,
                to_top,
            });
        }
        Ok(FieldTower { base, n, levels })
    }

    pub fn base(&self) -> &Arc<FieldSpec> {
        &self.base
    }

    pub fn top(&self) -> &Arc<FieldSpec> {
        &self.levels.last().expect("tower has a top").field
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    pub fn degrees(&self) -> impl Iterator<Item = u32> + '_ {
        self.levels.iter().map(|l| l.degree)
    }

    fn level(&self, d: u32) -> Result<&TowerLevel> {
        self.levels.iter().find(|l| l.degree == d).ok_or(Error::NotASubfield {
            p: self.base.p(),
            sub: self.base.k * d,
            ext: self.base.k * self.n,
        })
    }

    pub fn field(&self, d: u32) -> Result<&Arc<FieldSpec>> {
        Ok(&self.level(d)?.field)
    }

    /// `F_q -> F_{q^d}`.
    pub fn from_base(&self, d: u32) -> Result<&Embedding> {
        Ok(&self.level(d)?.from_base)
    }

    /// `F_{q^d} -> F_{q^n}`.
    pub fn to_top(&self, d: u32) -> Result<&Embedding> {
        Ok(&self.level(d)?.to_top)
    }
}

/// `ψ_a(x) = ζ_p^{Tr(a·x)}`.
#[derive(Clone, Debug)]
pub struct AdditiveChar {
    field: Arc<FieldSpec>,
    shift: FieldElem,
}

impl AdditiveChar {
    pub fn new(field: &Arc<FieldSpec>, shift: FieldElem) -> Result<Self> {
        if !field.contains(shift) {
            return Err(Error::FieldMismatch(format!("shift {shift} outside GF({})", field.q())));
        }
        Ok(AdditiveChar {
            field: field.clone(),
            shift,
        })
    }

    /// `ψ_1`.
    pub fn standard(field: &Arc<FieldSpec>) -> Self {
        AdditiveChar {
            field: field.clone(),
            shift: FieldElem::ONE,
        }
    }

    pub fn field(&self) -> &Arc<FieldSpec> {
        &self.field
    }

    pub fn shift(&self) -> FieldElem {
        self.shift
    }

    pub fn is_trivial(&self) -> bool {
        self.shift.is_zero()
    }

    /// `x ↦ ψ(-x)`, i.e. the complex conjugate character.
    pub fn conj(&self) -> Self {
        AdditiveChar {
            field: self.field.clone(),
            shift: self.field.neg(self.shift),
        }
    }

    /// `Tr(a·x) mod p`: the exponent of `ζ_p` in `ψ(x)`.
    pub fn exponent(&self, x: FieldElem) -> u32 {
        self.field.trace(self.field.mul(self.shift, x))
    }

    pub fn eval(&self, x: FieldElem) -> Result<CycloNumber> {
        if !self.field.contains(x) {
            return Err(Error::FieldMismatch(format!("{x} outside GF({})", self.field.q())));
        }
        CycloNumber::root_of_unity(self.field.p(), self.exponent(x) as i64)
    }
}

/// `θ_c(g^j) = ζ_{|F|-1}^{c·j}` on the multiplicative group of a field.
#[derive(Clone, Debug)]
pub struct MultChar {
    field: Arc<FieldSpec>,
    exponent: u64,
}

impl MultChar {
    pub fn new(field: &Arc<FieldSpec>, c: i64) -> Self {
        MultChar {
            field: field.clone(),
            exponent: c.rem_euclid(field.unit_order() as i64) as u64,
        }
    }

    pub fn field(&self) -> &Arc<FieldSpec> {
        &self.field
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn order(&self) -> u64 {
        self.field.unit_order()
    }

    /// Exponent of `ζ_{|F|-1}` in `θ(x)`.
    pub fn value_exponent(&self, x: FieldElem) -> Result<u64> {
        match x.log() {
            None => Err(Error::ZeroElement),
            Some(e) if (e as u64) < self.field.unit_order() => {
                Ok((e as u64 * self.exponent) % self.field.unit_order())
            }
            Some(_) => Err(Error::FieldMismatch(format!("{x} outside GF({})", self.field.q()))),
        }
    }

    pub fn eval(&self, x: FieldElem) -> Result<CycloNumber> {
        CycloNumber::root_of_unity(self.order(), self.value_exponent(x)? as i64)
    }
}

/// Size of the Frobenius orbit `{c, cq, cq^2, …}` modulo `q^n - 1`.
pub fn orbit_size(c: u64, q: u64, modulus: u64) -> usize {
    let c0 = c % modulus;
    let mut x = (c0 * q) % modulus;
    let mut size = 1;
    while x != c0 {
        x = (x * q) % modulus;
        size += 1;
    }
    size
}

/// Whether `θ` (on a field of order `q^n`) has a Frobenius orbit of full size `n`.
pub fn is_regular_char(theta: &MultChar, q: u64) -> Result<bool> {
    let size = theta.field.q();
    let mut n = 0;
    let mut t = 1u64;
    while t < size {
        t = t.checked_mul(q).ok_or_else(|| Error::Mismatch("base too large".into()))?;
        n += 1;
    }
    if t != size || q < 2 {
        return Err(Error::Mismatch(format!("GF({size}) is not an extension of GF({q})")));
    }
    Ok(orbit_size(theta.exponent, q, theta.order()) == n)
}
