//! `GL_r(F_q)`: matrices, distinguished subgroups, conjugacy-class keys and the
//! Singer decomposition.

mod class;
mod linalg;
mod poly;
mod singer;
mod subgroup;

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock, RwLock};

use serde::{Serialize, Serializer};
use smallvec::SmallVec;

use crate::config::Limits;
use crate::error::{Error, Result};
use crate::ffield::{build_field, prime_power, FieldElem, FieldSpec, FieldTower};

pub use class::{ClassKey, Partition};
pub use poly::{Irreducible, Poly};
pub use subgroup::SubgroupSpec;

pub(crate) type Entries = SmallVec<[FieldElem; 16]>;

/// An invertible `r × r` matrix over `F_q`, entries row-major.
///
/// The derived order compares entries lexicographically in row-major order, using the
/// field-element order (zero first, then increasing discrete logarithm).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct MatG {
    entries: Entries,
    r: u8,
    det: FieldElem,
}

impl MatG {
    pub fn r(&self) -> usize {
        self.r as usize
    }

    pub fn det(&self) -> FieldElem {
        self.det
    }

    pub fn entry(&self, i: usize, j: usize) -> FieldElem {
        self.entries[i * self.r() + j]
    }

    pub fn entries(&self) -> &[FieldElem] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[FieldElem] {
        let r = self.r();
        &self.entries[i * r..(i + 1) * r]
    }

    pub fn rows(&self) -> Vec<Vec<FieldElem>> {
        (0..self.r()).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<FieldElem> {
        (0..self.r()).map(|i| self.entry(i, j)).collect()
    }

    /// Canonical text key, e.g. `[[g^0,0],[0,g^0]]`.
    pub fn key(&self) -> String {
        let rows: Vec<String> = (0..self.r())
            .map(|i| {
                let cells: Vec<String> = self.row(i).iter().map(|e| e.to_string()).collect();
                format!("[{}]", cells.join(","))
            })
            .collect();
        format!("[{}]", rows.join(","))
    }
}

impl Serialize for MatG {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows().serialize(s)
    }
}

impl std::fmt::Display for MatG {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.key())
    }
}

/// Ambient context for `GL_r(F_q)`: the base field, the tower `F_{q^d}` for `d | r`,
/// the irreducible inventory, the Singer coordinates and per-group caches.
pub struct Gl {
    field: Arc<FieldSpec>,
    r: usize,
    limits: Limits,
    tower: FieldTower,
    irreducibles: Vec<Irreducible>,
    primary: HashMap<Vec<FieldElem>, usize>,
    singer: singer::SingerBasis,
    elements: [OnceLock<Arc<Vec<MatG>>>; 5],
    classes: RwLock<HashMap<MatG, ClassKey>>,
}

impl std::fmt::Debug for Gl {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GL_{}(F_{})", self.r, self.field.q())
    }
}

impl Gl {
    /// Builds the context for `GL_r(F_q)`; `q` must be a prime power and `q^r` within the field cap.
    pub fn new(q: u64, r: usize, limits: &Limits) -> Result<Gl> {
        if r == 0 {
            return Err(Error::ZeroDegree);
        }
        let (p, k) = prime_power(q)?;
        let field = build_field(p, k, limits)?;
        let tower = FieldTower::new(field.clone(), r as u32, limits)?;
        let irreducibles = poly::irreducible_inventory(&tower)?;
        let primary = irreducibles
            .iter()
            .enumerate()
            .map(|(i, f)| (poly::power(&field, &f.poly, r / f.degree as usize), i))
            .collect();
        let singer = singer::SingerBasis::new(&tower)?;
        Ok(Gl {
            field,
            r,
            limits: *limits,
            tower,
            irreducibles,
            primary,
            singer,
            elements: Default::default(),
            classes: RwLock::new(HashMap::new()),
        })
    }

    /// Shared context with default limits, built once per `(q, r)`.
    pub fn shared(q: u64, r: usize) -> Result<Arc<Gl>> {
        static CACHE: OnceLock<Mutex<HashMap<(u64, usize), Arc<Gl>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(g) = cache.lock().expect("group cache poisoned").get(&(q, r)) {
            return Ok(g.clone());
        }
        let g = Arc::new(Gl::new(q, r, &Limits::default())?);
        Ok(cache
            .lock()
            .expect("group cache poisoned")
            .entry((q, r))
            .or_insert(g)
            .clone())
    }

    pub fn field(&self) -> &Arc<FieldSpec> {
        &self.field
    }

    pub fn q(&self) -> u64 {
        self.field.q()
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    pub fn tower(&self) -> &FieldTower {
        &self.tower
    }

    /// `F_{q^r}`.
    pub fn top_field(&self) -> &Arc<FieldSpec> {
        self.tower.top()
    }

    /// Monic irreducibles over `F_q` of every degree dividing `r`.
    pub fn irreducibles(&self) -> &[Irreducible] {
        &self.irreducibles
    }

    /// `|GL_r(F_q)| = Π_{i<r} (q^r - q^i)`.
    pub fn order(&self) -> u64 {
        let q = self.q();
        let qr = q.pow(self.r as u32);
        (0..self.r as u32).map(|i| qr - q.pow(i)).product()
    }

    fn make(&self, entries: Entries) -> Result<MatG> {
        if entries.iter().any(|e| !self.field.contains(*e)) {
            return Err(Error::FieldMismatch(format!("entry outside GF({})", self.q())));
        }
        let det = linalg::det(&self.field, &entries, self.r);
        if det.is_zero() {
            return Err(Error::Singular);
        }
        Ok(MatG {
            entries,
            r: self.r as u8,
            det,
        })
    }

    /// Matrix from rows of field elements.
    pub fn mat(&self, rows: &[Vec<FieldElem>]) -> Result<MatG> {
        if rows.len() != self.r || rows.iter().any(|row| row.len() != self.r) {
            return Err(Error::InvalidArgument(format!("expected a {0}×{0} matrix", self.r)));
        }
        self.make(rows.iter().flatten().copied().collect())
    }

    /// Matrix from integer rows, read in the prime subfield.
    pub fn mat_int(&self, rows: &[&[i64]]) -> Result<MatG> {
        let rows: Vec<Vec<FieldElem>> = rows
            .iter()
            .map(|row| row.iter().map(|n| self.field.from_int(*n)).collect())
            .collect();
        self.mat(&rows)
    }

    pub fn identity(&self) -> MatG {
        self.scalar(FieldElem::ONE)
    }

    /// `z · Id`.
    pub fn scalar(&self, z: FieldElem) -> MatG {
        let r = self.r;
        let mut entries: Entries = SmallVec::from_elem(FieldElem::ZERO, r * r);
        for i in 0..r {
            entries[i * r + i] = z;
        }
        MatG {
            entries,
            r: r as u8,
            det: self.field.pow(z, r as i64),
        }
    }

    pub fn diag(&self, d: &[FieldElem]) -> Result<MatG> {
        let r = self.r;
        let mut rows = vec![vec![FieldElem::ZERO; r]; r];
        for (i, z) in d.iter().enumerate().take(r) {
            rows[i][i] = *z;
        }
        self.mat(&rows)
    }

    pub fn check(&self, g: &MatG) -> Result<()> {
        if g.r() != self.r || g.entries.iter().any(|e| !self.field.contains(*e)) {
            return Err(Error::FieldMismatch(format!(
                "matrix does not belong to GL_{}(F_{})",
                self.r,
                self.q()
            )));
        }
        Ok(())
    }

    pub fn mul(&self, a: &MatG, b: &MatG) -> MatG {
        let entries = linalg::mul(&self.field, &a.entries, &b.entries, self.r);
        MatG {
            entries,
            r: self.r as u8,
            det: self.field.mul(a.det, b.det),
        }
    }

    pub fn inv(&self, a: &MatG) -> MatG {
        let entries = linalg::inverse(&self.field, &a.entries, self.r).expect("invertible by construction");
        MatG {
            entries,
            r: self.r as u8,
            det: self.field.inv(a.det).expect("nonzero determinant"),
        }
    }

    /// `h g h^{-1}`.
    pub fn conjugate(&self, h: &MatG, g: &MatG) -> MatG {
        self.mul(&self.mul(h, g), &self.inv(h))
    }

    pub fn pow(&self, g: &MatG, n: i64) -> MatG {
        let base = if n < 0 { self.inv(g) } else { g.clone() };
        let mut n = n.unsigned_abs();
        let mut acc = self.identity();
        let mut sq = base;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(&acc, &sq);
            }
            sq = self.mul(&sq, &sq);
            n >>= 1;
        }
        acc
    }

    pub fn is_scalar(&self, g: &MatG) -> bool {
        let r = self.r;
        (0..r).all(|i| (0..r).all(|j| g.entry(i, j) == if i == j { g.entry(0, 0) } else { FieldElem::ZERO }))
    }

    /// Characteristic polynomial `det(x·Id - g)`, monic, constant term first.
    pub fn charpoly(&self, g: &MatG) -> Poly {
        poly::charpoly(&self.field, &g.entries, self.r)
    }
}
