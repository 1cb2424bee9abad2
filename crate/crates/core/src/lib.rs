//! Exact character theory of cuspidal representations of `GL_r(F_q)`: Deligne–Lusztig
//! characters, Bessel functions, Kirillov models and level-zero epsilon factors.
//!
//! All values live in cyclotomic fields and are computed exactly.

pub mod bessel;
pub mod config;
pub mod cusp;
pub mod cyclo;
pub mod epsilon;
pub mod error;
pub mod ffield;
pub mod glq;
pub mod verify;

pub use config::Limits;
pub use cyclo::{CycloNumber, Rational};
pub use error::{Error, Result};
pub use ffield::{AdditiveChar, FieldElem, FieldSpec, FieldTower, MultChar};
pub use glq::{ClassKey, Gl, MatG, Partition, SubgroupSpec};
pub use cusp::{list_cuspidals, ClassFunction, CuspidalRep};
pub use bessel::{Bessel, BesselTable, ModelSpace};
pub use epsilon::{LevelZeroRep, SMonomial, TransferData};
pub use verify::{Registry, Suite, SuiteConfig, SuiteReport};
