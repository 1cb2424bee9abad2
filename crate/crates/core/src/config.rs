use serde::{Deserialize, Serialize};

/// Caps applied before any table is built or group is enumerated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    /// Largest admissible field size `p^k`.
    pub field_cap: u64,
    /// Largest admissible subgroup order for explicit enumeration.
    pub group_cap: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            field_cap: 4096,
            group_cap: 1_000_000,
        }
    }
}

/// Environment variable naming a directory where field and cyclotomic tables are cached.
pub const CACHE_DIR_ENV: &str = "CUSPIDAL_CACHE_DIR";

pub(crate) fn cache_dir() -> Option<std::path::PathBuf> {
    std::env::var_os(CACHE_DIR_ENV)
        .filter(|v| !v.is_empty())
        .map(std::path::PathBuf::from)
}
