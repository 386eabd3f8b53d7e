//! Size limits for the expensive searches.

use std::env;

use crate::group::DEFAULT_ENUMERATION_CAP;
use crate::structure::DEFAULT_ISOMORPHISM_CAP;

/// Limits applied by enumeration-heavy operations. A search that would
/// exceed one of them reports [`crate::Error::CapExceeded`] instead.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Largest group whose elements are listed explicitly.
    pub enumeration: u64,
    /// Largest group for which every subgroup class is enumerated.
    pub full_subgroups: u64,
    /// Largest Sylow subgroup for which p-subgroup classes are enumerated.
    pub sylow_order: u64,
    /// Most element-set keys held while walking conjugation orbits.
    pub orbit_keys: u64,
    /// Largest order for exact isomorphism search.
    pub isomorphism: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            enumeration: DEFAULT_ENUMERATION_CAP,
            full_subgroups: 2000,
            sylow_order: 256,
            orbit_keys: 1_000_000,
            isomorphism: DEFAULT_ISOMORPHISM_CAP,
        }
    }
}

impl Caps {
    /// Defaults overridden by `GRPCLASS_ENUMERATION_CAP`,
    /// `GRPCLASS_SUBGROUP_CAP`, `GRPCLASS_SYLOW_CAP`, `GRPCLASS_ORBIT_KEYS`
    /// and `GRPCLASS_ISOMORPHISM_CAP` where set.
    pub fn from_env() -> Caps {
        let mut caps = Caps::default();
        for (key, value) in env::vars() {
            if let Some(name) = key.strip_prefix("GRPCLASS_") {
                if let Ok(v) = value.trim().parse() {
                    caps.set(&name.to_ascii_lowercase(), v);
                }
            }
        }
        caps
    }

    /// Sets a cap by its manifest/environment name; returns false for an
    /// unknown name.
    pub fn set(&mut self, name: &str, value: u64) -> bool {
        let slot = match name {
            "enumeration" | "enumeration_cap" => &mut self.enumeration,
            "subgroup" | "subgroup_cap" | "full_subgroups" => &mut self.full_subgroups,
            "sylow" | "sylow_cap" | "sylow_order" => &mut self.sylow_order,
            "orbit_keys" => &mut self.orbit_keys,
            "isomorphism" | "isomorphism_cap" => &mut self.isomorphism,
            _ => return false,
        };
        *slot = value;
        true
    }
}
