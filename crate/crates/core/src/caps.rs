use std::str::FromStr;

use crate::error::{Error, Result};

/// Size limits applied by the enumeration-based algorithms.
///
/// Every group handle carries its own copy; groups derived from a handle
/// (subgroups, quotients) inherit it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Largest group whose elements may be listed.
    pub enumeration: usize,
    /// Largest index accepted by `quotient`.
    pub quotient: usize,
    /// Largest group for which centralizers and normalizers are found by
    /// filtering elements; above this a backtrack search is used.
    pub filter: usize,
    /// Largest non-soluble group for the exact subgroup-chain recursion.
    pub chain_length: usize,
    /// Largest centralizer lattice, in nodes.
    pub lattice_nodes: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { enumeration: 100_000, quotient: 20_000, filter: 10_000, chain_length: 10_000, lattice_nodes: 50_000 }
    }
}

pub const CAPS_ENV: &str = "CENTRA_CAPS";

impl Caps {
    /// Defaults overridden by `CENTRA_CAPS`, when set.
    pub fn from_env() -> Result<Self> {
        match std::env::var(CAPS_ENV) {
            Ok(text) => text.parse(),
            Err(_) => Ok(Caps::default()),
        }
    }
}

impl FromStr for Caps {
    type Err = Error;

    /// Parses `enum=100000,quot=20000`; keys not given keep their defaults.
    fn from_str(s: &str) -> Result<Self> {
        let mut caps = Caps::default();
        for item in s.split(',').map(str::trim).filter(|i| !i.is_empty()) {
            let (key, value) = item.split_once('=').ok_or_else(|| Error::Parse {
                line: 1,
                message: format!("expected key=value in caps, found `{}`", item),
            })?;
            let value: usize = value
                .trim()
                .parse()
                .map_err(|_| Error::Parse { line: 1, message: format!("bad cap value `{}`", value) })?;
            match key.trim() {
                "enum" => caps.enumeration = value,
                "quot" => caps.quotient = value,
                "filter" => caps.filter = value,
                "chain" => caps.chain_length = value,
                "lattice" => caps.lattice_nodes = value,
                other => {
                    return Err(Error::Parse { line: 1, message: format!("unknown cap `{}`", other) });
                }
            }
        }
        Ok(caps)
    }
}
