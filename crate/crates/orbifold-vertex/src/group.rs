use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Orbifold group: the Klein four-group or a cyclic group `Z/n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Group {
    Z2xZ2,
    Zn(u32),
}

impl Group {
    pub fn zn(n: u32) -> Result<Group> {
        if n == 0 {
            return Err(Error::ZeroModulus);
        }
        Ok(Group::Zn(n))
    }

    /// Number of series variables (one per group element).
    pub fn arity(self) -> usize {
        match self {
            Group::Z2xZ2 => 4,
            Group::Zn(n) => n as usize,
        }
    }

    /// Variable slot of the box `(i, j, k)`.
    ///
    /// For `Z2×Z2` the slots are `(q0, qa, qb, qc)` and the box has color
    /// `i·a + j·b + k·c`; for `Z/n` the color is `i - j mod n`.
    pub fn color(self, i: u32, j: u32, k: u32) -> usize {
        match self {
            Group::Z2xZ2 => {
                let g = ((i + k) % 2, (j + k) % 2);
                match g {
                    (0, 0) => 0,
                    (1, 0) => 1,
                    (0, 1) => 2,
                    _ => 3,
                }
            }
            Group::Zn(n) => (i64::from(i) - i64::from(j)).rem_euclid(i64::from(n)) as usize,
        }
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Group::Z2xZ2 => write!(f, "z2z2"),
            Group::Zn(n) => write!(f, "z{n}"),
        }
    }
}

impl FromStr for Group {
    type Err = Error;

    /// Accepts `z2z2` (or `z2xz2`) and `z<n>`, case-insensitively.
    fn from_str(s: &str) -> Result<Group> {
        let s = s.trim().to_ascii_lowercase();
        if s == "z2z2" || s == "z2xz2" {
            return Ok(Group::Z2xZ2);
        }
        let n = s
            .strip_prefix('z')
            .and_then(|n| n.parse::<u32>().ok())
            .ok_or_else(|| Error::Unsupported(format!("unknown group `{s}`")))?;
        Group::zn(n)
    }
}
