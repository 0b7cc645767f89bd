use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A nonnegative count that may be infinite. Serializes as a JSON number
/// or the string `"inf"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Count {
    Finite(u64),
    Infinite,
}

impl Count {
    pub fn finite(self) -> Option<u64> {
        match self {
            Count::Finite(x) => Some(x),
            Count::Infinite => None,
        }
    }

    pub fn min_with(self, x: u64) -> u64 {
        match self {
            Count::Finite(y) => x.min(y),
            Count::Infinite => x,
        }
    }
}

impl Ord for Count {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Count::Finite(a), Count::Finite(b)) => a.cmp(b),
            (Count::Finite(_), Count::Infinite) => Ordering::Less,
            (Count::Infinite, Count::Finite(_)) => Ordering::Greater,
            (Count::Infinite, Count::Infinite) => Ordering::Equal,
        }
    }
}

impl PartialOrd for Count {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<u64> for Count {
    fn from(x: u64) -> Self {
        Count::Finite(x)
    }
}

impl fmt::Display for Count {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Count::Finite(x) => write!(f, "{x}"),
            Count::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Count {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Count::Finite(x) => s.serialize_u64(*x),
            Count::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Count {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            N(u64),
            S(String),
        }
        match Raw::deserialize(d)? {
            Raw::N(x) => Ok(Count::Finite(x)),
            Raw::S(s) if s == "inf" => Ok(Count::Infinite),
            Raw::S(s) => Err(serde::de::Error::custom(format!("expected a count or \"inf\", got {s:?}"))),
        }
    }
}
