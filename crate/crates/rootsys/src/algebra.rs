use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::RootError;

/// Cartan–Killing family letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

/// A simple complex Lie algebra, named by family and rank.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlgebraType {
    pub family: Family,
    pub rank: usize,
}

impl AlgebraType {
    pub fn new(family: Family, rank: usize) -> Result<Self, RootError> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(AlgebraType { family, rank })
        } else {
            Err(RootError::InvalidRank { family: family.letter(), rank })
        }
    }

    /// Number of roots (excluding zero weights).
    pub fn root_count(self) -> usize {
        let r = self.rank;
        match self.family {
            Family::A => r * (r + 1),
            Family::B | Family::C => 2 * r * r,
            Family::D => 2 * r * (r - 1),
            Family::E => match r {
                6 => 72,
                7 => 126,
                _ => 240,
            },
            Family::F => 48,
            Family::G => 12,
        }
    }

    pub fn dim(self) -> usize {
        self.root_count() + self.rank
    }

    /// Representative of the isomorphism class: D3 is A3 and B2 is C2.
    pub fn canonical(self) -> Self {
        match (self.family, self.rank) {
            (Family::D, 3) => AlgebraType { family: Family::A, rank: 3 },
            (Family::B, 2) => AlgebraType { family: Family::C, rank: 2 },
            _ => self,
        }
    }

    /// Every valid type up to the given rank, in family order.
    pub fn all_up_to(max_rank: usize) -> Vec<AlgebraType> {
        let fams = [Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G];
        let mut out = Vec::new();
        for f in fams {
            for r in 1..=max_rank {
                if let Ok(t) = AlgebraType::new(f, r) {
                    out.push(t);
                }
            }
        }
        out
    }
}

impl fmt::Display for AlgebraType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for AlgebraType {
    type Err = RootError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let mut chars = s.chars();
        let letter = chars.next().ok_or_else(|| RootError::Parse(s.to_string()))?;
        let family = match letter.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return Err(RootError::Parse(s.to_string())),
        };
        let rank: usize = chars
            .as_str()
            .trim_start_matches('_')
            .parse()
            .map_err(|_| RootError::Parse(s.to_string()))?;
        AlgebraType::new(family, rank)
    }
}

impl Serialize for AlgebraType {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for AlgebraType {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_bounds() {
        assert!(AlgebraType::new(Family::C, 1).is_err());
        assert!(AlgebraType::new(Family::B, 1).is_err());
        assert!(AlgebraType::new(Family::D, 2).is_err());
        assert!(AlgebraType::new(Family::E, 5).is_err());
        assert!(AlgebraType::new(Family::G, 3).is_err());
        assert!(AlgebraType::new(Family::D, 3).is_ok());
    }

    #[test]
    fn parse_and_print() {
        let t: AlgebraType = "E8".parse().unwrap();
        assert_eq!(t.to_string(), "E8");
        assert_eq!(t.dim(), 248);
        assert!("X3".parse::<AlgebraType>().is_err());
        assert_eq!("g2".parse::<AlgebraType>().unwrap().dim(), 14);
    }
}
