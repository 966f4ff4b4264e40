use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// The Coxeter types this crate can build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoxeterType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    G2,
    F4,
    /// `I2(m)`; `None` is the infinite dihedral group.
    I2(Option<u32>),
}

impl CoxeterType {
    pub fn rank(self) -> usize {
        match self {
            CoxeterType::A(n) | CoxeterType::B(n) | CoxeterType::C(n) | CoxeterType::D(n) => n,
            CoxeterType::G2 | CoxeterType::I2(_) => 2,
            CoxeterType::F4 => 4,
        }
    }

    pub fn is_finite(self) -> bool {
        !matches!(self, CoxeterType::I2(None))
    }

    /// Known group order, `None` for the infinite dihedral group.
    pub fn order(self) -> Option<u128> {
        fn fact(n: usize) -> u128 {
            (1..=n as u128).product()
        }
        Some(match self {
            CoxeterType::A(n) => fact(n + 1),
            CoxeterType::B(n) | CoxeterType::C(n) => (1u128 << n) * fact(n),
            CoxeterType::D(n) => (1u128 << (n - 1)) * fact(n),
            CoxeterType::G2 => 12,
            CoxeterType::F4 => 1152,
            CoxeterType::I2(m) => 2 * u128::from(m?),
        })
    }

    pub fn matrix(self) -> CoxeterMatrix {
        let rank = self.rank();
        let mut m = CoxeterMatrix::commuting(rank);
        let path = |m: &mut CoxeterMatrix, upto: usize| {
            for i in 1..upto {
                m.set(i, i + 1, Some(3));
            }
        };
        match self {
            CoxeterType::A(n) => path(&mut m, n),
            CoxeterType::B(n) | CoxeterType::C(n) => {
                path(&mut m, n);
                if n >= 2 {
                    m.set(n - 1, n, Some(4));
                }
            }
            CoxeterType::D(n) => {
                path(&mut m, n - 1);
                if n >= 3 {
                    m.set(n - 2, n, Some(3));
                }
            }
            CoxeterType::G2 => m.set(1, 2, Some(6)),
            CoxeterType::F4 => {
                m.set(1, 2, Some(3));
                m.set(2, 3, Some(4));
                m.set(3, 4, Some(3));
            }
            CoxeterType::I2(order) => m.set(1, 2, order),
        }
        m
    }
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoxeterType::A(n) => write!(f, "A{n}"),
            CoxeterType::B(n) => write!(f, "B{n}"),
            CoxeterType::C(n) => write!(f, "C{n}"),
            CoxeterType::D(n) => write!(f, "D{n}"),
            CoxeterType::G2 => f.write_str("G2"),
            CoxeterType::F4 => f.write_str("F4"),
            CoxeterType::I2(Some(m)) => write!(f, "I2({m})"),
            CoxeterType::I2(None) => f.write_str("I2(inf)"),
        }
    }
}

impl FromStr for CoxeterType {
    type Err = Error;

    fn from_str(spec: &str) -> Result<Self> {
        let s = spec.trim();
        let malformed = || Error::MalformedType(spec.to_string());
        let unsupported = || Error::UnsupportedType(spec.to_string());

        if let Some(inner) = s.strip_prefix("I2(").and_then(|r| r.strip_suffix(')')) {
            let inner = inner.trim();
            if inner.eq_ignore_ascii_case("inf") {
                return Ok(CoxeterType::I2(None));
            }
            let m: u32 = parse_number(inner).ok_or_else(malformed)?;
            if m < 2 {
                return Err(malformed());
            }
            return Ok(CoxeterType::I2(Some(m)));
        }

        let mut chars = s.chars();
        let letter = chars.next().ok_or_else(malformed)?;
        let n: usize = parse_number(chars.as_str()).ok_or_else(malformed)?;
        if n == 0 {
            return Err(malformed());
        }
        match letter {
            'A' => Ok(CoxeterType::A(n)),
            'B' => Ok(CoxeterType::B(n)),
            'C' => Ok(CoxeterType::C(n)),
            'D' if n >= 2 => Ok(CoxeterType::D(n)),
            'D' => Err(malformed()),
            'G' if n == 2 => Ok(CoxeterType::G2),
            'F' if n == 4 => Ok(CoxeterType::F4),
            'H' | 'E' => Err(unsupported()),
            _ => Err(malformed()),
        }
    }
}

fn parse_number<T: FromStr>(s: &str) -> Option<T> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// Symmetric Coxeter matrix, 1-based. `None` entries stand for `m = ∞`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterMatrix {
    rank: usize,
    entries: Vec<Option<u32>>,
}

impl CoxeterMatrix {
    fn commuting(rank: usize) -> Self {
        let mut entries = vec![Some(2); rank * rank];
        for i in 0..rank {
            entries[i * rank + i] = Some(1);
        }
        Self { rank, entries }
    }

    fn set(&mut self, i: usize, j: usize, m: Option<u32>) {
        let r = self.rank;
        self.entries[(i - 1) * r + (j - 1)] = m;
        self.entries[(j - 1) * r + (i - 1)] = m;
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `m[i][j]` for 1-based `i, j`; `None` means infinity.
    pub fn get(&self, i: usize, j: usize) -> Option<u32> {
        self.entries[(i - 1) * self.rank + (j - 1)]
    }

    /// Rows as plain numbers, with `0` standing for infinity.
    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.entries
            .chunks(self.rank)
            .map(|row| row.iter().map(|m| m.unwrap_or(0)).collect())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_grammar() {
        assert_eq!("A3".parse::<CoxeterType>().unwrap(), CoxeterType::A(3));
        assert_eq!(
            "I2(4)".parse::<CoxeterType>().unwrap(),
            CoxeterType::I2(Some(4))
        );
        assert_eq!(
            "I2(inf)".parse::<CoxeterType>().unwrap(),
            CoxeterType::I2(None)
        );
        assert_eq!("F4".parse::<CoxeterType>().unwrap(), CoxeterType::F4);
        for bad in [
            "", "A", "A0", "Z3", "I2(1)", "I2()", "I2(x)", "A-1", "B 3", "D1", "G3", "F5",
        ] {
            assert!(
                matches!(bad.parse::<CoxeterType>(), Err(Error::MalformedType(_))),
                "{bad}"
            );
        }
        for unsup in ["H3", "H4", "E8"] {
            assert!(
                matches!(unsup.parse::<CoxeterType>(), Err(Error::UnsupportedType(_))),
                "{unsup}"
            );
        }
    }

    #[test]
    fn numbering_convention() {
        let a3 = CoxeterType::A(3).matrix();
        assert_eq!(
            (a3.get(1, 2), a3.get(2, 3), a3.get(1, 3)),
            (Some(3), Some(3), Some(2))
        );
        assert_eq!(a3.get(2, 2), Some(1));

        let b3 = CoxeterType::B(3).matrix();
        assert_eq!((b3.get(1, 2), b3.get(2, 3)), (Some(3), Some(4)));

        let d4 = CoxeterType::D(4).matrix();
        assert_eq!(d4.get(2, 4), Some(3));
        assert_eq!(d4.get(3, 4), Some(2));
        assert_eq!(d4.get(2, 3), Some(3));

        let f4 = CoxeterType::F4.matrix();
        assert_eq!(
            (f4.get(1, 2), f4.get(2, 3), f4.get(3, 4), f4.get(1, 4)),
            (Some(3), Some(4), Some(3), Some(2))
        );
        assert_eq!(CoxeterType::G2.matrix().get(2, 1), Some(6));
        assert_eq!(CoxeterType::I2(None).matrix().get(1, 2), None);
    }

    #[test]
    fn display_round_trips() {
        for s in ["A1", "B5", "C2", "D4", "G2", "F4", "I2(7)", "I2(inf)"] {
            assert_eq!(s.parse::<CoxeterType>().unwrap().to_string(), s);
        }
    }
}
