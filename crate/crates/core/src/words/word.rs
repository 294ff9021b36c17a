use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("letter {letter} is outside 1..={rank}")]
    LetterOutOfRange { letter: usize, rank: usize },
    #[error("rank must be positive")]
    ZeroRank,
    #[error("cannot parse word {0:?}")]
    Parse(String),
    #[error("rank {rank} exceeds the enumeration limit {max}")]
    RankTooLarge { rank: usize, max: usize },
    #[error("move {mv} does not fit a point with {len} coordinates")]
    InvalidPosition { mv: String, len: usize },
    #[error("pole of R({position}): a_j + a_(j+2) = 0 at ({}, {}, {})", triple[0], triple[1], triple[2])]
    Pole { position: usize, triple: [String; 3] },
    #[error("no braid/commutation path from {from} to {to}")]
    NoPath { from: String, to: String },
    #[error("{0} parameters given for a word of length {1}")]
    LengthMismatch(usize, usize),
}

/// A word in the generators `1..=rank`, letters in written order.
///
/// The word `h = (i_m … i_1)` is stored as `[i_m, …, i_1]`, so the string
/// `"121321"` has `letters()[0] == 1` as its leftmost letter. Evolutions and
/// charts consume letters from the right.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<usize>,
    rank: usize,
}

impl Word {
    pub fn new(letters: Vec<usize>, rank: usize) -> Result<Self, WordError> {
        if rank == 0 {
            return Err(WordError::ZeroRank);
        }
        if let Some(&letter) = letters.iter().find(|&&l| l == 0 || l > rank) {
            return Err(WordError::LetterOutOfRange { letter, rank });
        }
        Ok(Word { letters, rank })
    }

    pub fn empty(rank: usize) -> Self {
        Word { letters: Vec::new(), rank }
    }

    /// Parses `"121321"` or `"1,2,1"`; the empty string is the empty word.
    pub fn parse(s: &str, rank: usize) -> Result<Self, WordError> {
        let s = s.trim();
        let letters: Option<Vec<usize>> = if s.contains(',') || s.contains(' ') {
            s.split([',', ' '])
                .filter(|t| !t.is_empty())
                .map(|t| t.parse().ok())
                .collect()
        } else {
            s.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect()
        };
        let letters = letters.ok_or_else(|| WordError::Parse(s.to_string()))?;
        Word::new(letters, rank)
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Letters in application order (rightmost first).
    pub fn applied(&self) -> impl Iterator<Item = usize> + '_ {
        self.letters.iter().rev().copied()
    }

    pub fn reversed(&self) -> Word {
        Word { letters: self.letters.iter().rev().copied().collect(), rank: self.rank }
    }

    /// `self` written to the left of `other`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters, rank: self.rank.max(other.rank) }
    }

    pub fn with_letters(&self, letters: Vec<usize>) -> Word {
        Word { letters, rank: self.rank }
    }

    /// The reduced word `1 21 321 … r…1` of the longest element.
    pub fn longest(rank: usize) -> Word {
        let letters = (1..=rank).flat_map(|k| (1..=k).rev()).collect();
        Word { letters, rank }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rank < 10 {
            for l in &self.letters {
                write!(f, "{l}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
            f.write_str(&parts.join(","))
        }
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.letters.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let letters = Vec::<usize>::deserialize(d)?;
        let rank = letters.iter().copied().max().unwrap_or(1);
        Word::new(letters, rank).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        let w = Word::parse("121321", 3).unwrap();
        assert_eq!(w.letters(), &[1, 2, 1, 3, 2, 1]);
        assert_eq!(Word::parse("1, 2,1", 2).unwrap().letters(), &[1, 2, 1]);
        assert!(Word::parse("", 2).unwrap().is_empty());
        assert_eq!(
            Word::parse("191", 2),
            Err(WordError::LetterOutOfRange { letter: 9, rank: 2 })
        );
        assert!(Word::parse("1a", 2).is_err());
    }

    #[test]
    fn longest_words() {
        assert_eq!(Word::longest(2).to_string(), "121");
        assert_eq!(Word::longest(3).to_string(), "121321");
        assert_eq!(Word::longest(1).to_string(), "1");
    }

    #[test]
    fn application_order_is_right_to_left() {
        let w = Word::parse("123", 3).unwrap();
        assert_eq!(w.applied().collect::<Vec<_>>(), vec![3, 2, 1]);
    }
}
