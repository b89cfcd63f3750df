use std::fmt;

use crate::error::{Error, Result};
use crate::MAX_AUTOMATA;

/// A global state of `n` automata.
///
/// Automaton 1 is the most significant bit of the integer encoding, so the
/// word `010000` over six automata encodes to 16.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Configuration {
    n: usize,
    value: u32,
}

pub(crate) fn check_size(n: usize) -> Result<()> {
    if n == 0 || n > MAX_AUTOMATA {
        Err(Error::SizeOutOfBounds(n))
    } else {
        Ok(())
    }
}

/// Bit of automaton `i` (0-based) inside an encoded configuration.
#[inline]
pub fn bit_of(value: u32, n: usize, i: usize) -> bool {
    (value >> (n - 1 - i)) & 1 == 1
}

#[inline]
pub fn mask_of(n: usize, i: usize) -> u32 {
    1 << (n - 1 - i)
}

impl Configuration {
    pub fn decode(value: u64, n: usize) -> Result<Self> {
        check_size(n)?;
        if value >> n != 0 {
            return Err(Error::ConfigOutOfRange { value, n });
        }
        Ok(Configuration {
            n,
            value: value as u32,
        })
    }

    pub fn from_bits(bits: &[bool]) -> Result<Self> {
        check_size(bits.len())?;
        let value = bits.iter().fold(0u32, |acc, &b| (acc << 1) | b as u32);
        Ok(Configuration {
            n: bits.len(),
            value,
        })
    }

    /// Parses a binary word such as `"010000"`.
    pub fn from_word(word: &str) -> Result<Self> {
        let bits = word
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::InvalidArgument(format!(
                    "`{other}` is not a binary digit"
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_bits(&bits)
    }

    pub fn encode(&self) -> u32 {
        self.value
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// State of automaton `i` (0-based).
    pub fn get(&self, i: usize) -> bool {
        bit_of(self.value, self.n, i)
    }

    pub fn bits(&self) -> Vec<bool> {
        (0..self.n).map(|i| self.get(i)).collect()
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_word(self.value, self.n))
    }
}

pub fn format_word(value: u32, n: usize) -> String {
    (0..n)
        .map(|i| if bit_of(value, n, i) { '1' } else { '0' })
        .collect()
}
