//! Fixed-width bit vectors over GF(2) with 1-based coordinates.
//!
//! A [`Word`] packs up to 63 coordinates into a single `u64`; coordinate `i`
//! (1-based, as in all file formats and reports) lives at bit `i - 1`.
//! Addition is coordinatewise XOR.

use std::fmt;
use std::ops::Add;

use crate::{Error, Result};

/// Hard cap on word length so every word fits one machine word.
pub const MAX_LEN: usize = 63;

/// An element of F^n, 1 ≤ n ≤ 63.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    len: u8,
    bits: u64,
}

impl Word {
    /// The all-zero word of length `n`.
    pub fn zero(n: usize) -> Word {
        assert!(n >= 1 && n <= MAX_LEN, "word length {n} out of range");
        Word { len: n as u8, bits: 0 }
    }

    /// The all-one word of length `n`.
    pub fn ones(n: usize) -> Word {
        let z = Word::zero(n);
        Word { bits: z.mask(), ..z }
    }

    /// Builds a word from a raw bit mask; bits beyond `n` must be clear.
    pub fn from_bits(n: usize, bits: u64) -> Word {
        let w = Word::zero(n);
        assert!(bits & !w.mask() == 0, "bits beyond coordinate {n} set");
        Word { bits, ..w }
    }

    /// Builds a word from its support (1-based coordinates).
    pub fn from_support(n: usize, support: &[usize]) -> Word {
        let mut w = Word::zero(n);
        for &i in support {
            assert!(i >= 1 && i <= n, "coordinate {i} out of 1..={n}");
            w.bits |= 1 << (i - 1);
        }
        w
    }

    /// The weight-1 word with coordinate `i` set.
    pub fn singleton(n: usize, i: usize) -> Word {
        Word::from_support(n, &[i])
    }

    fn mask(&self) -> u64 {
        (1u64 << self.len) - 1
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    /// Coordinate `i`, 1-based.
    pub fn get(&self, i: usize) -> bool {
        assert!(i >= 1 && i <= self.len(), "coordinate {i} out of range");
        self.bits >> (i - 1) & 1 == 1
    }

    /// Copy with coordinate `i` set to `v`.
    pub fn with_bit(&self, i: usize, v: bool) -> Word {
        assert!(i >= 1 && i <= self.len());
        let bit = 1u64 << (i - 1);
        Word {
            len: self.len,
            bits: if v { self.bits | bit } else { self.bits & !bit },
        }
    }

    /// Hamming weight.
    pub fn weight(&self) -> u32 {
        self.bits.count_ones()
    }

    /// |x| — the sum of all coordinates mod 2.
    pub fn parity(&self) -> bool {
        self.weight() & 1 == 1
    }

    /// Inner product mod 2.
    pub fn dot(&self, other: &Word) -> bool {
        debug_assert_eq!(self.len, other.len);
        (self.bits & other.bits).count_ones() & 1 == 1
    }

    /// Coordinatewise product y * u.
    pub fn star(&self, other: &Word) -> Word {
        debug_assert_eq!(self.len, other.len);
        Word { len: self.len, bits: self.bits & other.bits }
    }

    /// Hamming distance.
    pub fn distance(&self, other: &Word) -> u32 {
        debug_assert_eq!(self.len, other.len);
        (self.bits ^ other.bits).count_ones()
    }

    /// Ascending 1-based support.
    pub fn support(&self) -> impl Iterator<Item = usize> {
        let mut bits = self.bits;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize + 1;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    /// Concatenation (a, mid, c) of length 2n+1; `a` and `c` must have equal length.
    pub fn concat3(a: Word, mid: bool, c: Word) -> Word {
        assert_eq!(a.len, c.len);
        let n = a.len();
        let mut bits = a.bits;
        if mid {
            bits |= 1 << n;
        }
        bits |= c.bits << (n + 1);
        Word { len: (2 * n + 1) as u8, bits }
    }

    /// Splits a word of odd length 2n+1 into (first n, middle bit, last n).
    pub fn split3(&self) -> (Word, bool, Word) {
        let len = self.len();
        assert!(len % 2 == 1 && len >= 3, "split3 needs odd length ≥ 3");
        let n = (len - 1) / 2;
        let mask = (1u64 << n) - 1;
        let a = Word { len: n as u8, bits: self.bits & mask };
        let mid = self.bits >> n & 1 == 1;
        let c = Word { len: n as u8, bits: self.bits >> (n + 1) & mask };
        (a, mid, c)
    }

    /// All 2^n words of length `n`, ascending by bit pattern.
    pub fn all(n: usize) -> impl Iterator<Item = Word> {
        assert!(n >= 1 && n <= MAX_LEN);
        (0..1u64 << n).map(move |bits| Word { len: n as u8, bits })
    }

    /// 0/1 string with character position i = coordinate i.
    pub fn to_bit_string(&self) -> String {
        (1..=self.len()).map(|i| if self.get(i) { '1' } else { '0' }).collect()
    }

    /// Parses a 0/1 string (character position i = coordinate i).
    pub fn from_bit_string(s: &str) -> Result<Word> {
        let n = s.len();
        if n < 1 || n > MAX_LEN {
            return Err(Error::BadWordString(format!("length {n} out of 1..={MAX_LEN}")));
        }
        let mut bits = 0u64;
        for (idx, ch) in s.chars().enumerate() {
            match ch {
                '1' => bits |= 1 << idx,
                '0' => {}
                other => return Err(Error::BadWordString(format!("bad character {other:?}"))),
            }
        }
        Ok(Word { len: n as u8, bits })
    }

    /// Paper-style support notation: `{1,6,7}`, or `0` for the zero word.
    pub fn support_string(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let inner: Vec<String> = self.support().map(|i| i.to_string()).collect();
        format!("{{{}}}", inner.join(","))
    }
}

impl Add for Word {
    type Output = Word;

    fn add(self, rhs: Word) -> Word {
        assert_eq!(self.len, rhs.len, "length mismatch in word addition");
        Word { len: self.len, bits: self.bits ^ rhs.bits }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_bit_string())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({}, {})", self.len(), self.support_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn support_round_trip() {
        let w = Word::from_support(7, &[1, 6, 7]);
        assert_eq!(w.support().collect::<Vec<_>>(), vec![1, 6, 7]);
        assert_eq!(w.weight(), 3);
        assert_eq!(w.to_bit_string(), "1000011");
        assert_eq!(w.support_string(), "{1,6,7}");
        assert_eq!(Word::from_bit_string("1000011").unwrap(), w);
    }

    #[test]
    fn parity_and_dot() {
        let w = Word::from_support(7, &[1, 2, 3]);
        assert!(w.parity());
        let u = Word::from_support(7, &[2, 3, 4]);
        assert!(!w.dot(&u)); // overlap {2,3}, even
        assert_eq!(w.star(&u), Word::from_support(7, &[2, 3]));
    }

    #[test]
    fn split_concat() {
        let a = Word::from_support(7, &[1, 4]);
        let c = Word::from_support(7, &[7]);
        let w = Word::concat3(a, true, c);
        assert_eq!(w.len(), 15);
        assert!(w.get(8));
        assert!(w.get(15));
        assert_eq!(w.split3(), (a, true, c));
    }

    #[test]
    fn bad_strings_rejected() {
        assert!(Word::from_bit_string("01x1").is_err());
        assert!(Word::from_bit_string("").is_err());
    }

    proptest! {
        #[test]
        fn add_is_xor(a in 0u64..128, b in 0u64..128) {
            let x = Word::from_bits(7, a);
            let y = Word::from_bits(7, b);
            prop_assert_eq!((x + y).bits(), a ^ b);
            prop_assert_eq!(x + y, y + x);
            prop_assert_eq!((x + y) + y, x);
        }

        #[test]
        fn weight_is_support_size(a in 0u64..(1 << 15)) {
            let w = Word::from_bits(15, a);
            prop_assert_eq!(w.weight() as usize, w.support().count());
        }

        #[test]
        fn bit_string_round_trip(a in 0u64..(1 << 15)) {
            let w = Word::from_bits(15, a);
            prop_assert_eq!(Word::from_bit_string(&w.to_bit_string()).unwrap(), w);
        }
    }
}
