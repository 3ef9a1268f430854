//! Permutations of 1..n, their action on words, and the two special
//! families the constructions use: duplicators σ_π and transposition
//! products τ_u.

use std::fmt;

use crate::word::Word;
use crate::{Error, Result};

/// A permutation of {1, ..., degree}.
///
/// Words transform by support: `apply_word` moves the bit at coordinate `i`
/// to coordinate `π(i)`, so `supp(π(x)) = π(supp(x))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // images[i] = π(i+1) - 1
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Permutation {
        Permutation { images: (0..degree as u8).collect() }
    }

    /// Builds from 1-based images; rejects non-bijective input.
    pub fn from_images(images: &[usize]) -> Result<Permutation> {
        let degree = images.len();
        if degree == 0 || degree > 255 {
            return Err(Error::BadPermutation(format!("degree {degree} out of range")));
        }
        let mut seen = vec![false; degree];
        let mut out = Vec::with_capacity(degree);
        for &img in images {
            if img < 1 || img > degree || seen[img - 1] {
                return Err(Error::BadPermutation(format!("images {images:?} not bijective")));
            }
            seen[img - 1] = true;
            out.push((img - 1) as u8);
        }
        Ok(Permutation { images: out })
    }

    /// The transposition (i, j) in S_degree.
    pub fn transposition(degree: usize, i: usize, j: usize) -> Permutation {
        assert!(i >= 1 && i <= degree && j >= 1 && j <= degree && i != j);
        let mut p = Permutation::identity(degree);
        p.images.swap(i - 1, j - 1);
        p
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// π(i), 1-based.
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1] as usize + 1
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| i == img as usize)
    }

    pub fn fixes(&self, i: usize) -> bool {
        self.image(i) == i
    }

    /// self ∘ other: apply `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&x| self.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u8; self.degree()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img as usize] = i as u8;
        }
        Permutation { images }
    }

    /// π(x): the word with supp(π(x)) = π(supp(x)).
    pub fn apply_word(&self, w: &Word) -> Word {
        assert_eq!(self.degree(), w.len(), "permutation degree vs word length");
        let mut bits = 0u64;
        let mut rest = w.bits();
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            bits |= 1 << self.images[i];
            rest &= rest - 1;
        }
        Word::from_bits(w.len(), bits)
    }

    /// Sorted cycle lengths (including fixed points).
    pub fn cycle_lengths(&self) -> Vec<usize> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                len += 1;
                cur = self.images[cur] as usize;
            }
            out.push(len);
        }
        out.sort_unstable();
        out
    }

    /// All n! permutations of degree `n` in lexicographic image order.
    /// Intended for small n (brute-force searches use n = 7).
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        use itertools::Itertools;
        (0u8..n as u8).permutations(n).map(|images| Permutation { images })
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let images: Vec<String> = self.images().iter().map(|i| i.to_string()).collect();
        write!(f, "[{}]", images.join(" "))
    }
}

/// The duplicator σ_π on 2n+1 points: i ↦ π(i), n+1 fixed, i+n+1 ↦ π(i)+n+1.
pub fn duplicator(pi: &Permutation) -> Permutation {
    let n = pi.degree();
    let mut images = Vec::with_capacity(2 * n + 1);
    for i in 1..=n {
        images.push(pi.image(i));
    }
    images.push(n + 1);
    for i in 1..=n {
        images.push(pi.image(i) + n + 1);
    }
    Permutation::from_images(&images).expect("duplicator is bijective")
}

/// τ_u on 2n+1 points: the product of the transpositions (i, i+n+1) over supp(u).
pub fn tau(u: &Word) -> Permutation {
    let n = u.len();
    let mut p = Permutation::identity(2 * n + 1);
    for i in u.support() {
        p.images.swap(i - 1, i + n);
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn word7(bits: u64) -> Word {
        Word::from_bits(7, bits)
    }

    #[test]
    fn compose_applies_right_first() {
        // π = (1 2), ρ = (2 3); (π∘ρ)(2) = π(3) = 3, (π∘ρ)(3) = π(2) = 1.
        let pi = Permutation::transposition(3, 1, 2);
        let rho = Permutation::transposition(3, 2, 3);
        let c = pi.compose(&rho);
        assert_eq!(c.images(), vec![2, 3, 1]);
    }

    #[test]
    fn apply_word_moves_support() {
        let p = Permutation::from_images(&[2, 3, 1]).unwrap();
        let w = Word::from_support(3, &[1]);
        assert_eq!(p.apply_word(&w), Word::from_support(3, &[2]));
    }

    #[test]
    fn duplicator_shape() {
        let pi = Permutation::from_images(&[2, 3, 4, 5, 6, 7, 1]).unwrap(); // 7-cycle
        let s = duplicator(&pi);
        assert_eq!(s.degree(), 15);
        assert!(s.fixes(8));
        assert_eq!(s.cycle_lengths(), vec![1, 7, 7]);
        assert!(duplicator(&Permutation::identity(7)).is_identity());
    }

    #[test]
    fn tau_shape() {
        assert!(tau(&word7(0)).is_identity());
        let t = tau(&Word::ones(7));
        assert!(t.fixes(8));
        for i in 1..=7 {
            assert_eq!(t.image(i), i + 8);
            assert_eq!(t.image(i + 8), i);
        }
    }

    #[test]
    fn non_bijective_rejected() {
        assert!(Permutation::from_images(&[1, 1, 3]).is_err());
        assert!(Permutation::from_images(&[0, 1, 2]).is_err());
    }

    proptest! {
        #[test]
        fn tau_is_homomorphism(a in 0u64..128, b in 0u64..128) {
            let (u, v) = (word7(a), word7(b));
            prop_assert_eq!(tau(&u).compose(&tau(&v)), tau(&(u + v)));
            prop_assert!(tau(&u).compose(&tau(&u)).is_identity());
        }

        #[test]
        fn inverse_is_inverse(seed in 0u64..10_000) {
            // Deterministic pseudo-random permutation from the seed.
            let mut imgs: Vec<usize> = (1..=9).collect();
            let mut s = seed;
            for i in (1..imgs.len()).rev() {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                imgs.swap(i, (s >> 33) as usize % (i + 1));
            }
            let p = Permutation::from_images(&imgs).unwrap();
            prop_assert!(p.compose(&p.inverse()).is_identity());
            prop_assert!(p.inverse().compose(&p).is_identity());
        }
    }
}
