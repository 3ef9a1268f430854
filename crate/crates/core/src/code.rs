//! Code containers and the GF(2) linear algebra they need: spans, rank,
//! kernels, perfectness, Hamming constructors, and coset machinery.
//!
//! A [`Code`] is an immutable set of same-length words with a membership
//! oracle. Three backings exist: `Explicit` (enumerated set), `Linear`
//! (echelonized basis), and `Vasiliev` (base code + λ, membership decided by
//! the decomposition rule without materializing the 2^n·|base| words).

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::sync::Arc;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::vasiliev::LambdaFn;
use crate::word::Word;
use crate::{Error, Result};

/// Row-reduced GF(2) basis over u64 bit masks. Rows are kept fully reduced
/// against each other, so [`Gf2Basis::reduce`] yields a canonical coset
/// representative.
#[derive(Clone, Debug, Default)]
pub struct Gf2Basis {
    rows: Vec<u64>, // sorted by pivot (highest set bit), descending
}

impl Gf2Basis {
    pub fn new() -> Gf2Basis {
        Gf2Basis { rows: Vec::new() }
    }

    pub fn from_words<'a>(words: impl IntoIterator<Item = Word>) -> Gf2Basis {
        let mut b = Gf2Basis::new();
        for w in words {
            b.add(w.bits());
        }
        b
    }

    pub fn rank(&self) -> u32 {
        self.rows.len() as u32
    }

    /// Canonical representative of `bits + span(self)`.
    pub fn reduce(&self, mut bits: u64) -> u64 {
        for &row in &self.rows {
            let pivot = 63 - row.leading_zeros();
            if bits >> pivot & 1 == 1 {
                bits ^= row;
            }
        }
        bits
    }

    pub fn contains(&self, bits: u64) -> bool {
        self.reduce(bits) == 0
    }

    /// Inserts `bits`; returns true if the rank grew.
    pub fn add(&mut self, bits: u64) -> bool {
        let r = self.reduce(bits);
        if r == 0 {
            return false;
        }
        let pivot = 63 - r.leading_zeros();
        for row in &mut self.rows {
            if *row >> pivot & 1 == 1 {
                *row ^= r;
            }
        }
        let at = self.rows.partition_point(|&row| 63 - row.leading_zeros() > pivot);
        self.rows.insert(at, r);
        true
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    /// All 2^rank masks of the span, gray-code order.
    pub fn span_masks(&self) -> impl Iterator<Item = u64> + '_ {
        let k = self.rows.len();
        assert!(k < 32, "span too large to enumerate");
        let mut cur = 0u64;
        (0u64..1 << k).map(move |idx| {
            if idx > 0 {
                cur ^= self.rows[idx.trailing_zeros() as usize];
            }
            cur
        })
    }
}

#[derive(Clone)]
pub(crate) enum Backing {
    Explicit { words: Vec<Word>, index: HashSet<u64> },
    Linear { basis: Gf2Basis },
    Vasiliev { lambda: Arc<LambdaFn> },
}

/// A binary code: a set of length-n words containing 0^n.
#[derive(Clone)]
pub struct Code {
    len: usize,
    pub(crate) backing: Backing,
}

impl Code {
    /// Explicit code from an enumerated word set. Rejects duplicates, mixed
    /// lengths, and sets missing the zero word (all codes in scope are
    /// reduced).
    pub fn explicit(n: usize, words: Vec<Word>) -> Result<Code> {
        let mut sorted = words;
        for w in &sorted {
            if w.len() != n {
                return Err(Error::LengthMismatch { expected: n, got: w.len() });
            }
        }
        sorted.sort_unstable();
        if sorted.windows(2).any(|p| p[0] == p[1]) {
            return Err(Error::DuplicateWord);
        }
        if sorted.first() != Some(&Word::zero(n)) {
            return Err(Error::MissingZeroWord);
        }
        let index = sorted.iter().map(|w| w.bits()).collect();
        Ok(Code { len: n, backing: Backing::Explicit { words: sorted, index } })
    }

    /// Linear code spanned by `generators` (dependent generators are fine).
    pub fn linear(n: usize, generators: &[Word]) -> Result<Code> {
        for g in generators {
            if g.len() != n {
                return Err(Error::LengthMismatch { expected: n, got: g.len() });
            }
        }
        let basis = Gf2Basis::from_words(generators.iter().copied());
        Ok(Code { len: n, backing: Backing::Linear { basis } })
    }

    pub(crate) fn vasiliev_backed(lambda: Arc<LambdaFn>) -> Code {
        let len = 2 * lambda.base().len() + 1;
        Code { len, backing: Backing::Vasiliev { lambda } }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn size(&self) -> u64 {
        match &self.backing {
            Backing::Explicit { words, .. } => words.len() as u64,
            Backing::Linear { basis } => 1 << basis.rank(),
            Backing::Vasiliev { lambda } => {
                let base = lambda.base();
                (1u64 << base.len()) * base.size()
            }
        }
    }

    pub fn contains(&self, w: &Word) -> bool {
        if w.len() != self.len {
            return false;
        }
        match &self.backing {
            Backing::Explicit { index, .. } => index.contains(&w.bits()),
            Backing::Linear { basis } => basis.contains(w.bits()),
            Backing::Vasiliev { lambda } => {
                let (a, b, c) = w.split3();
                let y = a + c;
                lambda.base().contains(&y) && b == (c.parity() ^ lambda.eval_in_base(&y))
            }
        }
    }

    /// Streaming iterator over all codewords (no materialization for lazy
    /// backings).
    pub fn iter_words(&self) -> WordIter<'_> {
        WordIter::new(self)
    }

    /// Materializes the sorted word list. Guarded against runaway sizes.
    pub fn words_sorted(&self) -> Vec<Word> {
        assert!(self.size() <= 1 << 22, "refusing to materialize {} words", self.size());
        let mut v: Vec<Word> = self.iter_words().collect();
        v.sort_unstable();
        v
    }

    /// Set equality via size + membership sweep.
    pub fn same_set(&self, other: &Code) -> bool {
        self.len == other.len
            && self.size() == other.size()
            && self.iter_words().all(|w| other.contains(&w))
    }

    /// True for codes closed under addition. Linear backings are linear by
    /// construction; a Vasiliev backing is linear iff its base and λ are;
    /// explicit codes are checked exhaustively.
    pub fn is_linear(&self) -> bool {
        match &self.backing {
            Backing::Linear { .. } => true,
            Backing::Vasiliev { lambda } => {
                lambda.base().is_linear() && crate::vasiliev::is_linear_lambda(lambda).unwrap_or(false)
            }
            Backing::Explicit { words, index } => words.iter().enumerate().all(|(i, a)| {
                words[i..].iter().all(|b| index.contains(&(a.bits() ^ b.bits())))
            }),
        }
    }

    pub fn as_vasiliev(&self) -> Option<&Arc<LambdaFn>> {
        match &self.backing {
            Backing::Vasiliev { lambda } => Some(lambda),
            _ => None,
        }
    }

    /// Uniform random codeword (used by sampling checks on lazy codes).
    pub fn random_word(&self, rng: &mut StdRng) -> Word {
        match &self.backing {
            Backing::Explicit { words, .. } => words[rng.random_range(0..words.len())],
            Backing::Linear { basis } => {
                let mut bits = 0u64;
                for &row in basis.rows() {
                    if rng.random() {
                        bits ^= row;
                    }
                }
                Word::from_bits(self.len, bits)
            }
            Backing::Vasiliev { lambda } => {
                let base = lambda.base();
                let n = base.len();
                let y = base.random_word(rng);
                let x = Word::from_bits(n, rng.random_range(0..1u64 << n));
                Word::concat3(x + y, x.parity() ^ lambda.eval_in_base(&y), x)
            }
        }
    }
}

pub struct WordIter<'a> {
    inner: IterInner<'a>,
}

enum IterInner<'a> {
    Slice(std::slice::Iter<'a, Word>),
    Span { n: usize, rows: &'a [u64], idx: u64, cur: u64 },
    Vasiliev {
        lambda: &'a LambdaFn,
        base: Box<WordIter<'a>>,
        cur: Option<(Word, bool)>, // (y, λ(y))
        x: u64,
    },
}

impl<'a> WordIter<'a> {
    fn new(code: &'a Code) -> WordIter<'a> {
        let inner = match &code.backing {
            Backing::Explicit { words, .. } => IterInner::Slice(words.iter()),
            Backing::Linear { basis } => {
                IterInner::Span { n: code.len, rows: basis.rows(), idx: 0, cur: 0 }
            }
            Backing::Vasiliev { lambda } => {
                let mut base = Box::new(lambda.base().iter_words());
                let cur = base.next().map(|y| (y, lambda.eval_in_base(&y)));
                IterInner::Vasiliev { lambda, base, cur, x: 0 }
            }
        };
        WordIter { inner }
    }
}

impl Iterator for WordIter<'_> {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        match &mut self.inner {
            IterInner::Slice(it) => it.next().copied(),
            IterInner::Span { n, rows, idx, cur } => {
                if *idx >= 1u64 << rows.len() {
                    return None;
                }
                if *idx > 0 {
                    *cur ^= rows[idx.trailing_zeros() as usize];
                }
                *idx += 1;
                Some(Word::from_bits(*n, *cur))
            }
            IterInner::Vasiliev { lambda, base, cur, x } => {
                let (y, ly) = (*cur)?;
                let n = y.len();
                let xw = Word::from_bits(n, *x);
                let out = Word::concat3(xw + y, xw.parity() ^ ly, xw);
                *x += 1;
                if *x == 1 << n {
                    *x = 0;
                    *cur = base.next().map(|y| (y, lambda.eval_in_base(&y)));
                }
                Some(out)
            }
        }
    }
}

/// GF(2) linear closure of `generators`, returned as an enumerated code.
pub fn span(n: usize, generators: &[Word]) -> Result<Code> {
    let linear = Code::linear(n, generators)?;
    Code::explicit(n, linear.iter_words().collect())
}

/// Dimension of the linear span of the code's words.
///
/// Lazy codes are handled through their generators: the span of a Vasiliev
/// code is spanned by the parity-component generators (e_i, 1, e_i) together
/// with the lifted base section {(y, λ(y), 0)}.
pub fn rank(code: &Code) -> u32 {
    match &code.backing {
        Backing::Explicit { words, .. } => Gf2Basis::from_words(words.iter().copied()).rank(),
        Backing::Linear { basis } => basis.rank(),
        Backing::Vasiliev { lambda } => {
            let base = lambda.base();
            let n = base.len();
            let mut basis = Gf2Basis::new();
            for i in 1..=n {
                let e = Word::singleton(n, i);
                basis.add(Word::concat3(e, true, e).bits());
            }
            if lambda.is_zero_fn() {
                // λ ≡ 0: the section is spanned by lifts of a base basis.
                for row in base_spanning_rows(base) {
                    basis.add(Word::concat3(row, false, Word::zero(n)).bits());
                }
            } else {
                for y in base.iter_words() {
                    basis.add(Word::concat3(y, lambda.eval_in_base(&y), Word::zero(n)).bits());
                }
            }
            basis.rank()
        }
    }
}

/// Rows spanning `span(code)` without enumerating lazy backings.
fn base_spanning_rows(code: &Code) -> Vec<Word> {
    match &code.backing {
        Backing::Explicit { words, .. } => {
            let b = Gf2Basis::from_words(words.iter().copied());
            b.rows().iter().map(|&r| Word::from_bits(code.len(), r)).collect()
        }
        Backing::Linear { basis } => {
            basis.rows().iter().map(|&r| Word::from_bits(code.len(), r)).collect()
        }
        Backing::Vasiliev { lambda } => {
            let base = lambda.base();
            let n = base.len();
            let mut out = Vec::new();
            for i in 1..=n {
                let e = Word::singleton(n, i);
                out.push(Word::concat3(e, true, e));
            }
            if lambda.is_zero_fn() {
                for row in base_spanning_rows(base) {
                    out.push(Word::concat3(row, false, Word::zero(n)));
                }
            } else {
                for y in base.iter_words() {
                    out.push(Word::concat3(y, lambda.eval_in_base(&y), Word::zero(n)));
                }
            }
            out
        }
    }
}

/// Kernel by the definition: {x ∈ C : x + C = C}, decided by |C|² membership
/// tests. The independent oracle for the structural computation in
/// [`kernel`].
pub fn kernel_brute(code: &Code) -> Code {
    let words: Vec<Word> = code.iter_words().collect();
    let periods: Vec<Word> = words
        .iter()
        .filter(|&&x| words.iter().all(|&c| code.contains(&(x + c))))
        .copied()
        .collect();
    Code::explicit(code.len(), periods).expect("kernel contains 0")
}

/// Kernel of a code. Enumerable codes go through the brute-force oracle;
/// lazy Vasiliev codes use the structural rule
/// Ker(V) = {(k+x, |x|+λ(k), x) : k ∈ Ker(base), λ(k + y) = λ(k) + λ(y) ∀y}.
pub fn kernel(code: &Code) -> Code {
    let k = match &code.backing {
        Backing::Explicit { .. } => kernel_brute(code),
        Backing::Linear { .. } => code.clone(),
        Backing::Vasiliev { lambda } => {
            let base = lambda.base();
            let base_kernel = kernel(base);
            let additive: Vec<Word> = base_kernel
                .iter_words()
                .filter(|k| {
                    lambda.is_zero_fn() || {
                        let lk = lambda.eval_in_base(k);
                        base.iter_words()
                            .all(|y| lambda.eval_in_base(&(*k + y)) == (lk ^ lambda.eval_in_base(&y)))
                    }
                })
                .collect();
            let k_code =
                Arc::new(Code::explicit(base.len(), additive).expect("kernel part contains 0"));
            let restricted = LambdaFn::restriction(lambda, &k_code);
            Code::vasiliev_backed(restricted)
        }
    };
    if k.size() <= 1 << 16 {
        Code::explicit(k.len(), k.iter_words().collect()).expect("kernel is a valid code")
    } else {
        k
    }
}

/// One canonical representative per coset of `subcode` inside `code`.
/// `subcode` must be linear and contained in `code`.
pub fn coset_representatives(code: &Code, subcode: &Code) -> Result<Vec<Word>> {
    if subcode.len() != code.len() {
        return Err(Error::LengthMismatch { expected: code.len(), got: subcode.len() });
    }
    if !subcode.is_linear() {
        return Err(Error::NotLinear("coset decomposition needs a linear subcode"));
    }
    if !subcode.iter_words().all(|w| code.contains(&w)) {
        return Err(Error::SubcodeNotContained);
    }
    let basis = Gf2Basis::from_words(subcode.iter_words());
    let mut reps = BTreeSet::new();
    for w in code.iter_words() {
        reps.insert(basis.reduce(w.bits()));
    }
    Ok(reps.into_iter().map(|bits| Word::from_bits(code.len(), bits)).collect())
}

/// One representative per kernel coset, without enumerating lazy codes.
/// Neighborhood systems and translator membership are constant on kernel
/// cosets, so these representatives suffice for homogeneity and
/// transitivity sweeps.
pub fn kernel_coset_representatives(code: &Code) -> Vec<Word> {
    match &code.backing {
        Backing::Linear { .. } => vec![Word::zero(code.len())],
        Backing::Explicit { .. } => {
            let ker = kernel_brute(code);
            coset_representatives(code, &ker).expect("kernel is a linear subcode")
        }
        Backing::Vasiliev { lambda } => {
            let base = lambda.base();
            let n = base.len();
            let ker = kernel(code);
            // k-part of the kernel: words (k, λ(k), 0^n).
            let k_words: Vec<Word> = ker
                .iter_words()
                .filter(|w| {
                    let (_, _, c) = w.split3();
                    c.is_zero()
                })
                .map(|w| {
                    let (a, _, _) = w.split3();
                    a
                })
                .collect();
            let basis = Gf2Basis::from_words(k_words.into_iter());
            let mut reps = BTreeSet::new();
            for y in base.iter_words() {
                reps.insert(basis.reduce(y.bits()));
            }
            reps.into_iter()
                .map(|bits| {
                    let y = Word::from_bits(n, bits);
                    Word::concat3(y, lambda.eval_in_base(&y), Word::zero(n))
                })
                .collect()
        }
    }
}

/// How a perfectness verdict was reached.
#[derive(Clone, Debug, serde::Serialize)]
pub struct PerfectnessReport {
    pub perfect: bool,
    pub method: String,
}

/// Full ball-cover check for n ≤ 15; cardinality plus seeded sampled ball
/// covers for longer codes (the two are equivalent for |C|·(n+1) = 2^n by
/// sphere packing). The report names which method ran.
pub fn perfectness(code: &Code, budget: u64, seed: u64) -> PerfectnessReport {
    let n = code.len();
    if !(n + 1).is_power_of_two() || n < 3 {
        return PerfectnessReport {
            perfect: false,
            method: format!("length {n} not of the form 2^k - 1"),
        };
    }
    let expected = (1u64 << n) / (n as u64 + 1);
    if code.size() != expected {
        return PerfectnessReport {
            perfect: false,
            method: format!("cardinality {} ≠ 2^{n}/{}", code.size(), n + 1),
        };
    }
    if n <= 15 {
        let mut covered = vec![0u8; 1 << n];
        for w in code.iter_words() {
            covered[w.bits() as usize] += 1;
            for i in 1..=n {
                covered[(w.bits() ^ (1 << (i - 1))) as usize] += 1;
            }
        }
        let perfect = covered.iter().all(|&c| c == 1);
        PerfectnessReport { perfect, method: format!("full ball cover over 2^{n} vectors") }
    } else {
        let mut rng = StdRng::seed_from_u64(seed);
        for _ in 0..budget {
            let x = Word::from_bits(n, rng.random_range(0..1u64 << n));
            let mut hits = code.contains(&x) as u32;
            for i in 1..=n {
                hits += code.contains(&(x + Word::singleton(n, i))) as u32;
            }
            if hits != 1 {
                return PerfectnessReport {
                    perfect: false,
                    method: format!("sampled ball cover failed at {}", x.to_bit_string()),
                };
            }
        }
        PerfectnessReport {
            perfect: true,
            method: format!("cardinality + {budget} sampled ball covers (seed {seed})"),
        }
    }
}

pub fn is_perfect(code: &Code) -> bool {
    perfectness(code, 1000, 0xC0DE).perfect
}

/// The linear perfect code of length n = 2^k − 1 whose parity-check matrix
/// columns are the binary expansions of 1..n.
pub fn hamming(n: usize) -> Result<Code> {
    if !(n + 1).is_power_of_two() || n < 3 {
        return Err(Error::NotAdmissibleLength(n));
    }
    let k = (n + 1).trailing_zeros() as usize;
    let mut generators = Vec::new();
    for d in 1..=n {
        if d.is_power_of_two() {
            continue;
        }
        let mut w = Word::singleton(n, d);
        for j in 0..k {
            if d >> j & 1 == 1 {
                w = w + Word::singleton(n, 1 << j);
            }
        }
        generators.push(w);
    }
    Code::linear(n, &generators)
}

/// The length-7 Hamming code presented by its four generating triples
/// {1,2,3}, {1,4,5}, {1,6,7}, {2,4,6}.
pub fn hamming7_paper() -> Code {
    let gens = [
        Word::from_support(7, &[1, 2, 3]),
        Word::from_support(7, &[1, 4, 5]),
        Word::from_support(7, &[1, 6, 7]),
        Word::from_support(7, &[2, 4, 6]),
    ];
    Code::linear(7, &gens).expect("fixed generators are well formed")
}

/// Aggregate statistics for reports.
#[derive(Clone, Debug, serde::Serialize)]
pub struct CodeStats {
    pub n: usize,
    pub size: u64,
    pub rank: u32,
    pub kernel_size: u64,
    pub min_distance: u32,
    pub is_perfect: bool,
    pub weight_distribution: BTreeMap<u32, u64>,
    pub method_notes: Vec<String>,
}

/// Computes [`CodeStats`]. Enumeration-heavy fields stream the code; codes
/// beyond 2^27 words get sampled fields with a note instead.
pub fn stats(code: &Code, budget: u64, seed: u64) -> CodeStats {
    let mut notes = Vec::new();
    let perfect = perfectness(code, budget, seed);
    notes.push(format!("perfectness: {}", perfect.method));
    let kernel_size = kernel(code).size();
    let (min_distance, weight_distribution) = if code.size() <= 1 << 27 {
        let mut dist = BTreeMap::new();
        for w in code.iter_words() {
            *dist.entry(w.weight()).or_insert(0u64) += 1;
        }
        let min_d = if code.is_linear() || code.as_vasiliev().is_some() {
            // Distance is left-invariant under the kernel-contained component
            // for Vasiliev codes and under the whole code for linear ones;
            // min nonzero weight is exact for both. Recorded either way.
            notes.push("min distance: minimum nonzero weight (streamed)".into());
            dist.keys().copied().find(|&w| w > 0).unwrap_or(0)
        } else {
            notes.push("min distance: exact pairwise sweep".into());
            let words: Vec<Word> = code.iter_words().collect();
            let mut best = u32::MAX;
            for (i, a) in words.iter().enumerate() {
                for b in &words[i + 1..] {
                    best = best.min(a.distance(b));
                }
            }
            if best == u32::MAX {
                0
            } else {
                best
            }
        };
        (min_d, dist)
    } else {
        notes.push("weight distribution omitted: code too large to stream".into());
        let mut rng = StdRng::seed_from_u64(seed);
        let mut best = u32::MAX;
        for _ in 0..budget {
            let (a, b) = (code.random_word(&mut rng), code.random_word(&mut rng));
            if a != b {
                best = best.min(a.distance(&b));
            }
        }
        notes.push(format!("min distance: sampled over {budget} pairs"));
        (best, BTreeMap::new())
    };
    CodeStats {
        n: code.len(),
        size: code.size(),
        rank: rank(code),
        kernel_size,
        min_distance,
        is_perfect: perfect.perfect,
        weight_distribution,
        method_notes: notes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triple(s: &[usize]) -> Word {
        Word::from_support(7, s)
    }

    #[test]
    fn span_of_paper_generators_has_16_words() {
        let c = span(
            7,
            &[triple(&[1, 2, 3]), triple(&[1, 4, 5]), triple(&[1, 6, 7]), triple(&[2, 4, 6])],
        )
        .unwrap();
        assert_eq!(c.size(), 16);
    }

    #[test]
    fn empty_span_is_zero_code() {
        let c = span(7, &[]).unwrap();
        assert_eq!(c.size(), 1);
        assert!(c.contains(&Word::zero(7)));
    }

    #[test]
    fn three_generator_span_weight_distribution() {
        let c = span(7, &[triple(&[1, 2, 3]), triple(&[1, 4, 5]), triple(&[1, 6, 7])]).unwrap();
        assert_eq!(c.size(), 8);
        let s = stats(&c, 10, 0);
        let expected: BTreeMap<u32, u64> = [(0, 1), (3, 3), (4, 3), (7, 1)].into();
        assert_eq!(s.weight_distribution, expected);
    }

    #[test]
    fn mixed_lengths_rejected() {
        let err = span(7, &[triple(&[1, 2, 3]), Word::from_support(8, &[1, 2, 3])]);
        assert!(matches!(err, Err(Error::LengthMismatch { .. })));
    }

    #[test]
    fn hamming7_matches_paper_presentation() {
        let std7 = hamming(7).unwrap();
        let paper = hamming7_paper();
        assert_eq!(std7.size(), 16);
        assert!(std7.same_set(&paper));
        let s = stats(&paper, 10, 0);
        assert_eq!(s.rank, 4);
        assert_eq!(s.min_distance, 3);
        let expected: BTreeMap<u32, u64> = [(0, 1), (3, 7), (4, 7), (7, 1)].into();
        assert_eq!(s.weight_distribution, expected);
    }

    #[test]
    fn hamming15_shape() {
        let h = hamming(15).unwrap();
        assert_eq!(h.size(), 2048);
        assert_eq!(rank(&h), 11);
        assert!(is_perfect(&h));
    }

    #[test]
    fn hamming_rejects_bad_length() {
        assert!(hamming(6).is_err());
        assert!(hamming(9).is_err());
    }

    #[test]
    fn kernel_of_linear_code_is_whole_code() {
        let h = hamming7_paper();
        let k = kernel_brute(&h);
        assert_eq!(k.size(), 16);
        assert!(k.same_set(&h));
    }

    #[test]
    fn perfectness_examples() {
        assert!(is_perfect(&hamming7_paper()));
        let r17 = span(7, &[triple(&[1, 2, 3]), triple(&[1, 4, 5]), triple(&[1, 6, 7])]).unwrap();
        assert!(!is_perfect(&r17)); // 8 words ≠ 16
    }

    #[test]
    fn coset_representative_counts() {
        let h = hamming7_paper();
        assert_eq!(coset_representatives(&h, &h).unwrap(), vec![Word::zero(7)]);
        let r17 = Code::linear(7, &[triple(&[1, 2, 3]), triple(&[1, 4, 5]), triple(&[1, 6, 7])])
            .unwrap();
        assert_eq!(coset_representatives(&h, &r17).unwrap().len(), 2);
    }

    #[test]
    fn subcode_containment_enforced() {
        let h = hamming7_paper();
        let not_sub = Code::linear(7, &[Word::from_support(7, &[1, 2])]).unwrap();
        assert!(matches!(
            coset_representatives(&h, &not_sub),
            Err(Error::SubcodeNotContained)
        ));
    }

    #[test]
    fn explicit_membership_round_trip() {
        let h = hamming7_paper();
        let e = Code::explicit(7, h.iter_words().collect()).unwrap();
        for w in Word::all(7) {
            assert_eq!(e.contains(&w), h.contains(&w));
        }
    }

    #[test]
    fn kernel_properties_on_length7() {
        let h = hamming7_paper();
        let k = kernel(&h);
        // closed under addition and k + C = C elementwise
        let kw: Vec<Word> = k.iter_words().collect();
        for a in &kw {
            for b in &kw {
                assert!(k.contains(&(*a + *b)));
            }
            for c in h.iter_words() {
                assert!(h.contains(&(*a + c)));
            }
        }
    }

    #[test]
    fn linearity_iff_full_kernel() {
        let h = hamming7_paper();
        assert!(h.is_linear());
        assert_eq!(kernel(&h).size(), h.size());
        assert_eq!(rank(&h) as u64, h.size().ilog2() as u64);
    }

    #[test]
    fn explicit_rejects_duplicates_and_missing_zero() {
        let w = Word::from_support(3, &[1]);
        assert!(matches!(
            Code::explicit(3, vec![Word::zero(3), w, w]),
            Err(Error::DuplicateWord)
        ));
        assert!(matches!(Code::explicit(3, vec![w]), Err(Error::MissingZeroWord)));
    }

    #[test]
    fn gf2_basis_reduce_is_canonical() {
        let mut b = Gf2Basis::new();
        b.add(0b1100);
        b.add(0b0110);
        assert_eq!(b.rank(), 2);
        // Same coset → same representative.
        assert_eq!(b.reduce(0b1010), b.reduce(0b1010 ^ 0b1100));
        assert!(b.contains(0b1010 ^ b.reduce(0b1010)));
    }
}
