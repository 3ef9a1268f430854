//! The Vasiliev construction and its λ machinery: the two named λ catalogs,
//! linear i-components, the recursive λ lift along the Hamming tower, the
//! piercing predicate, and the code-equivalence finder used by the
//! one-level reduction check.

use std::collections::HashMap;
use std::sync::Arc;

use rand::rngs::StdRng;
use rand::SeedableRng;

use crate::code::{self, Code};
use crate::perm::Permutation;
use crate::sts;
use crate::word::Word;
use crate::{Error, Result};

/// A boolean function on a base code's words with λ(0) = 0.
///
/// Explicit tables back the small bases; lifted functions evaluate by the
/// closed-form recursion λ_N((a, b, c)) = λ_{(N−1)/2}(a + c) and are never
/// materialized.
pub struct LambdaFn {
    base: Arc<Code>,
    values: LambdaValues,
}

enum LambdaValues {
    Zero,
    Table(HashMap<u64, bool>),
    Lifted(Arc<LambdaFn>),
}

impl LambdaFn {
    /// λ ≡ 0 on `base`.
    pub fn zero(base: Arc<Code>) -> Arc<LambdaFn> {
        Arc::new(LambdaFn { base, values: LambdaValues::Zero })
    }

    /// Explicit table; must cover the base exactly once and satisfy λ(0) = 0.
    pub fn from_table(base: Arc<Code>, entries: &[(Word, bool)]) -> Result<Arc<LambdaFn>> {
        let mut table = HashMap::with_capacity(entries.len());
        for (w, v) in entries {
            if w.len() != base.len() {
                return Err(Error::LengthMismatch { expected: base.len(), got: w.len() });
            }
            if !base.contains(w) {
                return Err(Error::LambdaDomain(format!(
                    "{} is not a base codeword",
                    w.to_bit_string()
                )));
            }
            if table.insert(w.bits(), *v).is_some() {
                return Err(Error::LambdaDomain(format!(
                    "duplicate entry for {}",
                    w.to_bit_string()
                )));
            }
        }
        if table.len() as u64 != base.size() {
            return Err(Error::LambdaDomain(format!(
                "table covers {} of {} base words",
                table.len(),
                base.size()
            )));
        }
        if table[&0] {
            return Err(Error::LambdaZero);
        }
        Ok(Arc::new(LambdaFn { base, values: LambdaValues::Table(table) }))
    }

    /// λ = 0 exactly on `zeros`, 1 on the rest of the base.
    pub fn from_zero_set(base: Arc<Code>, zeros: &[Word]) -> Result<Arc<LambdaFn>> {
        let entries: Vec<(Word, bool)> =
            base.iter_words().map(|w| (w, !zeros.contains(&w))).collect();
        LambdaFn::from_table(base, &entries)
    }

    /// λ restricted to a subcode of the base (used by kernel lifting).
    pub(crate) fn restriction(lambda: &Arc<LambdaFn>, sub: &Arc<Code>) -> Arc<LambdaFn> {
        if lambda.is_zero_fn() {
            return LambdaFn::zero(sub.clone());
        }
        let table = sub.iter_words().map(|w| (w.bits(), lambda.eval_in_base(&w))).collect();
        Arc::new(LambdaFn { base: sub.clone(), values: LambdaValues::Table(table) })
    }

    pub fn base(&self) -> &Arc<Code> {
        &self.base
    }

    pub fn is_zero_fn(&self) -> bool {
        matches!(self.values, LambdaValues::Zero)
    }

    pub fn is_lifted(&self) -> bool {
        matches!(self.values, LambdaValues::Lifted(_))
    }

    /// λ(w), or None when w is outside the base.
    pub fn eval(&self, w: &Word) -> Option<bool> {
        if w.len() != self.base.len() || !self.base.contains(w) {
            return None;
        }
        Some(self.eval_in_base(w))
    }

    /// λ(w) assuming w is a base codeword.
    pub fn eval_in_base(&self, w: &Word) -> bool {
        debug_assert!(self.base.contains(w));
        match &self.values {
            LambdaValues::Zero => false,
            LambdaValues::Table(t) => t[&w.bits()],
            LambdaValues::Lifted(inner) => {
                let (a, _, c) = w.split3();
                inner.eval_in_base(&(a + c))
            }
        }
    }

    /// Base words where λ = 0.
    pub fn zero_set(&self) -> Vec<Word> {
        self.base.iter_words().filter(|w| !self.eval_in_base(w)).collect()
    }
}

/// The two switching catalogs plus λ ≡ 0, all on the length-7 base code.
pub fn lambda_named(name: &str) -> Result<Arc<LambdaFn>> {
    let base = Arc::new(code::hamming7_paper());
    let zeros = |supports: &[&[usize]]| -> Vec<Word> {
        supports.iter().map(|s| Word::from_support(7, s)).collect()
    };
    match name {
        "zero" => Ok(LambdaFn::zero(base)),
        "V22_1" => LambdaFn::from_zero_set(
            base,
            &zeros(&[&[], &[1, 6, 7], &[1, 3, 5, 7], &[1, 2, 3, 4, 5, 6, 7]]),
        ),
        "V3_11" => LambdaFn::from_zero_set(
            base,
            &zeros(&[&[], &[1, 6, 7], &[2, 4, 6], &[4, 5, 6, 7]]),
        ),
        other => Err(Error::UnknownName(other.into())),
    }
}

/// Named code selectors used by the CLI and the reproduction suite.
pub fn named_code(name: &str) -> Result<Code> {
    match name {
        "hamming7_paper" => Ok(code::hamming7_paper()),
        "V22_1" | "V3_11" => {
            let lambda = lambda_named(name)?;
            let base = lambda.base().clone();
            vasiliev_construct(&base, &lambda)
        }
        other => Err(Error::UnknownName(other.into())),
    }
}

/// The length-(2n+1) code {(x+y, |x|+λ(y), x) : x ∈ F^n, y ∈ base}, backed
/// lazily by the membership rule.
pub fn vasiliev_construct(base: &Arc<Code>, lambda: &Arc<LambdaFn>) -> Result<Code> {
    let same_base = Arc::ptr_eq(base, lambda.base())
        || (base.len() == lambda.base().len()
            && base.size() == lambda.base().size()
            && base.size() <= 1 << 16
            && base.same_set(lambda.base()));
    if !same_base {
        return Err(Error::LambdaDomain("λ is not defined on the given base code".into()));
    }
    Ok(Code::vasiliev_backed(lambda.clone()))
}

/// A linear i-component: the span of the weight-3 codewords through a
/// coordinate.
pub struct Component {
    pub anchor: usize,
    pub words: Code,
}

impl Component {
    /// True when no weight-3 codeword passes through the anchor.
    pub fn is_trivial(&self) -> bool {
        self.words.size() == 1
    }
}

/// Weight-3 codewords; lazy codes are probed triple-by-triple through the
/// membership oracle instead of being enumerated.
pub fn weight3_words(code: &Code) -> Vec<Word> {
    let n = code.len();
    if code.size() <= 1 << 16 {
        code.iter_words().filter(|w| w.weight() == 3).collect()
    } else {
        let mut out = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                for k in j + 1..=n {
                    let w = Word::from_support(n, &[i, j, k]);
                    if code.contains(&w) {
                        out.push(w);
                    }
                }
            }
        }
        out
    }
}

/// Span of the code's weight-3 words whose support contains `i`.
pub fn i_component(code: &Code, i: usize) -> Result<Component> {
    let n = code.len();
    if i < 1 || i > n {
        return Err(Error::CoordinateOutOfRange(i, n));
    }
    let gens: Vec<Word> = weight3_words(code).into_iter().filter(|w| w.get(i)).collect();
    Ok(Component { anchor: i, words: Code::linear(n, &gens)? })
}

/// R_{n+1}^{2n+1} = {(x, |x|, x) : x ∈ F^n}, the (n+1)-component of every
/// Vasiliev code over a length-n base.
pub fn full_parity_component(n: usize) -> Component {
    let gens: Vec<Word> = (1..=n)
        .map(|i| {
            let e = Word::singleton(n, i);
            Word::concat3(e, true, e)
        })
        .collect();
    Component {
        anchor: n + 1,
        words: Code::linear(2 * n + 1, &gens).expect("generators are well formed"),
    }
}

/// Lifts λ along the Hamming tower H^{2m+1} := vasiliev(H^m, λ≡0), one
/// doubling per level. The result on a word v = (a, b, c) of length N is
/// λ_{(N−1)/2}(a + c), i.e. λ is constant on cosets of the middle
/// component.
pub fn lambda_lift(lambda: &Arc<LambdaFn>, levels: u32) -> Result<Arc<LambdaFn>> {
    if levels == 0 {
        return Err(Error::MalformedTower("lift needs at least one level".into()));
    }
    let base = lambda.base();
    let well_formed = (base.len() + 1).is_power_of_two()
        && base.is_linear()
        && code::is_perfect(base);
    if !well_formed {
        return Err(Error::MalformedTower(format!(
            "λ's base (length {}) is not a Hamming code",
            base.len()
        )));
    }
    let mut cur = lambda.clone();
    for _ in 0..levels {
        let tower = Arc::new(Code::vasiliev_backed(LambdaFn::zero(cur.base().clone())));
        cur = Arc::new(LambdaFn { base: tower, values: LambdaValues::Lifted(cur) });
    }
    Ok(cur)
}

/// True iff λ takes both values on the component's words. Streams the
/// component span with early exit; a trivial component is never piercing.
pub fn is_piercing(lambda: &LambdaFn, comp: &Component) -> Result<bool> {
    let base = lambda.base();
    if comp.words.len() != base.len() {
        return Err(Error::ComponentNotInBase);
    }
    let mut seen = [false, false];
    for w in comp.words.iter_words() {
        if !base.contains(&w) {
            return Err(Error::ComponentNotInBase);
        }
        seen[lambda.eval_in_base(&w) as usize] = true;
        if seen[0] && seen[1] {
            return Ok(true);
        }
    }
    Ok(false)
}

/// True iff λ(y + y') = λ(y) + λ(y') for all base pairs. The base must be
/// linear for the sums to stay in the domain.
pub fn is_linear_lambda(lambda: &LambdaFn) -> Result<bool> {
    if lambda.is_zero_fn() {
        return Ok(true);
    }
    let base = lambda.base();
    if !base.is_linear() {
        return Err(Error::NotLinear("λ-linearity needs a linear base"));
    }
    let words: Vec<Word> = base.iter_words().collect();
    let vals: Vec<bool> = words.iter().map(|w| lambda.eval_in_base(w)).collect();
    for (i, y) in words.iter().enumerate() {
        for (j, yp) in words.iter().enumerate() {
            if lambda.eval_in_base(&(*y + *yp)) != (vals[i] ^ vals[j]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Exact zero/one counts of λ over its base.
pub fn lambda_balance(lambda: &LambdaFn) -> (u64, u64) {
    let mut zeros = 0;
    let mut ones = 0;
    for w in lambda.base().iter_words() {
        if lambda.eval_in_base(&w) {
            ones += 1;
        } else {
            zeros += 1;
        }
    }
    (zeros, ones)
}

/// The permutation printed for the one-level reduction, composed of the
/// 3-cycles (n+i, 3n+2+i, 2n+2+i) for i = 0..n on 4n+3 points. The cycles
/// overlap as printed, so both composition orders are candidates rather
/// than a single disjoint-cycle product.
pub fn printed_phi(n: usize) -> Vec<Permutation> {
    let degree = 4 * n + 3;
    let cycle = |a: usize, b: usize, c: usize| -> Permutation {
        let mut images: Vec<usize> = (1..=degree).collect();
        images[a - 1] = b;
        images[b - 1] = c;
        images[c - 1] = a;
        Permutation::from_images(&images).expect("3-cycle is bijective")
    };
    let cycles: Vec<Permutation> =
        (0..=n).map(|i| cycle(n + i, 3 * n + 2 + i, 2 * n + 2 + i)).collect();
    let left_first = cycles
        .iter()
        .fold(Permutation::identity(degree), |acc, c| c.compose(&acc));
    let right_first = cycles
        .iter()
        .fold(Permutation::identity(degree), |acc, c| acc.compose(c));
    vec![left_first.clone(), right_first.clone(), left_first.inverse(), right_first.inverse()]
}

/// Outcome of the equivalence search between two codes.
#[derive(Clone, Debug)]
pub struct EquivalenceReport {
    pub equal_sets: bool,
    pub printed_phi_works: bool,
    pub witness: Option<Permutation>,
    pub candidates_tried: u64,
    pub note: String,
}

fn maps_onto(perm: &Permutation, a: &Code, b: &Code, spot: &[Word]) -> bool {
    if !spot.iter().all(|w| b.contains(&perm.apply_word(w))) {
        return false;
    }
    a.iter_words().all(|w| b.contains(&perm.apply_word(&w)))
}

/// Searches for a coordinate permutation with π(a) = b: set equality first,
/// then the printed cycle product, then isomorphisms of the neighborhood
/// systems at zero (candidates are spot-checked on sampled codewords before
/// the full streaming verification).
pub fn find_equivalence(a: &Code, b: &Code, budget: u64, seed: u64) -> Result<EquivalenceReport> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch { expected: a.len(), got: b.len() });
    }
    if a.size() != b.size() {
        return Ok(EquivalenceReport {
            equal_sets: false,
            printed_phi_works: false,
            witness: None,
            candidates_tried: 0,
            note: "sizes differ; no equivalence exists".into(),
        });
    }
    let n = a.len();
    if a.iter_words().all(|w| b.contains(&w)) {
        return Ok(EquivalenceReport {
            equal_sets: true,
            printed_phi_works: false,
            witness: Some(Permutation::identity(n)),
            candidates_tried: 0,
            note: "codes are equal as sets".into(),
        });
    }

    let mut rng = StdRng::seed_from_u64(seed);
    let spot: Vec<Word> = (0..64).map(|_| a.random_word(&mut rng)).collect();

    let mut printed_phi_works = false;
    if n >= 7 && (n - 3) % 4 == 0 {
        for phi in printed_phi((n - 3) / 4) {
            if maps_onto(&phi, a, b, &spot) {
                printed_phi_works = true;
                return Ok(EquivalenceReport {
                    equal_sets: false,
                    printed_phi_works,
                    witness: Some(phi),
                    candidates_tried: 0,
                    note: "printed cycle product maps the codes".into(),
                });
            }
        }
    }

    let sts_a = sts::neighborhood_sts(a, &Word::zero(n))?;
    let sts_b = sts::neighborhood_sts(b, &Word::zero(n))?;
    let mut tried = 0u64;
    let mut witness = None;
    sts::for_each_isomorphism(&sts_a, &sts_b, |perm| {
        tried += 1;
        if maps_onto(perm, a, b, &spot) {
            witness = Some(perm.clone());
            return true;
        }
        tried < budget
    });
    let note = match &witness {
        Some(_) => format!("witness found after {tried} neighborhood-system isomorphisms"),
        None => format!("no witness within budget ({tried} candidates tried)"),
    };
    Ok(EquivalenceReport {
        equal_sets: false,
        printed_phi_works,
        witness,
        candidates_tried: tried,
        note,
    })
}
