//! File formats: codes (`n=` header plus 0/1 lines), λ tables (`base=`
//! header plus word/bit lines), triple systems (`order=` header plus
//! `i j k` lines), θ tables, and permutations.

use std::fs;
use std::path::Path;
use std::sync::Arc;

use crate::code::{hamming7_paper, Code};
use crate::perm::Permutation;
use crate::sts::{SteinerTripleSystem, ThetaFn, Triple};
use crate::vasiliev::LambdaFn;
use crate::word::Word;
use crate::{Error, Result};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn header_value<'a>(line: &'a str, key: &str, lineno: usize) -> Result<&'a str> {
    line.strip_prefix(key)
        .and_then(|rest| rest.strip_prefix('='))
        .map(str::trim)
        .ok_or_else(|| parse_err(lineno, format!("expected `{key}=<value>` header")))
}

/// Serializes a code: `n=<len>` then one sorted 0/1 line per word.
pub fn code_to_string(code: &Code) -> String {
    let mut lines: Vec<String> = code.iter_words().map(|w| w.to_bit_string()).collect();
    lines.sort_unstable();
    let mut out = format!("n={}\n", code.len());
    for l in &lines {
        out.push_str(l);
        out.push('\n');
    }
    out
}

/// Parses a code file; any line order is accepted, duplicate and
/// wrong-length lines are rejected.
pub fn code_from_string(text: &str) -> Result<Code> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines.next().ok_or_else(|| parse_err(1, "empty file"))?;
    let n: usize = header_value(header, "n", 1)?
        .parse()
        .map_err(|_| parse_err(1, "bad length in header"))?;
    let mut words = Vec::new();
    for (idx, line) in lines {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if line.len() != n {
            return Err(parse_err(idx + 1, format!("expected {n} characters, got {}", line.len())));
        }
        let w = Word::from_bit_string(line)
            .map_err(|e| parse_err(idx + 1, e.to_string()))?;
        words.push(w);
    }
    Code::explicit(n, words)
}

pub fn write_code(path: &Path, code: &Code) -> Result<()> {
    fs::write(path, code_to_string(code))?;
    Ok(())
}

pub fn read_code(path: &Path) -> Result<Code> {
    code_from_string(&fs::read_to_string(path)?)
}

/// Serializes λ with its base reference (a path or the named base).
pub fn lambda_to_string(lambda: &LambdaFn, base_ref: &str) -> String {
    let mut lines: Vec<String> = lambda
        .base()
        .iter_words()
        .map(|w| format!("{} {}", w.to_bit_string(), lambda.eval_in_base(&w) as u8))
        .collect();
    lines.sort_unstable();
    let mut out = format!("base={base_ref}\n");
    for l in &lines {
        out.push_str(l);
        out.push('\n');
    }
    out
}

/// Parses a λ file. The `base=` header is either the literal
/// `hamming7_paper` or a code-file path, resolved against `dir` when
/// relative. Domain coverage and λ(0) = 0 are enforced on load.
pub fn lambda_from_string(text: &str, dir: Option<&Path>) -> Result<Arc<LambdaFn>> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines.next().ok_or_else(|| parse_err(1, "empty file"))?;
    let base_ref = header_value(header, "base", 1)?;
    let base = if base_ref == "hamming7_paper" {
        hamming7_paper()
    } else {
        let p = Path::new(base_ref);
        let resolved = if p.is_relative() {
            dir.map(|d| d.join(p)).filter(|joined| joined.exists()).unwrap_or_else(|| p.to_path_buf())
        } else {
            p.to_path_buf()
        };
        read_code(&resolved)?
    };
    let base = Arc::new(base);
    let mut entries = Vec::new();
    for (idx, line) in lines {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let (ws, bs) = line
            .split_once(' ')
            .ok_or_else(|| parse_err(idx + 1, "expected `<word> <bit>`"))?;
        let w = Word::from_bit_string(ws.trim()).map_err(|e| parse_err(idx + 1, e.to_string()))?;
        let b = match bs.trim() {
            "0" => false,
            "1" => true,
            other => return Err(parse_err(idx + 1, format!("bad bit {other:?}"))),
        };
        entries.push((w, b));
    }
    LambdaFn::from_table(base, &entries)
}

pub fn write_lambda(path: &Path, lambda: &LambdaFn, base_ref: &str) -> Result<()> {
    fs::write(path, lambda_to_string(lambda, base_ref))?;
    Ok(())
}

pub fn read_lambda(path: &Path) -> Result<Arc<LambdaFn>> {
    lambda_from_string(&fs::read_to_string(path)?, path.parent())
}

pub fn sts_to_string(s: &SteinerTripleSystem) -> String {
    let mut out = format!("order={}\n", s.order());
    for t in s.triples() {
        let [a, b, c] = t.points();
        out.push_str(&format!("{a} {b} {c}\n"));
    }
    out
}

pub fn sts_from_string(text: &str) -> Result<SteinerTripleSystem> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines.next().ok_or_else(|| parse_err(1, "empty file"))?;
    let order: usize = header_value(header, "order", 1)?
        .parse()
        .map_err(|_| parse_err(1, "bad order in header"))?;
    let mut triples = Vec::new();
    for (idx, line) in lines {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let nums: Vec<usize> = line
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| parse_err(idx + 1, format!("bad point {t:?}"))))
            .collect::<Result<_>>()?;
        if nums.len() != 3 {
            return Err(parse_err(idx + 1, "expected three points"));
        }
        triples.push(
            Triple::new(nums[0], nums[1], nums[2]).map_err(|e| parse_err(idx + 1, e.to_string()))?,
        );
    }
    SteinerTripleSystem::new(order, triples)
}

pub fn write_sts(path: &Path, s: &SteinerTripleSystem) -> Result<()> {
    fs::write(path, sts_to_string(s))?;
    Ok(())
}

pub fn read_sts(path: &Path) -> Result<SteinerTripleSystem> {
    sts_from_string(&fs::read_to_string(path)?)
}

/// θ file lines are `i j k <bit>`; the triples must cover the base system.
pub fn theta_from_string(text: &str, base: Arc<SteinerTripleSystem>) -> Result<ThetaFn> {
    let mut entries = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 4 {
            return Err(parse_err(idx + 1, "expected `i j k <bit>`"));
        }
        let nums: Vec<usize> = toks[..3]
            .iter()
            .map(|t| t.parse().map_err(|_| parse_err(idx + 1, format!("bad point {t:?}"))))
            .collect::<Result<_>>()?;
        let bit = match toks[3] {
            "0" => false,
            "1" => true,
            other => return Err(parse_err(idx + 1, format!("bad bit {other:?}"))),
        };
        entries.push((
            Triple::new(nums[0], nums[1], nums[2]).map_err(|e| parse_err(idx + 1, e.to_string()))?,
            bit,
        ));
    }
    ThetaFn::from_entries(base, &entries)
}

pub fn read_theta(path: &Path, base: Arc<SteinerTripleSystem>) -> Result<ThetaFn> {
    theta_from_string(&fs::read_to_string(path)?, base)
}

pub fn permutation_to_string(p: &Permutation) -> String {
    let images: Vec<String> = p.images().iter().map(|i| i.to_string()).collect();
    format!("degree={}\n{}\n", p.degree(), images.join(" "))
}

pub fn permutation_from_string(text: &str) -> Result<Permutation> {
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| parse_err(1, "empty file"))?;
    let degree: usize = header_value(header, "degree", 1)?
        .parse()
        .map_err(|_| parse_err(1, "bad degree in header"))?;
    let body = lines.next().ok_or_else(|| parse_err(2, "missing image line"))?;
    let images: Vec<usize> = body
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| parse_err(2, format!("bad image {t:?}"))))
        .collect::<Result<_>>()?;
    if images.len() != degree {
        return Err(parse_err(2, format!("expected {degree} images, got {}", images.len())));
    }
    Permutation::from_images(&images)
}

pub fn write_permutation(path: &Path, p: &Permutation) -> Result<()> {
    fs::write(path, permutation_to_string(p))?;
    Ok(())
}

pub fn read_permutation(path: &Path) -> Result<Permutation> {
    permutation_from_string(&fs::read_to_string(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vasiliev::{lambda_named, named_code};
    use proptest::prelude::*;

    #[test]
    fn code_round_trip_and_rejections() {
        let h = hamming7_paper();
        let text = code_to_string(&h);
        assert!(text.starts_with("n=7\n"));
        let back = code_from_string(&text).unwrap();
        assert!(back.same_set(&h));

        // Reader accepts shuffled lines.
        let mut lines: Vec<&str> = text.lines().collect();
        lines[1..].reverse();
        let shuffled = lines.join("\n");
        assert!(code_from_string(&shuffled).unwrap().same_set(&h));

        // Duplicates and wrong lengths are rejected.
        let dup = format!("{text}0000000\n");
        assert!(code_from_string(&dup).is_err());
        let bad_len = "n=7\n000\n";
        assert!(code_from_string(bad_len).is_err());
    }

    #[test]
    fn lambda_round_trip() {
        let l = lambda_named("V22_1").unwrap();
        let text = lambda_to_string(&l, "hamming7_paper");
        let back = lambda_from_string(&text, None).unwrap();
        for y in l.base().iter_words() {
            assert_eq!(back.eval(&y), l.eval(&y));
        }
        // λ(0) = 1 is rejected on load.
        let corrupted = text.replace("0000000 0", "0000000 1");
        assert!(lambda_from_string(&corrupted, None).is_err());
    }

    #[test]
    fn sts_round_trip() {
        let v = named_code("V22_1").unwrap();
        let s = crate::sts::neighborhood_sts(&v, &Word::zero(15)).unwrap();
        let back = sts_from_string(&sts_to_string(&s)).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn permutation_round_trip() {
        let p = Permutation::from_images(&[3, 1, 2, 5, 4]).unwrap();
        let back = permutation_from_string(&permutation_to_string(&p)).unwrap();
        assert_eq!(back, p);
        assert!(permutation_from_string("degree=3\n1 1 2\n").is_err());
    }

    proptest! {
        #[test]
        fn arbitrary_linear_codes_round_trip(gens in proptest::collection::vec(0u64..128, 0..4)) {
            let words: Vec<Word> = gens.iter().map(|&g| Word::from_bits(7, g)).collect();
            let c = crate::code::span(7, &words).unwrap();
            let back = code_from_string(&code_to_string(&c)).unwrap();
            prop_assert!(back.same_set(&c));
        }
    }
}
