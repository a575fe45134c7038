//! Free-group word algebra over a finite symmetric alphabet.
//!
//! A [`Word`] is always kept freely reduced; every constructor and operation
//! re-establishes the invariant, so equality of `Word` values is equality in
//! the free group.

use std::cmp::Ordering;
use std::collections::HashMap;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WordError {
    #[error("unknown token `{0}`")]
    UnknownToken(String),
    #[error("malformed power in token `{0}`")]
    MalformedPower(String),
    #[error("alphabet mismatch: rank {0} vs rank {1}")]
    AlphabetMismatch(usize, usize),
    #[error("word is not cyclically reduced")]
    NotCyclicallyReduced,
    #[error("invalid generator name `{0}`")]
    BadName(String),
}

/// One signed generator occurrence.
///
/// The derived order is the shortlex letter order `a1 < a1⁻¹ < a2 < … `
/// (generator index first, positive before inverse).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    gen: u16,
    inv: bool,
}

impl Letter {
    pub fn new(gen: usize, inv: bool) -> Self {
        Letter {
            gen: u16::try_from(gen).expect("generator index fits u16"),
            inv,
        }
    }

    pub fn gen_index(self) -> usize {
        self.gen as usize
    }

    pub fn is_inverse(self) -> bool {
        self.inv
    }

    pub fn inverse(self) -> Self {
        Letter {
            gen: self.gen,
            inv: !self.inv,
        }
    }

    /// Dense code in `0..2*rank`, used for hashing and matching.
    pub(crate) fn code(self) -> u64 {
        self.gen as u64 * 2 + self.inv as u64
    }
}

/// Exponent-sum vector of a word, one entry per generator.
///
/// Additive under concatenation, so distinct vectors certify distinct group
/// elements whenever all relators abelianize to zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbelianVec(Vec<i64>);

impl AbelianVec {
    pub fn zero(rank: usize) -> Self {
        AbelianVec(vec![0; rank])
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn l1_norm(&self) -> u64 {
        self.0.iter().map(|c| c.unsigned_abs()).sum()
    }

    pub fn add(&self, other: &AbelianVec) -> AbelianVec {
        assert_eq!(self.0.len(), other.0.len());
        AbelianVec(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

/// A freely reduced word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    rank: usize,
    letters: Vec<Letter>,
}

fn push_reduced(letters: &mut Vec<Letter>, l: Letter) {
    match letters.last() {
        Some(&last) if last == l.inverse() => {
            letters.pop();
        }
        _ => letters.push(l),
    }
}

impl Word {
    /// The empty word (group identity) over an alphabet of `rank` generators.
    pub fn identity(rank: usize) -> Self {
        Word {
            rank,
            letters: Vec::new(),
        }
    }

    /// Builds a word from raw letters, freely reducing as needed.
    pub fn from_letters(rank: usize, raw: impl IntoIterator<Item = Letter>) -> Self {
        let mut letters = Vec::new();
        for l in raw {
            assert!(l.gen_index() < rank, "letter outside alphabet");
            push_reduced(&mut letters, l);
        }
        Word { rank, letters }
    }

    pub fn letter(rank: usize, gen: usize, inv: bool) -> Self {
        Word::from_letters(rank, [Letter::new(gen, inv)])
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

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// Free reduction of the juxtaposition `self · other`.
    pub fn concat(&self, other: &Word) -> Result<Word, WordError> {
        if self.rank != other.rank {
            return Err(WordError::AlphabetMismatch(self.rank, other.rank));
        }
        let mut letters = self.letters.clone();
        for &l in &other.letters {
            push_reduced(&mut letters, l);
        }
        Ok(Word {
            rank: self.rank,
            letters,
        })
    }

    /// `self · other` for words known to share an alphabet.
    pub(crate) fn mul(&self, other: &Word) -> Word {
        self.concat(other).expect("same alphabet")
    }

    /// Reversed sequence with all signs flipped; `w · w⁻¹` reduces to empty.
    pub fn invert(&self) -> Word {
        Word {
            rank: self.rank,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.invert() } else { self.clone() };
        let mut out = Word::identity(self.rank);
        for _ in 0..k.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        match (self.letters.first(), self.letters.last()) {
            (Some(&f), Some(&l)) => f != l.inverse(),
            _ => true,
        }
    }

    /// Splits `w = c · core · c⁻¹` with `core` cyclically reduced.
    ///
    /// Returns `(core, conjugator)`.
    pub fn cyclic_reduce(&self) -> (Word, Word) {
        let mut lo = 0usize;
        let mut hi = self.letters.len();
        while hi - lo >= 2 && self.letters[lo] == self.letters[hi - 1].inverse() {
            lo += 1;
            hi -= 1;
        }
        let core = Word {
            rank: self.rank,
            letters: self.letters[lo..hi].to_vec(),
        };
        let conj = Word {
            rank: self.rank,
            letters: self.letters[..lo].to_vec(),
        };
        (core, conj)
    }

    /// Rotation `w[p..] · w[..p]` of a cyclically reduced word.
    pub(crate) fn rotated(&self, p: usize) -> Word {
        let n = self.letters.len();
        if n == 0 {
            return self.clone();
        }
        let p = p % n;
        let mut letters = Vec::with_capacity(n);
        letters.extend_from_slice(&self.letters[p..]);
        letters.extend_from_slice(&self.letters[..p]);
        Word {
            rank: self.rank,
            letters,
        }
    }

    /// All `|w|` rotations of a cyclically reduced word (just `w` itself when empty).
    pub fn cyclic_permutations(&self) -> Result<Vec<Word>, WordError> {
        if !self.is_cyclically_reduced() {
            return Err(WordError::NotCyclicallyReduced);
        }
        if self.is_empty() {
            return Ok(vec![self.clone()]);
        }
        Ok((0..self.len()).map(|p| self.rotated(p)).collect())
    }

    pub fn abelianize(&self) -> AbelianVec {
        let mut v = vec![0i64; self.rank];
        for l in &self.letters {
            v[l.gen_index()] += if l.is_inverse() { -1 } else { 1 };
        }
        AbelianVec(v)
    }

    /// Length first, then lexicographic on letters.
    pub fn shortlex_cmp(&self, other: &Word) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

/// Named generators for parsing and printing; words themselves carry only the rank.
#[derive(Debug, Clone)]
pub struct Alphabet {
    names: Vec<String>,
    lookup: HashMap<String, usize>,
}

impl Alphabet {
    pub fn new(names: Vec<String>) -> Result<Self, WordError> {
        let mut lookup = HashMap::new();
        for (i, name) in names.iter().enumerate() {
            if name.is_empty()
                || name.contains(['-', '^'])
                || name.chars().any(char::is_whitespace)
                || name == "1"
            {
                return Err(WordError::BadName(name.clone()));
            }
            if lookup.insert(name.clone(), i).is_some() {
                return Err(WordError::BadName(name.clone()));
            }
        }
        Ok(Alphabet { names, lookup })
    }

    /// The eight generators `a1..a4, t1..t4` of the relator family's group.
    pub fn paper() -> Self {
        let names = ["a1", "a2", "a3", "a4", "t1", "t2", "t3", "t4"];
        Alphabet::new(names.iter().map(|s| s.to_string()).collect()).unwrap()
    }

    /// The genus-2 surface generators `b1..b4`.
    pub fn surface() -> Self {
        let names = ["b1", "b2", "b3", "b4"];
        Alphabet::new(names.iter().map(|s| s.to_string()).collect()).unwrap()
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, gen: usize) -> &str {
        &self.names[gen]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.lookup.get(name).copied()
    }

    /// Parses whitespace-separated tokens `name`, `name-`, optionally `^k`.
    ///
    /// `"1"` on its own denotes the empty word.
    pub fn parse_word(&self, text: &str) -> Result<Word, WordError> {
        let mut letters: Vec<Letter> = Vec::new();
        for token in text.split_whitespace() {
            if token == "1" {
                continue;
            }
            let (head, power) = match token.split_once('^') {
                Some((head, exp)) => {
                    let k: i64 = exp
                        .parse()
                        .map_err(|_| WordError::MalformedPower(token.to_string()))?;
                    (head, k)
                }
                None => (token, 1),
            };
            let (name, inv) = match head.strip_suffix('-') {
                Some(name) => (name, true),
                None => (head, false),
            };
            let gen = self
                .index_of(name)
                .ok_or_else(|| WordError::UnknownToken(token.to_string()))?;
            let letter = Letter::new(gen, inv != (power < 0));
            for _ in 0..power.unsigned_abs() {
                push_reduced(&mut letters, letter);
            }
        }
        Ok(Word {
            rank: self.rank(),
            letters,
        })
    }

    /// One token per letter; the empty word prints as `"1"`.
    pub fn format_word(&self, w: &Word) -> String {
        assert_eq!(w.rank(), self.rank(), "word over a different alphabet");
        if w.is_empty() {
            return "1".to_string();
        }
        let mut out = String::new();
        for (i, l) in w.letters().iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            out.push_str(self.name(l.gen_index()));
            if l.is_inverse() {
                out.push('-');
            }
        }
        out
    }
}
