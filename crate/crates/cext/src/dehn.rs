//! Greendlinger-based Dehn algorithm for metric small-cancellation
//! presentations.
//!
//! A reduction step finds a cyclic subword of `w` that is more than 4/7 of a
//! cyclic permutation of some relator `r_i^{±1}` and swaps it for the shorter
//! complement. Iterating decides the word problem, and unwinding the steps
//! yields an area certificate: a factorization of `w` into conjugated
//! relators with weight `Σ (2·i_l + 1) ≤ |w|`. Summing a coefficient sequence
//! over the certificate gives the integer lift of a trivial word.

use std::collections::{HashMap, HashSet};
use std::sync::{Arc, Mutex};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::extensions::SlowClass;
use crate::presentations::{PresError, Presentation};
use crate::words::{Letter, Word, WordError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DehnError {
    #[error("word does not represent the identity")]
    NotTrivial,
    #[error("lift value overflowed 64-bit integers")]
    LiftOverflow,
    #[error(transparent)]
    Pres(#[from] PresError),
    #[error(transparent)]
    Word(#[from] WordError),
}

/// One conjugated-relator factor of an area certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertFactor {
    pub conjugator: Word,
    pub index: usize,
    pub sign: i8,
}

/// A decomposition `w = Π conjugator · r_index^sign · conjugator⁻¹` in the
/// free group, with the weight `Σ (2·index + 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AreaCertificate {
    pub word: Word,
    pub factors: Vec<CertFactor>,
    pub weight: u64,
}

impl AreaCertificate {
    pub fn recomputed_weight(&self) -> u64 {
        self.factors.iter().map(|f| 2 * f.index as u64 + 1).sum()
    }
}

/// A Greendlinger match: `span` letters starting at cyclic position
/// `word_shift` of `w` equal the relator `r_index^sign` read cyclically from
/// `relator_shift`, with `7·span > 4·|r_index|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GreendlingerMatch {
    pub relator_index: usize,
    pub sign: i8,
    pub word_shift: usize,
    pub relator_shift: usize,
    pub span: usize,
    pub replacement_len: usize,
}

#[derive(Debug, Clone)]
pub struct TraceStep {
    pub before: Word,
    pub matched: GreendlingerMatch,
    pub after: Word,
}

/// The reduction history of one word; `steps` strictly decrease word length.
#[derive(Debug, Clone)]
pub struct ReductionTrace {
    pub steps: Vec<TraceStep>,
    pub trivial: bool,
    /// Irreducible residue; empty exactly when `trivial`.
    pub residue: Word,
}

/// Tie-breaking policy when several Greendlinger matches exist.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TieBreak {
    /// Smallest replacement, then lowest relator index, then leftmost
    /// position; fully deterministic.
    Deterministic,
    /// Uniform choice among all matches, for well-definedness tests.
    Randomized,
}

const HMOD: u64 = (1 << 61) - 1;
const HBASE: [u64; 2] = [131, 1_000_000_007];

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % HMOD as u128) as u64
}

fn powmod(b: u64, mut e: u64) -> u64 {
    let mut base = b % HMOD;
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, base);
        }
        base = mulmod(base, base);
        e >>= 1;
    }
    acc
}

/// Prefix hashes of a code sequence for O(1) window hashing, two independent
/// bases; candidates are always verified letter-by-letter afterwards.
struct PrefixHash {
    h: [Vec<u64>; 2],
}

impl PrefixHash {
    fn new(codes: &[u64]) -> Self {
        let mut h = [vec![0u64], vec![0u64]];
        for b in 0..2 {
            let mut acc = 0u64;
            for &c in codes {
                acc = (mulmod(acc, HBASE[b]) + c) % HMOD;
                h[b].push(acc);
            }
        }
        PrefixHash { h }
    }

    fn window(&self, start: usize, len: usize, pow: [u64; 2]) -> u128 {
        let mut parts = [0u64; 2];
        for b in 0..2 {
            let hi = self.h[b][start + len];
            let lo = mulmod(self.h[b][start], pow[b]);
            parts[b] = (hi + HMOD - lo) % HMOD;
        }
        (parts[0] as u128) << 64 | parts[1] as u128
    }
}

fn codes_of(w: &Word) -> Vec<u64> {
    w.letters().iter().map(|l| l.code() + 1).collect()
}

fn doubled(codes: &[u64]) -> Vec<u64> {
    let mut d = codes.to_vec();
    d.extend_from_slice(codes);
    d
}

/// Per-relator matching tables: cyclic letter codes of `r^{±1}` and a hash
/// table of all threshold-length cyclic windows.
struct RelatorData {
    len: usize,
    /// Smallest span exceeding 4/7 of the relator: `floor(4L/7) + 1`.
    threshold: usize,
    codes: [Vec<u64>; 2],
    grams: HashMap<u128, Vec<(u8, u32)>>,
    pow_threshold: [u64; 2],
}

impl RelatorData {
    fn build(relator: &Word) -> Self {
        let len = relator.len();
        let threshold = 4 * len / 7 + 1;
        let codes = [codes_of(relator), codes_of(&relator.invert())];
        let pow_threshold = [
            powmod(HBASE[0], threshold as u64),
            powmod(HBASE[1], threshold as u64),
        ];
        let mut grams: HashMap<u128, Vec<(u8, u32)>> = HashMap::new();
        for (sign_idx, side) in codes.iter().enumerate() {
            let ph = PrefixHash::new(&doubled(side));
            for start in 0..len {
                let key = ph.window(start, threshold, pow_threshold);
                grams.entry(key).or_default().push((sign_idx as u8, start as u32));
            }
        }
        RelatorData {
            len,
            threshold,
            codes,
            grams,
            pow_threshold,
        }
    }
}

/// Word-problem solver for one presentation, with a shared memo of
/// `is_trivial` answers keyed by the cyclically reduced core.
pub struct Solver {
    pres: Presentation,
    tie: TieBreak,
    relators: Mutex<HashMap<usize, Arc<RelatorData>>>,
    memo: Mutex<HashMap<Vec<Letter>, bool>>,
    rng: Mutex<ChaCha8Rng>,
}

impl Solver {
    pub fn new(pres: Presentation) -> Self {
        Solver {
            pres,
            tie: TieBreak::Deterministic,
            relators: Mutex::new(HashMap::new()),
            memo: Mutex::new(HashMap::new()),
            rng: Mutex::new(ChaCha8Rng::seed_from_u64(0)),
        }
    }

    /// Randomized tie-breaking; exists solely so that invariance of lift
    /// values under reduction strategy can be tested.
    pub fn with_randomized_ties(pres: Presentation, seed: u64) -> Self {
        Solver {
            pres,
            tie: TieBreak::Randomized,
            relators: Mutex::new(HashMap::new()),
            memo: Mutex::new(HashMap::new()),
            rng: Mutex::new(ChaCha8Rng::seed_from_u64(seed)),
        }
    }

    pub fn presentation(&self) -> &Presentation {
        &self.pres
    }

    fn relator_data(&self, i: usize) -> Result<Arc<RelatorData>, DehnError> {
        if let Some(d) = self.relators.lock().unwrap().get(&i) {
            return Ok(d.clone());
        }
        let data = Arc::new(RelatorData::build(&self.pres.relator(i)?));
        self.relators
            .lock()
            .unwrap()
            .entry(i)
            .or_insert(data.clone());
        Ok(data)
    }

    /// Relator indices whose Greendlinger fraction can fit inside a word of
    /// length `n`, i.e. `(4/7)·|r_i| ≤ n`.
    fn admissible_indices(&self, n: usize) -> Result<Vec<usize>, DehnError> {
        if let Some(truncation) = self.pres.truncation() {
            let bound = (7 * n).saturating_sub(32) / 64;
            if bound > truncation {
                return Err(PresError::TruncationExceeded(bound, truncation).into());
            }
            if 7 * n < 32 {
                return Ok(Vec::new());
            }
            Ok((0..=bound).collect())
        } else {
            let mut out = Vec::new();
            for i in 0..self.pres.relator_count() {
                if 4 * self.pres.relator_len(i)? <= 7 * n {
                    out.push(i);
                }
            }
            Ok(out)
        }
    }

    /// All maximal Greendlinger matches of cyclic subwords of `w` against
    /// cyclic permutations of admissible relators and their inverses.
    ///
    /// Requires `w` cyclically reduced.
    pub fn greendlinger_matches(&self, w: &Word) -> Result<Vec<GreendlingerMatch>, DehnError> {
        assert!(w.is_cyclically_reduced(), "input must be cyclically reduced");
        let n = w.len();
        if n == 0 {
            return Ok(Vec::new());
        }
        let w_codes = codes_of(w);
        let ph = PrefixHash::new(&doubled(&w_codes));
        let mut seen: HashSet<(usize, u8, usize, usize)> = HashSet::new();
        let mut out = Vec::new();
        for i in self.admissible_indices(n)? {
            let data = self.relator_data(i)?;
            let (m, rl) = (data.threshold, data.len);
            if m > n {
                continue;
            }
            let cap = n.min(rl);
            for s in 0..n {
                let key = ph.window(s, m, data.pow_threshold);
                let Some(entries) = data.grams.get(&key) else {
                    continue;
                };
                for &(sign_idx, rstart) in entries {
                    let side = &data.codes[sign_idx as usize];
                    let at_w = |t: usize| w_codes[t % n];
                    let at_r = |t: usize| side[t % rl];
                    if (0..m).any(|t| at_w(s + t) != at_r(rstart as usize + t)) {
                        continue;
                    }
                    // extend to the maximal common cyclic run
                    let mut ws = s;
                    let mut rs = rstart as usize;
                    let mut span = m;
                    while span < cap && at_w(ws + n - 1) == at_r(rs + rl - 1) {
                        ws = (ws + n - 1) % n;
                        rs = (rs + rl - 1) % rl;
                        span += 1;
                    }
                    while span < cap && at_w(ws + span) == at_r(rs + span) {
                        span += 1;
                    }
                    if !seen.insert((i, sign_idx, ws, rs)) {
                        continue;
                    }
                    out.push(GreendlingerMatch {
                        relator_index: i,
                        sign: if sign_idx == 0 { 1 } else { -1 },
                        word_shift: ws,
                        relator_shift: rs,
                        span,
                        replacement_len: n + rl - 2 * span,
                    });
                }
            }
        }
        Ok(out)
    }

    fn pick_match(&self, mut matches: Vec<GreendlingerMatch>) -> Option<GreendlingerMatch> {
        if matches.is_empty() {
            return None;
        }
        match self.tie {
            TieBreak::Deterministic => matches.into_iter().min_by_key(|m| {
                (
                    m.replacement_len,
                    m.relator_index,
                    m.word_shift,
                    m.sign < 0,
                    m.relator_shift,
                )
            }),
            TieBreak::Randomized => {
                let mut rng = self.rng.lock().unwrap();
                matches.shuffle(&mut *rng);
                matches.into_iter().next()
            }
        }
    }

    /// The reduction step the solver's tie-breaking policy would take, if any.
    ///
    /// Requires `w` cyclically reduced.
    pub fn greendlinger_step(&self, w: &Word) -> Result<Option<GreendlingerMatch>, DehnError> {
        Ok(self.pick_match(self.greendlinger_matches(w)?))
    }

    /// Applies a match: returns the rotation prefix `A`, the relator rotation
    /// prefix `D`, and the strictly shorter replacement word `v⁻¹u`.
    fn apply_match(
        &self,
        w: &Word,
        m: &GreendlingerMatch,
    ) -> Result<(Word, Word, Word), DehnError> {
        let rank = w.rank();
        let relator = self.pres.relator(m.relator_index)?;
        let signed = if m.sign > 0 { relator } else { relator.invert() };
        let rl = signed.len();
        let n = w.len();
        let a = Word::from_letters(rank, w.letters()[..m.word_shift].iter().copied());
        let d = Word::from_letters(
            rank,
            signed.letters()[..m.relator_shift].iter().copied(),
        );
        // rotated relator = w_0 · v, rotated word = w_0 · u
        let v = Word::from_letters(
            rank,
            (m.span..rl).map(|t| signed.letters()[(m.relator_shift + t) % rl]),
        );
        let u = Word::from_letters(
            rank,
            (m.span..n).map(|t| w.letters()[(m.word_shift + t) % n]),
        );
        let replacement = v.invert().mul(&u);
        debug_assert!(replacement.len() < n);
        Ok((a, d, replacement))
    }

    fn run_reduction(
        &self,
        w: &Word,
        want_trace: bool,
        want_factors: bool,
    ) -> Result<(ReductionTrace, Vec<CertFactor>), DehnError> {
        let mut steps = Vec::new();
        let mut factors = Vec::new();
        // outer conjugator accumulated from cyclic reductions and rotations
        let mut prefix = Word::identity(w.rank());
        let mut current = w.clone();
        loop {
            let (core, conj) = current.cyclic_reduce();
            if want_factors {
                prefix = prefix.mul(&conj);
            }
            current = core;
            if current.is_empty() {
                return Ok((
                    ReductionTrace {
                        steps,
                        trivial: true,
                        residue: current,
                    },
                    factors,
                ));
            }
            let Some(m) = self.pick_match(self.greendlinger_matches(&current)?) else {
                return Ok((
                    ReductionTrace {
                        steps,
                        trivial: false,
                        residue: current,
                    },
                    factors,
                ));
            };
            let (a, d, replacement) = self.apply_match(&current, &m)?;
            if want_factors {
                factors.push(CertFactor {
                    conjugator: prefix.mul(&a).mul(&d.invert()),
                    index: m.relator_index,
                    sign: m.sign,
                });
                prefix = prefix.mul(&a);
            }
            if want_trace {
                steps.push(TraceStep {
                    before: current.clone(),
                    matched: m,
                    after: replacement.clone(),
                });
            }
            current = replacement;
        }
    }

    /// Decides the word problem by running the Dehn algorithm to completion.
    pub fn is_trivial(&self, w: &Word) -> Result<bool, DehnError> {
        let (core, _) = w.cyclic_reduce();
        if core.is_empty() {
            return Ok(true);
        }
        let key = core.letters().to_vec();
        if let Some(&hit) = self.memo.lock().unwrap().get(&key) {
            return Ok(hit);
        }
        let (trace, _) = self.run_reduction(&core, false, false)?;
        self.memo.lock().unwrap().insert(key, trace.trivial);
        Ok(trace.trivial)
    }

    /// Word problem for a pair: do `u` and `v` represent the same element?
    pub fn are_equal(&self, u: &Word, v: &Word) -> Result<bool, DehnError> {
        self.is_trivial(&u.concat(&v.invert())?)
    }

    /// Full reduction history of `w`.
    pub fn reduce(&self, w: &Word) -> Result<ReductionTrace, DehnError> {
        Ok(self.run_reduction(w, true, false)?.0)
    }

    /// An area certificate for a trivial word, built by unwinding the Dehn
    /// reduction; its weight never exceeds `|w|`.
    pub fn area_certificate(&self, w: &Word) -> Result<AreaCertificate, DehnError> {
        let (trace, factors) = self.run_reduction(w, false, true)?;
        if !trace.trivial {
            return Err(DehnError::NotTrivial);
        }
        let cert = AreaCertificate {
            word: w.clone(),
            weight: factors.iter().map(|f| 2 * f.index as u64 + 1).sum(),
            factors,
        };
        debug_assert!(verify_certificate(w, &cert));
        Ok(cert)
    }

    /// The integer lift of a trivial word: `Σ sign_l · α(i_l)` over any area
    /// decomposition. Uses checked arithmetic; overflow is an error rather
    /// than a wrapped value.
    pub fn lift_value(&self, w: &Word, alpha: &SlowClass) -> Result<i64, DehnError> {
        let cert = self.area_certificate(w)?;
        lift_of_certificate(&cert, alpha)
    }
}

/// Sum of `sign · α(index)` over the factors of a certificate.
pub fn lift_of_certificate(
    cert: &AreaCertificate,
    alpha: &SlowClass,
) -> Result<i64, DehnError> {
    let mut acc: i64 = 0;
    for f in &cert.factors {
        let term = alpha
            .value(f.index)
            .checked_mul(f.sign as i64)
            .ok_or(DehnError::LiftOverflow)?;
        acc = acc.checked_add(term).ok_or(DehnError::LiftOverflow)?;
    }
    Ok(acc)
}

/// Certificate check: the free product of the factors must reduce to `w` and
/// the weight field must be consistent with the factor list.
pub fn verify_certificate(
    pres: &Presentation,
    w: &Word,
    cert: &AreaCertificate,
) -> Result<bool, DehnError> {
    if cert.word != *w || cert.weight != cert.recomputed_weight() {
        return Ok(false);
    }
    let mut acc = Word::identity(w.rank());
    for f in &cert.factors {
        if f.sign != 1 && f.sign != -1 {
            return Ok(false);
        }
        let r = pres.relator(f.index)?;
        let signed = if f.sign > 0 { r } else { r.invert() };
        let factor = f.conjugator.mul(&signed).mul(&f.conjugator.invert());
        acc = acc.mul(&factor);
    }
    Ok(acc == *w)
}

/// A random freely reduced word of exactly `len` letters.
pub fn random_reduced_word(rank: usize, len: usize, rng: &mut impl rand::Rng) -> Word {
    let mut letters: Vec<Letter> = Vec::with_capacity(len);
    while letters.len() < len {
        let l = Letter::new(rng.gen_range(0..rank), rng.gen_bool(0.5));
        if letters.last() == Some(&l.inverse()) {
            continue;
        }
        letters.push(l);
    }
    Word::from_letters(rank, letters)
}

/// A random element of the normal closure: a product of `factors` conjugated
/// relators with indices `≤ max_index` and conjugators of length
/// `≤ max_conj_len`.
pub fn random_normal_element(
    pres: &Presentation,
    rng: &mut impl rand::Rng,
    max_factors: usize,
    max_index: usize,
    max_conj_len: usize,
) -> Word {
    let k = rng.gen_range(1..=max_factors.max(1));
    let mut w = Word::identity(pres.rank());
    for _ in 0..k {
        let i = rng.gen_range(0..=max_index);
        let r = pres.relator(i).expect("index within truncation");
        let signed = if rng.gen_bool(0.5) { r } else { r.invert() };
        let conj = random_reduced_word(pres.rank(), rng.gen_range(0..=max_conj_len), rng);
        w = w.mul(&conj).mul(&signed).mul(&conj.invert());
    }
    w
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extensions::SlowClass;
    use crate::presentations::{paper_relator, RelatorForm};
    use crate::words::Alphabet;

    fn paper_solver() -> Solver {
        Solver::new(Presentation::paper_family(64, RelatorForm::Canonical))
    }

    fn r(i: usize) -> Word {
        paper_relator(i, RelatorForm::Canonical)
    }

    fn alpha_i() -> SlowClass {
        SlowClass::linear(1)
    }

    #[test]
    fn step_on_relator_matches_it_fully() {
        let s = paper_solver();
        let m = s.greendlinger_step(&r(0)).unwrap().unwrap();
        assert_eq!(m.relator_index, 0);
        assert!(m.replacement_len < 8);
        assert_eq!(m.replacement_len, 0);
    }

    #[test]
    fn step_on_single_letter_finds_nothing() {
        let s = paper_solver();
        let a = Alphabet::paper();
        let w = a.parse_word("a1").unwrap();
        assert_eq!(s.greendlinger_step(&w).unwrap(), None);
    }

    #[test]
    fn step_on_seven_eighths_of_relator() {
        // 7 of the 8 letters of r_0; 7 > 32/7, so the match must be found,
        // and the word equals a4 in the group.
        let s = paper_solver();
        let a = Alphabet::paper();
        let w = a.parse_word("a1 a2 a1- a2- a3 a4 a3-").unwrap();
        let m = s.greendlinger_step(&w).unwrap().unwrap();
        assert_eq!(m.relator_index, 0);
        assert_eq!(m.span, 7);
        assert!(!s.is_trivial(&w).unwrap());
        assert!(s.are_equal(&w, &a.parse_word("a4").unwrap()).unwrap());
    }

    #[test]
    fn relators_and_products_are_trivial() {
        let s = paper_solver();
        let a = Alphabet::paper();
        assert!(s.is_trivial(&r(3)).unwrap());

        let u = a.parse_word("t3 a2 t1-").unwrap();
        let w = u.mul(&r(2)).mul(&u.invert()).mul(&r(1));
        assert!(s.is_trivial(&w).unwrap());

        // nonzero abelianization forces nontriviality; check both the oracle
        // premise and the solver answer
        let x = a.parse_word("a1").unwrap();
        assert!(!x.abelianize().is_zero());
        assert!(!s.is_trivial(&x).unwrap());
    }

    #[test]
    fn equality_basics() {
        let s = paper_solver();
        let a = Alphabet::paper();
        let w = a.parse_word("t1 a1 t1-").unwrap();
        assert!(s.are_equal(&w, &w).unwrap());
        assert!(!s
            .are_equal(&a.parse_word("a1").unwrap(), &a.parse_word("a2").unwrap())
            .unwrap());

        // multiplying by a conjugated relator does not change the element
        let u = a.parse_word("t2- a3").unwrap();
        let same = w.mul(&u).mul(&r(1)).mul(&u.invert());
        assert!(s.are_equal(&w.mul(&u).mul(&u.invert()), &w).unwrap());
        assert!(s.are_equal(&same, &w).unwrap());
    }

    #[test]
    fn certificate_for_relator_is_single_factor() {
        let s = paper_solver();
        for i in [0usize, 3, 5] {
            let cert = s.area_certificate(&r(i)).unwrap();
            assert_eq!(cert.factors.len(), 1);
            assert_eq!(cert.factors[0].index, i);
            assert_eq!(cert.factors[0].sign, 1);
            assert!(cert.factors[0].conjugator.is_empty());
            assert_eq!(cert.weight, 2 * i as u64 + 1);
            assert!(cert.weight <= 16 * i as u64 + 8);
            assert!(verify_certificate_against(s.presentation(), &r(i), &cert).unwrap());
        }
    }

    #[test]
    fn certificate_of_empty_word_is_empty() {
        let s = paper_solver();
        let cert = s.area_certificate(&Word::identity(8)).unwrap();
        assert!(cert.factors.is_empty());
        assert_eq!(cert.weight, 0);
    }

    #[test]
    fn certificate_rejects_nontrivial_words() {
        let s = paper_solver();
        let a = Alphabet::paper();
        let err = s.area_certificate(&a.parse_word("a1").unwrap()).unwrap_err();
        assert_eq!(err, DehnError::NotTrivial);
    }

    #[test]
    fn random_normal_elements_satisfy_isoperimetric_bound() {
        let s = paper_solver();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..60 {
            let w = random_normal_element(s.presentation(), &mut rng, 4, 5, 6);
            assert!(s.is_trivial(&w).unwrap());
            let cert = s.area_certificate(&w).unwrap();
            assert!(cert.weight <= w.len() as u64, "A(w) ≤ |w| violated");
            assert!(verify_certificate_against(s.presentation(), &w, &cert).unwrap());
        }
    }

    #[test]
    fn certificate_verification_catches_bad_weight() {
        let s = paper_solver();
        let mut cert = s.area_certificate(&r(2)).unwrap();
        cert.weight += 1;
        assert!(!verify_certificate_against(s.presentation(), &r(2), &cert).unwrap());
    }

    #[test]
    fn hand_built_two_factor_certificate() {
        let s = paper_solver();
        let a = Alphabet::paper();
        let u = a.parse_word("t1 a2-").unwrap();
        let w = r(0).mul(&u.mul(&r(1)).mul(&u.invert()));
        let cert = AreaCertificate {
            word: w.clone(),
            factors: vec![
                CertFactor {
                    conjugator: Word::identity(8),
                    index: 0,
                    sign: 1,
                },
                CertFactor {
                    conjugator: u,
                    index: 1,
                    sign: 1,
                },
            ],
            weight: 1 + 3,
        };
        assert!(verify_certificate_against(s.presentation(), &w, &cert).unwrap());
    }

    #[test]
    fn lift_values_match_coefficients() {
        let s = paper_solver();
        let a = Alphabet::paper();
        let alpha = alpha_i();
        assert_eq!(s.lift_value(&r(3), &alpha).unwrap(), 3);
        assert_eq!(s.lift_value(&Word::identity(8), &alpha).unwrap(), 0);

        let u = a.parse_word("t3 a2 t1-").unwrap();
        let w = u.mul(&r(2)).mul(&u.invert()).mul(&r(1));
        assert_eq!(s.lift_value(&w, &alpha).unwrap(), 3);
    }

    #[test]
    fn lift_is_additive_and_conjugation_invariant() {
        let s = paper_solver();
        let alpha = alpha_i();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..25 {
            let u = random_normal_element(s.presentation(), &mut rng, 2, 4, 4);
            let v = random_normal_element(s.presentation(), &mut rng, 2, 4, 4);
            let lu = s.lift_value(&u, &alpha).unwrap();
            let lv = s.lift_value(&v, &alpha).unwrap();
            assert_eq!(s.lift_value(&u.mul(&v), &alpha).unwrap(), lu + lv);

            let g = random_reduced_word(8, 5, &mut rng);
            let conj = g.mul(&u).mul(&g.invert());
            assert_eq!(s.lift_value(&conj, &alpha).unwrap(), lu);
        }
    }

    #[test]
    fn lift_is_independent_of_reduction_strategy() {
        let det = paper_solver();
        let alpha = alpha_i();
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let words: Vec<Word> = (0..20)
            .map(|_| random_normal_element(det.presentation(), &mut rng, 3, 4, 5))
            .collect();
        let expected: Vec<i64> = words
            .iter()
            .map(|w| det.lift_value(w, &alpha).unwrap())
            .collect();
        for seed in 1..=3u64 {
            let rand_solver = Solver::with_randomized_ties(
                Presentation::paper_family(64, RelatorForm::Canonical),
                seed,
            );
            for (w, &e) in words.iter().zip(&expected) {
                assert_eq!(rand_solver.lift_value(w, &alpha).unwrap(), e);
            }
        }
    }

    #[test]
    fn lift_bounded_by_lambda_times_weight() {
        let s = paper_solver();
        let alpha = alpha_i(); // Λ = 1/2
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..40 {
            let w = random_normal_element(s.presentation(), &mut rng, 4, 5, 6);
            let cert = s.area_certificate(&w).unwrap();
            let lift = lift_of_certificate(&cert, &alpha).unwrap();
            // |lift| ≤ Λ(α)·weight, exact rational comparison: 2·|lift| ≤ weight
            assert!(2 * lift.unsigned_abs() <= cert.weight);
        }
    }

    #[test]
    fn truncation_exceeded_surfaces() {
        let s = Solver::new(Presentation::paper_family(1, RelatorForm::Canonical));
        let w = r(2); // length 40 demands searching up to index 3 > 1
        let err = s.is_trivial(&w).unwrap_err();
        assert!(matches!(err, DehnError::Pres(PresError::TruncationExceeded(_, 1))));
    }

    #[test]
    fn trace_lengths_strictly_decrease() {
        let s = paper_solver();
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        let w = random_normal_element(s.presentation(), &mut rng, 3, 3, 5);
        let trace = s.reduce(&w).unwrap();
        assert!(trace.trivial);
        for step in &trace.steps {
            assert!(step.after.len() < step.before.len());
        }
    }
}
