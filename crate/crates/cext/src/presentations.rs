//! Group presentations: the infinite relator family over `a1..a4, t1..t4`,
//! the genus-2 surface presentation, the substitution homomorphisms
//! `b_j ↦ t_j^i a_j t_j^{-i}`, and the metric small-cancellation checker.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::words::{Alphabet, Letter, Word, WordError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PresError {
    #[error("relator index {0} exceeds the truncation bound {1}")]
    TruncationExceeded(usize, usize),
    #[error("relator {0} is empty or not cyclically reduced")]
    BadRelator(usize),
    #[error("unknown relator family `{0}`")]
    UnknownFamily(String),
    #[error("bad presentation file: {0}")]
    BadFile(String),
    #[error(transparent)]
    Word(#[from] WordError),
}

/// Which spelling of the relator family to use.
///
/// `Canonical` is the image of the surface relator under the substitution
/// homomorphism, with all four conjugators `t_j^i a_j t_j^{-i}`. `Literal`
/// places the exponents of the second and fourth blocks as
/// `t_j^{-i} a_j t_j^{-i}`; both spellings have length `16i+8`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RelatorForm {
    Canonical,
    Literal,
}

impl Default for RelatorForm {
    fn default() -> Self {
        RelatorForm::Canonical
    }
}

fn commutator(x: &Word, y: &Word) -> Word {
    x.mul(y).mul(&x.invert()).mul(&y.invert())
}

/// `t_j^i a_j t_j^{-i}` over the rank-8 alphabet (`j` is 1-based).
fn conjugated_a(j: usize, i: usize) -> Word {
    let t = Letter::new(3 + j, false);
    let a = Letter::new(j - 1, false);
    let mut letters = Vec::with_capacity(2 * i + 1);
    letters.extend(std::iter::repeat(t).take(i));
    letters.push(a);
    letters.extend(std::iter::repeat(t.inverse()).take(i));
    Word::from_letters(8, letters)
}

/// `t_j^{-i} a_j t_j^{-i}`, the block the literal spelling uses for j = 2, 4.
fn skewed_a(j: usize, i: usize) -> Word {
    let t = Letter::new(3 + j, true);
    let a = Letter::new(j - 1, false);
    let mut letters = Vec::with_capacity(2 * i + 1);
    letters.extend(std::iter::repeat(t).take(i));
    letters.push(a);
    letters.extend(std::iter::repeat(t).take(i));
    Word::from_letters(8, letters)
}

/// The i-th relator of the family; freely and cyclically reduced, length `16i+8`.
pub fn paper_relator(i: usize, form: RelatorForm) -> Word {
    match form {
        RelatorForm::Canonical => {
            let u: Vec<Word> = (1..=4).map(|j| conjugated_a(j, i)).collect();
            commutator(&u[0], &u[1]).mul(&commutator(&u[2], &u[3]))
        }
        RelatorForm::Literal => {
            let c1 = commutator(&conjugated_a(1, i), &skewed_a(2, i));
            let c2 = commutator(&conjugated_a(3, i), &skewed_a(4, i));
            c1.mul(&c2)
        }
    }
}

/// The genus-2 surface relator `[b1,b2]·[b3,b4]` over the rank-4 alphabet.
pub fn surface_relator() -> Word {
    let b: Vec<Word> = (0..4).map(|j| Word::letter(4, j, false)).collect();
    commutator(&b[0], &b[1]).mul(&commutator(&b[2], &b[3]))
}

/// Substitution homomorphism `b_j ↦ t_j^i a_j t_j^{-i}` followed by free reduction.
pub fn h_image(i: usize, w: &Word) -> Result<Word, WordError> {
    if w.rank() != 4 {
        return Err(WordError::AlphabetMismatch(w.rank(), 4));
    }
    let blocks: Vec<Word> = (1..=4).map(|j| conjugated_a(j, i)).collect();
    let mut out = Word::identity(8);
    for l in w.letters() {
        let block = &blocks[l.gen_index()];
        out = if l.is_inverse() {
            out.mul(&block.invert())
        } else {
            out.mul(block)
        };
    }
    Ok(out)
}

#[derive(Debug, Clone)]
enum RelatorSource {
    Explicit(Vec<Word>),
    Family { truncation: usize, form: RelatorForm },
}

/// A presentation: an alphabet plus either an explicit relator list or the
/// indexed paper family truncated at `N`.
#[derive(Debug, Clone)]
pub struct Presentation {
    alphabet: Alphabet,
    source: RelatorSource,
}

pub const DEFAULT_TRUNCATION: usize = 64;

impl Presentation {
    pub fn paper_family(truncation: usize, form: RelatorForm) -> Self {
        Presentation {
            alphabet: Alphabet::paper(),
            source: RelatorSource::Family { truncation, form },
        }
    }

    pub fn explicit(alphabet: Alphabet, relators: Vec<Word>) -> Result<Self, PresError> {
        for (i, r) in relators.iter().enumerate() {
            if r.rank() != alphabet.rank() {
                return Err(WordError::AlphabetMismatch(r.rank(), alphabet.rank()).into());
            }
            if r.is_empty() || !r.is_cyclically_reduced() {
                return Err(PresError::BadRelator(i));
            }
        }
        Ok(Presentation {
            alphabet,
            source: RelatorSource::Explicit(relators),
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn rank(&self) -> usize {
        self.alphabet.rank()
    }

    pub fn is_family(&self) -> bool {
        matches!(self.source, RelatorSource::Family { .. })
    }

    /// Largest valid relator index.
    pub fn max_index(&self) -> usize {
        match &self.source {
            RelatorSource::Explicit(rs) => rs.len().saturating_sub(1),
            RelatorSource::Family { truncation, .. } => *truncation,
        }
    }

    pub fn truncation(&self) -> Option<usize> {
        match &self.source {
            RelatorSource::Family { truncation, .. } => Some(*truncation),
            RelatorSource::Explicit(_) => None,
        }
    }

    pub fn relator_count(&self) -> usize {
        match &self.source {
            RelatorSource::Explicit(rs) => rs.len(),
            RelatorSource::Family { truncation, .. } => truncation + 1,
        }
    }

    pub fn relator(&self, i: usize) -> Result<Word, PresError> {
        match &self.source {
            RelatorSource::Explicit(rs) => rs
                .get(i)
                .cloned()
                .ok_or(PresError::TruncationExceeded(i, rs.len().saturating_sub(1))),
            RelatorSource::Family { truncation, form } => {
                if i > *truncation {
                    Err(PresError::TruncationExceeded(i, *truncation))
                } else {
                    Ok(paper_relator(i, *form))
                }
            }
        }
    }

    /// Relator length without materializing the word.
    pub fn relator_len(&self, i: usize) -> Result<usize, PresError> {
        match &self.source {
            RelatorSource::Explicit(rs) => rs
                .get(i)
                .map(Word::len)
                .ok_or(PresError::TruncationExceeded(i, rs.len().saturating_sub(1))),
            RelatorSource::Family { truncation, .. } => {
                if i > *truncation {
                    Err(PresError::TruncationExceeded(i, *truncation))
                } else {
                    Ok(16 * i + 8)
                }
            }
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
enum PresentationFile {
    Family {
        family: String,
        truncation: Option<usize>,
        #[serde(default)]
        relator_form: Option<RelatorForm>,
    },
    Explicit {
        alphabet: Vec<String>,
        relators: Vec<String>,
    },
}

impl Presentation {
    pub fn from_json(text: &str) -> Result<Self, PresError> {
        let file: PresentationFile =
            serde_json::from_str(text).map_err(|e| PresError::BadFile(e.to_string()))?;
        match file {
            PresentationFile::Family {
                family,
                truncation,
                relator_form,
            } => {
                if family != "paper" {
                    return Err(PresError::UnknownFamily(family));
                }
                Ok(Presentation::paper_family(
                    truncation.unwrap_or(DEFAULT_TRUNCATION),
                    relator_form.unwrap_or_default(),
                ))
            }
            PresentationFile::Explicit { alphabet, relators } => {
                let alphabet = Alphabet::new(alphabet)?;
                let words = relators
                    .iter()
                    .map(|s| alphabet.parse_word(s))
                    .collect::<Result<Vec<_>, _>>()?;
                Presentation::explicit(alphabet, words)
            }
        }
    }
}

/// The longest piece shared by a pair of relators.
#[derive(Debug, Clone)]
pub struct PieceReport {
    pub i: usize,
    pub k: usize,
    pub piece: Word,
    pub len: usize,
    pub ratio_i: Ratio<u64>,
    pub ratio_k: Ratio<u64>,
}

impl PieceReport {
    pub fn max_ratio(&self) -> Ratio<u64> {
        self.ratio_i.max(self.ratio_k)
    }
}

#[derive(Debug, Clone)]
pub struct CancellationReport {
    pub lambda: Ratio<u64>,
    pub max_index: usize,
    pub holds: bool,
    /// Pair attaining the largest piece/relator ratio.
    pub worst: Option<PieceReport>,
}

/// All rotations of `w` and of `w⁻¹`, deduplicated.
///
/// These are exactly the elements of the symmetrized relator set contributed
/// by `w`; a piece is a common prefix of two distinct such elements.
fn symmetrized_rotations(w: &Word) -> Vec<Word> {
    let mut out = Vec::with_capacity(2 * w.len().max(1));
    for v in [w.clone(), w.invert()] {
        for p in 0..v.len().max(1) {
            let rot = v.rotated(p);
            if !out.contains(&rot) {
                out.push(rot);
            }
        }
    }
    out
}

fn common_prefix_len(u: &Word, v: &Word) -> usize {
    u.letters()
        .iter()
        .zip(v.letters())
        .take_while(|(a, b)| a == b)
        .count()
}

/// Longest common prefix over pairs of distinct rotations drawn from the two
/// symmetrized sets. Returns the piece and its length.
fn longest_piece(rot_u: &[Word], rot_v: &[Word]) -> (Word, usize) {
    let rank = rot_u
        .first()
        .or_else(|| rot_v.first())
        .map_or(0, Word::rank);
    let mut best: (Word, usize) = (Word::identity(rank), 0);
    for u in rot_u {
        for v in rot_v {
            if u == v {
                continue;
            }
            let l = common_prefix_len(u, v);
            if l > best.1 {
                best = (
                    Word::from_letters(rank, u.letters()[..l].iter().copied()),
                    l,
                );
            }
        }
    }
    best
}

/// A longest word occurring as a subword of cyclic permutations of `u` (or
/// `u⁻¹`) and of `v` (or `v⁻¹`); when `u` and `v` agree as cyclic words the
/// occurrences are required to be distinct.
pub fn max_piece(u: &Word, v: &Word) -> Word {
    let rot_u = symmetrized_rotations(u);
    let rot_v = symmetrized_rotations(v);
    longest_piece(&rot_u, &rot_v).0
}

/// Scans all pieces among relators `r_0..r_N` (and their inverses) and checks
/// the metric condition `|p| < lambda · |r|` for every piece of every relator.
pub fn check_small_cancellation(
    p: &Presentation,
    lambda: Ratio<u64>,
    max_index: usize,
) -> Result<CancellationReport, PresError> {
    let n = max_index.min(p.max_index());
    if p.is_family() && max_index > p.max_index() {
        return Err(PresError::TruncationExceeded(max_index, p.max_index()));
    }
    let rotations: Vec<Vec<Word>> = (0..=n)
        .map(|i| Ok(symmetrized_rotations(&p.relator(i)?)))
        .collect::<Result<_, PresError>>()?;
    let mut holds = true;
    let mut worst: Option<PieceReport> = None;
    for i in 0..=n {
        for k in i..=n {
            let (piece, len) = if i == k {
                longest_piece(&rotations[i], &rotations[i])
            } else {
                longest_piece(&rotations[i], &rotations[k])
            };
            let li = p.relator_len(i)? as u64;
            let lk = p.relator_len(k)? as u64;
            let report = PieceReport {
                i,
                k,
                piece,
                len,
                ratio_i: Ratio::new(len as u64, li),
                ratio_k: Ratio::new(len as u64, lk),
            };
            if report.ratio_i >= lambda || report.ratio_k >= lambda {
                holds = false;
            }
            if worst
                .as_ref()
                .map_or(true, |w| report.max_ratio() > w.max_ratio())
            {
                worst = Some(report);
            }
        }
    }
    Ok(CancellationReport {
        lambda,
        max_index: n,
        holds,
        worst,
    })
}
