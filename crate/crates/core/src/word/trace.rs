//! Rewrite rules and replayable derivation traces.
//!
//! A trace step edits a word locally: it rewrites a segment by a defining
//! relation, cancels or inserts a formal inverse pair, or exchanges an
//! inverted letter for its negated positive form.  Replaying a trace checks
//! every step against the word exactly, so a trace that replays from `w`
//! to `w'` certifies that `w` and `w'` represent the same group element.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::{parse_value, Hom, Ring, Value};
use crate::word::{Letter, SteinbergWord};

/// Scales a value by the sign of an index.
fn signed(v: &Value, i: i32) -> Value {
    if i > 0 {
        v.clone()
    } else {
        v.neg()
    }
}

/// A concrete instance of a defining relation, oriented as a rewrite from
/// a left segment to a right segment of equal projection.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum RelInstance {
    /// `X(row,col;0) = 1`.
    Vanish { row: i32, col: i32, ring: Ring },
    /// `X(row,col;a) X(row,col;b) = X(row,col;a+b)`.
    Merge { row: i32, col: i32, a: Value, b: Value },
    /// `X(row,col;a) = X(-col,-row;-a sign(row) sign(col))`.
    Mirror { row: i32, col: i32, a: Value },
    /// `X(r1,c1;a) X(r2,c2;b) = X(r2,c2;b) X(r1,c1;a)` for disjoint roots:
    /// `r2 not in {c1,-r1}` and `c2 not in {r1,-c1}`.
    Commute {
        row1: i32,
        col1: i32,
        a: Value,
        row2: i32,
        col2: i32,
        b: Value,
    },
    /// `X(i,j;a) X(j,k;b) = X(i,k;ab) X(j,k;b) X(i,j;a)` for chained short
    /// roots: `i not in {-j,-k,k}`, `j != -k`.
    Compose { i: i32, j: i32, k: i32, a: Value, b: Value },
    /// `X(i,-i;a) X(-i,j;b) = X(i,j;ab sign i) X(-j,j;-ab^2) X(-i,j;b) X(i,-i;a)`
    /// for `j != ±i`.
    LongShort { i: i32, j: i32, a: Value, b: Value },
    /// `X(i,j;a) X(j,-i;b) = X(i,-i;2ab sign i) X(j,-i;b) X(i,j;a)`
    /// for `j != ±i`.
    ShortLong { i: i32, j: i32, a: Value, b: Value },
}

impl RelInstance {
    pub fn kind_name(&self) -> &'static str {
        match self {
            RelInstance::Vanish { .. } => "vanish",
            RelInstance::Merge { .. } => "merge",
            RelInstance::Mirror { .. } => "mirror",
            RelInstance::Commute { .. } => "commute",
            RelInstance::Compose { .. } => "compose",
            RelInstance::LongShort { .. } => "long-short",
            RelInstance::ShortLong { .. } => "short-long",
        }
    }

    pub fn ring(&self) -> &Ring {
        match self {
            RelInstance::Vanish { ring, .. } => ring,
            RelInstance::Merge { a, .. }
            | RelInstance::Mirror { a, .. }
            | RelInstance::Commute { a, .. }
            | RelInstance::Compose { a, .. }
            | RelInstance::LongShort { a, .. }
            | RelInstance::ShortLong { a, .. } => a.ring(),
        }
    }

    fn guard(&self, cond: bool, detail: &str) -> Result<()> {
        if cond {
            Ok(())
        } else {
            Err(Error::GuardViolated {
                id: self.kind_name().into(),
                detail: detail.into(),
            })
        }
    }

    /// Checks the side conditions of the relation family.  Index bounds are
    /// enforced by letter construction in [`Self::lhs`] and [`Self::rhs`].
    pub fn validate(&self) -> Result<()> {
        match self {
            RelInstance::Vanish { row, col, .. }
            | RelInstance::Merge { row, col, .. }
            | RelInstance::Mirror { row, col, .. } => {
                self.guard(row != col, "row and column must differ")
            }
            RelInstance::Commute {
                row1,
                col1,
                row2,
                col2,
                ..
            } => {
                self.guard(row1 != col1 && row2 != col2, "roots must be valid")?;
                self.guard(
                    *row2 != *col1 && *row2 != -*row1,
                    "second row meets the first root",
                )?;
                self.guard(
                    *col2 != *row1 && *col2 != -*col1,
                    "second column meets the first root",
                )
            }
            RelInstance::Compose { i, j, k, .. } => {
                self.guard(i != j && j != k && i != k, "indices must be distinct")?;
                self.guard(*i != -*j && *i != -*k, "row meets an opposite index")?;
                self.guard(*j != -*k, "inner indices are opposite")
            }
            RelInstance::LongShort { i, j, .. } | RelInstance::ShortLong { i, j, .. } => {
                self.guard(*j != *i && *j != -*i, "indices must span distinct pairs")
            }
        }
    }

    /// The left side of the rewrite, as letters.
    pub fn lhs(&self, n: usize) -> Result<Vec<Letter>> {
        self.validate()?;
        Ok(match self {
            RelInstance::Vanish { row, col, ring } => {
                vec![Letter::new(n, *row, *col, ring.zero())?]
            }
            RelInstance::Merge { row, col, a, b } => vec![
                Letter::new(n, *row, *col, a.clone())?,
                Letter::new(n, *row, *col, b.clone())?,
            ],
            RelInstance::Mirror { row, col, a } => {
                vec![Letter::new(n, *row, *col, a.clone())?]
            }
            RelInstance::Commute {
                row1,
                col1,
                a,
                row2,
                col2,
                b,
            } => vec![
                Letter::new(n, *row1, *col1, a.clone())?,
                Letter::new(n, *row2, *col2, b.clone())?,
            ],
            RelInstance::Compose { i, j, k, a, b } => vec![
                Letter::new(n, *i, *j, a.clone())?,
                Letter::new(n, *j, *k, b.clone())?,
            ],
            RelInstance::LongShort { i, j, a, b } => vec![
                Letter::new(n, *i, -*i, a.clone())?,
                Letter::new(n, -*i, *j, b.clone())?,
            ],
            RelInstance::ShortLong { i, j, a, b } => vec![
                Letter::new(n, *i, *j, a.clone())?,
                Letter::new(n, *j, -*i, b.clone())?,
            ],
        })
    }

    /// The right side of the rewrite, as letters.
    pub fn rhs(&self, n: usize) -> Result<Vec<Letter>> {
        self.validate()?;
        Ok(match self {
            RelInstance::Vanish { .. } => Vec::new(),
            RelInstance::Merge { row, col, a, b } => {
                vec![Letter::new(n, *row, *col, a.add(b))?]
            }
            RelInstance::Mirror { row, col, a } => {
                let c = signed(&signed(&a.neg(), *row), *col);
                vec![Letter::new(n, -*col, -*row, c)?]
            }
            RelInstance::Commute {
                row1,
                col1,
                a,
                row2,
                col2,
                b,
            } => vec![
                Letter::new(n, *row2, *col2, b.clone())?,
                Letter::new(n, *row1, *col1, a.clone())?,
            ],
            RelInstance::Compose { i, j, k, a, b } => vec![
                Letter::new(n, *i, *k, a.mul(b))?,
                Letter::new(n, *j, *k, b.clone())?,
                Letter::new(n, *i, *j, a.clone())?,
            ],
            RelInstance::LongShort { i, j, a, b } => {
                let ab = a.mul(b);
                let abb = ab.mul(b);
                vec![
                    Letter::new(n, *i, *j, signed(&ab, *i))?,
                    Letter::new(n, -*j, *j, abb.neg())?,
                    Letter::new(n, -*i, *j, b.clone())?,
                    Letter::new(n, *i, -*i, a.clone())?,
                ]
            }
            RelInstance::ShortLong { i, j, a, b } => {
                let two = a.ring().from_i64(2);
                let c = signed(&two.mul(&a.mul(b)), *i);
                vec![
                    Letter::new(n, *i, -*i, c)?,
                    Letter::new(n, *j, -*i, b.clone())?,
                    Letter::new(n, *i, *j, a.clone())?,
                ]
            }
        })
    }

    /// Image of the instance under a ring homomorphism: index data is
    /// kept and the parameters are pushed through.  Side conditions only
    /// involve indices, so the image is again a valid instance.
    pub fn map(&self, hom: &Hom) -> Result<RelInstance> {
        Ok(match self {
            RelInstance::Vanish { row, col, .. } => RelInstance::Vanish {
                row: *row,
                col: *col,
                ring: hom.target_ring(),
            },
            RelInstance::Merge { row, col, a, b } => RelInstance::Merge {
                row: *row,
                col: *col,
                a: hom.apply(a)?,
                b: hom.apply(b)?,
            },
            RelInstance::Mirror { row, col, a } => RelInstance::Mirror {
                row: *row,
                col: *col,
                a: hom.apply(a)?,
            },
            RelInstance::Commute {
                row1,
                col1,
                a,
                row2,
                col2,
                b,
            } => RelInstance::Commute {
                row1: *row1,
                col1: *col1,
                a: hom.apply(a)?,
                row2: *row2,
                col2: *col2,
                b: hom.apply(b)?,
            },
            RelInstance::Compose { i, j, k, a, b } => RelInstance::Compose {
                i: *i,
                j: *j,
                k: *k,
                a: hom.apply(a)?,
                b: hom.apply(b)?,
            },
            RelInstance::LongShort { i, j, a, b } => RelInstance::LongShort {
                i: *i,
                j: *j,
                a: hom.apply(a)?,
                b: hom.apply(b)?,
            },
            RelInstance::ShortLong { i, j, a, b } => RelInstance::ShortLong {
                i: *i,
                j: *j,
                a: hom.apply(a)?,
                b: hom.apply(b)?,
            },
        })
    }

    pub fn to_data(&self) -> RelData {
        let (idx, params) = match self {
            RelInstance::Vanish { row, col, .. } => (vec![*row, *col], vec![]),
            RelInstance::Merge { row, col, a, b } => {
                (vec![*row, *col], vec![a.to_string(), b.to_string()])
            }
            RelInstance::Mirror { row, col, a } => (vec![*row, *col], vec![a.to_string()]),
            RelInstance::Commute {
                row1,
                col1,
                a,
                row2,
                col2,
                b,
            } => (
                vec![*row1, *col1, *row2, *col2],
                vec![a.to_string(), b.to_string()],
            ),
            RelInstance::Compose { i, j, k, a, b } => {
                (vec![*i, *j, *k], vec![a.to_string(), b.to_string()])
            }
            RelInstance::LongShort { i, j, a, b } | RelInstance::ShortLong { i, j, a, b } => {
                (vec![*i, *j], vec![a.to_string(), b.to_string()])
            }
        };
        RelData {
            kind: self.kind_name().into(),
            idx,
            params,
        }
    }

    pub fn from_data(ring: &Ring, data: &RelData) -> Result<RelInstance> {
        let idx = |p: usize| -> Result<i32> {
            data.idx.get(p).copied().ok_or_else(|| {
                Error::Parse(format!("rule {} is missing index {p}", data.kind))
            })
        };
        let param = |p: usize| -> Result<Value> {
            let s = data.params.get(p).ok_or_else(|| {
                Error::Parse(format!("rule {} is missing parameter {p}", data.kind))
            })?;
            parse_value(ring, s)
        };
        let rel = match data.kind.as_str() {
            "vanish" => RelInstance::Vanish {
                row: idx(0)?,
                col: idx(1)?,
                ring: ring.clone(),
            },
            "merge" => RelInstance::Merge {
                row: idx(0)?,
                col: idx(1)?,
                a: param(0)?,
                b: param(1)?,
            },
            "mirror" => RelInstance::Mirror {
                row: idx(0)?,
                col: idx(1)?,
                a: param(0)?,
            },
            "commute" => RelInstance::Commute {
                row1: idx(0)?,
                col1: idx(1)?,
                row2: idx(2)?,
                col2: idx(3)?,
                a: param(0)?,
                b: param(1)?,
            },
            "compose" => RelInstance::Compose {
                i: idx(0)?,
                j: idx(1)?,
                k: idx(2)?,
                a: param(0)?,
                b: param(1)?,
            },
            "long-short" => RelInstance::LongShort {
                i: idx(0)?,
                j: idx(1)?,
                a: param(0)?,
                b: param(1)?,
            },
            "short-long" => RelInstance::ShortLong {
                i: idx(0)?,
                j: idx(1)?,
                a: param(0)?,
                b: param(1)?,
            },
            other => return Err(Error::Parse(format!("unknown rule kind {other:?}"))),
        };
        rel.validate()?;
        Ok(rel)
    }
}

/// The local edit performed by a trace step.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum StepOp {
    /// Replace the left side of `rel` by its right side (or the other way
    /// around when `reverse` is set).
    Rewrite { rel: RelInstance, reverse: bool },
    /// Remove the adjacent pair `letter, letter^{-1}` (insert it when
    /// `reverse` is set).
    CancelPair { letter: Letter, reverse: bool },
    /// Replace `X(i,j;a)^{-1}` by `X(i,j;-a)` (or back when `reverse`).
    InvToNeg { reverse: bool },
}

/// One local edit at a word position.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TraceStep {
    pub pos: usize,
    pub op: StepOp,
}

impl TraceStep {
    fn mismatch(&self, detail: impl Into<String>) -> Error {
        Error::PatternMismatch {
            pos: self.pos,
            detail: detail.into(),
        }
    }

    /// Replaces `word[pos..pos+from.len()]` by `to`.
    fn splice(
        &self,
        word: &SteinbergWord,
        from: &[Letter],
        to: &[Letter],
    ) -> Result<SteinbergWord> {
        let ls = word.letters();
        if self.pos + from.len() > ls.len() {
            return Err(self.mismatch(format!(
                "segment of length {} does not fit in word of length {}",
                from.len(),
                ls.len()
            )));
        }
        let got = &ls[self.pos..self.pos + from.len()];
        if got != from {
            let got: Vec<String> = got.iter().map(|l| l.to_string()).collect();
            let want: Vec<String> = from.iter().map(|l| l.to_string()).collect();
            return Err(self.mismatch(format!(
                "expected [{}], found [{}]",
                want.join(", "),
                got.join(", ")
            )));
        }
        let mut letters = ls[..self.pos].to_vec();
        letters.extend(to.iter().cloned());
        letters.extend(ls[self.pos + from.len()..].iter().cloned());
        SteinbergWord::from_letters(word.ring(), word.rank(), letters)
    }

    pub fn apply(&self, word: &SteinbergWord) -> Result<SteinbergWord> {
        match &self.op {
            StepOp::Rewrite { rel, reverse } => {
                if rel.ring() != word.ring() {
                    return Err(Error::mismatch(word.ring(), rel.ring()));
                }
                let lhs = rel.lhs(word.rank())?;
                let rhs = rel.rhs(word.rank())?;
                if *reverse {
                    self.splice(word, &rhs, &lhs)
                } else {
                    self.splice(word, &lhs, &rhs)
                }
            }
            StepOp::CancelPair { letter, reverse } => {
                let pair = [letter.clone(), letter.inverse()];
                if *reverse {
                    self.splice(word, &[], &pair)
                } else {
                    self.splice(word, &pair, &[])
                }
            }
            StepOp::InvToNeg { reverse } => {
                let Some(l) = word.letters().get(self.pos) else {
                    return Err(self.mismatch("position past the end of the word"));
                };
                if l.is_inverse() == *reverse {
                    return Err(self.mismatch(if *reverse {
                        "expected a positive letter"
                    } else {
                        "expected an inverted letter"
                    }));
                }
                let mut replacement =
                    Letter::new(word.rank(), l.row(), l.col(), l.param().neg())?;
                if *reverse {
                    replacement = replacement.inverse();
                }
                self.splice(word, &[l.clone()], &[replacement])
            }
        }
    }

    /// The step undoing this one, at the same position.
    pub fn inverted(&self) -> TraceStep {
        let op = match &self.op {
            StepOp::Rewrite { rel, reverse } => StepOp::Rewrite {
                rel: rel.clone(),
                reverse: !reverse,
            },
            StepOp::CancelPair { letter, reverse } => StepOp::CancelPair {
                letter: letter.clone(),
                reverse: !reverse,
            },
            StepOp::InvToNeg { reverse } => StepOp::InvToNeg { reverse: !reverse },
        };
        TraceStep { pos: self.pos, op }
    }

    /// Image of the step under a ring homomorphism.
    pub fn map(&self, hom: &Hom, n: usize) -> Result<TraceStep> {
        let op = match &self.op {
            StepOp::Rewrite { rel, reverse } => StepOp::Rewrite {
                rel: rel.map(hom)?,
                reverse: *reverse,
            },
            StepOp::CancelPair { letter, reverse } => {
                let mut image =
                    Letter::new(n, letter.row(), letter.col(), hom.apply(letter.param())?)?;
                if letter.is_inverse() {
                    image = image.inverse();
                }
                StepOp::CancelPair {
                    letter: image,
                    reverse: *reverse,
                }
            }
            StepOp::InvToNeg { reverse } => StepOp::InvToNeg { reverse: *reverse },
        };
        Ok(TraceStep { pos: self.pos, op })
    }

    pub fn to_data(&self) -> StepData {
        match &self.op {
            StepOp::Rewrite { rel, reverse } => StepData::Rewrite {
                pos: self.pos,
                rule: rel.to_data(),
                reverse: *reverse,
            },
            StepOp::CancelPair { letter, reverse } => StepData::CancelPair {
                pos: self.pos,
                letter: LetterData::from_letter(letter),
                reverse: *reverse,
            },
            StepOp::InvToNeg { reverse } => StepData::InvToNeg {
                pos: self.pos,
                reverse: *reverse,
            },
        }
    }

    pub fn from_data(ring: &Ring, n: usize, data: &StepData) -> Result<TraceStep> {
        Ok(match data {
            StepData::Rewrite { pos, rule, reverse } => TraceStep {
                pos: *pos,
                op: StepOp::Rewrite {
                    rel: RelInstance::from_data(ring, rule)?,
                    reverse: *reverse,
                },
            },
            StepData::CancelPair {
                pos,
                letter,
                reverse,
            } => TraceStep {
                pos: *pos,
                op: StepOp::CancelPair {
                    letter: letter.to_letter(ring, n)?,
                    reverse: *reverse,
                },
            },
            StepData::InvToNeg { pos, reverse } => TraceStep {
                pos: *pos,
                op: StepOp::InvToNeg { reverse: *reverse },
            },
        })
    }
}

/// A replayable sequence of trace steps.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct DerivationTrace {
    steps: Vec<TraceStep>,
}

impl DerivationTrace {
    pub fn new(steps: Vec<TraceStep>) -> DerivationTrace {
        DerivationTrace { steps }
    }

    pub fn steps(&self) -> &[TraceStep] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Applies every step in order, verifying each against the current word.
    pub fn replay(&self, start: &SteinbergWord) -> Result<SteinbergWord> {
        let mut word = start.clone();
        for step in &self.steps {
            word = step.apply(&word)?;
        }
        Ok(word)
    }

    /// The trace running from the end word back to the start word.
    pub fn reversed(&self) -> DerivationTrace {
        DerivationTrace {
            steps: self.steps.iter().rev().map(TraceStep::inverted).collect(),
        }
    }

    /// Checks that the trace rewrites `from` exactly into `to`.
    pub fn certifies(&self, from: &SteinbergWord, to: &SteinbergWord) -> Result<()> {
        let got = self.replay(from)?;
        if &got != to {
            return Err(Error::PatternMismatch {
                pos: self.steps.len(),
                detail: format!("trace ends at {got}, expected {to}"),
            });
        }
        Ok(())
    }

    /// Stepwise image of the trace under a ring homomorphism.  The image
    /// replays on the image of any word the original replays on, because
    /// every edit commutes with the coefficientwise map.
    pub fn map(&self, hom: &Hom, n: usize) -> Result<DerivationTrace> {
        let steps = self
            .steps
            .iter()
            .map(|s| s.map(hom, n))
            .collect::<Result<Vec<_>>>()?;
        Ok(DerivationTrace::new(steps))
    }

    pub fn concat(&self, other: &DerivationTrace) -> DerivationTrace {
        let mut steps = self.steps.clone();
        steps.extend(other.steps.iter().cloned());
        DerivationTrace { steps }
    }

    pub fn to_data(&self) -> Vec<StepData> {
        self.steps.iter().map(TraceStep::to_data).collect()
    }

    pub fn from_data(ring: &Ring, n: usize, data: &[StepData]) -> Result<DerivationTrace> {
        let steps = data
            .iter()
            .map(|d| TraceStep::from_data(ring, n, d))
            .collect::<Result<Vec<_>>>()?;
        Ok(DerivationTrace { steps })
    }
}

/// Serialized form of a relation instance: parameters in the value grammar.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelData {
    pub kind: String,
    pub idx: Vec<i32>,
    pub params: Vec<String>,
}

/// Serialized form of a letter.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LetterData {
    pub row: i32,
    pub col: i32,
    pub param: String,
    #[serde(default)]
    pub inv: bool,
}

impl LetterData {
    pub fn from_letter(l: &Letter) -> LetterData {
        LetterData {
            row: l.row(),
            col: l.col(),
            param: l.param().to_string(),
            inv: l.is_inverse(),
        }
    }

    pub fn to_letter(&self, ring: &Ring, n: usize) -> Result<Letter> {
        let mut l = Letter::new(n, self.row, self.col, parse_value(ring, &self.param)?)?;
        if self.inv {
            l = l.inverse();
        }
        Ok(l)
    }
}

/// Serialized form of a trace step.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "kebab-case")]
pub enum StepData {
    Rewrite {
        pos: usize,
        rule: RelData,
        reverse: bool,
    },
    CancelPair {
        pos: usize,
        letter: LetterData,
        reverse: bool,
    },
    InvToNeg {
        pos: usize,
        reverse: bool,
    },
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample::{random_nonzero, random_value, rng_for};
    use crate::symplectic::unslot;
    use rand::Rng;

    fn z() -> Ring {
        Ring::int()
    }

    fn random_index_pair(n: usize, rng: &mut impl Rng) -> (i32, i32) {
        loop {
            let i = unslot(rng.gen_range(0..2 * n), n);
            let j = unslot(rng.gen_range(0..2 * n), n);
            if i != j {
                return (i, j);
            }
        }
    }

    /// A random valid instance of the given rule kind, or `None` if the
    /// sampled indices violate its guards.
    fn random_rel(kind: &str, ring: &Ring, n: usize, rng: &mut impl Rng) -> Option<RelInstance> {
        let a = random_value(ring, rng);
        let b = random_value(ring, rng);
        let rel = match kind {
            "vanish" => {
                let (row, col) = random_index_pair(n, rng);
                RelInstance::Vanish {
                    row,
                    col,
                    ring: ring.clone(),
                }
            }
            "merge" => {
                let (row, col) = random_index_pair(n, rng);
                RelInstance::Merge { row, col, a, b }
            }
            "mirror" => {
                let (row, col) = random_index_pair(n, rng);
                RelInstance::Mirror { row, col, a }
            }
            "commute" => {
                let (row1, col1) = random_index_pair(n, rng);
                let (row2, col2) = random_index_pair(n, rng);
                RelInstance::Commute {
                    row1,
                    col1,
                    a,
                    row2,
                    col2,
                    b,
                }
            }
            "compose" => {
                let (i, j) = random_index_pair(n, rng);
                let k = unslot(rng.gen_range(0..2 * n), n);
                RelInstance::Compose { i, j, k, a, b }
            }
            "long-short" => {
                let (i, j) = random_index_pair(n, rng);
                RelInstance::LongShort { i, j, a, b }
            }
            "short-long" => {
                let (i, j) = random_index_pair(n, rng);
                RelInstance::ShortLong { i, j, a, b }
            }
            _ => unreachable!(),
        };
        rel.validate().ok().map(|()| rel)
    }

    #[test]
    fn every_rule_kind_preserves_the_projection() {
        let kinds = [
            "vanish",
            "merge",
            "mirror",
            "commute",
            "compose",
            "long-short",
            "short-long",
        ];
        for ring in [z(), Ring::int_mod(4).unwrap()] {
            for kind in kinds {
                let mut rng = rng_for(51, &format!("rule-{kind}-{ring}"));
                let mut seen = 0;
                while seen < 60 {
                    let Some(rel) = random_rel(kind, &ring, 3, &mut rng) else {
                        continue;
                    };
                    seen += 1;
                    let n = 3;
                    let lhs = SteinbergWord::from_letters(&ring, n, rel.lhs(n).unwrap()).unwrap();
                    let rhs = SteinbergWord::from_letters(&ring, n, rel.rhs(n).unwrap()).unwrap();
                    assert_eq!(
                        lhs.phi(),
                        rhs.phi(),
                        "{kind} over {ring}: {lhs} vs {rhs}"
                    );
                }
            }
        }
    }

    #[test]
    fn guard_violations_are_rejected() {
        let ring = z();
        let a = ring.from_i64(2);
        let b = ring.from_i64(3);
        // Chained roots sharing an opposite index.
        let bad = RelInstance::Compose {
            i: 1,
            j: 2,
            k: -1,
            a: a.clone(),
            b: b.clone(),
        };
        assert!(matches!(bad.validate(), Err(Error::GuardViolated { .. })));
        // Commuting roots that actually interact.
        let bad = RelInstance::Commute {
            row1: 1,
            col1: 2,
            a: a.clone(),
            row2: 2,
            col2: 3,
            b: b.clone(),
        };
        assert!(matches!(bad.validate(), Err(Error::GuardViolated { .. })));
        // A long-short pair must span two distinct index pairs.
        let bad = RelInstance::LongShort {
            i: 1,
            j: -1,
            a,
            b,
        };
        assert!(matches!(bad.validate(), Err(Error::GuardViolated { .. })));
    }

    #[test]
    fn rewrite_steps_verify_their_segment() {
        let ring = z();
        let n = 3;
        let word = SteinbergWord::parse(&ring, n, "X(1,2;2)*X(1,2;3)").unwrap();
        let step = TraceStep {
            pos: 0,
            op: StepOp::Rewrite {
                rel: RelInstance::Merge {
                    row: 1,
                    col: 2,
                    a: ring.from_i64(2),
                    b: ring.from_i64(3),
                },
                reverse: false,
            },
        };
        assert_eq!(
            step.apply(&word).unwrap(),
            SteinbergWord::parse(&ring, n, "X(1,2;5)").unwrap()
        );
        // Wrong parameters at the site.
        let bad = TraceStep {
            pos: 0,
            op: StepOp::Rewrite {
                rel: RelInstance::Merge {
                    row: 1,
                    col: 2,
                    a: ring.from_i64(2),
                    b: ring.from_i64(4),
                },
                reverse: false,
            },
        };
        assert!(matches!(
            bad.apply(&word),
            Err(Error::PatternMismatch { pos: 0, .. })
        ));
    }

    #[test]
    fn traces_replay_and_reverse() {
        let ring = Ring::int_mod(5).unwrap();
        let n = 3;
        let mut rng = rng_for(52, "trace-reverse");
        for _ in 0..20 {
            let mut w = SteinbergWord::identity(&ring, n);
            for _ in 0..5 {
                let (i, j) = random_index_pair(n, &mut rng);
                let mut l = Letter::new(n, i, j, random_nonzero(&ring, &mut rng)).unwrap();
                if rng.gen_bool(0.4) {
                    l = l.inverse();
                }
                w.push(l).unwrap();
            }
            let doubled = w.mul(&w.inverse());
            let (reduced, trace) = doubled.simplify();
            trace.certifies(&doubled, &reduced).unwrap();
            trace.reversed().certifies(&reduced, &doubled).unwrap();
        }
    }

    #[test]
    fn trace_steps_round_trip_through_serde() {
        let rt = Ring::poly(&z(), &["t"]).unwrap();
        let n = 3;
        let word = SteinbergWord::parse(&rt, n, "X(1,2;t)*X(1,2;t)^-1*X(2,3;0)").unwrap();
        let (reduced, trace) = word.simplify();
        assert!(reduced.is_empty());
        let json = serde_json::to_string(&trace.to_data()).unwrap();
        let data: Vec<StepData> = serde_json::from_str(&json).unwrap();
        let back = DerivationTrace::from_data(&rt, n, &data).unwrap();
        back.certifies(&word, &reduced).unwrap();
    }
}
