//! Formal generator words and their matrix projection.
//!
//! A word is a finite sequence of letters `X(i,j;a)^{±1}` over a fixed ring
//! and rank.  Words multiply by concatenation and invert by reversing the
//! letter order and flipping exponents; no relation is applied implicitly.
//! The projection [`SteinbergWord::phi`] sends a word to the product of the
//! corresponding transvections, computed with row operations so that the
//! cost is linear in the word length.
//!
//! Claimed equalities between words are certified by [`DerivationTrace`]s:
//! explicit sequences of local rewrite steps, each an instance of a defining
//! relation, that can be replayed and checked exactly.

mod realize;
mod trace;

pub use realize::{x_at_basis, x_element, x_general, y_element, zero_pair, OrbitPair, OrbitVector};
pub use trace::{DerivationTrace, LetterData, RelData, RelInstance, StepData, StepOp, TraceStep};

use std::fmt;

use crate::error::{Error, Result};
use crate::ring::{parse_value, split_all_top, Hom, Ring, Value};
use crate::symplectic::{check_index, SympMatrix};

/// A single generator letter `X(row,col;param)`, possibly formally inverted.
#[derive(Clone, PartialEq, Eq)]
pub struct Letter {
    row: i32,
    col: i32,
    param: Value,
    inv: bool,
}

impl Letter {
    pub fn new(n: usize, row: i32, col: i32, param: Value) -> Result<Letter> {
        check_index(row, n)?;
        check_index(col, n)?;
        if row == col {
            return Err(Error::InvalidConstruction(
                "letter requires distinct row and column".into(),
            ));
        }
        Ok(Letter {
            row,
            col,
            param,
            inv: false,
        })
    }

    pub fn row(&self) -> i32 {
        self.row
    }

    pub fn col(&self) -> i32 {
        self.col
    }

    pub fn param(&self) -> &Value {
        &self.param
    }

    pub fn is_inverse(&self) -> bool {
        self.inv
    }

    pub fn inverse(&self) -> Letter {
        let mut l = self.clone();
        l.inv = !l.inv;
        l
    }

    /// The parameter of the equivalent positive letter.
    pub fn effective_param(&self) -> Value {
        if self.inv {
            self.param.neg()
        } else {
            self.param.clone()
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X({},{};{})", self.row, self.col, self.param)?;
        if self.inv {
            write!(f, "^-1")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A formal product of generator letters over a fixed ring and rank.
#[derive(Clone, PartialEq, Eq)]
pub struct SteinbergWord {
    ring: Ring,
    n: usize,
    letters: Vec<Letter>,
}

impl SteinbergWord {
    pub fn identity(ring: &Ring, n: usize) -> SteinbergWord {
        SteinbergWord {
            ring: ring.clone(),
            n,
            letters: Vec::new(),
        }
    }

    pub fn generator(ring: &Ring, n: usize, row: i32, col: i32, param: Value) -> Result<SteinbergWord> {
        let mut w = SteinbergWord::identity(ring, n);
        w.push(Letter::new(n, row, col, param)?)?;
        Ok(w)
    }

    pub fn from_letters(ring: &Ring, n: usize, letters: Vec<Letter>) -> Result<SteinbergWord> {
        let mut w = SteinbergWord::identity(ring, n);
        for l in letters {
            w.push(l)?;
        }
        Ok(w)
    }

    pub fn push(&mut self, letter: Letter) -> Result<()> {
        check_index(letter.row, self.n)?;
        check_index(letter.col, self.n)?;
        if letter.param.ring() != &self.ring {
            return Err(Error::mismatch(&self.ring, letter.param.ring()));
        }
        self.letters.push(letter);
        Ok(())
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    fn check_peer(&self, other: &SteinbergWord) {
        assert_eq!(self.ring, other.ring, "word ring mismatch");
        assert_eq!(self.n, other.n, "word rank mismatch");
    }

    pub fn mul(&self, other: &SteinbergWord) -> SteinbergWord {
        self.check_peer(other);
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().cloned());
        SteinbergWord {
            ring: self.ring.clone(),
            n: self.n,
            letters,
        }
    }

    pub fn inverse(&self) -> SteinbergWord {
        SteinbergWord {
            ring: self.ring.clone(),
            n: self.n,
            letters: self.letters.iter().rev().map(Letter::inverse).collect(),
        }
    }

    /// `g * self * g^{-1}`.
    pub fn conjugated_by(&self, g: &SteinbergWord) -> SteinbergWord {
        g.mul(self).mul(&g.inverse())
    }

    /// The product of the transvections named by the letters.
    pub fn phi(&self) -> SympMatrix {
        let mut m = SympMatrix::identity(&self.ring, self.n);
        for l in self.letters.iter().rev() {
            m.left_mul_transvection(l.row, l.col, &l.effective_param());
        }
        m
    }

    pub fn phi_is_identity(&self) -> bool {
        self.phi().is_identity()
    }

    /// Entrywise image of the parameters under a ring homomorphism.
    pub fn map(&self, hom: &Hom) -> Result<SteinbergWord> {
        let mut out = SteinbergWord::identity(&hom.target_ring(), self.n);
        for l in &self.letters {
            out.push(Letter {
                row: l.row,
                col: l.col,
                param: hom.apply(&l.param)?,
                inv: l.inv,
            })?;
        }
        Ok(out)
    }

    /// Greedy reduction: formal cancellations, inverse-to-negation
    /// rewrites, merges of adjacent letters at the same root, and removal
    /// of zero letters, iterated to a fixpoint.  The returned trace
    /// certifies equality with the reduced word.
    pub fn simplify(&self) -> (SteinbergWord, DerivationTrace) {
        let mut word = self.clone();
        let mut steps = Vec::new();
        loop {
            let Some(step) = next_reduction(&word) else {
                break;
            };
            word = step.apply(&word).expect("reduction step must apply");
            steps.push(step);
        }
        (word, DerivationTrace::new(steps))
    }

    /// Parses the word grammar: letters `X(i,j;value)` with an optional
    /// `^-1`, joined by `*`; the identity is written `1`.
    pub fn parse(ring: &Ring, n: usize, s: &str) -> Result<SteinbergWord> {
        let s = s.trim();
        if s == "1" {
            return Ok(SteinbergWord::identity(ring, n));
        }
        let mut word = SteinbergWord::identity(ring, n);
        for piece in split_all_top(s, '*') {
            let piece = piece.trim();
            let (body, inv) = match piece.strip_suffix("^-1") {
                Some(b) => (b.trim(), true),
                None => (piece, false),
            };
            let inner = body
                .strip_prefix("X(")
                .and_then(|r| r.strip_suffix(')'))
                .ok_or_else(|| Error::Parse(format!("bad letter {piece:?}")))?;
            let Some((indices, value)) = inner.split_once(';') else {
                return Err(Error::Parse(format!("letter {piece:?} is missing ';'")));
            };
            let Some((r, c)) = indices.split_once(',') else {
                return Err(Error::Parse(format!("letter {piece:?} needs two indices")));
            };
            let row: i32 = r
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad row index {r:?}")))?;
            let col: i32 = c
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad column index {c:?}")))?;
            let mut letter = Letter::new(n, row, col, parse_value(ring, value.trim())?)?;
            letter.inv = inv;
            word.push(letter)?;
        }
        Ok(word)
    }
}

impl fmt::Display for SteinbergWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", parts.join("*"))
    }
}

impl fmt::Debug for SteinbergWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `a * b * a^{-1} * b^{-1}`.
pub fn commutator(a: &SteinbergWord, b: &SteinbergWord) -> SteinbergWord {
    a.mul(b).mul(&a.inverse()).mul(&b.inverse())
}

/// The first applicable reduction step, scanning left to right.
fn next_reduction(word: &SteinbergWord) -> Option<TraceStep> {
    let ls = word.letters();
    for (p, l) in ls.iter().enumerate() {
        if p + 1 < ls.len() && ls[p + 1] == l.inverse() {
            return Some(TraceStep {
                pos: p,
                op: StepOp::CancelPair {
                    letter: l.clone(),
                    reverse: false,
                },
            });
        }
        if l.inv {
            return Some(TraceStep {
                pos: p,
                op: StepOp::InvToNeg { reverse: false },
            });
        }
        if l.param.is_zero() {
            return Some(TraceStep {
                pos: p,
                op: StepOp::Rewrite {
                    rel: RelInstance::Vanish {
                        row: l.row,
                        col: l.col,
                        ring: word.ring().clone(),
                    },
                    reverse: false,
                },
            });
        }
        if p + 1 < ls.len() {
            let m = &ls[p + 1];
            if !m.inv && m.row == l.row && m.col == l.col {
                return Some(TraceStep {
                    pos: p,
                    op: StepOp::Rewrite {
                        rel: RelInstance::Merge {
                            row: l.row,
                            col: l.col,
                            a: l.param.clone(),
                            b: m.param.clone(),
                        },
                        reverse: false,
                    },
                });
            }
        }
    }
    None
}
