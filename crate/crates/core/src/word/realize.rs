//! Constructors realizing symplectic transvections as generator words.
//!
//! The base case [`x_at_basis`] expands a transvection along a basis vector
//! into explicit letters.  On top of it sit the conjugation construction
//! [`x_element`] for vectors in the orbit of the first basis vector, the
//! two-step construction [`y_element`] for vectors with a symmetric pair of
//! zero coordinates, and [`x_general`], which dispatches between them and
//! splits off basis-pair components when neither applies directly.

use crate::error::{Error, Result};
use crate::ring::{Ring, Value};
use crate::symplectic::{check_index, IndexedVector};
use crate::word::{commutator, Letter, SteinbergWord};

/// Scales a value by the sign of an index.
fn signed(v: &Value, i: i32) -> Value {
    if i > 0 {
        v.clone()
    } else {
        v.neg()
    }
}

/// The word expansion of the transvection along `e_i` with update vector
/// `w` and long-root parameter `b`; requires `w` orthogonal to `e_i`,
/// i.e. `w_{-i} = 0`.
///
/// The letters follow the coordinate order of `w`: a coordinate `w_k`
/// contributes `X(i,-k; w_k sign k)` for `k != i` and `X(i,-i; 2 w_i)` for
/// `k = i`; a trailing long-root letter absorbs `b` and the cross terms
/// collected while splitting `w` into single coordinates.
pub fn x_at_basis(i: i32, w: &IndexedVector, b: &Value) -> Result<SteinbergWord> {
    let ring = w.ring().clone();
    let n = w.rank();
    check_index(i, n)?;
    if b.ring() != &ring {
        return Err(Error::mismatch(&ring, b.ring()));
    }
    if !w.get(-i).is_zero() {
        return Err(Error::NotIsotropicPair {
            form: signed(&w.get(-i), i).to_string(),
        });
    }
    let mut word = SteinbergWord::identity(&ring, n);
    let mut cross = ring.zero();
    for (k, wk) in w.support() {
        if k < 0 && !w.get(-k).is_zero() {
            cross = cross.sub(&wk.mul(&w.get(-k)));
        }
        let letter = if k == i {
            Letter::new(n, i, -i, wk.add(wk))?
        } else {
            Letter::new(n, i, -k, signed(wk, k))?
        };
        if !letter.param().is_zero() {
            word.push(letter)?;
        }
    }
    let tail = b.sub(&cross);
    if !tail.is_zero() {
        word.push(Letter::new(n, i, -i, tail)?)?;
    }
    Ok(word)
}

/// A vector in the orbit of the first basis vector, together with a word
/// witnessing it: `vector = phi(witness) e_1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrbitVector {
    witness: SteinbergWord,
    vector: IndexedVector,
}

impl OrbitVector {
    pub fn from_witness(witness: SteinbergWord) -> OrbitVector {
        let vector = witness.phi().column(1);
        OrbitVector { witness, vector }
    }

    /// The basis vector `e_i`, witnessed by an explicit two-letter word
    /// (empty for `i = 1`).
    pub fn basis(ring: &Ring, n: usize, i: i32) -> Result<OrbitVector> {
        check_index(i, n)?;
        let one = ring.one();
        let word = if i == 1 {
            SteinbergWord::identity(ring, n)
        } else if i == -1 {
            SteinbergWord::from_letters(
                ring,
                n,
                vec![
                    Letter::new(n, 1, -1, one.neg())?,
                    Letter::new(n, -1, 1, one.neg())?,
                ],
            )?
        } else {
            SteinbergWord::from_letters(
                ring,
                n,
                vec![
                    Letter::new(n, 1, i, one.neg())?,
                    Letter::new(n, i, 1, one.clone())?,
                ],
            )?
        };
        Ok(OrbitVector::from_witness(word))
    }

    pub fn witness(&self) -> &SteinbergWord {
        &self.witness
    }

    pub fn vector(&self) -> &IndexedVector {
        &self.vector
    }

    pub fn ring(&self) -> &Ring {
        self.vector.ring()
    }

    pub fn rank(&self) -> usize {
        self.vector.rank()
    }

    /// Prepends a word to the witness, moving the vector along `phi(g)`.
    pub fn translated(&self, g: &SteinbergWord) -> OrbitVector {
        OrbitVector::from_witness(g.mul(&self.witness))
    }
}

/// A pair of vectors jointly in the orbit of `(e_1, e_2)`, with a common
/// witness word.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrbitPair {
    witness: SteinbergWord,
    first: IndexedVector,
    second: IndexedVector,
}

impl OrbitPair {
    pub fn from_witness(witness: SteinbergWord) -> Result<OrbitPair> {
        if witness.rank() < 2 {
            return Err(Error::PreconditionViolated(
                "an orbit pair needs rank at least 2".into(),
            ));
        }
        let m = witness.phi();
        Ok(OrbitPair {
            first: m.column(1),
            second: m.column(2),
            witness,
        })
    }

    pub fn witness(&self) -> &SteinbergWord {
        &self.witness
    }

    pub fn first(&self) -> OrbitVector {
        OrbitVector {
            witness: self.witness.clone(),
            vector: self.first.clone(),
        }
    }

    pub fn second(&self) -> OrbitVector {
        let step = OrbitVector::basis(self.witness.ring(), self.witness.rank(), 2).unwrap();
        OrbitVector::from_witness(self.witness.mul(step.witness()))
    }

    /// The orbit vector `first + second·r`, witnessed by appending the
    /// transvection that shears the first basis column along the second.
    pub fn combination(&self, r: &Value) -> Result<OrbitVector> {
        let shear = SteinbergWord::generator(
            self.witness.ring(),
            self.witness.rank(),
            2,
            1,
            r.clone(),
        )?;
        Ok(OrbitVector::from_witness(self.witness.mul(&shear)))
    }

    pub fn first_vector(&self) -> &IndexedVector {
        &self.first
    }

    pub fn second_vector(&self) -> &IndexedVector {
        &self.second
    }

    pub fn translated(&self, g: &SteinbergWord) -> OrbitPair {
        OrbitPair::from_witness(g.mul(&self.witness)).unwrap()
    }
}

/// The element with projection `T(u, v, a)` for an orbit vector `u`,
/// built by conjugating the basis expansion with the witness.
pub fn x_element(u: &OrbitVector, v: &IndexedVector, a: &Value) -> Result<SteinbergWord> {
    let pairing = u.vector().form(v);
    if !pairing.is_zero() {
        return Err(Error::NotIsotropicPair {
            form: pairing.to_string(),
        });
    }
    let g = u.witness();
    let pulled = g.inverse().phi().apply(v);
    let core = x_at_basis(1, &pulled, a)?;
    Ok(core.conjugated_by(g))
}

/// The element with projection `T(u, v, a)` for a vector `u` vanishing on
/// the symmetric coordinate pair `{i, -i}`.
///
/// The update vector is first stripped of its `{i, -i}` components, the
/// stripped element is expressed through a commutator of two basis
/// expansions, and the removed components return as two trailing factors.
pub fn y_element(
    i: i32,
    u: &IndexedVector,
    v: &IndexedVector,
    a: &Value,
) -> Result<SteinbergWord> {
    let ring = u.ring().clone();
    let n = u.rank();
    check_index(i, n)?;
    if !u.get(i).is_zero() || !u.get(-i).is_zero() {
        return Err(Error::PreconditionViolated(format!(
            "vector must vanish on the pair {{{i}, {}}}",
            -i
        )));
    }
    let pairing = u.form(v);
    if !pairing.is_zero() {
        return Err(Error::NotIsotropicPair {
            form: pairing.to_string(),
        });
    }
    let vi = v.get(i);
    let vmi = v.get(-i);
    let mut stripped = v.clone();
    stripped.set(i, ring.zero())?;
    stripped.set(-i, ring.zero())?;
    let adjusted = a.sub(&signed(&vi.mul(&vmi), i));

    let left = x_at_basis(i, u, &ring.zero())?;
    let right = x_at_basis(-i, &stripped.scale(&signed(&ring.one(), i)), &adjusted)?;
    let fixup = x_at_basis(-i, &u.scale(&signed(&adjusted, -i)), &ring.zero())?;
    let core = commutator(&left, &right).mul(&fixup);

    let tail_i = x_at_basis(i, &u.scale(&vi), &ring.zero())?;
    let tail_mi = x_at_basis(-i, &u.scale(&vmi), &ring.zero())?;
    Ok(core.mul(&tail_i).mul(&tail_mi))
}

/// Smallest positive index whose symmetric coordinate pair vanishes.
pub fn zero_pair(u: &IndexedVector) -> Option<i32> {
    (1..=u.rank() as i32).find(|&i| u.get(i).is_zero() && u.get(-i).is_zero())
}

/// The element with projection `T(u, v, a)` for arbitrary orthogonal
/// vectors, when one of the realization strategies applies:
///
/// * `u = 0`: the transvection is trivial;
/// * `u` has a symmetric zero pair: direct [`y_element`];
/// * `v = 0`: split `u` into a basis-pair component and the rest;
/// * `v` nonzero with a symmetric zero pair: swap `u` and `v` for the
///   `a = 0` part and fall back to the `v = 0` case for the rest.
///
/// Data outside these cases is rejected as unrealizable.
pub fn x_general(u: &IndexedVector, v: &IndexedVector, a: &Value) -> Result<SteinbergWord> {
    let ring = u.ring().clone();
    let n = u.rank();
    let pairing = u.form(v);
    if !pairing.is_zero() {
        return Err(Error::NotIsotropicPair {
            form: pairing.to_string(),
        });
    }
    if u.is_zero() {
        return Ok(SteinbergWord::identity(&ring, n));
    }
    if let Some(i) = zero_pair(u) {
        return y_element(i, u, v, a);
    }
    if v.is_zero() {
        if a.is_zero() {
            return Ok(SteinbergWord::identity(&ring, n));
        }
        // Split u = q + q' with q' the {1,-1} component; then the
        // transvection factors through three zero-pair realizations.
        let mut part = IndexedVector::zero(&ring, n);
        part.set(1, u.get(1))?;
        part.set(-1, u.get(-1))?;
        let rest = u.sub(&part);
        let head = y_element(1, &rest, &IndexedVector::zero(&ring, n), a)?;
        let j = 2;
        let mid = y_element(j, &part, &IndexedVector::zero(&ring, n), a)?;
        let tail = y_element(j, &part, &rest.scale(a), &ring.zero())?;
        return Ok(head.mul(&mid).mul(&tail));
    }
    if let Some(j) = zero_pair(v) {
        // X(u,v,a) factors as X(u,v,0) X(u,0,a); the first factor swaps
        // its arguments, the second recurses into the split above.
        let swapped = y_element(j, v, u, &ring.zero())?;
        if a.is_zero() {
            return Ok(swapped);
        }
        let rest = x_general(u, &IndexedVector::zero(&ring, n), a)?;
        return Ok(swapped.mul(&rest));
    }
    Err(Error::UnrealizableX(format!(
        "no zero coordinate pair in either vector and no zero slot: u = {u}, v = {v}"
    )))
}
