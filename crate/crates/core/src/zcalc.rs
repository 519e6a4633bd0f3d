//! Products of orthogonal-update elements and their scalar refinements.
//!
//! The building block is the list product
//!
//! ```text
//! Z(u; v_1, ..., v_N) = X(u, v_1, 0) ... X(u, v_N, 0) · X(u, 0, -Σ_{i<j} ⟨v_i, v_j⟩)
//! ```
//!
//! whose trailing factor compensates the cross terms, so the projection
//! collapses to a single transvection `T(u, Σ v_k, 0)`. On top of it sit:
//!
//! * [`suslin_decompose`] — splits `v·A` (for `A = ⟨w, u⟩`) into pieces
//!   `v_ij` supported on two coordinates each;
//! * [`z_upper_a`] — `Z^A(u, v)`, the list product over the scaled pieces
//!   `v_ij·A`, with projection `T(u, v·A², 0)`;
//! * [`z_scalar`] — `Z(u, v, b) = Z^{(a^N)}(u, v·b/a^{2N})`, defined
//!   whenever the division contract clears the denominator, with
//!   projection `T(u, v·b, 0)`;
//! * [`z_full`] — `Z(u, v, b, c) = Z(u, v, b)·X(u, 0, c)`.
//!
//! Scalar variants certify `a^N ∈ I(u)` constructively: orbit vectors use
//! the canonical witness built from their own witness word, plain vectors
//! go through the bounded [`column_witness`] search.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::ring::Value;
use crate::symplectic::{sign, signed_indices, IndexedVector, SympMatrix};
use crate::word::{x_element, x_general, OrbitVector, SteinbergWord};

/// The two-coordinate pieces `v_ij` of `v·A`, keyed by the signed index
/// pair `i < j`. Zero pieces are omitted.
#[derive(Clone, Debug)]
pub struct SuslinDecomposition {
    u: IndexedVector,
    v: IndexedVector,
    w: IndexedVector,
    a: Value,
    parts: BTreeMap<(i32, i32), IndexedVector>,
}

impl SuslinDecomposition {
    pub fn u(&self) -> &IndexedVector {
        &self.u
    }

    pub fn v(&self) -> &IndexedVector {
        &self.v
    }

    pub fn witness(&self) -> &IndexedVector {
        &self.w
    }

    /// The pairing `A = ⟨w, u⟩`.
    pub fn a_value(&self) -> &Value {
        &self.a
    }

    pub fn parts(&self) -> &BTreeMap<(i32, i32), IndexedVector> {
        &self.parts
    }

    pub fn part_vectors(&self) -> Vec<IndexedVector> {
        self.parts.values().cloned().collect()
    }

    pub fn sum(&self) -> IndexedVector {
        let mut acc = IndexedVector::zero(self.u.ring(), self.u.rank());
        for part in self.parts.values() {
            acc = acc.add(part);
        }
        acc
    }
}

impl fmt::Display for SuslinDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A={}", self.a)?;
        for ((i, j), part) in &self.parts {
            write!(f, ", v[{i},{j}]={part}")?;
        }
        Ok(())
    }
}

/// The piece `v_ij = (e_i·u_{-j}·sign j - e_j·u_{-i}·sign i)·(v_i·w_j - v_j·w_i)`.
pub fn suslin_part(
    u: &IndexedVector,
    v: &IndexedVector,
    w: &IndexedVector,
    i: i32,
    j: i32,
) -> IndexedVector {
    let ring = u.ring().clone();
    let coeff = v.get(i).mul(&w.get(j)).sub(&v.get(j).mul(&w.get(i)));
    let mut base = IndexedVector::zero(&ring, u.rank());
    let sj = ring.from_i64(sign(j) as i64);
    let si = ring.from_i64(sign(i) as i64);
    base.set(i, u.get(-j).mul(&sj)).unwrap();
    base.set(j, base.get(j).sub(&u.get(-i).mul(&si))).unwrap();
    base.scale(&coeff)
}

/// Split `v·A` into two-coordinate pieces along a witness `w` with
/// `A = ⟨w, u⟩`, requiring `⟨u, v⟩ = 0`.
pub fn suslin_decompose(
    u: &IndexedVector,
    v: &IndexedVector,
    w: &IndexedVector,
) -> Result<SuslinDecomposition> {
    let pairing = u.form(v);
    if !pairing.is_zero() {
        return Err(Error::NotIsotropicPair {
            form: pairing.to_string(),
        });
    }
    let n = u.rank();
    let mut parts = BTreeMap::new();
    for i in signed_indices(n) {
        for j in signed_indices(n) {
            if i >= j {
                continue;
            }
            let part = suslin_part(u, v, w, i, j);
            if !part.is_zero() {
                parts.insert((i, j), part);
            }
        }
    }
    Ok(SuslinDecomposition {
        u: u.clone(),
        v: v.clone(),
        w: w.clone(),
        a: w.form(u),
        parts,
    })
}

/// Which constructor produced a [`ZElement`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZTag {
    List,
    UpperA,
    Scalar,
    Full,
}

/// A realized list product together with the transvection product its
/// projection must equal.
#[derive(Clone, Debug)]
pub struct ZElement {
    tag: ZTag,
    word: SteinbergWord,
    target: SympMatrix,
}

impl ZElement {
    pub fn tag(&self) -> ZTag {
        self.tag
    }

    pub fn word(&self) -> &SteinbergWord {
        &self.word
    }

    pub fn into_word(self) -> SteinbergWord {
        self.word
    }

    pub fn target(&self) -> &SympMatrix {
        &self.target
    }

    /// Whether the realized word projects onto the documented target.
    pub fn projects_onto_target(&self) -> bool {
        self.word.phi() == self.target
    }
}

/// The cross-term compensation scalar `-Σ_{i<j} ⟨v_i, v_j⟩`.
fn cross_term(parts: &[IndexedVector], ring: &crate::ring::Ring) -> Value {
    let mut acc = ring.zero();
    for (i, vi) in parts.iter().enumerate() {
        for vj in parts.iter().skip(i + 1) {
            acc = acc.add(&vi.form(vj));
        }
    }
    acc.neg()
}

/// `Z(u; v_1, ..., v_N)` for an orbit vector `u`.
pub fn z_list(u: &OrbitVector, parts: &[IndexedVector]) -> Result<ZElement> {
    let ring = u.ring().clone();
    let n = u.rank();
    let mut word = SteinbergWord::identity(&ring, n);
    let mut target = SympMatrix::identity(&ring, n);
    for part in parts {
        word = word.mul(&x_element(u, part, &ring.zero())?);
        target = target.mul(&SympMatrix::esd(u.vector(), part, &ring.zero())?);
    }
    let tail = cross_term(parts, &ring);
    word = word.mul(&x_element(u, &IndexedVector::zero(&ring, n), &tail)?);
    target = target.mul(&SympMatrix::esd(
        u.vector(),
        &IndexedVector::zero(&ring, n),
        &tail,
    )?);
    Ok(ZElement {
        tag: ZTag::List,
        word,
        target,
    })
}

/// `Z(u; v_1, ..., v_N)` for a plain vector `u`; every part must then be
/// realizable through the general-case construction, which in practice
/// means each part carries a symmetric pair of zero coordinates.
pub fn z_list_free(u: &IndexedVector, parts: &[IndexedVector]) -> Result<ZElement> {
    let ring = u.ring().clone();
    let n = u.rank();
    let mut word = SteinbergWord::identity(&ring, n);
    let mut target = SympMatrix::identity(&ring, n);
    for part in parts {
        word = word.mul(&x_general(u, part, &ring.zero())?);
        target = target.mul(&SympMatrix::esd(u, part, &ring.zero())?);
    }
    let tail = cross_term(parts, &ring);
    word = word.mul(&x_general(u, &IndexedVector::zero(&ring, n), &tail)?);
    target = target.mul(&SympMatrix::esd(u, &IndexedVector::zero(&ring, n), &tail)?);
    Ok(ZElement {
        tag: ZTag::List,
        word,
        target,
    })
}

/// `Z^A(u, v) = Z(u; {v_ij·A}_{i<j})` along the witness `w`, with
/// projection target `T(u, v·A², 0)`.
pub fn z_upper_a(
    u: &OrbitVector,
    v: &IndexedVector,
    w: &IndexedVector,
) -> Result<ZElement> {
    let decomposition = suslin_decompose(u.vector(), v, w)?;
    let a = decomposition.a_value().clone();
    let parts: Vec<IndexedVector> = decomposition
        .part_vectors()
        .into_iter()
        .map(|p| p.scale(&a))
        .collect();
    let listed = z_list(u, &parts)?;
    let target = SympMatrix::esd(u.vector(), &v.scale(&a.pow(2)), &u.ring().zero())?;
    Ok(ZElement {
        tag: ZTag::UpperA,
        word: listed.word,
        target,
    })
}

/// The canonical column witness of an orbit vector: `-φ(M)e_{-1}·scale`
/// pairs with `u = φ(M)e_1` to `⟨w, u⟩ = scale`.
pub fn canonical_witness(u: &OrbitVector, scale: &Value) -> IndexedVector {
    let minus_one = OrbitVector::basis(u.ring(), u.rank(), -1).unwrap();
    u.witness()
        .phi()
        .apply(minus_one.vector())
        .neg()
        .scale(scale)
}

/// Search for a vector `w` with `⟨w, u⟩ = target`, trying single scaled
/// basis columns: slot `-m` contributes `sign(-m)·u_m`, so any entry of
/// `u` dividing the target yields a witness.
pub fn column_witness(u: &IndexedVector, target: &Value) -> Result<IndexedVector> {
    let ring = u.ring().clone();
    for (m, entry) in u.support() {
        if let Ok(quotient) = target.exact_div(entry) {
            let mut w = IndexedVector::zero(&ring, u.rank());
            let s = ring.from_i64(sign(-m) as i64);
            w.set(-m, quotient.mul(&s))?;
            debug_assert_eq!(&w.form(u), target);
            return Ok(w);
        }
    }
    Err(Error::NoColumnWitness(format!(
        "no entry of {u} divides {target}"
    )))
}

/// `Z(u, v, b) = Z^{(a^N)}(u, v·b/a^{2N})` with the canonical witness
/// scaled to `a^N`, and projection target `T(u, v·b, 0)`.
pub fn z_scalar(
    u: &OrbitVector,
    v: &IndexedVector,
    b: &Value,
    a: &Value,
    n_pow: u32,
) -> Result<ZElement> {
    let w = canonical_witness(u, &a.pow(n_pow));
    let scaled = v.scale(&b.exact_div(&a.pow(2 * n_pow))?);
    let lifted = z_upper_a(u, &scaled, &w)?;
    let target = SympMatrix::esd(u.vector(), &v.scale(b), &u.ring().zero())?;
    Ok(ZElement {
        tag: ZTag::Scalar,
        word: lifted.word,
        target,
    })
}

/// `Z(u, v, b, c) = Z(u, v, b)·X(u, 0, c)` with projection target
/// `T(u, v·b, 0)·T(u, 0, c)`.
pub fn z_full(
    u: &OrbitVector,
    v: &IndexedVector,
    b: &Value,
    c: &Value,
    a: &Value,
    n_pow: u32,
) -> Result<ZElement> {
    let ring = u.ring().clone();
    let n = u.rank();
    let scalar = z_scalar(u, v, b, a, n_pow)?;
    let zero = IndexedVector::zero(&ring, n);
    let word = scalar.word.mul(&x_element(u, &zero, c)?);
    let target = scalar
        .target
        .mul(&SympMatrix::esd(u.vector(), &zero, c)?);
    Ok(ZElement {
        tag: ZTag::Full,
        word,
        target,
    })
}

/// `Z^A(u, v)` for a plain base vector; every scaled piece realizes
/// through the general-case construction.
pub fn z_upper_a_free(
    u: &IndexedVector,
    v: &IndexedVector,
    w: &IndexedVector,
) -> Result<ZElement> {
    let decomposition = suslin_decompose(u, v, w)?;
    let a = decomposition.a_value().clone();
    let parts: Vec<IndexedVector> = decomposition
        .part_vectors()
        .into_iter()
        .map(|p| p.scale(&a))
        .collect();
    let listed = z_list_free(u, &parts)?;
    let target = SympMatrix::esd(u, &v.scale(&a.pow(2)), &u.ring().zero())?;
    Ok(ZElement {
        tag: ZTag::UpperA,
        word: listed.word,
        target,
    })
}

/// `Z(u, v, b)` along an explicit witness `w`: with `A = ⟨w, u⟩` the
/// element is `Z^A(u, v·(b/A²))`, with projection target `T(u, v·b, 0)`.
pub fn z_scalar_free(
    u: &IndexedVector,
    v: &IndexedVector,
    b: &Value,
    w: &IndexedVector,
) -> Result<ZElement> {
    let a = w.form(u);
    let scaled = v.scale(&b.exact_div(&a.pow(2))?);
    let lifted = z_upper_a_free(u, &scaled, w)?;
    let target = SympMatrix::esd(u, &v.scale(b), &u.ring().zero())?;
    Ok(ZElement {
        tag: ZTag::Scalar,
        word: lifted.word,
        target,
    })
}

/// `Z(u, v, b, c)` along an explicit witness `w`.
pub fn z_full_free(
    u: &IndexedVector,
    v: &IndexedVector,
    b: &Value,
    c: &Value,
    w: &IndexedVector,
) -> Result<ZElement> {
    let ring = u.ring().clone();
    let zero = IndexedVector::zero(&ring, u.rank());
    let scalar = z_scalar_free(u, v, b, w)?;
    let word = scalar.word.mul(&x_general(u, &zero, c)?);
    let target = scalar.target.mul(&SympMatrix::esd(u, &zero, c)?);
    Ok(ZElement {
        tag: ZTag::Full,
        word,
        target,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;
    use crate::sample::{
        random_orthogonal_to, random_value, random_word, rng_for,
    };
    use crate::word::OrbitPair;
    use rand::seq::SliceRandom;
    use rand::Rng;

    fn mixed_ring() -> Ring {
        let z = Ring::int();
        Ring::mixed_b(&z, &z.from_i64(2)).unwrap()
    }

    fn random_vector(ring: &Ring, n: usize, rng: &mut impl Rng) -> IndexedVector {
        let mut v = IndexedVector::zero(ring, n);
        for i in signed_indices(n) {
            v.set(i, random_value(ring, rng)).unwrap();
        }
        v
    }

    #[test]
    fn suslin_single_piece_example() {
        let ring = Ring::int();
        let n = 3;
        let u = IndexedVector::basis(&ring, n, 1).unwrap();
        let v = IndexedVector::basis(&ring, n, 2).unwrap();
        let w = IndexedVector::basis(&ring, n, -1).unwrap().neg();
        let d = suslin_decompose(&u, &v, &w).unwrap();
        assert!(d.a_value().is_one());
        assert_eq!(d.parts().len(), 1);
        assert_eq!(d.parts()[&(-1, 2)], v);
        assert_eq!(d.sum(), v);
    }

    #[test]
    fn suslin_invariants_hold_on_random_triples() {
        for spec in ["Z", "Z/7"] {
            let ring = crate::ring::parse_ring(spec).unwrap();
            for n in [3usize, 4] {
                let mut rng = rng_for(21, "suslin");
                for _ in 0..120 {
                    let u = random_vector(&ring, n, &mut rng);
                    let w = random_vector(&ring, n, &mut rng);
                    let v = random_orthogonal_to(&u, &mut rng);
                    let d = suslin_decompose(&u, &v, &w).unwrap();
                    assert_eq!(d.sum(), v.scale(d.a_value()));
                    for ((i, j), part) in d.parts() {
                        assert!(u.form(part).is_zero());
                        assert_eq!(part, &suslin_part(&u, &v, &w, *j, *i));
                        let zero_pair = (1..=n as i32).any(|m| {
                            part.get(m).is_zero() && part.get(-m).is_zero()
                        });
                        assert!(zero_pair, "part at ({i},{j}) lacks a zero pair");
                    }
                }
            }
        }
    }

    #[test]
    fn suslin_of_zero_update_is_empty() {
        let ring = Ring::int();
        let n = 3;
        let mut rng = rng_for(22, "suslin-zero");
        let u = random_vector(&ring, n, &mut rng);
        let w = random_vector(&ring, n, &mut rng);
        let v = IndexedVector::zero(&ring, n);
        let d = suslin_decompose(&u, &v, &w).unwrap();
        assert!(d.parts().is_empty());
    }

    #[test]
    fn list_products_match_their_targets() {
        let ring = Ring::int();
        let n = 3;
        let mut rng = rng_for(23, "zlist");
        for _ in 0..25 {
            let g = random_word(&ring, n, 3, &mut rng);
            let u = OrbitVector::from_witness(g);
            let parts: Vec<IndexedVector> = (0..rng.gen_range(0..=3usize))
                .map(|_| random_orthogonal_to(u.vector(), &mut rng))
                .collect();
            let z = z_list(&u, &parts).unwrap();
            assert!(z.projects_onto_target());

            let total = parts
                .iter()
                .fold(IndexedVector::zero(&ring, n), |acc, p| acc.add(p));
            let collapsed =
                SympMatrix::esd(u.vector(), &total, &ring.zero()).unwrap();
            assert_eq!(z.word().phi(), collapsed);
        }
    }

    #[test]
    fn empty_list_realizes_the_identity() {
        let ring = Ring::int();
        let u = OrbitVector::basis(&ring, 3, 1).unwrap();
        let z = z_list(&u, &[]).unwrap();
        assert!(z.word().phi_is_identity());
    }

    #[test]
    fn permuting_zero_pair_parts_fixes_the_projection() {
        let ring = Ring::int();
        let n = 3;
        let mut rng = rng_for(24, "zperm");
        for _ in 0..20 {
            let g = random_word(&ring, n, 3, &mut rng);
            let u = OrbitVector::from_witness(g);
            let w = random_vector(&ring, n, &mut rng);
            let v = random_orthogonal_to(u.vector(), &mut rng);
            let d = suslin_decompose(u.vector(), &v, &w).unwrap();
            let mut parts = d.part_vectors();
            let direct = z_list(&u, &parts).unwrap();
            parts.shuffle(&mut rng);
            let shuffled = z_list(&u, &parts).unwrap();
            assert_eq!(direct.word().phi(), shuffled.word().phi());
        }
    }

    #[test]
    fn upper_a_projects_to_the_squared_scale_transvection() {
        let ring = Ring::int();
        let n = 3;

        let u = OrbitVector::basis(&ring, n, 1).unwrap();
        let v = IndexedVector::basis(&ring, n, 2).unwrap();
        let w = IndexedVector::basis(&ring, n, -1).unwrap().neg();
        let z = z_upper_a(&u, &v, &w).unwrap();
        assert_eq!(
            *z.target(),
            SympMatrix::esd(u.vector(), &v, &ring.zero()).unwrap()
        );
        assert!(z.projects_onto_target());

        let mut rng = rng_for(25, "zupper");
        for _ in 0..25 {
            let g = random_word(&ring, n, 3, &mut rng);
            let u = OrbitVector::from_witness(g);
            let v = random_orthogonal_to(u.vector(), &mut rng);
            let w = random_vector(&ring, n, &mut rng);
            let z = z_upper_a(&u, &v, &w).unwrap();
            assert!(z.projects_onto_target());
        }
    }

    #[test]
    fn upper_a_of_zero_update_is_the_identity() {
        let ring = Ring::int();
        let n = 3;
        let mut rng = rng_for(26, "zupper-zero");
        let g = random_word(&ring, n, 3, &mut rng);
        let u = OrbitVector::from_witness(g);
        let w = random_vector(&ring, n, &mut rng);
        let z = z_upper_a(&u, &IndexedVector::zero(&ring, n), &w).unwrap();
        assert!(z.word().phi_is_identity());
    }

    #[test]
    fn upper_a_is_witness_independent_at_the_projection_level() {
        let ring = Ring::int();
        let n = 3;
        let mut rng = rng_for(27, "zwitness");
        for _ in 0..20 {
            let g = random_word(&ring, n, 3, &mut rng);
            let u = OrbitVector::from_witness(g);
            let v = random_orthogonal_to(u.vector(), &mut rng);
            let w = random_vector(&ring, n, &mut rng);
            let shift = random_orthogonal_to(u.vector(), &mut rng);
            let w_alt = w.add(&shift);
            assert_eq!(w.form(u.vector()), w_alt.form(u.vector()));
            let z = z_upper_a(&u, &v, &w).unwrap();
            let z_alt = z_upper_a(&u, &v, &w_alt).unwrap();
            assert_eq!(z.word().phi(), z_alt.word().phi());
        }
    }

    #[test]
    fn scalar_element_projects_to_the_plain_transvection() {
        let ring = mixed_ring();
        let n = 3;
        let a = crate::ring::parse_value(&ring, "(2|0)").unwrap();
        let mut rng = rng_for(28, "zscalar");
        for _ in 0..20 {
            let g = random_word(&ring, n, 2, &mut rng);
            let u = OrbitVector::from_witness(g);
            let v = random_orthogonal_to(u.vector(), &mut rng);
            let b = crate::sample::random_ideal_value(&ring, &mut rng);
            for n_pow in [0u32, 1, 2] {
                let z = z_scalar(&u, &v, &b, &a, n_pow).unwrap();
                assert!(z.projects_onto_target(), "failed at exponent {n_pow}");
                assert_eq!(
                    *z.target(),
                    SympMatrix::esd(u.vector(), &v.scale(&b), &ring.zero())
                        .unwrap()
                );
            }
        }
    }

    #[test]
    fn scalar_element_with_zero_parameter_is_trivial() {
        let ring = mixed_ring();
        let n = 3;
        let a = crate::ring::parse_value(&ring, "(2|0)").unwrap();
        let u = OrbitVector::basis(&ring, n, 1).unwrap();
        let v = IndexedVector::basis(&ring, n, 2).unwrap();
        let z = z_scalar(&u, &v, &ring.zero(), &a, 1).unwrap();
        assert!(z.word().phi_is_identity());
    }

    #[test]
    fn full_element_appends_the_long_root_factor() {
        let ring = mixed_ring();
        let n = 3;
        let a = crate::ring::parse_value(&ring, "(2|0)").unwrap();
        let mut rng = rng_for(29, "zfull");
        for _ in 0..10 {
            let g = random_word(&ring, n, 2, &mut rng);
            let u = OrbitVector::from_witness(g);
            let v = random_orthogonal_to(u.vector(), &mut rng);
            let b = crate::sample::random_ideal_value(&ring, &mut rng);
            let c = crate::sample::random_ideal_value(&ring, &mut rng);
            let z = z_full(&u, &v, &b, &c, &a, 1).unwrap();
            assert!(z.projects_onto_target());
        }
        let u = OrbitVector::basis(&ring, n, 1).unwrap();
        let c = crate::sample::random_ideal_value(&ring, &mut rng);
        let z = z_full(
            &u,
            &IndexedVector::zero(&ring, n),
            &ring.zero(),
            &c,
            &a,
            0,
        )
        .unwrap();
        let expected =
            SympMatrix::esd(u.vector(), &IndexedVector::zero(&ring, n), &c).unwrap();
        assert_eq!(z.word().phi(), expected);
    }

    #[test]
    fn canonical_witness_pairs_to_the_requested_scale() {
        let ring = mixed_ring();
        let n = 3;
        let a = crate::ring::parse_value(&ring, "(2|0)").unwrap();
        let mut rng = rng_for(30, "witness");
        for _ in 0..20 {
            let g = random_word(&ring, n, 3, &mut rng);
            let u = OrbitVector::from_witness(g);
            let scale = a.pow(rng.gen_range(0..3));
            let w = canonical_witness(&u, &scale);
            assert_eq!(w.form(u.vector()), scale);
        }
    }

    #[test]
    fn column_witness_search_covers_divisible_entries() {
        let ring = Ring::int();
        let n = 3;
        let mut u = IndexedVector::zero(&ring, n);
        u.set(2, ring.from_i64(4)).unwrap();
        u.set(-3, ring.from_i64(6)).unwrap();
        let w = column_witness(&u, &ring.from_i64(8)).unwrap();
        assert_eq!(w.form(&u), ring.from_i64(8));

        let err = column_witness(&u, &ring.from_i64(9));
        assert!(matches!(err, Err(Error::NoColumnWitness(_))));
    }

    #[test]
    fn explicit_witness_elements_project_correctly() {
        let ring = Ring::int();
        let n = 3;
        let mut rng = rng_for(33, "zexplicit");
        for _ in 0..15 {
            let u = random_vector(&ring, n, &mut rng);
            let v = random_orthogonal_to(&u, &mut rng);
            let w = random_vector(&ring, n, &mut rng);
            let a = w.form(&u);
            if a.is_zero() {
                continue;
            }
            let b = a.pow(2).mul(&random_value(&ring, &mut rng));
            let c = random_value(&ring, &mut rng);
            let z = z_full_free(&u, &v, &b, &c, &w).unwrap();
            assert!(z.projects_onto_target());
            let expected = SympMatrix::esd(&u, &v.scale(&b), &c).unwrap();
            assert_eq!(z.word().phi(), expected);
        }
    }

    #[test]
    fn x_equals_z_at_the_projection_level() {
        let ring = Ring::int();
        let n = 3;
        let mut rng = rng_for(31, "x=z");
        for _ in 0..20 {
            let g = random_word(&ring, n, 3, &mut rng);
            let pair = OrbitPair::from_witness(g).unwrap();
            let u = pair.first();
            let v = pair.second_vector().scale(&random_value(&ring, &mut rng));
            let w = random_vector(&ring, n, &mut rng);
            let d = suslin_decompose(u.vector(), &v, &w).unwrap();
            let lhs = x_element(&u, &v.scale(d.a_value()), &ring.zero()).unwrap();
            let rhs = z_list(&u, &d.part_vectors()).unwrap();
            assert_eq!(lhs.phi(), rhs.word().phi());
        }
    }

    #[test]
    fn free_list_product_accepts_non_orbit_base_vectors() {
        let ring = Ring::int();
        let n = 3;
        let mut rng = rng_for(32, "zfree");
        for _ in 0..15 {
            let u = random_vector(&ring, n, &mut rng);
            let w = random_vector(&ring, n, &mut rng);
            let v = random_orthogonal_to(&u, &mut rng);
            let d = suslin_decompose(&u, &v, &w).unwrap();
            let z = z_list_free(&u, &d.part_vectors()).unwrap();
            assert!(z.projects_onto_target());
        }
    }
}
