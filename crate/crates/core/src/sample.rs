//! Seeded random generation of ring elements.
//!
//! All generation is deterministic in the supplied RNG; checker runs derive
//! their RNG from `(seed, relation id)` so reports are reproducible.

use crate::ring::{Ring, RingKind, Value};
use crate::symplectic::{sign, signed_indices, IndexedVector};
use crate::word::{Letter, SteinbergWord};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Bound on random integer entries, matching the CI ring defaults.
pub const INT_BOUND: i64 = 20;

/// A random element of the ring, kept small enough for exact desk-scale
/// arithmetic: integers within `±INT_BOUND`, polynomials of degree <= 2 with
/// at most three terms, fractions with denominator exponent <= 2.
pub fn random_value(ring: &Ring, rng: &mut impl Rng) -> Value {
    match ring.kind() {
        RingKind::Int => ring.from_i64(rng.gen_range(-INT_BOUND..=INT_BOUND)),
        RingKind::IntMod { modulus } => {
            let m = modulus.try_into().unwrap_or(i64::MAX);
            ring.from_i64(rng.gen_range(0..m))
        }
        RingKind::Poly { base, vars } => {
            let nterms = rng.gen_range(0..=2usize);
            let mut terms = Vec::new();
            for _ in 0..=nterms {
                let mono: Vec<u32> = (0..vars.len())
                    .map(|_| rng.gen_range(0..=2u32))
                    .collect();
                terms.push((mono, random_value(base, rng)));
            }
            Value::poly_from_terms(ring, terms).unwrap()
        }
        RingKind::Localized { base, .. } => {
            let num = random_value(base, rng);
            let pow = rng.gen_range(0..=2u32);
            Value::frac_from_parts(ring, num, pow).unwrap()
        }
        RingKind::MixedB { base, .. } => {
            let head = random_value(base, rng);
            let tail = random_ideal_value(ring, rng);
            let (_, t) = tail.mixed_parts().unwrap();
            Value::mixed_from_parts(ring, head, t.clone()).unwrap()
        }
    }
}

/// A random nonzero element.
pub fn random_nonzero(ring: &Ring, rng: &mut impl Rng) -> Value {
    for _ in 0..64 {
        let v = random_value(ring, rng);
        if !v.is_zero() {
            return v;
        }
    }
    ring.one()
}

/// A random element of the canonical split ideal of the ring:
///
/// * for `R[x]` — a polynomial with zero constant term;
/// * for `B(R,a)` — a pair `(0, f)`;
/// * otherwise — any element (the ideal is the whole ring).
pub fn random_ideal_value(ring: &Ring, rng: &mut impl Rng) -> Value {
    match ring.kind() {
        RingKind::Poly { base, vars } => {
            let nterms = rng.gen_range(1..=2usize);
            let mut terms = Vec::new();
            for _ in 0..nterms {
                let mut mono: Vec<u32> =
                    (0..vars.len()).map(|_| rng.gen_range(0..=2u32)).collect();
                if mono.iter().all(|&e| e == 0) {
                    mono[0] = 1;
                }
                terms.push((mono, random_value(base, rng)));
            }
            Value::poly_from_terms(ring, terms).unwrap()
        }
        RingKind::MixedB { .. } => {
            let tail_ring = ring.mixed_tail_ring().unwrap();
            let deg = rng.gen_range(1..=2u32);
            let loc = ring.mixed_loc_ring().unwrap();
            let mut terms = Vec::new();
            for k in 1..=deg {
                if rng.gen_bool(0.7) {
                    terms.push((vec![k], random_value(&loc, rng)));
                }
            }
            if terms.is_empty() {
                terms.push((vec![1], random_value(&loc, rng)));
            }
            let tail = Value::poly_from_terms(&tail_ring, terms).unwrap();
            let base = ring.base().unwrap();
            Value::mixed_from_parts(ring, base.zero(), tail).unwrap()
        }
        _ => random_value(ring, rng),
    }
}

/// A random small integer image, handy for scalar multiples.
pub fn random_small(ring: &Ring, rng: &mut impl Rng) -> Value {
    ring.from_i64(rng.gen_range(-3..=3i64))
}

/// A random signed index in `{-n..-1, 1..n}`.
pub fn random_index(n: usize, rng: &mut impl Rng) -> i32 {
    crate::symplectic::unslot(rng.gen_range(0..2 * n), n)
}

/// A spanning set of vectors visibly orthogonal to `u`: `u` itself, the
/// basis vectors whose paired entry of `u` vanishes, and the pairwise
/// difference vectors mixing two coordinates of `u`.
pub fn orthogonal_generators(u: &IndexedVector) -> Vec<IndexedVector> {
    let ring = u.ring().clone();
    let n = u.rank();
    let mut gens: Vec<IndexedVector> = vec![u.clone()];
    for m in signed_indices(n) {
        if u.get(-m).is_zero() {
            gens.push(IndexedVector::basis(&ring, n, m).unwrap());
        }
    }
    let support: Vec<i32> = u.support().map(|(k, _)| k).collect();
    for &k in &support {
        for &l in &support {
            if k >= l {
                continue;
            }
            let mut g = IndexedVector::zero(&ring, n);
            let sl = ring.from_i64(sign(l) as i64);
            let sk = ring.from_i64(sign(k) as i64);
            g.set(k, u.get(-l).mul(&sl)).unwrap();
            g.set(l, u.get(-k).mul(&sk).neg()).unwrap();
            if !g.is_zero() {
                gens.push(g);
            }
        }
    }
    gens
}

/// A random vector orthogonal to `u` under the symplectic form, drawn
/// from the span of [`orthogonal_generators`].
pub fn random_orthogonal_to(u: &IndexedVector, rng: &mut impl Rng) -> IndexedVector {
    let ring = u.ring().clone();
    let mut v = IndexedVector::zero(&ring, u.rank());
    for g in orthogonal_generators(u) {
        if rng.gen_bool(0.5) {
            v = v.add(&g.scale(&random_value(&ring, rng)));
        }
    }
    debug_assert!(u.form(&v).is_zero());
    v
}

/// A random word of elementary generators with small parameters.
pub fn random_word(ring: &Ring, n: usize, len: usize, rng: &mut impl Rng) -> SteinbergWord {
    let mut w = SteinbergWord::identity(ring, n);
    for _ in 0..len {
        let row = random_index(n, rng);
        let col = loop {
            let c = random_index(n, rng);
            if c != row {
                break c;
            }
        };
        let mut letter = Letter::new(n, row, col, random_small(ring, rng)).unwrap();
        if rng.gen_bool(0.5) {
            letter = letter.inverse();
        }
        w.push(letter).unwrap();
    }
    w
}

/// Derive a per-check RNG from a run seed and a label.
pub fn rng_for(seed: u64, label: &str) -> ChaCha8Rng {
    use rand::SeedableRng;
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in label.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    ChaCha8Rng::seed_from_u64(seed ^ h)
}

/// The default localization element for building mixed rings over a base:
/// the smallest integer >= 2 whose image is a certified non-zero-divisor.
pub fn default_localization_elem(ring: &Ring) -> Value {
    for n in 2..=7i64 {
        let v = ring.from_i64(n);
        if ring.certify_non_zero_divisor(&v) {
            return v;
        }
    }
    ring.one()
}

