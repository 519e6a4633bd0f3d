//! Seeded relation catalogue.
//!
//! Every defining relation of the generator calculus is recorded here as a
//! catalogue [`Entry`]: an identifier, the family it belongs to, a human
//! readable statement, and a sampler that draws guarded random data and
//! states the claim as an exact matrix equality (or, for the decomposition
//! invariants, a boolean flag).  [`run_entry`] drives a sampler a requested
//! number of times with a deterministic seed and reports failures, shrinking
//! the first counterexample toward unit-sized scalars.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::relative::{
    bracket_action, bracket_coaction, KLWord, SplittingIdeal, TulenbaevLetter, TulenbaevWord,
};
use crate::ring::{Ring, RingKind, Value};
use crate::sample::{
    default_localization_elem, orthogonal_generators, random_ideal_value, random_index,
    random_small, random_value, rng_for,
};
use crate::symplectic::{sign, signed_indices, IndexedVector, SympMatrix};
use crate::word::{
    commutator, x_at_basis, x_element, x_general, y_element, zero_pair, Letter, OrbitPair,
    OrbitVector, SteinbergWord,
};
use crate::zcalc::{
    canonical_witness, suslin_decompose, suslin_part, z_list, z_list_free, z_scalar,
    z_scalar_free, z_upper_a,
};
use crate::{Error, Result};

/// Which derived ring a relation is sampled over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ContextKind {
    /// The configured coefficient ring itself.
    Base,
    /// A ring together with a splitting ideal (polynomial augmentation or
    /// mixed tail), for the relative families.
    Relative,
    /// A mixed extension `B(R, a)` with its distinguished element, for the
    /// scalar-divided families.
    Mixed,
}

/// The rings a catalogue run works over, derived once from the configured
/// base ring.
///
/// A polynomial base already carries its augmentation ideal and a mixed base
/// its tail ideal; any other base is extended by a fresh variable for the
/// relative families and by a mixed tail for the divided families.
#[derive(Clone, Debug)]
pub struct CheckContext {
    ring: Ring,
    n: usize,
    relative_ring: Ring,
    ideal: SplittingIdeal,
    mixed_ring: Ring,
    mixed_a: Value,
}

impl CheckContext {
    pub fn new(ring: &Ring, n: usize) -> Result<CheckContext> {
        if n < 3 {
            return Err(Error::ConfigError(format!(
                "rank must be at least 3, got {n}"
            )));
        }
        let (relative_ring, ideal) = match ring.kind() {
            RingKind::Poly { .. } => (ring.clone(), SplittingIdeal::poly_at_zero(ring)?),
            RingKind::MixedB { .. } => (ring.clone(), SplittingIdeal::mixed_tail(ring)?),
            _ => {
                let extended = Ring::poly(ring, &["s"])?;
                let ideal = SplittingIdeal::poly_at_zero(&extended)?;
                (extended, ideal)
            }
        };
        let mixed_ring = match ring.kind() {
            RingKind::MixedB { .. } => ring.clone(),
            _ => {
                let elem = default_localization_elem(ring);
                ["t", "z", "w", "v"]
                    .iter()
                    .find_map(|var| Ring::mixed_b_with_var(ring, &elem, var).ok())
                    .ok_or_else(|| {
                        Error::ConfigError(format!("no free variable left over {ring}"))
                    })?
            }
        };
        let head = mixed_ring.localization_elem().unwrap().clone();
        let tail_zero = mixed_ring.mixed_tail_ring().unwrap().zero();
        let mixed_a = Value::mixed_from_parts(&mixed_ring, head, tail_zero)?;
        Ok(CheckContext {
            ring: ring.clone(),
            n,
            relative_ring,
            ideal,
            mixed_ring,
            mixed_a,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn relative_ring(&self) -> &Ring {
        &self.relative_ring
    }

    pub fn ideal(&self) -> &SplittingIdeal {
        &self.ideal
    }

    pub fn mixed_ring(&self) -> &Ring {
        &self.mixed_ring
    }

    /// The distinguished element of the mixed context, as a mixed value.
    pub fn mixed_a(&self) -> &Value {
        &self.mixed_a
    }

    pub fn context_ring(&self, kind: ContextKind) -> &Ring {
        match kind {
            ContextKind::Base => &self.ring,
            ContextKind::Relative => &self.relative_ring,
            ContextKind::Mixed => &self.mixed_ring,
        }
    }
}

/// How coarse the drawn scalars are; shrinking re-runs a failing sampler at
/// the finer levels.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum DrawLevel {
    Full,
    Small,
    Unit,
}

/// Deterministic source of scalars, indices and coin flips for one sampler
/// run.
pub struct Draw {
    rng: ChaCha8Rng,
    level: DrawLevel,
}

impl Draw {
    fn new(seed: u64, label: &str, level: DrawLevel) -> Draw {
        Draw {
            rng: rng_for(seed, label),
            level,
        }
    }

    fn value(&mut self, ring: &Ring) -> Value {
        match self.level {
            DrawLevel::Full => random_value(ring, &mut self.rng),
            DrawLevel::Small => random_small(ring, &mut self.rng),
            DrawLevel::Unit => ring.from_i64(self.rng.gen_range(0..=1)),
        }
    }

    fn small(&mut self, ring: &Ring) -> Value {
        match self.level {
            DrawLevel::Full => random_small(ring, &mut self.rng),
            DrawLevel::Small => ring.from_i64(self.rng.gen_range(-1..=1)),
            DrawLevel::Unit => ring.from_i64(self.rng.gen_range(0..=1)),
        }
    }

    fn nonzero(&mut self, ring: &Ring) -> Value {
        for _ in 0..16 {
            let v = self.value(ring);
            if !v.is_zero() {
                return v;
            }
        }
        ring.one()
    }

    /// An element of the splitting ideal of `ring` (augmentation ideal for a
    /// polynomial ring, tail ideal for a mixed ring).
    fn ideal(&mut self, ring: &Ring) -> Value {
        if self.level == DrawLevel::Full {
            return random_ideal_value(ring, &mut self.rng);
        }
        let c = match self.level {
            DrawLevel::Small => self.rng.gen_range(-1..=1),
            _ => self.rng.gen_range(0..=1),
        };
        match ring.kind() {
            RingKind::Poly { base, vars } => {
                let mut mono = vec![0u32; vars.len()];
                mono[0] = 1;
                Value::poly_from_terms(ring, [(mono, base.from_i64(c))]).unwrap()
            }
            RingKind::MixedB { base, .. } => {
                let tail_ring = ring.mixed_tail_ring().unwrap();
                let loc = ring.mixed_loc_ring().unwrap();
                let tail =
                    Value::poly_from_terms(&tail_ring, [(vec![1u32], loc.from_i64(c))]).unwrap();
                Value::mixed_from_parts(ring, base.zero(), tail).unwrap()
            }
            _ => ring.zero(),
        }
    }

    fn index(&mut self, n: usize) -> i32 {
        random_index(n, &mut self.rng)
    }

    fn coin(&mut self) -> bool {
        self.rng.gen_bool(0.6)
    }

    fn pow(&mut self, max: u32) -> u32 {
        match self.level {
            DrawLevel::Full => self.rng.gen_range(0..=max),
            DrawLevel::Small => self.rng.gen_range(0..=max.min(1)),
            DrawLevel::Unit => 0,
        }
    }
}

/// The claim a single sample makes.
enum Claim {
    Matrices(SympMatrix, SympMatrix),
    Holds(bool, String),
}

/// One drawn instance of a relation, with the data that went into it and
/// the claim it asserts.
pub struct Sample {
    bindings: Vec<(String, String)>,
    claim: Claim,
}

impl Sample {
    fn matrices(bindings: Vec<(String, String)>, lhs: SympMatrix, rhs: SympMatrix) -> Sample {
        Sample {
            bindings,
            claim: Claim::Matrices(lhs, rhs),
        }
    }

    fn holds(bindings: Vec<(String, String)>, pass: bool, detail: String) -> Sample {
        Sample {
            bindings,
            claim: Claim::Holds(pass, detail),
        }
    }

    pub fn passes(&self) -> bool {
        match &self.claim {
            Claim::Matrices(lhs, rhs) => lhs == rhs,
            Claim::Holds(ok, _) => *ok,
        }
    }
}

type Checker = fn(&CheckContext, &mut Draw) -> Result<Sample>;

/// One catalogued relation: identifier, family, statement and sampler.
pub struct Entry {
    id: &'static str,
    family: &'static str,
    context: ContextKind,
    statement: &'static str,
    run: Checker,
}

impl Entry {
    pub fn id(&self) -> &'static str {
        self.id
    }

    pub fn family(&self) -> &'static str {
        self.family
    }

    pub fn context(&self) -> ContextKind {
        self.context
    }

    pub fn statement(&self) -> &'static str {
        self.statement
    }
}

/// Result of checking one relation id over one context ring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationRecord {
    pub relation_id: String,
    pub ring: String,
    pub samples: usize,
    pub failures: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_counterexample: Option<Counterexample>,
}

/// The first failing sample of a run, possibly replaced by a smaller one
/// found by re-drawing with unit and small scalars.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub sample: usize,
    pub bindings: Vec<(String, String)>,
    pub lhs: String,
    pub rhs: String,
    pub shrunk: bool,
}

impl Counterexample {
    fn from_sample(index: usize, sample: Sample, shrunk: bool) -> Counterexample {
        let (lhs, rhs) = match sample.claim {
            Claim::Matrices(lhs, rhs) => (lhs.to_string(), rhs.to_string()),
            Claim::Holds(_, detail) => (detail, "invariant".to_string()),
        };
        Counterexample {
            sample: index,
            bindings: sample.bindings,
            lhs,
            rhs,
            shrunk,
        }
    }
}

/// Run one catalogue entry for `samples` draws seeded from `seed`.
pub fn run_entry(
    ctx: &CheckContext,
    entry: &Entry,
    seed: u64,
    samples: usize,
) -> Result<RelationRecord> {
    if samples == 0 {
        return Err(Error::ConfigError("sample count must be positive".into()));
    }
    let ring = ctx.context_ring(entry.context).spec_string();
    let mut draw = Draw::new(seed, entry.id, DrawLevel::Full);
    let mut failures = 0usize;
    let mut first = None;
    for k in 0..samples {
        let sample = (entry.run)(ctx, &mut draw)?;
        if !sample.passes() {
            failures += 1;
            if first.is_none() {
                first = Some(shrink(ctx, entry, seed, k, sample));
            }
        }
    }
    Ok(RelationRecord {
        relation_id: entry.id.to_string(),
        ring,
        samples,
        failures,
        first_counterexample: first,
    })
}

/// Look for a failing sample with unit or small scalars before settling for
/// the one found at full size.
fn shrink(
    ctx: &CheckContext,
    entry: &Entry,
    seed: u64,
    index: usize,
    found: Sample,
) -> Counterexample {
    let label = format!("{}#shrink", entry.id);
    for level in [DrawLevel::Unit, DrawLevel::Small] {
        let mut draw = Draw::new(seed, &label, level);
        for _ in 0..16 {
            if let Ok(sample) = (entry.run)(ctx, &mut draw) {
                if !sample.passes() {
                    return Counterexample::from_sample(index, sample, true);
                }
            }
        }
    }
    Counterexample::from_sample(index, found, false)
}

/// The full relation catalogue in family order.
pub fn entries() -> &'static [Entry] {
    CATALOGUE
}

/// Look up a single entry by its identifier.
pub fn entry(id: &str) -> Option<&'static Entry> {
    CATALOGUE.iter().find(|e| e.id == id)
}

fn sgn(ring: &Ring, i: i32) -> Value {
    ring.from_i64(sign(i) as i64)
}

fn bind(pairs: Vec<(&str, String)>) -> Vec<(String, String)> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

fn distinct_pair(n: usize, d: &mut Draw) -> (i32, i32) {
    let i = d.index(n);
    loop {
        let j = d.index(n);
        if j != i {
            return (i, j);
        }
    }
}

fn draw_vector(ring: &Ring, n: usize, d: &mut Draw, keep: impl Fn(i32) -> bool) -> IndexedVector {
    let mut v = IndexedVector::zero(ring, n);
    for m in signed_indices(n) {
        if keep(m) && d.coin() {
            v.set(m, d.value(ring)).unwrap();
        }
    }
    v
}

/// A vector orthogonal to `u`, drawn from the visible generating set of the
/// orthogonal complement.
fn orthogonal_to(u: &IndexedVector, d: &mut Draw) -> IndexedVector {
    let ring = u.ring().clone();
    let mut v = IndexedVector::zero(&ring, u.rank());
    for g in orthogonal_generators(u) {
        if d.coin() {
            v = v.add(&g.scale(&d.value(&ring)));
        }
    }
    v
}

/// A single scaled orthogonal generator that keeps a symmetric zero pair.
fn orthogonal_part(u: &IndexedVector, d: &mut Draw) -> IndexedVector {
    let ring = u.ring().clone();
    let gens: Vec<IndexedVector> = orthogonal_generators(u)
        .into_iter()
        .filter(|g| zero_pair(g).is_some())
        .collect();
    if gens.is_empty() {
        return IndexedVector::zero(&ring, u.rank());
    }
    let pick = d.rng.gen_range(0..gens.len());
    gens[pick].scale(&d.value(&ring))
}

fn witness(ring: &Ring, n: usize, indices: usize, d: &mut Draw) -> SteinbergWord {
    let mut word = SteinbergWord::identity(ring, n);
    for _ in 0..3 {
        let (row, col) = distinct_pair(indices, d);
        let mut letter = Letter::new(n, row, col, d.small(ring)).unwrap();
        if d.rng.gen_bool(0.5) {
            letter = letter.inverse();
        }
        word.push(letter).unwrap();
    }
    word
}

/// A witness word on all signed indices.
fn full_witness(ring: &Ring, n: usize, d: &mut Draw) -> SteinbergWord {
    witness(ring, n, n, d)
}

/// A witness word avoiding the last index pair, so its matrix fixes the
/// `±n` coordinates.
fn inner_witness(ring: &Ring, n: usize, d: &mut Draw) -> SteinbergWord {
    witness(ring, n, n - 1, d)
}

fn full_orbit(ring: &Ring, n: usize, d: &mut Draw) -> OrbitVector {
    OrbitVector::from_witness(full_witness(ring, n, d))
}

fn inner_orbit(ring: &Ring, n: usize, d: &mut Draw) -> OrbitVector {
    OrbitVector::from_witness(inner_witness(ring, n, d))
}

fn full_pair(ring: &Ring, n: usize, d: &mut Draw) -> OrbitPair {
    OrbitPair::from_witness(full_witness(ring, n, d)).unwrap()
}

fn inner_pair(ring: &Ring, n: usize, d: &mut Draw) -> OrbitPair {
    OrbitPair::from_witness(inner_witness(ring, n, d)).unwrap()
}

/// A vector orthogonal to the first orbit column of `g`, produced by
/// transporting a vector with vanishing `-1` slot.
fn transported_orthogonal(g: &SteinbergWord, d: &mut Draw) -> IndexedVector {
    let picture = draw_vector(g.ring(), g.rank(), d, |m| m != -1);
    g.phi().apply(&picture)
}

/// Like [`transported_orthogonal`], but the picture also avoids the `±n`
/// slots, so under an inner witness the image keeps that zero pair.
fn transported_inner_orthogonal(g: &SteinbergWord, d: &mut Draw) -> IndexedVector {
    let n = g.rank() as i32;
    let picture = draw_vector(g.ring(), g.rank(), d, |m| m != -1 && m.abs() != n);
    g.phi().apply(&picture)
}

/// A vector pairing to `a` with the first orbit column of `g`, transported
/// from `-e_{-1}·a` plus an orthogonal picture.
fn transported_witness_vector(
    g: &SteinbergWord,
    a: &Value,
    d: &mut Draw,
) -> IndexedVector {
    let ring = g.ring().clone();
    let n = g.rank();
    let minus = IndexedVector::basis(&ring, n, -1).unwrap().scale(a).neg();
    let picture = draw_vector(&ring, n, d, |m| m != -1);
    g.phi().apply(&minus.add(&picture))
}

// S family: the elementary generator relations.

fn s0(ctx: &CheckContext, d: &mut Draw) -> Result<Sample> {
    let (ring, n) = (&ctx.ring, ctx.n);
    let (i, j) = distinct_pair(n, d);
    let a = d.value(ring);
    let lhs = SteinbergWord::generator(ring, n, i, j, a.clone())?;
    let mirrored = a.neg().mul(&sgn(ring, i)).mul(&sgn(ring, j));
    let rhs = SteinbergWord::generator(ring, n, -j, -i, mirrored)?;
    Ok(Sample::matrices(
        bind(vec![("i", i.to_string()), ("j", j.to_string()), ("a", a.to_string())]),
        lhs.phi(),
        rhs.phi(),
    ))
}

fn s1(ctx: &CheckContext, d: &mut Draw) -> Result<Sample> {
    let (ring, n) = (&ctx.ring, ctx.n);
    let (i, j) = distinct_pair(n, d);
    let a = d.value(ring);
    let b = d.value(ring);
    let lhs = SteinbergWord::generator(ring, n, i, j, a.clone())?
        .mul(&SteinbergWord::generator(ring, n, i, j, b.clone())?);
    let rhs = SteinbergWord::generator(ring, n, i, j, a.add(&b))?;
    Ok(Sample::matrices(
        bind(vec![("i", i.to_string()), ("j", j.to_string()), ("a", a.to_string()), ("b", b.to_string())]),
        lhs.phi(),
        rhs.phi(),
    ))
}

fn s2(ctx: &CheckContext, d: &mut Draw) -> Result<Sample> {
    let (ring, n) = (&ctx.ring, ctx.n);
    let (i, j) = distinct_pair(n, d);
    let (h, k) = loop {
        let (h, k) = distinct_pair(n, d);
        if h != j && h != -i && k != i && k != -j {
            break (h, k);
        }
    };
    let a = d.value(ring);
    let b = d.value(ring);
    let x = SteinbergWord::generator(ring, n, i, j, a.clone())?;
    let y = SteinbergWord::generator(ring, n, h, k, b.clone())?;
    let lhs = commutator(&x, &y);
    let rhs = SteinbergWord::identity(ring, n);
    Ok(Sample::matrices(
        bind(vec![
            ("i", i.to_string()),
            ("j", j.to_string()),
            ("h", h.to_string()),
            ("k", k.to_string()),
            ("a", a.to_string()),
            ("b", b.to_string()),
        ]),
        lhs.phi(),
        rhs.phi(),
    ))
}

fn s3(ctx: &CheckContext, d: &mut Draw) -> Result<Sample> {
    let (ring, n) = (&ctx.ring, ctx.n);
    let (i, j, k) = loop {
        let i = d.index(n);
        let j = d.index(n);
        let k = d.index(n);
        if i != j && j != k && i != k && i != -j && i != -k && j != -k {
            break (i, j, k);
        }
    };
    let a = d.value(ring);
    let b = d.value(ring);
    let x = SteinbergWord::generator(ring, n, i, j, a.clone())?;
    let y = SteinbergWord::generator(ring, n, j, k, b.clone())?;
    let lhs = commutator(&x, &y);
    let rhs = SteinbergWord::generator(ring, n, i, k, a.mul(&b))?;
    Ok(Sample::matrices(
        bind(vec![
            ("i", i.to_string()),
            ("j", j.to_string()),
            ("k", k.to_string()),
            ("a", a.to_string()),
            ("b", b.to_string()),
        ]),
        lhs.phi(),
        rhs.phi(),
    ))
}

fn s4(ctx: &CheckContext, d: &mut Draw) -> Result<Sample> {
    let (ring, n) = (&ctx.ring, ctx.n);
    let i = d.index(n);
    let j = loop {
        let j = d.index(n);
        if j != i && j != -i {
            break j;
        }
    };
    let a = d.value(ring);
    let b = d.value(ring);
    let x = SteinbergWord::generator(ring, n, i, -i, a.clone())?;
    let y = SteinbergWord::generator(ring, n, -i, j, b.clone())?;
    let lhs = commutator(&x, &y);
    let ab = a.mul(&b);
    let rhs = SteinbergWord::generator(ring, n, i, j, ab.mul(&sgn(ring, i)))?
        .mul(&SteinbergWord::generator(ring, n, -j, j, ab.mul(&b).neg())?);
    Ok(Sample::matrices(
        bind(vec![
            ("i", i.to_string()),
            ("j", j.to_string()),
            ("a", a.to_string()),
            ("b", b.to_string()),
        ]),
        lhs.phi(),
        rhs.phi(),
    ))
}

fn s5(ctx: &CheckContext, d: &mut Draw) -> Result<Sample> {
    let (ring, n) = (&ctx.ring, ctx.n);
    let i = d.index(n);
    let j = loop {
        let j = d.index(n);
        if j != i && j != -i {
            break j;
        }
    };
    let a = d.value(ring);
    let b = d.value(ring);
    let x = SteinbergWord::generator(ring, n, i, j, a.clone())?;
    let y = SteinbergWord::generator(ring, n, j, -i, b.clone())?;
    let lhs = commutator(&x, &y);
    let two_ab = a.mul(&b).mul(&ring.from_i64(2));
    let rhs = SteinbergWord::generator(ring, n, i, -i, two_ab.mul(&sgn(ring, i)))?;
    Ok(Sample::matrices(
        bind(vec![
            ("i", i.to_string()),
            ("j", j.to_string()),
            ("a", a.to_string()),
            ("b", b.to_string()),
        ]),
        lhs.phi(),
        rhs.phi(),
    ))
}

// K family: the column symbol relations for [u, v, a].

fn k1(ctx: &CheckContext, d: &mut Draw) -> Result<Sample> {
    let (ring, n) = (&ctx.ring, ctx.n);
    let g = full_witness(ring, n, d);
    let u = OrbitVector::from_witness(g.clone());
    let v1 = transported_orthogonal(&g, d);
    let v2 = transported_orthogonal(&g, d);
    let a1 = d.value(ring);
    let a2 = d.value(ring);
    let lhs = x_element(&u, &v1, &a1)?.mul(&x_element(&u, &v2, &a2)?);
    let rhs = x_element(&u, &v1.add(&v2), &a1.add(&a2).add(&v1.form(&v2)))?;
    Ok(Sample::matrices(
        bind(vec![
            ("u", u.vector().to_string()),
            ("v1", v1.to_string()),
            ("v2", v2.to_string()),
            ("a1", a1.to_string()),
            ("a2", a2.to_string()),
        ]),
        lhs.phi(),
        rhs.phi(),
    ))
}

fn k2(ctx: &CheckContext, d: &mut Draw) -> Result<Sample> {
    let (ring, n) = (&ctx.ring, ctx.n);
    let pair = full_pair(ring, n, d);
    let b = d.value(ring);
    let zero = ring.zero();
    let lhs = x_element(&pair.first(), &pair.second_vector().scale(&b), &zero)?;
    let rhs = x_element(&pair.second(), &pair.first_vector().scale(&b), &zero)?;
    Ok(Sample::matrices(
        bind(vec![
            ("u1", pair.first_vector().to_string()),
            ("u2", pair.second_vector().to_string()),
            ("b", b.to_string()),
        ]),
        lhs.phi(),
        rhs.phi(),
    ))
}

fn k3(ctx: &CheckContext, d: &mut Draw) -> Result<Sample> {
    let (ring, n) = (&ctx.ring, ctx.n);
    let g = full_witness(ring, n, d);
    let u = OrbitVector::from_witness(g.clone());
    let v = transported_orthogonal(&g, d);
    let a = d.value(ring);
    let gp = full_witness(ring, n, d);
    let up = OrbitVector::from_witness(gp.clone());
    let vp = transported_orthogonal(&gp, d);
    let ap = d.value(ring);
    let p = x_element(&up, &vp, &ap)?;
    let lhs = p.mul(&x_element(&u, &v, &a)?).mul(&p.inverse());
    let t = SympMatrix::esd(up.vector(), &vp, &ap)?;
    let rhs = x_element(&u.translated(&p), &t.apply(&v), &a)?;
    Ok(Sample::matrices(
        bind(vec![
            ("u", u.vector().to_string()),
            ("v", v.to_string()),
            ("a", a.to_string()),
            ("u'", up.vector().to_string()),
            ("v'", vp.to_string()),
            ("a'", ap.to_string()),
        ]),
        lhs.phi(),
        rhs.phi(),
    ))
}

fn k4(ctx: &CheckContext, d: &mut Draw) -> Result<Sample> {
    let (ring, n) = (&ctx.ring, ctx.n);
    let u = full_orbit(ring, n, d);
    let a = d.value(ring);
    let zero = ring.zero();
    let zvec = IndexedVector::zero(ring, n);
    let lhs = x_element(&u, &u.vector().scale(&a), &zero)?;
    let rhs = x_element(&u, &zvec, &a.add(&a))?;
    Ok(Sample::matrices(
        bind(vec![("u", u.vector().to_string()), ("a", a.to_string())]),
        lhs.phi(),
        rhs.phi(),
    ))
}

fn k5(ctx: &CheckContext, d: &mut Draw) -> Result<Sample> {
    let (ring, n) = (&ctx.ring, ctx.n);
    let u = full_orbit(ring, n, d);
    let a = d.value(ring);
    let b = d.value(ring);
    let zvec = IndexedVector::zero(ring, n);
    let lhs = x_general(&u.vector().scale(&b), &zvec, &a)?;
    let rhs = x_element(&u, &zvec, &a.mul(&b).mul(&b))?;
    Ok(Sample::matrices(
        bind(vec![
            ("u", u.vector().to_string()),
            ("b", b.to_string()),
            ("a", a.to_string()),
        ]),
        lhs.phi(),
        rhs.phi(),
    ))
}

fn k6(ctx: &CheckContext, d: &mut Draw) -> Result<Sample> {
    let (ring, n) = (&ctx.ring, ctx.n);
    let pair = full_pair(ring, n, d);
    let a = d.value(ring);
    let zero = ring.zero();
    let zvec = IndexedVector::zero(ring, n);
    let lhs = x_element(&pair.combination(&ring.one())?, &zvec, &a)?;
    let rhs = x_element(&pair.first(), &zvec, &a)?
        .mul(&x_element(&pair.second(), &zvec, &a)?)
        .mul(&x_element(&pair.second(), &pair.first_vector().scale(&a), &zero)?);
    Ok(Sample::matrices(
        bind(vec![
            ("u", pair.first_vector().to_string()),
            ("v", pair.second_vector().to_string()),
            ("a", a.to_string()),
        ]),
        lhs.phi(),
        rhs.phi(),
    ))
}

fn k7(ctx: &CheckContext, d: &mut Draw) -> Result<Sample> {
    let (ring, n) = (&ctx.ring, ctx.n);
    let pair = full_pair(ring, n, d);
    let a = d.value(ring);
    let r = d.value(ring);
    let zero = ring.zero();
    let zvec = IndexedVector::zero(ring, n);
    let lhs = x_element(&pair.combination(&r)?, &zvec, &a)?;
    let rhs = x_element(&pair.first(), &zvec, &a)?
        .mul(&x_element(&pair.second(), &zvec, &a.mul(&r).mul(&r))?)
        .mul(&x_element(&pair.first(), &pair.second_vector().scale(&a.mul(&r)), &zero)?);
    Ok(Sample::matrices(
        bind(vec![
            ("u", pair.first_vector().to_string()),
            ("w", pair.second_vector().to_string()),
            ("a", a.to_string()),
            ("r", r.to_string()),
        ]),
        lhs.phi(),
        rhs.phi(),
    ))
}

// X family: properties of the realized X(u, v, a) elements.

fn x0(ctx: &CheckContext, d: &mut Draw) -> Result<Sample> {
    let (ring, n) = (&ctx.ring, ctx.n);
    let g = full_witness(ring, n, d);
    let u = OrbitVector::from_witness(g.clone());
    let v = transported_orthogonal(&g, d);
    let a = d.value(ring);
    let lhs = x_element(&u, &v, &a)?;
    let rhs = SympMatrix::esd(u.vector(), &v, &a)?;
    Ok(Sample::matrices(
        bind(vec![
            ("u", u.vector().to_string()),
            ("v", v.to_string()),
            ("a", a.to_string()),
        ]),
        lhs.phi(),
        rhs,
    ))
}

fn x1(ctx: &CheckContext, d: &mut Draw) -> Result<Sample> {
    let (ring, n) = (&ctx.ring, ctx.n);
    let g = full_witness(ring, n, d);
    let u = OrbitVector::from_witness(g.clone());
    let v = transported_orthogonal(&g, d);
    let a = d.value(ring);
    let h = full_witness(ring, n, d);
    let lhs = x_element(&u, &v, &a)?.conjugated_by(&h);
    let rhs = x_element(&u.translated(&h), &h.phi().apply(&v), &a)?;
    Ok(Sample::matrices(
        bind(vec![
            ("u", u.vector().to_string()),
            ("v", v.to_string()),
            ("a", a.to_string()),
            ("g", h.to_string()),
        ]),
        lhs.phi(),
        rhs.phi(),
    ))
}

fn x2(ctx: &CheckContext, d: &mut Draw) -> Result<Sample> {
    k5(ctx, d)
}

fn x3(ctx: &CheckContext, d: &mut Draw) -> Result<Sample> {
    let (ring, n) = (&ctx.ring, ctx.n);
    let u = full_orbit(ring, n, d);
    let a = d.value(ring);
    let b = d.value(ring);
    let zvec = IndexedVector::zero(ring, n);
    let lhs = x_element(&u, &zvec, &a)?.mul(&x_element(&u, &zvec, &b)?);
    let rhs = x_element(&u, &zvec, &a.add(&b))?;
    Ok(Sample::matrices(
        bind(vec![
            ("u", u.vector().to_string()),
            ("a", a.to_string()),
            ("b", b.to_string()),
        ]),
        lhs.phi(),
        rhs.phi(),
    ))
}

fn x4(ctx: &CheckContext, d: &mut Draw) -> Result<Sample> {
    let (ring, n) = (&ctx.ring, ctx.n);
    let pair = inner_pair(ring, n, d);
    let c = d.value(ring);
    let zero = ring.zero();
    let u = pair.first_vector().clone();
    let v = pair.second_vector().scale(&c);
    let lhs = x_general(&u, &v, &zero)?;
    let rhs = x_general(&v, &u, &zero)?;
    Ok(Sample::matrices(
        bind(vec![("u", u.to_string()), ("v", v.to_string())]),
        lhs.phi(),
        rhs.phi(),
    ))
}

fn x5(ctx: &CheckContext, d: &mut Draw) -> Result<Sample> {
    let (ring, n) = (&ctx.ring, ctx.n);
    let u = inner_orbit(ring, n, d);
    let a = d.value(ring);
    let b = d.value(ring);
    let zero = ring.zero();
    let zvec = IndexedVector::zero(ring, n);
    let lhs = x_general(&u.vector().scale(&a), &u.vector().scale(&b), &zero)?;
    let ab = a.mul(&b);
    let rhs = x_element(&u, &zvec, &ab.add(&ab))?;
    Ok(Sample::matrices(
        bind(vec![
            ("u", u.vector().to_string()),
            ("a", a.to_string()),
            ("b", b.to_string()),
        ]),
        lhs.phi(),
        rhs.phi(),
    ))
}

fn x6(ctx: &CheckContext, d: &mut Draw) -> Result<Sample> {
    let (ring, n) = (&ctx.ring, ctx.n);
    let pair = full_pair(ring, n, d);
    let one = ring.one();
    let zero = ring.zero();
    let zvec = IndexedVector::zero(ring, n);
    let lhs = x_element(&pair.combination(&one)?, &zvec, &one)?;
    let rhs = x_element(&pair.first(), &zvec, &one)?
        .mul(&x_element(&pair.second(), &zvec, &one)?)
        .mul(&x_element(&pair.first(), pair.second_vector(), &zero)?);
    Ok(Sample::matrices(
        bind(vec![
            ("u", pair.first_vector().to_string()),
            ("v", pair.second_vector().to_string()),
        ]),
        lhs.phi(),
        rhs.phi(),
    ))
}

fn x7(ctx: &CheckContext, d: &mut Draw) -> Result<Sample> {
    let (ring, n) = (&ctx.ring, ctx.n);
    let g = full_witness(ring, n, d);
    let u = OrbitVector::from_witness(g.clone());
    let v = transported_orthogonal(&g, d);
    let a = d.value(ring);
    let zero = ring.zero();
    let zvec = IndexedVector::zero(ring, n);
    let lhs = x_element(&u, &v, &a)?;
    let rhs = x_element(&u, &v, &zero)?.mul(&x_element(&u, &zvec, &a)?);
    Ok(Sample::matrices(
        bind(vec![
            ("u", u.vector().to_string()),
            ("v", v.to_string()),
            ("a", a.to_string()),
        ]),
        lhs.phi(),
        rhs.phi(),
    ))
}

fn x8(ctx: &CheckContext, d: &mut Draw) -> Result<Sample> {
    let (ring, n) = (&ctx.ring, ctx.n);
    let pair = full_pair(ring, n, d);
    let r = d.value(ring);
    let a = d.value(ring);
    let zero = ring.zero();
    let zvec = IndexedVector::zero(ring, n);
    let lhs = x_element(&pair.combination(&r)?, &zvec, &a)?;
    let rhs = x_element(&pair.first(), &zvec, &a)?
        .mul(&x_element(&pair.second(), &zvec, &r.mul(&r).mul(&a))?)
        .mul(&x_element(&pair.first(), &pair.second_vector().scale(&r.mul(&a)), &zero)?);
    Ok(Sample::matrices(
        bind(vec![
            ("u", pair.first_vector().to_string()),
            ("v", pair.second_vector().to_string()),
            ("r", r.to_string()),
            ("a", a.to_string()),
        ]),
        lhs.phi(),
        rhs.phi(),
    ))
}

fn x9(ctx: &CheckContext, d: &mut Draw) -> Result<Sample> {
    let (ring, n) = (&ctx.ring, ctx.n);
    let last = n as i32;
    let u = draw_vector(ring, n, d, |m| m.abs() != last);
    let mut v = orthogonal_to(&u, d);
    v.set(last, ring.zero()).unwrap();
    v.set(-last, ring.zero()).unwrap();
    let a = d.value(ring);
    let zero = ring.zero();
    let lhs = x_general(&u, &v.scale(&a), &zero)?;
    let rhs = x_general(&v, &u.scale(&a), &zero)?;
    Ok(Sample::matrices(
        bind(vec![
            ("u", u.to_string()),
            ("v", v.to_string()),
            ("a", a.to_string()),
        ]),
        lhs.phi(),
        rhs.phi(),
    ))
}

fn x10(ctx: &CheckContext, d: &mut Draw) -> Result<Sample> {
    let (ring, n) = (&ctx.ring, ctx.n);
    let last = n as i32;
    let a = d.value(ring);
    let b = d.value(ring);
    let (u, v, w) = if d.coin() {
        let u = draw_vector(ring, n, d, |m| m.abs() != last);
        let v = orthogonal_to(&u, d);
        let w = orthogonal_to(&u, d);
        (u, v, w)
    } else {
        let alpha = d.nonzero(ring);
        let beta = d.nonzero(ring);
        let mut u = IndexedVector::zero(ring, n);
        u.set(1, alpha.clone()).unwrap();
        u.set(-2, beta.clone()).unwrap();
        for k in 3..=last {
            u.set(k, d.nonzero(ring)).unwrap();
        }
        let side = |d: &mut Draw| {
            let s = d.value(ring);
            let mut v = IndexedVector::zero(ring, n);
            v.set(-1, beta.mul(&s)).unwrap();
            v.set(2, alpha.mul(&s)).unwrap();
            v.set(1, d.value(ring)).unwrap();
            v.set(-2, d.value(ring)).unwrap();
            v
        };
        let v = side(d);
        let w = side(d);
        (u, v, w)
    };
    let lhs = x_general(&u, &v, &a)?.mul(&x_general(&u, &w, &b)?);
    let rhs = x_general(&u, &v.add(&w), &a.add(&b).add(&v.form(&w)))?;
    Ok(Sample::matrices(
        bind(vec![
            ("u", u.to_string()),
            ("v", v.to_string()),
            ("w", w.to_string()),
            ("a", a.to_string()),
            ("b", b.to_string()),
        ]),
        lhs.phi(),
        rhs.phi(),
    ))
}

// Y family: properties of the realized Y_(i)(u, v, a) elements.

fn y_data(
    ctx: &CheckContext,
    d: &mut Draw,
) -> (i32, IndexedVector, IndexedVector) {
    let (ring, n) = (&ctx.ring, ctx.n);
    let i = d.index(n);
    let u = draw_vector(ring, n, d, |m| m.abs() != i.abs());
    let v = orthogonal_to(&u, d);
    (i, u, v)
}

fn y0(ctx: &CheckContext, d: &mut Draw) -> Result<Sample> {
    let (i, u, v) = y_data(ctx, d);
    let a = d.value(&ctx.ring);
    let lhs = y_element(i, &u, &v, &a)?;
    let rhs = SympMatrix::esd(&u, &v, &a)?;
    Ok(Sample::matrices(
        bind(vec![
            ("i", i.to_string()),
            ("u", u.to_string()),
            ("v", v.to_string()),
            ("a", a.to_string()),
        ]),
        lhs.phi(),
        rhs,
    ))
}

fn y1(ctx: &CheckContext, d: &mut Draw) -> Result<Sample> {
    let (ring, n) = (&ctx.ring, ctx.n);
    let (i, j) = loop {
        let i = d.index(n);
        let j = d.index(n);
        if i.abs() != j.abs() {
            break (i, j);
        }
    };
    let u = draw_vector(ring, n, d, |m| m.abs() != i.abs() && m.abs() != j.abs());
    let v = orthogonal_to(&u, d);
    let a = d.value(ring);
    let lhs = y_element(i, &u, &v, &a)?;
    let rhs = y_element(j, &u, &v, &a)?;
    Ok(Sample::matrices(
        bind(vec![
            ("i", i.to_string()),
            ("j", j.to_string()),
            ("u", u.to_string()),
            ("v", v.to_string()),
            ("a", a.to_string()),
        ]),
        lhs.phi(),
        rhs.phi(),
    ))
}

fn y2(ctx: &CheckContext, d: &mut Draw) -> Result<Sample> {
    let (ring, n) = (&ctx.ring, ctx.n);
    let i = d.index(n);
    let w = draw_vector(ring, n, d, |m| m != -i);
    let wp = draw_vector(ring, n, d, |m| m != -i);
    let a = d.value(ring);
    let ap = d.value(ring);
    let lhs = x_at_basis(i, &w, &a)?.mul(&x_at_basis(i, &wp, &ap)?);
    let rhs = x_at_basis(i, &w.add(&wp), &a.add(&ap).add(&w.form(&wp)))?;
    Ok(Sample::matrices(
        bind(vec![
            ("i", i.to_string()),
            ("w", w.to_string()),
            ("w'", wp.to_string()),
            ("a", a.to_string()),
            ("a'", ap.to_string()),
        ]),
        lhs.phi(),
        rhs.phi(),
    ))
}

fn y3(ctx: &CheckContext, d: &mut Draw) -> Result<Sample> {
    let (ring, n) = (&ctx.ring, ctx.n);
    let i = d.index(n);
    let w = draw_vector(ring, n, d, |m| m != -i);
    let a = d.value(ring);
    let e_i = IndexedVector::basis(ring, n, i)?;
    let lhs = x_at_basis(i, &w, &a)?;
    let rhs = x_general(&e_i, &w, &a)?;
    Ok(Sample::matrices(
        bind(vec![
            ("i", i.to_string()),
            ("w", w.to_string()),
            ("a", a.to_string()),
        ]),
        lhs.phi(),
        rhs.phi(),
    ))
}

fn y4(ctx: &CheckContext, d: &mut Draw) -> Result<Sample> {
    let (ring, _) = (&ctx.ring, ctx.n);
    let (i, u, mut vp) = y_data(ctx, d);
    vp.set(i, ring.zero()).unwrap();
    vp.set(-i, ring.zero()).unwrap();
    let a = d.value(ring);
    let zero = ring.zero();
    let lhs = y_element(i, &u, &vp, &a)?;
    let rhs = commutator(
        &x_at_basis(i, &u, &zero)?,
        &x_at_basis(-i, &vp.scale(&sgn(ring, i)), &a)?,
    )
    .mul(&x_at_basis(-i, &u.scale(&a.mul(&sgn(ring, -i))), &zero)?);
    Ok(Sample::matrices(
        bind(vec![
            ("i", i.to_string()),
            ("u", u.to_string()),
            ("v'", vp.to_string()),
            ("a", a.to_string()),
        ]),
        lhs.phi(),
        rhs.phi(),
    ))
}

fn y5(ctx: &CheckContext, d: &mut Draw) -> Result<Sample> {
    let (ring, n) = (&ctx.ring, ctx.n);
    let (i, u, v) = y_data(ctx, d);
    let a = d.value(ring);
    let zero = ring.zero();
    let vi = v.get(i);
    let vmi = v.get(-i);
    let e_i = IndexedVector::basis(ring, n, i)?;
    let e_mi = IndexedVector::basis(ring, n, -i)?;
    let stripped = v.sub(&e_i.scale(&vi)).sub(&e_mi.scale(&vmi));
    let adjusted = a.sub(&vi.mul(&vmi).mul(&sgn(ring, i)));
    let lhs = y_element(i, &u, &v, &a)?;
    let rhs = x_general(&u, &stripped, &adjusted)?
        .mul(&x_at_basis(i, &u.scale(&vi), &zero)?)
        .mul(&x_at_basis(-i, &u.scale(&vmi), &zero)?);
    Ok(Sample::matrices(
        bind(vec![
            ("i", i.to_string()),
            ("u", u.to_string()),
            ("v", v.to_string()),
            ("a", a.to_string()),
        ]),
        lhs.phi(),
        rhs.phi(),
    ))
}

fn y6(ctx: &CheckContext, d: &mut Draw) -> Result<Sample> {
    let (ring, n) = (&ctx.ring, ctx.n);
    let i = d.index(n);
    let q = draw_vector(ring, n, d, |m| m.abs() != i.abs());
    let mut qp = IndexedVector::zero(ring, n);
    qp.set(i, d.value(ring)).unwrap();
    qp.set(-i, d.value(ring)).unwrap();
    let a = d.value(ring);
    let zero = ring.zero();
    let zvec = IndexedVector::zero(ring, n);
    let lhs = x_general(&q.add(&qp), &zvec, &a)?;
    let rhs = y_element(i, &q, &zvec, &a)?
        .mul(&x_general(&qp, &zvec, &a)?)
        .mul(&x_general(&qp, &q.scale(&a), &zero)?);
    Ok(Sample::matrices(
        bind(vec![
            ("i", i.to_string()),
            ("q", q.to_string()),
            ("q'", qp.to_string()),
            ("a", a.to_string()),
        ]),
        lhs.phi(),
        rhs.phi(),
    ))
}

fn y7(ctx: &CheckContext, d: &mut Draw) -> Result<Sample> {
    let (ring, n) = (&ctx.ring, ctx.n);
    let i = d.index(n);
    let j = loop {
        let j = d.index(n);
        if j.abs() != i.abs() {
            break j;
        }
    };
    let r = draw_vector(ring, n, d, |m| m.abs() != i.abs() && m.abs() != j.abs());
    let mut rp = IndexedVector::zero(ring, n);
    rp.set(j, d.value(ring)).unwrap();
    rp.set(-j, d.value(ring)).unwrap();
    let mut s = IndexedVector::zero(ring, n);
    s.set(i, d.value(ring)).unwrap();
    s.set(-i, d.value(ring)).unwrap();
    let zero = ring.zero();
    let lhs = y_element(j, &r, &s, &zero)?.mul(&y_element(i, &rp, &s, &zero)?);
    let rhs = y_element(i, &r.add(&rp), &s, &zero)?;
    Ok(Sample::matrices(
        bind(vec![
            ("i", i.to_string()),
            ("j", j.to_string()),
            ("r", r.to_string()),
            ("r'", rp.to_string()),
            ("s", s.to_string()),
        ]),
        lhs.phi(),
        rhs.phi(),
    ))
}

fn y8(ctx: &CheckContext, d: &mut Draw) -> Result<Sample> {
    let ring = &ctx.ring;
    let (i, u, v) = y_data(ctx, d);
    let a = d.value(ring);
    let b = d.value(ring);
    let zvec = IndexedVector::zero(ring, ctx.n);
    let lhs = y_element(i, &u, &v, &a.add(&b))?;
    let rhs = y_element(i, &u, &v, &a)?.mul(&y_element(i, &u, &zvec, &b)?);
    Ok(Sample::matrices(
        bind(vec![
            ("i", i.to_string()),
            ("u", u.to_string()),
            ("v", v.to_string()),
            ("a", a.to_string()),
            ("b", b.to_string()),
        ]),
        lhs.phi(),
        rhs.phi(),
    ))
}

fn y9(ctx: &CheckContext, d: &mut Draw) -> Result<Sample> {
    let (ring, n) = (&ctx.ring, ctx.n);
    let (i, u, v) = y_data(ctx, d);
    let a = d.value(ring);
    let zero = ring.zero();
    let mut vp = IndexedVector::zero(ring, n);
    vp.set(i, v.get(i)).unwrap();
    vp.set(-i, v.get(-i)).unwrap();
    let lhs = y_element(i, &u, &v, &a)?;
    let rhs = y_element(i, &u, &v.sub(&vp), &a)?.mul(&y_element(i, &u, &vp, &zero)?);
    Ok(Sample::matrices(
        bind(vec![
            ("i", i.to_string()),
            ("u", u.to_string()),
            ("v", v.to_string()),
            ("a", a.to_string()),
        ]),
        lhs.phi(),
        rhs.phi(),
    ))
}

fn y10(ctx: &CheckContext, d: &mut Draw) -> Result<Sample> {
    let ring = &ctx.ring;
    let (i, u, v) = y_data(ctx, d);
    let a = d.value(ring);
    let zero = ring.zero();
    let zvec = IndexedVector::zero(ring, ctx.n);
    let lhs = x_general(&u.add(&v), &zvec, &a)?;
    let rhs = x_general(&u, &zvec, &a)?
        .mul(&x_general(&v, &zvec, &a)?)
        .mul(&y_element(i, &u, &v.scale(&a), &zero)?);
    Ok(Sample::matrices(
        bind(vec![
            ("i", i.to_string()),
            ("u", u.to_string()),
            ("v", v.to_string()),
            ("a", a.to_string()),
        ]),
        lhs.phi(),
        rhs.phi(),
    ))
}

fn y11(ctx: &CheckContext, d: &mut Draw) -> Result<Sample> {
    let ring = &ctx.ring;
    let (i, u, mut v) = y_data(ctx, d);
    v.set(i, ring.zero()).unwrap();
    v.set(-i, ring.zero()).unwrap();
    let a = d.value(ring);
    let zero = ring.zero();
    let lhs = y_element(i, &u, &v.scale(&a), &zero)?;
    let rhs = y_element(i, &v, &u.scale(&a), &zero)?;
    Ok(Sample::matrices(
        bind(vec![
            ("i", i.to_string()),
            ("u", u.to_string()),
            ("v", v.to_string()),
            ("a", a.to_string()),
        ]),
        lhs.phi(),
        rhs.phi(),
    ))
}

fn y12(ctx: &CheckContext, d: &mut Draw) -> Result<Sample> {
    let (ring, n) = (&ctx.ring, ctx.n);
    let k = d.rng.gen_range(1..=n as i32);
    let u = draw_vector(ring, n, d, |m| m.abs() == k);
    let i = if k == n as i32 { n as i32 - 1 } else { n as i32 };
    let v = orthogonal_to(&u, d);
    let a = d.value(ring);
    let lhs = y_element(i, &u, &v, &a)?;
    let rhs = x_general(&u, &v, &a)?;
    Ok(Sample::matrices(
        bind(vec![
            ("i", i.to_string()),
            ("u", u.to_string()),
            ("v", v.to_string()),
            ("a", a.to_string()),
        ]),
        lhs.phi(),
        rhs.phi(),
    ))
}

fn y13(ctx: &CheckContext, d: &mut Draw) -> Result<Sample> {
    let ring = &ctx.ring;
    let (i, u, v) = y_data(ctx, d);
    let w = orthogonal_to(&u, d);
    let zero = ring.zero();
    let lhs = y_element(i, &u, &v, &zero)?.mul(&y_element(i, &u, &w, &zero)?);
    let rhs = y_element(i, &u, &v.add(&w), &v.form(&w))?;
    Ok(Sample::matrices(
        bind(vec![
            ("i", i.to_string()),
            ("u", u.to_string()),
            ("v", v.to_string()),
            ("w", w.to_string()),
        ]),
        lhs.phi(),
        rhs.phi(),
    ))
}

// KL family: the relative generator relations over a splitting ideal.

fn kl0(ctx: &CheckContext, d: &mut Draw) -> Result<Sample> {
    let (ring, ideal, n) = (&ctx.relative_ring, &ctx.ideal, ctx.n);
    let (i, j) = distinct_pair(n, d);
    let a = d.ideal(ring);
    let lhs = KLWord::generator(ideal, n, i, j, a.clone())?;
    let mirrored = a.neg().mul(&sgn(ring, i)).mul(&sgn(ring, j));
    let rhs = KLWord::generator(ideal, n, -j, -i, mirrored)?;
    Ok(Sample::matrices(
        bind(vec![("i", i.to_string()), ("j", j.to_string()), ("a", a.to_string())]),
        lhs.iota().phi(),
        rhs.iota().phi(),
    ))
}

fn kl1(ctx: &CheckContext, d: &mut Draw) -> Result<Sample> {
    let (ring, ideal, n) = (&ctx.relative_ring, &ctx.ideal, ctx.n);
    let (i, j) = distinct_pair(n, d);
    let a = d.ideal(ring);
    let b = d.ideal(ring);
    let lhs = KLWord::generator(ideal, n, i, j, a.clone())?
        .mul(&KLWord::generator(ideal, n, i, j, b.clone())?);
    let rhs = KLWord::generator(ideal, n, i, j, a.add(&b))?;
    Ok(Sample::matrices(
        bind(vec![
            ("i", i.to_string()),
            ("j", j.to_string()),
            ("a", a.to_string()),
            ("b", b.to_string()),
        ]),
        lhs.iota().phi(),
        rhs.iota().phi(),
    ))
}

fn kl2(ctx: &CheckContext, d: &mut Draw) -> Result<Sample> {
    let (ring, ideal, n) = (&ctx.relative_ring, &ctx.ideal, ctx.n);
    let (i, j) = distinct_pair(n, d);
    let (h, k) = loop {
        let (h, k) = distinct_pair(n, d);
        if h != j && h != -i && k != i && k != -j {
            break (h, k);
        }
    };
    let r = d.value(ring);
    let a = d.ideal(ring);
    let x = SteinbergWord::generator(ring, n, i, j, r.clone())?;
    let y = KLWord::generator(ideal, n, h, k, a.clone())?;
    let lhs = bracket_action(&x, &y);
    let rhs = SteinbergWord::identity(ring, n);
    Ok(Sample::matrices(
        bind(vec![
            ("i", i.to_string()),
            ("j", j.to_string()),
            ("h", h.to_string()),
            ("k", k.to_string()),
            ("r", r.to_string()),
            ("a", a.to_string()),
        ]),
        lhs.iota().phi(),
        rhs.phi(),
    ))
}

fn kl3(ctx: &CheckContext, d: &mut Draw) -> Result<Sample> {
    let (ring, ideal, n) = (&ctx.relative_ring, &ctx.ideal, ctx.n);
    let (i, j, k) = loop {
        let i = d.index(n);
        let j = d.index(n);
        let k = d.index(n);
        if i != j && j != k && i != k && i != -j && i != -k && j != -k {
            break (i, j, k);
        }
    };
    let r = d.value(ring);
    let a = d.ideal(ring);
    let x = SteinbergWord::generator(ring, n, i, j, r.clone())?;
    let y = KLWord::generator(ideal, n, j, k, a.clone())?;
    let lhs = bracket_action(&x, &y);
    let rhs = KLWord::generator(ideal, n, i, k, r.mul(&a))?;
    Ok(Sample::matrices(
        bind(vec![
            ("i", i.to_string()),
            ("j", j.to_string()),
            ("k", k.to_string()),
            ("r", r.to_string()),
            ("a", a.to_string()),
        ]),
        lhs.iota().phi(),
        rhs.iota().phi(),
    ))
}

fn kl4(ctx: &CheckContext, d: &mut Draw) -> Result<Sample> {
    let (ring, ideal, n) = (&ctx.relative_ring, &ctx.ideal, ctx.n);
    let i = d.index(n);
    let j = loop {
        let j = d.index(n);
        if j != i && j != -i {
            break j;
        }
    };
    let r = d.value(ring);
    let a = d.ideal(ring);
    let x = SteinbergWord::generator(ring, n, i, -i, r.clone())?;
    let y = KLWord::generator(ideal, n, -i, j, a.clone())?;
    let lhs = bracket_action(&x, &y);
    let ra = r.mul(&a);
    let rhs = KLWord::generator(ideal, n, i, j, ra.mul(&sgn(ring, i)))?
        .mul(&KLWord::generator(ideal, n, -j, j, ra.mul(&a).neg())?);
    Ok(Sample::matrices(
        bind(vec![
            ("i", i.to_string()),
            ("j", j.to_string()),
            ("r", r.to_string()),
            ("a", a.to_string()),
        ]),
        lhs.iota().phi(),
        rhs.iota().phi(),
    ))
}

fn kl5(ctx: &CheckContext, d: &mut Draw) -> Result<Sample> {
    let (ring, ideal, n) = (&ctx.relative_ring, &ctx.ideal, ctx.n);
    let i = d.index(n);
    let j = loop {
        let j = d.index(n);
        if j != i && j != -i {
            break j;
        }
    };
    let a = d.ideal(ring);
    let r = d.value(ring);
    let y = KLWord::generator(ideal, n, i, -i, a.clone())?;
    let x = SteinbergWord::generator(ring, n, -i, j, r.clone())?;
    let lhs = bracket_coaction(&y, &x);
    let ar = a.mul(&r);
    let rhs = KLWord::generator(ideal, n, i, j, ar.mul(&sgn(ring, i)))?
        .mul(&KLWord::generator(ideal, n, -j, j, ar.mul(&r).neg())?);
    Ok(Sample::matrices(
        bind(vec![
            ("i", i.to_string()),
            ("j", j.to_string()),
            ("a", a.to_string()),
            ("r", r.to_string()),
        ]),
        lhs.iota().phi(),
        rhs.iota().phi(),
    ))
}

fn kl6(ctx: &CheckContext, d: &mut Draw) -> Result<Sample> {
    let (ring, ideal, n) = (&ctx.relative_ring, &ctx.ideal, ctx.n);
    let i = d.index(n);
    let j = loop {
        let j = d.index(n);
        if j != i && j != -i {
            break j;
        }
    };
    let r = d.value(ring);
    let a = d.ideal(ring);
    let x = SteinbergWord::generator(ring, n, i, j, r.clone())?;
    let y = KLWord::generator(ideal, n, j, -i, a.clone())?;
    let lhs = bracket_action(&x, &y);
    let two_ra = r.mul(&a).mul(&ring.from_i64(2));
    let rhs = KLWord::generator(ideal, n, i, -i, two_ra.mul(&sgn(ring, i)))?;
    Ok(Sample::matrices(
        bind(vec![
            ("i", i.to_string()),
            ("j", j.to_string()),
            ("r", r.to_string()),
            ("a", a.to_string()),
        ]),
        lhs.iota().phi(),
        rhs.iota().phi(),
    ))
}

fn kl7(ctx: &CheckContext, d: &mut Draw) -> Result<Sample> {
    let (ring, ideal, n) = (&ctx.relative_ring, &ctx.ideal, ctx.n);
    let (i, j) = distinct_pair(n, d);
    let (h, k) = distinct_pair(n, d);
    let (s, t) = distinct_pair(n, d);
    let a = d.ideal(ring);
    let b = d.ideal(ring);
    let r = d.value(ring);
    let xhk = SteinbergWord::generator(ring, n, h, k, r.clone())?;
    let inner = KLWord::generator(ideal, n, s, t, b.clone())?.acted_by(&xhk);
    let xij = SteinbergWord::generator(ring, n, i, j, a.clone())?;
    let lhs = inner.acted_by(&xij).iota();
    let yij = KLWord::generator(ideal, n, i, j, a.clone())?.iota();
    let rhs = yij.mul(&inner.iota()).mul(&yij.inverse());
    Ok(Sample::matrices(
        bind(vec![
            ("i", i.to_string()),
            ("j", j.to_string()),
            ("h", h.to_string()),
            ("k", k.to_string()),
            ("s", s.to_string()),
            ("t", t.to_string()),
            ("a", a.to_string()),
            ("b", b.to_string()),
            ("r", r.to_string()),
        ]),
        lhs.phi(),
        rhs.phi(),
    ))
}

// T family: the column symbol relations for [u, v, a, b] over an ideal.

fn t_word(
    ideal: &SplittingIdeal,
    u: &OrbitVector,
    v: &IndexedVector,
    a: &Value,
    b: &Value,
) -> Result<TulenbaevWord> {
    Ok(TulenbaevWord::generator(TulenbaevLetter::new(
        ideal,
        u.clone(),
        v.clone(),
        a.clone(),
        b.clone(),
    )?))
}

fn t0(ctx: &CheckContext, d: &mut Draw) -> Result<Sample> {
    let (ring, ideal, n) = (&ctx.relative_ring, &ctx.ideal, ctx.n);
    let g = full_witness(ring, n, d);
    let u = OrbitVector::from_witness(g.clone());
    let v = transported_orthogonal(&g, d);
    let r = d.value(ring);
    let a = d.ideal(ring);
    let b = d.ideal(ring);
    let lhs = t_word(ideal, &u, &v.scale(&r), &a, &b)?;
    let rhs = t_word(ideal, &u, &v, &r.mul(&a), &b)?;
    Ok(Sample::matrices(
        bind(vec![
            ("u", u.vector().to_string()),
            ("v", v.to_string()),
            ("r", r.to_string()),
            ("a", a.to_string()),
            ("b", b.to_string()),
        ]),
        lhs.kappa()?.phi(),
        rhs.kappa()?.phi(),
    ))
}

fn t1(ctx: &CheckContext, d: &mut Draw) -> Result<Sample> {
    let (ring, ideal, n) = (&ctx.relative_ring, &ctx.ideal, ctx.n);
    let g = full_witness(ring, n, d);
    let u = OrbitVector::from_witness(g.clone());
    let v = transported_orthogonal(&g, d);
    let w = transported_orthogonal(&g, d);
    let a = d.ideal(ring);
    let b = d.ideal(ring);
    let c = d.ideal(ring);
    let lhs = t_word(ideal, &u, &v, &a, &b)?.mul(&t_word(ideal, &u, &w, &a, &c)?);
    let merged = b.add(&c).add(&a.mul(&a).mul(&v.form(&w)));
    let rhs = t_word(ideal, &u, &v.add(&w), &a, &merged)?;
    Ok(Sample::matrices(
        bind(vec![
            ("u", u.vector().to_string()),
            ("v", v.to_string()),
            ("w", w.to_string()),
            ("a", a.to_string()),
            ("b", b.to_string()),
            ("c", c.to_string()),
        ]),
        lhs.kappa()?.phi(),
        rhs.kappa()?.phi(),
    ))
}

fn t2(ctx: &CheckContext, d: &mut Draw) -> Result<Sample> {
    let (ring, ideal, n) = (&ctx.relative_ring, &ctx.ideal, ctx.n);
    let g = full_witness(ring, n, d);
    let u = OrbitVector::from_witness(g.clone());
    let v = transported_orthogonal(&g, d);
    let a = d.ideal(ring);
    let b = d.ideal(ring);
    let zero = ring.zero();
    let lhs = t_word(ideal, &u, &v, &a, &zero)?.mul(&t_word(ideal, &u, &v, &b, &zero)?);
    let rhs = t_word(ideal, &u, &v, &a.add(&b), &zero)?;
    Ok(Sample::matrices(
        bind(vec![
            ("u", u.vector().to_string()),
            ("v", v.to_string()),
            ("a", a.to_string()),
            ("b", b.to_string()),
        ]),
        lhs.kappa()?.phi(),
        rhs.kappa()?.phi(),
    ))
}

fn t3(ctx: &CheckContext, d: &mut Draw) -> Result<Sample> {
    let (ring, ideal, n) = (&ctx.relative_ring, &ctx.ideal, ctx.n);
    let u = full_orbit(ring, n, d);
    let a = d.ideal(ring);
    let zero = ring.zero();
    let zvec = IndexedVector::zero(ring, n);
    let lhs = t_word(ideal, &u, u.vector(), &a, &zero)?;
    let rhs = t_word(ideal, &u, &zvec, &zero, &a.add(&a))?;
    Ok(Sample::matrices(
        bind(vec![("u", u.vector().to_string()), ("a", a.to_string())]),
        lhs.kappa()?.phi(),
        rhs.kappa()?.phi(),
    ))
}

fn t4(ctx: &CheckContext, d: &mut Draw) -> Result<Sample> {
    let (ring, ideal, n) = (&ctx.relative_ring, &ctx.ideal, ctx.n);
    let pair = full_pair(ring, n, d);
    let a = d.ideal(ring);
    let zero = ring.zero();
    let lhs = t_word(ideal, &pair.first(), pair.second_vector(), &a, &zero)?;
    let rhs = t_word(ideal, &pair.second(), pair.first_vector(), &a, &zero)?;
    Ok(Sample::matrices(
        bind(vec![
            ("u", pair.first_vector().to_string()),
            ("v", pair.second_vector().to_string()),
            ("a", a.to_string()),
        ]),
        lhs.kappa()?.phi(),
        rhs.kappa()?.phi(),
    ))
}

fn t5(ctx: &CheckContext, d: &mut Draw) -> Result<Sample> {
    let (ring, ideal, n) = (&ctx.relative_ring, &ctx.ideal, ctx.n);
    let pair = full_pair(ring, n, d);
    let r = d.value(ring);
    let a = d.ideal(ring);
    let zero = ring.zero();
    let zvec = IndexedVector::zero(ring, n);
    let lhs = t_word(ideal, &pair.combination(&r)?, &zvec, &zero, &a)?;
    let rhs = t_word(ideal, &pair.first(), &zvec, &zero, &a)?
        .mul(&t_word(ideal, &pair.second(), &zvec, &zero, &a.mul(&r).mul(&r))?)
        .mul(&t_word(ideal, &pair.first(), pair.second_vector(), &a.mul(&r), &zero)?);
    Ok(Sample::matrices(
        bind(vec![
            ("u", pair.first_vector().to_string()),
            ("v", pair.second_vector().to_string()),
            ("r", r.to_string()),
            ("a", a.to_string()),
        ]),
        lhs.kappa()?.phi(),
        rhs.kappa()?.phi(),
    ))
}

fn t6(ctx: &CheckContext, d: &mut Draw) -> Result<Sample> {
    let (ring, ideal, n) = (&ctx.relative_ring, &ctx.ideal, ctx.n);
    let g = full_witness(ring, n, d);
    let u = OrbitVector::from_witness(g.clone());
    let v = transported_orthogonal(&g, d);
    let a = d.ideal(ring);
    let b = d.ideal(ring);
    let gp = full_witness(ring, n, d);
    let up = OrbitVector::from_witness(gp.clone());
    let vp = transported_orthogonal(&gp, d);
    let ap = d.ideal(ring);
    let bp = d.ideal(ring);
    let p = t_word(ideal, &up, &vp, &ap, &bp)?;
    let lhs = p.mul(&t_word(ideal, &u, &v, &a, &b)?).mul(&p.inverse());
    let kp = p.kappa()?;
    let t = SympMatrix::esd(up.vector(), &vp.scale(&ap), &bp)?;
    let rhs = t_word(ideal, &u.translated(&kp), &t.apply(&v), &a, &b)?;
    Ok(Sample::matrices(
        bind(vec![
            ("u", u.vector().to_string()),
            ("v", v.to_string()),
            ("a", a.to_string()),
            ("b", b.to_string()),
            ("u'", up.vector().to_string()),
            ("v'", vp.to_string()),
            ("a'", ap.to_string()),
            ("b'", bp.to_string()),
        ]),
        lhs.kappa()?.phi(),
        rhs.kappa()?.phi(),
    ))
}

// Z family: the scalar-divided elements over a mixed extension.

struct ZData {
    u: OrbitVector,
    v: IndexedVector,
    b: Value,
    n_pow: u32,
}

fn z_data(ctx: &CheckContext, d: &mut Draw) -> ZData {
    let (ring, n) = (&ctx.mixed_ring, ctx.n);
    let g = full_witness(ring, n, d);
    let u = OrbitVector::from_witness(g.clone());
    let v = transported_orthogonal(&g, d);
    let b = d.ideal(ring);
    let n_pow = d.pow(2);
    ZData { u, v, b, n_pow }
}

fn z0(ctx: &CheckContext, d: &mut Draw) -> Result<Sample> {
    let data = z_data(ctx, d);
    let a = ctx.mixed_a();
    let lhs = z_scalar(&data.u, &data.v, &data.b, a, data.n_pow)?;
    let rhs = SympMatrix::esd(
        data.u.vector(),
        &data.v.scale(&data.b),
        &ctx.mixed_ring.zero(),
    )?;
    Ok(Sample::matrices(
        bind(vec![
            ("u", data.u.vector().to_string()),
            ("v", data.v.to_string()),
            ("b", data.b.to_string()),
            ("N", data.n_pow.to_string()),
        ]),
        lhs.word().phi(),
        rhs,
    ))
}

fn z1(ctx: &CheckContext, d: &mut Draw) -> Result<Sample> {
    let data = z_data(ctx, d);
    let a = ctx.mixed_a();
    let r = d.value(&ctx.mixed_ring);
    let lhs = z_scalar(&data.u, &data.v.scale(&r), &data.b, a, data.n_pow)?;
    let rhs = z_scalar(&data.u, &data.v, &r.mul(&data.b), a, data.n_pow)?;
    Ok(Sample::matrices(
        bind(vec![
            ("u", data.u.vector().to_string()),
            ("v", data.v.to_string()),
            ("r", r.to_string()),
            ("b", data.b.to_string()),
        ]),
        lhs.word().phi(),
        rhs.word().phi(),
    ))
}

fn z2(ctx: &CheckContext, d: &mut Draw) -> Result<Sample> {
    let (ring, n) = (&ctx.mixed_ring, ctx.n);
    let a = ctx.mixed_a();
    let g = full_witness(ring, n, d);
    let u = OrbitVector::from_witness(g.clone());
    let v = transported_orthogonal(&g, d);
    let vp = transported_orthogonal(&g, d);
    let b = d.ideal(ring);
    let n_pow = d.pow(2);
    let zvec = IndexedVector::zero(ring, n);
    let lhs = z_scalar(&u, &v, &b, a, n_pow)?
        .word()
        .mul(z_scalar(&u, &vp, &b, a, n_pow)?.word());
    let cross = b.mul(&b).mul(&v.form(&vp));
    let rhs = z_scalar(&u, &v.add(&vp), &b, a, n_pow)?
        .word()
        .mul(&x_element(&u, &zvec, &cross)?);
    Ok(Sample::matrices(
        bind(vec![
            ("u", u.vector().to_string()),
            ("v", v.to_string()),
            ("v'", vp.to_string()),
            ("b", b.to_string()),
        ]),
        lhs.phi(),
        rhs.phi(),
    ))
}

fn z3(ctx: &CheckContext, d: &mut Draw) -> Result<Sample> {
    let data = z_data(ctx, d);
    let a = ctx.mixed_a();
    let c = d.ideal(&ctx.mixed_ring);
    let lhs = z_scalar(&data.u, &data.v, &data.b, a, data.n_pow)?
        .word()
        .mul(z_scalar(&data.u, &data.v, &c, a, data.n_pow)?.word());
    let rhs = z_scalar(&data.u, &data.v, &data.b.add(&c), a, data.n_pow)?;
    Ok(Sample::matrices(
        bind(vec![
            ("u", data.u.vector().to_string()),
            ("v", data.v.to_string()),
            ("b", data.b.to_string()),
            ("c", c.to_string()),
        ]),
        lhs.phi(),
        rhs.word().phi(),
    ))
}

fn z4(ctx: &CheckContext, d: &mut Draw) -> Result<Sample> {
    let data = z_data(ctx, d);
    let a = ctx.mixed_a();
    let h = full_witness(&ctx.mixed_ring, ctx.n, d);
    let lhs = z_scalar(&data.u, &data.v, &data.b, a, data.n_pow)?
        .word()
        .conjugated_by(&h);
    let rhs = z_scalar(
        &data.u.translated(&h),
        &h.phi().apply(&data.v),
        &data.b,
        a,
        data.n_pow,
    )?;
    Ok(Sample::matrices(
        bind(vec![
            ("u", data.u.vector().to_string()),
            ("v", data.v.to_string()),
            ("b", data.b.to_string()),
            ("g", h.to_string()),
        ]),
        lhs.phi(),
        rhs.word().phi(),
    ))
}

fn z5(ctx: &CheckContext, d: &mut Draw) -> Result<Sample> {
    let data = z_data(ctx, d);
    let a = ctx.mixed_a();
    let zvec = IndexedVector::zero(&ctx.mixed_ring, ctx.n);
    let lhs = z_scalar(&data.u, data.u.vector(), &data.b, a, data.n_pow)?;
    let rhs = x_element(&data.u, &zvec, &data.b.add(&data.b))?;
    Ok(Sample::matrices(
        bind(vec![
            ("u", data.u.vector().to_string()),
            ("b", data.b.to_string()),
        ]),
        lhs.word().phi(),
        rhs.phi(),
    ))
}

fn z6(ctx: &CheckContext, d: &mut Draw) -> Result<Sample> {
    let (ring, n) = (&ctx.mixed_ring, ctx.n);
    let a = ctx.mixed_a();
    let pair = full_pair(ring, n, d);
    let b = d.ideal(ring);
    let n_pow = d.pow(2);
    let lhs = z_scalar(&pair.first(), pair.second_vector(), &b, a, n_pow)?;
    let rhs = z_scalar(&pair.second(), pair.first_vector(), &b, a, n_pow)?;
    Ok(Sample::matrices(
        bind(vec![
            ("u", pair.first_vector().to_string()),
            ("v", pair.second_vector().to_string()),
            ("b", b.to_string()),
        ]),
        lhs.word().phi(),
        rhs.word().phi(),
    ))
}

fn z7(ctx: &CheckContext, d: &mut Draw) -> Result<Sample> {
    let (ring, n) = (&ctx.mixed_ring, ctx.n);
    let a = ctx.mixed_a();
    let pair = full_pair(ring, n, d);
    let r = d.value(ring);
    let b = d.ideal(ring);
    let n_pow = d.pow(2);
    let zvec = IndexedVector::zero(ring, n);
    let lhs = x_element(&pair.combination(&r)?, &zvec, &b)?;
    let rhs = x_element(&pair.first(), &zvec, &b)?
        .mul(&x_element(&pair.second(), &zvec, &b.mul(&r).mul(&r))?)
        .mul(z_scalar(&pair.first(), pair.second_vector(), &b.mul(&r), a, n_pow)?.word());
    Ok(Sample::matrices(
        bind(vec![
            ("u", pair.first_vector().to_string()),
            ("v", pair.second_vector().to_string()),
            ("r", r.to_string()),
            ("b", b.to_string()),
        ]),
        lhs.phi(),
        rhs.phi(),
    ))
}

// L family: the decomposition and divided-element lemmas.

fn l_zero_pair_commutator(ctx: &CheckContext, d: &mut Draw) -> Result<Sample> {
    let (ring, n) = (&ctx.ring, ctx.n);
    let g = inner_witness(ring, n, d);
    let u = OrbitVector::from_witness(g.clone());
    let v = transported_orthogonal(&g, d);
    let w = transported_inner_orthogonal(&g, d);
    let zero = ring.zero();
    let zvec = IndexedVector::zero(ring, n);
    let lhs = commutator(&x_element(&u, &v, &zero)?, &x_element(&u, &w, &zero)?);
    let cross = v.form(&w);
    let rhs = x_element(&u, &zvec, &cross.add(&cross))?;
    Ok(Sample::matrices(
        bind(vec![
            ("u", u.vector().to_string()),
            ("v", v.to_string()),
            ("w", w.to_string()),
        ]),
        lhs.phi(),
        rhs.phi(),
    ))
}

fn l_base_scaling(ctx: &CheckContext, d: &mut Draw) -> Result<Sample> {
    let (ring, n) = (&ctx.ring, ctx.n);
    let last = n as i32;
    let u = draw_vector(ring, n, d, |m| m.abs() != last);
    let parts: Vec<IndexedVector> = (0..3).map(|_| orthogonal_part(&u, d)).collect();
    let r = d.value(ring);
    let scaled: Vec<IndexedVector> = parts.iter().map(|p| p.scale(&r)).collect();
    let lhs = z_list_free(&u.scale(&r), &parts)?;
    let rhs = z_list_free(&u, &scaled)?;
    Ok(Sample::matrices(
        bind(vec![
            ("u", u.to_string()),
            ("r", r.to_string()),
            ("parts", parts.len().to_string()),
        ]),
        lhs.word().phi(),
        rhs.word().phi(),
    ))
}

fn l_suslin_sum(ctx: &CheckContext, d: &mut Draw) -> Result<Sample> {
    let (ring, n) = (&ctx.ring, ctx.n);
    let u = draw_vector(ring, n, d, |_| true);
    let v = orthogonal_to(&u, d);
    let w = draw_vector(ring, n, d, |_| true);
    let dec = suslin_decompose(&u, &v, &w)?;
    let a = dec.a_value();
    let mut detail = String::new();
    let sum_ok = dec.sum() == v.scale(a);
    if !sum_ok {
        detail = format!("sum {} differs from {}", dec.sum(), v.scale(a));
    }
    let mut orth_ok = true;
    let mut symm_ok = true;
    for ((i, j), part) in dec.parts() {
        if !u.form(part).is_zero() {
            orth_ok = false;
            detail = format!("part ({i},{j}) is not orthogonal to u");
        }
        if &suslin_part(&u, &v, &w, *j, *i) != part {
            symm_ok = false;
            detail = format!("part ({i},{j}) is not symmetric in its indices");
        }
    }
    Ok(Sample::holds(
        bind(vec![
            ("u", u.to_string()),
            ("v", v.to_string()),
            ("w", w.to_string()),
            ("A", a.to_string()),
        ]),
        sum_ok && orth_ok && symm_ok,
        detail,
    ))
}

fn l_orthogonal_additivity(ctx: &CheckContext, d: &mut Draw) -> Result<Sample> {
    let (ring, n) = (&ctx.ring, ctx.n);
    let g = inner_witness(ring, n, d);
    let u = OrbitVector::from_witness(g.clone());
    let m = loop {
        let m = d.index(n - 1);
        if m != -1 {
            break m;
        }
    };
    let picture_v = draw_vector(ring, n, d, |k| k != -1 && k != -m);
    let mut picture_w = IndexedVector::zero(ring, n);
    picture_w.set(m, d.value(ring)).unwrap();
    picture_w.set(1, d.value(ring)).unwrap();
    let v = g.phi().apply(&picture_v);
    let w = g.phi().apply(&picture_w);
    let zero = ring.zero();
    let lhs = x_element(&u, &v.add(&w), &zero)?;
    let rhs = x_element(&u, &v, &zero)?.mul(&x_element(&u, &w, &zero)?);
    Ok(Sample::matrices(
        bind(vec![
            ("u", u.vector().to_string()),
            ("v", v.to_string()),
            ("w", w.to_string()),
        ]),
        lhs.phi(),
        rhs.phi(),
    ))
}

fn l_transvection_equals_z(ctx: &CheckContext, d: &mut Draw) -> Result<Sample> {
    let (ring, n) = (&ctx.ring, ctx.n);
    let g = inner_witness(ring, n, d);
    let u = OrbitVector::from_witness(g.clone());
    let v = transported_inner_orthogonal(&g, d);
    let a = d.small(ring);
    let w = transported_witness_vector(&g, &a, d);
    let dec = suslin_decompose(u.vector(), &v, &w)?;
    let zero = ring.zero();
    let lhs = x_element(&u, &v.scale(dec.a_value()), &zero)?;
    let rhs = z_list(&u, &dec.part_vectors())?;
    Ok(Sample::matrices(
        bind(vec![
            ("u", u.vector().to_string()),
            ("v", v.to_string()),
            ("w", w.to_string()),
            ("A", dec.a_value().to_string()),
        ]),
        lhs.phi(),
        rhs.word().phi(),
    ))
}

fn l_split_independence(ctx: &CheckContext, d: &mut Draw) -> Result<Sample> {
    let (ring, n) = (&ctx.ring, ctx.n);
    let g = inner_witness(ring, n, d);
    let u = OrbitVector::from_witness(g.clone());
    let pieces: Vec<IndexedVector> = (0..3)
        .map(|_| transported_inner_orthogonal(&g, d))
        .collect();
    let v = pieces
        .iter()
        .fold(IndexedVector::zero(ring, n), |acc, p| acc.add(p));
    let a = d.small(ring);
    let w = transported_witness_vector(&g, &a, d);
    let dec = suslin_decompose(u.vector(), &v, &w)?;
    let a_val = dec.a_value();
    let xs: Vec<IndexedVector> = pieces.iter().map(|p| p.scale(a_val)).collect();
    let coarse: Vec<IndexedVector> = xs.iter().map(|p| p.scale(a_val)).collect();
    let fine: Vec<IndexedVector> = dec.part_vectors().iter().map(|p| p.scale(a_val)).collect();
    let lhs = z_list(&u, &coarse)?;
    let rhs = z_list(&u, &fine)?;
    Ok(Sample::matrices(
        bind(vec![
            ("u", u.vector().to_string()),
            ("v", v.to_string()),
            ("w", w.to_string()),
            ("A", a_val.to_string()),
        ]),
        lhs.word().phi(),
        rhs.word().phi(),
    ))
}

fn l_upper_conjugation(ctx: &CheckContext, d: &mut Draw) -> Result<Sample> {
    let (ring, n) = (&ctx.ring, ctx.n);
    let g = inner_witness(ring, n, d);
    let u = OrbitVector::from_witness(g.clone());
    let v = transported_orthogonal(&g, d);
    let a = d.small(ring);
    let w = transported_witness_vector(&g, &a, d);
    let h = full_witness(ring, n, d);
    let lhs = z_upper_a(&u, &v, &w)?.word().conjugated_by(&h);
    let rhs = z_upper_a(&u.translated(&h), &h.phi().apply(&v), &h.phi().apply(&w))?;
    Ok(Sample::matrices(
        bind(vec![
            ("u", u.vector().to_string()),
            ("v", v.to_string()),
            ("A", a.to_string()),
            ("g", h.to_string()),
        ]),
        lhs.phi(),
        rhs.word().phi(),
    ))
}

fn l_upper_addition(ctx: &CheckContext, d: &mut Draw) -> Result<Sample> {
    let (ring, n) = (&ctx.ring, ctx.n);
    let g = inner_witness(ring, n, d);
    let u = OrbitVector::from_witness(g.clone());
    let v = transported_orthogonal(&g, d);
    let vp = transported_orthogonal(&g, d);
    let a = d.small(ring);
    let w = transported_witness_vector(&g, &a, d);
    let a_val = w.form(u.vector());
    let zvec = IndexedVector::zero(ring, n);
    let lhs = z_upper_a(&u, &v, &w)?.word().mul(z_upper_a(&u, &vp, &w)?.word());
    let cross = v.form(&vp).mul(&a_val.pow(4));
    let rhs = z_upper_a(&u, &v.add(&vp), &w)?
        .word()
        .mul(&x_element(&u, &zvec, &cross)?);
    Ok(Sample::matrices(
        bind(vec![
            ("u", u.vector().to_string()),
            ("v", v.to_string()),
            ("v'", vp.to_string()),
            ("A", a_val.to_string()),
        ]),
        lhs.phi(),
        rhs.phi(),
    ))
}

fn l_upper_symmetry(ctx: &CheckContext, d: &mut Draw) -> Result<Sample> {
    let (ring, n) = (&ctx.ring, ctx.n);
    let pair = inner_pair(ring, n, d);
    let a = d.small(ring);
    let b = d.small(ring);
    let factor = b.mul(&a.pow(3));
    let wu = canonical_witness(&pair.first(), &a);
    let wv = canonical_witness(&pair.second(), &a);
    let lhs = z_upper_a(&pair.first(), &pair.second_vector().scale(&factor), &wu)?;
    let rhs = z_upper_a(&pair.second(), &pair.first_vector().scale(&factor), &wv)?;
    Ok(Sample::matrices(
        bind(vec![
            ("u", pair.first_vector().to_string()),
            ("v", pair.second_vector().to_string()),
            ("A", a.to_string()),
            ("b", b.to_string()),
        ]),
        lhs.word().phi(),
        rhs.word().phi(),
    ))
}

fn l_upper_doubling(ctx: &CheckContext, d: &mut Draw) -> Result<Sample> {
    let (ring, n) = (&ctx.ring, ctx.n);
    let u = full_orbit(ring, n, d);
    let a = d.small(ring);
    let b = d.small(ring);
    let w = canonical_witness(&u, &a);
    let zvec = IndexedVector::zero(ring, n);
    let lhs = z_upper_a(&u, &u.vector().scale(&b.mul(&a.pow(3))), &w)?;
    let two = ring.from_i64(2);
    let rhs = x_element(&u, &zvec, &b.mul(&a.pow(5)).mul(&two))?;
    Ok(Sample::matrices(
        bind(vec![
            ("u", u.vector().to_string()),
            ("A", a.to_string()),
            ("b", b.to_string()),
        ]),
        lhs.word().phi(),
        rhs.phi(),
    ))
}

fn l_scaled_splitting(ctx: &CheckContext, d: &mut Draw) -> Result<Sample> {
    let (ring, n) = (&ctx.ring, ctx.n);
    let pair = full_pair(ring, n, d);
    let a = d.small(ring);
    let b = d.small(ring);
    let c = d.small(ring);
    let wu = canonical_witness(&pair.first(), &a);
    let zvec = IndexedVector::zero(ring, n);
    let head = c.mul(&a.pow(11));
    let lhs = x_element(&pair.combination(&b)?, &zvec, &head)?;
    let rhs = x_element(&pair.first(), &zvec, &head)?
        .mul(&x_element(&pair.second(), &zvec, &b.mul(&b).mul(&head))?)
        .mul(
            z_upper_a(
                &pair.first(),
                &pair.second_vector().scale(&b.mul(&c).mul(&a.pow(9))),
                &wu,
            )?
            .word(),
        );
    Ok(Sample::matrices(
        bind(vec![
            ("u", pair.first_vector().to_string()),
            ("v", pair.second_vector().to_string()),
            ("A", a.to_string()),
            ("b", b.to_string()),
            ("c", c.to_string()),
        ]),
        lhs.phi(),
        rhs.phi(),
    ))
}

fn l_power_shift(ctx: &CheckContext, d: &mut Draw) -> Result<Sample> {
    let (ring, n) = (&ctx.mixed_ring, ctx.n);
    let a = ctx.mixed_a();
    let g = full_witness(ring, n, d);
    let u = OrbitVector::from_witness(g.clone());
    let v = transported_orthogonal(&g, d);
    let b = d.ideal(ring);
    let m_pow = d.pow(1);
    let n_pow = d.pow(1);
    let w = canonical_witness(&u, &a.pow(n_pow + m_pow));
    let lhs = z_scalar_free(&u.vector().scale(&a.pow(m_pow)), &v, &b, &w)?;
    let rhs = z_scalar(&u, &v, &a.pow(m_pow).mul(&b), a, n_pow)?;
    Ok(Sample::matrices(
        bind(vec![
            ("u", u.vector().to_string()),
            ("v", v.to_string()),
            ("b", b.to_string()),
            ("M", m_pow.to_string()),
            ("N", n_pow.to_string()),
        ]),
        lhs.word().phi(),
        rhs.word().phi(),
    ))
}

static CATALOGUE: &[Entry] = &[
    Entry { id: "S0", family: "S", context: ContextKind::Base, statement: "X(i,j;a) = X(-j,-i;-a·si·sj)", run: s0 },
    Entry { id: "S1", family: "S", context: ContextKind::Base, statement: "X(i,j;a)·X(i,j;b) = X(i,j;a+b)", run: s1 },
    Entry { id: "S2", family: "S", context: ContextKind::Base, statement: "[X(i,j;a), X(h,k;b)] = 1 for h∉{j,-i}, k∉{i,-j}", run: s2 },
    Entry { id: "S3", family: "S", context: ContextKind::Base, statement: "[X(i,j;a), X(j,k;b)] = X(i,k;ab) for i∉{-j,-k}, j≠-k", run: s3 },
    Entry { id: "S4", family: "S", context: ContextKind::Base, statement: "[X(i,-i;a), X(-i,j;b)] = X(i,j;ab·si)·X(-j,j;-ab²)", run: s4 },
    Entry { id: "S5", family: "S", context: ContextKind::Base, statement: "[X(i,j;a), X(j,-i;b)] = X(i,-i;2ab·si)", run: s5 },
    Entry { id: "K1", family: "K", context: ContextKind::Base, statement: "[u,v1,a1]·[u,v2,a2] = [u,v1+v2,a1+a2+⟨v1,v2⟩]", run: k1 },
    Entry { id: "K2", family: "K", context: ContextKind::Base, statement: "[u1,u2·b,0] = [u2,u1·b,0]", run: k2 },
    Entry { id: "K3", family: "K", context: ContextKind::Base, statement: "[u',v',a']·[u,v,a]·[u',v',a']⁻¹ = [T(u',v',a')u, T(u',v',a')v, a]", run: k3 },
    Entry { id: "K4", family: "K", context: ContextKind::Base, statement: "[u,u·a,0] = [u,0,2a]", run: k4 },
    Entry { id: "K5", family: "K", context: ContextKind::Base, statement: "[u·b,0,a] = [u,0,ab²]", run: k5 },
    Entry { id: "K6", family: "K", context: ContextKind::Base, statement: "[u+v,0,a] = [u,0,a]·[v,0,a]·[v,u·a,0] for ⟨u,v⟩ = 0", run: k6 },
    Entry { id: "K7", family: "K", context: ContextKind::Base, statement: "[u+w·r,0,a] = [u,0,a]·[w,0,ar²]·[u,w·ar,0]", run: k7 },
    Entry { id: "X0", family: "X", context: ContextKind::Base, statement: "φ(X(u,v,a)) = T(u,v,a)", run: x0 },
    Entry { id: "X1", family: "X", context: ContextKind::Base, statement: "g·X(u,v,a)·g⁻¹ = X(φ(g)u, φ(g)v, a)", run: x1 },
    Entry { id: "X2", family: "X", context: ContextKind::Base, statement: "X(u·b,0,a) = X(u,0,b²a)", run: x2 },
    Entry { id: "X3", family: "X", context: ContextKind::Base, statement: "X(u,0,a)·X(u,0,b) = X(u,0,a+b)", run: x3 },
    Entry { id: "X4", family: "X", context: ContextKind::Base, statement: "X(u,v,0) = X(v,u,0)", run: x4 },
    Entry { id: "X5", family: "X", context: ContextKind::Base, statement: "X(u·a,u·b,0) = X(u,0,2ab)", run: x5 },
    Entry { id: "X6", family: "X", context: ContextKind::Base, statement: "X(u+v,0,1) = X(u,0,1)·X(v,0,1)·X(u,v,0)", run: x6 },
    Entry { id: "X7", family: "X", context: ContextKind::Base, statement: "X(u,v,a) = X(u,v,0)·X(u,0,a)", run: x7 },
    Entry { id: "X8", family: "X", context: ContextKind::Base, statement: "X(u+v·r,0,a) = X(u,0,a)·X(v,0,r²a)·X(u,v·ra,0)", run: x8 },
    Entry { id: "X9", family: "X", context: ContextKind::Base, statement: "X(u,v·a,0) = X(v,u·a,0)", run: x9 },
    Entry { id: "X10", family: "X", context: ContextKind::Base, statement: "X(u,v,a)·X(u,w,b) = X(u,v+w,a+b+⟨v,w⟩)", run: x10 },
    Entry { id: "Y0", family: "Y", context: ContextKind::Base, statement: "φ(Y(i)(u,v,a)) = T(u,v,a)", run: y0 },
    Entry { id: "Y1", family: "Y", context: ContextKind::Base, statement: "Y(i)(u,v,a) = Y(j)(u,v,a) when u vanishes at ±j too", run: y1 },
    Entry { id: "Y2", family: "Y", context: ContextKind::Base, statement: "Y(e_i,w,a)·Y(e_i,w',a') = Y(e_i,w+w',a+a'+⟨w,w'⟩)", run: y2 },
    Entry { id: "Y3", family: "Y", context: ContextKind::Base, statement: "Y(e_i,w,a) = X(e_i,w,a)", run: y3 },
    Entry { id: "Y4", family: "Y", context: ContextKind::Base, statement: "Y(i)(u,v',a) = [Y(e_i,u,0), Y(e_-i,v'·si,a)]·Y(e_-i,u·a·s(-i),0)", run: y4 },
    Entry { id: "Y5", family: "Y", context: ContextKind::Base, statement: "Y(i)(u,v,a) = Y(i)(u,v-e_i·v_i-e_-i·v_-i,a-v_i·v_-i·si)·Y(e_i,u·v_i,0)·Y(e_-i,u·v_-i,0)", run: y5 },
    Entry { id: "Y6", family: "Y", context: ContextKind::Base, statement: "X(q+q',0,a) = Y(i)(q,0,a)·Y(q',0,a)·Y(q',q·a,0)", run: y6 },
    Entry { id: "Y7", family: "Y", context: ContextKind::Base, statement: "Y(r,s,0)·Y(r',s,0) = Y(i)(r+r',s,0)", run: y7 },
    Entry { id: "Y8", family: "Y", context: ContextKind::Base, statement: "Y(i)(u,v,a+b) = Y(i)(u,v,a)·Y(i)(u,0,b)", run: y8 },
    Entry { id: "Y9", family: "Y", context: ContextKind::Base, statement: "Y(i)(u,v,a) = Y(i)(u,v-e_i·v_i-e_-i·v_-i,a)·Y(i)(u,e_i·v_i+e_-i·v_-i,0)", run: y9 },
    Entry { id: "Y10", family: "Y", context: ContextKind::Base, statement: "X(u+v,0,a) = X(u,0,a)·X(v,0,a)·Y(i)(u,v·a,0)", run: y10 },
    Entry { id: "Y11", family: "Y", context: ContextKind::Base, statement: "Y(i)(u,v·a,0) = Y(i)(v,u·a,0)", run: y11 },
    Entry { id: "Y12", family: "Y", context: ContextKind::Base, statement: "Y(i)(u,v,a) = X(u,v,a)", run: y12 },
    Entry { id: "Y13", family: "Y", context: ContextKind::Base, statement: "Y(i)(u,v,0)·Y(i)(u,w,0) = Y(i)(u,v+w,⟨v,w⟩)", run: y13 },
    Entry { id: "KL0", family: "KL", context: ContextKind::Relative, statement: "Y(i,j;a) = Y(-j,-i;-a·si·sj)", run: kl0 },
    Entry { id: "KL1", family: "KL", context: ContextKind::Relative, statement: "Y(i,j;a)·Y(i,j;b) = Y(i,j;a+b)", run: kl1 },
    Entry { id: "KL2", family: "KL", context: ContextKind::Relative, statement: "⟦X(i,j;r), Y(h,k;a)] = 1 for h∉{j,-i}, k∉{i,-j}", run: kl2 },
    Entry { id: "KL3", family: "KL", context: ContextKind::Relative, statement: "⟦X(i,j;r), Y(j,k;a)] = Y(i,k;ra)", run: kl3 },
    Entry { id: "KL4", family: "KL", context: ContextKind::Relative, statement: "⟦X(i,-i;r), Y(-i,j;a)] = Y(i,j;ra·si)·Y(-j,j;-ra²)", run: kl4 },
    Entry { id: "KL5", family: "KL", context: ContextKind::Relative, statement: "[Y(i,-i;a), X(-i,j;r)⟧ = Y(i,j;ar·si)·Y(-j,j;-ar²)", run: kl5 },
    Entry { id: "KL6", family: "KL", context: ContextKind::Relative, statement: "⟦X(i,j;r), Y(j,-i;a)] = Y(i,-i;2ra·si)", run: kl6 },
    Entry { id: "KL7", family: "KL", context: ContextKind::Relative, statement: "conjugating a relative word by X(i,j;a) or by Y(i,j;a) agrees", run: kl7 },
    Entry { id: "T0", family: "T", context: ContextKind::Relative, statement: "[u,v·r,a,b] = [u,v,ra,b]", run: t0 },
    Entry { id: "T1", family: "T", context: ContextKind::Relative, statement: "[u,v,a,b]·[u,w,a,c] = [u,v+w,a,b+c+a²⟨v,w⟩]", run: t1 },
    Entry { id: "T2", family: "T", context: ContextKind::Relative, statement: "[u,v,a,0]·[u,v,b,0] = [u,v,a+b,0]", run: t2 },
    Entry { id: "T3", family: "T", context: ContextKind::Relative, statement: "[u,u,a,0] = [u,0,0,2a]", run: t3 },
    Entry { id: "T4", family: "T", context: ContextKind::Relative, statement: "[u,v,a,0] = [v,u,a,0]", run: t4 },
    Entry { id: "T5", family: "T", context: ContextKind::Relative, statement: "[u+v·r,0,0,a] = [u,0,0,a]·[v,0,0,ar²]·[u,v,ar,0]", run: t5 },
    Entry { id: "T6", family: "T", context: ContextKind::Relative, statement: "[u',v',a',b']·[u,v,a,b]·[u',v',a',b']⁻¹ = [T(u',v'a',b')u, T(u',v'a',b')v, a, b]", run: t6 },
    Entry { id: "Z0", family: "Z", context: ContextKind::Mixed, statement: "φ(Z(u,v,b)) = T(u,v·b,0)", run: z0 },
    Entry { id: "Z1", family: "Z", context: ContextKind::Mixed, statement: "Z(u,v·r,b) = Z(u,v,rb)", run: z1 },
    Entry { id: "Z2", family: "Z", context: ContextKind::Mixed, statement: "Z(u,v,b)·Z(u,v',b) = Z(u,v+v',b)·X(u,0,b²⟨v,v'⟩)", run: z2 },
    Entry { id: "Z3", family: "Z", context: ContextKind::Mixed, statement: "Z(u,v,b)·Z(u,v,c) = Z(u,v,b+c)", run: z3 },
    Entry { id: "Z4", family: "Z", context: ContextKind::Mixed, statement: "g·Z(u,v,b)·g⁻¹ = Z(φ(g)u, φ(g)v, b)", run: z4 },
    Entry { id: "Z5", family: "Z", context: ContextKind::Mixed, statement: "Z(u,u,b) = X(u,0,2b)", run: z5 },
    Entry { id: "Z6", family: "Z", context: ContextKind::Mixed, statement: "Z(u,v,b) = Z(v,u,b)", run: z6 },
    Entry { id: "Z7", family: "Z", context: ContextKind::Mixed, statement: "X(u+v·r,0,b) = X(u,0,b)·X(v,0,br²)·Z(u,v,br)", run: z7 },
    Entry { id: "zero-pair-commutator", family: "L", context: ContextKind::Base, statement: "[X(u,v,0), X(u,w,0)] = X(u,0,2⟨v,w⟩) for w with a symmetric zero pair", run: l_zero_pair_commutator },
    Entry { id: "base-scaling", family: "L", context: ContextKind::Base, statement: "Z(u·r; v_1..v_N) = Z(u; r·v_1..r·v_N)", run: l_base_scaling },
    Entry { id: "suslin-sum", family: "L", context: ContextKind::Base, statement: "v_ij = v_ji, ⟨u,v_ij⟩ = 0 and Σ v_ij = v·A for A = ⟨w,u⟩", run: l_suslin_sum },
    Entry { id: "orthogonal-additivity", family: "L", context: ContextKind::Base, statement: "X(u,v+w,0) = X(u,v,0)·X(u,w,0) for mutually orthogonal data", run: l_orthogonal_additivity },
    Entry { id: "transvection-equals-z", family: "L", context: ContextKind::Base, statement: "X(u,v·A,0) = Z(u; v_ij) for v with a symmetric zero pair", run: l_transvection_equals_z },
    Entry { id: "split-independence", family: "L", context: ContextKind::Base, statement: "Z(u; x_1·A..x_N·A) = Z(u; v_ij·A) whenever Σ x_k = v·A", run: l_split_independence },
    Entry { id: "upper-conjugation", family: "L", context: ContextKind::Base, statement: "g·Z^A(u,v)·g⁻¹ = Z^A(φ(g)u, φ(g)v)", run: l_upper_conjugation },
    Entry { id: "upper-addition", family: "L", context: ContextKind::Base, statement: "Z^A(u,v)·Z^A(u,w) = Z^A(u,v+w)·X(u,0,⟨v,w⟩A⁴)", run: l_upper_addition },
    Entry { id: "upper-symmetry", family: "L", context: ContextKind::Base, statement: "Z^A(u,v·bA³) = Z^A(v,u·bA³)", run: l_upper_symmetry },
    Entry { id: "upper-doubling", family: "L", context: ContextKind::Base, statement: "Z^A(u,u·bA³) = X(u,0,2bA⁵)", run: l_upper_doubling },
    Entry { id: "scaled-splitting", family: "L", context: ContextKind::Base, statement: "X(u+v·b,0,cA¹¹) = X(u,0,cA¹¹)·X(v,0,b²cA¹¹)·Z^A(u,v·bcA⁹)", run: l_scaled_splitting },
    Entry { id: "power-shift", family: "L", context: ContextKind::Mixed, statement: "Z(u·a^M,v,b) = Z(u,v,a^M·b)", run: l_power_shift },
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalogue_ids_are_unique() {
        let mut seen = std::collections::BTreeSet::new();
        for e in entries() {
            assert!(seen.insert(e.id()), "duplicate id {}", e.id());
        }
    }

    #[test]
    fn catalogue_family_counts() {
        let count = |f: &str| entries().iter().filter(|e| e.family() == f).count();
        assert_eq!(count("S"), 6);
        assert_eq!(count("K"), 7);
        assert_eq!(count("X"), 11);
        assert_eq!(count("Y"), 14);
        assert_eq!(count("KL"), 8);
        assert_eq!(count("T"), 7);
        assert_eq!(count("Z"), 8);
        assert_eq!(count("L"), 12);
        assert_eq!(entries().len(), 73);
    }

    #[test]
    fn contexts_derive_from_the_base_ring() {
        let ctx = CheckContext::new(&Ring::int(), 3).unwrap();
        assert_eq!(ctx.relative_ring().spec_string(), "Z[s]");
        assert_eq!(ctx.mixed_ring().spec_string(), "B(Z,2)");

        let poly = Ring::poly(&Ring::int_mod(5).unwrap(), &["t"]).unwrap();
        let ctx = CheckContext::new(&poly, 3).unwrap();
        assert_eq!(ctx.relative_ring(), &poly);

        let mixed = Ring::mixed_b(&Ring::int(), &Ring::int().from_i64(2)).unwrap();
        let ctx = CheckContext::new(&mixed, 3).unwrap();
        assert_eq!(ctx.relative_ring(), &mixed);
        assert_eq!(ctx.mixed_ring(), &mixed);
    }

    #[test]
    fn small_rank_is_rejected() {
        assert!(CheckContext::new(&Ring::int(), 2).is_err());
    }

    #[test]
    fn zero_samples_are_rejected() {
        let ctx = CheckContext::new(&Ring::int(), 3).unwrap();
        assert!(run_entry(&ctx, entry("S1").unwrap(), 1, 0).is_err());
    }

    #[test]
    fn every_entry_holds_over_the_integers() {
        let ctx = CheckContext::new(&Ring::int(), 3).unwrap();
        for e in entries() {
            let record = run_entry(&ctx, e, 11, 6).unwrap();
            assert_eq!(record.failures, 0, "{} failed: {:?}", e.id(), record);
        }
    }

    #[test]
    fn every_entry_holds_mod_four() {
        let ctx = CheckContext::new(&Ring::int_mod(4).unwrap(), 3).unwrap();
        for e in entries() {
            let record = run_entry(&ctx, e, 5, 4).unwrap();
            assert_eq!(record.failures, 0, "{} failed: {:?}", e.id(), record);
        }
    }

    #[test]
    fn records_are_deterministic() {
        let ctx = CheckContext::new(&Ring::int_mod(5).unwrap(), 3).unwrap();
        let e = entry("S3").unwrap();
        let one = serde_json::to_string(&run_entry(&ctx, e, 42, 10).unwrap()).unwrap();
        let two = serde_json::to_string(&run_entry(&ctx, e, 42, 10).unwrap()).unwrap();
        assert_eq!(one, two);
    }

    #[test]
    fn relative_entries_report_the_derived_ring() {
        let ctx = CheckContext::new(&Ring::int(), 3).unwrap();
        let record = run_entry(&ctx, entry("KL1").unwrap(), 3, 4).unwrap();
        assert_eq!(record.ring, "Z[s]");
        let record = run_entry(&ctx, entry("Z3").unwrap(), 3, 4).unwrap();
        assert_eq!(record.ring, "B(Z,2)");
    }
}
