//! Localization functors on words, the stage maps into the mixed ring,
//! the generator-level globalization map, dilation search and comaximal
//! gluing.
//!
//! Everything here moves whole words between rings: substitution
//! endomorphisms `t ↦ x` of `R[t]`, the direct system `ψ_ij: t ↦ a^{j-i}t`,
//! its compatible maps `φ_i: R[t] → B(R,a)`, and the globalization map
//! that sends a four-slot generator over the localized mixed ring to a
//! concrete word over the mixed ring itself.  Claims are certified at the
//! matrix level throughout; a [`DerivationTrace`] upgrades a dilation
//! result to a word-level certificate when it descends along the lift.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::relative::SplittingIdeal;
use crate::ring::{Hom, Ring, RingKind, Value};
use crate::symplectic::{signed_indices, IndexedVector, SympMatrix};
use crate::word::{DerivationTrace, OrbitVector, SteinbergWord};
use crate::zcalc::{canonical_witness, z_full_free, ZElement};

fn single_var(ring: &Ring) -> Result<String> {
    match ring.kind() {
        RingKind::Poly { vars, .. } if vars.len() == 1 => Ok(vars[0].clone()),
        _ => Err(Error::InvalidConstruction(format!(
            "{ring} is not a single-variable polynomial ring"
        ))),
    }
}

/// The variable of a single-variable polynomial ring, as a value.
fn var_value(ring: &Ring) -> Result<Value> {
    single_var(ring)?;
    Value::poly_from_terms(ring, vec![(vec![1], ring.base().unwrap().one())])
}

/// Letterwise image of `g` under the evaluation endomorphism `t ↦ x`.
pub fn evaluate_word(g: &SteinbergWord, x: &Value) -> Result<SteinbergWord> {
    g.map(&Hom::substitute(g.ring(), x)?)
}

/// Whether `g` visibly lies in the kernel of evaluation at zero: the word
/// with `t ↦ 0` must reduce freely to the empty word.
pub fn is_relative_word(g: &SteinbergWord) -> Result<bool> {
    single_var(g.ring())?;
    let (reduced, _) = evaluate_word(g, &g.ring().zero())?.simplify();
    Ok(reduced.is_empty())
}

fn require_relative(g: &SteinbergWord) -> Result<()> {
    if is_relative_word(g)? {
        Ok(())
    } else {
        Err(Error::PreconditionViolated(
            "word does not visibly vanish at t = 0".into(),
        ))
    }
}

/// One bonding map `ψ_ij: t ↦ a^{j-i}t` of the direct system whose stages
/// are all `R[t]`.
#[derive(Clone, Debug)]
pub struct DirectSystemMap {
    source: u32,
    target: u32,
    hom: Hom,
}

impl DirectSystemMap {
    pub fn new(ring: &Ring, a: &Value, i: u32, j: u32) -> Result<DirectSystemMap> {
        single_var(ring)?;
        if j < i {
            return Err(Error::InvalidConstruction(format!(
                "target stage {j} precedes source stage {i}"
            )));
        }
        let base = ring.base().unwrap();
        if a.ring() != base {
            return Err(Error::mismatch(base, a.ring()));
        }
        let scale = Hom::poly_const(ring)?.apply(a)?.pow(j - i);
        let image = var_value(ring)?.mul(&scale);
        Ok(DirectSystemMap {
            source: i,
            target: j,
            hom: Hom::substitute(ring, &image)?,
        })
    }

    pub fn source_stage(&self) -> u32 {
        self.source
    }

    pub fn target_stage(&self) -> u32 {
        self.target
    }

    pub fn hom(&self) -> &Hom {
        &self.hom
    }

    pub fn apply(&self, p: &Value) -> Result<Value> {
        self.hom.apply(p)
    }

    pub fn apply_word(&self, g: &SteinbergWord) -> Result<SteinbergWord> {
        g.map(&self.hom)
    }
}

/// The stage map `φ_i: R[t] → B(R,a)` sending `p` to the pair made of its
/// constant term and the localized tail evaluated at `a^{-i}t`.
#[derive(Clone, Debug)]
pub struct PhiIMap {
    stage: u32,
    hom: Hom,
}

impl PhiIMap {
    pub fn new(source: &Ring, target: &Ring, i: u32) -> Result<PhiIMap> {
        Ok(PhiIMap {
            stage: i,
            hom: Hom::phi_i(source, target, i)?,
        })
    }

    pub fn stage(&self) -> u32 {
        self.stage
    }

    pub fn hom(&self) -> &Hom {
        &self.hom
    }

    pub fn apply(&self, p: &Value) -> Result<Value> {
        self.hom.apply(p)
    }

    pub fn apply_word(&self, g: &SteinbergWord) -> Result<SteinbergWord> {
        g.map(&self.hom)
    }
}

/// Coefficientwise localization `R[t] → R_a[t]`.
pub fn coefficient_localization(ring: &Ring, a: &Value) -> Result<Hom> {
    single_var(ring)?;
    let base = ring.base().unwrap();
    Hom::coeff_map(ring, Hom::localize(base, a)?)
}

/// Coefficientwise lift `R_a[t] → R[t]`, defined on denominator-free
/// polynomials.
pub fn coefficient_lift(ring: &Ring) -> Result<Hom> {
    single_var(ring)?;
    let base = ring.base().unwrap();
    Hom::coeff_map(ring, Hom::local_lift(base)?)
}

/// Whether the matrix fixes the hyperbolic pair `±n` and acts trivially
/// on its rows, the shape of images from two fewer variables.
pub fn outer_block_trivial(m: &SympMatrix) -> bool {
    let ring = m.ring();
    let n = m.rank() as i32;
    for k in signed_indices(m.rank()) {
        for i in [n, -n] {
            let expected = if k == i { ring.one() } else { ring.zero() };
            if m.get(i, k) != &expected || m.get(k, i) != &expected {
                return false;
            }
        }
    }
    true
}

/// The globalization of one four-slot generator: the chosen exponents,
/// the lifted data and the realized word over the mixed ring.
#[derive(Clone, Debug)]
pub struct TulenbaevImage {
    source_u: OrbitVector,
    source_v: IndexedVector,
    source_b: Value,
    source_c: Value,
    n_pow: u32,
    m_pow: u32,
    lifted_u: IndexedVector,
    lifted_v: IndexedVector,
    lifted_w: IndexedVector,
    element: ZElement,
}

impl TulenbaevImage {
    pub fn n_pow(&self) -> u32 {
        self.n_pow
    }

    pub fn m_pow(&self) -> u32 {
        self.m_pow
    }

    pub fn lifted_u(&self) -> &IndexedVector {
        &self.lifted_u
    }

    pub fn lifted_v(&self) -> &IndexedVector {
        &self.lifted_v
    }

    pub fn lifted_w(&self) -> &IndexedVector {
        &self.lifted_w
    }

    pub fn element(&self) -> &ZElement {
        &self.element
    }

    pub fn word(&self) -> &SteinbergWord {
        self.element.word()
    }

    /// Relocalizing the realized word's projection must recover the
    /// projection of the original generator.
    pub fn diagram_commutes(&self) -> Result<bool> {
        let back = Hom::localize_into(self.source_u.ring())?;
        let localized = self.element.word().phi().map(&back)?;
        let direct = SympMatrix::esd(
            self.source_u.vector(),
            &self.source_v.scale(&self.source_b),
            &self.source_c,
        )?;
        Ok(localized == direct)
    }
}

fn vector_lifts(v: &IndexedVector, lift: &Hom) -> bool {
    v.support().all(|(_, x)| lift.apply(x).is_ok())
}

/// Globalize the four-slot generator `(u, v, b, c)` over the localized
/// mixed ring into a word over the mixed ring itself.
///
/// The base vector is scaled by `a^N` until it lifts, the update vector
/// by a further `a^M` until the lifted pairings are exact, and the two
/// ideal parameters are divided by the matching powers; the word is the
/// explicit-witness `Z` element of the lifted data.
pub fn tulenbaev_t(
    u: &OrbitVector,
    v: &IndexedVector,
    b: &Value,
    c: &Value,
    max_pow: u32,
) -> Result<TulenbaevImage> {
    let loc = u.ring().clone();
    let RingKind::Localized { base, .. } = loc.kind() else {
        return Err(Error::InvalidConstruction(format!(
            "{loc} is not a localization"
        )));
    };
    let mixed = base.clone();
    if !matches!(mixed.kind(), RingKind::MixedB { .. }) {
        return Err(Error::InvalidConstruction(format!(
            "{mixed} carries no uniquely divisible ideal"
        )));
    }
    if v.ring() != &loc || b.ring() != &loc || c.ring() != &loc {
        return Err(Error::mismatch(&loc, v.ring()));
    }
    let pairing = u.vector().form(v);
    if !pairing.is_zero() {
        return Err(Error::NotIsotropicPair {
            form: pairing.to_string(),
        });
    }

    let ideal = SplittingIdeal::mixed_tail(&mixed)?;
    let lift = Hom::local_lift(&loc)?;
    let a = loc.localization_elem().unwrap().clone();
    let a_loc = Hom::localize_into(&loc)?.apply(&a)?;

    let member = |x: &Value| -> Result<Value> {
        let lifted = lift.apply(x).map_err(|_| {
            Error::PreconditionViolated(format!("{x} does not lift into the ideal"))
        })?;
        if ideal.contains(&lifted)? {
            Ok(lifted)
        } else {
            Err(Error::PreconditionViolated(format!(
                "{x} lies outside the distinguished ideal"
            )))
        }
    };
    let b_int = member(b)?;
    let c_int = member(c)?;

    let w = canonical_witness(u, &loc.one());
    let n_pow = (0..=max_pow)
        .find(|&k| {
            let s = a_loc.pow(k);
            vector_lifts(&u.vector().scale(&s), &lift)
                && vector_lifts(&v.scale(&s), &lift)
                && vector_lifts(&w.scale(&s), &lift)
        })
        .ok_or_else(|| {
            Error::LiftFailure(format!(
                "no exponent up to {max_pow} clears the denominators"
            ))
        })?;
    let scale = a_loc.pow(n_pow);
    let lifted_u = u.vector().scale(&scale).map(&lift)?;
    let lifted_v0 = v.scale(&scale).map(&lift)?;
    let lifted_w0 = w.scale(&scale).map(&lift)?;

    let m_pow = (0..=max_pow)
        .find(|&k| {
            let s = a.pow(k);
            lifted_u.form(&lifted_v0.scale(&s)).is_zero()
                && lifted_w0.scale(&s).form(&lifted_u) == a.pow(2 * n_pow + k)
        })
        .ok_or_else(|| {
            Error::LiftFailure(format!(
                "no exponent up to {max_pow} makes the lifted pairings exact"
            ))
        })?;
    let lifted_v = lifted_v0.scale(&a.pow(m_pow));
    let lifted_w = lifted_w0.scale(&a.pow(m_pow));

    let b_shifted = b_int.exact_div(&a.pow(2 * n_pow + m_pow))?;
    let c_shifted = c_int.exact_div(&a.pow(2 * n_pow))?;
    let element = z_full_free(&lifted_u, &lifted_v, &b_shifted, &c_shifted, &lifted_w)?;

    Ok(TulenbaevImage {
        source_u: u.clone(),
        source_v: v.clone(),
        source_b: b.clone(),
        source_c: c.clone(),
        n_pow,
        m_pow,
        lifted_u,
        lifted_v,
        lifted_w,
        element,
    })
}

/// Result of a dilation search, echoing the verified hypothesis and the
/// artifacts of the first successful exponent.
#[derive(Clone, Debug)]
pub struct DilationOutcome {
    word_text: String,
    ring_text: String,
    a_text: String,
    n_found: Option<u32>,
    matrix_identity: bool,
    trace_replayed: bool,
    lifted_word: Option<SteinbergWord>,
    descended_trace: Option<DerivationTrace>,
}

#[derive(Serialize)]
struct DilationRecord<'a> {
    word: &'a str,
    ring: &'a str,
    a: &'a str,
    #[serde(rename = "N_found")]
    n_found: Option<u32>,
    matrix_identity: bool,
    trace_replayed: bool,
}

impl DilationOutcome {
    pub fn n_found(&self) -> Option<u32> {
        self.n_found
    }

    pub fn matrix_identity(&self) -> bool {
        self.matrix_identity
    }

    pub fn trace_replayed(&self) -> bool {
        self.trace_replayed
    }

    /// The dilated word lifted to the denominator-free side, when found.
    pub fn lifted_word(&self) -> Option<&SteinbergWord> {
        self.lifted_word.as_ref()
    }

    /// The supplied trace transported along dilation and lift, when it
    /// descends.
    pub fn descended_trace(&self) -> Option<&DerivationTrace> {
        self.descended_trace.as_ref()
    }

    pub fn report_json(&self) -> serde_json::Value {
        serde_json::to_value(DilationRecord {
            word: &self.word_text,
            ring: &self.ring_text,
            a: &self.a_text,
            n_found: self.n_found,
            matrix_identity: self.matrix_identity,
            trace_replayed: self.trace_replayed,
        })
        .unwrap()
    }
}

/// Search for the smallest `N ≤ n_max` such that `g(a^N t)` lifts to a
/// denominator-free word with identity projection.
///
/// The input may live over `R[t]` (it is localized coefficientwise first)
/// or directly over `R_a[t]`.  The matrix-level hypothesis, identity
/// projection after localization, is enforced before searching.  When a
/// trace certifying the localized word is supplied, the search further
/// requires the trace to descend: its image under dilation and lift must
/// replay on the lifted word, upgrading the conclusion to word level.
pub fn dilation_search(
    g: &SteinbergWord,
    a: &Value,
    n_max: u32,
    trace: Option<&DerivationTrace>,
) -> Result<DilationOutcome> {
    let ring = g.ring().clone();
    single_var(&ring)?;
    require_relative(g)?;
    let base = ring.base().unwrap().clone();

    let (g_loc, local_poly) = match base.kind() {
        RingKind::Localized { base: inner, elem } => {
            if a.ring() != inner || a != elem {
                return Err(Error::InvalidConstruction(format!(
                    "{a} is not the distinguished element of {base}"
                )));
            }
            (g.clone(), ring.clone())
        }
        _ => {
            if a.ring() != &base {
                return Err(Error::mismatch(&base, a.ring()));
            }
            let down = coefficient_localization(&ring, a)?;
            (g.map(&down)?, down.target_ring())
        }
    };
    let n = g.rank();

    let matrix_identity = g_loc.phi_is_identity();
    if !matrix_identity {
        return Err(Error::HypothesisViolated(
            "localized word does not project to the identity".into(),
        ));
    }

    let identity = SteinbergWord::identity(&local_poly, n);
    let certified = trace
        .map(|t| t.certifies(&g_loc, &identity).is_ok())
        .unwrap_or(false);

    let lift = coefficient_lift(&local_poly)?;
    let a_local = {
        let inner = local_poly.base().unwrap();
        Hom::poly_const(&local_poly)?.apply(&Hom::localize_into(inner)?.apply(a)?)?
    };
    let t_var = var_value(&local_poly)?;

    let mut outcome = DilationOutcome {
        word_text: g.to_string(),
        ring_text: ring.spec_string(),
        a_text: a.to_string(),
        n_found: None,
        matrix_identity,
        trace_replayed: false,
        lifted_word: None,
        descended_trace: None,
    };

    for k in 0..=n_max {
        let sub = Hom::substitute(&local_poly, &t_var.mul(&a_local.pow(k)))?;
        let dilated = g_loc.map(&sub)?;
        let Ok(lifted) = dilated.map(&lift) else {
            continue;
        };
        if !lifted.phi_is_identity() {
            continue;
        }
        if certified {
            let t = trace.expect("certified implies a trace was supplied");
            let Ok(moved) = t.map(&sub, n) else { continue };
            let Ok(descended) = moved.map(&lift, n) else {
                continue;
            };
            let target = SteinbergWord::identity(lifted.ring(), n);
            if descended.certifies(&lifted, &target).is_err() {
                continue;
            }
            outcome.descended_trace = Some(descended);
            outcome.trace_replayed = true;
        }
        outcome.n_found = Some(k);
        outcome.lifted_word = Some(lifted);
        break;
    }
    Ok(outcome)
}

/// Per-instance record of the comaximal gluing implication.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct GlueReport {
    pub hypothesis_a: bool,
    pub hypothesis_b: bool,
    pub conclusion: bool,
}

impl GlueReport {
    /// Both localizations kill the word, so the implication has force.
    pub fn applicable(&self) -> bool {
        self.hypothesis_a && self.hypothesis_b
    }

    /// The implication holds: either vacuously or with the conclusion.
    pub fn passes(&self) -> bool {
        !self.applicable() || self.conclusion
    }
}

/// Check the gluing implication at matrix level: if `g` dies in both the
/// `a`- and the `b`-localization, it must already be trivial.  Bézout
/// witnesses `s`, `r` with `sa + rb = 1` certify comaximality.
pub fn comaximal_glue_check(
    g: &SteinbergWord,
    a: &Value,
    b: &Value,
    s: &Value,
    r: &Value,
) -> Result<GlueReport> {
    let ring = g.ring().clone();
    single_var(&ring)?;
    require_relative(g)?;
    let base = ring.base().unwrap();
    for x in [a, b, s, r] {
        if x.ring() != base {
            return Err(Error::mismatch(base, x.ring()));
        }
    }
    let combo = s.mul(a).add(&r.mul(b));
    if !combo.is_one() {
        return Err(Error::NotComaximal(format!(
            "witnesses combine to {combo}, not 1"
        )));
    }
    let hypothesis_a = g.map(&coefficient_localization(&ring, a)?)?.phi_is_identity();
    let hypothesis_b = g.map(&coefficient_localization(&ring, b)?)?.phi_is_identity();
    let conclusion = g.phi_is_identity();
    Ok(GlueReport {
        hypothesis_a,
        hypothesis_b,
        conclusion,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::parse_value;
    use crate::sample::{random_orthogonal_to, random_value, random_word, rng_for};
    use crate::word::{commutator, Letter, RelInstance, StepOp, TraceStep};
    use rand::Rng;

    fn poly_int() -> Ring {
        Ring::poly(&Ring::int(), &["t"]).unwrap()
    }

    fn mixed_pair() -> (Ring, Ring, Value) {
        let z = Ring::int();
        let two = z.from_i64(2);
        let mixed = Ring::mixed_b(&z, &two).unwrap();
        let a = parse_value(&mixed, "(2|0)").unwrap();
        let loc = Ring::localized(&mixed, &a).unwrap();
        (mixed, loc, a)
    }

    fn ideal_sample(mixed: &Ring, loc: &Ring, rng: &mut impl Rng) -> Value {
        let raw = crate::sample::random_ideal_value(mixed, rng);
        Hom::localize_into(loc).unwrap().apply(&raw).unwrap()
    }

    #[test]
    fn evaluation_substitutes_the_variable() {
        let ring = poly_int();
        let n = 3;
        let g = SteinbergWord::generator(&ring, n, 1, 2, parse_value(&ring, "t").unwrap())
            .unwrap();
        let image = evaluate_word(&g, &parse_value(&ring, "2*t").unwrap()).unwrap();
        let expected =
            SteinbergWord::generator(&ring, n, 1, 2, parse_value(&ring, "2*t").unwrap())
                .unwrap();
        assert_eq!(image.letters(), expected.letters());
    }

    #[test]
    fn evaluation_at_zero_trivializes_relative_words() {
        let ring = poly_int();
        let n = 3;
        let mut rng = rng_for(41, "evalzero");
        let t = parse_value(&ring, "t").unwrap();
        for _ in 0..20 {
            let mut g = random_word(&ring, n, 6, &mut rng);
            g = SteinbergWord::from_letters(
                &ring,
                n,
                g.letters()
                    .iter()
                    .map(|l| {
                        let mut scaled =
                            Letter::new(n, l.row(), l.col(), l.param().mul(&t)).unwrap();
                        if l.is_inverse() {
                            scaled = scaled.inverse();
                        }
                        scaled
                    })
                    .collect(),
            )
            .unwrap();
            let at_zero = evaluate_word(&g, &ring.zero()).unwrap();
            let (reduced, trace) = at_zero.simplify();
            assert!(reduced.is_empty());
            assert!(trace.certifies(&at_zero, &reduced).is_ok());
        }
    }

    #[test]
    fn evaluation_commutes_with_the_projection() {
        let ring = poly_int();
        let n = 3;
        let mut rng = rng_for(42, "evalphi");
        for _ in 0..100 {
            let g = random_word(&ring, n, 4, &mut rng);
            let x = random_value(&ring, &mut rng);
            let sub = Hom::substitute(&ring, &x).unwrap();
            let lhs = evaluate_word(&g, &x).unwrap().phi();
            let rhs = g.phi().map(&sub).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn evaluation_is_functorial() {
        let ring = poly_int();
        let n = 3;
        let mut rng = rng_for(43, "evalcomp");
        for _ in 0..40 {
            let g = random_word(&ring, n, 3, &mut rng);
            let x = random_value(&ring, &mut rng);
            let y = random_value(&ring, &mut rng);
            let staged = evaluate_word(&evaluate_word(&g, &x).unwrap(), &y).unwrap();
            let composed = Hom::substitute(&ring, &y).unwrap().apply(&x).unwrap();
            let direct = evaluate_word(&g, &composed).unwrap();
            assert_eq!(staged.letters(), direct.letters());
        }
    }

    #[test]
    fn direct_system_maps_compose() {
        let ring = poly_int();
        let a = Ring::int().from_i64(2);
        let mut rng = rng_for(44, "system");
        for i in 0..=2u32 {
            for j in i..=3 {
                for k in j..=4 {
                    let ij = DirectSystemMap::new(&ring, &a, i, j).unwrap();
                    let jk = DirectSystemMap::new(&ring, &a, j, k).unwrap();
                    let ik = DirectSystemMap::new(&ring, &a, i, k).unwrap();
                    for _ in 0..10 {
                        let p = random_value(&ring, &mut rng);
                        assert_eq!(
                            jk.apply(&ij.apply(&p).unwrap()).unwrap(),
                            ik.apply(&p).unwrap()
                        );
                    }
                }
            }
        }
        assert!(DirectSystemMap::new(&ring, &a, 3, 1).is_err());
    }

    #[test]
    fn stage_maps_agree_along_the_system() {
        let ring = poly_int();
        let z = Ring::int();
        let a = z.from_i64(2);
        let mixed = Ring::mixed_b(&z, &a).unwrap();
        let mut rng = rng_for(45, "stages");
        for i in 0..=4u32 {
            for j in i..=4 {
                let shift = DirectSystemMap::new(&ring, &a, i, j).unwrap();
                let phi_i = PhiIMap::new(&ring, &mixed, i).unwrap();
                let phi_j = PhiIMap::new(&ring, &mixed, j).unwrap();
                for _ in 0..10 {
                    let p = random_value(&ring, &mut rng);
                    assert_eq!(
                        phi_j.apply(&shift.apply(&p).unwrap()).unwrap(),
                        phi_i.apply(&p).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn stage_map_values_match_the_displayed_examples() {
        let ring = poly_int();
        let z = Ring::int();
        let mixed = Ring::mixed_b(&z, &z.from_i64(2)).unwrap();
        let p = parse_value(&ring, "1+3*t").unwrap();

        let phi_0 = PhiIMap::new(&ring, &mixed, 0).unwrap();
        assert_eq!(
            phi_0.apply(&p).unwrap(),
            parse_value(&mixed, "(1|3*t)").unwrap()
        );

        let shift = DirectSystemMap::new(&ring, &z.from_i64(2), 0, 1).unwrap();
        let phi_1 = PhiIMap::new(&ring, &mixed, 1).unwrap();
        assert_eq!(
            phi_1.apply(&shift.apply(&p).unwrap()).unwrap(),
            phi_0.apply(&p).unwrap()
        );

        let constant = parse_value(&ring, "5").unwrap();
        assert_eq!(
            phi_0.apply(&constant).unwrap(),
            parse_value(&mixed, "(5|0)").unwrap()
        );
    }

    #[test]
    fn globalized_generators_close_the_diagram() {
        let (mixed, loc, _) = mixed_pair();
        let n = 3;
        let mut rng = rng_for(46, "tdiagram");
        for _ in 0..25 {
            let witness = random_word(&loc, n, 2, &mut rng);
            let u = OrbitVector::from_witness(witness);
            let v = random_orthogonal_to(u.vector(), &mut rng);
            let b = ideal_sample(&mixed, &loc, &mut rng);
            let c = ideal_sample(&mixed, &loc, &mut rng);
            let image = tulenbaev_t(&u, &v, &b, &c, 24).unwrap();
            assert!(image.diagram_commutes().unwrap());
            assert!(image.lifted_u().form(image.lifted_v()).is_zero());
            let a = loc.localization_elem().unwrap().clone();
            assert_eq!(
                image.lifted_w().form(image.lifted_u()),
                a.pow(2 * image.n_pow() + image.m_pow())
            );
        }
    }

    #[test]
    fn globalization_matches_the_basis_examples() {
        let (mixed, loc, _) = mixed_pair();
        let n = 3;
        let mut rng = rng_for(47, "tbasis");
        let e1 = OrbitVector::basis(&loc, n, 1).unwrap();
        let zero = IndexedVector::zero(&loc, n);

        let c = ideal_sample(&mixed, &loc, &mut rng);
        let long = tulenbaev_t(&e1, &zero, &loc.zero(), &c, 24).unwrap();
        assert!(long.diagram_commutes().unwrap());
        let c_int = Hom::local_lift(&loc).unwrap().apply(&c).unwrap();
        let expected = SympMatrix::esd(
            &IndexedVector::basis(&mixed, n, 1).unwrap(),
            &IndexedVector::zero(&mixed, n),
            &c_int,
        )
        .unwrap();
        assert_eq!(long.word().phi(), expected);

        let e2 = IndexedVector::basis(&loc, n, 2).unwrap();
        let b = ideal_sample(&mixed, &loc, &mut rng);
        let short = tulenbaev_t(&e1, &e2, &b, &loc.zero(), 24).unwrap();
        assert!(short.diagram_commutes().unwrap());
    }

    #[test]
    fn globalization_keeps_the_outer_block_trivial() {
        let (mixed, loc, _) = mixed_pair();
        let n = 3;
        let mut rng = rng_for(48, "tblock");
        for _ in 0..15 {
            let len = rng.gen_range(0..3usize);
            let mut witness = SteinbergWord::identity(&loc, n);
            for _ in 0..len {
                let (row, col) = loop {
                    let r = crate::sample::random_index(n - 1, &mut rng);
                    let c = crate::sample::random_index(n - 1, &mut rng);
                    if r != c {
                        break (r, c);
                    }
                };
                let param = crate::sample::random_small(&loc, &mut rng);
                witness
                    .push(Letter::new(n, row, col, param).unwrap())
                    .unwrap();
            }
            let u = OrbitVector::from_witness(witness);
            let mut v = random_orthogonal_to(u.vector(), &mut rng);
            v.set(n as i32, loc.zero()).unwrap();
            v.set(-(n as i32), loc.zero()).unwrap();
            if !u.vector().form(&v).is_zero() {
                continue;
            }
            let b = ideal_sample(&mixed, &loc, &mut rng);
            let c = ideal_sample(&mixed, &loc, &mut rng);
            let image = tulenbaev_t(&u, &v, &b, &c, 24).unwrap();
            assert!(outer_block_trivial(&image.word().phi()));
        }
    }

    #[test]
    fn globalization_rejects_parameters_outside_the_ideal() {
        let (_, loc, _) = mixed_pair();
        let n = 3;
        let e1 = OrbitVector::basis(&loc, n, 1).unwrap();
        let zero = IndexedVector::zero(&loc, n);
        let outside = loc.one();
        let err = tulenbaev_t(&e1, &zero, &outside, &loc.zero(), 24);
        assert!(matches!(err, Err(Error::PreconditionViolated(_))));
    }

    fn dilation_demo_word(ring: &Ring) -> SteinbergWord {
        let n = 3;
        let quarter_t = parse_value(ring, "(1/2^2)*t").unwrap();
        let four = parse_value(ring, "4").unwrap();
        let inner = commutator(
            &SteinbergWord::generator(ring, n, 1, 3, quarter_t).unwrap(),
            &SteinbergWord::generator(ring, n, 3, 2, four).unwrap(),
        );
        let tail =
            SteinbergWord::generator(ring, n, 1, 2, parse_value(ring, "-t").unwrap())
                .unwrap();
        inner.mul(&tail)
    }

    fn dilation_demo_trace(ring: &Ring) -> DerivationTrace {
        let quarter_t = parse_value(ring, "(1/2^2)*t").unwrap();
        let four = parse_value(ring, "4").unwrap();
        let t = parse_value(ring, "t").unwrap();
        DerivationTrace::new(vec![
            TraceStep {
                pos: 2,
                op: StepOp::InvToNeg { reverse: false },
            },
            TraceStep {
                pos: 3,
                op: StepOp::InvToNeg { reverse: false },
            },
            TraceStep {
                pos: 0,
                op: StepOp::Rewrite {
                    rel: RelInstance::Compose {
                        i: 1,
                        j: 3,
                        k: 2,
                        a: quarter_t.clone(),
                        b: four.clone(),
                    },
                    reverse: false,
                },
            },
            TraceStep {
                pos: 2,
                op: StepOp::Rewrite {
                    rel: RelInstance::Merge {
                        row: 1,
                        col: 3,
                        a: quarter_t.clone(),
                        b: quarter_t.neg(),
                    },
                    reverse: false,
                },
            },
            TraceStep {
                pos: 2,
                op: StepOp::Rewrite {
                    rel: RelInstance::Vanish {
                        row: 1,
                        col: 3,
                        ring: ring.clone(),
                    },
                    reverse: false,
                },
            },
            TraceStep {
                pos: 1,
                op: StepOp::Rewrite {
                    rel: RelInstance::Merge {
                        row: 3,
                        col: 2,
                        a: four.clone(),
                        b: four.neg(),
                    },
                    reverse: false,
                },
            },
            TraceStep {
                pos: 1,
                op: StepOp::Rewrite {
                    rel: RelInstance::Vanish {
                        row: 3,
                        col: 2,
                        ring: ring.clone(),
                    },
                    reverse: false,
                },
            },
            TraceStep {
                pos: 0,
                op: StepOp::Rewrite {
                    rel: RelInstance::Merge {
                        row: 1,
                        col: 2,
                        a: t.clone(),
                        b: t.neg(),
                    },
                    reverse: false,
                },
            },
            TraceStep {
                pos: 0,
                op: StepOp::Rewrite {
                    rel: RelInstance::Vanish {
                        row: 1,
                        col: 2,
                        ring: ring.clone(),
                    },
                    reverse: false,
                },
            },
        ])
    }

    #[test]
    fn dilation_finds_zero_for_denominator_free_words() {
        let ring = poly_int();
        let n = 3;
        let a = Ring::int().from_i64(2);
        let bt = parse_value(&ring, "3*t").unwrap();
        let ct = parse_value(&ring, "5*t").unwrap();
        let sum = bt.add(&ct);
        let g = SteinbergWord::generator(&ring, n, 1, 2, bt.clone())
            .unwrap()
            .mul(&SteinbergWord::generator(&ring, n, 1, 2, ct.clone()).unwrap())
            .mul(&SteinbergWord::generator(&ring, n, 1, 2, sum.neg()).unwrap());

        let plain = dilation_search(&g, &a, 16, None).unwrap();
        assert_eq!(plain.n_found(), Some(0));
        assert!(!plain.trace_replayed());

        let g_loc = g
            .map(&coefficient_localization(&ring, &a).unwrap())
            .unwrap();
        let (reduced, trace) = g_loc.simplify();
        assert!(reduced.is_empty());
        let certified = dilation_search(&g, &a, 16, Some(&trace)).unwrap();
        assert_eq!(certified.n_found(), Some(0));
        assert!(certified.trace_replayed());
        assert!(certified.descended_trace().is_some());
    }

    #[test]
    fn dilation_clears_arranged_denominators_at_two() {
        let z = Ring::int();
        let a = z.from_i64(2);
        let loc = Ring::localized(&z, &a).unwrap();
        let ring = Ring::poly(&loc, &["t"]).unwrap();
        let g = dilation_demo_word(&ring);
        assert!(g.phi_is_identity());

        let plain = dilation_search(&g, &a, 16, None).unwrap();
        assert_eq!(plain.n_found(), Some(2));
        let lifted = plain.lifted_word().unwrap();
        assert_eq!(lifted.ring().spec_string(), "Z[t]");
        assert!(lifted.phi_is_identity());

        let trace = dilation_demo_trace(&ring);
        assert!(trace
            .certifies(&g, &SteinbergWord::identity(&ring, 3))
            .is_ok());
        let certified = dilation_search(&g, &a, 16, Some(&trace)).unwrap();
        assert_eq!(certified.n_found(), Some(2));
        assert!(certified.trace_replayed());
        let descended = certified.descended_trace().unwrap();
        assert_eq!(descended.len(), 9);
        assert!(descended
            .certifies(
                certified.lifted_word().unwrap(),
                &SteinbergWord::identity(certified.lifted_word().unwrap().ring(), 3)
            )
            .is_ok());
    }

    #[test]
    fn dilation_is_monotone_past_the_first_hit() {
        let z = Ring::int();
        let a = z.from_i64(2);
        let loc = Ring::localized(&z, &a).unwrap();
        let ring = Ring::poly(&loc, &["t"]).unwrap();
        let g = dilation_demo_word(&ring);
        let found = dilation_search(&g, &a, 16, None).unwrap().n_found().unwrap();

        let a_loc = Hom::poly_const(&ring)
            .unwrap()
            .apply(&Hom::localize_into(&loc).unwrap().apply(&a).unwrap())
            .unwrap();
        let lift = coefficient_lift(&ring).unwrap();
        for extra in 1..=3u32 {
            let image = var_value(&ring).unwrap().mul(&a_loc.pow(found + extra));
            let dilated = evaluate_word(&g, &image).unwrap();
            let lifted = dilated.map(&lift).unwrap();
            assert!(lifted.phi_is_identity());
        }
    }

    #[test]
    fn dilation_gates_on_the_localized_hypothesis() {
        let ring = poly_int();
        let a = Ring::int().from_i64(2);
        let g =
            SteinbergWord::generator(&ring, 3, 1, 2, parse_value(&ring, "t").unwrap())
                .unwrap();
        let err = dilation_search(&g, &a, 8, None);
        assert!(matches!(err, Err(Error::HypothesisViolated(_))));

        let constant =
            SteinbergWord::generator(&ring, 3, 1, 2, parse_value(&ring, "1+t").unwrap())
                .unwrap();
        let err = dilation_search(&constant, &a, 8, None);
        assert!(matches!(err, Err(Error::PreconditionViolated(_))));
    }

    #[test]
    fn glue_check_confirms_trivial_words() {
        let ring = poly_int();
        let z = Ring::int();
        let n = 3;
        let (a, b) = (z.from_i64(2), z.from_i64(3));
        let (s, r) = (z.from_i64(-1), z.from_i64(1));
        let mut rng = rng_for(49, "glue");

        for _ in 0..10 {
            let t = parse_value(&ring, "t").unwrap();
            let p = random_value(&ring, &mut rng).mul(&t);
            let core = SteinbergWord::generator(&ring, n, 1, 2, p.clone())
                .unwrap()
                .mul(&SteinbergWord::generator(&ring, n, 1, 2, p.neg()).unwrap());
            let conjugator = random_word(&ring, n, 2, &mut rng);
            let scaled = SteinbergWord::from_letters(
                &ring,
                n,
                conjugator
                    .letters()
                    .iter()
                    .map(|l| {
                        let mut lt =
                            Letter::new(n, l.row(), l.col(), l.param().mul(&t)).unwrap();
                        if l.is_inverse() {
                            lt = lt.inverse();
                        }
                        lt
                    })
                    .collect(),
            )
            .unwrap();
            let g = core.conjugated_by(&scaled);
            let report = comaximal_glue_check(&g, &a, &b, &s, &r).unwrap();
            assert!(report.hypothesis_a && report.hypothesis_b && report.conclusion);
            assert!(report.applicable() && report.passes());
        }

        let lone =
            SteinbergWord::generator(&ring, n, 1, 2, parse_value(&ring, "t").unwrap())
                .unwrap();
        let report = comaximal_glue_check(&lone, &a, &b, &s, &r).unwrap();
        assert!(!report.applicable() && report.passes());

        let err = comaximal_glue_check(&lone, &a, &b, &z.one(), &z.one());
        assert!(matches!(err, Err(Error::NotComaximal(_))));
    }

    #[test]
    fn outer_block_detection_matches_the_shape() {
        let ring = Ring::int();
        let n = 3;
        let inner = SympMatrix::transvection(&ring, n, 1, 2, &ring.from_i64(5)).unwrap();
        assert!(outer_block_trivial(&inner));
        let outer = SympMatrix::transvection(&ring, n, 1, 3, &ring.from_i64(5)).unwrap();
        assert!(!outer_block_trivial(&outer));
    }
}
