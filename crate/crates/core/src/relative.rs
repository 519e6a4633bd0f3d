//! Relative presentations over a splitting ideal and the maps among them.
//!
//! For an ideal `I` of `R` whose projection `ρ: R -> R/I` splits via
//! `σ: R/I -> R`, three pictures of the relative group coexist:
//!
//! * the kernel picture: words over `R` whose image under `ρ*` is trivial;
//! * the rooted picture ([`KLWord`]): formal symbols `^g Y_ij(a)` with
//!   `a ∈ I`, acted on by the absolute group through the actor slot;
//! * the orbit picture ([`TulenbaevWord`]): formal symbols `[u, v, a, b]`
//!   with an orbit vector `u`, an orthogonal update vector `v` and two
//!   ideal scalars.
//!
//! The maps are [`KLWord::iota`] into the kernel picture, [`theta`] from
//! rooted symbols to orbit symbols, [`TulenbaevWord::kappa`] back into the
//! kernel picture, and [`psi_split`] from an absolute word into the
//! semidirect product of the rooted picture with the quotient group. Every
//! equality between images is certified at the projection level, matching
//! the word-level philosophy of [`crate::word`].

use std::fmt;

use crate::error::{Error, Result};
use crate::ring::{Hom, Ring, RingKind, Value};
use crate::symplectic::{check_index, sign, IndexedVector};
use crate::word::{OrbitVector, SteinbergWord};

/// A splitting ideal, carried as the pair of ring maps that exhibit the
/// splitting. Membership in the ideal is decided by `ρ(x) = 0`.
#[derive(Clone, Debug)]
pub struct SplittingIdeal {
    base: Ring,
    quotient: Ring,
    project: Hom,
    embed: Hom,
}

impl SplittingIdeal {
    /// The ideal of polynomials with zero constant term in a
    /// single-variable polynomial ring, split by the constant embedding.
    pub fn poly_at_zero(ring: &Ring) -> Result<SplittingIdeal> {
        let RingKind::Poly { base, vars } = ring.kind() else {
            return Err(Error::InvalidConstruction(format!(
                "{ring} is not a polynomial ring"
            )));
        };
        if vars.len() != 1 {
            return Err(Error::InvalidConstruction(format!(
                "{ring} has more than one variable"
            )));
        }
        Ok(SplittingIdeal {
            base: ring.clone(),
            quotient: base.clone(),
            project: Hom::eval_zero(ring)?,
            embed: Hom::poly_const(ring)?,
        })
    }

    /// The tail ideal of a mixed ring `B(R, a)`, split by the head
    /// embedding.
    pub fn mixed_tail(ring: &Ring) -> Result<SplittingIdeal> {
        let RingKind::MixedB { base, .. } = ring.kind() else {
            return Err(Error::InvalidConstruction(format!(
                "{ring} is not a mixed ring"
            )));
        };
        Ok(SplittingIdeal {
            base: ring.clone(),
            quotient: base.clone(),
            project: Hom::mixed_head(ring)?,
            embed: Hom::mixed_const(ring)?,
        })
    }

    pub fn base(&self) -> &Ring {
        &self.base
    }

    pub fn quotient(&self) -> &Ring {
        &self.quotient
    }

    pub fn project(&self) -> &Hom {
        &self.project
    }

    pub fn embed(&self) -> &Hom {
        &self.embed
    }

    pub fn contains(&self, x: &Value) -> Result<bool> {
        Ok(self.project.apply(x)?.is_zero())
    }

    /// `σρ(x)`, the constant part of `x`.
    pub fn reduce(&self, x: &Value) -> Result<Value> {
        self.embed.apply(&self.project.apply(x)?)
    }

    /// `x - σρ(x)`, the ideal part of `x`.
    pub fn ideal_part(&self, x: &Value) -> Result<Value> {
        Ok(x.sub(&self.reduce(x)?))
    }

    /// Transport a word over the quotient ring back into the base ring
    /// through the splitting.
    pub fn lift_word(&self, w: &SteinbergWord) -> Result<SteinbergWord> {
        w.map(&self.embed)
    }
}

/// A rooted relative symbol `^g Y_ij(a)` with `a` in the ideal, possibly
/// inverted.
#[derive(Clone, Debug)]
pub struct KLLetter {
    actor: SteinbergWord,
    row: i32,
    col: i32,
    param: Value,
    inv: bool,
}

impl KLLetter {
    pub fn rooted(
        ideal: &SplittingIdeal,
        n: usize,
        row: i32,
        col: i32,
        param: Value,
    ) -> Result<KLLetter> {
        check_index(row, n)?;
        check_index(col, n)?;
        if row == col {
            return Err(Error::InvalidConstruction(format!(
                "relative symbol Y({row},{col};..) needs distinct indices"
            )));
        }
        if param.ring() != ideal.base() {
            return Err(Error::mismatch(ideal.base(), param.ring()));
        }
        if !ideal.contains(&param)? {
            return Err(Error::PreconditionViolated(format!(
                "{param} is not in the ideal"
            )));
        }
        Ok(KLLetter {
            actor: SteinbergWord::identity(ideal.base(), n),
            row,
            col,
            param,
            inv: false,
        })
    }

    pub fn actor(&self) -> &SteinbergWord {
        &self.actor
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

    pub fn inverse(&self) -> KLLetter {
        let mut out = self.clone();
        out.inv = !out.inv;
        out
    }

    pub fn acted_by(&self, g: &SteinbergWord) -> KLLetter {
        let mut out = self.clone();
        out.actor = g.mul(&self.actor);
        out
    }

    /// Image in the absolute group: `g X_ij(a) g^{-1}`, inverted when the
    /// symbol is.
    pub fn iota(&self) -> SteinbergWord {
        let root = SteinbergWord::generator(
            self.actor.ring(),
            self.actor.rank(),
            self.row,
            self.col,
            self.param.clone(),
        )
        .unwrap();
        let image = root.conjugated_by(&self.actor);
        if self.inv {
            image.inverse()
        } else {
            image
        }
    }
}

impl fmt::Display for KLLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.actor.is_empty() {
            write!(f, "^{{{}}}", self.actor)?;
        }
        write!(f, "Y({},{};{})", self.row, self.col, self.param)?;
        if self.inv {
            write!(f, "^-1")?;
        }
        Ok(())
    }
}

/// A word of rooted relative symbols.
#[derive(Clone, Debug)]
pub struct KLWord {
    ring: Ring,
    n: usize,
    letters: Vec<KLLetter>,
}

impl KLWord {
    pub fn identity(ring: &Ring, n: usize) -> KLWord {
        KLWord {
            ring: ring.clone(),
            n,
            letters: Vec::new(),
        }
    }

    pub fn generator(
        ideal: &SplittingIdeal,
        n: usize,
        row: i32,
        col: i32,
        param: Value,
    ) -> Result<KLWord> {
        let letter = KLLetter::rooted(ideal, n, row, col, param)?;
        Ok(KLWord {
            ring: ideal.base().clone(),
            n,
            letters: vec![letter],
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[KLLetter] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn push(&mut self, letter: KLLetter) {
        assert_eq!(
            letter.actor.ring(),
            &self.ring,
            "letter ring does not match the word"
        );
        self.letters.push(letter);
    }

    pub fn mul(&self, other: &KLWord) -> KLWord {
        assert_eq!(self.ring, other.ring, "rings do not match");
        assert_eq!(self.n, other.n, "ranks do not match");
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().cloned());
        KLWord {
            ring: self.ring.clone(),
            n: self.n,
            letters,
        }
    }

    pub fn inverse(&self) -> KLWord {
        KLWord {
            ring: self.ring.clone(),
            n: self.n,
            letters: self.letters.iter().rev().map(KLLetter::inverse).collect(),
        }
    }

    pub fn acted_by(&self, g: &SteinbergWord) -> KLWord {
        KLWord {
            ring: self.ring.clone(),
            n: self.n,
            letters: self.letters.iter().map(|l| l.acted_by(g)).collect(),
        }
    }

    /// The image in the absolute group, letter by letter.
    pub fn iota(&self) -> SteinbergWord {
        let mut out = SteinbergWord::identity(&self.ring, self.n);
        for letter in &self.letters {
            out = out.mul(&letter.iota());
        }
        out
    }
}

impl fmt::Display for KLWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (k, letter) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            write!(f, "{letter}")?;
        }
        Ok(())
    }
}

/// `⟦g, h] = ^g h · h^{-1}` for the absolute-group action on relative
/// words.
pub fn bracket_action(g: &SteinbergWord, h: &KLWord) -> KLWord {
    h.acted_by(g).mul(&h.inverse())
}

/// `[h, g⟧ = h · ^g h^{-1}`.
pub fn bracket_coaction(h: &KLWord, g: &SteinbergWord) -> KLWord {
    h.mul(&h.inverse().acted_by(g))
}

/// An orbit-picture symbol `[u, v, a, b]` with `⟨u, v⟩ = 0` and ideal
/// scalars `a`, `b`, possibly inverted.
#[derive(Clone, Debug)]
pub struct TulenbaevLetter {
    u: OrbitVector,
    v: IndexedVector,
    a: Value,
    b: Value,
    inv: bool,
}

impl TulenbaevLetter {
    pub fn new(
        ideal: &SplittingIdeal,
        u: OrbitVector,
        v: IndexedVector,
        a: Value,
        b: Value,
    ) -> Result<TulenbaevLetter> {
        if u.ring() != ideal.base() {
            return Err(Error::mismatch(ideal.base(), u.ring()));
        }
        let pairing = u.vector().form(&v);
        if !pairing.is_zero() {
            return Err(Error::NotIsotropicPair {
                form: pairing.to_string(),
            });
        }
        for scalar in [&a, &b] {
            if !ideal.contains(scalar)? {
                return Err(Error::PreconditionViolated(format!(
                    "{scalar} is not in the ideal"
                )));
            }
        }
        Ok(TulenbaevLetter {
            u,
            v,
            a,
            b,
            inv: false,
        })
    }

    pub fn u(&self) -> &OrbitVector {
        &self.u
    }

    pub fn v(&self) -> &IndexedVector {
        &self.v
    }

    pub fn a(&self) -> &Value {
        &self.a
    }

    pub fn b(&self) -> &Value {
        &self.b
    }

    pub fn is_inverse(&self) -> bool {
        self.inv
    }

    pub fn inverse(&self) -> TulenbaevLetter {
        let mut out = self.clone();
        out.inv = !out.inv;
        out
    }

    /// Transport by an absolute word: the orbit witness is extended and
    /// the update vector moves through the projection of `g`.
    pub fn acted_by(&self, g: &SteinbergWord) -> TulenbaevLetter {
        TulenbaevLetter {
            u: self.u.translated(g),
            v: g.phi().apply(&self.v),
            a: self.a.clone(),
            b: self.b.clone(),
            inv: self.inv,
        }
    }

    /// Image in the absolute group, the realization of `[u, va, b]`.
    pub fn kappa(&self) -> Result<SteinbergWord> {
        let word = crate::word::x_element(&self.u, &self.v.scale(&self.a), &self.b)?;
        Ok(if self.inv { word.inverse() } else { word })
    }
}

impl fmt::Display for TulenbaevLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}; {}; {}; {}]",
            self.u.vector(),
            self.v,
            self.a,
            self.b
        )?;
        if self.inv {
            write!(f, "^-1")?;
        }
        Ok(())
    }
}

/// A word of orbit-picture symbols.
#[derive(Clone, Debug)]
pub struct TulenbaevWord {
    ring: Ring,
    n: usize,
    letters: Vec<TulenbaevLetter>,
}

impl TulenbaevWord {
    pub fn identity(ring: &Ring, n: usize) -> TulenbaevWord {
        TulenbaevWord {
            ring: ring.clone(),
            n,
            letters: Vec::new(),
        }
    }

    pub fn generator(letter: TulenbaevLetter) -> TulenbaevWord {
        TulenbaevWord {
            ring: letter.u.ring().clone(),
            n: letter.u.rank(),
            letters: vec![letter],
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[TulenbaevLetter] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn push(&mut self, letter: TulenbaevLetter) {
        assert_eq!(
            letter.u.ring(),
            &self.ring,
            "letter ring does not match the word"
        );
        self.letters.push(letter);
    }

    pub fn mul(&self, other: &TulenbaevWord) -> TulenbaevWord {
        assert_eq!(self.ring, other.ring, "rings do not match");
        assert_eq!(self.n, other.n, "ranks do not match");
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().cloned());
        TulenbaevWord {
            ring: self.ring.clone(),
            n: self.n,
            letters,
        }
    }

    pub fn inverse(&self) -> TulenbaevWord {
        TulenbaevWord {
            ring: self.ring.clone(),
            n: self.n,
            letters: self
                .letters
                .iter()
                .rev()
                .map(TulenbaevLetter::inverse)
                .collect(),
        }
    }

    pub fn acted_by(&self, g: &SteinbergWord) -> TulenbaevWord {
        TulenbaevWord {
            ring: self.ring.clone(),
            n: self.n,
            letters: self.letters.iter().map(|l| l.acted_by(g)).collect(),
        }
    }

    /// The image in the absolute group, letter by letter.
    pub fn kappa(&self) -> Result<SteinbergWord> {
        let mut out = SteinbergWord::identity(&self.ring, self.n);
        for letter in &self.letters {
            out = out.mul(&letter.kappa()?);
        }
        Ok(out)
    }
}

impl fmt::Display for TulenbaevWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (k, letter) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            write!(f, "{letter}")?;
        }
        Ok(())
    }
}

/// Transport a single orbit symbol by an absolute word.
pub fn act_on_tulenbaev(g: &SteinbergWord, x: &TulenbaevLetter) -> TulenbaevLetter {
    x.acted_by(g)
}

/// Replace each rooted symbol by its orbit-picture counterpart and
/// transport it by the actor:
///
/// * `Y_ij(a)` with `j ≠ -i` becomes `[e_i, e_{-j}, a·sign(-j), 0]`;
/// * `Y_{i,-i}(a)` becomes `[e_i, 0, 0, a]`.
pub fn theta(word: &KLWord, ideal: &SplittingIdeal) -> Result<TulenbaevWord> {
    let ring = ideal.base();
    let n = word.rank();
    let mut out = TulenbaevWord::identity(ring, n);
    for letter in word.letters() {
        let u = OrbitVector::basis(ring, n, letter.row())?;
        let root = if letter.col() == -letter.row() {
            TulenbaevLetter::new(
                ideal,
                u,
                IndexedVector::zero(ring, n),
                ring.zero(),
                letter.param().clone(),
            )?
        } else {
            let v = IndexedVector::basis(ring, n, -letter.col())?;
            let scaled = letter
                .param()
                .mul(&ring.from_i64(sign(-letter.col()) as i64));
            TulenbaevLetter::new(ideal, u, v, scaled, ring.zero())?
        };
        let mut image = root.acted_by(letter.actor());
        if letter.is_inverse() {
            image = image.inverse();
        }
        out.push(image);
    }
    Ok(out)
}

/// Split an absolute word into the semidirect product of the rooted
/// relative group and the quotient group, letter by letter:
/// `X_ij(r) ↦ (Y_ij(r - σρ(r)), X_ij(ρ(r)))`.
///
/// Letters are accumulated with the semidirect multiplication, so each
/// relative symbol is acted on by the lift of the quotient word read so
/// far. The returned quotient word lives over the quotient ring.
pub fn psi_split(
    w: &SteinbergWord,
    ideal: &SplittingIdeal,
) -> Result<(KLWord, SteinbergWord)> {
    if w.ring() != ideal.base() {
        return Err(Error::mismatch(ideal.base(), w.ring()));
    }
    let n = w.rank();
    let mut relative = KLWord::identity(ideal.base(), n);
    let mut quotient = SteinbergWord::identity(ideal.quotient(), n);
    let mut lifted = SteinbergWord::identity(ideal.base(), n);
    for letter in w.letters() {
        let r = letter.param();
        let rel_param = ideal.ideal_part(r)?;
        let quot_param = ideal.project().apply(r)?;
        let quot_letter =
            crate::word::Letter::new(n, letter.row(), letter.col(), quot_param)?;
        let root = KLLetter::rooted(ideal, n, letter.row(), letter.col(), rel_param)?;
        if letter.is_inverse() {
            quotient.push(quot_letter.inverse())?;
            lifted = lifted.mul(&ideal.lift_word(&SteinbergWord::from_letters(
                ideal.quotient(),
                n,
                vec![quot_letter.inverse()],
            )?)?);
            relative.push(root.inverse().acted_by(&lifted));
        } else {
            relative.push(root.acted_by(&lifted));
            quotient.push(quot_letter.clone())?;
            lifted = lifted.mul(&ideal.lift_word(&SteinbergWord::from_letters(
                ideal.quotient(),
                n,
                vec![quot_letter],
            )?)?);
        }
    }
    Ok((relative, quotient))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::parse_value;
    use crate::sample::{random_ideal_value, random_value, random_word, rng_for};
    use crate::symplectic::SympMatrix;
    use crate::word::OrbitPair;
    use rand::Rng;

    fn poly_fixture() -> (Ring, SplittingIdeal) {
        let base = Ring::poly(&Ring::int(), &["s"]).unwrap();
        let ideal = SplittingIdeal::poly_at_zero(&base).unwrap();
        (base, ideal)
    }

    fn mixed_fixture() -> (Ring, SplittingIdeal) {
        let z = Ring::int();
        let base = Ring::mixed_b(&z, &z.from_i64(2)).unwrap();
        let ideal = SplittingIdeal::mixed_tail(&base).unwrap();
        (base, ideal)
    }

    #[test]
    fn splitting_round_trips_and_membership_agree() {
        for (ring, ideal) in [poly_fixture(), mixed_fixture()] {
            let mut rng = rng_for(11, "splitting");
            for _ in 0..200 {
                let q = random_value(ideal.quotient(), &mut rng);
                let back = ideal.project().apply(&ideal.embed().apply(&q).unwrap()).unwrap();
                assert_eq!(back, q);

                let x = random_value(&ring, &mut rng);
                let part = ideal.ideal_part(&x).unwrap();
                assert!(ideal.contains(&part).unwrap());
                assert_eq!(part.add(&ideal.reduce(&x).unwrap()), x);

                let member = random_ideal_value(&ring, &mut rng);
                assert!(ideal.contains(&member).unwrap());
            }
        }
    }

    #[test]
    fn kappa_matches_the_displayed_examples() {
        let (ring, ideal) = poly_fixture();
        let n = 3;
        let s = parse_value(&ring, "s").unwrap();
        let e1 = OrbitVector::basis(&ring, n, 1).unwrap();
        let e2 = IndexedVector::basis(&ring, n, 2).unwrap();

        let letter = TulenbaevLetter::new(
            &ideal,
            e1.clone(),
            e2.clone(),
            s.clone(),
            ring.zero(),
        )
        .unwrap();
        let expected =
            SympMatrix::esd(e1.vector(), &e2.scale(&s), &ring.zero()).unwrap();
        assert_eq!(letter.kappa().unwrap().phi(), expected);

        let long = TulenbaevLetter::new(
            &ideal,
            e1.clone(),
            IndexedVector::zero(&ring, n),
            ring.zero(),
            s.clone(),
        )
        .unwrap();
        let expected = SympMatrix::transvection(&ring, n, 1, -1, &s).unwrap();
        assert_eq!(long.kappa().unwrap().phi(), expected);

        let mut rng = rng_for(12, "kappa-trivial");
        let g = random_word(&ring, n, 4, &mut rng);
        let u = e1.translated(&g);
        let v = g.phi().apply(&e2);
        let trivial =
            TulenbaevLetter::new(&ideal, u, v, ring.zero(), ring.zero()).unwrap();
        assert!(trivial.kappa().unwrap().phi_is_identity());
    }

    #[test]
    fn kappa_lands_in_the_kernel_of_the_projection() {
        let (ring, ideal) = poly_fixture();
        let n = 3;
        let mut rng = rng_for(13, "kappa-kernel");
        for _ in 0..40 {
            let g = random_word(&ring, n, 3, &mut rng);
            let pair = OrbitPair::from_witness(g).unwrap();
            let u = pair.first();
            let v = pair.second_vector().clone();
            let a = random_ideal_value(&ring, &mut rng);
            let b = random_ideal_value(&ring, &mut rng);
            let letter = TulenbaevLetter::new(&ideal, u, v, a, b).unwrap();
            let image = letter.kappa().unwrap();
            let reduced = image.map(ideal.project()).unwrap();
            assert!(reduced.phi_is_identity());
        }
    }

    #[test]
    fn action_is_conjugation_after_kappa() {
        let (ring, ideal) = poly_fixture();
        let n = 3;
        let mut rng = rng_for(14, "act");
        for _ in 0..30 {
            let h = random_word(&ring, n, 3, &mut rng);
            let pair = OrbitPair::from_witness(h).unwrap();
            let a = random_ideal_value(&ring, &mut rng);
            let b = random_ideal_value(&ring, &mut rng);
            let letter = TulenbaevLetter::new(
                &ideal,
                pair.first(),
                pair.second_vector().clone(),
                a,
                b,
            )
            .unwrap();
            let g = random_word(&ring, n, 3, &mut rng);
            let moved = act_on_tulenbaev(&g, &letter);
            let lhs = moved.kappa().unwrap().phi();
            let rhs = letter.kappa().unwrap().conjugated_by(&g).phi();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn theta_matches_the_rooted_symbols() {
        let (ring, ideal) = poly_fixture();
        let n = 3;
        let s = parse_value(&ring, "s").unwrap();

        let short = KLWord::generator(&ideal, n, 1, 2, s.clone()).unwrap();
        let image = theta(&short, &ideal).unwrap();
        let letter = &image.letters()[0];
        assert_eq!(letter.u().vector(), &IndexedVector::basis(&ring, n, 1).unwrap());
        assert_eq!(letter.v(), &IndexedVector::basis(&ring, n, -2).unwrap());
        assert_eq!(letter.a(), &s.neg());
        assert!(letter.b().is_zero());

        let long = KLWord::generator(&ideal, n, 1, -1, s.clone()).unwrap();
        let image = theta(&long, &ideal).unwrap();
        let letter = &image.letters()[0];
        assert!(letter.v().is_zero());
        assert!(letter.a().is_zero());
        assert_eq!(letter.b(), &s);
    }

    #[test]
    fn kappa_after_theta_agrees_with_iota() {
        let (ring, ideal) = poly_fixture();
        let n = 3;
        let mut rng = rng_for(15, "kappa-theta");
        for _ in 0..40 {
            let row = crate::sample::random_index(n, &mut rng);
            let col = loop {
                let c = crate::sample::random_index(n, &mut rng);
                if c != row {
                    break c;
                }
            };
            let a = random_ideal_value(&ring, &mut rng);
            let mut word = KLWord::generator(&ideal, n, row, col, a).unwrap();
            let g = random_word(&ring, n, 3, &mut rng);
            word = word.acted_by(&g);
            if rng.gen_bool(0.5) {
                word = word.inverse();
            }
            let via_theta = theta(&word, &ideal).unwrap().kappa().unwrap();
            assert_eq!(via_theta.phi(), word.iota().phi());
        }
    }

    #[test]
    fn psi_split_matches_the_displayed_examples() {
        let (ring, ideal) = poly_fixture();
        let n = 3;
        let t = parse_value(&ring, "s").unwrap();

        let pure = SteinbergWord::generator(&ring, n, 1, 2, t.clone()).unwrap();
        let (rel, quot) = psi_split(&pure, &ideal).unwrap();
        assert_eq!(rel.letters().len(), 1);
        assert_eq!(rel.letters()[0].param(), &t);
        assert!(rel.letters()[0].actor().is_empty());
        assert!(quot.letters()[0].param().is_zero());

        let constant =
            SteinbergWord::generator(&ring, n, 1, 2, ring.from_i64(5)).unwrap();
        let (rel, quot) = psi_split(&constant, &ideal).unwrap();
        assert!(rel.letters()[0].param().is_zero());
        assert_eq!(quot.letters()[0].param(), &ideal.quotient().from_i64(5));

        let mixed_param = t.add(&ring.one());
        let w = SteinbergWord::generator(&ring, n, 1, 2, mixed_param).unwrap();
        let (rel, quot) = psi_split(&w, &ideal).unwrap();
        let recombined = rel.iota().mul(&ideal.lift_word(&quot).unwrap());
        assert_eq!(recombined.phi(), w.phi());
    }

    #[test]
    fn psi_split_then_multiply_back_is_the_identity_at_phi_level() {
        for (ring, ideal) in [poly_fixture(), mixed_fixture()] {
            let n = 3;
            let mut rng = rng_for(16, "psi-split");
            for _ in 0..60 {
                let len = rng.gen_range(0..=8usize);
                let mut w = SteinbergWord::identity(&ring, n);
                for _ in 0..len {
                    let row = crate::sample::random_index(n, &mut rng);
                    let col = loop {
                        let c = crate::sample::random_index(n, &mut rng);
                        if c != row {
                            break c;
                        }
                    };
                    let mut letter = crate::word::Letter::new(
                        n,
                        row,
                        col,
                        random_value(&ring, &mut rng),
                    )
                    .unwrap();
                    if rng.gen_bool(0.5) {
                        letter = letter.inverse();
                    }
                    w.push(letter).unwrap();
                }
                let (rel, quot) = psi_split(&w, &ideal).unwrap();
                for letter in rel.letters() {
                    assert!(ideal.contains(letter.param()).unwrap());
                }
                let recombined = rel.iota().mul(&ideal.lift_word(&quot).unwrap());
                assert_eq!(recombined.phi(), w.phi());
            }
        }
    }

    #[test]
    fn rooted_symbols_reject_parameters_outside_the_ideal() {
        let (ring, ideal) = poly_fixture();
        let err = KLWord::generator(&ideal, 3, 1, 2, ring.one());
        assert!(err.is_err());
        let e1 = OrbitVector::basis(&ring, 3, 1).unwrap();
        let err = TulenbaevLetter::new(
            &ideal,
            e1.clone(),
            IndexedVector::zero(&ring, 3),
            ring.one(),
            ring.zero(),
        );
        assert!(err.is_err());
        let err = TulenbaevLetter::new(
            &ideal,
            e1.clone(),
            IndexedVector::basis(&ring, 3, -1).unwrap(),
            ring.zero(),
            ring.zero(),
        );
        assert!(matches!(err, Err(Error::NotIsotropicPair { .. })));
    }

    #[test]
    fn brackets_expand_to_the_defining_products() {
        let (ring, ideal) = poly_fixture();
        let n = 3;
        let s = parse_value(&ring, "s").unwrap();
        let h = KLWord::generator(&ideal, n, 1, 2, s).unwrap();
        let g = SteinbergWord::generator(&ring, n, 2, 3, ring.from_i64(2)).unwrap();

        let lhs = bracket_action(&g, &h).iota().phi();
        let conj = h.iota().conjugated_by(&g);
        let rhs = conj.mul(&h.iota().inverse()).phi();
        assert_eq!(lhs, rhs);

        let lhs = bracket_coaction(&h, &g).iota().phi();
        let rhs = h.iota().mul(&conj.inverse()).phi();
        assert_eq!(lhs, rhs);
    }
}
