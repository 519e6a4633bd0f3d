//! Exact arithmetic over a small tower of commutative rings.
//!
//! The tower is built from five descriptor shapes:
//!
//! * `Z` — arbitrary-precision integers;
//! * `Z/m` — integers modulo `m >= 2`;
//! * `R[x_1,...,x_k]` — sparse multivariate polynomials over a base ring;
//! * `Loc(R, a)` — the localization `R_a`, with `a` a certified
//!   non-zero-divisor; elements are canonical fractions `x / a^k`;
//! * `B(R, a)` — the ring `R ⋉ t·R_a[t]` of pairs `(r, f)` where `f` is a
//!   polynomial over `R_a` with zero constant term, multiplied by
//!   `(r, f)·(s, g) = (rs, r·g + f·s + f·g)`.
//!
//! Every value carries its descriptor and is kept in canonical form, so
//! structural equality decides ring equality. All arithmetic is exact.

mod hom;
mod parse;

pub use hom::Hom;
pub(crate) use parse::split_all_top;
pub use parse::{parse_ring, parse_value};

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

/// Exponent vector of a monomial; one entry per declared variable.
pub type Monomial = Vec<u32>;

/// Descriptor of a ring in the tower. Compared structurally.
#[derive(Debug, PartialEq, Eq, Hash)]
pub enum RingKind {
    Int,
    IntMod {
        modulus: BigInt,
    },
    Poly {
        base: Ring,
        vars: Vec<String>,
    },
    Localized {
        base: Ring,
        elem: Value,
    },
    MixedB {
        base: Ring,
        elem: Value,
        var: String,
    },
}

/// Shared handle to a ring descriptor.
#[derive(Clone, Debug)]
pub struct Ring(Arc<RingKind>);

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || *self.0 == *other.0
    }
}
impl Eq for Ring {}

impl std::hash::Hash for Ring {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.hash(state);
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.spec_string())
    }
}

impl Ring {
    pub fn kind(&self) -> &RingKind {
        &self.0
    }

    /// The ring of integers.
    pub fn int() -> Ring {
        Ring(Arc::new(RingKind::Int))
    }

    /// Integers modulo `m`, `m >= 2`.
    pub fn int_mod(m: i64) -> Result<Ring> {
        if m < 2 {
            return Err(Error::InvalidConstruction(format!(
                "modulus must be >= 2, got {m}"
            )));
        }
        Ok(Ring(Arc::new(RingKind::IntMod {
            modulus: BigInt::from(m),
        })))
    }

    /// Polynomials over `base` in the named variables.
    pub fn poly(base: &Ring, vars: &[&str]) -> Result<Ring> {
        if vars.is_empty() {
            return Err(Error::InvalidConstruction(
                "polynomial ring needs at least one variable".into(),
            ));
        }
        let mut seen = base.all_variables();
        for v in vars {
            if v.is_empty() || !v.chars().all(|c| c.is_ascii_alphanumeric()) {
                return Err(Error::InvalidConstruction(format!(
                    "bad variable name {v:?}"
                )));
            }
            if !seen.insert((*v).to_string()) {
                return Err(Error::InvalidConstruction(format!(
                    "variable {v:?} already used in the tower"
                )));
            }
        }
        Ok(Ring(Arc::new(RingKind::Poly {
            base: base.clone(),
            vars: vars.iter().map(|s| s.to_string()).collect(),
        })))
    }

    /// Localization of `base` at `elem`, which must be a certified
    /// non-zero-divisor (hence also non-nilpotent).
    pub fn localized(base: &Ring, elem: &Value) -> Result<Ring> {
        if elem.ring() != base {
            return Err(Error::mismatch(base, elem.ring()));
        }
        if !base.certify_non_zero_divisor(elem) {
            return Err(Error::InvalidConstruction(format!(
                "cannot certify {} as a non-zero-divisor in {}",
                elem, base
            )));
        }
        Ok(Ring(Arc::new(RingKind::Localized {
            base: base.clone(),
            elem: elem.clone(),
        })))
    }

    /// The mixed ring `B(base, elem) = base ⋉ t·base_elem[t]`.
    pub fn mixed_b(base: &Ring, elem: &Value) -> Result<Ring> {
        Self::mixed_b_with_var(base, elem, "t")
    }

    pub fn mixed_b_with_var(base: &Ring, elem: &Value, var: &str) -> Result<Ring> {
        if elem.ring() != base {
            return Err(Error::mismatch(base, elem.ring()));
        }
        if !base.certify_non_zero_divisor(elem) {
            return Err(Error::InvalidConstruction(format!(
                "cannot certify {} as a non-zero-divisor in {}",
                elem, base
            )));
        }
        if base.all_variables().contains(var) {
            return Err(Error::InvalidConstruction(format!(
                "variable {var:?} already used in the tower"
            )));
        }
        Ok(Ring(Arc::new(RingKind::MixedB {
            base: base.clone(),
            elem: elem.clone(),
            var: var.to_string(),
        })))
    }

    /// All variable names used anywhere in the tower below this ring.
    fn all_variables(&self) -> std::collections::BTreeSet<String> {
        match self.kind() {
            RingKind::Int | RingKind::IntMod { .. } => Default::default(),
            RingKind::Poly { base, vars } => {
                let mut s = base.all_variables();
                s.extend(vars.iter().cloned());
                s
            }
            RingKind::Localized { base, .. } => base.all_variables(),
            RingKind::MixedB { base, var, .. } => {
                let mut s = base.all_variables();
                s.insert(var.clone());
                s
            }
        }
    }

    /// For `Loc(R,a)` and `B(R,a)`: the base ring `R`.
    pub fn base(&self) -> Option<&Ring> {
        match self.kind() {
            RingKind::Poly { base, .. }
            | RingKind::Localized { base, .. }
            | RingKind::MixedB { base, .. } => Some(base),
            _ => None,
        }
    }

    /// For `Loc(R,a)` and `B(R,a)`: the distinguished element `a` of `R`.
    pub fn localization_elem(&self) -> Option<&Value> {
        match self.kind() {
            RingKind::Localized { elem, .. } | RingKind::MixedB { elem, .. } => Some(elem),
            _ => None,
        }
    }

    /// For `B(R,a)`: the localization `Loc(R,a)` housing tail coefficients.
    pub fn mixed_loc_ring(&self) -> Option<Ring> {
        match self.kind() {
            RingKind::MixedB { base, elem, .. } => {
                Some(Ring(Arc::new(RingKind::Localized {
                    base: base.clone(),
                    elem: elem.clone(),
                })))
            }
            _ => None,
        }
    }

    /// For `B(R,a)`: the ring `Loc(R,a)[t]` housing the tail polynomial.
    pub fn mixed_tail_ring(&self) -> Option<Ring> {
        match self.kind() {
            RingKind::MixedB { var, .. } => {
                let loc = self.mixed_loc_ring().unwrap();
                Some(Ring(Arc::new(RingKind::Poly {
                    base: loc,
                    vars: vec![var.clone()],
                })))
            }
            _ => None,
        }
    }

    pub fn zero(&self) -> Value {
        let payload = match self.kind() {
            RingKind::Int => Payload::Int(BigInt::zero()),
            RingKind::IntMod { .. } => Payload::Residue(BigInt::zero()),
            RingKind::Poly { .. } => Payload::Poly(BTreeMap::new()),
            RingKind::Localized { base, .. } => Payload::Frac {
                num: Box::new(base.zero()),
                pow: 0,
            },
            RingKind::MixedB { base, .. } => Payload::Mixed {
                head: Box::new(base.zero()),
                tail: Box::new(self.mixed_tail_ring().unwrap().zero()),
            },
        };
        Value {
            ring: self.clone(),
            payload,
        }
    }

    pub fn one(&self) -> Value {
        self.from_i64(1)
    }

    /// The canonical image of an integer in this ring.
    pub fn from_i64(&self, n: i64) -> Value {
        self.from_bigint(BigInt::from(n))
    }

    pub fn from_bigint(&self, n: BigInt) -> Value {
        let payload = match self.kind() {
            RingKind::Int => Payload::Int(n),
            RingKind::IntMod { modulus } => Payload::Residue(n.mod_floor(modulus)),
            RingKind::Poly { base, vars } => {
                let c = base.from_bigint(n);
                let mut terms = BTreeMap::new();
                if !c.is_zero() {
                    terms.insert(vec![0; vars.len()], c);
                }
                Payload::Poly(terms)
            }
            RingKind::Localized { base, .. } => Payload::Frac {
                num: Box::new(base.from_bigint(n)),
                pow: 0,
            },
            RingKind::MixedB { base, .. } => Payload::Mixed {
                head: Box::new(base.from_bigint(n)),
                tail: Box::new(self.mixed_tail_ring().unwrap().zero()),
            },
        };
        Value {
            ring: self.clone(),
            payload,
        }
    }

    /// Whether the ring is known to be an integral domain. Conservative:
    /// `false` only means "not certified".
    pub fn is_domain(&self) -> bool {
        match self.kind() {
            RingKind::Int => true,
            RingKind::IntMod { modulus } => is_small_prime(modulus),
            RingKind::Poly { base, .. }
            | RingKind::Localized { base, .. }
            | RingKind::MixedB { base, .. } => base.is_domain(),
        }
    }

    /// Structural certificate that `x` is a non-zero-divisor.
    pub fn certify_non_zero_divisor(&self, x: &Value) -> bool {
        if x.ring() != self || x.is_zero() {
            return false;
        }
        match (self.kind(), &x.payload) {
            (RingKind::Int, _) => true,
            (RingKind::IntMod { modulus }, Payload::Residue(r)) => r.gcd(modulus).is_one(),
            (RingKind::Poly { base, .. }, Payload::Poly(terms)) => {
                if base.is_domain() {
                    return true;
                }
                // A constant polynomial inherits the certificate of its
                // constant coefficient.
                if terms.len() == 1 {
                    if let Some((m, c)) = terms.iter().next() {
                        if m.iter().all(|&e| e == 0) {
                            return base.certify_non_zero_divisor(c);
                        }
                    }
                }
                false
            }
            (RingKind::Localized { base, .. }, Payload::Frac { num, .. }) => {
                base.certify_non_zero_divisor(num)
            }
            (RingKind::MixedB { base, .. }, Payload::Mixed { head, tail }) => {
                base.is_domain() || (tail.is_zero() && base.certify_non_zero_divisor(head))
            }
            _ => false,
        }
    }

    /// Render the descriptor in the textual ring-spec grammar.
    pub fn spec_string(&self) -> String {
        match self.kind() {
            RingKind::Int => "Z".into(),
            RingKind::IntMod { modulus } => format!("Z/{modulus}"),
            RingKind::Poly { base, vars } => {
                format!("{}[{}]", base.spec_string(), vars.join(","))
            }
            RingKind::Localized { base, elem } => {
                format!("Loc({},{})", base.spec_string(), elem)
            }
            RingKind::MixedB { base, elem, var } => {
                if var == "t" {
                    format!("B({},{})", base.spec_string(), elem)
                } else {
                    format!("B({},{};{})", base.spec_string(), elem, var)
                }
            }
        }
    }
}

fn is_small_prime(m: &BigInt) -> bool {
    if m <= &BigInt::from(1) {
        return false;
    }
    let mut d = BigInt::from(2);
    while &d * &d <= *m {
        if m.mod_floor(&d).is_zero() {
            return false;
        }
        d += 1;
    }
    true
}

/// Canonical payload of a value; variants correspond to `RingKind`.
#[derive(Debug, PartialEq, Eq, Hash)]
pub(crate) enum Payload {
    Int(BigInt),
    /// Residue in `[0, m)`.
    Residue(BigInt),
    /// Nonzero coefficients indexed by exponent vector, lexicographic order.
    Poly(BTreeMap<Monomial, Value>),
    /// `num / a^pow` with `pow` minimal (if `pow > 0` then `a` does not
    /// divide `num` exactly).
    Frac {
        num: Box<Value>,
        pow: u32,
    },
    /// Pair `(head, tail)` with `tail` a zero-constant-term polynomial over
    /// the localization.
    Mixed {
        head: Box<Value>,
        tail: Box<Value>,
    },
}

impl Clone for Payload {
    fn clone(&self) -> Self {
        match self {
            Payload::Int(n) => Payload::Int(n.clone()),
            Payload::Residue(n) => Payload::Residue(n.clone()),
            Payload::Poly(t) => Payload::Poly(t.clone()),
            Payload::Frac { num, pow } => Payload::Frac {
                num: num.clone(),
                pow: *pow,
            },
            Payload::Mixed { head, tail } => Payload::Mixed {
                head: head.clone(),
                tail: tail.clone(),
            },
        }
    }
}

/// An element of a ring in the tower, kept in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Value {
    ring: Ring,
    payload: Payload,
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", parse::render_value(self))
    }
}

impl Value {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub(crate) fn payload(&self) -> &Payload {
        &self.payload
    }

    pub fn is_zero(&self) -> bool {
        match &self.payload {
            Payload::Int(n) | Payload::Residue(n) => n.is_zero(),
            Payload::Poly(t) => t.is_empty(),
            Payload::Frac { num, .. } => num.is_zero(),
            Payload::Mixed { head, tail } => head.is_zero() && tail.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        *self == self.ring.one()
    }

    fn check_same_ring(&self, other: &Value) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::mismatch(&self.ring, &other.ring))
        }
    }

    pub fn try_add(&self, other: &Value) -> Result<Value> {
        self.check_same_ring(other)?;
        let payload = match (&self.payload, &other.payload) {
            (Payload::Int(a), Payload::Int(b)) => Payload::Int(a + b),
            (Payload::Residue(a), Payload::Residue(b)) => {
                let m = match self.ring.kind() {
                    RingKind::IntMod { modulus } => modulus,
                    _ => unreachable!(),
                };
                Payload::Residue((a + b).mod_floor(m))
            }
            (Payload::Poly(a), Payload::Poly(b)) => {
                let mut terms = a.clone();
                for (m, c) in b {
                    add_term(&mut terms, m.clone(), c.clone());
                }
                Payload::Poly(terms)
            }
            (Payload::Frac { num: na, pow: ka }, Payload::Frac { num: nb, pow: kb }) => {
                // x/a^ka + y/a^kb = (x·a^{k-ka} + y·a^{k-kb}) / a^k, k = max.
                let a = self.ring.localization_elem().unwrap();
                let k = (*ka).max(*kb);
                let num = na
                    .mul(&a.pow(k - ka))
                    .add(&nb.mul(&a.pow(k - kb)));
                return Ok(frac_canonical(self.ring.clone(), num, k));
            }
            (
                Payload::Mixed { head: ha, tail: ta },
                Payload::Mixed { head: hb, tail: tb },
            ) => Payload::Mixed {
                head: Box::new(ha.add(hb)),
                tail: Box::new(ta.add(tb)),
            },
            _ => unreachable!("canonical payloads always match the ring kind"),
        };
        Ok(Value {
            ring: self.ring.clone(),
            payload,
        })
    }

    pub fn try_neg(&self) -> Result<Value> {
        let payload = match &self.payload {
            Payload::Int(a) => Payload::Int(-a),
            Payload::Residue(a) => {
                let m = match self.ring.kind() {
                    RingKind::IntMod { modulus } => modulus,
                    _ => unreachable!(),
                };
                Payload::Residue((-a).mod_floor(m))
            }
            Payload::Poly(t) => {
                Payload::Poly(t.iter().map(|(m, c)| (m.clone(), c.neg())).collect())
            }
            Payload::Frac { num, pow } => Payload::Frac {
                num: Box::new(num.neg()),
                pow: *pow,
            },
            Payload::Mixed { head, tail } => Payload::Mixed {
                head: Box::new(head.neg()),
                tail: Box::new(tail.neg()),
            },
        };
        Ok(Value {
            ring: self.ring.clone(),
            payload,
        })
    }

    pub fn try_sub(&self, other: &Value) -> Result<Value> {
        self.try_add(&other.try_neg()?)
    }

    pub fn try_mul(&self, other: &Value) -> Result<Value> {
        self.check_same_ring(other)?;
        let payload = match (&self.payload, &other.payload) {
            (Payload::Int(a), Payload::Int(b)) => Payload::Int(a * b),
            (Payload::Residue(a), Payload::Residue(b)) => {
                let m = match self.ring.kind() {
                    RingKind::IntMod { modulus } => modulus,
                    _ => unreachable!(),
                };
                Payload::Residue((a * b).mod_floor(m))
            }
            (Payload::Poly(a), Payload::Poly(b)) => {
                let mut terms = BTreeMap::new();
                for (ma, ca) in a {
                    for (mb, cb) in b {
                        let m: Monomial =
                            ma.iter().zip(mb.iter()).map(|(x, y)| x + y).collect();
                        add_term(&mut terms, m, ca.mul(cb));
                    }
                }
                Payload::Poly(terms)
            }
            (Payload::Frac { num: na, pow: ka }, Payload::Frac { num: nb, pow: kb }) => {
                return Ok(frac_canonical(self.ring.clone(), na.mul(nb), ka + kb));
            }
            (
                Payload::Mixed { head: ha, tail: ta },
                Payload::Mixed { head: hb, tail: tb },
            ) => {
                // (r, f)·(s, g) = (rs, r·g + f·s + f·g) inside Loc(R,a)[t].
                let loc = self.ring.mixed_loc_ring().unwrap();
                let tail_ring = self.ring.mixed_tail_ring().unwrap();
                let ha_t = constant_poly(&tail_ring, localize_into(&loc, ha));
                let hb_t = constant_poly(&tail_ring, localize_into(&loc, hb));
                let tail = ha_t.mul(tb).add(&ta.mul(&hb_t)).add(&ta.mul(tb));
                Payload::Mixed {
                    head: Box::new(ha.mul(hb)),
                    tail: Box::new(tail),
                }
            }
            _ => unreachable!("canonical payloads always match the ring kind"),
        };
        Ok(Value {
            ring: self.ring.clone(),
            payload,
        })
    }

    pub fn add(&self, other: &Value) -> Value {
        self.try_add(other).expect("ring mismatch in add")
    }

    pub fn sub(&self, other: &Value) -> Value {
        self.try_sub(other).expect("ring mismatch in sub")
    }

    pub fn neg(&self) -> Value {
        self.try_neg().expect("neg cannot fail")
    }

    pub fn mul(&self, other: &Value) -> Value {
        self.try_mul(other).expect("ring mismatch in mul")
    }

    pub fn pow(&self, e: u32) -> Value {
        let mut acc = self.ring.one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact division: the unique `q` with `q·d == self`, when it exists.
    /// Uniqueness is guaranteed by the callers' non-zero-divisor contracts.
    pub fn exact_div(&self, d: &Value) -> Result<Value> {
        self.check_same_ring(d)?;
        if d.is_zero() {
            return Err(Error::DivisibilityFailure("division by zero".into()));
        }
        let fail = || {
            Error::DivisibilityFailure(format!("{} does not divide {}", d, self))
        };
        match (&self.payload, &d.payload) {
            (Payload::Int(a), Payload::Int(b)) => {
                let (q, r) = a.div_rem(b);
                if r.is_zero() {
                    Ok(Value {
                        ring: self.ring.clone(),
                        payload: Payload::Int(q),
                    })
                } else {
                    Err(fail())
                }
            }
            (Payload::Residue(a), Payload::Residue(b)) => {
                let m = match self.ring.kind() {
                    RingKind::IntMod { modulus } => modulus,
                    _ => unreachable!(),
                };
                match modular_inverse(b, m) {
                    Some(inv) => Ok(Value {
                        ring: self.ring.clone(),
                        payload: Payload::Residue((a * inv).mod_floor(m)),
                    }),
                    None => Err(Error::DivisibilityFailure(format!(
                        "{} is not a unit modulo {}",
                        b, m
                    ))),
                }
            }
            (Payload::Poly(_), Payload::Poly(dt)) => {
                // Constant divisor: divide coefficients.
                if let Some(c) = constant_of(dt) {
                    let Payload::Poly(at) = &self.payload else {
                        unreachable!()
                    };
                    let mut out = BTreeMap::new();
                    for (m, coeff) in at {
                        out.insert(m.clone(), coeff.exact_div(c)?);
                    }
                    return Ok(Value {
                        ring: self.ring.clone(),
                        payload: Payload::Poly(out),
                    });
                }
                poly_exact_div(self, d).ok_or_else(fail)
            }
            (Payload::Frac { num: na, pow: ka }, Payload::Frac { num: nb, pow: kb }) => {
                // (na/a^ka) / (nb/a^kb) = na·a^kb / (nb·a^ka).
                let a = self.ring.localization_elem().unwrap();
                let base = self.ring.base().unwrap();
                let mut den = (**nb).clone();
                let mut pow = *ka;
                // Move the a-part of the denominator into the exponent.  When
                // a is a unit of the base this extraction never terminates,
                // and the probe below handles unit factors on its own.
                if base.one().exact_div(a).is_err() {
                    loop {
                        match den.exact_div(a) {
                            Ok(q) if !den.is_zero() => {
                                den = q;
                                pow += 1;
                            }
                            _ => break,
                        }
                    }
                }
                let mut num = na.mul(&a.pow(*kb));
                if den.is_one() {
                    return Ok(frac_canonical(self.ring.clone(), num, pow));
                }
                // The quotient may only exist after borrowing more powers
                // of a; probe a small bounded range.
                for extra in 0..=8u32 {
                    if let Ok(q) = num.exact_div(&den) {
                        return Ok(frac_canonical(self.ring.clone(), q, pow + extra));
                    }
                    num = num.mul(a);
                }
                let _ = base;
                Err(fail())
            }
            (Payload::Mixed { head, tail }, Payload::Mixed { head: dh, tail: dt }) => {
                let loc = self.ring.mixed_loc_ring().unwrap();
                if dt.is_zero() {
                    let dh_loc = localize_into(&loc, dh);
                    let Payload::Poly(tt) = &tail.payload else {
                        unreachable!()
                    };
                    let mut out_tail = BTreeMap::new();
                    for (m, c) in tt {
                        out_tail.insert(m.clone(), c.exact_div(&dh_loc)?);
                    }
                    return Ok(Value {
                        ring: self.ring.clone(),
                        payload: Payload::Mixed {
                            head: Box::new(head.exact_div(dh)?),
                            tail: Box::new(Value {
                                ring: self.ring.mixed_tail_ring().unwrap(),
                                payload: Payload::Poly(out_tail),
                            }),
                        },
                    });
                }
                // General divisors go through the embedding into Loc(R,a)[t];
                // the quotient must land back in the subring, so its constant
                // coefficient has to lift along r -> r/1.
                let tail_ring = self.ring.mixed_tail_ring().unwrap();
                let embed = |h: &Value, t: &Value| {
                    constant_poly(&tail_ring, localize_into(&loc, h)).add(t)
                };
                let q = embed(head, tail).exact_div(&embed(dh, dt))?;
                let Payload::Poly(qt) = &q.payload else {
                    unreachable!()
                };
                let RingKind::Poly { vars, .. } = tail_ring.kind() else {
                    unreachable!()
                };
                let zero_mono = vec![0u32; vars.len()];
                let q_head = match qt.get(&zero_mono) {
                    None => self.ring.base().unwrap().zero(),
                    Some(c0) => {
                        let (num, pow) = c0.frac_parts().unwrap();
                        if pow != 0 {
                            return Err(fail());
                        }
                        num.clone()
                    }
                };
                let q_tail = q.sub(&constant_poly(&tail_ring, localize_into(&loc, &q_head)));
                Value::mixed_from_parts(&self.ring, q_head, q_tail)
            }
            _ => unreachable!("canonical payloads always match the ring kind"),
        }
    }

    pub fn is_divisible_by(&self, d: &Value) -> bool {
        self.exact_div(d).is_ok()
    }
}

/// Insert `c` at monomial `m`, dropping the entry if the sum cancels.
pub(crate) fn add_term(terms: &mut BTreeMap<Monomial, Value>, m: Monomial, c: Value) {
    if c.is_zero() {
        return;
    }
    match terms.remove(&m) {
        None => {
            terms.insert(m, c);
        }
        Some(old) => {
            let s = old.add(&c);
            if !s.is_zero() {
                terms.insert(m, s);
            }
        }
    }
}

/// Build the canonical fraction `num / a^pow`, reducing `pow` to its minimum.
pub(crate) fn frac_canonical(ring: Ring, mut num: Value, mut pow: u32) -> Value {
    let a = ring.localization_elem().unwrap().clone();
    if num.is_zero() {
        pow = 0;
    }
    while pow > 0 {
        match num.exact_div(&a) {
            Ok(q) => {
                num = q;
                pow -= 1;
            }
            Err(_) => break,
        }
    }
    Value {
        ring,
        payload: Payload::Frac {
            num: Box::new(num),
            pow,
        },
    }
}

/// Embed a base-ring value into the given localization of that base.
pub(crate) fn localize_into(loc: &Ring, x: &Value) -> Value {
    frac_canonical(loc.clone(), x.clone(), 0)
}

/// Embed a coefficient as the constant polynomial of the given poly ring.
pub(crate) fn constant_poly(poly_ring: &Ring, c: Value) -> Value {
    let RingKind::Poly { vars, .. } = poly_ring.kind() else {
        panic!("constant_poly needs a polynomial ring");
    };
    let mut terms = BTreeMap::new();
    if !c.is_zero() {
        terms.insert(vec![0; vars.len()], c);
    }
    Value {
        ring: poly_ring.clone(),
        payload: Payload::Poly(terms),
    }
}

fn constant_of(terms: &BTreeMap<Monomial, Value>) -> Option<&Value> {
    if terms.len() == 1 {
        let (m, c) = terms.iter().next().unwrap();
        if m.iter().all(|&e| e == 0) {
            return Some(c);
        }
    }
    None
}

/// Exact multivariate division by repeated leading-term elimination in
/// lexicographic order. Returns `None` when the division does not come out
/// exactly along this route.
fn poly_exact_div(x: &Value, d: &Value) -> Option<Value> {
    let ring = x.ring().clone();
    let Payload::Poly(dt) = &d.payload else {
        return None;
    };
    let (dm, dc) = dt.iter().next_back()?;
    let mut rem = x.clone();
    let mut quo: BTreeMap<Monomial, Value> = BTreeMap::new();
    for _ in 0..10_000 {
        let Payload::Poly(rt) = &rem.payload else {
            return None;
        };
        let Some((rm, rc)) = rt.iter().next_back() else {
            return Some(Value {
                ring,
                payload: Payload::Poly(quo),
            });
        };
        if rm.iter().zip(dm.iter()).any(|(a, b)| a < b) {
            return None;
        }
        let qm: Monomial = rm.iter().zip(dm.iter()).map(|(a, b)| a - b).collect();
        let qc = rc.exact_div(dc).ok()?;
        let mut term = BTreeMap::new();
        term.insert(qm.clone(), qc.clone());
        let term = Value {
            ring: ring.clone(),
            payload: Payload::Poly(term),
        };
        rem = rem.sub(&term.mul(d));
        add_term(&mut quo, qm, qc);
    }
    None
}

fn modular_inverse(x: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = x.extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

/// Accessors used by the parser, homomorphisms and generators.
impl Value {
    /// Coefficient map of a polynomial value.
    pub fn poly_terms(&self) -> Option<&BTreeMap<Monomial, Value>> {
        match &self.payload {
            Payload::Poly(t) => Some(t),
            _ => None,
        }
    }

    /// Build a polynomial value from coefficients (zeros are dropped).
    pub fn poly_from_terms<I>(ring: &Ring, terms: I) -> Result<Value>
    where
        I: IntoIterator<Item = (Monomial, Value)>,
    {
        let RingKind::Poly { base, vars } = ring.kind() else {
            return Err(Error::InvalidConstruction(format!(
                "{} is not a polynomial ring",
                ring
            )));
        };
        let mut map = BTreeMap::new();
        for (m, c) in terms {
            if m.len() != vars.len() {
                return Err(Error::InvalidConstruction(format!(
                    "monomial arity {} does not match {} variables",
                    m.len(),
                    vars.len()
                )));
            }
            if c.ring() != base {
                return Err(Error::mismatch(base, c.ring()));
            }
            add_term(&mut map, m, c);
        }
        Ok(Value {
            ring: ring.clone(),
            payload: Payload::Poly(map),
        })
    }

    /// Numerator and exponent of a canonical fraction.
    pub fn frac_parts(&self) -> Option<(&Value, u32)> {
        match &self.payload {
            Payload::Frac { num, pow } => Some((num, *pow)),
            _ => None,
        }
    }

    /// Build `num / a^pow` in the given localization, canonically reduced.
    pub fn frac_from_parts(ring: &Ring, num: Value, pow: u32) -> Result<Value> {
        let RingKind::Localized { base, .. } = ring.kind() else {
            return Err(Error::InvalidConstruction(format!(
                "{} is not a localization",
                ring
            )));
        };
        if num.ring() != base {
            return Err(Error::mismatch(base, num.ring()));
        }
        Ok(frac_canonical(ring.clone(), num, pow))
    }

    /// Head and tail of a mixed value.
    pub fn mixed_parts(&self) -> Option<(&Value, &Value)> {
        match &self.payload {
            Payload::Mixed { head, tail } => Some((head, tail)),
            _ => None,
        }
    }

    /// Build a mixed value `(head, tail)`; the tail must have zero constant
    /// term.
    pub fn mixed_from_parts(ring: &Ring, head: Value, tail: Value) -> Result<Value> {
        let RingKind::MixedB { base, .. } = ring.kind() else {
            return Err(Error::InvalidConstruction(format!(
                "{} is not a mixed ring",
                ring
            )));
        };
        if head.ring() != base {
            return Err(Error::mismatch(base, head.ring()));
        }
        let tail_ring = ring.mixed_tail_ring().unwrap();
        if tail.ring() != &tail_ring {
            return Err(Error::mismatch(&tail_ring, tail.ring()));
        }
        if let Some(terms) = tail.poly_terms() {
            if terms.keys().any(|m| m.iter().all(|&e| e == 0)) {
                return Err(Error::InvalidConstruction(
                    "mixed tail must have zero constant term".into(),
                ));
            }
        }
        Ok(Value {
            ring: ring.clone(),
            payload: Payload::Mixed {
                head: Box::new(head),
                tail: Box::new(tail),
            },
        })
    }

    /// The integer payload of `Z` and `Z/m` values.
    pub fn as_bigint(&self) -> Option<&BigInt> {
        match &self.payload {
            Payload::Int(n) | Payload::Residue(n) => Some(n),
            _ => None,
        }
    }
}

/// Values are shared freely across the checker pool.
#[allow(dead_code)]
fn assert_send_sync() {
    fn ok<T: Send + Sync>() {}
    ok::<Ring>();
    ok::<Value>();
}
