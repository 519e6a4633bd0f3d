//! Registered ring homomorphisms between tower members.
//!
//! Every map used by the calculus is listed here so that words, vectors and
//! matrices can be transported entrywise through a single `apply` interface:
//!
//! * `Localize` — `R -> Loc(R,a)`, `x ↦ x/1`;
//! * `LocalLift` — partial inverse on denominator-free fractions;
//! * `PolyConst` / `EvalZero` — constants into `R[x]` and back via `x ↦ 0`;
//! * `Substitute` — `R[x] -> R[x]`, `x ↦ p` (single-variable);
//! * `CoeffMap` — apply an inner map to every polynomial coefficient;
//! * `MixedConst` / `MixedHead` — the splitting `R ⇄ B(R,a)` of the ideal
//!   `t·Loc(R,a)[t]`;
//! * `MixedEmbed` — `B(R,a) -> Loc(R,a)[t]`, `(r,f) ↦ r/1 + f`;
//! * `PhiI` — `R[t] -> B(R,a)`, `p ↦ (p(0), Σ_{k≥1} (c_k/a^{ik})·t^k)`.

use super::{constant_poly, frac_canonical, localize_into, Ring, RingKind, Value};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub enum Hom {
    Identity {
        ring: Ring,
    },
    Localize {
        target: Ring,
    },
    LocalLift {
        source: Ring,
    },
    PolyConst {
        target: Ring,
    },
    EvalZero {
        source: Ring,
    },
    Substitute {
        ring: Ring,
        image: Value,
    },
    CoeffMap {
        source: Ring,
        target: Ring,
        coeff: Box<Hom>,
    },
    MixedConst {
        target: Ring,
    },
    MixedHead {
        source: Ring,
    },
    MixedEmbed {
        source: Ring,
    },
    PhiI {
        source: Ring,
        target: Ring,
        i: u32,
    },
    Compose {
        first: Box<Hom>,
        then: Box<Hom>,
    },
}

impl Hom {
    pub fn identity(ring: &Ring) -> Hom {
        Hom::Identity { ring: ring.clone() }
    }

    /// `R -> Loc(R, a)`.
    pub fn localize(base: &Ring, a: &Value) -> Result<Hom> {
        Ok(Hom::Localize {
            target: Ring::localized(base, a)?,
        })
    }

    pub fn localize_into(target: &Ring) -> Result<Hom> {
        match target.kind() {
            RingKind::Localized { .. } => Ok(Hom::Localize {
                target: target.clone(),
            }),
            _ => Err(Error::InvalidConstruction(format!(
                "{target} is not a localization"
            ))),
        }
    }

    /// Partial map `Loc(R,a) -> R` defined on denominator-free fractions.
    pub fn local_lift(source: &Ring) -> Result<Hom> {
        match source.kind() {
            RingKind::Localized { .. } => Ok(Hom::LocalLift {
                source: source.clone(),
            }),
            _ => Err(Error::InvalidConstruction(format!(
                "{source} is not a localization"
            ))),
        }
    }

    /// Constant embedding `R -> R[xs]`.
    pub fn poly_const(target: &Ring) -> Result<Hom> {
        match target.kind() {
            RingKind::Poly { .. } => Ok(Hom::PolyConst {
                target: target.clone(),
            }),
            _ => Err(Error::InvalidConstruction(format!(
                "{target} is not a polynomial ring"
            ))),
        }
    }

    /// Evaluation `R[x] -> R` at `x = 0` (single-variable rings).
    pub fn eval_zero(source: &Ring) -> Result<Hom> {
        match source.kind() {
            RingKind::Poly { vars, .. } if vars.len() == 1 => Ok(Hom::EvalZero {
                source: source.clone(),
            }),
            _ => Err(Error::InvalidConstruction(format!(
                "{source} is not a single-variable polynomial ring"
            ))),
        }
    }

    /// Substitution `R[x] -> R[x]`, `x ↦ image` (single-variable rings).
    pub fn substitute(ring: &Ring, image: &Value) -> Result<Hom> {
        match ring.kind() {
            RingKind::Poly { vars, .. } if vars.len() == 1 => {
                if image.ring() != ring {
                    return Err(Error::mismatch(ring, image.ring()));
                }
                Ok(Hom::Substitute {
                    ring: ring.clone(),
                    image: image.clone(),
                })
            }
            _ => Err(Error::InvalidConstruction(format!(
                "{ring} is not a single-variable polynomial ring"
            ))),
        }
    }

    /// Coefficientwise map `R[xs] -> S[xs]` induced by `coeff: R -> S`.
    pub fn coeff_map(source: &Ring, coeff: Hom) -> Result<Hom> {
        let RingKind::Poly { base, vars } = source.kind() else {
            return Err(Error::InvalidConstruction(format!(
                "{source} is not a polynomial ring"
            )));
        };
        if coeff.source() != base {
            return Err(Error::mismatch(base, coeff.source()));
        }
        let var_refs: Vec<&str> = vars.iter().map(String::as_str).collect();
        let target = Ring::poly(&coeff.target_ring(), &var_refs)?;
        Ok(Hom::CoeffMap {
            source: source.clone(),
            target,
            coeff: Box::new(coeff),
        })
    }

    /// Splitting section `R -> B(R,a)`, `r ↦ (r, 0)`.
    pub fn mixed_const(target: &Ring) -> Result<Hom> {
        match target.kind() {
            RingKind::MixedB { .. } => Ok(Hom::MixedConst {
                target: target.clone(),
            }),
            _ => Err(Error::InvalidConstruction(format!(
                "{target} is not a mixed ring"
            ))),
        }
    }

    /// Quotient-by-the-ideal map `B(R,a) -> R`, `(r, f) ↦ r`.
    pub fn mixed_head(source: &Ring) -> Result<Hom> {
        match source.kind() {
            RingKind::MixedB { .. } => Ok(Hom::MixedHead {
                source: source.clone(),
            }),
            _ => Err(Error::InvalidConstruction(format!(
                "{source} is not a mixed ring"
            ))),
        }
    }

    /// Injective embedding `B(R,a) -> Loc(R,a)[t]`.
    pub fn mixed_embed(source: &Ring) -> Result<Hom> {
        match source.kind() {
            RingKind::MixedB { .. } => Ok(Hom::MixedEmbed {
                source: source.clone(),
            }),
            _ => Err(Error::InvalidConstruction(format!(
                "{source} is not a mixed ring"
            ))),
        }
    }

    /// The direct-system component map `R[t] -> B(R,a)` at stage `i`.
    pub fn phi_i(source: &Ring, target: &Ring, i: u32) -> Result<Hom> {
        let RingKind::Poly { base, vars } = source.kind() else {
            return Err(Error::InvalidConstruction(format!(
                "{source} is not a polynomial ring"
            )));
        };
        let RingKind::MixedB {
            base: tbase, var, ..
        } = target.kind()
        else {
            return Err(Error::InvalidConstruction(format!(
                "{target} is not a mixed ring"
            )));
        };
        if vars.len() != 1 || &vars[0] != var || base != tbase {
            return Err(Error::InvalidConstruction(format!(
                "{source} does not match the tail variable of {target}"
            )));
        }
        Ok(Hom::PhiI {
            source: source.clone(),
            target: target.clone(),
            i,
        })
    }

    pub fn compose(first: Hom, then: Hom) -> Result<Hom> {
        if &first.target_ring() != then.source() {
            return Err(Error::mismatch(then.source(), &first.target_ring()));
        }
        Ok(Hom::Compose {
            first: Box::new(first),
            then: Box::new(then),
        })
    }

    pub fn source(&self) -> &Ring {
        match self {
            Hom::Identity { ring } => ring,
            Hom::Localize { target } => target.base().unwrap(),
            Hom::LocalLift { source } => source,
            Hom::PolyConst { target } => target.base().unwrap(),
            Hom::EvalZero { source } => source,
            Hom::Substitute { ring, .. } => ring,
            Hom::CoeffMap { source, .. } => source,
            Hom::MixedConst { target } => target.base().unwrap(),
            Hom::MixedHead { source } => source,
            Hom::MixedEmbed { source } => source,
            Hom::PhiI { source, .. } => source,
            Hom::Compose { first, .. } => first.source(),
        }
    }

    pub fn target_ring(&self) -> Ring {
        match self {
            Hom::Identity { ring } => ring.clone(),
            Hom::Localize { target } => target.clone(),
            Hom::LocalLift { source } => source.base().unwrap().clone(),
            Hom::PolyConst { target } => target.clone(),
            Hom::EvalZero { source } => source.base().unwrap().clone(),
            Hom::Substitute { ring, .. } => ring.clone(),
            Hom::CoeffMap { target, .. } => target.clone(),
            Hom::MixedConst { target } => target.clone(),
            Hom::MixedHead { source } => source.base().unwrap().clone(),
            Hom::MixedEmbed { source } => source.mixed_tail_ring().unwrap(),
            Hom::PhiI { target, .. } => target.clone(),
            Hom::Compose { then, .. } => then.target_ring(),
        }
    }

    pub fn apply(&self, v: &Value) -> Result<Value> {
        if v.ring() != self.source() {
            return Err(Error::mismatch(self.source(), v.ring()));
        }
        match self {
            Hom::Identity { .. } => Ok(v.clone()),
            Hom::Localize { target } => Ok(localize_into(target, v)),
            Hom::LocalLift { .. } => {
                let (num, pow) = v.frac_parts().unwrap();
                if pow == 0 {
                    Ok(num.clone())
                } else {
                    Err(Error::LiftFailure(format!(
                        "{v} still has denominator exponent {pow}"
                    )))
                }
            }
            Hom::PolyConst { target } => Ok(constant_poly(target, v.clone())),
            Hom::EvalZero { source } => {
                let terms = v.poly_terms().unwrap();
                let base = source.base().unwrap();
                Ok(terms
                    .get(&vec![0u32])
                    .cloned()
                    .unwrap_or_else(|| base.zero()))
            }
            Hom::Substitute { ring, image } => {
                let mut acc = ring.zero();
                for (mono, c) in v.poly_terms().unwrap() {
                    let term = constant_poly(ring, c.clone()).mul(&image.pow(mono[0]));
                    acc = acc.add(&term);
                }
                Ok(acc)
            }
            Hom::CoeffMap { target, coeff, .. } => {
                let mut out = Vec::new();
                for (mono, c) in v.poly_terms().unwrap() {
                    out.push((mono.clone(), coeff.apply(c)?));
                }
                Value::poly_from_terms(target, out)
            }
            Hom::MixedConst { target } => {
                Value::mixed_from_parts(
                    target,
                    v.clone(),
                    target.mixed_tail_ring().unwrap().zero(),
                )
            }
            Hom::MixedHead { .. } => {
                let (head, _) = v.mixed_parts().unwrap();
                Ok(head.clone())
            }
            Hom::MixedEmbed { source } => {
                let (head, tail) = v.mixed_parts().unwrap();
                let loc = source.mixed_loc_ring().unwrap();
                let tail_ring = source.mixed_tail_ring().unwrap();
                Ok(constant_poly(&tail_ring, localize_into(&loc, head)).add(tail))
            }
            Hom::PhiI { target, i, .. } => {
                let base = self.source().base().unwrap();
                let loc = target.mixed_loc_ring().unwrap();
                let tail_ring = target.mixed_tail_ring().unwrap();
                let mut head = base.zero();
                let mut tail_terms = Vec::new();
                for (mono, c) in v.poly_terms().unwrap() {
                    let k = mono[0];
                    if k == 0 {
                        head = c.clone();
                    } else {
                        let coeff = frac_canonical(loc.clone(), c.clone(), i * k);
                        tail_terms.push((vec![k], coeff));
                    }
                }
                let tail = Value::poly_from_terms(&tail_ring, tail_terms)?;
                Value::mixed_from_parts(target, head, tail)
            }
            Hom::Compose { first, then } => then.apply(&first.apply(v)?),
        }
    }
}
