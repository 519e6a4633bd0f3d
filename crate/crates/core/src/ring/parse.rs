//! Textual grammar for ring descriptors and ring elements.
//!
//! Descriptors: `Z`, `Z/5`, `Z[t]`, `Z[x,y]`, `Loc(Z,2)`, `B(Z,2)`, and the
//! compositions thereof, e.g. `Loc(Z[x],2)` or `Z/5[t]`.
//!
//! Values are written contextually per descriptor:
//!
//! * `Z`, `Z/m` — signed decimal integers;
//! * polynomials — sums of terms `c*x^e`, e.g. `3*t^2-t+1`, with composite
//!   coefficients parenthesized: `(3/2)*t`;
//! * localizations — `num/a^k`, e.g. `3/2^2`, `(t+1)/2`;
//! * mixed rings — `(head|tail)`, e.g. `(2|t)`, `(1|(3/2)*t+t^2)`.

use super::{Monomial, Payload, Ring, RingKind, Value};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use std::collections::BTreeMap;

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

/// Render a value in the grammar above. Output parses back to the same value.
pub(crate) fn render_value(v: &Value) -> String {
    match v.payload() {
        Payload::Int(n) | Payload::Residue(n) => n.to_string(),
        Payload::Poly(terms) => render_poly(v.ring(), terms),
        Payload::Frac { num, pow } => {
            if *pow == 0 {
                render_value(num)
            } else {
                let elem = v.ring().localization_elem().unwrap();
                let den = wrap(&render_value(elem));
                let num = wrap(&render_value(num));
                if *pow == 1 {
                    format!("{num}/{den}")
                } else {
                    format!("{num}/{den}^{pow}")
                }
            }
        }
        Payload::Mixed { head, tail } => {
            format!("({}|{})", render_value(head), render_value(tail))
        }
    }
}

fn render_poly(ring: &Ring, terms: &BTreeMap<Monomial, Value>) -> String {
    let RingKind::Poly { vars, .. } = ring.kind() else {
        unreachable!()
    };
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (mono, coeff) in terms.iter().rev() {
        let mono_str = render_monomial(vars, mono);
        let coeff_str = render_value(coeff);
        let term = if mono_str.is_empty() {
            wrap(&coeff_str)
        } else if coeff_str == "1" {
            mono_str
        } else if coeff_str == "-1" {
            format!("-{mono_str}")
        } else {
            format!("{}*{}", wrap(&coeff_str), mono_str)
        };
        if out.is_empty() {
            out = term;
        } else if let Some(rest) = term.strip_prefix('-') {
            out.push('-');
            out.push_str(rest);
        } else {
            out.push('+');
            out.push_str(&term);
        }
    }
    out
}

fn render_monomial(vars: &[String], mono: &Monomial) -> String {
    let mut parts = Vec::new();
    for (v, &e) in vars.iter().zip(mono.iter()) {
        match e {
            0 => {}
            1 => parts.push(v.clone()),
            _ => parts.push(format!("{v}^{e}")),
        }
    }
    parts.join("*")
}

/// Parenthesize unless the string is already atomic (a signed token or an
/// already-parenthesized group).
fn wrap(s: &str) -> String {
    if is_atomic(s) {
        s.to_string()
    } else {
        format!("({s})")
    }
}

fn is_atomic(s: &str) -> bool {
    if s.starts_with('(') && s.ends_with(')') {
        // One balanced group spanning the whole string.
        let mut depth = 0usize;
        for (i, c) in s.char_indices() {
            match c {
                '(' => depth += 1,
                ')' => {
                    depth -= 1;
                    if depth == 0 {
                        return i == s.len() - 1;
                    }
                }
                _ => {}
            }
        }
        return false;
    }
    let body = s.strip_prefix('-').unwrap_or(s);
    !body.is_empty() && body.chars().all(|c| c.is_ascii_alphanumeric())
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

/// Parse a ring descriptor, e.g. `Z/5[t]` or `B(Z[x],2)`.
pub fn parse_ring(input: &str) -> Result<Ring> {
    let s = input.trim();
    let (ring, rest) = parse_ring_prefix(s)?;
    if !rest.trim().is_empty() {
        return Err(Error::Parse(format!(
            "trailing input {rest:?} after ring descriptor"
        )));
    }
    Ok(ring)
}

fn parse_ring_prefix(s: &str) -> Result<(Ring, &str)> {
    let s = s.trim_start();
    let (mut ring, mut rest) = parse_ring_atom(s)?;
    loop {
        let r = rest.trim_start();
        if let Some(inner) = r.strip_prefix('[') {
            let close = find_matching(inner, '[', ']').ok_or_else(|| {
                Error::Parse(format!("unbalanced brackets in {s:?}"))
            })?;
            let vars_str = &inner[..close];
            let vars: Vec<&str> = vars_str.split(',').map(str::trim).collect();
            ring = Ring::poly(&ring, &vars)?;
            rest = &inner[close + 1..];
        } else {
            return Ok((ring, rest));
        }
    }
}

fn parse_ring_atom(s: &str) -> Result<(Ring, &str)> {
    if let Some(rest) = s.strip_prefix("Loc(") {
        let close = find_matching(rest, '(', ')')
            .ok_or_else(|| Error::Parse(format!("unbalanced parens in {s:?}")))?;
        let inner = &rest[..close];
        let (base_str, elem_str) = split_once_top(inner, ',')
            .ok_or_else(|| Error::Parse("Loc(base,elem) needs two arguments".into()))?;
        let base = parse_ring(base_str)?;
        let elem = parse_value(&base, elem_str)?;
        return Ok((Ring::localized(&base, &elem)?, &rest[close + 1..]));
    }
    if let Some(rest) = s.strip_prefix("B(") {
        let close = find_matching(rest, '(', ')')
            .ok_or_else(|| Error::Parse(format!("unbalanced parens in {s:?}")))?;
        let inner = &rest[..close];
        let (base_str, elem_str) = split_once_top(inner, ',')
            .ok_or_else(|| Error::Parse("B(base,elem) needs two arguments".into()))?;
        let (elem_str, var) = match split_once_top(elem_str, ';') {
            Some((e, v)) => (e, v.trim().to_string()),
            None => (elem_str, "t".to_string()),
        };
        let base = parse_ring(base_str)?;
        let elem = parse_value(&base, elem_str)?;
        return Ok((Ring::mixed_b_with_var(&base, &elem, &var)?, &rest[close + 1..]));
    }
    if let Some(rest) = s.strip_prefix("Z/") {
        let digits: String = rest.chars().take_while(|c| c.is_ascii_digit()).collect();
        if digits.is_empty() {
            return Err(Error::Parse(format!("expected modulus after Z/ in {s:?}")));
        }
        let m: i64 = digits
            .parse()
            .map_err(|_| Error::Parse(format!("modulus {digits:?} out of range")))?;
        return Ok((Ring::int_mod(m)?, &rest[digits.len()..]));
    }
    if let Some(rest) = s.strip_prefix('Z') {
        return Ok((Ring::int(), rest));
    }
    Err(Error::Parse(format!("unrecognized ring descriptor {s:?}")))
}

/// Offset of the closing delimiter matching an already-consumed opener.
fn find_matching(s: &str, open: char, close: char) -> Option<usize> {
    let mut depth = 1usize;
    for (i, c) in s.char_indices() {
        if c == open {
            depth += 1;
        } else if c == close {
            depth -= 1;
            if depth == 0 {
                return Some(i);
            }
        }
    }
    None
}

/// Split at the first top-level (paren/bracket depth zero) occurrence.
pub(crate) fn split_once_top(s: &str, sep: char) -> Option<(&str, &str)> {
    let mut depth = 0i32;
    for (i, c) in s.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            c if c == sep && depth == 0 => return Some((&s[..i], &s[i + 1..])),
            _ => {}
        }
    }
    None
}

/// Split at every top-level occurrence of the separator.
pub(crate) fn split_all_top(s: &str, sep: char) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut rest = s;
    while let Some((head, tail)) = split_once_top(rest, sep) {
        parts.push(head);
        rest = tail;
    }
    parts.push(rest);
    parts
}

/// Parse a value of the given ring.
pub fn parse_value(ring: &Ring, input: &str) -> Result<Value> {
    let s = input.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty value".into()));
    }
    match ring.kind() {
        RingKind::Int | RingKind::IntMod { .. } => {
            let n: BigInt = s
                .parse()
                .map_err(|_| Error::Parse(format!("bad integer {s:?}")))?;
            Ok(ring.from_bigint(n))
        }
        RingKind::Poly { .. } => parse_poly(ring, s),
        RingKind::Localized { base, elem } => {
            let (num_str, den_str) = match split_once_top(s, '/') {
                Some((n, d)) => (n, Some(d)),
                None => (s, None),
            };
            let num = parse_value(base, &strip_group(num_str, base))?;
            let pow = match den_str {
                None => 0,
                Some(d) => {
                    let (elem_str, pow) = match split_once_top(d, '^') {
                        Some((e, p)) => {
                            let pow: u32 = p.trim().parse().map_err(|_| {
                                Error::Parse(format!("bad exponent {p:?}"))
                            })?;
                            (e, pow)
                        }
                        None => (d, 1),
                    };
                    let parsed = parse_value(base, &strip_group(elem_str, base))?;
                    if &parsed != elem {
                        return Err(Error::Parse(format!(
                            "denominator {} is not the localization element {}",
                            parsed, elem
                        )));
                    }
                    pow
                }
            };
            Value::frac_from_parts(ring, num, pow)
        }
        RingKind::MixedB { base, .. } => {
            let inner = s
                .strip_prefix('(')
                .and_then(|r| r.strip_suffix(')'))
                .ok_or_else(|| {
                    Error::Parse(format!("mixed value {s:?} must look like (head|tail)"))
                })?;
            let (head_str, tail_str) = split_once_top(inner, '|').ok_or_else(|| {
                Error::Parse(format!("mixed value {s:?} must look like (head|tail)"))
            })?;
            let head = parse_value(base, head_str)?;
            let tail = parse_value(&ring.mixed_tail_ring().unwrap(), tail_str)?;
            Value::mixed_from_parts(ring, head, tail)
        }
    }
}

/// Remove one redundant layer of parentheses, except around values whose own
/// grammar is parenthesized (mixed values).
fn strip_group<'a>(s: &'a str, base: &Ring) -> std::borrow::Cow<'a, str> {
    let s = s.trim();
    if matches!(base.kind(), RingKind::MixedB { .. }) {
        return s.into();
    }
    if let Some(inner) = s.strip_prefix('(') {
        if let Some(close) = find_matching(inner, '(', ')') {
            if close == inner.len() - 1 {
                return inner[..close].trim().to_string().into();
            }
        }
    }
    s.into()
}

fn parse_poly(ring: &Ring, s: &str) -> Result<Value> {
    let RingKind::Poly { base, vars } = ring.kind() else {
        unreachable!()
    };
    let mut total = ring.zero();
    for (sign, term) in split_signed_terms(s)? {
        let mut coeff = base.one();
        let mut mono: Monomial = vec![0; vars.len()];
        for factor in split_all_top(term, '*') {
            let factor = factor.trim();
            if factor.is_empty() {
                return Err(Error::Parse(format!("empty factor in term {term:?}")));
            }
            // Variable power?
            let (head, exp) = match split_once_top(factor, '^') {
                Some((h, p)) => {
                    let e: u32 = p
                        .trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad exponent {p:?}")))?;
                    (h.trim(), e)
                }
                None => (factor, 1),
            };
            if let Some(idx) = vars.iter().position(|v| v == head) {
                mono[idx] += exp;
                continue;
            }
            if exp != 1 || head != factor {
                return Err(Error::Parse(format!("unknown variable {head:?}")));
            }
            let atom = strip_group(factor, base);
            let c = parse_value(base, &atom)?;
            coeff = coeff.mul(&c);
        }
        if sign < 0 {
            coeff = coeff.neg();
        }
        let term_val = Value::poly_from_terms(ring, [(mono, coeff)])?;
        total = total.add(&term_val);
    }
    Ok(total)
}

/// Split an additive expression at top-level `+`/`-` into signed terms.
fn split_signed_terms(s: &str) -> Result<Vec<(i32, &str)>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0usize;
    let mut sign = 1i32;
    let bytes = s.as_bytes();
    for (i, c) in s.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            '+' | '-' if depth == 0 => {
                // A sign at the very start (or after another operator) binds
                // to the term rather than separating terms.
                if i == start {
                    if c == '-' {
                        sign = -sign;
                    }
                    start = i + 1;
                    continue;
                }
                let prev = bytes[i - 1];
                if prev == b'^' || prev == b'*' || prev == b'/' {
                    continue;
                }
                out.push((sign, s[start..i].trim()));
                sign = if c == '-' { -1 } else { 1 };
                start = i + 1;
            }
            _ => {}
        }
    }
    if start >= s.len() {
        return Err(Error::Parse(format!("dangling operator in {s:?}")));
    }
    out.push((sign, s[start..].trim()));
    if out.iter().any(|(_, t)| t.is_empty()) {
        return Err(Error::Parse(format!("empty term in {s:?}")));
    }
    if out.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    Ok(out)
}
