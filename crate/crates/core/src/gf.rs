//! Table-driven arithmetic in small finite fields GF(q), q = p^m <= 512.
//!
//! An element is stored as the integer whose base-p digits are the
//! coefficients of its polynomial representative, lowest degree first.
//! For prime q this is ordinary arithmetic mod p.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{LrcError, Result};

pub const MAX_FIELD_SIZE: u32 = 512;

/// An element of GF(q), encoded as a base-p digit integer in `0..q`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[repr(transparent)]
pub struct FieldElement(pub u16);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// One field operation together with its right operand, if any.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldOp {
    Add(FieldElement),
    Sub(FieldElement),
    Mul(FieldElement),
    Div(FieldElement),
    Neg,
    Inv,
    Pow(i64),
}

/// Override file contents: `{"q": 9, "modulus": [1, 0, 1]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldConfig {
    pub q: u32,
    /// Coefficients over GF(p), lowest degree first; must be monic of degree m.
    pub modulus: Vec<u32>,
}

struct Tables {
    q: u32,
    p: u32,
    m: u32,
    modulus: Vec<u32>,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    inv: Vec<u16>,
}

/// GF(q) with fixed modulus and precomputed tables. Cloning is cheap.
#[derive(Clone)]
pub struct Field {
    tables: Arc<Tables>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("q", &self.q())
            .field("modulus", &self.tables.modulus)
            .finish()
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.q() == other.q() && self.tables.modulus == other.tables.modulus
    }
}

impl Eq for Field {}

/// Returns `(p, m)` with `q = p^m`, or `None` if q is not a prime power.
pub fn prime_power_decomposition(q: u64) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2u64;
    while p * p <= q && !q.is_multiple_of(p) {
        p += 1;
    }
    if !q.is_multiple_of(p) {
        // q itself is prime
        return Some((q as u32, 1));
    }
    let mut rest = q;
    let mut m = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        m += 1;
    }
    if rest == 1 {
        Some((p as u32, m))
    } else {
        None
    }
}

/// The documented modulus for each q, lowest coefficient first.
///
/// Sizes not in the fixed list fall back to the monic irreducible whose
/// lower coefficients form the smallest base-p integer.
pub fn default_modulus(q: u32) -> Result<Vec<u32>> {
    let (p, m) = check_size(q)?;
    let fixed: Option<&[u32]> = match q {
        4 => Some(&[1, 1, 1]),
        8 => Some(&[1, 1, 0, 1]),
        9 => Some(&[1, 0, 1]),
        16 => Some(&[1, 1, 0, 0, 1]),
        25 => Some(&[1, 1, 1]),
        27 => Some(&[1, 2, 0, 1]),
        32 => Some(&[1, 0, 1, 0, 0, 1]),
        _ => None,
    };
    if let Some(coeffs) = fixed {
        return Ok(coeffs.to_vec());
    }
    if m == 1 {
        // x: reduction is then plain arithmetic mod p
        return Ok(vec![0, 1]);
    }
    let count = p.pow(m);
    for lower in 0..count {
        let mut poly = digits(lower, p, m);
        poly.push(1);
        if is_irreducible(&poly, p) {
            return Ok(poly);
        }
    }
    unreachable!("an irreducible polynomial of every degree exists")
}

fn check_size(q: u32) -> Result<(u32, u32)> {
    let (p, m) = prime_power_decomposition(q as u64).ok_or(LrcError::NotPrimePower(q as u64))?;
    if q > MAX_FIELD_SIZE {
        return Err(LrcError::FieldTooLarge(q as u64));
    }
    Ok((p, m))
}

fn digits(mut value: u32, p: u32, m: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(m as usize);
    for _ in 0..m {
        out.push(value % p);
        value /= p;
    }
    out
}

fn trim(poly: &mut Vec<u32>) {
    while poly.len() > 1 && *poly.last().unwrap() == 0 {
        poly.pop();
    }
}

fn inv_mod_p(a: u32, p: u32) -> u32 {
    // Fermat; p is tiny
    let mut result = 1u64;
    let mut base = a as u64 % p as u64;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    result as u32
}

/// Remainder of `num` modulo `den` over GF(p). `den` must have a nonzero leading coefficient.
fn poly_rem(num: &[u32], den: &[u32], p: u32) -> Vec<u32> {
    let mut rem = num.to_vec();
    trim(&mut rem);
    let dd = den.len() - 1;
    let lead_inv = inv_mod_p(den[dd], p);
    while rem.len() > dd && !(rem.len() == 1 && rem[0] == 0) {
        let shift = rem.len() - 1 - dd;
        let factor = rem[rem.len() - 1] * lead_inv % p;
        for (i, &c) in den.iter().enumerate() {
            let idx = shift + i;
            rem[idx] = (rem[idx] + p * p - factor * c % p) % p;
        }
        trim(&mut rem);
        if rem.len() == 1 && rem[0] == 0 {
            break;
        }
    }
    rem
}

/// Trial division by every monic polynomial of degree 1..=deg/2.
pub fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let mut poly = poly.to_vec();
    trim(&mut poly);
    let deg = poly.len() - 1;
    if deg == 0 {
        return false;
    }
    if deg == 1 {
        return true;
    }
    for d in 1..=deg / 2 {
        for lower in 0..p.pow(d as u32) {
            let mut divisor = digits(lower, p, d as u32);
            divisor.push(1);
            let rem = poly_rem(&poly, &divisor, p);
            if rem.iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

impl Field {
    /// GF(q) with the default modulus.
    pub fn new(q: u32) -> Result<Field> {
        let modulus = default_modulus(q)?;
        Field::with_modulus(q, &modulus)
    }

    /// GF(q) with a caller-supplied monic irreducible modulus of degree m.
    pub fn with_modulus(q: u32, modulus: &[u32]) -> Result<Field> {
        let (p, m) = check_size(q)?;
        let bad = |reason: &str| LrcError::InvalidModulus {
            q,
            reason: reason.to_string(),
        };
        if modulus.len() != m as usize + 1 {
            return Err(bad(&format!("expected degree {m}, got {} coefficients", modulus.len())));
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(bad("coefficient outside GF(p)"));
        }
        if modulus[m as usize] != 1 {
            return Err(bad("modulus is not monic"));
        }
        if m > 1 && !is_irreducible(modulus, p) {
            return Err(bad("modulus is reducible"));
        }
        Ok(Field {
            tables: Arc::new(build_tables(q, p, m, modulus.to_vec())),
        })
    }

    pub fn from_config(config: &FieldConfig) -> Result<Field> {
        Field::with_modulus(config.q, &config.modulus)
    }

    pub fn from_json(text: &str) -> Result<Field> {
        let config: FieldConfig = serde_json::from_str(text).map_err(|e| LrcError::Parse(e.to_string()))?;
        Field::from_config(&config)
    }

    pub fn config(&self) -> FieldConfig {
        FieldConfig {
            q: self.q(),
            modulus: self.tables.modulus.clone(),
        }
    }

    #[inline]
    pub fn q(&self) -> u32 {
        self.tables.q
    }

    #[inline]
    pub fn characteristic(&self) -> u32 {
        self.tables.p
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.tables.m
    }

    pub fn modulus(&self) -> &[u32] {
        &self.tables.modulus
    }

    /// All elements in index order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.q() as u16).map(FieldElement)
    }

    pub fn element(&self, value: u64) -> Result<FieldElement> {
        if value < self.q() as u64 {
            Ok(FieldElement(value as u16))
        } else {
            Err(LrcError::InvalidElement { q: self.q(), value })
        }
    }

    #[inline]
    fn slot(&self, a: FieldElement, b: FieldElement) -> usize {
        a.index() * self.q() as usize + b.index()
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(self.tables.add[self.slot(a, b)])
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        FieldElement(self.tables.neg[a.index()])
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(self.tables.mul[self.slot(a, b)])
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            Err(LrcError::DivisionByZero(self.q()))
        } else {
            Ok(FieldElement(self.tables.inv[a.index()]))
        }
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Square-and-multiply; negative exponents invert first.
    pub fn pow(&self, a: FieldElement, exponent: i64) -> Result<FieldElement> {
        let mut base = if exponent < 0 { self.inv(a)? } else { a };
        let mut e = exponent.unsigned_abs();
        let mut acc = FieldElement::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        Ok(acc)
    }

    pub fn eval(&self, a: FieldElement, op: FieldOp) -> Result<FieldElement> {
        Ok(match op {
            FieldOp::Add(b) => self.add(a, b),
            FieldOp::Sub(b) => self.sub(a, b),
            FieldOp::Mul(b) => self.mul(a, b),
            FieldOp::Div(b) => self.div(a, b)?,
            FieldOp::Neg => self.neg(a),
            FieldOp::Inv => self.inv(a)?,
            FieldOp::Pow(e) => self.pow(a, e)?,
        })
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: FieldElement) -> Result<u32> {
        if a.is_zero() {
            return Err(LrcError::DivisionByZero(self.q()));
        }
        let mut x = a;
        let mut ord = 1;
        while x != FieldElement::ONE {
            x = self.mul(x, a);
            ord += 1;
        }
        Ok(ord)
    }

    /// Some element of order q-1.
    pub fn primitive_element(&self) -> FieldElement {
        self.elements()
            .skip(1)
            .find(|&a| self.order(a).ok() == Some(self.q() - 1))
            .expect("the multiplicative group of a finite field is cyclic")
    }
}

fn build_tables(q: u32, p: u32, m: u32, modulus: Vec<u32>) -> Tables {
    let qs = q as usize;
    let polys: Vec<Vec<u32>> = (0..q).map(|v| digits(v, p, m)).collect();
    let encode = |coeffs: &[u32]| -> u16 { coeffs.iter().rev().fold(0u32, |acc, &c| acc * p + c) as u16 };

    let mut add = vec![0u16; qs * qs];
    let mut mul = vec![0u16; qs * qs];
    for a in 0..qs {
        for b in 0..qs {
            let sum: Vec<u32> = polys[a].iter().zip(&polys[b]).map(|(&x, &y)| (x + y) % p).collect();
            add[a * qs + b] = encode(&sum);

            let mut prod = vec![0u32; 2 * m as usize - 1];
            for (i, &x) in polys[a].iter().enumerate() {
                for (j, &y) in polys[b].iter().enumerate() {
                    prod[i + j] = (prod[i + j] + x * y) % p;
                }
            }
            let mut rem = if m == 1 { prod } else { poly_rem(&prod, &modulus, p) };
            rem.resize(m as usize, 0);
            mul[a * qs + b] = encode(&rem);
        }
    }

    let mut neg = vec![0u16; qs];
    let mut inv = vec![0u16; qs];
    for a in 0..qs {
        for b in 0..qs {
            if add[a * qs + b] == 0 {
                neg[a] = b as u16;
            }
            if a != 0 && mul[a * qs + b] == 1 {
                inv[a] = b as u16;
            }
        }
    }
    Tables {
        q,
        p,
        m,
        modulus,
        add,
        mul,
        neg,
        inv,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fe(v: u16) -> FieldElement {
        FieldElement(v)
    }

    #[test]
    fn binary_field_is_xor() {
        let f = Field::new(2).unwrap();
        assert_eq!(f.characteristic(), 2);
        assert_eq!(f.degree(), 1);
        assert_eq!(f.modulus(), &[0, 1]);
        for a in 0..2 {
            for b in 0..2 {
                assert_eq!(f.add(fe(a), fe(b)), fe(a ^ b));
            }
        }
        assert_eq!(f.eval(fe(1), FieldOp::Add(fe(1))).unwrap(), fe(0));
    }

    #[test]
    fn gf4_products_by_hand() {
        // x * x = x^2 = x + 1 mod x^2 + x + 1
        let f = Field::new(4).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]);
        assert_eq!(f.mul(fe(2), fe(2)), fe(3));
        // x (x + 1) = x^2 + x = 1
        assert_eq!(f.inv(fe(2)).unwrap(), fe(3));
    }

    #[test]
    fn prime_field_is_mod_p() {
        let f = Field::new(5).unwrap();
        assert_eq!(f.mul(fe(3), fe(4)), fe(2));
        assert_eq!(f.eval(fe(3), FieldOp::Div(fe(4))).unwrap(), fe(2));
        assert_eq!(f.pow(fe(2), -1).unwrap(), fe(3));
        assert_eq!(f.pow(fe(2), 4).unwrap(), fe(1));
    }

    #[test]
    fn rejects_bad_sizes() {
        assert_eq!(Field::new(6).unwrap_err(), LrcError::NotPrimePower(6));
        assert_eq!(Field::new(1).unwrap_err(), LrcError::NotPrimePower(1));
        assert_eq!(Field::new(1024).unwrap_err(), LrcError::FieldTooLarge(1024));
        assert!(Field::new(512).is_ok());
    }

    #[test]
    fn division_by_zero() {
        let f = Field::new(7).unwrap();
        assert_eq!(f.inv(fe(0)).unwrap_err(), LrcError::DivisionByZero(7));
        assert!(f.div(fe(3), fe(0)).is_err());
        assert!(f.pow(fe(0), -2).is_err());
        assert_eq!(f.pow(fe(0), 0).unwrap(), fe(1));
    }

    #[test]
    fn documented_moduli() {
        let expect: &[(u32, &[u32])] = &[
            (8, &[1, 1, 0, 1]),
            (9, &[1, 0, 1]),
            (16, &[1, 1, 0, 0, 1]),
            (25, &[1, 1, 1]),
            (27, &[1, 2, 0, 1]),
            (32, &[1, 0, 1, 0, 0, 1]),
        ];
        for &(q, modulus) in expect {
            assert_eq!(Field::new(q).unwrap().modulus(), modulus, "q={q}");
            let (p, _) = prime_power_decomposition(q as u64).unwrap();
            assert!(is_irreducible(modulus, p));
        }
    }

    #[test]
    fn reducible_modulus_rejected() {
        // x^2 + 1 = (x + 1)^2 over GF(2)
        let err = Field::with_modulus(4, &[1, 0, 1]).unwrap_err();
        assert!(matches!(err, LrcError::InvalidModulus { .. }));
        // not monic
        assert!(Field::with_modulus(9, &[1, 0, 2]).is_err());
        // x^2 + 2 = (x + 1)(x + 2) over GF(3)
        assert!(Field::with_modulus(9, &[2, 0, 1]).is_err());
        assert!(Field::with_modulus(9, &[2, 2, 1]).is_ok());
    }

    #[test]
    fn config_roundtrip() {
        let f = Field::from_json(r#"{"q": 9, "modulus": [2, 1, 1]}"#).unwrap();
        assert_eq!(
            f.config(),
            FieldConfig {
                q: 9,
                modulus: vec![2, 1, 1]
            }
        );
        assert!(Field::from_json("{\"q\": 9}").is_err());
    }

    #[test]
    fn field_axioms_exhaustive_small() {
        for q in [2u32, 3, 4, 5, 7, 8, 9, 11, 13, 16] {
            let f = Field::new(q).unwrap();
            let els: Vec<_> = f.elements().collect();
            let p = f.characteristic() as i64;
            for &a in &els {
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), FieldElement::ONE);
                }
                for &b in &els {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    let frob = f.pow(f.add(a, b), p).unwrap();
                    assert_eq!(frob, f.add(f.pow(a, p).unwrap(), f.pow(b, p).unwrap()));
                    for &c in &els {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
            assert_eq!(f.order(f.primitive_element()).unwrap(), q - 1);
        }
    }

    #[test]
    fn every_supported_size_builds() {
        for q in 2..=MAX_FIELD_SIZE {
            if prime_power_decomposition(q as u64).is_some() {
                let f = Field::new(q).unwrap();
                let g = f.primitive_element();
                assert_eq!(f.order(g).unwrap(), q - 1, "q={q}");
            }
        }
    }
}
