//! Exact coefficient fields: prime fields `GF(p)` and the rationals.
//!
//! Elements carry enough information to detect mixing of fields. The
//! operator impls (`+`, `-`, `*`) are the fast path used by the polynomial
//! code, where both operands are known to come from the same ring; they
//! panic on a field mismatch. [`field_arith`] and the `checked_*` methods
//! report mismatches as errors instead.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

const PRIME_BOUND: u64 = 1 << 31;

/// The coefficient field of a polynomial ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Prime(u32),
    Rationals,
}

impl FieldSpec {
    /// `GF(p)`; `p` must be a prime below 2^31.
    pub fn prime(p: u64) -> Result<Self> {
        if !(2..PRIME_BOUND).contains(&p) || !is_prime(p) {
            return Err(Error::InvalidPrime(p));
        }
        Ok(FieldSpec::Prime(p as u32))
    }

    pub fn rationals() -> Self {
        FieldSpec::Rationals
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Prime(p) => *p as u64,
            FieldSpec::Rationals => 0,
        }
    }

    pub fn zero(&self) -> FieldElement {
        self.from_i64(0)
    }

    pub fn one(&self) -> FieldElement {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> FieldElement {
        match *self {
            FieldSpec::Prime(p) => FieldElement::Prime {
                value: n.rem_euclid(p as i64) as u32,
                modulus: p,
            },
            FieldSpec::Rationals => FieldElement::Rational(BigRational::from_integer(n.into())),
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> FieldElement {
        match *self {
            FieldSpec::Prime(p) => {
                let r = n.mod_floor(&BigInt::from(p));
                FieldElement::Prime {
                    value: r.to_u32().expect("residue fits"),
                    modulus: p,
                }
            }
            FieldSpec::Rationals => FieldElement::Rational(BigRational::from_integer(n.clone())),
        }
    }

    /// The element `num / den`.
    pub fn from_ratio(&self, num: i64, den: i64) -> Result<FieldElement> {
        self.from_i64(num).checked_div(&self.from_i64(den))
    }

    pub fn contains(&self, a: &FieldElement) -> bool {
        a.field() == *self
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Prime(p) => write!(f, "GF({p})"),
            FieldSpec::Rationals => write!(f, "QQ"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of a [`FieldSpec`], always in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FieldElement {
    /// Residue in `[0, modulus)`.
    Prime { value: u32, modulus: u32 },
    /// Lowest terms, positive denominator.
    Rational(BigRational),
}

/// The four field operations accepted by [`field_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Exact field arithmetic with explicit errors for division by zero and
/// mixed fields.
pub fn field_arith(a: &FieldElement, b: &FieldElement, op: FieldOp) -> Result<FieldElement> {
    match op {
        FieldOp::Add => a.checked_add(b),
        FieldOp::Sub => a.checked_sub(b),
        FieldOp::Mul => a.checked_mul(b),
        FieldOp::Div => a.checked_div(b),
    }
}

impl FieldElement {
    pub fn field(&self) -> FieldSpec {
        match self {
            FieldElement::Prime { modulus, .. } => FieldSpec::Prime(*modulus),
            FieldElement::Rational(_) => FieldSpec::Rationals,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Prime { value, .. } => *value == 0,
            FieldElement::Rational(q) => q.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElement::Prime { value, .. } => *value == 1,
            FieldElement::Rational(q) => q.is_one(),
        }
    }

    /// True for the rational `-1` and for `p - 1` in `GF(p)`.
    pub fn is_minus_one(&self) -> bool {
        match self {
            FieldElement::Prime { value, modulus } => *value + 1 == *modulus,
            FieldElement::Rational(q) => (-q).is_one(),
        }
    }

    /// Whether the printed form should carry a leading minus sign.
    pub fn is_negative(&self) -> bool {
        match self {
            FieldElement::Prime { .. } => false,
            FieldElement::Rational(q) => q.is_negative(),
        }
    }

    fn check_same(&self, other: &FieldElement) -> Result<()> {
        if self.field() == other.field() {
            Ok(())
        } else {
            Err(Error::FieldMismatch(
                self.field().to_string(),
                other.field().to_string(),
            ))
        }
    }

    pub fn checked_add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check_same(other)?;
        Ok(self + other)
    }

    pub fn checked_sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check_same(other)?;
        Ok(self - other)
    }

    pub fn checked_mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check_same(other)?;
        Ok(self * other)
    }

    pub fn checked_div(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check_same(other)?;
        Ok(self * &other.inv()?)
    }

    /// Multiplicative inverse; extended Euclid for prime fields.
    pub fn inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            FieldElement::Prime { value, modulus } => FieldElement::Prime {
                value: inv_mod(*value as i64, *modulus as i64),
                modulus: *modulus,
            },
            FieldElement::Rational(q) => FieldElement::Rational(q.recip()),
        })
    }

    pub fn pow(&self, mut e: u64) -> FieldElement {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Numerator and denominator for rationals; `(residue, 1)` for prime fields.
    pub fn to_ratio_parts(&self) -> (BigInt, BigInt) {
        match self {
            FieldElement::Prime { value, .. } => (BigInt::from(*value), BigInt::one()),
            FieldElement::Rational(q) => (q.numer().clone(), q.denom().clone()),
        }
    }
}

fn inv_mod(a: i64, m: i64) -> u32 {
    let (mut old_r, mut r) = (a, m);
    let (mut old_s, mut s) = (1i64, 0i64);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    debug_assert_eq!(old_r, 1);
    old_s.rem_euclid(m) as u32
}

fn mismatch(a: &FieldElement, b: &FieldElement) -> ! {
    panic!("field mismatch: {} vs {}", a.field(), b.field())
}

impl Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        match (self, rhs) {
            (FieldElement::Prime { value: a, modulus }, FieldElement::Prime { value: b, modulus: m2 })
                if modulus == m2 =>
            {
                let s = *a as u64 + *b as u64;
                let p = *modulus as u64;
                FieldElement::Prime {
                    value: if s >= p { (s - p) as u32 } else { s as u32 },
                    modulus: *modulus,
                }
            }
            (FieldElement::Rational(a), FieldElement::Rational(b)) => FieldElement::Rational(a + b),
            _ => mismatch(self, rhs),
        }
    }
}

impl Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        match (self, rhs) {
            (FieldElement::Prime { value: a, modulus }, FieldElement::Prime { value: b, modulus: m2 })
                if modulus == m2 =>
            {
                let v = if a >= b { a - b } else { modulus - (b - a) };
                FieldElement::Prime {
                    value: v,
                    modulus: *modulus,
                }
            }
            (FieldElement::Rational(a), FieldElement::Rational(b)) => FieldElement::Rational(a - b),
            _ => mismatch(self, rhs),
        }
    }
}

impl Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        match (self, rhs) {
            (FieldElement::Prime { value: a, modulus }, FieldElement::Prime { value: b, modulus: m2 })
                if modulus == m2 =>
            {
                FieldElement::Prime {
                    value: ((*a as u64 * *b as u64) % *modulus as u64) as u32,
                    modulus: *modulus,
                }
            }
            (FieldElement::Rational(a), FieldElement::Rational(b)) => FieldElement::Rational(a * b),
            _ => mismatch(self, rhs),
        }
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        match self {
            FieldElement::Prime { value, modulus } => FieldElement::Prime {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
            FieldElement::Rational(q) => FieldElement::Rational(-q),
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Prime { value, .. } => write!(f, "{value}"),
            FieldElement::Rational(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> FieldElement {
        FieldSpec::Rationals.from_ratio(n, d).unwrap()
    }

    #[test]
    fn spec_examples() {
        let f7 = FieldSpec::prime(7).unwrap();
        let r = field_arith(&f7.from_i64(3), &f7.from_i64(2), FieldOp::Div).unwrap();
        assert_eq!(r, f7.from_i64(5));
        assert_eq!(&r * &f7.from_i64(2), f7.from_i64(3));

        let s = field_arith(&q(1, 2), &q(1, 3), FieldOp::Add).unwrap();
        assert_eq!(s, q(5, 6));

        let f3 = FieldSpec::prime(3).unwrap();
        let r = field_arith(&f3.from_i64(2), &f3.from_i64(2), FieldOp::Mul).unwrap();
        assert!(r.is_one());
    }

    #[test]
    fn errors() {
        let f7 = FieldSpec::prime(7).unwrap();
        assert_eq!(
            field_arith(&f7.one(), &f7.zero(), FieldOp::Div),
            Err(Error::DivisionByZero)
        );
        assert!(matches!(
            field_arith(&f7.one(), &q(1, 2), FieldOp::Add),
            Err(Error::FieldMismatch(..))
        ));
        let f5 = FieldSpec::prime(5).unwrap();
        assert!(field_arith(&f7.one(), &f5.one(), FieldOp::Mul).is_err());
        assert_eq!(q(1, 2).inv().unwrap(), q(2, 1));
        assert_eq!(q(0, 5).inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn prime_validation() {
        assert!(FieldSpec::prime(2).is_ok());
        assert!(FieldSpec::prime(2_147_483_647).is_ok());
        assert_eq!(FieldSpec::prime(1), Err(Error::InvalidPrime(1)));
        assert_eq!(FieldSpec::prime(9), Err(Error::InvalidPrime(9)));
        assert_eq!(FieldSpec::prime(1 << 31), Err(Error::InvalidPrime(1 << 31)));
        assert!(FieldSpec::prime(4_294_967_311).is_err());
    }

    #[test]
    fn canonical_forms() {
        let z = q(0, -7);
        assert_eq!(z, q(0, 1));
        assert_eq!(q(2, -4).to_string(), "-1/2");
        let f5 = FieldSpec::prime(5).unwrap();
        assert_eq!(f5.from_i64(-1).to_string(), "4");
        assert!(f5.from_i64(-1).is_minus_one());
        assert_eq!(f5.from_ratio(1, 2).unwrap(), f5.from_i64(3));
    }

    fn elem(field: FieldSpec) -> impl Strategy<Value = FieldElement> {
        (-50i64..50, 1i64..20).prop_map(move |(n, d)| match field {
            FieldSpec::Prime(_) => field.from_i64(n),
            FieldSpec::Rationals => field.from_ratio(n, d).unwrap(),
        })
    }

    fn fields() -> impl Strategy<Value = FieldSpec> {
        prop_oneof![
            Just(FieldSpec::Rationals),
            Just(FieldSpec::Prime(2)),
            Just(FieldSpec::Prime(3)),
            Just(FieldSpec::Prime(7)),
            Just(FieldSpec::Prime(2_147_483_647)),
        ]
    }

    proptest! {
        #[test]
        fn field_axioms((a, b, c) in fields().prop_flat_map(|f| (elem(f), elem(f), elem(f)))) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert!((&a + &(-&a)).is_zero());
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
            if !a.is_zero() {
                prop_assert!((&a * &a.inv().unwrap()).is_one());
            }
        }

        #[test]
        fn fermat(p in prop::sample::select(vec![2u64, 3, 5, 7, 101, 65_537]), n in -1000i64..1000) {
            let f = FieldSpec::prime(p).unwrap();
            let a = f.from_i64(n);
            prop_assert_eq!(a.pow(p), a);
        }

        #[test]
        fn rationals_in_lowest_terms(a in elem(FieldSpec::Rationals), b in elem(FieldSpec::Rationals)) {
            for r in [&a + &b, &a - &b, &a * &b] {
                let (n, d) = r.to_ratio_parts();
                prop_assert!(d > BigInt::zero());
                prop_assert!(n.gcd(&d).is_one());
            }
        }
    }
}
