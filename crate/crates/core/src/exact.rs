//! Exact rational and modular-angle arithmetic plus extended-gcd/Bézout
//! primitives.
//!
//! Everything in this module is integer-exact: arbitrary-precision numerators
//! and denominators, no floating point, and angle coordinates stored as
//! canonical representatives in [0, 1). All values are immutable after
//! construction and all operations are pure functions.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An exact rational number, always stored reduced with a positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `num/den`, reducing and moving the sign into the numerator.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let den = den.into();
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(num.into(), den)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// The greatest integer ≤ self.
    pub fn floor_int(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    /// Exact integer value, if the denominator is 1.
    pub fn to_integer(&self) -> Option<BigInt> {
        self.0.is_integer().then(|| self.0.to_integer())
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl Add for &Rational {
    type Output = Rational;
    fn add(self, rhs: &Rational) -> Rational {
        Rational(&self.0 + &rhs.0)
    }
}

impl Sub for &Rational {
    type Output = Rational;
    fn sub(self, rhs: &Rational) -> Rational {
        Rational(&self.0 - &rhs.0)
    }
}

impl Mul for &Rational {
    type Output = Rational;
    fn mul(self, rhs: &Rational) -> Rational {
        Rational(&self.0 * &rhs.0)
    }
}

impl Div for &Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero rational");
        Rational(&self.0 / &rhs.0)
    }
}

impl Mul<&BigInt> for &Rational {
    type Output = Rational;
    fn mul(self, rhs: &BigInt) -> Rational {
        Rational(&self.0 * rhs)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

macro_rules! forward_owned_binop {
    ($($trait:ident :: $method:ident),*) => {$(
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                $trait::$method(&self, &rhs)
            }
        }
    )*};
}
forward_owned_binop!(Add::add, Sub::sub, Mul::mul, Div::div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        -&self
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Parses "p" or "p/q". Non-reduced input is accepted and reduced;
    /// a zero denominator is rejected.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |reason| Error::ParseRational {
            input: s.to_owned(),
            reason,
        };
        let mut parts = s.trim().splitn(2, '/');
        let num = parts
            .next()
            .filter(|p| !p.is_empty())
            .and_then(|p| BigInt::from_str(p).ok())
            .ok_or_else(|| bad("numerator is not an integer"))?;
        let den = match parts.next() {
            None => BigInt::one(),
            Some(p) => BigInt::from_str(p).map_err(|_| bad("denominator is not an integer"))?,
        };
        if den.is_zero() {
            return Err(bad("denominator is zero"));
        }
        Ok(Rational(BigRational::new(num, den)))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        s.parse().map_err(de::Error::custom)
    }
}

/// An angle coordinate reduced mod 1 into [0, 1).
///
/// Angles enter points as r·e^{2πiθ}, so values differing by an integer are
/// the same angle; storing the canonical representative makes equality exact.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AngleMod1(Rational);

impl AngleMod1 {
    pub fn new(x: &Rational) -> Self {
        let shift = Rational::from_integer(x.floor_int());
        AngleMod1(x - &shift)
    }

    pub fn zero() -> Self {
        AngleMod1(Rational::zero())
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// (θ + δ) mod 1.
    pub fn shifted(&self, delta: &Rational) -> Self {
        AngleMod1::new(&(&self.0 + delta))
    }

    /// (m·θ) mod 1.
    pub fn scaled(&self, factor: &BigInt) -> Self {
        AngleMod1::new(&(&self.0 * factor))
    }
}

impl fmt::Display for AngleMod1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for AngleMod1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for AngleMod1 {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for AngleMod1 {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        Ok(AngleMod1::new(&Rational::deserialize(de)?))
    }
}

/// Reduces a rational into [0, 1); the result differs from the input by an
/// integer.
pub fn reduce_mod1(x: &Rational) -> AngleMod1 {
    AngleMod1::new(x)
}

/// Extended Euclid: returns (g, x, y) with g = gcd(|a|, |b|) ≥ 0 and
/// a·x + b·y = g. By convention ext_gcd(0, 0) = (0, 0, 0).
pub fn ext_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_x, mut x) = (BigInt::one(), BigInt::zero());
    let (mut old_y, mut y) = (BigInt::zero(), BigInt::one());
    while !r.is_zero() {
        let q = &old_r / &r;
        let next_r = &old_r - &q * &r;
        let next_x = &old_x - &q * &x;
        let next_y = &old_y - &q * &y;
        old_r = std::mem::replace(&mut r, next_r);
        old_x = std::mem::replace(&mut x, next_x);
        old_y = std::mem::replace(&mut y, next_y);
    }
    if old_r.is_zero() {
        return (BigInt::zero(), BigInt::zero(), BigInt::zero());
    }
    if old_r.is_negative() {
        (-old_r, -old_x, -old_y)
    } else {
        (old_r, old_x, old_y)
    }
}

/// Integers (α′, β′) satisfying α·β′ − α′·β = 1 for an owning coprime pair
/// (α, β).
///
/// [`bezout`] produces the canonical choice with 0 ≤ α′ < α; all other valid
/// choices are reachable through [`BezoutPair::shifted`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BezoutPair {
    #[serde(with = "crate::jsonnum")]
    alpha_prime: BigInt,
    #[serde(with = "crate::jsonnum")]
    beta_prime: BigInt,
}

impl BezoutPair {
    pub fn new(alpha_prime: impl Into<BigInt>, beta_prime: impl Into<BigInt>) -> Self {
        BezoutPair {
            alpha_prime: alpha_prime.into(),
            beta_prime: beta_prime.into(),
        }
    }

    pub fn alpha_prime(&self) -> &BigInt {
        &self.alpha_prime
    }

    pub fn beta_prime(&self) -> &BigInt {
        &self.beta_prime
    }

    /// Whether α·β′ − α′·β = 1 holds against the owning (α, β).
    pub fn satisfies(&self, alpha: &BigInt, beta: &BigInt) -> bool {
        (alpha * &self.beta_prime - &self.alpha_prime * beta).is_one()
    }

    /// The alternative choice (α′ + mα, β′ + mβ), which preserves the identity.
    pub fn shifted(&self, m: &BigInt, alpha: &BigInt, beta: &BigInt) -> Self {
        BezoutPair {
            alpha_prime: &self.alpha_prime + m * alpha,
            beta_prime: &self.beta_prime + m * beta,
        }
    }
}

/// The canonical Bézout pair for coprime (α, β) with α ≥ 1: the unique
/// (α′, β′) with α·β′ − α′·β = 1 and 0 ≤ α′ < α.
///
/// Panics unless gcd(α, β) = 1 and α ≥ 1, which the invariant constructors
/// guarantee.
pub fn bezout(alpha: &BigInt, beta: &BigInt) -> BezoutPair {
    let (g, x, y) = ext_gcd(alpha, beta);
    assert!(
        g.is_one() && alpha.is_positive(),
        "bezout requires coprime (alpha, beta) with alpha >= 1"
    );
    // α·x + β·y = 1 matches α·β′ − α′·β = 1 with β′ = x, α′ = −y; then shift
    // α′ into [0, α), adjusting β′ to keep the identity.
    let alpha_prime = -y;
    let normalized = alpha_prime.mod_floor(alpha);
    let m = (&normalized - &alpha_prime) / alpha;
    BezoutPair {
        alpha_prime: normalized,
        beta_prime: x + m * beta,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn int(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn ext_gcd_degenerate_and_identity_cases() {
        assert_eq!(
            ext_gcd(&int(0), &int(0)),
            (int(0), int(0), int(0)),
            "ext_gcd(0, 0) is fixed by convention"
        );
        assert_eq!(ext_gcd(&int(1), &int(0)), (int(1), int(1), int(0)));
    }

    #[test]
    fn ext_gcd_satisfies_its_identity() {
        let (g, x, y) = ext_gcd(&int(10), &int(6));
        assert_eq!(g, int(2));
        assert_eq!(int(10) * x + int(6) * y, int(2));
    }

    /// Exhaustive-search oracle: the unique α′ in [0, α) admitting an integer β′.
    fn brute_bezout(alpha: i64, beta: i64) -> (i64, i64) {
        let mut found = Vec::new();
        for ap in 0..alpha {
            // α·β′ = 1 + α′·β must have an integer solution β′.
            if (1 + ap * beta).rem_euclid(alpha) == 0 {
                found.push((ap, (1 + ap * beta).div_euclid(alpha)));
            }
        }
        assert_eq!(found.len(), 1, "normalized alpha' must be unique");
        found[0]
    }

    #[test]
    fn bezout_canonical_values() {
        assert_eq!(bezout(&int(1), &int(0)), BezoutPair::new(0, 1));
        assert_eq!(bezout(&int(2), &int(1)), BezoutPair::new(1, 1));
        assert_eq!(bezout(&int(5), &int(3)), BezoutPair::new(3, 2));
        assert!(BezoutPair::new(3, 2).satisfies(&int(5), &int(3)));
    }

    #[test]
    fn bezout_exhaustive_scan_small_alpha() {
        for alpha in 1i64..=50 {
            for beta in -50i64..=50 {
                if int(alpha).gcd(&int(beta)) != int(1) {
                    continue;
                }
                let pair = bezout(&int(alpha), &int(beta));
                let (ap, bp) = brute_bezout(alpha, beta);
                assert_eq!(pair, BezoutPair::new(ap, bp), "alpha={alpha} beta={beta}");
                assert!(pair.satisfies(&int(alpha), &int(beta)));
            }
        }
    }

    #[test]
    fn bezout_shift_preserves_identity() {
        let pair = bezout(&int(5), &int(3));
        for m in -4i64..=4 {
            assert!(pair
                .shifted(&int(m), &int(5), &int(3))
                .satisfies(&int(5), &int(3)));
        }
    }

    #[test]
    fn reduce_mod1_known_values() {
        assert_eq!(reduce_mod1(&rat(0, 1)).value(), &rat(0, 1));
        assert_eq!(reduce_mod1(&rat(-3, 2)).value(), &rat(1, 2));
        assert_eq!(reduce_mod1(&rat(7, 3)).value(), &rat(1, 3));
    }

    #[test]
    fn rational_parse_and_display() {
        assert_eq!("3".parse::<Rational>().unwrap(), rat(3, 1));
        assert_eq!("-5/2".parse::<Rational>().unwrap(), rat(-5, 2));
        assert_eq!("4/6".parse::<Rational>().unwrap(), rat(2, 3));
        assert_eq!("3/-6".parse::<Rational>().unwrap(), rat(-1, 2));
        assert_eq!(rat(-5, 2).to_string(), "-5/2");
        assert_eq!(rat(8, 4).to_string(), "2");
        assert!("1/0".parse::<Rational>().is_err());
        assert!("".parse::<Rational>().is_err());
        assert!("a/b".parse::<Rational>().is_err());
        assert!("1.5".parse::<Rational>().is_err());
    }

    #[test]
    fn rational_rejects_zero_denominator() {
        assert!(matches!(Rational::new(1, 0), Err(Error::ZeroDenominator)));
    }

    #[test]
    fn rational_serde_is_the_string_form() {
        let x = rat(-5, 2);
        let json = serde_json::to_string(&x).unwrap();
        assert_eq!(json, "\"-5/2\"");
        assert_eq!(serde_json::from_str::<Rational>(&json).unwrap(), x);
        assert_eq!(serde_json::from_str::<Rational>("\"10/4\"").unwrap(), rat(5, 2));
        assert!(serde_json::from_str::<Rational>("\"1/0\"").is_err());
    }

    proptest! {
        #[test]
        fn ext_gcd_identity_holds(a in any::<i64>(), b in any::<i64>()) {
            prop_assume!(a != 0 || b != 0);
            let (a, b) = (int(a), int(b));
            let (g, x, y) = ext_gcd(&a, &b);
            prop_assert!(g.is_positive());
            prop_assert!((&a % &g).is_zero() && (&b % &g).is_zero());
            prop_assert_eq!(&a * x + &b * y, g);
        }

        #[test]
        fn bezout_identity_holds_up_to_large_alpha(alpha in 1i64..=10_000, beta in -10_000i64..=10_000) {
            prop_assume!(int(alpha).gcd(&int(beta)) == int(1));
            let pair = bezout(&int(alpha), &int(beta));
            prop_assert!(pair.satisfies(&int(alpha), &int(beta)));
            prop_assert!(!pair.alpha_prime().is_negative() && pair.alpha_prime() < &int(alpha));
        }

        #[test]
        fn rational_addition_is_exact(an in -1_000_000i64..1_000_000, ad in 1i64..1_000,
                                      bn in -1_000_000i64..1_000_000, bd in 1i64..1_000) {
            let a = Rational::new(an, ad).unwrap();
            let b = Rational::new(bn, bd).unwrap();
            prop_assert_eq!(&(&a + &b) - &b, a);
        }

        #[test]
        fn reduce_mod1_is_idempotent_and_shift_invariant(
            n in -1_000_000i64..1_000_000, d in 1i64..1_000, shift in -50i64..50
        ) {
            let x = Rational::new(n, d).unwrap();
            let reduced = reduce_mod1(&x);
            prop_assert!(!reduced.value().is_negative());
            prop_assert!(reduced.value() < &Rational::one());
            prop_assert!((&x - reduced.value()).is_integer());
            prop_assert_eq!(reduce_mod1(reduced.value()), reduced.clone());
            let shifted = &x + &Rational::from_integer(shift);
            prop_assert_eq!(reduce_mod1(&shifted), reduced);
        }
    }
}
