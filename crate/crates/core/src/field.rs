//! Exact scalar fields: the rationals and prime fields `F_p`.
//!
//! Fields are runtime values (the prime is chosen at run time), so arithmetic
//! goes through a [`Field`] object rather than operator overloading on the
//! elements themselves.

use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use crate::error::{Error, Result};

/// Alias naming the element type of a field.
pub type FieldScalar<F> = <F as Field>::Elem;

/// An exact field with cheap clonable handle.
pub trait Field: Clone + fmt::Debug + Send + Sync + 'static {
    type Elem: Clone + Eq + Ord + Hash + fmt::Debug + fmt::Display + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    /// `num / den`; fails when the denominator vanishes in the field.
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Self::Elem>;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    /// 0 for the rationals.
    fn characteristic(&self) -> u64;

    /// A random element. For the rationals this is a small fraction.
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;

    /// Display form used by serializers (`"a"` or `"a/b"`).
    fn to_text(&self, a: &Self::Elem) -> String {
        a.to_string()
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Rejects a prime characteristic dividing any of `values`.
    fn check_coprime(&self, values: &[u64]) -> Result<()> {
        let p = self.characteristic();
        if p == 0 {
            return Ok(());
        }
        match values.iter().find(|&&v| v != 0 && v % p == 0) {
            Some(&v) => Err(Error::BadCharacteristic { p, value: v }),
            None => Ok(()),
        }
    }
}

/// An element of `F_p`, always in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Residue(u64);

impl Residue {
    pub fn value(self) -> u64 {
        self.0
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The prime field `F_p` for an odd prime `p < 2^32`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p < 3 || p >= 1 << 32 || !crate::primes::is_prime(p) {
            return Err(Error::InvalidPrime(p));
        }
        Ok(Self { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn elem(&self, v: u64) -> Residue {
        Residue(v % self.p)
    }

    /// Every element of the field, in increasing order.
    pub fn elements(&self) -> impl Iterator<Item = Residue> {
        (0..self.p).map(Residue)
    }

    fn reduce_big(&self, v: &BigInt) -> u64 {
        let p = BigInt::from(self.p);
        v.mod_floor(&p).to_u64().expect("residue fits in u64")
    }
}

impl Field for PrimeField {
    type Elem = Residue;

    fn zero(&self) -> Residue {
        Residue(0)
    }
    fn one(&self) -> Residue {
        Residue(1)
    }
    fn from_i64(&self, v: i64) -> Residue {
        Residue(v.rem_euclid(self.p as i64) as u64)
    }
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Residue> {
        let d = Residue(self.reduce_big(den));
        let inv = self.inv(&d).ok_or(Error::DivisionByZero)?;
        Ok(self.mul(&Residue(self.reduce_big(num)), &inv))
    }
    #[inline]
    fn add(&self, a: &Residue, b: &Residue) -> Residue {
        let s = a.0 + b.0;
        Residue(if s >= self.p { s - self.p } else { s })
    }
    #[inline]
    fn sub(&self, a: &Residue, b: &Residue) -> Residue {
        Residue(if a.0 >= b.0 { a.0 - b.0 } else { a.0 + self.p - b.0 })
    }
    #[inline]
    fn mul(&self, a: &Residue, b: &Residue) -> Residue {
        Residue(a.0 * b.0 % self.p)
    }
    #[inline]
    fn neg(&self, a: &Residue) -> Residue {
        Residue(if a.0 == 0 { 0 } else { self.p - a.0 })
    }
    fn inv(&self, a: &Residue) -> Option<Residue> {
        if a.0 == 0 {
            return None;
        }
        // extended Euclid on i64
        let (mut r0, mut r1) = (self.p as i64, a.0 as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        Some(Residue(t0.rem_euclid(self.p as i64) as u64))
    }
    #[inline]
    fn is_zero(&self, a: &Residue) -> bool {
        a.0 == 0
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Residue {
        Residue(rng.gen_range(0..self.p))
    }
}

/// The rational numbers, backed by arbitrary-precision fractions.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<BigRational> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(BigRational::new(num.clone(), den.clone()))
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> BigRational {
        let num: i64 = rng.gen_range(-1000..=1000);
        let den: i64 = rng.gen_range(1..=30);
        BigRational::new(num.into(), den.into())
    }
    fn to_text(&self, a: &BigRational) -> String {
        if a.denom().is_one() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
}

/// Parses `"a"` or `"a/b"` (optionally signed) into a field element.
pub fn parse_scalar<F: Field>(field: &F, text: &str) -> Result<F::Elem> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n, d),
        None => (t.as_str(), "1"),
    };
    let parse = |s: &str| {
        s.parse::<BigInt>()
            .map_err(|_| Error::Parse(format!("bad number `{text}`")))
    };
    let (n, d) = (parse(num)?, parse(den)?);
    if d.is_negative() {
        return field.from_ratio(&-n, &-d);
    }
    field.from_ratio(&n, &d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn residues_are_canonical() {
        let f = PrimeField::new(13).unwrap();
        assert_eq!(f.from_i64(-1), f.elem(12));
        assert_eq!(f.from_i64(27).value(), 1);
        let half = f.from_ratio(&1.into(), &2.into()).unwrap();
        assert_eq!(f.mul(&half, &f.elem(2)), f.one());
        assert!(f.from_ratio(&1.into(), &13.into()).is_err());
    }

    #[test]
    fn rejects_non_primes() {
        assert!(PrimeField::new(15).is_err());
        assert!(PrimeField::new(2).is_err());
        assert!(PrimeField::new(1_000_003).is_ok());
    }

    #[test]
    fn parse_scalar_forms() {
        let q = Rationals;
        assert_eq!(parse_scalar(&q, " -3/ 6").unwrap(), BigRational::new((-1).into(), 2.into()));
        assert_eq!(parse_scalar(&q, "4/-2").unwrap(), q.from_i64(-2));
        assert!(parse_scalar(&q, "1/0").is_err());
        assert!(parse_scalar(&q, "x").is_err());
    }

    #[test]
    fn characteristic_hygiene() {
        let f = PrimeField::new(7).unwrap();
        assert!(f.check_coprime(&[3, 5, 6]).is_ok());
        assert!(matches!(f.check_coprime(&[3, 14]), Err(Error::BadCharacteristic { p: 7, value: 14 })));
        assert!(Rationals.check_coprime(&[0, 7]).is_ok());
    }

    fn axioms<F: Field>(f: &F, a: &F::Elem, b: &F::Elem, c: &F::Elem) {
        assert_eq!(f.sub(&f.add(a, b), b), *a);
        assert_eq!(f.mul(&f.mul(a, b), c), f.mul(a, &f.mul(b, c)));
        assert_eq!(f.add(&f.add(a, b), c), f.add(a, &f.add(b, c)));
        assert_eq!(f.mul(a, &f.add(b, c)), f.add(&f.mul(a, b), &f.mul(a, c)));
        assert_eq!(f.add(a, &f.neg(a)), f.zero());
        if !f.is_zero(a) {
            assert_eq!(f.mul(a, &f.inv(a).unwrap()), f.one());
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn prime_field_axioms(a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
            let f = PrimeField::new(1_000_003).unwrap();
            axioms(&f, &f.elem(a), &f.elem(b), &f.elem(c));
        }

        #[test]
        fn rational_axioms(a in -50i64..50, b in 1i64..20, c in -50i64..50, d in 1i64..20, e in -9i64..9) {
            let q = Rationals;
            let x = q.from_ratio(&a.into(), &b.into()).unwrap();
            let y = q.from_ratio(&c.into(), &d.into()).unwrap();
            axioms(&q, &x, &y, &q.from_i64(e));
        }
    }
}
