//! Exact arithmetic in the quadratic field `K = Q(sqrt 2)`.
//!
//! Every element is stored as `p + q·√2` with `p, q` reduced rationals, so
//! the representation is unique and equality is structural. Ordering is
//! decided exactly through the norm form `p² − 2q²`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always reduced with a positive denominator.
pub type Rational = BigRational;

/// The element `p + q·√2` of `Q(sqrt 2)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QuadRat {
    p: Rational,
    q: Rational,
}

fn sign_of(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// Displays a rational in literal syntax: `n` or `n/d`.
fn fmt_rational(r: &Rational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.denom().is_one() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

impl QuadRat {
    pub fn new(p: Rational, q: Rational) -> Self {
        QuadRat { p, q }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn sqrt2() -> Self {
        QuadRat::new(Rational::zero(), Rational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Self::from_rational(Rational::from_integer(n))
    }

    pub fn from_rational(p: Rational) -> Self {
        QuadRat::new(p, Rational::zero())
    }

    /// `num/den` as an element of `Q`. Panics if `den == 0`.
    pub fn frac(num: i64, den: i64) -> Self {
        Self::from_rational(Rational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// `(pn/pd) + (qn/qd)·√2`. Panics on a zero denominator.
    pub fn from_parts(pn: i64, pd: i64, qn: i64, qd: i64) -> Self {
        QuadRat::new(
            Rational::new(pn.into(), pd.into()),
            Rational::new(qn.into(), qd.into()),
        )
    }

    /// Rational part.
    pub fn p(&self) -> &Rational {
        &self.p
    }

    /// Coefficient of `√2`.
    pub fn q(&self) -> &Rational {
        &self.q
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.q.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.q.is_zero() && self.p.denom().is_one()
    }

    /// Galois conjugate `p − q·√2`.
    pub fn conj(&self) -> Self {
        QuadRat::new(self.p.clone(), -self.q.clone())
    }

    /// Field norm `p² − 2q²`; zero only for zero.
    pub fn norm(&self) -> Rational {
        let two = Rational::from_integer(BigInt::from(2));
        &self.p * &self.p - two * &self.q * &self.q
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm();
        Ok(QuadRat::new(&self.p / &n, -(&self.q / &n)))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    /// Sign of the real number `p + q·√2`, as `-1`, `0` or `1`.
    pub fn sign(&self) -> i8 {
        let sp = sign_of(&self.p);
        let sq = sign_of(&self.q);
        if sq == 0 {
            return sp;
        }
        if sp == 0 || sp == sq {
            return sq;
        }
        // Opposite signs: the larger of p² and 2q² wins.
        match sign_of(&self.norm()) {
            1 => sp,
            _ => sq,
        }
    }

    pub fn is_positive(&self) -> bool {
        self.sign() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.sign() < 0
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// The unique integer `n` with `n <= self < n + 1`.
    pub fn floor(&self) -> BigInt {
        if self.is_rational() {
            return self.p.floor().to_integer();
        }
        // 99/70 < √2 < 140/99 puts self strictly inside a rational interval.
        let a = &self.q * Rational::new(99.into(), 70.into());
        let b = &self.q * Rational::new(140.into(), 99.into());
        let (lo_r, hi_r) = if a < b { (a, b) } else { (b, a) };
        let mut lo = (&self.p + lo_r).floor().to_integer();
        let mut hi = (&self.p + hi_r).floor().to_integer() + BigInt::one();
        // invariant: lo <= self < hi
        while &hi - &lo > BigInt::one() {
            let mid: BigInt = (&lo + &hi).div_floor(&BigInt::from(2));
            if (self - &QuadRat::from_bigint(mid.clone())).sign() >= 0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        lo
    }

    /// `self − floor(self)`, the representative of `self mod Z` in `[0, 1)`.
    pub fn fract(&self) -> Self {
        self - &QuadRat::from_bigint(self.floor())
    }

    /// Integer value if `self` is an integer.
    pub fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.p.numer().clone())
    }

    /// Floating approximation, for diagnostics only.
    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.p.to_f64().unwrap_or(f64::NAN)
            + self.q.to_f64().unwrap_or(f64::NAN) * std::f64::consts::SQRT_2
    }
}

impl fmt::Display for QuadRat {
    /// Literal syntax accepted by the parser: `3/2+2r2`, `-r2`, `5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let write_q = |f: &mut fmt::Formatter<'_>, q: &Rational| -> fmt::Result {
            if !q.is_one() {
                fmt_rational(q, f)?;
            }
            f.write_str("r2")
        };
        if self.q.is_zero() {
            return fmt_rational(&self.p, f);
        }
        if !self.p.is_zero() {
            fmt_rational(&self.p, f)?;
            if self.q.is_positive() {
                f.write_str("+")?;
            }
        }
        if self.q.is_negative() {
            f.write_str("-")?;
        }
        write_q(f, &self.q.abs())
    }
}

impl fmt::Debug for QuadRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl PartialOrd for QuadRat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadRat {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).sign().cmp(&0)
    }
}

impl From<i64> for QuadRat {
    fn from(n: i64) -> Self {
        QuadRat::from_int(n)
    }
}

impl From<Rational> for QuadRat {
    fn from(r: Rational) -> Self {
        QuadRat::from_rational(r)
    }
}

impl<'a> Add<&'a QuadRat> for &'a QuadRat {
    type Output = QuadRat;
    fn add(self, rhs: &QuadRat) -> QuadRat {
        QuadRat::new(&self.p + &rhs.p, &self.q + &rhs.q)
    }
}

impl<'a> Sub<&'a QuadRat> for &'a QuadRat {
    type Output = QuadRat;
    fn sub(self, rhs: &QuadRat) -> QuadRat {
        QuadRat::new(&self.p - &rhs.p, &self.q - &rhs.q)
    }
}

impl<'a> Mul<&'a QuadRat> for &'a QuadRat {
    type Output = QuadRat;
    fn mul(self, rhs: &QuadRat) -> QuadRat {
        let two = Rational::from_integer(BigInt::from(2));
        QuadRat::new(
            &self.p * &rhs.p + two * &self.q * &rhs.q,
            &self.p * &rhs.q + &rhs.p * &self.q,
        )
    }
}

impl Neg for &QuadRat {
    type Output = QuadRat;
    fn neg(self) -> QuadRat {
        QuadRat::new(-self.p.clone(), -self.q.clone())
    }
}

impl Neg for QuadRat {
    type Output = QuadRat;
    fn neg(self) -> QuadRat {
        QuadRat::new(-self.p, -self.q)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<QuadRat> for QuadRat {
            type Output = QuadRat;
            fn $m(self, rhs: QuadRat) -> QuadRat {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a QuadRat> for QuadRat {
            type Output = QuadRat;
            fn $m(self, rhs: &QuadRat) -> QuadRat {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<QuadRat> for &'a QuadRat {
            type Output = QuadRat;
            fn $m(self, rhs: QuadRat) -> QuadRat {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&QuadRat> for QuadRat {
    fn add_assign(&mut self, rhs: &QuadRat) {
        self.p += &rhs.p;
        self.q += &rhs.q;
    }
}
