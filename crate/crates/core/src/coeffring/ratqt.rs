//! The field Q(q,t).

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::parse::{self, ParseRing};
use super::zpoly::ZPoly;
use super::{CoeffError, Order};

/// Exact element of Q(q,t) stored as a reduced fraction of integer polynomials.
///
/// The numerator and denominator are coprime and the lexicographically leading
/// coefficient of the denominator is positive, so equal values have equal
/// representations.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatQT {
    num: ZPoly,
    den: ZPoly,
}

impl Default for RatQT {
    fn default() -> Self {
        Self::zero()
    }
}

impl RatQT {
    pub fn zero() -> Self {
        RatQT { num: ZPoly::zero(), den: ZPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_poly(ZPoly::constant(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Self::from_poly(ZPoly::constant(n))
    }

    pub fn from_rational(r: &BigRational) -> Self {
        Self::new(ZPoly::constant(r.numer().clone()), ZPoly::constant(r.denom().clone())).unwrap()
    }

    pub fn from_poly(p: ZPoly) -> Self {
        RatQT { num: p, den: ZPoly::one() }
    }

    pub fn q() -> Self {
        Self::from_poly(ZPoly::monomial(BigInt::one(), 1, 0))
    }

    pub fn t() -> Self {
        Self::from_poly(ZPoly::monomial(BigInt::one(), 0, 1))
    }

    /// The Laurent monomial c q^a t^b.
    pub fn monomial(c: i64, a: i32, b: i32) -> Self {
        let c = BigInt::from(c);
        let (na, da) = if a >= 0 { (a as u32, 0) } else { (0, (-a) as u32) };
        let (nb, db) = if b >= 0 { (b as u32, 0) } else { (0, (-b) as u32) };
        Self::new(ZPoly::monomial(c, na, nb), ZPoly::monomial(BigInt::one(), da, db)).unwrap()
    }

    /// q^a t^b for integer exponents.
    pub fn qt_pow(a: i32, b: i32) -> Self {
        Self::monomial(1, a, b)
    }

    pub fn new(num: ZPoly, den: ZPoly) -> Result<Self, CoeffError> {
        if den.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: ZPoly, den: ZPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (n, d) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
        };
        Self::sign_fix(n, d)
    }

    fn sign_fix(n: ZPoly, d: ZPoly) -> Self {
        if d.leading_coeff().unwrap().is_negative() {
            RatQT { num: n.neg(), den: d.neg() }
        } else {
            RatQT { num: n, den: d }
        }
    }

    pub fn numer(&self) -> &ZPoly {
        &self.num
    }

    pub fn denom(&self) -> &ZPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the value lies in Z[q^±1, t^±1].
    pub fn is_laurent(&self) -> bool {
        self.den.is_monomial()
    }

    pub fn neg(&self) -> Self {
        RatQT { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let (a, b, c, d) = (&self.num, &self.den, &o.num, &o.den);
        if b == d {
            return Self::reduce(a.add(c), b.clone());
        }
        if b.is_one() {
            return RatQT { num: a.mul(d).add(c), den: d.clone() };
        }
        if d.is_one() {
            return RatQT { num: c.mul(b).add(a), den: b.clone() };
        }
        let g = b.gcd(d);
        if g.is_one() {
            let n = a.mul(d).add(&c.mul(b));
            if n.is_zero() {
                return Self::zero();
            }
            return Self::sign_fix(n, b.mul(d));
        }
        let b1 = b.div_exact(&g).unwrap();
        let d1 = d.div_exact(&g).unwrap();
        let n = a.mul(&d1).add(&c.mul(&b1));
        if n.is_zero() {
            return Self::zero();
        }
        let g2 = n.gcd(&g);
        if g2.is_one() {
            Self::sign_fix(n, b1.mul(d))
        } else {
            let n = n.div_exact(&g2).unwrap();
            let den = b1.mul(&d1).mul(&g.div_exact(&g2).unwrap());
            Self::sign_fix(n, den)
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if self.is_one() {
            return o.clone();
        }
        if o.is_one() {
            return self.clone();
        }
        let (a, b, c, d) = (&self.num, &self.den, &o.num, &o.den);
        let (a, d) = cancel(a, d);
        let (c, b) = cancel(c, b);
        Self::sign_fix(a.mul(&c), b.mul(&d))
    }

    pub fn inv(&self) -> Result<Self, CoeffError> {
        if self.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(Self::sign_fix(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, o: &Self) -> Result<Self, CoeffError> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn pow(&self, n: i32) -> Self {
        let base = if n < 0 { self.inv().expect("negative power of zero") } else { self.clone() };
        let mut out = Self::one();
        for _ in 0..n.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// Order of vanishing at t = 0.
    pub fn t_order(&self) -> Order {
        match self.num.min_t() {
            None => Order::Inf,
            Some(a) => Order::Fin(a as i64 - self.den.min_t().unwrap() as i64),
        }
    }

    /// Applies the substitution t -> t^n (n ≥ 1) and q -> q^n.
    pub fn frobenius(&self, n: u32) -> Self {
        let f = |p: &ZPoly| ZPoly::from_terms(p.terms().iter().map(|(a, b, c)| (a * n, b * n, c.clone())));
        Self::new(f(&self.num), f(&self.den)).unwrap()
    }

    /// Evaluates at rational q, t; `None` if the denominator vanishes.
    pub fn eval(&self, q: &BigRational, t: &BigRational) -> Option<BigRational> {
        let d = self.den.eval(q, t);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(q, t) / d)
        }
    }

    /// Rational constant value, if the element does not involve q or t.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.num.is_constant() && self.den.is_constant() {
            let n = self.num.coeff(0, 0);
            let d = self.den.coeff(0, 0);
            Some(BigRational::new(n, d))
        } else {
            None
        }
    }

    pub fn parse(s: &str) -> Result<Self, CoeffError> {
        parse::parse::<RatQT>(s)
    }
}

/// Removes the gcd of `a` and `b` from both.
fn cancel(a: &ZPoly, b: &ZPoly) -> (ZPoly, ZPoly) {
    if b.is_one() || a.is_one() {
        return (a.clone(), b.clone());
    }
    let g = a.gcd(b);
    if g.is_one() {
        (a.clone(), b.clone())
    } else {
        (a.div_exact(&g).unwrap(), b.div_exact(&g).unwrap())
    }
}

impl ParseRing for RatQT {
    fn from_int(n: BigInt) -> Self {
        RatQT::from_bigint(n)
    }
    fn var(name: &str) -> Option<Self> {
        match name {
            "q" => Some(RatQT::q()),
            "t" => Some(RatQT::t()),
            _ => None,
        }
    }
    fn add(&self, o: &Self) -> Self {
        RatQT::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        RatQT::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        RatQT::mul(self, o)
    }
    fn div(&self, o: &Self) -> Option<Self> {
        RatQT::div(self, o).ok()
    }
    fn pow(&self, n: i64) -> Option<Self> {
        if n < 0 && self.is_zero() {
            None
        } else {
            Some(RatQT::pow(self, n as i32))
        }
    }
}

impl fmt::Display for RatQT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if self.num.is_monomial() {
            write!(f, "{}", self.num)?;
        } else {
            write!(f, "({})", self.num)?;
        }
        if self.den.is_monomial() {
            write!(f, "/{}", self.den)
        } else {
            write!(f, "/({})", self.den)
        }
    }
}

impl FromStr for RatQT {
    type Err = CoeffError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        RatQT::parse(s)
    }
}

macro_rules! forward_ops {
    ($t:ty) => {
        impl std::ops::Add for &$t {
            type Output = $t;
            fn add(self, o: &$t) -> $t {
                <$t>::add(self, o)
            }
        }
        impl std::ops::Sub for &$t {
            type Output = $t;
            fn sub(self, o: &$t) -> $t {
                <$t>::sub(self, o)
            }
        }
        impl std::ops::Mul for &$t {
            type Output = $t;
            fn mul(self, o: &$t) -> $t {
                <$t>::mul(self, o)
            }
        }
        impl std::ops::Neg for &$t {
            type Output = $t;
            fn neg(self) -> $t {
                <$t>::neg(self)
            }
        }
    };
}
pub(crate) use forward_ops;

forward_ops!(RatQT);
