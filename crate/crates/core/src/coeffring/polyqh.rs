//! The ring Q[q,h] of PBW coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::parse::{self, ParseRing};
use super::{CoeffError, Order};

/// Polynomial in q and h with rational coefficients; keys are (q exponent, h exponent).
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, PartialOrd, Ord)]
pub struct PolyQH {
    terms: BTreeMap<(u32, u32), BigRational>,
}

impl PolyQH {
    pub fn zero() -> Self {
        PolyQH { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(BigRational::one(), 0, 0)
    }

    pub fn from_int(n: i64) -> Self {
        Self::monomial(BigRational::from_integer(BigInt::from(n)), 0, 0)
    }

    pub fn monomial(c: BigRational, qe: u32, he: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((qe, he), c);
        }
        PolyQH { terms }
    }

    /// c q^qe h^he with an integer coefficient.
    pub fn term(c: i64, qe: u32, he: u32) -> Self {
        Self::monomial(BigRational::from_integer(BigInt::from(c)), qe, he)
    }

    pub fn q() -> Self {
        Self::term(1, 1, 0)
    }

    pub fn h() -> Self {
        Self::term(1, 0, 1)
    }

    pub fn terms(&self) -> &BTreeMap<(u32, u32), BigRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(|c| c.is_one())
    }

    pub fn coeff(&self, qe: u32, he: u32) -> BigRational {
        self.terms.get(&(qe, he)).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_assign(&mut self, o: &Self) {
        for (k, c) in &o.terms {
            add_into(&mut self.terms, *k, c.clone());
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        r.add_assign(o);
        r
    }

    pub fn neg(&self) -> Self {
        PolyQH { terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut terms = BTreeMap::new();
        for ((a, b), c) in &self.terms {
            for ((d, e), f) in &o.terms {
                add_into(&mut terms, (a + d, b + e), c * f);
            }
        }
        PolyQH { terms }
    }

    /// Multiplies by c q^qe h^he.
    pub fn mul_monomial(&self, c: &BigRational, qe: u32, he: u32) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        PolyQH { terms: self.terms.iter().map(|((a, b), d)| ((a + qe, b + he), d * c)).collect() }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut r = Self::one();
        for _ in 0..n {
            r = r.mul(self);
        }
        r
    }

    /// Valuation at h = 0.
    pub fn h_order(&self) -> Order {
        match self.terms.keys().map(|k| k.1).min() {
            None => Order::Inf,
            Some(m) => Order::Fin(m as i64),
        }
    }

    /// Part of h-degree exactly `d`, as a polynomial in q times h^d.
    pub fn h_component(&self, d: u32) -> Self {
        PolyQH { terms: self.terms.iter().filter(|(k, _)| k.1 == d).map(|(k, c)| (*k, c.clone())).collect() }
    }

    /// Reduction modulo h.
    pub fn mod_h(&self) -> Self {
        self.h_component(0)
    }

    /// Substitution q -> 1/q, h -> -h, multiplied by q^shift (which must clear denominators).
    pub fn bar(&self, shift: u32) -> Self {
        let mut terms = BTreeMap::new();
        for ((a, b), c) in &self.terms {
            assert!(*a <= shift, "q-shift too small for bar involution");
            let c = if b % 2 == 1 { -c } else { c.clone() };
            add_into(&mut terms, (shift - a, *b), c);
        }
        PolyQH { terms }
    }

    pub fn parse(s: &str) -> Result<Self, CoeffError> {
        parse::parse::<PolyQH>(s)
    }
}

fn add_into(m: &mut BTreeMap<(u32, u32), BigRational>, k: (u32, u32), c: BigRational) {
    use std::collections::btree_map::Entry;
    if c.is_zero() {
        return;
    }
    match m.entry(k) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

impl ParseRing for PolyQH {
    fn from_int(n: BigInt) -> Self {
        PolyQH::monomial(BigRational::from_integer(n), 0, 0)
    }
    fn var(name: &str) -> Option<Self> {
        match name {
            "q" => Some(PolyQH::q()),
            "h" => Some(PolyQH::h()),
            _ => None,
        }
    }
    fn add(&self, o: &Self) -> Self {
        PolyQH::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        PolyQH::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        PolyQH::mul(self, o)
    }
    fn div(&self, o: &Self) -> Option<Self> {
        // only division by nonzero rational constants
        if o.terms.len() == 1 {
            if let Some(c) = o.terms.get(&(0, 0)) {
                return Some(self.mul_monomial(&c.recip(), 0, 0));
            }
        }
        None
    }
    fn pow(&self, n: i64) -> Option<Self> {
        if n < 0 {
            None
        } else {
            Some(PolyQH::pow(self, n as u32))
        }
    }
}

impl fmt::Display for PolyQH {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<_> = self.terms.keys().copied().collect();
        keys.sort_by_key(|&(a, b)| (b, a));
        for (n, k) in keys.iter().enumerate() {
            let c = &self.terms[k];
            let neg = c.is_negative();
            if n == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let abs = c.abs();
            let mut parts: Vec<String> = Vec::new();
            if !abs.is_one() || *k == (0, 0) {
                parts.push(abs.to_string());
            }
            for (v, e) in [("q", k.0), ("h", k.1)] {
                match e {
                    0 => {}
                    1 => parts.push(v.to_string()),
                    _ => parts.push(format!("{}^{}", v, e)),
                }
            }
            write!(f, "{}", parts.join("·"))?;
        }
        Ok(())
    }
}

impl FromStr for PolyQH {
    type Err = CoeffError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        PolyQH::parse(s)
    }
}

super::ratqt::forward_ops!(PolyQH);
