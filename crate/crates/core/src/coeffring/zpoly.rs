//! Sparse polynomials in Z[q,t].

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::upoly::{self, BPoly};

/// Polynomial in q and t with integer coefficients.
///
/// Terms are `(q exponent, t exponent, coefficient)`, sorted strictly decreasing in
/// lexicographic order with q before t, with no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct ZPoly {
    terms: Vec<(u32, u32, BigInt)>,
}

impl ZPoly {
    pub fn zero() -> Self {
        ZPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: BigInt, qe: u32, te: u32) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            ZPoly { terms: vec![(qe, te, c)] }
        }
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates.
    pub fn from_terms<I: IntoIterator<Item = (u32, u32, BigInt)>>(it: I) -> Self {
        let mut m: BTreeMap<(u32, u32), BigInt> = BTreeMap::new();
        for (a, b, c) in it {
            *m.entry((a, b)).or_insert_with(BigInt::zero) += c;
        }
        let terms = m
            .into_iter()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|((a, b), c)| (a, b, c))
            .collect();
        ZPoly { terms }
    }

    pub fn terms(&self) -> &[(u32, u32, BigInt)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1 == 0 && self.terms[0].2.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1 == 0)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Coefficient of the lexicographically leading term.
    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.terms.first().map(|t| &t.2)
    }

    pub fn coeff(&self, qe: u32, te: u32) -> BigInt {
        self.terms
            .iter()
            .find(|(a, b, _)| *a == qe && *b == te)
            .map(|t| t.2.clone())
            .unwrap_or_else(BigInt::zero)
    }

    /// Minimal t exponent; `None` for the zero polynomial.
    pub fn min_t(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.1).min()
    }

    pub fn min_q(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0).min()
    }

    pub fn deg_t(&self) -> u32 {
        self.terms.iter().map(|t| t.1).max().unwrap_or(0)
    }

    pub fn deg_q(&self) -> u32 {
        self.terms.iter().map(|t| t.0).max().unwrap_or(0)
    }

    pub fn neg(&self) -> Self {
        ZPoly { terms: self.terms.iter().map(|(a, b, c)| (*a, *b, -c)).collect() }
    }

    pub fn add(&self, o: &Self) -> Self {
        self.merge(o, false)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.merge(o, true)
    }

    fn merge(&self, o: &Self, negate: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (mut i, mut j) = (0, 0);
        let (x, y) = (&self.terms, &o.terms);
        while i < x.len() || j < y.len() {
            let ord = if i == x.len() {
                std::cmp::Ordering::Less
            } else if j == y.len() {
                std::cmp::Ordering::Greater
            } else {
                (x[i].0, x[i].1).cmp(&(y[j].0, y[j].1))
            };
            match ord {
                std::cmp::Ordering::Greater => {
                    out.push(x[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    let c = if negate { -&y[j].2 } else { y[j].2.clone() };
                    out.push((y[j].0, y[j].1, c));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate { &x[i].2 - &y[j].2 } else { &x[i].2 + &y[j].2 };
                    if !c.is_zero() {
                        out.push((x[i].0, x[i].1, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        ZPoly { terms: out }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if o.is_monomial() {
            let (a, b, c) = &o.terms[0];
            return self.mul_monomial(c, *a, *b);
        }
        if self.is_monomial() {
            let (a, b, c) = &self.terms[0];
            return o.mul_monomial(c, *a, *b);
        }
        let mut m: HashMap<(u32, u32), BigInt> = HashMap::with_capacity(self.terms.len() * o.terms.len());
        for (a, b, c) in &self.terms {
            for (d, e, f) in &o.terms {
                *m.entry((a + d, b + e)).or_insert_with(BigInt::zero) += c * f;
            }
        }
        let mut terms: Vec<_> = m.into_iter().filter(|(_, c)| !c.is_zero()).map(|((a, b), c)| (a, b, c)).collect();
        terms.sort_unstable_by(|x, y| (y.0, y.1).cmp(&(x.0, x.1)));
        ZPoly { terms }
    }

    pub fn mul_monomial(&self, c: &BigInt, qe: u32, te: u32) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        ZPoly { terms: self.terms.iter().map(|(a, b, d)| (a + qe, b + te, d * c)).collect() }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        self.mul_monomial(c, 0, 0)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Divides every exponent pair by the monomial q^qe t^te (which must divide).
    pub fn unshift(&self, qe: u32, te: u32) -> Self {
        ZPoly { terms: self.terms.iter().map(|(a, b, c)| (a - qe, b - te, c.clone())).collect() }
    }

    pub fn div_int(&self, c: &BigInt) -> Self {
        ZPoly { terms: self.terms.iter().map(|(a, b, d)| (*a, *b, d / c)).collect() }
    }

    /// Positive gcd of the coefficients (zero for the zero polynomial).
    pub fn int_content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, _, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Exact division; `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        if d.is_monomial() {
            let (a, b, c) = &d.terms[0];
            let mut terms = Vec::with_capacity(self.terms.len());
            for (x, y, z) in &self.terms {
                if x < a || y < b {
                    return None;
                }
                let (qq, r) = z.div_rem(c);
                if !r.is_zero() {
                    return None;
                }
                terms.push((x - a, y - b, qq));
            }
            return Some(ZPoly { terms });
        }
        let mut rem: BTreeMap<(u32, u32), BigInt> =
            self.terms.iter().map(|(a, b, c)| ((*a, *b), c.clone())).collect();
        let (da, db, dc) = d.terms[0].clone();
        let mut quot = Vec::new();
        while let Some((&(ra, rb), rc)) = rem.iter().next_back() {
            if ra < da || rb < db {
                return None;
            }
            let (c, r) = rc.div_rem(&dc);
            if !r.is_zero() {
                return None;
            }
            let (ea, eb) = (ra - da, rb - db);
            for (a, b, x) in &d.terms {
                let key = (a + ea, b + eb);
                let e = rem.entry(key).or_insert_with(BigInt::zero);
                *e -= &c * x;
                if e.is_zero() {
                    rem.remove(&key);
                }
            }
            quot.push((ea, eb, c));
        }
        Some(ZPoly { terms: quot })
    }

    /// Normalizes the sign so that the leading coefficient is positive.
    pub fn normalize_sign(self) -> Self {
        match self.leading_coeff() {
            Some(c) if c.is_negative() => self.neg(),
            _ => self,
        }
    }

    /// Gcd with positive leading coefficient; gcd(0, 0) = 0.
    pub fn gcd(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone().normalize_sign();
        }
        if o.is_zero() {
            return self.clone().normalize_sign();
        }
        let (qa, ta) = (self.min_q().unwrap(), self.min_t().unwrap());
        let (qb, tb) = (o.min_q().unwrap(), o.min_t().unwrap());
        let (mq, mt) = (qa.min(qb), ta.min(tb));
        let ca = self.int_content();
        let cb = o.int_content();
        let c = ca.gcd(&cb);
        if self.is_monomial() || o.is_monomial() {
            return Self::monomial(c, mq, mt);
        }
        let a = self.unshift(qa, ta).div_int(&ca);
        let b = o.unshift(qb, tb).div_int(&cb);
        let g = if a == b || a == b.neg() {
            a.normalize_sign()
        } else {
            primitive_gcd(&a, &b)
        };
        g.mul_monomial(&c, mq, mt)
    }

    pub fn eval(&self, q: &BigRational, t: &BigRational) -> BigRational {
        let mut s = BigRational::zero();
        for (a, b, c) in &self.terms {
            s += BigRational::from_integer(c.clone()) * pow_rat(q, *a) * pow_rat(t, *b);
        }
        s
    }

    /// Canonical text form, e.g. `1 - 2*q*t^3`.
    pub fn fmt_with(&self, f: &mut fmt::Formatter<'_>, vars: (&str, &str)) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (a, b, c)) in self.iter_display_order().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if n == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let mut parts: Vec<String> = Vec::new();
            if !abs.is_one() || (a == 0 && b == 0) {
                parts.push(abs.to_string());
            }
            for (v, e) in [(vars.0, a), (vars.1, b)] {
                match e {
                    0 => {}
                    1 => parts.push(v.to_string()),
                    _ => parts.push(format!("{}^{}", v, e)),
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }

    /// Terms in increasing total degree, then increasing lexicographic order.
    fn iter_display_order(&self) -> impl Iterator<Item = (u32, u32, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().map(|(a, b, c)| (*a, *b, c)).collect();
        v.sort_by(|x, y| (x.0 + x.1, x.0, x.1).cmp(&(y.0 + y.1, y.0, y.1)));
        v.into_iter()
    }

    fn to_bpoly(&self) -> BPoly {
        let dt = self.deg_t() as usize;
        let dq = self.deg_q() as usize;
        let mut out: BPoly = vec![vec![BigInt::zero(); dq + 1]; dt + 1];
        for (a, b, c) in &self.terms {
            out[*b as usize][*a as usize] = c.clone();
        }
        for u in out.iter_mut() {
            upoly::trim(u);
        }
        out
    }

    fn from_bpoly(b: &BPoly) -> Self {
        let mut terms = Vec::new();
        for (te, u) in b.iter().enumerate() {
            for (qe, c) in u.iter().enumerate() {
                if !c.is_zero() {
                    terms.push((qe as u32, te as u32, c.clone()));
                }
            }
        }
        terms.sort_unstable_by(|x, y| (y.0, y.1).cmp(&(x.0, x.1)));
        ZPoly { terms }
    }
}

fn pow_rat(x: &BigRational, e: u32) -> BigRational {
    let mut r = BigRational::one();
    for _ in 0..e {
        r *= x;
    }
    r
}

/// Gcd of two integer-primitive polynomials with no monomial factor.
fn primitive_gcd(a: &ZPoly, b: &ZPoly) -> ZPoly {
    if a.deg_t() == 0 || b.deg_t() == 0 {
        // one side lies in Z[q]: the gcd is the gcd of Z[q]-contents
        let ua = a.to_bpoly();
        let ub = b.to_bpoly();
        let mut g: Vec<BigInt> = Vec::new();
        for u in ua.iter().chain(ub.iter()) {
            if !u.is_empty() {
                g = upoly::gcd(&g, u);
            }
        }
        return ZPoly::from_bpoly(&vec![g]).normalize_sign();
    }
    let g = upoly::b_gcd(&a.to_bpoly(), &b.to_bpoly());
    ZPoly::from_bpoly(&g).normalize_sign()
}

impl fmt::Display for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with(f, ("q", "t"))
    }
}
