//! Sparse Laurent polynomials in x_1..x_k over Q(q,t).

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use crate::coeffring::{Order, RatQT};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("index {0} out of range for rank {1}")]
    Index(usize, usize),
    #[error("negative exponent in the last variable")]
    NegativeExponent,
}

/// Exponent vector of a monomial.
pub type Exps = Vec<i32>;

/// Element of Q(q,t)[x_1^±1, …, x_k^±1].
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LaurentPoly {
    rank: usize,
    terms: BTreeMap<Exps, RatQT>,
}

impl LaurentPoly {
    pub fn zero(rank: usize) -> Self {
        LaurentPoly { rank, terms: BTreeMap::new() }
    }

    pub fn one(rank: usize) -> Self {
        Self::constant(rank, RatQT::one())
    }

    pub fn constant(rank: usize, c: RatQT) -> Self {
        Self::monomial(vec![0; rank], c)
    }

    pub fn monomial(exps: Exps, c: RatQT) -> Self {
        let rank = exps.len();
        let mut p = Self::zero(rank);
        p.add_term(exps, c);
        p
    }

    /// The variable x_i (1-based).
    pub fn var(i: usize, rank: usize) -> Self {
        let mut e = vec![0; rank];
        e[i - 1] = 1;
        Self::monomial(e, RatQT::one())
    }

    /// x^λ for a weight λ.
    pub fn x_pow(lam: &[i64]) -> Self {
        Self::monomial(lam.iter().map(|&a| a as i32).collect(), RatQT::one())
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn terms(&self) -> &BTreeMap<Exps, RatQT> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Exps, RatQT> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &[i32]) -> RatQT {
        self.terms.get(e).cloned().unwrap_or_else(RatQT::zero)
    }

    /// True when no exponent is negative.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&a| a >= 0))
    }

    pub fn add_term(&mut self, exps: Exps, c: RatQT) {
        debug_assert_eq!(exps.len(), self.rank);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add_assign(&mut self, o: &Self) {
        assert_eq!(self.rank, o.rank, "rank mismatch");
        for (e, c) in &o.terms {
            self.add_term(e.clone(), c.clone());
        }
    }

    /// self += c · o
    pub fn add_scaled(&mut self, o: &Self, c: &RatQT) {
        assert_eq!(self.rank, o.rank, "rank mismatch");
        if c.is_zero() {
            return;
        }
        for (e, d) in &o.terms {
            self.add_term(e.clone(), d.mul(c));
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        r.add_assign(o);
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut r = self.clone();
        r.add_scaled(o, &RatQT::from_int(-1));
        r
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| c.neg())
    }

    pub fn scale(&self, c: &RatQT) -> Self {
        if c.is_zero() {
            return Self::zero(self.rank);
        }
        self.map_coeffs(|d| d.mul(c))
    }

    pub fn map_coeffs<F: Fn(&RatQT) -> RatQT>(&self, f: F) -> Self {
        let mut r = Self::zero(self.rank);
        for (e, c) in &self.terms {
            let d = f(c);
            if !d.is_zero() {
                r.terms.insert(e.clone(), d);
            }
        }
        r
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.rank, o.rank, "rank mismatch");
        let mut r = Self::zero(self.rank);
        for (e, c) in &self.terms {
            for (f, d) in &o.terms {
                let g: Exps = e.iter().zip(f).map(|(a, b)| a + b).collect();
                r.add_term(g, c.mul(d));
            }
        }
        r
    }

    /// Multiplication by the monomial x^shift.
    pub fn shift(&self, shift: &[i32]) -> Self {
        let mut r = Self::zero(self.rank);
        for (e, c) in &self.terms {
            r.terms.insert(e.iter().zip(shift).map(|(a, b)| a + b).collect(), c.clone());
        }
        r
    }

    /// Multiplication by x_i (1-based).
    pub fn mul_var(&self, i: usize) -> Self {
        let mut s = vec![0; self.rank];
        s[i - 1] = 1;
        self.shift(&s)
    }

    pub fn try_arith(&self, o: &Self, op: PolyOp) -> Result<Self, PolyError> {
        if self.rank != o.rank {
            return Err(PolyError::RankMismatch(self.rank, o.rank));
        }
        Ok(match op {
            PolyOp::Add => self.add(o),
            PolyOp::Sub => self.sub(o),
            PolyOp::Mul => self.mul(o),
        })
    }

    /// Applies an exponent map and coefficient weight to every monomial.
    pub fn map_monomials<F: Fn(&[i32]) -> (Exps, RatQT)>(&self, rank: usize, f: F) -> Self {
        let mut r = Self::zero(rank);
        for (e, c) in &self.terms {
            let (g, w) = f(e);
            r.add_term(g, if w.is_one() { c.clone() } else { c.mul(&w) });
        }
        r
    }

    /// s_i f: exchange x_i and x_{i+1}.
    pub fn swap(&self, i: usize) -> Result<Self, PolyError> {
        if i == 0 || i >= self.rank {
            return Err(PolyError::Index(i, self.rank));
        }
        let mut r = Self::zero(self.rank);
        for (e, c) in &self.terms {
            let mut g = e.clone();
            g.swap(i - 1, i);
            r.terms.insert(g, c.clone());
        }
        Ok(r)
    }

    /// Permutes variables: x_j ↦ x_{w(j)}.
    pub fn permute(&self, w: &crate::weyl::Perm) -> Self {
        let mut r = Self::zero(self.rank);
        for (e, c) in &self.terms {
            r.terms.insert(w.act(e), c.clone());
        }
        r
    }

    /// π_k: set x_k = 0 and drop to rank k − 1.
    pub fn evaluate_at_zero_last(&self) -> Result<Self, PolyError> {
        let k = self.rank;
        if k == 0 {
            return Err(PolyError::Index(0, 0));
        }
        let mut r = Self::zero(k - 1);
        for (e, c) in &self.terms {
            match e[k - 1] {
                x if x < 0 => return Err(PolyError::NegativeExponent),
                0 => {
                    r.terms.insert(e[..k - 1].to_vec(), c.clone());
                }
                _ => {}
            }
        }
        Ok(r)
    }

    /// Embeds into a larger rank by appending variables that do not occur.
    pub fn extend_rank(&self, n: usize) -> Self {
        assert!(n >= self.rank);
        let mut r = Self::zero(n);
        for (e, c) in &self.terms {
            let mut g = e.clone();
            g.resize(n, 0);
            r.terms.insert(g, c.clone());
        }
        r
    }

    /// Minimal t-order over all coefficients.
    pub fn min_t_order(&self) -> Order {
        self.terms.values().map(|c| c.t_order()).min().unwrap_or(Order::Inf)
    }

    /// Total degree of every term if homogeneous.
    pub fn homogeneous_degree(&self) -> Option<i32> {
        let mut it = self.terms.keys().map(|e| e.iter().sum::<i32>());
        let d = it.next()?;
        it.all(|x| x == d).then_some(d)
    }

    /// Terms in graded lexicographic order (highest first).
    pub fn graded_terms(&self) -> Vec<(&Exps, &RatQT)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| {
            let da: i32 = a.0.iter().sum();
            let db: i32 = b.0.iter().sum();
            db.cmp(&da).then_with(|| b.0.cmp(a.0))
        });
        v
    }
}

/// Ring operation selector for [`LaurentPoly::try_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

/// Renders a coefficient as a product factor.
pub fn coeff_factor(c: &RatQT) -> (bool, String) {
    let neg = c.numer().is_monomial() && c.numer().leading_coeff().is_some_and(|x| x.sign() == num_bigint::Sign::Minus);
    let body = if neg { c.neg() } else { c.clone() };
    let s = body.to_string();
    let simple = body.denom().is_one() && body.numer().is_monomial();
    (neg, if simple { s } else { format!("({})", s) })
}

/// Renders x1^a1*…; empty string for the constant monomial.
pub fn monomial_string(e: &[i32], offset: usize) -> String {
    let mut parts = Vec::new();
    for (i, &a) in e.iter().enumerate() {
        match a {
            0 => {}
            1 => parts.push(format!("x{}", i + 1 + offset)),
            _ => parts.push(format!("x{}^{}", i + 1 + offset, a)),
        }
    }
    parts.join("*")
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (e, c)) in self.graded_terms().into_iter().enumerate() {
            let (neg, cs) = coeff_factor(c);
            let m = monomial_string(e, 0);
            if n == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            match (cs.as_str(), m.is_empty()) {
                ("1", true) => write!(f, "1")?,
                ("1", false) => write!(f, "{}", m)?,
                (_, true) => write!(f, "{}", cs)?,
                (_, false) => write!(f, "{}*{}", cs, m)?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn x(i: usize, k: usize) -> LaurentPoly {
        LaurentPoly::var(i, k)
    }

    #[test]
    fn arith_examples() {
        assert_eq!(x(1, 2).mul(&x(2, 2)), LaurentPoly::x_pow(&[1, 1]));
        assert_eq!(x(1, 2).add(&x(2, 2)).sub(&x(2, 2)), x(1, 2));
        let lhs = x(1, 2).add(&x(2, 2)).mul(&x(1, 2).sub(&x(2, 2)));
        assert_eq!(lhs, LaurentPoly::x_pow(&[2, 0]).sub(&LaurentPoly::x_pow(&[0, 2])));
        assert!(x(1, 2).try_arith(&x(1, 3), PolyOp::Add).is_err());
    }

    #[test]
    fn swap_examples() {
        assert_eq!(x(1, 2).swap(1).unwrap(), x(2, 2));
        assert_eq!(LaurentPoly::x_pow(&[1, 1]).swap(1).unwrap(), LaurentPoly::x_pow(&[1, 1]));
        assert_eq!(LaurentPoly::x_pow(&[0, 0, 2]).swap(2).unwrap(), LaurentPoly::x_pow(&[0, 2, 0]));
        assert!(x(1, 2).swap(2).is_err());
    }

    #[test]
    fn pi_examples() {
        assert_eq!(x(1, 2).add(&x(2, 2)).evaluate_at_zero_last().unwrap(), x(1, 1));
        assert!(LaurentPoly::x_pow(&[1, 1]).evaluate_at_zero_last().unwrap().is_zero());
        let f = x(1, 3).add(&LaurentPoly::x_pow(&[0, 0, 2]));
        assert_eq!(f.evaluate_at_zero_last().unwrap(), x(1, 2));
        assert!(LaurentPoly::x_pow(&[0, -1]).evaluate_at_zero_last().is_err());
    }

    #[test]
    fn display_is_graded_lex() {
        let f = x(2, 2).add(&LaurentPoly::x_pow(&[2, 0]).scale(&RatQT::parse("1-t").unwrap()));
        assert_eq!(f.to_string(), "(1 - t)*x1^2 + x2");
        assert_eq!(LaurentPoly::one(2).neg().to_string(), "-1");
    }

    fn small_poly(k: usize) -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((prop::collection::vec(-1i32..3, k), -3i64..4, 0i32..2), 0..5).prop_map(move |v| {
            let mut p = LaurentPoly::zero(k);
            for (e, c, te) in v {
                p.add_term(e, RatQT::monomial(c, 0, te));
            }
            p
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn ring_axioms(a in small_poly(3), b in small_poly(3), c in small_poly(3)) {
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.add(&b).sub(&b), a);
        }

        #[test]
        fn degree_additive(a in small_poly(2), b in small_poly(2)) {
            if let (Some(da), Some(db)) = (a.homogeneous_degree(), b.homogeneous_degree()) {
                let p = a.mul(&b);
                if !p.is_zero() {
                    prop_assert_eq!(p.homogeneous_degree(), Some(da + db));
                }
            }
        }

        #[test]
        fn swaps_are_involutive_and_braid(a in small_poly(3)) {
            prop_assert_eq!(a.swap(1).unwrap().swap(1).unwrap(), a.clone());
            let l = a.swap(1).unwrap().swap(2).unwrap().swap(1).unwrap();
            let r = a.swap(2).unwrap().swap(1).unwrap().swap(2).unwrap();
            prop_assert_eq!(l, r);
        }
    }
}
