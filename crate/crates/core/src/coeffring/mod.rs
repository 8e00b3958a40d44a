//! Coefficient rings: Q(q,t) for the polynomial representation and Q[q,h] for PBW expansions.

mod parse;
mod polyqh;
mod ratqt;
mod upoly;
mod zpoly;

pub use polyqh::PolyQH;
pub use ratqt::RatQT;
pub use zpoly::ZPoly;

use std::fmt;

/// A valuation: a finite integer or +∞ (the order of zero).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Order {
    Fin(i64),
    Inf,
}

impl Order {
    pub fn is_inf(self) -> bool {
        self == Order::Inf
    }

    pub fn finite(self) -> Option<i64> {
        match self {
            Order::Fin(n) => Some(n),
            Order::Inf => None,
        }
    }
}

impl std::ops::Add for Order {
    type Output = Order;
    fn add(self, o: Order) -> Order {
        match (self, o) {
            (Order::Fin(a), Order::Fin(b)) => Order::Fin(a + b),
            _ => Order::Inf,
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Fin(n) => write!(f, "{}", n),
            Order::Inf => write!(f, "inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoeffError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error: {0}")]
    Parse(String),
}

/// Arithmetic selector for [`ratqt_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn ratqt_arith(a: &RatQT, b: &RatQT, op: ArithOp) -> Result<RatQT, CoeffError> {
    match op {
        ArithOp::Add => Ok(a.add(b)),
        ArithOp::Sub => Ok(a.sub(b)),
        ArithOp::Mul => Ok(a.mul(b)),
        ArithOp::Div => a.div(b),
    }
}

pub fn t_order(a: &RatQT) -> Order {
    a.t_order()
}

pub fn h_order(a: &PolyQH) -> Order {
    a.h_order()
}

#[cfg(test)]
mod tests;
