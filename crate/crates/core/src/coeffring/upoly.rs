//! Dense univariate and recursive bivariate integer polynomials, used only as scratch
//! space for gcd computations.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense polynomial over Z, index = exponent, no trailing zeros.
pub(crate) type UPoly = Vec<BigInt>;
/// Polynomial in a main variable whose coefficients are `UPoly`s.
pub(crate) type BPoly = Vec<UPoly>;

pub(crate) fn trim(a: &mut UPoly) {
    while matches!(a.last(), Some(c) if c.is_zero()) {
        a.pop();
    }
}

fn trim_b(a: &mut BPoly) {
    while matches!(a.last(), Some(c) if c.is_empty()) {
        a.pop();
    }
}

pub(crate) fn content(a: &UPoly) -> BigInt {
    let mut g = BigInt::zero();
    for c in a {
        if !c.is_zero() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
    }
    g
}

fn scale(a: &UPoly, c: &BigInt) -> UPoly {
    if c.is_zero() {
        return Vec::new();
    }
    a.iter().map(|x| x * c).collect()
}

fn div_int(a: &UPoly, c: &BigInt) -> UPoly {
    a.iter().map(|x| x / c).collect()
}

fn sub_assign(a: &mut UPoly, b: &UPoly) {
    if a.len() < b.len() {
        a.resize(b.len(), BigInt::zero());
    }
    for (x, y) in a.iter_mut().zip(b) {
        *x -= y;
    }
    trim(a);
}

fn mul(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

/// Exact division in Z[x]; `None` if `b` does not divide `a`.
fn exact_div(a: &UPoly, b: &UPoly) -> Option<UPoly> {
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let mut r = a.clone();
    let lb = b.last().unwrap();
    let mut q = vec![BigInt::zero(); a.len() - b.len() + 1];
    while r.len() >= b.len() && !r.is_empty() {
        let (c, rem) = r.last().unwrap().div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        let s = r.len() - b.len();
        for (j, y) in b.iter().enumerate() {
            r[s + j] -= &c * y;
        }
        q[s] = c;
        trim(&mut r);
    }
    if r.is_empty() {
        trim(&mut q);
        Some(q)
    } else {
        None
    }
}

fn prem(a: &UPoly, b: &UPoly) -> UPoly {
    let mut r = a.clone();
    let lb = b.last().unwrap().clone();
    while r.len() >= b.len() && !r.is_empty() {
        let lr = r.last().unwrap().clone();
        let s = r.len() - b.len();
        r = scale(&r, &lb);
        for (j, y) in b.iter().enumerate() {
            r[s + j] -= &lr * y;
        }
        trim(&mut r);
    }
    r
}

fn primitive(a: &UPoly) -> UPoly {
    let c = content(a);
    let mut p = if c.is_one() { a.clone() } else { div_int(a, &c) };
    if matches!(p.last(), Some(l) if l.is_negative()) {
        for x in p.iter_mut() {
            *x = -&*x;
        }
    }
    p
}

/// Gcd in Z[x] with positive leading coefficient.
pub(crate) fn gcd(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() {
        return primitive_keep_content(b);
    }
    if b.is_empty() {
        return primitive_keep_content(a);
    }
    let c = content(a).gcd(&content(b));
    let (mut x, mut y) = (primitive(a), primitive(b));
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        if y.len() == 1 {
            x = vec![BigInt::one()];
            break;
        }
        let r = prem(&x, &y);
        x = y;
        y = if r.is_empty() { r } else { primitive(&r) };
    }
    scale(&primitive(&x), &c)
}

fn primitive_keep_content(a: &UPoly) -> UPoly {
    let mut p = a.clone();
    if matches!(p.last(), Some(l) if l.is_negative()) {
        for x in p.iter_mut() {
            *x = -&*x;
        }
    }
    p
}

fn b_content(a: &BPoly) -> UPoly {
    let mut g: UPoly = Vec::new();
    for c in a {
        if c.is_empty() {
            continue;
        }
        g = gcd(&g, c);
        if g.len() == 1 && g[0].is_one() {
            break;
        }
    }
    g
}

fn b_div_u(a: &BPoly, c: &UPoly) -> BPoly {
    if c.len() == 1 && c[0].is_one() {
        return a.clone();
    }
    a.iter()
        .map(|x| exact_div(x, c).expect("content divides every coefficient"))
        .collect()
}

fn b_prem(a: &BPoly, b: &BPoly) -> BPoly {
    let mut r = a.clone();
    let lb = b.last().unwrap().clone();
    while r.len() >= b.len() && !r.is_empty() {
        let lr = r.last().unwrap().clone();
        let s = r.len() - b.len();
        for x in r.iter_mut() {
            *x = mul(x, &lb);
        }
        for (j, y) in b.iter().enumerate() {
            let p = mul(&lr, y);
            sub_assign(&mut r[s + j], &p);
        }
        trim_b(&mut r);
    }
    r
}

fn b_primitive(a: &BPoly) -> BPoly {
    let c = b_content(a);
    let mut p = b_div_u(a, &c);
    if let Some(l) = p.last() {
        if matches!(l.last(), Some(x) if x.is_negative()) {
            for u in p.iter_mut() {
                for x in u.iter_mut() {
                    *x = -&*x;
                }
            }
        }
    }
    p
}

/// Gcd in Z[y][x] (x is the main variable).
pub(crate) fn b_gcd(a: &BPoly, b: &BPoly) -> BPoly {
    let ca = b_content(a);
    let cb = b_content(b);
    let c = gcd(&ca, &cb);
    let (mut x, mut y) = (b_div_u(a, &ca), b_div_u(b, &cb));
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        if y.len() == 1 {
            x = vec![vec![BigInt::one()]];
            break;
        }
        let r = b_prem(&x, &y);
        x = y;
        y = if r.is_empty() { r } else { b_primitive(&r) };
    }
    let x = b_primitive(&x);
    x.iter().map(|u| mul(u, &c)).collect()
}
