use super::*;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn r(s: &str) -> RatQT {
    RatQT::parse(s).unwrap()
}

#[test]
fn arith_examples() {
    let a = r("1/(1-t)");
    let b = r("t/(1-t)");
    assert_eq!(a.add(&b), r("(1+t)/(1-t)"));
    assert_eq!(r("q*t").mul(&r("1/q")), r("t"));
    assert_eq!(r("(1-t^2)/(1-t)"), r("1+t"));
    assert_eq!(r("(1-t^2)/(1-t)").to_string(), "1 + t");
    assert!(matches!(ratqt_arith(&a, &RatQT::zero(), ArithOp::Div), Err(CoeffError::DivisionByZero)));
}

#[test]
fn canonical_sign() {
    let x = r("1/(t-1)");
    let y = r("-1/(1-t)");
    assert_eq!(x, y);
    assert!(x.denom().leading_coeff().unwrap() > &BigInt::from(0));
}

#[test]
fn t_order_examples() {
    assert_eq!(r("t^2/(1+t)").t_order(), Order::Fin(2));
    assert_eq!(r("1/(1-t)").t_order(), Order::Fin(0));
    assert_eq!(r("(t^3-t^5)/(q*t)").t_order(), Order::Fin(2));
    assert_eq!(RatQT::zero().t_order(), Order::Inf);
}

#[test]
fn h_order_examples() {
    assert_eq!(PolyQH::parse("q + h^2").unwrap().h_order(), Order::Fin(0));
    assert_eq!(PolyQH::parse("q*h^3 + h^5").unwrap().h_order(), Order::Fin(3));
    assert_eq!(PolyQH::zero().h_order(), Order::Inf);
}

#[test]
fn polyqh_display() {
    let p = PolyQH::parse("q + q*h").unwrap();
    assert_eq!(p.to_string(), "q + q·h");
    assert_eq!(PolyQH::parse("-2*q*h^2").unwrap().to_string(), "-2·q·h^2");
}

#[test]
fn display_round_trip() {
    for s in ["(1-t)*q/(q-t)", "q^-1*t^2", "(1+q*t)/(1-q^2*t^3)", "-3/7", "0"] {
        let v = r(s);
        assert_eq!(r(&v.to_string()), v, "{}", s);
    }
}

#[test]
fn gcd_bivariate() {
    let a = r("(1-q*t)*(q-t^2)*(1+t)").numer().clone();
    let b = r("(1-q*t)*(q+t)*(q-t^2)").numer().clone();
    let g = a.gcd(&b);
    assert_eq!(g, r("(1-q*t)*(q-t^2)").numer().clone().normalize_sign());
}

fn small_poly() -> impl Strategy<Value = ZPoly> {
    prop::collection::vec((0u32..3, 0u32..3, -3i64..4), 0..4)
        .prop_map(|v| ZPoly::from_terms(v.into_iter().map(|(a, b, c)| (a, b, BigInt::from(c)))))
}

fn small_rat() -> impl Strategy<Value = RatQT> {
    (small_poly(), small_poly()).prop_filter_map("zero denominator", |(n, d)| RatQT::new(n, d).ok())
}

fn pt() -> (BigRational, BigRational) {
    (BigRational::new(3.into(), 7.into()), BigRational::new((-5).into(), 11.into()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn field_ops_match_evaluation(a in small_rat(), b in small_rat()) {
        let (q, t) = pt();
        let (Some(ea), Some(eb)) = (a.eval(&q, &t), b.eval(&q, &t)) else { return Ok(()); };
        prop_assert_eq!(a.add(&b).eval(&q, &t).unwrap(), &ea + &eb);
        prop_assert_eq!(a.mul(&b).eval(&q, &t).unwrap(), &ea * &eb);
        if !b.is_zero() && eb != BigRational::from_integer(0.into()) {
            prop_assert_eq!(a.div(&b).unwrap().eval(&q, &t).unwrap(), &ea / &eb);
        }
    }

    #[test]
    fn canonical_uniqueness(a in small_rat(), b in small_rat(), c in small_rat()) {
        prop_assert_eq!(a.add(&b).sub(&b), a.clone());
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        if !b.is_zero() {
            prop_assert_eq!(a.mul(&b).div(&b).unwrap(), a);
        }
    }

    #[test]
    fn t_order_is_a_valuation(a in small_rat(), b in small_rat()) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        prop_assert_eq!(a.mul(&b).t_order(), a.t_order() + b.t_order());
        prop_assert!(a.add(&b).t_order() >= a.t_order().min(b.t_order()));
    }

    #[test]
    fn gcd_divides_and_is_maximal(a in small_poly(), b in small_poly(), c in small_poly()) {
        prop_assume!(!c.is_zero() && !(a.is_zero() && b.is_zero()));
        let g = a.gcd(&b);
        prop_assert!(a.div_exact(&g).is_some());
        prop_assert!(b.div_exact(&g).is_some());
        let gc = a.mul(&c).gcd(&b.mul(&c));
        prop_assert_eq!(gc, g.mul(&c).normalize_sign());
    }

    #[test]
    fn h_order_is_additive(a in prop::collection::vec((0u32..3, 0u32..4, -3i64..4), 1..4),
                           b in prop::collection::vec((0u32..3, 0u32..4, -3i64..4), 1..4)) {
        let mk = |v: Vec<(u32, u32, i64)>| v.into_iter().fold(PolyQH::zero(), |acc, (x, y, c)| acc.add(&PolyQH::term(c, x, y)));
        let (a, b) = (mk(a), mk(b));
        prop_assume!(!a.is_zero() && !b.is_zero());
        prop_assert_eq!(a.mul(&b).h_order(), a.h_order() + b.h_order());
    }
}
