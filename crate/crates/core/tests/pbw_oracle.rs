//! The PBW expansion agrees with the word acting on the polynomial representation, with
//! T = t^{-1/2} T_i and h = t^{-1/2} − t^{1/2}, evaluated at q = 3, t = 4.

use std::collections::BTreeMap;

use macdaha::coeffring::PolyQH;
use macdaha::daharep::{apply_T, apply_T_inv, apply_X, apply_Y};
use macdaha::pbw::{Engine, GenWord, Letter, PbwElem};
use macdaha::polyring::LaurentPoly;
use num_rational::BigRational;
use proptest::prelude::*;

type Numeric = BTreeMap<Vec<i32>, BigRational>;

fn r(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn q() -> BigRational {
    r(3, 1)
}

fn t() -> BigRational {
    r(4, 1)
}

fn half_t() -> BigRational {
    r(2, 1)
}

fn eval_poly(f: &LaurentPoly, scale: &BigRational) -> Numeric {
    let mut out = Numeric::new();
    for (e, c) in f.terms() {
        let v = c.eval(&q(), &t()).unwrap() * scale;
        if v != r(0, 1) {
            out.insert(e.clone(), v);
        }
    }
    out
}

fn eval_qh(c: &PolyQH) -> BigRational {
    let h = r(1, 2) - half_t();
    let mut s = r(0, 1);
    for (&(a, b), v) in c.terms() {
        s += v * num_traits::pow(q(), a as usize) * num_traits::pow(h.clone(), b as usize);
    }
    s
}

fn apply_letter(l: Letter, f: &LaurentPoly, scale: &mut BigRational) -> LaurentPoly {
    match l {
        Letter::X(i) => apply_X(i, f, 1).unwrap(),
        Letter::Y(i) => apply_Y(i, f).unwrap(),
        Letter::T(i) => {
            *scale /= half_t();
            apply_T(i, f).unwrap()
        }
        Letter::Tinv(i) => {
            *scale *= half_t();
            apply_T_inv(i, f).unwrap()
        }
    }
}

fn act_word(letters: &[Letter], f: &LaurentPoly) -> Numeric {
    let mut scale = r(1, 1);
    let mut g = f.clone();
    for &l in letters.iter().rev() {
        g = apply_letter(l, &g, &mut scale);
    }
    eval_poly(&g, &scale)
}

fn act_pbw(e: &PbwElem, f: &LaurentPoly) -> Numeric {
    let mut out = Numeric::new();
    for (idx, c) in e.terms() {
        let mut letters = Vec::new();
        for (i, &m) in idx.mu.iter().enumerate() {
            letters.extend(std::iter::repeat(Letter::X(i + 1)).take(m as usize));
        }
        for (i, &m) in idx.nu.iter().enumerate() {
            letters.extend(std::iter::repeat(Letter::Y(i + 1)).take(m as usize));
        }
        letters.extend(idx.w.reduced_word().into_iter().map(Letter::T));
        let cv = eval_qh(c);
        for (m, v) in act_word(&letters, f) {
            *out.entry(m).or_insert_with(|| r(0, 1)) += v * &cv;
        }
    }
    out.retain(|_, v| *v != r(0, 1));
    out
}

fn samples(k: usize) -> Vec<LaurentPoly> {
    let mut out = vec![LaurentPoly::one(k)];
    for i in 1..=k {
        out.push(LaurentPoly::var(i, k));
    }
    let mut e = vec![0; k];
    e[0] = 2;
    e[k - 1] += 1;
    out.push(LaurentPoly::x_pow(&e.iter().map(|&x| x as i64).collect::<Vec<_>>()));
    out
}

fn agrees(k: usize, word: &str) -> bool {
    let w = GenWord::parse(word, k).unwrap();
    let e = Engine::new(k).straighten(&w).unwrap();
    samples(k).iter().all(|f| act_word(&w.letters, f) == act_pbw(&e, f))
}

#[test]
fn basic_words_agree() {
    for (k, w) in [(2, "T1 T1"), (2, "T1^-1"), (2, "T1 X1"), (2, "T1 Y1"), (2, "Y1 X1"), (2, "Y1 X2"), (2, "Y2 X1"), (3, "Y2 X2"), (3, "Y1 X3")] {
        assert!(agrees(k, w), "k={} {}", k, w);
    }
}

fn random_word(k: usize) -> impl Strategy<Value = Vec<Letter>> {
    let letter = prop_oneof![
        (1..=k).prop_map(Letter::X),
        (1..=k).prop_map(Letter::Y),
        (1..k).prop_map(Letter::T),
        (1..k).prop_map(Letter::Tinv),
    ];
    prop::collection::vec(letter, 0..5).prop_filter("degree ≤ 3", |w| w.iter().map(|l| l.degree()).sum::<u32>() <= 3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_words_agree(letters in random_word(3)) {
        let w = GenWord::new(3, letters).unwrap();
        prop_assert!(agrees(3, &w.to_string()) || w.letters.is_empty());
    }
}

#[test]
fn oracle_separates_distinct_elements() {
    let e = Engine::new(2).straighten(&GenWord::parse("X1 Y1", 2).unwrap()).unwrap();
    let w = GenWord::parse("Y1 X1", 2).unwrap();
    assert!(samples(2).iter().any(|f| act_word(&w.letters, f) != act_pbw(&e, f)));
}
