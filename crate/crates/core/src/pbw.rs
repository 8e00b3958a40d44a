//! The stable limit side in the normalized convention T_i − T_i^{-1} = h: straightening of
//! words in ℋ_k^+ to the PBW basis X_μ Y_ν T_w over Q[q,h], standard words and φ_k, the
//! h = 0 normal form, gap sequences, the special elements M_a, and order-bound checkers.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::coeffring::{Order, PolyQH};
use crate::weyl::{compositions, kappa_min, Perm};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PbwError {
    #[error("generator index {0} out of range for rank {1}")]
    Index(usize, usize),
    #[error("cannot parse word atom {0:?}")]
    Parse(String),
    #[error("outside the guard box: {0}")]
    Guard(String),
    #[error("invalid parameters: {0}")]
    Param(String),
}

/// A generator of ℋ_k^+ (1-based indices).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    X(usize),
    Y(usize),
    T(usize),
    Tinv(usize),
}

impl Letter {
    pub fn degree(self) -> u32 {
        match self {
            Letter::X(_) | Letter::Y(_) => 1,
            _ => 0,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::X(i) => write!(f, "X{}", i),
            Letter::Y(i) => write!(f, "Y{}", i),
            Letter::T(i) => write!(f, "T{}", i),
            Letter::Tinv(i) => write!(f, "T{}^-1", i),
        }
    }
}

/// A word in the generators of ℋ_k^+.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GenWord {
    pub k: usize,
    pub letters: Vec<Letter>,
}

impl GenWord {
    pub fn new(k: usize, letters: Vec<Letter>) -> Result<Self, PbwError> {
        for &l in &letters {
            let (i, max) = match l {
                Letter::X(i) | Letter::Y(i) => (i, k),
                Letter::T(i) | Letter::Tinv(i) => (i, k.saturating_sub(1)),
            };
            if i == 0 || i > max {
                return Err(PbwError::Index(i, k));
            }
        }
        Ok(GenWord { k, letters })
    }

    /// Parses whitespace-separated atoms such as "X1 Y1 T2 T2^-1".
    pub fn parse(s: &str, k: usize) -> Result<Self, PbwError> {
        let mut letters = Vec::new();
        for atom in s.split_whitespace() {
            let bad = || PbwError::Parse(atom.to_string());
            let (head, rest) = atom.split_at(1);
            let (num, inv) = match rest.strip_suffix("^-1") {
                Some(n) => (n, true),
                None => (rest, false),
            };
            let i: usize = num.parse().map_err(|_| bad())?;
            letters.push(match (head, inv) {
                ("X", false) => Letter::X(i),
                ("Y", false) => Letter::Y(i),
                ("T", false) => Letter::T(i),
                ("T", true) => Letter::Tinv(i),
                _ => return Err(bad()),
            });
        }
        Self::new(k, letters)
    }

    pub fn degree(&self) -> u32 {
        self.letters.iter().map(|l| l.degree()).sum()
    }

    pub fn deg_x(&self) -> u32 {
        self.letters.iter().filter(|l| matches!(l, Letter::X(_))).count() as u32
    }

    pub fn deg_y(&self) -> u32 {
        self.letters.iter().filter(|l| matches!(l, Letter::Y(_))).count() as u32
    }
}

impl fmt::Display for GenWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", s.join(" "))
    }
}

/// Index (μ, ν, w) of the PBW basis element X_μ Y_ν T_w.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PbwIndex {
    pub mu: Vec<u32>,
    pub nu: Vec<u32>,
    pub w: Perm,
}

impl PbwIndex {
    pub fn identity(k: usize) -> Self {
        PbwIndex { mu: vec![0; k], nu: vec![0; k], w: Perm::identity(k) }
    }

    pub fn new(mu: Vec<u32>, nu: Vec<u32>, w: Perm) -> Self {
        PbwIndex { mu, nu, w }
    }
}

fn mono_string(v: &str, e: &[u32]) -> String {
    let mut s = String::new();
    for (i, &a) in e.iter().enumerate() {
        match a {
            0 => {}
            1 => s += &format!("{}{}", v, i + 1),
            _ => s += &format!("{}{}^{}", v, i + 1, a),
        }
    }
    s
}

impl fmt::Display for PbwIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let xy = mono_string("X", &self.mu) + &mono_string("Y", &self.nu);
        let t: String = self.w.reduced_word().iter().map(|i| format!("T{}", i)).collect();
        let parts: Vec<String> = [xy, t].into_iter().filter(|s| !s.is_empty()).collect();
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("·"))
        }
    }
}

/// Element of the finite Hecke algebra in the basis T_w.
pub type Hecke = BTreeMap<Perm, PolyQH>;

fn add_into<K: Ord + Clone>(m: &mut BTreeMap<K, PolyQH>, key: K, c: PolyQH) {
    if c.is_zero() {
        return;
    }
    let v = m.entry(key.clone()).or_default();
    v.add_assign(&c);
    if v.is_zero() {
        m.remove(&key);
    }
}

/// An element of ℋ_k^+ in the PBW basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PbwElem {
    k: usize,
    terms: BTreeMap<PbwIndex, PolyQH>,
}

impl PbwElem {
    pub fn zero(k: usize) -> Self {
        PbwElem { k, terms: BTreeMap::new() }
    }

    pub fn one(k: usize) -> Self {
        Self::basis(PbwIndex::identity(k), k)
    }

    pub fn basis(idx: PbwIndex, k: usize) -> Self {
        let mut e = Self::zero(k);
        e.add_term(idx, PolyQH::one());
        e
    }

    pub fn rank(&self) -> usize {
        self.k
    }

    pub fn terms(&self) -> &BTreeMap<PbwIndex, PolyQH> {
        &self.terms
    }

    pub fn coeff(&self, idx: &PbwIndex) -> PolyQH {
        self.terms.get(idx).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, idx: PbwIndex, c: PolyQH) {
        add_into(&mut self.terms, idx, c);
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (i, c) in &o.terms {
            r.add_term(i.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&PolyQH::from_int(-1)))
    }

    pub fn scale(&self, c: &PolyQH) -> Self {
        let mut r = Self::zero(self.k);
        for (i, d) in &self.terms {
            r.add_term(i.clone(), d.mul(c));
        }
        r
    }

    /// ord of X_μ Y_ν T_w: the h-adic order of its coefficient (∞ if absent).
    pub fn ord_coeff(&self, idx: &PbwIndex) -> Order {
        self.terms.get(idx).map_or(Order::Inf, |c| c.h_order())
    }

    /// Reduction modulo h.
    pub fn mod_h(&self) -> Self {
        let mut r = Self::zero(self.k);
        for (i, c) in &self.terms {
            r.add_term(i.clone(), c.mod_h());
        }
        r
    }

    /// Every term has the given X and Y degrees.
    pub fn is_homogeneous(&self, dx: u32, dy: u32) -> bool {
        self.terms.keys().all(|i| i.mu.iter().sum::<u32>() == dx && i.nu.iter().sum::<u32>() == dy)
    }

    /// Terms as (mu, nu, w one-line, coefficient string) records.
    pub fn records(&self) -> Vec<(Vec<u32>, Vec<u32>, Vec<usize>, String)> {
        self.sorted_terms().into_iter().map(|(i, c)| (i.mu.clone(), i.nu.clone(), i.w.one_line(), c.to_string())).collect()
    }

    fn sorted_terms(&self) -> Vec<(&PbwIndex, &PolyQH)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| {
            (a.0.w.length(), &a.0.w, std::cmp::Reverse(&a.0.mu), &a.0.nu).cmp(&(b.0.w.length(), &b.0.w, std::cmp::Reverse(&b.0.mu), &b.0.nu))
        });
        v
    }
}

impl fmt::Display for PbwElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (idx, c)) in self.sorted_terms().into_iter().enumerate() {
            let single = c.terms().len() == 1;
            let neg = single && c.terms().values().next().is_some_and(|x| x < &num_rational::BigRational::from_integer(0.into()));
            let body = if neg { c.neg() } else { c.clone() };
            let cs = if body.is_one() {
                String::new()
            } else if single {
                body.to_string()
            } else {
                format!("({})", body)
            };
            let is = idx.to_string();
            let term = match (cs.is_empty(), is == "1") {
                (true, _) => is,
                (false, true) => cs,
                (false, false) => format!("{}·{}", cs, is),
            };
            let sep = match (n == 0, neg) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            write!(f, "{}{}", sep, term)?;
        }
        Ok(())
    }
}

type XPieces = Vec<(usize, Hecke)>;

/// Straightening engine for ℋ_k^+ with memoized commutation tables.
pub struct Engine {
    k: usize,
    hecke: RefCell<HashMap<(Perm, Perm), Hecke>>,
    tx: RefCell<HashMap<(Perm, usize), XPieces>>,
    ty: RefCell<HashMap<(Perm, usize), XPieces>>,
    basic: RefCell<HashMap<(usize, usize), PbwElem>>,
    yx: RefCell<HashMap<(Vec<u32>, usize), PbwElem>>,
}

impl Engine {
    pub fn new(k: usize) -> Self {
        Engine {
            k,
            hecke: RefCell::default(),
            tx: RefCell::default(),
            ty: RefCell::default(),
            basic: RefCell::default(),
            yx: RefCell::default(),
        }
    }

    pub fn rank(&self) -> usize {
        self.k
    }

    fn id(&self) -> Perm {
        Perm::identity(self.k)
    }

    /// T_u T_i: T_{u s_i} if ℓ grows, otherwise T_{u s_i} + h T_u.
    fn hecke_simple(&self, u: &Perm, i: usize) -> Hecke {
        let mut out = Hecke::new();
        out.insert(u.mul_simple_right(i), PolyQH::one());
        if !u.right_ascent(i) {
            out.insert(u.clone(), PolyQH::h());
        }
        out
    }

    /// T_u T_v as a Hecke element.
    pub fn hecke_basis_mul(&self, u: &Perm, v: &Perm) -> Hecke {
        if v.is_identity() {
            return [(u.clone(), PolyQH::one())].into();
        }
        let key = (u.clone(), v.clone());
        if let Some(r) = self.hecke.borrow().get(&key) {
            return r.clone();
        }
        let mut cur: Hecke = [(u.clone(), PolyQH::one())].into();
        for i in v.reduced_word() {
            let mut next = Hecke::new();
            for (p, c) in &cur {
                for (q, d) in self.hecke_simple(p, i) {
                    add_into(&mut next, q, c.mul(&d));
                }
            }
            cur = next;
        }
        self.hecke.borrow_mut().insert(key, cur.clone());
        cur
    }

    pub fn hecke_mul(&self, a: &Hecke, b: &Hecke) -> Hecke {
        let mut out = Hecke::new();
        for (u, c) in a {
            for (v, d) in b {
                let cd = c.mul(d);
                for (w, e) in self.hecke_basis_mul(u, v) {
                    add_into(&mut out, w, cd.mul(&e));
                }
            }
        }
        out
    }

    pub fn hecke_t(&self, i: usize) -> Hecke {
        [(Perm::simple(i, self.k), PolyQH::one())].into()
    }

    /// T_i^{-1} = T_i − h.
    pub fn hecke_t_inv(&self, i: usize) -> Hecke {
        [(Perm::simple(i, self.k), PolyQH::one()), (self.id(), PolyQH::h().neg())].into()
    }

    /// T_{(a,b)}, the basis element of the transposition (a, b).
    pub fn hecke_tab(&self, a: usize, b: usize) -> Hecke {
        [(Perm::cycle(self.k, &[a, b]), PolyQH::one())].into()
    }

    /// T_{(a,b)}^{-1} = T_a^{-1} ⋯ T_{b−1}^{-1} ⋯ T_a^{-1}.
    pub fn hecke_tab_inv(&self, a: usize, b: usize) -> Hecke {
        let mut cur: Hecke = [(self.id(), PolyQH::one())].into();
        for i in tab_word(a, b) {
            cur = self.hecke_mul(&cur, &self.hecke_t_inv(i));
        }
        cur
    }

    /// T_w^{±1} in the T basis.
    pub fn hecke_of(&self, w: &Perm, inverse: bool) -> Hecke {
        if !inverse {
            return [(w.clone(), PolyQH::one())].into();
        }
        let mut cur: Hecke = [(self.id(), PolyQH::one())].into();
        for i in w.reduced_word().into_iter().rev() {
            cur = self.hecke_mul(&cur, &self.hecke_t_inv(i));
        }
        cur
    }

    /// T_w Z_j = Σ Z_c H_c for Z = X or Y.
    fn t_through(&self, w: &Perm, j: usize, is_x: bool) -> XPieces {
        if w.is_identity() {
            return vec![(j, [(w.clone(), PolyQH::one())].into())];
        }
        let key = (w.clone(), j);
        let memo = if is_x { &self.tx } else { &self.ty };
        if let Some(r) = memo.borrow().get(&key) {
            return r.clone();
        }
        let i = (1..self.k).find(|&i| !w.right_ascent(i)).expect("non-identity has a descent");
        let w1 = w.mul_simple_right(i);
        let h = PolyQH::h();
        // T_i Z_j = Σ (index, coefficient, keeps T_i)
        let pieces: Vec<(usize, PolyQH, bool)> = match (is_x, j) {
            (true, j) if j == i => vec![(i + 1, PolyQH::one(), true), (i, h, false)],
            (true, j) if j == i + 1 => vec![(i, PolyQH::one(), true), (i, h.neg(), false)],
            (false, j) if j == i => vec![(i + 1, PolyQH::one(), true), (i + 1, h.neg(), false)],
            (false, j) if j == i + 1 => vec![(i, PolyQH::one(), true), (i + 1, h, false)],
            _ => vec![(j, PolyQH::one(), true)],
        };
        let mut acc: BTreeMap<usize, Hecke> = BTreeMap::new();
        let ti = self.hecke_t(i);
        for (j1, c, keep) in pieces {
            for (cidx, hk) in self.t_through(&w1, j1, is_x) {
                let hk = if keep { self.hecke_mul(&hk, &ti) } else { hk };
                let slot = acc.entry(cidx).or_default();
                for (p, d) in hk {
                    add_into(slot, p, d.mul(&c));
                }
            }
        }
        let out: XPieces = acc.into_iter().filter(|(_, h)| !h.is_empty()).collect();
        memo.borrow_mut().insert(key, out.clone());
        out
    }

    pub fn mul_hecke(&self, e: &PbwElem, hk: &Hecke) -> PbwElem {
        let mut out = PbwElem::zero(self.k);
        for (idx, c) in &e.terms {
            for (v, d) in hk {
                let cd = c.mul(d);
                for (w, f) in self.hecke_basis_mul(&idx.w, v) {
                    out.add_term(PbwIndex::new(idx.mu.clone(), idx.nu.clone(), w), cd.mul(&f));
                }
            }
        }
        out
    }

    pub fn mul_t(&self, e: &PbwElem, i: usize, inverse: bool) -> PbwElem {
        let hk = if inverse { self.hecke_t_inv(i) } else { self.hecke_t(i) };
        self.mul_hecke(e, &hk)
    }

    pub fn mul_y(&self, e: &PbwElem, j: usize) -> PbwElem {
        let mut out = PbwElem::zero(self.k);
        for (idx, c) in &e.terms {
            for (b, hk) in self.t_through(&idx.w, j, false) {
                let mut nu = idx.nu.clone();
                nu[b - 1] += 1;
                for (w, d) in hk {
                    out.add_term(PbwIndex::new(idx.mu.clone(), nu.clone(), w), c.mul(&d));
                }
            }
        }
        out
    }

    pub fn mul_x(&self, e: &PbwElem, j: usize) -> PbwElem {
        let mut out = PbwElem::zero(self.k);
        for (idx, c) in &e.terms {
            for (cidx, hk) in self.t_through(&idx.w, j, true) {
                let p = self.yx(&idx.nu, cidx);
                let p = self.mul_hecke(&p, &hk);
                for (pi, d) in p.terms {
                    let mu: Vec<u32> = idx.mu.iter().zip(&pi.mu).map(|(a, b)| a + b).collect();
                    out.add_term(PbwIndex::new(mu, pi.nu, pi.w), c.mul(&d));
                }
            }
        }
        out
    }

    fn xy_elem(&self, a: usize, b: usize, hk: &Hecke, c: &PolyQH) -> PbwElem {
        let mut mu = vec![0; self.k];
        let mut nu = vec![0; self.k];
        mu[a - 1] = 1;
        nu[b - 1] = 1;
        let mut e = PbwElem::zero(self.k);
        for (w, d) in hk {
            e.add_term(PbwIndex::new(mu.clone(), nu.clone(), w.clone()), d.mul(c));
        }
        e
    }

    /// Y_b X_c as a PBW element.
    fn basic(&self, b: usize, c: usize) -> PbwElem {
        if let Some(r) = self.basic.borrow().get(&(b, c)) {
            return r.clone();
        }
        let one: Hecke = [(self.id(), PolyQH::one())].into();
        let h = PolyQH::h();
        let out = if b == c {
            let a = b;
            let mut left = self.xy_elem(a, a, &one, &PolyQH::q());
            for i in 1..a {
                left = left.add(&self.xy_elem(i, i, &self.hecke_tab(i, a), &PolyQH::q().mul(&h)));
            }
            let mut right = one.clone();
            for j in a + 1..=self.k {
                for (w, d) in self.hecke_tab(a, j) {
                    add_into(&mut right, w, d.mul(&h));
                }
            }
            self.mul_hecke(&left, &right)
        } else if c < b {
            self.xy_elem(c, b, &one, &PolyQH::one()).sub(&self.xy_elem(c, c, &self.hecke_tab(c, b), &h))
        } else {
            let aa = self.basic(b, b);
            self.xy_elem(c, b, &one, &PolyQH::one()).sub(&self.mul_hecke(&aa, &self.hecke_tab_inv(b, c)).scale(&h))
        };
        self.basic.borrow_mut().insert((b, c), out.clone());
        out
    }

    /// Y_ν X_c as a PBW element.
    fn yx(&self, nu: &[u32], c: usize) -> PbwElem {
        let Some(b) = (1..=self.k).rev().find(|&b| nu[b - 1] > 0) else {
            let mut mu = vec![0; self.k];
            mu[c - 1] = 1;
            return PbwElem::basis(PbwIndex::new(mu, vec![0; self.k], self.id()), self.k);
        };
        let key = (nu.to_vec(), c);
        if let Some(r) = self.yx.borrow().get(&key) {
            return r.clone();
        }
        let mut rest = nu.to_vec();
        rest[b - 1] -= 1;
        let mut out = PbwElem::zero(self.k);
        for (idx, coef) in self.basic(b, c).terms {
            let c1 = idx.mu.iter().position(|&x| x > 0).unwrap() + 1;
            let b1 = idx.nu.iter().position(|&x| x > 0).unwrap() + 1;
            let inner = self.mul_y(&self.yx(&rest, c1), b1);
            let inner = self.mul_hecke(&inner, &[(idx.w.clone(), PolyQH::one())].into());
            out = out.add(&inner.scale(&coef));
        }
        self.yx.borrow_mut().insert(key, out.clone());
        out
    }

    pub fn mul_letter(&self, e: &PbwElem, l: Letter) -> PbwElem {
        match l {
            Letter::X(j) => self.mul_x(e, j),
            Letter::Y(j) => self.mul_y(e, j),
            Letter::T(i) => self.mul_t(e, i, false),
            Letter::Tinv(i) => self.mul_t(e, i, true),
        }
    }

    /// The PBW expansion of a word.
    pub fn straighten(&self, wd: &GenWord) -> Result<PbwElem, PbwError> {
        if wd.k != self.k {
            return Err(PbwError::Param(format!("word of rank {} in rank {} engine", wd.k, self.k)));
        }
        Ok(self.straighten_letters(&wd.letters))
    }

    pub fn straighten_letters(&self, letters: &[Letter]) -> PbwElem {
        letters.iter().fold(PbwElem::one(self.k), |e, &l| self.mul_letter(&e, l))
    }

    /// Straightens a Q[q,h]-combination of words.
    pub fn straighten_combination(&self, combo: &[(PolyQH, Vec<Letter>)]) -> PbwElem {
        let mut out = PbwElem::zero(self.k);
        for (c, w) in combo {
            out = out.add(&self.straighten_letters(w).scale(c));
        }
        out
    }

    /// Product of PBW elements.
    pub fn mul(&self, a: &PbwElem, b: &PbwElem) -> PbwElem {
        let mut out = PbwElem::zero(self.k);
        for (idx, c) in &b.terms {
            let mut e = a.scale(c);
            for (j, &m) in idx.mu.iter().enumerate() {
                for _ in 0..m {
                    e = self.mul_x(&e, j + 1);
                }
            }
            for (j, &m) in idx.nu.iter().enumerate() {
                for _ in 0..m {
                    e = self.mul_y(&e, j + 1);
                }
            }
            out = out.add(&self.mul_hecke(&e, &[(idx.w.clone(), PolyQH::one())].into()));
        }
        out
    }

    /// φ_k of a standard word.
    pub fn phi(&self, sw: &StdWord) -> Result<PbwElem, PbwError> {
        Ok(self.straighten_letters(&sw.letters(self.k)?))
    }
}

/// The word a, a+1, …, b−1, …, a of T_{(a,b)}.
pub fn tab_word(a: usize, b: usize) -> Vec<usize> {
    let mut w: Vec<usize> = (a..b).collect();
    w.extend((a..b - 1).rev());
    w
}

/// Which half of T_{(a,b)} = T_a⋯T_{b−1}⋯T_a receives an inserted letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Half {
    /// After T_p in the ascending half T_a⋯T_{b−1} (p = a − 1 means at the start).
    Ascending,
    /// After T_p in the descending half T_{b−1}⋯T_a (p = b − 1 means right after the peak).
    Descending,
}

/// T_{(a,b)} with the letter inserted right after T_p in the chosen half.
pub fn tab_insert(a: usize, b: usize, half: Half, p: usize, letter: Letter) -> Vec<Letter> {
    let up: Vec<Letter> = (a..b).map(Letter::T).collect();
    let down: Vec<Letter> = (a..b - 1).rev().map(Letter::T).collect();
    let mut out = Vec::new();
    match half {
        Half::Ascending => {
            let cut = p + 1 - a;
            out.extend_from_slice(&up[..cut]);
            out.push(letter);
            out.extend_from_slice(&up[cut..]);
            out.extend_from_slice(&down);
        }
        Half::Descending => {
            out.extend_from_slice(&up);
            let cut = b - 1 - p;
            out.extend_from_slice(&down[..cut]);
            out.push(letter);
            out.extend_from_slice(&down[cut..]);
        }
    }
    out
}

fn tab_letters(a: usize, b: usize) -> Vec<Letter> {
    tab_word(a, b).into_iter().map(Letter::T).collect()
}

/// One side of an identity: a Q[q,h]-combination of words.
pub type Combination = Vec<(PolyQH, Vec<Letter>)>;

/// A named identity between two combinations.
#[derive(Clone, Debug)]
pub struct Identity {
    pub name: String,
    pub lhs: Combination,
    pub rhs: Combination,
}

fn cat(parts: &[&[Letter]]) -> Vec<Letter> {
    parts.iter().flat_map(|p| p.iter().copied()).collect()
}

/// The twelve T_{(a,b)} commutation identities for a ≤ i < b − 1 (the b, e cases use i = b − 1).
pub fn tab_identities(a: usize, b: usize) -> Vec<Identity> {
    use Half::*;
    use Letter::*;
    let one = PolyQH::one;
    let h = PolyQH::h;
    let mh = || PolyQH::h().neg();
    let h2 = || PolyQH::h().mul(&PolyQH::h());
    let mh2 = || h2().neg();
    let mut out = Vec::new();
    let id = |name: String, lhs: Combination, rhs: Combination| Identity { name, lhs, rhs };
    for i in a..b.saturating_sub(1) {
        let tag = |s: &str| format!("{}(a={},b={},i={})", s, a, b, i);
        out.push(id(
            tag("X-a"),
            vec![(one(), tab_insert(a, b, Descending, i, X(i)))],
            vec![
                (one(), tab_insert(a, b, Descending, i + 1, X(i + 1))),
                (h(), cat(&[&tab_insert(a, i + 1, Descending, i, X(i)), &tab_letters(i + 1, b)])),
            ],
        ));
        out.push(id(
            tag("X-c"),
            vec![(one(), tab_insert(a, b, Ascending, i, X(i)))],
            vec![
                (one(), cat(&[&[X(i + 1)], &tab_letters(a, b)])),
                (h(), cat(&[&tab_letters(i + 1, b), &tab_insert(a, i + 1, Ascending, i - 1, X(i))])),
            ],
        ));
        out.push(id(
            tag("X-d"),
            vec![(one(), tab_insert(a, b, Descending, i, X(i + 1)))],
            vec![
                (one(), tab_insert(a, b, Ascending, i, X(i))),
                (mh(), cat(&[&tab_insert(a, i + 1, Descending, i, X(i)), &tab_letters(i + 1, b)])),
            ],
        ));
        out.push(id(
            tag("X-f"),
            vec![(one(), tab_insert(a, b, Ascending, i, X(i + 1)))],
            vec![
                (one(), tab_insert(a, b, Ascending, i - 1, X(i))),
                (mh(), cat(&[&tab_letters(i + 1, b), &tab_insert(a, i + 1, Ascending, i - 1, X(i))])),
            ],
        ));
        out.push(id(
            tag("Y-a"),
            vec![(one(), tab_insert(a, b, Descending, i, Y(i)))],
            vec![
                (one(), tab_insert(a, b, Descending, i + 1, Y(i + 1))),
                (mh(), cat(&[&tab_letters(a, i + 1), &tab_insert(i + 1, b, Descending, i + 1, Y(i + 1))])),
            ],
        ));
        out.push(id(
            tag("Y-c"),
            vec![(one(), tab_insert(a, b, Ascending, i, Y(i)))],
            vec![
                (one(), cat(&[&[Y(i + 1)], &tab_letters(a, b)])),
                (mh(), cat(&[&[Y(i + 1)], &tab_letters(i + 1, b), &tab_letters(a, i + 1)])),
            ],
        ));
        out.push(id(
            tag("Y-d"),
            vec![(one(), tab_insert(a, b, Descending, i, Y(i + 1)))],
            vec![
                (one(), tab_insert(a, b, Ascending, i, Y(i))),
                (h(), cat(&[&tab_letters(a, i + 1), &tab_insert(i + 1, b, Descending, i + 1, Y(i + 1))])),
            ],
        ));
        out.push(id(
            tag("Y-f"),
            vec![(one(), tab_insert(a, b, Ascending, i, Y(i + 1)))],
            vec![
                (one(), tab_insert(a, b, Ascending, i - 1, Y(i))),
                (h(), cat(&[&[Y(i + 1)], &tab_letters(i + 1, b), &tab_letters(a, i + 1)])),
            ],
        ));
    }
    let tag = |s: &str| format!("{}(a={},b={})", s, a, b);
    out.push(id(
        tag("X-b"),
        vec![(one(), tab_insert(a, b, Descending, b - 1, X(b - 1)))],
        vec![(one(), cat(&[&[X(b)], &tab_letters(a, b)])), (h(), vec![X(a)])],
    ));
    out.push(id(
        tag("X-e"),
        vec![(one(), tab_insert(a, b, Descending, b - 1, X(b)))],
        vec![(one(), tab_insert(a, b, Ascending, b - 2, X(b - 1))), (mh(), vec![X(a)])],
    ));
    let mut yb = vec![(one(), cat(&[&[Y(b)], &tab_letters(a, b)])), (mh(), vec![Y(b)])];
    let mut ye = vec![(one(), tab_insert(a, b, Ascending, b - 2, Y(b - 1))), (h(), vec![Y(b)])];
    for j in a + 1..b {
        yb.push((mh2(), cat(&[&[Y(b)], &tab_letters(a, j)])));
        ye.push((h2(), cat(&[&[Y(b)], &tab_letters(a, j)])));
    }
    out.push(id(tag("Y-b"), vec![(one(), tab_insert(a, b, Descending, b - 1, Y(b - 1)))], yb));
    out.push(id(tag("Y-e"), vec![(one(), tab_insert(a, b, Descending, b - 1, Y(b)))], ye));
    out
}

/// The defining relations of ℋ_k^+ (normalized), the determinant relation, and the degree-two
/// relation Y_1 X_1 = q X_1 Y_1 T_1⋯T_{k−1}^2⋯T_1.
pub fn defining_relations(k: usize) -> Vec<Identity> {
    use Letter::*;
    let one = PolyQH::one;
    let w = |v: Vec<Letter>| vec![(one(), v)];
    let id = |name: String, lhs: Combination, rhs: Combination| Identity { name, lhs, rhs };
    let mut out = Vec::new();
    for i in 1..k {
        out.push(id(format!("quadratic T{}", i), vec![(one(), vec![T(i)]), (PolyQH::from_int(-1), vec![Tinv(i)])], vec![(PolyQH::h(), vec![])]));
        out.push(id(format!("inverse T{}", i), w(vec![T(i), Tinv(i)]), w(vec![])));
        out.push(id(format!("X shift {}", i), w(vec![Tinv(i), X(i), Tinv(i)]), w(vec![X(i + 1)])));
        out.push(id(format!("Y shift {}", i), w(vec![T(i), Y(i), T(i)]), w(vec![Y(i + 1)])));
        if i + 1 < k {
            out.push(id(format!("braid {}", i), w(vec![T(i), T(i + 1), T(i)]), w(vec![T(i + 1), T(i), T(i + 1)])));
        }
        for j in 1..k {
            if j + 1 < i || i + 1 < j {
                out.push(id(format!("T commute {},{}", i, j), w(vec![T(i), T(j)]), w(vec![T(j), T(i)])));
            }
        }
        for j in 1..=k {
            if j != i && j != i + 1 {
                out.push(id(format!("TX commute {},{}", i, j), w(vec![T(i), X(j)]), w(vec![X(j), T(i)])));
                out.push(id(format!("TY commute {},{}", i, j), w(vec![T(i), Y(j)]), w(vec![Y(j), T(i)])));
            }
        }
    }
    for i in 1..=k {
        for j in i + 1..=k {
            out.push(id(format!("XX {},{}", i, j), w(vec![X(i), X(j)]), w(vec![X(j), X(i)])));
            out.push(id(format!("YY {},{}", i, j), w(vec![Y(i), Y(j)]), w(vec![Y(j), Y(i)])));
        }
    }
    if k >= 2 {
        out.push(id("XY cross".into(), w(vec![Y(1), T(1), X(1)]), w(vec![X(2), Y(1), T(1)])));
    }
    let xs: Vec<Letter> = (1..=k).map(X).collect();
    out.push(id("det".into(), w(cat(&[&[Y(1)], &xs])), vec![(PolyQH::q(), cat(&[&xs, &[Y(1)]]))]));
    let mut chain: Vec<Letter> = (1..k).map(T).collect();
    chain.extend((1..k).rev().map(T));
    out.push(id("degree two".into(), w(vec![Y(1), X(1)]), vec![(PolyQH::q(), cat(&[&[X(1), Y(1)], &chain]))]));
    out
}

/// Outcome of straightening an identity.
#[derive(Clone, Debug)]
pub struct IdentityCheck {
    pub name: String,
    pub holds: bool,
}

pub fn check_identities(engine: &Engine, ids: &[Identity]) -> Vec<IdentityCheck> {
    ids.iter()
        .map(|i| IdentityCheck { name: i.name.clone(), holds: engine.straighten_combination(&i.lhs) == engine.straighten_combination(&i.rhs) })
        .collect()
}

/// A letter of a slot word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum XY {
    X,
    Y,
}

/// A standard word u_1 ⋯ u_r T_w with u_j a word in {X_j, Y_j} and w ∈ S_r.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StdWord {
    pub slots: Vec<Vec<XY>>,
    pub w: Perm,
}

impl StdWord {
    pub fn new(slots: Vec<Vec<XY>>, w: Perm) -> Result<Self, PbwError> {
        if w.rank() != slots.len() {
            return Err(PbwError::Param(format!("permutation of rank {} with {} slots", w.rank(), slots.len())));
        }
        Ok(StdWord { slots, w })
    }

    pub fn single(u: Vec<XY>) -> Self {
        StdWord { slots: vec![u], w: Perm::identity(1) }
    }

    pub fn r(&self) -> usize {
        self.slots.len()
    }

    pub fn degree(&self) -> u32 {
        self.slots.iter().map(|s| s.len() as u32).sum()
    }

    pub fn letters(&self, k: usize) -> Result<Vec<Letter>, PbwError> {
        if k < self.r() {
            return Err(PbwError::Param(format!("rank {} below {} slots", k, self.r())));
        }
        let mut out = Vec::new();
        for (j, u) in self.slots.iter().enumerate() {
            out.extend(u.iter().map(|l| match l {
                XY::X => Letter::X(j + 1),
                XY::Y => Letter::Y(j + 1),
            }));
        }
        out.extend(self.w.reduced_word().into_iter().map(Letter::T));
        Ok(out)
    }

    pub fn gap_data(&self) -> Vec<Vec<u32>> {
        self.slots.iter().map(|u| gap_sequence(u)).collect()
    }

    pub fn m(&self) -> Vec<u32> {
        self.slots.iter().map(|u| u.iter().filter(|&&l| l == XY::Y).count() as u32).collect()
    }

    pub fn z(&self) -> Vec<u32> {
        self.gap_data().iter().map(|g| z_of(g)).collect()
    }
}

/// X counts between consecutive Y letters, scanning right to left.
pub fn gap_sequence(u: &[XY]) -> Vec<u32> {
    let mut out = vec![0];
    for &l in u.iter().rev() {
        match l {
            XY::X => *out.last_mut().unwrap() += 1,
            XY::Y => out.push(0),
        }
    }
    out
}

/// The word X^{g_m} Y X^{g_{m−1}} ⋯ Y X^{g_0}.
pub fn word_from_gaps(g: &[u32]) -> Vec<XY> {
    let mut out = Vec::new();
    for (n, &x) in g.iter().enumerate().rev() {
        out.extend(std::iter::repeat(XY::X).take(x as usize));
        if n > 0 {
            out.push(XY::Y);
        }
    }
    out
}

/// z(a) = least i with a_i ≠ 0, or m = ℓ(a) − 1.
pub fn z_of(a: &[u32]) -> u32 {
    a.iter().position(|&x| x != 0).unwrap_or(a.len() - 1) as u32
}

/// Dominance a ⊴ b on partial sums, padding the shorter sequence with zeros.
pub fn dominance_leq(a: &[u32], b: &[u32]) -> bool {
    let n = a.len().max(b.len());
    let (mut sa, mut sb) = (0u64, 0u64);
    for i in 0..n {
        sa += *a.get(i).unwrap_or(&0) as u64;
        sb += *b.get(i).unwrap_or(&0) as u64;
        if sa > sb {
            return false;
        }
    }
    true
}

/// The cycle c_j(N, m) = (j, N, N−1, …, N−m+1) in S_k.
pub fn c_cycle(k: usize, j: usize, n: usize, m: usize) -> Perm {
    let mut elems = vec![j];
    elems.extend((n + 1 - m..=n).rev());
    Perm::cycle(k, &elems)
}

/// Exponents of M_a(X) and M_a(Y) (without T) for one slot with data (a, j, m, N).
fn m_slot(a: &[u32], k: usize, j: usize, n: usize, mu: &mut [u32], nu: &mut [u32]) -> Perm {
    let m = a.len() - 1;
    let z = z_of(a) as usize;
    if z == m {
        mu[j - 1] += a[m];
        nu[j - 1] += m as u32;
        return Perm::identity(k);
    }
    mu[j - 1] += a[m] + 1;
    for p in 0..m - z {
        mu[n - p - 1] += a[z + p] - if p == 0 { 1 } else { 0 };
    }
    nu[j - 1] += 1;
    for p in 1..m - z {
        nu[n - p - 1] += 1;
    }
    nu[n - 1] += z as u32;
    c_cycle(k, j, n, m - z)
}

/// The index of M_a(X) M_a(Y,T) for the data (a, k, j, m, N); N ≤ k is allowed.
pub fn m_special(a: &[u32], k: usize, j: usize, n: usize) -> Result<PbwIndex, PbwError> {
    if a.is_empty() {
        return Err(PbwError::Param("empty composition".into()));
    }
    let m = a.len() - 1;
    if j == 0 || n < m + j || n > k {
        return Err(PbwError::Param(format!("need k ≥ N ≥ m + j, got k={}, N={}, m={}, j={}", k, n, m, j)));
    }
    let mut mu = vec![0; k];
    let mut nu = vec![0; k];
    let w = m_slot(a, k, j, n, &mut mu, &mut nu);
    Ok(PbwIndex::new(mu, nu, w))
}

/// N_j = k − m_r − ⋯ − m_{j+1}.
pub fn slot_bounds(m: &[u32], k: usize) -> Vec<usize> {
    let r = m.len();
    (1..=r).map(|j| k - m[j..].iter().map(|&x| x as usize).sum::<usize>()).collect()
}

/// The index of M_a(X) M_a(Y,T) T_{w_a} for a sequence of compositions; requires k ≥ |ℓ(a)|.
pub fn m_multi(a: &[Vec<u32>], k: usize, wa: &Perm) -> Result<PbwIndex, PbwError> {
    let r = a.len();
    let total: usize = a.iter().map(|x| x.len()).sum();
    if k < total || a.iter().any(|x| x.is_empty()) || wa.rank() != r {
        return Err(PbwError::Param(format!("need k ≥ |ℓ(a)| = {}", total)));
    }
    let m: Vec<u32> = a.iter().map(|x| x.len() as u32 - 1).collect();
    let bounds = slot_bounds(&m, k);
    let mut mu = vec![0; k];
    let mut nu = vec![0; k];
    let mut c = Perm::identity(k);
    for (j, aj) in a.iter().enumerate() {
        c = c.compose(&m_slot(aj, k, j + 1, bounds[j], &mut mu, &mut nu));
    }
    Ok(PbwIndex::new(mu, nu, c.compose(&wa.extend(k))))
}

/// h = 0 normal form: per-index words in the free semigroups W_i and a permutation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ev0Form {
    pub slots: Vec<Vec<XY>>,
    pub perm: Perm,
}

impl Ev0Form {
    /// The image in ℋ_k^+ mod h, where Y_a X_a = q X_a Y_a.
    pub fn to_pbw(&self) -> PbwElem {
        let k = self.perm.rank();
        let mut mu = vec![0; k];
        let mut nu = vec![0; k];
        let mut qe = 0;
        for (i, u) in self.slots.iter().enumerate() {
            let mut ys = 0;
            for &l in u {
                match l {
                    XY::X => {
                        mu[i] += 1;
                        qe += ys;
                    }
                    XY::Y => {
                        nu[i] += 1;
                        ys += 1;
                    }
                }
            }
        }
        let mut e = PbwElem::zero(k);
        e.add_term(PbwIndex::new(mu, nu, self.perm.clone()), PolyQH::term(1, qe, 0));
        e
    }
}

/// The normal form of a word in the h = 0 algebra: t_w x_j = x_{w(j)} t_w.
pub fn ev0_normal_form(wd: &GenWord) -> Ev0Form {
    let mut slots = vec![Vec::new(); wd.k];
    let mut perm = Perm::identity(wd.k);
    for &l in &wd.letters {
        match l {
            Letter::X(j) => slots[perm.apply(j) - 1].push(XY::X),
            Letter::Y(j) => slots[perm.apply(j) - 1].push(XY::Y),
            Letter::T(i) | Letter::Tinv(i) => perm = perm.mul_simple_right(i),
        }
    }
    Ev0Form { slots, perm }
}

/// ϰ(w).
pub fn varkappa(w: &Perm) -> usize {
    kappa_min(w)
}

/// Result of an order-bound check.
#[derive(Clone, Debug, Default)]
pub struct BoundReport {
    pub checked: usize,
    pub violations: Vec<String>,
}

impl BoundReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn merge(&mut self, o: BoundReport) {
        self.checked += o.checked;
        self.violations.extend(o.violations);
    }
}

/// ord_{φ_k(𝔴)}(X_μ Y_ν T_w) ≥ ϰ(w) on every term.
pub fn verify_upsilon_bound(engine: &Engine, sw: &StdWord) -> Result<BoundReport, PbwError> {
    let k = engine.rank();
    if sw.degree() > 5 || sw.r() > 3 || k > 5 {
        return Err(PbwError::Guard("deg ≤ 5, r ≤ 3, k ≤ 5".into()));
    }
    if !sw.w.is_identity() {
        return Err(PbwError::Param("standard word must have trivial permutation".into()));
    }
    let e = engine.phi(sw)?;
    let mut rep = BoundReport::default();
    for (idx, c) in e.terms() {
        rep.checked += 1;
        if c.h_order() < Order::Fin(varkappa(&idx.w) as i64) {
            rep.violations.push(format!("{} has order {:?} < ϰ = {}", idx, c.h_order(), varkappa(&idx.w)));
        }
    }
    Ok(rep)
}

/// All words in {X, Y} with exactly dx X letters and dy Y letters.
pub fn xy_words(dx: u32, dy: u32) -> Vec<Vec<XY>> {
    if dx == 0 && dy == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    if dx > 0 {
        for mut w in xy_words(dx - 1, dy) {
            w.insert(0, XY::X);
            out.push(w);
        }
    }
    if dy > 0 {
        for mut w in xy_words(dx, dy - 1) {
            w.insert(0, XY::Y);
            out.push(w);
        }
    }
    out
}

/// All words in {X, Y} of length d.
pub fn all_xy_words(d: u32) -> Vec<Vec<XY>> {
    (0..=d).flat_map(|dy| xy_words(d - dy, dy)).collect()
}

/// Main triangularity conclusions for φ_k(𝔴) on all M_a(X)M_a(Y,T)T_{w_a} with m(a) = m(𝔴).
#[derive(Clone, Debug, Default)]
pub struct MainReport {
    pub candidates: usize,
    pub minimal: usize,
    pub violations: Vec<String>,
    pub leading: PolyQH,
    pub leading_ok: bool,
}

impl MainReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.leading_ok
    }
}

fn compositions_of_len(len: usize, d: u32) -> Vec<Vec<u32>> {
    compositions(len, d)
}

/// All sequences (a^1, …, a^r) with ℓ(a^j) = m_j + 1 and total weight d.
fn multi_compositions(m: &[u32], d: u32) -> Vec<Vec<Vec<u32>>> {
    if m.is_empty() {
        return if d == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for d0 in 0..=d {
        for first in compositions_of_len(m[0] as usize + 1, d0) {
            for mut rest in multi_compositions(&m[1..], d - d0) {
                rest.insert(0, first.clone());
                out.push(rest);
            }
        }
    }
    out
}

pub fn verify_main_theorem(engine: &Engine, sw: &StdWord) -> Result<MainReport, PbwError> {
    let k = engine.rank();
    let m = sw.m();
    let g = sw.gap_data();
    let total_len: usize = g.iter().map(|x| x.len()).sum();
    if m.iter().any(|&x| x > 3) || k < total_len {
        return Err(PbwError::Guard("m(𝔴) ≤ 3 componentwise and k ≥ |ℓ(g(𝔴))|".into()));
    }
    let e = engine.phi(sw)?;
    let zw = sw.z();
    let dx: u32 = sw.slots.iter().map(|u| u.iter().filter(|&&l| l == XY::X).count() as u32).sum();
    let mut rep = MainReport::default();
    let r = sw.r();
    for a in multi_compositions(&m, dx) {
        let za: Vec<u32> = a.iter().map(|x| z_of(x)).collect();
        let bound: u32 = m.iter().zip(&za).map(|(x, y)| x - y).sum();
        for wa in Perm::all(r) {
            rep.candidates += 1;
            let idx = m_multi(&a, k, &wa)?;
            let ord = e.ord_coeff(&idx);
            if ord < Order::Fin(bound as i64) {
                rep.violations.push(format!("(i) {:?} w_a={} order {:?} < {}", a, wa, ord, bound));
                continue;
            }
            if ord != Order::Fin(bound as i64) {
                continue;
            }
            rep.minimal += 1;
            if wa != sw.w {
                rep.violations.push(format!("(ii) {:?} w_a={} ≠ w", a, wa));
            }
            if za.iter().zip(&zw).any(|(x, y)| x < y) {
                rep.violations.push(format!("(iii) {:?} z(a)={:?} < z(𝔴)={:?}", a, za, zw));
            }
            if za == zw && a.iter().zip(&g).any(|(x, y)| !dominance_leq(x, y)) {
                rep.violations.push(format!("(iv) {:?} not dominated by {:?}", a, g));
            }
        }
    }
    let d: u32 = m.iter().zip(&zw).map(|(x, y)| x - y).sum();
    let lead_idx = m_multi(&g, k, &sw.w)?;
    rep.leading = e.coeff(&lead_idx).h_component(d);
    rep.leading_ok = rep.leading == PolyQH::term(1, d, d);
    Ok(rep)
}

/// Number of distinct entries of λ (counting 0 when present) or of its nonzero entries.
pub fn distinct_parts(lam: &[u32], count_zero: bool) -> usize {
    let mut v: Vec<u32> = lam.iter().copied().filter(|&x| count_zero || x > 0).collect();
    v.sort_unstable();
    v.dedup();
    v.len()
}

/// All reduced words of w (each as i_1…i_l with w = s_{i_1}⋯s_{i_l}).
pub fn reduced_words(w: &Perm) -> Vec<Vec<usize>> {
    if w.is_identity() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in 1..w.rank() {
        if !w.right_ascent(i) {
            for mut r in reduced_words(&w.mul_simple_right(i)) {
                r.push(i);
                out.push(r);
            }
        }
    }
    out
}

/// v is the product of a subword of `word` omitting exactly s letters.
pub fn omits_exactly(word: &[usize], s: usize, v: &Perm) -> bool {
    let l = word.len();
    if s > l {
        return false;
    }
    let k = v.rank();
    let mut found = false;
    subsets(l, s, &mut |omit: &[bool]| {
        if !found {
            let p = word.iter().zip(omit).filter(|(_, &o)| !o).fold(Perm::identity(k), |acc, (&i, _)| acc.mul_simple_right(i));
            found = p == *v;
        }
    });
    found
}

fn subsets(n: usize, s: usize, f: &mut dyn FnMut(&[bool])) {
    fn go(i: usize, left: usize, cur: &mut Vec<bool>, n: usize, f: &mut dyn FnMut(&[bool])) {
        if i == n {
            if left == 0 {
                f(cur);
            }
            return;
        }
        if n - i > left {
            cur.push(false);
            go(i + 1, left, cur, n, f);
            cur.pop();
        }
        if left > 0 {
            cur.push(true);
            go(i + 1, left - 1, cur, n, f);
            cur.pop();
        }
    }
    go(0, s, &mut Vec::with_capacity(n), n, f);
}

/// The distinct-parts bound on the PBW expansion of T_w Y_λ X_η at rank N.
pub fn verify_parts(engine: &Engine, w: &Perm, lam: &[u32], eta: &[u32], count_zero: bool) -> BoundReport {
    let mut letters: Vec<Letter> = w.reduced_word().into_iter().map(Letter::T).collect();
    for (i, &e) in lam.iter().enumerate() {
        letters.extend(std::iter::repeat(Letter::Y(i + 1)).take(e as usize));
    }
    for (i, &e) in eta.iter().enumerate() {
        letters.extend(std::iter::repeat(Letter::X(i + 1)).take(e as usize));
    }
    let e = engine.straighten_letters(&letters);
    let dl = distinct_parts(lam, count_zero);
    let words = reduced_words(w);
    let mut rep = BoundReport::default();
    for (idx, c) in e.terms() {
        let dm = distinct_parts(&idx.nu, count_zero);
        if dl <= dm {
            continue;
        }
        let s = dl - dm;
        rep.checked += 1;
        let ord = c.h_order();
        if ord < Order::Fin(s as i64) {
            rep.violations.push(format!("T_{} Y{:?} X{:?}: {} order {:?} < s = {}", w, lam, eta, idx, ord, s));
        } else if ord == Order::Fin(s as i64) && eta.iter().all(|&x| x == 0) && idx.mu.iter().all(|&x| x == 0) {
            if !words.iter().all(|rw| omits_exactly(rw, s, &idx.w)) {
                rep.violations.push(format!("T_{} Y{:?}: {} not a subword omitting {}", w, lam, idx, s));
            }
        }
    }
    rep
}

/// Order of Y_{e_1}⋯Y_{e_s}Y_N^{z−s}T_τ in T_σ Y_1^z is ≥ s + 1 unless s = 0 and σ = τ,
/// for σ = (1, N, d_{ℓ−1}, …, d_1), τ = (1, N, N−1, …, N−ℓ−s+1).
pub fn verify_yz(engine: &Engine, n: usize, l: usize, s: usize, z: usize) -> Result<BoundReport, PbwError> {
    let k = engine.rank();
    if l == 0 || n <= l + s || z < s || k < n {
        return Err(PbwError::Param(format!("need ℓ ≥ 1, N > ℓ + s, z ≥ s, k ≥ N (N={}, ℓ={}, s={}, z={}, k={})", n, l, s, z, k)));
    }
    if n > 5 || z > 3 {
        return Err(PbwError::Guard("N ≤ 5, z ≤ 3".into()));
    }
    let pool: Vec<usize> = (n + 1 - l - s..n).rev().collect();
    let tau_elems: Vec<usize> = std::iter::once(1).chain((n + 1 - l - s..=n).rev()).collect();
    let tau = Perm::cycle(k, &tau_elems);
    let mut rep = BoundReport::default();
    for d in arrangements(&pool, l - 1) {
        let e_set: Vec<usize> = pool.iter().copied().filter(|x| !d.contains(x)).collect();
        let mut sigma_elems = vec![1, n];
        sigma_elems.extend(d.iter().rev());
        let sigma = Perm::cycle(k, &sigma_elems);
        let mut letters: Vec<Letter> = sigma.reduced_word().into_iter().map(Letter::T).collect();
        letters.extend(std::iter::repeat(Letter::Y(1)).take(z));
        let e = engine.straighten_letters(&letters);
        let mut nu = vec![0u32; k];
        for &x in &e_set {
            nu[x - 1] += 1;
        }
        nu[n - 1] += (z - s) as u32;
        let idx = PbwIndex::new(vec![0; k], nu, tau.clone());
        rep.checked += 1;
        let ord = e.ord_coeff(&idx);
        let exempt = s == 0 && sigma == tau;
        if !exempt && ord < Order::Fin(s as i64 + 1) {
            rep.violations.push(format!("σ={} z={}: {} order {:?} < {}", sigma, z, idx, ord, s + 1));
        }
    }
    Ok(rep)
}

/// Ordered selections of `len` distinct elements from `pool`.
fn arrangements(pool: &[usize], len: usize) -> Vec<Vec<usize>> {
    if len == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (i, &x) in pool.iter().enumerate() {
        let rest: Vec<usize> = pool.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &y)| y).collect();
        for mut r in arrangements(&rest, len - 1) {
            r.insert(0, x);
            out.push(r);
        }
    }
    out
}

/// w_2 is a ϰ-factor of w_1: w_1 = σ w_2 τ with ϰ(w_1) = ϰ(σ) + ϰ(w_2) + ϰ(τ).
pub fn is_kappa_factor(w1: &Perm, w2: &Perm) -> bool {
    let target = varkappa(w1);
    let k2 = varkappa(w2);
    if k2 > target {
        return false;
    }
    Perm::all(w1.rank()).iter().any(|sigma| {
        let tau = sigma.compose(w2).inverse().compose(w1);
        varkappa(sigma) + k2 + varkappa(&tau) == target
    })
}

/// ϰ(w_1^{ς_1} w_2^{ς_2}) + ord_{T_{w_1}^{ς_1} T_{w_2}^{ς_2}}(T_w) ≥ ϰ(w), with the ϰ-factor
/// property at equality, for all w_1, w_2, w ∈ S_k and all signs.
pub fn verify_ord_ineq(engine: &Engine) -> BoundReport {
    let k = engine.rank();
    let perms = Perm::all(k);
    let mut rep = BoundReport::default();
    for w1 in &perms {
        for w2 in &perms {
            for (s1, s2) in [(false, false), (false, true), (true, false), (true, true)] {
                let prod = engine.hecke_mul(&engine.hecke_of(w1, s1), &engine.hecke_of(w2, s2));
                let a = if s1 { w1.inverse() } else { w1.clone() };
                let b = if s2 { w2.inverse() } else { w2.clone() };
                let u = a.compose(&b);
                let ku = varkappa(&u) as i64;
                for w in &perms {
                    rep.checked += 1;
                    let ord = prod.get(w).map_or(Order::Inf, |c| c.h_order());
                    let kw = varkappa(w) as i64;
                    match ord {
                        Order::Inf => {}
                        Order::Fin(o) if ku + o < kw => rep.violations.push(format!("{} {} → {}: {} + {} < {}", w1, w2, w, ku, o, kw)),
                        Order::Fin(o) if ku + o == kw && !is_kappa_factor(w, &u) => {
                            rep.violations.push(format!("{} {} → {}: equality without ϰ-factor", w1, w2, w))
                        }
                        _ => {}
                    }
                }
            }
        }
    }
    rep
}
