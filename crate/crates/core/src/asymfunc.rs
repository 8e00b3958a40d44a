//! The almost symmetric module: elements of P(k)^+ in the basis m_⟨λ|μ⟩ = x^λ m_μ[X_ℓ(λ)],
//! truncations, and the exact limit operators T, X, Y together with the limit Macdonald
//! functions and the symmetrized eigenbasis.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Mutex, OnceLock};

use crate::coeffring::{Order, RatQT};
use crate::daharep::{self, DahaError};
use crate::polyring::{monomial_string, coeff_factor, Exps, LaurentPoly};
use crate::symfunc::{v_mu, Partition, SymError, SymFn};
use crate::weyl::{as_order_lt, sgn_stat, u_stat, AsymIndex, Weight};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AsymError {
    #[error(transparent)]
    Sym(#[from] SymError),
    #[error(transparent)]
    Daha(#[from] DahaError),
    #[error("truncation rank {0} below the rank {1} of the element")]
    TruncationRank(usize, usize),
    #[error("index must be at least 1")]
    Index,
    #[error("reconstruction of {0} is inconsistent across the window")]
    Inconsistent(String),
    #[error("leading coefficient of {0} is not 1")]
    Leading(String),
}

/// A finite sum Σ c · x^α m_μ[X_k] over α ∈ Λ_k, with tail alphabet X_k = x_{k+1} + x_{k+2} + ….
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankForm {
    rank: usize,
    terms: BTreeMap<(Exps, Partition), RatQT>,
}

impl RankForm {
    pub fn zero(rank: usize) -> Self {
        RankForm { rank, terms: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn terms(&self) -> &BTreeMap<(Exps, Partition), RatQT> {
        &self.terms
    }

    pub fn add_term(&mut self, e: Exps, mu: Partition, c: RatQT) {
        debug_assert_eq!(e.len(), self.rank);
        if c.is_zero() {
            return;
        }
        let key = (e, mu);
        let v = self.terms.entry(key.clone()).or_insert_with(RatQT::zero);
        *v = v.add(&c);
        if v.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// Adds c · x^e · G[X_k] for a symmetric function G.
    pub fn add_sym(&mut self, e: &Exps, g: &SymFn, c: &RatQT) {
        for (mu, d) in g.to_m().terms() {
            self.add_term(e.clone(), mu.clone(), c.mul(d));
        }
    }

    /// Groups terms by tail partition into finite-rank polynomials.
    fn by_tail(&self) -> BTreeMap<Partition, LaurentPoly> {
        let mut out: BTreeMap<Partition, LaurentPoly> = BTreeMap::new();
        for ((e, mu), c) in &self.terms {
            out.entry(mu.clone()).or_insert_with(|| LaurentPoly::zero(self.rank)).add_term(e.clone(), c.clone());
        }
        out
    }

    fn from_tails(rank: usize, parts: BTreeMap<Partition, LaurentPoly>) -> Self {
        let mut out = RankForm::zero(rank);
        for (mu, p) in parts {
            for (e, c) in p.into_terms() {
                out.add_term(e, mu.clone(), c);
            }
        }
        out
    }

    /// Applies a finite-rank operator to the polynomial part; valid for operators that
    /// commute with symmetric functions in the tail.
    pub fn map_finite<F>(&self, op: F) -> Result<Self, AsymError>
    where
        F: Fn(&LaurentPoly) -> Result<LaurentPoly, DahaError>,
    {
        let mut parts = BTreeMap::new();
        for (mu, p) in self.by_tail() {
            parts.insert(mu, op(&p)?);
        }
        Ok(Self::from_tails(self.rank, parts))
    }

    /// One step up: m_μ[X_k] = m_μ[X_{k+1}] + Σ_{a distinct part} x_{k+1}^a m_{μ∖a}[X_{k+1}].
    pub fn raise_one(&self) -> Self {
        let mut out = RankForm::zero(self.rank + 1);
        for ((e, mu), c) in &self.terms {
            for (a, rest) in add_letter_m(mu) {
                let mut g = e.clone();
                g.push(a as i32);
                out.add_term(g, rest, c.clone());
            }
        }
        out
    }

    pub fn raise_to(&self, k: usize) -> Self {
        let mut f = self.clone();
        while f.rank < k {
            f = f.raise_one();
        }
        f
    }

    /// Rewrites the tail as X_{k−1} = x_k + X_k: returns terms x^{α'} x_k^n G[X_{k−1}] as
    /// (α' ∈ Λ_{k−1}, n, G, c).
    fn lower_tail(&self) -> Vec<(Exps, u32, SymFn, RatQT)> {
        let k = self.rank;
        let mut out = Vec::new();
        for ((e, mu), c) in &self.terms {
            for (b, g) in SymFn::m(mu.clone()).remove_letter() {
                out.push((e[..k - 1].to_vec(), e[k - 1] as u32 + b, g, c.clone()));
            }
        }
        out
    }

    /// The truncation Π_n in n ≥ k variables.
    pub fn truncate(&self, n: usize) -> Result<LaurentPoly, AsymError> {
        if n < self.rank {
            return Err(AsymError::TruncationRank(n, self.rank));
        }
        let mut out = LaurentPoly::zero(n);
        for ((e, mu), c) in &self.terms {
            let tail = SymFn::m(mu.clone()).eval_finite(n, self.rank + 1, n);
            let mut shift = e.clone();
            shift.resize(n, 0);
            out.add_scaled(&tail.shift(&shift), c);
        }
        Ok(out)
    }

    /// Canonical 𝓜_as coordinates: x^{α'}·x_k^0·m_μ[X_k] = x^{α'}m_μ[X_{k−1}] − Σ_a x^{(α',a)} m_{μ∖a}[X_k].
    pub fn canonical(&self) -> AsymFn {
        let mut out = AsymFn::zero();
        let mut cur = self.clone();
        loop {
            let r = cur.rank;
            let mut next = RankForm::zero(r.saturating_sub(1));
            for ((e, mu), c) in &cur.terms {
                if r == 0 || e[r - 1] > 0 {
                    let lam = e.iter().map(|&x| x as u32).collect();
                    out.add_term(AsymIndex::new(lam, mu.clone()), c.clone());
                    continue;
                }
                let prefix = e[..r - 1].to_vec();
                next.add_term(prefix.clone(), mu.clone(), c.clone());
                for (a, rest) in add_letter_m(mu) {
                    if a > 0 {
                        let mut lam: Vec<u32> = prefix.iter().map(|&x| x as u32).collect();
                        lam.push(a);
                        out.add_term(AsymIndex::new(lam, rest), c.neg());
                    }
                }
            }
            if r == 0 || next.terms.is_empty() {
                break;
            }
            cur = next;
        }
        out
    }
}

/// m_μ[X + y] = Σ_{a ∈ distinct parts ∪ {0}} y^a m_{μ∖a}[X].
fn add_letter_m(mu: &[u32]) -> Vec<(u32, Partition)> {
    let mut out = vec![(0, mu.to_vec())];
    let mut prev = None;
    for (i, &p) in mu.iter().enumerate() {
        if prev == Some(p) {
            continue;
        }
        prev = Some(p);
        let mut rest = mu.to_vec();
        rest.remove(i);
        out.push((p, rest));
    }
    out
}

/// An element of P_as^+ in canonical 𝓜_as coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct AsymFn {
    terms: BTreeMap<AsymIndex, RatQT>,
}

impl AsymFn {
    pub fn zero() -> Self {
        AsymFn { terms: BTreeMap::new() }
    }

    /// The basis element m_⟨λ|μ⟩.
    pub fn basis(idx: AsymIndex) -> Self {
        let mut f = Self::zero();
        f.add_term(idx, RatQT::one());
        f
    }

    /// Embeds a polynomial in x_1..x_k (tail-free).
    pub fn from_poly(p: &LaurentPoly) -> Self {
        let mut form = RankForm::zero(p.rank());
        for (e, c) in p.terms() {
            form.add_term(e.clone(), Vec::new(), c.clone());
        }
        form.canonical()
    }

    pub fn from_form(form: &RankForm) -> Self {
        form.canonical()
    }

    pub fn add_term(&mut self, idx: AsymIndex, c: RatQT) {
        if c.is_zero() {
            return;
        }
        let v = self.terms.entry(idx.clone()).or_insert_with(RatQT::zero);
        *v = v.add(&c);
        if v.is_zero() {
            self.terms.remove(&idx);
        }
    }

    /// Coordinates in the 𝓜_as basis.
    pub fn to_mas_basis(&self) -> &BTreeMap<AsymIndex, RatQT> {
        &self.terms
    }

    pub fn coeff(&self, idx: &AsymIndex) -> RatQT {
        self.terms.get(idx).cloned().unwrap_or_else(RatQT::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Smallest k with the element in P(k)^+.
    pub fn rank(&self) -> usize {
        self.terms.keys().map(|i| i.lambda.len()).max().unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|i| i.degree()).max().unwrap_or(0)
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (i, c) in &o.terms {
            r.add_term(i.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&RatQT::from_int(-1)))
    }

    pub fn scale(&self, c: &RatQT) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        AsymFn { terms: self.terms.iter().map(|(i, d)| (i.clone(), d.mul(c))).collect() }
    }

    /// The representation Σ c x^α m_μ[X_k] at a rank k ≥ rank().
    pub fn raise_rank(&self, k: usize) -> RankForm {
        let k = k.max(self.rank());
        let mut out = RankForm::zero(k);
        for (idx, c) in &self.terms {
            let mut single = RankForm::zero(idx.lambda.len());
            single.add_term(idx.lambda.iter().map(|&x| x as i32).collect(), idx.mu.clone(), c.clone());
            for (key, d) in single.raise_to(k).terms {
                out.add_term(key.0, key.1, d);
            }
        }
        out
    }

    /// Π_n F.
    pub fn truncate(&self, n: usize) -> Result<LaurentPoly, AsymError> {
        if n < self.rank() {
            return Err(AsymError::TruncationRank(n, self.rank()));
        }
        self.raise_rank(self.rank()).truncate(n)
    }

    /// Minimal t-order among the coefficients.
    pub fn min_t_order(&self) -> Order {
        self.terms.values().map(|c| c.t_order()).min().unwrap_or(Order::Inf)
    }
}

impl fmt::Display for AsymFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (idx, c) in self.terms.iter().rev() {
            let (neg, cs) = coeff_factor(c);
            let e: Vec<i32> = idx.lambda.iter().map(|&x| x as i32).collect();
            let mono = monomial_string(&e, 0);
            let mu = idx.mu.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
            let mut parts = Vec::new();
            if !cs.is_empty() && cs != "1" {
                parts.push(cs);
            }
            if !mono.is_empty() && mono != "1" {
                parts.push(mono);
            }
            if !idx.mu.is_empty() {
                parts.push(format!("m[{}][X{}]", mu, idx.lambda.len()));
            }
            if parts.is_empty() {
                parts.push("1".into());
            }
            let sep = match (first, neg) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            write!(f, "{}{}", sep, parts.join("*"))?;
            first = false;
        }
        Ok(())
    }
}

fn need_index(i: usize) -> Result<(), AsymError> {
    if i == 0 {
        Err(AsymError::Index)
    } else {
        Ok(())
    }
}

/// The limit operator 𝒯_i.
pub fn limit_T(i: usize, f: &AsymFn) -> Result<AsymFn, AsymError> {
    need_index(i)?;
    let form = f.raise_rank(f.rank().max(i + 1));
    Ok(form.map_finite(|p| daharep::apply_T(i, p))?.canonical())
}

/// The limit operator 𝒯_i^{-1}.
pub fn limit_T_inv(i: usize, f: &AsymFn) -> Result<AsymFn, AsymError> {
    need_index(i)?;
    let form = f.raise_rank(f.rank().max(i + 1));
    Ok(form.map_finite(|p| daharep::apply_T_inv(i, p))?.canonical())
}

/// The limit operator 𝒳_i.
pub fn limit_X(i: usize, f: &AsymFn) -> Result<AsymFn, AsymError> {
    need_index(i)?;
    let form = f.raise_rank(f.rank().max(i));
    Ok(form.map_finite(|p| daharep::apply_X(i, p, 1))?.canonical())
}

/// h_j[(1−t)X], cached.
pub fn h_pleth(j: u32) -> SymFn {
    static C: OnceLock<Mutex<HashMap<u32, SymFn>>> = OnceLock::new();
    let cache = C.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(v) = cache.lock().unwrap().get(&j) {
        return v.clone();
    }
    let v = SymFn::h_n(j).pleth_one_minus_t().expect("degree within cap");
    cache.lock().unwrap().insert(j, v.clone());
    v
}

/// 𝒴_1 on a rank-k form, k ≥ 1, by
/// 𝒴_1 T_1⋯T_{k−1} f x_k^n G[X_{k−1}] = t^k f(x_2..x_k) G[X_k + q x_1] Σ_{j<n} (q x_1)^{n−j} h_j[(1−t)X_k].
fn limit_y1_form(form: &RankForm) -> Result<RankForm, AsymError> {
    let k = form.rank;
    let pre = form.map_finite(|p| daharep::t_inv_chain_up(1, k - 1, p))?;
    let mut out = RankForm::zero(k);
    let tk = RatQT::qt_pow(0, k as i32);
    for (alpha, n, g, c) in pre.lower_tail() {
        if n == 0 {
            continue;
        }
        let shifted = g.add_letter();
        for j in 0..n {
            let h = h_pleth(j);
            for (a, ga) in &shifted {
                let sym = ga.mul(&h)?;
                let p = (a + n - j) as i32;
                let mut e = vec![p];
                e.extend_from_slice(&alpha);
                out.add_sym(&e, &sym, &c.mul(&tk).mul(&RatQT::qt_pow(p, 0)));
            }
        }
    }
    Ok(out)
}

/// The limit Cherednik operator 𝒴_i = t^{1−i} T_{i−1}⋯T_1 𝒴_1 T_1⋯T_{i−1}, computed exactly.
pub fn limit_Y(i: usize, f: &AsymFn) -> Result<AsymFn, AsymError> {
    need_index(i)?;
    let k = f.rank().max(i).max(1);
    let form = f.raise_rank(k);
    let pre = form.map_finite(|p| daharep::t_chain_down(1, i - 1, p))?;
    let y = limit_y1_form(&pre)?;
    let post = y.map_finite(|p| daharep::t_chain_up(1, i - 1, p))?;
    Ok(post.canonical().scale(&RatQT::qt_pow(0, 1 - i as i32)))
}

/// Residual orders of Y_i^{(n)} Π_n F − Π_n(𝒴_i F) over a window of ranks.
#[derive(Clone, Debug)]
pub struct ConvergenceReport {
    pub orders: Vec<(usize, Order)>,
    pub bound_offset: i64,
    pub passed: bool,
}

/// Compares finite-rank Cherednik operators with the exact limit on truncations.
/// Passes iff every order is ≥ n − (i + deg F) and the orders strictly increase (∞ allowed).
pub fn verify_limit_convergence(i: usize, f: &AsymFn, window: std::ops::RangeInclusive<usize>) -> Result<ConvergenceReport, AsymError> {
    let limit = limit_Y(i, f)?;
    let c = (i as u32 + f.degree()) as i64;
    let mut orders = Vec::new();
    for n in window {
        let lhs = daharep::apply_Y(i, &f.truncate(n)?)?;
        let rhs = limit.truncate(n)?;
        orders.push((n, lhs.sub(&rhs).min_t_order()));
    }
    let bound_ok = orders.iter().all(|&(n, o)| o >= Order::Fin(n as i64 - c));
    let increasing = orders.windows(2).all(|w| w[1].1 > w[0].1 || w[1].1.is_inf());
    Ok(ConvergenceReport { orders, bound_offset: c, passed: bound_ok && increasing })
}

/// Reads the coefficients x^α m_μ off a polynomial symmetric in x_{k+1}..x_n.
pub fn decode_tail_symmetric(p: &LaurentPoly, k: usize) -> RankForm {
    let mut form = RankForm::zero(k);
    for (e, c) in p.terms() {
        let tail = &e[k..];
        if tail.windows(2).all(|w| w[0] >= w[1]) {
            let mu: Partition = tail.iter().filter(|&&x| x > 0).map(|&x| x as u32).collect();
            form.add_term(e[..k].to_vec(), mu, c.clone());
        }
    }
    form
}

fn padded(lam: &[i64], n: usize) -> Weight {
    let mut v = lam.to_vec();
    v.resize(n, 0);
    v
}

fn strip(lam: &[i64]) -> Weight {
    let l = lam.iter().rposition(|&x| x != 0).map_or(0, |p| p + 1);
    lam[..l].to_vec()
}

fn em_cache() -> &'static Mutex<HashMap<Weight, AsymFn>> {
    static C: OnceLock<Mutex<HashMap<Weight, AsymFn>>> = OnceLock::new();
    C.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The limit Macdonald function ℰ_λ.
///
/// Without inner zeros, E_{λ0^m} restricts exactly, so ℰ_λ is read off E_{λ0^m} at
/// n = |λ| + ℓ(λ) + 1 variables and must agree at n + 1 and n + 2. Otherwise
/// ℰ_λ = 𝒯_i ℰ_{s_iλ} with λ_i = 0 < λ_{i+1}.
pub fn limit_macdonald(lam: &[i64]) -> Result<AsymFn, AsymError> {
    let lam = strip(lam);
    if lam.iter().any(|&x| x < 0) {
        return Err(DahaError::NegativeWeight.into());
    }
    if let Some(v) = em_cache().lock().unwrap().get(&lam) {
        return Ok(v.clone());
    }
    let k = lam.len();
    let out = if let Some(i) = (1..k).find(|&i| lam[i - 1] == 0 && lam[i] > 0) {
        let mut mu = lam.clone();
        mu.swap(i - 1, i);
        limit_T(i, &limit_macdonald(&mu)?)?
    } else {
        let d: i64 = lam.iter().sum();
        let n0 = d as usize + k + 1;
        let mut found: Option<AsymFn> = None;
        for n in n0..n0 + 3 {
            let e = daharep::macdonald_E(&padded(&lam, n))?;
            let cand = decode_tail_symmetric(&e, k).canonical();
            match &found {
                None => found = Some(cand),
                Some(prev) if *prev == cand => {}
                Some(_) => return Err(AsymError::Inconsistent(format!("{:?}", lam))),
            }
        }
        found.expect("nonempty window")
    };
    em_cache().lock().unwrap().insert(lam, out.clone());
    Ok(out)
}

/// λ with no zero before its last nonzero entry.
pub fn has_no_inner_zeros(lam: &[i64]) -> bool {
    let s = strip(lam);
    s.iter().all(|&x| x > 0)
}

/// Min t-orders of Π_n ℰ_λ − E_{λ0^{n−ℓ}} over a window (the sequence converges t-adically).
pub fn macdonald_residual_orders(lam: &[i64], window: std::ops::RangeInclusive<usize>) -> Result<Vec<(usize, Order)>, AsymError> {
    let em = limit_macdonald(lam)?;
    let s = strip(lam);
    let mut out = Vec::new();
    for n in window {
        let e = daharep::macdonald_E(&padded(&s, n))?;
        out.push((n, em.truncate(n)?.sub(&e).min_t_order()));
    }
    Ok(out)
}

/// 𝒴_i ℰ_λ = sgn_i(λ) q^{λ_i} t^{u_λ(i)} ℰ_λ for 1 ≤ i ≤ ℓ(λ) + 1.
pub fn check_limit_eigen(lam: &[i64]) -> Result<bool, AsymError> {
    let s = strip(lam);
    let em = limit_macdonald(&s)?;
    for i in 1..=s.len() + 1 {
        let ev = limit_eigenvalue(&s, i);
        if limit_Y(i, &em)? != em.scale(&ev) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// sgn_i(λ) q^{λ_i} t^{u_λ(i)}; zero when i > ℓ(λ).
pub fn limit_eigenvalue(lam: &[i64], i: usize) -> RatQT {
    if sgn_stat(lam, i) == 0 {
        return RatQT::zero();
    }
    RatQT::qt_pow(lam[i - 1] as i32, u_stat(lam, i).expect("index in range") as i32)
}

/// The limit tail symmetrizer 𝛆_j : P(j+1)^+ → P(j)^+.
///
/// The finite symmetrizer over x_{j+1}..x_n sends x_{j+1}^e to h_e[(1−t)X_j]/(1 − t^{n−j}) for
/// e ≥ 1, and is linear over functions symmetric in that alphabet.
pub fn limit_symmetrizer_step(j: usize, f: &AsymFn) -> Result<AsymFn, AsymError> {
    let form = f.raise_rank(j + 1);
    debug_assert_eq!(form.rank, j + 1);
    let mut out = RankForm::zero(j);
    for (alpha, e, g, c) in form.lower_tail() {
        let sym = if e == 0 { g } else { g.mul(&h_pleth(e))? };
        out.add_sym(&alpha, &sym, &c);
    }
    Ok(out.canonical())
}

/// 𝛆_k = 𝛆_k ∘ 𝛆_{k+1} ∘ ⋯ applied from the rank of f down to k.
pub fn limit_symmetrizer(k: usize, f: &AsymFn) -> Result<AsymFn, AsymError> {
    let mut g = f.clone();
    for j in (k..f.rank()).rev() {
        g = limit_symmetrizer_step(j, &g)?;
    }
    Ok(g)
}

/// Ẽ_⟨λ|μ⟩ = 𝛆_{ℓ(λ)} ℰ_{λ∗μ} / ((1−t)^{ℓ(μ)} v_μ(t)).
pub fn tilde_E(idx: &AsymIndex) -> Result<AsymFn, AsymError> {
    let lam = idx.concat();
    let em = limit_macdonald(&lam)?;
    let sym = limit_symmetrizer(idx.lambda.len(), &em)?;
    let norm = RatQT::one().sub(&RatQT::t()).pow(idx.mu.len() as i32).mul(&v_mu(&idx.mu));
    let out = sym.scale(&norm.inv().expect("nonzero normalization"));
    if !out.coeff(idx).is_one() {
        return Err(AsymError::Leading(idx.to_string()));
    }
    Ok(out)
}

/// Eigenvalue of 𝒴_i on Ẽ_⟨λ|μ⟩: that of m_⟨λ|μ⟩ on the diagonal.
pub fn tilde_eigenvalue(idx: &AsymIndex, i: usize) -> RatQT {
    let lam: Weight = idx.lambda.iter().map(|&x| x as i64).collect();
    if sgn_stat(&lam, i) == 0 {
        return RatQT::zero();
    }
    let w = idx.concat();
    RatQT::qt_pow(lam[i - 1] as i32, u_stat(&w, i).expect("index in range") as i32)
}

/// Result of the triangularity check of 𝒴_i on a basis element.
#[derive(Clone, Debug)]
pub struct TriangularityReport {
    pub diagonal: RatQT,
    pub expected: RatQT,
    pub offending: Vec<AsymIndex>,
}

impl TriangularityReport {
    pub fn passed(&self) -> bool {
        self.diagonal == self.expected && self.offending.is_empty()
    }
}

/// 𝒴_i m_⟨λ|μ⟩ ∈ sgn_i(λ) q^{λ_i} t^{u_{λ∗μ}(i)} m_⟨λ|μ⟩ + Σ_{≺} 𝕂 m.
pub fn check_cY_triangularity(idx: &AsymIndex, i: usize) -> Result<TriangularityReport, AsymError> {
    let y = limit_Y(i, &AsymFn::basis(idx.clone()))?;
    let offending = y.to_mas_basis().keys().filter(|j| *j != idx && !as_order_lt(j, idx)).cloned().collect();
    Ok(TriangularityReport { diagonal: y.coeff(idx), expected: tilde_eigenvalue(idx, i), offending })
}

/// Every index of the support satisfies ⪯ idx.
pub fn support_below(f: &AsymFn, idx: &AsymIndex) -> bool {
    f.to_mas_basis().keys().all(|j| j == idx || as_order_lt(j, idx))
}

/// All ⟨λ|μ⟩ with |λ| + |μ| ≤ d and ℓ(λ) ≤ l.
pub fn asym_indices(d: u32, l: usize) -> Vec<AsymIndex> {
    let mut out = Vec::new();
    for len in 0..=l {
        for total in 0..=d {
            for lam_size in 0..=total {
                for lam in strict_compositions(len, lam_size) {
                    for mu in crate::symfunc::partitions(total - lam_size) {
                        out.push(AsymIndex::new(lam.clone(), mu));
                    }
                }
            }
        }
    }
    out
}

/// Compositions of n with exactly `len` entries and a positive last entry.
pub fn strict_compositions(len: usize, n: u32) -> Vec<Vec<u32>> {
    if len == 0 {
        return if n == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for last in 1..=n {
        for mut c in crate::weyl::compositions(len - 1, n - last) {
            c.push(last);
            out.push(c);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(s: &str) -> RatQT {
        RatQT::parse(s).unwrap()
    }

    fn idx(l: &[u32], m: &[u32]) -> AsymIndex {
        AsymIndex::new(l.to_vec(), m.to_vec())
    }

    fn asym(v: &[(&[u32], &[u32], &str)]) -> AsymFn {
        let mut f = AsymFn::zero();
        for (l, m, c) in v {
            f.add_term(idx(l, m), r(c));
        }
        f
    }

    #[test]
    fn basis_examples() {
        let mut form = RankForm::zero(1);
        form.add_term(vec![1], vec![1], RatQT::one());
        assert_eq!(form.canonical(), asym(&[(&[1], &[1], "1")]));
        assert_eq!(RankForm { rank: 0, terms: [((vec![], vec![2]), RatQT::one())].into() }.canonical(), asym(&[(&[], &[2], "1")]));
        let mut form = RankForm::zero(3);
        form.add_term(vec![0, 2, 0], vec![1], RatQT::one());
        // x^{(0,2)} m_1[X_3] = x^{(0,2)} m_1[X_2] − x^{(0,2,1)}
        assert_eq!(form.canonical(), asym(&[(&[0, 2], &[1], "1"), (&[0, 2, 1], &[], "-1")]));
    }

    #[test]
    fn raise_examples() {
        let f = asym(&[(&[], &[1], "1")]);
        let mut expect = RankForm::zero(2);
        expect.add_term(vec![1, 0], vec![], RatQT::one());
        expect.add_term(vec![0, 1], vec![], RatQT::one());
        expect.add_term(vec![0, 0], vec![1], RatQT::one());
        assert_eq!(f.raise_rank(2), expect);
        let g = asym(&[(&[], &[1, 1], "1")]);
        let form = g.raise_rank(1);
        let mut expect = RankForm::zero(1);
        expect.add_term(vec![1], vec![1], RatQT::one());
        expect.add_term(vec![0], vec![1, 1], RatQT::one());
        assert_eq!(form, expect);
        assert_eq!(form.truncate(4).unwrap(), g.truncate(4).unwrap());
        assert_eq!(form.canonical(), g);
    }

    #[test]
    fn truncate_examples() {
        let x = |e: &[i32]| LaurentPoly::monomial(e.to_vec(), RatQT::one());
        assert_eq!(asym(&[(&[], &[1], "1")]).truncate(2).unwrap(), x(&[1, 0]).add(&x(&[0, 1])));
        assert_eq!(asym(&[(&[1], &[1], "1")]).truncate(3).unwrap(), x(&[1, 1, 0]).add(&x(&[1, 0, 1])));
        assert!(asym(&[(&[2, 1], &[3], "1")]).truncate(2).unwrap().is_zero());
        assert_eq!(asym(&[(&[2, 1], &[], "1")]).truncate(2).unwrap(), x(&[2, 1]));
        assert!(asym(&[(&[2, 1], &[], "1")]).truncate(1).is_err());
    }

    #[test]
    fn t_and_x_examples() {
        // T_1(x_1 x_2 + x_1 m_1[X_2]) = x_1 x_2 + (x_2 + (1−t) x_1) m_1[X_2]
        let f = asym(&[(&[1], &[1], "1")]);
        let got = limit_T(1, &f).unwrap();
        assert_eq!(got, asym(&[(&[1, 1], &[], "t"), (&[0, 1], &[1], "1"), (&[1], &[1], "1-t")]));
        assert_eq!(got.truncate(5).unwrap(), daharep::apply_T(1, &f.truncate(5).unwrap()).unwrap());
        let g = limit_X(1, &asym(&[(&[], &[1], "1")])).unwrap();
        assert_eq!(g, asym(&[(&[2], &[], "1"), (&[1], &[1], "1")]));
        // T_j F = F for F ∈ P(k)^+, j > k
        assert_eq!(limit_T(3, &f).unwrap(), f);
    }

    #[test]
    fn y_examples() {
        assert!(limit_Y(1, &asym(&[(&[], &[1], "1")])).unwrap().is_zero());
        assert_eq!(limit_Y(1, &asym(&[(&[1], &[], "1")])).unwrap(), asym(&[(&[1], &[], "q*t")]));
        // diagonal value q t^{u_{(1,1)}(1)} = q t^2; the strictly lower part vanishes here
        let f = asym(&[(&[1], &[1], "1")]);
        assert_eq!(limit_Y(1, &f).unwrap(), asym(&[(&[1], &[1], "q*t^2")]));
    }

    #[test]
    fn y_matches_finite_rank_limit() {
        for (l, m) in [(vec![], vec![1]), (vec![1], vec![1]), (vec![0, 1], vec![]), (vec![2], vec![1]), (vec![1], vec![1, 1])] {
            let f = AsymFn::basis(AsymIndex::new(l.clone(), m.clone()));
            for i in 1..=3 {
                let start = f.rank().max(i) + 1;
                let rep = verify_limit_convergence(i, &f, start..=start + 3).unwrap();
                assert!(rep.passed, "{:?}|{:?} i={} {:?}", l, m, i, rep.orders);
            }
        }
        let f = asym(&[(&[1], &[], "1")]);
        let rep = verify_limit_convergence(1, &f, 1..=4).unwrap();
        assert!(rep.orders.iter().all(|(_, o)| o.is_inf()));
    }

    #[test]
    fn sequence_limit_example() {
        // f_k = (1 + t + … + t^k) e_2[x_1..x_k] tends to e_2[X]/(1 − t)
        let e2 = asym(&[(&[], &[1, 1], "1/(1-t)")]);
        let mut prev = Order::Fin(i64::MIN);
        for k in 3..=6 {
            let coeff = daharep::t_integer(k as u32 + 1);
            let fk = SymFn::m(vec![1, 1]).eval_finite(k, 1, k).scale(&coeff);
            let o = fk.sub(&e2.truncate(k).unwrap()).min_t_order();
            assert_eq!(o, Order::Fin(k as i64 + 1));
            assert!(o > prev);
            prev = o;
        }
    }

    #[test]
    fn y_vanishing_and_commuting() {
        for f in [asym(&[(&[], &[2, 1], "1")]), asym(&[(&[1], &[1], "1"), (&[], &[2], "q")])] {
            let k = f.rank();
            for i in k + 1..=k + 2 {
                assert!(limit_Y(i, &f).unwrap().is_zero());
            }
        }
        for m in asym_indices(3, 2) {
            let f = AsymFn::basis(m);
            for i in 1..=2 {
                for j in i + 1..=3 {
                    let a = limit_Y(i, &limit_Y(j, &f).unwrap()).unwrap();
                    let b = limit_Y(j, &limit_Y(i, &f).unwrap()).unwrap();
                    assert_eq!(a, b);
                }
            }
        }
    }

    #[test]
    fn macdonald_limit_examples() {
        assert_eq!(limit_macdonald(&[1, 1]).unwrap(), asym(&[(&[1, 1], &[], "1")]));
        assert_eq!(limit_macdonald(&[1]).unwrap(), asym(&[(&[1], &[], "1")]));
        let e01 = limit_macdonald(&[0, 1]).unwrap();
        assert_eq!(e01, limit_T(1, &limit_macdonald(&[1]).unwrap()).unwrap());
        assert!(check_limit_eigen(&[0, 1]).unwrap());
        let e2 = limit_macdonald(&[2]).unwrap();
        assert_eq!(limit_Y(1, &e2).unwrap(), e2.scale(&r("q^2*t")));
        for lam in [vec![2, 1], vec![1, 2], vec![1, 0, 1], vec![3]] {
            assert!(check_limit_eigen(&lam).unwrap(), "{:?}", lam);
        }
        let orders = macdonald_residual_orders(&[0, 1], 3..=6).unwrap();
        assert!(orders.windows(2).all(|w| w[1].1 > w[0].1), "{:?}", orders);
    }

    #[test]
    fn tilde_e_examples() {
        assert_eq!(tilde_E(&idx(&[], &[1])).unwrap(), asym(&[(&[], &[1], "1")]));
        assert_eq!(tilde_E(&idx(&[1], &[])).unwrap(), limit_macdonald(&[1]).unwrap());
        assert_eq!(v_mu(&[2, 2, 1]), r("1+t"));
        for m in [idx(&[], &[1, 1]), idx(&[], &[2]), idx(&[1], &[1]), idx(&[0, 1], &[1])] {
            let e = tilde_E(&m).unwrap();
            assert!(support_below(&e, &m), "{}", m);
            for i in 1..=m.lambda.len() + 1 {
                assert_eq!(limit_Y(i, &e).unwrap(), e.scale(&tilde_eigenvalue(&m, i)), "{} i={}", m, i);
            }
        }
    }

    #[test]
    fn symmetrizer_matches_finite_rank() {
        // 𝛆_1 against ε_1^{(n)} on truncations: the difference tends to zero t-adically
        let f = limit_macdonald(&[1, 1]).unwrap();
        let lim = limit_symmetrizer(1, &f).unwrap();
        let mut prev = Order::Fin(i64::MIN);
        for n in 3..=5 {
            let fin = daharep::symmetrizer_eps(1, &f.truncate(n).unwrap()).unwrap();
            let o = fin.sub(&lim.truncate(n).unwrap()).min_t_order();
            assert!(o > prev, "{:?}", o);
            prev = o;
        }
    }

    #[test]
    fn cy_triangularity_examples() {
        let rep = check_cY_triangularity(&idx(&[1], &[]), 1).unwrap();
        assert!(rep.passed());
        assert_eq!(rep.diagonal, r("q*t"));
        let rep = check_cY_triangularity(&idx(&[], &[1]), 1).unwrap();
        assert!(rep.passed());
        assert!(rep.diagonal.is_zero());
        assert!(check_cY_triangularity(&idx(&[1], &[1]), 1).unwrap().passed());
    }

    fn small_asym() -> impl Strategy<Value = AsymFn> {
        let idxs = asym_indices(4, 2);
        prop::collection::vec((prop::sample::select(idxs), -3i64..4), 1..4).prop_map(|v| {
            let mut f = AsymFn::zero();
            for (i, c) in v {
                f.add_term(i, RatQT::from_int(c));
            }
            f
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn raise_lower_round_trip(f in small_asym(), extra in 0usize..3) {
            let k = f.rank() + extra;
            prop_assert_eq!(f.raise_rank(k).canonical(), f.clone());
            let n = k + 5;
            prop_assert_eq!(f.raise_rank(k).truncate(n).unwrap(), f.truncate(n).unwrap());
        }

        #[test]
        fn operators_preserve_rank(f in small_asym()) {
            let k = f.rank().max(1);
            for i in 1..=k {
                prop_assert!(limit_Y(i, &f).unwrap().rank() <= k);
                prop_assert!(limit_X(i, &f).unwrap().rank() <= k);
                if i < k {
                    prop_assert!(limit_T(i, &f).unwrap().rank() <= k);
                }
            }
        }

        #[test]
        fn truncation_compatibility(f in small_asym()) {
            let n = f.rank() + 5;
            let p = f.truncate(n).unwrap();
            prop_assert_eq!(limit_T(1, &f).unwrap().truncate(n).unwrap(), daharep::apply_T(1, &p).unwrap());
            prop_assert_eq!(limit_X(2, &f).unwrap().truncate(n).unwrap(), daharep::apply_X(2, &p, 1).unwrap());
        }
    }
}
