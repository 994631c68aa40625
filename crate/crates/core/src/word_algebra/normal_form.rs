//! Normal forms in the even subalgebra and the exact rewriting engine.
//!
//! The engine works with abstract generators `a_1 = x, a_2, ..., a_{n-2}`
//! (images of `y_1, ..., y_{n-2}`) subject to
//!
//! ```text
//! x^3 = 1 + k x - k x^2,                  a_i^2 = 1            (i > 1)
//! a_i a_{i-1} a_i = a_{i-1}^{-1} a_i a_{i-1}^{-1} - k (a_i - a_{i-1}^{-1})
//! a_i x = x^{-1} a_i                      (i > 2)
//! a_i a_j = a_j a_i                       (i, j > 1, |i - j| > 1)
//! ```
//!
//! with `k = ((q - 1)/(q + 1))^2`. Every monomial `U_1 U_2 ... U_M`
//! (`M = n - 2`) has `U_m` drawn from the staircase set
//! `{1, a_m, a_m a_{m-1}, ..., a_m ... a_2 a_1, a_m ... a_2 a_1^2}`, indexed
//! here by `0..=m+1`. Products are computed by right multiplication with one
//! generator at a time: `U_m a_j` is rewritten as a combination of
//! `L U_m'` with `L` a word in lower generators, and `prefix * L` is
//! normalized recursively.
//!
//! Internally coefficients are polynomials in `k` with rational
//! coefficients; they are converted to rational functions of `q` on output.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};

use super::words::YWord;
use crate::error::{Error, Result};
use crate::scalars::{Poly, RationalFunction};

/// Factor choices `(k_1, ..., k_M)` with `0 <= k_m <= m + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalFormMonomial {
    factors: Vec<u8>,
}

impl NormalFormMonomial {
    pub fn new(factors: Vec<u8>) -> Result<Self> {
        for (idx, &k) in factors.iter().enumerate() {
            if k as usize > idx + 2 {
                return Err(Error::InvalidInput(format!(
                    "factor {} has index {k}, at most {} allowed",
                    idx + 1,
                    idx + 2
                )));
            }
        }
        Ok(NormalFormMonomial { factors })
    }

    pub fn unit(n: usize) -> Self {
        NormalFormMonomial {
            factors: vec![0; n.saturating_sub(2)],
        }
    }

    pub fn factors(&self) -> &[u8] {
        &self.factors
    }

    /// Algebra size parameter `n = M + 2`.
    pub fn n(&self) -> usize {
        self.factors.len() + 2
    }

    pub fn is_unit(&self) -> bool {
        self.factors.iter().all(|&k| k == 0)
    }

    /// The monomial spelled out as a word in `y_1, ..., y_{n-2}`.
    pub fn word(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (idx, &k) in self.factors.iter().enumerate() {
            out.extend(staircase(idx + 1, k as usize));
        }
        out
    }
}

impl fmt::Display for NormalFormMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = self.word();
        if w.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = w.iter().map(|i| format!("y{i}")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Letters of the `k`-th element of the staircase set for `m`.
fn staircase(m: usize, k: usize) -> Vec<usize> {
    if k <= m {
        (m + 1 - k..=m).rev().collect()
    } else {
        let mut w: Vec<usize> = (1..=m).rev().collect();
        w.push(1);
        w
    }
}

/// All `n!/2` monomials, lexicographic in the factor choices.
pub fn enumerate_monomials(n: usize) -> Vec<NormalFormMonomial> {
    let mut out = vec![Vec::new()];
    for m in 1..=n.saturating_sub(2) {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<u8>| {
                (0..=(m as u8 + 1)).map(move |k| {
                    let mut v = prefix.clone();
                    v.push(k);
                    v
                })
            })
            .collect();
    }
    out.into_iter().map(|factors| NormalFormMonomial { factors }).collect()
}

/// An exact combination of normal-form monomials with coefficients in `Q(q)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalFormCombination {
    n: usize,
    terms: BTreeMap<NormalFormMonomial, RationalFunction>,
}

impl NormalFormCombination {
    pub fn zero(n: usize) -> Self {
        NormalFormCombination {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn unit(n: usize) -> Self {
        Self::monomial(NormalFormMonomial::unit(n), RationalFunction::one())
    }

    pub fn monomial(m: NormalFormMonomial, coeff: RationalFunction) -> Self {
        let mut out = Self::zero(m.n());
        out.add_term(m, coeff);
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<NormalFormMonomial, RationalFunction> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &NormalFormMonomial) -> RationalFunction {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: NormalFormMonomial, coeff: RationalFunction) {
        if coeff.is_zero() {
            return;
        }
        let sum = match self.terms.get(&m) {
            Some(old) => old + &coeff,
            None => coeff,
        };
        if sum.is_zero() {
            self.terms.remove(&m);
        } else {
            self.terms.insert(m, sum);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &RationalFunction) -> Self {
        let mut out = Self::zero(self.n);
        for (m, a) in &self.terms {
            out.add_term(m.clone(), a * c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-RationalFunction::one()))
    }
}

impl fmt::Display for NormalFormCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| format!("[{c}] {m}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// A combination with coefficients polynomial in `k`.
type KComb = BTreeMap<Vec<u8>, Poly>;
/// Normal forms of `mono * a_j`, keyed by (mono, j).
type ProductCache = HashMap<(Vec<u8>, usize), Arc<KComb>>;

fn add_into(acc: &mut KComb, key: Vec<u8>, c: &Poly) {
    if c.is_zero() {
        return;
    }
    let slot = acc.entry(key.clone()).or_default();
    *slot = &*slot + c;
    if slot.is_zero() {
        acc.remove(&key);
    }
}

fn kappa() -> Poly {
    Poly::q()
}

fn kc(c: i64) -> Poly {
    Poly::from_i64(c)
}

/// `x^e` reduced to `c_0 + c_1 x + c_2 x^2` using the cubic relation.
fn xpow(e: i32) -> [Poly; 3] {
    let k = kappa();
    // multiplication by x: (c0, c1, c2) -> (c2, c0 + k c2, c1 - k c2)
    let times_x = |c: [Poly; 3]| -> [Poly; 3] {
        let [c0, c1, c2] = c;
        [c2.clone(), &c0 + &(&k * &c2), &c1 - &(&k * &c2)]
    };
    // x^{-1} = x^2 + k x - k: (c0, c1, c2) -> c0 x^{-1} + c1 + c2 x
    let times_inv = |c: [Poly; 3]| -> [Poly; 3] {
        let [c0, c1, c2] = c;
        [&c1 - &(&k * &c0), &c2 + &(&k * &c0), c0]
    };
    let mut acc = [Poly::one(), Poly::zero(), Poly::zero()];
    for _ in 0..e.unsigned_abs() {
        acc = if e > 0 { times_x(acc) } else { times_inv(acc) };
    }
    acc
}

/// One rewriting term `coeff * L * U_m(k')`.
#[derive(Clone, Debug)]
struct Term {
    coeff: Poly,
    lower: Vec<usize>,
    k: usize,
}

fn term(coeff: Poly, lower: Vec<usize>, k: usize) -> Term {
    Term { coeff, lower, k }
}

/// `letters x^e` expanded into words `letters 1^t` with coefficients.
fn lower(letters: &[usize], e: i32) -> Vec<(Poly, Vec<usize>)> {
    xpow(e)
        .into_iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(t, c)| {
            let mut w = letters.to_vec();
            w.extend(std::iter::repeat_n(1, t));
            (c, w)
        })
        .collect()
}

/// `a_m ... a_2 x^e` as staircase indices `m - 1 + t`.
fn stair_tail(m: usize, e: i32) -> Vec<(Poly, usize)> {
    xpow(e)
        .into_iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(t, c)| (c, m - 1 + t))
        .collect()
}

/// Lower word times `stair_tail`, all terms scaled by `scale`.
fn lower_times_tail(scale: &Poly, lw: Vec<(Poly, Vec<usize>)>, tail: &[(Poly, usize)]) -> Vec<Term> {
    let mut out = Vec::new();
    for (c1, w) in &lw {
        for (c2, k) in tail {
            out.push(term(&(scale * c1) * c2, w.clone(), *k));
        }
    }
    out
}

fn lower_at(scale: &Poly, lw: Vec<(Poly, Vec<usize>)>, k: usize) -> Vec<Term> {
    lw.into_iter().map(|(c, w)| term(scale * &c, w, k)).collect()
}

fn sign(c: usize) -> i32 {
    if c.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Letters `hi, hi - 1, ..., lo`, empty when `hi < lo`.
fn down(hi: usize, lo: usize) -> Vec<usize> {
    if hi < lo {
        Vec::new()
    } else {
        (lo..=hi).rev().collect()
    }
}

/// Power of `x` ending `U_m(k)`, and the lowest letter of its staircase.
fn shape_of(m: usize, k: usize) -> (i32, usize) {
    match k {
        _ if k == m + 1 => (2, 1),
        _ if k == m => (1, 1),
        _ => (0, m + 1 - k),
    }
}

/// `U_m(k) a_j` for `m >= 2` as terms `coeff * L * U_m(k')`.
fn table(m: usize, k: usize, j: usize) -> Vec<Term> {
    let one = kc(1);
    let k_ = kappa();
    let mk = -&k_;
    let (e, p) = shape_of(m, k);
    if k == 0 {
        return if j == m {
            vec![term(one, vec![], 1)]
        } else {
            vec![term(one, vec![j], 0)]
        };
    }
    if j == m {
        if k == 1 {
            return vec![term(one, vec![], 0)];
        }
        if m == 2 {
            if k == 2 {
                // a_2 x a_2 = x^{-1} a_2 x^{-1} - k a_2 + k x^{-1}
                let mut out = lower_times_tail(&one, lower(&[], -1), &stair_tail(2, -1));
                out.push(term(mk, vec![], 1));
                out.extend(lower_at(&k_, lower(&[], -1), 0));
                return out;
            }
            // a_2 x^2 a_2 = x a_2 x + k x - k a_2 + k - k a_2 x a_2
            let mut out = vec![
                term(one, vec![1], 2),
                term(k_.clone(), vec![1], 0),
                term(mk.clone(), vec![], 1),
                term(k_.clone(), vec![], 0),
            ];
            out.extend(scaled(&mk, table(2, 2, 2)));
            return out;
        }
        // a_m a_{m-1} T a_m = (a_{m-1} a_m a_{m-1} - k a_m + k a_{m-1}) T'
        // where T' is T with x inverted
        let t_letters = down(m - 2, p.max(2));
        let mut out = Vec::new();
        if e == 0 {
            out.push(term(one, vec![m - 1], k));
        } else {
            out.extend(stair_tail(m, -e).into_iter().map(|(c, kk)| term(c, vec![m - 1], kk)));
        }
        out.extend(lower_at(&mk, lower(&t_letters, e), 1));
        let mut with_top = vec![m - 1];
        with_top.extend(&t_letters);
        out.extend(lower_at(&k_, lower(&with_top, -e), 0));
        return out;
    }
    // j < m
    if k <= m {
        if j + 2 <= p {
            return if j >= 2 {
                vec![term(one, vec![j], k)]
            } else {
                lower_at(&one, lower(&[], sign(k)), k)
            };
        }
        if j + 1 == p {
            return vec![term(one, vec![], k + 1)];
        }
        if j == p {
            return if j >= 2 {
                vec![term(one, vec![], k - 1)]
            } else {
                vec![term(one, vec![], m + 1)]
            };
        }
        if j >= 3 {
            return general_inner(m, k, j);
        }
        // j == 2, k == m: a_m ... a_3 (a_2 x a_2)
        let sgn = sign(m - 2);
        let mut out = lower_times_tail(&one, lower(&[], -sgn), &stair_tail(m, -1));
        out.push(term(mk, vec![], m - 1));
        out.extend(lower_at(&k_, lower(&[], -sgn), m - 2));
        return out;
    }
    // k == m + 1
    if j == 1 {
        return stair_tail(m, 3).into_iter().map(|(c, kk)| term(c, vec![], kk)).collect();
    }
    if j >= 3 {
        return general_inner(m, k, j);
    }
    // j == 2: a_m ... a_3 (a_2 x^2 a_2)
    let sgn = sign(m - 2);
    let mut out = lower_at(&one, lower(&[], sgn), m);
    out.extend(lower_at(&k_, lower(&[], sgn), m - 2));
    out.push(term(mk.clone(), vec![], m - 1));
    out.push(term(k_, vec![], m - 2));
    out.extend(scaled(&mk, table(m, m, 2)));
    out
}

/// `U_m(k) a_j` with `3 <= j < m` and `a_j` inside the staircase.
fn general_inner(m: usize, k: usize, j: usize) -> Vec<Term> {
    let one = kc(1);
    let k_ = kappa();
    let (e, p) = shape_of(m, k);
    let r_letters = down(j - 2, p.max(2));
    let flip = sign(m - j);
    let mut out = Vec::new();
    if e == 0 {
        out.push(term(one, vec![j - 1], k));
    } else {
        out.extend(stair_tail(m, -e).into_iter().map(|(c, kk)| term(c, vec![j - 1], kk)));
    }
    out.extend(lower_at(&-&k_, lower(&r_letters, e * flip), m - j + 1));
    let mut with_top = vec![j - 1];
    with_top.extend(&r_letters);
    out.extend(lower_at(&k_, lower(&with_top, -e * flip), m - j));
    out
}

fn scaled(c: &Poly, terms: Vec<Term>) -> Vec<Term> {
    terms
        .into_iter()
        .map(|t| term(c * &t.coeff, t.lower, t.k))
        .collect()
}

/// Caching rewriting engine for one algebra size `n`.
#[derive(Clone)]
pub struct RewritingEngine {
    n: usize,
    cache: Arc<Mutex<ProductCache>>,
    c_squared_powers: Arc<Mutex<Vec<RationalFunction>>>,
}

impl fmt::Debug for RewritingEngine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RewritingEngine").field("n", &self.n).finish()
    }
}

impl RewritingEngine {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidInput(format!("n = {n} must be at least 2")));
        }
        Ok(RewritingEngine {
            n,
            cache: Arc::new(Mutex::new(HashMap::new())),
            c_squared_powers: Arc::new(Mutex::new(vec![RationalFunction::one()])),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `mono * a_j` where `mono` has `m = mono.len()` factors and `j <= m`.
    fn mul_gen(&self, mono: &[u8], j: usize) -> Arc<KComb> {
        let key = (mono.to_vec(), j);
        if let Some(hit) = self.cache.lock().expect("cache lock").get(&key) {
            return Arc::clone(hit);
        }
        let m = mono.len();
        let mut out = KComb::new();
        if m == 1 {
            match mono[0] {
                0 => add_into(&mut out, vec![1], &kc(1)),
                1 => add_into(&mut out, vec![2], &kc(1)),
                _ => {
                    for (t, c) in xpow(3).iter().enumerate() {
                        add_into(&mut out, vec![t as u8], c);
                    }
                }
            }
        } else {
            let prefix = &mono[..m - 1];
            for t in table(m, mono[m - 1] as usize, j) {
                let head = self.mul_word_k(prefix, &t.lower);
                for (h, c) in head.iter() {
                    let mut key = h.clone();
                    key.push(t.k as u8);
                    add_into(&mut out, key, &(c * &t.coeff));
                }
            }
        }
        let out = Arc::new(out);
        self.cache
            .lock()
            .expect("cache lock")
            .insert(key, Arc::clone(&out));
        out
    }

    fn mul_word_k(&self, mono: &[u8], word: &[usize]) -> KComb {
        let mut acc = KComb::new();
        acc.insert(mono.to_vec(), kc(1));
        self.apply_word(acc, word)
    }

    fn apply_word(&self, mut acc: KComb, word: &[usize]) -> KComb {
        for &j in word {
            let mut next = KComb::new();
            for (mono, c) in &acc {
                for (r, d) in self.mul_gen(mono, j).iter() {
                    add_into(&mut next, r.clone(), &(c * d));
                }
            }
            acc = next;
        }
        acc
    }

    fn c_squared_pow(&self, e: usize) -> RationalFunction {
        let mut powers = self.c_squared_powers.lock().expect("powers lock");
        while powers.len() <= e {
            let next = powers.last().expect("nonempty") * &RationalFunction::c_squared();
            powers.push(next);
        }
        powers[e].clone()
    }

    /// Substitutes `k = c^2` in a polynomial coefficient.
    fn to_rf(&self, p: &Poly) -> RationalFunction {
        let mut acc = RationalFunction::zero();
        for (e, a) in p.coeffs().iter().enumerate() {
            acc = &acc + &self.c_squared_pow(e).scale(a);
        }
        acc
    }

    fn finish(&self, comb: KComb) -> NormalFormCombination {
        let mut out = NormalFormCombination::zero(self.n);
        for (factors, c) in comb {
            out.add_term(NormalFormMonomial { factors }, self.to_rf(&c));
        }
        out
    }

    fn check_letters(&self, letters: &[usize]) -> Result<()> {
        match letters.iter().find(|&&i| i == 0 || i + 2 > self.n) {
            Some(bad) => Err(Error::InvalidInput(format!("y{bad} out of range for n = {}", self.n))),
            None => Ok(()),
        }
    }

    /// Normal form of a word in `y_1, ..., y_{n-2}`, coefficients as
    /// polynomials in `k = c^2`.
    pub fn rewrite_letters_kappa(&self, letters: &[usize]) -> Result<BTreeMap<NormalFormMonomial, Poly>> {
        self.check_letters(letters)?;
        let unit = NormalFormMonomial::unit(self.n);
        Ok(self
            .mul_word_k(&unit.factors, letters)
            .into_iter()
            .map(|(factors, c)| (NormalFormMonomial { factors }, c))
            .collect())
    }

    pub fn rewrite_letters(&self, letters: &[usize]) -> Result<NormalFormCombination> {
        self.check_letters(letters)?;
        let unit = NormalFormMonomial::unit(self.n);
        Ok(self.finish(self.mul_word_k(&unit.factors, letters)))
    }

    pub fn rewrite(&self, w: &YWord) -> Result<NormalFormCombination> {
        self.rewrite_letters(w.letters())
    }

    /// Rewrites a combination: each monomial word is pushed through the
    /// engine and the results are recombined.
    pub fn normalize(&self, a: &NormalFormCombination) -> Result<NormalFormCombination> {
        let mut out = NormalFormCombination::zero(self.n);
        for (m, c) in a.terms() {
            out = out.add(&self.rewrite_letters(&m.word())?.scale(c));
        }
        Ok(out)
    }

    /// Product `a * b`.
    pub fn multiply(&self, a: &NormalFormCombination, b: &NormalFormCombination) -> Result<NormalFormCombination> {
        if a.n() != self.n || b.n() != self.n {
            return Err(Error::InvalidInput("operands belong to different algebras".into()));
        }
        let mut out = NormalFormCombination::zero(self.n);
        for (mb, cb) in b.terms() {
            let word = mb.word();
            for (ma, ca) in a.terms() {
                let prod = self.finish(self.mul_word_k(&ma.factors, &word));
                out = out.add(&prod.scale(&(ca * cb)));
            }
        }
        Ok(out)
    }

    /// Checks every defining relation of the even subalgebra; each residual
    /// must vanish identically.
    pub fn verify_presentation_relations(&self) -> PresentationReport {
        let n = self.n;
        let top = n.saturating_sub(2);
        let k = kappa();
        let mut checks = Vec::new();
        // a relation is `word` + sum of (coeff, word) corrections, minus 1
        let mut check = |name: String, main: Vec<usize>, extra: Vec<(Poly, Vec<usize>)>| {
            let mut acc = self.mul_word_k(&NormalFormMonomial::unit(n).factors, &main);
            for (c, w) in extra {
                for (mono, d) in self.mul_word_k(&NormalFormMonomial::unit(n).factors, &w) {
                    add_into(&mut acc, mono, &(&c * &d));
                }
            }
            add_into(&mut acc, NormalFormMonomial::unit(n).factors, &kc(-1));
            let residual = self.finish(acc);
            checks.push(RelationCheck {
                name,
                passed: residual.is_zero(),
                residual,
            });
        };
        if top >= 1 {
            check(
                "y1^3 + c^2 (y1^2 - y1) - 1".into(),
                vec![1, 1, 1],
                vec![(k.clone(), vec![1, 1]), (-&k, vec![1])],
            );
        }
        for i in 2..=top {
            check(format!("y{i}^2 - 1"), vec![i, i], vec![]);
        }
        for i in 2..=top {
            let pair = [i - 1, i];
            let pw = |r: usize| pair.iter().copied().cycle().take(2 * r).collect::<Vec<_>>();
            check(
                format!("(y{}y{i})^3 + c^2 ((y{}y{i})^2 - y{}y{i}) - 1", i - 1, i - 1, i - 1),
                pw(3),
                vec![(k.clone(), pw(2)), (-&k, pw(1))],
            );
        }
        for i in 1..=top {
            for j in i + 2..=top {
                check(format!("(y{i}y{j})^2 - 1"), vec![i, j, i, j], vec![]);
            }
        }
        PresentationReport { n, checks }
    }
}

/// Residual of one defining relation.
#[derive(Clone, Debug)]
pub struct RelationCheck {
    pub name: String,
    pub residual: NormalFormCombination,
    pub passed: bool,
}

#[derive(Clone, Debug)]
pub struct PresentationReport {
    pub n: usize,
    pub checks: Vec<RelationCheck>,
}

impl PresentationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// Relations with a nonzero residual.
    pub fn failures(&self) -> Vec<&RelationCheck> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }
}

/// Normal form of a word in the even generators.
pub fn rewrite_y_word(w: &YWord, n: usize) -> Result<NormalFormCombination> {
    RewritingEngine::new(n)?.rewrite(w)
}

pub fn multiply_normal_forms(
    a: &NormalFormCombination,
    b: &NormalFormCombination,
    n: usize,
) -> Result<NormalFormCombination> {
    RewritingEngine::new(n)?.multiply(a, b)
}

pub fn verify_presentation_relations(n: usize) -> Result<PresentationReport> {
    if n < 3 {
        return Err(Error::InvalidInput(format!("n = {n} has no relations to check (n >= 3)")));
    }
    Ok(RewritingEngine::new(n)?.verify_presentation_relations())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word_algebra::words::Permutation;
    use num_rational::BigRational;
    use std::collections::HashSet;

    fn factorial(n: usize) -> usize {
        (1..=n).product()
    }

    #[test]
    fn monomial_count() {
        for n in 2..=8 {
            assert_eq!(enumerate_monomials(n).len(), factorial(n) / 2);
        }
    }

    #[test]
    fn cube_of_first_generator() {
        let c2 = RationalFunction::c_squared();
        let got = rewrite_y_word(&YWord::parse("y1 y1 y1", 4).unwrap(), 4).unwrap();
        let m = |f: Vec<u8>| NormalFormMonomial::new(f).unwrap();
        let mut want = NormalFormCombination::unit(4);
        want.add_term(m(vec![1, 0]), c2.clone());
        want.add_term(m(vec![2, 0]), -&c2);
        assert_eq!(got, want);
    }

    #[test]
    fn squares_of_involutions() {
        for n in 4..=6 {
            for i in 2..=n - 2 {
                let got = rewrite_y_word(&YWord::new(vec![i, i], n).unwrap(), n).unwrap();
                assert_eq!(got, NormalFormCombination::unit(n));
            }
        }
        assert_eq!(
            rewrite_y_word(&YWord::new(vec![], 5).unwrap(), 5).unwrap(),
            NormalFormCombination::unit(5)
        );
    }

    #[test]
    fn monomial_words_are_fixed_points() {
        for n in 3..=6 {
            let engine = RewritingEngine::new(n).unwrap();
            for m in enumerate_monomials(n) {
                let got = engine.rewrite_letters(&m.word()).unwrap();
                assert_eq!(got, NormalFormCombination::monomial(m, RationalFunction::one()));
            }
        }
    }

    /// At `k = 0` the algebra is the group algebra of the alternating group,
    /// with `y_i` acting as the even permutation `s_1 s_{i+1}`.
    #[test]
    fn classical_limit_is_the_alternating_group() {
        for n in 3..=6 {
            let engine = RewritingEngine::new(n).unwrap();
            let perm_of = |word: &[usize]| {
                let letters: Vec<usize> = word.iter().flat_map(|&i| [1, i + 1]).collect();
                Permutation::from_word(n, &letters)
            };
            let monos = enumerate_monomials(n);
            let images: HashSet<_> = monos.iter().map(|m| perm_of(&m.word())).collect();
            assert_eq!(images.len(), monos.len(), "monomials must hit distinct even permutations");
            for m in &monos {
                for j in 1..=n - 2 {
                    let prod = engine.mul_gen(&m.factors, j);
                    let zero = BigRational::from_integer(0.into());
                    let survivors: Vec<_> = prod
                        .iter()
                        .map(|(mono, c)| (mono, c.eval_rational(&zero)))
                        .filter(|(_, c)| *c != zero)
                        .collect();
                    assert_eq!(survivors.len(), 1);
                    let (mono, c) = &survivors[0];
                    assert_eq!(*c, BigRational::from_integer(1.into()));
                    let mut word = m.word();
                    word.push(j);
                    assert_eq!(perm_of(&NormalFormMonomial { factors: (*mono).clone() }.word()), perm_of(&word));
                }
            }
        }
    }

    #[test]
    fn presentation_holds_exactly() {
        for n in 3..=6 {
            let report = verify_presentation_relations(n).unwrap();
            assert!(report.all_passed(), "n = {n}: {:?}", report.failures());
        }
        assert_eq!(verify_presentation_relations(5).unwrap().checks.len(), 1 + 2 + 2 + 1);
    }

    #[test]
    fn power_associativity() {
        let n = 4;
        let engine = RewritingEngine::new(n).unwrap();
        let y1 = engine.rewrite_letters(&[1]).unwrap();
        let y1sq = engine.rewrite_letters(&[1, 1]).unwrap();
        let cube = engine.rewrite_letters(&[1, 1, 1]).unwrap();
        assert_eq!(engine.multiply(&y1, &y1sq).unwrap(), cube);
        assert_eq!(engine.multiply(&y1sq, &y1).unwrap(), cube);
        let unit = NormalFormCombination::unit(n);
        assert_eq!(engine.multiply(&cube, &unit).unwrap(), cube);
    }

    #[test]
    fn normalize_is_idempotent() {
        let engine = RewritingEngine::new(5).unwrap();
        let a = engine.rewrite_letters(&[1, 2, 3, 1, 1, 2, 1, 3, 2]).unwrap();
        assert_eq!(engine.normalize(&a).unwrap(), a);
    }

    #[test]
    fn rejects_out_of_range_letters() {
        let engine = RewritingEngine::new(4).unwrap();
        assert!(engine.rewrite_letters(&[3]).is_err());
        assert!(NormalFormMonomial::new(vec![3]).is_err());
    }
}
