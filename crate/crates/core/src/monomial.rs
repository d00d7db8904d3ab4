//! Monomial ideals in a polynomial ring, with the combinatorics needed to
//! compare resolutions against lex and compressed benchmarks.
//!
//! Variables are `x_1 > x_2 > … > x_n`; a [`Monomial`] stores its exponent
//! vector.  A [`MonomialIdeal`] keeps its minimal generators in a canonical
//! order (degree ascending, then lex descending), which also fixes the text
//! serialization byte-for-byte.

use serde::Serialize;
use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MonomialError {
    /// The profile violates Macaulay's growth bound and is not the Hilbert
    /// function of any graded quotient.
    #[error("hilbert profile grows too fast at degree {degree}: {value} > {max_allowed}")]
    NotMacaulay {
        degree: usize,
        value: u64,
        max_allowed: u128,
    },
    /// The ideal fails the exchange property required for the
    /// Eliahou–Kervaire resolution formula.
    #[error("ideal is not stable: moving generator {gen} from x_{max_var} to x_{var} leaves the ideal")]
    NotStable {
        gen: String,
        max_var: usize,
        var: usize,
    },
    #[error("invalid profile: {0}")]
    BadProfile(String),
    #[error("expected {expected} exponents, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("operation requires at least one variable")]
    NoVariables,
}

/// Binomial coefficient `C(n, k)` as an exact `u128`.
///
/// Panics on overflow, which does not occur for the parameter ranges used
/// by the bound formulas (`n` up to a few tens of thousands).
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut res: u128 = 1;
    for j in 1..=k {
        res = res
            .checked_mul((n - k + j) as u128)
            .expect("binomial coefficient overflows u128");
        res /= j as u128;
    }
    res
}

/// Number of monomials of degree `d` in `n` variables.
fn dim_degree(n: usize, d: u64) -> u128 {
    if n == 0 {
        return if d == 0 { 1 } else { 0 };
    }
    binomial(n as u64 + d - 1, d)
}

/// A monomial, stored as its exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.len() == other.exps.len()
            && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// Index (0-based) of the last variable with positive exponent, or
    /// `None` for the constant monomial.
    pub fn max_var(&self) -> Option<usize> {
        self.exps.iter().rposition(|&e| e > 0)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.exps.iter().map(|e| e.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Lex order with `x_1 > … > x_n`: compare exponent vectors left to right.
pub fn cmp_lex(a: &Monomial, b: &Monomial) -> Ordering {
    a.exps.cmp(&b.exps)
}

/// Degree–reverse–lex order: higher total degree wins; on ties the
/// monomial whose last differing exponent is smaller is the larger one.
pub fn cmp_degrevlex(a: &Monomial, b: &Monomial) -> Ordering {
    match a.degree().cmp(&b.degree()) {
        Ordering::Equal => {}
        ord => return ord,
    }
    for (x, y) in a.exps.iter().zip(&b.exps).rev() {
        match x.cmp(y) {
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
            Ordering::Equal => {}
        }
    }
    Ordering::Equal
}

/// All monomials of degree `d` in `n` variables, in lex-descending order.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Monomial::new(vec![]));
        }
        return out;
    }
    let mut cur = vec![0u32; n];
    fill_degrees(&mut out, &mut cur, 0, d);
    out
}

fn fill_degrees(out: &mut Vec<Monomial>, cur: &mut Vec<u32>, idx: usize, rem: u32) {
    if idx + 1 == cur.len() {
        cur[idx] = rem;
        out.push(Monomial::new(cur.clone()));
        cur[idx] = 0;
        return;
    }
    for e in (0..=rem).rev() {
        cur[idx] = e;
        fill_degrees(out, cur, idx + 1, rem - e);
    }
    cur[idx] = 0;
}

/// Hilbert-function data of a monomial quotient.
#[derive(Debug, Clone, Serialize)]
pub struct HilbertData {
    /// Values of the Hilbert function in degrees `0..values.len()`.
    pub values: Vec<u64>,
    /// Total vector-space dimension of the quotient, when finite.
    pub colength: Option<u64>,
}

/// A monomial ideal, kept as its minimal generators in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Builds an ideal from arbitrary generators: redundant ones (multiples
    /// of another) are dropped and the rest sorted canonically.
    pub fn new(n: usize, gens: Vec<Monomial>) -> Result<Self, MonomialError> {
        for g in &gens {
            if g.exps.len() != n {
                return Err(MonomialError::ArityMismatch {
                    expected: n,
                    got: g.exps.len(),
                });
            }
        }
        let mut kept: Vec<Monomial> = Vec::new();
        let mut sorted = gens;
        sorted.sort_by_key(|m| m.degree());
        for g in sorted {
            if !kept.iter().any(|h| h.divides(&g)) {
                kept.push(g);
            }
        }
        kept.sort_by(|a, b| {
            a.degree()
                .cmp(&b.degree())
                .then_with(|| cmp_lex(b, a))
        });
        kept.dedup();
        Ok(MonomialIdeal { n, gens: kept })
    }

    pub fn n_vars(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Hilbert function of the quotient ring in degrees `0..=d_max`.
    pub fn hilbert_function(&self, d_max: u32) -> Vec<u64> {
        (0..=d_max)
            .map(|d| {
                monomials_of_degree(self.n, d)
                    .iter()
                    .filter(|m| !self.contains(m))
                    .count() as u64
            })
            .collect()
    }

    /// Vector-space dimension of the quotient, or `None` when it is
    /// infinite (some variable has no pure power in the ideal).
    pub fn colength(&self) -> Option<u64> {
        if self.gens.iter().any(|g| g.degree() == 0) {
            return Some(0);
        }
        // Finite exactly when every variable has a pure-power generator;
        // the quotient then vanishes past the sum of those exponents.
        let mut power_sum: u64 = 0;
        for i in 0..self.n {
            let pure = self
                .gens
                .iter()
                .filter(|g| g.max_var() == Some(i) && g.exps[..i].iter().all(|&e| e == 0))
                .map(|g| g.exps[i] as u64)
                .min()?;
            power_sum += pure;
        }
        let mut total = 0u64;
        for d in 0..=power_sum {
            let count = monomials_of_degree(self.n, d as u32)
                .iter()
                .filter(|m| !self.contains(m))
                .count() as u64;
            if count == 0 {
                break;
            }
            total += count;
        }
        Some(total)
    }

    /// Hilbert function until it vanishes, together with the colength.
    pub fn hilbert_data(&self) -> HilbertData {
        match self.colength() {
            Some(c) => {
                let mut values = Vec::new();
                let mut d = 0u32;
                loop {
                    let count = monomials_of_degree(self.n, d)
                        .iter()
                        .filter(|m| !self.contains(m))
                        .count() as u64;
                    if count == 0 {
                        break;
                    }
                    values.push(count);
                    d += 1;
                }
                HilbertData {
                    values,
                    colength: Some(c),
                }
            }
            None => HilbertData {
                values: self.hilbert_function(8),
                colength: None,
            },
        }
    }

    /// Restricts to the hyperplane `x_n = 0`: keeps the generators not
    /// divisible by the last variable, as an ideal in `n − 1` variables.
    pub fn hyperplane_section(&self) -> Result<MonomialIdeal, MonomialError> {
        if self.n == 0 {
            return Err(MonomialError::NoVariables);
        }
        let gens = self
            .gens
            .iter()
            .filter(|g| g.exps[self.n - 1] == 0)
            .map(|g| Monomial::new(g.exps[..self.n - 1].to_vec()))
            .collect();
        MonomialIdeal::new(self.n - 1, gens)
    }

    /// Total Betti numbers of the ideal (as a module) from the
    /// Eliahou–Kervaire formula `b_i = Σ_u C(max(u) − 1, i)`, valid for
    /// stable ideals.  Entry `i` of the result is `b_i`, for `i < n`.
    pub fn eliahou_kervaire_betti(&self) -> Result<Vec<u64>, MonomialError> {
        self.require_stable()?;
        let mut betti = vec![0u64; self.n.max(1)];
        for g in &self.gens {
            let m = match g.max_var() {
                Some(m) => m,
                None => {
                    betti[0] += 1;
                    continue;
                }
            };
            for (i, b) in betti.iter_mut().enumerate().take(m + 1) {
                *b += binomial(m as u64, i as u64) as u64;
            }
        }
        Ok(betti)
    }

    fn require_stable(&self) -> Result<(), MonomialError> {
        // Checking the exchange property on minimal generators suffices.
        for g in &self.gens {
            let m = match g.max_var() {
                Some(m) => m,
                None => continue,
            };
            for i in 0..m {
                let mut exps = g.exps.clone();
                exps[i] += 1;
                exps[m] -= 1;
                if !self.contains(&Monomial::new(exps)) {
                    return Err(MonomialError::NotStable {
                        gen: g.to_string(),
                        max_var: m + 1,
                        var: i + 1,
                    });
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n={}", self.n)?;
        for g in &self.gens {
            writeln!(f, "{g}")?;
        }
        Ok(())
    }
}

impl FromStr for MonomialIdeal {
    type Err = MonomialError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut lines = s.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| MonomialError::Parse("empty input".into()))?;
        let n: usize = header
            .trim()
            .strip_prefix("n=")
            .ok_or_else(|| MonomialError::Parse(format!("expected 'n=<count>', got '{header}'")))?
            .parse()
            .map_err(|e| MonomialError::Parse(format!("bad variable count: {e}")))?;
        let mut gens = Vec::new();
        for line in lines {
            let exps: Vec<u32> = line
                .split_whitespace()
                .map(|t| {
                    t.parse()
                        .map_err(|e| MonomialError::Parse(format!("bad exponent '{t}': {e}")))
                })
                .collect::<Result<_, _>>()?;
            if exps.len() != n {
                return Err(MonomialError::ArityMismatch {
                    expected: n,
                    got: exps.len(),
                });
            }
            gens.push(Monomial::new(exps));
        }
        MonomialIdeal::new(n, gens)
    }
}

/// Macaulay's bound `a^{⟨d⟩}` for the maximal growth of a Hilbert function
/// from degree `d` to `d + 1`.
fn macaulay_bound(a: u64, d: u64) -> u128 {
    debug_assert!(d >= 1);
    if a == 0 {
        return 0;
    }
    let mut rem = a as u128;
    let mut dd = d;
    let mut bound: u128 = 0;
    while rem > 0 {
        // Greedy Macaulay representation: largest k with C(k, dd) ≤ rem.
        let mut k = dd;
        while binomial(k + 1, dd) <= rem {
            k += 1;
        }
        rem -= binomial(k, dd);
        bound += binomial(k + 1, dd + 1);
        if dd == 1 {
            debug_assert_eq!(rem, 0);
            break;
        }
        dd -= 1;
    }
    bound
}

/// The lex ideal with the given Hilbert function of its quotient.
///
/// Entry `d` of `hf` is the Hilbert function in degree `d`; degrees past
/// the end of the slice are taken to be zero, so the profile must describe
/// an artinian quotient.  Fails with [`MonomialError::NotMacaulay`] when no
/// graded quotient has this Hilbert function.
pub fn lex_from_hilbert(n: usize, hf: &[u64]) -> Result<MonomialIdeal, MonomialError> {
    if n == 0 {
        return Err(MonomialError::NoVariables);
    }
    if hf.first() != Some(&1) {
        return Err(MonomialError::BadProfile(
            "profile must start with 1 in degree 0".into(),
        ));
    }
    for (d, &v) in hf.iter().enumerate() {
        if (v as u128) > dim_degree(n, d as u64) {
            return Err(MonomialError::BadProfile(format!(
                "value {v} in degree {d} exceeds the dimension {} of the full degree",
                dim_degree(n, d as u64)
            )));
        }
    }
    let at = |d: usize| -> u64 { hf.get(d).copied().unwrap_or(0) };
    for d in 1..hf.len() {
        let max_allowed = macaulay_bound(at(d), d as u64);
        if (at(d + 1) as u128) > max_allowed {
            return Err(MonomialError::NotMacaulay {
                degree: d + 1,
                value: at(d + 1),
                max_allowed,
            });
        }
    }
    // Degree-by-degree, the ideal is spanned by the first
    // `dim − hf(d)` monomials in lex order; new generators are the ones
    // not already reachable from lower degrees.
    let mut gens: Vec<Monomial> = Vec::new();
    let mut partial = MonomialIdeal::new(n, vec![])?;
    for d in 1..=hf.len() {
        let all = monomials_of_degree(n, d as u32);
        let cut = all.len() - at(d) as usize;
        let mut new_gens = Vec::new();
        for m in &all[..cut] {
            if !partial.contains(m) {
                new_gens.push(m.clone());
            }
        }
        if !new_gens.is_empty() {
            gens.extend(new_gens);
            partial = MonomialIdeal::new(n, gens.clone())?;
        }
    }
    Ok(partial)
}

/// The lex ideal of colength `m` in `n` variables whose quotient keeps
/// every degree below some `s` full and puts the remainder in degree `s`.
pub fn very_compressed(m: u64, n: usize) -> Result<MonomialIdeal, MonomialError> {
    if n == 0 {
        return Err(MonomialError::NoVariables);
    }
    if m == 0 {
        return Err(MonomialError::BadProfile(
            "colength must be positive".into(),
        ));
    }
    // Largest s with C(n + s − 1, n) ≤ m, i.e. all degrees below s fit.
    let mut s: u64 = 1;
    while binomial(n as u64 + s, n as u64) <= m as u128 {
        s += 1;
    }
    let below: u128 = binomial(n as u64 + s - 1, n as u64);
    let remainder = (m as u128 - below) as u64;
    let mut profile: Vec<u64> = (0..s).map(|d| dim_degree(n, d) as u64).collect();
    if remainder > 0 {
        profile.push(remainder);
    }
    lex_from_hilbert(n, &profile)
}

/// The two-variable lex ideal `(x^α, x^{α−1} y^{β_1+1}, …, x y^{β_{α−1}+α−1}, y^β)`.
///
/// `inner` lists `β_1 ≤ … ≤ β_{α−1}`; the parameters are valid exactly
/// when that sequence is nondecreasing, nonnegative, and bounded by
/// `β − α`.  The quotient has colength `β + Σ (β_i + i)`.
pub fn two_var_lex(alpha: u32, beta: u32, inner: &[u32]) -> Result<MonomialIdeal, MonomialError> {
    if alpha == 0 {
        return Err(MonomialError::BadProfile("alpha must be positive".into()));
    }
    if beta < alpha {
        return Err(MonomialError::BadProfile(format!(
            "beta = {beta} must be at least alpha = {alpha}"
        )));
    }
    if inner.len() != (alpha - 1) as usize {
        return Err(MonomialError::ArityMismatch {
            expected: (alpha - 1) as usize,
            got: inner.len(),
        });
    }
    let mut prev = 0u32;
    for &b in inner {
        if b < prev {
            return Err(MonomialError::BadProfile(
                "inner exponents must be nondecreasing".into(),
            ));
        }
        prev = b;
    }
    if prev > beta - alpha {
        return Err(MonomialError::BadProfile(format!(
            "inner exponents must stay at most beta − alpha = {}",
            beta - alpha
        )));
    }
    let mut gens = Vec::new();
    for i in 0..alpha {
        let beta_i = if i == 0 { 0 } else { inner[(i - 1) as usize] };
        gens.push(Monomial::new(vec![alpha - i, beta_i + i]));
    }
    gens.push(Monomial::new(vec![0, beta]));
    MonomialIdeal::new(2, gens)
}
