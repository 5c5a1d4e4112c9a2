//! Closed-form bounds for star forests, each evaluated exactly together with
//! the index attaining the outer maximum.

use std::fmt;
use std::sync::Arc;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::arith::{binom, binom_signed, ceil_div, fraction_string, int, to_f64, Rational};
use crate::error::{Error, Result};
use crate::patterns::StarForestSpec;

/// Which expression of a multi-branch maximum a term comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Branch {
    /// The single expression of a one-branch maximum.
    Main,
    /// Complete blocks with `⌈(n−i+1)/d_i⌉` classes.
    Block,
    /// Complete blocks counted with the exact remainder class.
    BlockExact,
    /// `(d_i − 1)/(r − i + 1) · (n − i + 1)`.
    Ratio,
    /// `max{C(d_c + c, r−1), d_c + c}/(r − c) · (n − c)`.
    Clique,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub branch: Branch,
    pub index: usize,
    pub value: Rational,
}

/// Outer maximum over the non-vacuous terms. Ties go to the earliest term in
/// table order, which lists terms by index and then by branch.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundResult {
    pub value: Rational,
    pub argmax: usize,
    pub branch: Branch,
    pub terms: Vec<Term>,
    /// Reported alongside but not part of the maximum.
    pub extra: Vec<Term>,
}

impl BoundResult {
    fn from_terms(mut terms: Vec<Term>) -> Result<Self> {
        terms.sort_by_key(|t| (t.index, t.branch));
        let best = terms
            .iter()
            .fold(None::<&Term>, |acc, t| match acc {
                Some(b) if b.value >= t.value => Some(b),
                _ => Some(t),
            })
            .ok_or(Error::VacuousBound)?;
        Ok(BoundResult {
            value: best.value,
            argmax: best.index,
            branch: best.branch,
            terms: terms.clone(),
            extra: Vec::new(),
        })
    }

    pub fn term(&self, branch: Branch, index: usize) -> Option<Rational> {
        self.terms.iter().find(|t| t.branch == branch && t.index == index).map(|t| t.value)
    }
}

fn write_term<S: Serializer>(t: &Term, s: S) -> std::result::Result<S::Ok, S::Error> {
    let mut st = s.serialize_struct("Term", 4)?;
    st.serialize_field("branch", &t.branch)?;
    st.serialize_field("index", &t.index)?;
    st.serialize_field("value", &fraction_string(&t.value))?;
    st.serialize_field("decimal", &to_f64(&t.value))?;
    st.end()
}

struct TermRef<'a>(&'a Term);

impl Serialize for TermRef<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        write_term(self.0, s)
    }
}

impl Serialize for BoundResult {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("BoundResult", 6)?;
        st.serialize_field("value", &fraction_string(&self.value))?;
        st.serialize_field("decimal", &to_f64(&self.value))?;
        st.serialize_field("argmax", &self.argmax)?;
        st.serialize_field("branch", &self.branch)?;
        st.serialize_field("terms", &self.terms.iter().map(TermRef).collect::<Vec<_>>())?;
        st.serialize_field("extra", &self.extra.iter().map(TermRef).collect::<Vec<_>>())?;
        st.end()
    }
}

/// Supplies `ex_r(m, S⁺_ℓ)`, the star term that the expansion bound leaves
/// open for `r ≥ 3`.
#[derive(Clone)]
pub enum StarTuranOracle {
    /// `⌊(ℓ−1)m/2⌋`, exact for graphs.
    GraphExact,
    /// `C(m−2, r−2)` for `ℓ ≥ 2` (all edges through a fixed pair), `0` for `ℓ = 1`.
    FixedPair,
    Zero,
    /// `f(m, ℓ, r)`.
    Custom(Arc<dyn Fn(usize, usize, usize) -> i128 + Send + Sync>),
}

impl fmt::Debug for StarTuranOracle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StarTuranOracle::GraphExact => f.write_str("GraphExact"),
            StarTuranOracle::FixedPair => f.write_str("FixedPair"),
            StarTuranOracle::Zero => f.write_str("Zero"),
            StarTuranOracle::Custom(_) => f.write_str("Custom"),
        }
    }
}

impl StarTuranOracle {
    pub fn value(&self, m: usize, leaves: usize, r: usize) -> Result<i128> {
        Ok(match self {
            StarTuranOracle::GraphExact => (leaves as i128 - 1) * m as i128 / 2,
            StarTuranOracle::FixedPair if leaves >= 2 => binom_signed(m as i128 - 2, r as u64 - 2)?,
            StarTuranOracle::FixedPair | StarTuranOracle::Zero => 0,
            StarTuranOracle::Custom(f) => f(m, leaves, r),
        })
    }

    /// Non-negative and non-decreasing on `0..=max_m`.
    pub fn check(&self, max_m: usize, leaves: usize, r: usize) -> Result<()> {
        let mut prev = 0;
        for m in 0..=max_m {
            let v = self.value(m, leaves, r)?;
            if v < 0 {
                return Err(Error::OracleViolation(format!("negative at m = {m}")));
            }
            if v < prev {
                return Err(Error::OracleViolation(format!("decreasing at m = {m}")));
            }
            prev = v;
        }
        Ok(())
    }
}

fn u(x: usize) -> u64 {
    x as u64
}

/// `max_i (i−1)(n−i+1) + C(i−1, 2) + ⌊(d_i−1)(n−i+1)/2⌋`, the graph case.
pub fn ex_llp(n: usize, spec: &StarForestSpec) -> Result<BoundResult> {
    let mut terms = Vec::new();
    for i in 1..=spec.k() {
        if n + 1 < i {
            continue;
        }
        let m = (n + 1 - i) as i128;
        let a = (i - 1) as i128;
        let d = spec.d(i) as i128;
        let v = a * m + binom(u(i - 1), 2)? + (d - 1) * m / 2;
        terms.push(Term { branch: Branch::Main, index: i, value: int(v) });
    }
    BoundResult::from_terms(terms)
}

/// `C(n, r) − C(n−k+1, r)`, the largest `r`-uniform family without `k`
/// pairwise disjoint edges for large `n`.
pub fn ex_erdos_matching(n: usize, r: usize, k: usize) -> Result<i128> {
    if k == 0 {
        return Err(Error::InvalidParameter("matching size must be positive".into()));
    }
    Ok(binom(u(n), u(r))? - binom_signed(n as i128 - k as i128 + 1, u(r))?)
}

/// `max_i C(n, r) − C(n−i+1, r) + ex_r(n−i+1, S⁺_{d_i})`.
pub fn ex_expansion_rhs(
    n: usize,
    r: usize,
    spec: &StarForestSpec,
    oracle: &StarTuranOracle,
) -> Result<BoundResult> {
    if r < 2 {
        return Err(Error::InvalidParameter(format!("uniformity {r} < 2")));
    }
    let mut terms = Vec::new();
    for i in 1..=spec.k() {
        if n + 1 < i {
            continue;
        }
        let m = n + 1 - i;
        oracle.check(m, spec.d(i), r)?;
        let v = binom(u(n), u(r))? - binom(u(m), u(r))? + oracle.value(m, spec.d(i), r)?;
        terms.push(Term { branch: Branch::Main, index: i, value: int(v) });
    }
    BoundResult::from_terms(terms)
}

/// `max_i ((d_i−1)/r + (i−1)/(r−1))(n−i+1) + C(i−1, 2)/C(r, 2)`, the linear
/// bound.
pub fn ex_linear_rhs(n: usize, r: usize, spec: &StarForestSpec) -> Result<BoundResult> {
    if r < 2 {
        return Err(Error::InvalidParameter(format!("uniformity {r} < 2")));
    }
    let r_ = r as i128;
    let mut terms = Vec::new();
    for i in 1..=spec.k() {
        if n + 1 < i {
            continue;
        }
        let m = int((n + 1 - i) as i128);
        let d = spec.d(i) as i128;
        let slope = Rational::new(d - 1, r_) + Rational::new((i - 1) as i128, r_ - 1);
        let v = slope * m + Rational::new(binom(u(i - 1), 2)?, binom(u(r), 2)?);
        terms.push(Term { branch: Branch::Main, index: i, value: v });
    }
    BoundResult::from_terms(terms)
}

fn require_two_stars(spec: &StarForestSpec) -> Result<()> {
    if spec.k() < 2 {
        return Err(Error::InvalidParameter("at least two stars are required".into()));
    }
    Ok(())
}

/// `max_{1≤s≤k−1} (d_{s+1}−1)/(r−s) · (n−s)`, the Berge bound for large `r`.
pub fn ex_berge_large_r_rhs(n: usize, r: usize, spec: &StarForestSpec) -> Result<BoundResult> {
    require_two_stars(spec)?;
    let mut terms = Vec::new();
    for s in 1..spec.k() {
        if r <= s || n < s {
            continue;
        }
        let v = Rational::new(spec.d(s + 1) as i128 - 1, (r - s) as i128) * int((n - s) as i128);
        terms.push(Term { branch: Branch::Main, index: s, value: v });
    }
    BoundResult::from_terms(terms)
}

/// The three-branch Berge bound for small `r`: block terms with
/// `⌈(n−i+1)/d_i⌉` classes, ratio terms, and clique terms for `1 ≤ c < k−1`.
/// Block counts with the exact remainder class are reported in `extra`.
pub fn ex_berge_small_r_rhs(n: usize, r: usize, spec: &StarForestSpec) -> Result<BoundResult> {
    require_two_stars(spec)?;
    let mut terms = Vec::new();
    let mut extra = Vec::new();
    for i in 1..=spec.k() {
        if n + 1 < i {
            continue;
        }
        let m = (n + 1 - i) as i128;
        let d = spec.d(i);
        let inside = binom(u(i - 1), u(r))?;
        let per_block = binom(u(d + i - 1), u(r))? - inside;
        terms.push(Term { branch: Branch::Block, index: i, value: int(block_term(n, r, d, i)?) });
        let t = m as usize % d;
        let exact = per_block * (m / d as i128)
            + if t > 0 { binom(u(t + i - 1), u(r))? - inside } else { 0 }
            + inside;
        extra.push(Term { branch: Branch::BlockExact, index: i, value: int(exact) });
        if r + 1 > i {
            let v = Rational::new(d as i128 - 1, (r + 1 - i) as i128) * int(m);
            terms.push(Term { branch: Branch::Ratio, index: i, value: v });
        }
    }
    for c in 1..spec.k().saturating_sub(1) {
        if r <= c || n < c {
            continue;
        }
        let top = spec.d(c) + c;
        let num = binom(u(top), u(r - 1))?.max(top as i128);
        let v = Rational::new(num, (r - c) as i128) * int((n - c) as i128);
        terms.push(Term { branch: Branch::Clique, index: c, value: v });
    }
    let mut out = BoundResult::from_terms(terms)?;
    out.extra = extra;
    Ok(out)
}

/// `(C(d+i−1, r) − C(i−1, r))·⌈(n−i+1)/d⌉ + C(i−1, r)` for `n ≥ i − 1`.
pub fn block_term(n: usize, r: usize, d: usize, i: usize) -> Result<i128> {
    if i == 0 || d == 0 || n + 1 < i {
        return Err(Error::InvalidParameter("block term needs 1 ≤ i ≤ n + 1 and d ≥ 1".into()));
    }
    let inside = binom(u(i - 1), u(r))?;
    let per_block = binom(u(d + i - 1), u(r))? - inside;
    Ok(per_block * ceil_div((n + 1 - i) as i128, d as i128) + inside)
}

/// Berge star bound: `C(ℓ, r)·n/ℓ` when `ℓ > r`, else `(ℓ−1)n/r`.
pub fn ex_berge_star(n: usize, r: usize, leaves: usize) -> Result<Rational> {
    if r < 3 {
        return Err(Error::InvalidParameter(format!("uniformity {r} < 3")));
    }
    if leaves == 0 {
        return Err(Error::InvalidParameter("a star needs at least one leaf".into()));
    }
    let n = n as i128;
    Ok(if leaves > r {
        Rational::new(binom(u(leaves), u(r))? * n, leaves as i128)
    } else {
        Rational::new((leaves as i128 - 1) * n, r as i128)
    })
}

/// `C(n−2, r−2)`: the `r`-sets through a fixed pair.
pub fn fixed_pair_count(n: usize, r: usize) -> Result<i128> {
    if r < 2 || n < r {
        return Err(Error::InvalidParameter(format!("need n ≥ r ≥ 2, got n = {n}, r = {r}")));
    }
    binom(u(n - 2), u(r - 2))
}
