//! Parameter sweeps over `n`: witness sizes, bound values and exact values
//! side by side.

use serde::Serialize;
use turan_core::arith::{binom, fraction_string};
use turan_core::constructions::{self, best_of, ConstructionReport};
use turan_core::formulas::{self, BoundResult, StarTuranOracle};
use turan_core::search::{ex_exact, ex_exact_linear};
use turan_core::{ForbiddenFamily, Mode, Result, SearchOptions, StarForestSpec};

#[derive(Debug, Serialize)]
pub struct Row {
    pub n: usize,
    pub expansion_witness: Option<usize>,
    pub linear_witness: Option<usize>,
    pub berge_regular_witness: Option<usize>,
    pub berge_block_witness: Option<usize>,
    pub llp: Option<String>,
    pub expansion_bound: Option<String>,
    pub linear_bound: Option<String>,
    pub berge_large_bound: Option<String>,
    pub berge_small_bound: Option<String>,
    pub exact: Option<usize>,
}

pub const COLUMNS: [&str; 11] = [
    "n",
    "expansion_witness",
    "linear_witness",
    "berge_regular_witness",
    "berge_block_witness",
    "llp",
    "expansion_bound",
    "linear_bound",
    "berge_large_bound",
    "berge_small_bound",
    "exact",
];

pub struct Sweep {
    pub r: usize,
    pub spec: StarForestSpec,
    pub mode: Mode,
    pub linear: bool,
    pub opts: SearchOptions,
}

fn best(build: impl Fn(usize) -> Result<ConstructionReport>, indices: std::ops::RangeInclusive<usize>) -> Option<usize> {
    best_of(indices.map(build)).map(|rep| rep.edges)
}

fn bound(b: Result<BoundResult>) -> Option<String> {
    b.ok().map(|b| fraction_string(&b.value))
}

impl Sweep {
    pub fn row(&self, n: usize) -> Result<Row> {
        let (r, sp, k) = (self.r, &self.spec, self.spec.k());
        let oracle = if r == 2 { StarTuranOracle::GraphExact } else { StarTuranOracle::FixedPair };
        let exact = if binom(n as u64, r as u64)? as u128 <= self.opts.budget {
            let family = ForbiddenFamily::star_forest(sp, self.mode, r)?;
            let run = if self.linear { ex_exact_linear } else { ex_exact };
            Some(run(n, &family, &self.opts)?.value)
        } else {
            None
        };
        Ok(Row {
            n,
            expansion_witness: best(|i| constructions::expansion_witness(n, r, sp, i), 1..=k),
            linear_witness: best(|i| constructions::linear_witness(n, r, sp, i), 1..=k),
            berge_regular_witness: best(|s| constructions::berge_regular_witness(n, r, sp, s), 1..=k.saturating_sub(1)),
            berge_block_witness: best(|i| constructions::berge_block_witness(n, r, sp, i), 1..=k),
            llp: if r == 2 { bound(formulas::ex_llp(n, sp)) } else { None },
            expansion_bound: bound(formulas::ex_expansion_rhs(n, r, sp, &oracle)),
            linear_bound: bound(formulas::ex_linear_rhs(n, r, sp)),
            berge_large_bound: bound(formulas::ex_berge_large_r_rhs(n, r, sp)),
            berge_small_bound: bound(formulas::ex_berge_small_r_rhs(n, r, sp)),
            exact,
        })
    }
}
