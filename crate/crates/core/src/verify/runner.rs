use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::{Assignment, Numeric, Rational, Symbolic, Valuation, Var};
use crate::twist::{build_f1, build_f2, build_full_with, r_standard_direct, twist_r, RootOrder, TwistParams};

use super::checks::{check_compare_cg, check_param_count, Checker};
use super::report::CheckReport;

/// The checks exposed on the command line.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum CheckKind {
    Ybe,
    Cocycle,
    Factorization,
    Hecke,
    Intertwine,
    CompareCg,
    ParamCount,
    Rll,
}

impl CheckKind {
    pub const ALL: [CheckKind; 8] = [
        CheckKind::Ybe,
        CheckKind::Cocycle,
        CheckKind::Factorization,
        CheckKind::Hecke,
        CheckKind::Intertwine,
        CheckKind::CompareCg,
        CheckKind::ParamCount,
        CheckKind::Rll,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckKind::Ybe => "ybe",
            CheckKind::Cocycle => "cocycle",
            CheckKind::Factorization => "factorization",
            CheckKind::Hecke => "hecke",
            CheckKind::Intertwine => "intertwine",
            CheckKind::CompareCg => "compare-cg",
            CheckKind::ParamCount => "param-count",
            CheckKind::Rll => "rll",
        }
    }

    /// Checks whose statement does not depend on a numeric point.
    fn always_symbolic(self) -> bool {
        matches!(self, CheckKind::CompareCg | CheckKind::ParamCount)
    }

    /// Default evidence policy: everything symbolic at `N = 1`; at `N = 2`
    /// the three-leg checks go numeric; from `N = 3` on all of them do.
    pub fn symbolic_by_default(self, n_half: usize) -> bool {
        if self.always_symbolic() || n_half <= 1 {
            return true;
        }
        let three_legs = matches!(
            self,
            CheckKind::Ybe | CheckKind::Cocycle | CheckKind::Factorization | CheckKind::Rll
        );
        n_half == 2 && !three_legs
    }
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        CheckKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown check {s}")))
    }
}

/// How a batch of checks is evaluated.
#[derive(Clone, Debug)]
pub struct RunOptions {
    pub n_half: usize,
    /// Evaluate at this point only (no retries).
    pub numeric: Option<Assignment>,
    /// Force symbolic evaluation regardless of the default policy.
    pub symbolic: bool,
    /// Number of generic points used when a check runs numerically by default.
    pub samples: usize,
    /// Root order of the second twist stage; only `Lex` gives a twist.
    pub order: RootOrder,
}

impl RunOptions {
    pub fn new(n_half: usize) -> Self {
        RunOptions {
            n_half,
            numeric: None,
            symbolic: false,
            samples: 3,
            order: RootOrder::Lex,
        }
    }
}

const PRIMES: [i64; 40] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109,
    113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173,
];

/// Consecutive primes from `PRIMES[offset]`, assigned in the order
/// `s, mu1..muN, b_1..b_N, a_ik`.
pub fn generic_assignment(n_half: usize, offset: usize) -> Assignment {
    let mut vars = vec![Var::S];
    vars.extend((1..=n_half as u16).map(Var::Mu));
    vars.extend((1..=n_half as u16).map(Var::B));
    for i in 1..=n_half as u16 {
        for k in i + 1..=n_half as u16 {
            vars.push(Var::A(i, k));
        }
    }
    let mut a = Assignment::new();
    for (t, v) in vars.into_iter().enumerate() {
        let p = PRIMES[(offset + t) % PRIMES.len()];
        a.insert(v, Rational::from_integer(p.into()));
    }
    a
}

/// Point evaluation failures that a different generic point may avoid.
fn is_degenerate(e: &Error) -> bool {
    matches!(
        e,
        Error::DivisionByZero | Error::Pole { .. } | Error::Singular | Error::DegenerateQNumber
    )
}

const MAX_ATTEMPTS: usize = 8;

/// Runs the requested checks concurrently and returns the reports sorted by
/// check name (runs of one check keep their sample order).
pub fn run_checks(kinds: &[CheckKind], opts: &RunOptions) -> Result<Vec<CheckReport>> {
    let params = TwistParams::new(opts.n_half)?;
    let mut jobs: Vec<(CheckKind, Option<usize>)> = Vec::new();
    for &kind in kinds {
        if kind == CheckKind::CompareCg && opts.n_half != 1 {
            return Err(Error::Invalid("compare-cg is defined for N = 1 only".into()));
        }
        let symbolic = kind.always_symbolic()
            || (opts.numeric.is_none() && (opts.symbolic || kind.symbolic_by_default(opts.n_half)));
        if symbolic || opts.numeric.is_some() {
            jobs.push((kind, None));
        } else {
            jobs.extend((0..opts.samples).map(|k| (kind, Some(k))));
        }
    }
    let results: Vec<Result<Vec<CheckReport>>> = jobs
        .par_iter()
        .map(|&(kind, sample)| {
            let symbolic = kind.always_symbolic() || (sample.is_none() && opts.numeric.is_none());
            match (symbolic, sample, &opts.numeric) {
                (true, _, _) => run_one(kind, &params, opts.order, Symbolic),
                (false, None, Some(a)) => run_one(kind, &params, opts.order, Numeric(a.clone())),
                (false, Some(k), _) => run_sampled(kind, &params, opts.order, k, opts.samples.max(1)),
                (false, None, None) => unreachable!("numeric job without a point"),
            }
        })
        .collect();
    let mut reports = Vec::new();
    for r in results {
        reports.extend(r?);
    }
    reports.sort_by(|a, b| a.check.cmp(&b.check));
    Ok(reports)
}

/// Sample `k` tries offsets `k, k + stride, k + 2 stride, ...` so distinct
/// samples never share a point.
fn run_sampled(
    kind: CheckKind,
    params: &TwistParams,
    order: RootOrder,
    k: usize,
    stride: usize,
) -> Result<Vec<CheckReport>> {
    let mut last = None;
    for attempt in 0..MAX_ATTEMPTS {
        let point = generic_assignment(params.n_half(), k + attempt * stride);
        match run_one(kind, params, order, Numeric(point)) {
            Err(e) if is_degenerate(&e) => last = Some(e),
            other => return other,
        }
    }
    Err(last.expect("at least one attempt"))
}

fn run_one<V: Valuation>(kind: CheckKind, params: &TwistParams, order: RootOrder, val: V) -> Result<Vec<CheckReport>> {
    if kind == CheckKind::CompareCg {
        return Ok(vec![check_compare_cg()?]);
    }
    if kind == CheckKind::ParamCount {
        return Ok(vec![check_param_count(params)?]);
    }
    let c = Checker::for_twist(params, val)?;
    let f = build_full_with(params, order);
    let report = match kind {
        CheckKind::Cocycle => c.cocycle(&f)?,
        CheckKind::Factorization => c.factorization(&build_f1(params), &build_f2(params, order))?,
        _ => {
            let r = twist_r(c.rep(), &f, &r_standard_direct(c.rep())?)?;
            match kind {
                CheckKind::Ybe => c.ybe(&r)?,
                CheckKind::Hecke => c.hecke(&r)?,
                CheckKind::Intertwine => c.intertwiner(&r, Some(&f))?,
                CheckKind::Rll => return Ok(vec![c.l_matrix_identities(&f, &r)?, c.rll(&r)?]),
                _ => unreachable!("handled above"),
            }
        }
    };
    Ok(vec![report])
}
