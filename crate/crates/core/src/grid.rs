//! Deterministic sweeps of the identity verifiers over parameter grids.
//!
//! Polynomial sequences are expanded once per `(family, lambda, alpha)` and
//! shared across tuples. Tuples run in parallel on the current rayon pool;
//! output order is the sequential enumeration order.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::apostol::{batch_polynomials, Family};
use crate::error::{Error, Result};
use crate::exactnum::Scalar;
use crate::identities::{kernels, verify_cj_table};
use crate::poly::Poly;
use crate::report::{IdentityReport, Params};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Theorem1Low,
    Theorem1High,
    Theorem2,
    Corollary1,
    Corollary2,
    RemarkR1,
    Theorem3,
    Functional,
    Lacunary,
    CjTable,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Theorem1Low,
        Suite::Theorem1High,
        Suite::Theorem2,
        Suite::Corollary1,
        Suite::Corollary2,
        Suite::RemarkR1,
        Suite::Theorem3,
        Suite::Functional,
        Suite::Lacunary,
        Suite::CjTable,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Theorem1Low => "theorem1_low",
            Suite::Theorem1High => "theorem1_high",
            Suite::Theorem2 => "theorem2",
            Suite::Corollary1 => "corollary1",
            Suite::Corollary2 => "corollary2",
            Suite::RemarkR1 => "remark_r1",
            Suite::Theorem3 => "theorem3",
            Suite::Functional => "functional",
            Suite::Lacunary => "lacunary",
            Suite::CjTable => "cj_table",
        }
    }

    /// Resolves a user-facing suite selector. `theorem1` covers both regimes
    /// and `all` every suite. Hyphens and underscores are interchangeable.
    pub fn select(name: &str) -> Result<Vec<Suite>> {
        match name.replace('-', "_").as_str() {
            "all" => Ok(Suite::ALL.to_vec()),
            "theorem1" => Ok(vec![Suite::Theorem1Low, Suite::Theorem1High]),
            other => Ok(vec![other.parse()?]),
        }
    }

    fn uses_pade_p(self) -> bool {
        matches!(self, Suite::Theorem1Low | Suite::Theorem1High | Suite::Theorem2)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let canonical = s.replace('-', "_");
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == canonical)
            .ok_or_else(|| Error::Parse {
                kind: "suite",
                input: s.to_string(),
            })
    }
}

/// Parameter ranges for a sweep. All bounds are inclusive.
///
/// `p_max` is an absolute bound on `p` (or on `j` for the `c_j` table). When
/// unset, each suite uses its own default: `n + m + 4` for the Padé
/// theorems, 15 for Theorem-3-type relations, 20 for lacunary relations and
/// 40 for the `c_j` table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridSpec {
    pub families: Vec<Family>,
    pub alpha_max: u32,
    pub n_max: usize,
    pub m_max: usize,
    pub p_max: Option<usize>,
    pub s_max: usize,
    pub lambdas: Vec<Scalar>,
    pub shifts: Vec<Scalar>,
    pub rhos: Vec<Scalar>,
}

fn scalars(vals: &[&str]) -> Vec<Scalar> {
    vals.iter().map(|v| v.parse().expect("valid literal")).collect()
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec {
            families: Family::ALL.to_vec(),
            alpha_max: 3,
            n_max: 5,
            m_max: 5,
            p_max: None,
            s_max: 10,
            lambdas: scalars(&["1", "-1", "2", "1/2", "-3/5"]),
            shifts: scalars(&["1", "-1", "1/3", "-2/7"]),
            rhos: scalars(&["0", "1", "1/2", "-2", "2/3", "i", "1+i"]),
        }
    }
}

impl GridSpec {
    pub fn validate(&self, suites: &[Suite]) -> Result<()> {
        if let Some(p_max) = self.p_max {
            if suites.iter().any(|s| s.uses_pade_p()) && p_max <= self.n_max + self.m_max {
                return Err(Error::InvalidGrid(format!(
                    "p_max={p_max} must exceed n_max+m_max={} so both p regimes are covered",
                    self.n_max + self.m_max
                )));
            }
        }
        Ok(())
    }

    fn p_hi(&self, suite: Suite, n: usize, m: usize) -> usize {
        match (self.p_max, suite) {
            (Some(p), _) => p,
            (None, Suite::Theorem3 | Suite::Functional) => 15,
            (None, Suite::Lacunary) => 20,
            (None, Suite::CjTable) => 40,
            (None, _) => n + m + 4,
        }
    }

    /// Largest polynomial index any selected suite touches.
    fn k_needed(&self, suites: &[Suite]) -> usize {
        suites
            .iter()
            .map(|&suite| match suite {
                Suite::CjTable => 0,
                _ => self
                    .p_hi(suite, self.n_max, self.m_max)
                    .max(self.n_max + self.m_max + 1),
            })
            .max()
            .unwrap_or(0)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RunOptions {
    /// Corrupts every cached polynomial sequence (`Lambda_2 += 1`) so the
    /// failure path can be exercised end to end.
    pub inject_error: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum GridOutcome {
    Checked(IdentityReport),
    SkippedInvalid { params: Params, reason: String },
    Errored { params: Params, message: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridEntry {
    pub suite: Suite,
    pub outcome: GridOutcome,
}

impl GridEntry {
    pub fn passed(&self) -> bool {
        matches!(&self.outcome, GridOutcome::Checked(r) if r.holds)
    }

    pub fn failed(&self) -> bool {
        match &self.outcome {
            GridOutcome::Checked(r) => !r.holds,
            GridOutcome::Errored { .. } => true,
            GridOutcome::SkippedInvalid { .. } => false,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

impl Summary {
    pub fn of(entries: &[GridEntry]) -> Self {
        entries.iter().fold(Summary::default(), |mut acc, e| {
            if e.passed() {
                acc.pass += 1;
            } else if e.failed() {
                acc.fail += 1;
            } else {
                acc.skipped += 1;
            }
            acc
        })
    }
}

type SeqKey = (Family, Scalar, u32);

struct Cache {
    seqs: HashMap<SeqKey, Arc<Vec<Poly>>>,
    shifted: HashMap<(Family, Scalar, u32, Scalar), Arc<Vec<Poly>>>,
}

impl Cache {
    fn seq(&self, family: Family, lambda: &Scalar, alpha: u32) -> &[Poly] {
        &self.seqs[&(family, lambda.clone(), alpha)]
    }

    fn shifted(&self, family: Family, lambda: &Scalar, alpha: u32, y: &Scalar) -> &[Poly] {
        &self.shifted[&(family, lambda.clone(), alpha, y.clone())]
    }

    fn build(grid: &GridSpec, suites: &[Suite], options: &RunOptions) -> Cache {
        let k = grid.k_needed(suites);
        let mut lambdas = grid.lambdas.clone();
        if suites.contains(&Suite::Lacunary) && !lambdas.contains(&Scalar::one()) {
            lambdas.push(Scalar::one());
        }
        let keys: Vec<SeqKey> = grid
            .families
            .iter()
            .flat_map(|&f| {
                lambdas
                    .iter()
                    .filter(move |l| f.check_lambda(l).is_ok())
                    .flat_map(move |l| (0..=grid.alpha_max + 1).map(move |a| (f, l.clone(), a)))
            })
            .collect();
        let seqs: HashMap<SeqKey, Arc<Vec<Poly>>> = keys
            .into_par_iter()
            .map(|key| {
                let mut seq = batch_polynomials(key.0, key.2, &key.1, k).expect("admissible lambda");
                if options.inject_error && seq.len() > 2 {
                    seq[2] = &seq[2] + &Poly::one();
                }
                (key, Arc::new(seq))
            })
            .collect();

        let mut shifted = HashMap::new();
        if suites
            .iter()
            .any(|s| matches!(s, Suite::Theorem1Low | Suite::Theorem1High))
        {
            let jobs: Vec<_> = seqs
                .iter()
                .filter(|((_, _, a), _)| *a <= grid.alpha_max)
                .flat_map(|(key, seq)| grid.shifts.iter().map(move |y| (key.clone(), seq.clone(), y.clone())))
                .collect();
            shifted = jobs
                .into_par_iter()
                .map(|((f, l, a), seq, y)| {
                    let moved: Vec<Poly> = seq.iter().map(|p| p.shift(&y)).collect();
                    ((f, l, a, y), Arc::new(moved))
                })
                .collect();
        }
        Cache { seqs, shifted }
    }
}

fn base_params(suite: Suite, family: Family, alpha: u32, lambda: &Scalar) -> Params {
    Params {
        family: Some(family),
        alpha: Some(alpha),
        lambda: Some(lambda.clone()),
        ..Params::new(suite.name())
    }
}

/// A tuple to evaluate, or one already known to be inadmissible (with the reason).
type Tuple = (Suite, std::result::Result<Params, (Params, String)>);

fn enumerate(grid: &GridSpec, suites: &[Suite]) -> Vec<Tuple> {
    let mut tuples = Vec::new();
    for &suite in suites {
        if suite == Suite::CjTable {
            let params = Params {
                j_max: Some(grid.p_hi(suite, 0, 0)),
                ..Params::new(suite.name())
            };
            tuples.push((suite, Ok(params)));
            continue;
        }
        for &family in &grid.families {
            if suite == Suite::Lacunary {
                for alpha in 0..=grid.alpha_max {
                    for p in 0..=grid.p_hi(suite, 0, 0) {
                        let params = Params {
                            p: Some(p),
                            ..base_params(suite, family, alpha, &Scalar::one())
                        };
                        tuples.push((suite, Ok(params)));
                    }
                }
                continue;
            }
            let alphas = if suite == Suite::Corollary1 {
                1..=1
            } else {
                0..=grid.alpha_max
            };
            for lambda in &grid.lambdas {
                if let Err(e) = family.check_lambda(lambda) {
                    let params = Params {
                        family: Some(family),
                        lambda: Some(lambda.clone()),
                        ..Params::new(suite.name())
                    };
                    tuples.push((suite, Err((params, e.to_string()))));
                    continue;
                }
                for alpha in alphas.clone() {
                    let base = base_params(suite, family, alpha, lambda);
                    push_tuples(grid, suite, &base, &mut tuples);
                }
            }
        }
    }
    tuples
}

fn push_tuples(grid: &GridSpec, suite: Suite, base: &Params, out: &mut Vec<Tuple>) {
    let with = |f: &dyn Fn(&mut Params)| {
        let mut p = base.clone();
        f(&mut p);
        p
    };
    match suite {
        Suite::Theorem3 => {
            for p in 0..=grid.p_hi(suite, 0, 0) {
                for rho in &grid.rhos {
                    let params = with(&|q| {
                        q.p = Some(p);
                        q.rho = Some(rho.clone());
                    });
                    if *rho == Scalar::from(-1) {
                        out.push((suite, Err((params, Error::InvalidRho.to_string()))));
                    } else {
                        out.push((suite, Ok(params)));
                    }
                }
            }
        }
        Suite::Functional => {
            for p in 0..=grid.p_hi(suite, 0, 0) {
                out.push((suite, Ok(with(&|q| q.p = Some(p)))));
            }
        }
        _ => {
            for n in 0..=grid.n_max {
                for m in 0..=grid.m_max {
                    let nm = |q: &mut Params| {
                        q.n = Some(n);
                        q.m = Some(m);
                    };
                    match suite {
                        Suite::Theorem1Low | Suite::Theorem1High => {
                            let hi = grid.p_hi(suite, n, m);
                            let ps = if suite == Suite::Theorem1Low {
                                0..=hi.min(n + m)
                            } else {
                                n + m + 1..=hi
                            };
                            for p in ps {
                                for y in &grid.shifts {
                                    out.push((
                                        suite,
                                        Ok(with(&|q| {
                                            nm(q);
                                            q.p = Some(p);
                                            q.y = Some(y.clone());
                                        })),
                                    ));
                                }
                            }
                        }
                        Suite::Theorem2 => {
                            for p in 0..=grid.p_hi(suite, n, m) {
                                out.push((
                                    suite,
                                    Ok(with(&|q| {
                                        nm(q);
                                        q.p = Some(p);
                                    })),
                                ));
                            }
                        }
                        Suite::Corollary2 => {
                            for s in 1..=grid.s_max.min(n + m) {
                                out.push((
                                    suite,
                                    Ok(with(&|q| {
                                        nm(q);
                                        q.s = Some(s);
                                    })),
                                ));
                            }
                        }
                        Suite::Corollary1 | Suite::RemarkR1 => out.push((suite, Ok(with(&nm)))),
                        _ => unreachable!("handled above"),
                    }
                }
            }
        }
    }
}

fn evaluate(suite: Suite, params: Params, cache: &Cache) -> GridOutcome {
    if suite == Suite::CjTable {
        let mut report = verify_cj_table(params.j_max.unwrap_or_default());
        report.params = params;
        return GridOutcome::Checked(report);
    }
    let family = params.family.expect("set by enumeration");
    let alpha = params.alpha.expect("set by enumeration");
    let lambda = params.lambda.clone().expect("set by enumeration");
    let (n, m, p, s) = (
        params.n.unwrap_or_default(),
        params.m.unwrap_or_default(),
        params.p.unwrap_or_default(),
        params.s.unwrap_or_default(),
    );
    let lower = || cache.seq(family, &lambda, alpha);
    let upper = || cache.seq(family, &lambda, alpha + 1);
    let sides = match suite {
        Suite::Theorem1Low | Suite::Theorem1High => {
            let y = params.y.clone().expect("set by enumeration");
            let at_xy = cache.shifted(family, &lambda, alpha, &y);
            Ok(kernels::theorem1(lower(), at_xy, n, m, p, &y))
        }
        Suite::Theorem2 => Ok(kernels::theorem2(family, lower(), upper(), &lambda, n, m, p)),
        Suite::Corollary1 => Ok(kernels::corollary1(family, lower(), &lambda, n, m)),
        Suite::Corollary2 => Ok(kernels::corollary2(family, lower(), upper(), &lambda, n, m, s)),
        Suite::RemarkR1 => Ok(kernels::remark_r1(family, lower(), upper(), &lambda, n, m)),
        Suite::Functional => Ok(kernels::functional(family, lower(), upper(), &lambda, p)),
        Suite::Lacunary => Ok(kernels::lacunary(family, lower(), upper(), p)),
        Suite::Theorem3 => {
            let rho = params.rho.clone().expect("set by enumeration");
            match kernels::theorem3(family, lower(), upper(), &lambda, p, &rho) {
                Ok((lhs, middle, rhs)) => {
                    return GridOutcome::Checked(IdentityReport::chained(params, lhs, middle, rhs));
                }
                Err(e) => Err(e),
            }
        }
        Suite::CjTable => unreachable!("handled above"),
    };
    match sides {
        Ok((lhs, rhs)) => GridOutcome::Checked(IdentityReport::new(params, lhs, rhs)),
        Err(e @ (Error::InvalidRho | Error::InvalidLambda { .. })) => GridOutcome::SkippedInvalid {
            params,
            reason: e.to_string(),
        },
        Err(e) => GridOutcome::Errored {
            params,
            message: e.to_string(),
        },
    }
}

/// Runs every selected suite over every admissible tuple of `grid`.
///
/// Inadmissible `(family, lambda)` pairs and `rho = -1` produce a single
/// `SkippedInvalid` entry instead of a failure.
pub fn run_grid(grid: &GridSpec, suites: &[Suite]) -> Result<Vec<GridEntry>> {
    run_grid_with(grid, suites, &RunOptions::default())
}

pub fn run_grid_with(grid: &GridSpec, suites: &[Suite], options: &RunOptions) -> Result<Vec<GridEntry>> {
    grid.validate(suites)?;
    if suites.is_empty() {
        return Ok(Vec::new());
    }
    let cache = Cache::build(grid, suites, options);
    let tuples = enumerate(grid, suites);
    Ok(tuples
        .into_par_iter()
        .map(|(suite, tuple)| {
            let outcome = match tuple {
                Ok(params) => evaluate(suite, params, &cache),
                Err((params, reason)) => GridOutcome::SkippedInvalid { params, reason },
            };
            GridEntry { suite, outcome }
        })
        .collect())
}
