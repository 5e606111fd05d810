//! Exhaustive cross-check of the grammars against the brute-force reducer.
//!
//! Every term up to a size bound is reduced with a step budget and looked up
//! in `R_0 ..= R_maxN`. The two answers must agree, at most one grammar may
//! claim the term, and inside that grammar exactly one production may
//! generate it. The per-size census of step counts is also compared with the
//! exact series from [`crate::counting`].

use std::fmt::{self, Write as _};

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::counting;
use crate::error::{Error, Result};
use crate::grammar::GrammarStore;
use crate::membership::Matcher;
use crate::term::{enumerate_up_to, reduce_count, Reduction, Term};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub max_size: usize,
    pub max_n: usize,
    pub fuel: usize,
    pub jobs: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_size: 6,
            max_n: 3,
            fuel: 64,
            jobs: 1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Violation {
    /// A grammar other than the oracle's step count generates the term.
    Unsound,
    /// The oracle's step count is within bounds but that grammar misses the term.
    Incomplete,
    /// More than one grammar generates the term.
    NotDisjoint,
    /// The right grammar generates the term through zero or several productions.
    Ambiguous,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Violation::Unsound => "unsound",
            Violation::Incomplete => "incomplete",
            Violation::NotDisjoint => "not-disjoint",
            Violation::Ambiguous => "ambiguous",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Mismatch {
    Term {
        term: Term,
        violation: Violation,
        oracle: Reduction,
        memberships: Vec<usize>,
        productions: usize,
    },
    Count {
        n: usize,
        k: usize,
        census: u64,
        series: BigUint,
    },
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mismatch::Term {
                term,
                violation,
                oracle,
                memberships,
                productions,
            } => {
                let oracle = match oracle {
                    Reduction::Normalized(n) => n.to_string(),
                    Reduction::FuelExhausted => "fuel-exhausted".into(),
                };
                write!(
                    f,
                    "{violation}\t{term}\toracle={oracle}\tgrammars={memberships:?}\tproductions={productions}"
                )
            }
            Mismatch::Count {
                n,
                k,
                census,
                series,
            } => write!(f, "count\tn={n} k={k}\tcensus={census}\tseries={series}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub config: VerifyConfig,
    pub terms: usize,
    /// `census[n][k]`: terms of size `k` reaching normal form in exactly `n`
    /// steps, for `n <= max_n`.
    pub census: Vec<Vec<u64>>,
    /// Terms of size `k` needing more than `max_n` steps or exhausting fuel.
    pub beyond: Vec<u64>,
    pub mismatches: Vec<Mismatch>,
}

impl Report {
    pub fn is_ok(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn census_at(&self, n: usize, k: usize) -> u64 {
        self.census
            .get(n)
            .and_then(|row| row.get(k))
            .copied()
            .unwrap_or(0)
    }

    pub fn render(&self) -> String {
        let c = &self.config;
        let mut out = String::new();
        let _ = writeln!(
            out,
            "verify: max-size {} max-n {} fuel {}",
            c.max_size, c.max_n, c.fuel
        );
        let _ = writeln!(out, "terms: {}", self.terms);
        out.push_str("census (rows: steps, columns: size)\n");
        out.push_str("n\\k");
        for k in 0..=c.max_size {
            let _ = write!(out, "\t{k}");
        }
        out.push('\n');
        for (n, row) in self.census.iter().enumerate() {
            let _ = write!(out, "{n}");
            for v in row {
                let _ = write!(out, "\t{v}");
            }
            out.push('\n');
        }
        let _ = write!(out, ">{}", c.max_n);
        for v in &self.beyond {
            let _ = write!(out, "\t{v}");
        }
        out.push('\n');
        let _ = writeln!(out, "mismatches: {}", self.mismatches.len());
        for m in &self.mismatches {
            let _ = writeln!(out, "{m}");
        }
        out
    }
}

#[derive(Default)]
struct Partial {
    census: Vec<Vec<u64>>,
    beyond: Vec<u64>,
    mismatches: Vec<Mismatch>,
}

/// Run the cross-check. `store` must already hold `R_0 ..= R_maxN`, and
/// `fuel` must be at least `max_n` so that an exhausted budget proves the
/// term lies outside every grammar checked.
pub fn verify(store: &GrammarStore, config: VerifyConfig) -> Result<Report> {
    if config.fuel < config.max_n {
        return Err(Error::Usage(format!(
            "fuel {} is below max-n {}",
            config.fuel, config.max_n
        )));
    }
    store.grammar(config.max_n)?;
    let terms: Vec<Term> = enumerate_up_to(config.max_size)
        .into_iter()
        .flatten()
        .collect();
    let jobs = config.jobs.max(1);
    let chunk = terms.len().div_ceil(jobs * 8).max(1);

    let check = |slice: &[Term]| -> Result<Partial> {
        let mut matcher = Matcher::new(store);
        let mut part = Partial {
            census: vec![vec![0; config.max_size + 1]; config.max_n + 1],
            beyond: vec![0; config.max_size + 1],
            mismatches: Vec::new(),
        };
        for t in slice {
            check_term(&mut matcher, t, &config, &mut part)?;
        }
        Ok(part)
    };
    let parts: Vec<Result<Partial>> = if jobs == 1 {
        terms.chunks(chunk).map(check).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::Usage(e.to_string()))?;
        pool.install(|| terms.par_chunks(chunk).map(check).collect())
    };

    let mut census = vec![vec![0; config.max_size + 1]; config.max_n + 1];
    let mut beyond = vec![0; config.max_size + 1];
    let mut mismatches = Vec::new();
    for part in parts {
        let part = part?;
        for (row, add) in census.iter_mut().zip(&part.census) {
            for (v, a) in row.iter_mut().zip(add) {
                *v += a;
            }
        }
        for (v, a) in beyond.iter_mut().zip(&part.beyond) {
            *v += a;
        }
        mismatches.extend(part.mismatches);
    }

    for (n, row) in census.iter().enumerate() {
        let series = counting::series(store, n, config.max_size)?;
        for (k, (&got, want)) in row.iter().zip(&series.coefficients).enumerate() {
            if BigUint::from(got) != *want {
                mismatches.push(Mismatch::Count {
                    n,
                    k,
                    census: got,
                    series: want.clone(),
                });
            }
        }
    }

    Ok(Report {
        config,
        terms: terms.len(),
        census,
        beyond,
        mismatches,
    })
}

fn check_term(
    matcher: &mut Matcher<'_>,
    t: &Term,
    config: &VerifyConfig,
    part: &mut Partial,
) -> Result<()> {
    let oracle = reduce_count(t, config.fuel);
    let expected = match oracle {
        Reduction::Normalized(n) if n <= config.max_n => Some(n),
        _ => None,
    };
    let size = t.size() as usize;
    match expected {
        Some(n) => part.census[n][size] += 1,
        None => part.beyond[size] += 1,
    }
    let memberships = matcher.memberships(t, config.max_n)?;
    let productions = match expected {
        Some(n) => matcher.count_matching_productions(n, t)?,
        None => 0,
    };
    let mut report = |violation| {
        part.mismatches.push(Mismatch::Term {
            term: t.clone(),
            violation,
            oracle,
            memberships: memberships.clone(),
            productions,
        })
    };
    if memberships.len() > 1 {
        report(Violation::NotDisjoint);
    }
    if memberships.iter().any(|&m| Some(m) != expected) {
        report(Violation::Unsound);
    }
    if let Some(n) = expected {
        if !memberships.contains(&n) {
            report(Violation::Incomplete);
        } else if productions != 1 {
            report(Violation::Ambiguous);
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(max_size: usize, max_n: usize, fuel: usize, jobs: usize) -> Report {
        let store = GrammarStore::with_grammars(max_n).unwrap();
        verify(
            &store,
            VerifyConfig {
                max_size,
                max_n,
                fuel,
                jobs,
            },
        )
        .unwrap()
    }

    #[test]
    fn trivial_run() {
        let r = run(0, 0, 1, 1);
        assert!(r.is_ok());
        assert_eq!(r.terms, 2);
        assert_eq!(r.census_at(0, 0), 2);
    }

    #[test]
    fn size_two_census() {
        let r = run(2, 1, 8, 1);
        assert!(r.is_ok(), "{}", r.render());
        assert_eq!(r.census_at(1, 2), 4);
        assert_eq!(r.census_at(0, 2), 12);
    }

    #[test]
    fn worker_count_does_not_change_report() {
        let a = run(4, 2, 16, 1);
        let b = run(4, 2, 16, 3);
        assert_eq!(a.census, b.census);
        assert_eq!(a.beyond, b.beyond);
        assert_eq!(a.render(), b.render());
    }

    #[test]
    fn fuel_below_bound_rejected() {
        let store = GrammarStore::with_grammars(2).unwrap();
        let config = VerifyConfig {
            max_size: 2,
            max_n: 2,
            fuel: 1,
            jobs: 1,
        };
        assert!(matches!(verify(&store, config), Err(Error::Usage(_))));
    }
}
