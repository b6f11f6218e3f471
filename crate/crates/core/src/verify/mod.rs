//! Claim runners: each binds one computable statement to a computation and
//! returns a pass / fail / undecided report with its evidence.

mod obstruction;
mod powers;
mod small;
mod s10;
pub mod tables;
mod witness;

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::comgraph::SliceKind;
use crate::error::{Error, Result};

pub use obstruction::{verify_obstruction, ObstructionCheck};
pub use powers::verify_powers_lemma;
pub use s10::verify_further_work_s10;
pub use small::{verify_components, verify_small_n_theorem, verify_structure, verify_y_b};
pub use witness::verify_witness_table;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
    Undecided,
}

impl std::fmt::Display for Outcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "fail",
            Outcome::Undecided => "undecided",
        })
    }
}

/// A fail carries a counterexample in its evidence; an undecided report
/// names the bound that was hit.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub claim_id: String,
    pub statement: String,
    pub parameters: BTreeMap<String, Value>,
    pub result: Outcome,
    pub evidence: Value,
    pub wall_time_ms: u64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.result == Outcome::Pass
    }
}

/// Resource limits shared by all runners.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct RunConfig {
    /// Largest group closed explicitly.
    pub cap: usize,
    /// Node budget for each branch-and-bound search.
    pub budget: u64,
}

impl Default for RunConfig {
    fn default() -> RunConfig {
        RunConfig {
            cap: crate::groups::DEFAULT_CAP,
            budget: crate::comgraph::DEFAULT_BUDGET,
        }
    }
}

/// What a runner returns before timing and identification are added.
pub struct Finding {
    pub result: Outcome,
    pub evidence: Value,
}

impl Finding {
    pub fn new(ok: bool, evidence: Value) -> Finding {
        Finding {
            result: if ok { Outcome::Pass } else { Outcome::Fail },
            evidence,
        }
    }

    pub fn undecided(evidence: Value) -> Finding {
        Finding {
            result: Outcome::Undecided,
            evidence,
        }
    }
}

type Runner = fn(Option<usize>, &RunConfig) -> Result<Finding>;

/// A registered claim. Claims with an empty `default_n` take no degree.
pub struct Claim {
    pub id: &'static str,
    pub statement: &'static str,
    pub default_n: &'static [usize],
    run: Runner,
}

impl Claim {
    pub fn takes_n(&self) -> bool {
        !self.default_n.is_empty()
    }

    /// Runs the claim once; `n` is ignored by claims without a degree.
    pub fn run(&self, n: Option<usize>, config: &RunConfig) -> Result<VerificationReport> {
        let n = if self.takes_n() { n } else { None };
        if self.takes_n() && n.is_none() {
            return Err(Error::InvalidParameters(format!("{} needs a degree", self.id)));
        }
        let start = Instant::now();
        let finding = (self.run)(n, config)?;
        let mut parameters = BTreeMap::new();
        if let Some(n) = n {
            parameters.insert("n".to_string(), json!(n));
        }
        parameters.insert("cap".to_string(), json!(config.cap));
        parameters.insert("budget".to_string(), json!(config.budget));
        Ok(VerificationReport {
            claim_id: self.id.to_string(),
            statement: self.statement.to_string(),
            parameters,
            result: finding.result,
            evidence: finding.evidence,
            wall_time_ms: start.elapsed().as_millis() as u64,
        })
    }
}

fn need_n(n: Option<usize>) -> Result<usize> {
    n.ok_or_else(|| Error::InvalidParameters("a degree is required".into()))
}

macro_rules! obstruction_claim {
    ($id:literal, $kind:expr, $check:expr, $statement:literal, $ns:expr) => {
        Claim {
            id: $id,
            statement: $statement,
            default_n: $ns,
            run: |n, c| verify_obstruction($kind, need_n(n)?, $check, c),
        }
    };
}

const SMALL_N: &[usize] = &[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 15];

/// Every claim, in id order.
pub static CLAIMS: &[Claim] = &[
    Claim {
        id: "cor-alt-less-11.components",
        statement: "The component of the 4-4 class (A_8, A_9) and of the 4-4-3 class (A_11) has 12, 12 and 24 elements with δ = Δ = 3",
        default_n: &[8, 9, 11],
        run: |n, c| verify_components(need_n(n)?, c),
    },
    Claim {
        id: "further-work.s10",
        statement: "Y_b(S_10) is the single class 4-2-2, and δ(S_10) = Δ(S_10) iff 9450 pairwise non-commuting elements of that class exist",
        default_n: &[],
        run: |_, c| verify_further_work_s10(c),
    },
    Claim {
        id: "lemma-2k2kl.structure",
        statement: "Commuting elements of a 2k-2k-ℓ class share their ℓ-cycle up to powers and their support, and each component acts as double transpositions on one partition into four k-sets",
        default_n: &[8, 11, 15],
        run: |n, c| verify_structure(need_n(n)?, c),
    },
    Claim {
        id: "lemma-alt-15.components",
        statement: "In A_15 the components through the given seeds of 7-4-4, 6-6-3, 6-4-2-2 and 6-3-3-2 have 72, 432, 72 and 96 elements with δ = Δ",
        default_n: &[15],
        run: |n, c| verify_components(need_n(n)?, c),
    },
    Claim {
        id: "lemma-alt-abelian-centralizer.y-b",
        statement: "Y_b(A_n) is empty for n ≤ 7 and n = 10, is 4-4 for n = 8, 9, is 4-4-3 for n = 11, and is 7-4-4, 6-6-3, 6-4-2-2, 6-3-3-2 for n = 15",
        default_n: SMALL_N,
        run: |n, c| verify_y_b(need_n(n)?, c),
    },
    Claim {
        id: "lemma-alt-even.witness-table",
        statement: "Each listed f commutes with its h and has an abelian centralizer in A_n",
        default_n: &[12, 16, 18, 20],
        run: |n, c| verify_witness_table(SliceKind::Even, need_n(n)?, c),
    },
    Claim {
        id: "lemma-alt-odd.witness-table",
        statement: "Each listed f commutes with its h and has an abelian centralizer in A_n",
        default_n: &[21, 23],
        run: |n, c| verify_witness_table(SliceKind::Odd, need_n(n)?, c),
    },
    Claim {
        id: "lemma-powers.even",
        statement: "For h of type 2-3-d^k with dk = n-8, f = abc commutes with h and C_{A_n}(f) ≤ C_{A_n}(h)",
        default_n: &[16],
        run: |n, c| verify_powers_lemma(SliceKind::Even, need_n(n)?, c),
    },
    Claim {
        id: "lemma-powers.odd",
        statement: "For h of type 2-3-d^k-e^j with dk = 8 and ej = n-16, f = abcθ commutes with h and C_{A_n}(f) ≤ C_{A_n}(h)",
        default_n: &[21],
        run: |n, c| verify_powers_lemma(SliceKind::Odd, need_n(n)?, c),
    },
    obstruction_claim!("prop-alt-even.count-1120", SliceKind::Even, ObstructionCheck::Count,
        "The slice with a fixed long cycle has 1120 elements", &[12, 16]),
    obstruction_claim!("prop-alt-even.cover-280", SliceKind::Even, ObstructionCheck::Cover,
        "The groups ⟨a, b, c, γ⟩ ∩ A_n form an abelian cover of the slice with 280 members", &[12, 16]),
    obstruction_claim!("prop-alt-even.cover-meets-4", SliceKind::Even, ObstructionCheck::CoverMeets,
        "Each cover member meets the slice in exactly 4 elements", &[12, 16]),
    obstruction_claim!("prop-alt-even.max-commuting-4", SliceKind::Even, ObstructionCheck::MaxCommuting,
        "A pairwise commuting subset of the slice has at most 4 elements", &[12, 16]),
    obstruction_claim!("prop-alt-even.overgroups", SliceKind::Even, ObstructionCheck::Overgroups,
        "A slice element lies in maximal abelian subgroups of two shapes, one extending it by a 2-cycle and one by a 3-cycle", &[12, 16]),
    obstruction_claim!("prop-alt-even.reps-infeasible", SliceKind::Even, ObstructionCheck::Reps,
        "With a_1 fixed, A_1, …, A_9 admit no pairwise non-commuting slice-type representatives, and neither does the whole cover", &[12, 16]),
    obstruction_claim!("prop-alt-odd.count-1120", SliceKind::Odd, ObstructionCheck::Count,
        "The slice with fixed γ and θ has 1120 elements", &[21]),
    obstruction_claim!("prop-alt-odd.cover-280", SliceKind::Odd, ObstructionCheck::Cover,
        "The groups ⟨a, b, c, γ, θ⟩ ∩ A_n form an abelian cover of the slice with 280 members", &[21]),
    obstruction_claim!("prop-alt-odd.cover-meets-4", SliceKind::Odd, ObstructionCheck::CoverMeets,
        "Each cover member meets the slice in exactly 4 elements", &[21]),
    obstruction_claim!("prop-alt-odd.max-commuting-4", SliceKind::Odd, ObstructionCheck::MaxCommuting,
        "A pairwise commuting subset of the slice has at most 4 elements", &[21]),
    obstruction_claim!("prop-alt-odd.overgroups", SliceKind::Odd, ObstructionCheck::Overgroups,
        "A slice element lies in maximal abelian subgroups of two shapes, one extending it by a 2-cycle and one by a 3-cycle", &[21]),
    obstruction_claim!("prop-alt-odd.reps-infeasible", SliceKind::Odd, ObstructionCheck::Reps,
        "With a_1 fixed, A_1, …, A_9 admit no pairwise non-commuting slice-type representatives, and neither does the whole cover", &[21]),
    Claim {
        id: "theorem-small",
        statement: "δ(A_n) = Δ(A_n) for n ≤ 11 and n = 15, certified on every component of Y_b",
        default_n: SMALL_N,
        run: |n, c| verify_small_n_theorem(need_n(n)?, c),
    },
];

/// Claims matching `pattern`: `all`, an exact id, or an id prefix ending at
/// a `.` boundary (so `prop-alt-even` selects its six sub-checks).
pub fn select(pattern: &str) -> Result<Vec<&'static Claim>> {
    let hits: Vec<&Claim> = CLAIMS
        .iter()
        .filter(|c| {
            pattern == "all"
                || c.id == pattern
                || c.id
                    .strip_prefix(pattern)
                    .is_some_and(|rest| rest.starts_with('.'))
        })
        .collect();
    if hits.is_empty() {
        return Err(Error::InvalidParameters(format!("no claim matches {pattern:?}")));
    }
    Ok(hits)
}

/// Runs every selected claim at each requested degree (or its defaults),
/// `jobs` at a time. Reports come back ordered by claim id, then degree,
/// whatever the completion order.
pub fn run_claims(
    claims: &[&Claim],
    degrees: Option<&[usize]>,
    config: &RunConfig,
    jobs: usize,
) -> Result<Vec<VerificationReport>> {
    let mut tasks: Vec<(&Claim, Option<usize>)> = Vec::new();
    for c in claims {
        if !c.takes_n() {
            tasks.push((c, None));
            continue;
        }
        for &n in degrees.unwrap_or(c.default_n) {
            tasks.push((c, Some(n)));
        }
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::InvalidParameters(e.to_string()))?;
    let mut reports = pool.install(|| {
        tasks
            .par_iter()
            .map(|(c, n)| c.run(*n, config))
            .collect::<Result<Vec<_>>>()
    })?;
    reports.sort_by(|a, b| {
        (a.claim_id.as_str(), a.parameters.get("n").and_then(Value::as_u64))
            .cmp(&(b.claim_id.as_str(), b.parameters.get("n").and_then(Value::as_u64)))
    });
    Ok(reports)
}
