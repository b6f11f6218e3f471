use serde::Serialize;

use super::bits::Bits;
use super::graph::{CommutingGraph, VertexSet};
use super::solve::{greedy_clique, max_clique, maximal_cliques, min_set_cover};
use crate::error::{Error, Result};
use crate::groups::{close, SubgroupGens};
use crate::perm::Permutation;

/// Default node budget for the branch-and-bound searches.
pub const DEFAULT_BUDGET: u64 = 50_000_000;

/// Default bound on the number of maximal cliques harvested for covers.
pub const DEFAULT_CLIQUE_LIMIT: usize = 500_000;

/// A family of abelian subgroups given by a structural recipe.
#[derive(Debug, Clone, Serialize)]
pub struct CoverFamily {
    pub description: String,
    pub members: Vec<SubgroupGens>,
}

#[derive(Debug, Clone, Serialize)]
pub struct IndependenceResult {
    pub delta: usize,
    pub certificate: Vec<Permutation>,
    pub exact: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct CoverResult {
    pub size: usize,
    pub certificate: Vec<SubgroupGens>,
    pub exact: bool,
    /// Best proven lower bound on the clique-cover number.
    pub lower_bound: usize,
}

/// Largest pairwise non-commuting subset, as a maximum clique of the
/// complement graph.
pub fn independence_number(g: &CommutingGraph, budget: u64) -> IndependenceResult {
    independence_with_bound(g, budget, None)
}

fn independence_with_bound(
    g: &CommutingGraph,
    budget: u64,
    upper: Option<usize>,
) -> IndependenceResult {
    let comp = g.complement();
    let seed = greedy_clique(&comp);
    let r = max_clique(&comp, budget, &seed, upper);
    // Meeting a proven upper bound closes the search as well.
    let exact = r.exact || upper == Some(r.best.len());
    IndependenceResult {
        delta: r.best.len(),
        certificate: r.best.iter().map(|&i| g.vertices.elements()[i].clone()).collect(),
        exact,
    }
}

/// Size of the largest pairwise commuting subset.
pub fn clique_number(g: &CommutingGraph, budget: u64) -> (usize, bool) {
    let seed = greedy_clique(g.adjacency());
    let r = max_clique(g.adjacency(), budget, &seed, None);
    (r.best.len(), r.exact)
}

/// Fewest abelian subgroups whose union contains every vertex.
///
/// Candidate cliques are the maximal cliques of the graph together with the
/// traces of any hinted subgroups. Each clique used is reported as the
/// abelian subgroup it generates. Exactness comes from meeting a lower bound
/// (an independent set, or `|V| / ω`) or from the set-cover search closing.
pub fn clique_cover_number(
    g: &CommutingGraph,
    hint: Option<&CoverFamily>,
    budget: u64,
    cap: usize,
) -> Result<CoverResult> {
    clique_cover_with_bound(g, hint, budget, cap, 0)
}

fn clique_cover_with_bound(
    g: &CommutingGraph,
    hint: Option<&CoverFamily>,
    budget: u64,
    cap: usize,
    known_lower: usize,
) -> Result<CoverResult> {
    let n = g.len();
    if n == 0 {
        return Ok(CoverResult {
            size: 0,
            certificate: Vec::new(),
            exact: true,
            lower_bound: 0,
        });
    }
    let (omega, omega_exact) = clique_number(g, budget);
    let mut lower = known_lower.max(greedy_clique(&g.complement()).len());
    if omega_exact {
        lower = lower.max(n.div_ceil(omega));
    }

    let mut sets: Vec<Bits> = Vec::new();
    if let Some(family) = hint {
        for member in &family.members {
            let trace = Bits::from_indices(
                n,
                close(member, cap)?
                    .iter()
                    .filter_map(|x| g.vertices.index_of(x)),
            );
            if !trace.is_empty() && is_clique(g, &trace) {
                sets.push(trace);
            }
        }
        let hinted = Bits::from_indices(n, sets.iter().flat_map(|s| s.iter().collect::<Vec<_>>()));
        if hinted.count() == n {
            let chosen = super::solve::greedy_cover(n, &sets);
            if chosen.len() <= lower {
                return Ok(cover_result(g, &sets, &chosen, true, lower));
            }
        }
    }

    let harvested = maximal_cliques(g.adjacency(), DEFAULT_CLIQUE_LIMIT).ok_or(
        Error::BudgetExhausted {
            limit: DEFAULT_CLIQUE_LIMIT as u64,
        },
    )?;
    sets.extend(harvested);
    sets.sort();
    sets.dedup();
    let r = min_set_cover(g.adjacency(), &sets, None, lower, budget)
        .expect("maximal cliques cover every vertex");
    let exact = r.exact || r.best.len() <= lower;
    let lower = if r.exact { r.best.len() } else { lower };
    Ok(cover_result(g, &sets, &r.best, exact, lower))
}

fn is_clique(g: &CommutingGraph, set: &Bits) -> bool {
    set.iter().all(|v| set.and_not(g.neighbors(v)).iter().all(|w| w == v))
}

fn cover_result(
    g: &CommutingGraph,
    sets: &[Bits],
    chosen: &[usize],
    exact: bool,
    lower: usize,
) -> CoverResult {
    let mut certificate: Vec<SubgroupGens> = chosen
        .iter()
        .map(|&i| {
            SubgroupGens::new(
                g.vertices.degree,
                sets[i].iter().map(|v| g.vertices.elements()[v].clone()),
            )
        })
        .collect();
    certificate.sort_by_key(|s| s.canonical_generators());
    CoverResult {
        size: chosen.len(),
        certificate,
        exact,
        lower_bound: lower.min(chosen.len()),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Status {
    Certified,
    Bounds { lo: usize, hi: usize },
}

/// `δ` and `Δ` of a commuting graph with certificates.
#[derive(Debug, Clone, Serialize)]
pub struct ComponentAnalysis {
    pub component: VertexSet,
    pub delta: usize,
    #[serde(rename = "Delta")]
    pub cover_number: usize,
    pub independent_certificate: Vec<Permutation>,
    pub cover_certificate: Vec<SubgroupGens>,
    pub status: Status,
    pub delta_exact: bool,
    pub cover_exact: bool,
}

impl ComponentAnalysis {
    pub fn is_certified(&self) -> bool {
        self.status == Status::Certified
    }

    /// Certified with `δ = Δ`.
    pub fn certified_equal(&self) -> bool {
        self.is_certified() && self.delta == self.cover_number
    }
}

/// Sandwich analysis: a large independent set from below, a small abelian
/// cover from above, and exact searches only when the two do not meet.
pub fn analyze(
    g: &CommutingGraph,
    hint: Option<&CoverFamily>,
    budget: u64,
    cap: usize,
) -> Result<ComponentAnalysis> {
    let quick = greedy_clique(&g.complement()).len();
    let cover = clique_cover_with_bound(g, hint, budget, cap, quick)?;
    let independent = independence_with_bound(g, budget, Some(cover.size));
    let delta_exact = independent.exact;
    let cover_exact = cover.exact || independent.delta == cover.size;
    assert!(
        independent.delta <= cover.size,
        "independent set larger than an abelian cover"
    );
    let status = if independent.delta == cover.size || (delta_exact && cover_exact) {
        Status::Certified
    } else {
        Status::Bounds {
            lo: independent.delta.max(cover.lower_bound),
            hi: cover.size,
        }
    };
    Ok(ComponentAnalysis {
        component: g.vertices.clone(),
        delta: independent.delta,
        cover_number: cover.size,
        independent_certificate: independent.certificate,
        cover_certificate: cover.certificate,
        status,
        delta_exact,
        cover_exact,
    })
}
