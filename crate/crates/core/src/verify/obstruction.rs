use std::collections::BTreeSet;

use serde_json::{json, Value};

use super::{Finding, RunConfig};
use crate::comgraph::solve::{greedy_clique, max_clique};
use crate::comgraph::validate::check_cover;
use crate::comgraph::{
    family_reps_2sat, forced_first, full_reps_search, noncommuting_reps_search, obstruction_groups,
    replay, CommutingGraph, RepsOptions, RepsOutcome, RepsSearch, SliceKind, SliceSpec,
};
use crate::error::Result;
use crate::groups::{close, maximal_abelian_overgroups, GroupSpec};
use crate::perm::Permutation;

/// The sub-checks of the slice obstruction, in the order the argument uses
/// them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ObstructionCheck {
    Count,
    MaxCommuting,
    Cover,
    CoverMeets,
    Overgroups,
    Reps,
}

const SLICE_SIZE: usize = 1120;
const FAMILY_SIZE: usize = 280;
const MAX_COMMUTING: usize = 4;

pub fn verify_obstruction(
    kind: SliceKind,
    n: usize,
    check: ObstructionCheck,
    config: &RunConfig,
) -> Result<Finding> {
    let slice = SliceSpec::new(kind, n)?;
    match check {
        ObstructionCheck::Count => count(&slice),
        ObstructionCheck::MaxCommuting => max_commuting(&slice),
        ObstructionCheck::Cover => cover(&slice, config),
        ObstructionCheck::CoverMeets => cover_meets(&slice, config),
        ObstructionCheck::Overgroups => overgroups(&slice, config),
        ObstructionCheck::Reps => reps(&slice, config),
    }
}

fn count(slice: &SliceSpec) -> Result<Finding> {
    let got = slice.elements().len();
    // A 2-cycle, then a 3-cycle on the remaining six points, two ways.
    let formula = 28 * 20 * 2;
    Ok(Finding::new(
        got == SLICE_SIZE && formula == SLICE_SIZE,
        json!({ "slice_size": got, "formula": formula, "expected": SLICE_SIZE }),
    ))
}

fn max_commuting(slice: &SliceSpec) -> Result<Finding> {
    let g = CommutingGraph::new(slice.elements());
    let seed = greedy_clique(g.adjacency());
    let r = max_clique(g.adjacency(), u64::MAX, &seed, None);
    let clique: Vec<&Permutation> = r.best.iter().map(|&i| &g.vertices.elements()[i]).collect();
    let commuting = clique
        .iter()
        .enumerate()
        .all(|(i, a)| clique[i + 1..].iter().all(|b| a.commutes_with(b)));
    Ok(Finding::new(
        r.exact && commuting && clique.len() == MAX_COMMUTING,
        json!({
            "max_commuting": clique.len(),
            "exact": r.exact,
            "search_nodes": r.nodes,
            "witness": clique.iter().map(|p| p.render()).collect::<Vec<_>>(),
        }),
    ))
}

fn cover(slice: &SliceSpec, config: &RunConfig) -> Result<Finding> {
    let family = slice.cover_family();
    let elements = slice.elements();
    let checked = check_cover(elements.elements(), &family.members, config.cap);
    Ok(Finding::new(
        family.members.len() == FAMILY_SIZE && checked.is_ok(),
        json!({
            "description": family.description,
            "members": family.members.len(),
            "expected": FAMILY_SIZE,
            "abelian_cover_check": checked.err().unwrap_or_else(|| "ok".into()),
        }),
    ))
}

fn cover_meets(slice: &SliceSpec, config: &RunConfig) -> Result<Finding> {
    let family = slice.cover_family();
    let elements = slice.elements();
    let mut sizes: BTreeSet<usize> = BTreeSet::new();
    let mut seen: BTreeSet<Permutation> = BTreeSet::new();
    let mut overlaps = 0;
    for m in &family.members {
        let trace: Vec<Permutation> = close(m, config.cap)?
            .into_iter()
            .filter(|x| elements.contains(x))
            .collect();
        sizes.insert(trace.len());
        for x in trace {
            if !seen.insert(x) {
                overlaps += 1;
            }
        }
    }
    let ok = sizes == BTreeSet::from([MAX_COMMUTING]) && overlaps == 0 && seen.len() == SLICE_SIZE;
    Ok(Finding::new(
        ok,
        json!({
            "intersection_sizes": sizes,
            "elements_in_two_members": overlaps,
            "elements_covered": seen.len(),
            "partition": overlaps == 0 && seen.len() == SLICE_SIZE,
        }),
    ))
}

/// The three free points that the short part of `g` leaves fixed.
fn spare_points(g: &Permutation) -> Vec<usize> {
    (0..8).filter(|&x| g.apply(x) == x).collect()
}

fn overgroups(slice: &SliceSpec, config: &RunConfig) -> Result<Finding> {
    let n = slice.degree;
    let g = forced_first(slice);
    let spare = spare_points(&g);
    let elements = slice.elements();
    let family_traces: BTreeSet<Vec<Permutation>> = slice
        .cover_family()
        .members
        .iter()
        .map(|m| {
            close(m, config.cap).map(|c| c.into_iter().filter(|x| elements.contains(x)).collect())
        })
        .collect::<Result<_>>()?;
    let groups = maximal_abelian_overgroups(&g, &GroupSpec::alt(n), config.cap)?;
    let mut shapes: BTreeSet<&str> = BTreeSet::new();
    let mut out = Vec::new();
    let mut ok = true;
    for s in &groups {
        let all = close(s, config.cap)?;
        // The action on the spare points tells the two shapes apart.
        let on_spare: BTreeSet<Vec<usize>> = all
            .iter()
            .map(|x| spare.iter().map(|&p| x.apply(p)).collect())
            .collect();
        let shape = match on_spare.len() {
            2 => "2-cycle",
            3 => "3-cycle",
            _ => "other",
        };
        shapes.insert(shape);
        let trace: Vec<Permutation> = all.iter().filter(|x| elements.contains(x)).cloned().collect();
        let in_family = family_traces.contains(&trace);
        ok &= trace.len() <= MAX_COMMUTING && (shape != "3-cycle" || in_family);
        out.push(json!({
            "generators": s.generators.iter().map(Permutation::render).collect::<Vec<_>>(),
            "order": all.len(),
            "shape": shape,
            "meets_slice": trace.len(),
            "trace_is_a_cover_member": in_family,
        }));
    }
    ok &= shapes == BTreeSet::from(["2-cycle", "3-cycle"]);
    Ok(Finding::new(
        ok,
        json!({
            "element": g.render(),
            "maximal_abelian_overgroups": out,
            "shapes": shapes,
        }),
    ))
}

fn search_summary(s: &RepsSearch) -> Value {
    match &s.outcome {
        RepsOutcome::Feasible { assignment } => json!({
            "feasible": true,
            "candidate_counts": s.candidate_counts,
            "searched_counts": s.searched_counts,
            "assignment": assignment.iter().map(Permutation::render).collect::<Vec<_>>(),
        }),
        RepsOutcome::Infeasible { trace } => json!({
            "feasible": false,
            "candidate_counts": s.candidate_counts,
            "searched_counts": s.searched_counts,
            "nodes": trace.nodes,
            "dead_ends": trace.total_dead_ends,
            "dead_ends_per_group": trace.dead_end_counts,
            "first_dead_ends": trace.dead_ends.iter().take(5).map(|d| json!({
                "prefix": d.prefix.iter().map(Permutation::render).collect::<Vec<_>>(),
                "group": d.dead_group + 1,
            })).collect::<Vec<_>>(),
        }),
    }
}

/// Degrees up to this run the per-first-choice searches without
/// quotienting candidates.
const UNREDUCED_UP_TO: usize = 16;

fn reps(slice: &SliceSpec, config: &RunConfig) -> Result<Finding> {
    let groups = obstruction_groups(slice, 9)?;
    let t = slice.cycle_type();
    let options = RepsOptions {
        cap: config.cap,
        ..RepsOptions::default()
    };

    // The argument as written: a_1 fixed, candidates quotiented.
    let forced = noncommuting_reps_search(&groups, &t, &[(0, forced_first(slice))], &options)?;
    let replayed = replay(&forced, &groups, &t, &options);

    // Every first choice, each moved into the standard position.
    let full_options = RepsOptions {
        symmetry_reduction: slice.degree > UNREDUCED_UP_TO,
        ..options.clone()
    };
    let runs = full_reps_search(slice, 9, &full_options)?;
    let every_first_blocked = runs.iter().all(|r| !r.search.is_feasible());

    // Without fixing a_1 the nine groups alone are satisfiable.
    let free = noncommuting_reps_search(&groups, &t, &[], &options)?;

    // No non-commuting transversal of the whole cover, hence no
    // non-commuting subset of the slice of size 280.
    let family = family_reps_2sat(&slice.cover_family().members, &t, config.cap)?;

    let ok = !forced.is_feasible() && replayed.is_ok() && every_first_blocked && !family.satisfiable;
    Ok(Finding::new(
        ok,
        json!({
            "forced_first": forced_first(slice).render(),
            "forced_search": search_summary(&forced),
            "replay": replayed.err().unwrap_or_else(|| "ok".into()),
            "first_choice_runs": {
                "runs": runs.len(),
                "symmetry_reduction": full_options.symmetry_reduction,
                "all_infeasible": every_first_blocked,
                "nodes": runs.iter().map(|r| match &r.search.outcome {
                    RepsOutcome::Infeasible { trace } => trace.nodes,
                    RepsOutcome::Feasible { .. } => 0,
                }).sum::<u64>(),
                "blocked_first_choices": runs.iter().map(|r| json!({
                    "first": r.first.render(),
                    "transport": r.transport.render(),
                    "feasible": r.search.is_feasible(),
                })).collect::<Vec<_>>(),
            },
            "unforced_nine_groups": search_summary(&free),
            "whole_cover_2sat": {
                "groups": family.groups,
                "clauses": family.clauses,
                "satisfiable": family.satisfiable,
            },
        }),
    ))
}
