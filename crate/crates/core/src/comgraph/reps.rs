use std::collections::BTreeMap;

use serde::Serialize;

use super::bits::Bits;
use super::slice::SliceSpec;
use crate::error::{Error, Result};
use crate::groups::{close, intersect_with_alt, SubgroupGens};
use crate::perm::{CycleType, Permutation};

/// Short cycles of the nine subgroups whose representatives cannot be
/// chosen pairwise non-commuting: two 3-cycles and a 2-cycle each.
pub const OBSTRUCTION_GROUPS: [[&str; 3]; 9] = [
    ["(1,2,3)", "(4,5,6)", "(7,8)"],
    ["(1,2,3)", "(5,7,8)", "(4,6)"],
    ["(5,7,8)", "(2,4,6)", "(1,3)"],
    ["(2,4,6)", "(1,3,5)", "(7,8)"],
    ["(1,3,5)", "(6,7,8)", "(2,4)"],
    ["(1,2,3)", "(4,7,8)", "(5,6)"],
    ["(4,7,8)", "(1,5,6)", "(2,3)"],
    ["(2,3,4)", "(1,5,6)", "(7,8)"],
    ["(2,3,4)", "(6,7,8)", "(1,5)"],
];

/// Short part of the representative fixed for the first group.
pub const FORCED_FIRST: &str = "(1,2,3)(7,8)";

/// The first `count` obstruction groups, each joined with the long cycles
/// of the slice and cut down to the alternating group.
pub fn obstruction_groups(slice: &SliceSpec, count: usize) -> Result<Vec<SubgroupGens>> {
    if count > OBSTRUCTION_GROUPS.len() {
        return Err(Error::InvalidParameters(format!(
            "at most {} groups",
            OBSTRUCTION_GROUPS.len()
        )));
    }
    OBSTRUCTION_GROUPS[..count]
        .iter()
        .map(|row| {
            let mut gens = row
                .iter()
                .map(|c| Permutation::parse(c, slice.degree))
                .collect::<Result<Vec<_>>>()?;
            gens.extend(slice.long_cycles.iter().cloned());
            Ok(intersect_with_alt(&SubgroupGens::new(slice.degree, gens)))
        })
        .collect()
}

/// The representative fixed for the first group: `(1,2,3)(7,8)` times the
/// long cycles.
pub fn forced_first(slice: &SliceSpec) -> Permutation {
    let short = Permutation::parse(FORCED_FIRST, slice.degree).expect("valid");
    &short * &slice.long_part()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepsOptions {
    /// Quotient each candidate list by identical commutation behaviour.
    pub symmetry_reduction: bool,
    /// Dead ends recorded explicitly; later ones are only counted.
    pub trace_limit: usize,
    pub cap: usize,
}

impl Default for RepsOptions {
    fn default() -> RepsOptions {
        RepsOptions {
            symmetry_reduction: true,
            trace_limit: 10_000,
            cap: crate::groups::DEFAULT_CAP,
        }
    }
}

/// A branch on which group `dead_group` had no admissible representative.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeadEnd {
    pub prefix: Vec<Permutation>,
    pub dead_group: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RepsTrace {
    pub dead_ends: Vec<DeadEnd>,
    /// Dead ends per group, over the whole search.
    pub dead_end_counts: Vec<u64>,
    pub total_dead_ends: u64,
    pub truncated: bool,
    pub nodes: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum RepsOutcome {
    Feasible { assignment: Vec<Permutation> },
    Infeasible { trace: RepsTrace },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RepsSearch {
    pub candidate_counts: Vec<usize>,
    pub searched_counts: Vec<usize>,
    pub forced: Vec<(usize, Permutation)>,
    pub symmetry_reduction: bool,
    pub outcome: RepsOutcome,
}

impl RepsSearch {
    pub fn is_feasible(&self) -> bool {
        matches!(self.outcome, RepsOutcome::Feasible { .. })
    }
}

/// Elements of `group` with the given cycle type, in canonical order.
pub fn reps_candidates(
    group: &SubgroupGens,
    cycle_type: &CycleType,
    cap: usize,
) -> Result<Vec<Permutation>> {
    Ok(close(group, cap)?
        .into_iter()
        .filter(|g| g.cycle_type() == *cycle_type)
        .collect())
}

/// Picks one element of `cycle_type` from each group so that no two picks
/// commute, or proves by exhaustive backtracking that this is impossible.
///
/// Groups are filled in the given order and candidates in canonical order.
/// `forced` pins the choice for some groups.
pub fn noncommuting_reps_search(
    groups: &[SubgroupGens],
    cycle_type: &CycleType,
    forced: &[(usize, Permutation)],
    options: &RepsOptions,
) -> Result<RepsSearch> {
    let full: Vec<Vec<Permutation>> = groups
        .iter()
        .map(|g| reps_candidates(g, cycle_type, options.cap))
        .collect::<Result<_>>()?;
    if let Some(i) = full.iter().position(Vec::is_empty) {
        return Err(Error::InvalidParameters(format!(
            "group {} has no element of type {cycle_type}",
            i + 1
        )));
    }
    let mut lists = if options.symmetry_reduction {
        reduce(&full)
    } else {
        full.clone()
    };
    for (i, g) in forced {
        if *i >= groups.len() || !full[*i].contains(g) {
            return Err(Error::InvalidParameters(format!(
                "forced element {g} is not a candidate for group {}",
                i + 1
            )));
        }
        lists[*i] = vec![g.clone()];
    }

    let flat: Vec<&Permutation> = lists.iter().flatten().collect();
    let mut offsets = Vec::with_capacity(lists.len());
    let mut start = 0;
    for l in &lists {
        offsets.push(start);
        start += l.len();
    }
    // Row `a` holds every candidate commuting with `a`, itself included.
    let commute: Vec<Bits> = flat
        .iter()
        .map(|a| Bits::from_indices(flat.len(), (0..flat.len()).filter(|&b| a.commutes_with(flat[b]))))
        .collect();

    let mut state = Backtrack {
        lists: &lists,
        offsets: &offsets,
        commute: &commute,
        chosen: Vec::new(),
        trace: RepsTrace {
            dead_ends: Vec::new(),
            dead_end_counts: vec![0; lists.len()],
            total_dead_ends: 0,
            truncated: false,
            nodes: 0,
        },
        limit: options.trace_limit,
    };
    let found = state.run(&Bits::empty(flat.len()));
    let outcome = match found {
        Some(assignment) => RepsOutcome::Feasible { assignment },
        None => RepsOutcome::Infeasible { trace: state.trace },
    };
    Ok(RepsSearch {
        candidate_counts: full.iter().map(Vec::len).collect(),
        searched_counts: lists.iter().map(Vec::len).collect(),
        forced: forced.to_vec(),
        symmetry_reduction: options.symmetry_reduction,
        outcome,
    })
}

/// Keeps the least candidate of each group among those that commute with
/// exactly the same candidates overall.
fn reduce(lists: &[Vec<Permutation>]) -> Vec<Vec<Permutation>> {
    let all: Vec<&Permutation> = lists.iter().flatten().collect();
    lists
        .iter()
        .map(|l| {
            let mut classes: BTreeMap<Vec<bool>, &Permutation> = BTreeMap::new();
            for g in l {
                let signature: Vec<bool> = all.iter().map(|h| g.commutes_with(h)).collect();
                classes.entry(signature).or_insert(g);
            }
            let mut kept: Vec<Permutation> = classes.into_values().cloned().collect();
            kept.sort();
            kept
        })
        .collect()
}

struct Backtrack<'a> {
    lists: &'a [Vec<Permutation>],
    offsets: &'a [usize],
    commute: &'a [Bits],
    chosen: Vec<usize>,
    trace: RepsTrace,
    limit: usize,
}

impl Backtrack<'_> {
    fn run(&mut self, blocked: &Bits) -> Option<Vec<Permutation>> {
        self.trace.nodes += 1;
        let level = self.chosen.len();
        if level == self.lists.len() {
            return Some(
                self.chosen
                    .iter()
                    .enumerate()
                    .map(|(g, &i)| self.lists[g][i].clone())
                    .collect(),
            );
        }
        let mut extended = false;
        for i in 0..self.lists[level].len() {
            let global = self.offsets[level] + i;
            if blocked.contains(global) {
                continue;
            }
            extended = true;
            let mut next = blocked.clone();
            next.union_with(&self.commute[global]);
            self.chosen.push(i);
            if let Some(found) = self.run(&next) {
                return Some(found);
            }
            self.chosen.pop();
        }
        if !extended {
            self.trace.dead_end_counts[level] += 1;
            self.trace.total_dead_ends += 1;
            if self.trace.dead_ends.len() < self.limit {
                self.trace.dead_ends.push(DeadEnd {
                    prefix: self
                        .chosen
                        .iter()
                        .enumerate()
                        .map(|(g, &i)| self.lists[g][i].clone())
                        .collect(),
                    dead_group: level,
                });
            } else {
                self.trace.truncated = true;
            }
        }
        None
    }
}

/// Re-runs the search and checks that it reproduces `recorded`, and that
/// each recorded dead end really leaves its group without a candidate.
pub fn replay(
    recorded: &RepsSearch,
    groups: &[SubgroupGens],
    cycle_type: &CycleType,
    options: &RepsOptions,
) -> std::result::Result<(), String> {
    let again = noncommuting_reps_search(groups, cycle_type, &recorded.forced, options)
        .map_err(|e| e.to_string())?;
    if again != *recorded {
        return Err("the search did not reproduce the recorded result".into());
    }
    match &recorded.outcome {
        RepsOutcome::Feasible { assignment } => super::validate::check_independent(assignment),
        RepsOutcome::Infeasible { trace } => {
            for d in &trace.dead_ends {
                let candidates = reps_candidates(&groups[d.dead_group], cycle_type, options.cap)
                    .map_err(|e| e.to_string())?;
                if let Some(c) = candidates
                    .iter()
                    .find(|c| d.prefix.iter().all(|p| !p.commutes_with(c)))
                {
                    return Err(format!(
                        "{c} was available for group {}",
                        d.dead_group + 1
                    ));
                }
            }
            Ok(())
        }
    }
}

/// One run of the unreduced search with the first representative fixed
/// to `first`, over the nine groups moved by `transport` so that `first`
/// plays the role of the standard choice.
#[derive(Debug, Clone, Serialize)]
pub struct FirstChoiceRun {
    pub first: Permutation,
    pub transport: Permutation,
    pub search: RepsSearch,
}

/// Covers every possible first representative.
///
/// For each candidate `c` of the first group, a permutation `π` of the
/// points `1..8` that preserves the first group and sends the short part of
/// `c` to `(1,2,3)(7,8)` is found by brute force; the remaining groups are
/// conjugated by `π⁻¹` (staying inside the structural family) and searched
/// exhaustively with `c` fixed. Candidate quotienting follows `options`.
pub fn full_reps_search(
    slice: &SliceSpec,
    count: usize,
    options: &RepsOptions,
) -> Result<Vec<FirstChoiceRun>> {
    let n = slice.degree;
    let groups = obstruction_groups(slice, count)?;
    let t = slice.cycle_type();
    let standard = Permutation::parse(FORCED_FIRST, n)?;
    let first_group = close(&groups[0], options.cap)?;
    let mut runs = Vec::new();
    for c in reps_candidates(&groups[0], &t, options.cap)? {
        let short = restrict_to_free(&c);
        let transport = crate::perm::all_permutations(8)
            .map(|q| extend(&q, n))
            .find(|q| {
                short.conjugate_by(q) == standard
                    && groups[0]
                        .generators
                        .iter()
                        .all(|g| first_group.binary_search(&g.conjugate_by(q)).is_ok())
            })
            .ok_or_else(|| Error::Mismatch(format!("no free-point symmetry for {c}")))?;
        let back = transport.inverse();
        let moved: Vec<SubgroupGens> = groups
            .iter()
            .enumerate()
            .map(|(i, g)| {
                if i == 0 {
                    g.clone()
                } else {
                    SubgroupGens::new(n, g.generators.iter().map(|x| x.conjugate_by(&back)))
                }
            })
            .collect();
        let search = noncommuting_reps_search(&moved, &t, &[(0, c.clone())], options)?;
        runs.push(FirstChoiceRun {
            first: c,
            transport,
            search,
        });
    }
    Ok(runs)
}

/// The part of a slice element on the free points.
fn restrict_to_free(g: &Permutation) -> Permutation {
    let images: Vec<usize> = (0..g.degree()).map(|x| if x < 8 { g.apply(x) } else { x }).collect();
    Permutation::from_images(&images).expect("slice elements preserve the free points")
}

fn extend(q: &Permutation, n: usize) -> Permutation {
    let images: Vec<usize> = (0..n).map(|x| if x < q.degree() { q.apply(x) } else { x }).collect();
    Permutation::from_images(&images).expect("extension of a permutation")
}

/// Whether a whole family of groups admits pairwise non-commuting
/// representatives, when each group offers at most two essentially
/// different candidates. Decided exactly as a 2-SAT instance.
#[derive(Debug, Clone, Serialize)]
pub struct FamilyCheck {
    pub groups: usize,
    pub clauses: usize,
    pub satisfiable: bool,
    pub assignment: Option<Vec<Permutation>>,
}

pub fn family_reps_2sat(
    groups: &[SubgroupGens],
    cycle_type: &CycleType,
    cap: usize,
) -> Result<FamilyCheck> {
    let full: Vec<Vec<Permutation>> = groups
        .iter()
        .map(|g| reps_candidates(g, cycle_type, cap))
        .collect::<Result<_>>()?;
    let options = reduce(&full);
    if let Some(i) = options.iter().position(|o| o.is_empty() || o.len() > 2) {
        return Err(Error::InvalidParameters(format!(
            "group {} offers {} essentially different candidates, not one or two",
            i + 1,
            options[i].len()
        )));
    }
    // Literal 2i means group i takes option 0, 2i + 1 option 1.
    let m = groups.len();
    let mut implications: Vec<Vec<usize>> = vec![Vec::new(); 2 * m];
    let mut clauses = 0;
    let forbid = |a: usize, b: usize, implications: &mut Vec<Vec<usize>>| {
        // ¬(a ∧ b): a → ¬b and b → ¬a.
        implications[a].push(b ^ 1);
        implications[b].push(a ^ 1);
    };
    for (i, o) in options.iter().enumerate() {
        if o.len() == 1 {
            forbid(2 * i + 1, 2 * i + 1, &mut implications);
            clauses += 1;
        }
    }
    for i in 0..m {
        for j in i + 1..m {
            for (a, x) in options[i].iter().enumerate() {
                for (b, y) in options[j].iter().enumerate() {
                    if x.commutes_with(y) {
                        forbid(2 * i + a, 2 * j + b, &mut implications);
                        clauses += 1;
                    }
                }
            }
        }
    }
    let comp = strongly_connected(&implications);
    let satisfiable = (0..m).all(|i| comp[2 * i] != comp[2 * i + 1]);
    // Components are numbered in reverse topological order, so a literal
    // numbered below its negation is safe to make true.
    let assignment = satisfiable.then(|| {
        (0..m)
            .map(|i| {
                let pick = if comp[2 * i] < comp[2 * i + 1] { 0 } else { 1 };
                options[i][pick.min(options[i].len() - 1)].clone()
            })
            .collect()
    });
    Ok(FamilyCheck {
        groups: m,
        clauses,
        satisfiable,
        assignment,
    })
}

/// Tarjan's algorithm without recursion; component ids follow completion
/// order.
fn strongly_connected(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    let mut index = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut comp = vec![usize::MAX; n];
    let mut stack = Vec::new();
    let mut next_index = 0;
    let mut next_comp = 0;
    for root in 0..n {
        if index[root] != usize::MAX {
            continue;
        }
        let mut call: Vec<(usize, usize)> = vec![(root, 0)];
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;
        while let Some(&mut (v, ref mut edge)) = call.last_mut() {
            if *edge < adj[v].len() {
                let w = adj[v][*edge];
                *edge += 1;
                if index[w] == usize::MAX {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    while let Some(w) = stack.pop() {
                        on_stack[w] = false;
                        comp[w] = next_comp;
                        if w == v {
                            break;
                        }
                    }
                    next_comp += 1;
                }
            }
        }
    }
    comp
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comgraph::slice::SliceKind;

    fn setup(kind: SliceKind, n: usize, count: usize) -> (SliceSpec, Vec<SubgroupGens>, CycleType) {
        let s = SliceSpec::new(kind, n).unwrap();
        let groups = obstruction_groups(&s, count).unwrap();
        let t = s.cycle_type();
        (s, groups, t)
    }

    #[test]
    fn nine_groups_at_twelve_are_infeasible() {
        let (s, groups, t) = setup(SliceKind::Even, 12, 9);
        let forced = vec![(0, forced_first(&s))];
        let opts = RepsOptions::default();
        let r = noncommuting_reps_search(&groups, &t, &forced, &opts).unwrap();
        assert!(!r.is_feasible());
        // 2-cycle times a 3-cycle or its inverse from either triple, times
        // a generating power of the 4-cycle.
        assert_eq!(r.candidate_counts, vec![8; 9]);
        assert_eq!(r.searched_counts[1], 2);
        replay(&r, &groups, &t, &opts).unwrap();
    }

    #[test]
    fn eight_groups_are_feasible() {
        let (s, groups, t) = setup(SliceKind::Even, 12, 8);
        let forced = vec![(0, forced_first(&s))];
        let r = noncommuting_reps_search(&groups, &t, &forced, &RepsOptions::default()).unwrap();
        let RepsOutcome::Feasible { assignment } = &r.outcome else {
            panic!("expected a feasible assignment");
        };
        assert_eq!(assignment.len(), 8);
        assert_eq!(assignment[0], forced_first(&s));
    }

    #[test]
    fn forced_element_must_be_a_candidate() {
        let (s, groups, t) = setup(SliceKind::Even, 12, 9);
        let wrong = vec![(1, forced_first(&s))];
        assert!(noncommuting_reps_search(&groups, &t, &wrong, &RepsOptions::default()).is_err());
    }

    #[test]
    fn unforced_nine_groups_are_feasible() {
        // Fixing the first representative is only justified by the
        // symmetry of the whole family, not of these nine groups.
        let (_, groups, t) = setup(SliceKind::Even, 12, 9);
        let opts = RepsOptions {
            symmetry_reduction: false,
            ..RepsOptions::default()
        };
        let r = noncommuting_reps_search(&groups, &t, &[], &opts).unwrap();
        let RepsOutcome::Feasible { assignment } = &r.outcome else {
            panic!("expected feasible");
        };
        crate::comgraph::validate::check_independent(assignment).unwrap();
    }

    #[test]
    fn every_first_choice_is_blocked() {
        let s = SliceSpec::new(SliceKind::Even, 12).unwrap();
        let plain = RepsOptions {
            symmetry_reduction: false,
            ..RepsOptions::default()
        };
        let runs = full_reps_search(&s, 9, &plain).unwrap();
        assert_eq!(runs.len(), 8);
        assert!(runs.iter().all(|r| !r.search.is_feasible()));
        // Quotienting agrees.
        let reduced = full_reps_search(&s, 9, &RepsOptions::default()).unwrap();
        assert!(reduced.iter().all(|r| !r.search.is_feasible()));
        let runs8 = full_reps_search(&s, 8, &plain).unwrap();
        assert!(runs8.iter().all(|r| r.search.is_feasible()));
    }

    #[test]
    fn two_sat_on_small_families() {
        let s = SliceSpec::new(SliceKind::Even, 12).unwrap();
        let t = s.cycle_type();
        let nine = obstruction_groups(&s, 9).unwrap();
        let r = family_reps_2sat(&nine, &t, 10_000).unwrap();
        assert!(r.satisfiable);
        crate::comgraph::validate::check_independent(&r.assignment.unwrap()).unwrap();
        let eight_forced = {
            let mut g = obstruction_groups(&s, 9).unwrap();
            g[0] = SubgroupGens::new(12, vec![forced_first(&s)]);
            g
        };
        assert!(!family_reps_2sat(&eight_forced, &t, 10_000).unwrap().satisfiable);
    }

    #[test]
    fn scc_on_a_small_graph() {
        let adj = vec![vec![1], vec![2], vec![0], vec![2]];
        let c = strongly_connected(&adj);
        assert_eq!(c[0], c[1]);
        assert_eq!(c[1], c[2]);
        assert_ne!(c[3], c[0]);
        // Sinks complete first.
        assert!(c[0] < c[3]);
    }
}
