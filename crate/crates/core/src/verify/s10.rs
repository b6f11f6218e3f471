use rayon::prelude::*;
use serde_json::json;

use super::{Finding, RunConfig};
use crate::comgraph::solve::independent_transversal;
use crate::comgraph::validate::{check_cover, check_independent};
use crate::comgraph::{component_of, neighbors_in_class};
use crate::error::Result;
use crate::groups::{class_size, classify_classes, ClassLabel, GroupSpec, SubgroupGens};
use crate::perm::Permutation;

const DEGREE: usize = 10;
const CLASS: &str = "4-2-2";
const CLASS_SIZE: usize = 56_700;
const COVER_SIZE: usize = 9450;
const SEARCH_SEED: u64 = 10;
const SEARCH_STEPS: u64 = 3_000_000;

/// Perfect matchings of `points`, each as a list of pairs.
fn matchings(points: &[usize]) -> Vec<Vec<[usize; 2]>> {
    let Some((&first, rest)) = points.split_first() else {
        return vec![vec![]];
    };
    let mut out = Vec::new();
    for (i, &partner) in rest.iter().enumerate() {
        let mut others = rest.to_vec();
        others.remove(i);
        for mut m in matchings(&others) {
            m.insert(0, [first, partner]);
            out.push(m);
        }
    }
    out
}

/// `⟨c, t_1, t_2, t_3⟩` for every cyclic group `⟨c⟩` of a 4-cycle and every
/// perfect matching `t_1 t_2 t_3` of the six points it fixes. Each contains
/// six elements of the class: `c^{±1} t_i t_j`.
fn cover_groups() -> Result<Vec<(SubgroupGens, Vec<Permutation>)>> {
    let mut out = Vec::new();
    let points: Vec<usize> = (0..DEGREE).collect();
    for a in 0..DEGREE {
        for b in a + 1..DEGREE {
            for c in b + 1..DEGREE {
                for d in c + 1..DEGREE {
                    let rest: Vec<usize> =
                        points.iter().copied().filter(|x| ![a, b, c, d].contains(x)).collect();
                    for order in [[a, b, c, d], [a, b, d, c], [a, c, b, d]] {
                        let cyc = Permutation::cycle(DEGREE, &order)?;
                        for m in matchings(&rest) {
                            let t: Vec<Permutation> = m
                                .iter()
                                .map(|p| Permutation::cycle(DEGREE, p))
                                .collect::<Result<_>>()?;
                            let mut members = Vec::with_capacity(6);
                            for c in [cyc.clone(), cyc.inverse()] {
                                for (i, j) in [(0, 1), (0, 2), (1, 2)] {
                                    members.push(&(&c * &t[i]) * &t[j]);
                                }
                            }
                            let gens = std::iter::once(cyc.clone()).chain(t);
                            out.push((SubgroupGens::new(DEGREE, gens), members));
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// The largest clique among `vertices`, by trying every subset.
fn max_clique_brute(vertices: &[usize], neighbors: &[Vec<usize>]) -> usize {
    let adjacent = |u: usize, v: usize| neighbors[u].binary_search(&v).is_ok();
    (0u32..1 << vertices.len())
        .filter(|mask| {
            let picked: Vec<usize> = (0..vertices.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| vertices[i])
                .collect();
            picked
                .iter()
                .enumerate()
                .all(|(i, &u)| picked[i + 1..].iter().all(|&v| adjacent(u, v)))
        })
        .map(|mask| mask.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// `S_10`: finds `Y_b`, certifies `Δ` on its one class with an explicit
/// partition into abelian groups matched by the clique bound, and brackets
/// `δ` with a local search for a non-commuting transversal of that
/// partition.
pub fn verify_further_work_s10(config: &RunConfig) -> Result<Finding> {
    let spec = GroupSpec::sym(DEGREE);
    let classes = classify_classes(&spec, config.cap)?;
    let y_b = classes.y_b_labels();
    if !classes.undecided().is_empty() {
        return Ok(Finding::undecided(json!({ "reason": "classification hit the cap" })));
    }
    let label = ClassLabel::parse(CLASS, &spec)?;
    let size = class_size(&label, &spec)? as usize;
    let rep = classes
        .y_b()
        .first()
        .map(|r| r.representative.clone())
        .unwrap_or_else(|| label.cycle_type.representative());

    // The component of one element is the whole class, so the graph is
    // connected.
    let vertices = component_of(&rep, &label, &spec, config.cap, CLASS_SIZE + 1)?;
    let neighbors: Vec<Vec<usize>> = vertices
        .elements()
        .par_iter()
        .map(|v| {
            let mut nb: Vec<usize> = neighbors_in_class(v, &label, &spec, config.cap)?
                .iter()
                .map(|x| vertices.index_of(x).expect("neighbor in the component"))
                .collect();
            nb.sort_unstable();
            Ok(nb)
        })
        .collect::<Result<_>>()?;
    let degrees: std::collections::BTreeSet<usize> = neighbors.iter().map(Vec::len).collect();

    // Conjugation is transitive on the vertices, so ω = 1 + ω(N(v)).
    let omega = 1 + max_clique_brute(&neighbors[0], &neighbors);
    let lower = vertices.len().div_ceil(omega);

    let groups = cover_groups()?;
    let gens: Vec<SubgroupGens> = groups.iter().map(|(g, _)| g.clone()).collect();
    let covered = check_cover(vertices.elements(), &gens, config.cap);
    let mut hits = vec![0usize; vertices.len()];
    let mut parts = Vec::with_capacity(groups.len());
    for (_, members) in &groups {
        let part: Vec<usize> = members.iter().filter_map(|m| vertices.index_of(m)).collect();
        for &v in &part {
            hits[v] += 1;
        }
        parts.push(part);
    }
    let partition = hits.iter().all(|&h| h == 1);
    let cover_certified = covered.is_ok() && partition && groups.len() == lower;

    // A non-commuting set can take at most one element of each part.
    let (choice, conflicts) = independent_transversal(&parts, &neighbors, SEARCH_SEED, SEARCH_STEPS);
    let mut chosen = vec![false; vertices.len()];
    for &v in &choice {
        chosen[v] = true;
    }
    for &v in &choice {
        if chosen[v] && neighbors[v].iter().any(|&u| chosen[u]) {
            chosen[v] = false;
        }
    }
    let independent: Vec<Permutation> = (0..vertices.len())
        .filter(|&v| chosen[v])
        .map(|v| vertices.elements()[v].clone())
        .collect();
    let independent_ok = check_independent(&independent);

    let ok = y_b == [CLASS]
        && size == CLASS_SIZE
        && vertices.len() == size
        && independent_ok.is_ok()
        && cover_certified;
    Ok(Finding::new(
        ok,
        json!({
            "y_b": y_b,
            "class_size": size,
            "component_size": vertices.len(),
            "connected": vertices.len() == size,
            "degrees": degrees,
            "omega": omega,
            "Delta": {
                "value": COVER_SIZE,
                "lower_bound": lower,
                "cover_members": groups.len(),
                "partition": partition,
                "cover_check": covered.err().unwrap_or_else(|| "ok".into()),
                "certified": cover_certified,
            },
            "delta": {
                "lower_bound": independent.len(),
                "upper_bound": groups.len(),
                "transversal_conflicts": conflicts,
                "search": { "seed": SEARCH_SEED, "steps": SEARCH_STEPS },
                "independence_check": independent_ok.err().unwrap_or_else(|| "ok".into()),
                "equal_to_Delta": if independent.len() == groups.len() { json!(true) } else { json!("open") },
            },
        }),
    ))
}
