//! Brute-force oracles shared by the oracle tests and the acceptance run.

use cga_core::comgraph::{analyze, CommutingGraph, VertexSet};
use cga_core::groups::{centralizer_gens, centralizer_order, class_representative, classes, close, GroupSpec};
use cga_core::perm::{all_permutations, Permutation};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn random_perm(n: usize, rng: &mut ChaCha8Rng) -> Permutation {
    let mut images: Vec<usize> = (0..n).collect();
    images.shuffle(rng);
    Permutation::from_images(&images).unwrap()
}

/// Closes the structural centralizer of each class representative, and of
/// a random conjugate, and compares it with a scan of the whole group.
/// Returns the number of elements checked.
pub fn centralizer_oracle(max_n: usize) -> Result<usize, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut checked = 0;
    for n in 1..=max_n {
        let all: Vec<Permutation> = all_permutations(n).collect();
        for spec in [GroupSpec::sym(n), GroupSpec::alt(n)] {
            for label in classes(&spec) {
                let rep = class_representative(&label, &spec).unwrap();
                // A conjugate by an element of the group itself stays in the class.
                let q = loop {
                    let q = random_perm(n, &mut rng);
                    if spec.contains(&q) {
                        break q;
                    }
                };
                for g in [rep.clone(), rep.conjugate_by(&q)] {
                    let brute: Vec<Permutation> = all
                        .iter()
                        .filter(|x| spec.contains(x) && x.commutes_with(&g))
                        .cloned()
                        .collect();
                    let closed = close(&centralizer_gens(&g, &spec), 1_000_000).unwrap();
                    if closed != brute || centralizer_order(&g, &spec) != brute.len() as u128 {
                        return Err(format!("centralizer of {g} in {spec}"));
                    }
                    checked += 1;
                }
            }
        }
    }
    Ok(checked)
}

/// Adjacency masks of the commuting graph on `vs`.
pub fn masks(vs: &[Permutation]) -> Vec<u32> {
    vs.iter()
        .map(|a| {
            vs.iter()
                .enumerate()
                .filter(|(_, b)| a != *b && a.commutes_with(b))
                .fold(0, |m, (j, _)| m | 1 << j)
        })
        .collect()
}

pub fn is_clique(mask: u32, adj: &[u32]) -> bool {
    (0..adj.len()).filter(|i| mask >> i & 1 == 1).all(|i| mask & !(adj[i] | 1 << i) == 0)
}

fn is_independent(mask: u32, adj: &[u32]) -> bool {
    (0..adj.len()).filter(|i| mask >> i & 1 == 1).all(|i| mask & adj[i] == 0)
}

/// Largest pairwise non-commuting subset, over every subset.
fn brute_delta(adj: &[u32]) -> usize {
    (0u32..1 << adj.len())
        .filter(|&m| is_independent(m, adj))
        .map(u32::count_ones)
        .max()
        .unwrap() as usize
}

/// Fewest cliques covering the vertices, by dynamic programming over subsets.
/// An abelian subgroup meets the vertex set in a clique, and a clique
/// generates an abelian subgroup, so this is the abelian cover number.
fn brute_cover(adj: &[u32]) -> usize {
    let n = adj.len();
    let full = (1u32 << n) - 1;
    let cliques: Vec<u32> = (1u32..=full).filter(|&m| is_clique(m, adj)).collect();
    let mut best = vec![usize::MAX; 1 << n];
    best[0] = 0;
    for m in 1..=full {
        let low = m & m.wrapping_neg();
        for &c in &cliques {
            if c & low != 0 {
                let rest = m & !c;
                if best[rest as usize] != usize::MAX {
                    best[m as usize] = best[m as usize].min(best[rest as usize] + 1);
                }
            }
        }
    }
    best[full as usize]
}

/// Analyzes `count` random subsets of at most 16 elements of random
/// classes of `S_n` and `A_n`, `4 ≤ n ≤ 8`, and compares `δ` and `Δ` with
/// exhaustive enumeration. Every analysis must also have `δ ≤ Δ`.
pub fn solver_oracle(count: usize) -> Result<usize, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut done = 0;
    while done < count {
        let n = rng.gen_range(4..=8);
        let spec = if rng.gen_bool(0.5) { GroupSpec::sym(n) } else { GroupSpec::alt(n) };
        let all_classes = classes(&spec);
        let label = all_classes.choose(&mut rng).unwrap();
        if label.cycle_type.is_identity() {
            continue;
        }
        let rep = class_representative(label, &spec).unwrap();
        let target = rng.gen_range(2..=16);
        let mut picked: Vec<Permutation> = Vec::new();
        for _ in 0..200 {
            if picked.len() == target {
                break;
            }
            let q = random_perm(n, &mut rng);
            if !spec.contains(&q) {
                continue;
            }
            let g = rep.conjugate_by(&q);
            if !picked.contains(&g) {
                picked.push(g);
            }
        }
        let vs = VertexSet::new(picked).unwrap();
        let g = CommutingGraph::new(vs.clone());
        let a = analyze(&g, None, u64::MAX, 100_000).unwrap();
        let adj = masks(vs.elements());
        if a.delta > a.cover_number || !a.is_certified() {
            return Err(format!("analysis on {spec} {label} not certified with δ ≤ Δ"));
        }
        if a.delta != brute_delta(&adj) || a.cover_number != brute_cover(&adj) {
            return Err(format!("δ or Δ on {spec} {label}: {:?}", vs.elements()));
        }
        done += 1;
    }
    Ok(done)
}

