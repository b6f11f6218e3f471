use std::collections::{HashMap, HashSet};

use super::centralizer::centralizer_gens;
use super::classes::GroupSpec;
use super::subgroup::{close, SubgroupGens};
use crate::error::Result;
use crate::perm::Permutation;

/// All maximal abelian subgroups of the group that contain `g`.
///
/// Each such subgroup lies in `C(g)`, so the search closes `C(g)` and grows
/// abelian subgroups one element at a time, visiting every abelian
/// subgroup containing `⟨g⟩` once. Results are ordered by their sorted
/// element lists.
pub fn maximal_abelian_overgroups(
    g: &Permutation,
    spec: &GroupSpec,
    cap: usize,
) -> Result<Vec<SubgroupGens>> {
    let elements = close(&centralizer_gens(g, spec), cap)?;
    let index: HashMap<&Permutation, usize> =
        elements.iter().enumerate().map(|(i, x)| (x, i)).collect();

    // Abelian groups are unions of cosets A·x^i, so extension never needs
    // more than powers of the new element.
    let extend = |members: &[usize], x: usize| -> Vec<usize> {
        let mut out: HashSet<usize> = members.iter().copied().collect();
        let step = &elements[x];
        let mut power = step.clone();
        while !out.contains(&index[&power]) {
            for &a in members {
                out.insert(index[&(&elements[a] * &power)]);
            }
            power = &power * step;
        }
        let mut v: Vec<usize> = out.into_iter().collect();
        v.sort_unstable();
        v
    };

    let identity = index[&Permutation::identity(g.degree())];
    let start = extend(&[identity], index[g]);
    let mut visited: HashSet<Vec<usize>> = HashSet::new();
    let mut stack = vec![(start.clone(), vec![index[g]])];
    visited.insert(start);
    let mut maximal: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    while let Some((members, gens)) = stack.pop() {
        let in_group: HashSet<usize> = members.iter().copied().collect();
        let candidates: Vec<usize> = (0..elements.len())
            .filter(|x| !in_group.contains(x))
            .filter(|&x| gens.iter().all(|&y| elements[x].commutes_with(&elements[y])))
            .collect();
        if candidates.is_empty() {
            maximal.push((members, gens));
            continue;
        }
        for x in candidates {
            let bigger = extend(&members, x);
            if visited.insert(bigger.clone()) {
                let mut next_gens = gens.clone();
                next_gens.push(x);
                stack.push((bigger, next_gens));
            }
        }
    }
    maximal.sort();
    Ok(maximal
        .into_iter()
        .map(|(members, gens)| {
            let gens = reduce_generators(&elements, &index, &members, &gens);
            SubgroupGens::from_closed(
                g.degree(),
                gens,
                members.iter().map(|&i| elements[i].clone()).collect(),
            )
        })
        .collect())
}

/// Keeps the first generator, then adds members in canonical order until
/// they generate the whole group.
fn reduce_generators(
    elements: &[Permutation],
    index: &HashMap<&Permutation, usize>,
    members: &[usize],
    gens: &[usize],
) -> Vec<Permutation> {
    let mut chosen = vec![elements[gens[0]].clone()];
    let generated = |chosen: &[Permutation]| -> HashSet<usize> {
        let s = SubgroupGens::new(elements[0].degree(), chosen.iter().cloned());
        close(&s, members.len())
            .expect("subgroup of a closed group")
            .iter()
            .map(|x| index[x])
            .collect()
    };
    let mut have = generated(&chosen);
    for &m in members {
        if have.len() == members.len() {
            break;
        }
        if !have.contains(&m) {
            chosen.push(elements[m].clone());
            have = generated(&chosen);
        }
    }
    chosen
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::subgroup::is_abelian;
    use crate::perm::all_permutations;

    fn p(text: &str, n: usize) -> Permutation {
        Permutation::parse(text, n).unwrap()
    }

    #[test]
    fn full_cycle_has_one_overgroup() {
        let g = p("(1,2,3,4,5,6)", 6);
        let groups = maximal_abelian_overgroups(&g, &GroupSpec::sym(6), 1000).unwrap();
        assert_eq!(groups.len(), 1);
        assert_eq!(groups[0].cached_elements().unwrap().len(), 6);
    }

    #[test]
    fn slice_element_at_sixteen() {
        // g = a·b·γ with three fixed points {1,2,3}.
        let g = p("(4,5)(6,7,8)(9,10,11,12,13,14,15,16)", 16);
        let spec = GroupSpec::alt(16);
        let groups = maximal_abelian_overgroups(&g, &spec, 10_000).unwrap();
        // Three transpositions and one 3-cycle on the fixed points.
        assert_eq!(groups.len(), 4);
        let mut shapes: Vec<Vec<usize>> = groups
            .iter()
            .map(|s| {
                let mut lens: Vec<usize> = s
                    .cached_elements()
                    .unwrap()
                    .iter()
                    .map(|x| (0..3).filter(|&i| x.apply(i) != i).count())
                    .collect();
                lens.sort();
                lens.dedup();
                lens
            })
            .collect();
        shapes.sort();
        assert_eq!(shapes, vec![vec![0, 2], vec![0, 2], vec![0, 2], vec![0, 3]]);
        let mut orders: Vec<usize> = groups
            .iter()
            .map(|s| s.cached_elements().unwrap().len())
            .collect();
        orders.sort();
        assert_eq!(orders, vec![48, 48, 48, 72]);
        for s in &groups {
            assert!(is_abelian(s));
            assert!(s.cached_elements().unwrap().contains(&g));
        }
    }

    #[test]
    fn abelian_centralizer_is_the_unique_overgroup() {
        let g = p("(1,2,3)(4,5)", 5);
        let groups = maximal_abelian_overgroups(&g, &GroupSpec::sym(5), 1000).unwrap();
        assert_eq!(groups.len(), 1);
        assert_eq!(groups[0].cached_elements().unwrap().len(), 6);
    }

    #[test]
    fn matches_brute_force_in_a5() {
        let spec = GroupSpec::alt(5);
        let g = p("(1,2)(3,4)", 5);
        let groups = maximal_abelian_overgroups(&g, &spec, 1000).unwrap();
        // Brute force: maximal commuting subsets of C(g) containing g that
        // are closed, i.e. abelian subgroups with trivial extension.
        let c: Vec<Permutation> = all_permutations(5)
            .filter(|x| x.is_even() && x.commutes_with(&g))
            .collect();
        assert!(c.iter().all(|a| c.iter().all(|b| a.commutes_with(b))));
        assert_eq!(groups.len(), 1);
        assert_eq!(groups[0].cached_elements().unwrap(), &c[..]);
    }
}
