use std::collections::BTreeMap;

use super::classes::{Family, GroupSpec};
use super::subgroup::{intersect_with_alt, SubgroupGens};
use crate::perm::Permutation;

/// Generators of `C_spec(g)` read off the cycle structure of `g`:
///
/// * every cycle of `g`;
/// * for each length occurring `m ≥ 2` times, an aligned swap of the first
///   two such cycles and, when `m ≥ 3`, an aligned rotation of all of them;
/// * a transposition and a full cycle on the fixed points.
///
/// Together these generate `∏ (C_ℓ ≀ S_m) × S_f`. The alternating case
/// takes the even part.
pub fn centralizer_gens(g: &Permutation, spec: &GroupSpec) -> SubgroupGens {
    assert_eq!(g.degree(), spec.degree, "degree mismatch");
    let n = g.degree();
    let cycles = g.cycles();
    let mut gens = Vec::new();
    let mut by_len: BTreeMap<usize, Vec<&Vec<usize>>> = BTreeMap::new();
    for c in &cycles {
        gens.push(Permutation::cycle(n, c).expect("cycle of g"));
        by_len.entry(c.len()).or_default().push(c);
    }
    for same in by_len.values() {
        if same.len() >= 2 {
            gens.push(align(n, &same[..2], true));
        }
        if same.len() >= 3 {
            gens.push(align(n, same, false));
        }
    }
    let fixed = g.fixed_points();
    if fixed.len() >= 2 {
        gens.push(Permutation::cycle(n, &fixed[..2]).expect("fixed points"));
    }
    if fixed.len() >= 3 {
        gens.push(Permutation::cycle(n, &fixed).expect("fixed points"));
    }
    let sym = SubgroupGens::new(n, gens);
    match spec.family {
        Family::Sym => sym,
        Family::Alt => intersect_with_alt(&sym),
    }
}

/// Maps `c_i[t] ↦ c_{i+1}[t]` cyclically over equal-length cycles; with
/// `swap` only the first two are exchanged.
fn align(n: usize, cycles: &[&Vec<usize>], swap: bool) -> Permutation {
    let mut images: Vec<usize> = (0..n).collect();
    let m = if swap { 2 } else { cycles.len() };
    for i in 0..m {
        let next = cycles[(i + 1) % m];
        for (t, &p) in cycles[i].iter().enumerate() {
            images[p] = next[t];
        }
    }
    Permutation::from_images(&images).expect("aligned cycles")
}

/// `|C_spec(g)|` from the order formula, halved in the alternating group
/// when the symmetric centralizer contains odd elements.
pub fn centralizer_order(g: &Permutation, spec: &GroupSpec) -> u128 {
    let full = g.cycle_type().sym_centralizer_order();
    match spec.family {
        Family::Sym => full,
        Family::Alt => {
            let sym = centralizer_gens(g, &GroupSpec::sym(spec.degree));
            if sym.all_even() {
                full
            } else {
                full / 2
            }
        }
    }
}
