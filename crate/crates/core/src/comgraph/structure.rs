use std::collections::{BTreeMap, BTreeSet};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::component::{component_of, in_class};
use super::graph::{CommutingGraph, VertexSet};
use crate::error::{Error, Result};
use crate::groups::{class_representative, ClassLabel, GroupSpec};
use crate::perm::{all_permutations, Permutation};

#[derive(Debug, Clone)]
pub struct StructureOptions {
    /// Components examined when the class is too large to sweep.
    pub max_components: usize,
    /// Classes on at most this many points are swept completely.
    pub exhaustive_degree: usize,
    pub cap: usize,
    pub max_vertices: usize,
    pub rng_seed: u64,
}

impl Default for StructureOptions {
    fn default() -> StructureOptions {
        StructureOptions {
            max_components: 8,
            exhaustive_degree: 8,
            cap: crate::groups::DEFAULT_CAP,
            max_vertices: 100_000,
            rng_seed: 0x2c2c,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct StructureReport {
    pub label: ClassLabel,
    pub group: GroupSpec,
    pub k: usize,
    pub ell: Option<usize>,
    pub exhaustive: bool,
    pub components_checked: usize,
    /// Component size to number of components of that size.
    pub component_sizes: BTreeMap<usize, usize>,
    pub pairs_checked: usize,
    /// Adjacent elements have `ℓ`-cycles that are powers of each other.
    pub power_property: bool,
    /// Adjacent elements have equal supports.
    pub support_property: bool,
    /// Every element acts as a double transposition on the four `k`-sets
    /// read off the component's least element.
    pub partition_property: bool,
    pub violations: Vec<String>,
}

impl StructureReport {
    pub fn holds(&self) -> bool {
        self.power_property && self.support_property && self.partition_property
    }
}

/// `(k, ℓ)` for a class of shape `2k-2k-ℓ` (or `2k-2k` on exactly `4k`
/// points), after checking the hypotheses under which its commuting graph
/// splits into small components.
fn shape(label: &ClassLabel, spec: &GroupSpec) -> Result<(usize, Option<usize>)> {
    let n = spec.degree;
    let mult = label.cycle_type.multiplicities();
    let doubled: Vec<usize> = mult
        .iter()
        .filter(|&(&len, &m)| len % 2 == 0 && m == 2)
        .map(|(&len, _)| len)
        .collect();
    let violation = |why: String| Err(Error::InvalidParameters(format!("{label}: {why}")));
    let [two_k] = doubled[..] else {
        return violation("needs exactly one even length occurring twice".into());
    };
    let others: Vec<(usize, usize)> = mult
        .iter()
        .filter(|&(&len, _)| len != two_k)
        .map(|(&l, &m)| (l, m))
        .collect();
    let k = two_k / 2;
    match others[..] {
        [] if n == 4 * k => Ok((k, None)),
        [] => violation(format!("shape 2k-2k needs n = 4k = {}", 4 * k)),
        [(ell, 1)] => {
            let free = n - (4 * k + ell);
            if free >= ell.min(2 * k) {
                violation(format!("{free} fixed points is not below min(ℓ, 2k)"))
            } else if ell == 2 * k || ell == 4 * k {
                violation("ℓ must differ from 2k and 4k".into())
            } else {
                Ok((k, Some(ell)))
            }
        }
        _ => violation("needs a single further cycle".into()),
    }
}

fn cycle_of_length(g: &Permutation, len: usize) -> Vec<Vec<usize>> {
    g.cycles().into_iter().filter(|c| c.len() == len).collect()
}

/// The four `k`-sets: alternate points of each `2k`-cycle.
fn partition(g: &Permutation, k: usize) -> Vec<BTreeSet<usize>> {
    let mut blocks = Vec::new();
    for c in cycle_of_length(g, 2 * k) {
        blocks.push(c.iter().step_by(2).copied().collect());
        blocks.push(c.iter().skip(1).step_by(2).copied().collect());
    }
    blocks
}

/// Whether `g` permutes `blocks` as a fixed-point-free involution.
fn acts_as_double_transposition(g: &Permutation, blocks: &[BTreeSet<usize>]) -> bool {
    let mut images = Vec::with_capacity(blocks.len());
    for b in blocks {
        let image: BTreeSet<usize> = b.iter().map(|&x| g.apply(x)).collect();
        match blocks.iter().position(|c| *c == image) {
            Some(j) => images.push(j),
            None => return false,
        }
    }
    images.iter().enumerate().all(|(i, &j)| j != i && images[j] == i)
}

/// Checks the component structure of a `2k-2k-ℓ` class: adjacent elements
/// share their `ℓ`-cycle up to a power and have equal supports, and each
/// component acts on one partition into four `k`-sets as double
/// transpositions.
pub fn verify_2k2kl_structure(
    label: &ClassLabel,
    spec: &GroupSpec,
    options: &StructureOptions,
) -> Result<StructureReport> {
    label.validate(spec)?;
    let (k, ell) = shape(label, spec)?;
    let n = spec.degree;
    let exhaustive = n <= options.exhaustive_degree;
    let seeds: Vec<Permutation> = if exhaustive {
        all_permutations(n).filter(|g| in_class(g, label, spec)).collect()
    } else {
        let rep = class_representative(label, spec)?;
        let mut rng = ChaCha8Rng::seed_from_u64(options.rng_seed);
        let mut seeds = vec![rep.clone()];
        let mut points: Vec<usize> = (0..n).collect();
        while seeds.len() < options.max_components {
            points.shuffle(&mut rng);
            let q = Permutation::from_images(&points)?;
            let s = rep.conjugate_by(&q);
            if in_class(&s, label, spec) {
                seeds.push(s);
            }
        }
        seeds
    };

    let mut report = StructureReport {
        label: label.clone(),
        group: *spec,
        k,
        ell,
        exhaustive,
        components_checked: 0,
        component_sizes: BTreeMap::new(),
        pairs_checked: 0,
        power_property: true,
        support_property: true,
        partition_property: true,
        violations: Vec::new(),
    };
    let mut covered: BTreeSet<Permutation> = BTreeSet::new();
    for seed in seeds {
        if covered.contains(&seed) {
            continue;
        }
        let comp = component_of(&seed, label, spec, options.cap, options.max_vertices)?;
        covered.extend(comp.elements().iter().cloned());
        check_component(&comp, k, ell, &mut report);
    }
    Ok(report)
}

fn check_component(comp: &VertexSet, k: usize, ell: Option<usize>, report: &mut StructureReport) {
    const MAX_VIOLATIONS: usize = 10;
    report.components_checked += 1;
    *report.component_sizes.entry(comp.len()).or_default() += 1;
    let elems = comp.elements();
    let graph = CommutingGraph::new(comp.clone());
    for i in 0..elems.len() {
        for j in graph.neighbors(i).iter().filter(|&j| j > i) {
            let (s, t) = (&elems[i], &elems[j]);
            report.pairs_checked += 1;
            if let Some(ell) = ell {
                let cs = &cycle_of_length(s, ell)[0];
                let ct = &cycle_of_length(t, ell)[0];
                let cs = Permutation::cycle(s.degree(), cs).expect("cycle");
                let ct = Permutation::cycle(t.degree(), ct).expect("cycle");
                if !(1..ell as i64).any(|e| cs.pow(e) == ct) {
                    report.power_property = false;
                    if report.violations.len() < MAX_VIOLATIONS {
                        report.violations.push(format!("{s} and {t}: ℓ-cycles are not powers"));
                    }
                }
            }
            if s.support() != t.support() {
                report.support_property = false;
                if report.violations.len() < MAX_VIOLATIONS {
                    report.violations.push(format!("{s} and {t}: supports differ"));
                }
            }
        }
    }
    let blocks = partition(&elems[0], k);
    for x in elems {
        if !acts_as_double_transposition(x, &blocks) {
            report.partition_property = false;
            if report.violations.len() < MAX_VIOLATIONS {
                report
                    .violations
                    .push(format!("{x} does not act as a double transposition on {blocks:?}"));
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn label(text: &str, spec: &GroupSpec) -> ClassLabel {
        ClassLabel::parse(text, spec).unwrap()
    }

    #[test]
    fn double_four_cycles_at_eight() {
        let spec = GroupSpec::alt(8);
        let r = verify_2k2kl_structure(&label("4-4", &spec), &spec, &StructureOptions::default())
            .unwrap();
        assert!(r.exhaustive);
        assert!(r.holds(), "{:?}", r.violations);
        // 1260 elements in components of 12.
        assert_eq!(r.component_sizes, BTreeMap::from([(12, 105)]));
    }

    #[test]
    fn with_a_three_cycle_at_eleven() {
        let spec = GroupSpec::alt(11);
        let opts = StructureOptions {
            max_components: 3,
            ..StructureOptions::default()
        };
        let r = verify_2k2kl_structure(&label("4-4-3", &spec), &spec, &opts).unwrap();
        assert!(r.holds(), "{:?}", r.violations);
        assert_eq!(r.component_sizes.keys().copied().collect::<Vec<_>>(), vec![24]);
    }

    #[test]
    fn hypotheses_are_enforced() {
        let spec = GroupSpec::alt(9);
        // One fixed point on top of 4-4 is not the 2k-2k shape.
        assert!(verify_2k2kl_structure(&label("4-4", &spec), &spec, &StructureOptions::default())
            .is_err());
        let spec = GroupSpec::sym(12);
        // ℓ = 2k.
        assert!(verify_2k2kl_structure(&label("4-4-4", &spec), &spec, &StructureOptions::default())
            .is_err());
        let spec = GroupSpec::alt(16);
        // Five fixed points.
        assert!(verify_2k2kl_structure(&label("4-4-3", &spec), &spec, &StructureOptions::default())
            .is_err());
    }
}
