use std::collections::{BTreeSet, VecDeque};

use super::graph::VertexSet;
use crate::error::{Error, Result};
use crate::groups::{centralizer_gens, class_label_of, close, ClassLabel, GroupSpec, SplitTag};
use crate::perm::Permutation;

/// True iff `g` lies in the class `label` of the group.
pub fn in_class(g: &Permutation, label: &ClassLabel, spec: &GroupSpec) -> bool {
    if g.degree() != spec.degree || !spec.contains(g) || g.cycle_type() != label.cycle_type {
        return false;
    }
    label.split == SplitTag::None || class_label_of(g, spec).is_ok_and(|l| l == *label)
}

/// Elements of the class that commute with `v`, excluding `v`, read off the
/// closed centralizer.
pub fn neighbors_in_class(
    v: &Permutation,
    label: &ClassLabel,
    spec: &GroupSpec,
    cap: usize,
) -> Result<Vec<Permutation>> {
    let c = close(&centralizer_gens(v, spec), cap)?;
    Ok(c.into_iter()
        .filter(|x| x != v && in_class(x, label, spec))
        .collect())
}

/// The connected component of `v` in the commuting graph of its class.
///
/// `max_vertices` bounds the component size.
pub fn component_of(
    v: &Permutation,
    label: &ClassLabel,
    spec: &GroupSpec,
    cap: usize,
    max_vertices: usize,
) -> Result<VertexSet> {
    label.validate(spec)?;
    if !in_class(v, label, spec) {
        return Err(Error::Mismatch(format!(
            "{v} is not in the class {label} of {spec}"
        )));
    }
    let mut seen: BTreeSet<Permutation> = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(v.clone());
    queue.push_back(v.clone());
    while let Some(x) = queue.pop_front() {
        for y in neighbors_in_class(&x, label, spec, cap)? {
            if !seen.contains(&y) {
                if seen.len() >= max_vertices {
                    return Err(Error::BudgetExhausted {
                        limit: max_vertices as u64,
                    });
                }
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    VertexSet::new(seen.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{class_representative, classes};
    use crate::perm::all_permutations;

    fn p(text: &str, n: usize) -> Permutation {
        Permutation::parse(text, n).unwrap()
    }

    fn label(text: &str, spec: &GroupSpec) -> ClassLabel {
        ClassLabel::parse(text, spec).unwrap()
    }

    #[test]
    fn full_cycle_neighbors_are_its_generating_powers() {
        let spec = GroupSpec::sym(7);
        let v = p("(1,2,3,4,5,6,7)", 7);
        let got = neighbors_in_class(&v, &label("7", &spec), &spec, 1000).unwrap();
        let mut want: Vec<Permutation> = (2..7).map(|i| v.pow(i)).collect();
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn double_four_cycles_in_a8() {
        let spec = GroupSpec::alt(8);
        let l = label("4-4", &spec);
        let v = p("(1,3,2,4)(5,7,6,8)", 8);
        let brute = all_permutations(8)
            .filter(|x| *x != v && in_class(x, &l, &spec) && x.commutes_with(&v))
            .count();
        assert_eq!(brute, 7);
        assert_eq!(neighbors_in_class(&v, &l, &spec, 1000).unwrap().len(), brute);
        let comp = component_of(&v, &l, &spec, 1000, 10_000).unwrap();
        assert_eq!(comp.len(), 12);
        // Same component from another member.
        let other = comp.elements()[5].clone();
        assert_eq!(component_of(&other, &l, &spec, 1000, 10_000).unwrap(), comp);
        assert!(matches!(
            component_of(&v, &l, &spec, 1000, 5),
            Err(Error::BudgetExhausted { .. })
        ));
        assert!(component_of(&p("(1,2,3)", 8), &l, &spec, 1000, 100).is_err());
    }

    #[test]
    fn neighbors_match_brute_force() {
        for n in 4..=7 {
            let all: Vec<Permutation> = all_permutations(n).collect();
            for spec in [GroupSpec::sym(n), GroupSpec::alt(n)] {
                for l in classes(&spec).into_iter().filter(|l| !l.is_identity()) {
                    let v = class_representative(&l, &spec).unwrap();
                    let brute: Vec<Permutation> = all
                        .iter()
                        .filter(|x| **x != v && in_class(x, &l, &spec) && x.commutes_with(&v))
                        .cloned()
                        .collect();
                    assert_eq!(neighbors_in_class(&v, &l, &spec, 10_000).unwrap(), brute);
                }
            }
        }
    }

    #[test]
    fn split_classes_are_respected() {
        let spec = GroupSpec::alt(5);
        let plus = label("5[+]", &spec);
        let v = class_representative(&plus, &spec).unwrap();
        // v^2 and v^3 lie in the other half.
        let got = neighbors_in_class(&v, &plus, &spec, 100).unwrap();
        assert_eq!(got, {
            let mut w = vec![v.pow(4)];
            w.sort();
            w
        });
    }
}
