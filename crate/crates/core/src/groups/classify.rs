use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::centralizer::{centralizer_gens, centralizer_order};
use super::classes::{class_representative, class_size, classes, ClassLabel, GroupSpec};
use super::subgroup::{close, is_abelian};
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Outcome of searching for an `h` with `g ∈ C(h)` and `C(h)` abelian.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AbelianVerdict {
    Witness(Permutation),
    /// Every element of `C(g)` was tried.
    NoWitness { centralizer_order: u128 },
    /// The structured candidates failed and `C(g)` is larger than the cap.
    Undecided { centralizer_order: u128, cap: usize },
}

impl AbelianVerdict {
    pub fn membership(&self) -> Membership {
        match self {
            AbelianVerdict::Witness(_) => Membership::InYa,
            AbelianVerdict::NoWitness { .. } => Membership::NotInYa,
            AbelianVerdict::Undecided { .. } => Membership::Undecided,
        }
    }

    pub fn witness(&self) -> Option<&Permutation> {
        match self {
            AbelianVerdict::Witness(h) => Some(h),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Membership {
    InYa,
    NotInYa,
    Undecided,
}

/// Representatives of the `C_{S_n}(g)`-conjugacy classes inside `C_{S_n}(g)`,
/// restricted to the group, in the order they are tried as witnesses.
///
/// An element of `C_{S_n}(g)` permutes the `ℓ`-cycles of `g` among
/// themselves for each `ℓ` and permutes the fixed points of `g`. Its class
/// under conjugation by `C_{S_n}(g)` is fixed by, for each `ℓ`, the multiset
/// of (orbit length `s` on the `ℓ`-cycles, accumulated rotation `r mod ℓ`),
/// together with the cycle type on the fixed points. Conjugating by
/// `C_{S_n}(g)` fixes `g` and preserves abelian-ness of the centralizer in
/// either group, so trying one element per class is exhaustive.
///
/// Candidates that agree with `g` on its support and whose cycle lengths are
/// pairwise distinct come first.
pub fn witness_candidates(g: &Permutation, spec: &GroupSpec) -> Vec<Permutation> {
    let n = g.degree();
    let mut by_len: BTreeMap<usize, Vec<Vec<usize>>> = BTreeMap::new();
    for c in g.cycles() {
        by_len.entry(c.len()).or_default().push(c);
    }
    let fixed = g.fixed_points();

    let blocks: Vec<(Vec<Vec<usize>>, Vec<Vec<(usize, usize)>>)> = by_len
        .into_iter()
        .map(|(len, cycles)| {
            let mut options = Vec::new();
            orbit_multisets(cycles.len(), len, (usize::MAX, usize::MAX), &mut Vec::new(), &mut options);
            (cycles, options)
        })
        .collect();
    let mut fixed_options = Vec::new();
    integer_partitions(fixed.len(), fixed.len(), &mut Vec::new(), &mut fixed_options);

    let mut choice = vec![0usize; blocks.len()];
    let mut out: Vec<(u8, Permutation)> = Vec::new();
    loop {
        let mut images: Vec<usize> = (0..n).collect();
        let mut keeps_g = true;
        for (b, (cycles, options)) in blocks.iter().enumerate() {
            let mut next = 0;
            for &(s, r) in &options[choice[b]] {
                keeps_g &= s == 1 && r == 1;
                let group = &cycles[next..next + s];
                let len = group[0].len();
                for i in 0..s {
                    for t in 0..len {
                        images[group[i][t]] = if i + 1 < s {
                            group[i + 1][t]
                        } else {
                            group[0][(t + r) % len]
                        };
                    }
                }
                next += s;
            }
        }
        for parts in &fixed_options {
            let mut imgs = images.clone();
            let mut next = 0;
            for &len in parts {
                for i in 0..len {
                    imgs[fixed[next + i]] = fixed[next + (i + 1) % len];
                }
                next += len;
            }
            let h = Permutation::from_images(&imgs).expect("block-wise bijection");
            if !spec.contains(&h) {
                continue;
            }
            debug_assert!(h.commutes_with(g));
            let distinct = {
                let mut lens: Vec<usize> = h.cycles().iter().map(Vec::len).collect();
                lens.extend(std::iter::repeat(1).take(h.fixed_points().len()));
                lens.sort_unstable();
                lens.windows(2).all(|w| w[0] != w[1])
            };
            let priority = match (keeps_g, distinct) {
                (true, true) => 0,
                (true, false) => 1,
                (false, true) => 2,
                (false, false) => 3,
            };
            out.push((priority, h));
        }
        // Odometer over the block choices.
        let mut i = 0;
        loop {
            if i == blocks.len() {
                out.sort();
                out.dedup();
                return out.into_iter().map(|(_, h)| h).collect();
            }
            choice[i] += 1;
            if choice[i] < blocks[i].1.len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

/// Multisets of `(s, r)` with `Σ s = m` and `0 ≤ r < len`, listed as
/// non-increasing sequences.
fn orbit_multisets(
    m: usize,
    len: usize,
    max: (usize, usize),
    current: &mut Vec<(usize, usize)>,
    out: &mut Vec<Vec<(usize, usize)>>,
) {
    if m == 0 {
        out.push(current.clone());
        return;
    }
    for s in (1..=m.min(max.0)).rev() {
        for r in (0..len).rev() {
            if (s, r) > max {
                continue;
            }
            current.push((s, r));
            orbit_multisets(m - s, len, (s, r), current, out);
            current.pop();
        }
    }
}

fn integer_partitions(m: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if m == 0 {
        out.push(current.clone());
        return;
    }
    for part in (1..=m.min(max)).rev() {
        current.push(part);
        integer_partitions(m - part, part, current, out);
        current.pop();
    }
}

/// Decides whether `g` lies in some abelian centralizer of the group.
///
/// Structured candidates are tried first; a negative answer is only given
/// after every element of `C(g)` has been tried, which needs
/// `|C(g)| ≤ cap`.
pub fn lies_in_abelian_centralizer(
    g: &Permutation,
    spec: &GroupSpec,
    cap: usize,
) -> Result<AbelianVerdict> {
    if g.degree() != spec.degree {
        return Err(Error::DegreeMismatch {
            left: g.degree(),
            right: spec.degree,
        });
    }
    if g.is_identity() {
        return Err(Error::InvalidParameters(
            "the identity is excluded from the classification".into(),
        ));
    }
    if !spec.contains(g) {
        return Err(Error::InvalidParameters(format!("{g} is not in {spec}")));
    }
    for h in witness_candidates(g, spec) {
        if is_abelian(&centralizer_gens(&h, spec)) {
            return Ok(AbelianVerdict::Witness(h));
        }
    }
    let order = centralizer_order(g, spec);
    if order > cap as u128 {
        return Ok(AbelianVerdict::Undecided {
            centralizer_order: order,
            cap,
        });
    }
    let elements = close(&centralizer_gens(g, spec), cap)?;
    for h in elements {
        if !h.is_identity() && is_abelian(&centralizer_gens(&h, spec)) {
            return Ok(AbelianVerdict::Witness(h));
        }
    }
    Ok(AbelianVerdict::NoWitness {
        centralizer_order: order,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassRecord {
    pub label: ClassLabel,
    pub size: u128,
    pub representative: Permutation,
    pub in_ya: Membership,
    pub witness: Option<Permutation>,
    pub centralizer_order: u128,
}

#[derive(Debug, Clone, Serialize)]
pub struct Classification {
    pub group: GroupSpec,
    pub cap: usize,
    pub classes: Vec<ClassRecord>,
}

impl Classification {
    /// Classes known not to meet any abelian centralizer.
    pub fn y_b(&self) -> Vec<&ClassRecord> {
        self.classes
            .iter()
            .filter(|c| c.in_ya == Membership::NotInYa)
            .collect()
    }

    pub fn y_b_labels(&self) -> Vec<String> {
        self.y_b().iter().map(|c| c.label.to_string()).collect()
    }

    pub fn undecided(&self) -> Vec<&ClassRecord> {
        self.classes
            .iter()
            .filter(|c| c.in_ya == Membership::Undecided)
            .collect()
    }

    /// One witness per distinct abelian centralizer among the recorded
    /// witnesses, least witness kept.
    pub fn n_a_witnesses(&self) -> Vec<Permutation> {
        let mut w: Vec<Permutation> = self.classes.iter().filter_map(|c| c.witness.clone()).collect();
        w.sort();
        w.dedup();
        w
    }
}

/// Labels every non-identity class as in `Y_a`, not in `Y_a`, or undecided.
pub fn classify_classes(spec: &GroupSpec, cap: usize) -> Result<Classification> {
    let labels: Vec<ClassLabel> = classes(spec).into_iter().filter(|l| !l.is_identity()).collect();
    let records = labels
        .par_iter()
        .map(|label| {
            let rep = class_representative(label, spec)?;
            let verdict = lies_in_abelian_centralizer(&rep, spec, cap)?;
            Ok(ClassRecord {
                label: label.clone(),
                size: class_size(label, spec)?,
                in_ya: verdict.membership(),
                witness: verdict.witness().cloned(),
                centralizer_order: centralizer_order(&rep, spec),
                representative: rep,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Classification {
        group: *spec,
        cap,
        classes: records,
    })
}

#[cfg(test)]
mod tests {
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::groups::DEFAULT_CAP;
    use crate::perm::{all_permutations, CycleType};

    fn verdict(t: &str, spec: GroupSpec) -> AbelianVerdict {
        let g = CycleType::parse(t, spec.degree).unwrap().representative();
        lies_in_abelian_centralizer(&g, &spec, DEFAULT_CAP).unwrap()
    }

    #[test]
    fn named_verdicts() {
        assert_eq!(verdict("4-4", GroupSpec::alt(8)).membership(), Membership::NotInYa);
        assert_eq!(verdict("4-4-3", GroupSpec::alt(11)).membership(), Membership::NotInYa);
        let w = verdict("2-2", GroupSpec::alt(10));
        let h = w.witness().unwrap();
        assert!(is_abelian(&centralizer_gens(h, &GroupSpec::alt(10))));
    }

    #[test]
    fn identity_is_rejected() {
        let spec = GroupSpec::alt(5);
        assert!(lies_in_abelian_centralizer(&Permutation::identity(5), &spec, 10).is_err());
    }

    #[test]
    fn cap_forces_undecided_not_false() {
        let spec = GroupSpec::alt(8);
        let g = CycleType::parse("4-4", 8).unwrap().representative();
        assert!(matches!(
            lies_in_abelian_centralizer(&g, &spec, 4).unwrap(),
            AbelianVerdict::Undecided { .. }
        ));
    }

    #[test]
    fn candidate_classes_are_exhaustive_at_small_degree() {
        // Brute force: some h in C(g) has abelian centralizer iff some
        // candidate does.
        for n in 4..=7 {
            let all: Vec<Permutation> = all_permutations(n).collect();
            for spec in [GroupSpec::sym(n), GroupSpec::alt(n)] {
                for label in classes(&spec).into_iter().filter(|l| !l.is_identity()) {
                    let g = class_representative(&label, &spec).unwrap();
                    let brute = all.iter().any(|h| {
                        spec.contains(h)
                            && h.commutes_with(&g)
                            && brute_abelian_centralizer(&all, h, &spec)
                    });
                    let structured = witness_candidates(&g, &spec)
                        .iter()
                        .any(|h| is_abelian(&centralizer_gens(h, &spec)));
                    assert_eq!(brute, structured, "{spec} {label}");
                }
            }
        }
    }

    fn brute_abelian_centralizer(all: &[Permutation], h: &Permutation, spec: &GroupSpec) -> bool {
        let c: Vec<&Permutation> = all
            .iter()
            .filter(|x| spec.contains(x) && x.commutes_with(h))
            .collect();
        c.iter().all(|a| c.iter().all(|b| a.commutes_with(b)))
    }

    #[test]
    fn verdict_is_class_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for (t, n) in [("4-4", 9), ("3-2-2", 9), ("4-4-3", 11), ("5-2-2", 9)] {
            let spec = GroupSpec::alt(n);
            let g = CycleType::parse(t, n).unwrap().representative();
            let base = lies_in_abelian_centralizer(&g, &spec, DEFAULT_CAP)
                .unwrap()
                .membership();
            for _ in 0..10 {
                let mut images: Vec<usize> = (0..n).collect();
                for i in (1..n).rev() {
                    images.swap(i, rng.gen_range(0..=i));
                }
                let q = Permutation::from_images(&images).unwrap();
                let conj = g.conjugate_by(&q);
                let v = lies_in_abelian_centralizer(&conj, &spec, DEFAULT_CAP).unwrap();
                assert_eq!(v.membership(), base, "{t} conjugated by {q}");
                if let Some(h) = v.witness() {
                    assert!(h.commutes_with(&conj));
                    assert!(is_abelian(&centralizer_gens(h, &spec)));
                }
            }
        }
    }

    #[test]
    fn small_alternating_classifications() {
        for n in 1..=7 {
            let c = classify_classes(&GroupSpec::alt(n), DEFAULT_CAP).unwrap();
            assert!(c.y_b().is_empty() && c.undecided().is_empty(), "A{n}");
        }
        let c = classify_classes(&GroupSpec::alt(8), DEFAULT_CAP).unwrap();
        assert_eq!(c.y_b_labels(), vec!["4-4"]);
        let c = classify_classes(&GroupSpec::sym(3), DEFAULT_CAP).unwrap();
        assert!(c.y_b().is_empty());
        for record in &c.classes {
            let h = record.witness.as_ref().unwrap();
            assert!(h.commutes_with(&record.representative));
        }
    }
}
