use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::perm::{factorial, CycleType, Permutation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Sym,
    Alt,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Sym => "sym",
            Family::Alt => "alt",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct GroupSpec {
    pub family: Family,
    pub degree: usize,
}

impl GroupSpec {
    pub fn sym(degree: usize) -> GroupSpec {
        GroupSpec {
            family: Family::Sym,
            degree,
        }
    }

    pub fn alt(degree: usize) -> GroupSpec {
        GroupSpec {
            family: Family::Alt,
            degree,
        }
    }

    pub fn order(&self) -> u128 {
        let full = factorial(self.degree);
        match self.family {
            Family::Sym => full,
            Family::Alt if self.degree >= 2 => full / 2,
            Family::Alt => full,
        }
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && (self.family == Family::Sym || g.is_even())
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::Sym => write!(f, "S{}", self.degree),
            Family::Alt => write!(f, "A{}", self.degree),
        }
    }
}

/// Which half of a split alternating class. `Plus` is the half containing
/// the lexicographically least element of the symmetric-group class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SplitTag {
    None,
    Plus,
    Minus,
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassLabel {
    pub cycle_type: CycleType,
    pub split: SplitTag,
}

impl ClassLabel {
    pub fn unsplit(cycle_type: CycleType) -> ClassLabel {
        ClassLabel {
            cycle_type,
            split: SplitTag::None,
        }
    }

    /// Accepts `"4-4-3"`, and `"5-3[+]"` / `"5-3[-]"` for split classes.
    pub fn parse(text: &str, spec: &GroupSpec) -> Result<ClassLabel> {
        let text = text.trim();
        let (body, split) = if let Some(body) = text.strip_suffix("[+]") {
            (body, SplitTag::Plus)
        } else if let Some(body) = text.strip_suffix("[-]") {
            (body, SplitTag::Minus)
        } else {
            (text, SplitTag::None)
        };
        let cycle_type = CycleType::parse(body, spec.degree)?;
        let label = ClassLabel { cycle_type, split };
        label.validate(spec)?;
        Ok(label)
    }

    pub fn validate(&self, spec: &GroupSpec) -> Result<()> {
        if self.cycle_type.degree() != spec.degree {
            return Err(Error::DegreeMismatch {
                left: self.cycle_type.degree(),
                right: spec.degree,
            });
        }
        match spec.family {
            Family::Sym if self.split != SplitTag::None => Err(Error::InvalidParameters(
                "split tags only exist in alternating groups".into(),
            )),
            Family::Sym => Ok(()),
            Family::Alt => {
                let splits = splits_in_alt(&self.cycle_type)?;
                match (splits, self.split) {
                    (true, SplitTag::None) => Err(Error::InvalidParameters(format!(
                        "class {} splits in {}; add [+] or [-]",
                        self.cycle_type, spec
                    ))),
                    (false, SplitTag::Plus | SplitTag::Minus) => Err(Error::InvalidParameters(
                        format!("class {} does not split in {}", self.cycle_type, spec),
                    )),
                    _ => Ok(()),
                }
            }
        }
    }

    pub fn is_identity(&self) -> bool {
        self.cycle_type.is_identity()
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cycle_type)?;
        match self.split {
            SplitTag::None => Ok(()),
            SplitTag::Plus => f.write_str("[+]"),
            SplitTag::Minus => f.write_str("[-]"),
        }
    }
}

impl fmt::Debug for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for ClassLabel {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Whether the symmetric class of an even type splits into two alternating
/// classes: all cycle lengths, fixed points included, are distinct and odd.
pub fn splits_in_alt(t: &CycleType) -> Result<bool> {
    if !t.is_even() {
        return Err(Error::OddClassInAlt(t.to_string()));
    }
    if t.is_identity() {
        return Ok(false);
    }
    let parts = t.parts();
    let distinct_odd = parts.iter().all(|p| p % 2 == 1) && parts.windows(2).all(|w| w[0] != w[1]);
    Ok(distinct_odd && t.fixed_points() <= 1)
}

/// All conjugacy classes of the group, identity first.
pub fn classes(spec: &GroupSpec) -> Vec<ClassLabel> {
    let mut out = Vec::new();
    for t in CycleType::all(spec.degree) {
        match spec.family {
            Family::Sym => out.push(ClassLabel::unsplit(t)),
            Family::Alt => {
                if !t.is_even() {
                    continue;
                }
                if splits_in_alt(&t).expect("even type") {
                    out.push(ClassLabel {
                        cycle_type: t.clone(),
                        split: SplitTag::Plus,
                    });
                    out.push(ClassLabel {
                        cycle_type: t,
                        split: SplitTag::Minus,
                    });
                } else {
                    out.push(ClassLabel::unsplit(t));
                }
            }
        }
    }
    out
}

pub fn class_size(label: &ClassLabel, spec: &GroupSpec) -> Result<u128> {
    label.validate(spec)?;
    let full = factorial(spec.degree) / label.cycle_type.sym_centralizer_order();
    Ok(match label.split {
        SplitTag::None => full,
        SplitTag::Plus | SplitTag::Minus => full / 2,
    })
}

pub fn class_representative(label: &ClassLabel, spec: &GroupSpec) -> Result<Permutation> {
    label.validate(spec)?;
    let rep = label.cycle_type.representative();
    Ok(match label.split {
        SplitTag::Minus => {
            let first = rep.support()[0];
            let swap = Permutation::cycle(spec.degree, &[first, first + 1])?;
            rep.conjugate_by(&swap)
        }
        _ => rep,
    })
}

pub fn class_label_of(g: &Permutation, spec: &GroupSpec) -> Result<ClassLabel> {
    if g.degree() != spec.degree {
        return Err(Error::DegreeMismatch {
            left: g.degree(),
            right: spec.degree,
        });
    }
    let cycle_type = g.cycle_type();
    if spec.family == Family::Sym {
        return Ok(ClassLabel::unsplit(cycle_type));
    }
    if !splits_in_alt(&cycle_type)? {
        return Ok(ClassLabel::unsplit(cycle_type));
    }
    // Every conjugator from the representative differs by an element of its
    // centralizer, which is even for split types.
    let x = cycle_type
        .representative()
        .conjugator_to(g)
        .expect("same cycle type");
    let split = if x.is_even() {
        SplitTag::Plus
    } else {
        SplitTag::Minus
    };
    Ok(ClassLabel { cycle_type, split })
}

#[cfg(test)]
mod tests {
    use std::collections::{BTreeMap, HashSet};

    use super::*;
    use crate::perm::all_permutations;

    /// Conjugacy orbits of the whole group by brute force.
    fn brute_orbits(spec: &GroupSpec) -> Vec<Vec<Permutation>> {
        let elements: Vec<Permutation> = all_permutations(spec.degree)
            .filter(|g| spec.contains(g))
            .collect();
        let mut seen = HashSet::new();
        let mut orbits = Vec::new();
        for g in &elements {
            if seen.contains(g) {
                continue;
            }
            let orbit: HashSet<Permutation> = elements.iter().map(|x| g.conjugate_by(x)).collect();
            let mut orbit: Vec<_> = orbit.into_iter().collect();
            orbit.sort();
            seen.extend(orbit.iter().cloned());
            orbits.push(orbit);
        }
        orbits
    }

    #[test]
    fn class_sizes_match_brute_force() {
        for n in 1..=7 {
            for spec in [GroupSpec::sym(n), GroupSpec::alt(n)] {
                let orbits = brute_orbits(&spec);
                let labels = classes(&spec);
                assert_eq!(orbits.len(), labels.len(), "{spec}");
                let mut by_label: BTreeMap<ClassLabel, usize> = BTreeMap::new();
                for orbit in &orbits {
                    let label = class_label_of(&orbit[0], &spec).unwrap();
                    assert!(orbit
                        .iter()
                        .all(|g| class_label_of(g, &spec).unwrap() == label));
                    by_label.insert(label, orbit.len());
                }
                for label in &labels {
                    assert_eq!(
                        class_size(label, &spec).unwrap(),
                        by_label[label] as u128,
                        "{spec} {label}"
                    );
                    let rep = class_representative(label, &spec).unwrap();
                    assert_eq!(&class_label_of(&rep, &spec).unwrap(), label);
                }
                let total: u128 = labels.iter().map(|l| class_size(l, &spec).unwrap()).sum();
                assert_eq!(total, spec.order());
            }
        }
    }

    #[test]
    fn class_sizes_sum_to_group_order_at_eight() {
        for spec in [GroupSpec::sym(8), GroupSpec::alt(8)] {
            let total: u128 = classes(&spec)
                .iter()
                .map(|l| class_size(l, &spec).unwrap())
                .sum();
            assert_eq!(total, spec.order());
        }
    }

    #[test]
    fn splitting_examples() {
        let t = |s: &str, n: usize| CycleType::parse(s, n).unwrap();
        assert!(splits_in_alt(&t("5", 5)).unwrap());
        assert!(!splits_in_alt(&t("4-4", 8)).unwrap());
        assert!(splits_in_alt(&t("3", 3)).unwrap());
        assert!(splits_in_alt(&t("2", 4)).is_err());
        let a5 = GroupSpec::alt(5);
        let plus = ClassLabel::parse("5[+]", &a5).unwrap();
        assert_eq!(class_size(&plus, &a5).unwrap(), 12);
        assert!(ClassLabel::parse("5", &a5).is_err());
        assert!(ClassLabel::parse("2-2[+]", &a5).is_err());
    }

    #[test]
    fn split_brute_force_at_eight() {
        // Brute conjugacy orbits in A_8 for the two cases named in the
        // splitting criterion.
        let elements: Vec<Permutation> =
            all_permutations(8).filter(|g| g.is_even()).collect();
        for (text, splits) in [("4-4", false), ("7", true), ("5-3", true), ("3-3", false)] {
            let t = CycleType::parse(text, 8).unwrap();
            let g = t.representative();
            let orbit: HashSet<_> = elements.iter().map(|x| g.conjugate_by(x)).collect();
            let full = class_size(&ClassLabel::unsplit(t.clone()), &GroupSpec::sym(8)).unwrap();
            assert_eq!(orbit.len() as u128 * if splits { 2 } else { 1 }, full, "{text}");
            assert_eq!(splits_in_alt(&t).unwrap(), splits);
        }
    }

    #[test]
    fn named_class_sizes() {
        let s8 = GroupSpec::sym(8);
        let l = ClassLabel::parse("4-4", &s8).unwrap();
        assert_eq!(class_size(&l, &s8).unwrap(), 1260);
        let s2 = GroupSpec::sym(2);
        assert_eq!(class_size(&ClassLabel::parse("2", &s2).unwrap(), &s2).unwrap(), 1);
        let s10 = GroupSpec::sym(10);
        assert_eq!(
            class_size(&ClassLabel::parse("4-2-2", &s10).unwrap(), &s10).unwrap(),
            56700
        );
        let a8 = GroupSpec::alt(8);
        assert!(matches!(
            class_size(&ClassLabel::parse("2", &GroupSpec::sym(8)).unwrap(), &a8),
            Err(Error::OddClassInAlt(_))
        ));
    }
}
