//! Certificate checks kept apart from the searches: they use only the
//! permutation primitives and their own closure.

use std::collections::HashSet;

use super::analysis::{ComponentAnalysis, Status};
use crate::groups::SubgroupGens;
use crate::perm::Permutation;

/// Checks that no two members of `set` commute.
pub fn check_independent(set: &[Permutation]) -> Result<(), String> {
    for (i, a) in set.iter().enumerate() {
        for b in &set[i + 1..] {
            if a == b {
                return Err(format!("{a} is listed twice"));
            }
            if a.commutes_with(b) {
                return Err(format!("{a} and {b} commute"));
            }
        }
    }
    Ok(())
}

/// Elements of an abelian group given by commuting generators: every
/// product of generator powers.
fn abelian_elements(s: &SubgroupGens, cap: usize) -> Result<HashSet<Permutation>, String> {
    let mut elements: HashSet<Permutation> = HashSet::new();
    elements.insert(Permutation::identity(s.degree));
    for g in &s.generators {
        let mut next = elements.clone();
        let mut power = g.clone();
        while !power.is_identity() {
            for x in &elements {
                next.insert(&power * x);
            }
            if next.len() > cap {
                return Err(format!("subgroup exceeds {cap} elements"));
            }
            power = &power * g;
        }
        elements = next;
    }
    Ok(elements)
}

/// Checks that every member is abelian and that the members together
/// contain every vertex.
pub fn check_cover(
    vertices: &[Permutation],
    cover: &[SubgroupGens],
    cap: usize,
) -> Result<(), String> {
    let mut union: HashSet<Permutation> = HashSet::new();
    for (k, s) in cover.iter().enumerate() {
        for (i, a) in s.generators.iter().enumerate() {
            for b in &s.generators[i + 1..] {
                if a.commutes_with(b) {
                    continue;
                }
                return Err(format!("cover member {k} is not abelian: {a} and {b}"));
            }
        }
        union.extend(abelian_elements(s, cap)?);
    }
    match vertices.iter().find(|v| !union.contains(*v)) {
        Some(v) => Err(format!("{v} is not covered")),
        None => Ok(()),
    }
}

/// Re-checks an analysis: certificates, their sizes and the status.
pub fn check_analysis(a: &ComponentAnalysis, cap: usize) -> Result<(), String> {
    let vertices = a.component.elements();
    if a.independent_certificate.len() != a.delta {
        return Err("independent certificate size differs from delta".into());
    }
    if a.cover_certificate.len() != a.cover_number {
        return Err("cover certificate size differs from Delta".into());
    }
    if let Some(v) = a.independent_certificate.iter().find(|v| !vertices.contains(v)) {
        return Err(format!("{v} is not a vertex"));
    }
    check_independent(&a.independent_certificate)?;
    check_cover(vertices, &a.cover_certificate, cap)?;
    if a.delta > a.cover_number {
        return Err("delta exceeds Delta".into());
    }
    match a.status {
        Status::Certified => {
            if a.delta != a.cover_number && !(a.delta_exact && a.cover_exact) {
                return Err("certified without matching bounds".into());
            }
        }
        Status::Bounds { lo, hi } => {
            if lo > hi || hi != a.cover_number {
                return Err("inconsistent bounds".into());
            }
        }
    }
    Ok(())
}
