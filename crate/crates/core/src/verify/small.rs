use std::collections::BTreeSet;

use serde_json::{json, Value};

use super::{Finding, RunConfig};
use crate::comgraph::validate::check_analysis;
use crate::comgraph::{
    analyze, component_of, in_class, verify_2k2kl_structure, CommutingGraph, ComponentAnalysis,
    StructureOptions,
};
use crate::error::{Error, Result};
use crate::groups::{centralizer_gens, classify_classes, close, ClassLabel, GroupSpec};
use crate::perm::Permutation;

/// Largest component the runners will materialize.
const MAX_COMPONENT: usize = 200_000;

/// `Y_b(A_n)` as stated for the degrees where it is known.
pub(crate) fn expected_y_b(n: usize) -> Option<Vec<&'static str>> {
    match n {
        0..=7 | 10 => Some(vec![]),
        8 | 9 => Some(vec!["4-4"]),
        11 => Some(vec!["4-4-3"]),
        15 => Some(vec!["7-4-4", "6-6-3", "6-4-2-2", "6-3-3-2"]),
        _ => None,
    }
}

fn check_small(n: usize) -> Result<()> {
    if n == 0 || (n > 11 && n != 15) {
        return Err(Error::InvalidParameters(format!(
            "degree {n} is outside n ≤ 11 and n = 15"
        )));
    }
    Ok(())
}

/// Classifies every class of `A_n` and compares `Y_b` with the stated list.
pub fn verify_y_b(n: usize, config: &RunConfig) -> Result<Finding> {
    check_small(n)?;
    let spec = GroupSpec::alt(n);
    let c = classify_classes(&spec, config.cap)?;
    let got: BTreeSet<String> = c.y_b_labels().into_iter().collect();
    let want: BTreeSet<String> = expected_y_b(n)
        .expect("checked degree")
        .into_iter()
        .map(String::from)
        .collect();
    let undecided: Vec<String> = c.undecided().iter().map(|r| r.label.to_string()).collect();
    let evidence = json!({
        "classes": c.classes.len(),
        "y_b": got,
        "expected": want,
        "undecided": undecided,
        "y_b_witnessless_classes": c.y_b().iter().map(|r| json!({
            "class": r.label.to_string(),
            "size": r.size.to_string(),
            "centralizer_order": r.centralizer_order.to_string(),
        })).collect::<Vec<_>>(),
    });
    if !undecided.is_empty() {
        return Ok(Finding::undecided(evidence));
    }
    Ok(Finding::new(got == want, evidence))
}

fn component_evidence(a: &ComponentAnalysis) -> Value {
    json!({
        "size": a.component.len(),
        "delta": a.delta,
        "Delta": a.cover_number,
        "status": a.status,
        "independent_set": a.independent_certificate.iter().map(Permutation::render).collect::<Vec<_>>(),
        "cover": a.cover_certificate.iter().map(|s| s.generators.iter().map(Permutation::render).collect::<Vec<_>>()).collect::<Vec<_>>(),
    })
}

fn analyze_component(
    seed: &Permutation,
    label: &ClassLabel,
    spec: &GroupSpec,
    config: &RunConfig,
) -> Result<(ComponentAnalysis, std::result::Result<(), String>)> {
    let comp = component_of(seed, label, spec, config.cap, MAX_COMPONENT)?;
    let a = analyze(&CommutingGraph::new(comp), None, config.budget, config.cap)?;
    let check = check_analysis(&a, config.cap);
    Ok((a, check))
}

/// For each class of `Y_b(A_n)`, analyzes the component of the class
/// representative. `A_n` permutes the components of a class transitively,
/// so one component stands for all of them. At `n = 15` it also checks
/// that no element of one `Y_b` class commutes with an element of another,
/// by scanning the centralizer of each representative.
pub fn verify_small_n_theorem(n: usize, config: &RunConfig) -> Result<Finding> {
    check_small(n)?;
    let spec = GroupSpec::alt(n);
    let c = classify_classes(&spec, config.cap)?;
    if !c.undecided().is_empty() {
        return Ok(Finding::undecided(json!({
            "reason": "classification hit the cap",
            "undecided": c.undecided().iter().map(|r| r.label.to_string()).collect::<Vec<_>>(),
        })));
    }
    let y_b = c.y_b();
    let mut ok = true;
    let mut certified = true;
    let mut classes = Vec::new();
    let (mut delta_total, mut cover_total) = (0u128, 0u128);
    for r in &y_b {
        let (a, check) = analyze_component(&r.representative, &r.label, &spec, config)?;
        let size = a.component.len() as u128;
        let count = r.size / size;
        ok &= r.size % size == 0 && check.is_ok();
        if a.is_certified() {
            ok &= a.certified_equal();
        } else {
            certified = false;
        }
        delta_total += count * a.delta as u128;
        cover_total += count * a.cover_number as u128;
        let mut e = component_evidence(&a);
        e["class"] = json!(r.label.to_string());
        e["class_size"] = json!(r.size.to_string());
        e["components"] = json!(count.to_string());
        e["validation"] = json!(check.err().unwrap_or_else(|| "ok".into()));
        classes.push(e);
    }

    // Commuting pairs across classes, found through the centralizers.
    let mut cross: Vec<Value> = Vec::new();
    if y_b.len() > 1 {
        for r in &y_b {
            for x in close(&centralizer_gens(&r.representative, &spec), config.cap)? {
                if let Some(other) = y_b
                    .iter()
                    .find(|o| o.label != r.label && in_class(&x, &o.label, &spec))
                {
                    cross.push(json!({
                        "element": r.representative.render(),
                        "commutes_with": x.render(),
                        "class": other.label.to_string(),
                    }));
                }
            }
        }
        ok &= cross.is_empty();
    }
    let evidence = json!({
        "y_b": c.y_b_labels(),
        "y_b_elements": y_b.iter().map(|r| r.size).sum::<u128>().to_string(),
        "classes": classes,
        "cross_class_commuting_pairs": cross,
        "delta_Y_b": delta_total.to_string(),
        "Delta_Y_b": cover_total.to_string(),
    });
    if !ok {
        return Ok(Finding::new(false, evidence));
    }
    if !certified {
        return Ok(Finding::undecided(evidence));
    }
    Ok(Finding::new(true, evidence))
}

/// Seeds and expected (size, δ, Δ) for the explicit components.
pub(crate) fn component_seeds(n: usize) -> Option<Vec<(&'static str, &'static str, usize, usize)>> {
    Some(match n {
        8 | 9 => vec![("4-4", "(1,3,2,4)(5,7,6,8)", 12, 3)],
        11 => vec![("4-4-3", "(1,3,2,4)(5,7,6,8)(9,10,11)", 24, 3)],
        15 => vec![
            ("7-4-4", "(1,3,2,4)(5,7,6,8)(9,10,11,12,13,14,15)", 72, 3),
            ("6-6-3", "(1,10,2,11,3,12)(4,8,5,9,6,7)(13,14,15)", 432, 36),
            ("6-4-2-2", "(1,2,3,4)(5,8)(6,7)(9,10,11,12,13,14)", 72, 6),
            ("6-3-3-2", "(1,2,5,6,3,4)(7,8,9)(10,12,11)(13,14)", 96, 12),
        ],
        _ => return None,
    })
}

/// Regenerates each listed component by search from its seed and
/// certifies `δ = Δ` on it.
pub fn verify_components(n: usize, config: &RunConfig) -> Result<Finding> {
    let seeds = component_seeds(n).ok_or_else(|| {
        Error::InvalidParameters(format!("no listed components at degree {n}"))
    })?;
    let spec = GroupSpec::alt(n);
    let mut ok = true;
    let mut out = Vec::new();
    for (class, seed, size, value) in seeds {
        let label = ClassLabel::parse(class, &spec)?;
        let seed = Permutation::parse(seed, n)?;
        let (a, check) = analyze_component(&seed, &label, &spec, config)?;
        let good = a.component.len() == size
            && a.certified_equal()
            && a.delta == value
            && check.is_ok();
        ok &= good;
        let mut e = component_evidence(&a);
        e["class"] = json!(class);
        e["seed"] = json!(seed.render());
        e["expected"] = json!({ "size": size, "delta": value, "Delta": value });
        e["validation"] = json!(check.err().unwrap_or_else(|| "ok".into()));
        e["pass"] = json!(good);
        out.push(e);
    }
    Ok(Finding::new(ok, json!({ "components": out })))
}

/// The component structure of the `2k-2k-ℓ` classes at the given degree.
pub fn verify_structure(n: usize, config: &RunConfig) -> Result<Finding> {
    let classes: &[&str] = match n {
        8 => &["4-4"],
        11 => &["4-4-3"],
        15 => &["7-4-4", "6-6-3"],
        _ => {
            return Err(Error::InvalidParameters(format!(
                "no 2k-2k-ℓ classes listed at degree {n}"
            )))
        }
    };
    let spec = GroupSpec::alt(n);
    let options = StructureOptions {
        cap: config.cap,
        ..StructureOptions::default()
    };
    let mut ok = true;
    let mut out = Vec::new();
    for class in classes {
        let label = ClassLabel::parse(class, &spec)?;
        let r = verify_2k2kl_structure(&label, &spec, &options)?;
        ok &= r.holds();
        out.push(serde_json::to_value(&r).map_err(|e| Error::InvalidParameters(e.to_string()))?);
    }
    Ok(Finding::new(ok, json!({ "classes": out })))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::Outcome;

    #[test]
    fn y_b_lists_up_to_eleven() {
        let c = RunConfig::default();
        for n in 1..=11 {
            let r = verify_y_b(n, &c).unwrap();
            assert_eq!(r.result, Outcome::Pass, "n={n}: {}", r.evidence);
        }
        assert!(verify_y_b(12, &c).is_err());
    }

    #[test]
    fn theorem_at_eight_and_ten() {
        let c = RunConfig::default();
        let r = verify_small_n_theorem(8, &c).unwrap();
        assert_eq!(r.result, Outcome::Pass, "{}", r.evidence);
        assert_eq!(r.evidence["classes"][0]["components"], "105");
        assert_eq!(r.evidence["delta_Y_b"], "315");
        let r = verify_small_n_theorem(10, &c).unwrap();
        assert_eq!(r.result, Outcome::Pass);
        assert_eq!(r.evidence["y_b"].as_array().unwrap().len(), 0);
    }

    #[test]
    fn components_up_to_eleven() {
        let c = RunConfig::default();
        for n in [8, 9, 11] {
            let r = verify_components(n, &c).unwrap();
            assert_eq!(r.result, Outcome::Pass, "n={n}: {}", r.evidence);
        }
    }
}
