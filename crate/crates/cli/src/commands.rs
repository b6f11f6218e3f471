use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;

use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use cga_core::comgraph::validate::check_analysis;
use cga_core::comgraph::{
    analyze, component_of, export_component, forced_first, full_reps_search, import_component,
    in_class, noncommuting_reps_search, obstruction_groups, replay, CommutingGraph, RepsOptions,
    RepsOutcome, RepsSearch, SliceSpec, VertexSet,
};
use cga_core::groups::{
    centralizer_gens, centralizer_order, classify_classes, is_abelian, ClassLabel, Membership,
};
use cga_core::verify::{self, verify_obstruction, ObstructionCheck, Outcome, RunConfig};
use cga_core::{Error, Permutation};

use crate::config::Config;
use crate::{Command, Group};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_RESOURCE: u8 = 3;

pub struct CommandOutput {
    pub reports: Vec<Value>,
    pub text: String,
    pub status: u8,
}

#[derive(Debug)]
pub struct CommandError {
    pub code: u8,
    pub message: String,
}

impl From<Error> for CommandError {
    fn from(e: Error) -> CommandError {
        let code = match e {
            Error::CapExceeded { .. } | Error::BudgetExhausted { .. } => EXIT_RESOURCE,
            _ => EXIT_USAGE,
        };
        CommandError {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> CommandError {
    CommandError {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

type CommandResult = Result<CommandOutput, CommandError>;

pub fn name(c: &Command) -> &'static str {
    match c {
        Command::Classes { .. } => "classes",
        Command::Centralizer { .. } => "centralizer",
        Command::Component { .. } => "component",
        Command::Cover { .. } => "cover",
        Command::RepsSearch { .. } => "reps-search",
        Command::Verify { .. } => "verify",
    }
}

pub fn run(c: &Command, config: &Config) -> CommandResult {
    match c {
        Command::Classes { group, n } => classes(*group, *n, config),
        Command::Centralizer { group, n, perm } => centralizer(*group, *n, perm),
        Command::Component {
            group,
            n,
            class,
            seed,
            no_cache,
        } => component(*group, *n, class, seed, *no_cache, config),
        Command::Cover { n, kind } => cover((*kind).into(), *n, config),
        Command::RepsSearch {
            n,
            kind,
            groups,
            no_symmetry_reduction,
            every_first,
        } => reps_search((*kind).into(), *n, *groups, !no_symmetry_reduction, *every_first, config),
        Command::Verify { pattern, n } => run_verify(pattern, n, config),
    }
}

fn check_degree(n: usize) -> Result<(), CommandError> {
    if n == 0 || n > 255 {
        return Err(usage(format!("degree {n} is outside 1..=255")));
    }
    Ok(())
}

fn classes(group: Group, n: usize, config: &Config) -> CommandResult {
    check_degree(n)?;
    let spec = group.spec(n);
    let c = classify_classes(&spec, config.cap)?;
    let mut text = format!("{spec}: {} non-identity classes\n", c.classes.len());
    let _ = writeln!(text, "{:<16} {:>24} {:>12}  witness", "class", "size", "in Y_a");
    for r in &c.classes {
        let membership = match r.in_ya {
            Membership::InYa => "yes",
            Membership::NotInYa => "no",
            Membership::Undecided => "undecided",
        };
        let witness = r.witness.as_ref().map_or("-".to_string(), Permutation::render);
        let _ = writeln!(text, "{:<16} {:>24} {:>12}  {witness}", r.label.to_string(), r.size, membership);
    }
    let y_b = c.y_b_labels();
    let _ = writeln!(text, "Y_b = {{{}}}", y_b.join(", "));
    let undecided = c.undecided().len();
    if undecided > 0 {
        let _ = writeln!(text, "{undecided} classes undecided under cap {}", config.cap);
    }
    Ok(CommandOutput {
        reports: vec![json!({
            "kind": "classes",
            "group": spec.to_string(),
            "y_b": y_b,
            "classification": c,
        })],
        text,
        status: if undecided > 0 { EXIT_RESOURCE } else { EXIT_OK },
    })
}

fn centralizer(group: Group, n: usize, perm: &str) -> CommandResult {
    check_degree(n)?;
    let spec = group.spec(n);
    let g = Permutation::parse(perm, n)?;
    if !spec.contains(&g) {
        return Err(usage(format!("{g} is not in {spec}")));
    }
    let c = centralizer_gens(&g, &spec);
    let order = centralizer_order(&g, &spec);
    let abelian = is_abelian(&c);
    let gens: Vec<String> = c.generators.iter().map(Permutation::render).collect();
    let mut text = format!("C_{spec}({}) has order {order}, {}\n", g.render(), if abelian { "abelian" } else { "non-abelian" });
    for s in &gens {
        let _ = writeln!(text, "  {s}");
    }
    Ok(CommandOutput {
        reports: vec![json!({
            "kind": "centralizer",
            "group": spec.to_string(),
            "element": g.render(),
            "cycle_type": g.cycle_type().to_string(),
            "generators": gens,
            "order": order.to_string(),
            "abelian": abelian,
        })],
        text,
        status: EXIT_OK,
    })
}

/// `<group>-<n>-<class>-<first 16 hex digits of sha256(seed)>.txt`
pub fn cache_file_name(group: Group, n: usize, class: &str, seed: &Permutation) -> String {
    let digest = hex::encode(Sha256::digest(seed.render().as_bytes()));
    format!("{}-{n}-{class}-{}.txt", group.name(), &digest[..16])
}

fn cache_params(group: Group, n: usize, class: &str, seed: &Permutation) -> BTreeMap<String, String> {
    BTreeMap::from([
        ("group".to_string(), group.name().to_string()),
        ("n".to_string(), n.to_string()),
        ("class".to_string(), class.to_string()),
        ("seed".to_string(), seed.render()),
    ])
}

/// Reads the cached component if its header matches, otherwise builds it by
/// search and writes the cache.
fn load_component(
    group: Group,
    label: &ClassLabel,
    seed: &Permutation,
    cache: Option<PathBuf>,
    config: &Config,
) -> Result<(VertexSet, Value), CommandError> {
    let spec = group.spec(seed.degree());
    let class = label.to_string();
    let params = cache_params(group, seed.degree(), &class, seed);
    let path = cache.map(|dir| dir.join(cache_file_name(group, seed.degree(), &class, seed)));
    if let Some(p) = &path {
        if let Ok(text) = std::fs::read_to_string(p) {
            if let Ok((header, set)) = import_component(&text) {
                if header.params == params && set.contains(seed) {
                    return Ok((set, json!({ "path": p, "hit": true })));
                }
            }
        }
    }
    let set = component_of(seed, label, &spec, config.cap, config.cap)?;
    let info = match &path {
        Some(p) => {
            let text = export_component(&set, &params)?;
            std::fs::create_dir_all(p.parent().expect("file in a directory"))
                .and_then(|_| std::fs::write(p, text))
                .map_err(|e| usage(format!("cannot write cache {}: {e}", p.display())))?;
            json!({ "path": p, "hit": false })
        }
        None => Value::Null,
    };
    Ok((set, info))
}

fn component(group: Group, n: usize, class: &str, seed: &str, no_cache: bool, config: &Config) -> CommandResult {
    check_degree(n)?;
    let spec = group.spec(n);
    let label = ClassLabel::parse(class, &spec)?;
    let seed = Permutation::parse(seed, n)?;
    if !in_class(&seed, &label, &spec) {
        return Err(usage(format!("{seed} is not in the class {label} of {spec}")));
    }
    let cache = (!no_cache).then(|| config.cache_dir.clone());
    let (set, cache_info) = load_component(group, &label, &seed, cache, config)?;
    let a = analyze(&CommutingGraph::new(set), None, config.budget, config.cap)?;
    let check = check_analysis(&a, config.cap);
    let status = if check.is_err() {
        EXIT_FAIL
    } else if !a.is_certified() {
        EXIT_RESOURCE
    } else {
        EXIT_OK
    };
    let mut text = format!(
        "{spec} class {label}, seed {}: component of {} elements, δ = {}, Δ = {}, {}\n",
        seed.render(),
        a.component.len(),
        a.delta,
        a.cover_number,
        if a.is_certified() { "certified" } else { "not certified" },
    );
    if let Err(e) = &check {
        let _ = writeln!(text, "certificate check failed: {e}");
    }
    if let Some(p) = cache_info.get("path") {
        let _ = writeln!(text, "elements cached at {}", p.as_str().unwrap_or_default());
    }
    Ok(CommandOutput {
        reports: vec![json!({
            "kind": "component",
            "group": spec.to_string(),
            "class": label.to_string(),
            "seed": seed.render(),
            "size": a.component.len(),
            "delta": a.delta,
            "Delta": a.cover_number,
            "status": a.status,
            "certified": a.is_certified(),
            "independent_set": a.independent_certificate.iter().map(Permutation::render).collect::<Vec<_>>(),
            "cover": a.cover_certificate.iter().map(|s| s.generators.iter().map(Permutation::render).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "validation": check.err().unwrap_or_else(|| "ok".into()),
            "cache": cache_info,
        })],
        text,
        status,
    })
}

fn run_config(config: &Config) -> RunConfig {
    RunConfig {
        cap: config.cap,
        budget: config.budget,
    }
}

fn cover(kind: cga_core::comgraph::SliceKind, n: usize, config: &Config) -> CommandResult {
    let slice = SliceSpec::new(kind, n)?;
    let family = slice.cover_family();
    let rc = run_config(config);
    let abelian = verify_obstruction(kind, n, ObstructionCheck::Cover, &rc)?;
    let meets = verify_obstruction(kind, n, ObstructionCheck::CoverMeets, &rc)?;
    let ok = abelian.result == Outcome::Pass && meets.result == Outcome::Pass;
    let text = format!(
        "{kind} slice at n = {n}: {} members ({}), abelian cover: {}, partition into 4-sets: {}\n",
        family.members.len(),
        family.description,
        abelian.result,
        meets.result,
    );
    Ok(CommandOutput {
        reports: vec![json!({
            "kind": "cover",
            "slice": slice,
            "description": family.description,
            "members": family.members.iter().map(|s| s.generators.iter().map(Permutation::render).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "abelian_cover": { "result": abelian.result, "evidence": abelian.evidence },
            "meets_slice": { "result": meets.result, "evidence": meets.evidence },
        })],
        text,
        status: if ok { EXIT_OK } else { EXIT_FAIL },
    })
}

fn describe(s: &RepsSearch, text: &mut String) {
    match &s.outcome {
        RepsOutcome::Feasible { assignment } => {
            let _ = writeln!(text, "feasible:");
            for (i, a) in assignment.iter().enumerate() {
                let _ = writeln!(text, "  a_{} = {}", i + 1, a.render());
            }
        }
        RepsOutcome::Infeasible { trace } => {
            let _ = writeln!(
                text,
                "infeasible: {} nodes, {} dead ends, per group {:?}",
                trace.nodes, trace.total_dead_ends, trace.dead_end_counts
            );
            for d in trace.dead_ends.iter().take(5) {
                let prefix: Vec<String> = d.prefix.iter().map(Permutation::render).collect();
                let _ = writeln!(text, "  [{}] leaves A_{} empty", prefix.join(", "), d.dead_group + 1);
            }
        }
    }
}

fn reps_search(
    kind: cga_core::comgraph::SliceKind,
    n: usize,
    count: usize,
    reduce: bool,
    every_first: bool,
    config: &Config,
) -> CommandResult {
    let slice = SliceSpec::new(kind, n)?;
    let options = RepsOptions {
        symmetry_reduction: reduce,
        cap: config.cap,
        ..RepsOptions::default()
    };
    let t = slice.cycle_type();
    let mut text = format!("{kind} slice at n = {n}, {count} groups, symmetry reduction {}\n", if reduce { "on" } else { "off" });
    if every_first {
        let runs = full_reps_search(&slice, count, &options)?;
        let feasible = runs.iter().filter(|r| r.search.is_feasible()).count();
        let _ = writeln!(text, "{} first choices, {feasible} feasible", runs.len());
        return Ok(CommandOutput {
            reports: vec![json!({
                "kind": "reps-search",
                "slice": slice,
                "groups": count,
                "symmetry_reduction": reduce,
                "every_first": true,
                "feasible": feasible > 0,
                "runs": runs.iter().map(|r| json!({
                    "first": r.first.render(),
                    "transport": r.transport.render(),
                    "search": r.search,
                })).collect::<Vec<_>>(),
            })],
            text,
            status: EXIT_OK,
        });
    }
    let groups = obstruction_groups(&slice, count)?;
    let first = forced_first(&slice);
    let s = noncommuting_reps_search(&groups, &t, &[(0, first.clone())], &options)?;
    let replayed = replay(&s, &groups, &t, &options);
    let _ = writeln!(text, "a_1 = {}", first.render());
    describe(&s, &mut text);
    if let Err(e) = &replayed {
        let _ = writeln!(text, "replay disagrees: {e}");
    }
    Ok(CommandOutput {
        reports: vec![json!({
            "kind": "reps-search",
            "slice": slice,
            "groups": groups.iter().map(|g| g.generators.iter().map(Permutation::render).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "symmetry_reduction": reduce,
            "every_first": false,
            "feasible": s.is_feasible(),
            "search": s,
            "replay": replayed.clone().err().unwrap_or_else(|| "ok".into()),
        })],
        text,
        status: if replayed.is_ok() { EXIT_OK } else { EXIT_FAIL },
    })
}

fn run_verify(pattern: &str, n: &[usize], config: &Config) -> CommandResult {
    let claims = verify::select(pattern).map_err(|e| usage(e.to_string()))?;
    let degrees = (!n.is_empty()).then_some(n);
    let reports = verify::run_claims(&claims, degrees, &run_config(config), config.jobs)?;
    let mut text = format!("{:<40} {:>4} {:>10} {:>10}\n", "claim", "n", "result", "ms");
    for r in &reports {
        let n = r.parameters.get("n").map_or("-".to_string(), Value::to_string);
        let _ = writeln!(text, "{:<40} {:>4} {:>10} {:>10}", r.claim_id, n, r.result.to_string(), r.wall_time_ms);
    }
    let failed = reports.iter().filter(|r| r.result == Outcome::Fail).count();
    let undecided = reports.iter().filter(|r| r.result == Outcome::Undecided).count();
    let _ = writeln!(
        text,
        "{} claims: {} pass, {failed} fail, {undecided} undecided",
        reports.len(),
        reports.len() - failed - undecided
    );
    let status = if failed > 0 {
        EXIT_FAIL
    } else if undecided > 0 {
        EXIT_RESOURCE
    } else {
        EXIT_OK
    };
    Ok(CommandOutput {
        reports: reports
            .iter()
            .map(|r| serde_json::to_value(r).expect("serializable"))
            .collect(),
        text,
        status,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cache_names_depend_on_the_seed() {
        let a = Permutation::parse("(1,3,2,4)(5,7,6,8)", 8).unwrap();
        let b = Permutation::parse("(1,2,3,4)(5,6,7,8)", 8).unwrap();
        let x = cache_file_name(Group::Alt, 8, "4-4", &a);
        assert!(x.starts_with("alt-8-4-4-") && x.ends_with(".txt"));
        assert_ne!(x, cache_file_name(Group::Alt, 8, "4-4", &b));
        assert_eq!(x, cache_file_name(Group::Alt, 8, "4-4", &a));
    }

    #[test]
    fn resource_errors_map_to_three() {
        assert_eq!(CommandError::from(Error::CapExceeded { cap: 1 }).code, EXIT_RESOURCE);
        assert_eq!(CommandError::from(Error::InvalidParameters("x".into())).code, EXIT_USAGE);
    }
}
