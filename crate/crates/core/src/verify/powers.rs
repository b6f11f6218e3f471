use serde_json::{json, Value};

use super::{Finding, RunConfig};
use crate::comgraph::{SliceKind, SliceSpec};
use crate::error::Result;
use crate::groups::{centralizer_gens, centralizer_order, close, GroupSpec};
use crate::perm::Permutation;

fn divisor_pairs(m: usize) -> Vec<(usize, usize)> {
    (1..=m).filter(|d| m % d == 0).map(|d| (d, m / d)).collect()
}

/// For every admissible `(d, k)` (and `(e, j)` in the odd case) builds
/// `h = a·b·c^k(·θ^j)` with `a = (4,5)`, `b = (6,7,8)` and the long cycles
/// of the slice, and `f = a·b·c(·θ)`. Checks that `f` commutes with `h`,
/// has the slice cycle type, and that every generator of `C_{A_n}(f)`
/// commutes with `h`. When both centralizers fit under the cap the
/// inclusion is also checked element by element.
///
/// `h` is not always even; its parity is reported, and the inclusion is
/// checked either way.
pub fn verify_powers_lemma(kind: SliceKind, n: usize, config: &RunConfig) -> Result<Finding> {
    let slice = SliceSpec::new(kind, n)?;
    let spec = GroupSpec::alt(n);
    let short = Permutation::parse("(4,5)(6,7,8)", n)?;
    let f = &short * &slice.long_part();
    let c_f = centralizer_gens(&f, &spec);
    let order_f = centralizer_order(&f, &spec);
    let f_elements = if order_f <= config.cap as u128 {
        Some(close(&c_f, config.cap)?)
    } else {
        None
    };

    // (exponent of each long cycle, label) for every admissible h.
    let mut cases: Vec<(Vec<i64>, Value)> = Vec::new();
    match kind {
        SliceKind::Even => {
            for (d, k) in divisor_pairs(n - 8) {
                cases.push((vec![k as i64], json!({ "d": d, "k": k })));
            }
        }
        SliceKind::Odd => {
            for (d, k) in divisor_pairs(8) {
                for (e, j) in divisor_pairs(n - 16) {
                    cases.push((vec![k as i64, j as i64], json!({ "d": d, "k": k, "e": e, "j": j })));
                }
            }
        }
    }

    let mut ok = slice.contains(&f);
    let mut out = Vec::new();
    for (exps, label) in cases {
        let mut h = short.clone();
        for (c, &e) in slice.long_cycles.iter().zip(&exps) {
            h = &h * &c.pow(e);
        }
        let commutes = f.commutes_with(&h);
        let gens_commute = c_f.generators.iter().all(|g| g.commutes_with(&h));
        let order_h = centralizer_order(&h, &spec);
        let elementwise = match &f_elements {
            Some(fe) if order_h <= config.cap as u128 => {
                let mut he = close(&centralizer_gens(&h, &spec), config.cap)?;
                he.sort();
                Some(fe.iter().all(|x| he.binary_search(x).is_ok()))
            }
            _ => None,
        };
        let case_ok = commutes && gens_commute && elementwise != Some(false);
        ok &= case_ok;
        out.push(json!({
            "parameters": label,
            "h": h.render(),
            "h_type": h.cycle_type().to_string(),
            "h_even": h.is_even(),
            "f_commutes_with_h": commutes,
            "generators_of_C_f_commute_with_h": gens_commute,
            "centralizer_orders": [order_f.to_string(), order_h.to_string()],
            "elementwise_inclusion": elementwise,
            "pass": case_ok,
        }));
    }
    Ok(Finding::new(
        ok,
        json!({
            "f": f.render(),
            "f_type": f.cycle_type().to_string(),
            "cases": out,
        }),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::Outcome;

    #[test]
    fn lemma_holds_at_sixteen_and_twenty_one() {
        let c = RunConfig::default();
        let r = verify_powers_lemma(SliceKind::Even, 16, &c).unwrap();
        assert_eq!(r.result, Outcome::Pass, "{}", r.evidence);
        assert_eq!(r.evidence["cases"].as_array().unwrap().len(), 4);
        let r = verify_powers_lemma(SliceKind::Odd, 21, &c).unwrap();
        assert_eq!(r.result, Outcome::Pass, "{}", r.evidence);
        assert_eq!(r.evidence["cases"].as_array().unwrap().len(), 8);
    }

    #[test]
    fn generator_check_can_fail() {
        // (1,2,3) commutes with f, yet C(f) moves the fixed points of f.
        let spec = GroupSpec::alt(16);
        let f = Permutation::parse("(4,5)(6,7,8)(9,10,11,12,13,14,15,16)", 16).unwrap();
        let h = Permutation::parse("(1,2,3)", 16).unwrap();
        assert!(!centralizer_gens(&f, &spec).generators.iter().all(|g| g.commutes_with(&h)));
    }
}
