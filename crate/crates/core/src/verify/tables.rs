//! Witness tables as cycle-notation templates.
//!
//! A template is a product of disjoint cycles. Besides ordinary cycles such
//! as `(1,2,3)` it accepts range cycles `[a..b]`, the cycle `(a,a+1,...,b)`,
//! where `b` may be the letter `n`. A range cycle may carry an exponent
//! `^k` or `^l`, bound when the template is instantiated.

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// One `(h, f)` row: `f` should commute with `h` and have an abelian
/// centralizer.
#[derive(Debug, Clone, Copy)]
pub struct WitnessRow {
    pub h: &'static str,
    pub f: &'static str,
}

const fn row(h: &'static str, f: &'static str) -> WitnessRow {
    WitnessRow { h, f }
}

/// Even `n ≥ 16`; `k` ranges over all powers of the long cycle.
pub const EVEN_GENERIC: [WitnessRow; 6] = [
    row("(4,5)[9..n]^k", "(1,6,2,7,3,8)[9..n]"),
    row("(6,7,8)[9..n]^k", "(1,2,3,4)(6,7,8)[9..n]"),
    row("(1,2)(4,5)[9..n]^k", "(1,4,2,5)(6,7,8)[9..n]"),
    row("(1,2,3)(6,7,8)[9..n]^k", "(1,6,2,7,3,8)[9..n]"),
    row("(1,2)(4,5)(6,7,8)[9..n]^k", "(1,4,2,5)(6,7,8)[9..n]"),
    row("(1,2,3)(4,5)(6,7,8)[9..n]^k", "(1,6,2,7,3,8)[9..n]"),
];

/// `n = 12`, where the generic witnesses fail.
pub const EVEN_TWELVE: [WitnessRow; 6] = [
    row("(4,5)(9,10,11,12)", "(1,6,2,7,3,8)(9,10,11,12)"),
    row("(6,7,8)(9,11)(10,12)", "(1,2,3,4,5)(6,7,8)(9,11)(10,12)"),
    row("(1,2)(4,5)(9,11)(10,12)", "(3,6,7,8)(1,9,4,10,2,11,5,12)"),
    row("(1,2,3)(6,7,8)(9,11)(10,12)", "(1,6,2,7,3,8)(9,10,11,12)"),
    row("(1,2)(4,5)(6,7,8)(9,11)(10,12)", "(6,7,8)(1,4,9,2,5,11)(10,12)"),
    row("(1,2,3)(4,5)(6,7,8)(9,10,11,12)", "(1,6,2,7,3,8)(9,10,11,12)"),
];

/// Odd `n ≥ 21`; `k` and `l` range over the powers of the two long cycles.
pub const ODD: [WitnessRow; 6] = [
    row("(4,5)[9..16]^k[17..n]^l", "(1,6,2,7,3,8)[9..16][17..n]"),
    row("(6,7,8)[9..16]^k[17..n]^l", "(1,4,2,5)(6,7,8)[9..16][17..n]"),
    row("(1,2)(4,5)[9..16]^k[17..n]^l", "(1,4,2,5)(6,7,8)[9..16][17..n]"),
    row("(1,2,3)(6,7,8)[9..16]^k[17..n]^l", "(1,6,2,7,3,8)[9..16][17..n]"),
    row("(1,2)(4,5)(6,7,8)[9..16]^k[17..n]^l", "(1,4,2,5)(6,7,8)[9..16][17..n]"),
    row("(1,2,3)(4,5)(6,7,8)[9..16]^k[17..n]^l", "(1,6,2,7,3,8)[9..16][17..n]"),
];

/// Exponents for `^k` and `^l`.
#[derive(Debug, Clone, Copy, Default)]
pub struct Bindings {
    pub k: i64,
    pub l: i64,
}

/// Whether the template mentions `^k` / `^l`.
pub fn uses(template: &str, var: char) -> bool {
    template.contains(&format!("^{var}"))
}

pub fn instantiate(template: &str, n: usize, b: Bindings) -> Result<Permutation> {
    let bad = |offset: usize, reason: &str| Error::Malformed {
        offset,
        reason: reason.to_string(),
    };
    let bytes = template.as_bytes();
    let mut acc = Permutation::identity(n);
    let mut i = 0;
    while i < bytes.len() {
        match bytes[i] {
            b'(' => {
                let end = template[i..]
                    .find(')')
                    .map(|e| i + e + 1)
                    .ok_or_else(|| bad(i, "unclosed cycle"))?;
                acc = acc.compose(&Permutation::parse(&template[i..end], n)?)?;
                i = end;
            }
            b'[' => {
                let end = template[i..]
                    .find(']')
                    .map(|e| i + e)
                    .ok_or_else(|| bad(i, "unclosed range"))?;
                let (lo, hi) = template[i + 1..end]
                    .split_once("..")
                    .ok_or_else(|| bad(i, "range without '..'"))?;
                let point = |s: &str| -> Result<usize> {
                    if s == "n" {
                        Ok(n)
                    } else {
                        s.parse().map_err(|_| bad(i, "bad range endpoint"))
                    }
                };
                let (lo, hi) = (point(lo)?, point(hi)?);
                if lo < 1 || hi > n || lo >= hi {
                    return Err(Error::InvalidParameters(format!(
                        "range [{lo}..{hi}] does not fit on {n} points"
                    )));
                }
                let points: Vec<usize> = (lo - 1..hi).collect();
                let mut cycle = Permutation::cycle(n, &points)?;
                i = end + 1;
                if bytes.get(i) == Some(&b'^') {
                    let e = match bytes.get(i + 1) {
                        Some(b'k') => b.k,
                        Some(b'l') => b.l,
                        _ => return Err(bad(i, "exponent must be k or l")),
                    };
                    cycle = cycle.pow(e);
                    i += 2;
                }
                acc = acc.compose(&cycle)?;
            }
            c if c.is_ascii_whitespace() => i += 1,
            _ => return Err(bad(i, "unexpected character")),
        }
    }
    Ok(acc)
}
