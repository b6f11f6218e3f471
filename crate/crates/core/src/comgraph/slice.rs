use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::analysis::{clique_number, CoverFamily};
use super::graph::{CommutingGraph, VertexSet};
use crate::error::{Error, Result};
use crate::groups::{intersect_with_alt, SubgroupGens};
use crate::perm::{CycleType, Permutation};

/// Points `1..=8` (0-based `0..8`) carry the short cycles.
const FREE_POINTS: usize = 8;

/// Which slice: a 2-cycle, a 3-cycle and one long cycle `γ` on `9..n`
/// (even `n`), or additionally an 8-cycle `γ` on `9..16` and `θ` on
/// `17..n` (odd `n`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SliceKind {
    Even,
    Odd,
}

impl fmt::Display for SliceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SliceKind::Even => "even",
            SliceKind::Odd => "odd",
        })
    }
}

impl FromStr for SliceKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<SliceKind> {
        match s {
            "even" => Ok(SliceKind::Even),
            "odd" => Ok(SliceKind::Odd),
            _ => Err(Error::InvalidParameters(format!("unknown kind {s:?}"))),
        }
    }
}

/// The fixed long cycles of a slice at a given degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SliceSpec {
    pub kind: SliceKind,
    pub degree: usize,
    pub long_cycles: Vec<Permutation>,
}

impl SliceSpec {
    /// Even kind needs `n = 12` or even `n ≥ 16`; odd kind needs odd
    /// `n ≥ 21`.
    pub fn new(kind: SliceKind, n: usize) -> Result<SliceSpec> {
        let valid = match kind {
            SliceKind::Even => n == 12 || (n % 2 == 0 && n >= 16),
            SliceKind::Odd => n % 2 == 1 && n >= 21,
        };
        if !valid || n > crate::perm::MAX_DEGREE {
            return Err(Error::InvalidParameters(format!(
                "degree {n} is outside the range of the {kind} slice"
            )));
        }
        let range = |a: usize, b: usize| -> Permutation {
            Permutation::cycle(n, &(a..b).collect::<Vec<_>>()).expect("valid range")
        };
        let long_cycles = match kind {
            SliceKind::Even => vec![range(8, n)],
            SliceKind::Odd => vec![range(8, 16), range(16, n)],
        };
        Ok(SliceSpec {
            kind,
            degree: n,
            long_cycles,
        })
    }

    /// Product of the long cycles.
    pub fn long_part(&self) -> Permutation {
        self.long_cycles
            .iter()
            .fold(Permutation::identity(self.degree), |acc, c| &acc * c)
    }

    /// Cycle type shared by every slice element.
    pub fn cycle_type(&self) -> CycleType {
        let mut parts = vec![2, 3];
        parts.extend(self.long_cycles.iter().map(|c| c.support().len()));
        CycleType::new(parts, self.degree).expect("fits")
    }

    /// Strict membership: the right cycle type, with exactly the fixed long
    /// cycles (not powers of them) in the decomposition.
    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree || g.cycle_type() != self.cycle_type() {
            return false;
        }
        let long = self.long_part();
        let support = long.support();
        support.iter().all(|&x| g.apply(x) == long.apply(x))
    }

    /// Power-closed membership: right cycle type, and on the long supports
    /// `g` agrees with a product of generating powers of the long cycles.
    pub fn contains_up_to_powers(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree || g.cycle_type() != self.cycle_type() {
            return false;
        }
        self.long_cycles.iter().all(|c| {
            let support = c.support();
            let len = support.len() as i64;
            (1..len).any(|j| {
                crate::perm::gcd(j as u64, len as u64) == 1
                    && support.iter().all(|&x| g.apply(x) == c.pow(j).apply(x))
            })
        })
    }

    /// Every element of the strict slice: a 2-cycle times a disjoint
    /// 3-cycle on the free points, times the long cycles.
    pub fn elements(&self) -> VertexSet {
        let long = self.long_part();
        let mut out = Vec::new();
        for short in short_parts(self.degree) {
            out.push(&short * &long);
        }
        VertexSet::new(out).expect("non-empty slice")
    }

    /// Every subgroup `⟨a, b, c, long cycles⟩ ∩ A_n` with `a` a 2-cycle and
    /// `b`, `c` 3-cycles on disjoint supports among the free points.
    pub fn cover_family(&self) -> CoverFamily {
        let n = self.degree;
        let mut members = Vec::new();
        for a in pairs(FREE_POINTS) {
            let rest: Vec<usize> = (0..FREE_POINTS).filter(|x| !a.contains(x)).collect();
            // Split the remaining six points into two triples; the triple
            // holding the least point is listed first.
            for second in triples(&rest[1..]) {
                if second.len() != 2 {
                    continue;
                }
                let b: Vec<usize> = std::iter::once(rest[0]).chain(second.iter().copied()).collect();
                let c: Vec<usize> = rest.iter().copied().filter(|x| !b.contains(x)).collect();
                let mut gens = vec![
                    Permutation::cycle(n, &a).expect("pair"),
                    Permutation::cycle(n, &b).expect("triple"),
                    Permutation::cycle(n, &c).expect("triple"),
                ];
                gens.extend(self.long_cycles.iter().cloned());
                members.push(intersect_with_alt(&SubgroupGens::new(n, gens)));
            }
        }
        let long = if self.long_cycles.len() == 1 { "γ" } else { "γ, θ" };
        CoverFamily {
            description: format!(
                "⟨a, b, c, {long}⟩ ∩ A_{n} over all disjoint 2-cycles a and 3-cycles b, c on points 1..8"
            ),
            members,
        }
    }
}

/// All products of a 2-cycle and a disjoint 3-cycle on the free points.
fn short_parts(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    for a in pairs(FREE_POINTS) {
        let rest: Vec<usize> = (0..FREE_POINTS).filter(|x| !a.contains(x)).collect();
        for t in triples(&rest) {
            if t.len() != 3 {
                continue;
            }
            let ta = Permutation::cycle(n, &a).expect("pair");
            for b in [vec![t[0], t[1], t[2]], vec![t[0], t[2], t[1]]] {
                out.push(&ta * &Permutation::cycle(n, &b).expect("triple"));
            }
        }
    }
    out
}

fn pairs(m: usize) -> Vec<Vec<usize>> {
    (0..m).flat_map(|a| (a + 1..m).map(move |b| vec![a, b])).collect()
}

/// Subsets of `points` of size at most three, in lexicographic order.
fn triples(points: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            out.push(vec![points[i], points[j]]);
            for k in j + 1..points.len() {
                out.push(vec![points[i], points[j], points[k]]);
            }
        }
    }
    out
}

/// The strict slice at degree `n`.
pub fn strict_slice(kind: SliceKind, n: usize) -> Result<VertexSet> {
    Ok(SliceSpec::new(kind, n)?.elements())
}

/// The structural abelian cover of the strict slice.
pub fn structural_cover_family(kind: SliceKind, n: usize) -> Result<CoverFamily> {
    Ok(SliceSpec::new(kind, n)?.cover_family())
}

/// Largest pairwise commuting subset of the slice, by exact clique search.
pub fn max_commuting_subset_in_slice(slice: &VertexSet) -> usize {
    let (omega, exact) = clique_number(&CommutingGraph::new(slice.clone()), u64::MAX);
    debug_assert!(exact);
    omega
}
