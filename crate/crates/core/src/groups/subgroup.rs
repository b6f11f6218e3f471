use std::collections::{HashSet, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A subgroup of `S_n` given by generators, optionally with its full
/// element list once closed.
#[derive(Debug, Clone, Serialize)]
pub struct SubgroupGens {
    pub degree: usize,
    pub generators: Vec<Permutation>,
    #[serde(skip)]
    cached: Option<Vec<Permutation>>,
}

impl SubgroupGens {
    /// Identity generators are dropped and duplicates removed; the order of
    /// first appearance is kept.
    pub fn new(degree: usize, generators: impl IntoIterator<Item = Permutation>) -> SubgroupGens {
        let mut seen = HashSet::new();
        let generators = generators
            .into_iter()
            .inspect(|g| assert_eq!(g.degree(), degree, "degree mismatch"))
            .filter(|g| !g.is_identity() && seen.insert(g.clone()))
            .collect();
        SubgroupGens {
            degree,
            generators,
            cached: None,
        }
    }

    pub fn trivial(degree: usize) -> SubgroupGens {
        SubgroupGens::new(degree, std::iter::empty())
    }

    /// Wraps an element list that is already known to be a group.
    pub(crate) fn from_closed(
        degree: usize,
        generators: Vec<Permutation>,
        mut elements: Vec<Permutation>,
    ) -> SubgroupGens {
        elements.sort();
        let mut s = SubgroupGens::new(degree, generators);
        s.cached = Some(elements);
        s
    }

    pub fn is_abelian(&self) -> bool {
        is_abelian(self)
    }

    /// The closed element list, computing it on first use.
    pub fn elements(&mut self, cap: usize) -> Result<&[Permutation]> {
        if self.cached.is_none() {
            self.cached = Some(close(self, cap)?);
        }
        Ok(self.cached.as_deref().expect("just filled"))
    }

    pub fn cached_elements(&self) -> Option<&[Permutation]> {
        self.cached.as_deref()
    }

    pub fn order(&mut self, cap: usize) -> Result<usize> {
        self.elements(cap).map(|e| e.len())
    }

    /// Membership by closure.
    pub fn contains(&mut self, x: &Permutation, cap: usize) -> Result<bool> {
        Ok(self.elements(cap)?.binary_search(x).is_ok())
    }

    pub fn all_even(&self) -> bool {
        self.generators.iter().all(Permutation::is_even)
    }

    /// Generators sorted canonically, used to compare subgroups too large
    /// to close.
    pub fn canonical_generators(&self) -> Vec<Permutation> {
        let mut g = self.generators.clone();
        g.sort();
        g
    }
}

impl PartialEq for SubgroupGens {
    /// Closed element sets when both are cached, sorted generators otherwise.
    fn eq(&self, other: &SubgroupGens) -> bool {
        match (&self.cached, &other.cached) {
            (Some(a), Some(b)) => a == b,
            _ => self.canonical_generators() == other.canonical_generators(),
        }
    }
}

/// True iff every pair of generators commutes.
pub fn is_abelian(s: &SubgroupGens) -> bool {
    let g = &s.generators;
    (0..g.len()).all(|i| (i + 1..g.len()).all(|j| g[i].commutes_with(&g[j])))
}

/// Breadth-first closure, returned in canonical (lexicographic) order.
pub fn close(s: &SubgroupGens, cap: usize) -> Result<Vec<Permutation>> {
    if cap == 0 {
        return Err(Error::InvalidParameters("cap must be positive".into()));
    }
    if let Some(cached) = &s.cached {
        if cached.len() > cap {
            return Err(Error::CapExceeded { cap });
        }
        return Ok(cached.clone());
    }
    let identity = Permutation::identity(s.degree);
    let mut seen: HashSet<Permutation> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(identity.clone());
    queue.push_back(identity);
    while let Some(x) = queue.pop_front() {
        for g in &s.generators {
            let y = &x * g;
            if !seen.contains(&y) {
                if seen.len() >= cap {
                    return Err(Error::CapExceeded { cap });
                }
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    let mut out: Vec<Permutation> = seen.into_iter().collect();
    out.sort();
    Ok(out)
}

/// Generators for the even part of `s`, via Schreier generators for the
/// transversal `{1, s₀}` where `s₀` is the first odd generator.
pub fn intersect_with_alt(s: &SubgroupGens) -> SubgroupGens {
    let Some(s0) = s.generators.iter().find(|g| !g.is_even()).cloned() else {
        return s.clone();
    };
    let s0_inv = s0.inverse();
    let mut gens = Vec::with_capacity(2 * s.generators.len());
    for g in &s.generators {
        if g.is_even() {
            gens.push(g.clone());
            gens.push(&(&s0 * g) * &s0_inv);
        } else {
            gens.push(g * &s0_inv);
            gens.push(&s0 * g);
        }
    }
    SubgroupGens::new(s.degree, gens)
}
