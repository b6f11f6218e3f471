use rayon::prelude::*;
use serde::Serialize;

use super::bits::Bits;
use crate::error::{Error, Result};
use crate::perm::{CycleType, Permutation};

/// Elements of one cycle type, kept sorted and free of duplicates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexSet {
    pub degree: usize,
    pub cycle_type: CycleType,
    elements: Vec<Permutation>,
}

impl VertexSet {
    pub fn new(elements: Vec<Permutation>) -> Result<VertexSet> {
        let first = elements
            .first()
            .ok_or_else(|| Error::InvalidParameters("empty vertex set".into()))?;
        let degree = first.degree();
        let cycle_type = first.cycle_type();
        for g in &elements {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: g.degree(),
                    right: degree,
                });
            }
            if g.cycle_type() != cycle_type {
                return Err(Error::Mismatch(format!(
                    "{g} has cycle type {}, expected {cycle_type}",
                    g.cycle_type()
                )));
            }
        }
        let mut elements = elements;
        elements.sort();
        elements.dedup();
        Ok(VertexSet {
            degree,
            cycle_type,
            elements,
        })
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, g: &Permutation) -> Option<usize> {
        self.elements.binary_search(g).ok()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.index_of(g).is_some()
    }
}

/// Commuting graph on a vertex set, stored as bit-packed adjacency rows
/// without self-loops.
#[derive(Debug, Clone)]
pub struct CommutingGraph {
    pub vertices: VertexSet,
    adjacency: Vec<Bits>,
}

impl CommutingGraph {
    pub fn new(vertices: VertexSet) -> CommutingGraph {
        let elems = vertices.elements();
        let adjacency = (0..elems.len())
            .into_par_iter()
            .map(|i| {
                Bits::from_indices(
                    elems.len(),
                    (0..elems.len()).filter(|&j| j != i && elems[i].commutes_with(&elems[j])),
                )
            })
            .collect();
        CommutingGraph {
            vertices,
            adjacency,
        }
    }

    pub fn len(&self) -> usize {
        self.adjacency.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adjacency.is_empty()
    }

    pub fn adjacency(&self) -> &[Bits] {
        &self.adjacency
    }

    pub fn neighbors(&self, v: usize) -> &Bits {
        &self.adjacency[v]
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Bits::count).sum::<usize>() / 2
    }

    /// Adjacency rows of the complement graph, again without self-loops.
    pub fn complement(&self) -> Vec<Bits> {
        let n = self.len();
        (0..n)
            .map(|i| {
                let mut row = Bits::full(n).and_not(&self.adjacency[i]);
                row.remove(i);
                row
            })
            .collect()
    }

    /// Connected components as sorted index lists, ordered by least index.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = Bits::empty(n);
        let mut out = Vec::new();
        for start in 0..n {
            if seen.contains(start) {
                continue;
            }
            seen.insert(start);
            let mut comp = vec![start];
            let mut i = 0;
            while i < comp.len() {
                for w in self.adjacency[comp[i]].iter() {
                    if !seen.contains(w) {
                        seen.insert(w);
                        comp.push(w);
                    }
                }
                i += 1;
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The graph induced on `indices`, in that order.
    pub fn induced(&self, indices: &[usize]) -> Result<CommutingGraph> {
        let elements = indices
            .iter()
            .map(|&i| self.vertices.elements()[i].clone())
            .collect();
        Ok(CommutingGraph::new(VertexSet::new(elements)?))
    }
}
