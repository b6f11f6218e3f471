//! Exact searches on bitset graphs: maximum clique, maximal-clique
//! enumeration and minimum set cover. Also a seeded local search for
//! independent transversals on sparse graphs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::bits::Bits;

/// Outcome of a budgeted search. `exact` is false when the node budget ran
/// out before the search closed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    pub best: Vec<usize>,
    pub exact: bool,
    pub nodes: u64,
}

/// Maximum clique by branch and bound with greedy-colouring bounds.
///
/// Vertices are branched on in order of decreasing degree, ties broken by
/// index. `initial` seeds the incumbent; the search stops early once the
/// incumbent reaches `stop_at`.
pub fn max_clique(
    adj: &[Bits],
    budget: u64,
    initial: &[usize],
    stop_at: Option<usize>,
) -> SearchResult {
    let n = adj.len();
    if n == 0 {
        return SearchResult {
            best: Vec::new(),
            exact: true,
            nodes: 0,
        };
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(adj[v].count()), v));
    let mut rank = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        rank[v] = i;
    }
    let relabelled: Vec<Bits> = order
        .iter()
        .map(|&v| Bits::from_indices(n, adj[v].iter().map(|w| rank[w])))
        .collect();
    let mut search = CliqueSearch {
        adj: &relabelled,
        best: initial.iter().map(|&v| rank[v]).collect(),
        nodes: 0,
        budget,
        exhausted: false,
        stop_at: stop_at.unwrap_or(usize::MAX),
    };
    if search.best.len() < search.stop_at {
        let mut r = Vec::new();
        search.expand(&mut r, Bits::full(n));
    }
    let mut best: Vec<usize> = search.best.iter().map(|&i| order[i]).collect();
    best.sort_unstable();
    SearchResult {
        best,
        exact: !search.exhausted,
        nodes: search.nodes,
    }
}

struct CliqueSearch<'a> {
    adj: &'a [Bits],
    best: Vec<usize>,
    nodes: u64,
    budget: u64,
    exhausted: bool,
    stop_at: usize,
}

impl CliqueSearch<'_> {
    fn expand(&mut self, r: &mut Vec<usize>, mut p: Bits) {
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exhausted = true;
            return;
        }
        let (order, colours) = colour_sort(self.adj, &p);
        for i in (0..order.len()).rev() {
            if r.len() + colours[i] <= self.best.len() || self.best.len() >= self.stop_at {
                return;
            }
            let v = order[i];
            r.push(v);
            let next = p.and(&self.adj[v]);
            if next.is_empty() {
                if r.len() > self.best.len() {
                    self.best = r.clone();
                }
            } else {
                self.expand(r, next);
            }
            r.pop();
            p.remove(v);
            if self.exhausted {
                return;
            }
        }
    }
}

/// Greedy sequential colouring of `p`; returns vertices with their colour
/// numbers in non-decreasing colour order.
fn colour_sort(adj: &[Bits], p: &Bits) -> (Vec<usize>, Vec<usize>) {
    let mut uncoloured = p.clone();
    let mut order = Vec::with_capacity(p.count());
    let mut colours = Vec::with_capacity(order.capacity());
    let mut colour = 0;
    while !uncoloured.is_empty() {
        colour += 1;
        let mut q = uncoloured.clone();
        while let Some(v) = q.first() {
            q.remove(v);
            q.subtract(&adj[v]);
            uncoloured.remove(v);
            order.push(v);
            colours.push(colour);
        }
    }
    (order, colours)
}

/// Greedy clique from every start vertex, extending by the candidate with
/// the most neighbours among the remaining candidates. Returns the largest.
pub fn greedy_clique(adj: &[Bits]) -> Vec<usize> {
    let n = adj.len();
    let mut best = Vec::new();
    for start in 0..n {
        let mut clique = vec![start];
        let mut cand = adj[start].clone();
        while !cand.is_empty() {
            let v = cand
                .iter()
                .max_by_key(|&v| (adj[v].intersection_count(&cand), std::cmp::Reverse(v)))
                .expect("non-empty");
            clique.push(v);
            cand.intersect_with(&adj[v]);
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best.sort_unstable();
    best
}

/// All maximal cliques, by Bron–Kerbosch with pivoting. Returns `None` if
/// more than `limit` cliques exist.
pub fn maximal_cliques(adj: &[Bits], limit: usize) -> Option<Vec<Bits>> {
    let n = adj.len();
    let mut out = Vec::new();
    let ok = bron_kerbosch(adj, Bits::empty(n), Bits::full(n), Bits::empty(n), &mut out, limit);
    ok.then(|| {
        out.sort();
        out
    })
}

fn bron_kerbosch(
    adj: &[Bits],
    r: Bits,
    mut p: Bits,
    mut x: Bits,
    out: &mut Vec<Bits>,
    limit: usize,
) -> bool {
    if p.is_empty() {
        if x.is_empty() {
            if out.len() >= limit {
                return false;
            }
            out.push(r);
        }
        return true;
    }
    let mut px = p.clone();
    px.union_with(&x);
    let pivot = px
        .iter()
        .max_by_key(|&u| adj[u].intersection_count(&p))
        .expect("non-empty");
    let branch = p.and_not(&adj[pivot]);
    for v in branch.iter() {
        let mut r2 = r.clone();
        r2.insert(v);
        if !bron_kerbosch(adj, r2, p.and(&adj[v]), x.and(&adj[v]), out, limit) {
            return false;
        }
        p.remove(v);
        x.insert(v);
    }
    true
}

/// Minimum cover of all `n` vertices by members of `sets`.
///
/// `adj` is the graph whose cliques the sets are; pairwise non-adjacent
/// uncovered vertices give the lower bound at each node. `initial` is an
/// incumbent cover and `lower_bound` a known global bound that ends the
/// search once met.
pub fn min_set_cover(
    adj: &[Bits],
    sets: &[Bits],
    initial: Option<Vec<usize>>,
    lower_bound: usize,
    budget: u64,
) -> Option<SearchResult> {
    let n = adj.len();
    let mut containing: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, s) in sets.iter().enumerate() {
        for v in s.iter() {
            containing[v].push(i);
        }
    }
    if containing.iter().any(Vec::is_empty) {
        return None;
    }
    let greedy = greedy_cover(n, sets);
    let best = match initial {
        Some(c) if c.len() <= greedy.len() => c,
        _ => greedy,
    };
    let mut search = CoverSearch {
        adj,
        sets,
        containing: &containing,
        best,
        nodes: 0,
        budget,
        exhausted: false,
        lower_bound,
    };
    if search.best.len() > lower_bound {
        let mut chosen = Vec::new();
        search.expand(&mut chosen, &Bits::empty(n));
    }
    let mut best = search.best;
    best.sort_unstable();
    Some(SearchResult {
        best,
        exact: !search.exhausted,
        nodes: search.nodes,
    })
}

/// Repeatedly takes the set covering the most uncovered vertices.
pub fn greedy_cover(n: usize, sets: &[Bits]) -> Vec<usize> {
    let mut uncovered = Bits::full(n);
    let mut chosen = Vec::new();
    while !uncovered.is_empty() {
        let (i, gain) = sets
            .iter()
            .enumerate()
            .map(|(i, s)| (i, s.intersection_count(&uncovered)))
            .max_by_key(|&(i, gain)| (gain, std::cmp::Reverse(i)))
            .expect("at least one set");
        assert!(gain > 0, "sets do not cover every vertex");
        chosen.push(i);
        uncovered.subtract(&sets[i]);
    }
    chosen
}

/// Picks one vertex from each part so that as few chosen pairs as
/// possible are adjacent, by min-conflicts local search with random walk.
/// `neighbors` is an adjacency list; edges inside a part are ignored.
///
/// Returns the choice with fewest conflicts seen and that count. A count of
/// zero means the choice is an independent transversal.
pub fn independent_transversal(
    parts: &[Vec<usize>],
    neighbors: &[Vec<usize>],
    seed: u64,
    steps: u64,
) -> (Vec<usize>, usize) {
    const WALK: f64 = 0.1;
    let mut part_of = vec![usize::MAX; neighbors.len()];
    for (p, members) in parts.iter().enumerate() {
        for &v in members {
            part_of[v] = p;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut choice: Vec<usize> = parts.iter().map(|p| p[rng.gen_range(0..p.len())]).collect();
    let mut chosen = vec![false; neighbors.len()];
    for &c in &choice {
        chosen[c] = true;
    }
    let conflicts = |v: usize, chosen: &[bool]| {
        neighbors[v]
            .iter()
            .filter(|&&u| chosen[u] && part_of[u] != part_of[v])
            .count()
    };
    let total = |choice: &[usize], chosen: &[bool]| {
        choice.iter().map(|&v| conflicts(v, chosen)).sum::<usize>() / 2
    };
    let mut current = total(&choice, &chosen);
    let mut best = (choice.clone(), current);
    let mut bad: Vec<usize> = (0..parts.len())
        .filter(|&p| conflicts(choice[p], &chosen) > 0)
        .collect();
    for _ in 0..steps {
        if bad.is_empty() {
            break;
        }
        let at = rng.gen_range(0..bad.len());
        let p = bad[at];
        let before = conflicts(choice[p], &chosen);
        if before == 0 {
            bad.swap_remove(at);
            continue;
        }
        chosen[choice[p]] = false;
        let options = &parts[p];
        let pick = if rng.gen_bool(WALK) {
            options[rng.gen_range(0..options.len())]
        } else {
            let scores: Vec<usize> = options.iter().map(|&v| conflicts(v, &chosen)).collect();
            let low = *scores.iter().min().expect("non-empty part");
            let ties: Vec<usize> = (0..options.len()).filter(|&i| scores[i] == low).collect();
            options[ties[rng.gen_range(0..ties.len())]]
        };
        choice[p] = pick;
        chosen[pick] = true;
        let after = conflicts(pick, &chosen);
        current = current + after - before;
        for &u in &neighbors[pick] {
            if chosen[u] && part_of[u] != p {
                bad.push(part_of[u]);
            }
        }
        if after > 0 {
            bad.push(p);
        }
        if current < best.1 {
            best = (choice.clone(), current);
        }
    }
    best
}

struct CoverSearch<'a> {
    adj: &'a [Bits],
    sets: &'a [Bits],
    containing: &'a [Vec<usize>],
    best: Vec<usize>,
    nodes: u64,
    budget: u64,
    exhausted: bool,
    lower_bound: usize,
}

impl CoverSearch<'_> {
    fn expand(&mut self, chosen: &mut Vec<usize>, covered: &Bits) {
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exhausted = true;
            return;
        }
        let uncovered = Bits::full(self.adj.len()).and_not(covered);
        if uncovered.is_empty() {
            if chosen.len() < self.best.len() {
                self.best = chosen.clone();
            }
            return;
        }
        if chosen.len() + self.independent_bound(&uncovered) >= self.best.len() {
            return;
        }
        let u = uncovered
            .iter()
            .min_by_key(|&u| (self.containing[u].len(), u))
            .expect("non-empty");
        let mut options = self.containing[u].clone();
        options.sort_by_key(|&i| (std::cmp::Reverse(self.sets[i].intersection_count(&uncovered)), i));
        for i in options {
            let mut next = covered.clone();
            next.union_with(&self.sets[i]);
            chosen.push(i);
            self.expand(chosen, &next);
            chosen.pop();
            if self.exhausted || self.best.len() <= self.lower_bound {
                return;
            }
        }
    }

    /// Size of a greedy pairwise non-adjacent subset of `uncovered`; no set
    /// holds two of them.
    fn independent_bound(&self, uncovered: &Bits) -> usize {
        let mut remaining = uncovered.clone();
        let mut size = 0;
        while !remaining.is_empty() {
            let v = remaining
                .iter()
                .min_by_key(|&v| (self.adj[v].intersection_count(&remaining), v))
                .expect("non-empty");
            size += 1;
            remaining.remove(v);
            remaining.subtract(&self.adj[v]);
        }
        size
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Vec<Bits> {
        let mut adj = vec![Bits::empty(n); n];
        for &(a, b) in edges {
            adj[a].insert(b);
            adj[b].insert(a);
        }
        adj
    }

    #[test]
    fn clique_in_small_graphs() {
        // Two triangles sharing vertex 2, plus a pendant edge.
        let adj = graph(6, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4), (4, 5)]);
        let r = max_clique(&adj, 1000, &[], None);
        assert!(r.exact);
        assert_eq!(r.best.len(), 3);
        let k4 = graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(max_clique(&k4, 1000, &[], None).best, vec![0, 1, 2, 3]);
        assert_eq!(greedy_clique(&k4).len(), 4);
        let empty = graph(3, &[]);
        assert_eq!(max_clique(&empty, 1000, &[], None).best.len(), 1);
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let n = 40;
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .filter(|(a, b)| (a * 7 + b * 3) % 5 != 0)
            .collect();
        let adj = graph(n, &edges);
        assert!(!max_clique(&adj, 2, &[], None).exact);
    }

    #[test]
    fn maximal_cliques_of_a_path() {
        let adj = graph(4, &[(0, 1), (1, 2), (2, 3)]);
        let cliques = maximal_cliques(&adj, 100).unwrap();
        let lists: Vec<Vec<usize>> = cliques.iter().map(|c| c.iter().collect()).collect();
        assert_eq!(lists.len(), 3);
        assert!(lists.contains(&vec![1, 2]));
        assert!(maximal_cliques(&adj, 2).is_none());
    }

    #[test]
    fn set_cover_of_a_path() {
        let adj = graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]);
        let sets = maximal_cliques(&adj, 100).unwrap();
        let r = min_set_cover(&adj, &sets, None, 0, 1000).unwrap();
        assert!(r.exact);
        assert_eq!(r.best.len(), 3);
        let partial = vec![Bits::from_indices(5, [0, 1])];
        assert!(min_set_cover(&adj, &partial, None, 0, 1000).is_none());
    }

    #[test]
    fn transversal_on_a_cycle_of_parts() {
        // Parts {0,1}, {2,3}, {4,5}; 0-2, 2-4 and 4-0 conflict, so only a
        // choice using an odd vertex somewhere works.
        let nb = vec![vec![2, 4], vec![], vec![0, 4], vec![], vec![0, 2], vec![]];
        let parts = vec![vec![0, 1], vec![2, 3], vec![4, 5]];
        let (choice, conflicts) = independent_transversal(&parts, &nb, 7, 1000);
        assert_eq!(conflicts, 0);
        assert!(choice.iter().filter(|&&v| v % 2 == 0).count() <= 1);
        // Every option conflicts: the best is one conflict.
        let nb = vec![vec![1], vec![0]];
        let (_, conflicts) = independent_transversal(&[vec![0], vec![1]], &nb, 7, 100);
        assert_eq!(conflicts, 1);
    }
}
