//! Bipartite maximum matching and small-weight assignment.
//!
//! Row extension reduces to matching on the "columns × symbols" bipartite
//! graph: an edge `(j, x)` means symbol `x` may still be placed in column
//! `j`. Unweighted matchings pick any valid next row; the weighted variant
//! scores each placement by how many brand-new superposition pairs it
//! completes (one per cell against a fixed companion, up to two against the
//! transpose), so a maximum (or minimum) weight perfect matching extends a
//! grid with the largest (or smallest) possible jump in orthogonality.
//!
//! Both solvers take an RNG and break ties uniformly by shuffling the input
//! presentation. Every maximum matching / optimal assignment keeps a positive
//! probability of being returned, which is what lets the samplers built on
//! top reach their whole target space.

use rand::seq::SliceRandom;
use rand::Rng;
use thiserror::Error;

/// An unweighted bipartite graph with `n` left and `n` right vertices.
#[derive(Clone, Debug)]
pub struct BipartiteGraph {
    n: usize,
    adj: Vec<Vec<usize>>,
}

impl BipartiteGraph {
    pub fn new(n: usize) -> Self {
        BipartiteGraph { n, adj: vec![Vec::new(); n] }
    }

    /// Left vertices are columns, right vertices are `symbol - 1`.
    pub fn from_candidate_sets(sets: &[Vec<u16>]) -> Self {
        let mut g = BipartiteGraph::new(sets.len());
        for (col, set) in sets.iter().enumerate() {
            for &symbol in set {
                g.add_edge(col, symbol as usize - 1);
            }
        }
        g
    }

    pub fn add_edge(&mut self, left: usize, right: usize) {
        assert!(left < self.n && right < self.n);
        self.adj[left].push(right);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn neighbors(&self, left: usize) -> &[usize] {
        &self.adj[left]
    }
}

/// A weighted bipartite graph, stored densely; `None` means no edge.
#[derive(Clone, Debug)]
pub struct WeightedBipartiteGraph {
    n: usize,
    weights: Vec<Option<u8>>,
}

impl WeightedBipartiteGraph {
    pub fn new(n: usize) -> Self {
        WeightedBipartiteGraph { n, weights: vec![None; n * n] }
    }

    pub fn add_edge(&mut self, left: usize, right: usize, weight: u8) {
        assert!(left < self.n && right < self.n);
        self.weights[left * self.n + right] = Some(weight);
    }

    pub fn weight(&self, left: usize, right: usize) -> Option<u8> {
        self.weights[left * self.n + right]
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

/// A partial pairing of left to right vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    pairs: Vec<Option<usize>>,
}

impl Matching {
    /// Number of matched left vertices.
    pub fn len(&self) -> usize {
        self.pairs.iter().flatten().count()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.iter().all(Option::is_none)
    }

    pub fn is_perfect(&self) -> bool {
        self.pairs.iter().all(Option::is_some)
    }

    pub fn partner_of(&self, left: usize) -> Option<usize> {
        self.pairs[left]
    }

    /// Matched edges as `(left, right)`, ascending by left vertex.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pairs.iter().enumerate().filter_map(|(l, r)| r.map(|r| (l, r)))
    }

    /// Reads a perfect matching on a columns × symbols graph back as a grid
    /// row: entry `j` is the symbol matched to column `j`. `None` unless the
    /// matching is perfect.
    pub fn as_symbol_row(&self) -> Option<Vec<u16>> {
        self.pairs.iter().map(|p| p.map(|r| r as u16 + 1)).collect()
    }
}

/// A maximum-cardinality matching via augmenting paths.
///
/// Adjacency lists and the augmentation order are shuffled first, so ties
/// are broken uniformly at random: every maximum matching of the graph has
/// positive probability of being the one returned.
pub fn max_matching<R: Rng + ?Sized>(g: &BipartiteGraph, rng: &mut R) -> Matching {
    let n = g.n;
    let mut adj = g.adj.clone();
    for list in &mut adj {
        list.shuffle(rng);
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);

    let mut match_left = vec![usize::MAX; n];
    let mut match_right = vec![usize::MAX; n];
    let mut visited = vec![false; n];
    for &u in &order {
        if match_left[u] == usize::MAX {
            visited.iter_mut().for_each(|v| *v = false);
            augment(u, &adj, &mut match_left, &mut match_right, &mut visited);
        }
    }
    Matching {
        pairs: match_left
            .into_iter()
            .map(|r| if r == usize::MAX { None } else { Some(r) })
            .collect(),
    }
}

fn augment(
    u: usize,
    adj: &[Vec<usize>],
    match_left: &mut [usize],
    match_right: &mut [usize],
    visited: &mut [bool],
) -> bool {
    for &v in &adj[u] {
        if !visited[v] {
            visited[v] = true;
            if match_right[v] == usize::MAX
                || augment(match_right[v], adj, match_left, match_right, visited)
            {
                match_left[u] = v;
                match_right[v] = u;
                return true;
            }
        }
    }
    false
}

/// Direction of the assignment objective.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Objective {
    Maximize,
    Minimize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatchingError {
    #[error("the graph admits no perfect matching")]
    NoPerfectMatching,
}

/// Sentinel cost for non-edges: large enough to dominate any real total
/// (at most 255·n in magnitude), small enough that potentials never
/// overflow.
const FORBIDDEN: i64 = 1 << 30;

/// An optimal-weight **perfect** matching (Hungarian algorithm, O(n³)).
///
/// Ties between optimal assignments are broken uniformly-ish by randomly
/// permuting rows and columns before the solve; every optimal assignment
/// retains positive probability. Returns [`MatchingError::NoPerfectMatching`]
/// when the edge set cannot cover every vertex.
pub fn assignment<R: Rng + ?Sized>(
    g: &WeightedBipartiteGraph,
    objective: Objective,
    rng: &mut R,
) -> Result<Matching, MatchingError> {
    let n = g.n;
    if n == 0 {
        return Ok(Matching { pairs: Vec::new() });
    }

    let mut row_perm: Vec<usize> = (0..n).collect();
    let mut col_perm: Vec<usize> = (0..n).collect();
    row_perm.shuffle(rng);
    col_perm.shuffle(rng);

    // Minimization costs; maximization negates the weights.
    let mut cost = vec![FORBIDDEN; n * n];
    for k in 0..n {
        for l in 0..n {
            if let Some(w) = g.weight(row_perm[k], col_perm[l]) {
                cost[k * n + l] = match objective {
                    Objective::Minimize => w as i64,
                    Objective::Maximize => -(w as i64),
                };
            }
        }
    }

    let col_to_row = solve_min_assignment(&cost, n);

    let mut pairs = vec![None; n];
    for (l, &k) in col_to_row.iter().enumerate() {
        let (left, right) = (row_perm[k], col_perm[l]);
        if g.weight(left, right).is_none() {
            return Err(MatchingError::NoPerfectMatching);
        }
        pairs[left] = Some(right);
    }
    Ok(Matching { pairs })
}

/// Total weight of a matching in `g`. Panics if an edge is absent.
pub fn matching_weight(g: &WeightedBipartiteGraph, m: &Matching) -> u64 {
    m.iter()
        .map(|(l, r)| g.weight(l, r).expect("matching uses a non-edge") as u64)
        .sum()
}

/// Potential-based Hungarian method on a dense cost matrix. The matrix is
/// complete (non-edges carry [`FORBIDDEN`]), so a full assignment always
/// exists. Returns the assigned row for each column.
fn solve_min_assignment(cost: &[i64], n: usize) -> Vec<usize> {
    let inf = i64::MAX / 4;
    let mut u = vec![0i64; n + 1];
    let mut v = vec![0i64; n + 1];
    // p[j]: row currently assigned to column j; column n is a virtual column
    // that temporarily holds the row being inserted.
    let mut p = vec![usize::MAX; n + 1];

    for i in 0..n {
        p[n] = i;
        let mut j0 = n;
        let mut minv = vec![inf; n + 1];
        let mut way = vec![n; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = p[j0];
            let mut delta = inf;
            let mut j1 = n;
            for j in 0..n {
                if !used[j] {
                    let cur = cost[i0 * n + j] - u[i0] - v[j];
                    if cur < minv[j] {
                        minv[j] = cur;
                        way[j] = j0;
                    }
                    if minv[j] < delta {
                        delta = minv[j];
                        j1 = j;
                    }
                }
            }
            for j in 0..=n {
                if used[j] {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
            if p[j0] == usize::MAX {
                break;
            }
        }
        while j0 != n {
            let j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        }
    }
    p.truncate(n);
    p
}
