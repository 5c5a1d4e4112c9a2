//! Augmenting-path matching and a small unit-capacity max-flow.

/// Maximum bipartite matching by Kuhn's augmenting paths.
pub struct BipartiteMatcher<'a> {
    adj: &'a [Vec<usize>],
    right_match: Vec<Option<usize>>,
    visited: Vec<bool>,
}

impl<'a> BipartiteMatcher<'a> {
    /// `adj[l]` lists the right vertices compatible with left vertex `l`.
    pub fn new(adj: &'a [Vec<usize>], num_right: usize) -> Self {
        BipartiteMatcher { adj, right_match: vec![None; num_right], visited: vec![false; num_right] }
    }

    fn augment(&mut self, left: usize) -> bool {
        for &right in &self.adj[left] {
            if self.visited[right] {
                continue;
            }
            self.visited[right] = true;
            let free = match self.right_match[right] {
                None => true,
                Some(other) => self.augment(other),
            };
            if free {
                self.right_match[right] = Some(left);
                return true;
            }
        }
        false
    }

    /// Returns `left -> right` for matched left vertices.
    pub fn solve(mut self) -> Vec<Option<usize>> {
        for left in 0..self.adj.len() {
            self.visited.iter_mut().for_each(|v| *v = false);
            self.augment(left);
        }
        let mut left_match = vec![None; self.adj.len()];
        for (right, m) in self.right_match.iter().enumerate() {
            if let Some(l) = m {
                left_match[*l] = Some(right);
            }
        }
        left_match
    }
}

/// Integral max-flow with DFS augmenting paths. Sized for the few dozen
/// nodes that arise when routing pattern edges through hyperedges.
pub struct FlowNetwork {
    // (to, residual capacity, index of reverse arc in adj[to])
    adj: Vec<Vec<(usize, i32, usize)>>,
    // (from, position in adj[from], original capacity)
    arcs: Vec<(usize, usize, i32)>,
}

impl FlowNetwork {
    pub fn new(nodes: usize) -> Self {
        FlowNetwork { adj: vec![Vec::new(); nodes], arcs: Vec::new() }
    }

    /// Adds `from -> to` and returns its arc id.
    pub fn add_arc(&mut self, from: usize, to: usize, cap: i32) -> usize {
        let rev_from = self.adj[to].len();
        let rev_to = self.adj[from].len();
        self.adj[from].push((to, cap, rev_from));
        self.adj[to].push((from, 0, rev_to));
        self.arcs.push((from, rev_to, cap));
        self.arcs.len() - 1
    }

    fn dfs(&mut self, v: usize, sink: usize, seen: &mut [bool]) -> bool {
        if v == sink {
            return true;
        }
        seen[v] = true;
        for i in 0..self.adj[v].len() {
            let (to, cap, rev) = self.adj[v][i];
            if cap > 0 && !seen[to] && self.dfs(to, sink, seen) {
                self.adj[v][i].1 -= 1;
                self.adj[to][rev].1 += 1;
                return true;
            }
        }
        false
    }

    /// Pushes unit augmenting paths until none remain or `limit` is hit.
    pub fn max_flow(&mut self, source: usize, sink: usize, limit: i32) -> i32 {
        let mut flow = 0;
        let mut seen = vec![false; self.adj.len()];
        while flow < limit {
            seen.iter_mut().for_each(|s| *s = false);
            if !self.dfs(source, sink, &mut seen) {
                break;
            }
            flow += 1;
        }
        flow
    }

    /// Flow currently carried by arc `id`.
    pub fn flow(&self, id: usize) -> i32 {
        let (from, pos, cap) = self.arcs[id];
        cap - self.adj[from][pos].1
    }
}
