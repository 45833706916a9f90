//! Directed multigraph representation and structural analysis.
//!
//! A [`Digraph`] stores labeled vertices and integer arc multiplicities; its
//! adjacency matrix entry (i, j) is the number of arcs from vertex i to
//! vertex j, so self-loops and multiarcs are first-class. The module also
//! provides sink/source trimming, strongly connected components, the index
//! of imprimitivity, and cyclic r-partitions with block extraction.

use std::collections::BTreeMap;

use crate::error::{Error, Result};

/// Vertex-labeled sparse digraph with nonnegative integer arc multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    labels: Vec<String>,
    arcs: BTreeMap<(usize, usize), u64>,
}

/// Maps label tokens to dense 0-based indices in first-appearance order.
#[derive(Debug, Default)]
pub(crate) struct LabelInterner {
    pub(crate) labels: Vec<String>,
    index: std::collections::HashMap<String, usize>,
}

impl LabelInterner {
    pub(crate) fn intern(&mut self, token: &str) -> usize {
        if let Some(&i) = self.index.get(token) {
            return i;
        }
        let i = self.labels.len();
        self.labels.push(token.to_string());
        self.index.insert(token.to_string(), i);
        i
    }
}

impl Digraph {
    /// Builds a digraph from labels and an arc-multiplicity map.
    ///
    /// Multiplicities must be >= 1 and endpoints must index into `labels`.
    pub fn new(labels: Vec<String>, arcs: BTreeMap<(usize, usize), u64>) -> Result<Self> {
        let n = labels.len();
        let mut seen = std::collections::HashSet::with_capacity(n);
        for a in &labels {
            if !seen.insert(a.as_str()) {
                return Err(Error::InvalidParameter(format!(
                    "duplicate vertex label {a:?}"
                )));
            }
        }
        for (&(u, v), &m) in &arcs {
            if u >= n || v >= n {
                return Err(Error::InvalidParameter(format!(
                    "arc ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if m == 0 {
                return Err(Error::InvalidParameter(format!(
                    "arc ({u}, {v}) has zero multiplicity"
                )));
            }
        }
        Ok(Self { labels, arcs })
    }

    /// Builds a digraph from (src, dst, multiplicity) triples over string
    /// labels, interning labels in first-appearance order. Repeated triples
    /// accumulate multiplicity.
    pub fn from_labeled_arcs(arcs: &[(&str, &str, u64)]) -> Result<Self> {
        let mut interner = LabelInterner::default();
        let mut map: BTreeMap<(usize, usize), u64> = BTreeMap::new();
        for &(src, dst, m) in arcs {
            let u = interner.intern(src);
            let v = interner.intern(dst);
            if m == 0 {
                return Err(Error::InvalidParameter(format!(
                    "arc {src} -> {dst} has zero multiplicity"
                )));
            }
            *map.entry((u, v)).or_insert(0) += m;
        }
        Self::new(interner.labels, map)
    }

    /// Builds a digraph from a dense adjacency matrix; labels default to
    /// "1".."n" when `labels` is `None`.
    pub fn from_dense(labels: Option<Vec<String>>, rows: &[Vec<u64>]) -> Result<Self> {
        let n = rows.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidParameter(format!(
                    "dense row {} has {} entries, expected {n}",
                    i + 1,
                    row.len()
                )));
            }
        }
        let labels = labels.unwrap_or_else(|| (1..=n).map(|i| i.to_string()).collect());
        let mut arcs = BTreeMap::new();
        for (i, row) in rows.iter().enumerate() {
            for (j, &m) in row.iter().enumerate() {
                if m > 0 {
                    arcs.insert((i, j), m);
                }
            }
        }
        Self::new(labels, arcs)
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Arc multiplicity from i to j (0 when absent).
    pub fn multiplicity(&self, i: usize, j: usize) -> u64 {
        self.arcs.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Iterates all arcs as ((src, dst), multiplicity) in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.arcs.iter().map(|(&k, &m)| (k, m))
    }

    /// Arcs leaving vertex i as (dst, multiplicity).
    pub fn out_arcs(&self, i: usize) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.arcs
            .range((i, 0)..=(i, usize::MAX))
            .map(|(&(_, j), &m)| (j, m))
    }

    /// Total number of arcs counted with multiplicity.
    pub fn arc_count(&self) -> u64 {
        self.arcs.values().sum()
    }

    /// Number of distinct (src, dst) pairs carrying at least one arc.
    pub fn distinct_arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// Outdegree of vertex i counted with multiplicity (row sum of A).
    pub fn outdegree(&self, i: usize) -> u64 {
        self.out_arcs(i).map(|(_, m)| m).sum()
    }

    pub fn outdegrees(&self) -> Vec<u64> {
        (0..self.n()).map(|i| self.outdegree(i)).collect()
    }

    pub fn indegrees(&self) -> Vec<u64> {
        let mut deg = vec![0u64; self.n()];
        for (&(_, v), &m) in &self.arcs {
            deg[v] += m;
        }
        deg
    }

    /// Vertices with no outgoing arcs (zero rows of A).
    pub fn sinks(&self) -> Vec<usize> {
        (0..self.n()).filter(|&i| self.outdegree(i) == 0).collect()
    }

    /// Vertices with no incoming arcs (zero columns of A).
    pub fn sources(&self) -> Vec<usize> {
        let indeg = self.indegrees();
        (0..self.n()).filter(|&i| indeg[i] == 0).collect()
    }

    pub fn has_sinks(&self) -> bool {
        (0..self.n()).any(|i| self.outdegree(i) == 0)
    }

    /// Number of self-loops at vertex i (diagonal entry of A).
    pub fn self_loops(&self, i: usize) -> u64 {
        self.multiplicity(i, i)
    }

    /// Dense adjacency matrix copy.
    pub fn to_dense(&self) -> Vec<Vec<u64>> {
        let n = self.n();
        let mut rows = vec![vec![0u64; n]; n];
        for (&(u, v), &m) in &self.arcs {
            rows[u][v] = m;
        }
        rows
    }

    /// Distinct out-neighbor lists, ascending per vertex.
    pub fn out_neighbors(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n()];
        for &(u, v) in self.arcs.keys() {
            adj[u].push(v);
        }
        adj
    }

    /// Reversed digraph: arc (i, j) becomes arc (j, i), labels unchanged.
    pub fn transpose(&self) -> Digraph {
        let arcs = self
            .arcs
            .iter()
            .map(|(&(u, v), &m)| ((v, u), m))
            .collect::<BTreeMap<_, _>>();
        Digraph {
            labels: self.labels.clone(),
            arcs,
        }
    }

    /// Digraph of the L-th matrix power: entry (i, j) counts length-L walks.
    ///
    /// Fails if an entry overflows u64; intended for small graphs and powers.
    pub fn power(&self, l: usize) -> Result<Digraph> {
        let n = self.n();
        let mut acc: Vec<Vec<u128>> = (0..n)
            .map(|i| (0..n).map(|j| u128::from(i == j)).collect())
            .collect();
        let dense = self.to_dense();
        for _ in 0..l {
            let mut next = vec![vec![0u128; n]; n];
            for i in 0..n {
                for k in 0..n {
                    if acc[i][k] == 0 {
                        continue;
                    }
                    let a = acc[i][k];
                    for j in 0..n {
                        let m = dense[k][j] as u128;
                        if m > 0 {
                            next[i][j] += a * m;
                        }
                    }
                }
            }
            acc = next;
        }
        let mut arcs = BTreeMap::new();
        for (i, row) in acc.iter().enumerate() {
            for (j, &m) in row.iter().enumerate() {
                if m > 0 {
                    let m = u64::try_from(m).map_err(|_| {
                        Error::InvalidParameter(format!(
                            "entry ({i}, {j}) of A^{l} exceeds u64"
                        ))
                    })?;
                    arcs.insert((i, j), m);
                }
            }
        }
        Ok(Digraph {
            labels: self.labels.clone(),
            arcs,
        })
    }

    /// Subgraph induced by the given vertices (ascending order expected).
    pub fn induced(&self, keep: &[usize]) -> Digraph {
        let mut remap = vec![usize::MAX; self.n()];
        for (new, &old) in keep.iter().enumerate() {
            remap[old] = new;
        }
        let labels = keep.iter().map(|&v| self.labels[v].clone()).collect();
        let mut arcs = BTreeMap::new();
        for (&(u, v), &m) in &self.arcs {
            if remap[u] != usize::MAX && remap[v] != usize::MAX {
                arcs.insert((remap[u], remap[v]), m);
            }
        }
        Digraph { labels, arcs }
    }
}

/// Record of which vertices iterated sink/source trimming removed.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct TrimReport {
    /// (round, vertex label) for each removed sink, in removal order.
    pub removed_sinks: Vec<(usize, String)>,
    /// (round, vertex label) for each removed source.
    pub removed_sources: Vec<(usize, String)>,
    /// Number of deletion passes performed.
    pub rounds: usize,
    /// True when trimming deleted every vertex (spectral radius is 0).
    pub became_empty: bool,
}

impl Digraph {
    /// Deletes sinks (and sources when `drop_sources` is set) repeatedly
    /// until none remain. Removing zero rows with their columns leaves the
    /// nonzero spectrum unchanged, so the spectral radius is preserved
    /// unless the graph empties, in which case it is 0.
    pub fn trim(&self, drop_sources: bool) -> (Digraph, TrimReport) {
        let n = self.n();
        let mut alive = vec![true; n];
        let mut removed_sinks = Vec::new();
        let mut removed_sources = Vec::new();
        let mut rounds = 0;

        loop {
            let mut outdeg = vec![0u64; n];
            let mut indeg = vec![0u64; n];
            for (&(u, v), &m) in &self.arcs {
                if alive[u] && alive[v] {
                    outdeg[u] += m;
                    indeg[v] += m;
                }
            }
            let sinks: Vec<usize> = (0..n).filter(|&i| alive[i] && outdeg[i] == 0).collect();
            let sources: Vec<usize> = if drop_sources {
                (0..n)
                    .filter(|&i| alive[i] && indeg[i] == 0 && outdeg[i] != 0)
                    .collect()
            } else {
                Vec::new()
            };
            if sinks.is_empty() && sources.is_empty() {
                break;
            }
            rounds += 1;
            for &v in &sinks {
                alive[v] = false;
                removed_sinks.push((rounds, self.labels[v].clone()));
            }
            for &v in &sources {
                alive[v] = false;
                removed_sources.push((rounds, self.labels[v].clone()));
            }
        }

        let keep: Vec<usize> = (0..n).filter(|&i| alive[i]).collect();
        let trimmed = self.induced(&keep);
        let report = TrimReport {
            removed_sinks,
            removed_sources,
            rounds,
            became_empty: trimmed.is_empty() && n > 0,
        };
        (trimmed, report)
    }
}

/// Strongly connected components of a digraph.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct SccDecomposition {
    /// Component id per vertex.
    pub component_of: Vec<usize>,
    /// Vertex sets, each ascending; components ordered by smallest member.
    pub components: Vec<Vec<usize>>,
    /// True when a single component covers every vertex.
    pub is_strongly_connected: bool,
}

impl Digraph {
    /// Tarjan's algorithm, iterative to keep stack depth bounded.
    pub fn scc(&self) -> Result<SccDecomposition> {
        let n = self.n();
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let adj = self.out_neighbors();

        let mut index = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut on_stack = vec![false; n];
        let mut stack: Vec<usize> = Vec::new();
        let mut next_index = 0usize;
        let mut raw_components: Vec<Vec<usize>> = Vec::new();

        // Explicit DFS frames: (vertex, next out-neighbor offset).
        let mut frames: Vec<(usize, usize)> = Vec::new();
        for root in 0..n {
            if index[root] != usize::MAX {
                continue;
            }
            frames.push((root, 0));
            index[root] = next_index;
            low[root] = next_index;
            next_index += 1;
            stack.push(root);
            on_stack[root] = true;

            while let Some(&mut (v, ref mut offset)) = frames.last_mut() {
                if *offset < adj[v].len() {
                    let w = adj[v][*offset];
                    *offset += 1;
                    if index[w] == usize::MAX {
                        index[w] = next_index;
                        low[w] = next_index;
                        next_index += 1;
                        stack.push(w);
                        on_stack[w] = true;
                        frames.push((w, 0));
                    } else if on_stack[w] {
                        low[v] = low[v].min(index[w]);
                    }
                } else {
                    frames.pop();
                    if let Some(&(parent, _)) = frames.last() {
                        low[parent] = low[parent].min(low[v]);
                    }
                    if low[v] == index[v] {
                        let mut comp = Vec::new();
                        loop {
                            let w = stack.pop().expect("tarjan stack underflow");
                            on_stack[w] = false;
                            comp.push(w);
                            if w == v {
                                break;
                            }
                        }
                        comp.sort_unstable();
                        raw_components.push(comp);
                    }
                }
            }
        }

        raw_components.sort_by_key(|c| c[0]);
        let mut component_of = vec![0usize; n];
        for (cid, comp) in raw_components.iter().enumerate() {
            for &v in comp {
                component_of[v] = cid;
            }
        }
        let is_strongly_connected = raw_components.len() == 1;
        Ok(SccDecomposition {
            component_of,
            components: raw_components,
            is_strongly_connected,
        })
    }
}

/// BFS layering and index of imprimitivity of a strongly connected digraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicStructure {
    /// Index of imprimitivity: gcd of all closed-walk lengths.
    pub h: u64,
    /// BFS level per vertex from vertex 0, following arcs forward.
    pub levels: Vec<u64>,
}

/// A cyclic r-partition: blocks such that every arc advances one block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicPartition {
    pub r: u64,
    /// Block index in 0..r per vertex.
    pub block_of: Vec<usize>,
    /// Vertex sets per block, each ascending.
    pub blocks: Vec<Vec<usize>>,
}

impl Digraph {
    /// BFS levels from vertex 0 plus h = gcd over arcs of level(u)+1-level(v).
    ///
    /// Requires a strongly connected graph with at least one arc; every
    /// closed-walk length is then divisible by the returned h.
    pub fn cyclic_structure(&self) -> Result<CyclicStructure> {
        let scc = self.scc()?;
        if !scc.is_strongly_connected {
            return Err(Error::NotStronglyConnected);
        }
        if self.arcs.is_empty() {
            return Err(Error::InvalidParameter(
                "index of imprimitivity requires at least one arc".to_string(),
            ));
        }
        let n = self.n();
        let adj = self.out_neighbors();
        let mut levels = vec![u64::MAX; n];
        let mut queue = std::collections::VecDeque::new();
        levels[0] = 0;
        queue.push_back(0);
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if levels[v] == u64::MAX {
                    levels[v] = levels[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        debug_assert!(levels.iter().all(|&l| l != u64::MAX));

        let mut h = 0u64;
        for &(u, v) in self.arcs.keys() {
            // BFS guarantees level(v) <= level(u) + 1, so this is >= 0.
            let delta = levels[u] + 1 - levels[v];
            h = gcd(h, delta);
        }
        debug_assert!(h >= 1);
        Ok(CyclicStructure { h, levels })
    }

    /// Index of imprimitivity h of a strongly connected digraph.
    pub fn index_of_imprimitivity(&self) -> Result<u64> {
        Ok(self.cyclic_structure()?.h)
    }

    /// Cyclic r-partition for a divisor r of h. Block 0 holds the BFS
    /// root's level class; every arc is verified to advance one block.
    pub fn cyclic_partition(&self, r: u64) -> Result<CyclicPartition> {
        if r == 0 {
            return Err(Error::InvalidParameter("r must be positive".to_string()));
        }
        let structure = self.cyclic_structure()?;
        if structure.h % r != 0 {
            return Err(Error::NotADivisor { r, h: structure.h });
        }
        let n = self.n();
        let block_of: Vec<usize> = structure
            .levels
            .iter()
            .map(|&l| (l % r) as usize)
            .collect();
        if r > 1 {
            for &(u, v) in self.arcs.keys() {
                if block_of[v] != (block_of[u] + 1) % r as usize {
                    return Err(Error::PartitionInvalid {
                        from: self.labels[u].clone(),
                        to: self.labels[v].clone(),
                    });
                }
            }
        }
        let mut blocks = vec![Vec::new(); r as usize];
        for v in 0..n {
            blocks[block_of[v]].push(v);
        }
        Ok(CyclicPartition {
            r,
            block_of,
            blocks,
        })
    }
}

/// One diagonal block of the symmetric permutation of A^L.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicBlock {
    /// Original vertex indices forming the block, ascending.
    pub vertices: Vec<usize>,
    /// The block submatrix of A^L over those vertices.
    pub matrix: Vec<Vec<u64>>,
}

impl CyclicBlock {
    /// Views the block as a standalone digraph (labels from the parent).
    pub fn to_digraph(&self, parent: &Digraph) -> Result<Digraph> {
        let labels = self
            .vertices
            .iter()
            .map(|&v| parent.label(v).to_string())
            .collect();
        Digraph::from_dense(Some(labels), &self.matrix)
    }
}

impl Digraph {
    /// Extracts the r diagonal blocks of the symmetric permutation of A^L
    /// and checks the block-diagonal structure, where r must equal
    /// gcd(h, L). Each block is verified irreducible; every off-diagonal
    /// block entry is verified zero.
    pub fn verify_cyclic_blocks(&self, r: u64, l: usize) -> Result<Vec<CyclicBlock>> {
        if l == 0 {
            return Err(Error::InvalidParameter("L must be positive".to_string()));
        }
        let h = self.index_of_imprimitivity()?;
        let expected = gcd(h, l as u64);
        if r != expected {
            return Err(Error::InvalidParameter(format!(
                "r = {r} but gcd(h, L) = gcd({h}, {l}) = {expected}"
            )));
        }
        let partition = self.cyclic_partition(r)?;
        let power = self.power(l)?;
        let dense = power.to_dense();

        // Off-diagonal blocks of the permuted A^L must vanish.
        for &(u, v) in power.arcs.keys() {
            if partition.block_of[u] != partition.block_of[v] {
                return Err(Error::PartitionInvalid {
                    from: self.labels[u].clone(),
                    to: self.labels[v].clone(),
                });
            }
        }

        let mut blocks = Vec::with_capacity(r as usize);
        for members in &partition.blocks {
            let matrix: Vec<Vec<u64>> = members
                .iter()
                .map(|&u| members.iter().map(|&v| dense[u][v]).collect())
                .collect();
            let block = CyclicBlock {
                vertices: members.clone(),
                matrix,
            };
            let sub = block.to_digraph(self)?;
            if sub.n() > 1 && !sub.scc()?.is_strongly_connected {
                return Err(Error::PartitionInvalid {
                    from: self.labels[members[0]].clone(),
                    to: self.labels[members[0]].clone(),
                });
            }
            blocks.push(block);
        }
        Ok(blocks)
    }
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// 5-vertex benchmark digraph, indices matching the numeric labels.
    pub(crate) fn g1() -> Digraph {
        Digraph::from_dense(
            None,
            &[
                vec![0, 0, 0, 1, 1],
                vec![1, 0, 1, 1, 0],
                vec![1, 1, 0, 0, 0],
                vec![0, 0, 1, 0, 1],
                vec![0, 1, 1, 0, 0],
            ],
        )
        .unwrap()
    }

    fn cycle(n: usize) -> Digraph {
        let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        let mut arcs = BTreeMap::new();
        for i in 0..n {
            arcs.insert((i, (i + 1) % n), 1);
        }
        Digraph::new(labels, arcs).unwrap()
    }

    #[test]
    fn g1_adjacency_matches() {
        let g = g1();
        assert_eq!(g.n(), 5);
        assert_eq!(g.arc_count(), 11);
        let expected = vec![
            vec![0, 0, 0, 1, 1],
            vec![1, 0, 1, 1, 0],
            vec![1, 1, 0, 0, 0],
            vec![0, 0, 1, 0, 1],
            vec![0, 1, 1, 0, 0],
        ];
        assert_eq!(g.to_dense(), expected);
        assert_eq!(g.outdegrees(), vec![2, 3, 2, 2, 2]);
    }

    #[test]
    fn labeled_arcs_intern_in_first_appearance_order() {
        let g = Digraph::from_labeled_arcs(&[("1", "4", 1), ("1", "5", 1), ("2", "1", 1)])
            .unwrap();
        assert_eq!(g.labels(), &["1", "4", "5", "2"]);
        assert_eq!(g.multiplicity(3, 0), 1); // arc 2 -> 1
    }

    #[test]
    fn dense_roundtrip_with_multiarcs() {
        let g = Digraph::from_dense(None, &[vec![0, 2], vec![1, 0]]).unwrap();
        assert_eq!(g.multiplicity(0, 1), 2);
        assert_eq!(g.multiplicity(1, 0), 1);
        assert_eq!(g.labels(), &["1".to_string(), "2".to_string()]);
    }

    #[test]
    fn transpose_swaps_degrees() {
        let g = g1();
        let t = g.transpose();
        // Column sums of A(G_1); they total the 11 arcs.
        assert_eq!(t.outdegrees(), vec![2, 2, 3, 2, 2]);
        assert_eq!(t.outdegrees(), g.indegrees());
        assert_eq!(t.transpose(), g);
    }

    #[test]
    fn transpose_of_symmetric_graph_is_identity() {
        let g = Digraph::from_labeled_arcs(&[("a", "b", 1), ("b", "a", 1)]).unwrap();
        assert_eq!(g.transpose(), g);
    }

    #[test]
    fn trim_keeps_sink_free_graph() {
        let g = g1();
        let (trimmed, report) = g.trim(false);
        assert_eq!(trimmed, g);
        assert_eq!(report.rounds, 0);
        assert!(!report.became_empty);
    }

    #[test]
    fn trim_erases_path_graph() {
        let g = Digraph::from_labeled_arcs(&[("a", "b", 1), ("b", "c", 1)]).unwrap();
        let (trimmed, report) = g.trim(false);
        assert!(trimmed.is_empty());
        assert!(report.became_empty);
        assert_eq!(
            report.removed_sinks,
            vec![
                (1, "c".to_string()),
                (2, "b".to_string()),
                (3, "a".to_string())
            ]
        );
        assert_eq!(report.rounds, 3);
    }

    #[test]
    fn trim_removes_pendant_sink_only() {
        let g =
            Digraph::from_labeled_arcs(&[("a", "b", 1), ("b", "a", 1), ("b", "c", 1)]).unwrap();
        let (trimmed, report) = g.trim(false);
        assert_eq!(trimmed.n(), 2);
        assert_eq!(report.removed_sinks, vec![(1, "c".to_string())]);
        assert_eq!(report.rounds, 1);
        assert!(!report.became_empty);
    }

    #[test]
    fn trim_can_drop_sources() {
        let g =
            Digraph::from_labeled_arcs(&[("s", "a", 1), ("a", "b", 1), ("b", "a", 1)]).unwrap();
        let (kept, report) = g.trim(false);
        assert_eq!(kept.n(), 3);
        let (dropped, report2) = g.trim(true);
        assert_eq!(dropped.n(), 2);
        assert_eq!(report2.removed_sources, vec![(1, "s".to_string())]);
        assert!(report.removed_sources.is_empty());
    }

    #[test]
    fn scc_g1_is_single_component() {
        let scc = g1().scc().unwrap();
        assert!(scc.is_strongly_connected);
        assert_eq!(scc.components, vec![vec![0, 1, 2, 3, 4]]);
    }

    // Brute-force transitive closure oracle for component checks.
    fn reachability(g: &Digraph) -> Vec<Vec<bool>> {
        let n = g.n();
        let mut reach = vec![vec![false; n]; n];
        for i in 0..n {
            reach[i][i] = true;
        }
        for ((u, v), _) in g.arcs() {
            reach[u][v] = true;
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    reach[i][j] |= reach[i][k] && reach[k][j];
                }
            }
        }
        reach
    }

    #[test]
    fn scc_agrees_with_transitive_closure_on_g1() {
        let g = g1();
        let scc = g.scc().unwrap();
        let reach = reachability(&g);
        for i in 0..g.n() {
            for j in 0..g.n() {
                let same = scc.component_of[i] == scc.component_of[j];
                assert_eq!(same, reach[i][j] && reach[j][i]);
            }
        }
    }

    #[test]
    fn scc_two_disjoint_cycles() {
        let g = Digraph::from_labeled_arcs(&[
            ("a", "b", 1),
            ("b", "a", 1),
            ("c", "d", 1),
            ("d", "c", 1),
        ])
        .unwrap();
        let scc = g.scc().unwrap();
        assert_eq!(scc.components.len(), 2);
        assert!(!scc.is_strongly_connected);
    }

    #[test]
    fn scc_single_arc_gives_singletons() {
        let g = Digraph::from_labeled_arcs(&[("a", "b", 1)]).unwrap();
        let scc = g.scc().unwrap();
        assert_eq!(scc.components, vec![vec![0], vec![1]]);
    }

    #[test]
    fn scc_rejects_empty_graph() {
        let g = Digraph::new(Vec::new(), BTreeMap::new()).unwrap();
        assert!(matches!(g.scc(), Err(Error::EmptyGraph)));
    }

    #[test]
    fn imprimitivity_of_g1_is_one() {
        assert_eq!(g1().index_of_imprimitivity().unwrap(), 1);
    }

    #[test]
    fn imprimitivity_of_cycle_is_length() {
        assert_eq!(cycle(4).index_of_imprimitivity().unwrap(), 4);
        assert_eq!(cycle(6).index_of_imprimitivity().unwrap(), 6);
    }

    #[test]
    fn self_loop_forces_h_one() {
        let g = Digraph::from_labeled_arcs(&[("a", "a", 1), ("a", "b", 1), ("b", "a", 1)])
            .unwrap();
        assert_eq!(g.index_of_imprimitivity().unwrap(), 1);
    }

    #[test]
    fn imprimitivity_requires_strong_connectivity() {
        let g = Digraph::from_labeled_arcs(&[("a", "b", 1)]).unwrap();
        assert!(matches!(
            g.index_of_imprimitivity(),
            Err(Error::NotStronglyConnected)
        ));
    }

    // Enumerate simple cycle lengths by DFS; closed walks decompose into these.
    fn simple_cycle_lengths(g: &Digraph) -> Vec<usize> {
        let n = g.n();
        let adj = g.out_neighbors();
        let mut lengths = Vec::new();
        fn dfs(
            v: usize,
            start: usize,
            depth: usize,
            adj: &[Vec<usize>],
            on_path: &mut Vec<bool>,
            lengths: &mut Vec<usize>,
        ) {
            for &w in &adj[v] {
                if w == start {
                    lengths.push(depth + 1);
                } else if w > start && !on_path[w] {
                    on_path[w] = true;
                    dfs(w, start, depth + 1, adj, on_path, lengths);
                    on_path[w] = false;
                }
            }
        }
        for start in 0..n {
            let mut on_path = vec![false; n];
            on_path[start] = true;
            dfs(start, start, 0, &adj, &mut on_path, &mut lengths);
        }
        lengths
    }

    #[test]
    fn every_cycle_length_is_divisible_by_h() {
        for g in [g1(), cycle(4), cycle(6)] {
            let h = g.index_of_imprimitivity().unwrap() as usize;
            for len in simple_cycle_lengths(&g) {
                assert_eq!(len % h, 0, "cycle of length {len} vs h = {h}");
            }
        }
    }

    #[test]
    fn partition_of_four_cycle_into_two_blocks() {
        let g = cycle(4);
        let p = g.cyclic_partition(2).unwrap();
        assert_eq!(p.blocks, vec![vec![0, 2], vec![1, 3]]);
    }

    #[test]
    fn partition_of_bipartite_example() {
        // 4-vertex digraph: 1->3, 1->4, 2->3, 2->4, 3->1, 4->2.
        let g = Digraph::from_dense(
            None,
            &[
                vec![0, 0, 1, 1],
                vec![0, 0, 1, 1],
                vec![1, 0, 0, 0],
                vec![0, 1, 0, 0],
            ],
        )
        .unwrap();
        assert_eq!(g.index_of_imprimitivity().unwrap(), 2);
        let p = g.cyclic_partition(2).unwrap();
        assert_eq!(p.blocks, vec![vec![0, 1], vec![2, 3]]);
    }

    #[test]
    fn partition_rejects_non_divisor() {
        let g = g1();
        assert!(matches!(
            g.cyclic_partition(2),
            Err(Error::NotADivisor { r: 2, h: 1 })
        ));
    }

    #[test]
    fn partition_succeeds_exactly_for_divisors() {
        let g = cycle(6);
        let h = g.index_of_imprimitivity().unwrap();
        assert_eq!(h, 6);
        for r in 1..=8u64 {
            let result = g.cyclic_partition(r);
            if h % r == 0 {
                let p = result.unwrap();
                assert_eq!(p.blocks.len(), r as usize);
                // No arc stays inside a block or skips a block.
                if r > 1 {
                    for ((u, v), _) in g.arcs() {
                        assert_eq!(
                            p.block_of[v],
                            (p.block_of[u] + 1) % r as usize
                        );
                    }
                }
            } else {
                assert!(matches!(result, Err(Error::NotADivisor { .. })));
            }
        }
    }

    #[test]
    fn blocks_of_two_vertex_multiarc() {
        // Arcs (1,2):2, (2,1):1 give A^2 = diag(2, 2).
        let g = Digraph::from_labeled_arcs(&[("1", "2", 2), ("2", "1", 1)]).unwrap();
        let blocks = g.verify_cyclic_blocks(2, 2).unwrap();
        assert_eq!(blocks.len(), 2);
        assert_eq!(blocks[0].matrix, vec![vec![2]]);
        assert_eq!(blocks[1].matrix, vec![vec![2]]);
    }

    #[test]
    fn blocks_of_four_cycle_squared() {
        let blocks = cycle(4).verify_cyclic_blocks(2, 2).unwrap();
        assert_eq!(blocks.len(), 2);
        for b in &blocks {
            assert_eq!(b.matrix.len(), 2);
            let total: u64 = b.matrix.iter().flatten().sum();
            assert_eq!(total, 2); // a 2-cycle pattern
        }
    }

    #[test]
    fn blocks_of_g1_collapse_to_full_power() {
        // h = 1 so gcd(1, L) = 1: a single block equal to A^L itself.
        let g = g1();
        for l in 1..=3 {
            let blocks = g.verify_cyclic_blocks(1, l).unwrap();
            assert_eq!(blocks.len(), 1);
            assert_eq!(blocks[0].matrix, g.power(l).unwrap().to_dense());
        }
    }

    #[test]
    fn blocks_require_r_equal_to_gcd() {
        let g = g1();
        assert!(matches!(
            g.verify_cyclic_blocks(2, 2),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn types_are_shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<Digraph>();
        assert_send_sync::<SccDecomposition>();
        assert_send_sync::<CyclicPartition>();
        assert_send_sync::<crate::walks::WalkTable>();
        assert_send_sync::<crate::walks::ReachPattern>();
        assert_send_sync::<crate::bounds::BoundResult>();
    }

    #[test]
    fn power_counts_walks() {
        let g = g1();
        let p2 = g.power(2).unwrap();
        // Row 1 of A^2 is (0, 1, 2, 0, 1).
        assert_eq!(p2.multiplicity(0, 1), 1);
        assert_eq!(p2.multiplicity(0, 2), 2);
        assert_eq!(p2.multiplicity(0, 4), 1);
        assert_eq!(p2.multiplicity(0, 0), 0);
    }

    #[test]
    fn rejects_zero_multiplicity() {
        let mut arcs = BTreeMap::new();
        arcs.insert((0, 1), 0u64);
        assert!(Digraph::new(vec!["a".into(), "b".into()], arcs).is_err());
    }

    #[test]
    fn rejects_duplicate_labels() {
        assert!(Digraph::new(vec!["a".into(), "a".into()], BTreeMap::new()).is_err());
    }
}
