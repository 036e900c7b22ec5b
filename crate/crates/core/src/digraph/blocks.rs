use super::{Digraph, UndirectedGraph, Vertex};

/// Blocks of a digraph, computed on its underlying graph.
///
/// A separating vertex of `D` is defined through weak connectivity, so the
/// blocks of `D` coincide with the biconnected components of `G(D)`
/// (bridges give two-vertex blocks, isolated vertices singleton blocks).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Each block sorted ascending; blocks sorted lexicographically.
    pub blocks: Vec<Vec<Vertex>>,
    /// Cut vertices, ascending.
    pub cut_vertices: Vec<Vertex>,
}

pub fn block_decomposition(d: &Digraph) -> BlockDecomposition {
    undirected_blocks(&d.underlying())
}

pub(crate) fn undirected_blocks(g: &UndirectedGraph) -> BlockDecomposition {
    let n = g.order();
    let mut st = Tarjan {
        g,
        disc: vec![usize::MAX; n],
        low: vec![0; n],
        time: 0,
        edge_stack: Vec::new(),
        blocks: Vec::new(),
        is_cut: vec![false; n],
    };
    for root in 0..n {
        if st.disc[root] != usize::MAX {
            continue;
        }
        if g.degree(root) == 0 {
            st.disc[root] = st.time;
            st.time += 1;
            st.blocks.push(vec![root]);
            continue;
        }
        let children = st.dfs(root, usize::MAX);
        if children > 1 {
            st.is_cut[root] = true;
        }
    }
    let mut blocks = st.blocks;
    for b in &mut blocks {
        b.sort_unstable();
        b.dedup();
    }
    blocks.sort();
    BlockDecomposition {
        blocks,
        cut_vertices: (0..n).filter(|&v| st.is_cut[v]).collect(),
    }
}

struct Tarjan<'a> {
    g: &'a UndirectedGraph,
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    edge_stack: Vec<(Vertex, Vertex)>,
    blocks: Vec<Vec<Vertex>>,
    is_cut: Vec<bool>,
}

impl Tarjan<'_> {
    /// Returns the number of DFS children of `u`.
    fn dfs(&mut self, u: Vertex, parent: Vertex) -> usize {
        self.disc[u] = self.time;
        self.low[u] = self.time;
        self.time += 1;
        let mut children = 0;
        let nbrs: Vec<_> = self.g.neighbors(u).collect();
        for v in nbrs {
            if self.disc[v] == usize::MAX {
                children += 1;
                self.edge_stack.push((u, v));
                self.dfs(v, u);
                self.low[u] = self.low[u].min(self.low[v]);
                if self.low[v] >= self.disc[u] {
                    if parent != usize::MAX {
                        self.is_cut[u] = true;
                    }
                    let mut block = Vec::new();
                    while let Some((a, b)) = self.edge_stack.pop() {
                        block.push(a);
                        block.push(b);
                        if (a, b) == (u, v) {
                            break;
                        }
                    }
                    self.blocks.push(block);
                }
            } else if v != parent && self.disc[v] < self.disc[u] {
                self.edge_stack.push((u, v));
                self.low[u] = self.low[u].min(self.disc[v]);
            }
        }
        children
    }
}
