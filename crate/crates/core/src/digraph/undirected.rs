use super::bits;
use super::{Digraph, Vertex};
use crate::{Error, Result};

/// Simple undirected graph, used for `G(D)` and `S(D)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UndirectedGraph {
    n: usize,
    w: usize,
    adj: Vec<u64>,
}

impl UndirectedGraph {
    pub fn empty(n: usize) -> Self {
        let w = bits::words_for(n);
        UndirectedGraph {
            n,
            w,
            adj: vec![0; n * w],
        }
    }

    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = UndirectedGraph::empty(n);
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange {
                        vertex: x,
                        order: n,
                    });
                }
            }
            if u == v {
                return Err(Error::LoopArc(u));
            }
            g.insert(u, v);
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = UndirectedGraph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.insert(u, v);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::BadParameter(format!(
                "undirected cycle needs n ≥ 3, got {n}"
            )));
        }
        UndirectedGraph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub(crate) fn insert(&mut self, u: Vertex, v: Vertex) {
        let w = self.w;
        bits::set(&mut self.adj[u * w..(u + 1) * w], v);
        bits::set(&mut self.adj[v * w..(v + 1) * w], u);
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && v < self.n && bits::get(self.row(u), v)
    }

    pub(crate) fn row(&self, v: Vertex) -> &[u64] {
        &self.adj[v * self.w..(v + 1) * self.w]
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        bits::Ones::new(self.row(v))
    }

    pub fn degree(&self, v: Vertex) -> usize {
        bits::count(self.row(v))
    }

    /// Edges `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors(u)
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    pub fn complement(&self) -> UndirectedGraph {
        let mut g = UndirectedGraph::empty(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.insert(u, v);
                }
            }
        }
        g
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for v in self.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.n
    }

    /// Number of connected components.
    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.n];
        let mut comps = 0;
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            comps += 1;
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
        }
        comps
    }

    /// Connected and 2-regular, i.e. a single cycle through all vertices.
    pub fn is_cycle(&self) -> bool {
        self.n >= 3 && (0..self.n).all(|v| self.degree(v) == 2) && self.is_connected()
    }

    /// Bidirected digraph `D(G)`: every edge becomes a digon.
    pub fn bidirect(&self) -> Digraph {
        let mut d = Digraph::empty(self.n);
        for (u, v) in self.edges() {
            d.insert(u, v);
            d.insert(v, u);
        }
        d
    }

    pub fn induced(&self, vertices: &[Vertex]) -> UndirectedGraph {
        let mut g = UndirectedGraph::empty(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.insert(i, j);
                }
            }
        }
        g
    }
}
