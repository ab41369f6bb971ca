//! Constructors for the standard families: cycles, paths, complete and
//! complete bipartite graphs, line graphs, Mycielskians, the pendant-path
//! trees `T_k`, and the iterated antihole substitution tower.

use crate::error::GraphError;
use crate::graph::Graph;

fn at_least(what: &'static str, min: usize, got: usize) -> Result<(), GraphError> {
    if got < min {
        Err(GraphError::ParameterBelowMinimum { what, min, got })
    } else {
        Ok(())
    }
}

/// `C_n` with edges `i ~ i+1 mod n`.
pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    at_least("cycle", 3, n)?;
    let mut g = Graph::new(n);
    for i in 0..n {
        g.add_edge(i, (i + 1) % n);
    }
    Ok(g)
}

/// The path on `n` vertices.
pub fn path(n: usize) -> Result<Graph, GraphError> {
    at_least("path", 1, n)?;
    let mut g = Graph::new(n);
    for i in 1..n {
        g.add_edge(i - 1, i);
    }
    Ok(g)
}

pub fn complete(n: usize) -> Graph {
    Graph::new(n).complement()
}

pub fn empty(n: usize) -> Graph {
    Graph::new(n)
}

/// `K_{a,b}`: vertices `0..a` on one side, `a..a+b` on the other.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut g = Graph::new(a + b);
    for u in 0..a {
        for v in a..a + b {
            g.add_edge(u, v);
        }
    }
    g
}

/// Line graph; vertex `i` is the `i`-th edge of `g` in lexicographic order.
pub fn line_graph(g: &Graph) -> Graph {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut h = Graph::new(edges.len());
    for (i, &(a, b)) in edges.iter().enumerate() {
        for (j, &(c, d)) in edges.iter().enumerate().skip(i + 1) {
            if a == c || a == d || b == c || b == d {
                h.add_edge(i, j);
            }
        }
    }
    h
}

/// Mycielski's construction: copies `u_i` of each vertex adjacent to the
/// neighbours of `v_i`, plus an apex adjacent to every copy. Preserves
/// triangle-freeness and raises the chromatic number by one.
pub fn mycielskian(g: &Graph) -> Graph {
    let n = g.n();
    let mut h = Graph::new(2 * n + 1);
    for (u, v) in g.edges() {
        h.add_edge(u, v);
        h.add_edge(n + u, v);
        h.add_edge(u, n + v);
    }
    for i in 0..n {
        h.add_edge(n + i, 2 * n);
    }
    h
}

/// The Grötzsch graph, `mycielskian(C_5)`: triangle-free, 11 vertices, χ = 4.
pub fn grotzsch() -> Graph {
    mycielskian(&cycle(5).expect("C5"))
}

/// `T_k`: the path with `k` edges with two pendant vertices hung on each of
/// its two ends. Path vertex `i` is `i`; the leaves are `k+1..k+5`, the first
/// two on vertex 0. Hanging pairs on every path vertex instead would embed
/// `T_1` in `T_2`.
pub fn tree_t(k: usize) -> Result<Graph, GraphError> {
    at_least("tree_T", 1, k)?;
    let mut g = Graph::new(k + 5);
    for i in 1..=k {
        g.add_edge(i - 1, i);
    }
    for (leaf, end) in [(k + 1, 0), (k + 2, 0), (k + 3, k), (k + 4, k)] {
        g.add_edge(end, leaf);
    }
    Ok(g)
}

/// The complement of `C_7` with the cyclic labelling of `cycle(7)`.
pub fn antihole7() -> Graph {
    cycle(7).expect("C7").complement()
}

/// `G_0 = K_1`; `G_k` substitutes a seven-vertex antihole for every vertex of
/// `G_{k-1}`. `G_k` has `7^k` vertices and clique number `3^k`.
pub fn scott_seymour(k: usize) -> Graph {
    let a7 = antihole7();
    let mut g = Graph::new(1);
    for _ in 0..k {
        let parts = vec![a7.clone(); g.n()];
        g = g.substitute(&parts).expect("one part per vertex");
    }
    g
}

/// Disjoint union of cycles with the given lengths, laid out consecutively.
pub fn disjoint_cycles(lengths: &[usize]) -> Result<Graph, GraphError> {
    let mut g = Graph::new(0);
    for &len in lengths {
        g = g.disjoint_union(&cycle(len)?);
    }
    Ok(g)
}

/// The house: a 4-cycle `0-1-2-3` with a roof vertex `4` on the edge `2-3`.
pub fn house() -> Graph {
    Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (2, 4), (3, 4)]).expect("house")
}

pub fn petersen() -> Graph {
    let mut g = Graph::new(10);
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
        g.add_edge(i, 5 + i);
    }
    g
}
