//! Planarity testing by incremental face embedding, one block at a time.

use crate::bitset::VertexSet;
use crate::graph::Graph;

pub fn is_planar(g: &Graph) -> bool {
    let n = g.n();
    if n <= 4 {
        return true;
    }
    if g.edge_count() > 3 * n - 6 {
        return false;
    }
    blocks(g).iter().all(|b| b.len() < 5 || embeds(&g.induced_ordered(b)))
}

/// Vertex sets of the biconnected components with at least two vertices.
fn blocks(g: &Graph) -> Vec<Vec<usize>> {
    struct State<'a> {
        g: &'a Graph,
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<(usize, usize)>,
        out: Vec<Vec<usize>>,
    }
    fn dfs(s: &mut State, u: usize, parent: Option<usize>) {
        s.time += 1;
        s.disc[u] = s.time;
        s.low[u] = s.time;
        for v in s.g.neighbors(u).iter() {
            if s.disc[v] == 0 {
                s.stack.push((u, v));
                dfs(s, v, Some(u));
                s.low[u] = s.low[u].min(s.low[v]);
                if s.low[v] >= s.disc[u] {
                    let mut block = Vec::new();
                    while let Some((a, b)) = s.stack.pop() {
                        block.extend([a, b]);
                        if (a, b) == (u, v) {
                            break;
                        }
                    }
                    block.sort_unstable();
                    block.dedup();
                    s.out.push(block);
                }
            } else if Some(v) != parent && s.disc[v] < s.disc[u] {
                s.stack.push((u, v));
                s.low[u] = s.low[u].min(s.disc[v]);
            }
        }
    }
    let n = g.n();
    let mut s = State { g, disc: vec![0; n], low: vec![0; n], time: 0, stack: Vec::new(), out: Vec::new() };
    for v in 0..n {
        if s.disc[v] == 0 {
            dfs(&mut s, v, None);
        }
    }
    s.out
}

enum Fragment {
    Chord(usize, usize),
    Piece(VertexSet),
}

/// Grows a plane embedding of a biconnected graph from a cycle, always
/// placing a fragment that fits in the fewest faces first.
fn embeds(g: &Graph) -> bool {
    let n = g.n();
    if g.edge_count() > 3 * n - 6 {
        return false;
    }
    let a = g.neighbors(0).first().expect("blocks have edges");
    let mut allowed = VertexSet::full(n);
    allowed.remove(0);
    // a path from a back to 0 that does not use the edge 0-a closes a cycle
    let mut cycle = None;
    for b in g.neighbors(0).iter().filter(|&b| b != a) {
        if let Some(p) = g.shortest_path_within(a, b, &allowed) {
            cycle = Some(p);
            break;
        }
    }
    let mut cycle = cycle.expect("biconnected");
    cycle.insert(0, 0);
    let mut placed = VertexSet::from_vertices(n, cycle.iter().copied());
    let mut embedded = Graph::new(n);
    for i in 0..cycle.len() {
        embedded.add_edge(cycle[i], cycle[(i + 1) % cycle.len()]);
    }
    let mut faces = vec![cycle.clone(), cycle.into_iter().rev().collect::<Vec<_>>()];
    loop {
        let fragments = fragments(g, &embedded, &placed);
        if fragments.is_empty() {
            return true;
        }
        let mut choice: Option<(usize, usize, usize)> = None;
        for (i, (_, att)) in fragments.iter().enumerate() {
            let fits: Vec<usize> = (0..faces.len()).filter(|&f| att.iter().all(|v| faces[f].contains(v))).collect();
            match fits.len() {
                0 => return false,
                k if choice.is_none_or(|(_, _, best)| k < best) => choice = Some((i, fits[0], k)),
                _ => {}
            }
        }
        let (i, f, _) = choice.expect("at least one fragment");
        let (frag, att) = &fragments[i];
        let path = match frag {
            Fragment::Chord(u, v) => vec![*u, *v],
            Fragment::Piece(piece) => piece_path(g, piece, att),
        };
        for w in path.windows(2) {
            embedded.add_edge(w[0], w[1]);
        }
        for &v in &path {
            placed.insert(v);
        }
        let face = faces.swap_remove(f);
        let (first, second) = split_face(&face, &path);
        faces.push(first);
        faces.push(second);
    }
}

fn fragments(g: &Graph, embedded: &Graph, placed: &VertexSet) -> Vec<(Fragment, Vec<usize>)> {
    let mut out = Vec::new();
    for (u, v) in g.edges() {
        if placed.contains(u) && placed.contains(v) && !embedded.has_edge(u, v) {
            out.push((Fragment::Chord(u, v), vec![u, v]));
        }
    }
    let rest = VertexSet::full(g.n()).difference(placed);
    for piece in g.components_within(&rest) {
        let mut att = VertexSet::new(g.n());
        for v in piece.iter() {
            att.union_with(&g.neighbors(v).intersection(placed));
        }
        out.push((Fragment::Piece(piece), att.to_vec()));
    }
    out
}

/// A path through `piece` between two different attachment vertices.
fn piece_path(g: &Graph, piece: &VertexSet, att: &[usize]) -> Vec<usize> {
    let a = att[0];
    let others = VertexSet::from_vertices(g.n(), att[1..].iter().copied());
    let x = g.neighbors(a).intersection(piece).first().expect("attachment touches piece");
    let y = piece
        .iter()
        .filter(|&y| !g.neighbors(y).is_disjoint(&others))
        .min_by_key(|&y| g.shortest_path_within(x, y, piece).map_or(usize::MAX, |p| p.len()))
        .expect("a piece has two attachments");
    let b = g.neighbors(y).intersection(&others).first().expect("y touches another attachment");
    let mut path = vec![a];
    path.extend(g.shortest_path_within(x, y, piece).expect("pieces are connected"));
    path.push(b);
    path
}

/// Splits a face along a path whose ends lie on it and whose interior is new.
fn split_face(face: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let a = path[0];
    let b = *path.last().unwrap();
    let inner = &path[1..path.len() - 1];
    let len = face.len();
    let i = face.iter().position(|&v| v == a).unwrap();
    let j = face.iter().position(|&v| v == b).unwrap();
    let arc = |from: usize, to: usize| {
        let mut out = Vec::new();
        let mut k = from;
        loop {
            out.push(face[k]);
            if k == to {
                break;
            }
            k = (k + 1) % len;
        }
        out
    };
    let mut first = arc(i, j);
    first.extend(inner.iter().rev());
    let mut second = arc(j, i);
    second.extend(inner.iter());
    (first, second)
}
