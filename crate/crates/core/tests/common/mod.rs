//! Brute-force reference implementations, written from the definitions and
//! sharing no code with the library's solvers.

#![allow(dead_code)]

use std::collections::HashSet;

use holeforge_core::Graph;

pub fn rows(g: &Graph) -> Vec<u64> {
    let n = g.n();
    (0..n).map(|u| (0..n).filter(|&v| g.has_edge(u, v)).fold(0u64, |m, v| m | 1 << v)).collect()
}

fn is_clique(rows: &[u64], mask: u64) -> bool {
    (0..rows.len()).filter(|&v| mask >> v & 1 == 1).all(|v| rows[v] & mask == mask & !(1 << v))
}

fn is_stable(rows: &[u64], mask: u64) -> bool {
    (0..rows.len()).filter(|&v| mask >> v & 1 == 1).all(|v| rows[v] & mask == 0)
}

fn submasks(mask: u64) -> impl Iterator<Item = u64> {
    let mut s = mask;
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let cur = s;
        if s == 0 {
            done = true;
        } else {
            s = (s - 1) & mask;
        }
        Some(cur)
    })
}

/// Per-subset clique number, chromatic number and perfectness by definition.
pub struct Tables {
    pub omega: Vec<usize>,
    pub alpha: Vec<usize>,
    pub chi: Vec<usize>,
    pub perfect: Vec<bool>,
}

pub fn tables(g: &Graph) -> Tables {
    let n = g.n();
    assert!(n <= 12);
    let r = rows(g);
    let size = 1usize << n;
    let mut omega = vec![0; size];
    let mut alpha = vec![0; size];
    let mut chi = vec![0; size];
    let mut perfect = vec![true; size];
    let stable: Vec<bool> = (0..size as u64).map(|m| is_stable(&r, m)).collect();
    for mask in 0..size as u64 {
        for sub in submasks(mask) {
            if is_clique(&r, sub) {
                omega[mask as usize] = omega[mask as usize].max(sub.count_ones() as usize);
            }
            if stable[sub as usize] {
                alpha[mask as usize] = alpha[mask as usize].max(sub.count_ones() as usize);
            }
        }
        if mask != 0 {
            let low = mask & mask.wrapping_neg();
            chi[mask as usize] = submasks(mask)
                .filter(|&s| s & low != 0 && stable[s as usize])
                .map(|s| 1 + chi[(mask & !s) as usize])
                .min()
                .unwrap();
        }
        perfect[mask as usize] = chi[mask as usize] == omega[mask as usize]
            && (0..n).filter(|&v| mask >> v & 1 == 1).all(|v| perfect[(mask & !(1 << v)) as usize]);
    }
    Tables { omega, alpha, chi, perfect }
}

/// Fewest perfect sets covering the vertices.
pub fn chi_p(t: &Tables, n: usize) -> usize {
    let size = 1usize << n;
    let mut best = vec![usize::MAX; size];
    best[0] = 0;
    for mask in 1..size as u64 {
        let low = mask & mask.wrapping_neg();
        best[mask as usize] = submasks(mask)
            .filter(|&s| s & low != 0 && t.perfect[s as usize])
            .map(|s| 1 + best[(mask & !s) as usize])
            .min()
            .unwrap();
    }
    best[size - 1]
}

/// Every vertex subset inducing a cycle of length at least 4, as sorted lists.
pub fn induced_cycle_sets(g: &Graph, min_len: usize) -> Vec<Vec<usize>> {
    let n = g.n();
    let r = rows(g);
    let mut out = Vec::new();
    for mask in 1u64..(1 << n) {
        let k = mask.count_ones() as usize;
        if k < min_len.max(3) {
            continue;
        }
        let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if vs.iter().all(|&v| (r[v] & mask).count_ones() == 2) && connected(&r, mask) {
            out.push(vs);
        }
    }
    out
}

pub fn connected(r: &[u64], mask: u64) -> bool {
    if mask == 0 {
        return true;
    }
    let mut seen = mask & mask.wrapping_neg();
    loop {
        let mut next = seen;
        for (v, row) in r.iter().enumerate() {
            if seen >> v & 1 == 1 {
                next |= row & mask;
            }
        }
        if next == seen {
            return seen == mask;
        }
        seen = next;
    }
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if k == items.len() {
            out.push(items.clone());
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            go(items, k + 1, out);
            items.swap(k, i);
        }
    }
    let mut out = Vec::new();
    go(&mut (0..n).collect(), 0, &mut out);
    out
}

/// Smallest upper-triangle adjacency word over all relabellings.
pub fn min_code(r: &[u64], perms: &[Vec<usize>]) -> u64 {
    let n = r.len();
    perms
        .iter()
        .map(|p| {
            let mut code = 0u64;
            let mut bit = 0;
            for j in 1..n {
                for i in 0..j {
                    if r[p[i]] >> p[j] & 1 == 1 {
                        code |= 1 << bit;
                    }
                    bit += 1;
                }
            }
            code
        })
        .min()
        .unwrap()
}

/// Isomorphism classes of connected 4-regular graphs on `n` vertices, by
/// labelled backtracking with `N(0) = {1, 2, 3, 4}` and brute-force
/// canonical forms.
pub fn labelled_4_regular_classes(n: usize) -> usize {
    assert!((5..=9).contains(&n));
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut found = Vec::new();
    let mut r = vec![0u64; n];
    let mut deg = vec![0usize; n];
    fn go(k: usize, pairs: &[(usize, usize)], r: &mut [u64], deg: &mut [usize], found: &mut Vec<Vec<u64>>) {
        if k == pairs.len() {
            if deg.iter().all(|&d| d == 4) {
                found.push(r.to_vec());
            }
            return;
        }
        let (i, j) = pairs[k];
        // once all pairs with first index i are decided, deg[i] is final
        let last_for_i = j == r.len() - 1;
        let forced = if i == 0 { Some((1..=4).contains(&j)) } else { None };
        for take in [false, true] {
            if forced.is_some_and(|f| f != take) {
                continue;
            }
            if take && (deg[i] == 4 || deg[j] == 4) {
                continue;
            }
            if take {
                r[i] |= 1 << j;
                r[j] |= 1 << i;
                deg[i] += 1;
                deg[j] += 1;
            }
            if !last_for_i || deg[i] == 4 {
                go(k + 1, pairs, r, deg, found);
            }
            if take {
                r[i] &= !(1 << j);
                r[j] &= !(1 << i);
                deg[i] -= 1;
                deg[j] -= 1;
            }
        }
    }
    go(0, &pairs, &mut r, &mut deg, &mut found);
    let perms = permutations(n);
    let full = (1u64 << n) - 1;
    let codes: HashSet<u64> = found.iter().filter(|r| connected(r, full)).map(|r| min_code(r, &perms)).collect();
    codes.len()
}

/// Planarity through Wagner's theorem: look for a `K_5` or `K_{3,3}` minor
/// by assigning every vertex to a branch set or deleting it.
pub fn planar_by_minors(g: &Graph) -> bool {
    let n = g.n();
    let r = rows(g);
    let k5: Vec<(usize, usize)> = (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))).collect();
    let k33: Vec<(usize, usize)> = (0..3).flat_map(|i| (3..6).map(move |j| (i, j))).collect();
    !has_minor(&r, n, 5, &k5) && !has_minor(&r, n, 6, &k33)
}

fn has_minor(r: &[u64], n: usize, h: usize, edges: &[(usize, usize)]) -> bool {
    if n < h {
        return false;
    }
    let mut label = vec![0usize; n];
    loop {
        let mut sets = vec![0u64; h];
        for v in 0..n {
            if label[v] < h {
                sets[label[v]] |= 1 << v;
            }
        }
        if sets.iter().all(|&s| s != 0 && connected(r, s))
            && edges.iter().all(|&(a, b)| (0..n).any(|v| sets[a] >> v & 1 == 1 && r[v] & sets[b] != 0))
        {
            return true;
        }
        // next assignment in base h+1
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            label[i] += 1;
            if label[i] <= h {
                break;
            }
            label[i] = 0;
            i += 1;
        }
    }
}
