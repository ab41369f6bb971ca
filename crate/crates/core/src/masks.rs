//! Subset tables over graphs with at most 64 vertices, indexed by vertex mask.

/// `t[mask]` = clique number of the subgraph induced on `mask`. Needs `n <= 26`.
pub(crate) fn clique_table(rows: &[u64]) -> Vec<u8> {
    let n = rows.len();
    assert!(n <= 26, "subset tables are limited to 26 vertices");
    let mut t = vec![0u8; 1 << n];
    for mask in 1u64..(1 << n) {
        let v = mask.trailing_zeros() as usize;
        let without = mask & !(1 << v);
        t[mask as usize] = t[without as usize].max(1 + t[(without & rows[v]) as usize]);
    }
    t
}

pub(crate) fn complement_rows(rows: &[u64]) -> Vec<u64> {
    let all = full(rows.len());
    rows.iter().enumerate().map(|(v, r)| !r & all & !(1 << v)).collect()
}

pub(crate) fn full(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub(crate) fn is_connected(rows: &[u64], mask: u64) -> bool {
    if mask == 0 {
        return true;
    }
    let mut seen = mask & mask.wrapping_neg();
    let mut frontier = seen;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let fresh = rows[v] & mask & !seen;
        seen |= fresh;
        frontier |= fresh;
    }
    seen == mask
}

pub(crate) fn vertices(mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    let mut m = mask;
    while m != 0 {
        out.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    out
}
