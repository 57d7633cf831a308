#![allow(dead_code)]

//! Independent oracles: the arc rule evaluated pair by pair, with no use of
//! the library's construction or closed forms.

/// `true` when entry `a` at 1-based string position `pos` puts an arc
/// from `v_i` to `v_j`.
pub fn arc_rule(pos: usize, a: usize, i: usize, j: usize) -> bool {
    if pos % 2 == 1 {
        i < j && i + a >= j
    } else {
        j < i && j + a >= i
    }
}

/// Arc multiplicities `e[i-1][j-1]` of `O_n(entries)`.
pub fn brute_matrix(n: usize, entries: &[usize]) -> Vec<Vec<usize>> {
    let mut e = vec![vec![0; n]; n];
    for (idx, &a) in entries.iter().enumerate() {
        for i in 1..=n {
            for j in 1..=n {
                if arc_rule(idx + 1, a, i, j) {
                    e[i - 1][j - 1] += 1;
                }
            }
        }
    }
    e
}

/// Total degrees (out + in) read from the brute-force matrix.
pub fn brute_degrees(n: usize, entries: &[usize]) -> Vec<usize> {
    let e = brute_matrix(n, entries);
    (0..n).map(|i| e[i].iter().sum::<usize>() + (0..n).map(|r| e[r][i]).sum::<usize>()).collect()
}

/// Every string of length `1..=max_len` over `lo..=hi`, shortest first,
/// lexicographic within a length.
pub fn all_strings(lo: usize, hi: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .into_iter()
            .flat_map(|prefix| {
                (lo..=hi).map(move |a| {
                    let mut next = prefix.clone();
                    next.push(a);
                    next
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

pub fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}
