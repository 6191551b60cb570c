//! Small combinatorial helpers: binomials and subset enumeration.

use alloc::vec::Vec;

/// `C(n, k)`, saturating at `u64::MAX`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// Advances `idx` to the next `k`-subset of `0..n` in lexicographic order.
/// Returns false once the last subset has been passed.
pub fn next_lex(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Advances `idx` (sorted ascending) to the next `k`-subset in colexicographic
/// order, never exceeding `bound` for the largest element. Returns false when
/// exhausted.
pub fn next_colex(idx: &mut [usize], bound: usize) -> bool {
    let k = idx.len();
    for i in 0..k {
        let limit = if i + 1 < k { idx[i + 1] } else { bound };
        if idx[i] + 1 < limit {
            idx[i] += 1;
            for (j, slot) in idx.iter_mut().enumerate().take(i) {
                *slot = j;
            }
            return true;
        }
    }
    false
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        if k == 0 || !next_lex(&mut idx, n) {
            break;
        }
    }
    out
}
