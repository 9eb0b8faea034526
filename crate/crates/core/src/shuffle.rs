//! `(i, j)`-shuffles with signs.
//!
//! A permutation of `{1, …, i+j}` is an `(i, j)`-shuffle when it is
//! increasing on the first `i` positions and on the last `j` positions.
//! The sign is the permutation's parity.

use itertools::Itertools;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedShuffle {
    /// Permutation values, 1-based: `permutation[t]` is the image of
    /// position `t + 1`.
    pub permutation: Vec<usize>,
    /// Parity: `+1` for even, `-1` for odd.
    pub sign: i8,
}

fn parity_sign(perm: &[usize]) -> i8 {
    let mut inversions = 0usize;
    for a in 0..perm.len() {
        for b in a + 1..perm.len() {
            if perm[a] > perm[b] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// All `(i, j)`-shuffles of `{1, …, i+j}` with their signs, enumerated
/// deterministically (first block in lexicographic order). There are
/// `binomial(i+j, i)` of them; for `i = 0` or `j = 0` only the identity.
pub fn shuffles(i: usize, j: usize) -> Vec<SignedShuffle> {
    let n = i + j;
    let mut out = Vec::new();
    for first_block in (1..=n).combinations(i) {
        let mut in_first = vec![false; n + 1];
        for &v in &first_block {
            in_first[v] = true;
        }
        let mut permutation = first_block;
        permutation.extend((1..=n).filter(|&v| !in_first[v]));
        let sign = parity_sign(&permutation);
        out.push(SignedShuffle { permutation, sign });
    }
    out
}
