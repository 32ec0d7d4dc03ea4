//! Canonical enumeration of families of disjoint vertex sets.
//!
//! Families are produced with blocks ordered by their minimal element, which is
//! the restricted-growth encoding: element `i` either joins one of the blocks
//! opened so far or opens the next block. Every unordered family is therefore
//! visited exactly once.

use std::ops::ControlFlow;

/// Walks families of exactly `r` disjoint nonempty blocks over `elements`.
///
/// With `allow_unused`, elements may also stay outside every block; otherwise
/// the blocks partition `elements`. `accept(blocks, b)` is consulted after an
/// element was added to block `b` and prunes the subtree when it returns
/// `false`, so it must be monotone (rejecting a block rejects its supersets).
///
/// Branch order per element: existing blocks in order, then a new block, then
/// (if allowed) leaving it unused.
pub(crate) fn for_each_family<A, V>(
    elements: &[usize],
    r: usize,
    allow_unused: bool,
    accept: &A,
    visit: &mut V,
) -> ControlFlow<()>
where
    A: Fn(&[u64], usize) -> bool,
    V: FnMut(&[u64]) -> ControlFlow<()>,
{
    let mut blocks = Vec::with_capacity(r);
    walk(elements, 0, r, allow_unused, accept, visit, &mut blocks)
}

fn walk<A, V>(
    elements: &[usize],
    at: usize,
    r: usize,
    allow_unused: bool,
    accept: &A,
    visit: &mut V,
    blocks: &mut Vec<u64>,
) -> ControlFlow<()>
where
    A: Fn(&[u64], usize) -> bool,
    V: FnMut(&[u64]) -> ControlFlow<()>,
{
    if blocks.len() + (elements.len() - at) < r {
        return ControlFlow::Continue(());
    }
    if at == elements.len() {
        return if blocks.len() == r { visit(blocks) } else { ControlFlow::Continue(()) };
    }
    let bit = 1u64 << elements[at];
    for b in 0..blocks.len() {
        blocks[b] |= bit;
        if accept(blocks, b) {
            walk(elements, at + 1, r, allow_unused, accept, visit, blocks)?;
        }
        blocks[b] &= !bit;
    }
    if blocks.len() < r {
        blocks.push(bit);
        let b = blocks.len() - 1;
        if accept(blocks, b) {
            walk(elements, at + 1, r, allow_unused, accept, visit, blocks)?;
        }
        blocks.pop();
    }
    if allow_unused {
        walk(elements, at + 1, r, allow_unused, accept, visit, blocks)?;
    }
    ControlFlow::Continue(())
}

/// Stirling number of the second kind, `S(n, k)`.
pub fn stirling2(n: usize, k: usize) -> u128 {
    let mut row = vec![0u128; k + 1];
    row[0] = 1;
    for i in 1..=n {
        for j in (1..=k.min(i)).rev() {
            row[j] = j as u128 * row[j] + row[j - 1];
        }
        row[0] = 0;
    }
    row[k]
}

/// Number of unordered families of `r` disjoint nonempty subsets of an
/// `n`-element set, each of size at most `max_size`.
pub fn count_bounded_families(n: usize, r: usize, max_size: usize) -> u128 {
    // Ordered families by exponential generating functions: choose sizes
    // s_1..s_r, multinomial n! / (s_1! ... s_r! (n - sum)!), divide by r!.
    let mut binom = vec![vec![0u128; n + 1]; n + 1];
    for i in 0..=n {
        binom[i][0] = 1;
        for j in 1..=i {
            binom[i][j] = binom[i - 1][j - 1] + binom[i - 1][j];
        }
    }
    // ways[m] = ordered ways to fill the blocks processed so far using m elements.
    let mut ways = vec![0u128; n + 1];
    ways[0] = 1;
    for _ in 0..r {
        let mut next = vec![0u128; n + 1];
        for used in 0..=n {
            if ways[used] == 0 {
                continue;
            }
            for s in 1..=max_size.min(n - used) {
                next[used + s] += ways[used] * binom[n - used][s];
            }
        }
        ways = next;
    }
    let ordered: u128 = ways.iter().sum();
    let fact: u128 = (1..=r as u128).product();
    ordered / fact
}
