//! Ordered strings: the integer tuples that generate ornated graphs.
//!
//! Entries are stored 0-based, but every accessor that talks about
//! "odd" or "even" positions uses the 1-based convention: the first
//! entry is odd-indexed (forward, clockwise reach) and the second is
//! even-indexed (backward, anticlockwise reach).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{OrnatedError, Result};

/// A finite tuple of non-negative integers `(a_1, ..., a_l)`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct OrderedString {
    entries: Vec<usize>,
}

/// Entries of a string split by the parity of their 1-based position.
///
/// Both lists keep the order in which the entries appear in the string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParitySplit {
    /// Odd positions 1, 3, 5, ...: arcs towards higher indices.
    pub forward: Vec<usize>,
    /// Even positions 2, 4, 6, ...: arcs towards lower indices.
    pub backward: Vec<usize>,
}

/// Direction of the arcs generated by a single entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reach {
    Forward,
    Backward,
}

impl Reach {
    /// Direction for the 1-based position `pos`.
    pub fn of_position(pos: usize) -> Self {
        if pos % 2 == 1 {
            Reach::Forward
        } else {
            Reach::Backward
        }
    }
}

impl OrderedString {
    pub fn new(entries: Vec<usize>) -> Self {
        Self { entries }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<usize> {
        self.entries
    }

    /// The string length `l`.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entry at the 1-based position `pos`.
    pub fn get(&self, pos: usize) -> Option<usize> {
        pos.checked_sub(1).and_then(|i| self.entries.get(i).copied())
    }

    /// Largest entry, `k`. Zero for the empty string.
    pub fn max_entry(&self) -> usize {
        self.entries.iter().copied().max().unwrap_or(0)
    }

    /// Sum of all entries.
    pub fn sum(&self) -> usize {
        self.entries.iter().sum()
    }

    /// Iterates `(direction, value)` pairs in string order.
    pub fn reaches(&self) -> impl Iterator<Item = (Reach, usize)> + '_ {
        self.entries.iter().enumerate().map(|(i, &a)| (Reach::of_position(i + 1), a))
    }

    pub fn parity_split(&self) -> ParitySplit {
        let mut forward = Vec::with_capacity(self.len().div_ceil(2));
        let mut backward = Vec::with_capacity(self.len() / 2);
        for (reach, a) in self.reaches() {
            match reach {
                Reach::Forward => forward.push(a),
                Reach::Backward => backward.push(a),
            }
        }
        ParitySplit { forward, backward }
    }

    /// Number of odd-indexed entries (`t`).
    pub fn odd_count(&self) -> usize {
        self.len().div_ceil(2)
    }

    /// Number of even-indexed entries (`m`).
    pub fn even_count(&self) -> usize {
        self.len() / 2
    }

    /// Drops every zero entry, keeping the relative order of the rest.
    pub fn reduce_zeros(&self) -> OrderedString {
        OrderedString::new(self.entries.iter().copied().filter(|&a| a != 0).collect())
    }

    /// The chain of reduced degree-strings: each step deletes every
    /// occurrence of the current minimum until a constant string remains.
    pub fn reduced_degree_chain(&self) -> Result<Vec<OrderedString>> {
        if self.is_empty() {
            return Err(OrnatedError::EmptyString);
        }
        let mut chain = vec![self.clone()];
        loop {
            let last = chain.last().expect("chain is never empty");
            let min = *last.entries.iter().min().expect("non-empty");
            let max = last.max_entry();
            if min == max {
                break;
            }
            let next = OrderedString::new(last.entries.iter().copied().filter(|&a| a != min).collect());
            chain.push(next);
        }
        Ok(chain)
    }

    /// Orderings of the entries that keep every entry on its parity class
    /// and so construct the identical arc matrix: `m! * t!`.
    ///
    /// Counts orderings, not distinct tuples, so repeated values are not
    /// collapsed.
    pub fn identical_string_count(&self) -> u128 {
        factorial(self.even_count()) * factorial(self.odd_count())
    }

    /// Orderings of the entries that construct the same underlying
    /// multigraph: `l!`.
    pub fn isomorphic_string_count(&self) -> u128 {
        factorial(self.len())
    }

    /// Order statistics used by the recursive form of the degree sequence:
    /// smallest, second smallest and second largest distinct values of the
    /// zero-free string. `None` where the string has too few distinct values.
    pub fn order_statistics(&self) -> OrderStatistics {
        let mut distinct: Vec<usize> = self.reduce_zeros().entries;
        distinct.sort_unstable();
        distinct.dedup();
        let n = distinct.len();
        OrderStatistics {
            h1: distinct.first().copied(),
            h2: distinct.get(1).copied(),
            k1: n.checked_sub(2).map(|i| distinct[i]),
            k: distinct.last().copied(),
        }
    }
}

/// Distinct-value order statistics of a zero-free string.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OrderStatistics {
    pub h1: Option<usize>,
    pub h2: Option<usize>,
    pub k1: Option<usize>,
    pub k: Option<usize>,
}

/// Canonical representative of the strings sharing the multisets `forward`
/// and `backward`: both sorted descending, forward values at odd positions,
/// backward values at even positions, the shorter side padded with zeros.
pub fn canonical_interleave(forward: &[usize], backward: &[usize]) -> OrderedString {
    let mut f = forward.to_vec();
    let mut b = backward.to_vec();
    f.sort_unstable_by(|x, y| y.cmp(x));
    b.sort_unstable_by(|x, y| y.cmp(x));
    let pairs = f.len().max(b.len());
    let mut entries = Vec::with_capacity(2 * pairs);
    for i in 0..pairs {
        entries.push(f.get(i).copied().unwrap_or(0));
        entries.push(b.get(i).copied().unwrap_or(0));
    }
    // a trailing pad on the even side carries no information
    if f.len() > b.len() {
        entries.pop();
    }
    OrderedString::new(entries)
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

impl From<Vec<usize>> for OrderedString {
    fn from(entries: Vec<usize>) -> Self {
        Self::new(entries)
    }
}

impl<const N: usize> From<[usize; N]> for OrderedString {
    fn from(entries: [usize; N]) -> Self {
        Self::new(entries.to_vec())
    }
}

impl fmt::Display for OrderedString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

/// Parses `"1,3,5"`. Whitespace is ignored; the empty literal is the
/// empty string.
impl FromStr for OrderedString {
    type Err = OrnatedError;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Ok(Self::empty());
        }
        compact
            .split(',')
            .map(|tok| tok.parse::<usize>().map_err(|_| OrnatedError::InvalidString(s.to_string())))
            .collect::<Result<Vec<_>>>()
            .map(Self::new)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[usize]) -> OrderedString {
        OrderedString::new(v.to_vec())
    }

    #[test]
    fn parity_split_of_illustration_string() {
        let split = s(&[1, 3, 5, 1, 2, 8]).parity_split();
        assert_eq!(split.forward, vec![1, 5, 2]);
        assert_eq!(split.backward, vec![3, 1, 8]);
    }

    #[test]
    fn parity_split_edges() {
        let split = s(&[]).parity_split();
        assert!(split.forward.is_empty() && split.backward.is_empty());
        let split = s(&[7]).parity_split();
        assert_eq!(split.forward, vec![7]);
        assert!(split.backward.is_empty());
    }

    #[test]
    fn reduce_zeros_examples() {
        assert_eq!(s(&[1, 0, 3, 0]).reduce_zeros(), s(&[1, 3]));
        assert_eq!(s(&[0, 0]).reduce_zeros(), s(&[]));
    }

    /// Hand-executable min-removal, kept apart from the library loop.
    fn chain_oracle(v: &[usize]) -> Vec<Vec<usize>> {
        let mut out = vec![v.to_vec()];
        let mut cur = v.to_vec();
        let mut distinct = v.to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        for d in distinct.iter().take(distinct.len() - 1) {
            cur.retain(|x| x != d);
            out.push(cur.clone());
        }
        out
    }

    #[test]
    fn reduced_degree_chain_examples() {
        let chain: Vec<Vec<usize>> = s(&[1, 3, 5, 1, 2, 8])
            .reduced_degree_chain()
            .unwrap()
            .into_iter()
            .map(OrderedString::into_entries)
            .collect();
        let expected = vec![vec![1, 3, 5, 1, 2, 8], vec![3, 5, 2, 8], vec![3, 5, 8], vec![5, 8], vec![8]];
        assert_eq!(chain_oracle(&[1, 3, 5, 1, 2, 8]), expected);
        assert_eq!(chain, expected);

        assert_eq!(s(&[4, 4, 4]).reduced_degree_chain().unwrap(), vec![s(&[4, 4, 4])]);
        assert_eq!(s(&[2, 1]).reduced_degree_chain().unwrap(), vec![s(&[2, 1]), s(&[2])]);
        assert!(matches!(s(&[]).reduced_degree_chain(), Err(OrnatedError::EmptyString)));
    }

    #[test]
    fn counts() {
        assert_eq!(s(&[1, 3, 5, 1, 2, 8]).identical_string_count(), 36);
        assert_eq!(s(&[9]).identical_string_count(), 1);
        assert_eq!(s(&[1, 2]).identical_string_count(), 1);
        assert_eq!(s(&[1, 3]).isomorphic_string_count(), 2);
        assert_eq!(s(&[1, 3, 5]).isomorphic_string_count(), 6);
        assert_eq!(s(&[]).isomorphic_string_count(), 1);
    }

    #[test]
    fn canonical_interleave_examples() {
        assert_eq!(canonical_interleave(&[1, 5, 2], &[3, 1, 8]), s(&[5, 8, 2, 3, 1, 1]));
        assert_eq!(canonical_interleave(&[3], &[]), s(&[3]));
        assert_eq!(canonical_interleave(&[], &[2]), s(&[0, 2]));
        assert_eq!(canonical_interleave(&[4, 1], &[2]), s(&[4, 2, 1]));
        assert_eq!(canonical_interleave(&[], &[]), s(&[]));
    }

    #[test]
    fn order_statistics_skip_zeros() {
        let st = s(&[1, 3, 5, 1, 2, 8, 0]).order_statistics();
        assert_eq!(st.h1, Some(1));
        assert_eq!(st.h2, Some(2));
        assert_eq!(st.k1, Some(5));
        assert_eq!(st.k, Some(8));
        let st = s(&[0, 4]).order_statistics();
        assert_eq!((st.h1, st.h2, st.k1), (Some(4), None, None));
    }

    #[test]
    fn parse_and_display() {
        let parsed: OrderedString = " 1, 3,5 ,1,2,8 ".parse().unwrap();
        assert_eq!(parsed, s(&[1, 3, 5, 1, 2, 8]));
        assert_eq!(parsed.to_string(), "1,3,5,1,2,8");
        assert_eq!("".parse::<OrderedString>().unwrap(), s(&[]));
        assert!("1,-2".parse::<OrderedString>().is_err());
        assert!("1,,2".parse::<OrderedString>().is_err());
        assert!("x".parse::<OrderedString>().is_err());
    }

    #[test]
    fn one_based_get() {
        let st = s(&[4, 6]);
        assert_eq!(st.get(0), None);
        assert_eq!(st.get(1), Some(4));
        assert_eq!(st.get(2), Some(6));
        assert_eq!(st.get(3), None);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn split_sizes_add_up(v in prop::collection::vec(0usize..10, 0..12)) {
                let split = s(&v).parity_split();
                prop_assert_eq!(split.forward.len() + split.backward.len(), v.len());
            }

            #[test]
            fn reduce_zeros_idempotent(v in prop::collection::vec(0usize..4, 0..12)) {
                let once = s(&v).reduce_zeros();
                prop_assert_eq!(once.reduce_zeros(), once);
            }

            #[test]
            fn chain_ends_constant(v in prop::collection::vec(0usize..6, 1..10)) {
                let st = s(&v);
                let chain = st.reduced_degree_chain().unwrap();
                let mut distinct = v.clone();
                distinct.sort_unstable();
                distinct.dedup();
                prop_assert!(chain.len() <= distinct.len());
                let last = chain.last().unwrap();
                prop_assert!(last.entries().iter().all(|&a| a == st.max_entry()));
            }

            #[test]
            fn canonical_round_trip(
                f in prop::collection::vec(1usize..9, 0..5),
                b in prop::collection::vec(1usize..9, 0..5),
            ) {
                let split = canonical_interleave(&f, &b).parity_split();
                let mut got_f: Vec<_> = split.forward.into_iter().filter(|&a| a > 0).collect();
                let mut got_b: Vec<_> = split.backward.into_iter().filter(|&a| a > 0).collect();
                let (mut f, mut b) = (f, b);
                got_f.sort_unstable(); got_b.sort_unstable(); f.sort_unstable(); b.sort_unstable();
                prop_assert_eq!(got_f, f);
                prop_assert_eq!(got_b, b);
            }

            #[test]
            fn parse_display_round_trip(v in prop::collection::vec(0usize..1000, 0..8)) {
                let st = s(&v);
                prop_assert_eq!(st.to_string().parse::<OrderedString>().unwrap(), st);
            }
        }
    }
}
