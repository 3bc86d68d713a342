use std::fmt;
use std::str::FromStr;

use super::partition::IntegerPartition;
use super::permutation::Permutation;
use crate::error::{Error, Result};

/// A set partition of `{1, …, n}` in canonical form: each block sorted, blocks
/// sorted by least element.
///
/// The `Ord` impl is the basis order used throughout the crate: by size, then
/// by shape `λ(π)` (lexicographic on weakly decreasing parts, which refines
/// dominance), then by blocks lexicographically. It puts `1/2/3` first and
/// `123` last, refines the refinement order, and makes the Schur-to-`h`
/// transition triangular.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    n: usize,
    shape_key: Vec<usize>,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    /// Validates and canonicalizes. Blocks must be nonempty, disjoint and
    /// cover `{1, …, n}` for `n` the total element count.
    pub fn new(mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        let n: usize = blocks.iter().map(|b| b.len()).sum();
        let mut seen = vec![false; n + 1];
        for b in &blocks {
            if b.is_empty() {
                return Err(Error::invalid("set partition blocks must be nonempty"));
            }
            for &x in b {
                if x == 0 || x > n || seen[x] {
                    return Err(Error::invalid(format!(
                        "blocks do not partition {{1..{}}}: bad element {}",
                        n, x
                    )));
                }
                seen[x] = true;
            }
        }
        for b in blocks.iter_mut() {
            b.sort_unstable();
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(Self::from_canonical(n, blocks))
    }

    fn from_canonical(n: usize, blocks: Vec<Vec<usize>>) -> Self {
        let mut shape_key: Vec<usize> = blocks.iter().map(|b| b.len()).collect();
        shape_key.sort_unstable_by(|a, b| b.cmp(a));
        SetPartition {
            n,
            shape_key,
            blocks,
        }
    }

    /// Builds from an assignment `labels[i-1]` = block label of `i`.
    pub fn from_labels<L: Eq + Copy>(labels: &[L]) -> Self {
        let mut keys: Vec<L> = Vec::new();
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for (i, l) in labels.iter().enumerate() {
            match keys.iter().position(|k| k == l) {
                Some(j) => blocks[j].push(i + 1),
                None => {
                    keys.push(*l);
                    blocks.push(vec![i + 1]);
                }
            }
        }
        Self::from_canonical(labels.len(), blocks)
    }

    /// Consecutive interval blocks of the given sizes; zeros are skipped.
    pub fn from_block_sizes(sizes: &[usize]) -> Self {
        let mut blocks = Vec::new();
        let mut next = 1;
        for &s in sizes {
            if s > 0 {
                blocks.push((next..next + s).collect());
                next += s;
            }
        }
        Self::from_canonical(next - 1, blocks)
    }

    pub fn empty() -> Self {
        Self::from_canonical(0, Vec::new())
    }

    /// `1/2/⋯/n`
    pub fn minimum(n: usize) -> Self {
        Self::from_canonical(n, (1..=n).map(|i| vec![i]).collect())
    }

    /// `12⋯n`
    pub fn maximum(n: usize) -> Self {
        if n == 0 {
            return Self::empty();
        }
        Self::from_canonical(n, vec![(1..=n).collect()])
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// Number of blocks `ℓ(π)`.
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// `labels[i-1]` = index of the block containing `i`.
    pub fn block_labels(&self) -> Vec<usize> {
        let mut out = vec![0; self.n];
        for (j, b) in self.blocks.iter().enumerate() {
            for &x in b {
                out[x - 1] = j;
            }
        }
        out
    }

    /// `λ(π)`
    pub fn shape(&self) -> IntegerPartition {
        IntegerPartition::new(self.shape_key.clone()).expect("shape key is a partition")
    }

    /// `(−1)^π = (−1)^{n − ℓ(π)}`
    pub fn sign(&self) -> i32 {
        if (self.n - self.len()) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    fn check_size(&self, other: &SetPartition) -> Result<()> {
        if self.n != other.n {
            return Err(Error::SizeMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    /// `π ∧ σ`: all nonempty pairwise block intersections.
    pub fn meet(&self, other: &SetPartition) -> Result<SetPartition> {
        self.check_size(other)?;
        let a = self.block_labels();
        let b = other.block_labels();
        let pairs: Vec<(usize, usize)> = a.into_iter().zip(b).collect();
        Ok(SetPartition::from_labels(&pairs))
    }

    /// Refinement order `π ≤ σ`: every block of `π` lies inside a block of `σ`.
    pub fn leq(&self, other: &SetPartition) -> Result<bool> {
        self.check_size(other)?;
        let labels = other.block_labels();
        Ok(self
            .blocks
            .iter()
            .all(|b| b.iter().all(|&x| labels[x - 1] == labels[b[0] - 1])))
    }

    /// Whether `π ∧ σ` is the minimum `1/2/⋯/n`.
    pub fn meet_is_minimum(&self, other: &SetPartition) -> Result<bool> {
        self.check_size(other)?;
        let labels = other.block_labels();
        Ok(self.blocks.iter().all(|b| {
            let mut seen: Vec<usize> = b.iter().map(|&x| labels[x - 1]).collect();
            seen.sort_unstable();
            seen.windows(2).all(|w| w[0] != w[1])
        }))
    }

    /// `π | σ`: the blocks of `σ` shifted by `|π|` and appended.
    pub fn slash(&self, other: &SetPartition) -> SetPartition {
        let mut blocks = self.blocks.clone();
        blocks.extend(
            other
                .blocks
                .iter()
                .map(|b| b.iter().map(|&x| x + self.n).collect()),
        );
        Self::from_canonical(self.n + other.n, blocks)
    }

    /// `δ(π)`: each block mapped elementwise.
    pub fn permute(&self, delta: &Permutation) -> Result<SetPartition> {
        if delta.size() != self.n {
            return Err(Error::SizeMismatch {
                left: delta.size(),
                right: self.n,
            });
        }
        let mut blocks: Vec<Vec<usize>> = self
            .blocks
            .iter()
            .map(|b| {
                let mut nb: Vec<usize> = b.iter().map(|&x| delta.apply(x)).collect();
                nb.sort_unstable();
                nb
            })
            .collect();
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(Self::from_canonical(self.n, blocks))
    }

    /// The restriction of `π` to the blocks selected by `keep`, relabelled
    /// order-preservingly onto `{1, …, m}`.
    pub fn standardized_sub(&self, keep: &[bool]) -> SetPartition {
        let mut elements: Vec<usize> = self
            .blocks
            .iter()
            .zip(keep)
            .filter(|(_, &k)| k)
            .flat_map(|(b, _)| b.iter().copied())
            .collect();
        elements.sort_unstable();
        let mut rank = vec![0; self.n + 1];
        for (i, &x) in elements.iter().enumerate() {
            rank[x] = i + 1;
        }
        let blocks: Vec<Vec<usize>> = self
            .blocks
            .iter()
            .zip(keep)
            .filter(|(_, &k)| k)
            .map(|(b, _)| b.iter().map(|&x| rank[x]).collect())
            .collect();
        Self::from_canonical(elements.len(), blocks)
    }

    /// All set partitions of `[n]`, sorted by their canonical block lists.
    pub fn all(n: usize) -> Vec<SetPartition> {
        let mut out = Vec::new();
        let mut labels = vec![0usize; n];
        fn rec(i: usize, max: usize, labels: &mut Vec<usize>, out: &mut Vec<SetPartition>) {
            if i == labels.len() {
                out.push(SetPartition::from_labels(labels));
                return;
            }
            for l in 0..=max {
                labels[i] = l;
                rec(i + 1, if l == max { max + 1 } else { max }, labels, out);
            }
        }
        if n == 0 {
            return vec![Self::empty()];
        }
        rec(0, 0, &mut labels, &mut out);
        out.sort_by(|a, b| a.blocks.cmp(&b.blocks));
        out
    }

    /// All set partitions of `[n]` in basis order.
    pub fn all_in_basis_order(n: usize) -> Vec<SetPartition> {
        let mut v = Self::all(n);
        v.sort();
        v
    }

    /// All set partitions with `λ(π) = λ`.
    pub fn all_of_shape(lambda: &IntegerPartition) -> Vec<SetPartition> {
        Self::all(lambda.size())
            .into_iter()
            .filter(|p| p.shape_key == lambda.parts())
            .collect()
    }
}

/// Bell numbers by the Bell triangle.
pub fn bell_number(n: usize) -> u128 {
    let mut row: Vec<u128> = vec![1];
    for _ in 0..n {
        let mut next = vec![*row.last().unwrap()];
        for &x in &row {
            let last = *next.last().unwrap();
            next.push(last + x);
        }
        row = next;
    }
    row[0]
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n == 0 {
            return write!(f, "∅");
        }
        let sep = if self.n >= 10 { "," } else { "" };
        let s: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                b.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(sep)
            })
            .collect();
        write!(f, "{}", s.join("/"))
    }
}

impl fmt::Debug for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SetPartition({})", self)
    }
}

impl FromStr for SetPartition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.is_empty() || t == "∅" {
            return Ok(SetPartition::empty());
        }
        let comma = t.contains(',');
        let mut blocks = Vec::new();
        let mut pos = 0;
        for piece in t.split('/') {
            let mut block = Vec::new();
            if comma {
                let mut p = pos;
                for num in piece.split(',') {
                    let v: usize = num
                        .trim()
                        .parse()
                        .map_err(|_| Error::parse(s, p, "expected a block element"))?;
                    block.push(v);
                    p += num.len() + 1;
                }
            } else {
                for (off, c) in piece.char_indices() {
                    let v = c
                        .to_digit(10)
                        .ok_or_else(|| Error::parse(s, pos + off, "expected a digit"))?;
                    block.push(v as usize);
                }
            }
            if block.is_empty() {
                return Err(Error::parse(s, pos, "empty block"));
            }
            blocks.push(block);
            pos += piece.len() + 1;
        }
        SetPartition::new(blocks).map_err(|e| Error::parse(s, 0, e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(s: &str) -> SetPartition {
        s.parse().unwrap()
    }

    #[test]
    fn meet_examples() {
        assert_eq!(sp("13/2").meet(&sp("123")).unwrap(), sp("13/2"));
        assert_eq!(sp("12/3").meet(&sp("13/2")).unwrap(), sp("1/2/3"));
        assert!(sp("12").meet(&sp("1/2/3")).is_err());
    }

    #[test]
    fn refinement_examples() {
        assert!(sp("1/2/3").leq(&sp("13/2")).unwrap());
        assert!(!sp("13/2").leq(&sp("12/3")).unwrap());
        assert!(sp("13/2").leq(&sp("13/2")).unwrap());
    }

    #[test]
    fn slash_examples() {
        assert_eq!(sp("134/25").slash(&sp("1/23")).to_string(), "134/25/6/78");
        assert_eq!(sp("134/25").slash(&SetPartition::empty()), sp("134/25"));
        assert_eq!(sp("123").slash(&sp("12")).to_string(), "123/45");
    }

    #[test]
    fn shapes_and_canonical_partitions() {
        let p = sp("134/25/6/78");
        assert_eq!(p.shape().to_string(), "3.2.2.1");
        let lam: IntegerPartition = "3.2.2.1".parse().unwrap();
        assert_eq!(lam.canonical_set_partition().to_string(), "123/45/67/8");
        let iterated = sp("123").slash(&sp("12")).slash(&sp("12")).slash(&sp("1"));
        assert_eq!(iterated, lam.canonical_set_partition());
    }

    #[test]
    fn permute_examples() {
        let d: Permutation = "132".parse().unwrap();
        assert_eq!(sp("12/3").permute(&d).unwrap(), sp("13/2"));
        assert_eq!(sp("12/3").permute(&Permutation::identity(3)).unwrap(), sp("12/3"));
    }

    #[test]
    fn enumeration_matches_bell_numbers() {
        for n in 0..=7 {
            assert_eq!(SetPartition::all(n).len() as u128, bell_number(n));
        }
        assert_eq!(SetPartition::all(3).len(), 5);
        assert_eq!(SetPartition::all(4).len(), 15);
        let strings: Vec<String> = SetPartition::all(3).iter().map(|p| p.to_string()).collect();
        let mut sorted = strings.clone();
        sorted.sort();
        assert_eq!(strings, sorted);
    }

    #[test]
    fn basis_order_puts_finer_shapes_first() {
        let v: Vec<String> = SetPartition::all_in_basis_order(3)
            .iter()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(v, vec!["1/2/3", "1/23", "12/3", "13/2", "123"]);
    }

    #[test]
    fn text_round_trip_with_large_elements() {
        let p = SetPartition::new(vec![vec![1, 10], (2..10).collect()]).unwrap();
        assert_eq!(p.to_string(), "1,10/2,3,4,5,6,7,8,9");
        assert_eq!(p.to_string().parse::<SetPartition>().unwrap(), p);
        assert!("12/2".parse::<SetPartition>().is_err());
        assert!("1/3".parse::<SetPartition>().is_err());
    }

    #[test]
    fn standardized_restriction() {
        let p = sp("134/25");
        assert_eq!(p.standardized_sub(&[false, true]).to_string(), "12");
        assert_eq!(sp("13/2/4").standardized_sub(&[true, false, true]).to_string(), "12/3");
    }

    #[test]
    fn meet_is_lattice_meet_exhaustively() {
        for n in 0..=5 {
            let all = SetPartition::all(n);
            for a in &all {
                for b in &all {
                    let m = a.meet(b).unwrap();
                    assert!(m.leq(a).unwrap() && m.leq(b).unwrap());
                    for c in &all {
                        if c.leq(a).unwrap() && c.leq(b).unwrap() {
                            assert!(c.leq(&m).unwrap());
                        }
                    }
                    assert_eq!(
                        a.meet_is_minimum(b).unwrap(),
                        m == SetPartition::minimum(n)
                    );
                }
            }
        }
    }
}
