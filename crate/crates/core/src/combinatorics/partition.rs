use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use super::set_partition::SetPartition;
use crate::error::{Error, Result};
use crate::rational::factorial;

/// An integer partition: weakly decreasing positive parts.
///
/// Ordered lexicographically on the parts, so `111 < 21 < 3`. That order
/// refines dominance, which makes Kostka matrices triangular in it.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct IntegerPartition {
    parts: Vec<usize>,
}

impl IntegerPartition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::invalid("partition parts must be positive"));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::invalid("partition parts must be weakly decreasing"));
        }
        Ok(IntegerPartition { parts })
    }

    /// Sorts decreasingly and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        IntegerPartition { parts }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `λ! = λ_1! λ_2! ⋯`
    pub fn factorial(&self) -> BigInt {
        self.parts.iter().map(|&p| factorial(p)).product()
    }

    /// `λ^! = r_1! r_2! ⋯` where `r_i` is the multiplicity of `i`.
    pub fn multiplicity_factorial(&self) -> BigInt {
        let mut out = BigInt::one();
        let mut i = 0;
        while i < self.parts.len() {
            let j = (i..self.parts.len())
                .find(|&j| self.parts[j] != self.parts[i])
                .unwrap_or(self.parts.len());
            out *= factorial(j - i);
            i = j;
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let cols = self.part(0);
        IntegerPartition {
            parts: (0..cols)
                .map(|c| self.parts.iter().filter(|&&p| p > c).count())
                .collect(),
        }
    }

    /// Diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &IntegerPartition) -> bool {
        other.len() <= self.len() && (0..other.len()).all(|i| other.parts[i] <= self.parts[i])
    }

    /// Dominance order `self ⊵ other` (same size assumed).
    pub fn dominates(&self, other: &IntegerPartition) -> bool {
        let mut a = 0;
        let mut b = 0;
        for i in 0..self.len().max(other.len()) {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Parts listed increasingly.
    pub fn reversed_parts(&self) -> Vec<usize> {
        self.parts.iter().rev().copied().collect()
    }

    /// `[λ] = [λ_1] | [λ_2] | ⋯`
    pub fn canonical_set_partition(&self) -> SetPartition {
        SetPartition::from_block_sizes(&self.parts)
    }

    pub fn as_composition(&self) -> Composition {
        Composition {
            parts: self.parts.clone(),
        }
    }

    /// All partitions of `n` in increasing (lexicographic) order.
    pub fn all(n: usize) -> Vec<IntegerPartition> {
        fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<IntegerPartition>) {
            if rem == 0 {
                out.push(IntegerPartition { parts: cur.clone() });
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out.sort();
        out
    }

    /// Partitions contained in `self` of the given size.
    pub fn subpartitions_of_size(&self, size: usize) -> Vec<IntegerPartition> {
        IntegerPartition::all(size)
            .into_iter()
            .filter(|mu| self.contains(mu))
            .collect()
    }
}

/// `(λ!, λ^!, λ^t)`
pub fn partition_stats(lambda: &IntegerPartition) -> (BigInt, BigInt, IntegerPartition) {
    (
        lambda.factorial(),
        lambda.multiplicity_factorial(),
        lambda.transpose(),
    )
}

fn fmt_parts(parts: &[usize], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if parts.is_empty() {
        return write!(f, "∅");
    }
    let s: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
    write!(f, "{}", s.join("."))
}

fn parse_parts(s: &str, allow_zero: bool) -> Result<Vec<usize>> {
    let t = s.trim();
    if t.is_empty() || t == "∅" || t == "-" {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut pos = 0;
    for piece in t.split('.') {
        let v: usize = piece
            .trim()
            .parse()
            .map_err(|_| Error::parse(s, pos, "expected a nonnegative integer part"))?;
        if v == 0 && !allow_zero {
            return Err(Error::parse(s, pos, "parts must be positive"));
        }
        out.push(v);
        pos += piece.len() + 1;
    }
    Ok(out)
}

impl fmt::Display for IntegerPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_parts(&self.parts, f)
    }
}

impl fmt::Debug for IntegerPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntegerPartition({})", self)
    }
}

impl FromStr for IntegerPartition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let parts = parse_parts(s, false)?;
        IntegerPartition::new(parts).map_err(|_| Error::parse(s, 0, "parts must be weakly decreasing"))
    }
}

/// An ordered list of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::invalid("composition parts must be positive"));
        }
        Ok(Composition { parts })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `α! = α_1! α_2! ⋯`
    pub fn factorial(&self) -> BigInt {
        self.parts.iter().map(|&p| factorial(p)).product()
    }

    /// `λ(α)`: the parts sorted decreasingly.
    pub fn sorted(&self) -> IntegerPartition {
        IntegerPartition::from_unsorted(self.parts.clone())
    }

    /// `[α] = [α_1] | [α_2] | ⋯`
    pub fn set_partition(&self) -> SetPartition {
        SetPartition::from_block_sizes(&self.parts)
    }

    pub fn concat(&self, other: &Composition) -> Composition {
        Composition {
            parts: self.parts.iter().chain(other.parts.iter()).copied().collect(),
        }
    }

    /// `α ⊙ β`: last part of `α` merged with the first part of `β`.
    pub fn near_concat(&self, other: &Composition) -> Result<Composition> {
        if self.is_empty() || other.is_empty() {
            return Err(Error::invalid("near concatenation needs two nonempty compositions"));
        }
        let mut parts = self.parts.clone();
        *parts.last_mut().unwrap() += other.parts[0];
        parts.extend_from_slice(&other.parts[1..]);
        Ok(Composition { parts })
    }

    /// All coarsenings `β ≽ α`, indexed by the subset of the `ℓ(α) - 1` gaps
    /// that are merged (bit `g` set means gap `g` is merged).
    pub fn coarsenings(&self) -> Vec<Composition> {
        if self.is_empty() {
            return vec![self.clone()];
        }
        let gaps = self.len() - 1;
        (0u64..(1u64 << gaps))
            .map(|mask| {
                let mut parts = vec![self.parts[0]];
                for g in 0..gaps {
                    if mask >> g & 1 == 1 {
                        *parts.last_mut().unwrap() += self.parts[g + 1];
                    } else {
                        parts.push(self.parts[g + 1]);
                    }
                }
                Composition { parts }
            })
            .collect()
    }

    /// `self ≽ other`: `self` is obtained by merging adjacent parts of `other`.
    pub fn is_coarsening_of(&self, other: &Composition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let mut acc = 0;
        let mut it = self.parts.iter();
        let mut target = it.next().copied();
        for &p in &other.parts {
            acc += p;
            match target {
                Some(t) if acc == t => {
                    acc = 0;
                    target = it.next().copied();
                }
                Some(t) if acc > t => return false,
                _ => {}
            }
        }
        acc == 0 && target.is_none()
    }

    /// All compositions of `n`, lexicographically.
    pub fn all(n: usize) -> Vec<Composition> {
        if n == 0 {
            return vec![Composition::empty()];
        }
        let mut out: Vec<Composition> = Composition {
            parts: vec![1; n],
        }
        .coarsenings();
        out.sort();
        out
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_parts(&self.parts, f)
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Composition({})", self)
    }
}

impl FromStr for Composition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(Composition {
            parts: parse_parts(s, false)?,
        })
    }
}

/// A tuple of nonnegative integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct WeakComposition {
    parts: Vec<usize>,
}

impl WeakComposition {
    pub fn new(parts: Vec<usize>) -> Self {
        WeakComposition { parts }
    }

    /// Builds from signed entries; `None` if any entry is negative.
    pub fn from_signed(parts: &[i64]) -> Option<Self> {
        parts
            .iter()
            .map(|&p| usize::try_from(p).ok())
            .collect::<Option<Vec<_>>>()
            .map(WeakComposition::new)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn factorial(&self) -> BigInt {
        self.parts.iter().map(|&p| factorial(p)).product()
    }

    /// `[α_1] | [α_2] | ⋯` with zero parts contributing nothing.
    pub fn set_partition(&self) -> SetPartition {
        SetPartition::from_block_sizes(&self.parts)
    }

    pub fn without_zeros(&self) -> Composition {
        Composition {
            parts: self.parts.iter().copied().filter(|&p| p > 0).collect(),
        }
    }
}

impl fmt::Display for WeakComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// A skew diagram `outer / inner`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewShape {
    outer: IntegerPartition,
    inner: IntegerPartition,
}

impl SkewShape {
    pub fn new(outer: IntegerPartition, inner: IntegerPartition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::invalid(format!(
                "inner shape {} is not contained in {}",
                inner, outer
            )));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: IntegerPartition) -> Self {
        SkewShape {
            outer,
            inner: IntegerPartition::empty(),
        }
    }

    pub fn outer(&self) -> &IntegerPartition {
        &self.outer
    }

    pub fn inner(&self) -> &IntegerPartition {
        &self.inner
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Number of rows of the outer shape.
    pub fn rows(&self) -> usize {
        self.outer.len()
    }

    /// Box count per row, top to bottom.
    pub fn row_lengths(&self) -> Vec<usize> {
        (0..self.rows())
            .map(|i| self.outer.part(i) - self.inner.part(i))
            .collect()
    }

    /// Boxes `(row, column)` in reading order, 0-based absolute columns.
    pub fn boxes(&self) -> Vec<(usize, usize)> {
        (0..self.rows())
            .flat_map(|i| (self.inner.part(i)..self.outer.part(i)).map(move |j| (i, j)))
            .collect()
    }

    pub fn contains_box(&self, row: usize, col: usize) -> bool {
        row < self.rows() && col >= self.inner.part(row) && col < self.outer.part(row)
    }

    pub fn transpose(&self) -> SkewShape {
        SkewShape {
            outer: self.outer.transpose(),
            inner: self.inner.transpose(),
        }
    }

    /// The ribbon with row lengths `α` read top to bottom.
    pub fn ribbon(alpha: &Composition) -> SkewShape {
        let k = alpha.len();
        let mut outer = vec![0; k];
        let mut inner = vec![0; k];
        for i in (0..k).rev() {
            if i + 1 == k {
                outer[i] = alpha.parts()[i];
            } else {
                inner[i] = outer[i + 1] - 1;
                outer[i] = inner[i] + alpha.parts()[i];
            }
        }
        SkewShape {
            outer: IntegerPartition::from_unsorted(outer),
            inner: IntegerPartition::from_unsorted(inner),
        }
    }

    /// `λ·μ`: the rightmost column of `μ` directly below the leftmost column of `λ`.
    pub fn concat(lambda: &IntegerPartition, mu: &IntegerPartition) -> SkewShape {
        if mu.is_empty() {
            return SkewShape::straight(lambda.clone());
        }
        if lambda.is_empty() {
            return SkewShape::straight(mu.clone());
        }
        let shift = mu.part(0) - 1;
        let outer: Vec<usize> = lambda
            .parts()
            .iter()
            .map(|&p| p + shift)
            .chain(mu.parts().iter().copied())
            .collect();
        let inner = vec![shift; lambda.len()];
        SkewShape {
            outer: IntegerPartition::from_unsorted(outer),
            inner: IntegerPartition::from_unsorted(inner),
        }
    }

    /// `λ⊙μ`: the top row of `μ` directly left of the bottom row of `λ`.
    pub fn near_concat(lambda: &IntegerPartition, mu: &IntegerPartition) -> Result<SkewShape> {
        if lambda.is_empty() || mu.is_empty() {
            return Err(Error::invalid("near concatenation needs two nonempty partitions"));
        }
        let shift = mu.part(0);
        let outer: Vec<usize> = lambda
            .parts()
            .iter()
            .map(|&p| p + shift)
            .chain(mu.parts()[1..].iter().copied())
            .collect();
        let inner = vec![shift; lambda.len() - 1];
        Ok(SkewShape {
            outer: IntegerPartition::from_unsorted(outer),
            inner: IntegerPartition::from_unsorted(inner),
        })
    }

    /// All skew shapes `λ/μ` of the given size with `μ ⊆ λ` and `|λ| ≤ max_outer`.
    pub fn all_of_size(size: usize, max_outer: usize) -> Vec<SkewShape> {
        let mut out = Vec::new();
        for outer_size in size..=max_outer {
            for outer in IntegerPartition::all(outer_size) {
                for inner in outer.subpartitions_of_size(outer_size - size) {
                    out.push(SkewShape {
                        outer: outer.clone(),
                        inner,
                    });
                }
            }
        }
        out
    }

    /// All skew diagrams of the given size with no empty row and no empty
    /// column; a finite set, in lexicographic order.
    pub fn all_without_empty_lines(size: usize) -> Vec<SkewShape> {
        fn extend(rows: &mut Vec<(usize, usize)>, left: usize, out: &mut Vec<SkewShape>) {
            if left == 0 {
                let width = rows[0].1;
                let covered = (0..width).all(|c| rows.iter().any(|&(m, l)| m <= c && c < l));
                if rows.last().is_some_and(|r| r.0 == 0) && covered {
                    let outer = IntegerPartition { parts: rows.iter().map(|r| r.1).collect() };
                    let inner = IntegerPartition::from_unsorted(rows.iter().map(|r| r.0).collect());
                    out.push(SkewShape { outer, inner });
                }
                return;
            }
            let (max_m, max_l) = rows.last().copied().unwrap_or((left, left));
            for l in 1..=max_l {
                for m in 0..l.min(max_m + 1) {
                    if l - m <= left {
                        rows.push((m, l));
                        extend(rows, left - (l - m), out);
                        rows.pop();
                    }
                }
            }
        }
        let mut out = Vec::new();
        if size > 0 {
            extend(&mut Vec::new(), size, &mut out);
        }
        out.sort();
        out
    }
}

/// Whether `shape_concat` builds `λ·μ` or `λ⊙μ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConcatMode {
    Concat,
    NearConcat,
}

pub fn shape_concat(
    lambda: &IntegerPartition,
    mu: &IntegerPartition,
    mode: ConcatMode,
) -> Result<SkewShape> {
    match mode {
        ConcatMode::Concat => Ok(SkewShape::concat(lambda, mu)),
        ConcatMode::NearConcat => SkewShape::near_concat(lambda, mu),
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

impl fmt::Debug for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SkewShape({})", self)
    }
}

impl FromStr for SkewShape {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (a, b) = match s.split_once('/') {
            Some((a, b)) => (a, b),
            None => (s, ""),
        };
        let outer: IntegerPartition = a.parse()?;
        let inner: IntegerPartition = b.parse().map_err(|e| match e {
            Error::Parse {
                position, message, ..
            } => Error::parse(s, position + a.len() + 1, message),
            other => other,
        })?;
        SkewShape::new(outer, inner).map_err(|e| Error::parse(s, a.len(), e.to_string()))
    }
}
