use std::fmt;

use itertools::Itertools;

use super::partition::{IntegerPartition, SkewShape};
use super::permutation::Permutation;
use super::set_partition::SetPartition;
use crate::error::{Error, Result};

/// A bijective filling of a skew shape by `1, …, n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct YoungTableau {
    shape: SkewShape,
    rows: Vec<Vec<usize>>,
}

impl YoungTableau {
    /// `rows[i]` lists the entries of row `i` left to right.
    pub fn new(shape: SkewShape, rows: Vec<Vec<usize>>) -> Result<Self> {
        if rows.len() != shape.rows() || rows.iter().map(|r| r.len()).ne(shape.row_lengths()) {
            return Err(Error::invalid("tableau rows do not match the shape"));
        }
        let flat: Vec<usize> = rows.iter().flatten().copied().collect();
        Permutation::new(flat)?;
        Ok(YoungTableau { shape, rows })
    }

    /// Fills the shape in reading order with `δ(1), δ(2), …`.
    pub fn from_reading_word(shape: SkewShape, delta: &Permutation) -> Result<Self> {
        if delta.size() != shape.size() {
            return Err(Error::SizeMismatch {
                left: delta.size(),
                right: shape.size(),
            });
        }
        let mut it = delta.images().iter().copied();
        let rows = shape
            .row_lengths()
            .into_iter()
            .map(|len| it.by_ref().take(len).collect())
            .collect();
        Ok(YoungTableau { shape, rows })
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    /// `δ_t`: rows read left to right, top to bottom.
    pub fn reading_word(&self) -> Permutation {
        Permutation::new(self.rows.iter().flatten().copied().collect())
            .expect("tableau entries are a bijection")
    }

    /// All tableaux whose rows hold the same sets as the rows of `self`.
    pub fn row_equivalence_class(&self) -> Vec<YoungTableau> {
        self.rows
            .iter()
            .map(|r| r.iter().copied().permutations(r.len()).collect::<Vec<_>>())
            .multi_cartesian_product_or_unit()
            .map(|rows| YoungTableau {
                shape: self.shape.clone(),
                rows,
            })
            .collect()
    }

    /// Entry sets of the columns, left to right.
    pub fn columns(&self) -> Vec<Vec<usize>> {
        let width = self.shape.outer().part(0);
        (0..width)
            .map(|c| {
                self.rows
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| self.shape.contains_box(*i, c))
                    .map(|(i, r)| r[c - self.shape.inner().part(i)])
                    .collect::<Vec<_>>()
            })
            .filter(|col| !col.is_empty())
            .collect()
    }

    /// `C_t`: permutations of the entry values preserving every column setwise.
    pub fn column_stabilizer(&self) -> Result<Vec<Permutation>> {
        if !self.shape.is_straight() {
            return Err(Error::invalid("column stabilizer needs a straight shape"));
        }
        let n = self.size();
        let cols = self.columns();
        Ok(cols
            .iter()
            .map(|c| c.iter().copied().permutations(c.len()).collect::<Vec<_>>())
            .multi_cartesian_product_or_unit()
            .map(|images| {
                let mut out: Vec<usize> = (1..=n).collect();
                for (col, img) in cols.iter().zip(&images) {
                    for (&from, &to) in col.iter().zip(img) {
                        out[from - 1] = to;
                    }
                }
                Permutation::new(out).expect("column permutations compose to a bijection")
            })
            .collect())
    }
}

trait CartesianOrUnit: Iterator<Item = Vec<Vec<usize>>> + Sized {
    /// Like `multi_cartesian_product` but yields one empty tuple for no factors.
    fn multi_cartesian_product_or_unit(self) -> Box<dyn Iterator<Item = Vec<Vec<usize>>>>;
}

impl<I> CartesianOrUnit for I
where
    I: Iterator<Item = Vec<Vec<usize>>> + Sized,
{
    fn multi_cartesian_product_or_unit(self) -> Box<dyn Iterator<Item = Vec<Vec<usize>>>> {
        let factors: Vec<Vec<Vec<usize>>> = self.collect();
        if factors.is_empty() {
            Box::new(std::iter::once(Vec::new()))
        } else {
            Box::new(
                factors
                    .into_iter()
                    .map(|f| f.into_iter())
                    .multi_cartesian_product(),
            )
        }
    }
}

impl fmt::Display for YoungTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.rows.iter().map(|r| r.iter().join(",")).collect();
        write!(f, "{}:[{}]", self.shape, rows.join("|"))
    }
}

impl fmt::Debug for YoungTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "YoungTableau({})", self)
    }
}

/// The tableau of `π` (rows are the blocks, longest first, ties by least
/// element) together with its reading word `δ_π`.
pub fn delta_pi(pi: &SetPartition) -> (YoungTableau, Permutation) {
    let mut rows: Vec<Vec<usize>> = pi.blocks().to_vec();
    rows.sort_by(|a, b| b.len().cmp(&a.len()));
    let t = YoungTableau {
        shape: SkewShape::straight(pi.shape()),
        rows,
    };
    let d = t.reading_word();
    (t, d)
}

/// A semistandard filling; rows weakly increase, columns strictly increase.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SemistandardTableau {
    shape: SkewShape,
    rows: Vec<Vec<usize>>,
}

impl SemistandardTableau {
    pub fn new(shape: SkewShape, rows: Vec<Vec<usize>>) -> Result<Self> {
        if rows.len() != shape.rows() || rows.iter().map(|r| r.len()).ne(shape.row_lengths()) {
            return Err(Error::invalid("tableau rows do not match the shape"));
        }
        let t = SemistandardTableau { shape, rows };
        if !t.is_semistandard() {
            return Err(Error::invalid("filling is not semistandard"));
        }
        Ok(t)
    }

    fn entry(&self, row: usize, col: usize) -> Option<usize> {
        if self.shape.contains_box(row, col) {
            Some(self.rows[row][col - self.shape.inner().part(row)])
        } else {
            None
        }
    }

    fn is_semistandard(&self) -> bool {
        self.shape.boxes().into_iter().all(|(i, j)| {
            let v = self.entry(i, j).unwrap();
            v >= 1
                && (j == 0 || self.entry(i, j - 1).map_or(true, |l| l <= v))
                && (i == 0 || self.entry(i - 1, j).map_or(true, |u| u < v))
        })
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Entries `c(T_1), …, c(T_n)` with boxes labelled in row reading order.
    pub fn reading_entries(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    /// `content[v-1]` = number of entries equal to `v`.
    pub fn content(&self) -> Vec<usize> {
        let max = self.reading_entries().into_iter().max().unwrap_or(0);
        let mut out = vec![0; max];
        for v in self.reading_entries() {
            out[v - 1] += 1;
        }
        out
    }
}

impl fmt::Display for SemistandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.rows.iter().map(|r| r.iter().join(",")).collect();
        write!(f, "{}:[{}]", self.shape, rows.join("|"))
    }
}

impl fmt::Debug for SemistandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SemistandardTableau({})", self)
    }
}

/// Backtracking over boxes in reading order. `budget[v-1]` caps how many
/// times `v` may still be used.
fn fill_ssyt(
    shape: &SkewShape,
    boxes: &[(usize, usize)],
    idx: usize,
    grid: &mut Vec<Vec<usize>>,
    budget: &mut [usize],
    out: &mut Vec<SemistandardTableau>,
) {
    if idx == boxes.len() {
        let rows = (0..shape.rows())
            .map(|i| grid[i][shape.inner().part(i)..shape.outer().part(i)].to_vec())
            .collect();
        out.push(SemistandardTableau {
            shape: shape.clone(),
            rows,
        });
        return;
    }
    let (i, j) = boxes[idx];
    let mut lo = 1;
    if j > 0 && shape.contains_box(i, j - 1) {
        lo = lo.max(grid[i][j - 1]);
    }
    if i > 0 && shape.contains_box(i - 1, j) {
        lo = lo.max(grid[i - 1][j] + 1);
    }
    for v in lo..=budget.len() {
        if budget[v - 1] == 0 {
            continue;
        }
        budget[v - 1] -= 1;
        grid[i][j] = v;
        fill_ssyt(shape, boxes, idx + 1, grid, budget, out);
        budget[v - 1] += 1;
    }
    grid[i][j] = 0;
}

fn ssyt_with_budget(shape: &SkewShape, budget: &mut [usize]) -> Vec<SemistandardTableau> {
    let boxes = shape.boxes();
    let width = shape.outer().part(0);
    let mut grid = vec![vec![0; width]; shape.rows()];
    let mut out = Vec::new();
    fill_ssyt(shape, &boxes, 0, &mut grid, budget, &mut out);
    out
}

/// All semistandard tableaux of the shape with entries in `1..=max_entry`.
pub fn enumerate_ssyt(shape: &SkewShape, max_entry: usize) -> Vec<SemistandardTableau> {
    let mut budget = vec![shape.size(); max_entry];
    ssyt_with_budget(shape, &mut budget)
}

/// All semistandard tableaux of the shape with the given content.
pub fn ssyt_with_content(shape: &SkewShape, content: &[usize]) -> Vec<SemistandardTableau> {
    if content.iter().sum::<usize>() != shape.size() {
        return Vec::new();
    }
    let mut budget = content.to_vec();
    ssyt_with_budget(shape, &mut budget)
}

/// `K_ν^{λ/μ}`: semistandard tableaux of the shape with content `ν`.
pub fn kostka(shape: &SkewShape, nu: &IntegerPartition) -> usize {
    ssyt_with_content(shape, nu.parts()).len()
}

/// Number of standard Young tableaux of the shape.
pub fn standard_tableaux_count(shape: &SkewShape) -> usize {
    ssyt_with_content(shape, &vec![1; shape.size()]).len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(s: &str) -> SkewShape {
        s.parse().unwrap()
    }

    #[test]
    fn delta_pi_examples() {
        let (_, d) = delta_pi(&"169/2/378/45".parse().unwrap());
        assert_eq!(d, "169378452".parse().unwrap());
        let (_, d) = delta_pi(&"12/3".parse().unwrap());
        assert!(d.is_identity());
        let (t, d) = delta_pi(&"13/2".parse().unwrap());
        assert_eq!(d, "132".parse().unwrap());
        assert_eq!(t.rows(), &[vec![1, 3], vec![2]]);
    }

    #[test]
    fn delta_pi_is_injective() {
        for n in 0..=6 {
            let mut seen = std::collections::HashSet::new();
            for p in SetPartition::all(n) {
                let (t, d) = delta_pi(&p);
                assert!(seen.insert((t.shape().clone(), d)));
            }
        }
    }

    #[test]
    fn skew_reading_word() {
        let t = YoungTableau::new(
            shape("5.3.3.2/2.2"),
            vec![vec![3, 8, 7], vec![2], vec![1, 9, 6], vec![5, 4]],
        )
        .unwrap();
        assert_eq!(t.reading_word(), "387219654".parse().unwrap());
    }

    #[test]
    fn row_class_of_small_tableau() {
        let t = YoungTableau::new(shape("2.1"), vec![vec![1, 2], vec![3]]).unwrap();
        let class = t.row_equivalence_class();
        assert_eq!(class.len(), 2);
        assert!(class.iter().any(|c| c.rows() == [vec![2, 1], vec![3]]));
    }

    #[test]
    fn column_stabilizers() {
        let row = YoungTableau::new(shape("3"), vec![vec![1, 2, 3]]).unwrap();
        let c = row.column_stabilizer().unwrap();
        assert_eq!(c.len(), 1);
        assert!(c[0].is_identity());
        let t = YoungTableau::new(shape("2.1"), vec![vec![1, 2], vec![3]]).unwrap();
        let c = t.column_stabilizer().unwrap();
        assert_eq!(c.len(), 2);
        assert!(c.contains(&"321".parse().unwrap()));
        let skew = YoungTableau::new(shape("2.1/1"), vec![vec![1], vec![2]]).unwrap();
        assert!(skew.column_stabilizer().is_err());
    }

    #[test]
    fn kostka_examples() {
        assert_eq!(kostka(&shape("2.1"), &"1.1.1".parse().unwrap()), 2);
        for n in 1..=5 {
            for l in IntegerPartition::all(n) {
                assert_eq!(kostka(&SkewShape::straight(l.clone()), &l), 1);
            }
        }
        let all = enumerate_ssyt(&shape("2.1"), 3);
        assert!(all.iter().any(|t| t.rows() == [vec![1, 2], vec![3]]));
        assert_eq!(all.len(), 8);
    }

    /// Counts fillings by trying every word of the right content.
    fn brute_kostka(shape: &SkewShape, nu: &IntegerPartition) -> usize {
        let word: Vec<usize> = nu
            .parts()
            .iter()
            .enumerate()
            .flat_map(|(i, &c)| std::iter::repeat(i + 1).take(c))
            .collect();
        let lens = shape.row_lengths();
        word.iter()
            .copied()
            .permutations(word.len())
            .unique()
            .filter(|w| {
                let mut it = w.iter().copied();
                let rows: Vec<Vec<usize>> =
                    lens.iter().map(|&l| it.by_ref().take(l).collect()).collect();
                SemistandardTableau::new(shape.clone(), rows).is_ok()
            })
            .count()
    }

    #[test]
    fn kostka_matches_brute_force() {
        for n in 1..=5 {
            for l in IntegerPartition::all(n) {
                for nu in IntegerPartition::all(n) {
                    let s = SkewShape::straight(l.clone());
                    assert_eq!(kostka(&s, &nu), brute_kostka(&s, &nu), "{} {}", l, nu);
                }
            }
        }
        let s = shape("3.2/1");
        for nu in IntegerPartition::all(4) {
            assert_eq!(kostka(&s, &nu), brute_kostka(&s, &nu));
        }
    }

    #[test]
    fn standard_counts() {
        assert_eq!(standard_tableaux_count(&shape("3.2")), 5);
        assert_eq!(standard_tableaux_count(&shape("2.2.1/1")), 5);
    }
}
