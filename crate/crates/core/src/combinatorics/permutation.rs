use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};

/// A permutation of `{1, …, n}` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &x in &images {
            if x == 0 || x > n || seen[x] {
                return Err(Error::invalid(format!(
                    "not a permutation of 1..{}: {:?}",
                    n, images
                )));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `δ(i)` for `1 ≤ i ≤ n`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| x == i + 1)
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch {
                left: self.size(),
                right: other.size(),
            });
        }
        Ok(Permutation {
            images: other.images.iter().map(|&i| self.apply(i)).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.size()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x - 1] = i + 1;
        }
        Permutation { images }
    }

    pub fn inversions(&self) -> usize {
        let n = self.size();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.images[i] > self.images[j])
            .count()
    }

    pub fn sign(&self) -> i32 {
        if self.inversions() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// `δ|η`: `δ` on the first `n` letters, `η` shifted by `n` on the rest.
    pub fn shifted_concat(&self, other: &Permutation) -> Permutation {
        let n = self.size();
        Permutation {
            images: self
                .images
                .iter()
                .copied()
                .chain(other.images.iter().map(|&x| x + n))
                .collect(),
        }
    }

    /// All permutations of `[n]` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        (1..=n)
            .permutations(n)
            .map(|images| Permutation { images })
            .collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.images.iter().join(","))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({})", self)
    }
}

impl FromStr for Permutation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let mut images = Vec::new();
        if t.contains(',') {
            let mut pos = 0;
            for piece in t.split(',') {
                let v: usize = piece
                    .trim()
                    .parse()
                    .map_err(|_| Error::parse(s, pos, "expected a positive integer"))?;
                images.push(v);
                pos += piece.len() + 1;
            }
        } else {
            for (i, c) in t.char_indices() {
                let v = c
                    .to_digit(10)
                    .ok_or_else(|| Error::parse(s, i, "expected a digit"))?;
                images.push(v as usize);
            }
        }
        Permutation::new(images).map_err(|e| Error::parse(s, 0, e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn shifted_concat_examples() {
        assert_eq!(perm("13425").shifted_concat(&perm("123")), perm("13425678"));
        assert_eq!(
            Permutation::identity(2).shifted_concat(&Permutation::identity(3)),
            Permutation::identity(5)
        );
        assert_eq!(perm("21").shifted_concat(&perm("21")), perm("2143"));
    }

    #[test]
    fn compose_and_inverse() {
        let a = perm("231");
        let b = perm("132");
        assert_eq!(a.compose(&b).unwrap(), perm("213"));
        assert!(a.compose(&a.inverse()).unwrap().is_identity());
        assert_eq!(a.sign(), 1);
        assert_eq!(b.sign(), -1);
    }

    #[test]
    fn text_forms() {
        let p = perm("1,6,9,3,7,8,4,5,2");
        assert_eq!(p, perm("169378452"));
        assert_eq!(p.to_string(), "1,6,9,3,7,8,4,5,2");
        assert!("122".parse::<Permutation>().is_err());
        assert!("1,x".parse::<Permutation>().is_err());
    }

    #[test]
    fn enumeration() {
        assert_eq!(Permutation::all(4).len(), 24);
        assert_eq!(Permutation::all(0).len(), 1);
        let v = Permutation::all(3);
        let mut s = v.clone();
        s.sort();
        assert_eq!(v, s);
    }
}
