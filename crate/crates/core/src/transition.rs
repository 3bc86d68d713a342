//! Change-of-basis matrices between two bases indexed by the same key set.

use std::collections::HashMap;
use std::hash::Hash;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::QMatrix;
use crate::lincomb::LinComb;
use crate::rational::Q;

/// `forward[i][j]` is the coefficient of target element `keys[j]` in source
/// element `keys[i]`; `backward` is its inverse.
#[derive(Clone, Debug)]
pub struct Transition<K> {
    keys: Vec<K>,
    index: HashMap<K, usize>,
    forward: QMatrix,
    backward: QMatrix,
}

impl<K: Ord + Clone + Hash> Transition<K> {
    pub fn new(keys: Vec<K>, forward: QMatrix) -> Result<Self> {
        let backward = forward
            .inverse()
            .ok_or_else(|| Error::Internal("singular transition matrix".into()))?;
        let index = keys.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
        Ok(Transition {
            keys,
            index,
            forward,
            backward,
        })
    }

    pub fn keys(&self) -> &[K] {
        &self.keys
    }

    pub fn forward(&self) -> &QMatrix {
        &self.forward
    }

    pub fn backward(&self) -> &QMatrix {
        &self.backward
    }

    fn apply(&self, m: &QMatrix, lc: &LinComb<K>) -> Result<LinComb<K>> {
        let mut v = vec![Q::zero(); self.keys.len()];
        for (k, c) in lc.iter() {
            let i = *self
                .index
                .get(k)
                .ok_or_else(|| Error::Internal("index outside the transition key set".into()))?;
            v[i] = c.clone();
        }
        Ok(m
            .left_mul_vec(&v)
            .into_iter()
            .zip(self.keys.iter())
            .map(|(c, k)| (k.clone(), c))
            .collect())
    }

    pub fn to_target(&self, lc: &LinComb<K>) -> Result<LinComb<K>> {
        self.apply(&self.forward, lc)
    }

    pub fn to_source(&self, lc: &LinComb<K>) -> Result<LinComb<K>> {
        self.apply(&self.backward, lc)
    }
}

/// Solves `target = Σ c_k · image(k)` when every `image(k)` has least key
/// `k`. Fails if that triangularity does not hold.
pub fn triangular_solve<K: Ord + Clone>(
    target: &LinComb<K>,
    image: impl FnMut(&K) -> Result<LinComb<K>>,
) -> Result<LinComb<K>> {
    solve(target, image, false)
}

/// As `triangular_solve`, for images whose greatest key is `k`.
pub fn triangular_solve_from_top<K: Ord + Clone>(
    target: &LinComb<K>,
    image: impl FnMut(&K) -> Result<LinComb<K>>,
) -> Result<LinComb<K>> {
    solve(target, image, true)
}

fn solve<K: Ord + Clone>(
    target: &LinComb<K>,
    mut image: impl FnMut(&K) -> Result<LinComb<K>>,
    from_top: bool,
) -> Result<LinComb<K>> {
    let pick = |lc: &LinComb<K>| {
        if from_top {
            lc.trailing().map(|(k, c)| (k.clone(), c.clone()))
        } else {
            lc.leading().map(|(k, c)| (k.clone(), c.clone()))
        }
    };
    let mut rest = target.clone();
    let mut out = LinComb::zero();
    while let Some((k, c)) = pick(&rest) {
        let img = image(&k)?;
        let lead = match pick(&img) {
            Some((lk, lc)) if lk == k => lc,
            _ => {
                return Err(Error::Internal(
                    "basis expansion is not triangular in the basis order".into(),
                ))
            }
        };
        let factor = c / lead;
        rest.add_scaled(&img, &-&factor);
        out.add_term(k, factor);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn round_trip_through_transition() {
        let keys = vec![1u32, 2];
        let f = QMatrix::from_rows(vec![vec![q(1), q(1)], vec![q(0), q(2)]]);
        let t = Transition::new(keys, f).unwrap();
        let src: LinComb<u32> = vec![(1, q(3)), (2, q(-1))].into_iter().collect();
        let tgt = t.to_target(&src).unwrap();
        assert_eq!(tgt.coeff(&2), q(1));
        assert_eq!(t.to_source(&tgt).unwrap(), src);
    }

    #[test]
    fn triangular_solve_recovers_coefficients() {
        let image = |k: &u32| -> Result<LinComb<u32>> {
            Ok((*k..4).map(|j| (j, q(1 + j as i64))).collect())
        };
        let target: LinComb<u32> = vec![(1, q(2)), (2, q(3)), (3, q(4))].into_iter().collect();
        let sol = triangular_solve(&target, image).unwrap();
        let mut back = LinComb::zero();
        for (k, c) in sol.iter() {
            back.add_scaled(&image(k).unwrap(), c);
        }
        assert_eq!(back, target);
        let top = |k: &u32| -> Result<LinComb<u32>> { Ok((0..=*k).map(|j| (j, q(1 + j as i64))).collect()) };
        let sol = triangular_solve_from_top(&target, top).unwrap();
        let mut back = LinComb::zero();
        for (k, c) in sol.iter() {
            back.add_scaled(&top(k).unwrap(), c);
        }
        assert_eq!(back, target);
        let bad = |_: &u32| -> Result<LinComb<u32>> { Ok(LinComb::single(0, q(1))) };
        assert!(triangular_solve(&target, bad).is_err());
    }
}
