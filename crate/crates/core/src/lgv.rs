//! Lattice paths, the Lindström–Gessel–Viennot swap on path tuples, and the
//! signed monomial sums it cancels.

use std::collections::HashSet;
use std::fmt;

use itertools::Itertools;
use num_traits::One;

use crate::combinatorics::{enumerate_ssyt, Permutation, SemistandardTableau, SkewShape};
use crate::error::{Error, Result};
use crate::ncpoly::{NCPolynomial, Word};
use crate::ncsym::{NcBasis, NcExpr};
use crate::ncschur::determinant_row_parts;
use crate::rational::{q, q_int, Q};

/// A path of unit N and E steps from `(start_x, 1)` that ends in an infinite
/// northward tail, stored as the heights of its E steps.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticePath {
    start_x: i64,
    e_heights: Vec<usize>,
}

impl LatticePath {
    pub fn new(start_x: i64, e_heights: Vec<usize>) -> Result<Self> {
        if e_heights.first().is_some_and(|&h| h == 0) {
            return Err(Error::invalid("E steps must have height at least 1"));
        }
        if e_heights.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::invalid("E step heights must weakly increase"));
        }
        Ok(Self { start_x, e_heights })
    }

    pub fn start_x(&self) -> i64 {
        self.start_x
    }

    pub fn e_heights(&self) -> &[usize] {
        &self.e_heights
    }

    pub fn end_x(&self) -> i64 {
        self.start_x + self.e_heights.len() as i64
    }

    /// The heights `[low, high]` the path covers on column `x`; `None` for
    /// `high` means the infinite tail.
    fn column(&self, x: i64) -> Option<(usize, Option<usize>)> {
        if x < self.start_x || x > self.end_x() {
            return None;
        }
        let t = (x - self.start_x) as usize;
        let low = if t == 0 { 1 } else { self.e_heights[t - 1] };
        Some((low, self.e_heights.get(t).copied()))
    }

    /// The common lattice point of the two paths that is greatest in `(x, y)`,
    /// which is the last one met along either path.
    pub fn last_intersection(&self, other: &LatticePath) -> Option<(i64, usize)> {
        let lo = self.start_x.max(other.start_x);
        let hi = self.end_x().min(other.end_x());
        (lo..=hi).rev().find_map(|x| {
            let (a_lo, a_hi) = self.column(x)?;
            let (b_lo, b_hi) = other.column(x)?;
            let low = a_lo.max(b_lo);
            let high = match (a_hi, b_hi) {
                (Some(a), Some(b)) => a.min(b),
                (Some(a), None) | (None, Some(a)) => a,
                (None, None) => return Some((x, usize::MAX)),
            };
            (low <= high).then_some((x, high))
        })
    }

    pub fn intersects(&self, other: &LatticePath) -> bool {
        self.last_intersection(other).is_some()
    }
}

impl fmt::Display for LatticePath {
    /// `start_x: h1,h2,…`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.start_x, self.e_heights.iter().join(","))
    }
}

/// A tuple in `𝒫(ε, λ/μ)`: path `i` runs from `(μ_{ε(i)} − ε(i), 1)` to
/// `(λ_i − i, ∞)`. E steps are labelled `1..n` path by path, left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PathTuple {
    shape: SkewShape,
    eps: Permutation,
    paths: Vec<LatticePath>,
}

fn start_x(shape: &SkewShape, row: usize) -> i64 {
    shape.inner().part(row - 1) as i64 - row as i64
}

fn end_x(shape: &SkewShape, row: usize) -> i64 {
    shape.outer().part(row - 1) as i64 - row as i64
}

impl PathTuple {
    /// Recovers `ε` from the start points and checks the endpoints.
    pub fn new(shape: SkewShape, paths: Vec<LatticePath>) -> Result<Self> {
        let l = shape.rows();
        if paths.len() != l {
            return Err(Error::invalid(format!("expected {} paths, got {}", l, paths.len())));
        }
        let mut images = Vec::with_capacity(l);
        for (i, p) in paths.iter().enumerate() {
            let row = i + 1;
            if p.end_x() != end_x(&shape, row) {
                return Err(Error::invalid(format!("path {} ends at x = {}, not {}", row, p.end_x(), end_x(&shape, row))));
            }
            let j = (1..=l)
                .find(|&j| start_x(&shape, j) == p.start_x)
                .ok_or_else(|| Error::invalid(format!("path {} starts at no admissible point", row)))?;
            images.push(j);
        }
        let eps = Permutation::new(images)?;
        Ok(Self { shape, eps, paths })
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn eps(&self) -> &Permutation {
        &self.eps
    }

    pub fn paths(&self) -> &[LatticePath] {
        &self.paths
    }

    pub fn size(&self) -> usize {
        self.paths.iter().map(|p| p.e_heights.len()).sum()
    }

    pub fn sign(&self) -> i64 {
        self.eps.sign() as i64
    }

    /// `ht(i_P)` for `i = 1..n`.
    pub fn label_heights(&self) -> Vec<usize> {
        self.paths.iter().flat_map(|p| p.e_heights.iter().copied()).collect()
    }

    /// `x^{(δ,P)} = x_{ht(δ(1)_P)} ⋯ x_{ht(δ(n)_P)}`.
    pub fn monomial(&self, delta: &Permutation) -> Result<Word> {
        let n = self.size();
        if delta.size() != n {
            return Err(Error::SizeMismatch { left: delta.size(), right: n });
        }
        let hts = self.label_heights();
        Ok(Word::from_usize(&(1..=n).map(|i| hts[delta.apply(i) - 1]).collect::<Vec<_>>()))
    }

    pub fn is_non_intersecting(&self) -> bool {
        self.paths
            .iter()
            .tuple_combinations()
            .all(|(a, b)| !a.intersects(b))
    }

    /// Row `i` of the filling is the E heights of path `i`; `None` unless the
    /// result is semistandard.
    pub fn to_ssyt(&self) -> Option<SemistandardTableau> {
        let rows = self.paths.iter().map(|p| p.e_heights.clone()).collect();
        SemistandardTableau::new(self.shape.clone(), rows).ok()
    }

    /// One path per line.
    pub fn dump(&self) -> String {
        self.paths.iter().map(|p| p.to_string()).join("\n")
    }
}

impl fmt::Display for PathTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ε={} [{}]", self.shape, self.eps, self.paths.iter().join(" | "))
    }
}

/// The swap `ι(P)` with its label exchange permutation `ξ_P`.
///
/// Picks the largest `i` whose path meets another, the largest `j` whose path
/// meets `P_i`, and exchanges the parts after their last common point.
pub fn lgv_swap(p: &PathTuple) -> (PathTuple, Permutation) {
    let l = p.paths.len();
    let n = p.size();
    let pick = (0..l).rev().find_map(|i| {
        (0..l)
            .rev()
            .filter(|&j| j != i)
            .find_map(|j| p.paths[i].last_intersection(&p.paths[j]).map(|pt| (i, j, pt)))
    });
    let Some((i, j, (a, _))) = pick else {
        return (p.clone(), Permutation::identity(n));
    };

    // Steps are tagged with (path, index) so that ξ can follow them.
    let tagged: Vec<Vec<(usize, usize, usize)>> = p
        .paths
        .iter()
        .enumerate()
        .map(|(r, path)| path.e_heights.iter().enumerate().map(|(t, &h)| (r, t, h)).collect())
        .collect();
    let split = |r: usize| (a - p.paths[r].start_x) as usize;
    let mut new_tagged = tagged.clone();
    let (si, sj) = (split(i), split(j));
    new_tagged[i] = tagged[j][..sj].iter().chain(&tagged[i][si..]).copied().collect();
    new_tagged[j] = tagged[i][..si].iter().chain(&tagged[j][sj..]).copied().collect();

    let mut paths = p.paths.clone();
    paths[i] = LatticePath {
        start_x: p.paths[j].start_x,
        e_heights: new_tagged[i].iter().map(|s| s.2).collect(),
    };
    paths[j] = LatticePath {
        start_x: p.paths[i].start_x,
        e_heights: new_tagged[j].iter().map(|s| s.2).collect(),
    };
    let mut eps_images = p.eps.images().to_vec();
    eps_images.swap(i, j);

    let offsets: Vec<usize> = p
        .paths
        .iter()
        .scan(0, |acc, path| {
            let o = *acc;
            *acc += path.e_heights.len();
            Some(o)
        })
        .collect();
    let mut xi = vec![0; n];
    for (label, &(r, t, _)) in new_tagged.iter().flatten().enumerate() {
        xi[offsets[r] + t] = label + 1;
    }
    let q = PathTuple {
        shape: p.shape.clone(),
        eps: Permutation::new(eps_images).expect("swapping two images keeps a permutation"),
        paths,
    };
    (q, Permutation::new(xi).expect("labels are a bijection"))
}

/// All weakly increasing sequences of `len` values in `1..=k`.
fn weak_sequences(len: usize, k: usize) -> Vec<Vec<usize>> {
    (1..=k).combinations_with_replacement(len).collect()
}

/// Every tuple in `𝒫(ε, λ/μ)` whose E heights are at most `k`; empty when some
/// path would need a negative number of E steps.
pub fn enumerate_path_tuples(shape: &SkewShape, eps: &Permutation, k: usize) -> Vec<PathTuple> {
    let Some(c) = determinant_row_parts(shape, eps) else {
        return Vec::new();
    };
    let l = shape.rows();
    let starts: Vec<i64> = (1..=l).map(|i| start_x(shape, eps.apply(i))).collect();
    c.parts()
        .iter()
        .map(|&ci| weak_sequences(ci, k))
        .multi_cartesian_product()
        .map(|choice| PathTuple {
            shape: shape.clone(),
            eps: eps.clone(),
            paths: choice
                .into_iter()
                .zip(&starts)
                .map(|(h, &s)| LatticePath { start_x: s, e_heights: h })
                .collect(),
        })
        .chain(if l == 0 {
            Some(PathTuple { shape: shape.clone(), eps: eps.clone(), paths: vec![] })
        } else {
            None
        })
        .collect()
}

/// `𝒫(λ/μ)` with heights at most `k`, over all `ε`.
pub fn enumerate_all_path_tuples(shape: &SkewShape, k: usize) -> Vec<PathTuple> {
    Permutation::all(shape.rows())
        .iter()
        .flat_map(|e| enumerate_path_tuples(shape, e, k))
        .collect()
}

/// The map from non-intersecting tuples in `𝒫(id, λ/μ)` to `SSYT(λ/μ)`.
#[derive(Clone, Debug)]
pub struct SsytCorrespondence {
    pub non_intersecting: usize,
    pub tableaux: usize,
    pub injective: bool,
    pub all_semistandard: bool,
}

impl SsytCorrespondence {
    pub fn is_bijection(&self) -> bool {
        self.injective && self.all_semistandard && self.non_intersecting == self.tableaux
    }
}

pub fn fixed_points_to_ssyt(shape: &SkewShape, k: usize) -> SsytCorrespondence {
    let id = Permutation::identity(shape.rows());
    let mut seen = HashSet::new();
    let mut non_intersecting = 0;
    let mut all_semistandard = true;
    for p in enumerate_path_tuples(shape, &id, k) {
        if !p.is_non_intersecting() {
            continue;
        }
        non_intersecting += 1;
        match p.to_ssyt() {
            Some(t) => {
                seen.insert(t);
            }
            None => all_semistandard = false,
        }
    }
    SsytCorrespondence {
        non_intersecting,
        tableaux: enumerate_ssyt(shape, k).len(),
        injective: seen.len() == non_intersecting,
        all_semistandard,
    }
}

/// `Σ_{(δ,P)} sgn(P) x^{(δ,P)}` over `𝒫(λ/μ)` with heights at most `k`.
pub fn signed_monomial_sum(shape: &SkewShape, k: usize) -> NCPolynomial {
    let perms = Permutation::all(shape.size());
    let mut out = NCPolynomial::zero(k);
    for p in enumerate_all_path_tuples(shape, k) {
        let s = q(p.sign());
        for d in &perms {
            out.add_term(p.monomial(d).expect("sizes agree"), s.clone());
        }
    }
    out
}

/// `Σ_δ x^{(δ,P)}` over non-intersecting `P ∈ 𝒫(id, λ/μ)`; intersection is
/// tested directly, without the swap.
pub fn non_intersecting_monomial_sum(shape: &SkewShape, k: usize) -> NCPolynomial {
    let perms = Permutation::all(shape.size());
    let mut out = NCPolynomial::zero(k);
    for p in enumerate_path_tuples(shape, &Permutation::identity(shape.rows()), k) {
        if p.is_non_intersecting() {
            for d in &perms {
                out.add_term(p.monomial(d).expect("sizes agree"), Q::one());
            }
        }
    }
    out
}

/// Both sides of `Σ_δ (1/c!) δ∘h_[c] = Σ_{P ∈ 𝒫(ε,λ/μ)} Σ_δ x^{(δ,P)}` with
/// `c = λ − μ_ε + ε − id`, truncated at `k` variables. `None` if `c` has a
/// negative part.
pub fn h_monomial_bridge(
    shape: &SkewShape,
    eps: &Permutation,
    k: usize,
) -> Result<Option<(NCPolynomial, NCPolynomial)>> {
    let Some(c) = determinant_row_parts(shape, eps) else {
        return Ok(None);
    };
    let h = NcExpr::single(NcBasis::H, c.set_partition()).scale(&(Q::one() / q_int(c.factorial())));
    let perms = Permutation::all(shape.size());
    let mut lhs = NCPolynomial::zero(k);
    for d in &perms {
        lhs = lhs.try_add(&h.delta_action(d)?.oracle_expand(k)?)?;
    }
    let mut rhs = NCPolynomial::zero(k);
    for p in enumerate_path_tuples(shape, eps, k) {
        for d in &perms {
            rhs.add_term(p.monomial(d)?, Q::one());
        }
    }
    Ok(Some((lhs, rhs)))
}

/// Outcome of checking the swap and its consequences on one shape.
#[derive(Clone, Debug, Default)]
pub struct LgvReport {
    pub shape: String,
    pub height_cap: usize,
    pub tuples: usize,
    pub fixed_points: usize,
    /// Tuples `P` with `ι(ι(P)) ≠ P`.
    pub involution_failures: Vec<PathTuple>,
    /// Fixed points that intersect or have `ε ≠ id`.
    pub fixed_point_failures: Vec<PathTuple>,
    /// Tuples moved by `ι` without changing sign.
    pub sign_failures: Vec<PathTuple>,
    /// Tuples where `ξ_P` does not preserve heights.
    pub height_failures: Vec<PathTuple>,
    /// Tuples where `x^{(δ,P)} ≠ x^{(ξ_P δ, P')}` for some `δ`.
    pub monomial_failures: Vec<PathTuple>,
    pub signed_sum_collapses: bool,
    pub bridge_holds: bool,
    pub ssyt_bijection: bool,
}

impl LgvReport {
    pub fn swap_is_sound(&self) -> bool {
        self.involution_failures.is_empty()
            && self.fixed_point_failures.is_empty()
            && self.sign_failures.is_empty()
            && self.height_failures.is_empty()
            && self.monomial_failures.is_empty()
    }

    pub fn identities_hold(&self) -> bool {
        self.signed_sum_collapses && self.bridge_holds && self.ssyt_bijection
    }
}

pub fn lgv_check(shape: &SkewShape, k: usize) -> Result<LgvReport> {
    let perms = Permutation::all(shape.size());
    let tuples = enumerate_all_path_tuples(shape, k);
    let mut r = LgvReport {
        shape: shape.to_string(),
        height_cap: k,
        tuples: tuples.len(),
        ..Default::default()
    };
    for p in &tuples {
        let (p2, xi) = lgv_swap(p);
        if &p2 == p {
            r.fixed_points += 1;
            if !p.is_non_intersecting() || !p.eps().is_identity() {
                r.fixed_point_failures.push(p.clone());
            }
            continue;
        }
        if &lgv_swap(&p2).0 != p {
            r.involution_failures.push(p.clone());
        }
        if p2.sign() != -p.sign() {
            r.sign_failures.push(p.clone());
        }
        let (h, h2) = (p.label_heights(), p2.label_heights());
        if (1..=p.size()).any(|i| h[i - 1] != h2[xi.apply(i) - 1]) {
            r.height_failures.push(p.clone());
        }
        let ok = perms
            .iter()
            .all(|d| p.monomial(d).ok() == xi.compose(d).and_then(|e| p2.monomial(&e)).ok());
        if !ok {
            r.monomial_failures.push(p.clone());
        }
    }
    r.signed_sum_collapses = signed_monomial_sum(shape, k).try_eq(&non_intersecting_monomial_sum(shape, k))?;
    r.bridge_holds = true;
    for eps in Permutation::all(shape.rows()) {
        if let Some((a, b)) = h_monomial_bridge(shape, &eps, k)? {
            r.bridge_holds &= a.try_eq(&b)?;
        }
    }
    r.ssyt_bijection = fixed_points_to_ssyt(shape, k).is_bijection();
    Ok(r)
}

/// One row per `(δ, P)`: sign, word, `ε`, and whether `P` is fixed by the swap.
pub fn monomial_ledger(shape: &SkewShape, k: usize) -> Vec<(i64, Word, Permutation, bool)> {
    let perms = Permutation::all(shape.size());
    let mut out = Vec::new();
    for p in enumerate_all_path_tuples(shape, k) {
        let fixed = lgv_swap(&p).0 == p;
        for d in &perms {
            out.push((p.sign(), p.monomial(d).expect("sizes agree"), p.eps().clone(), fixed));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(s: &str) -> SkewShape {
        s.parse().unwrap()
    }

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn worked_example() -> PathTuple {
        PathTuple::new(
            shape("3.3.2/1.1"),
            vec![
                LatticePath::new(-1, vec![2, 2, 3]).unwrap(),
                LatticePath::new(0, vec![3]).unwrap(),
                LatticePath::new(-3, vec![1, 3]).unwrap(),
            ],
        )
        .unwrap()
    }

    #[test]
    fn worked_example_swap() {
        let p = worked_example();
        assert_eq!(p.eps(), &perm("213"));
        assert!(enumerate_path_tuples(p.shape(), p.eps(), 3).contains(&p));
        let (p2, xi) = lgv_swap(&p);
        assert_eq!(xi, perm("342156"));
        assert_eq!(p2.paths()[0], LatticePath::new(0, vec![3, 3]).unwrap());
        assert_eq!(p2.paths()[1], LatticePath::new(-1, vec![2, 2]).unwrap());
        assert_eq!(p2.paths()[2], p.paths()[2]);
        assert!(p2.eps().is_identity());
        assert_eq!(p2.sign(), -p.sign());
        assert_eq!(lgv_swap(&p2).0, p);
        assert_eq!(p.dump(), "-1: 2,2,3\n0: 3\n-3: 1,3");
    }

    #[test]
    fn worked_example_monomial() {
        let p = worked_example();
        let w = p.monomial(&perm("315462")).unwrap();
        assert_eq!(w, Word::from_usize(&[3, 2, 1, 3, 3, 2]));
    }

    #[test]
    fn single_paths() {
        let s = shape("1");
        let all = enumerate_path_tuples(&s, &Permutation::identity(1), 4);
        assert_eq!(all.len(), 4);
        assert!(all.iter().all(|p| lgv_swap(p).0 == *p));
        let row = enumerate_path_tuples(&shape("3"), &Permutation::identity(1), 1);
        assert_eq!(row[0].monomial(&Permutation::identity(3)).unwrap(), Word::from_usize(&[1, 1, 1]));
    }

    #[test]
    fn tuple_count_matches_direct_count() {
        // Row 1 needs 2 E steps, row 2 needs 1, so (3 choose 2-multisets) · 2.
        let s = shape("2.1");
        assert_eq!(enumerate_path_tuples(&s, &Permutation::identity(2), 2).len(), 3 * 2);
        // ε = 21: row 1 needs 2 − 0 − 1 + 2 = 3 steps, row 2 needs 1 − 0 − 2 + 1 = 0.
        assert_eq!(enumerate_path_tuples(&s, &perm("21"), 2).len(), 4);
    }

    #[test]
    fn ssyt_correspondence_small() {
        let c = fixed_points_to_ssyt(&shape("2.1"), 2);
        assert!(c.is_bijection());
        assert_eq!(c.tableaux, 2);
        assert!(fixed_points_to_ssyt(&shape("1"), 3).is_bijection());
        assert!(fixed_points_to_ssyt(&shape("2.2/1"), 2).is_bijection());
    }

    #[test]
    fn checks_on_small_shapes() {
        for s in ["2.1", "2.2/1", "1.1", "3.1/1"] {
            let r = lgv_check(&shape(s), 3).unwrap();
            assert!(r.identities_hold(), "{}", s);
        }
    }
}
