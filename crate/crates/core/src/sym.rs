//! Classical symmetric functions over `Q` in the monomial, power sum,
//! elementary, complete homogeneous and Schur bases.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use itertools::Itertools;
use num_traits::{One, Zero};

use crate::combinatorics::{kostka, IntegerPartition, Permutation, SkewShape};
use crate::error::Result;
use crate::linalg::QMatrix;
use crate::lincomb::LinComb;
use crate::ncpoly::CPolynomial;
use crate::rational::{q, q_int, Q};
use crate::transition::Transition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SymBasis {
    M,
    P,
    E,
    H,
    S,
}

impl SymBasis {
    pub const ALL: [SymBasis; 5] = [SymBasis::M, SymBasis::P, SymBasis::E, SymBasis::H, SymBasis::S];

    pub fn letter(self) -> &'static str {
        match self {
            SymBasis::M => "m",
            SymBasis::P => "p",
            SymBasis::E => "e",
            SymBasis::H => "h",
            SymBasis::S => "s",
        }
    }

    pub fn from_letter(s: &str) -> Option<Self> {
        SymBasis::ALL.into_iter().find(|b| b.letter() == s)
    }

    fn is_multiplicative(self) -> bool {
        matches!(self, SymBasis::P | SymBasis::E | SymBasis::H)
    }
}

/// A symmetric function as a linear combination in one basis.
#[derive(Clone, PartialEq, Eq)]
pub struct SymExpr {
    basis: SymBasis,
    terms: LinComb<IntegerPartition>,
}

impl SymExpr {
    pub fn new(basis: SymBasis, terms: LinComb<IntegerPartition>) -> Self {
        SymExpr { basis, terms }
    }

    pub fn zero(basis: SymBasis) -> Self {
        Self::new(basis, LinComb::zero())
    }

    pub fn one(basis: SymBasis) -> Self {
        Self::single(basis, IntegerPartition::empty())
    }

    pub fn single(basis: SymBasis, lambda: IntegerPartition) -> Self {
        Self::new(basis, LinComb::single(lambda, Q::one()))
    }

    pub fn basis(&self) -> SymBasis {
        self.basis
    }

    pub fn terms(&self) -> &LinComb<IntegerPartition> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn coeff(&self, lambda: &IntegerPartition) -> Q {
        self.terms.coeff(lambda)
    }

    pub fn scale(&self, s: &Q) -> SymExpr {
        Self::new(self.basis, self.terms.scale(s))
    }

    /// Sum, expressed in the basis of `self`.
    pub fn add(&self, other: &SymExpr) -> Result<SymExpr> {
        let o = other.convert(self.basis)?;
        Ok(Self::new(self.basis, &self.terms + &o.terms))
    }

    pub fn sub(&self, other: &SymExpr) -> Result<SymExpr> {
        self.add(&other.scale(&-Q::one()))
    }

    /// Degree-homogeneous pieces keyed by degree.
    fn by_degree(&self) -> Vec<(usize, LinComb<IntegerPartition>)> {
        let mut out: Vec<(usize, LinComb<IntegerPartition>)> = Vec::new();
        for (lambda, c) in self.terms.iter() {
            let n = lambda.size();
            match out.iter_mut().find(|(d, _)| *d == n) {
                Some((_, lc)) => lc.add_term(lambda.clone(), c.clone()),
                None => out.push((n, LinComb::single(lambda.clone(), c.clone()))),
            }
        }
        out
    }

    pub fn to_m(&self) -> Result<SymExpr> {
        if self.basis == SymBasis::M {
            return Ok(self.clone());
        }
        let mut out = LinComb::zero();
        for (n, piece) in self.by_degree() {
            let t = transition(self.basis, n)?;
            out = &out + &t.to_target(&piece)?;
        }
        Ok(Self::new(SymBasis::M, out))
    }

    pub fn convert(&self, target: SymBasis) -> Result<SymExpr> {
        if target == self.basis {
            return Ok(self.clone());
        }
        let m = self.to_m()?;
        if target == SymBasis::M {
            return Ok(m);
        }
        let mut out = LinComb::zero();
        for (n, piece) in m.by_degree() {
            let t = transition(target, n)?;
            out = &out + &t.to_source(&piece)?;
        }
        Ok(Self::new(target, out))
    }

    /// Equality as symmetric functions, regardless of basis.
    pub fn equals(&self, other: &SymExpr) -> Result<bool> {
        Ok(self.to_m()?.terms == other.to_m()?.terms)
    }

    /// Product; multiplicative bases multiply indices directly, otherwise
    /// the product goes through `h` and is returned in the basis of `self`.
    pub fn product(&self, other: &SymExpr) -> Result<SymExpr> {
        if self.basis == other.basis && self.basis.is_multiplicative() {
            let terms = self.terms.bilinear(&other.terms, |a, b| {
                let parts = a.parts().iter().chain(b.parts()).copied().collect();
                LinComb::single(IntegerPartition::from_unsorted(parts), Q::one())
            });
            return Ok(Self::new(self.basis, terms));
        }
        let a = self.convert(SymBasis::H)?;
        let b = other.convert(SymBasis::H)?;
        a.product(&b)?.convert(self.basis)
    }

    /// The involution `ω`: `h_λ ↔ e_λ`, `p_λ ↦ (−1)^{|λ|−ℓ(λ)} p_λ`,
    /// `s_λ ↦ s_{λ^t}`.
    pub fn omega(&self) -> Result<SymExpr> {
        Ok(match self.basis {
            SymBasis::H => Self::new(SymBasis::E, self.terms.clone()),
            SymBasis::E => Self::new(SymBasis::H, self.terms.clone()),
            SymBasis::S => Self::new(SymBasis::S, self.terms.map_keys(|l| l.transpose())),
            SymBasis::P => Self::new(
                SymBasis::P,
                self.terms
                    .iter()
                    .map(|(l, c)| {
                        let s = if (l.size() - l.len()) % 2 == 0 { c.clone() } else { -c };
                        (l.clone(), s)
                    })
                    .collect(),
            ),
            SymBasis::M => self.convert(SymBasis::H)?.omega()?.convert(SymBasis::M)?,
        })
    }

    /// Truncation to `k` commuting variables.
    pub fn to_json(&self) -> serde_json::Value {
        crate::text::terms_to_json(self.basis.letter(), self.terms.iter())
    }

    pub fn to_cpoly(&self, k: usize) -> Result<CPolynomial> {
        let m = self.to_m()?;
        let mut out = CPolynomial::zero(k);
        for (lambda, c) in m.terms.iter() {
            out = out.try_add(&monomial_cpoly(lambda, k).scale(c))?;
        }
        Ok(out)
    }
}

impl fmt::Display for SymExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::text::write_terms(f, self.basis.letter(), self.terms.iter())
    }
}

impl fmt::Debug for SymExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymExpr({})", self)
    }
}

/// `m_λ` truncated to `k` variables.
pub fn monomial_cpoly(lambda: &IntegerPartition, k: usize) -> CPolynomial {
    let mut out = CPolynomial::zero(k);
    if lambda.len() > k {
        return out;
    }
    let mut padded = lambda.parts().to_vec();
    padded.resize(k, 0);
    for e in padded.iter().copied().permutations(k).unique() {
        out.add_term(e, Q::one());
    }
    out
}

/// `p_r`, `e_r` or `h_r` truncated to `k` variables.
fn generator_cpoly(basis: SymBasis, r: usize, k: usize) -> CPolynomial {
    let mut out = CPolynomial::zero(k);
    match basis {
        SymBasis::P => {
            for i in 0..k {
                let mut e = vec![0; k];
                e[i] = r;
                out.add_term(e, Q::one());
            }
        }
        SymBasis::E => {
            for subset in (0..k).combinations(r) {
                let mut e = vec![0; k];
                for i in subset {
                    e[i] = 1;
                }
                out.add_term(e, Q::one());
            }
        }
        SymBasis::H => {
            for multiset in (0..k).combinations_with_replacement(r) {
                let mut e = vec![0; k];
                for i in multiset {
                    e[i] += 1;
                }
                out.add_term(e, Q::one());
            }
        }
        _ => unreachable!("only p, e, h have generators"),
    }
    out
}

/// Monomial expansion of one basis element of degree `n`, computed in `n`
/// commuting variables (enough to see every `m_μ` with `μ ⊢ n`).
fn expand_in_m(basis: SymBasis, lambda: &IntegerPartition) -> LinComb<IntegerPartition> {
    let n = lambda.size();
    match basis {
        SymBasis::M => LinComb::single(lambda.clone(), Q::one()),
        SymBasis::S => IntegerPartition::all(n)
            .into_iter()
            .map(|mu| {
                let k = kostka(&SkewShape::straight(lambda.clone()), &mu);
                (mu, q(k as i64))
            })
            .collect(),
        _ => {
            let mut poly = CPolynomial::one(n);
            for &r in lambda.parts() {
                poly = poly
                    .try_mul(&generator_cpoly(basis, r, n))
                    .expect("same cutoff");
            }
            IntegerPartition::all(n)
                .into_iter()
                .map(|mu| {
                    let mut e = mu.parts().to_vec();
                    e.resize(n, 0);
                    let c = poly.coeff(&e);
                    (mu, c)
                })
                .collect()
        }
    }
}

type Cache = RwLock<HashMap<(SymBasis, usize), Arc<Transition<IntegerPartition>>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Transition from `basis` to `m` in degree `n`, computed once.
pub fn transition(basis: SymBasis, n: usize) -> Result<Arc<Transition<IntegerPartition>>> {
    if let Some(t) = cache().read().expect("cache lock").get(&(basis, n)) {
        return Ok(t.clone());
    }
    let keys = IntegerPartition::all(n);
    let rows = keys
        .iter()
        .map(|lambda| {
            let lc = expand_in_m(basis, lambda);
            keys.iter().map(|mu| lc.coeff(mu)).collect()
        })
        .collect();
    let t = Arc::new(Transition::new(keys, QMatrix::from_rows(rows))?);
    let mut w = cache().write().expect("cache lock");
    Ok(w.entry((basis, n)).or_insert(t).clone())
}

/// Whether the Jacobi–Trudi determinant uses `h` or `e` entries.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JtFlavor {
    H,
    E,
}

/// `s_{λ/μ}` as `det(h_{λ_i − μ_j − i + j})`, or with `e` and transposed shapes.
pub fn jacobi_trudi(shape: &SkewShape, flavor: JtFlavor) -> SymExpr {
    let (outer, inner, basis) = match flavor {
        JtFlavor::H => (shape.outer().clone(), shape.inner().clone(), SymBasis::H),
        JtFlavor::E => (shape.outer().transpose(), shape.inner().transpose(), SymBasis::E),
    };
    let l = outer.len();
    let mut terms = LinComb::zero();
    for eps in Permutation::all(l) {
        let mut parts = Vec::with_capacity(l);
        let mut ok = true;
        for i in 0..l {
            let j = eps.apply(i + 1) - 1;
            let c = outer.part(i) as i64 - inner.part(j) as i64 - i as i64 + j as i64;
            if c < 0 {
                ok = false;
                break;
            }
            parts.push(c as usize);
        }
        if ok {
            terms.add_term(IntegerPartition::from_unsorted(parts), q(eps.sign() as i64));
        }
    }
    SymExpr::new(basis, terms)
}

/// `s_{λ/μ}` in the Schur basis.
pub fn skew_schur(shape: &SkewShape) -> Result<SymExpr> {
    jacobi_trudi(shape, JtFlavor::H).convert(SymBasis::S)
}

/// `c^λ_{μν}`: the coefficient of `s_ν` in `s_{λ/μ}`.
pub fn littlewood_richardson(
    lambda: &IntegerPartition,
    mu: &IntegerPartition,
    nu: &IntegerPartition,
) -> Result<Q> {
    if lambda.size() != mu.size() + nu.size() || !lambda.contains(mu) {
        return Ok(Q::zero());
    }
    let shape = SkewShape::new(lambda.clone(), mu.clone())?;
    Ok(skew_schur(&shape)?.coeff(nu))
}

/// `ν! = ν_1! ν_2! ⋯` as a rational.
pub fn partition_factorial_q(nu: &IntegerPartition) -> Q {
    q_int(nu.factorial())
}

/// `λ^!` as a rational.
pub fn multiplicity_factorial_q(nu: &IntegerPartition) -> Q {
    q_int(nu.multiplicity_factorial())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> IntegerPartition {
        s.parse().unwrap()
    }

    fn shape(s: &str) -> SkewShape {
        s.parse().unwrap()
    }

    fn expr(basis: SymBasis, terms: &[(&str, i64)]) -> SymExpr {
        SymExpr::new(basis, terms.iter().map(|(l, c)| (p(l), q(*c))).collect())
    }

    #[test]
    fn jacobi_trudi_examples() {
        let want = expr(SymBasis::H, &[("2.1", 1), ("3", -1)]);
        assert_eq!(jacobi_trudi(&shape("2.1"), JtFlavor::H), want);
        assert_eq!(jacobi_trudi(&shape("2.2/1"), JtFlavor::H), want);
        assert_eq!(jacobi_trudi(&shape("4"), JtFlavor::H), expr(SymBasis::H, &[("4", 1)]));
        assert_eq!(want.to_string(), "h[2.1] - h[3]");
    }

    #[test]
    fn schur_to_monomial() {
        let s21 = SymExpr::single(SymBasis::S, p("2.1"));
        assert_eq!(s21.to_m().unwrap(), expr(SymBasis::M, &[("2.1", 1), ("1.1.1", 2)]));
        assert_eq!(
            SymExpr::single(SymBasis::H, p("1")).to_m().unwrap(),
            expr(SymBasis::M, &[("1", 1)])
        );
    }

    #[test]
    fn multiplicative_products() {
        let a = SymExpr::single(SymBasis::P, p("2"));
        let b = SymExpr::single(SymBasis::P, p("1"));
        assert_eq!(a.product(&b).unwrap(), expr(SymBasis::P, &[("2.1", 1)]));
        let s1 = SymExpr::single(SymBasis::S, p("1"));
        let prod = s1.product(&s1).unwrap();
        assert_eq!(prod, expr(SymBasis::S, &[("2", 1), ("1.1", 1)]));
    }

    #[test]
    fn lr_examples() {
        assert_eq!(littlewood_richardson(&p("2.1"), &p("1"), &p("1.1")).unwrap(), q(1));
        assert_eq!(littlewood_richardson(&p("2.1"), &p("1"), &p("2")).unwrap(), q(1));
        assert_eq!(littlewood_richardson(&p("3.2"), &IntegerPartition::empty(), &p("3.2")).unwrap(), q(1));
        assert_eq!(littlewood_richardson(&p("2.1"), &p("1"), &p("3")).unwrap(), q(0));
        assert_eq!(littlewood_richardson(&p("2.2"), &p("1"), &p("2.1")).unwrap(), q(1));
    }

    #[test]
    fn both_jacobi_trudi_flavors_agree() {
        for n in 1..=6 {
            for l in IntegerPartition::all(n) {
                let s = SkewShape::straight(l.clone());
                let h = jacobi_trudi(&s, JtFlavor::H);
                let e = jacobi_trudi(&s, JtFlavor::E);
                assert!(h.equals(&e).unwrap(), "{}", l);
                assert_eq!(h.convert(SymBasis::S).unwrap(), SymExpr::single(SymBasis::S, l));
            }
        }
    }

    #[test]
    fn classical_product_rule() {
        for total in 2..=7 {
            for a in 1..total {
                for l in IntegerPartition::all(a) {
                    for m in IntegerPartition::all(total - a) {
                        let lhs = SymExpr::single(SymBasis::S, l.clone())
                            .product(&SymExpr::single(SymBasis::S, m.clone()))
                            .unwrap();
                        let rhs = jacobi_trudi(&SkewShape::concat(&l, &m), JtFlavor::H)
                            .add(&jacobi_trudi(&SkewShape::near_concat(&l, &m).unwrap(), JtFlavor::H))
                            .unwrap();
                        assert!(lhs.equals(&rhs).unwrap(), "{} {}", l, m);
                    }
                }
            }
        }
    }

    #[test]
    fn lr_coefficients_nonnegative_and_match_skew_kostka() {
        for shape in SkewShape::all_of_size(4, 6) {
            let s = skew_schur(&shape).unwrap();
            for (_, c) in s.terms().iter() {
                assert!(c.is_integer() && *c >= Q::zero());
            }
            for gamma in IntegerPartition::all(4) {
                let mut sum = Q::zero();
                for (nu, c) in s.terms().iter() {
                    sum += c * q(kostka(&SkewShape::straight(nu.clone()), &gamma) as i64);
                }
                assert_eq!(sum, q(kostka(&shape, &gamma) as i64), "{} {}", shape, gamma);
            }
        }
    }

    #[test]
    fn omega_is_involutive_and_transposes_schur() {
        for l in IntegerPartition::all(4) {
            for b in SymBasis::ALL {
                let x = SymExpr::single(b, l.clone());
                assert!(x.omega().unwrap().omega().unwrap().equals(&x).unwrap());
            }
            let h = SymExpr::single(SymBasis::S, l.clone()).convert(SymBasis::H).unwrap();
            let w = h.omega().unwrap();
            assert!(w.equals(&SymExpr::single(SymBasis::S, l.transpose())).unwrap());
        }
    }

    #[test]
    fn round_trips() {
        for b in SymBasis::ALL {
            for l in IntegerPartition::all(5) {
                let x = SymExpr::single(b, l);
                for t in SymBasis::ALL {
                    assert_eq!(x.convert(t).unwrap().convert(b).unwrap(), x);
                }
            }
        }
    }
}
