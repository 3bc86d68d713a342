//! Schur functions in noncommuting variables: source skew Schur functions,
//! the standard, transposed and tabloid Schur bases, product rules, the
//! Rosas–Sagan functions, Specht vectors and ribbon source functions.

use std::collections::HashMap;

use num_traits::One;
use rayon::prelude::*;

use crate::combinatorics::{
    delta_pi, kostka, Composition, IntegerPartition, Permutation, SetPartition, SkewShape,
    WeakComposition, YoungTableau,
};
use crate::error::{Error, Result};
use crate::linalg::QMatrix;
use crate::lincomb::LinComb;
use crate::ncpoly::{NCPolynomial, Word};
use crate::ncsym::{NcBasis, NcExpr};
use crate::rational::{neg_one_pow, q, q_int, Q};
use crate::sym;

/// The parts `c_i = λ_i − μ_{ε(i)} − i + ε(i)`, or `None` if one is negative.
pub fn determinant_row_parts(shape: &SkewShape, eps: &Permutation) -> Option<WeakComposition> {
    let lambda = shape.outer();
    let mu = shape.inner();
    let parts: Vec<i64> = (1..=lambda.len())
        .map(|i| {
            let j = eps.apply(i);
            lambda.part(i - 1) as i64 - mu.part(j - 1) as i64 - i as i64 + j as i64
        })
        .collect();
    WeakComposition::from_signed(&parts)
}

/// Leibniz expansion of `det(1/c! b_[c])` with entries multiplied top row to
/// bottom row, in the multiplicative basis `b` (`h` or `e`).
fn source_determinant(shape: &SkewShape, basis: NcBasis) -> NcExpr {
    let mut terms = LinComb::zero();
    for eps in Permutation::all(shape.rows()) {
        if let Some(c) = determinant_row_parts(shape, &eps) {
            let coeff = q(eps.sign() as i64) / q_int(c.factorial());
            terms.add_term(c.set_partition(), coeff);
        }
    }
    NcExpr::new(basis, terms)
}

/// `s_[λ/μ]` in the `h` basis.
pub fn source_skew_schur(shape: &SkewShape) -> NcExpr {
    source_determinant(shape, NcBasis::H)
}

/// `s_(δ, λ/μ) = δ ∘ s_[λ/μ]`.
pub fn skew_schur_nc(delta: &Permutation, shape: &SkewShape) -> Result<NcExpr> {
    if delta.size() != shape.size() {
        return Err(Error::SizeMismatch {
            left: delta.size(),
            right: shape.size(),
        });
    }
    source_skew_schur(shape).delta_action(delta)
}

/// `s_π = δ_π ∘ s_[λ(π)]` in the `h` basis.
pub fn standard_schur(pi: &SetPartition) -> NcExpr {
    let (_, d) = delta_pi(pi);
    source_skew_schur(&SkewShape::straight(pi.shape()))
        .delta_action(&d)
        .expect("δ_π has size |π|")
}

/// `s^t_π = δ_π ∘ det(1/c! e_[c])` in the `e` basis.
pub fn transposed_schur(pi: &SetPartition) -> NcExpr {
    let (_, d) = delta_pi(pi);
    source_determinant(&SkewShape::straight(pi.shape()), NcBasis::E)
        .delta_action(&d)
        .expect("δ_π has size |π|")
}

/// `s_t = δ_t ∘ s_[sh(t)]`.
pub fn tableau_schur(t: &YoungTableau) -> NcExpr {
    source_skew_schur(t.shape())
        .delta_action(&t.reading_word())
        .expect("reading word has the tableau's size")
}

/// `s_[t]`: the sum of `s_t̃` over tableaux row equivalent to `t`.
pub fn tabloid_schur(t: &YoungTableau) -> Result<NcExpr> {
    if !t.shape().is_straight() {
        return Err(Error::invalid("tabloid Schur functions need a straight shape"));
    }
    let mut out = NcExpr::zero(NcBasis::H);
    for u in t.row_equivalence_class() {
        out = out.add(&tableau_schur(&u))?;
    }
    Ok(out)
}

/// The tabloid basis element attached to `π`: `s_[t]` for the tableau of `π`.
pub fn tabloid_basis_element(pi: &SetPartition) -> NcExpr {
    let (t, _) = delta_pi(pi);
    tabloid_schur(&t).expect("tableau of a set partition has straight shape")
}

/// Rows `s_π`, columns `h_σ`, both in basis order: entry = coefficient of
/// `h_σ` in `s_π`.
pub fn schur_transition_matrix(n: usize) -> (Vec<SetPartition>, QMatrix) {
    let keys = SetPartition::all_in_basis_order(n);
    let rows: Vec<Vec<Q>> = keys
        .par_iter()
        .map(|pi| {
            let s = standard_schur(pi);
            keys.iter().map(|sigma| s.coeff(sigma)).collect()
        })
        .collect();
    (keys, QMatrix::from_rows(rows))
}

/// Both sides of `s_(δ,λ) s_(η,μ) = s_(δ|η, λ·μ) + s_(δ|η, λ⊙μ)`.
#[derive(Clone, Debug)]
pub struct ProductCheck {
    pub product: NcExpr,
    pub concat: NcExpr,
    pub near_concat: NcExpr,
    pub holds: bool,
}

pub fn schur_product(
    delta: &Permutation,
    lambda: &IntegerPartition,
    eta: &Permutation,
    mu: &IntegerPartition,
) -> Result<ProductCheck> {
    let left = skew_schur_nc(delta, &SkewShape::straight(lambda.clone()))?;
    let right = skew_schur_nc(eta, &SkewShape::straight(mu.clone()))?;
    let product = left.product(&right)?;
    let de = delta.shifted_concat(eta);
    if lambda.is_empty() || mu.is_empty() {
        let holds = product.equals(&skew_schur_nc(&de, &SkewShape::straight(if lambda.is_empty() { mu.clone() } else { lambda.clone() }))?)?;
        return Ok(ProductCheck {
            concat: product.clone(),
            near_concat: NcExpr::zero(NcBasis::H),
            product,
            holds,
        });
    }
    let concat = skew_schur_nc(&de, &SkewShape::concat(lambda, mu))?;
    let near_concat = skew_schur_nc(&de, &SkewShape::near_concat(lambda, mu)?)?;
    let holds = product.equals(&concat.add(&near_concat)?)?;
    Ok(ProductCheck {
        product,
        concat,
        near_concat,
        holds,
    })
}

/// `{δ ∘ s_π : π ⊢ [n]}` in the `h` basis, in basis order of `π`.
pub fn permuted_basis(delta: &Permutation, n: usize) -> Result<Vec<NcExpr>> {
    if delta.size() != n {
        return Err(Error::SizeMismatch {
            left: delta.size(),
            right: n,
        });
    }
    SetPartition::all_in_basis_order(n)
        .iter()
        .map(|pi| standard_schur(pi).delta_action(delta))
        .collect()
}

/// Rank of homogeneous degree-`n` expressions as `h`-coordinate vectors.
pub fn h_rank(exprs: &[NcExpr], n: usize) -> Result<usize> {
    let keys = SetPartition::all_in_basis_order(n);
    let rows = exprs
        .iter()
        .map(|e| {
            let h = e.convert(NcBasis::H)?;
            Ok(keys.iter().map(|k| h.coeff(k)).collect())
        })
        .collect::<Result<Vec<Vec<Q>>>>()?;
    Ok(QMatrix::from_rows(rows).rank())
}

/// `𝐞_t = (Σ_{δ ∈ C_t} sgn(δ) δ) ∘ s_[t]`.
pub fn specht_vector(t: &YoungTableau) -> Result<NcExpr> {
    let base = tabloid_schur(t)?;
    let mut out = NcExpr::zero(NcBasis::H);
    for d in t.column_stabilizer()? {
        out = out.add(&base.delta_action(&d)?.scale(&q(d.sign() as i64)))?;
    }
    Ok(out)
}

/// Dimension of the span of `{𝐞_t : sh(t) = λ}`.
pub fn specht_rank(lambda: &IntegerPartition) -> Result<usize> {
    let n = lambda.size();
    let shape = SkewShape::straight(lambda.clone());
    let vectors = Permutation::all(n)
        .par_iter()
        .map(|d| specht_vector(&YoungTableau::from_reading_word(shape.clone(), d)?))
        .collect::<Result<Vec<_>>>()?;
    h_rank(&vectors, n)
}

/// `S_{λ/μ} = Σ_ν ν! K^{λ/μ}_ν Σ_{λ(π)=ν} m_π`.
pub fn rosas_sagan(shape: &SkewShape) -> NcExpr {
    let n = shape.size();
    let mut weights: HashMap<IntegerPartition, Q> = HashMap::new();
    for nu in IntegerPartition::all(n) {
        let k = kostka(shape, &nu);
        if k > 0 {
            weights.insert(nu.clone(), q_int(nu.factorial()) * q(k as i64));
        }
    }
    let terms = SetPartition::all(n)
        .into_iter()
        .filter_map(|pi| weights.get(&pi.shape()).map(|w| (pi, w.clone())))
        .collect();
    NcExpr::new(NcBasis::M, terms)
}

/// `Σ_{δ ∈ 𝔖_n} Σ_{T ∈ SSYT(λ/μ), entries ≤ k} x^{(δ,T)}` with boxes labelled
/// in row reading order.
pub fn rosas_sagan_monomials(shape: &SkewShape, k: usize) -> NCPolynomial {
    let n = shape.size();
    let perms = Permutation::all(n);
    let mut out = NCPolynomial::zero(k);
    for t in crate::combinatorics::enumerate_ssyt(shape, k) {
        let entries = t.reading_entries();
        for d in &perms {
            let w: Vec<u8> = (1..=n).map(|i| entries[d.apply(i) - 1] as u8).collect();
            out.add_term(Word::new(w), Q::one());
        }
    }
    out
}

/// `Σ_{δ ∈ 𝔖_n} s_(δ, λ/μ)` in the `h` basis.
pub fn schur_sum_over_permutations(shape: &SkewShape) -> Result<NcExpr> {
    let source = source_skew_schur(shape);
    let n = shape.size();
    let parts: Vec<LinComb<SetPartition>> = Permutation::all(n)
        .par_iter()
        .map(|d| source.delta_action(d).map(|e| e.terms().clone()))
        .collect::<Result<_>>()?;
    let mut total = LinComb::zero();
    for p in parts {
        total = &total + &p;
    }
    Ok(NcExpr::new(NcBasis::H, total))
}

/// Whether `Σ_δ s_(δ,λ/μ) = S_{λ/μ}`.
pub fn rs_refinement_check(shape: &SkewShape) -> Result<bool> {
    schur_sum_over_permutations(shape)?.equals(&rosas_sagan(shape))
}

/// The pairs `(ν, c^λ_{μν})` with nonzero coefficient, after checking
/// `S_{λ/μ} = Σ_ν c^λ_{μν} S_ν`.
pub fn rs_lr_expand(shape: &SkewShape) -> Result<Vec<(IntegerPartition, Q)>> {
    let s = sym::skew_schur(shape)?;
    let mut rhs = NcExpr::zero(NcBasis::M);
    let mut out = Vec::new();
    for (nu, c) in s.terms().iter() {
        rhs = rhs.add(&rosas_sagan(&SkewShape::straight(nu.clone())).scale(c))?;
        out.push((nu.clone(), c.clone()));
    }
    if !rhs.equals(&rosas_sagan(shape))? {
        return Err(Error::IdentityViolation(format!(
            "S_{{{}}} differs from its Littlewood–Richardson expansion",
            shape
        )));
    }
    Ok(out)
}

/// Both sides of `Δ_{i,n−i}(S_λ) = C(n,i) Σ_{μ ⊢ i, μ ⊆ λ} S_μ ⊗ S_{λ/μ}` in
/// `m ⊗ m`.
pub fn rs_coproduct_sides(
    lambda: &IntegerPartition,
    i: usize,
) -> Result<(crate::ncsym::Tensor, crate::ncsym::Tensor)> {
    let n = lambda.size();
    if i > n {
        return Err(Error::invalid(format!("split {} exceeds degree {}", i, n)));
    }
    let lhs = rosas_sagan(&SkewShape::straight(lambda.clone())).coproduct(i)?;
    let binom = q_int(crate::rational::binomial(n, i));
    let mut rhs = crate::ncsym::Tensor::zero();
    for mu in lambda.subpartitions_of_size(i) {
        let left = rosas_sagan(&SkewShape::straight(mu.clone()));
        let right = rosas_sagan(&SkewShape::new(lambda.clone(), mu)?);
        rhs.add_scaled(&crate::ncsym::tensor(&left, &right)?, &binom);
    }
    Ok((lhs, rhs))
}

pub fn rs_coproduct_check(lambda: &IntegerPartition, i: usize) -> Result<bool> {
    let (l, r) = rs_coproduct_sides(lambda, i)?;
    Ok(l == r)
}

/// `r_[α] = (−1)^{ℓ(α)} Σ_{β ≽ α} ((−1)^{ℓ(β)} / β!) h_[β]`.
pub fn ribbon_source_by_coarsenings(alpha: &Composition) -> NcExpr {
    let mut terms = LinComb::zero();
    for beta in alpha.coarsenings() {
        let c = neg_one_pow(alpha.len() + beta.len()) / q_int(beta.factorial());
        terms.add_term(beta.set_partition(), c);
    }
    NcExpr::new(NcBasis::H, terms)
}

/// `r_[α]`, computed both from coarsenings and as `s_[ribbon(α)]`; errors if
/// they disagree.
pub fn ribbon_source(alpha: &Composition) -> Result<NcExpr> {
    let a = ribbon_source_by_coarsenings(alpha);
    let b = source_skew_schur(&SkewShape::ribbon(alpha));
    if a != b {
        return Err(Error::IdentityViolation(format!(
            "ribbon source function for {} disagrees with its skew determinant",
            alpha
        )));
    }
    Ok(a)
}
