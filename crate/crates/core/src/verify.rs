//! Named identity suites. Each returns a report with the parameter range it
//! covered, the number of instances checked and any counterexamples.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::combinatorics::{
    kostka, standard_tableaux_count, Composition, IntegerPartition, Permutation, SetPartition,
    SkewShape, YoungTableau,
};
use crate::error::{Error, Result};
use crate::lgv;
use crate::linalg::QMatrix;
use crate::lincomb::LinComb;
use crate::ncschur;
use crate::ncsym::{NcBasis, NcExpr};
use crate::nsym::{NSymBasis, NSymExpr};
use crate::rational::{factorial_q, q, q_frac, Q};
use crate::sym::{self, SymBasis, SymExpr};

pub const SUITES: [&str; 10] = [
    "prod",
    "ncschur-triangular",
    "transpose",
    "deltaact",
    "rsrefines",
    "rslr",
    "rscoprod",
    "iota",
    "lgv",
    "hmult",
];

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub max_size: Option<usize>,
    pub vars: Option<usize>,
    pub seed: u64,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        Self {
            max_size: None,
            vars: None,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct SuiteReport {
    pub name: String,
    pub range: String,
    pub checks: usize,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

impl SuiteReport {
    fn new(name: &str, range: String) -> Self {
        Self {
            name: name.to_string(),
            range,
            ..Default::default()
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn absorb(&mut self, results: Vec<(bool, String)>) {
        for (ok, what) in results {
            self.record(ok, || what);
        }
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "ok" } else { "FAILED" };
        write!(f, "{}: {} ({}; {} checks", self.name, status, self.range, self.checks)?;
        if !self.failures.is_empty() {
            write!(f, ", {} failures", self.failures.len())?;
        }
        write!(f, ")")?;
        for n in &self.notes {
            write!(f, "\n  note: {}", n)?;
        }
        for x in self.failures.iter().take(20) {
            write!(f, "\n  counterexample: {}", x)?;
        }
        Ok(())
    }
}

pub fn run_suite(name: &str, opts: &SuiteOptions) -> Result<SuiteReport> {
    let size = |d: usize| opts.max_size.unwrap_or(d);
    match name {
        "prod" => prod(size(6)),
        "ncschur-triangular" => ncschur_triangular(size(5)),
        "transpose" => transpose(size(5)),
        "deltaact" => deltaact(200, size(3), opts.seed),
        "rsrefines" => rsrefines(size(5)),
        "rslr" => rslr(size(6)),
        "rscoprod" => rscoprod(size(4)),
        "iota" => iota(size(6)),
        "lgv" => lgv_suite(size(4), opts.vars.unwrap_or(3)),
        "hmult" => hmult(size(5)),
        other => Err(Error::invalid(format!(
            "unknown suite {:?}; expected one of {}",
            other,
            SUITES.join(", ")
        ))),
    }
}

fn pairs_of_partitions(max_total: usize) -> Vec<(IntegerPartition, IntegerPartition)> {
    let mut out = Vec::new();
    for a in 0..=max_total {
        for b in 0..=max_total - a {
            for l in IntegerPartition::all(a) {
                for m in IntegerPartition::all(b) {
                    out.push((l.clone(), m));
                }
            }
        }
    }
    out
}

/// `s_[λ]s_[μ] = s_[λ·μ] + s_[λ⊙μ]` for `|λ|+|μ| ≤ max_total`, and the set
/// partition form `s_π s_σ = s_(δ_π|δ_σ, λ·μ) + s_(δ_π|δ_σ, λ⊙μ)` up to
/// total size 5.
pub fn prod(max_total: usize) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("prod", format!("|λ|+|μ| ≤ {}; set partitions up to total {}", max_total, max_total.min(5)));
    let results = pairs_of_partitions(max_total)
        .par_iter()
        .map(|(l, m)| {
            let c = ncschur::schur_product(
                &Permutation::identity(l.size()),
                l,
                &Permutation::identity(m.size()),
                m,
            )?;
            Ok((c.holds, format!("s_[{}] s_[{}]", l, m)))
        })
        .collect::<Result<Vec<_>>>()?;
    r.absorb(results);
    let mut jobs = Vec::new();
    for a in 1..=max_total.min(5) {
        for b in 1..=max_total.min(5) - a {
            for pi in SetPartition::all(a) {
                for sigma in SetPartition::all(b) {
                    jobs.push((pi.clone(), sigma));
                }
            }
        }
    }
    let results = jobs
        .par_iter()
        .map(|(pi, sigma)| {
            let (_, dp) = crate::combinatorics::delta_pi(pi);
            let (_, ds) = crate::combinatorics::delta_pi(sigma);
            let c = ncschur::schur_product(&dp, &pi.shape(), &ds, &sigma.shape())?;
            let direct = ncschur::standard_schur(pi).product(&ncschur::standard_schur(sigma))?;
            let ok = c.holds && direct.equals(&c.product)?;
            Ok((ok, format!("s_{{{}}} s_{{{}}}", pi, sigma)))
        })
        .collect::<Result<Vec<_>>>()?;
    r.absorb(results);
    Ok(r)
}

/// Order on set partitions by lexicographic order of the increasingly
/// listed block sizes, ties broken by the basis order.
fn reverse_lex_key(pi: &SetPartition) -> (Vec<usize>, SetPartition) {
    (pi.shape().reversed_parts(), pi.clone())
}

/// `ρ(s_π) = s_{λ(π)}`, and triangularity of the `s → h` transition matrix in
/// the basis order. The raw diagonal is `1/λ(π)!`; rescaling `s_π` by
/// `λ(π)!` gives a unitriangular matrix of determinant 1.
pub fn ncschur_triangular(max_n: usize) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("ncschur-triangular", format!("n ≤ {}", max_n));
    for n in 1..=max_n {
        let (keys, m) = ncschur::schur_transition_matrix(n);
        r.record(m.is_upper_triangular(), || format!("s→h matrix not upper triangular at n = {}", n));
        let diag_ok = keys
            .iter()
            .zip(m.diagonal())
            .all(|(pi, d)| d == Q::one() / factorial_q_of(&pi.shape()));
        r.record(diag_ok, || format!("diagonal differs from 1/λ(π)! at n = {}", n));
        let expected_det: Q = keys.iter().map(|pi| Q::one() / factorial_q_of(&pi.shape())).product();
        r.record(m.determinant() == expected_det, || format!("determinant differs from Π 1/λ(π)! at n = {}", n));
        let scaled = QMatrix::from_rows(
            keys.iter()
                .enumerate()
                .map(|(i, pi)| {
                    let f = factorial_q_of(&pi.shape());
                    m.row(i).iter().map(|x| x * &f).collect()
                })
                .collect(),
        );
        let unit = scaled.is_upper_triangular() && scaled.diagonal().iter().all(|d| d.is_one());
        r.record(unit && scaled.determinant().is_one(), || format!("rescaled matrix not unitriangular at n = {}", n));

        let results = keys
            .par_iter()
            .map(|pi| {
                let rho = ncschur::standard_schur(pi).rho()?;
                let want = SymExpr::single(SymBasis::S, pi.shape());
                Ok((rho.equals(&want)?, format!("ρ(s_{{{}}}) ≠ s_{}", pi, pi.shape())))
            })
            .collect::<Result<Vec<_>>>()?;
        r.absorb(results);

        let mut by_rev: Vec<usize> = (0..keys.len()).collect();
        by_rev.sort_by_key(|&i| reverse_lex_key(&keys[i]));
        let tri = by_rev.iter().enumerate().all(|(a, &i)| {
            by_rev[..a].iter().all(|&j| m.get(i, j).is_zero())
        });
        if !tri {
            r.notes.push(format!(
                "n = {}: not triangular when ordered lexicographically on increasingly listed block sizes",
                n
            ));
        }
    }
    Ok(r)
}

fn factorial_q_of(l: &IntegerPartition) -> Q {
    sym::partition_factorial_q(l)
}

/// `ω(s_π) = s^t_π` with `s^t_π` from its own `e` determinant,
/// `ρ(s^t_π) = s_{λ(π)^t}`, and `{s^t_π}` spans NCSym^n.
pub fn transpose(max_n: usize) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("transpose", format!("n ≤ {}", max_n));
    for n in 1..=max_n {
        let keys = SetPartition::all_in_basis_order(n);
        let results = keys
            .par_iter()
            .map(|pi| {
                let st = ncschur::transposed_schur(pi);
                let via_omega = ncschur::standard_schur(pi).omega()?;
                let rho_ok = st.rho()?.equals(&SymExpr::single(SymBasis::S, pi.shape().transpose()))?;
                Ok(vec![
                    (via_omega == st, format!("ω(s_{{{}}}) ≠ s^t_{{{}}}", pi, pi)),
                    (rho_ok, format!("ρ(s^t_{{{}}}) ≠ s_{}", pi, pi.shape().transpose())),
                ])
            })
            .collect::<Result<Vec<_>>>()?;
        r.absorb(results.into_iter().flatten().collect());
        let all: Vec<NcExpr> = keys.iter().map(ncschur::transposed_schur).collect();
        let rank = ncschur::h_rank(&all, n)?;
        r.record(rank == keys.len(), || format!("transposed Schur functions have rank {} < {} at n = {}", rank, keys.len(), n));
    }
    Ok(r)
}

fn random_permutation(rng: &mut impl Rng, n: usize) -> Permutation {
    let mut v: Vec<usize> = (1..=n).collect();
    v.shuffle(rng);
    Permutation::new(v).expect("shuffle of 1..n")
}

fn random_expr(rng: &mut impl Rng, n: usize) -> NcExpr {
    let basis = [NcBasis::M, NcBasis::P, NcBasis::E, NcBasis::H][rng.gen_range(0..4)];
    let all = SetPartition::all(n);
    let mut terms = LinComb::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let pi = all[rng.gen_range(0..all.len())].clone();
        let mut num = rng.gen_range(-5..=5);
        if num == 0 {
            num = 1;
        }
        terms.add_term(pi, q_frac(num, rng.gen_range(1..=4)));
    }
    NcExpr::new(basis, terms)
}

/// `(δ∘f)(η∘g) = (δ|η)∘(fg)` on random instances of degree at most
/// `max_degree`.
pub fn deltaact(count: usize, max_degree: usize, seed: u64) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("deltaact", format!("{} random instances, degrees ≤ {}, seed {}", count, max_degree, seed));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let instances: Vec<_> = (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_degree.max(1));
            let m = rng.gen_range(1..=max_degree.max(1));
            let f = random_expr(&mut rng, n);
            let g = random_expr(&mut rng, m);
            (random_permutation(&mut rng, n), random_permutation(&mut rng, m), f, g)
        })
        .collect();
    let results = instances
        .par_iter()
        .map(|(d, e, f, g)| {
            let lhs = f.delta_action(d)?.product(&g.delta_action(e)?)?;
            let rhs = f.product(g)?.delta_action(&d.shifted_concat(e))?;
            Ok((lhs.equals(&rhs)?, format!("δ={} η={} f={} g={}", d, e, f, g)))
        })
        .collect::<Result<Vec<_>>>()?;
    r.absorb(results);
    Ok(r)
}

/// One representative tableau per row-equivalence class of shape `λ`.
pub fn tabloid_representatives(lambda: &IntegerPartition) -> Result<Vec<YoungTableau>> {
    let shape = SkewShape::straight(lambda.clone());
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for d in Permutation::all(lambda.size()) {
        let t = YoungTableau::from_reading_word(shape.clone(), &d)?;
        let key: Vec<Vec<usize>> = t
            .rows()
            .iter()
            .map(|row| {
                let mut r = row.clone();
                r.sort_unstable();
                r
            })
            .collect();
        if seen.insert(key) {
            out.push(t);
        }
    }
    Ok(out)
}

/// `Σ_δ s_(δ,λ/μ) = S_{λ/μ}` and `ρ(S_{λ/μ}) = n! s_{λ/μ}` for skew shapes
/// without empty rows or columns; `Σ_[t] s_[t] = S_λ` for straight shapes up
/// to size 5.
pub fn rsrefines(max_n: usize) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("rsrefines", format!("skew shapes of size ≤ {}", max_n));
    let shapes: Vec<SkewShape> = (1..=max_n).flat_map(SkewShape::all_without_empty_lines).collect();
    let results = shapes
        .par_iter()
        .map(|s| {
            let refines = ncschur::rs_refinement_check(s)?;
            let rho = ncschur::rosas_sagan(s).rho()?;
            let want = sym::skew_schur(s)?.scale(&factorial_q(s.size()));
            Ok(vec![
                (refines, format!("Σ_δ s_(δ,{}) ≠ S_{}", s, s)),
                (rho.equals(&want)?, format!("ρ(S_{}) ≠ n! s_{}", s, s)),
            ])
        })
        .collect::<Result<Vec<_>>>()?;
    r.absorb(results.into_iter().flatten().collect());
    let straight: Vec<IntegerPartition> = (1..=max_n.min(5)).flat_map(IntegerPartition::all).collect();
    let results = straight
        .par_iter()
        .map(|l| {
            let mut sum = NcExpr::zero(NcBasis::H);
            for t in tabloid_representatives(l)? {
                sum = sum.add(&ncschur::tabloid_schur(&t)?)?;
            }
            let rs = ncschur::rosas_sagan(&SkewShape::straight(l.clone()));
            Ok((sum.equals(&rs)?, format!("Σ_[t] s_[t] ≠ S_{}", l)))
        })
        .collect::<Result<Vec<_>>>()?;
    r.absorb(results);
    Ok(r)
}

/// `S_{λ/μ} = Σ_ν c^λ_{μν} S_ν` and `K^{λ/μ}_γ = Σ_ν c^λ_{μν} K^ν_γ`.
pub fn rslr(max_n: usize) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("rslr", format!("skew shapes of size ≤ {}", max_n));
    let shapes: Vec<SkewShape> = (1..=max_n).flat_map(SkewShape::all_without_empty_lines).collect();
    let results = shapes
        .par_iter()
        .map(|s| {
            let lr = match ncschur::rs_lr_expand(s) {
                Ok(v) => v,
                Err(Error::IdentityViolation(m)) => return Ok(vec![(false, m)]),
                Err(e) => return Err(e),
            };
            let mut out = vec![(true, String::new())];
            for gamma in IntegerPartition::all(s.size()) {
                let lhs = q(kostka(s, &gamma) as i64);
                let rhs: Q = lr
                    .iter()
                    .map(|(nu, c)| c * q(kostka(&SkewShape::straight(nu.clone()), &gamma) as i64))
                    .sum();
                out.push((lhs == rhs, format!("K^{}_{} ≠ Σ c K", s, gamma)));
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?;
    r.absorb(results.into_iter().flatten().collect());
    Ok(r)
}

/// `Δ_{i,n−i}(S_λ) = C(n,i) Σ_μ S_μ ⊗ S_{λ/μ}` for every split `i`.
pub fn rscoprod(max_n: usize) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("rscoprod", format!("λ ⊢ n ≤ {}, all i", max_n));
    let mut jobs = Vec::new();
    for n in 1..=max_n {
        for l in IntegerPartition::all(n) {
            for i in 0..=n {
                jobs.push((l.clone(), i));
            }
        }
    }
    let results = jobs
        .par_iter()
        .map(|(l, i)| Ok((ncschur::rs_coproduct_check(l, *i)?, format!("Δ_{{{},{}}}(S_{})", i, l.size() - i, l))))
        .collect::<Result<Vec<_>>>()?;
    r.absorb(results);
    Ok(r)
}

/// `ι(𝐫_α) = r_[α]`, `ι(𝔖_λ) = s_[λ]`, `ρ∘ι = χ` on `𝐡_α`, `ι` multiplicative
/// on `𝐡_α 𝐡_β`, and `r_[α] r_[β] = r_[α·β] + r_[α⊙β]`.
pub fn iota(max_n: usize) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("iota", format!("compositions of n ≤ {}", max_n));
    let comps: Vec<Composition> = (1..=max_n).flat_map(Composition::all).collect();
    let results = comps
        .par_iter()
        .map(|a| {
            let ribbon = NSymExpr::single(NSymBasis::R, a.clone()).iota();
            let ribbon_ok = match ncschur::ribbon_source(a) {
                Ok(rs) => ribbon == rs,
                Err(_) => false,
            };
            let h = NSymExpr::single(NSymBasis::H, a.clone());
            let tri = h.iota().rho()?.equals(&h.chi())?;
            Ok(vec![
                (ribbon_ok, format!("ι(R_{}) ≠ r_[{}]", a, a)),
                (tri, format!("ρι(H_{}) ≠ χ(H_{})", a, a)),
            ])
        })
        .collect::<Result<Vec<_>>>()?;
    r.absorb(results.into_iter().flatten().collect());
    let parts: Vec<IntegerPartition> = (1..=max_n).flat_map(IntegerPartition::all).collect();
    let results = parts
        .par_iter()
        .map(|l| {
            let im = NSymExpr::single(NSymBasis::Immaculate, l.as_composition()).iota();
            (im == ncschur::source_skew_schur(&SkewShape::straight(l.clone())), format!("ι(I_{}) ≠ s_[{}]", l, l))
        })
        .collect();
    r.absorb(results);
    let mut pairs = Vec::new();
    for a in &comps {
        for b in &comps {
            if a.size() + b.size() <= max_n {
                pairs.push((a.clone(), b.clone()));
            }
        }
    }
    let results = pairs
        .par_iter()
        .map(|(a, b)| {
            let (ha, hb) = (NSymExpr::single(NSymBasis::H, a.clone()), NSymExpr::single(NSymBasis::H, b.clone()));
            let morph = ha.product(&hb).iota() == ha.iota().product(&hb.iota())?;
            let rr = ncschur::ribbon_source(a)?.product(&ncschur::ribbon_source(b)?)?;
            let rhs = ncschur::ribbon_source(&a.concat(b))?.add(&ncschur::ribbon_source(&a.near_concat(b)?)?)?;
            Ok(vec![
                (morph, format!("ι(H_{} H_{}) ≠ ι(H_{})ι(H_{})", a, b, a, b)),
                (rr.equals(&rhs)?, format!("r_[{}] r_[{}] ≠ r_[{}·{}] + r_[{}⊙{}]", a, b, a, b, a, b)),
            ])
        })
        .collect::<Result<Vec<_>>>()?;
    r.absorb(results.into_iter().flatten().collect());
    Ok(r)
}

/// The swap checks of [`lgv::lgv_check`] on every skew shape of size at most
/// `max_n`, for each height cap up to `max_height`.
pub fn lgv_suite(max_n: usize, max_height: usize) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("lgv", format!("skew shapes of size ≤ {}, heights ≤ {}", max_n, max_height));
    let mut jobs = Vec::new();
    for n in 1..=max_n {
        for s in SkewShape::all_without_empty_lines(n) {
            for k in 1..=max_height {
                jobs.push((s.clone(), k));
            }
        }
    }
    let reports = jobs
        .par_iter()
        .map(|(s, k)| lgv::lgv_check(s, *k))
        .collect::<Result<Vec<_>>>()?;
    let mut tuples = 0;
    for rep in reports {
        tuples += rep.tuples;
        let tag = format!("{} k={}", rep.shape, rep.height_cap);
        for (name, list) in [
            ("not an involution", &rep.involution_failures),
            ("fixed point intersects or has ε ≠ id", &rep.fixed_point_failures),
            ("sign not reversed", &rep.sign_failures),
            ("heights not preserved", &rep.height_failures),
            ("monomials not matched", &rep.monomial_failures),
        ] {
            r.record(list.is_empty(), || format!("{}: {} on {}", tag, name, list[0]));
        }
        r.record(rep.signed_sum_collapses, || format!("{}: signed sum does not collapse", tag));
        r.record(rep.bridge_holds, || format!("{}: h-monomial bridge fails", tag));
        r.record(rep.ssyt_bijection, || format!("{}: fixed points do not match SSYT", tag));
    }
    r.notes.push(format!("{} path tuples examined", tuples));
    Ok(r)
}

/// `b_π b_σ = b_{π|σ}` for `b ∈ {p, e, h}`, checked on the monomial oracle
/// with as many variables as the total degree.
pub fn hmult(max_total: usize) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("hmult", format!("p, e, h with total size ≤ {}, oracle at k = n", max_total));
    let mut jobs = Vec::new();
    for a in 1..max_total {
        for b in 1..=max_total - a {
            for pi in SetPartition::all(a) {
                for sigma in SetPartition::all(b) {
                    for basis in [NcBasis::P, NcBasis::E, NcBasis::H] {
                        jobs.push((basis, pi.clone(), sigma.clone()));
                    }
                }
            }
        }
    }
    let results = jobs
        .par_iter()
        .map(|(basis, pi, sigma)| {
            let k = pi.size() + sigma.size();
            let f = NcExpr::single(*basis, pi.clone());
            let g = NcExpr::single(*basis, sigma.clone());
            let prod = f.product(&g)?;
            let slash_ok = prod == NcExpr::single(*basis, pi.slash(sigma));
            let lhs = f.oracle_expand(k)?.try_mul(&g.oracle_expand(k)?)?;
            let oracle_ok = lhs.try_eq(&prod.oracle_expand(k)?)?;
            Ok((slash_ok && oracle_ok, format!("{}_{{{}}} {}_{{{}}}", basis.letter(), pi, basis.letter(), sigma)))
        })
        .collect::<Result<Vec<_>>>()?;
    r.absorb(results);
    Ok(r)
}

/// Specht ranks with `f^λ` for every `λ ⊢ n ≤ max_n`.
pub fn specht_ranks(max_n: usize) -> Result<Vec<(IntegerPartition, usize, usize)>> {
    let parts: Vec<IntegerPartition> = (1..=max_n).flat_map(IntegerPartition::all).collect();
    parts
        .par_iter()
        .map(|l| {
            let f = standard_tableaux_count(&SkewShape::straight(l.clone()));
            Ok((l.clone(), ncschur::specht_rank(l)?, f))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        for (name, size) in [
            ("prod", 4),
            ("ncschur-triangular", 3),
            ("transpose", 3),
            ("deltaact", 2),
            ("rsrefines", 3),
            ("rslr", 4),
            ("rscoprod", 3),
            ("iota", 4),
            ("lgv", 3),
            ("hmult", 4),
        ] {
            let opts = SuiteOptions { max_size: Some(size), vars: Some(2), seed: 7 };
            let r = run_suite(name, &opts).unwrap();
            assert!(r.passed(), "{}", r);
            assert!(r.checks > 0, "{}", name);
        }
    }

    #[test]
    fn reverse_lex_order_is_not_triangular_at_four() {
        let r = ncschur_triangular(4).unwrap();
        assert!(r.passed());
        assert!(r.notes.iter().any(|n| n.starts_with("n = 4")));
    }

    #[test]
    fn unknown_suite() {
        assert!(run_suite("nope", &SuiteOptions::default()).is_err());
    }

    #[test]
    fn tabloid_representative_counts() {
        let l: IntegerPartition = "2.1".parse().unwrap();
        assert_eq!(tabloid_representatives(&l).unwrap().len(), 3);
    }
}
