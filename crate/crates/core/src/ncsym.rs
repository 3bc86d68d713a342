//! Symmetric functions in noncommuting variables: bases indexed by set
//! partitions, exact basis change, products, `ω`, the permutation action,
//! the projection `ρ`, the coproduct, and expansion into noncommuting
//! monomials.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use itertools::Itertools;
use num_traits::One;
use serde_json::Value;

use crate::combinatorics::{IntegerPartition, Permutation, SetPartition};
use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::ncpoly::{NCPolynomial, Word};
use crate::ncschur;
use crate::rational::{q, q_int, Q};
use crate::sym::{SymBasis, SymExpr};
use crate::text;
use crate::transition::{triangular_solve, triangular_solve_from_top};

/// Largest degree the monomial oracle will expand (cost grows like `k^n`).
pub const ORACLE_DEGREE_LIMIT: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NcBasis {
    M,
    P,
    E,
    H,
    /// Standard Schur functions `s_π`.
    S,
    /// Transposed standard Schur functions `s^t_π`.
    St,
    /// Tabloid Schur functions `s_[t]`, `t` the tableau of `π`.
    Tabloid,
}

impl NcBasis {
    pub const ALL: [NcBasis; 7] = [
        NcBasis::M,
        NcBasis::P,
        NcBasis::E,
        NcBasis::H,
        NcBasis::S,
        NcBasis::St,
        NcBasis::Tabloid,
    ];

    pub fn letter(self) -> &'static str {
        match self {
            NcBasis::M => "m",
            NcBasis::P => "p",
            NcBasis::E => "e",
            NcBasis::H => "h",
            NcBasis::S => "s",
            NcBasis::St => "st",
            NcBasis::Tabloid => "tab",
        }
    }

    pub fn from_letter(s: &str) -> Option<Self> {
        NcBasis::ALL.into_iter().find(|b| b.letter() == s)
    }

    fn is_schur_type(self) -> bool {
        matches!(self, NcBasis::S | NcBasis::St | NcBasis::Tabloid)
    }
}

impl fmt::Display for NcBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A linear combination of one NCSym basis.
#[derive(Clone, PartialEq, Eq)]
pub struct NcExpr {
    basis: NcBasis,
    terms: LinComb<SetPartition>,
}

impl NcExpr {
    pub fn new(basis: NcBasis, terms: LinComb<SetPartition>) -> Self {
        NcExpr { basis, terms }
    }

    pub fn zero(basis: NcBasis) -> Self {
        Self::new(basis, LinComb::zero())
    }

    pub fn one(basis: NcBasis) -> Self {
        Self::single(basis, SetPartition::empty())
    }

    pub fn single(basis: NcBasis, pi: SetPartition) -> Self {
        Self::new(basis, LinComb::single(pi, Q::one()))
    }

    pub fn basis(&self) -> NcBasis {
        self.basis
    }

    pub fn terms(&self) -> &LinComb<SetPartition> {
        &self.terms
    }

    pub fn coeff(&self, pi: &SetPartition) -> Q {
        self.terms.coeff(pi)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    /// Largest degree among the terms, 0 for the zero element.
    pub fn max_degree(&self) -> usize {
        self.terms.keys().map(|p| p.size()).max().unwrap_or(0)
    }

    /// The degree, if every term has the same one.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(|p| p.size());
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn scale(&self, s: &Q) -> NcExpr {
        Self::new(self.basis, self.terms.scale(s))
    }

    /// Sum, expressed in the basis of `self`.
    pub fn add(&self, other: &NcExpr) -> Result<NcExpr> {
        let o = other.convert(self.basis)?;
        Ok(Self::new(self.basis, &self.terms + &o.terms))
    }

    pub fn sub(&self, other: &NcExpr) -> Result<NcExpr> {
        self.add(&other.scale(&-Q::one()))
    }

    pub fn to_m(&self) -> Result<NcExpr> {
        if self.basis == NcBasis::M {
            return Ok(self.clone());
        }
        let mut out = LinComb::zero();
        for (pi, c) in self.terms.iter() {
            out.add_scaled(&element_in_m(self.basis, pi)?, c);
        }
        Ok(Self::new(NcBasis::M, out))
    }

    pub fn convert(&self, target: NcBasis) -> Result<NcExpr> {
        if target == self.basis {
            return Ok(self.clone());
        }
        // Direct routes that avoid the monomial basis.
        match (self.basis, target) {
            (NcBasis::S | NcBasis::Tabloid, NcBasis::H) | (NcBasis::St, NcBasis::E) => {
                return self.expand_schur_type();
            }
            _ => {}
        }
        let m = self.to_m()?;
        let terms = match target {
            NcBasis::M => m.terms,
            NcBasis::P => m_to_p(&m.terms)?,
            NcBasis::H | NcBasis::E => {
                let p = m_to_p(&m.terms)?;
                triangular_solve_from_top(&p, |pi| element_in_p(target, pi))?
            }
            NcBasis::S | NcBasis::Tabloid => {
                let h = self.convert(NcBasis::H)?;
                triangular_solve(&h.terms, |pi| Ok(schur_element(target, pi)?.terms))?
            }
            NcBasis::St => {
                let e = self.convert(NcBasis::E)?;
                triangular_solve(&e.terms, |pi| Ok(schur_element(target, pi)?.terms))?
            }
        };
        Ok(Self::new(target, terms))
    }

    /// Rewrites `s`/`tab` in `h` and `st` in `e`.
    fn expand_schur_type(&self) -> Result<NcExpr> {
        let target = if self.basis == NcBasis::St {
            NcBasis::E
        } else {
            NcBasis::H
        };
        let mut out = LinComb::zero();
        for (pi, c) in self.terms.iter() {
            out.add_scaled(&schur_element(self.basis, pi)?.terms, c);
        }
        Ok(Self::new(target, out))
    }

    /// Equality as elements of NCSym, regardless of basis.
    pub fn equals(&self, other: &NcExpr) -> Result<bool> {
        if self.basis == other.basis {
            return Ok(self.terms == other.terms);
        }
        Ok(self.to_m()?.terms == other.to_m()?.terms)
    }

    /// Product. On `p`, `e` and `h` indices multiply by the slash product;
    /// other bases go through `h` and come back to the basis of `self`.
    pub fn product(&self, other: &NcExpr) -> Result<NcExpr> {
        if self.basis == other.basis && matches!(self.basis, NcBasis::P | NcBasis::E | NcBasis::H) {
            let terms = self
                .terms
                .bilinear(&other.terms, |a, b| LinComb::single(a.slash(b), Q::one()));
            return Ok(Self::new(self.basis, terms));
        }
        let a = self.convert(NcBasis::H)?;
        let b = other.convert(NcBasis::H)?;
        a.product(&b)?.convert(self.basis)
    }

    /// The involution `ω`: `h_π ↔ e_π`, `p_π ↦ (−1)^π p_π`, `s_π ↔ s^t_π`.
    pub fn omega(&self) -> Result<NcExpr> {
        Ok(match self.basis {
            NcBasis::H => Self::new(NcBasis::E, self.terms.clone()),
            NcBasis::E => Self::new(NcBasis::H, self.terms.clone()),
            NcBasis::S => Self::new(NcBasis::St, self.terms.clone()),
            NcBasis::St => Self::new(NcBasis::S, self.terms.clone()),
            NcBasis::P => Self::new(
                NcBasis::P,
                self.terms
                    .iter()
                    .map(|(pi, c)| (pi.clone(), c * q(pi.sign() as i64)))
                    .collect(),
            ),
            NcBasis::M => self.convert(NcBasis::H)?.omega()?.convert(NcBasis::M)?,
            NcBasis::Tabloid => self.convert(NcBasis::H)?.omega()?,
        })
    }

    /// `δ ∘ f`. Indices of `m`, `p`, `e`, `h` are relabelled; Schur-type
    /// bases are rewritten in `h` first.
    pub fn delta_action(&self, delta: &Permutation) -> Result<NcExpr> {
        if self.basis.is_schur_type() {
            return self.convert(NcBasis::H)?.delta_action(delta);
        }
        let mut out = LinComb::zero();
        for (pi, c) in self.terms.iter() {
            out.add_term(pi.permute(delta)?, c.clone());
        }
        Ok(Self::new(self.basis, out))
    }

    /// The projection `ρ` letting the variables commute.
    pub fn rho(&self) -> Result<SymExpr> {
        let (basis, scale): (SymBasis, fn(&IntegerPartition) -> Q) = match self.basis {
            NcBasis::M => (SymBasis::M, |l| q_int(l.multiplicity_factorial())),
            NcBasis::P => (SymBasis::P, |_| Q::one()),
            NcBasis::E => (SymBasis::E, |l| q_int(l.factorial())),
            NcBasis::H => (SymBasis::H, |l| q_int(l.factorial())),
            _ => return self.convert(NcBasis::H)?.rho(),
        };
        let mut out = LinComb::zero();
        for (pi, c) in self.terms.iter() {
            let l = pi.shape();
            let s = scale(&l);
            out.add_term(l, c * s);
        }
        Ok(SymExpr::new(basis, out))
    }

    /// Truncated expansion in `k` noncommuting variables, straight from the
    /// monomial definitions of `m`, `p`, `e` and the block-fixing
    /// description of `h`.
    pub fn oracle_expand(&self, k: usize) -> Result<NCPolynomial> {
        if self.basis.is_schur_type() {
            return self.convert(NcBasis::H)?.oracle_expand(k);
        }
        let n = self.max_degree();
        if n > ORACLE_DEGREE_LIMIT {
            return Err(Error::DegreeGuard {
                what: "oracle expansion",
                degree: n,
                limit: ORACLE_DEGREE_LIMIT,
            });
        }
        let mut out = NCPolynomial::zero(k);
        for (pi, c) in self.terms.iter() {
            for (w, count) in oracle_counts(self.basis, pi, k) {
                out.add_term(w, c * q(count));
            }
        }
        Ok(out)
    }

    /// `Δ_{i,n−i}` in `m ⊗ m`.
    pub fn coproduct(&self, i: usize) -> Result<Tensor> {
        let m = self.to_m()?;
        let mut out = LinComb::zero();
        for (pi, c) in m.terms.iter() {
            if i > pi.size() {
                continue;
            }
            let l = pi.len();
            for mask in 0u64..(1u64 << l) {
                let keep: Vec<bool> = (0..l).map(|b| mask >> b & 1 == 1).collect();
                let left_size: usize = pi
                    .blocks()
                    .iter()
                    .zip(&keep)
                    .filter(|(_, &k)| k)
                    .map(|(b, _)| b.len())
                    .sum();
                if left_size != i {
                    continue;
                }
                let rest: Vec<bool> = keep.iter().map(|k| !k).collect();
                out.add_term((pi.standardized_sub(&keep), pi.standardized_sub(&rest)), c.clone());
            }
        }
        Ok(out)
    }

    pub fn to_json(&self) -> Value {
        text::terms_to_json(self.basis.letter(), self.terms.iter())
    }

    pub fn from_json(v: &Value) -> Result<NcExpr> {
        let (letter, raw) = text::terms_from_json(v)?;
        let basis = NcBasis::from_letter(&letter)
            .ok_or_else(|| Error::invalid(format!("unknown NCSym basis {:?}", letter)))?;
        let mut terms = LinComb::zero();
        for (idx, c) in raw {
            terms.add_term(idx.parse::<SetPartition>()?, c);
        }
        Ok(Self::new(basis, terms))
    }
}

/// Elements of `NCSym ⊗ NCSym` in the `m ⊗ m` basis.
pub type Tensor = LinComb<(SetPartition, SetPartition)>;

/// `f ⊗ g` in `m ⊗ m`.
pub fn tensor(f: &NcExpr, g: &NcExpr) -> Result<Tensor> {
    let a = f.to_m()?;
    let b = g.to_m()?;
    Ok(a.terms
        .bilinear(&b.terms, |x, y| LinComb::single((x.clone(), y.clone()), Q::one())))
}

impl fmt::Display for NcExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        text::write_terms(f, self.basis.letter(), self.terms.iter())
    }
}

impl fmt::Debug for NcExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NcExpr({})", self)
    }
}

impl FromStr for NcExpr {
    type Err = Error;
    /// Parses `1/2 h[13/2] - 1/6 h[123]`; all terms must use one basis.
    fn from_str(s: &str) -> Result<Self> {
        let raw = text::parse_terms(s)?;
        let Some(first) = raw.first() else {
            return Err(Error::parse(s, 0, "a bare 0 has no basis; write e.g. 0 h[1]"));
        };
        let basis = NcBasis::from_letter(&first.basis)
            .ok_or_else(|| Error::parse(s, first.index_pos.saturating_sub(first.basis.len() + 1), "unknown basis"))?;
        let mut terms = LinComb::zero();
        for t in raw {
            if t.basis != basis.letter() {
                return Err(Error::parse(s, t.index_pos, "all terms must use the same basis"));
            }
            let pi: SetPartition = t.index.parse().map_err(|e| text::relocate(e, s, t.index_pos))?;
            terms.add_term(pi, t.coeff);
        }
        Ok(NcExpr::new(basis, terms))
    }
}

/// The monomial expansion of a single `m`, `p`, `e` or `h` element.
fn direct_in_m(basis: NcBasis, pi: &SetPartition) -> LinComb<SetPartition> {
    let n = pi.size();
    let all = SetPartition::all(n);
    match basis {
        NcBasis::M => LinComb::single(pi.clone(), Q::one()),
        NcBasis::P => all
            .into_iter()
            .filter(|s| pi.leq(s).expect("same size"))
            .map(|s| (s, Q::one()))
            .collect(),
        NcBasis::E => all
            .into_iter()
            .filter(|s| s.meet_is_minimum(pi).expect("same size"))
            .map(|s| (s, Q::one()))
            .collect(),
        NcBasis::H => all
            .into_iter()
            .map(|s| {
                let c = q_int(s.meet(pi).expect("same size").shape().factorial());
                (s, c)
            })
            .collect(),
        _ => unreachable!("Schur-type elements are expanded through ncschur"),
    }
}

type ElementCache = RwLock<HashMap<(NcBasis, SetPartition), Arc<LinComb<SetPartition>>>>;

fn m_cache() -> &'static ElementCache {
    static C: OnceLock<ElementCache> = OnceLock::new();
    C.get_or_init(|| RwLock::new(HashMap::new()))
}

fn p_cache() -> &'static ElementCache {
    static C: OnceLock<ElementCache> = OnceLock::new();
    C.get_or_init(|| RwLock::new(HashMap::new()))
}

fn memo(
    cache: &'static ElementCache,
    basis: NcBasis,
    pi: &SetPartition,
    compute: impl FnOnce() -> Result<LinComb<SetPartition>>,
) -> Result<LinComb<SetPartition>> {
    if let Some(v) = cache.read().expect("cache lock").get(&(basis, pi.clone())) {
        return Ok((**v).clone());
    }
    let v = compute()?;
    cache
        .write()
        .expect("cache lock")
        .insert((basis, pi.clone()), Arc::new(v.clone()));
    Ok(v)
}

/// A single basis element in the `m` basis.
pub fn element_in_m(basis: NcBasis, pi: &SetPartition) -> Result<LinComb<SetPartition>> {
    match basis {
        NcBasis::M => Ok(LinComb::single(pi.clone(), Q::one())),
        NcBasis::P | NcBasis::E | NcBasis::H => Ok(direct_in_m(basis, pi)),
        _ => memo(m_cache(), basis, pi, || {
            Ok(schur_element(basis, pi)?.to_m()?.terms)
        }),
    }
}

/// A single `h` or `e` element in the `p` basis.
fn element_in_p(basis: NcBasis, pi: &SetPartition) -> Result<LinComb<SetPartition>> {
    memo(p_cache(), basis, pi, || m_to_p(&direct_in_m(basis, pi)))
}

fn m_to_p(m: &LinComb<SetPartition>) -> Result<LinComb<SetPartition>> {
    triangular_solve(m, |pi| Ok(direct_in_m(NcBasis::P, pi)))
}

fn schur_element(basis: NcBasis, pi: &SetPartition) -> Result<NcExpr> {
    match basis {
        NcBasis::S => Ok(ncschur::standard_schur(pi)),
        NcBasis::St => Ok(ncschur::transposed_schur(pi)),
        NcBasis::Tabloid => Ok(ncschur::tabloid_basis_element(pi)),
        _ => Err(Error::Internal(format!("{} is not a Schur-type basis", basis))),
    }
}

/// Word multiplicities in the expansion of one basis element.
fn oracle_counts(basis: NcBasis, pi: &SetPartition, k: usize) -> HashMap<Word, i64> {
    let n = pi.size();
    let blocks = pi.blocks();
    let mut out: HashMap<Word, i64> = HashMap::new();
    let mut emit = |w: Vec<u8>, c: i64| *out.entry(Word::new(w)).or_insert(0) += c;
    let fill = |letters: &[usize]| -> Vec<u8> {
        let mut w = vec![0u8; n];
        for (b, &l) in blocks.iter().zip(letters) {
            for &x in b {
                w[x - 1] = l as u8;
            }
        }
        w
    };
    match basis {
        // Distinct blocks get distinct letters, equal letters within a block.
        NcBasis::M => {
            for letters in (1..=k).permutations(blocks.len()) {
                emit(fill(&letters), 1);
            }
        }
        // Equal letters within a block, no other constraint.
        NcBasis::P => {
            if blocks.is_empty() {
                emit(Vec::new(), 1);
            } else {
                for letters in (0..blocks.len()).map(|_| 1..=k).multi_cartesian_product() {
                    emit(fill(&letters), 1);
                }
            }
        }
        // Distinct letters within each block.
        NcBasis::E => {
            let labels = pi.block_labels();
            let mut w = vec![0u8; n];
            fn rec(
                i: usize,
                k: usize,
                labels: &[usize],
                w: &mut Vec<u8>,
                emit: &mut dyn FnMut(Vec<u8>, i64),
            ) {
                if i == w.len() {
                    emit(w.clone(), 1);
                    return;
                }
                for l in 1..=k as u8 {
                    if (0..i).any(|j| labels[j] == labels[i] && w[j] == l) {
                        continue;
                    }
                    w[i] = l;
                    rec(i + 1, k, labels, w, emit);
                }
            }
            rec(0, k, &labels, &mut w, &mut emit);
        }
        // Σ over block-fixing η and tuples weakly increasing inside blocks of
        // x_{i_η(1)} ⋯ x_{i_η(n)}.
        NcBasis::H => {
            let per_block: Vec<Vec<Vec<(usize, u8)>>> = blocks
                .iter()
                .map(|b| {
                    let mut options = Vec::new();
                    for seq in (1..=k as u8).combinations_with_replacement(b.len()) {
                        // i_{b_j} = seq[j]; η permutes the block positions.
                        for eta in (0..b.len()).permutations(b.len()) {
                            options.push(
                                b.iter()
                                    .enumerate()
                                    .map(|(j, &pos)| (pos, seq[eta[j]]))
                                    .collect::<Vec<_>>(),
                            );
                        }
                    }
                    options
                })
                .collect();
            if per_block.is_empty() {
                emit(Vec::new(), 1);
            } else {
                for choice in per_block.iter().map(|o| o.iter()).multi_cartesian_product() {
                    let mut w = vec![0u8; n];
                    for assignment in choice {
                        for &(pos, l) in assignment {
                            w[pos - 1] = l;
                        }
                    }
                    emit(w, 1);
                }
            }
        }
        _ => unreachable!("Schur-type bases are expanded through h"),
    }
    out
}
