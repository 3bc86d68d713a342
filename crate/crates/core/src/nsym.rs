//! Noncommutative symmetric functions over compositions, with the complete
//! homogeneous, ribbon and immaculate bases, and the maps into NCSym and Sym.

use std::fmt;
use std::str::FromStr;

use num_traits::One;
use serde_json::Value;

use crate::combinatorics::{Composition, Permutation, WeakComposition};
use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::ncsym::{NcBasis, NcExpr};
use crate::rational::{neg_one_pow, q, q_int, Q};
use crate::sym::{SymBasis, SymExpr};
use crate::text;
use crate::transition::triangular_solve;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NSymBasis {
    H,
    R,
    Immaculate,
}

impl NSymBasis {
    pub const ALL: [NSymBasis; 3] = [NSymBasis::H, NSymBasis::R, NSymBasis::Immaculate];

    pub fn letter(self) -> &'static str {
        match self {
            NSymBasis::H => "H",
            NSymBasis::R => "R",
            NSymBasis::Immaculate => "I",
        }
    }

    pub fn from_letter(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|b| b.letter() == s)
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct NSymExpr {
    basis: NSymBasis,
    terms: LinComb<Composition>,
}

impl NSymExpr {
    pub fn new(basis: NSymBasis, terms: LinComb<Composition>) -> Self {
        Self { basis, terms }
    }

    pub fn zero(basis: NSymBasis) -> Self {
        Self::new(basis, LinComb::zero())
    }

    pub fn single(basis: NSymBasis, alpha: Composition) -> Self {
        Self::new(basis, LinComb::single(alpha, Q::one()))
    }

    pub fn basis(&self) -> NSymBasis {
        self.basis
    }

    pub fn terms(&self) -> &LinComb<Composition> {
        &self.terms
    }

    pub fn coeff(&self, alpha: &Composition) -> Q {
        self.terms.coeff(alpha)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn scale(&self, s: &Q) -> NSymExpr {
        Self::new(self.basis, self.terms.scale(s))
    }

    pub fn add(&self, other: &NSymExpr) -> Result<NSymExpr> {
        let b = other.convert(self.basis)?;
        Ok(Self::new(self.basis, &self.terms + &b.terms))
    }

    pub fn sub(&self, other: &NSymExpr) -> Result<NSymExpr> {
        let b = other.convert(self.basis)?;
        Ok(Self::new(self.basis, &self.terms - &b.terms))
    }

    pub fn to_h(&self) -> NSymExpr {
        let terms = self.terms.flat_map(|a| element_in_h(self.basis, a));
        Self::new(NSymBasis::H, terms)
    }

    pub fn convert(&self, target: NSymBasis) -> Result<NSymExpr> {
        if target == self.basis {
            return Ok(self.clone());
        }
        let h = self.to_h();
        if target == NSymBasis::H {
            return Ok(h);
        }
        let terms = triangular_solve(&h.terms, |a| Ok(element_in_h(target, a)))?;
        Ok(Self::new(target, terms))
    }

    pub fn equals(&self, other: &NSymExpr) -> Result<bool> {
        Ok(self.to_h().terms == other.to_h().terms)
    }

    /// Product computed on `H` by concatenation, returned in `H`.
    pub fn product(&self, other: &NSymExpr) -> NSymExpr {
        let a = self.to_h();
        let b = other.to_h();
        Self::new(
            NSymBasis::H,
            a.terms
                .bilinear(&b.terms, |x, y| LinComb::single(x.concat(y), Q::one())),
        )
    }

    /// `ι(𝐡_α) = (1/α!) h_[α]`.
    pub fn iota(&self) -> NcExpr {
        let terms = self
            .to_h()
            .terms
            .iter()
            .map(|(a, c)| (a.set_partition(), c / q_int(a.factorial())))
            .collect();
        NcExpr::new(NcBasis::H, terms)
    }

    /// `χ(𝐡_α) = h_{λ(α)}`.
    pub fn chi(&self) -> SymExpr {
        let terms = self
            .to_h()
            .terms
            .iter()
            .map(|(a, c)| (a.sorted(), c.clone()))
            .collect();
        SymExpr::new(SymBasis::H, terms)
    }

    pub fn to_json(&self) -> Value {
        text::terms_to_json(self.basis.letter(), self.terms.iter())
    }

    pub fn from_json(v: &Value) -> Result<NSymExpr> {
        let (letter, raw) = text::terms_from_json(v)?;
        let basis = NSymBasis::from_letter(&letter)
            .ok_or_else(|| Error::invalid(format!("unknown NSym basis {:?}", letter)))?;
        let mut terms = LinComb::zero();
        for (idx, c) in raw {
            terms.add_term(idx.parse::<Composition>()?, c);
        }
        Ok(Self::new(basis, terms))
    }
}

/// `𝐫_α = (−1)^{ℓ(α)} Σ_{β ≽ α} (−1)^{ℓ(β)} 𝐡_β`.
pub fn ribbon_to_h(alpha: &Composition) -> NSymExpr {
    let terms = alpha
        .coarsenings()
        .into_iter()
        .map(|b| {
            let c = neg_one_pow(alpha.len() + b.len());
            (b, c)
        })
        .collect();
    NSymExpr::new(NSymBasis::H, terms)
}

/// `𝔖_α = Σ_ε sgn(ε) 𝐡_{α+ε−id}`, dropping zero parts and terms with a
/// negative part.
pub fn immaculate_to_h(alpha: &Composition) -> NSymExpr {
    let mut terms = LinComb::zero();
    for eps in Permutation::all(alpha.len()) {
        let parts: Vec<i64> = (1..=alpha.len())
            .map(|i| alpha.parts()[i - 1] as i64 + eps.apply(i) as i64 - i as i64)
            .collect();
        if let Some(w) = WeakComposition::from_signed(&parts) {
            terms.add_term(w.without_zeros(), q(eps.sign() as i64));
        }
    }
    NSymExpr::new(NSymBasis::H, terms)
}

fn element_in_h(basis: NSymBasis, alpha: &Composition) -> LinComb<Composition> {
    match basis {
        NSymBasis::H => LinComb::single(alpha.clone(), Q::one()),
        NSymBasis::R => ribbon_to_h(alpha).terms,
        NSymBasis::Immaculate => immaculate_to_h(alpha).terms,
    }
}

impl fmt::Display for NSymExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        text::write_terms(f, self.basis.letter(), self.terms.iter())
    }
}

impl fmt::Debug for NSymExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NSymExpr({})", self)
    }
}

impl FromStr for NSymExpr {
    type Err = Error;
    /// Parses `H[1.2] - H[3]`; all terms must use one basis.
    fn from_str(s: &str) -> Result<Self> {
        let raw = text::parse_terms(s)?;
        let Some(first) = raw.first() else {
            return Err(Error::parse(s, 0, "a bare 0 has no basis; write e.g. 0 H[1]"));
        };
        let basis = NSymBasis::from_letter(&first.basis)
            .ok_or_else(|| Error::parse(s, first.index_pos.saturating_sub(first.basis.len() + 1), "unknown basis"))?;
        let mut terms = LinComb::zero();
        for t in raw {
            if t.basis != basis.letter() {
                return Err(Error::parse(s, t.index_pos, "all terms must use the same basis"));
            }
            let a: Composition = t.index.parse().map_err(|e| text::relocate(e, s, t.index_pos))?;
            terms.add_term(a, t.coeff);
        }
        Ok(NSymExpr::new(basis, terms))
    }
}
