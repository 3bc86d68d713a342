//! Truncated polynomials in noncommuting (and commuting) variables
//! `x_1, …, x_k`. These are the brute-force ground truth that symbolic
//! identities are checked against.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::rational::{format_q, parse_q, Q};

/// A monomial `x_{i_1} x_{i_2} ⋯ x_{i_n}`, letters 1-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn new(letters: Vec<u8>) -> Self {
        Word(letters)
    }

    pub fn from_usize(letters: &[usize]) -> Self {
        Word(letters.iter().map(|&l| l as u8).collect())
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Exponent vector of length `k`.
    pub fn exponents(&self, k: usize) -> Vec<usize> {
        let mut e = vec![0; k];
        for &l in &self.0 {
            e[l as usize - 1] += 1;
        }
        e
    }

    /// All `k^n` words of length `n`, lexicographically.
    pub fn all(n: usize, k: usize) -> impl Iterator<Item = Word> {
        let total = if k == 0 && n > 0 { 0 } else { k.pow(n as u32) };
        (0..total).map(move |mut idx| {
            let mut v = vec![0u8; n];
            for slot in v.iter_mut().rev() {
                *slot = (idx % k) as u8 + 1;
                idx /= k;
            }
            Word(v)
        })
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let s: Vec<String> = self.0.iter().map(|l| format!("x{}", l)).collect();
        write!(f, "{}", s.join("*"))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({:?})", self.0)
    }
}

fn check_k(a: usize, b: usize) -> Result<()> {
    if a != b {
        return Err(Error::CutoffMismatch { left: a, right: b });
    }
    Ok(())
}

fn format_terms<'a, K: 'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (&'a K, &'a Q)>,
    show: impl Fn(&K) -> String,
) -> fmt::Result {
    let mut first = true;
    for (key, c) in terms {
        let neg = c < &Q::zero();
        let abs = if neg { -c.clone() } else { c.clone() };
        let sep = match (first, neg) {
            (true, true) => "-",
            (true, false) => "",
            (false, true) => " - ",
            (false, false) => " + ",
        };
        let mon = show(key);
        if abs.is_one() {
            write!(f, "{}{}", sep, mon)?;
        } else if mon == "1" {
            write!(f, "{}{}", sep, format_q(&abs))?;
        } else {
            write!(f, "{}{} {}", sep, format_q(&abs), mon)?;
        }
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

/// A finite `Q`-linear combination of words over `{1, …, k}`.
#[derive(Clone, PartialEq, Eq)]
pub struct NCPolynomial {
    k: usize,
    terms: HashMap<Word, Q>,
}

impl NCPolynomial {
    pub fn zero(k: usize) -> Self {
        NCPolynomial {
            k,
            terms: HashMap::new(),
        }
    }

    pub fn one(k: usize) -> Self {
        Self::monomial(k, Word::default(), Q::one())
    }

    pub fn monomial(k: usize, w: Word, c: Q) -> Self {
        let mut p = Self::zero(k);
        p.add_term(w, c);
        p
    }

    /// `x_i`
    pub fn var(k: usize, i: usize) -> Result<Self> {
        if i == 0 || i > k {
            return Err(Error::invalid(format!("variable x{} outside 1..{}", i, k)));
        }
        Ok(Self::monomial(k, Word::new(vec![i as u8]), Q::one()))
    }

    pub fn from_terms(k: usize, terms: impl IntoIterator<Item = (Word, Q)>) -> Result<Self> {
        let mut p = Self::zero(k);
        for (w, c) in terms {
            if w.letters().iter().any(|&l| l == 0 || l as usize > k) {
                return Err(Error::invalid(format!("word {} uses a letter outside 1..{}", w, k)));
            }
            p.add_term(w, c);
        }
        Ok(p)
    }

    pub fn cutoff(&self) -> usize {
        self.k
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Word) -> Q {
        self.terms.get(w).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add_term(&mut self, w: Word, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::hash_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    /// Terms sorted by word.
    pub fn sorted_terms(&self) -> Vec<(&Word, &Q)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.cmp(b.0));
        v
    }

    pub fn try_add(&self, other: &NCPolynomial) -> Result<NCPolynomial> {
        check_k(self.k, other.k)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &NCPolynomial) -> Result<NCPolynomial> {
        self.try_add(&-other)
    }

    pub fn scale(&self, s: &Q) -> NCPolynomial {
        if s.is_zero() {
            return Self::zero(self.k);
        }
        NCPolynomial {
            k: self.k,
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c * s)).collect(),
        }
    }

    /// Concatenates words and multiplies coefficients.
    pub fn try_mul(&self, other: &NCPolynomial) -> Result<NCPolynomial> {
        check_k(self.k, other.k)?;
        let mut out = Self::zero(self.k);
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                out.add_term(w1.concat(w2), c1 * c2);
            }
        }
        Ok(out)
    }

    /// Checks equality, erroring on differing cutoffs.
    pub fn try_eq(&self, other: &NCPolynomial) -> Result<bool> {
        check_k(self.k, other.k)?;
        Ok(self.terms == other.terms)
    }

    /// Lets the variables commute.
    pub fn commutative_image(&self) -> CPolynomial {
        let mut out = CPolynomial::zero(self.k);
        for (w, c) in &self.terms {
            out.add_term(w.exponents(self.k), c.clone());
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .sorted_terms()
            .into_iter()
            .map(|(w, c)| json!({"word": w.letters(), "coeff": format_q(c)}))
            .collect();
        json!({"k": self.k, "terms": terms})
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |m: &str| Error::invalid(format!("malformed polynomial JSON: {}", m));
        let k = v["k"].as_u64().ok_or_else(|| bad("missing k"))? as usize;
        let terms = v["terms"].as_array().ok_or_else(|| bad("missing terms"))?;
        let mut out = Vec::new();
        for t in terms {
            let word = t["word"]
                .as_array()
                .ok_or_else(|| bad("missing word"))?
                .iter()
                .map(|l| l.as_u64().map(|x| x as u8).ok_or_else(|| bad("bad letter")))
                .collect::<Result<Vec<u8>>>()?;
            let coeff = parse_q(t["coeff"].as_str().ok_or_else(|| bad("missing coeff"))?)?;
            out.push((Word::new(word), coeff));
        }
        Self::from_terms(k, out)
    }
}

impl Neg for &NCPolynomial {
    type Output = NCPolynomial;
    fn neg(self) -> NCPolynomial {
        NCPolynomial {
            k: self.k,
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}

/// Panics on cutoff mismatch; use `try_add` for fallible addition.
impl Add for &NCPolynomial {
    type Output = NCPolynomial;
    fn add(self, other: &NCPolynomial) -> NCPolynomial {
        self.try_add(other).expect("cutoff mismatch")
    }
}

impl Sub for &NCPolynomial {
    type Output = NCPolynomial;
    fn sub(self, other: &NCPolynomial) -> NCPolynomial {
        self.try_sub(other).expect("cutoff mismatch")
    }
}

impl Mul for &NCPolynomial {
    type Output = NCPolynomial;
    fn mul(self, other: &NCPolynomial) -> NCPolynomial {
        self.try_mul(other).expect("cutoff mismatch")
    }
}

impl fmt::Display for NCPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        format_terms(f, self.sorted_terms().into_iter(), |w| w.to_string())
    }
}

impl fmt::Debug for NCPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NCPolynomial(k={}, {})", self.k, self)
    }
}

/// A finite `Q`-linear combination of commutative monomials in `x_1, …, x_k`,
/// keyed by exponent vectors.
#[derive(Clone, PartialEq, Eq)]
pub struct CPolynomial {
    k: usize,
    terms: BTreeMap<Vec<usize>, Q>,
}

impl CPolynomial {
    pub fn zero(k: usize) -> Self {
        CPolynomial {
            k,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(k: usize) -> Self {
        let mut p = Self::zero(k);
        p.add_term(vec![0; k], Q::one());
        p
    }

    pub fn cutoff(&self) -> usize {
        self.k
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exponents: &[usize]) -> Q {
        self.terms.get(exponents).cloned().unwrap_or_else(Q::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &Q)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, exponents: Vec<usize>, c: Q) {
        assert_eq!(exponents.len(), self.k, "exponent vector length must equal k");
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(exponents).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn try_add(&self, other: &CPolynomial) -> Result<CPolynomial> {
        check_k(self.k, other.k)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, s: &Q) -> CPolynomial {
        let mut out = Self::zero(self.k);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c * s);
        }
        out
    }

    pub fn try_mul(&self, other: &CPolynomial) -> Result<CPolynomial> {
        check_k(self.k, other.k)?;
        let mut out = Self::zero(self.k);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<usize> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        Ok(out)
    }
}

impl fmt::Display for CPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        format_terms(f, self.terms.iter(), |e| {
            let parts: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(i, &p)| {
                    if p == 1 {
                        format!("x{}", i + 1)
                    } else {
                        format!("x{}^{}", i + 1, p)
                    }
                })
                .collect();
            if parts.is_empty() {
                "1".to_string()
            } else {
                parts.join("*")
            }
        })
    }
}

impl fmt::Debug for CPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CPolynomial(k={}, {})", self.k, self)
    }
}
