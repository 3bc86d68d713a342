//! Exact rational scalars and small integer helpers.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Coefficient field of every expression in the crate.
pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

pub fn q_int(n: BigInt) -> Q {
    Q::from_integer(n)
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub fn factorial_q(n: usize) -> Q {
    q_int(factorial(n))
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Reduced `a/b` form, or `a` when the denominator is one.
pub fn format_q(c: &Q) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

pub fn parse_q(s: &str) -> Result<Q> {
    let t = s.trim();
    let err = |pos: usize, msg: &str| Error::parse(s, pos, msg);
    if t.is_empty() {
        return Err(err(0, "empty coefficient"));
    }
    let (num, den) = match t.split_once('/') {
        Some((a, b)) => (a.trim(), Some(b.trim())),
        None => (t, None),
    };
    let numer: BigInt = num
        .parse()
        .map_err(|_| err(0, "expected an integer numerator"))?;
    let denom: BigInt = match den {
        Some(d) => d
            .parse()
            .map_err(|_| err(num.len() + 1, "expected an integer denominator"))?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(err(num.len() + 1, "zero denominator"));
    }
    Ok(Q::new(numer, denom))
}

pub(crate) fn sign_q(negative: bool) -> Q {
    if negative {
        -Q::one()
    } else {
        Q::one()
    }
}

/// `(-1)^e` as a rational.
pub fn neg_one_pow(e: usize) -> Q {
    sign_q(e % 2 == 1)
}
