//! Steinitz numbers with finite prime support and the subfield order of
//! locally finite fields `GF(q^N)`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::arith::{factorize, is_prime, prime_power};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Exponent {
    Finite(u32),
    Infinite,
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exponent::Finite(e) => write!(f, "{e}"),
            Exponent::Infinite => f.write_str("inf"),
        }
    }
}

/// `prod p^e` over finitely many primes, `e` a positive integer or infinity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SteinitzNumber {
    support: BTreeMap<u64, Exponent>,
}

impl SteinitzNumber {
    pub fn one() -> Self {
        SteinitzNumber::default()
    }

    pub fn from_natural(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::Malformed("Steinitz numbers start at 1".into()));
        }
        let support = factorize(n as u128).into_iter().map(|(p, e)| (p, Exponent::Finite(e))).collect();
        Ok(SteinitzNumber { support })
    }

    /// Builds from `(prime, exponent)` pairs; zero exponents are dropped.
    pub fn from_parts(parts: impl IntoIterator<Item = (u64, Exponent)>) -> Result<Self> {
        let mut support = BTreeMap::new();
        for (p, e) in parts {
            if !is_prime(p) {
                return Err(Error::NotPrime(p));
            }
            if e != Exponent::Finite(0) {
                let slot = support.entry(p).or_insert(e);
                *slot = (*slot).max(e);
            }
        }
        Ok(SteinitzNumber { support })
    }

    pub fn exponent(&self, p: u64) -> Exponent {
        self.support.get(&p).copied().unwrap_or(Exponent::Finite(0))
    }

    pub fn support(&self) -> impl Iterator<Item = (u64, Exponent)> + '_ {
        self.support.iter().map(|(&p, &e)| (p, e))
    }

    pub fn is_finite(&self) -> bool {
        self.support.values().all(|e| matches!(e, Exponent::Finite(_)))
    }

    /// `M | N`: every exponent of `M` is at most the matching one of `N`.
    pub fn divides(&self, other: &SteinitzNumber) -> bool {
        self.support.iter().all(|(&p, &e)| e <= other.exponent(p))
    }

    fn combine(&self, other: &SteinitzNumber, pick: fn(Exponent, Exponent) -> Exponent) -> SteinitzNumber {
        let mut support = BTreeMap::new();
        for &p in self.support.keys().chain(other.support.keys()) {
            let e = pick(self.exponent(p), other.exponent(p));
            if e != Exponent::Finite(0) {
                support.insert(p, e);
            }
        }
        SteinitzNumber { support }
    }

    pub fn gcd(&self, other: &SteinitzNumber) -> SteinitzNumber {
        self.combine(other, Exponent::min)
    }

    pub fn lcm(&self, other: &SteinitzNumber) -> SteinitzNumber {
        self.combine(other, Exponent::max)
    }
}

/// Whether `GF(q^M)` is a subfield of `GF(q^N)`.
pub fn subfield_contains(q: u64, m: &SteinitzNumber, n: &SteinitzNumber) -> Result<bool> {
    if prime_power(q).is_none() {
        return Err(Error::NotPrimePower(q));
    }
    Ok(m.divides(n))
}

impl fmt::Display for SteinitzNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.support.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.support.iter().map(|(p, e)| format!("{p}^{e}")).collect();
        f.write_str(&parts.join(" * "))
    }
}

impl FromStr for SteinitzNumber {
    type Err = Error;

    /// Accepts `p1^e1 * p2^inf * n` where bare factors are natural numbers.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |m: String| Error::Parse { line: 1, message: m };
        let mut acc = SteinitzNumber::one();
        for factor in s.split('*').map(str::trim) {
            if factor.is_empty() {
                return Err(bad(format!("empty factor in `{s}`")));
            }
            let term = match factor.split_once('^') {
                Some((base, exp)) => {
                    let p: u64 = base.trim().parse().map_err(|_| bad(format!("bad prime `{base}`")))?;
                    let exp = exp.trim();
                    let e = if exp == "inf" {
                        Exponent::Infinite
                    } else {
                        Exponent::Finite(exp.parse().map_err(|_| bad(format!("bad exponent `{exp}`")))?)
                    };
                    SteinitzNumber::from_parts([(p, e)])?
                }
                None => {
                    let n: u64 = factor.parse().map_err(|_| bad(format!("bad factor `{factor}`")))?;
                    SteinitzNumber::from_natural(n)?
                }
            };
            acc = multiply(&acc, &term);
        }
        Ok(acc)
    }
}

/// Product: exponents add, with infinity absorbing.
pub fn multiply(a: &SteinitzNumber, b: &SteinitzNumber) -> SteinitzNumber {
    a.combine(b, |x, y| match (x, y) {
        (Exponent::Finite(x), Exponent::Finite(y)) => Exponent::Finite(x + y),
        _ => Exponent::Infinite,
    })
}

/// Result of a `steinitz` command-line expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Evaluated {
    Number(SteinitzNumber),
    Truth(bool),
}

impl fmt::Display for Evaluated {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Evaluated::Number(n) => n.fmt(f),
            Evaluated::Truth(b) => f.write_str(if *b { "true" } else { "false" }),
        }
    }
}

fn split_args(inner: &str) -> Option<(&str, &str)> {
    let mut depth = 0i32;
    for (i, c) in inner.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => return Some((&inner[..i], &inner[i + 1..])),
            _ => {}
        }
    }
    None
}

fn eval_number(expr: &str) -> Result<SteinitzNumber> {
    let expr = expr.trim();
    for (name, op) in [("gcd", SteinitzNumber::gcd as fn(&_, &_) -> _), ("lcm", SteinitzNumber::lcm)] {
        if let Some(rest) = expr.strip_prefix(name) {
            let inner = rest
                .trim()
                .strip_prefix('(')
                .and_then(|r| r.strip_suffix(')'))
                .ok_or_else(|| Error::Parse { line: 1, message: format!("expected `{name}(A, B)`") })?;
            let (a, b) = split_args(inner)
                .ok_or_else(|| Error::Parse { line: 1, message: format!("`{name}` takes two arguments") })?;
            return Ok(op(&eval_number(a)?, &eval_number(b)?));
        }
    }
    expr.parse()
}

/// Evaluates `A | B` (divisibility), `gcd(A, B)`, `lcm(A, B)`,
/// `subfield(q, A, B)` or a bare number, which is normalized.
pub fn evaluate(expr: &str) -> Result<Evaluated> {
    let expr = expr.trim();
    if let Some(rest) = expr.strip_prefix("subfield") {
        let inner = rest
            .trim()
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Parse { line: 1, message: "expected `subfield(q, A, B)`".into() })?;
        let (q, rest) = split_args(inner)
            .ok_or_else(|| Error::Parse { line: 1, message: "`subfield` takes three arguments".into() })?;
        let (a, b) = split_args(rest)
            .ok_or_else(|| Error::Parse { line: 1, message: "`subfield` takes three arguments".into() })?;
        let q: u64 =
            q.trim().parse().map_err(|_| Error::Parse { line: 1, message: format!("bad field size `{q}`") })?;
        return Ok(Evaluated::Truth(subfield_contains(q, &eval_number(a)?, &eval_number(b)?)?));
    }
    if let Some((a, b)) = expr.split_once('|') {
        return Ok(Evaluated::Truth(eval_number(a)?.divides(&eval_number(b)?)));
    }
    Ok(Evaluated::Number(eval_number(expr)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> SteinitzNumber {
        text.parse().unwrap()
    }

    #[test]
    fn naturals_embed() {
        assert_eq!(SteinitzNumber::from_natural(1).unwrap(), SteinitzNumber::one());
        assert_eq!(SteinitzNumber::from_natural(12).unwrap().to_string(), "2^2 * 3^1");
        assert!(SteinitzNumber::from_natural(0).is_err());
    }

    #[test]
    fn divisibility_with_infinity() {
        assert!(s("6").divides(&s("12")));
        assert!(s("2^40").divides(&s("2^inf")));
        assert!(!s("2^inf").divides(&s("2^5")));
        assert_eq!(s("2^inf * 3").lcm(&s("3^2 * 5")), s("2^inf * 3^2 * 5"));
        assert_eq!(s("12").gcd(&s("18")), s("6"));
    }

    #[test]
    fn subfields() {
        assert!(subfield_contains(2, &s("2"), &s("2^inf")).unwrap());
        assert!(!subfield_contains(2, &s("3"), &s("2^inf")).unwrap());
        assert!(matches!(subfield_contains(6, &s("1"), &s("1")), Err(Error::NotPrimePower(6))));
    }

    #[test]
    fn expressions() {
        assert_eq!(evaluate("6 | 12").unwrap(), Evaluated::Truth(true));
        assert_eq!(evaluate("gcd(12, 18)").unwrap().to_string(), "2^1 * 3^1");
        assert_eq!(evaluate("lcm(2^inf * 3, gcd(9, 45))").unwrap().to_string(), "2^inf * 3^2");
        assert_eq!(evaluate("subfield(2, 3, 2^inf)").unwrap(), Evaluated::Truth(false));
        assert!(evaluate("gcd(4)").is_err());
        assert!(evaluate("4^x").is_err());
        assert!(evaluate("6^2").is_err());
    }
}
