use crate::arith::prime_power;
use crate::error::{Error, Result};

/// `GF(q)` with elements `0..q`, an element being the base-`p` digits of its
/// polynomial coefficients (constant term lowest).
#[derive(Clone, Debug)]
pub struct Field {
    pub q: usize,
    pub p: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
    primitive: usize,
}

/// Low-to-high coefficients of the monic irreducible used for `GF(p^e)`,
/// without the leading 1.
fn modulus(p: usize, e: u32) -> Option<Vec<usize>> {
    match (p, e) {
        (_, 1) => Some(vec![]),
        (2, 2) => Some(vec![1, 1]),
        (2, 3) => Some(vec![1, 1, 0]),
        (3, 2) => Some(vec![2, 2]),
        _ => None,
    }
}

impl Field {
    pub fn new(q: u64) -> Result<Self> {
        let (p, e) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        let m = modulus(p as usize, e)
            .ok_or_else(|| Error::Unsupported(format!("GF({q}): extension fields only up to order 9")))?;
        let (p, q) = (p as usize, q as usize);
        let e = e as usize;
        let digits = |x: usize| -> Vec<usize> { (0..e).map(|i| (x / p.pow(i as u32)) % p).collect() };
        let number = |d: &[usize]| -> usize { d.iter().rev().fold(0, |acc, &c| acc * p + c) };
        let mut add = vec![0; q * q];
        let mut mul = vec![0; q * q];
        for a in 0..q {
            let da = digits(a);
            for b in 0..q {
                let db = digits(b);
                let sum: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a * q + b] = number(&sum);
                let mut prod = vec![0; 2 * e];
                for (i, x) in da.iter().enumerate() {
                    for (j, y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                // reduce with x^e = -(m_0 + m_1 x + ... )
                for k in (e..2 * e - 1).rev() {
                    let c = prod[k];
                    if c != 0 {
                        prod[k] = 0;
                        for (i, mi) in m.iter().enumerate() {
                            prod[k - e + i] = (prod[k - e + i] + (p - (c * mi) % p)) % p;
                        }
                    }
                }
                mul[a * q + b] = number(&prod[..e]);
            }
        }
        let mut field = Field { q, p, add, mul, primitive: 0 };
        field.primitive = (2..q.max(2))
            .chain(std::iter::once(1))
            .find(|&w| field.multiplicative_order(w) == q - 1)
            .expect("a finite field has a primitive element");
        Ok(field)
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.q + b]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.q + b]
    }

    pub fn neg(&self, a: usize) -> usize {
        (0..self.q).find(|&b| self.add(a, b) == 0).unwrap()
    }

    pub fn inv(&self, a: usize) -> Option<usize> {
        (1..self.q).find(|&b| self.mul(a, b) == 1)
    }

    pub fn primitive(&self) -> usize {
        self.primitive
    }

    fn multiplicative_order(&self, w: usize) -> usize {
        if w == 0 {
            return 0;
        }
        let (mut x, mut k) = (w, 1);
        while x != 1 {
            x = self.mul(x, w);
            k += 1;
            if k > self.q {
                return 0;
            }
        }
        k
    }

    /// `1, w, ..., w^(e-1)`, an additive basis over the prime field.
    pub fn additive_basis(&self) -> Vec<usize> {
        let e = (self.q as f64).log(self.p as f64).round() as usize;
        let mut out = vec![1];
        while out.len() < e {
            out.push(self.mul(*out.last().unwrap(), self.primitive));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms_hold() {
        for q in [2, 3, 4, 5, 7, 8, 9, 11, 13] {
            let f = Field::new(q).unwrap();
            let q = q as usize;
            for a in 0..q {
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.mul(a, 1), a);
                if a != 0 {
                    assert!(f.inv(a).is_some(), "GF({q}) element {a} has no inverse");
                }
                for b in 0..q {
                    for c in 0..q {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
        assert!(Field::new(6).is_err());
        assert!(Field::new(16).is_err());
    }
}
