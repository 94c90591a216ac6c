//! Polynomials in the formal parameter `ħ` over ℚ.

use super::Ring;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};
use std::fmt;

/// Element of ℚ[ħ], dense by degree with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PolyH {
    c: Vec<BigRational>,
}

impl PolyH {
    pub fn zero() -> Self {
        PolyH { c: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(q: BigRational) -> Self {
        Self::from_coeffs(vec![q])
    }

    pub fn from_i64(n: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Self::constant(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    /// `q · ħ^e`.
    pub fn monomial(q: BigRational, e: usize) -> Self {
        let mut c = vec![BigRational::zero(); e + 1];
        c[e] = q;
        Self::from_coeffs(c)
    }

    /// `ħ^e`.
    pub fn hbar_pow(e: usize) -> Self {
        Self::monomial(BigRational::one(), e)
    }

    pub fn hbar() -> Self {
        Self::hbar_pow(1)
    }

    pub fn from_coeffs(mut c: Vec<BigRational>) -> Self {
        while c.last().map_or(false, |x| x.is_zero()) {
            c.pop();
        }
        PolyH { c }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    /// Largest `e` with `ħ^e` dividing `self`; `None` for zero.
    pub fn hbar_valuation(&self) -> Option<usize> {
        self.c.iter().position(|x| !x.is_zero())
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let mut c = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.c.get(i);
            let b = o.c.get(i);
            c.push(match (a, b) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Self::from_coeffs(c)
    }

    pub fn neg(&self) -> Self {
        PolyH { c: self.c.iter().map(|x| -x).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut c = vec![BigRational::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Self::from_coeffs(c)
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        Self::from_coeffs(self.c.iter().map(|x| x * q).collect())
    }

    /// Quotient and remainder by a nonzero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "PolyH: division by zero");
        let dn = d.c.len();
        let mut r = self.c.clone();
        if r.len() < dn {
            return (Self::zero(), self.clone());
        }
        let lead = d.c[dn - 1].clone();
        let ql = r.len() - dn + 1;
        let mut q = vec![BigRational::zero(); ql];
        for k in (0..ql).rev() {
            let t = &r[k + dn - 1] / &lead;
            if t.is_zero() {
                continue;
            }
            for (j, y) in d.c.iter().enumerate() {
                r[k + j] -= &t * y;
            }
            q[k] = t;
        }
        (Self::from_coeffs(q), Self::from_coeffs(r))
    }

    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    /// Substitution `ħ = t`.
    pub fn eval(&self, t: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for x in self.c.iter().rev() {
            acc = acc * t + x;
        }
        acc
    }
}

impl Ring for PolyH {
    fn zero() -> Self {
        PolyH::zero()
    }
    fn one() -> Self {
        PolyH::one()
    }
    fn from_i64(n: i64) -> Self {
        PolyH::from_i64(n)
    }
    fn is_zero(&self) -> bool {
        PolyH::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        PolyH::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        PolyH::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        PolyH::mul(self, o)
    }
    fn neg(&self) -> Self {
        PolyH::neg(self)
    }
    fn div_exact(&self, o: &Self) -> Option<Self> {
        PolyH::div_exact(self, o)
    }
    fn to_json(&self) -> Value {
        Value::Array(
            self.c
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(e, x)| json!([e, x.to_string()]))
                .collect(),
        )
    }
    fn from_json(v: &Value) -> Option<Self> {
        let mut acc = Self::zero();
        for t in v.as_array()? {
            let pair = t.as_array()?;
            let e = pair.first()?.as_u64()? as usize;
            let q: BigRational = pair.get(1)?.as_str()?.parse().ok()?;
            acc = acc.add(&Self::monomial(q, e));
        }
        Some(acc)
    }
    fn is_unit_multiple(&self) -> bool {
        self.c.len() == 1
    }
    fn inverse(&self) -> Option<Self> {
        (self.c.len() == 1).then(|| PolyH::constant(self.c[0].recip()))
    }
    fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        match a.c.last() {
            Some(l) => {
                let l = l.recip();
                a.scale(&l)
            }
            None => a,
        }
    }
}

impl fmt::Display for PolyH {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, q) in self.c.iter().enumerate().rev() {
            if q.is_zero() {
                continue;
            }
            let neg = q.is_negative();
            let a = q.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            match (a.is_one(), e) {
                (_, 0) => write!(f, "{a}")?,
                (true, 1) => write!(f, "h")?,
                (true, e) => write!(f, "h^{e}")?,
                (false, 1) => write!(f, "{a}*h")?,
                (false, e) => write!(f, "{a}*h^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for PolyH {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_valuation() {
        let h = PolyH::hbar();
        let a = h.mul(&h).add(&PolyH::from_ratio(1, 2).mul(&h)); // h^2 + h/2
        assert_eq!(a.hbar_valuation(), Some(1));
        assert_eq!(a.div_exact(&h), Some(h.add(&PolyH::from_ratio(1, 2))));
        assert_eq!(a.div_exact(&h.add(&PolyH::one())), None);
        assert_eq!(format!("{a}"), "h^2 + 1/2*h");
        assert_eq!(<PolyH as Ring>::from_json(&Ring::to_json(&a)), Some(a));
    }
}
