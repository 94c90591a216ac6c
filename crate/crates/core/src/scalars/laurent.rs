//! Laurent polynomials in `v` with integer coefficients.

use super::int::Int;
use super::Ring;
use serde_json::{json, Value};
use std::fmt;

/// Element of ℤ[v, v⁻¹], stored densely from the lowest exponent `lo`.
///
/// Invariant: either `c` is empty (zero) or both `c[0]` and the last entry
/// are nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentZ {
    lo: i32,
    c: Vec<Int>,
}

impl LaurentZ {
    pub fn zero() -> Self {
        LaurentZ { lo: 0, c: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Int::ONE)
    }

    pub fn constant(n: Int) -> Self {
        Self::monomial(n, 0)
    }

    pub fn from_i64(n: i64) -> Self {
        Self::constant(Int::from(n))
    }

    /// `n · v^e`.
    pub fn monomial(n: Int, e: i32) -> Self {
        if n.is_zero() {
            Self::zero()
        } else {
            LaurentZ { lo: e, c: vec![n] }
        }
    }

    /// `v^e`.
    pub fn vpow(e: i32) -> Self {
        Self::monomial(Int::ONE, e)
    }

    /// The variable `v`.
    pub fn v() -> Self {
        Self::vpow(1)
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<I: IntoIterator<Item = (i32, i64)>>(terms: I) -> Self {
        let mut acc = Self::zero();
        for (e, n) in terms {
            acc = acc.add(&Self::monomial(Int::from(n), e));
        }
        acc
    }

    fn from_raw(lo: i32, mut c: Vec<Int>) -> Self {
        let start = match c.iter().position(|x| !x.is_zero()) {
            Some(p) => p,
            None => return Self::zero(),
        };
        while c.last().map_or(false, |x| x.is_zero()) {
            c.pop();
        }
        if start > 0 {
            c.drain(..start);
        }
        LaurentZ { lo: lo + start as i32, c }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.lo == 0 && self.c.len() == 1 && self.c[0].is_one()
    }

    /// Lowest exponent present (0 for the zero element).
    pub fn low_exp(&self) -> i32 {
        self.lo
    }

    /// Highest exponent present (0 for the zero element).
    pub fn high_exp(&self) -> i32 {
        if self.c.is_empty() {
            0
        } else {
            self.lo + self.c.len() as i32 - 1
        }
    }

    pub fn coeff(&self, e: i32) -> Int {
        let idx = e - self.lo;
        if idx < 0 || idx as usize >= self.c.len() {
            Int::ZERO
        } else {
            self.c[idx as usize].clone()
        }
    }

    pub fn leading_coeff(&self) -> Int {
        self.c.last().cloned().unwrap_or(Int::ZERO)
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &Int)> + '_ {
        self.c
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(move |(i, x)| (self.lo + i as i32, x))
    }

    /// `Some((n, e))` when `self = n · v^e`.
    pub fn as_monomial(&self) -> Option<(Int, i32)> {
        if self.c.len() == 1 {
            Some((self.c[0].clone(), self.lo))
        } else {
            None
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let lo = self.lo.min(o.lo);
        let hi = self.high_exp().max(o.high_exp());
        let mut c = vec![Int::ZERO; (hi - lo + 1) as usize];
        for (i, x) in self.c.iter().enumerate() {
            let k = (self.lo - lo) as usize + i;
            c[k] = c[k].add(x);
        }
        for (i, x) in o.c.iter().enumerate() {
            let k = (o.lo - lo) as usize + i;
            c[k] = c[k].add(x);
        }
        Self::from_raw(lo, c)
    }

    pub fn neg(&self) -> Self {
        LaurentZ { lo: self.lo, c: self.c.iter().map(Int::neg).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut c = vec![Int::ZERO; self.c.len() + o.c.len() - 1];
        for (i, x) in self.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in o.c.iter().enumerate() {
                c[i + j].add_mul(x, y);
            }
        }
        Self::from_raw(self.lo + o.lo, c)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn scale(&self, n: &Int) -> Self {
        Self::from_raw(self.lo, self.c.iter().map(|x| x.mul(n)).collect())
    }

    /// Multiplication by `v^e`.
    pub fn shift(&self, e: i32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentZ { lo: self.lo + e, c: self.c.clone() }
    }

    /// Bar involution `v ↦ v⁻¹`.
    pub fn bar(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.c.clone();
        c.reverse();
        LaurentZ { lo: -self.high_exp(), c }
    }

    /// Substitution `v ↦ v^k` for `k ≥ 1`.
    pub fn dilate(&self, k: i32) -> Self {
        assert!(k >= 1);
        let mut acc = Self::zero();
        for (e, n) in self.terms() {
            acc = acc.add(&Self::monomial(n.clone(), e * k));
        }
        acc
    }

    /// gcd of the integer coefficients (nonnegative).
    pub fn content(&self) -> Int {
        let mut g = Int::ZERO;
        for x in &self.c {
            g = g.gcd(x);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Exact division in ℤ[v, v⁻¹]; `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if let Some((n, e)) = d.as_monomial() {
            let c: Option<Vec<Int>> = self.c.iter().map(|x| x.div_exact(&n)).collect();
            return c.map(|c| LaurentZ { lo: self.lo - e, c });
        }
        // Both sides are normalized polynomials with nonzero constant term, so
        // long division from the top decides divisibility.
        let dn = d.c.len();
        let mut rem = self.c.clone();
        if rem.len() < dn {
            return None;
        }
        let ql = rem.len() - dn + 1;
        let mut q = vec![Int::ZERO; ql];
        let lead = d.c[dn - 1].clone();
        for k in (0..ql).rev() {
            let top = rem[k + dn - 1].clone();
            if top.is_zero() {
                continue;
            }
            let t = top.div_exact(&lead)?;
            for (j, y) in d.c.iter().enumerate() {
                rem[k + j] = rem[k + j].sub(&t.mul(y));
            }
            q[k] = t;
        }
        if rem.iter().any(|x| !x.is_zero()) {
            return None;
        }
        Some(Self::from_raw(self.lo - d.lo, q))
    }

    pub fn divides(&self, f: &Self) -> bool {
        f.div_exact(self).is_some()
    }

    /// Primitive part as a polynomial with nonzero constant term and positive
    /// leading coefficient.
    fn primitive_poly(&self) -> Self {
        let g = self.content();
        let mut p = LaurentZ { lo: 0, c: self.c.iter().map(|x| x.div_exact(&g).unwrap()).collect() };
        if p.leading_coeff().signum() < 0 {
            p = p.neg();
        }
        p
    }

    /// Pseudo-remainder of dense polynomials (index = degree).
    fn prem(a: &[Int], b: &[Int]) -> Vec<Int> {
        let mut r = a.to_vec();
        let bn = b.len();
        let lb = b[bn - 1].clone();
        while r.len() >= bn {
            let lr = r[r.len() - 1].clone();
            let shift = r.len() - bn;
            for x in r.iter_mut() {
                *x = x.mul(&lb);
            }
            for (j, y) in b.iter().enumerate() {
                r[shift + j] = r[shift + j].sub(&lr.mul(y));
            }
            while r.last().map_or(false, |x| x.is_zero()) {
                r.pop();
            }
        }
        r
    }

    /// Greatest common divisor in ℤ[v, v⁻¹], normalized to a polynomial with
    /// nonzero constant term and positive leading coefficient.
    pub fn gcd(&self, o: &Self) -> Self {
        if self.is_zero() && o.is_zero() {
            return Self::zero();
        }
        if self.is_zero() {
            return o.primitive_poly().scale(&o.content());
        }
        if o.is_zero() {
            return self.primitive_poly().scale(&self.content());
        }
        let cg = self.content().gcd(&o.content());
        let mut a = self.primitive_poly();
        let mut b = o.primitive_poly();
        if a.c.len() < b.c.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = Self::from_raw(0, Self::prem(&a.c, &b.c));
            a = b;
            b = if r.is_zero() { r } else { r.primitive_poly() };
        }
        a.primitive_poly().scale(&cg)
    }

    /// Evaluation at an integer point `v = t` (t ≠ 0 when negative exponents occur).
    pub fn eval_rational(&self, t: i64) -> num_rational::BigRational {
        use num_bigint::BigInt;
        use num_rational::BigRational;
        let mut acc = BigRational::from_integer(BigInt::from(0));
        let base = BigRational::from_integer(BigInt::from(t));
        for (e, n) in self.terms() {
            let p = if e >= 0 {
                num_traits::pow(base.clone(), e as usize)
            } else {
                num_traits::pow(base.clone(), (-e) as usize).recip()
            };
            acc += p * BigRational::from_integer(n.to_big());
        }
        acc
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.terms().map(|(e, n)| json!([e, n.to_string()])).collect())
    }

    pub fn from_json(v: &Value) -> Option<Self> {
        let mut acc = Self::zero();
        for t in v.as_array()? {
            let pair = t.as_array()?;
            let e = pair.first()?.as_i64()? as i32;
            let n: Int = pair.get(1)?.as_str()?.parse().ok()?;
            acc = acc.add(&Self::monomial(n, e));
        }
        Some(acc)
    }
}

impl Ring for LaurentZ {
    fn zero() -> Self {
        LaurentZ::zero()
    }
    fn one() -> Self {
        LaurentZ::one()
    }
    fn from_i64(n: i64) -> Self {
        LaurentZ::from_i64(n)
    }
    fn is_zero(&self) -> bool {
        LaurentZ::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        LaurentZ::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        LaurentZ::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        LaurentZ::mul(self, o)
    }
    fn neg(&self) -> Self {
        LaurentZ::neg(self)
    }
    fn div_exact(&self, o: &Self) -> Option<Self> {
        LaurentZ::div_exact(self, o)
    }
    fn to_json(&self) -> Value {
        LaurentZ::to_json(self)
    }
    fn from_json(v: &Value) -> Option<Self> {
        LaurentZ::from_json(v)
    }
    fn is_unit_multiple(&self) -> bool {
        self.as_monomial().is_some()
    }
    fn inverse(&self) -> Option<Self> {
        let (n, e) = self.as_monomial()?;
        n.abs().is_one().then(|| LaurentZ::monomial(n, -e))
    }
    fn gcd(&self, o: &Self) -> Self {
        LaurentZ::gcd(self, o)
    }
}

impl fmt::Display for LaurentZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, n) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            let neg = n.signum() < 0;
            let a = n.abs();
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
                (true, 1) => write!(f, "v")?,
                (true, e) => write!(f, "v^{e}")?,
                (false, 1) => write!(f, "{a}*v")?,
                (false, e) => write!(f, "{a}*v^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lz(t: &[(i32, i64)]) -> LaurentZ {
        LaurentZ::from_terms(t.iter().copied())
    }

    #[test]
    fn division_and_gcd() {
        let a = lz(&[(2, 1), (0, -1)]); // v^2 - 1
        let b = lz(&[(1, 1), (0, 1)]); // v + 1
        assert_eq!(a.div_exact(&b), Some(lz(&[(1, 1), (0, -1)])));
        assert_eq!(b.div_exact(&a), None);
        let g = a.mul(&lz(&[(0, 6)])).gcd(&b.mul(&lz(&[(3, 4)])));
        assert_eq!(g, lz(&[(1, 2), (0, 2)]));
    }

    #[test]
    fn bar_and_display() {
        let a = lz(&[(2, 3), (-1, -1)]);
        assert_eq!(a.bar(), lz(&[(-2, 3), (1, -1)]));
        assert_eq!(format!("{a}"), "3*v^2 - v^-1");
    }

    #[test]
    fn json_round_trip() {
        let a = lz(&[(5, -7), (-3, 2)]);
        assert_eq!(LaurentZ::from_json(&a.to_json()), Some(a));
    }
}
