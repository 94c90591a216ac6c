use super::var::{Mono, VarId};
use crate::error::{Error, Result};
use crate::scalars::Ring;
use rustc_hash::FxHashMap;
use serde_json::{json, Value};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// Sparse Laurent polynomial with coefficients in `C`.
#[derive(Clone, PartialEq, Eq)]
pub struct SparsePoly<C: Ring> {
    terms: BTreeMap<Mono, C>,
}

impl<C: Ring> Default for SparsePoly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Ring> SparsePoly<C> {
    pub fn zero() -> Self {
        SparsePoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::term(Mono::one(), c)
    }

    pub fn term(m: Mono, c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        SparsePoly { terms }
    }

    pub fn var(v: VarId) -> Self {
        Self::term(Mono::var(v, 1), C::one())
    }

    pub fn var_pow(v: VarId, e: i32) -> Self {
        Self::term(Mono::var(v, e), C::one())
    }

    /// `x_a − c·x_b`.
    pub fn binomial(a: VarId, c: C, b: VarId) -> Self {
        let mut p = Self::var(a);
        p.add_term(Mono::var(b, 1), c.neg());
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Mono, C)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
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

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Mono, &C)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Mono) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    /// Largest term in the lex order.
    pub fn leading_term(&self) -> Option<(&Mono, &C)> {
        self.terms.iter().next_back()
    }

    /// `Some(c)` if the polynomial is a constant.
    pub fn as_constant(&self) -> Option<C> {
        match self.terms.len() {
            0 => Some(C::zero()),
            1 => self.terms.get(&Mono::one()).cloned(),
            _ => None,
        }
    }

    pub fn add_term(&mut self, m: Mono, c: C) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let s = e.get().add(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let (big, small) = if self.len() >= o.len() { (self, o) } else { (o, self) };
        let mut r = big.clone();
        for (m, c) in &small.terms {
            r.add_term(m.clone(), c.clone());
        }
        r
    }

    pub fn add_assign(&mut self, o: &Self) {
        for (m, c) in &o.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn neg(&self) -> Self {
        SparsePoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(m.clone(), c.neg());
        }
        r
    }

    pub fn scale(&self, s: &C) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Self::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), c.mul(s))))
    }

    pub fn mul_mono(&self, m: &Mono) -> Self {
        SparsePoly { terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if self.len() == 1 || o.len() == 1 {
            let (single, other) = if self.len() == 1 { (self, o) } else { (o, self) };
            let (m, c) = single.terms.iter().next().unwrap();
            return Self::from_terms(other.terms.iter().map(|(k, d)| (k.mul(m), d.mul(c))));
        }
        let mut acc: FxHashMap<Mono, C> = FxHashMap::default();
        acc.reserve(self.len() * o.len() / 2 + 1);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                let m = ma.mul(mb);
                let p = ca.mul(cb);
                match acc.get_mut(&m) {
                    Some(e) => e.add_assign(&p),
                    None => {
                        acc.insert(m, p);
                    }
                }
            }
        }
        SparsePoly { terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn product<'a, I: IntoIterator<Item = &'a Self>>(it: I) -> Self
    where
        C: 'a,
    {
        it.into_iter().fold(Self::one(), |a, b| a.mul(b))
    }

    /// Variables occurring in the support.
    pub fn vars(&self) -> BTreeSet<VarId> {
        self.terms.keys().flat_map(|m| m.pairs().iter().map(|p| p.0)).collect()
    }

    pub fn max_degree_in(&self, v: VarId) -> Option<i32> {
        self.terms.keys().map(|m| m.exp(v)).max()
    }

    pub fn min_degree_in(&self, v: VarId) -> Option<i32> {
        self.terms.keys().map(|m| m.exp(v)).min()
    }

    /// Total degrees present, as (min, max).
    pub fn total_degree_range(&self) -> Option<(i64, i64)> {
        let mut it = self.terms.keys().map(Mono::total_degree);
        let f = it.next()?;
        Some(it.fold((f, f), |(a, b), d| (a.min(d), b.max(d))))
    }

    pub fn is_homogeneous(&self) -> bool {
        matches!(self.total_degree_range(), Some((a, b)) if a == b) || self.is_zero()
    }

    pub fn map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> D) -> SparsePoly<D> {
        SparsePoly::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    pub fn try_map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> Option<D>) -> Option<SparsePoly<D>> {
        let mut out = SparsePoly::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c)?);
        }
        Some(out)
    }

    /// Renames variables; the map must be injective on the support.
    pub fn map_vars(&self, f: impl Fn(VarId) -> VarId) -> Self {
        SparsePoly { terms: self.terms.iter().map(|(m, c)| (m.map_vars(&f), c.clone())).collect() }
    }

    /// Greatest common monomial divisor of all terms (Laurent sense).
    pub fn monomial_content(&self) -> Mono {
        let mut it = self.terms.keys();
        match it.next() {
            None => Mono::one(),
            Some(first) => it.fold(first.clone(), |a, m| a.min_with(m)),
        }
    }

    /// Groups terms by the exponent of `v`, removing `v` from the keys.
    pub fn collect_in(&self, v: VarId) -> BTreeMap<i32, Self> {
        let mut out: BTreeMap<i32, Self> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (e, rest) = m.split_off(v);
            out.entry(e).or_default().terms.insert(rest, c.clone());
        }
        out
    }

    /// Exact division by `x_a − r`, where `r` does not involve `x_a`.
    pub fn div_linear(&self, a: VarId, r: &Self) -> Result<Self> {
        debug_assert!(r.max_degree_in(a).map_or(true, |e| e == 0) && r.min_degree_in(a).map_or(true, |e| e == 0));
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let groups = self.collect_in(a);
        let lo = *groups.keys().next().unwrap();
        let hi = *groups.keys().next_back().unwrap();
        let deg = (hi - lo) as usize;
        if deg == 0 {
            return Err(Error::NotDivisible { witness: self.to_string() });
        }
        // P(X) = Σ_{e=0}^{deg} P_e X^e after shifting by X^{-lo}; synthetic division.
        let get = |e: usize| groups.get(&(lo + e as i32)).cloned().unwrap_or_default();
        let mut q: Vec<Self> = vec![Self::zero(); deg];
        q[deg - 1] = get(deg);
        for k in (1..deg).rev() {
            let mut t = get(k);
            t.add_assign(&r.mul(&q[k]));
            q[k - 1] = t;
        }
        let mut rem = get(0);
        rem.add_assign(&r.mul(&q[0]));
        if !rem.is_zero() {
            return Err(Error::NotDivisible { witness: rem.to_string() });
        }
        let mut out = Self::zero();
        for (k, qk) in q.into_iter().enumerate() {
            let xm = Mono::var(a, lo + k as i32);
            for (m, c) in qk.terms {
                out.terms.insert(m.mul(&xm), c);
            }
        }
        Ok(out)
    }

    /// Exact division by an arbitrary nonzero polynomial, with the stuck
    /// remainder as witness when `g` does not divide `self`.
    pub fn exact_div(&self, g: &Self) -> Result<Self> {
        if g.is_zero() {
            return Err(Error::ExactDivisionFailure("division by zero polynomial".into()));
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        if g.len() == 1 {
            let (m, c) = g.terms.iter().next().unwrap();
            let mi = m.inv();
            let mut out = Self::zero();
            for (k, d) in &self.terms {
                match d.div_exact(c) {
                    Some(q) => {
                        out.terms.insert(k.mul(&mi), q);
                    }
                    None => return Err(Error::NotDivisible { witness: self.to_string() }),
                }
            }
            return Ok(out);
        }
        // Reduce to honest polynomials by clearing monomial contents.
        let cf = self.monomial_content();
        let cg = g.monomial_content();
        let f = self.mul_mono(&cf.inv());
        let g0 = g.mul_mono(&cg.inv());
        let (lm, lc) = {
            let (m, c) = g0.leading_term().unwrap();
            (m.clone(), c.clone())
        };
        let mut rem = f;
        let mut quot = Self::zero();
        while let Some((m, c)) = rem.leading_term() {
            let qm = match m.div_poly(&lm) {
                Some(q) => q,
                None => return Err(Error::NotDivisible { witness: rem.to_string() }),
            };
            let qc = match c.div_exact(&lc) {
                Some(q) => q,
                None => return Err(Error::NotDivisible { witness: rem.to_string() }),
            };
            for (gm, gc) in &g0.terms {
                rem.add_term(gm.mul(&qm), gc.mul(&qc).neg());
            }
            quot.add_term(qm, qc);
        }
        Ok(quot.mul_mono(&cf.mul(&cg.inv())))
    }

    pub fn divides(&self, f: &Self) -> bool {
        f.exact_div(self).is_ok()
    }

    /// Substitutes every variable of the support; unassigned variables are
    /// an error. Negative exponents need images that are unit monomials.
    pub fn substitute(&self, map: &FxHashMap<VarId, Self>) -> Result<Self> {
        self.subst_impl(map, true)
    }

    /// Like [`substitute`](Self::substitute) but keeps unassigned variables.
    pub fn substitute_partial(&self, map: &FxHashMap<VarId, Self>) -> Result<Self> {
        self.subst_impl(map, false)
    }

    fn subst_impl(&self, map: &FxHashMap<VarId, Self>, strict: bool) -> Result<Self> {
        let mut inverses: FxHashMap<VarId, Self> = FxHashMap::default();
        let mut powers: FxHashMap<(VarId, i32), Self> = FxHashMap::default();
        let mut acc: FxHashMap<Mono, C> = FxHashMap::default();
        for (m, c) in &self.terms {
            let mut img = Self::constant(c.clone());
            for &(v, e) in m.pairs() {
                let Some(base) = map.get(&v) else {
                    if strict {
                        return Err(Error::Unassigned(v.name()));
                    }
                    img = img.mul_mono(&Mono::var(v, e));
                    continue;
                };
                let key = (v, e);
                if !powers.contains_key(&key) {
                    let p = if e >= 0 {
                        base.pow(e as u32)
                    } else {
                        if !inverses.contains_key(&v) {
                            let inv = base.unit_inverse().ok_or_else(|| Error::NonInvertibleImage(v.name()))?;
                            inverses.insert(v, inv);
                        }
                        inverses[&v].pow((-e) as u32)
                    };
                    powers.insert(key, p);
                }
                img = img.mul(&powers[&key]);
            }
            for (k, d) in img.terms {
                match acc.get_mut(&k) {
                    Some(x) => x.add_assign(&d),
                    None => {
                        acc.insert(k, d);
                    }
                }
            }
        }
        Ok(SparsePoly { terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() })
    }

    /// Inverse of a single-term polynomial with invertible coefficient.
    pub fn unit_inverse(&self) -> Option<Self> {
        if self.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next().unwrap();
        Some(Self::term(m.inv(), c.inverse()?))
    }

    /// Sum over all per-color permutations of copies `1..=k_i` of `x` variables.
    pub fn symmetrize(&self, k: &[usize]) -> Result<Self> {
        for v in self.vars() {
            if v.kind() != super::VarKind::X || v.a() == 0 || v.a() > k.len() || v.b() == 0 || v.b() > k[v.a() - 1] {
                return Err(Error::VariableOutOfRange(v.name()));
            }
        }
        let mut out = Self::zero();
        for perm in super::color_permutations(k) {
            let img = self.map_vars(|v| VarId::x(v.a(), perm[v.a() - 1][v.b() - 1]));
            out.add_assign(&img);
        }
        Ok(out)
    }

    /// True when invariant under swapping copies within each color.
    pub fn is_symmetric(&self, k: &[usize]) -> bool {
        for (i, &ki) in k.iter().enumerate() {
            for r in 1..ki {
                let c = i + 1;
                let sw = self.map_vars(|v| {
                    if v.kind() == super::VarKind::X && v.a() == c && (v.b() == r || v.b() == r + 1) {
                        VarId::x(c, if v.b() == r { r + 1 } else { r })
                    } else {
                        v
                    }
                });
                if sw != *self {
                    return false;
                }
            }
        }
        true
    }

    /// Content: gcd of all coefficients.
    pub fn coeff_gcd(&self) -> C {
        let mut g = C::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
        }
        g
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(m, c)| {
                    let mono: Vec<Value> = m.pairs().iter().map(|&(v, e)| json!([v.name(), e])).collect();
                    json!([mono, c.to_json()])
                })
                .collect(),
        )
    }

    pub fn from_json(v: &Value) -> Option<Self> {
        let mut p = Self::zero();
        for t in v.as_array()? {
            let pair = t.as_array()?;
            let mut ps = Vec::new();
            for e in pair.first()?.as_array()? {
                let a = e.as_array()?;
                ps.push((VarId::parse(a.first()?.as_str()?)?, a.get(1)?.as_i64()? as i32));
            }
            p.add_term(Mono::from_pairs(ps), C::from_json(pair.get(1)?)?);
        }
        Some(p)
    }
}

impl<C: Ring> fmt::Display for SparsePoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if m.is_one() {
                write!(f, "({c})")?;
            } else if c.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "({c})*{m}")?;
            }
        }
        Ok(())
    }
}

impl<C: Ring> fmt::Debug for SparsePoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
