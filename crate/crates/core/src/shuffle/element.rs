use super::flavor::Flavor;
use crate::error::{Error, Result};
use crate::polyvars::{div_by_forms, LinearForm, Mono, SparsePoly, VarId};
use crate::roots::RootSystem;
use crate::scalars::Ring;
use itertools::Itertools;
use rayon::prelude::*;
use rustc_hash::FxHashMap;
use std::fmt;

/// Shuffle-algebra element `num / (den · Δ_k)`, where `Δ_k` is the pole
/// denominator of the grading (never stored) and `den` a scalar.
#[derive(Clone, PartialEq, Eq)]
pub struct ShuffleElement<F: Flavor> {
    pub k: Vec<u32>,
    pub num: SparsePoly<F::C>,
    pub den: F::C,
}

/// A failed wheel substitution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WheelViolation {
    pub i: usize,
    pub j: usize,
    /// Copies of color `i` in pattern order.
    pub copies: Vec<usize>,
    /// Copy of color `j`.
    pub r: usize,
    pub assignment: String,
}

impl fmt::Display for WheelViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.assignment)
    }
}

impl<F: Flavor> ShuffleElement<F> {
    pub fn new(k: Vec<u32>, num: SparsePoly<F::C>) -> Self {
        ShuffleElement { k, num, den: F::C::one() }
    }

    pub fn with_den(k: Vec<u32>, num: SparsePoly<F::C>, den: F::C) -> Self {
        assert!(!den.is_zero(), "zero scalar denominator");
        ShuffleElement { k, num, den }.reduced()
    }

    pub fn unit(n: usize) -> Self {
        Self::new(vec![0; n], SparsePoly::one())
    }

    pub fn zero(k: Vec<u32>) -> Self {
        Self::new(k, SparsePoly::zero())
    }

    /// Image of a generator: `x_{i,1}^r` in degree `1_i` (`i` is 1-based).
    pub fn generator(n: usize, i: usize, r: i32) -> Self {
        let mut k = vec![0; n];
        k[i - 1] = 1;
        Self::new(k, SparsePoly::var_pow(VarId::x(i, 1), r))
    }

    pub fn rank(&self) -> usize {
        self.k.len()
    }

    pub fn size(&self) -> u32 {
        self.k.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// True when the scalar denominator is a unit, i.e. the numerator has
    /// coefficients in the base ring.
    pub fn is_integral(&self) -> bool {
        self.den.inverse().is_some()
    }

    /// Numerator with the scalar denominator folded in, if it is a unit.
    pub fn integral_numerator(&self) -> Option<SparsePoly<F::C>> {
        let inv = self.den.inverse()?;
        Some(self.num.scale(&inv))
    }

    /// Cancels the common part of `den` and the numerator content, then
    /// normalizes `den` up to units.
    pub fn reduced(mut self) -> Self {
        if self.num.is_zero() {
            self.den = F::C::one();
            return self;
        }
        if self.den.is_one() {
            return self;
        }
        let g = self.den.gcd(&self.num.coeff_gcd());
        if !g.is_zero() && !g.is_one() {
            self.den = self.den.div_exact(&g).expect("gcd divides");
            self.num = self.num.map_coeffs(|c| c.div_exact(&g).expect("gcd divides content"));
        }
        let normal = self.den.gcd(&F::C::zero());
        if let Some(u) = self.den.div_exact(&normal) {
            if let Some(ui) = u.inverse() {
                if !ui.is_one() {
                    self.num = self.num.scale(&ui);
                    self.den = normal;
                }
            }
        }
        self
    }

    fn check_same(&self, o: &Self) -> Result<()> {
        if self.k != o.k {
            return Err(Error::GradingMismatch(format!("{:?} vs {:?}", self.k, o.k)));
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.check_same(o)?;
        if self.den == o.den {
            return Ok(Self { k: self.k.clone(), num: self.num.add(&o.num), den: self.den.clone() }.reduced());
        }
        let num = self.num.scale(&o.den).add(&o.num.scale(&self.den));
        Ok(Self { k: self.k.clone(), num, den: self.den.mul(&o.den) }.reduced())
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        Self { k: self.k.clone(), num: self.num.neg(), den: self.den.clone() }
    }

    /// Multiplies by an expression scalar.
    pub fn scale(&self, s: &F::S) -> Self {
        let (a, b) = F::split(s);
        if a.is_zero() {
            return Self::zero(self.k.clone());
        }
        Self { k: self.k.clone(), num: self.num.scale(&a), den: self.den.mul(&b) }.reduced()
    }

    pub fn scale_c(&self, c: &F::C) -> Self {
        Self { k: self.k.clone(), num: self.num.scale(c), den: self.den.clone() }.reduced()
    }

    /// Divides by a base-ring scalar.
    pub fn div_c(&self, c: &F::C) -> Self {
        Self { k: self.k.clone(), num: self.num.clone(), den: self.den.mul(c) }.reduced()
    }

    /// Equality up to a unit multiple (ℚ^×·v^ℤ or ℚ^×); returns `p/q` with
    /// `self = (p/q)·other`.
    pub fn proportional(&self, o: &Self) -> Option<(F::C, F::C)> {
        if self.k != o.k || self.is_zero() || o.is_zero() {
            return None;
        }
        let p = self.num.scale(&o.den);
        let q = o.num.scale(&self.den);
        if p.len() != q.len() {
            return None;
        }
        let (mp, cp) = p.leading_term()?;
        let (mq, cq) = q.leading_term()?;
        if mp != mq {
            return None;
        }
        let (a, b) = F::unit_ratio(cp, cq)?;
        (p.scale(&b) == q.scale(&a)).then_some((a, b))
    }

    /// Same value as a fraction (cross-multiplied).
    pub fn same_value(&self, o: &Self) -> bool {
        self.k == o.k && self.num.scale(&o.den) == o.num.scale(&self.den)
    }

    pub fn is_symmetric(&self) -> bool {
        let k: Vec<usize> = self.k.iter().map(|&x| x as usize).collect();
        self.num.is_symmetric(&k)
    }

    /// `Δ_k = ∏_{i<j adjacent} ∏_{r,s} (x_{i,r} − x_{j,s})`.
    pub fn pole_denominator(sys: &RootSystem, k: &[u32]) -> SparsePoly<F::C> {
        let mut out = SparsePoly::one();
        for form in pole_forms::<F>(sys, k) {
            out = out.mul(&form.to_poly());
        }
        out
    }

    /// First violated wheel pattern, if any.
    pub fn wheel_violation(&self, sys: &RootSystem) -> Option<WheelViolation> {
        if self.num.is_zero() {
            return None;
        }
        for i in 1..=sys.n {
            for j in 1..=sys.n {
                if i == j || sys.a(i, j) == 0 {
                    continue;
                }
                let m = (1 - sys.a(i, j)) as usize;
                if (self.k[i - 1] as usize) < m || self.k[j - 1] == 0 {
                    continue;
                }
                for copies in (1..=self.k[i - 1] as usize).permutations(m) {
                    for r in 1..=self.k[j - 1] as usize {
                        let xj = VarId::x(j, r);
                        let mut map = FxHashMap::default();
                        let mut parts = Vec::new();
                        for (p, &c) in copies.iter().enumerate() {
                            let img = F::wheel_image(sys, i, j, p + 1, xj);
                            parts.push(format!("{}={}", VarId::x(i, c).name(), img));
                            map.insert(VarId::x(i, c), img);
                        }
                        let image = self.num.substitute_partial(&map).expect("wheel images are polynomial");
                        if !image.is_zero() {
                            return Some(WheelViolation { i, j, copies, r, assignment: parts.join(", ") });
                        }
                    }
                }
            }
        }
        None
    }

    pub fn wheel_check(&self, sys: &RootSystem) -> bool {
        self.wheel_violation(sys).is_none()
    }

    /// Shuffle product, summed over shuffle cosets.
    pub fn star(&self, o: &Self, sys: &RootSystem) -> Result<Self> {
        if self.size() == 0 {
            return Ok(o.scale_unit(&self.num, &self.den));
        }
        if o.size() == 0 {
            return Ok(self.scale_unit(&o.num, &o.den));
        }
        if self.is_zero() || o.is_zero() {
            return Ok(Self::zero(add_k(&self.k, &o.k)));
        }
        let num = star_coset::<F>(sys, &self.k, &self.num, &o.k, &o.num)?;
        Ok(Self { k: add_k(&self.k, &o.k), num, den: self.den.mul(&o.den) }.reduced())
    }

    /// Shuffle product as the full `S_{k+l}` sum divided by `k!·l!`.
    pub fn star_full(&self, o: &Self, sys: &RootSystem) -> Result<Self> {
        if self.size() == 0 || o.size() == 0 || self.is_zero() || o.is_zero() {
            return self.star(o, sys);
        }
        let num = star_full::<F>(sys, &self.k, &self.num, &o.k, &o.num)?;
        Ok(Self { k: add_k(&self.k, &o.k), num, den: self.den.mul(&o.den) }.reduced())
    }

    fn scale_unit(&self, num: &SparsePoly<F::C>, den: &F::C) -> Self {
        let c = num.as_constant().expect("degree-zero element is a scalar");
        Self { k: self.k.clone(), num: self.num.scale(&c), den: self.den.mul(den) }.reduced()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "flavor": F::NAME,
            "k": self.k,
            "numerator": self.num.to_json(),
            "scalar_denominator": self.den.to_json(),
        })
    }
}

impl<F: Flavor> fmt::Display for ShuffleElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl<F: Flavor> fmt::Debug for ShuffleElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S{:?}[{}]", self.k, self)
    }
}

pub(crate) fn add_k(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Linear factors of `Δ_k` in a fixed order.
pub fn pole_forms<F: Flavor>(sys: &RootSystem, k: &[u32]) -> Vec<LinearForm> {
    let mut out = Vec::new();
    for i in 1..=sys.n {
        for j in i + 1..=sys.n {
            if !sys.adjacent(i, j) {
                continue;
            }
            for r in 1..=k[i - 1] as usize {
                for s in 1..=k[j - 1] as usize {
                    out.push(F::diff(VarId::x(i, r), VarId::x(j, s)));
                }
            }
        }
    }
    out
}

/// Same-color Vandermonde factors `x_{i,r} − x_{i,s}`, `r < s`.
fn vandermonde_forms<F: Flavor>(k: &[u32]) -> Vec<LinearForm> {
    let mut out = Vec::new();
    for (ci, &ki) in k.iter().enumerate() {
        for r in 1..=ki as usize {
            for s in r + 1..=ki as usize {
                out.push(F::diff(VarId::x(ci + 1, r), VarId::x(ci + 1, s)));
            }
        }
    }
    out
}

/// Vandermonde of the copies `idx` of color `c` (1-based), ascending order.
fn vandermonde_on<F: Flavor>(c: usize, idx: &[usize]) -> SparsePoly<F::C> {
    let mut out = SparsePoly::one();
    for (p, &a) in idx.iter().enumerate() {
        for &b in &idx[p + 1..] {
            out = out.mul(&F::diff(VarId::x(c, a), VarId::x(c, b)).to_poly());
        }
    }
    out
}

/// Per-color copy assignment: `left[c]` gets `f`'s copies, `right[c]` gets `g`'s.
struct Split {
    left: Vec<Vec<usize>>,
    right: Vec<Vec<usize>>,
}

fn relabel<C: Ring>(f: &SparsePoly<C>, target: &[Vec<usize>]) -> SparsePoly<C> {
    f.map_vars(|v| VarId::x(v.a(), target[v.a() - 1][v.b() - 1]))
}

/// Numerator contribution `±f(x_A) g(x_B) ∏cross · V_A V_B` of one split.
fn split_term<F: Flavor>(
    sys: &RootSystem,
    f: &SparsePoly<F::C>,
    g: &SparsePoly<F::C>,
    sp: &Split,
) -> SparsePoly<F::C> {
    let n = sys.n;
    let mut sign = false;
    let mut cross = Vec::new();
    for ca in 1..=n {
        for cb in 1..=n {
            let same = ca == cb;
            if !same && !sys.adjacent(ca, cb) {
                continue;
            }
            for &a in &sp.left[ca - 1] {
                for &b in &sp.right[cb - 1] {
                    if (same && a > b) || (!same && ca > cb) {
                        sign = !sign;
                    }
                    cross.push(F::cross(sys, ca, cb, VarId::x(ca, a), VarId::x(cb, b)).to_poly::<F::C>());
                }
            }
        }
    }
    let mut t = relabel(f, &sp.left).mul(&relabel(g, &sp.right));
    for c in 1..=n {
        t = t.mul(&vandermonde_on::<F>(c, &sp.left[c - 1]));
        t = t.mul(&vandermonde_on::<F>(c, &sp.right[c - 1]));
    }
    // Multiply short factors first to keep intermediates small.
    cross.sort_by_key(|p| p.len());
    let cross_prod = SparsePoly::product(cross.iter());
    t = t.mul(&cross_prod);
    if sign {
        t.neg()
    } else {
        t
    }
}

fn splits(k: &[u32], l: &[u32]) -> Vec<Split> {
    let per_color: Vec<Vec<(Vec<usize>, Vec<usize>)>> = k
        .iter()
        .zip(l)
        .map(|(&ki, &li)| {
            let m = (ki + li) as usize;
            (1..=m)
                .combinations(ki as usize)
                .map(|a| {
                    let b: Vec<usize> = (1..=m).filter(|x| !a.contains(x)).collect();
                    (a, b)
                })
                .collect()
        })
        .collect();
    per_color
        .into_iter()
        .multi_cartesian_product()
        .map(|parts| {
            let (left, right) = parts.into_iter().unzip();
            Split { left, right }
        })
        .collect()
}

fn star_coset<F: Flavor>(
    sys: &RootSystem,
    k: &[u32],
    f: &SparsePoly<F::C>,
    l: &[u32],
    g: &SparsePoly<F::C>,
) -> Result<SparsePoly<F::C>> {
    let all = splits(k, l);
    let total = all
        .par_iter()
        .map(|sp| split_term::<F>(sys, f, g, sp))
        .reduce(SparsePoly::zero, |a, b| a.add(&b));
    div_vandermonde::<F>(&total, &add_k(k, l))
}

fn div_vandermonde<F: Flavor>(p: &SparsePoly<F::C>, m: &[u32]) -> Result<SparsePoly<F::C>> {
    div_by_forms(p, &vandermonde_forms::<F>(m)).map_err(|e| match e {
        Error::NotDivisible { witness } => Error::ExactDivisionFailure(witness),
        other => other,
    })
}

fn star_full<F: Flavor>(
    sys: &RootSystem,
    k: &[u32],
    f: &SparsePoly<F::C>,
    l: &[u32],
    g: &SparsePoly<F::C>,
) -> Result<SparsePoly<F::C>> {
    let m = add_k(k, l);
    let ident = Split {
        left: k.iter().map(|&ki| (1..=ki as usize).collect()).collect(),
        right: k.iter().zip(l).map(|(&ki, &li)| (ki as usize + 1..=(ki + li) as usize).collect()).collect(),
    };
    let p0 = split_term::<F>(sys, f, g, &ident);
    let mu: Vec<usize> = m.iter().map(|&x| x as usize).collect();
    let perms = crate::polyvars::color_permutations(&mu);
    let total = perms
        .par_iter()
        .map(|sigma| {
            let odd = sigma.iter().map(|p| inversions(p)).sum::<usize>() % 2 == 1;
            let t = p0.map_vars(|v| VarId::x(v.a(), sigma[v.a() - 1][v.b() - 1]));
            if odd {
                t.neg()
            } else {
                t
            }
        })
        .reduce(SparsePoly::zero, |a, b| a.add(&b));
    let q = div_vandermonde::<F>(&total, &m)?;
    let norm: i64 = k.iter().chain(l).map(|&x| (1..=x as i64).product::<i64>()).product();
    let norm = F::from_int(norm);
    q.try_map_coeffs(|c| c.div_exact(&norm))
        .ok_or_else(|| Error::ExactDivisionFailure(format!("coefficient not divisible by {norm}")))
}

fn inversions(p: &[usize]) -> usize {
    let mut n = 0;
    for a in 0..p.len() {
        for b in a + 1..p.len() {
            if p[a] > p[b] {
                n += 1;
            }
        }
    }
    n
}

/// Monomial `∏ x_{c,r}^{e}` helper used by tests and closed forms.
pub fn x_mono(pairs: &[(usize, usize, i32)]) -> Mono {
    Mono::from_pairs(pairs.iter().map(|&(c, r, e)| (VarId::x(c, r), e)))
}
