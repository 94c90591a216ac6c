//! Specialization maps `φ_d` from shuffle elements to symmetric Laurent
//! polynomials in root-block variables `w[β][s]`, together with the
//! factor tables and the integral-form membership tests built on them.

mod dims;
mod integral;
mod tables;
mod verify;

pub use dims::{bareiss_rank, dim_report, nonnegative_keys, wheel_space_dimension, DimRow, DimSettings, Orbit};
pub use integral::{
    compositions, cross_specialize, lusztig_member, rtt_member, rtt_prefactor, vertical_specialize, Composition,
    CrossReport, Membership,
};
pub use tables::{a_d, c_beta, c_tilde, g_factor, g_forms, g_poly, kappa, p_lambda, p_lambda_rank_one, GFactor};
pub use verify::{verify_leading, verify_leading_with, verify_vanishing, LeadingReport, MonomialEvaluator};

use crate::error::{Error, Result};
use crate::polyvars::{LinearForm, SparsePoly, VarId};
use crate::roots::{CartanType, KostantPartition, PositiveRoot, RootSystem, RootTag};
use crate::scalars::Ring;
use crate::shuffle::{Flavor, ShuffleElement};
use rustc_hash::FxHashMap;
use std::fmt;

/// `φ_d(F) = poly / den` with `poly` over the numerator ring.
#[derive(Clone, PartialEq, Eq)]
pub struct SpecImage<F: Flavor> {
    pub poly: SparsePoly<F::C>,
    pub den: F::C,
}

impl<F: Flavor> SpecImage<F> {
    pub fn zero() -> Self {
        SpecImage { poly: SparsePoly::zero(), den: F::C::one() }
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// The polynomial itself when the denominator is a unit.
    pub fn integral(&self) -> Option<SparsePoly<F::C>> {
        let inv = self.den.inverse()?;
        Some(if inv.is_one() { self.poly.clone() } else { self.poly.scale(&inv) })
    }

    /// Equality up to a unit multiple, as for shuffle elements.
    pub fn proportional(&self, o: &Self) -> bool {
        if self.is_zero() || o.is_zero() {
            return self.is_zero() && o.is_zero();
        }
        let p = self.poly.scale(&o.den);
        let q = o.poly.scale(&self.den);
        let (Some((mp, cp)), Some((mq, cq))) = (p.leading_term(), q.leading_term()) else {
            return false;
        };
        if mp != mq || p.len() != q.len() {
            return false;
        }
        match F::unit_ratio(cp, cq) {
            Some((a, b)) => p.scale(&b) == q.scale(&a),
            None => false,
        }
    }
}

impl<F: Flavor> fmt::Display for SpecImage<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.poly)
        } else {
            write!(f, "({}) / ({})", self.poly, self.den)
        }
    }
}

impl<F: Flavor> fmt::Debug for SpecImage<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Roots whose specialization runs in two steps: `[i,n,i]` in type C and
/// `[i,n,j]` with `j ≤ n−2` in type D.
pub fn is_two_step(sys: &RootSystem, r: &PositiveRoot) -> bool {
    match (sys.ty, r.tag) {
        (CartanType::C, RootTag::DoubleFold { .. }) => true,
        (CartanType::D, RootTag::Fold { j, .. }) => j + 2 <= sys.n,
        _ => false,
    }
}

/// Target of `x^{(β,s)}_{color,t}`: whether it lands on `w′` and the
/// `v`-exponent of the shift.
fn target(sys: &RootSystem, r: &PositiveRoot, color: usize, t: usize) -> Result<(bool, i32)> {
    let n = sys.n as i32;
    let l = color as i32;
    let two = is_two_step(sys, r);
    Ok(match sys.ty {
        CartanType::C => match (color == sys.n, t, two) {
            (true, _, false) => (false, -n),
            (true, _, true) => (true, -n),
            (false, 1, _) => (false, 1 - l),
            (false, _, false) => (false, l - 1 - 2 * n),
            (false, _, true) => (true, 1 - l),
        },
        CartanType::D => match (color == sys.n, t) {
            (true, _) => (false, 2 - n),
            (false, 1) => (false, 1 - l),
            (false, _) => (true, l + 3 - 2 * n),
        },
        CartanType::A => return Err(Error::UnsupportedRank(sys.name())),
    })
}

/// `v`-exponents `t` of the factors `w − v^t w′` of `B_β`.
pub fn b_exponents(sys: &RootSystem, r: &PositiveRoot) -> Result<Vec<i32>> {
    let n = sys.n as i32;
    match (sys.ty, r.tag) {
        (CartanType::C, RootTag::DoubleFold { i }) => {
            Ok((0..sys.n - i - 1).flat_map(|_| [-2, 2]).collect())
        }
        (CartanType::D, RootTag::Fold { j, .. }) if is_two_step(sys, r) => {
            Ok((j as i32..=n - 2).flat_map(|l| [2 * l + 4 - 2 * n, 2 * l - 2 * n]).collect())
        }
        _ => Err(Error::NotTwoStep(r.label().to_string())),
    }
}

/// `v`-exponent of the second step `w′ ↦ v^t w`.
fn second_step_exponent(sys: &RootSystem) -> i32 {
    match sys.ty {
        CartanType::C => 2,
        _ => 0,
    }
}

/// `B_β` as a polynomial in `w[β][1]`, `w'[β][1]`.
pub fn b_factor<F: Flavor>(sys: &RootSystem, r: &PositiveRoot) -> Result<SparsePoly<F::C>> {
    let (w, wp) = (VarId::w(r.index, 1), VarId::wp(r.index, 1));
    let mut out = SparsePoly::one();
    for t in b_exponents(sys, r)? {
        out = out.mul(&F::shift_form(w, t, wp).to_poly());
    }
    Ok(out)
}

/// Canonical splitting: for each color, copies are handed out in ascending
/// order to the blocks `(β, s)` in convex order.
pub fn canonical_split(sys: &RootSystem, d: &KostantPartition) -> Vec<Vec<usize>> {
    let k = d.degree(sys);
    k.iter().map(|&kc| (1..=kc as usize).collect()).collect()
}

/// Assignment of every `x` variable of degree `deg(d)` for the splitting
/// `order`, where `order[c−1]` lists the copies of color `c` in the order
/// they are handed to blocks.
fn assignment<F: Flavor>(
    sys: &RootSystem,
    d: &KostantPartition,
    order: &[Vec<usize>],
) -> Result<FxHashMap<VarId, SparsePoly<F::C>>> {
    let mut next = vec![0usize; sys.n];
    let mut map = FxHashMap::default();
    for (ri, m) in d.support() {
        let r = sys.root(ri);
        for s in 1..=m as usize {
            for c in 1..=sys.n {
                for t in 1..=r.nu[c - 1] as usize {
                    let copy = order[c - 1][next[c - 1]];
                    next[c - 1] += 1;
                    let (primed, e) = target(sys, r, c, t)?;
                    let base = if primed { VarId::wp(ri, s) } else { VarId::w(ri, s) };
                    map.insert(VarId::x(c, copy), F::shifted(base, e));
                }
            }
        }
    }
    Ok(map)
}

/// First-step image: every `x` substituted, `w′` still free.
pub fn step_one<F: Flavor>(
    sys: &RootSystem,
    f: &ShuffleElement<F>,
    d: &KostantPartition,
    order: &[Vec<usize>],
) -> Result<SparsePoly<F::C>> {
    let map = assignment::<F>(sys, d, order)?;
    f.num.substitute(&map)
}

/// `φ_d(F)` with the canonical splitting. Returns zero when `d` is not a
/// Kostant partition of the degree of `F`.
pub fn phi_d<F: Flavor>(sys: &RootSystem, f: &ShuffleElement<F>, d: &KostantPartition) -> Result<SpecImage<F>> {
    phi_d_split(sys, f, d, &canonical_split(sys, d))
}

/// `φ_d(F)` with an explicit splitting (see [`step_one`]).
pub fn phi_d_split<F: Flavor>(
    sys: &RootSystem,
    f: &ShuffleElement<F>,
    d: &KostantPartition,
    order: &[Vec<usize>],
) -> Result<SpecImage<F>> {
    if d.degree(sys) != f.k {
        return Ok(SpecImage::zero());
    }
    if f.is_zero() {
        return Ok(SpecImage::zero());
    }
    let mut poly = step_one(sys, f, d, order)?;
    let mut second = FxHashMap::default();
    for (ri, m) in d.support() {
        let r = sys.root(ri);
        if !is_two_step(sys, r) {
            continue;
        }
        let exps = b_exponents(sys, r)?;
        for s in 1..=m as usize {
            let (w, wp) = (VarId::w(ri, s), VarId::wp(ri, s));
            for &t in &exps {
                let form = F::shift_form(w, t, wp);
                poly = divide_form::<F>(&poly, &form)
                    .map_err(|_| Error::NotDivisibleByB { root: format!("{} (block {s})", sys.root_name(r)) })?;
            }
            second.insert(wp, F::shifted(w, second_step_exponent(sys)));
        }
    }
    if !second.is_empty() {
        poly = poly.substitute_partial(&second)?;
    }
    Ok(SpecImage { poly, den: f.den.clone() })
}

fn divide_form<F: Flavor>(p: &SparsePoly<F::C>, form: &LinearForm) -> Result<SparsePoly<F::C>> {
    crate::polyvars::div_by_forms(p, std::slice::from_ref(form))
}

#[cfg(test)]
mod tests;
