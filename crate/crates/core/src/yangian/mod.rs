//! Rational (Yangian) counterpart: root vectors over `ℚ[ħ]`, their
//! `ħ`-scaled variants, the defining relations, closed-form images, and the
//! good/integral predicates built on the rational specialization maps.

use crate::error::{Error, Result};
use crate::polyvars::{SparsePoly, VarId};
use crate::roots::{kostant_partitions, CartanType, KostantPartition, PbwdKey, RootSystem, RootTag};
use crate::scalars::PolyH;
use crate::shuffle::{Rat, RatElement, RatExpr};
use crate::specmaps::{kappa, phi_d, Membership, SpecImage};
use itertools::Itertools;
use serde::Serialize;

type P = SparsePoly<PolyH>;

fn y(i: usize, r: i32) -> RatExpr {
    RatExpr::gen(i, r)
}

fn chain(word: &[usize], parts: &[i32]) -> RatExpr {
    let mut acc = y(word[0], parts[0]);
    for p in 1..word.len() {
        acc = RatExpr::bracket(acc, y(word[p], parts[p]));
    }
    acc
}

/// `X_{β,s}` with `parts[p]` the mode on the `p`-th letter of the word. The
/// type C root `[i,n,i]` is `[X_{[i,n−1]}, X_{[i,n]}]` with the first
/// `n−i` parts on the first factor.
pub fn yangian_root_vector(sys: &RootSystem, root: usize, parts: &[i32]) -> Result<RatExpr> {
    let r = sys.roots().get(root).ok_or_else(|| Error::UnknownRoot(format!("index {root}")))?;
    if parts.len() != r.word.len() || parts.iter().any(|&p| p < 0) {
        return Err(Error::InvalidDecomposition(format!(
            "{} needs {} non-negative modes, got {parts:?}",
            r.label(),
            r.word.len()
        )));
    }
    Ok(match (sys.ty, r.tag) {
        (CartanType::C, RootTag::DoubleFold { i }) => {
            let m = sys.n - i;
            RatExpr::bracket(chain(&r.word[..m], &parts[..m]), chain(&r.word[m..], &parts[m..]))
        }
        _ => chain(&r.word, parts),
    })
}

/// `X̃_{β,s}`: all of `s` on the first letter, or on `x_n` for `[i,n,i]`.
pub fn yangian_tilde(sys: &RootSystem, root: usize, s: i32) -> Result<RatExpr> {
    let r = sys.roots().get(root).ok_or_else(|| Error::UnknownRoot(format!("index {root}")))?;
    let mut parts = vec![0; r.word.len()];
    let target = match r.tag {
        RootTag::DoubleFold { .. } => r.word.len() - 1,
        _ => 0,
    };
    parts[target] = s;
    yangian_root_vector(sys, root, &parts)
}

/// `X̄ = ħ·X`.
pub fn bar(e: RatExpr) -> RatExpr {
    RatExpr::scale(PolyH::hbar(), e)
}

/// Ordered product `∏ X̃_{β,s}^{h(β,s)}`, optionally `ħ`-scaled.
pub fn yangian_monomial(sys: &RootSystem, h: &PbwdKey, scaled: bool) -> Result<RatExpr> {
    let mut items = Vec::new();
    for (r, s) in h.factors() {
        let e = yangian_tilde(sys, r, s)?;
        items.push(if scaled { bar(e) } else { e });
    }
    Ok(RatExpr::prod(items))
}

/// `[x_{i,r+1}, x_{j,s}] − [x_{i,r}, x_{j,s+1}] − (d_i a_ij ħ/2)(x_{i,r}x_{j,s} + x_{j,s}x_{i,r})`.
pub fn quadratic(sys: &RootSystem, i: usize, j: usize, r: i32, s: i32) -> RatExpr {
    let c = PolyH::from_ratio(-(sys.pairing(i, j) as i64), 2).mul(&PolyH::hbar());
    RatExpr::sum(vec![
        RatExpr::bracket(y(i, r + 1), y(j, s)),
        RatExpr::scale(PolyH::from_i64(-1), RatExpr::bracket(y(i, r), y(j, s + 1))),
        RatExpr::scale(c.clone(), RatExpr::prod(vec![y(i, r), y(j, s)])),
        RatExpr::scale(c, RatExpr::prod(vec![y(j, s), y(i, r)])),
    ])
}

/// Serre relation: nested brackets summed over orderings of `rs`.
pub fn serre(sys: &RootSystem, i: usize, j: usize, rs: &[i32], r: i32) -> RatExpr {
    let m = (1 - sys.a(i, j)) as usize;
    assert_eq!(rs.len(), m, "Serre relation needs 1 − a_ij modes");
    let mut terms = Vec::new();
    for perm in (0..m).permutations(m) {
        let mut acc = y(j, r);
        for &p in perm.iter().rev() {
            acc = RatExpr::bracket(y(i, rs[p]), acc);
        }
        terms.push(acc);
    }
    RatExpr::sum(terms)
}

fn x(c: usize, r: usize) -> P {
    P::var(VarId::x(c, r))
}

fn hbar_pow(e: u32) -> PolyH {
    PolyH::hbar_pow(e as usize)
}

/// `Q̂(x₁,x₂,y₁,y₂) = 4(x₁x₂+y₁y₂) − 2(x₁+x₂)(y₁+y₂) + ħ²` on colors `ℓ, ℓ+1`.
fn q_hat(l: usize) -> P {
    let xs = x(l, 1).add(&x(l, 2));
    let ys = x(l + 1, 1).add(&x(l + 1, 2));
    let mut out = x(l, 1)
        .mul(&x(l, 2))
        .add(&x(l + 1, 1).mul(&x(l + 1, 2)))
        .scale(&PolyH::from_i64(4))
        .sub(&xs.mul(&ys).scale(&PolyH::from_i64(2)));
    out.add_term(crate::polyvars::Mono::one(), hbar_pow(2));
    out
}

/// Closed-form numerator of `Ψ(X̃_{β,s})` up to `ℚ^×`, over the pole
/// denominator of `β`.
pub fn yangian_closed_form(sys: &RootSystem, root: usize, s: i32) -> Result<RatElement> {
    let r = sys.roots().get(root).ok_or_else(|| Error::UnknownRoot(format!("index {root}")))?;
    let n = sys.n;
    let h = r.height() as u32;
    let xs = |c: usize| P::var_pow(VarId::x(c, 1), s);
    let num = match (sys.ty, r.tag) {
        (CartanType::C, RootTag::Fold { i, j }) => {
            let mut f = xs(i).scale(&hbar_pow((2 * n - i - j) as u32));
            f = f.mul(&x(j - 1, 1).scale(&PolyH::from_i64(2)).sub(&x(j, 1)).sub(&x(j, 2)));
            for l in j..n - 1 {
                f = f.mul(&q_hat(l));
            }
            f
        }
        (CartanType::C, RootTag::DoubleFold { i }) => {
            let mut f = xs(n).scale(&hbar_pow((2 * n - 2 * i) as u32));
            for l in i..n - 1 {
                f = f.mul(&q_hat(l));
            }
            f
        }
        (CartanType::D, RootTag::Fold { i, j }) if j + 1 < n => {
            let mut f = xs(i).scale(&hbar_pow((2 * n - i - j - 1) as u32));
            for l in j..=n - 2 {
                let d = x(l, 1).sub(&x(l, 2));
                let mut a = d.clone();
                a.add_term(crate::polyvars::Mono::one(), PolyH::hbar());
                let mut b = d.neg();
                b.add_term(crate::polyvars::Mono::one(), PolyH::hbar());
                f = f.mul(&a).mul(&b);
            }
            f
        }
        _ => xs(r.first()).scale(&hbar_pow(h - 1)),
    };
    Ok(RatElement::new(r.nu.clone(), num))
}

/// `ħ`-adic valuation of a nonzero polynomial's coefficients.
fn hbar_valuation(p: &P) -> Option<usize> {
    p.terms().filter_map(|(_, c)| c.hbar_valuation()).min()
}

/// Lowest `ħ`-power of the element's numerator over its scalar denominator.
fn image_valuation(img: &SpecImage<Rat>) -> Option<i64> {
    let v = hbar_valuation(&img.poly)? as i64;
    Some(v - img.den.hbar_valuation().unwrap_or(0) as i64)
}

fn required(sys: &RootSystem, d: &KostantPartition, extra: i64) -> i64 {
    d.support().map(|(ri, m)| m as i64 * (kappa(sys, sys.root(ri)) as i64 + extra)).sum()
}

fn check_images(sys: &RootSystem, f: &RatElement, extra: i64, label: &str) -> Result<Membership> {
    for d in kostant_partitions(sys, &f.k) {
        let img = match phi_d(sys, f, &d) {
            Ok(i) => i,
            Err(e) => return Ok(Membership::no("specialization", format!("d={}: {e}", d.name(sys)))),
        };
        let need = required(sys, &d, extra);
        if let Some(v) = image_valuation(&img) {
            if v < need {
                return Ok(Membership::no(
                    label,
                    format!("d={}: lowest ħ-power {v} < {need} in {img}", d.name(sys)),
                ));
            }
        }
    }
    Ok(Membership::yes())
}

/// Good: every `φ_d(F)` divisible by `ħ^{Σ d_β κ_β}`.
pub fn is_good(sys: &RootSystem, f: &RatElement) -> Result<Membership> {
    check_images(sys, f, 0, "good")
}

/// Integral: `F` divisible by `ħ^{|k|}` and every `φ_d(F)` by
/// `ħ^{Σ d_β (κ_β + 1)}`.
pub fn is_integral(sys: &RootSystem, f: &RatElement) -> Result<Membership> {
    let size: i64 = f.k.iter().map(|&x| x as i64).sum();
    if let Some(v) = hbar_valuation(&f.num) {
        let v = v as i64 - f.den.hbar_valuation().unwrap_or(0) as i64;
        if v < size {
            return Ok(Membership::no("integral", format!("lowest ħ-power of F is {v} < {size}")));
        }
    }
    check_images(sys, f, 1, "integral")
}

/// Shape of `φ_β(Ψ(X_{β,s}))` as `c·ħ^κ·p(w)` with `p` monic of degree `s`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LeadingShape {
    pub root: String,
    pub kappa: i32,
    pub s: i32,
    /// Lowest `ħ`-power among the coefficients.
    pub valuation: Option<usize>,
    pub degree: Option<i32>,
    /// Leading coefficient in `w` is `c·ħ^κ` with `c ∈ ℚ^×`.
    pub monic: bool,
}

impl LeadingShape {
    pub fn ok(&self) -> bool {
        self.valuation == Some(self.kappa as usize) && self.degree == Some(self.s) && self.monic
    }
}

/// Computes the leading shape of the rational specialization of `f`,
/// the `Ψ`-image of a root vector of `root` with mode `s`.
pub fn leading_shape(sys: &RootSystem, root: usize, s: i32, f: &RatElement) -> Result<LeadingShape> {
    let r = sys.root(root);
    let d = KostantPartition::single(sys, root, 1);
    let img = phi_d(sys, f, &d)?;
    let kap = kappa(sys, r);
    let w = VarId::w(root, 1);
    let groups = img.poly.collect_in(w);
    let degree = groups.keys().next_back().copied();
    let monic = match groups.iter().next_back() {
        Some((_, lead)) => lead.as_constant().map_or(false, |c| {
            c.hbar_valuation() == Some(kap as usize) && c.degree() == Some(kap as usize)
        }),
        None => false,
    };
    Ok(LeadingShape {
        root: r.label().to_string(),
        kappa: kap,
        s,
        valuation: hbar_valuation(&img.poly),
        degree,
        monic,
    })
}

#[cfg(test)]
mod tests;
