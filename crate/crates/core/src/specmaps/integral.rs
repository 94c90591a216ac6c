use super::tables::{a_d, c_tilde, g_forms};
use super::{phi_d, SpecImage};
use crate::error::{Error, Result};
use crate::polyvars::{div_by_forms, SparsePoly, VarId};
use crate::roots::{kostant_partitions, CartanType, KostantPartition, RootSystem};
use crate::scalars::{angle, quantum_factorial, LaurentZ, Ring};
use crate::shuffle::{Trig, TrigElement};
use itertools::Itertools;
use rustc_hash::FxHashMap;
use serde::Serialize;

type P = SparsePoly<LaurentZ>;

/// All compositions of `d` into positive parts.
pub fn compositions(d: u32) -> Vec<Vec<u32>> {
    if d == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=d {
        for mut rest in compositions(d - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Per-root compositions `t`, one entry `(root, parts)` per root of `d`.
pub type Composition = Vec<(usize, Vec<u32>)>;

fn all_compositions(d: &KostantPartition) -> Vec<Composition> {
    d.support()
        .map(|(ri, m)| compositions(m).into_iter().map(move |c| (ri, c)).collect::<Vec<_>>())
        .multi_cartesian_product()
        .collect()
}

/// Vertical specialization: the `r`-th group of `t_{β}` sends its `p`-th
/// variable to `v_β^{−2p} z[β][r]`.
pub fn vertical_specialize(sys: &RootSystem, g: &P, d: &KostantPartition, t: &Composition) -> Result<P> {
    let mut map = FxHashMap::default();
    for (ri, m) in d.support() {
        let parts = t
            .iter()
            .find(|(r, _)| *r == ri)
            .map(|(_, p)| p)
            .ok_or_else(|| Error::CompositionMismatch(format!("no composition for {}", sys.root(ri).label())))?;
        if parts.iter().sum::<u32>() != m || parts.contains(&0) {
            return Err(Error::CompositionMismatch(format!(
                "{parts:?} is not a composition of {m} for {}",
                sys.root(ri).label()
            )));
        }
        let vb = sys.root(ri).v_exp();
        let mut s = 1;
        for (r, &len) in parts.iter().enumerate() {
            for p in 1..=len as i32 {
                map.insert(VarId::w(ri, s), P::term(crate::polyvars::Mono::var(VarId::z(ri, r + 1), 1), LaurentZ::vpow(-2 * vb * p)));
                s += 1;
            }
        }
    }
    if let Some((r, _)) = t.iter().find(|(r, _)| d.d.get(*r).map_or(true, |&m| m == 0)) {
        return Err(Error::CompositionMismatch(format!("{} is not in the partition", sys.root(*r).label())));
    }
    g.substitute_partial(&map)
}

/// Coefficient-wise division by a scalar; the error carries the first
/// offending term.
fn div_scalar(p: &P, c: &LaurentZ) -> std::result::Result<P, String> {
    if c.is_one() {
        return Ok(p.clone());
    }
    let mut out = P::zero();
    for (m, a) in p.terms() {
        match a.div_exact(c) {
            Some(q) => out.add_term(m.clone(), q),
            None => return Err(format!("coefficient {a} of {} is not divisible by {c}", display_mono(m))),
        }
    }
    Ok(out)
}

fn display_mono(m: &crate::polyvars::Mono) -> String {
    P::term(m.clone(), LaurentZ::one()).to_string()
}

/// Result of a membership test; `witness` names the failing condition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Membership {
    pub member: bool,
    pub condition: Option<String>,
    pub witness: Option<String>,
}

impl Membership {
    pub fn yes() -> Self {
        Membership { member: true, condition: None, witness: None }
    }

    pub fn no(condition: &str, witness: String) -> Self {
        Membership { member: false, condition: Some(condition.to_string()), witness: Some(witness) }
    }
}

fn integral_numerator(f: &TrigElement) -> std::result::Result<P, Membership> {
    f.integral_numerator()
        .ok_or_else(|| Membership::no("integrality", format!("denominator {} is not a unit", f.den)))
}

fn image(sys: &RootSystem, f: &TrigElement, d: &KostantPartition) -> std::result::Result<P, Membership> {
    match phi_d(sys, f, d) {
        Ok(SpecImage { poly, den }) => {
            let inv = den.inverse().expect("integral element");
            Ok(poly.scale(&inv))
        }
        Err(e) => Err(Membership::no("specialization", format!("d={}: {e}", d.name(sys)))),
    }
}

/// Membership in the shuffle image of the Lusztig integral form:
/// integrality plus divisibility of each `φ_d` by `∏ c̃_β^{d_β}`.
pub fn lusztig_member(sys: &RootSystem, f: &TrigElement) -> Result<Membership> {
    let num = match integral_numerator(f) {
        Ok(p) => p,
        Err(m) => return Ok(m),
    };
    if num.is_zero() {
        return Ok(Membership::yes());
    }
    let f = TrigElement::new(f.k.clone(), num);
    for d in kostant_partitions(sys, &f.k) {
        let img = match image(sys, &f, &d) {
            Ok(p) => p,
            Err(m) => return Ok(m),
        };
        let mut c = LaurentZ::one();
        for (ri, m) in d.support() {
            c = c.mul(&c_tilde(sys, sys.root(ri)).pow(m));
        }
        if let Err(w) = div_scalar(&img, &c) {
            return Ok(Membership::no("c-divisibility", format!("d={}: {w}", d.name(sys))));
        }
    }
    Ok(Membership::yes())
}

/// `⟨1⟩^{k_1+⋯+k_{n−1}}⟨2⟩^{k_n}` in type C, `⟨1⟩^{|k|}` in type D.
pub fn rtt_prefactor(sys: &RootSystem, k: &[u32]) -> LaurentZ {
    match sys.ty {
        CartanType::C => {
            let short: u32 = k[..sys.n - 1].iter().sum();
            angle(1).pow(short).mul(&angle(2).pow(k[sys.n - 1]))
        }
        _ => angle(1).pow(k.iter().sum()),
    }
}

/// `Υ_{d,t}(F)` and whether it is divisible by `∏ [t_{β,r}]_{v_β}!`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossReport {
    pub upsilon: P,
    pub factorial: LaurentZ,
    pub divisible: bool,
}

/// `φ_d(F)` divided by the prefactor, `A_d` and `∏ G_β`.
fn reduced_image(sys: &RootSystem, img: &P, k: &[u32], d: &KostantPartition) -> Result<P> {
    let scalar = rtt_prefactor(sys, k).mul(&a_d(sys, d));
    let mut g = div_scalar(img, &scalar).map_err(|w| Error::NotDivisible { witness: w })?;
    for (ri, m) in d.support() {
        let (mono, forms) = g_forms(sys, sys.root(ri), m);
        g = div_by_forms(&g, &forms)?.mul_mono(&mono.inv());
    }
    Ok(g)
}

/// Cross specialization `Υ_{d,t}` of `F` with its factorial divisibility.
pub fn cross_specialize(sys: &RootSystem, f: &TrigElement, d: &KostantPartition, t: &Composition) -> Result<CrossReport> {
    let num = f
        .integral_numerator()
        .ok_or_else(|| Error::NotDivisible { witness: format!("denominator {}", f.den) })?;
    let img = super::phi_d::<Trig>(sys, &TrigElement::new(f.k.clone(), num), d)?.poly;
    let g = reduced_image(sys, &img, &f.k, d)?;
    cross_from_reduced(sys, &g, d, t)
}

fn cross_from_reduced(sys: &RootSystem, g: &P, d: &KostantPartition, t: &Composition) -> Result<CrossReport> {
    let upsilon = vertical_specialize(sys, g, d, t)?;
    let mut factorial = LaurentZ::one();
    for (ri, parts) in t {
        let vb = sys.root(*ri).v_exp() as u32;
        for &p in parts {
            factorial = factorial.mul(&quantum_factorial(p, vb));
        }
    }
    let divisible = div_scalar(&upsilon, &factorial).is_ok();
    Ok(CrossReport { upsilon, factorial, divisible })
}

/// Membership in the shuffle image of the RTT integral form.
pub fn rtt_member(sys: &RootSystem, f: &TrigElement) -> Result<Membership> {
    let num = match integral_numerator(f) {
        Ok(p) => p,
        Err(m) => return Ok(m),
    };
    if num.is_zero() {
        return Ok(Membership::yes());
    }
    let pre = rtt_prefactor(sys, &f.k);
    if let Err(w) = div_scalar(&num, &pre) {
        return Ok(Membership::no("prefactor", w));
    }
    let f = TrigElement::new(f.k.clone(), num);
    for d in kostant_partitions(sys, &f.k) {
        let img = match image(sys, &f, &d) {
            Ok(p) => p,
            Err(m) => return Ok(m),
        };
        let ad = a_d(sys, &d);
        if let Err(w) = div_scalar(&img, &pre.mul(&ad)) {
            return Ok(Membership::no("A_d-divisibility", format!("d={}: {w}", d.name(sys))));
        }
        let g = match reduced_image(sys, &img, &f.k, &d) {
            Ok(g) => g,
            Err(e) => return Ok(Membership::no("G-divisibility", format!("d={}: {e}", d.name(sys)))),
        };
        for t in all_compositions(&d) {
            let rep = cross_from_reduced(sys, &g, &d, &t)?;
            if !rep.divisible {
                return Ok(Membership::no(
                    "cross-specialization",
                    format!("d={}, t={t:?}: Υ = {} not divisible by {}", d.name(sys), rep.upsilon, rep.factorial),
                ));
            }
        }
    }
    Ok(Membership::yes())
}
