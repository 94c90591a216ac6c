use super::phi_d;
use super::tables::{c_beta, g_forms, p_lambda};
use crate::error::{Error, Result};
use crate::polyvars::{div_by_forms, SparsePoly};
use crate::roots::{PbwdKey, RootSystem, Sys};
use crate::rootvec::{root_vector, RootVectorSpec, Sign};
use crate::scalars::{LaurentZ, Ring};
use crate::shuffle::{Flavor, ShuffleAlgebra, Trig, TrigElement};
use rustc_hash::FxHashMap;
use serde::Serialize;
use std::sync::{Arc, Mutex};

type P = SparsePoly<LaurentZ>;
type SpecFn = dyn Fn(usize, i32) -> Result<RootVectorSpec> + Send + Sync;

/// Ψ of ordered PBWD monomials, memoizing root vectors and every product
/// prefix so that keys sharing a prefix share work.
pub struct MonomialEvaluator {
    pub sys: Sys,
    alg: ShuffleAlgebra<Trig>,
    spec_for: Box<SpecFn>,
    prefixes: Mutex<FxHashMap<Vec<(usize, i32)>, Arc<TrigElement>>>,
}

impl MonomialEvaluator {
    pub fn new(sys: Sys, spec_for: Box<SpecFn>) -> Self {
        MonomialEvaluator { alg: ShuffleAlgebra::new(sys.clone()), sys, spec_for, prefixes: Mutex::new(FxHashMap::default()) }
    }

    /// Signed presets with the canonical mode decomposition.
    pub fn tilde(sys: Sys, sign: Sign) -> Self {
        let s2 = sys.clone();
        Self::new(sys, Box::new(move |r, s| RootVectorSpec::tilde_canonical(&s2, r, s, sign)))
    }

    pub fn algebra(&self) -> &ShuffleAlgebra<Trig> {
        &self.alg
    }

    /// `Ψ(E_{β,s})`.
    pub fn root_vector(&self, root: usize, s: i32) -> Result<Arc<TrigElement>> {
        self.prefix(&[(root, s)])
    }

    /// `Ψ(E_h)`.
    pub fn eval(&self, h: &PbwdKey) -> Result<Arc<TrigElement>> {
        self.prefix(&h.factors())
    }

    fn prefix(&self, factors: &[(usize, i32)]) -> Result<Arc<TrigElement>> {
        if factors.is_empty() {
            return Ok(Arc::new(self.alg.unit()));
        }
        if let Some(hit) = self.prefixes.lock().unwrap().get(factors) {
            return Ok(hit.clone());
        }
        let out = if factors.len() == 1 {
            let (r, s) = factors[0];
            let spec = (self.spec_for)(r, s)?;
            if spec.root != r || spec.mode() != s {
                return Err(Error::InvalidDecomposition(spec.describe(&self.sys)));
            }
            self.alg.psi(&root_vector(&self.sys, &spec)?)?
        } else {
            let (head, last) = factors.split_at(factors.len() - 1);
            let a = self.prefix(head)?;
            let b = self.prefix(last)?;
            self.alg.star(&a, &b)?
        };
        let out = Arc::new(out);
        self.prefixes.lock().unwrap().insert(factors.to_vec(), out.clone());
        Ok(out)
    }

    pub fn clear(&self) {
        self.prefixes.lock().unwrap().clear();
        self.alg.clear_cache();
    }
}

/// `φ_{d′}(Ψ(E_h)) = 0`.
pub fn verify_vanishing(ev: &MonomialEvaluator, h: &PbwdKey, d_prime: &crate::roots::KostantPartition) -> Result<bool> {
    let f = ev.eval(h)?;
    Ok(phi_d(&ev.sys, &f, d_prime)?.is_zero())
}

/// Outcome of the leading-term check over a family of keys of one degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LeadingReport {
    pub partition: String,
    pub keys: usize,
    pub divisible: bool,
    pub independent: bool,
    pub witness: Option<String>,
}

impl LeadingReport {
    pub fn ok(&self) -> bool {
        self.divisible && self.independent
    }
}

/// `f ≐ g` over `ℤ[v,v⁻¹]`: equal up to `ℚ^×·v^ℤ`.
pub(crate) fn proportional(f: &P, g: &P) -> bool {
    if f.is_zero() || g.is_zero() {
        return f.is_zero() && g.is_zero();
    }
    let (Some((mf, cf)), Some((mg, cg))) = (f.leading_term(), g.leading_term()) else {
        return false;
    };
    if mf != mg || f.len() != g.len() {
        return false;
    }
    match Trig::unit_ratio(cf, cg) {
        Some((a, b)) => f.scale(&b) == g.scale(&a),
        None => false,
    }
}

fn integral_image(ev: &MonomialEvaluator, h: &PbwdKey) -> Result<P> {
    let sys = &ev.sys;
    let f = ev.eval(h)?;
    let img = phi_d(sys, &f, &h.deg(sys))?;
    Ok(match img.den.inverse() {
        Some(inv) => img.poly.scale(&inv),
        None => img.poly,
    })
}

/// Divides by `∏ c_β^{d_β}·G_β`, returning the cofactor.
fn strip_leading(sys: &RootSystem, h: &PbwdKey, img: &P) -> Result<P> {
    let d = h.deg(sys);
    let mut c = LaurentZ::one();
    for (ri, m) in d.support() {
        c = c.mul(&c_beta(sys, sys.root(ri)).pow(m));
    }
    let mut g = img.exact_div(&P::constant(c))?;
    for (ri, m) in d.support() {
        let (mono, forms) = g_forms(sys, sys.root(ri), m);
        g = div_by_forms(&g, &forms)?.mul_mono(&mono.inv());
    }
    Ok(g)
}

fn p_product(sys: &RootSystem, h: &PbwdKey) -> Result<P> {
    let mut out = P::one();
    for (ri, _) in h.deg(sys).support() {
        out = out.mul(&p_lambda(h, sys.root(ri))?);
    }
    Ok(out)
}

/// Leading-term identity for two keys of equal degree with the default
/// `tildeE+` root vectors.
pub fn verify_leading(sys: &Sys, h1: &PbwdKey, h2: &PbwdKey) -> Result<bool> {
    let ev = MonomialEvaluator::tilde(sys.clone(), Sign::Plus);
    Ok(verify_leading_with(&ev, &[h1.clone(), h2.clone()])?.ok())
}

/// Leading-term identity over `keys`, all of one degree `d`: every
/// `φ_d(Ψ(E_h))` is divisible by `∏ c_β^{d_β} G_β`, and
/// `φ_d(Ψ(E_h))·P_{h₀} ≐ φ_d(Ψ(E_{h₀}))·P_h` against the first key `h₀`,
/// which by transitivity covers every pair.
pub fn verify_leading_with(ev: &MonomialEvaluator, keys: &[PbwdKey]) -> Result<LeadingReport> {
    let sys = &ev.sys;
    let Some(h0) = keys.first() else {
        return Ok(LeadingReport { partition: "{}".into(), keys: 0, divisible: true, independent: true, witness: None });
    };
    let d = h0.deg(sys);
    if let Some(h) = keys.iter().find(|h| h.deg(sys) != d) {
        return Err(Error::GradingMismatch(format!("{} has degree {}, not {}", h.name(sys), h.deg(sys).name(sys), d.name(sys))));
    }
    let mut report =
        LeadingReport { partition: d.name(sys), keys: keys.len(), divisible: true, independent: true, witness: None };
    let a0 = integral_image(ev, h0)?;
    let p0 = p_product(sys, h0)?;
    for h in keys {
        let a = if h == h0 { a0.clone() } else { integral_image(ev, h)? };
        if let Err(e) = strip_leading(sys, h, &a) {
            report.divisible = false;
            report.witness = Some(format!("{}: {e}", h.name(sys)));
            return Ok(report);
        }
        if h == h0 {
            continue;
        }
        let lhs = a.mul(&p0);
        let rhs = a0.mul(&p_product(sys, h)?);
        if !proportional(&lhs, &rhs) {
            report.independent = false;
            report.witness = Some(format!("{} vs {}: cofactors differ", h.name(sys), h0.name(sys)));
            return Ok(report);
        }
    }
    Ok(report)
}
