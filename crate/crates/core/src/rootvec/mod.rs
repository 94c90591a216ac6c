//! Quantum root vectors as free expressions, their normalized and divided
//! variants, ordered PBWD monomials, and closed-form shuffle images of the
//! signed presets.

mod closed;

pub use closed::{closed_form, ClosedFormImage};

use crate::error::{Error, Result};
use crate::roots::{CartanType, PbwdKey, PositiveRoot, RootSystem, RootTag};
use crate::scalars::{angle, quantum_factorial, quantum_int, LaurentZ, RationalV};
use crate::shuffle::TrigExpr;
use rand::Rng;
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_i32(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// Iterated-commutator data for one root vector.
///
/// `parts[p]` is the mode on the `p`-th letter of the root's word and
/// `lambdas[p]` the `v`-exponent of the `p`-th bracket, so both have
/// lengths `ℓ` and `ℓ − 1`. For the type C root `[i,n,i]` the word is
/// `i..n−1, i..n−1, n`; the first `n−i−1` lambdas belong to the
/// `[i,n−1]` chain, the next `n−i` to the `[i,n]` chain and the last one
/// to the outer bracket.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RootVectorSpec {
    pub root: usize,
    pub parts: Vec<i32>,
    pub lambdas: Vec<i32>,
}

impl RootVectorSpec {
    pub fn generic(sys: &RootSystem, root: usize, parts: Vec<i32>, lambdas: Vec<i32>) -> Result<Self> {
        let r = root_at(sys, root)?;
        let l = r.word.len();
        if parts.len() != l || lambdas.len() + 1 != l {
            return Err(Error::InvalidDecomposition(format!(
                "{} needs {l} modes and {} lambdas, got {} and {}",
                r.label(),
                l - 1,
                parts.len(),
                lambdas.len()
            )));
        }
        Ok(RootVectorSpec { root, parts, lambdas })
    }

    /// Signed preset with per-color modes (`modes[c−1]` for color `c`).
    /// Colors outside the root must carry mode 0; a color occurring twice
    /// in the word reuses its mode, so the total is `Σ ν_c·modes[c−1]`.
    pub fn tilde(sys: &RootSystem, root: usize, modes: &[i32], sign: Sign) -> Result<Self> {
        let r = root_at(sys, root)?;
        if modes.len() != sys.n {
            return Err(Error::InvalidDecomposition(format!("expected {} per-color modes", sys.n)));
        }
        if let Some(c) = (0..sys.n).find(|&c| r.nu[c] == 0 && modes[c] != 0) {
            return Err(Error::InvalidDecomposition(format!("color {} is not in {}", c + 1, r.label())));
        }
        let parts = r.word.iter().map(|&c| modes[c - 1]).collect();
        let e = sign.as_i32();
        let n = sys.n;
        let lambdas: Vec<i32> = match (sys.ty, r.tag) {
            (CartanType::C, RootTag::ToN { .. }) | (CartanType::C, RootTag::Fold { .. }) => {
                r.word[1..].iter().map(|&c| if c == n { 2 * e } else { e }).collect()
            }
            (CartanType::C, RootTag::DoubleFold { i }) => {
                let m = n - i;
                let mut l = vec![e; m - 1];
                l.extend(vec![e; m - 1]);
                l.push(2 * e);
                l.push(0);
                l
            }
            _ => vec![e; r.word.len() - 1],
        };
        Ok(RootVectorSpec { root, parts, lambdas })
    }

    /// Signed preset with all of `s` on one color: the first letter, or
    /// color `n` for the type C root `[i,n,i]`.
    pub fn tilde_canonical(sys: &RootSystem, root: usize, s: i32, sign: Sign) -> Result<Self> {
        Self::tilde(sys, root, &canonical_modes(sys, root, s)?, sign)
    }

    /// Generic spec with random `λ`'s in `v^{−2..2}` and a random
    /// decomposition of `s` whose parts lie within `spread` of an even split.
    pub fn random<R: Rng>(sys: &RootSystem, root: usize, s: i32, spread: i32, rng: &mut R) -> Result<Self> {
        let r = root_at(sys, root)?;
        let l = r.word.len();
        let mut parts: Vec<i32> = (0..l).map(|_| rng.gen_range(-spread..=spread)).collect();
        let total: i32 = parts.iter().sum();
        let pick = rng.gen_range(0..l);
        parts[pick] += s - total;
        let lambdas = (0..l - 1).map(|_| rng.gen_range(-2..=2)).collect();
        Self::generic(sys, root, parts, lambdas)
    }

    pub fn mode(&self) -> i32 {
        self.parts.iter().sum()
    }

    pub fn describe(&self, sys: &RootSystem) -> String {
        format!("{} parts={:?} lambdas={:?}", sys.root(self.root).label(), self.parts, self.lambdas)
    }
}

fn root_at(sys: &RootSystem, root: usize) -> Result<&PositiveRoot> {
    sys.roots().get(root).ok_or_else(|| Error::UnknownRoot(format!("index {root}")))
}

/// Per-color modes of the canonical decomposition of `s`.
pub fn canonical_modes(sys: &RootSystem, root: usize, s: i32) -> Result<Vec<i32>> {
    let r = root_at(sys, root)?;
    let mut modes = vec![0; sys.n];
    let c = match r.tag {
        RootTag::DoubleFold { .. } => sys.n,
        _ => r.first(),
    };
    modes[c - 1] = s;
    Ok(modes)
}

fn chain(word: &[usize], parts: &[i32], lambdas: &[i32]) -> TrigExpr {
    let mut acc = TrigExpr::gen(word[0], parts[0]);
    for p in 1..word.len() {
        acc = TrigExpr::comm(RationalV::vpow(lambdas[p - 1]), acc, TrigExpr::gen(word[p], parts[p]));
    }
    acc
}

/// The iterated `v`-commutator of `spec`.
pub fn root_vector(sys: &RootSystem, spec: &RootVectorSpec) -> Result<TrigExpr> {
    let r = root_at(sys, spec.root)?;
    let l = r.word.len();
    if spec.parts.len() != l || spec.lambdas.len() + 1 != l {
        return Err(Error::InvalidDecomposition(spec.describe(sys)));
    }
    Ok(match (sys.ty, r.tag) {
        (CartanType::C, RootTag::DoubleFold { i }) => {
            let m = sys.n - i;
            let a = chain(&r.word[..m], &spec.parts[..m], &spec.lambdas[..m - 1]);
            let b = chain(&r.word[m..], &spec.parts[m..], &spec.lambdas[m - 1..2 * m - 1]);
            TrigExpr::comm(RationalV::vpow(spec.lambdas[2 * m - 1]), a, b)
        }
        _ => chain(&r.word, &spec.parts, &spec.lambdas),
    })
}

/// Scalar of the normalized root vector: `⟨2⟩` for the type C root `[n]`,
/// `⟨1⟩` otherwise.
pub fn rtt_scalar(sys: &RootSystem, root: usize) -> LaurentZ {
    let r = sys.root(root);
    if sys.ty == CartanType::C && r.word == [sys.n] {
        angle(2)
    } else {
        angle(1)
    }
}

/// Normalized root vector `⟨·⟩·E`.
pub fn rtt_root_vector(sys: &RootSystem, spec: &RootVectorSpec) -> Result<TrigExpr> {
    let e = root_vector(sys, spec)?;
    Ok(TrigExpr::scale(RationalV::from_laurent(rtt_scalar(sys, spec.root)), e))
}

/// Denominator of the divided power of order `p`.
pub fn divided_power_denominator(sys: &RootSystem, root: usize, p: u32) -> LaurentZ {
    let r = sys.root(root);
    let fact = quantum_factorial(p, r.v_exp() as u32);
    match (sys.ty, r.tag) {
        (CartanType::C, RootTag::DoubleFold { .. }) => quantum_int(2, 1).pow(p).mul(&fact),
        _ => fact,
    }
}

/// `E^p` divided by its normalizing quantum factorial.
pub fn divided_power(sys: &RootSystem, spec: &RootVectorSpec, p: u32) -> Result<TrigExpr> {
    if p == 0 {
        return Ok(TrigExpr::Unit);
    }
    let e = root_vector(sys, spec)?;
    let den = divided_power_denominator(sys, spec.root, p);
    let pow = TrigExpr::pow(&e, p);
    if den.is_one() {
        return Ok(pow);
    }
    Ok(TrigExpr::scale(RationalV::new(LaurentZ::one(), den), pow))
}

/// Ordered product `∏ E_{β,s}^{h(β,s)}` with specs supplied per `(β, s)`.
pub fn pbwd_monomial(
    sys: &RootSystem,
    h: &PbwdKey,
    mut spec_for: impl FnMut(usize, i32) -> Result<RootVectorSpec>,
) -> Result<TrigExpr> {
    let mut items = Vec::new();
    for &(r, s, m) in &h.entries {
        let spec = spec_for(r, s)?;
        if spec.root != r || spec.mode() != s {
            return Err(Error::InvalidDecomposition(format!(
                "spec {} does not match ({}, {s})",
                spec.describe(sys),
                sys.root(r).label()
            )));
        }
        let e = root_vector(sys, &spec)?;
        for _ in 0..m {
            items.push(e.clone());
        }
    }
    Ok(TrigExpr::prod(items))
}

/// Parses a preset name such as `tildeE+/C3/[1,3,2]/s=1`, returning the
/// system, the root-vector choice and whether the normalized variant (`rttE`) was asked.
pub fn parse_preset(name: &str) -> Result<(crate::roots::Sys, RootVectorSpec, bool)> {
    let bad = || Error::UnknownRoot(name.to_string());
    let mut it = name.split('/');
    let head = it.next().ok_or_else(bad)?;
    let (kind, sign) = match head {
        "tildeE+" => (false, Sign::Plus),
        "tildeE-" => (false, Sign::Minus),
        "rttE+" => (true, Sign::Plus),
        "rttE-" => (true, Sign::Minus),
        _ => return Err(bad()),
    };
    let sysname = it.next().ok_or_else(bad)?;
    let (ty, rank) = sysname.split_at(1);
    let sys = RootSystem::new(ty.parse()?, rank.parse().map_err(|_| bad())?)?;
    let root = sys.parse_root(it.next().ok_or_else(bad)?)?.index;
    let s: i32 = match it.next() {
        Some(t) => t.strip_prefix("s=").and_then(|x| x.parse().ok()).ok_or_else(bad)?,
        None => 0,
    };
    if it.next().is_some() {
        return Err(bad());
    }
    let spec = RootVectorSpec::tilde_canonical(&sys, root, s, sign)?;
    Ok((sys, spec, kind))
}
