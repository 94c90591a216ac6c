//! Dimension counts of wheel-condition spaces against PBWD counts.
//!
//! For a degree vector `k` and total mode degree `δ ≥ 0`, the space is
//! spanned by symmetric numerators `f` of total degree `δ + |Δ_k|` whose
//! rational function `f/Δ_k` stays regular when any sub-collection of
//! variables is sent to zero, cut down by the wheel conditions. The
//! regularity condition is orbit-wise: an orbit is allowed iff for every
//! choice of `m_i ≤ k_i` copies per color, the `m_i` smallest exponents of
//! each color add up to at least the number of pole pairs among them.

use crate::error::Result;
use crate::polyvars::{Mono, SparsePoly, VarId};
use crate::roots::{keys_for_partition, kostant_partitions, PbwdKey, RootSystem, Sys};
use crate::rootvec::Sign;
use crate::scalars::{LaurentZ, Ring};
use crate::shuffle::{Flavor, Trig};
use itertools::Itertools;
use rayon::prelude::*;
use rustc_hash::FxHashMap;
use serde::Serialize;

use super::verify::MonomialEvaluator;

type P = SparsePoly<LaurentZ>;

/// Rank by fraction-free (Bareiss) elimination.
pub fn bareiss_rank<R: Ring>(mut m: Vec<Vec<R>>) -> usize {
    let rows = m.len();
    let Some(cols) = m.first().map(Vec::len) else {
        return 0;
    };
    let mut rank = 0;
    let mut prev = R::one();
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let (top, rest) = m.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        let piv = pivot_row[c].clone();
        rest.par_iter_mut().for_each(|row| {
            let lead = row[c].clone();
            for cc in c + 1..cols {
                let t = piv.mul(&row[cc]).sub(&lead.mul(&pivot_row[cc]));
                row[cc] = t.div_exact(&prev).expect("Bareiss step is exact");
            }
            row[c] = R::zero();
        });
        prev = piv;
        rank += 1;
    }
    rank
}

/// Non-decreasing tuples of `len` non-negative integers with sum `sum`,
/// entries at least `min`.
fn sorted_tuples(len: u32, sum: i64, min: i64) -> Vec<Vec<i32>> {
    if len == 0 {
        return if sum == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    let mut first = min;
    while first * len as i64 <= sum {
        for mut rest in sorted_tuples(len - 1, sum - first, first) {
            rest.insert(0, first as i32);
            out.push(rest);
        }
        first += 1;
    }
    out
}

/// Per-color sorted exponent lists.
pub type Orbit = Vec<Vec<i32>>;

fn orbits_of_degree(k: &[u32], total: i64) -> Vec<Orbit> {
    fn rec(k: &[u32], total: i64, acc: &mut Orbit, out: &mut Vec<Orbit>) {
        let Some((&first, rest)) = k.split_first() else {
            if total == 0 {
                out.push(acc.clone());
            }
            return;
        };
        for s in 0..=total {
            for t in sorted_tuples(first, s, 0) {
                acc.push(t);
                rec(rest, total - s, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    if total >= 0 {
        rec(k, total, &mut Vec::new(), &mut out);
    }
    out
}

fn pole_pairs(sys: &RootSystem, m: &[u32]) -> i64 {
    let mut t = 0;
    for i in 1..=sys.n {
        for j in i + 1..=sys.n {
            if sys.adjacent(i, j) {
                t += m[i - 1] as i64 * m[j - 1] as i64;
            }
        }
    }
    t
}

fn allowed(sys: &RootSystem, o: &Orbit) -> bool {
    let ranges: Vec<_> = o.iter().map(|t| 0..=t.len()).collect();
    ranges.into_iter().multi_cartesian_product().all(|m| {
        let low: i64 = o.iter().zip(&m).map(|(t, &mi)| t[..mi].iter().map(|&e| e as i64).sum::<i64>()).sum();
        let mu: Vec<u32> = m.iter().map(|&x| x as u32).collect();
        low >= pole_pairs(sys, &mu)
    })
}

fn canonical_mono(o: &Orbit) -> Mono {
    Mono::from_pairs(
        o.iter().enumerate().flat_map(|(c, t)| t.iter().enumerate().map(move |(p, &e)| (VarId::x(c + 1, p + 1), e))),
    )
}

/// Sorted per-color exponents of a monomial, or `None` if some exponent
/// is negative.
fn orbit_of(m: &Mono, k: &[u32]) -> Option<Orbit> {
    let mut o: Orbit = k.iter().map(|&ki| vec![0; ki as usize]).collect();
    for &(v, e) in m.pairs() {
        if e < 0 {
            return None;
        }
        o[v.a() - 1][v.b() - 1] = e;
    }
    for t in &mut o {
        t.sort_unstable();
    }
    Some(o)
}

fn orbit_sum(o: &Orbit, k: &[u32]) -> P {
    let ks: Vec<usize> = k.iter().map(|&x| x as usize).collect();
    P::term(canonical_mono(o), LaurentZ::one()).symmetrize(&ks).expect("orbit variables are in range")
}

/// The wheel patterns of `k` as substitution maps.
fn wheel_patterns(sys: &RootSystem, k: &[u32]) -> Vec<FxHashMap<VarId, P>> {
    let mut out = Vec::new();
    for i in 1..=sys.n {
        for j in 1..=sys.n {
            if i == j || sys.a(i, j) == 0 {
                continue;
            }
            let m = (1 - sys.a(i, j)) as usize;
            if (k[i - 1] as usize) < m || k[j - 1] == 0 {
                continue;
            }
            let xj = VarId::x(j, 1);
            out.push((1..=m).map(|p| (VarId::x(i, p), Trig::wheel_image(sys, i, j, p, xj))).collect());
        }
    }
    out
}

/// Allowed orbits and the rank of the wheel constraints on them.
fn wheel_data(sys: &RootSystem, k: &[u32], delta: i64) -> Result<(Vec<Orbit>, usize)> {
    let total = delta + pole_pairs(sys, k);
    let orbits: Vec<Orbit> = orbits_of_degree(k, total).into_iter().filter(|o| allowed(sys, o)).collect();
    let patterns = wheel_patterns(sys, k);
    if patterns.is_empty() || orbits.is_empty() {
        return Ok((orbits, 0));
    }
    let images: Vec<Vec<P>> = orbits
        .par_iter()
        .map(|o| {
            let f = orbit_sum(o, k);
            patterns.iter().map(|pat| f.substitute_partial(pat)).collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let mut rows: FxHashMap<(usize, Mono), Vec<LaurentZ>> = FxHashMap::default();
    for (col, imgs) in images.iter().enumerate() {
        for (pi, img) in imgs.iter().enumerate() {
            for (m, c) in img.terms() {
                rows.entry((pi, m.clone())).or_insert_with(|| vec![LaurentZ::zero(); orbits.len()])[col] = c.clone();
            }
        }
    }
    let mut mat: Vec<(_, Vec<LaurentZ>)> = rows.into_iter().collect();
    mat.sort_by(|a, b| a.0.cmp(&b.0));
    let rank = bareiss_rank(mat.into_iter().map(|(_, r)| r).collect());
    Ok((orbits, rank))
}

/// Dimension of the degree-`δ` wheel space of `k`.
pub fn wheel_space_dimension(sys: &RootSystem, k: &[u32], delta: i64) -> Result<usize> {
    let (orbits, rank) = wheel_data(sys, k, delta)?;
    Ok(orbits.len() - rank)
}

/// PBWD keys of grading `k` with modes `≥ 0` summing to `δ`.
pub fn nonnegative_keys(sys: &RootSystem, k: &[u32], delta: i64) -> Vec<PbwdKey> {
    if delta < 0 {
        return Vec::new();
    }
    kostant_partitions(sys, k)
        .iter()
        .flat_map(|d| keys_for_partition(d, (0, delta as i32)))
        .filter(|h| h.mode_sum() == delta)
        .collect()
}

#[derive(Clone, Debug)]
pub struct DimSettings {
    pub sign: Sign,
    /// Also compute the rank of the `Ψ(E_h)`.
    pub check_rank: bool,
}

impl Default for DimSettings {
    fn default() -> Self {
        DimSettings { sign: Sign::Plus, check_rank: true }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimRow {
    pub k: Vec<u32>,
    pub delta: i64,
    pub orbits: usize,
    pub wheel_rank: usize,
    pub wheel_dim: usize,
    pub pbwd_count: usize,
    pub psi_rank: Option<usize>,
    /// Every `Ψ(E_h)` lies in the space.
    pub contained: bool,
}

impl DimRow {
    pub fn ok(&self) -> bool {
        self.wheel_dim == self.pbwd_count && self.contained && self.psi_rank.map_or(true, |r| r == self.pbwd_count)
    }
}

/// Dimension rows for each `δ` in `degrees`.
pub fn dim_report(sys: &Sys, k: &[u32], degrees: std::ops::RangeInclusive<i64>, settings: &DimSettings) -> Result<Vec<DimRow>> {
    let ev = MonomialEvaluator::tilde(sys.clone(), settings.sign);
    let mut out = Vec::new();
    for delta in degrees {
        let (orbits, wheel_rank) = wheel_data(sys, k, delta)?;
        let keys = nonnegative_keys(sys, k, delta);
        let mut row = DimRow {
            k: k.to_vec(),
            delta,
            orbits: orbits.len(),
            wheel_rank,
            wheel_dim: orbits.len() - wheel_rank,
            pbwd_count: keys.len(),
            psi_rank: None,
            contained: true,
        };
        if settings.check_rank {
            let index: FxHashMap<Orbit, usize> = orbits.iter().cloned().enumerate().map(|(i, o)| (o, i)).collect();
            let elems = keys.par_iter().map(|h| ev.eval(h)).collect::<Result<Vec<_>>>()?;
            let mut mat = Vec::new();
            for f in &elems {
                let mut r = vec![LaurentZ::zero(); orbits.len()];
                for (m, c) in f.num.terms() {
                    match orbit_of(m, k).and_then(|o| index.get(&o).copied()) {
                        Some(i) => {
                            if m == &canonical_mono(&orbits[i]) {
                                r[i] = c.clone();
                            }
                        }
                        None => row.contained = false,
                    }
                }
                if !f.wheel_check(sys) {
                    row.contained = false;
                }
                mat.push(r);
            }
            row.psi_rank = Some(if orbits.is_empty() { 0 } else { bareiss_rank(mat) });
        }
        out.push(row);
    }
    Ok(out)
}
