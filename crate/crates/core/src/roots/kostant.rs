use super::RootSystem;
use itertools::Itertools;
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;

/// Multiplicities `d_β`, indexed by position in the convex order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct KostantPartition {
    pub d: Vec<u32>,
}

impl KostantPartition {
    pub fn zero(sys: &RootSystem) -> Self {
        KostantPartition { d: vec![0; sys.roots().len()] }
    }

    pub fn single(sys: &RootSystem, idx: usize, mult: u32) -> Self {
        let mut p = Self::zero(sys);
        p.d[idx] = mult;
        p
    }

    /// `Σ d_β β`.
    pub fn degree(&self, sys: &RootSystem) -> Vec<u32> {
        let mut k = vec![0u32; sys.n];
        for (r, &m) in sys.roots().iter().zip(&self.d) {
            for i in 0..sys.n {
                k[i] += m * r.nu[i];
            }
        }
        k
    }

    /// `(root index, multiplicity)` over the support, ascending.
    pub fn support(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.d.iter().enumerate().filter(|(_, &m)| m > 0).map(|(i, &m)| (i, m))
    }

    pub fn name(&self, sys: &RootSystem) -> String {
        let parts: Vec<String> = self.support().map(|(i, m)| format!("{}:{m}", sys.root(i).label())).collect();
        format!("{{{}}}", parts.join(","))
    }
}

/// Total order on Kostant partitions: lexicographic in the convex root order,
/// a smaller multiplicity at the first difference meaning smaller.
pub fn kp_cmp(a: &KostantPartition, b: &KostantPartition) -> Ordering {
    a.d.cmp(&b.d)
}

/// All Kostant partitions of `k`, ascending.
pub fn kostant_partitions(sys: &RootSystem, k: &[u32]) -> Vec<KostantPartition> {
    fn rec(sys: &RootSystem, pos: usize, rem: &mut Vec<u32>, cur: &mut Vec<u32>, out: &mut Vec<KostantPartition>) {
        if rem.iter().all(|&x| x == 0) {
            let mut d = cur.clone();
            d.resize(sys.roots().len(), 0);
            out.push(KostantPartition { d });
            return;
        }
        if pos == sys.roots().len() {
            return;
        }
        let nu = &sys.root(pos).nu;
        let max = (0..sys.n).filter(|&i| nu[i] > 0).map(|i| rem[i] / nu[i]).min().unwrap_or(0);
        for m in 0..=max {
            for i in 0..sys.n {
                rem[i] -= m * nu[i];
            }
            cur.push(m);
            rec(sys, pos + 1, rem, cur, out);
            cur.pop();
            for i in 0..sys.n {
                rem[i] += m * nu[i];
            }
        }
    }
    assert_eq!(k.len(), sys.n, "degree vector length");
    let mut out = Vec::new();
    rec(sys, 0, &mut k.to_vec(), &mut Vec::new(), &mut out);
    out.sort_by(kp_cmp);
    out
}

/// Finite-support function `h: Δ+ × ℤ → ℕ` as sorted `(root, mode, count)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PbwdKey {
    pub entries: Vec<(usize, i32, u32)>,
}

impl PbwdKey {
    pub fn new(mut entries: Vec<(usize, i32, u32)>) -> Self {
        entries.retain(|e| e.2 > 0);
        entries.sort();
        let mut out: Vec<(usize, i32, u32)> = Vec::new();
        for e in entries {
            match out.last_mut() {
                Some(l) if l.0 == e.0 && l.1 == e.1 => l.2 += e.2,
                _ => out.push(e),
            }
        }
        PbwdKey { entries: out }
    }

    /// `deg(h)`: multiplicity per root.
    pub fn deg(&self, sys: &RootSystem) -> KostantPartition {
        let mut d = KostantPartition::zero(sys);
        for &(r, _, m) in &self.entries {
            d.d[r] += m;
        }
        d
    }

    /// `gr(h)`: the degree vector.
    pub fn gr(&self, sys: &RootSystem) -> Vec<u32> {
        self.deg(sys).degree(sys)
    }

    /// Sum of modes with multiplicity.
    pub fn mode_sum(&self) -> i64 {
        self.entries.iter().map(|&(_, s, m)| s as i64 * m as i64).sum()
    }

    /// Modes on root `r`, non-decreasing, repeated by multiplicity.
    pub fn modes_on(&self, r: usize) -> Vec<i32> {
        self.entries.iter().filter(|e| e.0 == r).flat_map(|&(_, s, m)| std::iter::repeat(s).take(m as usize)).collect()
    }

    /// Factors `(root, mode)` in the ordered-product sequence.
    pub fn factors(&self) -> Vec<(usize, i32)> {
        self.entries.iter().flat_map(|&(r, s, m)| std::iter::repeat((r, s)).take(m as usize)).collect()
    }

    pub fn name(&self, sys: &RootSystem) -> String {
        let parts: Vec<String> =
            self.entries.iter().map(|&(r, s, m)| format!("({},{s}):{m}", sys.root(r).label())).collect();
        format!("{{{}}}", parts.join(","))
    }
}

/// All keys with `gr(h) = k` and modes in `[s_min, s_max]`, grouped by
/// `deg(h)` in ascending partition order.
pub fn pbwd_keys(sys: &RootSystem, k: &[u32], window: (i32, i32)) -> Vec<(KostantPartition, Vec<PbwdKey>)> {
    kostant_partitions(sys, k).into_iter().map(|d| {
        let keys = keys_for_partition(&d, window);
        (d, keys)
    }).collect()
}

/// All keys with `deg(h) = d` and modes in the window.
pub fn keys_for_partition(d: &KostantPartition, window: (i32, i32)) -> Vec<PbwdKey> {
    let modes: Vec<i32> = (window.0..=window.1).collect();
    let per_root: Vec<Vec<Vec<(usize, i32, u32)>>> = d
        .support()
        .map(|(r, m)| {
            modes
                .iter()
                .copied()
                .combinations_with_replacement(m as usize)
                .map(|c| c.into_iter().map(|s| (r, s, 1)).collect())
                .collect()
        })
        .collect();
    if per_root.is_empty() {
        return vec![PbwdKey::new(vec![])];
    }
    per_root.into_iter().multi_cartesian_product().map(|parts| PbwdKey::new(parts.concat())).collect()
}


#[cfg(test)]
mod tests {
    use super::super::{CartanType, RootSystem};
    use super::*;

    #[test]
    fn c2_partitions() {
        let c2 = RootSystem::new(CartanType::C, 2).unwrap();
        let kp = kostant_partitions(&c2, &[1, 1]);
        let names: Vec<String> = kp.iter().map(|d| d.name(&c2)).collect();
        assert_eq!(names, ["{[1,2]:1}", "{[1]:1,[2]:1}"]);
        assert_eq!(kostant_partitions(&c2, &[1, 0]).len(), 1);
        let kp = kostant_partitions(&c2, &[2, 1]);
        let names: Vec<String> = kp.iter().map(|d| d.name(&c2)).collect();
        assert_eq!(names, ["{[1,2,1]:1}", "{[1]:1,[1,2]:1}", "{[1]:2,[2]:1}"]);
    }

    #[test]
    fn keys() {
        let c2 = RootSystem::new(CartanType::C, 2).unwrap();
        let g = pbwd_keys(&c2, &[1, 0], (0, 0));
        assert_eq!(g.len(), 1);
        assert_eq!(g[0].1, vec![PbwdKey::new(vec![(0, 0, 1)])]);
        let g = pbwd_keys(&c2, &[1, 1], (0, 0));
        assert_eq!(g.iter().map(|x| x.1.len()).sum::<usize>(), 2);
        let g = pbwd_keys(&c2, &[1, 1], (-1, 1));
        assert_eq!(g[1].1.len(), 9);
        let d = KostantPartition::single(&c2, 0, 2);
        assert_eq!(keys_for_partition(&d, (-1, 1)).len(), 6);
    }
}
