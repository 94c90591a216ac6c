//! Defining relations of the positive quantum loop algebra as expressions.

use super::expr::FreeExpr;
use crate::roots::RootSystem;
use crate::scalars::{quantum_binom, RationalV};
use itertools::Itertools;

type E = FreeExpr<RationalV>;

fn g(i: usize, r: i32) -> E {
    E::gen(i, r)
}

/// Coefficient of `z^{-r} w^{-s}` in
/// `(z − v_i^{a_ij} w) e_i(z) e_j(w) − (v_i^{a_ij} z − w) e_j(w) e_i(z)`.
pub fn quadratic(sys: &RootSystem, i: usize, j: usize, r: i32, s: i32) -> E {
    let q = RationalV::vpow(sys.pairing(i, j));
    let mq = q.neg();
    E::sum(vec![
        E::prod(vec![g(i, r + 1), g(j, s)]),
        E::scale(mq.clone(), E::prod(vec![g(i, r), g(j, s + 1)])),
        E::scale(mq, E::prod(vec![g(j, s), g(i, r + 1)])),
        E::prod(vec![g(j, s + 1), g(i, r)]),
    ])
}

/// Serre relation for `i ≠ j` with modes `rs` (length `1 − a_ij`) on color
/// `i` and `s` on color `j`, summed over orderings of `rs`.
pub fn serre(sys: &RootSystem, i: usize, j: usize, rs: &[i32], s: i32) -> E {
    let m = (1 - sys.a(i, j)) as usize;
    assert_eq!(rs.len(), m, "Serre relation needs 1 − a_ij modes");
    let di = sys.d(i) as u32;
    let mut terms = Vec::new();
    for perm in (0..m).permutations(m) {
        for k in 0..=m {
            let mut c = RationalV::from_laurent(quantum_binom(m as u32, k as u32, di));
            if k % 2 == 1 {
                c = c.neg();
            }
            let mut word: Vec<E> = perm[..k].iter().map(|&p| g(i, rs[p])).collect();
            word.push(g(j, s));
            word.extend(perm[k..].iter().map(|&p| g(i, rs[p])));
            terms.push(E::scale(c, E::prod(word)));
        }
    }
    E::sum(terms)
}
