//! Benchmark fixtures.

use shuffle_forge_core::roots::{CartanType, KostantPartition, RootSystem, Sys};
use shuffle_forge_core::rootvec::{root_vector, RootVectorSpec, Sign};
use shuffle_forge_core::shuffle::{ShuffleAlgebra, Trig, TrigElement, TrigExpr};

/// Type C or D system of rank `n`.
pub fn system(ty: CartanType, n: usize) -> Sys {
    RootSystem::new(ty, n).expect("valid rank")
}

/// Index of the highest root, the one with the largest total degree.
pub fn highest_root(sys: &RootSystem) -> usize {
    sys.roots().iter().max_by_key(|r| r.nu.iter().sum::<u32>()).expect("nonempty").index
}

/// Canonical plus-sign root vector of `root` in mode `s`.
pub fn root_expr(sys: &RootSystem, root: usize, s: i32) -> TrigExpr {
    let spec = RootVectorSpec::tilde_canonical(sys, root, s, Sign::Plus).expect("root vector");
    root_vector(sys, &spec).expect("root vector")
}

/// Shuffle image of the highest root vector together with its one-part partition.
pub fn highest_image(sys: &Sys) -> (TrigElement, KostantPartition) {
    let alg: ShuffleAlgebra<Trig> = ShuffleAlgebra::new(sys.clone());
    let r = highest_root(sys);
    let f = alg.psi(&root_expr(sys, r, 0)).expect("psi");
    (f, KostantPartition::single(sys, r, 1))
}
