use super::{Int, LaurentZ};

/// Quantum integer `[ℓ]_u` at `u = v^d`: `(u^ℓ − u^{−ℓ})/(u − u^{−1})`.
pub fn quantum_int(l: u32, d: u32) -> LaurentZ {
    assert!(d >= 1, "quantum_int: d must be positive");
    let d = d as i32;
    let l = l as i32;
    let mut acc = LaurentZ::zero();
    // [ℓ]_u = u^{ℓ−1} + u^{ℓ−3} + … + u^{1−ℓ}
    let mut e = l - 1;
    while e >= 1 - l {
        acc = acc.add(&LaurentZ::vpow(d * e));
        e -= 2;
    }
    acc
}

/// `[ℓ]_u!` at `u = v^d`.
pub fn quantum_factorial(l: u32, d: u32) -> LaurentZ {
    (1..=l).fold(LaurentZ::one(), |acc, m| acc.mul(&quantum_int(m, d)))
}

/// Quantum binomial `[ℓ choose m]_u` at `u = v^d`.
pub fn quantum_binom(l: u32, m: u32, d: u32) -> LaurentZ {
    assert!(m <= l, "quantum_binom: need 0 ≤ m ≤ ℓ");
    let num = quantum_factorial(l, d);
    let den = quantum_factorial(l - m, d).mul(&quantum_factorial(m, d));
    num.div_exact(&den).expect("quantum binomial is a Laurent polynomial")
}

/// `⟨m⟩_v = v^m − v^{−m}`.
pub fn angle(m: u32) -> LaurentZ {
    assert!(m >= 1, "angle: m must be positive");
    let m = m as i32;
    LaurentZ::vpow(m).sub(&LaurentZ::vpow(-m))
}

/// `v^m − 1`.
pub fn v_pow_minus_one(m: i32) -> LaurentZ {
    LaurentZ::vpow(m).sub(&LaurentZ::constant(Int::ONE))
}
