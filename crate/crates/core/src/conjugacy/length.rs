//! Predicted lengths of `P^{-1} E(u_1) ... E(u_k) P(h+1)` for a conjugator
//! `P = E(v_1) ... E(v_p)` in standard form and nonconstant `u_i`.

use crate::error::{Error, Result};

/// Shape of `v_1` relative to `u_1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FirstFactor {
    /// `v_1` is a nonzero constant.
    Constant,
    /// `v_1` and `u_1 - v_1` are nonconstant.
    Generic,
    /// `v_1` is nonconstant and `u_1 - v_1` is a nonzero constant.
    Shifted,
}

/// Shape of the last conjugator factor `v_p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LastFactor {
    Nonconstant,
    NonzeroConstant,
    Zero,
    /// `p = 2` and `v_2 = (v_1 - u_1)^{-1}` (only with [`FirstFactor::Shifted`]).
    InverseDifference,
    /// `p = 2` and `v_2` a constant other than `(v_1 - u_1)^{-1}`
    /// (only with [`FirstFactor::Shifted`]).
    OtherConstant,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LengthCase {
    pub first: FirstFactor,
    pub p: usize,
    pub last: LastFactor,
}

/// The predicted standard-form length for `k` nonconstant factors.
pub fn predict_conjugation_length(k: usize, case: LengthCase) -> Result<usize> {
    use FirstFactor::*;
    use LastFactor::*;
    let LengthCase { first, p, last } = case;
    let bad = || Error::domain(format!("no length rule for {case:?}"));
    if k == 0 || p == 0 {
        return Err(bad());
    }
    let n = k + 2 * p;
    let len = match (first, last) {
        (Constant, _) if p == 1 => k + 2,
        // the trailing factor E(v_1(h+1)) = E(v_1) is an interior constant
        // and is absorbed, so each of these is one shorter than the raw count
        (Constant, Nonconstant) => n - 1,
        (Constant, NonzeroConstant) => n - 2,
        (Constant, Zero) => n - 3,
        (Generic, Nonconstant) => n,
        (Generic, NonzeroConstant) if p > 1 => n - 1,
        (Generic, Zero) if p > 1 => n - 2,
        (Shifted, Nonconstant) => n - 1,
        (Shifted, InverseDifference) if p == 2 => k + 1,
        (Shifted, OtherConstant) if p == 2 => k + 2,
        (Shifted, NonzeroConstant) if p > 2 => n - 2,
        (Shifted, Zero) if p > 2 => n - 3,
        _ => return Err(bad()),
    };
    Ok(len)
}
