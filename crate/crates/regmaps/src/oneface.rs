//! Rooted one-face maps whose internal vertices all have one degree.
//!
//! The central count is [`rooted_with_leaves`]: rooted maps with a single
//! face on a genus 𝔤 surface, built from `k` vertices of degree `d` plus
//! pendant (degree 1) vertices.  The pendant count is not free: Euler's
//! relation forces `s = (d - 2) k + 2 - 4 𝔤` of them.  The count factors as
//!
//! ```text
//! 2 ((d-1)k - 2𝔤 + 1)!
//! --------------------  *  sum over (i_1, ..., i_k), i_1 + ... + i_k = 𝔤,
//!    2^{2𝔤} k! s!          of  prod_j  C(d-1, 2 i_j) / (2 i_j + 1)
//! ```
//!
//! where the inner sum distributes the genus over the internal vertices.
//! Leafless maps are the `s = 0` slice: `(d - 2) k = 4 𝔤 - 2`, which is
//! exactly the feasibility condition of [`crate::params::one_face`], so
//! [`rooted`] is a direct specialization.

use num_traits::Zero;

use crate::exactnum::{
    binomial, expect_int, factorial, factorial_opt, int, multinomial, pow_int, pow_rat, rat,
    rat_i, ExactInt, ExactRat,
};
use crate::params;
use crate::{Error, Result};

/// Rooted d-regular one-face maps of genus g.  Zero when no such map exists.
pub fn rooted(d: u32, g: u32) -> Result<ExactInt> {
    if d < 3 {
        return Err(Error::InvalidInput(format!(
            "internal degree must be at least 3, got {d}"
        )));
    }
    match params::one_face(d, g) {
        Some(p) => rooted_with_leaves(d, g, p.vertices),
        None => Ok(ExactInt::zero()),
    }
}

/// Rooted one-face maps of genus `gh` with `k` internal vertices of degree
/// `d` and the forced number of pendant vertices.  Zero when the forced
/// pendant count is negative.
pub fn rooted_with_leaves(d: u32, gh: u32, k: u64) -> Result<ExactInt> {
    if d < 3 {
        return Err(Error::InvalidInput(format!(
            "internal degree must be at least 3, got {d}"
        )));
    }
    let di = i64::from(d);
    let ki = k as i64;
    let ghi = i64::from(gh);
    let s = (di - 2) * ki + 2 - 4 * ghi;
    let a = (di - 1) * ki - 2 * ghi + 1;
    let (a_fact, s_fact) = match (factorial_opt(a), factorial_opt(s)) {
        (Some(x), Some(y)) => (x, y),
        _ => return Ok(ExactInt::zero()),
    };
    let prefactor = ExactRat::new(
        int(2) * a_fact,
        pow_int(4, gh) * factorial(k) * s_fact,
    );
    let value = prefactor * genus_split_sum(d, gh, k);
    expect_int(&value, &format!("one-face count d={d} genus={gh} k={k}"))
}

/// Degree 3 admits a closed product form for [`rooted_with_leaves`]:
/// `2 (2k - 2𝔤 + 1)! / (12^𝔤 𝔤! (k - 𝔤)! (k + 2 - 4𝔤)!)`.
pub fn rooted_with_leaves_cubic(gh: u32, k: u64) -> ExactInt {
    let ki = k as i64;
    let ghi = i64::from(gh);
    let parts = [
        factorial_opt(2 * ki - 2 * ghi + 1),
        factorial_opt(ki - ghi),
        factorial_opt(ki + 2 - 4 * ghi),
    ];
    let [Some(top), Some(f1), Some(f2)] = parts else {
        return ExactInt::zero();
    };
    let num = int(2) * top;
    let den = pow_int(12, gh) * factorial(u64::from(gh)) * f1 * f2;
    let value = ExactRat::new(num, den);
    debug_assert!(value.is_integer());
    value.to_integer()
}

/// Sum over all ways to write `total = i_1 + ... + i_k` (nonnegative parts)
/// of `prod_j C(d-1, 2 i_j) / (2 i_j + 1)`, grouped by the multiset of
/// nonzero parts.
fn genus_split_sum(d: u32, total: u32, k: u64) -> ExactRat {
    let tmax = (i64::from(d) - 1) / 2;
    let mut counts = vec![0i64; tmax as usize];
    let mut acc = rat_i(0);
    split_rec(
        i64::from(d),
        k as i64,
        tmax,
        i64::from(total),
        &mut counts,
        &mut acc,
    );
    acc
}

fn split_rec(d: i64, k: i64, part: i64, remaining: i64, counts: &mut [i64], acc: &mut ExactRat) {
    if part == 0 {
        if remaining == 0 {
            let m = multinomial(k, counts);
            if m.is_zero() {
                return;
            }
            let mut term = rat(m);
            for (i, &a) in counts.iter().enumerate() {
                if a > 0 {
                    let t = (i + 1) as i64;
                    let w = ExactRat::new(binomial(d - 1, 2 * t), int(2 * t + 1));
                    term *= pow_rat(&w, a as i32);
                }
            }
            *acc += term;
        }
        return;
    }
    for a in 0..=(remaining / part) {
        counts[(part - 1) as usize] = a;
        split_rec(d, k, part - 1, remaining - a * part, counts, acc);
    }
    counts[(part - 1) as usize] = 0;
}
