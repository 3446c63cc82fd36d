//! Unrooted one-face d-regular map counts.
//!
//! A one-face map has a single face, so an orientation-preserving
//! automorphism is a rotation about that face's center and the symmetry
//! group is cyclic of an order dividing 2d.  For prime d this leaves the
//! periods 1, 2, d and 2d; [`unrooted_one_face_prime`] assembles their
//! quotient contributions [`f2`], [`fd`] and [`f2d`] into the Burnside
//! average over the 2n darts.  For d = 3 and d = 4 closed four-term forms
//! of the same average exist and are implemented directly.
//!
//! All genus/vertex-count loops iterate over a region slightly wider than
//! the exact support and rely on zero terms (negative factorial arguments,
//! parity misses) to drop out, so a boundary off-by-one cannot silently
//! lose a contribution.

use num_traits::Zero;

use crate::exactnum::{
    binomial, expect_int, factorial, factorial_opt, int, is_prime, pow_int, pow_rat, rat, rat_i,
    ExactInt, ExactRat,
};
use crate::{oneface, params, Error, Result};

fn sign(n: i64) -> i64 {
    if n.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

fn fact_rat(n: i64) -> Option<ExactRat> {
    factorial_opt(n).map(rat)
}

/// Leaf-count value as a rational term factor; zero for infeasible
/// parameters.
fn eps(d: u32, gh: u32, k: i64) -> ExactRat {
    if k < 0 {
        return ExactRat::zero();
    }
    let value = oneface::rooted_with_leaves(d, gh, k as u64)
        .expect("leaf-count formula yields an integer");
    rat(value)
}

/// Period-2 contribution to the Burnside sum for one-face d-regular maps of
/// genus g: quotients are genus-𝔤 maps with k = (2g−1)/(d−2) degree-d
/// vertices and 2g−4𝔤+1 leaves.  Zero whenever k is not an integer.
pub fn f2(d: u32, g: u32) -> ExactRat {
    if d < 3 || g == 0 {
        return ExactRat::zero();
    }
    let (di, gi) = (i64::from(d), i64::from(g));
    let num = 2 * gi - 1;
    if num % (di - 2) != 0 {
        return ExactRat::zero();
    }
    let k = num / (di - 2);
    let mut sum = ExactRat::zero();
    for gh in 0..=g {
        let e = eps(d, gh, k);
        if e.is_zero() {
            continue;
        }
        let leaves = 2 * gi - 4 * i64::from(gh) + 1;
        let two_n = di * k + leaves;
        sum += rat(pow_int(4, gh)) / rat_i(two_n) * e;
    }
    rat_i(di * k) * sum
}

/// Period-d contribution: quotients have r_d = 2(g−1+d−d𝔤)/(d−1) branch
/// points of index d (one of them the face center), and the epimorphism
/// factor d^{2𝔤−1}[(d−1)(−1)^{r_d} + (d−1)^{r_d}].
pub fn fd(d: u32, g: u32) -> ExactRat {
    if d < 3 || g == 0 {
        return ExactRat::zero();
    }
    let (di, gi) = (i64::from(d), i64::from(g));
    let mut total = ExactRat::zero();
    for gh in 0..=g {
        let rnum = 2 * (gi - 1 + di - di * i64::from(gh));
        if rnum < di - 1 {
            break;
        }
        if rnum % (di - 1) != 0 {
            continue;
        }
        let r = rnum / (di - 1);
        let knum = (4 * gi - 2) - (r - 1) * (di - 2);
        if knum < 0 || knum % (di * (di - 2)) != 0 {
            continue;
        }
        let k = knum / (di * (di - 2));
        let e = eps(d, gh, k);
        if e.is_zero() {
            continue;
        }
        let bracket = int(di - 1) * int(sign(r)) + pow_int(di - 1, r as u32);
        total += pow_rat(&rat_i(di), 2 * gh as i32 - 1) * rat(bracket) * e;
    }
    total
}

/// Period-2d contribution: quotients carry r_d index-d points, an odd
/// number r₂ of index-2 points and one index-2d point (the face center),
/// with the choose-factor C(r₂+r_d, r₂) distributing them along the
/// boundary.
pub fn f2d(d: u32, g: u32) -> ExactRat {
    if d < 3 || g == 0 {
        return ExactRat::zero();
    }
    let (di, gi) = (i64::from(d), i64::from(g));
    if (2 * gi - 1) % (di - 2) != 0 {
        return ExactRat::zero();
    }
    let half = (2 * gi - 1) / (di - 2);
    let mut total = ExactRat::zero();
    for k in 0..=((half - 1) / di).max(0) {
        let r = half - di * k;
        if r < 1 {
            break;
        }
        for gh in 0..=g {
            let r2num = 2 * gi + 2 * di - 1 - 4 * i64::from(gh) * di - 2 * (di - 1) * r;
            if r2num < di {
                break;
            }
            if r2num % di != 0 {
                continue;
            }
            let r2 = r2num / di;
            if r2 % 2 == 0 {
                continue;
            }
            let e = eps(d, gh, k);
            if e.is_zero() {
                continue;
            }
            let bracket = pow_int(di - 1, r as u32) - int(sign(r));
            let two_n = half + r2;
            total += pow_rat(&rat_i(2 * di), 2 * gh as i32 - 1)
                * rat_i(di - 1)
                * rat(bracket)
                * rat(binomial(r2 + r, r2))
                * e
                / rat_i(two_n);
        }
    }
    rat_i(2 * half) * total
}

/// Unrooted one-face d-regular maps of genus g for prime d, as the exact
/// Burnside average (rooted + f₂ + f_d + f_{2d}) / (2n).
pub fn unrooted_one_face_prime(d: u32, g: u32) -> Result<ExactInt> {
    if d < 3 {
        return Err(Error::InvalidInput(format!(
            "one-face maps need degree at least 3, got {d}"
        )));
    }
    if !is_prime(u64::from(d)) {
        return Err(Error::UnsupportedDegree(d));
    }
    let Some(p) = params::one_face(d, g) else {
        return Ok(ExactInt::zero());
    };
    let two_n = 2 * p.edges as i64;
    let acc = rat(oneface::rooted(d, g)?) + f2(d, g) + fd(d, g) + f2d(d, g);
    expect_int(
        &(acc / rat_i(two_n)),
        &format!("unrooted one-face count for d={d}, g={g}"),
    )
}

/// Closed four-term form of the unrooted one-face count for d = 3.
pub fn unrooted_one_face_closed3(g: u32) -> ExactInt {
    let gi = i64::from(g);
    let mut total = ExactRat::zero();

    if let Some(t) = (|| {
        Some(fact_rat(6 * gi - 4)? / (rat(pow_int(12, g)) * fact_rat(gi)? * fact_rat(3 * gi - 2)?))
    })() {
        total += t;
    }

    for gh in 0..=gi {
        let term = (|| {
            Some(
                fact_rat(4 * gi - 2 - 2 * gh)?
                    / (rat_i(2)
                        * rat(pow_int(3, gh as u32))
                        * fact_rat(gh)?
                        * fact_rat(2 * gi - 1 - gh)?
                        * fact_rat(2 * gi - 4 * gh + 1)?),
            )
        })();
        if let Some(t) = term {
            total += t;
        }
    }

    if let Some(prefix) = fact_rat(2 * gi - 2).and_then(|f| Some(f / (rat_i(6) * fact_rat(gi - 1)?))) {
        let mut inner = ExactRat::zero();
        for gh in 0..=gi {
            let term = (|| {
                let tail = fact_rat(gh)? * fact_rat(gi + 1 - 3 * gh)?;
                let bracket = pow_int(2, (gi + 1 - 3 * gh) as u32) + int(sign(gi - gh));
                Some(pow_rat(&(rat_i(3) / rat_i(4)), gh as i32 - 1) * rat(bracket) / tail)
            })();
            if let Some(t) = term {
                inner += t;
            }
        }
        total += prefix * inner;
    }

    for k in 0..=gi {
        for gh in 0..=k {
            let term = (|| {
                let last = fact_rat(2 * gi - 1 - 3 * k)?;
                let bracket = pow_int(2, (2 * gi - 1 - 3 * k) as u32) + int(sign(k));
                Some(
                    pow_rat(&rat_i(3), gh as i32 - 2) * rat(bracket) * fact_rat(2 * k - 2 * gh)?
                        / (fact_rat(gh)?
                            * fact_rat(k - gh)?
                            * fact_rat(4 * k + 3 - 2 * gi - 4 * gh)?
                            * last),
                )
            })();
            if let Some(t) = term {
                total += t;
            }
        }
    }

    expect_int(&total, &format!("closed unrooted one-face count for d=3, g={g}"))
        .expect("closed four-term form sums to an integer")
}

/// Closed four-term form of the unrooted one-face count for d = 4, the one
/// composite degree with one-face maps in every genus.
pub fn unrooted_one_face_closed4(g: u32) -> ExactInt {
    let gi = i64::from(g);
    let mut total = ExactRat::zero();

    if let Some(f) = fact_rat(4 * gi - 3) {
        if let Some(t) =
            (|| Some(f / (rat(pow_int(4, g)) * fact_rat(gi)? * fact_rat(gi - 1)?)))()
        {
            total += t;
        }
    }

    if let Some(t) = (|| {
        Some(
            rat_i(3) * fact_rat(4 * gi - 3)?
                / (rat_i(2) * fact_rat(2 * gi + 1)? * fact_rat(2 * gi - 2)?),
        )
    })() {
        total += t;
    }

    for gh in 1..=gi {
        for k in 0..=gi {
            let term = (|| {
                Some(
                    fact_rat(2 * gi - 2 * gh + k - 1)?
                        / (rat_i(2)
                            * fact_rat(2 * k - 4 * gh + 2)?
                            * fact_rat(gh)?
                            * fact_rat(k - gh)?
                            * fact_rat(2 * gi - 1 - 2 * k)?),
                )
            })();
            if let Some(t) = term {
                total += t;
            }
        }
    }

    for gh in 0..=gi {
        for r4 in (2..=(gi + 3)).step_by(2) {
            for k in 0..=gi {
                let term = (|| {
                    Some(
                        pow_rat(&rat_i(2), (2 * gh - 3 + r4) as i32)
                            * fact_rat(k - 2 * gh + gi - r4 / 2)?
                            / (fact_rat(gh)?
                                * fact_rat(k - gh)?
                                * fact_rat(gi - r4 / 2 - 2 * k)?
                                * fact_rat(2 * k + 3 - 4 * gh - r4)?
                                * fact_rat(r4 - 1)?),
                    )
                })();
                if let Some(t) = term {
                    total += t;
                }
            }
        }
    }

    expect_int(&total, &format!("closed unrooted one-face count for d=4, g={g}"))
        .expect("closed four-term form sums to an integer")
}

/// Unrooted one-face d-regular maps of genus g.  Degree 4 uses the closed
/// form; odd prime degrees use the Burnside assembly.  Other composite
/// degrees with feasible parameters have no supported formula.
pub fn unrooted(d: u32, g: u32) -> Result<ExactInt> {
    if d < 3 {
        return Err(Error::InvalidInput(format!(
            "one-face maps need degree at least 3, got {d}"
        )));
    }
    if params::one_face(d, g).is_none() {
        return Ok(ExactInt::zero());
    }
    if d == 4 {
        return Ok(unrooted_one_face_closed4(g));
    }
    if is_prime(u64::from(d)) {
        return unrooted_one_face_prime(d, g);
    }
    Err(Error::UnsupportedDegree(d))
}

/// Closed d=3 display of [`f2`], kept as an independent cross-check.
pub fn f2_cubic(g: u32) -> ExactRat {
    let gi = i64::from(g);
    if g == 0 {
        return ExactRat::zero();
    }
    let mut sum = ExactRat::zero();
    for gh in 0..=gi {
        let term = (|| {
            Some(
                fact_rat(4 * gi - 2 - 2 * gh)?
                    / (pow_rat(&rat_i(3), gh as i32 - 1)
                        * fact_rat(gh)?
                        * fact_rat(2 * gi - 1 - gh)?
                        * fact_rat(2 * gi - 4 * gh + 1)?),
            )
        })();
        if let Some(t) = term {
            sum += t;
        }
    }
    rat_i(2 * gi - 1) * sum
}

/// Closed d=3 display of [`fd`].
pub fn f3_cubic(g: u32) -> ExactRat {
    let gi = i64::from(g);
    if g == 0 {
        return ExactRat::zero();
    }
    let mut sum = ExactRat::zero();
    for gh in 0..=gi {
        let term = (|| {
            let tail = fact_rat(gh)? * fact_rat(gi + 1 - 3 * gh)?;
            let bracket = pow_int(2, (gi + 1 - 3 * gh) as u32) + int(sign(gi + 2 - 3 * gh));
            Some(pow_rat(&(rat_i(3) / rat_i(4)), gh as i32 - 1) * rat(bracket) / tail)
        })();
        if let Some(t) = term {
            sum += t;
        }
    }
    rat(factorial(u64::from(2 * g - 1))) / rat(factorial(u64::from(g - 1))) * sum
}

/// Closed d=3 display of [`f2d`].
pub fn f6_cubic(g: u32) -> ExactRat {
    let gi = i64::from(g);
    if g == 0 {
        return ExactRat::zero();
    }
    let mut sum = ExactRat::zero();
    for k in 0..=gi {
        for gh in 0..=k {
            let term = (|| {
                let e = 2 * gi - 1 - 3 * k;
                let last = fact_rat(e)?;
                let bracket = pow_int(2, e as u32) - int(sign(e));
                Some(
                    pow_rat(&rat_i(3), gh as i32 - 1) * rat(bracket) * fact_rat(2 * k - 2 * gh)?
                        / (fact_rat(gh)?
                            * fact_rat(k - gh)?
                            * fact_rat(4 * k + 3 - 2 * gi - 4 * gh)?
                            * last),
                )
            })();
            if let Some(t) = term {
                sum += t;
            }
        }
    }
    rat_i(2 * (2 * gi - 1)) * sum
}
