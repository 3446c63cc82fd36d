//! Unrooted d-regular map counts via cyclic quotients.
//!
//! Burnside's lemma turns the orbit count over rootings into an average
//! over periods L dividing the dart count: each admissible orbifold
//! signature of period L contributes its epimorphism count times the
//! number of rooted quotient maps compatible with it.  A quotient of a
//! d-regular map is almost regular: branch points of index i dividing d
//! may sit on vertices (which then have degree d/i), index-2 points may
//! also sit on dangling half-edge ends, and everything else lives on face
//! centers, distributed by a multinomial factor.

use num_traits::Zero;

use crate::exactnum::{
    binomial, expect_int, factorial, multinomial, pow_int, rat, rat_i, ExactInt, ExactRat,
};
use crate::multiface::{almost_regular_count, Memo};
use crate::orbifolds::{epi_count, signatures, OrbifoldSignature};
use crate::{exec, params, Result};

/// Rooted quotient maps with h darts for one orbifold signature: almost
/// regular maps of the quotient genus whose marked vertices and dangling
/// half-edge ends realize the branch points that do not lie on face
/// centers.  Rational because placement weights divide by symmetry
/// factors; the Burnside assembly restores integrality.
pub fn quotient_count(memo: &Memo, d: u32, h: u64, sig: &OrbifoldSignature) -> ExactRat {
    let di = i64::from(d);
    let hi = h as i64;
    let gh = i64::from(sig.quotient_genus);
    let counts = sig.order_counts();

    if sig.branch_orders.is_empty() {
        if hi % di != 0 {
            return ExactRat::zero();
        }
        return rat(almost_regular_count(memo, d, gh, hi / di - 1, di, &[]));
    }

    let order_of = |i: i64| counts.get(&(i as u64)).copied().unwrap_or(0) as i64;
    let r2 = order_of(2);
    let mut acc = ExactRat::zero();

    // all branch points on face centers, except index-2 points allowed on
    // dangling half-edge ends
    if hi % di == 0 {
        for s in 0..=r2 {
            if (hi - s) % 2 != 0 {
                continue;
            }
            let marked: Vec<i64> = vec![1; s as usize];
            let q = almost_regular_count(memo, d, gh, hi / di - 1, di, &marked);
            if q.is_zero() {
                continue;
            }
            let faces = 2 - 2 * gh + (hi - s) / 2 - hi / di;
            let parts: Vec<i64> = counts
                .iter()
                .map(|(&m, &r)| r as i64 - if m == 2 { s } else { 0 })
                .collect();
            let placements = multinomial(faces, &parts);
            if placements.is_zero() {
                continue;
            }
            acc += rat(q * placements) / rat(factorial(s as u64));
        }
    }

    // at least one branch point on a vertex
    let placeable: Vec<(i64, i64)> = counts
        .iter()
        .filter(|&(&m, _)| m >= 2 && u64::from(d) % m == 0)
        .map(|(&m, &r)| (m as i64, r as i64))
        .collect();
    let mut chosen = vec![0i64; placeable.len()];
    distribute(
        memo,
        d,
        hi,
        gh,
        &counts,
        &placeable,
        &mut chosen,
        0,
        &mut acc,
    );
    acc
}

/// Recursively chooses how many branch points of each placeable index sit
/// on vertices, then sums the weighted quotient counts.
#[allow(clippy::too_many_arguments)]
fn distribute(
    memo: &Memo,
    d: u32,
    hi: i64,
    gh: i64,
    counts: &std::collections::BTreeMap<u64, u64>,
    placeable: &[(i64, i64)],
    chosen: &mut Vec<i64>,
    idx: usize,
    acc: &mut ExactRat,
) {
    if idx < placeable.len() {
        for v in 0..=placeable[idx].1 {
            chosen[idx] = v;
            distribute(memo, d, hi, gh, counts, placeable, chosen, idx + 1, acc);
        }
        chosen[idx] = 0;
        return;
    }
    if chosen.iter().all(|&v| v == 0) {
        return;
    }
    let di = i64::from(d);

    // vertices occupied by branch points absorb d/i darts each
    let absorbed: i64 = placeable
        .iter()
        .zip(chosen.iter())
        .map(|(&(i, _), &v)| v * (di / i))
        .sum();
    if hi < absorbed || (hi - absorbed) % di != 0 {
        return;
    }
    let plain = (hi - absorbed) / di;

    let v_of = |index: i64| {
        placeable
            .iter()
            .position(|&(i, _)| i == index)
            .map_or(0, |p| chosen[p])
    };
    let v2 = v_of(2);
    let vd = v_of(di);
    let r2 = counts.get(&2).copied().unwrap_or(0) as i64;
    let total_placed: i64 = chosen.iter().sum();

    for s in 0..=(r2 - v2) {
        if (hi - s) % 2 != 0 {
            continue;
        }
        // root-degree list: d/i per vertex-placed index-i point, degree 1
        // for index-d points and for half-edge ends
        let mut degrees: Vec<i64> = Vec::new();
        for (&(i, _), &v) in placeable.iter().zip(chosen.iter()) {
            if i != di {
                degrees.extend(std::iter::repeat_n(di / i, v as usize));
            }
        }
        degrees.extend(std::iter::repeat_n(1, (s + vd) as usize));
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        let (&first, rest) = degrees.split_first().expect("at least one placement");

        let q = almost_regular_count(memo, d, gh, plain, first, rest);
        if q.is_zero() {
            continue;
        }
        let faces = 2 - 2 * gh + (hi - s) / 2 - plain - total_placed;
        let parts: Vec<i64> = counts
            .iter()
            .map(|(&m, &r)| {
                let placed = v_of(m as i64) + if m == 2 { s } else { 0 };
                r as i64 - placed
            })
            .collect();
        let placements = multinomial(faces, &parts);
        if placements.is_zero() {
            continue;
        }

        let mut denom = rat(factorial((vd + s) as u64));
        for (&(i, _), &v) in placeable.iter().zip(chosen.iter()) {
            if i != di {
                denom *= rat(pow_int(di / i, v as u32) * factorial(v as u64));
            }
        }
        *acc += rat_i(hi) * rat(binomial(s + vd, s)) * rat(q * placements) / denom;
    }
}

/// Unrooted d-regular maps of genus g on v vertices: the exact Burnside
/// average of quotient contributions over all periods dividing the dart
/// count.
pub fn unrooted_regular(memo: &Memo, d: u32, g: u32, v: u64) -> Result<ExactInt> {
    if params::multi_face(d, g, v).is_none() {
        return Ok(ExactInt::zero());
    }
    let darts = u64::from(d) * v;
    let mut jobs: Vec<(u64, OrbifoldSignature)> = Vec::new();
    for period in 1..=darts {
        if !darts.is_multiple_of(period) {
            continue;
        }
        for sig in signatures(g, period) {
            jobs.push((darts / period, sig));
        }
    }
    let terms = exec::map_collect(jobs, |(h, sig)| -> Result<ExactRat> {
        let epi = epi_count(&sig)?;
        if epi.is_zero() {
            return Ok(ExactRat::zero());
        }
        Ok(rat(epi) * quotient_count(memo, d, h, &sig))
    });
    let mut acc = ExactRat::zero();
    for term in terms {
        acc += term?;
    }
    expect_int(
        &(acc / rat_i(darts as i64)),
        &format!("unrooted d-regular count for d={d}, g={g}, v={v}"),
    )
}
