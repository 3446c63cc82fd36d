//! Cyclic symmetry types of surfaces: quotient orbifolds and their weights.
//!
//! An order L symmetry of a closed orientable genus g surface has as
//! quotient an orbifold: a surface of some genus 𝔤 carrying branch points
//! with orders m_1, ..., m_r dividing L.  [`signatures`] lists every
//! quotient type that actually occurs, and [`epi_count`] counts the
//! epimorphisms from the orbifold's fundamental group onto the cyclic group
//! of order L that preserve the branch orders.  Together these drive the
//! symmetry side of unrooted map counting: each unrooted count is an average
//! of per-symmetry-type tallies weighted by epimorphism counts.
//!
//! Admissibility combines the Riemann-Hurwitz degree count with arithmetic
//! conditions on the branch orders (their lcm must survive dropping any one
//! point, must equal L on a quotient sphere, and must satisfy a parity
//! condition at the prime 2), plus the classical classifications of finite
//! rotation groups of the sphere and the torus.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::exactnum::{
    euler_phi, expect_int, int, jordan_totient, lcm_all, mobius, rat_i, ExactInt, ExactRat,
};
use crate::Result;

/// Quotient type of one cyclic symmetry: the covered surface's genus, the
/// quotient genus, the symmetry order, and the branch orders.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrbifoldSignature {
    pub surface_genus: u32,
    pub quotient_genus: u32,
    pub period: u64,
    /// Branch point orders, each at least 2 and dividing `period`, sorted.
    pub branch_orders: Vec<u64>,
}

impl fmt::Display for OrbifoldSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}", self.quotient_genus)?;
        for (i, m) in self.branch_orders.iter().enumerate() {
            write!(f, "{} {m}", if i == 0 { ";" } else { "," })?;
        }
        write!(f, ")")
    }
}

impl OrbifoldSignature {
    /// Branch orders grouped as order -> multiplicity.
    pub fn order_counts(&self) -> BTreeMap<u64, u64> {
        let mut counts = BTreeMap::new();
        for &m in &self.branch_orders {
            *counts.entry(m).or_insert(0) += 1;
        }
        counts
    }

    /// Whether a symmetry of this quotient type exists on the surface.
    pub fn is_admissible(&self) -> bool {
        let l = self.period;
        let g = i64::from(self.surface_genus);
        let gh = i64::from(self.quotient_genus);
        if l == 0 || self.branch_orders.iter().any(|&m| m < 2 || !l.is_multiple_of(m)) {
            return false;
        }
        if l == 1 {
            return gh == g && self.branch_orders.is_empty();
        }

        // Riemann-Hurwitz: branch deficiencies account for the genus drop.
        let deficiency: i64 = self
            .branch_orders
            .iter()
            .map(|&m| (l - l / m) as i64)
            .sum();
        if deficiency != (l as i64) * (2 - 2 * gh) + 2 * g - 2 {
            return false;
        }

        let m = lcm_all(&self.branch_orders);
        if gh == 0 && m != l {
            return false;
        }
        // dropping any one branch point must not lower the lcm (this also
        // rules out a lone branch point)
        for i in 0..self.branch_orders.len() {
            let mut rest = self.branch_orders.clone();
            rest.remove(i);
            if lcm_all(&rest) != m {
                return false;
            }
        }
        // at the prime 2: branch points of maximal 2-adic order pair up
        if m.is_multiple_of(2) {
            let two_part = 1u64 << m.trailing_zeros();
            let maximal = self
                .branch_orders
                .iter()
                .filter(|&&mi| mi % two_part == 0)
                .count();
            if maximal % 2 != 0 {
                return false;
            }
        }
        // sphere and torus symmetries are classical: a sphere rotation has
        // exactly two poles; a torus symmetry is free or has 3 or 4 branch
        // points
        let r = self.branch_orders.len();
        match self.surface_genus {
            0 => r == 2,
            1 => matches!(r, 0 | 3 | 4),
            _ => true,
        }
    }
}

/// All quotient types of order `period` symmetries of the closed orientable
/// genus `g` surface, sorted.  Empty when no such symmetry exists.
pub fn signatures(g: u32, period: u64) -> Vec<OrbifoldSignature> {
    assert!(period >= 1, "period must be positive");
    // no symmetry order beyond 4g + 2 exists for g >= 2
    if g >= 2 && period > 4 * u64::from(g) + 2 {
        return Vec::new();
    }
    let divisors: Vec<u64> = (2..=period).rev().filter(|d| period.is_multiple_of(*d)).collect();
    let mut out = Vec::new();
    let mut gh = 0u32;
    loop {
        let deficiency =
            2 * i64::from(g) - 2 - (period as i64) * (2 * i64::from(gh) - 2);
        if deficiency < 0 {
            break;
        }
        let mut current = Vec::new();
        collect_branch_multisets(period, &divisors, 0, deficiency, &mut current, &mut |orders| {
            let mut branch_orders = orders.to_vec();
            branch_orders.sort_unstable();
            let sig = OrbifoldSignature {
                surface_genus: g,
                quotient_genus: gh,
                period,
                branch_orders,
            };
            if sig.is_admissible() {
                out.push(sig);
            }
        });
        gh += 1;
    }
    out.sort();
    out
}

fn collect_branch_multisets(
    period: u64,
    divisors: &[u64],
    idx: usize,
    remaining: i64,
    current: &mut Vec<u64>,
    emit: &mut impl FnMut(&[u64]),
) {
    if idx == divisors.len() {
        if remaining == 0 {
            emit(current);
        }
        return;
    }
    let weight = (period - period / divisors[idx]) as i64;
    let before = current.len();
    let mut used = 0;
    while used * weight <= remaining {
        collect_branch_multisets(period, divisors, idx + 1, remaining - used * weight, current, emit);
        current.push(divisors[idx]);
        used += 1;
    }
    current.truncate(before);
}

/// Ramanujan-style character weight of one branch point: summing it over a
/// full period isolates the elements of exact order `mi`.
fn branch_factor(k: u64, mi: u64) -> ExactRat {
    let n = mi / crate::exactnum::gcd(k, mi);
    ExactRat::new(
        int(euler_phi(mi) as i64) * int(mobius(n)),
        int(euler_phi(n) as i64),
    )
}

/// Number of ways to assign to each branch order an element of that exact
/// order in the cyclic group of order `m`, with all assignments summing to
/// zero.  Zero signals an impossible local system.
pub fn branch_sum(m: u64, orders: &[u64]) -> Result<ExactInt> {
    assert!(m >= 1);
    let mut total = rat_i(0);
    for k in 1..=m {
        let mut term = rat_i(1);
        for &mi in orders {
            term *= branch_factor(k, mi);
            if term.is_zero() {
                break;
            }
        }
        total += term;
    }
    total /= rat_i(m as i64);
    expect_int(&total, &format!("branch sum m={m} orders={orders:?}"))
}

/// Number of order-preserving epimorphisms from the orbifold fundamental
/// group onto the cyclic group of order `period`.
///
/// The branch images are constrained to the subgroup of order
/// `m = lcm(branch orders)` and counted by [`branch_sum`]; the surface
/// generators then have to fill in the rest, giving a factor
/// `m^{2𝔤} J_{2𝔤}(period / m)` with `J` the Jordan totient.  The count is
/// positive exactly on admissible signatures with a correct period, so it
/// doubles as an arithmetic cross-check of [`signatures`].
pub fn epi_count(sig: &OrbifoldSignature) -> Result<ExactInt> {
    let m = lcm_all(&sig.branch_orders);
    debug_assert_eq!(sig.period % m, 0);
    let e = branch_sum(m, &sig.branch_orders)?;
    let free_part = int(m as i64).pow(2 * sig.quotient_genus)
        * jordan_totient(2 * sig.quotient_genus, sig.period / m);
    Ok(free_part * e)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(g: u32, gh: u32, l: u64, orders: &[u64]) -> OrbifoldSignature {
        OrbifoldSignature {
            surface_genus: g,
            quotient_genus: gh,
            period: l,
            branch_orders: orders.to_vec(),
        }
    }

    #[test]
    fn identity_symmetry_for_every_genus() {
        for g in 0..=6 {
            assert_eq!(signatures(g, 1), vec![sig(g, g, 1, &[])]);
            assert_eq!(epi_count(&sig(g, g, 1, &[])).unwrap(), int(1));
        }
    }

    #[test]
    fn sphere_symmetries_are_rotations() {
        for l in 2..=10 {
            assert_eq!(signatures(0, l), vec![sig(0, 0, l, &[l, l])]);
        }
    }

    #[test]
    fn torus_symmetries_match_the_lattice_classification() {
        for l in 2..=12u64 {
            let mut expected = vec![sig(1, 1, l, &[])];
            match l {
                2 => expected.push(sig(1, 0, 2, &[2, 2, 2, 2])),
                3 => expected.push(sig(1, 0, 3, &[3, 3, 3])),
                4 => expected.push(sig(1, 0, 4, &[2, 4, 4])),
                6 => expected.push(sig(1, 0, 6, &[2, 3, 6])),
                _ => {}
            }
            expected.sort();
            assert_eq!(signatures(1, l), expected, "period {l}");
        }
    }

    #[test]
    fn genus_two_symmetries_match_the_known_classification() {
        let cases: Vec<(u64, Vec<OrbifoldSignature>)> = vec![
            (2, vec![sig(2, 0, 2, &[2; 6]), sig(2, 1, 2, &[2, 2])]),
            (3, vec![sig(2, 0, 3, &[3, 3, 3, 3])]),
            (4, vec![sig(2, 0, 4, &[2, 2, 4, 4])]),
            (5, vec![sig(2, 0, 5, &[5, 5, 5])]),
            (6, vec![sig(2, 0, 6, &[2, 2, 3, 3]), sig(2, 0, 6, &[3, 6, 6])]),
            (7, vec![]),
            (8, vec![sig(2, 0, 8, &[2, 8, 8])]),
            (9, vec![]),
            (10, vec![sig(2, 0, 10, &[2, 5, 10])]),
            (11, vec![]),
            (12, vec![]),
        ];
        for (l, mut expected) in cases {
            expected.sort();
            assert_eq!(signatures(2, l), expected, "period {l}");
        }
    }

    #[test]
    fn admissibility_rejects_perturbations() {
        let good = sig(2, 0, 10, &[2, 5, 10]);
        assert!(good.is_admissible());
        assert!(!sig(2, 0, 10, &[2, 5, 5]).is_admissible());
        assert!(!sig(2, 0, 10, &[2, 10]).is_admissible());
        assert!(!sig(2, 1, 10, &[2, 5, 10]).is_admissible());
        assert!(!sig(3, 0, 10, &[2, 5, 10]).is_admissible());
        assert!(!sig(2, 0, 20, &[2, 5, 10]).is_admissible());
        // lone branch points never occur
        assert!(!sig(1, 1, 2, &[2]).is_admissible());
        // the 2-adic pairing condition: an odd number of branch points of
        // maximal 2-adic order, with every other condition satisfied
        let odd_pairing = sig(4, 1, 4, &[2, 2, 2]);
        assert!(!odd_pairing.is_admissible());
        assert_eq!(epi_count(&odd_pairing).unwrap(), int(0));
        let even_pairing = sig(3, 1, 2, &[2, 2, 2, 2]);
        assert!(even_pairing.is_admissible());
    }

    #[test]
    fn epi_counts_on_small_signatures() {
        assert_eq!(epi_count(&sig(1, 1, 2, &[])).unwrap(), int(3));
        assert_eq!(epi_count(&sig(1, 1, 6, &[])).unwrap(), int(24));
        assert_eq!(epi_count(&sig(1, 0, 2, &[2, 2, 2, 2])).unwrap(), int(1));
        assert_eq!(epi_count(&sig(1, 0, 3, &[3, 3, 3])).unwrap(), int(2));
        assert_eq!(epi_count(&sig(1, 0, 4, &[2, 4, 4])).unwrap(), int(2));
        assert_eq!(epi_count(&sig(1, 0, 6, &[2, 3, 6])).unwrap(), int(2));
        assert_eq!(epi_count(&sig(2, 0, 6, &[2, 2, 3, 3])).unwrap(), int(2));
        for l in 2..=12 {
            assert_eq!(
                epi_count(&sig(0, 0, l, &[l, l])).unwrap(),
                int(euler_phi(l) as i64),
                "period {l}"
            );
        }
    }

    #[test]
    fn branch_sum_parity_vanishing() {
        assert_eq!(branch_sum(6, &[2, 3, 6]).unwrap(), int(2));
        assert_eq!(branch_sum(6, &[2, 3, 3, 6]).unwrap(), int(2));
        assert_eq!(branch_sum(6, &[2, 2, 3, 6]).unwrap(), int(0));
        assert_eq!(branch_sum(6, &[2, 3, 6, 6]).unwrap(), int(0));
        assert_eq!(branch_sum(1, &[]).unwrap(), int(1));
    }

    #[test]
    fn branch_sum_counts_zero_sum_tuples_directly() {
        // reference count over explicit tuples of elements of exact order
        fn direct(m: u64, orders: &[u64]) -> i64 {
            fn order_in(m: u64, x: u64) -> u64 {
                m / crate::exactnum::gcd(x, m)
            }
            fn rec(m: u64, orders: &[u64], sum: u64) -> i64 {
                match orders.split_first() {
                    None => i64::from(sum == 0),
                    Some((&mi, rest)) => (0..m)
                        .filter(|&x| order_in(m, x) == mi)
                        .map(|x| rec(m, rest, (sum + x) % m))
                        .sum(),
                }
            }
            rec(m, orders, 0)
        }
        let cases: &[(u64, &[u64])] = &[
            (2, &[2, 2]),
            (4, &[2, 4, 4]),
            (4, &[4, 4]),
            (6, &[2, 3, 6]),
            (6, &[6, 6]),
            (6, &[2, 2, 3, 3]),
            (8, &[2, 8, 8]),
            (10, &[2, 5, 10]),
            (12, &[2, 3, 12, 12]),
            (12, &[12, 12]),
            (9, &[3, 9, 9]),
        ];
        for &(m, orders) in cases {
            assert_eq!(
                branch_sum(m, orders).unwrap(),
                int(direct(m, orders)),
                "m={m} orders={orders:?}"
            );
        }
    }

    #[test]
    fn admissible_signatures_have_positive_epi_counts() {
        for g in 0..=5u32 {
            let lmax = if g >= 2 { 4 * u64::from(g) + 2 } else { 12 };
            for l in 1..=lmax {
                for s in signatures(g, l) {
                    let e = epi_count(&s).unwrap();
                    assert!(e > int(0), "expected a realizable symmetry: {s} period {l}");
                }
            }
        }
    }

    #[test]
    fn signatures_are_sorted_and_distinct() {
        for g in 0..=5u32 {
            for l in 1..=14 {
                let sigs = signatures(g, l);
                let mut sorted = sigs.clone();
                sorted.sort();
                sorted.dedup();
                assert_eq!(sigs, sorted);
            }
        }
    }
}
