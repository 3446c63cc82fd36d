//! Exhaustive reference counts from explicit rotation systems.
//!
//! A map on an orientable surface is a pair of permutations of its darts
//! (edge ends): `sigma` cycles the darts around each vertex in rotation
//! order and `alpha` swaps the two darts of each edge.  Faces are the cycles
//! of `sigma . alpha`, so the genus follows from the Euler relation.
//!
//! Fixing one canonical `sigma` per degree sequence and enumerating every
//! perfect matching `alpha` visits each isomorphism class a predictable
//! number of times.  Rooted and unrooted class counts are extracted by
//! canonical relabeling: breadth-first relabeling from a fixed root dart is a
//! complete invariant of a rooted map, and the lexicographic minimum over all
//! roots is a complete invariant of the unrooted map.
//!
//! Everything here is exponential and capped at [`MAX_DARTS`] darts.  It
//! exists to validate the counting formulas on small instances, not to be
//! fast.

use std::collections::{BTreeMap, HashSet};

use num_traits::{One, Zero};

use crate::exactnum::{exact_div, falling, int, ExactInt};
use crate::params;
use crate::{Error, Result};

/// Largest dart total (twice the edge count) an exhaustive sweep accepts.
/// 12 darts means at most 10395 matchings per degree sequence.
pub const MAX_DARTS: usize = 12;

/// Per-genus tallies from one exhaustive sweep over a degree sequence.
#[derive(Debug, Clone)]
pub struct Census {
    pub degrees: Vec<u32>,
    pub darts: usize,
    pub vertices: usize,
    /// Connected rotation systems with the vertex rotation held fixed,
    /// indexed by genus.
    pub systems_by_genus: Vec<u64>,
    /// Rooted isomorphism classes, indexed by genus.
    pub rooted_by_genus: Vec<ExactInt>,
    /// Unrooted isomorphism classes, indexed by genus.
    pub unrooted_by_genus: Vec<ExactInt>,
    /// Matchings whose underlying graph was disconnected.
    pub disconnected: u64,
}

impl Census {
    pub fn edges(&self) -> usize {
        self.darts / 2
    }

    /// Face count forced by the Euler relation at genus `g`.
    pub fn faces(&self, g: u32) -> i64 {
        self.edges() as i64 - self.vertices as i64 + 2 - 2 * i64::from(g)
    }

    pub fn systems(&self, g: u32) -> u64 {
        self.systems_by_genus.get(g as usize).copied().unwrap_or(0)
    }

    pub fn rooted(&self, g: u32) -> ExactInt {
        self.rooted_by_genus
            .get(g as usize)
            .cloned()
            .unwrap_or_else(ExactInt::zero)
    }

    pub fn unrooted(&self, g: u32) -> ExactInt {
        self.unrooted_by_genus
            .get(g as usize)
            .cloned()
            .unwrap_or_else(ExactInt::zero)
    }
}

/// Order of the centralizer of a permutation with the given cycle lengths:
/// `prod_s s^{c_s} c_s!` over the distinct lengths s.
fn centralizer_order(degrees: &[u32]) -> ExactInt {
    let mut mult: BTreeMap<u32, u64> = BTreeMap::new();
    for &d in degrees {
        *mult.entry(d).or_insert(0) += 1;
    }
    let mut z = ExactInt::one();
    for (&s, &c) in &mult {
        z *= int(s as i64).pow(c as u32) * crate::exactnum::factorial(c);
    }
    z
}

/// Canonical vertex rotation: darts numbered consecutively block by block,
/// each block cycled in order.
fn canonical_sigma(degrees: &[u32]) -> Vec<usize> {
    let darts: usize = degrees.iter().map(|&d| d as usize).sum();
    let mut sigma = vec![0usize; darts];
    let mut start = 0;
    for &d in degrees {
        let d = d as usize;
        for i in 0..d {
            sigma[start + i] = start + (i + 1) % d;
        }
        start += d;
    }
    sigma
}

fn enumerate_matchings(alpha: &mut [usize], from: usize, visit: &mut impl FnMut(&[usize])) {
    let n = alpha.len();
    let mut i = from;
    while i < n && alpha[i] != usize::MAX {
        i += 1;
    }
    if i == n {
        visit(alpha);
        return;
    }
    for j in (i + 1)..n {
        if alpha[j] == usize::MAX {
            alpha[i] = j;
            alpha[j] = i;
            enumerate_matchings(alpha, i + 1, visit);
            alpha[i] = usize::MAX;
            alpha[j] = usize::MAX;
        }
    }
}

fn is_connected(sigma: &[usize], alpha: &[usize]) -> bool {
    let n = sigma.len();
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut count = 1;
    while let Some(d) = stack.pop() {
        for nb in [sigma[d], alpha[d]] {
            if !seen[nb] {
                seen[nb] = true;
                count += 1;
                stack.push(nb);
            }
        }
    }
    count == n
}

/// Number of cycles of the permutation `x -> sigma[alpha[x]]`.
fn face_count(sigma: &[usize], alpha: &[usize]) -> usize {
    let n = sigma.len();
    let mut seen = vec![false; n];
    let mut cycles = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut d = start;
        while !seen[d] {
            seen[d] = true;
            d = sigma[alpha[d]];
        }
    }
    cycles
}

/// Breadth-first canonical relabeling from `root`; a complete invariant of
/// the rooted map.  Requires a connected system.
fn encode(sigma: &[usize], alpha: &[usize], root: usize) -> Vec<u8> {
    let n = sigma.len();
    let mut label = vec![u8::MAX; n];
    let mut order = Vec::with_capacity(n);
    label[root] = 0;
    order.push(root);
    let mut i = 0;
    while i < order.len() {
        let d = order[i];
        for nb in [sigma[d], alpha[d]] {
            if label[nb] == u8::MAX {
                label[nb] = order.len() as u8;
                order.push(nb);
            }
        }
        i += 1;
    }
    debug_assert_eq!(order.len(), n);
    let mut enc = Vec::with_capacity(2 * n);
    for &d in &order {
        enc.push(label[sigma[d]]);
    }
    for &d in &order {
        enc.push(label[alpha[d]]);
    }
    enc
}

/// Sweeps every rotation system over the degree sequence and tallies
/// connected maps by genus, both as raw fixed-rotation counts and as rooted
/// and unrooted isomorphism classes.
pub fn census(degrees: &[u32]) -> Result<Census> {
    if degrees.is_empty() || degrees.contains(&0) {
        return Err(Error::InvalidInput(
            "census needs a nonempty list of positive degrees".into(),
        ));
    }
    let darts: usize = degrees.iter().map(|&d| d as usize).sum();
    if !darts.is_multiple_of(2) {
        return Err(Error::InvalidInput(format!(
            "degree total {darts} is odd, no matching exists"
        )));
    }
    if darts > MAX_DARTS {
        return Err(Error::TooLarge(format!(
            "{darts} darts exceeds the exhaustive limit of {MAX_DARTS}"
        )));
    }
    let sigma = canonical_sigma(degrees);
    let vertices = degrees.len();
    let edges = darts / 2;
    let slots = (edges + 1).saturating_sub(vertices) / 2 + 1;

    let mut systems = vec![0u64; slots];
    let mut rooted_sets: Vec<HashSet<Vec<u8>>> = vec![HashSet::new(); slots];
    let mut unrooted_sets: Vec<HashSet<Vec<u8>>> = vec![HashSet::new(); slots];
    let mut disconnected = 0u64;

    let mut alpha = vec![usize::MAX; darts];
    enumerate_matchings(&mut alpha, 0, &mut |alpha| {
        if !is_connected(&sigma, alpha) {
            disconnected += 1;
            return;
        }
        let faces = face_count(&sigma, alpha);
        let chi = vertices as i64 - edges as i64 + faces as i64;
        debug_assert_eq!(chi % 2, 0);
        let g = ((2 - chi) / 2) as usize;
        systems[g] += 1;
        let mut min_enc: Option<Vec<u8>> = None;
        for root in 0..darts {
            let enc = encode(&sigma, alpha, root);
            if min_enc.as_ref().is_none_or(|m| enc < *m) {
                min_enc = Some(enc.clone());
            }
            rooted_sets[g].insert(enc);
        }
        unrooted_sets[g].insert(min_enc.unwrap());
    });

    Ok(Census {
        degrees: degrees.to_vec(),
        darts,
        vertices,
        systems_by_genus: systems,
        rooted_by_genus: rooted_sets.iter().map(|s| int(s.len() as i64)).collect(),
        unrooted_by_genus: unrooted_sets.iter().map(|s| int(s.len() as i64)).collect(),
        disconnected,
    })
}

/// Rooted d-regular maps of genus g on v vertices, by exhaustion.
pub fn rooted(d: u32, v: u64, g: u32) -> Result<ExactInt> {
    if !(u64::from(d) * v).is_multiple_of(2) {
        return Ok(ExactInt::zero());
    }
    if u64::from(d) * v > MAX_DARTS as u64 {
        return Err(Error::TooLarge(format!(
            "{} darts exceeds the exhaustive limit of {MAX_DARTS}",
            u64::from(d) * v
        )));
    }
    Ok(census(&vec![d; v as usize])?.rooted(g))
}

/// Unrooted d-regular maps of genus g on v vertices, by exhaustion.
pub fn unrooted(d: u32, v: u64, g: u32) -> Result<ExactInt> {
    if !(u64::from(d) * v).is_multiple_of(2) {
        return Ok(ExactInt::zero());
    }
    if u64::from(d) * v > MAX_DARTS as u64 {
        return Err(Error::TooLarge(format!(
            "{} darts exceeds the exhaustive limit of {MAX_DARTS}",
            u64::from(d) * v
        )));
    }
    Ok(census(&vec![d; v as usize])?.unrooted(g))
}

/// Rooted one-face d-regular maps of genus g, by exhaustion; zero when the
/// instance is infeasible.
pub fn one_face_rooted(d: u32, g: u32) -> Result<ExactInt> {
    match params::one_face(d, g) {
        Some(p) => rooted(d, p.vertices, g),
        None => Ok(ExactInt::zero()),
    }
}

/// Unrooted one-face d-regular maps of genus g, by exhaustion; zero when the
/// instance is infeasible.
pub fn one_face_unrooted(d: u32, g: u32) -> Result<ExactInt> {
    match params::one_face(d, g) {
        Some(p) => unrooted(d, p.vertices, g),
        None => Ok(ExactInt::zero()),
    }
}

/// Maps of genus g with `n` plain d-regular vertices plus marked vertices,
/// each marked vertex carrying a marked dart: one of degree `root` and one
/// per entry of `rest`.  Marked vertices are pairwise distinguishable.
///
/// Derivation: with the vertex rotation held fixed, each isomorphism class
/// of marked maps is hit `z / (prod_s (c_s - rho_s + 1 .. c_s) * prod marked
/// degrees)` times, where `z` is the centralizer order of the rotation,
/// `c_s` counts vertices of degree s and `rho_s` counts marked ones.
pub fn almost_regular(d: u32, g: u32, n: u64, root: u32, rest: &[u32]) -> Result<ExactInt> {
    let darts =
        u64::from(d) * n + u64::from(root) + rest.iter().map(|&r| u64::from(r)).sum::<u64>();
    if darts == 0 {
        let empty_map = g == 0 && n == 0 && root == 0 && rest.is_empty();
        return Ok(if empty_map { ExactInt::one() } else { ExactInt::zero() });
    }
    if root == 0 || rest.contains(&0) || (n > 0 && d == 0) || !darts.is_multiple_of(2) {
        return Ok(ExactInt::zero());
    }
    if darts > MAX_DARTS as u64 {
        return Err(Error::TooLarge(format!(
            "{darts} darts exceeds the exhaustive limit of {MAX_DARTS}"
        )));
    }

    let mut degrees = vec![root];
    degrees.extend(std::iter::repeat_n(d, n as usize));
    degrees.extend_from_slice(rest);
    let tally = census(&degrees)?;

    let mut mult: BTreeMap<u32, u64> = BTreeMap::new();
    for &deg in &degrees {
        *mult.entry(deg).or_insert(0) += 1;
    }
    let mut marked: BTreeMap<u32, u64> = BTreeMap::new();
    *marked.entry(root).or_insert(0) += 1;
    for &r in rest {
        *marked.entry(r).or_insert(0) += 1;
    }

    let mut weight = ExactInt::one();
    for (&s, &rho) in &marked {
        weight *= falling(mult[&s], rho) * int(s as i64).pow(rho as u32);
    }
    let z = centralizer_order(&degrees);
    Ok(exact_div(int(tally.systems(g) as i64) * weight, &z))
}
