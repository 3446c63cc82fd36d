//! Rooted counting of almost regular maps by root-edge deletion.
//!
//! An almost regular map has every vertex of degree d except a list of
//! distinguished vertices of prescribed degrees, each carrying a marked
//! dart; the first distinguished vertex is the root.  `Q(d; g; n; d1, rest)`
//! counts such maps of genus g with `n` plain vertices.  Deleting the root
//! dart's edge yields a four-way recurrence over strictly smaller maps:
//!
//! * the edge leads to a plain vertex, which merges into the root,
//! * the edge leads to another marked vertex, which merges into the root,
//! * the edge is a loop whose removal lowers the genus and splits the root,
//! * the edge is a loop whose removal disconnects the map.
//!
//! Every step removes one edge, so memoized evaluation terminates.  Rooted
//! d-regular counting is the special case [`rooted_regular`] with a single
//! degree-d root: marking a dart on one vertex of a d-regular map is the
//! same as rooting it.

use std::fmt::Write as _;
use std::path::Path;

use dashmap::DashMap;
use num_traits::{One, Zero};

use crate::exactnum::{binomial, int, ExactInt};
use crate::params;
use crate::{Error, Result};

/// Canonical memo key: `rest` is held sorted, so two argument lists that
/// differ only by the order of the non-root marked degrees share an entry.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlmostRegularKey {
    pub d: u32,
    pub g: u32,
    pub n: u64,
    pub root: u32,
    pub rest: Vec<u32>,
}

/// Shared memo table for [`almost_regular_count`]; safe for concurrent use
/// and persistable to a versioned text file.
#[derive(Debug, Default)]
pub struct Memo {
    map: DashMap<AlmostRegularKey, ExactInt>,
}

const CACHE_HEADER: &str = "regmaps-qcache 1";

impl Memo {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// Reads a memo table previously written by [`Memo::save`].  Loading a
    /// cache can only change speed, never results.
    pub fn load(path: &Path) -> Result<Self> {
        let err = |reason: String| Error::Cache {
            path: path.display().to_string(),
            reason,
        };
        let text = std::fs::read_to_string(path).map_err(|e| err(e.to_string()))?;
        let mut lines = text.lines();
        if lines.next() != Some(CACHE_HEADER) {
            return Err(err(format!("missing header line {CACHE_HEADER:?}")));
        }
        let memo = Memo::new();
        for (idx, line) in lines.enumerate() {
            if line.is_empty() {
                continue;
            }
            let parse = || -> Option<(AlmostRegularKey, ExactInt)> {
                let (key_str, value_str) = line.split_once('=')?;
                let fields: Vec<&str> = key_str.split('|').collect();
                let [d, g, n, root, rest_csv] = fields[..] else {
                    return None;
                };
                let mut rest = Vec::new();
                if !rest_csv.is_empty() {
                    for part in rest_csv.split(',') {
                        rest.push(part.parse().ok()?);
                    }
                }
                if rest.windows(2).any(|w| w[0] > w[1]) {
                    return None;
                }
                let key = AlmostRegularKey {
                    d: d.parse().ok()?,
                    g: g.parse().ok()?,
                    n: n.parse().ok()?,
                    root: root.parse().ok()?,
                    rest,
                };
                let value: ExactInt = value_str.parse().ok()?;
                Some((key, value))
            };
            let (key, value) =
                parse().ok_or_else(|| err(format!("malformed line {}", idx + 2)))?;
            memo.map.insert(key, value);
        }
        Ok(memo)
    }

    /// Writes the table as sorted `d|g|n|root|rest=value` lines under a
    /// version header.
    pub fn save(&self, path: &Path) -> Result<()> {
        let mut lines: Vec<String> = self
            .map
            .iter()
            .map(|entry| {
                let k = entry.key();
                let rest = k
                    .rest
                    .iter()
                    .map(|r| r.to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                format!("{}|{}|{}|{}|{}={}", k.d, k.g, k.n, k.root, rest, entry.value())
            })
            .collect();
        lines.sort_unstable();
        let mut text = String::with_capacity(lines.iter().map(|l| l.len() + 1).sum());
        text.push_str(CACHE_HEADER);
        for line in &lines {
            let _ = write!(text, "\n{line}");
        }
        text.push('\n');
        std::fs::write(path, text).map_err(|e| Error::Cache {
            path: path.display().to_string(),
            reason: e.to_string(),
        })
    }
}

/// `Q(d; g; n; root, rest)`: almost regular maps of genus g with n plain
/// degree-d vertices and marked vertices of the listed degrees.  Total:
/// infeasible arguments (negative g or n, a nonpositive degree) count zero,
/// except the empty map `Q(d; 0; 0; 0)` which counts one.
pub fn almost_regular_count(
    memo: &Memo,
    d: u32,
    g: i64,
    n: i64,
    root: i64,
    rest: &[i64],
) -> ExactInt {
    let mut sorted = rest.to_vec();
    sorted.sort_unstable();
    q(memo, i64::from(d), g, n, root, &sorted)
}

/// Rooted d-regular maps of genus g on v vertices.
pub fn rooted_regular(memo: &Memo, d: u32, g: u32, v: u64) -> ExactInt {
    if params::multi_face(d, g, v).is_none() {
        return ExactInt::zero();
    }
    q(
        memo,
        i64::from(d),
        i64::from(g),
        v as i64 - 1,
        i64::from(d),
        &[],
    )
}

/// Core recurrence; `rest` must be sorted ascending.
fn q(memo: &Memo, d: i64, g: i64, n: i64, root: i64, rest: &[i64]) -> ExactInt {
    debug_assert!(rest.windows(2).all(|w| w[0] <= w[1]));
    if g < 0 || n < 0 {
        return ExactInt::zero();
    }
    if root <= 0 || rest.first().is_some_and(|&x| x <= 0) {
        let empty_map = g == 0 && n == 0 && root == 0 && rest.is_empty();
        return if empty_map { ExactInt::one() } else { ExactInt::zero() };
    }
    // dart parity: a map has an even number of edge ends
    let degree_total: i64 = d * n + root + rest.iter().sum::<i64>();
    if degree_total % 2 != 0 {
        return ExactInt::zero();
    }
    // the Euler relation needs at least one face
    let vertices = n + 1 + rest.len() as i64;
    if 2 - 2 * g + degree_total / 2 - vertices < 1 {
        return ExactInt::zero();
    }

    let key = AlmostRegularKey {
        d: d as u32,
        g: g as u32,
        n: n as u64,
        root: root as u32,
        rest: rest.iter().map(|&x| x as u32).collect(),
    };
    if let Some(hit) = memo.map.get(&key) {
        return hit.clone();
    }

    let mut acc = ExactInt::zero();

    // root edge ends on a plain vertex: absorb it into the root
    acc += q(memo, d, g, n - 1, root + d - 2, rest);

    // root edge ends on another marked vertex: absorb it, keeping its dart
    // marked (a factor of its degree counts the gluing positions)
    let mut i = 0;
    while i < rest.len() {
        let val = rest[i];
        let mut j = i + 1;
        while j < rest.len() && rest[j] == val {
            j += 1;
        }
        let mult = (j - i) as i64;
        let mut sub = rest.to_vec();
        sub.remove(i);
        let inner = q(memo, d, g, n, root + val - 2, &sub);
        if !inner.is_zero() {
            acc += int(mult * val) * inner;
        }
        i = j;
    }

    // root edge is a noncontractible loop: genus drops, root splits into
    // the new root and one extra marked vertex
    if g >= 1 {
        for a in 0..=(root - 2) {
            let sub = insert_sorted(rest, root - 2 - a);
            acc += q(memo, d, g - 1, n, a, &sub);
        }
    }

    // root edge is a separating loop: distribute genus, plain vertices, the
    // split root degree, and the marked vertices over the two sides
    let groups = group_by_value(rest);
    for left_g in 0..=g {
        for left_n in 0..=n {
            for left_root in 0..=(root - 2) {
                split_rest(
                    memo,
                    d,
                    (left_g, g - left_g),
                    (left_n, n - left_n),
                    (left_root, root - 2 - left_root),
                    &groups,
                    0,
                    &mut Vec::new(),
                    &mut Vec::new(),
                    ExactInt::one(),
                    &mut acc,
                );
            }
        }
    }

    memo.map.insert(key, acc.clone());
    acc
}

fn insert_sorted(rest: &[i64], value: i64) -> Vec<i64> {
    let mut out = Vec::with_capacity(rest.len() + 1);
    let pos = rest.partition_point(|&x| x < value);
    out.extend_from_slice(&rest[..pos]);
    out.push(value);
    out.extend_from_slice(&rest[pos..]);
    out
}

fn group_by_value(rest: &[i64]) -> Vec<(i64, i64)> {
    let mut groups: Vec<(i64, i64)> = Vec::new();
    for &v in rest {
        match groups.last_mut() {
            Some((val, mult)) if *val == v => *mult += 1,
            _ => groups.push((v, 1)),
        }
    }
    groups
}

/// Sums over complementary sub-multiset pairs of `rest`, weighting each
/// split by the number of ways to realize it on distinguishable marked
/// vertices.
#[allow(clippy::too_many_arguments)]
fn split_rest(
    memo: &Memo,
    d: i64,
    (g1, g2): (i64, i64),
    (n1, n2): (i64, i64),
    (root1, root2): (i64, i64),
    groups: &[(i64, i64)],
    idx: usize,
    left: &mut Vec<i64>,
    right: &mut Vec<i64>,
    weight: ExactInt,
    acc: &mut ExactInt,
) {
    if idx == groups.len() {
        let first = q(memo, d, g1, n1, root1, left);
        if first.is_zero() {
            return;
        }
        let second = q(memo, d, g2, n2, root2, right);
        if !second.is_zero() {
            *acc += weight * first * second;
        }
        return;
    }
    let (val, mult) = groups[idx];
    let (left_len, right_len) = (left.len(), right.len());
    for chosen in 0..=mult {
        left.truncate(left_len);
        right.truncate(right_len);
        left.extend(std::iter::repeat_n(val, chosen as usize));
        right.extend(std::iter::repeat_n(val, (mult - chosen) as usize));
        let w = weight.clone() * binomial(mult, chosen);
        split_rest(
            memo,
            d,
            (g1, g2),
            (n1, n2),
            (root1, root2),
            groups,
            idx + 1,
            left,
            right,
            w,
            acc,
        );
    }
    left.truncate(left_len);
    right.truncate(right_len);
}
