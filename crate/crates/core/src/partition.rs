//! Strict partitions and their shifted Young diagrams.
//!
//! A strict partition has strictly decreasing positive parts. Its shifted
//! diagram places row `i` (1-based) in columns `i + 1 ..= i + part(i)`, so the
//! leftmost box of every row has content `col - row = 1` and the contents of
//! row `i` read `1, 2, ..., part(i)`.
//!
//! Key items:
//! - [`StrictPartition`]: validated parts, parsing/printing, box traversal.
//! - [`ShiftedBox`]: one diagram cell with its content and hook length.
//! - [`SkewShape`]: a containment-checked pair `outer/inner`.
//! - [`strict_partitions`], [`extensions`], [`subpartitions`]: enumeration,
//!   always in lexicographically descending order.

use std::fmt;
use std::str::FromStr;

use num::{BigUint, Zero};
use thiserror::Error;

use crate::rational::{binomial, choose_two};

/// Ways a partition can fail validation or parsing.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum PartitionError {
    #[error("parts must be positive and strictly decreasing, got {0:?}")]
    NotStrict(Vec<u32>),
    #[error("parts must be positive, got {0:?}")]
    ZeroPart(Vec<u32>),
    #[error("cannot parse part {0:?}")]
    Parse(String),
    #[error("inner shape {inner} is not contained in outer shape {outer}")]
    NotContained { outer: String, inner: String },
}

/// A partition with strictly decreasing positive parts.
///
/// The empty partition is allowed and prints as `-`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StrictPartition {
    parts: Vec<u32>,
}

impl StrictPartition {
    /// Validates that `parts` are positive and strictly decreasing.
    pub fn new(parts: Vec<u32>) -> Result<Self, PartitionError> {
        if parts.windows(2).any(|w| w[0] <= w[1]) || parts.last() == Some(&0) {
            return Err(PartitionError::NotStrict(parts));
        }
        Ok(StrictPartition { parts })
    }

    /// The empty partition.
    pub fn empty() -> Self {
        StrictPartition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The `i`-th part, 1-based; zero beyond the last row.
    pub fn part(&self, i: usize) -> u32 {
        if i >= 1 {
            self.parts.get(i - 1).copied().unwrap_or(0)
        } else {
            0
        }
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of boxes, `part(1) + part(2) + ...`.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    /// Row-wise containment: `other` fits inside `self`.
    pub fn contains(&self, other: &StrictPartition) -> bool {
        other.len() <= self.len()
            && other
                .parts
                .iter()
                .zip(&self.parts)
                .all(|(&small, &large)| small <= large)
    }

    /// All boxes of the shifted diagram in row-major order.
    ///
    /// Each box carries its content and hook length. The shifted hook of the
    /// box in row `i`, column `j` counts the arm (boxes to its right in row
    /// `i`), the leg (boxes below it in column `j`), the box itself, plus the
    /// `part(j)` boxes of row `j` — the broken-hook contribution that makes
    /// the product formula for shifted diagrams work.
    pub fn boxes(&self) -> Vec<ShiftedBox> {
        let length = self.len();
        let mut out = Vec::with_capacity(self.size() as usize);
        for (row0, &part) in self.parts.iter().enumerate() {
            let row = row0 + 1;
            for content in 1..=part {
                let col = row + content as usize;
                let arm = u64::from(part) - u64::from(content);
                let leg = (row + 1..=length)
                    .filter(|&r| r < col && r + self.part(r) as usize >= col)
                    .count() as u64;
                let mirror = u64::from(self.part(col));
                out.push(ShiftedBox {
                    row: row as u32,
                    col: col as u32,
                    content,
                    hook: arm + leg + 1 + mirror,
                });
            }
        }
        out
    }

    /// Product of all hook lengths of the shifted diagram; one for the empty
    /// partition.
    pub fn hook_product(&self) -> BigUint {
        self.boxes().iter().map(|b| BigUint::from(b.hook)).product()
    }

    /// All strict partitions obtained by removing one box, in descending
    /// lexicographic order.
    ///
    /// A box is removable from row `r` when shortening that row keeps the
    /// parts strictly decreasing: always from the last row, and from row
    /// `r < len` exactly when `part(r) - 1 > part(r + 1)`.
    pub fn one_box_removals(&self) -> Vec<StrictPartition> {
        let mut out = Vec::new();
        for r in 1..=self.len() {
            let removable = r == self.len() || self.part(r) - 1 > self.part(r + 1);
            if removable {
                let mut parts = self.parts.clone();
                parts[r - 1] -= 1;
                if parts[r - 1] == 0 {
                    parts.pop();
                }
                out.push(StrictPartition { parts });
            }
        }
        out
    }

    /// `sum over boxes of C(content, 2)^exponent`, exact.
    ///
    /// With exponent zero every box contributes one (here `0^0 = 1`), so the
    /// result is the number of boxes.
    pub fn content_power_sum(&self, exponent: u32) -> BigUint {
        let mut total = BigUint::zero();
        for &part in &self.parts {
            for content in 1..=u64::from(part) {
                total += BigUint::from(choose_two(content)).pow(exponent);
            }
        }
        total
    }

    /// `sum over boxes of C(content + k - 1, 2k)`, exact.
    ///
    /// For `k = 0` this is the number of boxes.
    pub fn content_binomial_sum(&self, k: u32) -> BigUint {
        let k = u64::from(k);
        let mut total = BigUint::zero();
        for &part in &self.parts {
            for content in 1..=u64::from(part) {
                total += binomial(content + k - 1, 2 * k);
            }
        }
        total
    }
}

impl fmt::Display for StrictPartition {
    /// Comma-separated parts, `-` for the empty partition: `7,5,4,1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        let mut first = true;
        for part in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{part}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "StrictPartition({self})")
    }
}

impl FromStr for StrictPartition {
    type Err = PartitionError;

    /// Accepts `7,5,4,1`, and `-` or the empty string for the empty partition.
    fn from_str(text: &str) -> Result<Self, PartitionError> {
        StrictPartition::new(parse_parts(text)?)
    }
}

fn parse_parts(text: &str) -> Result<Vec<u32>, PartitionError> {
    let text = text.trim();
    if text.is_empty() || text == "-" {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|token| {
            token
                .trim()
                .parse::<u32>()
                .map_err(|_| PartitionError::Parse(token.to_string()))
        })
        .collect()
}

/// A partition with weakly decreasing positive parts, used as a multiset of
/// positive integers (for exponent lists and index shapes).
///
/// The constructor canonicalizes the order, so `1,2` and `2,1` are the same
/// value. Prints like [`StrictPartition`]: `2,1,1`, or `-` when empty.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Sorts `parts` into weakly decreasing order; rejects zero parts.
    pub fn new(mut parts: Vec<u32>) -> Result<Self, PartitionError> {
        if parts.contains(&0) {
            return Err(PartitionError::ZeroPart(parts));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    /// Multiset union of the parts of `self` and `other`.
    pub fn merge(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        let mut first = true;
        for part in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{part}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({self})")
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    fn from_str(text: &str) -> Result<Self, PartitionError> {
        Partition::new(parse_parts(text)?)
    }
}

/// One box of a shifted diagram. `row` and `col` are 1-based diagram
/// coordinates; `content = col - row` and `hook` is the shifted hook length.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ShiftedBox {
    pub row: u32,
    pub col: u32,
    pub content: u32,
    pub hook: u64,
}

/// A skew shape `outer/inner` with containment checked at construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: StrictPartition,
    inner: StrictPartition,
}

impl SkewShape {
    pub fn new(outer: StrictPartition, inner: StrictPartition) -> Result<Self, PartitionError> {
        if !outer.contains(&inner) {
            return Err(PartitionError::NotContained {
                outer: outer.to_string(),
                inner: inner.to_string(),
            });
        }
        Ok(SkewShape { outer, inner })
    }

    /// The straight shape `lambda/-`.
    pub fn straight(outer: StrictPartition) -> Self {
        SkewShape {
            outer,
            inner: StrictPartition::empty(),
        }
    }

    pub fn outer(&self) -> &StrictPartition {
        &self.outer
    }

    pub fn inner(&self) -> &StrictPartition {
        &self.inner
    }

    /// Number of boxes in the skew shape.
    pub fn size(&self) -> u64 {
        self.outer.size() - self.inner.size()
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

/// All strict partitions of `n`, in descending lexicographic order.
pub fn strict_partitions(n: u64) -> Vec<StrictPartition> {
    fn go(remaining: u64, max_part: u64, stack: &mut Vec<u32>, out: &mut Vec<StrictPartition>) {
        if remaining == 0 {
            out.push(StrictPartition {
                parts: stack.clone(),
            });
            return;
        }
        let mut part = remaining.min(max_part);
        while part >= 1 {
            // Everything below must use distinct parts < part, whose total
            // is at most part(part - 1)/2.
            if choose_two(part) >= remaining - part {
                stack.push(part as u32);
                go(remaining - part, part - 1, stack, out);
                stack.pop();
            }
            part -= 1;
        }
    }

    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All strict partitions containing `mu` with exactly `n` more boxes, in
/// descending lexicographic order.
///
/// Equivalent to filtering `strict_partitions(mu.size() + n)` by containment
/// of `mu`, but generated directly.
pub fn extensions(mu: &StrictPartition, n: u64) -> Vec<StrictPartition> {
    fn go(
        mu_parts: &[u32],
        mu_suffix: &[u64],
        row: usize,
        prev: u64,
        budget: u64,
        stack: &mut Vec<u32>,
        out: &mut Vec<StrictPartition>,
    ) {
        if row >= mu_parts.len() && budget == 0 {
            out.push(StrictPartition {
                parts: stack.clone(),
            });
            return;
        }
        let base = if row < mu_parts.len() {
            u64::from(mu_parts[row])
        } else {
            0
        };
        let lo = base.max(1);
        let hi = (base + budget).min(prev - 1);
        let mandatory_below = mu_suffix.get(row + 1).copied().unwrap_or(0);
        let mut part = hi;
        while part >= lo {
            let left = budget - (part - base);
            // Rows below use distinct parts < part and must still cover the
            // remaining rows of mu.
            if choose_two(part) >= left + mandatory_below {
                stack.push(part as u32);
                go(mu_parts, mu_suffix, row + 1, part, left, stack, out);
                stack.pop();
            }
            if part == lo {
                break;
            }
            part -= 1;
        }
    }

    // mu_suffix[i] = sum of mu's parts from row i (0-based) on.
    let mut mu_suffix = vec![0u64; mu.len() + 1];
    for i in (0..mu.len()).rev() {
        mu_suffix[i] = mu_suffix[i + 1] + u64::from(mu.parts[i]);
    }
    let mut out = Vec::new();
    go(
        mu.parts(),
        &mu_suffix,
        0,
        u64::MAX,
        n,
        &mut Vec::new(),
        &mut out,
    );
    out
}

/// All strict partitions contained in `lambda`, in descending lexicographic
/// order. Includes the empty partition and `lambda` itself.
pub fn subpartitions(lambda: &StrictPartition) -> Vec<StrictPartition> {
    fn go(
        lambda_parts: &[u32],
        row: usize,
        prev: u64,
        stack: &mut Vec<u32>,
        out: &mut Vec<StrictPartition>,
    ) {
        if row < lambda_parts.len() {
            let hi = u64::from(lambda_parts[row]).min(prev - 1);
            let mut part = hi;
            while part >= 1 {
                stack.push(part as u32);
                go(lambda_parts, row + 1, part, stack, out);
                stack.pop();
                part -= 1;
            }
        }
        // Stopping at this row is always allowed.
        out.push(StrictPartition {
            parts: stack.clone(),
        });
    }

    let mut out = Vec::new();
    go(lambda.parts(), 0, u64::MAX, &mut Vec::new(), &mut out);
    out
}
