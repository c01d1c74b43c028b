//! Integer partitions and skew shapes in French convention.
//!
//! Rows are indexed 1-based from the bottom, so row 1 is the longest row and
//! cell `(i, j)` sits in row `i`, column `j`. A partition is stored as its
//! weakly decreasing part sequence without trailing zeros; the empty
//! partition is valid everywhere.

use std::cmp::Ordering;
use std::fmt;

/// A partition: weakly decreasing sequence of positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition, stripping trailing zeros.
    ///
    /// Panics if the sequence is not weakly decreasing.
    pub fn new(mut parts: Vec<u32>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "partition parts must be weakly decreasing: {parts:?}"
        );
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Parses the text form `"3,2,1,1"`; the empty string is the empty partition.
    pub fn parse(s: &str) -> Result<Self, String> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for tok in s.split(',') {
            let p: u32 = tok
                .trim()
                .parse()
                .map_err(|_| format!("invalid partition part {tok:?} in {s:?}"))?;
            if p == 0 {
                return Err(format!("partition parts must be positive in {s:?}"));
            }
            parts.push(p);
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(format!("partition {s:?} is not weakly decreasing"));
        }
        Ok(Partition { parts })
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

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Length of row `i` (1-based); rows past the last stored part have length 0.
    pub fn part(&self, i: usize) -> u32 {
        if i >= 1 && i <= self.parts.len() {
            self.parts[i - 1]
        } else {
            0
        }
    }

    pub fn first_part(&self) -> u32 {
        self.part(1)
    }

    pub fn contains_cell(&self, row: usize, col: usize) -> bool {
        row >= 1 && col >= 1 && col as u32 <= self.part(row)
    }

    /// Column lengths, i.e. the transposed diagram.
    pub fn conjugate(&self) -> Partition {
        let cols = self.first_part() as usize;
        let mut parts = Vec::with_capacity(cols);
        for j in 1..=cols {
            parts.push(self.parts.iter().filter(|&&p| p as usize >= j).count() as u32);
        }
        Partition { parts }
    }

    /// Cellwise containment `self ⊆ other`.
    pub fn contained_in(&self, other: &Partition) -> bool {
        self.parts
            .iter()
            .enumerate()
            .all(|(i, &p)| p <= other.part(i + 1))
    }

    /// Number of cells in a row weakly above row `i` and in column `j`,
    /// i.e. the leg of cell `(i, j)` counting the cell itself.
    fn leg_inclusive(&self, row: usize, col: usize) -> u32 {
        let col_len = self.conjugate().part(col);
        col_len.saturating_sub(row as u32 - 1)
    }

    /// Hook length of cell `(i, j)`: cells to the right in row `i` plus cells
    /// weakly above in column `j` (the cell itself counted once).
    ///
    /// Returns `None` when the cell lies outside the diagram.
    pub fn hook_length(&self, row: usize, col: usize) -> Option<u32> {
        if !self.contains_cell(row, col) {
            return None;
        }
        let arm = self.part(row) - col as u32;
        Some(arm + self.leg_inclusive(row, col))
    }

    /// All cells `(row, col)` of the diagram, row by row.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p as usize).map(move |j| (i + 1, j)))
    }

    /// Adds one cell at `(row, col)`; panics unless the result is a partition.
    pub fn with_cell(&self, row: usize) -> Partition {
        let mut parts = self.parts.clone();
        if row == parts.len() + 1 {
            parts.push(1);
        } else {
            parts[row - 1] += 1;
        }
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

/// Total order used for all character-table layouts: partitions of equal size
/// compare by decreasing length, ties broken lexicographically on the parts.
/// This refines dominance order (least dominant first), so the h-to-k-Schur
/// transition matrices are upper unitriangular in it.
pub fn table_cmp(a: &Partition, b: &Partition) -> Ordering {
    b.len()
        .cmp(&a.len())
        .then_with(|| a.parts().cmp(b.parts()))
}

/// Dominance order on partitions of equal size; `None` when incomparable.
pub fn dominance_cmp(a: &Partition, b: &Partition) -> Option<Ordering> {
    debug_assert_eq!(a.size(), b.size());
    let rows = a.len().max(b.len());
    let (mut sa, mut sb) = (0u32, 0u32);
    let (mut le, mut ge) = (true, true);
    for i in 1..=rows {
        sa += a.part(i);
        sb += b.part(i);
        le &= sa <= sb;
        ge &= sa >= sb;
    }
    match (le, ge) {
        (true, true) => Some(Ordering::Equal),
        (true, false) => Some(Ordering::Less),
        (false, true) => Some(Ordering::Greater),
        (false, false) => None,
    }
}

/// A skew shape `outer/inner` with `inner ⊆ outer` cellwise.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Option<SkewShape> {
        if inner.contained_in(&outer) {
            Some(SkewShape { outer, inner })
        } else {
            None
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> u32 {
        self.outer.size() - self.inner.size()
    }

    /// Columns occupied in row `i`, as the half-open part range `(inner_i, outer_i]`.
    fn row_span(&self, i: usize) -> (u32, u32) {
        (self.inner.part(i), self.outer.part(i))
    }

    pub fn contains_cell(&self, row: usize, col: usize) -> bool {
        let (a, b) = self.row_span(row);
        col as u32 > a && col as u32 <= b
    }

    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=self.outer.len() {
            let (a, b) = self.row_span(i);
            for j in (a + 1)..=b {
                out.push((i, j as usize));
            }
        }
        out
    }

    /// Number of columns shared by the cells of rows `i` and `i+1`.
    fn overlap(&self, i: usize) -> u32 {
        let (a1, b1) = self.row_span(i);
        let (a2, b2) = self.row_span(i + 1);
        b1.min(b2).saturating_sub(a1.max(a2))
    }

    /// True iff no 2×2 block of cells lies wholly inside the shape.
    pub fn is_ribbon(&self) -> bool {
        (1..self.outer.len()).all(|i| self.overlap(i) < 2)
    }

    /// Number of vertical dominoes: cell pairs `{(i,j), (i+1,j)}` inside the shape.
    pub fn height(&self) -> u32 {
        (1..self.outer.len()).map(|i| self.overlap(i)).sum()
    }

    /// Number of edge-connected components. Cells within one row are always
    /// connected since each row of a skew shape is a contiguous segment.
    pub fn connected_components(&self) -> usize {
        let mut components = 0;
        let mut prev_nonempty = false;
        let mut prev_linked;
        for i in 1..=self.outer.len() {
            let (a, b) = self.row_span(i);
            let nonempty = b > a;
            prev_linked = prev_nonempty && nonempty && i > 1 && self.overlap(i - 1) > 0;
            if nonempty && !prev_linked {
                components += 1;
            }
            prev_nonempty = nonempty;
        }
        components
    }

    /// At most one cell per column.
    pub fn is_horizontal_strip(&self) -> bool {
        (1..self.outer.len()).all(|i| self.overlap(i) == 0)
    }

    /// At most one cell per row.
    pub fn is_vertical_strip(&self) -> bool {
        (1..=self.outer.len()).all(|i| {
            let (a, b) = self.row_span(i);
            b - a <= 1
        })
    }

    /// Border-strip test: exactly `r` cells forming one edge-connected ribbon.
    pub fn is_border_strip(&self, r: u32) -> bool {
        self.size() == r && self.is_ribbon() && self.connected_components() == 1
    }

    /// The conjugate skew shape `outerᵗ/innerᵗ`.
    pub fn conjugate(&self) -> SkewShape {
        SkewShape {
            outer: self.outer.conjugate(),
            inner: self.inner.conjugate(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn skew(outer: &[u32], inner: &[u32]) -> SkewShape {
        SkewShape::new(p(outer), p(inner)).expect("valid skew")
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[6, 3, 1, 1]).conjugate(), p(&[4, 2, 2, 1, 1, 1]));
    }

    #[test]
    fn hook_length_examples() {
        assert_eq!(p(&[1]).hook_length(1, 1), Some(1));
        // arm = 1, leg = 1, plus the cell itself
        assert_eq!(p(&[2, 2]).hook_length(1, 1), Some(3));
        // arm = 5, leg = 3
        assert_eq!(p(&[6, 3, 1, 1]).hook_length(1, 1), Some(9));
        assert_eq!(p(&[2, 1]).hook_length(1, 3), None);
        assert_eq!(p(&[2, 1]).hook_length(3, 1), None);
    }

    #[test]
    fn ribbon_examples() {
        assert!(skew(&[2, 1], &[]).is_ribbon());
        assert!(!skew(&[2, 2], &[]).is_ribbon());
        assert!(!skew(&[3, 3], &[1]).is_ribbon());
    }

    #[test]
    fn height_examples() {
        assert_eq!(skew(&[2, 2], &[1]).height(), 1);
        assert_eq!(skew(&[3], &[]).height(), 0);
        assert_eq!(skew(&[1, 1, 1], &[]).height(), 2);
    }

    #[test]
    fn strip_examples() {
        assert!(skew(&[3, 1], &[1, 1]).is_horizontal_strip());
        assert!(skew(&[2, 2], &[2, 1]).is_vertical_strip());
        assert!(skew(&[2, 2], &[2, 1]).is_horizontal_strip());
        assert!(!skew(&[2, 2], &[1]).is_horizontal_strip());
    }

    #[test]
    fn border_strip_examples() {
        assert!(skew(&[2, 1], &[]).is_border_strip(3));
        assert!(!skew(&[2, 1], &[1]).is_border_strip(2));
        // (3,1)/(1) splits into {(1,2),(1,3)} and {(2,1)}: cells touching
        // only at a corner are not edge-connected.
        assert!(!skew(&[3, 1], &[1]).is_border_strip(3));
        assert!(skew(&[2, 2], &[1]).is_border_strip(3));
    }

    #[test]
    fn components() {
        assert_eq!(skew(&[2, 1], &[1]).connected_components(), 2);
        assert_eq!(skew(&[3, 1], &[1]).connected_components(), 2);
        assert_eq!(skew(&[2, 2], &[1]).connected_components(), 1);
        assert_eq!(skew(&[2, 2], &[]).connected_components(), 1);
        assert_eq!(Partition::empty().size(), 0);
        assert_eq!(skew(&[], &[]).connected_components(), 0);
    }

    #[test]
    fn parse_round_trip() {
        let x = Partition::parse("3,2,1,1").unwrap();
        assert_eq!(x, p(&[3, 2, 1, 1]));
        assert_eq!(x.to_string(), "3,2,1,1");
        assert_eq!(Partition::parse("").unwrap(), Partition::empty());
        assert!(Partition::parse("1,2").is_err());
        assert!(Partition::parse("2,0").is_err());
        assert!(Partition::parse("a").is_err());
    }

    #[test]
    fn table_order_matches_published_layout() {
        // k = 4, n = 6 layout.
        let want = ["111111", "21111", "2211", "3111", "222", "321", "411", "33", "42"];
        let mut got: Vec<Partition> = want
            .iter()
            .map(|s| {
                Partition::new(s.bytes().map(|b| (b - b'0') as u32).collect())
            })
            .collect();
        got.sort_by(|a, b| table_cmp(a, b));
        let names: Vec<String> = got
            .iter()
            .map(|q| q.parts().iter().map(|x| x.to_string()).collect::<String>())
            .collect();
        assert_eq!(names, want);
    }

    #[test]
    fn table_order_refines_dominance() {
        // Exhaustive over partitions of n ≤ 8.
        for n in 0..=8u32 {
            let all = crate::enumerate::partitions(n);
            for a in &all {
                for b in &all {
                    if let Some(Ordering::Less) = dominance_cmp(a, b) {
                        assert_eq!(table_cmp(a, b), Ordering::Less, "{a} vs {b}");
                    }
                }
            }
        }
    }
}
