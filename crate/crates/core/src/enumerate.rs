//! Exhaustive generators for partitions, used by table construction,
//! brute-force oracles and the verification suites.

use crate::partition::{table_cmp, Partition};

/// All partitions of `n` with parts at most `max_part`, in table order.
pub fn partitions_bounded(n: u32, max_part: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    gen_rec(n, max_part, &mut stack, &mut out);
    out.sort_by(table_cmp);
    out
}

fn gen_rec(rest: u32, max_part: u32, stack: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition::new(stack.clone()));
        return;
    }
    let hi = rest.min(max_part);
    for p in (1..=hi).rev() {
        stack.push(p);
        gen_rec(rest - p, p, stack, out);
        stack.pop();
    }
}

/// All partitions of `n`.
pub fn partitions(n: u32) -> Vec<Partition> {
    partitions_bounded(n, n.max(1))
}

/// The k-bounded partitions of `n` in table order; this is the row and column
/// index sequence of every character table.
pub fn bounded_partitions(k: u32, n: u32) -> Vec<Partition> {
    partitions_bounded(n, k)
}

/// All k-bounded partitions of size at most `n`, the empty partition included.
pub fn bounded_partitions_up_to(k: u32, n: u32) -> Vec<Partition> {
    (0..=n).flat_map(|s| partitions_bounded(s, k)).collect()
}

/// Partitions of `size` containing `inner`, with parts at most `max_part`.
/// Set `max_part = size` for the unrestricted lattice.
pub fn partitions_containing(inner: &Partition, size: u32, max_part: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    if inner.size() > size || inner.first_part() > max_part {
        return out;
    }
    let mut stack = Vec::new();
    gen_over(inner, size - inner.size(), max_part, 1, &mut stack, &mut out);
    out.sort_by(table_cmp);
    out
}

fn gen_over(
    inner: &Partition,
    extra: u32,
    cap: u32,
    row: usize,
    stack: &mut Vec<u32>,
    out: &mut Vec<Partition>,
) {
    // Rows are chosen from the bottom; each row length is at least the inner
    // row below it and at most the previous chosen row.
    let lo = inner.part(row);
    if extra == 0 && lo == 0 {
        out.push(Partition::new(stack.clone()));
        return;
    }
    let hi = cap.min(lo + extra);
    for len in (lo.max(1)..=hi).rev() {
        let used = len - lo;
        stack.push(len);
        gen_over(inner, extra - used, len, row + 1, stack, out);
        stack.pop();
    }
}

/// Partitions of `size` contained cellwise in `outer`.
pub fn partitions_inside(outer: &Partition, size: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    if size > outer.size() {
        return out;
    }
    let mut stack = Vec::new();
    gen_inside(outer, size, outer.first_part(), 1, &mut stack, &mut out);
    out.sort_by(table_cmp);
    out
}

fn gen_inside(
    outer: &Partition,
    rest: u32,
    cap: u32,
    row: usize,
    stack: &mut Vec<u32>,
    out: &mut Vec<Partition>,
) {
    if rest == 0 {
        out.push(Partition::new(stack.clone()));
        return;
    }
    let hi = cap.min(outer.part(row)).min(rest);
    for len in (1..=hi).rev() {
        stack.push(len);
        gen_inside(outer, rest - len, len, row + 1, stack, out);
        stack.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts() {
        assert_eq!(partitions(0).len(), 1);
        assert_eq!(partitions(6).len(), 11);
        assert_eq!(partitions(8).len(), 22);
        assert_eq!(bounded_partitions(2, 6).len(), 4);
        assert_eq!(bounded_partitions(3, 6).len(), 7);
        assert_eq!(bounded_partitions(4, 6).len(), 9);
    }

    #[test]
    fn table_order_layout() {
        let names: Vec<String> = bounded_partitions(3, 6)
            .iter()
            .map(|p| p.parts().iter().map(|x| x.to_string()).collect())
            .collect();
        assert_eq!(
            names,
            vec!["111111", "21111", "2211", "3111", "222", "321", "33"]
        );
    }

    #[test]
    fn inside_enumeration() {
        let outer = Partition::new(vec![2, 1]);
        let got = partitions_inside(&outer, 2);
        assert_eq!(got.len(), 2); // (1,1) and (2)
        for p in &got {
            assert!(p.contained_in(&outer));
            assert_eq!(p.size(), 2);
        }
        assert_eq!(partitions_inside(&outer, 0).len(), 1);
        assert_eq!(partitions_inside(&outer, 4).len(), 0);
    }

    #[test]
    fn containing_enumeration() {
        let inner = Partition::new(vec![2]);
        let got = partitions_containing(&inner, 4, 4);
        // All partitions of 4 whose first row has at least 2 cells.
        assert_eq!(got.len(), 4);
        for p in &got {
            assert!(inner.contained_in(p));
            assert_eq!(p.size(), 4);
        }
        let empty = Partition::empty();
        assert_eq!(partitions_containing(&empty, 3, 3).len(), 3);
    }
}
