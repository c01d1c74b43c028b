//! (k+1)-cores, residues, the bijection with k-bounded partitions, and the
//! action of the affine nilCoxeter generators on cores.
//!
//! A partition is a (k+1)-core when no cell has hook length divisible by
//! k+1. Cores are in bijection with k-bounded partitions: the inverse
//! direction keeps, in each row, the cells of hook length at most k. The
//! forward direction is implemented by reconstructing row offsets so that the
//! inverse map returns the input; the published sliding procedure leaves the
//! iteration order underdetermined, while the inverse map is exact.

use crate::partition::Partition;

/// Residue (content) of cell `(row, col)`: `(col − row) mod modulus`.
pub fn residue(row: usize, col: usize, modulus: usize) -> usize {
    (col as i64 - row as i64).rem_euclid(modulus as i64) as usize
}

/// Hook-length test for the core property.
pub fn is_core(shape: &Partition, modulus: usize) -> bool {
    let conj = shape.conjugate();
    shape.cells().all(|(i, j)| {
        let hook = shape.part(i) - j as u32 + conj.part(j) - i as u32 + 1;
        hook as usize % modulus != 0
    })
}

/// A (k+1)-core: a partition with no hook length divisible by `modulus`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Core {
    shape: Partition,
    modulus: usize,
}

impl Core {
    /// Panics unless `shape` is a `modulus`-core; `modulus ≥ 2`.
    pub fn new(shape: Partition, modulus: usize) -> Self {
        assert!(modulus >= 2, "core modulus must be at least 2");
        assert!(is_core(&shape, modulus), "{shape:?} is not a {modulus}-core");
        Core { shape, modulus }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn k(&self) -> usize {
        self.modulus - 1
    }
}

/// A k-bounded partition: all parts at most k.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct BoundedPartition {
    shape: Partition,
    k: usize,
}

impl BoundedPartition {
    /// Panics unless every part is at most `k`; `k ≥ 1`.
    pub fn new(shape: Partition, k: usize) -> Self {
        assert!(k >= 1, "k must be at least 1");
        assert!(
            shape.first_part() as usize <= k,
            "{shape:?} is not {k}-bounded"
        );
        BoundedPartition { shape, k }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn size(&self) -> u32 {
        self.shape.size()
    }
}

/// The inverse bijection core_{k+1}^{-1}: row i of the result counts the
/// cells in row i of the core with hook length at most k.
pub fn bounded_from_core(core: &Core) -> BoundedPartition {
    let k = core.k();
    let shape = core.shape();
    let conj = shape.conjugate();
    let mut parts = Vec::with_capacity(shape.len());
    for i in 1..=shape.len() {
        let row_len = shape.part(i);
        let count = (1..=row_len)
            .filter(|&j| {
                let hook = row_len - j + conj.part(j as usize) - i as u32 + 1;
                hook as usize <= k
            })
            .count() as u32;
        parts.push(count);
    }
    BoundedPartition::new(Partition::new(parts), k)
}

/// The bijection core_{k+1}: the unique (k+1)-core whose inverse image is
/// `lambda`. Row offsets are determined top row down; shifting a row right
/// only shrinks its hooks, so in each row the smallest admissible offset is
/// taken and the result is checked to round-trip.
pub fn core_from_bounded(lambda: &BoundedPartition) -> Core {
    let k = lambda.k();
    let shape = lambda.shape();
    let rows = shape.len();
    // Core row lengths for rows above the current one, from row i+1 upward.
    let mut above: Vec<u32> = Vec::with_capacity(rows);
    let mut offset: u32 = 0;
    for i in (1..=rows).rev() {
        let target = shape.part(i);
        let bound = shape.size() + k as u32 * rows as u32 + 2;
        loop {
            assert!(offset <= bound, "core reconstruction did not converge");
            let row_len = target + offset;
            // above is sorted decreasing from the nearest row up, so the
            // column count is a prefix length.
            let count = (1..=row_len)
                .filter(|&j| {
                    let leg = above.iter().rev().take_while(|&&len| len >= j).count();
                    let hook = row_len - j + leg as u32 + 1;
                    hook as usize <= k
                })
                .count() as u32;
            if count == target {
                break;
            }
            assert!(
                count < target,
                "core reconstruction overshot row {i} of {shape:?}"
            );
            offset += 1;
        }
        above.push(target + offset);
    }
    above.reverse();
    let core = Core::new(Partition::new(above), k + 1);
    debug_assert_eq!(&bounded_from_core(&core), lambda);
    core
}

/// k-conjugation: image of the transpose of the core under the bijection.
pub fn k_conjugate(lambda: &BoundedPartition) -> BoundedPartition {
    let core = core_from_bounded(lambda);
    let transposed = Core::new(core.shape().conjugate(), core.modulus());
    bounded_from_core(&transposed)
}

/// Rows (1-based) at which a cell can be added keeping a partition shape,
/// paired with the residue of the added cell.
fn addable_corners(shape: &Partition, modulus: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for row in 1..=shape.len() + 1 {
        let addable = row == 1 || shape.part(row - 1) > shape.part(row);
        if addable {
            let col = shape.part(row) as usize + 1;
            out.push((row, residue(row, col, modulus)));
        }
    }
    out
}

/// Action of the generator u_i on a core: fills every addable corner of
/// residue `i`, or returns `None` (the nilCoxeter zero) when there is none.
pub fn act_generator(i: usize, core: &Core) -> Option<Core> {
    let modulus = core.modulus();
    assert!(i < modulus, "residue {i} out of range for modulus {modulus}");
    let rows: Vec<usize> = addable_corners(core.shape(), modulus)
        .into_iter()
        .filter(|&(_, res)| res == i)
        .map(|(row, _)| row)
        .collect();
    if rows.is_empty() {
        return None;
    }
    let mut parts: Vec<u32> = core.shape().parts().to_vec();
    for row in rows {
        if row == parts.len() + 1 {
            parts.push(1);
        } else {
            parts[row - 1] += 1;
        }
    }
    let shape = Partition::new(parts);
    debug_assert!(is_core(&shape, modulus));
    Some(Core {
        shape,
        modulus,
    })
}

/// Applies the word u_{w_1}···u_{w_m} to a core, rightmost letter first.
pub fn act_word_on_core(word: &[usize], core: &Core) -> Option<Core> {
    let mut cur = core.clone();
    for &letter in word.iter().rev() {
        cur = act_generator(letter, &cur)?;
    }
    Some(cur)
}

/// Applies the word to a k-bounded partition through the core bijection.
pub fn act_word(word: &[usize], lambda: &BoundedPartition) -> Option<BoundedPartition> {
    let core = core_from_bounded(lambda);
    let moved = act_word_on_core(word, &core)?;
    Some(bounded_from_core(&moved))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn bp(parts: &[u32], k: usize) -> BoundedPartition {
        BoundedPartition::new(p(parts), k)
    }

    #[test]
    fn residue_examples() {
        assert_eq!(residue(1, 1, 4), 0);
        assert_eq!(residue(2, 1, 4), 3);
        assert_eq!(residue(1, 3, 4), 2);
    }

    #[test]
    fn is_core_examples() {
        assert!(is_core(&p(&[6, 3, 1, 1]), 4));
        assert!(!is_core(&p(&[2, 2]), 3));
        assert!(is_core(&Partition::empty(), 2));
        assert!(is_core(&Partition::empty(), 7));
    }

    #[test]
    fn bijection_published_example() {
        // core_4((3,2,1,1)) = (6,3,1,1) and back.
        let lambda = bp(&[3, 2, 1, 1], 3);
        let core = core_from_bounded(&lambda);
        assert_eq!(core.shape(), &p(&[6, 3, 1, 1]));
        assert_eq!(bounded_from_core(&core), lambda);

        let transposed = Core::new(p(&[4, 2, 2, 1, 1, 1]), 4);
        assert_eq!(
            bounded_from_core(&transposed).shape(),
            &p(&[2, 1, 1, 1, 1, 1])
        );
    }

    #[test]
    fn bijection_small_cases() {
        assert_eq!(
            core_from_bounded(&bp(&[2, 2], 2)).shape(),
            &p(&[4, 2])
        );
        for k in 1..=4 {
            let single = bp(&[k as u32], k);
            assert_eq!(core_from_bounded(&single).shape(), single.shape());
        }
        let empty = bp(&[], 3);
        assert_eq!(core_from_bounded(&empty).shape(), &Partition::empty());
        assert_eq!(
            bounded_from_core(&Core::new(Partition::empty(), 4)).shape(),
            &Partition::empty()
        );
    }

    #[test]
    fn k_conjugate_examples() {
        assert_eq!(k_conjugate(&bp(&[3, 2, 1, 1], 3)), bp(&[2, 1, 1, 1, 1, 1], 3));
        assert_eq!(k_conjugate(&bp(&[1], 2)), bp(&[1], 2));
        assert_eq!(k_conjugate(&bp(&[1], 4)), bp(&[1], 4));
        assert_eq!(k_conjugate(&bp(&[2, 2], 2)), bp(&[1, 1, 1, 1], 2));
    }

    #[test]
    fn generator_action_examples() {
        let core = Core::new(p(&[6, 3, 1, 1]), 4);
        let moved = act_generator(2, &core).expect("addable corners of residue 2");
        assert_eq!(moved.shape(), &p(&[7, 4, 1, 1]));

        let empty = Core::new(Partition::empty(), 4);
        assert!(act_generator(1, &empty).is_none());
        assert_eq!(act_generator(0, &empty).unwrap().shape(), &p(&[1]));
    }

    #[test]
    fn word_action_examples() {
        let lambda = bp(&[3, 2, 1, 1], 3);
        assert_eq!(act_word(&[2], &lambda), Some(bp(&[3, 3, 1, 1], 3)));
        let next = bp(&[3, 3, 1, 1], 3);
        assert_eq!(act_word(&[0, 3], &next), Some(bp(&[3, 3, 2, 1, 1], 3)));
        // u_i^2 = 0.
        assert_eq!(act_word(&[0, 0], &bp(&[], 3)), None);
        assert_eq!(act_word(&[], &lambda), Some(lambda.clone()));
    }

    #[test]
    fn one_box_added_per_generator() {
        // The surviving action adds exactly one box to the bounded partition,
        // and every box added to the core carries the stated residue.
        for k in 1..=3usize {
            for size in 0..=7u32 {
                for shape in crate::enumerate::partitions_bounded(size, k as u32) {
                    let lambda = BoundedPartition::new(shape, k);
                    let core = core_from_bounded(&lambda);
                    for i in 0..=k {
                        if let Some(next) = act_generator(i, &core) {
                            for (row, col) in next.shape().cells() {
                                if !core.shape().contains_cell(row, col) {
                                    assert_eq!(residue(row, col, k + 1), i);
                                }
                            }
                            let moved = bounded_from_core(&next);
                            assert_eq!(moved.size(), lambda.size() + 1);
                        }
                    }
                }
            }
        }
    }
}
