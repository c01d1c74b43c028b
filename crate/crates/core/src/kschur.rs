//! The k-Schur basis through the k-Pieri rule, the action of algebra
//! elements on it, k-ribbons, and the Murnaghan–Nakayama rule in both its
//! ribbon form and its hook-word form.
//!
//! Pieri and both MN forms are deliberately computed along independent
//! routes (strip conditions on partitions and their k-conjugates versus the
//! nilCoxeter word action); their agreement is a theorem and is asserted in
//! debug builds and re-checked wholesale by the verification suite.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::cores::{act_word, act_word_on_core, bounded_from_core, core_from_bounded, k_conjugate, BoundedPartition};
use crate::enumerate::partitions_containing;
use crate::ncsf::AlgebraElement;
use crate::nilcoxeter::{enumerate_hook_words, AffineElement, CanonicalOrder, Word};
use crate::partition::{Partition, SkewShape};

/// An integer-linear combination of k-Schur functions, indexed by k-bounded
/// partitions.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct KSchurExpansion {
    k: usize,
    terms: BTreeMap<Partition, BigInt>,
}

impl KSchurExpansion {
    pub fn zero(k: usize) -> Self {
        KSchurExpansion {
            k,
            terms: BTreeMap::new(),
        }
    }

    /// The expansion consisting of s_∅ alone: the vacuum for Pieri chains.
    pub fn vacuum(k: usize) -> Self {
        let mut out = Self::zero(k);
        out.add_term(Partition::empty(), BigInt::one());
        out
    }

    pub fn single(lambda: &BoundedPartition) -> Self {
        let mut out = Self::zero(lambda.k());
        out.add_term(lambda.shape().clone(), BigInt::one());
        out
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, shape: &Partition) -> BigInt {
        self.terms.get(shape).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, shape: Partition, coeff: BigInt) {
        assert!(
            shape.first_part() as usize <= self.k,
            "{shape:?} is not {}-bounded",
            self.k
        );
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(shape) {
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
        }
    }

    /// Applies an element of 𝚲_{(k)} linearly: f·Σ d_λ s_λ = Σ c_u d_λ s_{u·λ}.
    pub fn apply(&self, f: &AlgebraElement) -> KSchurExpansion {
        assert_eq!(self.k, f.k(), "rank mismatch between algebra and expansion");
        let mut out = KSchurExpansion::zero(self.k);
        for (shape, d) in &self.terms {
            let lambda = BoundedPartition::new(shape.clone(), self.k);
            let core = core_from_bounded(&lambda);
            for (u, c) in f.terms() {
                let word = u.lex_least_reduced_word();
                if let Some(moved) = act_word_on_core(&word, &core) {
                    out.add_term(bounded_from_core(&moved).shape().clone(), c * d);
                }
            }
        }
        out
    }
}

/// Applies f to a single k-Schur function s_λ.
pub fn apply(f: &AlgebraElement, lambda: &BoundedPartition) -> KSchurExpansion {
    KSchurExpansion::single(lambda).apply(f)
}

fn act_element(u: &AffineElement, lambda: &BoundedPartition) -> Option<BoundedPartition> {
    act_word(&u.lex_least_reduced_word(), lambda)
}

/// k-Pieri rule via the word action: the nonzero u_A^dec·λ over r-subsets A.
pub fn k_pieri_words(r: usize, lambda: &BoundedPartition) -> Vec<BoundedPartition> {
    let k = lambda.k();
    assert!(r >= 1 && r <= k, "Pieri step requires 1 ≤ r ≤ k, got r={r}, k={k}");
    let mut out = BTreeSet::new();
    for mask in 0u64..(1 << (k + 1)) {
        if mask.count_ones() as usize != r {
            continue;
        }
        let support: BTreeSet<usize> = (0..=k).filter(|&i| mask >> i & 1 == 1).collect();
        let u = crate::nilcoxeter::cyclically_decreasing(&support, k);
        if let Some(mu) = act_element(&u, lambda) {
            let fresh = out.insert(mu);
            debug_assert!(fresh, "distinct supports give distinct Pieri terms");
        }
    }
    out.into_iter().collect()
}

/// k-Pieri rule via strip conditions: μ/λ a horizontal r-strip and
/// μ^{(k)}/λ^{(k)} a vertical r-strip.
pub fn k_pieri_strips(r: usize, lambda: &BoundedPartition) -> Vec<BoundedPartition> {
    let k = lambda.k();
    assert!(r >= 1 && r <= k, "Pieri step requires 1 ≤ r ≤ k, got r={r}, k={k}");
    let conj = k_conjugate(lambda);
    let size = lambda.size() + r as u32;
    let mut out = Vec::new();
    for shape in partitions_containing(lambda.shape(), size, k as u32) {
        let horiz = SkewShape::new(shape.clone(), lambda.shape().clone())
            .expect("outer contains inner by construction");
        if !horiz.is_horizontal_strip() {
            continue;
        }
        let mu = BoundedPartition::new(shape, k);
        let mu_conj = k_conjugate(&mu);
        let vert = match SkewShape::new(mu_conj.shape().clone(), conj.shape().clone()) {
            Some(s) => s,
            None => continue,
        };
        if vert.is_vertical_strip() {
            out.push(mu);
        }
    }
    out.sort();
    out
}

/// h_r·s_λ^{(k)} = Σ s_μ^{(k)}: the multiplicity-free k-Pieri step. The two
/// constructions agree (asserted in debug builds); the word route is returned.
pub fn k_pieri(r: usize, lambda: &BoundedPartition) -> Vec<BoundedPartition> {
    let out = k_pieri_words(r, lambda);
    debug_assert_eq!(out, k_pieri_strips(r, lambda), "Pieri routes disagree");
    out
}

/// A k-ribbon outer/inner pair with its height statistic.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct KRibbon {
    pub outer: BoundedPartition,
    pub inner: BoundedPartition,
    pub height: u32,
}

impl KRibbon {
    pub fn sign(&self) -> BigInt {
        if self.height % 2 == 0 {
            BigInt::one()
        } else {
            -BigInt::one()
        }
    }
}

/// Tests conditions (0)–(4) for μ/λ being a k-ribbon of its size; returns
/// ht(μ/λ) on success. `check_ribbon_condition` toggles condition (2) for
/// the superfluousness experiment.
pub fn is_k_ribbon(
    outer: &BoundedPartition,
    inner: &BoundedPartition,
    check_ribbon_condition: bool,
) -> Option<u32> {
    let k = outer.k();
    assert_eq!(k, inner.k(), "rank mismatch between bounded partitions");
    // (0) containment in both the partition and its k-conjugate.
    if !inner.shape().contained_in(outer.shape()) {
        return None;
    }
    let r = outer.size() - inner.size();
    if r == 0 {
        return None;
    }
    let outer_conj = k_conjugate(outer);
    let inner_conj = k_conjugate(inner);
    if !inner_conj.shape().contained_in(outer_conj.shape()) {
        return None;
    }
    // (4) height statistics.
    let skew = SkewShape::new(outer.shape().clone(), inner.shape().clone()).unwrap();
    let skew_conj = SkewShape::new(outer_conj.shape().clone(), inner_conj.shape().clone()).unwrap();
    let height = skew.height();
    if height + skew_conj.height() != r - 1 {
        return None;
    }
    // (2) and (3) on the skew of cores.
    let outer_core = core_from_bounded(outer);
    let inner_core = core_from_bounded(inner);
    let core_skew = match SkewShape::new(
        outer_core.shape().clone(),
        inner_core.shape().clone(),
    ) {
        Some(s) => s,
        None => return None,
    };
    if check_ribbon_condition && !core_skew.is_ribbon() {
        return None;
    }
    let residues: BTreeSet<usize> = core_skew
        .cells()
        .iter()
        .map(|&(i, j)| crate::cores::residue(i, j, k + 1))
        .collect();
    if residues.len() > k {
        return None;
    }
    if !CanonicalOrder::for_support(&residues, k).is_interval(&residues) {
        return None;
    }
    Some(height)
}

/// All k-ribbons of size r over the base λ.
pub fn k_ribbons(lambda: &BoundedPartition, r: usize) -> Vec<KRibbon> {
    let k = lambda.k();
    assert!(r >= 1 && r <= k, "ribbon size must satisfy 1 ≤ r ≤ k, got r={r}, k={k}");
    let size = lambda.size() + r as u32;
    let mut out = Vec::new();
    for shape in partitions_containing(lambda.shape(), size, k as u32) {
        let outer = BoundedPartition::new(shape, k);
        if let Some(height) = is_k_ribbon(&outer, lambda, true) {
            out.push(KRibbon {
                outer,
                inner: lambda.clone(),
                height,
            });
        }
    }
    out
}

/// p_r·s_λ^{(k)} by the ribbon form: Σ (−1)^{ht(μ/λ)} s_μ^{(k)} over k-ribbons.
pub fn mn_ribbons(r: usize, lambda: &BoundedPartition) -> KSchurExpansion {
    let mut out = KSchurExpansion::zero(lambda.k());
    for ribbon in k_ribbons(lambda, r) {
        out.add_term(ribbon.outer.shape().clone(), ribbon.sign());
    }
    out
}

/// The accepted (word, μ) pairs of the word-form MN rule, with ascent counts.
pub fn mn_word_pairs(r: usize, lambda: &BoundedPartition) -> Vec<(Word, BoundedPartition, usize)> {
    let k = lambda.k();
    assert!(r >= 1 && r <= k, "MN step requires 1 ≤ r ≤ k, got r={r}, k={k}");
    let core = core_from_bounded(lambda);
    let mut out = Vec::new();
    for (word, asc) in enumerate_hook_words(k, r, true) {
        if let Some(moved) = act_word_on_core(&word, &core) {
            out.push((word, bounded_from_core(&moved), asc));
        }
    }
    out
}

/// p_r·s_λ^{(k)} by the word form: Σ (−1)^{asc(w)} s_{w·λ} over k-connected
/// reduced hook words of length r.
pub fn mn_words(r: usize, lambda: &BoundedPartition) -> KSchurExpansion {
    let mut out = KSchurExpansion::zero(lambda.k());
    for (_, mu, asc) in mn_word_pairs(r, lambda) {
        let coeff = if asc % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        out.add_term(mu.shape().clone(), coeff);
    }
    out
}

/// Classical Murnaghan–Nakayama expansion of p_r·s_λ: all μ ⊇ λ for which
/// μ/λ is a connected border strip of r cells, with heights. This is the
/// large-k oracle and is built from skew-shape enumeration alone.
pub fn classical_mn(r: usize, lambda: &Partition) -> Vec<(Partition, u32)> {
    assert!(r >= 1);
    let size = lambda.size() + r as u32;
    let mut out = Vec::new();
    for shape in partitions_containing(lambda, size, size) {
        let skew = SkewShape::new(shape.clone(), lambda.clone())
            .expect("outer contains inner by construction");
        if skew.is_border_strip(r as u32) {
            let height = skew.height();
            out.push((shape, height));
        }
    }
    out
}

/// Transition data: rows of h_μ expanded in the k-Schur basis over the
/// k-bounded partitions of n, in table order. Upper unitriangular.
#[derive(Clone, Debug)]
pub struct TransitionMatrix {
    pub k: usize,
    pub n: u32,
    pub index: Vec<Partition>,
    pub rows: Vec<Vec<BigInt>>,
}

impl TransitionMatrix {
    pub fn position(&self, shape: &Partition) -> Option<usize> {
        self.index.iter().position(|p| p == shape)
    }
}

/// Expands every h_μ = h_{μ₁}…h_{μ_ℓ}·1 by iterated Pieri steps from the
/// vacuum. Entry [μ][λ] is the coefficient of s_λ^{(k)}.
pub fn h_to_kschur_matrix(k: usize, n: u32) -> TransitionMatrix {
    let index = crate::enumerate::bounded_partitions(k as u32, n);
    let mut cache: HashMap<(Partition, usize), Vec<(Partition, BigInt)>> = HashMap::new();
    let mut rows = Vec::with_capacity(index.len());
    for mu in &index {
        let mut expansion = KSchurExpansion::vacuum(k);
        // Rightmost factor first; the h_r commute so the order is a convention.
        for &part in mu.parts().iter().rev() {
            expansion = apply_h_cached(&expansion, part as usize, k, &mut cache);
        }
        let row: Vec<BigInt> = index.iter().map(|l| expansion.coeff(l)).collect();
        rows.push(row);
    }
    TransitionMatrix { k, n, index, rows }
}

fn apply_h_cached(
    expansion: &KSchurExpansion,
    r: usize,
    k: usize,
    cache: &mut HashMap<(Partition, usize), Vec<(Partition, BigInt)>>,
) -> KSchurExpansion {
    let mut out = KSchurExpansion::zero(k);
    for (shape, c) in expansion.terms() {
        let key = (shape.clone(), r);
        let images = cache.entry(key).or_insert_with(|| {
            let lambda = BoundedPartition::new(shape.clone(), k);
            k_pieri(r, &lambda)
                .into_iter()
                .map(|mu| (mu.shape().clone(), BigInt::one()))
                .collect()
        });
        for (mu, m) in images.iter() {
            out.add_term(mu.clone(), c * m);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncsf;

    fn bp(parts: &[u32], k: usize) -> BoundedPartition {
        BoundedPartition::new(Partition::new(parts.to_vec()), k)
    }

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn pieri_examples() {
        let terms = k_pieri(2, &bp(&[3, 3, 1, 1], 3));
        assert!(terms.contains(&bp(&[3, 3, 2, 1, 1], 3)));

        assert_eq!(k_pieri(1, &bp(&[], 2)), vec![bp(&[1], 2)]);
        // h_2·s_∅ = s_(2): the column (1,1) is not a horizontal strip, and
        // only u_{{0,1}}^dec survives on the empty core.
        assert_eq!(k_pieri(2, &bp(&[], 2)), vec![bp(&[2], 2)]);
        assert_eq!(k_pieri(2, &bp(&[], 4)), vec![bp(&[2], 4)]);
    }

    #[test]
    fn pieri_routes_agree_exhaustively() {
        for k in 1..=3usize {
            for size in 0..=6u32 {
                for shape in crate::enumerate::partitions_bounded(size, k as u32) {
                    let lambda = BoundedPartition::new(shape, k);
                    for r in 1..=k {
                        assert_eq!(
                            k_pieri_words(r, &lambda),
                            k_pieri_strips(r, &lambda),
                            "k={k}, r={r}, λ={:?}",
                            lambda.shape()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn apply_examples() {
        let h1 = ncsf::h(1, 3);
        let from_vacuum = apply(&h1, &bp(&[], 3));
        assert_eq!(from_vacuum.coeff(&p(&[1])), BigInt::from(1));
        assert_eq!(from_vacuum.num_terms(), 1);

        let p2 = ncsf::p(2, 3);
        let exp = apply(&p2, &bp(&[], 3));
        assert_eq!(exp.coeff(&p(&[2])), BigInt::from(1));
        assert_eq!(exp.coeff(&p(&[1, 1])), BigInt::from(-1));
        assert_eq!(exp.num_terms(), 2);

        let id = AlgebraElement::identity(3);
        let fixed = apply(&id, &bp(&[2, 1], 3));
        assert_eq!(fixed, KSchurExpansion::single(&bp(&[2, 1], 3)));
    }

    #[test]
    fn ribbon_examples() {
        let ribbons = k_ribbons(&bp(&[], 3), 2);
        assert_eq!(ribbons.len(), 2);
        let summary: Vec<(Partition, u32)> = ribbons
            .iter()
            .map(|r| (r.outer.shape().clone(), r.height))
            .collect();
        assert!(summary.contains(&(p(&[2]), 0)));
        assert!(summary.contains(&(p(&[1, 1]), 1)));

        let single = k_ribbons(&bp(&[], 2), 1);
        assert_eq!(single.len(), 1);
        assert_eq!(single[0].outer.shape(), &p(&[1]));
        assert_eq!(single[0].height, 0);
    }

    #[test]
    fn mn_forms_at_vacuum() {
        let ribbons = mn_ribbons(2, &bp(&[], 3));
        let words = mn_words(2, &bp(&[], 3));
        assert_eq!(ribbons, words);
        assert_eq!(ribbons.coeff(&p(&[2])), BigInt::from(1));
        assert_eq!(ribbons.coeff(&p(&[1, 1])), BigInt::from(-1));
    }

    #[test]
    fn mn_r1_is_pieri() {
        for k in 1..=3usize {
            for size in 0..=5u32 {
                for shape in crate::enumerate::partitions_bounded(size, k as u32) {
                    let lambda = BoundedPartition::new(shape, k);
                    let mn = mn_ribbons(1, &lambda);
                    let mut pieri = KSchurExpansion::zero(k);
                    for mu in k_pieri(1, &lambda) {
                        pieri.add_term(mu.shape().clone(), BigInt::one());
                    }
                    assert_eq!(mn, pieri);
                }
            }
        }
    }

    #[test]
    fn cross_checked_ribbons_at_k2() {
        // λ=(1), r=2, k=2: the exact set is fixed by the word form.
        let lambda = bp(&[1], 2);
        let ribbons = mn_ribbons(2, &lambda);
        let words = mn_words(2, &lambda);
        assert_eq!(ribbons, words);
        assert_eq!(ribbons, apply(&ncsf::p(2, 2), &lambda));
    }

    #[test]
    fn classical_examples() {
        assert_eq!(classical_mn(1, &Partition::empty()), vec![(p(&[1]), 0)]);

        let hooks = classical_mn(3, &Partition::empty());
        assert_eq!(
            hooks,
            vec![(p(&[1, 1, 1]), 2), (p(&[2, 1]), 1), (p(&[3]), 0)]
        );

        let strips = classical_mn(2, &p(&[2]));
        assert_eq!(
            strips,
            vec![(p(&[2, 1, 1]), 1), (p(&[2, 2]), 0), (p(&[4]), 0)]
        );
    }

    #[test]
    fn transition_matrix_k2_n3() {
        let m = h_to_kschur_matrix(2, 3);
        let names: Vec<String> = m.index.iter().map(|p| p.to_string()).collect();
        assert_eq!(names, vec!["1,1,1", "2,1"]);
        assert_eq!(m.rows[0], vec![BigInt::from(1), BigInt::from(1)]);
        assert_eq!(m.rows[1], vec![BigInt::from(0), BigInt::from(1)]);
    }

    #[test]
    fn transition_matrix_unitriangular() {
        for k in 1..=4usize {
            for n in 1..=6u32 {
                let m = h_to_kschur_matrix(k, n);
                for (i, row) in m.rows.iter().enumerate() {
                    assert_eq!(row[i], BigInt::one(), "diagonal at k={k}, n={n}");
                    for j in 0..i {
                        assert!(row[j].is_zero(), "lower entry at k={k}, n={n}");
                    }
                }
            }
        }
    }
}
