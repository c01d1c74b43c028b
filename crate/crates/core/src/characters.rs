//! Character tables of the k-Schur Murnaghan–Nakayama rule: the signed
//! ribbon-tableau counts χ, the dual values χ̃ obtained by exact rational
//! linear algebra on the unitriangular h-to-k-Schur matrix, z_λ, the
//! classical h→p transition, and the condition-(2) superfluousness
//! experiment.
//!
//! χ̃ never touches floating point: the transition matrix is inverted over
//! the integers by back substitution, pushed to the power-sum basis over
//! exact rationals, and every table entry carries a hard integrality check.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::cores::BoundedPartition;
use crate::enumerate::{bounded_partitions, bounded_partitions_up_to, partitions, partitions_containing, partitions_inside};
use crate::kschur::{h_to_kschur_matrix, is_k_ribbon, KRibbon, KSchurExpansion};
use crate::ncsf;
use crate::partition::Partition;

/// Centralizer size z_λ = Π_i i^{m_i} m_i! over part multiplicities.
pub fn z(lambda: &Partition) -> BigInt {
    let mut out = BigInt::one();
    let mut mult: BTreeMap<u32, u32> = BTreeMap::new();
    for &part in lambda.parts() {
        *mult.entry(part).or_insert(0) += 1;
    }
    for (part, m) in mult {
        out *= BigInt::from(part).pow(m);
        for f in 1..=m {
            out *= BigInt::from(f);
        }
    }
    out
}

/// A rational linear combination of power sums p_λ.
pub type PowerExpansion = BTreeMap<Partition, BigRational>;

fn power_product(a: &PowerExpansion, b: &PowerExpansion) -> PowerExpansion {
    let mut out = PowerExpansion::new();
    for (rho, c1) in a {
        for (sigma, c2) in b {
            let mut parts: Vec<u32> = rho.parts().to_vec();
            parts.extend_from_slice(sigma.parts());
            parts.sort_unstable_by(|x, y| y.cmp(x));
            let merged = Partition::new(parts);
            let entry = out.entry(merged).or_insert_with(BigRational::zero);
            *entry += c1 * c2;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Classical expansion h_r = Σ_{ρ⊢r} p_ρ / z_ρ.
fn h_part_to_p(r: u32) -> PowerExpansion {
    let mut out = PowerExpansion::new();
    for rho in partitions(r) {
        let inv_z = BigRational::new(BigInt::one(), z(&rho));
        out.insert(rho, inv_z);
    }
    out
}

/// Expansion of h_μ = h_{μ₁}…h_{μ_ℓ} in the power-sum basis.
pub fn h_to_p(mu: &Partition) -> PowerExpansion {
    let mut out = PowerExpansion::new();
    out.insert(Partition::empty(), BigRational::one());
    for &part in mu.parts() {
        out = power_product(&out, &h_part_to_p(part));
    }
    out
}

/// A k-ribbon tableau of the given shape and type: the ribbons r_1,…,r_ℓ in
/// label order, each of size weight_i, with partial shapes forming partitions.
#[derive(Clone, Debug)]
pub struct RibbonTableau {
    pub shape: BoundedPartition,
    pub weight: BoundedPartition,
    pub ribbons: Vec<KRibbon>,
}

impl RibbonTableau {
    pub fn sign(&self) -> BigInt {
        let height: u32 = self.ribbons.iter().map(|r| r.height).sum();
        if height % 2 == 0 {
            BigInt::one()
        } else {
            -BigInt::one()
        }
    }
}

/// All k-ribbon tableaux of the given shape and type, built by peeling the
/// largest label first.
pub fn ribbon_tableaux(shape: &BoundedPartition, weight: &BoundedPartition) -> Vec<RibbonTableau> {
    assert_eq!(shape.k(), weight.k(), "rank mismatch");
    if shape.size() != weight.size() {
        return Vec::new();
    }
    let k = shape.k();
    let mut out = Vec::new();
    let mut chain: Vec<KRibbon> = Vec::new();
    peel(shape, weight, weight.shape().len(), k, &mut chain, &mut out);
    out
}

fn peel(
    current: &BoundedPartition,
    weight: &BoundedPartition,
    label: usize,
    k: usize,
    chain: &mut Vec<KRibbon>,
    out: &mut Vec<RibbonTableau>,
) {
    if label == 0 {
        debug_assert!(current.shape().is_empty());
        let mut ribbons = chain.clone();
        ribbons.reverse();
        out.push(RibbonTableau {
            shape: chain
                .first()
                .map(|r| r.outer.clone())
                .unwrap_or_else(|| BoundedPartition::new(Partition::empty(), k)),
            weight: weight.clone(),
            ribbons,
        });
        return;
    }
    let r = weight.shape().part(label);
    for inner_shape in partitions_inside(current.shape(), current.size() - r) {
        let inner = BoundedPartition::new(inner_shape, k);
        if let Some(height) = is_k_ribbon(current, &inner, true) {
            chain.push(KRibbon {
                outer: current.clone(),
                inner: inner.clone(),
                height,
            });
            peel(&inner, weight, label - 1, k, chain, out);
            chain.pop();
        }
    }
}

/// χ^{(k)}_{λ,ν} as the signed count of k-ribbon tableaux, by memoized
/// peeling of the largest label.
pub fn chi_via_tableaux(k: usize, lambda: &Partition, nu: &Partition) -> BigInt {
    assert_eq!(lambda.size(), nu.size(), "χ requires |λ| = |ν|");
    assert!(lambda.first_part() as usize <= k && nu.first_part() as usize <= k);
    let mut memo: HashMap<(Partition, usize), BigInt> = HashMap::new();
    chi_peel(k, lambda, nu, nu.len(), &mut memo)
}

fn chi_peel(
    k: usize,
    shape: &Partition,
    nu: &Partition,
    label: usize,
    memo: &mut HashMap<(Partition, usize), BigInt>,
) -> BigInt {
    if label == 0 {
        return if shape.is_empty() {
            BigInt::one()
        } else {
            BigInt::zero()
        };
    }
    if let Some(hit) = memo.get(&(shape.clone(), label)) {
        return hit.clone();
    }
    let r = nu.part(label);
    let outer = BoundedPartition::new(shape.clone(), k);
    let mut acc = BigInt::zero();
    if shape.size() >= r {
        for inner_shape in partitions_inside(shape, shape.size() - r) {
            let inner = BoundedPartition::new(inner_shape.clone(), k);
            if let Some(height) = is_k_ribbon(&outer, &inner, true) {
                let sub = chi_peel(k, &inner_shape, nu, label - 1, memo);
                if height % 2 == 0 {
                    acc += sub;
                } else {
                    acc -= sub;
                }
            }
        }
    }
    memo.insert((shape.clone(), label), acc.clone());
    acc
}

/// χ^{(k)}_{λ,ν} as the coefficient of s_λ^{(k)} in p_{ν_ℓ}…p_{ν_1}·1.
pub fn chi_via_power_sums(k: usize, lambda: &Partition, nu: &Partition) -> BigInt {
    assert_eq!(lambda.size(), nu.size(), "χ requires |λ| = |ν|");
    assert!(lambda.first_part() as usize <= k && nu.first_part() as usize <= k);
    power_sum_column(k, nu).coeff(lambda)
}

/// The full expansion p_ν·1, one column of the χ table.
fn power_sum_column(k: usize, nu: &Partition) -> KSchurExpansion {
    let mut expansion = KSchurExpansion::vacuum(k);
    for &part in nu.parts().iter().rev() {
        expansion = expansion.apply(&ncsf::p(part as usize, k));
    }
    expansion
}

/// χ^{(k)}_{λ,ν}; the tableau count and the power-sum coefficient agree
/// (asserted in debug builds, re-checked by the verification suite).
pub fn chi(k: usize, lambda: &Partition, nu: &Partition) -> BigInt {
    let out = chi_via_tableaux(k, lambda, nu);
    debug_assert_eq!(
        out,
        chi_via_power_sums(k, lambda, nu),
        "χ routes disagree at k={k}, λ={lambda}, ν={nu}"
    );
    out
}

/// A square character table over the k-bounded partitions of n in table
/// order; rows are λ (the k-Schur index), columns are ν (the type for χ, the
/// power-sum index for χ̃).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CharTable {
    pub k: usize,
    pub n: u32,
    pub index: Vec<Partition>,
    pub entries: Vec<Vec<BigInt>>,
}

impl CharTable {
    pub fn entry(&self, row: &Partition, col: &Partition) -> Option<&BigInt> {
        let r = self.index.iter().position(|p| p == row)?;
        let c = self.index.iter().position(|p| p == col)?;
        Some(&self.entries[r][c])
    }
}

/// The table of χ^{(k)}_{λ,ν} over 𝒫^{(k)}_n.
pub fn chi_table(k: usize, n: u32) -> CharTable {
    let index = bounded_partitions(k as u32, n);
    let mut entries = vec![vec![BigInt::zero(); index.len()]; index.len()];
    for (col, nu) in index.iter().enumerate() {
        let expansion = power_sum_column(k, nu);
        for (row, lambda) in index.iter().enumerate() {
            entries[row][col] = expansion.coeff(lambda);
            debug_assert_eq!(
                entries[row][col],
                chi_via_tableaux(k, lambda, nu),
                "χ routes disagree at k={k}, λ={lambda}, ν={nu}"
            );
        }
    }
    CharTable { k, n, index, entries }
}

/// Inverse of an upper unitriangular integer matrix, by back substitution;
/// exact and integral.
fn invert_unitriangular(rows: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let m = rows.len();
    let mut inv = vec![vec![BigInt::zero(); m]; m];
    for i in 0..m {
        inv[i][i] = BigInt::one();
        for j in (i + 1)..m {
            let mut acc = BigInt::zero();
            for t in i..j {
                acc += &inv[i][t] * &rows[t][j];
            }
            inv[i][j] = -acc;
        }
    }
    inv
}

/// The expansions of every s_ν^{(k)}, ν ⊢ n, in the power-sum basis,
/// obtained by integral inversion of the h-to-k-Schur matrix followed by the
/// classical h→p transition.
fn kschur_to_p(k: usize, n: u32) -> (Vec<Partition>, Vec<PowerExpansion>) {
    let m = h_to_kschur_matrix(k, n);
    let inv = invert_unitriangular(&m.rows);
    let h_expansions: Vec<PowerExpansion> = m.index.iter().map(h_to_p).collect();
    let mut out = Vec::with_capacity(m.index.len());
    for row in &inv {
        let mut acc = PowerExpansion::new();
        for (coeff, hp) in row.iter().zip(&h_expansions) {
            if coeff.is_zero() {
                continue;
            }
            let c = BigRational::from_integer(coeff.clone());
            for (rho, v) in hp {
                let entry = acc.entry(rho.clone()).or_insert_with(BigRational::zero);
                *entry += &c * v;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        out.push(acc);
    }
    (m.index, out)
}

/// χ̃^{(k)}_{ν,λ} = z_λ · (coefficient of p_λ in s_ν^{(k)}); always integral.
pub fn chi_tilde(k: usize, nu: &Partition, lambda: &Partition) -> BigInt {
    assert_eq!(lambda.size(), nu.size(), "χ̃ requires |λ| = |ν|");
    let table = chi_tilde_table(k, nu.size());
    table
        .entry(nu, lambda)
        .expect("both partitions are k-bounded of size n")
        .clone()
}

/// The table of χ̃^{(k)}_{ν,λ}: rows are the k-Schur index ν, columns the
/// power-sum index λ.
pub fn chi_tilde_table(k: usize, n: u32) -> CharTable {
    let (index, expansions) = kschur_to_p(k, n);
    let z_values: Vec<BigInt> = index.iter().map(z).collect();
    let mut entries = vec![vec![BigInt::zero(); index.len()]; index.len()];
    for (row, exp) in expansions.iter().enumerate() {
        for (col, lambda) in index.iter().enumerate() {
            if let Some(coeff) = exp.get(lambda) {
                let scaled = coeff * BigRational::from_integer(z_values[col].clone());
                assert!(
                    scaled.is_integer(),
                    "χ̃ entry is not integral at k={k}, ν={}, λ={lambda}",
                    index[row]
                );
                entries[row][col] = scaled.to_integer();
            }
        }
    }
    CharTable { k, n, index, entries }
}

/// Σ_λ χ_{λ,ν} χ̃_{λ,μ} = z_ν δ_{νμ}; returns the offending triple on failure.
pub fn orthogonality_failure(k: usize, n: u32) -> Option<(Partition, Partition, BigInt)> {
    let a = chi_table(k, n);
    let b = chi_tilde_table(k, n);
    let m = a.index.len();
    for nu_idx in 0..m {
        for mu_idx in 0..m {
            let mut acc = BigInt::zero();
            for lam in 0..m {
                acc += &a.entries[lam][nu_idx] * &b.entries[lam][mu_idx];
            }
            let want = if nu_idx == mu_idx {
                z(&a.index[nu_idx])
            } else {
                BigInt::zero()
            };
            if acc != want {
                return Some((a.index[nu_idx].clone(), a.index[mu_idx].clone(), acc));
            }
        }
    }
    None
}

/// One candidate accepted without the ribbon condition that fails it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjectureDiscrepancy {
    pub k: usize,
    pub r: usize,
    pub inner: Partition,
    pub outer: Partition,
}

#[derive(Clone, Debug)]
pub struct ConjectureReport {
    pub k_max: usize,
    pub n_max: u32,
    pub accepted_without_condition: u64,
    pub discrepancies: Vec<ConjectureDiscrepancy>,
}

/// Re-runs the k-ribbon acceptance with condition (2) disabled and reports
/// every pair that condition (2) would have rejected. The published check
/// found none for k, r ≤ 11 and n ≤ 12; an empty list here is consistency,
/// a nonempty one is a finding rather than an error.
pub fn conjecture_experiment(k_max: usize, n_max: u32) -> ConjectureReport {
    let mut accepted = 0u64;
    let mut discrepancies = Vec::new();
    for k in 1..=k_max {
        for lambda_shape in bounded_partitions_up_to(k as u32, n_max) {
            let lambda = BoundedPartition::new(lambda_shape, k);
            for r in 1..=k {
                let size = lambda.size() + r as u32;
                for outer_shape in partitions_containing(lambda.shape(), size, k as u32) {
                    let outer = BoundedPartition::new(outer_shape, k);
                    if is_k_ribbon(&outer, &lambda, false).is_some() {
                        accepted += 1;
                        if is_k_ribbon(&outer, &lambda, true).is_none() {
                            discrepancies.push(ConjectureDiscrepancy {
                                k,
                                r,
                                inner: lambda.shape().clone(),
                                outer: outer.shape().clone(),
                            });
                        }
                    }
                }
            }
        }
    }
    ConjectureReport {
        k_max,
        n_max,
        accepted_without_condition: accepted,
        discrepancies,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn z_examples() {
        assert_eq!(z(&p(&[1, 1, 1])), BigInt::from(6));
        assert_eq!(z(&p(&[2, 1])), BigInt::from(2));
        assert_eq!(z(&p(&[2, 2, 1])), BigInt::from(8));
        assert_eq!(z(&Partition::empty()), BigInt::one());
    }

    #[test]
    fn h_to_p_examples() {
        let half = BigRational::new(BigInt::one(), BigInt::from(2));

        let h1 = h_to_p(&p(&[1]));
        assert_eq!(h1.len(), 1);
        assert_eq!(h1[&p(&[1])], BigRational::one());

        let h2 = h_to_p(&p(&[2]));
        assert_eq!(h2[&p(&[2])], half);
        assert_eq!(h2[&p(&[1, 1])], half);

        let h21 = h_to_p(&p(&[2, 1]));
        assert_eq!(h21[&p(&[2, 1])], half);
        assert_eq!(h21[&p(&[1, 1, 1])], half);
        assert_eq!(h21.len(), 2);
    }

    #[test]
    fn chi_published_entries() {
        assert_eq!(chi(2, &p(&[2, 1, 1]), &p(&[2, 1, 1])), BigInt::zero());
        assert_eq!(chi(3, &p(&[2, 2, 1, 1]), &p(&[2, 2, 2])), BigInt::from(-4));
        assert_eq!(chi(2, &p(&[2, 1, 1]), &p(&[1, 1, 1, 1])), BigInt::from(2));
    }

    #[test]
    fn chi_routes_agree() {
        for k in 2..=3usize {
            for n in 1..=5u32 {
                let index = bounded_partitions(k as u32, n);
                for lambda in &index {
                    for nu in &index {
                        assert_eq!(
                            chi_via_tableaux(k, lambda, nu),
                            chi_via_power_sums(k, lambda, nu),
                            "k={k}, λ={lambda}, ν={nu}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn chi_table_small() {
        let t = chi_table(2, 3);
        assert_eq!(t.index, vec![p(&[1, 1, 1]), p(&[2, 1])]);
        assert_eq!(
            t.entries,
            vec![
                vec![BigInt::from(1), BigInt::from(-1)],
                vec![BigInt::from(1), BigInt::from(1)],
            ]
        );
    }

    #[test]
    fn chi_tilde_published_entries() {
        assert_eq!(chi_tilde(2, &p(&[1, 1, 1]), &p(&[1, 1, 1])), BigInt::from(3));
        assert_eq!(chi_tilde(2, &p(&[1, 1, 1]), &p(&[2, 1])), BigInt::from(-1));
        assert_eq!(chi_tilde(4, &p(&[3, 2, 1]), &p(&[2, 2, 1, 1])), BigInt::one());
    }

    #[test]
    fn chi_tilde_table_small() {
        let t = chi_tilde_table(2, 5);
        let want: Vec<Vec<i64>> = vec![vec![30, -6, 2], vec![30, 0, -2], vec![30, 6, 2]];
        for (row, wrow) in t.entries.iter().zip(&want) {
            let got: Vec<i64> = row.iter().map(|x| i64::try_from(x).unwrap()).collect();
            assert_eq!(&got, wrow);
        }
    }

    #[test]
    fn orthogonality_small() {
        for k in 1..=3usize {
            for n in 1..=5u32 {
                assert_eq!(orthogonality_failure(k, n), None, "k={k}, n={n}");
            }
        }
    }

    #[test]
    fn ribbon_tableaux_match_chi() {
        for k in 2..=3usize {
            for n in 1..=4u32 {
                let index = bounded_partitions(k as u32, n);
                for lambda in &index {
                    for nu in &index {
                        let shape = BoundedPartition::new(lambda.clone(), k);
                        let weight = BoundedPartition::new(nu.clone(), k);
                        let tableaux = ribbon_tableaux(&shape, &weight);
                        let total: BigInt =
                            tableaux.iter().map(|t| t.sign()).sum();
                        assert_eq!(total, chi(k, lambda, nu));
                        for t in &tableaux {
                            // Partial shapes are partitions and every strip
                            // is a k-ribbon of the labeled size.
                            for (i, ribbon) in t.ribbons.iter().enumerate() {
                                assert_eq!(
                                    ribbon.outer.size() - ribbon.inner.size(),
                                    weight.shape().part(i + 1)
                                );
                                assert!(is_k_ribbon(&ribbon.outer, &ribbon.inner, true).is_some());
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn conjecture_tiny() {
        let report = conjecture_experiment(1, 1);
        assert!(report.discrepancies.is_empty());
        let report = conjecture_experiment(2, 4);
        assert!(report.discrepancies.is_empty());
    }
}
