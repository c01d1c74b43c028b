//! Noncommutative symmetric functions inside the group algebra of 𝒜_k: the
//! homogeneous and elementary families h_r and e_r as sums of cyclically
//! decreasing/increasing elements, hook Schur functions, and power sums.
//!
//! Hook Schur functions and power sums each have two constructions (an
//! alternating product formula and a hook-word sum) whose agreement is a
//! theorem; debug builds compute both and assert equality, release builds
//! compute only the cheaper route. Both routes stay public so the
//! verification suite can compare them at any time.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::nilcoxeter::{
    cyclically_decreasing, cyclically_increasing, enumerate_hook_words, AffineElement,
};

/// An integer-linear combination of affine nilCoxeter monomials, tagged with
/// its rank k; combining elements of different rank is a hard error.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgebraElement {
    k: usize,
    terms: BTreeMap<AffineElement, BigInt>,
}

impl AlgebraElement {
    pub fn zero(k: usize) -> Self {
        AlgebraElement {
            k,
            terms: BTreeMap::new(),
        }
    }

    /// The identity monomial with coefficient one.
    pub fn identity(k: usize) -> Self {
        Self::monomial(AffineElement::identity(k), BigInt::one())
    }

    pub fn monomial(element: AffineElement, coeff: BigInt) -> Self {
        let k = element.k();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(element, coeff);
        }
        AlgebraElement { k, terms }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, element: &AffineElement) -> BigInt {
        self.terms.get(element).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&AffineElement, &BigInt)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, element: AffineElement, coeff: BigInt) {
        assert_eq!(self.k, element.k(), "rank mismatch between algebra elements");
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(element) {
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

    pub fn scaled(&self, factor: &BigInt) -> Self {
        if factor.is_zero() {
            return Self::zero(self.k);
        }
        AlgebraElement {
            k: self.k,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c * factor))
                .collect(),
        }
    }
}

impl Add for &AlgebraElement {
    type Output = AlgebraElement;

    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        assert_eq!(self.k, rhs.k, "rank mismatch between algebra elements");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &AlgebraElement {
    type Output = AlgebraElement;

    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        assert_eq!(self.k, rhs.k, "rank mismatch between algebra elements");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &AlgebraElement {
    type Output = AlgebraElement;

    /// Bilinear extension of the monomial product with nil annihilation.
    fn mul(self, rhs: &AlgebraElement) -> AlgebraElement {
        assert_eq!(self.k, rhs.k, "rank mismatch between algebra elements");
        let mut out = AlgebraElement::zero(self.k);
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                if let Some(prod) = a.product(b) {
                    out.add_term(prod, ca * cb);
                }
            }
        }
        out
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut entries: Vec<(Vec<usize>, &BigInt)> = self
            .terms
            .iter()
            .map(|(e, c)| (e.lex_least_reduced_word(), c))
            .collect();
        entries.sort();
        for (idx, (word, coeff)) in entries.iter().enumerate() {
            let sign = if coeff.is_negative() { "-" } else { "+" };
            if idx > 0 || coeff.is_negative() {
                write!(f, "{sign} ")?;
            }
            let mag = coeff.abs();
            if !mag.is_one() || word.is_empty() {
                write!(f, "{mag}")?;
            }
            let letters: Vec<String> = word.iter().map(|i| format!("u{i}")).collect();
            write!(f, "{}", letters.join(" "))?;
            if idx + 1 < entries.len() {
                write!(f, " ")?;
            }
        }
        Ok(())
    }
}

fn subsets_of_size(k: usize, r: usize) -> Vec<std::collections::BTreeSet<usize>> {
    let n = k + 1;
    let mut out = Vec::new();
    for mask in 0u64..(1 << n) {
        if mask.count_ones() as usize == r {
            out.push((0..n).filter(|&i| mask >> i & 1 == 1).collect());
        }
    }
    out
}

/// h_r = Σ_A u_A^dec over r-subsets A of [0,k]; h_0 is the identity.
pub fn h(r: usize, k: usize) -> AlgebraElement {
    assert!(r <= k, "h_r requires 0 ≤ r ≤ k, got r={r}, k={k}");
    if r == 0 {
        return AlgebraElement::identity(k);
    }
    let mut out = AlgebraElement::zero(k);
    for a in subsets_of_size(k, r) {
        out.add_term(cyclically_decreasing(&a, k), BigInt::one());
    }
    out
}

/// e_r = Σ_A u_A^inc over r-subsets A of [0,k]; e_0 is the identity.
pub fn e(r: usize, k: usize) -> AlgebraElement {
    assert!(r <= k, "e_r requires 0 ≤ r ≤ k, got r={r}, k={k}");
    if r == 0 {
        return AlgebraElement::identity(k);
    }
    let mut out = AlgebraElement::zero(k);
    for a in subsets_of_size(k, r) {
        out.add_term(cyclically_increasing(&a, k), BigInt::one());
    }
    out
}

/// Hook Schur function via the alternating sum
/// s_{(r−i,1^i)} = h_{r−i}e_i − h_{r−i+1}e_{i−1} + … + (−1)^i h_r.
pub fn hook_schur_alternating(r: usize, i: usize, k: usize) -> AlgebraElement {
    assert!(i < r && r <= k, "hook shape requires 0 ≤ i < r ≤ k, got r={r}, i={i}, k={k}");
    let mut out = AlgebraElement::zero(k);
    let mut sign = BigInt::one();
    for j in 0..=i {
        let prod = &h(r - i + j, k) * &e(i - j, k);
        out = &out + &prod.scaled(&sign);
        sign = -sign;
    }
    out
}

/// Hook Schur function as the sum of all length-r reduced hook words with
/// exactly i ascents, each word contributing its monomial.
pub fn hook_schur_from_words(r: usize, i: usize, k: usize) -> AlgebraElement {
    assert!(i < r && r <= k, "hook shape requires 0 ≤ i < r ≤ k, got r={r}, i={i}, k={k}");
    let mut out = AlgebraElement::zero(k);
    for (word, asc) in enumerate_hook_words(k, r, false) {
        if asc == i {
            let elem = crate::nilcoxeter::element_from_word(&word, k)
                .expect("enumerated hook words are reduced");
            out.add_term(elem, BigInt::one());
        }
    }
    out
}

/// The hook Schur function s_{(r−i,1^i)}; both constructions agree, which is
/// asserted in debug builds.
pub fn hook_schur(r: usize, i: usize, k: usize) -> AlgebraElement {
    let out = hook_schur_alternating(r, i, k);
    debug_assert_eq!(
        out,
        hook_schur_from_words(r, i, k),
        "hook Schur constructions disagree for r={r}, i={i}, k={k}"
    );
    out
}

/// Power sum via p_r = Σ_{i=0}^{r−1} (−1)^i s_{(r−i,1^i)}.
pub fn p_alternating(r: usize, k: usize) -> AlgebraElement {
    assert!(r >= 1 && r <= k, "p_r requires 1 ≤ r ≤ k, got r={r}, k={k}");
    let mut out = AlgebraElement::zero(k);
    let mut sign = BigInt::one();
    for i in 0..r {
        out = &out + &hook_schur_alternating(r, i, k).scaled(&sign);
        sign = -sign;
    }
    out
}

/// Power sum as the signed sum over length-r reduced hook words; the words
/// not supported on an interval cancel, so the connected-only restriction
/// changes nothing (tested, not assumed).
pub fn p_from_words(r: usize, k: usize, connected_only: bool) -> AlgebraElement {
    assert!(r >= 1 && r <= k, "p_r requires 1 ≤ r ≤ k, got r={r}, k={k}");
    let mut out = AlgebraElement::zero(k);
    for (word, asc) in enumerate_hook_words(k, r, connected_only) {
        let elem = crate::nilcoxeter::element_from_word(&word, k)
            .expect("enumerated hook words are reduced");
        let coeff = if asc % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        out.add_term(elem, coeff);
    }
    out
}

/// The noncommutative power sum p_r.
pub fn p(r: usize, k: usize) -> AlgebraElement {
    let out = p_from_words(r, k, true);
    debug_assert_eq!(
        out,
        p_alternating(r, k),
        "power sum constructions disagree for r={r}, k={k}"
    );
    out
}
