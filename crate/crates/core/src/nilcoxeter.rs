//! The affine nilCoxeter algebra 𝒜_k on generators u_0,…,u_k with u_i² = 0,
//! the braid relations, and commutation of non-adjacent indices (mod k+1).
//!
//! Elements are kept in canonical form as affine-permutation windows: a
//! window is the value sequence (π(1),…,π(k+1)) of a bijection π of ℤ with
//! π(i+k+1) = π(i)+k+1 and Σ(π(i)−i) = 0. Multiplying by a generator either
//! raises the length by one or annihilates, which gives constant-size
//! equality tests with no word rewriting.
//!
//! Words are plain `Vec<usize>` letter sequences over [0,k], leftmost letter
//! first; under the action on cores the rightmost letter acts first.

use std::collections::{BTreeSet, HashSet, VecDeque};

pub type Word = Vec<usize>;

/// An element of the affine symmetric group carrying a nilCoxeter monomial.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct AffineElement {
    window: Vec<i64>,
    len: u32,
}

impl AffineElement {
    pub fn identity(k: usize) -> Self {
        assert!(k >= 1, "k must be at least 1");
        AffineElement {
            window: (1..=k as i64 + 1).collect(),
            len: 0,
        }
    }

    pub fn k(&self) -> usize {
        self.window.len() - 1
    }

    fn n(&self) -> i64 {
        self.window.len() as i64
    }

    pub fn len(&self) -> u32 {
        self.len
    }

    pub fn is_identity(&self) -> bool {
        self.len == 0
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    /// Affine inversion number of a window; the cached length always equals
    /// this (checked in tests, relied on everywhere else).
    pub fn inversion_number(&self) -> u32 {
        let n = self.n();
        let w = &self.window;
        let mut total = 0i64;
        for a in 0..w.len() {
            for b in (a + 1)..w.len() {
                total += (w[b] - w[a]).div_euclid(n).abs();
            }
        }
        total as u32
    }

    /// Right product with u_i; `None` when the length would drop (nil).
    pub fn right_mul(&self, i: usize) -> Option<Self> {
        let k = self.k();
        assert!(i <= k, "generator index {i} out of range for k={k}");
        let n = self.n();
        let mut w = self.window.clone();
        if i == 0 {
            if w[k] - n >= w[0] {
                return None;
            }
            let first = w[0];
            w[0] = w[k] - n;
            w[k] = first + n;
        } else {
            if w[i - 1] >= w[i] {
                return None;
            }
            w.swap(i - 1, i);
        }
        Some(AffineElement {
            window: w,
            len: self.len + 1,
        })
    }

    /// Position x with π(x) = v, from the window entry congruent to v mod n.
    fn preimage(&self, v: i64) -> i64 {
        let n = self.n();
        for (j, &entry) in self.window.iter().enumerate() {
            if (entry - v).rem_euclid(n) == 0 {
                return j as i64 + 1 + (v - entry);
            }
        }
        unreachable!("window entries cover all residues");
    }

    /// True when u has a reduced word starting with the letter i.
    pub fn has_left_descent(&self, i: usize) -> bool {
        self.preimage(i as i64) > self.preimage(i as i64 + 1)
    }

    /// Left product with u_i; `None` when the length would drop.
    pub fn left_mul(&self, i: usize) -> Option<Self> {
        if self.has_left_descent(i) {
            return None;
        }
        Some(self.left_apply(i, 1))
    }

    /// Strips a left descent: returns s_i·u of length len−1.
    fn strip_left(&self, i: usize) -> Self {
        debug_assert!(self.has_left_descent(i));
        self.left_apply(i, -1)
    }

    fn left_apply(&self, i: usize, delta: i32) -> Self {
        let n = self.n();
        let lo = i as i64 % n;
        let hi = (i as i64 + 1) % n;
        let window = self
            .window
            .iter()
            .map(|&v| {
                if v.rem_euclid(n) == lo {
                    v + 1
                } else if v.rem_euclid(n) == hi {
                    v - 1
                } else {
                    v
                }
            })
            .collect();
        AffineElement {
            window,
            len: (self.len as i64 + delta as i64) as u32,
        }
    }

    /// Group-algebra monomial product; `None` when lengths do not add.
    pub fn product(&self, other: &Self) -> Option<Self> {
        assert_eq!(self.k(), other.k(), "rank mismatch in product");
        let n = self.n();
        let window: Vec<i64> = other
            .window
            .iter()
            .map(|&v| {
                let idx = (v - 1).rem_euclid(n);
                let shift = v - 1 - idx;
                self.window[idx as usize] + shift
            })
            .collect();
        let composed = AffineElement { window, len: 0 };
        let len = composed.inversion_number();
        if len != self.len + other.len {
            return None;
        }
        Some(AffineElement {
            window: composed.window,
            len,
        })
    }

    /// Letters appearing in any reduced word of u.
    pub fn support(&self) -> BTreeSet<usize> {
        self.lex_least_reduced_word().into_iter().collect()
    }

    pub fn left_descents(&self) -> Vec<usize> {
        (0..=self.k()).filter(|&i| self.has_left_descent(i)).collect()
    }

    /// The lexicographically least reduced word, built greedily from left
    /// descents; this is the canonical word used for display and actions.
    pub fn lex_least_reduced_word(&self) -> Word {
        let mut word = Vec::with_capacity(self.len as usize);
        let mut cur = self.clone();
        while !cur.is_identity() {
            let i = (0..=cur.k())
                .find(|&i| cur.has_left_descent(i))
                .expect("a nonidentity element has a left descent");
            word.push(i);
            cur = cur.strip_left(i);
        }
        word
    }

    /// All reduced words of u, in lexicographic order.
    pub fn reduced_words(&self) -> Vec<Word> {
        if self.is_identity() {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for i in self.left_descents() {
            let rest = self.strip_left(i);
            for mut tail in rest.reduced_words() {
                tail.insert(0, i);
                out.push(tail);
            }
        }
        out
    }
}

/// Product of generators u_{w_1}···u_{w_m}; `None` iff the word is not reduced.
pub fn element_from_word(word: &[usize], k: usize) -> Option<AffineElement> {
    let mut cur = AffineElement::identity(k);
    for &letter in word {
        cur = cur.right_mul(letter)?;
    }
    Some(cur)
}

pub fn word_support(word: &[usize]) -> BTreeSet<usize> {
    word.iter().copied().collect()
}

/// The canonical total order on [0,k] \ {a}, where a is the smallest residue
/// (in integer order) missing from the given proper support.
#[derive(Clone, Copy, Debug)]
pub struct CanonicalOrder {
    cut: usize,
    modulus: usize,
}

impl CanonicalOrder {
    /// Panics when the support is all of [0,k].
    pub fn for_support(support: &BTreeSet<usize>, k: usize) -> Self {
        let cut = (0..=k)
            .find(|x| !support.contains(x))
            .expect("canonical interval requires a proper support");
        CanonicalOrder {
            cut,
            modulus: k + 1,
        }
    }

    /// Rank of x in the order cut+1 < cut+2 < … < cut−1 (indices mod k+1).
    pub fn position(&self, x: usize) -> usize {
        debug_assert!(x != self.cut, "cut point is outside the canonical order");
        (x + self.modulus - self.cut - 1) % self.modulus
    }

    pub fn le(&self, x: usize, y: usize) -> bool {
        self.position(x) <= self.position(y)
    }

    /// Whether the set occupies contiguous positions.
    pub fn is_interval(&self, s: &BTreeSet<usize>) -> bool {
        let mut pos: Vec<usize> = s.iter().map(|&x| self.position(x)).collect();
        pos.sort_unstable();
        pos.windows(2).all(|w| w[1] == w[0] + 1)
    }
}

/// Whether the word's support is an interval in its own canonical order.
pub fn is_word_k_connected(word: &[usize], k: usize) -> bool {
    let supp = word_support(word);
    assert!(supp.len() <= k, "k-connectedness requires a proper support");
    CanonicalOrder::for_support(&supp, k).is_interval(&supp)
}

/// Whether the element's support is an interval in its canonical order.
pub fn is_k_connected(u: &AffineElement) -> bool {
    let supp = u.support();
    assert!(
        supp.len() <= u.k(),
        "k-connectedness requires a proper support"
    );
    CanonicalOrder::for_support(&supp, u.k()).is_interval(&supp)
}

/// Tests the hook-word shape b_l > … > b_1 > a_1 ≤ … ≤ a_m in the canonical
/// order of the word's support; returns asc(w) = m − 1 on success.
pub fn hook_word_ascents(word: &[usize], k: usize) -> Option<usize> {
    if word.is_empty() {
        return None;
    }
    let supp = word_support(word);
    assert!(supp.len() <= k, "hook words require a proper support");
    let ord = CanonicalOrder::for_support(&supp, k);
    let mut start = word.len() - 1;
    while start > 0 && ord.le(word[start - 1], word[start]) {
        start -= 1;
    }
    let prefix = &word[..start];
    let decreasing = prefix
        .windows(2)
        .all(|w| ord.position(w[0]) > ord.position(w[1]));
    if decreasing {
        Some(word.len() - start - 1)
    } else {
        None
    }
}

fn sorted_by_position(set: &BTreeSet<usize>, ord: &CanonicalOrder) -> Vec<usize> {
    let mut v: Vec<usize> = set.iter().copied().collect();
    v.sort_by_key(|&x| ord.position(x));
    v
}

/// Cyclically decreasing word with the given proper support: whenever i and
/// i−1 both occur, i comes first.
pub fn cyclically_decreasing_word(support: &BTreeSet<usize>, k: usize) -> Word {
    let ord = CanonicalOrder::for_support(support, k);
    let mut w = sorted_by_position(support, &ord);
    w.reverse();
    w
}

pub fn cyclically_increasing_word(support: &BTreeSet<usize>, k: usize) -> Word {
    let ord = CanonicalOrder::for_support(support, k);
    sorted_by_position(support, &ord)
}

/// The element u_A^dec for a proper subset A.
pub fn cyclically_decreasing(support: &BTreeSet<usize>, k: usize) -> AffineElement {
    let word = cyclically_decreasing_word(support, k);
    element_from_word(&word, k).expect("cyclically decreasing words are reduced")
}

/// The element u_A^inc for a proper subset A.
pub fn cyclically_increasing(support: &BTreeSet<usize>, k: usize) -> AffineElement {
    let word = cyclically_increasing_word(support, k);
    element_from_word(&word, k).expect("cyclically increasing words are reduced")
}

/// All reduced hook words of length r over proper supports, paired with their
/// ascent counts; optionally restricted to k-connected supports. Distinct
/// words mapping to the same element are all retained.
pub fn enumerate_hook_words(k: usize, r: usize, connected_only: bool) -> Vec<(Word, usize)> {
    assert!(r >= 1 && r <= k, "hook-word length must satisfy 1 ≤ r ≤ k, got r={r}, k={k}");
    let mut out = Vec::new();
    for support in proper_subsets(k) {
        let size = support.len();
        if size == 0 || size > r || 2 * size < r {
            continue;
        }
        let ord = CanonicalOrder::for_support(&support, k);
        if connected_only && !ord.is_interval(&support) {
            continue;
        }
        let sorted = sorted_by_position(&support, &ord);
        // The minimum of the support always sits in the increasing suffix.
        let rest = &sorted[1..];
        let repeats = r - size;
        for mask in 0u32..(1 << rest.len()) {
            let prefix_set: Vec<usize> = rest
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &x)| x)
                .collect();
            if prefix_set.len() < repeats {
                continue;
            }
            // Letters used twice are chosen among the prefix letters.
            for extra_mask in submasks_of_size(prefix_set.len(), repeats) {
                let mut suffix: Vec<usize> = sorted
                    .iter()
                    .copied()
                    .filter(|x| !prefix_set.contains(x))
                    .collect();
                for (b, &x) in prefix_set.iter().enumerate() {
                    if extra_mask >> b & 1 == 1 {
                        suffix.push(x);
                    }
                }
                suffix.sort_by_key(|&x| ord.position(x));
                let mut word: Vec<usize> = prefix_set.clone();
                word.sort_by_key(|&x| std::cmp::Reverse(ord.position(x)));
                word.extend_from_slice(&suffix);
                if element_from_word(&word, k).is_some() {
                    let asc = suffix.len() - 1;
                    debug_assert_eq!(hook_word_ascents(&word, k), Some(asc));
                    out.push((word, asc));
                }
            }
        }
    }
    out.sort();
    out
}

fn proper_subsets(k: usize) -> Vec<BTreeSet<usize>> {
    let n = k + 1;
    let mut out = Vec::new();
    for mask in 0u64..(1 << n) - 1 {
        out.push((0..n).filter(|&i| mask >> i & 1 == 1).collect());
    }
    out
}

fn submasks_of_size(bits: usize, size: usize) -> Vec<u32> {
    let mut out = Vec::new();
    for mask in 0u32..(1 << bits) {
        if mask.count_ones() as usize == size {
            out.push(mask);
        }
    }
    out
}

/// The unique hook-shaped reduced word of a k-connected element, or the
/// lexicographically least one for a disconnected element (a convention; the
/// theorems only ever need the connected case). `None` when no reduced word
/// is a hook word. Panics on full support.
pub fn hook_factorize(u: &AffineElement) -> Option<(Word, usize)> {
    let k = u.k();
    let supp = u.support();
    assert!(supp.len() <= k, "hook factorization requires a proper support");
    let mut words = u.reduced_words();
    words.sort();
    words
        .into_iter()
        .find_map(|w| hook_word_ascents(&w, k).map(|asc| (w, asc)))
}

/// All elements of 𝒜_k of length at most `max_len`, by breadth-first search.
pub fn elements_up_to_length(k: usize, max_len: u32) -> Vec<AffineElement> {
    let mut seen: HashSet<AffineElement> = HashSet::new();
    let mut queue = VecDeque::new();
    let id = AffineElement::identity(k);
    seen.insert(id.clone());
    queue.push_back(id);
    while let Some(u) = queue.pop_front() {
        if u.len() == max_len {
            continue;
        }
        for i in 0..=k {
            if let Some(v) = u.right_mul(i) {
                if seen.insert(v.clone()) {
                    queue.push_back(v);
                }
            }
        }
    }
    let mut out: Vec<AffineElement> = seen.into_iter().collect();
    out.sort_by_key(|u| (u.len(), u.window().to_vec()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[usize]) -> BTreeSet<usize> {
        xs.iter().copied().collect()
    }

    #[test]
    fn squares_vanish() {
        assert_eq!(element_from_word(&[1, 1], 3), None);
        assert_eq!(element_from_word(&[0, 0], 1), None);
    }

    #[test]
    fn braid_and_commutation() {
        let a = element_from_word(&[1, 0, 1], 2).unwrap();
        let b = element_from_word(&[0, 1, 0], 2).unwrap();
        assert_eq!(a, b);
        let c = element_from_word(&[0, 6, 4, 3, 2], 6).unwrap();
        let d = element_from_word(&[4, 3, 2, 0, 6], 6).unwrap();
        assert_eq!(c, d);
        assert_eq!(c.len(), 5);
    }

    #[test]
    fn cached_length_is_inversion_number() {
        for u in elements_up_to_length(2, 5) {
            assert_eq!(u.len(), u.inversion_number());
        }
        for u in elements_up_to_length(3, 4) {
            assert_eq!(u.len(), u.inversion_number());
        }
    }

    #[test]
    fn product_matches_word_concatenation() {
        let k = 3;
        let elems = elements_up_to_length(k, 3);
        for a in &elems {
            for b in &elems {
                let mut word = a.lex_least_reduced_word();
                word.extend(b.lex_least_reduced_word());
                assert_eq!(a.product(b), element_from_word(&word, k));
            }
        }
    }

    #[test]
    fn reduced_word_enumeration() {
        let id = AffineElement::identity(4);
        assert_eq!(id.reduced_words(), vec![Vec::<usize>::new()]);

        // Blocks (0 6) and (4 3 2) commute letterwise; interleavings give
        // C(5,2) = 10 reduced words.
        let u = element_from_word(&[0, 6, 4, 3, 2], 6).unwrap();
        let words = u.reduced_words();
        assert_eq!(words.len(), 10);
        for w in &words {
            assert_eq!(element_from_word(&w, 6).as_ref(), Some(&u));
        }

        let v = element_from_word(&[0, 6, 0, 5], 6).unwrap();
        let words = v.reduced_words();
        assert!(words.contains(&vec![0, 6, 0, 5]));
        assert!(words.contains(&vec![0, 6, 5, 0]));
        for w in &words {
            assert_eq!(element_from_word(&w, 6).as_ref(), Some(&v));
        }
    }

    #[test]
    fn canonical_interval_examples() {
        let ord = CanonicalOrder::for_support(&set(&[0, 2, 3, 4, 6]), 6);
        assert_eq!(ord.cut, 1);
        // Order 2 < 3 < 4 < 5 < 6 < 0.
        assert!(ord.le(2, 3) && ord.le(6, 0) && !ord.le(0, 2));

        let ord = CanonicalOrder::for_support(&set(&[0]), 3);
        assert_eq!(ord.cut, 1);
        assert!(ord.le(2, 3) && ord.le(3, 0));

        let ord = CanonicalOrder::for_support(&set(&[1, 2]), 2);
        assert_eq!(ord.cut, 0);
        assert!(ord.le(1, 2));
    }

    #[test]
    fn k_connected_examples() {
        let u = element_from_word(&[0, 6, 0, 5], 6).unwrap();
        assert!(is_k_connected(&u));
        let v = element_from_word(&[0, 6, 0, 5, 2], 6).unwrap();
        assert!(!is_k_connected(&v));
        let w = element_from_word(&[3], 6).unwrap();
        assert!(is_k_connected(&w));
    }

    #[test]
    fn hook_word_shape() {
        // (3)(2460) with respect to 2<3<4<5<6<0.
        assert_eq!(hook_word_ascents(&[3, 2, 4, 6, 0], 6), Some(3));
        assert_eq!(hook_word_ascents(&[5], 6), Some(0));
        assert_eq!(hook_word_ascents(&[1, 0, 1], 3), Some(1));
        assert_eq!(hook_word_ascents(&[2, 1, 2], 3), Some(1));
        assert_eq!(hook_word_ascents(&[1, 2, 1], 3), None);
        assert_eq!(hook_word_ascents(&[0, 2, 1], 3), None);
    }

    #[test]
    fn hook_factorize_examples() {
        let u = element_from_word(&[3, 2, 4, 6, 0], 6).unwrap();
        assert_eq!(
            element_from_word(&[3, 2, 6, 0, 4], 6).as_ref(),
            Some(&u),
            "the displayed product and its hook word agree"
        );
        assert_eq!(hook_factorize(&u), Some((vec![3, 2, 4, 6, 0], 3)));

        let single = element_from_word(&[2], 4).unwrap();
        assert_eq!(hook_factorize(&single), Some((vec![2], 0)));

        // u_1u_2u_1 = u_2u_1u_2: the second word is its unique hook word.
        let braid = element_from_word(&[1, 2, 1], 4).unwrap();
        assert_eq!(hook_factorize(&braid), Some((vec![2, 1, 2], 1)));

        // No reduced word of u_1u_0u_2u_1 is a hook word.
        let no_hook = element_from_word(&[1, 0, 2, 1], 3).unwrap();
        assert_eq!(no_hook.len(), 4);
        for w in no_hook.reduced_words() {
            assert_eq!(hook_word_ascents(&w, 3), None);
        }
        assert_eq!(hook_factorize(&no_hook), None);
    }

    #[test]
    fn cyclic_elements() {
        let a = set(&[0, 2, 3, 4, 6]);
        assert_eq!(cyclically_decreasing_word(&a, 6), vec![0, 6, 4, 3, 2]);
        assert_eq!(cyclically_increasing_word(&a, 6), vec![2, 3, 4, 6, 0]);
        let dec = cyclically_decreasing(&a, 6);
        assert_eq!(dec, element_from_word(&[0, 6, 4, 3, 2], 6).unwrap());
        let inc = cyclically_increasing(&a, 6);
        assert_eq!(inc, element_from_word(&[6, 0, 2, 3, 4], 6).unwrap());

        for i in 0..=3usize {
            let single = set(&[i]);
            assert_eq!(cyclically_decreasing(&single, 3), cyclically_increasing(&single, 3));
        }
    }

    #[test]
    fn cyclic_elements_have_full_support_and_length() {
        for k in 1..=4usize {
            for support in proper_subsets(k) {
                if support.is_empty() {
                    continue;
                }
                let dec = cyclically_decreasing(&support, k);
                let inc = cyclically_increasing(&support, k);
                assert_eq!(dec.len() as usize, support.len());
                assert_eq!(inc.len() as usize, support.len());
                assert_eq!(dec.support(), support);
                assert_eq!(inc.support(), support);
            }
        }
    }

    #[test]
    fn hook_word_enumeration_small() {
        let words: Vec<(Word, usize)> = enumerate_hook_words(3, 1, true);
        assert_eq!(
            words,
            vec![(vec![0], 0), (vec![1], 0), (vec![2], 0), (vec![3], 0)]
        );

        let words = enumerate_hook_words(3, 2, true);
        assert_eq!(words.len(), 8);
        let ascent0: Vec<Word> = words
            .iter()
            .filter(|(_, a)| *a == 0)
            .map(|(w, _)| w.clone())
            .collect();
        assert_eq!(
            ascent0,
            vec![vec![0, 3], vec![1, 0], vec![2, 1], vec![3, 2]]
        );
        let ascent1: Vec<Word> = words
            .iter()
            .filter(|(_, a)| *a == 1)
            .map(|(w, _)| w.clone())
            .collect();
        assert_eq!(
            ascent1,
            vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 0]]
        );
    }

    #[test]
    fn hook_word_enumeration_s21() {
        // Length-3 hook words with one ascent at k=3: the 12 displayed terms.
        let words: Vec<Word> = enumerate_hook_words(3, 3, false)
            .into_iter()
            .filter(|(_, asc)| *asc == 1)
            .map(|(w, _)| w)
            .collect();
        assert_eq!(words.len(), 12);
        let expected: Vec<Word> = vec![
            vec![1, 0, 1],
            vec![2, 1, 2],
            vec![3, 2, 3],
            vec![0, 3, 0],
            vec![1, 3, 0],
            vec![1, 0, 2],
            vec![2, 0, 1],
            vec![2, 1, 3],
            vec![3, 1, 2],
            vec![3, 2, 0],
            vec![0, 2, 3],
            vec![0, 3, 1],
        ];
        for w in &expected {
            assert!(words.contains(w), "missing hook word {w:?}");
        }
    }

    #[test]
    fn lex_least_words() {
        let u = element_from_word(&[2, 1, 2], 4).unwrap();
        assert_eq!(u.lex_least_reduced_word(), vec![1, 2, 1]);
        assert_eq!(AffineElement::identity(2).lex_least_reduced_word(), Vec::<usize>::new());
    }
}
