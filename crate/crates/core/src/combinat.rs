//! Symmetric-group and partition combinatorics.
//!
//! Conventions: a [`Permutation`] is stored in one-line notation; products are
//! compositions of maps, `u.compose(&w) = u ∘ w` (apply `w` first). With this
//! convention `w ∘ s_i` swaps the entries in positions `i, i+1` and `s_i ∘ w`
//! swaps the values `i, i+1`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CombinatError {
    #[error("not a permutation of 1..{len}: {entries:?}")]
    NotAPermutation { entries: Vec<usize>, len: usize },
    #[error("partition {partition:?} has more than {n} parts")]
    TooManyParts { partition: Vec<usize>, n: usize },
    #[error("index set {set:?} is not a subset of 1..{r}")]
    BadIndexSet { set: Vec<usize>, r: usize },
}

/// A permutation of `{1, …, m}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // zero-based images
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(m: usize) -> Self {
        Self {
            images: (0..m).collect(),
        }
    }

    /// From one-line notation with 1-based entries.
    pub fn from_one_line(entries: &[usize]) -> Result<Self, CombinatError> {
        let m = entries.len();
        let mut seen = vec![false; m];
        for &e in entries {
            if e == 0 || e > m || seen[e - 1] {
                return Err(CombinatError::NotAPermutation {
                    entries: entries.to_vec(),
                    len: m,
                });
            }
            seen[e - 1] = true;
        }
        Ok(Self {
            images: entries.iter().map(|e| e - 1).collect(),
        })
    }

    /// The simple transposition `s_i = (i, i+1)` in `S_m`, `1 <= i < m`.
    pub fn simple(i: usize, m: usize) -> Self {
        assert!(i >= 1 && i < m, "s_{i} is not in S_{m}");
        let mut p = Self::identity(m);
        p.images.swap(i - 1, i);
        p
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// One-line notation, 1-based.
    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|x| x + 1).collect()
    }

    /// Image of the 1-based point `k`.
    pub fn apply(&self, k: usize) -> usize {
        self.images[k - 1] + 1
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.degree(), other.degree());
        Self {
            images: other.images.iter().map(|&k| self.images[k]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Self { images }
    }

    /// `self ∘ s_i`.
    pub fn mul_simple(&self, i: usize) -> Self {
        let mut p = self.clone();
        p.images.swap(i - 1, i);
        p
    }

    /// `s_i ∘ self`.
    pub fn simple_mul(&self, i: usize) -> Self {
        let images = self
            .images
            .iter()
            .map(|&x| {
                if x == i - 1 {
                    i
                } else if x == i {
                    i - 1
                } else {
                    x
                }
            })
            .collect();
        Self { images }
    }

    /// Whether `ℓ(self ∘ s_i) = ℓ(self) + 1`.
    pub fn right_ascent(&self, i: usize) -> bool {
        self.images[i - 1] < self.images[i]
    }

    /// Number of inversions; equals the Coxeter length.
    pub fn length(&self) -> usize {
        let m = self.images.len();
        let mut inv = 0;
        for a in 0..m {
            for b in a + 1..m {
                if self.images[a] > self.images[b] {
                    inv += 1;
                }
            }
        }
        inv
    }

    /// A reduced word `(i_1, …, i_k)` with `self = s_{i_1} ∘ … ∘ s_{i_k}` and
    /// `k = ℓ(self)`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut rev = Vec::with_capacity(self.length());
        // strip right descents until the identity is reached
        while let Some(i) = (1..w.degree()).find(|&i| !w.right_ascent(i)) {
            rev.push(i);
            w = w.mul_simple(i);
        }
        rev.reverse();
        rev
    }

    /// Multiplies out a word of simple transpositions in `S_m`.
    pub fn from_word(word: &[usize], m: usize) -> Self {
        word.iter().fold(Self::identity(m), |acc, &i| acc.mul_simple(i))
    }

    /// Extends a permutation of `{1..l}` to `{1..m}` by fixing `l+1..m`.
    pub fn extend(&self, m: usize) -> Self {
        assert!(m >= self.degree());
        let mut images = self.images.clone();
        images.extend(self.degree()..m);
        Self { images }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.one_line())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_line().iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.one_line().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        Self::from_one_line(&v).map_err(serde::de::Error::custom)
    }
}

/// All permutations of `{1..m}` in lexicographic order of one-line notation.
pub fn all_permutations(m: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..m).collect();
    loop {
        out.push(Permutation { images: cur.clone() });
        // next lexicographic permutation
        let Some(i) = (0..m.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..m).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}

/// A sequence of nonnegative parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Composition(pub Vec<usize>);

impl Composition {
    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// The blocks `R_i` as 1-based position ranges; empty parts give empty blocks.
    pub fn blocks(&self) -> Vec<std::ops::RangeInclusive<usize>> {
        let mut start = 1;
        self.0
            .iter()
            .map(|&p| {
                let r = start..=start + p - 1;
                start += p;
                r
            })
            .collect()
    }

    /// Block label of each position `1..=weight`.
    fn block_of(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(b, &p)| std::iter::repeat_n(b, p))
            .collect()
    }
}

/// A weakly decreasing sequence of positive parts (trailing zeros dropped).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Accepts any weakly decreasing sequence; zeros are stripped.
    pub fn new(mut parts: Vec<usize>) -> Option<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return None;
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Some(Self(parts))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    fn conjugate_parts(&self) -> Vec<usize> {
        let width = self.0.first().copied().unwrap_or(0);
        (0..width).map(|j| self.0.iter().filter(|&&p| p > j).count()).collect()
    }

    fn hooks(&self) -> Vec<(usize, usize, usize)> {
        let conj = self.conjugate_parts();
        let mut out = Vec::new();
        for (i, &row) in self.0.iter().enumerate() {
            for (j, &col) in conj.iter().enumerate().take(row) {
                let arm = row - j - 1;
                let leg = col - i - 1;
                out.push((i, j, arm + leg + 1));
            }
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `Λ(n, r)`: all compositions of `r` into exactly `n` parts, in
/// lexicographically decreasing order.
pub fn enumerate_compositions(n: usize, r: usize) -> Vec<Composition> {
    fn go(n: usize, r: usize, prefix: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if n == 1 {
            prefix.push(r);
            out.push(Composition(prefix.clone()));
            prefix.pop();
            return;
        }
        for first in (0..=r).rev() {
            prefix.push(first);
            go(n - 1, r - first, prefix, out);
            prefix.pop();
        }
    }
    assert!(n >= 1, "compositions need at least one part");
    let mut out = Vec::new();
    go(n, r, &mut Vec::new(), &mut out);
    out
}

/// `P(n, l)`: partitions of `l` with at most `n` parts, in reverse
/// lexicographic order.
pub fn enumerate_partitions(n: usize, l: usize) -> Vec<Partition> {
    fn go(max_part: usize, parts_left: usize, rest: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        if parts_left == 0 {
            return;
        }
        for p in (1..=max_part.min(rest)).rev() {
            prefix.push(p);
            go(p, parts_left - 1, rest - p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(l, n, l, &mut Vec::new(), &mut out);
    out
}

/// The Young subgroup `S_λ ⊆ S_m`, `m = |λ|`: permutations mapping every block
/// `R_i` onto itself.
pub fn young_subgroup(lambda: &Composition) -> Vec<Permutation> {
    let block = lambda.block_of();
    all_permutations(lambda.weight())
        .into_iter()
        .filter(|w| (0..block.len()).all(|k| block[w.images[k]] == block[k]))
        .collect()
}

/// Distinguished coset representatives: for each coset `S_λ d` the unique
/// element of minimal length. They satisfy `ℓ(w ∘ d) = ℓ(w) + ℓ(d)` for all
/// `w ∈ S_λ`, which is what makes `{x_λ T_d}` a basis of `x_λ H`.
///
/// Computed exhaustively: the coset `S_λ d` is determined by the block label
/// of `d(k)` for every `k`.
pub fn min_coset_reps(lambda: &Composition) -> Vec<Permutation> {
    let block = lambda.block_of();
    let mut best: BTreeMap<Vec<usize>, Permutation> = BTreeMap::new();
    for d in all_permutations(lambda.weight()) {
        let key: Vec<usize> = d.images.iter().map(|&x| block[x]).collect();
        match best.get(&key) {
            Some(cur) if cur.length() <= d.length() => {}
            _ => {
                best.insert(key, d);
            }
        }
    }
    let mut reps: Vec<Permutation> = best.into_values().collect();
    reps.sort_by_key(|d| (d.length(), d.clone()));
    reps
}

/// Whether `d` is the minimal-length element of its coset `S_λ d`.
pub fn is_min_coset_rep(lambda: &Composition, d: &Permutation) -> bool {
    let block = lambda.block_of();
    if d.degree() != block.len() {
        return false;
    }
    // minimal iff no s_j ∈ S_λ shortens s_j ∘ d, i.e. d^{-1} increases along each block
    let inv = d.inverse();
    (1..block.len()).all(|j| block[j - 1] != block[j] || inv.images[j - 1] < inv.images[j])
}

/// Number of standard Young tableaux of shape `λ` (hook length formula).
pub fn syt_count(lambda: &Partition) -> u128 {
    let mut num: u128 = (1..=lambda.weight() as u128).product();
    let den: u128 = lambda.hooks().iter().map(|&(_, _, h)| h as u128).product();
    debug_assert_eq!(num % den, 0);
    num /= den;
    num
}

/// Number of semistandard tableaux of shape `λ` with entries in `1..=n`, the
/// dimension of the irreducible polynomial `gl_n`-module of highest weight `λ`
/// (hook content formula).
pub fn ssyt_count(lambda: &Partition, n: usize) -> Result<u128, CombinatError> {
    if lambda.len() > n {
        return Err(CombinatError::TooManyParts {
            partition: lambda.0.clone(),
            n,
        });
    }
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for (i, j, h) in lambda.hooks() {
        // content j - i >= -(n-1), so n + content >= 1
        num *= (n + j - i) as u128;
        den *= h as u128;
    }
    debug_assert_eq!(num % den, 0);
    Ok(num / den)
}

/// Binomial coefficient.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// The order-preserving minimal-length `d ∈ S_r` with `d({1..l}) = I`, `l = |I|`:
/// `d(k) = i_k` for `k <= l`, and `{l+1..r}` goes increasingly onto the complement.
pub fn min_mover(index_set: &[usize], r: usize) -> Result<Permutation, CombinatError> {
    let bad = || CombinatError::BadIndexSet {
        set: index_set.to_vec(),
        r,
    };
    if index_set.windows(2).any(|w| w[0] >= w[1]) || index_set.iter().any(|&i| i == 0 || i > r) {
        return Err(bad());
    }
    let mut images: Vec<usize> = index_set.to_vec();
    images.extend((1..=r).filter(|k| !index_set.contains(k)));
    Permutation::from_one_line(&images)
}

/// All `l`-subsets of `{1..r}` in lexicographic order.
pub fn subsets(r: usize, l: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, r: usize, l: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == l {
            out.push(cur.clone());
            return;
        }
        for k in start..=r {
            if r - k + 1 < l - cur.len() {
                break;
            }
            cur.push(k);
            go(k + 1, r, l, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, r, l, &mut Vec::new(), &mut out);
    out
}
