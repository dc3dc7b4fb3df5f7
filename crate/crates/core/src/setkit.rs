//! Ground-set combinatorics: subsets of `[n]` as machine-word bit sets,
//! lexicographic enumeration and ranking, and permutations of `[n]`.

use alloc::format;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};

/// Largest supported ground set.
pub const MAX_GROUND: usize = 64;

/// `C(n, k)`, exact. Saturates at `u64::MAX` on overflow.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
        if acc > u128::from(u64::MAX) {
            return u64::MAX;
        }
    }
    acc as u64
}

/// A subset of `[n] = {1, ..., n}` with `n <= 64`.
///
/// Element `x` lives in bit `x - 1`. Ordering is lexicographic on the sorted
/// member lists (so `{1,4} < {2,3}` and `{1} < {1,2}`), which is the order used
/// for vertex indices everywhere in the crate.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Subset {
    ground: u8,
    bits: u64,
}

fn check_ground(n: usize) -> Result<()> {
    if n == 0 || n > MAX_GROUND {
        return Err(Error::params(format!(
            "ground size {n} outside 1..={MAX_GROUND}"
        )));
    }
    Ok(())
}

fn ground_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl Subset {
    pub fn empty(n: usize) -> Result<Self> {
        check_ground(n)?;
        Ok(Subset {
            ground: n as u8,
            bits: 0,
        })
    }

    /// The full ground set `[n]`.
    pub fn full(n: usize) -> Result<Self> {
        check_ground(n)?;
        Ok(Subset {
            ground: n as u8,
            bits: ground_mask(n),
        })
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(n: usize, elements: I) -> Result<Self> {
        check_ground(n)?;
        let mut bits = 0u64;
        for x in elements {
            if x == 0 || x > n {
                return Err(Error::params(format!("element {x} not in [1, {n}]")));
            }
            bits |= 1 << (x - 1);
        }
        Ok(Subset {
            ground: n as u8,
            bits,
        })
    }

    pub fn from_bits(n: usize, bits: u64) -> Result<Self> {
        check_ground(n)?;
        if bits & !ground_mask(n) != 0 {
            return Err(Error::params(format!("bit set {bits:#x} exceeds [1, {n}]")));
        }
        Ok(Subset {
            ground: n as u8,
            bits,
        })
    }

    #[inline]
    pub fn ground_size(&self) -> usize {
        self.ground as usize
    }

    #[inline]
    pub fn bits(&self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        x >= 1 && x <= self.ground_size() && self.bits & (1 << (x - 1)) != 0
    }

    /// Smallest member in the natural order.
    pub fn min_element(&self) -> Option<usize> {
        (self.bits != 0).then(|| self.bits.trailing_zeros() as usize + 1)
    }

    #[inline]
    pub fn is_subset_of(&self, other: &Subset) -> bool {
        self.bits & !other.bits == 0
    }

    #[inline]
    pub fn is_disjoint(&self, other: &Subset) -> bool {
        self.bits & other.bits == 0
    }

    #[inline]
    pub fn union(&self, other: &Subset) -> Subset {
        Subset {
            ground: self.ground.max(other.ground),
            bits: self.bits | other.bits,
        }
    }

    #[inline]
    pub fn intersection(&self, other: &Subset) -> Subset {
        Subset {
            ground: self.ground.max(other.ground),
            bits: self.bits & other.bits,
        }
    }

    #[inline]
    pub fn difference(&self, other: &Subset) -> Subset {
        Subset {
            ground: self.ground,
            bits: self.bits & !other.bits,
        }
    }

    pub fn with(&self, x: usize) -> Subset {
        debug_assert!(x >= 1 && x <= self.ground_size());
        Subset {
            ground: self.ground,
            bits: self.bits | (1 << (x - 1)),
        }
    }

    pub fn without(&self, x: usize) -> Subset {
        if !self.contains(x) {
            return *self;
        }
        Subset {
            ground: self.ground,
            bits: self.bits & !(1 << (x - 1)),
        }
    }

    /// The same members viewed inside a different ground set.
    pub fn regrounded(&self, n: usize) -> Result<Subset> {
        Subset::from_bits(n, self.bits)
    }

    /// Members in ascending order.
    pub fn iter(&self) -> Members {
        Members(self.bits)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Position of this subset in [`enumerate_subsets`]`(n, self.len())`.
    pub fn lex_rank(&self) -> u64 {
        let n = self.ground_size() as u64;
        let k = self.len() as u64;
        let mut rank = 0u64;
        let mut prev = 0u64;
        for (i, c) in self.iter().enumerate() {
            let c = c as u64;
            let remaining = k - i as u64 - 1;
            for v in (prev + 1)..c {
                rank += binomial(n - v, remaining);
            }
            prev = c;
        }
        rank
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter()
            .cmp(other.iter())
            .then(self.ground.cmp(&other.ground))
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Ascending iterator over the members of a [`Subset`].
#[derive(Clone)]
pub struct Members(u64);

impl Iterator for Members {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let x = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(x + 1)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Members {}

/// All `k`-subsets of `[n]` in lexicographic order.
pub fn enumerate_subsets(n: usize, k: usize) -> Result<Vec<Subset>> {
    check_ground(n)?;
    if k > n {
        return Err(Error::params(format!("k = {k} exceeds n = {n}")));
    }
    let mut out = Vec::with_capacity(binomial(n as u64, k as u64) as usize);
    let mut idx: Vec<usize> = (1..=k).collect();
    loop {
        out.push(Subset::from_elements(n, idx.iter().copied())?);
        // advance to the next combination
        let mut i = k;
        while i > 0 && idx[i - 1] == n - k + i {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
    Ok(out)
}

/// All `k`-subsets of `within`, in lexicographic order.
pub fn subsets_of(within: &Subset, k: usize) -> Vec<Subset> {
    let members = within.to_vec();
    if k > members.len() {
        return Vec::new();
    }
    let n = within.ground_size();
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    let m = members.len();
    loop {
        let bits = idx.iter().fold(0u64, |b, &i| b | 1 << (members[i] - 1));
        out.push(Subset {
            ground: n as u8,
            bits,
        });
        let mut i = k;
        while i > 0 && idx[i - 1] == m - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
    out
}

/// A permutation `sigma` of `[n]`, read as the ordering
/// `sigma(1) < sigma(2) < ... < sigma(n)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    seq: Vec<usize>,
    // inv[x - 1] = position of x, 1-based
    inv: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from its one-line form `sigma(1), ..., sigma(n)`.
    pub fn new(seq: Vec<usize>) -> Result<Self> {
        let n = seq.len();
        check_ground(n)?;
        let mut inv = alloc::vec![0usize; n];
        for (pos, &x) in seq.iter().enumerate() {
            if x == 0 || x > n || inv[x - 1] != 0 {
                return Err(Error::params(format!(
                    "{seq:?} is not a permutation of [1, {n}]"
                )));
            }
            inv[x - 1] = pos + 1;
        }
        Ok(Permutation { seq, inv })
    }

    pub fn identity(n: usize) -> Result<Self> {
        Permutation::new((1..=n).collect())
    }

    /// Uniform random permutation (Fisher-Yates).
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Self> {
        if n < 1 {
            return Err(Error::params("random permutation needs n >= 1"));
        }
        let mut seq: Vec<usize> = (1..=n).collect();
        seq.shuffle(rng);
        Permutation::new(seq)
    }

    /// Every permutation of `[n]`, in lexicographic order of the one-line form.
    pub fn all(n: usize) -> Result<AllPermutations> {
        check_ground(n)?;
        Ok(AllPermutations {
            next: Some((1..=n).collect()),
        })
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.seq.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.seq
    }

    /// `sigma(i)` for a 1-based position `i`.
    #[inline]
    pub fn at(&self, i: usize) -> usize {
        self.seq[i - 1]
    }

    /// `sigma^{-1}(x)`: the 1-based position of `x`.
    #[inline]
    pub fn position(&self, x: usize) -> usize {
        self.inv[x - 1]
    }

    /// The member of `set` that comes first in the ordering.
    pub fn min_under_order(&self, set: &Subset) -> Result<usize> {
        if set.is_empty() {
            return Err(Error::params("minimum of an empty set"));
        }
        if set.ground_size() > self.len() && set.iter().any(|x| x > self.len()) {
            return Err(Error::params(
                "set is not inside the permutation's ground set",
            ));
        }
        let pos = set.iter().map(|x| self.position(x)).min().unwrap_or(1);
        Ok(self.at(pos))
    }

    /// Image `{sigma(x) : x in set}`, used for the ground-set action on vertices.
    pub fn map_subset(&self, set: &Subset) -> Subset {
        let bits = set.iter().fold(0u64, |b, x| b | 1 << (self.at(x) - 1));
        Subset {
            ground: set.ground,
            bits,
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.seq)
    }
}

/// Iterator returned by [`Permutation::all`].
pub struct AllPermutations {
    next: Option<Vec<usize>>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        // standard next-permutation step
        let n = succ.len();
        let mut i = n - 1;
        while i > 0 && succ[i - 1] >= succ[i] {
            i -= 1;
        }
        if i > 0 {
            let mut j = n - 1;
            while succ[j] <= succ[i - 1] {
                j -= 1;
            }
            succ.swap(i - 1, j);
            succ[i..].reverse();
            self.next = Some(succ);
        }
        let inv = {
            let mut inv = alloc::vec![0; n];
            for (p, &x) in current.iter().enumerate() {
                inv[x - 1] = p + 1;
            }
            inv
        };
        Some(Permutation { seq: current, inv })
    }
}
