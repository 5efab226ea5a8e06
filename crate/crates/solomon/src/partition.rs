//! Partitions, compositions, descent index sets and bipartitions.
//!
//! These are the index types everything else in the crate is keyed by.
//! Enumeration orders are fixed once and for all: partitions in reverse
//! lexicographic order, index subsets in binary counter order on their mask.

use crate::Error;

/// An integer partition, stored as its weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition. Panics if `parts` is not weakly decreasing or
    /// contains a zero.
    pub fn new(parts: Vec<usize>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "parts must be weakly decreasing"
        );
        assert!(parts.iter().all(|&p| p > 0), "parts must be positive");
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The conjugate partition, read off column by column.
    pub fn transpose(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0);
        let parts = (0..cols)
            .map(|c| self.parts.iter().take_while(|&&p| p > c).count())
            .collect();
        Partition { parts }
    }

    /// Multiplicity vector; `mult[i]` counts parts equal to `i + 1`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let max = self.parts.first().copied().unwrap_or(0);
        let mut mult = vec![0usize; max];
        for &p in &self.parts {
            mult[p - 1] += 1;
        }
        mult
    }

    /// Beta numbers `part_i + (m - i)` for `i = 1..=m`, with the partition
    /// padded by zeros to length `m`. Strictly decreasing.
    pub(crate) fn beta_set(&self, m: usize) -> Vec<usize> {
        assert!(m >= self.parts.len());
        (0..m)
            .map(|i| self.parts.get(i).copied().unwrap_or(0) + (m - 1 - i))
            .collect()
    }

    /// Whether the 2-core is empty, i.e. the shape can be tiled by dominoes.
    pub fn has_empty_two_core(&self) -> bool {
        let m = self.parts.len() + self.parts.len() % 2;
        let even = self.beta_set(m).iter().filter(|&&b| b % 2 == 0).count();
        even == m / 2
    }

    /// The 2-quotient `(minus, plus)` of a shape with empty 2-core.
    ///
    /// With beta numbers taken at an even padding length, the even values
    /// produce the minus component and the odd values the plus component.
    /// This matches the sign filling of domino tilings in which the top left
    /// box is negative and adjacent boxes alternate: a domino belongs to the
    /// minus component exactly when its top rightmost box is negative.
    pub fn two_quotient(&self) -> Result<BiPartition, Error> {
        let m = self.parts.len() + self.parts.len() % 2;
        let betas = self.beta_set(m);
        let mut evens: Vec<usize> = betas.iter().filter(|&&b| b % 2 == 0).map(|&b| b / 2).collect();
        let mut odds: Vec<usize> = betas
            .iter()
            .filter(|&&b| b % 2 == 1)
            .map(|&b| (b - 1) / 2)
            .collect();
        if evens.len() != m / 2 {
            return Err(Error::NonEmptyTwoCore(self.clone()));
        }
        evens.sort_unstable_by(|a, b| b.cmp(a));
        odds.sort_unstable_by(|a, b| b.cmp(a));
        Ok(BiPartition::new(
            partition_from_beta(&evens),
            partition_from_beta(&odds),
        ))
    }
}

/// Rebuilds a partition from a strictly decreasing beta set.
fn partition_from_beta(betas: &[usize]) -> Partition {
    let m = betas.len();
    let mut parts: Vec<usize> = betas
        .iter()
        .enumerate()
        .map(|(i, &b)| b - (m - 1 - i))
        .collect();
    parts.retain(|&p| p > 0);
    Partition::new(parts)
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// All partitions of `n` in reverse lexicographic order, `[n]` first and
/// `[1,...,1]` last. `partitions(0)` is the singleton list of the empty shape.
pub fn partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    fill_partitions(n, n, &mut prefix, &mut out);
    out
}

fn fill_partitions(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition {
            parts: prefix.clone(),
        });
        return;
    }
    for p in (1..=rest.min(max)).rev() {
        prefix.push(p);
        fill_partitions(rest - p, p, prefix, out);
        prefix.pop();
    }
}

/// Shapes tileable by `n` dominoes: partitions of `2n` with empty 2-core, in
/// reverse lexicographic order.
pub fn domino_shapes(n: usize) -> Vec<Partition> {
    partitions(2 * n)
        .into_iter()
        .filter(Partition::has_empty_two_core)
        .collect()
}

/// A pair of partitions, e.g. a 2-quotient or a signed cycle type.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BiPartition {
    pub minus: Partition,
    pub plus: Partition,
}

impl BiPartition {
    pub fn new(minus: Partition, plus: Partition) -> Self {
        BiPartition { minus, plus }
    }

    pub fn size(&self) -> usize {
        self.minus.size() + self.plus.size()
    }
}

impl std::fmt::Display for BiPartition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.minus, self.plus)
    }
}

/// All bipartitions of total size `n`, minus component sizes ascending and
/// each component in reverse lexicographic order.
pub fn bipartitions(n: usize) -> Vec<BiPartition> {
    let mut out = Vec::new();
    for k in 0..=n {
        for minus in partitions(k) {
            for plus in partitions(n - k) {
                out.push(BiPartition::new(minus.clone(), plus));
            }
        }
    }
    out
}

/// A composition, i.e. an ordered sequence of parts summing to `n`.
///
/// [`Composition::new`] enforces positive parts; [`Composition::weak`] admits
/// zeros for the places where weight vectors are read as compositions.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    /// Builds a strict composition. Panics on zero parts.
    pub fn new(parts: Vec<usize>) -> Self {
        assert!(parts.iter().all(|&p| p > 0), "parts must be positive");
        Composition { parts }
    }

    /// Builds a weak composition; zero parts are allowed.
    pub fn weak(parts: Vec<usize>) -> Self {
        Composition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn is_weak(&self) -> bool {
        self.parts.contains(&0)
    }

    /// Drops zero parts, turning a weak composition into a strict one.
    pub fn dropped_zeros(&self) -> Composition {
        Composition {
            parts: self.parts.iter().copied().filter(|&p| p > 0).collect(),
        }
    }

    /// Sorts the parts into a partition, dropping zeros.
    pub fn to_partition(&self) -> Partition {
        let mut parts: Vec<usize> = self.parts.iter().copied().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    }

    /// The partial sums of the parts with the total omitted, as a type A
    /// descent set. Errors on weak compositions containing zeros, whose
    /// partial sums would repeat.
    pub fn to_subset(&self) -> Result<IndexSubset, Error> {
        if self.is_weak() {
            return Err(Error::ZeroPart);
        }
        let n = self.size();
        let mut mask = 0u32;
        let mut acc = 0usize;
        for &p in &self.parts[..self.parts.len().saturating_sub(1)] {
            acc += p;
            mask |= 1 << (acc - 1);
        }
        Ok(IndexSubset::from_mask(SubsetKind::TypeA, n, mask))
    }
}

impl std::fmt::Display for Composition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// All strict compositions of `n`, ordered by their descent sets in binary
/// counter order. There are `2^(n-1)` of them for `n >= 1`.
pub fn compositions(n: usize) -> Vec<Composition> {
    IndexSubset::all(SubsetKind::TypeA, n)
        .into_iter()
        .map(|s| s.to_composition())
        .collect()
}

/// Which descent index convention a subset lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SubsetKind {
    /// Subsets of `{1, ..., n-1}`.
    TypeA,
    /// Subsets of `{0, 1, ..., n-1}`.
    TypeB,
}

impl SubsetKind {
    /// Number of subsets for the given `n`.
    pub fn count(self, n: usize) -> usize {
        match self {
            SubsetKind::TypeA => 1 << (n - 1),
            SubsetKind::TypeB => 1 << n,
        }
    }

    /// Bitmask bit for an element.
    fn bit(self, element: usize, n: usize) -> u32 {
        match self {
            SubsetKind::TypeA => {
                assert!((1..n).contains(&element), "type A elements lie in 1..n");
                1 << (element - 1)
            }
            SubsetKind::TypeB => {
                assert!(element < n, "type B elements lie in 0..n");
                1 << element
            }
        }
    }
}

/// A descent index set: a subset of `{1,...,n-1}` (type A) or of
/// `{0,...,n-1}` (type B), stored as a bitmask.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndexSubset {
    kind: SubsetKind,
    n: usize,
    mask: u32,
}

impl IndexSubset {
    pub fn from_mask(kind: SubsetKind, n: usize, mask: u32) -> Self {
        assert!((1..=31).contains(&n));
        assert!(
            (mask as usize) < kind.count(n),
            "mask out of range for n = {n}"
        );
        IndexSubset { kind, n, mask }
    }

    pub fn from_elements(kind: SubsetKind, n: usize, elements: &[usize]) -> Self {
        let mut mask = 0;
        for &e in elements {
            mask |= kind.bit(e, n);
        }
        IndexSubset::from_mask(kind, n, mask)
    }

    pub fn empty(kind: SubsetKind, n: usize) -> Self {
        IndexSubset::from_mask(kind, n, 0)
    }

    /// The full set, `{1,...,n-1}` or `{0,...,n-1}`.
    pub fn full(kind: SubsetKind, n: usize) -> Self {
        IndexSubset::from_mask(kind, n, kind.count(n) as u32 - 1)
    }

    /// All subsets in binary counter order on the mask.
    pub fn all(kind: SubsetKind, n: usize) -> Vec<IndexSubset> {
        (0..kind.count(n) as u32)
            .map(|mask| IndexSubset { kind, n, mask })
            .collect()
    }

    pub fn kind(&self) -> SubsetKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mask(&self) -> u32 {
        self.mask
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn contains(&self, element: usize) -> bool {
        self.mask & self.kind.bit(element, self.n) != 0
    }

    /// Elements in increasing order.
    pub fn elements(&self) -> Vec<usize> {
        let base = match self.kind {
            SubsetKind::TypeA => 1,
            SubsetKind::TypeB => 0,
        };
        (0..32)
            .filter(|b| self.mask & (1 << b) != 0)
            .map(|b| b + base)
            .collect()
    }

    pub fn is_subset_of(&self, other: &IndexSubset) -> bool {
        self.mask & !other.mask == 0
    }

    /// The composition of `n` whose partial sums are this set (type A only).
    pub fn to_composition(&self) -> Composition {
        assert_eq!(self.kind, SubsetKind::TypeA);
        let mut parts = Vec::new();
        let mut prev = 0;
        for e in self.elements() {
            parts.push(e - prev);
            prev = e;
        }
        parts.push(self.n - prev);
        Composition::new(parts)
    }
}

impl std::fmt::Display for IndexSubset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elements().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}
