//! Structure constants of the descent algebra of the hyperoctahedral group.
//!
//! The layout mirrors the symmetric-group tables: for `I, J, K` subsets of
//! `{0,...,n-1}`, pick any signed permutation `ω` with descent set `K` and
//! count the ordered factorizations `ω = στ` with `des(σ) = I` and
//! `des(τ) = J`, the product read left to right: `σ` acts first, so `στ` is
//! the composite mapping `i` to `τ(σ(i))`.  The count depends only on `K`
//! and is stored as `c(I, J, K)`.  [`TripleTableB`] counts ordered triples
//! multiplying to the identity.

use crate::partition::{IndexSubset, SubsetKind};
use crate::perm::SignedPermutation;

/// Pairwise structure constants for the hyperoctahedral group on `n` points.
#[derive(Clone, Debug)]
pub struct DescentTableB {
    n: usize,
    subsets: usize,
    c: Vec<i64>,
}

impl DescentTableB {
    /// Tabulates all constants by a full group sweep, asserting that the
    /// per-permutation factorization grids agree within each descent class.
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "the table needs at least one point");
        let s = SubsetKind::TypeB.count(n);
        let group = SignedPermutation::all(n);
        let descents: Vec<usize> = group
            .iter()
            .map(|p| p.descent_set().mask() as usize)
            .collect();
        let inverses: Vec<SignedPermutation> = group.iter().map(|p| p.inverse()).collect();

        let mut c = vec![0i64; s * s * s];
        let mut seen = vec![false; s];
        let mut grid = vec![0i64; s * s];
        for (wi, omega) in group.iter().enumerate() {
            let k = descents[wi];
            let w = omega.window();
            grid.fill(0);
            for (si, _) in group.iter().enumerate() {
                // τ = ω∘σ⁻¹ is the unique solution of στ = ω, since the
                // left factor acts first.
                let inv = inverses[si].window();
                let app = |v: i64| {
                    if v < 0 {
                        -w[(-v - 1) as usize]
                    } else {
                        w[(v - 1) as usize]
                    }
                };
                let mut tau_mask = 0usize;
                let mut prev = app(inv[0]);
                if prev < 0 {
                    tau_mask |= 1;
                }
                for (i, &iv) in inv.iter().enumerate().skip(1) {
                    let cur = app(iv);
                    if prev > cur {
                        tau_mask |= 1 << i;
                    }
                    prev = cur;
                }
                grid[descents[si] * s + tau_mask] += 1;
            }
            if seen[k] {
                for idx in 0..s * s {
                    assert_eq!(
                        c[idx * s + k],
                        grid[idx],
                        "factorization counts must agree for permutations sharing a descent set"
                    );
                }
            } else {
                seen[k] = true;
                for idx in 0..s * s {
                    c[idx * s + k] = grid[idx];
                }
            }
        }
        DescentTableB { n, subsets: s, c }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of descent subsets, `2^n`.
    pub fn subsets(&self) -> usize {
        self.subsets
    }

    /// Factorization count for a representative with descent set `k`:
    /// the number of pairs `(σ, τ)` with `des(σ) = i`, `des(τ) = j` and
    /// `στ` equal to that representative.
    pub fn c_mask(&self, i: usize, j: usize, k: usize) -> i64 {
        self.c[(i * self.subsets + j) * self.subsets + k]
    }

    pub fn c(&self, i: &IndexSubset, j: &IndexSubset, k: &IndexSubset) -> i64 {
        for s in [i, j, k] {
            assert_eq!(s.kind(), SubsetKind::TypeB, "subset of the wrong kind");
            assert_eq!(s.n(), self.n, "subset for the wrong n");
        }
        self.c_mask(i.mask() as usize, j.mask() as usize, k.mask() as usize)
    }
}

/// Counts of ordered triples of signed permutations multiplying to the
/// identity, indexed by the three descent sets.
#[derive(Clone, Debug)]
pub struct TripleTableB {
    n: usize,
    subsets: usize,
    t: Vec<i64>,
}

impl TripleTableB {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "the table needs at least one point");
        let s = SubsetKind::TypeB.count(n);
        let group = SignedPermutation::all(n);
        let descents: Vec<usize> = group
            .iter()
            .map(|p| p.descent_set().mask() as usize)
            .collect();
        let mut t = vec![0i64; s * s * s];
        for (i1, p1) in group.iter().enumerate() {
            for (i2, p2) in group.iter().enumerate() {
                // π₃ = (π₁π₂)⁻¹ is the unique completion of the triple.
                let p3 = p2.compose(p1).inverse();
                let k = p3.descent_set().mask() as usize;
                t[(descents[i1] * s + descents[i2]) * s + k] += 1;
            }
        }
        TripleTableB { n, subsets: s, t }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn subsets(&self) -> usize {
        self.subsets
    }

    /// Number of triples `(π₁, π₂, π₃)` with the given descent sets whose
    /// left-to-right product `π₁π₂π₃` is the identity.
    pub fn count_mask(&self, i: usize, j: usize, k: usize) -> i64 {
        self.t[(i * self.subsets + j) * self.subsets + k]
    }

    pub fn count(&self, i: &IndexSubset, j: &IndexSubset, k: &IndexSubset) -> i64 {
        for s in [i, j, k] {
            assert_eq!(s.kind(), SubsetKind::TypeB, "subset of the wrong kind");
            assert_eq!(s.n(), self.n, "subset for the wrong n");
        }
        self.count_mask(i.mask() as usize, j.mask() as usize, k.mask() as usize)
    }
}
