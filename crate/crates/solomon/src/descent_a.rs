//! Structure constants of the descent algebra of the symmetric group.
//!
//! For `I, J, K` subsets of `{1,...,n-1}`, pick any permutation `ω` with
//! descent set `K` and count the ordered factorizations `ω = στ` with
//! `des(σ) = I` and `des(τ) = J`, the product read left to right: `σ` acts
//! first, so `στ` is the composite mapping `i` to `τ(σ(i))`.  The count does
//! not depend on the choice of `ω`; [`DescentTableA`] tabulates it as
//! `a(I, J, K)`, together with the companion table `b(I, J, K)` for descent
//! classes ordered by inclusion.  [`TripleTableA`] holds the analogous counts
//! for ordered triples multiplying to the identity.
//!
//! The module also provides counters for nonnegative integer matrices with
//! prescribed margins ([`matrix_count`], [`matrix_count_3d`]) and with a
//! prescribed reading word ([`reading_word_matrix_count`]); these give an
//! independent combinatorial route to the same constants.

use crate::partition::{Composition, IndexSubset, SubsetKind};
use crate::perm::Permutation;

/// Pairwise structure constants for the symmetric group on `n` points.
#[derive(Clone, Debug)]
pub struct DescentTableA {
    n: usize,
    subsets: usize,
    a: Vec<i64>,
    b: Vec<i64>,
}

impl DescentTableA {
    /// Tabulates all constants by a full group sweep.
    ///
    /// Every permutation `ω` is factored as `στ` in all possible ways and
    /// the counts are collected per `(des σ, des τ)` grid.  Grids obtained
    /// from permutations sharing a descent set are asserted to be equal, so a
    /// successful construction certifies that the counts are well defined.
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "the table needs at least one point");
        let s = SubsetKind::TypeA.count(n);
        let perms = Permutation::all(n);
        let descents: Vec<usize> = perms
            .iter()
            .map(|p| p.descent_set().mask() as usize)
            .collect();
        let inverses: Vec<Permutation> = perms.iter().map(|p| p.inverse()).collect();

        let mut a = vec![0i64; s * s * s];
        let mut seen = vec![false; s];
        let mut grid = vec![0i64; s * s];
        for (wi, omega) in perms.iter().enumerate() {
            let k = descents[wi];
            let w = omega.window();
            grid.fill(0);
            for (si, _) in perms.iter().enumerate() {
                // τ = ω∘σ⁻¹ is the unique solution of στ = ω, since the
                // left factor acts first.
                let inv = inverses[si].window();
                let mut tau_mask = 0usize;
                for i in 0..n - 1 {
                    if w[inv[i] - 1] > w[inv[i + 1] - 1] {
                        tau_mask |= 1 << i;
                    }
                }
                grid[descents[si] * s + tau_mask] += 1;
            }
            if seen[k] {
                for idx in 0..s * s {
                    assert_eq!(
                        a[idx * s + k],
                        grid[idx],
                        "factorization counts must agree for permutations sharing a descent set"
                    );
                }
            } else {
                seen[k] = true;
                for idx in 0..s * s {
                    a[idx * s + k] = grid[idx];
                }
            }
        }

        // Accumulate over subsets of I and of J: after the two zeta passes,
        // entry (I, J, K) counts factorizations with des(σ) ⊆ I, des(τ) ⊆ J.
        let mut b = a.clone();
        for bit in 0..n - 1 {
            let step = 1usize << bit;
            for i in 0..s {
                if i & step == 0 {
                    continue;
                }
                for j in 0..s {
                    for k in 0..s {
                        b[(i * s + j) * s + k] += b[((i ^ step) * s + j) * s + k];
                    }
                }
            }
            for i in 0..s {
                for j in 0..s {
                    if j & step == 0 {
                        continue;
                    }
                    for k in 0..s {
                        b[(i * s + j) * s + k] += b[(i * s + (j ^ step)) * s + k];
                    }
                }
            }
        }
        // Invert the superset sum over K.  The subset-accumulated counts
        // collect every factorization of a permutation with descent set K
        // into its K-indexed classes, hence equal the sum of b over all
        // supersets of K; peeling one bit at a time recovers b itself.
        for bit in 0..n - 1 {
            let step = 1usize << bit;
            for i in 0..s {
                for j in 0..s {
                    for k in 0..s {
                        if k & step == 0 {
                            b[(i * s + j) * s + k] -= b[(i * s + j) * s + (k | step)];
                        }
                    }
                }
            }
        }
        for &v in &b {
            assert!(v >= 0, "class product coefficients must be nonnegative");
        }

        DescentTableA { n, subsets: s, a, b }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of descent subsets, `2^(n-1)`.
    pub fn subsets(&self) -> usize {
        self.subsets
    }

    /// Factorization count for a representative with descent set `k`:
    /// the number of pairs `(σ, τ)` with `des(σ) = i`, `des(τ) = j` and
    /// `στ` equal to that representative.
    pub fn a_mask(&self, i: usize, j: usize, k: usize) -> i64 {
        self.a[(i * self.subsets + j) * self.subsets + k]
    }

    /// Like [`a_mask`](Self::a_mask) with the descent conditions relaxed to
    /// `des(σ) ⊆ i` and `des(τ) ⊆ j`, re-expanded over the inclusion-ordered
    /// classes: the relaxed count for a representative with descent set `k`
    /// equals the sum of `b_mask(i, j, k')` over all `k' ⊇ k`.
    pub fn b_mask(&self, i: usize, j: usize, k: usize) -> i64 {
        self.b[(i * self.subsets + j) * self.subsets + k]
    }

    pub fn a(&self, i: &IndexSubset, j: &IndexSubset, k: &IndexSubset) -> i64 {
        self.check(i);
        self.check(j);
        self.check(k);
        self.a_mask(i.mask() as usize, j.mask() as usize, k.mask() as usize)
    }

    pub fn b(&self, i: &IndexSubset, j: &IndexSubset, k: &IndexSubset) -> i64 {
        self.check(i);
        self.check(j);
        self.check(k);
        self.b_mask(i.mask() as usize, j.mask() as usize, k.mask() as usize)
    }

    fn check(&self, s: &IndexSubset) {
        assert_eq!(s.kind(), SubsetKind::TypeA, "subset of the wrong kind");
        assert_eq!(s.n(), self.n, "subset for the wrong n");
    }
}

/// Counts of ordered triples of permutations multiplying to the identity,
/// indexed by the three descent sets.
#[derive(Clone, Debug)]
pub struct TripleTableA {
    n: usize,
    subsets: usize,
    t: Vec<i64>,
}

impl TripleTableA {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "the table needs at least one point");
        let s = SubsetKind::TypeA.count(n);
        let perms = Permutation::all(n);
        let descents: Vec<usize> = perms
            .iter()
            .map(|p| p.descent_set().mask() as usize)
            .collect();
        let mut t = vec![0i64; s * s * s];
        for (i1, p1) in perms.iter().enumerate() {
            for (i2, p2) in perms.iter().enumerate() {
                // σ₃ = (σ₁σ₂)⁻¹ is the unique completion of the triple.
                let p3 = p2.compose(p1).inverse();
                let k = p3.descent_set().mask() as usize;
                t[(descents[i1] * s + descents[i2]) * s + k] += 1;
            }
        }
        TripleTableA { n, subsets: s, t }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn subsets(&self) -> usize {
        self.subsets
    }

    /// Number of triples `(σ₁, σ₂, σ₃)` with the given descent sets whose
    /// left-to-right product `σ₁σ₂σ₃` is the identity.
    pub fn count_mask(&self, i: usize, j: usize, k: usize) -> i64 {
        self.t[(i * self.subsets + j) * self.subsets + k]
    }

    pub fn count(&self, i: &IndexSubset, j: &IndexSubset, k: &IndexSubset) -> i64 {
        for s in [i, j, k] {
            assert_eq!(s.kind(), SubsetKind::TypeA, "subset of the wrong kind");
            assert_eq!(s.n(), self.n, "subset for the wrong n");
        }
        self.count_mask(i.mask() as usize, j.mask() as usize, k.mask() as usize)
    }
}

/// Number of nonnegative integer matrices with row sums `rows` and column
/// sums `cols`.
pub fn matrix_count(rows: &Composition, cols: &Composition) -> i64 {
    assert_eq!(rows.size(), cols.size(), "margins must have equal totals");
    let mut col_rem: Vec<usize> = cols.parts().to_vec();
    fill_rows(rows.parts(), 0, &mut col_rem)
}

fn fill_rows(rows: &[usize], row: usize, col_rem: &mut Vec<usize>) -> i64 {
    if row == rows.len() {
        return if col_rem.iter().all(|&c| c == 0) { 1 } else { 0 };
    }
    fill_cells(rows, row, 0, rows[row], col_rem)
}

fn fill_cells(rows: &[usize], row: usize, col: usize, rem: usize, col_rem: &mut Vec<usize>) -> i64 {
    if col == col_rem.len() {
        return if rem == 0 {
            fill_rows(rows, row + 1, col_rem)
        } else {
            0
        };
    }
    let mut total = 0;
    for e in 0..=rem.min(col_rem[col]) {
        col_rem[col] -= e;
        total += fill_cells(rows, row, col + 1, rem - e, col_rem);
        col_rem[col] += e;
    }
    total
}

/// Number of nonnegative integer matrices with row sums `rows`, column sums
/// `cols` and the given reading word: scanning the matrix row by row from top
/// to bottom and dropping zero entries must spell out exactly the parts of
/// `word`.
pub fn reading_word_matrix_count(
    rows: &Composition,
    cols: &Composition,
    word: &Composition,
) -> i64 {
    assert_eq!(rows.size(), cols.size(), "margins must have equal totals");
    assert_eq!(rows.size(), word.size(), "the word must use the full weight");
    let mut col_rem: Vec<usize> = cols.parts().to_vec();
    word_cells(rows.parts(), word.parts(), 0, 0, rows.parts()[0], &mut col_rem, 0)
}

#[allow(clippy::too_many_arguments)]
fn word_cells(
    rows: &[usize],
    word: &[usize],
    row: usize,
    col: usize,
    rem: usize,
    col_rem: &mut Vec<usize>,
    wi: usize,
) -> i64 {
    if wi == word.len() {
        // All the weight is placed, so every remaining margin is exhausted
        // and the rest of the matrix is forced to zero.
        return 1;
    }
    if row == rows.len() {
        return 0;
    }
    if col == col_rem.len() {
        if rem != 0 {
            return 0;
        }
        let next = rows.get(row + 1).copied().unwrap_or(0);
        return word_cells(rows, word, row + 1, 0, next, col_rem, wi);
    }
    // Leave the cell zero, or place the next letter of the word in it.
    let mut total = word_cells(rows, word, row, col + 1, rem, col_rem, wi);
    let e = word[wi];
    if e <= rem && e <= col_rem[col] {
        col_rem[col] -= e;
        total += word_cells(rows, word, row, col + 1, rem - e, col_rem, wi + 1);
        col_rem[col] += e;
    }
    total
}

/// Number of three-dimensional nonnegative integer arrays `M` over
/// `i < r.len()`, `j < q.len()`, `k < p.len()` whose plane sums are the three
/// margins: summing `M` over `(i, j)` gives `p`, over `(i, k)` gives `q` and
/// over `(j, k)` gives `r`.
pub fn matrix_count_3d(p: &Composition, q: &Composition, r: &Composition) -> i64 {
    assert_eq!(p.size(), q.size(), "margins must have equal totals");
    assert_eq!(p.size(), r.size(), "margins must have equal totals");
    let mut p_rem: Vec<usize> = p.parts().to_vec();
    let mut q_rem: Vec<usize> = q.parts().to_vec();
    let mut r_rem: Vec<usize> = r.parts().to_vec();
    cube_cells(0, &mut p_rem, &mut q_rem, &mut r_rem)
}

fn cube_cells(
    idx: usize,
    p_rem: &mut Vec<usize>,
    q_rem: &mut Vec<usize>,
    r_rem: &mut Vec<usize>,
) -> i64 {
    let slab = q_rem.len() * p_rem.len();
    let cells = r_rem.len() * slab;
    if idx == cells {
        let done = p_rem.iter().all(|&v| v == 0)
            && q_rem.iter().all(|&v| v == 0)
            && r_rem.iter().all(|&v| v == 0);
        return if done { 1 } else { 0 };
    }
    let i = idx / slab;
    if idx.is_multiple_of(slab) && i > 0 && r_rem[i - 1] != 0 {
        // The slab for i - 1 is complete but its margin is not exhausted.
        return 0;
    }
    let j = (idx % slab) / p_rem.len();
    let k = idx % p_rem.len();
    let mut total = 0;
    for e in 0..=p_rem[k].min(q_rem[j]).min(r_rem[i]) {
        p_rem[k] -= e;
        q_rem[j] -= e;
        r_rem[i] -= e;
        total += cube_cells(idx + 1, p_rem, q_rem, r_rem);
        p_rem[k] += e;
        q_rem[j] += e;
        r_rem[i] += e;
    }
    total
}
