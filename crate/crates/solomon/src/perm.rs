//! Window-notation permutations of `S_n` and signed permutations of `B_n`.

use crate::partition::{BiPartition, IndexSubset, Partition, SubsetKind};

/// A permutation of `{1, ..., n}` in window notation: `window[i]` is the
/// image of `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    window: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation, panicking unless the window is a rearrangement
    /// of `1..=n`.
    pub fn new(window: Vec<usize>) -> Self {
        let n = window.len();
        let mut seen = vec![false; n + 1];
        for &v in &window {
            assert!((1..=n).contains(&v) && !seen[v], "not a permutation window");
            seen[v] = true;
        }
        Permutation { window }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            window: (1..=n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[usize] {
        &self.window
    }

    /// Image of `i` for `i` in `1..=n`.
    pub fn apply(&self, i: usize) -> usize {
        self.window[i - 1]
    }

    /// The composite mapping `i` to `self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n());
        Permutation {
            window: other.window.iter().map(|&v| self.window[v - 1]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut window = vec![0; self.n()];
        for (i, &v) in self.window.iter().enumerate() {
            window[v - 1] = i + 1;
        }
        Permutation { window }
    }

    /// Positions `i` with `w(i) > w(i+1)`, as a subset of `{1,...,n-1}`.
    pub fn descent_set(&self) -> IndexSubset {
        let elements: Vec<usize> = (1..self.n())
            .filter(|&i| self.window[i - 1] > self.window[i])
            .collect();
        IndexSubset::from_elements(SubsetKind::TypeA, self.n(), &elements)
    }

    /// Cycle lengths, sorted into a partition of `n`.
    pub fn cycle_type(&self) -> Partition {
        let n = self.n();
        let mut seen = vec![false; n + 1];
        let mut lengths = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.apply(i);
                len += 1;
            }
            lengths.push(len);
        }
        lengths.sort_unstable_by(|a: &usize, b| b.cmp(a));
        Partition::new(lengths)
    }

    /// All of `S_n` in lexicographic window order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut window = Vec::new();
        let mut used = vec![false; n + 1];
        fill(n, &mut window, &mut used, &mut out);
        out
    }
}

fn fill(n: usize, window: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Permutation>) {
    if window.len() == n {
        out.push(Permutation {
            window: window.clone(),
        });
        return;
    }
    for v in 1..=n {
        if !used[v] {
            used[v] = true;
            window.push(v);
            fill(n, window, used, out);
            window.pop();
            used[v] = false;
        }
    }
}

impl std::fmt::Display for Permutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.window.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// A signed permutation of `{-n,...,-1,1,...,n}` with `w(-i) = -w(i)`,
/// stored by its window `w(1), ..., w(n)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedPermutation {
    window: Vec<i64>,
}

impl SignedPermutation {
    /// Builds a signed permutation, panicking unless the absolute values of
    /// the window form a rearrangement of `1..=n`.
    pub fn new(window: Vec<i64>) -> Self {
        let n = window.len();
        let mut seen = vec![false; n + 1];
        for &v in &window {
            let a = v.unsigned_abs() as usize;
            assert!(v != 0 && a <= n && !seen[a], "not a signed window");
            seen[a] = true;
        }
        SignedPermutation { window }
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            window: (1..=n as i64).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    /// Image of a signed index `i` with `1 <= |i| <= n`.
    pub fn apply(&self, i: i64) -> i64 {
        if i > 0 {
            self.window[(i - 1) as usize]
        } else {
            -self.window[(-i - 1) as usize]
        }
    }

    /// The composite mapping `i` to `self(other(i))`.
    pub fn compose(&self, other: &SignedPermutation) -> SignedPermutation {
        assert_eq!(self.n(), other.n());
        SignedPermutation {
            window: (1..=self.n() as i64).map(|i| self.apply(other.apply(i))).collect(),
        }
    }

    pub fn inverse(&self) -> SignedPermutation {
        let mut window = vec![0i64; self.n()];
        for (i, &v) in self.window.iter().enumerate() {
            let idx = (v.unsigned_abs() - 1) as usize;
            window[idx] = if v > 0 { i as i64 + 1 } else { -(i as i64 + 1) };
        }
        SignedPermutation { window }
    }

    /// Type B descents: `0` when the first window entry is negative, and
    /// every `i >= 1` with `w(i) > w(i+1)` in the integer order.
    pub fn descent_set(&self) -> IndexSubset {
        let mut elements = Vec::new();
        if self.window[0] < 0 {
            elements.push(0);
        }
        for i in 1..self.n() {
            if self.window[i - 1] > self.window[i] {
                elements.push(i);
            }
        }
        IndexSubset::from_elements(SubsetKind::TypeB, self.n(), &elements)
    }

    /// The signed cycle type: cycle lengths of the underlying unsigned
    /// permutation, split by the product of signs along each cycle, negative
    /// cycles in the minus component.
    pub fn cycle_type(&self) -> BiPartition {
        let n = self.n();
        let mut seen = vec![false; n + 1];
        let mut minus = Vec::new();
        let mut plus = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut len = 0usize;
            let mut negative = false;
            let mut i = start;
            loop {
                seen[i] = true;
                len += 1;
                let v = self.window[i - 1];
                negative ^= v < 0;
                i = v.unsigned_abs() as usize;
                if i == start {
                    break;
                }
            }
            if negative {
                minus.push(len);
            } else {
                plus.push(len);
            }
        }
        minus.sort_unstable_by(|a, b| b.cmp(a));
        plus.sort_unstable_by(|a, b| b.cmp(a));
        BiPartition::new(Partition::new(minus), Partition::new(plus))
    }

    /// All of `B_n`: every window rearrangement with every sign pattern.
    pub fn all(n: usize) -> Vec<SignedPermutation> {
        let mut out = Vec::new();
        for base in Permutation::all(n) {
            for signs in 0u32..(1 << n) {
                let window = base
                    .window()
                    .iter()
                    .enumerate()
                    .map(|(i, &v)| if signs & (1 << i) != 0 { -(v as i64) } else { v as i64 })
                    .collect();
                out.push(SignedPermutation { window });
            }
        }
        out
    }
}

impl std::fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.window.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Partition;

    #[test]
    fn group_sizes() {
        for n in 1..=6 {
            let fact: usize = (1..=n).product();
            assert_eq!(Permutation::all(n).len(), fact);
        }
        for n in 1..=4 {
            let fact: usize = (1..=n).product();
            assert_eq!(SignedPermutation::all(n).len(), (1 << n) * fact);
        }
    }

    #[test]
    fn compose_and_inverse_are_consistent() {
        for p in Permutation::all(4) {
            assert_eq!(p.compose(&p.inverse()), Permutation::identity(4));
            assert_eq!(p.inverse().compose(&p), Permutation::identity(4));
        }
        for p in SignedPermutation::all(3) {
            assert_eq!(p.compose(&p.inverse()), SignedPermutation::identity(3));
            assert_eq!(p.inverse().compose(&p), SignedPermutation::identity(3));
        }
    }

    #[test]
    fn composition_applies_right_factor_first() {
        let s = Permutation::new(vec![2, 1, 3]);
        let t = Permutation::new(vec![1, 3, 2]);
        // (s.compose(t))(2) = s(t(2)) = s(3) = 3.
        assert_eq!(s.compose(&t).window(), &[2, 3, 1]);
        assert_eq!(t.compose(&s).window(), &[3, 1, 2]);
    }

    #[test]
    fn descent_sets_of_small_windows() {
        assert!(Permutation::identity(4).descent_set().is_empty());
        assert_eq!(
            Permutation::new(vec![3, 2, 1]).descent_set().elements(),
            vec![1, 2]
        );
        let d = |w: Vec<i64>| SignedPermutation::new(w).descent_set().elements();
        assert_eq!(d(vec![1, 2]), Vec::<usize>::new());
        assert_eq!(d(vec![-1, 2]), vec![0]);
        assert_eq!(d(vec![-2, 1]), vec![0]);
        assert_eq!(d(vec![-2, -1]), vec![0]);
        assert_eq!(d(vec![2, 1]), vec![1]);
        assert_eq!(d(vec![1, -2]), vec![1]);
        assert_eq!(d(vec![-1, -2]), vec![0, 1]);
    }

    #[test]
    fn signed_cycle_types() {
        let t = |w: Vec<i64>| SignedPermutation::new(w).cycle_type();
        assert_eq!(
            t(vec![1, 2, 3]),
            BiPartition::new(Partition::empty(), Partition::new(vec![1, 1, 1]))
        );
        assert_eq!(
            t(vec![-1, 2, 3]),
            BiPartition::new(Partition::new(vec![1]), Partition::new(vec![1, 1]))
        );
        assert_eq!(
            t(vec![2, -1]),
            BiPartition::new(Partition::new(vec![2]), Partition::empty())
        );
        assert_eq!(
            t(vec![2, 1]),
            BiPartition::new(Partition::empty(), Partition::new(vec![2]))
        );
    }

    #[test]
    fn cycle_type_is_a_class_invariant() {
        for g in SignedPermutation::all(3) {
            for h in SignedPermutation::all(3).iter().take(8) {
                let conj = h.compose(&g).compose(&h.inverse());
                assert_eq!(conj.cycle_type(), g.cycle_type());
            }
        }
    }
}
