//! Irreducible characters of the symmetric and hyperoctahedral groups, and
//! the Kronecker coefficients contracted from them.
//!
//! Symmetric group characters come from border strip removal on beta
//! numbers. Hyperoctahedral characters are indexed here by the shapes
//! tileable by dominoes: the character belonging to such a shape is built
//! from the symmetric group characters of its 2-quotient pair, summing over
//! the ways to split the cycles of a signed class between the two
//! components, with a sign for each negative cycle sent to the minus
//! component.

use crate::partition::{bipartitions, domino_shapes, partitions, BiPartition, Partition};
use crate::perm::SignedPermutation;
use crate::Error;
use std::collections::HashMap;

pub(crate) fn factorial(n: usize) -> i64 {
    (1..=n as i64).product()
}

/// Irreducible symmetric group character `chi^lambda` on the class `mu`,
/// by border strip removal on beta numbers: removing a strip of size `k`
/// lowers one beta number by `k`, with sign the parity of the number of
/// beta numbers it jumps over.
pub fn chi(lambda: &Partition, mu: &Partition) -> i64 {
    assert_eq!(lambda.size(), mu.size(), "shape and class sizes must agree");
    let betas = lambda.beta_set(lambda.len());
    let mut cache = HashMap::new();
    chi_rec(&betas, mu.parts(), 0, &mut cache)
}

fn chi_rec(
    betas: &[usize],
    parts: &[usize],
    idx: usize,
    cache: &mut HashMap<(Vec<usize>, usize), i64>,
) -> i64 {
    if idx == parts.len() {
        return 1;
    }
    let key = (betas.to_vec(), idx);
    if let Some(&v) = cache.get(&key) {
        return v;
    }
    let k = parts[idx];
    let mut total = 0;
    for i in 0..betas.len() {
        let b = betas[i];
        if b >= k && !betas.contains(&(b - k)) {
            let crossed = betas.iter().filter(|&&c| b - k < c && c < b).count();
            let sign = if crossed % 2 == 0 { 1 } else { -1 };
            let mut next = betas.to_vec();
            next[i] = b - k;
            next.sort_unstable_by(|a, b| b.cmp(a));
            total += sign * chi_rec(&next, parts, idx + 1, cache);
        }
    }
    cache.insert(key, total);
    total
}

/// Centralizer order of a symmetric group class: the product of
/// `i^(m_i) * m_i!` over the part multiplicities.
pub fn centralizer_order(mu: &Partition) -> i64 {
    let mut z = 1i64;
    for (i, &m) in mu.multiplicities().iter().enumerate() {
        z *= ((i + 1) as i64).pow(m as u32) * factorial(m);
    }
    z
}

/// Size of a symmetric group conjugacy class.
pub fn class_size(mu: &Partition) -> i64 {
    let z = centralizer_order(mu);
    let order = factorial(mu.size());
    assert_eq!(order % z, 0);
    order / z
}

/// The full character table of a symmetric group, rows by shape and
/// columns by class, both in reverse lexicographic order.
pub struct CharTableA {
    n: usize,
    shapes: Vec<Partition>,
    table: Vec<Vec<i64>>,
}

impl CharTableA {
    pub fn new(n: usize) -> Self {
        let shapes = partitions(n);
        let table = shapes
            .iter()
            .map(|l| shapes.iter().map(|m| chi(l, m)).collect())
            .collect();
        CharTableA { n, shapes, table }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Shapes, which double as class labels.
    pub fn shapes(&self) -> &[Partition] {
        &self.shapes
    }

    fn index(&self, p: &Partition) -> usize {
        self.shapes
            .iter()
            .position(|q| q == p)
            .expect("partition of the wrong size")
    }

    pub fn chi(&self, shape: &Partition, class: &Partition) -> i64 {
        self.table[self.index(shape)][self.index(class)]
    }
}

/// Kronecker coefficients of a symmetric group: multiplicities in tensor
/// products of irreducibles, contracted from the character table.
pub struct KroneckerA {
    table: CharTableA,
    cube: Vec<i64>,
}

impl KroneckerA {
    pub fn new(n: usize) -> Self {
        let table = CharTableA::new(n);
        let s = table.shapes.len();
        let order = factorial(n);
        let sizes: Vec<i64> = table.shapes.iter().map(class_size).collect();
        let mut cube = vec![0i64; s * s * s];
        for a in 0..s {
            for b in 0..s {
                for c in 0..s {
                    let sum: i64 = (0..s)
                        .map(|r| sizes[r] * table.table[a][r] * table.table[b][r] * table.table[c][r])
                        .sum();
                    assert_eq!(sum % order, 0, "character contraction must be integral");
                    let g = sum / order;
                    assert!(g >= 0, "multiplicities cannot be negative");
                    cube[(a * s + b) * s + c] = g;
                }
            }
        }
        KroneckerA { table, cube }
    }

    pub fn n(&self) -> usize {
        self.table.n
    }

    pub fn shapes(&self) -> &[Partition] {
        &self.table.shapes
    }

    pub fn g(&self, a: &Partition, b: &Partition, c: &Partition) -> i64 {
        let s = self.table.shapes.len();
        let (a, b, c) = (self.table.index(a), self.table.index(b), self.table.index(c));
        self.cube[(a * s + b) * s + c]
    }
}

/// Centralizer order of a signed class `(minus, plus)` in a hyperoctahedral
/// group: `2^cycles * z(minus) * z(plus)`.
pub fn centralizer_order_b(class: &BiPartition) -> i64 {
    let cycles = (class.minus.len() + class.plus.len()) as u32;
    2i64.pow(cycles) * centralizer_order(&class.minus) * centralizer_order(&class.plus)
}

/// Size of a hyperoctahedral conjugacy class.
pub fn class_size_b(class: &BiPartition) -> i64 {
    let n = class.size();
    let order = 2i64.pow(n as u32) * factorial(n);
    let z = centralizer_order_b(class);
    assert_eq!(order % z, 0);
    order / z
}

/// Hyperoctahedral character attached to a domino tileable shape of size
/// `2n`, on the signed class `(minus, plus)` of total size `n`.
///
/// The character splits through the 2-quotient `(q_minus, q_plus)` of the
/// shape: sum over all ways to assign each cycle of the class to one of the
/// two components so the sizes fit, of the product of symmetric group
/// characters, negated once for every negative cycle assigned to the minus
/// component.
pub fn psi(shape: &Partition, class: &BiPartition) -> Result<i64, Error> {
    let q = shape.two_quotient()?;
    assert_eq!(shape.size(), 2 * class.size(), "shape must have twice the class size");
    let mut cycles: Vec<(usize, bool)> = Vec::new();
    cycles.extend(class.minus.parts().iter().map(|&p| (p, true)));
    cycles.extend(class.plus.parts().iter().map(|&p| (p, false)));
    let mut total = 0i64;
    for mask in 0u32..(1 << cycles.len()) {
        // Bit set: the cycle goes to the minus component.
        let mut to_minus = Vec::new();
        let mut to_plus = Vec::new();
        let mut sign = 1i64;
        for (i, &(p, negative)) in cycles.iter().enumerate() {
            if mask & (1 << i) != 0 {
                to_minus.push(p);
                if negative {
                    sign = -sign;
                }
            } else {
                to_plus.push(p);
            }
        }
        if to_minus.iter().sum::<usize>() != q.minus.size() {
            continue;
        }
        to_minus.sort_unstable_by(|a, b| b.cmp(a));
        to_plus.sort_unstable_by(|a, b| b.cmp(a));
        total += sign
            * chi(&q.minus, &Partition::new(to_minus))
            * chi(&q.plus, &Partition::new(to_plus));
    }
    Ok(total)
}

/// The character table of a hyperoctahedral group: rows are domino
/// tileable shapes of size `2n`, columns the signed classes `(minus, plus)`
/// with `|minus| + |plus| = n`.
pub struct CharTableB {
    n: usize,
    shapes: Vec<Partition>,
    classes: Vec<BiPartition>,
    table: Vec<Vec<i64>>,
}

impl CharTableB {
    pub fn new(n: usize) -> Self {
        let shapes = domino_shapes(n);
        let classes = bipartitions(n);
        let table = shapes
            .iter()
            .map(|s| classes.iter().map(|c| psi(s, c).unwrap()).collect())
            .collect();
        CharTableB { n, shapes, classes, table }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn shapes(&self) -> &[Partition] {
        &self.shapes
    }

    pub fn classes(&self) -> &[BiPartition] {
        &self.classes
    }

    fn shape_index(&self, p: &Partition) -> usize {
        self.shapes
            .iter()
            .position(|q| q == p)
            .expect("not a domino tileable shape of size 2n")
    }

    fn class_index(&self, c: &BiPartition) -> usize {
        self.classes
            .iter()
            .position(|d| d == c)
            .expect("not a signed class of size n")
    }

    pub fn psi(&self, shape: &Partition, class: &BiPartition) -> i64 {
        self.table[self.shape_index(shape)][self.class_index(class)]
    }
}

/// Hyperoctahedral Kronecker coefficients, contracted from [`CharTableB`].
pub struct KroneckerB {
    table: CharTableB,
    cube: Vec<i64>,
}

impl KroneckerB {
    /// Contracts over classes weighted by the class size formula.
    pub fn new(n: usize) -> Self {
        let table = CharTableB::new(n);
        let weights: Vec<i64> = table.classes.iter().map(class_size_b).collect();
        Self::contract(table, &weights)
    }

    /// Contracts over classes weighted by walking the whole group and
    /// counting elements per signed cycle type. Slower, and independent of
    /// the class size formula.
    pub fn from_group_sum(n: usize) -> Self {
        let table = CharTableB::new(n);
        let mut weights = vec![0i64; table.classes.len()];
        for w in SignedPermutation::all(n) {
            weights[table.class_index(&w.cycle_type())] += 1;
        }
        Self::contract(table, &weights)
    }

    fn contract(table: CharTableB, weights: &[i64]) -> Self {
        let s = table.shapes.len();
        let order = 2i64.pow(table.n as u32) * factorial(table.n);
        let mut cube = vec![0i64; s * s * s];
        for a in 0..s {
            for b in 0..s {
                for c in 0..s {
                    let sum: i64 = (0..table.classes.len())
                        .map(|r| weights[r] * table.table[a][r] * table.table[b][r] * table.table[c][r])
                        .sum();
                    assert_eq!(sum % order, 0, "character contraction must be integral");
                    let g = sum / order;
                    assert!(g >= 0, "multiplicities cannot be negative");
                    cube[(a * s + b) * s + c] = g;
                }
            }
        }
        KroneckerB { table, cube }
    }

    pub fn n(&self) -> usize {
        self.table.n
    }

    pub fn shapes(&self) -> &[Partition] {
        &self.table.shapes
    }

    pub fn g(&self, a: &Partition, b: &Partition, c: &Partition) -> i64 {
        let s = self.table.shapes.len();
        let (a, b, c) = (
            self.table.shape_index(a),
            self.table.shape_index(b),
            self.table.shape_index(c),
        );
        self.cube[(a * s + b) * s + c]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domino::standard_domino_tableaux;
    use crate::perm::Permutation;
    use crate::poly::{Alphabet, Poly};
    use crate::tableau::standard_tableaux;
    use std::collections::BTreeMap;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn the_symmetric_group_table_for_three_points() {
        let t = CharTableA::new(3);
        // Shapes and classes both run [3], [2,1], [1,1,1].
        assert_eq!(t.table, vec![vec![1, 1, 1], vec![-1, 0, 2], vec![1, -1, 1]]);
    }

    #[test]
    fn characters_at_the_identity_count_standard_tableaux() {
        for n in 1..=6 {
            let class = p(&vec![1; n]);
            for shape in partitions(n) {
                assert_eq!(
                    chi(&shape, &class),
                    standard_tableaux(&shape).len() as i64,
                    "shape {shape}"
                );
            }
        }
    }

    #[test]
    fn rows_are_orthogonal_with_class_size_weights() {
        for n in 1..=6 {
            let t = CharTableA::new(n);
            let sizes: Vec<i64> = t.shapes().iter().map(class_size).collect();
            assert_eq!(sizes.iter().sum::<i64>(), factorial(n));
            for a in 0..t.shapes().len() {
                for b in 0..t.shapes().len() {
                    let dot: i64 = (0..t.shapes().len())
                        .map(|r| sizes[r] * t.table[a][r] * t.table[b][r])
                        .sum();
                    let expect = if a == b { factorial(n) } else { 0 };
                    assert_eq!(dot, expect, "n = {n}");
                }
            }
        }
    }

    #[test]
    fn class_sizes_match_a_group_walk() {
        for n in 1..=5 {
            let mut counts: BTreeMap<Partition, i64> = BTreeMap::new();
            for w in Permutation::all(n) {
                *counts.entry(w.cycle_type()).or_insert(0) += 1;
            }
            for mu in partitions(n) {
                assert_eq!(counts[&mu], class_size(&mu), "class {mu}");
            }
        }
    }

    #[test]
    fn power_sums_expand_over_schur_functions_with_character_coefficients() {
        let x = Alphabet::type_a(4);
        for n in 1..=4 {
            for rho in partitions(n) {
                let mut lhs = Poly::constant(1);
                for &k in rho.parts() {
                    lhs = &lhs * &x.eval_p(k).unwrap();
                }
                let mut rhs = Poly::zero();
                for shape in partitions(n) {
                    rhs += &x.eval_s(&shape).unwrap().scaled(chi(&shape, &rho));
                }
                assert_eq!(lhs, rhs, "class {rho}");
            }
        }
    }

    #[test]
    fn small_kronecker_coefficients() {
        let k = KroneckerA::new(3);
        // Squaring the two dimensional irreducible meets everything once.
        for shape in partitions(3) {
            assert_eq!(k.g(&p(&[2, 1]), &p(&[2, 1]), &shape), 1);
        }
        assert_eq!(k.g(&p(&[3]), &p(&[2, 1]), &p(&[1, 1, 1])), 0);
    }

    #[test]
    fn tensoring_with_the_trivial_and_sign_characters() {
        for n in 1..=5 {
            let k = KroneckerA::new(n);
            let trivial = p(&[n]);
            let sign = p(&vec![1; n]);
            for a in partitions(n) {
                for b in partitions(n) {
                    let expect = if a == b { 1 } else { 0 };
                    assert_eq!(k.g(&a, &b, &trivial), expect);
                    let expect = if b == a.transpose() { 1 } else { 0 };
                    assert_eq!(k.g(&a, &b, &sign), expect, "{a} {b}");
                }
            }
        }
    }

    #[test]
    fn signed_class_sizes_match_a_group_walk() {
        for n in 1..=3 {
            let mut counts: BTreeMap<BiPartition, i64> = BTreeMap::new();
            for w in SignedPermutation::all(n) {
                *counts.entry(w.cycle_type()).or_insert(0) += 1;
            }
            for class in bipartitions(n) {
                assert_eq!(counts[&class], class_size_b(&class), "class {class}");
            }
            let total: i64 = bipartitions(n).iter().map(class_size_b).sum();
            assert_eq!(total, 2i64.pow(n as u32) * factorial(n));
        }
    }

    #[test]
    fn hyperoctahedral_characters_of_one_signed_point() {
        let t = CharTableB::new(1);
        // Classes run ([1], []), ([], [1]); shapes run [2], [1,1].
        assert_eq!(t.psi(&p(&[2]), &BiPartition::new(p(&[1]), Partition::empty())), 1);
        assert_eq!(t.psi(&p(&[2]), &BiPartition::new(Partition::empty(), p(&[1]))), 1);
        assert_eq!(t.psi(&p(&[1, 1]), &BiPartition::new(p(&[1]), Partition::empty())), -1);
        assert_eq!(t.psi(&p(&[1, 1]), &BiPartition::new(Partition::empty(), p(&[1]))), 1);
    }

    #[test]
    fn hyperoctahedral_characters_at_the_identity_count_domino_tableaux() {
        for n in 1..=3 {
            let t = CharTableB::new(n);
            let identity = BiPartition::new(Partition::empty(), p(&vec![1; n]));
            for shape in domino_shapes(n) {
                assert_eq!(
                    t.psi(&shape, &identity),
                    standard_domino_tableaux(&shape).len() as i64,
                    "shape {shape}"
                );
            }
        }
    }

    #[test]
    fn hyperoctahedral_rows_are_orthogonal() {
        for n in 1..=3 {
            let t = CharTableB::new(n);
            let weights: Vec<i64> = t.classes().iter().map(class_size_b).collect();
            let order = 2i64.pow(n as u32) * factorial(n);
            for a in 0..t.shapes().len() {
                for b in 0..t.shapes().len() {
                    let dot: i64 = (0..t.classes().len())
                        .map(|r| weights[r] * t.table[a][r] * t.table[b][r])
                        .sum();
                    let expect = if a == b { order } else { 0 };
                    assert_eq!(dot, expect, "n = {n}");
                }
            }
        }
    }

    #[test]
    fn hyperoctahedral_kronecker_coefficients_of_one_signed_point() {
        let k = KroneckerB::new(1);
        let (row, col) = (p(&[2]), p(&[1, 1]));
        // The coefficient is 1 when the column shape appears evenly.
        for (a, b, c, expect) in [
            (&row, &row, &row, 1),
            (&row, &row, &col, 0),
            (&row, &col, &col, 1),
            (&col, &col, &col, 0),
        ] {
            assert_eq!(k.g(a, b, c), expect);
        }
    }

    #[test]
    fn the_two_kronecker_contractions_agree() {
        for n in 1..=3 {
            let by_formula = KroneckerB::new(n);
            let by_group = KroneckerB::from_group_sum(n);
            assert_eq!(by_formula.cube, by_group.cube, "n = {n}");
        }
    }
}
