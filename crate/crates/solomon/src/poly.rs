//! Exact multivariate polynomials and ordered alphabets.
//!
//! An [`Alphabet`] is an ordered list of letters, each standing for a
//! monomial in an ambient [`VarSpace`]. Plain alphabets use one variable per
//! letter; product alphabets use pairs, ordered lexicographically, so that
//! quasisymmetric evaluations over them make sense. Type B alphabets carry a
//! distinguished smallest zero letter at position 0.
//!
//! Sums over (semi)standard tableaux or over constrained index sequences
//! turn an alphabet into concrete polynomials: monomial and fundamental
//! quasisymmetric functions of both types, Schur functions, power sums, and
//! the generating functions of semistandard domino tableaux.

use crate::domino::semistandard_domino_tableaux;
use crate::partition::{Composition, IndexSubset, Partition, SubsetKind};
use crate::tableau::semistandard_tableaux;
use crate::Error;
use std::collections::BTreeMap;

/// Sparse exponent vector, sorted by variable id, exponents positive.
pub type Monomial = Vec<(u16, u16)>;

fn mono_mul(a: &[(u16, u16)], b: &[(u16, u16)]) -> Monomial {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i]);
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push(b[j]);
            j += 1;
        } else {
            out.push((a[i].0, a[i].1 + b[j].1));
            i += 1;
            j += 1;
        }
    }
    out
}

fn mono_pow(a: &[(u16, u16)], k: u16) -> Monomial {
    if k == 0 {
        return Vec::new();
    }
    a.iter().map(|&(v, e)| (v, e * k)).collect()
}

/// A polynomial with exact integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, i64>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly::default()
    }

    pub fn constant(c: i64) -> Poly {
        let mut p = Poly::zero();
        p.add_term(Vec::new(), c);
        p
    }

    pub fn var(id: u16) -> Poly {
        let mut p = Poly::zero();
        p.add_term(vec![(id, 1)], 1);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, i64)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn coeff(&self, mono: &[(u16, u16)]) -> i64 {
        self.terms.get(mono).copied().unwrap_or(0)
    }

    /// Adds `c` times the monomial, dropping the term if it cancels.
    pub fn add_term(&mut self, mono: Monomial, c: i64) {
        if c == 0 {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if *e.get() == 0 {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn scaled(&self, c: i64) -> Poly {
        let mut out = Poly::zero();
        if c != 0 {
            for (m, v) in &self.terms {
                out.terms.insert(m.clone(), v * c);
            }
        }
        out
    }

    pub fn pow(&self, k: usize) -> Poly {
        let mut out = Poly::constant(1);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Renders the polynomial with the variable names of `space`, terms in
    /// the internal monomial order.
    pub fn dump(&self, space: &VarSpace) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (mono, c)) in self.terms.iter().enumerate() {
            if i == 0 {
                if *c < 0 {
                    out.push('-');
                }
            } else if *c < 0 {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let abs = c.unsigned_abs();
            let mut factors = Vec::new();
            if abs != 1 || mono.is_empty() {
                factors.push(abs.to_string());
            }
            for &(v, e) in mono {
                if e == 1 {
                    factors.push(space.name(v).to_string());
                } else {
                    factors.push(format!("{}^{}", space.name(v), e));
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

impl std::ops::AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), *c);
        }
    }
}

impl std::ops::Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl std::ops::Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl std::ops::Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(mono_mul(ma, mb), ca * cb);
            }
        }
        out
    }
}

/// Names for the variables a family of alphabets shares.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarSpace {
    names: Vec<String>,
}

impl VarSpace {
    pub fn new(names: Vec<String>) -> Self {
        VarSpace { names }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, id: u16) -> &str {
        &self.names[id as usize]
    }
}

/// Whether an alphabet has a distinguished zero letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlphabetKind {
    /// Letters at positions `1..=max_position`.
    TypeA,
    /// Letters at positions `0..=max_position`, the zero letter smallest.
    TypeB,
}

/// An ordered alphabet of monomial letters.
#[derive(Clone, Debug)]
pub struct Alphabet {
    kind: AlphabetKind,
    space: VarSpace,
    letters: Vec<Monomial>,
}

impl Alphabet {
    /// The alphabet `x1 < ... < xn`.
    pub fn type_a(n: usize) -> Alphabet {
        let space = VarSpace::new((1..=n).map(|i| format!("x{i}")).collect());
        let letters = (0..n as u16).map(|i| vec![(i, 1)]).collect();
        Alphabet { kind: AlphabetKind::TypeA, space, letters }
    }

    /// The alphabet `x0 < x1 < ... < xn` with zero letter `x0`.
    pub fn type_b(n: usize) -> Alphabet {
        let space = VarSpace::new((0..=n).map(|i| format!("x{i}")).collect());
        let letters = (0..=n as u16).map(|i| vec![(i, 1)]).collect();
        Alphabet { kind: AlphabetKind::TypeB, space, letters }
    }

    /// The alphabets `X = x1..xn`, `Y = y1..ym` and their lexicographic
    /// product `XY` of pairs, all over one variable space. The letter for
    /// the pair `(i, j)` stands for `xi * yj`.
    pub fn product_a(n: usize, m: usize) -> (Alphabet, Alphabet, Alphabet) {
        let mut names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
        names.extend((1..=m).map(|j| format!("y{j}")));
        let space = VarSpace::new(names);
        let x = Alphabet {
            kind: AlphabetKind::TypeA,
            space: space.clone(),
            letters: (0..n as u16).map(|i| vec![(i, 1)]).collect(),
        };
        let y = Alphabet {
            kind: AlphabetKind::TypeA,
            space: space.clone(),
            letters: (0..m as u16).map(|j| vec![(n as u16 + j, 1)]).collect(),
        };
        let mut letters = Vec::new();
        for i in 0..n as u16 {
            for j in 0..m as u16 {
                letters.push(mono_mul(&[(i, 1)], &[(n as u16 + j, 1)]));
            }
        }
        (x, y, Alphabet { kind: AlphabetKind::TypeA, space, letters })
    }

    /// The type B alphabets `X = x0..xn`, `Y = y0..ym` and their product.
    ///
    /// The product letters are the pairs of signed letters `(i, j)` with
    /// `|i| <= n`, `|j| <= m`, identified under joint negation. The chosen
    /// representatives have `i >= 0`, with `j >= 0` forced when `i = 0`;
    /// they are ordered lexicographically with signed comparison of the
    /// second coordinate, which keeps the zero letter `(0, 0)` smallest.
    /// The letter for `(i, j)` stands for `x|i| * y|j|`.
    pub fn product_b(n: usize, m: usize) -> (Alphabet, Alphabet, Alphabet) {
        let mut names: Vec<String> = (0..=n).map(|i| format!("x{i}")).collect();
        names.extend((0..=m).map(|j| format!("y{j}")));
        let space = VarSpace::new(names);
        let yvar = |j: usize| (n + 1 + j) as u16;
        let x = Alphabet {
            kind: AlphabetKind::TypeB,
            space: space.clone(),
            letters: (0..=n as u16).map(|i| vec![(i, 1)]).collect(),
        };
        let y = Alphabet {
            kind: AlphabetKind::TypeB,
            space: space.clone(),
            letters: (0..=m).map(|j| vec![(yvar(j), 1)]).collect(),
        };
        let mut letters = Vec::new();
        for j in 0..=m {
            letters.push(mono_mul(&[(0, 1)], &[(yvar(j), 1)]));
        }
        for i in 1..=n as u16 {
            for j in (1..=m).rev().map(|j| -(j as i64)).chain(0..=m as i64) {
                letters.push(mono_mul(&[(i, 1)], &[(yvar(j.unsigned_abs() as usize), 1)]));
            }
        }
        (x, y, Alphabet { kind: AlphabetKind::TypeB, space, letters })
    }

    pub fn kind(&self) -> AlphabetKind {
        self.kind
    }

    pub fn space(&self) -> &VarSpace {
        &self.space
    }

    /// The largest letter position: letters sit at `1..=max_position` for
    /// type A and `0..=max_position` for type B.
    pub fn max_position(&self) -> usize {
        match self.kind {
            AlphabetKind::TypeA => self.letters.len(),
            AlphabetKind::TypeB => self.letters.len() - 1,
        }
    }

    /// The monomial of the letter at a position.
    pub fn letter(&self, pos: usize) -> &Monomial {
        match self.kind {
            AlphabetKind::TypeA => &self.letters[pos - 1],
            AlphabetKind::TypeB => &self.letters[pos],
        }
    }

    /// The letters at positive positions, as a type A alphabet.
    pub fn minus_part(&self) -> Result<Alphabet, Error> {
        match self.kind {
            AlphabetKind::TypeB => Ok(Alphabet {
                kind: AlphabetKind::TypeA,
                space: self.space.clone(),
                letters: self.letters[1..].to_vec(),
            }),
            AlphabetKind::TypeA => Err(Error::WrongAlphabetKind),
        }
    }

    /// All letters, zero letter included, as a type A alphabet.
    pub fn plus_part(&self) -> Result<Alphabet, Error> {
        match self.kind {
            AlphabetKind::TypeB => Ok(Alphabet {
                kind: AlphabetKind::TypeA,
                space: self.space.clone(),
                letters: self.letters.clone(),
            }),
            AlphabetKind::TypeA => Err(Error::WrongAlphabetKind),
        }
    }

    fn require(&self, kind: AlphabetKind) -> Result<(), Error> {
        if self.kind == kind {
            Ok(())
        } else {
            Err(Error::WrongAlphabetKind)
        }
    }

    fn require_subset(&self, subset: &IndexSubset, kind: SubsetKind) -> Result<(), Error> {
        if subset.kind() == kind {
            Ok(())
        } else {
            Err(Error::AlphabetKindMismatch)
        }
    }

    /// Monomial quasisymmetric function of a strict composition: one term
    /// per strictly increasing choice of positions carrying the parts as
    /// exponents.
    pub fn eval_m(&self, comp: &Composition) -> Result<Poly, Error> {
        self.require(AlphabetKind::TypeA)?;
        if comp.is_weak() {
            return Err(Error::ZeroPart);
        }
        let mut out = Poly::zero();
        let parts = comp.parts();
        self.sum_increasing(&mut out, parts, 0, 1, &Vec::new());
        Ok(out)
    }

    fn sum_increasing(&self, out: &mut Poly, parts: &[usize], t: usize, lo: usize, acc: &Monomial) {
        if t == parts.len() {
            out.add_term(acc.clone(), 1);
            return;
        }
        for p in lo..=self.max_position() {
            let next = mono_mul(acc, &mono_pow(self.letter(p), parts[t] as u16));
            self.sum_increasing(out, parts, t + 1, p + 1, &next);
        }
    }

    /// Fundamental quasisymmetric function `F` of a type A descent set: the
    /// sum over weakly increasing position words, strict where the set
    /// demands it.
    pub fn eval_f(&self, subset: &IndexSubset) -> Result<Poly, Error> {
        self.require(AlphabetKind::TypeA)?;
        self.require_subset(subset, SubsetKind::TypeA)?;
        let n = subset.n();
        let mut out = Poly::zero();
        self.sum_words(&mut out, subset, n, 1, 1, &Vec::new());
        Ok(out)
    }

    fn sum_words(
        &self,
        out: &mut Poly,
        subset: &IndexSubset,
        n: usize,
        i: usize,
        lo: usize,
        acc: &Monomial,
    ) {
        if i > n {
            out.add_term(acc.clone(), 1);
            return;
        }
        for p in lo..=self.max_position() {
            let strict = i < n && subset.contains(i);
            let next = mono_mul(acc, self.letter(p));
            self.sum_words(out, subset, n, i + 1, if strict { p + 1 } else { p }, &next);
        }
    }

    /// Type B monomial quasisymmetric function of a subset of
    /// `{0, ..., n-1}`. The subset's positive elements cut `n` into blocks;
    /// without 0 the first block carries powers of the zero letter, with 0
    /// every block sits at a positive position.
    pub fn eval_mb(&self, subset: &IndexSubset) -> Result<Poly, Error> {
        self.require(AlphabetKind::TypeB)?;
        self.require_subset(subset, SubsetKind::TypeB)?;
        let n = subset.n();
        let mut cuts: Vec<usize> = subset.elements().into_iter().filter(|&e| e > 0).collect();
        cuts.push(n);
        let mut blocks = Vec::new();
        let mut prev = 0;
        for c in cuts {
            blocks.push(c - prev);
            prev = c;
        }
        let mut out = Poly::zero();
        let (start, base) = if subset.contains(0) {
            (0, Vec::new())
        } else {
            let head = mono_pow(self.letter(0), blocks[0] as u16);
            (1, head)
        };
        self.sum_increasing_b(&mut out, &blocks[start..], 0, 1, &base);
        Ok(out)
    }

    fn sum_increasing_b(
        &self,
        out: &mut Poly,
        parts: &[usize],
        t: usize,
        lo: usize,
        acc: &Monomial,
    ) {
        if t == parts.len() {
            out.add_term(acc.clone(), 1);
            return;
        }
        for p in lo..=self.max_position() {
            let next = mono_mul(acc, &mono_pow(self.letter(p), parts[t] as u16));
            self.sum_increasing_b(out, parts, t + 1, p + 1, &next);
        }
    }

    /// Type B fundamental quasisymmetric function of a subset of
    /// `{0, ..., n-1}`: weakly increasing words over positions `>= 0`,
    /// strict where the positive elements demand it, starting at a positive
    /// position when 0 lies in the subset.
    pub fn eval_fb(&self, subset: &IndexSubset) -> Result<Poly, Error> {
        self.require(AlphabetKind::TypeB)?;
        self.require_subset(subset, SubsetKind::TypeB)?;
        let n = subset.n();
        let lo = if subset.contains(0) { 1 } else { 0 };
        let mut out = Poly::zero();
        self.sum_words_b(&mut out, subset, n, 1, lo, &Vec::new());
        Ok(out)
    }

    fn sum_words_b(
        &self,
        out: &mut Poly,
        subset: &IndexSubset,
        n: usize,
        i: usize,
        lo: usize,
        acc: &Monomial,
    ) {
        if i > n {
            out.add_term(acc.clone(), 1);
            return;
        }
        for p in lo..=self.max_position() {
            let strict = i < n && subset.contains(i);
            let next = mono_mul(acc, self.letter(p));
            self.sum_words_b(out, subset, n, i + 1, if strict { p + 1 } else { p }, &next);
        }
    }

    /// Schur function: the sum over semistandard Young tableaux with entries
    /// at the alphabet's positions.
    pub fn eval_s(&self, shape: &Partition) -> Result<Poly, Error> {
        self.require(AlphabetKind::TypeA)?;
        let mut out = Poly::zero();
        for t in semistandard_tableaux(shape, self.max_position()) {
            let mut mono = Vec::new();
            for row in t.rows() {
                for &e in row {
                    mono = mono_mul(&mono, self.letter(e));
                }
            }
            out.add_term(mono, 1);
        }
        Ok(out)
    }

    /// Power sum over a type A alphabet.
    pub fn eval_p(&self, k: usize) -> Result<Poly, Error> {
        self.require(AlphabetKind::TypeA)?;
        let mut out = Poly::zero();
        for p in 1..=self.max_position() {
            out.add_term(mono_pow(self.letter(p), k as u16), 1);
        }
        Ok(out)
    }

    /// Power sum over the signed letters of a type B alphabet: the zero
    /// letter once, every positive letter twice.
    pub fn eval_p_signed(&self, k: usize) -> Result<Poly, Error> {
        self.require(AlphabetKind::TypeB)?;
        let mut out = Poly::zero();
        out.add_term(mono_pow(self.letter(0), k as u16), 1);
        for p in 1..=self.max_position() {
            out.add_term(mono_pow(self.letter(p), k as u16), 2);
        }
        Ok(out)
    }

    /// Generating function of semistandard domino tableaux of a shape, with
    /// labels at the positions of a type B alphabet.
    pub fn eval_g(&self, shape: &Partition) -> Result<Poly, Error> {
        self.require(AlphabetKind::TypeB)?;
        if !shape.has_empty_two_core() {
            return Err(Error::NonEmptyTwoCore(shape.clone()));
        }
        let mut out = Poly::zero();
        for t in semistandard_domino_tableaux(shape, self.max_position()) {
            let mut mono = Vec::new();
            for (_, label) in t.entries() {
                mono = mono_mul(&mono, self.letter(*label));
            }
            out.add_term(mono, 1);
        }
        Ok(out)
    }

    /// Writes a polynomial as an integer combination of the fundamental
    /// functions `F` of degree `n`, or reports that none exists.
    ///
    /// Needs a plain alphabet (one variable per letter) with at least `n`
    /// positive letters; coefficients are read off prefix monomials and
    /// checked by reconstructing the combination. Zero coefficients are
    /// omitted from the result.
    pub fn expand_in_f(&self, n: usize, poly: &Poly) -> Result<BTreeMap<IndexSubset, i64>, Error> {
        self.require(AlphabetKind::TypeA)?;
        self.assert_plain();
        assert!(self.max_position() >= n, "alphabet too small to separate");
        let subsets = IndexSubset::all(SubsetKind::TypeA, n);
        let m_coeffs: Vec<i64> = subsets
            .iter()
            .map(|s| {
                let blocks = s.to_composition();
                let mut mono = Vec::new();
                for (t, &b) in blocks.parts().iter().enumerate() {
                    mono = mono_mul(&mono, &mono_pow(self.letter(t + 1), b as u16));
                }
                poly.coeff(&mono)
            })
            .collect();
        self.moebius_and_check(poly, &subsets, &m_coeffs, |alph, s| alph.eval_f(s))
    }

    /// Type B analog of [`Alphabet::expand_in_f`], over the fundamental
    /// functions of subsets of `{0, ..., n-1}`.
    pub fn expand_in_fb(&self, n: usize, poly: &Poly) -> Result<BTreeMap<IndexSubset, i64>, Error> {
        self.require(AlphabetKind::TypeB)?;
        self.assert_plain();
        assert!(self.max_position() >= n, "alphabet too small to separate");
        let subsets = IndexSubset::all(SubsetKind::TypeB, n);
        let m_coeffs: Vec<i64> = subsets
            .iter()
            .map(|s| {
                let mut cuts: Vec<usize> = s.elements().into_iter().filter(|&e| e > 0).collect();
                cuts.push(n);
                let mut blocks = Vec::new();
                let mut prev = 0;
                for c in cuts {
                    blocks.push(c - prev);
                    prev = c;
                }
                let mut mono = Vec::new();
                let start = if s.contains(0) { 1 } else { 0 };
                for (t, &b) in blocks.iter().enumerate() {
                    mono = mono_mul(&mono, &mono_pow(self.letter(t + start), b as u16));
                }
                poly.coeff(&mono)
            })
            .collect();
        self.moebius_and_check(poly, &subsets, &m_coeffs, |alph, s| alph.eval_fb(s))
    }

    /// Every letter must be a distinct single variable for prefix
    /// extraction to separate the monomial basis.
    fn assert_plain(&self) {
        let plain = self
            .letters
            .iter()
            .all(|m| m.len() == 1 && m[0].1 == 1);
        assert!(plain, "expansion needs an alphabet of plain variables");
    }

    fn moebius_and_check(
        &self,
        poly: &Poly,
        subsets: &[IndexSubset],
        m_coeffs: &[i64],
        eval: impl Fn(&Alphabet, &IndexSubset) -> Result<Poly, Error>,
    ) -> Result<BTreeMap<IndexSubset, i64>, Error> {
        // The fundamental function of a set is the sum of the monomial
        // functions of its supersets, so coefficients invert over subsets.
        // Masks index `m_coeffs` directly: `subsets` is in counter order.
        let mut out = BTreeMap::new();
        let mut reconstructed = Poly::zero();
        for s in subsets {
            let mut f = 0i64;
            let mask = s.mask();
            let mut sub = mask;
            loop {
                let sign = if (mask ^ sub).count_ones() % 2 == 0 { 1 } else { -1 };
                f += sign * m_coeffs[sub as usize];
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & mask;
            }
            if f != 0 {
                out.insert(*s, f);
                reconstructed += &eval(self, s)?.scaled(f);
            }
        }
        if &reconstructed != poly {
            let residual = poly - &reconstructed;
            return Err(Error::NotInSpan(residual.dump(&self.space)));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domino::standard_domino_tableaux;
    use crate::partition::{domino_shapes, partitions};
    use crate::tableau::kostka;
    use proptest::prelude::*;

    fn subset_a(n: usize, elements: &[usize]) -> IndexSubset {
        IndexSubset::from_elements(SubsetKind::TypeA, n, elements)
    }

    fn subset_b(n: usize, elements: &[usize]) -> IndexSubset {
        IndexSubset::from_elements(SubsetKind::TypeB, n, elements)
    }

    fn arb_poly() -> impl Strategy<Value = Poly> {
        let mono = proptest::collection::vec((0u16..3, 1u16..3), 0..3).prop_map(|factors| {
            factors
                .into_iter()
                .fold(Vec::new(), |acc, (v, e)| mono_mul(&acc, &mono_pow(&[(v, 1)], e)))
        });
        proptest::collection::vec((mono, -20i64..=20), 0..4).prop_map(|terms| {
            let mut p = Poly::zero();
            for (m, c) in terms {
                p.add_term(m, c);
            }
            p
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &Poly::zero(), a.clone());
            prop_assert_eq!(&a * &Poly::constant(1), a.clone());
            prop_assert_eq!(&a - &a, Poly::zero());
        }
    }

    #[test]
    fn type_b_monomial_and_fundamental_table_for_two_letters() {
        let x = Alphabet::type_b(2);
        let (x0, x1, x2) = (Poly::var(0), Poly::var(1), Poly::var(2));
        let cases: Vec<(Vec<usize>, Poly, Poly)> = vec![
            (
                vec![],
                &x0 * &x0,
                &(&(&x0 + &x1) + &x2).pow(2) - &(&(&x0 * &x1) + &(&(&x0 * &x2) + &(&x1 * &x2))),
            ),
            (
                vec![0],
                &(&x1 * &x1) + &(&x2 * &x2),
                &(&(&x1 * &x1) + &(&x2 * &x2)) + &(&x1 * &x2),
            ),
            (
                vec![1],
                &(&x0 * &x1) + &(&x0 * &x2),
                &(&(&x0 * &x1) + &(&x0 * &x2)) + &(&x1 * &x2),
            ),
            (vec![0, 1], &x1 * &x2, &x1 * &x2),
        ];
        for (elements, m_expect, f_expect) in cases {
            let s = subset_b(2, &elements);
            assert_eq!(x.eval_mb(&s).unwrap(), m_expect, "M at {s}");
            assert_eq!(x.eval_fb(&s).unwrap(), f_expect, "F at {s}");
        }
    }

    #[test]
    fn fundamental_is_the_superset_sum_of_monomials() {
        let xa = Alphabet::type_a(4);
        for n in 1..=4 {
            for s in IndexSubset::all(SubsetKind::TypeA, n) {
                let mut sum = Poly::zero();
                for t in IndexSubset::all(SubsetKind::TypeA, n) {
                    if t.mask() & s.mask() == s.mask() {
                        sum += &xa.eval_m(&t.to_composition()).unwrap();
                    }
                }
                assert_eq!(xa.eval_f(&s).unwrap(), sum, "type A {s}");
            }
        }
        let xb = Alphabet::type_b(3);
        for n in 1..=3 {
            for s in IndexSubset::all(SubsetKind::TypeB, n) {
                let mut sum = Poly::zero();
                for t in IndexSubset::all(SubsetKind::TypeB, n) {
                    if t.mask() & s.mask() == s.mask() {
                        sum += &xb.eval_mb(&t).unwrap();
                    }
                }
                assert_eq!(xb.eval_fb(&s).unwrap(), sum, "type B {s}");
            }
        }
    }

    #[test]
    fn schur_coefficients_are_kostka_numbers() {
        let x = Alphabet::type_a(4);
        for n in 1..=4 {
            for shape in partitions(n) {
                let s = x.eval_s(&shape).unwrap();
                for (mono, c) in s.terms() {
                    let mut weight = vec![0usize; 4];
                    for &(v, e) in mono {
                        weight[v as usize] = e as usize;
                    }
                    let k = kostka(&shape, &Composition::weak(weight));
                    assert_eq!(c, k, "shape {shape}");
                }
            }
        }
    }

    #[test]
    fn cauchy_kernel_splits_into_schur_pairs() {
        let (x, y, xy) = Alphabet::product_a(2, 2);
        for n in 1..=3 {
            let mut lhs = Poly::zero();
            for shape in partitions(n) {
                lhs += &(&x.eval_s(&shape).unwrap() * &y.eval_s(&shape).unwrap());
            }
            let rhs = xy.eval_f(&IndexSubset::empty(SubsetKind::TypeA, n)).unwrap();
            assert_eq!(lhs, rhs, "n = {n}");
        }
    }

    #[test]
    fn product_alphabet_letters_are_ordered_pairs() {
        let (_, _, xy) = Alphabet::product_b(2, 2);
        assert_eq!(xy.max_position(), 12);
        let mono = |i: u16, j: u16| mono_mul(&[(i, 1)], &[(3 + j, 1)]);
        assert_eq!(*xy.letter(0), mono(0, 0));
        assert_eq!(*xy.letter(1), mono(0, 1));
        assert_eq!(*xy.letter(3), mono(1, 2));
        assert_eq!(*xy.letter(5), mono(1, 0));
        assert_eq!(*xy.letter(7), mono(1, 2));
        assert_eq!(*xy.letter(12), mono(2, 2));
    }

    #[test]
    fn signed_power_sum_of_degree_one_splits_over_single_dominoes() {
        let x = Alphabet::type_b(2);
        let lhs = x.eval_p_signed(1).unwrap();
        let rhs = &x.eval_g(&Partition::new(vec![2])).unwrap()
            + &x.eval_g(&Partition::new(vec![1, 1])).unwrap();
        assert_eq!(lhs, rhs);
        let p2 = x.eval_p_signed(2).unwrap();
        let (x0, x1, x2) = (Poly::var(0), Poly::var(1), Poly::var(2));
        let expect = &(&x0 * &x0) + &(&(&x1 * &x1).scaled(2) + &(&x2 * &x2).scaled(2));
        assert_eq!(p2, expect);
    }

    #[test]
    fn domino_functions_factor_through_the_shape_quotient() {
        let x = Alphabet::type_b(2);
        let minus = x.minus_part().unwrap();
        let plus = x.plus_part().unwrap();
        for shape in domino_shapes(2) {
            let q = shape.two_quotient().unwrap();
            let lhs = x.eval_g(&shape).unwrap();
            let rhs = &minus.eval_s(&q.minus).unwrap() * &plus.eval_s(&q.plus).unwrap();
            assert_eq!(lhs, rhs, "shape {shape}");
        }
    }

    #[test]
    fn expansion_in_the_fundamental_basis_round_trips() {
        let x = Alphabet::type_a(4);
        let n = 3;
        let combo = &(&x.eval_f(&subset_a(n, &[1])).unwrap().scaled(2)
            - &x.eval_f(&subset_a(n, &[1, 2])).unwrap().scaled(3))
            + &x.eval_f(&subset_a(n, &[])).unwrap();
        let coeffs = x.expand_in_f(n, &combo).unwrap();
        let expect: BTreeMap<IndexSubset, i64> = [
            (subset_a(n, &[]), 1),
            (subset_a(n, &[1]), 2),
            (subset_a(n, &[1, 2]), -3),
        ]
        .into_iter()
        .collect();
        assert_eq!(coeffs, expect);
        let schur = x.eval_s(&Partition::new(vec![2, 1])).unwrap();
        let coeffs = x.expand_in_f(n, &schur).unwrap();
        let expect: BTreeMap<IndexSubset, i64> =
            [(subset_a(n, &[1]), 1), (subset_a(n, &[2]), 1)].into_iter().collect();
        assert_eq!(coeffs, expect);
    }

    #[test]
    fn expansion_rejects_polynomials_outside_the_span() {
        let x = Alphabet::type_a(4);
        let bad = &(&Poly::var(0) * &Poly::var(0)) + &Poly::var(1);
        assert!(matches!(x.expand_in_f(2, &bad), Err(Error::NotInSpan(_))));
        let xb = Alphabet::type_b(2);
        let bad = Poly::var(1);
        assert!(matches!(xb.expand_in_fb(1, &bad), Err(Error::NotInSpan(_))));
    }

    #[test]
    fn domino_function_expansions_count_standard_descents() {
        let x = Alphabet::type_b(3);
        for n in 1..=2 {
            for shape in domino_shapes(n) {
                let g = x.eval_g(&shape).unwrap();
                let coeffs = x.expand_in_fb(n, &g).unwrap();
                let mut expect = BTreeMap::new();
                for t in standard_domino_tableaux(&shape) {
                    *expect.entry(t.descent_set()).or_insert(0i64) += 1;
                }
                assert_eq!(coeffs, expect, "shape {shape}");
            }
        }
    }

    #[test]
    fn kind_mismatches_are_reported() {
        let xa = Alphabet::type_a(2);
        let xb = Alphabet::type_b(2);
        assert!(matches!(xa.eval_fb(&subset_b(2, &[])), Err(Error::WrongAlphabetKind)));
        assert!(matches!(xb.eval_f(&subset_a(2, &[])), Err(Error::WrongAlphabetKind)));
        assert!(matches!(xb.eval_fb(&subset_a(2, &[])), Err(Error::AlphabetKindMismatch)));
        assert!(matches!(xa.minus_part(), Err(Error::WrongAlphabetKind)));
        assert!(matches!(
            xa.eval_m(&Composition::weak(vec![1, 0])),
            Err(Error::ZeroPart)
        ));
    }
}
