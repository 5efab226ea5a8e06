//! Domino tableaux: tilings of a partition shape by labelled dominoes.
//!
//! A semistandard domino tableau carries labels from `{0, 1, 2, ...}` that
//! weakly increase along rows and strictly increase down columns, where the
//! two cells of one domino count as a single occurrence; a vertical domino
//! may not be labelled 0, which forces the 0 labelled dominoes to form a
//! horizontal prefix of the top row. A standard tableau uses `1..=n` once
//! each. Removing the dominoes in decreasing label order always passes
//! through partition shapes, which is how enumeration works here.

use crate::partition::{domino_shapes, IndexSubset, Partition, SubsetKind};
use crate::Error;

/// One domino, identified by its top left cell and orientation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Domino {
    pub row: usize,
    pub col: usize,
    pub vertical: bool,
}

impl Domino {
    pub fn cells(&self) -> [(usize, usize); 2] {
        if self.vertical {
            [(self.row, self.col), (self.row + 1, self.col)]
        } else {
            [(self.row, self.col), (self.row, self.col + 1)]
        }
    }
}

/// A labelled domino tiling of a partition shape.
///
/// Dominoes are stored in standardization order: by label, ties broken left
/// to right. Construction validates the semistandard conditions.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DominoTableau {
    shape: Partition,
    entries: Vec<(Domino, usize)>,
}

impl DominoTableau {
    /// Builds a tableau from labelled dominoes, panicking unless they tile a
    /// partition shape and the labels satisfy the semistandard conditions.
    pub fn new(mut entries: Vec<(Domino, usize)>) -> Self {
        entries.sort_by_key(|(d, label)| (*label, d.col, d.row));
        // Reconstruct the shape from the covered cells.
        let mut max_row = 0;
        for (d, _) in &entries {
            for (r, _) in d.cells() {
                max_row = max_row.max(r + 1);
            }
        }
        let mut lens = vec![0usize; max_row];
        let mut grid: Vec<Vec<Option<(usize, usize)>>> = vec![Vec::new(); max_row];
        for (idx, (d, label)) in entries.iter().enumerate() {
            assert!(!(d.vertical && *label == 0), "vertical dominoes cannot be labelled 0");
            for (r, c) in d.cells() {
                if grid[r].len() <= c {
                    grid[r].resize(c + 1, None);
                }
                assert!(grid[r][c].is_none(), "overlapping dominoes");
                grid[r][c] = Some((idx, *label));
                lens[r] = lens[r].max(c + 1);
            }
        }
        for r in 0..max_row {
            assert_eq!(grid[r].iter().filter(|c| c.is_some()).count(), lens[r]);
            assert!(grid[r].iter().take(lens[r]).all(Option::is_some), "rows must be contiguous");
            if r > 0 {
                assert!(lens[r - 1] >= lens[r], "row lengths must decrease");
            }
        }
        // Semistandard conditions on the cell grid: weak along rows, strict
        // down columns across distinct dominoes.
        for r in 0..max_row {
            for c in 0..lens[r] {
                let (idx, label) = grid[r][c].unwrap();
                if c > 0 {
                    let (_, left) = grid[r][c - 1].unwrap();
                    assert!(left <= label, "rows must weakly increase");
                }
                if r > 0 {
                    let (up_idx, up) = grid[r - 1][c].unwrap();
                    assert!(up_idx == idx || up < label, "columns must strictly increase");
                }
            }
        }
        // Standardization order must be strict: equal labels never share a
        // leftmost column.
        for w in entries.windows(2) {
            let ((a, la), (b, lb)) = (w[0], w[1]);
            assert!(la < lb || a.col < b.col, "ambiguous standardization order");
        }
        let shape = Partition::new(lens);
        DominoTableau { shape, entries }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    /// Number of dominoes.
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    /// Dominoes with their labels, in standardization order.
    pub fn entries(&self) -> &[(Domino, usize)] {
        &self.entries
    }

    /// Whether the labels are exactly `1..=n`, once each.
    pub fn is_standard(&self) -> bool {
        self.entries
            .iter()
            .enumerate()
            .all(|(i, (_, label))| *label == i + 1)
    }

    /// Occurrences of each label `0..=max_label`.
    pub fn weight(&self, max_label: usize) -> Vec<usize> {
        let mut w = vec![0usize; max_label + 1];
        for (_, label) in &self.entries {
            w[*label] += 1;
        }
        w
    }

    /// Row-wise label grid and a parallel pairing grid. Both grids have the
    /// rows of the shape; `labels[r][c]` is the label of the domino covering
    /// the cell and `pairing[r][c]` numbers the dominoes from 1 in
    /// standardization order, so the two cells of one domino hold equal
    /// pairing values and different dominoes hold different ones.
    pub fn grids(&self) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
        let mut labels: Vec<Vec<usize>> =
            self.shape.parts().iter().map(|&len| vec![0; len]).collect();
        let mut pairing = labels.clone();
        for (idx, (d, label)) in self.entries.iter().enumerate() {
            for (r, c) in d.cells() {
                labels[r][c] = *label;
                pairing[r][c] = idx + 1;
            }
        }
        (labels, pairing)
    }

    /// Whether the domino covering the top left cell is vertical.
    pub fn top_left_vertical(&self) -> bool {
        self.entries
            .iter()
            .find(|(d, _)| d.row == 0 && d.col == 0)
            .map(|(d, _)| d.vertical)
            .unwrap_or(false)
    }

    /// Descents of a standard tableau: `0` when the domino labelled 1 is
    /// vertical, and `i >= 1` when the domino labelled `i + 1` starts in a
    /// strictly lower row than the one labelled `i`.
    pub fn descent_set(&self) -> IndexSubset {
        assert!(self.is_standard());
        let n = self.size();
        let mut elements = Vec::new();
        if self.entries[0].0.vertical {
            elements.push(0);
        }
        for i in 1..n {
            if self.entries[i].0.row > self.entries[i - 1].0.row {
                elements.push(i);
            }
        }
        IndexSubset::from_elements(SubsetKind::TypeB, n, &elements)
    }

    /// Relabels the dominoes `1..=n` in standardization order.
    pub fn standardize(&self) -> DominoTableau {
        DominoTableau::new(
            self.entries
                .iter()
                .enumerate()
                .map(|(i, (d, _))| (*d, i + 1))
                .collect(),
        )
    }

    /// The admissible descent positions of a semistandard tableau: partial
    /// sums of the nonzero label multiplicities, plus `0` when the top left
    /// domino is vertical. The descents of the standardization always land
    /// in this set.
    pub fn admissible_descents(&self) -> IndexSubset {
        let n = self.size();
        let mut elements = Vec::new();
        if self.top_left_vertical() {
            elements.push(0);
        }
        let mut acc = 0usize;
        let max = self.entries.last().map(|(_, l)| *l).unwrap_or(0);
        for label in 0..=max {
            let count = self.entries.iter().filter(|(_, l)| *l == label).count();
            if count > 0 {
                acc += count;
                if acc < n {
                    elements.push(acc);
                }
            }
        }
        IndexSubset::from_elements(SubsetKind::TypeB, n, &elements)
    }

    /// Splits the tableau into its 2-quotient pair of Young tableau
    /// fillings, minus and plus.
    ///
    /// Dominoes are peeled off in decreasing standardization order. Peeling
    /// a domino whose top row is `i` replaces the beta number `b` of row `i`
    /// by `b - 2`; at even padding length, even `b` means the domino's top
    /// rightmost box is negative in the alternating sign filling, and its
    /// label lands in the minus component, in the row given by the rank of
    /// `b` among the beta numbers of equal parity.
    pub fn quotient_pair(&self) -> QuotientPair {
        let m = self.shape.len() + self.shape.len() % 2;
        let mut lens = vec![0usize; m];
        lens[..self.shape.len()].copy_from_slice(self.shape.parts());
        let beta = |lens: &[usize], i: usize| lens[i] + (m - 1 - i);
        // (minus?, row, label) per domino, in peeling order.
        let mut records = Vec::new();
        for (d, label) in self.entries.iter().rev() {
            let b = beta(&lens, d.row);
            let rank = (0..m)
                .filter(|&j| {
                    let bj = beta(&lens, j);
                    bj % 2 == b % 2 && bj > b
                })
                .count();
            records.push((b % 2 == 0, rank, *label));
            if d.vertical {
                lens[d.row] -= 1;
                lens[d.row + 1] -= 1;
            } else {
                lens[d.row] -= 2;
            }
        }
        let mut minus: Vec<Vec<usize>> = Vec::new();
        let mut plus: Vec<Vec<usize>> = Vec::new();
        for &(is_minus, row, label) in records.iter().rev() {
            let grid = if is_minus { &mut minus } else { &mut plus };
            assert!(row <= grid.len(), "quotient rows grow one at a time");
            if row == grid.len() {
                grid.push(Vec::new());
            }
            grid[row].push(label);
        }
        let pair = QuotientPair { minus, plus };
        pair.validate();
        pair
    }
}

impl serde::Serialize for DominoTableau {
    /// Serializes as the shape plus the two parallel grids from
    /// [`DominoTableau::grids`].
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let (labels, pairing) = self.grids();
        let mut state = serializer.serialize_struct("DominoTableau", 3)?;
        state.serialize_field("shape", self.shape.parts())?;
        state.serialize_field("labels", &labels)?;
        state.serialize_field("pairing", &pairing)?;
        state.end()
    }
}

/// The 2-quotient of a domino tableau: two Young tableau fillings whose
/// shapes form the 2-quotient of the domino shape. Labels keep their type B
/// range, so the plus component may contain 0; the minus component never
/// does.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QuotientPair {
    pub minus: Vec<Vec<usize>>,
    pub plus: Vec<Vec<usize>>,
}

impl QuotientPair {
    pub fn shapes(&self) -> (Partition, Partition) {
        (
            Partition::new(self.minus.iter().map(Vec::len).collect()),
            Partition::new(self.plus.iter().map(Vec::len).collect()),
        )
    }

    fn validate(&self) {
        for (grid, zero_ok) in [(&self.minus, false), (&self.plus, true)] {
            for (r, row) in grid.iter().enumerate() {
                if r > 0 {
                    assert!(grid[r - 1].len() >= row.len(), "quotient rows must decrease");
                }
                for (c, &v) in row.iter().enumerate() {
                    assert!(zero_ok || v >= 1, "minus component cannot contain 0");
                    if c > 0 {
                        assert!(row[c - 1] <= v, "quotient rows weakly increase");
                    }
                    if r > 0 {
                        assert!(grid[r - 1][c] < v, "quotient columns strictly increase");
                    }
                }
            }
        }
    }
}

/// All standard domino tableaux of a shape, by peeling corner dominoes.
pub fn standard_domino_tableaux(shape: &Partition) -> Vec<DominoTableau> {
    assert!(shape.size().is_multiple_of(2));
    let n = shape.size() / 2;
    let mut lens = shape.parts().to_vec();
    let mut acc = Vec::new();
    let mut out = Vec::new();
    peel(&mut lens, n, &mut acc, &mut out);
    out
}

fn peel(
    lens: &mut Vec<usize>,
    label: usize,
    acc: &mut Vec<(Domino, usize)>,
    out: &mut Vec<DominoTableau>,
) {
    if label == 0 {
        out.push(DominoTableau::new(acc.clone()));
        return;
    }
    let rows = lens.len();
    for i in 0..rows {
        let below = if i + 1 < rows { lens[i + 1] } else { 0 };
        // Horizontal domino at the end of row i.
        if lens[i] >= 2 && lens[i] - 2 >= below {
            let d = Domino { row: i, col: lens[i] - 2, vertical: false };
            lens[i] -= 2;
            acc.push((d, label));
            peel(lens, label - 1, acc, out);
            acc.pop();
            lens[i] += 2;
        }
        // Vertical domino at the end of rows i and i + 1.
        if i + 1 < rows && lens[i] == below && lens[i] >= 1 {
            let next_below = if i + 2 < rows { lens[i + 2] } else { 0 };
            if below > next_below {
                let d = Domino { row: i, col: lens[i] - 1, vertical: true };
                lens[i] -= 1;
                lens[i + 1] -= 1;
                acc.push((d, label));
                peel(lens, label - 1, acc, out);
                acc.pop();
                lens[i] += 1;
                lens[i + 1] += 1;
            }
        }
    }
}

/// All semistandard domino tableaux of a shape with labels at most
/// `max_label`.
///
/// Each tableau arises exactly once from its standardization `t0` and its
/// label sequence: the label sequence must weakly increase, strictly so
/// across the descents of `t0`, and must start at 1 or higher when the top
/// left domino is vertical.
pub fn semistandard_domino_tableaux(shape: &Partition, max_label: usize) -> Vec<DominoTableau> {
    let mut out = Vec::new();
    for t0 in standard_domino_tableaux(shape) {
        let n = t0.size();
        if n == 0 {
            out.push(t0);
            continue;
        }
        let desc = t0.descent_set();
        let first = if desc.contains(0) { 1 } else { 0 };
        let mut values = vec![0usize; n];
        assign(&t0, &desc, 1, first, max_label, &mut values, &mut out);
    }
    out
}

fn assign(
    t0: &DominoTableau,
    desc: &IndexSubset,
    pos: usize,
    lo: usize,
    max_label: usize,
    values: &mut Vec<usize>,
    out: &mut Vec<DominoTableau>,
) {
    let n = t0.size();
    if pos > n {
        out.push(DominoTableau::new(
            t0.entries()
                .iter()
                .map(|(d, label)| (*d, values[*label - 1]))
                .collect(),
        ));
        return;
    }
    for v in lo..=max_label {
        values[pos - 1] = v;
        let next_lo = if pos < n && desc.contains(pos) { v + 1 } else { v };
        assign(t0, desc, pos + 1, next_lo, max_label, values, out);
    }
}

/// Counts of standard domino tableaux per descent set, for all shapes
/// tileable by `n` dominoes.
pub struct DescentCountsB {
    n: usize,
    shapes: Vec<Partition>,
    rows: Vec<Vec<i64>>,
}

impl DescentCountsB {
    pub fn new(n: usize) -> Self {
        let shapes = domino_shapes(n);
        let masks = SubsetKind::TypeB.count(n);
        let rows = shapes
            .iter()
            .map(|shape| {
                let mut row = vec![0i64; masks];
                for t in standard_domino_tableaux(shape) {
                    row[t.descent_set().mask() as usize] += 1;
                }
                row
            })
            .collect();
        DescentCountsB { n, shapes, rows }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn shapes(&self) -> &[Partition] {
        &self.shapes
    }

    /// `d(shape, I)`: standard domino tableaux of `shape` with descent set
    /// `I`. Errors if the shape has a 2-core.
    pub fn count(&self, shape: &Partition, set: IndexSubset) -> Result<i64, Error> {
        self.count_mask(shape, set.mask())
    }

    pub fn count_mask(&self, shape: &Partition, mask: u32) -> Result<i64, Error> {
        let idx = self
            .shapes
            .iter()
            .position(|s| s == shape)
            .ok_or_else(|| Error::NonEmptyTwoCore(shape.clone()))?;
        Ok(self.rows[idx][mask as usize])
    }

    pub fn row(&self, idx: usize) -> &[i64] {
        &self.rows[idx]
    }
}
