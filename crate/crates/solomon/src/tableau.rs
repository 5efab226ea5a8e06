//! Standard and semistandard Young tableaux, their descents and counts.

use crate::partition::{partitions, Composition, IndexSubset, Partition, SubsetKind};

/// A standard Young tableau: entries `1..=n` each used once, increasing
/// along rows and down columns.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StandardTableau {
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    /// Builds a tableau, panicking if the filling is not standard.
    pub fn new(rows: Vec<Vec<usize>>) -> Self {
        let n: usize = rows.iter().map(Vec::len).sum();
        let mut seen = vec![false; n + 1];
        for (r, row) in rows.iter().enumerate() {
            if r > 0 {
                assert!(rows[r - 1].len() >= row.len(), "row lengths must decrease");
            }
            for (c, &v) in row.iter().enumerate() {
                assert!((1..=n).contains(&v) && !seen[v], "entries must be 1..=n once");
                seen[v] = true;
                if c > 0 {
                    assert!(row[c - 1] < v, "rows must increase");
                }
                if r > 0 {
                    assert!(rows[r - 1][c] < v, "columns must increase");
                }
            }
        }
        StandardTableau { rows }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect())
    }

    /// Row index of an entry.
    fn row_of(&self, value: usize) -> usize {
        self.rows
            .iter()
            .position(|row| row.contains(&value))
            .expect("value present")
    }

    /// Entries `i` such that `i + 1` sits in a strictly lower row.
    pub fn descent_set(&self) -> IndexSubset {
        let n = self.size();
        let elements: Vec<usize> = (1..n)
            .filter(|&i| self.row_of(i + 1) > self.row_of(i))
            .collect();
        IndexSubset::from_elements(SubsetKind::TypeA, n, &elements)
    }
}

/// All standard Young tableaux of a shape, generated by growing the shape one
/// cell at a time.
pub fn standard_tableaux(shape: &Partition) -> Vec<StandardTableau> {
    let n = shape.size();
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); shape.len()];
    let mut out = Vec::new();
    grow(shape, 1, n, &mut rows, &mut out);
    out
}

fn grow(
    shape: &Partition,
    next: usize,
    n: usize,
    rows: &mut Vec<Vec<usize>>,
    out: &mut Vec<StandardTableau>,
) {
    if next > n {
        out.push(StandardTableau { rows: rows.clone() });
        return;
    }
    for r in 0..shape.len() {
        let len = rows[r].len();
        let addable = len < shape.parts()[r] && (r == 0 || rows[r - 1].len() > len);
        if addable {
            rows[r].push(next);
            grow(shape, next + 1, n, rows, out);
            rows[r].pop();
        }
    }
}

/// Counts of standard tableaux per descent set, for all shapes of `n`.
pub struct DescentCountsA {
    n: usize,
    shapes: Vec<Partition>,
    rows: Vec<Vec<i64>>,
}

impl DescentCountsA {
    pub fn new(n: usize) -> Self {
        let shapes = partitions(n);
        let masks = SubsetKind::TypeA.count(n);
        let rows = shapes
            .iter()
            .map(|shape| {
                let mut row = vec![0i64; masks];
                for t in standard_tableaux(shape) {
                    row[t.descent_set().mask() as usize] += 1;
                }
                row
            })
            .collect();
        DescentCountsA { n, shapes, rows }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn shapes(&self) -> &[Partition] {
        &self.shapes
    }

    /// `d(shape, I)`: standard tableaux of `shape` with descent set `I`.
    pub fn count(&self, shape: &Partition, set: IndexSubset) -> i64 {
        self.count_mask(shape, set.mask())
    }

    pub fn count_mask(&self, shape: &Partition, mask: u32) -> i64 {
        let idx = self.shapes.iter().position(|s| s == shape).expect("shape of n");
        self.rows[idx][mask as usize]
    }

    pub fn row(&self, idx: usize) -> &[i64] {
        &self.rows[idx]
    }
}

/// A semistandard Young tableau: positive entries weakly increasing along
/// rows and strictly increasing down columns.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SemistandardTableau {
    rows: Vec<Vec<usize>>,
}

impl SemistandardTableau {
    /// Builds a tableau, panicking if the filling is not semistandard.
    pub fn new(rows: Vec<Vec<usize>>) -> Self {
        for (r, row) in rows.iter().enumerate() {
            if r > 0 {
                assert!(rows[r - 1].len() >= row.len(), "row lengths must decrease");
            }
            for (c, &v) in row.iter().enumerate() {
                assert!(v >= 1, "entries are positive");
                if c > 0 {
                    assert!(row[c - 1] <= v, "rows weakly increase");
                }
                if r > 0 {
                    assert!(rows[r - 1][c] < v, "columns strictly increase");
                }
            }
        }
        SemistandardTableau { rows }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect())
    }

    /// Occurrences of each entry; `weight(m)[i - 1]` counts entries equal to
    /// `i`, for `i` up to `m`.
    pub fn weight(&self, max_entry: usize) -> Vec<usize> {
        let mut w = vec![0usize; max_entry];
        for row in &self.rows {
            for &v in row {
                w[v - 1] += 1;
            }
        }
        w
    }
}

/// All semistandard tableaux of a shape with entries at most `max_entry`.
pub fn semistandard_tableaux(shape: &Partition, max_entry: usize) -> Vec<SemistandardTableau> {
    let mut out = Vec::new();
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); shape.len()];
    grow_ssyt(shape, max_entry, None, &mut rows, &mut out);
    out
}

fn grow_ssyt(
    shape: &Partition,
    max_entry: usize,
    mut budget: Option<&mut Vec<usize>>,
    rows: &mut Vec<Vec<usize>>,
    out: &mut Vec<SemistandardTableau>,
) {
    // Next empty cell in row-major order.
    let next = (0..shape.len()).find(|&r| rows[r].len() < shape.parts()[r]);
    let Some(r) = next else {
        out.push(SemistandardTableau { rows: rows.clone() });
        return;
    };
    let c = rows[r].len();
    let mut lo = 1;
    if c > 0 {
        lo = lo.max(rows[r][c - 1]);
    }
    if r > 0 {
        lo = lo.max(rows[r - 1][c] + 1);
    }
    for v in lo..=max_entry {
        if let Some(b) = budget.as_mut() {
            if b[v - 1] == 0 {
                continue;
            }
            b[v - 1] -= 1;
        }
        rows[r].push(v);
        grow_ssyt(shape, max_entry, budget.as_deref_mut(), rows, out);
        rows[r].pop();
        if let Some(b) = budget.as_mut() {
            b[v - 1] += 1;
        }
    }
}

/// The Kostka number: semistandard tableaux of `shape` whose entry `i`
/// appears `weight[i - 1]` times. The weight may be weak.
pub fn kostka(shape: &Partition, weight: &Composition) -> i64 {
    if shape.size() != weight.size() {
        return 0;
    }
    let mut out = Vec::new();
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); shape.len()];
    let mut budget: Vec<usize> = weight.parts().to_vec();
    grow_ssyt(shape, weight.len(), Some(&mut budget), &mut rows, &mut out);
    out.len() as i64
}
