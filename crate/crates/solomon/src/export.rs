//! Serialization of computed tables to JSON and CSV.
//!
//! Every table kind renders to a single JSON document and a CSV alternative.
//! Structure-constant grids (`a`, `b`, `c`) follow the schema
//! `{"n":…,"flavor":…,"entries":[{"I":…,"J":…,"K":…,"value":…}]}` with
//! subsets written as sorted element arrays; the remaining kinds use the
//! analogous shape with a `kind` discriminator. Character tables serialize
//! as full matrices with labelled classes and their sizes. Descent-count and
//! Kostka tables omit zero entries (an absent key means 0); grid-shaped
//! tables list every cell unless `nonzero_only` is set. CSV output always
//! holds one row per nonzero entry, with key fields quoted.

use serde::Serialize;

use crate::character::{class_size, class_size_b, CharTableA, CharTableB, KroneckerA, KroneckerB};
use crate::descent_a::{matrix_count, matrix_count_3d, DescentTableA};
use crate::descent_b::DescentTableB;
use crate::domino::DescentCountsB;
use crate::partition::{compositions, partitions, IndexSubset, Partition, SubsetKind};
use crate::tableau::{kostka, DescentCountsA};
use crate::Error;

/// A table the command line can compute and serialize.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableKind {
    /// Structure constants on exact descent classes of the symmetric group.
    A,
    /// Structure constants on relaxed descent classes of the symmetric group.
    B,
    /// Structure constants on descent classes of signed permutations.
    C,
    /// Descent-set counts of standard Young tableaux.
    D,
    /// Descent-set counts of standard domino tableaux.
    DB,
    /// Kostka numbers over all composition weights.
    Kostka,
    /// Irreducible character table of the symmetric group.
    Chi,
    /// Irreducible character table of the signed-permutation group.
    Psi,
    /// Tensor-square multiplicities for the symmetric group.
    G,
    /// Tensor-square multiplicities for the signed-permutation group.
    GB,
    /// Contingency matrices with prescribed row and column sums.
    M2,
    /// Three-dimensional arrays with prescribed line sums.
    M3,
}

impl TableKind {
    pub const ALL: [TableKind; 12] = [
        TableKind::A,
        TableKind::B,
        TableKind::C,
        TableKind::D,
        TableKind::DB,
        TableKind::Kostka,
        TableKind::Chi,
        TableKind::Psi,
        TableKind::G,
        TableKind::GB,
        TableKind::M2,
        TableKind::M3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TableKind::A => "a",
            TableKind::B => "b",
            TableKind::C => "c",
            TableKind::D => "d",
            TableKind::DB => "dB",
            TableKind::Kostka => "kostka",
            TableKind::Chi => "chi",
            TableKind::Psi => "psi",
            TableKind::G => "g",
            TableKind::GB => "gB",
            TableKind::M2 => "m2",
            TableKind::M3 => "m3",
        }
    }

    pub fn parse(name: &str) -> Option<TableKind> {
        TableKind::ALL.iter().copied().find(|k| k.name() == name)
    }

    /// Largest `n` the kind computes in desk-scale time.
    pub fn max_n(self) -> usize {
        match self {
            TableKind::A | TableKind::B => 7,
            TableKind::C => 5,
            TableKind::D => 8,
            TableKind::DB => 5,
            TableKind::Kostka => 8,
            TableKind::Chi => 8,
            TableKind::Psi => 5,
            TableKind::G => 6,
            TableKind::GB => 4,
            TableKind::M2 => 6,
            TableKind::M3 => 4,
        }
    }
}

impl std::fmt::Display for TableKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// A computed table in both output formats.
pub struct RenderedTable {
    pub json: String,
    pub csv: String,
}

#[derive(Serialize)]
struct TripleEntry {
    #[serde(rename = "I")]
    i: Vec<usize>,
    #[serde(rename = "J")]
    j: Vec<usize>,
    #[serde(rename = "K")]
    k: Vec<usize>,
    value: i64,
}

#[derive(Serialize)]
struct ConstantFile {
    n: usize,
    flavor: &'static str,
    entries: Vec<TripleEntry>,
}

#[derive(Serialize)]
struct CountEntry {
    shape: Vec<usize>,
    #[serde(rename = "I")]
    set: Vec<usize>,
    value: i64,
}

#[derive(Serialize)]
struct KeyedFile<E> {
    n: usize,
    kind: &'static str,
    entries: Vec<E>,
}

#[derive(Serialize)]
struct KostkaEntry {
    shape: Vec<usize>,
    weight: Vec<usize>,
    value: i64,
}

#[derive(Serialize)]
struct ClassA {
    label: Vec<usize>,
    size: i64,
}

#[derive(Serialize)]
struct ClassB {
    minus: Vec<usize>,
    plus: Vec<usize>,
    size: i64,
}

#[derive(Serialize)]
struct CharRow {
    shape: Vec<usize>,
    values: Vec<i64>,
}

#[derive(Serialize)]
struct CharFile<C> {
    n: usize,
    kind: &'static str,
    classes: Vec<C>,
    rows: Vec<CharRow>,
}

#[derive(Serialize)]
struct KroneckerEntry {
    lambda: Vec<usize>,
    mu: Vec<usize>,
    nu: Vec<usize>,
    value: i64,
}

#[derive(Serialize)]
struct MarginEntry2 {
    rows: Vec<usize>,
    cols: Vec<usize>,
    value: i64,
}

#[derive(Serialize)]
struct MarginEntry3 {
    p: Vec<usize>,
    q: Vec<usize>,
    r: Vec<usize>,
    value: i64,
}

fn quoted(field: impl std::fmt::Display) -> String {
    format!("\"{field}\"")
}

fn finish<F: Serialize>(file: &F, csv: String) -> RenderedTable {
    let mut json = serde_json::to_string(file).expect("table serialization cannot fail");
    json.push('\n');
    RenderedTable { json, csv }
}

/// Computes the table of the given kind and renders both formats.
///
/// `nonzero_only` drops zero cells from the JSON entry list of grid-shaped
/// kinds; it never affects CSV output or character matrices.
pub fn render_table(kind: TableKind, n: usize, nonzero_only: bool) -> Result<RenderedTable, Error> {
    let max = kind.max_n();
    if n < 1 || n > max {
        return Err(Error::OutOfRange {
            what: kind.name().to_string(),
            max,
            got: n,
        });
    }
    Ok(match kind {
        TableKind::A | TableKind::B => render_ab(kind, n, nonzero_only),
        TableKind::C => render_c(n, nonzero_only),
        TableKind::D => render_d(n),
        TableKind::DB => render_db(n),
        TableKind::Kostka => render_kostka(n),
        TableKind::Chi => render_chi(n),
        TableKind::Psi => render_psi(n),
        TableKind::G | TableKind::GB => render_kronecker(kind, n, nonzero_only),
        TableKind::M2 => render_m2(n, nonzero_only),
        TableKind::M3 => render_m3(n, nonzero_only),
    })
}

fn subset_rows(kind: SubsetKind, n: usize) -> Vec<(Vec<usize>, String)> {
    IndexSubset::all(kind, n)
        .into_iter()
        .map(|s| (s.elements(), quoted(s)))
        .collect()
}

fn render_triple_grid(
    n: usize,
    flavor: &'static str,
    kind: SubsetKind,
    nonzero_only: bool,
    value: impl Fn(usize, usize, usize) -> i64,
) -> RenderedTable {
    let subsets = subset_rows(kind, n);
    let mut entries = Vec::new();
    let mut csv = String::from("I,J,K,value\n");
    for (i, si) in subsets.iter().enumerate() {
        for (j, sj) in subsets.iter().enumerate() {
            for (k, sk) in subsets.iter().enumerate() {
                let v = value(i, j, k);
                if v != 0 || !nonzero_only {
                    entries.push(TripleEntry {
                        i: si.0.clone(),
                        j: sj.0.clone(),
                        k: sk.0.clone(),
                        value: v,
                    });
                }
                if v != 0 {
                    csv.push_str(&format!("{},{},{},{v}\n", si.1, sj.1, sk.1));
                }
            }
        }
    }
    finish(
        &ConstantFile {
            n,
            flavor,
            entries,
        },
        csv,
    )
}

fn render_ab(kind: TableKind, n: usize, nonzero_only: bool) -> RenderedTable {
    let table = DescentTableA::new(n);
    let value = |i, j, k| match kind {
        TableKind::A => table.a_mask(i, j, k),
        _ => table.b_mask(i, j, k),
    };
    render_triple_grid(n, kind.name(), SubsetKind::TypeA, nonzero_only, value)
}

fn render_c(n: usize, nonzero_only: bool) -> RenderedTable {
    let table = DescentTableB::new(n);
    render_triple_grid(n, "c", SubsetKind::TypeB, nonzero_only, |i, j, k| {
        table.c_mask(i, j, k)
    })
}

fn render_counts(
    n: usize,
    kind: &'static str,
    shapes: &[Partition],
    subset_kind: SubsetKind,
    row: impl Fn(usize) -> Vec<i64>,
) -> RenderedTable {
    let subsets = subset_rows(subset_kind, n);
    let mut entries = Vec::new();
    let mut csv = String::from("shape,I,value\n");
    for (idx, shape) in shapes.iter().enumerate() {
        let counts = row(idx);
        for (mask, sub) in subsets.iter().enumerate() {
            let v = counts[mask];
            if v != 0 {
                entries.push(CountEntry {
                    shape: shape.parts().to_vec(),
                    set: sub.0.clone(),
                    value: v,
                });
                csv.push_str(&format!("{},{},{v}\n", quoted(shape), sub.1));
            }
        }
    }
    finish(&KeyedFile { n, kind, entries }, csv)
}

fn render_d(n: usize) -> RenderedTable {
    let counts = DescentCountsA::new(n);
    let shapes = counts.shapes().to_vec();
    render_counts(n, "d", &shapes, SubsetKind::TypeA, |idx| {
        counts.row(idx).to_vec()
    })
}

fn render_db(n: usize) -> RenderedTable {
    let counts = DescentCountsB::new(n);
    let shapes = counts.shapes().to_vec();
    render_counts(n, "dB", &shapes, SubsetKind::TypeB, |idx| {
        counts.row(idx).to_vec()
    })
}

fn render_kostka(n: usize) -> RenderedTable {
    let mut entries = Vec::new();
    let mut csv = String::from("shape,weight,value\n");
    for shape in partitions(n) {
        for weight in compositions(n) {
            let v = kostka(&shape, &weight);
            if v != 0 {
                entries.push(KostkaEntry {
                    shape: shape.parts().to_vec(),
                    weight: weight.parts().to_vec(),
                    value: v,
                });
                csv.push_str(&format!("{},{},{v}\n", quoted(&shape), quoted(&weight)));
            }
        }
    }
    finish(
        &KeyedFile {
            n,
            kind: "kostka",
            entries,
        },
        csv,
    )
}

fn render_chi(n: usize) -> RenderedTable {
    let table = CharTableA::new(n);
    let classes: Vec<ClassA> = table
        .shapes()
        .iter()
        .map(|c| ClassA {
            label: c.parts().to_vec(),
            size: class_size(c),
        })
        .collect();
    let mut rows = Vec::new();
    let mut csv = String::from("shape,class,size,value\n");
    for shape in table.shapes() {
        let values: Vec<i64> = table
            .shapes()
            .iter()
            .map(|c| table.chi(shape, c))
            .collect();
        for (class, &v) in table.shapes().iter().zip(&values) {
            if v != 0 {
                csv.push_str(&format!(
                    "{},{},{},{v}\n",
                    quoted(shape),
                    quoted(class),
                    class_size(class)
                ));
            }
        }
        rows.push(CharRow {
            shape: shape.parts().to_vec(),
            values,
        });
    }
    finish(
        &CharFile {
            n,
            kind: "chi",
            classes,
            rows,
        },
        csv,
    )
}

fn render_psi(n: usize) -> RenderedTable {
    let table = CharTableB::new(n);
    let classes: Vec<ClassB> = table
        .classes()
        .iter()
        .map(|c| ClassB {
            minus: c.minus.parts().to_vec(),
            plus: c.plus.parts().to_vec(),
            size: class_size_b(c),
        })
        .collect();
    let mut rows = Vec::new();
    let mut csv = String::from("shape,class,size,value\n");
    for shape in table.shapes() {
        let values: Vec<i64> = table
            .classes()
            .iter()
            .map(|c| table.psi(shape, c))
            .collect();
        for (class, &v) in table.classes().iter().zip(&values) {
            if v != 0 {
                csv.push_str(&format!(
                    "{},{},{},{v}\n",
                    quoted(shape),
                    quoted(class),
                    class_size_b(class)
                ));
            }
        }
        rows.push(CharRow {
            shape: shape.parts().to_vec(),
            values,
        });
    }
    finish(
        &CharFile {
            n,
            kind: "psi",
            classes,
            rows,
        },
        csv,
    )
}

fn render_kronecker(kind: TableKind, n: usize, nonzero_only: bool) -> RenderedTable {
    match kind {
        TableKind::G => {
            let k = KroneckerA::new(n);
            let shapes = k.shapes().to_vec();
            kronecker_file(kind, n, nonzero_only, &shapes, |a, b, c| k.g(a, b, c))
        }
        _ => {
            let k = KroneckerB::new(n);
            let shapes = k.shapes().to_vec();
            kronecker_file(kind, n, nonzero_only, &shapes, |a, b, c| k.g(a, b, c))
        }
    }
}

fn kronecker_file(
    kind: TableKind,
    n: usize,
    nonzero_only: bool,
    shapes: &[Partition],
    value: impl Fn(&Partition, &Partition, &Partition) -> i64,
) -> RenderedTable {
    let mut entries = Vec::new();
    let mut csv = String::from("lambda,mu,nu,value\n");
    for la in shapes {
        for mu in shapes {
            for nu in shapes {
                let v = value(la, mu, nu);
                if v != 0 || !nonzero_only {
                    entries.push(KroneckerEntry {
                        lambda: la.parts().to_vec(),
                        mu: mu.parts().to_vec(),
                        nu: nu.parts().to_vec(),
                        value: v,
                    });
                }
                if v != 0 {
                    csv.push_str(&format!(
                        "{},{},{},{v}\n",
                        quoted(la),
                        quoted(mu),
                        quoted(nu)
                    ));
                }
            }
        }
    }
    finish(
        &KeyedFile {
            n,
            kind: kind.name(),
            entries,
        },
        csv,
    )
}

fn render_m2(n: usize, nonzero_only: bool) -> RenderedTable {
    let comps = compositions(n);
    let mut entries = Vec::new();
    let mut csv = String::from("rows,cols,value\n");
    for rows in &comps {
        for cols in &comps {
            let v = matrix_count(rows, cols);
            if v != 0 || !nonzero_only {
                entries.push(MarginEntry2 {
                    rows: rows.parts().to_vec(),
                    cols: cols.parts().to_vec(),
                    value: v,
                });
            }
            if v != 0 {
                csv.push_str(&format!("{},{},{v}\n", quoted(rows), quoted(cols)));
            }
        }
    }
    finish(
        &KeyedFile {
            n,
            kind: "m2",
            entries,
        },
        csv,
    )
}

fn render_m3(n: usize, nonzero_only: bool) -> RenderedTable {
    let comps = compositions(n);
    let mut entries = Vec::new();
    let mut csv = String::from("p,q,r,value\n");
    for p in &comps {
        for q in &comps {
            for r in &comps {
                let v = matrix_count_3d(p, q, r);
                if v != 0 || !nonzero_only {
                    entries.push(MarginEntry3 {
                        p: p.parts().to_vec(),
                        q: q.parts().to_vec(),
                        r: r.parts().to_vec(),
                        value: v,
                    });
                }
                if v != 0 {
                    csv.push_str(&format!("{},{},{},{v}\n", quoted(p), quoted(q), quoted(r)));
                }
            }
        }
    }
    finish(
        &KeyedFile {
            n,
            kind: "m3",
            entries,
        },
        csv,
    )
}
