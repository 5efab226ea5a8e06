//! Exact verification of the identities the crate implements.
//!
//! Every identity is registered under a stable id with a default sweep size
//! and a hard size cap.  [`run_identity`] checks one identity at one size and
//! returns a machine-readable report; a failure carries the first
//! counterexample in a fixed scan order, so reruns are reproducible.

use std::collections::HashMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::character::{psi, KroneckerA, KroneckerB};
use crate::descent_a::{
    matrix_count, matrix_count_3d, reading_word_matrix_count, DescentTableA, TripleTableA,
};
use crate::descent_b::{DescentTableB, TripleTableB};
use crate::domino::{standard_domino_tableaux, DescentCountsB, Domino, DominoTableau};
use crate::partition::{
    compositions, domino_shapes, partitions, BiPartition, Composition, IndexSubset, Partition,
    SubsetKind,
};
use crate::poly::{Alphabet, Poly};
use crate::tableau::{kostka, DescentCountsA};
use crate::Error;

/// A registered identity: stable id, a one-line statement, the size used by
/// unqualified sweeps and the largest size the runner accepts.
#[derive(Clone, Copy, Debug)]
pub struct IdentitySpec {
    pub id: &'static str,
    pub summary: &'static str,
    pub default_max: usize,
    pub hard_max: usize,
}

static REGISTRY: [IdentitySpec; 19] = [
    IdentitySpec {
        id: "eq1-ab",
        summary: "subset-relaxed factorization counts are superset sums of class product coefficients",
        default_max: 4,
        hard_max: 5,
    },
    IdentitySpec {
        id: "eq2-carter",
        summary: "trivial-class factorization counts are sums of squared standard descent counts",
        default_max: 6,
        hard_max: 7,
    },
    IdentitySpec {
        id: "eq3-fm",
        summary: "each fundamental quasisymmetric function is the sum of monomial functions over finer descent sets",
        default_max: 5,
        hard_max: 6,
    },
    IdentitySpec {
        id: "eq4-schur-f",
        summary: "Schur functions expand over fundamental functions with standard descent counts",
        default_max: 5,
        hard_max: 6,
    },
    IdentitySpec {
        id: "eq5-schur-m",
        summary: "Schur functions expand over monomial functions with Kostka numbers",
        default_max: 5,
        hard_max: 6,
    },
    IdentitySpec {
        id: "eq6-gessel",
        summary: "fundamental functions of a product alphabet expand with factorization counts",
        default_max: 4,
        hard_max: 5,
    },
    IdentitySpec {
        id: "lemma1-transpose",
        summary: "full-class factorization counts pair the descent counts of transposed shapes",
        default_max: 6,
        hard_max: 7,
    },
    IdentitySpec {
        id: "thm1-knuth",
        summary: "inclusion-ordered coefficients count matrices with prescribed margins and reading word",
        default_max: 5,
        hard_max: 6,
    },
    IdentitySpec {
        id: "thm2-kronecker",
        summary: "triple factorization counts contract descent counts against Kronecker coefficients",
        default_max: 5,
        hard_max: 6,
    },
    IdentitySpec {
        id: "eq10-cube",
        summary: "three-margin array counts contract Kostka numbers against Kronecker coefficients",
        default_max: 4,
        hard_max: 5,
    },
    IdentitySpec {
        id: "thm3-cdd",
        summary: "trivial-class signed factorization counts are sums of squared domino descent counts",
        default_max: 4,
        hard_max: 5,
    },
    IdentitySpec {
        id: "eq-fcff-chow",
        summary: "signed fundamental functions of a product alphabet expand with factorization counts",
        default_max: 3,
        hard_max: 4,
    },
    IdentitySpec {
        id: "lemma4-standardization",
        summary: "semistandard domino tableaux are standard ones paired with admissible weights",
        default_max: 3,
        hard_max: 4,
    },
    IdentitySpec {
        id: "prop5-domino-qsym",
        summary: "domino functions expand over signed fundamental functions with domino descent counts",
        default_max: 3,
        hard_max: 4,
    },
    IdentitySpec {
        id: "prop6-domino-schur",
        summary: "domino functions factor as Schur functions of the two quotient shapes",
        default_max: 3,
        hard_max: 4,
    },
    IdentitySpec {
        id: "eq-ggg-cauchy",
        summary: "the one-row domino function of a product alphabet is the diagonal sum of domino functions",
        default_max: 3,
        hard_max: 4,
    },
    IdentitySpec {
        id: "psum-wreath",
        summary: "signed power sums expand over domino functions with hyperoctahedral characters",
        default_max: 3,
        hard_max: 4,
    },
    IdentitySpec {
        id: "eq-gggg-kronecker",
        summary: "domino functions of a product alphabet expand with hyperoctahedral Kronecker coefficients",
        default_max: 3,
        hard_max: 4,
    },
    IdentitySpec {
        id: "thm4-typeB-kronecker",
        summary: "signed triple factorization counts contract domino descent counts against Kronecker coefficients",
        default_max: 3,
        hard_max: 4,
    },
];

/// All registered identities, in a fixed order.
pub fn identities() -> &'static [IdentitySpec] {
    &REGISTRY
}

/// The first mismatch found by a failed check.
#[derive(Clone, Debug, Serialize)]
pub struct Counterexample {
    pub key: String,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of checking one identity at one size.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub schema: String,
    pub identity: String,
    pub n: usize,
    pub status: String,
    pub counterexample: Option<Counterexample>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub millis: Option<u128>,
}

/// Checks a registered identity exhaustively at size `n`.
pub fn run_identity(id: &str, n: usize) -> Result<VerificationReport, Error> {
    let spec = identities()
        .iter()
        .find(|s| s.id == id)
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))?;
    if n < 1 || n > spec.hard_max {
        return Err(Error::OutOfRange {
            what: id.to_string(),
            max: spec.hard_max,
            got: n,
        });
    }
    let start = Instant::now();
    let counterexample = check(id, n);
    let millis = start.elapsed().as_millis();
    Ok(VerificationReport {
        schema: "verify-report/1".to_string(),
        identity: id.to_string(),
        n,
        status: if counterexample.is_none() {
            "pass".to_string()
        } else {
            "fail".to_string()
        },
        counterexample,
        millis: Some(millis),
    })
}

/// Runs a batch of `(identity, n)` requests in parallel, preserving order.
pub fn run_many(requests: &[(String, usize)]) -> Vec<Result<VerificationReport, Error>> {
    requests
        .par_iter()
        .map(|(id, n)| run_identity(id, *n))
        .collect()
}

fn check(id: &str, n: usize) -> Option<Counterexample> {
    match id {
        "eq1-ab" => check_eq1(n),
        "eq2-carter" => check_eq2(n),
        "eq3-fm" => check_eq3(n),
        "eq4-schur-f" => check_eq4(n),
        "eq5-schur-m" => check_eq5(n),
        "eq6-gessel" => check_eq6(n),
        "lemma1-transpose" => check_lemma1(n),
        "thm1-knuth" => check_thm1(n),
        "thm2-kronecker" => check_thm2(n),
        "eq10-cube" => check_eq10(n),
        "thm3-cdd" => check_thm3(n),
        "eq-fcff-chow" => check_fcff(n),
        "lemma4-standardization" => check_lemma4(n),
        "prop5-domino-qsym" => check_prop5(n),
        "prop6-domino-schur" => check_prop6(n),
        "eq-ggg-cauchy" => check_ggg(n),
        "psum-wreath" => check_psum(n),
        "eq-gggg-kronecker" => check_gggg(n),
        "thm4-typeB-kronecker" => check_thm4(n),
        _ => unreachable!("the dispatch covers the registry"),
    }
}

fn sub_a(n: usize, mask: usize) -> IndexSubset {
    IndexSubset::from_mask(SubsetKind::TypeA, n, mask as u32)
}

fn sub_b(n: usize, mask: usize) -> IndexSubset {
    IndexSubset::from_mask(SubsetKind::TypeB, n, mask as u32)
}

fn counterexample(key: String, lhs: impl ToString, rhs: impl ToString) -> Option<Counterexample> {
    Some(Counterexample {
        key,
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
    })
}

fn check_eq1(n: usize) -> Option<Counterexample> {
    let table = DescentTableA::new(n);
    let s = table.subsets();
    for i in 0..s {
        for j in 0..s {
            for k in 0..s {
                let mut lhs = 0;
                let mut ip = i;
                loop {
                    let mut jp = j;
                    loop {
                        lhs += table.a_mask(ip, jp, k);
                        if jp == 0 {
                            break;
                        }
                        jp = (jp - 1) & j;
                    }
                    if ip == 0 {
                        break;
                    }
                    ip = (ip - 1) & i;
                }
                let free = (s - 1) ^ k;
                let mut rhs = 0;
                let mut extra = free;
                loop {
                    rhs += table.b_mask(i, j, k | extra);
                    if extra == 0 {
                        break;
                    }
                    extra = (extra - 1) & free;
                }
                if lhs != rhs {
                    return counterexample(
                        format!("I={} J={} K={}", sub_a(n, i), sub_a(n, j), sub_a(n, k)),
                        lhs,
                        rhs,
                    );
                }
            }
        }
    }
    None
}

fn check_eq2(n: usize) -> Option<Counterexample> {
    let table = DescentTableA::new(n);
    let counts = DescentCountsA::new(n);
    let s = table.subsets();
    for i in 0..s {
        for j in 0..s {
            let lhs = table.a_mask(i, j, 0);
            let rhs: i64 = (0..counts.shapes().len())
                .map(|si| counts.row(si)[i] * counts.row(si)[j])
                .sum();
            if lhs != rhs {
                return counterexample(
                    format!("I={} J={}", sub_a(n, i), sub_a(n, j)),
                    lhs,
                    rhs,
                );
            }
        }
    }
    None
}

fn check_eq3(n: usize) -> Option<Counterexample> {
    let x = Alphabet::type_a(n);
    let subsets = IndexSubset::all(SubsetKind::TypeA, n);
    let monomials: Vec<Poly> = subsets
        .iter()
        .map(|s| x.eval_m(&s.to_composition()).expect("strict composition"))
        .collect();
    for i in &subsets {
        let lhs = x.eval_f(i).expect("matching kinds");
        let mut rhs = Poly::zero();
        for (jm, j) in subsets.iter().enumerate() {
            if i.is_subset_of(j) {
                rhs += &monomials[jm];
            }
        }
        if !(&lhs - &rhs).is_zero() {
            return counterexample(format!("I={i}"), lhs.dump(x.space()), rhs.dump(x.space()));
        }
    }
    None
}

fn check_eq4(n: usize) -> Option<Counterexample> {
    let x = Alphabet::type_a(n);
    let counts = DescentCountsA::new(n);
    let subsets = IndexSubset::all(SubsetKind::TypeA, n);
    let fundamentals: Vec<Poly> = subsets
        .iter()
        .map(|s| x.eval_f(s).expect("matching kinds"))
        .collect();
    for (si, shape) in counts.shapes().iter().enumerate() {
        let lhs = x.eval_s(shape).expect("type A alphabet");
        let mut rhs = Poly::zero();
        for (m, f) in fundamentals.iter().enumerate() {
            rhs += &f.scaled(counts.row(si)[m]);
        }
        if !(&lhs - &rhs).is_zero() {
            return counterexample(
                format!("shape={shape}"),
                lhs.dump(x.space()),
                rhs.dump(x.space()),
            );
        }
    }
    None
}

fn check_eq5(n: usize) -> Option<Counterexample> {
    let x = Alphabet::type_a(n);
    let comps = compositions(n);
    let monomials: Vec<Poly> = comps
        .iter()
        .map(|c| x.eval_m(c).expect("strict composition"))
        .collect();
    for shape in partitions(n) {
        let lhs = x.eval_s(&shape).expect("type A alphabet");
        let mut rhs = Poly::zero();
        for (ci, comp) in comps.iter().enumerate() {
            rhs += &monomials[ci].scaled(kostka(&shape, comp));
        }
        if !(&lhs - &rhs).is_zero() {
            return counterexample(
                format!("shape={shape}"),
                lhs.dump(x.space()),
                rhs.dump(x.space()),
            );
        }
    }
    None
}

fn check_eq6(n: usize) -> Option<Counterexample> {
    let (x, y, xy) = Alphabet::product_a(n, n);
    let table = DescentTableA::new(n);
    let s = table.subsets();
    let fx: Vec<Poly> = (0..s)
        .map(|m| x.eval_f(&sub_a(n, m)).expect("matching kinds"))
        .collect();
    let fy: Vec<Poly> = (0..s)
        .map(|m| y.eval_f(&sub_a(n, m)).expect("matching kinds"))
        .collect();
    let products: Vec<Poly> = (0..s * s)
        .map(|ij| &fx[ij / s] * &fy[ij % s])
        .collect();
    for k in 0..s {
        let lhs = xy.eval_f(&sub_a(n, k)).expect("matching kinds");
        let mut rhs = Poly::zero();
        for (ij, product) in products.iter().enumerate() {
            rhs += &product.scaled(table.a_mask(ij / s, ij % s, k));
        }
        if !(&lhs - &rhs).is_zero() {
            return counterexample(
                format!("K={}", sub_a(n, k)),
                lhs.dump(xy.space()),
                rhs.dump(xy.space()),
            );
        }
    }
    None
}

fn check_lemma1(n: usize) -> Option<Counterexample> {
    let table = DescentTableA::new(n);
    let counts = DescentCountsA::new(n);
    let s = table.subsets();
    let shapes = counts.shapes();
    let transpose_of: Vec<usize> = shapes
        .iter()
        .map(|shape| {
            let t = shape.transpose();
            shapes
                .iter()
                .position(|u| *u == t)
                .expect("transposing preserves the size")
        })
        .collect();
    for i in 0..s {
        for j in 0..s {
            let lhs = table.a_mask(i, j, s - 1);
            let rhs: i64 = (0..shapes.len())
                .map(|si| counts.row(si)[i] * counts.row(transpose_of[si])[j])
                .sum();
            if lhs != rhs {
                return counterexample(
                    format!("I={} J={}", sub_a(n, i), sub_a(n, j)),
                    lhs,
                    rhs,
                );
            }
        }
    }
    None
}

fn check_thm1(n: usize) -> Option<Counterexample> {
    let table = DescentTableA::new(n);
    let s = table.subsets();
    let shapes = partitions(n);
    let comps = compositions(n);
    let kost: Vec<Vec<i64>> = shapes
        .iter()
        .map(|shape| comps.iter().map(|c| kostka(shape, c)).collect())
        .collect();
    for (ri, rows) in comps.iter().enumerate() {
        for (ci, cols) in comps.iter().enumerate() {
            let lhs = matrix_count(rows, cols);
            let rhs: i64 = (0..shapes.len()).map(|si| kost[si][ri] * kost[si][ci]).sum();
            if lhs != rhs {
                return counterexample(format!("rows={rows} cols={cols}"), lhs, rhs);
            }
        }
    }
    for i in 0..s {
        for j in 0..s {
            let lhs: i64 = (0..s).map(|k| table.b_mask(i, j, k)).sum();
            let rhs: i64 = (0..shapes.len()).map(|si| kost[si][i] * kost[si][j]).sum();
            if lhs != rhs {
                return counterexample(
                    format!("total I={} J={}", sub_a(n, i), sub_a(n, j)),
                    lhs,
                    rhs,
                );
            }
        }
    }
    for i in 0..s {
        for j in 0..s {
            for k in 0..s {
                let lhs = table.b_mask(i, j, k);
                let rhs = reading_word_matrix_count(&comps[i], &comps[j], &comps[k]);
                if lhs != rhs {
                    return counterexample(
                        format!("I={} J={} K={}", sub_a(n, i), sub_a(n, j), sub_a(n, k)),
                        lhs,
                        rhs,
                    );
                }
            }
        }
    }
    None
}

fn check_thm2(n: usize) -> Option<Counterexample> {
    let triples = TripleTableA::new(n);
    let counts = DescentCountsA::new(n);
    let kron = KroneckerA::new(n);
    let shapes = counts.shapes();
    let p = shapes.len();
    let s = triples.subsets();
    // Contract one index at a time to keep the sweep near-linear in the
    // table sizes.
    let mut g1 = vec![0i64; s * p * p];
    for i in 0..s {
        for (mi, mu) in shapes.iter().enumerate() {
            for (ni, nu) in shapes.iter().enumerate() {
                let mut acc = 0;
                for (li, la) in shapes.iter().enumerate() {
                    acc += counts.row(li)[i] * kron.g(la, mu, nu);
                }
                g1[(i * p + mi) * p + ni] = acc;
            }
        }
    }
    let mut g2 = vec![0i64; s * s * p];
    for i in 0..s {
        for j in 0..s {
            for ni in 0..p {
                let mut acc = 0;
                for mi in 0..p {
                    acc += counts.row(mi)[j] * g1[(i * p + mi) * p + ni];
                }
                g2[(i * s + j) * p + ni] = acc;
            }
        }
    }
    for i in 0..s {
        for j in 0..s {
            for k in 0..s {
                let lhs = triples.count_mask(i, j, k);
                let rhs: i64 = (0..p).map(|ni| counts.row(ni)[k] * g2[(i * s + j) * p + ni]).sum();
                if lhs != rhs {
                    return counterexample(
                        format!("I={} J={} K={}", sub_a(n, i), sub_a(n, j), sub_a(n, k)),
                        lhs,
                        rhs,
                    );
                }
            }
        }
    }
    None
}

fn check_eq10(n: usize) -> Option<Counterexample> {
    let shapes = partitions(n);
    let comps = compositions(n);
    let kron = KroneckerA::new(n);
    let p = shapes.len();
    let kost: Vec<Vec<i64>> = comps
        .iter()
        .map(|c| shapes.iter().map(|shape| kostka(shape, c)).collect())
        .collect();
    for (pi, pc) in comps.iter().enumerate() {
        // Contract the first index once per choice of the first margin.
        let mut partial = vec![0i64; p * p];
        for mi in 0..p {
            for ni in 0..p {
                let mut acc = 0;
                for li in 0..p {
                    acc += kost[pi][li] * kron.g(&shapes[li], &shapes[mi], &shapes[ni]);
                }
                partial[mi * p + ni] = acc;
            }
        }
        for (qi, qc) in comps.iter().enumerate() {
            let contracted: Vec<i64> = (0..p)
                .map(|ni| (0..p).map(|mi| kost[qi][mi] * partial[mi * p + ni]).sum())
                .collect();
            for (ri, rc) in comps.iter().enumerate() {
                let lhs = matrix_count_3d(pc, qc, rc);
                let rhs: i64 = (0..p).map(|ni| kost[ri][ni] * contracted[ni]).sum();
                if lhs != rhs {
                    return counterexample(format!("p={pc} q={qc} r={rc}"), lhs, rhs);
                }
            }
        }
    }
    None
}

fn check_thm3(n: usize) -> Option<Counterexample> {
    let table = DescentTableB::new(n);
    let counts = DescentCountsB::new(n);
    let s = table.subsets();
    for i in 0..s {
        for j in 0..s {
            let lhs = table.c_mask(i, j, 0);
            let rhs: i64 = (0..counts.shapes().len())
                .map(|si| counts.row(si)[i] * counts.row(si)[j])
                .sum();
            if lhs != rhs {
                return counterexample(
                    format!("I={} J={}", sub_b(n, i), sub_b(n, j)),
                    lhs,
                    rhs,
                );
            }
        }
    }
    None
}

fn check_fcff(n: usize) -> Option<Counterexample> {
    let (x, y, xy) = Alphabet::product_b(n, n);
    let table = DescentTableB::new(n);
    let s = table.subsets();
    let fx: Vec<Poly> = (0..s)
        .map(|m| x.eval_fb(&sub_b(n, m)).expect("matching kinds"))
        .collect();
    let fy: Vec<Poly> = (0..s)
        .map(|m| y.eval_fb(&sub_b(n, m)).expect("matching kinds"))
        .collect();
    let products: Vec<Poly> = (0..s * s)
        .map(|ij| &fx[ij / s] * &fy[ij % s])
        .collect();
    for k in 0..s {
        let lhs = xy.eval_fb(&sub_b(n, k)).expect("matching kinds");
        let mut rhs = Poly::zero();
        for (ij, product) in products.iter().enumerate() {
            rhs += &product.scaled(table.c_mask(ij / s, ij % s, k));
        }
        if !(&lhs - &rhs).is_zero() {
            return counterexample(
                format!("K={}", sub_b(n, k)),
                lhs.dump(xy.space()),
                rhs.dump(xy.space()),
            );
        }
    }
    None
}

/// Tilings of a staircase-free shape by dominoes, by covering the first free
/// cell in row-major order.
fn tilings(parts: &[usize]) -> Vec<Vec<Domino>> {
    let mut covered: Vec<Vec<bool>> = parts.iter().map(|&len| vec![false; len]).collect();
    let mut acc = Vec::new();
    let mut out = Vec::new();
    fn place(
        parts: &[usize],
        covered: &mut Vec<Vec<bool>>,
        acc: &mut Vec<Domino>,
        out: &mut Vec<Vec<Domino>>,
    ) {
        let rows = parts.len();
        let mut free = None;
        'scan: for (r, row) in covered.iter().enumerate() {
            for (c, &taken) in row.iter().enumerate() {
                if !taken {
                    free = Some((r, c));
                    break 'scan;
                }
            }
        }
        let Some((r, c)) = free else {
            out.push(acc.clone());
            return;
        };
        if c + 1 < parts[r] && !covered[r][c + 1] {
            covered[r][c] = true;
            covered[r][c + 1] = true;
            acc.push(Domino {
                row: r,
                col: c,
                vertical: false,
            });
            place(parts, covered, acc, out);
            acc.pop();
            covered[r][c] = false;
            covered[r][c + 1] = false;
        }
        if r + 1 < rows && c < parts[r + 1] && !covered[r + 1][c] {
            covered[r][c] = true;
            covered[r + 1][c] = true;
            acc.push(Domino {
                row: r,
                col: c,
                vertical: true,
            });
            place(parts, covered, acc, out);
            acc.pop();
            covered[r][c] = false;
            covered[r + 1][c] = false;
        }
    }
    place(parts, &mut covered, &mut acc, &mut out);
    out
}

/// Checks a labelled tiling against the cell-level rules: labels weakly
/// increase along rows and strictly increase down columns (cells of one
/// domino excepted), and a vertical top-left domino is not labelled zero.
fn labelled_tiling_is_valid(parts: &[usize], entries: &[(Domino, usize)]) -> bool {
    let mut grid: Vec<Vec<Option<(usize, usize)>>> =
        parts.iter().map(|&len| vec![None; len]).collect();
    for (idx, (d, label)) in entries.iter().enumerate() {
        for (r, c) in d.cells() {
            grid[r][c] = Some((idx, *label));
        }
    }
    for r in 0..parts.len() {
        for c in 0..parts[r] {
            let (_, label) = grid[r][c].expect("the tiling covers the shape");
            if c + 1 < parts[r] {
                let (_, right) = grid[r][c + 1].expect("covered");
                if right < label {
                    return false;
                }
            }
            if r + 1 < parts.len() && c < parts[r + 1] {
                let (own, _) = grid[r][c].expect("covered");
                let (below_idx, below) = grid[r + 1][c].expect("covered");
                if below_idx != own && below <= label {
                    return false;
                }
            }
        }
    }
    for (d, label) in entries {
        if d.row == 0 && d.col == 0 && d.vertical && *label == 0 {
            return false;
        }
    }
    true
}

fn weak_vectors(slots: usize, total: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut acc = Vec::new();
    fn build(slots: usize, total: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if acc.len() + 1 == slots {
            acc.push(total);
            out.push(acc.clone());
            acc.pop();
            return;
        }
        for v in 0..=total {
            acc.push(v);
            build(slots, total - v, acc, out);
            acc.pop();
        }
    }
    build(slots, total, &mut acc, &mut out);
    out
}

fn entry_key(t: &DominoTableau) -> Vec<(usize, usize, bool, usize)> {
    t.entries()
        .iter()
        .map(|(d, label)| (d.row, d.col, d.vertical, *label))
        .collect()
}

/// Standardized entry list paired with a weight vector, the grouping key of
/// the semistandard-to-standard correspondence.
type StandardizationKey = (Vec<(usize, usize, bool, usize)>, Vec<usize>);

fn check_lemma4(n: usize) -> Option<Counterexample> {
    for shape in domino_shapes(n) {
        // Enumerate every valid labelling of every tiling from the cell
        // rules alone, then group by standardization and weight.
        let mut grouped: HashMap<StandardizationKey, i64> = HashMap::new();
        for tiling in tilings(shape.parts()) {
            let dominoes = tiling.len();
            let mut labels = vec![0usize; dominoes];
            loop {
                let entries: Vec<(Domino, usize)> = tiling
                    .iter()
                    .cloned()
                    .zip(labels.iter().copied())
                    .collect();
                if labelled_tiling_is_valid(shape.parts(), &entries) {
                    let t = DominoTableau::new(entries);
                    let key = (entry_key(&t.standardize()), t.weight(n));
                    *grouped.entry(key).or_insert(0) += 1;
                }
                let mut pos = 0;
                loop {
                    if pos == dominoes {
                        break;
                    }
                    if labels[pos] == n {
                        labels[pos] = 0;
                        pos += 1;
                    } else {
                        labels[pos] += 1;
                        break;
                    }
                }
                if pos == dominoes {
                    break;
                }
            }
        }
        let mut total = 0i64;
        for t0 in standard_domino_tableaux(&shape) {
            let descent_mask = t0.descent_set().mask() as usize;
            for weight in weak_vectors(n + 1, n) {
                let bar = Composition::weak(weight.clone()).dropped_zeros();
                let bar_mask = bar
                    .to_subset()
                    .expect("dropping zeros leaves a strict composition")
                    .mask() as usize;
                let admissible = !(t0.top_left_vertical() && weight[0] > 0)
                    && (descent_mask >> 1) & !bar_mask == 0;
                let expected = i64::from(admissible);
                let got = grouped
                    .get(&(entry_key(&t0), weight.clone()))
                    .copied()
                    .unwrap_or(0);
                total += got;
                if got != expected {
                    return counterexample(
                        format!(
                            "shape={} standardization descents={} weight={:?}",
                            shape,
                            t0.descent_set(),
                            weight
                        ),
                        got,
                        expected,
                    );
                }
            }
        }
        let enumerated: i64 = grouped.values().sum();
        if total != enumerated {
            return counterexample(
                format!("shape={shape} grouped mass"),
                enumerated,
                total,
            );
        }
    }
    None
}

fn check_prop5(n: usize) -> Option<Counterexample> {
    let x = Alphabet::type_b(n);
    let counts = DescentCountsB::new(n);
    let s = SubsetKind::TypeB.count(n);
    let fundamentals: Vec<Poly> = (0..s)
        .map(|m| x.eval_fb(&sub_b(n, m)).expect("matching kinds"))
        .collect();
    for (si, shape) in counts.shapes().iter().enumerate() {
        let lhs = x.eval_g(shape).expect("tileable shape");
        let mut rhs = Poly::zero();
        for (m, f) in fundamentals.iter().enumerate() {
            rhs += &f.scaled(counts.row(si)[m]);
        }
        if !(&lhs - &rhs).is_zero() {
            return counterexample(
                format!("shape={shape}"),
                lhs.dump(x.space()),
                rhs.dump(x.space()),
            );
        }
    }
    None
}

fn check_prop6(n: usize) -> Option<Counterexample> {
    let x = Alphabet::type_b(n);
    let minus = x.minus_part().expect("type B alphabet");
    let plus = x.plus_part().expect("type B alphabet");
    for shape in domino_shapes(n) {
        let q = shape.two_quotient().expect("tileable shape");
        let lhs = x.eval_g(&shape).expect("tileable shape");
        let rhs = &minus.eval_s(&q.minus).expect("type A alphabet")
            * &plus.eval_s(&q.plus).expect("type A alphabet");
        if !(&lhs - &rhs).is_zero() {
            return counterexample(
                format!("shape={shape} quotient={q}"),
                lhs.dump(x.space()),
                rhs.dump(x.space()),
            );
        }
    }
    None
}

fn check_ggg(n: usize) -> Option<Counterexample> {
    let (x, y, xy) = Alphabet::product_b(n, n);
    let row = Partition::new(vec![2 * n]);
    let lhs = xy.eval_g(&row).expect("tileable shape");
    let mut rhs = Poly::zero();
    for shape in domino_shapes(n) {
        let gx = x.eval_g(&shape).expect("tileable shape");
        let gy = y.eval_g(&shape).expect("tileable shape");
        rhs += &(&gx * &gy);
    }
    if !(&lhs - &rhs).is_zero() {
        return counterexample(
            "single row".to_string(),
            lhs.dump(xy.space()),
            rhs.dump(xy.space()),
        );
    }
    None
}

fn check_psum(n: usize) -> Option<Counterexample> {
    let x = Alphabet::type_b(n);
    let shapes = domino_shapes(n);
    let dominoes: Vec<Poly> = shapes
        .iter()
        .map(|shape| x.eval_g(shape).expect("tileable shape"))
        .collect();
    for mu in &shapes {
        let q = mu.two_quotient().expect("tileable shape");
        let mut lhs = Poly::constant(1);
        for &part in q.plus.parts() {
            lhs = &lhs * &x.eval_p_signed(part).expect("type B alphabet");
        }
        let mut zero_letter = Poly::zero();
        zero_letter.add_term(x.letter(0).clone(), 1);
        lhs = &lhs * &zero_letter.pow(n - q.plus.size());
        let class = BiPartition::new(q.minus.clone(), q.plus.clone());
        let mut rhs = Poly::zero();
        for (li, shape) in shapes.iter().enumerate() {
            let coefficient = psi(shape, &class).expect("matching sizes");
            rhs += &dominoes[li].scaled(coefficient);
        }
        if !(&lhs - &rhs).is_zero() {
            return counterexample(
                format!("class shape={mu}"),
                lhs.dump(x.space()),
                rhs.dump(x.space()),
            );
        }
    }
    None
}

fn check_gggg(n: usize) -> Option<Counterexample> {
    let (x, y, xy) = Alphabet::product_b(n, n);
    let kron = KroneckerB::new(n);
    let shapes = domino_shapes(n);
    let gx: Vec<Poly> = shapes
        .iter()
        .map(|shape| x.eval_g(shape).expect("tileable shape"))
        .collect();
    let gy: Vec<Poly> = shapes
        .iter()
        .map(|shape| y.eval_g(shape).expect("tileable shape"))
        .collect();
    for shape in &shapes {
        let lhs = xy.eval_g(shape).expect("tileable shape");
        let mut rhs = Poly::zero();
        for (mi, mu) in shapes.iter().enumerate() {
            for (ni, nu) in shapes.iter().enumerate() {
                let coefficient = kron.g(shape, mu, nu);
                if coefficient != 0 {
                    rhs += &(&gx[mi] * &gy[ni]).scaled(coefficient);
                }
            }
        }
        if !(&lhs - &rhs).is_zero() {
            return counterexample(
                format!("shape={shape}"),
                lhs.dump(xy.space()),
                rhs.dump(xy.space()),
            );
        }
    }
    None
}

fn check_thm4(n: usize) -> Option<Counterexample> {
    let triples = TripleTableB::new(n);
    let counts = DescentCountsB::new(n);
    let kron = KroneckerB::new(n);
    let shapes = counts.shapes();
    let p = shapes.len();
    let s = triples.subsets();
    let mut g1 = vec![0i64; s * p * p];
    for i in 0..s {
        for (mi, mu) in shapes.iter().enumerate() {
            for (ni, nu) in shapes.iter().enumerate() {
                let mut acc = 0;
                for (li, la) in shapes.iter().enumerate() {
                    acc += counts.row(li)[i] * kron.g(la, mu, nu);
                }
                g1[(i * p + mi) * p + ni] = acc;
            }
        }
    }
    let mut g2 = vec![0i64; s * s * p];
    for i in 0..s {
        for j in 0..s {
            for ni in 0..p {
                let mut acc = 0;
                for mi in 0..p {
                    acc += counts.row(mi)[j] * g1[(i * p + mi) * p + ni];
                }
                g2[(i * s + j) * p + ni] = acc;
            }
        }
    }
    for i in 0..s {
        for j in 0..s {
            for k in 0..s {
                let lhs = triples.count_mask(i, j, k);
                let rhs: i64 = (0..p).map(|ni| counts.row(ni)[k] * g2[(i * s + j) * p + ni]).sum();
                if lhs != rhs {
                    return counterexample(
                        format!("I={} J={} K={}", sub_b(n, i), sub_b(n, j), sub_b(n, k)),
                        lhs,
                        rhs,
                    );
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_ids_are_unique_and_bounded() {
        let specs = identities();
        for (i, spec) in specs.iter().enumerate() {
            assert!(spec.default_max <= spec.hard_max);
            assert!(spec.default_max >= 1);
            for later in &specs[i + 1..] {
                assert_ne!(spec.id, later.id);
            }
        }
    }

    #[test]
    fn unknown_identities_and_sizes_are_rejected() {
        assert!(matches!(
            run_identity("no-such-identity", 2),
            Err(Error::UnknownIdentity(_))
        ));
        assert!(matches!(
            run_identity("eq2-carter", 99),
            Err(Error::OutOfRange { .. })
        ));
        assert!(matches!(
            run_identity("eq2-carter", 0),
            Err(Error::OutOfRange { .. })
        ));
    }

    #[test]
    fn every_identity_passes_at_small_sizes() {
        for spec in identities() {
            for n in 1..=spec.default_max.min(3) {
                let report = run_identity(spec.id, n).expect("size within bounds");
                assert_eq!(
                    report.status, "pass",
                    "{} failed at n={n}: {:?}",
                    spec.id, report.counterexample
                );
            }
        }
    }

    #[test]
    fn reports_serialize_with_a_stable_schema() {
        let report = run_identity("eq2-carter", 2).expect("size within bounds");
        let json = serde_json::to_value(&report).expect("serializable");
        assert_eq!(json["schema"], "verify-report/1");
        assert_eq!(json["status"], "pass");
        assert!(json["counterexample"].is_null());
        assert!(json["millis"].is_number());
        let mut stripped = report;
        stripped.millis = None;
        let json = serde_json::to_value(&stripped).expect("serializable");
        assert!(json.get("millis").is_none());
    }

    #[test]
    fn batches_preserve_request_order() {
        let requests = vec![
            ("eq3-fm".to_string(), 2),
            ("eq2-carter".to_string(), 1),
            ("eq3-fm".to_string(), 1),
        ];
        let reports = run_many(&requests);
        let ids: Vec<(String, usize)> = reports
            .iter()
            .map(|r| {
                let r = r.as_ref().expect("all sizes in bounds");
                (r.identity.clone(), r.n)
            })
            .collect();
        assert_eq!(ids, requests);
    }
}
