//! Acceptance suite: one test per shipping criterion, each printing a single
//! pass/fail line (visible with `--nocapture`).  Every check is an exact
//! integer or polynomial comparison at the documented desk scales.

use solomon::partition::{compositions, domino_shapes, partitions};
use solomon::tableau::standard_tableaux;
use solomon::{
    class_size, class_size_b, run_identity, standard_domino_tableaux, CharTableA, CharTableB,
    DescentTableA, DescentTableB, KroneckerB, Permutation,
};

fn check(label: &str, body: impl FnOnce()) {
    match std::panic::catch_unwind(std::panic::AssertUnwindSafe(body)) {
        Ok(()) => println!("{label}: pass"),
        Err(cause) => {
            println!("{label}: fail");
            std::panic::resume_unwind(cause);
        }
    }
}

fn passes(id: &str, n: usize) {
    let report = run_identity(id, n).unwrap();
    assert_eq!(
        report.status, "pass",
        "{id} failed at n={n}: {:?}",
        report.counterexample
    );
}

fn factorial(n: usize) -> i64 {
    (1..=n as i64).product()
}

#[test]
fn criterion_01_trivial_class_constants_match_tableau_pair_counts() {
    check("criterion 1 (a at the empty set vs squared descent counts, n=1..6)", || {
        for n in 1..=6 {
            passes("eq2-carter", n);
        }
    });
}

#[test]
fn criterion_02_full_class_constants_match_transposed_pair_counts() {
    check("criterion 2 (a at the full set vs transposed descent counts, n=1..6)", || {
        for n in 1..=6 {
            passes("lemma1-transpose", n);
        }
    });
}

#[test]
fn criterion_03_product_series_reproduces_the_a_table() {
    check("criterion 3 (product-alphabet expansion recovers a, n=1..4)", || {
        for n in 1..=4 {
            passes("eq6-gessel", n);
        }
    });
}

#[test]
fn criterion_04_inclusion_constants_match_convolution_and_matrix_counts() {
    check("criterion 4 (b via inversion, convolution and matrix counts, n=1..5)", || {
        for n in 1..=5 {
            passes("thm1-knuth", n);
        }
        // Independent route to b: count factorizations with both descent
        // sets relaxed to containment, directly from the group.
        for n in 1..=4usize {
            let table = DescentTableA::new(n);
            let s = 1usize << (n - 1);
            let perms = Permutation::all(n);
            let masks: Vec<usize> = perms
                .iter()
                .map(|p| p.descent_set().mask() as usize)
                .collect();
            let mut reps: Vec<Option<&Permutation>> = vec![None; s];
            for (p, &m) in perms.iter().zip(&masks) {
                if reps[m].is_none() {
                    reps[m] = Some(p);
                }
            }
            for (k, rep) in reps.iter().enumerate() {
                let omega = rep.expect("every descent class is nonempty");
                for i in 0..s {
                    for j in 0..s {
                        let mut direct = 0i64;
                        for (sigma, &m) in perms.iter().zip(&masks) {
                            if m & !i != 0 {
                                continue;
                            }
                            let tau = omega.compose(&sigma.inverse());
                            if (tau.descent_set().mask() as usize) & !j == 0 {
                                direct += 1;
                            }
                        }
                        let free = !k & (s - 1);
                        let mut via_b = 0i64;
                        let mut sub = free;
                        loop {
                            via_b += table.b_mask(i, j, k | sub);
                            if sub == 0 {
                                break;
                            }
                            sub = (sub - 1) & free;
                        }
                        assert_eq!(direct, via_b, "n={n} I={i:b} J={j:b} K={k:b}");
                    }
                }
            }
        }
    });
}

#[test]
fn criterion_05_triple_constants_match_weighted_tableau_sums() {
    check("criterion 5 (triple a contraction n=1..5, line-sum arrays n=1..4)", || {
        for n in 1..=5 {
            passes("thm2-kronecker", n);
        }
        for n in 1..=4 {
            passes("eq10-cube", n);
        }
    });
}

#[test]
fn criterion_06_signed_trivial_class_constants_match_domino_counts() {
    check("criterion 6 (c at the empty set vs squared domino counts, n=1..4)", || {
        for n in 1..=4 {
            passes("thm3-cdd", n);
        }
    });
}

#[test]
fn criterion_07_signed_product_series_reproduces_the_c_table() {
    check("criterion 7 (signed product-alphabet expansion recovers c, n=1..3)", || {
        for n in 1..=3 {
            passes("eq-fcff-chow", n);
        }
    });
}

#[test]
fn criterion_08_domino_function_identities_hold() {
    check("criterion 8 (domino function and wreath character identities, n=1..3)", || {
        for id in [
            "prop5-domino-qsym",
            "prop6-domino-schur",
            "lemma4-standardization",
            "eq-ggg-cauchy",
            "psum-wreath",
            "eq-gggg-kronecker",
        ] {
            for n in 1..=3 {
                passes(id, n);
            }
        }
        for n in 1..=3 {
            let by_classes = KroneckerB::new(n);
            let by_group = KroneckerB::from_group_sum(n);
            for a in by_classes.shapes() {
                for b in by_classes.shapes() {
                    for c in by_classes.shapes() {
                        assert_eq!(
                            by_classes.g(a, b, c),
                            by_group.g(a, b, c),
                            "n={n} {a} {b} {c}"
                        );
                    }
                }
            }
        }
    });
}

#[test]
fn criterion_09_signed_triple_constants_match_weighted_domino_sums() {
    check("criterion 9 (triple c contraction with both coefficient routes, n=1..3)", || {
        for n in 1..=3 {
            passes("thm4-typeB-kronecker", n);
            // The identity runner contracts the class-sum coefficients; the
            // group-sum route must produce the identical coefficient table,
            // hence the identical contraction.
            let by_classes = KroneckerB::new(n);
            let by_group = KroneckerB::from_group_sum(n);
            for a in by_classes.shapes() {
                for b in by_classes.shapes() {
                    for c in by_classes.shapes() {
                        assert_eq!(by_classes.g(a, b, c), by_group.g(a, b, c));
                    }
                }
            }
        }
    });
}

#[test]
fn criterion_10_structural_suites_hold() {
    check("criterion 10 (constancy, orthogonality, counting suites)", || {
        // Product multiplicities are constant on descent classes; the table
        // constructors assert this internally.
        for n in 1..=6 {
            let _ = DescentTableA::new(n);
        }
        for n in 1..=4 {
            let _ = DescentTableB::new(n);
        }

        for n in 1..=6usize {
            let t = CharTableA::new(n);
            for a in t.shapes() {
                for b in t.shapes() {
                    let dot: i64 = t
                        .shapes()
                        .iter()
                        .map(|c| class_size(c) * t.chi(a, c) * t.chi(b, c))
                        .sum();
                    let expect = if a == b { factorial(n) } else { 0 };
                    assert_eq!(dot, expect, "row orthogonality n={n} {a} {b}");
                }
            }
        }
        for n in 1..=4usize {
            let t = CharTableB::new(n);
            for a in t.shapes() {
                for b in t.shapes() {
                    let dot: i64 = t
                        .classes()
                        .iter()
                        .map(|c| class_size_b(c) * t.psi(a, c) * t.psi(b, c))
                        .sum();
                    let expect = if a == b { (1 << n) * factorial(n) } else { 0 };
                    assert_eq!(dot, expect, "row orthogonality n={n} {a} {b}");
                }
            }
        }

        for n in 1..=7usize {
            let total: i64 = partitions(n)
                .iter()
                .map(|shape| {
                    let f = standard_tableaux(shape).len() as i64;
                    f * f
                })
                .sum();
            assert_eq!(total, factorial(n), "squared tableau counts n={n}");
        }
        for n in 1..=4usize {
            let total: i64 = domino_shapes(n)
                .iter()
                .map(|shape| {
                    let f = standard_domino_tableaux(shape).len() as i64;
                    f * f
                })
                .sum();
            assert_eq!(
                total,
                (1 << n) * factorial(n),
                "squared domino tableau counts n={n}"
            );
        }

        for n in 0..=8usize {
            let convolution: usize = (0..=n)
                .map(|k| partitions(k).len() * partitions(n - k).len())
                .sum();
            assert_eq!(
                domino_shapes(n).len(),
                convolution,
                "tileable shape count n={n}"
            );
        }

        for n in 1..=12usize {
            assert_eq!(compositions(n).len(), 1 << (n - 1), "compositions n={n}");
        }
    });
}
