//! Acceptance gate. Each criterion is its own test and prints exactly one
//! `criterion N: PASS|FAIL ...` line (run with `--nocapture` to see them
//! all). Every comparison is exact.

use std::collections::BTreeMap;

use hesslucas::hessenberg::{
    brute_det, brute_per, brute_per_counted, build_b, build_c, build_h, hess_det_counted, hess_per,
    hess_per_counted, Family, HessenbergMatrix,
};
use hesslucas::ring::{parse_poly, GaussianInt, LaurentPoly};
use hesslucas::sequences::{gen_g, symbolic_coeffs};
use hesslucas::verify::{
    check_duality, check_machenry, check_oracle, check_remark, RemarkIdentity,
};
use num_bigint::BigInt;

fn report(id: u32, failures: &[String]) {
    if failures.is_empty() {
        println!("criterion {id}: PASS");
    } else {
        println!(
            "criterion {id}: FAIL ({} failing cells; first: {})",
            failures.len(),
            failures[0]
        );
    }
    assert!(failures.is_empty(), "criterion {id} failed: {failures:#?}");
}

fn poly(s: &str) -> LaurentPoly {
    parse_poly(s).unwrap()
}

#[test]
fn criterion_01_golden_c() {
    let expected = poly(
        "6*t1*t5 + 6*t2*t4 + 12*t1*t2*t3 + 2*t2^3 + 3*t3^2 + t1^6 + 6*t1^2*t4 + 6*t1^3*t3 + 6*t1^4*t2 + 9*t1^2*t2^2",
    );
    let actual = Family::C.evaluate(&build_c(5, 6).unwrap());
    let mut failures = Vec::new();
    if actual != expected {
        failures.push(format!("det C(5,6) = {actual}"));
    }
    report(1, &failures);
}

#[test]
fn criterion_02_golden_b() {
    let expected = poly("t1^5 + 5*t1^3*t2 + 5*t1^2*t3 + 5*t1*t2^2 + 5*t1*t4 + 5*t2*t3");
    let actual = Family::B.evaluate(&build_b(4, 5).unwrap());
    let mut failures = Vec::new();
    if actual != expected {
        failures.push(format!("det B(4,5) = {actual}"));
    }
    report(2, &failures);
}

#[test]
fn criterion_03_golden_h() {
    let expected = poly("3*t3 + 3*t1*t2 + t1^3");
    let actual = hess_per(&build_h(4, 3).unwrap());
    let mut failures = Vec::new();
    if actual != expected {
        failures.push(format!("per H(4,3) = {actual}"));
    }
    report(3, &failures);
}

#[test]
fn criterion_04_theorem_grid() {
    let mut failures = Vec::new();
    for k in 2..=5 {
        let t = symbolic_coeffs(k);
        for n in 0..=12usize {
            let g = gen_g(&t, n as i64).unwrap();
            for family in Family::ALL {
                let v = family.evaluate(&family.build(k, n).unwrap());
                if v != g {
                    failures.push(format!("k={k} n={n} {family}: expected {g}, got {v}"));
                }
            }
        }
    }
    report(4, &failures);
}

fn specialize(family: Family, k: usize, n: usize, point: &[i64]) -> GaussianInt {
    let at: BTreeMap<u32, GaussianInt> = point
        .iter()
        .enumerate()
        .map(|(j, &v)| (j as u32 + 1, GaussianInt::from(v)))
        .collect();
    let m: HessenbergMatrix<GaussianInt> = family
        .build(k, n)
        .unwrap()
        .try_map(|e| e.substitute(&at))
        .unwrap();
    if family.uses_permanent() {
        hess_per(&m)
    } else {
        hesslucas::hess_det(&m)
    }
}

#[test]
fn criterion_05_corollary_specializations() {
    let lucas = [2, 1, 3, 4, 7, 11, 18, 29, 47, 76];
    let perrin = [3, 0, 2, 3, 2, 5, 5, 7, 10, 12];
    let mut failures = Vec::new();
    for family in Family::ALL {
        for (n, &want) in lucas.iter().enumerate() {
            let got = specialize(family, 2, n, &[1, 1]);
            if got != GaussianInt::from(want) {
                failures.push(format!("Lucas {family} n={n}: expected {want}, got {got}"));
            }
        }
        for (n, &want) in perrin.iter().enumerate() {
            let got = specialize(family, 3, n, &[0, 1, 1]);
            if got != GaussianInt::from(want) {
                failures.push(format!("Perrin {family} n={n}: expected {want}, got {got}"));
            }
        }
    }
    report(5, &failures);
}

#[test]
fn criterion_06_duality() {
    let r = check_duality(200, 7, 42).unwrap();
    let failures: Vec<String> = r
        .counterexample
        .iter()
        .map(|c| {
            format!(
                "trial {:?}: expected {}, got {}",
                c.cell.trial, c.expected, c.actual
            )
        })
        .collect();
    assert_eq!(r.cells.len(), 200);
    report(6, &failures);
}

#[test]
fn criterion_07_oracle_equivalence() {
    let r = check_oracle(&[2, 3, 4, 5], 6, 100, 7).unwrap();
    let failures: Vec<String> = r
        .counterexample
        .iter()
        .map(|c| format!("{:?}: expected {}, got {}", c.cell, c.expected, c.actual))
        .collect();
    report(7, &failures);
}

#[test]
fn criterion_08_remark_identities() {
    let mut failures = Vec::new();
    for id in RemarkIdentity::ALL {
        let ks: Vec<usize> = (2..=4).filter(|&k| id.applies_to(k)).collect();
        assert!(!ks.is_empty());
        for k in ks {
            let r = check_remark(id, k, 10).unwrap();
            if let Some(c) = r.counterexample {
                failures.push(format!(
                    "{} k={k} n={}: expected {}, got {}",
                    id.id(),
                    c.cell.n,
                    c.expected,
                    c.actual
                ));
            }
        }
    }
    report(8, &failures);
}

#[test]
fn criterion_09_machenry() {
    let mut failures = Vec::new();
    for k in 2..=5 {
        let r = check_machenry(k, 12).unwrap();
        assert_eq!(r.cells.len(), 13 - k);
        if let Some(c) = r.counterexample {
            failures.push(format!(
                "k={k} n={}: {} vs {}",
                c.cell.n, c.expected, c.actual
            ));
        }
    }
    report(9, &failures);
}

#[test]
fn criterion_10_reality_gate() {
    let mut failures = Vec::new();
    for k in 2..=5 {
        for n in 0..=12 {
            for family in Family::ALL {
                let v = family.evaluate(&family.build(k, n).unwrap());
                if !v.is_plain_polynomial() {
                    failures.push(format!("k={k} n={n} {family}: {v}"));
                }
            }
        }
    }
    report(10, &failures);
}

#[test]
fn criterion_11_operation_counts() {
    const C: usize = 3;
    let mut failures = Vec::new();
    // symbolic up to n = 12, then entries specialized at t = (1, ..., 1)
    // for longer matrices; the count bound is the same in either ring
    let ones_at = |k: usize| -> BTreeMap<u32, GaussianInt> {
        (1..=k as u32).map(|j| (j, GaussianInt::from(1))).collect()
    };
    for k in 2..=5 {
        for n in 1..=60 {
            for family in Family::ALL {
                let m = family.build(k, n).unwrap();
                let (det_ops, per_ops) = if n <= 12 {
                    (hess_det_counted(&m).1, hess_per_counted(&m).1)
                } else {
                    let g = m.try_map(|e| e.substitute(&ones_at(k))).unwrap();
                    (hess_det_counted(&g).1, hess_per_counted(&g).1)
                };
                let bound = (C * n * (k + 1)) as u64;
                for (what, ops) in [("det", det_ops), ("per", per_ops)] {
                    if ops.multiplications > bound {
                        failures.push(format!(
                            "{what} {family} k={k} n={n}: {} > {bound}",
                            ops.multiplications
                        ));
                    }
                }
            }
        }
    }
    let ones = vec![vec![BigInt::from(1); 8]; 8];
    let (value, products) = brute_per_counted(&ones).unwrap();
    if products != 40320 || value != BigInt::from(40320) {
        failures.push(format!(
            "brute_per at n=8: {products} products, value {value}"
        ));
    }
    // brute force agrees on the same family matrix that the count bound covers
    let m = build_h(3, 6).unwrap();
    if brute_per(&m.to_dense()).unwrap() != hess_per(&m)
        || brute_det(&m.to_dense()).unwrap() != hesslucas::hess_det(&m)
    {
        failures.push("brute/structured disagreement on H(3,6)".into());
    }
    report(11, &failures);
}
