use crossings::atlas::{bundled_atlas, parse_key};
use crossings::kb::{
    bundled_manifest_text, bundled_results_db, compare_formulas, eval_formula, generator_extras,
    infer_bounds, load_results_db, reproduce_paper_theorems, small_cycle_entries, BasisFormula,
    DbError, FormulaOrder, Partner, Verdict,
};

fn formula(c1: i64, cn: i64, cfl: i64, cflm1: i64, cprod: i64, min_n: u64) -> BasisFormula {
    BasisFormula { c1, cn, cfl, cflm1, cprod, min_n }
}

/// Direct floor-basis evaluation, independent of the branch expansion.
fn floor_oracle(f: &BasisFormula, n: u64) -> i64 {
    let fl = |k: i64| k.div_euclid(2);
    let n = n as i64;
    f.c1 + f.cn * n + f.cfl * fl(n) + f.cflm1 * fl(n - 1) + f.cprod * fl(n) * fl(n - 1)
}

#[test]
fn eval_matches_documented_values() {
    // 2 fl(n) fl(n-1) + fl(n) at n = 4.
    let f = formula(0, 0, 1, 0, 2, 3);
    assert_eq!(eval_formula(&f.poly(), 4).unwrap(), 6);
    // 5 fl(n) fl(n-1) + 2 fl(n) at n = 3.
    let g = formula(0, 0, 2, 0, 5, 1);
    assert_eq!(eval_formula(&g.poly(), 3).unwrap(), 7);
    // Constant zero.
    let z = formula(0, 0, 0, 0, 0, 1);
    assert_eq!(eval_formula(&z.poly(), 17).unwrap(), 0);
    // Below range is an error.
    assert!(eval_formula(&f.poly(), 2).is_err());
}

#[test]
fn eval_agrees_with_floor_oracle_on_every_db_formula() {
    for row in bundled_results_db() {
        let poly = row.formula.poly();
        for n in row.formula.min_n..=100 {
            let expected = floor_oracle(&row.formula, n);
            assert!(expected >= 0, "{} {}", row.graph, n);
            assert_eq!(
                eval_formula(&poly, n).unwrap(),
                expected as u64,
                "{} {} at n = {n}",
                row.graph,
                row.partner.as_str()
            );
        }
    }
}

#[test]
fn compare_formulas_documented_cases() {
    let four_n = formula(0, 4, 0, 0, 0, 3);
    assert_eq!(
        compare_formulas(&four_n.poly(), &four_n.poly(), 3),
        FormulaOrder::Equal
    );
    // 2n vs 3n - 1 from n0 = 1: equal at n = 1, strictly below after.
    let two_n = formula(0, 2, 0, 0, 0, 1);
    let three_n_m1 = formula(-1, 3, 0, 0, 0, 1);
    assert_eq!(
        compare_formulas(&two_n.poly(), &three_n_m1.poly(), 1),
        FormulaOrder::Less
    );
    // 6 fl(n) fl(n-1) + 4 fl(n) vs 6 fl(n) fl(n-1) + 4n.
    let f = formula(0, 0, 4, 0, 6, 1);
    let g = formula(0, 4, 0, 0, 6, 1);
    assert_eq!(compare_formulas(&f.poly(), &g.poly(), 1), FormulaOrder::Less);
    // Crossing quadratics are incomparable.
    let h = formula(10, 0, 0, 0, 0, 1);
    let k = formula(0, 2, 0, 0, 0, 1);
    assert_eq!(compare_formulas(&h.poly(), &k.poly(), 1), FormulaOrder::Incomparable);
}

#[test]
fn compare_is_reflexive_on_every_db_formula() {
    for row in bundled_results_db() {
        let p = row.formula.poly();
        assert_eq!(
            compare_formulas(&p, &p, row.formula.min_n),
            FormulaOrder::Equal,
            "{}",
            row.graph
        );
    }
}

#[test]
fn bundled_db_loads_and_matches_manifest() {
    let db = bundled_results_db();
    assert_eq!(db.len(), 135);
    assert_eq!(db.iter().filter(|r| r.new).count(), 16);
    assert_eq!(db.iter().filter(|r| r.suspect).count(), 1);
    for row in db.iter() {
        assert!(parse_key(&row.graph).is_some(), "bad key {}", row.graph);
    }
}

#[test]
fn db_validation_rejects_count_mismatch() {
    let source = r#"[{"graph":"6.40","partner":"cycle","kind":"exact",
        "formula":{"c1":0,"cn":4,"cfl":0,"cflm1":0,"cprod":0,"min_n":6},
        "exceptions":[],"citation":"x","new":false,"table":"table1","suspect":false}]"#;
    let manifest = r#"{"row_counts":{"table1":2},"total":2}"#;
    assert!(matches!(
        load_results_db(source, manifest),
        Err(DbError::CountMismatch { .. })
    ));
}

#[test]
fn db_validation_rejects_exception_outside_range() {
    let source = r#"[{"graph":"6.40","partner":"cycle","kind":"exact",
        "formula":{"c1":0,"cn":4,"cfl":0,"cflm1":0,"cprod":0,"min_n":6},
        "exceptions":[[7,3]],"citation":"x","new":false,"table":"table1","suspect":false}]"#;
    let manifest = r#"{"row_counts":{"table1":1},"total":1}"#;
    assert!(matches!(load_results_db(source, manifest), Err(DbError::BadRow { .. })));
}

#[test]
fn sandwich_family_is_inferred_from_prior_rows_alone() {
    let atlas = bundled_atlas();
    let db = bundled_results_db();
    let prior: Vec<_> = db.iter().filter(|r| !r.new).cloned().collect();
    let g = atlas.get(&(6, 59)).unwrap();
    let report = infer_bounds(g, Partner::Cycle, &prior, atlas, &[]);
    assert_eq!(report.verdict, Verdict::Exact { from_n: 6 });
    let lower = report.lower.unwrap();
    assert_eq!(lower.formula, formula(0, 4, 0, 0, 0, 6));
    assert!(lower.provenance.contains("6.40"), "{}", lower.provenance);
    let upper = report.upper.unwrap();
    assert!(upper.provenance.contains("6.113"), "{}", upper.provenance);
}

#[test]
fn generator_upper_bound_completes_a_cycle_family() {
    let atlas = bundled_atlas();
    let db = bundled_results_db();
    let prior: Vec<_> = db.iter().filter(|r| !r.new).cloned().collect();
    let g = atlas.get(&(6, 63)).unwrap();
    let extras = generator_extras(g, Partner::Cycle, atlas);
    assert!(!extras.is_empty());
    let report = infer_bounds(g, Partner::Cycle, &prior, atlas, &extras);
    assert_eq!(report.verdict, Verdict::Exact { from_n: 4 });
    // The best prior lower bound is 2n valid from n = 4 (several rows tie on
    // the formula; the first in database order is kept).
    let lower = report.lower.unwrap();
    assert_eq!(lower.formula, formula(0, 2, 0, 0, 0, 4));
}

#[test]
fn full_db_bounds_are_globally_consistent() {
    let atlas = bundled_atlas();
    let db = bundled_results_db();
    for (key, g) in atlas.iter() {
        for partner in [Partner::Path, Partner::Cycle, Partner::Star] {
            let report = infer_bounds(g, partner, db, atlas, &[]);
            if let (Some(lo), Some(hi)) = (&report.lower, &report.upper) {
                let n0 = lo.formula.min_n.max(hi.formula.min_n);
                let order = compare_formulas(&lo.formula.poly(), &hi.formula.poly(), n0);
                assert!(
                    matches!(order, FormulaOrder::Equal | FormulaOrder::Less),
                    "{}.{} {}: lower {} vs upper {} is {:?}",
                    key.0,
                    key.1,
                    partner.as_str(),
                    lo.formula,
                    hi.formula,
                    order
                );
            }
        }
    }
}

#[test]
fn all_sixteen_new_rows_are_reproduced() {
    let atlas = bundled_atlas();
    let db = bundled_results_db();
    let checks = reproduce_paper_theorems(db, atlas);
    assert_eq!(checks.len(), 16);
    for check in &checks {
        assert!(
            check.passed,
            "{} {} expected {} (n >= {}), got:\n{}",
            check.graph,
            check.partner.as_str(),
            check.expected,
            check.expected.min_n,
            check.report
        );
    }
}

#[test]
fn small_cycle_table_has_the_published_values() {
    let db = bundled_results_db();
    let entries = small_cycle_entries(db);
    assert_eq!(entries.len(), 36);
    let value = |index: u32, n: u64| {
        entries
            .iter()
            .find(|e| e.atlas_index == index && e.n == n)
            .map(|e| e.value)
            .unwrap()
    };
    // n = 3 column, all twelve graphs.
    let n3: Vec<u64> = [59, 60, 63, 64, 66, 70, 75, 77, 83, 90, 92, 98]
        .iter()
        .map(|&i| value(i, 3))
        .collect();
    assert_eq!(n3, vec![8, 8, 6, 6, 7, 7, 6, 6, 10, 11, 9, 9]);
    // Published n = 4 and n = 5 spot values.
    assert_eq!(value(59, 4), 16);
    assert_eq!(value(64, 4), 8);
    assert_eq!(value(66, 4), 12);
    assert_eq!(value(90, 5), 20);
    // Values the formulas settle beyond the published grid.
    assert_eq!(value(63, 5), 10);
    assert_eq!(value(66, 5), 15);
    assert_eq!(value(92, 5), 15);
}

#[test]
fn formula_display_is_readable() {
    assert_eq!(formula(0, 4, 0, 0, 0, 3).to_string(), "4n");
    assert_eq!(formula(-1, 3, 0, 0, 0, 1).to_string(), "3n - 1");
    assert_eq!(formula(0, 0, 2, 0, 5, 1).to_string(), "5fl(n)fl(n-1) + 2fl(n)");
    assert_eq!(formula(0, 0, 0, 0, 0, 1).to_string(), "0");
    // Manifest text is exposed for the CLI.
    assert!(bundled_manifest_text().contains("row_counts"));
}
