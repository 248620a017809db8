mod common;

use std::collections::BTreeSet;

use alphaspec::census::{check_family_mate_free, CensusOutput, Strategy};
use alphaspec::error::CensusError;
use alphaspec::graph::FamilySpec;
use alphaspec::{run_census, CensusOptions};
use common::catalogue_text;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn run(text: &str, opts: &CensusOptions) -> CensusOutput {
    run_census(text.as_bytes(), opts).unwrap()
}

fn summary(out: &CensusOutput) -> (String, Vec<Vec<String>>) {
    (out.report.tsv_row(), out.families.iter().map(|f| f.members.clone()).collect())
}

#[test]
fn order_threads_and_strategy_do_not_matter() {
    let text = catalogue_text(7);
    let base = run(&text, &CensusOptions::default());
    assert_eq!(base.report.tsv_row(), "7\t1044\t1044\t0\t0.000000000\t1");

    let mut lines: Vec<&str> = text.lines().collect();
    lines.shuffle(&mut ChaCha8Rng::seed_from_u64(3));
    let shuffled = lines.join("\n");
    for opts in [
        CensusOptions { threads: 1, ..Default::default() },
        CensusOptions { threads: 3, ..Default::default() },
        CensusOptions { strategy: Strategy::SortMerge, run_records: 100, ..Default::default() },
        CensusOptions { strategy: Strategy::SortMerge, threads: 2, ..Default::default() },
    ] {
        assert_eq!(summary(&run(&text, &opts)), summary(&base), "{opts:?}");
        assert_eq!(summary(&run(&shuffled, &opts)), summary(&base), "{opts:?} shuffled");
    }
}

/// The 9-vertex cospectral pair among unrelated graphs.
#[test]
fn families_are_found_and_sorted() {
    let pair = ["HCpfdrk", "HCrRRfw"];
    let mut text = String::new();
    for g6 in ["HCrRRfw", "H??????", "HCpfdrk", "H~~~~~~"] {
        text.push_str(g6);
        text.push('\n');
    }
    let out = run(&text, &CensusOptions::default());
    assert_eq!(out.report.graphs, 4);
    assert_eq!(out.report.distinct_polys, 3);
    assert_eq!(out.report.with_mate, 2);
    assert_eq!(out.report.max_family, 2);
    assert_eq!(out.report.fraction_with_mate(), (1, 2));
    assert_eq!(out.families.len(), 1);
    assert_eq!(out.families[0].members, pair);

    let graphs: BTreeSet<_> = out.families[0].members.iter().collect();
    assert_eq!(graphs.len(), 2);
}

#[test]
fn report_invariants_hold() {
    for n in 1..=8 {
        let out = run(&catalogue_text(n), &CensusOptions::default());
        let r = &out.report;
        let in_families: u64 = out.families.iter().map(|f| f.members.len() as u64).sum();
        assert!(r.distinct_polys <= r.graphs);
        assert_eq!(r.with_mate, in_families);
        assert_eq!(r.graphs - r.with_mate + out.families.len() as u64, r.distinct_polys);
        assert_eq!(r.with_mate == 0, r.distinct_polys == r.graphs);
        assert_eq!(r.max_family >= 2, r.with_mate > 0);
    }
}

#[test]
fn mate_free_checks() {
    let out = run(&catalogue_text(7), &CensusOptions::default());
    let h = FamilySpec::DoubleStarlike { p: 2, n: 3, q: 2 };
    assert!(check_family_mate_free([&h], &out.families).unwrap().is_empty());
    let out = run(&catalogue_text(3), &CensusOptions::default());
    assert!(check_family_mate_free([&FamilySpec::Complete(3)], &out.families).unwrap().is_empty());
}

#[test]
fn rejects_bad_streams() {
    let opts = CensusOptions::default();
    assert!(matches!(run_census("".as_bytes(), &opts), Err(CensusError::EmptyInput)));
    let err = run_census("A_\nBw\n".as_bytes(), &opts).unwrap_err();
    assert!(matches!(err, CensusError::MixedOrder { line: 2, expected: 2, found: 3 }), "{err}");
    let err = run_census("A_\nA_\n".as_bytes(), &opts).unwrap_err();
    assert!(matches!(err, CensusError::IsomorphicDuplicates(..)), "{err}");
}
