use turan_core::harness::{
    check_alon_frankl, check_prop_3_2, check_theorem_1_2, inspect_structure, CheckReport, RunManifest, Status,
};
use turan_core::oracle::{ex_search, ForbiddenSpec, SearchConfig};
use turan_core::Graph;

#[test]
fn triangle_is_not_applicable_to_the_hub_theorem() {
    // D(K_3) holds K_1, so the precondition cannot hold
    let rep = check_theorem_1_2(&Graph::complete(3), 3, 2, &[6], &SearchConfig::default());
    match rep {
        Ok(rep) => assert_eq!(rep.status, Status::ReportOnly),
        Err(e) => panic!("{e}"),
    }
}

#[test]
fn reports_are_deterministic() {
    let cfg = SearchConfig::default();
    let a = check_alon_frankl(2, 2, &[5, 6], &cfg).unwrap();
    let b = check_alon_frankl(2, 2, &[5, 6], &SearchConfig { workers: 1, ..cfg }).unwrap();
    assert_eq!(a.comparable_json(), b.comparable_json());
    assert_eq!(a.status, Status::Agree);
    assert_eq!(CheckReport::from_json(&a.to_json()).unwrap(), a);
    let manifest = RunManifest { reports: vec![a, b] };
    assert_eq!(manifest.to_csv().lines().count(), 5);
}

#[test]
fn inspection_of_book_graphs() {
    let sp = ForbiddenSpec::with_matching(vec![Graph::complete(4)], 2).unwrap();
    let rec = ex_search(7, 3, &sp).unwrap();
    let rep = inspect_structure(&rec, 2, Some(3)).unwrap();
    assert_eq!(rep.status, Status::ReportOnly);
    assert!(rep.rows.iter().any(|r| r.n == "0:cover" && r.observed.starts_with("B = ")));
    let rep = check_prop_3_2(&[Graph::complete(3)], 3, &[6], &SearchConfig::default()).unwrap();
    assert_eq!(rep.status, Status::ReportOnly);
}
