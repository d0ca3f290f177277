use web_demo::{criteria_report, planner_path, planner_rule, power_table};

const MILNOR: &str = "field = R\nrank = 5\n";

#[test]
fn power_table_lists_powers() {
    let t = power_table(MILNOR, "qtilde", "T + S", 7).ok().unwrap();
    assert!(t.contains("(T + S)^6 = T^3*S^3\n"), "{t}");
    assert!(t.ends_with("(T + S)^7 = 0\n"), "{t}");
}

#[test]
fn antipodal_path_ends_at_the_antipode() {
    let p = planner_path(3, 16, true).ok().unwrap();
    assert_eq!(p.len(), 17 * 4);
    let norm: f64 = p[..4].iter().map(|x| x * x).sum();
    assert!((norm - 1.0).abs() < 1e-9);
    for i in 0..4 {
        assert!((p[i] + p[16 * 4 + i]).abs() < 1e-9);
    }
    assert_ne!(planner_rule(3, true), planner_rule(3, false));
}

#[test]
fn report_renders() {
    let r = criteria_report(MILNOR, true).ok().unwrap();
    assert!(r.contains("proj_pair.passes_at=7"), "{r}");
}
