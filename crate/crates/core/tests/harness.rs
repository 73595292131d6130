use hecke_workbench::harness::{cache, export, verify_all};
use hecke_workbench::{AffineWeylGroup, Cocharacter, Suite, SuiteConfig, PRESETS};

fn reports_json(g: &AffineWeylGroup, config: &SuiteConfig) -> String {
    let reports: Vec<_> =
        verify_all(g, config).unwrap().iter().map(|r| r.without_timing()).collect();
    serde_json::to_string(&reports).unwrap()
}

#[test]
fn reports_are_deterministic() {
    let config = SuiteConfig::with_bound(4);
    for label in ["SL2", "GL2", "Sp4"] {
        let g = AffineWeylGroup::preset(label).unwrap();
        assert_eq!(reports_json(&g, &config), reports_json(&g, &config));
    }
}

#[test]
fn cache_is_transparent() {
    let dir = tempfile::tempdir().unwrap();
    let config = SuiteConfig::with_bound(4);
    for label in PRESETS {
        let mut plain = AffineWeylGroup::preset(label).unwrap();
        plain.disable_memo();
        let uncached = reports_json(&plain, &config);

        let warm = AffineWeylGroup::preset(label).unwrap();
        assert_eq!(cache::load(&warm, dir.path()).unwrap(), 0);
        assert_eq!(reports_json(&warm, &config), uncached, "{label} cold");
        let path = cache::save(&warm, dir.path()).unwrap();
        assert!(path.exists());

        let reloaded = AffineWeylGroup::preset(label).unwrap();
        assert!(cache::load(&reloaded, dir.path()).unwrap() > 0);
        assert_eq!(reports_json(&reloaded, &config), uncached, "{label} warm");
    }
}

#[test]
fn cache_ignores_other_versions_and_rejects_garbage() {
    let dir = tempfile::tempdir().unwrap();
    let g = AffineWeylGroup::preset("SL2").unwrap();
    g.admissible_set(&Cocharacter::new([2])).unwrap();
    let path = cache::save(&g, dir.path()).unwrap();
    let text = std::fs::read_to_string(&path).unwrap();
    let mut v: serde_json::Value = serde_json::from_str(&text).unwrap();
    v["version"] = serde_json::json!(cache::CACHE_VERSION + 1);
    std::fs::write(&path, v.to_string()).unwrap();
    let fresh = AffineWeylGroup::preset("SL2").unwrap();
    assert_eq!(cache::load(&fresh, dir.path()).unwrap(), 0);

    std::fs::write(&path, "not json").unwrap();
    assert!(cache::load(&fresh, dir.path()).is_err());
}

#[test]
fn prime_list_validation() {
    let g = AffineWeylGroup::preset("SL2").unwrap();
    let config = SuiteConfig { bound: Some(2), primes: vec![4], allow_p2: false };
    assert!(Suite::Central.run(&g, &config).is_err());
    let config = SuiteConfig { bound: Some(2), primes: vec![2], allow_p2: true };
    let r = Suite::Central.run(&g, &config).unwrap();
    assert_eq!(r.parameters.primes, vec![2]);
    assert_eq!(r.cases_total, 2);
}

#[test]
fn report_json_fields() {
    let g = AffineWeylGroup::preset("SL2").unwrap();
    let r = Suite::Monoidal.run(&g, &SuiteConfig::with_bound(4)).unwrap();
    let v = serde_json::to_value(&r).unwrap();
    for key in ["suite", "group", "parameters", "passed", "cases_total", "cases_failed", "cases", "duration_ms"] {
        assert!(v.get(key).is_some(), "{key}");
    }
    assert_eq!(v["suite"], "monoidal");
    assert_eq!(v["cases"][0]["case"], "mu=[0] nu=[0] p=3");
    assert!(v["cases"][0].get("counterexample").is_none());
}

#[test]
fn exports() {
    let g = AffineWeylGroup::preset("GL2").unwrap();
    let t = export::adm_sizes(&g, 2).unwrap();
    let csv = t.to_csv().unwrap();
    assert!(csv.starts_with("mu,height,size\n"));
    assert!(csv.contains("\"[1,0]\",1,3\n"));
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("strata.json");
    export::strata(&g, &Cocharacter::new([1, 0])).unwrap().write(export::Format::Json, &path).unwrap();
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["columns"], serde_json::json!(["element", "length"]));
    assert_eq!(v["rows"][0], serde_json::json!(["pi^1", 0]));
}
