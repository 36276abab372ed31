use skewbrace::suite::{criteria, SuiteConfig};

#[test]
fn acceptance_criteria() {
    let cfg = SuiteConfig::default();
    let mut failed = Vec::new();
    for c in criteria() {
        let (v, elapsed) = c.evaluate(&cfg);
        let status = if v.pass { "PASS" } else { "FAIL" };
        println!(
            "{status} criterion {}: {} ({} checked, {} ms, limit {} s){}",
            c.id,
            c.name,
            v.checked,
            elapsed.as_millis(),
            c.limit.as_secs(),
            v.witness.as_deref().map(|w| format!(": {w}")).unwrap_or_default()
        );
        if !v.pass {
            failed.push(c.id);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
