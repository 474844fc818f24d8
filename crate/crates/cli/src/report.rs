use std::collections::BTreeMap;

use serde::Serialize;

/// One verified proposition: a name, the verdict, and enough detail to
/// re-derive the claim by hand.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub details: String,
    pub witnesses: Vec<String>,
}

pub fn check(name: impl Into<String>, pass: bool, details: impl Into<String>) -> Check {
    Check {
        name: name.into(),
        pass,
        details: details.into(),
        witnesses: Vec::new(),
    }
}

pub fn check_w(
    name: impl Into<String>,
    pass: bool,
    details: impl Into<String>,
    witnesses: Vec<String>,
) -> Check {
    Check {
        name: name.into(),
        pass,
        details: details.into(),
        witnesses,
    }
}

/// Report for one command invocation.  Checks are kept in canonical order
/// (sorted by name) so identical runs serialize to identical bytes; no
/// wall-clock data is included for the same reason.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: String,
    pub config: BTreeMap<String, String>,
    pub checks: Vec<Check>,
    pub pass: bool,
}

impl RunReport {
    pub fn new(command: impl Into<String>, config: BTreeMap<String, String>, mut checks: Vec<Check>) -> RunReport {
        checks.sort_by(|a, b| a.name.cmp(&b.name));
        let pass = checks.iter().all(|c| c.pass);
        RunReport {
            command: command.into(),
            config,
            checks,
            pass,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn checks_are_sorted_and_aggregated() {
        let r = RunReport::new(
            "demo",
            BTreeMap::new(),
            vec![check("b/second", true, ""), check("a/first", true, "")],
        );
        assert_eq!(r.checks[0].name, "a/first");
        assert!(r.pass);
        let r = RunReport::new("demo", BTreeMap::new(), vec![check("x", false, "")]);
        assert!(!r.pass);
    }

    #[test]
    fn json_is_stable() {
        let r = RunReport::new("demo", BTreeMap::new(), vec![check_w("x", true, "d", vec!["w".into()])]);
        assert_eq!(r.to_json(), r.to_json());
        assert!(r.to_json().ends_with('\n'));
    }
}
