use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;

/// What a verification run was about.
#[derive(Clone, Debug, Default, Serialize)]
pub struct Target {
    pub theorem: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dims: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub q: Vec<u32>,
    /// Classes the checks evaluate, keyed by their name.
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub classes: BTreeMap<String, String>,
    /// Other run parameters.
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub params: BTreeMap<String, String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub description: String,
    pub expected: String,
    pub observed: String,
    pub pass: bool,
    pub ms: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub target: Target,
    pub checks: Vec<Check>,
    pub pass: bool,
}

/// Collects checks, timing each one unless timing is disabled.
pub struct ReportBuilder {
    target: Target,
    checks: Vec<Check>,
    timing: bool,
}

impl ReportBuilder {
    pub fn new(target: Target, timing: bool) -> Self {
        Self { target, checks: Vec::new(), timing }
    }

    /// Runs `f`, which returns `(expected, observed)`; the check passes when
    /// they are equal.
    pub fn check<E>(
        &mut self,
        description: impl Into<String>,
        f: impl FnOnce() -> Result<(String, String), E>,
    ) -> Result<(), E> {
        self.check_with(description, || {
            f().map(|(e, o)| {
                let pass = e == o;
                (e, o, pass)
            })
        })
    }

    /// Like [`check`](Self::check) with an explicit verdict.
    pub fn check_with<E>(
        &mut self,
        description: impl Into<String>,
        f: impl FnOnce() -> Result<(String, String, bool), E>,
    ) -> Result<(), E> {
        let start = Instant::now();
        let (expected, observed, pass) = f()?;
        let ms = if self.timing { start.elapsed().as_millis() as u64 } else { 0 };
        self.checks.push(Check { description: description.into(), expected, observed, pass, ms });
        Ok(())
    }

    pub fn finish(self) -> VerifyReport {
        let pass = self.checks.iter().all(|c| c.pass);
        VerifyReport { target: self.target, checks: self.checks, pass }
    }
}

impl VerifyReport {
    pub fn render(&self, timing: bool) -> String {
        let mut out = String::new();
        let t = &self.target;
        let _ = write!(out, "verify {}", t.theorem);
        if let Some(n) = t.n {
            let _ = write!(out, " n={n}");
        }
        if let Some(d) = &t.dims {
            let dims: Vec<String> = d.iter().map(u32::to_string).collect();
            let _ = write!(out, " dims=({})", dims.join(","));
        }
        if !t.q.is_empty() {
            let q: Vec<String> = t.q.iter().map(u32::to_string).collect();
            let _ = write!(out, " q={}", q.join(","));
        }
        for (k, v) in &t.params {
            let _ = write!(out, " {k}={v}");
        }
        out.push('\n');
        for (name, class) in &t.classes {
            let _ = writeln!(out, "{name} = {class}");
        }
        for c in &self.checks {
            let tag = if c.pass { "PASS" } else { "FAIL" };
            let _ = write!(out, "[{tag}] {}: expected {}, observed {}", c.description, c.expected, c.observed);
            if timing {
                let _ = write!(out, " ({} ms)", c.ms);
            }
            out.push('\n');
        }
        let _ = writeln!(out, "{}", if self.pass { "PASS" } else { "FAIL" });
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report(results: &[(&str, &str)], timing: bool) -> VerifyReport {
        let mut b = ReportBuilder::new(Target { theorem: "t".into(), ..Target::default() }, timing);
        for (i, (e, o)) in results.iter().enumerate() {
            b.check(format!("check {i}"), || Ok::<_, ()>((e.to_string(), o.to_string()))).unwrap();
        }
        b.finish()
    }

    #[test]
    fn passes_only_if_every_check_passes() {
        assert!(report(&[("1", "1"), ("2", "2")], false).pass);
        assert!(!report(&[("1", "1"), ("2", "3")], false).pass);
        assert!(report(&[], false).pass);
    }

    #[test]
    fn text_rendering() {
        let r = report(&[("88", "88")], false);
        assert_eq!(r.render(false), "verify t\n[PASS] check 0: expected 88, observed 88\nPASS\n");
        assert_eq!(r.checks[0].ms, 0);
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["target"], serde_json::json!({ "theorem": "t" }));
    }
}
