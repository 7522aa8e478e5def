/// Outcome of an exhaustive or sampled verification: how many cases were
/// examined and which of them failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub name: String,
    pub cases: u64,
    pub failures: u64,
    /// Descriptions of the first few failures.
    pub violations: Vec<String>,
}

const KEPT_VIOLATIONS: usize = 16;

impl CheckReport {
    pub fn new(name: impl Into<String>) -> CheckReport {
        CheckReport {
            name: name.into(),
            cases: 0,
            failures: 0,
            violations: Vec::new(),
        }
    }

    /// Records one case; `describe` is only evaluated on failure.
    pub fn case(&mut self, ok: bool, describe: impl FnOnce() -> String) -> bool {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.violations.len() < KEPT_VIOLATIONS {
                self.violations.push(describe());
            }
        }
        ok
    }

    pub fn absorb(&mut self, other: CheckReport) {
        self.cases += other.cases;
        self.failures += other.failures;
        for v in other.violations {
            if self.violations.len() < KEPT_VIOLATIONS {
                self.violations.push(format!("{}: {v}", other.name));
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}
