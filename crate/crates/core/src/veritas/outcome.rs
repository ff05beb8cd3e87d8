use serde::Serialize;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    Degenerate,
    NotApplicable,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Degenerate => "degenerate",
            Verdict::NotApplicable => "not-applicable",
        })
    }
}

/// Whether a failure counts against the run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Tier {
    Guaranteed,
    Explore,
}

impl std::fmt::Display for Tier {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Tier::Guaranteed => "guaranteed",
            Tier::Explore => "explore",
        })
    }
}

/// Both sides of the first failing instance of a claim.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Mismatch {
    pub lhs: Value,
    pub rhs: Value,
    pub detail: String,
}

impl Mismatch {
    pub fn new(lhs: impl Serialize, rhs: impl Serialize, detail: impl Into<String>) -> Self {
        Mismatch {
            lhs: to_value(lhs),
            rhs: to_value(rhs),
            detail: detail.into(),
        }
    }
}

/// Result of evaluating one claim on one subject.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub verdict: Verdict,
    pub expected: Value,
    pub computed: Value,
    pub mismatch: Option<Mismatch>,
}

fn to_value(v: impl Serialize) -> Value {
    serde_json::to_value(v).expect("claim values serialize")
}

impl Outcome {
    /// Pass when both sides serialize identically.
    pub fn compare(expected: impl Serialize, computed: impl Serialize, detail: impl Into<String>) -> Self {
        let (expected, computed) = (to_value(expected), to_value(computed));
        if expected == computed {
            Outcome {
                verdict: Verdict::Pass,
                expected,
                computed,
                mismatch: None,
            }
        } else {
            Outcome {
                verdict: Verdict::Fail,
                mismatch: Some(Mismatch {
                    lhs: expected.clone(),
                    rhs: computed.clone(),
                    detail: detail.into(),
                }),
                expected,
                computed,
            }
        }
    }

    /// Pass when `holds`, reporting both sides either way.
    pub fn check(holds: bool, lhs: impl Serialize, rhs: impl Serialize, detail: impl Into<String>) -> Self {
        let (lhs, rhs) = (to_value(lhs), to_value(rhs));
        Outcome {
            verdict: if holds { Verdict::Pass } else { Verdict::Fail },
            mismatch: (!holds).then(|| Mismatch {
                lhs: lhs.clone(),
                rhs: rhs.clone(),
                detail: detail.into(),
            }),
            expected: lhs,
            computed: rhs,
        }
    }

    pub fn degenerate(reason: &str) -> Self {
        Outcome {
            verdict: Verdict::Degenerate,
            expected: Value::Null,
            computed: json!(reason),
            mismatch: None,
        }
    }

    pub fn not_applicable(reason: &str) -> Self {
        Outcome {
            verdict: Verdict::NotApplicable,
            expected: Value::Null,
            computed: json!(reason),
            mismatch: None,
        }
    }

    /// An existence claim: pass carrying the example, or not applicable
    /// when this subject has none.
    pub fn existence(found: Option<Mismatch>, searched: usize) -> Self {
        match found {
            Some(example) => Outcome {
                verdict: Verdict::Pass,
                expected: json!("an instance with strict inclusion"),
                computed: json!({ "searched": searched, "found": true }),
                mismatch: Some(example),
            },
            None => Outcome {
                verdict: Verdict::NotApplicable,
                expected: json!("an instance with strict inclusion"),
                computed: json!({ "searched": searched, "found": false }),
                mismatch: None,
            },
        }
    }
}

/// Counts instances of a universally quantified claim and keeps the first
/// failing one.
#[derive(Debug, Default)]
pub struct Tally {
    cases: usize,
    failures: usize,
    first: Option<Mismatch>,
}

impl Tally {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn record<F: FnOnce() -> Mismatch>(&mut self, holds: bool, witness: F) {
        self.cases += 1;
        if !holds {
            self.failures += 1;
            if self.first.is_none() {
                self.first = Some(witness());
            }
        }
    }

    /// Records `lhs == rhs`.
    pub fn equal<T: Serialize + PartialEq>(&mut self, lhs: T, rhs: T, detail: impl FnOnce() -> String) {
        let holds = lhs == rhs;
        self.record(holds, || Mismatch::new(&lhs, &rhs, detail()));
    }

    pub fn merge(&mut self, other: Tally) {
        self.cases += other.cases;
        self.failures += other.failures;
        if self.first.is_none() {
            self.first = other.first;
        }
    }

    pub fn finish(self) -> Outcome {
        let expected = json!({ "cases": self.cases, "failures": 0 });
        let computed = json!({ "cases": self.cases, "failures": self.failures });
        if self.cases == 0 {
            return Outcome::not_applicable("no instances satisfy the hypothesis");
        }
        Outcome {
            verdict: if self.failures == 0 { Verdict::Pass } else { Verdict::Fail },
            expected,
            computed,
            mismatch: self.first,
        }
    }
}
