use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

/// Why a run could not decide. Only budget exhaustion qualifies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Cause {
    BudgetExceeded,
}

/// What a run printed with `--json`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    /// Arguments after the program name.
    pub command: Vec<String>,
    pub verdict: Verdict,
    pub cause: Option<Cause>,
    pub message: String,
    pub witnesses: Map<String, Value>,
    /// Only filled with `--timing`, so default output is reproducible.
    pub wall_clock_ms: Option<u64>,
    pub budget_spent: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ReportError {
    #[error("inconclusive verdict without a budget cause")]
    InconclusiveWithoutCause,
    #[error("a cause is only allowed on an inconclusive verdict")]
    StrayCause,
}

/// The outcome of one check before it is wrapped into a report.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub verdict: Verdict,
    pub message: String,
    pub witnesses: Map<String, Value>,
    pub budget_spent: u64,
}

impl Outcome {
    pub fn pass(message: impl Into<String>) -> Outcome {
        Outcome::with(Verdict::Pass, message)
    }

    pub fn fail(message: impl Into<String>) -> Outcome {
        Outcome::with(Verdict::Fail, message)
    }

    pub fn inconclusive(message: impl Into<String>) -> Outcome {
        Outcome::with(Verdict::Inconclusive, message)
    }

    pub fn decide(ok: bool, message: impl Into<String>) -> Outcome {
        Outcome::with(if ok { Verdict::Pass } else { Verdict::Fail }, message)
    }

    fn with(verdict: Verdict, message: impl Into<String>) -> Outcome {
        Outcome {
            verdict,
            message: message.into(),
            witnesses: Map::new(),
            budget_spent: 0,
        }
    }

    pub fn witness(mut self, key: &str, value: impl Serialize) -> Outcome {
        self.witnesses.insert(
            key.to_string(),
            serde_json::to_value(value).expect("plain data serializes"),
        );
        self
    }

    pub fn spent(mut self, units: u64) -> Outcome {
        self.budget_spent += units;
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn into_report(self, command: Vec<String>, wall_clock_ms: Option<u64>) -> RunReport {
        RunReport {
            command,
            cause: (self.verdict == Verdict::Inconclusive).then_some(Cause::BudgetExceeded),
            verdict: self.verdict,
            message: self.message,
            witnesses: self.witnesses,
            wall_clock_ms,
            budget_spent: self.budget_spent,
        }
    }
}

impl RunReport {
    pub fn validate(&self) -> Result<(), ReportError> {
        match (self.verdict, self.cause) {
            (Verdict::Inconclusive, None) => Err(ReportError::InconclusiveWithoutCause),
            (Verdict::Pass | Verdict::Fail, Some(_)) => Err(ReportError::StrayCause),
            _ => Ok(()),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<RunReport, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// 0 pass, 1 fail, 2 inconclusive (0 when inconclusive runs are allowed).
    pub fn exit_code(&self, allow_inconclusive: bool) -> i32 {
        match self.verdict {
            Verdict::Pass => 0,
            Verdict::Fail => 1,
            Verdict::Inconclusive if allow_inconclusive => 0,
            Verdict::Inconclusive => 2,
        }
    }
}
