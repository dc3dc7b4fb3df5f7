//! Versioned JSON records.

use std::time::{Instant, SystemTime, UNIX_EPOCH};

use serde::Serialize;
use serde_json::Value;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    /// Not run by policy (e.g. `r = 2t` for the characterization).
    Skipped,
    BudgetExceeded,
    Fail,
}

impl Status {
    /// Process exit code for a run whose worst outcome is `self`.
    pub fn exit_code(self) -> u8 {
        match self {
            Status::Pass | Status::Skipped => 0,
            Status::Fail => 1,
            Status::BudgetExceeded => 3,
        }
    }

    /// Failures dominate budget overruns, which dominate passes and skips.
    pub fn worst<I: IntoIterator<Item = Status>>(all: I) -> Status {
        all.into_iter().max().unwrap_or(Status::Pass)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ExperimentRecord {
    pub schema_version: u32,
    pub command: String,
    pub parameters: Value,
    pub seed: u64,
    pub status: Status,
    pub outcome: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u128>,
}

/// Start time of a command; stamps records only when timestamps are on.
pub struct Clock {
    enabled: bool,
    start: Instant,
}

impl Clock {
    pub fn start(enabled: bool) -> Self {
        Clock {
            enabled,
            start: Instant::now(),
        }
    }

    pub fn record(
        &self,
        command: &str,
        parameters: Value,
        seed: u64,
        status: Status,
        outcome: Value,
    ) -> ExperimentRecord {
        let (timestamp, wall_time_ms) = if self.enabled {
            let now = SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0);
            (Some(now), Some(self.start.elapsed().as_millis()))
        } else {
            (None, None)
        };
        ExperimentRecord {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            parameters,
            seed,
            status,
            outcome,
            timestamp,
            wall_time_ms,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn worst_status() {
        assert_eq!(Status::worst([]), Status::Pass);
        assert_eq!(
            Status::worst([Status::Pass, Status::Skipped]),
            Status::Skipped
        );
        assert_eq!(
            Status::worst([Status::BudgetExceeded, Status::Pass]),
            Status::BudgetExceeded
        );
        assert_eq!(
            Status::worst([Status::BudgetExceeded, Status::Fail]),
            Status::Fail
        );
        assert_eq!(Status::Skipped.exit_code(), 0);
    }

    #[test]
    fn timestamps_can_be_suppressed() {
        let rec = Clock::start(false).record("x", json!({}), 7, Status::Pass, json!(null));
        let text = serde_json::to_string(&rec).unwrap();
        assert!(!text.contains("timestamp") && !text.contains("wall_time"));
        assert!(text.contains("\"schema_version\":1"));
        let rec = Clock::start(true).record("x", json!({}), 7, Status::Pass, json!(null));
        assert!(rec.timestamp.is_some());
    }
}
