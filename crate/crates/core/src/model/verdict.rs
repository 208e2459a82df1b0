use std::fmt;

use serde::{Deserialize, Serialize};

use super::instance::JobId;

/// Which condition a witness violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Violation {
    /// Two jobs occupy the machine at the same time.
    Collision,
    /// Two rectangles overlap.
    Overlap,
    /// `y mod h != 0`.
    RuledViolation,
    /// A rectangle leaves the `w x H` frame.
    OutOfBounds,
    /// A start violates its release date or deadline.
    WindowViolation,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Violation::Collision => "collision",
            Violation::Overlap => "overlap",
            Violation::RuledViolation => "ruled violation",
            Violation::OutOfBounds => "out of bounds",
            Violation::WindowViolation => "window violation",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub first: JobId,
    /// Absent for single-job violations.
    pub second: Option<JobId>,
    pub violation: Violation,
}

/// Outcome of a feasibility check. Carries a witness iff infeasible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    witness: Option<Witness>,
}

impl Verdict {
    pub fn feasible() -> Self {
        Verdict { witness: None }
    }

    pub fn pair(first: &JobId, second: &JobId, violation: Violation) -> Self {
        Verdict {
            witness: Some(Witness {
                first: first.clone(),
                second: Some(second.clone()),
                violation,
            }),
        }
    }

    pub fn single(job: &JobId, violation: Violation) -> Self {
        Verdict {
            witness: Some(Witness {
                first: job.clone(),
                second: None,
                violation,
            }),
        }
    }

    pub fn is_feasible(&self) -> bool {
        self.witness.is_none()
    }

    pub fn witness(&self) -> Option<&Witness> {
        self.witness.as_ref()
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            None => f.write_str("feasible"),
            Some(Witness { first, second: Some(second), violation }) => {
                write!(f, "infeasible: {violation} between `{first}` and `{second}`")
            }
            Some(Witness { first, second: None, violation }) => {
                write!(f, "infeasible: {violation} at `{first}`")
            }
        }
    }
}
