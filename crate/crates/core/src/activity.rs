use std::fmt;

use serde::{Deserialize, Serialize};

/// Activity of an edge with respect to a spanning tree or quasi-tree.
///
/// For quasi-trees the words are live/dead, for spanning trees
/// active/inactive; both share the letters `L`, `D`, `ℓ`, `d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Activity {
    InternallyLive,
    InternallyDead,
    ExternallyLive,
    ExternallyDead,
}

impl Activity {
    pub fn new(internal: bool, live: bool) -> Self {
        match (internal, live) {
            (true, true) => Activity::InternallyLive,
            (true, false) => Activity::InternallyDead,
            (false, true) => Activity::ExternallyLive,
            (false, false) => Activity::ExternallyDead,
        }
    }

    pub fn is_internal(self) -> bool {
        matches!(self, Activity::InternallyLive | Activity::InternallyDead)
    }

    pub fn is_live(self) -> bool {
        matches!(self, Activity::InternallyLive | Activity::ExternallyLive)
    }

    pub fn letter(self) -> char {
        match self {
            Activity::InternallyLive => 'L',
            Activity::InternallyDead => 'D',
            Activity::ExternallyLive => 'ℓ',
            Activity::ExternallyDead => 'd',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        match c {
            'L' => Some(Activity::InternallyLive),
            'D' => Some(Activity::InternallyDead),
            'ℓ' | 'l' => Some(Activity::ExternallyLive),
            'd' => Some(Activity::ExternallyDead),
            _ => None,
        }
    }
}

impl fmt::Display for Activity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// Renders activities in the order given by `sequence` (edge numbers from
/// lowest to highest).
pub fn activity_string(activities: &[Activity], sequence: &[usize]) -> String {
    sequence.iter().map(|&e| activities[e].letter()).collect()
}
