use std::fmt;

use crate::fmt::sig9;

/// Trigger fired during a generation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Event {
    Migrate,
    Ipr,
    Shake,
    Reset,
}

impl Event {
    pub fn tag(self) -> &'static str {
        match self {
            Event::Migrate => "migrate",
            Event::Ipr => "ipr",
            Event::Shake => "shake",
            Event::Reset => "reset",
        }
    }
}

/// Statistics of one generation; generation `0` is the initial population.
#[derive(Debug, Clone, PartialEq)]
pub struct TraceRecord {
    pub generation: u64,
    /// Best first-objective value over all islands.
    pub best: f64,
    /// Mean first-objective value over all members of all islands.
    pub mean: f64,
    /// Mean per-island key diversity.
    pub diversity: f64,
    /// Triggers in firing order; empty means none.
    pub events: Vec<Event>,
    /// Stall counter after the generation.
    pub stall: u64,
}

impl TraceRecord {
    /// `none`, or the fired tags joined with `+`.
    pub fn event_tag(&self) -> String {
        if self.events.is_empty() {
            "none".to_string()
        } else {
            let tags: Vec<&str> = self.events.iter().map(|e| e.tag()).collect();
            tags.join("+")
        }
    }

    pub fn has(&self, event: Event) -> bool {
        self.events.contains(&event)
    }
}

impl fmt::Display for TraceRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{},{},{},{},{}",
            self.generation,
            sig9(self.best),
            sig9(self.mean),
            sig9(self.diversity),
            self.event_tag()
        )
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct RunTrace {
    pub records: Vec<TraceRecord>,
}

impl RunTrace {
    pub const HEADER: &'static str = "generation,best,mean,diversity,event";

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn last(&self) -> Option<&TraceRecord> {
        self.records.last()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from(Self::HEADER);
        out.push('\n');
        for r in &self.records {
            out.push_str(&r.to_string());
            out.push('\n');
        }
        out
    }

    /// Generations at which `event` fired.
    pub fn generations_with(&self, event: Event) -> Vec<u64> {
        self.records
            .iter()
            .filter(|r| r.has(event))
            .map(|r| r.generation)
            .collect()
    }
}
