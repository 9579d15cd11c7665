use crate::exact::{ceil_rat, floor_rat, rat_int, to_decimal, ExactInt, ExactRational};
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    WithinBounds,
    Violated,
    Unchecked,
}

/// A sandwich on one integer or rational quantity, carried around with its
/// parameters so reports stay self-describing.
#[derive(Debug, Clone)]
pub struct BoundReport {
    pub subject: String,
    pub params: Value,
    pub lower: Option<ExactRational>,
    pub upper: Option<ExactRational>,
    pub oracle_count: Option<ExactInt>,
    /// set when a bound degenerates (e.g. a lower bound that is not positive)
    pub vacuous: bool,
    pub notes: Vec<String>,
}

impl BoundReport {
    pub fn new(subject: impl Into<String>, params: Value) -> Self {
        BoundReport {
            subject: subject.into(),
            params,
            lower: None,
            upper: None,
            oracle_count: None,
            vacuous: false,
            notes: Vec::new(),
        }
    }

    pub fn with_bounds(mut self, lower: ExactRational, upper: ExactRational) -> Self {
        assert!(lower <= upper, "bound report with lower > upper");
        self.lower = Some(lower);
        self.upper = Some(upper);
        self
    }

    pub fn with_oracle(mut self, count: ExactInt) -> Self {
        self.oracle_count = Some(count);
        self
    }

    pub fn note(mut self, msg: impl Into<String>) -> Self {
        self.notes.push(msg.into());
        self
    }

    pub fn lower_ceil(&self) -> Option<ExactInt> {
        self.lower.as_ref().map(ceil_rat)
    }

    pub fn upper_floor(&self) -> Option<ExactInt> {
        self.upper.as_ref().map(floor_rat)
    }

    /// Violated only when an oracle count lies outside [ceil(lower), floor(upper)].
    pub fn verdict(&self) -> Verdict {
        let Some(count) = self.oracle_count.as_ref() else {
            return Verdict::Unchecked;
        };
        let count = rat_int(count);
        if let Some(lo) = &self.lower {
            if count < rat_int(&ceil_rat(lo)) {
                return Verdict::Violated;
            }
        }
        if let Some(hi) = &self.upper {
            if count > rat_int(&floor_rat(hi)) {
                return Verdict::Violated;
            }
        }
        Verdict::WithinBounds
    }

    pub fn to_json(&self) -> Value {
        let rational = |r: &ExactRational| {
            json!({
                "rational": format!("{}/{}", r.numer(), r.denom()),
                "decimal": to_decimal(r, 12),
            })
        };
        let mut obj = json!({
            "subject": self.subject,
            "params": self.params,
            "vacuous": self.vacuous,
            "verdict": match self.verdict() {
                Verdict::WithinBounds => "within-bounds",
                Verdict::Violated => "violated",
                Verdict::Unchecked => "unchecked",
            },
        });
        let map = obj.as_object_mut().unwrap();
        if let Some(lo) = &self.lower {
            map.insert("lower".into(), rational(lo));
            map.insert("lower_ceil".into(), json!(ceil_rat(lo).to_string()));
        }
        if let Some(hi) = &self.upper {
            map.insert("upper".into(), rational(hi));
            map.insert("upper_floor".into(), json!(floor_rat(hi).to_string()));
        }
        if let Some(c) = &self.oracle_count {
            map.insert("oracle_count".into(), json!(c.to_string()));
        }
        if !self.notes.is_empty() {
            map.insert("notes".into(), json!(self.notes));
        }
        obj
    }
}
