use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use serde_json::{Map, Value};

use crate::error::{GroupError, Result};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    L2_1,
    L2_2,
    L2_3,
    T2_4,
    L2_5,
    L2_6,
    T3_1,
    T3_2,
    L3_3,
    T3_4,
    T3_5,
    C3_6,
    T4_1,
    C4_2,
    L4_3,
    T4_4,
    C4_5,
}

impl TheoremId {
    pub const ALL: [TheoremId; 17] = [
        TheoremId::L2_1,
        TheoremId::L2_2,
        TheoremId::L2_3,
        TheoremId::T2_4,
        TheoremId::L2_5,
        TheoremId::L2_6,
        TheoremId::T3_1,
        TheoremId::T3_2,
        TheoremId::L3_3,
        TheoremId::T3_4,
        TheoremId::T3_5,
        TheoremId::C3_6,
        TheoremId::T4_1,
        TheoremId::C4_2,
        TheoremId::L4_3,
        TheoremId::T4_4,
        TheoremId::C4_5,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::L2_1 => "L2.1",
            TheoremId::L2_2 => "L2.2",
            TheoremId::L2_3 => "L2.3",
            TheoremId::T2_4 => "T2.4",
            TheoremId::L2_5 => "L2.5",
            TheoremId::L2_6 => "L2.6",
            TheoremId::T3_1 => "T3.1",
            TheoremId::T3_2 => "T3.2",
            TheoremId::L3_3 => "L3.3",
            TheoremId::T3_4 => "T3.4",
            TheoremId::T3_5 => "T3.5",
            TheoremId::C3_6 => "C3.6",
            TheoremId::T4_1 => "T4.1",
            TheoremId::C4_2 => "C4.2",
            TheoremId::L4_3 => "L4.3",
            TheoremId::T4_4 => "T4.4",
            TheoremId::C4_5 => "C4.5",
        }
    }

    /// Parses a comma-separated list; `all` selects every id.
    pub fn parse_list(s: &str) -> Result<Vec<TheoremId>> {
        let mut out = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            if part.eq_ignore_ascii_case("all") {
                out.extend(TheoremId::ALL);
            } else {
                out.push(part.parse()?);
            }
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<TheoremId> {
        TheoremId::ALL
            .into_iter()
            .find(|id| id.as_str().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| GroupError::BadParameter(format!("unknown theorem id {s:?}")))
    }
}

impl Serialize for TheoremId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "PASSED")]
    Passed,
    #[serde(rename = "FAILED")]
    Failed,
    #[serde(rename = "NOT-APPLICABLE")]
    NotApplicable,
    /// The check could not run (for example an order cap was hit).
    #[serde(rename = "ERROR")]
    Error,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Passed => "PASSED",
            Status::Failed => "FAILED",
            Status::NotApplicable => "NOT-APPLICABLE",
            Status::Error => "ERROR",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Hypothesis {
    pub name: String,
    pub holds: bool,
}

/// One hypotheses-then-conclusion evaluation. The conclusion is computed
/// only when every hypothesis holds.
#[derive(Clone, Debug, Serialize)]
pub struct Instance {
    pub label: String,
    pub hypotheses: Vec<Hypothesis>,
    pub conclusion: Option<bool>,
    pub witnesses: Map<String, Value>,
}

impl Instance {
    pub fn new(label: impl Into<String>) -> Instance {
        Instance {
            label: label.into(),
            hypotheses: Vec::new(),
            conclusion: None,
            witnesses: Map::new(),
        }
    }

    pub fn hypothesis(mut self, name: impl Into<String>, holds: bool) -> Instance {
        self.hypotheses.push(Hypothesis {
            name: name.into(),
            holds,
        });
        self
    }

    pub fn witness(mut self, key: &str, value: impl Serialize) -> Instance {
        self.witnesses.insert(
            key.into(),
            serde_json::to_value(value).expect("serializable"),
        );
        self
    }

    pub fn applicable(&self) -> bool {
        self.hypotheses.iter().all(|h| h.holds)
    }

    pub fn conclude(
        mut self,
        body: impl FnOnce(&mut Map<String, Value>) -> Result<bool>,
    ) -> Result<Instance> {
        if self.applicable() {
            self.conclusion = Some(body(&mut self.witnesses)?);
        }
        Ok(self)
    }
}

/// Inserts a serializable witness value.
pub fn put(w: &mut Map<String, Value>, key: &str, value: impl Serialize) {
    w.insert(
        key.into(),
        serde_json::to_value(value).expect("serializable"),
    );
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremReport {
    pub schema: u32,
    pub theorem_id: TheoremId,
    pub group_spec: String,
    pub hypotheses: Vec<Hypothesis>,
    pub conclusion: Option<bool>,
    pub status: Status,
    pub witnesses: Value,
    pub wall_time_ms: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl TheoremReport {
    /// A report for a single instance.
    pub fn single(id: TheoremId, spec: &str, instance: Instance) -> TheoremReport {
        let conclusion = if instance.applicable() {
            instance.conclusion
        } else {
            None
        };
        TheoremReport {
            schema: SCHEMA_VERSION,
            theorem_id: id,
            group_spec: spec.into(),
            hypotheses: instance.hypotheses,
            conclusion,
            status: status_of(conclusion),
            witnesses: Value::Object(instance.witnesses),
            wall_time_ms: 0,
            error: None,
        }
    }

    /// A report over several instances: the conclusion is asserted when at
    /// least one instance applies, and holds when every applicable instance
    /// holds.
    pub fn aggregate(
        id: TheoremId,
        spec: &str,
        shared: Vec<Hypothesis>,
        instances: Vec<Instance>,
        mut witnesses: Map<String, Value>,
    ) -> TheoremReport {
        let shared_ok = shared.iter().all(|h| h.holds);
        let applicable: Vec<&Instance> = instances.iter().filter(|i| i.applicable()).collect();
        let mut hypotheses = shared;
        hypotheses.push(Hypothesis {
            name: "some instance satisfies its hypotheses".into(),
            holds: !applicable.is_empty(),
        });
        let conclusion = (shared_ok && !applicable.is_empty())
            .then(|| applicable.iter().all(|i| i.conclusion == Some(true)));
        put(&mut witnesses, "applicable_instances", applicable.len());
        put(&mut witnesses, "instances", &instances);
        TheoremReport {
            schema: SCHEMA_VERSION,
            theorem_id: id,
            group_spec: spec.into(),
            hypotheses,
            conclusion,
            status: status_of(conclusion),
            witnesses: Value::Object(witnesses),
            wall_time_ms: 0,
            error: None,
        }
    }

    pub fn error(id: TheoremId, spec: &str, err: &GroupError) -> TheoremReport {
        TheoremReport {
            schema: SCHEMA_VERSION,
            theorem_id: id,
            group_spec: spec.into(),
            hypotheses: Vec::new(),
            conclusion: None,
            status: Status::Error,
            witnesses: Value::Object(Map::new()),
            wall_time_ms: 0,
            error: Some(err.to_string()),
        }
    }

    pub fn hypotheses_ok(&self) -> bool {
        !self.hypotheses.is_empty() && self.hypotheses.iter().all(|h| h.holds)
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Failed
    }

    /// `group, theorem, hypotheses-ok, conclusion, wall-time-ms`.
    pub fn csv_record(&self) -> [String; 5] {
        [
            self.group_spec.clone(),
            self.theorem_id.to_string(),
            self.hypotheses_ok().to_string(),
            self.conclusion
                .map_or_else(|| "n/a".to_string(), |c| c.to_string()),
            self.wall_time_ms.to_string(),
        ]
    }
}

pub const CSV_HEADER: [&str; 5] = [
    "group",
    "theorem",
    "hypotheses-ok",
    "conclusion",
    "wall-time-ms",
];

fn status_of(conclusion: Option<bool>) -> Status {
    match conclusion {
        Some(true) => Status::Passed,
        Some(false) => Status::Failed,
        None => Status::NotApplicable,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn id_parsing() {
        assert_eq!("t3.4".parse::<TheoremId>().unwrap(), TheoremId::T3_4);
        assert!("T9.9".parse::<TheoremId>().is_err());
        assert_eq!(TheoremId::parse_list("all").unwrap().len(), 17);
        assert_eq!(
            TheoremId::parse_list("T3.4, L2.1,T3.4").unwrap(),
            vec![TheoremId::L2_1, TheoremId::T3_4]
        );
        assert!(TheoremId::parse_list("").unwrap().is_empty());
    }

    #[test]
    fn conclusion_withheld_when_hypothesis_fails() {
        let inst = Instance::new("x")
            .hypothesis("h", false)
            .conclude(|_| panic!("must not be evaluated"))
            .unwrap();
        let r = TheoremReport::single(TheoremId::T2_4, "C(2)", inst);
        assert_eq!(r.status, Status::NotApplicable);
        assert_eq!(r.conclusion, None);
    }

    #[test]
    fn aggregate_status() {
        let ok = Instance::new("a")
            .hypothesis("h", true)
            .conclude(|_| Ok(true))
            .unwrap();
        let skip = Instance::new("b").hypothesis("h", false);
        let bad = Instance::new("c")
            .hypothesis("h", true)
            .conclude(|_| Ok(false))
            .unwrap();
        let r = TheoremReport::aggregate(
            TheoremId::T4_1,
            "G",
            vec![],
            vec![ok.clone(), skip.clone()],
            Map::new(),
        );
        assert_eq!(r.status, Status::Passed);
        let r = TheoremReport::aggregate(TheoremId::T4_1, "G", vec![], vec![ok, bad], Map::new());
        assert_eq!(r.status, Status::Failed);
        let r = TheoremReport::aggregate(TheoremId::T4_1, "G", vec![], vec![skip], Map::new());
        assert_eq!(r.status, Status::NotApplicable);
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["schema"], 1);
        assert_eq!(json["status"], "NOT-APPLICABLE");
    }
}
