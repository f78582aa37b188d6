use crate::certificate::Certificate;
use crate::oracles::Induced2K2;
use serde::{Deserialize, Serialize};

/// A named proof step. `argument` is the one-line reason the step is sound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rule {
    pub name: &'static str,
    pub argument: &'static str,
}

macro_rules! rules {
    ($($id:ident = $name:literal, $arg:literal;)*) => {
        $(pub const $id: Rule = Rule { name: $name, argument: $arg };)*
    };
}

rules! {
    INITIAL_FACTOR = "initial_factor", "perfect matching in the degree gadget";
    HAMILTONIAN = "hamiltonian", "a single cycle spans the graph";
    CROSS_EDGE_MERGE = "cross_edge_merge", "a cross edge with adjacent neighbours splices two cycles";
    A_TYPE_ABSORPTION = "a_type_absorption", "the factor neighbours of an A-type vertex can be dropped";
    BAD_VERTEX_ABSORPTION = "bad_vertex_absorption", "the factor neighbours of a bad vertex can be dropped";
    LADDER_ABSORPTION = "ladder_absorption", "a B-type vertex beside a droppable vertex skips to the next";
    COABSORBABLE_REINSERT = "coabsorbable_reinsert", "an adjacent droppable vertex re-enters the smaller factor";
    COABSORBABLE_INDEPENDENT_SET = "coabsorbable_independent_set", "successor sets of adjacent droppable vertices are large";
    ALL_ALTERNATING = "all_alternating", "with every cycle alternating the B side is a large independent set";
    SHORT_B_CYCLE = "short_b_cycle", "a short cycle with a B-type edge leaves a large non-neighbourhood";
    TOO_MANY_B_CYCLES = "too_many_b_cycles", "at most two cycles carry a B-type edge";
    BAD_SET_PROPAGATION = "bad_set_propagation", "a vertex seeing the alternating B side is bad";
    ISOLATED_ALTERNATING_B = "isolated_alternating_b", "without bad vertices the alternating A side isolates the B side";
    ROTATION_MERGE = "rotation_merge", "a rotated spanning path closes through a second cycle";
    ROTATION_ABSORPTION = "rotation_absorption", "path endpoints reached by rotation can be dropped";
    ROTATION_CUT = "rotation_cut", "rotation endpoints and the alternating B side are isolated by their neighbours";
    PARTITION_ALTERNATION = "partition_alternation", "cycles alternate between neighbours and non-neighbours of a B-type edge";
    PARTITION_MERGE = "partition_merge", "a spanning path of one cycle closes through the other";
    PARTITION_ABSORPTION = "partition_absorption", "the neighbour side of the partition can be dropped";
    HALF_INDEPENDENT_SET = "half_independent_set", "two partition halves and the alternating B side are independent";
    PARTITION_LADDER = "partition_ladder", "ladder steps along the partition reach a vertex that can be dropped";
    TERMINAL = "terminal", "both cycles admit crossing B-type edges";
}

/// What a rule firing produced.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Produced {
    Factor {
        cycles: Vec<Vec<usize>>,
    },
    /// A 2-factor of the graph minus `vertex`.
    Certificate {
        vertex: usize,
        cycles: Vec<Vec<usize>>,
    },
    Witness {
        certificate: Certificate,
    },
    Violation {
        quad: Induced2K2,
    },
    Stuck {
        reason: String,
    },
    NoTwoFactor,
}

/// One JSON line of the rule-firing log.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceRecord {
    pub step: usize,
    pub rule: String,
    pub claim_ref: String,
    pub consumed_cycles: Vec<Vec<usize>>,
    pub produced: Produced,
    pub omega_before: usize,
    pub omega_after: Option<usize>,
}

#[derive(Debug, Default, Clone)]
pub struct Trace {
    pub(crate) records: Vec<TraceRecord>,
    pub(crate) step: usize,
}

impl Trace {
    pub(crate) fn push(
        &mut self,
        rule: Rule,
        consumed: Vec<Vec<usize>>,
        produced: Produced,
        omega_before: usize,
        omega_after: Option<usize>,
    ) {
        self.records.push(TraceRecord {
            step: self.step,
            rule: rule.name.to_string(),
            claim_ref: rule.argument.to_string(),
            consumed_cycles: consumed,
            produced,
            omega_before,
            omega_after,
        });
    }

    pub fn records(&self) -> &[TraceRecord] {
        &self.records
    }

    pub fn into_records(self) -> Vec<TraceRecord> {
        self.records
    }
}

/// One JSON object per line.
pub fn to_json_lines(records: &[TraceRecord]) -> String {
    let mut out = String::new();
    for r in records {
        out.push_str(&serde_json::to_string(r).expect("trace records serialize"));
        out.push('\n');
    }
    out
}
