//! JSON shapes of every verb's output. `docs/json-schema.md` describes
//! them field by field.

use serde::{Deserialize, Serialize};
use torsion_core::cyclic::{CyclicizerSubgroupCheck, CyclicizerSummary};
use torsion_core::families::{Family, FamilyCounts, OrderTable};
use torsion_core::formulas::CountReport;
use torsion_core::sweep::SweepReport;

use crate::args::Mode;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountOutput {
    pub n: u64,
    pub p: u64,
    pub group_order: u64,
    pub cap: u64,
    pub subgroups: CountReport,
    pub cyclic: CountReport,
    pub families: FamilyCounts,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerateRow {
    pub family: Family,
    pub i: u64,
    pub j: Option<u64>,
    pub generators: String,
    pub order: u64,
    pub cyclic: bool,
    pub cyclic_type: Option<String>,
    /// Order of the closed generator set, with `--materialize`.
    pub materialized_order: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerateOutput {
    pub n: u64,
    pub p: u64,
    pub group_order: u64,
    pub families: FamilyCounts,
    pub materialized: bool,
    pub subgroups: Vec<EnumerateRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableOutput {
    pub n: u64,
    pub p: u64,
    pub total: u64,
    pub parts: Vec<OrderTable>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapscriptOutput {
    pub n: u64,
    pub p: u64,
    pub mode: Mode,
    pub script: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclicizerOutput {
    pub n: u64,
    pub m: u64,
    pub group_order: u64,
    pub cyclicizer: CyclicizerSummary,
}

/// Any verb's JSON document. Serialized without a tag; read a document
/// back through the verb's own type.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Output {
    Count(CountOutput),
    Enumerate(EnumerateOutput),
    Table(TableOutput),
    Verify(SweepReport),
    Gapscript(GapscriptOutput),
    Prop46(CyclicizerSubgroupCheck),
    Cyclicizer(CyclicizerOutput),
}
