//! Oracle-versus-formula sweep over a grid of `(n, p)`.

use serde::{Deserialize, Serialize};

use crate::bitset::ElementSet;
use crate::cyclic::classify_family_member;
use crate::errata::{fixed_errata, point_errata, Erratum};
use crate::error::{Error, Result};
use crate::families::{
    distinct_members, family_count, materialize_families, DEFAULT_MEMORY_BUDGET,
};
use crate::formulas::{count_reports_with, CountReport, Verdict};
use crate::group::GroupSpec;
use crate::lattice::{all_subgroups, is_cyclic, OracleConfig, SubgroupLattice};

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub ns: Vec<u64>,
    pub ps: Vec<u64>,
    pub oracle: OracleConfig,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepPoint {
    pub n: u64,
    pub p: u64,
    pub group_order: u64,
    pub family_total: u64,
    pub reports: Vec<CountReport>,
    /// Materialized families equal the oracle lattice, set for set.
    pub families_match_lattice: Option<bool>,
    /// Oracle cyclic subgroups are exactly the family members classified
    /// cyclic, with the classified orders.
    pub cyclic_classification_ok: Option<bool>,
}

impl SweepPoint {
    pub fn passed(&self) -> bool {
        self.reports.iter().all(|r| r.verdict != Verdict::Mismatch)
            && self.families_match_lattice != Some(false)
            && self.cyclic_classification_ok != Some(false)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkippedPoint {
    pub n: u64,
    pub p: u64,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub ns: Vec<u64>,
    pub ps: Vec<u64>,
    pub cap: u64,
    pub points: Vec<SweepPoint>,
    pub skipped: Vec<SkippedPoint>,
    pub errata: Vec<Erratum>,
    pub passed: bool,
}

fn member_sets<'a>(subs: impl Iterator<Item = &'a crate::lattice::Subgroup>) -> Vec<ElementSet> {
    subs.map(|s| s.members().clone()).collect()
}

fn families_vs_lattice(
    spec: &GroupSpec,
    lattice: &SubgroupLattice,
    cfg: &OracleConfig,
) -> Result<(bool, bool)> {
    let fams = materialize_families(spec, cfg.execution, DEFAULT_MEMORY_BUDGET)?;
    let fam_sets = distinct_members(&fams);
    let matches =
        fam_sets.len() == fams.len() && fam_sets == member_sets(lattice.subgroups().iter());

    let mut classified: Vec<&crate::lattice::Subgroup> = Vec::new();
    let mut consistent = true;
    for f in &fams {
        let t = classify_family_member(spec, &f.descriptor);
        consistent &= t.order == f.subgroup.order();
        consistent &= t.is_cyclic == is_cyclic(spec, &f.subgroup);
        if t.is_cyclic {
            classified.push(&f.subgroup);
        }
    }
    classified.sort();
    classified.dedup();
    let classification =
        consistent && member_sets(classified.into_iter()) == member_sets(lattice.cyclic());
    Ok((matches, classification))
}

fn check_point(n: u64, p: u64, cfg: &OracleConfig) -> Result<SweepPoint> {
    let spec = GroupSpec::new(n, p)?;
    let family_total = family_count(&spec)?.total;
    let (reports, fam_ok, cyc_ok) = if spec.order() <= cfg.cap {
        let lattice = all_subgroups(&spec, cfg)?;
        let (fam_ok, cyc_ok) = families_vs_lattice(&spec, &lattice, cfg)?;
        (
            count_reports_with(n, p, Some(&lattice))?,
            Some(fam_ok),
            Some(cyc_ok),
        )
    } else {
        (count_reports_with(n, p, None)?, None, None)
    };
    Ok(SweepPoint {
        n,
        p,
        group_order: spec.order(),
        family_total,
        reports: reports.to_vec(),
        families_match_lattice: fam_ok,
        cyclic_classification_ok: cyc_ok,
    })
}

/// Runs every valid grid point; points violating the hypotheses are listed
/// as skipped. Output order follows the grid (`n` outer, `p` inner)
/// regardless of how the work is scheduled.
pub fn run_sweep(cfg: &SweepConfig) -> Result<SweepReport> {
    if cfg.ns.is_empty() || cfg.ps.is_empty() {
        return Err(Error::EmptyGrid);
    }
    let mut valid = Vec::new();
    let mut skipped = Vec::new();
    for &n in &cfg.ns {
        for &p in &cfg.ps {
            match GroupSpec::new(n, p)?.hypothesis_violation() {
                None => valid.push((n, p)),
                Some(h) => skipped.push(SkippedPoint {
                    n,
                    p,
                    reason: h.to_string(),
                }),
            }
        }
    }
    let points = cfg
        .oracle
        .execution
        .map(&valid, |&(n, p)| check_point(n, p, &cfg.oracle))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    let mut errata = fixed_errata()?;
    for &(n, p) in &valid {
        errata.extend(point_errata(n, p)?);
    }
    let passed = points.iter().all(SweepPoint::passed);
    Ok(SweepReport {
        ns: cfg.ns.clone(),
        ps: cfg.ps.clone(),
        cap: cfg.oracle.cap,
        points,
        skipped,
        errata,
        passed,
    })
}
