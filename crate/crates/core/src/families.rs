//! Constructive enumeration of the subgroups of `T_{4n} x C_p` as four
//! families, plus the order table that counts them by order.
//!
//! * `H1(i) = <a^i>` for `i | 2n`, order `2n/i`
//! * `H2(i, j) = <a^i, a^j b>` for `i | n`, `1 <= j <= i`, order `4n/i`
//! * `H3(i) = <a^i, c>` for `i | 2n`, order `2nm/i`
//! * `H4(i, j) = <a^i, a^j b, c>` for `i | n`, `1 <= j <= i`, order `4nm/i`
//!
//! When `m = 1` the generator `c` is trivial and the last two families
//! coincide with the first two, so only `H1` and `H2` are produced.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::group::{GroupElement, GroupSpec};
use crate::lattice::{closure_set, Subgroup};
use crate::numtheory::{
    checked_add, checked_mul, checked_pow, divisors, sigma, split_two_part, tau,
};

/// Default byte budget for materializing every family member as a bitset.
pub const DEFAULT_MEMORY_BUDGET: u64 = 256 << 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    H1,
    H2,
    H3,
    H4,
}

impl Family {
    pub fn has_b(self) -> bool {
        matches!(self, Family::H2 | Family::H4)
    }

    pub fn has_c(self) -> bool {
        matches!(self, Family::H3 | Family::H4)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilyDescriptor {
    pub family: Family,
    pub i: u64,
    /// Coset offset, only for `H2` and `H4`.
    pub j: Option<u64>,
    pub expected_order: u64,
}

impl FamilyDescriptor {
    pub fn generators(&self, spec: &GroupSpec) -> Vec<GroupElement> {
        let mut gens = vec![spec.word(self.i as i64, false, 0)];
        if let Some(j) = self.j {
            gens.push(spec.word(j as i64, true, 0));
        }
        if self.family.has_c() {
            gens.push(spec.c());
        }
        gens
    }

    /// Generators rendered as `⟨a^i, a^j b, c⟩`, with trivial generators
    /// dropped; `⟨e⟩` when none remain.
    pub fn render(&self, spec: &GroupSpec) -> String {
        render_generators(&self.generators(spec))
    }
}

pub fn render_generators(gens: &[GroupElement]) -> String {
    let parts: Vec<String> = gens
        .iter()
        .filter(|g| !g.is_identity())
        .map(|g| g.to_string())
        .collect();
    if parts.is_empty() {
        "⟨e⟩".to_string()
    } else {
        format!("⟨{}⟩", parts.join(", "))
    }
}

/// Every family descriptor in canonical order: family, then `i` ascending,
/// then `j` ascending.
pub fn family_descriptors(spec: &GroupSpec) -> Result<Vec<FamilyDescriptor>> {
    let n = spec.n();
    let two_n = spec.two_n();
    let m = spec.m();
    let div_2n = divisors(two_n)?;
    let div_n = divisors(n)?;
    let mut families = vec![Family::H1, Family::H2];
    if m > 1 {
        families.extend([Family::H3, Family::H4]);
    }
    let mut out = Vec::new();
    for family in families {
        let c_factor = if family.has_c() { m } else { 1 };
        if family.has_b() {
            for &i in &div_n {
                let expected_order = checked_mul(4 * n / i, c_factor)?;
                out.extend((1..=i).map(|j| FamilyDescriptor {
                    family,
                    i,
                    j: Some(j),
                    expected_order,
                }));
            }
        } else {
            for &i in &div_2n {
                let expected_order = checked_mul(two_n / i, c_factor)?;
                out.push(FamilyDescriptor {
                    family,
                    i,
                    j: None,
                    expected_order,
                });
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyCounts {
    pub h1: u64,
    pub h2: u64,
    pub h3: u64,
    pub h4: u64,
    pub total: u64,
}

/// Family sizes without materializing anything: `tau(2n)`, `sigma(n)`,
/// and the same again for the `c` families when `m > 1`.
pub fn family_count(spec: &GroupSpec) -> Result<FamilyCounts> {
    let h1 = tau(spec.two_n())?;
    let h2 = sigma(spec.n())?;
    let (h3, h4) = if spec.m() > 1 { (h1, h2) } else { (0, 0) };
    let total = [h1, h2, h3, h4].into_iter().try_fold(0, checked_add)?;
    Ok(FamilyCounts {
        h1,
        h2,
        h3,
        h4,
        total,
    })
}

#[derive(Clone, Debug)]
pub struct MaterializedFamily {
    pub descriptor: FamilyDescriptor,
    pub subgroup: Subgroup,
}

/// Bytes needed to hold every family member as a bitset.
pub fn materialization_bytes(spec: &GroupSpec) -> Result<u64> {
    let count = family_count(spec)?.total;
    checked_mul(count, spec.order().div_ceil(64) * 8)
}

/// Closes every family's generators and checks the resulting order.
pub fn materialize_families(
    spec: &GroupSpec,
    execution: Execution,
    budget: u64,
) -> Result<Vec<MaterializedFamily>> {
    let needed = materialization_bytes(spec)?;
    if needed > budget {
        return Err(Error::MemoryBudget { needed, budget });
    }
    let descriptors = family_descriptors(spec)?;
    let built = execution.map(&descriptors, |d| {
        let gens = d.generators(spec);
        let members = closure_set(spec, &gens);
        MaterializedFamily {
            descriptor: *d,
            subgroup: Subgroup::from_parts(members, gens),
        }
    });
    for fam in &built {
        if fam.subgroup.order() != fam.descriptor.expected_order {
            return Err(Error::FamilyOrderMismatch {
                family: fam.descriptor.family.to_string(),
                i: fam.descriptor.i,
                expected: fam.descriptor.expected_order,
                actual: fam.subgroup.order(),
            });
        }
    }
    Ok(built)
}

/// Distinct member sets of the materialized families, canonically ordered.
pub fn distinct_members(families: &[MaterializedFamily]) -> Vec<ElementSet> {
    let mut subs: Vec<&Subgroup> = families.iter().map(|f| &f.subgroup).collect();
    subs.sort();
    subs.dedup();
    subs.into_iter().map(|s| s.members().clone()).collect()
}

/// Number of subgroups of order `d`, counted through the families:
/// the `c`-free families when `p` does not divide `d`, the `c` families
/// when `p` divides `d` exactly once, and none otherwise.
pub fn subgroups_of_order(spec: &GroupSpec, d: u64) -> Result<u64> {
    if d == 0 {
        return Err(Error::ZeroArgument);
    }
    if spec.m() > 1 {
        spec.require_closed_form()?;
    }
    let p = spec.m();
    let d0 = if p > 1 && d.is_multiple_of(p) {
        d / p
    } else {
        d
    };
    if p > 1 && d0 % p == 0 {
        return Ok(0);
    }
    let n = spec.n();
    let cyclic = u64::from(spec.two_n().is_multiple_of(d0));
    let dicyclic = if d0 % 4 == 0 && n.is_multiple_of(d0 / 4) {
        n / (d0 / 4)
    } else {
        0
    };
    Ok(cyclic + dicyclic)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TablePart {
    /// Orders not divisible by `p`.
    First,
    /// Orders divisible by `p`.
    Second,
}

/// Subgroup counts by order. Row `λ` (or `pλ` in the second part), column
/// `k` counts subgroups of order `row * 2^(k-1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderTable {
    pub part: TablePart,
    pub n: u64,
    pub p: u64,
    pub r: u32,
    /// Odd part of `n`.
    pub odd_part: u64,
    /// `1, 2, 4, ..., 2^(r+2)`.
    pub columns: Vec<u64>,
    pub rows: BTreeMap<u64, Vec<u64>>,
    pub column_sums: Vec<u64>,
}

impl OrderTable {
    pub fn total(&self) -> u64 {
        self.column_sums.iter().sum()
    }

    /// Header `k,1,2,...,2^(r+2)`, one line per row label, a closing
    /// `sum` line; LF line endings.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("k");
        for c in &self.columns {
            out.push_str(&format!(",{c}"));
        }
        out.push('\n');
        let mut line = |label: String, vals: &[u64]| {
            out.push_str(&label);
            for v in vals {
                out.push_str(&format!(",{v}"));
            }
            out.push('\n');
        };
        for (row, vals) in &self.rows {
            line(row.to_string(), vals);
        }
        line("sum".into(), &self.column_sums);
        out
    }
}

/// Entry for row `λ` and column `k` (1-based).
fn table_entry(n: u64, r: u32, lambda: u64, k: u32) -> Result<u64> {
    if k <= 2 {
        Ok(1)
    } else if k <= r + 2 {
        Ok(n / checked_mul(checked_pow(2, k - 3)?, lambda)? + 1)
    } else {
        Ok(n / checked_mul(checked_pow(2, r)?, lambda)?)
    }
}

/// Both parts of the order table for `T_{4n} x C_p`.
pub fn order_table(n: u64, p: u64) -> Result<(OrderTable, OrderTable)> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    if p < 2 {
        return Err(Error::InvalidSpec { n, m: p });
    }
    let (r, odd_part) = split_two_part(n)?;
    let columns = (0..=r + 2)
        .map(|e| checked_pow(2, e))
        .collect::<Result<Vec<_>>>()?;
    let mut rows = BTreeMap::new();
    for lambda in divisors(odd_part)? {
        let vals = (1..=r + 3)
            .map(|k| table_entry(n, r, lambda, k))
            .collect::<Result<Vec<_>>>()?;
        rows.insert(lambda, vals);
    }
    let mut column_sums = vec![0u64; columns.len()];
    for vals in rows.values() {
        for (s, v) in column_sums.iter_mut().zip(vals) {
            *s = checked_add(*s, *v)?;
        }
    }
    let first = OrderTable {
        part: TablePart::First,
        n,
        p,
        r,
        odd_part,
        columns,
        rows,
        column_sums,
    };
    let mut second = first.clone();
    second.part = TablePart::Second;
    second.rows = first
        .rows
        .iter()
        .map(|(&l, v)| Ok((checked_mul(p, l)?, v.clone())))
        .collect::<Result<_>>()?;
    Ok((first, second))
}
