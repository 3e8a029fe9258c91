//! Brute-force subgroup lattice: the ground truth every closed-form count
//! is checked against.
//!
//! The lattice is built by the cyclic-join fixpoint. Every subgroup is the
//! join of the cyclic subgroups generated by its elements, so starting from
//! all cyclic subgroups and repeatedly joining each newly found subgroup
//! with every cyclic subgroup reaches the whole lattice. Subgroups are
//! identified by their member bitset.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashSet, VecDeque};

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::group::{GroupElement, GroupSpec};

pub const DEFAULT_ORACLE_CAP: u64 = 2000;

/// Environment variable overriding [`DEFAULT_ORACLE_CAP`].
pub const CAP_ENV: &str = "TORSION_COUNT_CAP";

/// Order in which cyclic subgroups are joined onto each frontier subgroup.
/// The canonical result does not depend on it.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum JoinSchedule {
    #[default]
    Ascending,
    Descending,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    /// Largest group order the oracle will enumerate.
    pub cap: u64,
    pub execution: Execution,
    pub schedule: JoinSchedule,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            cap: DEFAULT_ORACLE_CAP,
            execution: Execution::default(),
            schedule: JoinSchedule::default(),
        }
    }
}

impl OracleConfig {
    /// Default config with the cap taken from `TORSION_COUNT_CAP` when set
    /// to a positive integer.
    pub fn from_env() -> Self {
        let cap = std::env::var(CAP_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<u64>().ok())
            .filter(|&c| c >= 1)
            .unwrap_or(DEFAULT_ORACLE_CAP);
        OracleConfig {
            cap,
            ..Self::default()
        }
    }

    pub fn with_cap(mut self, cap: u64) -> Self {
        self.cap = cap;
        self
    }

    pub fn with_execution(mut self, execution: Execution) -> Self {
        self.execution = execution;
        self
    }

    pub fn with_schedule(mut self, schedule: JoinSchedule) -> Self {
        self.schedule = schedule;
        self
    }

    pub(crate) fn admit(&self, spec: &GroupSpec) -> Result<()> {
        if spec.order() > self.cap {
            Err(Error::CapExceeded {
                order: spec.order(),
                cap: self.cap,
            })
        } else {
            Ok(())
        }
    }
}

/// A subgroup, stored as its member bitset plus a generating witness.
#[derive(Clone, Debug)]
pub struct Subgroup {
    members: ElementSet,
    order: u64,
    generators: Vec<GroupElement>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for Subgroup {}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical order: by order, then lexicographically by member indices.
impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order
            .cmp(&other.order)
            .then_with(|| self.members.cmp_members(&other.members))
    }
}

impl Subgroup {
    pub(crate) fn from_parts(members: ElementSet, generators: Vec<GroupElement>) -> Self {
        let order = members.len() as u64;
        Subgroup {
            members,
            order,
            generators,
        }
    }

    pub fn members(&self) -> &ElementSet {
        &self.members
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn generators(&self) -> &[GroupElement] {
        &self.generators
    }

    pub fn contains(&self, spec: &GroupSpec, g: &GroupElement) -> bool {
        spec.contains(g) && self.members.contains(spec.idx(g))
    }

    pub fn elements<'a>(&'a self, spec: &'a GroupSpec) -> impl Iterator<Item = GroupElement> + 'a {
        self.members.iter().map(move |idx| spec.at(idx))
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.members.is_subset(&other.members)
    }
}

/// All subgroups of a group, canonically ordered, with a per-order histogram.
#[derive(Clone, Debug)]
pub struct SubgroupLattice {
    spec: GroupSpec,
    subgroups: Vec<Subgroup>,
    histogram: BTreeMap<u64, usize>,
}

impl SubgroupLattice {
    fn new(spec: GroupSpec, mut subgroups: Vec<Subgroup>) -> Self {
        subgroups.sort();
        let mut histogram = BTreeMap::new();
        for s in &subgroups {
            *histogram.entry(s.order).or_insert(0) += 1;
        }
        SubgroupLattice {
            spec,
            subgroups,
            histogram,
        }
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn histogram(&self) -> &BTreeMap<u64, usize> {
        &self.histogram
    }

    pub fn cyclic(&self) -> impl Iterator<Item = &Subgroup> + '_ {
        self.subgroups
            .iter()
            .filter(move |s| is_cyclic(&self.spec, s))
    }

    pub fn cyclic_count(&self) -> usize {
        self.cyclic().count()
    }
}

fn check_gens(spec: &GroupSpec, gens: &[GroupElement]) -> Result<()> {
    if gens.iter().all(|g| spec.contains(g)) {
        Ok(())
    } else {
        Err(Error::MismatchedSpec)
    }
}

/// Breadth-first closure of `gens` under right multiplication. For a finite
/// group this is the generated subgroup.
pub(crate) fn closure_set(spec: &GroupSpec, gens: &[GroupElement]) -> ElementSet {
    let mut members = ElementSet::new(spec.order() as usize);
    let e = spec.identity();
    members.insert(spec.idx(&e));
    let mut queue = VecDeque::from([e]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = spec.mul(&x, g);
            if members.insert(spec.idx(&y)) {
                queue.push_back(y);
            }
        }
    }
    members
}

/// Smallest subgroup containing `gens`; the empty list gives `{e}`.
pub fn closure(spec: &GroupSpec, gens: &[GroupElement]) -> Result<Subgroup> {
    check_gens(spec, gens)?;
    Ok(Subgroup::from_parts(closure_set(spec, gens), gens.to_vec()))
}

/// `<H, c>`, built as a union of right cosets `H y` so each new coset costs
/// `|H|` multiplications.
fn join(spec: &GroupSpec, h: &Subgroup, c: &GroupElement) -> Subgroup {
    let mut gens = h.generators.clone();
    gens.push(*c);
    let h_elems: Vec<GroupElement> = h.elements(spec).collect();
    let mut members = h.members.clone();
    let mut reps = VecDeque::from([spec.identity()]);
    while let Some(y) = reps.pop_front() {
        for g in &gens {
            let z = spec.mul(&y, g);
            if members.contains(spec.idx(&z)) {
                continue;
            }
            for x in &h_elems {
                members.insert(spec.idx(&spec.mul(x, &z)));
            }
            reps.push_back(z);
        }
    }
    Subgroup::from_parts(members, gens)
}

fn cyclic_subgroups_unchecked(spec: &GroupSpec) -> Vec<Subgroup> {
    let size = spec.order() as usize;
    // elements already known to generate a found subgroup
    let mut covered = ElementSet::new(size);
    let mut out = Vec::new();
    for idx in 0..size {
        if covered.contains(idx) {
            continue;
        }
        let g = spec.at(idx);
        let d = spec.order_of(&g);
        let mut members = ElementSet::new(size);
        let mut x = spec.identity();
        for j in 0..d {
            members.insert(spec.idx(&x));
            if crate::numtheory::gcd(j, d) == 1 {
                covered.insert(spec.idx(&x));
            }
            x = spec.mul(&x, &g);
        }
        out.push(Subgroup::from_parts(members, vec![g]));
    }
    out.sort();
    out
}

/// Every subgroup generated by a single element, without duplicates,
/// canonically ordered.
pub fn cyclic_subgroups(spec: &GroupSpec, cfg: &OracleConfig) -> Result<Vec<Subgroup>> {
    cfg.admit(spec)?;
    Ok(cyclic_subgroups_unchecked(spec))
}

/// The complete subgroup lattice via the cyclic-join fixpoint.
pub fn all_subgroups(spec: &GroupSpec, cfg: &OracleConfig) -> Result<SubgroupLattice> {
    cfg.admit(spec)?;
    let mut cyclics = cyclic_subgroups_unchecked(spec);
    if cfg.schedule == JoinSchedule::Descending {
        cyclics.reverse();
    }
    let mut known: HashSet<ElementSet> = cyclics.iter().map(|c| c.members.clone()).collect();
    let mut all = cyclics.clone();
    let mut frontier = cyclics.clone();

    while !frontier.is_empty() {
        let batches = cfg.execution.map(&frontier, |h| {
            let mut local: HashSet<ElementSet> = HashSet::new();
            let mut found = Vec::new();
            for c in &cyclics {
                let gen = &c.generators[0];
                if h.members.contains(spec.idx(gen)) {
                    continue;
                }
                let j = join(spec, h, gen);
                if !known.contains(&j.members) && local.insert(j.members.clone()) {
                    found.push(j);
                }
            }
            found
        });
        let mut next = Vec::new();
        for s in batches.into_iter().flatten() {
            if known.insert(s.members.clone()) {
                next.push(s);
            }
        }
        all.extend(next.iter().cloned());
        frontier = next;
    }
    Ok(SubgroupLattice::new(*spec, all))
}

/// True iff some member generates the whole subgroup.
pub fn is_cyclic(spec: &GroupSpec, sub: &Subgroup) -> bool {
    sub.members
        .iter()
        .any(|idx| spec.order_of(&spec.at(idx)) == sub.order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numtheory::{sigma, tau};

    fn spec(n: u64, m: u64) -> GroupSpec {
        GroupSpec::new(n, m).unwrap()
    }

    fn cfg() -> OracleConfig {
        OracleConfig::default()
    }

    /// Closed under multiplication, checked pairwise.
    fn is_closed(spec: &GroupSpec, set: &ElementSet) -> bool {
        let elems: Vec<_> = set.iter().map(|i| spec.at(i)).collect();
        set.contains(0)
            && elems.iter().all(|x| {
                elems
                    .iter()
                    .all(|y| set.contains(spec.idx(&spec.mul(x, y))))
            })
    }

    #[test]
    fn closure_examples() {
        let s = spec(450, 7);
        let trivial = closure(&s, &[]).unwrap();
        assert_eq!(trivial.order(), 1);
        assert!(trivial.contains(&s, &s.identity()));

        let a2 = s.power(&s.a(), 2).unwrap();
        assert_eq!(closure(&s, &[a2]).unwrap().order(), 450);

        let an = s.power(&s.a(), 450).unwrap();
        let ab = s.multiply(&s.a(), &s.b()).unwrap();
        assert_eq!(closure(&s, &[an, ab]).unwrap().order(), 4);

        let other = spec(1, 1);
        assert_eq!(closure(&other, &[a2]).unwrap_err(), Error::MismatchedSpec);
    }

    #[test]
    fn join_agrees_with_plain_closure() {
        let s = spec(6, 5);
        let cyclics = cyclic_subgroups(&s, &cfg()).unwrap();
        for h in cyclics.iter().step_by(3) {
            for c in cyclics.iter().step_by(2) {
                let g = c.generators()[0];
                let j = join(&s, h, &g);
                let mut gens = h.generators().to_vec();
                gens.push(g);
                assert_eq!(j.members(), &closure_set(&s, &gens));
            }
        }
    }

    #[test]
    fn cyclic_subgroup_examples() {
        assert_eq!(cyclic_subgroups(&spec(1, 1), &cfg()).unwrap().len(), 3);
        let orders: Vec<u64> = cyclic_subgroups(&spec(1, 1), &cfg())
            .unwrap()
            .iter()
            .map(|s| s.order())
            .collect();
        assert_eq!(orders, vec![1, 2, 4]);
        assert_eq!(cyclic_subgroups(&spec(5, 3), &cfg()).unwrap().len(), 18);
    }

    #[test]
    fn dicyclic_twelve_has_seven_cyclic_subgroups() {
        // independent count: distinct <g> as sorted power lists
        let s = spec(3, 1);
        let mut seen = std::collections::BTreeSet::new();
        for g in s.elements() {
            let mut powers: Vec<usize> = (0..12).map(|e| s.idx(&s.power(&g, e).unwrap())).collect();
            powers.sort_unstable();
            powers.dedup();
            seen.insert(powers);
        }
        assert_eq!(seen.len(), 7);
        assert_eq!(cyclic_subgroups(&s, &cfg()).unwrap().len(), 7);
    }

    #[test]
    fn lattice_examples() {
        assert_eq!(all_subgroups(&spec(1, 3), &cfg()).unwrap().len(), 6);
        assert_eq!(all_subgroups(&spec(5, 3), &cfg()).unwrap().len(), 20);
        let q8 = all_subgroups(&spec(2, 1), &cfg()).unwrap();
        assert_eq!(q8.len(), 6);
        let hist: Vec<(u64, usize)> = q8.histogram().iter().map(|(&k, &v)| (k, v)).collect();
        assert_eq!(hist, vec![(1, 1), (2, 1), (4, 3), (8, 1)]);
    }

    #[test]
    fn cap_is_enforced() {
        let s = spec(450, 7);
        let err = all_subgroups(&s, &cfg()).unwrap_err();
        assert_eq!(
            err,
            Error::CapExceeded {
                order: 12600,
                cap: 2000
            }
        );
        assert!(err.is_resource());
        assert!(cyclic_subgroups(&s, &cfg()).is_err());
        assert!(all_subgroups(&spec(5, 3), &cfg().with_cap(59)).is_err());
        assert!(all_subgroups(&spec(5, 3), &cfg().with_cap(60)).is_ok());
    }

    #[test]
    fn is_cyclic_examples() {
        let s = spec(450, 7);
        assert!(is_cyclic(&s, &closure(&s, &[]).unwrap()));
        assert!(!is_cyclic(&s, &closure(&s, &[s.a(), s.b()]).unwrap()));
        let an = s.power(&s.a(), 450).unwrap();
        let ab = s.multiply(&s.a(), &s.b()).unwrap();
        assert!(is_cyclic(&s, &closure(&s, &[an, ab]).unwrap()));
    }

    #[test]
    fn lattice_members_are_subgroups() {
        for (n, m) in [
            (1, 1),
            (2, 1),
            (3, 1),
            (4, 3),
            (6, 5),
            (2, 9),
            (3, 3),
            (4, 2),
        ] {
            let s = spec(n, m);
            let lat = all_subgroups(&s, &cfg()).unwrap();
            assert_eq!(lat.histogram().values().sum::<usize>(), lat.len());
            assert_eq!(lat.subgroups()[0].order(), 1);
            assert_eq!(lat.subgroups().last().unwrap().order(), s.order());
            let mut distinct = HashSet::new();
            for sub in lat.subgroups() {
                assert!(distinct.insert(sub.members().clone()));
                assert!(is_closed(&s, sub.members()), "{s}");
                assert_eq!(&closure_set(&s, sub.generators()), sub.members());
                assert_eq!(s.order() % sub.order(), 0);
            }
        }
    }

    #[test]
    fn schedules_and_strategies_agree() {
        let s = spec(6, 5);
        let base = all_subgroups(&s, &cfg()).unwrap();
        for c in [
            cfg().with_schedule(JoinSchedule::Descending),
            cfg().with_execution(Execution::Sequential),
            cfg()
                .with_execution(Execution::Sequential)
                .with_schedule(JoinSchedule::Descending),
        ] {
            let other = all_subgroups(&s, &c).unwrap();
            assert_eq!(base.len(), other.len());
            for (a, b) in base.subgroups().iter().zip(other.subgroups()) {
                assert_eq!(a.members(), b.members());
            }
        }
    }

    #[test]
    fn dicyclic_lattice_size() {
        for n in 1..=30u64 {
            let lat = all_subgroups(&spec(n, 1), &cfg()).unwrap();
            let expected = tau(2 * n).unwrap() + sigma(n).unwrap();
            assert_eq!(lat.len() as u64, expected, "n={n}");
        }
    }
}
