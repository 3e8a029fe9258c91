//! Which family members are cyclic, and cyclicizers:
//! `Cyc(x) = { y : <x, y> is cyclic }` and their intersection over the group.

use serde::{Deserialize, Serialize};

use crate::bitset::ElementSet;
use crate::error::Result;
use crate::families::{Family, FamilyDescriptor};
use crate::group::{GroupElement, GroupSpec};
use crate::lattice::{closure_set, cyclic_subgroups, OracleConfig, Subgroup};
use crate::numtheory::gcd;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclicType {
    pub is_cyclic: bool,
    pub order: u64,
    /// `C_k` when cyclic.
    pub label: Option<String>,
}

impl CyclicType {
    fn new(is_cyclic: bool, order: u64) -> Self {
        CyclicType {
            is_cyclic,
            order,
            label: is_cyclic.then(|| format!("C_{order}")),
        }
    }
}

/// Closed-form cyclicity of a family member.
///
/// `H1` is always cyclic. `H2(i, j)` is dicyclic of order `4n/i`, cyclic
/// only at `i = n` where it is `<a^j b>`. `H3` is `<a^i> x C_m`, cyclic
/// when `2n/i` is prime to `m`. `H4` is `H2 x C_m`, cyclic when `H2` is and
/// `m` is odd.
pub fn classify_family_member(spec: &GroupSpec, desc: &FamilyDescriptor) -> CyclicType {
    let (n, m) = (spec.n(), spec.m());
    let cyclic = match desc.family {
        Family::H1 => true,
        Family::H2 => desc.i == n,
        Family::H3 => gcd(spec.two_n() / desc.i, m) == 1,
        Family::H4 => desc.i == n && m % 2 == 1,
    };
    CyclicType::new(cyclic, desc.expected_order)
}

/// The cyclic type as printed for the `c` families: `C_{np/i}` for
/// `<a^i, c>` and `C_{2p}` for `<a^n, a^j b, c>`.
pub fn printed_order(spec: &GroupSpec, desc: &FamilyDescriptor) -> Option<u64> {
    match desc.family {
        Family::H3 => Some(spec.n() * spec.m() / desc.i),
        Family::H4 if desc.i == spec.n() => Some(2 * spec.m()),
        _ => None,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicizerSet {
    /// `None` for the intersection over the whole group.
    pub base: Option<GroupElement>,
    pub members: ElementSet,
    pub is_subgroup: bool,
}

impl CyclicizerSet {
    fn new(spec: &GroupSpec, base: Option<GroupElement>, members: ElementSet) -> Self {
        let is_subgroup = is_closed_subset(spec, &members);
        CyclicizerSet {
            base,
            members,
            is_subgroup,
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn elements(&self, spec: &GroupSpec) -> Vec<GroupElement> {
        self.members
            .iter()
            .map(|i| spec.element_at(i).expect("index in range"))
            .collect()
    }

    pub fn summary(&self, spec: &GroupSpec) -> CyclicizerSummary {
        CyclicizerSummary {
            base: self.base.map(|b| b.to_string()),
            size: self.len(),
            is_subgroup: self.is_subgroup,
            members: self.elements(spec).iter().map(|g| g.to_string()).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclicizerSummary {
    pub base: Option<String>,
    pub size: usize,
    pub is_subgroup: bool,
    pub members: Vec<String>,
}

/// A nonempty finite subset closed under multiplication is a subgroup.
fn is_closed_subset(spec: &GroupSpec, set: &ElementSet) -> bool {
    if !set.contains(0) {
        return false;
    }
    let elems: Vec<GroupElement> = set.iter().map(|i| spec.at(i)).collect();
    elems.iter().all(|x| {
        elems
            .iter()
            .all(|y| set.contains(spec.idx(&spec.mul(x, y))))
    })
}

fn set_is_cyclic(spec: &GroupSpec, set: &ElementSet) -> bool {
    let size = set.len() as u64;
    set.iter().any(|i| spec.order_of(&spec.at(i)) == size)
}

/// Cyclicizer of `x`, testing `<x, y>` for every `y` directly.
pub fn cyclicizer(spec: &GroupSpec, x: &GroupElement, cfg: &OracleConfig) -> Result<CyclicizerSet> {
    cfg.admit(spec)?;
    if !spec.contains(x) {
        return Err(crate::Error::MismatchedSpec);
    }
    let size = spec.order() as usize;
    let hits = cfg.execution.map_range(size, |idx| {
        let y = spec.at(idx);
        set_is_cyclic(spec, &closure_set(spec, &[*x, y]))
    });
    let mut members = ElementSet::new(size);
    for (idx, hit) in hits.into_iter().enumerate() {
        if hit {
            members.insert(idx);
        }
    }
    Ok(CyclicizerSet::new(spec, Some(*x), members))
}

/// Union of the cyclic subgroups containing `x`. Equal to [`cyclicizer`]:
/// `<x, y>` is cyclic iff `x` and `y` lie in a common cyclic subgroup.
fn cover_members(spec: &GroupSpec, x: &GroupElement, cyclics: &[Subgroup]) -> ElementSet {
    let idx = spec.idx(x);
    let mut members = ElementSet::new(spec.order() as usize);
    for c in cyclics.iter().filter(|c| c.members().contains(idx)) {
        members.union_with(c.members());
    }
    members
}

/// Cyclicizer of `x` computed from the cyclic subgroups.
pub fn cyclicizer_by_cover(
    spec: &GroupSpec,
    x: &GroupElement,
    cfg: &OracleConfig,
) -> Result<CyclicizerSet> {
    let cyclics = cyclic_subgroups(spec, cfg)?;
    if !spec.contains(x) {
        return Err(crate::Error::MismatchedSpec);
    }
    Ok(CyclicizerSet::new(
        spec,
        Some(*x),
        cover_members(spec, x, &cyclics),
    ))
}

fn all_cover_members(spec: &GroupSpec, cfg: &OracleConfig) -> Result<Vec<ElementSet>> {
    let cyclics = cyclic_subgroups(spec, cfg)?;
    Ok(cfg.execution.map_range(spec.order() as usize, |idx| {
        cover_members(spec, &spec.at(idx), &cyclics)
    }))
}

/// Intersection of all cyclicizers.
pub fn cyclicizer_core(spec: &GroupSpec, cfg: &OracleConfig) -> Result<CyclicizerSet> {
    let mut core = ElementSet::full(spec.order() as usize);
    for set in all_cover_members(spec, cfg)? {
        core.intersect_with(&set);
    }
    Ok(CyclicizerSet::new(spec, None, core))
}

/// Evaluation of "every cyclicizer is a subgroup iff the group is cyclic".
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclicizerSubgroupCheck {
    pub n: u64,
    pub m: u64,
    pub all_cyclicizers_are_subgroups: bool,
    pub group_is_cyclic: bool,
    /// First element (in index order) whose cyclicizer is not a subgroup.
    pub counterexample: Option<String>,
    pub biconditional_holds: bool,
    pub notes: String,
}

pub fn prop46_check(spec: &GroupSpec, cfg: &OracleConfig) -> Result<CyclicizerSubgroupCheck> {
    let sets = all_cover_members(spec, cfg)?;
    let closed = cfg.execution.map(&sets, |s| is_closed_subset(spec, s));
    let counterexample = closed.iter().position(|&ok| !ok).map(|idx| spec.at(idx));
    let all_subgroups = counterexample.is_none();
    let group_is_cyclic = spec.elements().any(|g| spec.order_of(&g) == spec.order());
    let biconditional_holds = all_subgroups == group_is_cyclic;
    let notes = match (all_subgroups, group_is_cyclic) {
        (true, false) => {
            "every cyclicizer is a subgroup but the group is not cyclic: the 'only if' direction fails".to_string()
        }
        (false, true) => "cyclic group with a non-subgroup cyclicizer: the 'if' direction fails".to_string(),
        (false, false) => "some cyclicizer is not a subgroup and the group is not cyclic".to_string(),
        (true, true) => "cyclic group, every cyclicizer is the whole group".to_string(),
    };
    Ok(CyclicizerSubgroupCheck {
        n: spec.n(),
        m: spec.m(),
        all_cyclicizers_are_subgroups: all_subgroups,
        group_is_cyclic,
        counterexample: counterexample.map(|g| g.to_string()),
        biconditional_holds,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::family_descriptors;
    use crate::lattice::closure;

    fn spec(n: u64, m: u64) -> GroupSpec {
        GroupSpec::new(n, m).unwrap()
    }

    fn cfg() -> OracleConfig {
        OracleConfig::default()
    }

    fn members(set: &CyclicizerSet, s: &GroupSpec) -> Vec<GroupElement> {
        set.elements(s)
    }

    #[test]
    fn flagship_classification() {
        let s = spec(450, 7);
        let d = family_descriptors(&s).unwrap();
        let find = |f: Family, i: u64, j: Option<u64>| {
            *d.iter()
                .find(|x| x.family == f && x.i == i && x.j == j)
                .unwrap()
        };

        let t = classify_family_member(&s, &find(Family::H1, 2, None));
        assert_eq!((t.is_cyclic, t.label.as_deref()), (true, Some("C_450")));
        let t = classify_family_member(&s, &find(Family::H2, 450, Some(1)));
        assert_eq!((t.is_cyclic, t.label.as_deref()), (true, Some("C_4")));
        let t = classify_family_member(&s, &find(Family::H3, 1, None));
        assert_eq!((t.is_cyclic, t.order), (true, 6300));
        let t = classify_family_member(&s, &find(Family::H4, 450, Some(3)));
        assert_eq!((t.is_cyclic, t.order), (true, 28));
        let t = classify_family_member(&s, &find(Family::H2, 225, Some(1)));
        assert!(!t.is_cyclic && t.label.is_none());

        assert_eq!(printed_order(&s, &find(Family::H3, 1, None)), Some(3150));
        assert_eq!(printed_order(&s, &find(Family::H4, 450, Some(1))), Some(14));
    }

    #[test]
    fn classification_matches_closure_for_any_m() {
        for (n, m) in [(1, 1), (3, 1), (4, 3), (6, 3), (5, 9), (2, 4), (6, 5)] {
            let s = spec(n, m);
            for d in family_descriptors(&s).unwrap() {
                let sub = closure(&s, &d.generators(&s)).unwrap();
                let t = classify_family_member(&s, &d);
                assert_eq!(t.order, sub.order());
                assert_eq!(
                    t.is_cyclic,
                    crate::lattice::is_cyclic(&s, &sub),
                    "{s} {d:?}"
                );
            }
        }
    }

    #[test]
    fn identity_cyclicizer_is_whole_group() {
        for (n, m) in [(1, 1), (2, 1), (3, 1), (5, 3), (4, 7), (6, 5)] {
            let s = spec(n, m);
            let c = cyclicizer(&s, &s.identity(), &cfg()).unwrap();
            assert_eq!(c.len() as u64, s.order());
            assert!(c.is_subgroup);
        }
    }

    #[test]
    fn cyclic_group_cyclicizers_are_whole_group() {
        let s = spec(1, 3);
        for x in s.elements() {
            assert_eq!(cyclicizer(&s, &x, &cfg()).unwrap().len(), 12);
        }
        assert_eq!(cyclicizer_core(&s, &cfg()).unwrap().len(), 12);
        let r = prop46_check(&s, &cfg()).unwrap();
        assert!(r.all_cyclicizers_are_subgroups && r.group_is_cyclic && r.biconditional_holds);
    }

    #[test]
    fn quaternion_cyclicizers() {
        let s = spec(2, 1);
        let c = cyclicizer(&s, &s.a(), &cfg()).unwrap();
        let expected: Vec<GroupElement> = (0..4).map(|i| s.word(i, false, 0)).collect();
        assert_eq!(members(&c, &s), expected);
        assert!(c.is_subgroup);

        let core = cyclicizer_core(&s, &cfg()).unwrap();
        assert_eq!(members(&core, &s), vec![s.identity(), s.word(2, false, 0)]);

        let r = prop46_check(&s, &cfg()).unwrap();
        assert!(r.all_cyclicizers_are_subgroups);
        assert!(!r.group_is_cyclic);
        assert!(!r.biconditional_holds);
        assert_eq!(r.counterexample, None);
    }

    #[test]
    fn dicyclic_twelve_core_is_center() {
        // brute force: y is in the core iff <x, y> is cyclic for all x
        let s = spec(3, 1);
        let brute: Vec<GroupElement> = s
            .elements()
            .filter(|y| {
                s.elements().all(|x| {
                    let sub = closure(&s, &[x, *y]).unwrap();
                    crate::lattice::is_cyclic(&s, &sub)
                })
            })
            .collect();
        assert_eq!(brute, vec![s.identity(), s.word(3, false, 0)]);
        let core = cyclicizer_core(&s, &cfg()).unwrap();
        assert_eq!(members(&core, &s), brute);

        let r = prop46_check(&s, &cfg()).unwrap();
        assert!(r.all_cyclicizers_are_subgroups);
        assert!(!r.group_is_cyclic);
    }

    #[test]
    fn cover_route_matches_direct_route() {
        for (n, m) in [(2, 1), (3, 1), (4, 3), (3, 5), (6, 3), (2, 9)] {
            let s = spec(n, m);
            for x in s.elements() {
                let a = cyclicizer(&s, &x, &cfg()).unwrap();
                let b = cyclicizer_by_cover(&s, &x, &cfg()).unwrap();
                assert_eq!(a, b, "{s} {x}");
            }
        }
    }

    #[test]
    fn cyclicizer_properties() {
        for (n, m) in [(3, 1), (4, 3), (6, 5)] {
            let s = spec(n, m);
            let sets: Vec<CyclicizerSet> = s
                .elements()
                .map(|x| cyclicizer_by_cover(&s, &x, &cfg()).unwrap())
                .collect();
            for (xi, set) in sets.iter().enumerate() {
                let x = s.at(xi);
                let gen = closure(&s, &[x]).unwrap();
                assert!(gen.members().is_subset(&set.members));
                assert!(set.members.contains(0));
                for yi in set.members.iter() {
                    assert!(sets[yi].members.contains(xi), "symmetry {s}");
                }
            }
        }
    }

    #[test]
    fn cap_applies() {
        let s = spec(450, 7);
        assert!(cyclicizer(&s, &s.a(), &cfg()).unwrap_err().is_resource());
        assert!(cyclicizer_core(&s, &cfg()).is_err());
        assert!(prop46_check(&s, &cfg()).is_err());
    }
}
