//! Printed claims that the computations here contradict, each stated next
//! to the value actually computed.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::families::{Family, FamilyDescriptor};
use crate::formulas::{
    compare_ns_cys, count_cyclic_closed, gap_t_prime, gap_t_two_power, Direction, Quantity,
    NS_CYS_CLAIM,
};
use crate::group::GroupSpec;
use crate::lattice::{closure, is_cyclic, OracleConfig};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Contradicted,
    Holds,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Erratum {
    pub id: String,
    pub n: Option<u64>,
    pub p: Option<u64>,
    pub claim: String,
    pub observed: String,
    pub status: Status,
}

/// Counts printed in the worked `n = 450, p = 7` example.
pub fn printed_count(quantity: Quantity, n: u64, p: u64) -> Option<i64> {
    match (quantity, n, p) {
        (Quantity::Subgroups, 450, 7) => Some(2472),
        (Quantity::CyclicSubgroups, 450, 7) => Some(2472),
        _ => None,
    }
}

/// `NS <= CyS` for one `(n, p)`: holds with equality at `n = 1`, fails
/// for every `n > 1` because `sigma(n) > n`.
pub fn ns_cys_direction(n: u64, p: u64) -> Result<Erratum> {
    let c = compare_ns_cys(n, p)?;
    let (status, observed) = match c.direction {
        Direction::Equal => (Status::Holds, format!("equality case: NS = CyS = {}", c.subgroups)),
        Direction::Less => (Status::Holds, format!("NS = {} < CyS = {}", c.subgroups, c.cyclic)),
        Direction::Greater => (
            Status::Contradicted,
            format!(
                "NS = {} > CyS = {} since sigma(n) = {} > n = {}; the argument's conclusion sigma(n) < n is false",
                c.subgroups, c.cyclic, c.sigma_n, n
            ),
        ),
    };
    Ok(Erratum {
        id: "ns-vs-cys-direction".into(),
        n: Some(n),
        p: Some(p),
        claim: NS_CYS_CLAIM.into(),
        observed,
        status,
    })
}

/// Final formula for `t` at `n = 2^r` against the direct value.
pub fn two_power_formula(r: u32, p: u64) -> Result<Erratum> {
    let c = gap_t_two_power(r, p)?;
    let status = if c.formula == c.direct {
        Status::Holds
    } else {
        Status::Contradicted
    };
    Ok(Erratum {
        id: "two-power-gap-formula".into(),
        n: Some(c.n),
        p: Some(p),
        claim: c.paper_ref.clone(),
        observed: format!(
            "formula gives {}, direct 4np - CyS gives {}, derivation line t = 2^(r+2)p - 2((r+2) + 2^r) gives {}",
            c.formula,
            c.direct,
            c.derivation.unwrap_or(c.direct)
        ),
        status,
    })
}

fn worked_example_cyclic_count() -> Result<Erratum> {
    let printed = printed_count(Quantity::CyclicSubgroups, 450, 7).unwrap_or_default();
    let formula = count_cyclic_closed(450, 7)?;
    Ok(Erratum {
        id: "worked-example-cyclic-count".into(),
        n: Some(450),
        p: Some(7),
        claim: format!("T_1800 x C_7 has {printed} cyclic subgroups"),
        observed: format!(
            "tau(7)(tau(900) + 450) = {formula}; the printed cyclic tables repeat the subgroup tables"
        ),
        status: Status::Contradicted,
    })
}

fn printed_cyclic_types() -> Result<Vec<Erratum>> {
    let spec = GroupSpec::new(450, 7)?;
    let h3 = FamilyDescriptor {
        family: Family::H3,
        i: 1,
        j: None,
        expected_order: 6300,
    };
    let h4 = FamilyDescriptor {
        family: Family::H4,
        i: 450,
        j: Some(1),
        expected_order: 28,
    };
    let mut out = Vec::new();
    for (desc, claim) in [
        (h3, "<a^i, c> is cyclic of type C_{np/i}"),
        (h4, "<a^n, a^j b, c> is cyclic of type C_{2p}"),
    ] {
        let sub = closure(&spec, &desc.generators(&spec))?;
        let printed = crate::cyclic::printed_order(&spec, &desc).unwrap_or_default();
        out.push(Erratum {
            id: format!("cyclic-type-{}", desc.family.to_string().to_lowercase()),
            n: Some(450),
            p: Some(7),
            claim: claim.into(),
            observed: format!(
                "{} has order {} (cyclic: {}), printed type has order {printed}",
                desc.render(&spec),
                sub.order(),
                is_cyclic(&spec, &sub)
            ),
            status: if sub.order() == printed {
                Status::Holds
            } else {
                Status::Contradicted
            },
        });
    }
    Ok(out)
}

fn cyclicizer_subgroup_claim() -> Result<Erratum> {
    let q8 = GroupSpec::new(2, 1)?;
    let r = crate::cyclic::prop46_check(&q8, &OracleConfig::default())?;
    Ok(Erratum {
        id: "cyclicizer-subgroup-iff-cyclic".into(),
        n: Some(2),
        p: Some(1),
        claim: "the cyclicizer of every element is a subgroup iff the group is cyclic".into(),
        observed: format!(
            "Q_8: all cyclicizers are subgroups = {}, group cyclic = {}",
            r.all_cyclicizers_are_subgroups, r.group_is_cyclic
        ),
        status: if r.biconditional_holds {
            Status::Holds
        } else {
            Status::Contradicted
        },
    })
}

fn gap_headline() -> Result<Erratum> {
    let (q, p) = (5u64, 3u64);
    let c = gap_t_prime(q, p)?;
    let cys = count_cyclic_closed(q, p)? as i64;
    let as_printed = (4 * p * q) as i64 - 2 * q as i64 * (2 * p as i64 - 1) - 8;
    Ok(Erratum {
        id: "gap-headline-parenthesization".into(),
        n: Some(q),
        p: Some(p),
        claim: "CyS(T_4n x C_p) = 4pq - 2q(2p - 1) - 8 for n = q".into(),
        observed: format!(
            "as printed this is {as_printed} at q=5, p=3; CyS = 4pq - t = {} - {} = {cys}",
            4 * p * q,
            c.formula
        ),
        status: if as_printed == cys {
            Status::Holds
        } else {
            Status::Contradicted
        },
    })
}

/// Errata independent of any sweep point.
pub fn fixed_errata() -> Result<Vec<Erratum>> {
    let mut out = vec![worked_example_cyclic_count()?];
    out.extend(printed_cyclic_types()?);
    out.push(cyclicizer_subgroup_claim()?);
    out.push(gap_headline()?);
    Ok(out)
}

/// Errata tied to one valid `(n, p)`.
pub fn point_errata(n: u64, p: u64) -> Result<Vec<Erratum>> {
    let mut out = vec![ns_cys_direction(n, p)?];
    if n > 1 && n.is_power_of_two() {
        out.push(two_power_formula(n.trailing_zeros(), p)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn direction_errata() {
        let e = ns_cys_direction(1, 3).unwrap();
        assert_eq!(e.status, Status::Holds);
        assert!(e.observed.contains("equality"));
        for n in 2..=30 {
            let p = [3, 5, 7].into_iter().find(|p| n % p != 0).unwrap();
            let e = ns_cys_direction(n, p).unwrap();
            assert_eq!(e.status, Status::Contradicted, "n={n}");
        }
    }

    #[test]
    fn two_power_erratum() {
        let e = two_power_formula(1, 3).unwrap();
        assert_eq!(e.status, Status::Contradicted);
        assert!(e.observed.contains("formula gives 16"));
        assert!(e.observed.contains("direct 4np - CyS gives 14"));
        assert_eq!(point_errata(8, 3).unwrap().len(), 2);
        assert_eq!(point_errata(6, 5).unwrap().len(), 1);
    }

    #[test]
    fn fixed_errata_are_all_contradicted() {
        let all = fixed_errata().unwrap();
        let ids: Vec<&str> = all.iter().map(|e| e.id.as_str()).collect();
        assert_eq!(
            ids,
            vec![
                "worked-example-cyclic-count",
                "cyclic-type-h3",
                "cyclic-type-h4",
                "cyclicizer-subgroup-iff-cyclic",
                "gap-headline-parenthesization"
            ]
        );
        assert!(all.iter().all(|e| e.status == Status::Contradicted));
        assert!(all[1].observed.contains("order 6300"));
        assert!(all[2].observed.contains("order 28"));
        assert!(all[4].observed.contains("as printed this is 2"));
    }
}
