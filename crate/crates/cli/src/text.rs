//! Human-readable renderings.

use std::fmt::Write;

use torsion_core::cyclic::CyclicizerSubgroupCheck;
use torsion_core::errata::Status;
use torsion_core::families::{Family, OrderTable, TablePart};
use torsion_core::formulas::{CountReport, Verdict};
use torsion_core::sweep::SweepReport;

use crate::report::{CountOutput, CyclicizerOutput, EnumerateOutput, TableOutput};

fn group_name(n: u64, m: u64) -> String {
    if m == 1 {
        format!("T_{}", 4 * n)
    } else {
        format!("T_{} x C_{m}", 4 * n)
    }
}

fn subgroups(k: usize) -> String {
    if k == 1 {
        "1 subgroup".to_string()
    } else {
        format!("{k} subgroups")
    }
}

fn oracle_cell(r: &CountReport, order: u64, cap: u64) -> String {
    match (r.oracle, r.verdict) {
        (Some(o), Verdict::Match) => format!("oracle {o}, match"),
        (Some(o), _) => format!("oracle {o}, MISMATCH"),
        (None, _) => format!("oracle skipped (order {order} > cap {cap})"),
    }
}

pub fn count(o: &CountOutput) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{}, order {}", group_name(o.n, o.p), o.group_order);
    for (label, r) in [("subgroups", &o.subgroups), ("cyclic subgroups", &o.cyclic)] {
        let _ = writeln!(
            s,
            "{label:<17} {:>8}   {}   {}",
            r.closed_form,
            r.paper_ref,
            oracle_cell(r, o.group_order, o.cap)
        );
    }
    let f = &o.families;
    let _ = writeln!(
        s,
        "families          H1 {}, H2 {}, H3 {}, H4 {}, total {}",
        f.h1, f.h2, f.h3, f.h4, f.total
    );
    for r in [&o.subgroups, &o.cyclic] {
        if !r.notes.is_empty() {
            let _ = writeln!(s, "note: {}", r.notes);
        }
    }
    s
}

fn family_heading(f: Family) -> &'static str {
    match f {
        Family::H1 => "H1 = ⟨a^i⟩, i | 2n",
        Family::H2 => "H2 = ⟨a^i, a^j b⟩, i | n, 1 <= j <= i",
        Family::H3 => "H3 = ⟨a^i, c⟩, i | 2n",
        Family::H4 => "H4 = ⟨a^i, a^j b, c⟩, i | n, 1 <= j <= i",
    }
}

pub fn enumerate(o: &EnumerateOutput) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{}, order {}: {} subgroups",
        group_name(o.n, o.p),
        o.group_order,
        o.families.total
    );
    let width = o
        .subgroups
        .iter()
        .map(|r| r.generators.chars().count())
        .max()
        .unwrap_or(0);
    let mut family = None;
    let mut current_i = None;
    for r in &o.subgroups {
        if family != Some(r.family) {
            family = Some(r.family);
            current_i = None;
            let size = o.subgroups.iter().filter(|x| x.family == r.family).count();
            let _ = writeln!(s, "\n{}  ({})", family_heading(r.family), subgroups(size));
        }
        let indent = if r.family.has_b() {
            if current_i != Some(r.i) {
                current_i = Some(r.i);
                let _ = writeln!(
                    s,
                    "  i = {}, order {}, {}",
                    r.i,
                    r.order,
                    subgroups(r.i as usize)
                );
            }
            "    "
        } else {
            "  "
        };
        let pad = width - r.generators.chars().count();
        let _ = write!(
            s,
            "{indent}{}{}  {:>8}",
            r.generators,
            " ".repeat(pad),
            r.order
        );
        if let Some(t) = &r.cyclic_type {
            let _ = write!(s, "  {t}");
        }
        if r.materialized_order.is_some() {
            let _ = write!(s, "  closed");
        }
        s.push('\n');
    }
    s
}

fn table_part(s: &mut String, t: &OrderTable) {
    let title = match t.part {
        TablePart::First => "orders lambda 2^(k-1), lambda | odd part of n",
        TablePart::Second => "orders p lambda 2^(k-1), lambda | odd part of n",
    };
    let _ = writeln!(s, "{title}");
    let label_w = t
        .rows
        .keys()
        .map(|k| k.to_string().len())
        .max()
        .unwrap_or(1)
        .max(3);
    let cell_w = t
        .rows
        .values()
        .chain(std::iter::once(&t.column_sums))
        .flatten()
        .map(|v| v.to_string().len())
        .max()
        .unwrap_or(1)
        .max(4);
    let _ = write!(s, "{:>label_w$}", "k");
    for k in 1..=t.columns.len() {
        let _ = write!(s, " {k:>cell_w$}");
    }
    let _ = write!(s, "\n{:>label_w$}", "*");
    for c in &t.columns {
        let _ = write!(s, " {c:>cell_w$}");
    }
    s.push('\n');
    for (row, vals) in &t.rows {
        let _ = write!(s, "{row:>label_w$}");
        for v in vals {
            let _ = write!(s, " {v:>cell_w$}");
        }
        s.push('\n');
    }
    let _ = write!(s, "{:>label_w$}", "sum");
    for v in &t.column_sums {
        let _ = write!(s, " {v:>cell_w$}");
    }
    s.push('\n');
}

pub fn table(o: &TableOutput) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{}, {} subgroups", group_name(o.n, o.p), o.total);
    for t in &o.parts {
        s.push('\n');
        table_part(&mut s, t);
    }
    s
}

fn flag(v: Option<bool>) -> &'static str {
    match v {
        Some(true) => "ok",
        Some(false) => "FAIL",
        None => "-",
    }
}

pub fn verify(r: &SweepReport) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "sweep over {} values of n, p in {:?}, cap {}",
        r.ns.len(),
        r.ps,
        r.cap
    );
    let _ = writeln!(
        s,
        "{:>5} {:>4} {:>7} {:>7} {:>7} {:>7} {:>7}  {:<8} cyclic",
        "n", "p", "order", "NS", "oracle", "CyS", "oracle", "families"
    );
    for pt in &r.points {
        let o = |i: usize| {
            pt.reports[i]
                .oracle
                .map_or("-".to_string(), |v| v.to_string())
        };
        let _ = writeln!(
            s,
            "{:>5} {:>4} {:>7} {:>7} {:>7} {:>7} {:>7}  {:<8} {}{}",
            pt.n,
            pt.p,
            pt.group_order,
            pt.reports[0].closed_form,
            o(0),
            pt.reports[1].closed_form,
            o(1),
            flag(pt.families_match_lattice),
            flag(pt.cyclic_classification_ok),
            if pt.passed() { "" } else { "  MISMATCH" }
        );
    }
    if !r.skipped.is_empty() {
        let _ = writeln!(s, "\nskipped:");
        for sk in &r.skipped {
            let _ = writeln!(s, "  n={} p={}: {}", sk.n, sk.p, sk.reason);
        }
    }
    let _ = writeln!(s, "\nerrata:");
    for e in &r.errata {
        let at = match (e.n, e.p) {
            (Some(n), Some(p)) => format!(" (n={n}, p={p})"),
            _ => String::new(),
        };
        let status = match e.status {
            Status::Contradicted => "contradicted",
            Status::Holds => "holds",
        };
        let _ = writeln!(s, "  [{status}] {}{at}", e.id);
        let _ = writeln!(s, "      claim:    {}", e.claim);
        let _ = writeln!(s, "      observed: {}", e.observed);
    }
    let _ = writeln!(s, "\nresult: {}", if r.passed { "PASS" } else { "FAIL" });
    s
}

pub fn prop46(c: &CyclicizerSubgroupCheck) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{}", group_name(c.n, c.m));
    let _ = writeln!(
        s,
        "every cyclicizer is a subgroup: {}",
        c.all_cyclicizers_are_subgroups
    );
    let _ = writeln!(s, "group is cyclic:                {}", c.group_is_cyclic);
    if let Some(x) = &c.counterexample {
        let _ = writeln!(s, "first non-subgroup cyclicizer:  Cyc({x})");
    }
    let _ = writeln!(
        s,
        "biconditional holds:            {}",
        c.biconditional_holds
    );
    let _ = writeln!(s, "{}", c.notes);
    s
}

pub fn cyclicizer(o: &CyclicizerOutput) -> String {
    let c = &o.cyclicizer;
    let mut s = String::new();
    let what = match &c.base {
        Some(b) => format!("Cyc({b})"),
        None => "Cyc(G), the intersection of all cyclicizers".to_string(),
    };
    let _ = writeln!(s, "{}, order {}", group_name(o.n, o.m), o.group_order);
    let _ = writeln!(
        s,
        "{what}: {} elements, subgroup: {}",
        c.size, c.is_subgroup
    );
    let _ = writeln!(s, "{{{}}}", c.members.join(", "));
    s
}
