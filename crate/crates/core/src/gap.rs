//! GAP scripts that recompute the subgroup or cyclic-subgroup count of
//! `T_{4n} x C_p` independently. They are only emitted, never run here.

use crate::error::Result;
use crate::group::GroupSpec;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScriptMode {
    /// Ends with `Size(s);`, the number of subgroups.
    Subgroups,
    /// Filters `s` with `IsCyclic` and ends with `Size(x);`.
    Cyclic,
}

pub fn gap_script(n: u64, p: u64, mode: ScriptMode) -> Result<String> {
    let spec = GroupSpec::new(n, p)?;
    let mut s = String::new();
    s.push_str(&format!(
        "# T_{} x C_{}, order {}\n",
        4 * n,
        p,
        spec.order()
    ));
    s.push_str(&format!("n:={n};\n"));
    s.push_str("F := FreeGroup( \"a\", \"b\" );\n");
    s.push_str("a := F.1;; b := F.2;;\n");
    s.push_str("T := F / [ a^(2*n), b^2/a^n, b^(-1)*a*b*a ];\n");
    s.push_str("i := IsomorphismPermGroup(T);;\n");
    s.push_str(&format!("c := CyclicGroup({p});\n"));
    s.push_str("Tc := DirectProduct(Image(i), Image(IsomorphismPermGroup(c)));;\n");
    s.push_str("s := AllSubgroups(Tc);;\n");
    match mode {
        ScriptMode::Subgroups => s.push_str("Size(s);\n"),
        ScriptMode::Cyclic => {
            s.push_str("x := [];;\n");
            s.push_str("for t in s do\n");
            s.push_str("  dd := IsCyclic(t);\n");
            s.push_str("  if dd = true then Add(x, t); fi;\n");
            s.push_str("od;\n");
            s.push_str("Size(x);\n");
        }
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn substitutes_parameters() {
        let s = gap_script(450, 7, ScriptMode::Subgroups).unwrap();
        assert!(s.contains("n:=450;"));
        assert!(s.contains("CyclicGroup(7)"));
        assert!(s.contains("T := F / [ a^(2*n), b^2/a^n, b^(-1)*a*b*a ];"));
        assert!(s.trim_end().ends_with("Size(s);"));
        assert!(!s.contains("IsCyclic"));

        assert!(gap_script(5, 3, ScriptMode::Subgroups)
            .unwrap()
            .contains("n:=5;"));

        let c = gap_script(450, 7, ScriptMode::Cyclic).unwrap();
        assert!(c.contains("IsCyclic(t)"));
        assert!(c.trim_end().ends_with("Size(x);"));
        assert!(gap_script(0, 7, ScriptMode::Cyclic).is_err());
    }
}
