//! Plain-text and computer-algebra renderings of presentations.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::presentations::Presentation;
use crate::words::Word;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum CasDialect {
    #[default]
    Gap,
    Magma,
}

impl FromStr for CasDialect {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "gap" => Ok(CasDialect::Gap),
            "magma" => Ok(CasDialect::Magma),
            other => Err(format!("unknown CAS dialect `{other}` (expected gap or magma)")),
        }
    }
}

/// `x*y^-2*z`, or `identity` for the empty word.
fn cas_word(w: &Word, identity: &str) -> String {
    if w.is_identity() {
        return identity.to_string();
    }
    w.letters()
        .iter()
        .map(|l| {
            let name = w.alphabet().name(l.symbol);
            if l.exponent == 1.into() {
                name.to_string()
            } else {
                format!("{name}^{}", l.exponent)
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

fn header(p: &Presentation, comment: &str) -> String {
    format!(
        "{comment} {} presentation, g = {}, r = {}: {} generators, {} relators\n",
        p.family(),
        p.genus(),
        p.boundary(),
        p.generators().len(),
        p.relators().len()
    )
}

/// GAP script defining `F`, the relator list `rels` and `G := F / rels`.
pub fn to_gap(p: &Presentation) -> String {
    let mut out = header(p, "#");
    let quoted: Vec<String> = p.generators().iter().map(|n| format!("\"{n}\"")).collect();
    writeln!(out, "F := FreeGroup({});;", quoted.join(", ")).unwrap();
    for (i, n) in p.generators().iter().enumerate() {
        writeln!(out, "{n} := F.{};;", i + 1).unwrap();
    }
    out.push_str("rels := [\n");
    let n = p.relators().len();
    for (i, r) in p.relators().iter().enumerate() {
        let sep = if i + 1 < n { "," } else { "" };
        writeln!(out, "  {}{sep} # {}", cas_word(&r.word, "One(F)"), r.label).unwrap();
    }
    out.push_str("];;\nG := F / rels;;\n");
    out
}

/// Magma script defining `F`, the relator list `rels` and `G := quo<F | rels>`.
pub fn to_magma(p: &Presentation) -> String {
    let mut out = header(p, "//");
    writeln!(
        out,
        "F<{}> := FreeGroup({});",
        p.generators().join(", "),
        p.generators().len()
    )
    .unwrap();
    out.push_str("rels := [\n");
    let n = p.relators().len();
    for (i, r) in p.relators().iter().enumerate() {
        let sep = if i + 1 < n { "," } else { "" };
        writeln!(out, "  {}{sep} // {}", cas_word(&r.word, "Id(F)"), r.label).unwrap();
    }
    out.push_str("];\nG := quo<F | rels>;\n");
    out
}

pub fn to_cas(p: &Presentation, dialect: CasDialect) -> String {
    match dialect {
        CasDialect::Gap => to_gap(p),
        CasDialect::Magma => to_magma(p),
    }
}

/// One relator per line, `label: word`.
pub fn to_text(p: &Presentation) -> String {
    p.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentations::build_genus2;

    #[test]
    fn gap_script_shape() {
        let s = to_gap(&build_genus2());
        assert!(s.starts_with("# genus2 presentation, g = 2, r = 0: 5 generators, 12 relators\n"));
        assert!(s.contains("F := FreeGroup(\"c1\", \"c2\", \"c3\", \"c4\", \"c5\");;\n"));
        assert!(s.contains("c5 := F.5;;\n"));
        assert!(s.contains("  c1*c3*c1^-1*c3^-1, # commute(c1,c3)\n"));
        assert!(s.ends_with("# hyperelliptic\n];;\nG := F / rels;;\n"));
    }

    #[test]
    fn magma_script_shape() {
        let s = to_magma(&build_genus2());
        assert!(s.contains("F<c1, c2, c3, c4, c5> := FreeGroup(5);\n"));
        assert!(s.contains("  c1*c2*c1*c2^-1*c1^-1*c2^-1, // braid(c1,c2)\n"));
        assert!(s.ends_with("];\nG := quo<F | rels>;\n"));
    }

    #[test]
    fn byte_stable() {
        let p = build_genus2();
        assert_eq!(to_gap(&p), to_gap(&build_genus2()));
        assert_eq!(to_magma(&p), to_magma(&build_genus2()));
    }

    #[test]
    fn dialect_parse() {
        assert_eq!("magma".parse::<CasDialect>().unwrap(), CasDialect::Magma);
        assert!("sage".parse::<CasDialect>().is_err());
    }
}
