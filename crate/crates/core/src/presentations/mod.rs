//! Presentation builders for the three supported families.

mod genus2;
mod gervais;
mod library;
mod table;
mod wajnryb;

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};
use thiserror::Error;

use crate::words::{Alphabet, Word, WordError};

pub use genus2::{build_genus2, build_genus2_with_table};
pub use gervais::{build_gervais_lift, build_gervais_lift_with_table, gervais_symbols};
pub use library::relator_library;
pub use table::{Incidence, IntersectionTable};
pub use wajnryb::{build_wajnryb_lift, build_wajnryb_lift_with_table, wajnryb_macros, WajnrybMacros};

/// Name of the central generator in every lifted family.
pub const CENTRAL: &str = "mu";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PresentationError {
    #[error("{0}")]
    UnsupportedGenus(String),
    #[error("{0}")]
    InvalidParameter(String),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("malformed presentation: {0}")]
    Malformed(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    WajnrybLift,
    GervaisLift,
    Genus2,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::WajnrybLift => "wajnryb-lift",
            Family::GervaisLift => "gervais-lift",
            Family::Genus2 => "genus2",
        }
    }

    /// Human-readable statement of the admissible parameters.
    pub fn constraint(self) -> &'static str {
        match self {
            Family::WajnrybLift => "wajnryb requires g ≥ 3, r ∈ {0,1}",
            Family::GervaisLift => "gervais requires g ≥ 3, r ≥ 1",
            Family::Genus2 => "genus2 requires g = 2, r = 0",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = PresentationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "wajnryb" | "wajnryb-lift" => Ok(Family::WajnrybLift),
            "gervais" | "gervais-lift" => Ok(Family::GervaisLift),
            "genus2" => Ok(Family::Genus2),
            other => Err(PresentationError::InvalidParameter(format!(
                "unknown family `{other}` (expected wajnryb, gervais or genus2)"
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relator {
    pub label: String,
    pub word: Word,
}

impl Relator {
    pub fn new(label: impl Into<String>, word: Word) -> Self {
        Relator {
            label: label.into(),
            word,
        }
    }
}

/// A finite presentation tagged with the family and surface it describes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    family: Family,
    g: u32,
    r: u32,
    alphabet: Alphabet,
    relators: Vec<Relator>,
}

impl Presentation {
    /// Checks that labels are unique and every word lives over `alphabet`.
    pub fn new(
        family: Family,
        g: u32,
        r: u32,
        alphabet: Alphabet,
        relators: Vec<Relator>,
    ) -> Result<Self, PresentationError> {
        let mut seen = HashSet::new();
        for rel in &relators {
            if !seen.insert(rel.label.as_str()) {
                return Err(PresentationError::Malformed(format!(
                    "duplicate relator label `{}`",
                    rel.label
                )));
            }
            if rel.word.alphabet() != &alphabet {
                return Err(PresentationError::Malformed(format!(
                    "relator `{}` is over a different alphabet",
                    rel.label
                )));
            }
        }
        Ok(Presentation {
            family,
            g,
            r,
            alphabet,
            relators,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn genus(&self) -> u32 {
        self.g
    }

    pub fn boundary(&self) -> u32 {
        self.r
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn generators(&self) -> &[String] {
        self.alphabet.names()
    }

    pub fn relators(&self) -> &[Relator] {
        &self.relators
    }

    pub fn relator(&self, label: &str) -> Option<&Relator> {
        self.relators.iter().find(|r| r.label == label)
    }

    /// Relators whose label starts with `kind(` (or equals `kind`).
    pub fn count_kind(&self, kind: &str) -> usize {
        self.relators
            .iter()
            .filter(|r| r.label == kind || r.label.strip_prefix(kind).is_some_and(|s| s.starts_with('(')))
            .count()
    }

    /// Appends a relator. A word over another alphabet is rewritten by
    /// generator name; every name it uses must exist here.
    pub fn with_relator(mut self, label: impl Into<String>, word: Word) -> Result<Self, PresentationError> {
        let label = label.into();
        if self.relator(&label).is_some() {
            return Err(PresentationError::Malformed(format!("duplicate relator label `{label}`")));
        }
        let word = if word.alphabet() == &self.alphabet {
            word
        } else {
            word.transfer(&self.alphabet)?
        };
        self.relators.push(Relator { label, word });
        Ok(self)
    }

    /// Sets `name = 1`: drops the generator and every relator that becomes
    /// trivial. Relator order and labels are otherwise preserved.
    pub fn quotient_by(&self, name: &str) -> Result<Self, PresentationError> {
        self.alphabet.symbol(name)?;
        let alphabet = Alphabet::new(self.alphabet.names().iter().filter(|n| *n != name))?;
        let mut relators = Vec::with_capacity(self.relators.len());
        for rel in &self.relators {
            let word = rel
                .word
                .substitute(&alphabet, |s| (s == name).then(|| alphabet.identity()))?;
            if !word.is_identity() {
                relators.push(Relator::new(rel.label.clone(), word));
            }
        }
        Presentation::new(self.family, self.g, self.r, alphabet, relators)
    }

    /// The base presentation obtained by killing the central generator.
    pub fn central_quotient(&self) -> Result<Self, PresentationError> {
        if self.alphabet.contains(CENTRAL) {
            self.quotient_by(CENTRAL)
        } else {
            Ok(self.clone())
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "family": self.family.name(),
            "g": self.g,
            "r": self.r,
            "generators": self.alphabet.names(),
            "relators": self.relators.iter()
                .map(|r| json!({ "label": r.label, "word": r.word.to_json() }))
                .collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self, PresentationError> {
        let bad = |m: &str| PresentationError::Malformed(m.to_string());
        let family: Family = v
            .get("family")
            .and_then(Value::as_str)
            .ok_or_else(|| bad("missing `family`"))?
            .parse()?;
        let int = |k: &str| {
            v.get(k)
                .and_then(Value::as_u64)
                .and_then(|x| u32::try_from(x).ok())
                .ok_or_else(|| bad(&format!("missing or invalid `{k}`")))
        };
        let (g, r) = (int("g")?, int("r")?);
        let names = v
            .get("generators")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing `generators`"))?
            .iter()
            .map(|n| n.as_str().map(str::to_string).ok_or_else(|| bad("generator names must be strings")))
            .collect::<Result<Vec<_>, _>>()?;
        let alphabet = Alphabet::new(names)?;
        let mut relators = Vec::new();
        for item in v
            .get("relators")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing `relators`"))?
        {
            let label = item
                .get("label")
                .and_then(Value::as_str)
                .ok_or_else(|| bad("relator without `label`"))?;
            let word = Word::from_json(&alphabet, item.get("word").ok_or_else(|| bad("relator without `word`"))?)?;
            relators.push(Relator::new(label, word));
        }
        Presentation::new(family, g, r, alphabet, relators)
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} g={} r={}", self.family, self.g, self.r)?;
        writeln!(f, "generators: {}", self.alphabet.names().join(" "))?;
        for rel in &self.relators {
            writeln!(f, "{}: {}", rel.label, rel.word)?;
        }
        Ok(())
    }
}

/// Builds the presentation of `family` for `(g, r)`.
pub fn build(family: Family, g: u32, r: u32) -> Result<Presentation, PresentationError> {
    match family {
        Family::WajnrybLift => build_wajnryb_lift(g, r),
        Family::GervaisLift => build_gervais_lift(g, r),
        Family::Genus2 if g == 2 && r == 0 => Ok(build_genus2()),
        Family::Genus2 => Err(PresentationError::InvalidParameter(family.constraint().into())),
    }
}

/// As [`build`], with commutation and braid relators read from `table`.
pub fn build_with_table(
    family: Family,
    g: u32,
    r: u32,
    table: &IntersectionTable,
) -> Result<Presentation, PresentationError> {
    match family {
        Family::WajnrybLift => build_wajnryb_lift_with_table(g, r, table),
        Family::GervaisLift => build_gervais_lift_with_table(g, r, table),
        Family::Genus2 if g == 2 && r == 0 => build_genus2_with_table(table),
        Family::Genus2 => Err(PresentationError::InvalidParameter(family.constraint().into())),
    }
}

/// An index triple for a star relator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GoodTriple {
    pub i: u32,
    pub j: u32,
    pub k: u32,
}

impl GoodTriple {
    pub fn is_good(i: u32, j: u32, k: u32) -> bool {
        let cyclic = (i <= j && j <= k) || (j <= k && k <= i) || (k <= i && i <= j);
        cyclic && !(i == j && j == k)
    }
}

impl fmt::Display for GoodTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.i, self.j, self.k)
    }
}

/// All good triples in `{1..n}^3`, lexicographically ordered.
pub fn good_triples(n: u32) -> Result<Vec<GoodTriple>, PresentationError> {
    if n < 1 {
        return Err(PresentationError::InvalidParameter("good_triples requires n ≥ 1".into()));
    }
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                if GoodTriple::is_good(i, j, k) {
                    out.push(GoodTriple { i, j, k });
                }
            }
        }
    }
    Ok(out)
}

/// Commutation or braid relator for a pair with table entry 0 or 1.
pub(crate) fn pair_relator(alphabet: &Alphabet, x: &str, y: &str, entry: Incidence) -> Option<Relator> {
    let (wx, wy) = (alphabet.generator(x).ok()?, alphabet.generator(y).ok()?);
    match entry {
        Incidence::Disjoint => Some(Relator::new(format!("commute({x},{y})"), wx.commutator(&wy))),
        Incidence::Once => {
            let lhs = wx.concat(&wy).concat(&wx);
            let rhs = wy.concat(&wx).concat(&wy);
            Some(Relator::new(format!("braid({x},{y})"), lhs.concat(&rhs.invert())))
        }
        Incidence::Many => None,
    }
}

/// Commutation relators first, then braid relators, each in table order.
pub(crate) fn pair_relators(alphabet: &Alphabet, table: &IntersectionTable) -> Vec<Relator> {
    let mut commute = Vec::new();
    let mut braid = Vec::new();
    for (x, y, entry) in table.pairs() {
        match pair_relator(alphabet, x, y, entry) {
            Some(rel) if entry == Incidence::Disjoint => commute.push(rel),
            Some(rel) => braid.push(rel),
            None => {}
        }
    }
    commute.extend(braid);
    commute
}

/// `[x, mu]` for every non-central generator.
pub(crate) fn central_relators(alphabet: &Alphabet) -> Vec<Relator> {
    let mu = alphabet.generator(CENTRAL).expect("central generator");
    alphabet
        .names()
        .iter()
        .filter(|n| *n != CENTRAL)
        .map(|n| {
            let x = alphabet.generator(n).expect("listed generator");
            Relator::new(format!("central({n})"), x.commutator(&mu))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn good_triples_small_cases() {
        assert!(good_triples(1).unwrap().is_empty());
        let two = good_triples(2).unwrap();
        assert_eq!(two.len(), 6);
        assert!(two.iter().all(|t| !(t.i == t.j && t.j == t.k)));
        assert!(good_triples(0).is_err());
    }

    #[test]
    fn good_triples_sorted() {
        let t = good_triples(5).unwrap();
        assert!(t.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn family_names_round_trip() {
        for f in [Family::WajnrybLift, Family::GervaisLift, Family::Genus2] {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert_eq!("wajnryb".parse::<Family>().unwrap(), Family::WajnrybLift);
        assert!("torus".parse::<Family>().is_err());
    }

    #[test]
    fn presentation_json_round_trip() {
        let p = build_wajnryb_lift(3, 0).unwrap();
        let q = Presentation::from_json(&p.to_json()).unwrap();
        assert_eq!(q.to_json(), p.to_json());
        assert_eq!(q.relators().len(), p.relators().len());
    }

    #[test]
    fn from_json_rejects_duplicates_and_unknown_symbols() {
        let dup = json!({"family":"genus2","g":2,"r":0,"generators":["c1","c1"],"relators":[]});
        assert!(Presentation::from_json(&dup).is_err());
        let unknown = json!({"family":"genus2","g":2,"r":0,"generators":["c1"],
            "relators":[{"label":"x","word":[["c2",1]]}]});
        assert!(Presentation::from_json(&unknown).is_err());
        let labels = json!({"family":"genus2","g":2,"r":0,"generators":["c1"],
            "relators":[{"label":"x","word":[["c1",1]]},{"label":"x","word":[["c1",2]]}]});
        assert!(Presentation::from_json(&labels).is_err());
    }

    #[test]
    fn quotient_drops_central_relators() {
        let p = build_wajnryb_lift(3, 1).unwrap();
        let q = p.central_quotient().unwrap();
        assert!(!q.alphabet().contains(CENTRAL));
        assert_eq!(q.count_kind("central"), 0);
        assert_eq!(q.relators().len(), p.relators().len() - p.count_kind("central"));
        assert!(q.relators().iter().all(|r| !r.word.is_identity()));
    }

    #[test]
    fn build_dispatch_checks_parameters() {
        assert!(build(Family::Genus2, 2, 0).is_ok());
        assert!(build(Family::Genus2, 3, 0).is_err());
        let err = build(Family::WajnrybLift, 2, 1).unwrap_err();
        assert!(err.to_string().contains("g ≥ 3"));
    }
}
