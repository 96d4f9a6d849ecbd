use std::collections::HashMap;

use super::{Family, PresentationError};

/// Geometric intersection number, truncated at two.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Incidence {
    Disjoint,
    Once,
    Many,
}

impl Incidence {
    pub fn as_number(self) -> Option<u32> {
        match self {
            Incidence::Disjoint => Some(0),
            Incidence::Once => Some(1),
            Incidence::Many => None,
        }
    }
}

/// Symmetric incidence table over the curve generators of a family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionTable {
    names: Vec<String>,
    index: HashMap<String, usize>,
    entries: Vec<Incidence>,
}

impl IntersectionTable {
    /// All distinct pairs disjoint, diagonal `Many`.
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Self {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let n = names.len();
        let index = names.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        let mut entries = vec![Incidence::Disjoint; n * n];
        for i in 0..n {
            entries[i * n + i] = Incidence::Many;
        }
        IntersectionTable {
            names,
            index,
            entries,
        }
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    fn idx(&self, name: &str) -> usize {
        *self
            .index
            .get(name)
            .unwrap_or_else(|| panic!("`{name}` is not in the intersection table"))
    }

    pub fn get(&self, a: &str, b: &str) -> Incidence {
        let n = self.names.len();
        self.entries[self.idx(a) * n + self.idx(b)]
    }

    /// Sets both `(a, b)` and `(b, a)`. Diagonal entries stay `Many`.
    pub fn set(&mut self, a: &str, b: &str, value: Incidence) {
        let (i, j) = (self.idx(a), self.idx(b));
        if i == j {
            return;
        }
        let n = self.names.len();
        self.entries[i * n + j] = value;
        self.entries[j * n + i] = value;
    }

    /// Unordered distinct pairs `(a, b)` with `a` listed before `b`.
    pub fn pairs(&self) -> impl Iterator<Item = (&str, &str, Incidence)> + '_ {
        let n = self.names.len();
        (0..n).flat_map(move |i| {
            (i + 1..n).map(move |j| {
                (
                    self.names[i].as_str(),
                    self.names[j].as_str(),
                    self.entries[i * n + j],
                )
            })
        })
    }

    /// The tabulated configuration the builders use by default.
    pub fn standard(family: Family, g: u32, r: u32) -> Result<Self, PresentationError> {
        match family {
            Family::WajnrybLift => {
                if g < 3 {
                    return Err(PresentationError::UnsupportedGenus(family.constraint().into()));
                }
                if r > 1 {
                    return Err(PresentationError::InvalidParameter(family.constraint().into()));
                }
                Ok(Self::chain(g, true))
            }
            Family::Genus2 => Ok(Self::chain(2, false)),
            Family::GervaisLift => {
                if g < 3 || r < 1 {
                    return Err(PresentationError::InvalidParameter(family.constraint().into()));
                }
                Ok(Self::gervais(g, r))
            }
        }
    }

    /// Chain `c1 … c{2g+1}` (plus `c0` meeting `c4` when `with_c0`).
    fn chain(g: u32, with_c0: bool) -> Self {
        let top = 2 * g + 1;
        let first = if with_c0 { 0 } else { 1 };
        let mut t = Self::new((first..=top).map(|i| format!("c{i}")));
        for i in 1..top {
            t.set(&format!("c{i}"), &format!("c{}", i + 1), Incidence::Once);
        }
        if with_c0 {
            t.set("c0", "c4", Incidence::Once);
        }
        t
    }

    /// Star-neighbourhood model: an annulus around `b` with bands
    /// `a1 … an` attached in cyclic order; gap `p` lies between bands `p`
    /// and `p + 1`. Handle `i` glues gaps `2i - 1` and `2i`; `b_i` runs
    /// through that handle and crosses `a_{2i}` once. `c_{k,l}` follows `b`
    /// over the gaps from `k` to `l`.
    fn gervais(g: u32, r: u32) -> Self {
        let n = 2 * g + r - 2;
        let names = super::gervais_symbols(g, r);
        let mut t = Self::new(names.iter().filter(|s| *s != super::CENTRAL).cloned());
        let gaps = |k: u32, l: u32| -> Vec<u32> {
            let mut out = Vec::new();
            let mut p = k;
            while p != l {
                out.push(p);
                p = if p < n { p + 1 } else { 1 };
            }
            out
        };
        let cname = |k: u32, l: u32| format!("c{k}_{l}");
        let mut cs = Vec::new();
        for k in 1..=n {
            for l in 1..=n {
                if k != l {
                    cs.push((k, l, gaps(k, l)));
                }
            }
        }
        for m in 1..=n {
            t.set("b", &format!("a{m}"), Incidence::Once);
        }
        for i in 1..g {
            t.set(&format!("b{i}"), &format!("a{}", 2 * i), Incidence::Once);
            for (k, l, _) in &cs {
                if *k == 2 * i || *l == 2 * i {
                    t.set(&format!("b{i}"), &cname(*k, *l), Incidence::Once);
                }
            }
        }
        for (k, l, gs) in &cs {
            for m in 1..=n {
                let before = if m > 1 { m - 1 } else { n };
                if m != *k && m != *l && gs.contains(&before) && gs.contains(&m) {
                    t.set(&format!("a{m}"), &cname(*k, *l), Incidence::Many);
                }
            }
        }
        for (x, (k1, l1, g1)) in cs.iter().enumerate() {
            for (k2, l2, g2) in &cs[x + 1..] {
                let inside = |a: &[u32], b: &[u32]| a.iter().all(|p| b.contains(p));
                let apart = g1.iter().all(|p| !g2.contains(p));
                if !(inside(g1, g2) || inside(g2, g1) || apart) {
                    t.set(&cname(*k1, *l1), &cname(*k2, *l2), Incidence::Many);
                }
            }
        }
        t
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wajnryb_table_shape() {
        let t = IntersectionTable::standard(Family::WajnrybLift, 3, 1).unwrap();
        assert_eq!(t.names().len(), 8);
        assert_eq!(t.get("c1", "c2"), Incidence::Once);
        assert_eq!(t.get("c6", "c7"), Incidence::Once);
        assert_eq!(t.get("c0", "c4"), Incidence::Once);
        assert_eq!(t.get("c4", "c0"), Incidence::Once);
        assert_eq!(t.get("c0", "c3"), Incidence::Disjoint);
        assert_eq!(t.get("c1", "c3"), Incidence::Disjoint);
        assert_eq!(t.get("c2", "c2"), Incidence::Many);
    }

    #[test]
    fn symmetric_set() {
        let mut t = IntersectionTable::new(["x", "y"]);
        t.set("y", "x", Incidence::Once);
        assert_eq!(t.get("x", "y"), Incidence::Once);
        t.set("x", "x", Incidence::Disjoint);
        assert_eq!(t.get("x", "x"), Incidence::Many);
    }

    #[test]
    fn gervais_table_entries() {
        let t = IntersectionTable::standard(Family::GervaisLift, 3, 1).unwrap();
        assert_eq!(t.get("a1", "b"), Incidence::Once);
        assert_eq!(t.get("a1", "a2"), Incidence::Disjoint);
        assert_eq!(t.get("b1", "a2"), Incidence::Once);
        assert_eq!(t.get("b1", "a1"), Incidence::Disjoint);
        assert_eq!(t.get("b1", "c2_4"), Incidence::Once);
        assert_eq!(t.get("c1_3", "a2"), Incidence::Many);
        assert_eq!(t.get("c1_3", "a1"), Incidence::Disjoint);
        assert_eq!(t.get("c1_3", "c2_4"), Incidence::Many);
        assert_eq!(t.get("c1_3", "c1_2"), Incidence::Disjoint);
        assert_eq!(t.get("c1_3", "b"), Incidence::Disjoint);
    }

    #[test]
    fn standard_rejects_bad_parameters() {
        assert!(IntersectionTable::standard(Family::WajnrybLift, 2, 0).is_err());
        assert!(IntersectionTable::standard(Family::GervaisLift, 3, 0).is_err());
    }
}
