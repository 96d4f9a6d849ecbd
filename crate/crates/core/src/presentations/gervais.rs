use super::{
    central_relators, good_triples, pair_relators, Family, IntersectionTable, Presentation,
    PresentationError, Relator, CENTRAL,
};
use crate::words::{Alphabet, Word};

/// Generator names in presentation order:
/// `b, b1 … b{g-1}, a1 … an, c{i}_{j} (i ≠ j), mu` with `n = 2g + r - 2`.
pub fn gervais_symbols(g: u32, r: u32) -> Vec<String> {
    let n = 2 * g + r - 2;
    let mut names = vec!["b".to_string()];
    names.extend((1..g).map(|i| format!("b{i}")));
    names.extend((1..=n).map(|i| format!("a{i}")));
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                names.push(format!("c{i}_{j}"));
            }
        }
    }
    names.push(CENTRAL.to_string());
    names
}

/// `c_{i,j}`, with `c_{l,l}` the empty word.
fn cc(alphabet: &Alphabet, i: u32, j: u32) -> Word {
    if i == j {
        alphabet.identity()
    } else {
        alphabet.generator(&format!("c{i}_{j}")).expect("c generator")
    }
}

fn a(alphabet: &Alphabet, i: u32) -> Word {
    alphabet.generator(&format!("a{i}")).expect("a generator")
}

/// Lifted Gervais presentation for `g ≥ 3`, `r ≥ 1`.
pub fn build_gervais_lift(g: u32, r: u32) -> Result<Presentation, PresentationError> {
    let table = IntersectionTable::standard(Family::GervaisLift, g, r)?;
    build_gervais_lift_with_table(g, r, &table)
}

pub fn build_gervais_lift_with_table(
    g: u32,
    r: u32,
    table: &IntersectionTable,
) -> Result<Presentation, PresentationError> {
    if g < 3 || r < 1 {
        return Err(PresentationError::InvalidParameter(
            Family::GervaisLift.constraint().into(),
        ));
    }
    let n = 2 * g + r - 2;
    let alphabet = Alphabet::new(gervais_symbols(g, r))?;
    let mu = alphabet.generator(CENTRAL)?;
    let b = alphabet.generator("b")?;

    let mut relators = Vec::new();
    for i in 1..g {
        let w = cc(&alphabet, 2 * i, 2 * i + 1).concat(&cc(&alphabet, 2 * i - 1, 2 * i).invert());
        relators.push(Relator::new(format!("handle({i})"), w));
    }
    relators.extend(pair_relators(&alphabet, table));
    for t in good_triples(n)? {
        let lhs = cc(&alphabet, t.i, t.j)
            .concat(&cc(&alphabet, t.j, t.k))
            .concat(&cc(&alphabet, t.k, t.i));
        let rhs = a(&alphabet, t.i)
            .concat(&a(&alphabet, t.j))
            .concat(&a(&alphabet, t.k))
            .concat(&b)
            .pow(3);
        let w = lhs.concat(&mu).concat(&rhs.invert());
        relators.push(Relator::new(format!("star{t}"), w));
    }
    relators.extend(central_relators(&alphabet));
    Presentation::new(Family::GervaisLift, g, r, alphabet, relators)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alphabet_layout() {
        let names = gervais_symbols(3, 1);
        let n = 5;
        assert_eq!(names.len(), 1 + 2 + n + n * (n - 1) + 1);
        assert_eq!(&names[..4], ["b", "b1", "b2", "a1"]);
        assert_eq!(names.last().unwrap(), CENTRAL);
        assert!(names.contains(&"c2_1".to_string()));
        assert!(!names.contains(&"c2_2".to_string()));
    }

    #[test]
    fn relator_counts() {
        for (g, r) in [(3, 1), (3, 2), (4, 1)] {
            let p = build_gervais_lift(g, r).unwrap();
            let n = 2 * g + r - 2;
            assert_eq!(p.count_kind("handle"), (g - 1) as usize);
            assert_eq!(p.count_kind("star"), good_triples(n).unwrap().len());
            assert_eq!(p.count_kind("central"), p.generators().len() - 1);
        }
    }

    #[test]
    fn repeated_index_star_drops_c_ll() {
        let p = build_gervais_lift(3, 1).unwrap();
        let w = &p.relator("star(1,1,2)").unwrap().word;
        // c_{1,1} is empty, so the word starts c1_2 c2_1 mu.
        assert!(w.to_string().starts_with("c1_2 c2_1 mu "));
    }

    #[test]
    fn parameter_errors() {
        assert!(build_gervais_lift(2, 1).is_err());
        assert!(build_gervais_lift(3, 0).is_err());
    }
}
