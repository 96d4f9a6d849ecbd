use super::wajnryb::delta;
use super::{pair_relators, Family, IntersectionTable, Presentation, PresentationError, Relator};
use crate::words::{Alphabet, Word};

pub(super) fn alphabet() -> Alphabet {
    Alphabet::new((1..=5).map(|i| format!("c{i}"))).expect("distinct names")
}

/// `(c1 c2 c3)^4 c5^-2`.
pub(super) fn kappa_chain(alphabet: &Alphabet) -> Word {
    super::wajnryb::three_chain(alphabet).concat(&alphabet.generator("c5").unwrap().pow(-2))
}

pub(super) fn chain_square(alphabet: &Alphabet) -> Word {
    let d = delta(alphabet, 5);
    kappa_chain(alphabet).pow(2).concat(&d.pow(2).invert())
}

pub(super) fn hyperelliptic(alphabet: &Alphabet) -> Word {
    delta(alphabet, 5).commutator(&alphabet.generator("c1").unwrap())
}

pub fn build_genus2() -> Presentation {
    let table = IntersectionTable::standard(Family::Genus2, 2, 0).expect("genus-2 table");
    build_genus2_with_table(&table).expect("genus-2 presentation")
}

pub fn build_genus2_with_table(table: &IntersectionTable) -> Result<Presentation, PresentationError> {
    let alphabet = alphabet();
    let mut relators = pair_relators(&alphabet, table);
    relators.push(Relator::new("chain-square", chain_square(&alphabet)));
    relators.push(Relator::new("hyperelliptic", hyperelliptic(&alphabet)));
    Presentation::new(Family::Genus2, 2, 0, alphabet, relators)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn five_generators_and_chain_pairs() {
        let p = build_genus2();
        assert_eq!(p.generators(), ["c1", "c2", "c3", "c4", "c5"]);
        assert_eq!(p.count_kind("braid"), 4);
        assert_eq!(p.count_kind("commute"), 6);
        assert_eq!(p.relators().len(), 12);
    }

    #[test]
    fn chain_square_shape() {
        let a = alphabet();
        let w = chain_square(&a);
        // Exponent sums: 2·(12 - 2) on the left, 2·10 on the right.
        assert!(w.exponent_sums().iter().cloned().sum::<num_bigint::BigInt>() == 0.into());
        assert!(w.is_cyclically_reduced());
    }
}
