use super::{
    central_relators, pair_relators, Family, IntersectionTable, Presentation, PresentationError,
    Relator, CENTRAL,
};
use crate::words::{Alphabet, Word};

/// The conjugated curves `b0 … b3` written over the chain generators.
#[derive(Clone, Debug)]
pub struct WajnrybMacros {
    pub b0: Word,
    pub b1: Word,
    pub b2: Word,
    pub b3: Word,
}

fn c(alphabet: &Alphabet, i: u32) -> Word {
    alphabet.generator(&format!("c{i}")).expect("chain generator")
}

fn chain_word(alphabet: &Alphabet, indices: &[u32]) -> Word {
    indices
        .iter()
        .fold(alphabet.identity(), |w, &i| w.concat(&c(alphabet, i)))
}

/// Expands `b0 … b3`. The alphabet must hold `c0 … c6`.
///
/// `b3` is conjugated as `W c0 W^-1`; the opposite orientation does not
/// bound a lantern together with `c1`, `c3`, `c5`.
pub fn wajnryb_macros(alphabet: &Alphabet) -> WajnrybMacros {
    let c0 = c(alphabet, 0);
    let b0 = c0.conjugate(&chain_word(alphabet, &[4, 3, 2, 1, 1, 2, 3, 4]));
    let b1 = c0.conjugate(&chain_word(alphabet, &[4, 5, 3, 4]));
    let b2 = b1.conjugate(&chain_word(alphabet, &[2, 3, 1, 2]));
    let w3 = chain_word(alphabet, &[6, 5, 4, 3, 2])
        .concat(&chain_word(alphabet, &[6, 5]).invert())
        .concat(&b1)
        .concat(&chain_word(alphabet, &[6, 5]))
        .concat(&chain_word(alphabet, &[4, 3, 2, 1]).invert());
    let b3 = w3.concat(&c0).concat(&w3.invert());
    WajnrybMacros { b0, b1, b2, b3 }
}

/// `c_{2g} … c_1 c_1 … c_{2g}`.
pub(super) fn delta(alphabet: &Alphabet, top: u32) -> Word {
    let down: Vec<u32> = (1..=top).rev().collect();
    let up: Vec<u32> = (1..=top).collect();
    chain_word(alphabet, &down).concat(&chain_word(alphabet, &up))
}

pub(super) fn alphabet(g: u32) -> Alphabet {
    let mut names: Vec<String> = (0..=2 * g + 1).map(|i| format!("c{i}")).collect();
    names.push(CENTRAL.to_string());
    Alphabet::new(names).expect("distinct names")
}

/// `(c1 c2 c3)^4`.
pub(super) fn three_chain(alphabet: &Alphabet) -> Word {
    chain_word(alphabet, &[1, 2, 3]).pow(4)
}

/// `(c1 c3 c5 b3)^-1 b0 b1 b2`, the lantern written as a central element.
pub(super) fn lantern_element(alphabet: &Alphabet, m: &WajnrybMacros) -> Word {
    chain_word(alphabet, &[1, 3, 5])
        .concat(&m.b3)
        .invert()
        .concat(&m.b0)
        .concat(&m.b1)
        .concat(&m.b2)
}

/// `[Δ, c_{2g+1}]` for the closed surface.
pub(super) fn closed_commutator(alphabet: &Alphabet, g: u32) -> Word {
    delta(alphabet, 2 * g).commutator(&c(alphabet, 2 * g + 1))
}

/// Lifted Wajnryb presentation for `g ≥ 3`, `r ∈ {0, 1}`.
pub fn build_wajnryb_lift(g: u32, r: u32) -> Result<Presentation, PresentationError> {
    let table = IntersectionTable::standard(Family::WajnrybLift, g, r)?;
    build_wajnryb_lift_with_table(g, r, &table)
}

/// As [`build_wajnryb_lift`], with commutation and braid relators read from
/// a caller-supplied table.
pub fn build_wajnryb_lift_with_table(
    g: u32,
    r: u32,
    table: &IntersectionTable,
) -> Result<Presentation, PresentationError> {
    if g < 3 {
        return Err(PresentationError::UnsupportedGenus(format!(
            "{} (use the genus2 family for g = 2)",
            Family::WajnrybLift.constraint()
        )));
    }
    if r > 1 {
        return Err(PresentationError::InvalidParameter(
            Family::WajnrybLift.constraint().into(),
        ));
    }
    let alphabet = alphabet(g);
    let m = wajnryb_macros(&alphabet);
    let c0 = c(&alphabet, 0);
    let mu = alphabet.generator(CENTRAL)?;

    let mut relators = pair_relators(&alphabet, table);
    let chain = three_chain(&alphabet)
        .concat(&c0.concat(&m.b0).invert())
        .concat(&mu.invert());
    relators.push(Relator::new("chain", chain));
    relators.extend(central_relators(&alphabet));
    let lantern = c0
        .concat(&m.b2)
        .concat(&m.b1)
        .concat(&chain_word(&alphabet, &[1, 3, 5]).concat(&m.b3).invert());
    relators.push(Relator::new("lantern", lantern));
    if r == 0 {
        relators.push(Relator::new("closed", closed_commutator(&alphabet, g)));
    }
    Presentation::new(Family::WajnrybLift, g, r, alphabet, relators)
}
