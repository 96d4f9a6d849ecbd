use std::collections::BTreeMap;

use super::{genus2, wajnryb, PresentationError};
use crate::words::Word;

/// Named central elements and auxiliary relators for genus `g`.
///
/// For `g ≥ 3` the words live over the lifted Wajnryb alphabet for `(g, r)`:
/// `kappa_chain` is `(c1 c2 c3)^4 b0^-1 c0^-1`, `kappa_chain_alt` the same with
/// the last two factors swapped, `kappa_lantern` is `(c1 c3 c5 b3)^-1 b0 b1 b2`,
/// plus `closed_commutator` and the macros `b0 … b3`. For `g = 2` the alphabet
/// is `c1 … c5` and the entries are `kappa_chain = (c1 c2 c3)^4 c5^-2`, the
/// empty `kappa_lantern`, `chain_square` and `hyperelliptic`.
pub fn relator_library(g: u32, r: u32) -> Result<BTreeMap<String, Word>, PresentationError> {
    let mut lib = BTreeMap::new();
    match g {
        2 => {
            if r != 0 {
                return Err(PresentationError::InvalidParameter(
                    "the genus-2 library is defined for r = 0".into(),
                ));
            }
            let a = genus2::alphabet();
            lib.insert("kappa_chain".into(), genus2::kappa_chain(&a));
            lib.insert("kappa_lantern".into(), a.identity());
            lib.insert("chain_square".into(), genus2::chain_square(&a));
            lib.insert("hyperelliptic".into(), genus2::hyperelliptic(&a));
        }
        g if g >= 3 => {
            if r > 1 {
                return Err(PresentationError::InvalidParameter(
                    "the library for g ≥ 3 uses the wajnryb alphabet, r ∈ {0,1}".into(),
                ));
            }
            let a = wajnryb::alphabet(g);
            let m = wajnryb::wajnryb_macros(&a);
            let c0 = a.generator("c0")?;
            let chain = wajnryb::three_chain(&a);
            lib.insert(
                "kappa_chain".into(),
                chain.concat(&m.b0.invert()).concat(&c0.invert()),
            );
            lib.insert(
                "kappa_chain_alt".into(),
                chain.concat(&c0.invert()).concat(&m.b0.invert()),
            );
            lib.insert("kappa_lantern".into(), wajnryb::lantern_element(&a, &m));
            lib.insert("closed_commutator".into(), wajnryb::closed_commutator(&a, g));
            lib.insert("b0".into(), m.b0);
            lib.insert("b1".into(), m.b1);
            lib.insert("b2".into(), m.b2);
            lib.insert("b3".into(), m.b3);
        }
        _ => {
            return Err(PresentationError::InvalidParameter(
                "relator library requires g ≥ 2".into(),
            ))
        }
    }
    Ok(lib)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genus_two_entries() {
        let lib = relator_library(2, 0).unwrap();
        assert!(lib["kappa_lantern"].is_identity());
        assert_eq!(lib["kappa_chain"].to_string(), "c1 c2 c3 c1 c2 c3 c1 c2 c3 c1 c2 c3 c5^-2");
    }

    #[test]
    fn genus_three_entries() {
        let lib = relator_library(3, 1).unwrap();
        let kc = &lib["kappa_chain"];
        let b0 = &lib["b0"];
        let c0 = kc.alphabet().generator("c0").unwrap();
        let c = |s: &str| kc.alphabet().parse(s).unwrap();
        let expected = c("c1 c2 c3").pow(4).concat(&b0.invert()).concat(&c0.invert());
        assert_eq!(kc, &expected);
        assert_ne!(lib["kappa_chain"], lib["kappa_chain_alt"]);
        assert!(!lib["kappa_lantern"].is_identity());
    }

    #[test]
    fn bad_genus() {
        assert!(relator_library(1, 0).is_err());
        assert!(relator_library(2, 1).is_err());
        assert!(relator_library(3, 2).is_err());
    }
}
