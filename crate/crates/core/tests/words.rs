use mcgext::{Alphabet, Letter, Word};
use num_bigint::BigInt;
use proptest::prelude::*;

fn alphabet() -> Alphabet {
    Alphabet::new(["c1", "c2", "c3", "c4"]).unwrap()
}

/// Raw (possibly unreduced) letter lists over a small alphabet.
fn raw_letters() -> impl Strategy<Value = Vec<(usize, i64)>> {
    prop::collection::vec((0usize..4, -3i64..=3), 0..24)
}

fn word(a: &Alphabet, raw: &[(usize, i64)]) -> Word {
    Word::from_letters(
        a,
        raw.iter()
            .map(|&(i, e)| Letter {
                symbol: a.symbol_at(i),
                exponent: BigInt::from(e),
            })
            .collect(),
    )
}

/// Letter-by-letter expansion, reduced with a stack: the free-group oracle.
fn expand_reduce(raw: &[(usize, i64)]) -> Vec<(usize, i64)> {
    let mut stack: Vec<(usize, i64)> = Vec::new();
    for &(s, e) in raw {
        let unit = e.signum();
        for _ in 0..e.abs() {
            match stack.last() {
                Some(&(t, u)) if t == s && u == -unit => {
                    stack.pop();
                }
                _ => stack.push((s, unit)),
            }
        }
    }
    let mut out: Vec<(usize, i64)> = Vec::new();
    for (s, u) in stack {
        match out.last_mut() {
            Some((t, e)) if *t == s => *e += u,
            _ => out.push((s, u)),
        }
    }
    out
}

fn flatten(w: &Word) -> Vec<(usize, i64)> {
    w.letters()
        .iter()
        .map(|l| (l.symbol.index(), i64::try_from(&l.exponent).unwrap()))
        .collect()
}

proptest! {
    #[test]
    fn reduction_matches_stack_oracle(raw in raw_letters()) {
        let a = alphabet();
        prop_assert_eq!(flatten(&word(&a, &raw)), expand_reduce(&raw));
    }

    #[test]
    fn reduction_is_idempotent(raw in raw_letters()) {
        let a = alphabet();
        let w = word(&a, &raw);
        let again = Word::from_letters(&a, w.letters().to_vec());
        prop_assert_eq!(again, w);
    }

    #[test]
    fn concat_is_associative(x in raw_letters(), y in raw_letters(), z in raw_letters()) {
        let a = alphabet();
        let (u, v, w) = (word(&a, &x), word(&a, &y), word(&a, &z));
        prop_assert_eq!(u.concat(&v).concat(&w), u.concat(&v.concat(&w)));
    }

    #[test]
    fn inverse_cancels(raw in raw_letters()) {
        let a = alphabet();
        let u = word(&a, &raw);
        prop_assert!(u.concat(&u.invert()).is_identity());
        prop_assert!(u.invert().concat(&u).is_identity());
        prop_assert_eq!(u.invert().invert(), u);
    }

    #[test]
    fn exponent_sums_are_additive(x in raw_letters(), y in raw_letters()) {
        let a = alphabet();
        let (u, v) = (word(&a, &x), word(&a, &y));
        let uv = u.concat(&v).exponent_sums();
        let sum: Vec<BigInt> = u.exponent_sums().iter().zip(v.exponent_sums()).map(|(p, q)| p + q).collect();
        prop_assert_eq!(uv, sum);
    }

    #[test]
    fn cyclic_reduction_is_a_cyclically_reduced_conjugate(raw in raw_letters(), c in raw_letters()) {
        let a = alphabet();
        let u = word(&a, &raw);
        let r = u.cyclic_reduce();
        prop_assert!(r.is_cyclically_reduced());
        prop_assert!(r.length() <= u.length());
        prop_assert_eq!(r.exponent_sums(), u.exponent_sums());
        // Conjugation does not change the cyclic reduction's length.
        let conj = u.conjugate(&word(&a, &c));
        prop_assert_eq!(conj.cyclic_reduce().length(), r.length());
    }

    #[test]
    fn json_round_trip(raw in raw_letters()) {
        let a = alphabet();
        let u = word(&a, &raw);
        prop_assert_eq!(Word::from_json(&a, &u.to_json()).unwrap(), u);
    }
}

#[test]
fn spec_examples() {
    let a = alphabet();
    let p = |s: &str| a.parse(s).unwrap();
    assert!(p("c1").concat(&p("c1^-1")).is_identity());
    assert_eq!(p("c1 c2").concat(&p("c2^-1 c3")), p("c1 c3"));
    assert_eq!(p("c1^2").concat(&p("c1^-1")), p("c1"));
    assert_eq!(p("c1 c2").invert(), p("c2^-1 c1^-1"));
    assert_eq!(p("c1").conjugate(&a.identity()), p("c1"));
    assert_eq!(p("c1").conjugate(&p("c1")), p("c1"));
    assert_eq!(p("c1 c2 c1^-1").cyclic_reduce(), p("c2"));
    assert_eq!(p("c1 c2 c3").cyclic_reduce(), p("c1 c2 c3"));
    assert!(a.identity().cyclic_reduce().is_identity());
}

#[test]
#[should_panic(expected = "different alphabets")]
fn mixing_alphabets_panics() {
    let a = alphabet();
    let b = alphabet();
    let _ = a.generator("c1").unwrap().concat(&b.generator("c1").unwrap());
}
