//! Free-group words over explicit generator alphabets.
//!
//! A [`Word`] is always stored freely reduced: adjacent letters never share a
//! symbol and no exponent is zero. Reduction happens at construction, so
//! structural equality coincides with equality in the free group.
//!
//! Every word remembers the [`Alphabet`] that created its symbols. Combining
//! words from two different alphabets is a programming error and panics.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::Value;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("duplicate generator name `{0}`")]
    DuplicateName(String),
    #[error("empty generator name")]
    EmptyName,
    #[error("unknown generator `{0}`")]
    UnknownSymbol(String),
    #[error("malformed word: {0}")]
    Malformed(String),
}

static NEXT_ALPHABET_ID: AtomicU64 = AtomicU64::new(1);

#[derive(Debug)]
struct AlphabetInner {
    id: u64,
    names: Vec<String>,
    index: HashMap<String, usize>,
}

/// An ordered set of uniquely named generators.
///
/// Cloning is cheap; clones refer to the same alphabet.
#[derive(Clone, Debug)]
pub struct Alphabet(Arc<AlphabetInner>);

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        self.0.id == other.0.id
    }
}

impl Eq for Alphabet {}

impl Hash for Alphabet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.id.hash(state);
    }
}

/// A generator of a particular alphabet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol {
    alphabet: u64,
    index: u32,
}

impl Symbol {
    /// Position of the symbol in its alphabet.
    pub fn index(self) -> usize {
        self.index as usize
    }
}

impl Alphabet {
    pub fn new<I, S>(names: I) -> Result<Self, WordError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut list = Vec::new();
        let mut index = HashMap::new();
        for name in names {
            let name: String = name.into();
            if name.is_empty() {
                return Err(WordError::EmptyName);
            }
            if index.insert(name.clone(), list.len()).is_some() {
                return Err(WordError::DuplicateName(name));
            }
            list.push(name);
        }
        Ok(Alphabet(Arc::new(AlphabetInner {
            id: NEXT_ALPHABET_ID.fetch_add(1, Ordering::Relaxed),
            names: list,
            index,
        })))
    }

    pub fn len(&self) -> usize {
        self.0.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0.names
    }

    pub fn contains(&self, name: &str) -> bool {
        self.0.index.contains_key(name)
    }

    pub fn symbol(&self, name: &str) -> Result<Symbol, WordError> {
        self.0
            .index
            .get(name)
            .map(|&i| self.symbol_at(i))
            .ok_or_else(|| WordError::UnknownSymbol(name.to_string()))
    }

    pub fn symbol_at(&self, index: usize) -> Symbol {
        assert!(index < self.len(), "symbol index {index} out of range");
        Symbol {
            alphabet: self.0.id,
            index: index as u32,
        }
    }

    pub fn symbols(&self) -> impl Iterator<Item = Symbol> + '_ {
        (0..self.len()).map(move |i| self.symbol_at(i))
    }

    /// Name of a symbol. Panics if the symbol belongs to another alphabet.
    pub fn name(&self, symbol: Symbol) -> &str {
        self.check(symbol);
        &self.0.names[symbol.index()]
    }

    pub fn owns(&self, symbol: Symbol) -> bool {
        symbol.alphabet == self.0.id && symbol.index() < self.len()
    }

    fn check(&self, symbol: Symbol) {
        assert!(
            self.owns(symbol),
            "symbol does not belong to this alphabet"
        );
    }

    /// The empty word.
    pub fn identity(&self) -> Word {
        Word {
            alphabet: self.clone(),
            letters: Vec::new(),
        }
    }

    /// The one-letter word `name`.
    pub fn generator(&self, name: &str) -> Result<Word, WordError> {
        let s = self.symbol(name)?;
        Ok(self.letter(s, BigInt::one()))
    }

    pub fn letter(&self, symbol: Symbol, exponent: BigInt) -> Word {
        self.check(symbol);
        Word::from_letters(self, vec![Letter { symbol, exponent }])
    }

    /// Builds a word from `(name, exponent)` pairs.
    pub fn word(&self, letters: &[(&str, i64)]) -> Result<Word, WordError> {
        let mut raw = Vec::with_capacity(letters.len());
        for &(name, e) in letters {
            raw.push(Letter {
                symbol: self.symbol(name)?,
                exponent: BigInt::from(e),
            });
        }
        Ok(Word::from_letters(self, raw))
    }

    /// Product of the given generators, each with exponent one.
    pub fn product(&self, names: &[&str]) -> Result<Word, WordError> {
        let mut raw = Vec::with_capacity(names.len());
        for &name in names {
            raw.push(Letter {
                symbol: self.symbol(name)?,
                exponent: BigInt::one(),
            });
        }
        Ok(Word::from_letters(self, raw))
    }

    /// Parses whitespace separated letters such as `c1 c2^-1 mu^3`.
    pub fn parse(&self, text: &str) -> Result<Word, WordError> {
        let mut raw = Vec::new();
        for token in text.split_whitespace() {
            let (name, exp) = match token.split_once('^') {
                Some((n, e)) => {
                    let e: BigInt = e
                        .parse()
                        .map_err(|_| WordError::Malformed(format!("bad exponent in `{token}`")))?;
                    (n, e)
                }
                None => (token, BigInt::one()),
            };
            raw.push(Letter {
                symbol: self.symbol(name)?,
                exponent: exp,
            });
        }
        Ok(Word::from_letters(self, raw))
    }
}

/// A symbol raised to a nonzero power.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub symbol: Symbol,
    pub exponent: BigInt,
}

/// A freely reduced word.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word {
    alphabet: Alphabet,
    letters: Vec<Letter>,
}

fn push_reduced(out: &mut Vec<Letter>, letter: Letter) {
    if letter.exponent.is_zero() {
        return;
    }
    if let Some(top) = out.last_mut() {
        if top.symbol == letter.symbol {
            top.exponent += letter.exponent;
            if top.exponent.is_zero() {
                out.pop();
            }
            return;
        }
    }
    out.push(letter);
}

impl Word {
    /// Freely reduces `letters` into a word over `alphabet`.
    pub fn from_letters(alphabet: &Alphabet, letters: Vec<Letter>) -> Word {
        let mut out = Vec::with_capacity(letters.len());
        for l in letters {
            alphabet.check(l.symbol);
            push_reduced(&mut out, l);
        }
        Word {
            alphabet: alphabet.clone(),
            letters: out,
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Number of syllables (maximal powers of one symbol).
    pub fn syllables(&self) -> usize {
        self.letters.len()
    }

    /// Sum of absolute exponents.
    pub fn length(&self) -> BigInt {
        self.letters.iter().map(|l| l.exponent.abs()).sum()
    }

    fn same_alphabet(&self, other: &Word) {
        assert!(
            self.alphabet == other.alphabet,
            "cannot combine words over different alphabets"
        );
    }

    pub fn concat(&self, other: &Word) -> Word {
        self.same_alphabet(other);
        let mut out = self.letters.clone();
        for l in &other.letters {
            push_reduced(&mut out, l.clone());
        }
        Word {
            alphabet: self.alphabet.clone(),
            letters: out,
        }
    }

    pub fn invert(&self) -> Word {
        Word {
            alphabet: self.alphabet.clone(),
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| Letter {
                    symbol: l.symbol,
                    exponent: -l.exponent.clone(),
                })
                .collect(),
        }
    }

    /// `w^-1 · self · w`.
    pub fn conjugate(&self, w: &Word) -> Word {
        w.invert().concat(self).concat(w)
    }

    /// `self^n`; negative powers invert.
    pub fn pow(&self, n: i64) -> Word {
        let base = if n < 0 { self.invert() } else { self.clone() };
        let mut out = self.alphabet.identity();
        for _ in 0..n.unsigned_abs() {
            out = out.concat(&base);
        }
        out
    }

    /// `[self, other] = self · other · self^-1 · other^-1`.
    pub fn commutator(&self, other: &Word) -> Word {
        self.concat(other)
            .concat(&self.invert())
            .concat(&other.invert())
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        match (self.letters.first(), self.letters.last()) {
            (Some(a), Some(b)) => self.letters.len() == 1 || a.symbol != b.symbol,
            _ => true,
        }
    }

    /// Cancels first-against-last letters until the word is cyclically reduced.
    pub fn cyclic_reduce(&self) -> Word {
        let mut letters = self.letters.clone();
        while letters.len() >= 2 && letters[0].symbol == letters[letters.len() - 1].symbol {
            let last = letters.pop().unwrap();
            letters[0].exponent += last.exponent;
            if letters[0].exponent.is_zero() {
                letters.remove(0);
            }
        }
        Word {
            alphabet: self.alphabet.clone(),
            letters,
        }
    }

    pub fn exponent_sum(&self, symbol: Symbol) -> BigInt {
        self.alphabet.check(symbol);
        self.letters
            .iter()
            .filter(|l| l.symbol == symbol)
            .map(|l| l.exponent.clone())
            .sum()
    }

    /// Exponent sums indexed by symbol position.
    pub fn exponent_sums(&self) -> Vec<BigInt> {
        let mut sums = vec![BigInt::zero(); self.alphabet.len()];
        for l in &self.letters {
            sums[l.symbol.index()] += &l.exponent;
        }
        sums
    }

    pub fn contains(&self, symbol: Symbol) -> bool {
        self.letters.iter().any(|l| l.symbol == symbol)
    }

    /// Replaces each symbol by a word over `target` (a symbol mapped to
    /// `None` is kept by name and must exist in `target`).
    pub fn substitute<F>(&self, target: &Alphabet, mut image: F) -> Result<Word, WordError>
    where
        F: FnMut(&str) -> Option<Word>,
    {
        let mut out = target.identity();
        for l in &self.letters {
            let name = self.alphabet.name(l.symbol);
            let base = match image(name) {
                Some(w) => w,
                None => target.generator(name)?,
            };
            let n = l
                .exponent
                .to_i64()
                .ok_or_else(|| WordError::Malformed("exponent too large to substitute".into()))?;
            out = out.concat(&base.pow(n));
        }
        Ok(out)
    }

    /// Rewrites the word over another alphabet holding the same names.
    pub fn transfer(&self, target: &Alphabet) -> Result<Word, WordError> {
        self.substitute(target, |_| None)
    }

    /// JSON array of `[name, exponent]` pairs.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.letters
                .iter()
                .map(|l| {
                    let exp = match l.exponent.to_i64() {
                        Some(e) => Value::from(e),
                        None => Value::String(l.exponent.to_string()),
                    };
                    Value::Array(vec![
                        Value::String(self.alphabet.name(l.symbol).to_string()),
                        exp,
                    ])
                })
                .collect(),
        )
    }

    pub fn from_json(alphabet: &Alphabet, value: &Value) -> Result<Word, WordError> {
        let items = value
            .as_array()
            .ok_or_else(|| WordError::Malformed("word must be a JSON array".into()))?;
        let mut raw = Vec::with_capacity(items.len());
        for item in items {
            let pair = item
                .as_array()
                .filter(|p| p.len() == 2)
                .ok_or_else(|| WordError::Malformed("letter must be [name, exponent]".into()))?;
            let name = pair[0]
                .as_str()
                .ok_or_else(|| WordError::Malformed("letter name must be a string".into()))?;
            let exponent = match &pair[1] {
                Value::Number(n) => n
                    .as_i64()
                    .map(BigInt::from)
                    .ok_or_else(|| WordError::Malformed(format!("bad exponent {n}")))?,
                Value::String(s) => s
                    .parse()
                    .map_err(|_| WordError::Malformed(format!("bad exponent {s}")))?,
                other => return Err(WordError::Malformed(format!("bad exponent {other}"))),
            };
            if exponent.is_zero() {
                return Err(WordError::Malformed("zero exponent".into()));
            }
            raw.push(Letter {
                symbol: alphabet.symbol(name)?,
                exponent,
            });
        }
        let word = Word::from_letters(alphabet, raw);
        if word.letters.len() != items.len() {
            return Err(WordError::Malformed("word is not freely reduced".into()));
        }
        Ok(word)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(self.alphabet.name(l.symbol))?;
            if !l.exponent.is_one() {
                write!(f, "^{}", l.exponent)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl std::ops::Mul for &Word {
    type Output = Word;

    fn mul(self, rhs: &Word) -> Word {
        self.concat(rhs)
    }
}
