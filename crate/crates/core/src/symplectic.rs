//! The symplectic representation as a relator oracle, and exact evaluation of
//! projective representation candidates.
//!
//! Homology classes are integer vectors in the basis `x1 … xg, y1 … yg` with
//! `<x_i, y_i> = 1`. A Dehn twist along a curve of class `v` acts as the
//! transvection `x ↦ x + <x, v> v`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};
use thiserror::Error;

use crate::matrix::Scalar;
use crate::presentations::{
    relator_library, Family, IntersectionTable, Presentation, CENTRAL,
};
use crate::words::{Alphabet, Symbol, Word};
use crate::{IntegerMatrix, Matrix, RationalMatrix};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymplecticError {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("no homology class for `{0}`")]
    NoClass(String),
    #[error("no image assigned to `{0}`")]
    MissingAssignment(String),
    #[error("invalid assignment: {0}")]
    InvalidAssignment(String),
    #[error("matrix does not preserve the symplectic form")]
    NotSymplectic,
}

/// A vector in `H_1(Σ_g; Z)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomologyClass {
    coords: Vec<BigInt>,
}

impl HomologyClass {
    pub fn new(coords: Vec<BigInt>) -> Result<Self, SymplecticError> {
        if !coords.len().is_multiple_of(2) {
            return Err(SymplecticError::Dimension(format!(
                "homology vector of odd length {}",
                coords.len()
            )));
        }
        Ok(HomologyClass { coords })
    }

    pub fn zero(g: u32) -> Self {
        HomologyClass {
            coords: vec![BigInt::zero(); 2 * g as usize],
        }
    }

    fn basis(g: u32, slot: usize) -> Self {
        let mut v = Self::zero(g);
        v.coords[slot] = BigInt::one();
        v
    }

    /// `x_i`, 1-based.
    pub fn x(g: u32, i: u32) -> Self {
        assert!((1..=g).contains(&i), "x index out of range");
        Self::basis(g, (i - 1) as usize)
    }

    /// `y_i`, 1-based.
    pub fn y(g: u32, i: u32) -> Self {
        assert!((1..=g).contains(&i), "y index out of range");
        Self::basis(g, (g + i - 1) as usize)
    }

    pub fn genus(&self) -> u32 {
        (self.coords.len() / 2) as u32
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// `<self, other> = Σ u_i v_{g+i} - u_{g+i} v_i`.
    pub fn pairing(&self, other: &Self) -> BigInt {
        assert_eq!(self.coords.len(), other.coords.len(), "pairing across genera");
        let g = self.coords.len() / 2;
        (0..g)
            .map(|i| {
                &self.coords[i] * &other.coords[g + i] - &self.coords[g + i] * &other.coords[i]
            })
            .sum()
    }

    pub fn plus(&self, other: &Self) -> Self {
        HomologyClass {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negated())
    }

    pub fn negated(&self) -> Self {
        HomologyClass {
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }

    /// The covector `f` with `f · x = <x, self>`.
    fn dual(&self) -> Vec<BigInt> {
        let g = self.coords.len() / 2;
        let mut f = Vec::with_capacity(2 * g);
        f.extend(self.coords[g..].iter().cloned());
        f.extend(self.coords[..g].iter().map(|a| -a));
        f
    }
}

/// The Gram matrix `J` of the pairing.
pub fn symplectic_form(g: u32) -> IntegerMatrix {
    let n = g as usize;
    let mut j = IntegerMatrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        j[(i, n + i)] = BigInt::one();
        j[(n + i, i)] = -BigInt::one();
    }
    j
}

/// An element of `Sp(2g, Z)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymplecticElement {
    matrix: IntegerMatrix,
}

impl SymplecticElement {
    /// Accepts `m` only if `mᵀ J m = J`.
    pub fn new(m: IntegerMatrix) -> Result<Self, SymplecticError> {
        if !m.is_square() || !m.rows().is_multiple_of(2) {
            return Err(SymplecticError::Dimension(format!(
                "{}x{} is not an even square shape",
                m.rows(),
                m.cols()
            )));
        }
        let j = symplectic_form((m.rows() / 2) as u32);
        if &(&m.transpose() * &j) * &m != j {
            return Err(SymplecticError::NotSymplectic);
        }
        Ok(SymplecticElement { matrix: m })
    }

    pub fn identity(g: u32) -> Self {
        SymplecticElement {
            matrix: IntegerMatrix::identity(2 * g as usize),
        }
    }

    pub fn genus(&self) -> u32 {
        (self.matrix.rows() / 2) as u32
    }

    pub fn matrix(&self) -> &IntegerMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> IntegerMatrix {
        self.matrix
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity()
    }

    pub fn compose(&self, other: &Self) -> Self {
        SymplecticElement {
            matrix: &self.matrix * &other.matrix,
        }
    }

    pub fn apply(&self, v: &HomologyClass) -> HomologyClass {
        HomologyClass {
            coords: self.matrix.mul_vec(&v.coords),
        }
    }
}

/// `T_v^k`, i.e. `I + k v fᵀ`.
pub fn transvection_power(
    v: &HomologyClass,
    g: u32,
    k: &BigInt,
) -> Result<SymplecticElement, SymplecticError> {
    if v.coords.len() != 2 * g as usize {
        return Err(SymplecticError::Dimension(format!(
            "class of length {} in genus {g}",
            v.coords.len()
        )));
    }
    let mut m = IntegerMatrix::identity(2 * g as usize);
    m.add_outer(k, &v.coords, &v.dual());
    Ok(SymplecticElement { matrix: m })
}

/// The transvection along `v` in genus `g`.
pub fn transvection(v: &HomologyClass, g: u32) -> Result<SymplecticElement, SymplecticError> {
    transvection_power(v, g, &BigInt::one())
}

fn parse_index(s: &str) -> Option<u32> {
    if s.is_empty() || (s.len() > 1 && s.starts_with('0')) {
        return None;
    }
    s.parse().ok()
}

/// Homology class of a curve generator in the tabulated model of `family`.
pub fn curve_class(family: Family, symbol: &str, g: u32, r: u32) -> Result<HomologyClass, SymplecticError> {
    let none = || SymplecticError::NoClass(symbol.to_string());
    match family {
        Family::WajnrybLift | Family::Genus2 => {
            let i = symbol.strip_prefix('c').and_then(parse_index).ok_or_else(none)?;
            let has_c0 = family == Family::WajnrybLift && g >= 2;
            match i {
                0 if has_c0 => Ok(HomologyClass::y(g, 2)),
                1 => Ok(HomologyClass::y(g, 1)),
                i if i >= 2 && i <= 2 * g && i % 2 == 0 => Ok(HomologyClass::x(g, i / 2)),
                i if i < 2 * g && i % 2 == 1 => {
                    let k = i / 2;
                    Ok(HomologyClass::y(g, k).minus(&HomologyClass::y(g, k + 1)))
                }
                i if i == 2 * g + 1 => Ok(HomologyClass::y(g, g)),
                _ => Err(none()),
            }
        }
        Family::GervaisLift => {
            let n = 2 * g + r - 2;
            let a = |k: u32| {
                let x1 = HomologyClass::x(g, 1);
                if k.is_multiple_of(2) && k <= 2 * g - 2 {
                    x1.plus(&HomologyClass::y(g, k / 2 + 1))
                } else {
                    x1
                }
            };
            if symbol == "b" {
                return Ok(HomologyClass::y(g, 1));
            }
            if let Some(rest) = symbol.strip_prefix('a') {
                let k = parse_index(rest).filter(|k| (1..=n).contains(k)).ok_or_else(none)?;
                return Ok(a(k));
            }
            if let Some(rest) = symbol.strip_prefix('b') {
                let i = parse_index(rest).filter(|i| (1..g).contains(i)).ok_or_else(none)?;
                return Ok(HomologyClass::x(g, i + 1));
            }
            if let Some((i, j)) = symbol.strip_prefix('c').and_then(|s| s.split_once('_')) {
                let i = parse_index(i).filter(|i| (1..=n).contains(i)).ok_or_else(none)?;
                let j = parse_index(j).filter(|j| (1..=n).contains(j)).ok_or_else(none)?;
                if i == j {
                    return Err(none());
                }
                return Ok(a(j).minus(&a(i)));
            }
            Err(none())
        }
    }
}

/// Image of one generator.
#[derive(Clone, Debug, PartialEq)]
pub enum Image<T> {
    Identity,
    /// `I + v fᵀ`; powers are `I + k v fᵀ`, applied as rank-one updates.
    Transvection { v: Vec<T>, f: Vec<T> },
    Matrix {
        forward: Matrix<T>,
        inverse: Matrix<T>,
    },
}

/// Images of the generators of one alphabet in a common dimension.
#[derive(Clone, Debug)]
pub struct Assignment<T> {
    alphabet: Alphabet,
    dimension: usize,
    images: Vec<Option<Image<T>>>,
}

pub type RationalAssignment = Assignment<BigRational>;

impl<T: Scalar> Assignment<T> {
    pub fn new(alphabet: &Alphabet, dimension: usize) -> Self {
        Assignment {
            alphabet: alphabet.clone(),
            dimension,
            images: vec![None; alphabet.len()],
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    fn slot(&self, name: &str) -> Result<usize, SymplecticError> {
        self.alphabet
            .symbol(name)
            .map(Symbol::index)
            .map_err(|_| SymplecticError::InvalidAssignment(format!("unknown generator `{name}`")))
    }

    pub fn image(&self, name: &str) -> Option<&Image<T>> {
        self.slot(name).ok().and_then(|i| self.images[i].as_ref())
    }

    pub fn set_identity(&mut self, name: &str) -> Result<(), SymplecticError> {
        let i = self.slot(name)?;
        self.images[i] = Some(Image::Identity);
        Ok(())
    }

    /// Assigns the transvection along `class` for the pairing on `T^dim`.
    pub fn set_transvection(&mut self, name: &str, class: &HomologyClass) -> Result<(), SymplecticError> {
        if class.coords.len() != self.dimension {
            return Err(SymplecticError::Dimension(format!(
                "class of length {} for dimension {}",
                class.coords.len(),
                self.dimension
            )));
        }
        let i = self.slot(name)?;
        let v = class.coords.iter().map(T::from_bigint).collect();
        let f = class.dual().iter().map(T::from_bigint).collect();
        self.images[i] = Some(Image::Transvection { v, f });
        Ok(())
    }

    /// Assigns `forward` with a known inverse; the pair is checked.
    pub fn set_matrix(&mut self, name: &str, forward: Matrix<T>, inverse: Matrix<T>) -> Result<(), SymplecticError> {
        for m in [&forward, &inverse] {
            if m.rows() != self.dimension || m.cols() != self.dimension {
                return Err(SymplecticError::Dimension(format!(
                    "`{name}` is {}x{}, expected {d}x{d}",
                    m.rows(),
                    m.cols(),
                    d = self.dimension
                )));
            }
        }
        if !(&forward * &inverse).is_identity() {
            return Err(SymplecticError::InvalidAssignment(format!(
                "given inverse for `{name}` is wrong"
            )));
        }
        let i = self.slot(name)?;
        self.images[i] = Some(Image::Matrix { forward, inverse });
        Ok(())
    }

    /// Generators without an image, in alphabet order.
    pub fn missing(&self) -> Vec<String> {
        self.alphabet
            .names()
            .iter()
            .zip(&self.images)
            .filter(|(_, im)| im.is_none())
            .map(|(n, _)| n.clone())
            .collect()
    }

    /// Dense matrix of the image of `name`.
    pub fn matrix_of(&self, name: &str) -> Option<Matrix<T>> {
        let n = self.dimension;
        Some(match self.image(name)? {
            Image::Identity => Matrix::identity(n),
            Image::Transvection { v, f } => {
                let mut m = Matrix::identity(n);
                m.add_outer(&T::one(), v, f);
                m
            }
            Image::Matrix { forward, .. } => forward.clone(),
        })
    }
}

impl<T: Scalar + std::ops::Div<Output = T>> Assignment<T> {
    /// Assigns `m`, computing its inverse; singular matrices are rejected.
    pub fn set_invertible(&mut self, name: &str, m: Matrix<T>) -> Result<(), SymplecticError> {
        if !m.is_square() {
            return Err(SymplecticError::Dimension(format!("`{name}` is not square")));
        }
        let inverse = m
            .inverse()
            .ok_or_else(|| SymplecticError::InvalidAssignment(format!("`{name}` is not invertible")))?;
        self.set_matrix(name, m, inverse)
    }
}

fn matrix_power<T: Scalar>(base: &Matrix<T>, e: &num_bigint::BigUint) -> Matrix<T> {
    let mut acc = Matrix::identity(base.rows());
    for bit in (0..e.bits()).rev() {
        acc = &acc * &acc;
        if e.bit(bit) {
            acc = &acc * base;
        }
    }
    acc
}

/// Product of the generator images along `word`, left to right.
pub fn evaluate<T: Scalar>(word: &Word, assignment: &Assignment<T>) -> Result<Matrix<T>, SymplecticError> {
    if word.alphabet() != &assignment.alphabet {
        return Err(SymplecticError::InvalidAssignment(
            "word and assignment use different alphabets".into(),
        ));
    }
    let mut acc = Matrix::identity(assignment.dimension);
    for letter in word.letters() {
        let image = assignment.images[letter.symbol.index()].as_ref().ok_or_else(|| {
            SymplecticError::MissingAssignment(assignment.alphabet.name(letter.symbol).to_string())
        })?;
        match image {
            Image::Identity => {}
            Image::Transvection { v, f } => {
                let column = acc.mul_vec(v);
                acc.add_outer(&T::from_bigint(&letter.exponent), &column, f);
            }
            Image::Matrix { forward, inverse } => {
                let base = if letter.exponent.is_negative() { inverse } else { forward };
                acc = &acc * &matrix_power(base, letter.exponent.magnitude());
            }
        }
    }
    Ok(acc)
}

/// Transvection images for every curve generator of `family`, identity for
/// the central generator.
pub fn symplectic_assignment_for(
    alphabet: &Alphabet,
    family: Family,
    g: u32,
    r: u32,
) -> Result<Assignment<BigInt>, SymplecticError> {
    let mut a = Assignment::new(alphabet, 2 * g as usize);
    for name in alphabet.names() {
        if name == CENTRAL {
            a.set_identity(name)?;
        } else {
            a.set_transvection(name, &curve_class(family, name, g, r)?)?;
        }
    }
    Ok(a)
}

pub fn symplectic_assignment(p: &Presentation) -> Result<Assignment<BigInt>, SymplecticError> {
    symplectic_assignment_for(p.alphabet(), p.family(), p.genus(), p.boundary())
}

/// Dense rational version of the symplectic assignment with every curve
/// generator multiplied by `scale` and the central generator sent to
/// `scale^10 · I`, so the chain relator stays linear while the lantern
/// picks up `scale^-1`.
pub fn scaled_symplectic_assignment(
    p: &Presentation,
    scale: &BigRational,
) -> Result<RationalAssignment, SymplecticError> {
    if scale.is_zero() {
        return Err(SymplecticError::InvalidAssignment("scale must be nonzero".into()));
    }
    let g = p.genus();
    let n = 2 * g as usize;
    let inv_scale = scale.recip();
    let mut a = Assignment::new(p.alphabet(), n);
    for name in p.alphabet().names() {
        if name == CENTRAL {
            let s10 = num_traits::pow(scale.clone(), 10);
            let forward = RationalMatrix::scalar(n, s10.clone());
            a.set_matrix(name, forward, RationalMatrix::scalar(n, s10.recip()))?;
            continue;
        }
        let v = curve_class(p.family(), name, g, p.boundary())?;
        let vq: Vec<BigRational> = v.coords.iter().map(BigRational::from_bigint).collect();
        let fq: Vec<BigRational> = v.dual().iter().map(BigRational::from_bigint).collect();
        let mut forward = RationalMatrix::identity(n);
        forward.add_outer(&BigRational::one(), &vq, &fq);
        let mut inverse = RationalMatrix::identity(n);
        inverse.add_outer(&-BigRational::one(), &vq, &fq);
        a.set_matrix(name, forward.scale(scale), inverse.scale(&inv_scale))?;
    }
    Ok(a)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelatorCheck {
    pub label: String,
    pub identity: bool,
}

/// Outcome of the symplectic relator check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpReport {
    pub family: Family,
    pub g: u32,
    pub r: u32,
    pub checks: Vec<RelatorCheck>,
    /// Table entries contradicting the homology classes, or classes that
    /// could not be assigned at all.
    pub issues: Vec<String>,
}

impl SpReport {
    pub fn passed(&self) -> bool {
        self.issues.is_empty() && self.checks.iter().all(|c| c.identity)
    }

    pub fn failures(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|c| !c.identity)
            .map(|c| c.label.as_str())
            .collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "family": self.family.name(),
            "g": self.g,
            "r": self.r,
            "passed": self.passed(),
            "relators": self.checks.len(),
            "failures": self.failures(),
            "issues": self.issues,
        })
    }
}

impl fmt::Display for SpReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ok = self.checks.iter().filter(|c| c.identity).count();
        writeln!(
            f,
            "{} g={} r={}: {}/{} relators map to the identity in Sp({}, Z)",
            self.family,
            self.g,
            self.r,
            ok,
            self.checks.len(),
            2 * self.g
        )?;
        for label in self.failures() {
            writeln!(f, "FAIL {label}")?;
        }
        for issue in &self.issues {
            writeln!(f, "ISSUE {issue}")?;
        }
        Ok(())
    }
}

/// Pairs of the standard table whose entry (0 or 1) differs from the
/// absolute algebraic pairing of the assigned classes.
pub fn table_consistency(table: &IntersectionTable, family: Family, g: u32, r: u32) -> Vec<String> {
    let mut issues = Vec::new();
    for (x, y, entry) in table.pairs() {
        let Some(expected) = entry.as_number() else { continue };
        match (curve_class(family, x, g, r), curve_class(family, y, g, r)) {
            (Ok(u), Ok(v)) => {
                let p = u.pairing(&v).abs();
                if p != BigInt::from(expected) {
                    issues.push(format!("I({x},{y}) = {expected} but |<[{x}],[{y}]>| = {p}"));
                }
            }
            (Err(e), _) | (_, Err(e)) => issues.push(e.to_string()),
        }
    }
    issues
}

/// Evaluates every relator in `Sp(2g, Z)`, in parallel; report order follows
/// the presentation.
pub fn verify_presentation_sp(p: &Presentation) -> SpReport {
    let mut report = SpReport {
        family: p.family(),
        g: p.genus(),
        r: p.boundary(),
        checks: Vec::new(),
        issues: Vec::new(),
    };
    if let Ok(table) = IntersectionTable::standard(p.family(), p.genus(), p.boundary()) {
        let ok = table.names().iter().all(|n| p.alphabet().contains(n));
        if ok {
            report.issues = table_consistency(&table, p.family(), p.genus(), p.boundary());
        }
    }
    let assignment = match symplectic_assignment(p) {
        Ok(a) => a,
        Err(e) => {
            report.issues.push(e.to_string());
            return report;
        }
    };
    report.checks = p
        .relators()
        .par_iter()
        .map(|rel| RelatorCheck {
            label: rel.label.clone(),
            identity: evaluate(&rel.word, &assignment).is_ok_and(|m| m.is_identity()),
        })
        .collect();
    report
}

/// Whether the two orderings of the chain central element agree in
/// `Sp(2g, Z)` (they do when `c0` and `b0` commute on homology).
pub fn chain_orderings_agree(g: u32) -> Result<bool, SymplecticError> {
    let lib = relator_library(g, 1).map_err(|e| SymplecticError::InvalidAssignment(e.to_string()))?;
    let (a, b) = (&lib["kappa_chain"], &lib["kappa_chain_alt"]);
    let assignment = symplectic_assignment_for(a.alphabet(), Family::WajnrybLift, g, 1)?;
    Ok(evaluate(a, &assignment)? == evaluate(b, &assignment)?)
}

/// Result of evaluating one relator under a rational assignment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RepOutcome {
    /// The image is `c · I`.
    Scalar(BigRational),
    /// Largest entry of `M - M[0,0] · I` in magnitude, and where it sits.
    NotScalar {
        deviation: BigRational,
        at: (usize, usize),
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepCheck {
    pub label: String,
    pub outcome: RepOutcome,
}

impl RepCheck {
    pub fn scalar(&self) -> Option<&BigRational> {
        match &self.outcome {
            RepOutcome::Scalar(c) => Some(c),
            RepOutcome::NotScalar { .. } => None,
        }
    }
}

fn classify(m: &RationalMatrix) -> RepOutcome {
    if let Some(c) = m.as_scalar() {
        return RepOutcome::Scalar(c);
    }
    let c = m[(0, 0)].clone();
    let mut best = (BigRational::zero(), (0, 0));
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let target = if i == j { c.clone() } else { BigRational::zero() };
            let d = (m[(i, j)].clone() - target).abs();
            if d > best.0 {
                best = (d, (i, j));
            }
        }
    }
    RepOutcome::NotScalar {
        deviation: best.0,
        at: best.1,
    }
}

/// Evaluates every relator under `assignment` and reports the scalar it maps
/// to, if any. Every generator must be assigned.
pub fn verify_projective_rep(
    p: &Presentation,
    assignment: &RationalAssignment,
) -> Result<Vec<RepCheck>, SymplecticError> {
    if assignment.alphabet() != p.alphabet() {
        return Err(SymplecticError::InvalidAssignment(
            "assignment was built for a different alphabet".into(),
        ));
    }
    if let Some(name) = assignment.missing().into_iter().next() {
        return Err(SymplecticError::MissingAssignment(name));
    }
    if assignment.dimension() == 0 {
        return Err(SymplecticError::InvalidAssignment("dimension must be positive".into()));
    }
    p.relators()
        .par_iter()
        .map(|rel| {
            Ok(RepCheck {
                label: rel.label.clone(),
                outcome: classify(&evaluate(&rel.word, assignment)?),
            })
        })
        .collect()
}

fn parse_rational(v: &Value) -> Result<BigRational, SymplecticError> {
    let bad = || SymplecticError::InvalidAssignment(format!("not a rational: {v}"));
    match v {
        Value::String(s) => {
            let q: BigRational = s.trim().parse().map_err(|_| bad())?;
            Ok(q)
        }
        Value::Number(n) => n.as_i64().map(|x| BigRational::from_integer(x.into())).ok_or_else(bad),
        _ => Err(bad()),
    }
}

fn rational_string(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

impl RationalAssignment {
    /// Parses `{"dimension": n, "matrices": {name: [["p/q", …], …]}}` against
    /// `alphabet`. Every generator must be present and invertible.
    pub fn from_json(alphabet: &Alphabet, v: &Value) -> Result<Self, SymplecticError> {
        let bad = |m: String| SymplecticError::InvalidAssignment(m);
        let dim = v
            .get("dimension")
            .and_then(Value::as_u64)
            .ok_or_else(|| bad("missing `dimension`".into()))? as usize;
        if dim == 0 {
            return Err(bad("dimension must be positive".into()));
        }
        let matrices = v
            .get("matrices")
            .and_then(Value::as_object)
            .ok_or_else(|| bad("missing `matrices`".into()))?;
        let mut a = Assignment::new(alphabet, dim);
        for (name, rows) in matrices {
            let rows = rows
                .as_array()
                .ok_or_else(|| bad(format!("`{name}` must be a list of rows")))?;
            let mut parsed = Vec::with_capacity(rows.len());
            for row in rows {
                let row = row
                    .as_array()
                    .ok_or_else(|| bad(format!("`{name}` has a non-list row")))?;
                parsed.push(row.iter().map(parse_rational).collect::<Result<Vec<_>, _>>()?);
            }
            if parsed.len() != dim || parsed.iter().any(|r| r.len() != dim) {
                return Err(SymplecticError::Dimension(format!(
                    "`{name}` is not {dim}x{dim}"
                )));
            }
            let m = RationalMatrix::from_rows(parsed)
                .map_err(|e| SymplecticError::Dimension(e.to_string()))?;
            a.set_invertible(name, m)?;
        }
        if let Some(name) = a.missing().into_iter().next() {
            return Err(SymplecticError::MissingAssignment(name));
        }
        Ok(a)
    }

    /// Canonical JSON with matrices keyed by generator name.
    pub fn to_json(&self) -> Value {
        let mut matrices = BTreeMap::new();
        for name in self.alphabet.names() {
            if let Some(m) = self.matrix_of(name) {
                let rows: Vec<Vec<String>> = m
                    .to_rows()
                    .iter()
                    .map(|r| r.iter().map(rational_string).collect())
                    .collect();
                matrices.insert(name.clone(), rows);
            }
        }
        json!({ "dimension": self.dimension, "matrices": matrices })
    }
}
