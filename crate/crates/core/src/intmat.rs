//! Exact integer linear algebra: Smith normal form and abelianization.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::matrix::MatrixError;
use crate::presentations::Presentation;
use crate::IntegerMatrix;

/// `u · a · v = d` with `u`, `v` unimodular and `d` diagonal, nonnegative,
/// each nonzero diagonal entry dividing the next.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithNormalForm {
    pub d: IntegerMatrix,
    pub u: IntegerMatrix,
    pub v: IntegerMatrix,
}

impl SmithNormalForm {
    /// Nonzero diagonal entries of `d`.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.d
            .diagonal()
            .into_iter()
            .filter(|x| !x.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

pub fn smith_normal_form(a: &IntegerMatrix) -> SmithNormalForm {
    let mut d = a.clone();
    let mut u = IntegerMatrix::identity(a.rows());
    let mut v = IntegerMatrix::identity(a.cols());
    diagonalize(&mut d, Some((&mut u, &mut v)));
    SmithNormalForm { d, u, v }
}

/// Invariant factors only; skips the transform bookkeeping, which dominates
/// the cost on tall relation matrices.
pub fn invariant_factors(a: &IntegerMatrix) -> Vec<BigInt> {
    let mut d = a.clone();
    diagonalize(&mut d, None);
    d.diagonal().into_iter().filter(|x| !x.is_zero()).collect()
}

type Transforms<'a> = Option<(&'a mut IntegerMatrix, &'a mut IntegerMatrix)>;

fn smallest_nonzero(d: &IntegerMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..d.rows() {
        for j in t..d.cols() {
            let x = &d[(i, j)];
            if x.is_zero() {
                continue;
            }
            match best {
                Some(b) if d[b].abs() <= x.abs() => {}
                _ => {
                    if x.abs().is_one() {
                        return Some((i, j));
                    }
                    best = Some((i, j));
                }
            }
        }
    }
    best
}

fn diagonalize(d: &mut IntegerMatrix, mut tr: Transforms<'_>) {
    let (m, n) = (d.rows(), d.cols());
    for t in 0..m.min(n) {
        loop {
            let Some((pi, pj)) = smallest_nonzero(d, t) else {
                return;
            };
            d.swap_rows(t, pi);
            d.swap_cols(t, pj);
            if let Some((u, v)) = tr.as_mut() {
                u.swap_rows(t, pi);
                v.swap_cols(t, pj);
            }
            let pivot = d[(t, t)].clone();
            let mut clean = true;
            for i in t + 1..m {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let q = -d[(i, t)].div_floor(&pivot);
                d.add_row_multiple(i, t, &q);
                if let Some((u, _)) = tr.as_mut() {
                    u.add_row_multiple(i, t, &q);
                }
                clean &= d[(i, t)].is_zero();
            }
            for j in t + 1..n {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let q = -d[(t, j)].div_floor(&pivot);
                d.add_col_multiple(j, t, &q);
                if let Some((_, v)) = tr.as_mut() {
                    v.add_col_multiple(j, t, &q);
                }
                clean &= d[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }
            // Divisibility: fold an offending row into the pivot row and retry.
            let offending = (t + 1..m).find(|&i| {
                (t + 1..n).any(|j| !d[(i, j)].mod_floor(&pivot).is_zero())
            });
            match offending {
                Some(i) => {
                    let one = BigInt::one();
                    d.add_row_multiple(t, i, &one);
                    if let Some((u, _)) = tr.as_mut() {
                        u.add_row_multiple(t, i, &one);
                    }
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            if let Some((u, _)) = tr.as_mut() {
                u.negate_row(t);
            }
        }
    }
}

/// One row per relator, one column per generator: exponent sums.
pub fn relation_matrix(p: &Presentation) -> IntegerMatrix {
    let cols = p.alphabet().len();
    let mut entries = Vec::with_capacity(p.relators().len() * cols);
    for r in p.relators() {
        entries.extend(r.word.exponent_sums());
    }
    IntegerMatrix::new(p.relators().len(), cols, entries).expect("relation matrix shape")
}

/// Finitely generated abelian group `Z^free_rank ⊕ ⊕ Z/d_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianInvariants {
    pub torsion: Vec<BigInt>,
    pub free_rank: usize,
}

impl AbelianInvariants {
    pub fn from_invariant_factors(factors: &[BigInt], generators: usize) -> Self {
        AbelianInvariants {
            torsion: factors.iter().filter(|d| !d.is_one()).cloned().collect(),
            free_rank: generators - factors.len(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.torsion.is_empty() && self.free_rank == 0
    }

    pub fn to_json(&self) -> Value {
        json!({
            "free_rank": self.free_rank,
            "torsion": self.torsion.iter().map(int_to_json).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            k => parts.push(format!("Z^{k}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        f.write_str(&parts.join(" + "))
    }
}

/// Abelianization of a presentation via the invariant factors of its relation
/// matrix.
pub fn abelianize(p: &Presentation) -> AbelianInvariants {
    let cols = p.alphabet().len();
    // Zero and repeated rows do not change the cokernel.
    let mut rows: Vec<Vec<BigInt>> = p
        .relators()
        .iter()
        .map(|r| r.word.exponent_sums())
        .filter(|row| row.iter().any(|x| !x.is_zero()))
        .collect();
    rows.sort();
    rows.dedup();
    let n = rows.len();
    let m = IntegerMatrix::new(n, cols, rows.into_iter().flatten().collect())
        .expect("relation matrix shape");
    AbelianInvariants::from_invariant_factors(&invariant_factors(&m), cols)
}

fn int_to_json(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => Value::from(v),
        None => Value::String(x.to_string()),
    }
}

fn int_from_json(v: &Value) -> Result<BigInt, MatrixError> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| MatrixError::Dimension(format!("non-integer entry {n}"))),
        Value::String(s) => s
            .parse()
            .map_err(|_| MatrixError::Dimension(format!("non-integer entry {s}"))),
        other => Err(MatrixError::Dimension(format!("non-integer entry {other}"))),
    }
}

/// `{ "rows": int, "cols": int, "entries": [[int]] }`.
pub fn matrix_to_json(m: &IntegerMatrix) -> Value {
    json!({
        "rows": m.rows(),
        "cols": m.cols(),
        "entries": m.to_rows().iter()
            .map(|r| r.iter().map(int_to_json).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    })
}

pub fn matrix_from_json(v: &Value) -> Result<IntegerMatrix, MatrixError> {
    let field = |k: &str| {
        v.get(k)
            .and_then(Value::as_u64)
            .map(|x| x as usize)
            .ok_or_else(|| MatrixError::Dimension(format!("missing `{k}`")))
    };
    let (rows, cols) = (field("rows")?, field("cols")?);
    let entries = v
        .get("entries")
        .and_then(Value::as_array)
        .ok_or_else(|| MatrixError::Dimension("missing `entries`".into()))?;
    if entries.len() != rows {
        return Err(MatrixError::Dimension(format!(
            "declared {rows} rows, found {}",
            entries.len()
        )));
    }
    let mut flat = Vec::with_capacity(rows * cols);
    for r in entries {
        let r = r.as_array().ok_or(MatrixError::Ragged)?;
        if r.len() != cols {
            return Err(MatrixError::Ragged);
        }
        for x in r {
            flat.push(int_from_json(x)?);
        }
    }
    IntegerMatrix::new(rows, cols, flat)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(rows: &[&[i64]]) -> IntegerMatrix {
        IntegerMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    fn check_contract(a: &IntegerMatrix, s: &SmithNormalForm) {
        assert_eq!(&(&s.u * a) * &s.v, s.d);
        assert!(s.d.is_diagonal());
        assert!(s.u.determinant().abs().is_one());
        assert!(s.v.determinant().abs().is_one());
        let f = s.invariant_factors();
        for w in f.windows(2) {
            assert!((&w[1] % &w[0]).is_zero());
        }
        assert!(s.d.diagonal().iter().all(|x| !x.is_negative()));
    }

    #[test]
    fn identity_and_zero() {
        let i = IntegerMatrix::identity(4);
        let s = smith_normal_form(&i);
        assert_eq!(s.d, i);
        check_contract(&i, &s);
        let z = IntegerMatrix::zeros(3, 5);
        let s = smith_normal_form(&z);
        assert!(s.d.is_zero());
        check_contract(&z, &s);
    }

    #[test]
    fn two_by_two_example() {
        // Minor-gcd: d1 = gcd(2,4,6,8) = 2, d1·d2 = |det| = 8.
        let a = int(&[&[2, 4], &[6, 8]]);
        let s = smith_normal_form(&a);
        check_contract(&a, &s);
        assert_eq!(s.d, int(&[&[2, 0], &[0, 4]]));
    }

    #[test]
    fn divisibility_fixup_needed() {
        let a = int(&[&[2, 0], &[0, 3]]);
        let s = smith_normal_form(&a);
        check_contract(&a, &s);
        assert_eq!(s.invariant_factors(), vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn empty_shapes() {
        let a = IntegerMatrix::zeros(0, 3);
        let s = smith_normal_form(&a);
        assert_eq!(s.v, IntegerMatrix::identity(3));
        assert!(invariant_factors(&a).is_empty());
    }

    #[test]
    fn invariants_display() {
        let g = AbelianInvariants {
            torsion: vec![BigInt::from(2), BigInt::from(4)],
            free_rank: 2,
        };
        assert_eq!(g.to_string(), "Z^2 + Z/2 + Z/4");
        assert_eq!(
            AbelianInvariants::from_invariant_factors(&[], 0).to_string(),
            "0"
        );
    }

    #[test]
    fn matrix_json_round_trip() {
        let a = int(&[&[1, -2, 3], &[0, 5, 6]]);
        let v = matrix_to_json(&a);
        assert_eq!(
            v.to_string(),
            r#"{"cols":3,"entries":[[1,-2,3],[0,5,6]],"rows":2}"#
        );
        assert_eq!(matrix_from_json(&v).unwrap(), a);
        let bad: Value = serde_json::from_str(r#"{"rows":2,"cols":1,"entries":[[1]]}"#).unwrap();
        assert!(matrix_from_json(&bad).is_err());
    }
}
