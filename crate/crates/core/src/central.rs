//! Central-element calculus for positive Dehn twist factorizations.
//!
//! A factorization of the identity by `m` positive twists, `m_ns` of them
//! along nonseparating curves, with signature `σ`, has central value
//! `I_g = σ + m - m_ns`. Writing that element as `κ_chain^N_C · κ_lantern^N_L`
//! and comparing nonseparating counts gives
//!
//! ```text
//! m_ns = N_L + 10 N_C
//! σ    = N_L +  6 N_C + m - m_ns
//! ```
//!
//! which the solvers invert exactly.

use std::fmt;

use num_integer::Integer;
use serde_json::{json, Value};
use thiserror::Error;

/// `I_g(κ_chain)`.
pub const IG_KAPPA_CHAIN: i64 = -6;
/// `I_g(κ_lantern)` for `g ≥ 3`.
pub const IG_KAPPA_LANTERN: i64 = 1;
/// Net nonseparating count of `κ_chain`: twelve chain letters minus `c0`, `b0`.
pub const EPS_NS_KAPPA_CHAIN: i64 = 10;
/// Net nonseparating count of `κ_lantern`: three letters minus four.
pub const EPS_NS_KAPPA_LANTERN: i64 = -1;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CentralError {
    #[error("non-integral-solution")]
    NonIntegral,
    #[error("invalid factorization: {0}")]
    Invalid(String),
}

impl CentralError {
    pub fn to_json(&self) -> Value {
        match self {
            CentralError::NonIntegral => json!({ "error": "non-integral-solution" }),
            CentralError::Invalid(m) => json!({ "error": "invalid-factorization", "detail": m }),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TwistType {
    Nonseparating,
    /// Separates off a genus-`k` subsurface, `0 ≤ k ≤ g/2`.
    Separating(u32),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    g: u32,
    twists: Vec<TwistType>,
    sigma: i64,
}

impl Factorization {
    pub fn new(g: u32, twists: Vec<TwistType>, sigma: i64) -> Result<Self, CentralError> {
        if g < 2 {
            return Err(CentralError::Invalid(format!("genus {g} < 2")));
        }
        for t in &twists {
            if let TwistType::Separating(k) = t {
                if *k > g / 2 {
                    return Err(CentralError::Invalid(format!(
                        "separating({k}) exceeds g/2 = {}",
                        g / 2
                    )));
                }
            }
        }
        Ok(Factorization { g, twists, sigma })
    }

    /// A factorization with only the counts known: `m_ns` nonseparating
    /// twists followed by `m - m_ns` separating(0) twists.
    pub fn from_counts(g: u32, sigma: i64, m: u64, m_ns: u64) -> Result<Self, CentralError> {
        if m_ns > m {
            return Err(CentralError::Invalid(format!("m_ns = {m_ns} exceeds m = {m}")));
        }
        let mut twists = vec![TwistType::Nonseparating; m_ns as usize];
        twists.resize(m as usize, TwistType::Separating(0));
        Self::new(g, twists, sigma)
    }

    pub fn genus(&self) -> u32 {
        self.g
    }

    pub fn twists(&self) -> &[TwistType] {
        &self.twists
    }

    pub fn sigma(&self) -> i64 {
        self.sigma
    }

    pub fn m(&self) -> i64 {
        self.twists.len() as i64
    }

    pub fn m_ns(&self) -> i64 {
        self.twists
            .iter()
            .filter(|t| **t == TwistType::Nonseparating)
            .count() as i64
    }

    /// Juxtaposition; signatures add.
    pub fn concat(&self, other: &Self) -> Result<Self, CentralError> {
        if self.g != other.g {
            return Err(CentralError::Invalid("genera differ".into()));
        }
        let mut twists = self.twists.clone();
        twists.extend_from_slice(&other.twists);
        Self::new(self.g, twists, self.sigma + other.sigma)
    }

    /// `{"g": int, "sigma": int, "twists": ["ns" | {"sep": k}]}`.
    pub fn from_json(v: &Value) -> Result<Self, CentralError> {
        let bad = |m: &str| CentralError::Invalid(m.to_string());
        let g = v
            .get("g")
            .and_then(Value::as_u64)
            .and_then(|g| u32::try_from(g).ok())
            .ok_or_else(|| bad("missing `g`"))?;
        let sigma = v
            .get("sigma")
            .and_then(Value::as_i64)
            .ok_or_else(|| bad("missing `sigma`"))?;
        let mut twists = Vec::new();
        for t in v
            .get("twists")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing `twists`"))?
        {
            let twist = match t {
                Value::String(s) if s == "ns" => TwistType::Nonseparating,
                Value::Object(o) => {
                    let k = o
                        .get("sep")
                        .and_then(Value::as_u64)
                        .and_then(|k| u32::try_from(k).ok())
                        .ok_or_else(|| bad("separating twist needs integer `sep`"))?;
                    TwistType::Separating(k)
                }
                other => return Err(CentralError::Invalid(format!("unknown twist {other}"))),
            };
            twists.push(twist);
        }
        Self::new(g, twists, sigma)
    }

    pub fn to_json(&self) -> Value {
        let twists: Vec<Value> = self
            .twists
            .iter()
            .map(|t| match t {
                TwistType::Nonseparating => json!("ns"),
                TwistType::Separating(k) => json!({ "sep": k }),
            })
            .collect();
        json!({ "g": self.g, "sigma": self.sigma, "twists": twists })
    }
}

/// Twist-type counts: nonseparating, and separating indexed by `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EpsilonCounts {
    pub ns: i64,
    pub sep: Vec<i64>,
}

impl EpsilonCounts {
    pub fn total(&self) -> i64 {
        self.ns + self.sep.iter().sum::<i64>()
    }
}

impl std::ops::Add for EpsilonCounts {
    type Output = EpsilonCounts;

    fn add(self, rhs: Self) -> Self {
        assert_eq!(self.sep.len(), rhs.sep.len(), "counts for different genera");
        EpsilonCounts {
            ns: self.ns + rhs.ns,
            sep: self.sep.iter().zip(&rhs.sep).map(|(a, b)| a + b).collect(),
        }
    }
}

pub fn epsilon_counts(f: &Factorization) -> EpsilonCounts {
    let mut sep = vec![0; (f.g / 2 + 1) as usize];
    let mut ns = 0;
    for t in &f.twists {
        match t {
            TwistType::Nonseparating => ns += 1,
            TwistType::Separating(k) => sep[*k as usize] += 1,
        }
    }
    EpsilonCounts { ns, sep }
}

/// `σ + m - m_ns`.
pub fn ig_value(f: &Factorization) -> i64 {
    f.sigma + f.m() - f.m_ns()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CentralExponents {
    pub n_chain: i64,
    pub n_lantern: i64,
}

impl CentralExponents {
    pub fn to_json(&self) -> Value {
        json!({ "n_chain": self.n_chain, "n_lantern": self.n_lantern })
    }
}

impl fmt::Display for CentralExponents {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n_chain = {}, n_lantern = {}", self.n_chain, self.n_lantern)
    }
}

/// Which formulas the solver applies.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SolveMode {
    /// Exact inversion of the linear system in the module docs.
    #[default]
    System,
    /// The closed forms as printed alongside the system:
    /// `((σ + m)/4, (5σ + 5m - 2m_ns)/2)` for `g ≥ 3` and `(σ + m - m_ns)/6`
    /// for `g = 2`. They do not satisfy the system in general and are kept
    /// only for comparison.
    PrintedClosedForm,
}

fn exact_div(a: i64, b: i64) -> Result<i64, CentralError> {
    let (q, r) = a.div_rem(&b);
    if r == 0 {
        Ok(q)
    } else {
        Err(CentralError::NonIntegral)
    }
}

/// Residual of the defining system; zero for a genuine solution.
pub fn residual(f: &Factorization, e: &CentralExponents) -> (i64, i64) {
    let (m, m_ns) = (f.m(), f.m_ns());
    (
        m_ns - (e.n_lantern + 10 * e.n_chain),
        f.sigma - (e.n_lantern + 6 * e.n_chain + m - m_ns),
    )
}

/// `g ≥ 3`: `N_C = (m - σ)/4`, `N_L = m_ns - 10 N_C`.
pub fn solve_central_exponents(f: &Factorization) -> Result<CentralExponents, CentralError> {
    if f.g < 3 {
        return Err(CentralError::Invalid(
            "solve_central_exponents requires g ≥ 3; use the genus-2 solver".into(),
        ));
    }
    let n_chain = exact_div(f.m() - f.sigma, 4)?;
    let e = CentralExponents {
        n_chain,
        n_lantern: f.m_ns() - 10 * n_chain,
    };
    debug_assert_eq!(residual(f, &e), (0, 0));
    Ok(e)
}

/// `g = 2`: the lantern is trivial, `σ = 6 N_C + m - m_ns`.
pub fn solve_central_exponents_g2(f: &Factorization) -> Result<CentralExponents, CentralError> {
    if f.g != 2 {
        return Err(CentralError::Invalid("solve_central_exponents_g2 requires g = 2".into()));
    }
    let n_chain = exact_div(f.sigma + f.m_ns() - f.m(), 6)?;
    Ok(CentralExponents {
        n_chain,
        n_lantern: 0,
    })
}

/// Dispatches on genus and mode.
pub fn solve(f: &Factorization, mode: SolveMode) -> Result<CentralExponents, CentralError> {
    let (s, m, m_ns) = (f.sigma, f.m(), f.m_ns());
    match (mode, f.g) {
        (SolveMode::System, 2) => solve_central_exponents_g2(f),
        (SolveMode::System, _) => solve_central_exponents(f),
        (SolveMode::PrintedClosedForm, 2) => Ok(CentralExponents {
            n_chain: exact_div(s + m - m_ns, 6)?,
            n_lantern: 0,
        }),
        (SolveMode::PrintedClosedForm, _) => Ok(CentralExponents {
            n_chain: exact_div(s + m, 4)?,
            n_lantern: exact_div(5 * s + 5 * m - 2 * m_ns, 2)?,
        }),
    }
}

/// `(I_g, ε_ns)` of `κ_chain · κ_lantern^10`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GeneratorCheck {
    pub ig: i64,
    pub eps_ns: i64,
}

impl GeneratorCheck {
    /// The central generator has `I_g = 4` and no net nonseparating twists.
    pub fn holds(&self) -> bool {
        self.ig == 4 && self.eps_ns == 0
    }
}

pub fn generator_check() -> GeneratorCheck {
    GeneratorCheck {
        ig: IG_KAPPA_CHAIN + 10 * IG_KAPPA_LANTERN,
        eps_ns: EPS_NS_KAPPA_CHAIN + 10 * EPS_NS_KAPPA_LANTERN,
    }
}
