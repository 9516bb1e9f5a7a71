//! Exact truncated multivariate Laurent series, the plethystic exponential,
//! and the generating functions built from a chain partition.
//!
//! A [`TruncatedSeries`] stores rational coefficients on monomials
//! `q^k z^m` with `|k| <= T_q` and total z-degree `|m| <= T_z`. All
//! arithmetic is exact; truncation is the only lossy step and drops excess
//! terms deterministically.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use alloc::{format, vec};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::classify::{ChainPartition, RootDatum};
use crate::rational::{is_integer, rat_int, to_i64, Rat};
use crate::toric::{DivisorClass, ResolutionGeometry};

/// Errors raised by series construction and evaluation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeriesError {
    /// Adams operation with `n < 1`.
    InvalidAdamsIndex,
    /// Plethystic exponential of a series with a z-constant term.
    DivergentConstantPart,
    /// Product-formula oracle fed a non-integer coefficient.
    NonIntegerCoefficient,
    /// Operands with different variable counts or truncation windows.
    ShapeMismatch,
    /// A root's first Chern class is not a nonnegative integer multidegree.
    BadRootImage(String),
    /// `<gamma, gamma>` failed to be even (cannot happen in the curve
    /// lattice; asserted at runtime).
    OddSelfPairing,
}

impl core::fmt::Display for SeriesError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            SeriesError::InvalidAdamsIndex => write!(f, "Adams index must be >= 1"),
            SeriesError::DivergentConstantPart => {
                write!(f, "Exp undefined: divergent constant part")
            }
            SeriesError::NonIntegerCoefficient => {
                write!(f, "product formula requires integer coefficients")
            }
            SeriesError::ShapeMismatch => {
                write!(f, "series operands have mismatched variables or windows")
            }
            SeriesError::BadRootImage(what) => write!(f, "bad root image: {what}"),
            SeriesError::OddSelfPairing => {
                write!(f, "self-pairing of a curve class must be even")
            }
        }
    }
}

/// Variable count and truncation window shared by compatible series.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SeriesParams {
    /// Number of grading variables `z_1 .. z_nvars`.
    pub nvars: usize,
    /// Maximum total z-degree `T_z`.
    pub trunc_z: u32,
    /// q-exponent window `[-T_q, T_q]`.
    pub trunc_q: i64,
}

impl SeriesParams {
    pub fn new(nvars: usize, trunc_z: u32, trunc_q: i64) -> Self {
        SeriesParams {
            nvars,
            trunc_z,
            trunc_q,
        }
    }

    fn admits(&self, q: i64, z: &[u32]) -> bool {
        q.unsigned_abs() <= self.trunc_q.unsigned_abs()
            && z.iter().map(|&d| d as u64).sum::<u64>() <= self.trunc_z as u64
    }
}

/// Exact truncated Laurent series in `q` and the grading variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    params: SeriesParams,
    terms: BTreeMap<(i64, Vec<u32>), Rat>,
}

impl TruncatedSeries {
    pub fn zero(params: SeriesParams) -> Self {
        TruncatedSeries {
            params,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(params: SeriesParams) -> Self {
        let mut s = TruncatedSeries::zero(params);
        s.add_term(0, vec![0; params.nvars], rat_int(1));
        s
    }

    /// A single monomial `coeff * q^k z^m`; silently truncated if out of
    /// window.
    pub fn monomial(params: SeriesParams, q: i64, z: Vec<u32>, coeff: Rat) -> Self {
        assert_eq!(z.len(), params.nvars, "multidegree length");
        let mut s = TruncatedSeries::zero(params);
        s.add_term(q, z, coeff);
        s
    }

    pub fn params(&self) -> SeriesParams {
        self.params
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero terms in deterministic `(q, z)` order.
    pub fn iter(&self) -> impl Iterator<Item = (&(i64, Vec<u32>), &Rat)> {
        self.terms.iter()
    }

    /// Coefficient of `q^k z^m` (zero if absent or out of window).
    pub fn coeff(&self, q: i64, z: &[u32]) -> Rat {
        self.terms
            .get(&(q, z.to_vec()))
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    /// The distinct z-multidegrees carrying a nonzero term.
    pub fn z_support(&self) -> Vec<Vec<u32>> {
        let mut seen: Vec<Vec<u32>> = Vec::new();
        for (k, _) in self.terms.iter() {
            if seen.last() != Some(&k.1) && !seen.contains(&k.1) {
                seen.push(k.1.clone());
            }
        }
        seen.sort();
        seen
    }

    fn add_term(&mut self, q: i64, z: Vec<u32>, coeff: Rat) {
        if coeff.is_zero() || !self.params.admits(q, &z) {
            return;
        }
        let entry = self.terms.entry((q, z)).or_insert_with(Rat::zero);
        *entry += coeff;
        if entry.is_zero() {
            // re-fetch the key: remove zero entries to keep is_zero cheap
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn add(&self, rhs: &TruncatedSeries) -> Result<TruncatedSeries, SeriesError> {
        if self.params != rhs.params {
            return Err(SeriesError::ShapeMismatch);
        }
        let mut out = self.clone();
        for ((q, z), c) in rhs.terms.iter() {
            out.add_term(*q, z.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rat) -> TruncatedSeries {
        if c.is_zero() {
            return TruncatedSeries::zero(self.params);
        }
        let mut out = TruncatedSeries::zero(self.params);
        for ((q, z), a) in self.terms.iter() {
            out.add_term(*q, z.clone(), a * c);
        }
        out
    }

    pub fn mul(&self, rhs: &TruncatedSeries) -> Result<TruncatedSeries, SeriesError> {
        if self.params != rhs.params {
            return Err(SeriesError::ShapeMismatch);
        }
        let mut out = TruncatedSeries::zero(self.params);
        for ((qa, za), ca) in self.terms.iter() {
            for ((qb, zb), cb) in rhs.terms.iter() {
                let q = qa + qb;
                let z: Vec<u32> = za.iter().zip(zb).map(|(a, b)| a + b).collect();
                out.add_term(q, z, ca * cb);
            }
        }
        Ok(out)
    }

    /// Adams operation: substitutes every variable (including `q`) by its
    /// `n`-th power; coefficients unchanged; re-truncates.
    pub fn adams(&self, n: u32) -> Result<TruncatedSeries, SeriesError> {
        if n < 1 {
            return Err(SeriesError::InvalidAdamsIndex);
        }
        let mut out = TruncatedSeries::zero(self.params);
        for ((q, z), c) in self.terms.iter() {
            let z: Vec<u32> = z.iter().map(|&d| d * n).collect();
            out.add_term(q * n as i64, z, c.clone());
        }
        Ok(out)
    }
}

/// Plethystic exponential `Exp(f) = exp(sum_{n >= 1} adams(f, n) / n)`.
/// Requires `f` to have no z-constant term.
pub fn plethystic_exp(f: &TruncatedSeries) -> Result<TruncatedSeries, SeriesError> {
    if f.terms.keys().any(|(_, z)| z.iter().all(|&d| d == 0)) {
        return Err(SeriesError::DivergentConstantPart);
    }
    let params = f.params;
    // adams(f, n) has z-degree >= n, so n beyond T_z contributes nothing
    let mut g = TruncatedSeries::zero(params);
    for n in 1..=params.trunc_z {
        let term = f.adams(n)?.scale(&Rat::new(BigInt::one(), BigInt::from(n)));
        g = g.add(&term)?;
    }
    // exp(g) with g of positive z-degree: powers beyond T_z vanish
    let mut out = TruncatedSeries::one(params);
    let mut power = TruncatedSeries::one(params);
    let mut factorial = Rat::one();
    for k in 1..=params.trunc_z {
        power = power.mul(&g)?;
        if power.is_zero() {
            break;
        }
        factorial *= Rat::from_integer(BigInt::from(k));
        out = out.add(&power.scale(&(Rat::one() / &factorial)))?;
    }
    Ok(out)
}

// Expansion of (1 - q^k z^m)^{-a} for integer a, truncated.
fn binomial_factor(
    params: SeriesParams,
    q: i64,
    z: &[u32],
    a: &BigInt,
) -> TruncatedSeries {
    let zdeg: u32 = z.iter().sum();
    debug_assert!(zdeg > 0);
    let mut out = TruncatedSeries::zero(params);
    if a.is_positive() || a.is_zero() {
        // (1 - x)^{-a} = sum_j C(a - 1 + j, j) x^j
        let jmax = params.trunc_z / zdeg;
        let mut coeff = BigInt::one();
        for j in 0..=jmax {
            if j > 0 {
                // C(a-1+j, j) = C(a-2+j, j-1) * (a-1+j) / j
                coeff = coeff * (a - 1 + j) / BigInt::from(j);
            }
            let zm: Vec<u32> = z.iter().map(|&d| d * j).collect();
            out.add_term(q * j as i64, zm, Rat::from_integer(coeff.clone()));
        }
    } else {
        // (1 - x)^{|a|}: finite binomial expansion with alternating signs
        let b = -a.clone();
        let bu = u32::try_from(&b).unwrap_or(u32::MAX);
        let jmax = core::cmp::min(bu, params.trunc_z / zdeg);
        let mut coeff = BigInt::one();
        for j in 0..=jmax {
            if j > 0 {
                coeff = coeff * (&b - (j - 1)) / BigInt::from(j);
            }
            let signed = if j % 2 == 0 {
                coeff.clone()
            } else {
                -coeff.clone()
            };
            let zm: Vec<u32> = z.iter().map(|&d| d * j).collect();
            out.add_term(q * j as i64, zm, Rat::from_integer(signed));
        }
    }
    out
}

/// Independent oracle for [`plethystic_exp`] on integer-coefficient input:
/// expands the product `prod (1 - q^k z^m)^{-a_{k,m}}` by binomial series.
pub fn product_formula_oracle(f: &TruncatedSeries) -> Result<TruncatedSeries, SeriesError> {
    if f.terms.keys().any(|(_, z)| z.iter().all(|&d| d == 0)) {
        return Err(SeriesError::DivergentConstantPart);
    }
    let mut out = TruncatedSeries::one(f.params);
    for ((q, z), c) in f.terms.iter() {
        if !is_integer(c) {
            return Err(SeriesError::NonIntegerCoefficient);
        }
        let factor = binomial_factor(f.params, *q, z, c.numer());
        out = out.mul(&factor)?;
    }
    Ok(out)
}

/// Expansion convention for `q/(q-1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExpConvention {
    /// `q/(q-1) = sum_{n >= 0} q^{-n}` (default; keeps Betti read-offs
    /// nonnegative).
    ExpandQInverse,
    /// `q/(q-1) = -sum_{n >= 1} q^{n}`.
    ExpandQ,
}

/// The chosen expansion of `q/(q-1)` inside the truncation window.
pub fn q_over_q_minus_one(convention: ExpConvention, params: SeriesParams) -> TruncatedSeries {
    let mut s = TruncatedSeries::zero(params);
    let zero_z = vec![0u32; params.nvars];
    match convention {
        ExpConvention::ExpandQInverse => {
            for n in 0..=params.trunc_q {
                s.add_term(-n, zero_z.clone(), rat_int(1));
            }
        }
        ExpConvention::ExpandQ => {
            for n in 1..=params.trunc_q {
                s.add_term(n, zero_z.clone(), rat_int(-1));
            }
        }
    }
    s
}

/// Betti-number read-off for one curve class `gamma`, normalized at
/// `q^{-<gamma,gamma>/2 + i}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoincarePrediction {
    /// Multidegree of `gamma` in the curve basis.
    pub gamma: Vec<u32>,
    /// `<gamma, gamma>` (even).
    pub self_pairing: i64,
    /// Map from homological index shift `i` to the predicted dimension.
    pub betti: BTreeMap<i64, Rat>,
}

/// Output of [`betti_series`]: the full series, per-class read-offs, and
/// convention diagnostics (flagged, never silently dropped).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiOutput {
    pub series: TruncatedSeries,
    pub predictions: Vec<PoincarePrediction>,
    pub diagnostics: Vec<String>,
}

fn root_multidegree(nvars: usize, ch1: &DivisorClass) -> Result<Vec<u32>, SeriesError> {
    let mut z = vec![0u32; nvars];
    for (i, c) in ch1.iter() {
        if i < 1 || i > nvars {
            return Err(SeriesError::BadRootImage(format!(
                "curve index {i} outside compact range"
            )));
        }
        let v = to_i64(c)
            .filter(|&v| v >= 0)
            .ok_or_else(|| SeriesError::BadRootImage(format!("coefficient of C_{i}")))?;
        z[i - 1] = u32::try_from(v)
            .map_err(|_| SeriesError::BadRootImage(format!("coefficient of C_{i}")))?;
    }
    Ok(z)
}

/// Evaluates `Exp( q/(q-1) * sum_roots z^{ch1(rho)} )` and reads off Betti
/// predictions at every z-multidegree in the result.
pub fn betti_series(
    geom: &ResolutionGeometry,
    _partition: &ChainPartition,
    roots: &[RootDatum],
    trunc_z: u32,
    trunc_q: i64,
    convention: ExpConvention,
) -> Result<BettiOutput, SeriesError> {
    let nvars = geom.n() - 1;
    let params = SeriesParams::new(nvars, trunc_z, trunc_q);

    let mut inner = TruncatedSeries::zero(params);
    let prefactor = q_over_q_minus_one(convention, params);
    for root in roots {
        let z = root_multidegree(nvars, &root.ch1_image)?;
        let mono = TruncatedSeries::monomial(params, 0, z, rat_int(1));
        inner = inner.add(&prefactor.mul(&mono)?)?;
    }
    let series = plethystic_exp(&inner)?;

    let mut predictions = Vec::new();
    let mut diagnostics = Vec::new();
    for gamma in series.z_support() {
        if gamma.iter().all(|&d| d == 0) {
            continue;
        }
        // gamma as a curve class; self-pairing through the intersection form
        let mut class = DivisorClass::zero();
        for (idx, &d) in gamma.iter().enumerate() {
            if d > 0 {
                class.add_multiple(idx + 1, &rat_int(d as i64));
            }
        }
        let pairing = geom
            .intersection(&class, &class)
            .expect("compact class pairs");
        let self_pairing = to_i64(&pairing).ok_or(SeriesError::OddSelfPairing)?;
        if self_pairing % 2 != 0 {
            return Err(SeriesError::OddSelfPairing);
        }
        let base = -self_pairing / 2;
        let mut betti = BTreeMap::new();
        for ((q, z), c) in series.iter() {
            if *z != gamma {
                continue;
            }
            let i = q - base;
            if !is_integer(c) || c.is_negative() {
                diagnostics.push(format!(
                    "expansion convention violated at q^{q} z^{gamma:?}: coefficient {c}"
                ));
            }
            betti.insert(i, c.clone());
        }
        predictions.push(PoincarePrediction {
            gamma,
            self_pairing,
            betti,
        });
    }

    Ok(BettiOutput {
        series,
        predictions,
        diagnostics,
    })
}

/// The restricted Kac generating polynomial: `sum_roots y^{dim(rho)}` as a
/// map from dimension vector to multiplicity.
pub fn restricted_kac_generating(
    _partition: &ChainPartition,
    roots: &[RootDatum],
) -> BTreeMap<Vec<u64>, u64> {
    let mut poly: BTreeMap<Vec<u64>, u64> = BTreeMap::new();
    for root in roots {
        *poly.entry(root.dim_image.clone()).or_insert(0) += 1;
    }
    poly
}
