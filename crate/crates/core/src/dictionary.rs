//! Translation between the sheaf side and the quiver side.
//!
//! One direction turns a polarization `omega` and a slope `mu` into a
//! stability vector `zeta` of length `N`; the other identifies a sheaf
//! class `(ch_1, chi)` with the dimension vector of the corresponding
//! module over the preprojective algebra.

use alloc::string::String;
use alloc::vec::Vec;
use alloc::{format, vec};

use num_traits::Zero;

#[cfg(test)]
use crate::quiver;
use crate::quiver::QuiverError;
use crate::rational::{rat_int, Rat};
use crate::toric::{DivisorClass, Polarization, ResolutionGeometry, ToricError};

/// A compactly supported class: `ch_1 = sum_i m_i C_i` and `chi = n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SheafClass {
    /// Coefficients `m_1, ..., m_{N-1}` of the first Chern class.
    pub m: Vec<i64>,
    /// Holomorphic Euler characteristic `chi(O_Y, E)`.
    pub chi: i64,
}

impl SheafClass {
    pub fn new(m: Vec<i64>, chi: i64) -> Self {
        SheafClass { m, chi }
    }

    /// The first Chern class as a divisor class.
    pub fn ch1(&self) -> DivisorClass {
        DivisorClass::from_coeffs(
            self.m
                .iter()
                .enumerate()
                .map(|(k, &mi)| (k + 1, rat_int(mi))),
        )
    }
}

/// Slope parameter: a positive rational, or the distinguished infinite slope
/// selecting the zero-dimensional interpretation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SlopeSpec {
    Finite(Rat),
    Infinity,
}

/// Errors raised by dictionary operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DictionaryError {
    /// `mu <= 0`.
    NonPositiveSlope,
    /// A dimension-vector component would be negative.
    NotAModuleClass(String),
    /// Dimension vector of unexpected length.
    LengthMismatch { expected: usize, got: usize },
    /// `ch_1 . omega = 0`: the omega-slope of a zero-dimensional class.
    ZeroDimensionalClass,
    Toric(ToricError),
}

impl core::fmt::Display for DictionaryError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            DictionaryError::NonPositiveSlope => write!(f, "slope must be positive or infinite"),
            DictionaryError::NotAModuleClass(what) => {
                write!(f, "class not represented by a module of the preprojective algebra: {what}")
            }
            DictionaryError::LengthMismatch { expected, got } => {
                write!(f, "dimension vector length {got}, expected {expected}")
            }
            DictionaryError::ZeroDimensionalClass => {
                write!(f, "zero-dimensional class has slope infinity")
            }
            DictionaryError::Toric(e) => write!(f, "{e}"),
        }
    }
}

impl From<ToricError> for DictionaryError {
    fn from(e: ToricError) -> Self {
        DictionaryError::Toric(e)
    }
}

/// Builds the stability vector from a polarization and slope:
/// `zeta_i = <omega, C_i>` for `i < N`, and `zeta_N = 1/mu - sum zeta_i`
/// (`-sum zeta_i` at infinite slope).
pub fn omega_to_zeta(
    omega: &Polarization,
    mu: &SlopeSpec,
) -> Result<Vec<Rat>, DictionaryError> {
    let head = omega.zeta_compact();
    let sum: Rat = head.iter().cloned().sum();
    let last = match mu {
        SlopeSpec::Finite(mu) => {
            if *mu <= Rat::zero() {
                return Err(DictionaryError::NonPositiveSlope);
            }
            mu.recip() - sum
        }
        SlopeSpec::Infinity => -sum,
    };
    let mut zeta = head.to_vec();
    zeta.push(last);
    Ok(zeta)
}

/// Reads `(omega, mu)` back from a stability vector with
/// `sum_i zeta_i > 0` and positive compact part: the inverse of
/// [`omega_to_zeta`] on the finite-slope branch.
pub fn zeta_to_omega(
    geom: &ResolutionGeometry,
    zeta: &[Rat],
) -> Result<(Polarization, Rat), DictionaryError> {
    if zeta.len() != geom.n() {
        return Err(DictionaryError::LengthMismatch {
            expected: geom.n(),
            got: zeta.len(),
        });
    }
    let total: Rat = zeta.iter().cloned().sum();
    if total <= Rat::zero() {
        return Err(DictionaryError::NonPositiveSlope);
    }
    let omega = Polarization::from_pairings(geom, zeta[..geom.n() - 1].to_vec())
        .map_err(|_| DictionaryError::NotAModuleClass("compact part not positive".into()))?;
    Ok((omega, total.recip()))
}

/// `d_N = n`, `d_k = n - m_k`: the dimension vector of the module attached
/// to the class `(m, n)`. Fails when some component would be negative.
pub fn chern_to_dimvec(m: &[i64], n: i64) -> Result<Vec<u64>, DictionaryError> {
    let mut d = Vec::with_capacity(m.len() + 1);
    for (k, &mk) in m.iter().enumerate() {
        let dk = n - mk;
        if dk < 0 {
            return Err(DictionaryError::NotAModuleClass(format!(
                "d_{} = {n} - {mk} < 0",
                k + 1
            )));
        }
        d.push(dk as u64);
    }
    if n < 0 {
        return Err(DictionaryError::NotAModuleClass(format!("d_N = {n} < 0")));
    }
    d.push(n as u64);
    Ok(d)
}

/// Recovers `(m, n)` from a dimension vector: the inverse of
/// [`chern_to_dimvec`].
pub fn dimvec_to_chern(d: &[u64]) -> Result<(Vec<i64>, i64), DictionaryError> {
    let Some((&dn, head)) = d.split_last() else {
        return Err(DictionaryError::LengthMismatch {
            expected: 1,
            got: 0,
        });
    };
    let n = dn as i64;
    let m = head.iter().map(|&dk| n - dk as i64).collect();
    Ok((m, n))
}

/// `deg_zeta` of a sheaf class: `n * sum zeta_i - omega . ch_1` with
/// `omega = sum_{i<N} zeta_i D_i`. Agrees with the quiver-side degree of
/// `chern_to_dimvec` whenever the latter is defined.
pub fn zeta_degree_of_sheaf(
    geom: &ResolutionGeometry,
    zeta: &[Rat],
    s: &SheafClass,
) -> Result<Rat, DictionaryError> {
    zeta_degree_perverse(geom, zeta, s.chi, &DivisorClass::zero(), &s.ch1())
}

/// The degree formula on the two-term branch, taking the first Chern
/// classes of both cohomology sheaves explicitly:
/// `n * sum zeta_i + omega . (ch_1(H^{-1}) - ch_1(H^0))`.
pub fn zeta_degree_perverse(
    geom: &ResolutionGeometry,
    zeta: &[Rat],
    n: i64,
    ch1_hminus: &DivisorClass,
    ch1_hzero: &DivisorClass,
) -> Result<Rat, DictionaryError> {
    if zeta.len() != geom.n() {
        return Err(DictionaryError::LengthMismatch {
            expected: geom.n(),
            got: zeta.len(),
        });
    }
    let total: Rat = zeta.iter().cloned().sum();
    let mut omega = DivisorClass::zero();
    for (k, z) in zeta[..geom.n() - 1].iter().enumerate() {
        let d = geom.tilting_divisor(k + 1).expect("index in range");
        omega = omega.plus(&d.scaled(z));
    }
    let diff = ch1_hminus.plus(&ch1_hzero.scaled(&rat_int(-1)));
    let pairing = geom.intersection(&omega, &diff)?;
    Ok(rat_int(n) * total + pairing)
}

/// The omega-slope `chi / (ch_1 . omega)` of a one-dimensional class.
pub fn slope_omega(
    geom: &ResolutionGeometry,
    omega: &Polarization,
    s: &SheafClass,
) -> Result<Rat, DictionaryError> {
    let denom = omega.dot(geom, &s.ch1())?;
    if denom.is_zero() {
        return Err(DictionaryError::ZeroDimensionalClass);
    }
    Ok(rat_int(s.chi) / denom)
}

/// The simple module at a vertex together with its sheaf-side description.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleObject {
    /// Vertex index `1..=N`.
    pub vertex: usize,
    /// Unit dimension vector at the vertex.
    pub dimvec: Vec<u64>,
    /// Class of the spherical object: `(m, chi)`.
    pub class: SheafClass,
    /// True for the shifted objects `O_{C_i}(-1)[1]`, `i < N`.
    pub shifted: bool,
}

/// The spherical object attached to vertex `i`: `O_{C_i}(-1)[1]` for
/// `i < N` (class `-C_i`, `chi = 0`), and the structure sheaf of the full
/// exceptional chain for `i = N` (class `C_1 + ... + C_{N-1}`, `chi = 1`).
pub fn simple_object_dictionary(n: usize, i: usize) -> Result<SimpleObject, QuiverError> {
    if n < 2 || i < 1 || i > n {
        return Err(QuiverError::IndexOutOfRange(format!(
            "vertex {i} not in 1..={n}"
        )));
    }
    let mut dimvec = vec![0u64; n];
    dimvec[i - 1] = 1;
    let class = if i == n {
        SheafClass::new(vec![1; n - 1], 1)
    } else {
        let mut m = vec![0i64; n - 1];
        m[i - 1] = -1;
        SheafClass::new(m, 0)
    };
    Ok(SimpleObject {
        vertex: i,
        dimvec,
        class,
        shifted: i != n,
    })
}

/// The symmetric stability vector `(1, ..., 1, 2 - N)`.
pub fn symmetric_zeta(n: usize) -> Vec<Rat> {
    let mut z = vec![rat_int(1); n - 1];
    z.push(rat_int(2 - n as i64));
    z
}
