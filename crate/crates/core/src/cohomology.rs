//! Closed-form cohomology tables for sheaves supported on exceptional
//! intervals, and the Euler pairings they satisfy.
//!
//! All dimensions are recorded as triples `(h^0, h^1, h^2)`. The tables are
//! exact closed forms; their alternating sums cross-check against the
//! intersection-theoretic Euler pairing `chi(F, G) = -[F] . [G]` where both
//! sides are defined.

use alloc::string::String;

use crate::rational::{to_i64, Rat};
use crate::toric::{DivisorClass, ResolutionGeometry, ToricError};

/// Errors raised by the cohomology tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CohomologyError {
    /// Interval or sequence indices out of range or inverted.
    IndexOutOfRange(String),
    /// Euler pairing asked for a class with a non-compact component.
    NonCompactClass,
    Toric(ToricError),
}

impl core::fmt::Display for CohomologyError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            CohomologyError::IndexOutOfRange(what) => write!(f, "index out of range: {what}"),
            CohomologyError::NonCompactClass => {
                write!(f, "Euler pairing requires compactly supported classes")
            }
            CohomologyError::Toric(e) => write!(f, "{e}"),
        }
    }
}

impl From<ToricError> for CohomologyError {
    fn from(e: ToricError) -> Self {
        CohomologyError::Toric(e)
    }
}

/// Cohomology dimensions `(h^0, h^1, h^2)`.
pub type HTriple = (u64, u64, u64);

/// Alternating sum `h^0 - h^1 + h^2`.
pub fn euler_of(h: HTriple) -> i64 {
    h.0 as i64 - h.1 as i64 + h.2 as i64
}

fn check_interval(
    geom: &ResolutionGeometry,
    i: usize,
    j: usize,
) -> Result<(), CohomologyError> {
    if i < 1 || j < i || j > geom.n() - 1 {
        return Err(CohomologyError::IndexOutOfRange(alloc::format!(
            "interval ({i},{j}) for N = {}",
            geom.n()
        )));
    }
    Ok(())
}

fn check_seq(t: usize, u: usize, s: usize) -> Result<(), CohomologyError> {
    if t > s || u > s {
        return Err(CohomologyError::IndexOutOfRange(alloc::format!(
            "sequence indices ({t},{u}) out of 0..={s}"
        )));
    }
    Ok(())
}

/// `h^*(O_{C_{i,j}}) = (1, 0, 0)`: the structure sheaf of a chain of
/// rational curves has only global functions.
pub fn h_structure(
    geom: &ResolutionGeometry,
    i: usize,
    j: usize,
) -> Result<HTriple, CohomologyError> {
    check_interval(geom, i, j)?;
    Ok((1, 0, 0))
}

/// `h^*(O_{C_{i,j}}(C_{i,j})) = (0, 1, 0)`: twisting by the
/// self-intersection class leaves a single `h^1`.
pub fn h_self_intersection_twist(
    geom: &ResolutionGeometry,
    i: usize,
    j: usize,
) -> Result<HTriple, CohomologyError> {
    check_interval(geom, i, j)?;
    Ok((0, 1, 0))
}

/// `h^*(O_{C_{i,j}}(C_{i-1,j})) = (0, 0, 0)` for `1 < i <= j`: shifting
/// the twisting interval one step left kills all cohomology.
pub fn h_shift_twist(
    geom: &ResolutionGeometry,
    i: usize,
    j: usize,
) -> Result<HTriple, CohomologyError> {
    check_interval(geom, i, j)?;
    if i < 2 {
        return Err(CohomologyError::IndexOutOfRange(String::from(
            "shifted twist needs i > 1",
        )));
    }
    Ok((0, 0, 0))
}

/// Sign of an ambient line-bundle twist on the full resolution.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwistSign {
    Negative,
    Positive,
}

/// `h^*(O(sign C_{i,j}))` on the ambient surface: `(0, 0, 0)` for the
/// negative twist and `(1, 1, 0)` for the positive one.
pub fn h_ambient(
    geom: &ResolutionGeometry,
    i: usize,
    j: usize,
    sign: TwistSign,
) -> Result<HTriple, CohomologyError> {
    check_interval(geom, i, j)?;
    Ok(match sign {
        TwistSign::Negative => (0, 0, 0),
        TwistSign::Positive => (1, 1, 0),
    })
}

/// Ext dimensions between members `L_t`, `L_u` of the exceptional line-bundle
/// sequence on an `A_s` chain, `0 <= t, u <= s`: `(1, 0, 0)` on the
/// diagonal, `(0, 0, 0)` for `u < t`, `(1, 1, 0)` for `t < u`.
pub fn exceptional_seq_ext(t: usize, u: usize, s: usize) -> Result<HTriple, CohomologyError> {
    check_seq(t, u, s)?;
    Ok(if t == u {
        (1, 0, 0)
    } else if u < t {
        (0, 0, 0)
    } else {
        (1, 1, 0)
    })
}

/// Ext dimensions from a sequence member `L_t` to the simple quotient `S_u`,
/// `0 <= t, u <= s`: `hom = delta_{tu}`, a single `ext^1` exactly when
/// `u = t + 1`, and no `ext^2`.
pub fn exceptional_vs_simple_ext(
    t: usize,
    u: usize,
    s: usize,
) -> Result<HTriple, CohomologyError> {
    check_seq(t, u, s)?;
    let hom = u64::from(t == u);
    let ext1 = u64::from(u == t + 1);
    Ok((hom, ext1, 0))
}

/// Euler pairing `chi(E_a, E_b) = -a . b` between classes supported on the
/// compact curves. Both classes must be supported away from the non-compact
/// boundary, and the pairing is an integer for integral classes.
pub fn euler_char_pair(
    geom: &ResolutionGeometry,
    a: &DivisorClass,
    b: &DivisorClass,
) -> Result<i64, CohomologyError> {
    let n = geom.n();
    if !a.is_compact_only(n) || !b.is_compact_only(n) {
        return Err(CohomologyError::NonCompactClass);
    }
    let pairing: Rat = -geom.intersection(a, b)?;
    to_i64(&pairing).ok_or(CohomologyError::NonCompactClass)
}
