//! Toric geometry of the minimal resolution `Y -> C^2 / Z_N`.
//!
//! The fan of `Y` has rays generated by `v_i = i*e1 - (i-1)*e2` for
//! `0 <= i <= N`. The lattice basis is fixed so that ray coordinates come
//! out as `v_i = (i, 1-i)`, making serialized output deterministic. The curves
//! `C_0, ..., C_N` correspond to the rays; `C_1, ..., C_{N-1}` are the
//! compact components of the exceptional divisor and pair by minus the
//! symmetric A-type Cartan matrix. Boundary curves `C_0`, `C_N` carry no
//! self-intersection number: the pairing is defined only when at least one
//! argument is supported on the compact range.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use alloc::{format, vec};

use num_traits::Zero;

use crate::rational::{rat_int, Rat};

/// Errors raised by fan construction and intersection pairing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ToricError {
    /// `N < 2`.
    ResolutionTooSmall,
    /// Curve or divisor index outside the valid range.
    IndexOutOfRange(String),
    /// Intersection requested with no compactly supported argument.
    PairingUndefined,
}

impl core::fmt::Display for ToricError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            ToricError::ResolutionTooSmall => {
                write!(f, "singularity type requires N >= 2")
            }
            ToricError::IndexOutOfRange(what) => write!(f, "index out of range: {what}"),
            ToricError::PairingUndefined => {
                write!(f, "pairing undefined without a compact argument")
            }
        }
    }
}

/// A formal combination of the curves `C_0, ..., C_N` with rational
/// multiplicities. Zero coefficients are not stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DivisorClass {
    coeffs: BTreeMap<usize, Rat>,
}

impl DivisorClass {
    /// The zero class.
    pub fn zero() -> Self {
        DivisorClass::default()
    }

    /// A single curve `C_i` with multiplicity one.
    pub fn curve(i: usize) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(i, rat_int(1));
        DivisorClass { coeffs }
    }

    /// Builds a class from explicit `(index, multiplicity)` pairs.
    pub fn from_coeffs(pairs: impl IntoIterator<Item = (usize, Rat)>) -> Self {
        let mut d = DivisorClass::zero();
        for (i, c) in pairs {
            d.add_multiple(i, &c);
        }
        d
    }

    /// Adds `c * C_i` to the class.
    pub fn add_multiple(&mut self, i: usize, c: &Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(i).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&i);
        }
    }

    /// Coefficient of `C_i`.
    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(&i).cloned().unwrap_or_else(Rat::zero)
    }

    /// Iterates over the nonzero coefficients in index order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rat)> {
        self.coeffs.iter().map(|(&i, c)| (i, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True if the support lies within the compact range `1..=N-1`.
    pub fn is_compact_only(&self, n: usize) -> bool {
        self.coeffs.keys().all(|&i| i >= 1 && i + 1 <= n)
    }

    /// Sum of two classes.
    pub fn plus(&self, other: &DivisorClass) -> DivisorClass {
        let mut out = self.clone();
        for (i, c) in other.iter() {
            out.add_multiple(i, c);
        }
        out
    }

    /// Scalar multiple of the class.
    pub fn scaled(&self, c: &Rat) -> DivisorClass {
        let mut out = DivisorClass::zero();
        for (i, a) in self.iter() {
            out.add_multiple(i, &(a * c));
        }
        out
    }
}

/// The fan data of the minimal resolution for singularity type `A_{N-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolutionGeometry {
    n: usize,
    rays: Vec<[i64; 2]>,
}

impl ResolutionGeometry {
    /// Builds the fan of `Y` for `C^2 / Z_N`. Fails for `N < 2`.
    pub fn build(n: usize) -> Result<Self, ToricError> {
        if n < 2 {
            return Err(ToricError::ResolutionTooSmall);
        }
        // v_i = i*e1 - (i-1)*e2, rendered in coordinates as (i, 1-i):
        // v_0 = (0,1), v_1 = (1,0), ..., v_N = (N, 1-N).
        let rays = (0..=n as i64).map(|i| [i, 1 - i]).collect();
        Ok(ResolutionGeometry { n, rays })
    }

    /// The singularity parameter `N`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Ray generators `v_0, ..., v_N`.
    pub fn rays(&self) -> &[[i64; 2]] {
        &self.rays
    }

    /// Number of torus-invariant curves (indices `0..=N`).
    pub fn curve_count(&self) -> usize {
        self.n + 1
    }

    /// Indices of the compact exceptional components.
    pub fn compact_range(&self) -> core::ops::RangeInclusive<usize> {
        1..=self.n - 1
    }

    /// Intersection number of two divisor classes. At least one argument
    /// must be supported on the compact range `1..=N-1`; self-intersections
    /// of the boundary curves `C_0`, `C_N` are never evaluated.
    pub fn intersection(&self, a: &DivisorClass, b: &DivisorClass) -> Result<Rat, ToricError> {
        let a_compact = a.is_compact_only(self.n);
        let b_compact = b.is_compact_only(self.n);
        if !a_compact && !b_compact {
            return Err(ToricError::PairingUndefined);
        }
        for d in [a, b] {
            if let Some((&i, _)) = d.coeffs.iter().next_back() {
                if i > self.n {
                    return Err(ToricError::IndexOutOfRange(format!(
                        "curve index {i} exceeds N = {}",
                        self.n
                    )));
                }
            }
        }
        let mut total = Rat::zero();
        for (i, ca) in a.iter() {
            for (j, cb) in b.iter() {
                let pair = self.curve_pairing(i, j);
                if !pair.is_zero() {
                    total += ca * cb * pair;
                }
            }
        }
        Ok(total)
    }

    // C_i . C_j on the generators; boundary self-intersections never occur
    // because the compactness precondition has already been enforced and
    // those terms would multiply a zero coefficient.
    fn curve_pairing(&self, i: usize, j: usize) -> Rat {
        if i == j {
            if i >= 1 && i < self.n {
                rat_int(-2)
            } else {
                Rat::zero()
            }
        } else if i.abs_diff(j) == 1 {
            rat_int(1)
        } else {
            Rat::zero()
        }
    }

    /// The symmetric pairing matrix of the compact curves, i.e. minus the
    /// Cartan matrix of `A_{N-1}`.
    pub fn compact_intersection_matrix(&self) -> Vec<Vec<Rat>> {
        (1..self.n)
            .map(|i| (1..self.n).map(|j| self.curve_pairing(i, j)).collect())
            .collect()
    }

    /// The tilting divisor `D_i = sum_{j=0}^{N-i} j * C_{i+j}` for
    /// `1 <= i <= N`; `D_N` is the zero class.
    pub fn tilting_divisor(&self, i: usize) -> Result<DivisorClass, ToricError> {
        if i < 1 || i > self.n {
            return Err(ToricError::IndexOutOfRange(format!(
                "tilting divisor index {i} not in 1..={}",
                self.n
            )));
        }
        let mut d = DivisorClass::zero();
        for j in 0..=(self.n - i) {
            d.add_multiple(i + j, &rat_int(j as i64));
        }
        Ok(d)
    }

    /// The reduced interval divisor `C_{i,j} = C_i + ... + C_j`, or the zero
    /// class when `i > j`. Endpoints must lie in the compact range.
    pub fn interval_divisor(&self, i: usize, j: usize) -> Result<DivisorClass, ToricError> {
        for k in [i, j] {
            if k < 1 || k > self.n - 1 {
                return Err(ToricError::IndexOutOfRange(format!(
                    "interval endpoint {k} not in 1..={}",
                    self.n - 1
                )));
            }
        }
        if i > j {
            return Ok(DivisorClass::zero());
        }
        Ok(DivisorClass::from_coeffs((i..=j).map(|k| (k, rat_int(1)))))
    }

    /// `C_{i,j} . C_{l,m}` by the four-case table: `-2` for equal intervals,
    /// `-1` when exactly one endpoint coincides, `+1` when the intervals are
    /// linked (`l = j+1` or `i = m+1`), `0` otherwise.
    pub fn interval_pairing(
        &self,
        i: usize,
        j: usize,
        l: usize,
        m: usize,
    ) -> Result<i64, ToricError> {
        for (lo, hi) in [(i, j), (l, m)] {
            if lo > hi || lo < 1 || hi > self.n - 1 {
                return Err(ToricError::IndexOutOfRange(format!(
                    "malformed interval ({lo},{hi}) for N = {}",
                    self.n
                )));
            }
        }
        Ok(if (i, j) == (l, m) {
            -2
        } else if i == l || j == m {
            -1
        } else if l == j + 1 || i == m + 1 {
            1
        } else {
            0
        })
    }
}

/// A polarization in the coordinates `zeta_i = <omega, C_i>`, together with
/// its divisor form `sum_i zeta_i D_i`. All coordinates must be positive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polarization {
    zeta_compact: Vec<Rat>,
    divisor_form: DivisorClass,
}

/// Errors raised by polarization construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolarizationError {
    /// Some `<omega, C_i>` is not strictly positive.
    NotAPolarization,
    /// Coordinate vector length does not match `N - 1`.
    LengthMismatch { expected: usize, got: usize },
}

impl core::fmt::Display for PolarizationError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            PolarizationError::NotAPolarization => write!(f, "not a polarization"),
            PolarizationError::LengthMismatch { expected, got } => {
                write!(f, "expected {expected} pairing coordinates, got {got}")
            }
        }
    }
}

impl Polarization {
    /// Builds a polarization from the pairings `zeta_i = <omega, C_i>`,
    /// `1 <= i <= N-1`. All values must be strictly positive.
    pub fn from_pairings(
        geom: &ResolutionGeometry,
        zeta: Vec<Rat>,
    ) -> Result<Self, PolarizationError> {
        if zeta.len() != geom.n() - 1 {
            return Err(PolarizationError::LengthMismatch {
                expected: geom.n() - 1,
                got: zeta.len(),
            });
        }
        if zeta.iter().any(|z| *z <= Rat::zero()) {
            return Err(PolarizationError::NotAPolarization);
        }
        let mut divisor_form = DivisorClass::zero();
        for (k, z) in zeta.iter().enumerate() {
            let d = geom
                .tilting_divisor(k + 1)
                .expect("tilting index within range");
            divisor_form = divisor_form.plus(&d.scaled(z));
        }
        Ok(Polarization {
            zeta_compact: zeta,
            divisor_form,
        })
    }

    /// Builds a polarization from an explicit divisor class by pairing it
    /// against the compact curves.
    pub fn from_divisor(
        geom: &ResolutionGeometry,
        omega: &DivisorClass,
    ) -> Result<Self, PolarizationError> {
        let zeta: Vec<Rat> = geom
            .compact_range()
            .map(|i| {
                geom.intersection(omega, &DivisorClass::curve(i))
                    .expect("curve is compact")
            })
            .collect();
        Polarization::from_pairings(geom, zeta)
    }

    /// The symmetric polarization `omega = sum_i D_i`, i.e. all pairings one.
    pub fn symmetric(geom: &ResolutionGeometry) -> Self {
        Polarization::from_pairings(geom, vec![rat_int(1); geom.n() - 1])
            .expect("symmetric pairings are positive")
    }

    /// The pairings `zeta_i = <omega, C_i>` for `1 <= i <= N-1`.
    pub fn zeta_compact(&self) -> &[Rat] {
        &self.zeta_compact
    }

    /// `<omega, C_i>` with 1-based compact index.
    pub fn pairing_with_curve(&self, i: usize) -> &Rat {
        &self.zeta_compact[i - 1]
    }

    /// The divisor form `sum_i zeta_i D_i`.
    pub fn divisor_form(&self) -> &DivisorClass {
        &self.divisor_form
    }

    /// `omega . d` for a compactly supported class `d`.
    pub fn dot(&self, geom: &ResolutionGeometry, d: &DivisorClass) -> Result<Rat, ToricError> {
        geom.intersection(&self.divisor_form, d)
    }
}
