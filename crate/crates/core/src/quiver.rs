//! Quivers, preprojective relations and slope stability.
//!
//! Two shapes occur: the affine cycle with `N` vertices and arrows
//! `a_k: k -> k+1` (cyclically, `a_N: N -> 1`), and the linear `A_s` quiver
//! with `s` vertices and arrows `k -> k+1`. Vertices are numbered `1..=n`
//! in the public interface, matching the arrow labels `a_1, ..., a_N`.
//!
//! A representation of the doubled quiver carries a matrix `x_a` along each
//! arrow and a matrix `y_a` along each reversed arrow. The preprojective
//! relations are `x_{k-1} y_{k-1} - y_k x_k` at vertex `k`, with indices
//! taken cyclically and `x_0 = x_N`, `y_0 = y_N`; absent arrows act as zero.

use alloc::string::String;
use alloc::vec::Vec;
use alloc::{format, vec};


use crate::linalg::{Matrix, RowSpace};
use crate::rational::{rat_int, Rat};

/// Errors raised by quiver-side operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuiverError {
    LengthMismatch { expected: usize, got: usize },
    ZeroDimensionVector,
    ShapeInconsistency(String),
    IndexOutOfRange(String),
    /// Exhaustive subrepresentation search is only sound for thin inputs.
    NotThin,
    MalformedCertificate(String),
}

impl core::fmt::Display for QuiverError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            QuiverError::LengthMismatch { expected, got } => {
                write!(f, "dimension vector length {got}, expected {expected}")
            }
            QuiverError::ZeroDimensionVector => {
                write!(f, "slope undefined for the zero dimension vector")
            }
            QuiverError::ShapeInconsistency(what) => write!(f, "shape inconsistency: {what}"),
            QuiverError::IndexOutOfRange(what) => write!(f, "index out of range: {what}"),
            QuiverError::NotThin => write!(
                f,
                "thin enumeration unsound for d_i > 1; use verify_subrep_certificate"
            ),
            QuiverError::MalformedCertificate(what) => write!(f, "malformed certificate: {what}"),
        }
    }
}

/// The two quiver shapes used in this crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuiverKind {
    /// Affine cycle with `n` vertices (`n >= 2`).
    AffineCycle(usize),
    /// Linear `A_s` quiver with `s` vertices.
    Linear(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Quiver {
    kind: QuiverKind,
}

impl Quiver {
    pub fn affine_cycle(n: usize) -> Self {
        assert!(n >= 2, "affine cycle needs at least two vertices");
        Quiver {
            kind: QuiverKind::AffineCycle(n),
        }
    }

    pub fn linear(s: usize) -> Self {
        assert!(s >= 1, "linear quiver needs at least one vertex");
        Quiver {
            kind: QuiverKind::Linear(s),
        }
    }

    pub fn kind(&self) -> QuiverKind {
        self.kind
    }

    pub fn vertex_count(&self) -> usize {
        match self.kind {
            QuiverKind::AffineCycle(n) | QuiverKind::Linear(n) => n,
        }
    }

    /// Arrows as 0-based `(source, target)` pairs. Arrow `k` is `a_{k+1}`.
    pub fn arrows(&self) -> Vec<(usize, usize)> {
        match self.kind {
            QuiverKind::AffineCycle(n) => (0..n).map(|k| (k, (k + 1) % n)).collect(),
            QuiverKind::Linear(s) => (0..s.saturating_sub(1)).map(|k| (k, k + 1)).collect(),
        }
    }

    fn check_len(&self, v: usize) -> Result<(), QuiverError> {
        if v == self.vertex_count() {
            Ok(())
        } else {
            Err(QuiverError::LengthMismatch {
                expected: self.vertex_count(),
                got: v,
            })
        }
    }
}

/// The Ringel pairing `(d, e) = sum_i d_i e_i - sum_a d_{s(a)} e_{t(a)}`.
pub fn ringel_pairing(q: &Quiver, d: &[i64], e: &[i64]) -> Result<i64, QuiverError> {
    q.check_len(d.len())?;
    q.check_len(e.len())?;
    let diag: i64 = d.iter().zip(e).map(|(a, b)| a * b).sum();
    let arrows: i64 = q.arrows().iter().map(|&(s, t)| d[s] * e[t]).sum();
    Ok(diag - arrows)
}

/// The symmetrized Euler pairing `<d, e> = (d, e) + (e, d)`.
pub fn euler_pairing(q: &Quiver, d: &[i64], e: &[i64]) -> Result<i64, QuiverError> {
    Ok(ringel_pairing(q, d, e)? + ringel_pairing(q, e, d)?)
}

/// `deg_zeta(d) = sum_i zeta_i d_i`.
pub fn zeta_degree(zeta: &[Rat], d: &[u64]) -> Result<Rat, QuiverError> {
    if zeta.len() != d.len() {
        return Err(QuiverError::LengthMismatch {
            expected: zeta.len(),
            got: d.len(),
        });
    }
    Ok(zeta
        .iter()
        .zip(d)
        .map(|(z, &di)| z * rat_int(di as i64))
        .sum())
}

/// `slope_zeta(d) = deg_zeta(d) / sum_i d_i`; undefined for `d = 0`.
pub fn zeta_slope(zeta: &[Rat], d: &[u64]) -> Result<Rat, QuiverError> {
    let total: u64 = d.iter().sum();
    if total == 0 {
        return Err(QuiverError::ZeroDimensionVector);
    }
    Ok(zeta_degree(zeta, d)? / rat_int(total as i64))
}

/// Membership in the slope submonoid: `d = 0` or `slope_zeta(d) = theta`.
pub fn in_slope_monoid(zeta: &[Rat], theta: &Rat, d: &[u64]) -> Result<bool, QuiverError> {
    if d.iter().all(|&x| x == 0) {
        return Ok(true);
    }
    Ok(zeta_slope(zeta, d)? == *theta)
}

/// A rational representation of the doubled quiver.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuiverRep {
    quiver: Quiver,
    dims: Vec<u64>,
    /// `x[k]` is the matrix along arrow `a_{k+1}`, shape `d_t x d_s`.
    x: Vec<Matrix>,
    /// `y[k]` is the matrix along the reversed arrow, shape `d_s x d_t`.
    y: Vec<Matrix>,
}

impl QuiverRep {
    /// Builds a representation with all maps zero.
    pub fn zero_maps(quiver: Quiver, dims: Vec<u64>) -> Result<Self, QuiverError> {
        quiver.check_len(dims.len())?;
        let arrows = quiver.arrows();
        let x = arrows
            .iter()
            .map(|&(s, t)| Matrix::zero(dims[t] as usize, dims[s] as usize))
            .collect();
        let y = arrows
            .iter()
            .map(|&(s, t)| Matrix::zero(dims[s] as usize, dims[t] as usize))
            .collect();
        Ok(QuiverRep {
            quiver,
            dims,
            x,
            y,
        })
    }

    /// Builds a representation from explicit matrices, validating shapes.
    pub fn new(
        quiver: Quiver,
        dims: Vec<u64>,
        x: Vec<Matrix>,
        y: Vec<Matrix>,
    ) -> Result<Self, QuiverError> {
        quiver.check_len(dims.len())?;
        let arrows = quiver.arrows();
        if x.len() != arrows.len() || y.len() != arrows.len() {
            return Err(QuiverError::ShapeInconsistency(format!(
                "expected {} arrow matrices",
                arrows.len()
            )));
        }
        for (k, &(s, t)) in arrows.iter().enumerate() {
            if (x[k].rows(), x[k].cols()) != (dims[t] as usize, dims[s] as usize) {
                return Err(QuiverError::ShapeInconsistency(format!(
                    "x[{}] has shape {}x{}, expected {}x{}",
                    k + 1,
                    x[k].rows(),
                    x[k].cols(),
                    dims[t],
                    dims[s]
                )));
            }
            if (y[k].rows(), y[k].cols()) != (dims[s] as usize, dims[t] as usize) {
                return Err(QuiverError::ShapeInconsistency(format!(
                    "y[{}] has shape {}x{}, expected {}x{}",
                    k + 1,
                    y[k].rows(),
                    y[k].cols(),
                    dims[s],
                    dims[t]
                )));
            }
        }
        Ok(QuiverRep {
            quiver,
            dims,
            x,
            y,
        })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn dims(&self) -> &[u64] {
        &self.dims
    }

    pub fn x(&self) -> &[Matrix] {
        &self.x
    }

    pub fn y(&self) -> &[Matrix] {
        &self.y
    }

    /// Sets a single scalar entry of an arrow matrix; used by tests to
    /// perturb representations. 0-based arrow index and entry coordinates.
    pub fn set_x_entry(&mut self, arrow: usize, row: usize, col: usize, value: Rat) {
        self.x[arrow][(row, col)] = value;
    }

    pub fn set_y_entry(&mut self, arrow: usize, row: usize, col: usize, value: Rat) {
        self.y[arrow][(row, col)] = value;
    }

    /// True when every vertex dimension is 0 or 1.
    pub fn is_thin(&self) -> bool {
        self.dims.iter().all(|&d| d <= 1)
    }

    /// The moment-map value `x_{k-1} y_{k-1} - y_k x_k` at every vertex.
    /// The representation satisfies the preprojective relations iff all
    /// returned matrices vanish.
    pub fn moment_map_defect(&self) -> Vec<Matrix> {
        let n = self.quiver.vertex_count();
        let arrows = self.quiver.arrows();
        // arrow into v and arrow out of v, if present
        let mut incoming: Vec<Option<usize>> = vec![None; n];
        let mut outgoing: Vec<Option<usize>> = vec![None; n];
        for (k, &(s, t)) in arrows.iter().enumerate() {
            outgoing[s] = Some(k);
            incoming[t] = Some(k);
        }
        (0..n)
            .map(|v| {
                let dv = self.dims[v] as usize;
                let first = match incoming[v] {
                    Some(k) => self.x[k].mul(&self.y[k]),
                    None => Matrix::zero(dv, dv),
                };
                let second = match outgoing[v] {
                    Some(k) => self.y[k].mul(&self.x[k]),
                    None => Matrix::zero(dv, dv),
                };
                first.sub(&second)
            })
            .collect()
    }

    /// True iff the representation is a module over the preprojective algebra.
    pub fn is_preprojective(&self) -> bool {
        self.moment_map_defect().iter().all(Matrix::is_zero)
    }
}

/// The representation corresponding to the structure sheaf of the curve
/// `C_l` on the affine cycle: dimension one at every vertex except `l`,
/// identity maps along the two paths from the puncture toward vertex `N`.
pub fn structure_sheaf_rep(n: usize, l: usize) -> Result<QuiverRep, QuiverError> {
    if n < 2 {
        return Err(QuiverError::IndexOutOfRange(format!("N = {n} < 2")));
    }
    if l < 1 || l > n - 1 {
        return Err(QuiverError::IndexOutOfRange(format!(
            "curve index {l} not in 1..={}",
            n - 1
        )));
    }
    let quiver = Quiver::affine_cycle(n);
    let dims: Vec<u64> = (1..=n).map(|k| if k == l { 0 } else { 1 }).collect();
    let mut rep = QuiverRep::zero_maps(quiver, dims)?;
    let one = rat_int(1);
    // forward identities x_i: V_i -> V_{i+1} for l < i <= N-1
    for i in (l + 1)..n {
        rep.set_x_entry(i - 1, 0, 0, one.clone());
    }
    // reversed identities y_i: V_{i+1} -> V_i for 1 <= i <= l-2
    for i in 1..l.saturating_sub(1) {
        rep.set_y_entry(i - 1, 0, 0, one.clone());
    }
    // y_N: V_1 -> V_N, present unless V_1 vanishes (l = 1)
    if l != 1 {
        rep.set_y_entry(n - 1, 0, 0, one);
    }
    Ok(rep)
}

/// Outcome of a slope-stability test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Stable,
    Semistable,
    Unstable,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Stable => "stable",
            Verdict::Semistable => "semistable",
            Verdict::Unstable => "unstable",
        }
    }
}

/// Result of [`thin_semistability`]: the verdict together with a closed
/// vertex subset of maximal slope (1-based vertices), when one exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilityReport {
    pub verdict: Verdict,
    pub witness: Option<Vec<usize>>,
}

/// Decides zeta-(semi)stability of a thin representation by exhausting the
/// closed vertex subsets of its support. A subset is closed when every
/// nonzero arrow map (forward or reversed) leaving it stays inside; for thin
/// representations these subsets are exactly the subrepresentations.
pub fn thin_semistability(rep: &QuiverRep, zeta: &[Rat]) -> Result<StabilityReport, QuiverError> {
    let n = rep.quiver().vertex_count();
    if zeta.len() != n {
        return Err(QuiverError::LengthMismatch {
            expected: n,
            got: zeta.len(),
        });
    }
    if !rep.is_thin() {
        return Err(QuiverError::NotThin);
    }
    let support: Vec<usize> = (0..n).filter(|&v| rep.dims()[v] == 1).collect();
    if support.is_empty() {
        return Err(QuiverError::ZeroDimensionVector);
    }
    // directed edges between support vertices carried by nonzero maps
    let arrows = rep.quiver().arrows();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (k, &(s, t)) in arrows.iter().enumerate() {
        if !rep.x()[k].is_zero() {
            edges.push((s, t));
        }
        if !rep.y()[k].is_zero() {
            edges.push((t, s));
        }
    }

    let whole_slope = zeta_slope(zeta, rep.dims())?;
    let mut best: Option<(Rat, Vec<usize>)> = None;
    let m = support.len();
    for mask in 1..(1u64 << m) - 1 {
        let subset: Vec<usize> = (0..m)
            .filter(|&b| mask & (1 << b) != 0)
            .map(|b| support[b])
            .collect();
        let closed = edges
            .iter()
            .all(|&(s, t)| !subset.contains(&s) || subset.contains(&t));
        if !closed {
            continue;
        }
        let mut d = vec![0u64; n];
        for &v in &subset {
            d[v] = 1;
        }
        let slope = zeta_slope(zeta, &d)?;
        let better = match &best {
            None => true,
            Some((s, _)) => slope > *s,
        };
        if better {
            best = Some((slope, subset));
        }
    }
    let (verdict, witness) = match best {
        None => (Verdict::Stable, None),
        Some((slope, subset)) => {
            let verdict = if slope > whole_slope {
                Verdict::Unstable
            } else if slope == whole_slope {
                Verdict::Semistable
            } else {
                Verdict::Stable
            };
            let witness: Vec<usize> = subset.iter().map(|v| v + 1).collect();
            (verdict, Some(witness))
        }
    };
    Ok(StabilityReport { verdict, witness })
}

/// Outcome of checking a candidate subrepresentation certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// Invariant subspace of strictly larger slope: refutes semistability.
    AcceptedDestabilizer,
    /// Invariant subspace with slope at most that of the whole.
    AcceptedCompatible,
    /// The proposed subspaces are not invariant under the arrow maps.
    Rejected,
}

impl Certificate {
    pub fn as_str(&self) -> &'static str {
        match self {
            Certificate::AcceptedDestabilizer => "accepted_destabilizer",
            Certificate::AcceptedCompatible => "accepted_compatible",
            Certificate::Rejected => "rejected",
        }
    }
}

/// Checks whether per-vertex subspaces form a subrepresentation and, if so,
/// compares its slope to the ambient one. Sound for arbitrary (non-thin)
/// representations; it verifies a certificate rather than searching.
///
/// `subspaces[v]` lists basis vectors of length `dims[v]`. Basis vectors of
/// the wrong length or linearly dependent sets are reported as errors.
pub fn verify_subrep_certificate(
    rep: &QuiverRep,
    subspaces: &[Vec<Vec<Rat>>],
    zeta: &[Rat],
) -> Result<Certificate, QuiverError> {
    let n = rep.quiver().vertex_count();
    if subspaces.len() != n {
        return Err(QuiverError::LengthMismatch {
            expected: n,
            got: subspaces.len(),
        });
    }
    if zeta.len() != n {
        return Err(QuiverError::LengthMismatch {
            expected: n,
            got: zeta.len(),
        });
    }
    let mut spans: Vec<RowSpace> = Vec::with_capacity(n);
    let mut sub_dims = vec![0u64; n];
    for (v, basis) in subspaces.iter().enumerate() {
        let dim = rep.dims()[v] as usize;
        let mut span = RowSpace::new(dim);
        for b in basis {
            if b.len() != dim {
                return Err(QuiverError::MalformedCertificate(format!(
                    "basis vector of length {} at vertex {}, expected {dim}",
                    b.len(),
                    v + 1
                )));
            }
            if !span.insert(b) {
                return Err(QuiverError::MalformedCertificate(format!(
                    "dependent basis vectors at vertex {}",
                    v + 1
                )));
            }
        }
        sub_dims[v] = span.rank() as u64;
        spans.push(span);
    }
    if sub_dims.iter().all(|&d| d == 0) {
        return Err(QuiverError::ZeroDimensionVector);
    }

    let arrows = rep.quiver().arrows();
    for (k, &(s, t)) in arrows.iter().enumerate() {
        for b in &subspaces[s] {
            if !spans[t].contains(&rep.x()[k].apply(b)) {
                return Ok(Certificate::Rejected);
            }
        }
        for b in &subspaces[t] {
            if !spans[s].contains(&rep.y()[k].apply(b)) {
                return Ok(Certificate::Rejected);
            }
        }
    }

    let sub_slope = zeta_slope(zeta, &sub_dims)?;
    let whole_slope = zeta_slope(zeta, rep.dims())?;
    Ok(if sub_slope > whole_slope {
        Certificate::AcceptedDestabilizer
    } else {
        Certificate::AcceptedCompatible
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn symmetric_zeta(n: usize) -> Vec<Rat> {
        let mut z = vec![rat_int(1); n - 1];
        z.push(rat_int(2 - n as i64));
        z
    }

    #[test]
    fn ringel_pairing_examples() {
        let q2 = Quiver::affine_cycle(2);
        assert_eq!(ringel_pairing(&q2, &[1, 1], &[1, 1]).unwrap(), 0);
        let l2 = Quiver::linear(2);
        assert_eq!(ringel_pairing(&l2, &[1, 0], &[0, 1]).unwrap(), -1);
        assert_eq!(ringel_pairing(&l2, &[0, 1], &[0, 1]).unwrap(), 1);
        assert!(ringel_pairing(&l2, &[1], &[0, 1]).is_err());
    }

    #[test]
    fn euler_pairing_symmetric_and_even_on_cycle() {
        let q = Quiver::affine_cycle(4);
        let d = [3, 1, 4, 1];
        let e = [2, 7, 1, 8];
        assert_eq!(
            euler_pairing(&q, &d, &e).unwrap(),
            euler_pairing(&q, &e, &d).unwrap()
        );
        let n = 4usize;
        let diag: i64 = d.iter().map(|x| x * x).sum();
        let adj: i64 = (0..n).map(|i| d[i] * d[(i + 1) % n]).sum();
        assert_eq!(euler_pairing(&q, &d, &d).unwrap(), 2 * diag - 2 * adj);
        assert_eq!(euler_pairing(&q, &d, &d).unwrap() % 2, 0);
    }

    #[test]
    fn degree_and_slope() {
        let zeta = symmetric_zeta(5);
        let all_ones = [1u64; 5];
        assert_eq!(zeta_degree(&zeta, &all_ones).unwrap(), rat_int(1));
        assert_eq!(zeta_slope(&zeta, &all_ones).unwrap(), rat(1, 5));
        assert_eq!(
            zeta_degree(&[rat_int(1), rat_int(0)], &[0, 1]).unwrap(),
            rat_int(0)
        );
        assert!(zeta_slope(&zeta, &[0; 5]).is_err());
        assert!(in_slope_monoid(&zeta, &rat_int(7), &[0; 5]).unwrap());
        assert!(in_slope_monoid(&zeta, &rat(1, 5), &all_ones).unwrap());
    }

    #[test]
    fn structure_sheaf_rep_shape() {
        let rep = structure_sheaf_rep(3, 1).unwrap();
        assert_eq!(rep.dims(), &[0, 1, 1]);
        // only nonzero map is x_2: V_2 -> V_3
        assert!(!rep.x()[1].is_zero());
        assert!(rep.x()[0].is_zero() && rep.x()[2].is_zero());
        assert!(rep.y().iter().all(Matrix::is_zero));
        assert!(structure_sheaf_rep(4, 0).is_err());
        assert!(structure_sheaf_rep(4, 4).is_err());
    }

    #[test]
    fn structure_sheaf_rep_dimension_dictionary() {
        for n in 2..=8 {
            for l in 1..n {
                let rep = structure_sheaf_rep(n, l).unwrap();
                let d = rep.dims();
                assert_eq!(d[n - 1], 1);
                for k in 1..n {
                    let delta = if k == l { 1 } else { 0 };
                    assert_eq!(d[n - 1] as i64 - d[k - 1] as i64, delta);
                }
                // Lambda_0 membership for the symmetric stability vector
                let zeta = symmetric_zeta(n);
                assert_eq!(zeta_degree(&zeta, d).unwrap(), rat_int(0));
            }
        }
    }

    #[test]
    fn moment_map_zero_on_structure_sheaves() {
        for n in 2..=8 {
            for l in 1..n {
                let rep = structure_sheaf_rep(n, l).unwrap();
                assert!(rep.is_preprojective(), "N={n} l={l}");
            }
        }
    }

    #[test]
    fn moment_map_single_x_arrow() {
        let mut rep =
            QuiverRep::zero_maps(Quiver::affine_cycle(3), vec![1, 1, 1]).unwrap();
        rep.set_x_entry(0, 0, 0, rat_int(5));
        assert!(rep.is_preprojective());
    }

    #[test]
    fn moment_map_perturbation_detected() {
        // N=4, l=2: x_3 and y_4 are the identities; making y_3 nonzero
        // creates x_3*y_3 != 0 at vertex 4 against y_4*x_4 = 0.
        let mut rep = structure_sheaf_rep(4, 2).unwrap();
        rep.set_y_entry(2, 0, 0, rat_int(1));
        assert!(!rep.is_preprojective());
        let defects = rep.moment_map_defect();
        assert!(defects.iter().any(|m| !m.is_zero()));
        // cyclic trace identity survives the perturbation
        let total: Rat = defects.iter().map(Matrix::trace).sum();
        assert_eq!(total, rat_int(0));
    }

    #[test]
    fn thin_stability_structure_sheaves() {
        for n in 3..=8 {
            let zeta = symmetric_zeta(n);
            for l in 1..n {
                let rep = structure_sheaf_rep(n, l).unwrap();
                let report = thin_semistability(&rep, &zeta).unwrap();
                assert_eq!(report.verdict, Verdict::Stable, "N={n} l={l}");
            }
        }
    }

    #[test]
    fn thin_stability_scale_invariance() {
        let n = 5;
        let rep = structure_sheaf_rep(n, 2).unwrap();
        let zeta = symmetric_zeta(n);
        let scaled: Vec<Rat> = zeta.iter().map(|z| z * rat(7, 3)).collect();
        let a = thin_semistability(&rep, &zeta).unwrap();
        let b = thin_semistability(&rep, &scaled).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn degenerate_zeta_semistable() {
        let n = 4;
        let rep = structure_sheaf_rep(n, 2).unwrap();
        let zeta = vec![rat_int(0); n];
        let report = thin_semistability(&rep, &zeta).unwrap();
        assert_eq!(report.verdict, Verdict::Semistable);
        // a simple representation has no proper nonzero closed subset
        let simple = QuiverRep::zero_maps(Quiver::affine_cycle(3), vec![1, 0, 0]).unwrap();
        let report = thin_semistability(&simple, &vec![rat_int(0); 3]).unwrap();
        assert_eq!(report.verdict, Verdict::Stable);
        assert!(report.witness.is_none());
    }

    #[test]
    fn equal_slope_direct_sum_is_strictly_semistable() {
        // two disconnected supported vertices with equal zeta values
        let rep = QuiverRep::zero_maps(Quiver::affine_cycle(4), vec![1, 0, 1, 0]).unwrap();
        let zeta = vec![rat_int(1), rat_int(0), rat_int(1), rat_int(0)];
        let report = thin_semistability(&rep, &zeta).unwrap();
        assert_eq!(report.verdict, Verdict::Semistable);
        assert!(report.witness.is_some());
    }

    #[test]
    fn non_thin_input_rejected() {
        let rep = QuiverRep::zero_maps(Quiver::affine_cycle(2), vec![2, 1]).unwrap();
        assert_eq!(
            thin_semistability(&rep, &[rat_int(1), rat_int(-1)]),
            Err(QuiverError::NotThin)
        );
    }

    #[test]
    fn certificate_full_rep_compatible() {
        let rep = structure_sheaf_rep(4, 2).unwrap();
        let zeta = symmetric_zeta(4);
        let subspaces: Vec<Vec<Vec<Rat>>> = rep
            .dims()
            .iter()
            .map(|&d| {
                (0..d as usize)
                    .map(|i| {
                        (0..d as usize)
                            .map(|j| if i == j { rat_int(1) } else { rat_int(0) })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        assert_eq!(
            verify_subrep_certificate(&rep, &subspaces, &zeta).unwrap(),
            Certificate::AcceptedCompatible
        );
    }

    #[test]
    fn certificate_rejects_non_invariant() {
        let rep = structure_sheaf_rep(4, 2).unwrap();
        let zeta = symmetric_zeta(4);
        // vertex 3 alone is not closed: x_3 maps V_3 onto V_4
        let mut subspaces: Vec<Vec<Vec<Rat>>> = vec![Vec::new(); 4];
        subspaces[2] = vec![vec![rat_int(1)]];
        assert_eq!(
            verify_subrep_certificate(&rep, &subspaces, &zeta).unwrap(),
            Certificate::Rejected
        );
    }

    #[test]
    fn certificate_detects_destabilizer() {
        // direct sum of two simples at vertices 1 and 2; zeta favors vertex 1
        let rep = QuiverRep::zero_maps(Quiver::affine_cycle(3), vec![1, 1, 0]).unwrap();
        let zeta = vec![rat_int(2), rat_int(-2), rat_int(0)];
        let mut subspaces: Vec<Vec<Vec<Rat>>> = vec![Vec::new(); 3];
        subspaces[0] = vec![vec![rat_int(1)]];
        assert_eq!(
            verify_subrep_certificate(&rep, &subspaces, &zeta).unwrap(),
            Certificate::AcceptedDestabilizer
        );
    }

    #[test]
    fn certificate_malformed_inputs() {
        let rep = structure_sheaf_rep(3, 1).unwrap();
        let zeta = symmetric_zeta(3);
        let mut bad_len: Vec<Vec<Vec<Rat>>> = vec![Vec::new(); 3];
        bad_len[1] = vec![vec![rat_int(1), rat_int(0)]];
        assert!(matches!(
            verify_subrep_certificate(&rep, &bad_len, &zeta),
            Err(QuiverError::MalformedCertificate(_))
        ));
        let mut dependent: Vec<Vec<Vec<Rat>>> = vec![Vec::new(); 3];
        dependent[1] = vec![vec![rat_int(1)], vec![rat_int(2)]];
        assert!(matches!(
            verify_subrep_certificate(&rep, &dependent, &zeta),
            Err(QuiverError::MalformedCertificate(_))
        ));
    }

    #[test]
    fn trace_relation_on_random_like_rep() {
        // dense small representation with arbitrary entries
        let q = Quiver::affine_cycle(3);
        let dims = vec![2, 2, 2];
        let mut rep = QuiverRep::zero_maps(q, dims).unwrap();
        let vals = [1, -3, 5, 7, 2, -1, 4, 9, -2, 6, 8, -5];
        let mut it = vals.iter().cycle();
        for k in 0..3 {
            for r in 0..2 {
                for c in 0..2 {
                    rep.set_x_entry(k, r, c, rat_int(*it.next().unwrap()));
                    rep.set_y_entry(k, r, c, rat_int(*it.next().unwrap()));
                }
            }
        }
        let total: Rat = rep.moment_map_defect().iter().map(Matrix::trace).sum();
        assert_eq!(total, rat_int(0));
    }
}
