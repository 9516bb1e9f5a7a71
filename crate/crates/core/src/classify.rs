//! Enumeration of stable class data and its chain structure.
//!
//! For fixed polarization and slope, every stable one-dimensional class is
//! supported on a reduced interval `C_{i,j}` with multiplicity one and is
//! described by a sequence of line-bundle degrees `(e_i, ..., e_j)` obeying
//! strict integer inequalities. Enumerating the finitely many solutions,
//! linking intervals end-to-end yields the unique chain partition, and each
//! chain of length `s` contributes a type `A_s` positive-root system and a
//! Yangian factor `Y+(sl(s+1))`.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use alloc::{format, vec};

use num_bigint::BigInt;

use crate::dictionary::{chern_to_dimvec, DictionaryError};
use crate::quiver::Quiver;
use crate::rational::{floor_int, is_integer, rat_int, to_i64, Rat};
use crate::toric::{DivisorClass, Polarization, ResolutionGeometry, ToricError};

/// Errors raised during enumeration and chain construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    /// `mu <= 0`.
    NonPositiveSlope,
    /// Duplicate classes passed to the Ext table.
    DuplicateClasses,
    /// Two classes share a left or right endpoint.
    EndpointCollision(String),
    Dictionary(DictionaryError),
    Toric(ToricError),
}

impl core::fmt::Display for ClassifyError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            ClassifyError::NonPositiveSlope => write!(f, "slope must be a positive rational"),
            ClassifyError::DuplicateClasses => write!(f, "classes must be pairwise distinct"),
            ClassifyError::EndpointCollision(what) => {
                write!(f, "input violates stable-class endpoint uniqueness: {what}")
            }
            ClassifyError::Dictionary(e) => write!(f, "{e}"),
            ClassifyError::Toric(e) => write!(f, "{e}"),
        }
    }
}

impl From<DictionaryError> for ClassifyError {
    fn from(e: DictionaryError) -> Self {
        ClassifyError::Dictionary(e)
    }
}

impl From<ToricError> for ClassifyError {
    fn from(e: ToricError) -> Self {
        ClassifyError::Toric(e)
    }
}

/// Whether the degree sequence was forced by the inequalities, or merely
/// one of several feasible solutions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Determinacy {
    Determined,
    Candidate,
}

impl Determinacy {
    pub fn as_str(&self) -> &'static str {
        match self {
            Determinacy::Determined => "determined",
            Determinacy::Candidate => "candidate",
        }
    }
}

/// One candidate stable class: interval support, degree sequence, and the
/// derived invariants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StableClass {
    pub i: usize,
    pub j: usize,
    /// Line-bundle degrees `(e_i, ..., e_j)`.
    pub e: Vec<i64>,
    /// `chi = sum (e_l + 1)`.
    pub chi: i64,
    pub determinacy: Determinacy,
}

impl StableClass {
    /// The first Chern class `C_{i,j}`.
    pub fn ch1(&self, geom: &ResolutionGeometry) -> DivisorClass {
        geom.interval_divisor(self.i, self.j)
            .expect("interval validated at construction")
    }

    /// Chern coefficients as an indicator vector of length `N - 1`.
    pub fn chern_coeffs(&self, n: usize) -> Vec<i64> {
        (1..n)
            .map(|k| if self.i <= k && k <= self.j { 1 } else { 0 })
            .collect()
    }

    /// The quiver-side dimension vector of the class.
    pub fn dimvec(&self, n: usize) -> Result<Vec<u64>, DictionaryError> {
        chern_to_dimvec(&self.chern_coeffs(n), self.chi)
    }
}

/// Result of [`enumerate_stable_classes`]: the sorted class list plus any
/// endpoint-collision warnings (flagged, not dropped).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumeration {
    pub classes: Vec<StableClass>,
    pub warnings: Vec<String>,
}

// Integers strictly inside (bound - width, bound) for width 1 or 2.
fn open_interval_candidates(bound: &Rat, width: i64) -> Vec<i64> {
    let hi = floor_int(bound);
    let lo: BigInt = if is_integer(bound) {
        hi.clone() - width
    } else {
        hi.clone() - (width - 1)
    };
    let top: BigInt = if is_integer(bound) { hi - 1 } else { hi };
    let mut out = Vec::new();
    let mut v = lo;
    while v <= top {
        out.push(to_i64(&Rat::from_integer(v.clone())).expect("small degree"));
        v += 1;
    }
    out
}

/// Enumerates all integer solutions of the stability inequalities for the
/// given polarization and positive slope, sorted by `(i, j, e)`.
///
/// For an interval `(i, j)` with `i < j`, the tail degrees satisfy
/// `zeta_i mu - 2 < e_i < zeta_i mu - 1` and `zeta_j mu - 1 < e_j < zeta_j mu`,
/// the middle degrees `zeta_l mu - 2 < e_l < zeta_l mu`, and the total is
/// pinned by `sum (e_l + 1) = mu * sum zeta_l`. A single-curve class `(i, i)`
/// has its degree forced by the Euler characteristic, `e = chi - 1 >= 0`.
pub fn enumerate_stable_classes(
    geom: &ResolutionGeometry,
    omega: &Polarization,
    mu: &Rat,
) -> Result<Enumeration, ClassifyError> {
    if *mu <= rat_int(0) {
        return Err(ClassifyError::NonPositiveSlope);
    }
    let n = geom.n();
    let zeta = omega.zeta_compact();
    let mut classes: Vec<StableClass> = Vec::new();

    for i in 1..n {
        for j in i..n {
            let zeta_sum: Rat = zeta[i - 1..j].iter().cloned().sum();
            let chi_rat = mu * zeta_sum;
            if !is_integer(&chi_rat) {
                continue;
            }
            let chi = to_i64(&chi_rat).expect("small Euler characteristic");

            if i == j {
                // degree forced by chi-consistency; nonnegative per the
                // semistable membership bound
                let e = chi - 1;
                if e >= 0 {
                    classes.push(StableClass {
                        i,
                        j,
                        e: vec![e],
                        chi,
                        determinacy: Determinacy::Determined,
                    });
                }
                continue;
            }

            // per-position candidate sets
            let mut candidates: Vec<Vec<i64>> = Vec::with_capacity(j - i + 1);
            for l in i..=j {
                let scaled = mu * &zeta[l - 1];
                let cands = if l == i {
                    open_interval_candidates(&(scaled - rat_int(1)), 1)
                } else if l == j {
                    open_interval_candidates(&scaled, 1)
                } else {
                    open_interval_candidates(&scaled, 2)
                };
                candidates.push(cands);
            }
            if candidates.iter().any(Vec::is_empty) {
                continue;
            }

            let mut solutions: Vec<Vec<i64>> = Vec::new();
            let mut cursor = vec![0usize; candidates.len()];
            loop {
                let e: Vec<i64> = cursor
                    .iter()
                    .zip(&candidates)
                    .map(|(&c, cands)| cands[c])
                    .collect();
                let total: i64 = e.iter().map(|x| x + 1).sum();
                if total == chi {
                    solutions.push(e);
                }
                // odometer over the candidate grid
                let mut pos = candidates.len();
                loop {
                    if pos == 0 {
                        break;
                    }
                    pos -= 1;
                    cursor[pos] += 1;
                    if cursor[pos] < candidates[pos].len() {
                        break;
                    }
                    cursor[pos] = 0;
                    if pos == 0 {
                        pos = usize::MAX;
                        break;
                    }
                }
                if pos == usize::MAX {
                    break;
                }
            }

            let determinacy = if solutions.len() == 1 {
                Determinacy::Determined
            } else {
                Determinacy::Candidate
            };
            for e in solutions {
                classes.push(StableClass {
                    i,
                    j,
                    e,
                    chi,
                    determinacy,
                });
            }
        }
    }

    classes.sort_by(|a, b| (a.i, a.j, &a.e).cmp(&(b.i, b.j, &b.e)));

    let mut warnings = Vec::new();
    for (a, b) in pairs(&classes) {
        if a.i == b.i || a.j == b.j {
            warnings.push(format!(
                "classes ({},{}) and ({},{}) share an endpoint",
                a.i, a.j, b.i, b.j
            ));
        }
    }
    Ok(Enumeration { classes, warnings })
}

fn pairs<T>(items: &[T]) -> impl Iterator<Item = (&T, &T)> {
    items
        .iter()
        .enumerate()
        .flat_map(move |(k, a)| items[k + 1..].iter().map(move |b| (a, b)))
}

/// Hom/Ext dimension table between stable classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtTable {
    pub hom: Vec<Vec<u64>>,
    pub ext1: Vec<Vec<u64>>,
    pub ext2: Vec<Vec<u64>>,
}

impl ExtTable {
    /// `hom - ext1 + ext2` at a pair of indices.
    pub fn euler(&self, a: usize, b: usize) -> i64 {
        self.hom[a][b] as i64 - self.ext1[a][b] as i64 + self.ext2[a][b] as i64
    }
}

/// Computes the Ext dimension table: `hom = delta`, `ext1 = 1` exactly for
/// linked intervals, `ext2 = delta` by Serre duality.
pub fn ext_table(classes: &[StableClass]) -> Result<ExtTable, ClassifyError> {
    for (a, b) in pairs(classes) {
        if a == b {
            return Err(ClassifyError::DuplicateClasses);
        }
    }
    let n = classes.len();
    let mut hom = vec![vec![0u64; n]; n];
    let mut ext1 = vec![vec![0u64; n]; n];
    let mut ext2 = vec![vec![0u64; n]; n];
    for (a, ca) in classes.iter().enumerate() {
        for (b, cb) in classes.iter().enumerate() {
            if a == b {
                hom[a][b] = 1;
                ext2[a][b] = 1;
            } else if cb.i == ca.j + 1 || ca.i == cb.j + 1 {
                ext1[a][b] = 1;
            }
        }
    }
    Ok(ExtTable { hom, ext1, ext2 })
}

/// A maximal linked sequence of classes, stored as indices into the
/// ambient class list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chain {
    pub class_indices: Vec<usize>,
}

impl Chain {
    pub fn len(&self) -> usize {
        self.class_indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.class_indices.is_empty()
    }
}

/// The unique partition of a class set into chains.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainPartition {
    pub classes: Vec<StableClass>,
    pub chains: Vec<Chain>,
    /// Ordered partition: the chain lengths.
    pub lambda: Vec<usize>,
}

/// Partitions the classes into maximal chains linked by `i_next = j + 1`.
/// Requires pairwise distinct left endpoints and pairwise distinct right
/// endpoints, which makes the link graph a disjoint union of paths.
pub fn chain_partition(classes: &[StableClass]) -> Result<ChainPartition, ClassifyError> {
    let mut lefts = BTreeSet::new();
    let mut rights = BTreeSet::new();
    for c in classes {
        if !lefts.insert(c.i) {
            return Err(ClassifyError::EndpointCollision(format!(
                "left endpoint {} repeated",
                c.i
            )));
        }
        if !rights.insert(c.j) {
            return Err(ClassifyError::EndpointCollision(format!(
                "right endpoint {} repeated",
                c.j
            )));
        }
    }
    // canonical order regardless of input permutation
    let mut order: Vec<usize> = (0..classes.len()).collect();
    order.sort_by_key(|&k| (classes[k].i, classes[k].j, classes[k].e.clone()));

    let sorted: Vec<StableClass> = order.iter().map(|&k| classes[k].clone()).collect();
    let successor = |j: usize, sorted: &[StableClass]| -> Option<usize> {
        sorted.iter().position(|c| c.i == j + 1)
    };
    let has_predecessor = |i: usize, sorted: &[StableClass]| -> bool {
        i >= 2 && sorted.iter().any(|c| c.j == i - 1)
    };

    let mut chains = Vec::new();
    for start in 0..sorted.len() {
        if has_predecessor(sorted[start].i, &sorted) {
            continue;
        }
        let mut chain = vec![start];
        let mut current = start;
        while let Some(next) = successor(sorted[current].j, &sorted) {
            chain.push(next);
            current = next;
        }
        chains.push(Chain {
            class_indices: chain,
        });
    }
    // chains in order of their smallest left endpoint
    chains.sort_by_key(|c| sorted[c.class_indices[0]].i);
    let lambda = chains.iter().map(Chain::len).collect();
    Ok(ChainPartition {
        classes: sorted,
        chains,
        lambda,
    })
}

/// One Yangian tensor factor, determined by a chain of length `s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YangianFactor {
    /// Chain length `s`.
    pub rank: usize,
    /// `"Y+(sl(s+1))"`.
    pub label: String,
    /// The finite type A quiver with `s` vertices.
    pub quiver: Quiver,
}

/// The factor list of the localized Hall algebra: one `Y+(sl(s_c + 1))`
/// per chain.
pub fn yangian_factorization(p: &ChainPartition) -> Vec<YangianFactor> {
    p.lambda
        .iter()
        .map(|&s| YangianFactor {
            rank: s,
            label: format!("Y+(sl({}))", s + 1),
            quiver: Quiver::linear(s),
        })
        .collect()
}

/// A positive root of one chain: the sum of a consecutive run of classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootDatum {
    /// 1-based chain index.
    pub chain: usize,
    /// 1-based positions within the chain, `lo <= hi`.
    pub lo: usize,
    pub hi: usize,
    /// Sum of the first Chern classes of the run.
    pub ch1_image: DivisorClass,
    /// Sum of the dimension vectors of the run.
    pub dim_image: Vec<u64>,
}

/// All positive roots of the chain partition: one per consecutive run in
/// each chain, `sum_c s_c (s_c + 1) / 2` in total.
pub fn positive_roots(
    geom: &ResolutionGeometry,
    p: &ChainPartition,
) -> Result<Vec<RootDatum>, ClassifyError> {
    let n = geom.n();
    let mut roots = Vec::new();
    for (c, chain) in p.chains.iter().enumerate() {
        let s = chain.len();
        for lo in 1..=s {
            for hi in lo..=s {
                let mut ch1 = DivisorClass::zero();
                let mut dim = vec![0u64; n];
                for pos in lo..=hi {
                    let class = &p.classes[chain.class_indices[pos - 1]];
                    ch1 = ch1.plus(&class.ch1(geom));
                    let d = class.dimvec(n)?;
                    for (t, x) in dim.iter_mut().zip(&d) {
                        *t += x;
                    }
                }
                roots.push(RootDatum {
                    chain: c + 1,
                    lo,
                    hi,
                    ch1_image: ch1,
                    dim_image: dim,
                });
            }
        }
    }
    Ok(roots)
}

/// The twisting line bundle of a single class:
/// `L = sum_{l=i}^{j-1} (-1 - e_l) D_l + (-e_j) D_j`. Tensoring by `L`
/// normalizes the class to the structure sheaf of its support interval.
pub fn twisting_line_bundle_class(
    geom: &ResolutionGeometry,
    class: &StableClass,
) -> Result<DivisorClass, ClassifyError> {
    let mut l = DivisorClass::zero();
    for (offset, &e) in class.e.iter().enumerate() {
        let idx = class.i + offset;
        let coeff = if idx < class.j { -1 - e } else { -e };
        let d = geom
            .tilting_divisor(idx)
            .map_err(ClassifyError::Toric)?;
        l = l.plus(&d.scaled(&rat_int(coeff)));
    }
    Ok(l)
}

/// The common twisting line bundle of a chain: the sum over its classes.
pub fn twisting_line_bundle(
    geom: &ResolutionGeometry,
    p: &ChainPartition,
    chain: &Chain,
) -> Result<DivisorClass, ClassifyError> {
    let mut l = DivisorClass::zero();
    for &k in &chain.class_indices {
        l = l.plus(&twisting_line_bundle_class(geom, &p.classes[k])?);
    }
    Ok(l)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dictionary::{omega_to_zeta, SlopeSpec};
    use crate::quiver::zeta_degree;
    use crate::rational::rat;
    use crate::toric::Polarization;

    fn geom(n: usize) -> ResolutionGeometry {
        ResolutionGeometry::build(n).unwrap()
    }

    fn class(i: usize, j: usize) -> StableClass {
        StableClass {
            i,
            j,
            e: {
                let mut e = vec![-1i64; j - i];
                e.push(0);
                e
            },
            chi: 1,
            determinacy: Determinacy::Determined,
        }
    }

    #[test]
    fn symmetric_slope_one_classification() {
        for n in 2..=8 {
            let g = geom(n);
            let omega = Polarization::symmetric(&g);
            let out = enumerate_stable_classes(&g, &omega, &rat_int(1)).unwrap();
            assert_eq!(out.classes.len(), n - 1, "N={n}");
            for (l, c) in out.classes.iter().enumerate() {
                assert_eq!((c.i, c.j), (l + 1, l + 1));
                assert_eq!(c.e, vec![0]);
                assert_eq!(c.chi, 1);
                assert_eq!(c.determinacy, Determinacy::Determined);
            }
            assert!(out.warnings.is_empty());
        }
    }

    #[test]
    fn symmetric_slope_half_brute_force_agreement() {
        // brute-force feasibility scan over all intervals and degree boxes
        let n = 5;
        let g = geom(n);
        let omega = Polarization::symmetric(&g);
        let mu = rat(1, 2);
        let out = enumerate_stable_classes(&g, &omega, &mu).unwrap();

        let mut brute: Vec<(usize, usize, Vec<i64>)> = Vec::new();
        for i in 1..n {
            for j in i..n {
                let chi2 = (j - i + 1) as i64; // 2 * chi for the symmetric case
                if chi2 % 2 != 0 {
                    continue;
                }
                let chi = chi2 / 2;
                if i == j {
                    if chi >= 1 {
                        brute.push((i, j, vec![chi - 1]));
                    }
                    continue;
                }
                // mu*zeta = 1/2 everywhere: e_i in (-3/2, -1/2) = {-1},
                // e_j in (-1/2, 1/2) = {0}, middles in (-3/2, 1/2) = {-1, 0}
                let len = j - i + 1;
                for mask in 0..(1u32 << (len.saturating_sub(2))) {
                    let mut e = vec![-1i64];
                    for b in 0..len - 2 {
                        e.push(if mask & (1 << b) != 0 { 0 } else { -1 });
                    }
                    e.push(0);
                    let total: i64 = e.iter().map(|x| x + 1).sum();
                    if total == chi {
                        brute.push((i, j, e));
                    }
                }
            }
        }
        brute.sort();
        let got: Vec<(usize, usize, Vec<i64>)> = out
            .classes
            .iter()
            .map(|c| (c.i, c.j, c.e.clone()))
            .collect();
        assert_eq!(got, brute);
    }

    #[test]
    fn n2_single_interval() {
        let g = geom(2);
        let omega = Polarization::from_pairings(&g, vec![rat(3, 2)]).unwrap();
        // chi = mu * 3/2 integral with mu = 2: chi = 3, e = (2)
        let out = enumerate_stable_classes(&g, &omega, &rat_int(2)).unwrap();
        assert_eq!(out.classes.len(), 1);
        assert_eq!(out.classes[0].e, vec![2]);
        assert_eq!(out.classes[0].chi, 3);
    }

    #[test]
    fn scaling_invariance() {
        let g = geom(5);
        let zeta = vec![rat(1, 2), rat_int(1), rat(3, 4), rat_int(2)];
        let omega = Polarization::from_pairings(&g, zeta.clone()).unwrap();
        let mu = rat(4, 3);
        let c = rat(7, 5);
        let scaled: Vec<Rat> = zeta.iter().map(|z| z * &c).collect();
        let omega2 = Polarization::from_pairings(&g, scaled).unwrap();
        let a = enumerate_stable_classes(&g, &omega, &mu).unwrap();
        let b = enumerate_stable_classes(&g, &omega2, &(mu / c)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn enumerated_classes_have_zero_zeta_degree() {
        let g = geom(6);
        let zeta = vec![rat(1, 2), rat_int(2), rat(5, 4), rat_int(1), rat(3, 2)];
        let omega = Polarization::from_pairings(&g, zeta).unwrap();
        for mu in [rat_int(1), rat(1, 2), rat_int(2), rat(2, 3)] {
            let out = enumerate_stable_classes(&g, &omega, &mu).unwrap();
            let zeta_full =
                omega_to_zeta(&omega, &SlopeSpec::Finite(mu.clone())).unwrap();
            for c in &out.classes {
                let d = c.dimvec(6).unwrap();
                assert_eq!(zeta_degree(&zeta_full, &d).unwrap(), rat_int(0));
            }
        }
    }

    #[test]
    fn ext_table_cases() {
        let classes = vec![class(1, 1), class(2, 2), class(4, 5)];
        let t = ext_table(&classes).unwrap();
        // (1,1) and (2,2) are linked both ways
        assert_eq!(t.ext1[0][1], 1);
        assert_eq!(t.ext1[1][0], 1);
        // diagonal
        assert_eq!((t.hom[0][0], t.ext1[0][0], t.ext2[0][0]), (1, 0, 1));
        // disjoint unlinked
        assert_eq!((t.hom[0][2], t.ext1[0][2], t.ext2[0][2]), (0, 0, 0));
        assert_eq!(
            ext_table(&vec![class(1, 1), class(1, 1)]),
            Err(ClassifyError::DuplicateClasses)
        );
    }

    #[test]
    fn euler_matches_interval_pairing() {
        for n in 3..=8 {
            let g = geom(n);
            let mut classes = Vec::new();
            for i in (1..n).step_by(2) {
                classes.push(class(i, i));
            }
            let t = ext_table(&classes).unwrap();
            for (a, ca) in classes.iter().enumerate() {
                for (b, cb) in classes.iter().enumerate() {
                    let pairing = g.interval_pairing(ca.i, ca.j, cb.i, cb.j).unwrap();
                    assert_eq!(t.euler(a, b), -pairing, "N={n} a={a} b={b}");
                }
            }
        }
    }

    #[test]
    fn chain_partition_examples() {
        // symmetric slope-one classes form a single chain
        let classes: Vec<StableClass> = (1..5).map(|l| class(l, l)).collect();
        let p = chain_partition(&classes).unwrap();
        assert_eq!(p.lambda, vec![4]);

        // gap of two: two chains
        let p = chain_partition(&[class(1, 2), class(4, 4)]).unwrap();
        assert_eq!(p.lambda, vec![1, 1]);

        // mixed intervals linked through +1
        let p = chain_partition(&[class(1, 1), class(2, 3), class(4, 4)]).unwrap();
        assert_eq!(p.lambda, vec![3]);
    }

    #[test]
    fn chain_partition_permutation_invariant_and_idempotent() {
        let classes = vec![class(4, 4), class(1, 1), class(2, 3), class(6, 7)];
        let p1 = chain_partition(&classes).unwrap();
        let mut rev = classes.clone();
        rev.reverse();
        let p2 = chain_partition(&rev).unwrap();
        assert_eq!(p1, p2);
        // every class exactly once
        let covered: usize = p1.chains.iter().map(Chain::len).sum();
        assert_eq!(covered, classes.len());
        // idempotence: re-partitioning the concatenated chains
        let concat: Vec<StableClass> = p1
            .chains
            .iter()
            .flat_map(|c| c.class_indices.iter().map(|&k| p1.classes[k].clone()))
            .collect();
        assert_eq!(chain_partition(&concat).unwrap(), p1);
    }

    #[test]
    fn chain_partition_rejects_collisions() {
        assert!(matches!(
            chain_partition(&[class(1, 2), class(1, 3)]),
            Err(ClassifyError::EndpointCollision(_))
        ));
    }

    #[test]
    fn yangian_factors() {
        let p = chain_partition(&(1..5).map(|l| class(l, l)).collect::<Vec<_>>()).unwrap();
        let f = yangian_factorization(&p);
        assert_eq!(f.len(), 1);
        assert_eq!(f[0].label, "Y+(sl(5))");
        assert_eq!(f[0].quiver, Quiver::linear(4));

        let p2 = chain_partition(&[class(1, 1), class(3, 3)]).unwrap();
        let f2 = yangian_factorization(&p2);
        assert_eq!(
            f2.iter().map(|x| x.label.clone()).collect::<Vec<_>>(),
            vec!["Y+(sl(2))", "Y+(sl(2))"]
        );

        let empty = chain_partition(&[]).unwrap();
        assert!(yangian_factorization(&empty).is_empty());
    }

    #[test]
    fn positive_root_data() {
        let g = geom(3);
        let p = chain_partition(&[class(1, 1), class(2, 2)]).unwrap();
        let roots = positive_roots(&g, &p).unwrap();
        assert_eq!(roots.len(), 3);
        let images: Vec<DivisorClass> = roots.iter().map(|r| r.ch1_image.clone()).collect();
        assert!(images.contains(&DivisorClass::curve(1)));
        assert!(images.contains(&DivisorClass::curve(2)));
        assert!(images.contains(&g.interval_divisor(1, 2).unwrap()));
        // full-chain root dimension image is the sum of the class dimvecs
        let full = roots.iter().find(|r| (r.lo, r.hi) == (1, 2)).unwrap();
        let expect: Vec<u64> = vec![1, 1, 2];
        assert_eq!(full.dim_image, expect);
    }

    #[test]
    fn twisting_line_bundle_cases() {
        let g = geom(6);
        // structure sheaf of a single curve: no twist
        assert!(twisting_line_bundle_class(&g, &class(3, 3))
            .unwrap()
            .is_zero());
        // normalized degree sequence (-1, ..., -1, 0): no twist
        assert!(twisting_line_bundle_class(&g, &class(1, 4))
            .unwrap()
            .is_zero());
        // degrees (0, 1) on (1, 2): L = -D_1 - D_2
        let c = StableClass {
            i: 1,
            j: 2,
            e: vec![0, 1],
            chi: 3,
            determinacy: Determinacy::Candidate,
        };
        let l = twisting_line_bundle_class(&g, &c).unwrap();
        let d1 = g.tilting_divisor(1).unwrap();
        let d2 = g.tilting_divisor(2).unwrap();
        let expect = d1.scaled(&rat_int(-1)).plus(&d2.scaled(&rat_int(-1)));
        assert_eq!(l, expect);
    }

    #[test]
    fn twist_normalizes_degrees() {
        // after twisting, the degree of the class restricted to each curve
        // matches the structure-sheaf sequence (-1, ..., -1, 0)
        let g = geom(5);
        let c = StableClass {
            i: 2,
            j: 4,
            e: vec![1, -1, 2],
            chi: 5,
            determinacy: Determinacy::Candidate,
        };
        let l = twisting_line_bundle_class(&g, &c).unwrap();
        for (offset, &e) in c.e.iter().enumerate() {
            let idx = c.i + offset;
            let twist = g
                .intersection(&l, &DivisorClass::curve(idx))
                .unwrap();
            let twisted = rat_int(e) + twist;
            let expect = if idx < c.j { rat_int(-1) } else { rat_int(0) };
            assert_eq!(twisted, expect, "curve {idx}");
        }
    }
}
