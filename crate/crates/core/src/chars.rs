//! Character tables, Plancherel measure, and restriction multiplicities.
//!
//! The table is computed from the multiplication table alone: class sums span
//! the center of the group algebra, multiplication by a class sum is a normal
//! operator there, and the characters are (up to normalization) the joint
//! eigenvectors of that commuting family. We split the center into joint
//! eigenlines with random Hermitian combinations of the multiplication
//! operators, then read each character off its eigenline and validate the
//! whole table against the orthogonality relations before returning it.
//!
//! Character values are complex floating-point; dimensions and Plancherel
//! masses are exact integers/rationals.

use nalgebra::{Complex, DMatrix, DVector};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

use crate::error::CharError;
use crate::group::{GroupTable, IDENTITY};

pub type C64 = Complex<f64>;

/// Row/column orthogonality must hold to this residual for a table to build.
pub const ORTHOGONALITY_TOL: f64 = 1e-9;
/// Dimensions must round to integers within this residual.
pub const DIM_ROUND_TOL: f64 = 1e-6;
/// A table counts as integral when every value is this close to an integer.
pub const INTEGER_SNAP_TOL: f64 = 1e-9;
/// Default tolerance for restriction multiplicities.
pub const MULTIPLICITY_TOL: f64 = 1e-6;

const MAX_ATTEMPTS: usize = 12;
const ROUNDS_PER_ATTEMPT: usize = 4;

/// Character table of a finite group: one row per irrep, one column per
/// conjugacy class, rows sorted by dimension then lexicographically by
/// rounded values so indices are reproducible.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    order: usize,
    class_sizes: Vec<usize>,
    dims: Vec<u64>,
    values: Vec<Vec<C64>>,
    trivial_index: usize,
    integer_values: Option<Vec<Vec<i64>>>,
}

impl CharacterTable {
    /// Computes the character table of `g`.
    pub fn build(g: &GroupTable) -> Result<CharacterTable, CharError> {
        let mut last_stuck = None;
        for attempt in 0..MAX_ATTEMPTS {
            match joint_eigenvectors(g, attempt) {
                Ok(vectors) => match extract_table(g, &vectors) {
                    Ok(ct) => return Ok(ct),
                    Err(e) => {
                        if attempt + 1 == MAX_ATTEMPTS {
                            return Err(e);
                        }
                    }
                },
                Err(stuck) => last_stuck = Some(stuck),
            }
        }
        let stuck = last_stuck.unwrap_or_default();
        Err(CharError::SplitFailure {
            attempts: MAX_ATTEMPTS,
            cluster_size: stuck.cluster_size,
            classes: stuck.classes,
        })
    }

    pub fn irrep_count(&self) -> usize {
        self.dims.len()
    }

    pub fn class_count(&self) -> usize {
        self.class_sizes.len()
    }

    pub fn group_order(&self) -> usize {
        self.order
    }

    /// Integer dimensions, in row order.
    pub fn dims(&self) -> &[u64] {
        &self.dims
    }

    pub fn dim(&self, row: usize) -> u64 {
        self.dims[row]
    }

    /// Character value of irrep `row` on conjugacy class `class`.
    #[inline]
    pub fn value(&self, row: usize, class: usize) -> C64 {
        self.values[row][class]
    }

    pub fn row(&self, row: usize) -> &[C64] {
        &self.values[row]
    }

    /// Index of the all-ones row.
    pub fn trivial_index(&self) -> usize {
        self.trivial_index
    }

    /// Exact integer character values, present iff every value of the table
    /// is within [`INTEGER_SNAP_TOL`] of an integer (true for all symmetric
    /// groups, for instance). Indexed `[row][class]`.
    pub fn integer_values(&self) -> Option<&Vec<Vec<i64>>> {
        self.integer_values.as_ref()
    }

    /// Largest deviation of (1/|G|) sum_g chi_i(g) chi_j(g)* from delta_ij
    /// over all row pairs.
    pub fn row_orthogonality_residual(&self, g: &GroupTable) -> f64 {
        let n = self.irrep_count();
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in i..n {
                let mut s = C64::zero();
                for (c, &size) in g.class_sizes().iter().enumerate() {
                    s += self.values[i][c] * self.values[j][c].conj() * (size as f64);
                }
                s /= self.order as f64;
                let expect = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((s - C64::new(expect, 0.0)).norm());
            }
        }
        worst
    }

    /// Largest deviation of the normalized column inner products from
    /// delta_{cc'}: sqrt(s_c s_c')/|G| * sum_i chi_i(c) chi_i(c')*.
    pub fn column_orthogonality_residual(&self, g: &GroupTable) -> f64 {
        let k = self.class_count();
        let sizes = g.class_sizes();
        let mut worst = 0.0f64;
        for c in 0..k {
            for c2 in c..k {
                let mut s = C64::zero();
                for row in &self.values {
                    s += row[c] * row[c2].conj();
                }
                s *= ((sizes[c] as f64) * (sizes[c2] as f64)).sqrt() / self.order as f64;
                let expect = if c == c2 { 1.0 } else { 0.0 };
                worst = worst.max((s - C64::new(expect, 0.0)).norm());
            }
        }
        worst
    }

    /// Exact Plancherel distribution: irrep `rho` gets mass d_rho^2 / |G|.
    pub fn plancherel(&self) -> PlancherelDistribution {
        let order = self.order as u64;
        let mut cumulative = Vec::with_capacity(self.dims.len());
        let mut acc = 0u64;
        let mut masses = Vec::with_capacity(self.dims.len());
        for &d in &self.dims {
            acc += d * d;
            cumulative.push(acc);
            masses.push(BigRational::new(
                BigInt::from(d) * BigInt::from(d),
                BigInt::from(order),
            ));
        }
        assert_eq!(acc, order, "dimension invariant violated");
        PlancherelDistribution {
            masses,
            cumulative,
            order,
        }
    }

    /// Verifies the regular-character identity exhaustively and the
    /// biregular identity on `sample_pairs` seeded pairs; returns residuals.
    pub fn check_identities(
        &self,
        g: &GroupTable,
        sample_pairs: usize,
        seed: u64,
    ) -> IdentityReport {
        let order = g.order();
        // Regular character: sum_rho d_rho chi_rho(x) = |G| at 1, else 0.
        let mut r_max = 0.0f64;
        let mut r_exact = true;
        for x in 0..order {
            let c = g.class_of(x);
            let mut s = C64::zero();
            for (row, &d) in self.dims.iter().enumerate() {
                s += self.values[row][c] * (d as f64);
            }
            let expect = if x == IDENTITY { order as i64 } else { 0 };
            r_max = r_max.max((s - C64::new(expect as f64, 0.0)).norm());
            if s.re.round() as i64 != expect || s.im.abs() > MULTIPLICITY_TOL {
                r_exact = false;
            }
        }

        // Biregular character: |{x : g1 x g2^{-1} = x}| = sum_rho
        // chi_rho(g1) chi_rho(g2)*.
        let mut rng = ChaCha12Rng::seed_from_u64(seed);
        let mut b_max = 0.0f64;
        for _ in 0..sample_pairs {
            let g1 = rng.random_range(0..order);
            let g2 = rng.random_range(0..order);
            let g2inv = g.inv(g2);
            let count = (0..order)
                .filter(|&x| g.mul(g.mul(g1, x), g2inv) == x)
                .count();
            let mut s = C64::zero();
            for row in &self.values {
                s += row[g.class_of(g1)] * row[g.class_of(g2)].conj();
            }
            b_max = b_max.max((s - C64::new(count as f64, 0.0)).norm());
        }
        IdentityReport {
            regular_max_residual: r_max,
            regular_rounding_exact: r_exact,
            biregular_max_residual: b_max,
            pairs_sampled: sample_pairs,
        }
    }

    /// Structured text export: class data, then one row per irrep with
    /// dimension and complex values as (re, im) pairs, 12 significant digits.
    pub fn export_text(&self, g: &GroupTable) -> String {
        use std::fmt::Write;
        let mut out = String::new();
        writeln!(out, "character-table v1").unwrap();
        writeln!(out, "group order {}", self.order).unwrap();
        writeln!(out, "classes {}", self.class_count()).unwrap();
        for (c, &rep) in g.class_reps().iter().enumerate() {
            writeln!(
                out,
                "class {c}: rep {rep} name {} size {}",
                g.name(rep),
                g.class_sizes()[c]
            )
            .unwrap();
        }
        writeln!(out, "irreps {}", self.irrep_count()).unwrap();
        let pl = self.plancherel();
        for (row, &d) in self.dims.iter().enumerate() {
            let vals = self.values[row]
                .iter()
                .map(|v| format!("({:.11e}, {:.11e})", v.re, v.im))
                .collect::<Vec<_>>()
                .join(" ");
            writeln!(
                out,
                "irrep {row}: dim {d} plancherel {} values {vals}",
                pl.masses[row]
            )
            .unwrap();
        }
        out
    }
}

/// Residuals from the regular/biregular character identities.
#[derive(Debug, Clone)]
pub struct IdentityReport {
    pub regular_max_residual: f64,
    /// True iff rounding the regular-character sum to the nearest integer
    /// gives exactly |G| at the identity and 0 everywhere else.
    pub regular_rounding_exact: bool,
    pub biregular_max_residual: f64,
    pub pairs_sampled: usize,
}

/// Plancherel measure on the irreps of a group: exact rational masses
/// d^2/|G| plus integer cumulative weights for exact sampling.
#[derive(Debug, Clone)]
pub struct PlancherelDistribution {
    masses: Vec<BigRational>,
    cumulative: Vec<u64>,
    order: u64,
}

impl PlancherelDistribution {
    pub fn masses(&self) -> &[BigRational] {
        &self.masses
    }

    pub fn mass(&self, row: usize) -> &BigRational {
        &self.masses[row]
    }

    pub fn len(&self) -> usize {
        self.masses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.masses.is_empty()
    }

    /// Exact Plancherel draw: one uniform integer in [0, |G|), resolved
    /// against the cumulative d^2 weights.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> usize {
        let r = rng.random_range(0..self.order);
        self.cumulative.partition_point(|&c| c <= r)
    }
}

/// Multiplicity of the trivial character in the restriction of a class
/// function to a subgroup: (1/|H|) sum_{h in H} chi(h), rounded to the
/// nonnegative integer it must be for genuine characters.
///
/// `chi_by_class` gives the value of the class function on each conjugacy
/// class of `g`; `h` lists the subgroup elements.
pub fn restriction_multiplicity(
    g: &GroupTable,
    chi_by_class: &[C64],
    h: &[usize],
) -> Result<u64, CharError> {
    if !g.is_subgroup(h) {
        return Err(CharError::NotASubgroup { size: h.len() });
    }
    let mut s = C64::zero();
    for &x in h {
        s += chi_by_class[g.class_of(x)];
    }
    s /= h.len() as f64;
    let rounded = s.re.round();
    if (s.re - rounded).abs() > MULTIPLICITY_TOL
        || s.im.abs() > MULTIPLICITY_TOL
        || rounded < 0.0
    {
        return Err(CharError::NonIntegerMultiplicity {
            value: s.re,
            tol: MULTIPLICITY_TOL,
        });
    }
    Ok(rounded as u64)
}

#[derive(Debug, Clone, Default)]
struct StuckInfo {
    cluster_size: usize,
    classes: Vec<usize>,
}

/// Adds `sum_j coeffs[j] * N_j` where `N_j` is multiplication by the j-th
/// class sum on the center, in the orthonormal (scaled class-sum) basis.
/// Entry (l, i) of `N_j` is a_{jil} * sqrt(|C_l| / |C_i|) with a_{jil} the
/// number of ways an element of class l factors as (class j) * (class i).
fn accumulate_combination(g: &GroupTable, coeffs: &[C64]) -> DMatrix<C64> {
    let k = g.class_count();
    let sizes = g.class_sizes();
    let sqrt_size: Vec<f64> = sizes.iter().map(|&s| (s as f64).sqrt()).collect();
    let reps = g.class_reps().to_vec();
    let mut a = DMatrix::<C64>::zeros(k, k);
    for (j, &cj) in coeffs.iter().enumerate().take(k) {
        if cj == C64::zero() {
            continue;
        }
        for x in g.class_elements(j) {
            let xinv = g.inv(x);
            for (l, &rep) in reps.iter().enumerate() {
                let i = g.class_of(g.mul(xinv, rep));
                a[(l, i)] += cj * (sqrt_size[l] / sqrt_size[i]);
            }
        }
    }
    a
}

/// Splits every subspace (columns orthonormal) along the eigenspaces of the
/// Hermitian matrix `h`, clustering eigenvalues closer than a scaled gap.
fn split_subspaces(subspaces: Vec<DMatrix<C64>>, h: &DMatrix<C64>) -> Vec<DMatrix<C64>> {
    let mut out = Vec::with_capacity(subspaces.len());
    for v in subspaces {
        if v.ncols() <= 1 {
            out.push(v);
            continue;
        }
        let m = v.adjoint() * h * &v;
        let m = (&m + m.adjoint()) * C64::new(0.5, 0.0);
        let eig = m.symmetric_eigen();
        let s = v.ncols();
        let mut idx: Vec<usize> = (0..s).collect();
        idx.sort_by(|&a, &b| eig.eigenvalues[a].partial_cmp(&eig.eigenvalues[b]).unwrap());
        let scale = idx
            .iter()
            .map(|&i| eig.eigenvalues[i].abs())
            .fold(0.0f64, f64::max);
        let tol = (1e-8 * scale).max(1e-12);
        let mut start = 0;
        while start < s {
            let mut end = start + 1;
            while end < s
                && eig.eigenvalues[idx[end]] - eig.eigenvalues[idx[end - 1]] <= tol
            {
                end += 1;
            }
            let mut basis = DMatrix::<C64>::zeros(v.nrows(), end - start);
            for (col, &i) in idx[start..end].iter().enumerate() {
                basis.set_column(col, &(&v * eig.eigenvectors.column(i)));
            }
            out.push(basis);
            start = end;
        }
    }
    out
}

fn all_singletons(subspaces: &[DMatrix<C64>]) -> bool {
    subspaces.iter().all(|v| v.ncols() == 1)
}

/// Splits the center into k joint eigenlines of the class-sum multiplication
/// family, using seeded random Hermitian combinations and, if needed, a
/// sequential pass over the individual operators.
fn joint_eigenvectors(g: &GroupTable, attempt: usize) -> Result<Vec<DVector<C64>>, StuckInfo> {
    let k = g.class_count();
    let mut subspaces = vec![DMatrix::<C64>::identity(k, k)];
    let mut rng =
        ChaCha12Rng::seed_from_u64(0xC4A1_7AB1u64 ^ (attempt as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));

    for _round in 0..ROUNDS_PER_ATTEMPT {
        if all_singletons(&subspaces) {
            break;
        }
        let coeffs: Vec<C64> = (0..k)
            .map(|_| C64::new(rng.random::<f64>() * 2.0 - 1.0, rng.random::<f64>() * 2.0 - 1.0))
            .collect();
        let a = accumulate_combination(g, &coeffs);
        let herm = (&a + a.adjoint()) * C64::new(0.5, 0.0);
        subspaces = split_subspaces(subspaces, &herm);
        if all_singletons(&subspaces) {
            break;
        }
        let skew = (&a - a.adjoint()) * C64::new(0.0, -0.5);
        subspaces = split_subspaces(subspaces, &skew);
    }

    if !all_singletons(&subspaces) {
        // Deterministic fallback: split by every operator in turn. Any
        // subspace this cannot split is a genuine (numerical) collision.
        let mut unit = vec![C64::zero(); k];
        for j in 0..k {
            if all_singletons(&subspaces) {
                break;
            }
            unit[j] = C64::one();
            let nj = accumulate_combination(g, &unit);
            unit[j] = C64::zero();
            let herm = (&nj + nj.adjoint()) * C64::new(0.5, 0.0);
            subspaces = split_subspaces(subspaces, &herm);
            let skew = (&nj - nj.adjoint()) * C64::new(0.0, -0.5);
            subspaces = split_subspaces(subspaces, &skew);
        }
    }

    if let Some(stuck) = subspaces.iter().find(|v| v.ncols() > 1) {
        // Name the classes carrying the colliding subspace.
        let mut weight: Vec<(f64, usize)> = (0..k)
            .map(|j| (stuck.row(j).iter().map(|z| z.norm_sqr()).sum::<f64>(), j))
            .collect();
        weight.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap());
        let classes = weight
            .iter()
            .take_while(|(w, _)| *w > 1e-6)
            .take(8)
            .map(|&(_, j)| j)
            .collect();
        return Err(StuckInfo {
            cluster_size: stuck.ncols(),
            classes,
        });
    }

    Ok(subspaces
        .into_iter()
        .map(|v| DVector::from_column_slice(v.column(0).as_slice()))
        .collect())
}

/// Reads a character off each eigenline, normalizes, validates the full
/// table, and sorts rows deterministically.
fn extract_table(g: &GroupTable, vectors: &[DVector<C64>]) -> Result<CharacterTable, CharError> {
    let k = g.class_count();
    let order = g.order();
    let sizes = g.class_sizes();
    let sqrt_order = (order as f64).sqrt();

    let mut rows: Vec<(u64, Vec<C64>)> = Vec::with_capacity(k);
    for v in vectors {
        // chi(class j) = conj(v_j) * sqrt(|G| / |C_j|), phase fixed so that
        // chi(identity) is real positive (it equals the dimension).
        let mut w: Vec<C64> = (0..k)
            .map(|j| v[j].conj() * (sqrt_order / (sizes[j] as f64).sqrt()))
            .collect();
        let w0 = w[0];
        if w0.norm() < 1e-8 {
            return Err(CharError::Validation(
                "eigenline has no identity-class component".to_string(),
            ));
        }
        let phase = w0 / w0.norm();
        for z in &mut w {
            *z /= phase;
        }
        let dim_f = w[0].re;
        let dim = dim_f.round();
        if dim < 1.0 || (dim_f - dim).abs() > DIM_ROUND_TOL || w[0].im.abs() > DIM_ROUND_TOL {
            return Err(CharError::Validation(format!(
                "dimension {dim_f} does not round to a positive integer"
            )));
        }
        rows.push((dim as u64, w));
    }

    let dim_sq: u64 = rows.iter().map(|(d, _)| d * d).sum();
    if dim_sq != order as u64 {
        return Err(CharError::Validation(format!(
            "sum of squared dimensions {dim_sq} != group order {order}"
        )));
    }

    // Deterministic row order: dimension, then lexicographic by values
    // rounded to 9 decimals.
    let key = |row: &Vec<C64>| -> Vec<(i64, i64)> {
        row.iter()
            .map(|z| ((z.re * 1e9).round() as i64, (z.im * 1e9).round() as i64))
            .collect()
    };
    rows.sort_by(|a, b| (a.0, key(&a.1)).cmp(&(b.0, key(&b.1))));

    let dims: Vec<u64> = rows.iter().map(|(d, _)| *d).collect();
    let values: Vec<Vec<C64>> = rows.into_iter().map(|(_, v)| v).collect();

    let trivial_index = values
        .iter()
        .position(|row| row.iter().all(|z| (z - C64::one()).norm() < DIM_ROUND_TOL))
        .ok_or_else(|| CharError::Validation("no trivial row found".to_string()))?;

    let integer_values = {
        let ok = values.iter().all(|row| {
            row.iter()
                .all(|z| (z.re - z.re.round()).abs() <= INTEGER_SNAP_TOL && z.im.abs() <= INTEGER_SNAP_TOL)
        });
        ok.then(|| {
            values
                .iter()
                .map(|row| row.iter().map(|z| z.re.round() as i64).collect())
                .collect()
        })
    };

    let ct = CharacterTable {
        order,
        class_sizes: sizes.to_vec(),
        dims,
        values,
        trivial_index,
        integer_values,
    };

    let row_res = ct.row_orthogonality_residual(g);
    if row_res > ORTHOGONALITY_TOL {
        return Err(CharError::Validation(format!(
            "row orthogonality residual {row_res:.3e} exceeds {ORTHOGONALITY_TOL:.0e}"
        )));
    }
    let col_res = ct.column_orthogonality_residual(g);
    if col_res > ORTHOGONALITY_TOL {
        return Err(CharError::Validation(format!(
            "column orthogonality residual {col_res:.3e} exceeds {ORTHOGONALITY_TOL:.0e}"
        )));
    }
    for (row, &d) in ct.dims.iter().enumerate() {
        if (ct.values[row][0] - C64::new(d as f64, 0.0)).norm() > DIM_ROUND_TOL {
            return Err(CharError::Validation(format!(
                "row {row}: value at identity differs from dimension {d}"
            )));
        }
    }
    Ok(ct)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupSpec;

    fn table(name: &str) -> (GroupTable, CharacterTable) {
        let g = GroupSpec::parse(name).unwrap().build().unwrap();
        let ct = CharacterTable::build(&g).unwrap();
        (g, ct)
    }

    #[test]
    fn trivial_group_table() {
        let g = GroupTable::from_table(vec![vec![0]], None).unwrap();
        let ct = CharacterTable::build(&g).unwrap();
        assert_eq!(ct.dims(), &[1]);
        assert!((ct.value(0, 0) - C64::one()).norm() < 1e-12);
        assert_eq!(ct.trivial_index(), 0);
    }

    #[test]
    fn s3_dimensions_and_two_dim_row() {
        let (g, ct) = table("s3");
        assert_eq!(ct.dims(), &[1, 1, 2]);
        // Classes are discovered in element order: identity, transpositions,
        // 3-cycles. The 2-dim row must be (2, 0, -1).
        assert_eq!(g.class_sizes(), &[1, 3, 2]);
        let row = ct.row(2);
        assert!((row[0] - C64::new(2.0, 0.0)).norm() < 1e-9);
        assert!(row[1].norm() < 1e-9);
        assert!((row[2] - C64::new(-1.0, 0.0)).norm() < 1e-9);
        // Oracle: the regular character decomposes as sum d_rho chi_rho.
        let report = ct.check_identities(&g, 100, 7);
        assert!(report.regular_rounding_exact);
        assert!(report.regular_max_residual < 1e-9);
        assert!(ct.row_orthogonality_residual(&g) < 1e-10);
        assert!(ct.integer_values().is_some());
    }

    #[test]
    fn c4_rows_are_fourth_roots_of_unity() {
        let (g, ct) = table("c4");
        assert_eq!(ct.dims(), &[1, 1, 1, 1]);
        assert!(ct.integer_values().is_none());
        // Oracle: candidate characters chi_k(g^j) = i^{kj}; check that the
        // computed rows match that set exactly (as sets, up to 1e-9).
        let i = C64::new(0.0, 1.0);
        let mut expected: Vec<Vec<C64>> = (0..4)
            .map(|k| (0..4).map(|j| i.powu((k * j) as u32)).collect())
            .collect();
        let close = |a: &[C64], b: &[C64]| {
            a.iter().zip(b).all(|(x, y)| (x - y).norm() < 1e-9)
        };
        for row in 0..4 {
            let pos = expected.iter().position(|e| close(e, ct.row(row)));
            assert!(pos.is_some(), "row {row} = {:?} unexpected", ct.row(row));
            expected.remove(pos.unwrap());
        }
        // Orthogonality of the analytic rows doubles as the derivation check.
        assert!(ct.row_orthogonality_residual(&g) < 1e-10);
        assert!(ct.column_orthogonality_residual(&g) < 1e-10);
    }

    #[test]
    fn biregular_identity_on_s3_hand_cases() {
        let (g, ct) = table("s3");
        let transposition = (0..6).find(|&x| g.element_order(x) == 2).unwrap();
        let three_cycle = (0..6).find(|&x| g.element_order(x) == 3).unwrap();

        // Oracle: exhaustive fixed-point count of x -> g1 x g2^{-1}.
        let count = |g1: usize, g2: usize| {
            (0..6)
                .filter(|&x| g.mul(g.mul(g1, x), g.inv(g2)) == x)
                .count()
        };
        assert_eq!(count(transposition, transposition), 2);
        assert_eq!(count(transposition, three_cycle), 0);

        let char_sum = |g1: usize, g2: usize| -> C64 {
            (0..3)
                .map(|r| ct.value(r, g.class_of(g1)) * ct.value(r, g.class_of(g2)).conj())
                .sum()
        };
        assert!((char_sum(transposition, transposition) - C64::new(2.0, 0.0)).norm() < 1e-6);
        assert!(char_sum(transposition, three_cycle).norm() < 1e-6);

        let report = ct.check_identities(&g, 1000, 99);
        assert!(report.biregular_max_residual < 1e-6);
    }

    #[test]
    fn plancherel_masses() {
        let (_, ct) = table("s3");
        let pl = ct.plancherel();
        let frac = |a: i64, b: i64| BigRational::new(BigInt::from(a), BigInt::from(b));
        assert_eq!(pl.masses(), &[frac(1, 6), frac(1, 6), frac(2, 3)]);
        let total: BigRational = pl.masses().iter().cloned().sum();
        assert!(total.is_one());

        let (_, c2) = table("c2");
        assert_eq!(c2.plancherel().masses(), &[frac(1, 2), frac(1, 2)]);

        let g1 = GroupTable::from_table(vec![vec![0]], None).unwrap();
        let ct1 = CharacterTable::build(&g1).unwrap();
        assert_eq!(ct1.plancherel().masses(), &[frac(1, 1)]);
    }

    #[test]
    fn plancherel_sampling_is_seeded_and_matches_masses() {
        let (_, ct) = table("s3");
        let pl = ct.plancherel();
        let draw = |seed: u64| -> Vec<usize> {
            let mut rng = ChaCha12Rng::seed_from_u64(seed);
            (0..1000).map(|_| pl.sample(&mut rng)).collect()
        };
        assert_eq!(draw(42), draw(42));

        let mut rng = ChaCha12Rng::seed_from_u64(5);
        let trials = 100_000;
        let mut counts = [0usize; 3];
        for _ in 0..trials {
            counts[pl.sample(&mut rng)] += 1;
        }
        let freq = counts[2] as f64 / trials as f64;
        assert!((freq - 2.0 / 3.0).abs() < 0.01, "freq {freq}");
    }

    #[test]
    fn restriction_multiplicities_on_s3() {
        let (g, ct) = table("s3");
        let three_cycle = (0..6).find(|&x| g.element_order(x) == 3).unwrap();
        let transposition = (0..6).find(|&x| g.element_order(x) == 2).unwrap();
        let h3 = g.generate_subgroup(&[three_cycle], 10).unwrap();
        let h2 = g.generate_subgroup(&[transposition], 10).unwrap();

        let trivial = ct.row(ct.trivial_index()).to_vec();
        assert_eq!(restriction_multiplicity(&g, &trivial, &h3).unwrap(), 1);
        assert_eq!(restriction_multiplicity(&g, &trivial, &h2).unwrap(), 1);

        let two_dim = ct.row(2).to_vec();
        assert_eq!(restriction_multiplicity(&g, &two_dim, &h3).unwrap(), 0);
        assert_eq!(restriction_multiplicity(&g, &two_dim, &h2).unwrap(), 1);
        // Restricting to the identity gives the dimension.
        assert_eq!(restriction_multiplicity(&g, &two_dim, &[0]).unwrap(), 2);
    }

    #[test]
    fn restriction_multiplicity_is_nonneg_integer_for_all_s3_subgroups() {
        let (g, ct) = table("s3");
        // All subgroups of s3 arise from 1- or 2-element generator sets.
        let mut subgroups: Vec<Vec<usize>> = Vec::new();
        for a in 0..6 {
            for b in a..6 {
                let h = g.generate_subgroup(&[a, b], 10).unwrap();
                if !subgroups.contains(&h) {
                    subgroups.push(h);
                }
            }
        }
        assert_eq!(subgroups.len(), 6);
        for h in &subgroups {
            for row in 0..ct.irrep_count() {
                let chi = ct.row(row).to_vec();
                restriction_multiplicity(&g, &chi, h).unwrap();
            }
        }
    }

    #[test]
    fn junk_class_function_is_rejected() {
        let (g, _) = table("s3");
        let junk = vec![C64::new(1.0, 0.0), C64::new(0.5, 0.0), C64::new(0.25, 0.0)];
        let all: Vec<usize> = (0..6).collect();
        match restriction_multiplicity(&g, &junk, &all) {
            Err(CharError::NonIntegerMultiplicity { .. }) => {}
            other => panic!("expected NonIntegerMultiplicity, got {other:?}"),
        }
        // Not a subgroup: {identity, transposition-ish pair missing closure}.
        match restriction_multiplicity(&g, &junk, &[0, 3]) {
            Err(CharError::NotASubgroup { .. }) => {}
            other => panic!("expected NotASubgroup, got {other:?}"),
        }
    }

    #[test]
    fn orthogonality_for_a_spread_of_builtins() {
        for name in ["s4", "s5", "d4", "d5", "d7", "c7", "c12", "z2^5"] {
            let (g, ct) = table(name);
            assert!(
                ct.row_orthogonality_residual(&g) < ORTHOGONALITY_TOL,
                "{name} rows"
            );
            assert!(
                ct.column_orthogonality_residual(&g) < ORTHOGONALITY_TOL,
                "{name} cols"
            );
            let dimsq: u64 = ct.dims().iter().map(|d| d * d).sum();
            assert_eq!(dimsq, g.order() as u64, "{name} dims");
            let rep = ct.check_identities(&g, 200, 11);
            assert!(rep.regular_rounding_exact, "{name} regular");
            assert!(rep.biregular_max_residual < 1e-6, "{name} biregular");
        }
    }

    #[test]
    fn s5_has_known_dimensions() {
        let (_, ct) = table("s5");
        assert_eq!(ct.dims(), &[1, 1, 4, 4, 5, 5, 6]);
        assert!(ct.integer_values().is_some());
    }

    #[test]
    fn d5_table_is_not_integral() {
        let (_, ct) = table("d5");
        assert_eq!(ct.dims(), &[1, 1, 2, 2]);
        assert!(ct.integer_values().is_none());
    }
}
