//! Restriction to the even subalgebra and its decomposition.
//!
//! `y_i` acts on `V_lambda` by `pi(f_1) pi(f_{i+1})`. Irreducibility and
//! equivalence are decided numerically: the commutant of an irreducible is
//! one-dimensional, and two irreducibles are equivalent exactly when the
//! intertwining equations have a nonzero solution.

use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::hecke_rep::{build_representation, c_squared_at, Form, Representation};
use crate::linalg::{self, cone, max_abs, nullspace, CMatrix, CVector};
use crate::scalars::{is_admissible, QPoint};
use crate::tableaux::{basis_index, enumerate_diagrams, stab_split, YoungDiagram};
use crate::word_algebra::{enumerate_even_uwords, enumerate_monomials, NormalFormCombination};

/// `pi_lambda` restricted to the even subalgebra.
#[derive(Clone, Debug)]
pub struct RestrictedRep {
    source: Representation,
    y: Vec<CMatrix>,
}

impl RestrictedRep {
    pub fn source(&self) -> &Representation {
        &self.source
    }

    pub fn shape(&self) -> &YoungDiagram {
        self.source.shape()
    }

    pub fn dim(&self) -> usize {
        self.source.dim()
    }

    /// Matrices of `y_1, ..., y_{n-2}`, index `i - 1`.
    pub fn y_matrices(&self) -> &[CMatrix] {
        &self.y
    }

    pub fn y(&self, i: usize) -> &CMatrix {
        &self.y[i - 1]
    }

    pub fn evaluate_y_word(&self, word: &[usize]) -> CMatrix {
        evaluate_y_word(&self.y, self.dim(), word)
    }

    pub fn verify_y_relations(&self, tol: f64) -> YRelationReport {
        verify_y_relations(&self.y, self.dim(), self.source.q(), tol)
    }
}

fn evaluate_y_word(y: &[CMatrix], dim: usize, word: &[usize]) -> CMatrix {
    let mut acc = CMatrix::identity(dim, dim);
    for &i in word {
        acc *= &y[i - 1];
    }
    acc
}

pub fn restrict(rep: &Representation) -> Result<RestrictedRep> {
    if rep.form() != Form::F {
        return Err(Error::InvalidInput("restriction needs the f-form".into()));
    }
    let n = rep.n();
    let y = (1..n.saturating_sub(1))
        .map(|i| rep.generator(1) * rep.generator(i + 1))
        .collect();
    Ok(RestrictedRep {
        source: rep.clone(),
        y,
    })
}

/// Largest residual of each family of defining relations of the `y_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct YRelationReport {
    pub cubic: f64,
    pub involution: f64,
    pub braid_cubic: f64,
    pub commutation: f64,
    pub pass: bool,
}

fn verify_y_relations(y: &[CMatrix], dim: usize, q: Complex64, tol: f64) -> YRelationReport {
    let id = CMatrix::identity(dim, dim);
    let c2 = c_squared_at(q);
    // z^3 + c^2 (z^2 - z) - 1
    let cubic_res = |z: &CMatrix| {
        let z2 = z * z;
        let z3 = &z2 * z;
        max_abs(&(z3 + (z2 - z) * c2 - &id))
    };
    let m = y.len();
    let mut r = YRelationReport {
        cubic: 0.0,
        involution: 0.0,
        braid_cubic: 0.0,
        commutation: 0.0,
        pass: false,
    };
    if m >= 1 {
        r.cubic = cubic_res(&y[0]);
    }
    for i in 2..=m {
        r.involution = r.involution.max(max_abs(&(&y[i - 1] * &y[i - 1] - &id)));
        r.braid_cubic = r.braid_cubic.max(cubic_res(&(&y[i - 2] * &y[i - 1])));
    }
    for i in 1..=m {
        for j in i + 2..=m {
            let p = &y[i - 1] * &y[j - 1];
            r.commutation = r.commutation.max(max_abs(&(&p * &p - &id)));
        }
    }
    r.pass = r.cubic < tol && r.involution < tol && r.braid_cubic < tol && r.commutation < tol;
    r
}

/// Block-diagonal sum of two families of matrices.
fn block_sum(a: &[CMatrix], b: &[CMatrix]) -> Vec<CMatrix> {
    a.iter()
        .zip(b)
        .map(|(x, y)| {
            let (p, r) = (x.nrows(), y.nrows());
            let mut m = CMatrix::zeros(p + r, p + r);
            m.view_mut((0, 0), (p, p)).copy_from(x);
            m.view_mut((p, p), (r, r)).copy_from(y);
            m
        })
        .collect()
}

/// Basis of `{X (d2 x d1) : X a_i = b_i X for all i}`.
fn intertwiner_space(a: &[CMatrix], d1: usize, b: &[CMatrix], d2: usize) -> Result<Vec<CMatrix>> {
    if a.is_empty() {
        // no generators: every matrix intertwines
        return Ok((0..d1 * d2)
            .map(|k| {
                let mut v = CVector::zeros(d1 * d2);
                v[k] = cone();
                linalg::unvec(&v, d2, d1)
            })
            .collect());
    }
    let id1 = CMatrix::identity(d1, d1);
    let id2 = CMatrix::identity(d2, d2);
    let block = d1 * d2;
    let mut system = CMatrix::zeros(a.len() * block, block);
    for (k, (ai, bi)) in a.iter().zip(b).enumerate() {
        // vec(X a) = (a^T kron I) vec X, vec(b X) = (I kron b) vec X
        let rows = linalg::kron(&ai.transpose(), &id2) - linalg::kron(&id1, bi);
        system.view_mut((k * block, 0), (block, block)).copy_from(&rows);
    }
    Ok(nullspace(&system)?
        .iter()
        .map(|v| linalg::unvec(v, d2, d1))
        .collect())
}

/// Dimension of the commutant of a family of matrices.
pub fn commutant_dimension_of(y: &[CMatrix], dim: usize) -> Result<usize> {
    Ok(intertwiner_space(y, dim, y, dim)?.len())
}

pub fn commutant_dimension(r: &RestrictedRep) -> Result<usize> {
    commutant_dimension_of(&r.y, r.dim())
}

/// Commutant dimension of `r1 + r2`.
pub fn commutant_dimension_of_sum(r1: &RestrictedRep, r2: &RestrictedRep) -> Result<usize> {
    commutant_dimension_of(&block_sum(&r1.y, &r2.y), r1.dim() + r2.dim())
}

/// A nonzero `X` with `X y_i = y'_i X`.
#[derive(Clone, Debug)]
pub struct Intertwiner {
    pub matrix: CMatrix,
    pub residual: f64,
}

fn intertwiner_between(a: &[CMatrix], d1: usize, b: &[CMatrix], d2: usize) -> Result<Option<Intertwiner>> {
    if d1 != d2 || a.len() != b.len() {
        return Ok(None);
    }
    let space = intertwiner_space(a, d1, b, d2)?;
    Ok(space.into_iter().next().map(|x| {
        let residual = a
            .iter()
            .zip(b)
            .map(|(ai, bi)| max_abs(&(&x * ai - bi * &x)))
            .fold(0.0, f64::max);
        Intertwiner { matrix: x, residual }
    }))
}

pub fn find_intertwiner(r1: &RestrictedRep, r2: &RestrictedRep) -> Result<Option<Intertwiner>> {
    intertwiner_between(&r1.y, r1.dim(), &r2.y, r2.dim())
}

/// One irreducible piece of a split restriction.
#[derive(Clone, Debug)]
pub struct Piece {
    /// Orthonormal columns spanning the piece inside `V_lambda`.
    pub basis: CMatrix,
    /// Matrices of `y_i` in that basis.
    pub y: Vec<CMatrix>,
    /// Spectral projection onto the piece.
    pub projection: CMatrix,
}

impl Piece {
    pub fn dim(&self) -> usize {
        self.basis.ncols()
    }
}

#[derive(Clone, Debug)]
pub struct SelfConjugateSplit {
    pub plus: Piece,
    pub minus: Piece,
    /// Largest `|P y_i - y_i P|` over both projections.
    pub invariance_residual: f64,
    /// Largest `|P^2 - P|`.
    pub idempotent_residual: f64,
    /// How far the span of `v_T +- v_{tT}` is from being invariant.
    pub literal_basis_residual: f64,
}

/// Orthonormal basis of the column space of `m`.
fn column_space(m: &CMatrix) -> Result<CMatrix> {
    let svd = m.clone().svd(true, false);
    let u = svd.u.expect("left singular vectors requested");
    let sv: Vec<f64> = svd.singular_values.iter().copied().collect();
    let decision = linalg::decide_rank(&sv)?;
    let mut order: Vec<usize> = (0..sv.len()).collect();
    order.sort_by(|&x, &y| sv[y].total_cmp(&sv[x]));
    let cols: Vec<CVector> = order[..decision.rank].iter().map(|&c| u.column(c).into_owned()).collect();
    Ok(CMatrix::from_columns(&cols))
}

/// Worst leak `|(I - P_W) y P_W|` of a subspace with orthonormal basis `w`.
fn leak(w: &CMatrix, y: &[CMatrix]) -> f64 {
    let proj = w * w.adjoint();
    let comp = CMatrix::identity(w.nrows(), w.nrows()) - &proj;
    y.iter().map(|m| max_abs(&(&comp * m * &proj))).fold(0.0, f64::max)
}

/// Splits the restriction of a self-conjugate shape into its two
/// irreducible halves through the spectral idempotents of its commutant.
pub fn split_self_conjugate(r: &RestrictedRep) -> Result<SelfConjugateSplit> {
    let shape = r.shape();
    if !shape.is_self_conjugate() {
        return Err(Error::InvalidInput(format!("{shape} is not self-conjugate")));
    }
    let d = r.dim();
    let comm = intertwiner_space(&r.y, d, &r.y, d)?;
    if comm.len() != 2 {
        return Err(Error::Indeterminate(format!(
            "commutant of {shape} has dimension {}, expected 2",
            comm.len()
        )));
    }
    let id = CMatrix::identity(d, d);
    let df = Complex64::new(d as f64, 0.0);
    // the traceless part of a commutant element that is furthest from scalar
    let j = comm
        .iter()
        .map(|x| x - &id * (x.trace() / df))
        .max_by(|a, b| a.norm().total_cmp(&b.norm()))
        .expect("two elements");
    // J^2 = alpha J + beta I, fitted by least squares
    let j2 = &j * &j;
    let (jj, ji) = (j.dotc(&j), j.dotc(&id));
    let (ij, ii) = (id.dotc(&j), id.dotc(&id));
    let (rj, ri) = (j.dotc(&j2), id.dotc(&j2));
    let det = jj * ii - ji * ij;
    if det.norm() == 0.0 {
        return Err(Error::Indeterminate("degenerate commutant element".into()));
    }
    let alpha = (rj * ii - ji * ri) / det;
    let beta = (jj * ri - ij * rj) / det;
    let disc = (alpha * alpha + beta * 4.0).sqrt();
    let (mu1, mu2) = ((alpha + disc) / 2.0, (alpha - disc) / 2.0);
    if (mu1 - mu2).norm() < 1e-8 * (1.0 + mu1.norm()) {
        return Err(Error::Indeterminate("commutant element has a repeated eigenvalue".into()));
    }
    let jhat = (&j * Complex64::new(2.0, 0.0) - &id * (mu1 + mu2)) / (mu1 - mu2);
    let p1 = (&id + &jhat) * Complex64::new(0.5, 0.0);
    let p2 = (&id - &jhat) * Complex64::new(0.5, 0.0);

    let (plus_t, _) = stab_split(shape);
    let index = basis_index(r.source().basis());
    let literal = |sign: f64| -> CMatrix {
        let cols: Vec<CVector> = plus_t
            .iter()
            .map(|t| {
                let mut v = CVector::zeros(d);
                v[index[t]] += cone();
                v[index[&t.transpose()]] += Complex64::new(sign, 0.0);
                v.normalize()
            })
            .collect();
        CMatrix::from_columns(&cols)
    };
    let (lit_plus, lit_minus) = (literal(1.0), literal(-1.0));
    let literal_basis_residual = leak(&lit_plus, &r.y).max(leak(&lit_minus, &r.y));

    let make_piece = |p: &CMatrix| -> Result<Piece> {
        let basis = column_space(p)?;
        let y = r.y.iter().map(|m| basis.adjoint() * m * &basis).collect();
        Ok(Piece {
            basis,
            y,
            projection: p.clone(),
        })
    };
    let (a, b) = (make_piece(&p1)?, make_piece(&p2)?);
    let overlap = |p: &Piece| (p.basis.adjoint() * &lit_plus).norm();
    let (plus, minus) = if overlap(&a) >= overlap(&b) { (a, b) } else { (b, a) };
    let mut invariance_residual = 0.0f64;
    let mut idempotent_residual = 0.0f64;
    for p in [&plus.projection, &minus.projection] {
        idempotent_residual = idempotent_residual.max(max_abs(&(p * p - p)));
        for m in &r.y {
            invariance_residual = invariance_residual.max(max_abs(&(p * m - m * p)));
        }
    }
    Ok(SelfConjugateSplit {
        plus,
        minus,
        invariance_residual,
        idempotent_residual,
        literal_basis_residual,
    })
}

/// Which part of a restriction a label stands for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Tag {
    Whole,
    Plus,
    Minus,
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Tag::Whole => "whole",
            Tag::Plus => "plus",
            Tag::Minus => "minus",
        })
    }
}

/// An irreducible representation of the even subalgebra.
#[derive(Clone, Debug)]
pub struct Label {
    pub shape: YoungDiagram,
    pub tag: Tag,
    pub dim: usize,
    pub commutant_dim: usize,
    /// Matrices of `y_i` on this irreducible.
    pub y: Vec<CMatrix>,
}

impl Label {
    /// `"3,1"`, or `"2,2+"` / `"2,2-"` for the halves of a self-conjugate shape.
    pub fn name(&self) -> String {
        match self.tag {
            Tag::Whole => self.shape.to_string(),
            Tag::Plus => format!("{}+", self.shape),
            Tag::Minus => format!("{}-", self.shape),
        }
    }
}

/// Commutant dimension of a full restriction.
#[derive(Clone, Debug)]
pub struct RestrictionSummary {
    pub shape: YoungDiagram,
    pub dim: usize,
    pub commutant_dim: usize,
}

#[derive(Clone, Debug)]
pub struct DecompositionReport {
    pub n: usize,
    pub q: String,
    pub labels: Vec<Label>,
    pub restrictions: Vec<RestrictionSummary>,
    /// Shapes whose restrictions are equivalent, `(lambda, t lambda)`.
    pub equivalences: Vec<(String, String)>,
    /// Distinct labels that nonetheless admit an intertwiner; must be empty.
    pub unexpected_equivalences: Vec<(String, String)>,
    pub sum_dim_sq: usize,
    pub expected_sum_dim_sq: usize,
    pub max_y_residual: f64,
    pub pass: bool,
}

fn check_q(q: &QPoint, n: usize) -> Result<()> {
    let verdict = is_admissible(q.value(), n);
    if verdict.admissible {
        Ok(())
    } else {
        Err(Error::Inadmissible {
            reason: verdict.reason.unwrap_or_default(),
        })
    }
}

/// Restrictions of all `V_lambda`, in diagram order.
pub fn restricted_direct_sum(n: usize, q: &QPoint) -> Result<Vec<RestrictedRep>> {
    check_q(q, n)?;
    enumerate_diagrams(n)
        .iter()
        .map(|shape| restrict(&build_representation(shape, q, Form::F)?))
        .collect()
}

/// Irreducibles of the even subalgebra: one per pair `{lambda, t lambda}`
/// and two per self-conjugate `lambda`.
pub fn classify(n: usize, q: &QPoint) -> Result<DecompositionReport> {
    if n < 2 {
        return Err(Error::InvalidInput(format!("n = {n} must be at least 2")));
    }
    let reps = restricted_direct_sum(n, q)?;
    let shapes = enumerate_diagrams(n);
    let find = |s: &YoungDiagram| shapes.iter().position(|x| x == s).expect("transpose is a diagram");
    let mut labels = Vec::new();
    let mut restrictions = Vec::new();
    let mut equivalences = Vec::new();
    let mut max_y_residual = 0.0f64;
    let mut structural_ok = true;
    for (idx, r) in reps.iter().enumerate() {
        let shape = r.shape().clone();
        let rel = r.verify_y_relations(1e-10);
        max_y_residual = max_y_residual
            .max(rel.cubic)
            .max(rel.involution)
            .max(rel.braid_cubic)
            .max(rel.commutation);
        let cdim = commutant_dimension(r)?;
        restrictions.push(RestrictionSummary {
            shape: shape.clone(),
            dim: r.dim(),
            commutant_dim: cdim,
        });
        if shape.is_self_conjugate() {
            structural_ok &= cdim == 2;
            let split = split_self_conjugate(r)?;
            structural_ok &= split.plus.dim() == split.minus.dim();
            for (tag, piece) in [(Tag::Plus, split.plus), (Tag::Minus, split.minus)] {
                labels.push(Label {
                    shape: shape.clone(),
                    tag,
                    dim: piece.dim(),
                    commutant_dim: commutant_dimension_of(&piece.y, piece.dim())?,
                    y: piece.y,
                });
            }
        } else {
            structural_ok &= cdim == 1;
            let t_idx = find(&shape.transpose());
            if t_idx < idx {
                continue;
            }
            let partner = &reps[t_idx];
            if find_intertwiner(r, partner)?.is_some() {
                equivalences.push((shape.to_string(), partner.shape().to_string()));
            } else {
                structural_ok = false;
            }
            labels.push(Label {
                shape: shape.clone(),
                tag: Tag::Whole,
                dim: r.dim(),
                commutant_dim: cdim,
                y: r.y.clone(),
            });
        }
    }
    let mut unexpected_equivalences = Vec::new();
    for a in 0..labels.len() {
        for b in a + 1..labels.len() {
            let (la, lb) = (&labels[a], &labels[b]);
            if intertwiner_between(&la.y, la.dim, &lb.y, lb.dim)?.is_some() {
                unexpected_equivalences.push((la.name(), lb.name()));
            }
        }
    }
    let sum_dim_sq = labels.iter().map(|l| l.dim * l.dim).sum();
    let expected_sum_dim_sq = (1..=n).product::<usize>() / 2;
    let pass = structural_ok
        && unexpected_equivalences.is_empty()
        && labels.iter().all(|l| l.commutant_dim == 1)
        && sum_dim_sq == expected_sum_dim_sq
        && max_y_residual < 1e-10;
    Ok(DecompositionReport {
        n,
        q: q.to_string(),
        labels,
        restrictions,
        equivalences,
        unexpected_equivalences,
        sum_dim_sq,
        expected_sum_dim_sq,
        max_y_residual,
        pass,
    })
}

/// Multiplicity of a label inside each restricted `V_mu`; by reciprocity
/// also the multiplicity of `V_mu` in the induced module.
#[derive(Clone, Debug)]
pub struct InductionReport {
    pub label: String,
    pub label_dim: usize,
    pub multiplicities: Vec<(YoungDiagram, usize)>,
    /// `sum_mu mult * dim V_mu`.
    pub induced_dim: usize,
    pub pass: bool,
}

pub fn induction_multiplicities(label: &Label, n: usize, q: &QPoint) -> Result<InductionReport> {
    let reps = restricted_direct_sum(n, q)?;
    let mut multiplicities = Vec::new();
    let mut induced_dim = 0;
    for r in &reps {
        let mult = intertwiner_space(&label.y, label.dim, &r.y, r.dim())?.len();
        induced_dim += mult * r.dim();
        multiplicities.push((r.shape().clone(), mult));
    }
    Ok(InductionReport {
        label: label.name(),
        label_dim: label.dim,
        pass: induced_dim == 2 * label.dim,
        multiplicities,
        induced_dim,
    })
}

/// One matrix coefficient compared with its transposed counterpart.
#[derive(Clone, Debug)]
pub struct SymmetryEntry {
    pub generator: usize,
    pub row: String,
    pub col: String,
    /// `g^{t lambda}_{tT, tT'} - g^lambda_{T, T'}`.
    pub signed: Complex64,
    /// `|g^{t lambda}_{tT, tT'}| - |g^lambda_{T, T'}|`.
    pub absolute: f64,
}

#[derive(Clone, Debug)]
pub struct SymmetryReport {
    pub shape: YoungDiagram,
    pub entries: Vec<SymmetryEntry>,
    pub max_signed: f64,
    pub max_absolute: f64,
    /// Verdict on the absolute deviations only.
    pub pass: bool,
}

/// Compares the `y_i` coefficients of `lambda` and `t lambda` entry by entry.
pub fn transpose_symmetry_report(shape: &YoungDiagram, q: &QPoint, tol: f64) -> Result<SymmetryReport> {
    check_q(q, shape.n())?;
    let a = restrict(&build_representation(shape, q, Form::F)?)?;
    let b = restrict(&build_representation(&shape.transpose(), q, Form::F)?)?;
    let index = basis_index(b.source().basis());
    let basis = a.source().basis();
    let mut entries = Vec::new();
    for (gi, (ya, yb)) in a.y.iter().zip(&b.y).enumerate() {
        for (r, tr) in basis.iter().enumerate() {
            for (c, tc) in basis.iter().enumerate() {
                let g = ya[(r, c)];
                let h = yb[(index[&tr.transpose()], index[&tc.transpose()])];
                if g.norm() == 0.0 && h.norm() == 0.0 {
                    continue;
                }
                entries.push(SymmetryEntry {
                    generator: gi + 1,
                    row: tr.to_string(),
                    col: tc.to_string(),
                    signed: h - g,
                    absolute: h.norm() - g.norm(),
                });
            }
        }
    }
    let max_signed = entries.iter().map(|e| e.signed.norm()).fold(0.0, f64::max);
    let max_absolute = entries.iter().map(|e| e.absolute.abs()).fold(0.0, f64::max);
    Ok(SymmetryReport {
        shape: shape.clone(),
        entries,
        max_signed,
        max_absolute,
        pass: max_absolute < tol,
    })
}

/// Spectrum of `y_1` on the two-dimensional restriction for `n = 3`.
#[derive(Clone, Debug)]
pub struct SpectrumReport {
    pub q: Complex64,
    pub c_squared: Complex64,
    pub eigenvalues: [Complex64; 2],
    /// Roots of `z^2 + (1 + c^2) z + 1`.
    pub roots: [Complex64; 2],
    pub max_root_deviation: f64,
    pub max_modulus_deviation: f64,
    /// `(1 + q^2 -+ 2 sqrt(q (1 + q + q^2))) / (1 + q)^2`, listed for comparison.
    pub printed_values: [Complex64; 2],
}

/// Eigenvalues of a 2x2 matrix from its trace and determinant.
pub fn eigenvalues_2x2(m: &CMatrix) -> [Complex64; 2] {
    let tr = m[(0, 0)] + m[(1, 1)];
    let det = m[(0, 0)] * m[(1, 1)] - m[(0, 1)] * m[(1, 0)];
    let disc = (tr * tr - det * 4.0).sqrt();
    [(tr + disc) / 2.0, (tr - disc) / 2.0]
}

fn matched_deviation(a: [Complex64; 2], b: [Complex64; 2]) -> f64 {
    let straight = (a[0] - b[0]).norm().max((a[1] - b[1]).norm());
    let crossed = (a[0] - b[1]).norm().max((a[1] - b[0]).norm());
    straight.min(crossed)
}

pub fn n3_spectrum(q: &QPoint) -> Result<SpectrumReport> {
    let shape: YoungDiagram = "2,1".parse()?;
    check_q(q, 3)?;
    let r = restrict(&build_representation(&shape, q, Form::F)?)?;
    let qz = q.to_complex();
    let c2 = c_squared_at(qz);
    let eigenvalues = eigenvalues_2x2(r.y(1));
    let b = cone() + c2;
    let disc = (b * b - 4.0).sqrt();
    let roots = [(-b + disc) / 2.0, (-b - disc) / 2.0];
    let s = (qz * (cone() + qz + qz * qz)).sqrt() * 2.0;
    let den = (cone() + qz) * (cone() + qz);
    let printed_values = [(cone() + qz * qz - s) / den, (cone() + qz * qz + s) / den];
    Ok(SpectrumReport {
        q: qz,
        c_squared: c2,
        eigenvalues,
        roots,
        max_root_deviation: matched_deviation(eigenvalues, roots),
        max_modulus_deviation: eigenvalues.iter().map(|z| (z.norm() - 1.0).abs()).fold(0.0, f64::max),
        printed_values,
    })
}

/// Rank of the even `f`-words inside the sum of all irreducibles of `H_n(q)`.
#[derive(Clone, Debug, PartialEq)]
pub struct DimensionCertificate {
    pub n: usize,
    pub even_words: usize,
    pub rank: usize,
    pub expected: usize,
    pub pass: bool,
}

/// Images of all even descent words, each flattened to one row of length `n!`.
fn even_word_images(n: usize, q: &QPoint) -> Result<Vec<Vec<Complex64>>> {
    let reps = enumerate_diagrams(n)
        .iter()
        .map(|s| build_representation(s, q, Form::F))
        .collect::<Result<Vec<_>>>()?;
    let words = enumerate_even_uwords(n);
    let mut rows = vec![Vec::new(); words.len()];
    for rep in &reps {
        let d = rep.dim();
        // depth-first over descent vectors, sharing prefix products
        let mut all = Vec::with_capacity(words.len());
        let mut stack = vec![(2usize, CMatrix::identity(d, d), 0usize)];
        while let Some((i, prefix, parity)) = stack.pop() {
            if i > n {
                if parity % 2 == 0 {
                    all.push(prefix);
                }
                continue;
            }
            let mut cur = prefix;
            let mut level = Vec::with_capacity(i);
            for dd in 0..i {
                if dd > 0 {
                    cur = &cur * rep.generator(i - dd);
                }
                level.push((i + 1, cur.clone(), parity + dd));
            }
            // push in reverse so that d = 0 is expanded first
            stack.extend(level.into_iter().rev());
        }
        for (row, m) in rows.iter_mut().zip(all) {
            row.extend(m.iter().copied());
        }
    }
    Ok(rows)
}

/// Counts even words and certifies that their images have rank `n!/2`.
pub fn dimension_certificate(n: usize, q: &QPoint) -> Result<DimensionCertificate> {
    if n < 2 {
        return Err(Error::InvalidInput(format!("n = {n} must be at least 2")));
    }
    check_q(q, n)?;
    let expected = (1..=n).product::<usize>() / 2;
    let even_words = enumerate_even_uwords(n).len();
    let rows = even_word_images(n, q)?;
    let cols = rows.first().map_or(0, Vec::len);
    let real = rows.iter().flatten().all(|z| z.im == 0.0);
    let decision = if real {
        linalg::real_rank(rows.len(), cols, |i, j| rows[i][j].re)?
    } else {
        linalg::rank(&CMatrix::from_fn(rows.len(), cols, |i, j| rows[i][j]))?
    };
    Ok(DimensionCertificate {
        n,
        even_words,
        rank: decision.rank,
        expected,
        pass: even_words == expected && decision.rank == expected,
    })
}

/// Images of `y`-words in a direct sum of restricted representations.
#[derive(Clone, Debug)]
pub struct YImages {
    blocks: Vec<(Vec<CMatrix>, usize)>,
    q: Complex64,
}

impl YImages {
    /// Sum over all `V_lambda`.
    pub fn all_shapes(n: usize, q: &QPoint) -> Result<Self> {
        let reps = restricted_direct_sum(n, q)?;
        Ok(YImages {
            blocks: reps.iter().map(|r| (r.y.clone(), r.dim())).collect(),
            q: q.to_complex(),
        })
    }

    /// Sum over the irreducibles of a classification.
    pub fn labels(report: &DecompositionReport, q: &QPoint) -> Self {
        YImages {
            blocks: report.labels.iter().map(|l| (l.y.clone(), l.dim)).collect(),
            q: q.to_complex(),
        }
    }

    pub fn word(&self, word: &[usize]) -> Vec<CMatrix> {
        self.blocks
            .iter()
            .map(|(y, d)| evaluate_y_word(y, *d, word))
            .collect()
    }

    pub fn combination(&self, comb: &NormalFormCombination) -> Result<Vec<CMatrix>> {
        let mut acc: Vec<CMatrix> = self.blocks.iter().map(|(_, d)| CMatrix::zeros(*d, *d)).collect();
        for (m, c) in comb.terms() {
            let c = c.eval_complex(self.q)?;
            for (a, img) in acc.iter_mut().zip(self.word(&m.word())) {
                *a += img * c;
            }
        }
        Ok(acc)
    }

    /// Largest entrywise difference between a word and a combination.
    pub fn deviation(&self, word: &[usize], comb: &NormalFormCombination) -> Result<f64> {
        Ok(self
            .word(word)
            .iter()
            .zip(self.combination(comb)?)
            .map(|(a, b)| max_abs(&(a - b)))
            .fold(0.0, f64::max))
    }

    /// Rank of the images of all normal-form monomials.
    pub fn monomial_rank(&self, n: usize) -> Result<usize> {
        let rows: Vec<Vec<Complex64>> = enumerate_monomials(n)
            .iter()
            .map(|m| self.word(&m.word()).iter().flat_map(|b| b.iter().copied()).collect())
            .collect();
        let cols = rows.first().map_or(0, Vec::len);
        let m = CMatrix::from_fn(rows.len(), cols, |i, j| rows[i][j]);
        Ok(linalg::rank(&m)?.rank)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> YoungDiagram {
        s.parse().unwrap()
    }

    fn qp(s: &str, n: usize) -> QPoint {
        QPoint::parse(s, n).unwrap()
    }

    fn restricted(s: &str, q: &str) -> RestrictedRep {
        let shape = d(s);
        restrict(&build_representation(&shape, &qp(q, shape.n()), Form::F).unwrap()).unwrap()
    }

    #[test]
    fn one_dimensional_restrictions() {
        for s in ["4", "1,1,1,1"] {
            let r = restricted(s, "2");
            for m in r.y_matrices() {
                assert!((m[(0, 0)] - cone()).norm() < 1e-15);
            }
            assert_eq!(commutant_dimension(&r).unwrap(), 1);
        }
    }

    #[test]
    fn commutant_dimensions() {
        assert_eq!(commutant_dimension(&restricted("3,1", "2")).unwrap(), 1);
        assert_eq!(commutant_dimension(&restricted("2,2", "2")).unwrap(), 2);
        let a = restricted("3,1", "2");
        let b = restricted("2,1,1", "2");
        assert_eq!(commutant_dimension_of_sum(&a, &b).unwrap(), 4);
        let c = restricted("4", "2");
        assert_eq!(commutant_dimension_of_sum(&a, &c).unwrap(), 2);
    }

    #[test]
    fn intertwiners() {
        let x = find_intertwiner(&restricted("3,1", "2"), &restricted("2,1,1", "2")).unwrap();
        assert!(x.unwrap().residual < 1e-10);
        assert!(find_intertwiner(&restricted("4", "2"), &restricted("2,2", "2")).unwrap().is_none());
        assert!(find_intertwiner(&restricted("3", "2"), &restricted("1,1,1", "2")).unwrap().is_some());
    }

    #[test]
    fn splits() {
        for (s, half) in [("2,1", 1), ("2,2", 1), ("3,1,1", 3)] {
            let split = split_self_conjugate(&restricted(s, "2")).unwrap();
            assert_eq!(split.plus.dim(), half);
            assert_eq!(split.minus.dim(), half);
            assert!(split.invariance_residual < 1e-10);
            assert!(split.idempotent_residual < 1e-10);
        }
        assert!(split_self_conjugate(&restricted("3,1", "2")).is_err());
    }

    #[test]
    fn classification_small() {
        let r3 = classify(3, &qp("2", 3)).unwrap();
        assert_eq!(r3.labels.len(), 3);
        assert_eq!(r3.sum_dim_sq, 3);
        assert!(r3.pass);
        let names: Vec<_> = r3.labels.iter().map(Label::name).collect();
        assert_eq!(names, vec!["3", "2,1+", "2,1-"]);
        let r4 = classify(4, &qp("2", 4)).unwrap();
        let dims: Vec<_> = r4.labels.iter().map(|l| l.dim).collect();
        assert_eq!(dims, vec![1, 3, 1, 1]);
        assert_eq!(r4.sum_dim_sq, 12);
        assert!(r4.pass);
    }

    #[test]
    fn induction_patterns() {
        let q = qp("2", 4);
        let report = classify(4, &q).unwrap();
        for label in &report.labels {
            let ind = induction_multiplicities(label, 4, &q).unwrap();
            assert!(ind.pass, "{ind:?}");
            for (mu, mult) in &ind.multiplicities {
                let expected = match label.tag {
                    Tag::Whole => usize::from(*mu == label.shape || *mu == label.shape.transpose()),
                    _ => usize::from(*mu == label.shape),
                };
                assert_eq!(*mult, expected, "{} in {mu}", label.name());
            }
        }
    }

    #[test]
    fn spectrum_of_two_one() {
        for q in ["2", "3/2", "5/7", "0.3", "1.7"] {
            let rep = n3_spectrum(&qp(q, 3)).unwrap();
            assert!(rep.max_root_deviation < 1e-10);
            assert!(rep.max_modulus_deviation < 1e-10);
            // independent check with a general eigenvalue solver
            let y = restricted("2,1", q).y(1).map(|z| z.re);
            let ev = y.complex_eigenvalues();
            assert!(matched_deviation([ev[0], ev[1]], rep.eigenvalues) < 1e-12);
        }
    }

    #[test]
    fn symmetry_of_coefficients() {
        let rep = transpose_symmetry_report(&d("3,1"), &qp("2", 4), 1e-10).unwrap();
        assert!(rep.pass);
        let row = transpose_symmetry_report(&d("4"), &qp("2", 4), 1e-10).unwrap();
        assert_eq!(row.max_signed, 0.0);
        let small = transpose_symmetry_report(&d("2,1"), &qp("2", 3), 1e-10).unwrap();
        for e in &small.entries {
            if e.row == e.col {
                assert!(e.signed.norm() < 1e-14);
            }
        }
    }

    #[test]
    fn dimension_small() {
        for n in 2..=5 {
            let cert = dimension_certificate(n, &qp("2", n)).unwrap();
            assert!(cert.pass, "{cert:?}");
        }
        assert_eq!(dimension_certificate(4, &qp("2", 4)).unwrap().rank, 12);
    }
}
