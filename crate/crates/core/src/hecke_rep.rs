//! Seminormal (orthogonal) representations of `H_n(q)` on standard tableaux.
//!
//! Basis vectors `v_T` follow the canonical tableau order. Matrices act on
//! columns: `pi(g) v_T = sum_S M[S][T] v_S`. For the generator `i`:
//!
//! * `i`, `i + 1` in one row: `f_i = 1` (`g_i = q`),
//! * `i`, `i + 1` in one column: `f_i = -1` (`g_i = -1`),
//! * otherwise `T` and `s_i T` span a block. It is written once, at the
//!   tableau `T` with `d = d_{T,i,i+1} > 0`:
//!
//! ```text
//!            v_T   v_{s_i T}
//! v_T      [ -A       B    ]      A = (1 + q^d) / ((1 + q) [d]_q)
//! v_{s_iT} [  B       A    ]      B = 2 sqrt(q [d-1]_q [d+1]_q) / ((1 + q) [d]_q)
//! ```
//!
//! with the principal square root. At `q = 1` this is Young's orthogonal
//! form, `A = 1/d` and `B = sqrt(1 - 1/d^2)`. The `g` matrices are
//! `((q + 1) f + (q - 1)) / 2`.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{cone, max_abs, CMatrix};
use crate::scalars::{is_admissible, QInteger, QPoint};
use crate::tableaux::{basis_index, enumerate_diagrams, enumerate_standard_tableaux, StandardTableau, YoungDiagram};

/// Which generators the matrices represent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Form {
    /// `g_i` with `g_i^2 = (q - 1) g_i + q`.
    G,
    /// `f_i = (2 g_i - (q - 1)) / (q + 1)`, involutions.
    F,
    /// Young's orthogonal form of the symmetric group; `q` is ignored.
    Sym,
}

impl FromStr for Form {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "g" => Ok(Form::G),
            "f" => Ok(Form::F),
            "sym" => Ok(Form::Sym),
            other => Err(Error::Parse(format!("unknown form {other:?} (expected g, f or sym)"))),
        }
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Form::G => "g",
            Form::F => "f",
            Form::Sym => "sym",
        })
    }
}

/// The 2x2 block of a mixed pair.
#[derive(Clone, Debug, PartialEq)]
pub struct BlockSpec {
    pub anchor: StandardTableau,
    pub partner: StandardTableau,
    pub d: i64,
}

/// Block entries `(A, B)` of the `f`-form for axial distance `d >= 2`.
pub fn f_block_entries(d: i64, q: Complex64) -> Result<(Complex64, Complex64)> {
    let one_plus_q = cone() + q;
    let qd = QInteger::value(d, q);
    let denom = one_plus_q * qd;
    if denom.norm() == 0.0 {
        return Err(Error::Pole {
            point: q.to_string(),
        });
    }
    let a = (cone() + q.powi(d as i32)) / denom;
    let radicand = q * QInteger::value(d - 1, q) * QInteger::value(d + 1, q);
    let b = 2.0 * radicand.sqrt() / denom;
    Ok((a, b))
}

/// Block entries of Young's orthogonal form.
pub fn sym_block_entries(d: i64) -> (Complex64, Complex64) {
    let a = 1.0 / d as f64;
    (Complex64::new(a, 0.0), Complex64::new((1.0 - a * a).sqrt(), 0.0))
}

/// An irreducible representation given by one matrix per generator.
#[derive(Clone, Debug)]
pub struct Representation {
    shape: YoungDiagram,
    basis: Vec<StandardTableau>,
    generators: Vec<CMatrix>,
    q: Complex64,
    form: Form,
}

impl Representation {
    pub fn shape(&self) -> &YoungDiagram {
        &self.shape
    }

    pub fn basis(&self) -> &[StandardTableau] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn n(&self) -> usize {
        self.shape.n()
    }

    /// Matrices of generators `1..n-1`, index `i - 1`.
    pub fn generators(&self) -> &[CMatrix] {
        &self.generators
    }

    pub fn generator(&self, i: usize) -> &CMatrix {
        &self.generators[i - 1]
    }

    pub fn q(&self) -> Complex64 {
        self.q
    }

    pub fn form(&self) -> Form {
        self.form
    }

    /// Mixed pairs for generator `i`, one per orbit.
    pub fn blocks(&self, i: usize) -> Vec<BlockSpec> {
        self.basis
            .iter()
            .filter_map(|t| {
                let d = t.axial_distance(i, i + 1);
                let partner = t.apply_transposition(i)?;
                (d > 0).then(|| BlockSpec {
                    anchor: t.clone(),
                    partner,
                    d,
                })
            })
            .collect()
    }

    /// Ordered product of generator matrices; identity for the empty word.
    pub fn evaluate_word(&self, word: &[usize]) -> Result<CMatrix> {
        let n = self.n();
        let mut acc = CMatrix::identity(self.dim(), self.dim());
        for &i in word {
            if i == 0 || i >= n {
                return Err(Error::InvalidInput(format!("generator {i} out of range for n = {n}")));
            }
            acc *= self.generator(i);
        }
        Ok(acc)
    }
}

/// Builds a representation at an admissible point.
pub fn build_representation(shape: &YoungDiagram, q: &QPoint, form: Form) -> Result<Representation> {
    let verdict = is_admissible(q.value(), shape.n());
    if form != Form::Sym && !verdict.admissible {
        return Err(Error::Inadmissible {
            reason: verdict.reason.unwrap_or_default(),
        });
    }
    build_at(shape, q.to_complex(), form)
}

/// Builds a representation at any `q` where the entries are finite.
///
/// Admissibility is not checked. This is how the `q = 1` specialization of
/// the `f`-form is reached, where the q-integer formulas stay finite.
pub fn build_at(shape: &YoungDiagram, q: Complex64, form: Form) -> Result<Representation> {
    let basis = enumerate_standard_tableaux(shape);
    let index = basis_index(&basis);
    let n = shape.n();
    let dim = basis.len();
    let q = if form == Form::Sym { cone() } else { q };
    if form != Form::Sym && (cone() + q).norm() == 0.0 {
        return Err(Error::Pole {
            point: q.to_string(),
        });
    }
    let mut generators = Vec::with_capacity(n.saturating_sub(1));
    for i in 1..n {
        let mut m = CMatrix::zeros(dim, dim);
        for (col, t) in basis.iter().enumerate() {
            if t.same_row(i, i + 1) {
                m[(col, col)] = cone();
            } else if t.same_column(i, i + 1) {
                m[(col, col)] = -cone();
            } else {
                let d = t.axial_distance(i, i + 1);
                if d < 0 {
                    continue;
                }
                let (a, b) = match form {
                    Form::Sym => sym_block_entries(d),
                    _ => f_block_entries(d, q)?,
                };
                let partner = t.apply_transposition(i).expect("mixed pair is standard");
                let p = index[&partner];
                m[(col, col)] = -a;
                m[(p, p)] = a;
                m[(col, p)] = b;
                m[(p, col)] = b;
            }
        }
        if form == Form::G {
            m = (m * (cone() + q) + CMatrix::identity(dim, dim) * (q - cone())) * Complex64::new(0.5, 0.0);
        }
        generators.push(m);
    }
    Ok(Representation {
        shape: shape.clone(),
        basis,
        generators,
        q,
        form,
    })
}

/// Largest residual per relation family.
#[derive(Clone, Debug, PartialEq)]
pub struct RelationReport {
    pub quadratic: f64,
    pub braid: f64,
    pub commutation: f64,
    pub tol: f64,
    pub pass: bool,
}

impl RelationReport {
    pub fn max_residual(&self) -> f64 {
        self.quadratic.max(self.braid).max(self.commutation)
    }
}

/// `c^2 = ((q - 1)/(q + 1))^2` at a float point.
pub fn c_squared_at(q: Complex64) -> Complex64 {
    let c = (q - cone()) / (q + cone());
    c * c
}

/// Checks the defining relations of the form the matrices were built in.
pub fn verify_relations(rep: &Representation, tol: f64) -> RelationReport {
    let n = rep.n();
    let dim = rep.dim();
    let id = CMatrix::identity(dim, dim);
    let q = rep.q();
    let c2 = c_squared_at(q);
    let mut quadratic = 0.0f64;
    let mut braid = 0.0f64;
    let mut commutation = 0.0f64;
    for i in 1..n {
        let m = rep.generator(i);
        let sq = m * m;
        let res = match rep.form() {
            Form::G => sq - m * (q - cone()) - &id * q,
            _ => sq - &id,
        };
        quadratic = quadratic.max(max_abs(&res));
    }
    for i in 1..n.saturating_sub(1) {
        let a = rep.generator(i);
        let b = rep.generator(i + 1);
        let mut res = a * b * a - b * a * b;
        if rep.form() == Form::F {
            res -= (b - a) * c2;
        }
        braid = braid.max(max_abs(&res));
    }
    for i in 1..n {
        for j in i + 2..n {
            let (a, b) = (rep.generator(i), rep.generator(j));
            commutation = commutation.max(max_abs(&(a * b - b * a)));
        }
    }
    RelationReport {
        quadratic,
        braid,
        commutation,
        tol,
        pass: quadratic < tol && braid < tol && commutation < tol,
    }
}

/// One representation per diagram of `n`, in diagram order.
#[derive(Clone, Debug)]
pub struct DirectSum {
    pub n: usize,
    pub reps: Vec<Representation>,
}

impl DirectSum {
    pub fn sum_dim_sq(&self) -> usize {
        self.reps.iter().map(|r| r.dim() * r.dim()).sum()
    }

    /// `n!`, the value `sum_dim_sq` must take.
    pub fn expected_sum_dim_sq(&self) -> usize {
        (1..=self.n).product()
    }
}

pub fn direct_sum(n: usize, q: &QPoint, form: Form) -> Result<DirectSum> {
    let reps = enumerate_diagrams(n)
        .iter()
        .map(|shape| build_representation(shape, q, form))
        .collect::<Result<Vec<_>>>()?;
    Ok(DirectSum { n, reps })
}

/// Largest `|pi_{tl}(f_i)[tT][tT] + pi_l(f_i)[T][T]|`: diagonal entries of
/// the transposed shape are the negatives of the original ones.
pub fn transpose_diagonal_deviation(rep: &Representation, transposed: &Representation) -> f64 {
    let index = basis_index(transposed.basis());
    let mut worst = 0.0f64;
    for (col, t) in rep.basis().iter().enumerate() {
        let tcol = index[&t.transpose()];
        for i in 1..rep.n() {
            let z = rep.generator(i)[(col, col)] + transposed.generator(i)[(tcol, tcol)];
            worst = worst.max(z.norm());
        }
    }
    worst
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

    #[test]
    fn one_dimensional_shapes() {
        let row = build_representation(&d("4"), &qp("2", 4), Form::F).unwrap();
        let col = build_representation(&d("1,1,1,1"), &qp("2", 4), Form::F).unwrap();
        for i in 1..4 {
            assert_eq!(row.generator(i)[(0, 0)], cone());
            assert_eq!(col.generator(i)[(0, 0)], -cone());
        }
        let g = build_representation(&d("4"), &qp("2", 4), Form::G).unwrap();
        assert!((g.generator(1)[(0, 0)] - Complex64::new(2.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn two_one_block() {
        // d = 2: A = (1 + q^2)/(1 + q)^2, B = 2 sqrt(q (1 + q + q^2))/(1 + q)^2
        let q = 1.7f64;
        let rep = build_representation(&d("2,1"), &qp("1.7", 3), Form::F).unwrap();
        let a = (1.0 + q * q) / (1.0 + q).powi(2);
        let b = 2.0 * (q * (1.0 + q + q * q)).sqrt() / (1.0 + q).powi(2);
        let m = rep.generator(2);
        // basis: [1,3/2] then [1,2/3]; the anchor is the row-filled one
        assert!((m[(1, 1)].re + a).abs() < 1e-14);
        assert!((m[(0, 0)].re - a).abs() < 1e-14);
        assert!((m[(0, 1)].re - b).abs() < 1e-14);
        assert!((m[(1, 0)].re - b).abs() < 1e-14);
        assert_eq!(rep.blocks(2).len(), 1);
        assert_eq!(rep.blocks(2)[0].d, 2);
    }

    #[test]
    fn block_entries_lie_on_the_unit_circle() {
        for q in [2.0, 1.5, 5.0 / 7.0, 0.3, 1.7] {
            for dd in 2..=6 {
                let (a, b) = f_block_entries(dd, Complex64::new(q, 0.0)).unwrap();
                assert!((a * a + b * b - cone()).norm() < 1e-14);
                assert!(b.re > 0.0 && b.im == 0.0);
            }
        }
    }

    #[test]
    fn relations_for_all_forms() {
        for lam in enumerate_diagrams(5) {
            for form in [Form::G, Form::F, Form::Sym] {
                let rep = build_representation(&lam, &qp("3/2", 5), form).unwrap();
                let r = verify_relations(&rep, 1e-10);
                assert!(r.pass, "{lam} {form}: {r:?}");
            }
        }
    }

    #[test]
    fn q_one_matches_orthogonal_form() {
        for n in 2..=6 {
            for lam in enumerate_diagrams(n) {
                let f = build_at(&lam, cone(), Form::F).unwrap();
                let s = build_at(&lam, cone(), Form::Sym).unwrap();
                for i in 1..n {
                    assert!(max_abs(&(f.generator(i) - s.generator(i))) < 1e-12);
                }
            }
        }
    }

    #[test]
    fn inadmissible_points_are_rejected() {
        let q = QPoint::parse("2", 3).unwrap();
        let minus = QPoint::new(crate::scalars::QValue::from(-0.5), 3).unwrap();
        assert!(build_representation(&d("2,1"), &q, Form::F).is_ok());
        assert!(build_representation(&d("2,1"), &minus, Form::F).is_ok());
        assert!(build_at(&d("2,1"), -cone(), Form::F).is_err());
    }

    #[test]
    fn transposed_shapes_negate_the_diagonal() {
        let q = qp("2", 5);
        for lam in enumerate_diagrams(5) {
            let a = build_representation(&lam, &q, Form::F).unwrap();
            let b = build_representation(&lam.transpose(), &q, Form::F).unwrap();
            assert!(transpose_diagonal_deviation(&a, &b) < 1e-14);
        }
    }

    #[test]
    fn words_and_dimensions() {
        let rep = build_representation(&d("3,1"), &qp("2", 4), Form::F).unwrap();
        let id = rep.evaluate_word(&[]).unwrap();
        assert_eq!(id, CMatrix::identity(3, 3));
        assert!(max_abs(&(rep.evaluate_word(&[2, 2]).unwrap() - &id)) < 1e-12);
        assert!(rep.evaluate_word(&[4]).is_err());
        let sum = direct_sum(4, &qp("2", 4), Form::F).unwrap();
        assert_eq!(sum.sum_dim_sq(), 24);
        let dims: Vec<_> = direct_sum(3, &qp("2", 3), Form::F).unwrap().reps.iter().map(Representation::dim).collect();
        assert_eq!(dims, vec![1, 2, 1]);
    }
}
