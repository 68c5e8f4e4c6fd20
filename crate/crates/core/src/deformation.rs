//! Deformations of a Hom-Leibniz algebra over a local base: the extended
//! bracket on `A ⊗ L`, Hom-Jacobi defect certificates, the deformation
//! differential, the universal infinitesimal deformation over `C_1`, push-outs
//! along base morphisms, and classification of infinitesimal deformations.
//!
//! A deformation is stored extensionally by its `ψ`-family:
//!
//! ```text
//! [1⊗l₁, 1⊗l₂]_λ = 1⊗[l₁, l₂] + Σ_i m_i ⊗ ψ_i(l₁, l₂)
//! ```
//!
//! with one degree-2 cochain `ψ_i` per `m`-basis element of the base.

pub use crate::base::BaseMorphism;

use crate::algebra::{adjoint_representation, evaluate_bracket, HomLeibnizAlgebra};
use crate::base::{c1_base, LocalAlgebraBase};
use crate::cohomology::{apply_differential, is_equivariant, Cochain, CohomologyReport};
use crate::error::Error;
use crate::exactla::{solve_linear, vec_ops, Matrix, Rational};
use crate::Result;
use num_traits::Zero;

/// Coefficients of an element of `A ⊗ L` over the unital `A`-basis
/// `{1, m_1, ..., m_r}`: entry `p` is the `L`-coefficient vector of the
/// `p`-th `A`-basis element (entry 0 belongs to the unit).
pub type TensorCoefficients = Vec<Vec<Rational>>;

/// A deformation of a Hom-Leibniz algebra over a local base, stored by its
/// `ψ`-family (one degree-2 cochain per `m`-basis element).
#[derive(Debug, Clone, PartialEq)]
pub struct Deformation {
    algebra: HomLeibnizAlgebra,
    base: LocalAlgebraBase,
    psi: Vec<Cochain>,
}

impl Deformation {
    /// Builds a deformation after validating the algebra and all shapes.
    /// Whether the family satisfies the deformed Hom-Jacobi identity is
    /// reported by [`check_deformation`], not enforced here.
    pub fn new(
        algebra: HomLeibnizAlgebra,
        base: LocalAlgebraBase,
        psi: Vec<Cochain>,
    ) -> Result<Self> {
        if !crate::algebra::check_hom_jacobi(&algebra).is_empty()
            || !crate::algebra::check_multiplicative(&algebra)
        {
            return Err(Error::InvalidAlgebra(
                "deformations require a valid multiplicative Hom-Leibniz algebra".into(),
            ));
        }
        if psi.len() != base.m_dim() {
            return Err(Error::ShapeMismatch(format!(
                "expected one ψ per m-basis element ({}), got {}",
                base.m_dim(),
                psi.len()
            )));
        }
        for (i, p) in psi.iter().enumerate() {
            if p.degree() != 2 || p.alg_dim() != algebra.dim() || p.module_dim() != algebra.dim()
            {
                return Err(Error::ShapeMismatch(format!(
                    "ψ_{} must be a degree-2 cochain L²→L over dimension {}",
                    i + 1,
                    algebra.dim()
                )));
            }
        }
        Ok(Deformation {
            algebra,
            base,
            psi,
        })
    }

    /// The undeformed bracket viewed over `base` (all `ψ_i = 0`).
    pub fn trivial(algebra: HomLeibnizAlgebra, base: LocalAlgebraBase) -> Result<Self> {
        let dim = algebra.dim();
        let psi = (0..base.m_dim())
            .map(|_| Cochain::zero(2, dim, dim))
            .collect();
        Deformation::new(algebra, base, psi)
    }

    pub fn algebra(&self) -> &HomLeibnizAlgebra {
        &self.algebra
    }

    pub fn base(&self) -> &LocalAlgebraBase {
        &self.base
    }

    pub fn psi(&self) -> &[Cochain] {
        &self.psi
    }

    pub fn is_trivial(&self) -> bool {
        self.psi.iter().all(Cochain::is_zero)
    }
}

/// Per-`ψ_i` equivariance flags with respect to the adjoint twisting map.
/// Equivariance of the family is reported, not enforced: coboundary solves
/// under the example-table convention can produce non-equivariant members.
pub fn psi_equivariance(d: &Deformation) -> Result<Vec<bool>> {
    let rep = adjoint_representation(d.algebra())?;
    Ok(d.psi()
        .iter()
        .map(|p| is_equivariant(d.algebra(), &rep, p))
        .collect())
}

/// One failure of the deformed Hom-Jacobi identity: the basis triple it
/// occurred at, the `A`-basis coefficient it occurred in (0 = unit,
/// `p ≥ 1` = `m_p`), and the nonzero defect vector in `L`.
#[derive(Debug, Clone, PartialEq)]
pub struct DefectCertificate {
    pub triple: (usize, usize, usize),
    pub a_index: usize,
    pub a_label: String,
    pub defect: Vec<Rational>,
}

/// Products of unital `A`-basis elements: `table[p][q]` is the coefficient
/// vector (length `r + 1`) of `a_p · a_q` over `{1, m_1, ..., m_r}`.
fn unital_products(base: &LocalAlgebraBase) -> Vec<Vec<Vec<Rational>>> {
    let r = base.m_dim();
    let mut table = vec![vec![vec![Rational::zero(); r + 1]; r + 1]; r + 1];
    for p in 0..=r {
        for q in 0..=r {
            let entry = &mut table[p][q];
            match (p, q) {
                (0, 0) => entry[0] = crate::rint(1),
                (0, _) => entry[q] = crate::rint(1),
                (_, 0) => entry[p] = crate::rint(1),
                _ => {
                    for (k, c) in base.product_of_basis(p - 1, q - 1).iter().enumerate() {
                        if !c.is_zero() {
                            entry[k + 1] = c.clone();
                        }
                    }
                }
            }
        }
    }
    table
}

/// Multiplies a unital coefficient vector by the ideal generator `m_i`.
fn multiply_by_generator(
    base: &LocalAlgebraBase,
    u: &[Rational],
    i: usize,
) -> Vec<Rational> {
    let r = base.m_dim();
    let mut out = vec![Rational::zero(); r + 1];
    if !u[0].is_zero() {
        out[i + 1] = u[0].clone();
    }
    for (s, c) in u.iter().enumerate().skip(1) {
        if c.is_zero() {
            continue;
        }
        for (k, d) in base.product_of_basis(s - 1, i).iter().enumerate() {
            if !d.is_zero() {
                out[k + 1] += c * d;
            }
        }
    }
    out
}

/// The deformed bracket of two elements of `A ⊗ L` given in unital
/// coefficients.
pub fn lambda_bracket(
    d: &Deformation,
    x: &TensorCoefficients,
    y: &TensorCoefficients,
) -> Result<TensorCoefficients> {
    let r = d.base().m_dim();
    let dim = d.algebra().dim();
    if x.len() != r + 1 || y.len() != r + 1 {
        return Err(Error::ShapeMismatch(format!(
            "tensor coefficients need {} rows (unit + m-basis)",
            r + 1
        )));
    }
    let products = unital_products(d.base());
    let mut out: TensorCoefficients = vec![vec![Rational::zero(); dim]; r + 1];
    for (p, xp) in x.iter().enumerate() {
        if vec_ops::is_zero(xp) {
            continue;
        }
        for (q, yq) in y.iter().enumerate() {
            if vec_ops::is_zero(yq) {
                continue;
            }
            let aprod = &products[p][q];
            let bracket = evaluate_bracket(d.algebra(), xp, yq)?;
            if !vec_ops::is_zero(&bracket) {
                for (s, c) in aprod.iter().enumerate() {
                    if !c.is_zero() {
                        vec_ops::axpy(&mut out[s], c, &bracket);
                    }
                }
            }
            for (i, psi) in d.psi().iter().enumerate() {
                let val = psi.eval(&[xp, yq]);
                if vec_ops::is_zero(&val) {
                    continue;
                }
                let triple = multiply_by_generator(d.base(), aprod, i);
                for (s, c) in triple.iter().enumerate() {
                    if !c.is_zero() {
                        vec_ops::axpy(&mut out[s], c, &val);
                    }
                }
            }
        }
    }
    Ok(out)
}

fn basis_tensor(d: &Deformation, i: usize) -> TensorCoefficients {
    let r = d.base().m_dim();
    let dim = d.algebra().dim();
    let mut t = vec![vec![Rational::zero(); dim]; r + 1];
    t[0] = d.algebra().basis_vector(i);
    t
}

fn twist_tensor(d: &Deformation, x: &TensorCoefficients) -> TensorCoefficients {
    x.iter().map(|row| d.algebra().apply_alpha(row)).collect()
}

/// The Hom-Jacobi defect of the deformed bracket at the basis triple
/// `(e_a, e_b, e_c)`, as unital tensor coefficients:
/// `[αX, [Y,Z]_λ]_λ − [[X,Y]_λ, αZ]_λ + [[X,Z]_λ, αY]_λ`.
pub fn hom_jacobi_defect(
    d: &Deformation,
    a: usize,
    b: usize,
    c: usize,
) -> Result<TensorCoefficients> {
    let x = basis_tensor(d, a);
    let y = basis_tensor(d, b);
    let z = basis_tensor(d, c);
    let ax = twist_tensor(d, &x);
    let ay = twist_tensor(d, &y);
    let az = twist_tensor(d, &z);

    let yz = lambda_bracket(d, &y, &z)?;
    let xy = lambda_bracket(d, &x, &y)?;
    let xz = lambda_bracket(d, &x, &z)?;

    let t1 = lambda_bracket(d, &ax, &yz)?;
    let t2 = lambda_bracket(d, &xy, &az)?;
    let t3 = lambda_bracket(d, &xz, &ay)?;

    Ok(t1
        .iter()
        .zip(t2.iter().zip(t3.iter()))
        .map(|(u, (v, w))| vec_ops::add(&vec_ops::sub(u, v), w))
        .collect())
}

/// Evaluates the deformed Hom-Jacobi identity on every basis triple and
/// every `A`-basis coefficient; returns one certificate per violation.
/// Empty output means the family is a deformation over its base.
pub fn check_deformation(d: &Deformation) -> Result<Vec<DefectCertificate>> {
    let dim = d.algebra().dim();
    let mut certs = Vec::new();
    for a in 0..dim {
        for b in 0..dim {
            for c in 0..dim {
                let defect = hom_jacobi_defect(d, a, b, c)?;
                for (p, row) in defect.into_iter().enumerate() {
                    if !vec_ops::is_zero(&row) {
                        let a_label = if p == 0 {
                            "1".to_string()
                        } else {
                            d.base().labels()[p - 1].clone()
                        };
                        certs.push(DefectCertificate {
                            triple: (a, b, c),
                            a_index: p,
                            a_label,
                            defect: row,
                        });
                    }
                }
            }
        }
    }
    Ok(certs)
}

/// The cochain `ψ_{λ,ξ} = Σ_i ξ(m_i) ψ_i` attached to a functional on `m`.
/// For infinitesimal bases this is a 2-cocycle.
pub fn deformation_differential(d: &Deformation, xi: &[Rational]) -> Cochain {
    assert_eq!(xi.len(), d.base().m_dim(), "functional must live on m");
    let dim = d.algebra().dim();
    let mut out = Cochain::zero(2, dim, dim);
    for (c, psi) in xi.iter().zip(d.psi()) {
        if !c.is_zero() {
            out = out.add(&psi.scale(c));
        }
    }
    out
}

/// The universal infinitesimal deformation `η₁` over `C_1 = K ⊕ H'`: base
/// `c1_base(dim H²)` with `ψ_i` the canonical degree-2 class representatives.
pub fn universal_infinitesimal(
    alg: &HomLeibnizAlgebra,
    report: &CohomologyReport,
) -> Result<Deformation> {
    if report.degree != 2 {
        return Err(Error::InvalidAlgebra(format!(
            "universal infinitesimal deformation needs a degree-2 report, got degree {}",
            report.degree
        )));
    }
    let dim = alg.dim();
    if report
        .h_reps
        .iter()
        .any(|c| c.alg_dim() != dim || c.module_dim() != dim)
    {
        return Err(Error::InvalidAlgebra(
            "cohomology report does not match the algebra's dimension".into(),
        ));
    }
    let base = c1_base(report.h_dim());
    Deformation::new(alg.clone(), base, report.h_reps.clone())
}

/// Push-out of a deformation along a base morphism: over the target base,
/// `ψ'_j = Σ_i matrix[j][i] ψ_i`.
pub fn push_out(d: &Deformation, phi: &BaseMorphism) -> Result<Deformation> {
    if phi.source() != d.base() {
        return Err(Error::IncompatibleBases(
            "push-out requires the morphism source to be the deformation base".into(),
        ));
    }
    let dim = d.algebra().dim();
    let mut new_psi = Vec::with_capacity(phi.target().m_dim());
    for j in 0..phi.target().m_dim() {
        let mut acc = Cochain::zero(2, dim, dim);
        for (i, psi) in d.psi().iter().enumerate() {
            let c = phi.matrix().get(j, i);
            if !c.is_zero() {
                acc = acc.add(&psi.scale(c));
            }
        }
        new_psi.push(acc);
    }
    Deformation::new(d.algebra().clone(), phi.target().clone(), new_psi)
}

/// Classifies an infinitesimal deformation against the universal one: the
/// unique base morphism `φ: C_1 → d.base` with `push_out(η₁, φ)` equivalent
/// to `d` (each `ψ'_j − ψ_j` a coboundary under the report's convention).
pub fn classify_infinitesimal(
    d: &Deformation,
    report: &CohomologyReport,
) -> Result<BaseMorphism> {
    if !d.base().is_infinitesimal() {
        return Err(Error::NotInfinitesimal(
            "classification requires m² = 0 in the base".into(),
        ));
    }
    if report.degree != 2 {
        return Err(Error::InvalidAlgebra(format!(
            "classification needs a degree-2 report, got degree {}",
            report.degree
        )));
    }
    let rep = adjoint_representation(d.algebra())?;
    let dim = d.algebra().dim();
    let ambient = dim * dim * dim;
    let h = report.h_dim();

    // Columns: a basis of B followed by the class representatives; a ψ_j
    // decomposes as (coboundary) + (class coordinates) iff it lies in Z.
    let b_dim = report.b.dim();
    let mut cols: Vec<Vec<Rational>> = Vec::with_capacity(b_dim + h);
    cols.extend(report.b.basis().iter().cloned());
    cols.extend(report.h_reps.iter().map(|c| c.coeffs().to_vec()));
    let mut system = Matrix::zeros(ambient, cols.len());
    for (j, col) in cols.iter().enumerate() {
        for (i, v) in col.iter().enumerate() {
            if !v.is_zero() {
                system.set(i, j, v.clone());
            }
        }
    }

    let mut matrix = Matrix::zeros(d.base().m_dim(), h);
    for (j, psi) in d.psi().iter().enumerate() {
        let dpsi = apply_differential(d.algebra(), &rep, psi)?;
        if !dpsi.is_zero() {
            return Err(Error::NotADeformation(format!(
                "ψ_{} is not a 2-cocycle",
                j + 1
            )));
        }
        let sol = solve_linear(&system, psi.coeffs()).ok_or_else(|| {
            Error::NotADeformation(format!(
                "ψ_{} is not an equivariant cocycle class",
                j + 1
            ))
        })?;
        for i in 0..h {
            let c = sol[b_dim + i].clone();
            if !c.is_zero() {
                matrix.set(j, i, c);
            }
        }
    }
    BaseMorphism::new(c1_base(h), d.base().clone(), matrix)
}

/// Whether two infinitesimal deformations over the same base are equivalent:
/// each `ψ`-difference is a coboundary under the report's convention.
pub fn infinitesimally_equivalent(
    d1: &Deformation,
    d2: &Deformation,
    report: &CohomologyReport,
) -> Result<bool> {
    if d1.base() != d2.base() {
        return Err(Error::IncompatibleBases(
            "equivalence is defined over a common base".into(),
        ));
    }
    if !d1.base().is_infinitesimal() {
        return Err(Error::NotInfinitesimal(
            "equivalence testing is implemented for infinitesimal bases only".into(),
        ));
    }
    for (p1, p2) in d1.psi().iter().zip(d2.psi()) {
        let diff = p1.sub(p2);
        if !report.b.contains(diff.coeffs()) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::test_fixtures::{base_bracket, nilpotent_alpha};
    use crate::base::truncated_polynomial_base;
    use crate::cohomology::{cohomology_report, CoboundaryMode};
    use crate::{rat, rint};

    fn l0() -> HomLeibnizAlgebra {
        HomLeibnizAlgebra::new(3, base_bracket(), Matrix::identity(3)).unwrap()
    }

    fn l0_report() -> CohomologyReport {
        let alg = l0();
        let rep = adjoint_representation(&alg).unwrap();
        cohomology_report(&alg, &rep, 2, CoboundaryMode::Strict).unwrap()
    }

    #[test]
    fn trivial_family_has_no_defects() {
        let d = Deformation::trivial(l0(), truncated_polynomial_base(2)).unwrap();
        assert!(check_deformation(&d).unwrap().is_empty());
        assert!(d.is_trivial());
    }

    #[test]
    fn infinitesimal_cocycle_family_has_no_defects() {
        let report = l0_report();
        assert_eq!(report.h_dim(), 2);
        for rep_c in &report.h_reps {
            let d = Deformation::new(
                l0(),
                truncated_polynomial_base(1),
                vec![rep_c.clone()],
            )
            .unwrap();
            assert!(check_deformation(&d).unwrap().is_empty());
        }
    }

    #[test]
    fn non_cocycle_family_yields_certificates() {
        let mut bad = Cochain::zero(2, 3, 3);
        let p = bad.flat_pos(&[0, 0], 0);
        let mut coeffs = bad.coeffs().to_vec();
        coeffs[p] = rint(1);
        bad = Cochain::from_flat(2, 3, 3, coeffs).unwrap();
        let d = Deformation::new(l0(), truncated_polynomial_base(1), vec![bad]).unwrap();
        let certs = check_deformation(&d).unwrap();
        assert!(!certs.is_empty());
        // All defects appear in the m-part, never the unit coefficient.
        assert!(certs.iter().all(|c| c.a_index >= 1));
    }

    #[test]
    fn differential_is_linear_in_the_functional() {
        let report = l0_report();
        let eta1 = universal_infinitesimal(&l0(), &report).unwrap();
        let xi1 = vec![rint(1), rint(0)];
        let xi2 = vec![rint(0), rint(1)];
        let mix = vec![rat(2, 1), rat(-3, 1)];
        let psi1 = deformation_differential(&eta1, &xi1);
        let psi2 = deformation_differential(&eta1, &xi2);
        let mixed = deformation_differential(&eta1, &mix);
        assert_eq!(psi1, eta1.psi()[0]);
        assert_eq!(psi2, eta1.psi()[1]);
        assert_eq!(mixed, psi1.scale(&rint(2)).add(&psi2.scale(&rint(-3))));
        let rep = adjoint_representation(&l0()).unwrap();
        assert!(apply_differential(&l0(), &rep, &mixed).unwrap().is_zero());
    }

    #[test]
    fn universal_family_is_a_deformation() {
        let report = l0_report();
        let eta1 = universal_infinitesimal(&l0(), &report).unwrap();
        assert_eq!(eta1.base().m_dim(), 2);
        assert!(check_deformation(&eta1).unwrap().is_empty());
        assert!(psi_equivariance(&eta1).unwrap().iter().all(|&b| b));
    }

    #[test]
    fn push_out_identity_and_zero() {
        let report = l0_report();
        let eta1 = universal_infinitesimal(&l0(), &report).unwrap();
        let id = BaseMorphism::identity(eta1.base());
        assert_eq!(push_out(&eta1, &id).unwrap(), eta1);
        let target = truncated_polynomial_base(1);
        let zero = BaseMorphism::zero(eta1.base(), &target).unwrap();
        let trivial = push_out(&eta1, &zero).unwrap();
        assert!(trivial.is_trivial());
        assert_eq!(trivial.base(), &target);
    }

    #[test]
    fn push_out_is_functorial() {
        let report = l0_report();
        let eta1 = universal_infinitesimal(&l0(), &report).unwrap();
        let mid = crate::base::c1_base(3);
        let end = truncated_polynomial_base(1);
        let phi1 = BaseMorphism::new(
            eta1.base().clone(),
            mid.clone(),
            Matrix::from_rows(vec![
                vec![rint(1), rint(2)],
                vec![rint(0), rat(1, 3)],
                vec![rint(-1), rint(0)],
            ])
            .unwrap(),
        )
        .unwrap();
        let phi2 = BaseMorphism::new(
            mid,
            end,
            Matrix::from_rows(vec![vec![rint(1), rint(-2), rint(5)]]).unwrap(),
        )
        .unwrap();
        let composed = phi1.compose(&phi2).unwrap();
        assert_eq!(
            push_out(&push_out(&eta1, &phi1).unwrap(), &phi2).unwrap(),
            push_out(&eta1, &composed).unwrap()
        );
    }

    #[test]
    fn push_out_rejects_wrong_source() {
        let report = l0_report();
        let eta1 = universal_infinitesimal(&l0(), &report).unwrap();
        let other = truncated_polynomial_base(3);
        let phi = BaseMorphism::identity(&other);
        assert!(matches!(
            push_out(&eta1, &phi),
            Err(Error::IncompatibleBases(_))
        ));
    }

    #[test]
    fn classification_round_trips_push_outs() {
        let report = l0_report();
        let eta1 = universal_infinitesimal(&l0(), &report).unwrap();
        let target = truncated_polynomial_base(1);
        let phi = BaseMorphism::new(
            eta1.base().clone(),
            target,
            Matrix::from_rows(vec![vec![rat(2, 3), rint(-4)]]).unwrap(),
        )
        .unwrap();
        let d = push_out(&eta1, &phi).unwrap();
        let recovered = classify_infinitesimal(&d, &report).unwrap();
        assert_eq!(recovered.matrix(), phi.matrix());
    }

    #[test]
    fn classification_ignores_coboundaries() {
        let report = l0_report();
        let alg = l0();
        let rep = adjoint_representation(&alg).unwrap();
        // ψ = μ₁ + δf for a one-cochain f.
        let mut f_coeffs = vec![Rational::zero(); 9];
        f_coeffs[0] = rint(1);
        f_coeffs[5] = rat(1, 2);
        let f = Cochain::from_flat(1, 3, 3, f_coeffs).unwrap();
        let df = apply_differential(&alg, &rep, &f).unwrap();
        let shifted = report.h_reps[0].add(&df);
        let base = truncated_polynomial_base(1);
        let d_plain =
            Deformation::new(alg.clone(), base.clone(), vec![report.h_reps[0].clone()]).unwrap();
        let d_shifted = Deformation::new(alg.clone(), base, vec![shifted]).unwrap();
        let m1 = classify_infinitesimal(&d_plain, &report).unwrap();
        let m2 = classify_infinitesimal(&d_shifted, &report).unwrap();
        assert_eq!(m1.matrix(), m2.matrix());
        assert!(infinitesimally_equivalent(&d_plain, &d_shifted, &report).unwrap());
    }

    #[test]
    fn classification_rejects_non_infinitesimal_bases() {
        let report = l0_report();
        let d = Deformation::trivial(l0(), truncated_polynomial_base(2)).unwrap();
        assert!(matches!(
            classify_infinitesimal(&d, &report),
            Err(Error::NotInfinitesimal(_))
        ));
    }

    #[test]
    fn classification_rejects_non_cocycles() {
        let report = l0_report();
        let mut coeffs = vec![Rational::zero(); 27];
        coeffs[0] = rint(1);
        let bad = Cochain::from_flat(2, 3, 3, coeffs).unwrap();
        let d =
            Deformation::new(l0(), truncated_polynomial_base(1), vec![bad]).unwrap();
        assert!(matches!(
            classify_infinitesimal(&d, &report),
            Err(Error::NotADeformation(_))
        ));
    }

    #[test]
    fn lambda_bracket_reduces_to_plain_bracket() {
        // With all ψ = 0 the unit coefficient carries the original bracket.
        let alg = HomLeibnizAlgebra::new(3, base_bracket(), nilpotent_alpha(1, 2)).unwrap();
        let d = Deformation::trivial(alg.clone(), truncated_polynomial_base(1)).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let x = basis_tensor(&d, i);
                let y = basis_tensor(&d, j);
                let b = lambda_bracket(&d, &x, &y).unwrap();
                assert_eq!(&b[0], alg.bracket_basis(i, j));
                assert!(vec_ops::is_zero(&b[1]));
            }
        }
    }
}
