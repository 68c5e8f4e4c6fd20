//! Obstruction theory: quadratic (Massey-square) terms of `ψ`-families, the
//! Maurer–Cartan residual, order-by-order extension of one-parameter
//! deformations, obstruction classes of 1-dimensional base extensions, and
//! the first versal extension step `C_1 → C_2`.
//!
//! The deformation equation used throughout is `δψ + Q-sum = 0`: the
//! quadratic sum runs over ordered pairs of `m`-basis indices, which absorbs
//! the usual factor ½ because a commutative product reaches each unordered
//! pair twice.

use crate::algebra::{adjoint_representation, HomLeibnizAlgebra, Representation};
use crate::base::{
    extend_by_cocycle, harrison_h2, BaseExtension, HarrisonTwoCocycle, LocalAlgebraBase,
};
use crate::base::BaseMorphism;
use crate::cohomology::{
    apply_differential, differential_matrix, equivariant_cochain_basis, multi_indices,
    CoboundaryMode, Cochain, CohomologyReport,
};
use crate::deformation::{
    check_deformation, deformation_differential, push_out, Deformation,
};
use crate::error::Error;
use crate::exactla::{kernel_basis, solve_linear, vec_ops, Matrix, Rational};
use crate::Result;
use num_traits::Zero;

/// The quadratic pairing of two degree-2 cochains (`ψ_i` inner, `ψ_j` outer):
///
/// ```text
/// Q(ψ_i, ψ_j)(l₁, l₂, l₃) = ψ_j(α(l₁), ψ_i(l₂, l₃))
///                         − ψ_j(ψ_i(l₁, l₂), α(l₃))
///                         + ψ_j(ψ_i(l₁, l₃), α(l₂))
/// ```
pub fn quadratic_term(
    alg: &HomLeibnizAlgebra,
    psi_i: &Cochain,
    psi_j: &Cochain,
) -> Result<Cochain> {
    let d = alg.dim();
    for (name, c) in [("first", psi_i), ("second", psi_j)] {
        if c.degree() != 2 || c.alg_dim() != d || c.module_dim() != d {
            return Err(Error::DimensionMismatch(format!(
                "{name} argument must be a degree-2 cochain L²→L over dimension {d}"
            )));
        }
    }
    let alpha_cols: Vec<Vec<Rational>> = (0..d)
        .map(|i| alg.apply_alpha(&alg.basis_vector(i)))
        .collect();
    let mut out = Cochain::zero(3, d, d);
    let mut coeffs = out.coeffs().to_vec();
    for t in multi_indices(d, 3) {
        let (l1, l2, l3) = (t[0], t[1], t[2]);
        let inner23 = psi_i.value_at_basis(&[l2, l3]);
        let t1 = psi_j.eval(&[&alpha_cols[l1], inner23]);
        let inner12 = psi_i.value_at_basis(&[l1, l2]);
        let t2 = psi_j.eval(&[inner12, &alpha_cols[l3]]);
        let inner13 = psi_i.value_at_basis(&[l1, l3]);
        let t3 = psi_j.eval(&[inner13, &alpha_cols[l2]]);
        let total = vec_ops::add(&vec_ops::sub(&t1, &t2), &t3);
        if !vec_ops::is_zero(&total) {
            let base = out.flat_pos(&t, 0);
            for (k, v) in total.into_iter().enumerate() {
                coeffs[base + k] = v;
            }
        }
    }
    out = Cochain::from_flat(3, d, d, coeffs)?;
    Ok(out)
}

/// The Maurer–Cartan residual of a deformation at a functional `φ` on `m`:
///
/// ```text
/// residual(φ) = δψ_{λ,φ} + Σ_{i,j} φ(m_i · m_j) Q(ψ_i, ψ_j)
/// ```
///
/// The deformed bracket satisfies Hom-Jacobi iff the residual vanishes for
/// every functional in a dual basis of `m` (equivalent to an empty
/// [`check_deformation`] output).
pub fn deformation_residual(d: &Deformation, phi: &[Rational]) -> Result<Cochain> {
    if phi.len() != d.base().m_dim() {
        return Err(Error::ShapeMismatch(format!(
            "functional must have length {}, got {}",
            d.base().m_dim(),
            phi.len()
        )));
    }
    let alg = d.algebra();
    let rep = adjoint_representation(alg)?;
    let psi_phi = deformation_differential(d, phi);
    let mut out = apply_differential(alg, &rep, &psi_phi)?;
    let comult = d.base().comultiplication(phi);
    for (i, row) in comult.iter().enumerate() {
        for (j, c) in row.iter().enumerate() {
            if !c.is_zero() {
                let q = quadratic_term(alg, &d.psi()[i], &d.psi()[j])?;
                out = out.add(&q.scale(c));
            }
        }
    }
    Ok(out)
}

/// A degree-3 obstruction cocycle together with its cohomology class.
#[derive(Debug, Clone, PartialEq)]
pub struct ObstructionClass {
    /// The obstruction cochain itself; always closed and equivariant.
    pub cocycle: Cochain,
    /// Coordinates in the report's H³ representative basis.
    pub class_vector: Vec<Rational>,
    /// Whether the cocycle is a coboundary under the report's convention.
    pub is_zero: bool,
}

/// Computes the H³ class of a closed equivariant degree-3 cochain against a
/// degree-3 cohomology report. Fails with `ObstructionNotClosed` when the
/// cochain lies outside Z³ (not closed, or closed but not equivariant) —
/// that happens exactly when a non-equivariant `ψ`-family has carried the
/// obstruction outside the equivariant theory.
pub fn obstruction_class_from_cocycle(
    alg: &HomLeibnizAlgebra,
    rep: &Representation,
    h3_report: &CohomologyReport,
    cocycle: Cochain,
) -> Result<ObstructionClass> {
    if h3_report.degree != 3 {
        return Err(Error::ShapeMismatch(format!(
            "expected a degree-3 report, got degree {}",
            h3_report.degree
        )));
    }
    let dcheck = apply_differential(alg, rep, &cocycle)?;
    if !dcheck.is_zero() {
        return Err(Error::ObstructionNotClosed(
            "the obstruction cochain is not closed (δ of it is nonzero); the ψ-family has \
             left the equivariant complex where the obstruction calculus is valid"
                .into(),
        ));
    }
    if !h3_report.z.contains(cocycle.coeffs()) {
        return Err(Error::ObstructionNotClosed(
            "the obstruction cochain is closed but not equivariant, so it has no class in \
             the equivariant cohomology"
                .into(),
        ));
    }
    // Z = B ⊕ span(H-reps) by construction, so this solve always succeeds.
    let b_dim = h3_report.b.dim();
    let h = h3_report.h_dim();
    let ambient = cocycle.coeffs().len();
    let mut system = Matrix::zeros(ambient, b_dim + h);
    let mut cols: Vec<&[Rational]> = Vec::with_capacity(b_dim + h);
    cols.extend(h3_report.b.basis().iter().map(|v| v.as_slice()));
    cols.extend(h3_report.h_reps.iter().map(|c| c.coeffs()));
    for (j, col) in cols.iter().enumerate() {
        for (i, v) in col.iter().enumerate() {
            if !v.is_zero() {
                system.set(i, j, v.clone());
            }
        }
    }
    let sol = solve_linear(&system, cocycle.coeffs()).ok_or_else(|| {
        Error::ObstructionNotClosed(
            "internal decomposition of a Z³ element failed; report data is inconsistent".into(),
        )
    })?;
    let class_vector: Vec<Rational> = sol[b_dim..].to_vec();
    let is_zero = class_vector.iter().all(Zero::is_zero);
    Ok(ObstructionClass {
        cocycle,
        class_vector,
        is_zero,
    })
}

/// Solves `δχ = target` for a degree-2 cochain `χ` under the given
/// coboundary convention; `None` when no solution exists in that space.
/// The returned solution is the canonical minimal-support one.
pub fn solve_coboundary(
    alg: &HomLeibnizAlgebra,
    rep: &Representation,
    mode: CoboundaryMode,
    target: &Cochain,
) -> Result<Option<Cochain>> {
    let d = alg.dim();
    let md = rep.module_dim();
    match mode {
        CoboundaryMode::Strict => {
            let eq2 = equivariant_cochain_basis(alg, rep, 2)?;
            let basis = eq2.basis().basis();
            let rows = target.coeffs().len();
            let mut system = Matrix::zeros(rows, basis.len());
            for (j, v) in basis.iter().enumerate() {
                let phi = Cochain::from_flat(2, d, md, v.clone())?;
                let dphi = apply_differential(alg, rep, &phi)?;
                for (i, x) in dphi.coeffs().iter().enumerate() {
                    if !x.is_zero() {
                        system.set(i, j, x.clone());
                    }
                }
            }
            let Some(sol) = solve_linear(&system, target.coeffs()) else {
                return Ok(None);
            };
            let mut flat = vec![Rational::zero(); d * d * md];
            for (c, v) in sol.iter().zip(basis) {
                if !c.is_zero() {
                    vec_ops::axpy(&mut flat, c, v);
                }
            }
            Ok(Some(Cochain::from_flat(2, d, md, flat)?))
        }
        CoboundaryMode::PaperExample => {
            let m = differential_matrix(alg, rep, 2)?;
            let Some(sol) = solve_linear(&m, target.coeffs()) else {
                return Ok(None);
            };
            Ok(Some(Cochain::from_flat(2, d, md, sol)?))
        }
    }
}

/// Outcome of one extension step of a one-parameter deformation.
#[derive(Debug, Clone, PartialEq)]
pub enum OneParameterOutcome {
    /// The canonical `ψ_{k+1}` extending the family one order further.
    Extended(Cochain),
    /// The nonzero obstruction class blocking the extension.
    Obstructed(ObstructionClass),
}

/// Tries to extend a one-parameter deformation `ψ_1, ..., ψ_k` over
/// `K[t]/(t^{k+1})` by one more order: computes
/// `R = Σ_{i+j=k+1} Q(ψ_i, ψ_j)` and solves `δχ = −R` under the report's
/// coboundary convention.
pub fn extend_one_parameter(
    alg: &HomLeibnizAlgebra,
    h3_report: &CohomologyReport,
    psi: &[Cochain],
) -> Result<OneParameterOutcome> {
    if psi.is_empty() {
        return Err(Error::ShapeMismatch(
            "a one-parameter family needs at least ψ_1".into(),
        ));
    }
    let k = psi.len();
    let base = crate::base::truncated_polynomial_base(k);
    let d = Deformation::new(alg.clone(), base, psi.to_vec())?;
    let certs = check_deformation(&d)?;
    if let Some(c) = certs.first() {
        return Err(Error::NotADeformation(format!(
            "input family fails at order {} on basis triple ({}, {}, {})",
            c.a_label,
            c.triple.0 + 1,
            c.triple.1 + 1,
            c.triple.2 + 1
        )));
    }
    let rep = adjoint_representation(alg)?;

    let dim = alg.dim();
    let mut r_cochain = Cochain::zero(3, dim, dim);
    for i in 1..=k {
        let j = k + 1 - i;
        if (1..=k).contains(&j) {
            r_cochain = r_cochain.add(&quadratic_term(alg, &psi[i - 1], &psi[j - 1])?);
        }
    }

    let neg = r_cochain.scale(&crate::rint(-1));
    if let Some(chi) = solve_coboundary(alg, &rep, h3_report.mode, &neg)? {
        return Ok(OneParameterOutcome::Extended(chi));
    }
    let class = obstruction_class_from_cocycle(alg, &rep, h3_report, r_cochain)?;
    if class.is_zero {
        return Err(Error::ObstructedEverywhere(
            "the obstruction class is zero but no coboundary solution was found; \
             the report and solver disagree"
                .into(),
        ));
    }
    Ok(OneParameterOutcome::Obstructed(class))
}

/// The obstruction cochain `φ̄` of a 1-dimensional base extension: lifts the
/// deformed bracket to the extended base with the new `ψ`-slot set to `chi`,
/// evaluates the Hom-Jacobi defect on basis triples, and reads off the
/// coefficient of the new base direction.
fn obstruction_cochain_with_lift(
    d: &Deformation,
    ext: &BaseExtension,
    chi: &Cochain,
) -> Result<Cochain> {
    let alg = d.algebra();
    let dim = alg.dim();
    let r = d.base().m_dim();
    if ext.projection.target() != d.base() || ext.extended.m_dim() != r + 1 {
        return Err(Error::IncompatibleExtension(
            "the extension does not extend the deformation's base by one dimension".into(),
        ));
    }
    let mut psi_tilde = d.psi().to_vec();
    psi_tilde.push(chi.clone());
    let lifted = Deformation::new(alg.clone(), ext.extended.clone(), psi_tilde)?;
    let mut bar = Cochain::zero(3, dim, dim);
    let mut coeffs = bar.coeffs().to_vec();
    for t in multi_indices(dim, 3) {
        let defect = crate::deformation::hom_jacobi_defect(&lifted, t[0], t[1], t[2])?;
        // Unital index r+1 is the new direction n_{r+1}.
        let row = &defect[r + 1];
        if !vec_ops::is_zero(row) {
            let base_pos = bar.flat_pos(&t, 0);
            for (k, v) in row.iter().enumerate() {
                coeffs[base_pos + k] = v.clone();
            }
        }
    }
    bar = Cochain::from_flat(3, dim, dim, coeffs)?;
    Ok(bar)
}

/// The obstruction class `θ_λ([f])` of extending a deformation along a
/// 1-dimensional base extension, computed with the lift term `χ = 0`.
pub fn obstruction_class(
    d: &Deformation,
    ext: &BaseExtension,
    h3_report: &CohomologyReport,
) -> Result<ObstructionClass> {
    let zero = Cochain::zero(2, d.algebra().dim(), d.algebra().dim());
    obstruction_class_with_lift(d, ext, h3_report, &zero)
}

/// As [`obstruction_class`] but with an explicit lift term `χ`; the class is
/// independent of `χ` (the cocycles differ by `δχ`).
pub fn obstruction_class_with_lift(
    d: &Deformation,
    ext: &BaseExtension,
    h3_report: &CohomologyReport,
    chi: &Cochain,
) -> Result<ObstructionClass> {
    let certs = check_deformation(d)?;
    if !certs.is_empty() {
        return Err(Error::NotADeformation(
            "obstruction classes are defined for valid deformations only".into(),
        ));
    }
    let bar = obstruction_cochain_with_lift(d, ext, chi)?;
    let rep = adjoint_representation(d.algebra())?;
    obstruction_class_from_cocycle(d.algebra(), &rep, h3_report, bar)
}

/// The symmetrized Massey pairing of a `ψ`-family against a Harrison
/// 2-cochain: `Σ_{i,j} f(m_i, m_j) (Q(ψ_i, ψ_j) + Q(ψ_j, ψ_i))`. As classes,
/// this equals twice the obstruction class of the extension along `f`.
pub fn massey_square_pairing(
    alg: &HomLeibnizAlgebra,
    psi: &[Cochain],
    f: &HarrisonTwoCocycle,
) -> Result<Cochain> {
    if f.m_dim() != psi.len() {
        return Err(Error::ShapeMismatch(format!(
            "pairing needs one ψ per m-basis element ({}), got {}",
            f.m_dim(),
            psi.len()
        )));
    }
    let dim = alg.dim();
    let mut out = Cochain::zero(3, dim, dim);
    for i in 0..psi.len() {
        for j in 0..psi.len() {
            let c = f.value(i, j);
            if c.is_zero() {
                continue;
            }
            let q_ij = quadratic_term(alg, &psi[i], &psi[j])?;
            let q_ji = quadratic_term(alg, &psi[j], &psi[i])?;
            out = out.add(&q_ij.add(&q_ji).scale(c));
        }
    }
    Ok(out)
}

/// Result of one versal extension step `C_k → C_{k+1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct VersalStepResult {
    /// `C_{k+1}`: the input base extended by the dual of `ker(w_k)`.
    pub next_base: LocalAlgebraBase,
    /// `η_{k+1}` over `next_base`.
    pub next_deformation: Deformation,
    /// Harrison representatives spanning `ker(w_k)` (combinations of the
    /// class basis).
    pub kernel_classes: Vec<HarrisonTwoCocycle>,
    /// One obstruction class per Harrison H² class representative.
    pub obstruction_table: Vec<(HarrisonTwoCocycle, ObstructionClass)>,
    /// The projection `C_{k+1} → C_k`.
    pub projection: BaseMorphism,
    /// Columns are the `m`-coordinates of the new base directions
    /// (the inclusion of `(ker w_k)'` into `C_{k+1}`).
    pub inclusion: Matrix<Rational>,
}

/// One versal extension step. Validated and guaranteed for `k = 1`
/// (infinitesimal input base); anything else is rejected as unsupported.
///
/// Computes Harrison H² of the base, one obstruction class per class
/// representative (assembling the map `w_k`), the kernel of `w_k`, the
/// extended base `C_{k+1}` (iterated 1-dimensional extensions over a kernel
/// basis), and the extended deformation `η_{k+1}` obtained by solving the
/// coboundary equation for each new direction.
pub fn versal_step(
    alg: &HomLeibnizAlgebra,
    h2_report: &CohomologyReport,
    h3_report: &CohomologyReport,
    d: &Deformation,
) -> Result<VersalStepResult> {
    if h2_report.degree != 2 || h3_report.degree != 3 {
        return Err(Error::ShapeMismatch(
            "versal step needs degree-2 and degree-3 cohomology reports".into(),
        ));
    }
    if h2_report.mode != h3_report.mode {
        return Err(Error::ShapeMismatch(
            "the two cohomology reports must use the same coboundary mode".into(),
        ));
    }
    if d.algebra() != alg {
        return Err(Error::ShapeMismatch(
            "the deformation is not over the given algebra".into(),
        ));
    }
    if !d.base().is_infinitesimal() {
        return Err(Error::UnsupportedBase(
            "only the first versal step (from an infinitesimal base, k = 1) is validated \
             and supported"
                .into(),
        ));
    }
    let certs = check_deformation(d)?;
    if !certs.is_empty() {
        return Err(Error::NotADeformation(
            "versal step requires a valid deformation".into(),
        ));
    }
    let rep = adjoint_representation(alg)?;
    let mode = h3_report.mode;

    let harrison = harrison_h2(d.base())?;
    let q = harrison.h_dim();

    // One obstruction class per Harrison class representative.
    let mut obstruction_table = Vec::with_capacity(q);
    for f in &harrison.h_reps {
        let ext = extend_by_cocycle(d.base(), f)?;
        let bar = obstruction_cochain_with_lift(d, &ext, &Cochain::zero(2, alg.dim(), alg.dim()))?;
        let class = obstruction_class_from_cocycle(alg, &rep, h3_report, bar)?;
        obstruction_table.push((f.clone(), class));
    }

    // w_k: H²_Harr → H³(L, L), columns indexed by Harrison classes.
    let h3_dim = h3_report.h_dim();
    let mut w = Matrix::zeros(h3_dim, q);
    for (j, (_, class)) in obstruction_table.iter().enumerate() {
        for (i, v) in class.class_vector.iter().enumerate() {
            if !v.is_zero() {
                w.set(i, j, v.clone());
            }
        }
    }
    let kernel = kernel_basis(&w);

    // Kernel directions as Harrison cocycles (combinations of the reps).
    let r = d.base().m_dim();
    let mut kernel_classes = Vec::with_capacity(kernel.dim());
    for kv in kernel.basis() {
        let mut flat = vec![Rational::zero(); r * r];
        for (j, c) in kv.iter().enumerate() {
            if !c.is_zero() {
                vec_ops::axpy(&mut flat, c, &harrison.h_reps[j].to_flat());
            }
        }
        kernel_classes.push(HarrisonTwoCocycle::from_flat(r, &flat)?);
    }

    // C_{k+1}: iterated 1-dim extensions; earlier cocycles are zero-padded
    // to the grown base (the new directions multiply to zero).
    let mut next_base = d.base().clone();
    for f in kernel_classes.iter() {
        let cur = next_base.m_dim();
        let mut padded = vec![vec![Rational::zero(); cur]; cur];
        for i in 0..r {
            for j in 0..r {
                padded[i][j] = f.value(i, j).clone();
            }
        }
        let fp = HarrisonTwoCocycle::new(cur, padded)?;
        let ext = extend_by_cocycle(&next_base, &fp)?;
        next_base = ext.extended;
    }

    // η_{k+1}: lift the ψ-family and solve δχ_s = −(obstruction cocycle of
    // the s-th kernel direction). Solvability is exactly membership of the
    // kernel, so a failure here is an internal inconsistency.
    let mut psi_next = d.psi().to_vec();
    for (s, kv) in kernel.basis().iter().enumerate() {
        let dim = alg.dim();
        let mut bar = Cochain::zero(3, dim, dim);
        for (j, c) in kv.iter().enumerate() {
            if !c.is_zero() {
                bar = bar.add(&obstruction_table[j].1.cocycle.scale(c));
            }
        }
        let neg = bar.scale(&crate::rint(-1));
        let chi = solve_coboundary(alg, &rep, mode, &neg)?.ok_or_else(|| {
            Error::ObstructedEverywhere(format!(
                "kernel direction {} has zero obstruction class but no coboundary solution",
                s + 1
            ))
        })?;
        psi_next.push(chi);
    }
    let next_deformation = Deformation::new(alg.clone(), next_base.clone(), psi_next)?;

    // Structure maps and closed-loop verification.
    let p = kernel.dim();
    let mut proj = Matrix::zeros(r, r + p);
    for i in 0..r {
        proj.set(i, i, crate::rint(1));
    }
    let projection = BaseMorphism::new(next_base.clone(), d.base().clone(), proj)?;
    let mut inclusion = Matrix::zeros(r + p, p);
    for s in 0..p {
        inclusion.set(r + s, s, crate::rint(1));
    }

    let verify = check_deformation(&next_deformation)?;
    if !verify.is_empty() {
        return Err(Error::ObstructedEverywhere(
            "extended deformation fails its own defect check; internal inconsistency".into(),
        ));
    }
    let back = push_out(&next_deformation, &projection)?;
    if &back != d {
        return Err(Error::ObstructedEverywhere(
            "push-out along the projection does not recover the input deformation".into(),
        ));
    }
    // p ∘ i = 0 structurally.
    debug_assert!(projection
        .matrix()
        .mul(&inclusion)
        .map(|m| m.is_zero())
        .unwrap_or(false));

    Ok(VersalStepResult {
        next_base,
        next_deformation,
        kernel_classes,
        obstruction_table,
        projection,
        inclusion,
    })
}
