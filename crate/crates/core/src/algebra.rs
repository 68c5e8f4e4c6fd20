//! Hom-Leibniz algebras by structure constants, representations, axiom
//! verification, and the Yau twist.
//!
//! An algebra is a triple `(L, [.,.], alpha)` where the bracket is stored as
//! the tensor `c[i][j][k]` (coefficient of `e_k` in `[e_i, e_j]`, 0-based)
//! and `alpha` as a square matrix whose column `j` is `alpha(e_j)`. Validity
//! means the Hom-Jacobi identity
//!
//! ```text
//! [alpha(x), [y, z]] = [[x, y], alpha(z)] - [[x, z], alpha(y)]
//! ```
//!
//! on all basis triples plus multiplicativity `alpha[x,y] = [alpha x, alpha y]`.

use crate::error::Error;
use crate::exactla::{vec_ops, Matrix, Rational};
use crate::Result;
use num_traits::Zero;

/// A finite-dimensional Hom-Leibniz algebra over the rationals.
///
/// Constructed via [`HomLeibnizAlgebra::new`] (validating) or
/// [`HomLeibnizAlgebra::new_unchecked`] (for deliberately invalid inputs in
/// tests and for the obstruction machinery's candidate brackets).
#[derive(Debug, Clone, PartialEq)]
pub struct HomLeibnizAlgebra {
    dim: usize,
    /// c[i][j][k]: coefficient of e_k in [e_i, e_j].
    c: Vec<Vec<Vec<Rational>>>,
    /// Column j is alpha(e_j).
    alpha: Matrix<Rational>,
}

impl HomLeibnizAlgebra {
    /// Validating constructor: checks shapes, the Hom-Jacobi identity, and
    /// multiplicativity of `alpha`.
    pub fn new(dim: usize, c: Vec<Vec<Vec<Rational>>>, alpha: Matrix<Rational>) -> Result<Self> {
        let alg = Self::new_unchecked(dim, c, alpha)?;
        let violations = check_hom_jacobi(&alg);
        if let Some((i, j, k, d)) = violations.first() {
            return Err(Error::InvalidAlgebra(format!(
                "Hom-Jacobi fails at basis triple ({}, {}, {}): defect {}",
                i + 1,
                j + 1,
                k + 1,
                format_vector(d)
            )));
        }
        if !check_multiplicative(&alg) {
            return Err(Error::InvalidAlgebra(
                "alpha is not multiplicative for the given bracket".into(),
            ));
        }
        Ok(alg)
    }

    /// Shape-checked constructor that skips the algebra axioms.
    pub fn new_unchecked(
        dim: usize,
        c: Vec<Vec<Vec<Rational>>>,
        alpha: Matrix<Rational>,
    ) -> Result<Self> {
        if c.len() != dim || c.iter().any(|r| r.len() != dim || r.iter().any(|v| v.len() != dim))
        {
            return Err(Error::ShapeMismatch(format!(
                "bracket tensor must be {dim}x{dim}x{dim}"
            )));
        }
        if alpha.rows() != dim || alpha.cols() != dim {
            return Err(Error::ShapeMismatch(format!(
                "alpha must be {dim}x{dim}, got {}x{}",
                alpha.rows(),
                alpha.cols()
            )));
        }
        Ok(HomLeibnizAlgebra { dim, c, alpha })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn alpha(&self) -> &Matrix<Rational> {
        &self.alpha
    }

    /// Structure constants of `[e_i, e_j]`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[Rational] {
        &self.c[i][j]
    }

    /// The full structure-constant tensor.
    pub fn structure_constants(&self) -> &Vec<Vec<Vec<Rational>>> {
        &self.c
    }

    /// Standard basis vector `e_i` (0-based).
    pub fn basis_vector(&self, i: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim];
        v[i] = crate::rint(1);
        v
    }

    /// `alpha` applied to a vector.
    pub fn apply_alpha(&self, v: &[Rational]) -> Vec<Rational> {
        self.alpha.mat_vec(v).expect("dimension checked")
    }

    /// `alpha^p` as a matrix (`p = 0` gives the identity).
    pub fn alpha_power(&self, p: usize) -> Matrix<Rational> {
        let mut m = Matrix::identity(self.dim);
        for _ in 0..p {
            m = self.alpha.mul(&m).expect("square");
        }
        m
    }
}

/// Bilinear extension of the structure constants to arbitrary vectors.
pub fn evaluate_bracket(
    alg: &HomLeibnizAlgebra,
    x: &[Rational],
    y: &[Rational],
) -> Result<Vec<Rational>> {
    if x.len() != alg.dim || y.len() != alg.dim {
        return Err(Error::DimensionMismatch(format!(
            "bracket arguments must have length {}",
            alg.dim
        )));
    }
    let mut out = vec![Rational::zero(); alg.dim];
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for (j, yj) in y.iter().enumerate() {
            if yj.is_zero() {
                continue;
            }
            let coeff = xi * yj;
            vec_ops::axpy(&mut out, &coeff, &alg.c[i][j]);
        }
    }
    Ok(out)
}

/// Exhaustive Hom-Jacobi check on basis triples.
///
/// Returns the violating triples `(i, j, k)` (0-based) with the defect
/// vector `[alpha(e_i),[e_j,e_k]] - [[e_i,e_j],alpha(e_k)] + [[e_i,e_k],alpha(e_j)]`.
pub fn check_hom_jacobi(alg: &HomLeibnizAlgebra) -> Vec<(usize, usize, usize, Vec<Rational>)> {
    let n = alg.dim;
    let mut out = Vec::new();
    for i in 0..n {
        let ai = alg.apply_alpha(&alg.basis_vector(i));
        for j in 0..n {
            let aj = alg.apply_alpha(&alg.basis_vector(j));
            for k in 0..n {
                let ak = alg.apply_alpha(&alg.basis_vector(k));
                let t1 = evaluate_bracket(alg, &ai, &alg.c[j][k]).expect("sized");
                let t2 = evaluate_bracket(alg, &alg.c[i][j], &ak).expect("sized");
                let t3 = evaluate_bracket(alg, &alg.c[i][k], &aj).expect("sized");
                let defect = vec_ops::add(&vec_ops::sub(&t1, &t2), &t3);
                if !vec_ops::is_zero(&defect) {
                    out.push((i, j, k, defect));
                }
            }
        }
    }
    out
}

/// True iff `alpha[e_i, e_j] = [alpha(e_i), alpha(e_j)]` for all pairs.
pub fn check_multiplicative(alg: &HomLeibnizAlgebra) -> bool {
    let n = alg.dim;
    for i in 0..n {
        let ai = alg.apply_alpha(&alg.basis_vector(i));
        for j in 0..n {
            let aj = alg.apply_alpha(&alg.basis_vector(j));
            let lhs = alg.apply_alpha(&alg.c[i][j]);
            let rhs = evaluate_bracket(alg, &ai, &aj).expect("sized");
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// A bimodule over a Hom-Leibniz algebra: a twisting map `A` on the module
/// together with left `[l, m]` and right `[m, l]` actions.
#[derive(Debug, Clone, PartialEq)]
pub struct Representation {
    module_dim: usize,
    /// The twisting map on the module.
    a: Matrix<Rational>,
    /// left[i][j][k]: coefficient of the module basis vector k in [e_i, m_j].
    left: Vec<Vec<Vec<Rational>>>,
    /// right[i][j][k]: coefficient of the module basis vector k in [m_i, e_j].
    right: Vec<Vec<Vec<Rational>>>,
}

impl Representation {
    pub fn new(
        module_dim: usize,
        a: Matrix<Rational>,
        left: Vec<Vec<Vec<Rational>>>,
        right: Vec<Vec<Vec<Rational>>>,
    ) -> Result<Self> {
        if a.rows() != module_dim || a.cols() != module_dim {
            return Err(Error::ShapeMismatch("representation map A".into()));
        }
        Ok(Representation {
            module_dim,
            a,
            left,
            right,
        })
    }

    pub fn module_dim(&self) -> usize {
        self.module_dim
    }

    pub fn twisting_map(&self) -> &Matrix<Rational> {
        &self.a
    }

    /// Left action `[x, m]` for an algebra vector `x` and module vector `m`.
    pub fn act_left(&self, x: &[Rational], m: &[Rational]) -> Vec<Rational> {
        bilinear(&self.left, x, m, self.module_dim)
    }

    /// Right action `[m, x]` for a module vector `m` and algebra vector `x`.
    pub fn act_right(&self, m: &[Rational], x: &[Rational]) -> Vec<Rational> {
        bilinear(&self.right, m, x, self.module_dim)
    }

    /// The twisting map applied to a module vector.
    pub fn apply_a(&self, m: &[Rational]) -> Vec<Rational> {
        self.a.mat_vec(m).expect("dimension checked")
    }

    /// `A^p` as a matrix.
    pub fn a_power(&self, p: usize) -> Matrix<Rational> {
        let mut m = Matrix::identity(self.module_dim);
        for _ in 0..p {
            m = self.a.mul(&m).expect("square");
        }
        m
    }
}

fn bilinear(
    t: &[Vec<Vec<Rational>>],
    x: &[Rational],
    y: &[Rational],
    out_dim: usize,
) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); out_dim];
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for (j, yj) in y.iter().enumerate() {
            if yj.is_zero() {
                continue;
            }
            let coeff = xi * yj;
            vec_ops::axpy(&mut out, &coeff, &t[i][j]);
        }
    }
    out
}

/// The adjoint representation: module `L` itself, twisting map `alpha`,
/// both actions given by the bracket.
///
/// Fails with `InvalidAlgebra` when the input is not a valid multiplicative
/// Hom-Leibniz algebra or the resulting actions do not verify as a
/// representation (never expected for valid input; verified, not assumed).
pub fn adjoint_representation(alg: &HomLeibnizAlgebra) -> Result<Representation> {
    if !check_hom_jacobi(alg).is_empty() || !check_multiplicative(alg) {
        return Err(Error::InvalidAlgebra(
            "adjoint representation requires a valid multiplicative algebra".into(),
        ));
    }
    let rep = Representation::new(
        alg.dim,
        alg.alpha.clone(),
        alg.c.clone(),
        alg.c.clone(),
    )?;
    if !check_representation(alg, &rep) {
        return Err(Error::InvalidAlgebra(
            "adjoint actions failed representation verification".into(),
        ));
    }
    Ok(rep)
}

/// Verifies the representation conditions on basis elements:
/// `[alpha(l), A(m)] = A[l, m]`, `[A(m), alpha(l)] = A[m, l]`, and the
/// mixed Hom-Jacobi identity with the module entry in each of the three
/// argument positions.
pub fn check_representation(alg: &HomLeibnizAlgebra, rep: &Representation) -> bool {
    let n = alg.dim;
    let md = rep.module_dim;
    let module_basis = |i: usize| -> Vec<Rational> {
        let mut v = vec![Rational::zero(); md];
        v[i] = crate::rint(1);
        v
    };
    // Equivariance of the two actions.
    for l in 0..n {
        let al = alg.apply_alpha(&alg.basis_vector(l));
        for m in 0..md {
            let mv = module_basis(m);
            let am = rep.apply_a(&mv);
            let lhs = rep.act_left(&al, &am);
            let rhs = rep.apply_a(&rep.act_left(&alg.basis_vector(l), &mv));
            if lhs != rhs {
                return false;
            }
            let lhs = rep.act_right(&am, &al);
            let rhs = rep.apply_a(&rep.act_right(&mv, &alg.basis_vector(l)));
            if lhs != rhs {
                return false;
            }
        }
    }
    // Mixed Hom-Jacobi: module entry in position 1, 2, or 3 of
    // [alpha(x), [y, z]] = [[x, y], alpha(z)] - [[x, z], alpha(y)].
    for m in 0..md {
        let mv = module_basis(m);
        let am = rep.apply_a(&mv);
        for j in 0..n {
            let ej = alg.basis_vector(j);
            let aj = alg.apply_alpha(&ej);
            for k in 0..n {
                let ek = alg.basis_vector(k);
                let ak = alg.apply_alpha(&ek);

                // x = m: [A m, [y,z]] = [[m,y], alpha z] - [[m,z], alpha y]
                let lhs = rep.act_right(&am, &alg.c[j][k]);
                let rhs = vec_ops::sub(
                    &rep.act_right(&rep.act_right(&mv, &ej), &ak),
                    &rep.act_right(&rep.act_right(&mv, &ek), &aj),
                );
                if lhs != rhs {
                    return false;
                }

                // y = m: [alpha x, [m,z]] = [[x,m], alpha z] - [[x,z], A m]
                let lhs = rep.act_left(&aj, &rep.act_right(&mv, &ek));
                let rhs = vec_ops::sub(
                    &rep.act_right(&rep.act_left(&ej, &mv), &ak),
                    &rep.act_left(&alg.c[j][k], &am),
                );
                if lhs != rhs {
                    return false;
                }

                // z = m: [alpha x, [y,m]] = [[x,y], A m] - [[x,m], alpha y]
                let lhs = rep.act_left(&aj, &rep.act_left(&ek, &mv));
                let rhs = vec_ops::sub(
                    &rep.act_left(&alg.c[j][k], &am),
                    &rep.act_right(&rep.act_left(&ej, &mv), &ak),
                );
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}

/// Yau twist: same `alpha`, bracket replaced by `alpha` composed with the
/// bracket. The result is validated as a multiplicative Hom-Leibniz algebra.
pub fn yau_twist(alg: &HomLeibnizAlgebra) -> Result<HomLeibnizAlgebra> {
    if !check_hom_jacobi(alg).is_empty() || !check_multiplicative(alg) {
        return Err(Error::InvalidAlgebra(
            "yau_twist requires a valid multiplicative algebra".into(),
        ));
    }
    let n = alg.dim;
    let mut c = vec![vec![vec![Rational::zero(); n]; n]; n];
    for i in 0..n {
        for j in 0..n {
            c[i][j] = alg.apply_alpha(&alg.c[i][j]);
        }
    }
    HomLeibnizAlgebra::new(n, c, alg.alpha.clone())
}

fn format_vector(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

/// Structure constants for the bracket `[e_i, e_j] = value` pairs (0-based).
pub fn constants_from_pairs(
    dim: usize,
    pairs: &[((usize, usize), Vec<Rational>)],
) -> Vec<Vec<Vec<Rational>>> {
    let mut c = vec![vec![vec![Rational::zero(); dim]; dim]; dim];
    for ((i, j), v) in pairs {
        c[*i][*j] = v.clone();
    }
    c
}

/// Shared fixtures for the in-crate test modules.
#[cfg(test)]
pub(crate) mod test_fixtures {
    use super::*;
    use crate::rint;

    /// The bracket [e1,e3] = e2, [e3,e3] = e1 on a 3-dim space.
    pub(crate) fn base_bracket() -> Vec<Vec<Vec<Rational>>> {
        constants_from_pairs(
            3,
            &[
                ((0, 2), vec![rint(0), rint(1), rint(0)]),
                ((2, 2), vec![rint(1), rint(0), rint(0)]),
            ],
        )
    }

    /// alpha(e1) = alpha(e2) = 0, alpha(e3) = a e1 + b e2.
    pub(crate) fn nilpotent_alpha(a: i64, b: i64) -> Matrix<Rational> {
        Matrix::from_rows(vec![
            vec![rint(0), rint(0), rint(a)],
            vec![rint(0), rint(0), rint(b)],
            vec![rint(0), rint(0), rint(0)],
        ])
        .unwrap()
    }

    /// alpha(e1) = e1 + a e2, alpha(e2) = e2, alpha(e3) = a e1 + b e2 + e3.
    pub(crate) fn unipotent_alpha(a: i64, b: i64) -> Matrix<Rational> {
        Matrix::from_rows(vec![
            vec![rint(1), rint(0), rint(a)],
            vec![rint(a), rint(1), rint(b)],
            vec![rint(0), rint(0), rint(1)],
        ])
        .unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::test_fixtures::{base_bracket, nilpotent_alpha, unipotent_alpha};
    use super::*;
    use crate::{rat, rint};

    #[test]
    fn bracket_evaluation_is_bilinear() {
        let alg = HomLeibnizAlgebra::new(3, base_bracket(), nilpotent_alpha(1, 0)).unwrap();
        let e1 = alg.basis_vector(0);
        let e2 = alg.basis_vector(1);
        let e3 = alg.basis_vector(2);
        assert_eq!(evaluate_bracket(&alg, &e1, &e3).unwrap(), e2);
        assert!(vec_ops::is_zero(&evaluate_bracket(&alg, &e2, &e2).unwrap()));
        let x = vec_ops::add(&e1, &e3);
        assert_eq!(
            evaluate_bracket(&alg, &x, &e3).unwrap(),
            vec_ops::add(&e1, &e2)
        );
    }

    #[test]
    fn zero_bracket_identity_alpha_is_valid() {
        let c = vec![vec![vec![Rational::zero(); 2]; 2]; 2];
        let alg = HomLeibnizAlgebra::new(2, c, Matrix::identity(2)).unwrap();
        assert!(check_hom_jacobi(&alg).is_empty());
        assert!(check_multiplicative(&alg));
    }

    #[test]
    fn nilpotent_alpha_instance_is_valid() {
        let alg = HomLeibnizAlgebra::new(3, base_bracket(), nilpotent_alpha(1, 0)).unwrap();
        assert!(check_hom_jacobi(&alg).is_empty());
    }

    #[test]
    fn scaled_alpha_is_rejected() {
        let alpha = Matrix::from_rows(vec![
            vec![rint(1), rint(0), rint(0)],
            vec![rint(0), rint(1), rint(0)],
            vec![rint(0), rint(0), rint(2)],
        ])
        .unwrap();
        let err = HomLeibnizAlgebra::new(3, base_bracket(), alpha);
        assert!(matches!(err, Err(Error::InvalidAlgebra(_))));
    }

    #[test]
    fn parametric_family_is_multiplicative() {
        // alpha(e1) = c^2 e1 + a c e2, alpha(e2) = c^3 e2,
        // alpha(e3) = a e1 + b e2 + c e3 at (a,b,c) = (1,1,1).
        let alpha = Matrix::from_rows(vec![
            vec![rint(1), rint(0), rint(1)],
            vec![rint(1), rint(1), rint(1)],
            vec![rint(0), rint(0), rint(1)],
        ])
        .unwrap();
        let alg = HomLeibnizAlgebra::new(3, base_bracket(), alpha).unwrap();
        assert!(check_multiplicative(&alg));
        // Perturbing alpha(e2) to e1 breaks multiplicativity.
        let bad = Matrix::from_rows(vec![
            vec![rint(1), rint(1), rint(1)],
            vec![rint(1), rint(0), rint(1)],
            vec![rint(0), rint(0), rint(1)],
        ])
        .unwrap();
        let bad_alg = HomLeibnizAlgebra::new_unchecked(3, base_bracket(), bad).unwrap();
        assert!(!check_multiplicative(&bad_alg));
    }

    #[test]
    fn adjoint_passes_representation_check() {
        let alg = HomLeibnizAlgebra::new(3, base_bracket(), nilpotent_alpha(1, 0)).unwrap();
        let rep = adjoint_representation(&alg).unwrap();
        assert!(check_representation(&alg, &rep));
        assert_eq!(rep.module_dim(), 3);
        assert_eq!(rep.twisting_map(), alg.alpha());
    }

    #[test]
    fn doubled_twisting_map_fails_representation_check() {
        let alg = HomLeibnizAlgebra::new(3, base_bracket(), unipotent_alpha(1, 0)).unwrap();
        let adj = adjoint_representation(&alg).unwrap();
        let doubled = Representation::new(
            3,
            Matrix::from_rows(
                (0..3)
                    .map(|r| {
                        (0..3)
                            .map(|c| alg.alpha().get(r, c) * rint(2))
                            .collect::<Vec<_>>()
                    })
                    .collect(),
            )
            .unwrap(),
            adj.left.clone(),
            adj.right.clone(),
        )
        .unwrap();
        assert!(!check_representation(&alg, &doubled));
    }

    #[test]
    fn yau_twist_matches_hand_expansion() {
        let alg = HomLeibnizAlgebra::new(3, base_bracket(), unipotent_alpha(1, 0)).unwrap();
        let twisted = yau_twist(&alg).unwrap();
        // [e1,e3]' = alpha(e2) = e2; [e3,e3]' = alpha(e1) = e1 + a e2 with a=1.
        assert_eq!(
            twisted.bracket_basis(0, 2),
            &[rint(0), rint(1), rint(0)][..]
        );
        assert_eq!(
            twisted.bracket_basis(2, 2),
            &[rint(1), rint(1), rint(0)][..]
        );
        assert!(check_hom_jacobi(&twisted).is_empty());
        assert!(check_multiplicative(&twisted));
    }

    #[test]
    fn yau_twist_with_identity_is_noop() {
        let c = base_bracket();
        let alg = HomLeibnizAlgebra::new(3, c.clone(), Matrix::identity(3)).unwrap();
        let twisted = yau_twist(&alg).unwrap();
        assert_eq!(twisted.structure_constants(), &c);
    }

    #[test]
    fn rational_entries_survive_alpha_powers() {
        let alpha = Matrix::from_rows(vec![
            vec![rat(1, 4), rint(0), rat(1, 2)],
            vec![rat(1, 4), rat(1, 8), rint(1)],
            vec![rint(0), rint(0), rat(1, 2)],
        ])
        .unwrap();
        let alg = HomLeibnizAlgebra::new(3, base_bracket(), alpha).unwrap();
        let a2 = alg.alpha_power(2);
        let a1 = alg.alpha_power(1);
        assert_eq!(a1.mul(&a1).unwrap(), a2);
        assert_eq!(alg.alpha_power(0), Matrix::identity(3));
    }
}
